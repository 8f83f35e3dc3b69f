//! Filtered complexes as ordered simplex lists and their barcodes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::chain::Chain;
use super::complex::{Simplex, SimplicialComplex};
use super::field::Field;
use super::linalg::ColumnReduction;
use super::HomalgError;
use crate::value::{Ext, Value};

/// Simplices sorted by (value, dimension, vertex tuple).
#[derive(Debug, Clone)]
pub struct Filtration {
    entries: Vec<(Simplex, Value)>,
}

impl Filtration {
    pub fn new(k: &SimplicialComplex, value_of: impl Fn(&Simplex) -> Value) -> Result<Self, HomalgError> {
        let values: HashMap<&Simplex, Value> = k.iter().map(|s| (s, value_of(s))).collect();
        for s in k.iter() {
            for (_, face) in s.boundary_faces() {
                let fv = &values[&face];
                if fv > &values[s] {
                    return Err(HomalgError::NonMonotone {
                        simplex: s.vertices().to_vec(),
                        face: face.vertices().to_vec(),
                        face_value: fv.clone(),
                        simplex_value: values[s].clone(),
                    });
                }
            }
        }
        let mut entries: Vec<(Simplex, Value)> = k.iter().map(|s| (s.clone(), values[s].clone())).collect();
        entries.sort_by(|(a, va), (b, vb)| va.cmp(vb).then(a.dim().cmp(&b.dim())).then_with(|| a.cmp(b)));
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(Simplex, Value)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted distinct values.
    pub fn grid(&self) -> Vec<Value> {
        let mut g: Vec<Value> = self.entries.iter().map(|e| e.1.clone()).collect();
        g.dedup();
        g
    }
}

/// A half-open interval `[birth, death)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "crate::value::exact")]
    pub birth: Value,
    pub death: Ext,
}

impl Interval {
    pub fn new(birth: Value, death: Ext) -> Self {
        debug_assert!(Ext::Finite(birth.clone()) <= death);
        Self { birth, death }
    }

    pub fn essential(birth: Value) -> Self {
        Self { birth, death: Ext::Infinite }
    }

    /// Whether the class born at `birth` is alive on all of `[s, t]`.
    pub fn spans(&self, s: &Value, t: &Value) -> bool {
        &self.birth <= s && Ext::Finite(t.clone()) < self.death
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barcode {
    pub dims: Vec<Vec<Interval>>,
}

impl Barcode {
    pub fn new(max_dim: usize) -> Self {
        Self { dims: vec![Vec::new(); max_dim + 1] }
    }

    pub fn intervals(&self, dim: usize) -> &[Interval] {
        self.dims.get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn push(&mut self, dim: usize, iv: Interval) {
        if self.dims.len() <= dim {
            self.dims.resize(dim + 1, Vec::new());
        }
        self.dims[dim].push(iv);
    }

    pub fn sort(&mut self) {
        for d in &mut self.dims {
            d.sort();
        }
    }

    /// Number of intervals in `dim` spanning `[s, t]`.
    pub fn rank_between(&self, dim: usize, s: &Value, t: &Value) -> usize {
        self.intervals(dim).iter().filter(|iv| iv.spans(s, t)).count()
    }
}

/// Barcodes up to `max_dim` by the standard column reduction.
pub fn persistent_homology<F: Field>(f: &F, filt: &Filtration, max_dim: usize) -> Barcode {
    let entries: Vec<&(Simplex, Value)> = filt.entries.iter().filter(|(s, _)| s.dim() <= max_dim + 1).collect();
    let pos: HashMap<&Simplex, usize> = entries.iter().enumerate().map(|(i, (s, _))| (s, i)).collect();
    let cols = entries
        .iter()
        .map(|(s, _)| {
            let mut col: Vec<(usize, F::Elem)> = Chain::simplex(f, s.clone())
                .boundary(f)
                .terms()
                .map(|(face, v)| (pos[face], v.clone()))
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect();
    let red = ColumnReduction::new(f, entries.len(), cols);
    let mut barcode = Barcode::new(max_dim);
    let mut killed = vec![false; entries.len()];
    for j in 0..entries.len() {
        if let Some(i) = red.low(j) {
            killed[i] = true;
            let (si, vi) = entries[i];
            let vj = &entries[j].1;
            if vi < vj {
                barcode.push(si.dim(), Interval::new(vi.clone(), Ext::Finite(vj.clone())));
            }
        }
    }
    for (j, (s, v)) in entries.iter().enumerate() {
        if s.dim() <= max_dim && !red.is_pivot(j) && !killed[j] {
            barcode.push(s.dim(), Interval::essential(v.clone()));
        }
    }
    barcode.sort();
    barcode
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::field::PrimeField;
    use crate::value::int;

    fn lower_star(k: &SimplicialComplex, fv: &[i64]) -> Filtration {
        Filtration::new(k, |s| int(s.vertices().iter().map(|&v| fv[v as usize]).max().unwrap())).unwrap()
    }

    #[test]
    fn hollow_triangle_barcode() {
        let k = SimplicialComplex::from_lists(&[&[0, 1], &[1, 2], &[0, 2]]).unwrap();
        let bc = persistent_homology(&PrimeField::f2(), &lower_star(&k, &[0, 1, 2]), 1);
        assert_eq!(bc.intervals(0), &[Interval::essential(int(0))]);
        assert_eq!(bc.intervals(1), &[Interval::essential(int(2))]);
    }

    #[test]
    fn edge_merges_components() {
        let k = SimplicialComplex::from_lists(&[&[0, 1]]).unwrap();
        let filt = Filtration::new(&k, |s| int(if s.dim() == 1 { 1 } else { 0 })).unwrap();
        let bc = persistent_homology(&PrimeField::f2(), &filt, 0);
        assert_eq!(bc.intervals(0), &[Interval::new(int(0), Ext::Finite(int(1))), Interval::essential(int(0))]);
    }

    #[test]
    fn single_vertex() {
        let k = SimplicialComplex::from_lists(&[&[0]]).unwrap();
        let bc = persistent_homology(&PrimeField::f2(), &lower_star(&k, &[5]), 2);
        assert_eq!(bc.intervals(0), &[Interval::essential(int(5))]);
        assert!(bc.intervals(1).is_empty());
    }

    #[test]
    fn rejects_non_monotone() {
        let k = SimplicialComplex::from_lists(&[&[0, 1]]).unwrap();
        let err = Filtration::new(&k, |s| int(if s.dim() == 1 { 0 } else { 1 })).unwrap_err();
        assert!(matches!(err, HomalgError::NonMonotone { .. }));
    }
}
