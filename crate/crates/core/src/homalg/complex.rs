//! Abstract simplicial complexes on integer vertex ids.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::HomalgError;

pub type Vertex = u32;

/// A simplex as a strictly increasing vertex tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self, HomalgError> {
        if vertices.is_empty() {
            return Err(HomalgError::EmptySimplex);
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(HomalgError::RepeatedVertex(vertices));
        }
        Ok(Self(vertices))
    }

    pub fn vertex(v: Vertex) -> Self {
        Self(vec![v])
    }

    /// Sorts an oriented tuple. Returns the simplex and whether the sorting
    /// permutation is odd, or `None` if a vertex repeats.
    pub fn orient(tuple: &[Vertex]) -> Option<(Self, bool)> {
        let mut v = tuple.to_vec();
        let mut odd = false;
        // Insertion sort to count transpositions; tuples are short.
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if v.is_empty() || v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Self(v), odd))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Codimension-one faces with the sign parity of the alternating sum.
    pub fn boundary_faces(&self) -> Vec<(bool, Simplex)> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|k| {
                let mut f = self.0.clone();
                f.remove(k);
                (k % 2 == 1, Simplex(f))
            })
            .collect()
    }

    /// All nonempty faces, including the simplex itself.
    pub fn all_faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| Simplex((0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.0[i]).collect()))
            .collect()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn is_within(&self, set: &BTreeSet<Vertex>) -> bool {
        self.0.iter().all(|v| set.contains(v))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A face-closed set of simplices, stored per dimension in insertion order.
#[derive(Debug, Clone, Default)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.is_subcomplex_of(other)
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    fn insert(&mut self, s: Simplex) -> bool {
        let d = s.dim();
        while self.by_dim.len() <= d {
            self.by_dim.push(Vec::new());
            self.index.push(HashMap::new());
        }
        if self.index[d].contains_key(&s) {
            return false;
        }
        self.index[d].insert(s.clone(), self.by_dim[d].len());
        self.by_dim[d].push(s);
        true
    }

    /// Builds a complex from a list that must already be closed under faces.
    pub fn new(simplices: impl IntoIterator<Item = Simplex>) -> Result<Self, HomalgError> {
        let mut k = Self::empty();
        for s in simplices {
            k.insert(s);
        }
        for s in k.iter() {
            for (_, face) in s.boundary_faces() {
                if !k.contains(&face) {
                    return Err(HomalgError::NotFaceClosed {
                        simplex: s.vertices().to_vec(),
                        face: face.vertices().to_vec(),
                    });
                }
            }
        }
        Ok(k)
    }

    /// The smallest complex containing the given simplices.
    pub fn closure(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        let mut k = Self::empty();
        for s in simplices {
            if k.contains(&s) {
                continue;
            }
            let mut faces = s.all_faces();
            faces.sort_by_key(|f| f.dim());
            for f in faces {
                k.insert(f);
            }
        }
        k
    }

    /// Convenience constructor from raw vertex lists, taking the closure.
    pub fn from_lists(lists: &[&[Vertex]]) -> Result<Self, HomalgError> {
        let simplices = lists.iter().map(|l| Simplex::new(l.to_vec())).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::closure(simplices))
    }

    pub fn dim(&self) -> Option<usize> {
        self.by_dim.iter().rposition(|v| !v.is_empty())
    }

    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn simplices(&self, d: usize) -> &[Simplex] {
        self.by_dim.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices(d).len()
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s.dim())?.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.simplices(0).iter().map(|s| s.vertices()[0]).collect()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.contains(&Simplex::vertex(v))
    }

    /// Simplices all of whose vertices lie in `set`.
    pub fn full_subcomplex(&self, set: &BTreeSet<Vertex>) -> Self {
        let mut k = Self::empty();
        for s in self.iter() {
            if s.is_within(set) {
                k.insert(s.clone());
            }
        }
        k
    }

    /// Simplices satisfying a predicate that is inherited by faces.
    pub fn filter(&self, keep: impl Fn(&Simplex) -> bool) -> Self {
        let mut k = Self::empty();
        for s in self.iter() {
            if keep(s) {
                k.insert(s.clone());
            }
        }
        k
    }

    pub fn skeleton(&self, d: usize) -> Self {
        self.filter(|s| s.dim() <= d)
    }

    pub fn is_subcomplex_of(&self, other: &Self) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        for s in self.iter() {
            for (_, f) in s.boundary_faces() {
                if let Some(i) = self.index_of(&f) {
                    covered.insert(&self.by_dim[f.dim()][i]);
                }
            }
        }
        let mut out: Vec<Simplex> = self.iter().filter(|s| !covered.contains(s)).cloned().collect();
        out.sort();
        out
    }

    /// Vertices of simplices containing `v`.
    pub fn star_vertices(&self, v: Vertex) -> BTreeSet<Vertex> {
        let mut out = BTreeSet::new();
        for s in self.iter() {
            if s.contains(v) {
                out.extend(s.vertices().iter().copied());
            }
        }
        out
    }

    /// Every simplex as a sorted list, for serialization and comparison.
    pub fn sorted_simplices(&self) -> Vec<Simplex> {
        let mut v: Vec<Simplex> = self.iter().cloned().collect();
        v.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_parity() {
        let (s, odd) = Simplex::orient(&[2, 0, 1]).unwrap();
        assert_eq!(s.vertices(), &[0, 1, 2]);
        assert!(!odd);
        let (_, odd) = Simplex::orient(&[1, 0, 2]).unwrap();
        assert!(odd);
        assert!(Simplex::orient(&[1, 1]).is_none());
    }

    #[test]
    fn rejects_missing_faces() {
        let e = Simplex::new(vec![0, 1]).unwrap();
        let err = SimplicialComplex::new(vec![Simplex::vertex(0), e]).unwrap_err();
        assert!(matches!(err, HomalgError::NotFaceClosed { .. }));
    }

    #[test]
    fn closure_and_maximal() {
        let k = SimplicialComplex::from_lists(&[&[0, 1, 2], &[2, 3]]).unwrap();
        assert_eq!(k.len(), 7 + 2);
        assert_eq!(k.maximal_simplices().len(), 2);
        let sub = k.full_subcomplex(&[0, 1, 3].into_iter().collect());
        assert_eq!(sub.len(), 4);
        assert!(sub.is_subcomplex_of(&k));
        assert_eq!(k.star_vertices(3), [2, 3].into_iter().collect());
    }
}
