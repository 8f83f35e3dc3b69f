//! Sparse chains of sorted simplices and generator-indexed chain maps.

use std::collections::{BTreeMap, BTreeSet};

use super::complex::{Simplex, SimplicialComplex, Vertex};
use super::field::Field;
use super::linalg::SparseVec;
use super::HomalgError;

/// A formal sum of `degree`-simplices. Orientation is absorbed into the
/// coefficient, and zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain<E> {
    pub degree: usize,
    terms: BTreeMap<Simplex, E>,
}

impl<E: Clone + PartialEq> Chain<E> {
    pub fn zero(degree: usize) -> Self {
        Self { degree, terms: BTreeMap::new() }
    }

    pub fn simplex<F: Field<Elem = E>>(f: &F, s: Simplex) -> Self {
        let mut c = Self::zero(s.dim());
        c.terms.insert(s, f.one());
        c
    }

    /// `coeff * [v_0, ..., v_n]` for an oriented tuple; zero if a vertex repeats.
    pub fn from_oriented<F: Field<Elem = E>>(f: &F, tuple: &[Vertex], coeff: E) -> Self {
        let degree = tuple.len().saturating_sub(1);
        let mut c = Self::zero(degree);
        if let Some((s, odd)) = Simplex::orient(tuple) {
            let v = if odd { f.neg(&coeff) } else { coeff };
            c.add_term(f, s, v);
        }
        c
    }

    pub fn from_terms<F: Field<Elem = E>>(f: &F, degree: usize, terms: impl IntoIterator<Item = (Simplex, E)>) -> Self {
        let mut c = Self::zero(degree);
        for (s, v) in terms {
            c.add_term(f, s, v);
        }
        c
    }

    pub fn add_term<F: Field<Elem = E>>(&mut self, f: &F, s: Simplex, v: E) {
        debug_assert_eq!(s.dim(), self.degree, "chain term of wrong dimension");
        if f.is_zero(&v) {
            return;
        }
        match self.terms.get_mut(&s) {
            Some(existing) => {
                let sum = f.add(existing, &v);
                if f.is_zero(&sum) {
                    self.terms.remove(&s);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(s, v);
            }
        }
    }

    /// `self += a * other`.
    pub fn add_scaled<F: Field<Elem = E>>(&mut self, f: &F, a: &E, other: &Self) {
        if other.is_zero() || f.is_zero(a) {
            return;
        }
        debug_assert_eq!(self.degree, other.degree, "adding chains of different degree");
        for (s, v) in &other.terms {
            self.add_term(f, s.clone(), f.mul(a, v));
        }
    }

    pub fn plus<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut c = self.clone();
        if c.is_zero() {
            c.degree = other.degree;
        }
        c.add_scaled(f, &f.one(), other);
        c
    }

    pub fn minus<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        let mut c = self.clone();
        if c.is_zero() {
            c.degree = other.degree;
        }
        c.add_scaled(f, &f.neg(&f.one()), other);
        c
    }

    pub fn scaled<F: Field<Elem = E>>(&self, f: &F, a: &E) -> Self {
        let mut c = Self::zero(self.degree);
        c.add_scaled(f, a, self);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &E)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Simplex) -> Option<&E> {
        self.terms.get(s)
    }

    /// Alternating-sum boundary. The boundary of a 0-chain is the zero chain.
    pub fn boundary<F: Field<Elem = E>>(&self, f: &F) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        if self.degree == 0 {
            return out;
        }
        for (s, v) in &self.terms {
            for (odd, face) in s.boundary_faces() {
                let c = if odd { f.neg(v) } else { v.clone() };
                out.add_term(f, face, c);
            }
        }
        out
    }

    /// Sum of coefficients of a 0-chain.
    pub fn augmentation<F: Field<Elem = E>>(&self, f: &F) -> E {
        self.terms.values().fold(f.zero(), |acc, v| f.add(&acc, v))
    }

    pub fn support(&self) -> BTreeSet<Vertex> {
        self.terms.keys().flat_map(|s| s.vertices().iter().copied()).collect()
    }

    pub fn is_supported_in(&self, k: &SimplicialComplex) -> bool {
        self.terms.keys().all(|s| k.contains(s))
    }

    pub fn to_sparse(&self, k: &SimplicialComplex) -> Result<SparseVec<E>, HomalgError> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (s, v) in &self.terms {
            let i = k.index_of(s).ok_or_else(|| HomalgError::NotInComplex(s.vertices().to_vec()))?;
            out.push((i, v.clone()));
        }
        out.sort_by_key(|e| e.0);
        Ok(out)
    }

    pub fn from_sparse<F: Field<Elem = E>>(f: &F, k: &SimplicialComplex, degree: usize, v: &[(usize, E)]) -> Self {
        let gens = k.simplices(degree);
        Self::from_terms(f, degree, v.iter().map(|(i, e)| (gens[*i].clone(), e.clone())))
    }

    /// Terms rendered for diagnostics.
    pub fn describe(&self) -> Vec<(Vec<Vertex>, String)>
    where
        E: std::fmt::Debug,
    {
        self.terms.iter().map(|(s, v)| (s.vertices().to_vec(), format!("{v:?}"))).collect()
    }
}

/// Whether a map preserves degree or raises it by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Chain,
    Homotopy,
}

impl MapKind {
    pub fn shift(self) -> usize {
        match self {
            MapKind::Chain => 0,
            MapKind::Homotopy => 1,
        }
    }
}

/// A linear map given by the images of generators.
#[derive(Debug, Clone)]
pub struct ChainMap<E> {
    pub kind: MapKind,
    pub source: String,
    pub target: String,
    images: BTreeMap<Simplex, Chain<E>>,
}

impl<E: Clone + PartialEq> ChainMap<E> {
    pub fn new(kind: MapKind, source: impl Into<String>, target: impl Into<String>) -> Self {
        Self { kind, source: source.into(), target: target.into(), images: BTreeMap::new() }
    }

    pub fn set(&mut self, generator: Simplex, image: Chain<E>) {
        self.images.insert(generator, image);
    }

    pub fn image(&self, generator: &Simplex) -> Option<&Chain<E>> {
        self.images.get(generator)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Simplex> {
        self.images.keys()
    }

    pub fn images(&self) -> impl Iterator<Item = (&Simplex, &Chain<E>)> {
        self.images.iter()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, c: &Chain<E>) -> Result<Chain<E>, HomalgError> {
        let mut out = Chain::zero(c.degree + self.kind.shift());
        for (s, v) in c.terms() {
            let img = self.images.get(s).ok_or_else(|| HomalgError::MissingGenerator(s.vertices().to_vec()))?;
            out.add_scaled(f, v, img);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::field::PrimeField;

    #[test]
    fn boundary_squares_to_zero() {
        let f = PrimeField::new(7).unwrap();
        let c = Chain::from_oriented(&f, &[3, 1, 4, 0], 2);
        assert!(c.boundary(&f).boundary(&f).is_zero());
    }

    #[test]
    fn orientation_absorbed() {
        let f = PrimeField::new(5).unwrap();
        let a = Chain::from_oriented(&f, &[1, 0], 1);
        let b = Chain::from_oriented(&f, &[0, 1], 1);
        assert!(a.plus(&f, &b).is_zero());
        assert!(Chain::from_oriented(&f, &[2, 2], 1).is_zero());
    }

    #[test]
    fn boundary_of_edge() {
        let f = PrimeField::new(5).unwrap();
        let e = Chain::from_oriented(&f, &[0, 1], 1);
        let b = e.boundary(&f);
        assert_eq!(b.coefficient(&Simplex::vertex(1)), Some(&1));
        assert_eq!(b.coefficient(&Simplex::vertex(0)), Some(&4));
        assert_eq!(b.augmentation(&f), 0);
    }
}
