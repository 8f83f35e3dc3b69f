//! Vietoris complexes of covers, the projection between them and the
//! comparison map from simplicial chains.

use std::collections::HashMap;

use itertools::Itertools;

use crate::homalg::{Chain, ChainMap, Field, MapKind, Simplex, SimplicialComplex, Vertex};
use crate::spaces::{is_refinement, Cover, SpacesError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VietorisError {
    #[error(transparent)]
    Spaces(#[from] SpacesError),
    #[error("simplex {0:?} is not contained in any cover member")]
    Unsupported(Vec<Vertex>),
    #[error("simplex {0:?} exceeds the skeleton bound {1}")]
    AboveSkeleton(Vec<Vertex>, usize),
    #[error("cover at {0} does not refine the cover at {1}")]
    NotRefinement(String, String),
    #[error("skeleton bounds differ: {0} and {1}")]
    SkeletonMismatch(usize, usize),
}

/// The `d`-skeleton of the Vietoris complex of a cover. Each simplex
/// records the first member containing it.
#[derive(Debug, Clone)]
pub struct VietorisComplex {
    pub cover: Cover,
    pub d: usize,
    complex: SimplicialComplex,
    witness: HashMap<Simplex, usize>,
}

pub fn vietoris_complex(alpha: &Cover, d: usize) -> VietorisComplex {
    let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); d + 1];
    let mut witness = HashMap::new();
    for (i, u) in alpha.sets().enumerate() {
        for k in 1..=(d + 1).min(u.len()) {
            for verts in u.iter().copied().combinations(k) {
                let s = Simplex::new(verts).expect("distinct vertices");
                if let std::collections::hash_map::Entry::Vacant(e) = witness.entry(s.clone()) {
                    e.insert(i);
                    by_dim[k - 1].push(s);
                }
            }
        }
    }
    for level in &mut by_dim {
        level.sort();
    }
    let complex = SimplicialComplex::new(by_dim.into_iter().flatten()).expect("subsets of members are face-closed");
    VietorisComplex { cover: alpha.clone(), d, complex, witness }
}

impl VietorisComplex {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn cover_ref(&self) -> &Cover {
        &self.cover
    }

    pub fn witness(&self, s: &Simplex) -> Option<usize> {
        self.witness.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.witness.contains_key(s)
    }

    /// Checks that a simplex may be sent into this complex.
    pub fn check(&self, s: &Simplex) -> Result<(), VietorisError> {
        if s.dim() > self.d {
            return Err(VietorisError::AboveSkeleton(s.vertices().to_vec(), self.d));
        }
        if !self.contains(s) {
            return Err(VietorisError::Unsupported(s.vertices().to_vec()));
        }
        Ok(())
    }
}

/// The vertex-identity map `V^d(fine) -> V^d(coarse)`.
pub fn projection_pi<F: Field>(
    f: &F,
    fine: &VietorisComplex,
    coarse: &VietorisComplex,
) -> Result<ChainMap<F::Elem>, VietorisError> {
    if fine.d != coarse.d {
        return Err(VietorisError::SkeletonMismatch(fine.d, coarse.d));
    }
    if !is_refinement(&fine.cover, &coarse.cover)? {
        return Err(VietorisError::NotRefinement(fine.cover.index.to_string(), coarse.cover.index.to_string()));
    }
    let mut map = ChainMap::new(MapKind::Chain, "V(fine)", "V(coarse)");
    for s in fine.complex.iter() {
        coarse.check(s)?;
        map.set(s.clone(), Chain::simplex(f, s.clone()));
    }
    Ok(map)
}

/// Sends each cover-supported simplex to the Vietoris simplex on the same
/// vertices. Simplices never repeat vertices here, so no term vanishes.
pub fn mu<F: Field>(_f: &F, c: &Chain<F::Elem>, target: &VietorisComplex) -> Result<Chain<F::Elem>, VietorisError> {
    for (s, _) in c.terms() {
        target.check(s)?;
    }
    Ok(c.clone())
}

/// `mu` on every simplex of `k` up to the skeleton bound.
pub fn mu_map<F: Field>(f: &F, k: &SimplicialComplex, target: &VietorisComplex) -> Result<ChainMap<F::Elem>, VietorisError> {
    let mut map = ChainMap::new(MapKind::Chain, "S", "V");
    for s in k.iter().filter(|s| s.dim() <= target.d) {
        target.check(s)?;
        map.set(s.clone(), Chain::simplex(f, s.clone()));
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::PrimeField;
    use crate::spaces::Member;
    use crate::value::int;

    fn cover(t: i64, sets: &[&[Vertex]]) -> Cover {
        Cover::new(
            int(t),
            sets.iter().enumerate().map(|(i, s)| Member { name: i.to_string(), set: s.iter().copied().collect() }).collect(),
        )
    }

    #[test]
    fn enumeration() {
        let v = vietoris_complex(&cover(0, &[&[0, 1], &[1, 2]]), 2);
        assert_eq!(v.complex().len(), 5);
        let tri = vietoris_complex(&cover(0, &[&[0, 1, 2]]), 2);
        assert_eq!(tri.complex().len(), 7);
        let skel = vietoris_complex(&cover(0, &[&[0, 1, 2]]), 1);
        assert_eq!(skel.complex().len(), 6);
        assert_eq!(v.witness(&Simplex::vertex(1)), Some(0));
        assert_eq!(v.witness(&Simplex::new(vec![1, 2]).unwrap()), Some(1));
    }

    #[test]
    fn projection_and_mu() {
        let f = PrimeField::new(5).unwrap();
        let fine = vietoris_complex(&cover(0, &[&[0], &[1], &[2]]), 1);
        let coarse = vietoris_complex(&cover(0, &[&[0, 1, 2]]), 1);
        let pi = projection_pi(&f, &fine, &coarse).unwrap();
        assert_eq!(pi.len(), 3);
        let id = projection_pi(&f, &coarse, &coarse).unwrap();
        let e = Chain::from_oriented(&f, &[1, 0], 2);
        assert_eq!(id.apply(&f, &e).unwrap(), e);
        assert!(matches!(projection_pi(&f, &coarse, &fine), Err(VietorisError::NotRefinement(..))));

        let c = Chain::from_oriented(&f, &[0, 1, 2], 2);
        let tri = vietoris_complex(&cover(0, &[&[0, 1, 2]]), 2);
        assert_eq!(mu(&f, &c, &tri).unwrap(), c);
        assert!(mu(&f, &Chain::zero(1), &tri).unwrap().is_zero());
        assert!(matches!(mu(&f, &c, &coarse), Err(VietorisError::AboveSkeleton(..))));
        let split = vietoris_complex(&cover(0, &[&[0, 1], &[1, 2]]), 2);
        assert!(matches!(mu(&f, &Chain::from_oriented(&f, &[0, 2], 1), &split), Err(VietorisError::Unsupported(_))));
    }
}
