use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::homalg::{
    induced_matrix, persistent_homology, Barcode, Field, Filtration, HomologyBasis, Matrix, Simplex, SimplicialComplex,
};
use crate::spaces::{is_refinement, maximal_simplex_cover, open_star_cover, Cover, FilteredComplex};
use crate::value::Value;
use crate::vietoris::vietoris_complex;

use super::ComparisonError;

/// A persistence module on a finite grid in one homological degree:
/// fiber dimensions and the maps between consecutive grid values.
#[derive(Debug, Clone)]
pub struct PersistenceModule<F: Field> {
    pub degree: usize,
    pub grid: Vec<Value>,
    pub dims: Vec<usize>,
    pub steps: Vec<Matrix<F::Elem>>,
    bases: Vec<HomologyBasis<F>>,
}

impl<F: Field> PersistenceModule<F> {
    pub fn from_parts(degree: usize, grid: Vec<Value>, dims: Vec<usize>, steps: Vec<Matrix<F::Elem>>) -> Self {
        Self { degree, grid, dims, steps, bases: Vec::new() }
    }

    /// Homology of a nested sequence of complexes.
    pub fn from_complexes(f: &F, degree: usize, grid: Vec<Value>, complexes: &[SimplicialComplex]) -> Result<Self, ComparisonError> {
        let bases: Vec<HomologyBasis<F>> = complexes.iter().map(|k| HomologyBasis::new(f, k, degree, false)).collect();
        let mut steps = Vec::with_capacity(bases.len().saturating_sub(1));
        for w in bases.windows(2) {
            steps.push(induced_matrix(f, &w[0], &w[1], |c| Ok(c.clone()))?);
        }
        let dims = bases.iter().map(HomologyBasis::dim).collect();
        Ok(Self { degree, grid, dims, steps, bases })
    }

    pub fn basis(&self, i: usize) -> Option<&HomologyBasis<F>> {
        self.bases.get(i)
    }

    /// The structure map from grid index `i` to grid index `j ≥ i`.
    pub fn structure(&self, f: &F, i: usize, j: usize) -> Matrix<F::Elem> {
        let mut m = Matrix::identity(f, self.dims[i]);
        for k in i..j {
            m = self.steps[k].mul(f, &m);
        }
        m
    }
}

/// Per-grid-index matrices between two modules in one degree.
#[derive(Debug, Clone)]
pub struct ModuleMorphism<F: Field> {
    pub degree: usize,
    pub grid: Vec<Value>,
    pub maps: Vec<Matrix<F::Elem>>,
}

impl<F: Field> ModuleMorphism<F> {
    /// First grid index where naturality fails.
    pub fn naturality_failure(&self, f: &F, src: &PersistenceModule<F>, tgt: &PersistenceModule<F>) -> Option<usize> {
        (0..self.maps.len().saturating_sub(1)).find(|&i| {
            self.maps[i + 1].mul(f, &src.steps[i]) != tgt.steps[i].mul(f, &self.maps[i])
        })
    }
}

/// Which cover the Čech side uses at each grid value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CechCovers {
    /// Maximal simplices: the finest cover supporting every simplex.
    Finest,
    /// Vertex open stars.
    OpenStars,
}

pub fn cech_covers(fc: &FilteredComplex, kind: CechCovers) -> Vec<Cover> {
    fc.grid()
        .iter()
        .map(|g| match kind {
            CechCovers::Finest => maximal_simplex_cover(fc, g),
            CechCovers::OpenStars => open_star_cover(fc, g),
        })
        .collect()
}

/// The comparison morphism in every degree below `d`, with both modules.
#[derive(Debug, Clone)]
pub struct PhiData<F: Field> {
    pub d: usize,
    pub simplicial: Vec<PersistenceModule<F>>,
    pub cech: Vec<PersistenceModule<F>>,
    pub phi: Vec<ModuleMorphism<F>>,
}

fn check_covers(fc: &FilteredComplex, covers: &[Cover]) -> Result<(), ComparisonError> {
    if covers.len() != fc.grid().len() {
        return Err(ComparisonError::CoverCount { expected: fc.grid().len(), found: covers.len() });
    }
    for (i, (c, g)) in covers.iter().zip(fc.grid()).enumerate() {
        if &c.index != g {
            return Err(ComparisonError::ShapeMismatch(format!("cover {i} sits at {} instead of {g}", c.index)));
        }
        c.validate(fc)?;
        if i > 0 && !is_refinement(&covers[i - 1], c)? {
            return Err(ComparisonError::ShapeMismatch(format!("cover {} does not refine cover {i}", i - 1)));
        }
    }
    Ok(())
}

/// `φ_t = H(μ)` from the sublevel at `t` to `V^d` of the cover at `t`, in
/// degrees `0..d`, with naturality verified.
pub fn build_phi<F: Field>(f: &F, fc: &FilteredComplex, d: usize, covers: &[Cover]) -> Result<PhiData<F>, ComparisonError> {
    check_covers(fc, covers)?;
    let grid = fc.grid().to_vec();
    let sublevels: Vec<SimplicialComplex> = grid.iter().map(|g| fc.sublevel(g)).collect();
    let viet: Vec<_> = covers.iter().map(|c| vietoris_complex(c, d)).collect();
    let vk: Vec<SimplicialComplex> = viet.iter().map(|v| v.complex().clone()).collect();
    for (k, v) in sublevels.iter().zip(&viet) {
        for s in k.iter().filter(|s| s.dim() <= d) {
            v.check(s)?;
        }
    }
    let mut out = PhiData { d, simplicial: Vec::new(), cech: Vec::new(), phi: Vec::new() };
    for n in 0..d {
        let src = PersistenceModule::from_complexes(f, n, grid.clone(), &sublevels)?;
        let tgt = PersistenceModule::from_complexes(f, n, grid.clone(), &vk)?;
        let mut maps = Vec::with_capacity(grid.len());
        for i in 0..viet.len() {
            let m = induced_matrix(f, src.basis(i).expect("built from complexes"), tgt.basis(i).expect("built from complexes"), |c| {
                Ok(c.clone())
            })?;
            maps.push(m);
        }
        let phi = ModuleMorphism { degree: n, grid: grid.clone(), maps };
        if let Some(i) = phi.naturality_failure(f, &src, &tgt) {
            return Err(ComparisonError::InvalidMorphism { index: i, degree: n });
        }
        out.simplicial.push(src);
        out.cech.push(tgt);
        out.phi.push(phi);
    }
    Ok(out)
}

/// Whether kernel and cokernel of `phi` have zero structure maps between
/// all grid values `s < t`.
pub fn check_weak_isomorphism<F: Field>(
    f: &F,
    src: &PersistenceModule<F>,
    tgt: &PersistenceModule<F>,
    phi: &ModuleMorphism<F>,
) -> Result<bool, ComparisonError> {
    if let Some(i) = phi.naturality_failure(f, src, tgt) {
        return Err(ComparisonError::InvalidMorphism { index: i, degree: phi.degree });
    }
    let n = phi.maps.len();
    for i in 0..n {
        let kernel = phi.maps[i].kernel(f);
        let ker_mat = Matrix::from_columns(f, src.dims[i], &kernel);
        for j in i + 1..n {
            if !src.structure(f, i, j).mul(f, &ker_mat).is_zero(f) {
                return Ok(false);
            }
            let image = phi.maps[j].hcat(&tgt.structure(f, i, j));
            if image.rank(f) != phi.maps[j].rank(f) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn simplicial_barcode<F: Field>(f: &F, fc: &FilteredComplex, max_dim: usize) -> Result<Barcode, ComparisonError> {
    Ok(persistent_homology(f, &fc.filtration()?, max_dim))
}

/// Barcode of `t ↦ H(V^d(γ_t))` in degrees below `d`, through the
/// filtration of the union of the nested Vietoris complexes.
pub fn cech_barcode<F: Field>(f: &F, fc: &FilteredComplex, d: usize, covers: &[Cover]) -> Result<Barcode, ComparisonError> {
    check_covers(fc, covers)?;
    let mut first: HashMap<Simplex, Value> = HashMap::new();
    for c in covers {
        for s in vietoris_complex(c, d).complex().iter() {
            first.entry(s.clone()).or_insert_with(|| c.index.clone());
        }
    }
    let union = SimplicialComplex::closure(first.keys().cloned());
    let filt = Filtration::new(&union, |s| first[s].clone())?;
    let mut bc = persistent_homology(f, &filt, d.saturating_sub(1));
    if d == 0 {
        bc = Barcode::default();
    }
    Ok(bc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homalg::{bottleneck_distance, PrimeField};
    use crate::spaces::Member;
    use crate::value::int;

    #[test]
    fn finest_covers_give_isomorphism() {
        let f = PrimeField::f2();
        for (_, fc) in fixtures::comparison_fixtures() {
            let covers = cech_covers(&fc, CechCovers::Finest);
            let data = build_phi(&f, &fc, 3, &covers).unwrap();
            for n in 0..3 {
                for m in &data.phi[n].maps {
                    assert_eq!(m.rank(&f), m.rows);
                    assert_eq!(m.rows, m.cols);
                }
                assert!(check_weak_isomorphism(&f, &data.simplicial[n], &data.cech[n], &data.phi[n]).unwrap());
            }
            let a = simplicial_barcode(&f, &fc, 2).unwrap();
            let b = cech_barcode(&f, &fc, 3, &covers).unwrap();
            for n in 0..3 {
                assert_eq!(bottleneck_distance(&a, &b, n), crate::value::Ext::zero());
            }
        }
    }

    #[test]
    fn three_arcs_keep_the_circle() {
        let f = PrimeField::f2();
        let fc = fixtures::hexagon();
        let arcs = Cover::from_sets(&fc, int(0), [[0, 1, 2], [2, 3, 4], [4, 5, 0]].map(|a| a.into_iter().collect()));
        let data = build_phi(&f, &fc, 2, &[arcs]).unwrap();
        let m = &data.phi[1].maps[0];
        assert_eq!((m.rows, m.cols, m.rank(&f)), (1, 1, 1));
    }

    #[test]
    fn zero_map_between_persistent_bars_is_not_weak_iso() {
        let f = PrimeField::f2();
        let grid = vec![int(0), int(1)];
        let one = Matrix::identity(&f, 1);
        let m = PersistenceModule::<PrimeField>::from_parts(0, grid.clone(), vec![1, 1], vec![one.clone()]);
        let zero = ModuleMorphism { degree: 0, grid: grid.clone(), maps: vec![Matrix::zeros(&f, 1, 1); 2] };
        assert!(!check_weak_isomorphism(&f, &m, &m, &zero).unwrap());
        let id = ModuleMorphism { degree: 0, grid, maps: vec![one.clone(), one] };
        assert!(check_weak_isomorphism(&f, &m, &m, &id).unwrap());
    }

    #[test]
    fn cover_count_checked() {
        let f = PrimeField::f2();
        let fc = fixtures::slow_cone();
        let c = Cover::new(int(0), vec![Member { name: "all".into(), set: (0..3).collect() }]);
        assert!(matches!(build_phi(&f, &fc, 2, &[c]), Err(ComparisonError::CoverCount { .. })));
    }
}
