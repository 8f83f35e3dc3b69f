//! Simplicial homology over a field: ranks, induced maps, cycle filling and
//! explicit homology bases.

use super::chain::Chain;
use super::complex::SimplicialComplex;
use super::field::Field;
use super::linalg::{ColumnReduction, Matrix, SparseVec};
use super::HomalgError;

/// Columns of the boundary map out of degree `n`, indexed by the complex's
/// own simplex order. In reduced mode degree 0 maps onto a single
/// augmentation row.
pub fn boundary_columns<F: Field>(f: &F, k: &SimplicialComplex, n: usize, reduced: bool) -> (usize, Vec<SparseVec<F::Elem>>) {
    if n == 0 {
        let cols = k.simplices(0).iter().map(|_| if reduced { vec![(0, f.one())] } else { Vec::new() }).collect();
        return (usize::from(reduced), cols);
    }
    let cols = k
        .simplices(n)
        .iter()
        .map(|s| {
            let c = Chain::simplex(f, s.clone()).boundary(f);
            c.to_sparse(k).expect("complex is face-closed")
        })
        .collect();
    (k.count(n - 1), cols)
}

fn boundary_rank<F: Field>(f: &F, k: &SimplicialComplex, n: usize, reduced: bool) -> usize {
    let (rows, cols) = boundary_columns(f, k, n, reduced);
    ColumnReduction::new(f, rows, cols).rank()
}

/// Basis of the `n`-cycles as sparse vectors over the `n`-simplices.
pub fn cycles<F: Field>(f: &F, k: &SimplicialComplex, n: usize, reduced: bool) -> Vec<SparseVec<F::Elem>> {
    let (rows, cols) = boundary_columns(f, k, n, reduced);
    ColumnReduction::new(f, rows, cols).kernel()
}

/// Dimension of `H_n(k)`, or of reduced homology if `reduced`.
pub fn homology_rank<F: Field>(f: &F, k: &SimplicialComplex, n: usize, reduced: bool) -> usize {
    let cn = k.count(n);
    if cn == 0 {
        return 0;
    }
    cn - boundary_rank(f, k, n, reduced) - boundary_rank(f, k, n + 1, reduced)
}

fn check_contained(sub: &SimplicialComplex, ambient: &SimplicialComplex) -> Result<(), HomalgError> {
    match sub.iter().find(|s| !ambient.contains(s)) {
        Some(s) => Err(HomalgError::NotContained(s.vertices().to_vec())),
        None => Ok(()),
    }
}

/// Rank of `H_n(sub) -> H_n(ambient)` induced by inclusion.
pub fn induced_map_rank<F: Field>(
    f: &F,
    sub: &SimplicialComplex,
    ambient: &SimplicialComplex,
    n: usize,
    reduced: bool,
) -> Result<usize, HomalgError> {
    check_contained(sub, ambient)?;
    let z = cycles(f, sub, n, reduced);
    if z.is_empty() {
        return Ok(0);
    }
    let (rows, b) = boundary_columns(f, ambient, n + 1, reduced);
    let rows = rows.max(ambient.count(n));
    let mut red = ColumnReduction::new(f, rows, b);
    let rank_b = red.rank();
    for zc in z {
        let chain = Chain::from_sparse(f, sub, n, &zc);
        red.push(chain.to_sparse(ambient)?);
    }
    Ok(red.rank() - rank_b)
}

/// Whether inclusion induces the zero map in every degree up to `max_degree`.
pub fn is_trivial_inclusion<F: Field>(
    f: &F,
    sub: &SimplicialComplex,
    ambient: &SimplicialComplex,
    max_degree: usize,
    reduced: bool,
) -> Result<bool, HomalgError> {
    check_contained(sub, ambient)?;
    for n in 0..=max_degree {
        if induced_map_rank(f, sub, ambient, n, reduced)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves `∂c' = c` for `degree`-cycles `c` in a fixed ambient complex.
///
/// Elimination runs over the `(degree+1)`-simplices in the complex order,
/// or in the order given by `order`, so fills are reproducible.
#[derive(Debug, Clone)]
pub struct FillSolver<F: Field> {
    field: F,
    ambient: SimplicialComplex,
    degree: usize,
    order: Vec<usize>,
    reduction: ColumnReduction<F>,
}

impl<F: Field> FillSolver<F> {
    pub fn new(f: &F, ambient: &SimplicialComplex, degree: usize, order: Option<&[usize]>) -> Self {
        let (_, cols) = boundary_columns(f, ambient, degree + 1, false);
        let order: Vec<usize> = match order {
            Some(o) => o.to_vec(),
            None => (0..cols.len()).collect(),
        };
        debug_assert_eq!(order.len(), cols.len(), "fill order is not a permutation");
        let ordered = order.iter().map(|&j| cols[j].clone()).collect();
        let reduction = ColumnReduction::new(f, ambient.count(degree), ordered);
        Self { field: f.clone(), ambient: ambient.clone(), degree, order, reduction }
    }

    pub fn ambient(&self) -> &SimplicialComplex {
        &self.ambient
    }

    pub fn fill(&self, c: &Chain<F::Elem>) -> Result<Chain<F::Elem>, HomalgError> {
        let f = &self.field;
        if c.is_zero() {
            return Ok(Chain::zero(self.degree + 1));
        }
        if c.degree != self.degree {
            return Err(HomalgError::DegreeMismatch { expected: self.degree, found: c.degree });
        }
        let is_cycle = if self.degree == 0 { f.is_zero(&c.augmentation(f)) } else { c.boundary(f).is_zero() };
        if !is_cycle {
            return Err(HomalgError::NotACycle);
        }
        let b = c.to_sparse(&self.ambient)?;
        match self.reduction.solve(&b) {
            Ok(x) => {
                let gens = self.ambient.simplices(self.degree + 1);
                Ok(Chain::from_terms(f, self.degree + 1, x.into_iter().map(|(j, v)| (gens[self.order[j]].clone(), v))))
            }
            Err(_) => Err(HomalgError::Unfillable { class: c.describe() }),
        }
    }
}

/// One-shot cycle filling in the ambient complex.
pub fn fill_cycle<F: Field>(f: &F, ambient: &SimplicialComplex, c: &Chain<F::Elem>) -> Result<Chain<F::Elem>, HomalgError> {
    FillSolver::new(f, ambient, c.degree, None).fill(c)
}

/// A basis of `H_n` by representative cycles, with coordinates of any cycle.
#[derive(Debug, Clone)]
pub struct HomologyBasis<F: Field> {
    field: F,
    complex: SimplicialComplex,
    pub degree: usize,
    pub reduced: bool,
    reduction: ColumnReduction<F>,
    rep_cols: Vec<usize>,
    reps: Vec<Chain<F::Elem>>,
}

impl<F: Field> HomologyBasis<F> {
    pub fn new(f: &F, k: &SimplicialComplex, n: usize, reduced: bool) -> Self {
        let (_, b) = boundary_columns(f, k, n + 1, false);
        let n_b = b.len();
        let mut red = ColumnReduction::new(f, k.count(n), b);
        let mut rep_cols = Vec::new();
        let mut reps = Vec::new();
        for z in cycles(f, k, n, reduced) {
            let j = red.push(z.clone());
            if red.is_pivot(j) {
                rep_cols.push(j);
                reps.push(Chain::from_sparse(f, k, n, &z));
            }
        }
        debug_assert!(rep_cols.iter().all(|&j| j >= n_b));
        Self { field: f.clone(), complex: k.clone(), degree: n, reduced, reduction: red, rep_cols, reps }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[Chain<F::Elem>] {
        &self.reps
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Coordinates of the class of a cycle in the representative basis.
    pub fn coordinates(&self, c: &Chain<F::Elem>) -> Result<Vec<F::Elem>, HomalgError> {
        let f = &self.field;
        if c.is_zero() {
            return Ok(vec![f.zero(); self.dim()]);
        }
        if c.degree != self.degree {
            return Err(HomalgError::DegreeMismatch { expected: self.degree, found: c.degree });
        }
        let b = c.to_sparse(&self.complex)?;
        let x = self.reduction.solve(&b).map_err(|_| HomalgError::NotACycle)?;
        let mut out = vec![f.zero(); self.dim()];
        for (j, v) in x {
            if let Ok(pos) = self.rep_cols.binary_search(&j) {
                out[pos] = v;
            }
        }
        Ok(out)
    }
}

/// Matrix of the map on homology induced by a chain-level map.
pub fn induced_matrix<F: Field>(
    f: &F,
    src: &HomologyBasis<F>,
    tgt: &HomologyBasis<F>,
    map: impl Fn(&Chain<F::Elem>) -> Result<Chain<F::Elem>, HomalgError>,
) -> Result<Matrix<F::Elem>, HomalgError> {
    let mut m = Matrix::zeros(f, tgt.dim(), src.dim());
    for (j, rep) in src.reps().iter().enumerate() {
        let img = map(rep)?;
        for (i, v) in tgt.coordinates(&img)?.into_iter().enumerate() {
            m.data[i][j] = v;
        }
    }
    Ok(m)
}
