//! Sparse column reduction and small dense matrices over a [`Field`].

use super::field::Field;

/// Sorted `(row, value)` pairs with no stored zeros.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `y + a * x` for sorted sparse vectors.
pub fn axpy<F: Field>(f: &F, a: &F::Elem, x: &[(usize, F::Elem)], y: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let v = f.mul(a, &x[i].1);
            if !f.is_zero(&v) {
                out.push((x[i].0, v));
            }
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push(y[j].clone());
            j += 1;
        } else {
            let v = f.add(&y[j].1, &f.mul(a, &x[i].1));
            if !f.is_zero(&v) {
                out.push((y[j].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(f: &F, a: &F::Elem, x: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
    if f.is_zero(a) {
        return Vec::new();
    }
    x.iter().map(|(i, v)| (*i, f.mul(a, v))).collect()
}

/// Builds a sorted sparse vector from unsorted entries, summing duplicates.
pub fn normalize<F: Field>(f: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = f.add(&last.1, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !f.is_zero(v));
    out
}

/// Left-to-right reduction `R = M V` keyed on the lowest nonzero row of
/// each column, with `V` tracked so that every reduced column can be traced
/// back to a combination of input columns.
#[derive(Debug, Clone)]
pub struct ColumnReduction<F: Field> {
    field: F,
    n_rows: usize,
    reduced: Vec<SparseVec<F::Elem>>,
    combos: Vec<SparseVec<F::Elem>>,
    pivot_of_row: Vec<Option<usize>>,
}

impl<F: Field> ColumnReduction<F> {
    pub fn new(field: &F, n_rows: usize, columns: Vec<SparseVec<F::Elem>>) -> Self {
        let mut red = Self {
            field: field.clone(),
            n_rows,
            reduced: Vec::with_capacity(columns.len()),
            combos: Vec::with_capacity(columns.len()),
            pivot_of_row: vec![None; n_rows],
        };
        for col in columns {
            red.push(col);
        }
        red
    }

    /// Appends one column and reduces it against the existing pivots.
    pub fn push(&mut self, col: SparseVec<F::Elem>) -> usize {
        let f = &self.field;
        let j = self.reduced.len();
        let mut col = col;
        let mut combo: SparseVec<F::Elem> = vec![(j, f.one())];
        while let Some((low, val)) = col.last().cloned() {
            debug_assert!(low < self.n_rows);
            match self.pivot_of_row[low] {
                Some(k) => {
                    let pv = &self.reduced[k].last().expect("pivot column is nonzero").1;
                    let a = f.neg(&f.div(&val, pv).expect("pivot is nonzero"));
                    col = axpy(f, &a, &self.reduced[k], &col);
                    combo = axpy(f, &a, &self.combos[k], &combo);
                }
                None => {
                    self.pivot_of_row[low] = Some(j);
                    break;
                }
            }
        }
        self.reduced.push(col);
        self.combos.push(combo);
        j
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.reduced.len()
    }

    pub fn reduced(&self, j: usize) -> &SparseVec<F::Elem> {
        &self.reduced[j]
    }

    pub fn combo(&self, j: usize) -> &SparseVec<F::Elem> {
        &self.combos[j]
    }

    pub fn pivot_of_row(&self, row: usize) -> Option<usize> {
        self.pivot_of_row[row]
    }

    pub fn is_pivot(&self, j: usize) -> bool {
        !self.reduced[j].is_empty()
    }

    pub fn low(&self, j: usize) -> Option<usize> {
        self.reduced[j].last().map(|e| e.0)
    }

    pub fn rank(&self) -> usize {
        self.reduced.iter().filter(|c| !c.is_empty()).count()
    }

    /// Basis of the null space, as combinations of input columns.
    pub fn kernel(&self) -> Vec<SparseVec<F::Elem>> {
        self.reduced
            .iter()
            .zip(&self.combos)
            .filter(|(r, _)| r.is_empty())
            .map(|(_, c)| c.clone())
            .collect()
    }

    /// Finds `x` with `M x = b`, or returns the reduced remainder of `b`.
    /// The solution is supported on pivot columns only.
    pub fn solve(&self, b: &[(usize, F::Elem)]) -> Result<SparseVec<F::Elem>, SparseVec<F::Elem>> {
        let f = &self.field;
        let mut b: SparseVec<F::Elem> = b.to_vec();
        let mut x: SparseVec<F::Elem> = Vec::new();
        while let Some((low, val)) = b.last().cloned() {
            if low >= self.n_rows {
                return Err(b);
            }
            match self.pivot_of_row[low] {
                Some(k) => {
                    let pv = &self.reduced[k].last().expect("pivot column is nonzero").1;
                    let a = f.div(&val, pv).expect("pivot is nonzero");
                    b = axpy(f, &f.neg(&a), &self.reduced[k], &b);
                    x = axpy(f, &a, &self.combos[k], &x);
                }
                None => return Err(b),
            }
        }
        Ok(x)
    }
}

/// Dense row-major matrix, used for homology-level maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![vec![f.zero(); cols]; rows] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            m.data[i][i] = f.one();
        }
        m
    }

    pub fn from_columns<F: Field<Elem = E>>(f: &F, rows: usize, columns: &[SparseVec<E>]) -> Self {
        let mut m = Self::zeros(f, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                m.data[*i][j] = v.clone();
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i][j]
    }

    pub fn column<F: Field<Elem = E>>(&self, f: &F, j: usize) -> SparseVec<E> {
        (0..self.rows)
            .filter(|&i| !f.is_zero(&self.data[i][j]))
            .map(|i| (i, self.data[i][j].clone()))
            .collect()
    }

    pub fn columns<F: Field<Elem = E>>(&self, f: &F) -> Vec<SparseVec<E>> {
        (0..self.cols).map(|j| self.column(f, j)).collect()
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k][j];
                    if !f.is_zero(b) {
                        out.data[i][j] = f.add(&out.data[i][j], &f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(r, s)| r.iter().zip(s).map(|(a, b)| f.sub(a, b)).collect())
            .collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|r| r.iter().all(|v| f.is_zero(v)))
    }

    pub fn rank<F: Field<Elem = E>>(&self, f: &F) -> usize {
        ColumnReduction::new(f, self.rows, self.columns(f)).rank()
    }

    /// Null-space basis as dense column vectors.
    pub fn kernel<F: Field<Elem = E>>(&self, f: &F) -> Vec<SparseVec<E>> {
        ColumnReduction::new(f, self.rows, self.columns(f)).kernel()
    }

    /// Indices of columns that differ between `self` and `other`.
    pub fn differing_columns(&self, other: &Self) -> Vec<usize> {
        (0..self.cols.min(other.cols))
            .filter(|&j| (0..self.rows.min(other.rows)).any(|i| self.data[i][j] != other.data[i][j]))
            .collect()
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "matrix shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Self { rows: self.rows, cols: self.cols + other.cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::field::{PrimeField, Rationals};

    #[test]
    fn reduction_rank_and_kernel() {
        let f = PrimeField::f2();
        // Columns e0+e1, e1+e2, e0+e2 are dependent mod 2.
        let cols = vec![vec![(0, 1), (1, 1)], vec![(1, 1), (2, 1)], vec![(0, 1), (2, 1)]];
        let red = ColumnReduction::new(&f, 3, cols);
        assert_eq!(red.rank(), 2);
        let ker = red.kernel();
        assert_eq!(ker, vec![vec![(0, 1), (1, 1), (2, 1)]]);
    }

    #[test]
    fn solve_over_rationals() {
        let q = Rationals;
        let c = |n: i64| q.from_i64(n);
        let cols = vec![vec![(0, c(2)), (1, c(1))], vec![(1, c(3))]];
        let red = ColumnReduction::new(&q, 2, cols.clone());
        let b = vec![(0, c(4)), (1, c(5))];
        let x = red.solve(&b).unwrap();
        // Check M x = b.
        let mut acc: SparseVec<_> = Vec::new();
        for (j, a) in &x {
            acc = axpy(&q, a, &cols[*j], &acc);
        }
        assert_eq!(acc, b);
        let red1 = ColumnReduction::new(&q, 2, vec![cols[0].clone()]);
        assert!(red1.solve(&[(1, c(1))]).is_err());
    }

    #[test]
    fn dense_product() {
        let f = PrimeField::new(5).unwrap();
        let a = Matrix { rows: 2, cols: 2, data: vec![vec![1, 2], vec![3, 4]] };
        let id = Matrix::identity(&f, 2);
        assert_eq!(a.mul(&f, &id), a);
        assert_eq!(a.mul(&f, &a).data, vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(a.rank(&f), 2);
    }
}
