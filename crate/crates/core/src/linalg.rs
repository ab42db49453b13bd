//! Dense exact linear algebra: matrices, row reduction, kernels, subspaces.
//!
//! Vectors are rows. A matrix `m` acts on a row vector `v` by `v * m`, which is
//! the convention used for module actions everywhere else in the crate.

use std::fmt;

use crate::field::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length must be rows x cols");
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from rows; `cols` is needed when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&v| F::from_i64(v))
            })
            .collect();
        Matrix { rows: rows.len(), cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut F {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [F] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        if rhs.cols == 0 {
            return out;
        }
        for r in 0..self.rows {
            let orow = &mut out.data[r * rhs.cols..(r + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = &self.data[r * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    o.add_mul_assign(a, b);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in vector product");
        let mut out = vec![F::zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(k)) {
                o.add_mul_assign(a, b);
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in vector product");
        (0..self.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    acc.add_mul_assign(a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|a| a.mul(s)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// `self += s * rhs`
    pub fn add_scaled(&mut self, s: &F, rhs: &Self) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if s.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            a.add_mul_assign(s, b);
        }
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let cols = self.cols + rhs.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(rhs.row(r));
        }
        Matrix { rows: self.rows, cols, data }
    }

    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Matrix { rows: self.rows + rhs.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let mut m = Self::zeros(self.rows + rhs.rows, self.cols + rhs.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, rhs);
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for r in 0..b.rows {
            for c in 0..b.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = b.get(r, c).clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.data[r * cols + c] = self.get(r0 + r, c0 + c).clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { rows: idx.len(), cols: self.cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.rows);
        for r in 0..self.rows {
            for &c in idx {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.rows, cols: idx.len(), data }
    }

    pub fn push_row(&mut self, row: &[F]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// In-place reduction to reduced row-echelon form. Returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == rows {
                break;
            }
            let Some(sel) = (prow..rows).find(|&r| !self.data[r * cols + c].is_zero()) else {
                continue;
            };
            if sel != prow {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, prow * cols + k);
                }
            }
            let inv = self.data[prow * cols + c].inv();
            if !inv.is_one() {
                for k in c..cols {
                    let v = self.data[prow * cols + k].mul(&inv);
                    self.data[prow * cols + k] = v;
                }
            }
            let (before, rest) = self.data.split_at_mut(prow * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let f = other[c].clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..cols {
                    other[k].sub_mul_assign(&f, &pivot_row[k]);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Inverse of a square matrix, if invertible.
    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Self::zeros(0, 0));
        }
        let mut aug = self.hstack(&Self::identity(n));
        let piv = aug.rref_in_place();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis (as rows) of the left null space `{u : u * self = 0}`.
    pub fn left_kernel(&self) -> Self {
        kernel_rows(&self.transpose())
    }

    /// Row space as a canonical subspace.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_rows(self.clone())
    }

    pub fn trace(&self) -> F {
        let mut t = F::zero();
        for i in 0..self.rows.min(self.cols) {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

/// Reduced row-echelon form, rank and pivot columns.
pub fn rref<F: Field>(m: &Matrix<F>) -> (Matrix<F>, usize, Vec<usize>) {
    let mut r = m.clone();
    let piv = r.rref_in_place();
    let rank = piv.len();
    (r, rank, piv)
}

/// Basis (as rows) of `{v : m v = 0}`, one vector per free column.
pub fn kernel_rows<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    let (r, rank, piv) = rref(m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &piv {
        is_pivot[p] = true;
    }
    let mut out = Matrix::zeros(0, n);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); n];
        v[free] = F::one();
        for (k, &p) in piv.iter().enumerate().take(rank) {
            v[p] = r.get(k, free).neg();
        }
        out.push_row(&v);
    }
    out
}

/// `{v : m v = 0}` as a canonical subspace.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::from_rows(kernel_rows(m))
}

/// Some `x` with `m x = b`, free variables set to zero; `None` if inconsistent.
pub fn solve_linear<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length must equal row count");
    let col = Matrix::from_vec(b.len(), 1, b.to_vec());
    let mut aug = m.hstack(&col);
    let piv = aug.rref_in_place();
    let n = m.cols();
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (k, &p) in piv.iter().enumerate() {
        x[p] = aug.get(k, n).clone();
    }
    Some(x)
}

/// Some row vector `x` with `x m = b`.
pub fn solve_left<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    solve_linear(&m.transpose(), b)
}

/// A linear subspace of `F^ambient`, stored by its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: vec![] }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_rows(rows: Matrix<F>) -> Self {
        let ambient = rows.cols();
        let mut r = rows;
        let pivots = r.rref_in_place();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace { ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace, in place; afterwards `v` is zero at every pivot.
    pub fn reduce(&self, v: &mut [F]) {
        for (k, &p) in self.pivots.iter().enumerate() {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(self.basis.row(k)).skip(p) {
                x.sub_mul_assign(&f, b);
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Coordinates with respect to the rref basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.basis.vec_mul(&c);
        (back == v).then_some(c)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        (0..other.dim()).all(|r| self.contains(other.basis.row(r)))
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::from_rows(self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // u * B1 = w * B2  <=>  [u | w] * [B1; -B2] = 0
        let stacked = self.basis.vstack(&other.basis.scale(&F::one().neg()));
        let k = stacked.left_kernel();
        let u = k.block(0, 0, k.rows(), self.dim());
        Self::from_rows(u.mul(&self.basis))
    }

    /// Indices of standard basis vectors completing this subspace to the full space.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Greedy selection: indices of rows of `candidates` that are independent of each
/// other and of `base`, scanned in order.
pub fn independent_rows<F: Field>(base: &Subspace<F>, candidates: &Matrix<F>) -> Vec<usize> {
    let mut acc = IncrementalBasis::new(base.clone());
    (0..candidates.rows()).filter(|&r| acc.insert(candidates.row(r))).collect()
}

/// A subspace that grows one vector at a time.
#[derive(Clone, Debug)]
pub struct IncrementalBasis<F: Field> {
    ambient: usize,
    // Echelon rows normalised at their pivot, with pivot positions.
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> IncrementalBasis<F> {
    pub fn new(start: Subspace<F>) -> Self {
        let rows = start.pivots.iter().enumerate().map(|(k, &p)| (p, start.basis.row(k).to_vec())).collect();
        IncrementalBasis { ambient: start.ambient, rows }
    }

    pub fn empty(ambient: usize) -> Self {
        IncrementalBasis { ambient, rows: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [F]) {
        for (p, row) in &self.rows {
            let f = v[*p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in v.iter_mut().zip(row) {
                x.sub_mul_assign(&f, b);
            }
        }
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether it was independent.
    pub fn insert(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv();
        for x in w.iter_mut() {
            *x = x.mul(&inv);
        }
        // keep earlier rows reduced at the new pivot so later reductions stay one-pass
        for (_, row) in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, b) in row.iter_mut().zip(&w) {
                x.sub_mul_assign(&f, b);
            }
        }
        self.rows.push((p, w));
        true
    }

    pub fn to_subspace(&self) -> Subspace<F> {
        let m = Matrix::from_rows(self.rows.iter().map(|(_, r)| r.clone()).collect(), self.ambient);
        Subspace::from_rows(m)
    }
}

/// Solves `c * basis = v` for a fixed basis with independent rows.
#[derive(Clone, Debug)]
pub struct CoordSolver<F: Field> {
    dim: usize,
    reduced: Matrix<F>,
    pivots: Vec<usize>,
    transform: Matrix<F>,
}

impl<F: Field> CoordSolver<F> {
    pub fn new(basis: &Matrix<F>) -> Self {
        let k = basis.rows();
        let mut aug = basis.hstack(&Matrix::identity(k));
        let n = basis.cols();
        let piv = aug.rref_in_place();
        let rank = piv.iter().filter(|&&p| p < n).count();
        assert_eq!(rank, k, "CoordSolver basis rows must be independent");
        let reduced = aug.block(0, 0, k, n);
        let transform = aug.block(0, n, k, k);
        CoordSolver { dim: k, reduced, pivots: piv[..k].to_vec(), transform }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn solve(&self, v: &[F]) -> Option<Vec<F>> {
        let c: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.reduced.vec_mul(&c) != v {
            return None;
        }
        Some(self.transform.vec_mul(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, F101};

    fn m101(rows: &[&[i64]]) -> Matrix<F101> {
        Matrix::from_i64(rows)
    }

    #[test]
    fn rref_identity_and_zero() {
        let (r, rank, piv) = rref(&m101(&[&[1, 0], &[0, 1]]));
        assert!(r.is_identity());
        assert_eq!((rank, piv), (2, vec![0, 1]));
        let (r, rank, piv) = rref(&m101(&[&[0, 0], &[0, 0]]));
        assert!(r.is_zero());
        assert_eq!((rank, piv), (0, vec![]));
    }

    #[test]
    fn rref_rank_one_by_hand() {
        let (r, rank, _) = rref(&Matrix::<Rational>::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn kernel_substitutes_back_to_zero() {
        let m = Matrix::<Rational>::from_i64(&[&[1, 2], &[2, 4]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        let v = k.basis().row(0).to_vec();
        assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        // -2, 1 up to scale
        assert_eq!(v[0], v[1].mul(&Rational::from_i64(-2)));
        assert!(kernel_basis(&m101(&[&[1, 0], &[0, 1]])).dim() == 0);
        assert_eq!(kernel_basis(&Matrix::<F101>::zeros(3, 3)).dim(), 3);
    }

    #[test]
    fn solve_cases() {
        let m = Matrix::<Rational>::from_i64(&[&[1, 2], &[2, 4]]);
        let x = solve_linear(&m, &[Rational::from_i64(1), Rational::from_i64(2)]).unwrap();
        assert_eq!(x, vec![Rational::from_i64(1), Rational::from_i64(0)]);
        assert!(solve_linear(&Matrix::<F101>::zeros(2, 2), &[F101::new(1), F101::new(0)]).is_none());
        let b = vec![F101::new(3), F101::new(9)];
        assert_eq!(solve_linear(&Matrix::identity(2), &b).unwrap(), b);
    }

    #[test]
    fn subspace_intersection_and_coords() {
        let a = Subspace::from_rows(m101(&[&[1, 0, 0], &[0, 1, 0]]));
        let b = Subspace::from_rows(m101(&[&[0, 1, 0], &[0, 0, 1]]));
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[F101::new(0), F101::new(5), F101::new(0)]));
        let basis = m101(&[&[1, 1, 0], &[0, 1, 1]]);
        let cs = CoordSolver::new(&basis);
        let v = basis.vec_mul(&[F101::new(3), F101::new(4)]);
        assert_eq!(cs.solve(&v).unwrap(), vec![F101::new(3), F101::new(4)]);
        assert!(cs.solve(&[F101::new(1), F101::new(0), F101::new(0)]).is_none());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = m101(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(m101(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn incremental_basis_matches_rank() {
        let m = m101(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 3, 4]]);
        let mut ib = IncrementalBasis::empty(3);
        let taken: Vec<bool> = (0..4).map(|r| ib.insert(m.row(r))).collect();
        assert_eq!(taken, vec![true, false, true, false]);
        assert_eq!(ib.dim(), m.rank());
    }
}
