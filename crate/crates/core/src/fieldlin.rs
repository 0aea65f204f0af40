//! Exact linear algebra over prime fields F_q.
//!
//! Everything downstream (homology, resolutions, spectral sequence pages)
//! reduces to rank/kernel/solve computations on dense matrices over a small
//! prime field, so this module is the substrate for the whole crate.
//! Matrices are dense and row-major; pivoting is deterministic (first
//! nonzero entry in column order) so that every basis produced anywhere in
//! the crate is reproducible.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldLinError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field F_q. Cheap to clone; inverses are precomputed for
/// q < 2^16 and shared behind an `Arc`.
#[derive(Clone)]
pub struct Fp {
    q: u64,
    inverses: Option<Arc<[u64]>>,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}
impl Eq for Fp {}

impl Fp {
    pub fn new(q: u64) -> Result<Self, FieldLinError> {
        if !is_prime(q) {
            return Err(FieldLinError::NotPrime(q));
        }
        let inverses = if q < (1 << 16) {
            let mut table = vec![0u64; q as usize];
            for a in 1..q {
                table[a as usize] = pow_mod(a, q - 2, q);
            }
            Some(Arc::from(table))
        } else {
            None
        };
        Ok(Fp { q, inverses })
    }

    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.q as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0 && a < self.q);
        match &self.inverses {
            Some(table) => table[a as usize],
            None => pow_mod(a, self.q - 2, self.q),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

/// A dense `rows x cols` matrix over F_q, entries stored row-major as
/// reduced residues.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Fp,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} over F_{} [", self.rows, self.cols, self.field.q)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

/// Result of Gauss-Jordan elimination: the reduced row echelon form with
/// its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct RowReduced {
    pub rank: usize,
    pub rref: FieldMatrix,
    pub pivot_cols: Vec<usize>,
}

impl FieldMatrix {
    pub fn zeros(field: Fp, rows: usize, cols: usize) -> Self {
        FieldMatrix { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: Fp, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows of signed integers, reducing mod q.
    pub fn from_rows(field: Fp, data: &[Vec<i64>]) -> Result<Self, FieldLinError> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(rows * cols);
        for row in data {
            if row.len() != cols {
                return Err(FieldLinError::DimensionMismatch(format!(
                    "ragged rows: expected {} entries, found {}",
                    cols,
                    row.len()
                )));
            }
            entries.extend(row.iter().map(|&a| field.reduce(a)));
        }
        Ok(FieldMatrix { field, rows, cols, entries })
    }

    /// Build from column vectors.
    pub fn from_cols(field: Fp, ambient_dim: usize, cols: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, ambient_dim, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), ambient_dim);
            for (i, &v) in col.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> &Fp {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.q);
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> FieldMatrix {
        let mut t = Self::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix, FieldLinError> {
        if self.field != rhs.field {
            return Err(FieldLinError::ModulusMismatch(self.field.q, rhs.field.q));
        }
        if self.cols != rhs.rows {
            return Err(FieldLinError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let q = self.field.q;
        let mut out = Self::zeros(self.field.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, (cur + a * rhs.get(k, j)) % q);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[u64]) -> Result<Vec<u64>, FieldLinError> {
        if v.len() != self.cols {
            return Err(FieldLinError::DimensionMismatch(format!(
                "matrix has {} cols, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        let q = self.field.q;
        let mut out = vec![0u64; self.rows];
        for i in 0..self.rows {
            let mut acc = 0u64;
            for j in 0..self.cols {
                acc = (acc + self.get(i, j) * v[j]) % q;
            }
            out[i] = acc;
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &FieldMatrix) -> Result<FieldMatrix, FieldLinError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(FieldLinError::DimensionMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = self.clone();
        for (a, &b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = self.field.add(*a, b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: u64) -> FieldMatrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = self.field.mul(*a, c);
        }
        out
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        FieldMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Place `self` to the left of `other`.
    pub fn hstack(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        out
    }
}

/// Gauss-Jordan elimination with deterministic pivoting.
pub fn row_reduce(m: &FieldMatrix) -> RowReduced {
    let field = m.field.clone();
    let q = field.q;
    let mut a = m.clone();
    let mut pivot_cols = Vec::new();
    let mut r = 0usize;
    for j in 0..a.cols {
        if r >= a.rows {
            break;
        }
        let Some(i) = (r..a.rows).find(|&i| a.get(i, j) != 0) else {
            continue;
        };
        if i != r {
            for k in 0..a.cols {
                let x = a.get(i, k);
                let y = a.get(r, k);
                a.set(i, k, y);
                a.set(r, k, x);
            }
        }
        let inv = field.inv(a.get(r, j));
        for k in j..a.cols {
            a.set(r, k, a.get(r, k) * inv % q);
        }
        for i2 in 0..a.rows {
            if i2 == r {
                continue;
            }
            let f = a.get(i2, j);
            if f == 0 {
                continue;
            }
            for k in j..a.cols {
                let v = field.sub(a.get(i2, k), f * a.get(r, k) % q);
                a.set(i2, k, v);
            }
        }
        pivot_cols.push(j);
        r += 1;
    }
    RowReduced { rank: r, rref: a, pivot_cols }
}

pub fn rank(m: &FieldMatrix) -> usize {
    row_reduce(m).rank
}

/// A subspace of F_q^n given by a list of independent column vectors.
#[derive(Debug, Clone)]
pub struct Subspace {
    field: Fp,
    ambient_dim: usize,
    basis: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn new(field: Fp, ambient_dim: usize, basis: Vec<Vec<u64>>) -> Self {
        let s = Subspace { field, ambient_dim, basis };
        debug_assert_eq!(rank(&s.basis_matrix()), s.basis.len());
        s
    }

    pub fn zero(field: Fp, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new() }
    }

    pub fn full(field: Fp, ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![0; ambient_dim];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { field, ambient_dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> FieldMatrix {
        FieldMatrix::from_cols(self.field.clone(), self.ambient_dim, &self.basis)
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        solve(&self.basis_matrix(), v).map(|s| s.is_some()).unwrap_or(false)
    }

    /// Span of the union of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let joint = self.basis_matrix().hstack(&other.basis_matrix());
        column_space(&joint)
    }

    /// Intersection, computed from the kernel of the stacked basis matrix.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let a = self.basis_matrix();
        let b = other.basis_matrix();
        let joint = a.hstack(&b);
        let ker = kernel_basis(&joint);
        let mut basis = Vec::new();
        for k in ker.basis() {
            let coeffs = &k[..a.cols()];
            let v = a.mul_vec(coeffs).unwrap();
            basis.push(v);
        }
        // The kernel construction can produce dependent images; keep an
        // independent subset.
        let m = FieldMatrix::from_cols(self.field.clone(), self.ambient_dim, &basis);
        column_space(&m)
    }
}

/// Basis of the kernel {v : m v = 0}, one vector per non-pivot column.
pub fn kernel_basis(m: &FieldMatrix) -> Subspace {
    let field = m.field().clone();
    let red = row_reduce(m);
    let pivot_set: Vec<Option<usize>> = {
        let mut v = vec![None; m.cols()];
        for (r, &c) in red.pivot_cols.iter().enumerate() {
            v[c] = Some(r);
        }
        v
    };
    let mut basis = Vec::new();
    for j in 0..m.cols() {
        if pivot_set[j].is_some() {
            continue;
        }
        let mut v = vec![0u64; m.cols()];
        v[j] = 1;
        for (c, slot) in pivot_set.iter().enumerate() {
            if let Some(r) = slot {
                v[c] = field.neg(red.rref.get(*r, j));
            }
        }
        basis.push(v);
    }
    Subspace::new(field, m.cols(), basis)
}

/// Basis of the column space: the pivot columns of the original matrix.
pub fn column_space(m: &FieldMatrix) -> Subspace {
    let red = row_reduce(m);
    let basis = red.pivot_cols.iter().map(|&j| m.column(j)).collect();
    Subspace::new(m.field().clone(), m.rows(), basis)
}

/// Solve m x = b exactly. `Ok(None)` means the system is inconsistent.
pub fn solve(m: &FieldMatrix, b: &[u64]) -> Result<Option<Vec<u64>>, FieldLinError> {
    if b.len() != m.rows() {
        return Err(FieldLinError::DimensionMismatch(format!(
            "matrix has {} rows, rhs has length {}",
            m.rows(),
            b.len()
        )));
    }
    let rhs = FieldMatrix::from_cols(m.field().clone(), b.len(), &[b.to_vec()]);
    Ok(solve_matrix(m, &rhs)?.map(|x| x.column(0)))
}

/// Solve m X = B column-by-column; `Ok(None)` if any column is inconsistent.
pub fn solve_matrix(m: &FieldMatrix, b: &FieldMatrix) -> Result<Option<FieldMatrix>, FieldLinError> {
    if b.rows() != m.rows() {
        return Err(FieldLinError::DimensionMismatch(format!(
            "matrix has {} rows, rhs has {}",
            m.rows(),
            b.rows()
        )));
    }
    let aug = m.hstack(b);
    let red = row_reduce(&aug);
    // A pivot in the rhs block certifies inconsistency.
    if red.pivot_cols.iter().any(|&c| c >= m.cols()) {
        return Ok(None);
    }
    let mut x = FieldMatrix::zeros(m.field().clone(), m.cols(), b.cols());
    for (r, &c) in red.pivot_cols.iter().enumerate() {
        for j in 0..b.cols() {
            x.set(c, j, red.rref.get(r, m.cols() + j));
        }
    }
    Ok(Some(x))
}

/// Projection of F_q^n onto the quotient by the column space of `m`,
/// returned as a full-row-rank matrix of shape (n - rank) x n.
pub fn cokernel_projection(m: &FieldMatrix) -> FieldMatrix {
    let field = m.field().clone();
    let n = m.rows();
    let img = column_space(m);
    // Complete the image basis to a basis of F_q^n with standard vectors.
    let mut cols: Vec<Vec<u64>> = img.basis().to_vec();
    let mut completion_idx = Vec::new();
    let mut current = FieldMatrix::from_cols(field.clone(), n, &cols);
    let mut current_rank = cols.len();
    for i in 0..n {
        let mut e = vec![0u64; n];
        e[i] = 1;
        let trial = current.hstack(&FieldMatrix::from_cols(field.clone(), n, &[e.clone()]));
        if rank(&trial) > current_rank {
            cols.push(e);
            completion_idx.push(cols.len() - 1);
            current = trial;
            current_rank += 1;
        }
    }
    let change = FieldMatrix::from_cols(field.clone(), n, &cols);
    let inv = invert(&change).expect("completed basis is invertible");
    let k = completion_idx.len();
    let mut proj = FieldMatrix::zeros(field, k, n);
    for (out_row, &basis_row) in completion_idx.iter().enumerate() {
        for j in 0..n {
            proj.set(out_row, j, inv.get(basis_row, j));
        }
    }
    proj
}

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(m: &FieldMatrix) -> Option<FieldMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let aug = m.hstack(&FieldMatrix::identity(m.field().clone(), n));
    let red = row_reduce(&aug);
    if red.rank != n || red.pivot_cols.iter().any(|&c| c >= n) {
        return None;
    }
    let mut inv = FieldMatrix::zeros(m.field().clone(), n, n);
    for i in 0..n {
        for j in 0..n {
            inv.set(i, j, red.rref.get(i, n + j));
        }
    }
    Some(inv)
}

/// A right inverse of a surjective matrix (one preimage per standard basis
/// vector of the target).
pub fn section(m: &FieldMatrix) -> Option<FieldMatrix> {
    let id = FieldMatrix::identity(m.field().clone(), m.rows());
    solve_matrix(m, &id).ok().flatten()
}

/// Deterministic pseudo-random matrix, for tests and sampling harnesses.
pub fn random_matrix<R: rand::Rng>(rng: &mut R, field: Fp, rows: usize, cols: usize) -> FieldMatrix {
    let q = field.modulus();
    let entries = (0..rows * cols).map(|_| rng.gen_range(0..q)).collect();
    FieldMatrix { field, rows, cols, entries }
}

/// Random invertible square matrix.
pub fn random_invertible<R: rand::Rng>(rng: &mut R, field: Fp, n: usize) -> FieldMatrix {
    loop {
        let m = random_matrix(rng, field.clone(), n, n);
        if invert(&m).is_some() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(q: u64) -> Fp {
        Fp::new(q).unwrap()
    }

    fn mat(q: u64, rows: &[Vec<i64>]) -> FieldMatrix {
        FieldMatrix::from_rows(f(q), rows).unwrap()
    }

    #[test]
    fn modulus_must_be_prime() {
        assert_eq!(Fp::new(6).unwrap_err(), FieldLinError::NotPrime(6));
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(65521).is_ok());
    }

    #[test]
    fn row_reduce_identity_f5() {
        let m = FieldMatrix::identity(f(5), 3);
        let red = row_reduce(&m);
        assert_eq!(red.rank, 3);
        assert_eq!(red.rref, m);
        assert_eq!(red.pivot_cols, vec![0, 1, 2]);
    }

    #[test]
    fn row_reduce_zero_f3() {
        let m = FieldMatrix::zeros(f(3), 2, 2);
        let red = row_reduce(&m);
        assert_eq!(red.rank, 0);
        assert!(red.pivot_cols.is_empty());
    }

    #[test]
    fn row_reduce_singular_f3() {
        // Hand elimination oracle: [[1,2],[2,1]] over F_3. R2 <- R2 - 2 R1 =
        // [2-2, 1-4] = [0, -3] = [0, 0], so rank 1 and rref [[1,2],[0,0]].
        let m = mat(3, &[vec![1, 2], vec![2, 1]]);
        let red = row_reduce(&m);
        assert_eq!(red.rank, 1);
        assert_eq!(red.rref, mat(3, &[vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn row_reduce_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let m = random_matrix(&mut rng, f(5), 4, 6);
            let red = row_reduce(&m);
            let again = row_reduce(&red.rref);
            assert_eq!(red.rref, again.rref);
            assert_eq!(red.rank, again.rank);
        }
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let m = FieldMatrix::identity(f(7), 4);
        assert_eq!(kernel_basis(&m).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = FieldMatrix::zeros(f(3), 2, 3);
        assert_eq!(kernel_basis(&m).dim(), 3);
    }

    #[test]
    fn kernel_of_row_vector() {
        // Direct solve oracle: x + y = 0 over F_3 has solution set
        // {(t, 2t)}, so the kernel is the line through (1, 2).
        let m = mat(3, &[vec![1, 1]]);
        let ker = kernel_basis(&m);
        assert_eq!(ker.dim(), 1);
        assert!(ker.contains(&[1, 2]));
        assert_eq!(m.mul_vec(&ker.basis()[0]).unwrap(), vec![0]);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = FieldMatrix::identity(f(5), 3);
        assert_eq!(solve(&m, &[1, 2, 3]).unwrap(), Some(vec![1, 2, 3]));
    }

    #[test]
    fn solve_zero_matrix_nonzero_rhs_is_inconsistent() {
        let m = FieldMatrix::zeros(f(5), 2, 2);
        assert_eq!(solve(&m, &[1, 0]).unwrap(), None);
    }

    #[test]
    fn solve_singular_system() {
        // Kernel oracle: [[1,2],[2,1]] x = 0 over F_3 is solved exactly by
        // multiples of (1,1).
        let m = mat(3, &[vec![1, 2], vec![2, 1]]);
        let x = solve(&m, &[0, 0]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![0, 0]);
        let ker = kernel_basis(&m);
        assert!(ker.contains(&[1, 1]));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let m = FieldMatrix::zeros(f(5), 2, 2);
        assert!(matches!(solve(&m, &[1, 2, 3]), Err(FieldLinError::DimensionMismatch(_))));
    }

    #[test]
    fn rank_nullity_holds_on_random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for q in [3u64, 5, 7] {
            for _ in 0..100 {
                let rows = rng.gen_range(0..6);
                let cols = rng.gen_range(0..6);
                let m = random_matrix(&mut rng, f(q), rows, cols);
                let ker = kernel_basis(&m);
                assert_eq!(rank(&m) + ker.dim(), cols);
                for v in ker.basis() {
                    assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
                }
            }
        }
    }

    #[test]
    fn rank_equals_rank_of_transpose() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let m = random_matrix(&mut rng, f(5), 4, 7);
            assert_eq!(rank(&m), rank(&m.transpose()));
        }
    }

    #[test]
    fn cokernel_projection_kills_image_and_is_surjective() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let m = random_matrix(&mut rng, f(3), 4, 3);
            let proj = cokernel_projection(&m);
            assert_eq!(proj.rows(), 4 - rank(&m));
            assert_eq!(proj.cols(), 4);
            assert_eq!(rank(&proj), proj.rows());
            assert!(proj.mul(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn invert_round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_invertible(&mut rng, f(7), 5);
        let inv = invert(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), FieldMatrix::identity(f(7), 5));
        assert_eq!(inv.mul(&m).unwrap(), FieldMatrix::identity(f(7), 5));
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let fp = f(5);
        let a = Subspace::new(fp.clone(), 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let b = Subspace::new(fp.clone(), 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.sum(&b).dim(), 3);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 1, 0]));
    }
}
