//! Exact linear algebra over `Q`.
//!
//! Dense matrices are used for small operators; kernels and ranks are computed
//! by Gauss–Jordan elimination on sparse rows so that the same routine serves
//! the 70×70 and larger exterior-power operators.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn q(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A sparse row: column index → nonzero entry.
pub type SparseRow = BTreeMap<usize, Rat>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Rat) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).fold(Rat::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn to_sparse_rows(&self) -> Vec<SparseRow> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(c, x)| (c, x.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        row_echelon(self.to_sparse_rows(), self.cols).0.len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        kernel_of_rows(self.to_sparse_rows(), self.cols)
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Rat::zero();
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = &a[(r, col)] / &pivot;
                for c in col..n {
                    let v = &a[(col, c)] * &f;
                    a[(r, c)] -= v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pivot = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] / &pivot;
                inv[(col, c)] = &inv[(col, c)] / &pivot;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let v = &a[(col, c)] * &f;
                    a[(r, c)] -= v;
                    let w = &inv[(col, c)] * &f;
                    inv[(r, c)] -= w;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// Sparse square or rectangular matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![SparseRow::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.data.iter_mut().enumerate() {
            row.insert(i, Rat::one());
        }
        m
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Rat) {
        add_into(&mut self.data[r], c, v);
    }

    pub fn get(&self, r: usize, c: usize) -> Rat {
        self.data[r].get(&c).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, row) in self.data.iter().enumerate() {
            for (&c, v) in row {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix) -> Self {
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            data: m.to_sparse_rows(),
        }
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows);
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut out = SparseRow::new();
                for (&k, a) in row {
                    for (&c, b) in &rhs.data[k] {
                        add_into(&mut out, c, a * b);
                    }
                }
                out
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }

    /// `self + s * other`
    pub fn add_scaled(&self, other: &SparseMatrix, s: &Rat) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (r, row) in other.data.iter().enumerate() {
            for (&c, v) in row {
                add_into(&mut out.data[r], c, v * s);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        self.data
            .iter()
            .map(|row| row.iter().fold(Rat::zero(), |acc, (&c, a)| acc + a * &v[c]))
            .collect()
    }

    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        kernel_of_rows(self.data.clone(), self.cols)
    }
}

pub fn add_into(row: &mut SparseRow, c: usize, v: Rat) {
    if v.is_zero() {
        return;
    }
    match row.entry(c) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Reduced row echelon form of the span of `rows`. Returns the nonzero reduced
/// rows (pivot entry 1, ordered by pivot column) and the pivot columns.
pub fn row_echelon(rows: Vec<SparseRow>, ncols: usize) -> (Vec<SparseRow>, Vec<usize>) {
    let mut basis: Vec<SparseRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut row in rows {
        // reduce against existing pivots
        for (b, &p) in basis.iter().zip(&pivots) {
            if let Some(f) = row.get(&p).cloned() {
                for (&c, v) in b {
                    add_into(&mut row, c, -(v * &f));
                }
            }
        }
        let Some((&p, lead)) = row.iter().next() else {
            continue;
        };
        debug_assert!(p < ncols);
        let inv = lead.recip();
        let row: SparseRow = row.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        // eliminate the new pivot from previous rows
        for b in basis.iter_mut() {
            if let Some(f) = b.get(&p).cloned() {
                for (&c, v) in &row {
                    add_into(b, c, -(v * &f));
                }
            }
        }
        basis.push(row);
        pivots.push(p);
    }
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by_key(|&i| pivots[i]);
    let basis_sorted = order.iter().map(|&i| basis[i].clone()).collect();
    let pivots_sorted = order.iter().map(|&i| pivots[i]).collect();
    (basis_sorted, pivots_sorted)
}

pub fn kernel_of_rows(rows: Vec<SparseRow>, ncols: usize) -> Vec<Vec<Rat>> {
    let (rref, pivots) = row_echelon(rows, ncols);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    (0..ncols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![Rat::zero(); ncols];
            v[free] = Rat::one();
            for (row, &p) in rref.iter().zip(&pivots) {
                if let Some(x) = row.get(&free) {
                    v[p] = -x.clone();
                }
            }
            v
        })
        .collect()
}

/// A subspace of `Q^n` stored as its reduced row echelon basis, which is
/// canonical: two subspaces are equal iff their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: usize,
    pub basis: Vec<SparseRow>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn span<I: IntoIterator<Item = Vec<Rat>>>(ambient: usize, vectors: I) -> Self {
        let rows = vectors
            .into_iter()
            .map(|v| {
                assert_eq!(v.len(), ambient);
                v.into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        Self::span_sparse(ambient, rows)
    }

    pub fn span_sparse(ambient: usize, rows: Vec<SparseRow>) -> Self {
        let (basis, pivots) = row_echelon(rows, ambient);
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dense_basis(&self) -> Vec<Vec<Rat>> {
        self.basis
            .iter()
            .map(|row| {
                let mut v = vec![Rat::zero(); self.ambient];
                for (&c, x) in row {
                    v[c] = x.clone();
                }
                v
            })
            .collect()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut row: SparseRow = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| (c, x.clone()))
            .collect();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if let Some(f) = row.get(&p).cloned() {
                for (&c, x) in b {
                    add_into(&mut row, c, -(x * &f));
                }
            }
        }
        row.is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.dense_basis().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span_sparse(self.ambient, rows)
    }

    /// Image under a linear map.
    pub fn image(&self, m: &SparseMatrix) -> Subspace {
        Subspace::span(m.rows, self.dense_basis().iter().map(|v| m.mul_vec(v)))
    }
}

/// Express `v` as a combination of `basis` (rows), if possible.
pub fn solve_in_span(basis: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    // columns = basis vectors; augmented with v
    let n = basis.len();
    let dim = v.len();
    let rows: Vec<SparseRow> = (0..dim)
        .map(|i| {
            let mut r = SparseRow::new();
            for (j, b) in basis.iter().enumerate() {
                if !b[i].is_zero() {
                    r.insert(j, b[i].clone());
                }
            }
            if !v[i].is_zero() {
                r.insert(n, v[i].clone());
            }
            r
        })
        .collect();
    let (rref, pivots) = row_echelon(rows, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (row, &p) in rref.iter().zip(&pivots) {
        if let Some(val) = row.get(&n) {
            x[p] = val.clone();
        }
    }
    Some(x)
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}
