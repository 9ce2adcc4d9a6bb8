//! Integer lattices: Smith invariants, saturated integer kernels and
//! coordinates with respect to a lattice basis.

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::linalg::{solve_in_span, Matrix, Rat};

pub type IntMatrix = Vec<Vec<i64>>;

/// Nonzero invariant factors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_invariants(m: &IntMatrix) -> Vec<i64> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i64>> = m.clone();
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.map_or(true, |(br, bc)| x.abs() < a[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t];
            let mut dirty = false;
            for r in t + 1..rows {
                let f = Integer::div_floor(&a[r][t], &p);
                if f != 0 {
                    for c in t..cols {
                        a[r][c] -= f * a[t][c];
                    }
                }
                if a[r][t] != 0 {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                let f = Integer::div_floor(&a[t][c], &p);
                if f != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[c] -= f * row[t];
                    }
                }
                if a[t][c] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // divisibility condition on the remaining block
                let bad = (t + 1..rows)
                    .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                    .find(|&(r, c)| a[r][c] % p != 0);
                match bad {
                    None => break,
                    Some((r, _)) => {
                        for c in t..cols {
                            a[t][c] += a[r][c];
                        }
                        continue;
                    }
                }
            }
            // move smallest nonzero entry of row/column t into the pivot
            let mut best = (t, t);
            for r in t..rows {
                if a[r][t] != 0 && a[r][t].abs() < a[best.0][best.1].abs() {
                    best = (r, t);
                }
            }
            for c in t..cols {
                if a[t][c] != 0 && a[t][c].abs() < a[best.0][best.1].abs() {
                    best = (t, c);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        out.push(a[t][t].abs());
        t += 1;
    }
    out
}

/// Z-basis of `{x in Z^n : A x = 0}`. The result spans a saturated sublattice.
pub fn integer_kernel(a: &IntMatrix, n: usize) -> Vec<Vec<i64>> {
    let m = a.len();
    // column operations on A, tracked in V (n x n), V's columns stored as rows of vcols
    let mut cols: Vec<Vec<i64>> = (0..n).map(|c| (0..m).map(|r| a[r][c]).collect()).collect();
    let mut v: Vec<Vec<i64>> = (0..n)
        .map(|c| (0..n).map(|r| i64::from(r == c)).collect())
        .collect();
    let mut pivot_col = 0;
    for r in 0..m {
        if pivot_col >= n {
            break;
        }
        loop {
            // column with smallest nonzero entry in row r among pivot_col..n
            let best = (pivot_col..n)
                .filter(|&c| cols[c][r] != 0)
                .min_by_key(|&c| cols[c][r].abs());
            let Some(b) = best else { break };
            cols.swap(pivot_col, b);
            v.swap(pivot_col, b);
            let p = cols[pivot_col][r];
            let mut done = true;
            for c in pivot_col + 1..n {
                let f = Integer::div_floor(&cols[c][r], &p);
                if f != 0 {
                    for i in 0..m {
                        cols[c][i] -= f * cols[pivot_col][i];
                    }
                    for i in 0..n {
                        v[c][i] -= f * v[pivot_col][i];
                    }
                }
                if cols[c][r] != 0 {
                    done = false;
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    (0..n)
        .filter(|&c| cols[c].iter().all(|&x| x == 0))
        .map(|c| v[c].clone())
        .collect()
}

/// A sublattice of `Z^ambient` given by a basis (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    pub ambient: usize,
    pub basis: IntMatrix,
}

impl IntLattice {
    pub fn new(ambient: usize, basis: IntMatrix) -> Self {
        debug_assert!(basis.iter().all(|b| b.len() == ambient));
        IntLattice { ambient, basis }
    }

    pub fn rank(&self) -> usize {
        to_rational(&self.basis, self.ambient).rank()
    }

    /// Elementary divisors of the inclusion into `Z^ambient`.
    pub fn elementary_divisors(&self) -> Vec<i64> {
        smith_invariants(&self.basis)
    }

    /// The quotient `Z^ambient / L` is torsion free.
    pub fn is_saturated(&self) -> bool {
        self.elementary_divisors().iter().all(|&d| d == 1)
    }

    /// Rational coordinates of `v` in this basis, if `v` lies in the Q-span.
    pub fn rational_coords(&self, v: &[i64]) -> Option<Vec<Rat>> {
        let basis: Vec<Vec<Rat>> = self.basis.iter().map(|b| ints_to_rats(b)).collect();
        solve_in_span(&basis, &ints_to_rats(v))
    }

    /// Integer coordinates of `v`, if `v` lies in the lattice.
    pub fn coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.rational_coords(v)?.iter().map(rat_to_i64).collect()
    }
}

pub fn ints_to_rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| crate::linalg::q(x)).collect()
}

pub fn rat_to_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn to_rational(m: &IntMatrix, cols: usize) -> Matrix {
    if m.is_empty() {
        return Matrix::zeros(0, cols);
    }
    Matrix::from_i64(m)
}

pub fn from_rational(m: &Matrix) -> Option<IntMatrix> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(rat_to_i64).collect())
        .collect()
}

pub fn int_det(m: &IntMatrix) -> i64 {
    let d = to_rational(m, m.len()).det();
    debug_assert!(d.is_integer());
    rat_to_i64(&d).expect("determinant of an integer matrix fits i64")
}

pub fn int_mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| row[k] * b[k][c]).sum())
                .collect()
        })
        .collect()
}

pub fn int_mat_vec(a: &IntMatrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn int_identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
        .collect()
}

pub fn int_transpose(a: &IntMatrix) -> IntMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| a.iter().map(|row| row[c]).collect())
        .collect()
}

pub fn is_zero_int(v: &[i64]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smith_of_diagonal_like() {
        assert_eq!(smith_invariants(&vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(
            smith_invariants(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
            vec![2, 6, 12]
        );
        assert_eq!(
            smith_invariants(&vec![vec![0, 0], vec![0, 0]]),
            Vec::<i64>::new()
        );
    }

    #[test]
    fn kernel_is_saturated() {
        // x + y + 2z = 0 over Z
        let a = vec![vec![1, 1, 2]];
        let k = integer_kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(int_mat_vec(&a, v), vec![0]);
        }
        assert!(IntLattice::new(3, k).is_saturated());
        // 2x - 2y = 0: kernel generated by (1,1), not (2,2)
        let k = integer_kernel(&vec![vec![2, -2]], 2);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].iter().map(|x| x.abs()).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn coords_detects_non_membership() {
        let l = IntLattice::new(2, vec![vec![2, 0], vec![0, 1]]);
        assert_eq!(l.coords(&[4, 3]), Some(vec![2, 3]));
        assert_eq!(l.coords(&[1, 0]), None);
        assert!(!l.is_saturated());
    }
}
