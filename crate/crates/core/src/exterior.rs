//! Exterior and symmetric powers of a finite-dimensional space with its
//! standard basis: monomial bases, induced derivations and induced maps.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rat, SparseMatrix};

/// Increasing `k`-tuples from `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Non-decreasing `k`-tuples from `0..n` in lexicographic order.
pub fn multicombinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Sort `idx` in place and return the sign of the sorting permutation, or
/// `None` if an index repeats.
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

#[derive(Clone, Debug)]
pub struct PowerBasis {
    pub n: usize,
    pub k: usize,
    pub symmetric: bool,
    pub monomials: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl PowerBasis {
    pub fn wedge(n: usize, k: usize) -> Self {
        Self::build(n, k, false, combinations(n, k))
    }

    pub fn sym(n: usize, k: usize) -> Self {
        Self::build(n, k, true, multicombinations(n, k))
    }

    fn build(n: usize, k: usize, symmetric: bool, monomials: Vec<Vec<usize>>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        PowerBasis {
            n,
            k,
            symmetric,
            monomials,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &[usize]) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Normalize an index tuple into `(monomial index, sign)`.
    fn normalize(&self, mut idx: Vec<usize>) -> Option<(usize, i64)> {
        let sign = if self.symmetric {
            idx.sort_unstable();
            1
        } else {
            sort_with_sign(&mut idx)?
        };
        Some((self.index[&idx], sign))
    }

    /// The derivation `X(v_1 ... v_k) = sum_t v_1 ... X v_t ... v_k` induced by `x`.
    pub fn derivation(&self, x: &Matrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for (col, mono) in self.monomials.iter().enumerate() {
            for t in 0..self.k {
                // in the symmetric case a repeated factor is visited once per copy
                for s in 0..self.n {
                    let a = &x[(s, mono[t])];
                    if a.is_zero() {
                        continue;
                    }
                    let mut idx = mono.clone();
                    idx[t] = s;
                    if let Some((row, sign)) = self.normalize(idx) {
                        out.add_entry(row, col, a * Rat::from_integer(sign.into()));
                    }
                }
            }
        }
        out
    }

    /// The induced map `v_1 ∧ ... ∧ v_k -> x v_1 ∧ ... ∧ x v_k` (exterior only).
    pub fn induced(&self, x: &Matrix, cap: usize) -> Result<SparseMatrix> {
        if self.symmetric {
            return Err(Error::Precondition(
                "induced map is implemented for exterior powers".into(),
            ));
        }
        if self.dim() > cap {
            return Err(Error::DimensionOverflow {
                dim: self.dim(),
                cap,
            });
        }
        let mut out = SparseMatrix::zeros(self.dim(), self.dim());
        for (col, mono) in self.monomials.iter().enumerate() {
            // expand x e_{m_1} ∧ ... ∧ x e_{m_k} factor by factor
            let mut acc: HashMap<Vec<usize>, Rat> =
                HashMap::from([(Vec::new(), Rat::from_integer(1.into()))]);
            for &m in mono {
                let mut next: HashMap<Vec<usize>, Rat> = HashMap::new();
                for (partial, c) in &acc {
                    for s in 0..self.n {
                        let a = &x[(s, m)];
                        if a.is_zero() || partial.contains(&s) {
                            continue;
                        }
                        let mut p = partial.clone();
                        p.push(s);
                        let e = next.entry(p).or_insert_with(Rat::zero);
                        *e += c * a;
                    }
                }
                acc = next;
            }
            for (idx, c) in acc {
                if c.is_zero() {
                    continue;
                }
                let (row, sign) = self.normalize(idx).expect("distinct indices");
                out.add_entry(row, col, c * Rat::from_integer(sign.into()));
            }
        }
        Ok(out)
    }
}
