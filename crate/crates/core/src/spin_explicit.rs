//! Matrix model of the spin representation of `so(7)` on `S = ∧^• R`,
//! `R = <e_1, e_2, e_3>`, and the invariant line in `∧^4 S`.
//!
//! `C^7` carries `Q = x_7^2 + sum x_i x_{i+3}` with polarization
//! `B(e_i, e_{i+3}) = 1/2`, `B(e_7, e_7) = 1`, and `so(7) = ∧^2 C^7` acts by
//! `(a ∧ b) v = 2 B(b, v) a - 2 B(a, v) b`. Spinors `e_I` are ordered
//! `∅, 1, 2, 3, 12, 13, 23, 123`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::PowerBasis;
use crate::lie_engine::{atom, AlgebraType, WeightMultiset, WeightVec, Q64};
use crate::linalg::{kernel_of_rows, q, qf, solve_in_span, Matrix, Rat, SparseMatrix, SparseRow};

/// Subsets of `{1,2,3}` as bit masks (bit `i-1` for `i`), in basis order.
pub const SPIN_BASIS: [u8; 8] = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111];

pub fn spin_index(mask: u8) -> usize {
    SPIN_BASIS
        .iter()
        .position(|&m| m == mask)
        .expect("mask below 8")
}

pub fn subset_label(mask: u8) -> String {
    if mask == 0 {
        return "∅".into();
    }
    (1..=3)
        .filter(|i| mask & (1 << (i - 1)) != 0)
        .map(|i| i.to_string())
        .collect()
}

/// Weight `(1/2)(sum_{i in I} L_i - sum_{j not in I} L_j)`.
pub fn subset_weight(mask: u8) -> WeightVec {
    WeightVec(
        (0..3)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    Q64::new(1, 2)
                } else {
                    Q64::new(-1, 2)
                }
            })
            .collect(),
    )
}

pub fn quadratic_form() -> Matrix {
    let mut b = Matrix::zeros(7, 7);
    for i in 0..3 {
        b[(i, i + 3)] = qf(1, 2);
        b[(i + 3, i)] = qf(1, 2);
    }
    b[(6, 6)] = q(1);
    b
}

/// Endomorphism of `C^7` given by `e_a ∧ e_b` (1-based indices).
pub fn so7_endomorphism(a: usize, b: usize) -> Matrix {
    let form = quadratic_form();
    let mut m = Matrix::zeros(7, 7);
    for v in 0..7 {
        m[(a - 1, v)] += &(&form[(b - 1, v)] * &q(2));
        m[(b - 1, v)] -= &(&form[(a - 1, v)] * &q(2));
    }
    m
}

/// Basis of `∧^2 C^7`: pairs `(a, b)`, `1 <= a < b <= 7`, lexicographic.
pub fn so7_pairs() -> Vec<(usize, usize)> {
    (1..=7)
        .flat_map(|a| (a + 1..=7).map(move |b| (a, b)))
        .collect()
}

fn wedge_op(i: usize) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    let bit = 1u8 << (i - 1);
    for (col, &mask) in SPIN_BASIS.iter().enumerate() {
        if mask & bit == 0 {
            let below = (mask & (bit - 1)).count_ones();
            m[(spin_index(mask | bit), col)] = q(if below % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

fn contraction_op(i: usize) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    let bit = 1u8 << (i - 1);
    for (col, &mask) in SPIN_BASIS.iter().enumerate() {
        if mask & bit != 0 {
            let below = (mask & (bit - 1)).count_ones();
            m[(spin_index(mask & !bit), col)] = q(if below % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

fn parity_op() -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    for (col, &mask) in SPIN_BASIS.iter().enumerate() {
        m[(col, col)] = q(if mask.count_ones() % 2 == 0 { 1 } else { -1 });
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinRep {
    /// Scalars in front of the wedge, contraction and parity operators.
    pub scalars: [Rat; 3],
    pub pairs: Vec<(usize, usize)>,
    pub rho: Vec<Matrix>,
}

impl SpinRep {
    /// `gamma(e_i) = c1 e_i∧`, `gamma(e_{i+3}) = c2 ι_i`, `gamma(e_7) = c3 P`,
    /// and `rho(a ∧ b) = gamma(a) gamma(b) - B(a, b)`.
    pub fn with_scalars(c1: Rat, c2: Rat, c3: Rat) -> Self {
        let gamma = |v: usize| -> Matrix {
            match v {
                1..=3 => wedge_op(v).scale(&c1),
                4..=6 => contraction_op(v - 3).scale(&c2),
                _ => parity_op().scale(&c3),
            }
        };
        let form = quadratic_form();
        let pairs = so7_pairs();
        let rho = pairs
            .iter()
            .map(|&(a, b)| {
                &(&gamma(a) * &gamma(b)) - &Matrix::identity(8).scale(&form[(a - 1, b - 1)])
            })
            .collect();
        SpinRep {
            scalars: [c1, c2, c3],
            pairs,
            rho,
        }
    }

    pub fn rho(&self, a: usize, b: usize) -> &Matrix {
        let idx = self
            .pairs
            .iter()
            .position(|&p| p == (a, b))
            .expect("pair with a < b");
        &self.rho[idx]
    }

    /// `(e_i ∧ e_7) e_I = (-1)^{#I} e_i ∧ e_I` for all `i`, `I`.
    pub fn satisfies_displayed_formula(&self) -> bool {
        (1..=3).all(|i| {
            let expected = &wedge_op(i) * &parity_op();
            *self.rho(i, 7) == expected
        })
    }

    /// Check `[rho(X), rho(Y)] = rho([X, Y])` on every unordered pair of basis elements.
    pub fn check_brackets(&self) -> BracketReport {
        let flat = |m: &Matrix| -> Vec<Rat> { (0..7).flat_map(|r| m.row(r).to_vec()).collect() };
        let ends: Vec<Matrix> = self
            .pairs
            .iter()
            .map(|&(a, b)| so7_endomorphism(a, b))
            .collect();
        let basis: Vec<Vec<Rat>> = ends.iter().map(flat).collect();
        let mut failures = Vec::new();
        let mut checked = 0;
        for x in 0..self.pairs.len() {
            for y in x + 1..self.pairs.len() {
                checked += 1;
                let br = ends[x].commutator(&ends[y]);
                let ok = match solve_in_span(&basis, &flat(&br)) {
                    Some(coeffs) => {
                        let mut rhs = Matrix::zeros(8, 8);
                        for (c, m) in coeffs.iter().zip(&self.rho) {
                            if !c.is_zero() {
                                rhs = &rhs + &m.scale(c);
                            }
                        }
                        self.rho[x].commutator(&self.rho[y]) == rhs
                    }
                    None => false,
                };
                if !ok {
                    failures.push((self.pairs[x], self.pairs[y]));
                }
            }
        }
        BracketReport { checked, failures }
    }

    /// Weights read off the diagonal action of `H_i = e_i ∧ e_{i+3}`.
    pub fn cartan_weights(&self) -> Option<Vec<WeightVec>> {
        let hs: Vec<&Matrix> = (1..=3).map(|i| self.rho(i, i + 3)).collect();
        let mut out = Vec::with_capacity(8);
        for s in 0..8 {
            let mut w = Vec::with_capacity(3);
            for h in &hs {
                if (0..8).any(|t| t != s && !h[(t, s)].is_zero()) {
                    return None;
                }
                let d = &h[(s, s)];
                w.push(Q64::new(
                    d.numer().try_into().ok()?,
                    d.denom().try_into().ok()?,
                ));
            }
            out.push(WeightVec(w));
        }
        Some(out)
    }

    /// Derivations induced on a power of `S` by all 21 generators.
    pub fn derivations(&self, basis: &PowerBasis) -> Vec<SparseMatrix> {
        self.rho.iter().map(|m| basis.derivation(m)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketReport {
    pub checked: usize,
    pub failures: Vec<((usize, usize), (usize, usize))>,
}

impl BracketReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Search small scalar normalizations for one satisfying both the displayed
/// formula for `rho(e_i ∧ e_7)` and bracket compatibility.
pub fn build_spin_rep() -> Result<SpinRep> {
    let cands = [q(1), q(-1), q(2), q(-2), qf(1, 2), qf(-1, 2)];
    for c1 in &cands {
        for c2 in &cands {
            for c3 in &cands {
                let rep = SpinRep::with_scalars(c1.clone(), c2.clone(), c3.clone());
                if rep.satisfies_displayed_formula() && rep.check_brackets().passed() {
                    return Ok(rep);
                }
            }
        }
    }
    Err(Error::SpinConstruction(
        "no scalar normalization satisfies both constraints".into(),
    ))
}

/// Coordinates on the 70 monomials of `∧^4 S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wedge4Vector {
    pub coeffs: Vec<Rat>,
}

pub fn wedge4_basis() -> PowerBasis {
    PowerBasis::wedge(8, 4)
}

pub fn monomial_label(m: &[usize]) -> String {
    let parts: Vec<String> = m
        .iter()
        .map(|&i| format!("e{}", subset_label(SPIN_BASIS[i])))
        .collect();
    parts.join("∧")
}

fn monomial_weight(m: &[usize]) -> WeightVec {
    let mut w = vec![Q64::zero(); 3];
    for &i in m {
        for (a, b) in w.iter_mut().zip(subset_weight(SPIN_BASIS[i]).0) {
            *a += b;
        }
    }
    WeightVec(w)
}

/// The weight-zero monomials of `∧^4 S`, in monomial order.
pub fn weight_zero_basis() -> Vec<Vec<usize>> {
    wedge4_basis()
        .monomials
        .into_iter()
        .filter(|m| monomial_weight(m).is_zero())
        .collect()
}

/// Monomial `e_∅ ∧ e_12 ∧ e_13 ∧ e_23`, the only one lying in `∧^4 W`,
/// `W = <e_∅, e_12, e_13, e_23>`.
pub fn even_monomial() -> Vec<usize> {
    [0b000, 0b011, 0b101, 0b110]
        .iter()
        .map(|&m| spin_index(m))
        .collect()
}

pub fn project_even(v: &Wedge4Vector) -> Rat {
    let idx = wedge4_basis()
        .index_of(&even_monomial())
        .expect("monomial exists");
    v.coeffs[idx].clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub vector: Wedge4Vector,
    pub kernel_dim: usize,
    /// `(monomial, coefficient)` on the weight-zero monomials.
    pub terms: Vec<(String, Rat)>,
    pub fixed_by_all_generators: bool,
}

/// The invariant line of `∧^4 S`: joint kernel on the weight-zero subspace of
/// the derivations of `rho(e_i ∧ e_7)`, normalized so that the coefficient of
/// `e_∅ ∧ e_12 ∧ e_13 ∧ e_23` is 2.
pub fn so7_invariant(rep: &SpinRep) -> Result<InvariantReport> {
    let basis = wedge4_basis();
    let zero = weight_zero_basis();
    let cols: Vec<usize> = zero
        .iter()
        .map(|m| basis.index_of(m).expect("monomial"))
        .collect();
    let mut rows: Vec<SparseRow> = Vec::new();
    for i in 1..=3 {
        let d = basis.derivation(rep.rho(i, 7));
        for r in 0..basis.dim() {
            let row: SparseRow = cols
                .iter()
                .enumerate()
                .filter_map(|(t, &c)| {
                    let v = d.get(r, c);
                    (!v.is_zero()).then_some((t, v))
                })
                .collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    let ker = kernel_of_rows(rows, zero.len());
    if ker.len() != 1 {
        return Err(Error::KernelDimension(ker.len()));
    }
    let mut coeffs = vec![Rat::zero(); basis.dim()];
    for (t, &c) in cols.iter().enumerate() {
        coeffs[c] = ker[0][t].clone();
    }
    let mut v = Wedge4Vector { coeffs };
    let lead = project_even(&v);
    if !lead.is_zero() {
        let s = q(2) / lead;
        v.coeffs.iter_mut().for_each(|x| *x = &*x * &s);
    }
    let fixed = rep
        .derivations(&basis)
        .iter()
        .all(|d| d.mul_vec(&v.coeffs).iter().all(Zero::is_zero));
    let terms = zero
        .iter()
        .zip(&cols)
        .map(|(m, &c)| (monomial_label(m), v.coeffs[c].clone()))
        .collect();
    Ok(InvariantReport {
        vector: v,
        kernel_dim: 1,
        terms,
        fixed_by_all_generators: fixed,
    })
}

/// The eight terms of the invariant as printed in the literature, as
/// `(subset masks, coefficient)`.
pub const PRINTED_INVARIANT: [([u8; 4], i64); 8] = [
    ([0b000, 0b011, 0b101, 0b110], 2),
    ([0b000, 0b100, 0b011, 0b111], -1),
    ([0b000, 0b010, 0b101, 0b111], 1),
    ([0b000, 0b001, 0b110, 0b111], -1),
    ([0b010, 0b100, 0b011, 0b101], 1),
    ([0b001, 0b100, 0b011, 0b101], -1),
    ([0b001, 0b010, 0b101, 0b110], 1),
    ([0b001, 0b010, 0b100, 0b111], 2),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedTermCheck {
    pub monomial: String,
    pub printed: i64,
    pub weight_zero: bool,
    pub computed: String,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedComparison {
    pub terms: Vec<PrintedTermCheck>,
    /// Weight-zero monomials with nonzero computed coefficient that the
    /// printed formula omits, with their coefficients.
    pub missing: Vec<(String, String)>,
}

impl PrintedComparison {
    pub fn all_agree(&self) -> bool {
        self.terms.iter().all(|t| t.agrees) && self.missing.is_empty()
    }
}

pub fn compare_with_printed(inv: &InvariantReport) -> PrintedComparison {
    let basis = wedge4_basis();
    let mut seen = Vec::new();
    let terms = PRINTED_INVARIANT
        .iter()
        .map(|(masks, coef)| {
            let mut idx: Vec<usize> = masks.iter().map(|&m| spin_index(m)).collect();
            let sign = crate::exterior::sort_with_sign(&mut idx).unwrap_or(0);
            let pos = basis.index_of(&idx).expect("distinct spinors");
            seen.push(pos);
            let computed = &inv.vector.coeffs[pos] * &q(sign);
            PrintedTermCheck {
                monomial: monomial_label(&idx),
                printed: *coef,
                weight_zero: monomial_weight(&idx).is_zero(),
                computed: computed.to_string(),
                agrees: computed == q(*coef),
            }
        })
        .collect();
    let missing = (0..basis.dim())
        .filter(|p| !seen.contains(p) && !inv.vector.coeffs[*p].is_zero())
        .map(|p| {
            (
                monomial_label(&basis.monomials[p]),
                inv.vector.coeffs[p].to_string(),
            )
        })
        .collect();
    PrintedComparison { terms, missing }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCrossCheck {
    pub spin_match: bool,
    pub wedge4_match: bool,
    pub weight_zero_mult: u64,
    pub wedge2_invariants: usize,
    pub sym2_invariants: usize,
}

fn joint_kernel_dim(rep: &SpinRep, basis: &PowerBasis) -> usize {
    let rows: Vec<SparseRow> = rep
        .derivations(basis)
        .into_iter()
        .flat_map(|d| d.data)
        .filter(|r| !r.is_empty())
        .collect();
    kernel_of_rows(rows, basis.dim()).len()
}

/// Compare the eigenvalues of the matrix model with the weight calculus.
pub fn cross_check_weights(rep: &SpinRep) -> Result<WeightCrossCheck> {
    let b3 = AlgebraType::b(3);
    let weights = rep
        .cartan_weights()
        .ok_or_else(|| Error::SpinConstruction("Cartan not diagonal".into()))?;
    let mut model = WeightMultiset::default();
    for w in &weights {
        model = model.dsum(&WeightMultiset::single(w.clone()));
    }
    let gamma = atom(&b3, "Γ")?;
    let basis = wedge4_basis();
    let mut model4 = WeightMultiset::default();
    for m in &basis.monomials {
        let mut w = vec![Q64::zero(); 3];
        for &i in m {
            for (a, b) in w.iter_mut().zip(&weights[i].0) {
                *a += b;
            }
        }
        model4 = model4.dsum(&WeightMultiset::single(WeightVec(w)));
    }
    let engine4 = gamma.wedge(4, &b3)?;
    Ok(WeightCrossCheck {
        spin_match: model == gamma,
        wedge4_match: model4 == engine4,
        weight_zero_mult: model4.mult(&b3.zero()),
        wedge2_invariants: joint_kernel_dim(rep, &PowerBasis::wedge(8, 2)),
        sym2_invariants: joint_kernel_dim(rep, &PowerBasis::sym(8, 2)),
    })
}

/// Is `rho(e_1 ∧ e_7) e_∅ = e_1` and `rho(e_1 ∧ e_7) e_1 = 0`.
pub fn sample_action_holds(rep: &SpinRep) -> bool {
    let m = rep.rho(1, 7);
    let e = |mask: u8| spin_index(mask);
    m.column(e(0))
        .iter()
        .enumerate()
        .all(|(r, x)| if r == e(1) { x.is_one() } else { x.is_zero() })
        && m.column(e(1)).iter().all(Zero::is_zero)
}
