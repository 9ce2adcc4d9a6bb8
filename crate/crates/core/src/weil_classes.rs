//! Weil-type subspaces of `∧^{2n}` of a `4n`-dimensional rational
//! representation of a definite quaternion algebra `F`.
//!
//! The ambient space is `F^n` with `F` acting by left multiplication in each
//! coordinate. `K = Q(i) ⊂ F`; for `x = u + v i` the space `W_x` is the kernel
//! of `f(X) = X^2 + a X + b` with `X = ∧^{2n} x`, where `f` has roots
//! `σ(x)^{2n}` and `σ̄(x)^{2n}`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::PowerBasis;
use crate::linalg::{kernel_of_rows, q, Matrix, Rat, SparseMatrix, SparseRow, Subspace};
use crate::qalg::{AlgebraParams, QuatElem};

pub const WEDGE_CAP: usize = 12870;

/// Matrix of `v_1 ∧ ... ∧ v_k -> M v_1 ∧ ... ∧ M v_k` on the lexicographic basis.
pub fn exterior_action(m: &Matrix, k: usize) -> Result<SparseMatrix> {
    if k > m.rows() {
        return Err(Error::WedgeTooLarge { k, n: m.rows() });
    }
    PowerBasis::wedge(m.rows(), k).induced(m, WEDGE_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HModel {
    pub n: usize,
    pub params: AlgebraParams,
    /// Change of basis applied to every action matrix (`P M P^-1`).
    conj: Option<(Matrix, Matrix)>,
}

impl HModel {
    pub fn new(n: usize, params: AlgebraParams) -> Result<Self> {
        if n == 0 || 4 * n > 16 {
            return Err(Error::Precondition(format!("n = {n} outside 1..=4")));
        }
        Ok(HModel {
            n,
            params,
            conj: None,
        })
    }

    /// The same model in the basis given by the columns of `p`.
    pub fn conjugated(&self, p: Matrix) -> Result<Self> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Precondition("change of basis is singular".into()))?;
        Ok(HModel {
            conj: Some((p, inv)),
            ..self.clone()
        })
    }

    pub fn dim(&self) -> usize {
        4 * self.n
    }

    /// Left multiplication by `y` on `F^n`.
    pub fn mat(&self, y: &QuatElem) -> Matrix {
        let block = y.left_mul_matrix();
        let blocks: Vec<&Matrix> = (0..self.n).map(|_| &block).collect();
        let m = Matrix::block_diag(&blocks);
        match &self.conj {
            Some((p, inv)) => &(p * &m) * inv,
            None => m,
        }
    }

    pub fn quat(&self, coeffs: [i64; 4]) -> QuatElem {
        QuatElem::from_ints(&self.params, coeffs)
    }

    pub fn is_faithful_action(&self) -> bool {
        let (i, j) = (
            self.mat(&self.quat([0, 1, 0, 0])),
            self.mat(&self.quat([0, 0, 1, 0])),
        );
        let id = Matrix::identity(self.dim());
        &i * &i == id.scale(&self.params.r)
            && &j * &j == id.scale(&self.params.s)
            && &i * &j == -&(&j * &i)
    }
}

/// `x = u + v i` in `K`, described by `t = 2u` and `nrm = u^2 - r v^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KElement {
    pub u: Rat,
    pub v: Rat,
}

impl KElement {
    pub fn new(u: i64, v: i64) -> Self {
        KElement { u: q(u), v: q(v) }
    }

    pub fn trace(&self) -> Rat {
        &self.u * &q(2)
    }

    pub fn norm(&self, params: &AlgebraParams) -> Rat {
        &self.u * &self.u - &params.r * &self.v * &self.v
    }

    pub fn quat(&self, params: &AlgebraParams) -> QuatElem {
        QuatElem::new(
            params,
            self.u.clone(),
            self.v.clone(),
            Rat::zero(),
            Rat::zero(),
        )
    }

    pub fn label(&self) -> String {
        format!("{}+{}i", self.u, self.v)
    }
}

/// Coefficients `(a, b)` of `T^2 + aT + b` with roots `σ(x)^m`, `σ̄(x)^m`.
pub fn power_polynomial(t: &Rat, nrm: &Rat, m: usize) -> (Rat, Rat) {
    let mut p = vec![q(2), t.clone()];
    for k in 2..=m {
        let next = t * &p[k - 1] - nrm * &p[k - 2];
        p.push(next);
    }
    let mut b = q(1);
    for _ in 0..m {
        b = &b * nrm;
    }
    (-p[m].clone(), b)
}

/// Rows of `f(X)` for the element `x`.
fn weil_operator(model: &HModel, x: &KElement) -> Result<SparseMatrix> {
    if x.v.is_zero() {
        return Err(Error::RationalElement);
    }
    let k = 2 * model.n;
    let big = exterior_action(&model.mat(&x.quat(&model.params)), k)?;
    let (a, b) = power_polynomial(&x.trace(), &x.norm(&model.params), k);
    let id = SparseMatrix::identity(big.rows);
    Ok(big.mul(&big).add_scaled(&big, &a).add_scaled(&id, &b))
}

pub fn weil_kernel(model: &HModel, x: &KElement) -> Result<Subspace> {
    let op = weil_operator(model, x)?;
    Ok(Subspace::span(op.cols, op.kernel()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilSpace {
    pub space: Subspace,
    pub generators_used: Vec<KElement>,
}

/// Default cap on the ladder `1 + i, 2 + i, ...` in [`weil_space`].
pub const DEFAULT_LADDER: i64 = 20;

/// Intersection of `W_x` over `generators`, then over `1 + i, 2 + i, ...`
/// until two consecutive additions leave the dimension unchanged.
pub fn weil_space(model: &HModel, generators: &[KElement]) -> Result<WeilSpace> {
    weil_space_with_ladder(model, generators, DEFAULT_LADDER)
}

pub fn weil_space_with_ladder(
    model: &HModel,
    generators: &[KElement],
    ladder: i64,
) -> Result<WeilSpace> {
    if !generators.iter().any(|x| !x.v.is_zero()) {
        return Err(Error::RationalElement);
    }
    let mut rows: Vec<SparseRow> = Vec::new();
    let mut used = Vec::new();
    let mut dim = usize::MAX;
    let add = |x: &KElement, rows: &mut Vec<SparseRow>| -> Result<usize> {
        let op = weil_operator(model, x)?;
        rows.extend(op.data.into_iter().filter(|r| !r.is_empty()));
        Ok(kernel_of_rows(rows.clone(), op.cols).len())
    };
    for x in generators.iter().filter(|x| !x.v.is_zero()) {
        dim = add(x, &mut rows)?;
        used.push(x.clone());
    }
    let mut stable = 0;
    let mut u = 1;
    while stable < 2 && u <= ladder {
        let x = KElement::new(u, 1);
        let d = add(&x, &mut rows)?;
        used.push(x);
        stable = if d == dim { stable + 1 } else { 0 };
        dim = d;
        u += 1;
    }
    let ambient = PowerBasis::wedge(model.dim(), 2 * model.n).dim();
    let space = Subspace::span(ambient, kernel_of_rows(rows, ambient));
    if space.dim() < 2 {
        return Err(Error::Model(format!("W_K has dimension {}", space.dim())));
    }
    Ok(WeilSpace {
        space,
        generators_used: used,
    })
}

/// Elements whose translates of `W_K` are spanned, in order.
pub fn translate_elements() -> Vec<[i64; 4]> {
    vec![
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [1, 1, 1, 0],
        [1, 1, 1, 1],
        [2, 1, 0, 0],
        [1, 2, 1, 0],
        [1, 0, 2, 1],
        [2, 1, 1, 1],
        [1, 1, 0, 2],
        [3, 1, 2, 0],
        [1, 3, 0, 2],
        [2, 0, 1, 3],
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionSpan {
    pub space: Subspace,
    pub translates_used: usize,
}

/// Span of `∧^{2n} y · W_K` over the translate list, stopping once the first
/// eight are used and two further translates add nothing.
pub fn quaternion_span(model: &HModel, wk: &Subspace) -> Result<QuaternionSpan> {
    let mut span = wk.clone();
    let mut stable = 0;
    for (idx, y) in translate_elements().iter().enumerate() {
        let ext = exterior_action(&model.mat(&model.quat(*y)), 2 * model.n)?;
        let next = span.sum(&wk.image(&ext));
        stable = if next.dim() == span.dim() {
            stable + 1
        } else {
            0
        };
        span = next;
        if idx + 1 >= 8 && stable >= 2 {
            return Ok(QuaternionSpan {
                space: span,
                translates_used: idx + 1,
            });
        }
    }
    Err(Error::Model(
        "quaternion span did not stabilize within 20 translates".into(),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilReport {
    pub n: usize,
    pub params: String,
    pub dim_wk: usize,
    pub dim_wf: usize,
    pub generators_used: Vec<String>,
    pub translates_used: usize,
    pub wk_in_wf: bool,
    /// `∧^{2n} i` and `∧^{2n} j` map `W_F` into itself.
    pub wf_stable: bool,
    /// `W_K` lies in `W_x` for a further test element.
    pub wk_in_test_wx: bool,
}

pub fn weil_report(n: usize, params: AlgebraParams) -> Result<WeilReport> {
    report_for_model(&HModel::new(n, params)?, DEFAULT_LADDER)
}

pub fn report_for_model(model: &HModel, ladder: i64) -> Result<WeilReport> {
    let model = model.clone();
    let n = model.n;
    let wk = weil_space_with_ladder(&model, &[KElement::new(1, 1)], ladder)?;
    let wf = quaternion_span(&model, &wk.space)?;
    let wf_stable =
        [[0, 1, 0, 0], [0, 0, 1, 0]]
            .iter()
            .try_fold(true, |acc, y| -> Result<bool> {
                let ext = exterior_action(&model.mat(&model.quat(*y)), 2 * n)?;
                Ok(acc && wf.space.image(&ext) == wf.space)
            })?;
    let test = weil_kernel(&model, &KElement::new(3, -2))?;
    Ok(WeilReport {
        n,
        params: model.params.to_string(),
        dim_wk: wk.space.dim(),
        dim_wf: wf.space.dim(),
        generators_used: wk.generators_used.iter().map(KElement::label).collect(),
        translates_used: wf.translates_used,
        wk_in_wf: wf.space.contains_subspace(&wk.space),
        wf_stable,
        wk_in_test_wx: test.contains_subspace(&wk.space),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ham(n: usize) -> HModel {
        HModel::new(n, AlgebraParams::hamilton()).unwrap()
    }

    #[test]
    fn exterior_action_basics() {
        let id = Matrix::identity(4);
        assert_eq!(
            exterior_action(&id, 2).unwrap().to_dense(),
            Matrix::identity(6)
        );
        let c = id.scale(&q(3));
        assert_eq!(
            exterior_action(&c, 2).unwrap().to_dense(),
            Matrix::identity(6).scale(&q(9))
        );
        let m = Matrix::from_i64(&[
            vec![1, 2, 0, 0],
            vec![3, 1, 0, 1],
            vec![0, 0, 2, 1],
            vec![1, 0, 0, 1],
        ]);
        assert_eq!(exterior_action(&m, 4).unwrap().get(0, 0), m.det());
        assert!(exterior_action(&m, 5).is_err());
    }

    #[test]
    fn polynomial_coefficients() {
        assert_eq!(power_polynomial(&q(2), &q(2), 2), (q(0), q(4)));
        assert_eq!(power_polynomial(&q(0), &q(1), 2), (q(2), q(1)));
        assert_eq!(power_polynomial(&q(2), &q(2), 4), (q(8), q(16)));
    }

    #[test]
    fn weil_kernel_examples() {
        assert_eq!(weil_kernel(&ham(1), &KElement::new(1, 1)).unwrap().dim(), 2);
        assert_eq!(weil_kernel(&ham(1), &KElement::new(0, 1)).unwrap().dim(), 2);
        assert_eq!(weil_kernel(&ham(2), &KElement::new(1, 1)).unwrap().dim(), 2);
        assert_eq!(
            weil_kernel(&ham(1), &KElement::new(2, 0)).unwrap_err(),
            Error::RationalElement
        );
    }

    #[test]
    fn conjugate_element_gives_same_space() {
        let m = ham(1);
        let x = KElement::new(1, 2);
        let xbar = KElement::new(1, -2);
        assert_eq!(
            weil_kernel(&m, &x).unwrap(),
            weil_kernel(&m, &xbar).unwrap()
        );
    }

    #[test]
    fn reports() {
        for n in [1, 2] {
            for (r, s) in [(-1, -1), (-1, -3)] {
                let rep = weil_report(n, AlgebraParams::new(q(r), q(s)).unwrap()).unwrap();
                assert_eq!((rep.dim_wk, rep.dim_wf), (2, 2 * n + 1), "{rep:?}");
                assert!(rep.wk_in_wf && rep.wf_stable && rep.wk_in_test_wx);
            }
        }
    }

    #[test]
    fn conjugated_realization() {
        let p = Matrix::from_i64(&[
            vec![1, 1, 0, 0],
            vec![0, 1, 2, 0],
            vec![0, 0, 1, 1],
            vec![1, 0, 0, 1],
        ]);
        let m = ham(1).conjugated(p).unwrap();
        assert!(m.is_faithful_action());
        let rep = report_for_model(&m, DEFAULT_LADDER).unwrap();
        assert_eq!((rep.dim_wk, rep.dim_wf), (2, 3));
    }

    #[test]
    fn faithful() {
        assert!(ham(2).is_faithful_action());
        let m = HModel::new(1, AlgebraParams::new(q(-2), q(-5)).unwrap()).unwrap();
        assert!(m.is_faithful_action());
    }
}
