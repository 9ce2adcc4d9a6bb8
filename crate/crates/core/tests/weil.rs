use hodge_core::linalg::{q, Matrix};
use hodge_core::qalg::AlgebraParams;
use hodge_core::weil_classes::{
    exterior_action, power_polynomial, report_for_model, weil_kernel, weil_report, weil_space,
    HModel, KElement,
};
use hodge_core::Error;
use num_traits::Zero;
use proptest::prelude::*;

/// `(u + v sqrt(r))^m` as a pair `(A, B)` meaning `A + B sqrt(r)`.
fn conj_power(u: i64, v: i64, r: i64, m: usize) -> (i64, i64) {
    (0..m).fold((1, 0), |(a, b), _| (a * u + b * v * r, a * v + b * u))
}

proptest! {
    #[test]
    fn power_polynomial_has_conjugate_roots(u in -4i64..=4, v in -4i64..=4, r in -5i64..=-1, m in 1usize..=6) {
        let (a, b) = conj_power(u, v, r, m);
        let t = q(2 * u);
        let nrm = q(u * u - r * v * v);
        let (ca, cb) = power_polynomial(&t, &nrm, m);
        prop_assert_eq!(ca, q(-2 * a));
        prop_assert_eq!(cb, q(a * a - r * b * b));
    }
}

fn params(r: i64, s: i64) -> AlgebraParams {
    AlgebraParams::new(q(r), q(s)).unwrap()
}

#[test]
fn dimensions_for_several_algebras() {
    for (r, s) in [(-1, -1), (-1, -3), (-2, -5)] {
        let r1 = weil_report(1, params(r, s)).unwrap();
        assert_eq!((r1.dim_wk, r1.dim_wf), (2, 3), "n = 1, ({r},{s})");
        assert!(r1.wk_in_wf && r1.wf_stable && r1.wk_in_test_wx);
    }
    let r2 = weil_report(2, params(-1, -1)).unwrap();
    assert_eq!((r2.dim_wk, r2.dim_wf), (2, 5));
    assert!(r2.wk_in_wf && r2.wf_stable && r2.wk_in_test_wx);
}

#[test]
fn single_kernel_is_two_dimensional_for_generic_element() {
    // eigenvalues sigma^a sigma-bar^b with a + b = 2n; only a or b = 2n hit the roots
    let model = HModel::new(1, params(-1, -1)).unwrap();
    for (u, v) in [(1, 1), (2, 1), (3, -2)] {
        assert_eq!(weil_kernel(&model, &KElement::new(u, v)).unwrap().dim(), 2);
    }
}

#[test]
fn weil_space_is_stable_under_k() {
    let model = HModel::new(1, params(-1, -3)).unwrap();
    let wk = weil_space(&model, &[KElement::new(1, 1)]).unwrap().space;
    for x in [KElement::new(0, 1), KElement::new(5, 3)] {
        let ext = exterior_action(&model.mat(&x.quat(&model.params)), 2).unwrap();
        assert_eq!(wk.image(&ext), wk);
    }
}

#[test]
fn dimensions_do_not_depend_on_basis() {
    let model = HModel::new(1, params(-1, -1)).unwrap();
    let p = Matrix::from_i64(&[
        vec![1, 1, 0, 0],
        vec![0, 1, 2, 0],
        vec![0, 0, 1, -1],
        vec![1, 0, 0, 1],
    ]);
    assert!(!p.det().is_zero());
    let conj = model.conjugated(p).unwrap();
    assert!(conj.is_faithful_action());
    let rep = report_for_model(&conj, 20).unwrap();
    assert_eq!((rep.dim_wk, rep.dim_wf), (2, 3));
}

#[test]
fn rejections() {
    let model = HModel::new(1, params(-1, -1)).unwrap();
    assert_eq!(
        weil_kernel(&model, &KElement::new(3, 0)).unwrap_err(),
        Error::RationalElement
    );
    assert!(weil_space(&model, &[KElement::new(1, 0)]).is_err());
    assert!(HModel::new(0, params(-1, -1)).is_err());
    assert!(HModel::new(5, params(-1, -1)).is_err());
    let singular = Matrix::zeros(4, 4);
    assert!(model.conjugated(singular).is_err());
    assert!(exterior_action(&Matrix::identity(3), 4).is_err());
}

#[test]
fn exterior_action_of_scalar() {
    let m = Matrix::identity(4).scale(&q(3));
    let ext = exterior_action(&m, 2).unwrap();
    assert_eq!(ext.to_dense(), Matrix::identity(6).scale(&q(9)));
}
