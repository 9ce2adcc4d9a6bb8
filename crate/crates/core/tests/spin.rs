use hodge_core::exterior::PowerBasis;
use hodge_core::lie_engine::{atom, invariant_dim, AlgebraType};
use hodge_core::linalg::{q, Matrix};
use hodge_core::spin_explicit::{
    build_spin_rep, compare_with_printed, cross_check_weights, quadratic_form, so7_invariant,
    subset_weight, wedge4_basis, weight_zero_basis, SpinRep, SPIN_BASIS,
};
use num_traits::Zero;

/// `rho(e_a ∧ e_b)` for any ordered pair, with `rho(e_a ∧ e_a) = 0`.
fn rho_any(rep: &SpinRep, a: usize, b: usize) -> Matrix {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => rep.rho(a, b).clone(),
        std::cmp::Ordering::Greater => -rep.rho(b, a),
        std::cmp::Ordering::Equal => Matrix::zeros(8, 8),
    }
}

#[test]
fn brackets_follow_closed_form() {
    // [a∧b, c∧d] = 2B(b,c) a∧d - 2B(b,d) a∧c - 2B(a,c) b∧d + 2B(a,d) b∧c
    let rep = build_spin_rep().unwrap();
    let form = quadratic_form();
    let two_b = |x: usize, y: usize| &form[(x - 1, y - 1)] * &q(2);
    for (a, b) in rep.pairs.clone() {
        for (c, d) in rep.pairs.clone() {
            let lhs = rep.rho(a, b).commutator(rep.rho(c, d));
            let mut rhs = Matrix::zeros(8, 8);
            for (coef, x, y) in [
                (two_b(b, c), a, d),
                (-two_b(b, d), a, c),
                (-two_b(a, c), b, d),
                (two_b(a, d), b, c),
            ] {
                if !coef.is_zero() {
                    rhs = &rhs + &rho_any(&rep, x, y).scale(&coef);
                }
            }
            assert_eq!(lhs, rhs, "({a}{b}), ({c}{d})");
        }
    }
}

#[test]
fn spinor_weights() {
    let rep = build_spin_rep().unwrap();
    let weights = rep.cartan_weights().unwrap();
    for (s, &mask) in SPIN_BASIS.iter().enumerate() {
        assert_eq!(weights[s], subset_weight(mask));
    }
}

#[test]
fn rho_matrices_are_traceless_and_independent() {
    let rep = build_spin_rep().unwrap();
    assert_eq!(rep.rho.len(), 21);
    let rows: Vec<Vec<_>> = rep
        .rho
        .iter()
        .map(|m| (0..8).flat_map(|r| m.row(r).to_vec()).collect())
        .collect();
    assert_eq!(Matrix::from_rows(rows).rank(), 21);
    assert!(rep.rho.iter().all(|m| m.trace().is_zero()));
}

#[test]
fn invariant_line_in_fourth_wedge() {
    let rep = build_spin_rep().unwrap();
    let inv = so7_invariant(&rep).unwrap();
    assert!(inv.fixed_by_all_generators);
    // full joint kernel of all 21 derivations, without restricting weights
    let basis = wedge4_basis();
    let mut stacked = Matrix::zeros(0, basis.dim());
    for d in rep.derivations(&basis) {
        stacked = stacked.stack(&d.to_dense());
    }
    assert_eq!(basis.dim() - stacked.rank(), 1);
    let b3 = AlgebraType::b(3);
    let gamma = atom(&b3, "Γ").unwrap();
    assert_eq!(
        invariant_dim(&b3, &gamma.wedge(4, &b3).unwrap()).unwrap(),
        1
    );
    let zero_mult = gamma.wedge(4, &b3).unwrap().mult(&b3.zero());
    assert_eq!(weight_zero_basis().len() as u64, zero_mult);
    assert!(inv.terms.iter().filter(|(_, c)| !c.is_zero()).count() >= 8);
}

#[test]
fn printed_formula_has_one_sign_slip() {
    let rep = build_spin_rep().unwrap();
    let cmp = compare_with_printed(&so7_invariant(&rep).unwrap());
    let bad: Vec<usize> = (0..8).filter(|&t| !cmp.terms[t].agrees).collect();
    assert_eq!(bad, vec![5]);
    assert_eq!(cmp.terms[5].computed, "0");
    assert_eq!(
        cmp.missing,
        vec![("e1∧e3∧e12∧e23".to_string(), "-1".to_string())]
    );
    // the printed monomial cannot occur in an invariant at all
    let off_weight: Vec<usize> = (0..8).filter(|&t| !cmp.terms[t].weight_zero).collect();
    assert_eq!(off_weight, vec![5]);
}

#[test]
fn quadratic_invariants() {
    let rep = build_spin_rep().unwrap();
    let cc = cross_check_weights(&rep).unwrap();
    assert!(cc.spin_match && cc.wedge4_match);
    let b3 = AlgebraType::b(3);
    let gamma = atom(&b3, "Γ").unwrap();
    let w2 = invariant_dim(&b3, &gamma.wedge(2, &b3).unwrap()).unwrap();
    let s2 = invariant_dim(&b3, &gamma.sym(2, &b3)).unwrap();
    assert_eq!(
        (cc.wedge2_invariants as u64, cc.sym2_invariants as u64),
        (w2, s2)
    );
    assert_eq!((w2, s2), (0, 1));
    assert_eq!(PowerBasis::sym(8, 2).dim(), 36);
}

#[test]
fn other_normalizations_break_brackets() {
    for (c1, c2, c3) in [(1, 2, 1), (2, 1, 1), (1, 1, 2)] {
        let rep = SpinRep::with_scalars(q(c1), q(c2), q(c3));
        assert!(!rep.check_brackets().passed() || !rep.satisfies_displayed_formula());
    }
}
