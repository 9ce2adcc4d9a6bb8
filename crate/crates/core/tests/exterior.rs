use hodge_core::exterior::{combinations, multicombinations, sort_with_sign, PowerBasis};
use hodge_core::lie_engine::binomial;
use hodge_core::linalg::{q, Matrix};
use proptest::prelude::*;

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| Matrix::from_i64(&v.chunks(n).map(<[i64]>::to_vec).collect::<Vec<_>>()))
}

/// Leibniz expansion over all permutations.
fn leibniz_det(m: &Matrix) -> hodge_core::linalg::Rat {
    let n = m.rows();
    let mut total = q(0);
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut idx = p.to_vec();
        let sign = sort_with_sign(&mut idx).unwrap();
        let mut term = q(sign);
        for (r, &c) in p.iter().enumerate() {
            term = &term * &m[(r, c)];
        }
        total = &total + &term;
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

#[test]
fn basis_sizes() {
    for n in 0..=8usize {
        for k in 0..=n {
            assert_eq!(
                combinations(n, k).len() as u64,
                binomial(n as u64, k as u64)
            );
            assert_eq!(
                multicombinations(n, k).len() as u64,
                binomial((n + k).saturating_sub(1) as u64, k as u64).max(u64::from(k == 0))
            );
        }
    }
    assert_eq!(sort_with_sign(&mut [2, 1, 0]), Some(-1));
    assert_eq!(sort_with_sign(&mut [1, 0, 1]), None);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn induced_maps_compose(x in square(4), y in square(4), k in 0usize..=4) {
        let b = PowerBasis::wedge(4, k);
        let lhs = b.induced(&(&x * &y), 10_000).unwrap().to_dense();
        let rhs = &b.induced(&x, 10_000).unwrap().to_dense() * &b.induced(&y, 10_000).unwrap().to_dense();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn top_wedge_is_determinant(x in square(4)) {
        let top = PowerBasis::wedge(4, 4).induced(&x, 10).unwrap();
        prop_assert_eq!(top.get(0, 0), leibniz_det(&x));
    }

    #[test]
    fn derivations_preserve_brackets(x in square(4), y in square(4), k in 1usize..=3, sym in any::<bool>()) {
        let b = if sym { PowerBasis::sym(4, k) } else { PowerBasis::wedge(4, k) };
        let lhs = b.derivation(&x.commutator(&y)).to_dense();
        let rhs = b.derivation(&x).to_dense().commutator(&b.derivation(&y).to_dense());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn derivation_trace(x in square(4), k in 1usize..=3, sym in any::<bool>()) {
        // each basis vector appears in k/n of the slots on average
        let b = if sym { PowerBasis::sym(4, k) } else { PowerBasis::wedge(4, k) };
        let expected = &(&x.trace() * &q((b.dim() * k) as i64)) / &q(4);
        prop_assert_eq!(b.derivation(&x).to_dense().trace(), expected);
    }
}

#[test]
fn induced_rejects_symmetric_and_oversized() {
    assert!(PowerBasis::sym(3, 2)
        .induced(&Matrix::identity(3), 100)
        .is_err());
    assert!(PowerBasis::wedge(8, 4)
        .induced(&Matrix::identity(8), 69)
        .is_err());
}
