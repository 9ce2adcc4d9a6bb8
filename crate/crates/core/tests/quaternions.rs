use hodge_core::qalg::{
    embed_f_in_m2k, generated_subgroup, hurwitz_index_identity, AlgebraParams, GroupQElem,
    OrderLattice, QuatElem,
};
use hodge_core::{q, Error};
use proptest::prelude::*;

fn params() -> impl Strategy<Value = AlgebraParams> {
    (1i64..6, 1i64..6).prop_map(|(r, s)| AlgebraParams::new(q(-r), q(-s)).unwrap())
}

fn coeffs() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-5i64..=5)
}

/// Integer determinant by cofactor expansion.
fn det4(m: [[i64; 4]; 4]) -> i64 {
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum()
    }
    det(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Coordinates in `zeta, i, j, k` of `(a + bi + cj + dk) / 2` given doubled
/// coordinates `(a, b, c, d)`: `zeta` gets `a`, the others `(b - a) / 2` etc.
fn hurwitz_coords(doubled: [i64; 4]) -> [i64; 4] {
    let [a, b, c, d] = doubled;
    [a, (b - a) / 2, (c - a) / 2, (d - a) / 2]
}

/// Doubled coordinates of `u * m` for `u` in `1, i, j, k` (Hamilton rules).
fn left_mul_doubled(u: usize, m: [i64; 4]) -> [i64; 4] {
    let [a, b, c, d] = m;
    match u {
        0 => [a, b, c, d],
        1 => [-b, a, -d, c],
        2 => [-c, d, a, -b],
        _ => [-d, -c, b, a],
    }
}

#[test]
fn index_identity_against_integer_oracle() {
    let order = OrderLattice::hurwitz();
    for code in 0..7i64.pow(4) {
        let c: [i64; 4] = std::array::from_fn(|t| (code / 7i64.pow(t as u32)) % 7 - 3);
        if c == [0; 4] {
            continue;
        }
        let m = order.element(c);
        // doubled coordinates of m in 1, i, j, k
        let doubled = [c[0], c[0] + 2 * c[1], c[0] + 2 * c[2], c[0] + 2 * c[3]];
        let rows: [[i64; 4]; 4] =
            std::array::from_fn(|u| hurwitz_coords(left_mul_doubled(u, doubled)));
        let d = det4(rows).abs();
        let n4: i64 = doubled.iter().map(|x| x * x).sum(); // 4 N(m)
        let r = hurwitz_index_identity(&m).unwrap();
        assert_eq!(r.d, d, "{c:?}");
        assert_eq!(8 * d, n4 * n4, "{c:?}");
        assert!(r.check && r.d >= 2);
    }
}

#[test]
fn index_identity_rejects() {
    let p = AlgebraParams::hamilton();
    let half_i = QuatElem::new(&p, q(0), hodge_core::qf(1, 2), q(0), q(0));
    assert!(matches!(
        hurwitz_index_identity(&half_i),
        Err(Error::NotInHurwitzOrder(_))
    ));
    let other = AlgebraParams::new(q(-1), q(-3)).unwrap();
    assert!(matches!(
        hurwitz_index_identity(&QuatElem::one(&other)),
        Err(Error::InvalidParams(_))
    ));
}

#[test]
fn orders_are_conjugation_closed() {
    assert!(OrderLattice::hurwitz().is_conj_closed());
    assert!(OrderLattice::hz(&AlgebraParams::new(q(-2), q(-7)).unwrap()).is_conj_closed());
}

#[test]
fn subgroups_of_q() {
    use GroupQElem as G;
    assert_eq!(generated_subgroup(&[G::I, G::J]), 0xff);
    assert_ne!(generated_subgroup(&[G::I, G::MINUS_I]), 0xff);
    assert_ne!(generated_subgroup(&[G::K, G::MINUS_ONE]), 0xff);
}

proptest! {
    #[test]
    fn norm_is_multiplicative(p in params(), x in coeffs(), y in coeffs()) {
        let (x, y) = (QuatElem::from_ints(&p, x), QuatElem::from_ints(&p, y));
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn conjugation_reverses_products(p in params(), x in coeffs(), y in coeffs()) {
        let (x, y) = (QuatElem::from_ints(&p, x), QuatElem::from_ints(&p, y));
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
    }

    #[test]
    fn definite_norm_is_positive(p in params(), x in coeffs()) {
        prop_assume!(x != [0; 4]);
        prop_assert!(QuatElem::from_ints(&p, x).norm() > q(0));
    }

    #[test]
    fn multiplication_is_associative(p in params(), x in coeffs(), y in coeffs(), z in coeffs()) {
        let (x, y, z) = (QuatElem::from_ints(&p, x), QuatElem::from_ints(&p, y), QuatElem::from_ints(&p, z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn embedding_is_a_ring_homomorphism(p in params(), x in coeffs(), y in coeffs()) {
        let (x, y) = (QuatElem::from_ints(&p, x), QuatElem::from_ints(&p, y));
        let (ex, ey) = (embed_f_in_m2k(&x), embed_f_in_m2k(&y));
        prop_assert_eq!(embed_f_in_m2k(&(&x * &y)), ex.mul(&ey));
        prop_assert_eq!(embed_f_in_m2k(&(&x + &y)), ex.add(&ey));
    }

    #[test]
    fn group_q_matches_quaternions(a in 0usize..8, b in 0usize..8) {
        let (a, b) = (GroupQElem::from_index(a), GroupQElem::from_index(b));
        prop_assert_eq!(a.mul(b).to_quat(), &a.to_quat() * &b.to_quat());
        prop_assert_eq!(a.mul(a.inv()), GroupQElem::ONE);
    }
}
