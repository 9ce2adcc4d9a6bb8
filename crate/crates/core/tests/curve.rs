use hodge_core::curve_model::{
    curve_coordinates, curve_equation, finite_field_locus, in_curve_ideal, quadrics,
    reduce_mod_curve, scroll_numerology, verify_curve_autos, verify_invariant_quartics,
    verify_p4_action, verify_quadrics, CurveAuto, GaussQ, Poly,
};
use hodge_core::Error;
use proptest::prelude::*;

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `1 + sum_x (1 + (x^5 - x | p))`: affine points plus the point at infinity.
fn point_count_oracle(p: u64) -> u64 {
    let legendre = |a: u64| -> i64 {
        match pow_mod(a, (p - 1) / 2, p) {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    };
    let affine: i64 = (0..p)
        .map(|x| 1 + legendre((pow_mod(x, 5, p) + p - x) % p))
        .sum();
    1 + affine as u64
}

fn on_curve(x: u64, y: u64, p: u64) -> bool {
    y * y % p == (pow_mod(x, 5, p) + p - x) % p
}

#[test]
fn locus_counts_match_legendre_oracle() {
    for p in [13u64, 17] {
        let rep = finite_field_locus(p).unwrap();
        assert_eq!(rep.curve_points as u64, point_count_oracle(p), "p = {p}");
        assert_eq!(rep.points, (p.pow(5) - 1) / (p - 1));
        assert_eq!(rep.sqrt_minus_one * rep.sqrt_minus_one % p, p - 1);
        assert!(rep.passed());
        assert_eq!(rep.quadric_locus, rep.curve_points);
    }
    assert_eq!(point_count_oracle(13), 14);
    assert_eq!(point_count_oracle(17), 30);
}

#[test]
fn automorphisms_act_on_finite_field_points() {
    // (x, y) -> (-x, i y) and (x, y) -> (1/x, i y / x^3) with i^2 = -1 mod p
    for p in [13u64, 17, 29, 37, 41] {
        let ip = (2..p).find(|a| a * a % p == p - 1).unwrap();
        for x in 0..p {
            for y in 0..p {
                if !on_curve(x, y, p) {
                    continue;
                }
                assert!(on_curve((p - x) % p, ip * y % p, p));
                if x != 0 {
                    let xi = pow_mod(x, p - 2, p);
                    assert!(on_curve(xi, ip * y % p * pow_mod(xi, 3, p) % p, p));
                }
            }
        }
    }
}

#[test]
fn bad_primes() {
    for p in [5u64, 7, 15, 43, 53] {
        assert!(
            matches!(finite_field_locus(p), Err(Error::BadPrime(..))),
            "{p}"
        );
    }
}

#[test]
fn symbolic_checks() {
    assert!(verify_curve_autos().passed());
    assert!(verify_quadrics().all_vanish);
    assert!(verify_p4_action().passed());
    let quartics = verify_invariant_quartics();
    assert!(quartics.all_proportional() && quartics.all_invariant());
    assert_eq!(quartics.span_dim, 4);
}

#[test]
fn automorphism_group_relations() {
    let (i, j, h) = (CurveAuto::i(), CurveAuto::j(), CurveAuto::hyperelliptic());
    let i4 = i.compose(&i).compose(&i).compose(&i);
    assert!(i4.same_map(&CurveAuto::identity()));
    assert!(h.compose(&h).same_map(&CurveAuto::identity()));
    assert!(!i.same_map(&j) && !i.same_map(&h));
}

#[test]
fn quadrics_vanish_at_curve_points_mod_p() {
    let p = 29u64;
    let ip = 12u64; // 12^2 = -1 mod 29
    let eval = |f: &Poly, pt: &[u64; 5]| -> u64 {
        f.terms.iter().fold(0, |acc, (e, c)| {
            let mut t = c.mod_p(p, ip).unwrap();
            for (k, &ex) in e.iter().enumerate() {
                t = t * pow_mod(pt[k], ex as u64, p) % p;
            }
            (acc + t) % p
        })
    };
    for x in 0..p {
        for y in 0..p {
            if on_curve(x, y, p) {
                let pt = [1, x, x * x % p, pow_mod(x, 3, p), y];
                for qd in quadrics() {
                    assert_eq!(eval(&qd, &pt), 0);
                }
            }
        }
    }
    assert_eq!(curve_coordinates().len(), 5);
}

#[test]
fn numerology_follows_riemann_roch() {
    for n in 2..=8u64 {
        let s = scroll_numerology(n).unwrap();
        let g = (n - 1) * (n - 1);
        // deg H from h^0(H) = deg H - g + 1, then h^0(2H) = 2 deg H - g + 1
        let deg_h = s.h0_h + g - 1;
        assert_eq!(s.genus, g);
        assert_eq!(s.h0_h2, 2 * deg_h - g + 1);
        assert_eq!(s.sym2_dim, s.h0_h * (s.h0_h + 1) / 2);
        assert_eq!(s.quadric_gap, s.sym2_dim - s.h0_h2);
    }
    assert!(scroll_numerology(1).is_err());
}

fn gauss() -> impl Strategy<Value = GaussQ> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussQ::new(a, b))
}

fn poly2() -> impl Strategy<Value = Poly> {
    small_poly(6, 4, 6)
}

fn small_poly(dx: i32, dy: i32, terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((0i32..=dx, 0i32..=dy, gauss()), 0..terms).prop_map(|terms| {
        terms.into_iter().fold(Poly::zero(2), |acc, (a, b, c)| {
            &acc + &Poly::monomial(2, vec![a, b], c)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_compatible_with_ring_operations(a in poly2(), b in poly2()) {
        prop_assert_eq!(reduce_mod_curve(&(&a + &b)), &reduce_mod_curve(&a) + &reduce_mod_curve(&b));
        let lhs = reduce_mod_curve(&(&a * &b));
        prop_assert_eq!(lhs, reduce_mod_curve(&(&reduce_mod_curve(&a) * &reduce_mod_curve(&b))));
        prop_assert!(in_curve_ideal(&(&a * &curve_equation())));
        prop_assert!(reduce_mod_curve(&a).terms.keys().all(|e| e[1] <= 1));
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        a in small_poly(3, 2, 4),
        b in small_poly(3, 2, 4),
        c in small_poly(2, 1, 3),
        d in small_poly(2, 1, 3),
    ) {
        let imgs = [c, d];
        let sub = |p: &Poly| p.substitute(&imgs).unwrap();
        prop_assert_eq!(sub(&(&a * &b)), &sub(&a) * &sub(&b));
        prop_assert_eq!(sub(&(&a + &b)), &sub(&a) + &sub(&b));
    }

    #[test]
    fn pullbacks_preserve_the_curve_ideal(a in poly2(), which in 0usize..3) {
        let g = [CurveAuto::i(), CurveAuto::j(), CurveAuto::hyperelliptic()][which].clone();
        let f = &a * &curve_equation();
        // the j pullback has negative powers of x; the ideal is taken over Laurent polynomials
        prop_assert!(in_curve_ideal(&g.pullback(&f)));
    }

    #[test]
    fn gauss_field_axioms(a in gauss(), b in gauss()) {
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), GaussQ::one());
        }
    }
}
