use hodge_core::cover_homology::{
    build_cover_graph, check_cycle_c_and_basis, h1_trace, h1_with_deck_action, minus_part,
    prym_lattice_model, restricted_action, BlockType,
};
use hodge_core::lattice::{int_mat_mul, int_transpose, IntMatrix};
use hodge_core::linalg::q;
use hodge_core::qalg::GroupQElem;
use hodge_core::surface_homs::{classify_hom, HomTuple};
use hodge_core::Error;
use proptest::prelude::*;

fn connected_hom(g: usize) -> impl Strategy<Value = HomTuple> {
    prop::collection::vec(0usize..8, 2 * g)
        .prop_map(move |v| {
            HomTuple::new(g, v.into_iter().map(GroupQElem::from_index).collect()).unwrap()
        })
        .prop_filter("valid with connected cover", |h| {
            classify_hom(h).valid && build_cover_graph(h).unwrap().is_connected()
        })
}

/// Trace of `q` on edge chains: the number of edges it fixes.
fn chain_trace(h: &HomTuple, q: GroupQElem) -> i64 {
    let graph = build_cover_graph(h).unwrap();
    (0..graph.edge_count())
        .map(|e| {
            let mut unit = vec![0; graph.edge_count()];
            unit[e] = 1;
            graph.act(q, &unit)[e]
        })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_first_betti_number(h in (2usize..=3).prop_flat_map(connected_hom)) {
        let g = h.g;
        let graph = build_cover_graph(&h).unwrap();
        let h1 = h1_with_deck_action(&graph).unwrap();
        prop_assert_eq!(h1.rank(), graph.edge_count() - graph.vertex_count() + 1);
        prop_assert_eq!(h1.rank(), 8 * g - 7);
        for b in &h1.basis {
            prop_assert_eq!(graph.boundary(b), [0; 8]);
        }
    }

    #[test]
    fn deck_action_traces_follow_hopf(h in connected_hom(2)) {
        let h1 = h1_with_deck_action(&build_cover_graph(&h).unwrap()).unwrap();
        prop_assert!(h1.rho_is_homomorphism());
        for x in GroupQElem::ALL {
            // trace on H_1 minus trace on H_0 equals trace on C_1 minus trace on C_0
            let c0 = if x == GroupQElem::ONE { 8 } else { 0 };
            prop_assert_eq!(h1_trace(&h1, x), q(chain_trace(&h, x) - c0 + 1));
        }
    }

    #[test]
    fn minus_part_is_stable_and_has_expected_rank(h in connected_hom(3)) {
        let h1 = h1_with_deck_action(&build_cover_graph(&h).unwrap()).unwrap();
        let v = minus_part(&h1);
        prop_assert_eq!(v.basis.len(), 4 * (3 - 1));
        prop_assert!(v.is_saturated());
        for x in GroupQElem::ALL {
            prop_assert!(restricted_action(h1.rho(x), &v.basis).is_some());
        }
    }
}

#[test]
fn invalid_and_disconnected_inputs() {
    let bad = HomTuple::new(
        2,
        // alphas first: [i, j] = -1 on the first handle
        vec![
            GroupQElem::I,
            GroupQElem::ONE,
            GroupQElem::J,
            GroupQElem::ONE,
        ],
    )
    .unwrap();
    assert!(matches!(build_cover_graph(&bad), Err(Error::InvalidHom(_))));
    let cyclic = HomTuple::new(2, vec![GroupQElem::I; 4]).unwrap();
    let graph = build_cover_graph(&cyclic).unwrap();
    assert!(!graph.is_connected());
    assert_eq!(
        h1_with_deck_action(&graph).unwrap_err(),
        Error::Disconnected
    );
}

#[test]
fn hurwitz_cycles() {
    let c = check_cycle_c_and_basis().unwrap();
    assert!(c.boundary_zero && c.terms_are_edges && c.zeta_integral);
    assert_eq!((c.det.abs(), c.minus_rank), (1, 4));
    assert!(c.structure_matches_m);
}

fn preserves(form: &IntMatrix, m: &IntMatrix) -> bool {
    int_mat_mul(&int_mat_mul(&int_transpose(m), form), m) == *form
}

#[test]
fn prym_models() {
    for g in 2..=3 {
        let model = prym_lattice_model(g, None, 200_000).unwrap();
        assert_eq!(model.rank, 8 * (g - 1));
        assert!(model.basis_spans_minus_part && model.is_homomorphism);
        assert!(model.symplectic && model.minus_one_is_minus_identity);
        // independent checks of the reported flags
        let form = &model.form;
        assert_eq!(
            int_transpose(form),
            form.iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect::<IntMatrix>()
        );
        for x in GroupQElem::ALL {
            assert!(preserves(form, &model.rho[x.index()]));
            for y in GroupQElem::ALL {
                assert_eq!(
                    int_mat_mul(&model.rho[x.index()], &model.rho[y.index()]),
                    model.rho[x.mul(y).index()]
                );
            }
        }
        assert_eq!(
            model.a_types.iter().filter(|&&t| t == BlockType::M).count(),
            1
        );
        assert_eq!(
            model
                .a_types
                .iter()
                .filter(|&&t| t == BlockType::HZ)
                .count(),
            g - 2
        );
    }
    assert_eq!(
        prym_lattice_model(2, None, 200_000).unwrap().type_string,
        "M^2"
    );
    assert_eq!(
        prym_lattice_model(3, None, 200_000).unwrap().type_string,
        "(M ⊕ H_Z)^2"
    );
    assert!(matches!(
        prym_lattice_model(4, None, 1),
        Err(Error::GenusOutOfRange { .. })
    ));
}

#[test]
fn prym_model_from_nonstandard_hom() {
    let h = HomTuple::parse(2, "j,i,i,j").unwrap();
    let cls = classify_hom(&h);
    assert!(cls.valid && cls.surjective);
    let model = prym_lattice_model(2, Some(&h), 200_000).unwrap();
    assert_eq!(model.type_string, "M^2");
    assert!(model.normalization_moves > 0);
}
