//! The eight-sheeted covering graph of a bouquet of `g` circles attached to a
//! homomorphism onto `Q`, its integral first homology with the deck action,
//! the `-1` eigenlattice and the lattice model of the Prym variety.
//!
//! Vertices are the elements of `Q` in the order `+1,-1,+i,-i,+j,-j,+k,-k`.
//! The edge of handle `m` at vertex `q` runs `q -> q f(alpha_m)` and has index
//! `8 (m - 1) + index(q)`. The deck group acts by left multiplication and so
//! permutes edges without signs.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    from_rational, int_identity, int_mat_mul, int_mat_vec, int_transpose, integer_kernel,
    IntLattice, IntMatrix,
};
use crate::linalg::{Matrix, Rat};
use crate::qalg::{AlgebraParams, GroupQElem, OrderLabel, OrderLattice, QuatElem};
use crate::surface_homs::{classify_hom, normalize_hom, HomTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub handle: usize,
    pub from: GroupQElem,
    pub to: GroupQElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverGraph {
    pub g: usize,
    pub edges: Vec<CoverEdge>,
}

pub type Chain = Vec<i64>;

pub fn build_cover_graph(h: &HomTuple) -> Result<CoverGraph> {
    if !classify_hom(h).valid {
        return Err(Error::InvalidHom(h.to_string()));
    }
    let mut edges = Vec::with_capacity(8 * h.g);
    for m in 1..=h.g {
        let x = h.alpha_image(m);
        for q in GroupQElem::ALL {
            edges.push(CoverEdge {
                handle: m,
                from: q,
                to: q.mul(x),
            });
        }
    }
    Ok(CoverGraph { g: h.g, edges })
}

impl CoverGraph {
    pub fn vertex_count(&self) -> usize {
        8
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, handle: usize, from: GroupQElem) -> usize {
        8 * (handle - 1) + from.index()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = [false; 8];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for e in &self.edges {
                for (a, b) in [
                    (e.from.index(), e.to.index()),
                    (e.to.index(), e.from.index()),
                ] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        queue.push_back(b);
                    }
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn boundary(&self, chain: &[i64]) -> [i64; 8] {
        let mut out = [0i64; 8];
        for (e, &c) in self.edges.iter().zip(chain) {
            out[e.to.index()] += c;
            out[e.from.index()] -= c;
        }
        out
    }

    /// The unique edge joining `u` and `v`, with sign `+1` if it runs `u -> v`.
    pub fn signed_edge(&self, u: GroupQElem, v: GroupQElem) -> Result<(usize, i64)> {
        let matches: Vec<(usize, i64)> = self
            .edges
            .iter()
            .enumerate()
            .filter_map(|(idx, e)| {
                if e.from == u && e.to == v {
                    Some((idx, 1))
                } else if e.from == v && e.to == u {
                    Some((idx, -1))
                } else {
                    None
                }
            })
            .collect();
        match matches.as_slice() {
            [one] => Ok(*one),
            [] => Err(Error::Model(format!("no edge between {u} and {v}"))),
            _ => Err(Error::Model(format!("several edges between {u} and {v}"))),
        }
    }

    /// Chain from a list of vertex pairs `[u, v]`, each read as the edge `u -> v`.
    pub fn chain_from_pairs(&self, pairs: &[(GroupQElem, GroupQElem)]) -> Result<Chain> {
        let mut chain = vec![0i64; self.edge_count()];
        for &(u, v) in pairs {
            let (idx, sign) = self.signed_edge(u, v)?;
            chain[idx] += sign;
        }
        Ok(chain)
    }

    /// Left multiplication by `q` on chains.
    pub fn act(&self, q: GroupQElem, chain: &[i64]) -> Chain {
        let mut out = vec![0i64; chain.len()];
        for (idx, e) in self.edges.iter().enumerate() {
            out[self.edge_index(e.handle, q.mul(e.from))] += chain[idx];
        }
        out
    }
}

/// `H_1` of the covering graph with a basis of fundamental cycles of a
/// breadth-first spanning tree rooted at `1`.
#[derive(Clone, Debug)]
pub struct CoverH1 {
    pub graph: CoverGraph,
    pub tree_edges: Vec<usize>,
    pub non_tree_edges: Vec<usize>,
    /// Basis cycles as chains, one per non-tree edge.
    pub basis: Vec<Chain>,
    /// Deck action in basis coordinates, indexed by `GroupQElem::index`.
    pub rho: Vec<IntMatrix>,
}

pub fn h1_with_deck_action(graph: &CoverGraph) -> Result<CoverH1> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    // parent edge of each vertex: (edge index, sign of traversal toward the root)
    let mut parent: [Option<(usize, i64)>; 8] = [None; 8];
    let mut seen = [false; 8];
    seen[0] = true;
    let mut tree = vec![false; graph.edge_count()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for (idx, e) in graph.edges.iter().enumerate() {
            let (f, t) = (e.from.index(), e.to.index());
            let step = if f == v && !seen[t] {
                Some((t, -1))
            } else if t == v && !seen[f] {
                Some((f, 1))
            } else {
                None
            };
            if let Some((w, sign)) = step {
                seen[w] = true;
                parent[w] = Some((idx, sign));
                tree[idx] = true;
                queue.push_back(w);
            }
        }
    }
    let to_root = |mut v: usize| {
        let mut chain = vec![0i64; graph.edge_count()];
        while let Some((idx, sign)) = parent[v] {
            chain[idx] += sign;
            let e = &graph.edges[idx];
            v = if e.from.index() == v {
                e.to.index()
            } else {
                e.from.index()
            };
        }
        chain
    };
    let tree_edges: Vec<usize> = (0..graph.edge_count()).filter(|&e| tree[e]).collect();
    let non_tree_edges: Vec<usize> = (0..graph.edge_count()).filter(|&e| !tree[e]).collect();
    let basis: Vec<Chain> = non_tree_edges
        .iter()
        .map(|&idx| {
            let e = &graph.edges[idx];
            let (a, b) = (to_root(e.to.index()), to_root(e.from.index()));
            let mut z: Chain = a.iter().zip(&b).map(|(x, y)| x - y).collect();
            z[idx] += 1;
            z
        })
        .collect();
    let mut h1 = CoverH1 {
        graph: graph.clone(),
        tree_edges,
        non_tree_edges,
        basis,
        rho: Vec::new(),
    };
    let rho: Result<Vec<IntMatrix>> = GroupQElem::ALL
        .iter()
        .map(|&q| {
            let cols: Result<Vec<Vec<i64>>> = h1
                .basis
                .iter()
                .map(|z| h1.coords(&graph.act(q, z)))
                .collect();
            Ok(int_transpose(&cols?))
        })
        .collect();
    h1.rho = rho?;
    Ok(h1)
}

impl CoverH1 {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a cycle: its coefficients on the non-tree edges.
    pub fn coords(&self, chain: &[i64]) -> Result<Vec<i64>> {
        if self.graph.boundary(chain).iter().any(|&x| x != 0) {
            return Err(Error::Model("chain is not a cycle".into()));
        }
        Ok(self.non_tree_edges.iter().map(|&e| chain[e]).collect())
    }

    pub fn chain(&self, coords: &[i64]) -> Chain {
        let mut out = vec![0i64; self.graph.edge_count()];
        for (z, &c) in self.basis.iter().zip(coords) {
            for (o, x) in out.iter_mut().zip(z) {
                *o += c * x;
            }
        }
        out
    }

    pub fn rho(&self, q: GroupQElem) -> &IntMatrix {
        &self.rho[q.index()]
    }

    pub fn rho_is_homomorphism(&self) -> bool {
        GroupQElem::ALL.iter().all(|&p| {
            GroupQElem::ALL
                .iter()
                .all(|&q| int_mat_mul(self.rho(p), self.rho(q)) == *self.rho(p.mul(q)))
        })
    }
}

/// The saturated sublattice of `H_1` on which `-1` acts as `-1`, in `H_1`
/// coordinates.
pub fn minus_part(h1: &CoverH1) -> IntLattice {
    let n = h1.rank();
    let m: IntMatrix = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| h1.rho(GroupQElem::MINUS_ONE)[r][c] + i64::from(r == c))
                .collect()
        })
        .collect();
    IntLattice::new(n, integer_kernel(&m, n))
}

/// Matrix of `op` on the lattice spanned by `basis` (columns are images).
pub fn restricted_action(op: &IntMatrix, basis: &[Vec<i64>]) -> Option<IntMatrix> {
    let lat = IntLattice::new(basis.first().map_or(0, Vec::len), basis.to_vec());
    let cols: Option<Vec<Vec<i64>>> = basis
        .iter()
        .map(|b| lat.coords(&int_mat_vec(op, b)))
        .collect();
    Some(int_transpose(&cols?))
}

/// `M` with the basis `1, i, j, zeta`.
pub fn hurwitz_reference() -> OrderLattice {
    let p = AlgebraParams::hamilton();
    OrderLattice {
        basis: [
            QuatElem::one(&p),
            QuatElem::i(&p),
            QuatElem::j(&p),
            QuatElem::zeta(),
        ],
        label: OrderLabel::HurwitzM,
    }
}

/// Left multiplication by `q` on `order`, as an integer matrix.
pub fn reference_action(order: &OrderLattice, q: GroupQElem) -> IntMatrix {
    from_rational(
        &order
            .left_mul_matrix(&q.to_quat())
            .expect("units lie in the order"),
    )
    .expect("integral")
}

pub const CYCLE_C: [(GroupQElem, GroupQElem); 8] = [
    (GroupQElem::ONE, GroupQElem::I),
    (GroupQElem::I, GroupQElem::MINUS_K),
    (GroupQElem::MINUS_K, GroupQElem::MINUS_J),
    (GroupQElem::MINUS_J, GroupQElem::ONE),
    (GroupQElem::MINUS_I, GroupQElem::MINUS_ONE),
    (GroupQElem::MINUS_ONE, GroupQElem::J),
    (GroupQElem::J, GroupQElem::K),
    (GroupQElem::K, GroupQElem::MINUS_I),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleCheck {
    pub boundary_zero: bool,
    pub terms_are_edges: bool,
    pub zeta_integral: bool,
    /// Determinant of `c, ic, jc, zeta c` in a basis of the minus part.
    pub det: i64,
    pub minus_rank: usize,
    pub structure_matches_m: bool,
}

/// The cycles `c, ic, jc, zeta c` in `H_1` coordinates, for a graph whose
/// last two handles carry `i` and `j`.
fn hurwitz_cycles(h1: &CoverH1) -> Result<(Vec<Vec<i64>>, bool)> {
    let graph = &h1.graph;
    let c = graph.chain_from_pairs(&CYCLE_C)?;
    let mut zeta = vec![0i64; c.len()];
    let images: Vec<Chain> = [GroupQElem::I, GroupQElem::J, GroupQElem::K]
        .iter()
        .map(|&q| graph.act(q, &c))
        .collect();
    for z in std::iter::once(&c).chain(&images) {
        for (a, b) in zeta.iter_mut().zip(z) {
            *a += b;
        }
    }
    let integral = zeta.iter().all(|x| x % 2 == 0);
    let zeta: Chain = zeta.iter().map(|x| x / 2).collect();
    let cycles = [&c, &images[0], &images[1], &zeta]
        .iter()
        .map(|z| h1.coords(z))
        .collect::<Result<Vec<_>>>()?;
    Ok((cycles, integral))
}

pub fn check_cycle_c_and_basis() -> Result<CycleCheck> {
    let f = HomTuple::standard(2)?;
    let graph = build_cover_graph(&f)?;
    let h1 = h1_with_deck_action(&graph)?;
    let terms_are_edges = CYCLE_C
        .iter()
        .all(|&(u, v)| graph.signed_edge(u, v).is_ok());
    let c = graph.chain_from_pairs(&CYCLE_C)?;
    let boundary_zero = graph.boundary(&c).iter().all(|&x| x == 0);
    let (cycles, zeta_integral) = hurwitz_cycles(&h1)?;
    let minus = minus_part(&h1);
    let coords: Option<Vec<Vec<i64>>> = cycles.iter().map(|z| minus.coords(z)).collect();
    let det = match &coords {
        Some(rows) if rows.len() == minus.basis.len() => crate::lattice::int_det(rows),
        _ => 0,
    };
    let reference = hurwitz_reference();
    let structure_matches_m = [GroupQElem::I, GroupQElem::J].iter().all(|&q| {
        restricted_action(h1.rho(q), &cycles).is_some_and(|a| a == reference_action(&reference, q))
    });
    Ok(CycleCheck {
        boundary_zero,
        terms_are_edges,
        zeta_integral,
        det,
        minus_rank: minus.basis.len(),
        structure_matches_m,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockType {
    M,
    HZ,
    Unknown,
}

/// Decide whether a rank-4 `Q`-module given by the action of `i` and `j` is
/// isomorphic to `M` or to `H_Z`, by searching for a unimodular intertwiner.
pub fn classify_block(act_i: &IntMatrix, act_j: &IntMatrix) -> BlockType {
    let p = AlgebraParams::hamilton();
    let hz = OrderLattice::hz(&p);
    for (label, order) in [(BlockType::M, hurwitz_reference()), (BlockType::HZ, hz)] {
        let refs = [
            reference_action(&order, GroupQElem::I),
            reference_action(&order, GroupQElem::J),
        ];
        if find_intertwiner(&[act_i, act_j], &[&refs[0], &refs[1]]).is_some() {
            return label;
        }
    }
    BlockType::Unknown
}

/// Integer `T` with `|det T| = 1` and `T a_q = b_q T` for each pair, searched
/// among combinations with coefficients in `[-2, 2]` of a basis of the
/// integral intertwiners.
pub fn find_intertwiner(a: &[&IntMatrix], b: &[&IntMatrix]) -> Option<IntMatrix> {
    let n = a[0].len();
    // unknown T[r][c] at index r*n + c; equations (T a - b T)[r][c] = 0
    let mut eqs: IntMatrix = Vec::new();
    for (aq, bq) in a.iter().zip(b) {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![0i64; n * n];
                for t in 0..n {
                    row[r * n + t] += aq[t][c];
                    row[t * n + c] -= bq[r][t];
                }
                eqs.push(row);
            }
        }
    }
    let sols = integer_kernel(&eqs, n * n);
    let k = sols.len();
    if k == 0 {
        return None;
    }
    let mut coeffs = vec![-2i64; k];
    loop {
        let mut t = vec![vec![0i64; n]; n];
        for (s, &x) in sols.iter().zip(&coeffs) {
            for idx in 0..n * n {
                t[idx / n][idx % n] += x * s[idx];
            }
        }
        if crate::lattice::int_det(&t).abs() == 1 {
            return Some(t);
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return None;
            }
            coeffs[pos] += 1;
            if coeffs[pos] <= 2 {
                break;
            }
            coeffs[pos] = -2;
            pos += 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrymLatticeModel {
    pub g: usize,
    pub rank: usize,
    /// `A(q)` on the minus part, indexed by `GroupQElem::index`.
    pub a_blocks: Vec<IntMatrix>,
    /// `diag(A(q), tA(q)^-1)`.
    pub rho: Vec<IntMatrix>,
    pub form: IntMatrix,
    pub a_types: Vec<BlockType>,
    pub b_types: Vec<BlockType>,
    pub type_string: String,
    /// The chosen cycles form a Z-basis of the minus part of `H_1`.
    pub basis_spans_minus_part: bool,
    pub is_homomorphism: bool,
    pub symplectic: bool,
    pub minus_one_is_minus_identity: bool,
    /// Length of the move sequence used to bring the input to standard form.
    pub normalization_moves: usize,
}

fn int_inverse(a: &IntMatrix) -> Option<IntMatrix> {
    let inv = Matrix::from_i64(a).inverse()?;
    from_rational(&inv)
}

fn block_diag_int(blocks: &[IntMatrix]) -> IntMatrix {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = vec![vec![0i64; n]; n];
    let mut off = 0;
    for b in blocks {
        for (r, row) in b.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                out[off + r][off + c] = x;
            }
        }
        off += b.len();
    }
    out
}

fn sub_block(m: &IntMatrix, off: usize, len: usize) -> IntMatrix {
    (off..off + len)
        .map(|r| m[r][off..off + len].to_vec())
        .collect()
}

fn type_string(types: &[BlockType]) -> String {
    let tori = types.iter().filter(|&&t| t == BlockType::HZ).count();
    let has_m = types.iter().filter(|&&t| t == BlockType::M).count();
    if types.iter().any(|&t| t == BlockType::Unknown) || has_m != 1 {
        return "unclassified".into();
    }
    match tori {
        0 => "M^2".into(),
        1 => "(M ⊕ H_Z)^2".into(),
        n => format!("(M ⊕ H_Z^{n})^2"),
    }
}

/// Lattice model of `H_1` of the Prym variety for `g` in `{2, 3}`.
///
/// The homomorphism (standard if omitted) is first moved to the standard one;
/// the model is then read off from the covering graph of the standard
/// homomorphism. The minus part of `H_1` is split as the span of
/// `c, ic, jc, zeta c` on the last two handles plus `q - (-q)` on the loops of
/// each remaining handle.
pub fn prym_lattice_model(
    g: usize,
    h: Option<&HomTuple>,
    node_budget: usize,
) -> Result<PrymLatticeModel> {
    if !(2..=3).contains(&g) {
        return Err(Error::GenusOutOfRange {
            genus: g,
            range: "2..=3",
        });
    }
    let normalization_moves = match h {
        Some(h) => {
            if h.g != g {
                return Err(Error::Precondition(format!(
                    "homomorphism has genus {}, expected {g}",
                    h.g
                )));
            }
            let n = normalize_hom(h, node_budget)?;
            if !n.reached {
                return Err(Error::Precondition(
                    "normalization did not reach the standard homomorphism".into(),
                ));
            }
            n.moves.len()
        }
        None => 0,
    };
    let f = HomTuple::standard(g)?;
    let graph = build_cover_graph(&f)?;
    let h1 = h1_with_deck_action(&graph)?;
    let minus = minus_part(&h1);

    let (m_cycles, _) = hurwitz_cycles(&h1)?;
    let mut blocks: Vec<Vec<Vec<i64>>> = vec![m_cycles];
    for handle in 1..=g - 2 {
        let block: Result<Vec<Vec<i64>>> =
            [GroupQElem::ONE, GroupQElem::I, GroupQElem::J, GroupQElem::K]
                .iter()
                .map(|&q| {
                    let mut z = vec![0i64; graph.edge_count()];
                    z[graph.edge_index(handle, q)] += 1;
                    z[graph.edge_index(handle, q.neg())] -= 1;
                    h1.coords(&z)
                })
                .collect();
        blocks.push(block?);
    }
    let all: Vec<Vec<i64>> = blocks.iter().flatten().cloned().collect();
    let basis_spans_minus_part = all.len() == minus.basis.len()
        && all
            .iter()
            .map(|v| minus.coords(v))
            .collect::<Option<Vec<_>>>()
            .is_some_and(|rows| crate::lattice::int_det(&rows).abs() == 1);

    let mut a_blocks = Vec::with_capacity(8);
    for q in GroupQElem::ALL {
        let parts: Option<Vec<IntMatrix>> = blocks
            .iter()
            .map(|b| restricted_action(h1.rho(q), b))
            .collect();
        let parts = parts
            .ok_or_else(|| Error::Model("a block is not stable under the deck group".into()))?;
        a_blocks.push(block_diag_int(&parts));
    }
    let n = a_blocks[0].len();
    let mut rho = Vec::with_capacity(8);
    for a in &a_blocks {
        let b = int_transpose(
            &int_inverse(a).ok_or_else(|| Error::Model("A(q) is not unimodular".into()))?,
        );
        rho.push(block_diag_int(&[a.clone(), b]));
    }
    let mut form = vec![vec![0i64; 2 * n]; 2 * n];
    for t in 0..n {
        form[t][n + t] = 1;
        form[n + t][t] = -1;
    }
    let symplectic = rho
        .iter()
        .all(|r| int_mat_mul(&int_mat_mul(&int_transpose(r), &form), r) == form);
    let is_homomorphism = GroupQElem::ALL.iter().all(|&p| {
        GroupQElem::ALL
            .iter()
            .all(|&q| int_mat_mul(&rho[p.index()], &rho[q.index()]) == rho[p.mul(q).index()])
    });
    let minus_identity: IntMatrix = int_identity(2 * n)
        .iter()
        .map(|row| row.iter().map(|x| -x).collect())
        .collect();
    let minus_one_is_minus_identity = rho[GroupQElem::MINUS_ONE.index()] == minus_identity;

    let classify = |side: usize| -> Vec<BlockType> {
        (0..blocks.len())
            .map(|b| {
                let off = side * n + 4 * b;
                classify_block(
                    &sub_block(&rho[GroupQElem::I.index()], off, 4),
                    &sub_block(&rho[GroupQElem::J.index()], off, 4),
                )
            })
            .collect()
    };
    let a_types = classify(0);
    let b_types = classify(1);
    let type_string = if a_types == b_types {
        type_string(&a_types)
    } else {
        "unclassified".into()
    };
    Ok(PrymLatticeModel {
        g,
        rank: 2 * n,
        a_blocks,
        rho,
        form,
        a_types,
        b_types,
        type_string,
        basis_spans_minus_part,
        is_homomorphism,
        symplectic,
        minus_one_is_minus_identity,
        normalization_moves,
    })
}

/// Trace of the action of `q` on `H_1`.
pub fn h1_trace(h1: &CoverH1, q: GroupQElem) -> Rat {
    Matrix::from_i64(h1.rho(q)).trace()
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupQElem as G;

    #[test]
    fn graph_counts() {
        let f = HomTuple::standard(2).unwrap();
        let g = build_cover_graph(&f).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 16));
        assert!(g.is_connected());
        assert_eq!(g.signed_edge(G::ONE, G::I).unwrap(), (0, 1));
        let triv = HomTuple::new(2, vec![G::ONE; 4]).unwrap();
        assert!(!build_cover_graph(&triv).unwrap().is_connected());
        assert_eq!(
            h1_with_deck_action(&build_cover_graph(&triv).unwrap()).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn deck_action() {
        let g = build_cover_graph(&HomTuple::standard(2).unwrap()).unwrap();
        let h1 = h1_with_deck_action(&g).unwrap();
        assert_eq!(h1.rank(), 9);
        assert_eq!(*h1.rho(G::ONE), int_identity(9));
        let i2 = int_mat_mul(h1.rho(G::I), h1.rho(G::I));
        assert_eq!(i2, *h1.rho(G::MINUS_ONE));
        assert_eq!(int_mat_mul(&i2, &i2), int_identity(9));
        assert!(h1.rho_is_homomorphism());
        // Lefschetz: a free action has trace 1 on H_1 for q != 1
        assert_eq!(h1_trace(&h1, G::ONE), crate::linalg::q(9));
        assert_eq!(h1_trace(&h1, G::I), crate::linalg::q(1));
    }

    #[test]
    fn minus_part_rank_and_stability() {
        let g = build_cover_graph(&HomTuple::standard(2).unwrap()).unwrap();
        let h1 = h1_with_deck_action(&g).unwrap();
        let v = minus_part(&h1);
        assert_eq!(v.basis.len(), 4);
        assert!(v.is_saturated());
        for q in G::ALL {
            assert!(restricted_action(h1.rho(q), &v.basis).is_some());
        }
        let m1 = restricted_action(h1.rho(G::MINUS_ONE), &v.basis).unwrap();
        assert_eq!(
            m1,
            int_identity(4)
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect::<IntMatrix>()
        );
    }

    #[test]
    fn cycle_c() {
        let c = check_cycle_c_and_basis().unwrap();
        assert!(c.boundary_zero && c.terms_are_edges && c.zeta_integral && c.structure_matches_m);
        assert_eq!(c.det.abs(), 1);
        assert_eq!(c.minus_rank, 4);
    }

    #[test]
    fn m_and_hz_are_distinguished() {
        let p = AlgebraParams::hamilton();
        let hz = OrderLattice::hz(&p);
        let m = hurwitz_reference();
        let a = |o: &OrderLattice| (reference_action(o, G::I), reference_action(o, G::J));
        let (mi, mj) = a(&m);
        let (hi, hj) = a(&hz);
        assert_eq!(classify_block(&mi, &mj), BlockType::M);
        assert_eq!(classify_block(&hi, &hj), BlockType::HZ);
    }

    #[test]
    fn prym_models() {
        let m2 = prym_lattice_model(2, None, 1000).unwrap();
        assert_eq!(m2.rank, 8);
        assert_eq!(m2.type_string, "M^2");
        assert!(
            m2.symplectic
                && m2.is_homomorphism
                && m2.minus_one_is_minus_identity
                && m2.basis_spans_minus_part
        );
        let m3 = prym_lattice_model(3, None, 1000).unwrap();
        assert_eq!(m3.rank, 16);
        assert_eq!(m3.type_string, "(M ⊕ H_Z)^2");
        assert!(m3.symplectic && m3.basis_spans_minus_part);
        assert!(prym_lattice_model(4, None, 10).is_err());
    }
}
