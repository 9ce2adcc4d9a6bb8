//! Homomorphisms from genus-`g` surface groups onto the quaternion group.
//!
//! Generators are numbered `1..=2g`: `1..=g` are `alpha_1..alpha_g` and
//! `g+1..=2g` are `beta_1..beta_g`. A homomorphism is the tuple of images of
//! the generators; a move is an automorphism of the free group given by the
//! images of the generators, acting on homomorphisms by precomposition.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qalg::{generated_subgroup, GroupQElem};

/// A freely reduced word in the generators, letters `(index, ±1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeWord(Vec<(usize, i8)>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn new(letters: Vec<(usize, i8)>) -> Self {
        let mut out: Vec<(usize, i8)> = Vec::with_capacity(letters.len());
        for (g, e) in letters {
            assert!(e == 1 || e == -1, "exponents are ±1");
            match out.last() {
                Some(&(h, f)) if h == g && f == -e => {
                    out.pop();
                }
                _ => out.push((g, e)),
            }
        }
        FreeWord(out)
    }

    pub fn gen(index: usize) -> Self {
        FreeWord(vec![(index, 1)])
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &FreeWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord::new(v)
    }

    pub fn product(words: &[&FreeWord]) -> Self {
        FreeWord::new(words.iter().flat_map(|w| w.0.iter().copied()).collect())
    }

    /// `a b a^-1 b^-1`
    pub fn commutator(a: &FreeWord, b: &FreeWord) -> Self {
        FreeWord::product(&[a, b, &a.inverse(), &b.inverse()])
    }

    /// `by * self * by^-1`
    pub fn conjugate_by(&self, by: &FreeWord) -> Self {
        FreeWord::product(&[by, self, &by.inverse()])
    }

    /// `R = [alpha_1, beta_1] ... [alpha_g, beta_g]`
    pub fn relator(g: usize) -> Self {
        let parts: Vec<FreeWord> = (1..=g)
            .map(|m| FreeWord::commutator(&FreeWord::gen(alpha(m)), &FreeWord::gen(beta(g, m))))
            .collect();
        FreeWord::product(&parts.iter().collect::<Vec<_>>())
    }

    /// Substitute `images[i - 1]` for generator `i`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let mut letters = Vec::new();
        for &(g, e) in &self.0 {
            let img = &images[g - 1];
            if e == 1 {
                letters.extend_from_slice(&img.0);
            } else {
                letters.extend(img.0.iter().rev().map(|&(h, f)| (h, -f)));
            }
        }
        FreeWord::new(letters)
    }

    /// Cyclically reduced core.
    pub fn cyclic_reduction(&self) -> FreeWord {
        let mut v = self.0.as_slice();
        while v.len() >= 2 {
            let (a, b) = (v[0], v[v.len() - 1]);
            if a.0 == b.0 && a.1 == -b.1 {
                v = &v[1..v.len() - 1];
            } else {
                break;
            }
        }
        FreeWord(v.to_vec())
    }

    /// Conjugacy test in the free group: cyclic reductions are cyclic rotations
    /// of each other.
    pub fn is_conjugate_to(&self, other: &FreeWord) -> bool {
        let a = self.cyclic_reduction().0;
        let b = other.cyclic_reduction().0;
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|shift| (0..a.len()).all(|t| a[(t + shift) % a.len()] == b[t]))
    }

    pub fn max_index(&self) -> usize {
        self.0.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    format!("x{g}")
                } else {
                    format!("x{g}^-1")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn alpha(m: usize) -> usize {
    m
}

pub fn beta(g: usize, m: usize) -> usize {
    g + m
}

/// Images of `alpha_1..alpha_g, beta_1..beta_g` in `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HomTuple {
    pub g: usize,
    pub images: Vec<GroupQElem>,
}

impl HomTuple {
    pub fn new(g: usize, images: Vec<GroupQElem>) -> Result<Self> {
        if images.len() != 2 * g {
            return Err(Error::Parse(format!(
                "expected {} images for genus {g}, got {}",
                2 * g,
                images.len()
            )));
        }
        Ok(HomTuple { g, images })
    }

    /// The homomorphism with `alpha_{g-1} -> i`, `alpha_g -> j` and every other
    /// generator trivial.
    pub fn standard(g: usize) -> Result<Self> {
        if g < 2 {
            return Err(Error::GenusOutOfRange {
                genus: g,
                range: ">= 2",
            });
        }
        let mut images = vec![GroupQElem::ONE; 2 * g];
        images[alpha(g - 1) - 1] = GroupQElem::I;
        images[alpha(g) - 1] = GroupQElem::J;
        Ok(HomTuple { g, images })
    }

    pub fn alpha_image(&self, m: usize) -> GroupQElem {
        self.images[alpha(m) - 1]
    }

    pub fn beta_image(&self, m: usize) -> GroupQElem {
        self.images[beta(self.g, m) - 1]
    }

    /// Parse `2g` symbols from `{1,-1,i,-i,j,-j,k,-k}` separated by commas or spaces.
    pub fn parse(g: usize, s: &str) -> Result<Self> {
        let images: Result<Vec<GroupQElem>> = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(GroupQElem::parse)
            .collect();
        HomTuple::new(g, images?)
    }

    pub fn key(&self) -> u64 {
        self.images
            .iter()
            .fold(0u64, |acc, x| (acc << 3) | x.index() as u64)
    }

    pub fn from_key(g: usize, key: u64) -> Self {
        let images = (0..2 * g)
            .map(|t| GroupQElem::from_index(((key >> (3 * (2 * g - 1 - t))) & 7) as usize))
            .collect();
        HomTuple { g, images }
    }

    pub fn post_compose(&self, sigma: &QAutomorphism) -> HomTuple {
        HomTuple {
            g: self.g,
            images: self.images.iter().map(|&x| sigma.apply(x)).collect(),
        }
    }
}

impl fmt::Display for HomTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<&str> = self.images.iter().map(|x| x.symbol()).collect();
        f.write_str(&s.join(","))
    }
}

pub fn eval_word(h: &HomTuple, w: &FreeWord) -> Result<GroupQElem> {
    let mut acc = GroupQElem::ONE;
    for &(g, e) in w.letters() {
        if g == 0 || g > 2 * h.g {
            return Err(Error::GeneratorOutOfRange {
                index: g,
                genus: h.g,
            });
        }
        let x = h.images[g - 1];
        acc = acc.mul(if e == 1 { x } else { x.inv() });
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomClass {
    pub valid: bool,
    pub surjective: bool,
}

pub fn classify_hom(h: &HomTuple) -> HomClass {
    let r = eval_word(h, &FreeWord::relator(h.g)).expect("relator uses in-range generators");
    HomClass {
        valid: r == GroupQElem::ONE,
        surjective: generated_subgroup(&h.images) == 0xff,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    Psi(usize),
    /// `beta_m -> beta_m alpha_m^2`
    BetaTwist(usize),
    /// `alpha_m -> alpha_m beta_m`
    AlphaSlide(usize),
    /// `beta_m -> beta_m alpha_m`
    BetaSlide(usize),
    /// every generator `x -> w x w^-1`
    Conj(FreeWord),
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveKind::Psi(k) => write!(f, "PSI({k})"),
            MoveKind::BetaTwist(m) => write!(f, "BETA_TWIST({m})"),
            MoveKind::AlphaSlide(m) => write!(f, "ALPHA_SLIDE({m})"),
            MoveKind::BetaSlide(m) => write!(f, "BETA_SLIDE({m})"),
            MoveKind::Conj(w) => write!(f, "CONJ({w})"),
        }
    }
}

/// An endomorphism of the free group on `2g` generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub g: usize,
    pub kind: MoveKind,
    pub images: Vec<FreeWord>,
}

impl Move {
    fn identity_images(g: usize) -> Vec<FreeWord> {
        (1..=2 * g).map(FreeWord::gen).collect()
    }

    pub fn psi(g: usize, k: usize) -> Result<Move> {
        if g < 2 || k == 0 || k >= g {
            return Err(Error::Precondition(format!(
                "psi_k needs 1 <= k <= g-1 (g = {g}, k = {k})"
            )));
        }
        let a = |m: usize| FreeWord::gen(alpha(m));
        let b = |m: usize| FreeWord::gen(beta(g, m));
        let ak1 = a(k + 1);
        let mut images = Vec::with_capacity(2 * g);
        for m in 1..=g {
            images.push(if m == k {
                ak1.concat(&a(k))
            } else if m == k + 1 {
                a(k + 1).conjugate_by(&b(k))
            } else {
                a(m).conjugate_by(&ak1)
            });
        }
        for m in 1..=g {
            images.push(if m == k {
                b(k)
            } else if m == k + 1 {
                FreeWord::product(&[&ak1, &b(k + 1), &ak1.inverse(), &b(k).inverse()])
            } else {
                b(m).conjugate_by(&ak1)
            });
        }
        Ok(Move {
            g,
            kind: MoveKind::Psi(k),
            images,
        })
    }

    fn check_handle(g: usize, m: usize) -> Result<()> {
        if m == 0 || m > g {
            return Err(Error::GeneratorOutOfRange { index: m, genus: g });
        }
        Ok(())
    }

    pub fn beta_twist(g: usize, m: usize) -> Result<Move> {
        Self::check_handle(g, m)?;
        let mut images = Self::identity_images(g);
        let a = FreeWord::gen(alpha(m));
        images[beta(g, m) - 1] = FreeWord::product(&[&FreeWord::gen(beta(g, m)), &a, &a]);
        Ok(Move {
            g,
            kind: MoveKind::BetaTwist(m),
            images,
        })
    }

    pub fn alpha_slide(g: usize, m: usize) -> Result<Move> {
        Self::check_handle(g, m)?;
        let mut images = Self::identity_images(g);
        images[alpha(m) - 1] = FreeWord::gen(alpha(m)).concat(&FreeWord::gen(beta(g, m)));
        Ok(Move {
            g,
            kind: MoveKind::AlphaSlide(m),
            images,
        })
    }

    pub fn beta_slide(g: usize, m: usize) -> Result<Move> {
        Self::check_handle(g, m)?;
        let mut images = Self::identity_images(g);
        images[beta(g, m) - 1] = FreeWord::gen(beta(g, m)).concat(&FreeWord::gen(alpha(m)));
        Ok(Move {
            g,
            kind: MoveKind::BetaSlide(m),
            images,
        })
    }

    pub fn conj(g: usize, w: FreeWord) -> Result<Move> {
        if w.max_index() > 2 * g {
            return Err(Error::GeneratorOutOfRange {
                index: w.max_index(),
                genus: g,
            });
        }
        let images = Self::identity_images(g)
            .iter()
            .map(|x| x.conjugate_by(&w))
            .collect();
        Ok(Move {
            g,
            kind: MoveKind::Conj(w),
            images,
        })
    }

    /// The move set used for normalization and orbit search: every `psi_k`,
    /// the twists and slides on each handle, and conjugation by each generator.
    pub fn standard_set(g: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        for k in 1..g {
            moves.push(Move::psi(g, k).expect("valid k"));
        }
        for m in 1..=g {
            moves.push(Move::beta_twist(g, m).expect("valid m"));
            moves.push(Move::alpha_slide(g, m).expect("valid m"));
            moves.push(Move::beta_slide(g, m).expect("valid m"));
        }
        for x in 1..=2 * g {
            moves.push(Move::conj(g, FreeWord::gen(x)).expect("valid generator"));
        }
        moves
    }

    /// Image of the surface relator under this move.
    pub fn image_of_relator(&self) -> FreeWord {
        FreeWord::relator(self.g).substitute(&self.images)
    }

    /// Membership in `A_g`: the relator maps to a conjugate of itself.
    pub fn preserves_relator_class(&self) -> bool {
        self.image_of_relator()
            .is_conjugate_to(&FreeWord::relator(self.g))
    }
}

/// Precomposition `h ∘ m`.
pub fn apply_move(h: &HomTuple, m: &Move) -> HomTuple {
    assert_eq!(h.g, m.g, "move and homomorphism genus differ");
    let images = m
        .images
        .iter()
        .map(|w| eval_word(h, w).expect("move words are in range"))
        .collect();
    HomTuple { g: h.g, images }
}

/// `psi_k(R) = alpha_{k+1} R alpha_{k+1}^-1` after free reduction.
pub fn verify_psi_in_ag(g: usize, k: usize) -> Result<bool> {
    let psi = Move::psi(g, k)?;
    let expected = FreeWord::relator(g).conjugate_by(&FreeWord::gen(alpha(k + 1)));
    Ok(psi.image_of_relator() == expected)
}

/// An automorphism of `Q`, determined by the images of `i` and `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QAutomorphism {
    table: [GroupQElem; 8],
}

impl QAutomorphism {
    pub fn apply(&self, x: GroupQElem) -> GroupQElem {
        self.table[x.index()]
    }

    /// All 24 automorphisms, found by checking every candidate on the full table.
    pub fn all() -> Vec<QAutomorphism> {
        let mut out = Vec::new();
        for a in GroupQElem::ALL {
            for b in GroupQElem::ALL {
                let mut table = [GroupQElem::ONE; 8];
                for x in GroupQElem::ALL {
                    // x = ±(i^p j^q) with unit determined by the quaternion unit
                    let base = match x.unit() {
                        0 => GroupQElem::ONE,
                        1 => a,
                        2 => b,
                        _ => a.mul(b),
                    };
                    table[x.index()] = if x.is_negative() {
                        base.mul(a.mul(a))
                    } else {
                        base
                    };
                }
                let hom = GroupQElem::ALL.iter().all(|&x| {
                    GroupQElem::ALL
                        .iter()
                        .all(|&y| table[x.mul(y).index()] == table[x.index()].mul(table[y.index()]))
                });
                let mut seen = table.to_vec();
                seen.sort();
                seen.dedup();
                if hom && seen.len() == 8 {
                    out.push(QAutomorphism { table });
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NormalizationPhase {
    Trivial,
    Explicit,
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub reached: bool,
    pub phase: NormalizationPhase,
    pub moves: Vec<Move>,
    pub nodes_explored: usize,
}

fn is_pm_one(x: GroupQElem) -> bool {
    x.is_central()
}

/// The intermediate shape: `alpha_{g-1} -> i`, `alpha_g -> j`, every other
/// generator to `±1`.
pub fn has_phase1_shape(h: &HomTuple) -> bool {
    let g = h.g;
    g >= 2
        && h.alpha_image(g - 1) == GroupQElem::I
        && h.alpha_image(g) == GroupQElem::J
        && (1..g - 1).all(|m| is_pm_one(h.alpha_image(m)))
        && (1..=g).all(|m| is_pm_one(h.beta_image(m)))
}

struct Replay {
    h: HomTuple,
    moves: Vec<Move>,
}

impl Replay {
    fn push(&mut self, m: Move) {
        self.h = apply_move(&self.h, &m);
        self.moves.push(m);
    }

    /// Negate `alpha_m` (m <= g-2) leaving every other image unchanged.
    fn flip_alpha(&mut self, m: usize) {
        let g = self.h.g;
        if m == g - 2 {
            let psi = Move::psi(g, m).expect("valid k");
            self.push(psi.clone());
            self.push(psi);
            return;
        }
        let psi = Move::psi(g, m).expect("valid k");
        if self.h.alpha_image(m + 1) == GroupQElem::MINUS_ONE {
            self.push(psi);
        } else {
            self.flip_alpha(m + 1);
            self.push(psi);
            self.flip_alpha(m + 1);
        }
    }
}

fn explicit_normalization(h: &HomTuple) -> Vec<Move> {
    let g = h.g;
    let mut rp = Replay {
        h: h.clone(),
        moves: Vec::new(),
    };
    for m in [g, g - 1] {
        if rp.h.beta_image(m) == GroupQElem::MINUS_ONE {
            rp.push(Move::beta_twist(g, m).expect("valid m"));
        }
    }
    for m in 1..g.saturating_sub(1) {
        if rp.h.beta_image(m) == GroupQElem::MINUS_ONE {
            if rp.h.alpha_image(m) == GroupQElem::ONE {
                rp.push(Move::alpha_slide(g, m).expect("valid m"));
            }
            rp.push(Move::beta_slide(g, m).expect("valid m"));
        }
    }
    for m in 1..g.saturating_sub(1) {
        if rp.h.alpha_image(m) == GroupQElem::MINUS_ONE {
            rp.flip_alpha(m);
        }
    }
    rp.moves
}

/// Find moves carrying `h` to the standard homomorphism.
///
/// Homomorphisms in the intermediate shape are handled by the explicit move
/// sequence; anything else is searched breadth-first over the standard move set
/// with at most `node_budget` visited homomorphisms.
pub fn normalize_hom(h: &HomTuple, node_budget: usize) -> Result<Normalization> {
    let cls = classify_hom(h);
    if !cls.valid {
        return Err(Error::InvalidHom(
            eval_word(h, &FreeWord::relator(h.g))?.to_string(),
        ));
    }
    if !cls.surjective {
        return Err(Error::NotSurjective);
    }
    let target = HomTuple::standard(h.g)?;
    if *h == target {
        return Ok(Normalization {
            reached: true,
            phase: NormalizationPhase::Trivial,
            moves: vec![],
            nodes_explored: 1,
        });
    }
    if has_phase1_shape(h) {
        let moves = explicit_normalization(h);
        let end = moves.iter().fold(h.clone(), |acc, m| apply_move(&acc, m));
        return Ok(Normalization {
            reached: end == target,
            phase: NormalizationPhase::Explicit,
            moves,
            nodes_explored: 0,
        });
    }
    let moves = Move::standard_set(h.g);
    let start = h.key();
    let goal = target.key();
    let mut parent: HashMap<u64, (u64, usize)> = HashMap::new();
    let mut seen: HashSet<u64> = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    let mut found = false;
    while let Some(cur) = queue.pop_front() {
        if cur == goal {
            found = true;
            break;
        }
        let hc = HomTuple::from_key(h.g, cur);
        for (mi, m) in moves.iter().enumerate() {
            let next = apply_move(&hc, m).key();
            if seen.len() >= node_budget {
                break;
            }
            if seen.insert(next) {
                parent.insert(next, (cur, mi));
                queue.push_back(next);
            }
        }
    }
    if !found && seen.contains(&goal) {
        found = true;
    }
    let mut path = Vec::new();
    if found {
        let mut cur = goal;
        while cur != start {
            let (p, mi) = parent[&cur];
            path.push(moves[mi].clone());
            cur = p;
        }
        path.reverse();
    }
    Ok(Normalization {
        reached: found,
        phase: NormalizationPhase::Search,
        moves: path,
        nodes_explored: seen.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub genus: usize,
    pub tuples: u64,
    pub valid: u64,
    pub surjective: u64,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    /// Orbits after also identifying homomorphisms with the same kernel.
    pub kernel_class_count: usize,
    pub kernel_orbit_count: usize,
    pub standard_orbit_size: usize,
    pub phase1_shapes: usize,
    pub phase1_in_standard_orbit: bool,
}

/// Enumerate every homomorphism for `g <= 3`, keep the surjections and split
/// them into orbits under the standard move set.
pub fn enumerate_surjections(g: usize) -> Result<OrbitReport> {
    if g == 0 || g > 3 {
        return Err(Error::GenusOutOfRange {
            genus: g,
            range: "1..=3",
        });
    }
    let n = 2 * g;
    let total = 8u64.pow(n as u32);
    let mut valid = 0u64;
    let mut surj: Vec<u64> = Vec::new();
    for key in 0..total {
        let h = HomTuple::from_key(g, key);
        let c = classify_hom(&h);
        if c.valid {
            valid += 1;
            if c.surjective {
                surj.push(key);
            }
        }
    }
    let moves = if g >= 2 {
        Move::standard_set(g)
    } else {
        Vec::new()
    };
    let orbits = partition(g, &surj, &moves, &[]);
    let auts = QAutomorphism::all();
    let kernel_orbits = partition(g, &surj, &moves, &auts);
    let kernel_classes = partition(g, &surj, &[], &auts);

    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let (standard_orbit_size, phase1_shapes, phase1_in) = if g >= 2 {
        let std_key = HomTuple::standard(g)?.key();
        let orbit: HashSet<u64> = orbits
            .iter()
            .find(|o| o.contains(&std_key))
            .map(|o| o.iter().copied().collect())
            .unwrap_or_default();
        let shapes: Vec<u64> = surj
            .iter()
            .copied()
            .filter(|&k| has_phase1_shape(&HomTuple::from_key(g, k)))
            .collect();
        (
            orbit.len(),
            shapes.len(),
            shapes.iter().all(|k| orbit.contains(k)),
        )
    } else {
        (0, 0, true)
    };
    Ok(OrbitReport {
        genus: g,
        tuples: total,
        valid,
        surjective: surj.len() as u64,
        orbit_count: orbits.len(),
        orbit_sizes: sizes,
        kernel_class_count: kernel_classes.len(),
        kernel_orbit_count: kernel_orbits.len(),
        standard_orbit_size,
        phase1_shapes,
        phase1_in_standard_orbit: phase1_in,
    })
}

/// Connected components of `keys` under precomposition by `moves` and
/// postcomposition by `auts`. Each component is sorted; components are
/// ordered by their smallest key.
fn partition(g: usize, keys: &[u64], moves: &[Move], auts: &[QAutomorphism]) -> Vec<Vec<u64>> {
    let mut seen: HashSet<u64> = HashSet::with_capacity(keys.len());
    let mut comps = Vec::new();
    for &k in keys {
        if !seen.insert(k) {
            continue;
        }
        let mut comp = vec![k];
        let mut queue = VecDeque::from([k]);
        while let Some(cur) = queue.pop_front() {
            let h = HomTuple::from_key(g, cur);
            let nexts = moves
                .iter()
                .map(|m| apply_move(&h, m))
                .chain(auts.iter().map(|a| h.post_compose(a)));
            for nh in nexts {
                let nk = nh.key();
                if seen.insert(nk) {
                    comp.push(nk);
                    queue.push_back(nk);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Numerology {
    pub genus_tilde: i64,
    pub genus_hat: i64,
    pub prym_dim: i64,
    pub moduli_dim: i64,
}

/// Genera of the quaternionic cover and its quotient by `±1`, the Prym
/// dimension, and the dimension `n(n-1)/2` of the moduli of `2n`-dimensional
/// quaternion-type abelian varieties.
pub fn genus_numerology(g: i64, n: i64) -> Result<Numerology> {
    if g < 2 {
        return Err(Error::GenusOutOfRange {
            genus: g.max(0) as usize,
            range: ">= 2",
        });
    }
    Ok(Numerology {
        genus_tilde: 8 * g - 7,
        genus_hat: 4 * g - 3,
        prym_dim: 4 * (g - 1),
        moduli_dim: n * (n - 1) / 2,
    })
}
