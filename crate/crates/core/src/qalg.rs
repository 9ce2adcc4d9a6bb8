//! Definite quaternion algebras over `Q`, the quaternion group, the orders
//! `H_Z` and `M` (Hurwitz integers), and the embedding `F -> M_2(K)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, qf, solve_in_span, Matrix, Rat};

/// `(r, s)` with `i^2 = r`, `j^2 = s`, both negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    pub r: Rat,
    pub s: Rat,
}

impl AlgebraParams {
    pub fn new(r: Rat, s: Rat) -> Result<Self> {
        if !r.is_negative() || !s.is_negative() {
            return Err(Error::InvalidParams(format!(
                "r = {r}, s = {s}: both must be negative"
            )));
        }
        Ok(AlgebraParams { r, s })
    }

    /// Hamilton's quaternions over `Q` (`r = s = -1`).
    pub fn hamilton() -> Self {
        AlgebraParams { r: q(-1), s: q(-1) }
    }

    pub fn is_hamilton(&self) -> bool {
        self.r == q(-1) && self.s == q(-1)
    }
}

impl fmt::Display for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.r, self.s)
    }
}

/// `a + b i + c j + d k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatElem {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub params: AlgebraParams,
}

impl QuatElem {
    pub fn new(params: &AlgebraParams, a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        QuatElem {
            a,
            b,
            c,
            d,
            params: params.clone(),
        }
    }

    pub fn from_ints(params: &AlgebraParams, coeffs: [i64; 4]) -> Self {
        let [a, b, c, d] = coeffs;
        Self::new(params, q(a), q(b), q(c), q(d))
    }

    pub fn scalar(params: &AlgebraParams, x: Rat) -> Self {
        Self::new(params, x, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn one(params: &AlgebraParams) -> Self {
        Self::from_ints(params, [1, 0, 0, 0])
    }
    pub fn i(params: &AlgebraParams) -> Self {
        Self::from_ints(params, [0, 1, 0, 0])
    }
    pub fn j(params: &AlgebraParams) -> Self {
        Self::from_ints(params, [0, 0, 1, 0])
    }
    pub fn k(params: &AlgebraParams) -> Self {
        Self::from_ints(params, [0, 0, 0, 1])
    }

    /// `(1 + i + j + k) / 2` in Hamilton's quaternions.
    pub fn zeta() -> Self {
        let p = AlgebraParams::hamilton();
        Self::new(&p, qf(1, 2), qf(1, 2), qf(1, 2), qf(1, 2))
    }

    pub fn coords(&self) -> [Rat; 4] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    fn check(&self, other: &QuatElem) -> Result<()> {
        if self.params != other.params {
            return Err(Error::MismatchedAlgebra(
                self.params.to_string(),
                other.params.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_mul(&self, y: &QuatElem) -> Result<QuatElem> {
        self.check(y)?;
        let (r, s) = (&self.params.r, &self.params.s);
        let rs = r * s;
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&y.a, &y.b, &y.c, &y.d);
        let a = a1 * a2 + r * (b1 * b2) + s * (c1 * c2) - &rs * (d1 * d2);
        let b = a1 * b2 + b1 * a2 - s * (c1 * d2) + s * (d1 * c2);
        let c = a1 * c2 + c1 * a2 + r * (b1 * d2) - r * (d1 * b2);
        let d = a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2;
        Ok(QuatElem::new(&self.params, a, b, c, d))
    }

    pub fn try_add(&self, y: &QuatElem) -> Result<QuatElem> {
        self.check(y)?;
        Ok(QuatElem::new(
            &self.params,
            &self.a + &y.a,
            &self.b + &y.b,
            &self.c + &y.c,
            &self.d + &y.d,
        ))
    }

    pub fn conj(&self) -> QuatElem {
        QuatElem::new(&self.params, self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    /// Reduced norm `x * conj(x) = a^2 - r b^2 - s c^2 + r s d^2`.
    pub fn norm(&self) -> Rat {
        let (r, s) = (&self.params.r, &self.params.s);
        &self.a * &self.a - r * (&self.b * &self.b) - s * (&self.c * &self.c)
            + r * s * (&self.d * &self.d)
    }

    pub fn trace(&self) -> Rat {
        &self.a * q(2)
    }

    pub fn scale(&self, x: &Rat) -> QuatElem {
        QuatElem::new(
            &self.params,
            &self.a * x,
            &self.b * x,
            &self.c * x,
            &self.d * x,
        )
    }

    /// Matrix of `y -> self * y` in the basis `(1, i, j, k)`; column `t` holds
    /// the coordinates of `self * e_t`.
    pub fn left_mul_matrix(&self) -> Matrix {
        let p = &self.params;
        let basis = [
            QuatElem::one(p),
            QuatElem::i(p),
            QuatElem::j(p),
            QuatElem::k(p),
        ];
        let cols: Vec<[Rat; 4]> = basis.iter().map(|e| (self * e).coords()).collect();
        Matrix::from_rows(
            (0..4)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect(),
        )
    }
}

impl Mul for &QuatElem {
    type Output = QuatElem;
    fn mul(self, rhs: &QuatElem) -> QuatElem {
        self.try_mul(rhs)
            .expect("quaternions from the same algebra")
    }
}

impl Add for &QuatElem {
    type Output = QuatElem;
    fn add(self, rhs: &QuatElem) -> QuatElem {
        self.try_add(rhs)
            .expect("quaternions from the same algebra")
    }
}

impl Sub for &QuatElem {
    type Output = QuatElem;
    fn sub(self, rhs: &QuatElem) -> QuatElem {
        self + &(-rhs)
    }
}

impl Neg for &QuatElem {
    type Output = QuatElem;
    fn neg(self) -> QuatElem {
        self.scale(&q(-1))
    }
}

impl fmt::Display for QuatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuatOp {
    Mul,
    Conj,
    Norm,
    Trace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuatValue {
    Elem(QuatElem),
    Scalar(Rat),
}

pub fn quat_arith(op: QuatOp, x: &QuatElem, y: Option<&QuatElem>) -> Result<QuatValue> {
    Ok(match op {
        QuatOp::Mul => {
            let y = y.ok_or_else(|| Error::Precondition("mul needs two operands".into()))?;
            QuatValue::Elem(x.try_mul(y)?)
        }
        QuatOp::Conj => QuatValue::Elem(x.conj()),
        QuatOp::Norm => QuatValue::Scalar(x.norm()),
        QuatOp::Trace => QuatValue::Scalar(x.trace()),
    })
}

/// An element of the quaternion group `{±1, ±i, ±j, ±k}`.
///
/// Encoded as `2 * unit + sign_bit` with units ordered `1, i, j, k`, so the
/// indices `0..8` run through `+1, -1, +i, -i, +j, -j, +k, -k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupQElem(u8);

// UNIT_MUL[a][b] = (sign, unit) of e_a * e_b for units 1, i, j, k
const UNIT_MUL: [[(bool, u8); 4]; 4] = [
    [(false, 0), (false, 1), (false, 2), (false, 3)],
    [(false, 1), (true, 0), (false, 3), (true, 2)],
    [(false, 2), (true, 3), (true, 0), (false, 1)],
    [(false, 3), (false, 2), (true, 1), (true, 0)],
];

impl GroupQElem {
    pub const ONE: GroupQElem = GroupQElem(0);
    pub const MINUS_ONE: GroupQElem = GroupQElem(1);
    pub const I: GroupQElem = GroupQElem(2);
    pub const MINUS_I: GroupQElem = GroupQElem(3);
    pub const J: GroupQElem = GroupQElem(4);
    pub const MINUS_J: GroupQElem = GroupQElem(5);
    pub const K: GroupQElem = GroupQElem(6);
    pub const MINUS_K: GroupQElem = GroupQElem(7);

    /// Fixed order `+1, -1, +i, -i, +j, -j, +k, -k`.
    pub const ALL: [GroupQElem; 8] = [
        Self::ONE,
        Self::MINUS_ONE,
        Self::I,
        Self::MINUS_I,
        Self::J,
        Self::MINUS_J,
        Self::K,
        Self::MINUS_K,
    ];

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < 8);
        GroupQElem(i as u8)
    }

    pub fn unit(self) -> u8 {
        self.0 >> 1
    }

    pub fn is_negative(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn mul(self, other: GroupQElem) -> GroupQElem {
        let (neg, unit) = UNIT_MUL[self.unit() as usize][other.unit() as usize];
        let sign = neg ^ self.is_negative() ^ other.is_negative();
        GroupQElem(unit * 2 + u8::from(sign))
    }

    pub fn neg(self) -> GroupQElem {
        GroupQElem(self.0 ^ 1)
    }

    pub fn inv(self) -> GroupQElem {
        if self.unit() == 0 {
            self
        } else {
            self.neg()
        }
    }

    pub fn pow(self, e: i64) -> GroupQElem {
        let base = if e < 0 { self.inv() } else { self };
        (0..e.unsigned_abs()).fold(Self::ONE, |acc, _| acc.mul(base))
    }

    pub fn is_central(self) -> bool {
        self.unit() == 0
    }

    pub fn to_quat(self) -> QuatElem {
        let p = AlgebraParams::hamilton();
        let mut c = [0i64; 4];
        c[self.unit() as usize] = if self.is_negative() { -1 } else { 1 };
        QuatElem::from_ints(&p, c)
    }

    pub fn symbol(self) -> &'static str {
        ["1", "-1", "i", "-i", "j", "-j", "k", "-k"][self.index()]
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('+').unwrap_or(t);
        Self::ALL
            .iter()
            .copied()
            .find(|g| g.symbol() == t)
            .ok_or_else(|| Error::Parse(format!("unknown group element '{s}'")))
    }
}

impl fmt::Display for GroupQElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Subgroup of `Q` generated by `gens`, as a bitmask over indices.
pub fn generated_subgroup(gens: &[GroupQElem]) -> u8 {
    let mut mask: u8 = 1;
    loop {
        let mut next = mask;
        for a in GroupQElem::ALL
            .iter()
            .filter(|a| mask & (1 << a.index()) != 0)
        {
            for g in gens {
                next |= 1 << a.mul(*g).index();
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrderLabel {
    HZ,
    HurwitzM,
}

/// A Z-lattice in a quaternion algebra with a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderLattice {
    pub basis: [QuatElem; 4],
    pub label: OrderLabel,
}

impl OrderLattice {
    /// `Z + Zi + Zj + Zk`.
    pub fn hz(params: &AlgebraParams) -> Self {
        OrderLattice {
            basis: [
                QuatElem::one(params),
                QuatElem::i(params),
                QuatElem::j(params),
                QuatElem::k(params),
            ],
            label: OrderLabel::HZ,
        }
    }

    /// `Z zeta + Zi + Zj + Zk` (Hurwitz integers); only for `r = s = -1`.
    pub fn hurwitz() -> Self {
        let p = AlgebraParams::hamilton();
        OrderLattice {
            basis: [
                QuatElem::zeta(),
                QuatElem::i(&p),
                QuatElem::j(&p),
                QuatElem::k(&p),
            ],
            label: OrderLabel::HurwitzM,
        }
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.basis[0].params
    }

    pub fn rational_coords(&self, x: &QuatElem) -> Option<Vec<Rat>> {
        if &x.params != self.params() {
            return None;
        }
        let basis: Vec<Vec<Rat>> = self.basis.iter().map(|b| b.coords().to_vec()).collect();
        solve_in_span(&basis, &x.coords())
    }

    /// Integer coordinates of `x` in the basis, or `None` when `x` is not in the lattice.
    pub fn coords(&self, x: &QuatElem) -> Option<[i64; 4]> {
        let c = self.rational_coords(x)?;
        let ints: Option<Vec<i64>> = c.iter().map(crate::lattice::rat_to_i64).collect();
        ints.map(|v| [v[0], v[1], v[2], v[3]])
    }

    pub fn contains(&self, x: &QuatElem) -> bool {
        self.coords(x).is_some()
    }

    pub fn element(&self, coeffs: [i64; 4]) -> QuatElem {
        let p = self.params().clone();
        self.basis
            .iter()
            .zip(coeffs)
            .fold(QuatElem::scalar(&p, Rat::zero()), |acc, (b, c)| {
                &acc + &b.scale(&q(c))
            })
    }

    /// Closed under the canonical involution.
    pub fn is_conj_closed(&self) -> bool {
        self.basis.iter().all(|b| self.contains(&b.conj()))
    }

    /// Matrix of left multiplication by `x` in this basis (columns are images).
    pub fn left_mul_matrix(&self, x: &QuatElem) -> Option<Matrix> {
        let cols: Option<Vec<Vec<Rat>>> = self
            .basis
            .iter()
            .map(|b| self.rational_coords(&(x * b)))
            .collect();
        let cols = cols?;
        Some(Matrix::from_rows(
            (0..4)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect(),
        ))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HurwitzIndex {
    pub d: i64,
    pub check: bool,
}

/// For `m` in `M`, the index `|det|` of `Z m + Z im + Z jm + Z km` in `M`,
/// compared against `2 N(m)^2`.
pub fn hurwitz_index_identity(m: &QuatElem) -> Result<HurwitzIndex> {
    if !m.params.is_hamilton() {
        return Err(Error::InvalidParams(
            "the Hurwitz order needs r = s = -1".into(),
        ));
    }
    let order = OrderLattice::hurwitz();
    if !order.contains(m) || m.is_zero() {
        return Err(Error::NotInHurwitzOrder(m.to_string()));
    }
    let p = &m.params;
    let images = [
        m.clone(),
        &QuatElem::i(p) * m,
        &QuatElem::j(p) * m,
        &QuatElem::k(p) * m,
    ];
    let rows: Vec<Vec<Rat>> = images
        .iter()
        .map(|x| {
            order
                .rational_coords(x)
                .expect("M is closed under left multiplication by H_Z")
        })
        .collect();
    let det = Matrix::from_rows(rows).det().abs();
    let d = crate::lattice::rat_to_i64(&det).expect("integral index");
    let n = m.norm();
    Ok(HurwitzIndex {
        d,
        check: det == q(2) * &n * &n,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterInfo {
    pub degree: i64,
    pub frobenius_schur: i64,
    /// Values on the fixed element order `+1, -1, +i, -i, +j, -j, +k, -k`.
    pub values: Vec<i64>,
    pub trivial_on_minus_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedderburnReport {
    pub conjugacy_classes: Vec<Vec<String>>,
    pub characters: Vec<CharacterInfo>,
}

impl WedderburnReport {
    pub fn summary(&self) -> Vec<(i64, i64)> {
        self.characters
            .iter()
            .map(|c| (c.degree, c.frobenius_schur))
            .collect()
    }
}

/// Irreducible characters of `Q` and their Frobenius–Schur indicators.
///
/// Linear characters are found as sign-valued homomorphisms (checked on the
/// whole multiplication table); the remaining character is read off from the
/// regular character once the class count fixes the number of irreducibles.
pub fn group_ring_wedderburn() -> WedderburnReport {
    let all = GroupQElem::ALL;
    let mut classes: Vec<Vec<GroupQElem>> = Vec::new();
    for &x in &all {
        if classes.iter().any(|c| c.contains(&x)) {
            continue;
        }
        let mut cls: Vec<GroupQElem> = all.iter().map(|&g| g.mul(x).mul(g.inv())).collect();
        cls.sort();
        cls.dedup();
        classes.push(cls);
    }

    let mut linear: Vec<Vec<i64>> = Vec::new();
    for ci in [1i64, -1] {
        for cj in [1i64, -1] {
            // candidate values: sign character determined by images of i and j
            let value = |g: GroupQElem| -> i64 {
                match g.unit() {
                    0 => 1,
                    1 => ci,
                    2 => cj,
                    _ => ci * cj,
                }
            };
            let hom = all
                .iter()
                .all(|&a| all.iter().all(|&b| value(a.mul(b)) == value(a) * value(b)));
            if hom {
                linear.push(all.iter().map(|&g| value(g)).collect());
            }
        }
    }
    let order = all.len() as i64;
    let mut chars = linear.clone();
    let remaining = classes.len() - linear.len();
    let remaining_sq: i64 = order - linear.iter().map(|c| c[0] * c[0]).sum::<i64>();
    if remaining == 1 {
        let deg = (1..=remaining_sq)
            .find(|d| d * d == remaining_sq)
            .expect("square degree");
        // regular character minus the linear part, divided by the degree
        let values: Vec<i64> = all
            .iter()
            .enumerate()
            .map(|(idx, &g)| {
                let reg = if g == GroupQElem::ONE { order } else { 0 };
                (reg - linear.iter().map(|c| c[idx]).sum::<i64>()) / deg
            })
            .collect();
        chars.push(values);
    }
    let characters = chars
        .into_iter()
        .map(|values| {
            let fs_sum: i64 = all.iter().map(|&g| values[g.mul(g).index()]).sum();
            CharacterInfo {
                degree: values[0],
                frobenius_schur: fs_sum / order,
                trivial_on_minus_one: values[GroupQElem::MINUS_ONE.index()] == values[0],
                values,
            }
        })
        .collect();
    WedderburnReport {
        conjugacy_classes: classes
            .iter()
            .map(|c| c.iter().map(|g| g.symbol().to_string()).collect())
            .collect(),
        characters,
    }
}

/// An element `u + v sqrt(r)` of `K = Q(sqrt r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadNum {
    pub u: Rat,
    pub v: Rat,
}

impl QuadNum {
    pub fn new(u: Rat, v: Rat) -> Self {
        QuadNum { u, v }
    }
    pub fn zero() -> Self {
        QuadNum::new(Rat::zero(), Rat::zero())
    }
    pub fn one() -> Self {
        QuadNum::new(Rat::one(), Rat::zero())
    }
    pub fn conj(&self) -> Self {
        QuadNum::new(self.u.clone(), -&self.v)
    }
    pub fn add(&self, o: &QuadNum) -> Self {
        QuadNum::new(&self.u + &o.u, &self.v + &o.v)
    }
    pub fn mul(&self, o: &QuadNum, r: &Rat) -> Self {
        QuadNum::new(
            &self.u * &o.u + r * (&self.v * &o.v),
            &self.u * &o.v + &self.v * &o.u,
        )
    }
    pub fn scale(&self, x: &Rat) -> Self {
        QuadNum::new(&self.u * x, &self.v * x)
    }
}

/// 2×2 matrix over `K = Q(sqrt r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    pub r: Rat,
    pub entries: [[QuadNum; 2]; 2],
}

impl KMatrix {
    pub fn identity(r: &Rat) -> Self {
        KMatrix {
            r: r.clone(),
            entries: [
                [QuadNum::one(), QuadNum::zero()],
                [QuadNum::zero(), QuadNum::one()],
            ],
        }
    }

    pub fn mul(&self, o: &KMatrix) -> KMatrix {
        let r = &self.r;
        let e = &self.entries;
        let f = &o.entries;
        let cell = |a: usize, b: usize| e[a][0].mul(&f[0][b], r).add(&e[a][1].mul(&f[1][b], r));
        KMatrix {
            r: r.clone(),
            entries: [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]],
        }
    }

    pub fn add(&self, o: &KMatrix) -> KMatrix {
        let e = &self.entries;
        let f = &o.entries;
        KMatrix {
            r: self.r.clone(),
            entries: [
                [e[0][0].add(&f[0][0]), e[0][1].add(&f[0][1])],
                [e[1][0].add(&f[1][0]), e[1][1].add(&f[1][1])],
            ],
        }
    }
}

/// `x + y j -> [[x, y], [s conj(y), conj(x)]]` with `x = a + b i`, `y = c + d i`
/// in `K = Q(i) = Q(sqrt r)`.
pub fn embed_f_in_m2k(x: &QuatElem) -> KMatrix {
    let s = &x.params.s;
    let xk = QuadNum::new(x.a.clone(), x.b.clone());
    // c j + d k = (c + d i) j
    let yk = QuadNum::new(x.c.clone(), x.d.clone());
    KMatrix {
        r: x.params.r.clone(),
        entries: [[xk.clone(), yk.clone()], [yk.conj().scale(s), xk.conj()]],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbedCheck {
    pub pairs: usize,
    pub additive: bool,
    pub multiplicative: bool,
    pub unital: bool,
    /// Images of `1, i, j, k` are linearly independent over `Q`.
    pub injective: bool,
}

impl EmbedCheck {
    pub fn passed(&self) -> bool {
        self.additive && self.multiplicative && self.unital && self.injective
    }
}

fn sample_coeffs(rng: &mut StdRng) -> [i64; 4] {
    std::array::from_fn(|_| rng.gen_range(-4..=4))
}

/// Check that `embed_f_in_m2k` is a unital ring homomorphism on `pairs`
/// fixed sample pairs and is injective.
pub fn embed_homomorphism_check(params: &AlgebraParams, pairs: usize) -> EmbedCheck {
    let mut additive = true;
    let mut multiplicative = true;
    // fixed seed so reports are reproducible
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..pairs {
        let x = QuatElem::from_ints(params, sample_coeffs(&mut rng));
        let y = QuatElem::from_ints(params, sample_coeffs(&mut rng));
        let (ex, ey) = (embed_f_in_m2k(&x), embed_f_in_m2k(&y));
        additive &= embed_f_in_m2k(&(&x + &y)) == ex.add(&ey);
        multiplicative &= embed_f_in_m2k(&(&x * &y)) == ex.mul(&ey);
    }
    let rows: Vec<Vec<Rat>> = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        .iter()
        .map(|c| {
            let m = embed_f_in_m2k(&QuatElem::from_ints(params, *c));
            m.entries
                .iter()
                .flatten()
                .flat_map(|z| [z.u.clone(), z.v.clone()])
                .collect()
        })
        .collect();
    let injective = crate::linalg::Subspace::span(8, rows).dim() == 4;
    EmbedCheck {
        pairs,
        additive,
        multiplicative,
        unital: embed_f_in_m2k(&QuatElem::one(params)) == KMatrix::identity(&params.r),
        injective,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> AlgebraParams {
        AlgebraParams::hamilton()
    }

    #[test]
    fn defining_relations() {
        let p = AlgebraParams::new(q(-2), q(-5)).unwrap();
        let (i, j, k) = (QuatElem::i(&p), QuatElem::j(&p), QuatElem::k(&p));
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &i, -&k);
        assert_eq!(&i * &i, QuatElem::scalar(&p, q(-2)));
        assert_eq!(&j * &j, QuatElem::scalar(&p, q(-5)));
        assert_eq!(&k * &k, QuatElem::scalar(&p, q(-10)));
    }

    #[test]
    fn conj_and_norm_examples() {
        let p = h();
        let x = QuatElem::from_ints(&p, [1, 2, 3, 4]);
        assert_eq!(x.conj(), QuatElem::from_ints(&p, [1, -2, -3, -4]));
        assert_eq!(QuatElem::one(&p).norm(), q(1));
        assert_eq!(QuatElem::zeta().norm(), q(1));
        assert_eq!(x.norm(), q(30));
        assert_eq!(&x * &x.conj(), QuatElem::scalar(&p, q(30)));
    }

    #[test]
    fn quat_arith_dispatch_and_mismatch() {
        let p = h();
        let i = QuatElem::i(&p);
        let j = QuatElem::j(&p);
        assert_eq!(
            quat_arith(QuatOp::Mul, &i, Some(&j)).unwrap(),
            QuatValue::Elem(QuatElem::k(&p))
        );
        assert_eq!(
            quat_arith(QuatOp::Trace, &QuatElem::zeta(), None).unwrap(),
            QuatValue::Scalar(q(1))
        );
        let other = AlgebraParams::new(q(-1), q(-3)).unwrap();
        let err = quat_arith(QuatOp::Mul, &i, Some(&QuatElem::j(&other))).unwrap_err();
        assert!(matches!(err, Error::MismatchedAlgebra(..)));
        assert!(AlgebraParams::new(q(1), q(-1)).is_err());
    }

    #[test]
    fn group_table() {
        use GroupQElem as G;
        assert_eq!(G::I.mul(G::I), G::MINUS_ONE);
        assert_eq!(G::J.mul(G::J), G::MINUS_ONE);
        assert_eq!(G::K.mul(G::K), G::MINUS_ONE);
        assert_eq!(G::I.mul(G::J), G::K);
        assert_eq!(G::J.mul(G::I), G::MINUS_K);
        assert_eq!(G::J.mul(G::K), G::I);
        assert_eq!(G::K.mul(G::I), G::J);
        let center: Vec<G> = G::ALL
            .iter()
            .copied()
            .filter(|&z| G::ALL.iter().all(|&g| g.mul(z) == z.mul(g)))
            .collect();
        assert_eq!(center, vec![G::ONE, G::MINUS_ONE]);
        // agrees with quaternion multiplication
        for a in G::ALL {
            for b in G::ALL {
                assert_eq!(a.mul(b).to_quat(), &a.to_quat() * &b.to_quat());
            }
        }
        assert_eq!(generated_subgroup(&[G::I, G::J]), 0xff);
        assert_eq!(generated_subgroup(&[G::I]).count_ones(), 4);
    }

    #[test]
    fn hurwitz_examples() {
        let p = h();
        for m in [QuatElem::one(&p), QuatElem::zeta(), QuatElem::i(&p)] {
            assert_eq!(
                hurwitz_index_identity(&m).unwrap(),
                HurwitzIndex { d: 2, check: true }
            );
        }
        let half = QuatElem::new(&p, qf(1, 2), q(0), q(0), q(0));
        assert!(matches!(
            hurwitz_index_identity(&half),
            Err(Error::NotInHurwitzOrder(_))
        ));
    }

    #[test]
    fn orders_are_conj_closed() {
        assert!(OrderLattice::hz(&h()).is_conj_closed());
        assert!(OrderLattice::hurwitz().is_conj_closed());
        assert!(OrderLattice::hurwitz().contains(&QuatElem::one(&h())));
        assert!(!OrderLattice::hz(&h()).contains(&QuatElem::zeta()));
    }

    #[test]
    fn wedderburn() {
        let rep = group_ring_wedderburn();
        assert_eq!(rep.conjugacy_classes.len(), 5);
        assert_eq!(rep.summary(), vec![(1, 1), (1, 1), (1, 1), (1, 1), (2, -1)]);
        assert_eq!(
            rep.characters
                .iter()
                .map(|c| c.degree * c.degree)
                .sum::<i64>(),
            8
        );
        assert!(rep.characters[..4].iter().all(|c| c.trivial_on_minus_one));
        assert!(!rep.characters[4].trivial_on_minus_one);
    }

    #[test]
    fn embed_is_homomorphism() {
        let c = embed_homomorphism_check(&AlgebraParams::new(q(-2), q(-3)).unwrap(), 20);
        assert!(c.passed(), "{c:?}");
    }

    #[test]
    fn embed_examples() {
        let p = AlgebraParams::new(q(-1), q(-3)).unwrap();
        let j = embed_f_in_m2k(&QuatElem::j(&p));
        assert_eq!(j.entries[0], [QuadNum::zero(), QuadNum::one()]);
        assert_eq!(j.entries[1], [QuadNum::new(q(-3), q(0)), QuadNum::zero()]);
        assert_eq!(embed_f_in_m2k(&QuatElem::one(&p)), KMatrix::identity(&p.r));
    }
}
