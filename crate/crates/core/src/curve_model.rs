//! The genus-2 curve `y^2 = x^5 - x` with its action of `Q`, the tricanonical
//! model in `P^4` cut out by four quadrics, and invariant quartics.
//!
//! Polynomials are Laurent in every variable with coefficients in `Q(i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{q, Rat, Subspace};

/// `re + im i` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussQ {
    pub re: Rat,
    pub im: Rat,
}

impl GaussQ {
    pub fn new(re: i64, im: i64) -> Self {
        GaussQ {
            re: q(re),
            im: q(im),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn inv(&self) -> Option<GaussQ> {
        let n = &self.re * &self.re + &self.im * &self.im;
        if n.is_zero() {
            return None;
        }
        Some(GaussQ {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn pow(&self, e: i32) -> Option<GaussQ> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Some((0..e.unsigned_abs()).fold(GaussQ::one(), |acc, _| &acc * &base))
    }

    /// Reduction modulo `p` with `i` sent to `ip`.
    pub fn mod_p(&self, p: u64, ip: u64) -> Option<u64> {
        let r = |x: &Rat| -> Option<u64> {
            let pm = num_bigint::BigInt::from(p);
            let n = ((x.numer() % &pm) + &pm) % &pm;
            let d = ((x.denom() % &pm) + &pm) % &pm;
            let d: u64 = d.try_into().ok()?;
            if d == 0 {
                return None;
            }
            let n: u64 = n.try_into().ok()?;
            Some(n * pow_mod(d, p - 2, p) % p)
        };
        Some((r(&self.re)? + r(&self.im)? * ip) % p)
    }
}

impl fmt::Display for GaussQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            _ => write!(f, "({}+{}i)", self.re, self.im),
        }
    }
}

impl Add for &GaussQ {
    type Output = GaussQ;
    fn add(self, o: &GaussQ) -> GaussQ {
        GaussQ {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl Sub for &GaussQ {
    type Output = GaussQ;
    fn sub(self, o: &GaussQ) -> GaussQ {
        GaussQ {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl Mul for &GaussQ {
    type Output = GaussQ;
    fn mul(self, o: &GaussQ) -> GaussQ {
        GaussQ {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Neg for &GaussQ {
    type Output = GaussQ;
    fn neg(self) -> GaussQ {
        GaussQ {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
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

/// Laurent polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<i32>, GaussQ>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussQ) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Vec<i32>, c: GaussQ) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(exps, c);
        p
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::monomial(nvars, e, GaussQ::one())
    }

    /// From `(coefficient, exponents)` with integer coefficients.
    pub fn from_terms(nvars: usize, terms: &[(i64, &[i32])]) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            p.add_term(e.to_vec(), GaussQ::new(*c, 0));
        }
        p
    }

    fn add_term(&mut self, exps: Vec<i32>, c: GaussQ) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_insert_with(GaussQ::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &GaussQ) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, e: i32) -> Option<Poly> {
        if e < 0 {
            return self.monomial_inverse()?.pow(-e);
        }
        Some(
            (0..e).fold(Poly::constant(self.nvars, GaussQ::one()), |acc, _| {
                &acc * self
            }),
        )
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Option<Poly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Poly::monomial(
            self.nvars,
            e.iter().map(|x| -x).collect(),
            c.inv()?,
        ))
    }

    /// Replace variable `v` by `images[v]` (all images share a variable count).
    pub fn substitute(&self, images: &[Poly]) -> Option<Poly> {
        let nv = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(nv);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(nv, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k != 0 {
                    t = &t * &img.pow(k)?;
                }
            }
            out = &out + &t;
        }
        Some(out)
    }

    /// Proportionality `self = λ other`, returning `λ`.
    pub fn ratio_to(&self, other: &Poly) -> Option<GaussQ> {
        let (e, c) = other.terms.iter().next()?;
        let lambda = &self.terms.get(e)?.clone() * &c.inv()?;
        (*self == other.scale(&lambda)).then_some(lambda)
    }

    /// Derivative in variable `v`.
    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[v] != 0 {
                let mut f = e.clone();
                f[v] -= 1;
                out.add_term(f, c * &GaussQ::new(i64::from(e[v]), 0));
            }
        }
        out
    }

    /// Coordinates over `Q` (real and imaginary parts) on a list of monomials;
    /// `None` if a term falls outside the list.
    pub fn rational_coords(&self, monomials: &[Vec<i32>]) -> Option<Vec<Rat>> {
        let mut v = vec![Rat::zero(); 2 * monomials.len()];
        for (e, c) in &self.terms {
            let pos = monomials.iter().position(|m| m == e)?;
            v[2 * pos] = c.re.clone();
            v[2 * pos + 1] = c.im.clone();
        }
        Some(v)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&GaussQ::new(-1, 0))
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.iter().zip(b).map(|(s, t)| s + t).collect(), x * y);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let m: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(v, &k)| format!("v{v}^{k}"))
                    .collect();
                if m.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", m.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

// Curve ring: variables (x, y).

fn cx() -> Poly {
    Poly::var(2, 0)
}

fn cy() -> Poly {
    Poly::var(2, 1)
}

/// `y^2 - x^5 + x`
pub fn curve_equation() -> Poly {
    Poly::from_terms(2, &[(1, &[0, 2]), (-1, &[5, 0]), (1, &[1, 0])])
}

/// Normal form modulo `y^2 - x^5 + x`: `y`-degree at most one.
pub fn reduce_mod_curve(p: &Poly) -> Poly {
    let mut out = Poly::zero(2);
    let rhs = Poly::from_terms(2, &[(1, &[5, 0]), (-1, &[1, 0])]);
    let mut work: Vec<(Vec<i32>, GaussQ)> = p
        .terms
        .iter()
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect();
    while let Some((e, c)) = work.pop() {
        if e[1] >= 2 {
            let rest = Poly::monomial(2, vec![e[0], e[1] - 2], c);
            for (f, d) in (&rest * &rhs).terms {
                work.push((f, d));
            }
        } else {
            out.add_term(e, c);
        }
    }
    out
}

pub fn in_curve_ideal(p: &Poly) -> bool {
    reduce_mod_curve(p).is_zero()
}

/// An automorphism of the curve as `(x, y) -> (X(x, y), Y(x, y))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveAuto {
    pub name: String,
    pub x: Poly,
    pub y: Poly,
}

impl CurveAuto {
    pub fn identity() -> Self {
        CurveAuto {
            name: "1".into(),
            x: cx(),
            y: cy(),
        }
    }

    /// `(x, y) -> (-x, i y)`
    pub fn i() -> Self {
        CurveAuto {
            name: "i".into(),
            x: -&cx(),
            y: cy().scale(&GaussQ::i()),
        }
    }

    /// `(x, y) -> (x^-1, i y x^-3)`
    pub fn j() -> Self {
        CurveAuto {
            name: "j".into(),
            x: Poly::monomial(2, vec![-1, 0], GaussQ::one()),
            y: Poly::monomial(2, vec![-3, 1], GaussQ::i()),
        }
    }

    /// `(x, y) -> (x, -y)`
    pub fn hyperelliptic() -> Self {
        CurveAuto {
            name: "-1".into(),
            x: cx(),
            y: -&cy(),
        }
    }

    pub fn pullback(&self, f: &Poly) -> Poly {
        f.substitute(&[self.x.clone(), self.y.clone()])
            .expect("images of x and y are invertible monomials")
    }

    /// `self ∘ other` as maps of points.
    pub fn compose(&self, other: &CurveAuto) -> CurveAuto {
        CurveAuto {
            name: format!("{}{}", self.name, other.name),
            x: other.pullback(&self.x),
            y: other.pullback(&self.y),
        }
    }

    pub fn same_map(&self, other: &CurveAuto) -> bool {
        self.x == other.x && self.y == other.y
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutoReport {
    pub i_preserves_curve: bool,
    pub j_preserves_curve: bool,
    /// `i^*(F) = -F`
    pub i_factor_is_minus_one: bool,
    /// `j^*(F) = -x^-6 F`
    pub j_factor_is_minus_x_inv6: bool,
    pub i_squared_is_hyperelliptic: bool,
    pub j_squared_is_hyperelliptic: bool,
    pub ij_is_minus_ji: bool,
    pub group_order: usize,
}

impl AutoReport {
    pub fn passed(&self) -> bool {
        self.i_preserves_curve
            && self.j_preserves_curve
            && self.i_factor_is_minus_one
            && self.j_factor_is_minus_x_inv6
            && self.i_squared_is_hyperelliptic
            && self.j_squared_is_hyperelliptic
            && self.ij_is_minus_ji
            && self.group_order == 8
    }
}

pub fn verify_curve_autos() -> AutoReport {
    let f = curve_equation();
    let (i, j, h) = (CurveAuto::i(), CurveAuto::j(), CurveAuto::hyperelliptic());
    let fi = i.pullback(&f);
    let fj = j.pullback(&f);
    let mut group = vec![CurveAuto::identity()];
    let mut frontier = group.clone();
    while let Some(g) = frontier.pop() {
        for s in [&i, &j] {
            let n = g.compose(s);
            if !group.iter().any(|x| x.same_map(&n)) && group.len() < 64 {
                group.push(n.clone());
                frontier.push(n);
            }
        }
    }
    AutoReport {
        i_preserves_curve: in_curve_ideal(&fi),
        j_preserves_curve: in_curve_ideal(&fj),
        i_factor_is_minus_one: fi == -&f,
        j_factor_is_minus_x_inv6: fj == &Poly::monomial(2, vec![-6, 0], GaussQ::new(-1, 0)) * &f,
        i_squared_is_hyperelliptic: i.compose(&i).same_map(&h),
        j_squared_is_hyperelliptic: j.compose(&j).same_map(&h),
        ij_is_minus_ji: i.compose(&j).same_map(&h.compose(&j.compose(&i))),
        group_order: group.len(),
    }
}

// P^4: variables x0..x4.

fn v(k: usize) -> Poly {
    Poly::var(5, k)
}

/// `Q0 = x4^2 + x0 x1 - x2 x3`, `Q1 = x0 x2 - x1^2`, `Q2 = x0 x3 - x1 x2`, `Q3 = x1 x3 - x2^2`.
pub fn quadrics() -> [Poly; 4] {
    [
        &(&(&v(4) * &v(4)) + &(&v(0) * &v(1))) - &(&v(2) * &v(3)),
        &(&v(0) * &v(2)) - &(&v(1) * &v(1)),
        &(&v(0) * &v(3)) - &(&v(1) * &v(2)),
        &(&v(1) * &v(3)) - &(&v(2) * &v(2)),
    ]
}

/// The tricanonical embedding `(1, x, x^2, x^3, y)`.
pub fn curve_coordinates() -> [Poly; 5] {
    [
        Poly::constant(2, GaussQ::one()),
        cx(),
        cx().pow(2).unwrap(),
        cx().pow(3).unwrap(),
        cy(),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricReport {
    pub restrictions: Vec<String>,
    pub all_vanish: bool,
}

pub fn verify_quadrics() -> QuadricReport {
    let coords = curve_coordinates();
    let restr: Vec<Poly> = quadrics()
        .iter()
        .map(|qd| qd.substitute(&coords).expect("polynomial"))
        .collect();
    QuadricReport {
        all_vanish: restr.iter().all(in_curve_ideal),
        restrictions: restr.iter().map(|p| p.to_string()).collect(),
    }
}

pub type Mat5 = [[GaussQ; 5]; 5];

fn mat5(entries: &[(usize, usize, GaussQ)]) -> Mat5 {
    let mut m: Mat5 = std::array::from_fn(|_| std::array::from_fn(|_| GaussQ::zero()));
    for (r, c, x) in entries {
        m[*r][*c] = x.clone();
    }
    m
}

/// `i(x) = (x0 : -x1 : x2 : -x3 : i x4)`
pub fn p4_matrix_i() -> Mat5 {
    mat5(&[
        (0, 0, GaussQ::one()),
        (1, 1, GaussQ::new(-1, 0)),
        (2, 2, GaussQ::one()),
        (3, 3, GaussQ::new(-1, 0)),
        (4, 4, GaussQ::i()),
    ])
}

/// `j(x) = (x3 : x2 : x1 : x0 : i x4)`
pub fn p4_matrix_j() -> Mat5 {
    mat5(&[
        (0, 3, GaussQ::one()),
        (1, 2, GaussQ::one()),
        (2, 1, GaussQ::one()),
        (3, 0, GaussQ::one()),
        (4, 4, GaussQ::i()),
    ])
}

pub fn mat5_mul(a: &Mat5, b: &Mat5) -> Mat5 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| (0..5).fold(GaussQ::zero(), |acc, k| &acc + &(&a[r][k] * &b[k][c])))
    })
}

fn mat5_inv_projective(a: &Mat5) -> Mat5 {
    // the matrices used have order dividing 8, so a^7 is a scalar multiple of a^-1
    (0..6).fold(a.clone(), |acc, _| mat5_mul(&acc, a))
}

/// `a = λ b` for some nonzero `λ`.
pub fn proportional(a: &Mat5, b: &Mat5) -> Option<GaussQ> {
    let (r, c) = (0..25)
        .map(|t| (t / 5, t % 5))
        .find(|&(r, c)| !b[r][c].is_zero())?;
    let lambda = &a[r][c] * &b[r][c].inv()?;
    let ok = (0..5).all(|r| (0..5).all(|c| a[r][c] == &lambda * &b[r][c]));
    (ok && !lambda.is_zero()).then_some(lambda)
}

/// `(g^* P)(x) = P(M x)`.
pub fn pullback_p4(m: &Mat5, p: &Poly) -> Poly {
    let images: Vec<Poly> = (0..5)
        .map(|r| (0..5).fold(Poly::zero(5), |acc, c| &acc + &v(c).scale(&m[r][c])))
        .collect();
    p.substitute(&images).expect("polynomial")
}

fn quadric_monomials() -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a..5 {
            let mut e = vec![0; 5];
            e[a] += 1;
            e[b] += 1;
            out.push(e);
        }
    }
    out
}

/// Q(i)-span of polynomials, as a Q-subspace of real/imaginary coordinates.
fn gauss_span(polys: &[Poly], monomials: &[Vec<i32>]) -> Option<Subspace> {
    let mut vecs = Vec::new();
    for p in polys {
        vecs.push(p.rational_coords(monomials)?);
        vecs.push(p.scale(&GaussQ::i()).rational_coords(monomials)?);
    }
    Some(Subspace::span(2 * monomials.len(), vecs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub i_fourth_scalar: bool,
    pub i_squared_matches_j_squared: bool,
    pub commutator_matches_i_squared: bool,
    pub projective_group_order: usize,
    pub quadric_span_stable: bool,
    /// Scalars `λ` with `C_g = λ M_g`, where `C_g` is the pullback of the
    /// sections `(1, x, x^2, x^3, y) y^-3 dx^3`.
    pub section_scalars: Vec<(String, Option<String>)>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.i_fourth_scalar
            && self.i_squared_matches_j_squared
            && self.commutator_matches_i_squared
            && self.projective_group_order == 8
            && self.quadric_span_stable
            && self.section_scalars.iter().all(|(_, s)| s.is_some())
    }
}

/// Matrix `C` with `g^*(s_u) = sum_t C[u][t] s_t` for the sections
/// `s = (1, x, x^2, x^3, y) · y^-3 dx^3`.
pub fn section_pullback(g: &CurveAuto) -> Option<Mat5> {
    let y = cy();
    // g^*(y^-3 dx^3) / (y^-3 dx^3) = g^*(y)^-3 (d g^*(x)/dx)^3 y^3
    let factor = &(&g.y.pow(-3)? * &g.x.derivative(0).pow(3)?) * &y.pow(3)?;
    let coords = curve_coordinates();
    let basis: Vec<Vec<i32>> = vec![vec![0, 0], vec![1, 0], vec![2, 0], vec![3, 0], vec![0, 1]];
    let mut m = mat5(&[]);
    for (u, s) in coords.iter().enumerate() {
        let img = reduce_mod_curve(&(&g.pullback(s) * &factor));
        for (e, c) in &img.terms {
            let t = basis.iter().position(|b| b == e)?;
            m[u][t] = c.clone();
        }
    }
    Some(m)
}

pub fn verify_p4_action() -> ActionReport {
    let (mi, mj) = (p4_matrix_i(), p4_matrix_j());
    let id = mat5(&(0..5).map(|k| (k, k, GaussQ::one())).collect::<Vec<_>>());
    let i2 = mat5_mul(&mi, &mi);
    let j2 = mat5_mul(&mj, &mj);
    let comm = mat5_mul(
        &mat5_mul(&mi, &mj),
        &mat5_mul(&mat5_inv_projective(&mi), &mat5_inv_projective(&mj)),
    );
    let mut group: Vec<Mat5> = vec![id.clone()];
    let mut frontier = vec![id.clone()];
    while let Some(g) = frontier.pop() {
        for s in [&mi, &mj] {
            let n = mat5_mul(&g, s);
            if !group.iter().any(|x| proportional(x, &n).is_some()) && group.len() < 64 {
                group.push(n.clone());
                frontier.push(n);
            }
        }
    }
    let mons = quadric_monomials();
    let qs = quadrics();
    let span = gauss_span(&qs, &mons).expect("quadrics");
    let stable = [&mi, &mj].iter().all(|m| {
        let pulled: Vec<Poly> = qs.iter().map(|qd| pullback_p4(m, qd)).collect();
        gauss_span(&pulled, &mons).is_some_and(|s| span.contains_subspace(&s))
    });
    let section_scalars = [(CurveAuto::i(), &mi), (CurveAuto::j(), &mj)]
        .iter()
        .map(|(g, m)| {
            let c = section_pullback(g);
            (
                g.name.clone(),
                c.and_then(|c| proportional(&c, m)).map(|l| l.to_string()),
            )
        })
        .collect();
    ActionReport {
        i_fourth_scalar: proportional(&mat5_mul(&i2, &i2), &id).is_some(),
        i_squared_matches_j_squared: proportional(&i2, &j2).is_some(),
        commutator_matches_i_squared: proportional(&comm, &i2).is_some(),
        projective_group_order: group.len(),
        quadric_span_stable: stable,
        section_scalars,
    }
}

/// `Q0^2, Q2^2, Q1 Q3, Q1^2 + Q3^2`
pub fn quartics() -> [(String, Poly); 4] {
    let [q0, q1, q2, q3] = quadrics();
    [
        ("Q0^2".into(), &q0 * &q0),
        ("Q2^2".into(), &q2 * &q2),
        ("Q1Q3".into(), &q1 * &q3),
        ("Q1^2+Q3^2".into(), &(&q1 * &q1) + &(&q3 * &q3)),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticEntry {
    pub quartic: String,
    pub element: String,
    pub lambda: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticReport {
    pub entries: Vec<QuarticEntry>,
    pub span_dim: usize,
}

impl QuarticReport {
    pub fn all_proportional(&self) -> bool {
        self.entries.iter().all(|e| e.lambda.is_some())
    }

    pub fn all_invariant(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.lambda.as_deref() == Some("1"))
    }
}

pub fn verify_invariant_quartics() -> QuarticReport {
    let id = mat5(&(0..5).map(|k| (k, k, GaussQ::one())).collect::<Vec<_>>());
    let mut entries = Vec::new();
    let qs = quartics();
    for (name, m) in [("1", &id), ("i", &p4_matrix_i()), ("j", &p4_matrix_j())] {
        for (label, p) in &qs {
            entries.push(QuarticEntry {
                quartic: label.clone(),
                element: name.into(),
                lambda: pullback_p4(m, p).ratio_to(p).map(|l| l.to_string()),
            });
        }
    }
    let mut mons: Vec<Vec<i32>> = qs
        .iter()
        .flat_map(|(_, p)| p.terms.keys().cloned())
        .collect();
    mons.sort();
    mons.dedup();
    let polys: Vec<Poly> = qs.iter().map(|(_, p)| p.clone()).collect();
    let span_dim = gauss_span(&polys, &mons).map_or(0, |s| s.dim() / 2);
    QuarticReport { entries, span_dim }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocusReport {
    pub p: u64,
    pub sqrt_minus_one: u64,
    pub points: u64,
    pub quadric_locus: usize,
    pub quartic_locus: usize,
    pub curve_points: usize,
    pub quartic_equals_quadric: bool,
    pub quadric_equals_curve: bool,
    pub locus_stable_under_q: bool,
}

impl LocusReport {
    pub fn passed(&self) -> bool {
        self.quartic_equals_quadric && self.quadric_equals_curve && self.locus_stable_under_q
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

struct CompiledPoly {
    terms: Vec<(u64, [usize; 5])>,
}

impl CompiledPoly {
    fn new(p: &Poly, modulus: u64, ip: u64) -> Option<Self> {
        let terms = p
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ex = [0usize; 5];
                for (a, b) in ex.iter_mut().zip(e) {
                    *a = usize::try_from(*b).ok()?;
                }
                Some((c.mod_p(modulus, ip)?, ex))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(CompiledPoly { terms })
    }

    fn eval(&self, powers: &[[u64; 5]; 5], p: u64) -> u64 {
        self.terms.iter().fold(0, |acc, (c, e)| {
            let mut t = *c;
            for v in 0..5 {
                t = t * powers[v][e[v]] % p;
            }
            (acc + t) % p
        })
    }
}

fn normalize_point(x: &mut [u64; 5], p: u64) {
    if let Some(&lead) = x.iter().find(|&&c| c != 0) {
        let inv = pow_mod(lead, p - 2, p);
        for c in x.iter_mut() {
            *c = *c * inv % p;
        }
    }
}

/// Compare the zero loci of the quartics and the quadrics in `P^4(F_p)` with
/// the image of the curve.
pub fn finite_field_locus(p: u64) -> Result<LocusReport> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::BadPrime(p, "must be a prime congruent to 1 mod 4"));
    }
    if p == 5 {
        return Err(Error::BadPrime(p, "x^5 - x vanishes identically mod 5"));
    }
    if p > 41 {
        return Err(Error::BadPrime(p, "enumeration is limited to p <= 41"));
    }
    let ip = (2..p).find(|&a| a * a % p == p - 1).expect("p = 1 mod 4");
    let qd: Vec<CompiledPoly> = quadrics()
        .iter()
        .map(|x| CompiledPoly::new(x, p, ip))
        .collect::<Option<_>>()
        .expect("integral");
    let qt: Vec<CompiledPoly> = quartics()
        .iter()
        .map(|(_, x)| CompiledPoly::new(x, p, ip))
        .collect::<Option<_>>()
        .expect("integral");
    let mut quadric_locus = Vec::new();
    let mut quartic_locus = Vec::new();
    let mut points = 0u64;
    let total = p.pow(5);
    for code in 1..total {
        let mut x = [0u64; 5];
        let mut c = code;
        for slot in x.iter_mut().rev() {
            *slot = c % p;
            c /= p;
        }
        // normalized representatives: first nonzero coordinate is 1
        if x.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        points += 1;
        let mut powers = [[1u64; 5]; 5];
        for v in 0..5 {
            for e in 1..5 {
                powers[v][e] = powers[v][e - 1] * x[v] % p;
            }
        }
        if qd.iter().all(|f| f.eval(&powers, p) == 0) {
            quadric_locus.push(x);
        }
        if qt.iter().all(|f| f.eval(&powers, p) == 0) {
            quartic_locus.push(x);
        }
    }
    let mut curve = vec![[0, 0, 0, 1, 0]];
    for xv in 0..p {
        let rhs = (pow_mod(xv, 5, p) + p - xv) % p;
        for yv in 0..p {
            if yv * yv % p == rhs {
                curve.push([1, xv, xv * xv % p, pow_mod(xv, 3, p), yv]);
            }
        }
    }
    curve.sort_unstable();
    curve.dedup();
    quadric_locus.sort_unstable();
    quartic_locus.sort_unstable();
    let act = |m: &Mat5, x: &[u64; 5]| -> [u64; 5] {
        let mut out = [0u64; 5];
        for (r, o) in out.iter_mut().enumerate() {
            *o = (0..5).fold(0, |acc, c| {
                (acc + m[r][c].mod_p(p, ip).expect("integral") * x[c]) % p
            });
        }
        normalize_point(&mut out, p);
        out
    };
    let stable = [p4_matrix_i(), p4_matrix_j()].iter().all(|m| {
        quadric_locus
            .iter()
            .all(|x| quadric_locus.binary_search(&act(m, x)).is_ok())
    });
    Ok(LocusReport {
        p,
        sqrt_minus_one: ip,
        points,
        quadric_locus: quadric_locus.len(),
        quartic_locus: quartic_locus.len(),
        curve_points: curve.len(),
        quartic_equals_quadric: quartic_locus == quadric_locus,
        quadric_equals_curve: quadric_locus == curve,
        locus_stable_under_q: stable,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ScrollNumerology {
    pub genus: u64,
    pub h0_h: u64,
    pub h0_h2: u64,
    pub sym2_dim: u64,
    pub quadric_gap: u64,
    pub scroll_dim: u64,
    pub scroll_deg: u64,
}

/// Numerology of a genus `(n-1)^2` curve embedded by a line bundle `H` with
/// `h^0(H) = 2n`, and the rational normal scrolls containing it.
pub fn scroll_numerology(n: u64) -> Result<ScrollNumerology> {
    if n < 2 {
        return Err(Error::Precondition(format!("n = {n} must be at least 2")));
    }
    let sym2_dim = n * (2 * n + 1);
    let h0_h2 = n * n + 2 * n;
    Ok(ScrollNumerology {
        genus: (n - 1) * (n - 1),
        h0_h: 2 * n,
        h0_h2,
        sym2_dim,
        quadric_gap: sym2_dim - h0_h2,
        scroll_dim: n,
        scroll_deg: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_arithmetic() {
        let a = GaussQ::new(1, 1);
        assert_eq!(&a * &a.inv().unwrap(), GaussQ::one());
        assert_eq!(GaussQ::i().pow(4).unwrap(), GaussQ::one());
        assert_eq!(GaussQ::i().pow(-1).unwrap(), GaussQ::new(0, -1));
        assert_eq!(GaussQ::i().mod_p(13, 5), Some(5));
    }

    #[test]
    fn autos() {
        let r = verify_curve_autos();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn quadrics_vanish() {
        let r = verify_quadrics();
        assert!(r.all_vanish);
        assert_eq!(r.restrictions[1], "0");
        assert_eq!(r.restrictions[2], "0");
        assert_eq!(r.restrictions[3], "0");
    }

    #[test]
    fn p4_action() {
        let r = verify_p4_action();
        assert!(r.passed(), "{r:?}");
        for (_, s) in &r.section_scalars {
            assert_eq!(s.as_deref(), Some("-1i"));
        }
        let q1 = quadrics()[1].clone();
        assert_eq!(pullback_p4(&p4_matrix_i(), &q1), q1);
    }

    #[test]
    fn quartics_invariant() {
        let r = verify_invariant_quartics();
        assert!(r.all_proportional() && r.all_invariant(), "{r:?}");
        assert_eq!(r.span_dim, 4);
    }

    #[test]
    fn locus_small_prime() {
        let r = finite_field_locus(13).unwrap();
        assert_eq!(r.points, (13u64.pow(5) - 1) / 12);
        assert!(r.passed(), "{r:?}");
        assert!(matches!(finite_field_locus(5), Err(Error::BadPrime(5, _))));
        assert!(finite_field_locus(7).is_err());
        assert!(finite_field_locus(53).is_err());
    }

    #[test]
    fn numerology() {
        let s = scroll_numerology(4).unwrap();
        assert_eq!(
            (s.genus, s.h0_h, s.quadric_gap, s.sym2_dim, s.h0_h2),
            (9, 8, 12, 36, 24)
        );
        let s = scroll_numerology(2).unwrap();
        assert_eq!((s.genus, s.quadric_gap, s.scroll_deg), (1, 2, 2));
        assert!(scroll_numerology(1).is_err());
    }

    #[test]
    fn substitution_is_multiplicative() {
        let f = &curve_equation() + &cx();
        let g = &cy() * &cx().pow(2).unwrap();
        let j = CurveAuto::j();
        assert_eq!(j.pullback(&(&f * &g)), &j.pullback(&f) * &j.pullback(&g));
    }
}
