//! Weight-multiset calculus for products of simple Lie algebras of types
//! `A`, `B` and `D`.
//!
//! A weight of a product algebra is the concatenation of the weights of its
//! factors. Factor `B_n` and `D_n` use the coordinates `L_1..L_n`; factor
//! `A_n` uses `n + 1` coordinates `e_1..e_{n+1}` taken modulo the all-ones
//! vector and is stored with last coordinate `0`.
//!
//! Positive roots are lexicographically positive in every factor, so the
//! lexicographically largest weight of a representation is a highest weight.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Q64 = Rational64;

fn r(n: i64) -> Q64 {
    Q64::from_integer(n)
}

fn half() -> Q64 {
    Q64::new(1, 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SimpleFactor {
    pub family: Family,
    pub rank: usize,
}

impl SimpleFactor {
    pub fn coords(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::D => self.rank,
        }
    }

    fn unit(&self, i: usize) -> Vec<Q64> {
        let mut v = vec![Q64::zero(); self.coords()];
        v[i] = Q64::one();
        v
    }

    fn sum(a: &[Q64], b: &[Q64], sb: i64) -> Vec<Q64> {
        a.iter().zip(b).map(|(x, y)| x + y * r(sb)).collect()
    }

    pub fn positive_roots(&self) -> Vec<Vec<Q64>> {
        let n = self.coords();
        let mut roots = Vec::new();
        match self.family {
            Family::A => {
                for i in 0..n {
                    for j in i + 1..n {
                        roots.push(Self::sum(&self.unit(i), &self.unit(j), -1));
                    }
                }
            }
            Family::B | Family::D => {
                for i in 0..n {
                    for j in i + 1..n {
                        roots.push(Self::sum(&self.unit(i), &self.unit(j), -1));
                        roots.push(Self::sum(&self.unit(i), &self.unit(j), 1));
                    }
                    if self.family == Family::B {
                        roots.push(self.unit(i));
                    }
                }
            }
        }
        roots
    }

    pub fn simple_roots(&self) -> Vec<Vec<Q64>> {
        let n = self.coords();
        let mut roots: Vec<Vec<Q64>> = (0..n - 1)
            .map(|i| Self::sum(&self.unit(i), &self.unit(i + 1), -1))
            .collect();
        match self.family {
            Family::A => {}
            Family::B => roots.push(self.unit(n - 1)),
            Family::D => roots.push(Self::sum(&self.unit(n - 2), &self.unit(n - 1), 1)),
        }
        roots
    }

    pub fn rho(&self) -> Vec<Q64> {
        let n = self.coords() as i64;
        (0..n)
            .map(|i| match self.family {
                Family::A | Family::D => r(n - 1 - i),
                Family::B => r(n - i) - half(),
            })
            .collect()
    }

    /// Invariant inner product; for `A` the sum-zero projection.
    pub fn inner(&self, x: &[Q64], y: &[Q64]) -> Q64 {
        let dot: Q64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
        match self.family {
            Family::A => {
                let sx: Q64 = x.iter().sum();
                let sy: Q64 = y.iter().sum();
                dot - sx * sy / r(x.len() as i64)
            }
            _ => dot,
        }
    }

    pub fn canonicalize(&self, v: &mut [Q64]) {
        if self.family == Family::A {
            let last = v[v.len() - 1];
            for x in v.iter_mut() {
                *x -= last;
            }
        }
    }

    pub fn is_dominant(&self, v: &[Q64]) -> bool {
        let n = v.len();
        if n != self.coords() {
            return false;
        }
        let all_int = v.iter().all(|x| x.is_integer());
        let all_half = v.iter().all(|x| (x * r(2)).is_integer() && !x.is_integer());
        let decreasing = (0..n - 1).all(|i| v[i] >= v[i + 1]);
        match self.family {
            Family::A => {
                let mut c = v.to_vec();
                self.canonicalize(&mut c);
                c == v && all_int && decreasing
            }
            Family::B => (all_int || all_half) && decreasing && v[n - 1] >= Q64::zero(),
            Family::D => {
                (all_int || all_half)
                    && (0..n.saturating_sub(2)).all(|i| v[i] >= v[i + 1])
                    && (n < 2 || v[n - 2] >= v[n - 1].abs())
            }
        }
    }

    /// Simple reflections as maps on coordinate vectors.
    pub fn simple_reflection(&self, s: usize, v: &[Q64]) -> Vec<Q64> {
        let n = self.coords();
        let mut w = v.to_vec();
        if s + 1 < n {
            w.swap(s, s + 1);
        } else {
            match self.family {
                Family::A => unreachable!("A_n has n simple reflections"),
                Family::B => w[n - 1] = -w[n - 1],
                Family::D => {
                    let (a, b) = (w[n - 2], w[n - 1]);
                    w[n - 2] = -b;
                    w[n - 1] = -a;
                }
            }
        }
        self.canonicalize(&mut w);
        w
    }

    pub fn simple_reflection_count(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for SimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.family {
            Family::A => 'A',
            Family::B => 'B',
            Family::D => 'D',
        };
        write!(f, "{c}{}", self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct AlgebraType {
    pub factors: Vec<SimpleFactor>,
}

impl AlgebraType {
    pub fn simple(family: Family, rank: usize) -> Self {
        AlgebraType {
            factors: vec![SimpleFactor { family, rank }],
        }
    }

    pub fn b(n: usize) -> Self {
        Self::simple(Family::B, n)
    }

    pub fn d(n: usize) -> Self {
        Self::simple(Family::D, n)
    }

    pub fn a(n: usize) -> Self {
        Self::simple(Family::A, n)
    }

    /// Parse `B3`, `D4+A1`, `so7`, `so8`, `sl4`, `sl2`, or sums of these joined by `+`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in s.split('+').map(str::trim) {
            let lower = part.to_ascii_lowercase();
            let f = if let Some(n) = lower.strip_prefix("so") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad algebra {part}")))?;
                if n % 2 == 1 {
                    SimpleFactor {
                        family: Family::B,
                        rank: n / 2,
                    }
                } else {
                    SimpleFactor {
                        family: Family::D,
                        rank: n / 2,
                    }
                }
            } else if let Some(n) = lower.strip_prefix("sl") {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad algebra {part}")))?;
                SimpleFactor {
                    family: Family::A,
                    rank: n.saturating_sub(1),
                }
            } else {
                let family = match lower.chars().next() {
                    Some('a') => Family::A,
                    Some('b') => Family::B,
                    Some('d') => Family::D,
                    _ => return Err(Error::Parse(format!("bad algebra {part}"))),
                };
                let rank: usize = lower[1..]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad algebra {part}")))?;
                SimpleFactor { family, rank }
            };
            let min_rank = match f.family {
                Family::A | Family::B => 1,
                Family::D => 2,
            };
            if f.rank < min_rank {
                return Err(Error::Parse(format!("rank too small in {part}")));
            }
            factors.push(f);
        }
        Ok(AlgebraType { factors })
    }

    pub fn total_coords(&self) -> usize {
        self.factors.iter().map(SimpleFactor::coords).sum()
    }

    /// Coordinate range of each factor.
    pub fn ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut off = 0;
        self.factors
            .iter()
            .map(|f| {
                let r = off..off + f.coords();
                off += f.coords();
                r
            })
            .collect()
    }

    pub fn canonicalize(&self, v: &mut [Q64]) {
        for (f, rg) in self.factors.iter().zip(self.ranges()) {
            f.canonicalize(&mut v[rg]);
        }
    }

    pub fn is_dominant(&self, w: &WeightVec) -> bool {
        w.0.len() == self.total_coords()
            && self
                .factors
                .iter()
                .zip(self.ranges())
                .all(|(f, rg)| f.is_dominant(&w.0[rg]))
    }

    pub fn zero(&self) -> WeightVec {
        WeightVec(vec![Q64::zero(); self.total_coords()])
    }

    /// Apply the simple reflection `s` of factor `factor`.
    pub fn reflect(&self, factor: usize, s: usize, w: &WeightVec) -> WeightVec {
        let rg = self.ranges()[factor].clone();
        let mut out = w.0.clone();
        let img = self.factors[factor].simple_reflection(s, &w.0[rg.clone()]);
        out[rg].copy_from_slice(&img);
        WeightVec(out)
    }
}

impl fmt::Display for AlgebraType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join("+"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec(pub Vec<Q64>);

impl WeightVec {
    pub fn from_ints(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| r(x)).collect())
    }

    /// From doubled coordinates, so `(1, 1, 1)` gives `(1/2, 1/2, 1/2)`.
    pub fn from_doubled(v: &[i64]) -> Self {
        WeightVec(v.iter().map(|&x| Q64::new(x, 2)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    fn add(&self, o: &WeightVec) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    fn scaled_add(&self, o: &WeightVec, k: i64) -> WeightVec {
        WeightVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b * r(k)).collect())
    }

    pub fn concat(&self, o: &WeightVec) -> WeightVec {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        WeightVec(v)
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl Serialize for WeightVec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|x| x.to_string()))
    }
}

/// Weights with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WeightMultiset {
    pub weights: BTreeMap<WeightVec, u64>,
}

#[derive(Serialize)]
struct WeightEntry<'a> {
    weight: &'a WeightVec,
    mult: u64,
}

impl Serialize for WeightMultiset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(
            self.weights
                .iter()
                .map(|(w, &m)| WeightEntry { weight: w, mult: m }),
        )
    }
}

impl WeightMultiset {
    pub fn single(w: WeightVec) -> Self {
        WeightMultiset {
            weights: BTreeMap::from([(w, 1)]),
        }
    }

    pub fn from_map(map: HashMap<WeightVec, u64>) -> Self {
        WeightMultiset {
            weights: map.into_iter().filter(|(_, m)| *m > 0).collect(),
        }
    }

    pub fn dim(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn mult(&self, w: &WeightVec) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.weights.len()
    }

    fn add_weight(&mut self, w: WeightVec, m: u64) {
        if m > 0 {
            *self.weights.entry(w).or_insert(0) += m;
        }
    }

    pub fn dsum(&self, o: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, &m) in &o.weights {
            out.add_weight(w.clone(), m);
        }
        out
    }

    pub fn tensor(&self, o: &WeightMultiset, alg: &AlgebraType) -> WeightMultiset {
        let mut map: HashMap<WeightVec, u64> = HashMap::new();
        for (a, &ma) in &self.weights {
            for (b, &mb) in &o.weights {
                let mut w = a.add(b);
                alg.canonicalize(&mut w.0);
                *map.entry(w).or_insert(0) += ma * mb;
            }
        }
        WeightMultiset::from_map(map)
    }

    pub fn dual(&self, alg: &AlgebraType) -> WeightMultiset {
        let mut out = WeightMultiset::default();
        for (w, &m) in &self.weights {
            let mut v: Vec<Q64> = w.0.iter().map(|x| -x).collect();
            alg.canonicalize(&mut v);
            out.add_weight(WeightVec(v), m);
        }
        out
    }

    /// `k`-th exterior power: weights of `k`-element sub-multisets.
    pub fn wedge(&self, k: usize, alg: &AlgebraType) -> Result<WeightMultiset> {
        let n = self.dim() as usize;
        if k > n {
            return Err(Error::WedgeTooLarge { k, n });
        }
        Ok(self.power(k, alg, |m, c| binomial(m, c)))
    }

    /// `k`-th symmetric power: weights of `k`-element multicombinations.
    pub fn sym(&self, k: usize, alg: &AlgebraType) -> WeightMultiset {
        self.power(k, alg, |m, c| {
            if m == 0 {
                u64::from(c == 0)
            } else {
                binomial(m + c - 1, c)
            }
        })
    }

    /// Dynamic programme over distinct weights; `count(m, c)` is the number of
    /// ways to use `c` copies of a weight of multiplicity `m`.
    fn power(
        &self,
        k: usize,
        alg: &AlgebraType,
        count: impl Fn(u64, u64) -> u64,
    ) -> WeightMultiset {
        let zero = alg.zero();
        let mut layers: Vec<HashMap<WeightVec, u64>> = vec![HashMap::new(); k + 1];
        layers[0].insert(zero, 1);
        for (w, &m) in &self.weights {
            let mut next: Vec<HashMap<WeightVec, u64>> = vec![HashMap::new(); k + 1];
            for (used, layer) in layers.iter().enumerate() {
                for (acc, &mult) in layer {
                    for c in 0..=(k - used) {
                        let ways = count(m, c as u64);
                        if ways == 0 {
                            break;
                        }
                        let mut v = acc.scaled_add(w, c as i64);
                        alg.canonicalize(&mut v.0);
                        *next[used + c].entry(v).or_insert(0) += mult * ways;
                    }
                }
            }
            layers = next;
        }
        WeightMultiset::from_map(std::mem::take(&mut layers[k]))
    }

    /// Keep the first `keep` coordinates of every weight (e.g. `D_4 -> B_3`
    /// drops `L_4`; `B_3 -> D_3` keeps everything).
    pub fn restrict(&self, keep: usize, target: &AlgebraType) -> Result<WeightMultiset> {
        if keep != target.total_coords() {
            return Err(Error::Incompatible(format!(
                "{target} needs {} coordinates",
                target.total_coords()
            )));
        }
        let mut out = WeightMultiset::default();
        for (w, &m) in &self.weights {
            if w.0.len() < keep {
                return Err(Error::Incompatible("weight shorter than the target".into()));
            }
            let mut v = w.0[..keep].to_vec();
            target.canonicalize(&mut v);
            out.add_weight(WeightVec(v), m);
        }
        Ok(out)
    }

    /// Place this multiset of the factor `factor` of `alg` into `alg`,
    /// trivially on the other factors.
    pub fn lift(&self, alg: &AlgebraType, factor: usize) -> WeightMultiset {
        let rg = alg.ranges()[factor].clone();
        let mut out = WeightMultiset::default();
        for (w, &m) in &self.weights {
            let mut v = vec![Q64::zero(); alg.total_coords()];
            v[rg.clone()].copy_from_slice(&w.0);
            out.add_weight(WeightVec(v), m);
        }
        out
    }

    /// Whether a reflection maps the multiset to itself.
    pub fn is_invariant_under(&self, alg: &AlgebraType, factor: usize, s: usize) -> bool {
        let mut img = WeightMultiset::default();
        for (w, &m) in &self.weights {
            img.add_weight(alg.reflect(factor, s, w), m);
        }
        img == *self
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn factor_irrep(f: &SimpleFactor, lambda: &[Q64]) -> HashMap<Vec<Q64>, u64> {
    let pos = f.positive_roots();
    let simple = f.simple_roots();
    let rho = f.rho();
    let shifted = |v: &[Q64]| -> Vec<Q64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let lr = shifted(lambda);
    let top = f.inner(&lr, &lr);
    let mut mult: HashMap<Vec<Q64>, u64> = HashMap::from([(lambda.to_vec(), 1)]);
    let mut level: Vec<Vec<Q64>> = vec![lambda.to_vec()];
    while !level.is_empty() {
        let mut candidates: Vec<Vec<Q64>> = Vec::new();
        for mu in &level {
            for a in &simple {
                let mut nu: Vec<Q64> = mu.iter().zip(a).map(|(x, y)| x - y).collect();
                f.canonicalize(&mut nu);
                if !mult.contains_key(&nu) {
                    candidates.push(nu);
                }
            }
        }
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for nu in candidates {
            let nr = shifted(&nu);
            let denom = top - f.inner(&nr, &nr);
            let mut num = Q64::zero();
            for a in &pos {
                let mut k = 1i64;
                loop {
                    let mut v: Vec<Q64> = nu.iter().zip(a).map(|(x, y)| x + y * r(k)).collect();
                    f.canonicalize(&mut v);
                    let Some(&m) = mult.get(&v) else { break };
                    num += f.inner(&v, a) * r(m as i64);
                    k += 1;
                }
            }
            if denom.is_zero() {
                continue;
            }
            let m = num * r(2) / denom;
            debug_assert!(m.is_integer() && !m.is_negative());
            let m = m.to_integer();
            if m > 0 {
                mult.insert(nu.clone(), m as u64);
                next.push(nu);
            }
        }
        level = next;
    }
    mult
}

/// Weights of the irreducible representation with highest weight `lambda`,
/// by the Freudenthal recursion on each factor.
pub fn irrep_weights(alg: &AlgebraType, lambda: &WeightVec) -> Result<WeightMultiset> {
    if !alg.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut acc: HashMap<WeightVec, u64> = HashMap::from([(WeightVec(Vec::new()), 1)]);
    for (f, rg) in alg.factors.iter().zip(alg.ranges()) {
        let part = factor_irrep(f, &lambda.0[rg]);
        let mut next = HashMap::new();
        for (a, &ma) in &acc {
            for (b, &mb) in &part {
                *next.entry(a.concat(&WeightVec(b.clone()))).or_insert(0) += ma * mb;
            }
        }
        acc = next;
    }
    Ok(WeightMultiset::from_map(acc))
}

/// Weyl dimension formula.
pub fn weyl_dim(alg: &AlgebraType, lambda: &WeightVec) -> Result<u64> {
    if !alg.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut d = Q64::one();
    for (f, rg) in alg.factors.iter().zip(alg.ranges()) {
        let l = &lambda.0[rg];
        let rho = f.rho();
        let lr: Vec<Q64> = l.iter().zip(&rho).map(|(a, b)| a + b).collect();
        for a in f.positive_roots() {
            let dot = |x: &[Q64]| -> Q64 { x.iter().zip(&a).map(|(p, q)| p * q).sum() };
            d *= dot(&lr) / dot(&rho);
        }
    }
    debug_assert!(d.is_integer());
    Ok(d.to_integer() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub constituents: Vec<(WeightVec, u64)>,
}

impl Decomposition {
    pub fn mult(&self, w: &WeightVec) -> u64 {
        self.constituents
            .iter()
            .find(|(v, _)| v == w)
            .map_or(0, |(_, m)| *m)
    }

    pub fn reconstruct(&self, alg: &AlgebraType) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::default();
        for (w, m) in &self.constituents {
            for (v, &k) in &irrep_weights(alg, w)?.weights {
                out.add_weight(v.clone(), k * m);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .constituents
            .iter()
            .map(|(w, m)| {
                if *m == 1 {
                    w.to_string()
                } else {
                    format!("{m}×{w}")
                }
            })
            .collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Greedy highest-weight stripping.
pub fn decompose(alg: &AlgebraType, ms: &WeightMultiset) -> Result<Decomposition> {
    let mut rest: BTreeMap<WeightVec, i64> = ms
        .weights
        .iter()
        .map(|(w, &m)| (w.clone(), m as i64))
        .collect();
    let mut cache: HashMap<WeightVec, WeightMultiset> = HashMap::new();
    let mut out = Vec::new();
    while let Some((top, &m)) = rest.iter().next_back() {
        let top = top.clone();
        if m < 0 {
            return Err(Error::NotARepresentation(format!(
                "negative multiplicity at {top}"
            )));
        }
        if !alg.is_dominant(&top) {
            return Err(Error::NotARepresentation(format!(
                "highest remaining weight {top} is not dominant"
            )));
        }
        if !cache.contains_key(&top) {
            cache.insert(top.clone(), irrep_weights(alg, &top)?);
        }
        for (w, &k) in &cache[&top].weights {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= m * k as i64;
            if *e < 0 {
                return Err(Error::NotARepresentation(format!(
                    "negative multiplicity at {w}"
                )));
            }
        }
        rest.retain(|_, v| *v != 0);
        out.push((top, m as u64));
    }
    Ok(Decomposition { constituents: out })
}

pub fn invariant_dim(alg: &AlgebraType, ms: &WeightMultiset) -> Result<u64> {
    Ok(decompose(alg, ms)?.mult(&alg.zero()))
}

/// Named representations: `Γ` spin and `V` standard of a `B` factor, `Γ+`
/// half-spin of a `D` factor, `W`/`W*` standard and dual of an `A` factor,
/// `V2` standard of an `A_1` factor.
pub fn atom(alg: &AlgebraType, name: &str) -> Result<WeightMultiset> {
    let find = |pred: &dyn Fn(&SimpleFactor) -> bool| -> Result<usize> {
        alg.factors
            .iter()
            .position(|f| pred(f))
            .ok_or_else(|| Error::Incompatible(format!("{name} needs a matching factor of {alg}")))
    };
    let (idx, top) = match name {
        "Γ" | "G" | "Gamma" => {
            let i = find(&|f| f.family == Family::B)?;
            (i, vec![half(); alg.factors[i].rank])
        }
        "V" => {
            let i = find(&|f| f.family == Family::B)?;
            let mut v = vec![Q64::zero(); alg.factors[i].rank];
            v[0] = Q64::one();
            (i, v)
        }
        "Γ+" | "G+" | "Gamma+" => {
            let i = find(&|f| f.family == Family::D)?;
            (i, vec![half(); alg.factors[i].rank])
        }
        "W" | "W*" => {
            let i = find(&|f| f.family == Family::A)?;
            let mut v = vec![Q64::zero(); alg.factors[i].coords()];
            v[0] = Q64::one();
            (i, v)
        }
        "V2" => {
            let i = find(&|f| f.family == Family::A && f.rank == 1)?;
            (i, vec![Q64::one(), Q64::zero()])
        }
        _ => return Err(Error::Parse(format!("unknown representation {name}"))),
    };
    let single = AlgebraType {
        factors: vec![alg.factors[idx]],
    };
    let mut ms = irrep_weights(&single, &WeightVec(top))?;
    if name == "W*" {
        ms = ms.dual(&single);
    }
    Ok(ms.lift(alg, idx))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Atom(String),
    Wedge(usize, Box<Expr>),
    Sym(usize, Box<Expr>),
    Dual(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Comma,
    Plus,
    Times,
    Word(String),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        if rest == "(+)" {
            out.push(Tok::Plus);
            i += 3;
        } else if rest == "(x)" {
            out.push(Tok::Times);
            i += 3;
        } else if c == '⊕' {
            out.push(Tok::Plus);
            i += 1;
        } else if c == '⊗' || c == '⊠' {
            out.push(Tok::Times);
            i += 1;
        } else if c == '(' {
            out.push(Tok::LParen);
            i += 1;
        } else if c == ')' {
            out.push(Tok::RParen);
            i += 1;
        } else if c == ',' {
            out.push(Tok::Comma);
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else {
            let start = i;
            while i < chars.len() && !"(),⊕⊗⊠".contains(chars[i]) && !chars[i].is_whitespace()
            {
                i += 1;
            }
            out.push(Tok::Word(chars[start..i].iter().collect()));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {t:?} at token {}",
                self.pos
            )))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.product()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            e = Expr::Sum(Box::new(e), Box::new(self.product()?));
        }
        Ok(e)
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.primary()?;
        while self.peek() == Some(&Tok::Times) {
            self.pos += 1;
            e = Expr::Tensor(Box::new(e), Box::new(self.primary()?));
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Some(Tok::Word(w)) => {
                self.pos += 1;
                match w.as_str() {
                    "wedge" | "sym" => {
                        self.expect(Tok::LParen)?;
                        let k = match self.peek().cloned() {
                            Some(Tok::Word(n)) => n
                                .parse::<usize>()
                                .map_err(|_| Error::Parse(format!("bad power {n}")))?,
                            _ => return Err(Error::Parse("expected a power".into())),
                        };
                        self.pos += 1;
                        self.expect(Tok::Comma)?;
                        let inner = Box::new(self.sum()?);
                        self.expect(Tok::RParen)?;
                        Ok(if w == "wedge" {
                            Expr::Wedge(k, inner)
                        } else {
                            Expr::Sym(k, inner)
                        })
                    }
                    "dual" => {
                        self.expect(Tok::LParen)?;
                        let inner = Box::new(self.sum()?);
                        self.expect(Tok::RParen)?;
                        Ok(Expr::Dual(inner))
                    }
                    _ => Ok(Expr::Atom(w)),
                }
            }
            other => Err(Error::Parse(format!("unexpected {other:?}"))),
        }
    }
}

impl Expr {
    /// Grammar: `wedge(k, X)`, `sym(k, X)`, `dual(X)`, `X (+) Y`, `X (x) Y`,
    /// parentheses, and the atoms of [`atom`]. `(x)` binds tighter than `(+)`.
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = Parser {
            toks: tokenize(s)?,
            pos: 0,
        };
        let e = p.sum()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!(
                "trailing input after token {}",
                p.pos
            )));
        }
        Ok(e)
    }

    pub fn eval(&self, alg: &AlgebraType) -> Result<WeightMultiset> {
        Ok(match self {
            Expr::Atom(a) => atom(alg, a)?,
            Expr::Wedge(k, e) => e.eval(alg)?.wedge(*k, alg)?,
            Expr::Sym(k, e) => e.eval(alg)?.sym(*k, alg),
            Expr::Dual(e) => e.eval(alg)?.dual(alg),
            Expr::Sum(a, b) => a.eval(alg)?.dsum(&b.eval(alg)?),
            Expr::Tensor(a, b) => a.eval(alg)?.tensor(&b.eval(alg)?, alg),
        })
    }
}

/// Parse and evaluate an expression over an algebra given by name.
pub fn evaluate(alg: &str, expr: &str) -> Result<(AlgebraType, WeightMultiset)> {
    let alg = AlgebraType::parse(alg)?;
    let ms = Expr::parse(expr)?.eval(&alg)?;
    Ok((alg, ms))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioRow {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub rows: Vec<ScenarioRow>,
}

impl ScenarioReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    fn row(&mut self, claim: impl Into<String>, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let pass = expected == computed;
        self.rows.push(ScenarioRow {
            claim: claim.into(),
            expected,
            computed,
            pass,
        });
    }
}

pub const SCENARIOS: [&str; 6] = [
    "so7_hodge",
    "so8_hodge",
    "weil_4fold",
    "selfproduct_weil",
    "gl2_summand",
    "spin_sl2_invariants",
];

fn tuple(v: &[u64]) -> String {
    let s: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", s.join(","))
}

fn invariants_of_even_wedges(
    alg: &AlgebraType,
    ms: &WeightMultiset,
    top: usize,
) -> Result<Vec<u64>> {
    (1..=top)
        .map(|p| invariant_dim(alg, &ms.wedge(2 * p, alg)?))
        .collect()
}

pub fn scenario_report(name: &str) -> Result<ScenarioReport> {
    let mut rep = ScenarioReport {
        name: name.to_string(),
        rows: Vec::new(),
    };
    match name {
        "so7_hodge" => {
            let b3 = AlgebraType::b(3);
            let g = atom(&b3, "Γ")?;
            let gg = g.dsum(&g);
            let w = |ds: &[i64]| WeightVec::from_ints(ds);
            let dec = |ms: &WeightMultiset| decompose(&b3, ms).map(|d| d.to_string());
            rep.row(
                "wedge2 Gamma = wedge2 V + V",
                Decomposition {
                    constituents: vec![(w(&[1, 1, 0]), 1), (w(&[1, 0, 0]), 1)],
                },
                dec(&g.wedge(2, &b3)?)?,
            );
            rep.row(
                "sym2 Gamma = wedge3 V + C",
                Decomposition {
                    constituents: vec![(w(&[1, 1, 1]), 1), (w(&[0, 0, 0]), 1)],
                },
                dec(&g.sym(2, &b3))?,
            );
            rep.row(
                "wedge4 Gamma = wedge3 V + S2_0 V + V + C",
                Decomposition {
                    constituents: vec![
                        (w(&[2, 0, 0]), 1),
                        (w(&[1, 1, 1]), 1),
                        (w(&[1, 0, 0]), 1),
                        (w(&[0, 0, 0]), 1),
                    ],
                },
                dec(&g.wedge(4, &b3)?)?,
            );
            rep.row(
                "dim of invariants of Gamma (x) Gamma",
                1,
                invariant_dim(&b3, &g.tensor(&g, &b3))?,
            );
            let w2 = g.wedge(2, &b3)?;
            rep.row(
                "dim of invariants of wedge2 Gamma (x) wedge2 Gamma",
                2,
                invariant_dim(&b3, &w2.tensor(&w2, &b3))?,
            );
            rep.row(
                "dim of invariants of wedge3 Gamma (x) Gamma",
                1,
                invariant_dim(&b3, &g.wedge(3, &b3)?.tensor(&g, &b3))?,
            );
            rep.row(
                "End(A) dimension",
                4,
                invariant_dim(&b3, &gg.tensor(&gg, &b3))?,
            );
            rep.row(
                "(B1,B2,B3,B4) for so(7)",
                "(1,6,6,16)",
                tuple(&invariants_of_even_wedges(&b3, &gg, 4)?),
            );
        }
        "so8_hodge" => {
            let d4 = AlgebraType::d(4);
            let g = atom(&d4, "Γ+")?;
            let gg = g.dsum(&g);
            let b = invariants_of_even_wedges(&d4, &gg, 4)?;
            rep.row("(B1,B2,B3,B4) for so(8)", "(1,1,1,10)", tuple(&b));
            rep.row("B4 - 1 = dim W_F for n = 4", 9, b[3] - 1);
        }
        "weil_4fold" => {
            let a3 = AlgebraType::a(3);
            let e = atom(&a3, "W")?.dsum(&atom(&a3, "W*")?);
            rep.row(
                "invariants of wedge4 (W + W*) for sl(4)",
                3,
                invariant_dim(&a3, &e.wedge(4, &a3)?)?,
            );
        }
        "selfproduct_weil" => {
            let a3 = AlgebraType::a(3);
            let e = atom(&a3, "W")?.dsum(&atom(&a3, "W*")?);
            let ee = e.dsum(&e);
            rep.row(
                "invariants of wedge2 of two copies of W + W*",
                4,
                invariant_dim(&a3, &ee.wedge(2, &a3)?)?,
            );
        }
        "gl2_summand" => {
            let a1 = AlgebraType::a(1);
            let v2 = atom(&a1, "V2")?;
            for n in 1..=4usize {
                let mut sum = WeightMultiset::default();
                for _ in 0..2 * n {
                    sum = sum.dsum(&v2);
                }
                let dec = decompose(&a1, &sum.wedge(2 * n, &a1)?)?;
                let top = WeightVec::from_ints(&[2 * n as i64, 0]);
                rep.row(
                    format!("multiplicity of the {}-dim sl(2) irrep, n = {n}", 2 * n + 1),
                    1,
                    dec.mult(&top),
                );
            }
        }
        "spin_sl2_invariants" => {
            let alg = AlgebraType::parse("B3+A1")?;
            let x = atom(&alg, "Γ")?.tensor(&atom(&alg, "V2")?, &alg);
            let dec = decompose(&alg, &x.wedge(4, &alg)?)?;
            let inv: Vec<(WeightVec, u64)> = dec
                .constituents
                .iter()
                .filter(|(w, _)| w.0[..3].iter().all(Zero::is_zero))
                .map(|(w, m)| (WeightVec(w.0[3..].to_vec()), *m))
                .collect();
            let a1 = AlgebraType::a(1);
            let dims: Result<Vec<u64>> =
                inv.iter().map(|(w, m)| Ok(weyl_dim(&a1, w)? * m)).collect();
            rep.row(
                "sl(2) content of the so(7)-invariants of wedge4 (Gamma ⊠ V2)",
                Decomposition {
                    constituents: vec![
                        (WeightVec::from_ints(&[4, 0]), 1),
                        (WeightVec::from_ints(&[0, 0]), 1),
                    ],
                },
                Decomposition { constituents: inv },
            );
            rep.row("dimensions", "(5,1)", tuple(&dims?));
        }
        _ => return Err(Error::UnknownScenario(name.to_string())),
    }
    Ok(rep)
}
