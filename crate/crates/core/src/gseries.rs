//! Truncated weight-graded polynomials in the odd times `t_1, t_3, t_5, ...`.
//!
//! The grading is `deg t_m = m`. A series with truncation weight `W` stores only
//! monomials of weight `<= W`; every product discards heavier terms, so all
//! arithmetic is exact degree by degree. [`BiSeries`] is the same construction
//! over two independent alphabets `t` and `t*`, each with its own truncation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// A monomial `prod t_m^{e_m}` over odd `m`.
///
/// Ordered by weight first, so iteration over a series is graded; within a
/// weight, higher powers of the low times come first (`t1^3` before `t3`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    weight: u32,
    // exps[k] is the exponent of t_{2k+1}; no trailing zeros
    exps: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.weight.cmp(&other.weight).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn slot(m: u32) -> Result<usize> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenIndex(m));
    }
    Ok((m / 2) as usize)
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The single variable `t_m`.
    pub fn var(m: u32) -> Result<Self> {
        Self::from_pairs(&[(m, 1)])
    }

    /// Builds `prod t_m^e` from `(m, e)` pairs; repeated indices accumulate.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let mut exps = Vec::new();
        for &(m, e) in pairs {
            let k = slot(m)?;
            if exps.len() <= k {
                exps.resize(k + 1, 0);
            }
            exps[k] += e;
        }
        Ok(Self::from_exps(exps))
    }

    fn from_exps(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        let weight = exps.iter().enumerate().map(|(k, &e)| (2 * k as u32 + 1) * e).sum();
        Self { weight, exps }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, m: u32) -> u32 {
        if m.is_multiple_of(2) {
            return 0;
        }
        self.exps.get((m / 2) as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(m, e_m)` pairs in increasing `m`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(k, &e)| (2 * k as u32 + 1, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.exps.len().max(other.exps.len());
        let exps = (0..n).map(|k| self.exps.get(k).unwrap_or(&0) + other.exps.get(k).unwrap_or(&0)).collect();
        Monomial { weight: self.weight + other.weight, exps }
    }

    /// `prod f(m)^{e_m}` for a per-variable value `f`.
    pub fn evaluate(&self, f: impl Fn(u32) -> Rational) -> Rational {
        self.factors().fold(Rational::one(), |acc, (m, e)| acc * rational::pow(&f(m), e))
    }

    /// Renders the monomial with variables named `{name}{m}`, e.g. `t1^2*t3`.
    pub fn render(&self, name: &str) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.factors()
            .map(|(m, e)| if e == 1 { format!("{name}{m}") } else { format!("{name}{m}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(None)?;
        for (m, e) in self.factors() {
            map.serialize_entry(&m.to_string(), &e)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BTreeMap::<String, u32>::deserialize(d)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (k, e) in raw {
            let m: u32 = k.parse().map_err(serde::de::Error::custom)?;
            pairs.push((m, e));
        }
        Monomial::from_pairs(&pairs).map_err(serde::de::Error::custom)
    }
}

/// A truncated series in one odd-time alphabet with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSeries {
    truncation: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl OddSeries {
    pub fn zero(truncation: u32) -> Self {
        Self { truncation, terms: BTreeMap::new() }
    }

    pub fn one(truncation: u32) -> Self {
        Self::constant(Rational::one(), truncation)
    }

    pub fn constant(c: Rational, truncation: u32) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(Monomial::one(), c);
        s
    }

    /// `c * monomial`, or zero when the monomial is heavier than the truncation.
    pub fn monomial(mono: Monomial, c: Rational, truncation: u32) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(mono, c);
        s
    }

    /// The variable `t_m`.
    pub fn var(m: u32, truncation: u32) -> Result<Self> {
        Ok(Self::monomial(Monomial::var(m)?, Rational::one(), truncation))
    }

    pub fn from_terms(truncation: u32, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut s = Self::zero(truncation);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c * mono` in place, dropping it beyond the truncation and removing
    /// cancelled coefficients.
    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if mono.weight > self.truncation || c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient of `mono`; querying beyond the truncation is an error since the
    /// answer would be meaningless.
    pub fn coefficient(&self, mono: &Monomial) -> Result<Rational> {
        if mono.weight > self.truncation {
            return Err(Error::WeightOverflow { weight: mono.weight, limit: self.truncation });
        }
        Ok(self.coeff(mono))
    }

    /// Coefficient of `mono`, zero when absent (no range check).
    pub fn coeff(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.truncation);
        }
        Self { truncation: self.truncation, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Re-truncates to a lower (or equal) weight.
    pub fn truncate(&self, truncation: u32) -> Self {
        Self {
            truncation,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weight <= truncation)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch(self.truncation, other.truncation));
        }
        let w = self.truncation;
        let mut out = Self::zero(w);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.weight + mb.weight <= w {
                    out.add_term(ma.mul(mb), ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.truncation), |acc, _| &acc * self)
    }

    /// `sum a^k / k!`; the argument must have zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let mut out = Self::one(self.truncation);
        let mut power = Self::one(self.truncation);
        for k in 1.. {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&(Rational::one() / rational::factorial(k)));
        }
        Ok(out)
    }

    /// `t_m -> a^m t_m` for every odd `m`.
    pub fn substitute_scaled(&self, a: &Rational) -> Self {
        Self::from_terms(self.truncation, self.terms.iter().map(|(m, c)| (m.clone(), c * rational::pow(a, m.weight))))
    }

    /// Formal derivative in `t_m` (identically zero for even `m`).
    pub fn partial(&self, m: u32) -> Self {
        let mut out = Self::zero(self.truncation);
        let Ok(k) = slot(m) else {
            return out;
        };
        for (mono, c) in &self.terms {
            let e = mono.exps.get(k).copied().unwrap_or(0);
            if e == 0 {
                continue;
            }
            let mut exps = mono.exps.clone();
            exps[k] -= 1;
            out.add_term(Monomial::from_exps(exps), c * int(e as i64));
        }
        out
    }

    /// Replaces every monomial by a scalar value and sums.
    pub fn evaluate(&self, f: impl Fn(&Monomial) -> Rational) -> Rational {
        self.terms.iter().map(|(m, c)| c * f(m)).fold(Rational::zero(), |a, b| a + b)
    }

    /// Set of weights carried by nonzero terms.
    pub fn weights(&self) -> Vec<u32> {
        let mut w: Vec<u32> = self.terms.keys().map(|m| m.weight).collect();
        w.dedup();
        w
    }

    /// Renders the series with a variable name, e.g. `1/6*t1^3 - 2*t3`.
    pub fn render(&self, name: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m.render(name));
            } else {
                out.push_str(&format!("{mag}*{}", m.render(name)));
            }
        }
        out
    }
}

impl fmt::Display for OddSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl Add for &OddSeries {
    type Output = OddSeries;
    fn add(self, rhs: &OddSeries) -> OddSeries {
        assert_eq!(self.truncation, rhs.truncation, "truncation mismatch in add");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &OddSeries {
    type Output = OddSeries;
    fn sub(self, rhs: &OddSeries) -> OddSeries {
        self + &(-rhs)
    }
}

impl Neg for &OddSeries {
    type Output = OddSeries;
    fn neg(self) -> OddSeries {
        OddSeries { truncation: self.truncation, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

/// Panics on mismatched truncation; use [`OddSeries::try_mul`] to get an error.
impl Mul for &OddSeries {
    type Output = OddSeries;
    fn mul(self, rhs: &OddSeries) -> OddSeries {
        self.try_mul(rhs).expect("truncation mismatch in mul")
    }
}

/// First monomial (in graded order) where two series disagree.
pub fn first_difference(a: &OddSeries, b: &OddSeries) -> Option<(Monomial, Rational, Rational)> {
    let keys: std::collections::BTreeSet<&Monomial> = a.terms.keys().chain(b.terms.keys()).collect();
    keys.into_iter().find_map(|m| {
        let (x, y) = (a.coeff(m), b.coeff(m));
        (x != y).then(|| (m.clone(), x, y))
    })
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Monomial,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct OddSeriesJson {
    truncation_weight: u32,
    terms: Vec<TermJson>,
}

impl Serialize for OddSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OddSeriesJson {
            truncation_weight: self.truncation,
            terms: self.terms.iter().map(|(m, c)| TermJson { exps: m.clone(), coeff: c.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OddSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = OddSeriesJson::deserialize(d)?;
        if let Some(t) = raw.terms.iter().find(|t| t.exps.weight > raw.truncation_weight) {
            return Err(serde::de::Error::custom(format!(
                "term {} exceeds truncation weight {}",
                t.exps, raw.truncation_weight
            )));
        }
        Ok(OddSeries::from_terms(raw.truncation_weight, raw.terms.into_iter().map(|t| (t.exps, t.coeff))))
    }
}

/// A truncated series in two odd-time alphabets `t` and `t*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    truncation: u32,
    truncation_star: u32,
    terms: BTreeMap<(Monomial, Monomial), Rational>,
}

impl BiSeries {
    pub fn zero(truncation: u32, truncation_star: u32) -> Self {
        Self { truncation, truncation_star, terms: BTreeMap::new() }
    }

    pub fn one(truncation: u32, truncation_star: u32) -> Self {
        let mut s = Self::zero(truncation, truncation_star);
        s.add_term(Monomial::one(), Monomial::one(), Rational::one());
        s
    }

    /// `a(t) * b(t*)`, carrying the truncations of the factors.
    pub fn outer(a: &OddSeries, b: &OddSeries) -> Self {
        let mut s = Self::zero(a.truncation, b.truncation);
        s.add_outer(a, b, &Rational::one());
        s
    }

    /// Adds `c * a(t) * b(t*)` in place.
    pub fn add_outer(&mut self, a: &OddSeries, b: &OddSeries, c: &Rational) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.clone(), mb.clone(), ca * cb * c);
            }
        }
    }

    pub fn truncation(&self) -> (u32, u32) {
        (self.truncation, self.truncation_star)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, m_star: Monomial, c: Rational) {
        if m.weight > self.truncation || m_star.weight > self.truncation_star || c.is_zero() {
            return;
        }
        match self.terms.entry((m, m_star)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial, m_star: &Monomial) -> Result<Rational> {
        if m.weight > self.truncation {
            return Err(Error::WeightOverflow { weight: m.weight, limit: self.truncation });
        }
        if m_star.weight > self.truncation_star {
            return Err(Error::WeightOverflow { weight: m_star.weight, limit: self.truncation_star });
        }
        Ok(self.coeff(m, m_star))
    }

    pub fn coeff(&self, m: &Monomial, m_star: &Monomial) -> Rational {
        self.terms.get(&(m.clone(), m_star.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(), &Monomial::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.truncation, self.truncation_star);
        for ((m, ms), v) in &self.terms {
            out.add_term(m.clone(), ms.clone(), v * c);
        }
        out
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.truncation != other.truncation {
            return Err(Error::TruncationMismatch(self.truncation, other.truncation));
        }
        if self.truncation_star != other.truncation_star {
            return Err(Error::TruncationMismatch(self.truncation_star, other.truncation_star));
        }
        let mut out = Self::zero(self.truncation, self.truncation_star);
        for ((ma, msa), ca) in &self.terms {
            for ((mb, msb), cb) in &other.terms {
                if ma.weight + mb.weight <= self.truncation && msa.weight + msb.weight <= self.truncation_star {
                    out.add_term(ma.mul(mb), msa.mul(msb), ca * cb);
                }
            }
        }
        Ok(out)
    }

    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstant);
        }
        let mut out = Self::one(self.truncation, self.truncation_star);
        let mut power = out.clone();
        for k in 1.. {
            power = &power * self;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale(&(Rational::one() / rational::factorial(k)));
        }
        Ok(out)
    }

    /// Exchanges the roles of `t` and `t*`.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.truncation_star, self.truncation);
        for ((m, ms), c) in &self.terms {
            out.add_term(ms.clone(), m.clone(), c.clone());
        }
        out
    }

    /// `t_m -> a^m t_m`, `t*_m -> b^m t*_m`.
    pub fn substitute_scaled(&self, a: &Rational, b: &Rational) -> Self {
        let mut out = Self::zero(self.truncation, self.truncation_star);
        for ((m, ms), c) in &self.terms {
            let f = rational::pow(a, m.weight) * rational::pow(b, ms.weight);
            out.add_term(m.clone(), ms.clone(), c * f);
        }
        out
    }

    /// Collapses the `t` alphabet through `f`, leaving a series in `t*`.
    pub fn specialize_first(&self, f: impl Fn(&Monomial) -> Rational) -> OddSeries {
        let mut out = OddSeries::zero(self.truncation_star);
        for ((m, ms), c) in &self.terms {
            out.add_term(ms.clone(), c * f(m));
        }
        out
    }

    /// Collapses the `t*` alphabet through `f`, leaving a series in `t`.
    pub fn specialize_second(&self, f: impl Fn(&Monomial) -> Rational) -> OddSeries {
        self.swap().specialize_first(f)
    }

    /// Collapses `t` through `f` and groups the result by the weight of the `t`
    /// monomial: entry `w` collects the terms with `t`-weight `w`.
    pub fn specialize_first_graded(&self, f: impl Fn(&Monomial) -> Rational) -> Vec<OddSeries> {
        let mut out = vec![OddSeries::zero(self.truncation_star); self.truncation as usize + 1];
        for ((m, ms), c) in &self.terms {
            out[m.weight as usize].add_term(ms.clone(), c * f(m));
        }
        out
    }

    /// Restricts to terms with both weights within the given bounds.
    pub fn truncate(&self, truncation: u32, truncation_star: u32) -> Self {
        let mut out = Self::zero(truncation, truncation_star);
        for ((m, ms), c) in &self.terms {
            out.add_term(m.clone(), ms.clone(), c.clone());
        }
        out
    }
}

impl Add for &BiSeries {
    type Output = BiSeries;
    fn add(self, rhs: &BiSeries) -> BiSeries {
        assert_eq!(self.truncation(), rhs.truncation(), "truncation mismatch in add");
        let mut out = self.clone();
        for ((m, ms), c) in &rhs.terms {
            out.add_term(m.clone(), ms.clone(), c.clone());
        }
        out
    }
}

impl Sub for &BiSeries {
    type Output = BiSeries;
    fn sub(self, rhs: &BiSeries) -> BiSeries {
        self + &rhs.scale(&-Rational::one())
    }
}

/// Panics on mismatched truncation; use [`BiSeries::try_mul`] to get an error.
impl Mul for &BiSeries {
    type Output = BiSeries;
    fn mul(self, rhs: &BiSeries) -> BiSeries {
        self.try_mul(rhs).expect("truncation mismatch in mul")
    }
}

/// First `(t, t*)` monomial pair where two bi-series disagree.
pub fn first_bi_difference(a: &BiSeries, b: &BiSeries) -> Option<((Monomial, Monomial), Rational, Rational)> {
    let keys: std::collections::BTreeSet<&(Monomial, Monomial)> = a.terms.keys().chain(b.terms.keys()).collect();
    keys.into_iter().find_map(|k| {
        let (x, y) = (a.coeff(&k.0, &k.1), b.coeff(&k.0, &k.1));
        (x != y).then(|| (k.clone(), x, y))
    })
}

#[derive(Serialize, Deserialize)]
struct BiTermJson {
    exps: Monomial,
    exps_star: Monomial,
    #[serde(with = "rational::serde_str")]
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct BiSeriesJson {
    truncation_weight: u32,
    truncation_weight_star: u32,
    terms: Vec<BiTermJson>,
}

impl Serialize for BiSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BiSeriesJson {
            truncation_weight: self.truncation,
            truncation_weight_star: self.truncation_star,
            terms: self
                .terms
                .iter()
                .map(|((m, ms), c)| BiTermJson { exps: m.clone(), exps_star: ms.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = BiSeriesJson::deserialize(d)?;
        let mut out = BiSeries::zero(raw.truncation_weight, raw.truncation_weight_star);
        for t in raw.terms {
            if t.exps.weight > raw.truncation_weight || t.exps_star.weight > raw.truncation_weight_star {
                return Err(serde::de::Error::custom("term exceeds truncation weight"));
            }
            out.add_term(t.exps, t.exps_star, t.coeff);
        }
        Ok(out)
    }
}
