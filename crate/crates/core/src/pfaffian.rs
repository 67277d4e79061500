//! Pfaffians over commutative rings, and the Pfaffian forms of the BKP tau
//! function at specialized times.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gseries::{BiSeries, Monomial, OddSeries};
use crate::qschur::{delta, XPoint};
use crate::rational::{self, frac, int, Rational};
use crate::report::TauReport;
use crate::rspec::{check_reflection, RSpec};
use crate::tau::{series_difference, tau_bkp};

/// The operations a Pfaffian needs from its entries.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn ring_is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Ring for OddSeries {
    fn zero_like(&self) -> Self {
        OddSeries::zero(self.truncation())
    }
    fn one_like(&self) -> Self {
        OddSeries::one(self.truncation())
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Skew-symmetric matrix; only the strict upper triangle is stored.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<R> {
    dim: usize,
    zero: R,
    upper: Vec<R>,
}

impl<R: Ring> SkewMatrix<R> {
    pub fn new(dim: usize, zero: R) -> Self {
        let upper = vec![zero.clone(); dim * dim.saturating_sub(1) / 2];
        Self { dim, zero, upper }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        // row-major strict upper triangle
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    /// Sets `A[i][j]` and, implicitly, `A[j][i] = -A[i][j]`.
    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i != j && i < self.dim && j < self.dim, "index ({i},{j}) out of range");
        if i < j {
            let s = self.slot(i, j);
            self.upper[s] = value;
        } else {
            let s = self.slot(j, i);
            self.upper[s] = value.neg_ref();
        }
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.zero.clone(),
            std::cmp::Ordering::Less => self.upper[self.slot(i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[self.slot(j, i)].neg_ref(),
        }
    }

    pub fn map<S: Ring>(&self, zero: S, f: impl Fn(&R) -> S) -> SkewMatrix<S> {
        SkewMatrix { dim: self.dim, zero, upper: self.upper.iter().map(f).collect() }
    }
}

/// Pfaffian by expansion along the first row, memoized over index subsets.
pub fn pfaffian<R: Ring>(a: &SkewMatrix<R>) -> Result<R> {
    if a.dim % 2 == 1 {
        return Err(Error::OddDimension(a.dim));
    }
    assert!(a.dim <= 64, "dimension {} too large", a.dim);
    let full = if a.dim == 64 { u64::MAX } else { (1u64 << a.dim) - 1 };
    let mut memo = HashMap::new();
    Ok(pf_subset(a, full, &mut memo))
}

fn pf_subset<R: Ring>(a: &SkewMatrix<R>, set: u64, memo: &mut HashMap<u64, R>) -> R {
    if set == 0 {
        return a.zero.one_like();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = a.zero.clone();
    let mut sign_plus = true;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = a.get(i, j);
        if !entry.ring_is_zero() {
            let minor = pf_subset(a, rest & !(1u64 << j), memo);
            let term = entry.mul_ref(&minor);
            acc = if sign_plus { acc.add_ref(&term) } else { acc.sub_ref(&term) };
        }
        sign_plus = !sign_plus;
    }
    memo.insert(set, acc.clone());
    acc
}

/// Dense rational copy of a skew matrix.
fn dense(a: &SkewMatrix<Rational>) -> Vec<Vec<Rational>> {
    (0..a.dim).map(|i| (0..a.dim).map(|j| a.get(i, j)).collect()).collect()
}

/// Determinant of a square rational matrix by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut a = m.to_vec();
    let mut sign = Rational::one();
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn skew_determinant(a: &SkewMatrix<Rational>) -> Rational {
    determinant(&dense(a))
}

/// Pfaffian of a rational skew matrix by pivoted elimination of 2x2 blocks,
/// independent of the expansion in [`pfaffian`].
pub fn pfaffian_elimination(a: &SkewMatrix<Rational>) -> Result<Rational> {
    let n = a.dim;
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let mut m = dense(a);
    let mut pf = Rational::one();
    for k in (0..n).step_by(2) {
        let Some(p) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return Ok(Rational::zero());
        };
        if p != k + 1 {
            m.swap(p, k + 1);
            for row in m.iter_mut() {
                row.swap(p, k + 1);
            }
            pf = -pf;
        }
        let piv = m[k][k + 1].clone();
        pf *= &piv;
        for i in k + 2..n {
            for j in k + 2..n {
                let upd = (&m[k + 1][i] * &m[k][j] - &m[k][i] * &m[k + 1][j]) / &piv;
                m[i][j] += upd;
            }
        }
    }
    Ok(pf)
}

/// Random skew matrix with small rational entries `p/q`, `|p| <= 9`, `1 <= q <= 6`.
pub fn random_skew_matrix(dim: usize, rng: &mut impl Rng) -> SkewMatrix<Rational> {
    let mut m = SkewMatrix::new(dim, Rational::zero());
    for i in 0..dim {
        for j in i + 1..dim {
            m.set(i, j, frac(rng.gen_range(-9..=9), rng.gen_range(1..=6)));
        }
    }
    m
}

/// Polynomial in `nvars` commuting variables truncated at total degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, degree: u32) -> Self {
        Self { nvars, degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational, nvars: usize, degree: u32) -> Self {
        let mut p = Self::zero(nvars, degree);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(i: usize, nvars: usize, degree: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars, degree);
        p.add_term(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Adds `c * prod v_i^{exps_i}`; terms above the cutoff are dropped.
    pub fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() || exps.iter().sum::<u32>() > self.degree {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.nvars, self.degree);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, v) in &other.terms {
            out.add_term(e.clone(), -v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        let with_deg = |p: &Self| -> Vec<(u32, Vec<u32>, Rational)> {
            p.terms.iter().map(|(e, v)| (e.iter().sum(), e.clone(), v.clone())).collect()
        };
        let (a, b) = (with_deg(self), with_deg(other));
        for (da, ea, va) in &a {
            for (db, eb, vb) in &b {
                if da + db > self.degree {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(Rational::zero) += va * vb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self { nvars: self.nvars, degree: self.degree, terms: acc }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(Rational::one(), self.nvars, self.degree), |acc, _| acc.mul(self))
    }

    /// First monomial (in key order) where the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Vec<u32>, Rational, Rational)> {
        let keys: std::collections::BTreeSet<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coeff(e), other.coeff(e));
            (a != b).then(|| (e.clone(), a, b))
        })
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars, self.degree)
    }
    fn one_like(&self) -> Self {
        Self::constant(Rational::one(), self.nvars, self.degree)
    }
    fn ring_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.scale(&int(-1))
    }
}

/// Fraction `num / prod f_k^{den_k}` over a fixed list of polynomial factors.
/// Sums bring both operands to the least common denominator.
#[derive(Debug, Clone)]
pub struct ClearedPoly {
    factors: Rc<Vec<MultiPoly>>,
    num: MultiPoly,
    den: Vec<u32>,
}

impl ClearedPoly {
    pub fn new(factors: Rc<Vec<MultiPoly>>, num: MultiPoly, den: Vec<u32>) -> Self {
        assert_eq!(factors.len(), den.len());
        Self { factors, num, den }
    }

    pub fn polynomial(factors: Rc<Vec<MultiPoly>>, num: MultiPoly) -> Self {
        let den = vec![0; factors.len()];
        Self { factors, num, den }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    /// Numerator over the denominator `prod f_k^{target_k}`; needs `target >= den`.
    pub fn numerator_over(&self, target: &[u32]) -> MultiPoly {
        let mut out = self.num.clone();
        for (k, (&t, &d)) in target.iter().zip(&self.den).enumerate() {
            assert!(t >= d, "target denominator too small");
            if t > d && !out.is_zero() {
                out = out.mul(&self.factors[k].pow(t - d));
            }
        }
        out
    }
}

impl Ring for ClearedPoly {
    fn zero_like(&self) -> Self {
        Self::polynomial(self.factors.clone(), self.num.zero_like())
    }
    fn one_like(&self) -> Self {
        Self::polynomial(self.factors.clone(), self.num.one_like())
    }
    fn ring_is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        if other.ring_is_zero() {
            return self.clone();
        }
        if self.ring_is_zero() {
            return other.clone();
        }
        let den: Vec<u32> = self.den.iter().zip(&other.den).map(|(a, b)| *a.max(b)).collect();
        let num = self.numerator_over(&den).add(&other.numerator_over(&den));
        Self { factors: self.factors.clone(), num, den }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        if num.is_zero() {
            return self.zero_like();
        }
        let den = self.den.iter().zip(&other.den).map(|(a, b)| a + b).collect();
        Self { factors: self.factors.clone(), num, den }
    }
    fn neg_ref(&self) -> Self {
        Self { factors: self.factors.clone(), num: self.num.neg_ref(), den: self.den.clone() }
    }
}

/// Matrix positions: `x_1..x_N` in order, then `y_N..y_1`. Variable indices
/// stay `x_1..x_N, y_1..y_N`.
fn position(n: usize, block: usize, k: usize) -> usize {
    if block == 0 {
        k
    } else {
        2 * n - 1 - k
    }
}

/// Pairs `(i, j)`, `i < j`, of one alphabet, in the order used for denominators.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// Denominator factors `x_i + x_j` followed by `y_i + y_j`.
fn pair_sums(n: usize, degree: u32) -> Vec<MultiPoly> {
    let nv = 2 * n;
    let mut out = Vec::new();
    for off in [0, n] {
        for (i, j) in pairs(n) {
            out.push(MultiPoly::var(off + i, nv, degree).add(&MultiPoly::var(off + j, nv, degree)));
        }
    }
    out
}

/// The matrix `S` for `N` points in each alphabet, symbolic in `x` and `y`.
/// For labels `k < m` the entry in row `x_k`, column `x_m` is
/// `(x_m - x_k) / (x_m + x_k)` and the entry in row `y_k`, column `y_m` is
/// `(y_k - y_m) / (y_k + y_m)`; the cross block is
/// `1 + 2 sum_{n=1}^{n_cut} r(1)...r(n) x_k^n y_m^n`. Rows are ordered
/// `x_1..x_N, y_N..y_1`, so that `Pf(S) = Delta(x) Delta(y) tau` with no extra sign.
pub fn build_s(n: usize, spec: &RSpec, n_cut: u32, degree: u32) -> Result<SkewMatrix<ClearedPoly>> {
    if !check_reflection(spec, REFLECTION_RANGE) {
        return Err(Error::InvalidSpec(format!("{spec} violates r(n) = r(1-n)")));
    }
    let nv = 2 * n;
    let factors = Rc::new(pair_sums(n, degree));
    let zero = ClearedPoly::polynomial(factors.clone(), MultiPoly::zero(nv, degree));
    let mut s = SkewMatrix::new(nv, zero);
    let npairs = n * n.saturating_sub(1) / 2;
    for block in 0..2 {
        for (idx, (i, j)) in pairs(n).into_iter().enumerate() {
            let off = block * n;
            let (a, b) = if block == 0 { (j, i) } else { (i, j) };
            let num = MultiPoly::var(off + a, nv, degree).sub(&MultiPoly::var(off + b, nv, degree));
            let mut den = vec![0; factors.len()];
            den[block * npairs + idx] = 1;
            let entry = ClearedPoly::new(factors.clone(), num, den);
            s.set(position(n, block, i), position(n, block, j), entry);
        }
    }
    let weights: Vec<Rational> = (1..=n_cut).map(|k| spec.partial_product(k)).collect::<Result<_>>()?;
    for k in 0..n {
        for m in 0..n {
            let mut p = MultiPoly::constant(Rational::one(), nv, degree);
            for (i, w) in weights.iter().enumerate() {
                let e = i as u32 + 1;
                let mut exps = vec![0; nv];
                exps[k] = e;
                exps[n + m] = e;
                p.add_term(exps, w * int(2));
            }
            s.set(position(n, 0, k), position(n, 1, m), ClearedPoly::polynomial(factors.clone(), p));
        }
    }
    Ok(s)
}

const REFLECTION_RANGE: i64 = 20;

/// `t_m = (2/m) sum_k v_k^m` over the variables `offset..offset+n`.
fn time_poly(m: u32, offset: usize, n: usize, nv: usize, degree: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(nv, degree);
    for k in 0..n {
        let mut e = vec![0; nv];
        e[offset + k] = m;
        p.add_term(e, frac(2, m as i64));
    }
    p
}

fn monomial_poly(
    mono: &Monomial,
    offset: usize,
    n: usize,
    nv: usize,
    degree: u32,
    cache: &mut HashMap<(usize, u32), MultiPoly>,
) -> MultiPoly {
    let mut out = MultiPoly::constant(Rational::one(), nv, degree);
    for (m, e) in mono.factors() {
        let t = cache.entry((offset, m)).or_insert_with(|| time_poly(m, offset, n, nv, degree));
        out = out.mul(&t.pow(e));
    }
    out
}

/// `tau(t(x), t*(y))` as a polynomial in `x, y` up to total degree `degree`.
fn tau_polynomial(tau: &BiSeries, n: usize, degree: u32) -> MultiPoly {
    let nv = 2 * n;
    let mut cache = HashMap::new();
    let mut grouped: BTreeMap<&Monomial, Vec<(&Monomial, &Rational)>> = BTreeMap::new();
    for ((m, ms), c) in tau.terms() {
        grouped.entry(m).or_default().push((ms, c));
    }
    let mut out = MultiPoly::zero(nv, degree);
    for (m, rest) in grouped {
        let mut inner = MultiPoly::zero(nv, degree);
        for (ms, c) in rest {
            inner = inner.add(&monomial_poly(ms, n, n, nv, degree, &mut cache).scale(c));
        }
        out = out.add(&monomial_poly(m, 0, n, nv, degree, &mut cache).mul(&inner));
    }
    out
}

fn render_exps(exps: &[u32], n: usize) -> String {
    let parts: Vec<String> = exps
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let name = if i < n { format!("x{}", i + 1) } else { format!("y{}", i - n + 1) };
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// `Pf(S) prod (x_i+x_j)(y_i+y_j) = tau(t(x), t*(y)) prod (x_i-x_j)(y_i-y_j)`
/// coefficientwise through total degree `degree`, both sides cleared of
/// denominators.
pub fn check_pfaffian_s(spec: &RSpec, n: usize, degree: u32) -> Result<TauReport> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidSpec(format!("N = {n} outside 1..=4")));
    }
    let nv = 2 * n;
    let half = degree / 2;
    let s = build_s(n, spec, half, degree)?;
    let pf = pfaffian(&s)?;
    let target: Vec<u32> = pf.denominator().iter().map(|&d| d.max(1)).collect();
    let lhs = pf.numerator_over(&target);

    let tau = tau_bkp(spec, half, half)?;
    let mut rhs = tau_polynomial(&tau, n, degree);
    for off in [0, n] {
        for (i, j) in pairs(n) {
            rhs = rhs.mul(&MultiPoly::var(off + i, nv, degree).sub(&MultiPoly::var(off + j, nv, degree)));
        }
    }
    let factors = pair_sums(n, degree);
    for (k, &t) in target.iter().enumerate() {
        if t > 1 {
            rhs = rhs.mul(&factors[k].pow(t - 1));
        }
    }
    let diff = lhs.first_difference(&rhs).map(|(e, a, b)| (render_exps(&e, n), a, b));
    Ok(TauReport::new("pfaffian-s")
        .param("r", spec.to_string())
        .param("n", n as u64)
        .param("degree", degree)
        .with(diff))
}

/// `tau(t(x), t*)` as a series in `t*`, exact through weight `weight`.
pub fn tau_at_points(tau: &BiSeries, x: &XPoint) -> OddSeries {
    let mut times: HashMap<u32, Rational> = HashMap::new();
    let mut eval = |mono: &Monomial| {
        mono.factors().fold(Rational::one(), |acc, (m, e)| {
            let tm = times.entry(m).or_insert_with(|| x.time(m)).clone();
            acc * rational::pow(&tm, e)
        })
    };
    let mut values: HashMap<Monomial, Rational> = HashMap::new();
    for ((m, _), _) in tau.terms() {
        if !values.contains_key(m) {
            let v = eval(m);
            values.insert(m.clone(), v);
        }
    }
    tau.specialize_first(|m| values[m].clone())
}

/// The matrix `R` for points `x`: `R_ik = (x_i-x_k)/(x_i+x_k) tau(t(x_i,x_k), t*)`,
/// bordered by `R_{i,N+1} = tau(t(x_i), t*)` when `N` is odd.
pub fn build_r(x: &XPoint, spec: &RSpec, weight: u32) -> Result<SkewMatrix<OddSeries>> {
    let tau = tau_bkp(spec, weight, weight)?;
    build_r_from(x, &tau, weight)
}

fn build_r_from(x: &XPoint, tau: &BiSeries, weight: u32) -> Result<SkewMatrix<OddSeries>> {
    let v = x.values();
    let n = v.len();
    let dim = n + n % 2;
    let mut r = SkewMatrix::new(dim, OddSeries::zero(weight));
    for i in 0..n {
        for k in i + 1..n {
            let pair = XPoint::new(vec![v[i].clone(), v[k].clone()])?;
            let pre = (&v[i] - &v[k]) / (&v[i] + &v[k]);
            r.set(i, k, tau_at_points(tau, &pair).scale(&pre));
        }
        if n % 2 == 1 {
            let single = XPoint::new(vec![v[i].clone()])?;
            r.set(i, n, tau_at_points(tau, &single));
        }
    }
    Ok(r)
}

/// Random point of `n` coordinates `p/q` with `1 <= |p| <= 9`, `1 <= q <= 7`,
/// pairwise distinct in absolute value.
pub fn random_point(n: usize, rng: &mut impl Rng) -> XPoint {
    loop {
        let values = (0..n)
            .map(|_| {
                let p: i64 = rng.gen_range(1..=9);
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                frac(sign * p, rng.gen_range(1..=7))
            })
            .collect();
        if let Ok(x) = XPoint::new(values) {
            return x;
        }
    }
}

/// Number of random points sampled by [`check_pfaffian_r`].
pub const PFAFFIAN_R_POINTS: usize = 3;

/// `Pf(R) / Delta(x) = tau(t(x), t*)` as series in `t*` through weight
/// `weight`, at [`PFAFFIAN_R_POINTS`] seeded random rational points.
pub fn check_pfaffian_r(spec: &RSpec, n: usize, weight: u32, seed: u64) -> Result<TauReport> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidSpec(format!("N = {n} outside 1..=4")));
    }
    let tau = tau_bkp(spec, weight, weight)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = TauReport::new("pfaffian-r")
        .param("r", spec.to_string())
        .param("n", n as u64)
        .param("weight", weight)
        .param("seed", seed);
    for _ in 0..PFAFFIAN_R_POINTS {
        let x = random_point(n, &mut rng);
        let r = build_r_from(&x, &tau, weight)?;
        let lhs = pfaffian(&r)?.scale(&(Rational::one() / delta(&x)?));
        let rhs = tau_at_points(&tau, &x);
        let at: Vec<String> = x.values().iter().map(|v| v.to_string()).collect();
        report.record(
            series_difference(&lhs, &rhs, "t*").map(|(m, a, b)| (format!("{m} at x=({})", at.join(",")), a, b)),
        );
    }
    Ok(report)
}
