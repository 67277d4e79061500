//! The weight function `r(n)` and the partition products built from it.
//!
//! Every variant is served on all integers: variants that are naturally defined
//! only for positive arguments answer `n <= 0` through the reflection
//! `r(n) = r(1 - n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{Partition, StrictPartition};
use crate::rational::{self, frac, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RSpec {
    /// `r = 1`.
    Ones,
    /// `r(n) = prod (a_i + n - 1) / prod (b_i + n - 1)` for `n > 0`.
    RationalPS { a: Vec<Rational>, b: Vec<Rational> },
    /// `r(n) = prod ((n - 1/2)^2 - alpha_k^2) / prod ((n - 1/2)^2 - beta_k^2)`.
    SymmetricRational { alpha: Vec<Rational>, beta: Vec<Rational> },
    /// `r(n) = 1` for `0 < n < M`, zero for `n >= M`.
    Cutoff { m: i64 },
    /// `r(n) = e^{T_{n-1} - T_n}`, stored through the multipliers `e^{T_n}` for
    /// `n > 0`; missing entries mean `T_n = 0`.
    TParam { exp_t: BTreeMap<i64, Rational> },
    /// Explicit values on `start, start+1, ...`.
    Table { start: i64, values: Vec<Rational> },
    /// Pointwise product.
    Product(Box<RSpec>, Box<RSpec>),
}

impl RSpec {
    pub fn rational_ps(a: Vec<Rational>, b: Vec<Rational>) -> Result<Self> {
        if let Some(bad) = b.iter().find(|b| b.is_integer() && **b <= Rational::zero()) {
            return Err(Error::InvalidSpec(format!("lower parameter {bad} is a nonpositive integer")));
        }
        Ok(RSpec::RationalPS { a, b })
    }

    pub fn symmetric_rational(alpha: Vec<Rational>, beta: Vec<Rational>) -> Result<Self> {
        let half_integer = |b: &Rational| {
            let twice = b * int(2);
            twice.is_integer() && twice.to_integer().is_odd()
        };
        if let Some(bad) = beta.iter().find(|b| half_integer(b)) {
            return Err(Error::InvalidSpec(format!("beta = {bad} is a half-integer")));
        }
        Ok(RSpec::SymmetricRational { alpha, beta })
    }

    pub fn cutoff(m: i64) -> Self {
        RSpec::Cutoff { m }
    }

    pub fn tparam(exp_t: BTreeMap<i64, Rational>) -> Result<Self> {
        for (n, u) in &exp_t {
            if *n <= 0 {
                return Err(Error::InvalidSpec(format!("T_{n}: only positive indices are free")));
            }
            if u.is_zero() {
                return Err(Error::InvalidSpec(format!("e^T_{n} must be nonzero")));
            }
        }
        Ok(RSpec::TParam { exp_t })
    }

    pub fn table(start: i64, values: Vec<Rational>) -> Self {
        RSpec::Table { start, values }
    }

    pub fn product(left: RSpec, right: RSpec) -> Self {
        RSpec::Product(Box::new(left), Box::new(right))
    }

    /// `r(n)` for any integer `n`.
    pub fn value(&self, n: i64) -> Result<Rational> {
        match self {
            RSpec::Ones => Ok(Rational::one()),
            RSpec::RationalPS { a, b } => {
                let n = if n >= 1 { n } else { 1 - n };
                let shift = int(n - 1);
                let num = a.iter().fold(Rational::one(), |acc, a| acc * (a + &shift));
                let den = b.iter().fold(Rational::one(), |acc, b| acc * (b + &shift));
                Ok(num / den)
            }
            RSpec::SymmetricRational { alpha, beta } => {
                let c = frac(2 * n - 1, 2);
                let sq = &c * &c;
                let num = alpha.iter().fold(Rational::one(), |acc, a| acc * (&sq - a * a));
                let den = beta.iter().fold(Rational::one(), |acc, b| acc * (&sq - b * b));
                Ok(num / den)
            }
            RSpec::Cutoff { m } => {
                let n = if n >= 1 { n } else { 1 - n };
                Ok(if n < *m { Rational::one() } else { Rational::zero() })
            }
            RSpec::TParam { exp_t } => {
                // u_k = e^{T_k}, u_0 = 1, u_{-k} = 1/u_k
                let u = |k: i64| -> Rational {
                    let v = exp_t.get(&k.abs()).cloned().unwrap_or_else(Rational::one);
                    if k < 0 {
                        v.recip()
                    } else if k == 0 {
                        Rational::one()
                    } else {
                        v
                    }
                };
                Ok(u(n - 1) / u(n))
            }
            RSpec::Table { start, values } => {
                let lookup = |k: i64| -> Option<Rational> {
                    let idx = k.checked_sub(*start)?;
                    (idx >= 0).then(|| values.get(idx as usize).cloned()).flatten()
                };
                lookup(n).or_else(|| lookup(1 - n)).ok_or(Error::Undefined(n))
            }
            RSpec::Product(l, r) => Ok(l.value(n)? * r.value(n)?),
        }
    }

    /// `r(1) r(2) ... r(n)`.
    pub fn partial_product(&self, n: u32) -> Result<Rational> {
        let mut acc = Rational::one();
        for k in 1..=n as i64 {
            acc *= self.value(k)?;
        }
        Ok(acc)
    }
}

/// `r(n) = r(1 - n)` for every `1 <= n <= n_max`; undefined values count as failure.
pub fn check_reflection(spec: &RSpec, n_max: i64) -> bool {
    (1..=n_max).all(|n| match (spec.value(n), spec.value(1 - n)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    })
}

/// `r_lambda = prod_i r(1) r(2) ... r(n_i)`; one for the zero partition.
pub fn r_lambda(spec: &RSpec, lambda: &StrictPartition) -> Result<Rational> {
    let mut acc = Rational::one();
    for &n in lambda.parts() {
        acc *= spec.partial_product(n)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Formal exponent of `r_lambda` for a `T`-parametrized weight: the telescoping
/// product `r(1)...r(n) = e^{T_0 - T_n}` gives `r_lambda = exp(sum_n c_n T_n)`
/// with the coefficients `c_n` returned here.
pub fn tparam_exponent(lambda: &StrictPartition) -> BTreeMap<u32, i64> {
    let mut out = BTreeMap::new();
    for &n in lambda.parts() {
        *out.entry(n).or_insert(0) -= 1;
    }
    out
}

/// `(a)_lambda = prod_i (a)_{n_i}` with the rising factorial `(a)_n`.
pub fn pochhammer_lambda(a: &Rational, lambda: &StrictPartition) -> Rational {
    lambda.parts().iter().fold(Rational::one(), |acc, &n| acc * rational::pochhammer(a, n))
}

/// Product of the hook lengths of the shifted diagram:
/// `(prod n_i!) prod_{i<j} (n_i + n_j) / (n_i - n_j)`.
pub fn hook_star(lambda: &StrictPartition) -> Rational {
    let parts = lambda.parts();
    let mut acc = parts.iter().fold(Rational::one(), |acc, &n| acc * rational::factorial(n));
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            acc *= frac((parts[i] + parts[j]) as i64, (parts[i] - parts[j]) as i64);
        }
    }
    acc
}

/// KP content product `prod_{(i,j) in mu} r(j - i)`.
pub fn content_product_kp(spec: &RSpec, mu: &Partition) -> Result<Rational> {
    let mut acc = Rational::one();
    for (i, j) in mu.cells() {
        acc *= spec.value(j - i)?;
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Which difference of cell coordinates is fed to the content function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContentOrientation {
    /// `i - j` (row minus column).
    RowMinusColumn,
    /// `j - i` (column minus row), the usual KP content.
    ColumnMinusRow,
}

/// `prod_{(i,j) in mu} rho(c)` with `c` chosen by `orientation`.
pub fn rho_content_product(
    rho: &BTreeMap<i64, Rational>,
    mu: &Partition,
    orientation: ContentOrientation,
) -> Result<Rational> {
    let mut acc = Rational::one();
    for (i, j) in mu.cells() {
        let c = match orientation {
            ContentOrientation::RowMinusColumn => i - j,
            ContentOrientation::ColumnMinusRow => j - i,
        };
        acc *= rho.get(&c).cloned().ok_or(Error::Undefined(c))?;
    }
    Ok(acc)
}

/// The weight `r(n) = rho(-n) rho(n-1)` tabulated on `1..=n_max`.
pub fn r_from_rho(rho: &BTreeMap<i64, Rational>, n_max: i64) -> Result<RSpec> {
    let mut values = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let a = rho.get(&-n).ok_or(Error::Undefined(-n))?;
        let b = rho.get(&(n - 1)).ok_or(Error::Undefined(n - 1))?;
        values.push(a * b);
    }
    Ok(RSpec::table(1, values))
}

/// Whether `r_lambda` equals the `rho` content product over the double of
/// `lambda` taken with contents `i - j`.
pub fn rho_check(spec: &RSpec, rho: &BTreeMap<i64, Rational>, lambda: &StrictPartition) -> Result<bool> {
    let lhs = r_lambda(spec, lambda)?;
    let rhs = if lambda.is_empty() {
        Rational::one()
    } else {
        rho_content_product(rho, &lambda.double()?, ContentOrientation::RowMinusColumn)?
    };
    Ok(lhs == rhs)
}

/// Named weights used by the verification suites.
pub fn shipped_specs() -> Vec<RSpec> {
    [
        "ones",
        "cutoff:M=2",
        "cutoff:M=3",
        "symrat:alpha=1/3;beta=",
        "symrat:alpha=0,2/5;beta=1/4",
        "ratps:a=1/2,3;b=5/2",
        "tparam:T1=2,T2=1/3,T3=5",
        "prod:(symrat:alpha=1/3;beta=),(cutoff:M=4)",
    ]
    .iter()
    .map(|s| s.parse().expect("shipped spec parses"))
    .collect()
}

fn fmt_list(v: &[Rational]) -> String {
    v.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RSpec::Ones => write!(f, "ones"),
            RSpec::RationalPS { a, b } => write!(f, "ratps:a={};b={}", fmt_list(a), fmt_list(b)),
            RSpec::SymmetricRational { alpha, beta } => {
                write!(f, "symrat:alpha={};beta={}", fmt_list(alpha), fmt_list(beta))
            }
            RSpec::Cutoff { m } => write!(f, "cutoff:M={m}"),
            RSpec::TParam { exp_t } => {
                let body: Vec<String> = exp_t.iter().map(|(n, u)| format!("T{n}={u}")).collect();
                write!(f, "tparam:{}", body.join(","))
            }
            RSpec::Table { start, values } => write!(f, "table:start={start};values={}", fmt_list(values)),
            RSpec::Product(l, r) => write!(f, "prod:({l}),({r})"),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rational).collect()
}

/// Splits `key=value;key=value` into a map.
fn parse_fields<'a>(body: &'a str, allowed: &[&str]) -> Result<BTreeMap<&'a str, &'a str>> {
    let mut out = BTreeMap::new();
    for field in body.split(';').filter(|f| !f.trim().is_empty()) {
        let (k, v) =
            field.split_once('=').ok_or_else(|| Error::InvalidSpec(format!("expected key=value, got {field:?}")))?;
        let k = k.trim();
        if !allowed.contains(&k) {
            return Err(Error::InvalidSpec(format!("unknown field {k:?}")));
        }
        out.insert(k, v);
    }
    Ok(out)
}

fn strip_parens(s: &str) -> Option<&str> {
    s.strip_prefix('(')?.strip_suffix(')')
}

/// Splits `(a),(b)` at the top-level comma.
fn split_pair(body: &str) -> Result<(&str, &str)> {
    let bad = || Error::InvalidSpec(format!("expected (spec),(spec), got {body:?}"));
    let mut depth = 0i32;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let (l, r) = (body[..i].trim(), body[i + 1..].trim());
                return Ok((strip_parens(l).ok_or_else(bad)?, strip_parens(r).ok_or_else(bad)?));
            }
            _ => {}
        }
        if depth < 0 {
            return Err(bad());
        }
    }
    Err(bad())
}

impl FromStr for RSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, body) = s.split_once(':').unwrap_or((s, ""));
        match kind {
            "ones" if body.is_empty() => Ok(RSpec::Ones),
            "cutoff" => {
                let fields = parse_fields(body, &["M"])?;
                let m = fields
                    .get("M")
                    .ok_or_else(|| Error::InvalidSpec("cutoff needs M".into()))?
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("bad M in {s:?}")))?;
                Ok(RSpec::cutoff(m))
            }
            "ratps" => {
                let fields = parse_fields(body, &["a", "b"])?;
                RSpec::rational_ps(
                    parse_list(fields.get("a").unwrap_or(&""))?,
                    parse_list(fields.get("b").unwrap_or(&""))?,
                )
            }
            "symrat" => {
                let fields = parse_fields(body, &["alpha", "beta"])?;
                RSpec::symmetric_rational(
                    parse_list(fields.get("alpha").unwrap_or(&""))?,
                    parse_list(fields.get("beta").unwrap_or(&""))?,
                )
            }
            "tparam" => {
                let mut exp_t = BTreeMap::new();
                for field in body.split(',').filter(|f| !f.trim().is_empty()) {
                    let (k, v) = field
                        .split_once('=')
                        .ok_or_else(|| Error::InvalidSpec(format!("expected Tn=value, got {field:?}")))?;
                    let n: i64 = k
                        .trim()
                        .strip_prefix('T')
                        .and_then(|n| n.parse().ok())
                        .ok_or_else(|| Error::InvalidSpec(format!("bad key {k:?}")))?;
                    exp_t.insert(n, parse_rational(v)?);
                }
                RSpec::tparam(exp_t)
            }
            "table" => {
                let fields = parse_fields(body, &["start", "values"])?;
                let start = match fields.get("start") {
                    Some(v) => v.trim().parse().map_err(|_| Error::InvalidSpec(format!("bad start {v:?}")))?,
                    None => 1,
                };
                Ok(RSpec::table(start, parse_list(fields.get("values").unwrap_or(&""))?))
            }
            "prod" => {
                let (l, r) = split_pair(body)?;
                Ok(RSpec::product(l.parse()?, r.parse()?))
            }
            _ => Err(Error::InvalidSpec(format!("unknown r-spec {s:?}"))),
        }
    }
}

impl Serialize for RSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_strict;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn spec(s: &str) -> RSpec {
        s.parse().unwrap()
    }

    #[test]
    fn values() {
        for n in -3..5 {
            assert_eq!(RSpec::Ones.value(n).unwrap(), int(1));
        }
        let c3 = RSpec::cutoff(3);
        assert_eq!(c3.value(3).unwrap(), int(0));
        assert_eq!(c3.value(2).unwrap(), int(1));
        let s = spec("symrat:alpha=0;beta=");
        assert_eq!(s.value(1).unwrap(), frac(1, 4));
        assert_eq!(s.value(0).unwrap(), frac(1, 4));
        let t = RSpec::table(1, vec![int(2), int(3)]);
        assert_eq!(t.value(0).unwrap(), int(2));
        assert_eq!(t.value(3), Err(Error::Undefined(3)));
    }

    #[test]
    fn reflection() {
        for s in shipped_specs() {
            assert!(check_reflection(&s, 20), "{s}");
        }
        assert!(check_reflection(&spec("ratps:a=1;b="), 20));
        let free = RSpec::table(-1, vec![int(5), int(1), int(2), int(3)]);
        assert!(!check_reflection(&free, 2));
    }

    #[test]
    fn invalid_parameters() {
        assert!(spec_err("ratps:a=1;b=-2"));
        assert!(spec_err("ratps:a=1;b=0"));
        assert!(!spec_err("ratps:a=1;b=-1/2"));
        assert!(spec_err("symrat:alpha=;beta=3/2"));
        assert!(spec_err("symrat:alpha=;beta=-1/2"));
        assert!(!spec_err("symrat:alpha=;beta=1"));
        assert!(spec_err("tparam:T1=0"));
        assert!(spec_err("tparam:T0=2"));
        assert!(spec_err("nonsense"));
        assert!(spec_err("prod:(ones)"));
        assert!(spec_err("cutoff:N=3"));
    }

    fn spec_err(s: &str) -> bool {
        s.parse::<RSpec>().is_err()
    }

    #[test]
    fn grammar_round_trip() {
        for s in [
            "ones",
            "cutoff:M=3",
            "ratps:a=1/2,3;b=5/2",
            "symrat:alpha=1/3;beta=",
            "tparam:T1=2,T2=3/2",
            "table:start=1;values=1,1/2,3",
            "prod:(prod:(ones),(cutoff:M=2)),(symrat:alpha=1/3;beta=)",
        ] {
            assert_eq!(spec(s).to_string(), s);
        }
    }

    #[test]
    fn r_lambda_examples() {
        assert_eq!(r_lambda(&RSpec::Ones, &sp(&[4, 2, 1])).unwrap(), int(1));
        assert_eq!(r_lambda(&RSpec::cutoff(2), &sp(&[3])).unwrap(), int(0));
        assert_eq!(r_lambda(&RSpec::cutoff(5), &StrictPartition::zero()).unwrap(), int(1));
    }

    #[test]
    fn tparam_telescopes() {
        let s = spec("tparam:T1=2,T2=1/3,T3=5,T5=7/2");
        let RSpec::TParam { exp_t } = &s else { unreachable!() };
        let u = |n: u32| exp_t.get(&(n as i64)).cloned().unwrap_or_else(Rational::one);
        for lambda in enumerate_strict(8) {
            let formal = tparam_exponent(&lambda);
            let from_formal =
                formal.iter().fold(Rational::one(), |acc, (&n, &c)| acc * rational::pow(&u(n).recip(), (-c) as u32));
            assert_eq!(r_lambda(&s, &lambda).unwrap(), from_formal, "{lambda}");
        }
        // the (2,1) slot is e^{-T_2 - T_1}
        assert_eq!(tparam_exponent(&sp(&[2, 1])), BTreeMap::from([(1, -1), (2, -1)]));
    }

    #[test]
    fn symmetric_pochhammer_identity() {
        let alpha = vec![frac(1, 3), frac(-5, 7)];
        let beta = vec![frac(2, 5)];
        let s = RSpec::symmetric_rational(alpha.clone(), beta.clone()).unwrap();
        let half = frac(1, 2);
        for n in 0..=10 {
            let num = alpha.iter().fold(Rational::one(), |acc, a| {
                acc * rational::pochhammer(&(a + &half), n) * rational::pochhammer(&(&half - a), n)
            });
            let den = beta.iter().fold(Rational::one(), |acc, b| {
                acc * rational::pochhammer(&(b + &half), n) * rational::pochhammer(&(&half - b), n)
            });
            assert_eq!(s.partial_product(n).unwrap(), num / den, "n = {n}");
        }
    }

    #[test]
    fn pochhammer_examples() {
        for n in 1..7 {
            assert_eq!(pochhammer_lambda(&int(1), &sp(&[n])), rational::factorial(n));
        }
        let a = frac(2, 7);
        assert_eq!(pochhammer_lambda(&a, &sp(&[2, 1])), &a * &a * (&a + int(1)));
        assert_eq!(pochhammer_lambda(&frac(1, 2), &sp(&[2, 1])), frac(3, 8));
    }

    #[test]
    fn hook_star_examples() {
        for n in 1..8 {
            assert_eq!(hook_star(&sp(&[n])), rational::factorial(n));
        }
        assert_eq!(hook_star(&sp(&[2, 1])), int(6));
        assert_eq!(hook_star(&sp(&[3, 1])), int(12));
        for lambda in enumerate_strict(10) {
            let h = hook_star(&lambda);
            assert!(h.is_integer());
            assert!((rational::factorial(lambda.weight()) / h).is_integer(), "{lambda}");
        }
    }

    #[test]
    fn hook_star_times_tableaux_is_factorial() {
        for lambda in enumerate_strict(8) {
            let count = crate::partition::count_shifted_syt(&lambda).unwrap();
            assert_eq!(hook_star(&lambda) * int(count as i64), rational::factorial(lambda.weight()));
        }
    }

    #[test]
    fn content_products() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        let r = RSpec::table(1, vec![frac(2, 3), int(5), int(7)]);
        assert_eq!(content_product_kp(&RSpec::Ones, &p(&[3, 2, 1])).unwrap(), int(1));
        assert_eq!(content_product_kp(&r, &p(&[1])).unwrap(), r.value(1).unwrap());
        // contents 0, 1 | -1: r(0) r(1) r(-1) = r(1)^2 r(2)
        let expected = r.value(1).unwrap() * r.value(1).unwrap() * r.value(2).unwrap();
        assert_eq!(content_product_kp(&r, &p(&[2, 1])).unwrap(), expected);
    }

    #[test]
    fn rho_orientation() {
        let rho: BTreeMap<i64, Rational> = (-6..=5).map(|k| (k, frac(k * k + 2 * k + 3, k.abs() + 1))).collect();
        let r = r_from_rho(&rho, 6).unwrap();
        assert!(check_reflection(&r, 6));
        for lambda in enumerate_strict(6) {
            assert!(rho_check(&r, &rho, &lambda).unwrap(), "{lambda}");
        }
        let ones: BTreeMap<i64, Rational> = (-6..=5).map(|k| (k, int(1))).collect();
        assert!(rho_check(&RSpec::Ones, &ones, &sp(&[3, 1])).unwrap());
        let d = sp(&[1]).double().unwrap();
        let flipped = rho_content_product(&rho, &d, ContentOrientation::ColumnMinusRow).unwrap();
        assert_ne!(flipped, r_lambda(&r, &sp(&[1])).unwrap());
    }
}
