//! Projective Schur functions `Q_lambda(t/2)` and Schur functions `s_mu` at odd
//! times, their specializations, and the scalar product in which the `Q_lambda`
//! are orthogonal.
//!
//! One-row functions come from the generating function
//! `sum_n q_n z^n = exp(sum_{m odd} t_m z^m)`, which at vanishing even times is
//! also the complete-symmetric generating function `h_n`. Two-row functions use
//! `Q_(a,b) = q_a q_b + 2 sum_{i=1}^b (-1)^i q_{a+i} q_{b-i}` and longer shapes
//! are the Pfaffian of the two-row matrix (odd lengths padded with a zero part).

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gseries::{Monomial, OddSeries};
use crate::partition::{enumerate_strict, Partition, StrictPartition};
use crate::pfaffian::{pfaffian, SkewMatrix};
use crate::rational::{self, frac, int, Rational};

/// `h_0, ..., h_W` at odd times (`h_n = q_n`), each weight-homogeneous.
pub fn h_table(truncation: u32) -> Vec<OddSeries> {
    let w = truncation as usize;
    let mut h = Vec::with_capacity(w + 1);
    h.push(OddSeries::one(truncation));
    // n h_n = sum_{m odd <= n} m t_m h_{n-m}
    for n in 1..=w {
        let mut acc = OddSeries::zero(truncation);
        for m in (1..=n).step_by(2) {
            let tm = OddSeries::var(m as u32, truncation).expect("odd index");
            acc = &acc + &(&tm * &h[n - m]).scale(&int(m as i64));
        }
        h.push(acc.scale(&frac(1, n as i64)));
    }
    h
}

/// One-row function `Q_(n)(t/2) = [z^n] exp(sum t_m z^m)`.
pub fn q_row(n: u32, truncation: u32) -> Result<OddSeries> {
    if n > truncation {
        return Err(Error::WeightOverflow { weight: n, limit: truncation });
    }
    Ok(h_table(truncation).swap_remove(n as usize))
}

/// Caches one-row functions and computed `Q_lambda` for a fixed truncation.
#[derive(Debug, Clone)]
pub struct QTable {
    truncation: u32,
    q: Vec<OddSeries>,
    two_row: HashMap<(u32, u32), OddSeries>,
    shapes: HashMap<StrictPartition, OddSeries>,
}

impl QTable {
    pub fn new(truncation: u32) -> Self {
        Self { truncation, q: h_table(truncation), two_row: HashMap::new(), shapes: HashMap::new() }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// `q_n`, with `q_n = 0` for `n < 0`.
    pub fn q(&self, n: i64) -> OddSeries {
        if n < 0 || n as u32 > self.truncation {
            return OddSeries::zero(self.truncation);
        }
        self.q[n as usize].clone()
    }

    /// `Q_(a,b)` for `a > b >= 0`; `Q_(a,0) = q_a`.
    pub fn two_row(&mut self, a: u32, b: u32) -> OddSeries {
        if let Some(s) = self.two_row.get(&(a, b)) {
            return s.clone();
        }
        let (a_i, b_i) = (a as i64, b as i64);
        let mut acc = &self.q(a_i) * &self.q(b_i);
        for i in 1..=b_i {
            let term = (&self.q(a_i + i) * &self.q(b_i - i)).scale(&int(2 * if i % 2 == 0 { 1 } else { -1 }));
            acc = &acc + &term;
        }
        self.two_row.insert((a, b), acc.clone());
        acc
    }

    pub fn get(&mut self, lambda: &StrictPartition) -> Result<OddSeries> {
        let weight = lambda.weight();
        if weight > self.truncation {
            return Err(Error::WeightOverflow { weight, limit: self.truncation });
        }
        if let Some(s) = self.shapes.get(lambda) {
            return Ok(s.clone());
        }
        let mut parts = lambda.parts().to_vec();
        let value = match parts.len() {
            0 => OddSeries::one(self.truncation),
            1 => self.q(parts[0] as i64),
            _ => {
                if parts.len() % 2 == 1 {
                    parts.push(0);
                }
                let n = parts.len();
                let mut m = SkewMatrix::new(n, OddSeries::zero(self.truncation));
                for i in 0..n {
                    for j in i + 1..n {
                        m.set(i, j, self.two_row(parts[i], parts[j]));
                    }
                }
                pfaffian(&m)?
            }
        };
        self.shapes.insert(lambda.clone(), value.clone());
        Ok(value)
    }
}

/// `Q_lambda(t/2)` as a series truncated at `truncation`.
pub fn q_lambda(lambda: &StrictPartition, truncation: u32) -> Result<OddSeries> {
    QTable::new(truncation).get(lambda)
}

/// `s_mu(t_1, 0, t_3, 0, ...)` by the Jacobi-Trudi determinant `det h_{mu_i - i + j}`.
pub fn schur_s(mu: &Partition, truncation: u32) -> Result<OddSeries> {
    let weight = mu.weight();
    if weight > truncation {
        return Err(Error::WeightOverflow { weight, limit: truncation });
    }
    let h = h_table(truncation);
    Ok(jacobi_trudi(mu, &h, truncation))
}

pub(crate) fn jacobi_trudi(mu: &Partition, h: &[OddSeries], truncation: u32) -> OddSeries {
    let parts = mu.parts();
    let n = parts.len();
    let entry = |i: usize, j: usize| -> Option<&OddSeries> {
        let k = parts[i] as i64 - i as i64 + j as i64;
        (k >= 0 && (k as usize) < h.len()).then(|| &h[k as usize])
    };
    // Laplace expansion of the bottom rows, memoized by the set of used columns:
    // minor[S] = det(rows n-|S|..n, columns S)
    let mut minor: Vec<Option<OddSeries>> = vec![None; 1 << n];
    minor[0] = Some(OddSeries::one(truncation));
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let row = n - mask.count_ones() as usize;
        let mut acc = OddSeries::zero(truncation);
        let mut pos = 0;
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            if let (Some(a), Some(rest)) = (entry(row, col), minor[mask ^ (1 << col)].as_ref()) {
                if !rest.is_zero() {
                    let term = a * rest;
                    acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
                }
            }
            pos += 1;
        }
        minor[mask] = Some(acc);
    }
    minor[(1 << n) - 1].take().expect("full minor computed")
}

/// Points `x_1, ..., x_N`: nonzero with pairwise distinct absolute values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoint {
    values: Vec<Rational>,
}

impl XPoint {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.iter().any(Zero::is_zero) {
            return Err(Error::InvalidPoint("coordinates must be nonzero".into()));
        }
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if values[i] == values[j] || values[i] == -values[j].clone() {
                    return Err(Error::InvalidPoint(format!("|x_{}| = |x_{}| = {}", i + 1, j + 1, values[i])));
                }
            }
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `t_m(x) = (2/m) sum_k x_k^m`.
    pub fn time(&self, m: u32) -> Rational {
        let s = self.values.iter().fold(Rational::zero(), |a, x| a + rational::pow(x, m));
        s * frac(2, m as i64)
    }
}

/// Substitutes `t_m = (2/m) sum_k x_k^m`.
pub fn eval_at_x(a: &OddSeries, x: &XPoint) -> Rational {
    let times: Vec<Rational> =
        (0..=a.truncation()).map(|m| if m % 2 == 1 { x.time(m) } else { Rational::zero() }).collect();
    a.evaluate(|mono| mono.factors().fold(Rational::one(), |acc, (m, e)| acc * rational::pow(&times[m as usize], e)))
}

/// Monomial value at `t_1 = 1`, `t_{m>1} = 0`.
pub fn tinfty_value(mono: &Monomial) -> Rational {
    if mono.factors().all(|(m, _)| m == 1) {
        Rational::one()
    } else {
        Rational::zero()
    }
}

/// Substitutes `t_1 = 1` and every other time zero.
pub fn eval_at_tinfty(a: &OddSeries) -> Rational {
    a.evaluate(tinfty_value)
}

/// `prod_{i<j} (x_i - x_j) / (x_i + x_j)`; one for a single point.
pub fn delta(x: &XPoint) -> Result<Rational> {
    let v = x.values();
    let mut out = Rational::one();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let den = &v[i] + &v[j];
            if den.is_zero() {
                return Err(Error::InvalidPoint(format!("x_{} + x_{} = 0", i + 1, j + 1)));
            }
            out *= (&v[i] - &v[j]) / den;
        }
    }
    Ok(out)
}

/// Norm of a monomial: `<t^a, t^a> = prod (2/m)^{a_m} a_m!`.
fn monomial_norm(mono: &Monomial) -> Rational {
    mono.factors()
        .fold(Rational::one(), |acc, (m, e)| acc * rational::pow(&frac(2, m as i64), e) * rational::factorial(e))
}

/// `<f, g>` realized as `f(t_m -> (2/m) d/dt_m)` applied to `g` at `t = 0`.
///
/// The operator pairing is diagonal in the monomial basis, which is what is
/// evaluated here.
pub fn scalar_product(f: &OddSeries, g: &OddSeries) -> Rational {
    let mut acc = Rational::zero();
    for (mono, c) in f.terms() {
        let d = g.coeff(mono);
        if !d.is_zero() {
            acc += c * d * monomial_norm(mono);
        }
    }
    acc
}

/// Expansion `f = sum c_lambda Q_lambda(t/2)` up to the truncation of `f`, with
/// `c_lambda = 2^{-l(lambda)} <Q_lambda, f>`. Zero coefficients are omitted; the
/// zero partition carries the constant term.
pub fn q_expand(f: &OddSeries) -> BTreeMap<StrictPartition, Rational> {
    let mut table = QTable::new(f.truncation());
    q_expand_with(f, &mut table)
}

pub(crate) fn q_expand_with(f: &OddSeries, table: &mut QTable) -> BTreeMap<StrictPartition, Rational> {
    let mut out = BTreeMap::new();
    let c0 = f.constant_term();
    if !c0.is_zero() {
        out.insert(StrictPartition::zero(), c0);
    }
    for lambda in enumerate_strict(f.truncation()) {
        let q = table.get(&lambda).expect("weight within truncation");
        let c = scalar_product(&q, f) * rational::pow2(-(lambda.len() as i64));
        if !c.is_zero() {
            out.insert(lambda, c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(parts: &[u32]) -> StrictPartition {
        StrictPartition::new(parts.to_vec()).unwrap()
    }

    fn mono(pairs: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(pairs).unwrap()
    }

    fn series(w: u32, terms: &[(&[(u32, u32)], Rational)]) -> OddSeries {
        OddSeries::from_terms(w, terms.iter().map(|(p, c)| (mono(p), c.clone())))
    }

    fn xs(v: &[(i64, i64)]) -> XPoint {
        XPoint::new(v.iter().map(|&(p, q)| frac(p, q)).collect()).unwrap()
    }

    #[test]
    fn one_row() {
        assert_eq!(q_row(0, 5).unwrap(), OddSeries::one(5));
        assert_eq!(q_row(1, 5).unwrap(), series(5, &[(&[(1, 1)], int(1))]));
        assert_eq!(q_row(3, 5).unwrap(), series(5, &[(&[(1, 3)], frac(1, 6)), (&[(3, 1)], int(1))]));
        assert!(q_row(6, 5).is_err());
    }

    #[test]
    fn q_lambda_examples() {
        assert_eq!(q_lambda(&sp(&[1]), 6).unwrap(), series(6, &[(&[(1, 1)], int(1))]));
        assert_eq!(q_lambda(&sp(&[2, 1]), 6).unwrap(), series(6, &[(&[(1, 3)], frac(1, 6)), (&[(3, 1)], int(-2))]));
        assert_eq!(q_lambda(&sp(&[2]), 6).unwrap(), series(6, &[(&[(1, 2)], frac(1, 2))]));
        assert!(matches!(q_lambda(&sp(&[4, 3]), 6), Err(Error::WeightOverflow { .. })));
    }

    #[test]
    fn schur_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(schur_s(&p(&[1]), 4).unwrap(), series(4, &[(&[(1, 1)], int(1))]));
        assert_eq!(schur_s(&p(&[3, 1]), 4).unwrap(), series(4, &[(&[(1, 4)], frac(1, 8))]));
        assert_eq!(schur_s(&p(&[2]), 4).unwrap(), series(4, &[(&[(1, 2)], frac(1, 2))]));
        // the two certifying squares from the worked examples
        let q2 = q_lambda(&sp(&[2]), 8).unwrap();
        assert_eq!((&q2 * &q2).scale(&frac(1, 2)), schur_s(&p(&[3, 1]), 8).unwrap());
        let q21 = q_lambda(&sp(&[2, 1]), 8).unwrap();
        assert_eq!((&q21 * &q21).scale(&frac(1, 4)), schur_s(&p(&[3, 3]), 8).unwrap());
    }

    #[test]
    fn schur_conjugation_invariant_at_odd_times() {
        for mu in crate::partition::enumerate_partitions(7) {
            assert_eq!(schur_s(&mu, 7).unwrap(), schur_s(&mu.conjugate(), 7).unwrap(), "{mu}");
        }
    }

    #[test]
    fn homogeneity() {
        let mut table = QTable::new(10);
        for lambda in enumerate_strict(10) {
            let q = table.get(&lambda).unwrap();
            assert_eq!(q.weights(), vec![lambda.weight()], "{lambda}");
        }
    }

    #[test]
    fn x_specializations() {
        let x = xs(&[(3, 1)]);
        for n in 1..6 {
            assert_eq!(eval_at_x(&q_row(n, 6).unwrap(), &x), int(2) * rational::pow(&int(3), n));
        }
        assert_eq!(eval_at_x(&OddSeries::one(4), &x), int(1));
        assert_eq!(eval_at_x(&q_lambda(&sp(&[2, 1]), 6).unwrap(), &x), int(0));
        let x2 = xs(&[(1, 2), (-2, 3)]);
        let mut table = QTable::new(8);
        for lambda in enumerate_strict(8).into_iter().filter(|l| l.len() > 2) {
            assert_eq!(eval_at_x(&table.get(&lambda).unwrap(), &x2), int(0), "{lambda}");
        }
    }

    #[test]
    fn tinfty() {
        assert_eq!(eval_at_tinfty(&q_lambda(&sp(&[2, 1]), 6).unwrap()), frac(1, 6));
        for n in 0..8 {
            assert_eq!(eval_at_tinfty(&q_row(n, 8).unwrap()), Rational::one() / rational::factorial(n));
        }
        assert_eq!(eval_at_tinfty(&OddSeries::one(3)), int(1));
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&xs(&[(5, 1)])).unwrap(), int(1));
        assert_eq!(delta(&xs(&[(2, 1), (1, 1)])).unwrap(), frac(1, 3));
        assert_eq!(delta(&xs(&[(3, 1), (2, 1), (1, 1)])).unwrap(), frac(1, 30));
        assert!(XPoint::new(vec![int(1), int(-1)]).is_err());
        assert!(XPoint::new(vec![int(0)]).is_err());
    }

    /// Applies `f(t_m -> (2/m) d/dt_m)` to `g` term by term and reads off the
    /// constant term: the defining operator route, independent of the diagonal
    /// shortcut in `scalar_product`.
    fn scalar_product_by_operators(f: &OddSeries, g: &OddSeries) -> Rational {
        let mut acc = Rational::zero();
        for (mono, c) in f.terms() {
            let mut h = g.clone();
            for (m, e) in mono.factors() {
                for _ in 0..e {
                    h = h.partial(m).scale(&frac(2, m as i64));
                }
            }
            acc += c * h.constant_term();
        }
        acc
    }

    #[test]
    fn scalar_product_examples() {
        for n in [1u32, 3, 5] {
            for m in [1u32, 3, 5] {
                let tn = OddSeries::var(n, 6).unwrap();
                let tm = OddSeries::var(m, 6).unwrap();
                let expected = if n == m { frac(2, n as i64) } else { int(0) };
                assert_eq!(scalar_product(&tn, &tm), expected);
            }
        }
        let g = q_lambda(&sp(&[3, 1]), 6).unwrap();
        let g = &g + &OddSeries::constant(frac(7, 3), 6);
        assert_eq!(scalar_product(&OddSeries::one(6), &g), frac(7, 3));
    }

    #[test]
    fn orthogonality_both_routes() {
        let mut table = QTable::new(6);
        let mut shapes = vec![StrictPartition::zero()];
        shapes.extend(enumerate_strict(6));
        for a in &shapes {
            for b in &shapes {
                let qa = table.get(a).unwrap();
                let qb = table.get(b).unwrap();
                let expected = if a == b { rational::pow2(a.len() as i64) } else { int(0) };
                assert_eq!(scalar_product(&qa, &qb), expected, "{a} {b}");
                assert_eq!(scalar_product_by_operators(&qa, &qb), expected, "{a} {b}");
            }
        }
    }

    #[test]
    fn expansions() {
        let q21 = q_lambda(&sp(&[2, 1]), 6).unwrap();
        assert_eq!(q_expand(&q21), BTreeMap::from([(sp(&[2, 1]), int(1))]));
        // t3 = (Q_(3) - Q_(2,1)) / 3
        let t3 = OddSeries::var(3, 3).unwrap();
        assert_eq!(q_expand(&t3), BTreeMap::from([(sp(&[3]), frac(1, 3)), (sp(&[2, 1]), frac(-1, 3))]));
        assert!(q_expand(&OddSeries::zero(5)).is_empty());
    }

    #[test]
    fn expansion_reconstructs() {
        let f = series(7, &[(&[], int(2)), (&[(1, 2), (5, 1)], frac(3, 5)), (&[(3, 2)], int(-1)), (&[(7, 1)], int(4))]);
        let mut table = QTable::new(7);
        let mut back = OddSeries::zero(7);
        for (lambda, c) in q_expand(&f) {
            back = &back + &table.get(&lambda).unwrap().scale(&c);
        }
        assert_eq!(back, f);
    }
}
