//! BKP and KP hypergeometric tau functions as truncated series, and the identity
//! checks relating them.
//!
//! The BKP series is
//! `tau_r(t, t*) = 1 + sum_{lambda strict} 2^{-l(lambda)} r_lambda Q_lambda(t/2) Q_lambda(t*/2)`,
//! and its KP partner is `1 + sum_mu r^KP_mu s_mu(t) s_mu(t*)` with the content
//! product `r^KP_mu`. Both are truncated per alphabet.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gseries::{first_bi_difference, first_difference, BiSeries, Monomial, OddSeries};
use crate::partition::{enumerate_partitions, enumerate_strict, StrictPartition};
use crate::qschur::{h_table, jacobi_trudi, q_expand_with, tinfty_value, QTable};
use crate::rational::{self, frac, Rational};
use crate::report::TauReport;
use crate::rspec::{check_reflection, content_product_kp, hook_star, pochhammer_lambda, r_lambda, RSpec};

/// Range over which reflection is required before a spec enters a BKP identity.
const REFLECTION_RANGE: i64 = 20;

fn require_reflection(spec: &RSpec) -> Result<()> {
    if check_reflection(spec, REFLECTION_RANGE) {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("{spec} violates r(n) = r(1-n)")))
    }
}

/// Renders a term `t^a t*^b` of a bi-graded series.
pub fn render_pair(m: &Monomial, m_star: &Monomial) -> String {
    match (m.is_one(), m_star.is_one()) {
        (true, true) => "1".into(),
        (false, true) => m.render("t"),
        (true, false) => m_star.render("t*"),
        (false, false) => format!("{}*{}", m.render("t"), m_star.render("t*")),
    }
}

pub(crate) fn bi_difference(a: &BiSeries, b: &BiSeries) -> Option<(String, Rational, Rational)> {
    first_bi_difference(a, b).map(|((m, ms), x, y)| (render_pair(&m, &ms), x, y))
}

pub(crate) fn series_difference(a: &OddSeries, b: &OddSeries, name: &str) -> Option<(String, Rational, Rational)> {
    first_difference(a, b).map(|(m, x, y)| (m.render(name), x, y))
}

/// The BKP hypergeometric tau function truncated at `truncation` in `t` and
/// `truncation_star` in `t*`. Terms with `r_lambda = 0` are skipped.
pub fn tau_bkp(spec: &RSpec, truncation: u32, truncation_star: u32) -> Result<BiSeries> {
    require_reflection(spec)?;
    let mut table = QTable::new(truncation.max(truncation_star));
    let mut out = BiSeries::one(truncation, truncation_star);
    for lambda in enumerate_strict(truncation.min(truncation_star)) {
        let r = r_lambda(spec, &lambda)?;
        if r.is_zero() {
            continue;
        }
        let q = table.get(&lambda)?;
        let coeff = r * rational::pow2(-(lambda.len() as i64));
        out.add_outer(&q.truncate(truncation), &q.truncate(truncation_star), &coeff);
    }
    Ok(out)
}

/// The KP hypergeometric tau function at vanishing even times.
pub fn tau_kp(spec: &RSpec, truncation: u32, truncation_star: u32) -> Result<BiSeries> {
    require_reflection(spec)?;
    let top = truncation.max(truncation_star);
    let h = h_table(top);
    let mut out = BiSeries::one(truncation, truncation_star);
    for mu in enumerate_partitions(truncation.min(truncation_star)) {
        let c = content_product_kp(spec, &mu)?;
        if c.is_zero() {
            continue;
        }
        let s = jacobi_trudi(&mu, &h, top);
        out.add_outer(&s.truncate(truncation), &s.truncate(truncation_star), &c);
    }
    Ok(out)
}

/// `tau_bkp^2 = tau_kp` through weight `weight` in each alphabet.
pub fn check_square(spec: &RSpec, weight: u32) -> Result<TauReport> {
    let bkp = tau_bkp(spec, weight, weight)?;
    let kp = tau_kp(spec, weight, weight)?;
    Ok(TauReport::new("square")
        .param("r", spec.to_string())
        .param("weight", weight)
        .with(bi_difference(&(&bkp * &bkp), &kp)))
}

/// `exp(sum_{n odd} (n/2) t_n t*_n)` truncated per alphabet.
pub fn vacuum_kernel(truncation: u32, truncation_star: u32) -> BiSeries {
    let mut exponent = BiSeries::zero(truncation, truncation_star);
    for n in (1..=truncation.min(truncation_star)).step_by(2) {
        let m = Monomial::var(n).expect("odd index");
        exponent.add_term(m.clone(), m, frac(n as i64, 2));
    }
    exponent.exp().expect("zero constant term")
}

/// `sum_{lambda strict} 2^{-l} Q_lambda(t/2) Q_lambda(t*/2) = exp(sum (n/2) t_n t*_n)`.
pub fn check_cauchy(weight: u32) -> TauReport {
    let series = tau_bkp(&RSpec::Ones, weight, weight).expect("r = 1 is reflection-symmetric");
    TauReport::new("cauchy").param("weight", weight).with(bi_difference(&series, &vacuum_kernel(weight, weight)))
}

/// Alphabet swap and the scaling `t_m -> a^m t_m`, `t*_m -> a^{-m} t*_m` both fix
/// `tau_bkp`.
pub fn check_symmetry_scaling(spec: &RSpec, a: &Rational, weight: u32) -> Result<TauReport> {
    if a.is_zero() {
        return Err(Error::InvalidSpec("scaling parameter must be nonzero".into()));
    }
    let tau = tau_bkp(spec, weight, weight)?;
    let mut report =
        TauReport::new("symmetry").param("r", spec.to_string()).param("a", a.to_string()).param("weight", weight);
    report.record(bi_difference(&tau.swap(), &tau));
    report.record(bi_difference(&tau.substitute_scaled(a, &a.recip()), &tau));
    Ok(report)
}

/// `tau_bkp(t, t_infty)` as a series in `t`.
pub fn tau_at_tinfty(spec: &RSpec, weight: u32) -> Result<OddSeries> {
    Ok(tau_bkp(spec, weight, weight)?.specialize_second(tinfty_value))
}

/// `1 + sum 2^{-l} Q_lambda(t/2) / H*_lambda * prod (a_k)_lambda / prod (b_k)_lambda`.
pub fn tau_hyper_tinfty(a: &[Rational], b: &[Rational], weight: u32) -> Result<OddSeries> {
    RSpec::rational_ps(a.to_vec(), b.to_vec())?;
    let mut table = QTable::new(weight);
    let mut out = OddSeries::one(weight);
    for lambda in enumerate_strict(weight) {
        let num = a.iter().fold(Rational::one(), |acc, a| acc * pochhammer_lambda(a, &lambda));
        if num.is_zero() {
            continue;
        }
        let den = b.iter().fold(Rational::one(), |acc, b| acc * pochhammer_lambda(b, &lambda));
        let c = num / den / hook_star(&lambda) * rational::pow2(-(lambda.len() as i64));
        out = &out + &table.get(&lambda)?.scale(&c);
    }
    Ok(out)
}

/// Same reduction for the reflection-symmetric weight: Pochhammer symbols at
/// `1/2 +- alpha_k` over `1/2 +- beta_k`.
pub fn tau_symmetric_hyper(alpha: &[Rational], beta: &[Rational], weight: u32) -> Result<OddSeries> {
    RSpec::symmetric_rational(alpha.to_vec(), beta.to_vec())?;
    let half = frac(1, 2);
    let pair = |p: &Rational, lambda: &StrictPartition| {
        pochhammer_lambda(&(&half + p), lambda) * pochhammer_lambda(&(&half - p), lambda)
    };
    let mut table = QTable::new(weight);
    let mut out = OddSeries::one(weight);
    for lambda in enumerate_strict(weight) {
        let num = alpha.iter().fold(Rational::one(), |acc, a| acc * pair(a, &lambda));
        if num.is_zero() {
            continue;
        }
        let den = beta.iter().fold(Rational::one(), |acc, b| acc * pair(b, &lambda));
        let c = num / den / hook_star(&lambda) * rational::pow2(-(lambda.len() as i64));
        out = &out + &table.get(&lambda)?.scale(&c);
    }
    Ok(out)
}

/// Coefficients `c_0..c_order` of `pFs(a; b; x) = sum prod (a_k)_n / prod (b_k)_n x^n / n!`.
pub fn hyper_one_var(a: &[Rational], b: &[Rational], order: u32) -> Result<Vec<Rational>> {
    RSpec::rational_ps(a.to_vec(), b.to_vec())?;
    Ok((0..=order)
        .map(|n| {
            let num = a.iter().fold(Rational::one(), |acc, a| acc * rational::pochhammer(a, n));
            let den = b.iter().fold(Rational::one(), |acc, b| acc * rational::pochhammer(b, n));
            num / den / rational::factorial(n)
        })
        .collect())
}

/// Polynomial in a single symbolic `x` obtained from `t_m = 2 x^m / m`:
/// entry `w` is the coefficient of `x^w`.
pub fn single_x_polynomial(a: &OddSeries) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.truncation() as usize + 1];
    for (m, c) in a.terms() {
        out[m.weight() as usize] += c * m.evaluate(|k| frac(2, k as i64));
    }
    out
}

/// The one-variable hypergeometric series against `tau_bkp` at `t = t(x)`,
/// `t* = t_infty`.
pub fn check_one_var(a: &[Rational], b: &[Rational], order: u32) -> Result<TauReport> {
    let direct = hyper_one_var(a, b, order)?;
    let spec = RSpec::rational_ps(a.to_vec(), b.to_vec())?;
    let via_tau = single_x_polynomial(&tau_at_tinfty(&spec, order)?);
    let mut report = TauReport::new("one-variable").param("r", spec.to_string()).param("order", order);
    let diff = (0..=order as usize).find(|&n| direct[n] != via_tau[n]);
    report.record(diff.map(|n| (format!("x^{n}"), via_tau[n].clone(), direct[n].clone())));
    Ok(report)
}

/// The closed hypergeometric forms at `t* = t_infty` against `tau_bkp`.
pub fn check_tinfty_reduction(spec: &RSpec, weight: u32) -> Result<TauReport> {
    let closed = match spec {
        RSpec::RationalPS { a, b } => tau_hyper_tinfty(a, b, weight)?,
        RSpec::SymmetricRational { alpha, beta } => tau_symmetric_hyper(alpha, beta, weight)?,
        other => {
            return Err(Error::InvalidSpec(format!("{other} has no closed hypergeometric form")));
        }
    };
    Ok(TauReport::new("tinfty-reduction").param("r", spec.to_string()).param("weight", weight).with(series_difference(
        &tau_at_tinfty(spec, weight)?,
        &closed,
        "t",
    )))
}

/// Deformed scalar product `<f, g>_r = sum_lambda c_lambda(f) c_lambda(g) 2^{l} r_lambda`
/// over the `Q`-expansions of `f` and `g`.
pub fn scalar_product_r(f: &OddSeries, g: &OddSeries, spec: &RSpec) -> Result<Rational> {
    require_reflection(spec)?;
    let mut table = QTable::new(f.truncation().max(g.truncation()));
    scalar_product_r_with(f, g, spec, &mut table)
}

fn scalar_product_r_with(f: &OddSeries, g: &OddSeries, spec: &RSpec, table: &mut QTable) -> Result<Rational> {
    let cf = q_expand_with(f, table);
    let cg = q_expand_with(g, table);
    let mut acc = Rational::zero();
    for (lambda, a) in &cf {
        if let Some(b) = cg.get(lambda) {
            acc += a * b * rational::pow2(lambda.len() as i64) * r_lambda(spec, lambda)?;
        }
    }
    Ok(acc)
}

/// Coefficient of `t^a` in `exp(sum (m/2) t_m gamma_m)`, as a series in `gamma`:
/// `prod (m gamma_m / 2)^{a_m} / a_m!`.
fn generating_slice(a: &Monomial, truncation: u32) -> OddSeries {
    let c = a
        .factors()
        .fold(Rational::one(), |acc, (m, e)| acc * rational::pow(&frac(m as i64, 2), e) / rational::factorial(e));
    OddSeries::monomial(a.clone(), c, truncation)
}

/// Every monomial of weight `<= weight`.
pub fn monomials_up_to(weight: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for m in (1..=weight).step_by(2) {
        let mut next = Vec::new();
        for base in &out {
            let mut e = 0;
            while base.weight() + m * e <= weight {
                let mut pairs: Vec<(u32, u32)> = base.factors().collect();
                pairs.push((m, e));
                next.push(Monomial::from_pairs(&pairs).expect("odd index"));
                e += 1;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// `tau_r(t, t*) = <exp(sum (m/2) t_m gamma_m), exp(sum (m/2) t*_m gamma_m)>_r`,
/// compared coefficient by coefficient in the parameters `t, t*`.
pub fn check_scalar_tau(spec: &RSpec, weight: u32) -> Result<TauReport> {
    let tau = tau_bkp(spec, weight, weight)?;
    let mut table = QTable::new(weight);
    let monos = monomials_up_to(weight);
    let slices: BTreeMap<&Monomial, OddSeries> = monos.iter().map(|m| (m, generating_slice(m, weight))).collect();
    let mut via_product = BiSeries::zero(weight, weight);
    for a in &monos {
        for b in &monos {
            let v = scalar_product_r_with(&slices[a], &slices[b], spec, &mut table)?;
            via_product.add_term(a.clone(), b.clone(), v);
        }
    }
    Ok(TauReport::new("scalar-product")
        .param("r", spec.to_string())
        .param("weight", weight)
        .with(bi_difference(&via_product, &tau)))
}
