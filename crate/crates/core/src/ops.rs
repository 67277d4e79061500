//! The operator `r(D)`, `D = x d/dx`, on series in one variable `x` whose
//! coefficients are series in `t*`, and the one-point linear equation for the
//! BKP tau function.

use crate::error::{Error, Result};
use crate::gseries::OddSeries;
use crate::qschur::h_table;
use crate::report::TauReport;
use crate::rspec::RSpec;
use crate::tau::series_difference;

/// `sum_{n <= order} c_n x^n` with every `c_n` an [`OddSeries`] in `t*`.
#[derive(Debug, Clone, PartialEq)]
pub struct XSeries {
    truncation: u32,
    coeffs: Vec<OddSeries>,
}

impl XSeries {
    pub fn zero(order: u32, truncation: u32) -> Self {
        Self { truncation, coeffs: vec![OddSeries::zero(truncation); order as usize + 1] }
    }

    pub fn from_coeffs(coeffs: Vec<OddSeries>) -> Result<Self> {
        let truncation = coeffs.first().map(OddSeries::truncation).unwrap_or(0);
        if let Some(c) = coeffs.iter().find(|c| c.truncation() != truncation) {
            return Err(Error::TruncationMismatch(truncation, c.truncation()));
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidSpec("empty x-series".into()));
        }
        Ok(Self { truncation, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn coeff(&self, n: u32) -> &OddSeries {
        &self.coeffs[n as usize]
    }

    pub fn coeffs(&self) -> &[OddSeries] {
        &self.coeffs
    }

    /// Multiplication by `x`; the top coefficient falls off.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(OddSeries::zero(self.truncation));
        coeffs.extend(self.coeffs[..self.coeffs.len() - 1].iter().cloned());
        Self { truncation: self.truncation, coeffs }
    }

    /// Coefficientwise `d/dt*_m`.
    pub fn partial(&self, m: u32) -> Self {
        Self { truncation: self.truncation, coeffs: self.coeffs.iter().map(|c| c.partial(m)).collect() }
    }

    pub fn truncate(&self, truncation: u32) -> Self {
        Self { truncation, coeffs: self.coeffs.iter().map(|c| c.truncate(truncation)).collect() }
    }

    /// First `(n, t*-monomial)` where two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(String, crate::Rational, crate::Rational)> {
        self.coeffs.iter().zip(&other.coeffs).enumerate().find_map(|(n, (a, b))| {
            series_difference(a, b, "t*").map(|(m, x, y)| {
                let at = if m == "1" { format!("x^{n}") } else { format!("x^{n}*{m}") };
                (at, x, y)
            })
        })
    }
}

/// `r(D) x^n = r(n) x^n`, or `r(-n) x^n` when `negate` is set.
pub fn apply_rd(f: &XSeries, spec: &RSpec, negate: bool) -> Result<XSeries> {
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if c.is_zero() {
                return Ok(c.clone());
            }
            let n = n as i64;
            let r = spec.value(if negate { -n } else { n })?;
            Ok(c.scale(&r))
        })
        .collect::<Result<_>>()?;
    Ok(XSeries { truncation: f.truncation, coeffs })
}

/// `(x r(-D))^m f` by repeated application.
pub fn x_r_minus_d_pow(f: &XSeries, spec: &RSpec, m: u32) -> Result<XSeries> {
    let mut out = f.clone();
    for _ in 0..m {
        out = apply_rd(&out, spec, true)?.shift();
    }
    Ok(out)
}

/// `tau(t(x), t*)` at one point: `sum_n r(1)...r(n) h_n(t*) x^n`.
pub fn tau_x_series(spec: &RSpec, order: u32, truncation: u32) -> Result<XSeries> {
    let h = h_table(truncation);
    let coeffs = (0..=order)
        .map(|n| {
            if n > truncation {
                return Ok(OddSeries::zero(truncation));
            }
            let r = spec.partial_product(n)?;
            Ok(h[n as usize].scale(&r))
        })
        .collect::<Result<_>>()?;
    Ok(XSeries { truncation, coeffs })
}

/// `(d/dt*_m - (x r(-D))^m) tau(t(x), t*) = 0` through `x^order` and
/// `t*`-weight `truncation`.
pub fn check_linear_eq_n1(spec: &RSpec, m: u32, order: u32, truncation: u32) -> Result<TauReport> {
    if m.is_multiple_of(2) {
        return Err(Error::EvenIndex(m));
    }
    if m > truncation {
        return Err(Error::InvalidSpec(format!("m = {m} exceeds weight {truncation}")));
    }
    // d/dt*_m lowers weight by m, so build with m extra
    let tau = tau_x_series(spec, order, truncation + m)?;
    let lhs = tau.partial(m).truncate(truncation);
    let rhs = x_r_minus_d_pow(&tau, spec, m)?.truncate(truncation);
    Ok(TauReport::new("linear-equation")
        .param("r", spec.to_string())
        .param("m", m)
        .param("order", order)
        .param("weight", truncation)
        .with(lhs.first_difference(&rhs)))
}
