//! Orbifold genera of symmetric powers.
//!
//! `dmvv_series` expands the infinite product
//! `∏_{i≥1} ∏_{m,l} (1 - t^i y^l q^m)^{-c(m,l)}` whose t^n coefficient is
//! the orbifold elliptic genus of `(X^n, S_n)`. `orbifold_euler_bruteforce`
//! sums over conjugacy classes of S_n directly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::invariants::euler_sp_series;
use crate::series::{
    inv_one_minus, rat, to_integer, Exponents, Rational, TruncatedSeries, TruncationProfile,
};
use crate::topology::{cycle_types, GradedSpace};

/// Coefficients `c(m, l)` of an elliptic genus `∑ c(m,l) y^l q^m`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EllCoefficients {
    entries: BTreeMap<(u32, i32), i64>,
}

impl EllCoefficients {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fails on a repeated `(m, l)` key.
    pub fn insert(&mut self, m: u32, l: i32, c: i64) -> Result<()> {
        if self.entries.insert((m, l), c).is_some() {
            return Err(Error::Usage(format!(
                "duplicate coefficient for (m, l) = ({m}, {l})"
            )));
        }
        Ok(())
    }

    /// Single entry `c(0, 0) = c`: the Euler-characteristic specialization.
    pub fn constant(c: i64) -> Self {
        let mut e = Self::new();
        e.entries.insert((0, 0), c);
        e
    }

    /// `((m, l), c)` in ascending (m, l) order.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, i32), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest `|l|` with a nonzero coefficient.
    fn max_abs_l(&self) -> (i32, i32) {
        let live = self.entries.iter().filter(|(_, &c)| c != 0);
        let lo = live.clone().map(|(&(_, l), _)| l).min().unwrap_or(0).min(0);
        let hi = live.map(|(&(_, l), _)| l).max().unwrap_or(0).max(0);
        (lo, hi)
    }
}

/// Text format: one `m l c` triple per line, `#` comments, blank lines
/// ignored, duplicate `(m, l)` rejected.
impl FromStr for EllCoefficients {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut out = EllCoefficients::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `m l c`, found {} fields", fields.len()),
                });
            }
            let parse_err = |what: &str, tok: &str| Error::Parse {
                line,
                message: format!("invalid {what} `{tok}`"),
            };
            let m: u32 = fields[0].parse().map_err(|_| parse_err("m", fields[0]))?;
            let l: i32 = fields[1].parse().map_err(|_| parse_err("l", fields[1]))?;
            let c: i64 = fields[2].parse().map_err(|_| parse_err("c", fields[2]))?;
            out.insert(m, l, c).map_err(|_| Error::Parse {
                line,
                message: format!("duplicate key (m, l) = ({m}, {l})"),
            })?;
        }
        Ok(out)
    }
}

impl fmt::Display for EllCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((m, l), c) in self.iter() {
            writeln!(f, "{m} {l} {c}")?;
        }
        Ok(())
    }
}

/// Strict profile wide enough that no y exponent of the truncated product
/// is ever dropped: each factor carries `t^i` with i ≥ 1, so a term of
/// t-degree ≤ T has y-degree within `T · [min l, max l]`.
fn exact_profile(
    coeffs: &EllCoefficients,
    t_order: u32,
    q_order: u32,
    y_window: (i32, i32),
) -> Result<TruncationProfile> {
    let (lo, hi) = coeffs.max_abs_l();
    let t = t_order as i32;
    TruncationProfile::new(
        q_order,
        t_order,
        0,
        (lo * t).min(y_window.0),
        (hi * t).max(y_window.1),
    )
}

fn dmvv_exact(coeffs: &EllCoefficients, profile: TruncationProfile) -> Result<TruncatedSeries> {
    let one = TruncatedSeries::one(profile);
    let mut result = one.clone();
    for i in 1..=profile.t_order() {
        for ((m, l), c) in coeffs.iter() {
            if c == 0 {
                continue;
            }
            let mono = TruncatedSeries::monomial(profile, rat(1), Exponents::new(m, i, l, 0))?;
            let factor = if c > 0 {
                inv_one_minus(&mono)?.pow_u32(c as u32)?
            } else {
                one.sub(&mono)?.pow_u32(c.unsigned_abs() as u32)?
            };
            result = result.mul(&factor)?;
        }
    }
    Ok(result)
}

/// `∑_{n≥0} Ell(X^n, S_n) t^n = ∏_{i≥1} ∏_{l,m} (1 - t^i y^l q^m)^{-c(m,l)}`
/// truncated at `t^{t_order}`, `q^{q_order}` and the y-window, which is
/// truncating in the result.
///
/// Factors with `i > t_order` contribute only above the t-order and are
/// omitted. Factors are multiplied for increasing i, then increasing
/// `(m, l)`. The product is formed in a window wide enough to be exact and
/// narrowed at the end.
pub fn dmvv_series(
    coeffs: &EllCoefficients,
    t_order: u32,
    q_order: u32,
    y_window: (i32, i32),
) -> Result<TruncatedSeries> {
    TruncationProfile::new(q_order, t_order, 0, y_window.0, y_window.1)?;
    let profile = exact_profile(coeffs, t_order, q_order, y_window)?;
    dmvv_exact(coeffs, profile)?.restrict_y(y_window.0, y_window.1)
}

/// Checks `log(dmvv_series) = ∑_i ∑_{m,l} c(m,l) ∑_{j≥1} (t^i y^l q^m)^j / j`
/// at the given truncation.
pub fn dmvv_log_check(
    coeffs: &EllCoefficients,
    t_order: u32,
    q_order: u32,
    y_window: (i32, i32),
) -> Result<bool> {
    TruncationProfile::new(q_order, t_order, 0, y_window.0, y_window.1)?;
    let profile = exact_profile(coeffs, t_order, q_order, y_window)?;
    let product = dmvv_exact(coeffs, profile)?;
    let log = product
        .sub(&TruncatedSeries::one(profile))?
        .log_one_plus()?;

    let mut explicit = TruncatedSeries::zero(profile);
    for i in 1..=t_order {
        for ((m, l), c) in coeffs.iter() {
            if c == 0 {
                continue;
            }
            for j in 1..=t_order / i {
                let e = Exponents::new(m * j, i * j, l * j as i32, 0);
                let term =
                    TruncatedSeries::monomial(profile, Rational::new(c.into(), j.into()), e)?;
                explicit = explicit.add(&term)?;
            }
        }
    }
    Ok(log == explicit
        && log.restrict_y(y_window.0, y_window.1)?
            == explicit.restrict_y(y_window.0, y_window.1)?)
}

/// Orbifold Euler characteristic `χ(X^n, S_n) = ∑_{[σ]} χ((X^n)^σ / C(σ))`.
///
/// The fixed set of σ is a multi-diagonal copy of `X^{c(σ)}`. Rotations
/// within a cycle fix it pointwise, so the centralizer acts through
/// `∏_r S_{α_r}` and the quotient is `∏_r SP^{α_r}(X)`.
pub fn orbifold_euler_bruteforce(space: &GradedSpace, n: u32) -> Result<BigInt> {
    let euler = euler_sp_series(space, n)?;
    let chi_sp = |a: usize| to_integer(&euler.coefficient(&Exponents::q(a as u32)));
    let mut total = BigInt::from(0);
    for class in cycle_types(n as usize) {
        let mut term = BigInt::from(1);
        for (_, a) in class.multiplicities() {
            term *= chi_sp(a)?;
        }
        total += term;
    }
    Ok(total)
}
