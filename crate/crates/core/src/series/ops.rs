//! Ring operations and the exp/log/pow family.
//!
//! exp and log are evaluated as finite power sums. Every term of their
//! argument must have positive q/t/u weight so that the sums terminate
//! under truncation. Fractional and formal exponents go through
//! `exp(e · log(base))`; there is no separate binomial path.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{rat, Exponents, Rational, TruncatedSeries, TruncationProfile};
use crate::error::{Error, Result};

fn check_profiles(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<()> {
    if a.profile != b.profile {
        return Err(Error::ProfileMismatch(a.profile, b.profile));
    }
    Ok(())
}

#[allow(clippy::should_implement_trait)]
impl TruncatedSeries {
    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        check_profiles(self, other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(*e, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> TruncatedSeries {
        if c.is_zero() {
            return TruncatedSeries::zero(self.profile);
        }
        TruncatedSeries {
            profile: self.profile,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Convolution product truncated to the common profile.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        check_profiles(self, other)?;
        let profile = self.profile;
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        let rhs: Vec<_> = other.terms.iter().collect();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs {
                let e = ea.plus(eb);
                if !profile.admits_qtu(&e) {
                    continue;
                }
                *acc.entry(e).or_insert_with(Rational::zero) += ca * *cb;
            }
        }
        let mut out = TruncatedSeries::zero(profile);
        for (e, c) in acc {
            out.accumulate(e, c)?;
        }
        Ok(out)
    }

    /// `self^n` for `n >= 0` by repeated squaring.
    pub fn pow_u32(&self, mut n: u32) -> Result<TruncatedSeries> {
        let mut result = TruncatedSeries::one(self.profile);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    fn require_nilpotent(&self) -> Result<()> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if self.terms.keys().any(|e| e.weight() == 0) {
            return Err(Error::NotNilpotent);
        }
        Ok(())
    }

    /// `∑_{k≥0} s^k / k!` for `s` without constant term.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        self.require_nilpotent()?;
        let mut result = TruncatedSeries::one(self.profile);
        let mut term = TruncatedSeries::one(self.profile);
        let mut k = 1i64;
        loop {
            term = term.mul(self)?.scale(&Rational::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            result = result.add(&term)?;
            k += 1;
        }
        Ok(result)
    }

    /// `log(1 + s) = ∑_{k≥1} (-1)^{k+1} s^k / k` for `s` without constant term.
    pub fn log_one_plus(&self) -> Result<TruncatedSeries> {
        self.require_nilpotent()?;
        let mut result = TruncatedSeries::zero(self.profile);
        let mut power = TruncatedSeries::one(self.profile);
        let mut k = 1i64;
        loop {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = result.add(&power.scale(&Rational::new(sign.into(), k.into())))?;
            k += 1;
        }
        Ok(result)
    }

    /// `base^exponent = exp(exponent · log(base))`.
    ///
    /// `base` must have constant term 1; `exponent` must not involve q or t
    /// (a rational constant or a polynomial in y and u).
    pub fn pow(&self, exponent: &TruncatedSeries) -> Result<TruncatedSeries> {
        check_profiles(self, exponent)?;
        if !self.constant_term().is_one() {
            return Err(Error::BaseConstantNotOne);
        }
        if exponent.terms.keys().any(|e| e.q != 0 || e.t != 0) {
            return Err(Error::ExponentNotConstant);
        }
        let one = TruncatedSeries::one(self.profile);
        let log = self.sub(&one)?.log_one_plus()?;
        exponent.mul(&log)?.exp()
    }

    /// [`Self::pow`] with an integer exponent.
    pub fn pow_int(&self, exponent: i64) -> Result<TruncatedSeries> {
        self.pow(&TruncatedSeries::constant(self.profile, rat(exponent)))
    }
}

/// `1 + m + m^2 + …` truncated, for a monomial `m` with positive q, t or u
/// exponent. The zero series counts as the zero monomial.
pub fn inv_one_minus(m: &TruncatedSeries) -> Result<TruncatedSeries> {
    if m.len() > 1 {
        return Err(Error::NotMonomial(m.len()));
    }
    if let Some((e, _)) = m.terms().next() {
        if e.weight() == 0 {
            return Err(Error::NonInvertibleMonomial);
        }
    }
    let profile: TruncationProfile = *m.profile();
    let mut result = TruncatedSeries::one(profile);
    let mut power = TruncatedSeries::one(profile);
    loop {
        power = power.mul(m)?;
        if power.is_zero() {
            return Ok(result);
        }
        result = result.add(&power)?;
    }
}
