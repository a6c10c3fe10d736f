//! Truncated formal power series in the fixed alphabet {q, t, y, u}.
//!
//! A series is a sparse map from exponent tuples to exact rationals. The
//! exponents of q, t and u are non-negative and bounded above by the
//! profile; y is a Laurent direction confined to a window `[y_min, y_max]`.
//!
//! Invariants:
//! - no stored coefficient is zero
//! - every stored exponent tuple lies inside the profile
//!
//! Binary operations require equal profiles. Truncation in q, t and u is
//! exact because those gradings are non-negative. Truncation in y is only
//! exact when nothing can leave the window, so a profile declares its
//! window either strict (escape is an error) or truncating (escaping
//! terms are dropped).

mod ops;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use ops::inv_one_minus;

/// Exact rational scalar.
pub type Rational = BigRational;

/// Builds the rational `n / 1`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The four formal variables.
///
/// `q` counts symmetric powers, `t` is the homological degree or genus
/// expansion variable, `y` is the χ_y parameter and `u` stands for ε^{1/4}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    Y,
    U,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::T, Var::Y, Var::U];

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::Y => "y",
            Var::U => "u",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What happens when a product exponent of y leaves the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YWindowMode {
    Strict,
    Truncating,
}

/// Per-variable truncation bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationProfile {
    q: u32,
    t: u32,
    u: u32,
    y_min: i32,
    y_max: i32,
    y_mode: YWindowMode,
}

impl Default for TruncationProfile {
    fn default() -> Self {
        TruncationProfile {
            q: 8,
            t: 8,
            u: 4,
            y_min: -8,
            y_max: 8,
            y_mode: YWindowMode::Strict,
        }
    }
}

impl TruncationProfile {
    /// A profile with a strict y-window.
    pub fn new(q: u32, t: u32, u: u32, y_min: i32, y_max: i32) -> Result<Self> {
        if y_min > 0 || y_max < 0 {
            return Err(Error::InvalidYWindow { y_min, y_max });
        }
        Ok(TruncationProfile {
            q,
            t,
            u,
            y_min,
            y_max,
            y_mode: YWindowMode::Strict,
        })
    }

    /// Only q and t retained; no y or u.
    pub fn qt(q: u32, t: u32) -> Self {
        TruncationProfile {
            q,
            t,
            u: 0,
            y_min: 0,
            y_max: 0,
            y_mode: YWindowMode::Strict,
        }
    }

    pub fn with_y_mode(mut self, mode: YWindowMode) -> Self {
        self.y_mode = mode;
        self
    }

    pub fn q_order(&self) -> u32 {
        self.q
    }

    pub fn t_order(&self) -> u32 {
        self.t
    }

    pub fn u_order(&self) -> u32 {
        self.u
    }

    pub fn y_window(&self) -> (i32, i32) {
        (self.y_min, self.y_max)
    }

    pub fn y_mode(&self) -> YWindowMode {
        self.y_mode
    }

    /// Upper bound for a non-negative variable.
    fn order(&self, var: Var) -> u32 {
        match var {
            Var::Q => self.q,
            Var::T => self.t,
            Var::U => self.u,
            Var::Y => unreachable!("y has a window, not an order"),
        }
    }

    fn set_order(&mut self, var: Var, order: u32) {
        match var {
            Var::Q => self.q = order,
            Var::T => self.t = order,
            Var::U => self.u = order,
            Var::Y => unreachable!("y has a window, not an order"),
        }
    }

    /// True when q, t and u are all within bounds. Says nothing about y.
    fn admits_qtu(&self, e: &Exponents) -> bool {
        e.q <= self.q && e.t <= self.t && e.u <= self.u
    }

    fn admits_y(&self, y: i32) -> bool {
        self.y_min <= y && y <= self.y_max
    }

    pub fn contains(&self, e: &Exponents) -> bool {
        self.admits_qtu(e) && self.admits_y(e.y)
    }
}

impl fmt::Display for TruncationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q<={}, t<={}, u<={}, y in [{}, {}] ({})",
            self.q,
            self.t,
            self.u,
            self.y_min,
            self.y_max,
            match self.y_mode {
                YWindowMode::Strict => "strict",
                YWindowMode::Truncating => "truncating",
            }
        )
    }
}

/// Exponent tuple of a monomial `q^q t^t y^y u^u`.
///
/// The derived ordering is lexicographic in (q, t, y, u), which is also
/// the print order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents {
    pub q: u32,
    pub t: u32,
    pub y: i32,
    pub u: u32,
}

impl Exponents {
    pub const ZERO: Exponents = Exponents {
        q: 0,
        t: 0,
        y: 0,
        u: 0,
    };

    pub fn new(q: u32, t: u32, y: i32, u: u32) -> Self {
        Exponents { q, t, y, u }
    }

    pub fn q(q: u32) -> Self {
        Exponents { q, ..Self::ZERO }
    }

    pub fn t(t: u32) -> Self {
        Exponents { t, ..Self::ZERO }
    }

    pub fn y(y: i32) -> Self {
        Exponents { y, ..Self::ZERO }
    }

    pub fn u(u: u32) -> Self {
        Exponents { u, ..Self::ZERO }
    }

    pub fn get(&self, var: Var) -> i64 {
        match var {
            Var::Q => self.q as i64,
            Var::T => self.t as i64,
            Var::Y => self.y as i64,
            Var::U => self.u as i64,
        }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// Sum of the q, t and u exponents. Terms with positive weight are
    /// nilpotent under any finite profile.
    pub fn weight(&self) -> u32 {
        self.q + self.t + self.u
    }

    fn plus(&self, other: &Exponents) -> Exponents {
        Exponents {
            q: self.q + other.q,
            t: self.t + other.t,
            y: self.y + other.y,
            u: self.u + other.u,
        }
    }
}

/// A partial exponent assignment used by [`TruncatedSeries::coeff`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Selector {
    pub q: Option<u32>,
    pub t: Option<u32>,
    pub y: Option<i32>,
    pub u: Option<u32>,
}

impl Selector {
    pub fn q(n: u32) -> Self {
        Selector {
            q: Some(n),
            ..Default::default()
        }
    }

    pub fn t(n: u32) -> Self {
        Selector {
            t: Some(n),
            ..Default::default()
        }
    }

    pub fn and_t(mut self, n: u32) -> Self {
        self.t = Some(n);
        self
    }

    pub fn and_y(mut self, n: i32) -> Self {
        self.y = Some(n);
        self
    }

    pub fn and_u(mut self, n: u32) -> Self {
        self.u = Some(n);
        self
    }
}

/// A truncated multivariate formal power series over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    profile: TruncationProfile,
    terms: BTreeMap<Exponents, Rational>,
}

impl TruncatedSeries {
    pub fn zero(profile: TruncationProfile) -> Self {
        TruncatedSeries {
            profile,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(profile: TruncationProfile) -> Self {
        Self::constant(profile, Rational::one())
    }

    pub fn constant(profile: TruncationProfile, c: Rational) -> Self {
        Self::monomial(profile, c, Exponents::ZERO)
            .expect("the zero exponent lies in every profile")
    }

    /// `c · m`. Monomials beyond the q/t/u orders are silently zero; a y
    /// exponent outside a strict window is an error.
    pub fn monomial(profile: TruncationProfile, c: Rational, e: Exponents) -> Result<Self> {
        let mut s = Self::zero(profile);
        s.accumulate(e, c)?;
        Ok(s)
    }

    /// Builds a series from `(exponents, coefficient)` pairs, summing
    /// repeated exponents. Same truncation rules as [`Self::monomial`].
    pub fn from_terms<I>(profile: TruncationProfile, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut s = Self::zero(profile);
        for (e, c) in terms {
            s.accumulate(e, c)?;
        }
        s.terms.retain(|_, c| !c.is_zero());
        Ok(s)
    }

    /// Adds `c` into the coefficient of `e`, applying truncation rules.
    /// May leave a zero behind; callers normalize.
    fn accumulate(&mut self, e: Exponents, c: Rational) -> Result<()> {
        if c.is_zero() || !self.profile.admits_qtu(&e) {
            return Ok(());
        }
        if !self.profile.admits_y(e.y) {
            return match self.profile.y_mode {
                YWindowMode::Truncating => Ok(()),
                YWindowMode::Strict => Err(Error::YWindowOverflow {
                    exponent: e.y,
                    y_min: self.profile.y_min,
                    y_max: self.profile.y_max,
                }),
            };
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
        Ok(())
    }

    pub fn profile(&self) -> &TruncationProfile {
        &self.profile
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term().is_one()
    }

    /// Coefficient of a single monomial; zero when absent.
    pub fn coefficient(&self, e: &Exponents) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Exponents::ZERO)
    }

    /// Largest exponent of `var` present, or `None` for the zero series.
    pub fn degree_in(&self, var: Var) -> Option<i64> {
        self.terms.keys().map(|e| e.get(var)).max()
    }

    /// The coefficient of the monomial picked out by `which`, as a series
    /// in the remaining variables. Assigned variables are dropped from
    /// the result's profile (their order becomes 0).
    pub fn coeff(&self, which: Selector) -> Result<TruncatedSeries> {
        let mut profile = self.profile;
        for (var, want) in [(Var::Q, which.q), (Var::T, which.t), (Var::U, which.u)] {
            if let Some(n) = want {
                if n > profile.order(var) {
                    return Err(Error::OutOfProfile {
                        var,
                        exponent: n as i64,
                    });
                }
                profile.set_order(var, 0);
            }
        }
        if let Some(y) = which.y {
            if !profile.admits_y(y) {
                return Err(Error::OutOfProfile {
                    var: Var::Y,
                    exponent: y as i64,
                });
            }
            profile.y_min = 0;
            profile.y_max = 0;
        }
        let matches = |wanted: Option<i64>, have: i64| wanted.is_none_or(|w| w == have);
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| {
                matches(which.q.map(i64::from), e.q as i64)
                    && matches(which.t.map(i64::from), e.t as i64)
                    && matches(which.y.map(i64::from), e.y as i64)
                    && matches(which.u.map(i64::from), e.u as i64)
            })
            .map(|(e, c)| {
                let mut e = *e;
                if which.q.is_some() {
                    e.q = 0;
                }
                if which.t.is_some() {
                    e.t = 0;
                }
                if which.y.is_some() {
                    e.y = 0;
                }
                if which.u.is_some() {
                    e.u = 0;
                }
                (e, c.clone())
            })
            .collect();
        Ok(TruncatedSeries { profile, terms })
    }

    /// Coefficients of `var^0 .. var^order` as a list of series in the
    /// other variables.
    pub fn coefficients_in(&self, var: Var) -> Result<Vec<TruncatedSeries>> {
        let order = match var {
            Var::Q => self.profile.q,
            Var::T => self.profile.t,
            Var::U => self.profile.u,
            Var::Y => {
                return Err(Error::Usage(
                    "coefficients_in is defined for q, t and u only".into(),
                ))
            }
        };
        (0..=order)
            .map(|n| {
                let sel = match var {
                    Var::Q => Selector::q(n),
                    Var::T => Selector::t(n),
                    _ => Selector::default().and_u(n),
                };
                self.coeff(sel)
            })
            .collect()
    }

    /// Replaces `var` by the rational `value`. The variable disappears
    /// from the result profile.
    pub fn substitute(&self, var: Var, value: &Rational) -> Result<TruncatedSeries> {
        let mut profile = self.profile;
        match var {
            Var::Y => {
                profile.y_min = 0;
                profile.y_max = 0;
            }
            v => profile.set_order(v, 0),
        }
        let mut out = TruncatedSeries::zero(profile);
        for (e, c) in &self.terms {
            let k = e.get(var);
            let factor = if k >= 0 {
                num_traits::pow(value.clone(), k as usize)
            } else if value.is_zero() {
                return Err(Error::ZeroSubstitution);
            } else {
                num_traits::pow(value.recip(), (-k) as usize)
            };
            let mut e = *e;
            match var {
                Var::Q => e.q = 0,
                Var::T => e.t = 0,
                Var::Y => e.y = 0,
                Var::U => e.u = 0,
            }
            out.accumulate(e, c * factor)?;
        }
        Ok(out)
    }

    /// Renames one non-negative variable to another that is currently
    /// unused (order 0). The order moves along with the name.
    pub fn rename(&self, from: Var, to: Var) -> Result<TruncatedSeries> {
        if from == Var::Y || to == Var::Y {
            return Err(Error::InvalidRename {
                from,
                to,
                reason: "y is a Laurent direction and cannot be renamed",
            });
        }
        if from == to {
            return Ok(self.clone());
        }
        if self.profile.order(to) != 0 {
            return Err(Error::InvalidRename {
                from,
                to,
                reason: "target variable is already in use",
            });
        }
        let mut profile = self.profile;
        profile.set_order(to, self.profile.order(from));
        profile.set_order(from, 0);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = *e;
                let k = e.get(from) as u32;
                match from {
                    Var::Q => e.q = 0,
                    Var::T => e.t = 0,
                    _ => e.u = 0,
                }
                match to {
                    Var::Q => e.q = k,
                    Var::T => e.t = k,
                    _ => e.u = k,
                }
                (e, c.clone())
            })
            .collect();
        Ok(TruncatedSeries { profile, terms })
    }

    /// Re-truncates to a narrower y-window, which becomes truncating.
    pub fn restrict_y(&self, y_min: i32, y_max: i32) -> Result<TruncatedSeries> {
        let mut profile =
            TruncationProfile::new(self.profile.q, self.profile.t, self.profile.u, y_min, y_max)?;
        profile.y_mode = YWindowMode::Truncating;
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| profile.admits_y(e.y))
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        Ok(TruncatedSeries { profile, terms })
    }

    /// Re-expresses the same terms under a larger profile. Fails if a term
    /// does not fit.
    pub fn widen(&self, profile: TruncationProfile) -> Result<TruncatedSeries> {
        for e in self.terms.keys() {
            if !profile.contains(e) {
                return Err(Error::Usage(format!(
                    "cannot widen to {profile}: term {e:?} does not fit"
                )));
            }
        }
        Ok(TruncatedSeries {
            profile,
            terms: self.terms.clone(),
        })
    }

    /// The constant term as an integer, for series that are constants.
    pub fn as_integer(&self) -> Result<BigInt> {
        if self.terms.keys().any(|e| !e.is_zero()) {
            return Err(Error::NotInteger(self.to_string()));
        }
        to_integer(&self.constant_term())
    }
}

/// Converts an integral rational to `BigInt`.
pub fn to_integer(r: &Rational) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NotInteger(r.to_string()))
    }
}

/// Variable spellings used by [`PolyDisplay`].
#[derive(Debug, Clone, Copy)]
pub struct VarNames {
    pub q: &'static str,
    pub t: &'static str,
    pub y: &'static str,
    pub u: &'static str,
}

impl Default for VarNames {
    fn default() -> Self {
        VarNames {
            q: "q",
            t: "t",
            y: "y",
            u: "u",
        }
    }
}

/// Displays a series as a polynomial with terms in ascending exponent
/// order (q, t, y, u lexicographic) and rationals as `p/q`.
pub struct PolyDisplay<'a> {
    series: &'a TruncatedSeries,
    names: VarNames,
}

impl TruncatedSeries {
    pub fn display_with(&self, names: VarNames) -> PolyDisplay<'_> {
        PolyDisplay {
            series: self,
            names,
        }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.series.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.series.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let mut factors = Vec::new();
            for (name, k) in [
                (self.names.q, e.q as i64),
                (self.names.t, e.t as i64),
                (self.names.y, e.y as i64),
                (self.names.u, e.u as i64),
            ] {
                match k {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    k => factors.push(format!("{name}^{k}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(VarNames::default()).fmt(f)
    }
}
