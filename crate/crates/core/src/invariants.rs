//! Generating functions for invariants of symmetric products.
//!
//! The Betti engine uses two variables: q counts the symmetric power and
//! t the homological degree. The genus engines expand in t alone, where
//! t^n tags SP^n.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{
    inv_one_minus, rat, to_integer, Exponents, Rational, Selector, TruncatedSeries,
    TruncationProfile, Var,
};
use crate::topology::{cycle_types, GradedSpace};

/// `∏_{d odd} (1 + q t^d)^{β_d} / ∏_{d even} (1 - q t^d)^{β_d}`, whose q^n
/// coefficient is the Poincaré polynomial of SP^n(X).
pub fn macdonald_series(
    space: &GradedSpace,
    q_order: u32,
    t_order: u32,
) -> Result<TruncatedSeries> {
    let profile = TruncationProfile::qt(q_order, t_order);
    let mut result = TruncatedSeries::one(profile);
    for (d, &beta) in space.betti().iter().enumerate() {
        if beta == 0 {
            continue;
        }
        let qtd = TruncatedSeries::monomial(profile, rat(1), Exponents::new(1, d as u32, 0, 0))?;
        let factor = if d % 2 == 1 {
            TruncatedSeries::one(profile).add(&qtd)?
        } else {
            inv_one_minus(&qtd)?
        };
        result = result.mul(&factor.pow_u32(beta as u32)?)?;
    }
    Ok(result)
}

/// Top degree in which SP^n(X) can have homology: n times the top degree
/// of X. For a closed surface this is 2n.
pub fn default_dmax(space: &GradedSpace, n: u32) -> u32 {
    n * space.top_degree() as u32
}

/// Betti numbers of SP^n(X) in degrees `0..=d_max`.
pub fn betti_sp(space: &GradedSpace, n: u32, d_max: u32) -> Result<Vec<BigInt>> {
    let series = macdonald_series(space, n, d_max)?;
    let slice = series.coeff(Selector::q(n))?;
    (0..=d_max)
        .map(|d| to_integer(&slice.coefficient(&Exponents::t(d))))
        .collect()
}

/// `∑ q^n χ(SP^n(X)) = (1 - q)^{-χ(X)}`.
pub fn euler_sp_series(space: &GradedSpace, q_order: u32) -> Result<TruncatedSeries> {
    let profile = TruncationProfile::qt(q_order, 0);
    let base = TruncatedSeries::from_terms(
        profile,
        [(Exponents::ZERO, rat(1)), (Exponents::q(1), rat(-1))],
    )?;
    base.pow_int(-space.euler_char())
}

/// The equivariant genus `φ(ω_r, X^r)` of an r-cycle acting on X^r, for
/// each r ≥ 1. Values are constant in q and t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenusSeed {
    /// Euler characteristic: `φ(ω_r, X^r) = χ(X)` for every r.
    Euler(i64),
    /// χ_y genus of a genus-g curve: `(1 - g)(1 + (-y)^r)`.
    ChiY { genus: u32 },
    /// Elliptic genus of a genus-g curve: 0 for odd r, `(2 - 2g) u` for
    /// even r, where u stands for ε^{1/4}.
    Elliptic { genus: u32 },
}

pub fn chi_y_seed(g: u32) -> GenusSeed {
    GenusSeed::ChiY { genus: g }
}

pub fn ell_seed(g: u32) -> GenusSeed {
    GenusSeed::Elliptic { genus: g }
}

impl GenusSeed {
    /// Profile for the genus series through `t^{t_order}`. The y-window and
    /// u-order are sized so nothing is lost: the t^n coefficient has
    /// y-degree at most n and u-degree at most n/2.
    pub fn profile(&self, t_order: u32) -> TruncationProfile {
        let (u, y_max) = match self {
            GenusSeed::Euler(_) => (0, 0),
            GenusSeed::ChiY { .. } => (0, t_order as i32),
            GenusSeed::Elliptic { .. } => (t_order / 2, 0),
        };
        TruncationProfile::new(0, t_order, u, 0, y_max).expect("window contains 0")
    }

    /// `φ(ω_r, X^r)` as a series under `profile`.
    pub fn value(&self, r: u32, profile: TruncationProfile) -> Result<TruncatedSeries> {
        match *self {
            GenusSeed::Euler(chi) => Ok(TruncatedSeries::constant(profile, rat(chi))),
            GenusSeed::ChiY { genus } => {
                let c = 1 - genus as i64;
                let sign = if r.is_multiple_of(2) { 1 } else { -1 };
                TruncatedSeries::from_terms(
                    profile,
                    [
                        (Exponents::ZERO, rat(c)),
                        (Exponents::y(r as i32), rat(c * sign)),
                    ],
                )
            }
            GenusSeed::Elliptic { genus } => {
                if r % 2 == 1 {
                    Ok(TruncatedSeries::zero(profile))
                } else {
                    TruncatedSeries::monomial(profile, rat(2 - 2 * genus as i64), Exponents::u(1))
                }
            }
        }
    }
}

/// `exp(∑_{r≥1} φ(ω_r, X^r) t^r / r)`, the generating function of
/// `φ(SP^n(X))`.
pub fn cycle_index_genus(seed: GenusSeed, t_order: u32) -> Result<TruncatedSeries> {
    let profile = seed.profile(t_order);
    let mut arg = TruncatedSeries::zero(profile);
    for r in 1..=t_order {
        let tr =
            TruncatedSeries::monomial(profile, Rational::new(1.into(), r.into()), Exponents::t(r))?;
        arg = arg.add(&seed.value(r, profile)?.mul(&tr)?)?;
    }
    arg.exp()
}

/// `φ(SP^n(X)) = ∑_{α ⊢ n} ∏_r φ(ω_r, X^r)^{α_r} / ∏_r r^{α_r} α_r!`,
/// summed over conjugacy classes of S_n. Returned as a series constant in t.
pub fn cycle_index_coefficient(
    seed: GenusSeed,
    n: u32,
    profile: TruncationProfile,
) -> Result<TruncatedSeries> {
    let mut total = TruncatedSeries::zero(profile);
    for class in cycle_types(n as usize) {
        let mut term = TruncatedSeries::one(profile);
        for (r, a) in class.multiplicities() {
            term = term.mul(&seed.value(r as u32, profile)?.pow_u32(a as u32)?)?;
        }
        let centralizer = Rational::from_integer(BigInt::from(class.centralizer_order()));
        total = total.add(&term.scale(&centralizer.recip()))?;
    }
    Ok(total)
}

/// The same generating function as [`cycle_index_genus`], assembled
/// coefficient by coefficient from the conjugacy-class sum.
pub fn cycle_index_sum(seed: GenusSeed, t_order: u32) -> Result<TruncatedSeries> {
    let profile = seed.profile(t_order);
    let mut result = TruncatedSeries::zero(profile);
    for n in 0..=t_order {
        let tn = TruncatedSeries::monomial(profile, rat(1), Exponents::t(n))?;
        result = result.add(&cycle_index_coefficient(seed, n, profile)?.mul(&tn)?)?;
    }
    Ok(result)
}

/// `∑ χ_y(SP^n(S_g)) t^n = ((1 - t)(1 + y t))^{g - 1}`.
pub fn chi_y_sp_series(g: u32, t_order: u32) -> Result<TruncatedSeries> {
    let profile = chi_y_seed(g).profile(t_order);
    let base = TruncatedSeries::from_terms(
        profile,
        [
            (Exponents::ZERO, rat(1)),
            (Exponents::t(1), rat(-1)),
            (Exponents::new(0, 1, 1, 0), rat(1)),
            (Exponents::new(0, 2, 1, 0), rat(-1)),
        ],
    )?;
    base.pow_int(g as i64 - 1)
}

/// χ_y series with y set to a value: -1 gives Euler characteristics, 0 Todd
/// genera, 1 signatures.
pub fn chi_y_specialized(g: u32, t_order: u32, y: i64) -> Result<TruncatedSeries> {
    chi_y_sp_series(g, t_order)?.substitute(Var::Y, &rat(y))
}

/// Todd genera of SP^n(S_g), the y = 0 specialization.
pub fn todd_sp_series(g: u32, t_order: u32) -> Result<TruncatedSeries> {
    chi_y_specialized(g, t_order, 0)
}

/// Signature of SP^m(M_g): the t^m coefficient of `(1 - t^2)^{g - 1}`.
/// Zero for odd m.
pub fn signature_closed_sp(g: u32, m: u32) -> Result<BigInt> {
    let profile = TruncationProfile::qt(0, m);
    let base = TruncatedSeries::from_terms(
        profile,
        [(Exponents::ZERO, rat(1)), (Exponents::t(2), rat(-1))],
    )?;
    let series = base.pow_int(g as i64 - 1)?;
    to_integer(&series.coefficient(&Exponents::t(m)))
}

/// Signature of SP^{2n}(M_{g,k}) for a surface with k ≥ 1 punctures:
/// `(-1)^n C(g, n)`, independent of k. Note `n` is half the
/// symmetric-power order.
pub fn signature_punctured_sp(g: u32, k: u32, n: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Usage(
            "punctured signature needs k >= 1; use signature_closed_sp for closed surfaces".into(),
        ));
    }
    let c = if n > g {
        BigInt::zero()
    } else {
        binomial(BigInt::from(g), BigInt::from(n))
    };
    Ok(if n.is_multiple_of(2) { c } else { -c })
}

/// `∑ Ell(SP^n(S_g)) t^n = (1 - t^2)^{-(1 - g) u}` with u = ε^{1/4}.
pub fn ell_sp_series(g: u32, t_order: u32) -> Result<TruncatedSeries> {
    let profile = ell_seed(g).profile(t_order);
    let base = TruncatedSeries::from_terms(
        profile,
        [(Exponents::ZERO, rat(1)), (Exponents::t(2), rat(-1))],
    )?;
    let exponent = TruncatedSeries::monomial(profile, rat(g as i64 - 1), Exponents::u(1))?;
    base.pow(&exponent)
}

/// Poincaré series `(1 + t)^{2g} / (1 - t^2)` of SP^∞(M_g).
pub fn stable_betti_series(g: u32, t_order: u32) -> Result<TruncatedSeries> {
    let profile = TruncationProfile::qt(0, t_order);
    let one_plus_t = TruncatedSeries::from_terms(
        profile,
        [(Exponents::ZERO, rat(1)), (Exponents::t(1), rat(1))],
    )?;
    let t2 = TruncatedSeries::monomial(profile, rat(1), Exponents::t(2))?;
    one_plus_t.pow_u32(2 * g)?.mul(&inv_one_minus(&t2)?)
}

/// Betti numbers of `CP^{n-g} × T^{2g}`: the coefficients of
/// `(1 + t^2 + … + t^{2(n-g)}) (1 + t)^{2g}`, by integer convolution.
/// SP^n(M_g) fibres over T^{2g} with fibre CP^{n-g} once n > 2g - 2.
pub fn projective_bundle_betti(g: u32, n: u32) -> Result<Vec<BigInt>> {
    if n < g {
        return Err(Error::Usage(format!("need n >= g, got n = {n}, g = {g}")));
    }
    let fibre: Vec<BigInt> = (0..=2 * (n - g))
        .map(|d| {
            if d % 2 == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    let torus: Vec<BigInt> = (0..=2 * g)
        .map(|j| binomial(BigInt::from(2 * g), BigInt::from(j)))
        .collect();
    let mut out = vec![BigInt::zero(); fibre.len() + torus.len() - 1];
    for (i, a) in fibre.iter().enumerate() {
        for (j, b) in torus.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::frac;
    use crate::topology::{resolve, SpaceSpec};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn surface(g: u32) -> GradedSpace {
        resolve(&SpaceSpec::ClosedSurface { genus: g })
    }

    #[test]
    fn sphere_symmetric_powers_are_projective_spaces() {
        let s2 = resolve(&SpaceSpec::Sphere(2));
        let m = macdonald_series(&s2, 3, 6).unwrap();
        assert_eq!(
            m.coeff(Selector::q(3)).unwrap().to_string(),
            "1 + t^2 + t^4 + t^6"
        );
        assert_eq!(
            betti_sp(&s2, 4, 8).unwrap(),
            ints(&[1, 0, 1, 0, 1, 0, 1, 0, 1])
        );
    }

    #[test]
    fn rp2_is_rationally_a_point() {
        let rp2 = resolve(&SpaceSpec::RealProjectivePlane);
        let m = macdonald_series(&rp2, 5, 10).unwrap();
        for n in 0..=5 {
            assert!(m.coeff(Selector::q(n)).unwrap().is_one());
        }
    }

    #[test]
    fn torus_second_power() {
        let m = macdonald_series(&surface(1), 2, 4).unwrap();
        assert_eq!(
            m.coeff(Selector::q(2)).unwrap().to_string(),
            "1 + 2*t + 2*t^2 + 2*t^3 + t^4"
        );
        assert_eq!(betti_sp(&surface(1), 2, 4).unwrap(), ints(&[1, 2, 2, 2, 1]));
        assert_eq!(betti_sp(&surface(2), 1, 2).unwrap(), ints(&[1, 4, 1]));
    }

    #[test]
    fn torus_product_formula_matches_explicit_factors() {
        // (1 + qt)^2 / ((1 - q)(1 - q t^2)) at q^2
        let p = TruncationProfile::qt(2, 4);
        let one = TruncatedSeries::one(p);
        let qt = TruncatedSeries::monomial(p, rat(1), Exponents::new(1, 1, 0, 0)).unwrap();
        let q = TruncatedSeries::monomial(p, rat(1), Exponents::q(1)).unwrap();
        let qt2 = TruncatedSeries::monomial(p, rat(1), Exponents::new(1, 2, 0, 0)).unwrap();
        let s = one
            .add(&qt)
            .unwrap()
            .pow_u32(2)
            .unwrap()
            .mul(&inv_one_minus(&q).unwrap())
            .unwrap()
            .mul(&inv_one_minus(&qt2).unwrap())
            .unwrap();
        assert_eq!(s, macdonald_series(&surface(1), 2, 4).unwrap());
    }

    #[test]
    fn euler_series_examples() {
        let s2 = resolve(&SpaceSpec::Sphere(2));
        let e = euler_sp_series(&s2, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(e.coefficient(&Exponents::q(n)), rat(n as i64 + 1));
        }
        assert!(euler_sp_series(&surface(1), 5).unwrap().is_one());
        let e = euler_sp_series(&surface(2), 4).unwrap();
        let got: Vec<Rational> = (0..=4).map(|n| e.coefficient(&Exponents::q(n))).collect();
        assert_eq!(got, vec![rat(1), rat(-2), rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn euler_series_is_macdonald_at_t_minus_one() {
        for g in 0..=3 {
            let m = macdonald_series(&surface(g), 5, 10).unwrap();
            let at_minus_one = m.substitute(Var::T, &rat(-1)).unwrap();
            assert_eq!(at_minus_one, euler_sp_series(&surface(g), 5).unwrap());
        }
    }

    #[test]
    fn seed_values() {
        let p = chi_y_seed(0).profile(4);
        assert!(chi_y_seed(1).value(3, p).unwrap().is_zero());
        assert_eq!(chi_y_seed(0).value(1, p).unwrap().to_string(), "1 - y");
        assert_eq!(chi_y_seed(3).value(2, p).unwrap().to_string(), "-2 - 2*y^2");

        let p = ell_seed(0).profile(4);
        assert!(ell_seed(1).value(2, p).unwrap().is_zero());
        assert!(ell_seed(0).value(3, p).unwrap().is_zero());
        assert_eq!(ell_seed(0).value(2, p).unwrap().to_string(), "2*u");
        assert_eq!(ell_seed(2).value(4, p).unwrap().to_string(), "-2*u");
    }

    #[test]
    fn cycle_index_trivial_seeds() {
        assert!(cycle_index_genus(GenusSeed::Euler(0), 6).unwrap().is_one());
        let chi = cycle_index_genus(GenusSeed::Euler(2), 5).unwrap();
        let euler = euler_sp_series(&resolve(&SpaceSpec::Sphere(2)), 5).unwrap();
        assert_eq!(chi.rename(Var::T, Var::Q).unwrap(), euler);
    }

    #[test]
    fn cycle_index_chi_y_genus_two() {
        let s = cycle_index_genus(chi_y_seed(2), 2).unwrap();
        assert_eq!(s.to_string(), "1 - t + t*y - t^2*y");
    }

    #[test]
    fn cycle_index_forms_agree() {
        for seed in [GenusSeed::Euler(-3), chi_y_seed(3), ell_seed(0)] {
            assert_eq!(
                cycle_index_genus(seed, 6).unwrap(),
                cycle_index_sum(seed, 6).unwrap(),
                "{seed:?}"
            );
        }
    }

    #[test]
    fn chi_y_examples() {
        let s = chi_y_sp_series(0, 4).unwrap();
        for n in 0..=4u32 {
            let c = s.coeff(Selector::t(n)).unwrap();
            for k in 0..=4i32 {
                let expected = if k as u32 <= n {
                    if k % 2 == 0 {
                        1
                    } else {
                        -1
                    }
                } else {
                    0
                };
                assert_eq!(c.coefficient(&Exponents::y(k)), rat(expected));
            }
        }
        assert!(chi_y_sp_series(1, 6).unwrap().is_one());
        let c2 = chi_y_sp_series(2, 4)
            .unwrap()
            .coeff(Selector::t(2))
            .unwrap();
        assert_eq!(c2.to_string(), "-y");
    }

    #[test]
    fn todd_genus_of_projective_spaces_is_one() {
        // Todd genus of CP^n is 1.
        let s = todd_sp_series(0, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(s.coefficient(&Exponents::t(n)), rat(1));
        }
    }

    #[test]
    fn closed_signature_examples() {
        assert_eq!(signature_closed_sp(0, 4).unwrap(), BigInt::from(1));
        assert_eq!(signature_closed_sp(2, 2).unwrap(), BigInt::from(-1));
        for g in 0..5 {
            for m in [1, 3, 5, 7] {
                assert!(signature_closed_sp(g, m).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn punctured_signature_examples() {
        assert_eq!(signature_punctured_sp(2, 1, 2).unwrap(), BigInt::from(1));
        assert_eq!(signature_punctured_sp(3, 2, 1).unwrap(), BigInt::from(-3));
        for k in 1..4 {
            assert!(signature_punctured_sp(1, k, 2).unwrap().is_zero());
        }
        assert!(matches!(
            signature_punctured_sp(2, 0, 1),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn elliptic_examples() {
        assert!(ell_sp_series(1, 8).unwrap().is_one());
        let s = ell_sp_series(0, 4).unwrap();
        assert_eq!(s.coeff(Selector::t(2)).unwrap().to_string(), "u");
        assert_eq!(
            s.coeff(Selector::t(4)).unwrap().to_string(),
            "1/2*u + 1/2*u^2"
        );
        assert_eq!(s.coefficient(&Exponents::new(0, 4, 0, 2)), frac(1, 2));
    }

    #[test]
    fn stable_betti_examples() {
        let s = stable_betti_series(0, 6).unwrap();
        assert_eq!(s.to_string(), "1 + t^2 + t^4 + t^6");
        let s = stable_betti_series(1, 5).unwrap();
        assert_eq!(s.to_string(), "1 + 2*t + 2*t^2 + 2*t^3 + 2*t^4 + 2*t^5");
        let s = stable_betti_series(2, 3).unwrap();
        assert_eq!(s.coefficient(&Exponents::t(1)), rat(4));
    }

    #[test]
    fn projective_bundle_small_cases() {
        assert_eq!(
            projective_bundle_betti(1, 2).unwrap(),
            ints(&[1, 2, 2, 2, 1])
        );
        assert_eq!(
            projective_bundle_betti(0, 2).unwrap(),
            ints(&[1, 0, 1, 0, 1])
        );
        assert!(projective_bundle_betti(3, 2).is_err());
    }

    #[test]
    fn default_dmax_for_surfaces() {
        assert_eq!(default_dmax(&surface(2), 3), 6);
        let punctured = resolve(&SpaceSpec::PuncturedSurface {
            genus: 1,
            punctures: 2,
        });
        assert_eq!(default_dmax(&punctured, 3), 3);
    }
}
