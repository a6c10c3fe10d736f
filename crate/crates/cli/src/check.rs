//! Oracle-equivalence and identity suites behind `symprod check`.
//!
//! Each suite returns `Ok(cases)` or the first mismatch it finds. Suites
//! run in a fixed order so the output is reproducible.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use symprod_core::invariants::{
    betti_sp, chi_y_seed, chi_y_sp_series, chi_y_specialized, cycle_index_genus, cycle_index_sum,
    ell_seed, ell_sp_series, euler_sp_series, macdonald_series, projective_bundle_betti,
    signature_closed_sp, signature_punctured_sp, stable_betti_series, GenusSeed,
};
use symprod_core::orbifold::{
    dmvv_log_check, dmvv_series, orbifold_euler_bruteforce, EllCoefficients,
};
use symprod_core::series::rat;
use symprod_core::topology::{
    cycle_types, graded_perm_trace_oracle, resolve, sym_power_dims_oracle, GradedSpace, SpaceSpec,
};
use symprod_core::{Exponents, Rational, Selector, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Small,
    Full,
}

/// Size knobs per family.
struct Bounds {
    macdonald_n: u32,
    macdonald_d: u32,
    sphere_n: u32,
    genus: u32,
    order: u32,
    trace_rank: u64,
    trace_n: usize,
    bundle_n: u32,
    dmvv_cases: usize,
    dmvv_order: u32,
}

impl Family {
    fn bounds(self) -> Bounds {
        match self {
            Family::Small => Bounds {
                macdonald_n: 5,
                macdonald_d: 8,
                sphere_n: 8,
                genus: 4,
                order: 8,
                trace_rank: 4,
                trace_n: 4,
                bundle_n: 6,
                dmvv_cases: 25,
                dmvv_order: 6,
            },
            Family::Full => Bounds {
                macdonald_n: 6,
                macdonald_d: 10,
                sphere_n: 12,
                genus: 6,
                order: 10,
                trace_rank: 5,
                trace_n: 5,
                bundle_n: 8,
                dmvv_cases: 60,
                dmvv_order: 6,
            },
        }
    }
}

pub type SuiteResult = Result<usize, String>;

pub struct Suite {
    pub name: &'static str,
    run: fn(&Bounds) -> SuiteResult,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "macdonald-vs-oracle",
        run: macdonald_vs_oracle,
    },
    Suite {
        name: "sphere-powers-are-cp",
        run: sphere_powers,
    },
    Suite {
        name: "punctured-signature",
        run: punctured_signature,
    },
    Suite {
        name: "chi-y-identity",
        run: chi_y_identity,
    },
    Suite {
        name: "chi-y-specializations",
        run: chi_y_specializations,
    },
    Suite {
        name: "elliptic-genus",
        run: elliptic_genus,
    },
    Suite {
        name: "equivariant-trace",
        run: equivariant_trace,
    },
    Suite {
        name: "fibration-and-stabilization",
        run: fibration_and_stabilization,
    },
    Suite {
        name: "dmvv",
        run: dmvv,
    },
    Suite {
        name: "cycle-index-dual-form",
        run: cycle_index_dual_form,
    },
    Suite {
        name: "euler-vs-macdonald",
        run: euler_vs_macdonald,
    },
];

/// Runs every suite in order, returning `(name, outcome)` pairs.
pub fn run_all(family: Family) -> Vec<(&'static str, SuiteResult)> {
    let bounds = family.bounds();
    SUITES.iter().map(|s| (s.name, (s.run)(&bounds))).collect()
}

fn fail<T>(msg: String) -> Result<T, String> {
    Err(msg)
}

fn core<T>(r: symprod_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// The fixed test spaces: S¹, S², T², M_2, M_{1,1}, M_{2,3}, [1,3], [2,0,1].
pub fn oracle_spaces() -> Vec<SpaceSpec> {
    vec![
        SpaceSpec::Sphere(1),
        SpaceSpec::Sphere(2),
        SpaceSpec::ClosedSurface { genus: 1 },
        SpaceSpec::ClosedSurface { genus: 2 },
        SpaceSpec::PuncturedSurface {
            genus: 1,
            punctures: 1,
        },
        SpaceSpec::PuncturedSurface {
            genus: 2,
            punctures: 3,
        },
        SpaceSpec::RawBetti(vec![1, 3]),
        SpaceSpec::RawBetti(vec![2, 0, 1]),
    ]
}

/// Betti lists supported in degrees `0..=max_degree` with total rank
/// `1..=max_rank`.
pub fn betti_family(max_degree: usize, max_rank: u64) -> Vec<GradedSpace> {
    fn rec(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<GradedSpace>) {
        if i == cur.len() {
            out.push(GradedSpace::new(cur.clone()));
            return;
        }
        for b in 0..=left {
            cur[i] = b;
            rec(i + 1, left - b, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, max_rank, &mut vec![0; max_degree + 1], &mut out);
    out.retain(|s| s.total_rank() > 0);
    out.sort_by(|a, b| a.betti().cmp(b.betti()));
    out.dedup();
    out
}

fn macdonald_vs_oracle(b: &Bounds) -> SuiteResult {
    let mut spaces: Vec<GradedSpace> = oracle_spaces().iter().map(resolve).collect();
    if b.macdonald_n > 5 {
        spaces.extend(betti_family(4, 5));
    }
    let mut cases = 0;
    for space in &spaces {
        let series = core(macdonald_series(space, b.macdonald_n, b.macdonald_d))?;
        let dims = sym_power_dims_oracle(space, b.macdonald_n as usize, b.macdonald_d as usize);
        for n in 0..=b.macdonald_n {
            let slice = core(series.coeff(Selector::q(n)))?;
            for d in 0..=b.macdonald_d {
                let got = slice.coefficient(&Exponents::t(d));
                let want = rat(dims.get(d as usize, n as usize) as i64);
                if got != want {
                    return fail(format!("{space} n={n} d={d}: series {got}, oracle {want}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn sphere_powers(b: &Bounds) -> SuiteResult {
    let s2 = resolve(&SpaceSpec::Sphere(2));
    for n in 0..=b.sphere_n {
        let betti = core(betti_sp(&s2, n, 2 * n))?;
        let want: Vec<BigInt> = (0..=2 * n)
            .map(|d| BigInt::from((d % 2 == 0) as u8))
            .collect();
        if betti != want {
            return fail(format!("SP^{n}(S^2): {betti:?}"));
        }
    }
    Ok(b.sphere_n as usize + 1)
}

fn binomial_by_product(g: u32, n: u32) -> BigInt {
    if n > g {
        return BigInt::zero();
    }
    let mut c = BigInt::one();
    for i in 0..n {
        c = c * (g - i) / (i + 1);
    }
    c
}

fn punctured_signature(b: &Bounds) -> SuiteResult {
    let mut cases = 0;
    for g in 0..=b.genus + 2 {
        for k in 1..=3 {
            for n in 0..=6 {
                let got = core(signature_punctured_sp(g, k, n))?;
                let c = binomial_by_product(g, n);
                let want = if n % 2 == 0 { c } else { -c };
                if got != want {
                    return fail(format!("g={g} k={k} n={n}: {got} != {want}"));
                }
                cases += 1;
            }
        }
    }
    // same homotopy type (2g + k = 5), different signatures of SP^4
    let m = core(signature_punctured_sp(2, 1, 2))?;
    let n = core(signature_punctured_sp(1, 3, 2))?;
    if m != BigInt::one() || !n.is_zero() {
        return fail(format!("M_(2,1) vs M_(1,3), SP^4: {m} vs {n}"));
    }
    Ok(cases + 1)
}

fn chi_y_identity(b: &Bounds) -> SuiteResult {
    for g in 0..=b.genus {
        let closed = core(chi_y_sp_series(g, b.order))?;
        let via_exp = core(cycle_index_genus(chi_y_seed(g), b.order))?;
        if closed != via_exp {
            return fail(format!(
                "g={g}: closed form {closed} vs cycle index {via_exp}"
            ));
        }
    }
    // χ_y(CP^n) = ∑_{k≤n} (-y)^k
    let s = core(chi_y_sp_series(0, b.order))?;
    for n in 0..=b.order {
        for k in 0..=b.order as i32 {
            let want = if k as u32 > n {
                rat(0)
            } else if k % 2 == 0 {
                rat(1)
            } else {
                rat(-1)
            };
            let got = s.coefficient(&Exponents::new(0, n, k, 0));
            if got != want {
                return fail(format!("χ_y(CP^{n}) coefficient of y^{k}: {got}"));
            }
        }
    }
    Ok(b.genus as usize + 1 + (b.order as usize + 1).pow(2))
}

fn chi_y_specializations(b: &Bounds) -> SuiteResult {
    let mut cases = 0;
    for g in 0..=b.genus {
        let at_minus_one = core(chi_y_specialized(g, b.order, -1))?;
        let renamed = core(at_minus_one.rename(Var::T, Var::Q))?;
        let surface = resolve(&SpaceSpec::ClosedSurface { genus: g });
        let euler = core(euler_sp_series(&surface, b.order))?;
        if renamed != euler {
            return fail(format!("g={g}: y=-1 gives {renamed}, expected {euler}"));
        }
        let at_one = core(chi_y_specialized(g, b.order, 1))?;
        for m in 0..=b.order {
            let sig = Rational::from_integer(core(signature_closed_sp(g, m))?);
            let got = at_one.coefficient(&Exponents::t(m));
            if got != sig {
                return fail(format!("g={g} m={m}: y=1 gives {got}, signature {sig}"));
            }
            cases += 1;
        }
    }
    Ok(cases)
}

fn elliptic_genus(b: &Bounds) -> SuiteResult {
    for g in 0..=b.genus {
        let closed = core(ell_sp_series(g, b.order))?;
        let via_exp = core(cycle_index_genus(ell_seed(g), b.order))?;
        if closed != via_exp {
            return fail(format!(
                "g={g}: closed form {closed} vs cycle index {via_exp}"
            ));
        }
        if g == 1 && !closed.is_one() {
            return fail(format!("g=1 should be 1, got {closed}"));
        }
    }
    Ok(b.genus as usize + 1)
}

fn equivariant_trace(b: &Bounds) -> SuiteResult {
    let mut cases = 0;
    for space in betti_family(4, b.trace_rank) {
        let chi = space.euler_char();
        for n in 1..=b.trace_n {
            for sigma in cycle_types(n) {
                let got = graded_perm_trace_oracle(&space, &sigma);
                let want = chi.pow(sigma.num_cycles() as u32);
                if got != want {
                    return fail(format!("{space} σ={sigma}: trace {got}, χ^c = {want}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn fibration_and_stabilization(b: &Bounds) -> SuiteResult {
    let mut cases = 0;
    for g in 0..=3u32 {
        let surface = resolve(&SpaceSpec::ClosedSurface { genus: g });
        let stable = core(stable_betti_series(g, b.bundle_n))?;
        for n in 0..=b.bundle_n {
            let betti = core(betti_sp(&surface, n, 2 * n))?;
            if n as i64 > 2 * g as i64 - 2 {
                let bundle = core(projective_bundle_betti(g, n))?;
                if betti != bundle {
                    return fail(format!("g={g} n={n}: {betti:?} vs bundle {bundle:?}"));
                }
                cases += 1;
            }
            for d in 0..=n {
                let got = Rational::from_integer(betti[d as usize].clone());
                let want = stable.coefficient(&Exponents::t(d));
                if got != want {
                    return fail(format!("g={g} n={n} d={d}: {got} vs stable {want}"));
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

/// Random coefficient tables: 1..=4 entries, `|c| ≤ 3`, `m ≤ 2`, `|l| ≤ 2`,
/// with t- and q-orders up to `max_order`.
pub fn random_ell_family(
    seed: u64,
    count: usize,
    max_order: u32,
) -> Vec<(EllCoefficients, u32, u32, (i32, i32))> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut coeffs = EllCoefficients::new();
            let size = rng.gen_range(1..=4);
            while coeffs.iter().count() < size {
                let m = rng.gen_range(0..=2);
                let l = rng.gen_range(-2..=2);
                let c = rng.gen_range(-3..=3);
                let _ = coeffs.insert(m, l, c);
            }
            let t_order = rng.gen_range(1..=max_order);
            let q_order = rng.gen_range(0..=max_order);
            let y = rng.gen_range(0..=4);
            (coeffs, t_order, q_order, (-y, y))
        })
        .collect()
}

pub const DMVV_SEED: u64 = 0x5eed_0d37;

fn dmvv(b: &Bounds) -> SuiteResult {
    for (i, (coeffs, t, q, y)) in random_ell_family(DMVV_SEED, b.dmvv_cases, b.dmvv_order)
        .into_iter()
        .enumerate()
    {
        if !core(dmvv_log_check(&coeffs, t, q, y))? {
            return fail(format!(
                "log check failed on case {i}: {coeffs:?} t={t} q={q} y={y:?}"
            ));
        }
    }
    let two = core(dmvv_series(&EllCoefficients::constant(2), 6, 0, (0, 0)))?;
    let want = [1, 2, 5, 10, 20];
    for (n, w) in want.iter().enumerate() {
        let got = two.coefficient(&Exponents::t(n as u32));
        if got != rat(*w) {
            return fail(format!("two-colored partitions of {n}: {got}, want {w}"));
        }
    }
    let s2 = resolve(&SpaceSpec::Sphere(2));
    for n in 1..=6u32 {
        let brute = Rational::from_integer(core(orbifold_euler_bruteforce(&s2, n))?);
        let got = two.coefficient(&Exponents::t(n));
        if got != brute {
            return fail(format!(
                "orbifold χ of (S^2)^{n}: product {got}, classes {brute}"
            ));
        }
    }
    Ok(b.dmvv_cases + want.len() + 6)
}

fn cycle_index_dual_form(b: &Bounds) -> SuiteResult {
    let mut seeds: Vec<GenusSeed> = (-3..=3).map(GenusSeed::Euler).collect();
    for g in 0..=b.genus {
        seeds.push(chi_y_seed(g));
        seeds.push(ell_seed(g));
    }
    let order = b.order.min(7);
    for seed in &seeds {
        let exp_form = core(cycle_index_genus(*seed, order))?;
        let class_sum = core(cycle_index_sum(*seed, order))?;
        if exp_form != class_sum {
            return fail(format!("{seed:?}: {exp_form} vs {class_sum}"));
        }
    }
    Ok(seeds.len())
}

fn euler_vs_macdonald(b: &Bounds) -> SuiteResult {
    let spaces: Vec<GradedSpace> = oracle_spaces().iter().map(resolve).collect();
    for space in &spaces {
        // t-order must cover the whole q^n slice: n times the top degree
        let t_order = b.macdonald_n * space.top_degree() as u32;
        let m = core(macdonald_series(space, b.macdonald_n, t_order))?;
        let at_minus_one = core(m.substitute(Var::T, &rat(-1)))?;
        let euler = core(euler_sp_series(space, b.macdonald_n))?;
        if at_minus_one != euler {
            return fail(format!(
                "{space}: t=-1 gives {at_minus_one}, expected {euler}"
            ));
        }
    }
    Ok(spaces.len())
}
