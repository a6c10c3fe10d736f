//! Generating-function formulas against their combinatorial oracles.

use num_bigint::BigInt;

use symprod_core::invariants::{
    betti_sp, chi_y_seed, cycle_index_genus, cycle_index_sum, ell_seed, euler_sp_series,
    macdonald_series, projective_bundle_betti, stable_betti_series, GenusSeed,
};
use symprod_core::orbifold::{dmvv_series, orbifold_euler_bruteforce, EllCoefficients};
use symprod_core::series::rat;
use symprod_core::topology::{
    cycle_types, graded_perm_trace_oracle, resolve, sym_power_dims_oracle, CycleType, GradedSpace,
    SpaceSpec,
};
use symprod_core::{Exponents, Rational, Selector, Var};

/// Every Betti list with entries in degrees 0..=max_degree and total rank
/// between 1 and max_rank.
fn betti_family(max_degree: usize, max_rank: u64) -> Vec<GradedSpace> {
    let mut out = Vec::new();
    let mut current = vec![0u64; max_degree + 1];
    fn rec(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<GradedSpace>, max_rank: u64) {
        if i == cur.len() {
            if left < max_rank {
                out.push(GradedSpace::new(cur.clone()));
            }
            return;
        }
        for b in 0..=left {
            cur[i] = b;
            rec(i + 1, left - b, cur, out, max_rank);
        }
        cur[i] = 0;
    }
    rec(0, max_rank, &mut current, &mut out, max_rank);
    out.sort_by(|a, b| a.betti().cmp(b.betti()));
    out.dedup();
    out
}

#[test]
fn macdonald_equals_symmetric_algebra_dimensions() {
    let family = betti_family(4, 5);
    assert!(family.len() > 100);
    for space in &family {
        let series = macdonald_series(space, 5, 8).unwrap();
        let dims = sym_power_dims_oracle(space, 5, 8);
        for n in 0..=5u32 {
            let slice = series.coeff(Selector::q(n)).unwrap();
            for d in 0..=8u32 {
                assert_eq!(
                    slice.coefficient(&Exponents::t(d)),
                    rat(dims.get(d as usize, n as usize) as i64),
                    "space {space}, n = {n}, d = {d}"
                );
            }
        }
    }
}

/// Trace of σ on `H^*(X)^{⊗n}` summed over the whole basis: apply σ to
/// every basis tensor and keep the diagonal entries.
fn full_basis_trace(space: &GradedSpace, perm: &[usize]) -> i64 {
    let gens = space.generator_degrees();
    let n = perm.len();
    let m = gens.len();
    if m == 0 {
        return if n == 0 { 1 } else { 0 };
    }
    let mut total = 0;
    let mut idx = vec![0usize; n];
    loop {
        // σ sends the factor in position p to position perm[p]
        let mut image = vec![0usize; n];
        for p in 0..n {
            image[perm[p]] = idx[p];
        }
        if image == idx {
            // sign from moving odd factors past each other: count inversions
            // of the odd factors' positions under σ
            let odd: Vec<usize> = (0..n).filter(|&p| gens[idx[p]] % 2 == 1).collect();
            let mut inversions = 0;
            for a in 0..odd.len() {
                for b in a + 1..odd.len() {
                    if perm[odd[a]] > perm[odd[b]] {
                        inversions += 1;
                    }
                }
            }
            let koszul = if inversions % 2 == 0 { 1 } else { -1 };
            let degree: usize = idx.iter().map(|&i| gens[i]).sum();
            let weight = if degree.is_multiple_of(2) { 1 } else { -1 };
            total += koszul * weight;
        }
        let mut k = 0;
        loop {
            if k == n {
                return total;
            }
            idx[k] += 1;
            if idx[k] < m {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn fixed_tensor_trace_matches_full_basis_trace() {
    for space in betti_family(3, 3) {
        for n in 1..=4 {
            for sigma in cycle_types(n) {
                assert_eq!(
                    graded_perm_trace_oracle(&space, &sigma),
                    full_basis_trace(&space, &sigma.representative()),
                    "space {space}, σ = {sigma}"
                );
            }
        }
    }
}

#[test]
fn equivariant_trace_depends_only_on_cycle_count() {
    for space in betti_family(4, 4) {
        let chi = space.euler_char();
        for n in 1..=4 {
            for sigma in cycle_types(n) {
                assert_eq!(
                    graded_perm_trace_oracle(&space, &sigma),
                    chi.pow(sigma.num_cycles() as u32),
                    "space {space}, σ = {sigma}"
                );
            }
            let n_cycle = CycleType::from_lengths(&[n]).unwrap();
            assert_eq!(graded_perm_trace_oracle(&space, &n_cycle), chi);
        }
    }
}

#[test]
fn averaged_traces_give_euler_characteristic_of_quotient() {
    // χ(SP^n X) = (1/n!) ∑_σ χ(σ, X^n)
    for space in betti_family(3, 4) {
        let euler = euler_sp_series(&space, 4).unwrap();
        for n in 0..=4u32 {
            let mut sum = BigInt::from(0);
            for sigma in cycle_types(n as usize) {
                sum += BigInt::from(sigma.class_size()) * graded_perm_trace_oracle(&space, &sigma);
            }
            let factorial: BigInt = (1..=n as u64).product::<u64>().into();
            assert_eq!(
                Rational::new(sum, factorial),
                euler.coefficient(&Exponents::q(n)),
                "space {space}, n = {n}"
            );
        }
    }
}

#[test]
fn exterior_algebra_vanishing() {
    for m in 1..=4u64 {
        let space = GradedSpace::new(vec![0, m]);
        let dims = sym_power_dims_oracle(&space, 6, 8);
        for n in (m as usize + 1)..=6 {
            assert!(dims.row(n).iter().all(|&v| v == 0));
        }
    }
}

#[test]
fn cycle_index_dual_forms_agree() {
    let mut seeds: Vec<GenusSeed> = (-3..=3).map(GenusSeed::Euler).collect();
    for g in 0..=4 {
        seeds.push(chi_y_seed(g));
        seeds.push(ell_seed(g));
    }
    for seed in seeds {
        assert_eq!(
            cycle_index_genus(seed, 7).unwrap(),
            cycle_index_sum(seed, 7).unwrap(),
            "{seed:?}"
        );
    }
}

#[test]
fn fibration_product_law() {
    for g in 0..=3u32 {
        let surface = resolve(&SpaceSpec::ClosedSurface { genus: g });
        for n in 0..=6u32 {
            if (n as i64) <= 2 * g as i64 - 2 {
                continue;
            }
            assert_eq!(
                betti_sp(&surface, n, 2 * n).unwrap(),
                projective_bundle_betti(g, n).unwrap(),
                "g = {g}, n = {n}"
            );
        }
    }
}

#[test]
fn betti_numbers_stabilize() {
    for g in 0..=3u32 {
        let surface = resolve(&SpaceSpec::ClosedSurface { genus: g });
        let stable = stable_betti_series(g, 6).unwrap();
        for n in 0..=6u32 {
            let betti = betti_sp(&surface, n, 2 * n).unwrap();
            for d in 0..=n {
                assert_eq!(
                    Rational::from_integer(betti[d as usize].clone()),
                    stable.coefficient(&Exponents::t(d)),
                    "g = {g}, n = {n}, d = {d}"
                );
            }
        }
    }
}

#[test]
fn macdonald_at_t_minus_one_is_euler_series() {
    for space in betti_family(4, 5) {
        let m = macdonald_series(&space, 5, 20).unwrap();
        assert_eq!(
            m.substitute(Var::T, &rat(-1)).unwrap(),
            euler_sp_series(&space, 5).unwrap(),
            "space {space}"
        );
    }
}

#[test]
fn orbifold_euler_matches_product_formula() {
    for chi in -2..=3i64 {
        let space = if chi >= 0 {
            GradedSpace::new(vec![chi as u64])
        } else {
            GradedSpace::new(vec![1, (1 - chi) as u64])
        };
        assert_eq!(space.euler_char(), chi);
        let product = dmvv_series(&EllCoefficients::constant(chi), 6, 0, (0, 0)).unwrap();
        for n in 1..=6u32 {
            assert_eq!(
                Rational::from_integer(orbifold_euler_bruteforce(&space, n).unwrap()),
                product.coefficient(&Exponents::t(n)),
                "χ = {chi}, n = {n}"
            );
        }
    }
}

#[test]
fn colored_partition_counts_are_nonnegative_integers() {
    for c in 0..=4 {
        let s = dmvv_series(&EllCoefficients::constant(c), 8, 0, (0, 0)).unwrap();
        for (_, v) in s.terms() {
            assert!(v.is_integer() && *v > rat(0));
        }
    }
}
