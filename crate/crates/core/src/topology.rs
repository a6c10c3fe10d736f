//! Rational Betti data, conjugacy classes of S_n, and the brute-force
//! oracles every generating function is checked against.
//!
//! All homology is rational; torsion never appears.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// Rational Betti numbers `[β_0, β_1, …, β_D]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    betti: Vec<u64>,
}

impl GradedSpace {
    /// Trailing zeros are dropped so equal spaces compare equal.
    pub fn new(mut betti: Vec<u64>) -> Self {
        while betti.last() == Some(&0) {
            betti.pop();
        }
        GradedSpace { betti }
    }

    pub fn betti(&self) -> &[u64] {
        &self.betti
    }

    pub fn beta(&self, d: usize) -> u64 {
        self.betti.get(d).copied().unwrap_or(0)
    }

    /// Top degree with a nonzero Betti number (0 for the empty space).
    pub fn top_degree(&self) -> usize {
        self.betti.len().saturating_sub(1)
    }

    pub fn total_rank(&self) -> u64 {
        self.betti.iter().sum()
    }

    /// `∑ (-1)^d β_d`
    pub fn euler_char(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// One entry per basis vector of homology: its degree, in ascending
    /// degree order.
    pub fn generator_degrees(&self) -> Vec<usize> {
        self.betti
            .iter()
            .enumerate()
            .flat_map(|(d, &b)| std::iter::repeat_n(d, b as usize))
            .collect()
    }
}

impl fmt::Display for GradedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.betti.iter().map(u64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// `∑ (-1)^d β_d`
pub fn euler_char(space: &GradedSpace) -> i64 {
    space.euler_char()
}

/// Symbolic description of an input space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SpaceSpec {
    Sphere(u32),
    ClosedSurface {
        genus: u32,
    },
    /// Genus-g surface with k > 0 points removed. Kept separate from its
    /// homotopy type (a wedge of circles) because the signature of its
    /// symmetric powers depends on g.
    PuncturedSurface {
        genus: u32,
        punctures: u32,
    },
    ComplexProjective(u32),
    RealProjectivePlane,
    RawBetti(Vec<u64>),
}

impl SpaceSpec {
    pub fn resolve(&self) -> GradedSpace {
        resolve(self)
    }

    /// Genus, for surface specs.
    pub fn genus(&self) -> Option<u32> {
        match *self {
            SpaceSpec::ClosedSurface { genus } | SpaceSpec::PuncturedSurface { genus, .. } => {
                Some(genus)
            }
            SpaceSpec::Sphere(2) | SpaceSpec::ComplexProjective(1) => Some(0),
            _ => None,
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::Sphere(n) => write!(f, "sphere:{n}"),
            SpaceSpec::ClosedSurface { genus } => write!(f, "surface:g={genus}"),
            SpaceSpec::PuncturedSurface { genus, punctures } => {
                write!(f, "surface:g={genus},k={punctures}")
            }
            SpaceSpec::ComplexProjective(n) => write!(f, "cp:{n}"),
            SpaceSpec::RealProjectivePlane => f.write_str("rp2"),
            SpaceSpec::RawBetti(b) => {
                let parts: Vec<String> = b.iter().map(u64::to_string).collect();
                write!(f, "betti:{}", parts.join(","))
            }
        }
    }
}

pub fn resolve(spec: &SpaceSpec) -> GradedSpace {
    match *spec {
        SpaceSpec::Sphere(dim) => {
            let mut b = vec![0; dim as usize + 1];
            b[0] += 1;
            b[dim as usize] += 1;
            GradedSpace::new(b)
        }
        SpaceSpec::ClosedSurface { genus } => GradedSpace::new(vec![1, 2 * genus as u64, 1]),
        SpaceSpec::PuncturedSurface { genus, punctures } => {
            // wedge of 2g + k - 1 circles
            let circles = (2 * genus as u64 + punctures as u64).saturating_sub(1);
            GradedSpace::new(vec![1, circles])
        }
        SpaceSpec::ComplexProjective(n) => {
            GradedSpace::new((0..=2 * n as usize).map(|d| (d % 2 == 0) as u64).collect())
        }
        SpaceSpec::RealProjectivePlane => GradedSpace::new(vec![1]),
        SpaceSpec::RawBetti(ref b) => GradedSpace::new(b.clone()),
    }
}

/// Dimensions of `S^n(V)_d` indexed by degree and symmetric-power order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedDims {
    n_max: usize,
    d_max: usize,
    /// `dims[n][d]`
    dims: Vec<Vec<u64>>,
}

impl BigradedDims {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn get(&self, d: usize, n: usize) -> u64 {
        self.dims
            .get(n)
            .and_then(|row| row.get(d))
            .copied()
            .unwrap_or(0)
    }

    /// Degrees `0..=d_max` of `S^n(V)`.
    pub fn row(&self, n: usize) -> &[u64] {
        &self.dims[n]
    }
}

/// Dimensions of the graded-symmetric powers `S^n(V)` for `V` the rational
/// homology of `space`, found by listing a basis.
///
/// A basis of `S^n(V)` is a multiset of n generators in which no
/// odd-degree generator repeats. The enumeration walks generators in a
/// fixed order and chooses a multiplicity for each.
pub fn sym_power_dims_oracle(space: &GradedSpace, n_max: usize, d_max: usize) -> BigradedDims {
    let gens = space.generator_degrees();
    let mut dims = vec![vec![0u64; d_max + 1]; n_max + 1];

    fn walk(
        gens: &[usize],
        idx: usize,
        size: usize,
        degree: usize,
        n_max: usize,
        d_max: usize,
        dims: &mut [Vec<u64>],
    ) {
        if idx == gens.len() {
            dims[size][degree] += 1;
            return;
        }
        let deg = gens[idx];
        let max_mult = if deg % 2 == 1 { 1 } else { n_max - size };
        for mult in 0..=max_mult {
            let s = size + mult;
            let d = degree + mult * deg;
            if s > n_max || d > d_max {
                break;
            }
            walk(gens, idx + 1, s, d, n_max, d_max, dims);
        }
    }

    walk(&gens, 0, 0, 0, n_max, d_max, &mut dims);
    BigradedDims { n_max, d_max, dims }
}

/// A conjugacy class of `S_n` recorded by its cycle multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    n: usize,
    /// `alpha[r - 1]` is the number of r-cycles.
    alpha: Vec<usize>,
}

impl CycleType {
    /// `alpha[r - 1]` = number of r-cycles. Requires `∑ r·α_r = n`.
    pub fn new(n: usize, alpha: Vec<usize>) -> Result<Self> {
        let mut alpha = alpha;
        let total: usize = alpha.iter().enumerate().map(|(i, a)| (i + 1) * a).sum();
        if total != n {
            return Err(Error::InvalidCycleType(format!(
                "cycle lengths sum to {total}, expected {n}"
            )));
        }
        alpha.resize(n, 0);
        Ok(CycleType { n, alpha })
    }

    /// From the cycle lengths, e.g. `[2, 1]` for a transposition in S_3.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        let n: usize = lengths.iter().sum();
        let mut alpha = vec![0; n];
        for &r in lengths {
            if r == 0 {
                return Err(Error::InvalidCycleType("zero-length cycle".into()));
            }
            alpha[r - 1] += 1;
        }
        Ok(CycleType { n, alpha })
    }

    pub fn identity(n: usize) -> Self {
        let mut alpha = vec![0; n];
        if n > 0 {
            alpha[0] = n;
        }
        CycleType { n, alpha }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of r-cycles.
    pub fn alpha(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.alpha.get(r - 1).copied().unwrap_or(0)
    }

    /// `(r, α_r)` for every r with `α_r > 0`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.alpha
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i + 1, a))
    }

    pub fn num_cycles(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// Cycle lengths in non-increasing order.
    pub fn lengths(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for r in (1..=self.n).rev() {
            out.extend(std::iter::repeat_n(r, self.alpha(r)));
        }
        out
    }

    /// `∏ r^{α_r} α_r!`
    pub fn centralizer_order(&self) -> BigUint {
        self.multiplicities()
            .map(|(r, a)| BigUint::from(r).pow(a as u32) * factorial(a))
            .product()
    }

    /// `n! / ∏ r^{α_r} α_r!`
    pub fn class_size(&self) -> BigUint {
        factorial(self.n) / self.centralizer_order()
    }

    /// A representative permutation: cycles laid out on consecutive
    /// positions, longest first. `perm[i]` is the image of position i.
    pub fn representative(&self) -> Vec<usize> {
        let mut perm = Vec::with_capacity(self.n);
        let mut start = 0;
        for r in self.lengths() {
            for j in 0..r {
                perm.push(start + (j + 1) % r);
            }
            start += r;
        }
        perm
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .multiplicities()
            .map(|(r, a)| format!("{r}^{a}"))
            .collect();
        write!(f, "({})", parts.join(" "))
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Every conjugacy class of `S_n`, ordered by partition in ascending
/// lexicographic order of the non-increasing part list (so the identity
/// comes first and the n-cycle last). `n = 0` yields the empty class.
pub fn cycle_types(n: usize) -> Vec<CycleType> {
    let mut partitions = Vec::new();
    let mut current = Vec::new();

    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in 1..=remaining.min(max_part) {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }

    rec(n, n, &mut current, &mut partitions);
    partitions
        .iter()
        .map(|p| CycleType::from_lengths(p).expect("parts are positive"))
        .collect()
}

/// Parity (0 even, 1 odd) of a permutation given as an image vector.
pub(crate) fn permutation_parity(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2
}

/// Koszul sign of `σ` acting on the tensor whose factor degrees are
/// `degrees`, assuming that tensor is fixed by `σ`: the parity of the
/// permutation `σ` induces on the odd-degree positions.
pub(crate) fn koszul_sign(perm: &[usize], degrees: &[usize]) -> i64 {
    let odd: Vec<usize> = (0..perm.len()).filter(|&i| degrees[i] % 2 == 1).collect();
    let mut index_of = vec![usize::MAX; perm.len()];
    for (k, &pos) in odd.iter().enumerate() {
        index_of[pos] = k;
    }
    let induced: Vec<usize> = odd.iter().map(|&pos| index_of[perm[pos]]).collect();
    debug_assert!(induced.iter().all(|&k| k != usize::MAX));
    if permutation_parity(&induced) == 0 {
        1
    } else {
        -1
    }
}

/// Equivariant Euler characteristic `χ(σ, X^n) = ∑_j (-1)^j tr σ*|H^j(X^n)`
/// for σ a representative of `sigma`, computed from an explicit basis.
///
/// σ permutes the factors of a basis tensor, picking up a Koszul sign, so
/// only tensors constant along each cycle of σ contribute a diagonal
/// entry. Those are enumerated directly by choosing one generator per
/// cycle.
pub fn graded_perm_trace_oracle(space: &GradedSpace, sigma: &CycleType) -> i64 {
    let gens = space.generator_degrees();
    let perm = sigma.representative();
    let n = sigma.n();

    // cycle index of each position
    let mut cycle_of = vec![0usize; n];
    let mut num_cycles = 0;
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle_of[i] = num_cycles;
            i = perm[i];
        }
        num_cycles += 1;
    }

    if num_cycles > 0 && gens.is_empty() {
        return 0;
    }

    let mut choice = vec![0usize; num_cycles];
    let mut total = 0i64;
    let mut degrees = vec![0usize; n];
    loop {
        for pos in 0..n {
            degrees[pos] = gens[choice[cycle_of[pos]]];
        }
        let total_degree: usize = degrees.iter().sum();
        let weight = if total_degree.is_multiple_of(2) {
            1
        } else {
            -1
        };
        total += weight * koszul_sign(&perm, &degrees);

        // odometer over generator choices
        let mut k = 0;
        loop {
            if k == num_cycles {
                return total;
            }
            choice[k] += 1;
            if choice[k] < gens.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
