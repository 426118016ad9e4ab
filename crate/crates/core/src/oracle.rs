//! Brute-force verification: grid enumeration, exhaustive bound checks and
//! order-axiom fuzzing.
//!
//! Extremes are found by a linear scan with [`compare`], never through the
//! level statistics of [`crate::chain`], so the two routes can be checked
//! against each other.

use std::cmp::Ordering;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chain::{self, ChainError};
use crate::ivifn::Ivifn;
use crate::order::{compare, subset_leq, OrderSelector};
use crate::rational::Rational;

/// Default seed for randomised suites.
pub const DEFAULT_SEED: u64 = 0x1F1F_2024;

/// Largest denominator used by [`Sampler`].
pub const MAX_DENOMINATOR: i64 = 60;

/// Witnesses kept per suite; the violation count is always exact.
const MAX_WITNESSES: usize = 16;

/// Every IVIFN whose bounds are multiples of `1/k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub resolution: u32,
    pub members: Vec<Ivifn>,
}

impl Grid {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Enumerates the grid of resolution `k`, ordered by `(mu_lo, mu_hi, nu_lo, nu_hi)` numerators.
pub fn enumerate_grid(k: u32) -> Grid {
    assert!(k >= 1, "grid resolution must be positive");
    let k = i64::from(k);
    let mut members = Vec::new();
    for mu_lo in 0..=k {
        for mu_hi in mu_lo..=k {
            for nu_lo in 0..=(k - mu_hi) {
                for nu_hi in nu_lo..=(k - mu_hi) {
                    let member = Ivifn::from_ratios((mu_lo, k), (mu_hi, k), (nu_lo, k), (nu_hi, k))
                        .expect("grid points satisfy the IVIFN constraints");
                    members.push(member);
                }
            }
        }
    }
    Grid {
        resolution: k as u32,
        members,
    }
}

/// Extreme of a family found by a linear scan with `compare`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremeReport {
    pub value: Ivifn,
    /// Whether [`chain::join`] (or [`chain::meet`]) returned the same element.
    pub agrees_with_lattice_op: bool,
    /// Whether the level-statistics route ([`chain::supremum`] / [`chain::infimum`]) agreed.
    pub agrees_with_level_statistics: bool,
}

fn scan(omega: &[Ivifn], order: OrderSelector, keep: Ordering) -> Option<Ivifn> {
    let mut best = omega.first()?;
    for a in &omega[1..] {
        if compare(a, best, order).relation == keep {
            best = a;
        }
    }
    Some(best.clone())
}

/// The maximum of a finite family, cross-checked against the lattice operations.
pub fn brute_lub(omega: &[Ivifn], order: OrderSelector) -> Result<ExtremeReport, ChainError> {
    let value = scan(omega, order, Ordering::Greater).ok_or(ChainError::EmptyFamily)?;
    let via_stats = chain::level_statistics(omega, order).and_then(|cs| chain::supremum(&cs));
    Ok(ExtremeReport {
        agrees_with_lattice_op: chain::join(omega, order) == value,
        agrees_with_level_statistics: via_stats.as_ref() == Ok(&value),
        value,
    })
}

/// The minimum of a finite family, cross-checked against the lattice operations.
pub fn brute_glb(omega: &[Ivifn], order: OrderSelector) -> Result<ExtremeReport, ChainError> {
    let value = scan(omega, order, Ordering::Less).ok_or(ChainError::EmptyFamily)?;
    let via_stats = chain::lower_level_statistics(omega, order).and_then(|cs| chain::infimum(&cs));
    Ok(ExtremeReport {
        agrees_with_lattice_op: chain::meet(omega, order) == value,
        agrees_with_level_statistics: via_stats.as_ref() == Ok(&value),
        value,
    })
}

/// Why a candidate failed a bound check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundViolation {
    /// Some family member lies on the wrong side of the candidate.
    NotABound { member: Ivifn },
    /// A grid element is a tighter bound than the candidate.
    NotTightest { better: Ivifn },
}

fn check_bound(
    candidate: &Ivifn,
    family: &[Ivifn],
    grid: &Grid,
    order: OrderSelector,
    above: Ordering,
) -> Result<(), BoundViolation> {
    let below = above.reverse();
    let cand = order.keys(candidate);
    let fam: Vec<_> = family.iter().map(|a| order.keys(a)).collect();
    if let Some(i) = fam.iter().position(|k| k.cmp(&cand) == above) {
        return Err(BoundViolation::NotABound {
            member: family[i].clone(),
        });
    }
    for u in &grid.members {
        let ku = order.keys(u);
        if ku.cmp(&cand) == below && fam.iter().all(|k| k.cmp(&ku) != above) {
            return Err(BoundViolation::NotTightest { better: u.clone() });
        }
    }
    Ok(())
}

/// Checks that `candidate` bounds `family` from above and that no grid element
/// strictly below it does too.
pub fn check_least_upper_bound(
    candidate: &Ivifn,
    family: &[Ivifn],
    grid: &Grid,
    order: OrderSelector,
) -> Result<(), BoundViolation> {
    check_bound(candidate, family, grid, order, Ordering::Greater)
}

/// Checks that `candidate` bounds `family` from below and that no grid element
/// strictly above it does too.
pub fn check_greatest_lower_bound(
    candidate: &Ivifn,
    family: &[Ivifn],
    grid: &Grid,
    order: OrderSelector,
) -> Result<(), BoundViolation> {
    check_bound(candidate, family, grid, order, Ordering::Less)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    Totality,
    Antisymmetry,
    Transitivity,
    Admissibility,
    /// Level-statistics supremum or join disagreed with the brute-force maximum.
    LeastUpperBound,
    /// Level-statistics infimum or meet disagreed with the brute-force minimum.
    GreatestLowerBound,
    /// Keys did not invert back to the original number.
    RoundTrip,
}

/// A counterexample found by a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witnesses: Vec<Ivifn>,
}

/// Outcome of one verification suite, in the shape emitted as JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub order: OrderSelector,
    pub checked: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub seed: Option<u64>,
}

impl SuiteReport {
    fn new(suite: impl Into<String>, order: OrderSelector, seed: Option<u64>) -> Self {
        SuiteReport {
            suite: suite.into(),
            order,
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
            seed,
        }
    }

    fn record(&mut self, axiom: Axiom, witnesses: &[&Ivifn]) {
        self.violation_count += 1;
        if self.violations.len() < MAX_WITNESSES {
            self.violations.push(Violation {
                axiom,
                witnesses: witnesses.iter().map(|w| (*w).clone()).collect(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Recorded witnesses for `axiom` (capped, unlike `violation_count`).
    pub fn count(&self, axiom: Axiom) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }
}

/// Which axioms [`axiom_suite_with`] should test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomChecks {
    pub pairs: bool,
    pub triples: bool,
    pub admissibility: bool,
}

impl AxiomChecks {
    pub const ALL: AxiomChecks = AxiomChecks {
        pairs: true,
        triples: true,
        admissibility: true,
    };
}

/// Totality, antisymmetry, transitivity and admissibility of `order` over every
/// pair and triple of `sample`.
pub fn axiom_suite(sample: &[Ivifn], order: OrderSelector) -> SuiteReport {
    let mut report = axiom_suite_with(sample, |a, b| order.cmp(a, b), AxiomChecks::ALL);
    report.order = order;
    report
}

/// [`axiom_suite`] over an arbitrary comparator.
pub fn axiom_suite_with<F>(sample: &[Ivifn], cmp: F, checks: AxiomChecks) -> SuiteReport
where
    F: Fn(&Ivifn, &Ivifn) -> Ordering,
{
    let mut report = SuiteReport::new("axioms", OrderSelector::default(), None);
    let n = sample.len();
    let table: Vec<Vec<Ordering>> = sample
        .iter()
        .map(|a| sample.iter().map(|b| cmp(a, b)).collect())
        .collect();
    let leq = |i: usize, j: usize| table[i][j] != Ordering::Greater;

    for i in 0..n {
        for j in 0..n {
            let (a, b) = (&sample[i], &sample[j]);
            if checks.pairs {
                report.checked += 1;
                if table[i][j] != table[j][i].reverse() {
                    report.record(Axiom::Totality, &[a, b]);
                }
                if table[i][j] == Ordering::Equal && a != b {
                    report.record(Axiom::Antisymmetry, &[a, b]);
                }
            }
            if checks.admissibility && subset_leq(a, b) {
                report.checked += 1;
                if !leq(i, j) {
                    report.record(Axiom::Admissibility, &[a, b]);
                }
            }
            if checks.triples && leq(i, j) {
                for (k, c) in sample.iter().enumerate() {
                    report.checked += 1;
                    if leq(j, k) && !leq(i, k) {
                        report.record(Axiom::Transitivity, &[a, b, c]);
                    }
                }
            }
        }
    }
    report
}

/// Seeded generator of random rational IVIFNs and grid subsets.
pub struct Sampler {
    rng: ChaCha8Rng,
    seed: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn numerators(&mut self) -> (i64, [i64; 4]) {
        let d = self.rng.gen_range(1..=MAX_DENOMINATOR);
        let mu_hi = self.rng.gen_range(0..=d);
        let nu_hi = self.rng.gen_range(0..=d - mu_hi);
        let mu_lo = self.rng.gen_range(0..=mu_hi);
        let nu_lo = self.rng.gen_range(0..=nu_hi);
        (d, [mu_lo, mu_hi, nu_lo, nu_hi])
    }

    fn build(d: i64, q: [i64; 4]) -> Ivifn {
        Ivifn::from_ratios((q[0], d), (q[1], d), (q[2], d), (q[3], d))
            .expect("sampled bounds are valid")
    }

    /// A random IVIFN with a common denominator of at most [`MAX_DENOMINATOR`].
    pub fn ivifn(&mut self) -> Ivifn {
        let (d, q) = self.numerators();
        Self::build(d, q)
    }

    /// A random pair `(a, b)` with `a ⊆ b`.
    pub fn subset_pair(&mut self) -> (Ivifn, Ivifn) {
        let (d, [b_mu_lo, b_mu_hi, b_nu_lo, b_nu_hi]) = self.numerators();
        let mu_hi = self.rng.gen_range(0..=b_mu_hi);
        let mu_lo = self.rng.gen_range(0..=b_mu_lo.min(mu_hi));
        let nu_hi = self.rng.gen_range(b_nu_hi..=d - mu_hi);
        let nu_lo = self.rng.gen_range(b_nu_lo..=nu_hi);
        (
            Self::build(d, [mu_lo, mu_hi, nu_lo, nu_hi]),
            Self::build(d, [b_mu_lo, b_mu_hi, b_nu_lo, b_nu_hi]),
        )
    }

    /// A random nonempty subset of `grid` with at most `max_size` members, in grid order.
    pub fn grid_subset(&mut self, grid: &Grid, max_size: usize) -> Vec<Ivifn> {
        let size = self.rng.gen_range(1..=max_size.min(grid.len()));
        let mut idx = sample(&mut self.rng, grid.len(), size).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| grid.members[i].clone()).collect()
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }
}

/// Runs every verification suite for `order`: order axioms over the whole grid,
/// admissibility on random containment pairs (HZX only), supremum/infimum against
/// brute-force extremes on random grid subsets, and key-projection round trips.
pub fn verify(grid_k: u32, order: OrderSelector, seed: u64, trials: usize) -> Vec<SuiteReport> {
    let grid = enumerate_grid(grid_k);
    let mut sampler = Sampler::new(seed);
    let mut reports = Vec::new();

    let checks = AxiomChecks {
        pairs: true,
        triples: true,
        admissibility: order == OrderSelector::Hzx,
    };
    let mut axioms = axiom_suite_with(&grid.members, |a, b| order.cmp(a, b), checks);
    axioms.suite = format!("axioms/grid{grid_k}");
    axioms.order = order;
    reports.push(axioms);

    if order == OrderSelector::Hzx {
        let mut adm = SuiteReport::new("admissibility/random", order, Some(seed));
        for _ in 0..trials {
            let (a, b) = sampler.subset_pair();
            adm.checked += 1;
            if order.cmp(&a, &b) == Ordering::Greater {
                adm.record(Axiom::Admissibility, &[&a, &b]);
            }
        }
        reports.push(adm);
    }

    let mut random_pairs = SuiteReport::new("axioms/random", order, Some(seed));
    for _ in 0..trials {
        let (a, b) = (sampler.ivifn(), sampler.ivifn());
        random_pairs.checked += 1;
        let (ab, ba) = (order.cmp(&a, &b), order.cmp(&b, &a));
        if ab != ba.reverse() {
            random_pairs.record(Axiom::Totality, &[&a, &b]);
        }
        if ab == Ordering::Equal && a != b {
            random_pairs.record(Axiom::Antisymmetry, &[&a, &b]);
        }
    }
    reports.push(random_pairs);

    for (name, lub, axiom) in [
        ("supremum/grid-subsets", true, Axiom::LeastUpperBound),
        ("infimum/grid-subsets", false, Axiom::GreatestLowerBound),
    ] {
        let mut rep = SuiteReport::new(name, order, Some(seed));
        for _ in 0..trials {
            let omega = sampler.grid_subset(&grid, 12);
            rep.checked += 1;
            let found = if lub {
                brute_lub(&omega, order)
            } else {
                brute_glb(&omega, order)
            };
            let ok = found
                .map(|r| r.agrees_with_lattice_op && r.agrees_with_level_statistics)
                .unwrap_or(false);
            if !ok {
                rep.violation_count += 1;
                if rep.violations.len() < MAX_WITNESSES {
                    rep.violations.push(Violation {
                        axiom,
                        witnesses: omega,
                    });
                }
            }
        }
        reports.push(rep);
    }

    let mut round_trip = SuiteReport::new("round-trip", order, Some(seed));
    for a in grid
        .members
        .iter()
        .cloned()
        .chain((0..trials).map(|_| sampler.ivifn()))
    {
        round_trip.checked += 1;
        if chain::from_stats(order, order.keys(&a)).as_ref() != Ok(&a) {
            round_trip.record(Axiom::RoundTrip, &[&a]);
        }
    }
    reports.push(round_trip);
    reports
}

/// `sum_{j=0..k} (j+1) * sum_{l=0..k-j} (l+1)`, the closed-form grid size.
pub fn grid_count(k: u32) -> u64 {
    let k = u64::from(k);
    (0..=k)
        .map(|j| (j + 1) * (0..=k - j).map(|l| l + 1).sum::<u64>())
        .sum()
}

/// `value` as a fraction with denominator `k`, if it is one.
pub fn on_grid(value: &Rational, k: u32) -> bool {
    let scaled = value * Rational::from(i64::from(k));
    scaled.denom() == &num_bigint::BigInt::from(1)
}
