//! Tournament generators and the sweep engine that checks the flip, cone and
//! directionality identities over every labeled tournament up to a size, or
//! over seeded random samples.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::flip::{self, ConeDirection, IncrementalTracker};
use crate::tournament::{pair_count, Tournament};
use crate::triads::{self, binomial};

/// Largest pair count `enumerate_all` accepts.
pub const MAX_ENUMERATION_PAIRS: usize = 62;

/// Edge `i → j` for every `i < j`.
pub fn transitive_tournament(n: usize) -> Tournament {
    Tournament::from_fn(n, |_, _| true)
}

/// Edge `i → j` iff `(j - i) mod n` lies in `1..=(n-1)/2`. Regular; only
/// exists for odd `n`.
pub fn rotational_tournament(n: usize) -> Result<Tournament> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenRegular(n));
    }
    let half = (n - 1) / 2;
    Ok(Tournament::from_fn(n, |i, j| j - i <= half))
}

/// Uniformly random labeled tournament.
///
/// The generator is ChaCha8 seeded with `seed` through
/// `SeedableRng::seed_from_u64`. Pairs are visited in lexicographic order
/// and each takes the top bit of one `next_u64()` call; a set bit orients
/// the pair `i → j`. The output depends only on `(n, seed)`.
pub fn random_tournament(n: usize, seed: u64) -> Tournament {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Tournament::from_bit_iter(n, (0..pair_count(n)).map(|_| rng.next_u64() >> 63 == 1))
}

/// Every labeled tournament on `n` vertices, ordered by code.
#[derive(Debug, Clone)]
pub struct AllTournaments {
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for AllTournaments {
    type Item = Tournament;

    fn next(&mut self) -> Option<Tournament> {
        if self.next >= self.end {
            return None;
        }
        let t = Tournament::from_code(self.n, self.next).expect("code within range");
        self.next += 1;
        Some(t)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllTournaments {}

/// Number of labeled tournaments on `n` vertices, `2^C(n,2)`, if it fits
/// the enumeration bound.
pub fn labeled_count(n: usize) -> Result<u64> {
    let pairs = pair_count(n);
    if pairs > MAX_ENUMERATION_PAIRS {
        return Err(Error::CodeTooWide {
            n,
            pairs,
            limit: MAX_ENUMERATION_PAIRS,
        });
    }
    Ok(1u64 << pairs)
}

pub fn enumerate_all(n: usize) -> Result<AllTournaments> {
    Ok(AllTournaments {
        n,
        next: 0,
        end: labeled_count(n)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    /// Directionality change under a flip.
    Prop1,
    /// Cyclic triad change under a flip, plus the destroyed/created census.
    Prop2,
    /// `Dr = 2·C(n+1,3) - 8·c3`.
    Prop3,
    /// Adding a cone vertex keeps `c3` and adds `n² + n` to `Dr`.
    ConeCase,
    /// Rebuilding a tournament from its all-out cone one flip at a time.
    FlipComposition,
    /// `c3_fast` agrees with `c3_enumerative`.
    FastC3Agreement,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Prop1,
        Property::Prop2,
        Property::Prop3,
        Property::ConeCase,
        Property::FlipComposition,
        Property::FastC3Agreement,
    ];

    /// Sub-cases checked per tournament in an exhaustive sweep.
    pub fn cases_per_tournament(self, n: usize) -> u64 {
        let n = n as u64;
        match self {
            Property::Prop1 | Property::Prop2 => n * n.saturating_sub(1),
            Property::Prop3 | Property::FastC3Agreement => 1,
            Property::ConeCase => 2,
            Property::FlipComposition => n,
        }
    }

    /// Sub-cases checked per tournament in a sampled sweep. Flip properties
    /// check one random ordered pair instead of all of them.
    pub fn cases_per_sample(self, n: usize) -> u64 {
        match self {
            Property::Prop1 | Property::Prop2 => u64::from(n >= 2),
            other => other.cases_per_tournament(n),
        }
    }

    /// Exhaustive sweep cardinality over `0..=max_n`.
    pub fn exhaustive_cardinality(self, max_n: usize) -> Result<u64> {
        (0..=max_n).try_fold(0u64, |acc, n| {
            Ok(acc + labeled_count(n)? * self.cases_per_tournament(n))
        })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Prop1 => "prop1",
            Property::Prop2 => "prop2",
            Property::Prop3 => "prop3",
            Property::ConeCase => "cone",
            Property::FlipComposition => "composition",
            Property::FastC3Agreement => "fastc3",
        })
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "prop1" => Ok(Property::Prop1),
            "2" | "prop2" => Ok(Property::Prop2),
            "3" | "prop3" => Ok(Property::Prop3),
            "cone" | "conecase" => Ok(Property::ConeCase),
            "composition" | "flipcomposition" => Ok(Property::FlipComposition),
            "fastc3" | "fastc3agreement" => Ok(Property::FastC3Agreement),
            _ => Err(Error::UnknownProperty(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleSpec {
    pub n: usize,
    pub count: u64,
    pub seed: u64,
}

impl SampleSpec {
    /// Seed of the `index`-th sampled tournament.
    pub fn instance_seed(&self, index: u64) -> u64 {
        self.seed.wrapping_add(index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sweep {
    /// Every labeled tournament with `0 <= n <= max_n`.
    Exhaustive { max_n: usize },
    /// `count` random tournaments on `n` vertices.
    Sampled(SampleSpec),
}

/// Enough to rebuild the tournament a check ran on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Instance {
    Labeled {
        n: usize,
        code: u64,
    },
    Random {
        n: usize,
        seed: u64,
    },
    /// A pure binomial identity at `n`; no tournament involved.
    Identity {
        n: usize,
    },
}

impl Instance {
    pub fn tournament(&self) -> Option<Tournament> {
        match *self {
            Instance::Labeled { n, code } => Tournament::from_code(n, code).ok(),
            Instance::Random { n, seed } => Some(random_tournament(n, seed)),
            Instance::Identity { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Detail {
    None,
    Pair { v: usize, w: usize },
    Cone(ConeDirection),
    BaseVertex(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub instance: Instance,
    pub detail: Detail,
    /// Which quantity disagreed, e.g. `"dr_delta"`.
    pub check: &'static str,
    pub expected: i64,
    pub actual: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub property: Property,
    /// Inclusive range of vertex counts covered.
    pub n_range: (usize, usize),
    pub instances_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    #[serde(rename = "elapsed_secs", serialize_with = "as_secs")]
    pub elapsed: Duration,
}

fn as_secs<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    fn empty(property: Property, n_range: (usize, usize)) -> Self {
        VerificationReport {
            property,
            n_range,
            instances_checked: 0,
            counterexamples: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// Combines reports for the same property from disjoint partitions.
    /// Associative and commutative; counterexamples end up sorted.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        assert_eq!(
            self.property, other.property,
            "cannot merge different properties"
        );
        self.n_range = (
            self.n_range.0.min(other.n_range.0),
            self.n_range.1.max(other.n_range.1),
        );
        self.instances_checked += other.instances_checked;
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort();
        self.elapsed += other.elapsed;
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} n={}..={}  checked={:<9} counterexamples={:<4} {:>9.3}s  {}",
            self.property.to_string(),
            self.n_range.0,
            self.n_range.1,
            self.instances_checked,
            self.counterexamples.len(),
            self.elapsed.as_secs_f64(),
            if self.verified() {
                "VERIFIED"
            } else {
                "FAILED"
            }
        )
    }
}

/// Runs one property over a sweep. Exhaustive sweeps are partitioned by
/// vertex count and code and checked in parallel; the merged report does
/// not depend on scheduling.
pub fn verify_property(property: Property, sweep: &Sweep) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = match *sweep {
        Sweep::Exhaustive { max_n } => {
            labeled_count(max_n)?;
            let mut report = VerificationReport::empty(property, (0, max_n));
            report.counterexamples = preamble(property);
            for n in 0..=max_n {
                let total = labeled_count(n)?;
                let partial = (0..total)
                    .into_par_iter()
                    .fold(
                        || VerificationReport::empty(property, (n, n)),
                        |mut acc, code| {
                            let t = Tournament::from_code(n, code).expect("code within range");
                            let instance = Instance::Labeled { n, code };
                            acc.instances_checked +=
                                check_exhaustive(property, &t, instance, &mut acc.counterexamples);
                            acc
                        },
                    )
                    .reduce(
                        || VerificationReport::empty(property, (n, n)),
                        VerificationReport::merge,
                    );
                report = report.merge(partial);
            }
            report
        }
        Sweep::Sampled(spec) => {
            let mut report = VerificationReport::empty(property, (spec.n, spec.n));
            report.counterexamples = preamble(property);
            let partial = (0..spec.count)
                .into_par_iter()
                .fold(
                    || VerificationReport::empty(property, (spec.n, spec.n)),
                    |mut acc, index| {
                        let seed = spec.instance_seed(index);
                        let t = random_tournament(spec.n, seed);
                        let instance = Instance::Random { n: spec.n, seed };
                        // the enumerative count is O(n³); cross-check it on 1%
                        let full_oracle = index % 100 == 0;
                        acc.instances_checked += check_sampled(
                            property,
                            &t,
                            instance,
                            seed,
                            full_oracle,
                            &mut acc.counterexamples,
                        );
                        acc
                    },
                )
                .reduce(
                    || VerificationReport::empty(property, (spec.n, spec.n)),
                    VerificationReport::merge,
                );
            report.merge(partial)
        }
    };
    report.counterexamples.sort();
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs every property over the same sweep.
pub fn verify_all(sweep: &Sweep) -> Result<Vec<VerificationReport>> {
    Property::ALL
        .iter()
        .map(|&p| verify_property(p, sweep))
        .collect()
}

/// Largest `n` checked by the binomial identity preamble.
pub const IDENTITY_MAX_N: usize = 50;

/// `2·[C(n+2,3) - C(n+1,3)] = 2·C(n+1,2) = n² + n`, checked arithmetically.
pub fn cone_binomial_identity_failures(max_n: usize) -> Vec<Counterexample> {
    (0..=max_n)
        .filter_map(|n| {
            let m = n as u64;
            let lhs = 2 * (binomial(m + 2, 3) - binomial(m + 1, 3));
            let via_edges = 2 * binomial(m + 1, 2);
            let rhs = m * m + m;
            (lhs != rhs || via_edges != rhs).then_some(Counterexample {
                instance: Instance::Identity { n },
                detail: Detail::None,
                check: "cone_binomial_identity",
                expected: rhs as i64,
                actual: lhs as i64,
            })
        })
        .collect()
}

fn preamble(property: Property) -> Vec<Counterexample> {
    match property {
        Property::Prop3 | Property::ConeCase => cone_binomial_identity_failures(IDENTITY_MAX_N),
        _ => Vec::new(),
    }
}

fn push_if_differs(
    out: &mut Vec<Counterexample>,
    instance: Instance,
    detail: Detail,
    check: &'static str,
    expected: i64,
    actual: i64,
) {
    if expected != actual {
        out.push(Counterexample {
            instance,
            detail,
            check,
            expected,
            actual,
        });
    }
}

fn check_exhaustive(
    property: Property,
    t: &Tournament,
    instance: Instance,
    out: &mut Vec<Counterexample>,
) -> u64 {
    let n = t.n();
    match property {
        Property::Prop1 | Property::Prop2 => {
            let dr = t.local_directionality() as i64;
            let c3 = triads::c3_enumerative(t) as i64;
            for v in 0..n {
                for w in (0..n).filter(|&w| w != v) {
                    check_flip(property, t, instance, v, w, dr, c3, out);
                }
            }
        }
        Property::Prop3 => check_prop3(t, instance, triads::c3_enumerative(t), out),
        Property::ConeCase => check_cone(t, instance, out),
        Property::FlipComposition => {
            for base in 0..n {
                check_composition(t, instance, base, out);
            }
        }
        Property::FastC3Agreement => check_fast_c3(t, instance, out),
    }
    property.cases_per_tournament(n)
}

fn check_sampled(
    property: Property,
    t: &Tournament,
    instance: Instance,
    seed: u64,
    full_oracle: bool,
    out: &mut Vec<Counterexample>,
) -> u64 {
    let n = t.n();
    match property {
        Property::Prop1 | Property::Prop2 => {
            if n >= 2 {
                // a stream independent of the one that built the tournament
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
                let v = rng.gen_range(0..n as u64) as usize;
                let mut w = rng.gen_range(0..n as u64 - 1) as usize;
                if w >= v {
                    w += 1;
                }
                let dr = t.local_directionality() as i64;
                let c3 = triads::c3_enumerative(t) as i64;
                check_flip(property, t, instance, v, w, dr, c3, out);
            }
        }
        Property::Prop3 => {
            let fast = triads::c3_fast(t);
            if full_oracle {
                let slow = triads::c3_enumerative(t);
                push_if_differs(
                    out,
                    instance,
                    Detail::None,
                    "c3_fast",
                    slow as i64,
                    fast as i64,
                );
            }
            check_prop3(t, instance, fast, out);
        }
        other => return check_exhaustive(other, t, instance, out),
    }
    property.cases_per_sample(n)
}

#[allow(clippy::too_many_arguments)]
fn check_flip(
    property: Property,
    t: &Tournament,
    instance: Instance,
    v: usize,
    w: usize,
    dr_before: i64,
    c3_before: i64,
    out: &mut Vec<Counterexample>,
) {
    let detail = Detail::Pair { v, w };
    let report = flip::predict_flip(t, v, w).expect("distinct in-range pair");
    let flipped = flip::flip_edge(t, v, w).expect("distinct in-range pair");
    match property {
        Property::Prop1 => {
            let actual = flipped.local_directionality() as i64 - dr_before;
            push_if_differs(out, instance, detail, "dr_delta", actual, report.dr_delta);
        }
        Property::Prop2 => {
            let actual = triads::c3_enumerative(&flipped) as i64 - c3_before;
            push_if_differs(out, instance, detail, "c3_delta", actual, report.c3_delta);
            let census = flip::flip_triad_census(t, v, w).expect("distinct in-range pair");
            push_if_differs(
                out,
                instance,
                detail,
                "census",
                report.c3_delta,
                census.net(),
            );
            push_if_differs(
                out,
                instance,
                detail,
                "coupling",
                -8 * report.c3_delta,
                report.dr_delta,
            );
        }
        _ => unreachable!("not a flip property"),
    }
}

fn check_prop3(t: &Tournament, instance: Instance, c3: u64, out: &mut Vec<Counterexample>) {
    let expected = triads::max_directionality(t.n()) as i64 - 8 * c3 as i64;
    let dr = t.local_directionality() as i64;
    push_if_differs(out, instance, Detail::None, "dr", expected, dr);
}

fn check_cone(t: &Tournament, instance: Instance, out: &mut Vec<Counterexample>) {
    let n = t.n() as i64;
    let dr = t.local_directionality() as i64;
    let c3 = triads::c3_enumerative(t) as i64;
    for direction in [ConeDirection::AllOut, ConeDirection::AllIn] {
        let cone = flip::cone_extend(t, direction);
        let detail = Detail::Cone(direction);
        let c3_change = triads::c3_enumerative(&cone) as i64 - c3;
        push_if_differs(out, instance, detail, "cone_c3_delta", 0, c3_change);
        let dr_change = cone.local_directionality() as i64 - dr;
        push_if_differs(out, instance, detail, "cone_dr_delta", n * n + n, dr_change);
    }
}

/// Orients every edge at `base` away from it, then flips the edges that
/// point into `base` in `t` back one at a time with a tracker.
fn check_composition(
    t: &Tournament,
    instance: Instance,
    base: usize,
    out: &mut Vec<Counterexample>,
) {
    let detail = Detail::BaseVertex(base);
    let mut rho = t.clone();
    let incoming: Vec<usize> = (0..t.n())
        .filter(|&u| u != base && t.beats(u, base))
        .collect();
    for &u in &incoming {
        rho.toggle(u, base);
    }
    let dr_rho = rho.local_directionality() as i64;
    let c3_rho = triads::c3_enumerative(&rho) as i64;

    let mut tracker = IncrementalTracker::new(rho);
    for &u in &incoming {
        tracker.apply_flip(base, u).expect("distinct in-range pair");
    }
    push_if_differs(
        out,
        instance,
        detail,
        "rebuild",
        1,
        i64::from(tracker.current() == t),
    );

    let dr_tau = t.local_directionality() as i64;
    let c3_tau = triads::c3_enumerative(t) as i64;
    push_if_differs(
        out,
        instance,
        detail,
        "composition_dr",
        dr_rho - 8 * (c3_tau - c3_rho),
        dr_tau,
    );
    push_if_differs(
        out,
        instance,
        detail,
        "tracker_dr",
        dr_tau,
        tracker.dr() as i64,
    );
    push_if_differs(
        out,
        instance,
        detail,
        "tracker_c3",
        c3_tau,
        tracker.c3() as i64,
    );
}

fn check_fast_c3(t: &Tournament, instance: Instance, out: &mut Vec<Counterexample>) {
    let slow = triads::c3_enumerative(t) as i64;
    let fast = triads::c3_fast(t) as i64;
    push_if_differs(out, instance, Detail::None, "c3_fast", slow, fast);
}
