//! Edge reversal and the constant-time change it causes in the local
//! directionality and in the cyclic triad count.
//!
//! With `k = in(w) - in(v)`, reversing an edge `v → w` changes `Dr` by
//! `-8(k-1)` and `c3` by `k-1`; reversing `w → v` changes `Dr` by `+8(k+1)`
//! and `c3` by `-(k+1)`. Both formulas hold for every pair; the ordering
//! condition `sd(v) >= sd(w)` is only reported, never required.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::tournament::Tournament;
use crate::triads::{self, TriadClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FlipCase {
    /// The current edge is `v → w`.
    Forward,
    /// The current edge is `w → v`.
    Backward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlipReport {
    pub v: usize,
    pub w: usize,
    pub case: FlipCase,
    /// `in(w) - in(v)` before the flip.
    pub k: i64,
    pub dr_delta: i64,
    pub c3_delta: i64,
    /// Whether `sd(v) >= sd(w)` held before the flip.
    pub hypothesis_satisfied: bool,
}

impl FlipReport {
    fn from_degrees(v: usize, w: usize, forward: bool, in_v: usize, in_w: usize) -> Self {
        let k = in_w as i64 - in_v as i64;
        let (case, dr_delta, c3_delta) = if forward {
            (FlipCase::Forward, -8 * (k - 1), k - 1)
        } else {
            (FlipCase::Backward, 8 * (k + 1), -(k + 1))
        };
        FlipReport {
            v,
            w,
            case,
            k,
            dr_delta,
            c3_delta,
            // sd = 2*in - (n-1), so comparing in-degrees suffices
            hypothesis_satisfied: in_v >= in_w,
        }
    }
}

/// Cyclic triads through the flipped edge that disappear and appear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct TriadCensus {
    pub destroyed: u64,
    pub created: u64,
}

impl TriadCensus {
    pub fn net(&self) -> i64 {
        self.created as i64 - self.destroyed as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConeDirection {
    /// Every new edge leaves the new vertex.
    AllOut,
    /// Every new edge enters the new vertex.
    AllIn,
}

/// Copy of `t` with the edge between `u` and `v` reversed.
pub fn flip_edge(t: &Tournament, u: usize, v: usize) -> Result<Tournament> {
    t.check_pair(u, v)?;
    let mut flipped = t.clone();
    flipped.toggle(u, v);
    Ok(flipped)
}

/// Predicts the change in `Dr` and `c3` from reversing the edge between `v`
/// and `w`. The case comes from the stored orientation, so `(v, w)` and
/// `(w, v)` describe the same flip and give the same deltas.
pub fn predict_flip(t: &Tournament, v: usize, w: usize) -> Result<FlipReport> {
    t.check_pair(v, w)?;
    Ok(FlipReport::from_degrees(
        v,
        w,
        t.beats(v, w),
        t.in_degree(v),
        t.in_degree(w),
    ))
}

/// Brute-force count, over every third vertex `u`, of the triads `{u, v, w}`
/// whose class changes when the edge `v–w` is reversed.
pub fn flip_triad_census(t: &Tournament, v: usize, w: usize) -> Result<TriadCensus> {
    let flipped = flip_edge(t, v, w)?;
    let mut census = TriadCensus::default();
    for u in (0..t.n()).filter(|&u| u != v && u != w) {
        let before = triads::classify_unchecked(t, u, v, w) == TriadClass::Regular;
        let after = triads::classify_unchecked(&flipped, u, v, w) == TriadClass::Regular;
        match (before, after) {
            (true, false) => census.destroyed += 1,
            (false, true) => census.created += 1,
            _ => {}
        }
    }
    Ok(census)
}

/// Adds vertex `n` joined to every existing vertex in the given direction.
/// The cyclic triad count is unchanged and `Dr` grows by `n² + n`.
pub fn cone_extend(t: &Tournament, direction: ConeDirection) -> Tournament {
    let n = t.n();
    let apex_bit = match direction {
        // pair (i, n) with bit clear means n → i
        ConeDirection::AllOut => false,
        ConeDirection::AllIn => true,
    };
    Tournament::from_fn(n + 1, |i, j| if j == n { apex_bit } else { t.beats(i, j) })
}

/// A tournament with cached in-degrees, `Dr` and `c3`, kept exact across
/// edge flips in constant time per flip.
#[derive(Debug, Clone)]
pub struct IncrementalTracker {
    current: Tournament,
    in_degrees: Vec<usize>,
    dr: u64,
    c3: u64,
    flips_applied: u64,
}

impl IncrementalTracker {
    pub fn new(t: Tournament) -> Self {
        let in_degrees = t.in_degrees();
        let dr = t.local_directionality();
        let c3 = triads::c3_from_in_degrees(&in_degrees);
        IncrementalTracker {
            current: t,
            in_degrees,
            dr,
            c3,
            flips_applied: 0,
        }
    }

    pub fn current(&self) -> &Tournament {
        &self.current
    }

    pub fn in_degrees(&self) -> &[usize] {
        &self.in_degrees
    }

    pub fn dr(&self) -> u64 {
        self.dr
    }

    pub fn c3(&self) -> u64 {
        self.c3
    }

    pub fn flips_applied(&self) -> u64 {
        self.flips_applied
    }

    pub fn into_tournament(self) -> Tournament {
        self.current
    }

    /// Same report as [`predict_flip`], from the cached degrees.
    pub fn predict(&self, v: usize, w: usize) -> Result<FlipReport> {
        self.current.check_pair(v, w)?;
        Ok(FlipReport::from_degrees(
            v,
            w,
            self.current.beats(v, w),
            self.in_degrees[v],
            self.in_degrees[w],
        ))
    }

    /// Reverses the edge between `v` and `w` and updates every cache. On
    /// error the tracker is untouched.
    pub fn apply_flip(&mut self, v: usize, w: usize) -> Result<FlipReport> {
        let report = self.predict(v, w)?;
        let (winner, loser) = match report.case {
            FlipCase::Forward => (v, w),
            FlipCase::Backward => (w, v),
        };
        self.current.toggle(v, w);
        self.in_degrees[winner] += 1;
        self.in_degrees[loser] -= 1;
        self.dr = self
            .dr
            .checked_add_signed(report.dr_delta)
            .expect("directionality stays nonnegative");
        self.c3 = self
            .c3
            .checked_add_signed(report.c3_delta)
            .expect("cyclic triad count stays nonnegative");
        self.flips_applied += 1;
        Ok(report)
    }

    /// True iff every cache equals a from-scratch recomputation.
    pub fn is_consistent(&self) -> bool {
        self.in_degrees == self.current.in_degrees()
            && self.dr == self.current.local_directionality()
            && self.c3 == triads::c3_fast(&self.current)
    }
}

/// Endless seeded stream of vertex pairs `(v, w)`, `v != w`, uniform over
/// ordered pairs of `0..n`. Needs `n >= 2`.
pub struct RandomFlips {
    n: u64,
    rng: ChaCha8Rng,
}

impl RandomFlips {
    pub fn new(n: usize, seed: u64) -> Self {
        assert!(n >= 2, "a flip needs at least two vertices");
        RandomFlips {
            n: n as u64,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for RandomFlips {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let v = self.rng.gen_range(0..self.n);
        let mut w = self.rng.gen_range(0..self.n - 1);
        if w >= v {
            w += 1;
        }
        Some((v as usize, w as usize))
    }
}
