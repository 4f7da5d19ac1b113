//! Cyclic triads: classification of 3-subtournaments and three ways of
//! counting the cyclic ones.
//!
//! `c3_enumerative` classifies every triple and is the ground truth.
//! `c3_fast` uses out-degrees only and is the default path. `c3_from_dr`
//! recovers the count from the local directionality.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TriadClass {
    /// Directed 3-cycle; in-degrees inside the triple are (1, 1, 1).
    Regular,
    /// Total order on the three vertices; in-degrees are (0, 1, 2).
    Transitive,
}

/// Binomial coefficient over `u64`; callers stay far below overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `2 * C(n+1, 3)`, the directionality of a transitive n-tournament and the
/// largest possible one.
pub fn max_directionality(n: usize) -> u64 {
    2 * binomial(n as u64 + 1, 3)
}

pub fn classify_triad(t: &Tournament, u: usize, v: usize, w: usize) -> Result<TriadClass> {
    t.check_pair(u, v)?;
    t.check_pair(v, w)?;
    t.check_pair(u, w)?;
    Ok(classify_unchecked(t, u, v, w))
}

#[inline]
pub(crate) fn classify_unchecked(t: &Tournament, u: usize, v: usize, w: usize) -> TriadClass {
    let uv = t.beats(u, v);
    if uv == t.beats(v, w) && uv == t.beats(w, u) {
        TriadClass::Regular
    } else {
        TriadClass::Transitive
    }
}

/// Counts cyclic triads by classifying all `C(n, 3)` triples.
pub fn c3_enumerative(t: &Tournament) -> u64 {
    let n = t.n();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if classify_unchecked(t, i, j, k) == TriadClass::Regular {
                    count += 1;
                }
            }
        }
    }
    count
}

/// `C(n,3) - Σ_v C(out(v), 2)`: every transitive triple has exactly one
/// vertex beating the other two.
pub fn c3_fast(t: &Tournament) -> u64 {
    c3_from_in_degrees(&t.in_degrees())
}

pub(crate) fn c3_from_in_degrees(in_degrees: &[usize]) -> u64 {
    let n = in_degrees.len();
    let transitive: u64 = in_degrees
        .iter()
        .map(|&d| binomial((n - 1 - d) as u64, 2))
        .sum();
    binomial(n as u64, 3) - transitive
}

/// Cyclic triad count implied by a directionality value: `(2·C(n+1,3) - dr) / 8`.
pub fn c3_from_dr(n: usize, dr: u64) -> Result<u64> {
    let max = max_directionality(n);
    if dr > max {
        return Err(Error::Unrealizable {
            n,
            quantity: "dr",
            value: dr,
            reason: "exceeds 2*C(n+1,3)",
        });
    }
    let gap = max - dr;
    if !gap.is_multiple_of(8) {
        return Err(Error::Unrealizable {
            n,
            quantity: "dr",
            value: dr,
            reason: "2*C(n+1,3) - dr is not divisible by 8",
        });
    }
    Ok(gap / 8)
}

/// Directionality implied by a cyclic triad count: `2·C(n+1,3) - 8·c3`.
pub fn dr_from_c3(n: usize, c3: u64) -> Result<u64> {
    let max = max_directionality(n);
    match c3.checked_mul(8) {
        Some(d) if d <= max => Ok(max - d),
        _ => Err(Error::Unrealizable {
            n,
            quantity: "c3",
            value: c3,
            reason: "8*c3 exceeds 2*C(n+1,3)",
        }),
    }
}
