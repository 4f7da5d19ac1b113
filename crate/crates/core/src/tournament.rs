//! The tournament type and its degree and directionality arithmetic.

use bitvec::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

/// Widest orientation that still fits in a `u64` code.
pub const MAX_CODE_PAIRS: usize = 64;

/// A complete oriented graph on `n` vertices.
///
/// One bit is stored per unordered pair `{i, j}` with `i < j`, in
/// lexicographic order of `(i, j)`. A set bit means the edge `i → j`, a clear
/// bit means `j → i`. Completeness and the absence of reciprocal edges hold
/// by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    bits: BitVec<u64, Lsb0>,
}

/// In, out and signed degree of every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSummary {
    pub in_degrees: Vec<usize>,
    pub out_degrees: Vec<usize>,
    pub signed_degrees: Vec<i64>,
}

/// Number of unordered vertex pairs, `n(n-1)/2`.
#[inline]
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Lexicographic rank of the pair `(i, j)`, `i < j < n`.
#[inline]
pub fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl Tournament {
    /// Builds a tournament where `beats(i, j)` decides the edge between
    /// `i < j`: `true` gives `i → j`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Self {
        let mut bits = BitVec::with_capacity(pair_count(n));
        for i in 0..n {
            for j in i + 1..n {
                bits.push(beats(i, j));
            }
        }
        Tournament { n, bits }
    }

    /// Decodes the tournament whose pair of rank `r` is oriented by bit `r`
    /// of `code`.
    pub fn from_code(n: usize, code: u64) -> Result<Self> {
        let pairs = pair_count(n);
        if pairs > MAX_CODE_PAIRS {
            return Err(Error::CodeTooWide {
                n,
                pairs,
                limit: MAX_CODE_PAIRS,
            });
        }
        if pairs < 64 && code >> pairs != 0 {
            return Err(Error::CodeOutOfRange { code, pairs });
        }
        let mut bits = BitVec::with_capacity(pairs);
        bits.extend((0..pairs).map(|r| code >> r & 1 == 1));
        Ok(Tournament { n, bits })
    }

    /// Inverse of [`Tournament::from_code`]; `None` when there are more than
    /// 64 pairs.
    pub fn code(&self) -> Option<u64> {
        if self.bits.len() > MAX_CODE_PAIRS {
            return None;
        }
        Some(
            self.bits
                .iter()
                .by_vals()
                .enumerate()
                .fold(0u64, |acc, (r, b)| acc | (u64::from(b) << r)),
        )
    }

    pub(crate) fn from_bit_iter(n: usize, bits: impl IntoIterator<Item = bool>) -> Self {
        let bits: BitVec<u64, Lsb0> = bits.into_iter().collect();
        debug_assert_eq!(bits.len(), pair_count(n));
        Tournament { n, bits }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Orientation bits in lexicographic pair order.
    pub fn orientation_bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().by_vals()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::RepeatedVertex(u));
        }
        Ok(())
    }

    /// Whether the edge between `u` and `v` points `u → v`. Panics on
    /// `u == v` or out-of-range vertices.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        assert!(u != v, "no edge joins vertex {u} to itself");
        if u < v {
            self.bits[pair_rank(self.n, u, v)]
        } else {
            !self.bits[pair_rank(self.n, v, u)]
        }
    }

    /// Reverses the edge between `u` and `v` in place.
    #[inline]
    pub(crate) fn toggle(&mut self, u: usize, v: usize) {
        let (i, j) = if u < v { (u, v) } else { (v, u) };
        let r = pair_rank(self.n, i, j);
        let b = self.bits[r];
        self.bits.set(r, !b);
    }

    pub fn in_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| u != v && self.beats(u, v)).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.n - 1 - self.in_degree(v)
    }

    /// In-degrees of all vertices in one pass over the pairs.
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        let mut bits = self.bits.iter().by_vals();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if bits.next().unwrap_or_default() {
                    deg[j] += 1;
                } else {
                    deg[i] += 1;
                }
            }
        }
        deg
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        let in_degrees = self.in_degrees();
        let out_degrees: Vec<usize> = in_degrees.iter().map(|&d| self.n - 1 - d).collect();
        let signed_degrees = in_degrees
            .iter()
            .zip(&out_degrees)
            .map(|(&i, &o)| i as i64 - o as i64)
            .collect();
        DegreeSummary {
            in_degrees,
            out_degrees,
            signed_degrees,
        }
    }

    /// Signed degrees `in - out`, taken in this tournament.
    pub fn signed_degrees(&self) -> Vec<i64> {
        let last = self.n as i64 - 1;
        self.in_degrees()
            .into_iter()
            .map(|d| 2 * d as i64 - last)
            .collect()
    }

    /// Validates `vertices` and returns them sorted with duplicates removed.
    fn vertex_set(&self, vertices: &[usize]) -> Result<Vec<usize>> {
        let mut set = vertices.to_vec();
        for &v in &set {
            self.check_vertex(v)?;
        }
        set.sort_unstable();
        set.dedup();
        Ok(set)
    }

    /// Sum of the signed degrees of `vertices`, degrees taken in the whole
    /// tournament. Repeated vertices count once.
    pub fn signed_degree_subset(&self, vertices: &[usize]) -> Result<i64> {
        let set = self.vertex_set(vertices)?;
        let sd = self.signed_degrees();
        Ok(set.iter().map(|&v| sd[v]).sum())
    }

    /// Sum of squared signed degrees of `vertices`, degrees taken in the
    /// whole tournament.
    pub fn directionality_subset(&self, vertices: &[usize]) -> Result<u64> {
        let set = self.vertex_set(vertices)?;
        let sd = self.signed_degrees();
        Ok(set.iter().map(|&v| (sd[v] * sd[v]) as u64).sum())
    }

    /// Directionality of the full vertex set, `Dr(t)`.
    pub fn local_directionality(&self) -> u64 {
        self.signed_degrees()
            .into_iter()
            .map(|s| (s * s) as u64)
            .sum()
    }

    /// The subtournament induced on `vertices`, relabeled `0..len` in
    /// increasing original order.
    pub fn induced_subtournament(&self, vertices: &[usize]) -> Result<Tournament> {
        let set = self.vertex_set(vertices)?;
        Ok(Tournament::from_fn(set.len(), |a, b| {
            self.beats(set[a], set[b])
        }))
    }

    /// True iff the edges form a strict total order, tested as "the
    /// out-degrees are a permutation of `0..n`".
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.n];
        for d in self.in_degrees() {
            let out = self.n - 1 - d;
            if std::mem::replace(&mut seen[out], true) {
                return false;
            }
        }
        true
    }

    /// True iff every vertex has equal in- and out-degree.
    pub fn is_regular(&self) -> bool {
        self.signed_degrees().iter().all(|&s| s == 0)
    }
}

impl std::fmt::Debug for Tournament {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let bits: String = self
            .orientation_bits()
            .map(|b| if b { '1' } else { '0' })
            .collect();
        f.debug_struct("Tournament")
            .field("n", &self.n)
            .field("bits", &bits)
            .finish()
    }
}
