//! Brute-force oracles for integration tests. They read only the orientation
//! bits and rebuild everything from an adjacency matrix, so they share no
//! code path with the library's degree, directionality or triad routines.

#![allow(dead_code, clippy::needless_range_loop)]

use tournament_core::Tournament;

/// `adj[i][j]` is true iff `i → j`.
pub fn adjacency(t: &Tournament) -> Vec<Vec<bool>> {
    let n = t.n();
    let mut adj = vec![vec![false; n]; n];
    let mut bits = t.orientation_bits();
    for i in 0..n {
        for j in i + 1..n {
            let b = bits.next().expect("one bit per pair");
            adj[i][j] = b;
            adj[j][i] = !b;
        }
    }
    assert!(bits.next().is_none(), "extra orientation bits");
    adj
}

pub fn in_degrees(adj: &[Vec<bool>]) -> Vec<usize> {
    (0..adj.len())
        .map(|v| (0..adj.len()).filter(|&u| adj[u][v]).count())
        .collect()
}

pub fn signed_degrees(adj: &[Vec<bool>]) -> Vec<i64> {
    (0..adj.len())
        .map(|v| {
            let ins = (0..adj.len()).filter(|&u| adj[u][v]).count() as i64;
            let outs = (0..adj.len()).filter(|&u| adj[v][u]).count() as i64;
            ins - outs
        })
        .collect()
}

pub fn directionality(adj: &[Vec<bool>]) -> i64 {
    signed_degrees(adj).iter().map(|s| s * s).sum()
}

pub fn cyclic_triads(adj: &[Vec<bool>]) -> i64 {
    let n = adj.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let forward = adj[i][j] && adj[j][k] && adj[k][i];
                let backward = adj[j][i] && adj[k][j] && adj[i][k];
                if forward || backward {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Binomial coefficient by Pascal's rule.
pub fn choose(n: u64, k: u64) -> i64 {
    let n = n as usize;
    let k = k as usize;
    if k > n {
        return 0;
    }
    let mut row = vec![1i64; 1];
    for _ in 0..n {
        let mut next = vec![1i64; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k]
}

/// No 3-subset induces a cyclic triad and the relation is acyclic on triples.
pub fn is_total_order(adj: &[Vec<bool>]) -> bool {
    cyclic_triads(adj) == 0
}
