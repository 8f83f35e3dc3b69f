//! Exact bottleneck distance between interval multisets.

use num_traits::Zero;

use super::persistence::{Barcode, Interval};
use crate::value::{abs_diff, ratio, Ext, Value};

/// Cost of matching an interval to the diagonal.
fn diagonal_cost(iv: &Interval) -> Value {
    match &iv.death {
        Ext::Finite(d) => (d - &iv.birth) * ratio(1, 2),
        Ext::Infinite => unreachable!("essential intervals are matched separately"),
    }
}

fn pair_cost(a: &Interval, b: &Interval) -> Value {
    match (&a.death, &b.death) {
        (Ext::Finite(da), Ext::Finite(db)) => abs_diff(&a.birth, &b.birth).max(abs_diff(da, db)),
        _ => unreachable!("essential intervals are matched separately"),
    }
}

/// Kuhn's augmenting-path matching; true if every left node is matched.
fn perfect_matching(adj: &[Vec<usize>], n_right: usize) -> bool {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none() || augment(owner[v].unwrap(), adj, seen, owner) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; n_right];
    for u in 0..adj.len() {
        let mut seen = vec![false; n_right];
        if !augment(u, adj, &mut seen, &mut owner) {
            return false;
        }
    }
    true
}

/// Whether a matching of cost at most `eps` exists between finite diagrams.
fn feasible(a: &[&Interval], b: &[&Interval], eps: &Value) -> bool {
    let (n, m) = (a.len(), b.len());
    // Left: a points then m diagonal slots. Right: b points then n diagonal slots.
    let mut adj = vec![Vec::new(); n + m];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if &pair_cost(x, y) <= eps {
                adj[i].push(j);
            }
        }
        if &diagonal_cost(x) <= eps {
            adj[i].push(m + i);
        }
    }
    for (j, y) in b.iter().enumerate() {
        if &diagonal_cost(y) <= eps {
            adj[n + j].push(j);
        }
        adj[n + j].extend((0..n).map(|i| m + i));
    }
    perfect_matching(&adj, n + m)
}

fn finite_bottleneck(a: &[&Interval], b: &[&Interval]) -> Value {
    let mut candidates: Vec<Value> = vec![Value::zero()];
    candidates.extend(a.iter().chain(b).map(|iv| diagonal_cost(iv)));
    for x in a {
        for y in b {
            candidates.push(pair_cost(x, y));
        }
    }
    candidates.sort();
    candidates.dedup();
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(a, b, &candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo].clone()
}

/// Bottleneck distance between two multisets of intervals.
pub fn diagram_bottleneck(a: &[Interval], b: &[Interval]) -> Ext {
    let mut ea: Vec<&Value> = a.iter().filter(|iv| iv.death.is_infinite()).map(|iv| &iv.birth).collect();
    let mut eb: Vec<&Value> = b.iter().filter(|iv| iv.death.is_infinite()).map(|iv| &iv.birth).collect();
    if ea.len() != eb.len() {
        return Ext::Infinite;
    }
    ea.sort();
    eb.sort();
    // Sorted order is optimal for matching points on a line.
    let essential = ea.iter().zip(&eb).map(|(x, y)| abs_diff(x, y)).max().unwrap_or_else(Value::zero);
    let fa: Vec<&Interval> = a.iter().filter(|iv| !iv.death.is_infinite()).collect();
    let fb: Vec<&Interval> = b.iter().filter(|iv| !iv.death.is_infinite()).collect();
    Ext::Finite(essential.max(finite_bottleneck(&fa, &fb)))
}

pub fn bottleneck_distance(b1: &Barcode, b2: &Barcode, dim: usize) -> Ext {
    diagram_bottleneck(b1.intervals(dim), b2.intervals(dim))
}
