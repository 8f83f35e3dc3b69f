//! Shared strategies for the property tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use hlc_core::homalg::Vertex;
use hlc_core::spaces::{Cover, FilteredComplex};
use hlc_core::value::ratio;
use hlc_core::Value;
use proptest::prelude::*;

/// Simplices on `0..n` as vertex lists of size 2 to 4.
pub fn simplex_lists(n: u32, max: usize) -> impl Strategy<Value = Vec<Vec<Vertex>>> {
    prop::collection::vec(prop::collection::btree_set(0..n, 2..=4), 0..=max)
        .prop_map(|sets| sets.into_iter().filter(|s| s.len() >= 2).map(|s| s.into_iter().collect()).collect())
}

/// Half-integer values in `[0, top / 2]`.
pub fn half_values(n: usize, top: i64) -> impl Strategy<Value = Vec<Value>> {
    prop::collection::vec((0..=top).prop_map(|k| ratio(k, 2)), n)
}

/// A lower-star filtration on `n` vertices with half-integer values.
pub fn filtered(n: u32, max_simplices: usize) -> impl Strategy<Value = FilteredComplex> {
    (simplex_lists(n, max_simplices), half_values(n as usize, 6)).prop_map(move |(simplices, values)| {
        let names = (0..n).map(|i| format!("v{i}")).collect();
        FilteredComplex::new(names, values, simplices).expect("valid complex")
    })
}

/// Cover of the sublevel at `t`: the masked subsets that meet it, plus a
/// singleton for every vertex they miss.
pub fn cover_from_masks(fc: &FilteredComplex, t: &Value, masks: &[u32]) -> Cover {
    let verts = fc.sublevel_vertices(t);
    let mut sets: Vec<BTreeSet<Vertex>> = masks
        .iter()
        .map(|m| verts.iter().copied().filter(|v| m & (1 << v) != 0).collect::<BTreeSet<_>>())
        .filter(|s| !s.is_empty())
        .collect();
    let covered: BTreeSet<Vertex> = sets.iter().flatten().copied().collect();
    sets.extend(verts.iter().filter(|v| !covered.contains(v)).map(|&v| BTreeSet::from([v])));
    Cover::from_sets(fc, t.clone(), sets)
}

/// A coarsening of `alpha` at index `t`: members grouped by `labels` and
/// merged, plus the masked subsets of the sublevel and singletons for
/// any vertex still missed.
pub fn coarsen(fc: &FilteredComplex, alpha: &Cover, t: &Value, labels: &[usize], masks: &[u32]) -> Cover {
    let groups = labels.iter().copied().max().unwrap_or(0) + 1;
    let mut sets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); groups];
    for (i, u) in alpha.sets().enumerate() {
        sets[labels.get(i).copied().unwrap_or(0)].extend(u.iter().copied());
    }
    let verts = fc.sublevel_vertices(t);
    sets.extend(masks.iter().map(|m| verts.iter().copied().filter(|v| m & (1 << v) != 0).collect()));
    let covered: BTreeSet<Vertex> = sets.iter().flatten().copied().collect();
    sets.extend(verts.iter().filter(|v| !covered.contains(v)).map(|&v| BTreeSet::from([v])));
    Cover::from_sets(fc, t.clone(), sets)
}
