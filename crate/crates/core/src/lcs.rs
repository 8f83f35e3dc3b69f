//! The local connectedness shift of a lower-star filtration.
//!
//! The neighbourhood of a vertex `x` is its closed star `N` in the whole
//! complex; its trace on the sublevel at `s` is the full subcomplex on
//! `N ∩ K_s`, which is the minimal neighbourhood of `x` there. For real
//! `f(x) < s` and `s + δ < t` the sublevels only change at grid values, so
//! the source may sit at any grid value `g ≥ f(x)` and the hardest target
//! is the sublevel at the largest grid value `≤ g + δ`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::homalg::{is_trivial_inclusion, Field, HomalgError, SimplicialComplex, Vertex};
use crate::spaces::{FilteredComplex, SpacesError};
use crate::value::{abs_diff, int, Ext, Value};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LcsError {
    #[error(transparent)]
    Homalg(#[from] HomalgError),
    #[error(transparent)]
    Spaces(#[from] SpacesError),
    #[error("the two functions live on different complexes")]
    ComplexMismatch,
    #[error("delta must be nonnegative, got {0}")]
    NegativeDelta(Value),
}

/// One local inclusion at an exact pair `f(x) < s`, `s + δ < t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HlcRecord {
    pub vertex: Vertex,
    #[serde(with = "crate::value::exact")]
    pub s: Value,
    #[serde(with = "crate::value::exact")]
    pub t: Value,
    pub neighbourhood: Vec<Vertex>,
    pub trivial: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaHlcCertificate {
    #[serde(with = "crate::value::exact")]
    pub delta: Value,
    pub holds: bool,
    pub records: Vec<HlcRecord>,
}

/// For one vertex and source level, where local triviality starts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcsWitness {
    pub vertex: Vertex,
    #[serde(with = "crate::value::exact")]
    pub source: Value,
    #[serde(with = "crate::value::exact_opt")]
    pub trivial_from: Option<Value>,
    pub shift: Ext,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LcsReport {
    pub lcs: Ext,
    /// Largest candidate below `lcs` at which the filtration is not δ-HLC.
    #[serde(with = "crate::value::exact_opt")]
    pub next_smaller_failing: Option<Value>,
    pub witnesses: Vec<LcsWitness>,
}

struct Local {
    vertex: Vertex,
    neighbourhood: Vec<Vertex>,
    /// Traces of the neighbourhood on the sublevel at each grid value.
    traces: Vec<SimplicialComplex>,
}

fn locals(fc: &FilteredComplex) -> Vec<Local> {
    let top = fc.grid().last().cloned().unwrap_or_else(Value::zero);
    (0..fc.n_vertices() as Vertex)
        .map(|x| {
            let n = fc.open_star(x, &top).expect("every vertex is in the top sublevel");
            let full = fc.complex().full_subcomplex(&n);
            let traces = fc.grid().iter().map(|g| full.filter(|s| fc.simplex_value(s) <= *g)).collect();
            Local { vertex: x, neighbourhood: n.into_iter().collect(), traces }
        })
        .collect()
}

/// Index of the largest grid value `≤ v`.
fn floor_index(grid: &[Value], v: &Value) -> usize {
    grid.partition_point(|g| g <= v) - 1
}

/// Checks the δ-HLC condition over all real `s, t`, reduced to grid
/// levels. Each record carries an exact off-grid pair realizing the check.
pub fn delta_hlc_check<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    delta: &Value,
    max_degree: usize,
) -> Result<DeltaHlcCertificate, LcsError> {
    if delta < &Value::zero() {
        return Err(LcsError::NegativeDelta(delta.clone()));
    }
    let grid = fc.grid();
    let gap = fc.min_gap().unwrap_or_else(|| int(1));
    let locals = locals(fc);
    let per_vertex: Vec<Result<Vec<HlcRecord>, LcsError>> = locals
        .par_iter()
        .map(|loc| {
            let fx = fc.value(loc.vertex);
            let mut out = Vec::new();
            for (j, g) in grid.iter().enumerate().filter(|(_, g)| *g >= fx) {
                let reach = g + delta;
                let k = floor_index(grid, &reach);
                let up = grid.get(k + 1).map(|n| n - &reach).unwrap_or_else(|| gap.clone());
                let eps = gap.clone().min(up) / int(3);
                let trivial = is_trivial_inclusion(f, &loc.traces[j], &loc.traces[k], max_degree, true)?;
                out.push(HlcRecord {
                    vertex: loc.vertex,
                    s: g + &eps,
                    t: &reach + &eps * int(2),
                    neighbourhood: loc.neighbourhood.clone(),
                    trivial,
                });
            }
            Ok(out)
        })
        .collect();
    let mut records = Vec::new();
    for r in per_vertex {
        records.extend(r?);
    }
    let holds = records.iter().all(|r| r.trivial);
    Ok(DeltaHlcCertificate { delta: delta.clone(), holds, records })
}

/// Nonnegative differences of grid values, sorted, including 0.
pub fn candidate_deltas(fc: &FilteredComplex) -> Vec<Value> {
    let g = fc.grid();
    let mut out = vec![Value::zero()];
    for (i, a) in g.iter().enumerate() {
        for b in &g[i..] {
            out.push(b - a);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The least δ at which the filtration is δ-HLC, or infinity.
pub fn compute_lcs<F: Field>(f: &F, fc: &FilteredComplex, max_degree: usize) -> Result<LcsReport, LcsError> {
    let grid = fc.grid();
    let locals = locals(fc);
    let per_vertex: Vec<Result<Vec<LcsWitness>, LcsError>> = locals
        .par_iter()
        .map(|loc| {
            let fx = fc.value(loc.vertex);
            let mut out = Vec::new();
            for (j, g) in grid.iter().enumerate().filter(|(_, g)| *g >= fx) {
                let mut first = None;
                for (k, h) in grid.iter().enumerate().skip(j) {
                    if is_trivial_inclusion(f, &loc.traces[j], &loc.traces[k], max_degree, true)? {
                        first = Some(h.clone());
                        break;
                    }
                }
                let shift = match &first {
                    Some(v) => Ext::Finite(v - g),
                    None => Ext::Infinite,
                };
                out.push(LcsWitness { vertex: loc.vertex, source: g.clone(), trivial_from: first, shift });
            }
            Ok(out)
        })
        .collect();
    let mut witnesses = Vec::new();
    for w in per_vertex {
        witnesses.extend(w?);
    }
    let lcs = witnesses.iter().map(|w| w.shift.clone()).max().unwrap_or_else(Ext::zero);
    let next_smaller_failing = match &lcs {
        Ext::Finite(l) => candidate_deltas(fc).into_iter().filter(|c| c < l).max(),
        Ext::Infinite => candidate_deltas(fc).into_iter().max(),
    };
    Ok(LcsReport { lcs, next_smaller_failing, witnesses })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LipschitzReport {
    pub lcs_f: Ext,
    pub lcs_g: Ext,
    #[serde(with = "crate::value::exact")]
    pub sup_distance: Value,
    pub difference: Ext,
    #[serde(with = "crate::value::exact")]
    pub bound: Value,
    pub holds: bool,
}

/// Compares `|lcs(f) − lcs(g)|` with `2 ‖f − g‖_∞`.
pub fn lipschitz_check<F: Field>(
    f: &F,
    fc_f: &FilteredComplex,
    fc_g: &FilteredComplex,
    max_degree: usize,
) -> Result<LipschitzReport, LcsError> {
    if !fc_f.same_complex(fc_g) {
        return Err(LcsError::ComplexMismatch);
    }
    let a = compute_lcs(f, fc_f, max_degree)?.lcs;
    let b = compute_lcs(f, fc_g, max_degree)?.lcs;
    let sup = fc_f
        .values()
        .iter()
        .zip(fc_g.values())
        .map(|(x, y)| abs_diff(x, y))
        .max()
        .unwrap_or_else(Value::zero);
    let bound = &sup * int(2);
    let difference = match (&a, &b) {
        (Ext::Finite(x), Ext::Finite(y)) => Ext::Finite(abs_diff(x, y)),
        (Ext::Infinite, Ext::Infinite) => Ext::zero(),
        _ => Ext::Infinite,
    };
    let holds = difference <= Ext::Finite(bound.clone());
    Ok(LipschitzReport { lcs_f: a, lcs_g: b, sup_distance: sup, difference, bound, holds })
}
