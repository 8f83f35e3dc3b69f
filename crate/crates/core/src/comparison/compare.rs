use serde::Serialize;

use crate::homalg::{bottleneck_distance, Barcode, Field};
use crate::lcs::compute_lcs;
use crate::spaces::{CoverTower, FilteredComplex};
use crate::value::{int, Ext, Value};

use super::diagram::{verify_diagram, verify_diagram_with, DiagramReport};
use super::lambda::LambdaOptions;
use super::module::{cech_barcode, cech_covers, simplicial_barcode, CechCovers};
use super::ComparisonError;

/// Everything the comparison pipeline computes for one `(d, s, δ)`.
#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub d: usize,
    #[serde(with = "crate::value::exact")]
    pub s: Value,
    #[serde(with = "crate::value::exact")]
    pub delta: Value,
    pub lcs: Ext,
    /// Whether `δ > d · lcs`.
    pub hypothesis_holds: bool,
    /// Set when `d · lcs < δ ≤ (d+1) · lcs`, where the two thresholds disagree.
    pub threshold_discrepancy: bool,
    pub warnings: Vec<String>,
    /// Absent when a tower could not be built; see `tower_failure`.
    pub diagram: Option<DiagramReport>,
    pub tower_failure: Option<TowerFailure>,
    pub cech_covers: CechCovers,
    pub simplicial_barcode: Barcode,
    pub cech_barcode: Barcode,
    /// Bottleneck distance per degree `0..d`.
    pub bottleneck: Vec<Ext>,
    /// `d · lcs` plus the smallest grid gap.
    pub bound: Ext,
    pub bound_holds: bool,
    pub all_pass: bool,
}

/// The obstruction met by automatic tower construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerFailure {
    pub level: usize,
    pub message: String,
}

fn times(k: usize, e: &Ext) -> Ext {
    match e {
        Ext::Finite(v) => Ext::Finite(v * int(k as i64)),
        Ext::Infinite if k == 0 => Ext::zero(),
        Ext::Infinite => Ext::Infinite,
    }
}

/// Runs lcs, the diagram check on auto-built towers and the barcode
/// comparison. The lcs is taken over every homology degree of the complex.
/// A `δ` at or below `d · lcs` only produces a warning.
pub fn compare<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    d: usize,
    s: &Value,
    delta: &Value,
    covers: CechCovers,
) -> Result<CompareReport, ComparisonError>
where
    F::Elem: std::fmt::Debug,
{
    let lcs = full_lcs(f, fc, d)?;
    let diagram = match verify_diagram(f, fc, d, s, delta) {
        Ok(r) => Ok(r),
        Err(e @ ComparisonError::TowerFailed { level, .. }) => Err(TowerFailure { level, message: e.to_string() }),
        Err(e) => return Err(e),
    };
    finish(f, fc, d, s, delta, lcs, diagram, covers)
}

/// As [`compare`], with explicit towers on `[s, s+δ]` and `[s+δ, s+2δ]`.
pub fn compare_with_towers<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    d: usize,
    lower: &CoverTower,
    upper: &CoverTower,
    covers: CechCovers,
) -> Result<CompareReport, ComparisonError>
where
    F::Elem: std::fmt::Debug,
{
    let s = lower.bottom().index.clone();
    let delta = &lower.top().index - &s;
    let lcs = full_lcs(f, fc, d)?;
    let diagram = Ok(verify_diagram_with(f, fc, d, lower, upper, LambdaOptions::default())?);
    finish(f, fc, d, &s, &delta, lcs, diagram, covers)
}

fn full_lcs<F: Field>(f: &F, fc: &FilteredComplex, d: usize) -> Result<Ext, ComparisonError> {
    Ok(compute_lcs(f, fc, fc.complex().dim().unwrap_or(0).max(d.saturating_sub(1)))?.lcs)
}

#[allow(clippy::too_many_arguments)]
fn finish<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    d: usize,
    s: &Value,
    delta: &Value,
    lcs: Ext,
    diagram: Result<DiagramReport, TowerFailure>,
    covers: CechCovers,
) -> Result<CompareReport, ComparisonError> {
    let delta_ext = Ext::Finite(delta.clone());
    let low = times(d, &lcs);
    let high = times(d + 1, &lcs);
    let hypothesis_holds = delta_ext > low;
    let threshold_discrepancy = hypothesis_holds && delta_ext <= high;
    let mut warnings = Vec::new();
    if !hypothesis_holds {
        warnings.push(format!("delta {delta} does not exceed d·lcs = {low}; the interleaving is not guaranteed"));
    }
    if threshold_discrepancy {
        warnings.push(format!("delta {delta} exceeds d·lcs = {low} but not (d+1)·lcs = {high}"));
    }
    let simplicial = simplicial_barcode(f, fc, d.saturating_sub(1))?;
    let cech = cech_barcode(f, fc, d, &cech_covers(fc, covers))?;
    let bottleneck: Vec<Ext> = (0..d).map(|n| bottleneck_distance(&simplicial, &cech, n)).collect();
    let gap = fc.min_gap().unwrap_or_else(|| int(0));
    let bound = match &low {
        Ext::Finite(v) => Ext::Finite(v + gap),
        Ext::Infinite => Ext::Infinite,
    };
    let bound_holds = bottleneck.iter().all(|b| b <= &bound);
    let (diagram, tower_failure) = match diagram {
        Ok(r) => (Some(r), None),
        Err(t) => (None, Some(t)),
    };
    let all_pass = diagram.as_ref().is_some_and(|r| r.all_pass) && bound_holds;
    Ok(CompareReport {
        d,
        s: s.clone(),
        delta: delta.clone(),
        lcs,
        hypothesis_holds,
        threshold_discrepancy,
        warnings,
        diagram,
        tower_failure,
        cech_covers: covers,
        simplicial_barcode: simplicial,
        cech_barcode: cech,
        bottleneck,
        bound,
        bound_holds,
        all_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homalg::PrimeField;

    #[test]
    fn slow_cone_pipeline() {
        let f = PrimeField::f2();
        let fc = fixtures::slow_cone();
        let r = compare(&f, &fc, 1, &int(0), &int(2), CechCovers::OpenStars).unwrap();
        assert_eq!(r.lcs, Ext::Finite(int(1)));
        assert!(r.hypothesis_holds && r.threshold_discrepancy);
        assert!(r.diagram.as_ref().unwrap().all_pass && r.bound_holds);
        assert_eq!(r.bottleneck, vec![Ext::zero()]);
        let weak = compare(&f, &fc, 1, &int(0), &int(1), CechCovers::OpenStars).unwrap();
        assert!(!weak.hypothesis_holds);
        assert_eq!(weak.warnings.len(), 1);
        let blocked = compare(&f, &fc, 2, &int(0), &int(1), CechCovers::OpenStars).unwrap();
        assert!(blocked.diagram.is_none() && !blocked.all_pass);
        assert_eq!(blocked.tower_failure.map(|t| t.level), Some(0));
    }

    #[test]
    fn hlc_fixture_has_zero_bottleneck() {
        let f = PrimeField::f2();
        let r = compare(&f, &fixtures::hexagon_in_disc(), 2, &int(0), &int(1), CechCovers::Finest).unwrap();
        assert_eq!(r.lcs, Ext::zero());
        assert!(r.all_pass);
        assert!(r.bottleneck.iter().all(|b| *b == Ext::zero()));
    }
}
