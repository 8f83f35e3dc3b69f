use serde::Serialize;

use crate::homalg::{induced_matrix, Field, HomologyBasis, Matrix, SimplicialComplex, Vertex};
use crate::spaces::{auto_tower, is_refinement, CoverTower, FilteredComplex, TowerOutcome};
use crate::value::{format_value, Value};
use crate::vietoris::{mu, vietoris_complex};

use super::lambda::{build_lambda, AdmissibleLambda, LambdaOptions};
use super::ComparisonError;

/// `H_n(λ)`: from `H_n(V^d(α_0))` to `H_n` of the top sublevel.
pub fn build_psi<F: Field>(f: &F, lambda: &AdmissibleLambda<F>, n: usize) -> Result<Matrix<F::Elem>, ComparisonError> {
    let src = HomologyBasis::new(f, lambda.source.complex(), n, false);
    let tgt = HomologyBasis::new(f, &lambda.target, n, false);
    psi_matrix(f, lambda, &src, &tgt)
}

fn psi_matrix<F: Field>(
    f: &F,
    lambda: &AdmissibleLambda<F>,
    src: &HomologyBasis<F>,
    tgt: &HomologyBasis<F>,
) -> Result<Matrix<F::Elem>, ComparisonError> {
    Ok(induced_matrix(f, src, tgt, |c| lambda.map.apply(f, c))?)
}

/// One exact matrix identity of the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub degree: usize,
    pub pass: bool,
    /// Source basis classes on which the two sides differ, as cycles.
    pub counterexamples: Vec<Vec<(Vec<Vertex>, String)>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagramReport {
    pub d: usize,
    pub s: String,
    pub delta: String,
    pub degenerate: bool,
    pub identities: Vec<IdentityCheck>,
    pub all_pass: bool,
    pub towers: Vec<CoverTower>,
}

fn compare<F: Field>(
    name: &str,
    degree: usize,
    lhs: &Matrix<F::Elem>,
    rhs: &Matrix<F::Elem>,
    src: &HomologyBasis<F>,
) -> IdentityCheck
where
    F::Elem: std::fmt::Debug,
{
    let cols = if (lhs.rows, lhs.cols) != (rhs.rows, rhs.cols) { (0..src.dim()).collect() } else { lhs.differing_columns(rhs) };
    IdentityCheck {
        name: name.to_string(),
        degree,
        pass: cols.is_empty(),
        counterexamples: cols.iter().map(|&j| src.reps()[j].describe()).collect(),
    }
}

fn identity_matrix<F: Field>(f: &F, src: &HomologyBasis<F>, tgt: &HomologyBasis<F>) -> Result<Matrix<F::Elem>, ComparisonError> {
    Ok(induced_matrix(f, src, tgt, |c| Ok(c.clone()))?)
}

fn build_tower<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    s: &Value,
    t: &Value,
    d: usize,
    constraint: Option<&CoverTower>,
) -> Result<CoverTower, ComparisonError> {
    match auto_tower(f, fc, s, t, d, d.saturating_sub(1), constraint)? {
        TowerOutcome::Built(t) => Ok(t),
        TowerOutcome::Failed { level, reason } => Err(ComparisonError::TowerFailed {
            s: format_value(s),
            t: format_value(t),
            level,
            reason,
        }),
    }
}

/// Builds towers on `[s+δ, s+2δ]` and then on `[s, s+δ]` refining it, and
/// checks the interleaving identities on homology in degrees below `d`.
pub fn verify_diagram<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    d: usize,
    s: &Value,
    delta: &Value,
) -> Result<DiagramReport, ComparisonError>
where
    F::Elem: std::fmt::Debug,
{
    use num_traits::Zero;
    if delta.is_zero() {
        return Ok(DiagramReport {
            d,
            s: format_value(s),
            delta: format_value(delta),
            degenerate: true,
            identities: Vec::new(),
            all_pass: true,
            towers: Vec::new(),
        });
    }
    let t = s + delta;
    let t2 = &t + delta;
    let upper = build_tower(f, fc, &t, &t2, d, None)?;
    let lower = build_tower(f, fc, s, &t, d, Some(&upper))?;
    verify_diagram_with(f, fc, d, &lower, &upper, LambdaOptions::default())
}

/// The identities for explicit towers; level `i` of `lower` must refine
/// level `i` of `upper`.
pub fn verify_diagram_with<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    d: usize,
    lower: &CoverTower,
    upper: &CoverTower,
    options: LambdaOptions,
) -> Result<DiagramReport, ComparisonError>
where
    F::Elem: std::fmt::Debug,
{
    if lower.depth() != d || upper.depth() != d {
        return Err(ComparisonError::ShapeMismatch(format!(
            "towers have depths {} and {}, expected {d}",
            lower.depth(),
            upper.depth()
        )));
    }
    for i in 0..=d {
        if !is_refinement(lower.level(i), upper.level(i))? {
            return Err(ComparisonError::TowersMismatched { level: i });
        }
    }
    let l1 = build_lambda(f, fc, lower, d, options)?;
    let l2 = build_lambda(f, fc, upper, d, options)?;
    let va0 = vietoris_complex(lower.bottom(), d);
    let vad = vietoris_complex(lower.top(), d);
    let vb0 = vietoris_complex(upper.bottom(), d);
    let vbd = vietoris_complex(upper.top(), d);
    let k = |c: &crate::spaces::Cover| fc.sublevel(&c.index);
    let (ks, kt, ku, kv) = (k(lower.bottom()), k(lower.top()), k(upper.bottom()), k(upper.top()));
    for (cx, v) in [(&ks, &va0), (&kt, &vad), (&ku, &vb0), (&kv, &vbd)] {
        for sx in cx.iter().filter(|x| x.dim() <= d) {
            v.check(sx)?;
        }
    }

    let mut identities = Vec::new();
    for n in 0..d {
        let basis = |c: &SimplicialComplex| HomologyBasis::new(f, c, n, false);
        let (bs, bt, bu, bv) = (basis(&ks), basis(&kt), basis(&ku), basis(&kv));
        let (ba0, bad, bb0, bbd) = (basis(va0.complex()), basis(vad.complex()), basis(vb0.complex()), basis(vbd.complex()));
        let mu_m = |src: &HomologyBasis<F>, tgt: &HomologyBasis<F>, v: &crate::vietoris::VietorisComplex| {
            induced_matrix(f, src, tgt, |c| Ok(mu(f, c, v).expect("support checked above")))
        };

        let phi_s = mu_m(&bs, &ba0, &va0)?;
        let phi_t = mu_m(&bt, &bad, &vad)?;
        let psi1 = psi_matrix(f, &l1, &ba0, &bt)?;
        let incl_st = identity_matrix(f, &bs, &bt)?;
        let pi1 = identity_matrix(f, &ba0, &bad)?;
        identities.push(compare(&format!("psi[s,s+δ]∘phi[s] = incl (degree {n})"), n, &psi1.mul(f, &phi_s), &incl_st, &bs));
        identities.push(compare(&format!("phi[s+δ]∘psi[s,s+δ] = pi (degree {n})"), n, &phi_t.mul(f, &psi1), &pi1, &ba0));

        let phi_u = mu_m(&bu, &bb0, &vb0)?;
        let phi_v = mu_m(&bv, &bbd, &vbd)?;
        let psi2 = psi_matrix(f, &l2, &bb0, &bv)?;
        let incl_uv = identity_matrix(f, &bu, &bv)?;
        let pi2 = identity_matrix(f, &bb0, &bbd)?;
        identities.push(compare(&format!("psi[s+δ,s+2δ]∘phi[s+δ] = incl (degree {n})"), n, &psi2.mul(f, &phi_u), &incl_uv, &bu));
        identities.push(compare(&format!("phi[s+2δ]∘psi[s+δ,s+2δ] = pi (degree {n})"), n, &phi_v.mul(f, &psi2), &pi2, &bb0));

        let pi01 = identity_matrix(f, &ba0, &bb0)?;
        let incl_tv = identity_matrix(f, &bt, &bv)?;
        identities.push(compare(
            &format!("psi[s+δ,s+2δ]∘pi = incl∘psi[s,s+δ] (degree {n})"),
            n,
            &psi2.mul(f, &pi01),
            &incl_tv.mul(f, &psi1),
            &ba0,
        ));
    }
    let all_pass = identities.iter().all(|c| c.pass);
    Ok(DiagramReport {
        d,
        s: format_value(&lower.bottom().index),
        delta: format_value(&(&lower.top().index - &lower.bottom().index)),
        degenerate: false,
        identities,
        all_pass,
        towers: vec![lower.clone(), upper.clone()],
    })
}
