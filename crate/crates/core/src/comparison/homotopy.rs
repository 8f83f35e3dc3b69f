use serde::Serialize;

use crate::homalg::{Chain, ChainMap, Field, MapKind, Vertex};
use crate::vietoris::{mu, VietorisComplex};

use super::join::{join, join_point};
use super::lambda::AdmissibleLambda;
use super::ComparisonError;

/// `μ ∘ λ` as a map into `V^d(α_d)`.
pub fn mu_lambda<F: Field>(
    f: &F,
    lambda: &AdmissibleLambda<F>,
    top: &VietorisComplex,
) -> Result<ChainMap<F::Elem>, ComparisonError> {
    let mut out = ChainMap::new(MapKind::Chain, "V(α_0)", "V(α_d)");
    for (rho, img) in lambda.map.images() {
        out.set(rho.clone(), mu(f, img, top)?);
    }
    Ok(out)
}

/// The cone homotopy between `μ ∘ λ` and `π` on generators of degree below `d`.
///
/// `D` vanishes on vertices and `D(ρ) = x ∨ (μλρ − πρ − D∂ρ)` above, with `x`
/// the least vertex of the member witnessing `ρ`. On edges this is
/// `x ∨ (μλρ − πρ)`; the correction term keeps the identity exact when
/// faces are coned from different points.
pub fn homotopy_d_cech<F: Field>(
    f: &F,
    lambda: &AdmissibleLambda<F>,
    top: &VietorisComplex,
) -> Result<ChainMap<F::Elem>, ComparisonError> {
    let d = lambda.d;
    let mut dmap = ChainMap::new(MapKind::Homotopy, "V(α_0)", "V(α_d)");
    let source = lambda.source.complex();
    for v in source.simplices(0) {
        dmap.set(v.clone(), Chain::zero(1));
    }
    for n in 1..d {
        let alpha_n = lambda.tower.level(n);
        for rho in source.simplices(n) {
            let x = join_point(alpha_n, lambda.witness_of(rho)?);
            let gen = Chain::simplex(f, rho.clone());
            let ml = mu(f, lambda.map.image(rho).expect("λ is defined on every generator"), top)?;
            let pi = mu(f, &gen, top)?;
            let prev = dmap.apply(f, &gen.boundary(f))?;
            let c = ml.minus(f, &pi).minus(f, &prev);
            dmap.set(rho.clone(), join(f, x, &c, Some(top.cover_ref()))?);
        }
    }
    Ok(dmap)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomotopyReport {
    pub ok: bool,
    pub checked: usize,
    pub failures: Vec<Vec<Vertex>>,
}

/// Checks `D∂ + ∂D = lhs − rhs` on every generator of `lhs` up to a degree.
pub fn verify_homotopy<F: Field>(
    f: &F,
    d: &ChainMap<F::Elem>,
    lhs: &ChainMap<F::Elem>,
    rhs: &ChainMap<F::Elem>,
    up_to_degree: usize,
) -> Result<HomotopyReport, ComparisonError> {
    if d.kind != MapKind::Homotopy || lhs.kind != MapKind::Chain || rhs.kind != MapKind::Chain {
        return Err(ComparisonError::ShapeMismatch("expected a homotopy and two chain maps".into()));
    }
    let shape = |e: crate::homalg::HomalgError| ComparisonError::ShapeMismatch(e.to_string());
    let mut report = HomotopyReport { ok: true, checked: 0, failures: Vec::new() };
    for rho in lhs.generators().filter(|s| s.dim() <= up_to_degree) {
        let gen = Chain::simplex(f, rho.clone());
        let left = d.apply(f, &gen.boundary(f)).map_err(shape)?.plus(f, &d.apply(f, &gen).map_err(shape)?.boundary(f));
        let right = lhs.apply(f, &gen).map_err(shape)?.minus(f, &rhs.apply(f, &gen).map_err(shape)?);
        report.checked += 1;
        if left != right {
            report.ok = false;
            report.failures.push(rho.vertices().to_vec());
        }
    }
    Ok(report)
}
