use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::homalg::{Chain, ChainMap, FillSolver, Field, MapKind, Simplex, SimplicialComplex};
use crate::spaces::{validate_tower, CoverTower, FilteredComplex, TowerCertificate};
use crate::vietoris::{vietoris_complex, VietorisComplex};

use super::ComparisonError;

/// Choices left open by the construction. Without a seed the first
/// admissible option is always taken; with a seed, the witness of each
/// edge, the target member of each fill and the elimination order of each
/// fill are drawn from a seeded generator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LambdaOptions {
    pub seed: Option<u64>,
}

/// An admissible chain map from `V^d(α_0)` to simplicial chains of the top
/// sublevel, with the member of `α_n` witnessing each `n`-generator.
#[derive(Debug, Clone)]
pub struct AdmissibleLambda<F: Field> {
    pub tower: CoverTower,
    pub d: usize,
    pub source: VietorisComplex,
    pub target: SimplicialComplex,
    pub map: ChainMap<F::Elem>,
    pub witness: HashMap<Simplex, usize>,
    pub certificate: TowerCertificate,
}

impl<F: Field> AdmissibleLambda<F> {
    pub fn apply(&self, f: &F, c: &Chain<F::Elem>) -> Result<Chain<F::Elem>, ComparisonError> {
        Ok(self.map.apply(f, c)?)
    }

    pub fn witness_of(&self, s: &Simplex) -> Result<usize, ComparisonError> {
        self.witness.get(s).copied().ok_or_else(|| ComparisonError::MissingWitness(s.vertices().to_vec()))
    }
}

/// Builds `λ` by induction on dimension: vertices map to themselves, and the
/// image of an `n`-simplex fills the image of its boundary inside a member
/// of `α_n` that receives the relevant star trivially.
pub fn build_lambda<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    tower: &CoverTower,
    dim: usize,
    options: LambdaOptions,
) -> Result<AdmissibleLambda<F>, ComparisonError> {
    if dim > tower.depth() {
        return Err(ComparisonError::DepthTooSmall { dim, depth: tower.depth() });
    }
    let max_degree = dim.saturating_sub(1);
    let cert = validate_tower(f, fc, tower, max_degree)?;
    if !cert.valid {
        return Err(ComparisonError::NotAdmissible {
            level: cert.failing_level.unwrap_or(0),
            diagnostics: cert.diagnostics.join("; "),
        });
    }
    let mut rng = options.seed.map(ChaCha8Rng::seed_from_u64);
    let source = vietoris_complex(tower.bottom(), dim);
    let sublevels: Vec<SimplicialComplex> = tower.levels.iter().map(|c| fc.sublevel(&c.index)).collect();
    let mut map = ChainMap::new(MapKind::Chain, "V(α_0)", "S(top)");
    let mut witness: HashMap<Simplex, usize> = HashMap::new();
    let mut solvers: HashMap<(usize, usize), FillSolver<F>> = HashMap::new();

    for v in source.complex().simplices(0) {
        map.set(v.clone(), Chain::simplex(f, v.clone()));
        witness.insert(v.clone(), source.witness(v).expect("every simplex has a witness"));
    }
    for n in 1..=dim {
        let alpha_prev = tower.level(n - 1);
        for rho in source.complex().simplices(n) {
            let boundary = Chain::simplex(f, rho.clone()).boundary(f);
            let c = map.apply(f, &boundary)?;
            let base = if n == 1 {
                let options: Vec<usize> =
                    (0..alpha_prev.len()).filter(|&i| rho.is_within(alpha_prev.set(i))).collect();
                pick(&mut rng, &options).ok_or_else(|| ComparisonError::MissingWitness(rho.vertices().to_vec()))?
            } else {
                let face0 = &rho.boundary_faces()[0].1;
                *witness.get(face0).ok_or_else(|| ComparisonError::MissingWitness(face0.vertices().to_vec()))?
            };
            let star = alpha_prev.star(base);
            let star_k = sublevels[n - 1].full_subcomplex(&star);
            if !c.is_supported_in(&star_k) {
                return Err(ComparisonError::Unfillable {
                    generator: rho.vertices().to_vec(),
                    level: n,
                    detail: "boundary image leaves the star of its witness".into(),
                });
            }
            let targets = &cert.targets[n - 1][base];
            let target = pick(&mut rng, targets).ok_or_else(|| ComparisonError::NotAdmissible {
                level: n - 1,
                diagnostics: format!("no trivial target for member {}", alpha_prev.members[base].name),
            })?;
            let solver = solvers.entry((n, target)).or_insert_with(|| {
                let ambient = sublevels[n].full_subcomplex(tower.level(n).set(target));
                let m = ambient.count(n);
                let order: Vec<usize> = match rng.as_mut() {
                    Some(r) => {
                        let mut o: Vec<usize> = (0..m).collect();
                        o.shuffle(r);
                        o
                    }
                    None => (0..m).collect(),
                };
                FillSolver::new(f, &ambient, n - 1, Some(&order))
            });
            let fill = solver.fill(&c).map_err(|e| ComparisonError::Unfillable {
                generator: rho.vertices().to_vec(),
                level: n,
                detail: e.to_string(),
            })?;
            map.set(rho.clone(), fill);
            witness.insert(rho.clone(), target);
        }
    }
    let target = sublevels.last().expect("tower is nonempty").clone();
    Ok(AdmissibleLambda { tower: tower.clone(), d: dim, source, target, map, witness, certificate: cert })
}

fn pick(rng: &mut Option<ChaCha8Rng>, options: &[usize]) -> Option<usize> {
    if options.is_empty() {
        return None;
    }
    Some(match rng {
        Some(r) => options[r.gen_range(0..options.len())],
        None => options[0],
    })
}

/// Lists every violation of the chain-map law or the support condition.
pub fn check_admissible<F: Field>(f: &F, lambda: &AdmissibleLambda<F>) -> Result<Vec<String>, ComparisonError> {
    let mut problems = Vec::new();
    for (rho, img) in lambda.map.images() {
        let n = rho.dim();
        if n == 0 {
            if *img != Chain::simplex(f, rho.clone()) {
                problems.push(format!("{rho:?}: vertex not sent to itself"));
            }
        } else {
            let lhs = img.boundary(f);
            let rhs = lambda.map.apply(f, &Chain::simplex(f, rho.clone()).boundary(f))?;
            if lhs != rhs {
                problems.push(format!("{rho:?}: boundary of image differs from image of boundary"));
            }
        }
        let w = lambda.witness_of(rho)?;
        let member = lambda.tower.level(n).set(w);
        if !rho.is_within(member) || !img.support().is_subset(member) {
            problems.push(format!("{rho:?}: image or vertices leave witness {}", lambda.tower.level(n).members[w].name));
        }
        if !img.is_supported_in(&lambda.target) {
            problems.push(format!("{rho:?}: image not supported in the top sublevel"));
        }
    }
    Ok(problems)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::homalg::PrimeField;
    use crate::spaces::auto_tower;
    use crate::value::int;

    #[test]
    fn lambda_on_hexagon_disc() {
        let f = PrimeField::f2();
        let fc = fixtures::hexagon_in_disc();
        let tower = auto_tower(&f, &fc, &int(0), &int(2), 2, 1, None).unwrap();
        let tower = tower.tower().expect("tower exists").clone();
        let lambda = build_lambda(&f, &fc, &tower, 2, LambdaOptions::default()).unwrap();
        assert!(check_admissible(&f, &lambda).unwrap().is_empty());
        let v = Simplex::vertex(3);
        assert_eq!(lambda.map.image(&v), Some(&Chain::simplex(&f, v)));
        for seed in 0..4 {
            let l = build_lambda(&f, &fc, &tower, 2, LambdaOptions { seed: Some(seed) }).unwrap();
            assert!(check_admissible(&f, &l).unwrap().is_empty());
        }
    }

    #[test]
    fn depth_too_small() {
        let f = PrimeField::f2();
        let fc = fixtures::filled_triangle();
        let tower = auto_tower(&f, &fc, &int(0), &int(1), 1, 0, None).unwrap().tower().unwrap().clone();
        assert!(matches!(
            build_lambda(&f, &fc, &tower, 2, LambdaOptions::default()),
            Err(ComparisonError::DepthTooSmall { dim: 2, depth: 1 })
        ));
    }
}
