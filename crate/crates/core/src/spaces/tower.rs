use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::cover::{common_refinement, hlc_targets, is_star_refinement, maximal_simplex_cover, open_star_cover, restrict};
use super::{Cover, FilteredComplex, SpacesError};
use crate::homalg::{is_trivial_inclusion, Field, SimplicialComplex, Vertex};
use crate::value::{int, Value};

/// Covers `α_0, …, α_d` of the sublevels at `t_0 < … < t_d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverTower {
    pub levels: Vec<Cover>,
}

impl CoverTower {
    pub fn new(levels: Vec<Cover>) -> Self {
        Self { levels }
    }

    /// The `d` of the tower: number of levels minus one.
    pub fn depth(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn level(&self, i: usize) -> &Cover {
        &self.levels[i]
    }

    pub fn bottom(&self) -> &Cover {
        &self.levels[0]
    }

    pub fn top(&self) -> &Cover {
        self.levels.last().expect("tower is nonempty")
    }

    pub fn indices(&self) -> Vec<Value> {
        self.levels.iter().map(|c| c.index.clone()).collect()
    }

    /// Structural checks only: nonempty, increasing, each level a cover.
    pub fn check_structure(&self, fc: &FilteredComplex) -> Result<(), SpacesError> {
        if self.levels.is_empty() {
            return Err(SpacesError::EmptyTower);
        }
        for (i, c) in self.levels.iter().enumerate() {
            if i > 0 && self.levels[i - 1].index >= c.index {
                return Err(SpacesError::NotIncreasing { level: i });
            }
            c.validate(fc).map_err(|e| SpacesError::MalformedLevel { level: i, reason: e.to_string() })?;
        }
        Ok(())
    }
}

/// Outcome of [`validate_tower`]. `targets[i][u]` lists the members of
/// `α_{i+1}` that receive the star of member `u` of `α_i` trivially.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerCertificate {
    pub valid: bool,
    pub failing_level: Option<usize>,
    pub diagnostics: Vec<String>,
    pub targets: Vec<Vec<Vec<usize>>>,
}

pub fn validate_tower<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    tower: &CoverTower,
    max_degree: usize,
) -> Result<TowerCertificate, SpacesError> {
    tower.check_structure(fc)?;
    let mut cert = TowerCertificate { valid: true, failing_level: None, diagnostics: Vec::new(), targets: Vec::new() };
    let fail = |cert: &mut TowerCertificate, level: usize, msg: String| {
        cert.valid = false;
        cert.failing_level.get_or_insert(level);
        cert.diagnostics.push(msg);
    };
    for i in 0..tower.depth() {
        let (a, b) = (&tower.levels[i], &tower.levels[i + 1]);
        if !is_star_refinement(a, b)? {
            fail(&mut cert, i, format!("level {i}: not a star refinement of level {}", i + 1));
            cert.targets.push(vec![Vec::new(); a.len()]);
            continue;
        }
        let targets = hlc_targets(f, fc, a, b, max_degree)?;
        for (u, t) in targets.iter().enumerate() {
            if t.is_empty() {
                let msg = format!(
                    "level {i}: star of {} maps nontrivially into every member of level {} containing it",
                    a.members[u].name,
                    i + 1
                );
                fail(&mut cert, i, msg);
            }
        }
        cert.targets.push(targets);
    }
    Ok(cert)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum TowerOutcome {
    Built(CoverTower),
    Failed { level: usize, reason: String },
}

impl TowerOutcome {
    pub fn tower(&self) -> Option<&CoverTower> {
        match self {
            TowerOutcome::Built(t) => Some(t),
            TowerOutcome::Failed { .. } => None,
        }
    }
}

struct Search<'a, F: Field> {
    f: &'a F,
    fc: &'a FilteredComplex,
    max_degree: usize,
    constraint: Option<&'a CoverTower>,
    indices: Vec<Value>,
    sublevels: Vec<SimplicialComplex>,
}

impl<F: Field> Search<'_, F> {
    /// Intersects with the constraint level, if any, and canonicalizes.
    fn constrain(&self, i: usize, c: Cover) -> Result<Cover, SpacesError> {
        let c = match self.constraint {
            Some(ct) => common_refinement(&c, &restrict(self.fc, ct.level(i), &c.index))?,
            None => c,
        };
        Ok(c.canonical())
    }

    fn accepts(&self, i: usize, cand: &Cover, above: &Cover) -> Result<bool, SpacesError> {
        if cand.unsupported(&self.sublevels[i]).is_some() {
            return Ok(false);
        }
        Ok(is_star_refinement(cand, above)? && hlc_targets(self.f, self.fc, cand, above, self.max_degree)?.iter().all(|t| !t.is_empty()))
    }

    fn candidates(&self, i: usize, above: &Cover) -> Result<Vec<Cover>, SpacesError> {
        let t = &self.indices[i];
        let restricted = restrict(self.fc, above, t);
        let stars = open_star_cover(self.fc, t);
        let raw = vec![
            restricted.clone(),
            common_refinement(&stars, &restricted)?,
            stars,
            maximal_simplex_cover(self.fc, t),
        ];
        let mut out: Vec<Cover> = Vec::new();
        for c in raw {
            let c = self.constrain(i, c)?;
            if !out.iter().any(|o| o.members == c.members) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Top-down search below a fixed top cover, backtracking over candidates.
    fn descend(&self, i: usize, above: &Cover, acc: &mut Vec<Cover>) -> Result<bool, SpacesError> {
        for cand in self.candidates(i, above)? {
            if self.accepts(i, &cand, above)? {
                acc.push(cand.clone());
                if i == 0 || self.descend(i - 1, &cand, acc)? {
                    return Ok(true);
                }
                acc.pop();
            }
        }
        Ok(false)
    }

    fn top_down(&self) -> Result<Option<CoverTower>, SpacesError> {
        let d = self.indices.len() - 1;
        let top = self.constrain(d, open_star_cover(self.fc, &self.indices[d]))?;
        let mut acc = vec![top.clone()];
        if self.descend(d - 1, &top, &mut acc)? {
            acc.reverse();
            return Ok(Some(CoverTower::new(acc)));
        }
        Ok(None)
    }

    /// Bottom-up growth: each star is thickened by graph balls in the next
    /// sublevel until its inclusion becomes trivial.
    fn bottom_up(&self) -> Result<TowerOutcome, SpacesError> {
        let d = self.indices.len() - 1;
        let mut levels = vec![self.constrain(0, maximal_simplex_cover(self.fc, &self.indices[0]))?];
        for i in 0..d {
            let next_k = &self.sublevels[i + 1];
            let cur_k = &self.sublevels[i];
            let all = next_k.vertices();
            let bounds: Vec<BTreeSet<Vertex>> = match self.constraint {
                Some(ct) => restrict(self.fc, ct.level(i + 1), &self.indices[i + 1]).sets().cloned().collect(),
                None => vec![all],
            };
            let alpha = &levels[i];
            let mut sets = Vec::new();
            for u in 0..alpha.len() {
                let st = alpha.star(u);
                let sub = cur_k.full_subcomplex(&st);
                match self.thicken(&st, &sub, next_k, &bounds)? {
                    Some(v) => sets.push(v),
                    None => {
                        return Ok(TowerOutcome::Failed {
                            level: i,
                            reason: format!(
                                "star of {} at {} has no homologically trivial neighbourhood at {}",
                                alpha.members[u].name,
                                self.indices[i],
                                self.indices[i + 1]
                            ),
                        })
                    }
                }
            }
            let base = self.constrain(i + 1, maximal_simplex_cover(self.fc, &self.indices[i + 1]))?;
            sets.extend(base.sets().cloned());
            levels.push(Cover::from_sets(self.fc, self.indices[i + 1].clone(), sets).canonical());
        }
        Ok(TowerOutcome::Built(CoverTower::new(levels)))
    }

    fn thicken(
        &self,
        st: &BTreeSet<Vertex>,
        sub: &SimplicialComplex,
        k: &SimplicialComplex,
        bounds: &[BTreeSet<Vertex>],
    ) -> Result<Option<BTreeSet<Vertex>>, SpacesError> {
        let bounds: Vec<&BTreeSet<Vertex>> = bounds.iter().filter(|b| st.is_subset(b)).collect();
        let mut ball = st.clone();
        loop {
            for b in &bounds {
                let v: BTreeSet<Vertex> = ball.intersection(b).copied().collect();
                if is_trivial_inclusion(self.f, sub, &k.full_subcomplex(&v), self.max_degree, true)? {
                    return Ok(Some(v));
                }
            }
            let grown = grow(&ball, k);
            if grown.len() == ball.len() {
                return Ok(None);
            }
            ball = grown;
        }
    }
}

fn grow(ball: &BTreeSet<Vertex>, k: &SimplicialComplex) -> BTreeSet<Vertex> {
    let mut out = ball.clone();
    for e in k.simplices(1) {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        if ball.contains(&a) || ball.contains(&b) {
            out.insert(a);
            out.insert(b);
        }
    }
    out
}

/// Builds an admissible tower on `t_i = s + i (t - s) / d`.
///
/// A top-down search from the open-star cover at `t` is tried first; if it
/// finds nothing, stars are grown bottom-up from the maximal-simplex cover.
/// With a `constraint` tower every level refines the matching constraint
/// level.
pub fn auto_tower<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    s: &Value,
    t: &Value,
    d: usize,
    max_degree: usize,
    constraint: Option<&CoverTower>,
) -> Result<TowerOutcome, SpacesError> {
    if let Some(ct) = constraint {
        if ct.levels.len() != d + 1 {
            return Err(SpacesError::MalformedLevel {
                level: ct.levels.len(),
                reason: format!("constraint tower has {} levels, expected {}", ct.levels.len(), d + 1),
            });
        }
    }
    if d == 0 {
        let c = open_star_cover(fc, t);
        let c = match constraint {
            Some(ct) => common_refinement(&c, &restrict(fc, ct.level(0), t))?.canonical(),
            None => c,
        };
        return Ok(TowerOutcome::Built(CoverTower::new(vec![c])));
    }
    if s >= t {
        return Err(SpacesError::EmptyRange { s: s.clone(), t: t.clone() });
    }
    let step = (t - s) / int(d as i64);
    let indices: Vec<Value> = (0..=d).map(|i| s + &step * int(i as i64)).collect();
    let sublevels = indices.iter().map(|x| fc.sublevel(x)).collect();
    let search = Search { f, fc, max_degree, constraint, indices, sublevels };
    let outcome = match search.top_down()? {
        Some(tower) => TowerOutcome::Built(tower),
        None => search.bottom_up()?,
    };
    if let TowerOutcome::Built(tower) = &outcome {
        let cert = validate_tower(f, fc, tower, max_degree)?;
        if !cert.valid {
            return Ok(TowerOutcome::Failed {
                level: cert.failing_level.unwrap_or(0),
                reason: cert.diagnostics.join("; "),
            });
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::PrimeField;
    use crate::spaces::Member;

    fn hexagon(filled: bool) -> FilteredComplex {
        let mut v = vec![int(0); 6];
        let mut s: Vec<Vec<Vertex>> = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
        if filled {
            v.push(int(1));
            s = (0..6).map(|i| vec![i, (i + 1) % 6, 6]).collect();
        }
        FilteredComplex::from_lists(v, &s.iter().map(Vec::as_slice).collect::<Vec<_>>()).unwrap()
    }

    fn arcs(fc: &FilteredComplex) -> Cover {
        let sets = [[0, 1, 2], [2, 3, 4], [4, 5, 0]].map(|a| a.into_iter().collect::<BTreeSet<Vertex>>());
        Cover::from_sets(fc, int(0), sets)
    }

    #[test]
    fn arcs_into_disc_tower() {
        let fc = hexagon(true);
        let f = PrimeField::f2();
        let disc = Cover::new(int(1), vec![Member { name: "D".into(), set: (0..7).collect() }]);
        let tower = CoverTower::new(vec![arcs(&fc), disc]);
        let cert = validate_tower(&f, &fc, &tower, 1).unwrap();
        assert!(cert.valid);
        assert_eq!(cert.targets, vec![vec![vec![0]; 3]]);
    }

    #[test]
    fn failing_star_refinement_reports_level() {
        let fc = hexagon(true);
        let f = PrimeField::f2();
        let mut upper = arcs(&fc);
        upper.index = int(1);
        upper.members.push(Member { name: "c".into(), set: [6].into_iter().collect() });
        let tower = CoverTower::new(vec![arcs(&fc), upper]);
        let cert = validate_tower(&f, &fc, &tower, 1).unwrap();
        assert!(!cert.valid);
        assert_eq!(cert.failing_level, Some(0));
        let single = CoverTower::new(vec![arcs(&fc)]);
        assert!(validate_tower(&f, &fc, &single, 1).unwrap().valid);
        let bad = CoverTower::new(vec![stars_at(&fc, 1), stars_at(&fc, 1)]);
        assert!(matches!(validate_tower(&f, &fc, &bad, 1), Err(SpacesError::NotIncreasing { level: 1 })));
    }

    fn stars_at(fc: &FilteredComplex, t: i64) -> Cover {
        open_star_cover(fc, &int(t))
    }

    #[test]
    fn auto_tower_contractible() {
        let fc = FilteredComplex::from_lists(vec![int(0), int(0), int(1)], &[&[0, 1, 2]]).unwrap();
        let f = PrimeField::f2();
        let out = auto_tower(&f, &fc, &int(0), &int(1), 1, 1, None).unwrap();
        let tower = out.tower().expect("contractible complex admits a tower");
        assert!(validate_tower(&f, &fc, tower, 1).unwrap().valid);
        assert_eq!(tower.indices(), vec![int(0), int(1)]);
    }

    #[test]
    fn auto_tower_depth_zero() {
        let fc = hexagon(false);
        let out = auto_tower(&PrimeField::f2(), &fc, &int(0), &int(0), 0, 0, None).unwrap();
        assert_eq!(out, TowerOutcome::Built(CoverTower::new(vec![open_star_cover(&fc, &int(0))])));
    }

    #[test]
    fn unfilled_circle_fails() {
        let fc = hexagon(false);
        let out = auto_tower(&PrimeField::f2(), &fc, &int(0), &int(1), 2, 1, None).unwrap();
        assert!(matches!(out, TowerOutcome::Failed { .. }), "{out:?}");
    }
}
