use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{FilteredComplex, SpacesError};
use crate::homalg::{is_trivial_inclusion, Field, Simplex, SimplicialComplex, Vertex};
use crate::value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub name: String,
    pub set: BTreeSet<Vertex>,
}

/// A named family of vertex sets covering the sublevel at `index`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    #[serde(with = "crate::value::exact")]
    pub index: Value,
    pub members: Vec<Member>,
}

impl Cover {
    pub fn new(index: Value, members: Vec<Member>) -> Self {
        Self { index, members }
    }

    /// Members named after their vertex sets; duplicate sets are dropped.
    pub fn from_sets(fc: &FilteredComplex, index: Value, sets: impl IntoIterator<Item = BTreeSet<Vertex>>) -> Self {
        let mut seen = BTreeSet::new();
        let mut members = Vec::new();
        for set in sets {
            if !set.is_empty() && seen.insert(set.clone()) {
                members.push(Member { name: fc.set_label(&set), set });
            }
        }
        Self { index, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn set(&self, i: usize) -> &BTreeSet<Vertex> {
        &self.members[i].set
    }

    pub fn sets(&self) -> impl Iterator<Item = &BTreeSet<Vertex>> {
        self.members.iter().map(|m| &m.set)
    }

    pub fn member_index(&self, name: &str) -> Result<usize, SpacesError> {
        self.members.iter().position(|m| m.name == name).ok_or_else(|| SpacesError::UnknownSet(name.to_string()))
    }

    pub fn union(&self) -> BTreeSet<Vertex> {
        self.sets().flatten().copied().collect()
    }

    /// Checks that members are nonempty, lie in the sublevel and cover it.
    pub fn validate(&self, fc: &FilteredComplex) -> Result<(), SpacesError> {
        let verts = fc.sublevel_vertices(&self.index);
        for m in &self.members {
            if m.set.is_empty() {
                return Err(SpacesError::EmptyMember(m.name.clone()));
            }
            if let Some(&v) = m.set.iter().find(|v| !verts.contains(v)) {
                return Err(SpacesError::OutsideSublevel { name: m.name.clone(), index: self.index.clone(), vertex: v });
            }
        }
        let union = self.union();
        if let Some(&v) = verts.iter().find(|v| !union.contains(v)) {
            return Err(SpacesError::NotCovering { index: self.index.clone(), vertex: v });
        }
        Ok(())
    }

    /// First simplex of `k` not contained in any member.
    pub fn unsupported(&self, k: &SimplicialComplex) -> Option<Simplex> {
        k.maximal_simplices().into_iter().find(|s| !self.sets().any(|u| s.is_within(u)))
    }

    /// Index of the first member containing the simplex.
    pub fn witness(&self, s: &Simplex) -> Option<usize> {
        self.members.iter().position(|m| s.is_within(&m.set))
    }

    /// Union of members meeting member `i`.
    pub fn star(&self, i: usize) -> BTreeSet<Vertex> {
        let u = &self.members[i].set;
        self.sets().filter(|w| !w.is_disjoint(u)).flatten().copied().collect()
    }

    /// Drops duplicate members and members contained in another one.
    pub fn canonical(&self) -> Self {
        let mut keep: Vec<&Member> = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            let dominated = self.members.iter().enumerate().any(|(j, o)| {
                j != i && m.set.is_subset(&o.set) && (m.set.len() < o.set.len() || j < i)
            });
            if !dominated {
                keep.push(m);
            }
        }
        Self { index: self.index.clone(), members: keep.into_iter().cloned().collect() }
    }
}

pub fn star_of_set(alpha: &Cover, name: &str) -> Result<BTreeSet<Vertex>, SpacesError> {
    Ok(alpha.star(alpha.member_index(name)?))
}

fn check_order(alpha: &Cover, beta: &Cover) -> Result<(), SpacesError> {
    if alpha.index > beta.index {
        return Err(SpacesError::IndexOrder { fine: alpha.index.clone(), coarse: beta.index.clone() });
    }
    Ok(())
}

pub fn is_refinement(alpha: &Cover, beta: &Cover) -> Result<bool, SpacesError> {
    check_order(alpha, beta)?;
    Ok(alpha.sets().all(|u| beta.sets().any(|v| u.is_subset(v))))
}

pub fn is_star_refinement(alpha: &Cover, beta: &Cover) -> Result<bool, SpacesError> {
    check_order(alpha, beta)?;
    Ok((0..alpha.len()).all(|i| {
        let st = alpha.star(i);
        beta.sets().any(|v| st.is_subset(v))
    }))
}

/// For each member `U` of `alpha`, the members `V` of `beta` with
/// `St U ⊆ V` whose inclusion of full subcomplexes (sublevel of `alpha`
/// into sublevel of `beta`) is trivial on reduced homology up to `max_degree`.
pub fn hlc_targets<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    alpha: &Cover,
    beta: &Cover,
    max_degree: usize,
) -> Result<Vec<Vec<usize>>, SpacesError> {
    check_order(alpha, beta)?;
    let ka = fc.sublevel(&alpha.index);
    let kb = fc.sublevel(&beta.index);
    let sub_b: Vec<SimplicialComplex> = beta.sets().map(|v| kb.full_subcomplex(v)).collect();
    let mut cache: HashMap<(BTreeSet<Vertex>, usize), bool> = HashMap::new();
    let mut out = Vec::with_capacity(alpha.len());
    for i in 0..alpha.len() {
        let st = alpha.star(i);
        let sub_a = ka.full_subcomplex(&st);
        let mut targets = Vec::new();
        for (j, v) in beta.sets().enumerate() {
            if !st.is_subset(v) {
                continue;
            }
            let key = (st.clone(), j);
            let ok = match cache.get(&key) {
                Some(&ok) => ok,
                None => {
                    let ok = is_trivial_inclusion(f, &sub_a, &sub_b[j], max_degree, true)?;
                    cache.insert(key, ok);
                    ok
                }
            };
            if ok {
                targets.push(j);
            }
        }
        out.push(targets);
    }
    Ok(out)
}

pub fn is_hlc_star_refinement<F: Field>(
    f: &F,
    fc: &FilteredComplex,
    alpha: &Cover,
    beta: &Cover,
    max_degree: usize,
) -> Result<bool, SpacesError> {
    Ok(hlc_targets(f, fc, alpha, beta, max_degree)?.iter().all(|t| !t.is_empty()))
}

/// Nonempty pairwise intersections, duplicates removed.
pub fn common_refinement(alpha: &Cover, beta: &Cover) -> Result<Cover, SpacesError> {
    if alpha.index != beta.index {
        return Err(SpacesError::IndexMismatch(alpha.index.clone(), beta.index.clone()));
    }
    let mut seen = BTreeSet::new();
    let mut members = Vec::new();
    for u in &alpha.members {
        for v in &beta.members {
            let set: BTreeSet<Vertex> = u.set.intersection(&v.set).copied().collect();
            if !set.is_empty() && seen.insert(set.clone()) {
                members.push(Member { name: format!("{}∩{}", u.name, v.name), set });
            }
        }
    }
    let out = Cover::new(alpha.index.clone(), members);
    let union = out.union();
    let all: BTreeSet<Vertex> = alpha.union().union(&beta.union()).copied().collect();
    if let Some(&v) = all.iter().find(|v| !union.contains(v)) {
        return Err(SpacesError::NotCovering { index: alpha.index.clone(), vertex: v });
    }
    Ok(out)
}

/// Traces of the members on the sublevel at `t`, re-indexed to `t`.
pub fn restrict(fc: &FilteredComplex, beta: &Cover, t: &Value) -> Cover {
    let verts = fc.sublevel_vertices(t);
    let mut seen = BTreeSet::new();
    let mut members = Vec::new();
    for m in &beta.members {
        let set: BTreeSet<Vertex> = m.set.intersection(&verts).copied().collect();
        if !set.is_empty() && seen.insert(set.clone()) {
            members.push(Member { name: m.name.clone(), set });
        }
    }
    Cover::new(t.clone(), members)
}

pub fn open_star_cover(fc: &FilteredComplex, t: &Value) -> Cover {
    let stars = fc
        .sublevel_vertices(t)
        .into_iter()
        .map(|v| fc.open_star(v, t).expect("vertex is in the sublevel"));
    Cover::from_sets(fc, t.clone(), stars)
}

/// The cover by maximal simplices; every other cover supporting all
/// simplices of the sublevel is refined by it.
pub fn maximal_simplex_cover(fc: &FilteredComplex, t: &Value) -> Cover {
    let k = fc.sublevel(t);
    Cover::from_sets(fc, t.clone(), k.maximal_simplices().into_iter().map(|s| s.vertices().iter().copied().collect()))
}
