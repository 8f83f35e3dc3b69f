use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;

use super::SpacesError;
use crate::homalg::{Filtration, HomalgError, Simplex, SimplicialComplex, Vertex};
use crate::value::Value;

/// A complex with a vertex function, filtered by lower stars.
#[derive(Debug, Clone)]
pub struct FilteredComplex {
    complex: SimplicialComplex,
    names: Vec<String>,
    by_name: HashMap<String, Vertex>,
    values: Vec<Value>,
    grid: Vec<Value>,
}

impl FilteredComplex {
    /// Vertices are `0..names.len()`; every declared vertex is a 0-simplex.
    pub fn new(names: Vec<String>, values: Vec<Value>, simplices: Vec<Vec<Vertex>>) -> Result<Self, SpacesError> {
        if names.len() != values.len() {
            return Err(SpacesError::ValueCount { expected: names.len(), found: values.len() });
        }
        let mut by_name = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if by_name.insert(n.clone(), i as Vertex).is_some() {
                return Err(SpacesError::DuplicateVertex(n.clone()));
            }
        }
        let mut all = Vec::with_capacity(names.len() + simplices.len());
        all.extend((0..names.len() as Vertex).map(Simplex::vertex));
        for s in simplices {
            if let Some(&v) = s.iter().find(|&&v| v as usize >= names.len()) {
                return Err(SpacesError::UnknownVertex(v.to_string()));
            }
            all.push(Simplex::new(s)?);
        }
        let complex = SimplicialComplex::closure(all);
        let mut grid = values.clone();
        grid.sort();
        grid.dedup();
        Ok(Self { complex, names, by_name, values, grid })
    }

    /// Vertices named by their ids.
    pub fn from_lists(values: Vec<Value>, simplices: &[&[Vertex]]) -> Result<Self, SpacesError> {
        let names = (0..values.len()).map(|i| i.to_string()).collect();
        Self::new(names, values, simplices.iter().map(|s| s.to_vec()).collect())
    }

    /// Same complex and names with a new vertex function.
    pub fn with_values(&self, values: Vec<Value>) -> Result<Self, SpacesError> {
        if values.len() != self.values.len() {
            return Err(SpacesError::ValueCount { expected: self.values.len(), found: values.len() });
        }
        let mut grid = values.clone();
        grid.sort();
        grid.dedup();
        Ok(Self { values, grid, ..self.clone() })
    }

    pub fn shifted(&self, c: &Value) -> Self {
        self.with_values(self.values.iter().map(|v| v + c).collect()).expect("same length")
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn n_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v as usize]
    }

    pub fn vertex_id(&self, name: &str) -> Result<Vertex, SpacesError> {
        self.by_name.get(name).copied().ok_or_else(|| SpacesError::UnknownVertex(name.to_string()))
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn value(&self, v: Vertex) -> &Value {
        &self.values[v as usize]
    }

    /// Lower-star value: the maximum over vertices.
    pub fn simplex_value(&self, s: &Simplex) -> Value {
        s.vertices().iter().map(|&v| &self.values[v as usize]).max().expect("simplices are nonempty").clone()
    }

    /// Sorted distinct simplex values.
    pub fn grid(&self) -> &[Value] {
        &self.grid
    }

    /// Smallest positive gap between grid values, if any.
    pub fn min_gap(&self) -> Option<Value> {
        self.grid.windows(2).map(|w| &w[1] - &w[0]).filter(|g| !g.is_zero()).min()
    }

    pub fn sublevel(&self, t: &Value) -> SimplicialComplex {
        self.complex.filter(|s| self.simplex_value(s) <= *t)
    }

    pub fn sublevel_vertices(&self, t: &Value) -> BTreeSet<Vertex> {
        (0..self.names.len() as Vertex).filter(|&v| self.value(v) <= t).collect()
    }

    pub fn filtration(&self) -> Result<Filtration, HomalgError> {
        Filtration::new(&self.complex, |s| self.simplex_value(s))
    }

    /// Vertices of simplices of the sublevel at `t` that contain `v`.
    pub fn open_star(&self, v: Vertex, t: &Value) -> Result<BTreeSet<Vertex>, SpacesError> {
        if v as usize >= self.names.len() || self.value(v) > t {
            return Err(SpacesError::VertexAbsent { vertex: v, t: t.clone() });
        }
        let mut out = BTreeSet::new();
        for s in self.complex.iter() {
            if s.contains(v) && self.simplex_value(s) <= *t {
                out.extend(s.vertices().iter().copied());
            }
        }
        Ok(out)
    }

    /// Whether two filtered complexes share the same underlying complex.
    pub fn same_complex(&self, other: &Self) -> bool {
        self.names.len() == other.names.len() && self.complex == other.complex
    }

    pub fn set_label(&self, set: &BTreeSet<Vertex>) -> String {
        let names: Vec<&str> = set.iter().map(|&v| self.name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::int;

    fn hollow() -> FilteredComplex {
        FilteredComplex::from_lists(vec![int(0), int(1), int(2)], &[&[0, 1], &[1, 2], &[0, 2]]).unwrap()
    }

    #[test]
    fn sublevels() {
        let fc = hollow();
        let k1 = fc.sublevel(&int(1));
        assert_eq!(k1.len(), 3);
        assert!(k1.contains(&Simplex::new(vec![0, 1]).unwrap()));
        assert!(fc.sublevel(&int(-1)).is_empty());
        assert_eq!(fc.sublevel(&int(9)), *fc.complex());
        assert_eq!(fc.grid(), &[int(0), int(1), int(2)]);
    }

    #[test]
    fn open_stars() {
        let hex = FilteredComplex::from_lists(
            vec![int(0); 6],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 0]],
        )
        .unwrap();
        assert_eq!(hex.open_star(0, &int(0)).unwrap(), [5, 0, 1].into_iter().collect());
        let lone = FilteredComplex::from_lists(vec![int(0), int(0)], &[]).unwrap();
        assert_eq!(lone.open_star(1, &int(0)).unwrap(), [1].into_iter().collect());
        assert!(matches!(hollow().open_star(2, &int(1)), Err(SpacesError::VertexAbsent { .. })));
    }
}
