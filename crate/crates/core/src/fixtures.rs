//! Small filtered complexes used by tests, the acceptance suite and the CLI.

use crate::homalg::Vertex;
use crate::spaces::FilteredComplex;
use crate::value::{int, Value};

fn build(names: Vec<String>, values: Vec<Value>, simplices: Vec<Vec<Vertex>>) -> FilteredComplex {
    FilteredComplex::new(names, values, simplices).expect("fixture is well formed")
}

/// A hexagon at 0 coned off by a centre at 1.
pub fn hexagon_in_disc() -> FilteredComplex {
    let mut names: Vec<String> = (0..6).map(|i| format!("h{i}")).collect();
    names.push("c".into());
    let mut values = vec![int(0); 6];
    values.push(int(1));
    let tris = (0..6).map(|i| vec![i, (i + 1) % 6, 6]).collect();
    build(names, values, tris)
}

/// The bare hexagon, every vertex at 0.
pub fn hexagon() -> FilteredComplex {
    let names = (0..6).map(|i| format!("h{i}")).collect();
    let edges = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
    build(names, vec![int(0); 6], edges)
}

/// Octahedral sphere at 0 coned off by a centre at 1.
pub fn octahedron_in_ball() -> FilteredComplex {
    let mut names: Vec<String> = (0..6).map(|i| format!("p{i}")).collect();
    names.push("o".into());
    let mut values = vec![int(0); 6];
    values.push(int(1));
    let mut tets = Vec::new();
    for a in [0, 1] {
        for b in [2, 3] {
            for c in [4, 5] {
                tets.push(vec![a, b, c, 6]);
            }
        }
    }
    build(names, values, tets)
}

/// An annulus: an inner ring at 0 and an outer ring whose vertices enter at
/// 1 and 2 alternately. The circle class persists forever.
pub fn cylinder(ring: usize) -> FilteredComplex {
    assert!(ring >= 4, "ring needs at least four vertices");
    let n = ring as Vertex;
    let mut names: Vec<String> = (0..ring).map(|i| format!("a{i}")).collect();
    names.extend((0..ring).map(|i| format!("b{i}")));
    let mut values = vec![int(0); ring];
    values.extend((0..ring).map(|i| int(1 + (i % 2) as i64)));
    let mut tris = Vec::new();
    for i in 0..n {
        let j = (i + 1) % n;
        tris.push(vec![i, j, n + i]);
        tris.push(vec![j, n + i, n + j]);
    }
    build(names, values, tris)
}

/// A hollow triangle `x a b` at 0 coned off by an apex `y` at 1. The star of
/// each base vertex carries a circle until the apex arrives, so the local
/// connectedness shift is 1.
pub fn slow_cone() -> FilteredComplex {
    let names = ["x", "a", "b", "y"].map(String::from).to_vec();
    let values = vec![int(0), int(0), int(0), int(1)];
    build(names, values, vec![vec![3, 0, 1], vec![3, 1, 2], vec![3, 2, 0]])
}

/// The hollow triangle with values 0, 1, 2.
pub fn hollow_triangle() -> FilteredComplex {
    let names = ["a", "b", "c"].map(String::from).to_vec();
    build(names, vec![int(0), int(1), int(2)], vec![vec![0, 1], vec![1, 2], vec![0, 2]])
}

/// A filled triangle with values 0, 0, 1.
pub fn filled_triangle() -> FilteredComplex {
    let names = ["a", "b", "c"].map(String::from).to_vec();
    build(names, vec![int(0), int(0), int(1)], vec![vec![0, 1, 2]])
}

/// The fixtures on which the comparison machinery is exercised.
pub fn comparison_fixtures() -> Vec<(&'static str, FilteredComplex)> {
    vec![
        ("hexagon-in-disc", hexagon_in_disc()),
        ("octahedron-in-ball", octahedron_in_ball()),
        ("cylinder", cylinder(32)),
        ("slow-cone", slow_cone()),
    ]
}
