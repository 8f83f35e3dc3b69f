use crate::homalg::{Chain, Field, Simplex, Vertex};
use crate::spaces::Cover;

use super::ComparisonError;

/// `x ∨ c`: prepends `x` to every simplex of `c`, dropping terms that
/// already contain `x`. With `within`, each resulting simplex must lie in a
/// member of that cover.
pub fn join<F: Field>(
    f: &F,
    x: Vertex,
    c: &Chain<F::Elem>,
    within: Option<&Cover>,
) -> Result<Chain<F::Elem>, ComparisonError> {
    let mut out = Chain::zero(c.degree + 1);
    for (s, v) in c.terms() {
        if s.contains(x) {
            continue;
        }
        let mut tuple = Vec::with_capacity(s.vertices().len() + 1);
        tuple.push(x);
        tuple.extend_from_slice(s.vertices());
        if let Some(cover) = within {
            let (joined, _) = Simplex::orient(&tuple).expect("x is not in the simplex");
            if cover.witness(&joined).is_none() {
                return Err(ComparisonError::JoinWitness { x, simplex: s.vertices().to_vec() });
            }
        }
        out.add_scaled(f, &f.one(), &Chain::from_oriented(f, &tuple, v.clone()));
    }
    Ok(out)
}

/// The least vertex of a cover member.
pub fn join_point(cover: &Cover, member: usize) -> Vertex {
    *cover.set(member).iter().next().expect("cover members are nonempty")
}
