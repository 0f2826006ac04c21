use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::Rational;

/// A weight-2 element of the tensor algebra: `Σ c · (gᵢ ⊗ gⱼ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticRelation {
    terms: Vec<((usize, usize), Rational)>,
}

impl QuadraticRelation {
    pub fn new(terms: Vec<((usize, usize), Rational)>) -> Self {
        let mut merged: Vec<((usize, usize), Rational)> = Vec::new();
        let mut terms = terms;
        terms.sort_by_key(|t| t.0);
        for (k, c) in terms {
            match merged.last_mut() {
                Some((j, acc)) if *j == k => *acc = &*acc + &c,
                _ => merged.push((k, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        QuadraticRelation { terms: merged }
    }

    /// The commutator `[x, y] = x⊗y − y⊗x`.
    pub fn commutator(x: usize, y: usize) -> Self {
        Self::new(vec![((x, y), Rational::one()), ((y, x), -Rational::one())])
    }

    pub fn terms(&self) -> &[((usize, usize), Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Debug for QuadraticRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.terms.iter().map(|((i, j), c)| format!("{c}·g{i}g{j}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Weight-one generators and homogeneous weight-two relations, presenting
/// the weighted Lie algebra `𝕃(S)/I` and its enveloping algebra `T(S)/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedPresentation {
    generators: Vec<String>,
    relations: Vec<QuadraticRelation>,
    /// For commutation presentations, the graph they came from.
    commutation_graph: Option<Graph>,
}

impl WeightedPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<QuadraticRelation>) -> Result<Self> {
        let n = generators.len();
        for r in &relations {
            if let Some(((i, j), _)) = r.terms().iter().find(|((i, j), _)| *i >= n || *j >= n) {
                return Err(Error::Precondition(format!(
                    "relation mentions generator ({i},{j}) outside 0..{n}"
                )));
            }
        }
        Ok(WeightedPresentation { generators, relations, commutation_graph: None })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relations(&self) -> &[QuadraticRelation] {
        &self.relations
    }

    pub fn commutation_graph(&self) -> Option<&Graph> {
        self.commutation_graph.as_ref()
    }
}

/// One commutator relation per edge of `g`.
pub fn raag_presentation(g: &Graph) -> WeightedPresentation {
    let relations = g.edges().into_iter().map(|(i, j)| QuadraticRelation::commutator(i, j)).collect();
    WeightedPresentation {
        generators: g.labels().to_vec(),
        relations,
        commutation_graph: Some(g.clone()),
    }
}

/// Generators `a1, b1, …, ag, bg` (interleaved) with the single relation
/// `Σ [aᵢ, bᵢ]`.
pub fn surface_presentation(genus: usize) -> Result<WeightedPresentation> {
    if genus < 1 {
        return Err(Error::Precondition(format!("genus must be at least 1, got {genus}")));
    }
    let generators = (1..=genus).flat_map(|i| [format!("a{i}"), format!("b{i}")]).collect();
    let mut terms = Vec::new();
    for i in 0..genus {
        let (a, b) = (2 * i, 2 * i + 1);
        terms.push(((a, b), Rational::one()));
        terms.push(((b, a), -Rational::one()));
    }
    WeightedPresentation::new(generators, vec![QuadraticRelation::new(terms)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn raag_relation_counts() {
        assert_eq!(raag_presentation(&Graph::cycle(4)).relations().len(), 4);
        assert_eq!(raag_presentation(&Graph::discrete(2)).relations().len(), 0);
        assert_eq!(raag_presentation(&Graph::complete(3)).relations().len(), 3);
    }

    #[test]
    fn surface_shapes() {
        let t = surface_presentation(1).unwrap();
        assert_eq!(t.generators(), &["a1", "b1"]);
        assert_eq!(t.relations(), &[QuadraticRelation::commutator(0, 1)]);
        let s2 = surface_presentation(2).unwrap();
        assert_eq!((s2.n_generators(), s2.relations().len()), (4, 1));
        assert_eq!(s2.relations()[0].terms().len(), 4);
        let s3 = surface_presentation(3).unwrap();
        assert_eq!((s3.n_generators(), s3.relations().len()), (6, 1));
        assert!(surface_presentation(0).is_err());
    }

    #[test]
    fn out_of_range_relation_rejected() {
        let r = QuadraticRelation::commutator(0, 3);
        assert!(WeightedPresentation::new(vec!["a".into(), "b".into()], vec![r]).is_err());
    }
}
