use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::exactlin::Rat;
use crate::{Error, Result};

pub type VertexId = i64;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub arrow_id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
    pub label: String,
}

/// A finite quiver: ordered vertices and labelled arrows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<VertexId>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<VertexId>, arrows: Vec<Arrow>) -> Result<Self> {
        let vset: BTreeSet<VertexId> = vertices.iter().copied().collect();
        if vset.len() != vertices.len() {
            return Err(Error::InvalidPresentation("duplicate vertex ids".into()));
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.arrow_id != i {
                return Err(Error::InvalidPresentation(format!(
                    "arrow ids must be 0..n in order, got {} at position {i}",
                    a.arrow_id
                )));
            }
            if !vset.contains(&a.source) || !vset.contains(&a.target) {
                return Err(Error::InvalidPresentation(format!(
                    "arrow {} has undeclared endpoint",
                    a.label
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn arrow(&self, id: ArrowId) -> &Arrow {
        &self.arrows[id]
    }

    /// Arrow ids grouped by source vertex, in arrow-id order.
    pub fn arrows_from(&self) -> BTreeMap<VertexId, Vec<ArrowId>> {
        let mut map: BTreeMap<VertexId, Vec<ArrowId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for a in &self.arrows {
            map.get_mut(&a.source).unwrap().push(a.arrow_id);
        }
        map
    }

    /// Arrow ids grouped by target vertex, in arrow-id order.
    pub fn arrows_into(&self) -> BTreeMap<VertexId, Vec<ArrowId>> {
        let mut map: BTreeMap<VertexId, Vec<ArrowId>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for a in &self.arrows {
            map.get_mut(&a.target).unwrap().push(a.arrow_id);
        }
        map
    }

    /// Same vertices and arrow ids, with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    arrow_id: a.arrow_id,
                    source: a.target,
                    target: a.source,
                    label: a.label.clone(),
                })
                .collect(),
        }
    }
}

/// One summand of a relation: a coefficient times a composable path.
///
/// Paths are stored first-arrow-first: `path[0]` is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTerm {
    pub coefficient: Rat,
    pub path: Vec<ArrowId>,
}

/// A relation of the bound path algebra. All terms share one source and one
/// target; supported shapes are monomial (one term) and binomial
/// identifications (two terms).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<RelationTerm>,
}

impl Relation {
    pub fn monomial(path: Vec<ArrowId>) -> Self {
        Relation { terms: vec![RelationTerm { coefficient: Rat::one(), path }] }
    }

    /// The identification `path_a = path_b`.
    pub fn identify(path_a: Vec<ArrowId>, path_b: Vec<ArrowId>) -> Self {
        Relation {
            terms: vec![
                RelationTerm { coefficient: Rat::one(), path: path_a },
                RelationTerm { coefficient: -Rat::one(), path: path_b },
            ],
        }
    }
}
