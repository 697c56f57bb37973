use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactlin::RatMatrix;
use crate::{Error, Result};

use super::presentation::AlgebraPresentation;
use super::quiver::{ArrowId, VertexId};

/// A representation of a bound quiver: one vector space dimension per vertex
/// and one matrix per arrow, of shape `dim(target) x dim(source)`.
///
/// Construction checks that every relation evaluates to the zero matrix and
/// that all compositions of `nilpotency_bound` arrows act as zero, so a value
/// of this type is always an actual module over the presented algebra.
#[derive(Clone)]
pub struct Representation {
    presentation: Arc<AlgebraPresentation>,
    dim: BTreeMap<VertexId, usize>,
    action: BTreeMap<ArrowId, RatMatrix>,
}

impl Representation {
    pub fn new(
        presentation: Arc<AlgebraPresentation>,
        dim: BTreeMap<VertexId, usize>,
        action: BTreeMap<ArrowId, RatMatrix>,
    ) -> Result<Self> {
        let quiver = presentation.quiver();
        for v in dim.keys() {
            if !quiver.has_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        let mut full_dim: BTreeMap<VertexId, usize> =
            quiver.vertices.iter().map(|&v| (v, 0)).collect();
        for (&v, &d) in &dim {
            full_dim.insert(v, d);
        }
        let mut full_action = BTreeMap::new();
        for arrow in &quiver.arrows {
            let rows = full_dim[&arrow.target];
            let cols = full_dim[&arrow.source];
            let m = match action.get(&arrow.arrow_id) {
                Some(m) => {
                    if m.rows() != rows || m.cols() != cols {
                        return Err(Error::InvalidRepresentation(format!(
                            "arrow {} expects a {}x{} matrix, got {}x{}",
                            arrow.label,
                            rows,
                            cols,
                            m.rows(),
                            m.cols()
                        )));
                    }
                    m.clone()
                }
                None => RatMatrix::zeros(rows, cols),
            };
            full_action.insert(arrow.arrow_id, m);
        }
        let rep = Representation { presentation, dim: full_dim, action: full_action };
        rep.check_relations()?;
        rep.check_nilpotency()?;
        Ok(rep)
    }

    pub fn zero(presentation: Arc<AlgebraPresentation>) -> Self {
        Representation::new(presentation, BTreeMap::new(), BTreeMap::new())
            .expect("zero representation is valid")
    }

    pub fn simple(presentation: Arc<AlgebraPresentation>, v: VertexId) -> Result<Self> {
        if !presentation.quiver().has_vertex(v) {
            return Err(Error::UnknownVertex(v));
        }
        let mut dim = BTreeMap::new();
        dim.insert(v, 1);
        Representation::new(presentation, dim, BTreeMap::new())
    }

    pub fn presentation(&self) -> &Arc<AlgebraPresentation> {
        &self.presentation
    }

    pub fn dim_vector(&self) -> &BTreeMap<VertexId, usize> {
        &self.dim
    }

    pub fn dim_at(&self, v: VertexId) -> usize {
        self.dim.get(&v).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dim.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vertices carrying a nonzero space, ascending.
    pub fn support(&self) -> Vec<VertexId> {
        self.dim.iter().filter(|(_, &d)| d > 0).map(|(&v, _)| v).collect()
    }

    pub fn arrow_matrix(&self, a: ArrowId) -> &RatMatrix {
        &self.action[&a]
    }

    pub fn action(&self) -> &BTreeMap<ArrowId, RatMatrix> {
        &self.action
    }

    /// The matrix by which a composable path acts, first arrow applied first.
    pub fn path_matrix(&self, source: VertexId, arrows: &[ArrowId]) -> RatMatrix {
        let mut acc = RatMatrix::identity(self.dim_at(source));
        let mut at = source;
        for &a in arrows {
            let arrow = self.presentation.quiver().arrow(a);
            assert_eq!(arrow.source, at, "path not composable");
            acc = self.action[&a].mul(&acc);
            at = arrow.target;
        }
        acc
    }

    /// Block-diagonal direct sum. Both summands must share the presentation.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if !same_presentation(self, other) {
            return Err(Error::PresentationMismatch);
        }
        let mut dim = BTreeMap::new();
        for (&v, &d) in &self.dim {
            dim.insert(v, d + other.dim_at(v));
        }
        let mut action = BTreeMap::new();
        for (&a, m) in &self.action {
            let n = &other.action[&a];
            let arrow = self.presentation.quiver().arrow(a);
            let rows = dim[&arrow.target];
            let cols = dim[&arrow.source];
            let mut blk = RatMatrix::zeros(rows, cols);
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    blk.set(r, c, m.at(r, c).clone());
                }
            }
            for r in 0..n.rows() {
                for c in 0..n.cols() {
                    blk.set(m.rows() + r, m.cols() + c, n.at(r, c).clone());
                }
            }
            action.insert(a, blk);
        }
        Representation::new(Arc::clone(&self.presentation), dim, action)
    }

    pub fn direct_sum_many(parts: &[&Representation]) -> Result<Representation> {
        let first = parts.first().ok_or_else(|| {
            Error::InvalidRepresentation("direct sum of an empty list needs a presentation".into())
        })?;
        let mut acc = (*first).clone();
        for p in &parts[1..] {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    fn check_relations(&self) -> Result<()> {
        for rel in self.presentation.relations() {
            let src = self.presentation.quiver().arrow(rel.terms[0].path[0]).source;
            let mut sum: Option<RatMatrix> = None;
            for t in &rel.terms {
                let m = self.path_matrix(src, &t.path).scale(&t.coefficient);
                sum = Some(match sum {
                    None => m,
                    Some(s) => s.add(&m),
                });
            }
            if let Some(s) = sum {
                if !s.is_zero() {
                    return Err(Error::InvalidRepresentation(
                        "a relation does not act as zero".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn check_nilpotency(&self) -> Result<()> {
        // Walk all composable paths of length == bound and require zero.
        let bound = self.presentation.nilpotency_bound();
        let quiver = self.presentation.quiver();
        let from = quiver.arrows_from();
        let mut frontier: Vec<(VertexId, VertexId, RatMatrix)> = quiver
            .vertices
            .iter()
            .map(|&v| (v, v, RatMatrix::identity(self.dim_at(v))))
            .collect();
        for step in 0..bound {
            let mut next = Vec::new();
            for (src, tgt, m) in &frontier {
                if m.is_zero() {
                    continue;
                }
                for &a in &from[tgt] {
                    let prod = self.action[&a].mul(m);
                    if step + 1 == bound {
                        if !prod.is_zero() {
                            return Err(Error::InvalidRepresentation(format!(
                                "a path of length {bound} does not act as zero"
                            )));
                        }
                    } else {
                        next.push((*src, quiver.arrow(a).target, prod));
                    }
                }
            }
            if step + 1 == bound {
                break;
            }
            frontier = next;
        }
        Ok(())
    }
}

pub(crate) fn same_presentation(a: &Representation, b: &Representation) -> bool {
    Arc::ptr_eq(a.presentation(), b.presentation()) || a.presentation() == b.presentation()
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(self, other) && self.dim == other.dim && self.action == other.action
    }
}

impl Eq for Representation {}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<String> = self
            .dim
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(v, d)| format!("{v}:{d}"))
            .collect();
        write!(f, "Representation[{}]", dims.join(" "))
    }
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Representation", 3)?;
        s.serialize_field("presentation", self.presentation.as_ref())?;
        s.serialize_field("dim", &self.dim)?;
        s.serialize_field("action", &self.action)?;
        s.end()
    }
}
