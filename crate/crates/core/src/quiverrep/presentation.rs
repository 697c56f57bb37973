use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, OnceLock};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactlin::Rat;
use crate::{Error, Result};

use super::quiver::{ArrowId, Quiver, Relation, VertexId};

pub type PathClassId = usize;

/// Marks how a finite window truncates an infinite ambient quiver: vertices
/// that may have more outgoing (resp. incoming) arrows beyond the window.
/// Projectives are untrusted when short paths reach a `missing_out` vertex,
/// injectives when short copaths start at a `missing_in` vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowBoundary {
    pub missing_out: BTreeSet<VertexId>,
    pub missing_in: BTreeSet<VertexId>,
}

impl WindowBoundary {
    pub fn new(
        missing_out: impl IntoIterator<Item = VertexId>,
        missing_in: impl IntoIterator<Item = VertexId>,
    ) -> Self {
        WindowBoundary {
            missing_out: missing_out.into_iter().collect(),
            missing_in: missing_in.into_iter().collect(),
        }
    }

    /// Both directions truncated at the same vertices.
    pub fn symmetric(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let set: BTreeSet<VertexId> = vertices.into_iter().collect();
        WindowBoundary { missing_out: set.clone(), missing_in: set }
    }

    fn swapped(&self) -> Self {
        WindowBoundary {
            missing_out: self.missing_in.clone(),
            missing_in: self.missing_out.clone(),
        }
    }
}

/// A nonzero path class of the bound algebra, named by its minimal
/// representative path (shortest, then lexicographic on arrow ids).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathClass {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl PathClass {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// A finite quiver with relations presenting a finite-dimensional algebra.
///
/// The relation shapes supported are monomial (a path is zero) and binomial
/// identifications (two scaled paths coincide); together with the nilpotency
/// bound these admit a congruence-closure rewriting of paths into a finite
/// class basis, computed once at construction.
///
/// `boundary` marks window-truncation vertices of an infinite ambient quiver.
/// Projectives, injectives and everything built from them refuse to answer
/// when the truncation could have cut paths they need (see `structure`).
pub struct AlgebraPresentation {
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency_bound: usize,
    boundary: WindowBoundary,
    classes: Vec<PathClass>,
    // Every composable path of length < bound, resolved to zero (None) or a
    // scalar multiple of a class representative.
    path_index: HashMap<(VertexId, Vec<ArrowId>), usize>,
    resolved: Vec<Option<(Rat, PathClassId)>>,
    from: BTreeMap<VertexId, Vec<PathClassId>>,
    to: BTreeMap<VertexId, Vec<PathClassId>>,
    opposite_cache: OnceLock<Arc<AlgebraPresentation>>,
}

struct Wuf {
    parent: Vec<usize>,
    factor: Vec<Rat>, // node = factor[node] * parent[node]
    zero: usize,
}

impl Wuf {
    fn new(n: usize) -> Self {
        // One extra node: the absorbing zero class.
        Wuf { parent: (0..=n).collect(), factor: vec![Rat::one(); n + 1], zero: n }
    }

    fn find(&mut self, i: usize) -> (usize, Rat) {
        if self.parent[i] == i {
            return (i, self.factor[i].clone());
        }
        let (root, f) = self.find(self.parent[i]);
        self.factor[i] = &self.factor[i] * &f;
        self.parent[i] = root;
        (root, self.factor[i].clone())
    }

    /// Imposes `node_i = c * node_j`. Returns true if anything changed.
    fn union(&mut self, i: usize, j: usize, c: &Rat) -> bool {
        let (ri, fi) = self.find(i);
        let (rj, fj) = self.find(j);
        if ri == rj {
            if ri == self.zero {
                return false;
            }
            if fi != c * &fj {
                // The class satisfies x = l*x with l != 1, hence is zero.
                self.parent[ri] = self.zero;
                self.factor[ri] = Rat::one();
                return true;
            }
            return false;
        }
        if ri == self.zero {
            self.parent[rj] = self.zero;
            self.factor[rj] = Rat::one();
            return true;
        }
        if rj == self.zero {
            self.parent[ri] = self.zero;
            self.factor[ri] = Rat::one();
            return true;
        }
        // Keep the smaller path index as root so representatives are the
        // minimal paths in enumeration order.
        if ri < rj {
            self.parent[rj] = ri;
            self.factor[rj] = &fi / &(c * &fj);
        } else {
            self.parent[ri] = rj;
            self.factor[ri] = &(c * &fj) / &fi;
        }
        true
    }

    fn is_zero(&mut self, i: usize) -> bool {
        self.find(i).0 == self.zero
    }
}

/// Either an enumerated path node, or a path of length >= bound (dead).
#[derive(Clone, Copy)]
enum Ext {
    Node(usize),
    Dead,
}

impl AlgebraPresentation {
    pub fn new(
        quiver: Quiver,
        relations: Vec<Relation>,
        nilpotency_bound: usize,
        boundary: WindowBoundary,
    ) -> Result<Self> {
        if nilpotency_bound == 0 {
            return Err(Error::InvalidPresentation("nilpotency bound must be positive".into()));
        }
        for v in boundary.missing_out.iter().chain(&boundary.missing_in) {
            if !quiver.has_vertex(*v) {
                return Err(Error::UnknownVertex(*v));
            }
        }
        validate_relations(&quiver, &relations)?;

        // Enumerate all composable paths of length < bound, by length then
        // lexicographically on arrow ids.
        let arrows_from = quiver.arrows_from();
        let mut paths: Vec<(VertexId, Vec<ArrowId>, VertexId)> = Vec::new();
        let mut path_index: HashMap<(VertexId, Vec<ArrowId>), usize> = HashMap::new();
        for &v in &quiver.vertices {
            path_index.insert((v, Vec::new()), paths.len());
            paths.push((v, Vec::new(), v));
        }
        let mut level_start = 0;
        for _len in 1..nilpotency_bound {
            let level_end = paths.len();
            for idx in level_start..level_end {
                let (src, arrows, tgt) = paths[idx].clone();
                for &a in &arrows_from[&tgt] {
                    let mut ext = arrows.clone();
                    ext.push(a);
                    let ntgt = quiver.arrow(a).target;
                    path_index.insert((src, ext.clone()), paths.len());
                    paths.push((src, ext, ntgt));
                }
            }
            level_start = level_end;
        }

        let mut uf = Wuf::new(paths.len());
        let zero = uf.zero;

        // Seed the congruence with the relations.
        for rel in &relations {
            let nodes: Vec<Ext> = rel
                .terms
                .iter()
                .map(|t| {
                    if t.path.len() >= nilpotency_bound {
                        Ext::Dead
                    } else {
                        let src = quiver.arrow(t.path[0]).source;
                        Ext::Node(path_index[&(src, t.path.clone())])
                    }
                })
                .collect();
            match (nodes.as_slice(), rel.terms.as_slice()) {
                ([Ext::Node(n)], _) => {
                    uf.union(*n, zero, &Rat::one());
                }
                ([Ext::Dead], _) => {}
                ([a, b], [t1, t2]) => {
                    let c = -(&t2.coefficient / &t1.coefficient);
                    match (a, b) {
                        (Ext::Node(n1), Ext::Node(n2)) => {
                            uf.union(*n1, *n2, &c);
                        }
                        (Ext::Node(n1), Ext::Dead) => {
                            uf.union(*n1, zero, &Rat::one());
                        }
                        (Ext::Dead, Ext::Node(n2)) => {
                            uf.union(*n2, zero, &Rat::one());
                        }
                        (Ext::Dead, Ext::Dead) => {}
                    }
                }
                _ => unreachable!("validated"),
            }
        }

        // Saturate: one-arrow extensions of congruent paths stay congruent.
        let arrows_into = quiver.arrows_into();
        loop {
            let mut changed = false;
            for pi in 0..paths.len() {
                let (root, f) = uf.find(pi);
                let (src, arrows, tgt) = paths[pi].clone();
                let consider = |uf: &mut Wuf,
                                    ext_of_pi: Ext,
                                    ext_of_rep: Ext,
                                    f: &Rat|
                 -> bool {
                    match (ext_of_pi, ext_of_rep) {
                        (Ext::Node(q), Ext::Node(e)) => uf.union(q, e, f),
                        (Ext::Node(q), Ext::Dead) => uf.union(q, zero, &Rat::one()),
                        (Ext::Dead, Ext::Node(e)) => uf.union(e, zero, &Rat::one()),
                        (Ext::Dead, Ext::Dead) => false,
                    }
                };
                let rep = if root == zero { None } else { Some(paths[root].clone()) };
                // Append an arrow after the path.
                for &a in &arrows_from[&tgt] {
                    let q = extend_append(&path_index, nilpotency_bound, src, &arrows, a);
                    let e = match &rep {
                        None => Ext::Dead,
                        Some((rs, ra, rt)) => {
                            debug_assert_eq!(*rt, tgt);
                            extend_append(&path_index, nilpotency_bound, *rs, ra, a)
                        }
                    };
                    changed |= consider(&mut uf, q, e, &f);
                }
                // Prepend an arrow before the path.
                for &a in &arrows_into[&src] {
                    let asrc = quiver.arrow(a).source;
                    let q = extend_prepend(&path_index, nilpotency_bound, asrc, &arrows, a);
                    let e = match &rep {
                        None => Ext::Dead,
                        Some((_, ra, _)) => {
                            extend_prepend(&path_index, nilpotency_bound, asrc, ra, a)
                        }
                    };
                    changed |= consider(&mut uf, q, e, &f);
                }
            }
            if !changed {
                break;
            }
        }

        // Collect classes (roots in enumeration order) and the reduce table.
        let mut class_of_root: HashMap<usize, PathClassId> = HashMap::new();
        let mut classes = Vec::new();
        let mut resolved = vec![None; paths.len()];
        for pi in 0..paths.len() {
            if uf.is_zero(pi) {
                continue;
            }
            let (root, f) = uf.find(pi);
            let id = *class_of_root.entry(root).or_insert_with(|| {
                let (src, arrows, tgt) = paths[root].clone();
                classes.push(PathClass { source: src, target: tgt, arrows });
                classes.len() - 1
            });
            resolved[pi] = Some((f, id));
        }

        let mut from: BTreeMap<VertexId, Vec<PathClassId>> =
            quiver.vertices.iter().map(|&v| (v, Vec::new())).collect();
        let mut to = from.clone();
        for (id, c) in classes.iter().enumerate() {
            from.get_mut(&c.source).unwrap().push(id);
            to.get_mut(&c.target).unwrap().push(id);
        }

        Ok(AlgebraPresentation {
            quiver,
            relations,
            nilpotency_bound,
            boundary,
            classes,
            path_index,
            resolved,
            from,
            to,
            opposite_cache: OnceLock::new(),
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency_bound
    }

    pub fn boundary(&self) -> &WindowBoundary {
        &self.boundary
    }

    /// The deterministic basis of nonzero path classes, sorted by length then
    /// lexicographically on arrow ids.
    pub fn path_classes(&self) -> &[PathClass] {
        &self.classes
    }

    pub fn class(&self, id: PathClassId) -> &PathClass {
        &self.classes[id]
    }

    pub fn algebra_dim(&self) -> usize {
        self.classes.len()
    }

    /// Rewrites a composable path to `scalar * class`, or `None` if it is
    /// zero in the algebra. Panics if the path is not composable.
    pub fn reduce_path(&self, source: VertexId, arrows: &[ArrowId]) -> Option<(Rat, PathClassId)> {
        if arrows.len() >= self.nilpotency_bound {
            return None;
        }
        let key = (source, arrows.to_vec());
        let idx = *self
            .path_index
            .get(&key)
            .unwrap_or_else(|| panic!("path not composable from vertex {source}"));
        self.resolved[idx].clone()
    }

    /// Class ids with the given source vertex, ascending.
    pub fn classes_from(&self, v: VertexId) -> &[PathClassId] {
        self.from.get(&v).map_or(&[], Vec::as_slice)
    }

    /// Class ids with the given target vertex, ascending.
    pub fn classes_to(&self, v: VertexId) -> &[PathClassId] {
        self.to.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn trivial_class(&self, v: VertexId) -> PathClassId {
        *self
            .classes_from(v)
            .iter()
            .find(|&&id| self.classes[id].is_trivial())
            .expect("trivial path class exists for every vertex")
    }

    /// The opposite presentation (arrows and relation paths reversed), cached
    /// so that `p.opposite().opposite()` returns the original `Arc`.
    pub fn opposite(self: &Arc<Self>) -> Arc<AlgebraPresentation> {
        self.opposite_cache
            .get_or_init(|| {
                let relations = self
                    .relations
                    .iter()
                    .map(|r| Relation {
                        terms: r
                            .terms
                            .iter()
                            .map(|t| {
                                let mut path = t.path.clone();
                                path.reverse();
                                super::quiver::RelationTerm {
                                    coefficient: t.coefficient.clone(),
                                    path,
                                }
                            })
                            .collect(),
                    })
                    .collect();
                let op = AlgebraPresentation::new(
                    self.quiver.opposite(),
                    relations,
                    self.nilpotency_bound,
                    self.boundary.swapped(),
                )
                .expect("opposite of a valid presentation is valid");
                let arc = Arc::new(op);
                let _ = arc.opposite_cache.set(Arc::clone(self));
                arc
            })
            .clone()
    }
}

fn extend_append(
    path_index: &HashMap<(VertexId, Vec<ArrowId>), usize>,
    bound: usize,
    src: VertexId,
    arrows: &[ArrowId],
    a: ArrowId,
) -> Ext {
    if arrows.len() + 1 >= bound {
        return Ext::Dead;
    }
    let mut v = arrows.to_vec();
    v.push(a);
    Ext::Node(path_index[&(src, v)])
}

fn extend_prepend(
    path_index: &HashMap<(VertexId, Vec<ArrowId>), usize>,
    bound: usize,
    arrow_source: VertexId,
    arrows: &[ArrowId],
    a: ArrowId,
) -> Ext {
    if arrows.len() + 1 >= bound {
        return Ext::Dead;
    }
    let mut v = Vec::with_capacity(arrows.len() + 1);
    v.push(a);
    v.extend_from_slice(arrows);
    Ext::Node(path_index[&(arrow_source, v)])
}

fn validate_relations(quiver: &Quiver, relations: &[Relation]) -> Result<()> {
    for rel in relations {
        if rel.terms.is_empty() {
            return Err(Error::InvalidPresentation("relation with no terms".into()));
        }
        if rel.terms.len() > 2 {
            return Err(Error::InvalidPresentation(format!(
                "relation with {} terms: only monomial and binomial identification \
                 relations admit a finite confluent rewriting here",
                rel.terms.len()
            )));
        }
        let mut endpoints = None;
        for t in &rel.terms {
            if t.coefficient.is_zero() {
                return Err(Error::InvalidPresentation("zero coefficient in relation".into()));
            }
            if t.path.is_empty() {
                return Err(Error::InvalidPresentation("empty path in relation".into()));
            }
            let mut prev_target = None;
            for &a in &t.path {
                if a >= quiver.arrows.len() {
                    return Err(Error::InvalidPresentation(format!("unknown arrow id {a}")));
                }
                let arrow = quiver.arrow(a);
                if let Some(pt) = prev_target {
                    if arrow.source != pt {
                        return Err(Error::InvalidPresentation(
                            "relation path is not composable".into(),
                        ));
                    }
                }
                prev_target = Some(arrow.target);
            }
            let src = quiver.arrow(t.path[0]).source;
            let tgt = prev_target.unwrap();
            match endpoints {
                None => endpoints = Some((src, tgt)),
                Some(e) => {
                    if e != (src, tgt) {
                        return Err(Error::InvalidPresentation(
                            "relation terms have mismatched endpoints".into(),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

impl PartialEq for AlgebraPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.relations == other.relations
            && self.nilpotency_bound == other.nilpotency_bound
            && self.boundary == other.boundary
    }
}

impl Eq for AlgebraPresentation {}

impl std::fmt::Debug for AlgebraPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraPresentation")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("relations", &self.relations.len())
            .field("nilpotency_bound", &self.nilpotency_bound)
            .field("dim", &self.classes.len())
            .finish()
    }
}

impl Serialize for AlgebraPresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AlgebraPresentation", 4)?;
        s.serialize_field("quiver", &self.quiver)?;
        s.serialize_field("relations", &self.relations)?;
        s.serialize_field("nilpotency_bound", &self.nilpotency_bound)?;
        s.serialize_field("boundary", &self.boundary)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for AlgebraPresentation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            quiver: Quiver,
            relations: Vec<Relation>,
            nilpotency_bound: usize,
            #[serde(default)]
            boundary: WindowBoundary,
        }
        let raw = Raw::deserialize(deserializer)?;
        AlgebraPresentation::new(raw.quiver, raw.relations, raw.nilpotency_bound, raw.boundary)
            .map_err(serde::de::Error::custom)
    }
}
