//! Socle, radical, top, indecomposable projectives and injectives, minimal
//! covers and envelopes, syzygy and cosyzygy.
//!
//! Windowing discipline: a projective at `v` is trusted only if no nonzero
//! path class from `v` of length below `bound - 1` ends on a boundary vertex
//! (such a path might extend past the truncation in the ambient infinite
//! quiver); dually for injectives. Anything that would need an untrusted
//! (co)generator fails with `WindowExceeded`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactlin::RatMatrix;
use crate::{Error, Result};

use super::morphism::Morphism;
use super::presentation::{AlgebraPresentation, PathClassId};
use super::rep::Representation;
use super::quiver::VertexId;

/// Largest semisimple subrepresentation (joint kernel of all arrows out of
/// each vertex), with its inclusion.
pub fn socle(m: &Representation) -> (Representation, Morphism) {
    let pres = Arc::clone(m.presentation());
    let from = pres.quiver().arrows_from();
    let mut bases = BTreeMap::new();
    let mut dim = BTreeMap::new();
    for &v in &pres.quiver().vertices {
        let outs = &from[&v];
        let basis = if outs.is_empty() {
            RatMatrix::identity(m.dim_at(v))
        } else {
            let mut stacked = m.arrow_matrix(outs[0]).clone();
            for &a in &outs[1..] {
                stacked = stacked.vstack(m.arrow_matrix(a));
            }
            stacked.nullspace_basis()
        };
        dim.insert(v, basis.cols());
        bases.insert(v, basis);
    }
    // Arrows act by zero on the socle.
    let soc = Representation::new(Arc::clone(&pres), dim, BTreeMap::new())
        .expect("socle is a valid semisimple representation");
    let incl = Morphism::new_unchecked(soc.clone(), m.clone(), bases)
        .expect("socle inclusion is valid");
    (soc, incl)
}

/// Arrow-generated subrepresentation (the radical), with its inclusion.
pub fn radical(m: &Representation) -> (Representation, Morphism) {
    let pres = Arc::clone(m.presentation());
    let into = pres.quiver().arrows_into();
    let mut bases = BTreeMap::new();
    let mut dim = BTreeMap::new();
    for &v in &pres.quiver().vertices {
        let ins = &into[&v];
        let basis = if ins.is_empty() {
            RatMatrix::zeros(m.dim_at(v), 0)
        } else {
            let mut stacked = m.arrow_matrix(ins[0]).clone();
            for &a in &ins[1..] {
                stacked = stacked.hstack(m.arrow_matrix(a));
            }
            stacked.image_basis()
        };
        dim.insert(v, basis.cols());
        bases.insert(v, basis);
    }
    let mut action = BTreeMap::new();
    for arrow in &pres.quiver().arrows {
        let ru = &bases[&arrow.source];
        let rv = &bases[&arrow.target];
        let mapped = m.arrow_matrix(arrow.arrow_id).mul(ru);
        let x = rv.solve(&mapped).expect("arrows map the radical into itself");
        action.insert(arrow.arrow_id, x);
    }
    let rad = Representation::new(Arc::clone(&pres), dim, action)
        .expect("radical subrepresentation is valid");
    let incl = Morphism::new_unchecked(rad.clone(), m.clone(), bases)
        .expect("radical inclusion is valid");
    (rad, incl)
}

/// Semisimple quotient by the radical, with its projection.
pub fn top(m: &Representation) -> (Representation, Morphism) {
    let (_, incl) = radical(m);
    let (t, proj) = incl.cokernel();
    debug_assert!(t.action().values().all(RatMatrix::is_zero), "top must be semisimple");
    (t, proj)
}

/// Dimension vectors of the radical filtration `m, rad m, rad^2 m, ...`
/// down to zero.
pub fn radical_profile(m: &Representation) -> Vec<BTreeMap<VertexId, usize>> {
    let mut profile = vec![m.dim_vector().clone()];
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (r, _) = radical(&cur);
        if r.total_dim() == cur.total_dim() {
            break; // cannot happen for nilpotent bound algebras; guard anyway
        }
        profile.push(r.dim_vector().clone());
        cur = r;
    }
    profile
}

/// Dimension vectors of the socle filtration quotients.
pub fn socle_profile(m: &Representation) -> Vec<BTreeMap<VertexId, usize>> {
    let mut profile = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let (s, incl) = socle(&cur);
        profile.push(s.dim_vector().clone());
        if s.total_dim() == 0 {
            break;
        }
        let (q, _) = incl.cokernel();
        cur = q;
    }
    profile
}

fn projective_flag_check(pres: &AlgebraPresentation, v: VertexId) -> Result<()> {
    for &cid in pres.classes_from(v) {
        let c = pres.class(cid);
        if c.len() + 1 < pres.nilpotency_bound()
            && pres.boundary().missing_out.contains(&c.target)
        {
            return Err(Error::WindowExceeded(format!(
                "projective at {v} reaches window boundary vertex {} with room to extend",
                c.target
            )));
        }
    }
    Ok(())
}

fn injective_flag_check(pres: &AlgebraPresentation, v: VertexId) -> Result<()> {
    for &cid in pres.classes_to(v) {
        let c = pres.class(cid);
        if c.len() + 1 < pres.nilpotency_bound()
            && pres.boundary().missing_in.contains(&c.source)
        {
            return Err(Error::WindowExceeded(format!(
                "injective at {v} reaches window boundary vertex {} with room to extend",
                c.source
            )));
        }
    }
    Ok(())
}

/// Basis layout of the projective at `v`: path classes from `v`, grouped by
/// target vertex, ascending class id within each group.
pub(crate) fn projective_layout(
    pres: &AlgebraPresentation,
    v: VertexId,
) -> BTreeMap<VertexId, Vec<PathClassId>> {
    let mut layout: BTreeMap<VertexId, Vec<PathClassId>> =
        pres.quiver().vertices.iter().map(|&w| (w, Vec::new())).collect();
    for &cid in pres.classes_from(v) {
        layout.get_mut(&pres.class(cid).target).unwrap().push(cid);
    }
    layout
}

/// The indecomposable projective at `v`: the paths module on the nonzero
/// path classes starting at `v`.
pub fn projective(pres: &Arc<AlgebraPresentation>, v: VertexId) -> Result<Representation> {
    if !pres.quiver().has_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    projective_flag_check(pres, v)?;
    let layout = projective_layout(pres, v);
    let dim: BTreeMap<VertexId, usize> = layout.iter().map(|(&w, c)| (w, c.len())).collect();
    let mut action = BTreeMap::new();
    for arrow in &pres.quiver().arrows {
        let src_classes = &layout[&arrow.source];
        let tgt_classes = &layout[&arrow.target];
        let mut blk = RatMatrix::zeros(tgt_classes.len(), src_classes.len());
        for (col, &cid) in src_classes.iter().enumerate() {
            let c = pres.class(cid);
            let mut ext = c.arrows.clone();
            ext.push(arrow.arrow_id);
            if let Some((scalar, rid)) = pres.reduce_path(c.source, &ext) {
                let row = tgt_classes.iter().position(|&x| x == rid).expect(
                    "extended class keeps source v and lands in the target group",
                );
                blk.set(row, col, scalar);
            }
        }
        action.insert(arrow.arrow_id, blk);
    }
    Representation::new(Arc::clone(pres), dim, action)
}

/// Basis layout of the injective at `v`: dual classes of paths into `v`,
/// grouped by source vertex.
pub(crate) fn injective_layout(
    pres: &AlgebraPresentation,
    v: VertexId,
) -> BTreeMap<VertexId, Vec<PathClassId>> {
    let mut layout: BTreeMap<VertexId, Vec<PathClassId>> =
        pres.quiver().vertices.iter().map(|&w| (w, Vec::new())).collect();
    for &cid in pres.classes_to(v) {
        layout.get_mut(&pres.class(cid).source).unwrap().push(cid);
    }
    layout
}

/// The indecomposable injective at `v`: the copaths module, dual to the
/// classes of paths ending at `v`.
pub fn injective(pres: &Arc<AlgebraPresentation>, v: VertexId) -> Result<Representation> {
    if !pres.quiver().has_vertex(v) {
        return Err(Error::UnknownVertex(v));
    }
    injective_flag_check(pres, v)?;
    let layout = injective_layout(pres, v);
    let dim: BTreeMap<VertexId, usize> = layout.iter().map(|(&w, c)| (w, c.len())).collect();
    let mut action = BTreeMap::new();
    for arrow in &pres.quiver().arrows {
        let src_classes = &layout[&arrow.source]; // copaths q: source(arrow) -> v
        let tgt_classes = &layout[&arrow.target]; // copaths q': target(arrow) -> v
        let mut blk = RatMatrix::zeros(tgt_classes.len(), src_classes.len());
        // The arrow maps the dual of q to sum over q' of the coefficient of q
        // in (arrow then q') for copaths q' from the arrow's target.
        for (row, &qid) in tgt_classes.iter().enumerate() {
            let q = pres.class(qid);
            let mut ext = Vec::with_capacity(q.arrows.len() + 1);
            ext.push(arrow.arrow_id);
            ext.extend_from_slice(&q.arrows);
            if let Some((scalar, rid)) = pres.reduce_path(arrow.source, &ext) {
                let col = src_classes.iter().position(|&x| x == rid).expect(
                    "prepended class keeps target v and lands in the source group",
                );
                blk.set(row, col, scalar);
            }
        }
        action.insert(arrow.arrow_id, blk);
    }
    Representation::new(Arc::clone(pres), dim, action)
}

/// The canonical map `I(target of alpha) -> I(source of alpha)` given by
/// stripping a trailing arrow off copaths; this is how arrows act on hom
/// spaces out of injectives inside the star functor.
pub(crate) fn injective_strip_map(
    pres: &Arc<AlgebraPresentation>,
    i_target: &Representation,
    i_source: &Representation,
    arrow_id: usize,
) -> Result<Morphism> {
    let arrow = pres.quiver().arrow(arrow_id).clone();
    let layout_v = injective_layout(pres, arrow.target);
    let layout_u = injective_layout(pres, arrow.source);
    let mut blocks = BTreeMap::new();
    for &x in &pres.quiver().vertices {
        let from_v = &layout_v[&x]; // copaths x -> target(alpha)
        let from_u = &layout_u[&x]; // copaths x -> source(alpha)
        let mut blk = RatMatrix::zeros(from_u.len(), from_v.len());
        for (row, &qid) in from_u.iter().enumerate() {
            let q = pres.class(qid);
            let mut ext = q.arrows.clone();
            ext.push(arrow.arrow_id);
            if let Some((scalar, rid)) = pres.reduce_path(q.source, &ext) {
                if let Some(col) = from_v.iter().position(|&x2| x2 == rid) {
                    blk.set(row, col, scalar);
                }
            }
        }
        blocks.insert(x, blk);
    }
    Morphism::new(i_target.clone(), i_source.clone(), blocks)
}

/// Minimal projective cover `P -> m`: one projective per top multiplicity,
/// with the kernel checked to lie inside `rad P`.
pub fn projective_cover(m: &Representation) -> Result<(Representation, Morphism)> {
    let pres = Arc::clone(m.presentation());
    if m.is_zero() {
        let p = Representation::zero(Arc::clone(&pres));
        let surj = Morphism::zero(p.clone(), m.clone())?;
        return Ok((p, surj));
    }
    let (t, proj) = top(m);
    // Per vertex: columns of m_v that lift the standard basis of top_v.
    let mut summands: Vec<(VertexId, RatMatrix)> = Vec::new();
    for (&v, &k) in t.dim_vector() {
        if k == 0 {
            continue;
        }
        let lifts = proj
            .block(v)
            .solve(&RatMatrix::identity(k))
            .expect("top projection is surjective");
        summands.push((v, lifts));
    }

    let mut cover_parts: Vec<(Representation, BTreeMap<VertexId, RatMatrix>)> = Vec::new();
    for (v, lifts) in &summands {
        let pv = projective(&pres, *v)?;
        let layout = projective_layout(&pres, *v);
        for copy in 0..lifts.cols() {
            let gen = lifts.take_columns(&[copy]);
            let mut blocks = BTreeMap::new();
            for (&w, classes) in &layout {
                let mut blk = RatMatrix::zeros(m.dim_at(w), classes.len());
                for (col, &cid) in classes.iter().enumerate() {
                    let c = pres.class(cid);
                    let img = m.path_matrix(*v, &c.arrows).mul(&gen);
                    for r in 0..m.dim_at(w) {
                        blk.set(r, col, img.at(r, 0).clone());
                    }
                }
                blocks.insert(w, blk);
            }
            cover_parts.push((pv.clone(), blocks));
        }
    }

    let mut cover = Representation::zero(Arc::clone(&pres));
    let mut blocks: BTreeMap<VertexId, RatMatrix> = pres
        .quiver()
        .vertices
        .iter()
        .map(|&v| (v, RatMatrix::zeros(m.dim_at(v), 0)))
        .collect();
    for (part, part_blocks) in cover_parts {
        cover = cover.direct_sum(&part)?;
        for (&v, b) in &part_blocks {
            let cur = blocks.remove(&v).unwrap();
            blocks.insert(v, cur.hstack(b));
        }
    }
    let surj = Morphism::new(cover.clone(), m.clone(), blocks)?;
    if !surj.is_surjective() {
        return Err(Error::InvalidRepresentation("projective cover is not surjective".into()));
    }
    // Minimality: the kernel sits inside the radical of the cover.
    let (_, ker_incl) = surj.kernel();
    let (_, rad_incl) = radical(&cover);
    for &v in &pres.quiver().vertices {
        if !crate::exactlin::is_contained(ker_incl.block(v), rad_incl.block(v)) {
            return Err(Error::InvalidRepresentation(
                "projective cover is not minimal".into(),
            ));
        }
    }
    Ok((cover, surj))
}

/// Minimal injective envelope `m -> I`, built as the vector-space dual of the
/// projective cover over the opposite presentation, with the socle checked to
/// lie inside the image.
pub fn injective_envelope(m: &Representation) -> Result<(Representation, Morphism)> {
    let dual = super::functors::vector_dual(m);
    let (p, surj) = projective_cover(&dual)?;
    let envelope = super::functors::vector_dual(&p);
    let inj = super::functors::vector_dual_morphism(&surj);
    debug_assert_eq!(inj.source(), m);
    let (_, soc_incl) = socle(&envelope);
    for &v in &m.presentation().quiver().vertices {
        if !crate::exactlin::is_contained(soc_incl.block(v), inj.block(v)) {
            return Err(Error::InvalidRepresentation(
                "injective envelope is not minimal".into(),
            ));
        }
    }
    Ok((envelope, inj))
}

/// Kernel of the minimal projective cover.
pub fn syzygy(m: &Representation) -> Result<Representation> {
    let (_, surj) = projective_cover(m)?;
    Ok(surj.kernel().0)
}

/// Cokernel of the minimal injective envelope.
pub fn cosyzygy(m: &Representation) -> Result<Representation> {
    let (_, inj) = injective_envelope(m)?;
    Ok(inj.cokernel().0)
}

/// Iterated syzygy (positive steps) or cosyzygy (negative steps).
pub fn omega_power(m: &Representation, steps: i64) -> Result<Representation> {
    let mut cur = m.clone();
    for _ in 0..steps.unsigned_abs() {
        cur = if steps > 0 { syzygy(&cur)? } else { cosyzygy(&cur)? };
    }
    Ok(cur)
}

/// Checks `hom . hom' = id` style exactness for a composable pair: image of
/// the first equals kernel of the second, per vertex.
pub fn exact_at(first: &Morphism, second: &Morphism) -> bool {
    if first.target() != second.source() {
        return false;
    }
    first
        .target()
        .presentation()
        .quiver()
        .vertices
        .iter()
        .all(|&v| {
            let im = first.block(v).image_basis();
            let ker = second.block(v).nullspace_basis();
            crate::exactlin::same_span(&im, &ker)
        })
}
