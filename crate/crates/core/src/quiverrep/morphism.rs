use std::collections::BTreeMap;
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactlin::RatMatrix;
use crate::{Error, Result};

use super::rep::{same_presentation, Representation};
use super::quiver::VertexId;

/// A homomorphism of representations: one block per vertex, of shape
/// `dim_target(v) x dim_source(v)`, intertwining all arrow actions.
#[derive(Clone, PartialEq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    blocks: BTreeMap<VertexId, RatMatrix>,
}

impl Morphism {
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: BTreeMap<VertexId, RatMatrix>,
    ) -> Result<Self> {
        let m = Morphism::new_unchecked(source, target, blocks)?;
        m.check_intertwining()?;
        Ok(m)
    }

    /// Shape-checks only; used internally where intertwining holds by
    /// construction (and is still asserted in debug builds).
    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        blocks: BTreeMap<VertexId, RatMatrix>,
    ) -> Result<Self> {
        if !same_presentation(&source, &target) {
            return Err(Error::PresentationMismatch);
        }
        let mut full = BTreeMap::new();
        for &v in &source.presentation().quiver().vertices {
            let rows = target.dim_at(v);
            let cols = source.dim_at(v);
            let blk = match blocks.get(&v) {
                Some(b) => {
                    if b.rows() != rows || b.cols() != cols {
                        return Err(Error::InvalidMorphism(format!(
                            "block at vertex {v} expects {rows}x{cols}, got {}x{}",
                            b.rows(),
                            b.cols()
                        )));
                    }
                    b.clone()
                }
                None => RatMatrix::zeros(rows, cols),
            };
            full.insert(v, blk);
        }
        let m = Morphism { source, target, blocks: full };
        debug_assert!(m.check_intertwining().is_ok());
        Ok(m)
    }

    pub fn zero(source: Representation, target: Representation) -> Result<Self> {
        Morphism::new_unchecked(source, target, BTreeMap::new())
    }

    pub fn identity(rep: &Representation) -> Self {
        let blocks = rep
            .dim_vector()
            .iter()
            .map(|(&v, &d)| (v, RatMatrix::identity(d)))
            .collect();
        Morphism::new_unchecked(rep.clone(), rep.clone(), blocks).expect("identity is valid")
    }

    fn check_intertwining(&self) -> Result<()> {
        for arrow in &self.source.presentation().quiver().arrows {
            let lhs = self.blocks[&arrow.target].mul(self.source.arrow_matrix(arrow.arrow_id));
            let rhs = self.target.arrow_matrix(arrow.arrow_id).mul(&self.blocks[&arrow.source]);
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!(
                    "blocks do not intertwine arrow {}",
                    arrow.label
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn block(&self, v: VertexId) -> &RatMatrix {
        &self.blocks[&v]
    }

    pub fn blocks(&self) -> &BTreeMap<VertexId, RatMatrix> {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(RatMatrix::is_zero)
    }

    /// Composition `other . self` (self applied first).
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        if self.target != other.source {
            return Err(Error::InvalidMorphism("composition target/source mismatch".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(&v, b)| (v, other.blocks[&v].mul(b)))
            .collect();
        Morphism::new_unchecked(self.source.clone(), other.target.clone(), blocks)
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::InvalidMorphism("sum of morphisms with different ends".into()));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|(&v, b)| (v, b.add(&other.blocks[&v])))
            .collect();
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, s: &crate::exactlin::Rat) -> Morphism {
        let blocks = self.blocks.iter().map(|(&v, b)| (v, b.scale(s))).collect();
        Morphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
            .expect("scaling preserves validity")
    }

    /// k-fold composition of an endomorphism with itself.
    pub fn pow(&self, k: usize) -> Result<Morphism> {
        if self.source != self.target {
            return Err(Error::InvalidMorphism("pow of a non-endomorphism".into()));
        }
        let mut acc = Morphism::identity(&self.source);
        for _ in 0..k {
            acc = acc.then(self)?;
        }
        Ok(acc)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.values().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.values().all(|b| b.rank() == b.rows())
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.values().all(|b| b.rows() == b.cols() && b.rank() == b.rows())
    }

    /// True if every block is the same scalar multiple of the identity.
    pub fn is_scalar(&self) -> bool {
        let mut scalar: Option<crate::exactlin::Rat> = None;
        for b in self.blocks.values() {
            if b.rows() != b.cols() {
                return false;
            }
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    if r == c {
                        match &scalar {
                            None => scalar = Some(b.at(r, c).clone()),
                            Some(s) => {
                                if b.at(r, c) != s {
                                    return false;
                                }
                            }
                        }
                    } else if !b.at(r, c).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Kernel subrepresentation with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, Morphism) {
        let pres = Arc::clone(self.source.presentation());
        let mut bases = BTreeMap::new();
        let mut dim = BTreeMap::new();
        for (&v, b) in &self.blocks {
            let k = b.nullspace_basis();
            dim.insert(v, k.cols());
            bases.insert(v, k);
        }
        let mut action = BTreeMap::new();
        for arrow in pres.quiver().arrows.clone() {
            let ku = &bases[&arrow.source];
            let kv = &bases[&arrow.target];
            let mapped = self.source.arrow_matrix(arrow.arrow_id).mul(ku);
            let x = kv.solve(&mapped).expect("arrows preserve kernels");
            action.insert(arrow.arrow_id, x);
        }
        let ker = Representation::new(Arc::clone(&pres), dim, action)
            .expect("kernel subrepresentation is valid");
        let incl = Morphism::new_unchecked(ker.clone(), self.source.clone(), bases)
            .expect("kernel inclusion is valid");
        (ker, incl)
    }

    /// Image subrepresentation with its inclusion into the target.
    pub fn image(&self) -> (Representation, Morphism) {
        let pres = Arc::clone(self.source.presentation());
        let mut bases = BTreeMap::new();
        let mut dim = BTreeMap::new();
        for (&v, b) in &self.blocks {
            let im = b.image_basis();
            dim.insert(v, im.cols());
            bases.insert(v, im);
        }
        let mut action = BTreeMap::new();
        for arrow in pres.quiver().arrows.clone() {
            let iu = &bases[&arrow.source];
            let iv = &bases[&arrow.target];
            let mapped = self.target.arrow_matrix(arrow.arrow_id).mul(iu);
            let x = iv.solve(&mapped).expect("arrows preserve images");
            action.insert(arrow.arrow_id, x);
        }
        let im = Representation::new(Arc::clone(&pres), dim, action)
            .expect("image subrepresentation is valid");
        let incl = Morphism::new_unchecked(im.clone(), self.target.clone(), bases)
            .expect("image inclusion is valid");
        (im, incl)
    }

    /// Cokernel quotient with the projection from the target.
    pub fn cokernel(&self) -> (Representation, Morphism) {
        let pres = Arc::clone(self.source.presentation());
        let mut projs = BTreeMap::new();
        let mut dim = BTreeMap::new();
        for (&v, b) in &self.blocks {
            // Rows spanning the annihilator of the image: a canonical
            // surjection whose kernel is exactly the image of the block.
            let l = b.transpose().nullspace_basis().transpose();
            dim.insert(v, l.rows());
            projs.insert(v, l);
        }
        let mut action = BTreeMap::new();
        for arrow in pres.quiver().arrows.clone() {
            let lu = &projs[&arrow.source];
            let lv = &projs[&arrow.target];
            let rhs = lv.mul(self.target.arrow_matrix(arrow.arrow_id));
            // Solve X * Lu = Lv * N(arrow); Lu has full row rank.
            let x = lu
                .transpose()
                .solve(&rhs.transpose())
                .expect("cokernel action is well defined")
                .transpose();
            action.insert(arrow.arrow_id, x);
        }
        let coker = Representation::new(Arc::clone(&pres), dim, action)
            .expect("cokernel representation is valid");
        let proj = Morphism::new_unchecked(self.target.clone(), coker.clone(), projs)
            .expect("cokernel projection is valid");
        (coker, proj)
    }
}

impl std::fmt::Debug for Morphism {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Morphism[{:?} -> {:?}]", self.source, self.target)
    }
}

impl Serialize for Morphism {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Morphism", 3)?;
        s.serialize_field("source", &self.source)?;
        s.serialize_field("target", &self.target)?;
        s.serialize_field("blocks", &self.blocks)?;
        s.end()
    }
}
