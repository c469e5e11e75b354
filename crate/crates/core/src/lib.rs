//! Finite groupoids, G-sets and G-monoids over them, crossed G-sets, and
//! Burnside-type rings presented by explicit integer structure constants.

pub mod classify;
pub mod corpus;
pub mod crossed;
pub mod groupoid;
pub mod gset;
pub mod json;
pub mod ring;
pub mod sample;
pub mod subgroups;

pub use classify::{BasisCatalog, ClassifyError, TransitivePiece};
pub use crossed::{CrossedError, CrossedGSet, CrossedMap, SliceObject};
pub use groupoid::{FiniteGroupoid, GroupoidError, GroupoidFunctor, MorphismId, ObjectId};
pub use gset::{GMap, GMonoid, GSet, GSetError};
pub use ring::{RingElement, RingError, RingHom, RingPresentation};
