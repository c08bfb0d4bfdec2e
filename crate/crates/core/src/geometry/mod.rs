//! Exact vertex models of regular polytopes, their vertex rotations, and the
//! Schläfli quandles they carry.

mod lattice;
mod polytope;
mod rotation;
mod schlafli;

pub use lattice::{
    eisenstein_quandle, translation_certificate, AffineMap, LazyQuandle, TranslationCertificate,
};
pub use polytope::{build_polytope, GeometryError, PolytopeModel, Symbol};
pub use rotation::{vertex_rotation, PointedRotation};
pub use schlafli::{build_schlafli_quandle, lemma_relations_hold, SchlafliQuandle};
