//! Exact arithmetic, finite quandles, presentations and their enumeration,
//! Schläfli quandles of regular polytopes, and the twist-spun trefoil
//! quandles `Q_m`.

pub mod exact;
pub mod geometry;
pub mod presentation;
pub mod quandle;
pub mod table;
pub mod twist;

pub use exact::{Eisenstein, ExactMatrix, ExactVector, Quaternion, Rational, Sqrt5Scalar};
pub use geometry::{
    build_schlafli_quandle, PointedRotation, PolytopeModel, SchlafliQuandle, Symbol,
};
pub use presentation::{
    enumerate_presentation, parse_presentation, EnumerationResult, FreeQuandleElement,
    Presentation, DEFAULT_BUDGET,
};
pub use quandle::{dihedral_quandle, find_isomorphism, FiniteQuandle, QuandleHom};
pub use table::TableFile;
pub use twist::{build_qm, ExtensionReport, TwistSpunQuandle};
