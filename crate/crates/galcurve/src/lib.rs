//! Curve geometry in the Galilean 3-space.
//!
//! The Galilean 3-space is the Cayley-Klein geometry whose metric degenerates
//! along the first coordinate axis: the scalar product of two vectors is the
//! product of their first components unless both vanish, in which case the
//! Euclidean product of the remaining components takes over. Curves that are
//! graphs over the first coordinate, `(s, y(s), z(s))`, admit a particularly
//! clean Frenet theory in this setting, and that theory is what this crate
//! implements:
//!
//! * [`gal3`] — vectors, the degenerate scalar product, cross product, norm,
//!   and the isotropic/non-isotropic classification;
//! * [`expr`] — a small expression language for curvature and torsion inputs;
//! * [`fd`] — five-point finite-difference stencils on uniform grids;
//! * [`scalar`] — scalar functions of the curve parameter;
//! * [`curve`] — admissible curves, the built-in worked examples, and the
//!   special families (general helix, circular helix, Salkowski,
//!   anti-Salkowski);
//! * [`natural`] — reconstruction of a curve from natural equations
//!   `kappa(s)`, `tau(s)`;
//! * [`frenet`] — derivatives, curvature, torsion, the moving frame, frame
//!   equation residuals, and admissibility checks;
//! * [`smarandache`] — the TN, TB and TNB curves built from a moving frame;
//! * [`polyline`] — sampled curves and their CSV/JSON serializations;
//! * [`registry`] — textual curve specs shared by the CLI and demo bindings;
//! * [`verify`] — a built-in suite checking the library against closed forms.

pub mod curve;
pub mod error;
pub mod expr;
pub mod fd;
pub mod frenet;
pub mod gal3;
pub mod natural;
pub mod polyline;
pub mod registry;
pub mod scalar;
pub mod smarandache;
pub mod verify;

pub use curve::{uniform_grid, Curve, CurveMeta, FamilyParams};
pub use error::{Error, Result};
pub use fd::DerivOrder;
pub use frenet::{AdmissibilityIssue, AdmissibilityReport, FrenetFrame};
pub use gal3::{GVec3, VectorClass};
pub use natural::NaturalEquations;
pub use polyline::{Polyline, PolylineMeta, Sample};
pub use scalar::ScalarFn;
pub use smarandache::SmarandacheKind;

/// Version string stamped into exported polyline metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
