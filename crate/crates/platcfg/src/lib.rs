//! platcfg — generator and verifier of spatial point–line configurations
//! with the symmetries of the Platonic solids.
//!
//! # Purpose
//!
//! A *(p_q, n_k) configuration* is a set of p points and n lines in space
//! such that every point lies on q lines, every line passes through k
//! points, and no two lines share more than one point. This crate builds
//! such configurations by placing planar *motifs* on the faces of a
//! Platonic solid, gluing coincident points, and augmenting the result
//! with edge, radial, antipodal, and axis lines — then proves at runtime
//! that the result really is a configuration with the claimed symmetry.
//!
//! # Why
//!
//! Floating-point collinearity *detection* is fragile, so the pipeline is
//! combinatorics-first: incidences are constructed symbolically by the
//! builder and geometry is a witness checked by the verifier. Every named
//! construction in [`catalog`] ships with its expected census, symmetry
//! class, and connectivity, and the test suite re-derives all of them.
//!
//! # Layout
//!
//! - [`solids`] — canonical geometry of the five Platonic solids, scaling,
//!   face frames, truncation.
//! - [`symmetry`] — finite isometry groups (rotation / full) by closure
//!   from generators; invariance testing and classification.
//! - [`incidence`] — the configuration data model, census, axiom
//!   verifier, connectivity, Levi graph.
//! - [`motif`] — planar motifs with vertex/edge/interior anchors, text
//!   file format with bit-exact round-trip.
//! - [`builder`] — motif placement, gluing, layers, and augmentation
//!   (edge / radial / antipodal / axis-plane lines), count prediction.
//! - [`catalog`] — named, parameterized build plans with expectations.
//! - [`io`] — canonical JSON documents, Levi text/DOT, and OBJ export.
//!
//! Runnable walkthroughs live in `examples/`; the `platcfg` binary is a
//! thin CLI over the same API.

pub mod builder;
pub mod catalog;
pub mod incidence;
pub mod io;
pub mod motif;
pub mod solids;
pub mod symmetry;

/// Default absolute tolerance for geometric predicates on unit-scale
/// geometry. Overridable in every operation that takes an `eps`.
pub const EPS: f64 = 1e-9;

/// Default distance below which a *non-incident* point near a line is
/// reported as an unintended-incidence warning (never a failure).
pub const DELTA_WARN: f64 = 1e-6;
