//! Fully parallel 3D thinning with deleting templates.
//!
//! The crate provides the original Ma–Sonka template family, a corrected
//! family whose Class D templates never admit two object points at the
//! `(p1, p2)` positions, and the same corrected family with errata edits.
//! [`engine::thin`] runs the border-marking / simultaneous-deletion loop;
//! [`verify`] holds the topology oracles used to check it.
//!
//! ```
//! use thin3d::{engine, templates::{build_template_set, Variant}, verify::fixtures};
//!
//! let fig7 = fixtures::fig7();
//! let set = build_template_set(Variant::Corrected);
//! let (out, report) = engine::thin(&fig7.volume, &set, &engine::ThinOptions::default());
//! assert!(report.fixpoint_reached);
//! assert!(out.get(fig7.point('d')));
//! ```

pub mod engine;
pub mod error;
pub mod io;
pub mod tail;
pub mod templates;
pub mod verify;
pub mod volume;

pub use error::{Error, Result};
pub use templates::{build_template_set, TemplateSet, Variant};
pub use volume::{Adjacency, BinaryVolume, Dims, Point3};
