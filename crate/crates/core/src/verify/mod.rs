//! Oracles and audits used to check the thinning engine.

pub mod audit;
pub mod components;
pub mod fixtures;
pub mod fuzz;
pub mod simple;

pub use audit::{audit_p1p2, P1P2AuditReport};
pub use components::{label_components, ComponentLabeling};
pub use fuzz::{fuzz_connectivity, FuzzReport};
pub use simple::is_simple;
