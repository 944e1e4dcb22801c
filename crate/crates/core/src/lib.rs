//! Orbits of maximal unipotent subgroups on complete simplicial toric
//! varieties.
//!
//! Given a complete simplicial fan, [`orbits::finiteness_verdict`] decides
//! whether a maximal unipotent subgroup of the automorphism group acts with
//! finitely many orbits: the variety must be radiant (its fan bilateral) and
//! every monoid Γ(σ), generated by the classes of the rays outside σ, must be
//! free. When the answer is yes, [`orbits::orbit_catalog`] lists the orbits
//! together with the torus orbits each one contains.
//!
//! The crate is layered bottom-up:
//!
//! * [`linalg`]: exact integer kernel (Smith form, Fourier–Motzkin, monoid
//!   membership search).
//! * [`fan`]: fan validation and completeness.
//! * [`class_group`] and [`radiance`]: the divisor class group and the
//!   bilateral (radiant) structure.
//! * [`demazure`]: Demazure roots, the unipotent subgroup and the order ≺.
//! * [`monoid`]: submonoids of the class group and their freeness.
//! * [`orbits`]: basic subsets, the verdict and the orbit catalog.
//! * [`cox`]: exact simulation of the actions on total coordinate space.
//! * [`catalog`]: named families and classification cross-checks.

pub mod analysis;
pub mod catalog;
pub mod class_group;
pub mod cox;
pub mod demazure;
pub mod fan;
pub mod linalg;
pub mod monoid;
pub mod orbits;
pub mod radiance;

pub use analysis::{Analysis, AnalysisError};
pub use fan::{validate_fan, Cone, Fan, FanError};
pub use orbits::{finiteness_verdict, orbit_catalog, InfiniteReason, OrbitRecord, Verdict};
