//! Groups of order `p^2 q^2`, their automorphism groups, and an exhaustive
//! automorphism oracle to check predicted orders against.
//!
//! ```
//! use p2q2::catalog::{build, GroupSpec};
//! use p2q2::autom::{brute_aut, DEFAULT_BUDGET};
//!
//! let spec: GroupSpec = "t19:p=5,q=2".parse().unwrap();
//! let g = build(&spec).unwrap().group;
//! assert_eq!(brute_aut(&g, DEFAULT_BUDGET).unwrap().order(), 1000);
//! ```

pub mod autom;
pub mod catalog;
pub mod cli;
pub mod gfp2;
pub mod group;
pub mod numtheory;

pub use autom::{verify, AutReport, Verdict, VerifyOptions};
pub use catalog::{build, GroupSpec};
pub use group::{PcGroup, PcPresentation};
