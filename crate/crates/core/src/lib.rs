//! Binary cyclic codes and quantum synchronizable code constructions.
//!
//! Polynomials over GF(2), extension fields, cyclic codes, the punctured
//! Reed–Muller and BCH families, synchronizable scheme parameters and a
//! classical frame-synchronization simulator.

pub mod cyclic;
pub mod error;
pub mod ext;
pub mod families;
pub mod num;
pub mod poly;
pub mod scheme;
pub mod sim;

pub use cyclic::{CodeDescriptor, CyclicCode, DistanceReport};
pub use error::{Error, Result};
pub use poly::Poly2;
pub use families::{bch, punctured_rm, rm_bch_chain, CodeSpec, FamilyDescriptor};
pub use scheme::{build_scheme, DistanceMode, SyncScheme};
