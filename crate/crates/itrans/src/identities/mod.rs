//! The executable identity catalog and its verification machinery.

pub mod catalog;
pub mod report;
pub mod verify;

pub use catalog::{catalog, EvalOutcome, IdentityRecord, ParamPoint, TolClass};
pub use report::{PointResult, Summary, VerificationReport};
pub use verify::{verify, verify_all, QuadSettings, ToleranceProfile};
