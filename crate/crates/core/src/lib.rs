//! Exact minimum-Lee-distance bounds, code analysis and exhaustive code
//! search for linear codes over `Z_{p^t}`.

pub mod bounds;
pub mod code;
pub mod error;
pub mod report;
pub mod ring;
pub mod search;

pub use bounds::{best_bound, BoundId, BoundResult, RankParams};
pub use code::{CodeSummary, GeneratorMatrix, LinearCode, RankProfile, SystematicForm};
pub use error::{Error, Result};
pub use ring::{Modulus, Rational, Residue, Valuation};
pub use search::{
    certify_mldr, enumerate_codes, phi_oracle, property_sweep, Certificate, PhiOutcome, PhiRecord, Property,
    SweepReport, SweepSpec, Verdict,
};
