//! Representations of the necklace braid groups NB_n for n = 2, 3, 4.
//!
//! The necklace braid group NB_n is generated by σ₁..σ_n (pass circle i
//! through circle i+1) and τ (rotate every circle one step), subject to
//! the braid relations (B1), (B2) and the necklace relations (N1), (N2).
//! This crate constructs its dimension-2 irreducible representations and
//! their dimension-4 tensor products, decides irreducibility both by
//! closed-form criteria and by independent commutant/Burnside oracles,
//! and solves the unitarization problem, producing machine-checkable
//! certificates throughout.
//!
//! Everything runs in one of two arithmetic modes: exact (the cyclotomic
//! field Q(ζ₂₄), which contains every root of unity the subject needs)
//! or approximate (complex doubles with explicit tolerances).
//!
//! Start with the runnable examples (`cargo run --example build_and_verify`)
//! or the `rep` binary (`cargo run --bin rep -- --help`).

pub mod analysis;
pub mod campaign;
pub mod cli;
pub mod group;
pub mod linalg;
pub mod sampling;
pub mod scalar;
pub mod unitarity;

pub use analysis::{
    burnside_dim, certify, closed_form_irreducible, commutant_dim, reducibility_witness,
    tensor_rep, AnalysisError, IrreducibilityCertificate, TensorParams, Verdict, Witness,
    WITNESS_TOL,
};
pub use campaign::{run_campaign, CampaignSummary, RunConfig};
pub use group::{
    Gen, NecklacePresentation, ParamError, RelationReport, Rep, RepParams, Row, Sign, Twist,
    ValidatedParams, Word,
};
pub use linalg::{LinalgError, Matrix};
pub use scalar::{Cyclotomic, Mode, Scalar, ScalarError, DEFAULT_TOL, REAL_CMP_GUARD};
pub use unitarity::{
    check_unitary, family_point_n3, family_point_n4_minus_one, family_point_n4_quarter,
    solve_unitarizing_form, FamilyPoint, Obstruction, UnitarityCertificate, UnitarityError,
    UnitarityStatus,
};
