//! Canonical trace ideals, CTR verdicts and Gorenstein loci of Schubert
//! cycles `G(X; γ)` and determinantal rings `R(X; δ)`, computed from the
//! combinatorics of their minor posets, together with a brute-force oracle
//! that re-derives every identity the computation relies on.

pub mod dehom;
pub mod determinantal;
pub mod error;
pub mod exec;
pub mod oracle;
pub mod poset;
pub mod schubert;

pub use dehom::{
    determinantal_profile, n_thresholds, phi_forward, phi_inverse, DeterminantalProfile,
    LiftedIndex, TauEntry, ThresholdList,
};
pub use determinantal::{
    closed_form, det_report, det_report_with_cap, det_trace, ClosedForm, DeterminantalReport,
    DeterminantalWitness, DEFAULT_MIN_DEGREE_CAP,
};
pub use error::{Error, Result};
pub use exec::Execution;
pub use poset::{
    enumerate_bi_interval, enumerate_bi_interval_capped, enumerate_schubert_interval,
    enumerate_schubert_interval_capped, Ambient, BiMinor, Multidegree, SchubertIndex,
};
pub use schubert::{
    block_decompose, boundary_family, canonical_class, kappa_profile, schubert_report,
    schubert_trace, zeta_sigma, BaseRingAssumptions, BlockData, BoundaryFamily, BoundaryLevel,
    CtrVerdict, GorensteinLocus, KappaProfile, PrimeGenerator, PrimeMarker, SchubertReport,
    SchubertWitness, TraceDescription, TraceFactor,
};
