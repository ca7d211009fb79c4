//! Exact arithmetic for weighted backward shifts on the space of bounded
//! sequences: weight sequences with decidable structure, lazy vectors,
//! window-product infima, growth certificates and refutations, witness
//! constructions with exact error bounds, and closed-form numerical probes.
//!
//! Everything user-visible is exact rational arithmetic; floats only appear
//! as documented shadows (base-2 logarithms, probe values whose optimum is
//! a square root).

pub mod criteria;
pub mod error;
pub mod probe;
pub mod rational;
pub mod vectors;
pub mod weights;
pub mod witness;

pub use criteria::{
    classify_bilateral, classify_j0, classify_salas_lp, classify_unilateral,
    find_growth_certificate, Classification, GrowthCertificate, Horizons, J0Report, SalasReport,
    SalasVerdict, Verdict,
};
pub use error::{Error, Result};
pub use probe::{
    min_preimage_norm, min_window_error, probe_sweep, probe_sweep_threads, ErrorValue, ProbeKind,
    ProbeQuery, ProbeReport, ProbeRow,
};
pub use rational::{format_rational, parse_rational, pow_u64, sqrt_exact, to_f64_lossy, Rational};
pub use vectors::{
    apply_shift, distance_sup, is_c0, sup_norm, ComplexRational, FiniteVector, LeftTail, SupNorm,
    TailConstantVector, Vector,
};
pub use weights::{Ambient, Exactness, InfWindow, ProductValue, WeightForm, WeightSpec};
pub use witness::{
    bilateral_obstruction, build_witness, c0_obstruction, mixing_family, threshold_power,
    verify_witness, BilateralObstruction, C0Obstruction, CertificateSource, DiagonalStep,
    DiagonalStream, LazyWitness, WitnessFamily, WitnessSource,
};
