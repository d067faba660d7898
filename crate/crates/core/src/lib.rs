//! Exact computation of generalized q-Stirling and Bell numbers, both by
//! weighted rook-placement enumeration on Ferrers boards and by recurrence,
//! together with an exact verifier for the convolution identities that
//! relate them.
//!
//! Everything is computed over Laurent polynomials in `q` with arbitrary
//! precision integer coefficients, so identity checks are exact equalities,
//! never numerical comparisons. All values are immutable once built and
//! every operation is a pure function; memoization lives in thread-local
//! tables.

pub mod identities;
pub mod laurent;
pub mod rook;
pub mod stirling;

pub use laurent::{
    bracket, q_binomial, q_binomial_composition_oracle, q_binomial_monotone_oracle, q_factorial,
    EvalError, LaurentPolynomial, ParseError,
};
pub use num_rational::BigRational;
pub use rook::{Board, BoardError, PreWeights, RookPlacement, Rule};
pub use stirling::{
    bell_number, bell_poly, bell_type2, check_hsu_shiue, oracle_bell, oracle_cycles,
    oracle_partitions, stirling, stirling_cd, stirling_scaled, stirling_type2, BellPolynomial,
    CdParams, HsuShiueReport, StirlingTable,
};

pub use identities::{
    run_sweep, IdentityError, IdentityReport, SweepSpec, IDENTITY_NAMES, NEGATIVE_CONTROL_NAMES,
};
