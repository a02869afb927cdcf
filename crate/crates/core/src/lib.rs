//! Exact symbolic engine for the spherical function in the Shalika model
//! of GL(2n) over a p-adic field.
//!
//! The engine evaluates the spherical Shalika function `Ω(g_λ)` as an exact
//! Laurent polynomial in the Satake parameters `x_1, …, x_n` and in
//! `u = q^{-1/2}` (so `t = u² = q^{-1}`), through three independent
//! computation paths that must agree up to λ-independent calibration:
//!
//! * [`formula::omega_closed`] — the closed alternator form
//!   `∏(1 − t·e^α) · δ^{1/2}(g_λ) · 𝒜(e^{ρ+λ} ∏(1 − t·e^{-α}))`,
//! * [`formula::omega_gamma_sum`] — the sum over the hyperoctahedral Weyl
//!   group Γ of Sp(2n) with c-function style factors,
//! * [`formula::omega_hecke`] — the Casselman-basis assembly from Iwahori
//!   data: c_α factors over GL roots, functional-equation constants d_α,
//!   and the Poincaré constant Q.
//!
//! Independent oracles (alternant determinants, symplectic Weyl characters,
//! the GL(2) Whittaker specialization) live in [`oracles`]; the [`verify`]
//! module packages every cross-check into machine-readable report suites.
//!
//! All arithmetic is exact over arbitrary-precision rationals; there is no
//! floating-point mode.

pub mod arith;
pub mod formula;
pub mod oracles;
pub mod parallel;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use arith::{LaurentPoly, Monomial, Rational, RationalFn};
pub use formula::{ModelContext, OmegaPath, OmegaValue, TwistConvention};
pub use roots::{DominantLambda, GLRoot, RootKind, SpRoot, SpWeight};
pub use verify::{Suite, VerifyReport};
pub use weyl::{PermW, SignedPerm};

/// Errors shared across the engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two values of different ambient rank were combined.
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    /// No exact polynomial quotient exists.
    #[error("polynomials are not exactly divisible")]
    NotDivisible,
    /// Division by the zero polynomial.
    #[error("division by zero polynomial")]
    DivisionByZeroPoly,
    /// A negative exponent met a zero base during numeric evaluation.
    #[error("zero base raised to a negative exponent")]
    ZeroBase,
    /// A rank guard was exceeded (the group sums grow factorially).
    #[error("rank {0} exceeds the guard {1} for this operation")]
    RankTooLarge(usize, usize),
    /// λ is not weakly decreasing, or a path required λ_n ≥ 0.
    #[error("lambda is not dominant for this operation: {0}")]
    NotDominant(String),
    /// A rational-function denominator evaluated to zero.
    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,
}

pub type Result<T> = std::result::Result<T, Error>;
