//! Real scalar abstraction.
//!
//! Every numeric routine in this crate is generic over the real floating-point
//! type `T` carrying the `Complex<T>` matrix entries. `f64` is the working
//! precision; `f32` is supported with correspondingly looser validation
//! thresholds. Concrete `*64` aliases live at the crate root.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Real scalar type underlying all matrices, states and measures.
///
/// The associated constants are the validation thresholds used when checking
/// type invariants (Hermiticity, unit trace, positivity, ...). They are fixed
/// per precision so that `f32` instantiations do not spuriously reject states
/// that are as exact as that precision allows.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Largest elementwise |m - m†| accepted as Hermitian.
    const HERMITICITY_TOL: Self;
    /// Largest |Tr rho - 1| accepted as unit trace.
    const TRACE_TOL: Self;
    /// Most negative eigenvalue accepted as positive semidefinite, as a magnitude.
    const PSD_TOL: Self;
    /// Largest deviation from unit norm accepted for state vectors.
    const KET_NORM_TOL: Self;
    /// Eigenvalues at or below this floor contribute zero entropy.
    const ENTROPY_EIG_FLOOR: Self;
    /// Concurrence-matrix eigenvalues above `-CONCURRENCE_EIG_CLAMP` are clamped to zero.
    const CONCURRENCE_EIG_CLAMP: Self;
    /// Negative discord values within this magnitude are reported as zero.
    const DISCORD_CLAMP: Self;
    /// Measurement branches with probability below this are dropped unnormalized.
    const NULL_BRANCH_PROB: Self;
    /// Trace drift that aborts an integration.
    const INTEGRATION_TRACE_TOL: Self;
    /// Most negative full-state eigenvalue tolerated during integration, as a magnitude.
    const INTEGRATION_EIG_TOL: Self;
}

impl Scalar for f64 {
    const HERMITICITY_TOL: Self = 1e-10;
    const TRACE_TOL: Self = 1e-9;
    const PSD_TOL: Self = 1e-8;
    const KET_NORM_TOL: Self = 1e-12;
    const ENTROPY_EIG_FLOOR: Self = 1e-12;
    const CONCURRENCE_EIG_CLAMP: Self = 1e-10;
    const DISCORD_CLAMP: Self = 1e-6;
    const NULL_BRANCH_PROB: Self = 1e-14;
    const INTEGRATION_TRACE_TOL: Self = 1e-6;
    const INTEGRATION_EIG_TOL: Self = 1e-6;
}

impl Scalar for f32 {
    const HERMITICITY_TOL: Self = 1e-5;
    const TRACE_TOL: Self = 1e-5;
    const PSD_TOL: Self = 1e-4;
    const KET_NORM_TOL: Self = 1e-6;
    const ENTROPY_EIG_FLOOR: Self = 1e-6;
    const CONCURRENCE_EIG_CLAMP: Self = 1e-5;
    const DISCORD_CLAMP: Self = 1e-3;
    const NULL_BRANCH_PROB: Self = 1e-7;
    const INTEGRATION_TRACE_TOL: Self = 1e-3;
    const INTEGRATION_EIG_TOL: Self = 1e-3;
}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn fl<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("finite f64 literal converts into any Scalar")
}

/// Complex number from real/imaginary `f64` literals.
#[inline]
pub fn cx<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(fl(re), fl(im))
}

/// Purely real complex number.
#[inline]
pub fn cr<T: Scalar>(re: T) -> Complex<T> {
    Complex::new(re, T::zero())
}
