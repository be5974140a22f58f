//! Real scalar types the engine can run on.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real floating-point scalar backing every complex amplitude.
///
/// Implemented for `f32` and `f64`. The associated constants are the default
/// cutoffs used by [`Tolerance::default`](crate::hilbert::Tolerance).
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Debug + Display + std::fmt::LowerExp + Default + Send + Sync + 'static
{
    /// Singular-value / residual cutoff for rank decisions.
    const EPS_RANK: f64;
    /// Norm cutoff for vector and matrix equality.
    const EPS_EQ: f64;
    /// Cutoff for probability comparisons.
    const EPS_PROB: f64;

    /// Lossy conversion from `f64`; used for constants and sampled values.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("real scalar converts to f64")
    }
}

impl Real for f64 {
    const EPS_RANK: f64 = 1e-10;
    const EPS_EQ: f64 = 1e-9;
    const EPS_PROB: f64 = 1e-9;
}

impl Real for f32 {
    const EPS_RANK: f64 = 1e-4;
    const EPS_EQ: f64 = 5e-4;
    const EPS_PROB: f64 = 5e-4;
}
