use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar the evaluation layer is generic over: `f32` or `f64`.
///
/// Exact quantities (angles, coefficients of cyclotomic integers, matrix
/// entries of the triangular systems) are carried as integers and only meet
/// this trait at evaluation boundaries.
pub trait Real: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static {
    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts to any Real")
    }

    fn from_i64_exact(x: i64) -> Self {
        Self::from_i64(x).expect("i64 converts to any Real")
    }
}

impl Real for f32 {}
impl Real for f64 {}
