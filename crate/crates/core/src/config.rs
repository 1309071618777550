use std::fmt;
use std::str::FromStr;

use crate::error::InterpError;
use crate::scalar::Scalar;

/// Interpolation method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Data-bounded: each interval stays within its two endpoint values.
    Dbi,
    /// Constrained positivity-preserving: each interval stays within a
    /// relaxed window `[u_min, u_max]`.
    Ppi,
    /// Fritsch–Carlson monotone piecewise cubic Hermite baseline.
    Pchip,
    /// Piecewise linear.
    Linear,
}

impl Method {
    pub const ALL: [Method; 4] = [Self::Dbi, Self::Ppi, Self::Pchip, Self::Linear];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dbi => "dbi",
            Self::Ppi => "ppi",
            Self::Pchip => "pchip",
            Self::Linear => "linear",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = InterpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| InterpError::UnknownMethod(s.to_string()))
    }
}

/// Axis order of the tensor-product sweeps in 2D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SweepOrder {
    #[default]
    XThenY,
    YThenX,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterpConfig<T> {
    pub method: Method,
    /// Target polynomial degree per interval (DBI/PPI only).
    pub degree: usize,
    /// PPI window relaxation; ignored by the other methods.
    pub epsilon: T,
    pub sweep: SweepOrder,
}

impl<T: Scalar> InterpConfig<T> {
    pub const DEFAULT_EPSILON: f64 = 0.01;

    pub fn new(method: Method, degree: usize) -> Self {
        Self {
            method,
            degree,
            epsilon: T::lit(Self::DEFAULT_EPSILON),
            sweep: SweepOrder::default(),
        }
    }

    pub fn dbi(degree: usize) -> Self {
        Self::new(Method::Dbi, degree)
    }

    pub fn ppi(degree: usize) -> Self {
        Self::new(Method::Ppi, degree)
    }

    pub fn pchip() -> Self {
        Self::new(Method::Pchip, 3)
    }

    pub fn linear() -> Self {
        Self::new(Method::Linear, 1)
    }

    pub fn with_epsilon(mut self, epsilon: T) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_sweep(mut self, sweep: SweepOrder) -> Self {
        self.sweep = sweep;
        self
    }

    pub fn validate(&self) -> Result<(), InterpError> {
        if self.degree == 0 {
            return Err(InterpError::InvalidDegree);
        }
        if !(self.epsilon.is_finite() && self.epsilon >= T::zero()) {
            return Err(InterpError::InvalidEpsilon(self.epsilon.as_f64()));
        }
        Ok(())
    }
}
