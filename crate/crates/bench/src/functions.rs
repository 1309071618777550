use std::fmt;
use std::str::FromStr;

/// The four smooth-but-hard test functions of the convergence study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TestFunction {
    /// Runge function `1/(1+25x²)` on `[-1, 1]`.
    F1,
    /// Smoothed Heaviside `1/(1+e^{-2kx})`, `k = 100`, on `[-0.2, 0.2]`.
    F2,
    /// 2D Runge function `1/(1+25(x²+y²))` on `[-1, 1]²`.
    F7,
    /// 2D smoothed Heaviside `1/(1+e^{-√2 k (x+y)})`, `k = 100`, on `[-0.2, 0.2]²`.
    F10,
}

const K: f64 = 100.0;

impl TestFunction {
    pub const ALL: [TestFunction; 4] = [Self::F1, Self::F2, Self::F7, Self::F10];

    pub fn id(self) -> &'static str {
        match self {
            Self::F1 => "f1",
            Self::F2 => "f2",
            Self::F7 => "f7",
            Self::F10 => "f10",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Self::F1 | Self::F2 => 1,
            Self::F7 | Self::F10 => 2,
        }
    }

    /// Domain along each axis.
    pub fn domain(self) -> (f64, f64) {
        match self {
            Self::F1 | Self::F7 => (-1.0, 1.0),
            Self::F2 | Self::F10 => (-0.2, 0.2),
        }
    }

    /// Evaluates a 1D function. For 2D functions this is the `y = 0` slice.
    pub fn eval1(self, x: f64) -> f64 {
        match self {
            Self::F1 => 1.0 / (1.0 + 25.0 * x * x),
            Self::F2 => 1.0 / (1.0 + (-2.0 * K * x).exp()),
            Self::F7 | Self::F10 => self.eval2(x, 0.0),
        }
    }

    /// Evaluates a 2D function. 1D functions ignore `y`.
    pub fn eval2(self, x: f64, y: f64) -> f64 {
        match self {
            Self::F1 | Self::F2 => self.eval1(x),
            Self::F7 => 1.0 / (1.0 + 25.0 * (x * x + y * y)),
            Self::F10 => 1.0 / (1.0 + (-std::f64::consts::SQRT_2 * K * (x + y)).exp()),
        }
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown test function `{0}` (expected f1, f2, f7 or f10)")]
pub struct UnknownFunction(pub String);

impl FromStr for TestFunction {
    type Err = UnknownFunction;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| UnknownFunction(s.to_string()))
    }
}
