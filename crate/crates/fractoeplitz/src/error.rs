use core::fmt;

/// Errors produced by the numerical kernels.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    Domain(&'static str),
    /// Adaptive quadrature exhausted its subdivision depth before reaching
    /// the requested tolerance. Carries the best estimate and its error bound.
    QuadratureDepth { estimate: f64, error: f64 },
    /// The Jacobi eigensolver ran out of sweeps; `off_norm` is the remaining
    /// off-diagonal Frobenius norm.
    JacobiSweeps { off_norm: f64 },
    /// A matrix required to be symmetric was not, within tolerance.
    NotSymmetric { deviation: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::QuadratureDepth { estimate, error } => write!(
                f,
                "quadrature did not converge: estimate {estimate:e}, error bound {error:e}"
            ),
            Error::JacobiSweeps { off_norm } => write!(
                f,
                "Jacobi sweeps exhausted with off-diagonal norm {off_norm:e}"
            ),
            Error::NotSymmetric { deviation } => {
                write!(f, "matrix is not symmetric: max |a_ij - a_ji| = {deviation:e}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
