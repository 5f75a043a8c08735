//! Chebyshev polynomials and their exponential deformation.
//!
//! The exponential Chebyshev functions are the μ-deformed analogues of the
//! classical polynomials. In angular coordinates `t = cos θ` they take the
//! trigonometric form
//!
//! ```text
//! T_{μ,n}(cos θ) = cos(nθ − μ sin θ)
//! U_{μ,n}(cos θ) = sin((n+1)θ − μ sin θ) / sin θ
//! ```
//!
//! and reduce to `T_n`, `U_n` at μ = 0. Evaluation goes through the
//! trigonometric form, which is stable near the interval endpoints where the
//! algebraic form `(t ± i√(1−t²))^n` cancels catastrophically.

use num_complex::Complex64;
use thiserror::Error;

/// The transform parameter μ ∈ ℂ carried through every operator.
///
/// Construction rejects non-finite components, so downstream code can assume
/// a well-formed parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mu(Complex64);

impl Mu {
    pub fn new(mu: Complex64) -> Result<Self, BasisError> {
        if mu.re.is_finite() && mu.im.is_finite() {
            Ok(Mu(mu))
        } else {
            Err(BasisError::NonFiniteParameter { mu })
        }
    }

    /// Real parameter, e.g. `Mu::real(4.0 * PI)`.
    pub fn real(re: f64) -> Result<Self, BasisError> {
        Self::new(Complex64::new(re, 0.0))
    }

    /// Purely imaginary parameter.
    pub fn imag(im: f64) -> Result<Self, BasisError> {
        Self::new(Complex64::new(0.0, im))
    }

    pub fn zero() -> Self {
        Mu(Complex64::new(0.0, 0.0))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.re == 0.0 && self.0.im == 0.0
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BasisError {
    #[error("argument t = {t} lies outside [-1, 1]")]
    OutsideInterval { t: f64 },
    #[error("argument t = {t} lies on the interval boundary where the function is unbounded")]
    Endpoint { t: f64 },
    #[error("transform parameter must have finite components, got {mu}")]
    NonFiniteParameter { mu: Complex64 },
}

/// First-kind Chebyshev polynomial `T_n(t)` via the three-term recurrence.
pub fn chebyshev_t(n: u32, t: f64) -> Result<f64, BasisError> {
    check_closed_interval(t)?;
    Ok(cheb_recurrence(n, t).0)
}

/// Second-kind Chebyshev polynomial `U_n(t)` via the three-term recurrence.
pub fn chebyshev_u(n: u32, t: f64) -> Result<f64, BasisError> {
    check_closed_interval(t)?;
    Ok(cheb_recurrence(n, t).1)
}

// Both kinds share the recurrence p_{k+1} = 2t p_k - p_{k-1}; they differ
// only in the degree-1 seed.
fn cheb_recurrence(n: u32, t: f64) -> (f64, f64) {
    let (mut t_prev, mut t_cur) = (1.0, t);
    let (mut u_prev, mut u_cur) = (1.0, 2.0 * t);
    if n == 0 {
        return (1.0, 1.0);
    }
    for _ in 1..n {
        let t_next = 2.0 * t * t_cur - t_prev;
        t_prev = t_cur;
        t_cur = t_next;
        let u_next = 2.0 * t * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
    }
    (t_cur, u_cur)
}

/// Exponential Chebyshev function of the first kind, `T_{μ,n}(t)`.
///
/// Evaluated as `cos(nθ − μ sin θ)` with `θ = arccos t`, which extends
/// continuously to the endpoints: `T_{μ,n}(±1) = (±1)^n`.
pub fn exp_cheb_t(mu: Mu, n: u32, t: f64) -> Result<Complex64, BasisError> {
    check_closed_interval(t)?;
    let theta = t.acos();
    let arg = Complex64::new(f64::from(n) * theta, 0.0) - mu.value() * theta.sin();
    Ok(arg.cos())
}

/// Exponential Chebyshev function of the second kind, `U_{μ,n}(t)`.
///
/// Evaluated as `sin((n+1)θ − μ sin θ)/sin θ`. At the endpoints the ratio is
/// replaced by its limit: `(n+1) − μ` at `t = 1` and `(−1)^n (n+1+μ)` at
/// `t = −1`.
pub fn exp_cheb_u(mu: Mu, n: u32, t: f64) -> Result<Complex64, BasisError> {
    check_closed_interval(t)?;
    let np1 = f64::from(n) + 1.0;
    if t == 1.0 {
        return Ok(Complex64::new(np1, 0.0) - mu.value());
    }
    if t == -1.0 {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return Ok((Complex64::new(np1, 0.0) + mu.value()) * sign);
    }
    let theta = t.acos();
    let sin_theta = theta.sin();
    let arg = Complex64::new(np1 * theta, 0.0) - mu.value() * sin_theta;
    Ok(arg.sin() / sin_theta)
}

/// The null function `cos(μ√(1−t²)) / √(1−t²)`.
///
/// Its cosh-weighted finite Hilbert transform vanishes identically, which is
/// what makes the m-space inverse a pseudo-inverse. Unbounded as |t| → 1, so
/// it is only defined on the open interval.
pub fn null_function(mu: Mu, t: f64) -> Result<Complex64, BasisError> {
    if !(t.abs() <= 1.0) {
        return Err(BasisError::OutsideInterval { t });
    }
    if t.abs() == 1.0 {
        return Err(BasisError::Endpoint { t });
    }
    let root = (1.0 - t * t).sqrt();
    Ok((mu.value() * root).cos() / root)
}

/// `cos(μ√(1−t²))`, the cosine factor shared by the inversion weights.
pub fn cosine_factor(mu: Mu, t: f64) -> Complex64 {
    (mu.value() * (1.0 - t * t).sqrt()).cos()
}

/// `sin(μ√(1−t²))`, the sine factor shared by the inversion weights.
pub fn sine_factor(mu: Mu, t: f64) -> Complex64 {
    (mu.value() * (1.0 - t * t).sqrt()).sin()
}

/// Angular-coordinate form of [`cosine_factor`]: `cos(μ sin θ)`.
pub fn cosine_factor_theta(mu: Mu, theta: f64) -> Complex64 {
    (mu.value() * theta.sin()).cos()
}

/// Angular-coordinate form of [`sine_factor`]: `sin(μ sin θ)`.
pub fn sine_factor_theta(mu: Mu, theta: f64) -> Complex64 {
    (mu.value() * theta.sin()).sin()
}

fn check_closed_interval(t: f64) -> Result<(), BasisError> {
    // NaN fails the comparison and is rejected as well.
    if t.abs() <= 1.0 {
        Ok(())
    } else {
        Err(BasisError::OutsideInterval { t })
    }
}
