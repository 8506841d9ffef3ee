//! Float helpers routed through `libm` so the crate builds without `std`.

/// Natural logarithm.
#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// `ln(1 + x)` without cancellation near zero.
#[inline]
pub fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

/// Exponential.
#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

/// `log(1 + e^z)`, the classical flip function, evaluated without overflow.
///
/// For large positive `z` this is `z + log(1 + e^{-z})`.
pub fn log_one_plus_exp(z: f64) -> f64 {
    if z > 30.0 {
        z + ln_1p(exp(-z))
    } else {
        ln_1p(exp(z))
    }
}

/// `arccosh(x)` for `x >= 1`, as `log(x + sqrt(x^2 - 1))`.
pub fn acosh(x: f64) -> f64 {
    libm::acosh(x)
}
