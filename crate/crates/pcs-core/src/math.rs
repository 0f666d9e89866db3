//! Float helpers not available in `core`.

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}
