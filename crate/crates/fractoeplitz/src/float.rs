//! Float math shims: inherent `f64` methods under `std`, `libm` otherwise.

#![allow(dead_code)]

macro_rules! shim {
    ($name:ident, $libm:ident, 1) => {
        #[cfg(feature = "std")]
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            x.$name()
        }
        #[cfg(not(feature = "std"))]
        #[inline(always)]
        pub(crate) fn $name(x: f64) -> f64 {
            libm::$libm(x)
        }
    };
    ($name:ident, $libm:ident, 2) => {
        #[cfg(feature = "std")]
        #[inline(always)]
        pub(crate) fn $name(x: f64, y: f64) -> f64 {
            x.$name(y)
        }
        #[cfg(not(feature = "std"))]
        #[inline(always)]
        pub(crate) fn $name(x: f64, y: f64) -> f64 {
            libm::$libm(x, y)
        }
    };
}

shim!(abs, fabs, 1);
shim!(sqrt, sqrt, 1);
shim!(sin, sin, 1);
shim!(cos, cos, 1);
shim!(exp, exp, 1);
shim!(ln, log, 1);
shim!(powf, pow, 2);
shim!(hypot, hypot, 2);
