//! Magnitude response of Butterworth-form low-pass and high-pass filters.
//!
//! Only the magnitude curve is computed; no coefficients or time-domain
//! filtering are involved.
//!
//! A commonly copied C version of this computation uses a power helper,
//! `mml`, that squares its argument `x - 1` times instead of raising it to
//! the power `x`, and its LPF variant passes the cutoff rather than `w / wc`.
//! [`magnitude`] uses the standard form; the helper survives as
//! [`paper_pow_as_printed`] so the difference stays executable.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FilterKind {
    LowPass,
    HighPass,
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FilterKind::LowPass => "lpf",
            FilterKind::HighPass => "hpf",
        })
    }
}

impl FromStr for FilterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lpf" | "lowpass" | "low-pass" => Ok(FilterKind::LowPass),
            "hpf" | "highpass" | "high-pass" => Ok(FilterKind::HighPass),
            other => Err(Error::invalid(
                "filter kind",
                format!("unknown kind {other:?}"),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterSpec {
    kind: FilterKind,
    order: u32,
    cutoff: f64,
}

impl FilterSpec {
    pub fn new(kind: FilterKind, order: u32, cutoff: f64) -> Result<Self> {
        if order == 0 {
            return Err(Error::invalid("filter order", "must be at least 1"));
        }
        if !(cutoff.is_finite() && cutoff > 0.0) {
            return Err(Error::invalid(
                "cutoff",
                format!("must be a positive frequency, got {cutoff}"),
            ));
        }
        Ok(Self {
            kind,
            order,
            cutoff,
        })
    }

    pub fn kind(&self) -> FilterKind {
        self.kind
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn magnitude(&self, w: f64) -> f64 {
        magnitude(self, w)
    }
}

/// `|H(w)|` for the Butterworth form of `spec`, in `[0, 1]`.
///
/// LPF: `1 / sqrt(1 + (w/wc)^(2N))`. HPF: `1 / sqrt(1 + (wc/w)^(2N))`, with
/// the `w = 0` limit taken as 0.
pub fn magnitude(spec: &FilterSpec, w: f64) -> f64 {
    debug_assert!(w >= 0.0, "negative frequency {w}");
    let ratio = match spec.kind {
        FilterKind::LowPass => w / spec.cutoff,
        FilterKind::HighPass => {
            if w == 0.0 {
                return 0.0;
            }
            spec.cutoff / w
        }
    };
    let p = ratio.powi(2 * spec.order as i32);
    // An overflowing power drives the response to 0 rather than NaN.
    1.0 / (1.0 + p).sqrt()
}

/// Evaluate `spec` at each grid point, returning `(w, |H(w)|)` pairs.
pub fn response_curve(spec: &FilterSpec, grid: &[f64]) -> Vec<(f64, f64)> {
    grid.iter().map(|&w| (w, magnitude(spec, w))).collect()
}

/// Integer frequency grid `0, 1, ..., wmax - 1`.
pub fn integer_grid(wmax: u32) -> Vec<f64> {
    (0..wmax).map(f64::from).collect()
}

/// The C helper `mml(a, x)`: `for (i = 0; i < x - 1; i++) a *= a;`.
///
/// This is `a^(2^(x-1))`, not `a^x`.
pub fn paper_pow_as_printed(a: f64, x: u32) -> f64 {
    assert!(x >= 1, "exponent must be at least 1");
    let mut a = a;
    for _ in 0..x - 1 {
        a *= a;
    }
    a
}
