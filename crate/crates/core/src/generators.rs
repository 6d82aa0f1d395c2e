//! Sine tables and float to PCM conversion.

use std::f64::consts::PI;

use crate::codec::saturate_f64;
use crate::{Error, Result, Sample16};

/// Which value of pi the sine formula uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PiMode {
    #[default]
    Exact,
    /// pi truncated to 3.14.
    Approx314,
}

impl PiMode {
    #[allow(clippy::approx_constant)]
    pub fn value(self) -> f64 {
        match self {
            PiMode::Exact => PI,
            PiMode::Approx314 => 3.14,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineSpec {
    num_samples: usize,
    cycles: f64,
    amplitude: f64,
    pi_mode: PiMode,
}

impl SineSpec {
    pub fn new(num_samples: usize, cycles: f64, amplitude: f64, pi_mode: PiMode) -> Result<Self> {
        if num_samples == 0 {
            return Err(Error::invalid("sample count", "must be at least 1"));
        }
        if !(cycles.is_finite() && cycles > 0.0) {
            return Err(Error::invalid(
                "cycles",
                format!("must be positive, got {cycles}"),
            ));
        }
        if !(amplitude.is_finite() && amplitude > 0.0) {
            return Err(Error::invalid(
                "amplitude",
                format!("must be positive, got {amplitude}"),
            ));
        }
        Ok(Self {
            num_samples,
            cycles,
            amplitude,
            pi_mode,
        })
    }

    /// 100 samples, one cycle, unit amplitude, pi = 3.14.
    pub fn sine_table_program() -> Self {
        Self::new(100, 1.0, 1.0, PiMode::Approx314).expect("valid preset")
    }

    pub fn num_samples(&self) -> usize {
        self.num_samples
    }

    pub fn cycles(&self) -> f64 {
        self.cycles
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn pi_mode(&self) -> PiMode {
        self.pi_mode
    }
}

/// `y[i] = amplitude * sin(2 * pi * cycles * i / num_samples)`.
pub fn gen_sine(spec: &SineSpec) -> Vec<f64> {
    let p = spec.pi_mode.value();
    let n = spec.num_samples as f64;
    (0..spec.num_samples)
        .map(|i| spec.amplitude * (2.0 * p * spec.cycles * i as f64 / n).sin())
        .collect()
}

/// Map normalised samples to PCM: `round(x * full_scale)`, saturated.
pub fn to_pcm(samples: &[f64], full_scale: u16) -> Result<Vec<Sample16>> {
    if full_scale == 0 || full_scale > i16::MAX as u16 {
        return Err(Error::invalid(
            "full scale",
            format!("must be in 1..=32767, got {full_scale}"),
        ));
    }
    samples
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if x.is_finite() {
                Ok(saturate_f64(x * full_scale as f64))
            } else {
                Err(Error::invalid(
                    "sample",
                    format!("index {i} is not finite ({x})"),
                ))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sine_table_examples() {
        let y = gen_sine(&SineSpec::sine_table_program());
        assert_eq!(y.len(), 100);
        assert_eq!(y[0], 0.0);
        // sin(1.57) = 0.99999968293183462021... (40-digit evaluation)
        assert!((y[25] - 0.999_999_682_931_834_6).abs() < 1e-15);

        let exact = gen_sine(&SineSpec::new(100, 1.0, 1.0, PiMode::Exact).unwrap());
        assert!(exact[50].abs() < 1e-12);
    }

    #[test]
    fn approx_pi_close_to_exact() {
        let a = gen_sine(&SineSpec::sine_table_program());
        let b = gen_sine(&SineSpec::new(100, 1.0, 1.0, PiMode::Exact).unwrap());
        let worst = a
            .iter()
            .zip(&b)
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max);
        assert!(worst < 0.004, "{worst}");
        assert!(worst > 0.0);
    }

    #[test]
    fn spec_validation() {
        assert!(SineSpec::new(0, 1.0, 1.0, PiMode::Exact).is_err());
        assert!(SineSpec::new(10, 0.0, 1.0, PiMode::Exact).is_err());
        assert!(SineSpec::new(10, 1.0, -1.0, PiMode::Exact).is_err());
        assert!(SineSpec::new(10, f64::INFINITY, 1.0, PiMode::Exact).is_err());
    }

    #[test]
    fn pcm_examples() {
        assert_eq!(to_pcm(&[0.0], 32_767).unwrap(), vec![0]);
        assert_eq!(to_pcm(&[1.0], 32_767).unwrap(), vec![32_767]);
        assert_eq!(to_pcm(&[-0.5], 10_000).unwrap(), vec![-5000]);
        assert_eq!(to_pcm(&[2.0, -2.0], 32_767).unwrap(), vec![32_767, -32_768]);
    }

    #[test]
    fn pcm_rejects_non_finite_and_bad_scale() {
        assert!(to_pcm(&[0.0, f64::NAN], 100).is_err());
        assert!(to_pcm(&[f64::INFINITY], 100).is_err());
        assert!(to_pcm(&[0.0], 0).is_err());
        assert!(to_pcm(&[0.0], 32_768).is_err());
    }

    proptest! {
        #[test]
        fn integer_cycles_have_zero_mean(n in 2usize..2000, cycles in 1u32..20) {
            prop_assume!((cycles as usize) * 2 < n);
            let spec = SineSpec::new(n, cycles as f64, 1.0, PiMode::Exact).unwrap();
            let y = gen_sine(&spec);
            prop_assert_eq!(y.len(), n);
            prop_assert_eq!(y[0], 0.0);
            let mean = y.iter().sum::<f64>() / n as f64;
            prop_assert!(mean.abs() < 1e-9 * n as f64);
        }
    }
}
