//! Virtual AIC3106 codec: configuration plus the arithmetic that happens at
//! the ADC/DAC boundary.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, Sample16};

/// Sample rates the board support library exposes (`FS_8000_HZ` ... `FS_48000_HZ`).
pub const SUPPORTED_SAMPLE_RATES: [u32; 9] =
    [8000, 9600, 11025, 16000, 22050, 24000, 32000, 44100, 48000];

/// Clamp a wide intermediate to the signed 16-bit range.
#[inline]
pub fn saturate(wide: i64) -> Sample16 {
    wide.clamp(i16::MIN as i64, i16::MAX as i64) as Sample16
}

/// Round half away from zero, then clamp to 16 bits. NaN maps to 0.
#[inline]
pub fn saturate_f64(value: f64) -> Sample16 {
    // `as i64` already saturates at the i64 bounds and maps NaN to 0.
    saturate(value.round() as i64)
}

/// Scale `s` by `gain_db` decibels (negative values attenuate).
///
/// Zero gain is an exact identity.
pub fn apply_gain_db(s: Sample16, gain_db: f64) -> Sample16 {
    debug_assert!(gain_db.is_finite());
    if gain_db == 0.0 {
        return s;
    }
    saturate_f64(s as f64 * db_to_linear(gain_db))
}

#[inline]
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 20.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum InputSource {
    #[default]
    LineIn,
    MicIn,
}

impl fmt::Display for InputSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InputSource::LineIn => "line-in",
            InputSource::MicIn => "mic-in",
        })
    }
}

impl FromStr for InputSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "line" | "line-in" | "line_in" => Ok(InputSource::LineIn),
            "mic" | "mic-in" | "mic_in" => Ok(InputSource::MicIn),
            other => Err(Error::invalid(
                "input source",
                format!("unknown source {other:?}"),
            )),
        }
    }
}

/// Codec settings, the equivalent of the arguments to `L138_initialise_intr`.
///
/// `input_source` is recorded only; it has no effect on the sample values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CodecConfig {
    sample_rate_hz: u32,
    adc_gain_db: f64,
    dac_atten_db: f64,
    input_source: InputSource,
}

impl CodecConfig {
    pub fn new(
        sample_rate_hz: u32,
        adc_gain_db: f64,
        dac_atten_db: f64,
        input_source: InputSource,
    ) -> Result<Self> {
        if !SUPPORTED_SAMPLE_RATES.contains(&sample_rate_hz) {
            return Err(Error::UnsupportedSampleRate(sample_rate_hz));
        }
        if !adc_gain_db.is_finite() {
            return Err(Error::invalid("ADC gain", "must be finite"));
        }
        if !dac_atten_db.is_finite() || dac_atten_db < 0.0 {
            return Err(Error::invalid(
                "DAC attenuation",
                format!("must be a finite value >= 0 dB, got {dac_atten_db}"),
            ));
        }
        Ok(Self {
            sample_rate_hz,
            adc_gain_db,
            dac_atten_db,
            input_source,
        })
    }

    /// 0 dB in and out, line input, at the given rate.
    pub fn unity(sample_rate_hz: u32) -> Result<Self> {
        Self::new(sample_rate_hz, 0.0, 0.0, InputSource::LineIn)
    }

    /// Loopback setup: 48 kHz, 0 dB, line input.
    pub fn loopback() -> Self {
        Self::new(48_000, 0.0, 0.0, InputSource::LineIn).expect("valid preset")
    }

    /// Delay/echo setup: 8 kHz, 0 dB, microphone input.
    pub fn delay_echo() -> Self {
        Self::new(8_000, 0.0, 0.0, InputSource::MicIn).expect("valid preset")
    }

    pub fn sample_rate_hz(&self) -> u32 {
        self.sample_rate_hz
    }

    pub fn adc_gain_db(&self) -> f64 {
        self.adc_gain_db
    }

    pub fn dac_atten_db(&self) -> f64 {
        self.dac_atten_db
    }

    pub fn input_source(&self) -> InputSource {
        self.input_source
    }

    /// ADC side: input sample as seen by the ISR.
    #[inline]
    pub fn adc(&self, s: Sample16) -> Sample16 {
        apply_gain_db(s, self.adc_gain_db)
    }

    /// DAC side: ISR output as it leaves the board.
    #[inline]
    pub fn dac(&self, s: Sample16) -> Sample16 {
        apply_gain_db(s, -self.dac_atten_db)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn saturate_examples() {
        assert_eq!(saturate(0), 0);
        assert_eq!(saturate(40_000), 32_767);
        assert_eq!(saturate(-40_000), -32_768);
    }

    #[test]
    fn overflow_saturates_rather_than_wraps() {
        let wrapped = 30_000i16.wrapping_add(30_000);
        assert!(wrapped < 0);
        assert_eq!(saturate(30_000 + 30_000), i16::MAX);
    }

    #[test]
    fn gain_examples() {
        assert_eq!(apply_gain_db(1000, 0.0), 1000);
        // 1000 * 10^(-6.0205999/20) = 500.00000076... (40-digit evaluation)
        assert_eq!(apply_gain_db(1000, -6.020_599_9), 500);
        assert_eq!(apply_gain_db(32_767, 6.0), 32_767);
        assert_eq!(apply_gain_db(-32_768, 6.0), -32_768);
    }

    #[test]
    fn rejects_unsupported_rate_and_negative_attenuation() {
        assert!(matches!(
            CodecConfig::unity(12_345),
            Err(Error::UnsupportedSampleRate(12_345))
        ));
        assert!(CodecConfig::new(8000, 0.0, -1.0, InputSource::LineIn).is_err());
        assert!(CodecConfig::new(8000, f64::NAN, 0.0, InputSource::LineIn).is_err());
        assert!(CodecConfig::unity(8000).is_ok());
        assert!(CodecConfig::unity(48_000).is_ok());
    }

    #[test]
    fn presets() {
        assert_eq!(CodecConfig::loopback().sample_rate_hz(), 48_000);
        assert_eq!(CodecConfig::delay_echo().sample_rate_hz(), 8_000);
        assert_eq!(CodecConfig::delay_echo().input_source(), InputSource::MicIn);
    }

    proptest! {
        #[test]
        fn zero_db_is_identity(s in any::<i16>()) {
            prop_assert_eq!(apply_gain_db(s, 0.0), s);
        }

        #[test]
        fn saturate_is_idempotent(x in any::<i64>()) {
            let once = saturate(x);
            prop_assert_eq!(saturate(once as i64), once);
        }

        #[test]
        fn gain_is_monotone_in_db(s in 0i16..=i16::MAX, g in -40.0f64..40.0, dg in 0.0f64..10.0) {
            prop_assert!(apply_gain_db(s, g) <= apply_gain_db(s, g + dg));
        }
    }
}
