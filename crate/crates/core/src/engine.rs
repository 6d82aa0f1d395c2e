//! Interrupt-driven I/O, serialised.
//!
//! On the board the codec raises an interrupt per sample and the ISR reads one
//! input and writes one output. Here the ISR is a [`SampleProcessor`] called
//! once per element of a finite input stream, in order. ADC gain is applied
//! before the processor and DAC attenuation after it.

use std::f64::consts::PI;
use std::fmt;
use std::time::Instant;

use crate::codec::{saturate_f64, CodecConfig};
use crate::{Error, Result, Sample16};

/// Per-sample transform with private state; the body of the ISR.
pub trait SampleProcessor {
    fn process(&mut self, input: Sample16) -> Sample16;
}

impl<F> SampleProcessor for F
where
    F: FnMut(Sample16) -> Sample16,
{
    #[inline]
    fn process(&mut self, input: Sample16) -> Sample16 {
        self(input)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineReport {
    pub sample_rate_hz: u32,
    pub samples_processed: u64,
    pub wall_seconds: f64,
    /// `wall_seconds / audio_seconds`; below 1.0 means faster than real time.
    pub real_time_factor: f64,
}

impl EngineReport {
    pub fn new(sample_rate_hz: u32, samples_processed: u64, wall_seconds: f64) -> Self {
        let real_time_factor = if samples_processed == 0 {
            0.0
        } else {
            wall_seconds * sample_rate_hz as f64 / samples_processed as f64
        };
        Self {
            sample_rate_hz,
            samples_processed,
            wall_seconds,
            real_time_factor,
        }
    }

    pub fn audio_seconds(&self) -> f64 {
        self.samples_processed as f64 / self.sample_rate_hz as f64
    }

    pub const CSV_HEADER: &'static str =
        "sample_rate_hz,samples_processed,wall_seconds,real_time_factor";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.sample_rate_hz, self.samples_processed, self.wall_seconds, self.real_time_factor
        )
    }
}

impl fmt::Display for EngineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "sample_rate_hz:    {}", self.sample_rate_hz)?;
        writeln!(f, "samples_processed: {}", self.samples_processed)?;
        writeln!(f, "audio_seconds:     {:.6}", self.audio_seconds())?;
        writeln!(f, "wall_seconds:      {:.6}", self.wall_seconds)?;
        write!(f, "real_time_factor:  {:.6}", self.real_time_factor)
    }
}

/// Feed `input` through the codec and `proc`, one call per sample.
pub fn run<P: SampleProcessor + ?Sized>(
    config: &CodecConfig,
    proc: &mut P,
    input: &[Sample16],
) -> (Vec<Sample16>, EngineReport) {
    let mut output = Vec::with_capacity(input.len());
    let start = Instant::now();
    output.extend(
        input
            .iter()
            .map(|&s| config.dac(proc.process(config.adc(s)))),
    );
    let wall = start.elapsed().as_secs_f64();
    let report = EngineReport::new(config.sample_rate_hz(), input.len() as u64, wall);
    (output, report)
}

/// Time `proc` over `duration_seconds` of synthetic input.
///
/// The stimulus is a half-scale 440 Hz tone; it is generated before the
/// clock starts so only the engine loop is measured.
pub fn measure_rtf<P: SampleProcessor + ?Sized>(
    config: &CodecConfig,
    proc: &mut P,
    duration_seconds: f64,
) -> Result<EngineReport> {
    if !(duration_seconds.is_finite() && duration_seconds > 0.0) {
        return Err(Error::invalid(
            "duration",
            format!("must be a positive number of seconds, got {duration_seconds}"),
        ));
    }
    let fs = config.sample_rate_hz() as f64;
    let n = (duration_seconds * fs).round() as usize;
    let step = 2.0 * PI * 440.0 / fs;
    let input: Vec<Sample16> = (0..n)
        .map(|i| saturate_f64(16_384.0 * (step * i as f64).sin()))
        .collect();
    let (output, report) = run(config, proc, &input);
    std::hint::black_box(output);
    Ok(report)
}
