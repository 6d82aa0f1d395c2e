//! Software model of the audio path of an OMAP-L138 LCDK style DSP board.
//!
//! The crate replaces the board with deterministic, testable pieces:
//!
//! - [`codec`]: sample rate / gain configuration and the 16-bit saturation
//!   rules at the analog boundary.
//! - [`engine`]: the interrupt-per-sample execution model, replayed over a
//!   finite stream, with real-time-factor measurement.
//! - [`effects`]: loopback, delay and echo kernels over a circular buffer.
//! - [`generators`]: sine tables and float to PCM conversion.
//! - [`filter_response`]: Butterworth style LPF/HPF magnitude curves.
//! - [`alarm_clock`]: a one-second tick clock with weekday rollover, an alarm
//!   and drift compensation.
//! - [`wav`]: PCM-16 WAV encode/decode standing in for the line jacks.
//! - [`cli`]: the `lcdk-dsp` command line front end.
//!
//! Runnable walkthroughs for each of these live in the crate's `examples/`
//! directory.

pub mod alarm_clock;
pub mod cli;
pub mod codec;
pub mod effects;
pub mod engine;
mod error;
pub mod filter_response;
pub mod generators;
pub mod wav;

pub use error::{Error, Result};

/// Signed 16-bit PCM sample, the unit of all real-time processing.
pub type Sample16 = i16;
