//! The three real-time kernels: loopback, delay and echo.
//!
//! Delay and echo share a zero-initialised circular buffer of `D` samples.
//! Each ISR invocation reads the oldest sample at the write index, mixes it
//! with the new input, overwrites the slot and advances the index modulo `D`.

use crate::codec::{saturate, saturate_f64};
use crate::engine::SampleProcessor;
use crate::{Error, Result, Sample16};

/// Delay length used by the delay program.
pub const DEFAULT_DELAY_LEN: usize = 400;
/// Delay length used by the echo program.
pub const DEFAULT_ECHO_LEN: usize = 4000;
/// Feedback gain used by the echo program.
pub const DEFAULT_ECHO_GAIN: f64 = 0.6;

/// Loopback: the input sample goes straight back out.
#[inline]
pub fn passthrough(input: Sample16) -> Sample16 {
    input
}

/// Fixed-length circular sample buffer with a write index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelayLine {
    buffer: Box<[Sample16]>,
    write_index: usize,
}

impl DelayLine {
    /// A zeroed line of `len` samples.
    pub fn new(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::invalid("delay length", "must be at least 1 sample"));
        }
        Ok(Self {
            buffer: vec![0; len].into_boxed_slice(),
            write_index: 0,
        })
    }

    pub fn len(&self) -> usize {
        self.buffer.len()
    }

    /// Always false; a line holds at least one sample.
    pub fn is_empty(&self) -> bool {
        self.buffer.is_empty()
    }

    pub fn write_index(&self) -> usize {
        self.write_index
    }

    pub fn buffer(&self) -> &[Sample16] {
        &self.buffer
    }

    /// `output = delayed + input`, then store `input`.
    #[inline]
    pub fn delay_step(&mut self, input: Sample16) -> Sample16 {
        let slot = &mut self.buffer[self.write_index];
        let delayed = *slot;
        *slot = input;
        self.advance();
        saturate(delayed as i64 + input as i64)
    }

    /// `output = delayed + input`, then store `input + delayed * gain`.
    ///
    /// `params.delay_len()` must equal the line length.
    #[inline]
    pub fn echo_step(&mut self, params: &EchoParams, input: Sample16) -> Sample16 {
        debug_assert_eq!(params.delay_len(), self.len());
        let slot = &mut self.buffer[self.write_index];
        let delayed = *slot;
        *slot = saturate_f64(input as f64 + delayed as f64 * params.gain());
        self.advance();
        saturate(delayed as i64 + input as i64)
    }

    #[inline]
    fn advance(&mut self) {
        self.write_index += 1;
        if self.write_index == self.buffer.len() {
            self.write_index = 0;
        }
    }
}

/// Echo feedback gain and delay length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EchoParams {
    gain: f64,
    delay_len: usize,
}

impl EchoParams {
    /// `gain` must lie in `[0, 1)` so the feedback loop decays.
    pub fn new(gain: f64, delay_len: usize) -> Result<Self> {
        if !(0.0..1.0).contains(&gain) {
            return Err(Error::invalid(
                "echo gain",
                format!("must be in [0, 1), got {gain}"),
            ));
        }
        if delay_len == 0 {
            return Err(Error::invalid("delay length", "must be at least 1 sample"));
        }
        Ok(Self { gain, delay_len })
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }

    pub fn delay_len(&self) -> usize {
        self.delay_len
    }
}

impl Default for EchoParams {
    fn default() -> Self {
        Self {
            gain: DEFAULT_ECHO_GAIN,
            delay_len: DEFAULT_ECHO_LEN,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Passthrough;

impl SampleProcessor for Passthrough {
    #[inline]
    fn process(&mut self, input: Sample16) -> Sample16 {
        passthrough(input)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delay {
    line: DelayLine,
}

impl Delay {
    pub fn new(len: usize) -> Result<Self> {
        Ok(Self {
            line: DelayLine::new(len)?,
        })
    }

    pub fn line(&self) -> &DelayLine {
        &self.line
    }
}

impl SampleProcessor for Delay {
    #[inline]
    fn process(&mut self, input: Sample16) -> Sample16 {
        self.line.delay_step(input)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Echo {
    line: DelayLine,
    params: EchoParams,
}

impl Echo {
    pub fn new(params: EchoParams) -> Self {
        Self {
            line: DelayLine::new(params.delay_len()).expect("EchoParams guarantees len >= 1"),
            params,
        }
    }

    pub fn params(&self) -> &EchoParams {
        &self.params
    }

    pub fn line(&self) -> &DelayLine {
        &self.line
    }
}

impl SampleProcessor for Echo {
    #[inline]
    fn process(&mut self, input: Sample16) -> Sample16 {
        self.line.echo_step(&self.params, input)
    }
}

/// Closed set of kernels, selectable at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Effect {
    Passthrough(Passthrough),
    Delay(Delay),
    Echo(Echo),
}

impl Effect {
    pub fn name(&self) -> &'static str {
        match self {
            Effect::Passthrough(_) => "passthrough",
            Effect::Delay(_) => "delay",
            Effect::Echo(_) => "echo",
        }
    }
}

impl SampleProcessor for Effect {
    #[inline]
    fn process(&mut self, input: Sample16) -> Sample16 {
        match self {
            Effect::Passthrough(p) => p.process(input),
            Effect::Delay(d) => d.process(input),
            Effect::Echo(e) => e.process(input),
        }
    }
}
