//! `lcdk-dsp` command line front end.
//!
//! Every subcommand writes data to a file or standard output and diagnostics
//! to standard error. Exit status is 0 on success, 2 for usage errors and 1
//! for failures while running.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::alarm_clock::{
    run_clock_with, Alarm, ClockState, DriftModel, TimeOfDay, Weekday,
    DEFAULT_DRIFT_SECONDS_PER_DAY,
};
use crate::codec::{CodecConfig, InputSource};
use crate::effects::{
    Delay, Echo, EchoParams, Effect, Passthrough, DEFAULT_ECHO_GAIN, DEFAULT_ECHO_LEN,
};
use crate::engine::{self, EngineReport};
use crate::filter_response::{integer_grid, response_curve, FilterKind, FilterSpec};
use crate::generators::{gen_sine, PiMode, SineSpec};
use crate::wav::{read_wav_file, select_channel, write_wav_file, AudioClip, ChannelSelect};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "lcdk-dsp", version, about = "Software LCDK audio DSP lab")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a sine table as `index,value` CSV.
    GenSine(GenSineArgs),
    /// Write an LPF/HPF magnitude curve as `w,H` CSV.
    FilterResponse(FilterResponseArgs),
    /// Run a real-time kernel over a WAV file.
    Fx(FxArgs),
    /// Run the alarm clock, in real time or as a fast simulation.
    Clock(ClockArgs),
    /// Measure throughput of a kernel as a real-time factor.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct GenSineArgs {
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 1.0)]
    pub cycles: f64,
    #[arg(long, default_value_t = 1.0)]
    pub amplitude: f64,
    /// Use pi = 3.14 instead of the exact value.
    #[arg(long)]
    pub paper_pi: bool,
    /// Output CSV path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Lpf,
    Hpf,
}

impl From<KindArg> for FilterKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Lpf => FilterKind::LowPass,
            KindArg::Hpf => FilterKind::HighPass,
        }
    }
}

#[derive(Debug, Args)]
pub struct FilterResponseArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub order: u32,
    #[arg(long)]
    pub cutoff: f64,
    /// Evaluate at integer frequencies 0..wmax-1.
    #[arg(long, default_value_t = 100)]
    pub wmax: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EffectArg {
    Passthrough,
    Delay,
    Echo,
}

impl EffectArg {
    fn input_source(self) -> InputSource {
        match self {
            EffectArg::Passthrough => InputSource::LineIn,
            EffectArg::Delay | EffectArg::Echo => InputSource::MicIn,
        }
    }

    fn build(self, buf_size: usize, gain: f64) -> Result<Effect, Error> {
        Ok(match self {
            EffectArg::Passthrough => Effect::Passthrough(Passthrough),
            EffectArg::Delay => Effect::Delay(Delay::new(buf_size)?),
            EffectArg::Echo => Effect::Echo(Echo::new(EchoParams::new(gain, buf_size)?)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChannelArg {
    Left,
    Right,
    Downmix,
}

impl From<ChannelArg> for ChannelSelect {
    fn from(c: ChannelArg) -> Self {
        match c {
            ChannelArg::Left => ChannelSelect::Left,
            ChannelArg::Right => ChannelSelect::Right,
            ChannelArg::Downmix => ChannelSelect::Downmix,
        }
    }
}

#[derive(Debug, Args)]
pub struct FxArgs {
    #[arg(long, value_enum)]
    pub effect: EffectArg,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
    /// Delay line length in samples; required for delay and echo.
    #[arg(long)]
    pub buf_size: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_ECHO_GAIN)]
    pub gain: f64,
    /// Codec sample rate; defaults to the input file's rate.
    #[arg(long)]
    pub fs: Option<u32>,
    #[arg(long, value_enum, default_value_t = ChannelArg::Left)]
    pub channel: ChannelArg,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub adc_gain_db: f64,
    #[arg(long, default_value_t = 0.0)]
    pub dac_atten_db: f64,
}

#[derive(Debug, Args)]
pub struct ClockArgs {
    #[arg(long, default_value = "00:00:00")]
    pub time: String,
    /// Day of the week, Sunday = 1 ... Saturday = 7.
    #[arg(long, default_value_t = 1)]
    pub day: u8,
    #[arg(long)]
    pub alarm: Option<String>,
    #[arg(long)]
    pub message: Option<String>,
    /// Processor clock gain in seconds per day.
    #[arg(long, default_value_t = DEFAULT_DRIFT_SECONDS_PER_DAY)]
    pub drift: f64,
    /// Apply this many ticks instantly and print the trace.
    #[arg(long)]
    pub simulate_ticks: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub effect: EffectArg,
    #[arg(long, default_value_t = 48_000)]
    pub fs: u32,
    #[arg(long, default_value_t = 60.0)]
    pub seconds: f64,
    #[arg(long, default_value_t = DEFAULT_ECHO_LEN)]
    pub buf_size: usize,
    #[arg(long, default_value_t = DEFAULT_ECHO_GAIN)]
    pub gain: f64,
    /// Also write the report as a CSV file.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Run(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Run(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Parse `args` (including the program name) and run, returning the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    match execute(&cli.command, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let prefix = match e {
                CliError::Usage(_) => "usage error",
                CliError::Run(_) => "error",
            };
            let _ = writeln!(stderr, "{prefix}: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(
    cmd: &Command,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), CliError> {
    match cmd {
        Command::GenSine(a) => gen_sine_cmd(a, stdout),
        Command::FilterResponse(a) => filter_response_cmd(a, stdout),
        Command::Fx(a) => fx_cmd(a, stderr),
        Command::Clock(a) => clock_cmd(a, stdout),
        Command::Bench(a) => bench_cmd(a, stdout),
    }
}

fn with_output(
    path: Option<&Path>,
    stdout: &mut dyn Write,
    body: impl FnOnce(&mut dyn Write) -> io::Result<()>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p).map_err(Error::from)?);
            body(&mut w).and_then(|_| w.flush()).map_err(Error::from)?;
        }
        None => body(stdout).map_err(Error::from)?,
    }
    Ok(())
}

fn gen_sine_cmd(a: &GenSineArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mode = if a.paper_pi {
        PiMode::Approx314
    } else {
        PiMode::Exact
    };
    let spec =
        SineSpec::new(a.samples, a.cycles, a.amplitude, mode).map_err(|e| usage(e.to_string()))?;
    let y = gen_sine(&spec);
    with_output(a.out.as_deref(), stdout, |w| {
        writeln!(w, "index,value")?;
        for (i, v) in y.iter().enumerate() {
            writeln!(w, "{i},{v}")?;
        }
        Ok(())
    })
}

fn filter_response_cmd(a: &FilterResponseArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec =
        FilterSpec::new(a.kind.into(), a.order, a.cutoff).map_err(|e| usage(e.to_string()))?;
    let curve = response_curve(&spec, &integer_grid(a.wmax));
    with_output(a.out.as_deref(), stdout, |w| {
        writeln!(w, "w,H")?;
        for (f, h) in &curve {
            writeln!(w, "{f},{h}")?;
        }
        Ok(())
    })
}

fn fx_cmd(a: &FxArgs, stderr: &mut dyn Write) -> Result<(), CliError> {
    let buf_size = match (a.effect, a.buf_size) {
        (EffectArg::Passthrough, b) => b.unwrap_or(1),
        (_, Some(b)) => b,
        (e, None) => {
            return Err(usage(format!(
                "--buf-size is required for --effect {}",
                e.to_possible_value()
                    .expect("no skipped variants")
                    .get_name()
            )))
        }
    };
    let mut effect = a
        .effect
        .build(buf_size, a.gain)
        .map_err(|e| usage(e.to_string()))?;

    let clip = read_wav_file(&a.input)?;
    let fs = a.fs.unwrap_or(clip.sample_rate_hz());
    let config = CodecConfig::new(fs, a.adc_gain_db, a.dac_atten_db, a.effect.input_source())
        .map_err(|e| match e {
            Error::UnsupportedSampleRate(r) if a.fs.is_none() => usage(format!(
                "input is {r} Hz, which the codec does not support; pass --fs to override"
            )),
            other => usage(other.to_string()),
        })?;
    let input = select_channel(&clip, a.channel.into()).map_err(|e| usage(e.to_string()))?;

    let (output, report) = engine::run(&config, &mut effect, &input);
    write_wav_file(&a.out, &AudioClip::mono(fs, output)?)?;

    writeln!(stderr, "effect:            {}", effect.name()).map_err(Error::from)?;
    writeln!(stderr, "{report}").map_err(Error::from)?;
    Ok(())
}

fn clock_cmd(a: &ClockArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let time: TimeOfDay = a.time.parse().map_err(|e: Error| usage(e.to_string()))?;
    let day = Weekday::new(a.day).map_err(|e| usage(e.to_string()))?;
    let drift = DriftModel::new(a.drift).map_err(|e| usage(e.to_string()))?;
    let mut state = ClockState::new(time, day);
    match (&a.alarm, &a.message) {
        (Some(t), msg) => {
            let at: TimeOfDay = t.parse().map_err(|e: Error| usage(e.to_string()))?;
            state = state.with_alarm(Alarm::new(
                at,
                msg.clone().unwrap_or_else(|| "ALARM".into()),
            ));
        }
        (None, Some(_)) => return Err(usage("--message requires --alarm")),
        (None, None) => {}
    }

    writeln!(stdout, "start {state}").map_err(Error::from)?;
    match a.simulate_ticks {
        Some(n) => {
            let mut io_result: io::Result<()> = Ok(());
            let run = run_clock_with(&state, &drift, n, |tick, s| {
                if io_result.is_ok() {
                    io_result = trace_tick(stdout, tick, s);
                }
            });
            io_result.map_err(Error::from)?;
            writeln!(
                stdout,
                "end {} alarms={} processor_seconds={}",
                run.state,
                run.events.len(),
                run.processor_seconds
            )
            .map_err(Error::from)?;
        }
        None => {
            run_realtime(state, &drift, None, stdout).map_err(Error::from)?;
        }
    }
    Ok(())
}

/// Tick against the wall clock, one displayed second per compensated
/// interval. Deadlines are absolute so sleep overshoot does not accumulate.
pub fn run_realtime(
    mut state: ClockState,
    drift: &DriftModel,
    max_ticks: Option<u64>,
    out: &mut dyn Write,
) -> io::Result<ClockState> {
    let interval = drift.compensated_tick_duration();
    let start = Instant::now();
    let mut tick: u64 = 0;
    while max_ticks.is_none_or(|m| tick < m) {
        tick += 1;
        let deadline = start + interval.mul_f64(tick as f64);
        let now = Instant::now();
        if deadline > now {
            std::thread::sleep(deadline - now);
        }
        state.tick();
        trace_tick(out, tick, &state)?;
        out.flush()?;
    }
    Ok(state)
}

fn trace_tick(out: &mut dyn Write, tick: u64, state: &ClockState) -> io::Result<()> {
    writeln!(out, "tick {tick} {state}")?;
    if let Some(msg) = state.check_alarm() {
        writeln!(
            out,
            "alarm tick={tick} {} day {} {msg}",
            state.time, state.day
        )?;
    }
    Ok(())
}

fn bench_cmd(a: &BenchArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    if !(a.seconds.is_finite() && a.seconds > 0.0) {
        return Err(usage(format!(
            "--seconds must be positive, got {}",
            a.seconds
        )));
    }
    let config = CodecConfig::new(a.fs, 0.0, 0.0, a.effect.input_source())
        .map_err(|e| usage(e.to_string()))?;
    let mut effect = a
        .effect
        .build(a.buf_size, a.gain)
        .map_err(|e| usage(e.to_string()))?;
    let report = engine::measure_rtf(&config, &mut effect, a.seconds)?;
    let name = effect.name();

    let csv_header = format!("effect,{}", EngineReport::CSV_HEADER);
    let csv_row = format!("{name},{}", report.csv_row());
    (|| -> io::Result<()> {
        writeln!(stdout, "effect:            {name}")?;
        writeln!(stdout, "{report}")?;
        writeln!(stdout, "{csv_header}")?;
        writeln!(stdout, "{csv_row}")
    })()
    .map_err(Error::from)?;
    if let Some(path) = &a.csv {
        std::fs::write(path, format!("{csv_header}\n{csv_row}\n")).map_err(Error::from)?;
    }
    Ok(())
}
