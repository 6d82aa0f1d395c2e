//! Impulse responses of the delay (400 samples) and echo (4000 samples,
//! feedback 0.6) kernels at 8 kHz.
//!
//! cargo run -p lcdk-dsp --example delay_echo

use lcdk_dsp::codec::CodecConfig;
use lcdk_dsp::effects::{Delay, Echo, EchoParams, DEFAULT_DELAY_LEN};
use lcdk_dsp::engine::{self, SampleProcessor};

fn taps(name: &str, cfg: &CodecConfig, fx: &mut impl SampleProcessor, len: usize) {
    let mut input = vec![0i16; len];
    input[0] = 10_000;
    let (output, report) = engine::run(cfg, fx, &input);
    println!("{name}:");
    for (n, y) in output.iter().enumerate().filter(|(_, &y)| y != 0) {
        let ms = n as f64 * 1000.0 / cfg.sample_rate_hz() as f64;
        println!("  n = {n:>6} ({ms:>7.1} ms)  {y:>6}");
    }
    println!(
        "  {} samples, rtf {:.2e}",
        report.samples_processed, report.real_time_factor
    );
}

fn main() -> lcdk_dsp::Result<()> {
    let cfg = CodecConfig::delay_echo();
    taps("delay", &cfg, &mut Delay::new(DEFAULT_DELAY_LEN)?, 1000);
    taps("echo", &cfg, &mut Echo::new(EchoParams::default()), 40_000);
    Ok(())
}
