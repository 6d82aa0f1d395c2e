//! Real-time factor of each kernel at both supported board rates.
//!
//! cargo run --release -p lcdk-dsp --example throughput

use lcdk_dsp::codec::CodecConfig;
use lcdk_dsp::effects::{Delay, Echo, EchoParams, Effect, Passthrough};
use lcdk_dsp::engine::measure_rtf;

fn main() -> lcdk_dsp::Result<()> {
    println!(
        "{:<12} {:>6} {:>10} {:>10} {:>12}",
        "effect", "fs", "samples", "wall s", "rtf"
    );
    for fs in [8000, 48_000] {
        let cfg = CodecConfig::unity(fs)?;
        let effects = [
            Effect::Passthrough(Passthrough),
            Effect::Delay(Delay::new(400)?),
            Effect::Echo(Echo::new(EchoParams::new(0.6, 4000)?)),
        ];
        for mut fx in effects {
            let r = measure_rtf(&cfg, &mut fx, 60.0)?;
            println!(
                "{:<12} {:>6} {:>10} {:>10.4} {:>12.3e}",
                fx.name(),
                fs,
                r.samples_processed,
                r.wall_seconds,
                r.real_time_factor
            );
        }
    }
    Ok(())
}
