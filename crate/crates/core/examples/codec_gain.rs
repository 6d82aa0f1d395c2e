//! Codec presets, dB gain staging and 16-bit saturation at the converter
//! boundary.
//!
//! cargo run -p lcdk-dsp --example codec_gain

use lcdk_dsp::codec::{apply_gain_db, saturate, CodecConfig, InputSource};
use lcdk_dsp::effects::Passthrough;
use lcdk_dsp::engine;

fn main() -> lcdk_dsp::Result<()> {
    for cfg in [CodecConfig::loopback(), CodecConfig::delay_echo()] {
        println!(
            "{} Hz, ADC gain {} dB, DAC attenuation {} dB, {}",
            cfg.sample_rate_hz(),
            cfg.adc_gain_db(),
            cfg.dac_atten_db(),
            cfg.input_source()
        );
    }

    println!();
    for db in [-12.0, -6.0, 0.0, 6.0, 12.0] {
        println!("{db:>6} dB: 12000 -> {:>6}", apply_gain_db(12_000, db));
    }
    println!("saturate(30000 + 30000) = {}", saturate(60_000));
    println!(
        "wrapping 30000 + 30000 would give {}",
        30_000i16.wrapping_add(30_000)
    );

    // +12 dB in, 12 dB out: in-range samples survive, loud ones clip at the ADC.
    let cfg = CodecConfig::new(48_000, 12.0, 12.0, InputSource::LineIn)?;
    let input = [100, 1000, 8000, 16_000, -16_000];
    let (output, _) = engine::run(&cfg, &mut Passthrough, &input);
    println!();
    println!("through +12 dB / -12 dB: {input:?} -> {output:?}");
    Ok(())
}
