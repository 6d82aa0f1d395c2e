//! Run a kernel over a WAV file, the way audio would pass through the board
//! between its line input and output.
//!
//! cargo run -p lcdk-dsp --example wav_effects -- [input.wav] [output.wav]
//!
//! Without arguments a two-second stereo test tone (8 kHz, a click every
//! half second) is written to the temp directory and processed.

use std::path::PathBuf;

use lcdk_dsp::codec::CodecConfig;
use lcdk_dsp::effects::{Echo, EchoParams};
use lcdk_dsp::engine;
use lcdk_dsp::generators::{gen_sine, to_pcm, PiMode, SineSpec};
use lcdk_dsp::wav::{read_wav_file, select_channel, write_wav_file, AudioClip, ChannelSelect};

fn test_clip() -> lcdk_dsp::Result<AudioClip> {
    let tone = to_pcm(
        &gen_sine(&SineSpec::new(16_000, 880.0, 0.25, PiMode::Exact)?),
        32_767,
    )?;
    let mut clicks = vec![0i16; 16_000];
    for n in (0..clicks.len()).step_by(4000) {
        clicks[n] = 12_000;
    }
    AudioClip::stereo(8000, clicks, tone)
}

fn main() -> lcdk_dsp::Result<()> {
    let mut args = std::env::args_os().skip(1).map(PathBuf::from);
    let input = match args.next() {
        Some(p) => p,
        None => {
            let p = std::env::temp_dir().join("lcdk-dsp-test-tone.wav");
            write_wav_file(&p, &test_clip()?)?;
            p
        }
    };
    let output = args
        .next()
        .unwrap_or_else(|| std::env::temp_dir().join("lcdk-dsp-echo.wav"));

    let clip = read_wav_file(&input)?;
    let left = select_channel(&clip, ChannelSelect::Left)?;
    let cfg = CodecConfig::unity(clip.sample_rate_hz())?;
    let mut echo = Echo::new(EchoParams::new(0.6, 4000)?);
    let (processed, report) = engine::run(&cfg, &mut echo, &left);
    write_wav_file(&output, &AudioClip::mono(clip.sample_rate_hz(), processed)?)?;

    println!("{} -> {}", input.display(), output.display());
    println!("{report}");
    Ok(())
}
