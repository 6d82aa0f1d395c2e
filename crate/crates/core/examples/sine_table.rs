//! Build the 100-point sine table with pi = 3.14 and compare it with the
//! exact-pi table, then quantise it to PCM.
//!
//! cargo run -p lcdk-dsp --example sine_table

use lcdk_dsp::generators::{gen_sine, to_pcm, PiMode, SineSpec};

fn main() -> lcdk_dsp::Result<()> {
    let approx = gen_sine(&SineSpec::sine_table_program());
    let exact = gen_sine(&SineSpec::new(100, 1.0, 1.0, PiMode::Exact)?);
    let pcm = to_pcm(&approx, 32_767)?;

    println!("{:>5} {:>12} {:>12} {:>8}", "i", "pi=3.14", "exact", "pcm");
    for i in (0..100).step_by(5) {
        println!(
            "{i:>5} {:>12.8} {:>12.8} {:>8}",
            approx[i], exact[i], pcm[i]
        );
    }
    let worst = approx
        .iter()
        .zip(&exact)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("max |approx - exact| = {worst:.6}");
    Ok(())
}
