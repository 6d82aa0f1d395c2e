//! Magnitude response of 20th-order LPF and HPF with a cutoff of 50, on the
//! integer grid 0..99, plus the repeated-squaring power helper.
//!
//! cargo run -p lcdk-dsp --example filter_curves

use lcdk_dsp::filter_response::{
    integer_grid, paper_pow_as_printed, response_curve, FilterKind, FilterSpec,
};

fn main() -> lcdk_dsp::Result<()> {
    let grid = integer_grid(100);
    let lpf = response_curve(&FilterSpec::new(FilterKind::LowPass, 20, 50.0)?, &grid);
    let hpf = response_curve(&FilterSpec::new(FilterKind::HighPass, 20, 50.0)?, &grid);

    println!("{:>4} {:>10} {:>10}", "w", "|H| lpf", "|H| hpf");
    for ((w, l), (_, h)) in lpf.iter().zip(&hpf).step_by(5) {
        let bar = "#".repeat((l * 30.0).round() as usize);
        println!("{w:>4} {l:>10.6} {h:>10.6}  {bar}");
    }

    println!();
    println!("repeated squaring vs. a true power, base 2:");
    for x in 1..=5 {
        println!(
            "  x = {x}: squared {} times -> {:>6}, 2^x = {:>3}",
            x - 1,
            paper_pow_as_printed(2.0, x),
            2u32.pow(x)
        );
    }
    Ok(())
}
