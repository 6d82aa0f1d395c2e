//! Fast simulation of the alarm clock across a weekday rollover, with drift
//! compensation reported for the simulated span.
//!
//! cargo run -p lcdk-dsp --example alarm_clock

use lcdk_dsp::alarm_clock::{
    run_clock, Alarm, ClockState, DriftModel, TimeOfDay, Weekday, SECONDS_PER_DAY,
};

fn main() -> lcdk_dsp::Result<()> {
    let start = ClockState::new("23:59:55".parse()?, Weekday::new(7)?)
        .with_alarm(Alarm::new(TimeOfDay::new(0, 0, 3)?, "time to get up"));
    let drift = DriftModel::default();

    println!("start: {start} ({})", start.day.name());
    let run = run_clock(&start, &drift, 10);
    for e in &run.events {
        println!(
            "  tick {:>2}: {} on {} -> {:?}",
            e.tick,
            e.time,
            e.day.name(),
            e.message
        );
    }
    println!("after 10 ticks: {} ({})", run.state, run.state.day.name());

    let day = run_clock(&start, &drift, SECONDS_PER_DAY as u64);
    println!();
    println!(
        "one simulated day: {} alarm(s), ends at {}",
        day.events.len(),
        day.state
    );
    println!(
        "tick interval {:.9} s; a day of ticks takes {:.1} processor seconds",
        drift.compensated_tick_interval(),
        day.processor_seconds
    );
    Ok(())
}
