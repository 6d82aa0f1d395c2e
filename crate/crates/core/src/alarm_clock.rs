//! Digital alarm clock driven by a one-second tick.
//!
//! Time of day rolls over at midnight into the next day of the week
//! (Sunday = 1 ... Saturday = 7). A single alarm repeats daily. A processor
//! clock that runs fast is corrected by stretching the tick interval; that
//! correction is a pure computation so everything here runs without sleeping.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::{Error, Result};

pub const SECONDS_PER_DAY: u32 = 86_400;
/// Measured gain of the processor clock, in seconds per day.
pub const DEFAULT_DRIFT_SECONDS_PER_DAY: f64 = 19.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TimeOfDay {
    hour: u8,
    minute: u8,
    second: u8,
}

impl TimeOfDay {
    pub fn new(hour: u8, minute: u8, second: u8) -> Result<Self> {
        if hour > 23 || minute > 59 || second > 59 {
            return Err(Error::invalid(
                "time of day",
                format!("{hour:02}:{minute:02}:{second:02} is out of range"),
            ));
        }
        Ok(Self {
            hour,
            minute,
            second,
        })
    }

    pub const MIDNIGHT: TimeOfDay = TimeOfDay {
        hour: 0,
        minute: 0,
        second: 0,
    };

    pub fn hour(&self) -> u8 {
        self.hour
    }

    pub fn minute(&self) -> u8 {
        self.minute
    }

    pub fn second(&self) -> u8 {
        self.second
    }

    pub fn seconds_since_midnight(&self) -> u32 {
        self.hour as u32 * 3600 + self.minute as u32 * 60 + self.second as u32
    }

    /// Advance one second; returns true when the day rolled over.
    fn advance(&mut self) -> bool {
        self.second += 1;
        if self.second < 60 {
            return false;
        }
        self.second = 0;
        self.minute += 1;
        if self.minute < 60 {
            return false;
        }
        self.minute = 0;
        self.hour += 1;
        if self.hour < 24 {
            return false;
        }
        self.hour = 0;
        true
    }
}

impl fmt::Display for TimeOfDay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02}:{:02}:{:02}", self.hour, self.minute, self.second)
    }
}

impl FromStr for TimeOfDay {
    type Err = Error;

    /// Parses `HH:MM:SS`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid("time of day", format!("expected HH:MM:SS, got {s:?}"));
        let mut parts = s.split(':');
        let mut field = || -> Result<u8> {
            let p = parts.next().ok_or_else(bad)?;
            if p.is_empty() || p.len() > 2 || !p.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            p.parse().map_err(|_| bad())
        };
        let (h, m, sec) = (field()?, field()?, field()?);
        if parts.next().is_some() {
            return Err(bad());
        }
        TimeOfDay::new(h, m, sec)
    }
}

/// Day of the week, 1 (Sunday) through 7 (Saturday).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weekday(u8);

impl Weekday {
    pub const SUNDAY: Weekday = Weekday(1);

    pub fn new(day: u8) -> Result<Self> {
        if (1..=7).contains(&day) {
            Ok(Weekday(day))
        } else {
            Err(Error::invalid(
                "day of week",
                format!("must be 1..=7, got {day}"),
            ))
        }
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn next(self) -> Self {
        Weekday(self.0 % 7 + 1)
    }

    pub fn name(self) -> &'static str {
        [
            "Sunday",
            "Monday",
            "Tuesday",
            "Wednesday",
            "Thursday",
            "Friday",
            "Saturday",
        ][self.0 as usize - 1]
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alarm {
    pub time: TimeOfDay,
    pub message: String,
}

impl Alarm {
    pub fn new(time: TimeOfDay, message: impl Into<String>) -> Self {
        Self {
            time,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClockState {
    pub time: TimeOfDay,
    pub day: Weekday,
    pub alarm: Option<Alarm>,
}

impl ClockState {
    pub fn new(time: TimeOfDay, day: Weekday) -> Self {
        Self {
            time,
            day,
            alarm: None,
        }
    }

    pub fn with_alarm(mut self, alarm: Alarm) -> Self {
        self.alarm = Some(alarm);
        self
    }

    /// Advance exactly one second, rolling the weekday at midnight.
    pub fn tick(&mut self) {
        if self.time.advance() {
            self.day = self.day.next();
        }
    }

    /// The alarm message if the current second is the alarm time.
    pub fn check_alarm(&self) -> Option<&str> {
        self.alarm
            .as_ref()
            .filter(|a| a.time == self.time)
            .map(|a| a.message.as_str())
    }
}

impl fmt::Display for ClockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} day {}", self.time, self.day)
    }
}

/// How far the processor clock runs ahead of true time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftModel {
    seconds_fast_per_day: f64,
}

impl DriftModel {
    pub fn new(seconds_fast_per_day: f64) -> Result<Self> {
        if !(0.0..SECONDS_PER_DAY as f64).contains(&seconds_fast_per_day) {
            return Err(Error::invalid(
                "drift",
                format!("must be in [0, 86400) seconds per day, got {seconds_fast_per_day}"),
            ));
        }
        Ok(Self {
            seconds_fast_per_day,
        })
    }

    pub fn none() -> Self {
        Self {
            seconds_fast_per_day: 0.0,
        }
    }

    pub fn seconds_fast_per_day(&self) -> f64 {
        self.seconds_fast_per_day
    }

    /// Processor seconds to wait per displayed second.
    pub fn compensated_tick_interval(&self) -> f64 {
        1.0 + self.seconds_fast_per_day / SECONDS_PER_DAY as f64
    }

    pub fn compensated_tick_duration(&self) -> Duration {
        Duration::from_secs_f64(self.compensated_tick_interval())
    }
}

impl Default for DriftModel {
    fn default() -> Self {
        Self {
            seconds_fast_per_day: DEFAULT_DRIFT_SECONDS_PER_DAY,
        }
    }
}

pub fn compensated_tick_interval(drift: &DriftModel) -> f64 {
    drift.compensated_tick_interval()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlarmEvent {
    /// 1-based count of ticks applied when the alarm fired.
    pub tick: u64,
    pub time: TimeOfDay,
    pub day: Weekday,
    pub message: String,
}

impl fmt::Display for AlarmEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "alarm tick={} {} day {} {}",
            self.tick, self.time, self.day, self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClockRun {
    pub state: ClockState,
    pub events: Vec<AlarmEvent>,
    /// Processor time the ticks would take with drift compensation applied.
    pub processor_seconds: f64,
}

/// Apply `n_ticks` ticks, collecting alarm firings after each one.
pub fn run_clock(initial: &ClockState, drift: &DriftModel, n_ticks: u64) -> ClockRun {
    run_clock_with(initial, drift, n_ticks, |_, _| {})
}

/// [`run_clock`] with a callback invoked after every tick.
pub fn run_clock_with(
    initial: &ClockState,
    drift: &DriftModel,
    n_ticks: u64,
    mut on_tick: impl FnMut(u64, &ClockState),
) -> ClockRun {
    let mut state = initial.clone();
    let mut events = Vec::new();
    for tick in 1..=n_ticks {
        state.tick();
        on_tick(tick, &state);
        if let Some(message) = state.check_alarm() {
            events.push(AlarmEvent {
                tick,
                time: state.time,
                day: state.day,
                message: message.to_owned(),
            });
        }
    }
    ClockRun {
        state,
        events,
        processor_seconds: n_ticks as f64 * drift.compensated_tick_interval(),
    }
}
