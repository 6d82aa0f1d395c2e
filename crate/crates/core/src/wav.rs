//! PCM-16 WAV files, the stand-in for the board's line input and output.
//!
//! Layout written: `RIFF <size> WAVE`, a 16-byte `fmt ` chunk (format 1),
//! then `data`. On read, chunks other than `fmt ` and `data` are skipped, and
//! anything after the data chunk is ignored. Only 16-bit integer PCM with one
//! or two channels is accepted.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::codec::saturate;
use crate::{Error, Result, Sample16};

const FORMAT_PCM: u16 = 1;
const HEADER_LEN: usize = 44;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WavError {
    #[error("malformed WAV header: {0}")]
    MalformedHeader(String),
    #[error("not integer PCM (format code {0:#06x})")]
    NotPcm(u16),
    #[error("unsupported bit depth {0}, only 16-bit PCM is supported")]
    UnsupportedBitDepth(u16),
    #[error("unsupported channel count {0}, expected 1 or 2")]
    UnsupportedChannels(u16),
    #[error("truncated data: {0}")]
    Truncated(String),
}

/// Decoded audio, one sample vector per channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AudioClip {
    sample_rate_hz: u32,
    channels: Vec<Vec<Sample16>>,
}

impl AudioClip {
    pub fn new(sample_rate_hz: u32, channels: Vec<Vec<Sample16>>) -> Result<Self> {
        if sample_rate_hz == 0 {
            return Err(Error::invalid("sample rate", "must be positive"));
        }
        if !(1..=2).contains(&channels.len()) {
            return Err(Error::invalid(
                "channel count",
                format!("expected 1 or 2, got {}", channels.len()),
            ));
        }
        if channels.iter().any(|c| c.len() != channels[0].len()) {
            return Err(Error::invalid(
                "channels",
                "all channels must have equal length",
            ));
        }
        Ok(Self {
            sample_rate_hz,
            channels,
        })
    }

    pub fn mono(sample_rate_hz: u32, samples: Vec<Sample16>) -> Result<Self> {
        Self::new(sample_rate_hz, vec![samples])
    }

    pub fn stereo(sample_rate_hz: u32, left: Vec<Sample16>, right: Vec<Sample16>) -> Result<Self> {
        Self::new(sample_rate_hz, vec![left, right])
    }

    pub fn sample_rate_hz(&self) -> u32 {
        self.sample_rate_hz
    }

    pub fn num_channels(&self) -> usize {
        self.channels.len()
    }

    /// Samples per channel.
    pub fn len(&self) -> usize {
        self.channels[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn channel(&self, index: usize) -> Option<&[Sample16]> {
        self.channels.get(index).map(Vec::as_slice)
    }

    pub fn channels(&self) -> &[Vec<Sample16>] {
        &self.channels
    }

    pub fn into_channels(self) -> Vec<Vec<Sample16>> {
        self.channels
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChannelSelect {
    #[default]
    Left,
    Right,
    Downmix,
}

impl fmt::Display for ChannelSelect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelSelect::Left => "left",
            ChannelSelect::Right => "right",
            ChannelSelect::Downmix => "downmix",
        })
    }
}

impl FromStr for ChannelSelect {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(ChannelSelect::Left),
            "right" | "r" => Ok(ChannelSelect::Right),
            "downmix" | "mix" => Ok(ChannelSelect::Downmix),
            other => Err(Error::invalid(
                "channel",
                format!("unknown selection {other:?}"),
            )),
        }
    }
}

/// Reduce a clip to the mono stream the engine consumes.
///
/// Left on a mono clip is the clip itself, and so is a downmix. Right on a
/// mono clip is an error.
pub fn select_channel(clip: &AudioClip, which: ChannelSelect) -> Result<Vec<Sample16>> {
    match (which, clip.channels.as_slice()) {
        (ChannelSelect::Left, [left, ..]) => Ok(left.clone()),
        (ChannelSelect::Right, [_, right]) => Ok(right.clone()),
        (ChannelSelect::Right, _) => Err(Error::invalid(
            "channel",
            "right channel requested from a mono clip",
        )),
        (ChannelSelect::Downmix, [mono]) => Ok(mono.clone()),
        (ChannelSelect::Downmix, [l, r]) => Ok(l
            .iter()
            .zip(r)
            .map(|(&a, &b)| average_half_away(a, b))
            .collect()),
        _ => unreachable!("AudioClip holds one or two channels"),
    }
}

fn average_half_away(a: Sample16, b: Sample16) -> Sample16 {
    let sum = a as i64 + b as i64;
    let half = if sum >= 0 {
        (sum + 1) / 2
    } else {
        (sum - 1) / 2
    };
    saturate(half)
}

fn u16_at(bytes: &[u8], at: usize) -> u16 {
    u16::from_le_bytes([bytes[at], bytes[at + 1]])
}

fn u32_at(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes([bytes[at], bytes[at + 1], bytes[at + 2], bytes[at + 3]])
}

struct Format {
    channels: u16,
    sample_rate: u32,
}

fn parse_fmt(body: &[u8]) -> Result<Format, WavError> {
    if body.len() < 16 {
        return Err(WavError::MalformedHeader(format!(
            "fmt chunk is {} bytes, need at least 16",
            body.len()
        )));
    }
    let format_code = u16_at(body, 0);
    let channels = u16_at(body, 2);
    let sample_rate = u32_at(body, 4);
    let byte_rate = u32_at(body, 8);
    let block_align = u16_at(body, 12);
    let bits = u16_at(body, 14);

    if format_code != FORMAT_PCM {
        return Err(WavError::NotPcm(format_code));
    }
    if bits != 16 {
        return Err(WavError::UnsupportedBitDepth(bits));
    }
    if !(1..=2).contains(&channels) {
        return Err(WavError::UnsupportedChannels(channels));
    }
    if sample_rate == 0 {
        return Err(WavError::MalformedHeader("sample rate is 0".into()));
    }
    if block_align != 2 * channels || byte_rate as u64 != sample_rate as u64 * block_align as u64 {
        return Err(WavError::MalformedHeader(format!(
            "inconsistent block align {block_align} / byte rate {byte_rate}"
        )));
    }
    Ok(Format {
        channels,
        sample_rate,
    })
}

/// Decode a PCM-16 WAV file.
pub fn read_wav(bytes: &[u8]) -> Result<AudioClip, WavError> {
    if bytes.len() < 12 {
        return Err(WavError::MalformedHeader(format!(
            "{} bytes is too short for a RIFF header",
            bytes.len()
        )));
    }
    if &bytes[0..4] != b"RIFF" || &bytes[8..12] != b"WAVE" {
        return Err(WavError::MalformedHeader(
            "missing RIFF/WAVE signature".into(),
        ));
    }

    let mut pos = 12;
    let mut format: Option<Format> = None;
    loop {
        if pos + 8 > bytes.len() {
            return Err(if format.is_none() {
                WavError::MalformedHeader("no fmt chunk".into())
            } else {
                WavError::MalformedHeader("no data chunk".into())
            });
        }
        let id = &bytes[pos..pos + 4];
        let size = u32_at(bytes, pos + 4) as usize;
        let body_start = pos + 8;
        let available = bytes.len() - body_start;

        if id == b"data" {
            let fmt = format
                .ok_or_else(|| WavError::MalformedHeader("data chunk before fmt chunk".into()))?;
            if size > available {
                return Err(WavError::Truncated(format!(
                    "data chunk declares {size} bytes, {available} present"
                )));
            }
            let frame = 2 * fmt.channels as usize;
            if !size.is_multiple_of(frame) {
                return Err(WavError::Truncated(format!(
                    "data chunk of {size} bytes is not a whole number of {frame}-byte frames"
                )));
            }
            let data = &bytes[body_start..body_start + size];
            let nch = fmt.channels as usize;
            let frames = size / frame;
            let mut channels = vec![Vec::with_capacity(frames); nch];
            for (i, pair) in data.chunks_exact(2).enumerate() {
                channels[i % nch].push(i16::from_le_bytes([pair[0], pair[1]]));
            }
            return Ok(AudioClip {
                sample_rate_hz: fmt.sample_rate,
                channels,
            });
        }

        if size > available {
            return Err(WavError::MalformedHeader(format!(
                "chunk {:?} declares {size} bytes, {available} present",
                String::from_utf8_lossy(id)
            )));
        }
        if id == b"fmt " {
            if format.is_some() {
                return Err(WavError::MalformedHeader("duplicate fmt chunk".into()));
            }
            format = Some(parse_fmt(&bytes[body_start..body_start + size])?);
        }
        // Chunks are word aligned.
        pos = body_start + size + (size & 1);
    }
}

/// Encode a clip as canonical 44-byte-header PCM-16 WAV.
pub fn write_wav(clip: &AudioClip) -> Vec<u8> {
    let nch = clip.num_channels() as u16;
    let block_align = 2 * nch;
    let data_len = clip.len() * block_align as usize;
    let mut out = Vec::with_capacity(HEADER_LEN + data_len);

    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&((36 + data_len) as u32).to_le_bytes());
    out.extend_from_slice(b"WAVE");

    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes());
    out.extend_from_slice(&FORMAT_PCM.to_le_bytes());
    out.extend_from_slice(&nch.to_le_bytes());
    out.extend_from_slice(&clip.sample_rate_hz.to_le_bytes());
    out.extend_from_slice(&(clip.sample_rate_hz * block_align as u32).to_le_bytes());
    out.extend_from_slice(&block_align.to_le_bytes());
    out.extend_from_slice(&16u16.to_le_bytes());

    out.extend_from_slice(b"data");
    out.extend_from_slice(&(data_len as u32).to_le_bytes());
    for frame in 0..clip.len() {
        for ch in &clip.channels {
            out.extend_from_slice(&ch[frame].to_le_bytes());
        }
    }
    out
}

pub fn read_wav_file(path: impl AsRef<std::path::Path>) -> Result<AudioClip> {
    let bytes = std::fs::read(path)?;
    Ok(read_wav(&bytes)?)
}

pub fn write_wav_file(path: impl AsRef<std::path::Path>, clip: &AudioClip) -> Result<()> {
    std::fs::write(path, write_wav(clip))?;
    Ok(())
}
