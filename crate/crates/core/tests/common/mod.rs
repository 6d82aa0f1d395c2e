//! Reference implementations used as independent oracles by the integration
//! tests. Nothing here calls into the library's DSP code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

/// The delay ISR written out literally: zeroed array, index from 0,
/// `output = delayed + input; buffer[i] = input; i = (i + 1) % D`.
pub fn delay_isr_reference(input: &[i16], buf_size: usize) -> Vec<i16> {
    let mut buffer = vec![0i32; buf_size];
    let mut i = 0usize;
    let mut out = Vec::with_capacity(input.len());
    for &x in input {
        let x = x as i32;
        let delayed = buffer[i];
        let output = delayed + x;
        buffer[i] = x;
        i = (i + 1) % buf_size;
        out.push(output.clamp(-32768, 32767) as i16);
    }
    out
}

/// The echo ISR written out literally, storing
/// `round(input + delayed * gain)` clamped to 16 bits.
pub fn echo_isr_reference(input: &[i16], buf_size: usize, gain: f64) -> Vec<i16> {
    let mut buffer = vec![0i32; buf_size];
    let mut i = 0usize;
    let mut out = Vec::with_capacity(input.len());
    for &x in input {
        let x = x as i32;
        let delayed = buffer[i];
        let output = delayed + x;
        let fb = x as f64 + delayed as f64 * gain;
        buffer[i] = (fb.round() as i32).clamp(-32768, 32767);
        i = (i + 1) % buf_size;
        out.push(output.clamp(-32768, 32767) as i16);
    }
    out
}

/// Exact (mantissa, binary exponent) of a finite non-negative f64.
fn decompose(x: f64) -> (BigInt, i64) {
    assert!(x.is_finite() && x >= 0.0);
    let bits = x.to_bits();
    let biased = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    if biased == 0 {
        (BigInt::from(frac), -1074)
    } else {
        (BigInt::from(frac | (1u64 << 52)), biased - 1075)
    }
}

/// `num / den` for positive big integers, rounded once to f64 (to within an
/// ulp or so; far below any tolerance used here).
fn quotient_to_f64(num: &BigInt, den: &BigInt) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let shift = 80 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as usize) / den
    } else {
        num / (den << (-shift) as usize)
    };
    let mantissa = q.to_f64().expect("fits");
    mantissa * 2f64.powi(-shift as i32)
}

const FRAC_BITS: usize = 256;

/// sin(num / den) by Taylor series in 256-bit fixed point, rounded once to
/// f64. Accurate far beyond f64 precision for |num / den| <= 8.
pub fn sin_fixed(num: i64, den: i64) -> f64 {
    let one = BigInt::one() << FRAC_BITS;
    let x = (BigInt::from(num) << FRAC_BITS) / BigInt::from(den);
    let x2 = (&x * &x) >> FRAC_BITS;
    let mut term = x;
    let mut sum = BigInt::zero();
    for k in 0..40i64 {
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        term = ((&term * &x2) >> FRAC_BITS) / BigInt::from((2 * k + 2) * (2 * k + 3));
    }
    let negative = sum < BigInt::zero();
    let mag = quotient_to_f64(&(if negative { -sum } else { sum }), &one);
    if negative {
        -mag
    } else {
        mag
    }
}

/// sin(2 * 3.14 * i / 100) with 3.14 held exactly.
pub fn sine_314_reference(i: u32) -> f64 {
    sin_fixed(2 * 314 * i as i64, 100 * 100)
}

/// Butterworth magnitude with the power evaluated in exact integer
/// arithmetic. `lowpass` selects (w/wc)^(2N) versus (wc/w)^(2N).
pub fn butterworth_reference(lowpass: bool, order: u32, wc: f64, w: f64) -> f64 {
    if !lowpass && w == 0.0 {
        return 0.0;
    }
    let (top, bottom) = if lowpass { (w, wc) } else { (wc, w) };
    let (mt, et) = decompose(top);
    let (mb, eb) = decompose(bottom);
    let n = 2 * order;
    let shift = n as i64 * (et - eb);
    let mut num = num_traits::pow(mt, n as usize);
    let mut den = num_traits::pow(mb, n as usize);
    if shift >= 0 {
        num <<= shift as usize;
    } else {
        den <<= (-shift) as usize;
    }
    // 1 + (w/wc)^(2N) = (den + num) / den
    let q = quotient_to_f64(&(&den + &num), &den);
    1.0 / q.sqrt()
}
