//! Number rendering shared by the text reports.

use crate::Ratio;

/// Renders `x` like C's `%.6g`: six significant digits, trailing zeros
/// dropped, scientific notation outside `[1e-4, 1e6)`.
pub fn g6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..6).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (5 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn ratio_to_f64(r: &Ratio) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `p/q (decimal)` rendering of an exact ratio.
pub fn ratio(r: &Ratio) -> String {
    format!("{}/{} ({})", r.numer(), r.denom(), g6(ratio_to_f64(r)))
}
