// SPDX-License-Identifier: MIT OR Apache-2.0

//! Number formatting shared by the text and CSV writers.

/// Formats `x` with `digits` significant digits, switching to exponent
/// notation outside `[1e-4, 1e9)`.
pub fn sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let mag = x.abs().log10().floor() as i32;
    if !(-4..9).contains(&mag) {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// Nine significant digits, the precision of every table the CLI prints.
pub fn sig9(x: f64) -> String {
    sig(x, 9)
}

/// Optional value, `-` when absent.
pub fn opt9(x: Option<f64>) -> String {
    x.map(sig9).unwrap_or_else(|| "-".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig9(0.768_800_372_687_105_1), "0.768800373");
        assert_eq!(sig9(1.309_016_994_374_947_5), "1.30901699");
        assert_eq!(sig9(0.5), "0.500000000");
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig(1.5e-7, 3), "1.50e-7");
    }
}
