//! Number formatting and parsing for the command line.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Shortest decimal form with at most 15 significant digits. Plain notation
/// for exponents in `-5..15`, scientific otherwise.
pub fn sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `a`, `a+bi`, `a-bi` or `bi`, each at 15 significant digits.
pub fn complex15(z: Complex64) -> String {
    if z.im == 0.0 {
        sig15(z.re)
    } else if z.re == 0.0 {
        format!("{}i", sig15(z.im))
    } else if z.im < 0.0 || z.im.is_nan() {
        format!("{} - {}i", sig15(z.re), sig15(-z.im))
    } else {
        format!("{} + {}i", sig15(z.re), sig15(z.im))
    }
}

/// Parses `2`, `-1.5e-3`, `0.5+14.1i`, `3i`, `-i` (a trailing `j` works too).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Config(format!("not a number: `{text}`"));
    let real = |t: &str| t.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(bad);
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return Ok(Complex64::new(real(&s)?, 0.0));
    };
    // the sign that separates the parts is the last one not inside an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (real(&body[..i])?, &body[i..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => real(t)?,
    };
    Ok(Complex64::new(re, im))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_digits() {
        assert_eq!(sig15(std::f64::consts::PI * std::f64::consts::PI / 8.0), "1.23370055013617");
        assert_eq!(sig15(0.5), "0.5");
        assert_eq!(sig15(-61.0), "-61");
        assert_eq!(sig15(1.0 / 3.0), "0.333333333333333");
        assert_eq!(sig15(1e-20), "1e-20");
        assert_eq!(sig15(2.5e20), "2.5e20");
        assert_eq!(sig15(0.0), "0");
    }

    #[test]
    fn complex_literals() {
        let z = |re, im| Complex64::new(re, im);
        assert_eq!(parse_complex("2").unwrap(), z(2.0, 0.0));
        assert_eq!(parse_complex("-1.5e-3").unwrap(), z(-1.5e-3, 0.0));
        assert_eq!(parse_complex("0.5+14.1i").unwrap(), z(0.5, 14.1));
        assert_eq!(parse_complex("1e-2-2e+1i").unwrap(), z(0.01, -20.0));
        assert_eq!(parse_complex("3i").unwrap(), z(0.0, 3.0));
        assert_eq!(parse_complex("-i").unwrap(), z(0.0, -1.0));
        assert_eq!(parse_complex(" 1 - 2j ").unwrap(), z(1.0, -2.0));
        for bad in ["", "abc", "1+", "2ii", "nan", "1++2i"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
        assert_eq!(complex15(z(1.0, -0.25)), "1 - 0.25i");
    }
}
