//! Polynomial and rational parsing for the command line.
//!
//! Polynomials come in two forms that parse identically:
//! a comma-separated integer list in descending degree (`"1,-3,1"`), or
//! symbolic text (`"t^2 - 3t + 1"`, `*` optional, variable any single
//! letter used consistently).

use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use salem_core::poly::Poly;
use salem_core::IntPoly;

pub fn parse_poly(text: &str) -> Result<IntPoly> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        bail!("empty polynomial");
    }
    if trimmed.contains(',') || !trimmed.chars().any(|c| c.is_ascii_alphabetic()) {
        parse_coeff_list(trimmed)
    } else {
        parse_symbolic(trimmed)
    }
}

fn parse_coeff_list(text: &str) -> Result<IntPoly> {
    let mut coeffs = Vec::new();
    for piece in text.split(',') {
        let piece = piece.trim();
        let c = BigInt::from_str(piece)
            .map_err(|_| anyhow!("bad integer coefficient {piece:?}"))?;
        coeffs.push(c);
    }
    coeffs.reverse();
    Ok(Poly::new(coeffs))
}

fn parse_symbolic(text: &str) -> Result<IntPoly> {
    // whitespace may separate tokens but never split a number
    let mut last_non_ws: Option<char> = None;
    let mut pending_ws = false;
    for c in text.chars() {
        if c.is_whitespace() {
            pending_ws = true;
            continue;
        }
        if pending_ws {
            if let Some(prev) = last_non_ws {
                if prev.is_ascii_digit() && c.is_ascii_digit() {
                    bail!("whitespace inside a number");
                }
            }
            pending_ws = false;
        }
        last_non_ws = Some(c);
    }
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let n = chars.len();
    let mut i = 0usize;
    let mut var: Option<char> = None;
    let mut acc = IntPoly::zero();
    let mut first = true;
    while i < n {
        let mut negative = false;
        match chars[i] {
            '+' => i += 1,
            '-' => {
                negative = true;
                i += 1;
            }
            _ if first => {}
            c => bail!("expected '+' or '-' before {c:?}"),
        }
        let digits_start = i;
        while i < n && chars[i].is_ascii_digit() {
            i += 1;
        }
        let digit_str: String = chars[digits_start..i].iter().collect();
        let mut coef = if digit_str.is_empty() {
            BigInt::one()
        } else {
            BigInt::from_str(&digit_str).map_err(|_| anyhow!("bad coefficient {digit_str:?}"))?
        };
        if negative {
            coef = -coef;
        }
        let mut exp = 0usize;
        let saw_star = i < n && chars[i] == '*';
        if saw_star {
            if digit_str.is_empty() {
                bail!("'*' without a coefficient");
            }
            i += 1;
        }
        if i < n && chars[i].is_ascii_alphabetic() {
            let v = chars[i];
            match var {
                None => var = Some(v),
                Some(w) if w == v => {}
                Some(w) => bail!("mixed variables {w:?} and {v:?}"),
            }
            i += 1;
            exp = 1;
            if i < n && chars[i] == '^' {
                i += 1;
                let e_start = i;
                while i < n && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if e_start == i {
                    bail!("missing exponent after '^'");
                }
                let e_str: String = chars[e_start..i].iter().collect();
                exp = e_str.parse().map_err(|_| anyhow!("bad exponent {e_str:?}"))?;
            }
        } else if saw_star {
            bail!("expected a variable after '*'");
        } else if digit_str.is_empty() {
            bail!("expected a term at position {i}");
        }
        acc = acc.add(&Poly::monomial(coef, exp));
        first = false;
    }
    if first {
        bail!("empty polynomial");
    }
    Ok(acc)
}

/// Rational from `"p/q"`, an integer, a decimal (`"0.001"`), or
/// scientific notation (`"1e-12"`, `"2.5e-3"`). Must be positive for a
/// tolerance.
pub fn parse_rat(text: &str) -> Result<BigRational> {
    let t = text.trim();
    if t.is_empty() {
        bail!("empty rational");
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| anyhow!("bad numerator {num:?}"))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| anyhow!("bad denominator {den:?}"))?;
        if d.is_zero() {
            bail!("zero denominator");
        }
        return Ok(BigRational::new(n, d));
    }
    // [sign] digits [. digits] [e|E [sign] digits]
    let (mantissa, exp10) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = t[pos + 1..]
                .parse()
                .map_err(|_| anyhow!("bad exponent in {t:?}"))?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mantissa, ""),
    };
    if frac_part.contains(['+', '-']) {
        bail!("bad decimal {t:?}");
    }
    let digits = format!("{int_part}{frac_part}");
    let m = BigInt::from_str(&digits).map_err(|_| anyhow!("bad decimal {t:?}"))?;
    let scale = exp10 - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(m);
    if scale >= 0 {
        r *= BigRational::from_integer(ten.pow(scale as u32));
    } else {
        r /= BigRational::from_integer(ten.pow((-scale) as u32));
    }
    Ok(r)
}

pub fn parse_tol(text: &str) -> Result<BigRational> {
    let r = parse_rat(text)?;
    if !r.is_positive() {
        bail!("tolerance must be positive, got {r}");
    }
    Ok(r)
}
