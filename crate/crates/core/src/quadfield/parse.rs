//! Text form of field elements.
//!
//! A rational is `p` or `p/q`; an element is `<rat>`, `<rat>*w`, or
//! `<rat>+<rat>*w` / `<rat>-<rat>*w`, where `w` is the ring generator of the
//! active field. Whitespace is ignored. A bare `w` (or `-w`) is accepted too.
//! Quotients `(<elem>)/(<elem>)` are accepted where a cusp is expected.

use super::{Field, QuadElem};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

pub(crate) fn write_components(f: &mut fmt::Formatter<'_>, x: &str, y: &BigInt) -> fmt::Result {
    let x_zero = x == "0";
    if y.is_zero() {
        return f.write_str(x);
    }
    if x_zero {
        return write!(f, "{y}*w");
    }
    if y.is_negative() {
        write!(f, "{x}-{}*w", -y)
    } else {
        write!(f, "{x}+{y}*w")
    }
}

pub(crate) fn write_rational_components(
    f: &mut fmt::Formatter<'_>,
    x: &BigRational,
    y: &BigRational,
) -> fmt::Result {
    if y.is_zero() {
        return write!(f, "{x}");
    }
    if x.is_zero() {
        return write!(f, "{y}*w");
    }
    if y.is_negative() {
        write!(f, "{x}-{}*w", -y)
    } else {
        write!(f, "{x}+{y}*w")
    }
}

fn parse_error(input: &str) -> Error {
    Error::Parse { what: "field element", input: input.to_string() }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    if !valid(num) || !valid(den) {
        return None;
    }
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num.parse().ok()?, den))
}

/// Parse an element of the grammar above.
pub fn parse_elem(field: Field, input: &str) -> Result<QuadElem> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_error(input));
    }
    // split into signed terms at top-level + and -
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for (i, c) in s.chars().enumerate() {
        if (c == '+' || c == '-') && (i == 0 || !current.is_empty()) {
            if i > 0 {
                terms.push((negative, std::mem::take(&mut current)));
            }
            negative = c == '-';
        } else {
            current.push(c);
        }
    }
    terms.push((negative, current));
    if terms.len() > 2 {
        return Err(parse_error(input));
    }
    let mut x: Option<BigRational> = None;
    let mut y: Option<BigRational> = None;
    for (neg, body) in terms {
        if body.is_empty() {
            return Err(parse_error(input));
        }
        let (value, is_w) = if body == "w" {
            (BigRational::from_integer(BigInt::from(1)), true)
        } else if let Some(coef) = body.strip_suffix("*w") {
            (parse_rational(coef).ok_or_else(|| parse_error(input))?, true)
        } else {
            (parse_rational(&body).ok_or_else(|| parse_error(input))?, false)
        };
        let value = if neg { -value } else { value };
        let slot = if is_w { &mut y } else { &mut x };
        if slot.is_some() {
            return Err(parse_error(input));
        }
        *slot = Some(value);
    }
    Ok(QuadElem::new(field, x.unwrap_or_else(BigRational::zero), y.unwrap_or_else(BigRational::zero)))
}

fn split_parenthesized(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    return Some((&s[1..i], &s[i + 1..]));
                }
            }
            _ => {}
        }
    }
    None
}

/// Parse a cusp: an element, or a quotient `(<elem>)/(<elem>)` whose
/// denominator may also be written without parentheses.
pub fn parse_kappa(field: Field, input: &str) -> Result<QuadElem> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if !s.starts_with('(') {
        return parse_elem(field, &s);
    }
    let (inner, rest) = split_parenthesized(&s).ok_or_else(|| parse_error(input))?;
    let num = parse_elem(field, inner)?;
    if rest.is_empty() {
        return Ok(num);
    }
    let den_text = rest.strip_prefix('/').ok_or_else(|| parse_error(input))?;
    let den = if den_text.starts_with('(') {
        match split_parenthesized(den_text) {
            Some((inner, "")) => parse_elem(field, inner)?,
            _ => return Err(parse_error(input)),
        }
    } else {
        parse_elem(field, den_text)?
    };
    num.checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadfield::QuadInt;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_grammar_forms() {
        let f = Field::D1;
        assert_eq!(parse_elem(f, "3").unwrap(), QuadElem::from_ints(f, 3, 0));
        assert_eq!(parse_elem(f, "-2/4").unwrap(), QuadElem::new(f, q(-1, 2), q(0, 1)));
        assert_eq!(parse_elem(f, "5/3*w").unwrap(), QuadElem::new(f, q(0, 1), q(5, 3)));
        assert_eq!(parse_elem(f, " 1/2 + 1/2 * w ").unwrap(), QuadElem::new(f, q(1, 2), q(1, 2)));
        assert_eq!(parse_elem(f, "1-w").unwrap(), QuadElem::from_ints(f, 1, -1));
        assert_eq!(parse_elem(f, "-w").unwrap(), QuadElem::from_ints(f, 0, -1));
    }

    #[test]
    fn rejects_malformed() {
        let f = Field::D7;
        for bad in ["", "1+", "w+w", "1/0", "x", "1+2+3*w", "2**w", "(1", "(1)/", "1.5"] {
            assert!(parse_elem(f, bad).is_err() || parse_kappa(f, bad).is_err(), "{bad}");
        }
        assert!(parse_kappa(f, "(1)/(0)").is_err());
    }

    #[test]
    fn parses_quotients() {
        let f = Field::D1;
        let k = parse_kappa(f, "(1+w)/2").unwrap();
        assert_eq!(k, QuadElem::new(f, q(1, 2), q(1, 2)));
        let k = parse_kappa(f, "(1)/(1-w)").unwrap();
        assert_eq!(k, QuadElem::new(f, q(1, 2), q(1, 2)));
        assert_eq!(parse_kappa(f, "1/2+1/2*w").unwrap(), k);
    }

    #[test]
    fn display_forms() {
        let f = Field::D3;
        assert_eq!(QuadInt::new(f, 0, 0).to_string(), "0");
        assert_eq!(QuadInt::new(f, -3, 0).to_string(), "-3");
        assert_eq!(QuadInt::new(f, 0, -1).to_string(), "-1*w");
        assert_eq!(QuadInt::new(f, 2, -5).to_string(), "2-5*w");
        assert_eq!(QuadElem::new(f, q(1, 2), q(3, 4)).to_string(), "1/2+3/4*w");
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(a in -500i64..500, b in 1i64..50, c in -500i64..500, d in 1i64..50) {
            for f in Field::ALL {
                let v = QuadElem::new(f, q(a, b), q(c, d));
                prop_assert_eq!(parse_elem(f, &v.to_string()).unwrap(), v);
            }
        }
    }
}
