//! Plain-text form of elements: `2*x1^2*x3*d2 - 1/3*xi45 + x5*xi12`.
//!
//! Indices are 1-based. Every term carries exactly one generator (`d<i>` or
//! `xi<ij>`); `xi21` means `-xi12`.

use std::fmt::Write;

use crate::exact::Rational;

use super::{Exponent, Gen, GradedElement, NVARS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseElementError {
    #[error("empty input")]
    Empty,
    #[error("malformed term `{0}`")]
    BadTerm(String),
    #[error("bad factor `{0}`")]
    BadFactor(String),
    #[error("variable index out of range in `{0}`")]
    BadIndex(String),
    #[error("term `{0}` has no generator")]
    MissingGenerator(String),
    #[error("term `{0}` has more than one generator")]
    MultipleGenerators(String),
    #[error("repeated index in `{0}`")]
    RepeatedIndex(String),
    #[error("exponent overflow in `{0}`")]
    Overflow(String),
}

fn write_monomial(out: &mut String, e: &Exponent, g: &Gen) {
    for (i, &a) in e.iter().enumerate() {
        match a {
            0 => {}
            1 => write!(out, "x{}*", i + 1).unwrap(),
            _ => write!(out, "x{}^{}*", i + 1, a).unwrap(),
        }
    }
    match *g {
        Gen::D(i) => write!(out, "d{}", i + 1).unwrap(),
        Gen::Xi(i, j) => write!(out, "xi{}{}", i + 1, j + 1).unwrap(),
    }
}

pub(crate) fn format_element(a: &GradedElement) -> String {
    let terms = a.terms();
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (g, e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        if !abs.is_one() {
            write!(out, "{abs}*").unwrap();
        }
        write_monomial(&mut out, e, g);
    }
    out
}

fn parse_index(s: &str, term: &str) -> Result<usize, ParseElementError> {
    match s.parse::<usize>() {
        Ok(i) if (1..=NVARS).contains(&i) => Ok(i - 1),
        _ => Err(ParseElementError::BadIndex(term.to_string())),
    }
}

fn parse_term(term: &str) -> Result<GradedElement, ParseElementError> {
    if term.is_empty() {
        return Err(ParseElementError::BadTerm(term.to_string()));
    }
    let mut coeff = Rational::one();
    let mut exp: Exponent = [0; NVARS];
    let mut gen: Option<Gen> = None;
    let mut set_gen = |g: Gen| {
        if gen.replace(g).is_some() {
            Err(ParseElementError::MultipleGenerators(term.to_string()))
        } else {
            Ok(())
        }
    };
    for f in term.split('*') {
        if f.is_empty() {
            return Err(ParseElementError::BadTerm(term.to_string()));
        }
        if let Some(rest) = f.strip_prefix("xi") {
            let b = rest.as_bytes();
            if b.len() != 2 || !b.iter().all(u8::is_ascii_digit) {
                return Err(ParseElementError::BadFactor(f.to_string()));
            }
            let i = parse_index(&rest[..1], term)?;
            let j = parse_index(&rest[1..], term)?;
            if i == j {
                return Err(ParseElementError::RepeatedIndex(term.to_string()));
            }
            if i > j {
                coeff = -coeff;
            }
            set_gen(Gen::Xi(i.min(j), i.max(j)))?;
        } else if let Some(rest) = f.strip_prefix('x') {
            let (idx, pow) = match rest.split_once('^') {
                Some((a, b)) => {
                    let p = b
                        .parse::<u32>()
                        .ok()
                        .filter(|_| b.bytes().all(|c| c.is_ascii_digit()))
                        .ok_or_else(|| ParseElementError::BadFactor(f.to_string()))?;
                    (a, p)
                }
                None => (rest, 1),
            };
            if !idx.bytes().all(|c| c.is_ascii_digit()) {
                return Err(ParseElementError::BadFactor(f.to_string()));
            }
            let i = parse_index(idx, term)?;
            exp[i] = exp[i]
                .checked_add(pow)
                .ok_or_else(|| ParseElementError::Overflow(term.to_string()))?;
        } else if let Some(rest) = f.strip_prefix('d') {
            if !rest.bytes().all(|c| c.is_ascii_digit()) {
                return Err(ParseElementError::BadFactor(f.to_string()));
            }
            set_gen(Gen::D(parse_index(rest, term)?))?;
        } else {
            let c: Rational = f
                .parse()
                .map_err(|_| ParseElementError::BadFactor(f.to_string()))?;
            coeff *= &c;
        }
    }
    let g = gen.ok_or_else(|| ParseElementError::MissingGenerator(term.to_string()))?;
    Ok(GradedElement::monomial(coeff, exp, g))
}

pub(crate) fn parse_element(s: &str) -> Result<GradedElement, ParseElementError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ParseElementError::Empty);
    }
    if s == "0" {
        return Ok(GradedElement::zero());
    }
    let mut out = GradedElement::zero();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'+' if !first => (false, &rest[1..]),
            b'-' => (true, &rest[1..]),
            _ if first => (false, rest),
            _ => return Err(ParseElementError::BadTerm(rest.to_string())),
        };
        first = false;
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let t = parse_term(&body[..end])?;
        out = if neg { out.sub(&t) } else { out.add(&t) };
        rest = &body[end..];
    }
    Ok(out)
}
