//! Plain-text multivector grammar.
//!
//! A term list `coef * FACTORS` joined by `+`/`-`, where the factors of one
//! term are either generator tokens (`e1 e3`) or null-letter tokens
//! (`p1`, `q2`). Coefficients are integers or rationals `a/b`; a bare `±1`
//! coefficient is elided on output. Whitespace-insensitive; the Unicode
//! minus sign is accepted.

use std::fmt;

use crate::error::{Error, Result};
use crate::generators::{to_gamma, Algebra};
use crate::index::{EfbIndex, SlotValue};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Which token family an expression uses, used to echo results in the same
/// basis they were written in.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum TextBasis {
    Gamma,
    Null,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
enum FactorKind {
    E,
    P,
    Q,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Number { num: i64, den: i64 },
    Factor { kind: FactorKind, index: usize },
    Star,
    Plus,
    Minus,
}

fn parse_err(at: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        at,
        message: message.into(),
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Result<i64> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        input[start..*i]
            .parse::<i64>()
            .map_err(|_| parse_err(start, "number does not fit in 64 bits"))
    };
    while i < input.len() {
        let rest = &input[i..];
        let c = rest.chars().next().expect("nonempty");
        match c {
            ' ' | '\t' | '\n' | '\r' => i += c.len_utf8(),
            '+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            '-' | '\u{2212}' => {
                toks.push((i, Tok::Minus));
                i += c.len_utf8();
            }
            '*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            '0'..='9' => {
                let at = i;
                let num = read_int(&mut i)?;
                // Optional denominator, whitespace-insensitively.
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                    j += 1;
                }
                let mut den = 1i64;
                if j < bytes.len() && bytes[j] == b'/' {
                    i = j + 1;
                    while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                        i += 1;
                    }
                    if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(parse_err(i, "expected digits after '/'"));
                    }
                    den = read_int(&mut i)?;
                    if den == 0 {
                        return Err(parse_err(at, "zero denominator"));
                    }
                }
                toks.push((at, Tok::Number { num, den }));
            }
            'e' | 'p' | 'q' => {
                let at = i;
                i += 1;
                if i >= bytes.len() || !bytes[i].is_ascii_digit() {
                    return Err(parse_err(at, format!("expected an index after '{c}'")));
                }
                let idx = read_int(&mut i)?;
                if idx < 1 {
                    return Err(parse_err(at, "factor indices start at 1"));
                }
                let kind = match c {
                    'e' => FactorKind::E,
                    'p' => FactorKind::P,
                    _ => FactorKind::Q,
                };
                toks.push((
                    at,
                    Tok::Factor {
                        kind,
                        index: idx as usize,
                    },
                ));
            }
            other => return Err(parse_err(i, format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct Term {
    at: usize,
    sign: i8,
    num: i64,
    den: i64,
    factors: Vec<(FactorKind, usize)>,
}

fn parse_terms(input: &str) -> Result<Vec<Term>> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(parse_err(0, "empty expression"));
    }
    let mut terms = Vec::new();
    let mut pos = 0;
    loop {
        let mut sign = 1i8;
        let at = toks.get(pos).map_or(input.len(), |t| t.0);
        while let Some((_, tok)) = toks.get(pos) {
            match tok {
                Tok::Plus => pos += 1,
                Tok::Minus => {
                    sign = -sign;
                    pos += 1;
                }
                _ => break,
            }
        }
        let mut num = 1i64;
        let mut den = 1i64;
        let mut saw_number = false;
        if let Some((_, Tok::Number { num: n, den: d })) = toks.get(pos) {
            num = *n;
            den = *d;
            saw_number = true;
            pos += 1;
            if let Some((_, Tok::Star)) = toks.get(pos) {
                pos += 1;
            }
        }
        let mut factors = Vec::new();
        while let Some((fat, Tok::Factor { kind, index })) = toks.get(pos) {
            if let Some((first, _)) = factors.first() {
                let mixes = matches!(first, FactorKind::E) != matches!(kind, FactorKind::E);
                if mixes {
                    return Err(parse_err(
                        *fat,
                        "cannot mix e-factors with p/q-factors in one term",
                    ));
                }
            }
            factors.push((*kind, *index));
            pos += 1;
        }
        if !saw_number && factors.is_empty() {
            let at = toks.get(pos).map_or(input.len(), |t| t.0);
            return Err(parse_err(at, "expected a coefficient or a factor"));
        }
        terms.push(Term {
            at,
            sign,
            num,
            den,
            factors,
        });
        match toks.get(pos) {
            None => break,
            Some((_, Tok::Plus | Tok::Minus)) => {}
            Some((at, _)) => return Err(parse_err(*at, "expected '+' or '-' between terms")),
        }
    }
    Ok(terms)
}

/// Smallest `m` able to host every index appearing in the expression.
pub fn required_m(input: &str) -> Result<u8> {
    let mut needed = 1usize;
    for (at, tok) in lex(input)? {
        if let Tok::Factor { kind, index } = tok {
            let m = match kind {
                FactorKind::E => index.div_ceil(2),
                _ => index,
            };
            if m > crate::signature::MAX_DIMENSION as usize {
                return Err(parse_err(
                    at,
                    format!("index {index} exceeds the dimension bound"),
                ));
            }
            needed = needed.max(m);
        }
    }
    Ok(needed as u8)
}

/// Detects which token family the expression uses (`p`/`q` anywhere makes
/// it a null-basis expression).
pub fn detect_basis(input: &str) -> Result<TextBasis> {
    let null = lex(input)?.iter().any(|(_, t)| {
        matches!(
            t,
            Tok::Factor {
                kind: FactorKind::P | FactorKind::Q,
                ..
            }
        )
    });
    Ok(if null {
        TextBasis::Null
    } else {
        TextBasis::Gamma
    })
}

/// Parses an expression. When `m` is given it must be large enough for
/// every index; otherwise the smallest sufficient dimension is used.
pub fn parse_multivector<S: Scalar>(input: &str, m: Option<u8>) -> Result<Multivector<S>> {
    let needed = required_m(input)?;
    let m = match m {
        None => needed,
        Some(given) if given >= needed => given,
        Some(given) => {
            return Err(parse_err(
                0,
                format!("expression needs m >= {needed}, but m = {given} was requested"),
            ))
        }
    };
    let alg = Algebra::<S>::new(m)?;
    let terms = parse_terms(input)?;
    let mut acc = alg.zero();
    for term in terms {
        let coeff = S::from_fraction(term.sign as i64 * term.num, term.den)
            .ok_or_else(|| parse_err(term.at, "zero denominator"))?;
        let mut value = alg.identity().scaled(&coeff);
        for (kind, index) in &term.factors {
            let factor = match kind {
                FactorKind::E => alg.gamma(*index),
                FactorKind::P => alg.witt_p(*index),
                FactorKind::Q => alg.witt_q(*index),
            }
            .map_err(|e| parse_err(term.at, e.to_string()))?;
            value = value.product(&factor).expect("same m");
        }
        acc = acc.checked_add(&value).expect("same m");
    }
    Ok(acc)
}

/// The canonical letter word of a basis element, e.g. `q1 p1 q2`.
pub fn render_word(x: &EfbIndex) -> String {
    let mut parts = Vec::with_capacity(2 * x.m() as usize);
    for i in 1..=x.m() as usize {
        match x.slot(i) {
            SlotValue::QP => {
                parts.push(format!("q{i}"));
                parts.push(format!("p{i}"));
            }
            SlotValue::PQ => {
                parts.push(format!("p{i}"));
                parts.push(format!("q{i}"));
            }
            SlotValue::Q => parts.push(format!("q{i}")),
            SlotValue::P => parts.push(format!("p{i}")),
        }
    }
    parts.join(" ")
}

fn push_term<S: Scalar>(out: &mut String, first: bool, coeff: &S, factors: &str) {
    let negative = coeff.is_negative();
    if first {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let magnitude = coeff.abs();
    if factors.is_empty() {
        out.push_str(&magnitude.to_string());
    } else if magnitude == S::one() {
        out.push_str(factors);
    } else {
        out.push_str(&magnitude.to_string());
        out.push_str(" * ");
        out.push_str(factors);
    }
}

/// Serializes over the basis words in lexicographic index order.
pub fn render_efb<S: Scalar>(v: &Multivector<S>) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (x, c)) in v.terms().enumerate() {
        push_term(&mut out, k == 0, c, &render_word(x));
    }
    out
}

/// Serializes over the γ-monomial basis, ordered by grade then mask.
pub fn render_gamma<S: Scalar>(v: &Multivector<S>) -> String {
    let monomials = to_gamma(v);
    if monomials.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, mono) in monomials.iter().enumerate() {
        let factors = mono
            .generators()
            .iter()
            .map(|i| format!("e{i}"))
            .collect::<Vec<_>>()
            .join(" ");
        push_term(&mut out, k == 0, &mono.coefficient, &factors);
    }
    out
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_efb(self))
    }
}
