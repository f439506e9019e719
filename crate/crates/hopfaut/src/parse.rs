//! Text syntax for algebra and tensor elements.
//!
//! A term is an optional rational coefficient followed by `*`, then one
//! monomial per tensor factor, separated by `⊗` or `|`. Monomials are
//! products of generators: `v1`, `x2` (synonyms), `z12` or `z1_2` (only in
//! the nil-2 algebra), each with an optional `^k`; `1` is the unit. Terms are
//! joined by `+` and `-`. Factors are multiplied in the order written, so
//! `x2 x1` is straightened in the nil-2 algebra.
//!
//! ```text
//! 2*v1v2 - v2v1 + 3
//! x1 ⊗ x2^2 - 1/2*z12 ⊗ 1
//! ```

use hopfaut_core::hopf::{AlgebraElement, HopfDescriptor, HopfError, TensorElement};
use hopfaut_core::symfunc::{Partition, SchurPoly, SymFuncError};
use hopfaut_core::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected `{found}` in `{input}`")]
    Unexpected { input: String, found: char },
    #[error("generator index {index} out of range for dim V = {dim}")]
    OutOfRange { index: usize, dim: usize },
    #[error("`{0}` only exists in the nil-2 algebra")]
    NotNil2(String),
    #[error("z_ij needs i < j, got `{0}`")]
    BadPair(String),
    #[error("terms have different numbers of tensor factors ({0} and {1})")]
    ArityMismatch(usize, usize),
    #[error("bad coefficient `{0}`")]
    Coefficient(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

fn split_terms(s: &str) -> Result<Vec<(bool, &str)>, ParseError> {
    let mut out = Vec::new();
    let mut negative = false;
    let mut start = 0;
    let mut seen_body = false;
    for (i, c) in s.char_indices() {
        if (c == '+' || c == '-') && !s[..i].trim_end().ends_with('^') {
            let body = s[start..i].trim();
            if body.is_empty() {
                if seen_body {
                    return Err(ParseError::Unexpected { input: s.to_string(), found: c });
                }
                if c == '-' {
                    negative = !negative;
                }
            } else {
                out.push((negative, body));
                seen_body = false;
                negative = c == '-';
            }
            start = i + c.len_utf8();
        } else if !c.is_whitespace() {
            seen_body = true;
        }
    }
    let body = s[start..].trim();
    if body.is_empty() {
        if !out.is_empty() || negative {
            return Err(ParseError::Empty);
        }
    } else {
        out.push((negative, body));
    }
    if out.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(out)
}

fn split_coefficient(term: &str) -> Result<(Rational, &str), ParseError> {
    if let Some((left, right)) = term.split_once('*') {
        let c = left.trim().parse::<Rational>().map_err(|_| ParseError::Coefficient(left.trim().to_string()))?;
        return Ok((c, right.trim()));
    }
    match term.parse::<Rational>() {
        Ok(c) if term != "1" => Ok((c, "1")),
        _ => Ok((Rational::one(), term)),
    }
}

fn digits(chars: &[char], mut i: usize) -> (String, usize) {
    let mut s = String::new();
    while i < chars.len() && chars[i].is_ascii_digit() {
        s.push(chars[i]);
        i += 1;
    }
    (s, i)
}

/// A product of generators, e.g. `v1v2`, `x1^2 z12`, `1`.
pub fn parse_monomial(desc: HopfDescriptor, s: &str) -> Result<AlgebraElement, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let unexpected = |c: char| ParseError::Unexpected { input: s.to_string(), found: c };
    let dim = desc.dim_v();
    let mut acc = AlgebraElement::one(desc);
    let mut any = false;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() || c == '·' || c == '.' {
            i += 1;
            continue;
        }
        let (g, next) = match c {
            '1' => {
                i += 1;
                any = true;
                continue;
            }
            'v' | 'x' => {
                let (ds, next) = digits(&chars, i + 1);
                let index: usize = ds.parse().map_err(|_| unexpected(c))?;
                if index == 0 || index > dim {
                    return Err(ParseError::OutOfRange { index, dim });
                }
                (index - 1, next)
            }
            'z' => {
                if !desc.is_nil2() {
                    return Err(ParseError::NotNil2(s.to_string()));
                }
                let (first, mut next) = digits(&chars, i + 1);
                let (a, b) = if next < chars.len() && chars[next] == '_' {
                    let (second, n2) = digits(&chars, next + 1);
                    next = n2;
                    (first, second)
                } else if first.len() == 2 {
                    (first[..1].to_string(), first[1..].to_string())
                } else {
                    return Err(ParseError::BadPair(s.to_string()));
                };
                let a: usize = a.parse().map_err(|_| ParseError::BadPair(s.to_string()))?;
                let b: usize = b.parse().map_err(|_| ParseError::BadPair(s.to_string()))?;
                if a == 0 || b == 0 || a >= b {
                    return Err(ParseError::BadPair(s.to_string()));
                }
                if b > dim {
                    return Err(ParseError::OutOfRange { index: b, dim });
                }
                (dim + desc.z_index(a - 1, b - 1), next)
            }
            other => return Err(unexpected(other)),
        };
        i = next;
        let mut power = 1;
        if i < chars.len() && chars[i] == '^' {
            let (ds, next) = digits(&chars, i + 1);
            power = ds.parse().map_err(|_| unexpected('^'))?;
            i = next;
        }
        acc = acc.mul(&AlgebraElement::generator(desc, g).pow(power))?;
        any = true;
    }
    if !any {
        return Err(ParseError::Empty);
    }
    Ok(acc)
}

/// A tensor expression; every term must have the same number of factors.
pub fn parse_tensor(desc: HopfDescriptor, s: &str) -> Result<TensorElement, ParseError> {
    let mut out: Option<TensorElement> = None;
    for (negative, term) in split_terms(s)? {
        let (mut coeff, body) = split_coefficient(term)?;
        if negative {
            coeff = -coeff;
        }
        let factors = body
            .split(['⊗', '|'])
            .map(|f| parse_monomial(desc, f.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let t = TensorElement::tensor_product(&factors)?.scaled(&coeff);
        out = Some(match out {
            None => t,
            Some(acc) if acc.arity() == t.arity() => acc.add(&t)?,
            Some(acc) => return Err(ParseError::ArityMismatch(acc.arity(), t.arity())),
        });
    }
    out.ok_or(ParseError::Empty)
}

/// A single-factor expression.
pub fn parse_element(desc: HopfDescriptor, s: &str) -> Result<AlgebraElement, ParseError> {
    let t = parse_tensor(desc, s)?;
    if t.arity() != 1 {
        return Err(ParseError::ArityMismatch(1, t.arity()));
    }
    Ok(t.to_algebra()?)
}

/// A Schur expansion such as `1,1,1,1 + 2,2` or `2*[2,1] - [3]`.
pub fn parse_schur(s: &str) -> Result<SchurPoly, ParseError> {
    let mut out = SchurPoly::zero();
    for (negative, term) in split_terms(s)? {
        let (c, body) = match term.split_once('*') {
            Some((c, body)) => {
                (c.trim().parse::<i64>().map_err(|_| ParseError::Coefficient(c.trim().to_string()))?, body)
            }
            None => (1, term),
        };
        out.add_term(body.parse::<Partition>()?, if negative { -c } else { c });
    }
    Ok(out)
}
