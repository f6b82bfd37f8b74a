//! The space `V_{k,k}` of polynomials homogeneous of degree `k` in `(X, Y)`
//! and in `(Xb, Yb)`, and the right slash action
//! `P|g (X, Y, Xb, Yb) = P(aX + bY, cX + dY, conj(a)Xb + conj(b)Yb, conj(c)Xb + conj(d)Yb)`.
//!
//! Coefficient `coeffs[p][q]` multiplies `X^(k-p) Y^p Xb^(k-q) Yb^q`, and the
//! flattened index of `(p, q)` is `p * (k + 1) + q`.

use crate::error::{Error, Result};
use crate::hurwitz::{Generator, Mat2};
use crate::linalg::{IntMatrix, Matrix};
use crate::quadfield::{Field, QuadElem, QuadInt};
use num_bigint::BigInt;
use std::fmt;

/// Flattened index of the monomial / period `(p, q)`.
pub fn idx(k: usize, p: usize, q: usize) -> usize {
    p * (k + 1) + q
}

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::from(0);
    }
    let r = r.min(n - r);
    let mut acc = BigInt::from(1);
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// An element of `V_{k,k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyKK {
    pub field: Field,
    pub k: usize,
    pub coeffs: Vec<Vec<QuadElem>>,
}

impl PolyKK {
    pub fn zero(field: Field, k: usize) -> Self {
        PolyKK { field, k, coeffs: vec![vec![QuadElem::zero(field); k + 1]; k + 1] }
    }

    pub fn from_vector(field: Field, k: usize, v: &[QuadElem]) -> Self {
        assert_eq!(v.len(), (k + 1) * (k + 1), "vector length must be (k+1)^2");
        PolyKK { field, k, coeffs: v.chunks(k + 1).map(<[QuadElem]>::to_vec).collect() }
    }

    pub fn to_vector(&self) -> Vec<QuadElem> {
        self.coeffs.iter().flatten().cloned().collect()
    }

    /// `X^(k-p) Y^p Xb^(k-q) Yb^q`.
    pub fn monomial(field: Field, k: usize, p: usize, q: usize) -> Self {
        let mut poly = PolyKK::zero(field, k);
        poly.coeffs[p][q] = QuadElem::one(field);
        poly
    }

    /// `X^k Xb^k - Y^k Yb^k`; the zero polynomial when `k = 0`.
    pub fn coboundary(field: Field, k: usize) -> Self {
        let mut poly = PolyKK::zero(field, k);
        poly.coeffs[0][0] = QuadElem::one(field);
        poly.coeffs[k][k] = &poly.coeffs[k][k] - &QuadElem::one(field);
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(QuadElem::is_zero)
    }

    pub fn slash(&self, gamma: &Mat2) -> PolyKK {
        let m = slash_matrix(gamma, self.k).to_field();
        PolyKK::from_vector(self.field, self.k, &m.mul_vec(&self.to_vector()))
    }
}

/// `coeffs of (aX+bY)^(k-p) (cX+dY)^p` in the basis `X^(k-i) Y^i`, as column `p`.
pub(crate) fn one_variable_slash(gamma: &Mat2, k: usize) -> IntMatrix {
    let field = gamma.field();
    // (xX + yY)^n, coefficient of X^(n-u) Y^u
    let expand = |x: &QuadInt, y: &QuadInt, n: usize| -> Vec<QuadInt> {
        (0..=n)
            .map(|u| {
                let c = QuadInt::from_integer(field, binomial(n, u));
                &(&c * &x.pow((n - u) as u32)) * &y.pow(u as u32)
            })
            .collect()
    };
    let mut out = IntMatrix::zeros(field, k + 1, k + 1);
    for p in 0..=k {
        let first = expand(&gamma.a, &gamma.b, k - p);
        let second = expand(&gamma.c, &gamma.d, p);
        for (u, f) in first.iter().enumerate() {
            for (v, s) in second.iter().enumerate() {
                let i = u + v;
                let cur = out.get(i, p) + &(f * s);
                out.set(i, p, cur);
            }
        }
    }
    out
}

/// Matrix of `P -> P|gamma` on the flattened coefficient vector.
///
/// This is a right action: `slash_matrix(g1 * g2) = slash_matrix(g2) * slash_matrix(g1)`.
pub fn slash_matrix(gamma: &Mat2, k: usize) -> IntMatrix {
    let a = one_variable_slash(gamma, k);
    a.kron(&a.conj())
}

/// One letter of a group word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub inverse: bool,
}

impl Letter {
    pub fn matrix(&self, field: Field) -> Result<Mat2> {
        let m = self.generator.matrix(field)?;
        if self.inverse {
            m.inverse()
        } else {
            Ok(m)
        }
    }
}

/// A formal integer combination of products of generators, such as
/// `I + U + U^2` or `T + S*Tw^-1*S*Tw`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupWord {
    pub terms: Vec<(i64, Vec<Letter>)>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord { terms: vec![(1, Vec::new())] }
    }

    pub fn parse(text: &str) -> Result<Self> {
        WordParser::new(text).parse()
    }

    /// The group elements of each term, multiplied left to right.
    pub fn term_matrices(&self, field: Field) -> Result<Vec<(i64, Mat2)>> {
        self.terms
            .iter()
            .map(|(c, letters)| {
                let mut g = Mat2::identity(field);
                for l in letters {
                    g = g.mul(&l.matrix(field)?);
                }
                Ok((*c, g))
            })
            .collect()
    }

    /// `sum_terms coeff * slash_matrix(product)`.
    pub fn slash_matrix(&self, field: Field, k: usize) -> Result<IntMatrix> {
        let n = (k + 1) * (k + 1);
        let mut out = IntMatrix::zeros(field, n, n);
        for (c, g) in self.term_matrices(field)? {
            let s = slash_matrix(&g, k).scale(&QuadInt::new(field, c, 0));
            out.add_assign(&s);
        }
        Ok(out)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, letters)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if i > 0 { "+" } else { "" };
            f.write_str(sign)?;
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            if letters.is_empty() {
                f.write_str("I")?;
            }
            for (j, l) in letters.iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                f.write_str(l.generator.name())?;
                if l.inverse {
                    f.write_str("^-1")?;
                }
            }
        }
        Ok(())
    }
}

/// `P|word`, linear in `P`.
pub fn apply_group_word(poly: &PolyKK, word: &GroupWord) -> Result<PolyKK> {
    let m = word.slash_matrix(poly.field, poly.k)?.to_field();
    Ok(PolyKK::from_vector(poly.field, poly.k, &m.mul_vec(&poly.to_vector())))
}

struct WordParser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> WordParser<'a> {
    fn new(text: &'a str) -> Self {
        WordParser { text, chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 }
    }

    fn err(&self) -> Error {
        Error::Parse { what: "group word", input: self.text.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<GroupWord> {
        let mut terms = Vec::new();
        loop {
            let mut sign = 1i64;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    sign = -1;
                    self.pos += 1;
                }
                None if !terms.is_empty() => break,
                _ if terms.is_empty() => {}
                _ => return Err(self.err()),
            }
            let coef = self.number().unwrap_or(1);
            if self.peek() == Some('*') && coef != 1 {
                self.pos += 1;
            }
            let letters = self.product()?;
            terms.push((sign * coef as i64, letters));
            if self.peek().is_none() {
                break;
            }
        }
        Ok(GroupWord { terms })
    }

    fn number(&mut self) -> Option<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        self.chars[start..self.pos].iter().collect::<String>().parse().ok()
    }

    fn product(&mut self) -> Result<Vec<Letter>> {
        let mut letters = Vec::new();
        let mut any = false;
        loop {
            match self.peek() {
                Some('*') if any => self.pos += 1,
                Some('+') | Some('-') | Some(')') | None => break,
                _ => {}
            }
            let factor = self.factor()?;
            letters.extend(factor);
            any = true;
        }
        if !any {
            return Err(self.err());
        }
        Ok(letters)
    }

    fn atom(&mut self) -> Result<Vec<Letter>> {
        let c = self.peek().ok_or_else(|| self.err())?;
        self.pos += 1;
        let gen = match c {
            '(' => {
                let inner = self.product()?;
                if self.peek() != Some(')') {
                    return Err(self.err());
                }
                self.pos += 1;
                return Ok(inner);
            }
            'I' => return Ok(Vec::new()),
            'S' => Generator::S,
            'U' => Generator::U,
            'L' => Generator::L,
            'E' => Generator::E,
            'T' => {
                if self.peek() == Some('w') {
                    self.pos += 1;
                    Generator::Tw
                } else if self.chars[self.pos..].starts_with(&['_', 'w']) {
                    self.pos += 2;
                    Generator::Tw
                } else {
                    Generator::T
                }
            }
            _ => return Err(self.err()),
        };
        Ok(vec![Letter { generator: gen, inverse: false }])
    }

    fn factor(&mut self) -> Result<Vec<Letter>> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = self.number().ok_or_else(|| self.err())? as usize;
        let unit: Vec<Letter> = if negative {
            base.iter()
                .rev()
                .map(|l| Letter { generator: l.generator, inverse: !l.inverse })
                .collect()
        } else {
            base
        };
        Ok(std::iter::repeat_n(unit, e).flatten().collect())
    }
}

/// Slash matrix of the matrix `gamma` as a K-matrix, for callers that only
/// need field arithmetic.
pub fn slash_matrix_k(gamma: &Mat2, k: usize) -> Matrix<QuadElem> {
    slash_matrix(gamma, k).to_field()
}
