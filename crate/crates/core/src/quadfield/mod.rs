//! Exact arithmetic in the five Euclidean imaginary quadratic fields
//! `K = Q(sqrt(-D))`, `D in {1, 2, 3, 7, 11}`.
//!
//! Elements are stored in the basis `{1, w}` where `w` is the standard
//! generator of the ring of integers:
//!
//! | D  | w                | trace t | norm m |
//! |----|------------------|---------|--------|
//! | 1  | i                | 0       | 1      |
//! | 2  | i*sqrt(2)        | 0       | 2      |
//! | 3  | (-1+sqrt(-3))/2  | -1      | 1      |
//! | 7  | (1+sqrt(-7))/2   | 1       | 2      |
//! | 11 | (1+sqrt(-11))/2  | 1       | 3      |
//!
//! Products are reduced with `w^2 = t*w - m`.

mod arith;
mod elem;
mod int;
mod parse;

pub use arith::{
    canonical_associate, canonical_up_to, divisors, elements_up_to, euclid_gcd, factor,
    nearest_int, phi_tilde, phi_tilde_multiplicative, residues, sigma_tilde, Residues,
};
pub use elem::QuadElem;
pub use int::QuadInt;
pub use parse::{parse_elem, parse_kappa};

use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;

/// One of the five Euclidean imaginary quadratic fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Field {
    D1,
    D2,
    D3,
    D7,
    D11,
}

impl Field {
    pub const ALL: [Field; 5] = [Field::D1, Field::D2, Field::D3, Field::D7, Field::D11];

    pub fn from_d(d: i64) -> Result<Field> {
        match d {
            1 => Ok(Field::D1),
            2 => Ok(Field::D2),
            3 => Ok(Field::D3),
            7 => Ok(Field::D7),
            11 => Ok(Field::D11),
            other => Err(Error::UnsupportedField(other)),
        }
    }

    pub fn d(self) -> u32 {
        match self {
            Field::D1 => 1,
            Field::D2 => 2,
            Field::D3 => 3,
            Field::D7 => 7,
            Field::D11 => 11,
        }
    }

    /// Trace `w + conj(w)`.
    pub fn omega_trace(self) -> i64 {
        match self {
            Field::D1 | Field::D2 => 0,
            Field::D3 => -1,
            Field::D7 | Field::D11 => 1,
        }
    }

    /// Norm `w * conj(w)`.
    pub fn omega_norm(self) -> i64 {
        match self {
            Field::D1 | Field::D3 => 1,
            Field::D2 | Field::D7 => 2,
            Field::D11 => 3,
        }
    }

    /// `4m - t^2`; the imaginary part of `w` is `sqrt(4m - t^2) / 2`.
    pub(crate) fn im_scale(self) -> i64 {
        let t = self.omega_trace();
        4 * self.omega_norm() - t * t
    }

    pub fn params(self) -> FieldParams {
        FieldParams::new(self)
    }

    pub fn omega(self) -> QuadInt {
        QuadInt::new(self, 0, 1)
    }

    pub fn one(self) -> QuadInt {
        QuadInt::one(self)
    }

    /// Unit group of the ring of integers, ordered by complex argument starting at 1.
    pub fn units(self) -> Vec<QuadInt> {
        let q = |a: i64, b: i64| QuadInt::new(self, a, b);
        match self {
            Field::D1 => vec![q(1, 0), q(0, 1), q(-1, 0), q(0, -1)],
            // w = e^{2 pi i/3}; 1 + w = e^{i pi/3}
            Field::D3 => vec![q(1, 0), q(1, 1), q(0, 1), q(-1, 0), q(-1, -1), q(0, -1)],
            _ => vec![q(1, 0), q(-1, 0)],
        }
    }

    /// `sqrt(-D)` as an algebraic integer.
    pub fn delta(self) -> QuadInt {
        match self {
            Field::D1 | Field::D2 => QuadInt::new(self, 0, 1),
            Field::D3 => QuadInt::new(self, 1, 2),
            Field::D7 | Field::D11 => QuadInt::new(self, -1, 2),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(sqrt(-{}))", self.d())
    }
}

/// The constants attached to a field, gathered in one value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldParams {
    pub field: Field,
    pub d_code: u32,
    pub omega_trace: BigInt,
    pub omega_norm: BigInt,
    pub delta: QuadInt,
    pub units: Vec<QuadInt>,
}

impl FieldParams {
    pub fn new(field: Field) -> Self {
        FieldParams {
            field,
            d_code: field.d(),
            omega_trace: BigInt::from(field.omega_trace()),
            omega_norm: BigInt::from(field.omega_norm()),
            delta: field.delta(),
            units: field.units(),
        }
    }
}
