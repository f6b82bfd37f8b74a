use super::int::forward_owned;
use super::{Field, QuadInt};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

/// An element `x + y*w` of the field, with exact rational coordinates.
///
/// `BigRational` keeps both coordinates in lowest terms with a positive
/// denominator, so structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub(crate) field: Field,
    pub(crate) x: BigRational,
    pub(crate) y: BigRational,
}

impl QuadElem {
    pub fn new(field: Field, x: BigRational, y: BigRational) -> Self {
        QuadElem { field, x, y }
    }

    pub fn from_ints(field: Field, x: i64, y: i64) -> Self {
        QuadElem::new(field, rat(x), rat(y))
    }

    pub fn from_rational(field: Field, x: BigRational) -> Self {
        QuadElem { field, x, y: BigRational::zero() }
    }

    pub fn zero(field: Field) -> Self {
        QuadElem::from_ints(field, 0, 0)
    }

    pub fn one(field: Field) -> Self {
        QuadElem::from_ints(field, 1, 0)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn x(&self) -> &BigRational {
        &self.x
    }

    pub fn y(&self) -> &BigRational {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// The element as an algebraic integer, if both coordinates are integers.
    pub fn to_integer(&self) -> Option<QuadInt> {
        self.is_integral()
            .then(|| QuadInt::from_parts(self.field, self.x.to_integer(), self.y.to_integer()))
    }

    pub fn conj(&self) -> QuadElem {
        let t = rat(self.field.omega_trace());
        QuadElem { field: self.field, x: &self.x + &self.y * t, y: -&self.y }
    }

    /// `x^2 + t*x*y + m*y^2`.
    pub fn norm(&self) -> BigRational {
        let t = rat(self.field.omega_trace());
        let m = rat(self.field.omega_norm());
        &self.x * &self.x + &self.x * &self.y * t + &self.y * &self.y * m
    }

    pub fn inv(&self) -> Result<QuadElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(QuadElem { field: self.field, x: c.x / &n, y: c.y / n })
    }

    pub fn checked_div(&self, rhs: &QuadElem) -> Result<QuadElem> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> QuadElem {
        let mut result = QuadElem::one(self.field);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn powi(&self, exp: i64) -> Result<QuadElem> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            Ok(self.inv()?.pow((-exp) as u32))
        }
    }

    pub fn scale(&self, s: &BigRational) -> QuadElem {
        QuadElem { field: self.field, x: &self.x * s, y: &self.y * s }
    }
}

pub(crate) fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl From<&QuadInt> for QuadElem {
    fn from(v: &QuadInt) -> Self {
        QuadElem {
            field: v.field,
            x: BigRational::from_integer(v.a.clone()),
            y: BigRational::from_integer(v.b.clone()),
        }
    }
}

impl From<QuadInt> for QuadElem {
    fn from(v: QuadInt) -> Self {
        QuadElem {
            field: v.field,
            x: BigRational::from_integer(v.a),
            y: BigRational::from_integer(v.b),
        }
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::parse::write_rational_components(f, &self.x, &self.y)
    }
}

impl<'a> Add<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.field, rhs.field);
        QuadElem { field: self.field, x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
}

impl<'a> Sub<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.field, rhs.field);
        QuadElem { field: self.field, x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
}

impl<'a> Mul<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.field, rhs.field);
        if self.y.is_zero() && rhs.y.is_zero() {
            return QuadElem::from_rational(self.field, &self.x * &rhs.x);
        }
        let t = self.field.omega_trace();
        let m = self.field.omega_norm();
        let yy = &self.y * &rhs.y;
        QuadElem {
            field: self.field,
            x: &self.x * &rhs.x - &yy * rat(m),
            y: &self.x * &rhs.y + &self.y * &rhs.x + yy * rat(t),
        }
    }
}

/// Panics on a zero divisor; use [`QuadElem::checked_div`] to handle it.
impl<'a> Div<&'a QuadElem> for &'a QuadElem {
    type Output = QuadElem;
    fn div(self, rhs: &QuadElem) -> QuadElem {
        self.checked_div(rhs).expect("division by zero in K")
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { field: self.field, x: -&self.x, y: -&self.y }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem { field: self.field, x: -self.x, y: -self.y }
    }
}

impl AddAssign<&QuadElem> for QuadElem {
    fn add_assign(&mut self, rhs: &QuadElem) {
        self.x += &rhs.x;
        self.y += &rhs.y;
    }
}

impl SubAssign<&QuadElem> for QuadElem {
    fn sub_assign(&mut self, rhs: &QuadElem) {
        self.x -= &rhs.x;
        self.y -= &rhs.y;
    }
}

forward_owned!(QuadElem, Add, add);
forward_owned!(QuadElem, Sub, sub);
forward_owned!(QuadElem, Mul, mul);
forward_owned!(QuadElem, Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    #[test]
    fn arith_examples() {
        let f = Field::D1;
        let a = QuadElem::from_ints(f, 1, 1);
        let b = QuadElem::from_ints(f, 1, -1);
        assert_eq!(&a * &b, QuadElem::from_ints(f, 2, 0));
        let w = QuadElem::from_ints(Field::D3, 0, 1);
        assert_eq!(&w * &w, QuadElem::from_ints(Field::D3, -1, -1));
        let x = QuadElem::new(Field::D7, q(3, 4), q(-2, 5));
        assert_eq!(&x + &QuadElem::zero(Field::D7), x);
    }

    #[test]
    fn conj_examples() {
        assert_eq!(QuadElem::from_ints(Field::D3, 0, 1).conj(), QuadElem::from_ints(Field::D3, -1, -1));
        assert_eq!(QuadElem::from_ints(Field::D1, 0, 1).conj(), QuadElem::from_ints(Field::D1, 0, -1));
        let r = QuadElem::new(Field::D11, q(7, 3), q(0, 1));
        assert_eq!(r.conj(), r);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(QuadElem::from_ints(Field::D1, 1, 1).norm(), q(2, 1));
        assert_eq!(QuadElem::from_ints(Field::D11, 0, 1).norm(), q(3, 1));
        assert!(QuadElem::zero(Field::D2).norm().is_zero());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let f = Field::D2;
        let one = QuadElem::one(f);
        assert_eq!(one.checked_div(&QuadElem::zero(f)), Err(Error::DivisionByZero));
        let half = QuadElem::new(f, q(1, 2), q(0, 1));
        assert_eq!(one.checked_div(&half).unwrap(), QuadElem::from_ints(f, 2, 0));
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop::sample::select(Field::ALL.to_vec())
    }

    fn arb_elem(field: Field) -> impl Strategy<Value = QuadElem> {
        (-40i64..40, 1i64..12, -40i64..40, 1i64..12)
            .prop_map(move |(a, b, c, d)| QuadElem::new(field, q(a, b), q(c, d)))
    }

    fn arb_pair() -> impl Strategy<Value = (QuadElem, QuadElem)> {
        arb_field().prop_flat_map(|f| (arb_elem(f), arb_elem(f)))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative((a, b) in arb_pair()) {
            prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        }

        #[test]
        fn conj_is_ring_involution((a, b) in arb_pair()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(QuadElem::from_rational(a.field, a.norm()), &a * &a.conj());
        }

        #[test]
        fn division_inverts_multiplication((a, b) in arb_pair()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }
    }
}
