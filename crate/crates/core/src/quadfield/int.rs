use super::Field;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// An algebraic integer `a + b*w` of the ring of integers of `field`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub(crate) field: Field,
    pub(crate) a: BigInt,
    pub(crate) b: BigInt,
}

impl QuadInt {
    pub fn new(field: Field, a: i64, b: i64) -> Self {
        QuadInt { field, a: BigInt::from(a), b: BigInt::from(b) }
    }

    pub fn from_parts(field: Field, a: BigInt, b: BigInt) -> Self {
        QuadInt { field, a, b }
    }

    pub fn from_integer(field: Field, a: BigInt) -> Self {
        QuadInt { field, a, b: BigInt::zero() }
    }

    pub fn zero(field: Field) -> Self {
        QuadInt::new(field, 0, 0)
    }

    pub fn one(field: Field) -> Self {
        QuadInt::new(field, 1, 0)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `a^2 + t*a*b + m*b^2`.
    pub fn norm(&self) -> BigInt {
        let t = self.field.omega_trace();
        let m = self.field.omega_norm();
        &self.a * &self.a + &self.a * &self.b * t + &self.b * &self.b * m
    }

    pub fn conj(&self) -> QuadInt {
        let t = self.field.omega_trace();
        QuadInt { field: self.field, a: &self.a + &self.b * t, b: -&self.b }
    }

    /// Twice the real part in C, `2a + t*b`, an integer.
    pub fn re2(&self) -> BigInt {
        BigInt::from(2) * &self.a + &self.b * self.field.omega_trace()
    }

    pub fn pow(&self, exp: u32) -> QuadInt {
        let mut result = QuadInt::one(self.field);
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

    /// `self / rhs` when the quotient is integral.
    pub fn exact_div(&self, rhs: &QuadInt) -> Option<QuadInt> {
        if rhs.is_zero() {
            return None;
        }
        let n = rhs.norm();
        let num = self * &rhs.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        if ra.is_zero() && rb.is_zero() {
            Some(QuadInt { field: self.field, a: qa, b: qb })
        } else {
            None
        }
    }

    pub fn divides(&self, other: &QuadInt) -> bool {
        other.exact_div(self).is_some()
    }

    /// Order used to list divisors: norm, then real part, then `b`.
    pub fn cmp_norm_re_im(&self, other: &QuadInt) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| self.re2().cmp(&other.re2()))
            .then_with(|| self.b.cmp(&other.b))
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::parse::write_components(f, &self.a.to_string(), &self.b)
    }
}

fn check_same(lhs: &QuadInt, rhs: &QuadInt) {
    debug_assert_eq!(lhs.field, rhs.field, "mixing elements of different fields");
}

impl<'a> Add<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: &QuadInt) -> QuadInt {
        check_same(self, rhs);
        QuadInt { field: self.field, a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: &QuadInt) -> QuadInt {
        check_same(self, rhs);
        QuadInt { field: self.field, a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a QuadInt> for &'a QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: &QuadInt) -> QuadInt {
        check_same(self, rhs);
        let t = self.field.omega_trace();
        let m = self.field.omega_norm();
        let bb = &self.b * &rhs.b;
        QuadInt {
            field: self.field,
            a: &self.a * &rhs.a - &bb * m,
            b: &self.a * &rhs.b + &self.b * &rhs.a + bb * t,
        }
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { field: self.field, a: -&self.a, b: -&self.b }
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt { field: self.field, a: -self.a, b: -self.b }
    }
}

impl AddAssign<&QuadInt> for QuadInt {
    fn add_assign(&mut self, rhs: &QuadInt) {
        check_same(self, rhs);
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

macro_rules! forward_owned {
    ($t:ty, $tr:ident, $m:ident) => {
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(QuadInt, Add, add);
forward_owned!(QuadInt, Sub, sub);
forward_owned!(QuadInt, Mul, mul);
