//! Hurwitz (nearest integer) continued fractions over the ring of integers,
//! their convergents, and the convergent matrices in `SL_2(O_K)`.

use crate::error::{Error, Result};
use crate::quadfield::{nearest_int, Field, QuadElem, QuadInt};
use std::fmt;

/// A 2x2 matrix `((a, b), (c, d))` over the ring of integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: QuadInt,
    pub b: QuadInt,
    pub c: QuadInt,
    pub d: QuadInt,
}

impl Mat2 {
    pub fn new(a: QuadInt, b: QuadInt, c: QuadInt, d: QuadInt) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(field: Field, e: [[(i64, i64); 2]; 2]) -> Self {
        let q = |(x, y): (i64, i64)| QuadInt::new(field, x, y);
        Mat2::new(q(e[0][0]), q(e[0][1]), q(e[1][0]), q(e[1][1]))
    }

    pub fn identity(field: Field) -> Self {
        Mat2::new(QuadInt::one(field), QuadInt::zero(field), QuadInt::zero(field), QuadInt::one(field))
    }

    /// `((1, beta), (0, 1))`.
    pub fn translation(beta: &QuadInt) -> Self {
        let f = beta.field();
        Mat2::new(QuadInt::one(f), beta.clone(), QuadInt::zero(f), QuadInt::one(f))
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn det(&self) -> QuadInt {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Result<Mat2> {
        if !self.det().is_one() {
            return Err(Error::NonUnitDeterminant);
        }
        Ok(Mat2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone()))
    }

    /// Mobius action on a projective point.
    pub fn act(&self, p: &Cusp) -> Cusp {
        let (x, y) = (&p.num, &p.den);
        let a = QuadElem::from(&self.a);
        let b = QuadElem::from(&self.b);
        let c = QuadElem::from(&self.c);
        let d = QuadElem::from(&self.d);
        Cusp::new(&(&a * x) + &(&b * y), &(&c * x) + &(&d * y))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}, {}), ({}, {}))", self.a, self.b, self.c, self.d)
    }
}

/// A point `(num : den)` of `P^1(K)`; infinity is `(1 : 0)`.
#[derive(Clone, Debug)]
pub struct Cusp {
    pub num: QuadElem,
    pub den: QuadElem,
}

impl Cusp {
    pub fn new(num: QuadElem, den: QuadElem) -> Self {
        assert!(!(num.is_zero() && den.is_zero()), "(0 : 0) is not a projective point");
        Cusp { num, den }
    }

    pub fn infinity(field: Field) -> Self {
        Cusp::new(QuadElem::one(field), QuadElem::zero(field))
    }

    pub fn zero(field: Field) -> Self {
        Cusp::new(QuadElem::zero(field), QuadElem::one(field))
    }

    pub fn finite(v: QuadElem) -> Self {
        let f = v.field();
        Cusp::new(v, QuadElem::one(f))
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }
}

impl PartialEq for Cusp {
    fn eq(&self, other: &Cusp) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

/// The named generators of `SL_2(O_K)` used in the period relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S,
    T,
    Tw,
    U,
    L,
    E,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::S, Generator::T, Generator::Tw, Generator::U, Generator::L, Generator::E];

    pub fn name(self) -> &'static str {
        match self {
            Generator::S => "S",
            Generator::T => "T",
            Generator::Tw => "T_w",
            Generator::U => "U",
            Generator::L => "L",
            Generator::E => "E",
        }
    }

    pub fn is_available(self, field: Field) -> bool {
        match self {
            Generator::L => matches!(field, Field::D1 | Field::D3),
            Generator::E => field == Field::D11,
            _ => true,
        }
    }

    pub fn matrix(self, field: Field) -> Result<Mat2> {
        if !self.is_available(field) {
            return Err(Error::UnavailableGenerator { generator: self.name(), d: field.d() });
        }
        let one = QuadInt::one(field);
        let zero = QuadInt::zero(field);
        let s = Mat2::from_ints(field, [[(0, 0), (-1, 0)], [(1, 0), (0, 0)]]);
        let t = Mat2::translation(&one);
        let tw = Mat2::translation(&field.omega());
        Ok(match self {
            Generator::S => s,
            Generator::T => t,
            Generator::Tw => tw,
            Generator::U => t.mul(&s),
            Generator::L => {
                let w = field.omega();
                match field {
                    // diag(i, -i)
                    Field::D1 => Mat2::new(w.clone(), zero.clone(), zero, -&w),
                    // diag(w^2, w)
                    _ => Mat2::new(&w * &w, zero.clone(), zero, w),
                }
            }
            // T_w^-1 S T_w S T
            Generator::E => tw.inverse()?.mul(&s).mul(&tw).mul(&s).mul(&t),
        })
    }
}

/// All generators available for `field`, in a fixed order.
pub fn generators(field: Field) -> Vec<(Generator, Mat2)> {
    Generator::ALL
        .into_iter()
        .filter(|g| g.is_available(field))
        .map(|g| (g, g.matrix(field).expect("available")))
        .collect()
}

/// A terminating Hurwitz continued fraction `[beta_0; beta_1, ..., beta_m]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CFExpansion {
    pub kappa: QuadElem,
    pub betas: Vec<QuadInt>,
    /// `(mu_n, nu_n)` for `n = -2, -1, 0, ..., m`.
    pub convergents: Vec<(QuadInt, QuadInt)>,
    /// `g_0, ..., g_m`.
    pub matrices: Vec<Mat2>,
}

impl CFExpansion {
    /// Index of the last partial quotient.
    pub fn m(&self) -> usize {
        self.betas.len() - 1
    }

    /// `(mu_n, nu_n)` for `n >= -2`.
    pub fn convergent(&self, n: isize) -> &(QuadInt, QuadInt) {
        &self.convergents[(n + 2) as usize]
    }
}

/// Expand `kappa` by nearest-integer rounding:
/// `beta_n = round(kappa_n)`, `kappa_{n+1} = 1 / (kappa_n - beta_n)`,
/// stopping when `kappa_n` is integral.
pub fn expand(kappa: &QuadElem) -> CFExpansion {
    let field = kappa.field();
    let mut betas = Vec::new();
    let mut current = kappa.clone();
    loop {
        let beta = nearest_int(&current);
        let rem = &current - &QuadElem::from(&beta);
        betas.push(beta);
        if rem.is_zero() {
            break;
        }
        current = rem.inv().expect("remainder is nonzero");
    }

    let mut convergents = vec![
        (QuadInt::zero(field), QuadInt::one(field)),
        (QuadInt::one(field), QuadInt::zero(field)),
    ];
    for beta in &betas {
        let len = convergents.len();
        let (mu1, nu1) = &convergents[len - 1];
        let (mu2, nu2) = &convergents[len - 2];
        let next = (&(beta * mu1) + mu2, &(beta * nu1) + nu2);
        convergents.push(next);
    }

    let mut matrices = vec![Mat2::translation(&betas[0])];
    for (n, beta) in betas.iter().enumerate().skip(1) {
        let sign = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
        let step = Mat2::new(
            QuadInt::zero(field),
            QuadInt::new(field, sign(n - 1), 0),
            QuadInt::new(field, sign(n), 0),
            beta.clone(),
        );
        let next = matrices[n - 1].mul(&step);
        matrices.push(next);
    }

    CFExpansion { kappa: kappa.clone(), betas, convergents, matrices }
}
