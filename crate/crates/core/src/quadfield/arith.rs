//! Euclidean structure of the ring of integers: rounding, gcd, associates,
//! prime factorization, residue systems and the divisor functions.

use super::{Field, QuadElem, QuadInt};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

/// Nearest rational integer, halves rounded up (`floor(x + 1/2)`).
fn round_rational(x: &BigRational) -> BigInt {
    (x + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// The algebraic integer nearest to `kappa` in the complex plane.
///
/// Ties are broken towards the smaller real part and then the smaller
/// imaginary part. The search box of 5x5 lattice points around the
/// coordinate-wise rounding contains every point at distance below 1.
pub fn nearest_int(kappa: &QuadElem) -> QuadInt {
    let field = kappa.field();
    let a0 = round_rational(kappa.x());
    let b0 = round_rational(kappa.y());
    let mut best: Option<(BigRational, QuadInt)> = None;
    for db in -2i64..=2 {
        for da in -2i64..=2 {
            let cand = QuadInt::from_parts(field, &a0 + da, &b0 + db);
            let dist = (kappa - &QuadElem::from(&cand)).norm();
            let better = match &best {
                None => true,
                Some((bd, bc)) => match dist.cmp(bd) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        (cand.re2(), cand.b()).cmp(&(bc.re2(), bc.b())) == Ordering::Less
                    }
                },
            };
            if better {
                best = Some((dist, cand));
            }
        }
    }
    best.expect("candidate set is nonempty").1
}

/// Whether `v` has complex argument in `[0, 2*pi/|units|)`.
fn in_canonical_sector(v: &QuadInt) -> bool {
    let field = v.field();
    let re2 = v.re2();
    match field.units().len() {
        2 => v.b().is_positive() || (v.b().is_zero() && re2.is_positive()),
        4 => re2.is_positive() && !v.b().is_negative(),
        6 => {
            // arg < pi/3  <=>  Im < sqrt(3) Re, compared on squares with Re > 0
            let im2_sq = v.b() * v.b() * field.im_scale();
            !v.b().is_negative() && re2.is_positive() && &re2 * &re2 * 3 > im2_sq
        }
        _ => unreachable!("unit groups have order 2, 4 or 6"),
    }
}

/// The associate of `a` whose argument lies in the first unit sector.
pub fn canonical_associate(a: &QuadInt) -> Result<QuadInt> {
    if a.is_zero() {
        return Err(Error::ZeroArgument("canonical_associate"));
    }
    Ok(a.field()
        .units()
        .iter()
        .map(|u| u * a)
        .find(in_canonical_sector)
        .expect("exactly one associate lies in the canonical sector"))
}

/// Greatest common divisor by nearest-integer division, canonicalized.
pub fn euclid_gcd(a: &QuadInt, b: &QuadInt) -> Result<QuadInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroArgument("euclid_gcd"));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let q = nearest_int(&(&QuadElem::from(&x) / &QuadElem::from(&y)));
        let r = &x - &(&q * &y);
        x = y;
        y = r;
    }
    canonical_associate(&x)
}

fn rational_prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut primes = Vec::new();
    let mut rest = n.abs();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        if (&rest % &p).is_zero() {
            primes.push(p.clone());
            while (&rest % &p).is_zero() {
                rest /= &p;
            }
        }
        p += 1;
    }
    if rest > BigInt::one() {
        primes.push(rest);
    }
    primes
}

/// Canonical prime elements lying over the rational prime `p`.
fn primes_over(field: Field, p: &BigInt) -> Vec<QuadInt> {
    // N(a + bw) = p  <=>  (2a + tb)^2 + s*b^2 = 4p  with s = 4m - t^2
    let t = field.omega_trace();
    let s = field.im_scale();
    let four_p: BigInt = p * 4;
    let b_max = (&four_p / s).sqrt();
    let mut found: Vec<QuadInt> = Vec::new();
    let mut b = -b_max.clone();
    while b <= b_max {
        let r = &four_p - &b * &b * s;
        if !r.is_negative() {
            let root = r.sqrt();
            if &root * &root == r {
                for sgn in [1i64, -1] {
                    let twice_a = &root * sgn - &b * t;
                    if twice_a.is_even() {
                        let cand = QuadInt::from_parts(field, twice_a / 2, b.clone());
                        let c = canonical_associate(&cand).expect("nonzero");
                        if !found.contains(&c) {
                            found.push(c);
                        }
                    }
                }
            }
        }
        b += 1;
    }
    if found.is_empty() {
        // inert
        found.push(QuadInt::from_integer(field, p.clone()));
    }
    found.sort_by(|x, y| x.cmp_norm_re_im(y));
    found
}

/// Prime factorization of `n` as canonical primes with exponents, sorted by
/// (norm, real part, imaginary part). Units factor as the empty product.
pub fn factor(n: &QuadInt) -> Result<Vec<(QuadInt, u32)>> {
    if n.is_zero() {
        return Err(Error::ZeroArgument("factor"));
    }
    let field = n.field();
    let mut out = Vec::new();
    let mut rest = n.clone();
    for p in rational_prime_factors(&n.norm()) {
        for pi in primes_over(field, &p) {
            let mut e = 0u32;
            while let Some(q) = rest.exact_div(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((pi, e));
            }
        }
    }
    debug_assert!(rest.is_unit());
    out.sort_by(|x, y| x.0.cmp_norm_re_im(&y.0));
    Ok(out)
}

/// One canonical generator per ideal divisor of `(n)`, sorted by
/// (norm, real part, imaginary part).
pub fn divisors(n: &QuadInt) -> Result<Vec<QuadInt>> {
    let field = n.field();
    let factors = factor(n)?;
    let mut divs = vec![QuadInt::one(field)];
    for (pi, e) in &factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = &acc * pi;
                next.push(acc.clone());
            }
        }
        divs = next;
    }
    let mut divs: Vec<QuadInt> =
        divs.iter().map(|d| canonical_associate(d).expect("nonzero")).collect();
    divs.sort_by(|x, y| x.cmp_norm_re_im(y));
    Ok(divs)
}

/// Hermite normal form of the lattice `d * O_K` in the basis `{1, w}`:
/// it contains `A` and `B + C*w`, with `A * C = N(d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residues {
    pub modulus: QuadInt,
    pub a_extent: BigInt,
    pub offset: BigInt,
    pub c_extent: BigInt,
}

impl Residues {
    pub fn new(d: &QuadInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroArgument("residues"));
        }
        let field = d.field();
        let (a, b) = (d.a(), d.b());
        let m = field.omega_norm();
        let t = field.omega_trace();
        // d*1 = (a, b), d*w = (-b m, a + b t)
        let y2 = a + b * t;
        let eg = b.extended_gcd(&y2);
        let g = eg.gcd.abs();
        let sign = if eg.gcd.is_negative() { -1 } else { 1 };
        let offset: BigInt = (&eg.x * a - &eg.y * b * m) * sign;
        let a_extent = d.norm() / &g;
        let offset = offset.mod_floor(&a_extent);
        Ok(Residues { modulus: d.clone(), a_extent, offset, c_extent: g })
    }

    pub fn count(&self) -> BigInt {
        &self.a_extent * &self.c_extent
    }

    /// All representatives `x + y*w`, `0 <= x < A`, `0 <= y < C`.
    pub fn all(&self) -> Vec<QuadInt> {
        let field = self.modulus.field();
        let a_ext = self.a_extent.to_i64().expect("residue extent fits in i64");
        let c_ext = self.c_extent.to_i64().expect("residue extent fits in i64");
        let mut out = Vec::with_capacity((a_ext * c_ext) as usize);
        for y in 0..c_ext {
            for x in 0..a_ext {
                out.push(QuadInt::new(field, x, y));
            }
        }
        out
    }

    /// Reduce `v` to its representative.
    pub fn reduce(&self, v: &QuadInt) -> QuadInt {
        let (qy, y) = v.b().div_mod_floor(&self.c_extent);
        let x = (v.a() - &qy * &self.offset).mod_floor(&self.a_extent);
        QuadInt::from_parts(v.field(), x, y)
    }
}

/// A complete residue system modulo `d`, optionally restricted to the classes
/// coprime to `d`.
pub fn residues(d: &QuadInt, coprime_only: bool) -> Result<Vec<QuadInt>> {
    let all = Residues::new(d)?.all();
    if !coprime_only {
        return Ok(all);
    }
    // b is a unit mod d iff no prime factor of d divides it
    let primes: Vec<Residues> =
        factor(d)?.iter().map(|(pi, _)| Residues::new(pi)).collect::<Result<_>>()?;
    Ok(all
        .into_iter()
        .filter(|b| primes.iter().all(|r| !r.reduce(b).is_zero()))
        .collect())
}

/// Order of `(O_K / n)^x`, by counting coprime residues.
pub fn phi_tilde(n: &QuadInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::ZeroArgument("phi_tilde"));
    }
    Ok(BigInt::from(residues(n, true)?.len()))
}

/// Order of `(O_K / n)^x` from the factorization,
/// `prod (N(pi)^e - N(pi)^(e-1))`.
pub fn phi_tilde_multiplicative(n: &QuadInt) -> Result<BigInt> {
    if n.is_zero() {
        return Err(Error::ZeroArgument("phi_tilde"));
    }
    Ok(factor(n)?
        .iter()
        .map(|(pi, e)| {
            let np = pi.norm();
            num_traits::pow(np.clone(), *e as usize) - num_traits::pow(np, *e as usize - 1)
        })
        .product())
}

/// `sum_{d | n} |d|^exponent` for even `exponent`.
pub fn sigma_tilde(exponent: u32, n: &QuadInt) -> Result<BigInt> {
    if !exponent.is_multiple_of(2) {
        return Err(Error::OddExponent(exponent));
    }
    if n.is_zero() {
        return Err(Error::ZeroArgument("sigma_tilde"));
    }
    Ok(divisors(n)?
        .iter()
        .map(|d| num_traits::pow(d.norm(), (exponent / 2) as usize))
        .sum())
}

/// All nonzero elements with `0 < N(x) <= bound`, ordered by norm, real
/// part, then `b`.
pub fn elements_up_to(field: Field, bound: u64) -> Vec<QuadInt> {
    let t = field.omega_trace();
    let s = field.im_scale();
    // N = (a + t b / 2)^2 + s b^2 / 4
    let b_max = ((4 * bound) as f64 / s as f64).sqrt() as i64 + 1;
    let r = (bound as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for b in -b_max..=b_max {
        let centre = -(t * b).div_euclid(2);
        for a in centre - r - 1..=centre + r + 1 {
            let x = QuadInt::new(field, a, b);
            let n = x.norm();
            if !n.is_zero() && n <= BigInt::from(bound) {
                out.push(x);
            }
        }
    }
    out.sort_by(|x, y| x.cmp_norm_re_im(y));
    out
}

/// Canonical generators of the nonzero ideals of norm at most `bound`.
pub fn canonical_up_to(field: Field, bound: u64) -> Vec<QuadInt> {
    elements_up_to(field, bound)
        .into_iter()
        .filter(|x| canonical_associate(x).map(|c| &c == x).unwrap_or(false))
        .collect()
}

impl QuadElem {
    pub fn nearest_int(&self) -> QuadInt {
        nearest_int(self)
    }
}
