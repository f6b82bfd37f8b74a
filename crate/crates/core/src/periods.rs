//! Period coordinates.
//!
//! A period vector holds coordinates in the formal basis `r_{i,j}` of base
//! periods, flattened with the same `(p, q)` index as `V_{k,k}`. The
//! matrices here express periods along translated geodesics, at cusps, and
//! the `c <-> r` change of basis, all exactly.

use crate::error::{Error, Result};
use crate::hurwitz::{expand, Mat2};
use crate::linalg::{IntMatrix, KMatrix};
use crate::polyspace::{binomial, idx, one_variable_slash, slash_matrix, PolyKK};
use crate::quadfield::{Field, QuadElem, QuadInt};

#[derive(Clone, Debug, PartialEq)]
pub struct PeriodVector {
    pub field: Field,
    pub k: usize,
    pub entries: Vec<QuadElem>,
}

impl PeriodVector {
    pub fn new(field: Field, k: usize, entries: Vec<QuadElem>) -> Self {
        assert_eq!(entries.len(), (k + 1) * (k + 1), "period vector length must be (k+1)^2");
        PeriodVector { field, k, entries }
    }

    pub fn basis(field: Field, k: usize, p: usize, q: usize) -> Self {
        let mut entries = vec![QuadElem::zero(field); (k + 1) * (k + 1)];
        entries[idx(k, p, q)] = QuadElem::one(field);
        PeriodVector { field, k, entries }
    }
}

/// One-variable factor of the transport matrix:
/// `E[p][i] = (-1)^(p-i) sum_u C(p,u) C(k-p,i-u) a^u b^(p-u) c^(i-u) d^(k-p-i+u)`.
pub(crate) fn transport_factor(g: &Mat2, k: usize) -> IntMatrix {
    let field = g.field();
    let powers = |x: &QuadInt| -> Vec<QuadInt> {
        let mut out = vec![QuadInt::one(field)];
        for e in 1..=k {
            out.push(&out[e - 1] * x);
        }
        out
    };
    let (pa, pb, pc, pd) = (powers(&g.a), powers(&g.b), powers(&g.c), powers(&g.d));
    IntMatrix::from_fn(field, k + 1, k + 1, |p, i| {
        let mut acc = QuadInt::zero(field);
        for u in 0..=p.min(i) {
            if i - u > k - p {
                continue;
            }
            let c = QuadInt::from_integer(field, binomial(p, u) * binomial(k - p, i - u));
            let term = &(&(&(&c * &pa[u]) * &pb[p - u]) * &pc[i - u]) * &pd[(k - p) - (i - u)];
            acc += &term;
        }
        if (p + i) % 2 == 1 {
            -acc
        } else {
            acc
        }
    })
}

fn check_sl2(g: &Mat2) -> Result<()> {
    if g.det().is_one() {
        Ok(())
    } else {
        Err(Error::NonUnitDeterminant)
    }
}

/// `T(g)` with `s_{p,q}(g) = sum_{i,j} T(g)[(p,q),(i,j)] r_{i,j}`, the periods
/// along the geodesic from `g(0)` to `g(oo)` in terms of base periods.
pub fn transport_matrix(g: &Mat2, k: usize) -> Result<IntMatrix> {
    check_sl2(g)?;
    let e = transport_factor(g, k);
    Ok(e.kron(&e.conj()))
}

/// Diagonal `C(k,p) C(k,q)`.
fn binomial_diagonal(field: Field, k: usize) -> Vec<QuadElem> {
    let mut out = Vec::with_capacity((k + 1) * (k + 1));
    for p in 0..=k {
        for q in 0..=k {
            out.push(QuadElem::from(QuadInt::from_integer(field, binomial(k, p) * binomial(k, q))));
        }
    }
    out
}

/// The transport matrix computed through the slash action over `K`:
/// `diag(C)^-1 * slash(g^-1) * diag(C)`, with `C = C(k,p) C(k,q)`.
pub fn transport_matrix_via_slash(g: &Mat2, k: usize) -> Result<KMatrix> {
    check_sl2(g)?;
    let field = g.field();
    let bin = binomial_diagonal(field, k);
    let s = slash_matrix(&g.inverse()?, k).to_field();
    Ok(KMatrix::from_fn(field, s.rows(), s.cols(), |r, c| {
        &(s.get(r, c) * &bin[c]) / &bin[r]
    }))
}

/// `M(kappa) = sum_n T(g_n)` over the continued fraction of `kappa`, so
/// `r_{p,q}(kappa) = [M(kappa) r]_{(p,q)}`.
pub fn cusp_matrix(kappa: &QuadElem, k: usize) -> IntMatrix {
    let field = kappa.field();
    let n = (k + 1) * (k + 1);
    let mut out = IntMatrix::zeros(field, n, n);
    for g in expand(kappa).matrices {
        out.add_assign(&transport_matrix(&g, k).expect("convergent matrices lie in SL_2"));
    }
    out
}

/// The one-variable factors `E(g_n)` of the cusp matrix; `M(kappa)` is
/// `sum_n E_n (x) conj(E_n)`.
pub(crate) fn cusp_factors(kappa: &QuadElem, k: usize) -> Vec<IntMatrix> {
    expand(kappa).matrices.iter().map(|g| transport_factor(g, k)).collect()
}

/// `M(kappa)` computed over `K` through the slash action, one Kronecker
/// factor per convergent. Factors that happen to be integral are summed over
/// `O_K`, which is much cheaper than rational arithmetic; the rest stay in `K`.
pub fn cusp_matrix_via_slash(kappa: &QuadElem, k: usize) -> Result<KMatrix> {
    let field = kappa.field();
    let n = (k + 1) * (k + 1);
    let mut integral = IntMatrix::zeros(field, n, n);
    let mut rest = KMatrix::zeros(field, n, n);
    for g in expand(kappa).matrices {
        let f = transport_factor_via_slash(&g, k)?;
        match f.to_integral() {
            Some(fi) => integral.add_assign(&fi.kron(&fi.conj())),
            None => rest.add_assign(&f.kron(&f.conj())),
        }
    }
    Ok(integral.to_field().add(&rest))
}

/// One-variable factor of [`transport_matrix_via_slash`].
pub(crate) fn transport_factor_via_slash(g: &Mat2, k: usize) -> Result<KMatrix> {
    check_sl2(g)?;
    let field = g.field();
    let s = one_variable_slash(&g.inverse()?, k).to_field();
    Ok(KMatrix::from_fn(field, k + 1, k + 1, |r, c| {
        let scale = QuadElem::from_rational(
            field,
            num_rational::BigRational::new(binomial(k, c), binomial(k, r)),
        );
        s.get(r, c) * &scale
    }))
}

/// One-variable factor of [`r_to_c`].
pub(crate) fn change_of_basis_factor(kappa: &QuadElem, k: usize) -> KMatrix {
    let field = kappa.field();
    KMatrix::from_fn(field, k + 1, k + 1, |p, i| {
        if i > p {
            return QuadElem::zero(field);
        }
        let c = QuadElem::from(QuadInt::from_integer(field, binomial(k - i, p - i)));
        &c * &kappa.pow((p - i) as u32)
    })
}

fn change_of_basis(kappa: &QuadElem, k: usize) -> KMatrix {
    let one = change_of_basis_factor(kappa, k);
    one.kron(&one.conj())
}

/// `c_{p,q}(kappa) = sum_{i<=p, j<=q} C(k-i,p-i) C(k-j,q-j) kappa^(p-i) conj(kappa)^(q-j) r_{i,j}(kappa)`.
pub fn r_to_c(kappa: &QuadElem, k: usize) -> KMatrix {
    change_of_basis(kappa, k)
}

/// Inverse of [`r_to_c`]: the same expansion at `-kappa`.
pub fn c_to_r(kappa: &QuadElem, k: usize) -> KMatrix {
    change_of_basis(&-kappa, k)
}

/// `coeffs[p][q] = C(k,p) C(k,q) v[(p,q)]`.
pub fn period_to_monomial(v: &PeriodVector) -> PolyKK {
    let bin = binomial_diagonal(v.field, v.k);
    let entries: Vec<QuadElem> = v.entries.iter().zip(&bin).map(|(x, c)| x * c).collect();
    PolyKK::from_vector(v.field, v.k, &entries)
}

pub fn monomial_to_period(poly: &PolyKK) -> PeriodVector {
    let bin = binomial_diagonal(poly.field, poly.k);
    let entries = poly.to_vector().iter().zip(&bin).map(|(x, c)| x / c).collect();
    PeriodVector::new(poly.field, poly.k, entries)
}

/// `diag(C(k,p) C(k,q))` as a matrix, mapping period to monomial coordinates.
pub fn period_to_monomial_matrix(field: Field, k: usize) -> KMatrix {
    let bin = binomial_diagonal(field, k);
    KMatrix::from_fn(field, bin.len(), bin.len(), |r, c| {
        if r == c {
            bin[r].clone()
        } else {
            QuadElem::zero(field)
        }
    })
}

#[cfg(test)]
fn translation_entry(field: Field, beta: &QuadInt, p: usize, q: usize, i: usize, j: usize) -> QuadInt {
    if i > p || j > q {
        return QuadInt::zero(field);
    }
    let c = QuadInt::from_integer(field, binomial(p, i) * binomial(q, j));
    let v = &(&c * &beta.pow((p - i) as u32)) * &beta.conj().pow((q - j) as u32);
    if (p + q + i + j) % 2 == 1 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::generators;
    use crate::quadfield::residues;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn half(field: Field) -> QuadElem {
        QuadElem::new(
            field,
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        )
    }

    #[test]
    fn identity_and_weight_zero() {
        for field in Field::ALL {
            for k in 0..=3 {
                assert!(transport_matrix(&Mat2::identity(field), k).unwrap().is_identity());
            }
            for (_, g) in generators(field) {
                let t = transport_matrix(&g, 0).unwrap();
                assert!(t.is_identity());
            }
        }
    }

    #[test]
    fn rejects_non_unit_determinant() {
        let f = Field::D1;
        let g = Mat2::from_ints(f, [[(2, 0), (0, 0)], [(0, 0), (1, 0)]]);
        assert!(matches!(transport_matrix(&g, 2), Err(Error::NonUnitDeterminant)));
    }

    #[test]
    fn translation_formula() {
        for field in Field::ALL {
            let beta = QuadInt::new(field, 2, -1);
            let k = 3;
            let t = transport_matrix(&Mat2::translation(&beta), k).unwrap();
            for p in 0..=k {
                for q in 0..=k {
                    for i in 0..=k {
                        for j in 0..=k {
                            assert_eq!(
                                t.get(idx(k, p, q), idx(k, i, j)),
                                &translation_entry(field, &beta, p, q, i, j)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generic_formula_matches_slash_route() {
        for field in Field::ALL {
            let gens = generators(field);
            for k in 0..=3 {
                for (_, g1) in &gens {
                    for (_, g2) in &gens {
                        let g = g1.mul(g2);
                        let direct = transport_matrix(&g, k).unwrap().to_field();
                        assert_eq!(direct, transport_matrix_via_slash(&g, k).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn cusp_examples() {
        for field in Field::ALL {
            for k in 0..=3 {
                assert!(cusp_matrix(&QuadElem::zero(field), k).is_identity());
                let beta = QuadInt::new(field, -1, 2);
                assert_eq!(
                    cusp_matrix(&QuadElem::from(&beta), k),
                    transport_matrix(&Mat2::translation(&beta), k).unwrap()
                );
            }
        }
        // (1+i)/2 has two convergent matrices
        let f = Field::D1;
        let kappa = half(f);
        let cf = expand(&kappa);
        let expected = transport_matrix(&cf.matrices[0], 2)
            .unwrap()
            .add(&transport_matrix(&cf.matrices[1], 2).unwrap());
        assert_eq!(cusp_matrix(&kappa, 2), expected);
        assert_eq!(cusp_matrix(&kappa, 0).get(0, 0), &QuadInt::new(f, 2, 0));
    }

    #[test]
    fn cusp_factor_sum_matches() {
        let field = Field::D7;
        let d = QuadInt::new(field, 3, 1);
        for b in residues(&d, true).unwrap() {
            let kappa = &QuadElem::from(&b) / &QuadElem::from(&d);
            let k = 2;
            let mut sum = IntMatrix::zeros(field, 9, 9);
            for e in cusp_factors(&kappa, k) {
                sum.add_assign(&e.kron(&e.conj()));
            }
            assert_eq!(sum, cusp_matrix(&kappa, k));
            assert_eq!(sum.to_field(), cusp_matrix_via_slash(&kappa, k).unwrap());
            let mut via = KMatrix::zeros(field, 9, 9);
            for g in expand(&kappa).matrices {
                let e = transport_factor_via_slash(&g, k).unwrap();
                via.add_assign(&e.kron(&e.conj()));
            }
            assert_eq!(via, sum.to_field());
        }
    }

    #[test]
    fn change_of_basis_examples() {
        let f = Field::D1;
        for k in 0..=3 {
            assert!(r_to_c(&QuadElem::zero(f), k).is_identity());
            assert!(c_to_r(&QuadElem::zero(f), k).is_identity());
        }
        let one = QuadElem::one(f);
        assert_eq!(r_to_c(&one, 1).get(idx(1, 1, 0), idx(1, 0, 0)), &one);
        for field in Field::ALL {
            let kappa = &half(field) + &QuadElem::from_ints(field, 2, -1);
            for k in 0..=3 {
                assert!(r_to_c(&kappa, k).mul(&c_to_r(&kappa, k)).is_identity());
                assert!(c_to_r(&kappa, k).mul(&r_to_c(&kappa, k)).is_identity());
            }
        }
    }

    #[test]
    fn period_monomial_scaling() {
        let f = Field::D3;
        let m = period_to_monomial(&PeriodVector::basis(f, 1, 0, 0));
        assert_eq!(m, PolyKK::monomial(f, 1, 0, 0));
        let m = period_to_monomial(&PeriodVector::basis(f, 2, 1, 1));
        assert_eq!(m.coeffs[1][1], QuadElem::from_ints(f, 4, 0));
        let v = PeriodVector::new(f, 1, (0..4).map(|i| QuadElem::from_ints(f, i, 1 - i)).collect());
        assert_eq!(monomial_to_period(&period_to_monomial(&v)), v);
    }

    mod props {
        use super::*;
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn change_of_basis_round_trip(
                field in prop::sample::select(Field::ALL.to_vec()),
                a in -9i64..9,
                b in -9i64..9,
                c in 1i64..9,
                k in 0usize..4,
            ) {
                let kappa = QuadElem::new(
                    field,
                    BigRational::new(BigInt::from(a), BigInt::from(c)),
                    BigRational::new(BigInt::from(b), BigInt::from(c)),
                );
                prop_assert!(r_to_c(&kappa, k).mul(&c_to_r(&kappa, k)).is_identity());
            }

            #[test]
            fn cusp_routes_agree(
                field in prop::sample::select(Field::ALL.to_vec()),
                a in -20i64..20,
                b in -20i64..20,
                c in 1i64..12,
                k in 0usize..4,
            ) {
                let kappa = QuadElem::new(
                    field,
                    BigRational::new(BigInt::from(a), BigInt::from(c)),
                    BigRational::new(BigInt::from(b), BigInt::from(c)),
                );
                prop_assert_eq!(cusp_matrix(&kappa, k).to_field(), cusp_matrix_via_slash(&kappa, k).unwrap());
            }
        }
    }
}
