//! Batch self-checks over one field: continued fractions, the divisor
//! identities, the slash action, `W_{k,k}`, the period matrices and the
//! Hecke first-row identity.
//!
//! Cases run in parallel but results are collected in enumeration order, so
//! a report is identical across runs.

use crate::hecke::HeckeEngine;
use crate::hurwitz::{expand, generators, Cusp, Generator, Mat2};
use crate::periods::{c_to_r, cusp_matrix, cusp_matrix_via_slash, r_to_c, transport_matrix};
use crate::polyspace::{apply_group_word, slash_matrix, PolyKK};
use crate::quadfield::{
    canonical_up_to, divisors, elements_up_to, euclid_gcd, phi_tilde, phi_tilde_multiplicative,
    residues, sigma_tilde, Field, QuadElem, QuadInt,
};
use crate::relations::{build_relations, coboundary_vector, wkk_from_system};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub first_failure: Option<String>,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.cases_passed == self.cases_run
    }

    /// Fold per-case outcomes, `Err` carrying a witness.
    pub fn from_outcomes(name: &str, outcomes: Vec<Result<(), String>>) -> Self {
        let cases_run = outcomes.len();
        let cases_passed = outcomes.iter().filter(|r| r.is_ok()).count();
        let first_failure = outcomes.into_iter().find_map(Result::err);
        CheckRecord { name: name.to_string(), cases_run, cases_passed, first_failure }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub name: String,
    pub k: usize,
    pub n: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub d: u32,
    pub k: usize,
    pub norm_bound: u64,
    pub checks: Vec<CheckRecord>,
    pub diagnostics: Vec<Diagnostic>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckRecord::passed)
    }
}

fn ensure(cond: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(witness())
    }
}

/// The cusps `mu / nu` with `nu` canonical of norm at most `bound` and `mu`
/// running over the residues mod `nu` coprime to it.
pub fn reduced_cusps(field: Field, bound: u64) -> Vec<QuadElem> {
    let mut out = Vec::new();
    for nu in canonical_up_to(field, bound) {
        for mu in residues(&nu, true).expect("nu is nonzero") {
            out.push(&QuadElem::from(&mu) / &QuadElem::from(&nu));
        }
    }
    out
}

/// Termination, final convergent, unimodularity and the closed form
/// `g_n = ((-1)^n mu_{n-1}, mu_n), ((-1)^n nu_{n-1}, nu_n))`, and the end
/// points of each `g_n`.
pub fn check_continued_fraction(kappa: &QuadElem) -> Result<(), String> {
    let field = kappa.field();
    let cf = expand(kappa);
    let m = cf.m() as isize;
    let (mu, nu) = cf.convergent(m);
    ensure(&(&QuadElem::from(mu) / &QuadElem::from(nu)) == kappa, || {
        format!("kappa={kappa}: final convergent {mu}/{nu}")
    })?;
    for (n, g) in cf.matrices.iter().enumerate() {
        let n = n as isize;
        ensure(g.det().is_one(), || format!("kappa={kappa}: det g_{n} = {}", g.det()))?;
        let sign = QuadInt::new(field, if n % 2 == 0 { 1 } else { -1 }, 0);
        let (mu0, nu0) = cf.convergent(n - 1);
        let (mu1, nu1) = cf.convergent(n);
        let closed = Mat2::new(&sign * mu0, mu1.clone(), &sign * nu0, nu1.clone());
        ensure(&closed == g, || format!("kappa={kappa}: g_{n} = {g}, closed form {closed}"))?;
        // the geodesic g_n(0) -> g_n(oo) joins consecutive convergents
        ensure(g.act(&Cusp::zero(field)) == Cusp::new(mu1.into(), nu1.into()), || {
            format!("kappa={kappa}: g_{n}(0) differs from convergent {n}")
        })?;
        ensure(g.act(&Cusp::infinity(field)) == Cusp::new(mu0.into(), nu0.into()), || {
            format!("kappa={kappa}: g_{n}(oo) differs from convergent {}", n - 1)
        })?;
    }
    Ok(())
}

pub fn check_cusp_integrality(kappa: &QuadElem, k: usize) -> Result<(), String> {
    let direct = cusp_matrix(kappa, k);
    let via = cusp_matrix_via_slash(kappa, k).map_err(|e| e.to_string())?;
    let via = via.to_integral().ok_or_else(|| format!("kappa={kappa} k={k}: cusp matrix not integral"))?;
    ensure(direct == via, || format!("kappa={kappa} k={k}: cusp matrix routes differ"))
}

pub fn check_phi_identity(n: &QuadInt) -> Result<(), String> {
    let mut sum = num_bigint::BigInt::from(0);
    for d in divisors(n).map_err(|e| e.to_string())? {
        let counted = phi_tilde(&d).map_err(|e| e.to_string())?;
        let formula = phi_tilde_multiplicative(&d).map_err(|e| e.to_string())?;
        ensure(counted == formula, || format!("d={d}: counted {counted}, product formula {formula}"))?;
        sum += counted;
    }
    ensure(sum == n.norm(), || format!("n={n}: sum of phi = {sum}, norm {}", n.norm()))
}

/// The first-row identity for `A(n)`, plus integrality through the field route
/// when `field_route` is set.
pub fn check_flagship(engine: &HeckeEngine, n: &QuadInt, field_route: bool) -> Result<(), String> {
    let k = engine.k();
    let h = engine.hecke_matrix(n).map_err(|e| e.to_string())?;
    let expected = sigma_tilde(2 * k as u32 + 2, n).map_err(|e| e.to_string())?;
    let got = h.first_row_difference();
    ensure(got == QuadInt::from_integer(n.field(), expected.clone()), || {
        format!("n={n} k={k}: first-row difference {got}, expected {expected}")
    })?;
    if field_route {
        let via = engine.hecke_matrix_in_field(n).map_err(|e| e.to_string())?;
        ensure(via.is_integral(), || format!("n={n} k={k}: A(n) not integral"))?;
        ensure(via == h.matrix.to_field(), || format!("n={n} k={k}: A(n) routes differ"))?;
    }
    Ok(())
}

pub fn check_slash_laws(field: Field, k: usize) -> Result<(), String> {
    let s = slash_matrix(&Generator::S.matrix(field).expect("S"), k);
    ensure(s.mul(&s).is_identity(), || format!("k={k}: S^2 != I"))?;
    let u = slash_matrix(&Generator::U.matrix(field).expect("U"), k);
    ensure(u.mul(&u).mul(&u).is_identity(), || format!("k={k}: U^3 != I"))?;
    let minus = Mat2::identity(field).neg();
    ensure(slash_matrix(&minus, k).is_identity(), || format!("k={k}: -I acts nontrivially"))?;
    let gens = generators(field);
    for (n1, g1) in &gens {
        for (n2, g2) in &gens {
            let lhs = slash_matrix(&g1.mul(g2), k);
            let rhs = slash_matrix(g2, k).mul(&slash_matrix(g1, k));
            ensure(lhs == rhs, || format!("k={k}: right action fails for {}*{}", n1.name(), n2.name()))?;
        }
    }
    Ok(())
}

pub fn check_wkk(field: Field, k: usize) -> Result<(), String> {
    let system = build_relations(field, k);
    let w = wkk_from_system(&system);
    for v in &w.w.vectors {
        let poly = PolyKK::from_vector(field, k, v);
        for word in &system.words {
            let image = apply_group_word(&poly, word).map_err(|e| e.to_string())?;
            ensure(image.is_zero(), || format!("k={k}: basis vector not killed by {word}"))?;
        }
    }
    let cob = PolyKK::from_vector(field, k, &coboundary_vector(field, k));
    for word in &system.words {
        let image = apply_group_word(&cob, word).map_err(|e| e.to_string())?;
        ensure(image.is_zero(), || format!("k={k}: coboundary not killed by {word}"))?;
    }
    ensure(w.contains_coboundary == (k > 0), || format!("k={k}: coboundary membership wrong"))?;
    let expected_tilde = w.w.dim().saturating_sub(usize::from(k > 0));
    ensure(w.w_tilde.dim() == expected_tilde, || format!("k={k}: quotient dimension wrong"))
}

pub fn check_inversion(kappa: &QuadElem, k: usize) -> Result<(), String> {
    let prod = r_to_c(kappa, k).mul(&c_to_r(kappa, k));
    ensure(prod.is_identity(), || format!("kappa={kappa} k={k}: r_to_c * c_to_r != I"))
}

pub fn check_translation(beta: &QuadInt, k: usize) -> Result<(), String> {
    let via_cf = cusp_matrix(&QuadElem::from(beta), k);
    let direct = transport_matrix(&Mat2::translation(beta), k).map_err(|e| e.to_string())?;
    ensure(via_cf == direct, || format!("beta={beta} k={k}: cusp and transport matrices differ"))
}

fn run_parallel<T: Sync + Send>(
    name: &str,
    cases: &[T],
    f: impl Fn(&T) -> Result<(), String> + Sync + Send,
) -> CheckRecord {
    CheckRecord::from_outcomes(name, cases.par_iter().map(f).collect())
}

pub fn run_verify(field: Field, k: usize, norm_bound: u64) -> VerifyReport {
    let cusps = reduced_cusps(field, norm_bound);
    let canonical = canonical_up_to(field, norm_bound);
    let non_units: Vec<QuadInt> = canonical.iter().filter(|n| !n.is_one()).cloned().collect();
    let weights: Vec<usize> = (0..=k).collect();
    let mut checks = Vec::new();

    checks.push(run_parallel("cf_round_trip", &cusps, check_continued_fraction));
    let cusp_cases: Vec<(QuadElem, usize)> =
        weights.iter().flat_map(|&kk| cusps.iter().map(move |c| (c.clone(), kk))).collect();
    checks.push(run_parallel("cusp_integrality", &cusp_cases, |(c, kk)| check_cusp_integrality(c, *kk)));
    checks.push(run_parallel("phi_identity", &canonical, check_phi_identity));

    let mut flagship = Vec::new();
    for kk in 1..=k {
        let engine = HeckeEngine::new(field, kk);
        flagship.extend(non_units.par_iter().map(|n| check_flagship(&engine, n, true)).collect::<Vec<_>>());
    }
    checks.push(CheckRecord::from_outcomes("hecke_first_row", flagship));

    checks.push(run_parallel("slash_laws", &weights, |&kk| check_slash_laws(field, kk)));
    checks.push(run_parallel("wkk_structure", &weights, |&kk| check_wkk(field, kk)));
    let grid: Vec<(QuadElem, usize)> = weights
        .iter()
        .flat_map(|&kk| cusps.iter().take(50).map(move |c| (c.clone(), kk)))
        .collect();
    checks.push(run_parallel("r_c_inversion", &grid, |(c, kk)| check_inversion(c, *kk)));
    let betas: Vec<(QuadInt, usize)> = weights
        .iter()
        .flat_map(|&kk| elements_up_to(field, norm_bound).into_iter().map(move |b| (b, kk)))
        .collect();
    checks.push(run_parallel("translation_cross_path", &betas, |(b, kk)| check_translation(b, *kk)));

    VerifyReport { d: field.d(), k, norm_bound, checks, diagnostics: diagnostics(field, k, &non_units) }
}

/// Hecke stability of `W_{k,k}` and multiplicativity on coprime pairs, for
/// small weights and norms. Reported, never asserted.
pub fn diagnostics(field: Field, k: usize, non_units: &[QuadInt]) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let small: Vec<&QuadInt> = non_units.iter().filter(|n| n.norm() <= 10.into()).collect();
    for kk in 1..=k.min(3) {
        let engine = HeckeEngine::new(field, kk);
        for n in &small {
            if let Ok(s) = crate::hecke::w_stability(&engine, n) {
                out.push(Diagnostic { name: "w_stability".into(), k: kk, n: n.to_string(), holds: s.forward });
                out.push(Diagnostic {
                    name: "w_stability_transpose".into(),
                    k: kk,
                    n: n.to_string(),
                    holds: s.transpose,
                });
            }
        }
        for (i, n1) in small.iter().enumerate() {
            for n2 in &small[i + 1..] {
                let coprime = euclid_gcd(n1, n2).map(|g| g.is_one()).unwrap_or(false);
                if !coprime || (*n1 * *n2).norm() > 50.into() {
                    continue;
                }
                if let Ok(m) = crate::hecke::multiplicativity(&engine, n1, n2) {
                    let n = format!("({n1})*({n2})");
                    out.push(Diagnostic { name: "multiplicative".into(), k: kk, n: n.clone(), holds: m.exact });
                    out.push(Diagnostic { name: "multiplicative_on_w_tilde".into(), k: kk, n, holds: m.on_w_tilde });
                }
            }
        }
    }
    out
}
