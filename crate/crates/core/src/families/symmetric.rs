//! The two symmetric concatenated families and their closed-form Apéry
//! sets, Frobenius numbers, and presentation counts, with verifiers that
//! replay every closed form against brute force.
//!
//! Family S: for `e >= 4`, `q >= 1`, `m = e + 2q + 1`, `gcd(m, d) = 1`, the
//! generators are `m`, `m + d`, and `(q+1)m + (q+i)d` for `2 <= i <= e-1`.
//!
//! Family T: for even `e >= 4`, even `q >= max(2, e-4)`, odd `d`,
//! `m = e + 2q`, `gcd(m, d) = 1`, the generators are `m`, `m + d`, and
//! `q(m+1) + (q - (e-4)/2 + k)d + e/2` for `0 <= k <= e-3`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::presentations::{factorizations, minimal_presentation_cardinality_budgeted};
use crate::report::VerificationReport;
use crate::semigroup::SemigroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymSParams {
    pub e: u64,
    pub q: u64,
    pub d: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymTParams {
    pub e: u64,
    pub q: u64,
    pub d: u64,
}

/// Either of the two symmetric families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetricParams {
    S(SymSParams),
    T(SymTParams),
}

impl SymSParams {
    pub fn new(e: u64, q: u64, d: u64) -> Result<Self> {
        if e < 4 {
            return Err(Error::InvalidInput(format!("e must be at least 4, got {e}")));
        }
        if q == 0 {
            return Err(Error::InvalidInput("q must be positive".into()));
        }
        if d == 0 {
            return Err(Error::InvalidInput("d must be positive".into()));
        }
        let m = e + 2 * q + 1;
        if m.gcd(&d) != 1 {
            return Err(Error::InvalidInput(format!(
                "gcd(m, d) = gcd({m}, {d}) must be 1"
            )));
        }
        Ok(SymSParams { e, q, d })
    }

    pub fn m(&self) -> u64 {
        self.e + 2 * self.q + 1
    }
}

impl SymTParams {
    pub fn new(e: u64, q: u64, d: u64) -> Result<Self> {
        if e < 4 || e % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "e must be even and at least 4, got {e}"
            )));
        }
        if q == 0 || q % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "q must be a positive even integer, got {q}"
            )));
        }
        if q + 4 < e {
            return Err(Error::InvalidInput(format!(
                "q must be at least e - 4 = {}, got {q}",
                e - 4
            )));
        }
        if d % 2 == 0 {
            return Err(Error::InvalidInput(format!("d must be odd, got {d}")));
        }
        let m = e + 2 * q;
        if m.gcd(&d) != 1 {
            return Err(Error::InvalidInput(format!(
                "gcd(m, d) = gcd({m}, {d}) must be 1"
            )));
        }
        Ok(SymTParams { e, q, d })
    }

    pub fn m(&self) -> u64 {
        self.e + 2 * self.q
    }
}

fn violation(check: &str, detail: String) -> Error {
    Error::FamilyContractViolation {
        check: check.to_string(),
        detail,
    }
}

/// Generators of family S, minimality asserted.
pub fn gamma_s_generators(p: SymSParams) -> Result<SemigroupSpec> {
    let SymSParams { e, q, d } = p;
    let m = p.m();
    let mut gens = vec![m, m + d];
    for i in 2..=e - 1 {
        gens.push((q + 1) * m + (q + i) * d);
    }
    build_family_spec("gamma_s_generators", gens, e)
}

/// Generators of family T, minimality asserted.
pub fn gamma_t_generators(p: SymTParams) -> Result<SemigroupSpec> {
    let SymTParams { e, q, d } = p;
    let m = p.m();
    let mut gens = vec![m, m + d];
    let half_gap = (e - 4) / 2;
    for k in 0..=e - 3 {
        gens.push(q * (m + 1) + (q - half_gap + k) * d + e / 2);
    }
    build_family_spec("gamma_t_generators", gens, e)
}

fn build_family_spec(check: &str, gens: Vec<u64>, e: u64) -> Result<SemigroupSpec> {
    let spec = SemigroupSpec::new(gens.clone())
        .map_err(|err| violation(check, format!("generators {gens:?} rejected: {err}")))?;
    if spec.embedding_dimension() as u64 != e || spec.generators() != gens {
        return Err(violation(
            check,
            format!("generators {gens:?} are not sorted and distinct"),
        ));
    }
    Ok(spec)
}

/// Closed-form Apéry set of family S with respect to `m`, as a sorted set.
/// Asserted to hold one element per residue class mod `m`.
pub fn apery_closed_form_s(p: SymSParams) -> Result<Vec<u64>> {
    let SymSParams { e, q, d } = p;
    let m = p.m();
    let mut set = Vec::new();
    // multiples of m + d
    for k in 0..=q + 1 {
        set.push(k * (m + d));
    }
    // the same multiples shifted by the largest generator
    let top = (q + 1) * m + (q + e - 1) * d;
    for k in 0..=q + 1 {
        set.push(k * (m + d) + top);
    }
    // the middle generators
    for i in 2..=e - 2 {
        set.push((q + 1) * m + (q + i) * d);
    }
    check_residue_system("apery_closed_form_s", set, m)
}

/// Closed-form Apéry set of family T with respect to `m`, as a sorted set.
pub fn apery_closed_form_t(p: SymTParams) -> Result<Vec<u64>> {
    let SymTParams { e, q, d } = p;
    let m = p.m();
    let half_gap = (e - 4) / 2;
    let mut set = Vec::new();
    for k in 0..=e - 3 {
        set.push(q * (m + 1) + (q - half_gap + k) * d + e / 2);
    }
    for k in 0..=2 * q + 1 {
        set.push(k * (m + d));
    }
    check_residue_system("apery_closed_form_t", set, m)
}

fn check_residue_system(check: &str, mut set: Vec<u64>, m: u64) -> Result<Vec<u64>> {
    set.sort_unstable();
    let mut residues: Vec<u64> = set.iter().map(|&w| w % m).collect();
    residues.sort_unstable();
    residues.dedup();
    if set.len() as u64 != m || residues.len() != set.len() {
        return Err(violation(
            check,
            format!(
                "{} elements with {} distinct residues, expected {m} of each",
                set.len(),
                residues.len()
            ),
        ));
    }
    Ok(set)
}

/// Closed-form Frobenius number of either family.
pub fn frobenius_closed_form(p: SymmetricParams) -> Result<u64> {
    match p {
        SymmetricParams::S(SymSParams { e, q, d }) => {
            // 4q^2 + (2e + 2d + 4)q + e(d + 1) + 1
            let t1 = 4u64.checked_mul(q.checked_mul(q).ok_or(Error::Overflow)?);
            let t2 = (2 * e + 2 * d + 4).checked_mul(q);
            let t3 = e.checked_mul(d + 1);
            match (t1, t2, t3) {
                (Some(a), Some(b), Some(c)) => a
                    .checked_add(b)
                    .and_then(|v| v.checked_add(c))
                    .and_then(|v| v.checked_add(1))
                    .ok_or(Error::Overflow),
                _ => Err(Error::Overflow),
            }
        }
        SymmetricParams::T(SymTParams { e, q, d }) => {
            // (e + 2q + d) 2q + d
            (e + 2 * q + d)
                .checked_mul(2 * q)
                .and_then(|v| v.checked_add(d))
                .ok_or(Error::Overflow)
        }
    }
}

/// Verifies every claim about a symmetric family instance: minimality of the
/// generators, the closed-form Apéry set and Frobenius number against brute
/// force, symmetry with odd Frobenius number, uniqueness of expressions for
/// every Apéry element below the maximum, the no-sum property of the middle
/// generators, and the presentation count `e(e-1)/2 - 1`.
pub fn verify_symmetric_family(p: SymmetricParams, budget: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let (spec, e, closed_apery) = match p {
        SymmetricParams::S(sp) => (gamma_s_generators(sp)?, sp.e, apery_closed_form_s(sp)),
        SymmetricParams::T(tp) => (gamma_t_generators(tp)?, tp.e, apery_closed_form_t(tp)),
    };
    report.pass("minimal_generators", Some(spec.to_string()));

    let brute = spec.apery(spec.multiplicity())?.sorted_set();
    match closed_apery {
        Ok(closed) => report.push(
            "apery_closed_form",
            closed == brute,
            Some(if closed == brute {
                format!("{} elements", brute.len())
            } else {
                format!("closed {closed:?} vs brute {brute:?}")
            }),
        ),
        Err(err) => report.fail("apery_closed_form", err.to_string()),
    }

    let f_brute = spec.frobenius();
    match frobenius_closed_form(p) {
        Ok(f_closed) => report.push(
            "frobenius_closed_form",
            f_brute >= 0 && f_closed == f_brute as u64,
            Some(format!("closed {f_closed}, brute {f_brute}")),
        ),
        Err(err) => report.fail("frobenius_closed_form", err.to_string()),
    }

    let symmetric = spec.is_symmetric() && f_brute % 2 == 1;
    report.push("symmetric", symmetric, Some(format!("F = {f_brute}")));

    // every Apéry element below the maximum factors uniquely
    let max = *brute.last().unwrap();
    let mut unique_ok = true;
    let mut unique_witness = None;
    for &w in &brute {
        let count = factorizations(&spec, w)?.len();
        if w == max {
            if count < 1 {
                unique_ok = false;
                unique_witness = Some(format!("maximum {w} has no expression"));
            }
        } else if count != 1 {
            unique_ok = false;
            unique_witness = Some(format!("{w} has {count} expressions"));
            break;
        }
    }
    report.push("unique_expression", unique_ok, unique_witness);

    // no nonzero Apéry element plus a middle generator lands on the listed
    // shifted multiples
    let no_sum_ok = match p {
        SymmetricParams::S(SymSParams { e, q, d }) => {
            let m = e + 2 * q + 1;
            let top = (q + 1) * m + (q + e - 1) * d;
            let middles: Vec<u64> = (2..=e - 2).map(|i| (q + 1) * m + (q + i) * d).collect();
            let targets: Vec<u64> = (1..=q).map(|k| k * (m + d) + top).collect();
            no_sum_holds(&brute, &middles, &targets)
        }
        SymmetricParams::T(SymTParams { e, q, d }) => {
            let m = e + 2 * q;
            let half_gap = (e - 4) / 2;
            let middles: Vec<u64> = (0..=e - 3)
                .map(|k| q * (m + 1) + (q - half_gap + k) * d + e / 2)
                .collect();
            let targets: Vec<u64> = (2..=2 * q).map(|k| k * (m + d)).collect();
            no_sum_holds(&brute, &middles, &targets)
        }
    };
    report.push(
        "no_sum_property",
        no_sum_ok.is_none(),
        no_sum_ok.map(|(a, n, t)| format!("{a} + {n} = {t}")),
    );

    let expected_mu = e * (e - 1) / 2 - 1;
    match minimal_presentation_cardinality_budgeted(&spec, budget) {
        Ok(mu) => report.push(
            "presentation_cardinality",
            mu == expected_mu,
            Some(format!("mu = {mu}, expected {expected_mu}")),
        ),
        Err(Error::BudgetExceeded) => {
            report.fail("presentation_cardinality", "budget exceeded".into())
        }
        Err(err) => return Err(err),
    }

    Ok(report)
}

/// Returns a witness `(apery element, middle generator, target)` when the
/// no-sum property fails, `None` when it holds.
fn no_sum_holds(apery: &[u64], middles: &[u64], targets: &[u64]) -> Option<(u64, u64, u64)> {
    for &a in apery.iter().filter(|&&a| a > 0) {
        for &n in middles {
            for &t in targets {
                if a + n == t {
                    return Some((a, n, t));
                }
            }
        }
    }
    None
}

/// Convenience wrapper reused by the scan: builds the semigroup for a cell
/// of either family.
pub fn symmetric_generators(p: SymmetricParams) -> Result<SemigroupSpec> {
    match p {
        SymmetricParams::S(sp) => gamma_s_generators(sp),
        SymmetricParams::T(tp) => gamma_t_generators(tp),
    }
}
