//! The concatenated family whose defining ideals need more and more minimal
//! generators as the parameter grows, together with the explicit binomial
//! generating sets in embedding dimension four and their certificates.
//!
//! For parameters `n >= 5`, `e >= 4`, `q >= 0` the generators are
//! `m_i = n^2 + (e-2)n + q + i` for `0 <= i <= e-3`, then
//! `m_{e-2} = n^2 + (e-1)n + q + (e-3)` and `m_{e-1} = m_{e-2} + 1`:
//! two blocks in arithmetic progression with common difference one.

use crate::error::{Error, Result};
use crate::presentations::{
    minimal_presentation_cardinality_budgeted, poly_identity_zero, relations_generate_up_to,
    relations_minimal, specialize_binomials_at_zero, BinomialRelation, Colength, Factorization,
    GenerationOutcome, MinimalityOutcome, SparsePolynomial,
};
use crate::presentations::betti_scan_bound;
use crate::report::VerificationReport;
use crate::semigroup::SemigroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnboundedParams {
    pub n: u64,
    pub e: u64,
    pub q: u64,
}

impl UnboundedParams {
    pub fn new(n: u64, e: u64, q: u64) -> Result<Self> {
        if n < 5 {
            return Err(Error::InvalidInput(format!("n must be at least 5, got {n}")));
        }
        if e < 4 {
            return Err(Error::InvalidInput(format!("e must be at least 4, got {e}")));
        }
        Ok(UnboundedParams { n, e, q })
    }
}

fn violation(check: &str, detail: String) -> Error {
    Error::FamilyContractViolation {
        check: check.to_string(),
        detail,
    }
}

/// Builds the generator list and asserts its minimality.
pub fn unbounded_generators(p: UnboundedParams) -> Result<SemigroupSpec> {
    let UnboundedParams { n, e, q } = p;
    let base = n
        .checked_mul(n)
        .and_then(|n2| n2.checked_add((e - 2).checked_mul(n)?))
        .and_then(|v| v.checked_add(q))
        .ok_or(Error::Overflow)?;
    let mut gens: Vec<u64> = (0..=e - 3).map(|i| base + i).collect();
    let high = base + n + e - 3; // n^2 + (e-1)n + q + (e-3)
    gens.push(high);
    gens.push(high + 1);
    SemigroupSpec::new(gens.clone()).map_err(|err| {
        violation(
            "unbounded_generators",
            format!("generators {gens:?} for (n={n}, e={e}, q={q}) rejected: {err}"),
        )
    })
}

/// The relations `x0^i x1^(n+2-i) ~ x(e-2)^i x(e-1)^(n+1-i)` for
/// `0 <= i <= n+1`, valid exactly when `q = e - 4`.
pub fn h_relations(p: UnboundedParams) -> Result<Vec<BinomialRelation>> {
    let UnboundedParams { n, e, q } = p;
    if q != e - 4 {
        return Err(Error::InvalidInput(format!(
            "these relations require q = e - 4, got q={q}, e={e}"
        )));
    }
    let spec = unbounded_generators(p)?;
    let dim = spec.embedding_dimension();
    let mut out = Vec::new();
    for i in 0..=n + 1 {
        let mut lhs = vec![0u32; dim];
        lhs[0] = cast_exp(i)?;
        lhs[1] = cast_exp(n + 2 - i)?;
        let mut rhs = vec![0u32; dim];
        rhs[dim - 2] = cast_exp(i)?;
        rhs[dim - 1] = cast_exp(n + 1 - i)?;
        let rel = BinomialRelation::new(&spec, Factorization(lhs), Factorization(rhs))
            .map_err(|err| {
                violation(
                    "h_relations",
                    format!("relation {i} unbalanced for (n={n}, e={e}, q={q}): {err}"),
                )
            })?;
        out.push(rel);
    }
    Ok(out)
}

fn cast_exp(v: u64) -> Result<u32> {
    u32::try_from(v).map_err(|_| Error::Overflow)
}

// Exponent vectors of the embedding-dimension-4 binomials at q = 0.
// Variables are indexed against the sorted generators of the quadruple.

fn f_sides(n: u64, mu: u64) -> Result<(Vec<u32>, Vec<u32>)> {
    // x2^(n+1-mu) x3^mu  vs  x0^(n+1-mu) x1^(mu+1)
    Ok((
        vec![0, 0, cast_exp(n + 1 - mu)?, cast_exp(mu)?],
        vec![cast_exp(n + 1 - mu)?, cast_exp(mu + 1)?, 0, 0],
    ))
}

fn h_sides(n: u64, t: u64) -> Result<(Vec<u32>, Vec<u32>)> {
    // x1^(n+1-t) x3^t  vs  x0^(n-t) x2^(t+1)
    Ok((
        vec![0, cast_exp(n + 1 - t)?, 0, cast_exp(t)?],
        vec![cast_exp(n - t)?, 0, cast_exp(t + 1)?, 0],
    ))
}

fn g1_sides(n: u64) -> Result<(Vec<u32>, Vec<u32>)> {
    // x0^(n+1) vs x3^n
    Ok((
        vec![cast_exp(n + 1)?, 0, 0, 0],
        vec![0, 0, 0, cast_exp(n)?],
    ))
}

fn g2_sides() -> (Vec<u32>, Vec<u32>) {
    // x1 x2 vs x0 x3
    (vec![0, 1, 1, 0], vec![1, 0, 0, 1])
}

/// The relation corresponding to the binomial `f_mu`.
pub fn f_relation(spec: &SemigroupSpec, n: u64, mu: u64) -> Result<BinomialRelation> {
    let (a, b) = f_sides(n, mu)?;
    BinomialRelation::new(spec, Factorization(a), Factorization(b))
}

/// Binomial generating set of the defining ideal of the quadruple at `q = 0`.
///
/// With `reduced = false` the set holds all of `f_0 .. f_(n+1)`,
/// `h_0 .. h_n`, `g1`, `g2` (cardinality `2n + 5`); with `reduced = true`
/// the three expressible binomials `f_0`, `f_n`, `f_(n+1)` are omitted
/// (cardinality `2(n + 1)`).
pub fn ed4_generating_set(n: u64, reduced: bool) -> Result<Vec<BinomialRelation>> {
    if n < 5 {
        return Err(Error::InvalidInput(format!("n must be at least 5, got {n}")));
    }
    let spec = unbounded_generators(UnboundedParams { n, e: 4, q: 0 })?;
    let mut out = Vec::new();
    let mu_range = if reduced { 1..=n - 1 } else { 0..=n + 1 };
    let mk = |a: Vec<u32>, b: Vec<u32>, label: String| -> Result<BinomialRelation> {
        BinomialRelation::new(&spec, Factorization(a), Factorization(b)).map_err(|err| {
            violation("ed4_generating_set", format!("{label} at n={n}: {err}"))
        })
    };
    for mu in mu_range {
        let (a, b) = f_sides(n, mu)?;
        out.push(mk(a, b, format!("f_{mu}"))?);
    }
    for t in 0..=n {
        let (a, b) = h_sides(n, t)?;
        out.push(mk(a, b, format!("h_{t}"))?);
    }
    let (a, b) = g1_sides(n)?;
    out.push(mk(a, b, "g1".into())?);
    let (a, b) = g2_sides();
    out.push(mk(a, b, "g2".into())?);
    Ok(out)
}

// Polynomial forms of the same binomials, with the signs used by the
// reduction identities.

fn binomial_poly((pos, neg): (Vec<u32>, Vec<u32>)) -> Result<SparsePolynomial> {
    SparsePolynomial::monomial(4, &pos, 1)?.checked_sub(&SparsePolynomial::monomial(4, &neg, 1)?)
}

fn f_poly(n: u64, mu: u64) -> Result<SparsePolynomial> {
    binomial_poly(f_sides(n, mu)?)
}

fn h_poly(n: u64, t: u64) -> Result<SparsePolynomial> {
    binomial_poly(h_sides(n, t)?)
}

fn g1_poly(n: u64) -> Result<SparsePolynomial> {
    binomial_poly(g1_sides(n)?)
}

fn g2_poly() -> Result<SparsePolynomial> {
    binomial_poly(g2_sides())
}

/// Checks the three exact reduction identities that make `f_(n+1)`, `f_n`
/// and `f_0` expressible through the rest of the generating set:
///
/// ```text
/// f_(n+1) = -(x3 g1 + x0^n g2 + x1 h_0)
/// f_n     = -(x2 g1 + x0 h_0)
/// f_0     = -(x1 g1 + h_n)
/// ```
pub fn verify_reduction_identities(n: u64) -> Result<bool> {
    if n < 5 {
        return Err(Error::InvalidInput(format!("n must be at least 5, got {n}")));
    }
    let x = |var: usize| SparsePolynomial::variable(4, var);
    let x0_pow_n = SparsePolynomial::monomial(4, &[cast_exp(n)?, 0, 0, 0], 1)?;
    let one = SparsePolynomial::monomial(4, &[0, 0, 0, 0], 1)?;

    let id1 = poly_identity_zero(
        &[
            (x(3)?, g1_poly(n)?),
            (x0_pow_n, g2_poly()?),
            (x(1)?, h_poly(n, 0)?),
        ],
        &f_poly(n, n + 1)?,
    )?;
    let id2 = poly_identity_zero(
        &[(x(2)?, g1_poly(n)?), (x(0)?, h_poly(n, 0)?)],
        &f_poly(n, n)?,
    )?;
    let id3 = poly_identity_zero(
        &[(x(1)?, g1_poly(n)?), (one, h_poly(n, n)?)],
        &f_poly(n, 0)?,
    )?;
    Ok(id1 && id2 && id3)
}

/// Specializes the full generating set at the smallest variable and compares
/// the standard-monomial count with `n^2 + 2n`, the multiplicity of the
/// quadruple.
pub fn eto_colength_check(n: u64) -> Result<bool> {
    let set = ed4_generating_set(n, false)?;
    let ideal = specialize_binomials_at_zero(&set, 0)?;
    let expected = n * n + 2 * n;
    Ok(ideal.colength() == Colength::Finite(expected))
}

/// Full certificate for the embedding-dimension-4 ideal at a given `n`:
/// presentation count, generation and minimality of the reduced set,
/// generation but non-minimality of the full set (with the redundant
/// binomial named), the colength check, and the reduction identities.
pub fn verify_ed4_ideal(n: u64, budget: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let spec = unbounded_generators(UnboundedParams { n, e: 4, q: 0 })?;
    let bound = betti_scan_bound(&spec);

    let expected_mu = 2 * (n + 1);
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

    let reduced = ed4_generating_set(n, true)?;
    report.push(
        "reduced_set_cardinality",
        reduced.len() as u64 == expected_mu,
        Some(format!("{} relations", reduced.len())),
    );
    let gen = relations_generate_up_to(&spec, &reduced, bound)?;
    report.push(
        "reduced_set_generates",
        gen.generates(),
        match &gen {
            GenerationOutcome::Generates => None,
            GenerationOutcome::FirstFailure { element } => {
                Some(format!("first failure at {element}"))
            }
        },
    );
    if gen.generates() {
        let min = relations_minimal(&spec, &reduced, bound)?;
        report.push(
            "reduced_set_minimal",
            min.is_minimal(),
            match &min {
                MinimalityOutcome::Minimal => None,
                MinimalityOutcome::Redundant { relation } => {
                    Some(format!("redundant relation {relation}"))
                }
            },
        );
    } else {
        report.fail("reduced_set_minimal", "generation failed".into());
    }

    let full = ed4_generating_set(n, false)?;
    report.push(
        "full_set_cardinality",
        full.len() as u64 == 2 * n + 5,
        Some(format!("{} relations", full.len())),
    );
    let gen_full = relations_generate_up_to(&spec, &full, bound)?;
    report.push("full_set_generates", gen_full.generates(), None);
    if gen_full.generates() {
        let min_full = relations_minimal(&spec, &full, bound)?;
        match min_full {
            MinimalityOutcome::Redundant { relation } => {
                let expressible = [0, n, n + 1]
                    .iter()
                    .map(|&mu| f_relation(&spec, n, mu))
                    .collect::<Result<Vec<_>>>()?;
                report.push(
                    "full_set_redundancy_witness",
                    expressible.contains(&relation),
                    Some(format!("redundant relation {relation}")),
                );
            }
            MinimalityOutcome::Minimal => {
                report.fail(
                    "full_set_redundancy_witness",
                    "full set unexpectedly minimal".into(),
                );
            }
        }
    } else {
        report.fail("full_set_redundancy_witness", "generation failed".into());
    }

    match eto_colength_check(n) {
        Ok(ok) => report.push(
            "specialization_colength",
            ok,
            Some(format!("expected {}", n * n + 2 * n)),
        ),
        Err(err) => report.fail("specialization_colength", err.to_string()),
    }

    match verify_reduction_identities(n) {
        Ok(ok) => report.push("reduction_identities", ok, None),
        Err(err) => report.fail("reduction_identities", err.to_string()),
    }

    Ok(report)
}

/// Family verifier used by the command line: minimality of the generators,
/// the invariants, balance of the h-relations when `q = e - 4`, and the
/// full ideal certificate when requested (`e = 4`, `q = 0` only).
pub fn verify_unbounded_family(
    p: UnboundedParams,
    ideal: bool,
    budget: u64,
) -> Result<VerificationReport> {
    if ideal && (p.e != 4 || p.q != 0) {
        return Err(Error::InvalidInput(
            "the ideal certificate applies to e = 4, q = 0 only".into(),
        ));
    }
    let mut report = VerificationReport::new();
    let spec = unbounded_generators(p)?;
    report.pass("minimal_generators", Some(spec.to_string()));

    match minimal_presentation_cardinality_budgeted(&spec, budget) {
        Ok(mu) => {
            report.pass("presentation_cardinality", Some(format!("mu = {mu}")));
            if p.q == p.e - 4 {
                report.push(
                    "mu_lower_bound_evidence",
                    mu >= p.n + 2,
                    Some(format!("mu = {mu}, bound {}", p.n + 2)),
                );
            }
        }
        Err(Error::BudgetExceeded) => {
            report.fail("presentation_cardinality", "budget exceeded".into())
        }
        Err(err) => return Err(err),
    }

    if p.q == p.e - 4 {
        let rels = h_relations(p)?;
        let mut distinct = rels.clone();
        distinct.sort();
        distinct.dedup();
        report.push(
            "h_relations_balanced_distinct",
            rels.len() as u64 == p.n + 2 && distinct.len() == rels.len(),
            Some(format!("{} relations", rels.len())),
        );
    }

    if ideal {
        report.extend(verify_ed4_ideal(p.n, budget)?);
    }
    Ok(report)
}

/// One cell of the conjecture evidence table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureRow {
    pub n: u64,
    pub e: u64,
    pub mu: Option<u64>,
    /// Whether `mu >= n + 2`; absent when the budget ran out.
    pub meets_lower_bound: Option<bool>,
    pub status: CellStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    Ok,
    BudgetExceeded,
}

/// Evidence scan over `q = e - 4` cells: computes the presentation count of
/// every `(n, e)` in the ranges and records whether it clears `n + 2`.
/// Gathers per-instance evidence only; cells that blow the budget are
/// reported as such rather than guessed.
pub fn conjecture_scan(
    n_range: std::ops::RangeInclusive<u64>,
    e_range: std::ops::RangeInclusive<u64>,
    budget: u64,
) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for n in n_range {
        for e in e_range.clone() {
            let p = UnboundedParams::new(n, e, e - 4)?;
            let spec = unbounded_generators(p)?;
            let row = match minimal_presentation_cardinality_budgeted(&spec, budget) {
                Ok(mu) => ConjectureRow {
                    n,
                    e,
                    mu: Some(mu),
                    meets_lower_bound: Some(mu >= n + 2),
                    status: CellStatus::Ok,
                },
                Err(Error::BudgetExceeded) => ConjectureRow {
                    n,
                    e,
                    mu: None,
                    meets_lower_bound: None,
                    status: CellStatus::BudgetExceeded,
                },
                Err(err) => return Err(err),
            };
            rows.push(row);
        }
    }
    Ok(rows)
}
