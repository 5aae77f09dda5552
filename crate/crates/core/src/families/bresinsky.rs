//! Bresinsky's quadruples: for even `q2 >= 4`, with `q1 = q2 + 1` and
//! `d1 = q2 - 1`, the generators are `q1*q2`, `q1*d1`, `q1*q2 + d1`,
//! `q2*d1`. Their presentation counts grow without bound along `q2`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::presentations::minimal_presentation_cardinality_budgeted;
use crate::report::VerificationReport;
use crate::semigroup::SemigroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BresinskyParams {
    pub q2: u64,
}

impl BresinskyParams {
    pub fn new(q2: u64) -> Result<Self> {
        if q2 < 4 || q2 % 2 != 0 {
            return Err(Error::InvalidInput(format!(
                "q2 must be even and at least 4, got {q2}"
            )));
        }
        Ok(BresinskyParams { q2 })
    }

    pub fn q1(&self) -> u64 {
        self.q2 + 1
    }

    pub fn d1(&self) -> u64 {
        self.q2 - 1
    }
}

/// Builds the sorted minimal generator quadruple.
pub fn bresinsky_generators(p: BresinskyParams) -> Result<SemigroupSpec> {
    let (q1, q2, d1) = (p.q1(), p.q2, p.d1());
    let gens = vec![
        q1.checked_mul(q2).ok_or(Error::Overflow)?,
        q1.checked_mul(d1).ok_or(Error::Overflow)?,
        q1.checked_mul(q2).and_then(|v| v.checked_add(d1)).ok_or(Error::Overflow)?,
        q2.checked_mul(d1).ok_or(Error::Overflow)?,
    ];
    let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
    if gcd != 1 {
        return Err(Error::FamilyContractViolation {
            check: "bresinsky_generators".into(),
            detail: format!("generators {gens:?} have gcd {gcd}"),
        });
    }
    SemigroupSpec::new(gens.clone()).map_err(|err| Error::FamilyContractViolation {
        check: "bresinsky_generators".into(),
        detail: format!("generators {gens:?} rejected: {err}"),
    })
}

/// Verifier: coprimality and minimality of the quadruple plus the computed
/// invariants, with the presentation count as the headline value.
pub fn verify_bresinsky_family(p: BresinskyParams, budget: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let spec = bresinsky_generators(p)?;
    report.pass("minimal_generators", Some(spec.to_string()));
    report.pass(
        "invariants",
        Some(format!(
            "F = {}, genus = {}, symmetric = {}",
            spec.frobenius(),
            spec.genus(),
            spec.is_symmetric()
        )),
    );
    match minimal_presentation_cardinality_budgeted(&spec, budget) {
        Ok(mu) => report.pass("presentation_cardinality", Some(format!("mu = {mu}"))),
        Err(Error::BudgetExceeded) => {
            report.fail("presentation_cardinality", "budget exceeded".into())
        }
        Err(err) => return Err(err),
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_examples() {
        let g = bresinsky_generators(BresinskyParams::new(4).unwrap()).unwrap();
        assert_eq!(g.generators(), &[12, 15, 20, 23]);
        let g = bresinsky_generators(BresinskyParams::new(6).unwrap()).unwrap();
        assert_eq!(g.generators(), &[30, 35, 42, 47]);
    }

    #[test]
    fn odd_parameter_is_rejected() {
        assert!(matches!(
            BresinskyParams::new(5),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            BresinskyParams::new(2),
            Err(Error::InvalidInput(_))
        ));
    }
}
