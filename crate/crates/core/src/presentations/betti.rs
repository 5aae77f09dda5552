//! Betti elements and the cardinality of a minimal presentation.

use crate::error::Result;
use crate::presentations::fiber::{
    factorization_graph_components, factorizations_budgeted, Factorization,
};
use crate::semigroup::SemigroupSpec;

/// An element whose factorization graph is disconnected, together with its
/// component count and one witness factorization per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiData {
    pub element: u64,
    pub component_count: usize,
    pub witnesses: Vec<Factorization>,
}

/// Upper bound for the Betti element scan: `F + 2 * max(generators)`.
///
/// For s above this bound every fiber is connected: given factorizations x
/// using generator i and y using generator j, the element s - n_i - n_j
/// exceeds F, so it has a factorization z, and z + e_i + e_j shares support
/// with both x and y.
pub fn betti_scan_bound(spec: &SemigroupSpec) -> u64 {
    let bound = spec.frobenius() as i128 + 2 * spec.max_generator() as i128;
    u64::try_from(bound).expect("scan bound is positive")
}

/// Scans every element up to [`betti_scan_bound`] and records those whose
/// fiber splits into two or more shared-support components.
pub fn betti_elements(spec: &SemigroupSpec) -> Result<Vec<BettiData>> {
    betti_elements_budgeted(spec, u64::MAX)
}

/// As [`betti_elements`] with a per-fiber enumeration budget.
pub fn betti_elements_budgeted(spec: &SemigroupSpec, budget: u64) -> Result<Vec<BettiData>> {
    let bound = betti_scan_bound(spec);
    let mut out = Vec::new();
    for s in 1..=bound {
        if !spec.contains(s) {
            continue;
        }
        let fiber = factorizations_budgeted(spec, s, budget)?;
        if fiber.len() < 2 {
            continue;
        }
        let components = factorization_graph_components(spec, &fiber)?;
        if components.len() >= 2 {
            let witnesses = components
                .iter()
                .map(|c| fiber[c[0]].clone())
                .collect();
            out.push(BettiData {
                element: s,
                component_count: components.len(),
                witnesses,
            });
        }
    }
    Ok(out)
}

/// Cardinality of a minimal presentation: the sum over Betti elements of
/// (component count - 1).
pub fn minimal_presentation_cardinality(spec: &SemigroupSpec) -> Result<u64> {
    minimal_presentation_cardinality_budgeted(spec, u64::MAX)
}

/// As [`minimal_presentation_cardinality`] with a per-fiber budget.
pub fn minimal_presentation_cardinality_budgeted(
    spec: &SemigroupSpec,
    budget: u64,
) -> Result<u64> {
    Ok(betti_elements_budgeted(spec, budget)?
        .iter()
        .map(|b| b.component_count as u64 - 1)
        .sum())
}
