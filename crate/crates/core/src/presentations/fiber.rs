//! Factorization fibers and their shared-support graphs.

use std::fmt;

use crate::error::{Error, Result};
use crate::presentations::UnionFind;
use crate::semigroup::SemigroupSpec;

/// An exponent vector over the generators of an ambient semigroup: entry `i`
/// is the multiplicity of generator `i` in one expression of an element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization(pub Vec<u32>);

impl Factorization {
    /// The element this factorization expresses: the exponent-weighted sum
    /// of the generators.
    pub fn nu(&self, spec: &SemigroupSpec) -> Result<u64> {
        if self.0.len() != spec.embedding_dimension() {
            return Err(Error::InvalidInput(format!(
                "factorization has {} exponents, semigroup {spec} has {} generators",
                self.0.len(),
                spec.embedding_dimension()
            )));
        }
        let mut total: u128 = 0;
        for (&e, &g) in self.0.iter().zip(spec.generators()) {
            total += e as u128 * g as u128;
        }
        u64::try_from(total).map_err(|_| Error::Overflow)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Enumerates the complete fiber of `s`: every exponent vector whose
/// weighted sum equals `s`. Empty exactly when `s` is not an element.
pub fn factorizations(spec: &SemigroupSpec, s: u64) -> Result<Vec<Factorization>> {
    factorizations_budgeted(spec, s, u64::MAX)
}

/// As [`factorizations`], but aborts with [`Error::BudgetExceeded`] once
/// more than `budget` enumeration nodes have been visited.
///
/// Enumeration descends from the highest-index generator with exponents
/// tried largest first, so the output order is deterministic and witnesses
/// picked from it are reproducible.
pub fn factorizations_budgeted(
    spec: &SemigroupSpec,
    s: u64,
    budget: u64,
) -> Result<Vec<Factorization>> {
    let mut out = Vec::new();
    if !spec.contains(s) {
        return Ok(out);
    }
    let mut current = vec![0u32; spec.embedding_dimension()];
    let mut nodes = 0u64;
    descend(
        spec,
        spec.embedding_dimension() - 1,
        s,
        &mut current,
        &mut out,
        &mut nodes,
        budget,
    )?;
    Ok(out)
}

fn descend(
    spec: &SemigroupSpec,
    idx: usize,
    remaining: u64,
    current: &mut Vec<u32>,
    out: &mut Vec<Factorization>,
    nodes: &mut u64,
    budget: u64,
) -> Result<()> {
    let gens = spec.generators();
    if idx == 0 {
        if remaining % gens[0] == 0 {
            current[0] = u32::try_from(remaining / gens[0]).map_err(|_| Error::Overflow)?;
            out.push(Factorization(current.clone()));
            current[0] = 0;
        }
        return Ok(());
    }
    let g = gens[idx];
    let mut exp = remaining / g;
    loop {
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExceeded);
        }
        let rem = remaining - exp * g;
        // rem must itself be an element for the branch to complete
        if spec.contains(rem) {
            current[idx] = u32::try_from(exp).map_err(|_| Error::Overflow)?;
            descend(spec, idx - 1, rem, current, out, nodes, budget)?;
            current[idx] = 0;
        }
        if exp == 0 {
            break;
        }
        exp -= 1;
    }
    Ok(())
}

/// Partitions a fiber under the shared-support relation: two factorizations
/// are adjacent when some coordinate is positive in both. Components are
/// returned as index lists into `fiber`, ordered by smallest member.
pub fn factorization_graph_components(
    spec: &SemigroupSpec,
    fiber: &[Factorization],
) -> Result<Vec<Vec<usize>>> {
    if fiber.is_empty() {
        return Err(Error::InvalidInput("empty fiber".into()));
    }
    let target = fiber[0].nu(spec)?;
    for f in &fiber[1..] {
        if f.nu(spec)? != target {
            return Err(Error::InvalidInput(format!(
                "mixed values in fiber: {} and {}",
                target,
                f.nu(spec)?
            )));
        }
    }
    let mut uf = UnionFind::new(fiber.len());
    for var in 0..spec.embedding_dimension() {
        let mut first: Option<usize> = None;
        for (i, f) in fiber.iter().enumerate() {
            if f.0[var] > 0 {
                match first {
                    None => first = Some(i),
                    Some(j) => uf.union(j, i),
                }
            }
        }
    }
    Ok(uf.components())
}
