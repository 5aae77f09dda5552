//! Binomial relations and generation certificates for the kernel congruence.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::presentations::betti::betti_scan_bound;
use crate::presentations::fiber::{factorizations, Factorization};
use crate::presentations::UnionFind;
use crate::semigroup::SemigroupSpec;

/// An ordered pair of distinct factorizations of the same element, i.e. one
/// relation of the semigroup (equivalently a binomial in the defining toric
/// ideal). Stored in canonical orientation, lexicographically larger side
/// first, so that sets of relations compare deterministically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinomialRelation {
    lhs: Factorization,
    rhs: Factorization,
}

impl BinomialRelation {
    pub fn new(spec: &SemigroupSpec, a: Factorization, b: Factorization) -> Result<Self> {
        let va = a.nu(spec)?;
        let vb = b.nu(spec)?;
        if va != vb {
            return Err(Error::InvalidRelation(format!(
                "{a} and {b} express different elements ({va} vs {vb})"
            )));
        }
        if a == b {
            return Err(Error::InvalidRelation(format!("{a} paired with itself")));
        }
        let (lhs, rhs) = if a > b { (a, b) } else { (b, a) };
        Ok(BinomialRelation { lhs, rhs })
    }

    pub fn lhs(&self) -> &Factorization {
        &self.lhs
    }

    pub fn rhs(&self) -> &Factorization {
        &self.rhs
    }

    /// The common element both sides express.
    pub fn element(&self, spec: &SemigroupSpec) -> Result<u64> {
        self.lhs.nu(spec)
    }
}

impl fmt::Display for BinomialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ~ {}", self.lhs, self.rhs)
    }
}

/// Result of a generation check over all fibers up to a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenerationOutcome {
    Generates,
    /// Smallest element whose fiber the relation moves fail to connect.
    FirstFailure { element: u64 },
}

impl GenerationOutcome {
    pub fn generates(&self) -> bool {
        matches!(self, GenerationOutcome::Generates)
    }
}

/// Result of a drop-one minimality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityOutcome {
    Minimal,
    /// A relation whose removal leaves a set that still generates.
    Redundant { relation: BinomialRelation },
}

impl MinimalityOutcome {
    pub fn is_minimal(&self) -> bool {
        matches!(self, MinimalityOutcome::Minimal)
    }
}

/// Checks that the given relations generate the kernel congruence restricted
/// to every element up to `bound`: for each element with at least two
/// factorizations, the graph whose edges are relation moves
/// `x -> x - lhs + rhs` (either orientation, applicable when the side to
/// subtract fits componentwise) must be connected.
///
/// `bound` must be at least `F + 2 * max(generators)`. Connectivity up to
/// that bound certifies full generation: for larger elements any two
/// factorizations sharing a coordinate are joined by translating a
/// connecting path from a smaller fiber, and fibers above the bound are
/// always shared-support connected.
pub fn relations_generate_up_to(
    spec: &SemigroupSpec,
    relations: &[BinomialRelation],
    bound: u64,
) -> Result<GenerationOutcome> {
    validate_relations(spec, relations)?;
    let cache = FiberCache::build(spec, bound)?;
    let refs: Vec<&BinomialRelation> = relations.iter().collect();
    Ok(match cache.first_disconnected(&refs) {
        None => GenerationOutcome::Generates,
        Some(element) => GenerationOutcome::FirstFailure { element },
    })
}

/// Checks that every single relation is necessary: dropping any one must
/// break generation at the same bound. Returns the first redundant relation
/// found, in input order, if any.
pub fn relations_minimal(
    spec: &SemigroupSpec,
    relations: &[BinomialRelation],
    bound: u64,
) -> Result<MinimalityOutcome> {
    validate_relations(spec, relations)?;
    let cache = FiberCache::build(spec, bound)?;
    let refs: Vec<&BinomialRelation> = relations.iter().collect();
    if cache.first_disconnected(&refs).is_some() {
        return Err(Error::InvalidInput(
            "relation set does not generate up to the bound; minimality is undefined".into(),
        ));
    }
    for skip in 0..relations.len() {
        let without: Vec<&BinomialRelation> = relations
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, r)| r)
            .collect();
        if cache.first_disconnected(&without).is_none() {
            return Ok(MinimalityOutcome::Redundant {
                relation: relations[skip].clone(),
            });
        }
    }
    Ok(MinimalityOutcome::Minimal)
}

fn validate_relations(spec: &SemigroupSpec, relations: &[BinomialRelation]) -> Result<()> {
    for r in relations {
        let va = r.lhs.nu(spec)?;
        let vb = r.rhs.nu(spec)?;
        if va != vb {
            return Err(Error::InvalidRelation(format!(
                "{r} is not a relation of {spec} ({va} vs {vb})"
            )));
        }
    }
    Ok(())
}

/// All fibers of size two or more up to the bound, each with an index for
/// O(1) lookup of move targets.
struct FiberCache {
    entries: Vec<FiberEntry>,
}

struct FiberEntry {
    element: u64,
    fiber: Vec<Factorization>,
    index: HashMap<Vec<u32>, usize>,
}

impl FiberCache {
    fn build(spec: &SemigroupSpec, bound: u64) -> Result<Self> {
        let min_bound = betti_scan_bound(spec);
        if bound < min_bound {
            return Err(Error::InvalidInput(format!(
                "bound {bound} is below the certification bound {min_bound}"
            )));
        }
        let mut entries = Vec::new();
        for s in 1..=bound {
            if !spec.contains(s) {
                continue;
            }
            let fiber = factorizations(spec, s)?;
            if fiber.len() < 2 {
                continue;
            }
            let index = fiber
                .iter()
                .enumerate()
                .map(|(i, f)| (f.0.clone(), i))
                .collect();
            entries.push(FiberEntry {
                element: s,
                fiber,
                index,
            });
        }
        Ok(FiberCache { entries })
    }

    /// Smallest cached element whose fiber the moves fail to connect.
    fn first_disconnected(&self, relations: &[&BinomialRelation]) -> Option<u64> {
        for entry in &self.entries {
            let mut uf = UnionFind::new(entry.fiber.len());
            for (xi, x) in entry.fiber.iter().enumerate() {
                for rel in relations {
                    for (sub, add) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
                        if componentwise_ge(x, sub) {
                            let y = apply_move(x, sub, add);
                            let yi = *entry
                                .index
                                .get(&y)
                                .expect("move target stays inside the fiber");
                            uf.union(xi, yi);
                        }
                    }
                }
            }
            if uf.component_count() > 1 {
                return Some(entry.element);
            }
        }
        None
    }
}

fn componentwise_ge(x: &Factorization, sub: &Factorization) -> bool {
    x.0.iter().zip(&sub.0).all(|(&a, &b)| a >= b)
}

fn apply_move(x: &Factorization, sub: &Factorization, add: &Factorization) -> Vec<u32> {
    x.0.iter()
        .zip(&sub.0)
        .zip(&add.0)
        .map(|((&a, &b), &c)| a - b + c)
        .collect()
}
