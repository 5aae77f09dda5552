//! Numerical semigroups presented by their minimal generators.
//!
//! A numerical semigroup is the set of all nonnegative integer combinations
//! of finitely many positive integers with gcd 1. Everything here is exact
//! integer arithmetic; any overflow is reported as an error instead of
//! wrapping.

use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Sentinel for residue classes not yet reached during relaxation.
const UNREACHED: u64 = u64::MAX;

/// A numerical semigroup, stored as its unique minimal system of generators
/// together with the Apéry table with respect to the multiplicity.
///
/// Construction rejects non-minimal generator lists; callers that hold an
/// arbitrary generating set reduce it first with [`minimal_generators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupSpec {
    generators: Vec<u64>,
    /// Least semigroup element in each residue class mod the multiplicity.
    apery_mult: Vec<u64>,
}

/// Apéry set of a semigroup with respect to a nonzero element `a`: entry `r`
/// is the least element of the semigroup congruent to `r` mod `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AperyTable {
    modulus: u64,
    entries: Vec<u64>,
}

/// The headline invariants of a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemigroupProfile {
    /// Largest integer outside the semigroup; -1 when the semigroup is all
    /// of the nonnegative integers.
    pub frobenius: i64,
    /// Number of gaps.
    pub genus: u64,
    pub symmetric: bool,
}

impl SemigroupSpec {
    /// Builds a semigroup from a minimal generating set.
    ///
    /// The list is sorted and deduplicated; it must be nonempty, consist of
    /// positive integers with gcd 1, and be minimal (no generator expressible
    /// as a sum of the others). A non-minimal list is rejected with
    /// [`Error::NotMinimal`] naming a redundant generator.
    pub fn new(generators: impl Into<Vec<u64>>) -> Result<Self> {
        let mut gens = generators.into();
        if gens.is_empty() {
            return Err(Error::InvalidInput("empty generator list".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive".into()));
        }
        gens.sort_unstable();
        gens.dedup();
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        if gcd != 1 {
            return Err(Error::NotNumerical { gcd });
        }
        let apery_mult = relaxation_table(&gens, gens[0])?;
        debug_assert!(apery_mult.iter().all(|&w| w != UNREACHED));
        let spec = SemigroupSpec {
            generators: gens,
            apery_mult,
        };
        // A generator g is redundant exactly when it is a sum of two nonzero
        // elements, i.e. g - n is a nonzero element for some generator n.
        for &g in &spec.generators {
            for &n in &spec.generators {
                if n < g && spec.contains(g - n) && g - n > 0 {
                    return Err(Error::NotMinimal { redundant: g });
                }
            }
        }
        Ok(spec)
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn max_generator(&self) -> u64 {
        *self.generators.last().unwrap()
    }

    /// Membership test via the cached Apéry table: `x` is an element exactly
    /// when it is at least the least element in its residue class.
    pub fn contains(&self, x: u64) -> bool {
        let r = (x % self.multiplicity()) as usize;
        x >= self.apery_mult[r]
    }

    /// Apéry table with respect to `a`, which must be a nonzero element.
    pub fn apery(&self, a: u64) -> Result<AperyTable> {
        if a == 0 {
            return Err(Error::InvalidInput("Apéry modulus must be nonzero".into()));
        }
        if !self.contains(a) {
            return Err(Error::NotMember { element: a });
        }
        let entries = if a == self.multiplicity() {
            self.apery_mult.clone()
        } else {
            relaxation_table(&self.generators, a)?
        };
        Ok(AperyTable { modulus: a, entries })
    }

    /// Largest integer not in the semigroup (-1 when there is none).
    pub fn frobenius(&self) -> i64 {
        let max = *self.apery_mult.iter().max().unwrap();
        let f = max as i128 - self.multiplicity() as i128;
        i64::try_from(f).expect("Frobenius number exceeds i64")
    }

    /// Sorted list of all gaps (positive integers outside the semigroup).
    pub fn gaps(&self) -> Vec<u64> {
        let f = self.frobenius();
        if f < 0 {
            return Vec::new();
        }
        (1..=f as u64).filter(|&x| !self.contains(x)).collect()
    }

    /// Number of gaps, computed both from the Apéry sum formula
    /// `g = (sum of Apéry entries)/m - (m-1)/2` and by direct enumeration.
    /// The two routes must agree; a mismatch is a bug and panics.
    pub fn genus(&self) -> u64 {
        let m = self.multiplicity() as u128;
        let sum: u128 = self.apery_mult.iter().map(|&w| w as u128).sum();
        let num = 2 * sum - m * (m - 1);
        debug_assert_eq!(num % (2 * m), 0);
        let by_formula = num / (2 * m);
        let by_count = self.gaps().len() as u128;
        assert_eq!(
            by_formula, by_count,
            "genus double-computation mismatch for {self}"
        );
        by_formula as u64
    }

    /// Symmetry test: the Frobenius number is odd and the genus equals
    /// `(F+1)/2`. The defining condition (every gap `x` has `F - x` in the
    /// semigroup) is recomputed as a cross-check; disagreement panics.
    ///
    /// The full semigroup of all nonnegative integers has `F = -1` and is
    /// not symmetric under this definition.
    pub fn is_symmetric(&self) -> bool {
        if self.multiplicity() == 1 {
            return false;
        }
        let f = self.frobenius();
        debug_assert!(f >= 1);
        let by_count = f % 2 == 1 && self.genus() == (f as u64 + 1) / 2;
        let by_definition = self
            .gaps()
            .iter()
            .all(|&x| self.contains(f as u64 - x));
        assert_eq!(
            by_count, by_definition,
            "symmetry cross-validation mismatch for {self}"
        );
        by_count
    }

    pub fn profile(&self) -> SemigroupProfile {
        SemigroupProfile {
            frobenius: self.frobenius(),
            genus: self.genus(),
            symmetric: self.is_symmetric(),
        }
    }
}

impl fmt::Display for SemigroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl AperyTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Entry `r` is the least element congruent to `r` mod the modulus.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn max(&self) -> u64 {
        *self.entries.iter().max().unwrap()
    }

    /// The entries as a sorted set.
    pub fn sorted_set(&self) -> Vec<u64> {
        let mut v = self.entries.clone();
        v.sort_unstable();
        v
    }
}

/// Reduces an arbitrary generating set to the unique minimal one.
///
/// Candidates are processed in increasing order; a candidate is kept exactly
/// when it is not representable by the smaller kept ones. Idempotent.
pub fn minimal_generators(candidates: &[u64]) -> Result<Vec<u64>> {
    if candidates.is_empty() {
        return Err(Error::InvalidInput("empty generator list".into()));
    }
    if candidates.contains(&0) {
        return Err(Error::InvalidInput("generators must be positive".into()));
    }
    let mut sorted = candidates.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let gcd = sorted.iter().fold(0u64, |acc, &g| acc.gcd(&g));
    if gcd != 1 {
        return Err(Error::NotNumerical { gcd });
    }
    let mut kept: Vec<u64> = Vec::new();
    let mut table: Vec<u64> = Vec::new();
    for &x in &sorted {
        if kept.is_empty() {
            kept.push(x);
            table = relaxation_table(&kept, x)?;
            continue;
        }
        if !table_member(&table, x) {
            kept.push(x);
            // The kept set may have gcd > 1 while the scan is underway;
            // unreached residue classes simply stay at the sentinel.
            table = relaxation_table(&kept, kept[0])?;
        }
    }
    Ok(kept)
}

fn table_member(table: &[u64], x: u64) -> bool {
    let w = table[(x % table.len() as u64) as usize];
    w != UNREACHED && x >= w
}

/// Least element of `<gens>` in each residue class mod `a`, by shortest-path
/// relaxation over the residue cycle graph with the generators as edge
/// weights, iterated to a fixed point. Classes not reachable (possible only
/// when the gcd of `gens` exceeds 1) are left at a sentinel value.
fn relaxation_table(gens: &[u64], a: u64) -> Result<Vec<u64>> {
    let m = usize::try_from(a).map_err(|_| Error::InvalidInput("modulus too large".into()))?;
    if m == 0 {
        return Err(Error::InvalidInput("modulus must be nonzero".into()));
    }
    let mut table = vec![UNREACHED; m];
    table[0] = 0;
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    let mut queued = vec![false; m];
    queued[0] = true;
    while let Some(r) = queue.pop_front() {
        queued[r] = false;
        let w = table[r];
        for &g in gens {
            let w2 = w.checked_add(g).ok_or(Error::Overflow)?;
            let r2 = ((r as u64 + g % a) % a) as usize;
            if w2 < table[r2] {
                table[r2] = w2;
                if !queued[r2] {
                    queued[r2] = true;
                    queue.push_back(r2);
                }
            }
        }
    }
    Ok(table)
}
