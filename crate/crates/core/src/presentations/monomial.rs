//! Monomial ideals, standard-monomial counting, and specialization of
//! binomial sets at a vanishing variable.

use std::fmt;

use crate::error::{Error, Result};
use crate::presentations::relations::BinomialRelation;

/// A monomial ideal in interreduced form: no generator divides another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Vec<u32>>,
}

/// Number of standard monomials of a monomial ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl MonomialIdeal {
    /// Builds the ideal generated by the given monomials, interreducing and
    /// sorting so that equal ideals compare equal.
    pub fn new(num_vars: usize, monomials: Vec<Vec<u32>>) -> Result<Self> {
        if num_vars == 0 {
            return Err(Error::InvalidInput("need at least one variable".into()));
        }
        for m in &monomials {
            if m.len() != num_vars {
                return Err(Error::InvalidInput(format!(
                    "monomial has {} exponents, expected {num_vars}",
                    m.len()
                )));
            }
        }
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for m in monomials {
            if kept.iter().any(|k| divides(k, &m)) {
                continue;
            }
            kept.retain(|k| !divides(&m, k));
            kept.push(m);
        }
        kept.sort();
        Ok(MonomialIdeal {
            num_vars,
            generators: kept,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    /// Monomial membership: divisible by some generator.
    pub fn contains_monomial(&self, monomial: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, monomial))
    }

    /// Counts the monomials outside the ideal. Finite exactly when every
    /// variable appears as a pure power among the generators; in that case
    /// every standard monomial lies in the box below those pure powers, so
    /// counting enumerates the box.
    pub fn colength(&self) -> Colength {
        let mut box_limits = Vec::with_capacity(self.num_vars);
        for var in 0..self.num_vars {
            let pure = self
                .generators
                .iter()
                .filter(|g| g.iter().enumerate().all(|(i, &e)| i == var || e == 0))
                .map(|g| g[var])
                .min();
            match pure {
                Some(p) => box_limits.push(p),
                None => return Colength::Infinite,
            }
        }
        let mut count = 0u64;
        let mut point = vec![0u32; self.num_vars];
        loop {
            if !self.contains_monomial(&point) {
                count += 1;
            }
            // odometer over the box
            let mut var = 0;
            loop {
                if var == self.num_vars {
                    return Colength::Finite(count);
                }
                point[var] += 1;
                if point[var] < box_limits[var] {
                    break;
                }
                point[var] = 0;
                var += 1;
            }
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let mut wrote = false;
            for (v, &e) in g.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                wrote = true;
                write!(f, "x{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
            if !wrote {
                write!(f, "1")?;
            }
        }
        write!(f, ">")
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y)
}

/// Sets variable `var` to zero across a set of binomials and returns the
/// resulting monomial ideal together with the variable itself.
///
/// A binomial with the variable on both sides vanishes; with the variable on
/// one side it leaves the opposite monomial. A binomial untouched by the
/// variable is tolerated only when both of its monomials already lie in the
/// ideal of the surviving monomials, so that the resulting ideal is genuinely
/// monomial; otherwise the specialization criterion is inapplicable and an
/// error names the offending binomial.
pub fn specialize_binomials_at_zero(
    binomials: &[BinomialRelation],
    var: usize,
) -> Result<MonomialIdeal> {
    let num_vars = match binomials.first() {
        Some(r) => r.lhs().exponents().len(),
        None => return Err(Error::InvalidInput("empty binomial set".into())),
    };
    if var >= num_vars {
        return Err(Error::InvalidInput(format!(
            "variable index {var} out of range for {num_vars} variables"
        )));
    }
    let mut survivors: Vec<Vec<u32>> = Vec::new();
    let mut x_var = vec![0u32; num_vars];
    x_var[var] = 1;
    survivors.push(x_var);
    let mut untouched: Vec<&BinomialRelation> = Vec::new();
    for rel in binomials {
        let l = rel.lhs().exponents();
        let r = rel.rhs().exponents();
        match (l[var] > 0, r[var] > 0) {
            (true, true) => {}
            (true, false) => survivors.push(r.to_vec()),
            (false, true) => survivors.push(l.to_vec()),
            (false, false) => untouched.push(rel),
        }
    }
    let ideal = MonomialIdeal::new(num_vars, survivors)?;
    for rel in untouched {
        if !ideal.contains_monomial(rel.lhs().exponents())
            || !ideal.contains_monomial(rel.rhs().exponents())
        {
            return Err(Error::NotMonomialAfterSpecialization(format!(
                "binomial {rel} does not involve x{var} and is not absorbed by the surviving monomials"
            )));
        }
    }
    Ok(ideal)
}
