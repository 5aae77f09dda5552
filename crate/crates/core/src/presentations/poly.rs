//! Exact sparse multivariate polynomials over the integers.
//!
//! Just enough arithmetic to state and check binomial identities: addition,
//! subtraction, multiplication, all with checked coefficient arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A polynomial stored as a map from exponent vectors to nonzero integer
/// coefficients. The exponent vector length is fixed at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl SparsePolynomial {
    pub fn zero(num_vars: usize) -> Self {
        SparsePolynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(num_vars: usize, exponents: &[u32], coeff: i64) -> Result<Self> {
        if exponents.len() != num_vars {
            return Err(Error::InvalidInput(format!(
                "monomial has {} exponents, expected {num_vars}",
                exponents.len()
            )));
        }
        let mut p = SparsePolynomial::zero(num_vars);
        if coeff != 0 {
            p.terms.insert(exponents.to_vec(), coeff);
        }
        Ok(p)
    }

    /// The single variable `x_var`.
    pub fn variable(num_vars: usize, var: usize) -> Result<Self> {
        if var >= num_vars {
            return Err(Error::InvalidInput(format!(
                "variable index {var} out of range for {num_vars} variables"
            )));
        }
        let mut exps = vec![0u32; num_vars];
        exps[var] = 1;
        SparsePolynomial::monomial(num_vars, &exps, 1)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e, c)?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(&rhs.neg())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut out = SparsePolynomial::zero(self.num_vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let exps: Vec<u32> = ea
                    .iter()
                    .zip(eb)
                    .map(|(&x, &y)| x.checked_add(y).ok_or(Error::Overflow))
                    .collect::<Result<_>>()?;
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.add_term(&exps, c)?;
            }
        }
        Ok(out)
    }

    fn add_term(&mut self, exps: &[u32], coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.get_mut(exps) {
            Some(c) => {
                *c = c.checked_add(coeff).ok_or(Error::Overflow)?;
                if *c == 0 {
                    self.terms.remove(exps);
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), coeff);
            }
        }
        Ok(())
    }

    fn check_vars(&self, rhs: &Self) -> Result<()> {
        if self.num_vars != rhs.num_vars {
            return Err(Error::InvalidInput(format!(
                "variable count mismatch: {} vs {}",
                self.num_vars, rhs.num_vars
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", if *c < 0 { "-" } else { "+" })?;
            } else if *c < 0 {
                write!(f, "-")?;
            }
            let mag = c.unsigned_abs();
            let constant = exps.iter().all(|&e| e == 0);
            if mag != 1 || constant {
                write!(f, "{mag}")?;
            }
            let mut wrote = false;
            for (v, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote || (mag != 1 || constant) {
                    write!(f, "*")?;
                }
                wrote = true;
                write!(f, "x{v}")?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Checks the exact identity `target + sum(multiplier * factor) = 0`.
pub fn poly_identity_zero(
    products: &[(SparsePolynomial, SparsePolynomial)],
    target: &SparsePolynomial,
) -> Result<bool> {
    let mut acc = target.clone();
    for (multiplier, factor) in products {
        acc = acc.checked_add(&multiplier.checked_mul(factor)?)?;
    }
    Ok(acc.is_zero())
}
