use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::{Exponent, Monomial, Poly};

/// Lexicographic order over a declared variable sequence `x1 < x2 < ... < xn`.
///
/// Exponent vectors are compared starting from the greatest variable, i.e.
/// the last one in the sequence. Polynomials store their exponents in the
/// same positions as the sequence, so the order agrees with the canonical
/// term order of [`Poly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    variables: Vec<String>,
}

impl MonomialOrder {
    pub fn lex<I, S>(variables: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &variables {
            if v.is_empty() {
                return Err(Error::InvalidVariables("empty variable name".into()));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidVariables(format!("duplicate variable `{v}`")));
            }
        }
        Ok(MonomialOrder { variables })
    }

    /// Lex order on the generic names `x1..xn`.
    pub fn generic(arity: usize) -> Self {
        MonomialOrder { variables: (1..=arity).map(|i| format!("x{i}")).collect() }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    /// The same order with `name` appended as the new greatest variable.
    pub fn with_greatest(&self, name: &str) -> Result<Self> {
        let mut vars = self.variables.clone();
        vars.push(name.to_string());
        Self::lex(vars)
    }

    /// Order restricted to the `k` smallest variables.
    pub fn prefix(&self, k: usize) -> Self {
        MonomialOrder { variables: self.variables[..k].to_vec() }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn compare<E: Exponent>(&self, a: &Monomial<E>, b: &Monomial<E>) -> Ordering {
        a.cmp(b)
    }

    pub(crate) fn check<E: Exponent>(&self, f: &Poly<E>) -> Result<()> {
        if f.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: f.arity() });
        }
        Ok(())
    }
}
