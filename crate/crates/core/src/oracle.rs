//! Brute-force membership oracles, independent of the Gröbner machinery.
//!
//! * [`member_by_linear_algebra`] searches for cofactors of bounded degree
//!   by exact linear algebra over `Q`. It is one-sided: `true` is a proof of
//!   membership, `false` only means "not within the bounds".
//! * [`member_by_euclid`] uses that the univariate Laurent ring is a PID.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::poly::{Monomial, Poly, Polynomial};
use crate::rational::Rational;
use crate::univariate;

pub mod random;

pub const DEFAULT_LAMBDA_CEILING: u32 = 6;
pub const DEFAULT_DEGREE_CEILING: u32 = 8;

/// Search bounds for [`member_by_linear_algebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    lambda_max: u32,
    degree_max: u32,
}

impl OracleConfig {
    /// Bounds checked against the default ceilings.
    pub fn new(lambda_max: u32, degree_max: u32) -> Result<Self> {
        Self::with_ceilings(lambda_max, degree_max, DEFAULT_LAMBDA_CEILING, DEFAULT_DEGREE_CEILING)
    }

    pub fn with_ceilings(lambda_max: u32, degree_max: u32, lambda_ceiling: u32, degree_ceiling: u32) -> Result<Self> {
        if lambda_max > lambda_ceiling {
            return Err(Error::BoundExceeded { name: "lambda_max", value: lambda_max, ceiling: lambda_ceiling });
        }
        if degree_max > degree_ceiling {
            return Err(Error::BoundExceeded { name: "degree_max", value: degree_max, ceiling: degree_ceiling });
        }
        Ok(OracleConfig { lambda_max, degree_max })
    }

    pub fn lambda_max(&self) -> u32 {
        self.lambda_max
    }

    pub fn degree_max(&self) -> u32 {
        self.degree_max
    }
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { lambda_max: DEFAULT_LAMBDA_CEILING, degree_max: DEFAULT_DEGREE_CEILING }
    }
}

/// All exponent vectors in `n` variables of total degree `<= d`.
fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial<u32>>) {
        if prefix.len() == n {
            out.push(Monomial(prefix.clone()));
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Row-echelon basis of a subspace of `Q[x]`, viewed as vectors indexed by
/// monomials. Vectors are kept normalised to leading coefficient one.
struct Echelon {
    pivots: HashMap<Monomial<u32>, Polynomial>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { pivots: HashMap::new() }
    }

    /// Reduces the leading terms of `v` until it vanishes or its leading
    /// monomial is not a pivot.
    fn reduce(&self, mut v: Polynomial) -> Polynomial {
        while let Some((m, c)) = v.leading_term() {
            match self.pivots.get(m) {
                Some(p) => {
                    let c = c.clone();
                    v = &v - &p.scale(&c);
                }
                None => break,
            }
        }
        v
    }

    fn insert(&mut self, v: Polynomial) {
        let v = self.reduce(v);
        if let Some(m) = v.leading_monomial().cloned() {
            self.pivots.insert(m, v.monic());
        }
    }

    /// Any nonzero element of the span has a pivot as leading monomial.
    fn contains(&self, v: Polynomial) -> bool {
        self.reduce(v).is_zero()
    }
}

fn check_arity(g: &LaurentPolynomial, generators: &[LaurentPolynomial]) -> Result<usize> {
    let n = g.arity();
    for f in generators {
        if f.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: f.arity() });
        }
    }
    Ok(n)
}

/// True iff `(x1...xn)^lambda F(g) = sum h_i F(f_i)` for some
/// `lambda <= lambda_max` and cofactors of total degree `<= degree_max`.
pub fn member_by_linear_algebra(
    g: &LaurentPolynomial,
    generators: &[LaurentPolynomial],
    cfg: &OracleConfig,
) -> Result<bool> {
    let n = check_arity(g, generators)?;
    if g.is_zero() {
        return Ok(true);
    }
    let cleared: Vec<Polynomial> = generators.iter().filter(|f| !f.is_zero()).map(|f| f.clear_factor()).collect();
    if cleared.is_empty() {
        return Ok(false);
    }
    // Columns of the Macaulay-style matrix: mu * F(f_i).
    let mut span = Echelon::new();
    for mu in monomials_up_to(n, cfg.degree_max) {
        for f in &cleared {
            span.insert(f.mul_term(&mu, &Rational::from_integer(1.into())));
        }
    }
    let fg = g.clear_factor();
    for lambda in 0..=cfg.lambda_max {
        let target = fg.mul_term(&Monomial(vec![lambda; n]), &Rational::from_integer(1.into()));
        if span.contains(target) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Univariate membership: `g ∈ <f_i>` iff the GCD of the `F(f_i)` divides
/// `F(g)`. Units `x^k` are invisible after clearing because every
/// `F(f_i)` has a nonzero constant term.
pub fn member_by_euclid(g: &LaurentPolynomial, generators: &[LaurentPolynomial]) -> Result<bool> {
    let n = check_arity(g, generators)?;
    if n != 1 {
        return Err(Error::NotUnivariate(n));
    }
    if g.is_zero() {
        return Ok(true);
    }
    let cleared: Vec<Polynomial> = generators.iter().map(LaurentPolynomial::clear_factor).collect();
    let d = univariate::gcd_all(&cleared)?;
    if d.is_zero() {
        return Ok(false);
    }
    univariate::divides(&d, &g.clear_factor())
}

/// Maximum total degree over a list of polynomials.
pub fn max_total_degree(polys: &[Polynomial]) -> u32 {
    polys.iter().map(Poly::total_degree).max().unwrap_or(0)
}
