//! Bounded atomicity checking for univariate posynomials.
//!
//! `f` with `m = pi(f)` is atomic iff `F(Phi_{mn}(f))` is irreducible over
//! `Q` for every `n >= 1`. Eisenstein shapes (in particular `x^a + c` with
//! an Eisenstein prime for `c`) are certified atomic outright; otherwise
//! `n = 1..bound` is scanned with an incomplete reducibility tester.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::posy::{pi, Posynomial};
use crate::rational::Rational;
use crate::univariate::{self, degree, div_rem, integer_coefficients};

/// Trial division limit for the integer factorisations used below.
const FACTOR_LIMIT: u64 = 1 << 20;
/// Skip the rational root test when the candidate set gets larger than this.
const MAX_ROOT_CANDIDATES: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomicityVerdict {
    /// Every `F(Phi_{mn}(f))` is Eisenstein at `prime`.
    Atomic { prime: BigInt },
    /// `factor` is a nontrivial factor of `polynomial = F(Phi_{m*scale_index}(f))`.
    NotAtomic { scale_index: u64, factor: Polynomial, polynomial: Polynomial },
    /// No certificate and no factorisation found for `n <= bound`.
    UnknownUpTo { bound: u64 },
}

impl AtomicityVerdict {
    /// For `NotAtomic`, checks that the factor divides the polynomial with a
    /// non-unit cofactor, returning that cofactor.
    pub fn cofactor(&self) -> Option<Polynomial> {
        match self {
            AtomicityVerdict::NotAtomic { factor, polynomial, .. } => {
                let (q, r) = div_rem(polynomial, factor).ok()?;
                let df = degree(factor)?;
                let dq = degree(&q)?;
                (r.is_zero() && df > 0 && dq > 0).then_some(q)
            }
            _ => None,
        }
    }
}

impl fmt::Display for AtomicityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomicityVerdict::Atomic { prime } => write!(f, "atomic (Eisenstein p={prime})"),
            AtomicityVerdict::NotAtomic { scale_index, factor, polynomial } => {
                write!(f, "not atomic (n={scale_index}, factor {factor} of {polynomial})")
            }
            AtomicityVerdict::UnknownUpTo { bound } => write!(f, "unknown (no factorization found for n <= {bound})"),
        }
    }
}

pub fn atomic_status(f: &Posynomial, bound: u64) -> Result<AtomicityVerdict> {
    if f.arity() != 1 {
        return Err(Error::NotUnivariate(f.arity()));
    }
    if f.is_zero() || f.is_unit() {
        return Err(Error::UnitOrZero);
    }
    if let Some(prime) = eisenstein_prime(f)? {
        return Ok(AtomicityVerdict::Atomic { prime });
    }
    let m = pi(std::slice::from_ref(f))?;
    for n in 1..=bound {
        let scale = m.checked_mul(n).ok_or(Error::Overflow("scale index"))?;
        let p = f.phi(scale)?.to_laurent()?.clear_factor();
        if let Some(factor) = find_factor(&p) {
            return Ok(AtomicityVerdict::NotAtomic { scale_index: n, factor, polynomial: p });
        }
    }
    Ok(AtomicityVerdict::UnknownUpTo { bound })
}

/// Scaling by `Phi_{mn}` and clearing only spreads the exponents apart and
/// leaves the coefficient sequence unchanged, so an Eisenstein prime for
/// `F(Phi_m(f))` or its reversal certifies every `n` at once. This covers
/// binomials `x^a + c` with an Eisenstein prime for `c`.
fn eisenstein_prime(f: &Posynomial) -> Result<Option<BigInt>> {
    let m = pi(std::slice::from_ref(f))?;
    let p = f.phi(m)?.to_laurent()?.clear_factor();
    let coeffs: Vec<BigInt> = integer_coefficients(&p).into_iter().filter(|c| !c.is_zero()).collect();
    let mut reversed = coeffs.clone();
    reversed.reverse();
    Ok(eisenstein_for(&coeffs).or_else(|| eisenstein_for(&reversed)))
}

/// Smallest Eisenstein prime for the nonzero coefficients `c0, ..., lead`.
fn eisenstein_for(coeffs: &[BigInt]) -> Option<BigInt> {
    let (lead, rest) = coeffs.split_last()?;
    let c0 = rest.first()?;
    let mut g = BigInt::zero();
    for c in rest {
        g = g.gcd(c);
    }
    let factors = univariate::factor_small(&g, FACTOR_LIMIT)?;
    factors.into_iter().map(|(p, _)| p).find(|p| !(lead % p).is_zero() && !(c0 % (p * p)).is_zero())
}

/// Incomplete search for a nontrivial monic factor of `p`.
fn find_factor(p: &Polynomial) -> Option<Polynomial> {
    let d = degree(p)?;
    if d <= 1 {
        return None;
    }
    if let Some(r) = rational_root(p) {
        let lin = Polynomial::from_terms(1, [(vec![1], Rational::one()), (vec![0], -r)]).ok()?;
        return Some(lin);
    }
    // Degree 2 and 3 polynomials without rational roots are irreducible.
    if d <= 3 {
        return None;
    }
    if let Some(f) = binomial_factor(p) {
        return Some(f);
    }
    cyclotomic_factor(p)
}

/// A rational root by the rational root theorem, when the candidate set is
/// small enough to enumerate.
fn rational_root(p: &Polynomial) -> Option<Rational> {
    let coeffs = integer_coefficients(p);
    let lead = coeffs.last()?;
    // Strip the x-power so the constant term is nonzero.
    let low = coeffs.iter().position(|c| !c.is_zero())?;
    if low > 0 {
        return Some(Rational::zero());
    }
    let nums = univariate::divisors(&coeffs[0], FACTOR_LIMIT, MAX_ROOT_CANDIDATES)?;
    let dens = univariate::divisors(lead, FACTOR_LIMIT, MAX_ROOT_CANDIDATES)?;
    if nums.len() * dens.len() > MAX_ROOT_CANDIDATES * 4 {
        return None;
    }
    let mut candidates: Vec<Rational> = Vec::new();
    for q in &dens {
        for a in &nums {
            let r = Rational::new(a.clone(), q.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort_by(|a, b| a.abs().cmp(&b.abs()).then(b.cmp(a)));
    candidates.dedup();
    candidates.into_iter().find(|r| univariate::eval(p, r).is_zero())
}

/// `u x^k + v` with `-v/u` a perfect `e`-th power `r^e`, `e | k`, `e > 1`:
/// then `x^(k/e) - r` is a factor. For odd `e` the sign may be negative.
fn binomial_factor(p: &Polynomial) -> Option<Polynomial> {
    if p.len() != 2 {
        return None;
    }
    let (mk, u) = &p.terms()[0];
    let (m0, v) = &p.terms()[1];
    if m0.0[0] != 0 {
        return None;
    }
    let k = mk.0[0];
    let c = -(v / u);
    for e in 2..=k {
        if k % e != 0 {
            continue;
        }
        if let Some(r) = rational_root_of(&c, e) {
            let t = k / e;
            return Polynomial::from_terms(1, [(vec![t], Rational::one()), (vec![0], -r)]).ok();
        }
    }
    None
}

/// Exact `e`-th root of a rational, if it exists.
fn rational_root_of(c: &Rational, e: u32) -> Option<Rational> {
    let n = int_root(c.numer(), e)?;
    let d = int_root(c.denom(), e)?;
    Some(Rational::new(n, d))
}

fn int_root(n: &BigInt, e: u32) -> Option<BigInt> {
    if n.is_negative() {
        if e.is_multiple_of(2) {
            return None;
        }
        return int_root(&-n, e).map(|r| -r);
    }
    let r = n.nth_root(e);
    (num_traits::pow(r.clone(), e as usize) == *n).then_some(r)
}

/// Nontrivial `gcd(p, x^j - 1)` for small `j`; detects cyclotomic factors.
fn cyclotomic_factor(p: &Polynomial) -> Option<Polynomial> {
    let d = degree(p)?;
    let limit = (4 * d).clamp(12, 256);
    for j in 1..=limit {
        let xj = Polynomial::from_terms(1, [(vec![j], Rational::one()), (vec![0], -Rational::one())]).ok()?;
        let g = univariate::gcd(p, &xj).ok()?;
        let dg = degree(&g)?;
        if dg > 0 && dg < d {
            return Some(g);
        }
    }
    None
}
