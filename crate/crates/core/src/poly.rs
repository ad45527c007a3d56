//! Sparse multivariate posynomials with exact rational coefficients.
//!
//! A [`Poly<E>`] is a finite map from exponent vectors to nonzero
//! coefficients. The exponent scalar `E` selects the ring:
//!
//! * `u32` for ordinary polynomials in `Q[x1..xn]`,
//! * `i64` for Laurent polynomials,
//! * [`Rational`] for posynomials with rational exponents.
//!
//! Terms are stored sorted in descending lexicographic order, where the
//! *last* variable of the declared sequence is the most significant one
//! (the convention `x1 < x2 < ... < xn`). Two polynomials are equal iff
//! their term vectors are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Scalar type of an exponent vector entry.
pub trait Exponent: Clone + Ord + fmt::Debug + std::hash::Hash {
    fn zero_exponent() -> Self;
    fn is_zero_exponent(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn to_rational(&self) -> Rational;
}

impl Exponent for u32 {
    fn zero_exponent() -> Self {
        0
    }
    fn is_zero_exponent(&self) -> bool {
        *self == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("polynomial exponent overflow")
    }
    fn to_rational(&self) -> Rational {
        Rational::from_integer((*self).into())
    }
}

impl Exponent for i64 {
    fn zero_exponent() -> Self {
        0
    }
    fn is_zero_exponent(&self) -> bool {
        *self == 0
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("Laurent exponent overflow")
    }
    fn to_rational(&self) -> Rational {
        Rational::from_integer((*self).into())
    }
}

impl Exponent for Rational {
    fn zero_exponent() -> Self {
        Zero::zero()
    }
    fn is_zero_exponent(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
}

/// Exponent vector ordered lexicographically with the last entry most
/// significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial<E>(pub Vec<E>);

impl<E: Exponent> Monomial<E> {
    pub fn one(arity: usize) -> Self {
        Monomial(vec![E::zero_exponent(); arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[E] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(Exponent::is_zero_exponent)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.plus(b)).collect())
    }
}

impl Monomial<u32> {
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl<E: Exponent> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl<E: Exponent> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Term<E> = (Monomial<E>, Rational);

/// Sparse posynomial in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    arity: usize,
    terms: Vec<Term<E>>,
}

/// Element of `Q[x1..xn]`.
pub type Polynomial = Poly<u32>;

impl<E: Exponent> Poly<E> {
    pub fn zero(arity: usize) -> Self {
        Poly { arity, terms: Vec::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(arity), c)
    }

    pub fn monomial(m: Monomial<E>, c: Rational) -> Self {
        let arity = m.arity();
        if c.is_zero() {
            Poly::zero(arity)
        } else {
            Poly { arity, terms: vec![(m, c)] }
        }
    }

    /// The `index`-th variable to the first power.
    pub fn variable(arity: usize, index: usize, one: E) -> Self {
        let mut m = Monomial::one(arity);
        m.0[index] = one;
        Self::monomial(m, Rational::one())
    }

    /// Builds a canonical polynomial from arbitrary terms, merging exponent
    /// vectors that coincide and dropping zero coefficients.
    pub fn from_terms<I>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<E>, Rational)>,
    {
        let mut acc: BTreeMap<Monomial<E>, Rational> = BTreeMap::new();
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, found: exps.len() });
            }
            *acc.entry(Monomial(exps)).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(arity, acc))
    }

    fn from_map(arity: usize, acc: BTreeMap<Monomial<E>, Rational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Poly { arity, terms }
    }

    /// Wraps terms that are already sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted_unchecked(arity: usize, terms: Vec<Term<E>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { arity, terms }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[Term<E>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<E>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// True iff the support has exactly one element.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term<E>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial<E>> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Coefficient of `m`, zero if absent.
    pub fn coeff(&self, m: &Monomial<E>) -> Rational {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.arity));
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return Ok(self.mul_term(m, c));
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Ok(other.mul_term(m, c));
        }
        let mut acc: BTreeMap<Monomial<E>, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Ok(Self::from_map(self.arity, acc))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => match ma.cmp(mb) {
                    Ordering::Greater => {
                        out.push(((*ma).clone(), (*ca).clone()));
                        a.next();
                    }
                    Ordering::Less => {
                        let c = if negate { -(*cb).clone() } else { (*cb).clone() };
                        out.push(((*mb).clone(), c));
                        b.next();
                    }
                    Ordering::Equal => {
                        let c = if negate { ca - cb } else { ca + cb };
                        if !c.is_zero() {
                            out.push(((*ma).clone(), c));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some((m, c)), None) => {
                    out.push(((*m).clone(), (*c).clone()));
                    a.next();
                }
                (None, Some((m, c))) => {
                    let c = if negate { -(*c).clone() } else { (*c).clone() };
                    out.push(((*m).clone(), c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Poly { arity: self.arity, terms: out }
    }

    /// Multiplies by the single term `c * m`. Order is preserved because
    /// lex orders are compatible with multiplication.
    pub fn mul_term(&self, m: &Monomial<E>, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero(self.arity);
        }
        let terms = self.terms.iter().map(|(k, d)| (k.mul(m), d * c)).collect();
        Poly { arity: self.arity, terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul_term(&Monomial::one(self.arity), c)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Poly::one(self.arity);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every exponent vector. The result is re-canonicalised,
    /// so `f` need not be injective or order preserving.
    pub fn try_map_exponents<F, T>(&self, arity: usize, mut f: F) -> Result<Poly<T>>
    where
        T: Exponent,
        F: FnMut(&[E]) -> Result<Vec<T>>,
    {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((f(&m.0)?, c.clone()));
        }
        Poly::from_terms(arity, terms)
    }

    /// Largest exponent of variable `index` over the support.
    pub fn max_exponent(&self, index: usize) -> Option<E> {
        self.terms.iter().map(|(m, _)| m.0[index].clone()).max()
    }

    pub fn min_exponent(&self, index: usize) -> Option<E> {
        self.terms.iter().map(|(m, _)| m.0[index].clone()).min()
    }
}

impl Polynomial {
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Embeds into a ring with `extra` additional (greater) variables.
    pub fn extend_arity(&self, extra: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.extend(std::iter::repeat_n(0, extra));
                (Monomial(e), c.clone())
            })
            .collect();
        Poly { arity: self.arity + extra, terms }
    }
}

impl<E: Exponent> Neg for &Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Poly { arity: self.arity, terms }
    }
}

impl<E: Exponent> Neg for Poly<E> {
    type Output = Poly<E>;
    fn neg(self) -> Poly<E> {
        -&self
    }
}

// The operator impls panic on arity mismatch; use the `checked_*` methods
// where arities come from untrusted input.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<E: Exponent> $tr<&Poly<E>> for &Poly<E> {
            type Output = Poly<E>;
            fn $method(self, rhs: &Poly<E>) -> Poly<E> {
                self.$checked(rhs).expect("arity mismatch")
            }
        }
        impl<E: Exponent> $tr<Poly<E>> for Poly<E> {
            type Output = Poly<E>;
            fn $method(self, rhs: Poly<E>) -> Poly<E> {
                (&self).$checked(&rhs).expect("arity mismatch")
            }
        }
        impl<E: Exponent> $tr<&Poly<E>> for Poly<E> {
            type Output = Poly<E>;
            fn $method(self, rhs: &Poly<E>) -> Poly<E> {
                (&self).$checked(rhs).expect("arity mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<E: Exponent> fmt::Display for Poly<E> {
    /// Renders with default variable names `x1..xn`; see
    /// [`crate::parser::format`] for named output.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.arity).map(|i| format!("x{i}")).collect();
        f.write_str(&crate::parser::format_with_names(self, &names))
    }
}
