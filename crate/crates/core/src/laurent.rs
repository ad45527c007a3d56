//! Laurent polynomials `Q[x1^±1, ..., xn^±1]`.
//!
//! Membership in a finitely generated ideal is decided by clearing
//! denominators with [`LaurentPolynomial::clear_factor`] and testing the
//! result against the saturation `J : (x1...xn)^inf` of the cleared
//! generators, computed as `<J, 1 - y*x1...xn> ∩ Q[x]` with a lex Gröbner
//! basis in which the auxiliary variable `y` is greatest.

use num_traits::{One, Zero};

use crate::division::divide;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, buchberger_with_cofactors, GroebnerBasis};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Poly, Polynomial};
use crate::rational::Rational;

pub type LaurentPolynomial = Poly<i64>;

/// Name of the auxiliary variable used during saturation. It does not
/// match the identifier grammar, so it can never clash with user input.
pub const ELIMINATION_VARIABLE: &str = "_y";

/// A point of `(Q \ {0})^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coordinates: Vec<Rational>) -> Result<Self> {
        if let Some(index) = coordinates.iter().position(Zero::is_zero) {
            return Err(Error::ZeroCoordinate { index });
        }
        Ok(Point(coordinates))
    }

    pub fn coordinates(&self) -> &[Rational] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

/// Witness for `g ∈ <f1..fk>`:
/// `(x1...xn)^lambda * F(g) = sum_i cofactors[i] * F(f_i)` in `Q[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub lambda: u32,
    pub cofactors: Vec<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipResult {
    pub member: bool,
    pub certificate: Option<Certificate>,
}

impl LaurentPolynomial {
    /// The map `F`: multiplies by the monomial `x^alpha` with
    /// `alpha_i = max_j(-s_ji)`, so that every variable's minimum exponent
    /// becomes zero. `F(0) = 0`.
    pub fn clear_factor(&self) -> Polynomial {
        let n = self.arity();
        let alpha: Vec<i64> = (0..n).map(|i| -self.min_exponent(i).unwrap_or(0)).collect();
        let terms = self
            .terms()
            .iter()
            .map(|(m, c)| {
                let e = m.0.iter().zip(&alpha).map(|(s, a)| (s + a) as u32).collect();
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_sorted_unchecked(n, terms)
    }

    /// Exponent vector `alpha` used by [`clear_factor`](Self::clear_factor).
    pub fn clearing_exponents(&self) -> Vec<i64> {
        (0..self.arity()).map(|i| -self.min_exponent(i).unwrap_or(0)).collect()
    }

    /// Units of the Laurent ring are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.is_monomial()
    }

    pub fn from_polynomial(f: &Polynomial) -> Self {
        let terms =
            f.terms().iter().map(|(m, c)| (Monomial(m.0.iter().map(|&e| i64::from(e)).collect()), c.clone())).collect();
        Poly::from_sorted_unchecked(f.arity(), terms)
    }

    /// Value at a point of the torus; negative powers are inverses.
    pub fn evaluate(&self, p: &Point) -> Result<Rational> {
        if p.arity() != self.arity() {
            return Err(Error::ArityMismatch { expected: self.arity(), found: p.arity() });
        }
        let mut acc = Rational::zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (a, &e) in p.0.iter().zip(&m.0) {
                let e = i32::try_from(e).map_err(|_| Error::Overflow("evaluation exponent"))?;
                t *= a.pow(e);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Multiplies by `(x1...xn)^k`.
    pub fn shift_all(&self, k: i64) -> Self {
        let m = Monomial(vec![k; self.arity()]);
        self.mul_term(&m, &Rational::one())
    }
}

/// True iff every generator vanishes at `p`. The empty set vanishes everywhere.
pub fn in_variety(p: &Point, generators: &[LaurentPolynomial]) -> Result<bool> {
    for f in generators {
        if !f.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn common_arity(g: Option<&LaurentPolynomial>, generators: &[LaurentPolynomial]) -> Result<usize> {
    let n = g.map(Poly::arity).or_else(|| generators.first().map(Poly::arity)).unwrap_or(0);
    for f in generators {
        if f.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: f.arity() });
        }
    }
    Ok(n)
}

/// `1 - y * x1...xn` in `Q[x1..xn, y]`.
fn rabinowitsch(n: usize) -> Polynomial {
    let one = Polynomial::one(n + 1);
    let prod = Polynomial::monomial(Monomial(vec![1; n + 1]), Rational::one());
    &one - &prod
}

fn saturation_order(n: usize) -> MonomialOrder {
    MonomialOrder::generic(n)
        .with_greatest(ELIMINATION_VARIABLE)
        .expect("generic names never clash with the elimination variable")
}

fn kept_names(order: &MonomialOrder, n: usize) -> Vec<&str> {
    order.variables()[..n].iter().map(String::as_str).collect()
}

/// Gröbner basis of `<F(f1), ..., F(fk)> : (x1...xn)^inf` in `Q[x1..xn]`,
/// with the generic variable names `x1..xn`.
pub fn saturation_basis(cleared: &[Polynomial], arity: usize) -> Result<GroebnerBasis> {
    for f in cleared {
        if f.arity() != arity {
            return Err(Error::ArityMismatch { expected: arity, found: f.arity() });
        }
    }
    let order = saturation_order(arity);
    let mut gens: Vec<Polynomial> = cleared.iter().map(|f| f.extend_arity(1)).collect();
    gens.push(rabinowitsch(arity));
    let basis = buchberger(&gens, &order)?;
    basis.eliminate(&kept_names(&order, arity))
}

/// Saturation basis of the ideal generated by Laurent `generators`.
pub fn saturate(generators: &[LaurentPolynomial]) -> Result<GroebnerBasis> {
    let n = common_arity(None, generators)?;
    let cleared: Vec<Polynomial> = generators.iter().map(LaurentPolynomial::clear_factor).collect();
    saturation_basis(&cleared, n)
}

/// Decides `g ∈ <generators>` in the Laurent ring.
pub fn member_laurent(g: &LaurentPolynomial, generators: &[LaurentPolynomial]) -> Result<MembershipResult> {
    let n = common_arity(Some(g), generators)?;
    if generators.iter().all(Poly::is_zero) {
        return Ok(MembershipResult { member: g.is_zero(), certificate: None });
    }
    let basis = saturate(generators)?;
    let member = basis.contains(&g.clear_factor())?;
    debug_assert_eq!(basis.order().arity(), n);
    Ok(MembershipResult { member, certificate: None })
}

/// As [`member_laurent`], producing a [`Certificate`] for positive answers.
pub fn member_laurent_with_certificate(
    g: &LaurentPolynomial,
    generators: &[LaurentPolynomial],
) -> Result<MembershipResult> {
    let n = common_arity(Some(g), generators)?;
    let k = generators.len();
    if g.is_zero() {
        let cert = Certificate { lambda: 0, cofactors: vec![Polynomial::zero(n); k] };
        return Ok(MembershipResult { member: true, certificate: Some(cert) });
    }
    // Cofactor tracking is far more expensive than the decision itself,
    // so only pay for it on positive answers.
    if !member_laurent(g, generators)?.member {
        return Ok(MembershipResult { member: false, certificate: None });
    }

    let order = saturation_order(n);
    let mut gens: Vec<Polynomial> = generators.iter().map(|f| f.clear_factor().extend_arity(1)).collect();
    gens.push(rabinowitsch(n));
    let ext = buchberger_with_cofactors(&gens, &order)?;
    let keep = ext.basis.elimination_indices(&kept_names(&order, n))?;
    let b1: Vec<Polynomial> = keep.iter().map(|&j| ext.basis.elements()[j].clone()).collect();

    let fg = g.clear_factor().extend_arity(1);
    let division = divide(&fg, &b1, &order)?;
    debug_assert!(division.remainder.is_zero());

    // F(g) = sum_j q_j b_j = sum_i H_i F(f_i) + H_0 (1 - y x1..xn).
    let mut big_h = vec![Polynomial::zero(n + 1); k];
    for (q, &j) in division.quotients.iter().zip(&keep) {
        if q.is_zero() {
            continue;
        }
        for (i, h) in big_h.iter_mut().enumerate() {
            *h = &*h + &(q * &ext.cofactors[j][i]);
        }
    }
    // Substituting y = (x1..xn)^-1 kills the Rabinowitsch term.
    let laurent: Vec<LaurentPolynomial> = big_h.iter().map(|h| substitute_inverse(h, n)).collect();
    let lambda = laurent
        .iter()
        .flat_map(|h| h.terms().iter().flat_map(|(m, _)| m.0.iter().map(|&e| -e)))
        .max()
        .unwrap_or(0)
        .max(0);
    let cofactors = laurent
        .iter()
        .map(|h| {
            h.shift_all(lambda)
                .try_map_exponents(n, |e| Ok(e.iter().map(|&x| x as u32).collect()))
                .expect("shifted cofactor has nonnegative exponents")
        })
        .collect();
    let lambda = u32::try_from(lambda).map_err(|_| Error::Overflow("certificate exponent"))?;
    let cert = Certificate { lambda, cofactors };
    Ok(MembershipResult { member: true, certificate: Some(cert) })
}

/// `h(x, y)` with `y` replaced by `(x1...xn)^-1`.
fn substitute_inverse(h: &Polynomial, n: usize) -> LaurentPolynomial {
    let terms = h.terms().iter().map(|(m, c)| {
        let y = i64::from(m.0[n]);
        (m.0[..n].iter().map(|&e| i64::from(e) - y).collect(), c.clone())
    });
    Poly::from_terms(n, terms).expect("arity is consistent")
}

/// `I` is proper iff `1 ∉ I`.
pub fn is_proper(generators: &[LaurentPolynomial]) -> Result<bool> {
    let n = common_arity(None, generators)?;
    Ok(!member_laurent(&LaurentPolynomial::one(n), generators)?.member)
}

impl Certificate {
    /// Re-multiplies the identity `(x1...xn)^lambda F(g) = sum h_i F(f_i)`.
    pub fn verify(&self, g: &LaurentPolynomial, generators: &[LaurentPolynomial]) -> bool {
        if self.cofactors.len() != generators.len() {
            return false;
        }
        let n = g.arity();
        if generators.iter().any(|f| f.arity() != n) || self.cofactors.iter().any(|h| h.arity() != n) {
            return false;
        }
        let lhs = g.clear_factor().mul_term(&Monomial(vec![self.lambda; n]), &Rational::one());
        let mut rhs = Polynomial::zero(n);
        for (h, f) in self.cofactors.iter().zip(generators) {
            rhs = &rhs + &(h * &f.clear_factor());
        }
        lhs == rhs
    }

    /// Cofactors `c_i` with `g = sum c_i f_i` in the Laurent ring.
    pub fn ring_cofactors(&self, g: &LaurentPolynomial, generators: &[LaurentPolynomial]) -> Vec<LaurentPolynomial> {
        let ag = g.clearing_exponents();
        let lambda = i64::from(self.lambda);
        self.cofactors
            .iter()
            .zip(generators)
            .map(|(h, f)| {
                let af = f.clearing_exponents();
                let shift: Vec<i64> = af.iter().zip(&ag).map(|(a, b)| a - b - lambda).collect();
                LaurentPolynomial::from_polynomial(h).mul_term(&Monomial(shift), &Rational::one())
            })
            .collect()
    }
}
