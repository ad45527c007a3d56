//! Multivariate division and S-polynomials in `Q[x1..xn]` under lex order.

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};

/// Result of dividing `f` by an ordered list of divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Divides `f` by `divisors`, trying divisors in list order at every step.
///
/// The result satisfies `f = sum(q_i * d_i) + r` and no term of `r` is
/// divisible by a leading monomial of any divisor.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], order: &MonomialOrder) -> Result<Division> {
    order.check(f)?;
    for d in divisors {
        order.check(d)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial("divisor"));
        }
    }
    let arity = f.arity();
    let mut quotients: Vec<Vec<(Monomial<u32>, _)>> = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((m, c)) = p.leading_term().cloned() {
        let hit = divisors.iter().enumerate().find(|(_, d)| d.leading_monomial().unwrap().divides(&m));
        match hit {
            Some((i, d)) => {
                let (dm, dc) = d.leading_term().unwrap();
                let t = dm.quotient_of(&m);
                let q = &c / dc;
                p = &p - &d.mul_term(&t, &q);
                quotients[i].push((t, q));
            }
            None => {
                p = Polynomial::from_sorted_unchecked(arity, p.into_terms().split_off(1));
                remainder.push((m, c));
            }
        }
    }
    // Quotient terms are produced in strictly decreasing order per divisor.
    let quotients = quotients.into_iter().map(|terms| Polynomial::from_sorted_unchecked(arity, terms)).collect();
    Ok(Division { quotients, remainder: Polynomial::from_sorted_unchecked(arity, remainder) })
}

/// `S(f, g) = (L / lt(f)) f - (L / lt(g)) g` with `L` the lcm of the
/// leading monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
    order.check(f)?;
    order.check(g)?;
    let (fm, fc) = f.leading_term().ok_or(Error::ZeroPolynomial("S-polynomial input"))?;
    let (gm, gc) = g.leading_term().ok_or(Error::ZeroPolynomial("S-polynomial input"))?;
    let l = fm.lcm(gm);
    let lf = f.mul_term(&fm.quotient_of(&l), &fc.recip());
    let lg = g.mul_term(&gm.quotient_of(&l), &gc.recip());
    Ok(&lf - &lg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_polynomial, RingContext, RingKind};

    fn ctx(vars: &[&str]) -> RingContext {
        RingContext::new(vars.iter().copied(), RingKind::Polynomial).unwrap()
    }

    fn pp(s: &str, c: &RingContext) -> Polynomial {
        parse_polynomial(s, c).unwrap()
    }

    #[test]
    fn exact_division() {
        let c = ctx(&["x"]);
        let ord = c.order();
        let d = divide(&pp("x^2 - 1", &c), &[pp("x - 1", &c)], ord).unwrap();
        assert_eq!(d.quotients, vec![pp("x + 1", &c)]);
        assert!(d.remainder.is_zero());
    }

    #[test]
    fn degree_too_low() {
        let c = ctx(&["x"]);
        let d = divide(&pp("x", &c), &[pp("x^2", &c)], c.order()).unwrap();
        assert_eq!(d.quotients, vec![Polynomial::zero(1)]);
        assert_eq!(d.remainder, pp("x", &c));
    }

    #[test]
    fn two_divisors_hand_computed() {
        // xy = y(x - 1) + 1(y - 1) + 1
        let c = ctx(&["x", "y"]);
        let f = pp("x*y", &c);
        let divs = [pp("x - 1", &c), pp("y - 1", &c)];
        let d = divide(&f, &divs, c.order()).unwrap();
        assert_eq!(d.quotients, vec![pp("y", &c), pp("1", &c)]);
        assert_eq!(d.remainder, pp("1", &c));
        let back = &(&(&d.quotients[0] * &divs[0]) + &(&d.quotients[1] * &divs[1])) + &d.remainder;
        assert_eq!(back, f);
    }

    #[test]
    fn zero_divisor_rejected() {
        let c = ctx(&["x"]);
        let r = divide(&pp("x", &c), &[Polynomial::zero(1)], c.order());
        assert_eq!(r, Err(Error::ZeroPolynomial("divisor")));
    }

    #[test]
    fn s_polynomial_examples() {
        let c = ctx(&["x"]);
        let s = s_polynomial(&pp("x^2 - 1", &c), &pp("x - 1", &c), c.order()).unwrap();
        assert_eq!(s, pp("x - 1", &c));
        let f = pp("x^3 + 2*x + 5", &c);
        assert!(s_polynomial(&f, &f, c.order()).unwrap().is_zero());

        let c2 = ctx(&["x", "y"]);
        let s = s_polynomial(&pp("x", &c2), &pp("y", &c2), c2.order()).unwrap();
        assert!(s.is_zero());
        assert!(s_polynomial(&Polynomial::zero(2), &pp("y", &c2), c2.order()).is_err());
    }
}
