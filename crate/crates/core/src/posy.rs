//! Posynomials with rational exponents, `Pos(Q, Q)[x1..xn]`.
//!
//! Everything reduces to the Laurent ring through the scaling maps
//! `Phi_m`, which multiply every exponent by `m`. For a finite family, the
//! least `m` making all members Laurent is the lcm of the exponent
//! denominators, see [`pi`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::laurent::{member_laurent, member_laurent_with_certificate, LaurentPolynomial};
use crate::poly::{Monomial, Poly, Polynomial};
use crate::rational::Rational;
use crate::univariate;

pub type Posynomial = Poly<Rational>;

/// Least `m >= 1` such that every `Phi_m(f)` has integer exponents.
/// The zero posynomial contributes 1.
pub fn pi(fs: &[Posynomial]) -> Result<u64> {
    if fs.is_empty() {
        return Err(Error::Empty("posynomial list"));
    }
    let mut acc = BigInt::one();
    for f in fs {
        for (m, _) in f.terms() {
            for e in &m.0 {
                acc = acc.lcm(e.denom());
            }
        }
    }
    acc.to_u64().ok_or(Error::Overflow("pi"))
}

impl Posynomial {
    /// `Phi_m`: multiplies every exponent by `m`.
    pub fn phi(&self, m: u64) -> Result<Posynomial> {
        if m == 0 {
            return Err(Error::InvalidScale(m));
        }
        let s = Rational::from_integer(BigInt::from(m));
        let terms = self
            .terms()
            .iter()
            .map(|(mono, c)| (Monomial(mono.0.iter().map(|e| e * &s).collect()), c.clone()))
            .collect();
        Ok(Poly::from_sorted_unchecked(self.arity(), terms))
    }

    /// Inverse scaling: divides every exponent by `s`.
    pub fn unscale(&self, s: u64) -> Result<Posynomial> {
        if s == 0 {
            return Err(Error::InvalidScale(s));
        }
        let s = Rational::from_integer(BigInt::from(s));
        let terms = self
            .terms()
            .iter()
            .map(|(mono, c)| (Monomial(mono.0.iter().map(|e| e / &s).collect()), c.clone()))
            .collect();
        Ok(Poly::from_sorted_unchecked(self.arity(), terms))
    }

    /// Largest exponent of variable `index`; for one variable this is the
    /// degree of the ordered form.
    pub fn degree(&self, index: usize) -> Result<Rational> {
        if index >= self.arity() {
            return Err(Error::VariableIndex { index, arity: self.arity() });
        }
        self.max_exponent(index).ok_or(Error::ZeroPolynomial("degree argument"))
    }

    /// Units are exactly the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.is_monomial()
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.terms().iter().all(|(m, _)| m.0.iter().all(|e| e.is_integer()))
    }

    pub fn to_laurent(&self) -> Result<LaurentPolynomial> {
        let terms = self
            .terms()
            .iter()
            .map(|(m, c)| {
                let e =
                    m.0.iter()
                        .map(|e| {
                            if !e.is_integer() {
                                return Err(Error::InadmissibleExponent(format!("{e} is not an integer")));
                            }
                            e.to_integer().to_i64().ok_or(Error::Overflow("Laurent exponent"))
                        })
                        .collect::<Result<Vec<i64>>>()?;
                Ok((Monomial(e), c.clone()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_sorted_unchecked(self.arity(), terms))
    }

    pub fn from_laurent(f: &LaurentPolynomial) -> Self {
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| (Monomial(m.0.iter().map(|&e| Rational::from_integer(e.into())).collect()), c.clone()))
            .collect();
        Poly::from_sorted_unchecked(f.arity(), terms)
    }

    pub fn from_polynomial(f: &Polynomial) -> Self {
        Self::from_laurent(&LaurentPolynomial::from_polynomial(f))
    }
}

/// Witness for `g ∈ <f1..fk>` in the posynomial ring, pulled back along
/// `Phi_scale`:
/// `(x1...xn)^(lambda/scale) * P(g) = sum_i cofactors[i] * P(f_i)` where
/// `P(f) = F(Phi_scale(f))` with exponents divided by `scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosyCertificate {
    pub scale: u64,
    pub lambda: u32,
    pub cofactors: Vec<Posynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosyMembership {
    pub member: bool,
    pub certificate: Option<PosyCertificate>,
}

fn scaled_family(
    g: &Posynomial,
    generators: &[Posynomial],
) -> Result<(u64, LaurentPolynomial, Vec<LaurentPolynomial>)> {
    for f in generators {
        if f.arity() != g.arity() {
            return Err(Error::ArityMismatch { expected: g.arity(), found: f.arity() });
        }
    }
    let mut all = vec![g.clone()];
    all.extend_from_slice(generators);
    let s = pi(&all)?;
    let lg = g.phi(s)?.to_laurent()?;
    let lf = generators.iter().map(|f| f.phi(s)?.to_laurent()).collect::<Result<Vec<_>>>()?;
    Ok((s, lg, lf))
}

/// Decides `g ∈ <generators>` via `Phi_s` with `s = pi(g, generators)`.
pub fn member_posy(g: &Posynomial, generators: &[Posynomial]) -> Result<PosyMembership> {
    let (_, lg, lf) = scaled_family(g, generators)?;
    let r = member_laurent(&lg, &lf)?;
    Ok(PosyMembership { member: r.member, certificate: None })
}

pub fn member_posy_with_certificate(g: &Posynomial, generators: &[Posynomial]) -> Result<PosyMembership> {
    let (s, lg, lf) = scaled_family(g, generators)?;
    let r = member_laurent_with_certificate(&lg, &lf)?;
    let certificate = match r.certificate {
        Some(c) => Some(PosyCertificate {
            scale: s,
            lambda: c.lambda,
            cofactors: c.cofactors.iter().map(|h| Posynomial::from_polynomial(h).unscale(s)).collect::<Result<_>>()?,
        }),
        None => None,
    };
    Ok(PosyMembership { member: r.member, certificate })
}

/// `F(Phi_s(f))` pulled back by `1/s`.
fn cleared_pullback(f: &Posynomial, s: u64) -> Result<Posynomial> {
    Posynomial::from_polynomial(&f.phi(s)?.to_laurent()?.clear_factor()).unscale(s)
}

impl PosyCertificate {
    pub fn verify(&self, g: &Posynomial, generators: &[Posynomial]) -> bool {
        self.check(g, generators).unwrap_or(false)
    }

    fn check(&self, g: &Posynomial, generators: &[Posynomial]) -> Result<bool> {
        if self.cofactors.len() != generators.len() {
            return Ok(false);
        }
        let n = g.arity();
        let shift = Rational::new(BigInt::from(self.lambda), BigInt::from(self.scale));
        let lhs = cleared_pullback(g, self.scale)?.mul_term(&Monomial(vec![shift; n]), &Rational::one());
        let mut rhs = Posynomial::zero(n);
        for (h, f) in self.cofactors.iter().zip(generators) {
            rhs = rhs.checked_add(&h.checked_mul(&cleared_pullback(f, self.scale)?)?)?;
        }
        Ok(lhs == rhs)
    }

    /// Cofactors `c_i` with `g = sum c_i f_i` in the posynomial ring.
    pub fn ring_cofactors(&self, g: &Posynomial, generators: &[Posynomial]) -> Result<Vec<Posynomial>> {
        let s = self.scale;
        let sr = Rational::from_integer(BigInt::from(s));
        let alpha = |f: &Posynomial| -> Result<Vec<Rational>> {
            let a = f.phi(s)?.to_laurent()?.clearing_exponents();
            Ok(a.into_iter().map(|e| Rational::from_integer(e.into()) / &sr).collect())
        };
        let ag = alpha(g)?;
        let lam = Rational::new(BigInt::from(self.lambda), BigInt::from(s));
        self.cofactors
            .iter()
            .zip(generators)
            .map(|(h, f)| {
                let af = alpha(f)?;
                let shift: Vec<Rational> = af.iter().zip(&ag).map(|(a, b)| a - b - &lam).collect();
                Ok(h.mul_term(&Monomial(shift), &Rational::one()))
            })
            .collect()
    }
}

/// A single generator of the univariate ideal `<generators>`.
///
/// With `s = pi(generators)` this is the monic GCD of the `F(Phi_s(f_i))`
/// with every exponent divided by `s`.
pub fn principal_generator(generators: &[Posynomial]) -> Result<Posynomial> {
    if let Some(f) = generators.iter().find(|f| f.arity() != 1) {
        return Err(Error::NotUnivariate(f.arity()));
    }
    if generators.iter().all(Poly::is_zero) {
        return Err(Error::ZeroPolynomial("every generator"));
    }
    let s = pi(generators)?;
    let cleared = generators
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| Ok(f.phi(s)?.to_laurent()?.clear_factor()))
        .collect::<Result<Vec<Polynomial>>>()?;
    let d = univariate::gcd_all(&cleared)?;
    Posynomial::from_polynomial(&d).unscale(s)
}

/// Checks `Phi_m(f)` has integer exponents by building it; used by tests
/// of the divisibility law.
pub fn phi_is_laurent(f: &Posynomial, m: u64) -> Result<bool> {
    Ok(f.phi(m)?.has_integer_exponents())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse, RingContext, RingKind};
    use crate::rational::{frac, int};

    fn c() -> RingContext {
        RingContext::new(["x"], RingKind::PosyQ).unwrap()
    }

    fn p(s: &str) -> Posynomial {
        parse(s, &c()).unwrap()
    }

    fn ps(list: &[&str]) -> Vec<Posynomial> {
        list.iter().map(|s| p(s)).collect()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi(&ps(&["x^(1/2) + x^(1/3)"])).unwrap(), 6);
        assert_eq!(pi(&ps(&["x - 1"])).unwrap(), 1);
        assert_eq!(pi(&ps(&["x^(1/2) - 1", "x^(1/3) - 1"])).unwrap(), 6);
        assert_eq!(pi(&[Posynomial::zero(1)]).unwrap(), 1);
        assert_eq!(pi(&[]), Err(Error::Empty("posynomial list")));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(p("x^(1/2) - 1").phi(2).unwrap(), p("x - 1"));
        let f = p("x^(3/7) + 2*x^-1");
        assert_eq!(f.phi(1).unwrap(), f);
        assert_eq!(p("x^(1/2) + x^(1/3)").phi(6).unwrap(), p("x^3 + x^2"));
        assert_eq!(f.phi(0), Err(Error::InvalidScale(0)));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(p("x^2 + x^(1/2)").degree(0).unwrap(), int(2));
        assert_eq!(p("1").degree(0).unwrap(), int(0));
        assert_eq!(p("x^-1 + x^-2").degree(0).unwrap(), int(-1));
        assert_eq!(p("x^(-1/2) + x^(-3/4)").degree(0).unwrap(), frac(-1, 2));
        assert!(Posynomial::zero(1).degree(0).is_err());
        assert!(p("x").degree(1).is_err());
    }

    #[test]
    fn unit_examples() {
        assert!(p("5*x^(3/7)").is_unit());
        assert!(!p("x^(1/2) + 1").is_unit());
        assert!(!Posynomial::zero(1).is_unit());
    }

    #[test]
    fn membership_examples() {
        assert!(!member_posy(&p("x^(1/2) - 1"), &ps(&["x^(1/3) - 1", "x^(1/5) - 1"])).unwrap().member);
        assert!(member_posy(&p("x^(1/2) - 1"), &ps(&["x^(1/4) - 1"])).unwrap().member);
        assert!(member_posy(&p("x - 1"), &ps(&["x^(1/2) - 1"])).unwrap().member);
        assert!(!member_posy(&p("x^(1/2) - 1"), &ps(&["x - 1"])).unwrap().member);
    }

    #[test]
    fn certificates_pull_back() {
        let cases = [
            ("x^(1/2) - 1", vec!["x^(1/4) - 1"]),
            ("x - 1", vec!["x^(1/2) - 1", "x^(1/3) - 1"]),
            ("1", vec!["x^(1/2) - 1", "x^(1/2) + 1"]),
            ("x^(-1/3) - x^(2/3)", vec!["x^(1/3) - 1"]),
        ];
        for (g, gens) in cases {
            let g = p(g);
            let gens = ps(&gens);
            let r = member_posy_with_certificate(&g, &gens).unwrap();
            assert!(r.member);
            let cert = r.certificate.unwrap();
            assert!(cert.verify(&g, &gens));
            let cofs = cert.ring_cofactors(&g, &gens).unwrap();
            let mut sum = Posynomial::zero(1);
            for (h, f) in cofs.iter().zip(&gens) {
                sum = &sum + &(h * f);
            }
            assert_eq!(sum, g);
        }
    }

    #[test]
    fn principal_generator_examples() {
        assert_eq!(principal_generator(&ps(&["x - 1", "x^(1/2) - 1"])).unwrap(), p("x^(1/2) - 1"));
        assert_eq!(principal_generator(&ps(&["2*x^2 - 4"])).unwrap(), p("x^2 - 2"));
        assert_eq!(principal_generator(&ps(&["x - 1", "x + 1"])).unwrap(), p("1"));
        assert!(principal_generator(&[Posynomial::zero(1)]).is_err());
    }
}
