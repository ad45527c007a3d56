//! Univariate helpers over `Q[x]`: Euclidean division and GCD, plus the
//! small integer utilities the atomicity tester needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

fn check(f: &Polynomial) -> Result<()> {
    if f.arity() != 1 {
        return Err(Error::NotUnivariate(f.arity()));
    }
    Ok(())
}

pub fn degree(f: &Polynomial) -> Option<u32> {
    f.leading_monomial().map(|m| m.0[0])
}

/// Euclidean division `a = q * b + r` with `deg r < deg b`.
pub fn div_rem(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    check(a)?;
    check(b)?;
    let (bm, bc) = b.leading_term().ok_or(Error::ZeroPolynomial("divisor"))?;
    let mut q = Vec::new();
    let mut r = a.clone();
    while let Some((rm, rc)) = r.leading_term() {
        if rm.0[0] < bm.0[0] {
            break;
        }
        let t = Monomial(vec![rm.0[0] - bm.0[0]]);
        let c = rc / bc;
        r = &r - &b.mul_term(&t, &c);
        q.push((t, c));
    }
    Ok((Polynomial::from_sorted_unchecked(1, q), r))
}

/// Monic GCD; `gcd(0, 0) = 0`.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    check(a)?;
    check(b)?;
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        let (_, r) = div_rem(&a, &b)?;
        a = b;
        // Keeping the remainder monic limits coefficient growth.
        b = r.monic();
    }
    Ok(a.monic())
}

/// Monic GCD of a list, folding pairwise. Zero for an all-zero list.
pub fn gcd_all<'a, I>(polys: I) -> Result<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut acc = Polynomial::zero(1);
    for p in polys {
        acc = gcd(&acc, p)?;
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

/// True iff `d` divides `f` in `Q[x]`.
pub fn divides(d: &Polynomial, f: &Polynomial) -> Result<bool> {
    if d.is_zero() {
        return Ok(f.is_zero());
    }
    Ok(div_rem(f, d)?.1.is_zero())
}

/// Exact value of `f` at `x = a`.
pub fn eval(f: &Polynomial, a: &Rational) -> Rational {
    // Horner over the sparse representation.
    let mut acc = Rational::zero();
    let mut last = match degree(f) {
        Some(d) => d,
        None => return acc,
    };
    for (m, c) in f.terms() {
        let e = m.0[0];
        acc *= pow(a, last - e);
        acc += c;
        last = e;
    }
    acc * pow(a, last)
}

fn pow(a: &Rational, e: u32) -> Rational {
    num_traits::pow(a.clone(), e as usize)
}

/// Integer coefficients (lowest degree first) of the primitive integer
/// multiple of `f`.
pub fn integer_coefficients(f: &Polynomial) -> Vec<BigInt> {
    let Some(d) = degree(f) else { return Vec::new() };
    let mut den = BigInt::one();
    for (_, c) in f.terms() {
        den = den.lcm(c.denom());
    }
    let mut out = vec![BigInt::zero(); d as usize + 1];
    for (m, c) in f.terms() {
        out[m.0[0] as usize] = c.numer() * (&den / c.denom());
    }
    let mut g = BigInt::zero();
    for c in &out {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in out.iter_mut() {
            *c /= &g;
        }
    }
    out
}

/// Trial division factorisation of `|n|`, giving up beyond `limit`.
/// Returns `(prime, multiplicity)` pairs, or `None` if a cofactor larger
/// than `limit^2` could not be split.
pub fn factor_small(n: &BigInt, limit: u64) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return None;
    }
    let mut p: u64 = 2;
    while p <= limit {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut k = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            k += 1;
        }
        if k > 0 {
            out.push((bp, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let bp = BigInt::from(p);
        if &bp * &bp <= n {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

/// All positive divisors of `|n|`, if `n` factors within `limit` and has at
/// most `max_count` divisors.
pub fn divisors(n: &BigInt, limit: u64, max_count: usize) -> Option<Vec<BigInt>> {
    let fs = factor_small(n, limit)?;
    let count: u64 = fs.iter().map(|(_, k)| u64::from(*k) + 1).product();
    if count.to_usize()? > max_count {
        return None;
    }
    let mut out = vec![BigInt::one()];
    for (p, k) in fs {
        let mut next = Vec::with_capacity(out.len() * (k as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=k {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Some(out)
}
