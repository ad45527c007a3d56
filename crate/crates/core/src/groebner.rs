//! Reduced Gröbner bases under lex order.
//!
//! The engine works on primitive integer polynomials (fraction-free
//! reduction with periodic content removal) and only converts to monic
//! rational polynomials at the end. Pairs are selected by the normal strategy and
//! pruned with the Gebauer–Möller update, which includes the coprime leading
//! monomial criterion. Optionally the engine records, for each basis
//! element, cofactors expressing it in terms of the input generators.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::division::divide;
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::rational::Rational;

/// Reduced, monic Gröbner basis sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    elements: Vec<Polynomial>,
    order: MonomialOrder,
}

/// A Gröbner basis together with cofactors:
/// `basis.elements()[j] = sum_i cofactors[j][i] * generators[i]`.
#[derive(Clone, Debug)]
pub struct ExtendedBasis {
    pub basis: GroebnerBasis,
    pub cofactors: Vec<Vec<Polynomial>>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True for the basis of the zero ideal.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True iff the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_one()
    }

    /// Normal form of `f`. Zero iff `f` lies in the ideal.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(divide(f, &self.elements, &self.order)?.remainder)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Positions of the elements that survive elimination down to
    /// `keep`, after checking that `keep` is exactly the set of smallest
    /// variables of the order.
    pub fn elimination_indices(&self, keep: &[&str]) -> Result<Vec<usize>> {
        let k = self.elimination_prefix(keep)?;
        Ok(self
            .elements
            .iter()
            .enumerate()
            .filter(|(_, f)| f.terms().iter().all(|(m, _)| m.0[k..].iter().all(|&e| e == 0)))
            .map(|(i, _)| i)
            .collect())
    }

    fn elimination_prefix(&self, keep: &[&str]) -> Result<usize> {
        let k = keep.len();
        let mut positions = Vec::with_capacity(k);
        for name in keep {
            let i = self
                .order
                .index_of(name)
                .ok_or_else(|| Error::OrderPrecondition(format!("unknown variable `{name}`")))?;
            if positions.contains(&i) {
                return Err(Error::OrderPrecondition(format!("`{name}` listed twice")));
            }
            positions.push(i);
        }
        if positions.iter().any(|&i| i >= k) {
            return Err(Error::OrderPrecondition(
                "every eliminated variable must be greater than every kept variable".into(),
            ));
        }
        Ok(k)
    }

    /// Intersection with `Q[keep]`; the result is itself a reduced basis.
    pub fn eliminate(&self, keep: &[&str]) -> Result<GroebnerBasis> {
        let k = self.elimination_prefix(keep)?;
        let idx = self.elimination_indices(keep)?;
        let elements = idx.into_iter().map(|i| truncate(&self.elements[i], k)).collect();
        Ok(GroebnerBasis { elements, order: self.order.prefix(k) })
    }
}

/// Drops trailing variables that are known not to occur.
fn truncate(f: &Polynomial, k: usize) -> Polynomial {
    let terms = f.terms().iter().map(|(m, c)| (Monomial(m.0[..k].to_vec()), c.clone())).collect();
    Polynomial::from_sorted_unchecked(k, terms)
}

/// Eliminates the variables not in `keep` from an already computed basis.
pub fn eliminate(basis: &GroebnerBasis, keep: &[&str]) -> Result<GroebnerBasis> {
    basis.eliminate(keep)
}

pub fn reduce(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.reduce(f)
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
/// Zero generators are ignored; an empty or all-zero list yields the
/// empty basis of the zero ideal.
pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    Ok(run(generators, order, false)?.0)
}

/// Like [`buchberger`], additionally tracking cofactors with respect to
/// the (unfiltered) generator list.
pub fn buchberger_with_cofactors(generators: &[Polynomial], order: &MonomialOrder) -> Result<ExtendedBasis> {
    let (basis, cofactors) = run(generators, order, true)?;
    Ok(ExtendedBasis { basis, cofactors: cofactors.expect("tracking enabled") })
}

// ---------------------------------------------------------------------------
// Engine

type IntTerm = (Monomial<u32>, BigInt);

/// GCD that first brings operands of very different sizes together with
/// one division; the binary algorithm behind `Integer::gcd` is quadratic
/// in the larger operand even when the other one is tiny.
fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut a, mut b) = (a.abs(), b.abs());
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_zero() {
        return a;
    }
    if a.bits() > b.bits() + 32 {
        a %= &b;
        if a.is_zero() {
            return b;
        }
    }
    a.gcd(&b)
}

/// Positive GCD of a list of integers, starting from the smallest so
/// that the remaining steps are cheap.
fn content<'a>(coeffs: impl Iterator<Item = &'a BigInt> + Clone) -> BigInt {
    let Some(smallest) = coeffs.clone().min_by_key(|c| c.bits()) else {
        return BigInt::one();
    };
    let mut g = smallest.abs();
    for c in coeffs {
        if g.is_one() {
            break;
        }
        g = gcd(&g, c);
    }
    g
}

/// `a * p - b * t * g`, both inputs sorted descending.
fn combine(p: &[IntTerm], a: &BigInt, g: &[IntTerm], t: &Monomial<u32>, b: &BigInt) -> Vec<IntTerm> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut shifted: Option<Monomial<u32>> = g.first().map(|(m, _)| m.mul(t));
    let a_is_one = a.is_one();
    while i < p.len() || j < g.len() {
        let ord = match (i < p.len(), &shifted) {
            (true, Some(s)) => p[i].0.cmp(s),
            (true, None) => Ordering::Greater,
            (false, _) => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                let c = if a_is_one { p[i].1.clone() } else { &p[i].1 * a };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                let m = shifted.take().unwrap();
                out.push((m, -(&g[j].1 * b)));
                j += 1;
                shifted = g.get(j).map(|(m, _)| m.mul(t));
            }
            Ordering::Equal => {
                let c = &p[i].1 * a - &g[j].1 * b;
                let m = shifted.take().unwrap();
                if !c.is_zero() {
                    out.push((m, c));
                }
                i += 1;
                j += 1;
                shifted = g.get(j).map(|(m, _)| m.mul(t));
            }
        }
    }
    out
}

fn shift(p: &[IntTerm], t: &Monomial<u32>) -> Vec<IntTerm> {
    p.iter().map(|(m, c)| (m.mul(t), c.clone())).collect()
}

/// `sum_k hs[k] * generators[k] / den`, with integer coefficients.
#[derive(Clone, Debug)]
struct Cofactors {
    hs: Vec<Vec<IntTerm>>,
    den: BigInt,
}

impl Cofactors {
    /// Cancels common factors of `den` and every coefficient.
    fn normalize(&mut self) {
        let g = content(std::iter::once(&self.den).chain(self.hs.iter().flatten().map(|(_, c)| c)));
        if !g.is_one() {
            self.den /= &g;
            for (_, c) in self.hs.iter_mut().flatten() {
                *c /= &g;
            }
        }
    }

    /// `a * self - b * t * other`.
    fn combine(&self, a: &BigInt, other: &Cofactors, t: &Monomial<u32>, b: &BigInt) -> Cofactors {
        let a = a * &other.den;
        let b = b * &self.den;
        let hs = self.hs.iter().zip(&other.hs).map(|(p, q)| combine(p, &a, q, t, &b)).collect();
        Cofactors { hs, den: &self.den * &other.den }
    }

    fn shift(&self, t: &Monomial<u32>) -> Cofactors {
        Cofactors { hs: self.hs.iter().map(|h| shift(h, t)).collect(), den: self.den.clone() }
    }
}

/// Primitive integer polynomial (descending terms, positive leading
/// coefficient) with optional cofactors
/// `terms = sum_k cof[k] * generators[k]`.
#[derive(Clone, Debug)]
struct Tracked {
    terms: Vec<IntTerm>,
    cof: Option<Cofactors>,
}

struct Element {
    poly: Tracked,
    active: bool,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial<u32>,
}

impl Tracked {
    fn lm(&self) -> &Monomial<u32> {
        &self.terms[0].0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Divides by the content and makes the leading coefficient positive.
    fn make_primitive(&mut self) {
        let Some(first) = self.terms.first() else { return };
        let mut g = content(self.terms.iter().map(|(_, c)| c));
        if first.1.sign() == Sign::Minus {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c /= &g;
            }
            if let Some(cof) = &mut self.cof {
                cof.den *= &g;
            }
        }
        if let Some(cof) = &mut self.cof {
            cof.normalize();
        }
    }

    fn from_generator(f: &Polynomial, index: usize, count: usize, track: bool) -> Self {
        let mut den = BigInt::one();
        for (_, c) in f.terms() {
            den = den.lcm(c.denom());
        }
        let terms = f.terms().iter().map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom()))).collect();
        let cof = track.then(|| Cofactors {
            hs: (0..count)
                .map(|k| if k == index { vec![(Monomial::one(f.arity()), den.clone())] } else { Vec::new() })
                .collect(),
            den: BigInt::one(),
        });
        let mut t = Tracked { terms, cof };
        t.make_primitive();
        t
    }
}

/// Full reduction of `p` by the active elements.
///
/// Content is removed only every few steps: it costs a pass over all
/// coefficients, while the growth it prevents is slow.
fn normal_form(mut p: Tracked, elems: &[Element]) -> Tracked {
    // Trying divisors with small leading monomials first is markedly
    // cheaper under lex.
    let mut divisors: Vec<&Element> = elems.iter().filter(|e| e.active).collect();
    divisors.sort_by(|a, b| a.poly.lm().cmp(b.poly.lm()));
    let mut pos = 0;
    let mut steps = 0u32;
    while pos < p.terms.len() {
        let m = &p.terms[pos].0;
        match divisors.iter().find(|e| e.poly.lm().divides(m)) {
            Some(e) => {
                let g = &e.poly;
                let (m, a) = &p.terms[pos];
                let (gm, b) = &g.terms[0];
                let t = gm.quotient_of(m);
                let d = gcd(a, b);
                let pa = b / &d;
                let gb = a / &d;
                p.terms = combine(&p.terms, &pa, &g.terms, &t, &gb);
                if let (Some(pc), Some(gc)) = (&p.cof, &g.cof) {
                    p.cof = Some(pc.combine(&pa, gc, &t, &gb));
                }
                steps += 1;
                if steps.is_multiple_of(4) {
                    p.make_primitive();
                }
            }
            None => pos += 1,
        }
    }
    p.make_primitive();
    p
}

fn spoly(f: &Tracked, g: &Tracked) -> Tracked {
    let (fm, fa) = &f.terms[0];
    let (gm, gb) = &g.terms[0];
    let l = fm.lcm(gm);
    let tf = fm.quotient_of(&l);
    let tg = gm.quotient_of(&l);
    let d = gcd(fa, gb);
    let cf = gb / &d;
    let cg = fa / &d;
    let terms = combine(&shift(&f.terms[1..], &tf), &cf, &g.terms[1..], &tg, &cg);
    let cof = match (&f.cof, &g.cof) {
        (Some(a), Some(b)) => Some(a.shift(&tf).combine(&cf, b, &tg, &cg)),
        _ => None,
    };
    Tracked { terms, cof }
}

/// Gebauer–Möller update after adding element `h`.
fn update(elems: &mut [Element], pairs: &mut Vec<Pair>, h: usize) {
    let hm = elems[h].poly.lm().clone();

    let mut candidates: Vec<Pair> = elems
        .iter()
        .enumerate()
        .filter(|(i, e)| *i != h && e.active)
        .map(|(i, e)| Pair { i, j: h, lcm: e.poly.lm().lcm(&hm) })
        .collect();

    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = candidates.pop() {
        let coprime = elems[p.i].poly.lm().is_coprime(&hm);
        let dominated = candidates.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    let fresh: Vec<Pair> = kept.into_iter().filter(|p| !elems[p.i].poly.lm().is_coprime(&hm)).collect();

    pairs.retain(|p| {
        if !hm.divides(&p.lcm) {
            return true;
        }
        let li = elems[p.i].poly.lm().lcm(&hm);
        let lj = elems[p.j].poly.lm().lcm(&hm);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);

    for (i, e) in elems.iter_mut().enumerate() {
        if i != h && e.active && hm.divides(e.poly.lm()) {
            e.active = false;
        }
    }
}

fn to_polynomials(t: &Tracked, arity: usize) -> (Polynomial, Option<Vec<Polynomial>>) {
    let lc = &t.terms[0].1;
    let terms = t.terms.iter().map(|(m, c)| (m.clone(), Rational::new(c.clone(), lc.clone()))).collect();
    let cof = t.cof.as_ref().map(|cof| {
        let den = &cof.den * lc;
        cof.hs
            .iter()
            .map(|h| {
                let terms = h.iter().map(|(m, c)| (m.clone(), Rational::new(c.clone(), den.clone()))).collect();
                Polynomial::from_sorted_unchecked(arity, terms)
            })
            .collect()
    });
    (Polynomial::from_sorted_unchecked(arity, terms), cof)
}

#[allow(clippy::type_complexity)]
fn run(
    generators: &[Polynomial],
    order: &MonomialOrder,
    track: bool,
) -> Result<(GroebnerBasis, Option<Vec<Vec<Polynomial>>>)> {
    let arity = order.arity();
    for g in generators {
        order.check(g)?;
    }
    let count = generators.len();
    let mut elems: Vec<Element> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Tracked> = generators
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| Tracked::from_generator(g, i, count, track))
        .collect();
    // Feed small leading monomials first; this tends to shorten reductions.
    inputs.sort_by(|a, b| a.lm().cmp(b.lm()).then(a.terms.len().cmp(&b.terms.len())));

    let mut unit: Option<Tracked> = None;
    let mut add = |t: Tracked, elems: &mut Vec<Element>, pairs: &mut Vec<Pair>| -> bool {
        if t.lm().is_one() {
            unit = Some(t);
            return true;
        }
        elems.push(Element { poly: t, active: true });
        let h = elems.len() - 1;
        update(elems, pairs, h);
        false
    };

    let mut finished = false;
    for t in inputs {
        let nf = normal_form(t, &elems);
        if !nf.is_zero() && add(nf, &mut elems, &mut pairs) {
            finished = true;
            break;
        }
    }

    // Normal selection strategy: smallest lcm first. Under lex this keeps
    // intermediate coefficients far smaller than sugar selection does.
    while !finished && !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.lcm.cmp(&b.lcm).then((a.i, a.j).cmp(&(b.i, b.j))))
            .map(|(k, _)| k)
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = spoly(&elems[pair.i].poly, &elems[pair.j].poly);
        let nf = if s.is_zero() { s } else { normal_form(s, &elems) };
        if !nf.is_zero() && add(nf, &mut elems, &mut pairs) {
            finished = true;
        }
    }

    if let Some(u) = unit {
        let (p, cof) = to_polynomials(&u, arity);
        let basis = GroebnerBasis { elements: vec![p], order: order.clone() };
        return Ok((basis, cof.map(|c| vec![c])));
    }

    // Inter-reduce the minimal basis. Leading monomials are already
    // pairwise non-divisible, so only tails change.
    let mut active: Vec<Element> = elems.into_iter().filter(|e| e.active).collect();
    for i in 0..active.len() {
        active[i].active = false;
        let t = active[i].poly.clone();
        active[i].poly = normal_form(t, &active);
        active[i].active = true;
    }
    active.sort_by(|a, b| a.poly.lm().cmp(b.poly.lm()));

    let mut elements = Vec::with_capacity(active.len());
    let mut cofactors = track.then(Vec::new);
    for e in &active {
        let (p, cof) = to_polynomials(&e.poly, arity);
        elements.push(p);
        if let (Some(all), Some(c)) = (&mut cofactors, cof) {
            all.push(c);
        }
    }
    Ok((GroebnerBasis { elements, order: order.clone() }, cofactors))
}
