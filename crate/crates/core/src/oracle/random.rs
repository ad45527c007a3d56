//! Seeded generators for small random ring elements and membership
//! instances, shared by the property and acceptance suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::laurent::LaurentPolynomial;
use crate::poly::Poly;
use crate::poly::Polynomial;
use crate::posy::Posynomial;
use crate::rational::{frac, int, Rational};

/// `g ∈ <generators>?` in a Laurent ring of the given arity.
#[derive(Clone, Debug)]
pub struct MembershipInstance {
    pub g: LaurentPolynomial,
    pub generators: Vec<LaurentPolynomial>,
}

impl MembershipInstance {
    pub fn arity(&self) -> usize {
        self.g.arity()
    }
}

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Coefficient from `{±1, ±2, ±3, ±1/2}`.
    pub fn coefficient(&mut self) -> Rational {
        let c = [int(1), int(2), int(3), frac(1, 2)].choose(&mut self.rng).unwrap().clone();
        if self.rng.gen_bool(0.5) {
            -c
        } else {
            c
        }
    }

    /// Laurent monomial with exponents in `[-e, e]`.
    pub fn laurent_monomial(&mut self, arity: usize, e: i64) -> LaurentPolynomial {
        let exps: Vec<i64> = (0..arity).map(|_| self.rng.gen_range(-e..=e)).collect();
        let c = self.coefficient();
        Poly::from_terms(arity, [(exps, c)]).unwrap()
    }

    /// Up to `max_terms` terms with exponents in `[-e, e]`; may cancel to
    /// fewer terms.
    pub fn laurent(&mut self, arity: usize, max_terms: usize, e: i64) -> LaurentPolynomial {
        let k = self.rng.gen_range(1..=max_terms);
        self.laurent_terms(arity, k, e)
    }

    pub fn laurent_terms(&mut self, arity: usize, k: usize, e: i64) -> LaurentPolynomial {
        let terms: Vec<(Vec<i64>, Rational)> =
            (0..k).map(|_| ((0..arity).map(|_| self.rng.gen_range(-e..=e)).collect(), self.coefficient())).collect();
        Poly::from_terms(arity, terms).unwrap()
    }

    pub fn nonzero_laurent(&mut self, arity: usize, max_terms: usize, e: i64) -> LaurentPolynomial {
        loop {
            let f = self.laurent(arity, max_terms, e);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// Polynomial with at most `max_terms` terms of total degree `<= deg`.
    pub fn polynomial(&mut self, arity: usize, max_terms: usize, deg: u32) -> Polynomial {
        let k = self.rng.gen_range(1..=max_terms);
        let terms: Vec<(Vec<u32>, Rational)> = (0..k)
            .map(|_| {
                let mut budget = self.rng.gen_range(0..=deg);
                let mut e = vec![0u32; arity];
                let mut idx: Vec<usize> = (0..arity).collect();
                idx.shuffle(&mut self.rng);
                for (n, &i) in idx.iter().enumerate() {
                    let take = if n + 1 == arity { budget } else { self.rng.gen_range(0..=budget) };
                    e[i] = take;
                    budget -= take;
                }
                (e, self.coefficient())
            })
            .collect();
        Poly::from_terms(arity, terms).unwrap()
    }

    /// Posynomial with exponents `p/q`, `|p| <= 3*q`, `q` in `1..=max_den`.
    pub fn posynomial(&mut self, arity: usize, max_terms: usize, max_den: i64) -> Posynomial {
        let k = self.rng.gen_range(1..=max_terms);
        let terms: Vec<(Vec<Rational>, Rational)> = (0..k)
            .map(|_| {
                let e = (0..arity)
                    .map(|_| {
                        let q = self.rng.gen_range(1..=max_den);
                        let p = self.rng.gen_range(-3 * q..=3 * q);
                        frac(p, q)
                    })
                    .collect();
                (e, self.coefficient())
            })
            .collect();
        Poly::from_terms(arity, terms).unwrap()
    }

    pub fn nonzero_posynomial(&mut self, arity: usize, max_terms: usize, max_den: i64) -> Posynomial {
        loop {
            let f = self.posynomial(arity, max_terms, max_den);
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// Small membership instance: arity 1 to 3, at most 3 generators with at
    /// most 4 terms each, exponents in `[-3, 3]`. About half the queries
    /// are built as combinations of the generators and so are members.
    ///
    /// Multivariate instances with several generators are kept sparse:
    /// random dense systems in 3 variables have lex bases far beyond desk
    /// scale.
    pub fn membership_instance(&mut self) -> MembershipInstance {
        let arity = self.rng.gen_range(1..=3);
        let (max_gens, max_terms) = match arity {
            1 => (3, 4),
            2 => (3, 3),
            _ => (2, 2),
        };
        let count = self.rng.gen_range(1..=max_gens);
        let generators: Vec<LaurentPolynomial> = (0..count)
            .map(|_| {
                let k = self.rng.gen_range(2..=max_terms);
                loop {
                    let f = self.laurent_terms(arity, k, 3);
                    if !f.is_zero() {
                        break f;
                    }
                }
            })
            .collect();
        let g = if self.rng.gen_bool(0.5) {
            let mut acc = LaurentPolynomial::zero(arity);
            for f in &generators {
                let h = self.laurent(arity, 2, 1);
                acc = &acc + &(&h * f);
            }
            acc
        } else {
            self.laurent(arity, 3, 3)
        };
        MembershipInstance { g, generators }
    }
}
