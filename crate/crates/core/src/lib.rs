//! Exact arithmetic, Gröbner bases and ideal membership in Laurent
//! polynomial rings `Q[x, x^-1]` and rational-exponent posynomial rings
//! over `Q`.
//!
//! Membership in a Laurent or posynomial ring reduces to a membership query
//! in an ordinary polynomial ring: exponents are first scaled to integers
//! ([`Posynomial::phi`]), denominators are cleared by a monomial factor
//! ([`LaurentPolynomial::clear_factor`]), and the inverted monomial is
//! eliminated by saturation ([`saturate`]).
//!
//! ```
//! use posyring::{member_posy, parse, RingContext, RingKind};
//!
//! let ctx = RingContext::new(["x"], RingKind::PosyQ).unwrap();
//! let g = parse("x^(1/2) - 1", &ctx).unwrap();
//! let f = parse("x^(1/4) - 1", &ctx).unwrap();
//! assert!(member_posy(&g, &[f.clone()]).unwrap().member);
//! assert!(!member_posy(&f, &[g]).unwrap().member);
//! ```

pub mod atomic;
pub mod division;
pub mod error;
pub mod groebner;
pub mod laurent;
pub mod oracle;
pub mod order;
pub mod parser;
pub mod poly;
pub mod posy;
pub mod rational;
pub mod univariate;

pub use atomic::{atomic_status, AtomicityVerdict};
pub use division::{divide, s_polynomial, Division};
pub use error::{Error, Result};
pub use groebner::{buchberger, buchberger_with_cofactors, ExtendedBasis, GroebnerBasis};
pub use laurent::{
    in_variety, is_proper, member_laurent, member_laurent_with_certificate, saturate, Certificate, LaurentPolynomial,
    MembershipResult, Point,
};
pub use order::MonomialOrder;
pub use parser::{format, parse, parse_laurent, parse_polynomial, ParseError, RingContext, RingKind};
pub use poly::{Exponent, Monomial, Poly, Polynomial};
pub use posy::{
    member_posy, member_posy_with_certificate, pi, principal_generator, PosyCertificate, PosyMembership, Posynomial,
};
pub use rational::Rational;
