//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each
//! and exits nonzero if any criterion fails.
//!
//! Run alone with `cargo test -p posyring-cli --test acceptance`.

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use posyring::oracle::random::Generator;
use posyring::oracle::{max_total_degree, member_by_euclid, member_by_linear_algebra, OracleConfig};
use posyring::{
    atomic_status, buchberger, divide, format, is_proper, member_laurent, member_laurent_with_certificate, member_posy,
    member_posy_with_certificate, parse, parse_laurent, parse_polynomial, pi, principal_generator, s_polynomial,
    AtomicityVerdict, GroebnerBasis, LaurentPolynomial, MonomialOrder, Polynomial, Posynomial, RingContext, RingKind,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ctx(vars: &[&str], kind: RingKind) -> RingContext {
    RingContext::new(vars.iter().copied(), kind).unwrap()
}

fn posy(text: &str) -> Posynomial {
    parse(text, &ctx(&["x"], RingKind::PosyQ)).unwrap()
}

fn laurent(text: &str, vars: &[&str]) -> LaurentPolynomial {
    parse_laurent(text, &ctx(vars, RingKind::Laurent)).unwrap()
}

fn root_minus_one(p: u64) -> Posynomial {
    posy(&format!("x^(1/{p}) - 1"))
}

fn nonempty_subsets(items: &[u64]) -> Vec<Vec<u64>> {
    (1..1u32 << items.len())
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect())
        .collect()
}

fn distinct_roots() -> Verdict {
    let start = Instant::now();
    let (mut queries, mut slowest) = (0, Duration::ZERO);
    for (p0, others) in [(2, vec![3, 5, 7]), (3, vec![2, 5, 7]), (5, vec![2, 3, 7])] {
        for subset in nonempty_subsets(&others) {
            let gens: Vec<Posynomial> = subset.iter().map(|&p| root_minus_one(p)).collect();
            let t = Instant::now();
            let r = member_posy(&root_minus_one(p0), &gens).map_err(|e| e.to_string())?;
            let dt = t.elapsed();
            ensure!(!r.member, "x^(1/{p0}) - 1 reported in the ideal of {subset:?}");
            ensure!(dt < Duration::from_secs(5), "p0 = {p0}, {subset:?} took {dt:?}");
            slowest = slowest.max(dt);
            queries += 1;
        }
    }
    let total = start.elapsed();
    ensure!(total < Duration::from_secs(60), "suite took {total:?}");
    Ok(format!("{queries} queries, slowest {slowest:.2?}, total {total:.2?}"))
}

fn strict_chain() -> Verdict {
    let mut assertions = 0;
    for k in 0..=4u32 {
        let small = root_minus_one(1 << k);
        let big = root_minus_one(1 << (k + 1));
        let fwd = member_posy_with_certificate(&small, std::slice::from_ref(&big)).map_err(|e| e.to_string())?;
        ensure!(fwd.member, "x^(1/{}) - 1 not in <x^(1/{}) - 1>", 1 << k, 1 << (k + 1));
        ensure!(fwd.certificate.as_ref().is_some_and(|c| c.verify(&small, std::slice::from_ref(&big))), "k = {k}");
        let rev = member_posy(&big, std::slice::from_ref(&small)).map_err(|e| e.to_string())?;
        ensure!(!rev.member, "x^(1/{}) - 1 in <x^(1/{}) - 1>", 1 << (k + 1), 1 << k);
        assertions += 2;
    }
    Ok(format!("{assertions} assertions"))
}

fn clearing_laws() -> Verdict {
    let mut gen = Generator::new(0xacc0_0003);
    for i in 0..500 {
        let arity = gen.rng().gen_range(1..=3);
        let f = gen.laurent(arity, 5, 3);
        let g = gen.laurent(arity, 5, 3);
        ensure!((&f * &g).clear_factor() == &f.clear_factor() * &g.clear_factor(), "pair {i}: F({f} * {g})");
    }
    let x = ["x"];
    let poly = |t: &str| parse_polynomial(t, &ctx(&x, RingKind::Polynomial)).unwrap();
    ensure!(laurent("x + 1", &x).clear_factor() == poly("x + 1"), "F(x + 1)");
    ensure!(laurent("x", &x).clear_factor() == poly("1"), "F(x)");
    Ok("500 pairs, 2 regressions".to_string())
}

fn scaling_laws() -> Verdict {
    let mut gen = Generator::new(0xacc0_0004);
    let e = |r: posyring::Result<Posynomial>| r.map_err(|e| e.to_string());
    for i in 0..500 {
        let arity = gen.rng().gen_range(1..=3);
        let f = gen.posynomial(arity, 4, 6);
        let g = gen.posynomial(arity, 4, 6);
        let m = gen.rng().gen_range(1..=12);
        ensure!(e((&f + &g).phi(m))? == &e(f.phi(m))? + &e(g.phi(m))?, "pair {i}: additivity");
        ensure!(e((&f * &g).phi(m))? == &e(f.phi(m))? * &e(g.phi(m))?, "pair {i}: multiplicativity");
        ensure!((f == g) == (e(f.phi(m))? == e(g.phi(m))?), "pair {i}: injectivity");
        ensure!(e(e(f.phi(m))?.unscale(m))? == f, "pair {i}: inverse scaling");
    }
    ensure!(e(Posynomial::one(2).phi(5))? == Posynomial::one(2), "Phi(1)");

    for i in 0..200 {
        let arity = gen.rng().gen_range(1..=3);
        let f = gen.posynomial(arity, 4, 8);
        let p = pi(std::slice::from_ref(&f)).map_err(|e| e.to_string())?;
        for m in 1..=24u64 {
            let integral = e(f.phi(m))?.has_integer_exponents();
            ensure!(integral == (m % p == 0), "posynomial {i}: m = {m}, pi = {p}");
        }
    }
    for i in 0..200 {
        let arity = gen.rng().gen_range(1..=3);
        let f = gen.posynomial(arity, 4, 8);
        let g = gen.posynomial(arity, 4, 8);
        let one = |h: &Posynomial| pi(std::slice::from_ref(h)).unwrap();
        let both = pi(&[f.clone(), g.clone()]).map_err(|e| e.to_string())?;
        ensure!(both == num_integer::lcm(one(&f), one(&g)), "pair {i}: pi of the pair");
    }
    Ok("500 scaling pairs, 200 x 24 divisibility checks, 200 lcm pairs".to_string())
}

fn reduces_to_zero(f: &Polynomial, basis: &GroebnerBasis) -> bool {
    divide(f, basis.elements(), basis.order()).unwrap().remainder.is_zero()
}

fn groebner_core() -> Verdict {
    let mut gen = Generator::new(0xacc0_0005);
    let mut spairs = 0;
    for case in 0..100 {
        let arity = gen.rng().gen_range(1..=3);
        let count = gen.rng().gen_range(1..=3);
        let order = MonomialOrder::generic(arity);
        let gens: Vec<Polynomial> = (0..count).map(|_| gen.polynomial(arity, 3, 4)).collect();
        let basis = buchberger(&gens, &order).map_err(|e| e.to_string())?;
        ensure!(gens.iter().all(|f| reduces_to_zero(f, &basis)), "case {case}: a generator does not reduce");
        let elems = basis.elements();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                let s = s_polynomial(&elems[i], &elems[j], &order).unwrap();
                ensure!(reduces_to_zero(&s, &basis), "case {case}: S({i}, {j}) does not reduce");
                spairs += 1;
            }
        }
        let mut shuffled = gens.clone();
        shuffled.shuffle(gen.rng());
        ensure!(buchberger(&shuffled, &order).unwrap() == basis, "case {case}: permutation changed the basis");
        let mut combination = Polynomial::zero(arity);
        for f in &gens {
            combination = &combination + &(&gen.polynomial(arity, 2, 2) * f);
        }
        shuffled.push(combination);
        ensure!(buchberger(&shuffled, &order).unwrap() == basis, "case {case}: redundant generator changed the basis");
    }
    Ok(format!("100 sets, {spairs} S-pairs"))
}

fn oracle_equivalence() -> Verdict {
    let mut gen = Generator::new(0x5eed_0006);
    let ceilings = OracleConfig::new(6, 8).unwrap();
    let (mut univariate, mut la_positive, mut members) = (0, 0, 0);
    for i in 0..200 {
        let inst = gen.membership_instance();
        let r = member_laurent(&inst.g, &inst.generators).map_err(|e| e.to_string())?;
        members += r.member as usize;
        if inst.arity() == 1 {
            univariate += 1;
            ensure!(member_by_euclid(&inst.g, &inst.generators).unwrap() == r.member, "instance {i}: Euclid disagrees");
        }
        if member_by_linear_algebra(&inst.g, &inst.generators, &ceilings).unwrap() {
            la_positive += 1;
            ensure!(r.member, "instance {i}: bounded cofactors found for a reported non-member");
        }
        if r.member {
            let c = member_laurent_with_certificate(&inst.g, &inst.generators).unwrap().certificate.unwrap();
            if let Ok(cfg) = OracleConfig::new(c.lambda, max_total_degree(&c.cofactors)) {
                ensure!(
                    member_by_linear_algebra(&inst.g, &inst.generators, &cfg).unwrap(),
                    "instance {i}: not reproduced"
                );
            }
        }
    }
    Ok(format!("200 instances: {members} members, {univariate} univariate, {la_positive} confirmed by linear algebra"))
}

fn certificate_soundness() -> Verdict {
    let (mut issued, mut verified) = (0, 0);
    let mut gen = Generator::new(0x5eed_0006);
    for _ in 0..200 {
        let inst = gen.membership_instance();
        let r = member_laurent_with_certificate(&inst.g, &inst.generators).map_err(|e| e.to_string())?;
        if let Some(c) = r.certificate {
            issued += 1;
            verified += c.verify(&inst.g, &inst.generators) as usize;
        }
    }
    let mut gen = Generator::new(0xacc0_0007);
    for _ in 0..50 {
        let k = gen.rng().gen_range(1..=2);
        let gens: Vec<Posynomial> = (0..k).map(|_| gen.nonzero_posynomial(1, 2, 3)).collect();
        let mut g = Posynomial::zero(1);
        for f in &gens {
            g = &g + &(&gen.posynomial(1, 2, 2) * f);
        }
        let r = member_posy_with_certificate(&g, &gens).map_err(|e| e.to_string())?;
        ensure!(r.member, "combination {g} not reported as a member");
        let c = r.certificate.ok_or("member without certificate")?;
        issued += 1;
        verified += c.verify(&g, &gens) as usize;
    }
    ensure!(issued == verified, "{verified} of {issued} certificates verify");
    Ok(format!("{verified}/{issued} certificates verify"))
}

fn units() -> Verdict {
    let mut gen = Generator::new(0xacc0_0008);
    for i in 0..100 {
        let arity = gen.rng().gen_range(1..=3);
        let f = gen.laurent_monomial(arity, 3);
        let one = LaurentPolynomial::one(arity);
        ensure!(f.is_unit(), "monomial {i}: {f} not a unit");
        ensure!(member_laurent(&one, std::slice::from_ref(&f)).unwrap().member, "monomial {i}: 1 not in <{f}>");
    }
    for i in 0..100 {
        let arity = gen.rng().gen_range(1..=3);
        let f = loop {
            let k = gen.rng().gen_range(2..=4);
            let f = gen.laurent_terms(arity, k, 3);
            if f.terms().len() >= 2 {
                break f;
            }
        };
        let one = LaurentPolynomial::one(arity);
        ensure!(!f.is_unit(), "input {i}: {f} reported a unit");
        ensure!(!member_laurent(&one, std::slice::from_ref(&f)).unwrap().member, "input {i}: 1 in <{f}>");
    }
    Ok("100 monomials, 100 non-units".to_string())
}

fn nullstellensatz() -> Verdict {
    let x = ["x"];
    let xy = ["x", "y"];
    let fixtures = [
        (vec![laurent("x", &x)], false),
        (vec![laurent("x - 1", &x)], true),
        (vec![laurent("x - 1", &x), laurent("x - 2", &x)], false),
        (vec![laurent("x - 1", &xy), laurent("y - 1", &xy)], true),
    ];
    for (gens, proper) in &fixtures {
        ensure!(is_proper(gens).unwrap() == *proper, "{gens:?}: expected proper = {proper}");
    }
    Ok("4 fixtures".to_string())
}

fn bezout() -> Verdict {
    let mut gen = Generator::new(0xacc0_0010);
    let mut nontrivial = 0;
    for i in 0..100 {
        let (f1, f2) = if i % 2 == 0 {
            let c = gen.nonzero_posynomial(1, 2, 3);
            (&c * &gen.nonzero_posynomial(1, 2, 3), &c * &gen.nonzero_posynomial(1, 2, 3))
        } else {
            (gen.nonzero_posynomial(1, 3, 4), gen.nonzero_posynomial(1, 3, 4))
        };
        let g = principal_generator(&[f1.clone(), f2.clone()]).map_err(|e| e.to_string())?;
        nontrivial += !g.is_unit() as usize;
        ensure!(member_posy(&g, &[f1.clone(), f2.clone()]).unwrap().member, "pair {i}: {g} not in <{f1}, {f2}>");
        ensure!(member_posy(&f1, std::slice::from_ref(&g)).unwrap().member, "pair {i}: {f1} not in <{g}>");
        ensure!(member_posy(&f2, std::slice::from_ref(&g)).unwrap().member, "pair {i}: {f2} not in <{g}>");
    }
    let g = principal_generator(&[posy("x - 1"), posy("x^(1/2) - 1")]).unwrap();
    ensure!(g == posy("x^(1/2) - 1"), "<x - 1, x^(1/2) - 1> generated by {g}");
    Ok(format!("100 pairs ({nontrivial} with a non-unit generator), 1 fixture"))
}

fn atomicity() -> Verdict {
    match atomic_status(&posy("x + 2"), 20).unwrap() {
        AtomicityVerdict::Atomic { prime } => ensure!(prime == 2.into(), "x + 2: Eisenstein prime {prime}"),
        v => return Err(format!("x + 2: {v}")),
    }
    for text in ["x - 1", "x^2 + x + 1"] {
        let v = atomic_status(&posy(text), 20).unwrap();
        let AtomicityVerdict::NotAtomic { scale_index, factor, polynomial } = &v else {
            return Err(format!("{text}: {v}"));
        };
        ensure!(*scale_index == 2, "{text}: witness n = {scale_index}");
        let cofactor = v.cofactor().ok_or(format!("{text}: factor does not divide"))?;
        ensure!(&(factor * &cofactor) == polynomial, "{text}: factors do not re-multiply");
    }
    Ok("3 fixtures".to_string())
}

const FUZZ_ALPHABET: &[char] =
    &['x', 'y', 'z', 'q', '0', '1', '2', '3', '9', '+', '-', '*', '/', '^', '(', ')', ' ', '.', '_', 'é'];

fn parser() -> Verdict {
    let mut gen = Generator::new(0xacc0_0012);
    for kind in [RingKind::Polynomial, RingKind::Laurent, RingKind::PosyQ] {
        for i in 0..1000 {
            let arity = gen.rng().gen_range(1..=3);
            let c = ctx(&["x", "y", "z"][..arity], kind);
            let ok = match kind {
                RingKind::Polynomial => {
                    let f = gen.polynomial(arity, 5, 6);
                    parse_polynomial(&format(&f, &c), &c).as_ref() == Ok(&f)
                }
                RingKind::Laurent => {
                    let f = gen.laurent(arity, 5, 4);
                    parse_laurent(&format(&f, &c), &c).as_ref() == Ok(&f)
                }
                RingKind::PosyQ => {
                    let f = gen.posynomial(arity, 5, 6);
                    parse(&format(&f, &c), &c).as_ref() == Ok(&f)
                }
            };
            ensure!(ok, "{kind:?} element {i} does not round-trip");
        }
    }
    let c = ctx(&["x", "y", "z"], RingKind::PosyQ);
    let (mut accepted, mut rejected) = (0, 0);
    for i in 0..10_000 {
        let len = gen.rng().gen_range(0..24);
        let text: String = (0..len).map(|_| *FUZZ_ALPHABET.choose(gen.rng()).unwrap()).collect();
        match panic::catch_unwind(|| parse(&text, &c)) {
            Ok(Ok(_)) => accepted += 1,
            Ok(Err(e)) => {
                ensure!(e.position <= text.len(), "input {i} {text:?}: position {} past the end", e.position);
                rejected += 1;
            }
            Err(_) => return Err(format!("input {i} {text:?}: parser panicked")),
        }
    }
    Ok(format!("3 x 1000 round trips; fuzz: {accepted} parsed, {rejected} positioned errors"))
}

fn cli_golden() -> Verdict {
    let bin = env!("CARGO_BIN_EXE_posyring");
    let examples: [(&[&str], &str); 3] = [
        (&["member", "--ring", "posy", "--vars", "x", "x^(1/2) - 1", "--ideal", "x^(1/3) - 1; x^(1/5) - 1"], "false\n"),
        (&["normalize", "x^-2 + x"], "x^3 + 1\n"),
        (&["atomic", "--bound", "20", "x + 2"], "atomic (Eisenstein p=2)\n"),
    ];
    for (args, expected) in examples {
        let out = Command::new(bin).args(args).output().map_err(|e| e.to_string())?;
        ensure!(out.status.code() == Some(0), "{args:?}: exit {:?}", out.status.code());
        ensure!(out.stdout == expected.as_bytes(), "{args:?}: {:?}", String::from_utf8_lossy(&out.stdout));
    }
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut cases = 0;
    for entry in fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "args") {
            continue;
        }
        let args: Vec<String> = fs::read_to_string(&path).unwrap().lines().map(str::to_string).collect();
        let expected = fs::read(path.with_extension("stdout")).unwrap();
        let code: i32 = fs::read_to_string(path.with_extension("code")).map_or(0, |c| c.trim().parse().unwrap());
        let out = Command::new(bin).args(&args).env_remove(posyring_cli::ORACLE_ENV).output().unwrap();
        ensure!(out.stdout == expected, "{}: output differs", path.display());
        ensure!(out.status.code() == Some(code), "{}: exit {:?}, expected {code}", path.display(), out.status.code());
        cases += 1;
    }
    Ok(format!("3 examples, {cases} golden files"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        ("distinct prime roots are not members", distinct_roots),
        ("strict chain of square roots", strict_chain),
        ("clearing map is multiplicative", clearing_laws),
        ("scaling and pi laws", scaling_laws),
        ("Groebner core", groebner_core),
        ("oracle equivalence", oracle_equivalence),
        ("certificate soundness", certificate_soundness),
        ("units are monomials", units),
        ("weak Nullstellensatz fixtures", nullstellensatz),
        ("Bezout contract", bezout),
        ("atomicity fixtures", atomicity),
        ("parser round trip and fuzz", parser),
        ("CLI golden files", cli_golden),
    ];
    // Silence the default hook; panics are reported as failures below.
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let verdict = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let dt = t.elapsed();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{dt:.2?}]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{dt:.2?}]", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
