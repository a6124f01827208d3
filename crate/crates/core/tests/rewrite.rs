use std::sync::Arc;

use hopfforge_core::catalog::{instantiate, CaseId, CaseParams, Mode, Primes};
use hopfforge_core::field::{make_field, FieldCtx};
use hopfforge_core::freealg::{parse_poly, GenSet, Generator, NcPoly, ScalarEnv, Word};
use hopfforge_core::hopf::HopfPresentation;
use hopfforge_core::rewrite::{complete, CompletionBounds, MonomialOrder, NormalBasis, Relation, RewriteSystem};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn case(id: CaseId, pr: Primes, set: &[(&str, &str)], mode: Mode) -> HopfPresentation {
    let params = set.iter().fold(CaseParams::new(pr), |cp, (k, v)| cp.with(k, v));
    instantiate(id, &params, mode).unwrap().build().unwrap()
}

fn system(p: u32, orders: &[u32], gens: &GenSet, rels: &[&str]) -> Result<RewriteSystem, String> {
    let ctx = Arc::new(make_field(p, orders).unwrap());
    let env = xi_env(&ctx, orders);
    let rels: Vec<Relation> =
        rels.iter().map(|r| Relation::new(parse_poly(r, &ctx, gens, &env).unwrap())).collect();
    RewriteSystem::orient(ctx, MonomialOrder::wll(gens.clone()), &rels).map_err(|e| e.to_string())
}

fn xi_env(ctx: &FieldCtx, orders: &[u32]) -> ScalarEnv {
    let mut env = ScalarEnv::for_field(ctx);
    if let Some(&n) = orders.first() {
        env.set("xi", ctx.root_of_unity(n).unwrap());
    }
    env
}

fn rule_strings(sys: &RewriteSystem) -> Vec<String> {
    sys.rules().iter().map(|r| sys.rule_display(r)).collect()
}

/// Rewrites a randomly chosen redex of a randomly chosen reducible term until
/// none is left.
fn reduce_randomly(sys: &RewriteSystem, p: &NcPoly, rng: &mut ChaCha8Rng) -> NcPoly {
    let ctx = sys.ctx();
    let mut cur = p.clone();
    loop {
        let reducible: Vec<(Word, _)> =
            cur.terms().filter(|(w, _)| !sys.is_irreducible(w)).map(|(w, c)| (w.clone(), c)).collect();
        if reducible.is_empty() {
            return cur;
        }
        let (w, c) = reducible[rng.gen_range(0..reducible.len())].clone();
        let mut redexes = Vec::new();
        for pos in 0..w.len() {
            for r in sys.rules() {
                if w[pos..].starts_with(&r.lhs) {
                    redexes.push((pos, r));
                }
            }
        }
        let (pos, r) = redexes[rng.gen_range(0..redexes.len())];
        let (u, v) = (NcPoly::word(w[..pos].to_vec()), NcPoly::word(w[pos + r.lhs.len()..].to_vec()));
        cur.add_term(ctx, w.clone(), ctx.neg(c));
        let image = NcPoly::mul(ctx, &NcPoly::mul(ctx, &u, &r.rhs), &v);
        cur.add_scaled(ctx, &image, c);
    }
}

#[test]
fn orientation_examples() {
    let gx = GenSet::new(vec![Generator::grouplike("g", 3), Generator::new("x", 1)]);
    let sys = system(2, &[], &gx, &["g^3 - 1", "g*x - x*g"]).unwrap();
    assert_eq!(rule_strings(&sys), ["g^3 -> 1", "g*x -> x*g"]);

    let gxy = GenSet::new(vec![Generator::grouplike("g", 3), Generator::new("x", 1), Generator::new("y", 2)]);
    let sys = system(2, &[], &gxy, &["g*y - y*g - (x*g^2 + x*g + g^2 + g)"]).unwrap();
    assert_eq!(sys.rules().len(), 1);
    assert_eq!(sys.rules()[0].lhs, vec![0, 2]);

    // g h -> h^2 g grows the length, so only the affine interpretation orients it.
    let gh = GenSet::new(vec![Generator::grouplike("g", 2), Generator::grouplike("h", 3)]);
    let ctx = Arc::new(make_field(2, &[]).unwrap());
    let env = ScalarEnv::for_field(&ctx);
    let rhs = parse_poly("h^2*g", &ctx, &gh, &env).unwrap();
    let rel = [Relation::oriented(&ctx, vec![0, 1], &rhs)];
    assert!(RewriteSystem::orient(ctx.clone(), MonomialOrder::wll(gh.clone()), &rel).is_err());
    let sys = RewriteSystem::orient(ctx, MonomialOrder::affine(gh, vec![(3, 0), (1, 1)]), &rel).unwrap();
    assert_eq!(rule_strings(&sys), ["g*h -> h^2*g"]);
}

#[test]
fn reduction_examples() {
    let gx = GenSet::new(vec![Generator::grouplike("g", 3), Generator::new("x", 1)]);
    let sys = system(2, &[], &gx, &["g^3 - 1", "g*x - x*g"]).unwrap();
    let env = ScalarEnv::for_field(sys.ctx());
    let p = |s: &str| parse_poly(s, sys.ctx(), &gx, &env).unwrap();
    assert_eq!(sys.reduce(&p("g^3*x")), p("x"));

    let sys = system(2, &[3], &gx, &["g*x - xi*x*g"]).unwrap();
    let env = xi_env(sys.ctx(), &[3]);
    let p = |s: &str| parse_poly(s, sys.ctx(), &gx, &env).unwrap();
    assert_eq!(sys.reduce(&p("g*x^2")), p("xi^2*x^2*g"));

    let a1 = case(CaseId::A1, Primes::pq(2, 3), &[("lambda", "1")], Mode::Strict);
    assert_eq!(a1.sys.reduce(&a1.parse("x^2").unwrap()), a1.parse("x").unwrap());
}

#[test]
fn ambiguities_of_case_a1() {
    let a1 = case(CaseId::A1, Primes::pq(2, 3), &[("lambda", "1")], Mode::Strict);
    let words: Vec<String> = a1.sys.ambiguities().iter().map(|a| a1.gens().word_str(&a.word)).collect();
    for w in ["g^6*x", "g*x^2", "x^3"] {
        assert!(words.iter().any(|s| s == w), "missing ambiguity {w} in {words:?}");
    }
    assert!(a1.sys.check_confluence().confluent());
}

#[test]
fn case_a2_obstruction_depends_on_the_characteristic() {
    let a2 = case(CaseId::A2, Primes::pq(2, 3), &[("lambda", "1")], Mode::Permissive);
    let report = a2.sys.check_confluence();
    let bad: Vec<_> = report.obstructions().collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(a2.gens().word_str(&bad[0].ambiguity.word), "g*x^2");
    let ctx = a2.ctx();
    let xi = a2.env.get("xi").unwrap();
    let expected = a2.parse("x*g").unwrap().scale(ctx, ctx.sub(xi, ctx.mul(xi, xi)));
    let o = &bad[0].obstruction;
    assert!(*o == expected || *o == expected.neg(ctx), "obstruction {}", o.display(ctx, a2.gens()));

    let a2 = case(CaseId::A2, Primes::pq(3, 2), &[("lambda", "1")], Mode::Strict);
    assert!(a2.sys.check_confluence().confluent());
}

#[test]
fn normal_words_examples() {
    let a1 = case(CaseId::A1, Primes::pq(2, 3), &[("lambda", "0")], Mode::Strict);
    let NormalBasis::Finite(words) = a1.sys.normal_words(1000).unwrap() else { panic!("infinite") };
    let mut got: Vec<String> = words.iter().map(|w| a1.gens().word_str(w)).collect();
    got.sort();
    let mut want: Vec<String> = Vec::new();
    for j in 0..2 {
        for i in 0..6 {
            want.push(match (j, i) {
                (0, 0) => "1".into(),
                (0, 1) => "g".into(),
                (0, i) => format!("g^{i}"),
                (1, 0) => "x".into(),
                (1, 1) => "x*g".into(),
                (1, i) => format!("x*g^{i}"),
                _ => unreachable!(),
            });
        }
    }
    want.sort();
    assert_eq!(got, want);

    let c1a = case(CaseId::C1a, Primes::pq(2, 3), &[], Mode::Strict);
    assert_eq!(c1a.sys.normal_count(), Some(12));

    let gx = GenSet::new(vec![Generator::grouplike("g", 3), Generator::new("x", 1)]);
    let sys = system(2, &[], &gx, &["g*x - x*g"]).unwrap();
    match sys.normal_words(1000).unwrap() {
        NormalBasis::Infinite { cycle, .. } => assert!(!cycle.is_empty()),
        NormalBasis::Finite(_) => panic!("x^n is irreducible for every n"),
    }
    assert_eq!(sys.normal_count(), None);
}

#[test]
fn completion_examples() {
    let a2 = case(CaseId::A2, Primes::pq(2, 3), &[("lambda", "1")], Mode::Permissive);
    let done = complete(&a2.sys, CompletionBounds::default()).unwrap();
    assert!(done.check_confluence().confluent());
    assert!(done.normal_count().unwrap() < 12);
    assert!(done.reduce(&a2.parse("x").unwrap()).is_zero());

    let a1 = case(CaseId::A1, Primes::pq(2, 3), &[("lambda", "1")], Mode::Strict);
    let same = complete(&a1.sys, CompletionBounds::default()).unwrap();
    assert_eq!(rule_strings(&same), rule_strings(&a1.sys));

    // beta2 != 0 with q not dividing p - 1 is inconsistent.
    let c3b = case(CaseId::C3b, Primes::pq(2, 3), &[("beta2", "1")], Mode::Permissive);
    let done = complete(&c3b.sys, CompletionBounds::default()).unwrap();
    assert!(done.normal_count().unwrap() < 12);
}

fn random_strategy_cases() -> Vec<HopfPresentation> {
    vec![
        case(CaseId::A3, Primes::pq(2, 3), &[("lambda1", "1"), ("lambda2", "1")], Mode::Strict),
        case(CaseId::B1a, Primes::pq(3, 2), &[], Mode::Strict),
        case(CaseId::C3b, Primes::pq(3, 2), &[("alpha1", "1"), ("beta2", "1")], Mode::Strict),
        case(CaseId::D1b, Primes::pq(3, 2), &[], Mode::Strict),
        case(CaseId::D3a1, Primes::pq(2, 3), &[("lambda2", "1"), ("lambda6", "1")], Mode::Strict),
        case(CaseId::AD, Primes::pq(2, 3), &[("lambda1", "1")], Mode::Strict),
        case(CaseId::BA1, Primes::pqr(2, 3, 5), &[], Mode::Strict),
    ]
}

#[test]
fn confluent_systems_reduce_independently_of_the_strategy() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for pres in random_strategy_cases() {
        assert!(pres.sys.check_confluence().confluent(), "{}", pres.name);
        let n = pres.gens().len() as u8;
        for _ in 0..200 {
            let mut p = NcPoly::zero();
            for _ in 0..3 {
                let len = rng.gen_range(0..=7);
                let w: Word = (0..len).map(|_| rng.gen_range(0..n)).collect();
                p.add_term(pres.ctx(), w, pres.ctx().one());
            }
            assert_eq!(reduce_randomly(&pres.sys, &p, &mut rng), pres.sys.reduce(&p), "{}", pres.name);
        }
    }
}

#[test]
fn non_confluent_systems_admit_strategy_dependent_results() {
    let a2 = case(CaseId::A2, Primes::pq(2, 3), &[("lambda", "1")], Mode::Permissive);
    let w = a2.parse("g*x^2").unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let forms: Vec<NcPoly> = (0..50).map(|_| reduce_randomly(&a2.sys, &w, &mut rng)).collect();
    assert!(forms.iter().any(|f| *f != forms[0]));
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_lands_in_normal_words(
        which in 0usize..7,
        words in prop::collection::vec(prop::collection::vec(0u8..4, 0..=8), 1..=4),
    ) {
        let pres = &random_strategy_cases()[which];
        let n = pres.gens().len() as u8;
        let mut p = NcPoly::zero();
        for w in words {
            p.add_term(pres.ctx(), w.into_iter().map(|l| l % n).collect(), pres.ctx().one());
        }
        let r = pres.sys.reduce(&p);
        prop_assert_eq!(pres.sys.reduce(&r), r.clone());
        prop_assert!(r.terms().all(|(w, _)| pres.sys.is_irreducible(w)));
    }
}
