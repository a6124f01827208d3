use std::sync::Arc;

use hopfforge_core::field::{make_field, FieldCtx, Fq};
use hopfforge_core::freealg::Generator;
use hopfforge_core::hopf::{
    find_pq_iso, iso_check, verify_identity, HopfAlgebra, Identity, PqFamily, PresentationSpec,
};
use hopfforge_core::linalg::SparseVec;

fn spec(p: u32, orders: &[u32], gens: Vec<Generator>, rels: &[&str], cop: &[(&str, &str)]) -> PresentationSpec {
    PresentationSpec {
        name: "test".into(),
        p,
        orders: orders.to_vec(),
        generators: gens,
        relations: rels.iter().map(|s| s.to_string()).collect(),
        coproduct: cop.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        ..PresentationSpec::default()
    }
}

fn hopf(s: &PresentationSpec) -> HopfAlgebra {
    HopfAlgebra::new(s.build().unwrap(), 10_000).unwrap()
}

fn a1(p: u32, q: u32, lambda: u32) -> PresentationSpec {
    let n = p * q;
    spec(
        p,
        &[],
        vec![Generator::grouplike("g", n), Generator::new("x", 1)],
        &[&format!("g^{n} = 1"), "g*x = x*g", &format!("x^{p} = {lambda}*x")],
        &[("x", "x (#) 1 + 1 (#) x")],
    )
}

fn taft(q: u32, p: u32) -> PresentationSpec {
    spec(
        p,
        &[q],
        vec![Generator::grouplike("g", q), Generator::new("x", 1)],
        &[&format!("g^{q} = 1"), "g*x = xi*x*g", &format!("x^{q} = 0")],
        &[("x", "x (#) 1 + g (#) x")],
    )
}

#[test]
fn a1_is_a_hopf_algebra_with_six_group_likes() {
    let h = hopf(&a1(2, 3, 1));
    assert_eq!(h.dim(), 12);
    assert!(h.check_bialgebra().ok());
    let s = h.derive_antipode().unwrap();
    assert!(h.verify_antipode(&s).ok());
    assert_eq!(h.antipode_order(&s, 100), Some(2));
    let gl = h.group_likes();
    assert_eq!(gl.elements.len(), 6);
    assert!(gl.certified);
    let f = h.coradical_filtration();
    assert_eq!(f.dims, vec![6, 12]);
    assert_eq!(f.taft_wilson, Some(true));
    assert_eq!(f.level_of_word(&h, &[1]), Some(1));
}

#[test]
fn corrupted_coproduct_fails_the_counit_axiom() {
    let mut s = a1(2, 3, 1);
    s.coproduct = vec![("x".into(), "x (#) 1".into())];
    let h = hopf(&s);
    let rep = h.check_bialgebra();
    assert_eq!(rep.counit_axiom_failures, vec!["x".to_string()]);
}

#[test]
fn a1_gg_skew_primitives_are_the_translate_of_x() {
    let h = hopf(&a1(2, 3, 1));
    let g = h.skew_primitives_words(&[0], &[0]).unwrap();
    // P_{g,g} = g P_{1,1} = K{gx}; it contains gx - xg = 0 but is not zero.
    assert_eq!(g.dim(), 1);
    assert_eq!(h.to_poly(&g.basis[0]), h.pres.parse("x*g").unwrap());
    let one = h.skew_primitives_words(&[], &[]).unwrap();
    assert_eq!(one.dim(), 1);
}

#[test]
fn a3_skew_primitives_are_x_and_one_minus_g() {
    // Graded A3: g^6 = 1, gx = xg, x^2 = 0, x in P_{1,g}.
    let s = spec(
        2,
        &[],
        vec![Generator::grouplike("g", 6), Generator::new("x", 1)],
        &["g^6 = 1", "g*x = x*g", "x^2 = 0"],
        &[("x", "x (#) 1 + g (#) x")],
    );
    let h = hopf(&s);
    let sp = h.skew_primitives_words(&[], &[0]).unwrap();
    assert_eq!(sp.dim(), 2);
    let pres = &h.pres;
    let want: Vec<SparseVec> = ["x", "1 - g"].iter().map(|e| h.alg.eval(&pres.parse(e).unwrap())).collect();
    let ctx = h.ctx();
    for w in &want {
        let mut e = hopfforge_core::linalg::Echelon::new();
        for b in &sp.basis {
            e.insert(ctx, b);
        }
        assert!(e.contains(ctx, w));
    }
}

#[test]
fn taft_antipode_has_order_twice_q() {
    let h = hopf(&taft(3, 2));
    assert_eq!(h.dim(), 9);
    assert!(h.check_bialgebra().ok());
    let s = h.derive_antipode().unwrap();
    assert!(h.verify_antipode(&s).ok());
    assert_eq!(h.antipode_order(&s, 100), Some(6));
    assert_eq!(h.coradical_filtration().dims, vec![3, 6, 9]);
}

#[test]
fn group_algebra_is_cosemisimple() {
    let s = spec(3, &[], vec![Generator::grouplike("g", 4)], &["g^4 = 1"], &[]);
    let h = hopf(&s);
    let sp = h.skew_primitives_words(&[], &[0]).unwrap();
    assert_eq!(sp.dim(), 1);
    let f = h.coradical_filtration();
    assert_eq!(f.dims, vec![4]);
    let s = h.derive_antipode().unwrap();
    assert_eq!(h.antipode_order(&s, 10), Some(2));
}

fn family(fam: PqFamily, ctx: &Arc<FieldCtx>, q: u32, l: Fq) -> HopfAlgebra {
    HopfAlgebra::new(fam.spec(ctx, q, l).build_in(ctx.clone()).unwrap(), 10_000).unwrap()
}

#[test]
fn family_a_antipode_order_is_twice_p() {
    for (p, q) in [(2, 3), (3, 2)] {
        let ctx = Arc::new(make_field(p, &[]).unwrap());
        let h = family(PqFamily::A, &ctx, q, Fq::ONE);
        assert_eq!(h.dim() as u32, PqFamily::A.dimension(p, q));
        assert!(h.check_bialgebra().ok());
        let s = h.derive_antipode().unwrap();
        assert!(h.verify_antipode(&s).ok());
        assert_eq!(h.antipode_order(&s, 100), Some(2 * p as u64));
    }
}

#[test]
fn family_b_is_commutative_with_involutive_antipode() {
    let ctx = Arc::new(make_field(3, &[]).unwrap());
    let h = family(PqFamily::B, &ctx, 2, Fq::ONE);
    assert_eq!(h.dim(), 6);
    assert!(h.check_bialgebra().ok());
    let s = h.derive_antipode().unwrap();
    assert_eq!(h.antipode_order(&s, 100), Some(2));
}

#[test]
fn identity_map_is_an_isomorphism_and_a_to_b_is_not() {
    let ctx = Arc::new(make_field(3, &[]).unwrap());
    let a = family(PqFamily::A, &ctx, 2, Fq::ONE);
    let phi = [a.pres.parse("g").unwrap(), a.pres.parse("x").unwrap()];
    assert!(iso_check(&a, &a, &phi).passed());
    let b = family(PqFamily::B, &ctx, 2, Fq::ONE);
    let phi = [b.pres.parse("g").unwrap(), b.pres.parse("x").unwrap()];
    let rep = iso_check(&a, &b, &phi);
    assert!(!rep.passed());
}

#[test]
fn family_a_witness_over_gf4() {
    let ctx = Arc::new(make_field(2, &[3]).unwrap());
    let w = ctx.generator();
    // w^2 - w = 1 in GF(4), so lambda - gamma = 1 is solved by a = w or w^2.
    let lambda = ctx.add(w, Fq::ONE);
    let found = find_pq_iso(PqFamily::A, &ctx, 3, lambda, w, 8).unwrap();
    assert_eq!(found.field.k(), 2);
    let a = found.a;
    assert_eq!(ctx.sub(ctx.mul(a, a), a), Fq::ONE);
    assert!(found.report.passed());
    let same = find_pq_iso(PqFamily::A, &ctx, 3, w, w, 8).unwrap();
    assert_eq!(same.a, Fq::ZERO);
}

#[test]
fn family_a_needs_an_extension_when_the_trace_is_nonzero() {
    let ctx = Arc::new(make_field(2, &[3]).unwrap());
    // a^2 - a = w has no root in GF(4) since the trace of w is 1.
    let found = find_pq_iso(PqFamily::A, &ctx, 3, ctx.generator(), Fq::ZERO, 8).unwrap();
    assert_eq!(found.field.k(), 4);
}

#[test]
fn family_b_witness_uses_prime_field_scalars() {
    let ctx = Arc::new(make_field(3, &[]).unwrap());
    let found = find_pq_iso(PqFamily::B, &ctx, 2, Fq::ONE, ctx.from_int(2), 6).unwrap();
    let b = found.b;
    assert!(b == Fq::ONE || b == ctx.from_int(2));
    assert!(found.report.passed());
}

#[test]
fn adjoint_power_identities_hold() {
    for (p, n) in [(2, 3), (3, 2), (3, 4), (2, 4), (3, 3)] {
        let ctx = Arc::new(make_field(p, &[]).unwrap());
        for id in [Identity::GroupLikeAdPower { n }, Identity::XpMinusXSkewPrimitive { n }] {
            let rep = verify_identity(&ctx, id).unwrap();
            assert!(rep.passed(), "{id:?} at p={p}: {:?}", rep.checks);
        }
    }
}

#[test]
fn non_p_power_group_orders_collapse_the_hypothesis_algebra() {
    let ctx = Arc::new(make_field(2, &[]).unwrap());
    let rep = verify_identity(&ctx, Identity::GroupLikeAdPower { n: 3 }).unwrap();
    assert!(rep.degenerate);
    let rep = verify_identity(&ctx, Identity::GroupLikeAdPower { n: 4 }).unwrap();
    assert!(!rep.degenerate);
}

#[test]
fn two_generator_and_central_identities_hold_on_the_binary_grid() {
    for p in [2u32, 3] {
        let ctx = Arc::new(make_field(p, &[]).unwrap());
        let bits = [Fq::ZERO, Fq::ONE];
        for &l1 in &bits {
            for &l2 in &bits {
                for &l3 in &bits {
                    let id = Identity::TwoGeneratorAdPower { m: p, l1, l2, l3 };
                    let rep = verify_identity(&ctx, id).unwrap();
                    assert!(rep.passed(), "{id:?} p={p}: {:?}", rep.checks);
                }
            }
            for &l3 in &bits {
                for mu in 0..2 {
                    let id = Identity::CentralAdPower { m: p, l1, l3, mu };
                    let rep = verify_identity(&ctx, id).unwrap();
                    let closed = rep.checks.iter().filter(|c| c.label.contains("closed form") || c.label.ends_with("= 0"));
                    assert!(closed.clone().count() > 0);
                    for c in closed {
                        assert!(c.holds, "{id:?} p={p}: {c:?}");
                    }
                    // The specialised power fails exactly when mu = 0 and l1 l3 != 0.
                    let special = rep.checks.last().unwrap();
                    let expect = !(mu == 0 && l1 == Fq::ONE && l3 == Fq::ONE);
                    assert_eq!(special.holds, expect, "{id:?} p={p}: {special:?}");
                }
            }
        }
    }
}

#[test]
fn omega_bracket_identity_holds() {
    for (p, m) in [(2, 3), (3, 2)] {
        let ctx = Arc::new(make_field(p, &[]).unwrap());
        for l3 in [Fq::ZERO, Fq::ONE] {
            let id = Identity::OmegaBracket { m, theta: 1, l2: Fq::ZERO, l3 };
            let rep = verify_identity(&ctx, id).unwrap();
            assert!(rep.passed(), "{id:?} p={p}: {:?}", rep.checks);
        }
    }
}

#[test]
fn omega_bracket_rejects_a_linear_bracket_term_when_g_theta_p_is_not_one() {
    let ctx = Arc::new(make_field(2, &[]).unwrap());
    let id = Identity::OmegaBracket { m: 3, theta: 1, l2: Fq::ONE, l3: Fq::ZERO };
    assert!(matches!(verify_identity(&ctx, id), Err(hopfforge_core::hopf::IdentityError::NotHopf { .. })));
}
