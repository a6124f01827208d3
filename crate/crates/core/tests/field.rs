use hopfforge_core::field::{binomial_mod, make_field, xi_binomial, FieldCtx, Fq};
use hopfforge_core::freealg::Generator;
use hopfforge_core::hopf::PresentationSpec;
use proptest::prelude::*;

fn fields_up_to_256() -> Vec<FieldCtx> {
    [(2, 1), (2, 2), (2, 3), (2, 4), (2, 8), (3, 1), (3, 2), (3, 4), (5, 2), (7, 2), (13, 2)]
        .into_iter()
        .map(|(p, k)| FieldCtx::with_degree(p, k, &[]).unwrap())
        .collect()
}

/// Integer binomial from Pascal's triangle, independent of the field code.
fn pascal(n: usize, i: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for j in 1..row.len() {
            next[j] = row[j - 1] + row[j];
        }
        row = next;
    }
    row[i]
}

#[test]
fn frobenius_is_additive_on_every_small_field() {
    for ctx in fields_up_to_256() {
        let els: Vec<Fq> = ctx.elements().collect();
        assert_eq!(els.len() as u32, ctx.size());
        for &a in &els {
            assert_eq!(ctx.frobenius(a), ctx.pow(a, ctx.p() as u64));
            for &b in &els {
                let lhs = ctx.frobenius(ctx.add(a, b));
                assert_eq!(lhs, ctx.add(ctx.frobenius(a), ctx.frobenius(b)), "p^k = {}", ctx.size());
            }
        }
    }
}

#[test]
fn table_multiplication_agrees_with_polynomial_multiplication() {
    for ctx in fields_up_to_256() {
        for a in 0..ctx.size() {
            for b in (0..ctx.size()).step_by(7) {
                let (x, y) = (ctx.element(a).unwrap(), ctx.element(b).unwrap());
                assert_eq!(ctx.mul(x, y).packed(), ctx.slow_mul(a, b));
            }
        }
    }
}

#[test]
fn powers_of_each_root_are_distinct() {
    for (p, orders) in [(2, vec![3, 5, 7, 15]), (3, vec![2, 4, 5, 13]), (5, vec![2, 3, 4, 6]), (7, vec![3, 5])] {
        let ctx = make_field(p, &orders).unwrap();
        for n in orders {
            let xi = ctx.root_of_unity(n).unwrap();
            let mut seen: Vec<Fq> = (0..n).map(|j| ctx.pow(xi, j as u64)).collect();
            assert_eq!(ctx.pow(xi, n as u64), ctx.one());
            seen.sort_by_key(|a| a.packed());
            seen.dedup();
            assert_eq!(seen.len() as u32, n, "root of order {n} over GF({p}^{})", ctx.k());
            assert_eq!(ctx.order(xi), n);
        }
    }
}

#[test]
fn xi_binomial_at_one_is_the_integer_binomial() {
    for p in [2, 3, 5, 7, 11] {
        let ctx = make_field(p, &[]).unwrap();
        for n in 0..=12 {
            for i in 0..=n {
                let want = ctx.from_int((pascal(n, i) % p as u64) as i64);
                assert_eq!(xi_binomial(&ctx, ctx.one(), n, i), want, "C({n},{i}) mod {p}");
                assert_eq!(binomial_mod(&ctx, n as u64, i as u64), want);
            }
        }
    }
}

#[test]
fn xi_binomials_vanish_at_a_primitive_root() {
    // A primitive q-th root kills C(q, i) for 0 < i < q.
    let gf4 = make_field(2, &[3]).unwrap();
    let xi = gf4.root_of_unity(3).unwrap();
    assert_eq!(gf4.size(), 4);
    for i in 1..3 {
        assert!(xi_binomial(&gf4, xi, 3, i).is_zero());
    }
    assert_eq!(xi_binomial(&gf4, xi, 3, 0), gf4.one());
    let gf3 = make_field(3, &[]).unwrap();
    assert!(xi_binomial(&gf3, gf3.from_int(-1), 2, 1).is_zero());
    let gf16 = make_field(2, &[5]).unwrap();
    let z = gf16.root_of_unity(5).unwrap();
    assert!((1..5).all(|i| xi_binomial(&gf16, z, 5, i).is_zero()));
    assert!(!xi_binomial(&gf16, z, 4, 2).is_zero());
}

#[test]
fn xi_binomial_theorem_in_the_quantum_plane() {
    for (p, n) in [(2, 3), (3, 4), (5, 3), (7, 6)] {
        let spec = PresentationSpec {
            name: "quantum plane".into(),
            p,
            orders: vec![n],
            roots: vec![("xi".into(), n)],
            generators: vec![Generator::new("x", 1), Generator::new("y", 1)],
            precedence: Some(vec!["x".into(), "y".into()]),
            relations: vec!["y*x = xi*x*y".into()],
            coproduct: vec![("x".into(), "x(#)1 + 1(#)x".into()), ("y".into(), "y(#)1 + 1(#)y".into())],
            ..PresentationSpec::default()
        };
        let pres = spec.build().unwrap();
        let ctx = pres.ctx();
        let xi = pres.env.get("xi").unwrap();
        let s = pres.parse("x + y").unwrap();
        for m in 0..=6usize {
            let lhs = pres.sys.pow(&s, m as u32);
            let rhs = pres
                .parse(
                    &(0..=m)
                        .map(|i| format!("{}*x^{i}*y^{}", ctx.display(xi_binomial(ctx, xi, m, i)), m - i))
                        .collect::<Vec<_>>()
                        .join(" + "),
                )
                .unwrap();
            assert_eq!(lhs, pres.sys.reduce(&rhs), "(x+y)^{m} with xi of order {n} over GF({p})");
        }
    }
}

fn gf81() -> FieldCtx {
    FieldCtx::with_degree(3, 4, &[]).unwrap()
}

proptest! {
    #[test]
    fn field_axioms(a in 0u32..81, b in 0u32..81, c in 0u32..81) {
        let f = gf81();
        let (a, b, c) = (f.element(a).unwrap(), f.element(b).unwrap(), f.element(c).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.div(f.mul(b, a), a).unwrap(), b);
        }
    }

    #[test]
    fn display_parses_back(a in 0u32..81) {
        let f = gf81();
        let x = f.element(a).unwrap();
        prop_assert_eq!(f.parse_element(&format!("{}", f.display(x))), Some(x));
    }

    #[test]
    fn log_inverts_generator_powers(j in 0u64..80) {
        let f = gf81();
        prop_assert_eq!(f.log(f.gen_pow(j)), Some(j as u32));
    }

    #[test]
    fn embedding_preserves_arithmetic(a in 0u32..9, b in 0u32..9) {
        let small = FieldCtx::with_degree(3, 2, &[]).unwrap();
        let big = gf81();
        let e = small.embedding_into(&big).unwrap();
        let (x, y) = (small.element(a).unwrap(), small.element(b).unwrap());
        prop_assert_eq!(e.apply(small.mul(x, y)), big.mul(e.apply(x), e.apply(y)));
        prop_assert_eq!(e.apply(small.add(x, y)), big.add(e.apply(x), e.apply(y)));
    }
}
