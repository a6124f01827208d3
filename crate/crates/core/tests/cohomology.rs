use std::sync::Arc;

use hopfforge_core::cohomology::{
    cobar_dims, cohomology_dims, differential_matrix, graded_cohomology_dims, nonprimitive_generator_witness,
    BicomoduleSpec, CochainComplex, Coalgebra, DEFAULT_BUDGET,
};
use hopfforge_core::field::{make_field, Fq};
use hopfforge_core::freealg::Generator;
use hopfforge_core::hopf::{HopfAlgebra, PresentationSpec};
use hopfforge_core::linalg::{add_entry, SparseVec};
use proptest::prelude::*;

fn build(p: u32, orders: &[u32], gens: Vec<Generator>, rels: &[&str], cop: &[(&str, &str)]) -> HopfAlgebra {
    let s = PresentationSpec {
        name: "test".into(),
        p,
        orders: orders.to_vec(),
        generators: gens,
        relations: rels.iter().map(|s| s.to_string()).collect(),
        coproduct: cop.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        ..PresentationSpec::default()
    };
    HopfAlgebra::new(s.build().unwrap(), 10_000).unwrap()
}

fn taft() -> HopfAlgebra {
    build(
        2,
        &[3],
        vec![Generator::grouplike("g", 3), Generator::new("x", 1)],
        &["g^3 = 1", "g*x = xi*x*g", "x^3 = 0"],
        &[("x", "x (#) 1 + g (#) x")],
    )
}

fn nichols(p: u32) -> HopfAlgebra {
    build(p, &[], vec![Generator::new("x", 1)], &[&format!("x^{p} = 0")], &[("x", "x (#) 1 + 1 (#) x")])
}

fn idx(h: &HopfAlgebra, w: &[u8]) -> usize {
    h.alg.index_of(w).unwrap()
}

#[test]
fn nichols_algebra_has_one_degree_two_class_in_weight_p() {
    for p in [2u32, 3] {
        let h = nichols(p);
        let c = Coalgebra::from_hopf(&h);
        let one = BicomoduleSpec::new(idx(&h, &[]), idx(&h, &[]));
        let rep = graded_cohomology_dims(&c, one, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.dim_h, 1);
        assert_eq!(rep.adams.unwrap().into_iter().collect::<Vec<_>>(), vec![(p as u64, 1)]);
        assert_eq!(cobar_dims(&c, one.g, 2, DEFAULT_BUDGET).unwrap().dim_h, 1);
        assert_eq!(cobar_dims(&c, one.g, 1, DEFAULT_BUDGET).unwrap().dim_h, 1);
    }
}

#[test]
fn omega_zero_is_a_nonbounding_cocycle() {
    // Independent of the rank count: the explicit cocycle at p = 3 is
    // x (x) x^2 + x^2 (x) x, and d^1 of the only weight-3 element x^3 = 0 is zero.
    let h = nichols(3);
    let c = Coalgebra::from_hopf(&h);
    let one = idx(&h, &[]);
    let spec = BicomoduleSpec::new(one, one);
    let cx = CochainComplex::new(&c, spec, 2, DEFAULT_BUDGET).unwrap();
    let (x, x2) = (idx(&h, &[0]), idx(&h, &[0, 0]));
    let d = c.dim();
    let ctx = c.ctx();
    let mut omega = SparseVec::new();
    add_entry(ctx, &mut omega, x * d + x2, Fq::ONE);
    add_entry(ctx, &mut omega, x2 * d + x, Fq::ONE);
    assert!(cx.apply(2, &omega).is_empty());
    let boundaries: Vec<SparseVec> = (0..d).map(|i| cx.matrices[1][i].clone()).collect();
    let mut with = boundaries.clone();
    with.push(omega);
    assert_eq!(hopfforge_core::linalg::rank(ctx, &with), hopfforge_core::linalg::rank(ctx, &boundaries) + 1);
}

#[test]
fn taft_second_cohomology_lives_only_at_the_trivial_bicomodule() {
    let h = taft();
    assert_eq!(h.dim(), 9);
    let c = Coalgebra::from_hopf(&h);
    let one = idx(&h, &[]);
    let start = std::time::Instant::now();
    for i in 0..3 {
        let gi = h.alg.eval_word(&vec![0; i]).into_keys().next().unwrap();
        let rep = cohomology_dims(&c, BicomoduleSpec::new(one, gi), 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.dim_h, usize::from(i == 0), "i = {i}");
    }
    assert!(start.elapsed().as_secs() < 5);
}

#[test]
fn degree_zero_detects_g_equal_h() {
    let h = taft();
    let c = Coalgebra::from_hopf(&h);
    let (one, g) = (idx(&h, &[]), idx(&h, &[0]));
    assert_eq!(cohomology_dims(&c, BicomoduleSpec::new(one, one), 0, DEFAULT_BUDGET).unwrap().dim_h, 1);
    assert_eq!(cohomology_dims(&c, BicomoduleSpec::new(one, g), 0, DEFAULT_BUDGET).unwrap().dim_h, 0);
}

#[test]
fn first_cohomology_counts_nontrivial_skew_primitives() {
    let h = taft();
    let c = Coalgebra::from_hopf(&h);
    let gl = h.group_likes().elements;
    for &g in &gl {
        for &k in &gl {
            let p = h.skew_primitives(g, k).nontrivial_dim();
            let h1 = cohomology_dims(&c, BicomoduleSpec::new(g, k), 1, DEFAULT_BUDGET).unwrap().dim_h;
            assert_eq!(p, h1, "({g}, {k})");
        }
    }
}

#[test]
fn trivial_coalgebra_has_no_reduced_cohomology() {
    let ctx = Arc::new(make_field(5, &[]).unwrap());
    let c = Coalgebra::truncated_polynomial(ctx, 1);
    for n in 1..=3 {
        assert_eq!(cobar_dims(&c, 0, n, DEFAULT_BUDGET).unwrap().dim_h, 0);
    }
}

#[test]
fn omega_zero_witnesses_the_nonprimitive_generator() {
    // y with Delta y = y (x) 1 + 1 (x) y + x (x) x over the Nichols algebra of x at p = 2.
    let h = build(
        2,
        &[],
        vec![Generator::new("x", 1), Generator::new("y", 2)],
        &["x^2 = 0", "y^2 = 0", "x*y = y*x"],
        &[("x", "x (#) 1 + 1 (#) x"), ("y", "y (#) 1 + 1 (#) y + x (#) x")],
    );
    assert!(h.check_bialgebra().ok());
    let c = Coalgebra::from_hopf(&h);
    let one = idx(&h, &[]);
    let sub = [one, idx(&h, &[0])];
    let spec = BicomoduleSpec::new(one, one);
    let rep = nonprimitive_generator_witness(&c, &sub, spec, DEFAULT_BUDGET).unwrap();
    assert_eq!(rep.quotient_dim, 1);
    assert!(rep.injective());
    assert_eq!(rep.witness.unwrap().keys().copied().collect::<Vec<_>>(), vec![idx(&h, &[1])]);
    let all: Vec<usize> = (0..c.dim()).collect();
    let whole = nonprimitive_generator_witness(&c, &all, spec, DEFAULT_BUDGET).unwrap();
    assert_eq!(whole.quotient_dim, 0);
    assert!(whole.witness.is_none());
}

#[test]
fn theta_witnesses_the_extension_of_the_taft_algebra() {
    for lambda in ["0", "1"] {
        let h = build(
            2,
            &[3],
            vec![Generator::grouplike("g", 3), Generator::new("x", 1), Generator::new("y", 3)],
            &[
                "g^3 = 1",
                "g*x = xi*x*g",
                "g*y = y*g",
                &format!("x*y - y*x - {lambda}*x"),
                "x^3 = 0",
                // x y^p = (y + lambda)^p x forces y^p = lambda^(p-1) y.
                &format!("y^2 = {lambda}*y"),
            ],
            &[("x", "x (#) 1 + g (#) x"), ("y", "y (#) 1 + 1 (#) y + x*g^2 (#) x^2 + x^2*g (#) x")],
        );
        assert_eq!(h.dim(), 18);
        assert!(h.check_bialgebra().ok());
        let c = Coalgebra::from_hopf(&h);
        let taft: Vec<usize> = (0..h.dim()).filter(|&i| !h.basis_word(i).contains(&2)).collect();
        assert_eq!(taft.len(), 9);
        let one = idx(&h, &[]);
        let rep = nonprimitive_generator_witness(&c, &taft, BicomoduleSpec::new(one, one), DEFAULT_BUDGET).unwrap();
        assert_eq!(rep.quotient_dim, 1);
        assert!(rep.witness.is_some());
    }
}

#[test]
fn non_subcoalgebra_is_rejected() {
    let h = taft();
    let c = Coalgebra::from_hopf(&h);
    let one = idx(&h, &[]);
    let sub = [one, idx(&h, &[1])];
    assert!(nonprimitive_generator_witness(&c, &sub, BicomoduleSpec::new(one, one), DEFAULT_BUDGET).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn differentials_compose_to_zero(p in prop::sample::select(vec![2u32, 3, 5]), n in 1usize..6) {
        let c = Coalgebra::truncated_polynomial(Arc::new(make_field(p, &[]).unwrap()), n);
        let cx = CochainComplex::new(&c, BicomoduleSpec::new(0, 0), 2, DEFAULT_BUDGET);
        prop_assert!(cx.is_ok());
    }

    #[test]
    fn cobar_agrees_with_the_unreduced_complex(p in prop::sample::select(vec![2u32, 3]), n in 1usize..5, deg in 1usize..3) {
        let c = Coalgebra::truncated_polynomial(Arc::new(make_field(p, &[]).unwrap()), n);
        let full = cohomology_dims(&c, BicomoduleSpec::new(0, 0), deg, DEFAULT_BUDGET).unwrap();
        let red = cobar_dims(&c, 0, deg, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(full.dim_h, red.dim_h);
    }

    #[test]
    fn taft_differentials_compose_to_zero(i in 0usize..3, j in 0usize..3) {
        let h = taft();
        let c = Coalgebra::from_hopf(&h);
        let g = |k: usize| h.alg.eval_word(&vec![0; k]).into_keys().next().unwrap();
        let m1 = differential_matrix(&c, BicomoduleSpec::new(g(i), g(j)), 1, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(m1.len(), 9);
        prop_assert!(CochainComplex::new(&c, BicomoduleSpec::new(g(i), g(j)), 2, DEFAULT_BUDGET).is_ok());
    }
}
