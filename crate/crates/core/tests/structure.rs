use hopfforge_core::catalog::{instantiate, parameter_grid, smallest_admissible_primes, CaseId, Instance, Mode};
use hopfforge_core::cohomology::{cobar_dims, cohomology_dims, BicomoduleSpec, Coalgebra, DEFAULT_BUDGET};
use hopfforge_core::hopf::HopfAlgebra;
use hopfforge_core::linalg::{unit, Echelon};

/// First and last satisfied grid points at the smallest admissible primes.
fn instances(id: CaseId) -> Vec<Instance> {
    let pr = smallest_admissible_primes(id)[0];
    let sat: Vec<_> = parameter_grid(id, pr).unwrap().into_iter().filter(|g| g.satisfied).collect();
    let mut picks = vec![&sat[0]];
    if sat.len() > 1 {
        picks.push(&sat[sat.len() - 1]);
    }
    picks.into_iter().map(|gp| instantiate(id, &gp.params, Mode::Strict).unwrap()).collect()
}

fn group_order(inst: &Instance) -> usize {
    inst.spec.generators.iter().filter(|g| g.grouplike).map(|g| g.order.unwrap() as usize).product()
}

fn label(inst: &Instance) -> String {
    format!("{} {} {:?}", inst.id, inst.primes, inst.values.iter().map(|a| &a.value).collect::<Vec<_>>())
}

#[test]
fn every_case_is_a_pointed_hopf_algebra_of_the_expected_shape() {
    for &id in CaseId::ALL {
        for inst in instances(id) {
            let (tag, order) = (label(&inst), group_order(&inst));
            let h = HopfAlgebra::new(inst.build().unwrap(), 1 << 16).unwrap();
            assert_eq!(h.dim() as u64, inst.expected_dim(), "{tag}");
            assert!(h.check_bialgebra().ok(), "{tag}");
            let s = h.derive_antipode().unwrap();
            assert!(h.verify_antipode(&s).ok(), "{tag}");
            let gl = h.group_likes();
            assert!(gl.certified, "{tag}");
            assert_eq!(gl.elements.len(), order, "{tag}");
            let filt = h.coradical_filtration();
            assert!(filt.exhausts, "{tag}");
            assert_eq!(filt.dims[0], order, "{tag}");
            assert_eq!(*filt.dims.last().unwrap(), h.dim(), "{tag}");
            assert!(filt.dims.windows(2).all(|w| w[0] < w[1]), "{tag}");
            assert_eq!(filt.taft_wilson, Some(true), "{tag}");
            // Some non-group-like letter sits in C_1 as a (1, g)-primitive.
            let ctx = h.pres.ctx();
            let one = h.alg.index_of(&[]).unwrap();
            let letters: Vec<usize> = (0..inst.spec.generators.len())
                .filter(|&l| !inst.spec.generators[l].grouplike)
                .filter_map(|l| h.alg.index_of(&[l as u8]))
                .filter(|&i| filt.level_of[i] == Some(1))
                .collect();
            assert!(!letters.is_empty(), "{tag}");
            for i in letters {
                let hit = gl.elements.iter().any(|&g| {
                    let mut e = Echelon::new();
                    h.skew_primitives(one, g).basis.iter().for_each(|b| {
                        e.insert(ctx, b);
                    });
                    e.contains(ctx, &unit(i))
                });
                assert!(hit, "{tag}: {}", h.basis_word(i).len());
            }
        }
    }
}

#[test]
fn first_cohomology_matches_skew_primitives_across_the_catalog() {
    for &id in CaseId::ALL {
        for inst in instances(id) {
            let tag = label(&inst);
            let h = HopfAlgebra::new(inst.build().unwrap(), 1 << 16).unwrap();
            let c = Coalgebra::from_hopf(&h);
            let gl = h.group_likes().elements;
            let one = h.alg.index_of(&[]).unwrap();
            let pairs: Vec<(usize, usize)> = gl.iter().map(|&g| (one, g)).chain([(gl[1], gl[gl.len() - 1])]).collect();
            for (g, k) in pairs {
                let p = h.skew_primitives(g, k);
                let h1 = cohomology_dims(&c, BicomoduleSpec::new(g, k), 1, DEFAULT_BUDGET).unwrap().dim_h;
                assert_eq!(p.nontrivial_dim(), h1, "{tag} ({g}, {k})");
                assert_eq!(p.dim() - usize::from(g != k), h1);
            }
        }
    }
}

#[test]
fn cobar_complex_agrees_with_the_trivial_bicomodule_on_the_catalog() {
    let mut second = 0;
    for &id in CaseId::ALL {
        for inst in instances(id).into_iter().take(1) {
            let tag = label(&inst);
            let h = HopfAlgebra::new(inst.build().unwrap(), 1 << 16).unwrap();
            let c = Coalgebra::from_hopf(&h);
            let one = h.alg.index_of(&[]).unwrap();
            for n in 1..=2 {
                let Ok(full) = cohomology_dims(&c, BicomoduleSpec::new(one, one), n, DEFAULT_BUDGET) else {
                    assert_eq!(n, 2, "{tag}");
                    continue;
                };
                let cobar = cobar_dims(&c, one, n, DEFAULT_BUDGET).unwrap();
                assert_eq!(cobar.dim_h, full.dim_h, "{tag} H^{n}");
                second += usize::from(n == 2);
            }
        }
    }
    assert!(second >= 20, "{second}");
}
