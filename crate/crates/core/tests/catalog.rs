use hopfforge_core::catalog::intexpr::{eval, holds, render, IntEnv};
use hopfforge_core::catalog::{
    constraint_report, enumerate_yd, expected_dimension, instantiate, nichols_dimension,
    parameter_grid, smallest_admissible_primes, CaseId, CaseParams, CatalogError, ConstraintStatus, DimClass,
    Mode, Origin, Primes, TableRow, ValueSource,
};
use hopfforge_core::field::Fq;
use hopfforge_core::rewrite::{complete, CompletionBounds};
use proptest::prelude::*;

fn params(pr: Primes, set: &[(&str, &str)]) -> CaseParams {
    set.iter().fold(CaseParams::new(pr), |cp, (k, v)| cp.with(k, v))
}

fn active_stated(id: CaseId, cp: &CaseParams) -> Vec<String> {
    constraint_report(id, cp)
        .unwrap()
        .into_iter()
        .filter(|l| l.constraint.origin == Origin::Stated && l.status == ConstraintStatus::Active)
        .map(|l| l.reduced)
        .collect()
}

#[test]
fn every_case_is_listed_once_with_a_dimension_class() {
    assert_eq!(CaseId::ALL.len(), 75);
    for class in [DimClass::P2Q, DimClass::PQ2, DimClass::PQR, DimClass::PQ] {
        assert!(CaseId::ALL.iter().any(|id| id.entry().class == class));
    }
    for &id in CaseId::ALL {
        assert_eq!(id.name().parse::<CaseId>().unwrap(), id);
        assert!(!smallest_admissible_primes(id).is_empty(), "{id}");
    }
}

#[test]
fn expected_dimensions() {
    assert_eq!(expected_dimension(CaseId::A3, Primes::pq(2, 3)), 12);
    assert_eq!(expected_dimension(CaseId::AD, Primes::pq(2, 3)), 18);
    assert_eq!(expected_dimension(CaseId::BA1, Primes::pqr(2, 3, 5)), 30);
    assert_eq!(expected_dimension(CaseId::CA1, Primes::pq(3, 2)), 6);
}

#[test]
fn a1_instantiates_to_twelve_dimensions() {
    let inst = instantiate(CaseId::A1, &params(Primes::pq(2, 3), &[("lambda", "1")]), Mode::Strict).unwrap();
    assert_eq!(inst.expected_dim(), 12);
    let pres = inst.build().unwrap();
    assert!(pres.sys.check_confluence().confluent());
    assert_eq!(pres.sys.normal_count(), Some(12));
}

#[test]
fn strict_mode_rejects_the_a2_deformation_in_characteristic_two() {
    let cp = params(Primes::pq(2, 3), &[("lambda", "1")]);
    match instantiate(CaseId::A2, &cp, Mode::Strict) {
        Err(CatalogError::ConstraintViolated { predicate, .. }) => assert!(predicate.contains("lambda")),
        other => panic!("expected a constraint violation, got {other:?}"),
    }
    let inst = instantiate(CaseId::A2, &cp, Mode::Permissive).unwrap();
    assert_eq!(inst.violations.len(), 1);
    assert!(!inst.satisfied());
}

#[test]
fn d3a1_resolves_the_parameters_its_conditions_pin() {
    let cp = params(Primes::pq(2, 3), &[("lambda1", "1")]);
    let inst = instantiate(CaseId::D3a1, &cp, Mode::Permissive).unwrap();
    assert_eq!(inst.value("lambda3"), Some(Fq::ZERO));
    assert_eq!(inst.value("lambda6"), Some(Fq::ONE));
    assert_eq!(inst.value("lambda7"), Some(Fq::ZERO));
    for name in ["lambda3", "lambda6", "lambda7"] {
        assert!(inst.values.iter().any(|a| a.name == name && a.source == ValueSource::Required));
    }
    assert!(inst.defaulted().any(|n| n == "lambda2"));
    // 2 does not divide 3, so conjugation by g^3 forces lambda1 = 0 as well.
    assert!(inst.violations.iter().all(|v| v.constraint.origin == Origin::Forced));
    assert!(matches!(instantiate(CaseId::D3a1, &cp, Mode::Strict), Err(CatalogError::ConstraintViolated { .. })));
}

#[test]
fn instantiation_errors() {
    let pq = Primes::pq(2, 3);
    assert!(matches!(
        instantiate(CaseId::A1, &params(pq, &[("mu", "1")]), Mode::Strict),
        Err(CatalogError::UnknownParam { .. })
    ));
    assert!(matches!(
        instantiate(CaseId::A1, &params(Primes::pq(3, 2), &[("lambda", "2")]), Mode::Strict),
        Err(CatalogError::OutOfDomain { .. })
    ));
    assert!(matches!(
        instantiate(CaseId::B1a, &CaseParams::new(pq), Mode::Strict),
        Err(CatalogError::Inadmissible { .. })
    ));
    assert!(matches!(
        instantiate(CaseId::BA1, &CaseParams::new(pq), Mode::Strict),
        Err(CatalogError::BadPrimes { .. })
    ));
    assert!(matches!(
        instantiate(CaseId::A1, &CaseParams::new(Primes::pq(4, 3)), Mode::Strict),
        Err(CatalogError::BadPrimes { .. })
    ));
}

#[test]
fn constraint_reports_match_the_stated_conditions() {
    assert_eq!(active_stated(CaseId::A4b, &CaseParams::new(Primes::pq(2, 3))), ["lambda1"]);

    // q | p - 1, so the beta2 condition from g y^p is vacuous.
    let c2 = active_stated(CaseId::C2b, &params(Primes::pq(3, 2), &[("mu", "1")]));
    assert_eq!(c2.len(), 5, "{c2:?}");
    for want in ["alpha2", "beta1", "gamma1", "beta2*gamma2"] {
        assert!(c2.iter().any(|s| s.replace(' ', "").contains(want)), "missing {want} in {c2:?}");
    }
    assert!(c2.iter().any(|s| s.contains("gamma2^3")), "{c2:?}");

    // At (3, 2) xi = -1 = xi^p, so only the g x y condition on lambda2 survives.
    let d2b = active_stated(CaseId::D2b, &CaseParams::new(Primes::pq(3, 2)));
    assert_eq!(d2b.len(), 1, "{d2b:?}");
    assert!(d2b[0].contains("lambda2") && !d2b[0].contains("lambda1"), "{d2b:?}");
    let cp = CaseParams::new(Primes::pq(3, 5));
    let d2b = active_stated(CaseId::D2b, &cp);
    assert!(d2b.iter().any(|s| s.contains("lambda1")) && d2b.iter().any(|s| s.contains("lambda2")), "{d2b:?}");
    let inst = instantiate(CaseId::D2b, &cp.with("lambda3", "0"), Mode::Strict).unwrap();
    assert_eq!(inst.value("lambda1"), Some(Fq::ZERO));
    assert_eq!(inst.value("lambda2"), Some(Fq::ZERO));
}

#[test]
fn grid_points_satisfying_the_conditions_have_the_expected_dimension() {
    for &id in CaseId::ALL {
        for pr in smallest_admissible_primes(id) {
            let grid = parameter_grid(id, pr).unwrap();
            assert!(grid.iter().any(|g| g.satisfied), "{id} {pr}: empty grid");
            for gp in grid.iter().filter(|g| g.satisfied) {
                let inst = instantiate(id, &gp.params, Mode::Strict).unwrap();
                let pres = inst.build().unwrap();
                let report = pres.sys.check_confluence();
                assert!(report.confluent(), "{id} {pr} {:?}", gp.params.values);
                assert_eq!(pres.sys.normal_count(), Some(inst.expected_dim()), "{id} {pr} {:?}", gp.params.values);
            }
        }
    }
}

/// Violating a stated condition either leaves an unresolvable ambiguity or
/// makes the completed algebra smaller.
#[test]
fn violating_any_active_condition_is_detected() {
    let mut checked = 0;
    for &id in CaseId::ALL {
        for pr in smallest_admissible_primes(id) {
            let grid = parameter_grid(id, pr).unwrap();
            let base = grid[0].params.clone();
            for line in constraint_report(id, &base).unwrap() {
                if line.status == ConstraintStatus::Vacuous {
                    continue;
                }
                let (mut violated, mut witnessed) = (false, false);
                for gp in &grid {
                    let inst = instantiate(id, &gp.params, Mode::Permissive).unwrap();
                    if !inst.violations.iter().any(|v| v.constraint == line.constraint) {
                        continue;
                    }
                    violated = true;
                    let pres = inst.build().unwrap();
                    if !pres.sys.check_confluence().confluent() {
                        let bounds = CompletionBounds { max_rules: 400, max_rounds: 40 };
                        if let Ok(done) = complete(&pres.sys, bounds) {
                            assert!(done.normal_count().unwrap_or(0) < inst.expected_dim(), "{id} {pr}");
                        }
                        witnessed = true;
                        break;
                    }
                }
                // Conditions such as (lambda - 1) lambda cannot fail on the {0, 1} grid.
                if violated {
                    assert!(witnessed, "{id} {pr}: violating `{}` is not detected", line.predicate);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} conditions checked");
}

#[test]
fn negative_controls_collapse_under_completion() {
    for (id, pr, set) in [
        (CaseId::A2, Primes::pq(2, 3), &[("lambda", "1")][..]),
        (CaseId::A4b, Primes::pq(2, 3), &[("lambda1", "1")][..]),
        (CaseId::D2a, Primes::pq(2, 3), &[("lambda2", "1")][..]),
    ] {
        let inst = instantiate(id, &params(pr, set), Mode::Permissive).unwrap();
        let pres = inst.build().unwrap();
        assert!(!pres.sys.check_confluence().confluent(), "{id}");
        let done = complete(&pres.sys, CompletionBounds::default()).unwrap();
        assert!(done.normal_count().unwrap() < inst.expected_dim(), "{id}");
    }
}

fn table_primes(row: TableRow) -> [Primes; 2] {
    use TableRow::*;
    match row {
        B1 => [Primes::pq(3, 2), Primes::pq(7, 3)],
        B2 => [Primes::pq(2, 3), Primes::pq(3, 7)],
        C => [Primes::pq(2, 3), Primes::pq(2, 5)],
        BA => [Primes::pqr(2, 3, 5), Primes::pqr(3, 5, 7)],
        BB => [Primes::pqr(3, 5, 2), Primes::pqr(5, 7, 3)],
        _ => [Primes::pq(2, 3), Primes::pq(3, 2)],
    }
}

#[test]
fn realization_counts_match_the_tables() {
    use TableRow::*;
    let want = [(A, 6), (B1, 2), (B2, 1), (D, 3), (AA, 2), (AB1, 5), (AB2, 6), (AC, 1), (AD, 1), (BA, 7), (BB, 2)];
    for (row, n) in want {
        for pr in table_primes(row) {
            assert_eq!(enumerate_yd(row, pr).unwrap().count(), n, "{} at {pr}", row.name());
        }
    }
    for q in [3, 5] {
        assert_eq!(enumerate_yd(C, Primes::pq(2, q)).unwrap().count(), 4 * q as usize - 1);
    }
    assert!(enumerate_yd(B1, Primes::pq(2, 3)).is_err());
}

#[test]
fn bosonized_nichols_algebras_have_the_class_dimension() {
    for row in TableRow::ALL {
        for pr in table_primes(row) {
            let en = enumerate_yd(row, pr).unwrap();
            let dim = row.class().dimension(pr);
            for (i, r) in en.rows.iter().enumerate() {
                let yd = &r.realization;
                let spec = en.bosonize(i).unwrap();
                let pres = spec.build_in(en.ctx.clone()).unwrap();
                assert!(pres.sys.check_confluence().confluent(), "{} {pr} {}", row.name(), r.label);
                let group: u64 = dim / nichols_dimension(&en.ctx, yd);
                assert_eq!(pres.sys.normal_count(), Some(dim), "{} {pr} {} (|G| = {group})", row.name(), r.label);
            }
        }
    }
}

proptest! {
    #[test]
    fn integer_expressions_follow_integer_arithmetic(a in -50i64..50, b in 1i64..20, c in 0i64..6) {
        let mut env = IntEnv::new();
        env.set("a", a);
        env.set("b", b);
        env.set("c", c);
        prop_assert_eq!(eval("a*b + c - 3", &env).unwrap(), a * b + c - 3);
        prop_assert_eq!(eval("a % b", &env).unwrap(), a.rem_euclid(b));
        prop_assert_eq!(eval("b^c", &env).unwrap(), b.pow(c as u32));
        prop_assert_eq!(holds("b | a", &env).unwrap(), a.rem_euclid(b) == 0);
        prop_assert_eq!(holds("!(a < b) && c >= 0", &env).unwrap(), a >= b);
        prop_assert_eq!(render("x^{b*c}", &env).unwrap(), format!("x^{}", b * c));
    }
}
