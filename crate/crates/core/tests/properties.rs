//! Suite-level invariants across modules.

use proptest::prelude::*;
use rlk::dialgebra::{check_lemdias_basis, dialgebra_from_operator, dleib_with};
use rlk::envelope::{
    check_module_axioms, check_restricted_module, module_roundtrip, ulp_relations_check, ulp_truncated, LeibnizModule,
    SignConvention,
};
use rlk::fixtures::{self, RestrictedFixture};
use rlk::format;
use rlk::free::{check_ud_unit, free_dias, free_zinbiel, truncated_ideal_quotient};
use rlk::identities::{check_dias, check_dleib_jacobson_bracket, check_lie, check_zinbiel};
use rlk::linalg::Matrix;
use rlk::prelie::{check_corollary_bracket, prelie_to_lie};
use rlk::{Algebra, Element, PrimeField, SweepConfig};

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn restricted() -> Vec<RestrictedFixture> {
    fixtures::restricted_fixtures().unwrap()
}

/// Every 2×2 operator on every two-dimensional associative fixture over
/// F_2 and F_3. Valid ones must give restricted Leibniz algebras.
#[test]
fn every_valid_operator_gives_restricted_leibniz() {
    let cfg = SweepConfig::default();
    let mut valid = 0;
    for p in [2u64, 3] {
        let f = field(p);
        for a in fixtures::associative_fixtures(p).into_iter().filter(|a| a.dim() == 2) {
            for code in 0..p.pow(4) {
                let entries: Vec<u64> = (0..4).map(|k| code / p.pow(k) % p).collect();
                let m = Matrix::from_rows(f, &[entries[..2].to_vec(), entries[2..].to_vec()]).unwrap();
                let Ok(d) = dialgebra_from_operator(&a, "assoc", &m) else {
                    continue;
                };
                valid += 1;
                assert!(check_dias(d.algebra(), "left", "right", &cfg).unwrap().passed());
                let (_, reports) = dleib_with(&d, &cfg).unwrap();
                for r in reports {
                    assert!(r.passed(), "{} with {entries:?}: {}", a.label(), r.summary());
                }
                assert!(check_lemdias_basis(&d, p + 1).passed());
            }
        }
    }
    // The identity and zero operators are always valid.
    assert!(valid >= 2 * 2 * 8, "only {valid} valid operators");
}

#[test]
fn restricted_fixtures_have_units_in_ud() {
    let cfg = SweepConfig::default();
    for fx in restricted() {
        let d = fx.algebra.p() as usize + 1;
        let r = check_ud_unit(&fx.algebra, fx.bracket, fx.pmap, d, &cfg).unwrap();
        assert!(r.passed(), "{}: {}", fx.algebra.label(), r.summary());
    }
}

#[test]
fn adjoint_modules_pass_every_module_check() {
    let cfg = SweepConfig::default();
    for fx in restricted() {
        let g = &fx.algebra;
        let m = LeibnizModule::adjoint(g, fx.bracket).unwrap();
        let label = g.label();
        assert!(check_module_axioms(g, fx.bracket, &m).unwrap().passed(), "{label}");
        assert!(
            check_restricted_module(g, fx.bracket, fx.pmap, &m, &cfg)
                .unwrap()
                .passed(),
            "{label}"
        );
        let rel = ulp_relations_check(g, fx.bracket, fx.pmap, &m, SignConvention::Derived, &cfg).unwrap();
        assert!(rel.passed(), "{label}: {}", rel.summary());
        assert!(
            module_roundtrip(g, fx.bracket, fx.pmap, &m, &cfg).unwrap().passed(),
            "{label}"
        );
    }
}

/// Module identities plus restrictedness, against the relation operators.
fn verdicts(g: &Algebra, pmap: &str, m: &LeibnizModule) -> (bool, bool) {
    let cfg = SweepConfig::default();
    let axioms = check_module_axioms(g, "bracket", m).unwrap().passed()
        && check_restricted_module(g, "bracket", pmap, m, &cfg).unwrap().passed();
    let relations = ulp_relations_check(g, "bracket", pmap, m, SignConvention::Derived, &cfg)
        .unwrap()
        .passed();
    (axioms, relations)
}

fn module_from(g: &Algebra, mdim: usize, entries: &[u64]) -> LeibnizModule {
    let f = g.field();
    let block = mdim * mdim;
    let mats: Vec<Matrix> = entries
        .chunks(block)
        .map(|c| Matrix::from_rows(f, &c.chunks(mdim).map(<[u64]>::to_vec).collect::<Vec<_>>()).unwrap())
        .collect();
    let (left, right) = mats.split_at(g.dim());
    LeibnizModule::new(g, mdim, left.to_vec(), right.to_vec()).unwrap()
}

#[test]
fn one_dimensional_modules_relations_match_axioms() {
    for fx in restricted().into_iter().filter(|fx| fx.algebra.dim() <= 2) {
        let g = &fx.algebra;
        let p = g.p() as u64;
        let n = 2 * g.dim() as u32;
        let mut modules = 0;
        for code in 0..p.pow(n) {
            let entries: Vec<u64> = (0..n).map(|k| code / p.pow(k) % p).collect();
            let m = module_from(g, 1, &entries);
            let (axioms, relations) = verdicts(g, fx.pmap, &m);
            assert_eq!(axioms, relations, "{} with {entries:?}", g.label());
            modules += axioms as usize;
        }
        assert!(modules >= 1, "{}", g.label());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_dimensional_modules_relations_match_axioms(
        which in 0usize..6,
        entries in proptest::collection::vec(0u64..3, 16),
    ) {
        let fx = &restricted()[which];
        let g = &fx.algebra;
        let entries: Vec<u64> = entries.iter().take(g.dim() * 8).map(|e| e % g.p() as u64).collect();
        prop_assume!(entries.len() == g.dim() * 8);
        let m = module_from(g, 2, &entries);
        let (axioms, relations) = verdicts(g, fx.pmap, &m);
        prop_assert_eq!(axioms, relations);
    }

    #[test]
    fn fixture_files_roundtrip(which in 0usize..28) {
        let fx = &restricted()[which];
        let text = format::print(&fx.algebra);
        let back = format::parse(&text).unwrap();
        prop_assert_eq!(format::print(&back), text);
        prop_assert_eq!(back.dim(), fx.algebra.dim());
    }

    #[test]
    fn sampled_reports_are_reproducible(seed in any::<u64>()) {
        let d = free_dias(field(2), 1, 3).unwrap();
        let d = rlk::dialgebra::Dialgebra::new(d.to_algebra()).unwrap();
        let cfg = SweepConfig::default().with_seed(seed).with_samples(50).sampled();
        let a = dleib_with(&d, &cfg).unwrap().1;
        let b = dleib_with(&d, &cfg).unwrap().1;
        prop_assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }
}

#[test]
fn ulp_quotient_dimension_shrinks_with_relations() {
    let cfg = SweepConfig::default();
    for fx in restricted().into_iter().filter(|fx| fx.algebra.dim() == 1) {
        let g = &fx.algebra;
        let q = ulp_truncated(g, fx.bracket, fx.pmap, g.p() as usize + 1, &cfg).unwrap();
        let ambient = q.ambient();
        let rels = q.relations();
        let mut last = ambient.dim();
        assert_eq!(truncated_ideal_quotient(ambient, &[]).unwrap().dim(), last);
        for k in 1..=rels.len() {
            let dim = truncated_ideal_quotient(ambient, &rels[..k]).unwrap().dim();
            assert!(dim <= last, "{}: {dim} > {last} after {k} relations", g.label());
            last = dim;
        }
        assert_eq!(last, q.dim());
    }
}

#[test]
fn free_dias_on_one_generator_has_n_monomials_in_degree_n() {
    for p in [2, 3, 5] {
        let d = free_dias(field(p), 1, 6).unwrap();
        assert_eq!(d.dims_by_degree()[1..], [1, 2, 3, 4, 5, 6]);
        assert!(check_dias(d.algebra(), "left", "right", &SweepConfig::default())
            .unwrap()
            .passed());
        let z = free_zinbiel(field(p), 2, 4).unwrap();
        assert!(check_zinbiel(z.algebra(), "zinbiel", &SweepConfig::default())
            .unwrap()
            .passed());
    }
}

#[test]
fn tensor_products_are_lie_admissible() {
    let cfg = SweepConfig::default();
    for t in fixtures::tensor_suite().unwrap() {
        let label = t.product().label().to_string();
        let lie = prelie_to_lie(t.product(), "prelie").unwrap();
        assert!(check_lie(&lie, "lie", &cfg).unwrap().passed(), "{label}");
        assert_eq!(lie.op("lie").unwrap(), t.lie(), "{label}");
        assert!(check_corollary_bracket(&t).passed(), "{label}");
    }
}

/// The Jacobson bracket identity on basis triples of the operator suite.
#[test]
fn dleib_jacobson_bracket_on_basis_triples() {
    for d in fixtures::dialgebra_suite().unwrap().iter().filter(|d| d.dim() <= 4) {
        let a = d.algebra();
        let n = a.dim();
        for (i, j, k) in (0..n).flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k)))) {
            let (z, x, y): (Element, Element, Element) = (a.basis(i), a.basis(j), a.basis(k));
            let r = check_dleib_jacobson_bracket(d, &z, &x, &y).unwrap();
            assert!(r.passed(), "{}: {}", a.label(), r.summary());
        }
    }
}
