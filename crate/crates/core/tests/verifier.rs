use relmat::relation_matroid::RelationMatroid;
use relmat::verify::{self, ClosedForms, Scope, ScopeFilter, Status, VerifyOptions};
use relmat::{Result, Subset};

/// Closure that forgets to add equal-neighborhood partners.
struct IdentityClosure;

impl ClosedForms for IdentityClosure {
    fn closure(&self, _rm: &RelationMatroid, x: &Subset) -> Result<Subset> {
        Ok(x.clone())
    }
}

/// Rank that counts elements instead of blocks.
struct CardinalityRank;

impl ClosedForms for CardinalityRank {
    fn rank(&self, _rm: &RelationMatroid, x: &Subset) -> Result<usize> {
        Ok(x.len())
    }
}

fn relation_laws() -> VerifyOptions {
    VerifyOptions {
        scope: ScopeFilter::Relations,
        laws: vec![],
    }
}

#[test]
fn broken_closure_is_caught_with_witness() {
    let cases = verify::run_with(3, &relation_laws(), &IdentityClosure).unwrap();
    let case = cases
        .iter()
        .find(|c| c.id == "P3.closure-closed-form")
        .unwrap();
    assert_eq!(case.status, Status::Fail);
    assert_eq!(case.witnesses.len(), 1);
    // lowest relation with two equal rows is the empty one; lowest X that
    // exposes it is {0}
    assert_eq!(
        case.witnesses[0],
        "R=∅: X={0}: closed form {0} vs generic {0, 1, 2}"
    );
    // the closure/upper comparison runs on the mutated closure too
    let eq = cases
        .iter()
        .find(|c| c.id == "T3.cl-eq-H-iff-equivalence")
        .unwrap();
    assert_eq!(eq.status, Status::Fail);
    // rank is untouched
    let rank = cases
        .iter()
        .find(|c| c.id == "P3.rank-closed-form")
        .unwrap();
    assert_eq!(rank.status, Status::Pass);
}

#[test]
fn broken_rank_is_caught() {
    let cases = verify::run_with(2, &relation_laws(), &CardinalityRank).unwrap();
    let failing: Vec<&str> = cases
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(failing, ["P3.rank-closed-form"]);
}

#[test]
fn status_matches_witnesses() {
    for n in 1..=3 {
        for case in verify::run_all(n).unwrap() {
            assert_eq!(case.passed(), case.witnesses.is_empty(), "{case}");
            assert_eq!(case.n, n);
        }
    }
    for case in verify::run_with(3, &relation_laws(), &IdentityClosure).unwrap() {
        assert_eq!(case.passed(), case.witnesses.is_empty(), "{case}");
    }
}

#[test]
fn one_case_per_law_in_catalog_order() {
    let cases = verify::run_all(2).unwrap();
    let ids: Vec<&str> = cases.iter().map(|c| c.id.as_str()).collect();
    let catalog: Vec<&str> = verify::catalog().iter().map(|l| l.id).collect();
    assert_eq!(ids, catalog);
}

#[test]
fn scope_and_law_filters() {
    let matroids = verify::run(
        2,
        &VerifyOptions {
            scope: ScopeFilter::Matroids,
            laws: vec![],
        },
    )
    .unwrap();
    assert!(!matroids.is_empty());
    assert!(matroids.iter().all(|c| c.scope == Scope::Matroids));

    let single = verify::run(
        3,
        &VerifyOptions {
            scope: ScopeFilter::All,
            laws: vec!["T4.round-trip".into(), "C4.upper-subset-closure".into()],
        },
    )
    .unwrap();
    let ids: Vec<&str> = single.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["T4.round-trip", "C4.upper-subset-closure"]);

    // a law outside the chosen scope is skipped, not an error
    let none = verify::run(
        3,
        &VerifyOptions {
            scope: ScopeFilter::Matroids,
            laws: vec!["T4.round-trip".into()],
        },
    )
    .unwrap();
    assert!(none.is_empty());
}

#[test]
fn reports_repeat_exactly() {
    let a: Vec<String> = verify::run_all(3)
        .unwrap()
        .iter()
        .map(|c| c.to_json_line())
        .collect();
    let b: Vec<String> = verify::run_all(3)
        .unwrap()
        .iter()
        .map(|c| c.to_json_line())
        .collect();
    assert_eq!(a, b);
    let a = verify::run_with(3, &relation_laws(), &IdentityClosure).unwrap();
    let b = verify::run_with(3, &relation_laws(), &IdentityClosure).unwrap();
    assert_eq!(a, b);
}

#[test]
fn enumerated_matroids_satisfy_axioms() {
    for n in 1..=3 {
        let mut seen = std::collections::HashSet::new();
        for m in verify::enumerate_matroids(n).unwrap() {
            let rep = relmat::check_matroid_axioms(m.independents()).unwrap();
            assert!(rep.all_pass());
            assert!(seen.insert(m.independents().clone()), "duplicate matroid");
        }
    }
}
