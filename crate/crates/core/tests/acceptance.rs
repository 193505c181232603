//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal.

use std::process::Command;
use std::time::{Duration, Instant};

use relmat::verify::{self, Scope, ScopeFilter, VerifyOptions};
use relmat::{
    build_relation_matroid, check_pawlak_properties, circuits, independent_sets, induce_relation,
    round_trip_relation, BinaryRelation, ExplicitMatroid, NeighborhoodKind, RelationMatroid,
    SetFamily, Universe,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn u3() -> Universe {
    Universe::with_labels(["1", "2", "3"]).unwrap()
}

fn pairs_of(u: &Universe, pairs: &[(&str, &str)]) -> BinaryRelation {
    BinaryRelation::from_label_pairs(u, pairs.iter().copied()).unwrap()
}

fn family(u: &Universe, sets: &[&[&str]]) -> SetFamily {
    SetFamily::from_members(
        u.len(),
        sets.iter().map(|s| u.subset(s.iter().copied()).unwrap()),
    )
    .unwrap()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, want {want:?}"))
    }
}

fn within(limit: Duration, start: Instant) -> Check {
    let took = start.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn example_relation(u: &Universe) -> BinaryRelation {
    pairs_of(
        u,
        &[
            ("1", "1"),
            ("1", "2"),
            ("2", "1"),
            ("2", "3"),
            ("3", "1"),
            ("3", "3"),
        ],
    )
}

fn golden_relation_example() -> Check {
    let start = Instant::now();
    let u = u3();
    let r = example_relation(&u);
    let rs = |x: &str| u.format_set(&r.successor_neighborhood(u.index_of(x).unwrap()).unwrap());
    let rp = |x: &str| u.format_set(&r.predecessor_neighborhood(u.index_of(x).unwrap()).unwrap());
    expect_eq("RS(1)", rs("1"), "{1, 2}".into())?;
    expect_eq("RS(2)", rs("2"), "{1, 3}".into())?;
    expect_eq("RS(3)", rs("3"), "{1, 3}".into())?;
    expect_eq("RP(1)", rp("1"), "{1, 2, 3}".into())?;
    expect_eq("RP(2)", rp("2"), "{1}".into())?;
    expect_eq("RP(3)", rp("3"), "{2, 3}".into())?;

    let successor = independent_sets(&build_relation_matroid(&r)).map_err(|e| e.to_string())?;
    expect_eq(
        "I_S(R)",
        successor,
        family(&u, &[&[], &["1"], &["2"], &["3"], &["1", "2"], &["1", "3"]]),
    )?;
    let predecessor = independent_sets(&RelationMatroid::new(&r, NeighborhoodKind::Predecessor))
        .map_err(|e| e.to_string())?;
    expect_eq(
        "I_P(R)",
        predecessor,
        SetFamily::from_members(3, relmat::power_set(3)).unwrap(),
    )?;
    within(Duration::from_secs(1), start)
}

fn golden_matroid_example() -> Check {
    let start = Instant::now();
    let u = u3();
    let m =
        ExplicitMatroid::new(&u, family(&u, &[&[], &["1"], &["3"]])).map_err(|e| e.to_string())?;
    expect_eq(
        "C(M)",
        circuits(&m).map_err(|e| e.to_string())?,
        family(&u, &[&["1", "3"], &["2"]]),
    )?;
    expect_eq(
        "R(M)",
        induce_relation(&m)
            .map_err(|e| e.to_string())?
            .into_relation(),
        pairs_of(
            &u,
            &[("1", "1"), ("2", "2"), ("3", "3"), ("1", "3"), ("3", "1")],
        ),
    )?;
    within(Duration::from_secs(1), start)
}

fn golden_round_trip() -> Check {
    let start = Instant::now();
    let u = u3();
    let rt = round_trip_relation(&example_relation(&u)).map_err(|e| e.to_string())?;
    expect_eq(
        "R(M(R))",
        rt.induced,
        pairs_of(
            &u,
            &[("1", "1"), ("2", "2"), ("3", "3"), ("2", "3"), ("3", "2")],
        ),
    )?;
    within(Duration::from_secs(1), start)
}

fn all_pass(cases: &[verify::TheoremCase]) -> Check {
    match cases.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(c.to_string()),
    }
}

fn require_ids(cases: &[verify::TheoremCase], ids: &[&str]) -> Check {
    for id in ids {
        if !cases.iter().any(|c| c.id == *id) {
            return Err(format!("law {id} missing from the report"));
        }
    }
    Ok(())
}

fn exhaustive_relations() -> Check {
    let start = Instant::now();
    expect_eq(
        "relations at n=3",
        verify::enumerate_relations(3)
            .map_err(|e| e.to_string())?
            .count(),
        512,
    )?;
    let cases = verify::run(
        3,
        &VerifyOptions {
            scope: ScopeFilter::Relations,
            laws: vec![],
        },
    )
    .map_err(|e| e.to_string())?;
    require_ids(
        &cases,
        &[
            "P2.3.h-empty",
            "P2.3.h-union",
            "P2.3.h-monotone",
            "P3.successor-axioms",
            "P3.predecessor-axioms",
            "T3.successor-eq-predecessor-of-inverse",
            "P3.dependent-closed-form",
            "P3.circuits-closed-form",
            "P3.rank-closed-form",
            "P3.closure-closed-form",
            "P3.closed-set-criterion",
            "P2.4.closure-axioms",
            "P3.cl-subset-upper-if-reflexive",
            "T3.cl-eq-H-iff-equivalence",
            "P4.reflexive-round-trip-subset",
            "P4.round-trip-fixed-iff-equivalence",
            "T4.round-trip",
            "P4.round-trip-equivalence",
        ],
    )?;
    all_pass(&cases)?;
    within(Duration::from_secs(10), start)
}

fn exhaustive_matroids() -> Check {
    let start = Instant::now();
    // labelled matroids on 1..4 points
    for (n, count) in [(1, 2), (2, 5), (3, 16), (4, 68)] {
        expect_eq(
            &format!("matroids at n={n}"),
            verify::enumerate_matroids(n)
                .map_err(|e| e.to_string())?
                .count(),
            count,
        )?;
        let cases = verify::run(
            n,
            &VerifyOptions {
                scope: ScopeFilter::Matroids,
                laws: vec![],
            },
        )
        .map_err(|e| e.to_string())?;
        require_ids(
            &cases,
            &[
                "P4.induced-equivalence",
                "P4.singleton-closure-decomposition",
                "C4.upper-subset-closure",
                "L4.closure-via-circuits",
            ],
        )?;
        if cases.iter().any(|c| c.scope != Scope::Matroids) {
            return Err("relation law in matroid scope".into());
        }
        all_pass(&cases)?;
    }
    within(Duration::from_secs(60), start)
}

/// Every set partition of `0..n`, as block labels per element.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            let blocks = p.iter().max().map_or(0, |m| m + 1);
            for b in 0..=blocks {
                let mut q = p.clone();
                q.push(b);
                next.push(q);
            }
        }
        out = next;
    }
    out
}

fn pawlak_suite() -> Check {
    let start = Instant::now();
    let mut seen = 0;
    for n in 1..=3 {
        let u = Universe::new(n).unwrap();
        let parts = partitions(n);
        expect_eq(&format!("partitions of {n}"), parts.len(), [1, 2, 5][n - 1])?;
        for p in parts {
            let pairs = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| p[x] == p[y]);
            let r = BinaryRelation::from_pairs(&u, pairs).unwrap();
            let rep = check_pawlak_properties(&r).map_err(|e| e.to_string())?;
            expect_eq("properties checked", rep.entries().len(), 16)?;
            if let Some(f) = rep.first_failure() {
                return Err(format!("R={}: {f}", r.format_pairs()));
            }
            seen += 1;
        }
    }
    expect_eq("equivalence relations", seen, 8)?;
    within(Duration::from_secs(1), start)
}

fn deterministic_report() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_relmat"))
            .args(["verify", "--n", "3", "--scope", "all"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let second = run()?;
    expect_eq("exit status", first.status.code(), Some(0))?;
    if first.stdout.is_empty() {
        return Err("empty report".into());
    }
    if first.stdout != second.stdout {
        return Err("reports differ between runs".into());
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("golden relation example", golden_relation_example),
        ("golden matroid example", golden_matroid_example),
        ("golden round trip", golden_round_trip),
        ("exhaustive relation suite n=3", exhaustive_relations),
        ("exhaustive matroid suite n<=4", exhaustive_matroids),
        ("approximation properties on equivalences", pawlak_suite),
        ("deterministic verify report", deterministic_report),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS criterion {}: {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
