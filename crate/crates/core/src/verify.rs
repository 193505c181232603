//! Exhaustive law verifier.
//!
//! Every relation (and every matroid) on a small universe is enumerated and
//! each law in the catalog is checked against all of them. A law becomes one
//! [`TheoremCase`]; a failing case carries the counterexample found first in
//! enumeration order, so reports are byte-for-byte reproducible even though
//! the relations are checked in parallel.
//!
//! Law ids are stable. The prefix letter names the kind of statement
//! (`D` definition, `L` lemma, `P` proposition, `T` theorem, `C` corollary);
//! the number groups laws by subject. `2` is background on relations and
//! matroids, `3` the matroid of a relation, `4` the relation of a matroid.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::approx::{check_h_properties, check_pawlak_properties, OperatorTable};
use crate::error::{Error, Result};
use crate::induced::{
    check_round_trip_laws, check_upper_subset_closure, induce_relation, induced_pairs,
    same_neighborhood_relation, singleton_comparison,
};
use crate::matroid::{self, ExplicitMatroid, MatroidOracle};
use crate::relation::BinaryRelation;
use crate::relation_matroid::{
    build_relation_matroid, compare_with, same_matroid, NeighborhoodKind, RelationMatroid,
};
use crate::report::PropertyReport;
use crate::subset::{power_set, SetFamily, Subset};
use crate::universe::Universe;

/// Largest universe the verifier enumerates.
pub const MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Relations,
    Matroids,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The verdict on one law at one universe size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCase {
    pub id: String,
    pub scope: Scope,
    pub n: usize,
    pub status: Status,
    pub witnesses: Vec<String>,
}

impl TheoremCase {
    fn new(id: &str, scope: Scope, n: usize, witness: Option<String>) -> Self {
        TheoremCase {
            id: id.to_string(),
            scope,
            n,
            status: if witness.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            witnesses: witness.into_iter().collect(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Which part of the catalog to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScopeFilter {
    Relations,
    Matroids,
    #[default]
    All,
}

impl ScopeFilter {
    fn admits(self, scope: Scope) -> bool {
        matches!(
            (self, scope),
            (ScopeFilter::All, _)
                | (ScopeFilter::Relations, Scope::Relations)
                | (ScopeFilter::Matroids, Scope::Matroids)
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub scope: ScopeFilter,
    /// Law ids to run; empty means all.
    pub laws: Vec<String>,
}

/// The closed forms under test. Tests substitute deliberately broken
/// implementations to confirm the verifier notices.
pub trait ClosedForms: Sync {
    fn dependent_sets(&self, rm: &RelationMatroid) -> Result<SetFamily> {
        rm.dependent_sets()
    }

    fn circuits(&self, rm: &RelationMatroid) -> SetFamily {
        rm.circuits()
    }

    fn rank(&self, rm: &RelationMatroid, x: &Subset) -> Result<usize> {
        rm.rank(x)
    }

    fn closure(&self, rm: &RelationMatroid, x: &Subset) -> Result<Subset> {
        rm.closure(x)
    }

    fn is_closed(&self, rm: &RelationMatroid, x: &Subset) -> Result<bool> {
        rm.is_closed(x)
    }
}

/// The shipped closed forms.
pub struct Standard;

impl ClosedForms for Standard {}

/// Independence read straight off the definition: members have pairwise
/// distinct neighborhoods, compared row by row. Shares no code with the
/// block partition of [`RelationMatroid`].
struct LiteralOracle<'a> {
    universe: &'a Universe,
    neighborhoods: Vec<Subset>,
}

impl<'a> LiteralOracle<'a> {
    fn successor(r: &'a BinaryRelation) -> Self {
        LiteralOracle {
            universe: r.universe(),
            neighborhoods: (0..r.size())
                .map(|x| r.successor_neighborhood(x).expect("in range"))
                .collect(),
        }
    }

    fn predecessor(r: &'a BinaryRelation) -> Self {
        LiteralOracle {
            universe: r.universe(),
            neighborhoods: (0..r.size())
                .map(|x| r.predecessor_neighborhood(x).expect("in range"))
                .collect(),
        }
    }
}

impl MatroidOracle for LiteralOracle<'_> {
    fn universe(&self) -> &Universe {
        self.universe
    }

    fn is_independent(&self, set: &Subset) -> bool {
        let members: Vec<usize> = set.iter().collect();
        members.iter().enumerate().all(|(i, &x)| {
            members[i + 1..]
                .iter()
                .all(|&y| self.neighborhoods[x] != self.neighborhoods[y])
        })
    }
}

/// Every relation on `{0, .., n-1}` in ascending order of the flattened
/// adjacency bits.
pub fn enumerate_relations(n: usize) -> Result<impl Iterator<Item = BinaryRelation>> {
    check_n(n)?;
    let u = Universe::new(n)?;
    Ok((0..1u64 << (n * n)).map(move |code| BinaryRelation::from_code(&u, code)))
}

/// Every family of subsets of `{0, .., n-1}` satisfying (I1)–(I3), found by
/// filtering all families that contain `∅`, in ascending order of the
/// family's membership mask.
pub fn enumerate_matroids(n: usize) -> Result<impl Iterator<Item = ExplicitMatroid>> {
    check_n(n)?;
    let u = Universe::new(n)?;
    let subsets = 1u32 << n;
    Ok((0..1u64 << (subsets - 1))
        .map(|rest| (rest << 1) | 1)
        .filter(move |&fam| is_matroid_mask(n, fam))
        .map(move |fam| {
            let members = (0..subsets as u64)
                .filter(|&s| fam >> s & 1 == 1)
                .map(|s| Subset::from_mask(n, s));
            ExplicitMatroid::new_unchecked(
                &u,
                SetFamily::from_members(n, members).expect("same universe"),
            )
        }))
}

/// (I2) and (I3) on a family encoded as a bit mask over subset masks; (I1)
/// is bit 0.
fn is_matroid_mask(n: usize, fam: u64) -> bool {
    let has = |s: u64| fam >> s & 1 == 1;
    let members: Vec<u64> = (0..1u64 << n).filter(|&s| has(s)).collect();
    let hereditary = members
        .iter()
        .all(|&s| (0..n).all(|e| s >> e & 1 == 0 || has(s & !(1 << e))));
    if !has(0) || !hereditary {
        return false;
    }
    members.iter().all(|&a| {
        members.iter().all(|&b| {
            a.count_ones() >= b.count_ones()
                || (0..n).any(|e| b >> e & 1 == 1 && a >> e & 1 == 0 && has(a | 1 << e))
        })
    })
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    if n > MAX_N {
        return Err(Error::Capacity {
            what: "verify",
            n,
            limit: MAX_N,
        });
    }
    Ok(())
}

struct RelationCtx<'a> {
    r: &'a BinaryRelation,
    rm: RelationMatroid,
    literal: LiteralOracle<'a>,
    table: OperatorTable,
    forms: &'a dyn ClosedForms,
}

impl RelationCtx<'_> {
    fn u(&self) -> &Universe {
        self.r.universe()
    }

    fn set(&self, s: &Subset) -> String {
        self.u().format_set(s)
    }
}

type Outcome = Result<Option<String>>;

struct RelationLaw {
    id: &'static str,
    statement: &'static str,
    check: fn(&RelationCtx) -> Outcome,
}

struct MatroidLaw {
    id: &'static str,
    statement: &'static str,
    check: fn(&ExplicitMatroid) -> Outcome,
}

fn first_set(sets: &[Subset], mut bad: impl FnMut(&Subset) -> Result<Option<String>>) -> Outcome {
    for x in sets {
        if let Some(w) = bad(x)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn report_failure(rep: &PropertyReport, property: &str) -> Option<String> {
    let e = rep.get(property)?;
    (!e.pass).then(|| {
        e.witness
            .as_ref()
            .map(|w| w.to_string())
            .unwrap_or_default()
    })
}

fn report_any_failure(rep: &PropertyReport) -> Option<String> {
    rep.first_failure().map(|f| f.to_string())
}

fn family_str(u: &Universe, f: &SetFamily) -> String {
    u.format_family(f)
}

macro_rules! pawlak_law {
    ($id:literal, $prop:literal) => {
        RelationLaw {
            id: $id,
            statement: concat!(
                "classical approximation property ",
                $prop,
                " for equivalence relations"
            ),
            check: |c| {
                if !c.r.is_equivalence() {
                    return Ok(None);
                }
                Ok(report_failure(&check_pawlak_properties(c.r)?, $prop))
            },
        }
    };
}

const RELATION_LAWS: &[RelationLaw] = &[
    RelationLaw {
        id: "D2.1.inverse-involutive",
        statement: "(R⁻¹)⁻¹ = R",
        check: |c| Ok((c.r.inverse().inverse() != *c.r).then(String::new)),
    },
    RelationLaw {
        id: "L3.neighborhood-duality",
        statement: "y ∈ RS_R(x) ⟺ x ∈ RP_R(y), and RS_R(x) = RP_{R⁻¹}(x)",
        check: |c| {
            let inv = c.r.inverse();
            for x in 0..c.r.size() {
                let rs = c.r.successor_neighborhood(x)?;
                if rs != inv.predecessor_neighborhood(x)? {
                    return Ok(Some(format!("x={}", c.u().label(x))));
                }
                for y in 0..c.r.size() {
                    if rs.contains(y) != c.r.predecessor_neighborhood(y)?.contains(x) {
                        return Ok(Some(format!("x={}, y={}", c.u().label(x), c.u().label(y))));
                    }
                }
            }
            Ok(None)
        },
    },
    RelationLaw {
        id: "D2.2.classes-reconstruct",
        statement: "R is an equivalence ⟺ U/R exists and \"same block\" rebuilds R",
        check: |c| {
            let rebuilt = match c.r.equivalence_classes() {
                Ok(classes) => BinaryRelation::from_partition(c.u(), &classes)? == *c.r,
                Err(_) => false,
            };
            Ok((rebuilt != c.r.is_equivalence()).then(String::new))
        },
    },
    RelationLaw {
        id: "D2.2.equivalence-approximations-use-classes",
        statement: "for an equivalence R, H_R(X) is the union of classes meeting X and L_R(X) the union of classes inside X",
        check: |c| {
            let Ok(classes) = c.r.equivalence_classes() else {
                return Ok(None);
            };
            first_set(&c.table.sets, |x| {
                let mut upper = c.u().empty_set();
                let mut lower = c.u().empty_set();
                for b in &classes {
                    if b.intersects(x) {
                        upper = upper.union(b);
                    }
                    if b.is_subset(x) {
                        lower = lower.union(b);
                    }
                }
                Ok((upper != *c.table.h(x) || lower != *c.table.l(x))
                    .then(|| format!("X={}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "P2.3.h-empty",
        statement: "H_R(∅) = ∅",
        check: |c| Ok(report_failure(&check_h_properties(c.r)?, "H-empty")),
    },
    RelationLaw {
        id: "P2.3.h-union",
        statement: "H_R(X ∪ Y) = H_R(X) ∪ H_R(Y)",
        check: |c| Ok(report_failure(&check_h_properties(c.r)?, "H-union")),
    },
    RelationLaw {
        id: "P2.3.h-monotone",
        statement: "X ⊆ Y ⟹ H_R(X) ⊆ H_R(Y)",
        check: |c| Ok(report_failure(&check_h_properties(c.r)?, "H-monotone")),
    },
    RelationLaw {
        id: "P2.3.lower-upper-duality",
        statement: "L_R(X) = H_R(Xᶜ)ᶜ",
        check: |c| {
            first_set(&c.table.sets, |x| {
                Ok((*c.table.l(x) != c.table.h(&x.complement()).complement())
                    .then(|| format!("X={}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "L3.reflexive-iff-extensive",
        statement: "R reflexive ⟺ X ⊆ H_R(X) for all X",
        check: |c| {
            let extensive = c.table.sets.iter().all(|x| x.is_subset(c.table.h(x)));
            Ok((extensive != c.r.is_reflexive()).then(String::new))
        },
    },
    RelationLaw {
        id: "L3.transitive-iff-h-contracting",
        statement: "R transitive ⟺ H_R(H_R(X)) ⊆ H_R(X) for all X",
        check: |c| {
            let contracting = c
                .table
                .sets
                .iter()
                .all(|x| c.table.h(c.table.h(x)).is_subset(c.table.h(x)));
            Ok((contracting != c.r.is_transitive()).then(String::new))
        },
    },
    pawlak_law!("P2.2.pawlak-1L", "1L"),
    pawlak_law!("P2.2.pawlak-1H", "1H"),
    pawlak_law!("P2.2.pawlak-2L", "2L"),
    pawlak_law!("P2.2.pawlak-2H", "2H"),
    pawlak_law!("P2.2.pawlak-3L", "3L"),
    pawlak_law!("P2.2.pawlak-3H", "3H"),
    pawlak_law!("P2.2.pawlak-4L", "4L"),
    pawlak_law!("P2.2.pawlak-4H", "4H"),
    pawlak_law!("P2.2.pawlak-5L", "5L"),
    pawlak_law!("P2.2.pawlak-5H", "5H"),
    pawlak_law!("P2.2.pawlak-6L", "6L"),
    pawlak_law!("P2.2.pawlak-6H", "6H"),
    pawlak_law!("P2.2.pawlak-7L", "7L"),
    pawlak_law!("P2.2.pawlak-7H", "7H"),
    pawlak_law!("P2.2.pawlak-8L", "8L"),
    pawlak_law!("P2.2.pawlak-8H", "8H"),
    RelationLaw {
        id: "D3.independence-literal",
        statement: "at most one element per neighborhood block ⟺ pairwise distinct successor neighborhoods",
        check: |c| {
            first_set(&c.table.sets, |x| {
                Ok((c.rm.is_independent(x) != c.literal.is_independent(x))
                    .then(|| format!("X={}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "P3.successor-axioms",
        statement: "I_S(R) satisfies (I1)–(I3)",
        check: |c| {
            let fam = matroid::independent_sets(&c.literal)?;
            Ok(report_any_failure(&matroid::check_matroid_axioms_labeled(c.u(), &fam)?))
        },
    },
    RelationLaw {
        id: "P3.predecessor-axioms",
        statement: "I_P(R) satisfies (I1)–(I3) and equals the shipped predecessor matroid",
        check: |c| {
            let literal = LiteralOracle::predecessor(c.r);
            let fam = matroid::independent_sets(&literal)?;
            if let Some(f) = report_any_failure(&matroid::check_matroid_axioms_labeled(c.u(), &fam)?) {
                return Ok(Some(f));
            }
            let shipped = RelationMatroid::new(c.r, NeighborhoodKind::Predecessor);
            let shipped = matroid::independent_sets(&shipped)?;
            Ok((shipped != fam).then(|| {
                format!(
                    "literal {} vs shipped {}",
                    family_str(c.u(), &fam),
                    family_str(c.u(), &shipped)
                )
            }))
        },
    },
    RelationLaw {
        id: "T3.successor-eq-predecessor-of-inverse",
        statement: "M_S(R) = M_P(R⁻¹)",
        check: |c| {
            let inv = c.r.inverse();
            let ms = matroid::independent_sets(&c.literal)?;
            let mp = matroid::independent_sets(&LiteralOracle::predecessor(&inv))?;
            Ok((ms != mp).then(|| {
                format!(
                    "I_S(R)={} I_P(R⁻¹)={}",
                    family_str(c.u(), &ms),
                    family_str(c.u(), &mp)
                )
            }))
        },
    },
    RelationLaw {
        id: "P3.dependent-closed-form",
        statement: "D(M(R)) = {X : ∃x ≠ y ∈ X, RS(x) = RS(y)} matches the generic dependent sets",
        check: |c| {
            let closed = c.forms.dependent_sets(&c.rm)?;
            let generic = matroid::dependent_sets(&c.literal)?;
            Ok((closed != generic).then(|| {
                format!(
                    "closed form {} vs generic {}",
                    family_str(c.u(), &closed),
                    family_str(c.u(), &generic)
                )
            }))
        },
    },
    RelationLaw {
        id: "P3.circuits-closed-form",
        statement: "C(M(R)) = {{x, y} : x ≠ y, RS(x) = RS(y)} matches the generic circuits",
        check: |c| {
            let closed = c.forms.circuits(&c.rm);
            let generic = matroid::circuits(&c.literal)?;
            Ok((closed != generic).then(|| {
                format!(
                    "closed form {} vs generic {}",
                    family_str(c.u(), &closed),
                    family_str(c.u(), &generic)
                )
            }))
        },
    },
    RelationLaw {
        id: "P3.circuits-are-pairs",
        statement: "every circuit of M(R) has exactly two elements",
        check: |c| {
            let circuits = matroid::circuits(&c.literal)?;
            let odd = circuits.iter().find(|s| s.len() != 2).map(|s| format!("C={}", c.set(s)));
            Ok(odd)
        },
    },
    RelationLaw {
        id: "P3.rank-closed-form",
        statement: "r_{M(R)}(X) = |{RS(x) : x ∈ X}| matches the exhaustive rank",
        check: |c| {
            first_set(&c.table.sets, |x| {
                let closed = c.forms.rank(&c.rm, x)?;
                let generic = matroid::rank(&c.literal, x)?;
                Ok((closed != generic)
                    .then(|| format!("X={}: closed form {closed} vs generic {generic}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "P3.closure-closed-form",
        statement: "cl_{M(R)}(X) = {u : ∃x ∈ X, RS(x) = RS(u)} matches the rank closure",
        check: |c| {
            first_set(&c.table.sets, |x| {
                let closed = c.forms.closure(&c.rm, x)?;
                let generic = matroid::closure(&c.literal, x)?;
                Ok((closed != generic).then(|| {
                    format!(
                        "X={}: closed form {} vs generic {}",
                        c.set(x),
                        c.set(&closed),
                        c.set(&generic)
                    )
                }))
            })
        },
    },
    RelationLaw {
        id: "P3.closed-set-criterion",
        statement: "cl_{M(R)}(X) = X ⟺ RS(x) ≠ RS(u) for x ∈ X, u ∉ X",
        check: |c| {
            first_set(&c.table.sets, |x| {
                let closed = c.forms.is_closed(&c.rm, x)?;
                let generic = matroid::is_closed(&c.literal, x)?;
                Ok((closed != generic)
                    .then(|| format!("X={}: closed form {closed} vs generic {generic}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "P2.4.rank-iff-independent",
        statement: "r(X) = |X| ⟺ X ∈ I, on M(R)",
        check: |c| {
            first_set(&c.table.sets, |x| {
                let full_rank = matroid::rank(&c.literal, x)? == x.len();
                Ok((full_rank != c.literal.is_independent(x)).then(|| format!("X={}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "P2.4.greedy-rank-exhaustive",
        statement: "greedy rank = exhaustive rank, on M(R)",
        check: |c| {
            first_set(&c.table.sets, |x| {
                let greedy = matroid::rank_greedy(&c.rm, x)?;
                let exhaustive = matroid::rank_exhaustive(&c.literal, x)?;
                Ok((greedy != exhaustive)
                    .then(|| format!("X={}: greedy {greedy} vs exhaustive {exhaustive}", c.set(x))))
            })
        },
    },
    RelationLaw {
        id: "P2.4.closure-axioms",
        statement: "cl_{M(R)} satisfies (CL1)–(CL4)",
        check: |c| Ok(report_any_failure(&matroid::check_closure_axioms(&c.rm)?)),
    },
    RelationLaw {
        id: "T3.same-matroid-criterion",
        statement: "M(R₁) = M(R₂) ⟺ RS_{R₁}(x) = RS_{R₁}(y) exactly when RS_{R₂}(x) = RS_{R₂}(y)",
        // checked across relations in `run_same_matroid`
        check: |_| Ok(None),
    },
    RelationLaw {
        id: "P3.cl-subset-upper-if-reflexive",
        statement: "R reflexive ⟹ cl_{M(R)}(X) ⊆ H_R(X)",
        check: |c| {
            let cmp = compare_with(c.r, |rm, x| c.forms.closure(rm, x))?;
            Ok(report_failure(&cmp.report(c.u()), "reflexive-implies-containment"))
        },
    },
    RelationLaw {
        id: "T3.cl-eq-H-iff-equivalence",
        statement: "cl_{M(R)} = H_R on every subset ⟺ R is an equivalence",
        check: |c| {
            let cmp = compare_with(c.r, |rm, x| c.forms.closure(rm, x))?;
            Ok(report_failure(&cmp.report(c.u()), "equality-iff-equivalence"))
        },
    },
    RelationLaw {
        id: "T4.round-trip",
        statement: "R(M(R)) = {(x, y) : RS_R(x) = RS_R(y)}",
        check: |c| {
            let induced = induced_pairs(&c.literal);
            let same = same_neighborhood_relation(c.r);
            Ok((induced != same).then(|| {
                format!(
                    "R(M(R))={} same-neighborhood={}",
                    induced.format_pairs(),
                    same.format_pairs()
                )
            }))
        },
    },
    RelationLaw {
        id: "P4.round-trip-equivalence",
        statement: "R(M(R)) is an equivalence whose classes are the neighborhood blocks",
        check: |c| {
            let induced = induce_relation(&c.literal)?.into_relation();
            let classes = induced.equivalence_classes()?;
            Ok((classes != c.rm.block_partition()).then(|| {
                format!(
                    "classes {} vs blocks {}",
                    family_str(c.u(), &classes),
                    family_str(c.u(), &c.rm.block_partition())
                )
            }))
        },
    },
    RelationLaw {
        id: "P4.reflexive-round-trip-subset",
        statement: "R reflexive ⟹ R(M(R)) ⊆ R",
        check: |c| Ok(report_failure(&check_round_trip_laws(c.r)?, "reflexive-implies-subset")),
    },
    RelationLaw {
        id: "P4.round-trip-fixed-iff-equivalence",
        statement: "R(M(R)) = R ⟺ R is an equivalence",
        check: |c| Ok(report_failure(&check_round_trip_laws(c.r)?, "fixed-iff-equivalence")),
    },
    RelationLaw {
        id: "P4.round-trip-idempotent",
        statement: "R(M(R(M(R)))) = R(M(R))",
        check: |c| {
            let once = induce_relation(&c.rm)?.into_relation();
            let twice = induce_relation(&build_relation_matroid(&once))?.into_relation();
            Ok((once != twice).then(|| {
                format!("once={} twice={}", once.format_pairs(), twice.format_pairs())
            }))
        },
    },
];

const MATROID_LAWS: &[MatroidLaw] = &[
    MatroidLaw {
        id: "P4.induced-equivalence",
        statement: "R(M) is an equivalence relation",
        check: |m| {
            Ok(induced_pairs(m)
                .equivalence_classes()
                .err()
                .map(|e| e.to_string()))
        },
    },
    MatroidLaw {
        id: "P4.induced-from-circuit-family",
        statement:
            "R(M) from pair tests = {(x, y) : x = y or {x, y} ∈ C(M)} from the full circuit family",
        check: |m| {
            let u = m.universe();
            let circuits = matroid::circuits(m)?;
            let n = u.len();
            let pairs = (0..n)
                .flat_map(|x| (0..n).map(move |y| (x, y)))
                .filter(|&(x, y)| x == y || circuits.contains(&Subset::singleton(n, x).with(y)));
            let from_family = BinaryRelation::from_pairs(u, pairs)?;
            let fast = induced_pairs(m);
            Ok((fast != from_family).then(|| {
                format!(
                    "pair tests {} vs family {}",
                    fast.format_pairs(),
                    from_family.format_pairs()
                )
            }))
        },
    },
    MatroidLaw {
        id: "P4.singleton-upper-in-closure",
        statement: "H_{R(M)}({x}) ⊆ cl_M({x})",
        check: |m| {
            let induced = induced_pairs(m);
            let loops = matroid::loops(m);
            for x in 0..m.universe().len() {
                if !singleton_comparison(m, &induced, &loops, x)?.upper_within_closure() {
                    return Ok(Some(format!("x={}", m.universe().label(x))));
                }
            }
            Ok(None)
        },
    },
    MatroidLaw {
        id: "P4.singleton-closure-decomposition",
        statement: "cl_M({x}) = H_{R(M)}({x}) ∪ {y : {y} ∈ C(M)}",
        check: |m| {
            let induced = induced_pairs(m);
            let loops = matroid::loops(m);
            let u = m.universe();
            for x in 0..u.len() {
                let cmp = singleton_comparison(m, &induced, &loops, x)?;
                if !cmp.decomposition_holds() {
                    return Ok(Some(format!(
                        "x={}: H={} loops={} cl={}",
                        u.label(x),
                        u.format_set(&cmp.upper),
                        u.format_set(&cmp.loops),
                        u.format_set(&cmp.closure)
                    )));
                }
            }
            Ok(None)
        },
    },
    MatroidLaw {
        id: "C4.upper-subset-closure",
        statement: "H_{R(M)}(X) ⊆ cl_M(X)",
        check: |m| Ok(report_any_failure(&check_upper_subset_closure(m)?)),
    },
    MatroidLaw {
        id: "L4.closure-via-circuits",
        statement: "cl_M(X) = X ∪ {u : ∃C ∈ C(M), u ∈ C ⊆ X ∪ {u}}",
        check: |m| {
            let circuits = matroid::circuits(m)?;
            let u = m.universe();
            for x in power_set(u.len()) {
                let via = matroid::closure_from_circuits(&circuits, &x);
                let by_rank = matroid::closure(m, &x)?;
                if via != by_rank {
                    return Ok(Some(format!(
                        "X={}: circuits {} vs rank {}",
                        u.format_set(&x),
                        u.format_set(&via),
                        u.format_set(&by_rank)
                    )));
                }
            }
            Ok(None)
        },
    },
    MatroidLaw {
        id: "P2.4.circuits-min-opp",
        statement: "C(M) = Min(Opp(I))",
        check: |m| {
            let direct = matroid::circuits(m)?;
            let literal = matroid::min_family(&matroid::opp_family(m.independents())?);
            Ok((direct != literal).then(|| {
                format!(
                    "{} vs {}",
                    family_str(m.universe(), &direct),
                    family_str(m.universe(), &literal)
                )
            }))
        },
    },
    MatroidLaw {
        id: "P2.4.matroid-rank-iff-independent",
        statement: "r(X) = |X| ⟺ X ∈ I",
        check: |m| {
            for x in power_set(m.universe().len()) {
                if (matroid::rank(m, &x)? == x.len()) != m.is_independent(&x) {
                    return Ok(Some(format!("X={}", m.universe().format_set(&x))));
                }
            }
            Ok(None)
        },
    },
    MatroidLaw {
        id: "P2.4.matroid-greedy-rank",
        statement: "greedy rank = exhaustive rank",
        check: |m| {
            for x in power_set(m.universe().len()) {
                if matroid::rank_greedy(m, &x)? != matroid::rank_exhaustive(m, &x)? {
                    return Ok(Some(format!("X={}", m.universe().format_set(&x))));
                }
            }
            Ok(None)
        },
    },
    MatroidLaw {
        id: "P2.4.matroid-closure-axioms",
        statement: "cl_M satisfies (CL1)–(CL4)",
        check: |m| Ok(report_any_failure(&matroid::check_closure_axioms(m)?)),
    },
];

/// A catalog entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LawInfo {
    pub id: &'static str,
    pub scope: Scope,
    pub statement: &'static str,
}

/// Every law the verifier knows, relation laws first.
pub fn catalog() -> Vec<LawInfo> {
    RELATION_LAWS
        .iter()
        .map(|l| LawInfo {
            id: l.id,
            scope: Scope::Relations,
            statement: l.statement,
        })
        .chain(MATROID_LAWS.iter().map(|l| LawInfo {
            id: l.id,
            scope: Scope::Matroids,
            statement: l.statement,
        }))
        .collect()
}

/// Runs the whole catalog at universe size `n`.
pub fn run_all(n: usize) -> Result<Vec<TheoremCase>> {
    run(n, &VerifyOptions::default())
}

pub fn run(n: usize, options: &VerifyOptions) -> Result<Vec<TheoremCase>> {
    run_with(n, options, &Standard)
}

/// Runs the selected laws with the given closed forms.
pub fn run_with(
    n: usize,
    options: &VerifyOptions,
    forms: &dyn ClosedForms,
) -> Result<Vec<TheoremCase>> {
    check_n(n)?;
    let known = catalog();
    for id in &options.laws {
        if !known.iter().any(|l| l.id == id) {
            return Err(Error::UnknownLaw(id.clone()));
        }
    }
    let selected = |id: &str, scope: Scope| {
        options.scope.admits(scope)
            && (options.laws.is_empty() || options.laws.iter().any(|l| l == id))
    };

    let relation_laws: Vec<&RelationLaw> = RELATION_LAWS
        .iter()
        .filter(|l| selected(l.id, Scope::Relations))
        .collect();
    let matroid_laws: Vec<&MatroidLaw> = MATROID_LAWS
        .iter()
        .filter(|l| selected(l.id, Scope::Matroids))
        .collect();

    let mut cases = Vec::new();
    if !relation_laws.is_empty() {
        cases.extend(run_relation_laws(n, &relation_laws, forms)?);
    }
    if !matroid_laws.is_empty() {
        cases.extend(run_matroid_laws(n, &matroid_laws)?);
    }
    Ok(cases)
}

fn run_relation_laws(
    n: usize,
    laws: &[&RelationLaw],
    forms: &dyn ClosedForms,
) -> Result<Vec<TheoremCase>> {
    let relations: Vec<BinaryRelation> = enumerate_relations(n)?.collect();
    let per_relation: Vec<Vec<Option<String>>> = relations
        .par_iter()
        .map(|r| {
            let ctx = RelationCtx {
                r,
                rm: build_relation_matroid(r),
                literal: LiteralOracle::successor(r),
                table: OperatorTable::new(r),
                forms,
            };
            laws.iter()
                .map(|law| match (law.check)(&ctx) {
                    Ok(None) => Ok(None),
                    Ok(Some(detail)) => Ok(Some(describe_relation(r, &detail))),
                    Err(Error::Capacity { .. }) => unreachable!("verifier sizes are bounded"),
                    Err(e) => Ok(Some(describe_relation(r, &format!("error: {e}")))),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;

    let mut cases = Vec::with_capacity(laws.len());
    for (i, law) in laws.iter().enumerate() {
        let witness = if law.id == "T3.same-matroid-criterion" {
            run_same_matroid(&relations)?
        } else {
            per_relation.iter().find_map(|outcomes| outcomes[i].clone())
        };
        cases.push(TheoremCase::new(law.id, Scope::Relations, n, witness));
    }
    Ok(cases)
}

/// Groups relations by their independent-set family and checks that
/// `same_matroid` agrees with the grouping, both within and across groups.
fn run_same_matroid(relations: &[BinaryRelation]) -> Result<Option<String>> {
    let family_key = |r: &BinaryRelation| -> Result<SetFamily> {
        matroid::independent_sets(&LiteralOracle::successor(r))
    };
    let mut reps: Vec<&BinaryRelation> = Vec::new();
    let mut by_family: HashMap<SetFamily, usize> = HashMap::new();
    for r in relations {
        let key = family_key(r)?;
        match by_family.get(&key) {
            Some(&i) => {
                if !same_matroid(reps[i], r)? {
                    return Ok(Some(format!(
                        "R1={} R2={}: equal matroids but different neighborhood partitions",
                        reps[i].format_pairs(),
                        r.format_pairs()
                    )));
                }
            }
            None => {
                by_family.insert(key, reps.len());
                reps.push(r);
            }
        }
    }
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            if same_matroid(a, b)? {
                return Ok(Some(format!(
                    "R1={} R2={}: different matroids but equal neighborhood partitions",
                    a.format_pairs(),
                    b.format_pairs()
                )));
            }
        }
    }
    Ok(None)
}

fn run_matroid_laws(n: usize, laws: &[&MatroidLaw]) -> Result<Vec<TheoremCase>> {
    let matroids: Vec<ExplicitMatroid> = enumerate_matroids(n)?.collect();
    let per_matroid: Vec<Vec<Option<String>>> = matroids
        .par_iter()
        .map(|m| {
            laws.iter()
                .map(|law| match (law.check)(m) {
                    Ok(w) => w.map(|d| describe_matroid(m, &d)),
                    Err(e) => Some(describe_matroid(m, &format!("error: {e}"))),
                })
                .collect()
        })
        .collect();
    Ok(laws
        .iter()
        .enumerate()
        .map(|(i, law)| {
            let witness = per_matroid.iter().find_map(|o| o[i].clone());
            TheoremCase::new(law.id, Scope::Matroids, n, witness)
        })
        .collect())
}

fn describe_relation(r: &BinaryRelation, detail: &str) -> String {
    if detail.is_empty() {
        format!("R={}", r.format_pairs())
    } else {
        format!("R={}: {detail}", r.format_pairs())
    }
}

fn describe_matroid(m: &ExplicitMatroid, detail: &str) -> String {
    format!(
        "I={}: {detail}",
        m.universe().format_family(m.independents())
    )
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} (n={})", self.id, self.n)?;
        for w in &self.witnesses {
            write!(f, ": {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        assert_eq!(enumerate_relations(1).unwrap().count(), 2);
        assert_eq!(enumerate_relations(2).unwrap().count(), 16);
        assert_eq!(enumerate_relations(3).unwrap().count(), 512);
        assert!(matches!(
            enumerate_relations(5),
            Err(Error::Capacity { .. })
        ));
        assert!(enumerate_relations(0).is_err());
    }

    #[test]
    fn relations_ascend_by_code() {
        let rels: Vec<_> = enumerate_relations(2).unwrap().collect();
        assert!(rels[0].is_empty());
        assert_eq!(rels[1].pairs().collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(rels[15], BinaryRelation::full(rels[15].universe()));
    }

    #[test]
    fn one_element_matroids() {
        let ms: Vec<_> = enumerate_matroids(1).unwrap().collect();
        assert_eq!(ms.len(), 2);
        assert_eq!(ms[0].independents().len(), 1);
        assert_eq!(ms[1].independents().len(), 2);
    }

    #[test]
    fn mask_filter_agrees_with_axiom_report() {
        for n in 1..=3usize {
            let subsets = 1u32 << n;
            for fam in 0..1u64 << subsets {
                let members = (0..subsets as u64)
                    .filter(|&s| fam >> s & 1 == 1)
                    .map(|s| Subset::from_mask(n, s));
                let family = SetFamily::from_members(n, members).unwrap();
                let slow = matroid::check_matroid_axioms(&family).unwrap().all_pass();
                assert_eq!(is_matroid_mask(n, fam), slow, "n={n} fam={fam:#b}");
            }
        }
    }

    #[test]
    fn unknown_law_is_rejected() {
        let opts = VerifyOptions {
            laws: vec!["nope".into()],
            ..Default::default()
        };
        assert!(matches!(run(2, &opts), Err(Error::UnknownLaw(_))));
    }

    #[test]
    fn ids_are_unique() {
        let cat = catalog();
        let mut ids: Vec<_> = cat.iter().map(|l| l.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), cat.len());
    }

    #[test]
    fn single_element_universe_passes() {
        let cases = run_all(1).unwrap();
        assert!(cases.iter().all(TheoremCase::passed), "{cases:#?}");
        assert_eq!(cases.len(), catalog().len());
    }
}
