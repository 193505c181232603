//! The relation induced by a matroid through its circuits,
//!
//! ```text
//! x R(M) y  ⟺  x = y  or  {x, y} ∈ C(M),
//! ```
//!
//! and the round trip `R ↦ M(R) ↦ R(M(R))`.
//!
//! Only circuits of size at most two matter, so `R(M)` is computed from
//! `O(n²)` oracle calls and needs no exhaustive scan. A loop `y` (a
//! one-element circuit) is never part of a two-element circuit, so it is
//! related to itself only. Loops reappear as a separate term in the
//! singleton-closure decomposition `cl({x}) = H_{R(M)}({x}) ∪ loops`.

use crate::approx::{upper_unchecked, OperatorTable};
use crate::error::{Error, Result};
use crate::matroid::{self, MatroidOracle};
use crate::relation::BinaryRelation;
use crate::relation_matroid::build_relation_matroid;
use crate::report::{first_witness, PropertyReport, Witness};
use crate::subset::{ensure_exhaustive, Subset};

/// `R(M)` together with the matroid it came from.
#[derive(Debug)]
pub struct InducedRelation<'m, M: ?Sized> {
    source: &'m M,
    relation: BinaryRelation,
}

impl<'m, M: MatroidOracle + ?Sized> InducedRelation<'m, M> {
    pub fn source(&self) -> &'m M {
        self.source
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    pub fn into_relation(self) -> BinaryRelation {
        self.relation
    }
}

/// Whether `{x, y}` (with `x ≠ y`) is a circuit: dependent, with both
/// singletons and the empty set independent.
fn is_pair_circuit<M: MatroidOracle + ?Sized>(m: &M, x: usize, y: usize) -> bool {
    let n = m.universe().len();
    let sx = Subset::singleton(n, x);
    let sy = Subset::singleton(n, y);
    m.is_independent(&Subset::empty(n))
        && m.is_independent(&sx)
        && m.is_independent(&sy)
        && !m.is_independent(&sx.with(y))
}

/// `R(M)` without the equivalence check.
pub(crate) fn induced_pairs<M: MatroidOracle + ?Sized>(m: &M) -> BinaryRelation {
    let u = m.universe();
    let n = u.len();
    let mut pairs = Vec::new();
    for x in 0..n {
        pairs.push((x, x));
        for y in x + 1..n {
            if is_pair_circuit(m, x, y) {
                pairs.push((x, y));
                pairs.push((y, x));
            }
        }
    }
    BinaryRelation::from_pairs(u, pairs).expect("indices lie in the universe")
}

/// `R(M)`. Fails only if the result is not an equivalence relation, which
/// cannot happen for an oracle that satisfies the matroid axioms.
pub fn induce_relation<M: MatroidOracle + ?Sized>(m: &M) -> Result<InducedRelation<'_, M>> {
    let relation = induced_pairs(m);
    if let Err(Error::NotEquivalence { property }) = relation.equivalence_classes() {
        return Err(Error::LawViolation {
            law: "induced relation is an equivalence",
            detail: format!("R(M) = {} is not {property}", relation.format_pairs()),
        });
    }
    Ok(InducedRelation {
        source: m,
        relation,
    })
}

/// `H_{R(M)}({x})`, `cl_M({x})` and the loops of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingletonComparison {
    pub upper: Subset,
    pub closure: Subset,
    pub loops: Subset,
}

impl SingletonComparison {
    /// `H_{R(M)}({x}) ⊆ cl_M({x})`.
    pub fn upper_within_closure(&self) -> bool {
        self.upper.is_subset(&self.closure)
    }

    /// `cl_M({x}) = H_{R(M)}({x}) ∪ loops`.
    pub fn decomposition_holds(&self) -> bool {
        self.closure == self.upper.union(&self.loops)
    }
}

pub(crate) fn singleton_comparison<M: MatroidOracle + ?Sized>(
    m: &M,
    induced: &BinaryRelation,
    loops: &Subset,
    x: usize,
) -> Result<SingletonComparison> {
    let single = Subset::singleton(m.universe().len(), x);
    Ok(SingletonComparison {
        upper: upper_unchecked(induced, &single),
        closure: matroid::closure(m, &single)?,
        loops: loops.clone(),
    })
}

/// Computes the three sets for one element and checks containment and the
/// loop decomposition.
pub fn compare_upper_and_closure_singleton<M: MatroidOracle + ?Sized>(
    m: &M,
    x: usize,
) -> Result<SingletonComparison> {
    m.universe().check_element(x)?;
    let induced = induce_relation(m)?;
    let cmp = singleton_comparison(m, induced.relation(), &matroid::loops(m), x)?;
    let u = m.universe();
    if !cmp.upper_within_closure() {
        return Err(Error::LawViolation {
            law: "H_{R(M)}({x}) ⊆ cl_M({x})",
            detail: format!(
                "x={}: H={} cl={}",
                u.label(x),
                u.format_set(&cmp.upper),
                u.format_set(&cmp.closure)
            ),
        });
    }
    if !cmp.decomposition_holds() {
        return Err(Error::LawViolation {
            law: "cl_M({x}) = H_{R(M)}({x}) ∪ loops",
            detail: format!(
                "x={}: H={} loops={} cl={}",
                u.label(x),
                u.format_set(&cmp.upper),
                u.format_set(&cmp.loops),
                u.format_set(&cmp.closure)
            ),
        });
    }
    Ok(cmp)
}

/// Checks `H_{R(M)}(X) ⊆ cl_M(X)` for every `X ⊆ U` under the property
/// name `upper-subset-closure`.
pub fn check_upper_subset_closure<M: MatroidOracle + ?Sized>(m: &M) -> Result<PropertyReport> {
    let u = m.universe();
    ensure_exhaustive("check_upper_subset_closure", u.len())?;
    let induced = induced_pairs(m);
    let table = OperatorTable::new(&induced);
    let mut failure = None;
    for x in &table.sets {
        let cl = matroid::closure(m, x)?;
        if !table.h(x).is_subset(&cl) {
            failure = Some(Witness::new().set("X", u, x));
            break;
        }
    }
    let mut rep = PropertyReport::new();
    rep.record("upper-subset-closure", failure);
    Ok(rep)
}

/// `R(M(R))` computed through the generic matroid route, alongside the
/// same-successor-neighborhood relation computed directly from `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundTrip {
    pub induced: BinaryRelation,
    pub same_neighborhood: BinaryRelation,
}

/// `{(x, y) : RS_R(x) = RS_R(y)}`, straight from the adjacency rows.
pub fn same_neighborhood_relation(r: &BinaryRelation) -> BinaryRelation {
    let n = r.size();
    let pairs = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| r.successors(x) == r.successors(y));
    BinaryRelation::from_pairs(r.universe(), pairs).expect("indices lie in the universe")
}

/// Computes `R(M(R))` and checks it against the same-neighborhood relation.
pub fn round_trip_relation(r: &BinaryRelation) -> Result<RoundTrip> {
    let rm = build_relation_matroid(r);
    let induced = induce_relation(&rm)?.into_relation();
    let same_neighborhood = same_neighborhood_relation(r);
    if induced != same_neighborhood {
        return Err(Error::LawViolation {
            law: "R(M(R)) = same-neighborhood relation",
            detail: format!(
                "R(M(R)) = {} but same-neighborhood = {}",
                induced.format_pairs(),
                same_neighborhood.format_pairs()
            ),
        });
    }
    Ok(RoundTrip {
        induced,
        same_neighborhood,
    })
}

/// Checks the two laws linking `R` and `R(M(R))`, plus the plain fact they
/// are about:
///
/// * `reflexive-implies-subset` (law): `R` reflexive ⟹ `R(M(R)) ⊆ R`
/// * `round-trip-equals-input` (fact): `R(M(R)) = R`; fails with the lowest
///   pair on which the two differ
/// * `fixed-iff-equivalence` (law): `R(M(R)) = R` ⟺ `R` is an equivalence
pub fn check_round_trip_laws(r: &BinaryRelation) -> Result<PropertyReport> {
    let induced = round_trip_relation(r)?.induced;
    let u = r.universe();
    let n = r.size();
    let mut rep = PropertyReport::new();

    let reflexive_fails = r.is_reflexive() && !induced.is_subrelation(r);
    rep.record(
        "reflexive-implies-subset",
        reflexive_fails
            .then(|| {
                first_witness(induced.pairs(), |(x, y)| {
                    (!r.contains(x, y)).then(|| Witness::new().pair("pair", u, x, y))
                })
            })
            .flatten(),
    );

    let diff = first_witness(
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))),
        |(x, y)| {
            (r.contains(x, y) != induced.contains(x, y))
                .then(|| Witness::new().pair("pair", u, x, y))
        },
    );
    let fixed = diff.is_none();
    rep.record("round-trip-equals-input", diff.clone());
    rep.record(
        "fixed-iff-equivalence",
        (fixed != r.is_equivalence()).then(|| diff.unwrap_or_default()),
    );
    Ok(rep)
}
