//! Lower and upper approximation operators built from successor
//! neighborhoods:
//!
//! ```text
//! L_R(X) = {u ∈ U : RS(u) ⊆ X}
//! H_R(X) = {u ∈ U : RS(u) ∩ X ≠ ∅}
//! ```
//!
//! For an equivalence relation `RS(u)` is the class of `u`, so these are the
//! classical lower and upper approximations; no separate implementation
//! exists for that case.

use crate::error::Result;
use crate::relation::BinaryRelation;
use crate::report::{first_witness, PropertyReport, Witness};
use crate::subset::{ensure_exhaustive, power_set, Subset};

/// `L_R(X)`.
pub fn lower_approx(r: &BinaryRelation, x: &Subset) -> Result<Subset> {
    r.universe().check_subset(x)?;
    Ok(lower_unchecked(r, x))
}

/// `H_R(X)`.
pub fn upper_approx(r: &BinaryRelation, x: &Subset) -> Result<Subset> {
    r.universe().check_subset(x)?;
    Ok(upper_unchecked(r, x))
}

pub(crate) fn lower_unchecked(r: &BinaryRelation, x: &Subset) -> Subset {
    let mut out = r.universe().empty_set();
    for u in 0..r.size() {
        if r.successors(u).is_subset(x) {
            out.insert(u);
        }
    }
    out
}

pub(crate) fn upper_unchecked(r: &BinaryRelation, x: &Subset) -> Subset {
    let mut out = r.universe().empty_set();
    for u in 0..r.size() {
        if r.successors(u).intersects(x) {
            out.insert(u);
        }
    }
    out
}

/// Both approximations of one target set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationPair {
    pub target: Subset,
    pub lower: Subset,
    pub upper: Subset,
}

impl ApproximationPair {
    pub fn new(r: &BinaryRelation, target: &Subset) -> Result<Self> {
        Ok(ApproximationPair {
            target: target.clone(),
            lower: lower_approx(r, target)?,
            upper: upper_approx(r, target)?,
        })
    }

    /// Elements possibly but not certainly in the target.
    pub fn boundary(&self) -> Subset {
        self.upper.difference(&self.lower)
    }
}

/// `L_R` and `H_R` tabulated over every subset, indexed by subset mask.
pub(crate) struct OperatorTable {
    pub(crate) sets: Vec<Subset>,
    pub(crate) lower: Vec<Subset>,
    pub(crate) upper: Vec<Subset>,
}

impl OperatorTable {
    pub(crate) fn new(r: &BinaryRelation) -> Self {
        let sets: Vec<Subset> = power_set(r.size()).collect();
        let lower = sets.iter().map(|x| lower_unchecked(r, x)).collect();
        let upper = sets.iter().map(|x| upper_unchecked(r, x)).collect();
        OperatorTable { sets, lower, upper }
    }

    fn idx(s: &Subset) -> usize {
        s.to_mask().expect("tabulated universes fit one word") as usize
    }

    pub(crate) fn l(&self, s: &Subset) -> &Subset {
        &self.lower[Self::idx(s)]
    }

    pub(crate) fn h(&self, s: &Subset) -> &Subset {
        &self.upper[Self::idx(s)]
    }
}

/// Exhaustively checks the three basic properties of `H_R`, which hold for
/// every relation:
///
/// * `H-empty`: `H(∅) = ∅`
/// * `H-union`: `H(X ∪ Y) = H(X) ∪ H(Y)`
/// * `H-monotone`: `X ⊆ Y ⟹ H(X) ⊆ H(Y)`
pub fn check_h_properties(r: &BinaryRelation) -> Result<PropertyReport> {
    ensure_exhaustive("check_h_properties", r.size())?;
    let t = OperatorTable::new(r);
    let u = r.universe();
    let mut report = PropertyReport::new();

    let empty = u.empty_set();
    report.record(
        "H-empty",
        (!t.h(&empty).is_empty()).then(|| Witness::new().set("X", u, &empty)),
    );
    report.record(
        "H-union",
        first_witness(pairs(&t.sets), |(x, y)| {
            (*t.h(&x.union(y)) != t.h(x).union(t.h(y)))
                .then(|| Witness::new().set("X", u, x).set("Y", u, y))
        }),
    );
    report.record(
        "H-monotone",
        first_witness(pairs(&t.sets), |(x, y)| {
            (x.is_subset(y) && !t.h(x).is_subset(t.h(y)))
                .then(|| Witness::new().set("X", u, x).set("Y", u, y))
        }),
    );
    Ok(report)
}

fn pairs(sets: &[Subset]) -> impl Iterator<Item = (&Subset, &Subset)> {
    sets.iter()
        .flat_map(move |x| sets.iter().map(move |y| (x, y)))
}

/// Identifiers of the sixteen classical approximation properties, in order.
pub const PAWLAK_PROPERTIES: [&str; 16] = [
    "1L", "1H", "2L", "2H", "3L", "3H", "4L", "4H", "5L", "5H", "6L", "6H", "7L", "7H", "8L", "8H",
];

/// Exhaustively checks the sixteen classical properties of the lower and
/// upper approximations of an equivalence relation:
///
/// | id | statement |
/// |----|-----------|
/// | 1L | `L(U) = U` |
/// | 1H | `H(U) = U` |
/// | 2L | `L(∅) = ∅` |
/// | 2H | `H(∅) = ∅` |
/// | 3L | `L(X) ⊆ X` |
/// | 3H | `X ⊆ H(X)` |
/// | 4L | `L(X ∩ Y) = L(X) ∩ L(Y)` |
/// | 4H | `H(X ∪ Y) = H(X) ∪ H(Y)` |
/// | 5L | `L(L(X)) = L(X)` |
/// | 5H | `H(H(X)) = H(X)` |
/// | 6L | `X ⊆ Y ⟹ L(X) ⊆ L(Y)` |
/// | 6H | `X ⊆ Y ⟹ H(X) ⊆ H(Y)` |
/// | 7L | `L(Xᶜ) = H(X)ᶜ` |
/// | 7H | `H(Xᶜ) = L(X)ᶜ` |
/// | 8L | `L(L(X)ᶜ) = L(X)ᶜ` |
/// | 8H | `H(H(X)ᶜ) = H(X)ᶜ` |
///
/// 5H and the monotonicity reading of 6L/6H are the intended statements of
/// the classical list; the literal "`X ⊆ Y ⟹ op(X) ⊆ op(X)`" would be vacuous.
pub fn check_pawlak_properties(r: &BinaryRelation) -> Result<PropertyReport> {
    r.equivalence_classes()?;
    ensure_exhaustive("check_pawlak_properties", r.size())?;
    let t = OperatorTable::new(r);
    let u = r.universe();
    let full = u.full_set();
    let empty = u.empty_set();
    let mut report = PropertyReport::new();

    let whole = |ok: bool, s: &Subset| (!ok).then(|| Witness::new().set("X", u, s));
    let single = |f: &dyn Fn(&Subset) -> bool| {
        first_witness(&t.sets, |x| (!f(x)).then(|| Witness::new().set("X", u, x)))
    };
    let double = |f: &dyn Fn(&Subset, &Subset) -> bool| {
        first_witness(pairs(&t.sets), |(x, y)| {
            (!f(x, y)).then(|| Witness::new().set("X", u, x).set("Y", u, y))
        })
    };

    report.record("1L", whole(*t.l(&full) == full, &full));
    report.record("1H", whole(*t.h(&full) == full, &full));
    report.record("2L", whole(t.l(&empty).is_empty(), &empty));
    report.record("2H", whole(t.h(&empty).is_empty(), &empty));
    report.record("3L", single(&|x| t.l(x).is_subset(x)));
    report.record("3H", single(&|x| x.is_subset(t.h(x))));
    report.record(
        "4L",
        double(&|x, y| *t.l(&x.intersection(y)) == t.l(x).intersection(t.l(y))),
    );
    report.record(
        "4H",
        double(&|x, y| *t.h(&x.union(y)) == t.h(x).union(t.h(y))),
    );
    report.record("5L", single(&|x| t.l(t.l(x)) == t.l(x)));
    report.record("5H", single(&|x| t.h(t.h(x)) == t.h(x)));
    report.record(
        "6L",
        double(&|x, y| !x.is_subset(y) || t.l(x).is_subset(t.l(y))),
    );
    report.record(
        "6H",
        double(&|x, y| !x.is_subset(y) || t.h(x).is_subset(t.h(y))),
    );
    report.record(
        "7L",
        single(&|x| *t.l(&x.complement()) == t.h(x).complement()),
    );
    report.record(
        "7H",
        single(&|x| *t.h(&x.complement()) == t.l(x).complement()),
    );
    report.record(
        "8L",
        single(&|x| {
            let c = t.l(x).complement();
            *t.l(&c) == c
        }),
    );
    report.record(
        "8H",
        single(&|x| {
            let c = t.h(x).complement();
            *t.h(&c) == c
        }),
    );
    Ok(report)
}
