//! Generic matroid machinery over an independence oracle.
//!
//! Every operation here reaches the matroid only through
//! [`MatroidOracle::is_independent`], which is what makes these routines a
//! usable ground truth for the closed forms of
//! [`RelationMatroid`](crate::relation_matroid::RelationMatroid).

use crate::error::{Error, Result};
use crate::report::{first_witness, PropertyReport, Witness};
use crate::subset::{ensure_exhaustive, power_set, SetFamily, Subset};
use crate::universe::Universe;

/// A ground set together with an independence predicate.
///
/// Implementations must be pure: the same set always gets the same answer.
pub trait MatroidOracle {
    fn universe(&self) -> &Universe;

    fn is_independent(&self, set: &Subset) -> bool;

    /// Whether the independent sets are known to satisfy the matroid axioms.
    /// Only then does [`rank`] take the greedy path.
    fn is_verified_matroid(&self) -> bool {
        false
    }
}

impl<M: MatroidOracle + ?Sized> MatroidOracle for &M {
    fn universe(&self) -> &Universe {
        (**self).universe()
    }

    fn is_independent(&self, set: &Subset) -> bool {
        (**self).is_independent(set)
    }

    fn is_verified_matroid(&self) -> bool {
        (**self).is_verified_matroid()
    }
}

/// An oracle backed by a closure. Never treated as axiom-verified.
pub struct FnOracle<F> {
    universe: Universe,
    predicate: F,
}

impl<F: Fn(&Subset) -> bool> FnOracle<F> {
    pub fn new(universe: &Universe, predicate: F) -> Self {
        FnOracle {
            universe: universe.clone(),
            predicate,
        }
    }
}

impl<F: Fn(&Subset) -> bool> MatroidOracle for FnOracle<F> {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn is_independent(&self, set: &Subset) -> bool {
        (self.predicate)(set)
    }
}

/// A matroid given by its full list of independent sets. The constructor
/// rejects families that violate (I1)–(I3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitMatroid {
    universe: Universe,
    independents: SetFamily,
}

impl ExplicitMatroid {
    pub fn new(universe: &Universe, independents: SetFamily) -> Result<Self> {
        universe.check_subset(&Subset::empty(independents.width()))?;
        let report = check_matroid_axioms_labeled(universe, &independents)?;
        if !report.all_pass() {
            return Err(Error::NotAMatroid(report));
        }
        Ok(ExplicitMatroid {
            universe: universe.clone(),
            independents,
        })
    }

    /// Skips the axiom check; callers must already know the family is a
    /// matroid.
    pub(crate) fn new_unchecked(universe: &Universe, independents: SetFamily) -> Self {
        ExplicitMatroid {
            universe: universe.clone(),
            independents,
        }
    }

    /// Tabulates the independent sets of any oracle and verifies them.
    pub fn from_oracle<M: MatroidOracle + ?Sized>(m: &M) -> Result<Self> {
        Self::new(m.universe(), independent_sets(m)?)
    }

    pub fn independents(&self) -> &SetFamily {
        &self.independents
    }
}

impl MatroidOracle for ExplicitMatroid {
    fn universe(&self) -> &Universe {
        &self.universe
    }

    fn is_independent(&self, set: &Subset) -> bool {
        self.independents.contains(set)
    }

    fn is_verified_matroid(&self) -> bool {
        true
    }
}

/// `Min(A)`: the inclusion-minimal members of `a`.
pub fn min_family(a: &SetFamily) -> SetFamily {
    a.min_family()
}

/// `Opp(A)`: every subset of the universe not in `a`.
pub fn opp_family(a: &SetFamily) -> Result<SetFamily> {
    a.opp_family()
}

/// Checks the independence axioms on an explicit family:
///
/// * `I1`: `∅ ∈ I`
/// * `I2`: `I ∈ I, I' ⊆ I ⟹ I' ∈ I`
/// * `I3`: `I₁, I₂ ∈ I, |I₁| < |I₂| ⟹ ∃u ∈ I₂ − I₁, I₁ ∪ {u} ∈ I`
pub fn check_matroid_axioms(independents: &SetFamily) -> Result<PropertyReport> {
    let n = independents.width();
    ensure_exhaustive("check_matroid_axioms", n)?;
    check_matroid_axioms_labeled(&Universe::new(n.max(1))?, independents)
}

/// [`check_matroid_axioms`] with witnesses rendered in `universe`'s labels.
pub fn check_matroid_axioms_labeled(
    universe: &Universe,
    independents: &SetFamily,
) -> Result<PropertyReport> {
    let n = independents.width();
    ensure_exhaustive("check_matroid_axioms", n)?;
    universe.check_subset(&Subset::empty(n))?;
    let u = universe;
    let fam = independents;
    let mut report = PropertyReport::new();

    let empty = Subset::empty(n);
    report.record(
        "I1",
        (!fam.contains(&empty)).then(|| Witness::new().set("I", u, &empty)),
    );
    report.record(
        "I2",
        first_witness(fam, |i| {
            i.subsets()
                .find(|sub| !fam.contains(sub))
                .map(|sub| Witness::new().set("I", u, i).set("I'", u, &sub))
        }),
    );
    report.record(
        "I3",
        first_witness(
            fam.iter().flat_map(|a| fam.iter().map(move |b| (a, b))),
            |(i1, i2)| {
                let augmentable = i2.difference(i1).iter().any(|e| fam.contains(&i1.with(e)));
                (i1.len() < i2.len() && !augmentable)
                    .then(|| Witness::new().set("I1", u, i1).set("I2", u, i2))
            },
        ),
    );
    Ok(report)
}

/// All sets the oracle calls independent.
pub fn independent_sets<M: MatroidOracle + ?Sized>(m: &M) -> Result<SetFamily> {
    let n = m.universe().len();
    ensure_exhaustive("independent_sets", n)?;
    SetFamily::from_members(n, power_set(n).filter(|s| m.is_independent(s)))
}

/// `D(M) = Opp(I)`.
pub fn dependent_sets<M: MatroidOracle + ?Sized>(m: &M) -> Result<SetFamily> {
    let n = m.universe().len();
    ensure_exhaustive("dependent_sets", n)?;
    SetFamily::from_members(n, power_set(n).filter(|s| !m.is_independent(s)))
}

/// `C(M) = Min(D(M))`.
///
/// A dependent set is minimal iff none of its one-element deletions
/// contains a dependent set. Walking masks in ascending order visits every
/// proper subset first, so one pass suffices even for oracles that are not
/// downward closed.
pub fn circuits<M: MatroidOracle + ?Sized>(m: &M) -> Result<SetFamily> {
    let n = m.universe().len();
    ensure_exhaustive("circuits", n)?;
    let size = 1usize << n;
    let mut dependent = vec![false; size];
    let mut covers_dependent = vec![false; size];
    let mut out = SetFamily::new(n);
    for mask in 0..size {
        let s = Subset::from_mask(n, mask as u64);
        dependent[mask] = !m.is_independent(&s);
        let below = s.iter().any(|e| covers_dependent[mask & !(1 << e)]);
        covers_dependent[mask] = dependent[mask] || below;
        if dependent[mask] && !below {
            out.insert(s)?;
        }
    }
    Ok(out)
}

/// Elements forming one-element circuits.
pub fn loops<M: MatroidOracle + ?Sized>(m: &M) -> Subset {
    let n = m.universe().len();
    let mut out = Subset::empty(n);
    if m.is_independent(&out) {
        for y in 0..n {
            if !m.is_independent(&Subset::singleton(n, y)) {
                out.insert(y);
            }
        }
    }
    out
}

/// `r(X) = max{|I| : I ⊆ X, I ∈ I}`.
///
/// Axiom-verified oracles take the greedy path; anything else is scanned
/// exhaustively, since greedy is only correct under the exchange property.
pub fn rank<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Result<usize> {
    if m.is_verified_matroid() {
        rank_greedy(m, x)
    } else {
        rank_exhaustive(m, x)
    }
}

/// Greedy rank: grow an independent set by scanning `x` in ascending
/// index order.
pub fn rank_greedy<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Result<usize> {
    m.universe().check_subset(x)?;
    Ok(greedy_basis(m, x).len())
}

fn greedy_basis<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Subset {
    let mut basis = Subset::empty(x.width());
    for e in x.iter() {
        let grown = basis.with(e);
        if m.is_independent(&grown) {
            basis = grown;
        }
    }
    basis
}

/// Rank by checking every subset of `x`.
pub fn rank_exhaustive<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Result<usize> {
    m.universe().check_subset(x)?;
    ensure_exhaustive("rank_exhaustive", x.width())?;
    Ok(x.subsets()
        .filter(|s| m.is_independent(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0))
}

/// `cl(X) = {u ∈ U : r(X) = r(X ∪ {u})}`.
pub fn closure<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Result<Subset> {
    let r = rank(m, x)?;
    let mut out = x.clone();
    for e in x.complement().iter() {
        if rank(m, &x.with(e))? == r {
            out.insert(e);
        }
    }
    Ok(out)
}

/// `cl(X) = X`.
pub fn is_closed<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Result<bool> {
    Ok(closure(m, x)? == *x)
}

/// `cl(X) = X ∪ {u : ∃C ∈ C(M), u ∈ C ⊆ X ∪ {u}}`.
pub fn closure_via_circuits<M: MatroidOracle + ?Sized>(m: &M, x: &Subset) -> Result<Subset> {
    m.universe().check_subset(x)?;
    Ok(closure_from_circuits(&circuits(m)?, x))
}

/// The circuit form of the closure, given the circuit family.
pub fn closure_from_circuits(circuits: &SetFamily, x: &Subset) -> Subset {
    let mut out = x.clone();
    for c in circuits {
        let outside = c.difference(x);
        if outside.len() == 1 {
            out = out.union(&outside);
        }
    }
    out
}

/// Checks (CL1)–(CL4) for the rank closure of `m`.
pub fn check_closure_axioms<M: MatroidOracle + ?Sized>(m: &M) -> Result<PropertyReport> {
    let n = m.universe().len();
    ensure_exhaustive("check_closure_axioms", n)?;
    check_closure_operator(m.universe(), |x| closure(m, x))
}

/// Checks the closure axioms for an arbitrary operator on `2^U`:
///
/// * `CL1`: `X ⊆ cl(X)`
/// * `CL2`: `X ⊆ Y ⟹ cl(X) ⊆ cl(Y)`
/// * `CL3`: `cl(cl(X)) = cl(X)`
/// * `CL4`: `y ∈ cl(X ∪ {x}) − cl(X) ⟹ x ∈ cl(X ∪ {y})`
pub fn check_closure_operator<F>(universe: &Universe, cl: F) -> Result<PropertyReport>
where
    F: Fn(&Subset) -> Result<Subset>,
{
    let n = universe.len();
    ensure_exhaustive("check_closure_operator", n)?;
    let u = universe;
    let sets: Vec<Subset> = power_set(n).collect();
    let table = sets.iter().map(&cl).collect::<Result<Vec<_>>>()?;
    let c = |s: &Subset| &table[s.to_mask().unwrap() as usize];
    let mut report = PropertyReport::new();

    report.record(
        "CL1",
        first_witness(&sets, |x| {
            (!x.is_subset(c(x))).then(|| Witness::new().set("X", u, x))
        }),
    );
    report.record(
        "CL2",
        first_witness(
            sets.iter().flat_map(|x| sets.iter().map(move |y| (x, y))),
            |(x, y)| {
                (x.is_subset(y) && !c(x).is_subset(c(y)))
                    .then(|| Witness::new().set("X", u, x).set("Y", u, y))
            },
        ),
    );
    report.record(
        "CL3",
        first_witness(&sets, |x| {
            (c(c(x)) != c(x)).then(|| Witness::new().set("X", u, x))
        }),
    );
    let triples = sets
        .iter()
        .flat_map(|x| (0..n).flat_map(move |a| (0..n).map(move |b| (x, a, b))));
    report.record(
        "CL4",
        first_witness(triples, |(x, a, b)| {
            let gained = c(&x.with(a)).contains(b) && !c(x).contains(b);
            (gained && !c(&x.with(b)).contains(a)).then(|| {
                Witness::new()
                    .set("X", u, x)
                    .element("x", u, a)
                    .element("y", u, b)
            })
        }),
    );
    Ok(report)
}
