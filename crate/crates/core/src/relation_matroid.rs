//! The successor and predecessor relation matroids of a binary relation.
//!
//! A set is independent when its members have pairwise distinct successor
//! (or predecessor) neighborhoods. Grouping elements by neighborhood gives a
//! partition of `U` into blocks, and the matroid is the partition matroid
//! allowing at most one element per block. All closed forms below read that
//! partition:
//!
//! | quantity | closed form |
//! |----------|-------------|
//! | dependent sets | sets holding two elements of one block |
//! | circuits | pairs `{x, y}`, `x ≠ y`, in one block |
//! | rank | number of blocks met |
//! | closure | union of the blocks met |
//! | closed sets | unions of blocks |
//!
//! The predecessor matroid of `R` is built as the successor matroid of `R⁻¹`;
//! the two coincide because `RP_R(x) = RS_{R⁻¹}(x)`.
//!
//! Independence (I3) is not taken on faith from any proof: the verifier
//! checks it exhaustively for every relation on small universes.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::approx::OperatorTable;
use crate::error::Result;
use crate::matroid::MatroidOracle;
use crate::relation::BinaryRelation;
use crate::report::{PropertyReport, Witness};
use crate::subset::{ensure_exhaustive, power_set, SetFamily, Subset};
use crate::universe::Universe;

/// Which neighborhood keys the independence test.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NeighborhoodKind {
    #[default]
    Successor,
    Predecessor,
}

/// `M_S(R)` or `M_P(R)` with its neighborhood-equality blocks.
#[derive(Clone, Debug)]
pub struct RelationMatroid {
    relation: BinaryRelation,
    kind: NeighborhoodKind,
    /// Row `x` is the neighborhood of `x` that keys independence.
    keyed: BinaryRelation,
    block_of: Vec<usize>,
    blocks: Vec<Subset>,
}

/// The successor relation matroid `M(R)`.
pub fn build_relation_matroid(r: &BinaryRelation) -> RelationMatroid {
    RelationMatroid::new(r, NeighborhoodKind::Successor)
}

impl RelationMatroid {
    pub fn new(r: &BinaryRelation, kind: NeighborhoodKind) -> Self {
        let keyed = match kind {
            NeighborhoodKind::Successor => r.clone(),
            NeighborhoodKind::Predecessor => r.inverse(),
        };
        let n = r.size();
        let mut ids: HashMap<&Subset, usize> = HashMap::new();
        let mut block_of = Vec::with_capacity(n);
        let mut blocks: Vec<Subset> = Vec::new();
        for x in 0..n {
            let next = ids.len();
            let id = *ids.entry(keyed.successors(x)).or_insert(next);
            if id == blocks.len() {
                blocks.push(Subset::empty(n));
            }
            blocks[id].insert(x);
            block_of.push(id);
        }
        RelationMatroid {
            relation: r.clone(),
            kind,
            keyed,
            block_of,
            blocks,
        }
    }

    pub fn relation(&self) -> &BinaryRelation {
        &self.relation
    }

    pub fn kind(&self) -> NeighborhoodKind {
        self.kind
    }

    /// The neighborhood of `x` that keys independence: `RS(x)` for the
    /// successor matroid, `RP(x)` for the predecessor matroid.
    pub fn neighborhood_key(&self, x: usize) -> Result<Subset> {
        self.keyed.successor_neighborhood(x)
    }

    /// Blocks in order of their smallest element.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_partition(&self) -> SetFamily {
        SetFamily::from_members(self.relation.size(), self.blocks.iter().cloned())
            .expect("blocks share the universe")
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    fn blocks_met(&self, x: &Subset) -> Vec<usize> {
        let mut met: Vec<usize> = x.iter().map(|e| self.block_of[e]).collect();
        met.sort_unstable();
        met.dedup();
        met
    }

    /// Every dependent set: those holding two elements of one block.
    pub fn dependent_sets(&self) -> Result<SetFamily> {
        let n = self.relation.size();
        ensure_exhaustive("rm_dependent_sets", n)?;
        let crowded = |s: &Subset| self.blocks.iter().any(|b| b.intersection(s).len() >= 2);
        SetFamily::from_members(n, power_set(n).filter(|s| crowded(s)))
    }

    /// Pairs `{x, y}`, `x ≠ y`, with equal neighborhoods.
    pub fn circuits(&self) -> SetFamily {
        let n = self.relation.size();
        let mut out = SetFamily::new(n);
        for block in &self.blocks {
            let members: Vec<usize> = block.iter().collect();
            for (i, &x) in members.iter().enumerate() {
                for &y in &members[i + 1..] {
                    let pair = Subset::singleton(n, x).with(y);
                    out.insert(pair).expect("same universe");
                }
            }
        }
        out
    }

    /// `r(X) = |{RS(x) : x ∈ X}|`.
    pub fn rank(&self, x: &Subset) -> Result<usize> {
        self.relation.universe().check_subset(x)?;
        Ok(self.blocks_met(x).len())
    }

    /// `cl(X) = {u : ∃x ∈ X, RS(x) = RS(u)}`, the union of blocks meeting `X`.
    pub fn closure(&self, x: &Subset) -> Result<Subset> {
        self.relation.universe().check_subset(x)?;
        let mut out = Subset::empty(x.width());
        for b in self.blocks_met(x) {
            out = out.union(&self.blocks[b]);
        }
        Ok(out)
    }

    /// True iff no element of `X` shares a block with an element outside.
    pub fn is_closed(&self, x: &Subset) -> Result<bool> {
        self.relation.universe().check_subset(x)?;
        let outside = x.complement();
        Ok(self
            .blocks_met(x)
            .into_iter()
            .all(|b| self.blocks[b].is_disjoint(&outside)))
    }

    /// `{(x, y) : x and y share a block}`.
    pub fn same_block_relation(&self) -> BinaryRelation {
        BinaryRelation::from_partition(self.relation.universe(), &self.block_partition())
            .expect("blocks share the universe")
    }
}

impl MatroidOracle for RelationMatroid {
    fn universe(&self) -> &Universe {
        self.relation.universe()
    }

    /// At most one element per block.
    fn is_independent(&self, set: &Subset) -> bool {
        let mut seen = Subset::empty(self.blocks.len());
        for e in set.iter() {
            let b = self.block_of[e];
            if seen.contains(b) {
                return false;
            }
            seen.insert(b);
        }
        true
    }

    fn is_verified_matroid(&self) -> bool {
        true
    }
}

/// Whether `M(R₁) = M(R₂)`: the neighborhood-equality partitions coincide.
pub fn same_matroid(r1: &BinaryRelation, r2: &BinaryRelation) -> Result<bool> {
    r1.universe().check_subset(&r2.universe().empty_set())?;
    let (m1, m2) = (build_relation_matroid(r1), build_relation_matroid(r2));
    Ok(m1.blocks == m2.blocks)
}

/// How `cl_{M(R)}` relates to `H_R` across every subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureUpperComparison {
    pub reflexive: bool,
    pub equivalence: bool,
    /// `cl(X) ⊆ H(X)` for every `X`.
    pub contained_everywhere: bool,
    /// `cl(X) = H(X)` for every `X`.
    pub equal_everywhere: bool,
    /// Lowest `X` with `cl(X) ⊄ H(X)`.
    pub containment_witness: Option<Subset>,
    /// Lowest `X` with `cl(X) ≠ H(X)`.
    pub equality_witness: Option<Subset>,
    /// Number of subsets where `cl(X) = H(X)`.
    pub equal_count: usize,
    /// Number of subsets where `cl(X) ⊆ H(X)`.
    pub contained_count: usize,
}

impl ClosureUpperComparison {
    /// The two claims that can be checked against the facts:
    ///
    /// * `reflexive-implies-containment`: `R` reflexive ⟹ `cl(X) ⊆ H(X)`
    /// * `equality-iff-equivalence`: `cl = H` everywhere ⟺ `R` is an equivalence
    pub fn report(&self, universe: &Universe) -> PropertyReport {
        let mut rep = PropertyReport::new();
        let containment_fails = self.reflexive && !self.contained_everywhere;
        rep.record(
            "reflexive-implies-containment",
            containment_fails.then(|| {
                Witness::new().set("X", universe, self.containment_witness.as_ref().unwrap())
            }),
        );
        rep.record(
            "equality-iff-equivalence",
            (self.equal_everywhere != self.equivalence).then(|| match &self.equality_witness {
                Some(x) => Witness::new().set("X", universe, x),
                None => Witness::new(),
            }),
        );
        rep
    }
}

/// Compares the closure of `M(R)` with `H_R` on every subset. Nothing is
/// assumed about `R`; containment is only claimed for reflexive relations.
pub fn compare_closure_and_upper(r: &BinaryRelation) -> Result<ClosureUpperComparison> {
    ensure_exhaustive("compare_closure_and_upper", r.size())?;
    compare_with(r, |rm, x| rm.closure(x))
}

pub(crate) fn compare_with(
    r: &BinaryRelation,
    closure: impl Fn(&RelationMatroid, &Subset) -> Result<Subset>,
) -> Result<ClosureUpperComparison> {
    let rm = build_relation_matroid(r);
    let table = OperatorTable::new(r);
    let mut cmp = ClosureUpperComparison {
        reflexive: r.is_reflexive(),
        equivalence: r.is_equivalence(),
        contained_everywhere: true,
        equal_everywhere: true,
        containment_witness: None,
        equality_witness: None,
        equal_count: 0,
        contained_count: 0,
    };
    for x in &table.sets {
        let cl = closure(&rm, x)?;
        let h = table.h(x);
        if cl.is_subset(h) {
            cmp.contained_count += 1;
        } else if cmp.containment_witness.is_none() {
            cmp.contained_everywhere = false;
            cmp.containment_witness = Some(x.clone());
        }
        if cl == *h {
            cmp.equal_count += 1;
        } else if cmp.equality_witness.is_none() {
            cmp.equal_everywhere = false;
            cmp.equality_witness = Some(x.clone());
        }
    }
    Ok(cmp)
}
