//! Binary relations on a finite universe, their inverse, the classic
//! relation properties, and successor/predecessor neighborhoods.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{SetFamily, Subset};
use crate::universe::Universe;

/// A binary relation `R ⊆ U × U`, stored as one successor bit vector per
/// element. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    universe: Universe,
    rows: Vec<Subset>,
}

impl BinaryRelation {
    /// The empty relation.
    pub fn empty(universe: &Universe) -> Self {
        let n = universe.len();
        BinaryRelation {
            universe: universe.clone(),
            rows: vec![Subset::empty(n); n],
        }
    }

    /// `U × U`.
    pub fn full(universe: &Universe) -> Self {
        let n = universe.len();
        BinaryRelation {
            universe: universe.clone(),
            rows: vec![Subset::full(n); n],
        }
    }

    /// `{(x, x) : x ∈ U}`.
    pub fn identity(universe: &Universe) -> Self {
        let n = universe.len();
        BinaryRelation {
            universe: universe.clone(),
            rows: (0..n).map(|x| Subset::singleton(n, x)).collect(),
        }
    }

    /// Builds a relation from index pairs. Duplicates are ignored.
    pub fn from_pairs<I>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::empty(universe);
        for (x, y) in pairs {
            universe.check_element(x)?;
            universe.check_element(y)?;
            r.rows[x].insert(y);
        }
        Ok(r)
    }

    /// Builds a relation from label pairs.
    pub fn from_label_pairs<I, S>(universe: &Universe, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let mut idx = Vec::new();
        for (x, y) in pairs {
            idx.push((
                universe.index_of(x.as_ref())?,
                universe.index_of(y.as_ref())?,
            ));
        }
        Self::from_pairs(universe, idx)
    }

    /// Decodes a relation from its flattened adjacency bits: bit `x·n + y`
    /// of `code` is set iff `(x, y) ∈ R`.
    ///
    /// # Panics
    ///
    /// If `n² > 64`.
    pub fn from_code(universe: &Universe, code: u64) -> Self {
        let n = universe.len();
        assert!(n * n <= 64, "relation code needs n <= 8");
        let row_mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        BinaryRelation {
            universe: universe.clone(),
            rows: (0..n)
                .map(|x| Subset::from_mask(n, (code >> (x * n)) & row_mask))
                .collect(),
        }
    }

    /// The relation relating `x` and `y` iff they lie in the same block of
    /// `partition`. Elements covered by no block are related to nothing.
    pub fn from_partition(universe: &Universe, partition: &SetFamily) -> Result<Self> {
        let mut r = Self::empty(universe);
        for block in partition {
            universe.check_subset(block)?;
            for x in block.iter() {
                r.rows[x] = r.rows[x].union(block);
            }
        }
        Ok(r)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn size(&self) -> usize {
        self.universe.len()
    }

    /// `xRy`.
    ///
    /// # Panics
    ///
    /// If either element lies outside the universe.
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// All pairs in ascending `(x, y)` order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(Subset::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Subset::is_empty)
    }

    /// `R ⊆ other`.
    pub fn is_subrelation(&self, other: &Self) -> bool {
        self.rows.len() == other.rows.len()
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(b))
    }

    /// `R⁻¹ = {(y, x) : (x, y) ∈ R}`.
    pub fn inverse(&self) -> Self {
        let mut inv = Self::empty(&self.universe);
        for (x, y) in self.pairs() {
            inv.rows[y].insert(x);
        }
        inv
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|x| self.contains(x, x))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|(x, y)| self.contains(y, x))
    }

    pub fn is_transitive(&self) -> bool {
        // xRy and yRz imply xRz, i.e. RS(y) ⊆ RS(x) whenever xRy
        self.pairs()
            .all(|(x, y)| self.rows[y].is_subset(&self.rows[x]))
    }

    pub fn is_equivalence(&self) -> bool {
        self.failed_equivalence_property().is_none()
    }

    fn failed_equivalence_property(&self) -> Option<&'static str> {
        if !self.is_reflexive() {
            Some("reflexive")
        } else if !self.is_symmetric() {
            Some("symmetric")
        } else if !self.is_transitive() {
            Some("transitive")
        } else {
            None
        }
    }

    /// `RS(x) = {y : xRy}`.
    pub fn successor_neighborhood(&self, x: usize) -> Result<Subset> {
        self.universe.check_element(x)?;
        Ok(self.rows[x].clone())
    }

    /// `RP(x) = {y : yRx}`.
    pub fn predecessor_neighborhood(&self, x: usize) -> Result<Subset> {
        self.universe.check_element(x)?;
        let mut s = self.universe.empty_set();
        for (y, row) in self.rows.iter().enumerate() {
            if row.contains(x) {
                s.insert(y);
            }
        }
        Ok(s)
    }

    /// Borrowed successor neighborhood; panics outside the universe.
    pub(crate) fn successors(&self, x: usize) -> &Subset {
        &self.rows[x]
    }

    /// The partition `U/R`, or the first failed equivalence property.
    pub fn equivalence_classes(&self) -> Result<SetFamily> {
        if let Some(property) = self.failed_equivalence_property() {
            return Err(Error::NotEquivalence { property });
        }
        SetFamily::from_members(self.size(), self.rows.iter().cloned())
    }

    /// Braced pair notation, e.g. `{(1, 1), (1, 2)}`; `∅` when empty.
    pub fn format_pairs(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let u = &self.universe;
        let inner: Vec<String> = self
            .pairs()
            .map(|(x, y)| format!("({}, {})", u.label(x), u.label(y)))
            .collect();
        format!("{{{}}}", inner.join(", "))
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3() -> Universe {
        Universe::with_labels(["1", "2", "3"]).unwrap()
    }

    fn example() -> BinaryRelation {
        let u = u3();
        BinaryRelation::from_label_pairs(
            &u,
            [
                ("1", "1"),
                ("1", "2"),
                ("2", "1"),
                ("2", "3"),
                ("3", "1"),
                ("3", "3"),
            ],
        )
        .unwrap()
    }

    fn set(labels: &[&str]) -> Subset {
        u3().subset(labels).unwrap()
    }

    #[test]
    fn inverse_of_single_pair() {
        let u = Universe::with_labels(["1", "2"]).unwrap();
        let r = BinaryRelation::from_label_pairs(&u, [("1", "2")]).unwrap();
        let expected = BinaryRelation::from_label_pairs(&u, [("2", "1")]).unwrap();
        assert_eq!(r.inverse(), expected);
    }

    #[test]
    fn identity_is_its_own_inverse() {
        let id = BinaryRelation::identity(&u3());
        assert_eq!(id.inverse(), id);
    }

    #[test]
    fn inverse_of_example() {
        let u = u3();
        let expected = BinaryRelation::from_label_pairs(
            &u,
            [
                ("1", "1"),
                ("2", "1"),
                ("1", "2"),
                ("3", "2"),
                ("1", "3"),
                ("3", "3"),
            ],
        )
        .unwrap();
        assert_eq!(example().inverse(), expected);
    }

    #[test]
    fn property_predicates() {
        let u = u3();
        let id = BinaryRelation::identity(&u);
        assert!(id.is_reflexive() && id.is_symmetric() && id.is_transitive());
        assert!(id.is_equivalence());

        let e = BinaryRelation::empty(&u);
        assert!(!e.is_reflexive());
        assert!(e.is_symmetric());
        assert!(e.is_transitive());

        let r = example();
        assert!(!r.is_reflexive());
        assert!(!r.contains(1, 1));
    }

    #[test]
    fn neighborhoods_of_example() {
        let r = example();
        assert_eq!(r.successor_neighborhood(0).unwrap(), set(&["1", "2"]));
        assert_eq!(r.successor_neighborhood(1).unwrap(), set(&["1", "3"]));
        assert_eq!(r.successor_neighborhood(2).unwrap(), set(&["1", "3"]));
        assert_eq!(
            r.predecessor_neighborhood(0).unwrap(),
            set(&["1", "2", "3"])
        );
        assert_eq!(r.predecessor_neighborhood(1).unwrap(), set(&["1"]));
        assert_eq!(r.predecessor_neighborhood(2).unwrap(), set(&["2", "3"]));
    }

    #[test]
    fn empty_relation_has_empty_neighborhoods() {
        let r = BinaryRelation::empty(&u3());
        for x in 0..3 {
            assert!(r.successor_neighborhood(x).unwrap().is_empty());
        }
    }

    #[test]
    fn neighborhood_outside_universe() {
        assert!(matches!(
            example().successor_neighborhood(3),
            Err(Error::ElementOutOfRange {
                element: 3,
                size: 3
            })
        ));
        assert!(example().predecessor_neighborhood(9).is_err());
    }

    #[test]
    fn classes() {
        let u = u3();
        let id = BinaryRelation::identity(&u).equivalence_classes().unwrap();
        assert_eq!(id.len(), 3);
        let full = BinaryRelation::full(&u).equivalence_classes().unwrap();
        assert_eq!(full.iter().collect::<Vec<_>>(), vec![&u.full_set()]);

        let r = BinaryRelation::from_label_pairs(
            &u,
            [("1", "1"), ("2", "2"), ("3", "3"), ("2", "3"), ("3", "2")],
        )
        .unwrap();
        let classes = r.equivalence_classes().unwrap();
        let expected = SetFamily::from_members(3, [set(&["1"]), set(&["2", "3"])]).unwrap();
        assert_eq!(classes, expected);
        assert_eq!(BinaryRelation::from_partition(&u, &classes).unwrap(), r);
    }

    #[test]
    fn classes_name_the_failed_property() {
        assert!(matches!(
            example().equivalence_classes(),
            Err(Error::NotEquivalence {
                property: "reflexive"
            })
        ));
        let u = u3();
        let r = BinaryRelation::identity(&u);
        let r = BinaryRelation::from_pairs(&u, r.pairs().chain([(0, 1)])).unwrap();
        assert!(matches!(
            r.equivalence_classes(),
            Err(Error::NotEquivalence {
                property: "symmetric"
            })
        ));
    }

    #[test]
    fn code_round_trip() {
        let u = u3();
        let r = example();
        let code: u64 = r.pairs().map(|(x, y)| 1u64 << (x * 3 + y)).sum();
        assert_eq!(BinaryRelation::from_code(&u, code), r);
    }

    #[test]
    fn duplicates_are_ignored() {
        let u = u3();
        let r = BinaryRelation::from_pairs(&u, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(r.len(), 1);
    }
}
