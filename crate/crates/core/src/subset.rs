//! Fixed-width subsets of a finite universe and duplicate-free families of
//! them.
//!
//! A [`Subset`] is a bit vector of exactly `width` positions. Universes of at
//! most 64 elements fit in a single inline word; wider universes spill to the
//! heap. Subsets are ordered by their numeric value when the bit vector is
//! read as a binary number with element 0 as the least significant bit. That
//! order is the one every exhaustive scan in this crate walks, so "the lowest
//! witness" always means "the first one found".

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Largest universe for which exhaustive subset scans are performed.
pub const EXHAUSTIVE_LIMIT: usize = 16;

pub(crate) fn ensure_exhaustive(what: &'static str, n: usize) -> Result<()> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::Capacity {
            what,
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    Ok(())
}

fn words_for(width: usize) -> usize {
    width.div_ceil(WORD).max(1)
}

/// A subset of the universe `{0, .., width - 1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subset {
    width: usize,
    words: SmallVec<[u64; 1]>,
}

impl Subset {
    pub fn empty(width: usize) -> Self {
        Subset {
            width,
            words: SmallVec::from_elem(0, words_for(width)),
        }
    }

    pub fn full(width: usize) -> Self {
        Self::empty(width).complement()
    }

    /// The singleton `{element}`.
    ///
    /// # Panics
    ///
    /// If `element >= width`.
    pub fn singleton(width: usize, element: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(element);
        s
    }

    /// Builds a subset from element indices, rejecting any index outside the
    /// universe. Repeated indices are harmless.
    pub fn from_elements<I>(width: usize, elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(width);
        for e in elements {
            if e >= width {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    size: width,
                });
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Builds a subset from the low `width` bits of `mask`.
    ///
    /// # Panics
    ///
    /// If `width > 64` or `mask` has bits at or above `width`.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        assert!(width <= WORD, "from_mask needs width <= 64, got {width}");
        assert!(
            width == WORD || mask >> width == 0,
            "mask {mask:#b} has bits outside a universe of size {width}"
        );
        let mut s = Self::empty(width);
        s.words[0] = mask;
        s
    }

    /// The numeric value of the bit vector, if it fits in a `u64`.
    pub fn to_mask(&self) -> Option<u64> {
        if self.words[1..].iter().any(|&w| w != 0) {
            None
        } else {
            Some(self.words[0])
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn check(&self, element: usize) {
        assert!(
            element < self.width,
            "element {element} is outside a universe of size {}",
            self.width
        );
    }

    /// Membership test.
    ///
    /// # Panics
    ///
    /// If `element` is outside the universe.
    pub fn contains(&self, element: usize) -> bool {
        self.check(element);
        self.words[element / WORD] >> (element % WORD) & 1 == 1
    }

    /// Membership test that reports out-of-universe elements as an error.
    pub fn try_contains(&self, element: usize) -> Result<bool> {
        if element >= self.width {
            return Err(Error::ElementOutOfRange {
                element,
                size: self.width,
            });
        }
        Ok(self.contains(element))
    }

    pub fn insert(&mut self, element: usize) {
        self.check(element);
        self.words[element / WORD] |= 1 << (element % WORD);
    }

    pub fn remove(&mut self, element: usize) {
        self.check(element);
        self.words[element / WORD] &= !(1 << (element % WORD));
    }

    /// `self ∪ {element}` as a new subset.
    pub fn with(&self, element: usize) -> Self {
        let mut s = self.clone();
        s.insert(element);
        s
    }

    /// `self − {element}` as a new subset.
    pub fn without(&self, element: usize) -> Self {
        let mut s = self.clone();
        s.remove(element);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn same_width(&self, other: &Self) {
        assert_eq!(
            self.width, other.width,
            "subsets over universes of different sizes"
        );
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        self.same_width(other);
        Subset {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// `U − self`.
    pub fn complement(&self) -> Self {
        let mut s = Subset {
            width: self.width,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.width % WORD;
        let last = self.words.len() - 1;
        if self.width == 0 {
            self.words[0] = 0;
        } else if rem != 0 {
            self.words[last] &= (1u64 << rem) - 1;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.same_width(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.same_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Element indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + tz)
                }
            })
        })
    }

    /// All subsets of `self`, in ascending numeric order.
    ///
    /// # Panics
    ///
    /// If the universe is wider than 64 elements.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> + '_ {
        let mask = self
            .to_mask()
            .expect("subset enumeration needs width <= 64");
        let width = self.width;
        // standard ascending submask walk: next = ((sub | !mask) + 1) & mask
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let sub = next?;
            next = if sub == mask {
                None
            } else {
                Some((sub | !mask).wrapping_add(1) & mask)
            };
            Some(Subset::from_mask(width, sub))
        })
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Every subset of a `width`-element universe in ascending numeric order.
///
/// # Panics
///
/// If `width >= 64`; callers bound the width with [`EXHAUSTIVE_LIMIT`] first.
pub fn power_set(width: usize) -> impl Iterator<Item = Subset> {
    assert!(
        width < WORD,
        "power set of {width} elements is not enumerable"
    );
    (0..1u64 << width).map(move |m| Subset::from_mask(width, m))
}

/// A duplicate-free family of subsets of one universe, kept in ascending
/// numeric order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SetFamily {
    width: usize,
    members: BTreeSet<Subset>,
}

impl SetFamily {
    pub fn new(width: usize) -> Self {
        SetFamily {
            width,
            members: BTreeSet::new(),
        }
    }

    /// Builds a family, rejecting members of another width.
    pub fn from_members<I>(width: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Subset>,
    {
        let mut fam = Self::new(width);
        for m in members {
            fam.insert(m)?;
        }
        Ok(fam)
    }

    /// Adds a member; returns whether it was new.
    pub fn insert(&mut self, member: Subset) -> Result<bool> {
        if member.width() != self.width {
            return Err(Error::UniverseMismatch {
                expected: self.width,
                found: member.width(),
            });
        }
        Ok(self.members.insert(member))
    }

    pub fn contains(&self, member: &Subset) -> bool {
        self.members.contains(member)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Subset> + '_ {
        self.members.iter()
    }

    /// The inclusion-minimal members.
    pub fn min_family(&self) -> SetFamily {
        let members = self
            .members
            .iter()
            .filter(|x| !self.members.iter().any(|y| y != *x && y.is_subset(x)))
            .cloned()
            .collect();
        SetFamily {
            width: self.width,
            members,
        }
    }

    /// Every subset of the universe that is not a member.
    pub fn opp_family(&self) -> Result<SetFamily> {
        ensure_exhaustive("opp_family", self.width)?;
        let members = power_set(self.width)
            .filter(|s| !self.members.contains(s))
            .collect();
        Ok(SetFamily {
            width: self.width,
            members,
        })
    }

    /// Members sorted by cardinality, then lexicographically by their
    /// ascending element lists. This is the order used for display.
    pub fn graded_order(&self) -> Vec<&Subset> {
        let mut v: Vec<&Subset> = self.members.iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        v
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a Subset;
    type IntoIter = std::collections::btree_set::Iter<'a, Subset>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}
