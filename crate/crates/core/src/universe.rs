use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{SetFamily, Subset};

#[derive(PartialEq, Eq)]
struct Inner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// A nonempty, ordered, finite ground set.
///
/// Elements are the dense indices `0..n`; labels only matter for input and
/// output. Cloning is cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Universe(Arc<Inner>);

impl Universe {
    /// A universe of `n` elements labelled `"0"` to `"n-1"`.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_labels((0..n).map(|i| i.to_string()))
    }

    /// A universe with the given labels, in order.
    pub fn with_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Universe(Arc::new(Inner { labels, index })))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    /// Always false: empty universes cannot be constructed.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, element: usize) -> &str {
        &self.0.labels[element]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.0
            .index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn check_element(&self, element: usize) -> Result<()> {
        if element < self.len() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element,
                size: self.len(),
            })
        }
    }

    pub(crate) fn check_subset(&self, set: &Subset) -> Result<()> {
        if set.width() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.len(),
                found: set.width(),
            })
        }
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Builds a subset from labels.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(self.index_of(l.as_ref())?);
        }
        Ok(s)
    }

    /// Labels of the members of `set`, in universe order.
    pub fn labels_of(&self, set: &Subset) -> Vec<String> {
        set.iter().map(|e| self.label(e).to_string()).collect()
    }

    /// Braced set notation, e.g. `{1, 2}`; the empty set prints as `∅`.
    pub fn format_set(&self, set: &Subset) -> String {
        if set.is_empty() {
            return "∅".to_string();
        }
        let inner: Vec<&str> = set.iter().map(|e| self.label(e)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    /// Braced family notation in display order, e.g. `{∅, {1}, {1, 2}}`.
    pub fn format_family(&self, family: &SetFamily) -> String {
        let inner: Vec<String> = family
            .graded_order()
            .into_iter()
            .map(|s| self.format_set(s))
            .collect();
        format!("{{{}}}", inner.join(", "))
    }
}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Universe").field(&self.0.labels).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_labels() {
        let u = Universe::new(3).unwrap();
        assert_eq!(u.labels(), ["0", "1", "2"]);
        assert_eq!(u.index_of("2").unwrap(), 2);
    }

    #[test]
    fn rejects_empty_and_duplicates() {
        assert!(matches!(Universe::new(0), Err(Error::EmptyUniverse)));
        assert!(matches!(
            Universe::with_labels(["a", "b", "a"]),
            Err(Error::DuplicateLabel(l)) if l == "a"
        ));
    }

    #[test]
    fn formatting() {
        let u = Universe::with_labels(["1", "2", "3"]).unwrap();
        assert_eq!(u.format_set(&u.subset(["3", "1"]).unwrap()), "{1, 3}");
        assert_eq!(u.format_set(&u.empty_set()), "∅");
        assert!(matches!(u.subset(["4"]), Err(Error::UnknownLabel(_))));
    }
}
