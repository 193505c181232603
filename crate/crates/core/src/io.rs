//! JSON documents for relations and explicit matroids.
//!
//! ```json
//! {"universe": ["a", "b", "c"], "pairs": [["a", "a"], ["a", "b"]]}
//! {"universe": ["a", "b", "c"], "independents": [["a"], ["a", "b"]]}
//! ```
//!
//! Labels in `pairs` and `independents` must be declared in `universe`. The
//! empty set is always independent, listed or not. Output lists pairs and
//! sets in universe order and families in display order, so the same input
//! always serializes to the same bytes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::ExplicitMatroid;
use crate::relation::BinaryRelation;
use crate::subset::{SetFamily, Subset};
use crate::universe::Universe;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDoc {
    pub universe: Vec<String>,
    pub pairs: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidDoc {
    pub universe: Vec<String>,
    pub independents: Vec<Vec<String>>,
}

/// A defect in an input document, located by line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {defect}")]
pub struct LoadError {
    pub line: usize,
    pub column: usize,
    pub defect: String,
}

impl LoadError {
    fn from_json(e: &serde_json::Error) -> Self {
        LoadError {
            line: e.line(),
            column: e.column(),
            defect: e.to_string(),
        }
    }

    /// Locates the first quoted occurrence of `label` after `section` in
    /// `text`; falls back to the start of the section.
    fn at_label(text: &str, section: &str, label: &str, defect: String) -> Self {
        let start = text.find(&format!("\"{section}\"")).unwrap_or(0);
        let needle = serde_json::to_string(label).unwrap_or_default();
        let offset = text[start..]
            .find(&needle)
            .map(|o| start + o)
            .unwrap_or(start);
        Self::at_offset(text, offset, defect)
    }

    fn at_offset(text: &str, offset: usize, defect: String) -> Self {
        let before = &text[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        LoadError {
            line,
            column,
            defect,
        }
    }

    fn at_section(text: &str, section: &str, defect: String) -> Self {
        let offset = text.find(&format!("\"{section}\"")).unwrap_or(0);
        Self::at_offset(text, offset, defect)
    }
}

fn universe_from(text: &str, labels: &[String]) -> Result<Universe, LoadError> {
    Universe::with_labels(labels.iter().cloned()).map_err(|e| match e {
        Error::DuplicateLabel(l) => {
            // point at the second occurrence
            let start = text.find("\"universe\"").unwrap_or(0);
            let needle = serde_json::to_string(&l).unwrap_or_default();
            let first = text[start..].find(&needle).map_or(start, |o| start + o);
            let second = text[first + needle.len()..]
                .find(&needle)
                .map_or(first, |o| first + needle.len() + o);
            LoadError::at_offset(text, second, format!("duplicate label {l:?} in universe"))
        }
        other => LoadError::at_section(text, "universe", other.to_string()),
    })
}

fn index(text: &str, section: &str, universe: &Universe, label: &str) -> Result<usize, LoadError> {
    universe.index_of(label).map_err(|_| {
        LoadError::at_label(
            text,
            section,
            label,
            format!("unknown label {label:?} in {section}"),
        )
    })
}

/// Parses and validates a relation document.
pub fn relation_from_json(text: &str) -> Result<BinaryRelation, LoadError> {
    let doc: RelationDoc = serde_json::from_str(text).map_err(|e| LoadError::from_json(&e))?;
    let universe = universe_from(text, &doc.universe)?;
    let mut pairs = Vec::with_capacity(doc.pairs.len());
    for [x, y] in &doc.pairs {
        pairs.push((
            index(text, "pairs", &universe, x)?,
            index(text, "pairs", &universe, y)?,
        ));
    }
    Ok(BinaryRelation::from_pairs(&universe, pairs).expect("indices were validated"))
}

/// Parses and validates a matroid document, including the independence
/// axioms.
pub fn matroid_from_json(text: &str) -> Result<ExplicitMatroid, LoadError> {
    let doc: MatroidDoc = serde_json::from_str(text).map_err(|e| LoadError::from_json(&e))?;
    let universe = universe_from(text, &doc.universe)?;
    let mut family = SetFamily::new(universe.len());
    family.insert(universe.empty_set()).expect("same universe");
    for set in &doc.independents {
        let mut s = universe.empty_set();
        for l in set {
            s.insert(index(text, "independents", &universe, l)?);
        }
        family.insert(s).expect("same universe");
    }
    ExplicitMatroid::new(&universe, family).map_err(|e| {
        let defect = match e {
            Error::NotAMatroid(rep) => {
                let f = rep.first_failure().expect("a failing report has a failure");
                format!(
                    "independents violate axiom {} (witness: {})",
                    f.property,
                    f.witness
                        .as_ref()
                        .map(|w| w.to_string())
                        .unwrap_or_default()
                )
            }
            other => other.to_string(),
        };
        LoadError::at_section(text, "independents", defect)
    })
}

/// Whether a document looks like a matroid (has `independents`) rather than
/// a relation.
pub fn is_matroid_document(text: &str) -> Result<bool, LoadError> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| LoadError::from_json(&e))?;
    Ok(v.get("independents").is_some())
}

pub fn relation_doc(r: &BinaryRelation) -> RelationDoc {
    let u = r.universe();
    RelationDoc {
        universe: u.labels().to_vec(),
        pairs: r
            .pairs()
            .map(|(x, y)| [u.label(x).to_string(), u.label(y).to_string()])
            .collect(),
    }
}

pub fn relation_to_json(r: &BinaryRelation) -> String {
    serde_json::to_string(&relation_doc(r)).expect("plain data serializes")
}

/// Independent sets in display order; the empty set is left implicit.
pub fn matroid_doc(m: &ExplicitMatroid) -> MatroidDoc {
    use crate::matroid::MatroidOracle;
    let u = m.universe();
    MatroidDoc {
        universe: u.labels().to_vec(),
        independents: m
            .independents()
            .graded_order()
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| u.labels_of(s))
            .collect(),
    }
}

pub fn matroid_to_json(m: &ExplicitMatroid) -> String {
    serde_json::to_string(&matroid_doc(m)).expect("plain data serializes")
}

/// A set as a list of labels in universe order.
pub fn set_labels(universe: &Universe, set: &Subset) -> Vec<String> {
    universe.labels_of(set)
}

/// A family as label lists in display order.
pub fn family_labels(universe: &Universe, family: &SetFamily) -> Vec<Vec<String>> {
    family
        .graded_order()
        .into_iter()
        .map(|s| universe.labels_of(s))
        .collect()
}

/// Parses a comma-separated label list; the empty string is the empty set.
pub fn parse_set(universe: &Universe, labels: &str) -> Result<Subset> {
    let labels = labels.trim();
    if labels.is_empty() {
        return Ok(universe.empty_set());
    }
    universe.subset(labels.split(',').map(str::trim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::MatroidOracle;

    const EXAMPLE: &str = r#"{
  "universe": ["1", "2", "3"],
  "pairs": [["1","1"],["1","2"],["2","1"],["2","3"],["3","1"],["3","3"]]
}"#;

    #[test]
    fn relation_round_trip() {
        let r = relation_from_json(EXAMPLE).unwrap();
        assert_eq!(r.len(), 6);
        let out = relation_to_json(&r);
        assert_eq!(
            out,
            r#"{"universe":["1","2","3"],"pairs":[["1","1"],["1","2"],["2","1"],["2","3"],["3","1"],["3","3"]]}"#
        );
        assert_eq!(relation_from_json(&out).unwrap(), r);
    }

    #[test]
    fn unknown_label_is_located() {
        let text = "{\n  \"universe\": [\"a\", \"b\"],\n  \"pairs\": [[\"a\", \"z\"]]\n}";
        let err = relation_from_json(text).unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.column, 19);
        assert!(err.defect.contains("\"z\""));
    }

    #[test]
    fn syntax_error_is_located() {
        let err = relation_from_json("{\n \"universe\": [\"a\",]\n}").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn duplicate_and_empty_universe() {
        let err = relation_from_json(r#"{"universe": ["a", "a"], "pairs": []}"#).unwrap_err();
        assert!(err.defect.contains("duplicate"));
        assert_eq!(err.column, 20);
        let err = relation_from_json(r#"{"universe": [], "pairs": []}"#).unwrap_err();
        assert!(err.defect.contains("at least one"));
    }

    #[test]
    fn matroid_documents() {
        let text = r#"{"universe": ["1","2","3"], "independents": [["1"],["3"]]}"#;
        assert!(is_matroid_document(text).unwrap());
        let m = matroid_from_json(text).unwrap();
        assert_eq!(m.independents().len(), 3);
        assert!(m.is_independent(&m.universe().empty_set()));
        assert_eq!(
            matroid_to_json(&m),
            r#"{"universe":["1","2","3"],"independents":[["1"],["3"]]}"#
        );

        let bad = r#"{"universe": ["1","2","3"], "independents": [["1","2"],["3"]]}"#;
        let err = matroid_from_json(bad).unwrap_err();
        assert!(err.defect.contains("I2"), "{err}");
    }

    #[test]
    fn set_parsing() {
        let u = Universe::with_labels(["a", "b", "c"]).unwrap();
        assert_eq!(parse_set(&u, "").unwrap(), u.empty_set());
        assert_eq!(
            parse_set(&u, "c, a").unwrap(),
            u.subset(["a", "c"]).unwrap()
        );
        assert!(parse_set(&u, "a,d").is_err());
    }
}
