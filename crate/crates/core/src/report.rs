//! Pass/fail reports produced by the exhaustive property checks.

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::subset::Subset;
use crate::universe::Universe;

/// One named value inside a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    Element(String),
    Set(Vec<String>),
    Pair([String; 2]),
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessValue::Element(e) => f.write_str(e),
            WitnessValue::Set(s) if s.is_empty() => f.write_str("∅"),
            WitnessValue::Set(s) => write!(f, "{{{}}}", s.join(", ")),
            WitnessValue::Pair([a, b]) => write!(f, "({a}, {b})"),
        }
    }
}

/// A counterexample: named sets, elements or pairs, rendered with labels.
/// Serializes as a JSON object in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness(Vec<(String, WitnessValue)>);

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, name: &str, universe: &Universe, set: &Subset) -> Self {
        self.0
            .push((name.to_string(), WitnessValue::Set(universe.labels_of(set))));
        self
    }

    pub fn element(mut self, name: &str, universe: &Universe, element: usize) -> Self {
        self.0.push((
            name.to_string(),
            WitnessValue::Element(universe.label(element).to_string()),
        ));
        self
    }

    pub fn pair(mut self, name: &str, universe: &Universe, x: usize, y: usize) -> Self {
        self.0.push((
            name.to_string(),
            WitnessValue::Pair([universe.label(x).to_string(), universe.label(y).to_string()]),
        ));
        self
    }

    pub fn get(&self, name: &str) -> Option<&WitnessValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, WitnessValue)] {
        &self.0
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// The outcome of one property. A failing property carries the lowest
/// counterexample in scan order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyOutcome {
    pub property: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}: pass", self.property),
            Some(w) => write!(f, "{}: fail ({w})", self.property),
        }
    }
}

/// Per-property results of an exhaustive check. Every property is listed,
/// failing or not.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PropertyReport {
    entries: Vec<PropertyOutcome>,
}

impl PropertyReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `property` as passing if `witness` is `None`.
    pub fn record(&mut self, property: &str, witness: Option<Witness>) {
        self.entries.push(PropertyOutcome {
            property: property.to_string(),
            pass: witness.is_none(),
            witness,
        });
    }

    pub fn entries(&self) -> &[PropertyOutcome] {
        &self.entries
    }

    pub fn get(&self, property: &str) -> Option<&PropertyOutcome> {
        self.entries.iter().find(|e| e.property == property)
    }

    pub fn passed(&self, property: &str) -> bool {
        self.get(property).is_some_and(|e| e.pass)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyOutcome> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn first_failure(&self) -> Option<&PropertyOutcome> {
        self.failures().next()
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Scans `items` in order and returns the witness for the first failure.
pub(crate) fn first_witness<T>(
    items: impl IntoIterator<Item = T>,
    check: impl FnMut(T) -> Option<Witness>,
) -> Option<Witness> {
    items.into_iter().find_map(check)
}
