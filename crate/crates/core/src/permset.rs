//! Duplicate-free, insertion-ordered collections of same-degree permutations.

use std::fmt;

use indexmap::IndexSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{parse_cycles, Permutation};

#[derive(Clone, PartialEq, Eq)]
pub struct PermSet {
    degree: usize,
    elements: IndexSet<Permutation>,
}

impl PermSet {
    pub fn new(degree: usize) -> Self {
        PermSet {
            degree,
            elements: IndexSet::new(),
        }
    }

    pub fn with_capacity(degree: usize, capacity: usize) -> Self {
        PermSet {
            degree,
            elements: IndexSet::with_capacity(capacity),
        }
    }

    /// Fails on the first duplicate or degree mismatch.
    pub fn from_vec(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut set = PermSet::with_capacity(degree, elements.len());
        for p in elements {
            if !set.insert(p.clone())? {
                return Err(Error::Duplicate(p.to_string()));
            }
        }
        Ok(set)
    }

    /// Silently drops repeated elements.
    pub fn from_iter_dedup(degree: usize, elements: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut set = PermSet::new(degree);
        for p in elements {
            set.insert(p)?;
        }
        Ok(set)
    }

    /// Parses cycle-notation strings.
    pub fn parse<S: AsRef<str>>(degree: usize, texts: &[S]) -> Result<Self> {
        let elements = texts
            .iter()
            .map(|t| parse_cycles(t.as_ref(), degree))
            .collect::<Result<Vec<_>>>()?;
        PermSet::from_vec(degree, elements)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Returns false if the element was already present.
    pub fn insert(&mut self, p: Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.elements.insert(p))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.get_index_of(p)
    }

    pub fn get(&self, i: usize) -> Option<&Permutation> {
        self.elements.get_index(i)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Permutation> + '_ {
        self.elements.iter()
    }

    pub fn to_vec(&self) -> Vec<Permutation> {
        self.elements.iter().cloned().collect()
    }

    pub fn contains_identity(&self) -> bool {
        self.elements.iter().any(Permutation::is_identity)
    }

    /// Same elements in canonical text order.
    pub fn sorted(&self) -> PermSet {
        let mut v = self.to_vec();
        v.sort();
        PermSet {
            degree: self.degree,
            elements: v.into_iter().collect(),
        }
    }

    /// Equal as sets, ignoring order.
    pub fn same_elements(&self, other: &PermSet) -> bool {
        self.degree == other.degree && self.len() == other.len() && self.iter().all(|p| other.contains(p))
    }

    pub fn filter(&self, mut keep: impl FnMut(&Permutation) -> bool) -> PermSet {
        PermSet {
            degree: self.degree,
            elements: self.elements.iter().filter(|p| keep(p)).cloned().collect(),
        }
    }

    /// Elements of `self` followed by the new elements of `other`.
    pub fn union(&self, other: &PermSet) -> Result<PermSet> {
        let mut out = self.clone();
        for p in other.iter() {
            out.insert(p.clone())?;
        }
        Ok(out)
    }

    pub fn inverse_set(&self) -> PermSet {
        PermSet {
            degree: self.degree,
            elements: self.elements.iter().map(Permutation::inverse).collect(),
        }
    }

    /// `{g x g⁻¹ : x ∈ self}`.
    pub fn conjugate_set(&self, g: &Permutation) -> Result<PermSet> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(PermSet {
            degree: self.degree,
            elements: self.elements.iter().map(|x| x.conjugate_unchecked(g)).collect(),
        })
    }

    /// `{g x : x ∈ self}`.
    pub fn left_translate(&self, g: &Permutation) -> Result<PermSet> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: g.degree(),
            });
        }
        Ok(PermSet {
            degree: self.degree,
            elements: self.elements.iter().map(|x| g.compose_unchecked(x)).collect(),
        })
    }

    /// Embeds every element into `Sym(new_degree)`.
    pub fn extend(&self, new_degree: usize) -> Result<PermSet> {
        let elements = self
            .elements
            .iter()
            .map(|p| p.extend(new_degree))
            .collect::<Result<IndexSet<_>>>()?;
        Ok(PermSet {
            degree: new_degree,
            elements,
        })
    }

    /// Canonical cycle-notation strings in set order.
    pub fn to_strings(&self) -> Vec<String> {
        self.elements.iter().map(Permutation::to_cycle_string).collect()
    }

    pub fn to_document(&self) -> PermSetDocument {
        PermSetDocument {
            degree: self.degree,
            elements: self.to_strings(),
            generators: None,
            name: None,
        }
    }

    pub fn to_json(&self) -> String {
        self.to_document().to_json()
    }

    pub fn from_json(text: &str) -> Result<PermSet> {
        PermSetDocument::from_json(text)?.to_set()
    }
}

impl fmt::Debug for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermSet(n={}) ", self.degree)?;
        f.debug_list()
            .entries(self.elements.iter().map(|p| p.to_string()))
            .finish()
    }
}

impl<'a> IntoIterator for &'a PermSet {
    type Item = &'a Permutation;
    type IntoIter = indexmap::set::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

impl std::ops::Index<usize> for PermSet {
    type Output = Permutation;

    fn index(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }
}

/// On-disk JSON form of a set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermSetDocument {
    pub degree: usize,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PermSetDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_set(&self) -> Result<PermSet> {
        PermSet::parse(self.degree, &self.elements)
    }

    pub fn generator_set(&self) -> Result<Option<PermSet>> {
        self.generators
            .as_ref()
            .map(|g| PermSet::parse(self.degree, g))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_mixed_degrees() {
        let a = parse_cycles("(1,2)", 3).unwrap();
        assert!(matches!(
            PermSet::from_vec(3, vec![a.clone(), a.clone()]),
            Err(Error::Duplicate(_))
        ));
        let mut s = PermSet::new(4);
        assert!(s.insert(a).is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = PermSet::parse(4, &["()", "(1,2)(3,4)", "(1,3)(2,4)"]).unwrap();
        let text = s.to_json();
        let back = PermSet::from_json(&text).unwrap();
        assert_eq!(s, back);
        assert!(text.contains("\"degree\": 4"));
        assert!(!text.contains("generators"));
    }

    #[test]
    fn json_reports_bad_elements() {
        let err = PermSet::from_json(r#"{"degree":3,"elements":["(1,2)","(1,1)"]}"#).unwrap_err();
        assert!(err.to_string().contains("repeated point 1"), "{err}");
        let err = PermSet::from_json(r#"{"degree":3,"elements":["(1,2)","(2,1)"]}"#).unwrap_err();
        assert!(matches!(err, Error::Duplicate(_)));
    }

    #[test]
    fn set_operations() {
        let s = PermSet::parse(3, &["(1,2,3)", "(1,2)"]).unwrap();
        let inv = s.inverse_set();
        assert!(inv.contains(&parse_cycles("(1,3,2)", 3).unwrap()));
        let g = parse_cycles("(1,3)", 3).unwrap();
        let c = s.conjugate_set(&g).unwrap();
        assert!(c.contains(&parse_cycles("(2,3)", 3).unwrap()));
        let e = s.extend(5).unwrap();
        assert_eq!(e.degree(), 5);
        assert_eq!(s.sorted().to_strings(), vec!["(1,2)", "(1,2,3)"]);
        assert!(s.same_elements(&s.sorted()));
    }
}
