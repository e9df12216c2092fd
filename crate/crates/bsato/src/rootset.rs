//! Root collections: plain sets and multisets of positive rationals, with a
//! stable JSON form (roots sorted ascending, printed as "p/q" strings).

use crate::error::{Error, Result};
use crate::rational::Rat;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSet(BTreeSet<Rat>);

impl RootSet {
    pub fn new() -> Self {
        RootSet(BTreeSet::new())
    }

    pub fn insert(&mut self, r: Rat) -> Result<()> {
        if !r.is_positive() {
            return Err(Error::Invalid(format!("nonpositive root {r}")));
        }
        self.0.insert(r);
        Ok(())
    }

    pub fn from_iter_checked<I: IntoIterator<Item = Rat>>(iter: I) -> Result<Self> {
        let mut s = RootSet::new();
        for r in iter {
            s.insert(r)?;
        }
        Ok(s)
    }

    pub fn contains(&self, r: &Rat) -> bool {
        self.0.contains(r)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.0.iter().next()
    }

    pub fn max(&self) -> Option<&Rat> {
        self.0.iter().next_back()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Rat> {
        self.0.iter()
    }

    pub fn union(&self, other: &RootSet) -> RootSet {
        RootSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn is_subset(&self, other: &RootSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for RootSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for r in &self.0 {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootMultiset(BTreeMap<Rat, u64>);

impl RootMultiset {
    pub fn new() -> Self {
        RootMultiset(BTreeMap::new())
    }

    pub fn add(&mut self, r: Rat, mult: u64) -> Result<()> {
        if !r.is_positive() {
            return Err(Error::Invalid(format!("nonpositive root {r}")));
        }
        if mult > 0 {
            *self.0.entry(r).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn multiplicity(&self, r: &Rat) -> u64 {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> Option<&Rat> {
        self.0.keys().next()
    }

    pub fn max(&self) -> Option<&Rat> {
        self.0.keys().next_back()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rat, u64)> {
        self.0.iter().map(|(r, &m)| (r, m))
    }

    pub fn support(&self) -> RootSet {
        RootSet(self.0.keys().cloned().collect())
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (r, m)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if *m == 1 {
                write!(f, "{r}")?;
            } else {
                write!(f, "{r}^{m}")?;
            }
        }
        write!(f, "}}")
    }
}

impl Serialize for RootMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (r, m) in &self.0 {
            seq.serialize_element(&(r.to_string(), m))?;
        }
        seq.end()
    }
}
