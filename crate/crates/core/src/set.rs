use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ring::Element;

/// A finite set of carrier elements in ascending order.
///
/// This is the value type of every hyperoperation. Ordering is canonical, so
/// two equal sets always render and serialize identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementSet(BTreeSet<Element>);

impl ElementSet {
    pub fn new() -> Self {
        Self(BTreeSet::new())
    }

    pub fn singleton(x: Element) -> Self {
        Self(BTreeSet::from([x]))
    }

    pub fn insert(&mut self, x: Element) -> bool {
        self.0.insert(x)
    }

    pub fn contains(&self, x: Element) -> bool {
        self.0.contains(&x)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        Self(self.0.union(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        Self(self.0.intersection(&other.0).copied().collect())
    }

    pub fn min(&self) -> Option<Element> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Element> {
        self.0.last().copied()
    }
}

impl FromIterator<Element> for ElementSet {
    fn from_iter<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[Element; N]> for ElementSet {
    fn from(xs: [Element; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl Extend<Element> for ElementSet {
    fn extend<I: IntoIterator<Item = Element>>(&mut self, iter: I) {
        self.0.extend(iter)
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = Element;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Element>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}
