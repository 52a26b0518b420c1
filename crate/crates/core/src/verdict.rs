use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::Error;
use crate::ring::Element;
use crate::set::ElementSet;

/// A hyperproduct `r₁∘r₂∘…∘rₙ` together with its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factored {
    pub factors: Vec<Element>,
    pub product: ElementSet,
}

impl fmt::Display for Factored {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expr: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}={}", expr.join("∘"), self.product)
    }
}

/// Concrete evidence that a property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `r∘x ⊄ S` for some `x ∈ S`.
    Absorption { r: Element, x: Element, product: ElementSet },
    /// `x − y ∉ S` for `x, y ∈ S`.
    Difference { x: Element, y: Element, difference: Element },
    /// `x∘y` lies in the ideal while neither factor satisfies the conclusion.
    Pair { x: Element, y: Element, product: ElementSet },
    /// `a∘b∘c` lies in the ideal while none of the pair products does.
    Triple {
        a: Element,
        b: Element,
        c: Element,
        abc: ElementSet,
        ab: ElementSet,
        bc: ElementSet,
        ac: ElementSet,
    },
    /// A hyperproduct that meets the ideal without being contained in it.
    Product { term: Factored, inside: ElementSet },
    /// A union of hyperproducts that meets the ideal without being contained in it.
    Union { terms: Vec<Factored>, union: ElementSet },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Absorption { r, x, product } => write!(f, "{r}∘{x}={product}"),
            Witness::Difference { x, y, difference } => write!(f, "{x}-{y}={difference}"),
            Witness::Pair { x, y, product } => write!(f, "({x},{y}) {x}∘{y}={product}"),
            Witness::Triple { a, b, c, abc, ab, bc, ac } => write!(
                f,
                "({a},{b},{c}) abc={abc} ab={ab} bc={bc} ac={ac}"
            ),
            Witness::Product { term, inside } => {
                write!(f, "{term} depth {} meets at {inside}", term.factors.len())
            }
            Witness::Union { terms, union } => {
                let parts: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
                write!(f, "{} union {union}", parts.join(" ∪ "))
            }
        }
    }
}

/// Result of a classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// The ideal is the whole ring, where the property is not defined.
    NotProper,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "true",
            Verdict::Fails(_) => "false",
            Verdict::NotProper => "not_proper",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Fails(w) => write!(f, "false witness {w}"),
            other => f.write_str(other.label()),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Verdict", 2)?;
        st.serialize_field("holds", &matches!(self, Verdict::Holds))?;
        match self {
            Verdict::Fails(w) => st.serialize_field("witness", w)?,
            Verdict::NotProper => st.serialize_field("not_proper", &true)?,
            Verdict::Holds => st.skip_field("witness")?,
        }
        st.end()
    }
}

/// The classifier's vocabulary of ideal properties.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Predicate {
    #[serde(rename = "prime")]
    Prime,
    #[serde(rename = "primary")]
    Primary,
    #[serde(rename = "2a")]
    TwoAbsorbing,
    #[serde(rename = "2ap")]
    TwoAbsorbingPrimary,
    #[serde(rename = "c")]
    CIdeal,
    #[serde(rename = "cu")]
    CuIdeal,
}

impl Predicate {
    pub const ALL: [Predicate; 6] = [
        Predicate::Prime,
        Predicate::Primary,
        Predicate::TwoAbsorbing,
        Predicate::TwoAbsorbingPrimary,
        Predicate::CIdeal,
        Predicate::CuIdeal,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Predicate::Prime => "prime",
            Predicate::Primary => "primary",
            Predicate::TwoAbsorbing => "2a",
            Predicate::TwoAbsorbingPrimary => "2ap",
            Predicate::CIdeal => "c",
            Predicate::CuIdeal => "cu",
        }
    }

    /// Properties defined only for proper ideals.
    pub fn needs_proper(self) -> bool {
        !matches!(self, Predicate::CIdeal | Predicate::CuIdeal)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Predicate::ALL
            .into_iter()
            .find(|p| p.key().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownPredicate(s.to_string()))
    }
}
