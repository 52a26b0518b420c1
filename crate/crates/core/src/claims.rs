//! Reference claims about specific ideals, compared against computed
//! classifications. A claim that disagrees with the classifier is reported
//! as a divergence rather than silently trusted.

use serde::Serialize;

use crate::classify::Classification;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::ring::{Element, Ring};
use crate::verdict::Predicate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claimed {
    Property { predicate: Predicate, holds: bool },
    Radical { ideal: String },
    Intersection { of: [String; 2], equals: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub ring: String,
    pub ideal: String,
    pub claimed: Claimed,
    #[serde(skip)]
    ring_value: Ring,
    #[serde(skip)]
    ideal_value: Ideal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub claim: &'static str,
    pub claimed: String,
    pub computed: String,
}

fn property(id: &'static str, ks: &[Element], d: Element, predicate: Predicate, holds: bool) -> Claim {
    let ring = Ring::integer_scaled(ks).expect("valid multipliers");
    Claim {
        id,
        ring: ring.to_string(),
        ideal: Ideal::multiple(d).to_string(),
        claimed: Claimed::Property { predicate, holds },
        ring_value: ring,
        ideal_value: Ideal::multiple(d),
    }
}

fn radical(id: &'static str, ks: &[Element], d: Element, rad: Element) -> Claim {
    let ring = Ring::integer_scaled(ks).expect("valid multipliers");
    Claim {
        id,
        ring: ring.to_string(),
        ideal: Ideal::multiple(d).to_string(),
        claimed: Claimed::Radical { ideal: Ideal::multiple(rad).to_string() },
        ring_value: ring,
        ideal_value: Ideal::multiple(d),
    }
}

fn z6(id: &'static str, elements: &[Element], predicate: Predicate, holds: bool) -> Claim {
    let ring = Ring::modular_scaled(6, &[1, 2, 3, 4, 5]).expect("valid modular ring");
    let ideal = Ideal::Explicit(elements.iter().copied().collect());
    Claim {
        id,
        ring: ring.to_string(),
        ideal: ideal.to_string(),
        claimed: Claimed::Property { predicate, holds },
        ring_value: ring,
        ideal_value: ideal,
    }
}

pub fn reference_claims() -> Vec<Claim> {
    use Predicate::*;
    let ring = Ring::integer_scaled(&[2, 3]).expect("valid multipliers");
    vec![
        property("z23-12-2ap", &[2, 3], 12, TwoAbsorbingPrimary, true),
        property("z23-12-2a", &[2, 3], 12, TwoAbsorbing, false),
        property("z23-12-primary", &[2, 3], 12, Primary, false),
        radical("z23-12-radical", &[2, 3], 12, 6),
        property("z23-20-2ap", &[2, 3], 20, TwoAbsorbingPrimary, true),
        radical("z23-20-radical", &[2, 3], 20, 10),
        property("z23-30-2ap", &[2, 3], 30, TwoAbsorbingPrimary, false),
        Claim {
            id: "z23-12-20-intersection",
            ring: ring.to_string(),
            ideal: Ideal::multiple(12).to_string(),
            claimed: Claimed::Intersection {
                of: ["12Z".into(), "20Z".into()],
                equals: "30Z".into(),
            },
            ring_value: ring,
            ideal_value: Ideal::multiple(12),
        },
        property("z23-5-c", &[2, 3], 5, CIdeal, true),
        property("z23-5-cu", &[2, 3], 5, CuIdeal, false),
        property("z23-2-prime", &[2, 3], 2, Prime, true),
        property("z24-2-cu", &[2, 4], 2, CuIdeal, true),
        property("z24-120-2ap", &[2, 4], 120, TwoAbsorbingPrimary, true),
        radical("z24-120-radical", &[2, 4], 120, 15),
        property("z24-15-prime", &[2, 4], 15, Prime, false),
        property("z24-3-c", &[2, 4], 3, CIdeal, true),
        property("z24-3-primary", &[2, 4], 3, Primary, true),
        property("z24-105-2ap", &[2, 4], 105, TwoAbsorbingPrimary, false),
        z6("z6-0-2a", &[0], TwoAbsorbing, true),
        z6("z6-0-prime", &[0], Prime, false),
        z6("z6-024-prime", &[0, 2, 4], Prime, true),
    ]
}

impl Claim {
    pub fn subject(&self) -> (&Ring, &Ideal) {
        (&self.ring_value, &self.ideal_value)
    }

    /// `None` when the computation agrees with the claim.
    pub fn check(&self, c: &Classification) -> Result<Option<Divergence>> {
        let (claimed, computed) = match &self.claimed {
            Claimed::Property { predicate, holds } => {
                let v = c.verdict(*predicate);
                if v.holds() == *holds {
                    return Ok(None);
                }
                (format!("{predicate} = {holds}"), format!("{predicate} = {v}"))
            }
            Claimed::Radical { ideal } => {
                if *ideal == c.radical {
                    return Ok(None);
                }
                (format!("radical = {ideal}"), format!("radical = {}", c.radical))
            }
            Claimed::Intersection { of, equals } => {
                let (r, _) = self.subject();
                let a = Ideal::from_spec(r, &of[0].parse()?)?;
                let b = Ideal::from_spec(r, &of[1].parse()?)?;
                let got = crate::ideal::intersect(r, &a, &b)?.to_string();
                if got == *equals {
                    return Ok(None);
                }
                (format!("{} ∩ {} = {equals}", of[0], of[1]), format!("{} ∩ {} = {got}", of[0], of[1]))
            }
        };
        Ok(Some(Divergence { claim: self.id, claimed, computed }))
    }
}

/// Divergences among the reference claims about this ring and ideal.
pub fn divergences(ring: &Ring, ideal: &Ideal, c: &Classification) -> Result<Vec<Divergence>> {
    let mut out = Vec::new();
    for claim in reference_claims() {
        if claim.subject() == (ring, ideal) {
            out.extend(claim.check(c)?);
        }
    }
    Ok(out)
}

/// Checks every reference claim.
pub fn audit() -> Result<Vec<Divergence>> {
    let mut out = Vec::new();
    for claim in reference_claims() {
        let (r, i) = claim.subject();
        out.extend(claim.check(&crate::classify::classify_all(r, i)?)?);
    }
    Ok(out)
}
