//! The three hyperring families, their hyperoperation, and the axiom checker.
//!
//! * `IntegerScaled`: carrier Z, `x∘y = { k·x·y : k ∈ K }` for a finite set K of
//!   nonzero integers.
//! * `ModularScaled`: carrier Z/n, `x∘y = { k·x·y mod n : k ∈ K }`.
//! * `ModularCoset`: carrier Z/n, `x∘y = x·y + J` for an additive subgroup J.
//!   This family is always strongly distributive.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::ElementSet;

pub type Element = i64;

/// Default half-width of the sampled window used for the integer family.
pub const AXIOM_WINDOW: Element = 25;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    IntegerScaled { multipliers: Vec<Element> },
    ModularScaled { modulus: Element, multipliers: Vec<Element> },
    ModularCoset { modulus: Element, coset: Vec<Element> },
}

/// A validated hyperring descriptor. Fields are canonical (sorted, deduplicated)
/// so structural equality is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    family: Family,
}

/// JSON form of a ring, e.g. `{"family":"modular_coset","modulus":12,"coset":[0,6]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingSpec {
    IntegerScaled { multipliers: Vec<Element> },
    ModularScaled { modulus: Element, multipliers: Vec<Element> },
    ModularCoset { modulus: Element, coset: Vec<Element> },
}

fn canonical(xs: &[Element]) -> Vec<Element> {
    let mut v = xs.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

impl Ring {
    pub fn integer_scaled(multipliers: &[Element]) -> Result<Ring> {
        let multipliers = canonical(multipliers);
        if multipliers.is_empty() {
            return Err(Error::InvalidRing("multiplier set is empty".into()));
        }
        if multipliers.contains(&0) {
            return Err(Error::InvalidRing("0 is not allowed as a multiplier".into()));
        }
        Ok(Ring { family: Family::IntegerScaled { multipliers } })
    }

    pub fn modular_scaled(modulus: Element, multipliers: &[Element]) -> Result<Ring> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("modulus {modulus} < 2")));
        }
        let multipliers = canonical(multipliers);
        if multipliers.is_empty() {
            return Err(Error::InvalidRing("multiplier set is empty".into()));
        }
        if let Some(&k) = multipliers.iter().find(|&&k| !(0..modulus).contains(&k)) {
            return Err(Error::InvalidRing(format!("multiplier {k} is not a residue mod {modulus}")));
        }
        Ok(Ring { family: Family::ModularScaled { modulus, multipliers } })
    }

    pub fn modular_coset(modulus: Element, coset: &[Element]) -> Result<Ring> {
        if modulus < 2 {
            return Err(Error::InvalidRing(format!("modulus {modulus} < 2")));
        }
        let coset = canonical(coset);
        if let Some(&j) = coset.iter().find(|&&j| !(0..modulus).contains(&j)) {
            return Err(Error::InvalidRing(format!("coset element {j} is not a residue mod {modulus}")));
        }
        if !coset.contains(&0) {
            return Err(Error::InvalidRing("coset subgroup must contain 0".into()));
        }
        for &a in &coset {
            for &b in &coset {
                if coset.binary_search(&((a + b) % modulus)).is_err() {
                    return Err(Error::InvalidRing(format!(
                        "coset is not closed under addition: {a}+{b}"
                    )));
                }
            }
        }
        let ring = Ring { family: Family::ModularCoset { modulus, coset } };
        debug_assert!(ring.check_axioms().strongly_distributive);
        Ok(ring)
    }

    pub fn from_spec(spec: &RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::IntegerScaled { multipliers } => Ring::integer_scaled(multipliers),
            RingSpec::ModularScaled { modulus, multipliers } => {
                Ring::modular_scaled(*modulus, multipliers)
            }
            RingSpec::ModularCoset { modulus, coset } => Ring::modular_coset(*modulus, coset),
        }
    }

    pub fn spec(&self) -> RingSpec {
        match &self.family {
            Family::IntegerScaled { multipliers } => {
                RingSpec::IntegerScaled { multipliers: multipliers.clone() }
            }
            Family::ModularScaled { modulus, multipliers } => RingSpec::ModularScaled {
                modulus: *modulus,
                multipliers: multipliers.clone(),
            },
            Family::ModularCoset { modulus, coset } => {
                RingSpec::ModularCoset { modulus: *modulus, coset: coset.clone() }
            }
        }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn is_integer(&self) -> bool {
        matches!(self.family, Family::IntegerScaled { .. })
    }

    pub fn is_coset(&self) -> bool {
        matches!(self.family, Family::ModularCoset { .. })
    }

    /// Modulus of a modular carrier; `None` for the integers.
    pub fn modulus(&self) -> Option<Element> {
        match self.family {
            Family::IntegerScaled { .. } => None,
            Family::ModularScaled { modulus, .. } | Family::ModularCoset { modulus, .. } => {
                Some(modulus)
            }
        }
    }

    /// Multiplier set K of a scaled family.
    pub fn multipliers(&self) -> Option<&[Element]> {
        match &self.family {
            Family::IntegerScaled { multipliers } | Family::ModularScaled { multipliers, .. } => {
                Some(multipliers)
            }
            Family::ModularCoset { .. } => None,
        }
    }

    /// All carrier elements of a modular family, ascending.
    pub fn elements(&self) -> Option<impl Iterator<Item = Element> + Clone> {
        self.modulus().map(|n| 0..n)
    }

    pub fn check_element(&self, x: Element) -> Result<()> {
        match self.modulus() {
            Some(n) if !(0..n).contains(&x) => Err(Error::OutOfCarrier { element: x, modulus: n }),
            _ => Ok(()),
        }
    }

    /// Canonical representative of `x` in the carrier.
    pub fn reduce(&self, x: Element) -> Element {
        match self.modulus() {
            Some(n) => x.rem_euclid(n),
            None => x,
        }
    }

    pub fn add(&self, x: Element, y: Element) -> Result<Element> {
        match self.modulus() {
            Some(n) => Ok((x + y).rem_euclid(n)),
            None => x.checked_add(y).ok_or(Error::Overflow),
        }
    }

    pub fn neg(&self, x: Element) -> Element {
        self.reduce(-x)
    }

    pub fn sub(&self, x: Element, y: Element) -> Result<Element> {
        self.add(x, self.neg(y))
    }

    /// The hyperoperation `a∘b`.
    pub fn hmul(&self, a: Element, b: Element) -> Result<ElementSet> {
        self.check_element(a)?;
        self.check_element(b)?;
        match &self.family {
            Family::IntegerScaled { multipliers } => multipliers
                .iter()
                .map(|&k| k.checked_mul(a).and_then(|t| t.checked_mul(b)).ok_or(Error::Overflow))
                .collect(),
            Family::ModularScaled { modulus, multipliers } => {
                let ab = (a * b) % modulus;
                Ok(multipliers.iter().map(|&k| (k * ab) % modulus).collect())
            }
            Family::ModularCoset { modulus, coset } => {
                let ab = (a * b) % modulus;
                Ok(coset.iter().map(|&j| (ab + j) % modulus).collect())
            }
        }
    }

    /// `A∘B`, the union of `a∘b` over all pairs.
    pub fn hset_product(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyOperand);
        }
        let mut out = ElementSet::new();
        for x in a {
            for y in b {
                out.extend(self.hmul(x, y)?.iter());
            }
        }
        Ok(out)
    }

    /// Hyperpower `aⁿ = aⁿ⁻¹∘a`, with `a¹ = {a}`.
    pub fn hpower(&self, a: Element, n: u32) -> Result<ElementSet> {
        if n == 0 {
            return Err(Error::ZeroPower);
        }
        self.check_element(a)?;
        let single = ElementSet::singleton(a);
        let mut acc = single.clone();
        for _ in 1..n {
            acc = self.hset_product(&acc, &single)?;
        }
        Ok(acc)
    }

    /// Elementwise sum `A + B`.
    pub fn set_sum(&self, a: &ElementSet, b: &ElementSet) -> Result<ElementSet> {
        let mut out = ElementSet::new();
        for x in a {
            for y in b {
                out.insert(self.add(x, y)?);
            }
        }
        Ok(out)
    }

    pub fn set_neg(&self, a: &ElementSet) -> ElementSet {
        a.iter().map(|x| self.neg(x)).collect()
    }

    /// A proper hyperring is not a ring: some product has more than one element.
    pub fn is_proper(&self) -> bool {
        match &self.family {
            Family::IntegerScaled { multipliers } => multipliers.len() > 1,
            Family::ModularCoset { coset, .. } => coset.len() > 1,
            Family::ModularScaled { modulus, multipliers } => (0..*modulus).any(|x| {
                (0..*modulus).any(|y| {
                    let xy = x * y % modulus;
                    multipliers.iter().any(|&k| (k * xy) % modulus != (multipliers[0] * xy) % modulus)
                })
            }),
        }
    }

    /// Elements over which axioms and quantifiers are checked: the whole carrier,
    /// or `0, 1, -1, 2, -2, ..., w, -w` for the integers.
    pub fn sample_elements(&self, window: Element) -> Vec<Element> {
        match self.modulus() {
            Some(n) => (0..n).collect(),
            None => {
                let mut v = vec![0];
                for i in 1..=window {
                    v.push(i);
                    v.push(-i);
                }
                v
            }
        }
    }

    pub fn check_axioms(&self) -> AxiomReport {
        self.check_axioms_with_window(AXIOM_WINDOW)
    }

    pub fn check_axioms_with_window(&self, window: Element) -> AxiomReport {
        let xs = self.sample_elements(window);
        let mut report = AxiomReport {
            associative: true,
            distributive_inclusion: true,
            strongly_distributive: true,
            absorbing_zero: true,
            commutative: true,
            negation_compatible: true,
            proper: self.is_proper(),
            counterexamples: BTreeMap::new(),
        };

        if let Family::IntegerScaled { multipliers } = &self.family {
            // (x∘y)∘z and x∘(y∘z) both equal { κ·xyz : κ ∈ K·K }; compare the
            // two multiplier sets in the order each association produces them.
            let left: ElementSet =
                multipliers.iter().flat_map(|&k1| multipliers.iter().map(move |&k2| k2 * k1)).collect();
            let right: ElementSet =
                multipliers.iter().flat_map(|&k1| multipliers.iter().map(move |&k2| k1 * k2)).collect();
            if left != right {
                report.fail("associative", vec![1, 1, 1]);
            }
        }

        for &x in &xs {
            let zero_left = self.hmul(0, x);
            let zero_right = self.hmul(x, 0);
            match (zero_left, zero_right) {
                (Ok(l), Ok(r)) if l == r && l.contains(0) => {}
                _ => report.fail("absorbing_zero", vec![x]),
            }
        }

        for &x in &xs {
            for &y in &xs {
                let (Ok(xy), Ok(yx)) = (self.hmul(x, y), self.hmul(y, x)) else {
                    continue;
                };
                if xy != yx {
                    report.fail("commutative", vec![x, y]);
                }
                let neg = self.set_neg(&xy);
                let ok = matches!(self.hmul(x, self.neg(y)), Ok(s) if s == neg)
                    && matches!(self.hmul(self.neg(x), y), Ok(s) if s == neg);
                if !ok {
                    report.fail("negation_compatible", vec![x, y]);
                }
            }
        }

        for &x in &xs {
            for &y in &xs {
                let Ok(xy) = self.hmul(x, y) else { continue };
                for &z in &xs {
                    let _ = self.check_triple(x, y, z, &xy, &mut report);
                }
            }
        }
        if !report.distributive_inclusion {
            report.strongly_distributive = false;
        }
        report
    }

    fn check_triple(
        &self,
        x: Element,
        y: Element,
        z: Element,
        xy: &ElementSet,
        report: &mut AxiomReport,
    ) -> Result<()> {
        if report.associative {
            let left = self.hset_product(xy, &ElementSet::singleton(z))?;
            let right = self.hset_product(&ElementSet::singleton(x), &self.hmul(y, z)?)?;
            if left != right {
                report.fail("associative", vec![x, y, z]);
            }
        }
        if report.distributive_inclusion || report.strongly_distributive {
            let lhs = self.hmul(x, self.add(y, z)?)?;
            let rhs = self.set_sum(xy, &self.hmul(x, z)?)?;
            let lhs_r = self.hmul(self.add(y, z)?, x)?;
            let rhs_r = self.set_sum(&self.hmul(y, x)?, &self.hmul(z, x)?)?;
            if !(lhs.is_subset(&rhs) && lhs_r.is_subset(&rhs_r)) {
                report.fail("distributive_inclusion", vec![x, y, z]);
            }
            if lhs != rhs || lhs_r != rhs_r {
                report.fail("strongly_distributive", vec![x, y, z]);
            }
        }
        Ok(())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::IntegerScaled { multipliers } => {
                write!(f, "Z[K={}]", multipliers.iter().copied().collect::<ElementSet>())
            }
            Family::ModularScaled { modulus, multipliers } => {
                write!(f, "Z{modulus}[K={}]", multipliers.iter().copied().collect::<ElementSet>())
            }
            Family::ModularCoset { modulus, coset } => {
                write!(f, "Z{modulus}[+{}]", coset.iter().copied().collect::<ElementSet>())
            }
        }
    }
}

/// Outcome of [`Ring::check_axioms`]. `counterexamples` holds the first failing
/// element tuple for each axiom that does not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub associative: bool,
    pub distributive_inclusion: bool,
    pub strongly_distributive: bool,
    pub absorbing_zero: bool,
    pub commutative: bool,
    pub negation_compatible: bool,
    pub proper: bool,
    pub counterexamples: BTreeMap<&'static str, Vec<Element>>,
}

impl AxiomReport {
    fn fail(&mut self, axiom: &'static str, witness: Vec<Element>) {
        let flag = match axiom {
            "associative" => &mut self.associative,
            "distributive_inclusion" => &mut self.distributive_inclusion,
            "strongly_distributive" => &mut self.strongly_distributive,
            "absorbing_zero" => &mut self.absorbing_zero,
            "commutative" => &mut self.commutative,
            "negation_compatible" => &mut self.negation_compatible,
            _ => unreachable!("unknown axiom {axiom}"),
        };
        if *flag {
            *flag = false;
            self.counterexamples.insert(axiom, witness);
        }
    }

    /// Every multiplicative hyperring axiom holds (strong distributivity is
    /// an extra property, not an axiom).
    pub fn is_hyperring(&self) -> bool {
        self.associative
            && self.distributive_inclusion
            && self.absorbing_zero
            && self.commutative
            && self.negation_compatible
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z23() -> Ring {
        Ring::integer_scaled(&[2, 3]).unwrap()
    }

    fn z6() -> Ring {
        Ring::modular_scaled(6, &[1, 2, 3, 4, 5]).unwrap()
    }

    #[test]
    fn hmul_examples() {
        assert_eq!(z23().hmul(4, 3).unwrap(), [24, 36].into());
        assert_eq!(z23().hmul(1, 1).unwrap(), [2, 3].into());
        assert_eq!(z6().hmul(3, 2).unwrap(), [0].into());
        let coset = Ring::modular_coset(12, &[0, 6]).unwrap();
        assert_eq!(coset.hmul(1, 4).unwrap(), [4, 10].into());
    }

    #[test]
    fn hmul_rejects_out_of_carrier() {
        assert_eq!(
            z6().hmul(6, 1),
            Err(Error::OutOfCarrier { element: 6, modulus: 6 })
        );
        assert!(z6().hmul(-1, 1).is_err());
    }

    #[test]
    fn set_products() {
        let r = z23();
        assert_eq!(r.hset_product(&[1].into(), &[1, 5].into()).unwrap(), [2, 3, 10, 15].into());
        let r24 = Ring::integer_scaled(&[2, 4]).unwrap();
        assert_eq!(r24.hset_product(&[3].into(), &[5].into()).unwrap(), [30, 60].into());
        assert!(r.hset_product(&[7].into(), &[0].into()).unwrap().contains(0));
        assert_eq!(r.hset_product(&ElementSet::new(), &[1].into()), Err(Error::EmptyOperand));
    }

    #[test]
    fn powers() {
        assert_eq!(z23().hpower(3, 2).unwrap(), [18, 27].into());
        assert_eq!(z23().hpower(-7, 1).unwrap(), [-7].into());
        for m in 2..8 {
            assert_eq!(z6().hpower(2, m).unwrap(), [0, 2, 4].into());
        }
        assert_eq!(z6().hpower(2, 0), Err(Error::ZeroPower));
    }

    #[test]
    fn descriptor_validation() {
        assert!(Ring::integer_scaled(&[]).is_err());
        assert!(Ring::integer_scaled(&[0, 2]).is_err());
        assert!(Ring::modular_scaled(1, &[0]).is_err());
        assert!(Ring::modular_scaled(6, &[6]).is_err());
        assert!(Ring::modular_coset(12, &[6]).is_err());
        assert!(Ring::modular_coset(12, &[0, 5]).is_err());
        assert!(Ring::modular_coset(12, &[0, 4, 8]).is_ok());
    }

    #[test]
    fn axioms_integer_scaled() {
        let rep = z23().check_axioms_with_window(10);
        assert!(rep.is_hyperring());
        assert!(!rep.strongly_distributive);
        assert_eq!(rep.counterexamples["strongly_distributive"], vec![1, 1, 1]);
        assert!(rep.proper);
        // degenerate single multiplier: an ordinary (scaled) ring
        let single = Ring::integer_scaled(&[3]).unwrap().check_axioms_with_window(6);
        assert!(single.strongly_distributive && !single.proper);
    }

    #[test]
    fn axioms_modular() {
        let rep = z6().check_axioms();
        assert!(rep.is_hyperring());
        assert!(!rep.strongly_distributive);
        assert_eq!(rep.counterexamples["strongly_distributive"], vec![1, 1, 1]);

        let coset = Ring::modular_coset(12, &[0, 6]).unwrap().check_axioms();
        assert!(coset.is_hyperring() && coset.strongly_distributive);

        let flat = Ring::modular_scaled(6, &[1]).unwrap();
        assert!(!flat.is_proper());
    }

    #[test]
    fn spec_round_trip() {
        let r = Ring::modular_coset(12, &[6, 0]).unwrap();
        let json = serde_json::to_string(&r.spec()).unwrap();
        assert_eq!(json, r#"{"family":"modular_coset","modulus":12,"coset":[0,6]}"#);
        let back: RingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(Ring::from_spec(&back).unwrap(), r);
    }
}
