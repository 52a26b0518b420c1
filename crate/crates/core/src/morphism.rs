//! Quotient hyperrings and the good homomorphisms built from them.
//!
//! Every hyperideal of a modular carrier is a subgroup `dZ_n` with `d | n`, so
//! each quotient is again a modular carrier, labeled by `x ↦ x mod d`.
//! Cosets multiply as `(a+J)∗(b+J) = {c+J : c ∈ a∘b}`, which gives:
//!
//! * `Z[K] / mZ` → `Z_m[K mod m]`
//! * `Z_n[K] / dZ_n` → `Z_d[K mod d]`
//! * `Z_n[+J] / J′` → `Z_d[+{0}]`, since `J ⊆ J′` vanishes in the quotient.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{self, Ideal, IdealSpec};
use crate::ring::{Element, Family, Ring, RingSpec};
use crate::set::ElementSet;

/// `R/J` together with its labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub source: Ring,
    pub ideal: Ideal,
    pub target: Ring,
    /// The label of `x + J` is `x mod modulus`.
    pub modulus: Element,
}

impl Quotient {
    pub fn label(&self, x: Element) -> Element {
        x.rem_euclid(self.modulus)
    }
}

pub fn quotient(ring: &Ring, j: &Ideal) -> Result<Quotient> {
    let d = match j {
        Ideal::Principal(m) if ring.is_integer() => *m,
        Ideal::Explicit(_) if !ring.is_integer() => j.generator(ring),
        _ => return Err(Error::FamilyMismatch),
    };
    if d < 2 {
        return Err(Error::DegenerateQuotient(format!("{ring} / {j}")));
    }
    let target = match ring.family() {
        Family::IntegerScaled { multipliers } | Family::ModularScaled { multipliers, .. } => {
            let reduced: Vec<Element> = multipliers.iter().map(|k| k.rem_euclid(d)).collect();
            Ring::modular_scaled(d, &reduced)?
        }
        Family::ModularCoset { coset, .. } => {
            // J′ contains 0∘r = J, so the coset collapses
            debug_assert!(coset.iter().all(|c| c % d == 0));
            Ring::modular_coset(d, &[0])?
        }
    };
    let axioms = target.check_axioms();
    if !axioms.is_hyperring() {
        return Err(Error::InvalidRing(format!("quotient {target} fails {:?}", axioms.counterexamples)));
    }
    Ok(Quotient { source: ring.clone(), ideal: j.clone(), target, modulus: d })
}

/// A good homomorphism: `f(x+y) = f(x)+f(y)` and `f(x∘y) = f(x)∘f(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GoodHom {
    Identity(Ring),
    Projection(Quotient),
    Composition { outer: Box<GoodHom>, inner: Box<GoodHom> },
}

/// JSON form: `{"projection":{"ring":…,"ideal":…}}`, `{"identity":{"ring":…}}`,
/// or `{"compose":{"outer":…,"inner":…}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum HomSpec {
    Identity { ring: RingSpec },
    Projection { ring: RingSpec, ideal: IdealSpec },
    Compose { outer: Box<HomSpec>, inner: Box<HomSpec> },
}

impl GoodHom {
    pub fn identity(ring: &Ring) -> GoodHom {
        GoodHom::Identity(ring.clone())
    }

    /// The canonical projection `R → R/J`, checked on a window of the source.
    pub fn projection(ring: &Ring, j: &Ideal) -> Result<GoodHom> {
        let q = quotient(ring, j)?;
        let window = q.modulus;
        let f = GoodHom::Projection(q);
        if let Some((x, y)) = f.check_good(window)? {
            return Err(Error::InvalidRing(format!("projection {f} is not good at ({x},{y})")));
        }
        Ok(f)
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: GoodHom, inner: GoodHom) -> Result<GoodHom> {
        if outer.source() != inner.target() {
            return Err(Error::EndpointMismatch);
        }
        Ok(GoodHom::Composition { outer: Box::new(outer), inner: Box::new(inner) })
    }

    pub fn from_spec(spec: &HomSpec) -> Result<GoodHom> {
        match spec {
            HomSpec::Identity { ring } => Ok(GoodHom::identity(&Ring::from_spec(ring)?)),
            HomSpec::Projection { ring, ideal } => {
                let r = Ring::from_spec(ring)?;
                let j = Ideal::from_spec(&r, ideal)?;
                GoodHom::projection(&r, &j)
            }
            HomSpec::Compose { outer, inner } => {
                GoodHom::compose(GoodHom::from_spec(outer)?, GoodHom::from_spec(inner)?)
            }
        }
    }

    pub fn source(&self) -> &Ring {
        match self {
            GoodHom::Identity(r) => r,
            GoodHom::Projection(q) => &q.source,
            GoodHom::Composition { inner, .. } => inner.source(),
        }
    }

    pub fn target(&self) -> &Ring {
        match self {
            GoodHom::Identity(r) => r,
            GoodHom::Projection(q) => &q.target,
            GoodHom::Composition { outer, .. } => outer.target(),
        }
    }

    pub fn apply(&self, x: Element) -> Result<Element> {
        self.source().check_element(x)?;
        Ok(match self {
            GoodHom::Identity(_) => x,
            GoodHom::Projection(q) => q.label(x),
            GoodHom::Composition { outer, inner } => outer.apply(inner.apply(x)?)?,
        })
    }

    pub fn apply_set(&self, s: &ElementSet) -> Result<ElementSet> {
        s.iter().map(|x| self.apply(x)).collect()
    }

    /// For an integer source, the least `M > 0` with `f(x + M) = f(x)`.
    /// `None` when `f` is injective on the integers.
    pub fn period(&self) -> Option<Element> {
        if !self.source().is_integer() {
            return None;
        }
        match self {
            GoodHom::Identity(_) => None,
            GoodHom::Projection(q) => Some(q.modulus),
            GoodHom::Composition { outer, inner } => inner.period().or_else(|| outer.period()),
        }
    }

    /// Source elements that represent every fibre of `f`.
    fn fundamental_domain(&self) -> Option<Vec<Element>> {
        match (self.source().modulus(), self.period()) {
            (Some(n), _) => Some((0..n).collect()),
            (None, Some(m)) => Some((0..m).collect()),
            (None, None) => None,
        }
    }

    /// `f⁻¹(J′)`, validated as a hyperideal of the source.
    pub fn preimage(&self, j: &Ideal) -> Result<Ideal> {
        let Some(domain) = self.fundamental_domain() else {
            // integer identity
            return Ok(j.clone());
        };
        let mut members = Vec::new();
        for x in domain {
            if ideal::contains(self.target(), j, self.apply(x)?)? {
                members.push(x);
            }
        }
        match self.period() {
            None => Ideal::from_elements(self.source(), members),
            Some(m) => {
                let e = members.iter().copied().filter(|&x| x > 0).min().unwrap_or(m);
                let expected: Vec<Element> = (0..m).step_by(e as usize).collect();
                if m % e != 0 || members != expected {
                    return Err(Error::NotHyperideal(format!("preimage of {j} under {self}")));
                }
                Ok(Ideal::multiple(e))
            }
        }
    }

    /// `f(I)`, validated as a hyperideal of the target. Every constructible
    /// homomorphism is onto.
    pub fn image(&self, i: &Ideal) -> Result<Ideal> {
        let source = self.source();
        let elements: Vec<Element> = match (i, self.period()) {
            (Ideal::Principal(_), None) => return Ok(i.clone()),
            (Ideal::Principal(d), Some(m)) => (0..m).map(|t| d * t).collect(),
            (Ideal::Explicit(s), _) => s.iter().collect(),
        };
        ideal::contains(source, i, elements[0])?;
        let image: ElementSet = elements.into_iter().map(|x| self.apply(x)).collect::<Result<_>>()?;
        if let Some(n) = self.target().modulus() {
            let hits: ElementSet = match self.fundamental_domain() {
                Some(dom) => dom.into_iter().map(|x| self.apply(x)).collect::<Result<_>>()?,
                None => ElementSet::new(),
            };
            if hits.len() != n as usize {
                return Err(Error::InvalidRing(format!("{self} is not onto")));
            }
        }
        Ideal::from_elements(self.target(), image.iter())
    }

    /// `Ker f = f⁻¹(<0>)`.
    pub fn kernel(&self) -> Result<Ideal> {
        self.preimage(&ideal::zero_ideal(self.target()))
    }

    /// First pair where additivity or `f(x∘y) = f(x)∘f(y)` fails, over the
    /// whole source carrier or `[−window, window]` for the integers.
    pub fn check_good(&self, window: Element) -> Result<Option<(Element, Element)>> {
        let xs = match self.source().modulus() {
            Some(n) => (0..n).collect(),
            None => (-window..=window).collect::<Vec<_>>(),
        };
        let (s, t) = (self.source(), self.target());
        for &x in &xs {
            let fx = self.apply(x)?;
            for &y in &xs {
                let fy = self.apply(y)?;
                let additive = self.apply(s.add(x, y)?)? == t.add(fx, fy)?;
                let multiplicative = self.apply_set(&s.hmul(x, y)?)? == t.hmul(fx, fy)?;
                if !(additive && multiplicative) {
                    return Ok(Some((x, y)));
                }
            }
        }
        Ok(None)
    }
}

impl fmt::Display for GoodHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GoodHom::Identity(r) => write!(f, "id[{r}]"),
            GoodHom::Projection(q) => write!(f, "{} -> {}/{}", q.source, q.source, q.ideal),
            GoodHom::Composition { outer, inner } => write!(f, "({outer}) . ({inner})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(ks: &[Element]) -> Ring {
        Ring::integer_scaled(ks).unwrap()
    }

    fn coset12() -> Ring {
        Ring::modular_coset(12, &[0, 6]).unwrap()
    }

    #[test]
    fn integer_quotients() {
        let q = quotient(&z(&[2, 3]), &Ideal::multiple(12)).unwrap();
        assert_eq!(q.target, Ring::modular_scaled(12, &[2, 3]).unwrap());
        let q = quotient(&z(&[2, 4]), &Ideal::multiple(4)).unwrap();
        assert_eq!(q.target, Ring::modular_scaled(4, &[0, 2]).unwrap());
        assert!(matches!(quotient(&z(&[2, 3]), &Ideal::multiple(0)), Err(Error::DegenerateQuotient(_))));
        assert!(matches!(quotient(&z(&[2, 3]), &Ideal::multiple(1)), Err(Error::DegenerateQuotient(_))));
    }

    #[test]
    fn coset_products_match_quotient() {
        // (a+J)∗(b+J) = {c+J : c ∈ a∘b} on every residue pair
        let r = z(&[2, 3]);
        let q = quotient(&r, &Ideal::multiple(12)).unwrap();
        for a in 0..12 {
            for b in 0..12 {
                let cosets: ElementSet = r.hmul(a, b).unwrap().iter().map(|c| q.label(c)).collect();
                assert_eq!(cosets, q.target.hmul(a, b).unwrap());
            }
        }
    }

    #[test]
    fn kernels() {
        let f = GoodHom::projection(&z(&[2, 3]), &Ideal::multiple(12)).unwrap();
        assert_eq!(f.kernel().unwrap(), Ideal::multiple(12));
        assert_eq!(GoodHom::identity(&z(&[2, 3])).kernel().unwrap(), Ideal::multiple(0));
        assert_eq!(GoodHom::identity(&coset12()).kernel().unwrap(), Ideal::Explicit([0, 6].into()));
        let f = GoodHom::projection(&coset12(), &Ideal::Explicit([0, 6].into())).unwrap();
        assert_eq!(f.kernel().unwrap(), Ideal::Explicit([0, 6].into()));
    }

    #[test]
    fn images_and_preimages() {
        let f = GoodHom::projection(&z(&[2, 4]), &Ideal::multiple(4)).unwrap();
        assert_eq!(f.image(&Ideal::multiple(2)).unwrap(), Ideal::Explicit([0, 2].into()));
        assert_eq!(f.preimage(&Ideal::Explicit([0].into())).unwrap(), Ideal::multiple(4));
        assert_eq!(f.preimage(&Ideal::Explicit([0, 2].into())).unwrap(), Ideal::multiple(2));
        let id = GoodHom::identity(&z(&[2, 4]));
        assert_eq!(id.image(&Ideal::multiple(6)).unwrap(), Ideal::multiple(6));
    }

    #[test]
    fn compositions() {
        let r = z(&[2, 3]);
        let inner = GoodHom::projection(&r, &Ideal::multiple(24)).unwrap();
        let mid = inner.target().clone();
        let outer = GoodHom::projection(&mid, &Ideal::from_elements(&mid, (0..24).step_by(12)).unwrap()).unwrap();
        let f = GoodHom::compose(outer, inner.clone()).unwrap();
        assert_eq!(f.period(), Some(24));
        assert_eq!(f.apply(37).unwrap(), 1);
        assert_eq!(f.kernel().unwrap(), Ideal::multiple(12));
        assert_eq!(GoodHom::compose(inner.clone(), inner), Err(Error::EndpointMismatch));
    }

    #[test]
    fn good_hom_law_wide_window() {
        for m in [2, 6, 12, 24] {
            for ks in [&[2, 3][..], &[2, 4], &[2, 3, 5]] {
                let f = GoodHom::projection(&z(ks), &Ideal::multiple(m)).unwrap();
                assert_eq!(f.check_good(100).unwrap(), None);
            }
        }
    }

    #[test]
    fn hom_spec_parsing() {
        let json = r#"{"projection":{"ring":{"family":"integer_scaled","multipliers":[2,3]},"ideal":{"principal":12}}}"#;
        let spec: HomSpec = serde_json::from_str(json).unwrap();
        let f = GoodHom::from_spec(&spec).unwrap();
        assert_eq!(f.target().to_string(), "Z12[K={2,3}]");
    }
}
