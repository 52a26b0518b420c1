//! Hyperideals and ideal-level arithmetic.
//!
//! In the integer family every additive subgroup `dZ` absorbs hyperproducts
//! (`k·r·x` is a multiple of `d` whenever `x` is), so ideals there are stored
//! symbolically by their nonnegative generator. Modular families store the
//! element set explicitly.
//!
//! The principal hyperideal `<a>` is the additive closure of `a` together with
//! every hyperproduct that has `a` as a factor. In a noncommutative ring the
//! left, right and two-sided product terms differ; here they coincide.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::ring::{Element, Ring};
use crate::set::ElementSet;
use crate::verdict::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ideal {
    /// `dZ` in the integer family, `d ≥ 0`.
    Principal(Element),
    /// An explicit hyperideal of a modular carrier.
    Explicit(ElementSet),
}

/// JSON form of an ideal: `{"principal":12}` or `{"elements":[0,2,4]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum IdealSpec {
    Principal { principal: Element },
    Elements { elements: Vec<Element> },
}

impl Ideal {
    /// `dZ`, normalized to a nonnegative generator.
    pub fn multiple(d: Element) -> Ideal {
        Ideal::Principal(d.abs())
    }

    /// Validates `elements` as a hyperideal of a modular ring.
    pub fn from_elements<I: IntoIterator<Item = Element>>(ring: &Ring, elements: I) -> Result<Ideal> {
        if ring.is_integer() {
            return Err(Error::FamilyMismatch);
        }
        let set: ElementSet = elements.into_iter().collect();
        for x in &set {
            ring.check_element(x)?;
        }
        match is_hyperideal(ring, &set)? {
            Verdict::Holds => Ok(Ideal::Explicit(set)),
            Verdict::Fails(w) => Err(Error::NotHyperideal(format!("{set}: {w}"))),
            Verdict::NotProper => unreachable!(),
        }
    }

    pub fn from_spec(ring: &Ring, spec: &IdealSpec) -> Result<Ideal> {
        match (spec, ring.is_integer()) {
            (IdealSpec::Principal { principal }, true) => Ok(Ideal::multiple(*principal)),
            (IdealSpec::Elements { elements }, false) => {
                Ideal::from_elements(ring, elements.iter().copied())
            }
            _ => Err(Error::FamilyMismatch),
        }
    }

    pub fn spec(&self) -> IdealSpec {
        match self {
            Ideal::Principal(d) => IdealSpec::Principal { principal: *d },
            Ideal::Explicit(s) => IdealSpec::Elements { elements: s.iter().collect() },
        }
    }

    pub fn elements(&self) -> Option<&ElementSet> {
        match self {
            Ideal::Explicit(s) => Some(s),
            Ideal::Principal(_) => None,
        }
    }

    /// Smallest positive element of the subgroup, or 0 for the zero ideal of Z.
    /// For an explicit ideal `{0}` of Z/n the generator is `n`.
    pub fn generator(&self, ring: &Ring) -> Element {
        match self {
            Ideal::Principal(d) => *d,
            Ideal::Explicit(s) => s
                .iter()
                .find(|&x| x > 0)
                .unwrap_or_else(|| ring.modulus().unwrap_or(0)),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ideal::Principal(d) => write!(f, "{d}Z"),
            Ideal::Explicit(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for IdealSpec {
    type Err = Error;

    /// Accepts JSON (`{"principal":12}`) or the rendered form (`12Z`, `{0,2,4}`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(spec) = serde_json::from_str::<IdealSpec>(s) {
            return Ok(spec);
        }
        let bad = || Error::Spec(format!("cannot parse ideal `{s}`"));
        if let Some(d) = s.strip_suffix('Z') {
            let principal = d.trim().parse().map_err(|_| bad())?;
            return Ok(IdealSpec::Principal { principal });
        }
        let inner = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')).ok_or_else(bad)?;
        let elements = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse().map_err(|_| bad()))
            .collect::<Result<Vec<Element>>>()?;
        Ok(IdealSpec::Elements { elements })
    }
}

fn same_family(ring: &Ring, ideal: &Ideal) -> Result<()> {
    match (ideal, ring.is_integer()) {
        (Ideal::Principal(_), true) | (Ideal::Explicit(_), false) => Ok(()),
        _ => Err(Error::FamilyMismatch),
    }
}

pub fn contains(ring: &Ring, ideal: &Ideal, x: Element) -> Result<bool> {
    same_family(ring, ideal)?;
    ring.check_element(x)?;
    Ok(match ideal {
        Ideal::Principal(0) => x == 0,
        Ideal::Principal(d) => x % d == 0,
        Ideal::Explicit(s) => s.contains(x),
    })
}

pub fn contains_set(ring: &Ring, ideal: &Ideal, set: &ElementSet) -> Result<bool> {
    for x in set {
        if !contains(ring, ideal, x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I ⊆ J`.
pub fn is_subideal(ring: &Ring, i: &Ideal, j: &Ideal) -> Result<bool> {
    same_family(ring, i)?;
    same_family(ring, j)?;
    Ok(match (i, j) {
        (Ideal::Principal(d), Ideal::Principal(e)) => match (*d, *e) {
            (0, _) => true,
            (_, 0) => false,
            (d, e) => d % e == 0,
        },
        (Ideal::Explicit(a), Ideal::Explicit(b)) => a.is_subset(b),
        _ => unreachable!(),
    })
}

/// A proper ideal is not the whole carrier.
pub fn is_proper(ring: &Ring, ideal: &Ideal) -> Result<bool> {
    same_family(ring, ideal)?;
    Ok(match ideal {
        Ideal::Principal(d) => *d != 1,
        Ideal::Explicit(s) => s.len() < ring.modulus().unwrap_or(0) as usize,
    })
}

/// Nonzero elements first, zero last.
fn nonzero_first(xs: impl Iterator<Item = Element>) -> Vec<Element> {
    let mut v: Vec<Element> = xs.collect();
    v.sort_by_key(|&x| (x == 0, x));
    v
}

/// Decides whether `set` is a hyperideal of a modular ring: an additive
/// subgroup with `r∘x ⊆ set` for every carrier `r` and member `x`.
pub fn is_hyperideal(ring: &Ring, set: &ElementSet) -> Result<Verdict> {
    if set.is_empty() {
        return Err(Error::EmptyOperand);
    }
    let carrier: Vec<Element> = match ring.elements() {
        Some(it) => it.collect(),
        None => return Err(Error::FamilyMismatch),
    };
    for x in set {
        for y in set {
            let d = ring.sub(x, y)?;
            if !set.contains(d) {
                return Ok(Verdict::Fails(Witness::Difference { x, y, difference: d }));
            }
        }
    }
    let rs = nonzero_first(carrier.into_iter());
    for x in nonzero_first(set.iter()) {
        for &r in &rs {
            let product = ring.hmul(r, x)?;
            if !product.is_subset(set) {
                return Ok(Verdict::Fails(Witness::Absorption { r, x, product }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Fixpoint closure of `gens ∪ {0}` under addition in a modular carrier.
fn additive_closure(ring: &Ring, gens: &ElementSet) -> Result<ElementSet> {
    let mut out: ElementSet = gens.clone();
    out.insert(0);
    loop {
        let next = ring.set_sum(&out, gens)?.union(&out);
        if next == out {
            return Ok(out);
        }
        out = next;
    }
}

pub fn sum(ring: &Ring, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_family(ring, i)?;
    same_family(ring, j)?;
    match (i, j) {
        (Ideal::Principal(d), Ideal::Principal(e)) => Ok(Ideal::multiple(arith::gcd(*d, *e))),
        (Ideal::Explicit(a), Ideal::Explicit(b)) => {
            Ideal::from_elements(ring, ring.set_sum(a, b)?.iter())
        }
        _ => unreachable!(),
    }
}

pub fn intersect(ring: &Ring, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_family(ring, i)?;
    same_family(ring, j)?;
    match (i, j) {
        (Ideal::Principal(d), Ideal::Principal(e)) => Ok(Ideal::multiple(arith::lcm(*d, *e))),
        (Ideal::Explicit(a), Ideal::Explicit(b)) => Ideal::from_elements(ring, a.intersection(b).iter()),
        _ => unreachable!(),
    }
}

/// `IJ`: all finite sums of elements drawn from pairwise hyperproducts.
///
/// For `dZ·eZ` in the integer family this is `g·d·e·Z` with `g = gcd(K)`.
pub fn product(ring: &Ring, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_family(ring, i)?;
    same_family(ring, j)?;
    match (i, j) {
        (Ideal::Principal(d), Ideal::Principal(e)) => {
            let g = arith::gcd_all(ring.multipliers().unwrap_or(&[]).iter().copied());
            let p = g.checked_mul(*d).and_then(|x| x.checked_mul(*e)).ok_or(Error::Overflow)?;
            Ok(Ideal::multiple(p))
        }
        (Ideal::Explicit(a), Ideal::Explicit(b)) => {
            let products = ring.hset_product(a, b)?;
            let closed = additive_closure(ring, &products)?;
            Ideal::from_elements(ring, closed.iter())
        }
        _ => unreachable!(),
    }
}

pub fn principal(ring: &Ring, a: Element) -> Result<Ideal> {
    ring.check_element(a)?;
    let Some(carrier) = ring.elements() else {
        return Ok(Ideal::multiple(a));
    };
    let mut gens = ElementSet::singleton(a);
    for r in carrier.clone() {
        let ra = ring.hmul(r, a)?;
        gens.extend(ra.iter());
        gens.extend(ring.hmul(a, r)?.iter());
        for u in carrier.clone() {
            gens.extend(ring.hset_product(&ra, &ElementSet::singleton(u))?.iter());
        }
    }
    let closed = additive_closure(ring, &gens)?;
    Ideal::from_elements(ring, closed.iter())
}

/// The hyperideal generated by 0.
pub fn zero_ideal(ring: &Ring) -> Ideal {
    principal(ring, 0).expect("zero generates a hyperideal in every family")
}

/// All hyperideals of a modular ring, smallest first.
pub fn lattice(ring: &Ring) -> Result<Vec<Ideal>> {
    let n = ring.modulus().ok_or(Error::FamilyMismatch)?;
    let mut out = Vec::new();
    for d in arith::divisors(n).into_iter().rev() {
        let set: ElementSet = (0..n).step_by(d as usize).collect();
        if is_hyperideal(ring, &set)?.holds() {
            out.push(Ideal::Explicit(set));
        }
    }
    Ok(out)
}

/// `√I` with certificates `(x, n)` meaning `xⁿ ⊆ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalResult {
    pub ideal: Ideal,
    pub certificates: Vec<(Element, u32)>,
}

impl RadicalResult {
    /// Re-checks every certificate by evaluating the hyperpower directly.
    pub fn verify(&self, ring: &Ring, ideal: &Ideal) -> Result<bool> {
        for &(x, n) in &self.certificates {
            if !contains(ring, &self.ideal, x)? || !contains_set(ring, ideal, &ring.hpower(x, n)?)? {
                return Ok(false);
            }
        }
        is_subideal(ring, ideal, &self.ideal)
    }
}

/// `min_{k∈K} v_p(k)` for each prime `p` of the factorization.
fn multiplier_valuations(ring: &Ring, primes: &[(Element, u32)]) -> Vec<u32> {
    let ks = ring.multipliers().unwrap_or(&[]);
    primes
        .iter()
        .map(|&(p, _)| ks.iter().filter_map(|&k| arith::valuation(p, k)).min().unwrap_or(0))
        .collect()
}

/// Least `n ≥ 1` with `xⁿ ⊆ I`, or `None` when `x ∉ √I`.
///
/// Integer family, `I = mZ`: `κ·xⁿ` over `κ ∈ Kⁿ⁻¹` has least p-adic valuation
/// `n·v_p(x) + (n−1)·μ_p` where `μ_p = min_k v_p(k)`, so the exponent is read off
/// prime by prime. Modular families iterate the power sets until one lies in I
/// or the sequence revisits a set.
pub fn radical_exponent(ring: &Ring, ideal: &Ideal, x: Element) -> Result<Option<u32>> {
    same_family(ring, ideal)?;
    ring.check_element(x)?;
    match ideal {
        Ideal::Principal(0) => Ok((x == 0).then_some(1)),
        Ideal::Principal(m) => {
            let primes = arith::factorize(*m);
            let mus = multiplier_valuations(ring, &primes);
            let mut n = 1u32;
            for (&(p, e), &mu) in primes.iter().zip(&mus) {
                let Some(v) = arith::valuation(p, x) else { continue };
                if v + mu == 0 {
                    return Ok(None);
                }
                n = n.max((e + mu).div_ceil(v + mu).max(1));
            }
            Ok(Some(n))
        }
        Ideal::Explicit(set) => {
            let single = ElementSet::singleton(x);
            let mut power = single.clone();
            let mut seen: HashMap<ElementSet, u32> = HashMap::new();
            for n in 1.. {
                if power.is_subset(set) {
                    return Ok(Some(n));
                }
                if seen.insert(power.clone(), n).is_some() {
                    return Ok(None);
                }
                power = ring.hset_product(&power, &single)?;
            }
            unreachable!()
        }
    }
}

pub fn radical(ring: &Ring, ideal: &Ideal) -> Result<RadicalResult> {
    same_family(ring, ideal)?;
    match ideal {
        Ideal::Principal(0) => Ok(RadicalResult { ideal: Ideal::Principal(0), certificates: vec![(0, 1)] }),
        Ideal::Principal(m) => {
            let primes = arith::factorize(*m);
            let mus = multiplier_valuations(ring, &primes);
            let r: Element = primes.iter().zip(&mus).filter(|(_, &mu)| mu == 0).map(|(&(p, _), _)| p).product();
            debug_assert_eq!(m % r, 0, "radical generator must divide the ideal generator");
            let mut certificates = Vec::new();
            for x in [0, r, 2 * r] {
                let n = radical_exponent(ring, ideal, x)?
                    .expect("multiples of the radical generator lie in the radical");
                certificates.push((x, n));
            }
            Ok(RadicalResult { ideal: Ideal::multiple(r), certificates })
        }
        Ideal::Explicit(_) => {
            let mut members = ElementSet::new();
            let mut certificates = Vec::new();
            for x in ring.elements().ok_or(Error::FamilyMismatch)? {
                if let Some(n) = radical_exponent(ring, ideal, x)? {
                    members.insert(x);
                    certificates.push((x, n));
                }
            }
            let rad = Ideal::from_elements(ring, members.iter())?;
            Ok(RadicalResult { ideal: rad, certificates })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(ks: &[Element]) -> Ring {
        Ring::integer_scaled(ks).unwrap()
    }

    fn z6() -> Ring {
        Ring::modular_scaled(6, &[1, 2, 3, 4, 5]).unwrap()
    }

    fn coset12() -> Ring {
        Ring::modular_coset(12, &[0, 6]).unwrap()
    }

    #[test]
    fn membership() {
        let r = z(&[2, 3]);
        assert!(contains(&r, &Ideal::multiple(12), 36).unwrap());
        assert!(!contains(&r, &Ideal::multiple(12), 4).unwrap());
        assert!(contains(&r, &Ideal::multiple(0), 0).unwrap());
        assert!(!contains(&r, &Ideal::multiple(0), 5).unwrap());
        assert_eq!(contains(&z6(), &Ideal::multiple(2), 0), Err(Error::FamilyMismatch));
    }

    #[test]
    fn hyperideal_checks() {
        assert!(is_hyperideal(&z6(), &[0].into()).unwrap().holds());
        assert!(is_hyperideal(&z6(), &[0, 2, 4].into()).unwrap().holds());
        let v = is_hyperideal(&coset12(), &[0, 4, 8].into()).unwrap();
        assert_eq!(
            v,
            Verdict::Fails(Witness::Absorption { r: 1, x: 4, product: [4, 10].into() })
        );
        let v = is_hyperideal(&z6(), &[0, 1].into()).unwrap();
        assert!(matches!(v, Verdict::Fails(Witness::Difference { .. })));
        assert_eq!(is_hyperideal(&z6(), &ElementSet::new()), Err(Error::EmptyOperand));
    }

    #[test]
    fn principal_arithmetic() {
        let r = z(&[2, 3]);
        let i = Ideal::multiple(12);
        let j = Ideal::multiple(20);
        assert_eq!(intersect(&r, &i, &j).unwrap(), Ideal::multiple(60));
        assert_eq!(sum(&r, &i, &j).unwrap(), Ideal::multiple(4));
        assert_eq!(intersect(&r, &Ideal::multiple(6), &Ideal::multiple(10)).unwrap(), Ideal::multiple(30));
        assert_eq!(product(&r, &i, &j).unwrap(), Ideal::multiple(240));
        assert_eq!(product(&z(&[2, 4]), &Ideal::multiple(3), &Ideal::multiple(5)).unwrap(), Ideal::multiple(30));
        assert_eq!(product(&r, &i, &Ideal::multiple(0)).unwrap(), Ideal::multiple(0));
        assert_eq!(Ideal::multiple(-7), Ideal::Principal(7));
    }

    #[test]
    fn explicit_arithmetic() {
        let r = z6();
        let evens = Ideal::from_elements(&r, [0, 2, 4]).unwrap();
        let threes = Ideal::from_elements(&r, [0, 3]).unwrap();
        assert_eq!(sum(&r, &evens, &threes).unwrap(), Ideal::Explicit((0..6).collect()));
        assert_eq!(intersect(&r, &evens, &threes).unwrap(), Ideal::Explicit([0].into()));
        // 2∘3 = {0}: the product of the two is the zero ideal
        assert_eq!(product(&r, &evens, &threes).unwrap(), Ideal::Explicit([0].into()));
        assert_eq!(product(&r, &evens, &evens).unwrap(), evens);
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(&z(&[2, 3]), &Ideal::multiple(12)).unwrap().ideal, Ideal::multiple(6));
        assert_eq!(radical(&z(&[2, 4]), &Ideal::multiple(120)).unwrap().ideal, Ideal::multiple(15));
        assert_eq!(radical(&z(&[2, 3]), &Ideal::multiple(0)).unwrap().ideal, Ideal::multiple(0));
        assert_eq!(radical(&z(&[2, 3]), &Ideal::multiple(1)).unwrap().ideal, Ideal::multiple(1));
        let zero = Ideal::Explicit([0].into());
        let rad = radical(&z6(), &zero).unwrap();
        assert_eq!(rad.ideal, zero);
        assert!(rad.verify(&z6(), &zero).unwrap());
        let r = z(&[2, 4]);
        let i = Ideal::multiple(120);
        assert!(radical(&r, &i).unwrap().verify(&r, &i).unwrap());
    }

    #[test]
    fn radical_exponents() {
        let r = z(&[2, 4]);
        // the 2-part of 120 must come from the multipliers: 2³·15⁴ ∈ 120Z, 2²·15³ ∉ 120Z
        assert_eq!(radical_exponent(&r, &Ideal::multiple(120), 15).unwrap(), Some(4));
        assert_eq!(radical_exponent(&r, &Ideal::multiple(120), 5).unwrap(), None);
        assert_eq!(radical_exponent(&z6(), &Ideal::Explicit([0].into()), 2).unwrap(), None);
    }

    #[test]
    fn principal_ideals() {
        assert_eq!(principal(&z(&[2, 3]), 5).unwrap(), Ideal::multiple(5));
        assert_eq!(principal(&z(&[2, 3]), -5).unwrap(), Ideal::multiple(5));
        assert_eq!(principal(&z6(), 2).unwrap(), Ideal::Explicit([0, 2, 4].into()));
        assert_eq!(principal(&coset12(), 4).unwrap(), Ideal::Explicit([0, 2, 4, 6, 8, 10].into()));
        for r in [z(&[2, 3]), z6(), coset12()] {
            assert_eq!(principal(&r, 0).unwrap(), zero_ideal(&r));
        }
    }

    #[test]
    fn zero_ideals() {
        assert_eq!(zero_ideal(&z(&[2, 3])), Ideal::multiple(0));
        assert_eq!(zero_ideal(&coset12()), Ideal::Explicit([0, 6].into()));
        assert_eq!(zero_ideal(&z6()), Ideal::Explicit([0].into()));
    }

    #[test]
    fn lattices() {
        let l = lattice(&coset12()).unwrap();
        let rendered: Vec<String> = l.iter().map(|i| i.to_string()).collect();
        assert_eq!(rendered, ["{0,6}", "{0,3,6,9}", "{0,2,4,6,8,10}", "{0,1,2,3,4,5,6,7,8,9,10,11}"]);
        assert_eq!(lattice(&z6()).unwrap().len(), 4);
    }

    #[test]
    fn ideal_spec_parsing() {
        assert_eq!("12Z".parse::<IdealSpec>().unwrap(), IdealSpec::Principal { principal: 12 });
        assert_eq!(r#"{"principal":12}"#.parse::<IdealSpec>().unwrap(), IdealSpec::Principal { principal: 12 });
        assert_eq!("{0,2,4}".parse::<IdealSpec>().unwrap(), IdealSpec::Elements { elements: vec![0, 2, 4] });
        assert!("twelve".parse::<IdealSpec>().is_err());
        let r = z6();
        let i = Ideal::from_spec(&r, &"{0,2,4}".parse().unwrap()).unwrap();
        assert_eq!(i.to_string().parse::<IdealSpec>().unwrap(), i.spec());
        assert!(Ideal::from_spec(&r, &"{0,1}".parse().unwrap()).is_err());
    }
}
