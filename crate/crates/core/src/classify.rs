//! Decision procedures for the ideal classes, with witnesses.
//!
//! For `mZ` in the integer family every condition is a divisibility by `m`, and
//! whether `m | k·x·y` depends on `x` only through `gcd(x, m)`. Quantifiers
//! therefore range over the classes `gcd(x, m)`, represented by `0` and the
//! proper divisors of `m`. Each representative is the least nonnegative member
//! of its class, so scanning representatives in ascending order yields the
//! same lexicographically least witness as scanning all residues.
//!
//! Modular carriers are small and are enumerated outright.

use std::collections::HashSet;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::ideal::{self, Ideal, RadicalResult};
use crate::ring::{Element, Ring};
use crate::set::ElementSet;
use crate::trace::ProductTrace;
use crate::verdict::{Factored, Predicate, Verdict, Witness};

/// Finite quotient of the quantifier domain for one ideal.
struct Model<'a> {
    ring: &'a Ring,
    reps: Vec<Element>,
    in_ideal: Vec<bool>,
    in_rad: Vec<bool>,
    /// Classes of the elements of `reps[i]∘reps[j]`, row-major.
    prod: Vec<Vec<usize>>,
    ideal_pair: Vec<bool>,
    rad_pair: Vec<bool>,
}

impl<'a> Model<'a> {
    fn build(ring: &'a Ring, ideal: &Ideal, rad: &Ideal) -> Result<Model<'a>> {
        let reps: Vec<Element> = match (ideal, ring.modulus()) {
            (Ideal::Principal(0), None) => vec![0, 1],
            (Ideal::Principal(m), None) => {
                let mut v = vec![0];
                v.extend(arith::divisors(*m).into_iter().filter(|d| d != m));
                v
            }
            (Ideal::Explicit(_), Some(n)) => (0..n).collect(),
            _ => return Err(Error::FamilyMismatch),
        };
        let n = reps.len();
        let class_of = |t: Element| -> usize {
            match ideal {
                Ideal::Principal(0) => usize::from(t != 0),
                Ideal::Principal(m) => {
                    let g = arith::gcd(t, *m);
                    if g == *m {
                        0
                    } else {
                        reps.binary_search(&g).expect("gcd with m is a divisor of m")
                    }
                }
                Ideal::Explicit(_) => t as usize,
            }
        };
        let mut in_ideal = Vec::with_capacity(n);
        let mut in_rad = Vec::with_capacity(n);
        for &x in &reps {
            in_ideal.push(ideal::contains(ring, ideal, x)?);
            in_rad.push(ideal::contains(ring, rad, x)?);
        }
        let mut prod = Vec::with_capacity(n * n);
        let mut ideal_pair = Vec::with_capacity(n * n);
        let mut rad_pair = Vec::with_capacity(n * n);
        for &x in &reps {
            for &y in &reps {
                let mut cls: Vec<usize> = ring.hmul(x, y)?.iter().map(class_of).collect();
                cls.sort_unstable();
                cls.dedup();
                ideal_pair.push(cls.iter().all(|&c| in_ideal[c]));
                rad_pair.push(cls.iter().all(|&c| in_rad[c]));
                prod.push(cls);
            }
        }
        Ok(Model { ring, reps, in_ideal, in_rad, prod, ideal_pair, rad_pair })
    }

    fn n(&self) -> usize {
        self.reps.len()
    }

    /// `reps[i]∘reps[j]∘reps[k] ⊆ I`.
    fn triple_in(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.n();
        self.prod[i * n + j].iter().all(|&t| self.ideal_pair[t * n + k])
    }

    fn pair_witness(&self, i: usize, j: usize) -> Result<Verdict> {
        let (x, y) = (self.reps[i], self.reps[j]);
        Ok(Verdict::Fails(Witness::Pair { x, y, product: self.ring.hmul(x, y)? }))
    }

    fn triple_witness(&self, i: usize, j: usize, k: usize) -> Result<Verdict> {
        let (a, b, c) = (self.reps[i], self.reps[j], self.reps[k]);
        let r = self.ring;
        let ab = r.hmul(a, b)?;
        let abc = r.hset_product(&ab, &ElementSet::singleton(c))?;
        Ok(Verdict::Fails(Witness::Triple { a, b, c, abc, ab, bc: r.hmul(b, c)?, ac: r.hmul(a, c)? }))
    }

    fn prime(&self, primary: bool) -> Result<Verdict> {
        let n = self.n();
        for i in 0..n {
            if self.in_ideal[i] {
                continue;
            }
            for j in 0..n {
                let escapes = if primary { !self.in_rad[j] } else { !self.in_ideal[j] };
                if escapes && self.ideal_pair[i * n + j] {
                    return self.pair_witness(i, j);
                }
            }
        }
        Ok(Verdict::Holds)
    }

    fn two_absorbing(&self, primary: bool) -> Result<Verdict> {
        let n = self.n();
        let side = if primary { &self.rad_pair } else { &self.ideal_pair };
        for i in 0..n {
            for j in 0..n {
                if self.ideal_pair[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if side[j * n + k] || side[i * n + k] {
                        continue;
                    }
                    if self.triple_in(i, j, k) {
                        return self.triple_witness(i, j, k);
                    }
                }
            }
        }
        Ok(Verdict::Holds)
    }
}

fn meets_and_escapes(ring: &Ring, ideal: &Ideal, set: &ElementSet) -> Result<(ElementSet, bool)> {
    let mut inside = ElementSet::new();
    let mut escapes = false;
    for x in set {
        if ideal::contains(ring, ideal, x)? {
            inside.insert(x);
        } else {
            escapes = true;
        }
    }
    Ok((inside, escapes))
}

fn factored(ring: &Ring, factors: Vec<Element>) -> Result<Factored> {
    let mut product = ElementSet::singleton(factors[0]);
    for &f in &factors[1..] {
        product = ring.hset_product(&product, &ElementSet::singleton(f))?;
    }
    Ok(Factored { factors, product })
}

pub fn is_prime(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    classify(ring, ideal, Predicate::Prime)
}

pub fn is_primary(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    classify(ring, ideal, Predicate::Primary)
}

pub fn is_2absorbing(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    classify(ring, ideal, Predicate::TwoAbsorbing)
}

pub fn is_2absorbing_primary(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    classify(ring, ideal, Predicate::TwoAbsorbingPrimary)
}

pub fn is_c_ideal(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    classify(ring, ideal, Predicate::CIdeal)
}

pub fn is_cu_ideal(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    classify(ring, ideal, Predicate::CuIdeal)
}

pub fn classify(ring: &Ring, ideal: &Ideal, pred: Predicate) -> Result<Verdict> {
    match pred {
        Predicate::CIdeal => return c_ideal(ring, ideal),
        Predicate::CuIdeal => return cu_ideal(ring, ideal),
        _ => {}
    }
    if !ideal::is_proper(ring, ideal)? {
        return Ok(Verdict::NotProper);
    }
    let rad = ideal::radical(ring, ideal)?.ideal;
    let model = Model::build(ring, ideal, &rad)?;
    match pred {
        Predicate::Prime => model.prime(false),
        Predicate::Primary => model.prime(true),
        Predicate::TwoAbsorbing => model.two_absorbing(false),
        Predicate::TwoAbsorbingPrimary => model.two_absorbing(true),
        Predicate::CIdeal | Predicate::CuIdeal => unreachable!(),
    }
}

/// C-ideal: every product of two or more elements that meets I lies in I.
fn c_ideal(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    match ideal {
        Ideal::Principal(m) if *m <= 1 => {
            ideal::contains(ring, ideal, 0)?;
            Ok(Verdict::Holds)
        }
        Ideal::Principal(m) => {
            let ks = ring.multipliers().ok_or(Error::FamilyMismatch)?;
            let trace = ProductTrace::new(ks, *m);
            for (t, s) in trace.sets.iter().enumerate() {
                for r in 0..*m {
                    let (mut zero, mut other) = (false, false);
                    for k in s {
                        if k * r % m == 0 {
                            zero = true;
                        } else {
                            other = true;
                        }
                    }
                    if zero && other {
                        let mut factors = vec![r];
                        factors.extend(std::iter::repeat(1).take(t + 1));
                        let term = factored(ring, factors)?;
                        let (inside, _) = meets_and_escapes(ring, ideal, &term.product)?;
                        return Ok(Verdict::Fails(Witness::Product { term, inside }));
                    }
                }
            }
            Ok(Verdict::Holds)
        }
        Ideal::Explicit(_) => {
            let carrier: Vec<Element> = ring.elements().ok_or(Error::FamilyMismatch)?.collect();
            let mut seen: HashSet<ElementSet> = HashSet::new();
            let mut level: Vec<(ElementSet, Vec<Element>)> = Vec::new();
            for &a in &carrier {
                for &b in &carrier {
                    let p = ring.hmul(a, b)?;
                    if seen.insert(p.clone()) {
                        level.push((p, vec![a, b]));
                    }
                }
            }
            while !level.is_empty() {
                for (set, factors) in &level {
                    let (inside, escapes) = meets_and_escapes(ring, ideal, set)?;
                    if !inside.is_empty() && escapes {
                        let term = Factored { factors: factors.clone(), product: set.clone() };
                        return Ok(Verdict::Fails(Witness::Product { term, inside }));
                    }
                }
                let mut next = Vec::new();
                for (set, factors) in &level {
                    for &c in &carrier {
                        let p = ring.hset_product(set, &ElementSet::singleton(c))?;
                        if seen.insert(p.clone()) {
                            let mut f = factors.clone();
                            f.push(c);
                            next.push((p, f));
                        }
                    }
                }
                level = next;
            }
            Ok(Verdict::Holds)
        }
    }
}

/// C_u-ideal. `0∘0` always meets I, so any product escaping I can be paired
/// with it; hence I is a C_u-ideal exactly when every pair product lies in I.
fn cu_ideal(ring: &Ring, ideal: &Ideal) -> Result<Verdict> {
    let failing = match ideal {
        Ideal::Principal(1) => None,
        Ideal::Principal(m) => {
            let g = arith::gcd_all(ring.multipliers().ok_or(Error::FamilyMismatch)?.iter().copied());
            // 1∘1 = K is the first pair product that can escape mZ
            (*m == 0 || g % m != 0).then_some(((1, 1), (*m, 1)))
        }
        Ideal::Explicit(_) => {
            let carrier: Vec<Element> = ring.elements().ok_or(Error::FamilyMismatch)?.collect();
            let mut found = None;
            'outer: for &a in &carrier {
                for &b in &carrier {
                    if !ideal::contains_set(ring, ideal, &ring.hmul(a, b)?)? {
                        found = Some(((a, b), (0, 0)));
                        break 'outer;
                    }
                }
            }
            found
        }
    };
    let Some(((a, b), partner)) = failing else {
        return Ok(Verdict::Holds);
    };
    let first = factored(ring, vec![a, b])?;
    let (inside, _) = meets_and_escapes(ring, ideal, &first.product)?;
    let terms = if inside.is_empty() {
        vec![first, factored(ring, vec![partner.0, partner.1])?]
    } else {
        vec![first]
    };
    let union = terms.iter().fold(ElementSet::new(), |acc, t| acc.union(&t.product));
    Ok(Verdict::Fails(Witness::Union { terms, union }))
}

/// Inclusion-minimal primes containing `ideal`.
pub fn minimal_primes(ring: &Ring, ideal: &Ideal) -> Result<Vec<Ideal>> {
    let candidates: Vec<Ideal> = match ideal {
        Ideal::Principal(0) => vec![Ideal::Principal(0)],
        Ideal::Principal(m) => arith::divisors(*m)
            .into_iter()
            .filter(|&d| d >= 2)
            .map(Ideal::Principal)
            .collect(),
        Ideal::Explicit(_) => {
            let mut v = Vec::new();
            for j in ideal::lattice(ring)? {
                if ideal::is_subideal(ring, ideal, &j)? {
                    v.push(j);
                }
            }
            v
        }
    };
    let mut primes = Vec::new();
    for p in candidates {
        if is_prime(ring, &p)?.holds() {
            primes.push(p);
        }
    }
    let mut out = Vec::new();
    for p in &primes {
        let mut minimal = true;
        for q in &primes {
            if q != p && ideal::is_subideal(ring, q, p)? {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// Every classification of one ideal.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub ring: String,
    pub ideal: String,
    pub proper: bool,
    pub prime: Verdict,
    pub primary: Verdict,
    #[serde(rename = "2a")]
    pub two_absorbing: Verdict,
    #[serde(rename = "2ap")]
    pub two_absorbing_primary: Verdict,
    pub c: Verdict,
    pub cu: Verdict,
    pub radical: String,
    pub min_primes: Vec<String>,
}

impl Classification {
    pub fn verdict(&self, pred: Predicate) -> &Verdict {
        match pred {
            Predicate::Prime => &self.prime,
            Predicate::Primary => &self.primary,
            Predicate::TwoAbsorbing => &self.two_absorbing,
            Predicate::TwoAbsorbingPrimary => &self.two_absorbing_primary,
            Predicate::CIdeal => &self.c,
            Predicate::CuIdeal => &self.cu,
        }
    }
}

pub fn classify_all(ring: &Ring, ideal: &Ideal) -> Result<Classification> {
    let v = |p| classify(ring, ideal, p);
    let RadicalResult { ideal: rad, .. } = ideal::radical(ring, ideal)?;
    Ok(Classification {
        ring: ring.to_string(),
        ideal: ideal.to_string(),
        proper: ideal::is_proper(ring, ideal)?,
        prime: v(Predicate::Prime)?,
        primary: v(Predicate::Primary)?,
        two_absorbing: v(Predicate::TwoAbsorbing)?,
        two_absorbing_primary: v(Predicate::TwoAbsorbingPrimary)?,
        c: v(Predicate::CIdeal)?,
        cu: v(Predicate::CuIdeal)?,
        radical: rad.to_string(),
        min_primes: minimal_primes(ring, ideal)?.iter().map(|p| p.to_string()).collect(),
    })
}

/// Re-checks a failure witness by direct evaluation with ring operations,
/// the radical, and membership. Returns `false` if the witness is malformed,
/// inconsistent, or does not refute `pred`.
pub fn recheck(ring: &Ring, ideal: &Ideal, pred: Predicate, witness: &Witness) -> Result<bool> {
    let inside = |s: &ElementSet| ideal::contains_set(ring, ideal, s);
    let rad = ideal::radical(ring, ideal)?.ideal;
    let in_rad = |s: &ElementSet| ideal::contains_set(ring, &rad, s);
    let meets_escapes = |s: &ElementSet| -> Result<bool> {
        let (hit, escapes) = meets_and_escapes(ring, ideal, s)?;
        Ok(!hit.is_empty() && escapes)
    };
    let product_ok = |t: &Factored| -> Result<bool> {
        Ok(t.factors.len() >= 2 && factored(ring, t.factors.clone())?.product == t.product)
    };
    Ok(match (pred, witness) {
        (Predicate::Prime | Predicate::Primary, Witness::Pair { x, y, product }) => {
            let y_escapes = if pred == Predicate::Prime {
                !ideal::contains(ring, ideal, *y)?
            } else {
                !ideal::contains(ring, &rad, *y)?
            };
            ring.hmul(*x, *y)? == *product
                && inside(product)?
                && !ideal::contains(ring, ideal, *x)?
                && y_escapes
        }
        (
            Predicate::TwoAbsorbing | Predicate::TwoAbsorbingPrimary,
            Witness::Triple { a, b, c, abc, ab, bc, ac },
        ) => {
            let side = |s: &ElementSet| {
                if pred == Predicate::TwoAbsorbing {
                    inside(s)
                } else {
                    in_rad(s)
                }
            };
            ring.hmul(*a, *b)? == *ab
                && ring.hmul(*b, *c)? == *bc
                && ring.hmul(*a, *c)? == *ac
                && ring.hset_product(ab, &ElementSet::singleton(*c))? == *abc
                && inside(abc)?
                && !inside(ab)?
                && !side(bc)?
                && !side(ac)?
        }
        (Predicate::CIdeal, Witness::Product { term, inside: hit }) => {
            product_ok(term)?
                && meets_escapes(&term.product)?
                && meets_and_escapes(ring, ideal, &term.product)?.0 == *hit
        }
        (Predicate::CuIdeal, Witness::Union { terms, union }) => {
            let mut all = ElementSet::new();
            let mut ok = !terms.is_empty();
            for t in terms {
                ok &= product_ok(t)?;
                all = all.union(&t.product);
            }
            ok && all == *union && meets_escapes(union)?
        }
        _ => false,
    })
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

    fn d(m: Element) -> Ideal {
        Ideal::multiple(m)
    }

    fn pair(v: &Verdict) -> (Element, Element) {
        match v.witness() {
            Some(Witness::Pair { x, y, .. }) => (*x, *y),
            other => panic!("expected a pair witness, got {other:?}"),
        }
    }

    fn triple(v: &Verdict) -> (Element, Element, Element) {
        match v.witness() {
            Some(Witness::Triple { a, b, c, .. }) => (*a, *b, *c),
            other => panic!("expected a triple witness, got {other:?}"),
        }
    }

    #[test]
    fn prime_ideals() {
        assert!(is_prime(&z(&[2, 3]), &d(2)).unwrap().holds());
        assert!(is_prime(&z(&[2, 3]), &d(3)).unwrap().holds());
        let v = is_prime(&z(&[2, 4]), &d(15)).unwrap();
        assert_eq!(pair(&v), (3, 5));
        assert_eq!(v.witness().unwrap(), &Witness::Pair { x: 3, y: 5, product: [30, 60].into() });
        assert!(!is_prime(&z6(), &Ideal::Explicit([0].into())).unwrap().holds());
        assert_eq!(is_prime(&z(&[2, 3]), &d(1)).unwrap(), Verdict::NotProper);
        assert_eq!(is_prime(&z6(), &Ideal::Explicit((0..6).collect())).unwrap(), Verdict::NotProper);
        assert!(is_prime(&z(&[2, 3]), &d(0)).unwrap().holds());
    }

    #[test]
    fn primary_ideals() {
        let v = is_primary(&z(&[2, 3]), &d(12)).unwrap();
        assert_eq!(pair(&v), (3, 4));
        let v = is_primary(&z6(), &Ideal::Explicit([0].into())).unwrap();
        assert_eq!(pair(&v), (2, 3));
        assert!(is_primary(&z(&[2, 4]), &d(3)).unwrap().holds());
    }

    #[test]
    fn two_absorbing_ideals() {
        assert!(is_2absorbing(&z(&[2, 4]), &d(15)).unwrap().holds());
        assert!(is_2absorbing(&z6(), &Ideal::Explicit([0].into())).unwrap().holds());
        assert!(!is_2absorbing(&z(&[2, 3]), &d(12)).unwrap().holds());
        assert!(is_2absorbing_primary(&z(&[2, 3]), &d(12)).unwrap().holds());
        assert_eq!(triple(&is_2absorbing_primary(&z(&[2, 3]), &d(30)).unwrap()), (2, 3, 5));
        assert_eq!(triple(&is_2absorbing_primary(&z(&[2, 4]), &d(105)).unwrap()), (3, 5, 7));
        assert_eq!(triple(&is_2absorbing_primary(&z(&[2, 4]), &d(120)).unwrap()), (3, 5, 2));
    }

    #[test]
    fn c_ideals() {
        assert!(is_c_ideal(&z(&[2, 3]), &d(5)).unwrap().holds());
        assert!(is_c_ideal(&z(&[2, 4]), &d(3)).unwrap().holds());
        let v = is_c_ideal(&z(&[2, 3]), &d(12)).unwrap();
        let Some(Witness::Product { term, inside }) = v.witness() else { panic!() };
        assert_eq!(term.factors, vec![4, 1]);
        assert_eq!(term.product, [8, 12].into());
        assert_eq!(inside, &ElementSet::from([12]));
        assert!(recheck(&z(&[2, 3]), &d(12), Predicate::CIdeal, v.witness().unwrap()).unwrap());
        assert!(is_c_ideal(&z(&[2, 3]), &d(0)).unwrap().holds());
        assert!(is_c_ideal(&z(&[2, 3]), &d(1)).unwrap().holds());
    }

    #[test]
    fn c_ideal_modular_bfs() {
        let r = Ring::modular_coset(12, &[0, 6]).unwrap();
        let i = Ideal::Explicit([0, 3, 6, 9].into());
        assert!(is_c_ideal(&r, &i).unwrap().holds());
        let v = is_c_ideal(&z6(), &Ideal::Explicit([0].into())).unwrap();
        assert!(recheck(&z6(), &Ideal::Explicit([0].into()), Predicate::CIdeal, v.witness().unwrap()).unwrap());
    }

    #[test]
    fn cu_ideals() {
        assert!(is_cu_ideal(&z(&[2, 4]), &d(2)).unwrap().holds());
        let v = is_cu_ideal(&z(&[2, 3]), &d(5)).unwrap();
        let Some(Witness::Union { terms, union }) = v.witness() else { panic!() };
        assert_eq!(union, &ElementSet::from([2, 3, 10, 15]));
        assert_eq!(terms[1].factors, vec![5, 1]);
        let v = is_cu_ideal(&z(&[2, 4]), &d(4)).unwrap();
        let Some(Witness::Union { terms, .. }) = v.witness() else { panic!() };
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0].product, [2, 4].into());
    }

    #[test]
    fn minimal_prime_sets() {
        let show = |v: Vec<Ideal>| v.iter().map(|i| i.to_string()).collect::<Vec<_>>();
        assert_eq!(show(minimal_primes(&z(&[2, 3]), &d(12)).unwrap()), ["2Z", "3Z"]);
        assert_eq!(show(minimal_primes(&z(&[2, 3]), &d(2)).unwrap()), ["2Z"]);
        assert_eq!(show(minimal_primes(&z(&[2, 4]), &d(105)).unwrap()), ["3Z", "5Z", "7Z"]);
        assert_eq!(show(minimal_primes(&z(&[2, 4]), &d(0)).unwrap()), ["0Z"]);
        assert!(minimal_primes(&z(&[2, 4]), &d(1)).unwrap().is_empty());
        assert_eq!(show(minimal_primes(&z6(), &Ideal::Explicit([0].into())).unwrap()), ["{0,3}", "{0,2,4}"]);
    }

    #[test]
    fn every_failure_rechecks() {
        let rings = [z(&[2, 3]), z(&[2, 4]), z(&[2, 3, 5])];
        for r in &rings {
            for m in 0..=40 {
                let i = d(m);
                for p in Predicate::ALL {
                    if let Verdict::Fails(w) = classify(r, &i, p).unwrap() {
                        assert!(recheck(r, &i, p, &w).unwrap(), "{r} {i} {p} {w}");
                    }
                }
            }
        }
        for r in [z6(), Ring::modular_coset(12, &[0, 6]).unwrap(), Ring::modular_scaled(8, &[1, 3]).unwrap()] {
            for i in ideal::lattice(&r).unwrap() {
                for p in Predicate::ALL {
                    if let Verdict::Fails(w) = classify(&r, &i, p).unwrap() {
                        assert!(recheck(&r, &i, p, &w).unwrap(), "{r} {i} {p} {w}");
                    }
                }
            }
        }
    }

    #[test]
    fn stated_witnesses_recheck() {
        let w = Witness::Pair { x: 4, y: 3, product: [24, 36].into() };
        assert!(recheck(&z(&[2, 3]), &d(12), Predicate::Primary, &w).unwrap());
        assert!(!recheck(&z(&[2, 3]), &d(12), Predicate::Prime, &Witness::Pair { x: 4, y: 3, product: [0].into() }).unwrap());
        let r = z(&[2, 4]);
        let w = Witness::Triple {
            a: 6,
            b: 5,
            c: 1,
            abc: [120, 240, 480].into(),
            ab: [60, 120].into(),
            bc: [10, 20].into(),
            ac: [12, 24].into(),
        };
        assert!(recheck(&r, &d(120), Predicate::TwoAbsorbingPrimary, &w).unwrap());
        assert!(!recheck(&r, &d(120), Predicate::TwoAbsorbing, &Witness::Pair { x: 1, y: 1, product: [2, 4].into() }).unwrap());
    }

    #[test]
    fn classification_record() {
        let c = classify_all(&z(&[2, 3]), &d(12)).unwrap();
        assert!(!c.prime.holds() && !c.primary.holds() && !c.two_absorbing.holds());
        assert!(c.two_absorbing_primary.holds());
        assert_eq!(c.radical, "6Z");
        assert_eq!(c.min_primes, ["2Z", "3Z"]);
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["2ap"]["holds"], true);
        assert_eq!(json["prime"]["witness"]["kind"], "pair");
    }
}
