//! Executable registry of the hyperideal laws.
//!
//! Each law is checked over a grid of rings, ideals, elements and
//! homomorphisms. Premises are re-derived by the classifier on every instance;
//! the conclusion is asserted only where they hold. Four laws carry a
//! companion search for instances showing that a converse or an extension
//! fails.

use std::collections::HashMap;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{self, minimal_primes};
use crate::error::{Error, Result};
use crate::ideal::{self, Ideal};
use crate::morphism::GoodHom;
use crate::ring::{Element, Ring};
use crate::set::ElementSet;
use crate::verdict::{Predicate, Verdict};

use Predicate::{CIdeal, CuIdeal, Prime, Primary, TwoAbsorbing, TwoAbsorbingPrimary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    /// Requires a strongly distributive ring; runs on coset rings only.
    pub strongly_distributive_only: bool,
    pub has_companion: bool,
}

const fn law(id: &'static str, statement: &'static str) -> Law {
    Law { id, statement, strongly_distributive_only: false, has_companion: false }
}

const fn with_companion(id: &'static str, statement: &'static str) -> Law {
    Law { id, statement, strongly_distributive_only: false, has_companion: true }
}

const fn coset_only(id: &'static str, statement: &'static str) -> Law {
    Law { id, statement, strongly_distributive_only: true, has_companion: false }
}

pub const LAWS: [Law; 18] = [
    law("L2.1", "P prime, a ∉ P, a∘J ⊆ P ⟹ J ⊆ P"),
    law("L2.2", "Q primary, a ∉ Q, a∘J ⊆ Q ⟹ J ⊆ √Q"),
    law("P2.3", "P prime, A∘B ⊆ P ⟹ A ⊆ P or B ⊆ P"),
    law("P2.5", "P prime ⟹ the minimal primes over P are exactly {P}"),
    law("P2.7", "√(I₁⋯Iₙ) = √(I₁∩⋯∩Iₙ) = √I₁∩⋯∩√Iₙ, and √I ⊆ √√I"),
    law("P2.8", "f onto and good ⟹ f(√I) ⊆ √f(I)"),
    law("P2.9", "f good ⟹ √f⁻¹(J) = f⁻¹(√J)"),
    law("T2.13", "primality passes to f(I) for a C_u ideal I ⊇ Ker f, and to f⁻¹(J)"),
    law("T2.14", "primary passes to f(I) for a C_u ideal I ⊇ Ker f, and to f⁻¹(J)"),
    with_companion("T3.5", "√I prime ⟹ I 2-absorbing primary"),
    with_companion("T3.8", "2-absorbing primary I₁,…,Iₙ with common radical P ⟹ ⋂Iᵢ is 2-absorbing primary with radical P"),
    with_companion("L3.10", "P₁, P₂ prime ⟹ P₁∩P₂ 2-absorbing"),
    with_companion("T3.12", "primary C-ideals I₁, I₂ ⟹ I₁∩I₂ and I₁I₂ 2-absorbing primary"),
    law("T3.14", "J 2-absorbing primary ⟹ f⁻¹(J) 2-absorbing primary"),
    law("T3.15", "I C_u and 2-absorbing primary with Ker f ⊆ I, f onto ⟹ f(I) 2-absorbing primary"),
    law("C3.16", "I C_u and 2-absorbing primary, J ⊆ I ⟹ I/J 2-absorbing primary in R/J"),
    coset_only("L3.17", "I 2-absorbing primary, a∘b∘J ⊆ I, a∘b ⊄ I ⟹ a∘J ⊆ √I or b∘J ⊆ √I"),
    coset_only("T3.18", "I 2-absorbing primary ⟺ I₁I₂I₃ ⊆ I implies I₁I₂ ⊆ I or I₂I₃ ⊆ √I or I₁I₃ ⊆ √I over all hyperideals"),
];

pub fn list_laws() -> &'static [Law] {
    &LAWS
}

pub fn lookup(id: &str) -> Result<&'static Law> {
    LAWS.iter()
        .find(|l| l.id.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| Error::UnknownLaw(id.to_string()))
}

/// The instance space a law is checked over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub rings: Vec<Ring>,
    /// Integer ideals `dZ` with `0 ≤ d ≤ dmax`.
    pub dmax: Element,
    /// Projections `Z → Z/mZ` with `2 ≤ m ≤ mmax`.
    pub mmax: Element,
    /// Integer elements are drawn from `[−window, window]`.
    pub window: Element,
    /// Random draws per instance where a law quantifies over subsets.
    pub samples: usize,
    pub seed: u64,
    /// Bound on generators for triple searches.
    pub companion_dmax: Element,
}

pub const DEFAULT_NMAX: Element = 16;

pub fn default_rings(nmax: Element) -> Vec<Ring> {
    let mut rings: Vec<Ring> = [&[2, 3][..], &[2, 4], &[2, 3, 5]]
        .iter()
        .map(|ks| Ring::integer_scaled(ks).expect("valid multipliers"))
        .collect();
    let scaled: [(Element, &[Element]); 7] = [
        (4, &[0, 2]),
        (6, &[1, 2, 3, 4, 5]),
        (8, &[1, 3]),
        (9, &[1, 2]),
        (10, &[1, 3, 7, 9]),
        (12, &[2, 3]),
        (16, &[2, 4]),
    ];
    let cosets: [(Element, &[Element]); 6] = [
        (8, &[0, 4]),
        (9, &[0, 3, 6]),
        (10, &[0, 5]),
        (12, &[0, 6]),
        (12, &[0, 4, 8]),
        (16, &[0, 8]),
    ];
    for (n, ks) in scaled.into_iter().filter(|(n, _)| *n <= nmax) {
        rings.push(Ring::modular_scaled(n, ks).expect("valid modular ring"));
    }
    for (n, js) in cosets.into_iter().filter(|(n, _)| *n <= nmax) {
        rings.push(Ring::modular_coset(n, js).expect("valid coset ring"));
    }
    rings
}

impl Default for Grid {
    fn default() -> Grid {
        Grid {
            rings: default_rings(DEFAULT_NMAX),
            dmax: 60,
            mmax: 24,
            window: 30,
            samples: 200,
            seed: 0,
            companion_dmax: 15,
        }
    }
}

#[derive(Serialize)]
struct GridSummary {
    rings: Vec<String>,
    dmax: Element,
    mmax: Element,
    window: Element,
    samples: usize,
    seed: u64,
    companion_dmax: Element,
}

impl Serialize for Grid {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GridSummary {
            rings: self.rings.iter().map(|r| r.to_string()).collect(),
            dmax: self.dmax,
            mmax: self.mmax,
            window: self.window,
            samples: self.samples,
            seed: self.seed,
            companion_dmax: self.companion_dmax,
        }
        .serialize(s)
    }
}

impl Grid {
    pub fn with_rings(rings: Vec<Ring>) -> Grid {
        Grid { rings, ..Grid::default() }
    }

    /// Applies `key=value` settings separated by commas: `dmax`, `nmax`,
    /// `mmax`, `window`, `samples`, `seed`, `cdmax`. `nmax` drops modular
    /// rings with a larger modulus.
    pub fn apply_params(&mut self, params: &str) -> Result<()> {
        for part in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Spec(format!("grid setting `{part}` is not key=value")))?;
            let num: i64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Spec(format!("grid setting `{part}` needs an integer")))?;
            if num < 0 {
                return Err(Error::Spec(format!("grid setting `{part}` must be nonnegative")));
            }
            match key.trim() {
                "dmax" => self.dmax = num,
                "mmax" => self.mmax = num,
                "window" => self.window = num,
                "samples" => self.samples = num as usize,
                "seed" => self.seed = num as u64,
                "cdmax" => self.companion_dmax = num,
                "nmax" => self.rings.retain(|r| r.modulus().is_none_or(|n| n <= num)),
                other => return Err(Error::Spec(format!("unknown grid setting `{other}`"))),
            }
        }
        Ok(())
    }
}

/// A premise-satisfying instance where the conclusion failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub witness: String,
}

/// A grid instance separating two properties, with the failure evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub ring: String,
    pub instance: String,
    pub witness: String,
}

/// A fixed instance a companion search is expected to reproduce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reference {
    pub instance: String,
    pub separates: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Companion {
    pub search: &'static str,
    pub total: usize,
    /// The first few separating instances in grid order.
    pub found: Vec<Separation>,
    pub reference: Reference,
}

const COMPANION_LISTED: usize = 12;

#[derive(Clone, Debug, Serialize)]
pub struct LawReport {
    pub law: &'static str,
    pub statement: &'static str,
    pub grid: Grid,
    pub instances: usize,
    pub premises_satisfied: usize,
    pub violations: Vec<Violation>,
    pub companion_found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub companion: Option<Companion>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl LawReport {
    /// No violations, and the companion search (if any) found something.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.companion_found != Some(false)
    }
}

enum Outcome {
    Vacuous,
    Holds,
    Violated(Violation),
}

fn outcome(
    premise: bool,
    instance: impl FnOnce() -> String,
    conclusion: impl FnOnce() -> Result<Option<String>>,
) -> Result<Outcome> {
    if !premise {
        return Ok(Outcome::Vacuous);
    }
    Ok(match conclusion()? {
        None => Outcome::Holds,
        Some(witness) => Outcome::Violated(Violation { instance: instance(), witness }),
    })
}

/// Memoized classifier calls shared by every law in one run.
struct Ctx<'g> {
    grid: &'g Grid,
    verdicts: Mutex<HashMap<(Ring, Ideal, Predicate), Verdict>>,
    radicals: Mutex<HashMap<(Ring, Ideal), Ideal>>,
    homs: Mutex<HashMap<Ring, Vec<GoodHom>>>,
}

impl<'g> Ctx<'g> {
    fn new(grid: &'g Grid) -> Ctx<'g> {
        Ctx {
            grid,
            verdicts: Mutex::new(HashMap::new()),
            radicals: Mutex::new(HashMap::new()),
            homs: Mutex::new(HashMap::new()),
        }
    }

    fn verdict(&self, r: &Ring, i: &Ideal, p: Predicate) -> Result<Verdict> {
        let key = (r.clone(), i.clone(), p);
        if let Some(v) = self.verdicts.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let v = classify::classify(r, i, p)?;
        self.verdicts.lock().expect("cache lock").insert(key, v.clone());
        Ok(v)
    }

    fn holds(&self, r: &Ring, i: &Ideal, p: Predicate) -> Result<bool> {
        Ok(self.verdict(r, i, p)?.holds())
    }

    /// `None` when the property holds, otherwise the rendered verdict.
    fn require(&self, r: &Ring, i: &Ideal, p: Predicate) -> Result<Option<String>> {
        let v = self.verdict(r, i, p)?;
        Ok((!v.holds()).then(|| format!("{p}({i}) = {v}")))
    }

    fn radical(&self, r: &Ring, i: &Ideal) -> Result<Ideal> {
        let key = (r.clone(), i.clone());
        if let Some(v) = self.radicals.lock().expect("cache lock").get(&key) {
            return Ok(v.clone());
        }
        let rad = ideal::radical(r, i)?.ideal;
        self.radicals.lock().expect("cache lock").insert(key, rad.clone());
        Ok(rad)
    }

    fn ideals(&self, r: &Ring) -> Result<Vec<Ideal>> {
        if r.is_integer() {
            Ok((0..=self.grid.dmax).map(Ideal::Principal).collect())
        } else {
            ideal::lattice(r)
        }
    }

    fn proper_ideals(&self, r: &Ring) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        for i in self.ideals(r)? {
            if ideal::is_proper(r, &i)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Small ideals used for triple searches.
    fn small_ideals(&self, r: &Ring) -> Result<Vec<Ideal>> {
        let bound = self.grid.companion_dmax;
        Ok(self
            .proper_ideals(r)?
            .into_iter()
            .filter(|i| !matches!(i, Ideal::Principal(d) if *d > bound))
            .collect())
    }

    fn rng(&self, r: &Ring) -> ChaCha8Rng {
        let index = self.grid.rings.iter().position(|x| x == r).unwrap_or(0) as u64;
        ChaCha8Rng::seed_from_u64(self.grid.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index))
    }

    /// The whole carrier, or the integer window plus random draws from a
    /// window ten times wider.
    fn sample(&self, r: &Ring) -> Vec<Element> {
        if r.modulus().is_some() {
            return r.sample_elements(0);
        }
        let w = self.grid.window;
        let mut xs = r.sample_elements(w);
        let mut rng = self.rng(r);
        for _ in 0..w {
            xs.push(rng.gen_range(-10 * w..=10 * w));
        }
        xs
    }

    /// Identity, projections and a few two-step compositions out of `r`.
    fn homs(&self, r: &Ring) -> Result<Vec<GoodHom>> {
        if let Some(h) = self.homs.lock().expect("cache lock").get(r) {
            return Ok(h.clone());
        }
        let mut out = vec![GoodHom::identity(r)];
        if r.is_integer() {
            for m in 2..=self.grid.mmax {
                out.push(GoodHom::projection(r, &Ideal::multiple(m))?);
            }
            for m in [12, 24].into_iter().filter(|&m| m <= self.grid.mmax) {
                let inner = GoodHom::projection(r, &Ideal::multiple(m))?;
                let mid = inner.target().clone();
                for j in ideal::lattice(&mid)? {
                    let g = j.generator(&mid);
                    if (2..m).contains(&g) {
                        out.push(GoodHom::compose(GoodHom::projection(&mid, &j)?, inner.clone())?);
                    }
                }
            }
        } else {
            for j in ideal::lattice(r)? {
                if j.generator(r) >= 2 {
                    out.push(GoodHom::projection(r, &j)?);
                }
            }
        }
        self.homs.lock().expect("cache lock").insert(r.clone(), out.clone());
        Ok(out)
    }
}

fn render(s: &ElementSet) -> String {
    s.to_string()
}

fn unordered_pairs<T: Clone>(xs: &[T]) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i..xs.len() {
            out.push((xs[i].clone(), xs[j].clone()));
        }
    }
    out
}

fn unordered_triples<T: Clone>(xs: &[T]) -> Vec<(T, T, T)> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i..xs.len() {
            for k in j..xs.len() {
                out.push((xs[i].clone(), xs[j].clone(), xs[k].clone()));
            }
        }
    }
    out
}

fn absorb_law(ctx: &Ctx, r: &Ring, primary: bool) -> Result<Vec<Outcome>> {
    let pred = if primary { Primary } else { Prime };
    let sample = ctx.sample(r);
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        if !ctx.holds(r, &i, pred)? {
            out.extend(sample.iter().map(|_| Outcome::Vacuous));
            continue;
        }
        let target = if primary { ctx.radical(r, &i)? } else { i.clone() };
        for &a in &sample {
            if ideal::contains(r, &i, a)? {
                out.push(Outcome::Vacuous);
                continue;
            }
            // every admissible J is a subset of this one
            let mut js = ElementSet::new();
            for &j in &sample {
                if ideal::contains_set(r, &i, &r.hmul(a, j)?)? {
                    js.insert(j);
                }
            }
            out.push(outcome(
                !js.is_empty(),
                || format!("{r} I={i} a={a} J={}", render(&js)),
                || {
                    for j in &js {
                        if !ideal::contains(r, &target, j)? {
                            return Ok(Some(format!("{j} ∈ J escapes {target}")));
                        }
                    }
                    Ok(None)
                },
            )?);
        }
    }
    Ok(out)
}

fn p2_3(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let sample = ctx.sample(r);
    let mut rng = ctx.rng(r);
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        if !ctx.holds(r, &i, Prime)? {
            out.push(Outcome::Vacuous);
            continue;
        }
        let mut inside = Vec::new();
        for &x in &sample {
            if ideal::contains(r, &i, x)? {
                inside.push(x);
            }
        }
        let draw = |rng: &mut ChaCha8Rng| -> ElementSet {
            let size = rng.gen_range(1..=3);
            (0..size)
                .map(|_| {
                    if !inside.is_empty() && rng.gen_bool(0.5) {
                        inside[rng.gen_range(0..inside.len())]
                    } else {
                        sample[rng.gen_range(0..sample.len())]
                    }
                })
                .collect()
        };
        for _ in 0..ctx.grid.samples {
            let a = draw(&mut rng);
            let b = draw(&mut rng);
            let ab = r.hset_product(&a, &b)?;
            out.push(outcome(
                ideal::contains_set(r, &i, &ab)?,
                || format!("{r} P={i} A={a} B={b}"),
                || {
                    let ok = ideal::contains_set(r, &i, &a)? || ideal::contains_set(r, &i, &b)?;
                    Ok((!ok).then(|| format!("A∘B={ab} ⊆ {i}, A ⊄ {i}, B ⊄ {i}")))
                },
            )?);
        }
    }
    Ok(out)
}

fn p2_5(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        out.push(outcome(
            ctx.holds(r, &i, Prime)?,
            || format!("{r} P={i}"),
            || {
                let mins = minimal_primes(r, &i)?;
                Ok((mins != [i.clone()]).then(|| {
                    format!("minimal primes {:?}", mins.iter().map(|p| p.to_string()).collect::<Vec<_>>())
                }))
            },
        )?);
    }
    Ok(out)
}

fn p2_7(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let ideals = ctx.ideals(r)?;
    let mut tuples: Vec<Vec<Ideal>> = ideals.iter().map(|i| vec![i.clone()]).collect();
    tuples.extend(unordered_pairs(&ideals).into_iter().map(|(a, b)| vec![a, b]));
    tuples.extend(unordered_triples(&ideals).into_iter().map(|(a, b, c)| vec![a, b, c]));
    let results: Vec<Result<Outcome>> = tuples
        .par_iter()
        .map(|t| {
            let name = || {
                let parts: Vec<String> = t.iter().map(|i| i.to_string()).collect();
                format!("{r} ({})", parts.join(", "))
            };
            outcome(true, name, || {
                if t.len() == 1 {
                    let rad = ctx.radical(r, &t[0])?;
                    let radrad = ctx.radical(r, &rad)?;
                    return Ok((!ideal::is_subideal(r, &rad, &radrad)?)
                        .then(|| format!("√I={rad} ⊄ √√I={radrad}")));
                }
                let mut prod = t[0].clone();
                let mut inter = t[0].clone();
                let mut rads = ctx.radical(r, &t[0])?;
                for i in &t[1..] {
                    prod = ideal::product(r, &prod, i)?;
                    inter = ideal::intersect(r, &inter, i)?;
                    rads = ideal::intersect(r, &rads, &ctx.radical(r, i)?)?;
                }
                let (a, b) = (ctx.radical(r, &prod)?, ctx.radical(r, &inter)?);
                Ok((a != b || b != rads)
                    .then(|| format!("√prod={a}, √∩={b}, ∩√={rads}")))
            })
        })
        .collect();
    results.into_iter().collect()
}

/// Runs `body(f, I)` over every homomorphism out of `r` and every ideal of
/// its source, skipping ideals whose image is not a hyperideal.
fn over_homs<F>(ctx: &Ctx, r: &Ring, mut body: F) -> Result<Vec<Outcome>>
where
    F: FnMut(&GoodHom, &Ideal) -> Result<Outcome>,
{
    let mut out = Vec::new();
    for f in ctx.homs(r)? {
        for i in ctx.ideals(r)? {
            out.push(body(&f, &i)?);
        }
    }
    Ok(out)
}

fn p2_8(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    over_homs(ctx, r, |f, i| {
        let fi = match f.image(i) {
            Ok(x) => x,
            Err(Error::NotHyperideal(_)) => return Ok(Outcome::Vacuous),
            Err(e) => return Err(e),
        };
        outcome(true, || format!("f={f} I={i}"), || {
            let f_rad = f.image(&ctx.radical(r, i)?)?;
            let rad_f = ctx.radical(f.target(), &fi)?;
            Ok((!ideal::is_subideal(f.target(), &f_rad, &rad_f)?)
                .then(|| format!("f(√I)={f_rad} ⊄ √f(I)={rad_f}")))
        })
    })
}

fn p2_9(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for f in ctx.homs(r)? {
        for j in ctx.ideals(f.target())? {
            out.push(outcome(true, || format!("f={f} J={j}"), || {
                let lhs = ctx.radical(r, &f.preimage(&j)?)?;
                let rhs = f.preimage(&ctx.radical(f.target(), &j)?)?;
                Ok((lhs != rhs).then(|| format!("√f⁻¹(J)={lhs}, f⁻¹(√J)={rhs}")))
            })?);
        }
    }
    Ok(out)
}

/// `pred` passes from a C_u ideal `I ⊇ Ker f` to `f(I)`.
fn image_law(ctx: &Ctx, r: &Ring, pred: Predicate) -> Result<Vec<Outcome>> {
    let mut kernels: HashMap<String, Ideal> = HashMap::new();
    over_homs(ctx, r, |f, i| {
        if !ideal::is_proper(r, i)? || !ctx.holds(r, i, CuIdeal)? || !ctx.holds(r, i, pred)? {
            return Ok(Outcome::Vacuous);
        }
        let key = f.to_string();
        let ker = match kernels.get(&key) {
            Some(k) => k.clone(),
            None => {
                let k = f.kernel()?;
                kernels.insert(key, k.clone());
                k
            }
        };
        outcome(ideal::is_subideal(r, &ker, i)?, || format!("f={f} I={i} Ker={ker}"), || {
            match f.image(i) {
                Ok(fi) => ctx.require(f.target(), &fi, pred),
                Err(Error::NotHyperideal(msg)) => Ok(Some(format!("f(I) is not a hyperideal: {msg}"))),
                Err(e) => Err(e),
            }
        })
    })
}

/// `pred` passes from `J` to `f⁻¹(J)`.
fn preimage_law(ctx: &Ctx, r: &Ring, pred: Predicate) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for f in ctx.homs(r)? {
        let target = f.target();
        for j in ctx.proper_ideals(target)? {
            out.push(outcome(ctx.holds(target, &j, pred)?, || format!("f={f} J={j}"), || {
                let pre = f.preimage(&j)?;
                ctx.require(r, &pre, pred)
            })?);
        }
    }
    Ok(out)
}

fn t3_5(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        let rad = ctx.radical(r, &i)?;
        let premise = ideal::is_proper(r, &rad)? && ctx.holds(r, &rad, Prime)?;
        out.push(outcome(premise, || format!("{r} I={i} √I={rad}"), || {
            ctx.require(r, &i, TwoAbsorbingPrimary)
        })?);
    }
    Ok(out)
}

fn t3_8(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut families: Vec<Vec<Ideal>> =
        unordered_pairs(&ctx.proper_ideals(r)?).into_iter().map(|(a, b)| vec![a, b]).collect();
    families.extend(unordered_triples(&ctx.small_ideals(r)?).into_iter().map(|(a, b, c)| vec![a, b, c]));
    let mut out = Vec::new();
    for fam in families {
        let p = ctx.radical(r, &fam[0])?;
        let mut premise = true;
        for i in &fam {
            premise = premise && ctx.holds(r, i, TwoAbsorbingPrimary)? && ctx.radical(r, i)? == p;
            if !premise {
                break;
            }
        }
        let name = || {
            let parts: Vec<String> = fam.iter().map(|i| i.to_string()).collect();
            format!("{r} ({}) P={p}", parts.join(", "))
        };
        out.push(outcome(premise, name, || {
            let mut inter = fam[0].clone();
            for i in &fam[1..] {
                inter = ideal::intersect(r, &inter, i)?;
            }
            let rad = ctx.radical(r, &inter)?;
            if rad != p {
                return Ok(Some(format!("√∩={rad}")));
            }
            ctx.require(r, &inter, TwoAbsorbingPrimary)
        })?);
    }
    Ok(out)
}

fn l3_10(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for (p1, p2) in unordered_pairs(&ctx.proper_ideals(r)?) {
        let premise = ctx.holds(r, &p1, Prime)? && ctx.holds(r, &p2, Prime)?;
        out.push(outcome(premise, || format!("{r} ({p1}, {p2})"), || {
            ctx.require(r, &ideal::intersect(r, &p1, &p2)?, TwoAbsorbing)
        })?);
    }
    Ok(out)
}

fn t3_12(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for (i1, i2) in unordered_pairs(&ctx.proper_ideals(r)?) {
        let mut premise = true;
        for i in [&i1, &i2] {
            premise = premise && ctx.holds(r, i, Primary)? && ctx.holds(r, i, CIdeal)?;
        }
        out.push(outcome(premise, || format!("{r} ({i1}, {i2})"), || {
            if let Some(w) = ctx.require(r, &ideal::intersect(r, &i1, &i2)?, TwoAbsorbingPrimary)? {
                return Ok(Some(w));
            }
            ctx.require(r, &ideal::product(r, &i1, &i2)?, TwoAbsorbingPrimary)
        })?);
    }
    Ok(out)
}

fn c3_16(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let ideals = ctx.ideals(r)?;
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        let premise_i = ctx.holds(r, &i, CuIdeal)? && ctx.holds(r, &i, TwoAbsorbingPrimary)?;
        for j in &ideals {
            if !premise_i || j.generator(r) < 2 || !ideal::is_subideal(r, j, &i)? {
                out.push(Outcome::Vacuous);
                continue;
            }
            out.push(outcome(true, || format!("{r} I={i} J={j}"), || {
                let f = GoodHom::projection(r, j)?;
                let quotient_ideal = f.image(&i)?;
                ctx.require(f.target(), &quotient_ideal, TwoAbsorbingPrimary)
            })?);
        }
    }
    Ok(out)
}

fn l3_17(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let lattice = ideal::lattice(r)?;
    let carrier = r.sample_elements(0);
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        let premise_i = ctx.holds(r, &i, TwoAbsorbingPrimary)?;
        let rad = ctx.radical(r, &i)?;
        for j in &lattice {
            let js = j.elements().expect("modular ideal");
            for &a in &carrier {
                for &b in &carrier {
                    if !premise_i {
                        out.push(Outcome::Vacuous);
                        continue;
                    }
                    let ab = r.hmul(a, b)?;
                    let premise = ideal::contains_set(r, &i, &r.hset_product(&ab, js)?)?
                        && !ideal::contains_set(r, &i, &ab)?;
                    out.push(outcome(premise, || format!("{r} I={i} J={j} a={a} b={b}"), || {
                        let aj = r.hset_product(&ElementSet::singleton(a), js)?;
                        let bj = r.hset_product(&ElementSet::singleton(b), js)?;
                        let ok = ideal::contains_set(r, &rad, &aj)? || ideal::contains_set(r, &rad, &bj)?;
                        Ok((!ok).then(|| format!("a∘J={aj}, b∘J={bj} both escape √I={rad}")))
                    })?);
                }
            }
        }
    }
    Ok(out)
}

/// The ideal-level condition over the full lattice; returns the first
/// failing ordered triple.
pub fn ideal_triple_condition(r: &Ring, i: &Ideal) -> Result<Option<(Ideal, Ideal, Ideal)>> {
    let lattice = ideal::lattice(r)?;
    let rad = ideal::radical(r, i)?.ideal;
    for i1 in &lattice {
        for i2 in &lattice {
            let p12 = ideal::product(r, i1, i2)?;
            if ideal::is_subideal(r, &p12, i)? {
                continue;
            }
            for i3 in &lattice {
                let p123 = ideal::product(r, &p12, i3)?;
                if !ideal::is_subideal(r, &p123, i)? {
                    continue;
                }
                let p23 = ideal::product(r, i2, i3)?;
                let p13 = ideal::product(r, i1, i3)?;
                if !ideal::is_subideal(r, &p23, &rad)? && !ideal::is_subideal(r, &p13, &rad)? {
                    return Ok(Some((i1.clone(), i2.clone(), i3.clone())));
                }
            }
        }
    }
    Ok(None)
}

fn t3_18(ctx: &Ctx, r: &Ring) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    for i in ctx.proper_ideals(r)? {
        out.push(outcome(true, || format!("{r} I={i}"), || {
            let element_level = ctx.verdict(r, &i, TwoAbsorbingPrimary)?;
            let ideal_level = ideal_triple_condition(r, &i)?;
            Ok(match (&element_level, &ideal_level) {
                (Verdict::Holds, None) | (Verdict::Fails(_), Some(_)) => None,
                (Verdict::Holds, Some((a, b, c))) => {
                    Some(format!("2ap holds but ideal triple ({a}, {b}, {c}) fails"))
                }
                (v, None) => Some(format!("ideal-level condition holds but 2ap = {v}")),
                (Verdict::NotProper, Some(_)) => Some("improper ideal".into()),
            })
        })?);
    }
    Ok(out)
}

fn evaluate(ctx: &Ctx, law: &Law, r: &Ring) -> Result<Vec<Outcome>> {
    match law.id {
        "L2.1" => absorb_law(ctx, r, false),
        "L2.2" => absorb_law(ctx, r, true),
        "P2.3" => p2_3(ctx, r),
        "P2.5" => p2_5(ctx, r),
        "P2.7" => p2_7(ctx, r),
        "P2.8" => p2_8(ctx, r),
        "P2.9" => p2_9(ctx, r),
        "T2.13" => {
            let mut v = image_law(ctx, r, Prime)?;
            v.extend(preimage_law(ctx, r, Prime)?);
            Ok(v)
        }
        "T2.14" => {
            let mut v = image_law(ctx, r, Primary)?;
            v.extend(preimage_law(ctx, r, Primary)?);
            Ok(v)
        }
        "T3.5" => t3_5(ctx, r),
        "T3.8" => t3_8(ctx, r),
        "L3.10" => l3_10(ctx, r),
        "T3.12" => t3_12(ctx, r),
        "T3.14" => preimage_law(ctx, r, TwoAbsorbingPrimary),
        "T3.15" => image_law(ctx, r, TwoAbsorbingPrimary),
        "C3.16" => c3_16(ctx, r),
        "L3.17" => l3_17(ctx, r),
        "T3.18" => t3_18(ctx, r),
        other => Err(Error::UnknownLaw(other.to_string())),
    }
}

fn separation(r: &Ring, instance: String, witness: String) -> Separation {
    Separation { ring: r.to_string(), instance, witness }
}

fn companion_t3_5(ctx: &Ctx, rings: &[Ring]) -> Result<Companion> {
    let mut found = Vec::new();
    for r in rings {
        for i in ctx.proper_ideals(r)? {
            let rad = ctx.radical(r, &i)?;
            if !ideal::is_proper(r, &rad)? || !ctx.holds(r, &i, TwoAbsorbingPrimary)? {
                continue;
            }
            if let Verdict::Fails(w) = ctx.verdict(r, &rad, Prime)? {
                found.push(separation(r, format!("I={i} √I={rad}"), format!("√I not prime: {w}")));
            }
        }
    }
    let r = Ring::integer_scaled(&[2, 4])?;
    let (i, rad) = (Ideal::multiple(120), Ideal::multiple(15));
    let prime = ctx.verdict(&r, &rad, Prime)?;
    let tap = ctx.verdict(&r, &i, TwoAbsorbingPrimary)?;
    let reference = Reference {
        instance: format!("{r} I={i}"),
        separates: tap.holds() && !prime.holds(),
        detail: format!("√I={} prime={prime}; 2ap(I)={tap}", ctx.radical(&r, &i)?),
    };
    Ok(finish("2ap(I) and √I proper but not prime", found, reference))
}

fn companion_t3_8(ctx: &Ctx, rings: &[Ring]) -> Result<Companion> {
    let mut found = Vec::new();
    for r in rings {
        let mut taps = Vec::new();
        for i in ctx.proper_ideals(r)? {
            if ctx.holds(r, &i, TwoAbsorbingPrimary)? {
                taps.push(i);
            }
        }
        for (a, b) in unordered_pairs(&taps) {
            if ctx.radical(r, &a)? == ctx.radical(r, &b)? {
                continue;
            }
            let inter = ideal::intersect(r, &a, &b)?;
            if let Verdict::Fails(w) = ctx.verdict(r, &inter, TwoAbsorbingPrimary)? {
                found.push(separation(r, format!("({a}, {b}) ∩={inter}"), w.to_string()));
            }
        }
    }
    let r = Ring::integer_scaled(&[2, 3])?;
    let (a, b) = (Ideal::multiple(12), Ideal::multiple(20));
    let inter = ideal::intersect(&r, &a, &b)?;
    let v = ctx.verdict(&r, &inter, TwoAbsorbingPrimary)?;
    let both = ctx.holds(&r, &a, TwoAbsorbingPrimary)? && ctx.holds(&r, &b, TwoAbsorbingPrimary)?;
    let thirty = ctx.verdict(&r, &Ideal::multiple(30), TwoAbsorbingPrimary)?;
    let reference = Reference {
        instance: format!("{r} ({a}, {b})"),
        separates: both && !v.holds(),
        detail: format!(
            "√={} and {}; ∩={inter} with 2ap={v}; 2ap(30Z)={thirty}",
            ctx.radical(&r, &a)?,
            ctx.radical(&r, &b)?
        ),
    };
    Ok(finish("2ap pairs with different radicals whose intersection is not 2ap", found, reference))
}

fn companion_l3_10(ctx: &Ctx, rings: &[Ring]) -> Result<Companion> {
    let mut found = Vec::new();
    for r in rings {
        for (a, b) in unordered_pairs(&ctx.proper_ideals(r)?) {
            if ctx.holds(r, &a, Prime)? && ctx.holds(r, &b, Prime)? {
                continue;
            }
            let inter = ideal::intersect(r, &a, &b)?;
            if ctx.holds(r, &inter, TwoAbsorbing)? {
                let culprit = if ctx.holds(r, &a, Prime)? { &b } else { &a };
                let w = ctx.verdict(r, culprit, Prime)?;
                found.push(separation(r, format!("({a}, {b}) ∩={inter}"), format!("prime({culprit}) = {w}")));
            }
        }
    }
    let r = Ring::modular_scaled(6, &[1, 2, 3, 4, 5])?;
    let (a, b) = (Ideal::Explicit([0].into()), Ideal::Explicit([0, 2, 4].into()));
    let inter = ideal::intersect(&r, &a, &b)?;
    let two_a = ctx.verdict(&r, &inter, TwoAbsorbing)?;
    let pa = ctx.verdict(&r, &a, Prime)?;
    let reference = Reference {
        instance: format!("{r} ({a}, {b})"),
        separates: two_a.holds() && !pa.holds(),
        detail: format!("∩={inter} 2a={two_a}; prime({a})={pa}"),
    };
    Ok(finish("pairs with a 2a intersection that are not both prime", found, reference))
}

fn companion_t3_12(ctx: &Ctx, rings: &[Ring]) -> Result<Companion> {
    let mut found = Vec::new();
    for r in rings {
        let mut pc = Vec::new();
        for i in ctx.small_ideals(r)? {
            if ctx.holds(r, &i, Primary)? && ctx.holds(r, &i, CIdeal)? {
                pc.push(i);
            }
        }
        for (a, b, c) in unordered_triples(&pc) {
            let inter = ideal::intersect(r, &ideal::intersect(r, &a, &b)?, &c)?;
            if let Verdict::Fails(w) = ctx.verdict(r, &inter, TwoAbsorbingPrimary)? {
                found.push(separation(r, format!("({a}, {b}, {c}) ∩={inter}"), w.to_string()));
            }
        }
    }
    let r = Ring::integer_scaled(&[2, 4])?;
    let parts = [3, 5, 7].map(Ideal::multiple);
    let mut premise = true;
    for i in &parts {
        premise = premise && ctx.holds(&r, i, Primary)? && ctx.holds(&r, i, CIdeal)?;
    }
    let inter = Ideal::multiple(105);
    let v = ctx.verdict(&r, &inter, TwoAbsorbingPrimary)?;
    let reference = Reference {
        instance: format!("{r} (3Z, 5Z, 7Z)"),
        separates: premise && !v.holds(),
        detail: format!("primary C-ideals={premise}; ∩={inter} 2ap={v}"),
    };
    Ok(finish("triples of primary C-ideals whose intersection is not 2ap", found, reference))
}

fn finish(search: &'static str, mut found: Vec<Separation>, reference: Reference) -> Companion {
    let total = found.len();
    found.truncate(COMPANION_LISTED);
    Companion { search, total, found, reference }
}

fn companion(ctx: &Ctx, law: &Law, rings: &[Ring]) -> Result<Option<Companion>> {
    Ok(Some(match law.id {
        "T3.5" => companion_t3_5(ctx, rings)?,
        "T3.8" => companion_t3_8(ctx, rings)?,
        "L3.10" => companion_l3_10(ctx, rings)?,
        "T3.12" => companion_t3_12(ctx, rings)?,
        _ => return Ok(None),
    }))
}

fn law_rings(law: &Law, grid: &Grid) -> Result<Vec<Ring>> {
    if grid.rings.is_empty() {
        return Err(Error::EmptyGrid);
    }
    if !law.strongly_distributive_only {
        return Ok(grid.rings.clone());
    }
    let rings: Vec<Ring> = grid.rings.iter().filter(|r| r.is_coset()).cloned().collect();
    if rings.is_empty() {
        return Err(Error::IncompatibleGrid {
            law: law.id.to_string(),
            reason: "needs a strongly distributive (modular_coset) ring".into(),
        });
    }
    Ok(rings)
}

fn run_in(ctx: &Ctx, law: &'static Law) -> Result<LawReport> {
    let start = Instant::now();
    let rings = law_rings(law, ctx.grid)?;
    let parts: Vec<Result<Vec<Outcome>>> = rings.par_iter().map(|r| evaluate(ctx, law, r)).collect();
    let (mut instances, mut premises, mut violations) = (0, 0, Vec::new());
    for part in parts {
        for o in part? {
            instances += 1;
            match o {
                Outcome::Vacuous => {}
                Outcome::Holds => premises += 1,
                Outcome::Violated(v) => {
                    premises += 1;
                    violations.push(v);
                }
            }
        }
    }
    let companion = companion(ctx, law, &rings)?;
    let mut notes = Vec::new();
    if premises == 0 {
        notes.push("no instance satisfies the premises on this grid".to_string());
    }
    let image_pred = match law.id {
        "T2.13" => Some(Prime),
        "T2.14" => Some(Primary),
        _ => None,
    };
    if let Some(pred) = image_pred {
        let mut image_premises = 0;
        for r in &rings {
            image_premises += image_law(ctx, r, pred)?.iter().filter(|o| !matches!(o, Outcome::Vacuous)).count();
        }
        notes.push(format!(
            "image half: {image_premises} premise-satisfying instances; preimage half: {}",
            premises - image_premises
        ));
    }
    if let Some(c) = &companion {
        if !c.reference.separates {
            notes.push(format!(
                "reference instance {} does not separate: {}",
                c.reference.instance, c.reference.detail
            ));
        }
    }
    Ok(LawReport {
        law: law.id,
        statement: law.statement,
        grid: ctx.grid.clone(),
        instances,
        premises_satisfied: premises,
        violations,
        companion_found: companion.as_ref().map(|c| c.total > 0),
        companion,
        notes,
        wall_time: start.elapsed(),
    })
}

pub fn run_law(id: &str, grid: &Grid) -> Result<LawReport> {
    let law = lookup(id)?;
    run_in(&Ctx::new(grid), law)
}

/// Runs several laws sharing one verdict cache. Coset-only laws are skipped
/// when the grid has no coset ring and `skip_incompatible` is set.
pub fn run_laws(ids: &[&str], grid: &Grid, skip_incompatible: bool) -> Result<Vec<LawReport>> {
    let ctx = Ctx::new(grid);
    let mut out = Vec::new();
    for id in ids {
        match run_in(&ctx, lookup(id)?) {
            Err(Error::IncompatibleGrid { .. }) if skip_incompatible => {}
            other => out.push(other?),
        }
    }
    Ok(out)
}

pub fn run_all(grid: &Grid) -> Result<Vec<LawReport>> {
    let ids: Vec<&str> = LAWS.iter().map(|l| l.id).collect();
    run_laws(&ids, grid, true)
}

/// Every grid ideal where `holds` is true and `fails` is false, with the
/// failure witness.
pub fn find_separating_examples(holds: Predicate, fails: Predicate, grid: &Grid) -> Result<Vec<Separation>> {
    if grid.rings.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let ctx = Ctx::new(grid);
    let mut out = Vec::new();
    for r in &grid.rings {
        for i in ctx.ideals(r)? {
            if !ctx.holds(r, &i, holds)? {
                continue;
            }
            if let Verdict::Fails(w) = ctx.verdict(r, &i, fails)? {
                out.push(separation(r, i.to_string(), w.to_string()));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ImplicationReport {
    pub instances: usize,
    pub exceptions: Vec<Violation>,
}

/// prime ⟹ primary ⟹ 2ap, 2a ⟹ 2ap, and C_u ⟹ C on every grid ideal.
pub fn check_implications(grid: &Grid) -> Result<ImplicationReport> {
    const CHAIN: [(Predicate, Predicate); 4] =
        [(Prime, Primary), (Primary, TwoAbsorbingPrimary), (TwoAbsorbing, TwoAbsorbingPrimary), (CuIdeal, CIdeal)];
    let ctx = Ctx::new(grid);
    let mut instances = 0;
    let mut exceptions = Vec::new();
    for r in &grid.rings {
        for i in ctx.ideals(r)? {
            instances += 1;
            for (a, b) in CHAIN {
                if ctx.holds(r, &i, a)? && !ctx.holds(r, &i, b)? {
                    exceptions.push(Violation {
                        instance: format!("{r} {i}"),
                        witness: format!("{a} holds, {b} = {}", ctx.verdict(r, &i, b)?),
                    });
                }
            }
        }
    }
    Ok(ImplicationReport { instances, exceptions })
}
