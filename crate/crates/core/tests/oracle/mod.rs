//! Definition-level brute force over an element window, written without the
//! library's classifier, radical formula, or product traces.
#![allow(dead_code)]

use std::collections::BTreeSet;

/// A scaled hyperring `x∘y = {k·x·y}` restricted to an ideal given by
/// membership of residues mod `modulus`.
pub struct Oracle {
    pub modulus: i64,
    pub ks: Vec<i64>,
    member: Vec<bool>,
    pub window: Vec<i64>,
    max_power: usize,
}

fn max_exponent(mut m: i64) -> usize {
    let mut best = 0;
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        best = best.max(e);
        p += 1;
    }
    best.max(usize::from(m > 1))
}

impl Oracle {
    /// The ideal `mZ` of `Z[K]`, window `[0, 3m]`. Membership in every
    /// predicate is invariant under negating an element, so the
    /// nonnegative half of `[−3m, 3m]` decides the same quantifiers.
    pub fn integer(ks: &[i64], m: i64) -> Oracle {
        let mut member = vec![false; m as usize];
        member[0] = true;
        Oracle { modulus: m, ks: ks.to_vec(), member, window: (0..=3 * m).collect(), max_power: max_exponent(m) + 1 }
    }

    pub fn modular(n: i64, ks: &[i64], ideal: &[i64]) -> Oracle {
        let mut member = vec![false; n as usize];
        for &x in ideal {
            member[x.rem_euclid(n) as usize] = true;
        }
        Oracle { modulus: n, ks: ks.to_vec(), member, window: (0..n).collect(), max_power: 2 * n as usize }
    }

    fn res(&self, x: i128) -> usize {
        x.rem_euclid(self.modulus as i128) as usize
    }

    pub fn inside(&self, x: i64) -> bool {
        self.member[self.res(x as i128)]
    }

    /// Exact integer values of `x₁∘x₂∘⋯∘xₙ`.
    pub fn hyper(&self, xs: &[i64]) -> BTreeSet<i128> {
        let mut acc: BTreeSet<i128> = [xs[0] as i128].into();
        for &x in &xs[1..] {
            acc = acc.iter().flat_map(|&a| self.ks.iter().map(move |&k| a * k as i128 * x as i128)).collect();
        }
        acc
    }

    pub fn set_in(&self, xs: &[i64]) -> bool {
        self.hyper(xs).iter().all(|&v| self.member[self.res(v)])
    }

    pub fn set_in_rad(&self, xs: &[i64]) -> bool {
        self.hyper(xs).iter().all(|&v| self.in_rad(self.res(v) as i64))
    }

    /// Some hyperpower `xⁿ` lies inside the ideal.
    pub fn in_rad(&self, x: i64) -> bool {
        let x = self.res(x as i128) as i64;
        (1..=self.max_power).any(|n| self.set_in(&vec![x; n]))
    }

    pub fn prime(&self) -> bool {
        self.pairs(|o, x, y| o.inside(x) || o.inside(y))
    }

    pub fn primary(&self) -> bool {
        self.pairs(|o, x, y| o.inside(x) || o.in_rad(y))
    }

    fn pairs(&self, ok: impl Fn(&Oracle, i64, i64) -> bool) -> bool {
        let w = &self.window;
        w.iter().all(|&x| w.iter().all(|&y| !self.set_in(&[x, y]) || ok(self, x, y)))
    }

    /// Returns `(2a, 2ap)` by enumerating every ordered triple. Residue
    /// tables make the sweep affordable; they are filled by the same
    /// definitional checks.
    pub fn two_absorbing(&self) -> (bool, bool) {
        let n = self.modulus as usize;
        let pair_in: Vec<bool> = (0..n as i64).map(|r| self.set_in(&[1, r])).collect();
        let pair_rad: Vec<bool> = (0..n as i64).map(|r| self.set_in_rad(&[1, r])).collect();
        let triple_in: Vec<bool> = (0..n as i64).map(|r| self.set_in(&[1, 1, r])).collect();
        let (mut two_a, mut two_ap) = (true, true);
        let w: Vec<usize> = self.window.iter().map(|&x| self.res(x as i128)).collect();
        for &a in &w {
            for &b in &w {
                let ab = a * b % n;
                for &c in &w {
                    if !triple_in[ab * c % n] || pair_in[ab] {
                        continue;
                    }
                    let (bc, ac) = (b * c % n, a * c % n);
                    two_a &= pair_in[bc] || pair_in[ac];
                    two_ap &= pair_rad[bc] || pair_rad[ac];
                }
            }
        }
        (two_a, two_ap)
    }

    /// Products `X∘1∘⋯∘1` of depth 2..=max_depth cover every value a
    /// finite hyperproduct of window elements can take.
    fn products(&self, max_depth: usize) -> Vec<BTreeSet<i128>> {
        let mut out = Vec::new();
        for depth in 2..=max_depth {
            for &x in &self.window {
                let mut xs = vec![1; depth];
                xs[0] = x;
                out.push(self.hyper(&xs));
            }
        }
        out
    }

    pub fn c_ideal(&self, max_depth: usize) -> bool {
        self.products(max_depth).iter().all(|s| {
            let hit = s.iter().any(|&v| self.member[self.res(v)]);
            !hit || s.iter().all(|&v| self.member[self.res(v)])
        })
    }

    pub fn cu_ideal(&self, max_depth: usize) -> bool {
        let ps = self.products(max_depth);
        let meets = ps.iter().any(|s| s.iter().any(|&v| self.member[self.res(v)]));
        let escapes = ps.iter().any(|s| s.iter().any(|&v| !self.member[self.res(v)]));
        !(meets && escapes)
    }

    pub fn refutes_prime(&self, x: i64, y: i64) -> bool {
        self.set_in(&[x, y]) && !self.inside(x) && !self.inside(y)
    }

    pub fn refutes_primary(&self, x: i64, y: i64) -> bool {
        self.set_in(&[x, y]) && !self.inside(x) && !self.in_rad(y)
    }

    pub fn refutes_2ap(&self, a: i64, b: i64, c: i64) -> bool {
        self.set_in(&[a, b, c])
            && !self.set_in(&[a, b])
            && !self.set_in_rad(&[b, c])
            && !self.set_in_rad(&[a, c])
    }

    pub fn refutes_2a(&self, a: i64, b: i64, c: i64) -> bool {
        self.set_in(&[a, b, c]) && !self.set_in(&[a, b]) && !self.set_in(&[b, c]) && !self.set_in(&[a, c])
    }
}

/// Radical generator of `mZ` by bounded brute force over `1..=bound`.
pub fn radical_generator(ks: &[i64], m: i64, bound: i64) -> Option<i64> {
    if m == 0 {
        return None;
    }
    let o = Oracle::integer(ks, m);
    (1..=bound).find(|&x| o.in_rad(x))
}
