use std::collections::HashMap;

use serde::Serialize;

use crate::ring::Element;
use crate::set::ElementSet;

/// The multiplier sets of iterated hyperproducts, reduced mod `m`.
///
/// `sets[0] = K mod m` and `sets[t] = sets[t-1]·K mod m`, so `sets[t-1]` holds
/// the multipliers of a product of `t + 1` elements. The sequence lives in the
/// finite power set of Z/m and is therefore eventually periodic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductTrace {
    pub modulus: Element,
    pub sets: Vec<ElementSet>,
    pub preperiod: usize,
    pub period: usize,
}

impl ProductTrace {
    pub fn new(multipliers: &[Element], modulus: Element) -> ProductTrace {
        assert!(modulus >= 1, "trace modulus must be positive");
        let reduced: ElementSet = multipliers.iter().map(|k| k.rem_euclid(modulus)).collect();
        let mut sets: Vec<ElementSet> = Vec::new();
        let mut seen: HashMap<ElementSet, usize> = HashMap::new();
        let mut current = reduced.clone();
        loop {
            if let Some(&start) = seen.get(&current) {
                let period = sets.len() - start;
                return ProductTrace { modulus, sets, preperiod: start, period };
            }
            seen.insert(current.clone(), sets.len());
            let next = current
                .iter()
                .flat_map(|s| reduced.iter().map(move |k| (s * k) % modulus))
                .collect();
            sets.push(current);
            current = next;
        }
    }

    /// `S_t` for any `t ≥ 1`, using periodicity past the stored prefix.
    pub fn at(&self, t: usize) -> &ElementSet {
        assert!(t >= 1);
        let mut i = t - 1;
        if i >= self.sets.len() {
            i = self.preperiod + (i - self.preperiod) % self.period;
        }
        &self.sets[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_mod_12() {
        let tr = ProductTrace::new(&[2, 3], 12);
        assert_eq!(tr.sets[0], [2, 3].into());
        assert_eq!(tr.sets[1], [4, 6, 9].into());
        for t in 1..40 {
            let direct: ElementSet = {
                let mut s: ElementSet = [1].into();
                for _ in 0..t {
                    s = s.iter().flat_map(|x| [2 * x % 12, 3 * x % 12]).collect();
                }
                s
            };
            assert_eq!(tr.at(t), &direct, "t={t}");
        }
    }

    #[test]
    fn periodicity_invariant() {
        for m in 1..=40 {
            for ks in [&[2, 3][..], &[2, 4], &[2, 3, 5], &[-1, 7]] {
                let tr = ProductTrace::new(ks, m);
                assert!(tr.period >= 1);
                for t in 0..20 {
                    assert_eq!(
                        tr.at(tr.preperiod + 1 + t),
                        tr.at(tr.preperiod + 1 + t + tr.period)
                    );
                }
                assert!(tr.sets.len() <= (m * m) as usize + 1, "m={m} len={}", tr.sets.len());
            }
        }
    }
}
