//! Small integer helpers: factorization, valuations, divisor lists.

use num_integer::Integer;

/// Prime factorization of `|n|` by trial division, as `(prime, exponent)`
/// pairs in ascending prime order. `factorize(0)` and `factorize(1)` are empty.
pub fn factorize(n: i64) -> Vec<(i64, u32)> {
    let mut n = n.unsigned_abs();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p as i64, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n as i64, 1));
    }
    out
}

/// p-adic valuation of a nonzero integer. Returns `None` for zero.
pub fn valuation(p: i64, x: i64) -> Option<u32> {
    if x == 0 {
        return None;
    }
    let mut x = x.unsigned_abs();
    let p = p.unsigned_abs();
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// Positive divisors of `n > 0`, ascending.
pub fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd_all<I: IntoIterator<Item = i64>>(xs: I) -> i64 {
    xs.into_iter().fold(0, |acc, x| acc.gcd(&x))
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a.lcm(&b)
    }
}
