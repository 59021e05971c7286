//! Dense polynomials over the prime field F_s, coefficients constant term first.
//! Used for building extension moduli and testing irreducibility.

use crate::arith::{inv_mod, mul_mod};

pub(crate) fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn sub(a: &[u64], b: &[u64], s: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + s - y) % s
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], s: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, s)) % s;
        }
    }
    trim(out)
}

/// Remainder of `a` modulo nonzero `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], s: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], s).expect("leading coefficient is a unit");
    while r.len() > dm {
        let dr = r.len() - 1;
        let f = mul_mod(r[dr], lead_inv, s);
        if f != 0 {
            for (slot, &mk) in r[dr - dm..].iter_mut().zip(m) {
                *slot = (*slot + s - mul_mod(f, mk, s)) % s;
            }
        }
        r.pop();
        r = trim(r);
    }
    r
}

pub(crate) fn gcd(a: &[u64], b: &[u64], s: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, s);
        x = y;
        y = r;
    }
    x
}

fn mulmod(a: &[u64], b: &[u64], m: &[u64], s: u64) -> Vec<u64> {
    rem(&mul(a, b, s), m, s)
}

fn powmod(base: &[u64], mut e: u64, m: &[u64], s: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, s);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, s);
        }
        b = mulmod(&b, &b, m, s);
        e >>= 1;
    }
    acc
}

/// Ben-Or test: a monic `f` of degree `d` is irreducible iff
/// `gcd(f, t^(s^i) - t) = 1` for every `1 <= i <= d/2`.
pub(crate) fn is_irreducible(f: &[u64], s: u64) -> bool {
    let f = trim(f.to_vec());
    if f.len() < 2 {
        return false;
    }
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    let t = vec![0, 1];
    let mut h = t.clone();
    for _ in 1..=d / 2 {
        h = powmod(&h, s, &f, s);
        let g = gcd(&f, &sub(&h, &t, s), s);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1) over F_7
        let a = vec![6, 0, 1];
        let b = vec![6, 1];
        assert!(rem(&a, &b, 7).is_empty());
        assert_eq!(gcd(&a, &[1, 1], 7).len(), 2);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&[1, 0, 1, 1], 7));
        assert!(!is_irreducible(&[1, 0, 0, 1], 7)); // t^3 + 1 has root 6
        // quartic with no roots that still factors: (t^2+1)^2 over F_3
        assert!(!is_irreducible(&[1, 0, 2, 0, 1], 3));
        assert!(!is_irreducible(&[2, 0, 1], 3)); // t^2 + 2 = (t-1)(t+1)
        assert!(is_irreducible(&[1, 0, 1], 3));
    }
}
