//! Small-integer number theory used by parameter search and order computations.

/// Deterministic primality for `u64` via Miller–Rabin with the first twelve prime bases.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub(crate) fn check_odd_prime(p: u64) -> crate::error::Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return Err(crate::error::Error::Parameter(format!("{p} is not an odd prime")));
    }
    if p >= 1 << 31 {
        return Err(crate::error::Error::Parameter(format!("p = {p} is too large")));
    }
    Ok(())
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime factorization by trial division, as `(prime, multiplicity)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Multiplicative order of `x` modulo `m`, or `None` when `gcd(x, m) != 1`.
pub fn order_mod(x: u64, m: u64) -> Option<u64> {
    if num_integer::gcd(x % m, m) != 1 {
        return None;
    }
    (1..=m).find(|&d| pow_mod(x, d, m) == 1 % m)
}

/// Inverse of `x` modulo `m` when it exists.
pub fn inv_mod(x: u64, m: u64) -> Option<u64> {
    let (g, a, _) = ext_gcd(x as i128 % m as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(a.rem_euclid(m as i128) as u64)
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
