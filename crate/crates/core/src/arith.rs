//! Small-integer number theory: primality, factorization, arithmetic mod a
//! word-sized prime.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some((p, a))` when `n = p^a` with `a >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let ps = prime_divisors(n);
    if ps.len() != 1 {
        return None;
    }
    let p = ps[0];
    let mut a = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        a += 1;
    }
    Some((p, a))
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    let mut m = n;
    while m > 1 && m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Signed integer reduced into `[0, p)`.
#[inline]
pub fn reduce_signed(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

/// An element of exact multiplicative order `e` modulo the prime `p`.
pub fn root_of_unity(e: u64, p: u64) -> u64 {
    assert_eq!((p - 1) % e, 0, "{e} does not divide {p} - 1");
    let factors = prime_divisors(e);
    for x in 2..p {
        let z = pow_mod(x, (p - 1) / e, p);
        if factors.iter().all(|&q| pow_mod(z, e / q, p) != 1) {
            return z;
        }
    }
    1 // e == 1
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > lower`.
pub fn prime_one_mod(e: u64, lower: u64, bound: u64) -> Option<u64> {
    let mut k = lower / e + 1;
    loop {
        let p = k * e + 1;
        if p > bound {
            return None;
        }
        if p > lower && is_prime(p) {
            return Some(p);
        }
        k += 1;
    }
}

/// Möbius function.
pub fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}
