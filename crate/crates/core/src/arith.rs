//! Small number-theoretic helpers on machine integers.
//!
//! Everything here is plain trial division; the arguments stay below
//! 2^64 at desk scale.

use num_integer::Integer;

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut k: u128) -> Vec<(u128, u32)> {
    assert!(k >= 1, "factorize(0)");
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= k {
        if k % d == 0 {
            let mut e = 0;
            while k % d == 0 {
                k /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}

pub fn is_prime(k: u128) -> bool {
    if k < 2 {
        return false;
    }
    let mut d: u128 = 2;
    while d * d <= k {
        if k % d == 0 {
            return false;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    true
}

/// Smallest prime factors of `k`, without multiplicity.
pub fn prime_divisors(k: u128) -> Vec<u128> {
    factorize(k).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `k`, sorted.
pub fn divisors(k: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(k as u128) {
        let p = p as u64;
        let len = divs.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(k: u64) -> u64 {
    factorize(k as u128)
        .into_iter()
        .fold(k, |acc, (p, _)| acc / p as u64 * (p as u64 - 1))
}

pub fn moebius_mu(k: u64) -> i64 {
    let f = factorize(k as u128);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Least positive `x` with `a * x ≡ 1 (mod m)`, if `gcd(a, m) = 1`.
///
/// For `m = 1` every `x` qualifies and the answer is 1.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    let x = e.x.rem_euclid(m as i128) as u64;
    Some(if x == 0 { m } else { x })
}

/// Writes `q = p^e` if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = factorize(q as u128);
    match f.as_slice() {
        [(p, e)] => Some((*p as u64, *e)),
        _ => None,
    }
}

/// Necklace count of monic irreducibles of degree `k` over a field of
/// size `q`: `(1/k) Σ_{d|k} μ(d) q^{k/d}`.
pub fn count_irreducibles(q: u64, k: u64) -> u128 {
    assert!(k >= 1);
    let mut total: i128 = 0;
    for d in divisors(k) {
        let mu = moebius_mu(d) as i128;
        if mu != 0 {
            total += mu * (q as i128).pow((k / d) as u32);
        }
    }
    (total / k as i128) as u128
}

/// Multiplicative order of `a` given a multiple `n` of it and a closure
/// evaluating `a^e == 1`.
pub fn order_from_multiple(n: u128, mut is_one: impl FnMut(u128) -> bool) -> u128 {
    let mut ord = n;
    for p in prime_divisors(n) {
        while ord % p == 0 && is_one(ord / p) {
            ord /= p;
        }
    }
    ord
}
