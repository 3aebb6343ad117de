//! Exact integer and character primitives.
//!
//! Everything here is exact: Kronecker symbols, the Moebius function,
//! the decomposition D = d*f^2 of a negative discriminant into a
//! fundamental discriminant d and conductor f, and the invariants of
//! positive definite half-integral 2x2 matrices
//!
//!   T = (u   v/2)      D_T = det(2T) = 4uw - v^2,   c(T) = gcd(u, v, w).
//!       (v/2   w)
//!
//! Both i64 and BigInt entry points are provided; the BigInt versions
//! are the ones consumed where coefficients grow (automorphs of real
//! quadratic forms have entries the size of fundamental units).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Kronecker symbol (a/n), fully extended: n may be zero, negative or even.
///
/// Conventions: (a/0) = 1 iff a = +-1; (a/-1) = -1 iff a < 0;
/// (a/2) = 0 for even a and (-1)^((a^2-1)/8) for odd a.
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    if n.is_zero() {
        return if a.abs() == BigInt::from(1) { 1 } else { 0 };
    }
    let mut a = a.clone();
    let mut n = n.clone();
    let mut k: i32 = 1;
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            k = -k;
        }
    }
    // strip the even part of n
    let two = BigInt::from(2);
    let mut v = 0u64;
    while n.is_even() {
        n /= &two;
        v += 1;
    }
    if v > 0 {
        if a.is_even() {
            return 0;
        }
        if v % 2 == 1 {
            k *= kronecker_two(&a);
        }
    }
    // now n is odd and positive; standard Jacobi loop with reciprocity
    a = a.mod_floor(&n);
    while !a.is_zero() {
        let mut v = 0u64;
        while a.is_even() {
            a /= &two;
            v += 1;
        }
        if v % 2 == 1 {
            k *= kronecker_two(&n);
        }
        // quadratic reciprocity for odd positive a, n
        if a.mod_floor(&BigInt::from(4)) == BigInt::from(3)
            && n.mod_floor(&BigInt::from(4)) == BigInt::from(3)
        {
            k = -k;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n == BigInt::from(1) {
        k
    } else {
        0
    }
}

/// (2/a) for odd a: 1 if a = +-1 mod 8, -1 if a = +-3 mod 8.
fn kronecker_two(a: &BigInt) -> i32 {
    let r = a.mod_floor(&BigInt::from(8)).to_i64().unwrap();
    match r {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => unreachable!("kronecker_two called on even argument"),
    }
}

/// i64 convenience wrapper around [`kronecker`].
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&BigInt::from(a), &BigInt::from(n))
}

/// Moebius function: 0 if n is not squarefree, else (-1)^(number of prime factors).
pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1, "moebius requires n >= 1");
    let mut n = n;
    let mut mu = 1i32;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// Squarefree positive divisors of n (the support of the Moebius function).
pub fn squarefree_divisors(n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push(m);
    }
    let mut divs = vec![1u64];
    for p in primes {
        let cur = divs.clone();
        for d in cur {
            divs.push(d * p);
        }
    }
    divs.sort_unstable();
    divs
}

/// All positive divisors of n.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Prime factorization of n as (prime, exponent) pairs.
pub fn factor(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of n.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// True for primes (trial division; desk-scale inputs).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Is d a fundamental discriminant? (d = 1 mod 4 squarefree, or
/// d = 4m with m = 2, 3 mod 4 squarefree; d = 1 counts as fundamental.)
pub fn is_fundamental(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let r = d.rem_euclid(4);
    if r == 1 {
        return is_squarefree(d.unsigned_abs());
    }
    if r == 0 {
        let m = d / 4;
        let rm = m.rem_euclid(4);
        return (rm == 2 || rm == 3) && is_squarefree(m.unsigned_abs());
    }
    false
}

fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    moebius(n) != 0
}

/// A fundamental discriminant d together with a conductor f > 0; the
/// decomposed discriminant is D = d * f^2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiscriminantDecomposition {
    pub d: i64,
    pub f: u64,
}

/// Decompose a negative discriminant D (D = 0, 1 mod 4) as d * f^2 with d
/// fundamental and f a positive integer.
///
/// With delta the largest integer whose square divides D, the answer is
/// (D/delta^2, delta) unless D = 0 mod 4 and D/delta^2 = 2, 3 mod 4, in
/// which case it is (4D/delta^2, delta/2). Inputs with D = 2, 3 mod 4 are
/// rejected: they would force a half-integral conductor and never occur
/// for -D_T.
pub fn fundamental_decompose(disc: i64) -> Result<DiscriminantDecomposition> {
    if disc >= 0 || !matches!(disc.rem_euclid(4), 0 | 1) {
        return Err(Error::NotADiscriminant(disc));
    }
    let mut delta = 1u64;
    for (p, e) in factor(disc.unsigned_abs()) {
        delta *= p.pow(e / 2);
    }
    let d0 = disc / (delta as i64 * delta as i64);
    if disc.rem_euclid(4) == 0 && matches!(d0.rem_euclid(4), 2 | 3) {
        // delta is even here: 4 | D and D/delta^2 = 2, 3 mod 4 forces it
        debug_assert!(delta % 2 == 0);
        let f = delta / 2;
        let d = 4 * d0;
        debug_assert!(is_fundamental(d));
        Ok(DiscriminantDecomposition { d, f })
    } else {
        debug_assert!(is_fundamental(d0));
        Ok(DiscriminantDecomposition { d: d0, f: delta })
    }
}

/// A positive definite symmetric half-integral 2x2 matrix, stored as the
/// integer triple (u, v, w); the actual matrix entry off the diagonal is v/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfIntegralMatrix {
    pub u: i64,
    pub v: i64,
    pub w: i64,
}

impl HalfIntegralMatrix {
    pub fn new(u: i64, v: i64, w: i64) -> Result<Self> {
        let t = HalfIntegralMatrix { u, v, w };
        if u <= 0 || t.det_doubled() <= 0 {
            return Err(Error::NotPositiveDefinite { u, v, w });
        }
        Ok(t)
    }

    /// D_T = det(2T) = 4uw - v^2.
    pub fn det_doubled(&self) -> i64 {
        4 * self.u * self.w - self.v * self.v
    }

    /// c(T) = gcd(u, v, w).
    pub fn content(&self) -> u64 {
        let g = self.u.unsigned_abs().gcd(&self.v.unsigned_abs());
        g.gcd(&self.w.unsigned_abs())
    }

    /// (D_T, c(T), decomposition of -D_T).
    pub fn invariants(&self) -> Result<(i64, u64, DiscriminantDecomposition)> {
        let d = self.det_doubled();
        let c = self.content();
        let dec = fundamental_decompose(-d)?;
        Ok((d, c, dec))
    }
}

/// The divisor set S_T = { d > 0 : d | c(T), gcd(d, Np) = 1, -D_T/d^2 = 0, 1 mod 4 }.
///
/// Note d | c(T) forces d^2 | D_T, so -D_T/d^2 is always an integer here.
pub fn divisor_set(t: &HalfIntegralMatrix, n: u64, p: u64) -> Vec<u64> {
    let dt = t.det_doubled();
    let np = n * p;
    divisors(t.content())
        .into_iter()
        .filter(|&d| d.gcd(&np) == 1)
        .filter(|&d| {
            let q = -dt / (d * d) as i64;
            matches!(q.rem_euclid(4), 0 | 1)
        })
        .collect()
}

/// For d in S_T, decompose -D_T/d^2 and check the conductor relation:
/// the fundamental part is unchanged and the conductor scales by 1/d.
pub fn divisor_consistency(
    t: &HalfIntegralMatrix,
    d: u64,
    n: u64,
    p: u64,
) -> Result<DiscriminantDecomposition> {
    if !divisor_set(t, n, p).contains(&d) {
        return Err(Error::NotInDivisorSet { d: d as i64 });
    }
    let dt = t.det_doubled();
    let whole = fundamental_decompose(-dt)?;
    let part = fundamental_decompose(-dt / (d * d) as i64)?;
    debug_assert_eq!(whole.d, part.d);
    debug_assert_eq!(whole.f, d * part.f);
    Ok(part)
}

/// Integer square root (floor) of a nonnegative BigInt.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative());
    n.sqrt()
}

/// Is n a perfect square?
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}
