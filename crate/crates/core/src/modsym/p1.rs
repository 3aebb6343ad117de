//! The projective line P^1(Z/N): normalization, enumeration, and lifting
//! of Manin-symbol indices (c : d) to elements of SL_2(Z).

use num_integer::Integer;

/// Extended gcd on i64: returns (g, x, y) with a*x + b*y = g >= 0.
pub fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of a mod n (n >= 1, gcd(a, n) = 1).
pub fn inv_mod(a: i64, n: i64) -> i64 {
    let (g, x, _) = xgcd(a.rem_euclid(n), n);
    debug_assert_eq!(g, 1, "inv_mod of a non-unit");
    x.rem_euclid(n)
}

/// Canonical representative of (u : v) in P^1(Z/N), or None when
/// gcd(u, v, N) > 1. The first coordinate of the representative is
/// gcd(u, N); the second is minimized over the stabilizing units.
pub fn p1_normalize(n: u64, u: i64, v: i64) -> Option<(u64, u64)> {
    let ni = n as i64;
    if n == 1 {
        return Some((0, 0));
    }
    let u = u.rem_euclid(ni);
    let v = v.rem_euclid(ni);
    if u == 0 {
        return if v.gcd(&ni) == 1 { Some((0, 1)) } else { None };
    }
    let g = u.gcd(&ni);
    if g.gcd(&v) != 1 {
        return None;
    }
    // s with s*u = g mod n, lifted to a unit mod n
    let s0 = inv_mod(u / g, ni / g);
    let mut s = s0;
    while s.gcd(&ni) != 1 {
        s += ni / g;
    }
    let v1 = (s * v).rem_euclid(ni);
    // minimize over units t = 1 mod n/g
    let mut vmin = v1;
    let mut t = 1i64;
    for _ in 0..g {
        if t.gcd(&ni) == 1 {
            let cand = (t * v1).rem_euclid(ni);
            if cand < vmin {
                vmin = cand;
            }
        }
        t += ni / g;
    }
    Some((g as u64, vmin as u64))
}

/// All elements of P^1(Z/N) in a deterministic order.
pub fn p1_list(n: u64) -> Vec<(u64, u64)> {
    if n == 1 {
        return vec![(0, 0)];
    }
    let mut set = std::collections::BTreeSet::new();
    for g in crate::arith::divisors(n) {
        if g == n {
            // (0 : 1) class
            set.insert((0, 1));
            continue;
        }
        for v in 0..n {
            if let Some(rep) = p1_normalize(n, g as i64, v as i64) {
                set.insert(rep);
            }
        }
    }
    set.into_iter().collect()
}

/// Small integer 2x2 matrix for the modular-symbol side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatI {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl MatI {
    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }
}

/// Lift a P^1(Z/N) element (c : d) to a matrix [[a, b], [c0, d0]] in
/// SL_2(Z) with (c0, d0) = (c, d) mod N.
pub fn lift_to_sl2(n: u64, c: u64, d: u64) -> MatI {
    let ni = n as i64;
    let (mut c0, mut d0) = (c as i64, d as i64);
    if n == 1 {
        return MatI {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        };
    }
    if c0 == 0 && d0 == 0 {
        unreachable!("(0 : 0) is not in P^1 for N > 1");
    }
    if c0 == 0 {
        // normalized as (0 : 1)
        debug_assert_eq!(d0.gcd(&ni), 1);
        d0 = if d0 == 1 { 1 } else { d0 };
        let dd = d0;
        // choose d0' = dd + k n with gcd(0, d0') = d0' = +-1: only possible when dd = 1 mod n
        // lift: pick d0' = 1 by scaling the class; for normalized input dd = 1.
        if dd != 1 {
            // scale is legal: (0 : d) = (0 : 1) in P^1
        }
        return MatI {
            a: 1,
            b: 0,
            c: 0,
            d: 1,
        };
    }
    // ensure gcd(c0, d0) = 1 by shifting d0 by multiples of n
    let mut k = 0i64;
    loop {
        let cand = d0 + k * ni;
        if c0.gcd(&cand) == 1 {
            d0 = cand;
            break;
        }
        k += 1;
        assert!(k < 10_000, "lift_to_sl2 failed to find a coprime lift");
    }
    if c0 < 0 {
        c0 = c0.rem_euclid(ni);
    }
    let (g, x, y) = xgcd(d0, c0);
    debug_assert_eq!(g, 1);
    // a*d0 - b*c0 = 1 with a = x, b = -y
    MatI {
        a: x,
        b: -y,
        c: c0,
        d: d0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// psi(N) = N * prod_{p | N} (1 + 1/p), the size of P^1(Z/N).
    fn psi(n: u64) -> u64 {
        let mut r = n;
        for (p, _) in crate::arith::factor(n) {
            r = r / p * (p + 1);
        }
        r
    }

    #[test]
    fn p1_sizes() {
        for n in 1..=60u64 {
            assert_eq!(p1_list(n).len() as u64, psi(n), "N = {n}");
        }
    }

    #[test]
    fn normalize_is_class_invariant() {
        for n in [12u64, 15, 21, 35] {
            let ni = n as i64;
            for c in 0..ni {
                for d in 0..ni {
                    let Some(rep) = p1_normalize(n, c, d) else {
                        continue;
                    };
                    // scaling by units must not change the representative
                    for t in 1..ni {
                        if t.gcd(&ni) != 1 {
                            continue;
                        }
                        assert_eq!(p1_normalize(n, t * c, t * d), Some(rep));
                    }
                }
            }
        }
    }

    #[test]
    fn lift_is_unimodular_and_congruent() {
        for n in [1u64, 5, 11, 15, 21, 24] {
            for &(c, d) in &p1_list(n) {
                let m = lift_to_sl2(n, c, d);
                assert_eq!(m.det(), 1);
                if n > 1 {
                    let ni = n as i64;
                    // bottom row congruent to a unit multiple of (c, d)
                    let got = p1_normalize(n, m.c, m.d);
                    assert_eq!(got, Some((c, d)));
                }
            }
        }
    }

    #[test]
    fn xgcd_basics() {
        let (g, x, y) = xgcd(12, 18);
        assert_eq!(g, 6);
        assert_eq!(12 * x + 18 * y, 6);
        assert_eq!(inv_mod(3, 7), 5);
    }
}
