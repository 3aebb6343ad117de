//! Reduction theory for binary quadratic forms of positive nonsquare
//! discriminant, with tracked transformation matrices.
//!
//! A form (A, B, C) with disc = B^2 - 4AC = D > 0 nonsquare is *reduced*
//! when |sqrt(D) - 2|A|| < B < sqrt(D). Reduced forms of a given
//! discriminant fall into cycles under the reduction step rho, one cycle
//! per SL_2(Z)-class, and walking a cycle once produces the fundamental
//! automorph of the form. Everything below is exact; transforms are
//! accumulated so equivalences come with certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::BinaryQuadraticForm;

/// 2x2 integer matrix acting on forms from the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn identity() -> Self {
        Mat2 {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse_unimodular(&self) -> Mat2 {
        debug_assert!(self.det().is_one());
        Mat2 {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Mat2 {
        Mat2 {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// Entries reduced mod n (n >= 1), for period arguments in SL_2(Z/n).
    pub fn mod_n(&self, n: u64) -> [u64; 4] {
        let nn = BigInt::from(n);
        let r = |x: &BigInt| -> u64 {
            use num_traits::ToPrimitive;
            x.mod_floor(&nn).to_u64().unwrap()
        };
        [r(&self.a), r(&self.b), r(&self.c), r(&self.d)]
    }
}

fn mul_mod(x: &[u64; 4], y: &[u64; 4], n: u64) -> [u64; 4] {
    let n = n as u128;
    let m = |a: u64, b: u64| -> u128 { (a as u128) * (b as u128) % n };
    [
        ((m(x[0], y[0]) + m(x[1], y[2])) % n) as u64,
        ((m(x[0], y[1]) + m(x[1], y[3])) % n) as u64,
        ((m(x[2], y[0]) + m(x[3], y[2])) % n) as u64,
        ((m(x[2], y[1]) + m(x[3], y[3])) % n) as u64,
    ]
}

/// Reduced forms have coefficients bounded by the discriminant, so cycles
/// are stored with machine integers.
pub type SmallForm = (i64, i64, i64);

/// Reduction state for one form: the reduced representative, the transform
/// reaching it, and (lazily) the full cycle.
#[derive(Debug, Clone)]
pub struct ReducedData {
    pub reduced: SmallForm,
    pub transform: Mat2,
    pub cycle: Vec<SmallForm>,
    pub cycle_transforms: Vec<Mat2>,
    pub automorph: Mat2,
}

fn to_small(q: &BinaryQuadraticForm) -> Option<SmallForm> {
    use num_traits::ToPrimitive;
    Some((q.a.to_i64()?, q.b.to_i64()?, q.c.to_i64()?))
}

/// floor(sqrt(d)) for d > 0.
fn isqrt64(d: i64) -> i64 {
    let mut r = (d as f64).sqrt() as i64;
    while r * r > d {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= d {
        r += 1;
    }
    r
}

pub fn is_reduced(f: SmallForm, s: i64) -> bool {
    let (a, b, _) = f;
    let abs2a = 2 * a.abs();
    b > 0 && b <= s && s + 1 - b <= abs2a && abs2a <= s + b
}

/// Translate B into the normalization window for the current A, returning
/// the shifted form together with the T^m transform used.
fn normalize_step(q: &BinaryQuadraticForm, disc: i64, s: i64) -> (BinaryQuadraticForm, Mat2) {
    let a = &q.a;
    debug_assert!(!a.is_zero());
    let two_a = BigInt::from(2) * a;
    let abs2a = two_a.abs();
    // window (lo, lo + 2|A|]
    let lo: BigInt = if a.abs() > BigInt::from(s) {
        -a.abs()
    } else {
        BigInt::from(s) - &abs2a
    };
    // b' = lo + 1 + ((b - lo - 1) mod 2|A|)
    let shift = (&q.b - &lo - BigInt::one()).mod_floor(&abs2a);
    let b_new = lo + BigInt::one() + shift;
    let m = (&b_new - &q.b) / &two_a;
    let c_new = (&b_new * &b_new - BigInt::from(disc)) / (BigInt::from(4) * a);
    let q_new = BinaryQuadraticForm {
        a: a.clone(),
        b: b_new,
        c: c_new,
    };
    let t = Mat2 {
        a: BigInt::one(),
        b: m,
        c: BigInt::zero(),
        d: BigInt::one(),
    };
    debug_assert_eq!(q.action_unchecked(&t), q_new);
    (q_new, t)
}

/// One rho step: swap outer coefficients via S = [[0,-1],[1,0]] then normalize.
fn rho_step(q: &BinaryQuadraticForm, disc: i64, s: i64) -> (BinaryQuadraticForm, Mat2) {
    let swapped = BinaryQuadraticForm {
        a: q.c.clone(),
        b: -q.b.clone(),
        c: q.a.clone(),
    };
    let smat = Mat2::new(0, -1, 1, 0);
    let (normalized, t) = normalize_step(&swapped, disc, s);
    (normalized, smat.mul(&t))
}

/// Reduce q, producing the cycle data used by equivalence tests.
///
/// Requires disc(q) > 0 nonsquare and fitting in i64 (desk scale), while
/// the form coefficients themselves may be arbitrarily large.
pub fn reduce_with_cycle(q: &BinaryQuadraticForm, disc: i64) -> ReducedData {
    let s = isqrt64(disc);
    debug_assert!(s * s != disc, "discriminant must be nonsquare");
    let mut g = Mat2::identity();
    let mut cur = q.clone();
    if cur.a.is_zero() {
        // move a nonzero value into the leading slot; C != 0 since disc nonsquare
        let smat = Mat2::new(0, -1, 1, 0);
        cur = cur.action_unchecked(&smat);
        g = g.mul(&smat);
    }
    let (mut cur, t) = normalize_step(&cur, disc, s);
    g = g.mul(&t);
    let mut guard = 0usize;
    loop {
        if let Some(f) = to_small(&cur) {
            if is_reduced(f, s) {
                break;
            }
        }
        let (next, t) = rho_step(&cur, disc, s);
        cur = next;
        g = g.mul(&t);
        guard += 1;
        assert!(guard < 100_000, "reduction failed to terminate");
    }
    let first = to_small(&cur).expect("reduced coefficients fit in i64");

    // walk the cycle once
    let mut cycle = vec![first];
    let mut cycle_transforms = vec![Mat2::identity()];
    let mut walker = cur.clone();
    let mut h = Mat2::identity();
    loop {
        let (next, t) = rho_step(&walker, disc, s);
        h = h.mul(&t);
        walker = next;
        let f = to_small(&walker).expect("cycle coefficients fit in i64");
        if f == first {
            break;
        }
        cycle.push(f);
        cycle_transforms.push(h.clone());
        assert!(cycle.len() < 100_000, "cycle failed to close");
    }
    // h now satisfies reduced|h = reduced: the fundamental automorph of the
    // reduced form; conjugate back to q.
    let automorph = canonical_automorph(q, &g.mul(&h).mul(&g.inverse_unimodular()), disc);
    ReducedData {
        reduced: first,
        transform: g,
        cycle,
        cycle_transforms,
        automorph,
    }
}

/// Normalize an automorph of q to the generator with t > 0, u > 0 in the
/// parametrization [[(t+Bu)/2, Cu], [-Au, (t-Bu)/2]], t^2 - D u^2 = 4.
fn canonical_automorph(q: &BinaryQuadraticForm, m: &Mat2, disc: i64) -> Mat2 {
    debug_assert_eq!(q.action_unchecked(m), *q);
    let mut m = m.clone();
    if m.trace().is_negative() {
        m = m.neg();
    }
    // u = -c_entry / A  (A != 0 after reduction bootstrap; for forms with
    // A = 0 the caller never requests automorphs)
    debug_assert!(!q.a.is_zero());
    let (u, rem) = (-&m.c).div_rem(&q.a);
    debug_assert!(rem.is_zero());
    let m = if u.is_negative() {
        m.inverse_unimodular()
    } else {
        m
    };
    debug_assert!(!m.trace().is_negative());
    let t = m.trace();
    let u = (-&m.c) / &q.a;
    debug_assert!(
        (&t * &t - BigInt::from(disc) * &u * &u) == BigInt::from(4),
        "automorph does not satisfy the Pell-type equation"
    );
    m
}

/// Some g in SL_2(Z) with q1|g = q2, if the forms are properly equivalent.
pub fn sl2_transporter(q1: &BinaryQuadraticForm, q2: &BinaryQuadraticForm) -> Option<Mat2> {
    let disc = q1.disc_i64()?;
    if q2.disc_i64()? != disc {
        return None;
    }
    let r1 = reduce_with_cycle(q1, disc);
    let r2 = reduce_with_cycle(q2, disc);
    transporter_from_data(&r1, &r2)
}

pub fn transporter_from_data(r1: &ReducedData, r2: &ReducedData) -> Option<Mat2> {
    let pos = r1.cycle.iter().position(|&f| f == r2.reduced)?;
    let g = r1
        .transform
        .mul(&r1.cycle_transforms[pos])
        .mul(&r2.transform.inverse_unimodular());
    Some(g)
}

/// Decide Gamma_0(n)-equivalence: q1|gamma = q2 for some gamma with
/// lower-left entry divisible by n. Returns the witness when equivalent.
///
/// The transporter coset is g0 * {+-U^k} with U the fundamental automorph
/// of q2; the lower-left entry mod n is periodic in k with period dividing
/// the order of U in SL_2(Z/n), so scanning one period is a complete test.
pub fn gamma0_transporter(
    q1: &BinaryQuadraticForm,
    q2: &BinaryQuadraticForm,
    n: u64,
) -> Option<Mat2> {
    let disc = q1.disc_i64()?;
    if q2.disc_i64()? != disc {
        return None;
    }
    let r1 = reduce_with_cycle(q1, disc);
    let r2 = reduce_with_cycle(q2, disc);
    gamma0_transporter_from_data(&r1, &r2, n)
}

pub fn gamma0_transporter_from_data(r1: &ReducedData, r2: &ReducedData, n: u64) -> Option<Mat2> {
    let g0 = transporter_from_data(r1, r2)?;
    if n <= 1 {
        return Some(g0);
    }
    let u = &r2.automorph;
    let u_mod = u.mod_n(n);
    let ord = order_mod(&u_mod, n);
    let mut cur = g0.mod_n(n);
    let mut k = 0u64;
    loop {
        if cur[2] == 0 {
            // reconstruct the witness exactly
            let mut gamma = g0.clone();
            let mut upow = Mat2::identity();
            for _ in 0..k {
                upow = upow.mul(u);
            }
            gamma = gamma.mul(&upow);
            debug_assert!(gamma.c.mod_floor(&BigInt::from(n)).is_zero());
            return Some(gamma);
        }
        k += 1;
        if k >= ord {
            return None;
        }
        cur = mul_mod(&cur, &u_mod, n);
    }
}

fn order_mod(m: &[u64; 4], n: u64) -> u64 {
    let id = [1 % n, 0, 0, 1 % n];
    let mut cur = *m;
    let mut k = 1u64;
    let cap = n.saturating_mul(n).saturating_mul(n).saturating_mul(2) + 4;
    while cur != id {
        cur = mul_mod(&cur, m, n);
        k += 1;
        assert!(k <= cap, "automorph order computation exceeded the group bound");
    }
    k
}

/// Minimal solution (x, y), x, y > 0, of x^2 - d y^2 = 1 via the continued
/// fraction of sqrt(d); d > 0 nonsquare.
pub fn pell_minimal(d: i64) -> (BigInt, BigInt) {
    let a0 = isqrt64(d);
    assert!(a0 * a0 != d, "pell_minimal requires a nonsquare argument");
    let big_d = BigInt::from(d);
    let (mut m, mut den, mut a) = (0i64, 1i64, a0);
    let (mut h_prev, mut h) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    let mut guard = 0usize;
    loop {
        if &h * &h - &big_d * &k * &k == BigInt::one() {
            return (h, k);
        }
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        let h_next = BigInt::from(a) * &h + &h_prev;
        let k_next = BigInt::from(a) * &k + &k_prev;
        h_prev = std::mem::replace(&mut h, h_next);
        k_prev = std::mem::replace(&mut k, k_next);
        guard += 1;
        assert!(guard < 1_000_000, "Pell solver failed to terminate");
    }
}

/// All reduced forms of discriminant disc grouped into rho-cycles; the
/// number of cycles is the number of proper SL_2(Z)-classes (the narrow
/// form class number). Used as an independent oracle in tests.
pub fn reduced_cycles(disc: i64) -> Vec<Vec<SmallForm>> {
    let s = isqrt64(disc);
    assert!(disc > 0 && s * s != disc);
    let mut all = std::collections::BTreeSet::new();
    for b in 1..=s {
        if (b * b - disc).rem_euclid(4) != 0 {
            continue;
        }
        let ac = (b * b - disc) / 4; // negative
        // enumerate factorizations ac = a * c with the reduction window on a
        for a in 1..=s {
            for &aa in &[a, -a] {
                if ac % aa != 0 {
                    continue;
                }
                let f = (aa, b, ac / aa);
                if is_reduced(f, s) {
                    all.insert(f);
                }
            }
        }
    }
    let mut cycles = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for &start in &all {
        if seen.contains(&start) {
            continue;
        }
        let mut cyc = Vec::new();
        let mut cur = start;
        loop {
            cyc.push(cur);
            seen.insert(cur);
            let q = BinaryQuadraticForm::from_i64(cur.0, cur.1, cur.2);
            let (next, _) = rho_step(&q, disc, s);
            cur = to_small(&next).unwrap();
            if cur == start {
                break;
            }
        }
        cycles.push(cyc);
    }
    cycles
}
