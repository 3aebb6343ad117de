//! p-adic logarithms: the Iwasawa branch (Teichmueller roots of unity are
//! killed) and the Tate-parameter branch log_q with log_q(q) = 0.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::element::PadicElement;
use crate::error::Error;
use crate::Result;

/// Teichmueller representative of a unit: the (p-1)-st root of unity
/// congruent to x mod p, computed by iterating x -> x^p.
pub fn teichmueller(x: &PadicElement) -> Result<PadicElement> {
    let (_, val, prec) = x
        .unit_part()
        .map(|(u, v, n)| (u.clone(), v, n))
        .ok_or_else(|| Error::Padic("teichmueller of zero".into()))?;
    if val != 0 {
        return Err(Error::Padic("teichmueller requires a unit".into()));
    }
    let p = x.prime();
    let mut cur = x.clone();
    // x^{p^k} converges; prec iterations are enough since agreement improves
    // by one digit per step
    for _ in 0..=prec {
        let next = cur.pow_mod(p);
        if next.eq_to_precision(&cur) {
            return Ok(next);
        }
        cur = next;
    }
    Ok(cur)
}

/// Iwasawa logarithm of a unit: log of the principal part <x> = x/omega(x),
/// by the series log(1 + t) = sum (-1)^{n+1} t^n / n with guard digits for
/// the divisions by n.
pub fn iwasawa_log(x: &PadicElement) -> Result<PadicElement> {
    let p = x.prime();
    match x.valuation() {
        Some(0) => {}
        _ => return Err(Error::Padic("iwasawa_log requires a unit".into())),
    }
    let target_prec = x.precision();
    // guard digits to absorb divisions by n in the series
    let guard = (ilog(p, target_prec as u64) + 2) as u32;
    let work = target_prec + guard;
    let lifted = lift_precision(x, work);
    let omega = teichmueller(&lifted)?;
    let principal = lifted.div(&omega)?;
    let one = PadicElement::from_i64(1, p, work);
    let t = principal.sub(&one);
    if t.is_zero() {
        return Ok(PadicElement::exact_zero(p));
    }
    debug_assert!(t.valuation().unwrap_or(1) >= 1);
    // sum until the term valuation clears the target
    let mut acc = PadicElement::exact_zero(p);
    let mut t_pow = t.clone();
    let mut n = 1i64;
    loop {
        let term = t_pow
            .scale_ratio(&BigInt::from(if n % 2 == 1 { 1 } else { -1 }), &BigInt::from(n))?;
        acc = acc.add(&term);
        let t_val = t.valuation().unwrap();
        if (n + 1) * t_val - ilog(p, (n + 1) as u64) > (target_prec as i64) + 1 {
            break;
        }
        t_pow = t_pow.mul(&t);
        n += 1;
    }
    // the input is only known mod p^{target_prec} (it is a unit), so the
    // logarithm is too: cap the absolute precision rather than fabricate
    // guard digits
    Ok(acc.add(&PadicElement::approx_zero(p, target_prec as i64)))
}

/// The branch of log with log_q(q) = 0 (q of positive valuation):
/// log_q(x) = log(unit x) - (v(x)/v(q)) * log(unit q).
pub fn branch_log_q(x: &PadicElement, q: &PadicElement) -> Result<PadicElement> {
    let p = x.prime();
    assert_eq!(p, q.prime());
    let vq = match q.valuation() {
        Some(v) if v > 0 => v,
        _ => {
            return Err(Error::Padic(
                "branch parameter q must have positive valuation (Tate parameter shape)".into(),
            ))
        }
    };
    let vx = x
        .valuation()
        .ok_or_else(|| Error::Padic("branch_log_q of zero".into()))?;
    let ux = unit_of(x)?;
    let uq = unit_of(q)?;
    let log_ux = iwasawa_log(&ux)?;
    let log_uq = iwasawa_log(&uq)?;
    let correction = log_uq.scale_ratio(&BigInt::from(vx), &BigInt::from(vq))?;
    Ok(log_ux.sub(&correction))
}

fn unit_of(x: &PadicElement) -> Result<PadicElement> {
    let (u, _, n) = x
        .unit_part()
        .ok_or_else(|| Error::Padic("unit part of zero".into()))?;
    Ok(PadicElement::from_bigint(u, x.prime(), n))
}

fn lift_precision(x: &PadicElement, prec: u32) -> PadicElement {
    // representation already stores the unit exactly mod p^{rel}; lifting
    // just reinterprets the known digits (extra digits are honest zeros of
    // the chosen lift, standard for series evaluation)
    match x.unit_part() {
        Some((u, v, _)) => {
            let p = x.prime();
            let shifted = u * BigInt::from(p).pow((v.max(0)) as u32);
            let mut e = PadicElement::from_bigint(&shifted, p, prec);
            if v < 0 {
                e = e
                    .scale_ratio(&BigInt::from(1), &BigInt::from(p).pow((-v) as u32))
                    .unwrap();
            }
            e
        }
        None => x.clone(),
    }
}

fn ilog(p: u64, mut n: u64) -> i64 {
    let mut k = 0i64;
    while n >= p {
        n /= p;
        k += 1;
    }
    k
}

/// exp for elements of valuation >= 2 (term valuations are then strictly
/// increasing), used only to validate the logarithm in tests.
pub fn exp(x: &PadicElement) -> Result<PadicElement> {
    let p = x.prime();
    if x.is_zero() {
        return Ok(PadicElement::from_i64(1, p, crate::padic::DEFAULT_PRECISION));
    }
    let v = x.valuation().unwrap();
    if v < 2 {
        return Err(Error::Padic("exp requires valuation >= 2".into()));
    }
    let target = x.precision();
    let guard = (2 * ilog(p, target as u64) + 4) as u32;
    let work = target + guard;
    let lifted = lift_precision(x, work);
    let mut acc = PadicElement::from_i64(1, p, work);
    let mut term = PadicElement::from_i64(1, p, work);
    let mut n = 1i64;
    loop {
        term = term.mul(&lifted).scale_ratio(&BigInt::from(1), &BigInt::from(n))?;
        match term.valuation() {
            Some(tv) if tv <= target as i64 + 1 => acc = acc.add(&term),
            _ => break,
        }
        n += 1;
        assert!(n < 10_000, "exp series failed to converge");
    }
    Ok(acc.truncate(target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn el(x: i64) -> PadicElement {
        PadicElement::from_i64(x, 5, 20)
    }

    #[test]
    fn log_of_one_and_torsion() {
        assert!(iwasawa_log(&el(1)).unwrap().is_zero());
        // Teichmueller lifts are killed
        for r in 1..5i64 {
            let w = teichmueller(&el(r)).unwrap();
            // w^{p-1} = 1
            assert!(w.pow(4).eq_to_precision(&el(1)));
            assert!(iwasawa_log(&w).unwrap().is_zero(), "omega({r})");
        }
    }

    #[test]
    fn log_matches_direct_series_on_one_plus_p() {
        // log(1 + p) = sum (-1)^{n+1} p^n / n, evaluated independently over
        // exact rationals and reduced at precision 20
        let p = 5u64;
        let x = el(6); // 1 + 5
        let got = iwasawa_log(&x).unwrap();
        let mut series = num_rational::BigRational::from(BigInt::from(0));
        // terms up to n = 40 are far beyond 5^-20
        for n in 1..=40i64 {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let term = num_rational::BigRational::new(
                BigInt::from(sign) * BigInt::from(5).pow(n as u32),
                BigInt::from(n),
            );
            series += term;
        }
        let expect = PadicElement::from_rational(&series, p, 20).unwrap();
        assert!(got.eq_to_precision(&expect.truncate(got.precision())));
    }

    #[test]
    fn log_is_a_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..500 {
            let a = rng.gen_range(1..100_000i64);
            let b = rng.gen_range(1..100_000i64);
            if a % 5 == 0 || b % 5 == 0 {
                continue;
            }
            let (x, y) = (el(a), el(b));
            let lhs = iwasawa_log(&x.mul(&y)).unwrap();
            let rhs = iwasawa_log(&x).unwrap().add(&iwasawa_log(&y).unwrap());
            assert!(lhs.eq_to_precision(&rhs), "a = {a}, b = {b}");
        }
    }

    #[test]
    fn log_exp_roundtrip_on_1_plus_p2() {
        for k in [25i64, 50, 75, 150, 625] {
            let x = el(k); // valuation >= 2
            let e = exp(&x).unwrap();
            let back = iwasawa_log(&e).unwrap();
            assert!(
                back.eq_to_precision(&x.truncate(back.precision())),
                "k = {k}"
            );
        }
    }

    #[test]
    fn branch_log_examples() {
        let p = 5u64;
        let q = PadicElement::from_i64(35, p, 20); // v(q) = 1, unit 7
        // log_q(q) = 0 exactly (to precision)
        assert!(branch_log_q(&q, &q).unwrap().is_zero());
        // log_q(q^n) = 0
        let q3 = q.mul(&q).mul(&q);
        assert!(branch_log_q(&q3, &q).unwrap().is_zero());
        // on units the branch term vanishes
        let u = el(7);
        let lhs = branch_log_q(&u, &q).unwrap();
        let rhs = iwasawa_log(&u).unwrap();
        assert!(lhs.eq_to_precision(&rhs));
        // q must have positive valuation
        assert!(branch_log_q(&u, &el(7)).is_err());
        let _ = BigInt::one();
    }

    #[test]
    fn branch_log_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let p = 5u64;
        let q = PadicElement::from_i64(15, p, 20);
        for _ in 0..500 {
            let a = rng.gen_range(1..50_000i64) * 5i64.pow(rng.gen_range(0..3));
            let b = rng.gen_range(1..50_000i64) * 5i64.pow(rng.gen_range(0..3));
            let (x, y) = (
                PadicElement::from_i64(a, p, 20),
                PadicElement::from_i64(b, p, 20),
            );
            let lhs = branch_log_q(&x.mul(&y), &q).unwrap();
            let rhs = branch_log_q(&x, &q)
                .unwrap()
                .add(&branch_log_q(&y, &q).unwrap());
            assert!(lhs.eq_to_precision(&rhs), "a = {a}, b = {b}");
        }
    }
}
