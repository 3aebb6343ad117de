//! The p-adic element type: p^valuation * unit + O(p^{valuation + precision}).
//!
//! Exact zero is a distinguished value (no fabricated digits); approximate
//! zeros remember only the O(p^k) bound they are known to. Arithmetic
//! tracks relative precision pessimistically: a sum is known modulo the
//! smaller of the two absolute precisions, a product keeps the smaller
//! relative precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    /// Exactly zero at infinite precision.
    ExactZero,
    /// Zero to the stated absolute precision: O(p^{abs_prec}).
    ApproxZero { abs_prec: i64 },
    /// p^val * unit + O(p^{val + rel_prec}), unit a unit mod p^{rel_prec}.
    Unit {
        val: i64,
        unit: BigInt,
        rel_prec: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicElement {
    p: u64,
    repr: Repr,
}

fn p_pow(p: u64, k: u32) -> BigInt {
    BigInt::from(p).pow(k)
}

impl PadicElement {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exact_zero(p: u64) -> Self {
        PadicElement {
            p,
            repr: Repr::ExactZero,
        }
    }

    pub fn approx_zero(p: u64, abs_prec: i64) -> Self {
        PadicElement {
            p,
            repr: Repr::ApproxZero { abs_prec },
        }
    }

    /// Canonicalize an integer mantissa at relative precision `prec`.
    pub fn from_bigint(x: &BigInt, p: u64, prec: u32) -> Self {
        assert!(p >= 3 && crate::arith::is_prime(p), "p must be an odd prime");
        if x.is_zero() {
            return Self::exact_zero(p);
        }
        let bp = BigInt::from(p);
        let mut val = 0i64;
        let mut u = x.clone();
        while (&u % &bp).is_zero() {
            u /= &bp;
            val += 1;
        }
        let modulus = p_pow(p, prec);
        let unit = u.mod_floor(&modulus);
        PadicElement {
            p,
            repr: Repr::Unit {
                val,
                unit,
                rel_prec: prec,
            },
        }
    }

    pub fn from_i64(x: i64, p: u64, prec: u32) -> Self {
        Self::from_bigint(&BigInt::from(x), p, prec)
    }

    /// Exact rational a/b embedded at relative precision `prec`; errors when
    /// the denominator is divisible by p beyond representability (never: the
    /// valuation absorbs it).
    pub fn from_ratio(num: &BigInt, den: &BigInt, p: u64, prec: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Padic("division by zero".into()));
        }
        if num.is_zero() {
            return Ok(Self::exact_zero(p));
        }
        let a = Self::from_bigint(num, p, prec);
        let b = Self::from_bigint(den, p, prec);
        a.div(&b)
    }

    pub fn from_rational(x: &num_rational::BigRational, p: u64, prec: u32) -> Result<Self> {
        Self::from_ratio(x.numer(), x.denom(), p, prec)
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::ExactZero)
    }

    /// Indistinguishable from zero at the known precision.
    pub fn is_zero(&self) -> bool {
        !matches!(self.repr, Repr::Unit { .. })
    }

    /// Valuation; None for (exact or approximate) zero.
    pub fn valuation(&self) -> Option<i64> {
        match &self.repr {
            Repr::Unit { val, .. } => Some(*val),
            _ => None,
        }
    }

    /// Relative precision in digits (u32::MAX for exact zero).
    pub fn precision(&self) -> u32 {
        match &self.repr {
            Repr::ExactZero => u32::MAX,
            Repr::ApproxZero { .. } => 0,
            Repr::Unit { rel_prec, .. } => *rel_prec,
        }
    }

    /// Absolute precision: the value is known modulo p^{abs_precision()}.
    pub fn abs_precision(&self) -> Option<i64> {
        match &self.repr {
            Repr::ExactZero => None,
            Repr::ApproxZero { abs_prec } => Some(*abs_prec),
            Repr::Unit { val, rel_prec, .. } => Some(val + *rel_prec as i64),
        }
    }

    fn assert_same_prime(&self, o: &Self) {
        assert_eq!(self.p, o.p, "mixed primes in p-adic arithmetic");
    }

    pub fn neg(&self) -> Self {
        match &self.repr {
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } => {
                let modulus = p_pow(self.p, *rel_prec);
                PadicElement {
                    p: self.p,
                    repr: Repr::Unit {
                        val: *val,
                        unit: (modulus.clone() - unit).mod_floor(&modulus),
                        rel_prec: *rel_prec,
                    },
                }
            }
            _ => self.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.assert_same_prime(o);
        match (&self.repr, &o.repr) {
            (Repr::ExactZero, _) => o.clone(),
            (_, Repr::ExactZero) => self.clone(),
            (Repr::ApproxZero { abs_prec }, _) => add_zero(o, *abs_prec),
            (_, Repr::ApproxZero { abs_prec }) => add_zero(self, *abs_prec),
            (
                Repr::Unit {
                    val: v1,
                    unit: u1,
                    rel_prec: n1,
                },
                Repr::Unit {
                    val: v2,
                    unit: u2,
                    rel_prec: n2,
                },
            ) => {
                let abs = (v1 + *n1 as i64).min(v2 + *n2 as i64);
                let v = (*v1).min(*v2);
                // value = p^v (u1 p^{v1 - v} + u2 p^{v2 - v}) mod p^{abs - v}
                let width = abs - v;
                if width <= 0 {
                    return Self::approx_zero(self.p, abs);
                }
                let modulus = p_pow(self.p, width as u32);
                let t1 = u1 * p_pow(self.p, (v1 - v) as u32);
                let t2 = u2 * p_pow(self.p, (v2 - v) as u32);
                let sum = (t1 + t2).mod_floor(&modulus);
                if sum.is_zero() {
                    return Self::approx_zero(self.p, abs);
                }
                // renormalize: strip p-powers, losing absolute nothing
                let bp = BigInt::from(self.p);
                let mut shift = 0i64;
                let mut unit = sum;
                while (&unit % &bp).is_zero() {
                    unit /= &bp;
                    shift += 1;
                }
                let val = v + shift;
                let rel = (abs - val).max(0) as u32;
                if rel == 0 {
                    return Self::approx_zero(self.p, abs);
                }
                PadicElement {
                    p: self.p,
                    repr: Repr::Unit {
                        val,
                        unit: unit.mod_floor(&p_pow(self.p, rel)),
                        rel_prec: rel,
                    },
                }
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.assert_same_prime(o);
        match (&self.repr, &o.repr) {
            (Repr::ExactZero, _) | (_, Repr::ExactZero) => Self::exact_zero(self.p),
            (Repr::ApproxZero { abs_prec }, _) => mul_zero(o, *abs_prec, self.p),
            (_, Repr::ApproxZero { abs_prec }) => mul_zero(self, *abs_prec, self.p),
            (
                Repr::Unit {
                    val: v1,
                    unit: u1,
                    rel_prec: n1,
                },
                Repr::Unit {
                    val: v2,
                    unit: u2,
                    rel_prec: n2,
                },
            ) => {
                let rel = (*n1).min(*n2);
                let modulus = p_pow(self.p, rel);
                PadicElement {
                    p: self.p,
                    repr: Repr::Unit {
                        val: v1 + v2,
                        unit: (u1 * u2).mod_floor(&modulus),
                        rel_prec: rel,
                    },
                }
            }
        }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        if k == 0 || self.is_exact_zero() {
            return Self::exact_zero(self.p);
        }
        let prec = match &self.repr {
            Repr::Unit { rel_prec, .. } => *rel_prec,
            _ => crate::padic::DEFAULT_PRECISION,
        };
        self.mul(&Self::from_i64(k, self.p, prec))
    }

    /// Exact rational scalar multiple.
    pub fn scale_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self> {
        let prec = match &self.repr {
            Repr::Unit { rel_prec, .. } => *rel_prec,
            _ => crate::padic::DEFAULT_PRECISION,
        };
        let r = Self::from_ratio(num, den, self.p, prec)?;
        Ok(self.mul(&r))
    }

    pub fn inverse(&self) -> Result<Self> {
        match &self.repr {
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } => {
                let modulus = p_pow(self.p, *rel_prec);
                let inv = mod_inverse(unit, &modulus)
                    .ok_or_else(|| Error::Padic("unit inversion failed".into()))?;
                Ok(PadicElement {
                    p: self.p,
                    repr: Repr::Unit {
                        val: -val,
                        unit: inv,
                        rel_prec: *rel_prec,
                    },
                })
            }
            _ => Err(Error::Padic("inverse of zero".into())),
        }
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    /// x^e computed on the unit part via modular exponentiation.
    pub fn pow_mod(&self, e: u64) -> Self {
        match &self.repr {
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } => {
                let modulus = p_pow(self.p, *rel_prec);
                PadicElement {
                    p: self.p,
                    repr: Repr::Unit {
                        val: val * e as i64,
                        unit: unit.modpow(&BigInt::from(e), &modulus),
                        rel_prec: *rel_prec,
                    },
                }
            }
            Repr::ExactZero => self.clone(),
            Repr::ApproxZero { abs_prec } => PadicElement::approx_zero(self.p, abs_prec * e as i64),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        if self.is_exact_zero() {
            return if e == 0 {
                Self::from_i64(1, self.p, crate::padic::DEFAULT_PRECISION)
            } else {
                self.clone()
            };
        }
        let prec = match &self.repr {
            Repr::Unit { rel_prec, .. } => *rel_prec,
            _ => crate::padic::DEFAULT_PRECISION,
        };
        let mut acc = Self::from_i64(1, self.p, prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Equal to stated (joint) precision.
    pub fn eq_to_precision(&self, o: &Self) -> bool {
        self.sub(o).is_zero()
    }

    /// The unit part as an integer mod p^{rel_prec}.
    pub fn unit_part(&self) -> Option<(&BigInt, i64, u32)> {
        match &self.repr {
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } => Some((unit, *val, *rel_prec)),
            _ => None,
        }
    }

    /// Truncate to at most `prec` relative digits.
    pub fn truncate(&self, prec: u32) -> Self {
        match &self.repr {
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } if *rel_prec > prec => PadicElement {
                p: self.p,
                repr: Repr::Unit {
                    val: *val,
                    unit: unit.mod_floor(&p_pow(self.p, prec)),
                    rel_prec: prec,
                },
            },
            _ => self.clone(),
        }
    }

    /// Serialization as p-adic:<mantissa>:<precision> where
    /// mantissa = unit * p^val (val >= 0) or a /p^k suffix for negative
    /// valuation.
    pub fn serialize(&self) -> String {
        match &self.repr {
            Repr::ExactZero => "p-adic:0:exact".to_string(),
            Repr::ApproxZero { abs_prec } => format!("p-adic:0:O{abs_prec}"),
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } => {
                if *val >= 0 {
                    let mantissa = unit * p_pow(self.p, *val as u32);
                    format!("p-adic:{mantissa}:{rel_prec}")
                } else {
                    format!("p-adic:{unit}/{}^{}:{rel_prec}", self.p, -val)
                }
            }
        }
    }

    pub fn parse(s: &str, p: u64) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 || parts[0] != "p-adic" {
            return Err(Error::Parse(format!("bad p-adic literal: {s}")));
        }
        if parts[1] == "0" {
            return match parts[2] {
                "exact" => Ok(Self::exact_zero(p)),
                o if o.starts_with('O') => {
                    let k: i64 = o[1..]
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad zero precision: {s}")))?;
                    Ok(Self::approx_zero(p, k))
                }
                _ => Err(Error::Parse(format!("bad zero literal: {s}"))),
            };
        }
        let prec: u32 = parts[2]
            .parse()
            .map_err(|_| Error::Parse(format!("bad precision in: {s}")))?;
        if let Some((num, denpow)) = parts[1].split_once('/') {
            let num: BigInt = num
                .parse()
                .map_err(|_| Error::Parse(format!("bad mantissa in: {s}")))?;
            let (base, exp) = denpow
                .split_once('^')
                .ok_or_else(|| Error::Parse(format!("bad denominator in: {s}")))?;
            let base: u64 = base
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator base in: {s}")))?;
            if base != p {
                return Err(Error::Parse(format!("denominator prime mismatch in: {s}")));
            }
            let exp: u32 = exp
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator exponent in: {s}")))?;
            let den = p_pow(p, exp);
            Self::from_ratio(&num, &den, p, prec)
        } else {
            let mantissa: BigInt = parts[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad mantissa in: {s}")))?;
            Ok(Self::from_bigint(&mantissa, p, prec))
        }
    }
}

fn add_zero(x: &PadicElement, zero_abs: i64) -> PadicElement {
    // x + O(p^zero_abs)
    match x.unit_part() {
        Some((unit, val, rel)) => {
            let abs = (val + rel as i64).min(zero_abs);
            if abs <= val {
                return PadicElement::approx_zero(x.p, abs);
            }
            let rel_new = (abs - val) as u32;
            PadicElement {
                p: x.p,
                repr: Repr::Unit {
                    val,
                    unit: unit.mod_floor(&p_pow(x.p, rel_new)),
                    rel_prec: rel_new,
                },
            }
        }
        None => {
            let other = x.abs_precision().unwrap_or(i64::MAX);
            PadicElement::approx_zero(x.p, other.min(zero_abs))
        }
    }
}

fn mul_zero(x: &PadicElement, zero_abs: i64, p: u64) -> PadicElement {
    // x * O(p^zero_abs) = O(p^{val(x) + zero_abs})
    match x.valuation() {
        Some(v) => PadicElement::approx_zero(p, v + zero_abs),
        None => match x.abs_precision() {
            Some(a) => PadicElement::approx_zero(p, a + zero_abs),
            None => PadicElement::exact_zero(p),
        },
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

impl std::fmt::Display for PadicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.repr {
            Repr::ExactZero => write!(f, "0"),
            Repr::ApproxZero { abs_prec } => write!(f, "O({}^{})", self.p, abs_prec),
            Repr::Unit {
                val,
                unit,
                rel_prec,
            } => write!(
                f,
                "{}^{} * {} + O({}^{})",
                self.p,
                val,
                unit,
                self.p,
                val + *rel_prec as i64
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn el(x: i64) -> PadicElement {
        PadicElement::from_i64(x, 5, 20)
    }

    #[test]
    fn canonical_form() {
        let x = el(50);
        assert_eq!(x.valuation(), Some(2));
        let (u, _, _) = x.unit_part().unwrap();
        assert_eq!(u.to_i64(), Some(2));
        assert!(PadicElement::from_i64(0, 5, 20).is_exact_zero());
    }

    #[test]
    fn cancellation_costs_precision() {
        let a = el(1).add(&el(125)); // 1 + 5^3
        let b = el(1);
        let d = a.sub(&b); // 5^3 exactly representable
        assert_eq!(d.valuation(), Some(3));
        // relative precision dropped: known mod 5^20, value 5^3 -> 17 digits
        assert_eq!(d.precision(), 17);
        // exact zero from x - x
        let z = el(7).sub(&el(7));
        assert!(z.is_zero());
        assert_eq!(z.abs_precision(), Some(20));
    }

    #[test]
    fn inverse_and_division() {
        let x = el(7);
        let inv = x.inverse().unwrap();
        let one = x.mul(&inv);
        assert!(one.eq_to_precision(&el(1)));
        assert!(el(0).inverse().is_err());
        let r = PadicElement::from_ratio(&BigInt::from(1), &BigInt::from(10), 5, 20).unwrap();
        assert_eq!(r.valuation(), Some(-1));
    }

    #[test]
    fn serialization_roundtrip() {
        for x in [1i64, -7, 50, 125, 3, 12345] {
            let e = el(x);
            let s = e.serialize();
            let back = PadicElement::parse(&s, 5).unwrap();
            assert!(e.eq_to_precision(&back), "{x}: {s}");
        }
        let r = PadicElement::from_ratio(&BigInt::from(3), &BigInt::from(25), 5, 20).unwrap();
        let back = PadicElement::parse(&r.serialize(), 5).unwrap();
        assert!(r.eq_to_precision(&back));
        assert!(PadicElement::parse("p-adic:0:exact", 5)
            .unwrap()
            .is_exact_zero());
    }

    proptest! {
        #[test]
        fn ring_axioms(a in -2000i64..2000, b in -2000i64..2000, c in -2000i64..2000) {
            let (x, y, z) = (el(a), el(b), el(c));
            // commutativity and associativity to stated precision
            prop_assert!(x.add(&y).eq_to_precision(&y.add(&x)));
            prop_assert!(x.mul(&y).eq_to_precision(&y.mul(&x)));
            prop_assert!(x.add(&y).add(&z).eq_to_precision(&x.add(&y.add(&z))));
            prop_assert!(x.mul(&y).mul(&z).eq_to_precision(&x.mul(&y.mul(&z))));
            // distributivity
            prop_assert!(x.mul(&y.add(&z)).eq_to_precision(&x.mul(&y).add(&x.mul(&z))));
            // agreement with integer arithmetic
            prop_assert!(x.add(&y).eq_to_precision(&el(a + b)));
            prop_assert!(x.mul(&y).eq_to_precision(&el(a * b)));
        }
    }
}
