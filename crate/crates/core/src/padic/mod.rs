//! Fixed-precision p-adic arithmetic and the weight-interpolation toolkit.
//!
//! Elements are stored as p^v * u + O(p^{v + n}) with u a unit mod p^n (or
//! exact zero); precision propagates pessimistically through arithmetic.
//! On top of the ring sit the Iwasawa logarithm (Teichmueller part killed),
//! the branch logarithm log_q normalized by log_q(q) = 0, the Euler
//! stabilization factors, and Newton divided-difference interpolation in
//! the weight variable with derivative at k = 2.

pub mod element;
pub mod interp;
pub mod log;

pub use element::PadicElement;
pub use interp::{product_rule_check, weight_derivative, ProductRuleReport, WeightSeries};
pub use log::{branch_log_q, iwasawa_log};

/// Default relative precision (p-adic digits). Divided differences over
/// nodes spaced by (p-1)p^m lose about m digits per order; 20 leaves
/// headroom at desk scale.
pub const DEFAULT_PRECISION: u32 = 20;

/// The ladder of weights k_m = 2 + (p-1) p^m, m = 0..count-1, the
/// convention shared with data producers for ingested families.
pub fn weight_ladder(p: u64, count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut pm = 1i64;
    for _ in 0..count {
        out.push(2 + (p as i64 - 1) * pm);
        pm *= p as i64;
    }
    out
}

/// The Euler stabilization factor 1 - (d/p) a_p(k)^{-1} p^{k/2 - 1}
/// evaluated p-adically; at k = 2 this is 1 - (d/p) a_p(2)^{-1}.
pub fn euler_factor(d: i64, a_p_inv: &PadicElement, k: i64, p: u64) -> PadicElement {
    assert!(k >= 2 && k % 2 == 0, "weight must be an even integer >= 2");
    let chi = crate::arith::kronecker_i64(d, p as i64);
    let one = PadicElement::from_i64(1, p, a_p_inv.precision());
    if chi == 0 {
        return one;
    }
    let p_pow = PadicElement::from_i64(p as i64, p, a_p_inv.precision()).pow((k / 2 - 1) as u32);
    let term = a_p_inv.mul(&p_pow).mul_i64(chi as i64);
    one.sub(&term)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_convention() {
        assert_eq!(weight_ladder(5, 3), vec![6, 22, 102]);
        assert_eq!(weight_ladder(7, 2), vec![8, 44]);
    }

    #[test]
    fn euler_factor_cases() {
        let p = 5u64;
        // a_p = 1 so a_p^{-1} = 1
        let apinv = PadicElement::from_i64(1, p, 20);
        // ramified symbol: factor 1
        let f = euler_factor(-15, &apinv, 2, p);
        assert!(f.sub(&PadicElement::from_i64(1, p, 20)).is_zero());
        // (d/p) a_p^{-1} = 1: factor 0 (the type-II vanishing configuration)
        // (-11/5) = 1
        assert_eq!(crate::arith::kronecker_i64(-11, 5), 1);
        let f = euler_factor(-11, &apinv, 2, p);
        assert!(f.is_zero());
        // a_p = +-1 at k = 2 gives factor in {0, 2}
        for ap in [1i64, -1] {
            let apinv = PadicElement::from_i64(ap, p, 20);
            for d in [-11i64, -4, -3, -8] {
                let f = euler_factor(d, &apinv, 2, p);
                let two = PadicElement::from_i64(2, p, 20);
                assert!(
                    f.is_zero() || f.sub(&two).is_zero(),
                    "d = {d}, a_p = {ap}"
                );
            }
        }
    }
}
