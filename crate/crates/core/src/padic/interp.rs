//! Weight interpolation: Newton divided differences through sampled
//! weights and the derivative of the interpolant at the center k = 2.
//!
//! The derivative is of the interpolant, not of the underlying function;
//! precision reported on the result already accounts for the valuations of
//! the divided-difference denominators (node gaps are multiples of
//! (p-1)p^m, so each table level costs p-adic digits). Callers supply
//! nodes in the residue class of 2 mod p-1; the ladder helper in the
//! parent module generates the shared convention.

use super::element::PadicElement;
use crate::error::Error;
use crate::Result;

/// Samples (k_i, x(k_i)) of a function of the weight, centered at k = 2.
#[derive(Debug, Clone)]
pub struct WeightSeries {
    pub p: u64,
    pub samples: Vec<(i64, PadicElement)>,
}

pub const CENTER: i64 = 2;

impl WeightSeries {
    pub fn new(p: u64, samples: Vec<(i64, PadicElement)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for (k, v) in &samples {
            if !seen.insert(*k) {
                return Err(Error::DuplicateSampleWeight(*k));
            }
            if (*k - 2).rem_euclid(p as i64 - 1) != 0 {
                return Err(Error::BadWeight {
                    k: *k,
                    reason: format!("not congruent to 2 mod p - 1 = {}", p - 1),
                });
            }
            assert_eq!(v.prime(), p, "sample prime mismatch");
        }
        Ok(WeightSeries { p, samples })
    }

    /// Newton coefficients c_j over the sample nodes, c_j = [x_0..x_j]f.
    fn newton_coefficients(&self) -> Result<Vec<PadicElement>> {
        let n = self.samples.len();
        let mut table: Vec<PadicElement> =
            self.samples.iter().map(|(_, v)| v.clone()).collect();
        let nodes: Vec<i64> = self.samples.iter().map(|(k, _)| *k).collect();
        let mut coeffs = Vec::with_capacity(n);
        coeffs.push(table[0].clone());
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = nodes[i] - nodes[i - level];
                debug_assert_ne!(dx, 0);
                let num = table[i].sub(&table[i - 1]);
                table[i] = num
                    .scale_ratio(&num_bigint::BigInt::from(1), &num_bigint::BigInt::from(dx))?;
            }
            coeffs.push(table[level].clone());
        }
        Ok(coeffs)
    }

    /// Value and derivative of the Newton interpolant at t, by dual-number
    /// Horner evaluation.
    pub fn evaluate_with_derivative(&self, t: i64) -> Result<(PadicElement, PadicElement)> {
        if self.samples.len() < 2 {
            return Err(Error::NotEnoughSamples {
                need: 2,
                got: self.samples.len(),
            });
        }
        let coeffs = self.newton_coefficients()?;
        let nodes: Vec<i64> = self.samples.iter().map(|(k, _)| *k).collect();
        let n = coeffs.len();
        let mut value = coeffs[n - 1].clone();
        let mut deriv = PadicElement::exact_zero(self.p);
        for j in (0..n - 1).rev() {
            // (value, deriv) <- (c_j + (t - x_j) value, value + (t - x_j) deriv)
            let dt = t - nodes[j];
            let new_deriv = value.add(&deriv.mul_i64(dt));
            let new_value = coeffs[j].add(&value.mul_i64(dt));
            deriv = new_deriv;
            value = new_value;
        }
        Ok((value, deriv))
    }
}

/// Derivative at the center k = 2 of the interpolant through the samples.
/// Errors on catastrophic precision loss instead of silencing it.
pub fn weight_derivative(series: &WeightSeries) -> Result<PadicElement> {
    let (_, deriv) = series.evaluate_with_derivative(CENTER)?;
    if !deriv.is_zero() && deriv.precision() == 0 {
        return Err(Error::PrecisionExhausted(format!(
            "derivative at k = 2 retains no significant digits (got {deriv})"
        )));
    }
    Ok(deriv)
}

/// Result of checking the Leibniz rule on sampled series.
#[derive(Debug, Clone)]
pub struct ProductRuleReport {
    pub lhs: PadicElement,
    pub rhs: PadicElement,
    pub agrees: bool,
}

/// d/dk (f g)|_2 against f'(2) g(2) + f(2) g'(2), all three series sampled
/// at the same nodes.
pub fn product_rule_check(
    f: &WeightSeries,
    g: &WeightSeries,
    fg: &WeightSeries,
) -> Result<ProductRuleReport> {
    let nodes = |s: &WeightSeries| s.samples.iter().map(|(k, _)| *k).collect::<Vec<_>>();
    if nodes(f) != nodes(g) || nodes(f) != nodes(fg) {
        return Err(Error::NodeMismatch);
    }
    let (f0, df) = f.evaluate_with_derivative(CENTER)?;
    let (g0, dg) = g.evaluate_with_derivative(CENTER)?;
    let (_, dfg) = fg.evaluate_with_derivative(CENTER)?;
    let rhs = df.mul(&g0).add(&f0.mul(&dg));
    let agrees = dfg.eq_to_precision(&rhs);
    Ok(ProductRuleReport {
        lhs: dfg,
        rhs,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::padic::weight_ladder;

    fn series_of_poly(p: u64, nodes: &[i64], poly: impl Fn(i64) -> i64) -> WeightSeries {
        let samples = nodes
            .iter()
            .map(|&k| (k, PadicElement::from_i64(poly(k), p, 20)))
            .collect();
        WeightSeries::new(p, samples).unwrap()
    }

    #[test]
    fn linear_series_derivative() {
        let p = 5;
        let nodes = weight_ladder(p, 3);
        // x(k) = (k - 2) * c
        for c in [1i64, -3, 7, 40] {
            let s = series_of_poly(p, &nodes, |k| (k - 2) * c);
            let d = weight_derivative(&s).unwrap();
            assert!(d.eq_to_precision(&PadicElement::from_i64(c, p, 20)), "c = {c}");
        }
    }

    #[test]
    fn quadratic_vanishing_derivative() {
        let p = 5;
        // nodes include the center: (k-2)^2 has derivative 0 at 2
        let nodes = [2i64, 2 + 4, 2 + 20];
        let s = series_of_poly(p, &nodes, |k| (k - 2) * (k - 2));
        let d = weight_derivative(&s).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn cubic_exact_derivative() {
        let p = 7;
        let nodes = [2i64, 8, 44, 302];
        // x(k) = 2k^3 - k + 5, symbolic derivative 6k^2 - 1, at 2: 23
        let s = series_of_poly(p, &nodes, |k| 2 * k * k * k - k + 5);
        let d = weight_derivative(&s).unwrap();
        assert!(d.eq_to_precision(&PadicElement::from_i64(23, p, 20)));
        // and the interpolant reproduces values at the center
        let (v, _) = s.evaluate_with_derivative(2).unwrap();
        assert!(v.eq_to_precision(&PadicElement::from_i64(2 * 8 - 2 + 5, p, 20)));
    }

    #[test]
    fn polynomial_exactness_randomized() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(37);
        let p = 5u64;
        for _ in 0..500 {
            let deg = rng.gen_range(1..=3usize);
            let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-20..=20)).collect();
            let nodes = weight_ladder(p, deg + 1);
            let eval = |k: i64| -> i64 {
                let mut acc = 0i64;
                for c in coeffs.iter().rev() {
                    acc = acc * (k - 2) + c;
                }
                acc
            };
            // derivative in (k-2): sum j c_j (k-2)^{j-1}; at k = 2: c_1
            let s = series_of_poly(p, &nodes, eval);
            let d = weight_derivative(&s).unwrap();
            assert!(
                d.eq_to_precision(&PadicElement::from_i64(coeffs[1], p, 20)),
                "coeffs {coeffs:?}"
            );
        }
    }

    #[test]
    fn product_rule_cases() {
        let p = 5;
        let nodes = weight_ladder(p, 5);
        // f linear, g constant
        let f = series_of_poly(p, &nodes, |k| 3 * (k - 2) + 1);
        let g = series_of_poly(p, &nodes, |_| 4);
        let fg = series_of_poly(p, &nodes, |k| (3 * (k - 2) + 1) * 4);
        assert!(product_rule_check(&f, &g, &fg).unwrap().agrees);
        // f = g = (k - 2): both sides zero at 2
        let f = series_of_poly(p, &nodes, |k| k - 2);
        let fg = series_of_poly(p, &nodes, |k| (k - 2) * (k - 2));
        let rep = product_rule_check(&f, &f, &fg).unwrap();
        assert!(rep.agrees && rep.lhs.is_zero() && rep.rhs.is_zero());
        // random polynomial pair at 5 nodes
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let (a, b, c) = (
                rng.gen_range(-9..=9i64),
                rng.gen_range(-9..=9i64),
                rng.gen_range(-9..=9i64),
            );
            let (e, d) = (rng.gen_range(-9..=9i64), rng.gen_range(-9..=9i64));
            let fpoly = move |k: i64| a * (k - 2) * (k - 2) + b * (k - 2) + c;
            let gpoly = move |k: i64| e * (k - 2) + d;
            let f = series_of_poly(p, &nodes, fpoly);
            let g = series_of_poly(p, &nodes, gpoly);
            let fg = series_of_poly(p, &nodes, move |k| fpoly(k) * gpoly(k));
            assert!(product_rule_check(&f, &g, &fg).unwrap().agrees);
        }
        // node mismatch is rejected
        let short = series_of_poly(p, &weight_ladder(p, 3), |k| k);
        assert!(matches!(
            product_rule_check(&short, &f, &fg),
            Err(Error::NodeMismatch)
        ));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let p = 5;
        let a = PadicElement::from_i64(1, p, 20);
        assert!(matches!(
            WeightSeries::new(p, vec![(6, a.clone()), (6, a.clone())]),
            Err(Error::DuplicateSampleWeight(6))
        ));
        assert!(WeightSeries::new(p, vec![(7, a.clone())]).is_err());
        let s = WeightSeries::new(p, vec![(6, a)]).unwrap();
        assert!(matches!(
            weight_derivative(&s),
            Err(Error::NotEnoughSamples { .. })
        ));
    }
}
