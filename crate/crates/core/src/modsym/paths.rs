//! Conversion of modular-symbol paths {r, s} into quotient coordinates.
//!
//! {oo, p/q} unrolls along the continued-fraction convergents of p/q: each
//! consecutive pair of convergents is a unimodular path, i.e. a single
//! Manin symbol. Paths between arbitrary cusps are differences of two such
//! expansions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::space::{Cusp, ModularSymbolSpace};
use crate::linalg::Rat;

impl ModularSymbolSpace {
    /// Quotient coordinates of {oo, x}.
    pub fn symbol_from_infinity(&self, x: &Cusp) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); self.dim];
        if x.is_infinity() {
            return acc;
        }
        // Convergent denominators of x = p/q with q_{-1} = 0, q_{-2} = 1;
        // the term {p_{j-1}/q_{j-1}, p_j/q_j} is the Manin symbol
        // (q_j : (-1)^{j-1} q_{j-1}).
        let (mut a, mut b) = (x.num.clone(), x.den.clone());
        debug_assert!(b.is_positive());
        let level = BigInt::from(self.level);
        let mut qm1 = BigInt::zero(); // q_{j-1}
        let mut qm2 = BigInt::from(1); // q_{j-2}
        let mut j_even = true;
        loop {
            let (quot, rem) = a.div_mod_floor(&b);
            let qj = &quot * &qm1 + &qm2;
            let d_part = if j_even { -qm1.clone() } else { qm1.clone() };
            let c = qj.mod_floor(&level).to_i64().unwrap();
            let d = d_part.mod_floor(&level).to_i64().unwrap();
            let coords = self
                .manin_symbol(c, d)
                .expect("unimodular pair reduced mod N is always in P^1");
            for (t, v) in acc.iter_mut().zip(coords.iter()) {
                if !v.is_zero() {
                    *t += v;
                }
            }
            qm2 = std::mem::replace(&mut qm1, qj);
            j_even = !j_even;
            if rem.is_zero() {
                break;
            }
            a = std::mem::replace(&mut b, rem);
        }
        acc
    }

    /// Quotient coordinates of the path {r, s}.
    pub fn path(&self, r: &Cusp, s: &Cusp) -> Vec<Rat> {
        let to = self.symbol_from_infinity(s);
        let from = self.symbol_from_infinity(r);
        to.into_iter()
            .zip(from)
            .map(|(t, f)| t - f)
            .collect()
    }
}
