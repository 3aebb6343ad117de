//! Hecke operators, Atkin-Lehner involutions, and the star involution on
//! the quotient space, all realized through their action on paths:
//!
//!   T_l {r, s} = sum_i { M_i r, M_i s }
//!
//! with M_i the standard degeneracy matrices [[l, 0], [0, 1]] (for l not
//! dividing the level) and [[1, j], [0, l]], j = 0..l-1.

use num_traits::Zero;

use super::p1::{xgcd, MatI};
use super::space::{Cusp, ModularSymbolSpace};
use crate::error::Error;
use crate::linalg::QMatrix;
use crate::Result;

impl ModularSymbolSpace {
    /// Matrix of an operator defined by a family of integer matrices acting
    /// on paths; columns are images of the quotient basis vectors.
    fn operator_from_mats(&self, mats: &[MatI]) -> QMatrix {
        let mut out = QMatrix::zero(self.dim, self.dim);
        for k in 0..self.dim {
            let g = self.basis_lift(k);
            let r = Cusp::from_i64(g.b, g.d); // g * 0
            let s = Cusp::from_i64(g.a, g.c); // g * oo
            for m in mats {
                let v = self.path(&r.apply(m), &s.apply(m));
                for i in 0..self.dim {
                    if !v[i].is_zero() {
                        out[(i, k)] += &v[i];
                    }
                }
            }
        }
        out
    }

    /// The SL_2 lift of the generator realizing quotient basis vector k.
    fn basis_lift(&self, k: usize) -> MatI {
        use num_traits::One;
        // the basis vector k is the class of a free generator; find it
        for (i, &(c, d)) in self.p1.iter().enumerate() {
            let coords = self.manin_symbol(c as i64, d as i64).unwrap();
            let nz: Vec<usize> = (0..self.dim).filter(|&t| !coords[t].is_zero()).collect();
            if nz == [k] && coords[k].is_one() {
                return self.lifts[i];
            }
        }
        unreachable!("every quotient basis vector is realized by a generator")
    }

    /// Hecke operator T_l for a prime l not dividing the level, or U_l for
    /// l dividing it.
    pub fn hecke_matrix(&self, ell: u64) -> QMatrix {
        let l = ell as i64;
        let mut mats: Vec<MatI> = (0..l)
            .map(|j| MatI {
                a: 1,
                b: j,
                c: 0,
                d: l,
            })
            .collect();
        if self.level % ell != 0 {
            mats.push(MatI {
                a: l,
                b: 0,
                c: 0,
                d: 1,
            });
        }
        self.operator_from_mats(&mats)
    }

    /// The star involution {r, s} -> {-r, -s}.
    pub fn star_matrix(&self) -> QMatrix {
        self.operator_from_mats(&[MatI {
            a: -1,
            b: 0,
            c: 0,
            d: 1,
        }])
    }

    /// Atkin-Lehner involution W_l for l exactly dividing the level.
    pub fn atkin_lehner_matrix(&self, ell: u64) -> Result<QMatrix> {
        let n = self.level;
        if ell == 0 || n % ell != 0 || (n / ell) % ell == 0 {
            return Err(Error::BadAtkinLehnerPrime { ell, level: n });
        }
        // [[l*u, -v], [N, l]] with l*u + (N/l)*v = 1 has determinant l
        let (g, u, v) = xgcd(ell as i64, (n / ell) as i64);
        debug_assert_eq!(g, 1);
        let w = MatI {
            a: ell as i64 * u,
            b: -v,
            c: n as i64,
            d: ell as i64,
        };
        debug_assert_eq!(w.det(), ell as i64);
        Ok(self.operator_from_mats(&[w]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, Rat};
    use num_traits::Zero;

    /// Restrict an operator to the cuspidal subspace: solve K X = M K.
    fn restrict_to_cuspidal(space: &ModularSymbolSpace, m: &QMatrix) -> QMatrix {
        let k = &space.cuspidal_basis;
        let dim_c = k.len();
        // build K as a dim x dim_c matrix
        let mut km = QMatrix::zero(space.dim, dim_c);
        for (j, col) in k.iter().enumerate() {
            for i in 0..space.dim {
                km[(i, j)] = col[i].clone();
            }
        }
        let mk = m.mul(&km);
        // solve km * x = mk column by column via rref of [km | mk]
        let mut aug = QMatrix::zero(space.dim, dim_c + dim_c);
        for i in 0..space.dim {
            for j in 0..dim_c {
                aug[(i, j)] = km[(i, j)].clone();
                aug[(i, dim_c + j)] = mk[(i, j)].clone();
            }
        }
        let pivots = aug.rref();
        let mut out = QMatrix::zero(dim_c, dim_c);
        for (row, &pc) in pivots.iter().enumerate() {
            assert!(pc < dim_c, "operator does not preserve the cuspidal subspace");
            for j in 0..dim_c {
                out[(pc, j)] = aug[(row, dim_c + j)].clone();
            }
        }
        out
    }

    #[test]
    fn hecke_operators_commute_on_cuspidal() {
        for level in [11u64, 15, 21] {
            let space = ModularSymbolSpace::build(level).unwrap();
            let primes: Vec<u64> = (2..=20).filter(|&x| crate::arith::is_prime(x)).collect();
            let mats: Vec<QMatrix> = primes
                .iter()
                .map(|&l| restrict_to_cuspidal(&space, &space.hecke_matrix(l)))
                .collect();
            for i in 0..mats.len() {
                for j in i + 1..mats.len() {
                    assert_eq!(
                        mats[i].mul(&mats[j]),
                        mats[j].mul(&mats[i]),
                        "level {level}: T_{} and T_{}",
                        primes[i],
                        primes[j]
                    );
                }
            }
        }
    }

    #[test]
    fn star_is_an_involution_commuting_with_hecke() {
        for level in [11u64, 15] {
            let space = ModularSymbolSpace::build(level).unwrap();
            let star = space.star_matrix();
            let id = QMatrix::identity(space.dim);
            assert_eq!(star.mul(&star), id, "level {level}");
            let t2 = space.hecke_matrix(2);
            assert_eq!(star.mul(&t2), t2.mul(&star));
        }
    }

    #[test]
    fn atkin_lehner_squares_to_identity_on_cuspidal() {
        for (level, ell) in [(11u64, 11u64), (15, 3), (15, 5), (21, 3), (21, 7)] {
            let space = ModularSymbolSpace::build(level).unwrap();
            let w = space.atkin_lehner_matrix(ell).unwrap();
            let wc = restrict_to_cuspidal(&space, &w);
            let dim_c = space.cuspidal_basis.len();
            assert_eq!(wc.mul(&wc), QMatrix::identity(dim_c), "W_{ell} at level {level}");
        }
        let space = ModularSymbolSpace::build(12).unwrap();
        assert!(space.atkin_lehner_matrix(2).is_err()); // 4 | 12
        assert!(space.atkin_lehner_matrix(5).is_err()); // 5 does not divide 12
    }

    #[test]
    fn hecke_eigenvalue_at_level_11_via_trace() {
        // dim S_2(Gamma_0(11)) = 1, so the cuspidal restriction of T_l is
        // scalar a_l on both sign components: trace = 2 a_l.
        let space = ModularSymbolSpace::build(11).unwrap();
        let expect = [(2u64, -2i64), (3, -1), (5, 1), (7, -2), (13, 4)];
        for (l, a) in expect {
            let tc = restrict_to_cuspidal(&space, &space.hecke_matrix(l));
            let tr: Rat = (0..tc.rows).map(|i| tc[(i, i)].clone()).fold(Rat::zero(), |x, y| x + y);
            assert_eq!(tr, rat(2 * a), "T_{l} at level 11");
        }
    }
}
