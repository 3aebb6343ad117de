//! Rational newform eigenlines: locating simultaneous integral Hecke
//! eigen-functionals on the quotient, sign-split by the star involution,
//! and the period/L-value pairings they induce.
//!
//! A slot stores the minus functional (the one entering half-integral
//! weight constructions) normalized so its first nonzero coordinate is 1,
//! which pins the period normalization once and for all; every exported
//! statement downstream is a ratio or vanishing statement.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::space::{Cusp, ModularSymbolSpace};
use crate::arith::{self, kronecker_i64};
use crate::error::Error;
use crate::linalg::{QMatrix, Rat};
use crate::Result;

#[derive(Debug, Clone)]
pub enum NewformSelector {
    /// Expect exactly one rational newform at this level.
    Unique,
    /// Pick the i-th eigenline in the deterministic search order.
    Index(usize),
    /// Match prescribed eigenvalues a_l.
    Eigenvalues(Vec<(u64, i64)>),
}

/// A rational weight-2 newform located inside a modular symbol space.
#[derive(Debug, Clone)]
pub struct NewformSlot {
    pub level: u64,
    pub space: Arc<ModularSymbolSpace>,
    /// a_l for primes l up to the Hecke bound
    pub eigenvalues: BTreeMap<u64, i64>,
    /// w_l for primes exactly dividing the level
    pub atkin_lehner: BTreeMap<u64, i64>,
    /// row functional on the quotient, star-eigenvalue -1, first nonzero
    /// coordinate normalized to 1
    pub minus_functional: Vec<Rat>,
    /// same with star-eigenvalue +1 (used by even twists)
    pub plus_functional: Vec<Rat>,
    pub hecke_bound: u64,
}

pub const DEFAULT_HECKE_BOUND: u64 = 100;

/// Left kernel of m (functionals lambda with lambda * m = 0), as rows.
fn left_kernel(m: &QMatrix) -> Vec<Vec<Rat>> {
    m.transpose().kernel()
}

/// Integral eigenvalue candidates at l: the Hasse window for good primes,
/// {-1, 0, 1} for primes dividing the level.
fn eigen_candidates(level: u64, ell: u64) -> Vec<i64> {
    if level % ell == 0 {
        vec![-1, 0, 1]
    } else {
        let bound = (2.0 * (ell as f64).sqrt()).floor() as i64;
        (-bound..=bound).collect()
    }
}

/// Rows spanning { x * basis : x * basis * m = a * x * basis }.
fn refine(basis: &[Vec<Rat>], m: &QMatrix, a: i64) -> Vec<Vec<Rat>> {
    if basis.is_empty() {
        return Vec::new();
    }
    let dim = basis[0].len();
    // w = basis * (m - a I), rows indexed like basis
    let mut w = QMatrix::zero(basis.len(), dim);
    for (i, lam) in basis.iter().enumerate() {
        let img = m.apply_left(lam);
        for j in 0..dim {
            w[(i, j)] = &img[j] - &lam[j] * crate::linalg::rat(a);
        }
    }
    // x with x * w = 0
    left_kernel(&w)
        .into_iter()
        .map(|x| {
            let mut v = vec![Rat::zero(); dim];
            for (xi, lam) in x.iter().zip(basis.iter()) {
                if !xi.is_zero() {
                    for j in 0..dim {
                        if !lam[j].is_zero() {
                            v[j] += xi * &lam[j];
                        }
                    }
                }
            }
            v
        })
        .collect()
}

fn normalize_functional(mut v: Vec<Rat>) -> Vec<Rat> {
    let lead = v.iter().find(|x| !x.is_zero()).cloned();
    if let Some(lead) = lead {
        for x in &mut v {
            *x = &*x / &lead;
        }
    }
    v
}

/// All rational eigen-functionals in the given star-eigenspace, returned
/// with their (partial) eigenvalue maps, in deterministic order.
fn rational_eigenlines(
    space: &ModularSymbolSpace,
    sign: i64,
    discovery_primes: &[u64],
) -> Vec<(BTreeMap<u64, i64>, Vec<Rat>)> {
    let star = space.star_matrix();
    let mut shifted = star.clone();
    for i in 0..space.dim {
        shifted[(i, i)] -= crate::linalg::rat(sign);
    }
    let v0 = left_kernel(&shifted);
    let mut branches: Vec<(BTreeMap<u64, i64>, Vec<Vec<Rat>>)> = vec![(BTreeMap::new(), v0)];
    for &ell in discovery_primes {
        let m = space.hecke_matrix(ell);
        let mut next = Vec::new();
        for (eigs, basis) in branches {
            if basis.is_empty() {
                continue;
            }
            for a in eigen_candidates(space.level, ell) {
                let sub = refine(&basis, &m, a);
                if !sub.is_empty() {
                    let mut e = eigs.clone();
                    e.insert(ell, a);
                    next.push((e, sub));
                }
            }
        }
        branches = next;
        if branches.iter().all(|(_, b)| b.len() == 1) {
            break;
        }
    }
    branches
        .into_iter()
        .filter(|(_, b)| b.len() == 1)
        .map(|(e, mut b)| (e, normalize_functional(b.pop().unwrap())))
        .collect()
}

impl NewformSlot {
    pub fn find(space: Arc<ModularSymbolSpace>, selector: NewformSelector) -> Result<Self> {
        Self::find_with_bound(space, selector, DEFAULT_HECKE_BOUND)
    }

    pub fn find_with_bound(
        space: Arc<ModularSymbolSpace>,
        selector: NewformSelector,
        hecke_bound: u64,
    ) -> Result<Self> {
        let discovery: Vec<u64> = (2..=23).filter(|&x| arith::is_prime(x)).collect();
        let lines = rational_eigenlines(&space, -1, &discovery);
        let level = space.level;
        let chosen: Vec<_> = match &selector {
            NewformSelector::Unique => {
                if lines.len() > 1 {
                    return Err(Error::AmbiguousEigenline {
                        level,
                        count: lines.len(),
                    });
                }
                lines
            }
            NewformSelector::Index(i) => lines.into_iter().skip(*i).take(1).collect(),
            NewformSelector::Eigenvalues(want) => lines
                .into_iter()
                .filter(|(eigs, _)| {
                    want.iter()
                        .all(|(l, a)| eigs.get(l).map_or(true, |got| got == a))
                })
                .collect(),
        };
        let Some((partial_eigs, minus_functional)) = chosen.into_iter().next() else {
            return Err(Error::NoRationalEigenline { level });
        };

        // extend eigenvalues to all primes up to the bound
        let mut eigenvalues = BTreeMap::new();
        let mut hecke_cache: BTreeMap<u64, QMatrix> = BTreeMap::new();
        let mut ell = 2u64;
        while ell <= hecke_bound {
            let m = space.hecke_matrix(ell);
            let a = eigenvalue_on_line(&minus_functional, &m)?;
            if let Some(&known) = partial_eigs.get(&ell) {
                debug_assert_eq!(known, a);
            }
            if level % ell != 0 {
                // Hasse bound, exact
                if a * a > 4 * ell as i64 {
                    return Err(Error::NoRationalEigenline { level });
                }
            } else if !(-1..=1).contains(&a) {
                return Err(Error::NoRationalEigenline { level });
            }
            eigenvalues.insert(ell, a);
            hecke_cache.insert(ell, m);
            ell += 1;
            while ell <= hecke_bound && !arith::is_prime(ell) {
                ell += 1;
            }
        }

        // the plus functional carries the same eigenvalue system
        let plus_lines = rational_eigenlines(&space, 1, &discovery);
        let plus_functional = plus_lines
            .into_iter()
            .find(|(eigs, _)| eigs.iter().all(|(l, a)| eigenvalues.get(l) == Some(a)))
            .map(|(_, v)| v)
            .ok_or(Error::NoRationalEigenline { level })?;

        // Atkin-Lehner signs at primes exactly dividing the level
        let mut atkin_lehner = BTreeMap::new();
        for (p, e) in arith::factor(level) {
            if e == 1 {
                let w = space.atkin_lehner_matrix(p)?;
                let s = eigenvalue_on_line(&minus_functional, &w)?;
                debug_assert!(s == 1 || s == -1);
                atkin_lehner.insert(p, s);
            }
        }

        Ok(NewformSlot {
            level,
            space,
            eigenvalues,
            atkin_lehner,
            minus_functional,
            plus_functional,
            hecke_bound,
        })
    }

    /// Hecke eigenvalue a_l for a prime l within the bound.
    pub fn a_prime(&self, ell: u64) -> Result<i64> {
        self.eigenvalues
            .get(&ell)
            .copied()
            .ok_or_else(|| Error::MissingCoefficient(format!("a_{ell} beyond the Hecke bound")))
    }

    /// Fourier coefficient a_n by multiplicativity:
    /// a_{l^{k+1}} = a_l a_{l^k} - l a_{l^{k-1}} at good l, a_{l^k} = a_l^k
    /// at primes dividing the level.
    pub fn coefficient(&self, n: u64) -> Result<i64> {
        if n == 0 {
            return Err(Error::MissingCoefficient("a_0 is not defined".into()));
        }
        let mut out = 1i64;
        for (p, e) in arith::factor(n) {
            let ap = self.a_prime(p)?;
            let val = if self.level % p == 0 {
                ap.pow(e)
            } else {
                let mut prev = 1i64; // a_{p^0}
                let mut cur = ap; // a_{p^1}
                for _ in 1..e {
                    let next = ap * cur - p as i64 * prev;
                    prev = cur;
                    cur = next;
                }
                if e == 0 {
                    1
                } else {
                    cur
                }
            };
            out *= val;
        }
        Ok(out)
    }

    /// Atkin-Lehner eigenvalue w_l for l exactly dividing the level.
    pub fn atkin_lehner_sign(&self, ell: u64) -> Result<i64> {
        if self.level % ell != 0 || (self.level / ell) % ell == 0 {
            return Err(Error::BadAtkinLehnerPrime {
                ell,
                level: self.level,
            });
        }
        self.atkin_lehner
            .get(&ell)
            .copied()
            .ok_or_else(|| Error::MissingCoefficient(format!("w_{ell}")))
    }

    /// Period pairing I(f, P, r, s) at weight 2: P is a constant polynomial,
    /// the value is P * <minus functional, {r, s}>, an exact rational.
    pub fn period_integral(&self, constant_poly: &Rat, r: &Cusp, s: &Cusp) -> Rat {
        let v = self.space.path(r, s);
        let mut acc = Rat::zero();
        for (a, b) in self.minus_functional.iter().zip(v.iter()) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc * constant_poly
    }

    /// Normalized twisted central value: sum over a mod |d| of
    /// chi_d(a) {oo, a/|d|} paired against the functional of sign chi_d(-1).
    /// The rational value depends on the functional normalization; its
    /// vanishing does not, and is the exported predicate.
    pub fn twisted_l_value(&self, d: i64) -> Result<Rat> {
        if !arith::is_fundamental(d) && d != 1 {
            return Err(Error::NotFundamental(d));
        }
        let m = BigInt::from(d.unsigned_abs()).gcd_with(self.level);
        if m != 1 {
            return Err(Error::NotCoprimeToLevel(d));
        }
        let functional = if kronecker_i64(d, -1) == -1 {
            &self.minus_functional
        } else {
            &self.plus_functional
        };
        let abs_d = d.unsigned_abs() as i64;
        let mut acc = vec![Rat::zero(); self.space.dim];
        for a in 1..abs_d {
            let chi = kronecker_i64(d, a);
            if chi == 0 {
                continue;
            }
            let v = self
                .space
                .symbol_from_infinity(&Cusp::from_i64(a, abs_d));
            for i in 0..self.space.dim {
                if !v[i].is_zero() {
                    if chi == 1 {
                        acc[i] += &v[i];
                    } else {
                        acc[i] -= &v[i];
                    }
                }
            }
        }
        let mut out = Rat::zero();
        for (a, b) in functional.iter().zip(acc.iter()) {
            if !a.is_zero() && !b.is_zero() {
                out += a * b;
            }
        }
        Ok(out)
    }

    /// Sign of the functional equation of L(f, chi_d, s):
    /// -chi_d(-level) * prod of the Atkin-Lehner eigenvalues.
    pub fn functional_equation_sign(&self, d: i64) -> Result<i64> {
        let m = BigInt::from(d.unsigned_abs()).gcd_with(self.level);
        if m != 1 {
            return Err(Error::NotCoprimeToLevel(d));
        }
        let mut prod = 1i64;
        for (_, w) in self.atkin_lehner.iter() {
            prod *= w;
        }
        Ok(-(kronecker_i64(d, -(self.level as i64)) as i64) * prod)
    }
}

trait GcdWith {
    fn gcd_with(&self, n: u64) -> u64;
}
impl GcdWith for BigInt {
    fn gcd_with(&self, n: u64) -> u64 {
        use num_integer::Integer;
        self.gcd(&BigInt::from(n)).to_u64().unwrap()
    }
}

/// The exact integer a with lambda * m = a * lambda; errors when the line
/// is not preserved or the ratio is not an integer.
fn eigenvalue_on_line(lambda: &[Rat], m: &QMatrix) -> Result<i64> {
    let img = m.apply_left(lambda);
    let lead = lambda
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Error::MissingCoefficient("zero functional".into()))?;
    let ratio = &img[lead] / &lambda[lead];
    for j in 0..lambda.len() {
        let expect = &ratio * &lambda[j];
        if expect != img[j] {
            return Err(Error::MissingCoefficient(
                "functional is not an eigenvector".into(),
            ));
        }
    }
    if !ratio.denom().is_one() {
        return Err(Error::MissingCoefficient(
            "eigenvalue is not an integer".into(),
        ));
    }
    ratio.numer().to_i64().ok_or_else(|| {
        Error::MissingCoefficient("eigenvalue overflows machine integers".into())
    })
}
