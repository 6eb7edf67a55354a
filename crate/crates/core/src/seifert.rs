//! Seifert form, monodromy and Lefschetz numbers from the Dynkin matrix `N`.
//!
//! With `N` the strictly upper triangular edge-multiplicity matrix of the
//! Dynkin diagram, the Seifert form is `S = Id + N` and the homological
//! monodromy is `T = (Id + tN)^-1 (Id + N)`. Everything here is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dynkin::Gamma;
use crate::error::{DivideError, Result};
use crate::matrix::IntMatrix;

pub fn matrix_n(gamma: &Gamma) -> IntMatrix {
    let (nm, nd, np) = (gamma.minus_count(), gamma.double_count(), gamma.plus_count());
    let mut n = IntMatrix::zeros(nm + nd + np);
    for i in 0..nm {
        for j in 0..nd {
            n.set(i, nm + j, BigInt::from(gamma.a[i][j]));
        }
        for j in 0..np {
            n.set(i, nm + nd + j, BigInt::from(gamma.c[i][j]));
        }
    }
    for i in 0..nd {
        for j in 0..np {
            n.set(nm + i, nm + nd + j, BigInt::from(gamma.b[i][j]));
        }
    }
    n
}

pub fn seifert_matrix(n: &IntMatrix) -> IntMatrix {
    &IntMatrix::identity(n.dim()) + n
}

/// `(Id + tN)^-1 (Id + N)`, inverting through `Id - tN + tN^2`.
pub fn monodromy_matrix(n: &IntMatrix) -> Result<IntMatrix> {
    let id = IntMatrix::identity(n.dim());
    let nt = n.transpose();
    let nt2 = &nt * &nt;
    if !(&nt2 * &nt).is_zero() {
        return Err(DivideError::Nilpotency);
    }
    let inverse = &(&id - &nt) + &nt2;
    Ok(&inverse * &(&id + n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lefschetz {
    /// `1 - mu + Tr(tN N) - Tr(tN^2 N)`
    #[serde(with = "crate::bigint_serde")]
    pub formula: BigInt,
    /// `1 - Tr(T)`
    #[serde(with = "crate::bigint_serde")]
    pub trace: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub tr_tnn: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub tr_tn2n: BigInt,
}

impl Lefschetz {
    pub fn value(&self) -> &BigInt {
        &self.formula
    }
}

/// Lefschetz number through the trace expansion, cross-checked against `1 - Tr(T)`.
pub fn lefschetz_number(n: &IntMatrix) -> Result<Lefschetz> {
    let nt = n.transpose();
    let tr_tnn = (&nt * n).trace();
    let tr_tn2n = (&(&nt * &nt) * n).trace();
    let formula = BigInt::one() - BigInt::from(n.dim()) + &tr_tnn - &tr_tn2n;
    let trace = BigInt::one() - monodromy_matrix(n)?.trace();
    if formula != trace {
        return Err(DivideError::Internal(format!("Lefschetz routes disagree: {formula} vs {trace}")));
    }
    Ok(Lefschetz { formula, trace, tr_tnn, tr_tn2n })
}

/// `Tr(T^k)` for `k = 1..=depth` by repeated exact multiplication.
pub fn trace_powers(t: &IntMatrix, depth: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(depth);
    let mut power = t.clone();
    for k in 1..=depth {
        out.push(power.trace());
        if k < depth {
            power = &power * t;
        }
    }
    out
}

/// Lefschetz numbers of the iterates, `1 - Tr(T^k)`.
pub fn lefschetz_iterates(traces: &[BigInt]) -> Vec<BigInt> {
    traces.iter().map(|t| BigInt::one() - t).collect()
}

/// Monic characteristic polynomial `det(x Id - T)`, coefficients constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CharPoly {
    #[serde(with = "crate::bigint_serde::vec")]
    pub coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        CharPoly { coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `x^deg p(1/x)`
    pub fn reversed(&self) -> CharPoly {
        CharPoly { coeffs: self.coeffs.iter().rev().cloned().collect() }
    }

    /// True when `x^deg p(1/x) = ±p(x)`.
    pub fn is_reciprocal(&self) -> bool {
        let rev = self.reversed();
        rev == *self || rev.coeffs.iter().zip(&self.coeffs).all(|(a, b)| *a == -b)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// Berkowitz's division-free algorithm.
pub fn char_poly(t: &IntMatrix) -> CharPoly {
    let n = t.dim();
    // highest degree first while building
    let mut p = vec![BigInt::one()];
    for r in 0..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(BigInt::one());
        toeplitz.push(-t.get(r, r));
        // v = A_r^k S for the leading r x r block
        let mut v: Vec<BigInt> = (0..r).map(|i| t.get(i, r).clone()).collect();
        for _ in 0..r {
            let rs: BigInt = (0..r).map(|j| t.get(r, j) * &v[j]).sum();
            toeplitz.push(-rs);
            v = (0..r).map(|i| (0..r).map(|j| t.get(i, j) * &v[j]).sum()).collect();
        }
        let next = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &toeplitz[i - j] * &p[j]).sum())
            .collect();
        p = next;
    }
    p.reverse();
    CharPoly { coeffs: p }
}

/// Power sums of the roots via Newton's identities.
pub fn newton_power_sums(p: &CharPoly, depth: usize) -> Vec<BigInt> {
    let n = p.degree();
    assert!(p.coeffs[n].is_one(), "polynomial must be monic");
    let e = |i: usize| if i <= n { p.coeffs[n - i].clone() } else { BigInt::zero() };
    let mut sums: Vec<BigInt> = Vec::with_capacity(depth);
    for k in 1..=depth {
        let mut s = BigInt::from(k) * e(k);
        for i in 1..k {
            s += e(i) * &sums[k - i - 1];
        }
        sums.push(-s);
    }
    sums
}

/// Signature of a symmetric integer matrix by congruence elimination over the
/// rationals. A zero diagonal with a nonzero off-diagonal entry is eliminated
/// as a hyperbolic 2×2 block, which contributes nothing.
pub fn signature_of(sym: &IntMatrix) -> i64 {
    let n = sym.dim();
    let mut a: Vec<Vec<BigRational>> =
        sym.rows().into_iter().map(|r| r.into_iter().map(BigRational::from_integer).collect()).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut sig = 0i64;
    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let pivot = a[p][p].clone();
            sig += if pivot.is_positive() { 1 } else { -1 };
            for &r in &active {
                let factor = &a[r][p] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for &c in &active {
                    let delta = &factor * &a[p][c];
                    a[r][c] -= delta;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(x, &i)| {
            active[x + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j))
        });
        let Some((i, j)) = pair else { break };
        let b = a[i][j].clone();
        active.retain(|&k| k != i && k != j);
        for &r in &active {
            for &c in &active {
                let delta = (&a[r][i] * &a[j][c] + &a[r][j] * &a[i][c]) / &b;
                a[r][c] -= delta;
            }
        }
    }
    sig
}

/// Signature of `S + tS = 2 Id + N + tN`.
pub fn signature(n: &IntMatrix) -> i64 {
    let s = seifert_matrix(n);
    signature_of(&(&s + &s.transpose()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonodromyReport {
    pub mu: usize,
    pub lefschetz: Lefschetz,
    #[serde(with = "crate::bigint_serde::vec")]
    pub traces: Vec<BigInt>,
    #[serde(with = "crate::bigint_serde::vec")]
    pub lefschetz_iterates: Vec<BigInt>,
    pub char_poly: CharPoly,
    pub signature: i64,
    pub n_cube_zero: bool,
    pub n_square_zero: bool,
}

pub fn monodromy_report(n: &IntMatrix, depth: usize) -> Result<MonodromyReport> {
    let t = monodromy_matrix(n)?;
    let traces = trace_powers(&t, depth);
    let n2 = n * n;
    Ok(MonodromyReport {
        mu: n.dim(),
        lefschetz: lefschetz_number(n)?,
        lefschetz_iterates: lefschetz_iterates(&traces),
        traces,
        char_poly: char_poly(&t),
        signature: signature(n),
        n_cube_zero: (&n2 * n).is_zero(),
        n_square_zero: n2.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn loop_n() -> IntMatrix {
        IntMatrix::from_rows(&[[0, 1], [0, 0]])
    }

    fn lens_n() -> IntMatrix {
        IntMatrix::from_rows(&[[0, 1, 1], [0, 0, 0], [0, 0, 0]])
    }

    /// Faddeev-LeVerrier, used only as an independent check on Berkowitz.
    fn leverrier(t: &IntMatrix) -> CharPoly {
        let n = t.dim();
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        let mut m = IntMatrix::zeros(n);
        for k in 1..=n {
            let mut next = &(t * &m) + &{
                let mut d = IntMatrix::identity(n);
                for i in 0..n {
                    d.set(i, i, c[n - k + 1].clone());
                }
                d
            };
            std::mem::swap(&mut m, &mut next);
            let tr = (t * &m).trace();
            c[n - k] = -tr / BigInt::from(k);
        }
        CharPoly { coeffs: c }
    }

    /// Descartes' rule on a real-rooted polynomial counts positive and negative roots exactly.
    fn descartes_signature(p: &CharPoly) -> i64 {
        let changes = |cs: Vec<BigInt>| {
            let nz: Vec<_> = cs.into_iter().filter(|c| !c.is_zero()).collect();
            nz.windows(2).filter(|w| w[0].is_positive() != w[1].is_positive()).count() as i64
        };
        let pos = changes(p.coeffs.clone());
        let neg = changes(p.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect());
        pos - neg
    }

    #[test]
    fn x1_monodromy_is_identity() {
        let n = IntMatrix::zeros(1);
        assert_eq!(monodromy_matrix(&n).unwrap(), IntMatrix::identity(1));
        assert_eq!(trace_powers(&IntMatrix::identity(1), 3), big(&[1, 1, 1]));
        assert_eq!(char_poly(&IntMatrix::identity(1)), CharPoly::from_i64(&[-1, 1]));
        assert_eq!(signature(&n), 1);
        assert_eq!(*lefschetz_number(&n).unwrap().value(), BigInt::zero());
    }

    #[test]
    fn loop_values() {
        let n = loop_n();
        let t = monodromy_matrix(&n).unwrap();
        assert_eq!(t, IntMatrix::from_rows(&[[1, 1], [-1, 0]]));
        let l = lefschetz_number(&n).unwrap();
        assert_eq!((l.formula.clone(), l.tr_tnn.clone(), l.tr_tn2n.clone()), (0.into(), 1.into(), 0.into()));
        assert_eq!(trace_powers(&t, 6), big(&[1, -1, -2, -1, 1, 2]));
        assert_eq!(char_poly(&t), CharPoly::from_i64(&[1, -1, 1]));
        assert_eq!(signature(&n), 2);
    }

    #[test]
    fn lens_values() {
        let n = lens_n();
        let t = monodromy_matrix(&n).unwrap();
        assert_eq!(t, IntMatrix::from_rows(&[[1, 1, 1], [-1, 0, -1], [-1, -1, 0]]));
        // tS T = S
        let s = seifert_matrix(&n);
        assert_eq!(&s.transpose() * &t, s);
        assert_eq!(trace_powers(&t, 4), big(&[1, -1, 1, 3]));
        assert_eq!(char_poly(&t), CharPoly::from_i64(&[-1, 1, -1, 1]));
        assert_eq!(signature(&n), 3);
        assert_eq!(lefschetz_number(&n).unwrap().formula, BigInt::zero());
    }

    #[test]
    fn newton_examples() {
        assert_eq!(newton_power_sums(&CharPoly::from_i64(&[-1, 1]), 3), big(&[1, 1, 1]));
        assert_eq!(newton_power_sums(&CharPoly::from_i64(&[1, -1, 1]), 6), big(&[1, -1, -2, -1, 1, 2]));
        assert_eq!(newton_power_sums(&CharPoly::from_i64(&[-1, 1, -1, 1]), 4), big(&[1, -1, 1, 3]));
    }

    #[test]
    fn empty_matrix() {
        let n = IntMatrix::zeros(0);
        let l = lefschetz_number(&n).unwrap();
        assert_eq!(l.formula, BigInt::one());
        assert_eq!(char_poly(&n), CharPoly::from_i64(&[1]));
        assert_eq!(trace_powers(&monodromy_matrix(&n).unwrap(), 2), big(&[0, 0]));
        assert_eq!(signature(&n), 0);
    }

    #[test]
    fn nilpotency_guard() {
        let n = IntMatrix::from_rows(&[[0, 1], [1, 0]]);
        assert_eq!(monodromy_matrix(&n).unwrap_err(), DivideError::Nilpotency);
    }

    #[test]
    fn hyperbolic_pivot() {
        let m = IntMatrix::from_rows(&[[0, 1, 0], [1, 0, 2], [0, 2, 0]]);
        assert_eq!(signature_of(&m), descartes_signature(&char_poly(&m)));
        let m = IntMatrix::from_rows(&[[1, 1, 0], [1, 1, 1], [0, 1, 1]]);
        assert_eq!(signature_of(&m), descartes_signature(&char_poly(&m)));
    }

    fn block_n() -> impl Strategy<Value = IntMatrix> {
        (0usize..3, 0usize..4, 0usize..3).prop_flat_map(|(nm, nd, np)| {
            let mu = nm + nd + np;
            proptest::collection::vec(0i64..3, mu * mu).prop_map(move |vals| {
                let mut n = IntMatrix::zeros(mu);
                for i in 0..mu {
                    for j in 0..mu {
                        let bi = (i >= nm) as u8 + (i >= nm + nd) as u8;
                        let bj = (j >= nm) as u8 + (j >= nm + nd) as u8;
                        if bi < bj {
                            n.set(i, j, BigInt::from(vals[i * mu + j]));
                        }
                    }
                }
                n
            })
        })
    }

    proptest! {
        #[test]
        fn block_matrices_satisfy_identities(n in block_n()) {
            let t = monodromy_matrix(&n).unwrap();
            let s = seifert_matrix(&n);
            prop_assert_eq!(&s.transpose() * &t, s.clone());
            prop_assert!(t.det().is_one());
            prop_assert!(s.det().is_one());
            let p = char_poly(&t);
            prop_assert_eq!(&p, &leverrier(&t));
            prop_assert!(p.is_reciprocal());
            prop_assert_eq!(newton_power_sums(&p, 12), trace_powers(&t, 12));
            lefschetz_number(&n).unwrap();
            let sym = &s + &s.transpose();
            prop_assert_eq!(signature(&n), descartes_signature(&char_poly(&sym)));
        }

        #[test]
        fn signature_matches_descartes(vals in proptest::collection::vec(-3i64..4, 16)) {
            let mut m = IntMatrix::zeros(4);
            for i in 0..4 {
                for j in i..4 {
                    m.set(i, j, BigInt::from(vals[i * 4 + j]));
                    m.set(j, i, BigInt::from(vals[i * 4 + j]));
                }
            }
            prop_assert_eq!(signature_of(&m), descartes_signature(&char_poly(&m)));
        }
    }
}
