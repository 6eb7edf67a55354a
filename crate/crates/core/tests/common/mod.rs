//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use divide_core::IntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub type Dense = Vec<Vec<BigInt>>;

pub fn dense(m: &IntMatrix) -> Dense {
    m.rows()
}

pub fn identity(n: usize) -> Dense {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// `a^k` by `k` plain multiplications.
pub fn naive_pow(a: &Dense, k: usize) -> Dense {
    let mut acc = identity(a.len());
    for _ in 0..k {
        acc = mul(&acc, a);
    }
    acc
}

/// Solves `(Id + tN) X = Id + N` over the rationals by Gauss-Jordan elimination.
pub fn monodromy(n: &IntMatrix) -> Dense {
    let d = n.dim();
    let nn = dense(n);
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let mut lhs: Vec<Vec<BigRational>> =
        (0..d).map(|i| (0..d).map(|j| q(&nn[j][i]) + BigRational::from_integer(BigInt::from((i == j) as i64))).collect()).collect();
    let mut rhs: Vec<Vec<BigRational>> =
        (0..d).map(|i| (0..d).map(|j| q(&nn[i][j]) + BigRational::from_integer(BigInt::from((i == j) as i64))).collect()).collect();
    for col in 0..d {
        let p = (col..d).find(|&r| !lhs[r][col].is_zero()).expect("Id + tN is invertible");
        lhs.swap(col, p);
        rhs.swap(col, p);
        let inv = BigRational::one() / lhs[col][col].clone();
        for j in 0..d {
            lhs[col][j] = &lhs[col][j] * &inv;
            rhs[col][j] = &rhs[col][j] * &inv;
        }
        for r in 0..d {
            if r != col && !lhs[r][col].is_zero() {
                let f = lhs[r][col].clone();
                for j in 0..d {
                    let a = &lhs[col][j] * &f;
                    lhs[r][j] = &lhs[r][j] - a;
                    let b = &rhs[col][j] * &f;
                    rhs[r][j] = &rhs[r][j] - b;
                }
            }
        }
    }
    rhs.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    assert!(x.is_integer(), "monodromy has a non-integer entry");
                    x.to_integer()
                })
                .collect()
        })
        .collect()
}

pub fn trace(a: &Dense) -> BigInt {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// `1 - Tr T` from the oracle monodromy.
pub fn lefschetz(n: &IntMatrix) -> i64 {
    (BigInt::one() - trace(&monodromy(n))).to_i64().unwrap()
}

pub fn is_identity(a: &Dense) -> bool {
    *a == identity(a.len())
}
