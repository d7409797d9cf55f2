//! Coefficient fields and matrix rank.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::Prime(2);
    pub const GF3: FieldSpec = FieldSpec::Prime(3);

    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) && p < 1 << 31 {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Field(p.to_string()))
        }
    }

    /// The form accepted by `--field`.
    pub fn flag(self) -> String {
        match self {
            FieldSpec::Rationals => "q".into(),
            FieldSpec::Prime(2) => "2".into(),
            FieldSpec::Prime(3) => "3".into(),
            FieldSpec::Prime(p) => format!("p:{p}"),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::GF2
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let parsed = match t {
            "q" | "Q" | "QQ" => return Ok(FieldSpec::Rationals),
            _ => t.strip_prefix("p:").unwrap_or(t).parse::<u64>(),
        };
        parsed.map_err(|_| Error::Field(s.into())).and_then(|p| FieldSpec::prime(p).map_err(|_| Error::Field(s.into())))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.flag())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Sparse integer matrix stored by columns; each column is sorted by row.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix { rows, cols: Vec::new() }
    }

    pub fn push_col(&mut self, mut col: Vec<(usize, i64)>) {
        col.sort_unstable_by_key(|e| e.0);
        debug_assert!(col.iter().all(|&(r, _)| r < self.rows));
        self.cols.push(col);
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                d[i][j] = v;
            }
        }
        d
    }
}

pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    if m.rows == 0 || m.cols.is_empty() {
        return 0;
    }
    match field {
        FieldSpec::Prime(2) => rank_gf2(m),
        FieldSpec::Prime(p) => rank_mod_p(m, p),
        FieldSpec::Rationals => rank_rational(&m.to_dense()),
    }
}

fn rank_gf2(m: &SparseMatrix) -> usize {
    let words = m.rows.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for col in &m.cols {
        let mut v = vec![0u64; words];
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(low) = highest_bit(&v) {
            match pivots.get(&low) {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(low, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn highest_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().rev().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    // pivot row -> reduced column normalised to leading coefficient 1
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for col in &m.cols {
        let mut v: Vec<(usize, u64)> = col
            .iter()
            .map(|&(r, x)| (r, x.rem_euclid(p as i64) as u64))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(low, c)) = v.last() {
            match pivots.get(&low) {
                Some(piv) => v = axpy(&v, piv, p - c, p),
                None => {
                    let inv = inv_mod(c, p);
                    v.iter_mut().for_each(|e| e.1 = e.1 * inv % p);
                    pivots.insert(low, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a + s * b` over GF(p), sparse sorted vectors.
fn axpy(a: &[(usize, u64)], b: &[(usize, u64)], s: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&(ra, va)), Some(&(rb, _))) if ra < rb => {
                i += 1;
                (ra, va)
            }
            (Some(&(ra, va)), Some(&(rb, vb))) if ra == rb => {
                i += 1;
                j += 1;
                (ra, (va + s * vb) % p)
            }
            (_, Some(&(rb, vb))) => {
                j += 1;
                (rb, s * vb % p)
            }
            (Some(&(ra, va)), None) => {
                i += 1;
                (ra, va)
            }
            (None, None) => unreachable!(),
        };
        if next.1 != 0 {
            out.push(next);
        }
    }
    out
}

/// Exact rank over the rationals by fraction-free (Bareiss) elimination,
/// in `i128` while it fits and arbitrary precision otherwise.
pub fn rank_rational(dense: &[Vec<i64>]) -> usize {
    let a: Vec<Vec<i128>> = dense.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(a) {
        Some(r) => r,
        None => bareiss_big(dense.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let (mut k, mut prev) = (0usize, 1i128);
    for c in 0..cols {
        if k == rows {
            break;
        }
        let Some(r) = (k..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(k, r);
        let pivot = a[k][c];
        for i in k + 1..rows {
            let lead = a[i][c];
            for j in c + 1..cols {
                let x = pivot.checked_mul(a[i][j])?.checked_sub(lead.checked_mul(a[k][j])?)?;
                a[i][j] = x / prev;
            }
            a[i][c] = 0;
        }
        prev = pivot;
        k += 1;
    }
    Some(k)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let zero = BigInt::from(0);
    let (mut k, mut prev) = (0usize, BigInt::from(1));
    for c in 0..cols {
        if k == rows {
            break;
        }
        let Some(r) = (k..rows).find(|&r| a[r][c] != zero) else { continue };
        a.swap(k, r);
        let pivot = a[k][c].clone();
        for i in k + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                a[i][j] = (&pivot * &a[i][j] - &lead * &a[k][j]) / &prev;
            }
            a[i][c] = zero.clone();
        }
        prev = pivot;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("2".parse::<FieldSpec>().unwrap(), FieldSpec::GF2);
        assert_eq!("p:7".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("p:8".parse::<FieldSpec>().is_err());
        assert!("4".parse::<FieldSpec>().is_err());
        assert!("reals".parse::<FieldSpec>().is_err());
        for f in [FieldSpec::Rationals, FieldSpec::GF2, FieldSpec::GF3, FieldSpec::Prime(101)] {
            assert_eq!(f.flag().parse::<FieldSpec>().unwrap(), f);
        }
    }

    fn sparse(d: &[Vec<i64>]) -> SparseMatrix {
        let mut m = SparseMatrix::new(d.len());
        let cols = d.first().map_or(0, Vec::len);
        for j in 0..cols {
            m.push_col((0..d.len()).filter(|&i| d[i][j] != 0).map(|i| (i, d[i][j])).collect());
        }
        m
    }

    /// Textbook elimination with rational entries as (num, den) in i128.
    fn rank_by_fractions(d: &[Vec<i64>]) -> usize {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 { a.abs() } else { gcd(b, a % b) }
        }
        fn norm((n, d): (i128, i128)) -> (i128, i128) {
            let g = gcd(n, d).max(1) * d.signum();
            (n / g, d / g)
        }
        let mut a: Vec<Vec<(i128, i128)>> = d.iter().map(|r| r.iter().map(|&x| (x as i128, 1)).collect()).collect();
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut k = 0;
        for c in 0..cols {
            let Some(r) = (k..rows).find(|&r| a[r][c].0 != 0) else { continue };
            a.swap(k, r);
            let (pn, pd) = a[k][c];
            for i in k + 1..rows {
                let (ln, ld) = a[i][c];
                // factor = lead / pivot
                let (fnum, fden) = norm((ln * pd, ld * pn));
                for j in c..cols {
                    let (xn, xd) = a[i][j];
                    let (yn, yd) = a[k][j];
                    a[i][j] = norm((xn * yd * fden - yn * fnum * xd, xd * yd * fden));
                }
            }
            k += 1;
        }
        k
    }

    fn rank_dense_mod(mut a: Vec<Vec<i64>>, p: i64) -> usize {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut k = 0;
        for c in 0..cols {
            let Some(r) = (k..rows).find(|&r| a[r][c] % p != 0) else { continue };
            a.swap(k, r);
            let inv = (1..p).find(|x| x * a[k][c] % p == 1).unwrap();
            for i in k + 1..rows {
                let f = a[i][c] * inv % p;
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[k][j]).rem_euclid(p);
                }
            }
            k += 1;
        }
        k
    }

    #[test]
    fn characteristic_matters() {
        // determinant 2: full rank over Q and GF(3), rank 1 over GF(2)
        let d = vec![vec![1, 1], vec![1, -1]];
        let m = sparse(&d);
        assert_eq!(rank(&m, FieldSpec::Rationals), 2);
        assert_eq!(rank(&m, FieldSpec::GF3), 2);
        assert_eq!(rank(&m, FieldSpec::GF2), 1);
    }

    #[test]
    fn bignum_fallback_agrees() {
        let big = vec![
            vec![i64::MAX / 3, 5, 7],
            vec![11, i64::MAX / 5, 13],
            vec![17, 19, i64::MAX / 7],
        ];
        assert_eq!(rank_rational(&big), 3);
        let dependent = vec![big[0].clone(), big[0].clone(), big[1].clone()];
        assert_eq!(rank_rational(&dependent), 2);
    }

    proptest! {
        #[test]
        fn ranks_agree_with_reference(rows in 1usize..7, cols in 1usize..7, seed in proptest::collection::vec(-2i64..=2, 49)) {
            let d: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 7 + j]).collect()).collect();
            let m = sparse(&d);
            prop_assert_eq!(rank(&m, FieldSpec::Rationals), rank_by_fractions(&d));
            for p in [2u64, 3, 5] {
                let reduced: Vec<Vec<i64>> = d.iter().map(|r| r.iter().map(|x| x.rem_euclid(p as i64)).collect()).collect();
                let rp = rank(&sparse(&reduced), FieldSpec::Prime(p));
                prop_assert!(rp <= rank_by_fractions(&d));
                prop_assert_eq!(rp, rank(&m, FieldSpec::Prime(p)));
                prop_assert_eq!(rp, rank_dense_mod(reduced, p as i64));
            }
        }
    }
}
