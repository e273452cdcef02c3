//! Exact integer Laurent polynomials in one variable `t`, and dense matrices
//! over them. Coefficients are arbitrary precision: determinants of Burau
//! matrices outgrow machine words already on modest braid words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Integer Laurent polynomial. Zero coefficients are never stored; the zero
/// polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly::default()
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i64) -> LaurentPoly {
        LaurentPoly::monomial(0, c)
    }

    /// The variable `t`.
    pub fn t() -> LaurentPoly {
        LaurentPoly::monomial(1, 1)
    }

    pub fn monomial(exponent: i64, coefficient: i64) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        if coefficient != 0 {
            coeffs.insert(exponent, BigInt::from(coefficient));
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigInt)>>(terms: I) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0) == BigInt::from(1)
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Multiplies by `t^shift`.
    pub fn shifted(&self, shift: i64) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// `1 - t^k` for `k >= 1`; the unit-correction factors of closures.
    pub fn one_minus_t_power(k: u32) -> LaurentPoly {
        let mut p = LaurentPoly::one();
        p.add_term(i64::from(k), BigInt::from(-1));
        p
    }

    /// Canonical form up to units `±t^k`: minimum exponent shifted to 0 and
    /// the lowest coefficient made positive. Zero stays zero.
    pub fn normalized_units(&self) -> LaurentPoly {
        let Some(min) = self.min_exponent() else {
            return LaurentPoly::zero();
        };
        let shifted = self.shifted(-min);
        if shifted.coeff(0).is_negative() {
            -&shifted
        } else {
            shifted
        }
    }

    /// Exact division; `None` when the divisor does not divide exactly
    /// (or is zero).
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let max_quotient_exp = self.max_exponent()? - divisor.max_exponent()?;
        let (d_min, d_lead) = {
            let e = divisor.min_exponent()?;
            (e, divisor.coeff(e))
        };
        let mut rem = self.clone();
        let mut quotient = LaurentPoly::zero();
        while !rem.is_zero() {
            let r_min = rem.min_exponent()?;
            let r_low = rem.coeff(r_min);
            let exp = r_min - d_min;
            if exp > max_quotient_exp || !(&r_low % &d_lead).is_zero() {
                return None;
            }
            let c = &r_low / &d_lead;
            let term = LaurentPoly::from_terms([(exp, c)]);
            rem = &rem - &(&term * divisor);
            quotient = &quotient + &term;
        }
        Some(quotient)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms sorted by exponent, e.g. `1 - t + t^2` or `t^-1 + 2t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (pos, (&e, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if pos == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = magnitude == BigInt::from(1);
            match (e, unit_coeff) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{magnitude}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{magnitude}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense matrix over `Z[t, t^{-1}]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zero(rows: usize, cols: usize) -> LaurentMatrix {
        LaurentMatrix {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> LaurentMatrix {
        let mut m = LaurentMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = LaurentPoly::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut LaurentPoly {
        &mut self.entries[r * self.cols + c]
    }

    pub fn mul(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = LaurentMatrix::zero(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *out.at_mut(r, c) = &*out.at(r, c) + &prod;
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for i in 0..self.entries.len() {
            out.entries[i] = &self.entries[i] - &rhs.entries[i];
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == LaurentMatrix::identity(self.rows)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination; the interior
    /// divisions are exact over an integral domain. The 0x0 determinant is 1.
    pub fn determinant(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev_pivot = LaurentPoly::one();
        for k in 0..n - 1 {
            if m.at(k, k).is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m.at(r, k).is_zero()) else {
                    return LaurentPoly::zero();
                };
                for c in 0..n {
                    let tmp = m.at(k, c).clone();
                    *m.at_mut(k, c) = m.at(swap, c).clone();
                    *m.at_mut(swap, c) = tmp;
                }
                sign_flip = !sign_flip;
            }
            let pivot = m.at(k, k).clone();
            for r in k + 1..n {
                for c in k + 1..n {
                    let num = &(&pivot * m.at(r, c)) - &(m.at(r, k) * m.at(k, c));
                    *m.at_mut(r, c) = num
                        .div_exact(&prev_pivot)
                        .expect("Bareiss division is exact over Z[t, t^-1]");
                }
                *m.at_mut(r, k) = LaurentPoly::zero();
            }
            prev_pivot = pivot;
        }
        let det = m.at(n - 1, n - 1).clone();
        if sign_flip {
            -&det
        } else {
            det
        }
    }
}
