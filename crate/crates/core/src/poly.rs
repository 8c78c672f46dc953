//! Dense univariate polynomials over `F_q`, coefficients ascending.

use std::fmt;

use crate::field::{BaseElem, BaseField};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BaseElem>,
}

impl Poly {
    /// Drops trailing zeros.
    pub fn new(mut coeffs: Vec<BaseElem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// `x^n - 1`.
    pub fn x_n_minus_one(base: &BaseField, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = base.neg(1);
        c[n] = 1;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[BaseElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BaseElem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, base: &BaseField, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or(0);
        Poly::new((0..len).map(|i| base.add(get(self, i), get(other, i))).collect())
    }

    pub fn mul(&self, base: &BaseField, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = base.add(out[i + j], base.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// `(quotient, remainder)`; panics on a zero divisor.
    pub fn divrem(&self, base: &BaseField, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let inv = base.inv(divisor.leading()).expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![0; rem.len() - d];
        for i in (0..quot.len()).rev() {
            let c = base.mul(rem[i + d], inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = base.sub(rem[i + j], base.mul(c, b));
            }
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Coefficients of `x^shift · self` reduced modulo `x^n - 1`, as a length-`n` word.
    pub fn cyclic_shift(&self, n: usize, shift: usize) -> Vec<BaseElem> {
        let mut w = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            w[(i + shift) % n] = c;
        }
        w
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
