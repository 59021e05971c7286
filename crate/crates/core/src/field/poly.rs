use std::fmt;

use serde::Serialize;

use super::{same_field, Field, FieldElement};
use crate::error::{Error, Result};

/// Polynomial over F_q, coefficients constant term first, no trailing zeros.
#[derive(Clone)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && same_field(&self.field, &other.field)
    }
}

impl Eq for Polynomial {}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<Vec<u64>> = self.coeffs.iter().map(|&c| self.field.digits(c)).collect();
        coeffs.serialize(serializer)
    }
}

impl Polynomial {
    pub fn new(field: &Field, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|c| !same_field(c.field(), field)) {
            return Err(Error::Shape("polynomial coefficient from a different field".into()));
        }
        Ok(Self::from_raw(field, coeffs.iter().map(FieldElement::raw).collect()))
    }

    pub(crate) fn from_raw(field: &Field, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { field: field.clone(), coeffs }
    }

    /// Polynomial with prime-subfield constant coefficients.
    pub fn from_constants(field: &Field, coeffs: &[u64]) -> Self {
        Self::from_raw(field, coeffs.iter().map(|&c| field.constant_raw(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::from_raw(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::from_raw(field, vec![1])
    }

    /// `x^n - c`.
    pub fn binomial(n: usize, c: &FieldElement) -> Self {
        let field = c.field();
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        coeffs[0] = field.sub_raw(coeffs[0], c.raw());
        Self::from_raw(field, coeffs)
    }

    /// `x - c`.
    pub fn linear(c: &FieldElement) -> Self {
        Self::binomial(1, c)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        FieldElement::from_raw(&self.field, self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn coeffs(&self) -> Vec<FieldElement> {
        self.coeffs.iter().map(|&c| FieldElement::from_raw(&self.field, c)).collect()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// If the polynomial is `x^n - c` with `n >= 1`, returns `(n, c)`.
    pub fn as_binomial(&self) -> Option<(usize, FieldElement)> {
        let n = self.degree()?;
        if n == 0 || !self.is_monic() || self.coeffs[1..n].iter().any(|&c| c != 0) {
            return None;
        }
        let c = FieldElement::from_raw(&self.field, self.field.neg_raw(self.coeffs[0]));
        Some((n, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(same_field(&self.field, &other.field), "field mismatch");
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                self.field.add_raw(a, b)
            })
            .collect();
        Self::from_raw(&self.field, c)
    }

    pub fn neg(&self) -> Self {
        let c = self.coeffs.iter().map(|&a| self.field.neg_raw(a)).collect();
        Self::from_raw(&self.field, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(same_field(&self.field, &other.field), "field mismatch");
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
            }
        }
        Self::from_raw(f, out)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        let out = self.coeffs.iter().map(|&a| self.field.mul_raw(a, c.raw())).collect();
        Self::from_raw(&self.field, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let f = &self.field;
        let raw = self.coeffs.iter().rev().fold(0u64, |acc, &c| f.add_raw(f.mul_raw(acc, x.raw()), c));
        FieldElement::from_raw(f, raw)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let r1 = self.field.degree() == 1;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if r1 { c.to_string() } else { FieldElement::from_raw(&self.field, c).to_string() };
            match (i, c == 1) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{coef}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
