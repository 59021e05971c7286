//! Dense square matrices over F_q.
//!
//! Entries are stored row-major in the field's packed form. Multiplication
//! skips zero entries of the left factor, so monomial matrices (the images
//! of `a` and `c` and all their products) multiply in O(n²).

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::{BigInt, Sign};
use serde::{Deserialize, Serialize};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::field::{same_field, Field, FieldElement, Polynomial};

#[derive(Clone)]
pub struct SquareMatrix {
    field: Field,
    n: usize,
    data: Vec<u64>,
}

/// Wire form: `{"n": .., "rows": [[elem, ..], ..]}` with each element a coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixWire {
    pub n: usize,
    pub rows: Vec<Vec<Vec<u64>>>,
}

impl PartialEq for SquareMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.data == other.data && same_field(&self.field, &other.field)
    }
}

impl Eq for SquareMatrix {}

impl Hash for SquareMatrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.data.hash(state);
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl SquareMatrix {
    pub fn identity(field: &Field, n: usize) -> Self {
        let mut data = vec![0u64; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        Self { field: field.clone(), n, data }
    }

    pub fn zero(field: &Field, n: usize) -> Self {
        Self { field: field.clone(), n, data: vec![0; n * n] }
    }

    pub fn scalar(n: usize, c: &FieldElement) -> Self {
        Self::diagonal(&vec![c.clone(); n])
    }

    pub fn diagonal(entries: &[FieldElement]) -> Self {
        let field = entries.first().expect("nonempty diagonal").field().clone();
        let n = entries.len();
        let mut m = Self::zero(&field, n);
        for (i, e) in entries.iter().enumerate() {
            assert!(same_field(e.field(), &field), "field mismatch in diagonal");
            m.data[i * n + i] = e.raw();
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<FieldElement>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Shape(format!("row of length {} in a {n}x{n} matrix", row.len())));
            }
            for e in row {
                if !same_field(e.field(), field) {
                    return Err(Error::Shape("entry from a different field".into()));
                }
                data.push(e.raw());
            }
        }
        Ok(Self { field: field.clone(), n, data })
    }

    /// Matrix whose entries are prime-subfield constants, reduced mod s.
    pub fn from_constants(field: &Field, rows: &[Vec<u64>]) -> Result<Self> {
        let rows: Vec<Vec<FieldElement>> =
            rows.iter().map(|r| r.iter().map(|&c| FieldElement::constant(field, c)).collect()).collect();
        Self::from_rows(field, &rows)
    }

    pub fn from_wire(field: &Field, wire: &MatrixWire) -> Result<Self> {
        if wire.rows.len() != wire.n {
            return Err(Error::Parse(format!("matrix declares n = {} but has {} rows", wire.n, wire.rows.len())));
        }
        let rows = wire
            .rows
            .iter()
            .map(|r| r.iter().map(|c| FieldElement::new(field, c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, &rows)
    }

    pub fn to_wire(&self) -> MatrixWire {
        let rows = (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j).coeffs()).collect()).collect();
        MatrixWire { n: self.n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        FieldElement::from_raw(&self.field, self.data[i * self.n + j])
    }

    pub fn set(&mut self, i: usize, j: usize, v: &FieldElement) {
        assert!(same_field(v.field(), &self.field), "field mismatch");
        self.data[i * self.n + j] = v.raw();
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.field, self.n)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.data[i * self.n + j] == 0))
    }

    /// The scalar `c` when the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        let c = *self.data.first()?;
        let ok = (0..self.n).all(|i| {
            (0..self.n).all(|j| self.data[i * self.n + j] == if i == j { c } else { 0 })
        });
        ok.then(|| FieldElement::from_raw(&self.field, c))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::Shape("matrices over different fields".into()));
        }
        if self.n != other.n {
            return Err(Error::Shape(format!("{0}x{0} against {1}x{1}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let n = self.n;
        let f = &*self.field;
        let mut out = vec![0u64; n * n];
        if f.degree() == 1 {
            let s = f.characteristic() as u128;
            let mut acc = vec![0u128; n];
            for i in 0..n {
                acc.iter_mut().for_each(|a| *a = 0);
                for k in 0..n {
                    let a = self.data[i * n + k];
                    if a == 0 {
                        continue;
                    }
                    let row = &other.data[k * n..(k + 1) * n];
                    for (slot, &b) in acc.iter_mut().zip(row) {
                        *slot += (a * b) as u128;
                    }
                }
                for (o, a) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                    *o = (a % s) as u64;
                }
            }
        } else {
            for i in 0..n {
                for k in 0..n {
                    let a = self.data[i * n + k];
                    if a == 0 {
                        continue;
                    }
                    for j in 0..n {
                        let t = f.mul_raw(a, other.data[k * n + j]);
                        out[i * n + j] = f.add_raw(out[i * n + j], t);
                    }
                }
            }
        }
        Ok(Self { field: self.field.clone(), n, data: out })
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let f = &*self.field;
        let mut a = self.data.clone();
        let mut inv = Self::identity(&self.field, n).data;
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r * n + col] != 0).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let pinv = f.inv_raw(a[col * n + col]).expect("pivot is nonzero");
            for j in 0..n {
                a[col * n + j] = f.mul_raw(a[col * n + j], pinv);
                inv[col * n + j] = f.mul_raw(inv[col * n + j], pinv);
            }
            for r in 0..n {
                let factor = a[r * n + col];
                if r == col || factor == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = f.sub_raw(a[r * n + j], f.mul_raw(factor, a[col * n + j]));
                    inv[r * n + j] = f.sub_raw(inv[r * n + j], f.mul_raw(factor, inv[col * n + j]));
                }
            }
        }
        Ok(Self { field: self.field.clone(), n, data: inv })
    }

    /// `self^e` by square-and-multiply; negative exponents invert first.
    pub fn pow<E: Into<BigInt>>(&self, e: E) -> Result<Self> {
        let e: BigInt = e.into();
        let base = if e.sign() == Sign::Minus { self.inverse()? } else { self.clone() };
        let mag = e.magnitude();
        let mut acc = Self::identity(&self.field, self.n);
        for i in (0..mag.bits()).rev() {
            acc = acc.matmul(&acc)?;
            if mag.bit(i) {
                acc = acc.matmul(&base)?;
            }
        }
        Ok(acc)
    }

    /// `[A, B] = A⁻¹ B⁻¹ A B`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let ai = self.inverse()?;
        let bi = other.inverse()?;
        ai.matmul(&bi)?.matmul(self)?.matmul(other)
    }

    /// Determinant by elimination.
    pub fn det(&self) -> FieldElement {
        let n = self.n;
        let f = &*self.field;
        let mut a = self.data.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return FieldElement::zero(&self.field);
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = f.neg_raw(det);
            }
            let p = a[col * n + col];
            det = f.mul_raw(det, p);
            let pinv = f.inv_raw(p).expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = f.mul_raw(a[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    a[r * n + j] = f.sub_raw(a[r * n + j], f.mul_raw(factor, a[col * n + j]));
                }
            }
        }
        FieldElement::from_raw(&self.field, det)
    }

    /// `det(xI - A)` by Berkowitz's algorithm, which never divides and so
    /// works in every characteristic.
    pub fn char_poly(&self) -> Polynomial {
        let f = &*self.field;
        let n = self.n;
        // coefficients of the running polynomial, highest degree first
        let mut v: Vec<u64> = vec![1];
        for k in 1..=n {
            let m = k - 1;
            let a_kk = self.data[m * n + m];
            // t = [1, -a_kk, -R C, -R M C, .., -R M^{k-2} C]
            let mut t = Vec::with_capacity(k + 1);
            t.push(1u64);
            t.push(f.neg_raw(a_kk));
            let mut w: Vec<u64> = (0..m).map(|i| self.data[i * n + m]).collect();
            for step in 0..m {
                let rw = (0..m).fold(0u64, |acc, j| f.add_raw(acc, f.mul_raw(self.data[m * n + j], w[j])));
                t.push(f.neg_raw(rw));
                if step + 1 < m {
                    w = (0..m)
                        .map(|i| (0..m).fold(0u64, |acc, j| f.add_raw(acc, f.mul_raw(self.data[i * n + j], w[j]))))
                        .collect();
                }
            }
            let next: Vec<u64> = (0..=k)
                .map(|i| (0..k.min(i + 1)).fold(0u64, |acc, j| f.add_raw(acc, f.mul_raw(t[i - j], v[j]))))
                .collect();
            v = next;
        }
        v.reverse();
        Polynomial::from_raw(&self.field, v)
    }

    /// Kronecker product; block `(i, j)` of the result is `self[i][j] · other`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        if !same_field(&self.field, &other.field) {
            return Err(Error::Shape("matrices over different fields".into()));
        }
        let f = &*self.field;
        let (na, nb) = (self.n, other.n);
        let n = na * nb;
        let mut data = vec![0u64; n * n];
        for i in 0..na {
            for j in 0..na {
                let a = self.data[i * na + j];
                if a == 0 {
                    continue;
                }
                for k in 0..nb {
                    for l in 0..nb {
                        data[(i * nb + k) * n + j * nb + l] = f.mul_raw(a, other.data[k * nb + l]);
                    }
                }
            }
        }
        Ok(Self { field: self.field.clone(), n, data })
    }

    /// Smallest divisor `d` of `exponent_bound` with `A^d = I`.
    pub fn element_order(&self, exponent_bound: u64) -> Result<u64> {
        if exponent_bound == 0 || !self.pow(exponent_bound)?.is_identity() {
            return Err(Error::NotInGroup(format!("A^{exponent_bound} is not the identity")));
        }
        let mut d = exponent_bound;
        for (prime, _) in factorize(exponent_bound) {
            while d.is_multiple_of(prime) && self.pow(d / prime)?.is_identity() {
                d /= prime;
            }
        }
        Ok(d)
    }

    /// Re-reads a matrix over F_s as a matrix over an extension of F_s.
    pub fn embed_into(&self, ext: &Field) -> Result<Self> {
        if self.field.degree() != 1 || ext.characteristic() != self.field.characteristic() {
            return Err(Error::Shape("embedding needs a prime base field of the same characteristic".into()));
        }
        Ok(Self { field: ext.clone(), n: self.n, data: self.data.clone() })
    }

    /// Inverse of [`embed_into`](Self::embed_into): `None` if some entry is outside the prime subfield.
    pub fn restrict_to(&self, base: &Field) -> Option<Self> {
        if base.degree() != 1 || base.characteristic() != self.field.characteristic() {
            return None;
        }
        let s = base.characteristic();
        self.data
            .iter()
            .all(|&x| x < s)
            .then(|| Self { field: base.clone(), n: self.n, data: self.data.clone() })
    }
}

/// Characteristic polynomial over F_s re-read over an extension of F_s.
pub fn embed_polynomial(poly: &Polynomial, ext: &Field) -> Result<Polynomial> {
    let coeffs: Vec<u64> = poly.coeffs().iter().map(|c| c.coeffs()[0]).collect();
    if poly.field().degree() != 1 || ext.characteristic() != poly.field().characteristic() {
        return Err(Error::Shape("embedding needs a prime base field".into()));
    }
    Ok(Polynomial::from_constants(ext, &coeffs))
}
