//! Exact arithmetic in F_q, q = s^r, for an odd prime s.
//!
//! An element of F_q is stored as a single `u64`: its coefficient list
//! (constant term first) read as base-`s` digits. For `r = 1` that is just
//! the residue, and every operation has a direct fast path. Extension
//! elements decode to coefficient vectors for multiplication.

mod fp_poly;
mod poly;
mod search;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock};

use num_bigint::{BigInt, BigUint, Sign};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, inv_mod, is_prime};
use crate::error::{Error, Result};

pub use poly::Polynomial;
pub use search::param_search;

/// Shared handle to a field description.
pub type Field = Arc<FieldSpec>;

/// F_q = F_s[t]/(modulus), with `modulus` monic irreducible of degree `r`.
pub struct FieldSpec {
    s: u64,
    r: u32,
    modulus: Vec<u64>,
    q: u64,
    order_factors: OnceLock<Vec<(u64, u32)>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && self.r == other.r && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("s", &self.s)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .finish()
    }
}

/// Wire form of a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpecWire {
    pub s: u64,
    pub r: u32,
    pub modulus: Vec<u64>,
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

fn check_characteristic(s: u64) -> Result<()> {
    if s.is_multiple_of(2) || !is_prime(s) {
        return Err(Error::Parameter(format!("characteristic {s} is not an odd prime")));
    }
    if s >= 1 << 32 {
        return Err(Error::Parameter(format!("characteristic {s} exceeds 32 bits")));
    }
    Ok(())
}

fn field_size(s: u64, r: u32) -> Result<u64> {
    if r == 0 {
        return Err(Error::Parameter("extension degree must be at least 1".into()));
    }
    match s.checked_pow(r) {
        Some(q) if q < 1 << 63 => Ok(q),
        _ => Err(Error::Parameter(format!("field size {s}^{r} exceeds 63 bits"))),
    }
}

/// Builds F_{s^r} using the lexicographically smallest (constant term first)
/// monic irreducible polynomial of degree `r` as modulus.
pub fn make_field(s: u64, r: u32) -> Result<Field> {
    check_characteristic(s)?;
    let q = field_size(s, r)?;
    let modulus = if r == 1 {
        vec![0, 1]
    } else {
        // odometer over (c0, .., c_{r-1}), last index fastest; c0 = 0 is divisible by t
        let r = r as usize;
        let mut tail = vec![0u64; r];
        tail[0] = 1;
        loop {
            let mut cand = tail.clone();
            cand.push(1);
            if fp_poly::is_irreducible(&cand, s) {
                break cand;
            }
            let mut k = r - 1;
            loop {
                tail[k] += 1;
                if tail[k] < s {
                    break;
                }
                tail[k] = 0;
                if k == 0 {
                    unreachable!("irreducible polynomials exist in every degree");
                }
                k -= 1;
            }
        }
    };
    Ok(Arc::new(FieldSpec { s, r, modulus, q, order_factors: OnceLock::new() }))
}

impl FieldSpec {
    /// Builds a field from an explicit modulus, checking it is monic irreducible of degree `r`.
    pub fn with_modulus(s: u64, r: u32, modulus: Vec<u64>) -> Result<Field> {
        check_characteristic(s)?;
        let q = field_size(s, r)?;
        if modulus.len() != r as usize + 1 || modulus.last() != Some(&1) {
            return Err(Error::Parameter("modulus must be monic of degree r".into()));
        }
        if modulus.iter().any(|&c| c >= s) {
            return Err(Error::Parameter("modulus coefficient out of range".into()));
        }
        if r == 1 {
            if modulus != [0, 1] {
                return Err(Error::Parameter("prime field modulus must be [0, 1]".into()));
            }
        } else if !fp_poly::is_irreducible(&modulus, s) {
            return Err(Error::Parameter("modulus is reducible".into()));
        }
        Ok(Arc::new(FieldSpec { s, r, modulus, q, order_factors: OnceLock::new() }))
    }

    pub fn from_wire(w: &FieldSpecWire) -> Result<Field> {
        Self::with_modulus(w.s, w.r, w.modulus.clone())
    }

    pub fn to_wire(&self) -> FieldSpecWire {
        FieldSpecWire { s: self.s, r: self.r, modulus: self.modulus.clone() }
    }

    pub fn characteristic(&self) -> u64 {
        self.s
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Factorization of q - 1, computed once.
    pub fn unit_group_factors(&self) -> &[(u64, u32)] {
        self.order_factors.get_or_init(|| factorize(self.q - 1))
    }

    // ---- packed representation -------------------------------------------------

    pub(crate) fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.r as usize);
        for _ in 0..self.r {
            out.push(x % self.s);
            x /= self.s;
        }
        out
    }

    pub(crate) fn pack(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.s + c)
    }

    /// Packed value of the prime-field constant `c mod s`.
    pub(crate) fn constant_raw(&self, c: u64) -> u64 {
        c % self.s
    }

    pub(crate) fn add_raw(&self, a: u64, b: u64) -> u64 {
        if self.r == 1 {
            let t = a + b;
            return if t >= self.s { t - self.s } else { t };
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.s).collect();
        self.pack(&sum)
    }

    pub(crate) fn neg_raw(&self, a: u64) -> u64 {
        if self.r == 1 {
            return if a == 0 { 0 } else { self.s - a };
        }
        let d: Vec<u64> = self.digits(a).iter().map(|&x| (self.s - x) % self.s).collect();
        self.pack(&d)
    }

    pub(crate) fn sub_raw(&self, a: u64, b: u64) -> u64 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if self.r == 1 {
            return a * b % self.s;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let prod = fp_poly::mul(&self.digits(a), &self.digits(b), self.s);
        let red = fp_poly::rem(&prod, &self.modulus, self.s);
        self.pack(&red)
    }

    pub(crate) fn pow_raw(&self, a: u64, e: &BigUint) -> u64 {
        let mut acc = 1u64;
        for i in (0..e.bits()).rev() {
            acc = self.mul_raw(acc, acc);
            if e.bit(i) {
                acc = self.mul_raw(acc, a);
            }
        }
        acc
    }

    pub(crate) fn pow_raw_u64(&self, a: u64, e: u64) -> u64 {
        self.pow_raw(a, &BigUint::from(e))
    }

    pub(crate) fn inv_raw(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.r == 1 {
            return inv_mod(a, self.s);
        }
        Some(self.pow_raw_u64(a, self.q - 2))
    }

    /// Multiplicative order of a nonzero packed element.
    pub(crate) fn order_raw(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        let mut order = self.q - 1;
        for &(prime, mult) in self.unit_group_factors() {
            for _ in 0..mult {
                if self.pow_raw_u64(a, order / prime) == 1 {
                    order /= prime;
                } else {
                    break;
                }
            }
        }
        order
    }

    /// Packed elements are ordered by integer value, which reads the top
    /// coefficient first. This compares coefficient lists constant term first.
    pub(crate) fn cmp_lex(&self, a: u64, b: u64) -> Ordering {
        self.digits(a).cmp(&self.digits(b))
    }
}

/// An element of F_q tied to its field.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    raw: u64,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw && same_field(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.raw.hash(state);
    }
}

pub(crate) fn same_field(a: &Field, b: &Field) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.coeffs();
        write!(f, "[")?;
        for (i, x) in c.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs().serialize(serializer)
    }
}

impl FieldElement {
    /// Element with the given coefficients (constant term first); shorter lists are zero-padded.
    pub fn new(field: &Field, coeffs: &[u64]) -> Result<Self> {
        if coeffs.len() > field.r as usize {
            return Err(Error::Parameter(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                field.r
            )));
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= field.s) {
            return Err(Error::Parameter(format!("coefficient {c} not reduced mod {}", field.s)));
        }
        Ok(Self { field: field.clone(), raw: field.pack(coeffs) })
    }

    /// The prime-subfield constant `c mod s`.
    pub fn constant(field: &Field, c: u64) -> Self {
        Self { field: field.clone(), raw: field.constant_raw(c) }
    }

    pub fn zero(field: &Field) -> Self {
        Self { field: field.clone(), raw: 0 }
    }

    pub fn one(field: &Field) -> Self {
        Self { field: field.clone(), raw: 1 }
    }

    pub(crate) fn from_raw(field: &Field, raw: u64) -> Self {
        Self { field: field.clone(), raw }
    }

    pub(crate) fn raw(&self) -> u64 {
        self.raw
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Exactly `r` coefficients, constant term first.
    pub fn coeffs(&self) -> Vec<u64> {
        self.field.digits(self.raw)
    }

    pub fn is_zero(&self) -> bool {
        self.raw == 0
    }

    pub fn is_one(&self) -> bool {
        self.raw == 1
    }

    /// Whether the element lies in the prime subfield F_s.
    pub fn is_prime_subfield(&self) -> bool {
        self.raw < self.field.s
    }

    pub fn inv(&self) -> Result<Self> {
        self.field
            .inv_raw(self.raw)
            .map(|raw| Self { field: self.field.clone(), raw })
            .ok_or_else(|| Error::Domain("zero has no multiplicative inverse".into()))
    }

    /// `self^e` for any integer `e`; negative exponents need a nonzero base.
    pub fn pow<E: Into<BigInt>>(&self, e: E) -> Result<Self> {
        let e: BigInt = e.into();
        let base = if e.sign() == Sign::Minus { self.inv()? } else { self.clone() };
        let raw = self.field.pow_raw(base.raw, e.magnitude());
        Ok(Self { field: self.field.clone(), raw })
    }

    /// Smallest `d >= 1` with `self^d = 1`.
    pub fn mult_order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::Domain("zero has no multiplicative order".into()));
        }
        Ok(self.field.order_raw(self.raw))
    }

    /// Orders elements by coefficient list, constant term first.
    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        self.coeffs().cmp(&other.coeffs())
    }

    fn check_same(&self, other: &Self) {
        assert!(same_field(&self.field, &other.field), "field mismatch in element arithmetic");
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $raw:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.check_same(rhs);
                FieldElement { field: self.field.clone(), raw: self.field.$raw(self.raw, rhs.raw) }
            }
        }
        impl $trait for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add_raw);
binop!(Sub, sub, sub_raw);
binop!(Mul, mul, mul_raw);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), raw: self.field.neg_raw(self.raw) }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// `x^e`; zero to a negative power is a domain error.
pub fn ff_pow<E: Into<BigInt>>(x: &FieldElement, e: E) -> Result<FieldElement> {
    x.pow(e)
}

pub fn mult_order(x: &FieldElement) -> Result<u64> {
    x.mult_order()
}

/// The lexicographically smallest element of multiplicative order exactly `d`.
pub fn root_of_unity(field: &Field, d: u64) -> Result<FieldElement> {
    let n = field.q - 1;
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::Parameter(format!("{d} does not divide q - 1 = {n}")));
    }
    let cofactor = n / d;
    // any primitive d-th root generates the full set {w^k : gcd(k, d) = 1}
    let w = (1..field.q)
        .map(|g| field.pow_raw_u64(g, cofactor))
        .find(|&w| field.order_raw(w) == d)
        .expect("the unit group is cyclic");
    let mut best = w;
    let mut cur = w;
    for k in 1..=d {
        if num_integer::gcd(k, d) == 1 && field.cmp_lex(cur, best) == Ordering::Less {
            best = cur;
        }
        cur = field.mul_raw(cur, w);
    }
    Ok(FieldElement::from_raw(field, best))
}

/// Whether `c` is a `d`-th power in F_q; requires `d | q - 1`.
pub fn is_dth_power(c: &FieldElement, d: u64) -> bool {
    if c.is_zero() {
        return true;
    }
    let n = c.field.q - 1;
    debug_assert!(n.is_multiple_of(d));
    c.field.pow_raw_u64(c.raw, n / d) == 1
}

/// Iterates every element of the field in packed order.
pub fn elements(field: &Field) -> impl Iterator<Item = FieldElement> + '_ {
    (0..field.q).map(move |raw| FieldElement::from_raw(field, raw))
}

#[cfg(test)]
mod tests;
