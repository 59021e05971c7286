//! A minimal group interface shared by the matrix carrier and the
//! normal-form oracle, so the protocol and the attacks run unchanged on both.

use std::cell::Cell;
use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::{BigInt, Sign};

use crate::error::Result;
use crate::field::Field;
use crate::matgroup::SquareMatrix;

pub trait Group {
    type Elem: Clone + PartialEq + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;

    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Square-and-multiply through [`op`](Group::op).
    fn pow(&self, a: &Self::Elem, e: &BigInt) -> Result<Self::Elem> {
        let base = if e.sign() == Sign::Minus { self.inverse(a)? } else { a.clone() };
        let mag = e.magnitude();
        let mut acc = self.identity();
        for i in (0..mag.bits()).rev() {
            acc = self.op(&acc, &acc)?;
            if mag.bit(i) {
                acc = self.op(&acc, &base)?;
            }
        }
        Ok(acc)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let ai = self.inverse(a)?;
        let bi = self.inverse(b)?;
        let t = self.op(&ai, &bi)?;
        let t = self.op(&t, a)?;
        self.op(&t, b)
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }
}

/// The group of invertible `n x n` matrices over a field.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub field: Field,
    pub n: usize,
}

impl MatrixGroup {
    pub fn new(field: &Field, n: usize) -> Self {
        Self { field: field.clone(), n }
    }

    pub fn of(m: &SquareMatrix) -> Self {
        Self::new(m.field(), m.n())
    }
}

impl Group for MatrixGroup {
    type Elem = SquareMatrix;

    fn identity(&self) -> SquareMatrix {
        SquareMatrix::identity(&self.field, self.n)
    }

    fn op(&self, a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
        a.matmul(b)
    }

    fn inverse(&self, a: &SquareMatrix) -> Result<SquareMatrix> {
        a.inverse()
    }

    fn pow(&self, a: &SquareMatrix, e: &BigInt) -> Result<SquareMatrix> {
        a.pow(e.clone())
    }

    fn commutator(&self, a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
        a.commutator(b)
    }
}

/// Wraps a group and counts calls to `op` and `inverse`.
///
/// `pow` and `commutator` go through the trait defaults, so every
/// multiplication they perform is counted too.
pub struct Counting<'a, G: Group> {
    inner: &'a G,
    mults: Cell<u64>,
    inversions: Cell<u64>,
}

impl<'a, G: Group> Counting<'a, G> {
    pub fn new(inner: &'a G) -> Self {
        Self { inner, mults: Cell::new(0), inversions: Cell::new(0) }
    }

    pub fn mults(&self) -> u64 {
        self.mults.get()
    }

    pub fn inversions(&self) -> u64 {
        self.inversions.get()
    }
}

impl<G: Group> Group for Counting<'_, G> {
    type Elem = G::Elem;

    fn identity(&self) -> G::Elem {
        self.inner.identity()
    }

    fn op(&self, a: &G::Elem, b: &G::Elem) -> Result<G::Elem> {
        self.mults.set(self.mults.get() + 1);
        self.inner.op(a, b)
    }

    fn inverse(&self, a: &G::Elem) -> Result<G::Elem> {
        self.inversions.set(self.inversions.get() + 1);
        self.inner.inverse(a)
    }
}
