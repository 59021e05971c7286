//! The degree-p representation σ of Mod₃(p) over F_q, the induced form ρ
//! over F_{q^p}, and the checks that tie them together.
//!
//! With ω = ζ^p a primitive p-th root of unity in F_q:
//!
//! * σ(a) has ω in the top-right corner and ones on the subdiagonal, so its
//!   characteristic polynomial is x^p − ω;
//! * σ(c) = diag(1, η, η², …, η^{p−1}) with η = ω^{−(q−1)/p}.
//!
//! The choice of η is what makes σ(c)⁻¹σ(a)σ(c) = σ(a)^q hold for every
//! admissible q: conjugation multiplies σ(a) by η⁻¹ while σ(a)^q = ω^{(q−1)/p}·σ(a).
//! When q ≡ 1 − p (mod p²), η = ω and σ(c) = diag(ω^k).

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{check_odd_prime, inv_mod, pow_mod};
use crate::error::{Error, Result};
use crate::field::{is_dth_power, make_field, Field, FieldElement, FieldSpec, FieldSpecWire, Polynomial};
use crate::matgroup::{embed_polynomial, SquareMatrix};
use crate::oracle::NormalForm;

/// Parameters fixing the representation: F_q, the exponent `i` with
/// `q ≡ (p+1)^i (mod p²)`, and the primitive p-th root ζ^p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupParams {
    pub p: u64,
    pub field: Field,
    /// Order of `a`: p².
    pub m_root: u64,
    /// Order of `b`: p.
    pub n_rep: u64,
    /// Conjugation exponent p + 1.
    pub k: u64,
    pub i: u64,
    pub zeta_p: FieldElement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupParamsWire {
    pub p: u64,
    pub s: u64,
    pub r: u32,
    pub q: u64,
    pub modulus: Vec<u64>,
    pub m_root: u64,
    pub n_rep: u64,
    pub k: u64,
    pub i: u64,
    pub zeta_p: Vec<u64>,
}

impl Serialize for GroupParams {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(serializer)
    }
}

impl GroupParams {
    /// Structural checks only (p odd prime, p | q − 1, ζ^p a nonzero element of
    /// the field); see [`validate`](Self::validate) for the full invariants.
    pub fn new(p: u64, field: Field, i: u64, zeta_p: FieldElement) -> Result<Self> {
        check_odd_prime(p)?;
        if !(field.order() - 1).is_multiple_of(p) {
            return Err(Error::Parameter(format!("p = {p} does not divide q - 1 = {}", field.order() - 1)));
        }
        if **zeta_p.field() != *field {
            return Err(Error::Parameter("zeta_p lies in a different field".into()));
        }
        if zeta_p.is_zero() {
            return Err(Error::Parameter("zeta_p must be nonzero".into()));
        }
        Ok(Self { p, field, m_root: p * p, n_rep: p, k: p + 1, i, zeta_p })
    }

    pub fn s(&self) -> u64 {
        self.field.characteristic()
    }

    pub fn r(&self) -> u32 {
        self.field.degree()
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    /// `(q − 1)/p mod p`; nonzero exactly when `q ≢ 1 (mod p²)`.
    pub fn twist(&self) -> u64 {
        ((self.q() - 1) / self.p) % self.p
    }

    /// Full invariants: `q ≢ 1 (mod p²)`, `(p+1)^i ≡ q (mod p²)` with `gcd(i, p) = 1`,
    /// and ζ^p of multiplicative order exactly p.
    pub fn validate(&self) -> Result<()> {
        let p2 = self.p * self.p;
        let q = self.q();
        if q % p2 == 1 {
            return Err(Error::Parameter(format!("q = {q} ≡ 1 mod p², representation is not faithful")));
        }
        if self.i.is_multiple_of(self.p) || pow_mod(self.k, self.i, p2) != q % p2 {
            return Err(Error::Parameter(format!("(p+1)^{} ≢ q mod p²", self.i)));
        }
        let ord = self.zeta_p.mult_order()?;
        if ord != self.p {
            return Err(Error::Parameter(format!("zeta_p has order {ord}, expected {}", self.p)));
        }
        Ok(())
    }

    pub fn to_wire(&self) -> GroupParamsWire {
        let f = self.field.to_wire();
        GroupParamsWire {
            p: self.p,
            s: f.s,
            r: f.r,
            q: self.q(),
            modulus: f.modulus,
            m_root: self.m_root,
            n_rep: self.n_rep,
            k: self.k,
            i: self.i,
            zeta_p: self.zeta_p.coeffs(),
        }
    }

    /// Rebuilds and fully validates parameters read from the wire.
    pub fn from_wire(w: &GroupParamsWire) -> Result<Self> {
        let field = FieldSpec::from_wire(&FieldSpecWire { s: w.s, r: w.r, modulus: w.modulus.clone() })?;
        let zeta = FieldElement::new(&field, &w.zeta_p)?;
        let params = Self::new(w.p, field, w.i, zeta)?;
        if params.q() != w.q || params.m_root != w.m_root || params.n_rep != w.n_rep || params.k != w.k {
            return Err(Error::Parse("derived parameters (q, m_root, n_rep, k) are inconsistent".into()));
        }
        params.validate()?;
        Ok(params)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub params: GroupParams,
    pub sigma_a: SquareMatrix,
    pub sigma_c: SquareMatrix,
}

/// Builds σ(a) and σ(c) over F_q.
pub fn build_sigma(params: &GroupParams) -> Result<Representation> {
    let p = params.p as usize;
    let f = &params.field;
    let omega = &params.zeta_p;
    let mut a = SquareMatrix::zero(f, p);
    a.set(0, p - 1, omega);
    for k in 0..p - 1 {
        a.set(k + 1, k, &FieldElement::one(f));
    }
    let eta = omega.pow(-BigInt::from(params.twist()))?;
    let diag: Vec<FieldElement> = (0..p).map(|k| eta.pow(k as u64)).collect::<Result<_>>()?;
    Ok(Representation { params: params.clone(), sigma_a: a, sigma_c: SquareMatrix::diagonal(&diag) })
}

impl Representation {
    /// σ(b) = σ(c)^{i⁻¹ mod p}, since c = b^i.
    pub fn sigma_b(&self) -> Result<SquareMatrix> {
        let p = self.params.p;
        let i_inv = inv_mod(self.params.i % p, p)
            .ok_or_else(|| Error::Parameter("i is not coprime to p".into()))?;
        self.sigma_c.pow(i_inv)
    }

    /// Image of the normal form `a^i b^j` of Mod₃(p).
    pub fn evaluate(&self, nf: NormalForm) -> Result<SquareMatrix> {
        self.sigma_a.pow(nf.i)?.matmul(&self.sigma_b()?.pow(nf.j)?)
    }

    pub fn sigma_ac(&self) -> Result<SquareMatrix> {
        self.sigma_a.matmul(&self.sigma_c)
    }
}

// ---- relation checks ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    /// `a^{p²} = I` with `a` of order exactly p².
    pub a_order_p2: bool,
    /// `c^p = I` with `c` of order exactly p.
    pub c_order_p: bool,
    /// `c⁻¹ a c = a^q`.
    pub conjugation: bool,
    /// `[a, c]` is a nonidentity scalar of order p.
    pub commutator_central_order_p: bool,
    /// `[a, c]` commutes with `a` and `c`.
    pub centrality: bool,
    pub a_order: Option<u64>,
    pub c_order: Option<u64>,
    pub commutator_order: Option<u64>,
    pub conjugate: SquareMatrix,
    pub a_pow_q: SquareMatrix,
    pub commutator: SquareMatrix,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.a_order_p2 && self.c_order_p && self.conjugation && self.commutator_central_order_p && self.centrality
    }
}

fn order_or_none(m: &SquareMatrix, bound: u64) -> Result<Option<u64>> {
    match m.element_order(bound) {
        Ok(d) => Ok(Some(d)),
        Err(Error::NotInGroup(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Checks the defining relations of Mod₃(p) in the generators `a`, `c = b^i`.
pub fn check_relations(p: u64, q: u64, a: &SquareMatrix, c: &SquareMatrix) -> Result<RelationReport> {
    let p2 = p * p;
    let a_order = order_or_none(a, p2)?;
    let c_order = order_or_none(c, p)?;
    let conjugate = c.inverse()?.matmul(a)?.matmul(c)?;
    let a_pow_q = a.pow(q)?;
    let commutator = a.commutator(c)?;
    let commutator_order = order_or_none(&commutator, p)?;
    let scalar = commutator.as_scalar().is_some() && !commutator.is_identity();
    let centrality = commutator.matmul(a)? == a.matmul(&commutator)?
        && commutator.matmul(c)? == c.matmul(&commutator)?;
    Ok(RelationReport {
        a_order_p2: a_order == Some(p2),
        c_order_p: c_order == Some(p),
        conjugation: conjugate == a_pow_q,
        commutator_central_order_p: scalar && commutator_order == Some(p),
        centrality,
        a_order,
        c_order,
        commutator_order,
        conjugate,
        a_pow_q,
        commutator,
    })
}

pub fn verify_relations(rep: &Representation) -> Result<RelationReport> {
    check_relations(rep.params.p, rep.params.q(), &rep.sigma_a, &rep.sigma_c)
}

// ---- induced representation over F_{q^p} -----------------------------------------

#[derive(Debug, Clone)]
pub struct RhoExtension {
    pub ext: Field,
    /// Primitive p²-th root of unity with ζ^p equal to the embedded ζ^p of the params.
    pub zeta: FieldElement,
    pub rho_a: SquareMatrix,
    pub rho_c: SquareMatrix,
}

impl RhoExtension {
    pub fn verify(&self, params: &GroupParams) -> Result<RelationReport> {
        check_relations(params.p, params.q(), &self.rho_a, &self.rho_c)
    }
}

/// Embeds an element of the prime field F_s into an extension of it.
pub fn embed_element(x: &FieldElement, ext: &Field) -> Result<FieldElement> {
    if x.field().degree() != 1 || x.field().characteristic() != ext.characteristic() {
        return Err(Error::Shape("embedding needs a prime base field".into()));
    }
    Ok(FieldElement::constant(ext, x.coeffs()[0]))
}

/// ρ(a) = diag(ζ, ζ^q, …, ζ^{q^{p−1}}) and ρ(c) the cyclic shift `e_i ↦ e_{i+1}`, over F_{q^p}.
pub fn build_rho_extension(params: &GroupParams) -> Result<RhoExtension> {
    if params.r() != 1 {
        return Err(Error::Parameter("the induced form is only built over a prime base field".into()));
    }
    let p = params.p;
    let ext = make_field(params.s(), p as u32)?;
    let big_q = ext.order();
    let p2 = p * p;
    if (big_q - 1) % p2 != 0 {
        return Err(Error::Parameter(format!("p² does not divide q^p − 1 = {}", big_q - 1)));
    }
    let cofactor = (big_q - 1) / p2;
    // some w of order exactly p²
    let mut found = None;
    for g in 2..big_q {
        let cand = FieldElement::from_raw(&ext, g).pow(cofactor)?;
        if !cand.pow(p)?.is_one() {
            found = Some(cand);
            break;
        }
    }
    let w = found.expect("the unit group is cyclic of order divisible by p²");
    let omega_ext = w.pow(p)?;
    let target = embed_element(&params.zeta_p, &ext)?;
    let k = (1..p)
        .find(|&k| omega_ext.pow(k).is_ok_and(|x| x == target))
        .ok_or_else(|| Error::Parameter("zeta_p is not a primitive p-th root of unity".into()))?;
    let zeta0 = w.pow(k)?;
    // the p roots of x^p = ζ^p are ζ0·ω^j; pick the smallest by coefficient list
    let mut zeta = zeta0.clone();
    let mut cur = zeta0;
    for _ in 1..p {
        cur = &cur * &omega_ext;
        if cur.cmp_lex(&zeta).is_lt() {
            zeta = cur.clone();
        }
    }
    let q = params.q();
    let mut diag = Vec::with_capacity(p as usize);
    let mut z = zeta.clone();
    for _ in 0..p {
        diag.push(z.clone());
        z = z.pow(q)?;
    }
    let rho_a = SquareMatrix::diagonal(&diag);
    let n = p as usize;
    let mut rho_c = SquareMatrix::zero(&ext, n);
    for i in 0..n {
        rho_c.set((i + 1) % n, i, &FieldElement::one(&ext));
    }
    Ok(RhoExtension { ext, zeta, rho_a, rho_c })
}

/// Vandermonde matrix with rows `(1, z_i, z_i², …)`.
pub fn vandermonde(nodes: &[FieldElement]) -> Result<SquareMatrix> {
    let field = nodes.first().ok_or_else(|| Error::Shape("no nodes".into()))?.field().clone();
    let n = nodes.len();
    let mut rows = Vec::with_capacity(n);
    for z in nodes {
        let mut row = Vec::with_capacity(n);
        let mut acc = FieldElement::one(&field);
        for _ in 0..n {
            row.push(acc.clone());
            acc = &acc * z;
        }
        rows.push(row);
    }
    SquareMatrix::from_rows(&field, &rows)
}

/// `V⁻¹ · rho_a · V` with V the Vandermonde matrix on the diagonal of `rho_a`.
pub fn vandermonde_conjugate(rho_a: &SquareMatrix) -> Result<(SquareMatrix, SquareMatrix)> {
    if !rho_a.is_diagonal() {
        return Err(Error::Parameter("rho_a must be diagonal".into()));
    }
    let nodes: Vec<FieldElement> = (0..rho_a.n()).map(|i| rho_a.get(i, i)).collect();
    for (i, x) in nodes.iter().enumerate() {
        if nodes[..i].contains(x) {
            return Err(Error::Parameter("Vandermonde nodes are not distinct".into()));
        }
    }
    let v = vandermonde(&nodes)?;
    let conj = v.inverse()?.matmul(rho_a)?.matmul(&v)?;
    Ok((conj, v))
}

/// True iff `V⁻¹ · rho_a · V` has every entry in the base field F_q.
pub fn conjugation_check(params: &GroupParams, rho_a: &SquareMatrix) -> Result<bool> {
    let (conj, _) = vandermonde_conjugate(rho_a)?;
    Ok(conj.restrict_to(&params.field).is_some())
}

// ---- tensor analysis ------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorProduct {
    pub label: String,
    pub char_poly: Polynomial,
    /// Eigen-product prediction, available when both factors have binomial
    /// characteristic polynomials `x^p − c`.
    pub predicted: Option<Polynomial>,
    pub matches_prediction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorReport {
    pub sigma_a_char_poly: Polynomial,
    pub sigma_ac_char_poly: Polynomial,
    pub sigma_c_char_poly: Polynomial,
    /// x^p − ζ^p is irreducible over F_q (ζ^p is not a p-th power).
    pub binomial_irreducible: bool,
    pub products: Vec<TensorProduct>,
    /// The polynomial (x^p − ζ^p)^p stated for the tensor square of σ.
    pub stated: Polynomial,
    pub stated_matches_a_tensor_a: bool,
    pub stated_matches_a_tensor_c: bool,
}

/// If `pa = x^n − ca` and `pb = x^n − cb`, then for every eigenvalue λ of A the
/// products λμ over the n distinct roots μ of `pb` run over all roots of
/// `x^n − ca·cb`, so `char(A ⊗ B) = (x^n − ca·cb)^n`.
pub fn kronecker_binomial_prediction(pa: &Polynomial, pb: &Polynomial) -> Option<Polynomial> {
    let (na, ca) = pa.as_binomial()?;
    let (nb, cb) = pb.as_binomial()?;
    (na == nb).then(|| Polynomial::binomial(na, &(&ca * &cb)).pow(na as u32))
}

pub fn tensor_analysis(rep: &Representation) -> Result<TensorReport> {
    let p = rep.params.p as usize;
    let a = &rep.sigma_a;
    let c = &rep.sigma_c;
    let (pa, pc) = (a.char_poly(), c.char_poly());
    let mut products = Vec::new();
    let mut char_of = std::collections::HashMap::new();
    for (label, x, px, y, py) in [
        ("a⊗a", a, &pa, a, &pa),
        ("c⊗c", c, &pc, c, &pc),
        ("a⊗c", a, &pa, c, &pc),
    ] {
        let cp = x.kronecker(y)?.char_poly();
        let predicted = kronecker_binomial_prediction(px, py);
        let matches_prediction = predicted.as_ref() == Some(&cp);
        char_of.insert(label, cp.clone());
        products.push(TensorProduct { label: label.into(), char_poly: cp, predicted, matches_prediction });
    }
    let stated = Polynomial::binomial(p, &rep.params.zeta_p).pow(p as u32);
    Ok(TensorReport {
        sigma_ac_char_poly: rep.sigma_ac()?.char_poly(),
        sigma_a_char_poly: pa,
        sigma_c_char_poly: pc,
        binomial_irreducible: !is_dth_power(&rep.params.zeta_p, rep.params.p),
        stated_matches_a_tensor_a: char_of["a⊗a"] == stated,
        stated_matches_a_tensor_c: char_of["a⊗c"] == stated,
        products,
        stated,
    })
}

/// Characteristic polynomial of ρ(a), restricted back to F_q when possible.
pub fn rho_char_poly_over_base(params: &GroupParams, rho: &RhoExtension) -> Option<Polynomial> {
    let cp = rho.rho_a.char_poly();
    let coeffs: Option<Vec<u64>> =
        cp.coeffs().iter().map(|c| c.is_prime_subfield().then(|| c.coeffs()[0])).collect();
    coeffs.map(|c| Polynomial::from_constants(&params.field, &c))
}

/// Convenience: the embedded image of σ's characteristic polynomial in the extension.
pub fn embed_char_poly(poly: &Polynomial, ext: &Field) -> Result<Polynomial> {
    embed_polynomial(poly, ext)
}
