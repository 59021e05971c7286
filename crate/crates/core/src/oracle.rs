//! Matrix-free model of Mod_n(p) = ⟨a, b | a^{p^{n-1}} = b^p = 1, b⁻¹ab = a^{1+p^{n-2}}⟩.
//!
//! Every element has a unique normal form `a^i b^j`. From `b a = a^{t⁻¹} b`
//! the collection rule is
//!
//! ```text
//! (i1, j1) · (i2, j2) = (i1 + i2 · t⁻¹^{j1}  mod p^{n-1},  j1 + j2  mod p)
//! ```
//!
//! This path shares no code with the matrix carrier, so it serves as the
//! ground truth for group identities and for checking the representation.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{check_odd_prime, inv_mod, pow_mod};
use crate::error::{Error, Result};
use crate::group::Group;

/// Upper bound on `pairs · exponents` for an exhaustive identity check.
pub const IDENTITY_GUARD: u64 = 1_000_000;
/// Upper bound on `order² · exp(G)` for the exhaustive semigroup computation.
pub const SEMIGROUP_GUARD: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationParams {
    pub p: u64,
    pub n: u32,
    /// Conjugation exponent `1 + p^{n-2}`.
    pub t: u64,
    /// `t⁻¹ mod p^{n-1}`.
    pub t_inv: u64,
}

impl PresentationParams {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        check_odd_prime(p)?;
        if n < 3 {
            return Err(Error::Parameter(format!("Mod_n(p) needs n >= 3, got {n}")));
        }
        match p.checked_pow(n) {
            Some(order) if order < 1 << 40 => {}
            _ => return Err(Error::Parameter(format!("group order {p}^{n} is too large"))),
        }
        let modulus = p.pow(n - 1);
        let t = 1 + p.pow(n - 2);
        let t_inv = inv_mod(t, modulus).expect("1 + p^{n-2} is a unit");
        Ok(Self { p, n, t, t_inv })
    }

    /// Parameters with an arbitrary twist, unchecked apart from `t_inv` being a unit.
    /// `t = t_inv = 1` gives the abelian group C_{p^{n-1}} × C_p.
    pub fn from_raw(p: u64, n: u32, t: u64, t_inv: u64) -> Self {
        Self { p, n, t, t_inv }
    }

    /// Order of `a`, which is also the exponent of the group.
    pub fn a_order(&self) -> u64 {
        self.p.pow(self.n - 1)
    }

    pub fn group_order(&self) -> u64 {
        self.p.pow(self.n)
    }
}

/// `a^i b^j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub i: u64,
    pub j: u64,
}

impl NormalForm {
    pub const IDENTITY: NormalForm = NormalForm { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> Self {
        Self { i, j }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a^{} b^{}", self.i, self.j)
    }
}

/// Mod_n(p) with precomputed powers of the twist.
#[derive(Debug, Clone)]
pub struct ModularGroup {
    pp: PresentationParams,
    modulus: u64,
    tinv_pows: Vec<u64>,
    tinv_inv_pows: Vec<u64>,
}

impl ModularGroup {
    pub fn new(pp: PresentationParams) -> Result<Self> {
        let modulus = pp.a_order();
        let base_inv = inv_mod(pp.t_inv, modulus)
            .ok_or_else(|| Error::Parameter("twist exponent is not a unit".into()))?;
        let tinv_pows = (0..pp.p).map(|j| pow_mod(pp.t_inv, j, modulus)).collect();
        let tinv_inv_pows = (0..pp.p).map(|j| pow_mod(base_inv, j, modulus)).collect();
        Ok(Self { pp, modulus, tinv_pows, tinv_inv_pows })
    }

    /// Mod_n(p) with its standard presentation.
    pub fn standard(p: u64, n: u32) -> Result<Self> {
        Self::new(PresentationParams::new(p, n)?)
    }

    pub fn params(&self) -> &PresentationParams {
        &self.pp
    }

    pub fn order(&self) -> u64 {
        self.pp.group_order()
    }

    pub fn a(&self) -> NormalForm {
        NormalForm::new(1 % self.modulus, 0)
    }

    pub fn b(&self) -> NormalForm {
        NormalForm::new(0, 1 % self.pp.p)
    }

    /// All elements, indexed by `i + j · p^{n-1}`.
    pub fn elements(&self) -> Vec<NormalForm> {
        (0..self.pp.p)
            .flat_map(|j| (0..self.modulus).map(move |i| NormalForm::new(i, j)))
            .collect()
    }

    fn index(&self, u: NormalForm) -> usize {
        (u.i + u.j * self.modulus) as usize
    }

    pub fn mul(&self, u: NormalForm, v: NormalForm) -> NormalForm {
        let shifted = (v.i as u128 * self.tinv_pows[u.j as usize] as u128 % self.modulus as u128) as u64;
        NormalForm::new((u.i + shifted) % self.modulus, (u.j + v.j) % self.pp.p)
    }

    pub fn inv(&self, u: NormalForm) -> NormalForm {
        // solve i + i' · t⁻¹^j = 0 for i'
        let scaled = (u.i as u128 * self.tinv_inv_pows[u.j as usize] as u128 % self.modulus as u128) as u64;
        NormalForm::new((self.modulus - scaled) % self.modulus, (self.pp.p - u.j) % self.pp.p)
    }

    pub fn pow(&self, u: NormalForm, e: i64) -> NormalForm {
        let base = if e < 0 { self.inv(u) } else { u };
        let mut e = e.unsigned_abs();
        let (mut acc, mut b) = (NormalForm::IDENTITY, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn comm(&self, u: NormalForm, v: NormalForm) -> NormalForm {
        let t = self.mul(self.inv(u), self.inv(v));
        self.mul(self.mul(t, u), v)
    }
}

impl Group for ModularGroup {
    type Elem = NormalForm;

    fn identity(&self) -> NormalForm {
        NormalForm::IDENTITY
    }

    fn op(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
        Ok(self.mul(*a, *b))
    }

    fn inverse(&self, a: &NormalForm) -> Result<NormalForm> {
        Ok(self.inv(*a))
    }
}

// ---- class-2 identities --------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum CheckMode {
    Exhaustive,
    /// Seeded random pairs; used above the exhaustive guard.
    Sampled { seed: u64, pairs: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `[x,y]^n = [x^n,y] = [x,y^n]`
    CommutatorPower,
    /// `(xy)^n = x^n y^n [y,x]^{n(n-1)/2}`
    PowerOfProduct,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub x: NormalForm,
    pub y: NormalForm,
    pub n: u64,
    pub identity: Identity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub passed: bool,
    pub mode: CheckMode,
    pub pairs_checked: u64,
    pub exponent_range: u64,
    pub counterexample: Option<Counterexample>,
}

fn check_pair(g: &ModularGroup, x: NormalForm, y: NormalForm, range: u64) -> Option<Counterexample> {
    let cxy = g.comm(x, y);
    let cyx = g.comm(y, x);
    let xy = g.mul(x, y);
    let (mut xn, mut yn, mut xyn, mut cxyn) = (NormalForm::IDENTITY, NormalForm::IDENTITY, NormalForm::IDENTITY, NormalForm::IDENTITY);
    // cyx_tri = [y,x]^{n(n-1)/2}, cyx_n = [y,x]^n
    let (mut cyx_tri, mut cyx_n) = (NormalForm::IDENTITY, NormalForm::IDENTITY);
    for n in 0..range {
        let lhs = cxyn;
        if g.comm(xn, y) != lhs || g.comm(x, yn) != lhs {
            return Some(Counterexample { x, y, n, identity: Identity::CommutatorPower });
        }
        if xyn != g.mul(g.mul(xn, yn), cyx_tri) {
            return Some(Counterexample { x, y, n, identity: Identity::PowerOfProduct });
        }
        xn = g.mul(xn, x);
        yn = g.mul(yn, y);
        xyn = g.mul(xyn, xy);
        cxyn = g.mul(cxyn, cxy);
        cyx_tri = g.mul(cyx_tri, cyx_n);
        cyx_n = g.mul(cyx_n, cyx);
    }
    None
}

/// Checks both class-2 identities for every pair (or a seeded sample of pairs)
/// and every `0 <= n < exponent_range`, returning the first counterexample.
pub fn check_class2_identities(
    group: &ModularGroup,
    exponent_range: u64,
    mode: CheckMode,
) -> Result<IdentityReport> {
    let elems = group.elements();
    let order = elems.len() as u64;
    let pairs: Vec<(NormalForm, NormalForm)> = match mode {
        CheckMode::Exhaustive => {
            let work = order.saturating_mul(order).saturating_mul(exponent_range.max(1));
            if work > IDENTITY_GUARD {
                return Err(Error::SizeGuard(format!(
                    "{order}² pairs × {exponent_range} exponents exceeds {IDENTITY_GUARD}"
                )));
            }
            elems.iter().flat_map(|&x| elems.iter().map(move |&y| (x, y))).collect()
        }
        CheckMode::Sampled { seed, pairs } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..pairs)
                .map(|_| (elems[rng.gen_range(0..elems.len())], elems[rng.gen_range(0..elems.len())]))
                .collect()
        }
    };
    let counterexample = pairs.par_iter().find_map_first(|&(x, y)| check_pair(group, x, y, exponent_range));
    Ok(IdentityReport {
        passed: counterexample.is_none(),
        mode,
        pairs_checked: pairs.len() as u64,
        exponent_range,
        counterexample,
    })
}

// ---- exponent semigroup --------------------------------------------------------

/// `E(G)` within one exponent period, with the fitted modulus exponent `e + r`
/// (`None` when the set is not of the form `p^k Z ∪ (p^k Z + 1)`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupShape {
    pub modulus_exponent: Option<u32>,
    pub raw_set: Vec<u64>,
}

impl SemigroupShape {
    /// The set `p^k Z ∪ (p^k Z + 1)` listed over `[0, period)`.
    pub fn fitted(p: u64, k: u32, period: u64) -> Self {
        let m = p.pow(k);
        let raw_set = (0..period).filter(|&n| n % m == 0 || n % m == 1 % m).collect();
        Self { modulus_exponent: Some(k), raw_set }
    }

    /// Whether `n` lies in E(G).
    pub fn contains(&self, n: u64, p: u64) -> bool {
        match self.modulus_exponent {
            Some(k) => {
                let m = p.pow(k);
                n.is_multiple_of(m) || n % m == 1 % m
            }
            None => self.raw_set.binary_search(&n).is_ok(),
        }
    }

    /// `p^{e+r}` when the shape fits.
    pub fn modulus(&self, p: u64) -> Option<u64> {
        self.modulus_exponent.map(|k| p.pow(k))
    }
}

/// Exponent of the group, by brute force over element orders.
pub fn group_exponent(group: &ModularGroup) -> u64 {
    group
        .elements()
        .iter()
        .map(|&x| {
            let mut acc = x;
            let mut k = 1u64;
            while acc != NormalForm::IDENTITY {
                acc = group.mul(acc, x);
                k += 1;
            }
            k
        })
        .fold(1, num_integer::lcm)
}

/// Exponent of G/Z(G) written as `p^e`; returns `e`.
pub fn center_quotient_exponent(group: &ModularGroup) -> u32 {
    let elems = group.elements();
    let center: BTreeSet<NormalForm> = elems
        .iter()
        .copied()
        .filter(|&z| elems.iter().all(|&x| group.mul(z, x) == group.mul(x, z)))
        .collect();
    let p = group.params().p;
    let mut e = 0u32;
    let mut pe = 1i64;
    while !elems.iter().all(|&x| center.contains(&group.pow(x, pe))) {
        e += 1;
        pe *= p as i64;
    }
    e
}

/// Computes `{n in [0, exp G) : (xy)^n = x^n y^n for all x, y}` and fits it
/// to the shape `p^k Z ∪ (p^k Z + 1)` with the smallest matching `k`.
pub fn exponent_semigroup_brute(group: &ModularGroup) -> Result<SemigroupShape> {
    let order = group.order();
    let exp = group.params().a_order();
    let work = order.saturating_mul(order).saturating_mul(exp);
    if work > SEMIGROUP_GUARD {
        return Err(Error::SizeGuard(format!("{order}² pairs × {exp} exponents exceeds {SEMIGROUP_GUARD}")));
    }
    debug_assert_eq!(exp, group_exponent(group));
    let elems = group.elements();
    let raw_set: Vec<u64> = (0..exp)
        .into_par_iter()
        .filter(|&n| {
            let powers: Vec<NormalForm> = elems.iter().map(|&x| group.pow(x, n as i64)).collect();
            elems.iter().all(|&x| {
                elems.iter().all(|&y| {
                    powers[group.index(group.mul(x, y))] == group.mul(powers[group.index(x)], powers[group.index(y)])
                })
            })
        })
        .collect();
    let p = group.params().p;
    let mut k = 0u32;
    loop {
        let fit = SemigroupShape::fitted(p, k, exp);
        if fit.raw_set == raw_set {
            return Ok(fit);
        }
        if p.pow(k) >= exp {
            return Ok(SemigroupShape { modulus_exponent: None, raw_set });
        }
        k += 1;
    }
}

// ---- exponent validation -------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Policy {
    /// Reject exponents sharing a factor with p.
    #[default]
    CoprimeOnly,
    /// Also reject exponents in E(G).
    Strict,
}

impl std::str::FromStr for Policy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coprime-only" => Ok(Policy::CoprimeOnly),
            "strict" => Ok(Policy::Strict),
            other => Err(Error::Parameter(format!("unknown policy {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RejectReason {
    NotCoprime,
    InExponentSemigroup,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Accept,
    Reject(RejectReason),
}

pub fn validate_exponent(alpha: u64, p: u64, shape: &SemigroupShape, policy: Policy) -> Verdict {
    if num_integer::gcd(alpha, p) != 1 {
        return Verdict::Reject(RejectReason::NotCoprime);
    }
    if policy == Policy::Strict && shape.contains(alpha, p) {
        return Verdict::Reject(RejectReason::InExponentSemigroup);
    }
    Verdict::Accept
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn nf(i: u64, j: u64) -> NormalForm {
        NormalForm::new(i, j)
    }

    #[test]
    fn presentation_params() {
        let pp = PresentationParams::new(3, 4).unwrap();
        assert_eq!((pp.t, pp.t_inv, pp.a_order(), pp.group_order()), (10, 19, 27, 81));
        assert_eq!(pp.t * pp.t_inv % 27, 1);
        assert!(matches!(PresentationParams::new(3, 2), Err(Error::Parameter(_))));
        assert!(matches!(PresentationParams::new(4, 3), Err(Error::Parameter(_))));
        assert!(matches!(PresentationParams::new(3, 40), Err(Error::Parameter(_))));
    }

    #[test]
    fn normal_form_examples() {
        let g = ModularGroup::standard(3, 3).unwrap();
        assert_eq!(g.params().t_inv, 7);
        assert_eq!(g.mul(nf(0, 1), nf(1, 0)), nf(7, 1));
        assert_eq!(g.comm(g.a(), g.b()), nf(3, 0));
        let c = g.pow(g.b(), 2);
        assert_eq!(g.comm(g.a(), c), nf(6, 0));
        assert_eq!(g.pow(g.a(), 9), NormalForm::IDENTITY);
        assert_eq!(g.pow(g.b(), 3), NormalForm::IDENTITY);
        // b⁻¹ a b = a^t
        assert_eq!(g.mul(g.mul(g.inv(g.b()), g.a()), g.b()), g.pow(g.a(), 4));
        assert_eq!(g.elements().len(), 27);
        assert_eq!(g.a().to_string(), "a^1 b^0");
    }

    #[test]
    fn group_laws_exhaustive_small() {
        for (p, n) in [(3u64, 3u32), (3, 4), (5, 3)] {
            let g = ModularGroup::standard(p, n).unwrap();
            let els = g.elements();
            for &x in &els {
                assert_eq!(g.mul(x, g.inv(x)), NormalForm::IDENTITY);
                assert_eq!(g.mul(g.inv(x), x), NormalForm::IDENTITY);
                assert_eq!(g.mul(x, NormalForm::IDENTITY), x);
            }
            if g.order() <= 81 {
                for &x in &els {
                    for &y in &els {
                        for &z in &els {
                            assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mutated_twist_breaks_the_group() {
        let pp = PresentationParams::new(3, 3).unwrap();
        let bad = ModularGroup::new(PresentationParams::from_raw(3, 3, pp.t, pp.t_inv + 1)).unwrap();
        let els = bad.elements();
        let assoc = els
            .iter()
            .all(|&x| els.iter().all(|&y| els.iter().all(|&z| bad.mul(bad.mul(x, y), z) == bad.mul(x, bad.mul(y, z)))));
        assert!(!assoc);
        let report = check_class2_identities(&bad, 9, CheckMode::Exhaustive).unwrap();
        assert!(!report.passed);
        assert!(report.counterexample.is_some());
    }

    #[test]
    fn identities_hold() {
        let g = ModularGroup::standard(3, 3).unwrap();
        let r = check_class2_identities(&g, 27, CheckMode::Exhaustive).unwrap();
        assert!(r.passed);
        assert_eq!(r.pairs_checked, 729);
        let g = ModularGroup::standard(3, 5).unwrap();
        let r = check_class2_identities(&g, 25, CheckMode::Sampled { seed: 7, pairs: 2000 }).unwrap();
        assert!(r.passed);
        assert!(matches!(check_class2_identities(&g, 25, CheckMode::Exhaustive), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn semigroup_mod3_3() {
        let g = ModularGroup::standard(3, 3).unwrap();
        assert_eq!(group_exponent(&g), 9);
        assert_eq!(center_quotient_exponent(&g), 1);
        let shape = exponent_semigroup_brute(&g).unwrap();
        assert_eq!(shape.raw_set, vec![0, 1, 3, 4, 6, 7]);
        assert_eq!(shape.modulus_exponent, Some(1));
        assert_eq!(shape.modulus(3), Some(3));
        assert!(shape.contains(10, 3));
        assert!(!shape.contains(5, 3));
    }

    #[test]
    fn semigroup_larger_groups() {
        // Mod_4(3): exponent 27, center quotient exponent 3
        let g = ModularGroup::standard(3, 4).unwrap();
        let shape = exponent_semigroup_brute(&g).unwrap();
        assert_eq!(group_exponent(&g), 27);
        assert_eq!(center_quotient_exponent(&g), 1);
        assert_eq!(shape.modulus_exponent, Some(1));
        let g = ModularGroup::standard(5, 3).unwrap();
        assert_eq!(exponent_semigroup_brute(&g).unwrap().modulus_exponent, Some(1));
        let big = ModularGroup::standard(3, 7).unwrap();
        assert!(matches!(exponent_semigroup_brute(&big), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn semigroup_abelian() {
        let g = ModularGroup::new(PresentationParams::from_raw(3, 3, 1, 1)).unwrap();
        assert_eq!(center_quotient_exponent(&g), 0);
        let shape = exponent_semigroup_brute(&g).unwrap();
        assert_eq!(shape.modulus_exponent, Some(0));
        assert_eq!(shape.raw_set, (0..9).collect::<Vec<_>>());
    }

    #[test]
    fn validate_exponent_policies() {
        let shape = SemigroupShape { modulus_exponent: Some(1), raw_set: vec![0, 1, 3, 4, 6, 7] };
        assert_eq!(validate_exponent(3, 3, &shape, Policy::CoprimeOnly), Verdict::Reject(RejectReason::NotCoprime));
        assert_eq!(validate_exponent(4, 3, &shape, Policy::CoprimeOnly), Verdict::Accept);
        assert_eq!(validate_exponent(4, 3, &shape, Policy::Strict), Verdict::Reject(RejectReason::InExponentSemigroup));
        assert_eq!(validate_exponent(5, 3, &shape, Policy::Strict), Verdict::Accept);
        assert_eq!("strict".parse::<Policy>().unwrap(), Policy::Strict);
        assert_eq!("coprime-only".parse::<Policy>().unwrap(), Policy::CoprimeOnly);
        assert!("lax".parse::<Policy>().is_err());
        assert_eq!(Policy::default(), Policy::CoprimeOnly);
    }

    #[test]
    fn semigroup_closed_under_multiplication() {
        for (p, n) in [(3, 3), (3, 4), (5, 3)] {
            let g = ModularGroup::standard(p, n).unwrap();
            let exp = g.params().a_order();
            let shape = exponent_semigroup_brute(&g).unwrap();
            for &a in &shape.raw_set {
                for &b in &shape.raw_set {
                    assert!(shape.raw_set.contains(&(a * b % exp)), "{a}·{b} in Mod_{n}({p})");
                }
            }
        }
    }

    #[test]
    fn fitted_shape() {
        let s = SemigroupShape::fitted(3, 1, 9);
        assert_eq!(s.raw_set, vec![0, 1, 3, 4, 6, 7]);
        assert_eq!(SemigroupShape::fitted(3, 0, 4).raw_set, vec![0, 1, 2, 3]);
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"modulus_exponent":1,"raw_set":[0,1,3,4,6,7]}"#
        );
    }

    proptest! {
        #[test]
        fn associativity_mod3_6(x in (0u64..243, 0u64..3), y in (0u64..243, 0u64..3), z in (0u64..243, 0u64..3)) {
            let g = ModularGroup::standard(3, 6).unwrap();
            let (x, y, z) = (nf(x.0, x.1), nf(y.0, y.1), nf(z.0, z.1));
            prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
            prop_assert_eq!(g.inv(g.mul(x, y)), g.mul(g.inv(y), g.inv(x)));
        }

        #[test]
        fn pow_additive(x in (0u64..125, 0u64..5), e1 in -300i64..300, e2 in -300i64..300) {
            let g = ModularGroup::standard(5, 4).unwrap();
            let x = nf(x.0, x.1);
            prop_assert_eq!(g.mul(g.pow(x, e1), g.pow(x, e2)), g.pow(x, e1 + e2));
        }

        #[test]
        fn commutators_are_central(x in (0u64..49, 0u64..7), y in (0u64..49, 0u64..7), z in (0u64..49, 0u64..7)) {
            let g = ModularGroup::standard(7, 3).unwrap();
            let (x, y, z) = (nf(x.0, x.1), nf(y.0, y.1), nf(z.0, z.1));
            let c = g.comm(x, y);
            prop_assert_eq!(g.mul(c, z), g.mul(z, c));
            prop_assert_eq!(g.pow(c, 7), NormalForm::IDENTITY);
        }
    }
}
