//! Desk-scale adversary working only from public data.
//!
//! The pipeline moves every discrete logarithm into the order-p center:
//! `[x^α, y] = [x, y]^α`, so recovering any exponent mod p costs a DLP in a
//! cyclic group of order p.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Counting, Group, MatrixGroup};
use crate::matgroup::SquareMatrix;
use crate::oracle::SemigroupShape;
use crate::protocol::{MatrixTranscript, Party, PublicBase, Broadcast};

/// Largest order accepted by [`dlp_exhaustive`].
pub const EXHAUSTIVE_GUARD: u64 = 1_000_000;
/// Largest baby-step table accepted by [`dlp_bsgs`].
pub const BSGS_TABLE_GUARD: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlpInstance<E> {
    pub g: E,
    pub h: E,
    /// Order of ⟨g⟩ (or a multiple of it).
    pub order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DlpResult {
    pub exponent: Option<u64>,
    /// Group multiplications performed.
    pub group_ops: u64,
}

/// Smallest `e` in `[0, order)` with `g^e = h`, by walking the powers of g.
pub fn dlp_exhaustive<G: Group>(group: &G, inst: &DlpInstance<G::Elem>) -> Result<DlpResult> {
    if inst.order > EXHAUSTIVE_GUARD {
        return Err(Error::SizeGuard(format!("order {} exceeds {EXHAUSTIVE_GUARD}", inst.order)));
    }
    let counted = Counting::new(group);
    let mut cur = counted.identity();
    for e in 0..inst.order {
        if cur == inst.h {
            return Ok(DlpResult { exponent: Some(e), group_ops: counted.mults() });
        }
        if e + 1 < inst.order {
            cur = counted.op(&cur, &inst.g)?;
        }
    }
    Ok(DlpResult { exponent: None, group_ops: counted.mults() })
}

/// Baby-step giant-step with `m = ⌈√order⌉`: at most `m` baby-step and
/// `m − 1` giant-step multiplications plus one inversion.
pub fn dlp_bsgs<G: Group>(group: &G, inst: &DlpInstance<G::Elem>) -> Result<DlpResult> {
    let m = ceil_sqrt(inst.order.max(1));
    if m > BSGS_TABLE_GUARD {
        return Err(Error::SizeGuard(format!("baby-step table of {m} entries exceeds {BSGS_TABLE_GUARD}")));
    }
    let counted = Counting::new(group);
    let mut table: HashMap<G::Elem, u64> = HashMap::with_capacity(m as usize);
    let mut cur = counted.identity();
    for j in 0..m {
        table.entry(cur.clone()).or_insert(j);
        cur = counted.op(&cur, &inst.g)?;
    }
    // cur = g^m
    let giant = counted.inverse(&cur)?;
    let mut gamma = inst.h.clone();
    for i in 0..m {
        if let Some(&j) = table.get(&gamma) {
            let e = i * m + j;
            if e < inst.order {
                return Ok(DlpResult { exponent: Some(e), group_ops: counted.mults() });
            }
        }
        if i + 1 < m {
            gamma = counted.op(&gamma, &giant)?;
        }
    }
    Ok(DlpResult { exponent: None, group_ops: counted.mults() })
}

fn ceil_sqrt(n: u64) -> u64 {
    let r = n.sqrt();
    if r * r == n { r } else { r + 1 }
}

/// `[x^α, y] = [x, y]^α`.
pub fn reduce_to_center<G: Group>(group: &G, x_pow: &G::Elem, y: &G::Elem) -> Result<G::Elem> {
    group.commutator(x_pow, y)
}

/// First `n` of the form `a·p^k` or `a·p^k + 1` (`a >= 1`, `n <= bound`)
/// with `key_public^n = target`, where `p^k` is the fitted semigroup modulus.
pub fn semigroup_search<G: Group>(
    group: &G,
    key_public: &G::Elem,
    target: &G::Elem,
    shape: &SemigroupShape,
    p: u64,
    bound: u64,
) -> Result<Option<u64>> {
    let step = shape
        .modulus(p)
        .ok_or_else(|| Error::Parameter("exponent semigroup does not fit p^k Z ∪ (p^k Z + 1)".into()))?;
    let mut a = 1u64;
    while a * step <= bound {
        for n in [a * step, a * step + 1] {
            if n <= bound && group.pow(key_public, &BigInt::from(n))? == *target {
                return Ok(Some(n));
            }
        }
        a += 1;
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DlpMethod {
    #[default]
    Bsgs,
    Exhaustive,
}

impl DlpMethod {
    pub fn label(self) -> &'static str {
        match self {
            DlpMethod::Bsgs => "center-reduction+bsgs",
            DlpMethod::Exhaustive => "center-reduction+exhaustive",
        }
    }

    pub fn solve<G: Group>(self, group: &G, inst: &DlpInstance<G::Elem>) -> Result<DlpResult> {
        match self {
            DlpMethod::Bsgs => dlp_bsgs(group, inst),
            DlpMethod::Exhaustive => dlp_exhaustive(group, inst),
        }
    }
}

/// Public-data key recovery in any class-2 group with known center order.
///
/// Computes `[x^α, y^β] = [x,y]^{αβ}` and `[x, y^γ] = [x,y]^γ`, recovers
/// γ mod `center_order` by a DLP on `[x, y]`, and returns
/// `([x,y]^{αβ})^γ` together with the DLP cost.
pub fn recover_shared_key<G: Group>(
    group: &G,
    base: &PublicBase<G::Elem>,
    broadcasts: &[Broadcast<G::Elem>],
    center_order: u64,
    method: DlpMethod,
) -> Result<(G::Elem, DlpResult)> {
    let find = |party: Party| {
        broadcasts
            .iter()
            .find(|b| b.owner == party)
            .ok_or_else(|| Error::Parse(format!("no broadcast from party {party}")))
    };
    let (ba, bb, bc) = (find(Party::A)?, find(Party::B)?, find(Party::C)?);
    let k_ab = reduce_to_center(group, &ba.x_pow, &bb.y_pow)?;
    let center_gen = group.commutator(&base.x, &base.y)?;
    let h = reduce_to_center(group, &base.x, &bc.y_pow)?;
    let inst = DlpInstance { g: center_gen, h, order: center_order };
    let dlp = method.solve(group, &inst)?;
    let gamma = dlp
        .exponent
        .ok_or_else(|| Error::NotInGroup("[x, y^γ] is not a power of [x, y]".into()))?;
    Ok((group.pow(&k_ab, &BigInt::from(gamma))?, dlp))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyRecoveryReport {
    pub recovered_key: Option<SquareMatrix>,
    pub matches: bool,
    pub group_ops: u64,
    pub method: String,
}

/// Solves the small-order CDH instance in a transcript and compares the
/// recovered key with the shared key the parties derived.
pub fn cdh_note(transcript: &MatrixTranscript, method: DlpMethod) -> Result<KeyRecoveryReport> {
    let group = MatrixGroup::of(&transcript.base.x);
    let (key, dlp) =
        recover_shared_key(&group, &transcript.base, &transcript.broadcasts, transcript.params.p, method)?;
    Ok(KeyRecoveryReport {
        matches: key == transcript.shared_key,
        recovered_key: Some(key),
        group_ops: dlp.group_ops,
        method: method.label().into(),
    })
}

/// The exponent-semigroup attack: recovers γ as the first candidate
/// `a·p^k` or `a·p^k + 1` with `[x,y]^n = [x, y^γ]`. Succeeds only when γ
/// itself lies in E(G).
pub fn semigroup_attack(transcript: &MatrixTranscript, shape: &SemigroupShape) -> Result<KeyRecoveryReport> {
    let group = MatrixGroup::of(&transcript.base.x);
    let p = transcript.params.p;
    let counted = Counting::new(&group);
    let center_gen = group.commutator(&transcript.base.x, &transcript.base.y)?;
    let bc = transcript
        .broadcast(Party::C)
        .ok_or_else(|| Error::Parse("no broadcast from party C".into()))?;
    let h = reduce_to_center(&group, &transcript.base.x, &bc.y_pow)?;
    let n = semigroup_search(&counted, &center_gen, &h, shape, p, p * p)?;
    let recovered_key = match n {
        Some(n) => {
            let (ba, bb) = (
                transcript.broadcast(Party::A).ok_or_else(|| Error::Parse("no broadcast from A".into()))?,
                transcript.broadcast(Party::B).ok_or_else(|| Error::Parse("no broadcast from B".into()))?,
            );
            let k_ab = reduce_to_center(&group, &ba.x_pow, &bb.y_pow)?;
            Some(k_ab.pow(n)?)
        }
        None => None,
    };
    Ok(KeyRecoveryReport {
        matches: recovered_key.as_ref() == Some(&transcript.shared_key),
        recovered_key,
        group_ops: counted.mults(),
        method: "center-reduction+semigroup".into(),
    })
}
