//! One-round tripartite key exchange in a class-2 group.
//!
//! Party A, B, C hold α, β, γ and broadcast `(x^α, y^α)`, `(x^β, y^β)`,
//! `(x^γ, y^γ)`. Each derives `[x, y]^{αβγ}` from one x-power and one
//! y-power of the other two:
//!
//! | party | uses          | computes          |
//! |-------|---------------|-------------------|
//! | A     | x^β, y^γ      | [x^β, y^γ]^α      |
//! | B     | x^α, y^γ      | [x^α, y^γ]^β      |
//! | C     | x^α, y^β      | [x^α, y^β]^γ      |

use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Group, MatrixGroup};
use crate::matgroup::{MatrixWire, SquareMatrix};
use crate::oracle::{validate_exponent, Policy, SemigroupShape, Verdict};
use crate::repr::{GroupParams, GroupParamsWire, Representation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Party {
    A,
    B,
    C,
}

impl Party {
    pub const ALL: [Party; 3] = [Party::A, Party::B, Party::C];
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PublicBase<E> {
    pub x: E,
    pub y: E,
}

/// Checks that `[x, y]` is nontrivial of order `center_order`.
pub fn check_base<G: Group>(group: &G, base: &PublicBase<G::Elem>, center_order: u64) -> Result<()> {
    let comm = group.commutator(&base.x, &base.y)?;
    if group.is_identity(&comm) {
        return Err(Error::InvalidBase("[x, y] is the identity".into()));
    }
    if !group.is_identity(&group.pow(&comm, &BigInt::from(center_order))?) {
        return Err(Error::InvalidBase(format!("[x, y] does not have order {center_order}")));
    }
    Ok(())
}

/// x = σ(a), y = σ(c).
pub fn default_base(rep: &Representation) -> Result<PublicBase<SquareMatrix>> {
    let base = PublicBase { x: rep.sigma_a.clone(), y: rep.sigma_c.clone() };
    check_base(&MatrixGroup::of(&rep.sigma_a), &base, rep.params.p)?;
    Ok(base)
}

/// Random words `σ(a)^i σ(c)^j`, redrawn until `[x, y] ≠ I`.
pub fn random_word_base<R: Rng>(rep: &Representation, rng: &mut R) -> Result<PublicBase<SquareMatrix>> {
    let p = rep.params.p;
    let group = MatrixGroup::of(&rep.sigma_a);
    for _ in 0..64 {
        let mut word = || -> Result<SquareMatrix> {
            let i = rng.gen_range(0..p * p);
            let j = rng.gen_range(0..p);
            rep.sigma_a.pow(i)?.matmul(&rep.sigma_c.pow(j)?)
        };
        let base = PublicBase { x: word()?, y: word()? };
        if check_base(&group, &base, p).is_ok() {
            return Ok(base);
        }
    }
    Err(Error::InvalidBase("no noncommuting pair drawn in 64 attempts".into()))
}

/// A party's secret exponent. Never serialized.
#[derive(Clone, PartialEq, Eq)]
pub struct PrivateKey {
    pub owner: Party,
    alpha: u64,
}

impl fmt::Debug for PrivateKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrivateKey").field("owner", &self.owner).finish_non_exhaustive()
    }
}

impl PrivateKey {
    /// A key without policy checks; used for degenerate test cases.
    pub fn unchecked(owner: Party, alpha: u64) -> Self {
        Self { owner, alpha }
    }

    pub fn exponent(&self) -> u64 {
        self.alpha
    }
}

/// First candidate accepted by [`validate_exponent`] under `policy`.
///
/// Under the default policy an accepted exponent that lies in E(G) is logged.
pub fn keygen<I>(owner: Party, p: u64, shape: &SemigroupShape, policy: Policy, candidates: I) -> Result<PrivateKey>
where
    I: IntoIterator<Item = u64>,
{
    for alpha in candidates {
        match validate_exponent(alpha, p, shape, policy) {
            Verdict::Accept => {
                if shape.contains(alpha, p) {
                    log::warn!("party {owner}: exponent lies in the exponent semigroup E(G)");
                }
                return Ok(PrivateKey { owner, alpha });
            }
            Verdict::Reject(reason) => log::debug!("party {owner}: candidate rejected ({reason:?})"),
        }
    }
    Err(Error::KeygenFailure)
}

/// Uniform candidates in `[2, p²)`.
pub fn candidate_stream<R: Rng>(rng: &mut R, p: u64) -> impl Iterator<Item = u64> + '_ {
    std::iter::repeat_with(move || rng.gen_range(2..p * p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Broadcast<E> {
    #[serde(rename = "party")]
    pub owner: Party,
    pub x_pow: E,
    pub y_pow: E,
}

pub fn publish<G: Group>(group: &G, base: &PublicBase<G::Elem>, key: &PrivateKey) -> Result<Broadcast<G::Elem>> {
    let e = BigInt::from(key.alpha);
    Ok(Broadcast { owner: key.owner, x_pow: group.pow(&base.x, &e)?, y_pow: group.pow(&base.y, &e)? })
}

/// `[received_x_pow, received_y_pow]^α`.
pub fn derive_key<G: Group>(group: &G, received_x_pow: &G::Elem, received_y_pow: &G::Elem, own: &PrivateKey) -> Result<G::Elem> {
    let comm = group.commutator(received_x_pow, received_y_pow)?;
    group.pow(&comm, &BigInt::from(own.alpha))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript<P, E> {
    pub params: P,
    pub base: PublicBase<E>,
    pub broadcasts: Vec<Broadcast<E>>,
    pub keys: Vec<E>,
    pub agreed: bool,
    pub shared_key: E,
}

impl<P, E> Transcript<P, E> {
    pub fn broadcast(&self, party: Party) -> Option<&Broadcast<E>> {
        self.broadcasts.iter().find(|b| b.owner == party)
    }
}

pub type MatrixTranscript = Transcript<GroupParams, SquareMatrix>;
pub type TranscriptWire = Transcript<GroupParamsWire, MatrixWire>;

/// Runs the exchange for keys of A, B, C (in that order). The three
/// derivations run concurrently; the transcript does not depend on scheduling.
pub fn run_tripartite<P, G>(
    params: P,
    group: &G,
    base: &PublicBase<G::Elem>,
    keys: [&PrivateKey; 3],
) -> Result<Transcript<P, G::Elem>>
where
    P: Serialize,
    G: Group + Sync,
    G::Elem: Send + Sync + Serialize,
{
    let [ka, kb, kc] = keys;
    if [ka.owner, kb.owner, kc.owner] != Party::ALL {
        return Err(Error::Parameter("keys must belong to A, B, C in order".into()));
    }
    let ba = publish(group, base, ka)?;
    let bb = publish(group, base, kb)?;
    let bc = publish(group, base, kc)?;
    let (da, (db, dc)) = rayon::join(
        || derive_key(group, &bb.x_pow, &bc.y_pow, ka),
        || {
            rayon::join(
                || derive_key(group, &ba.x_pow, &bc.y_pow, kb),
                || derive_key(group, &ba.x_pow, &bb.y_pow, kc),
            )
        },
    );
    let derived = vec![da?, db?, dc?];
    let product = BigInt::from(ka.alpha) * kb.alpha * kc.alpha;
    let expected = group.pow(&group.commutator(&base.x, &base.y)?, &product)?;
    let agreed = derived.iter().all(|k| *k == derived[0]);
    let transcript = Transcript {
        params,
        base: base.clone(),
        broadcasts: vec![ba, bb, bc],
        shared_key: derived[0].clone(),
        keys: derived,
        agreed,
    };
    if !agreed || transcript.shared_key != expected {
        return Err(Error::ProtocolFailure {
            transcript: serde_json::to_string(&transcript).unwrap_or_else(|e| format!("<unserializable: {e}>")),
        });
    }
    Ok(transcript)
}

impl MatrixTranscript {
    pub fn to_wire(&self) -> TranscriptWire {
        Transcript {
            params: self.params.to_wire(),
            base: PublicBase { x: self.base.x.to_wire(), y: self.base.y.to_wire() },
            broadcasts: self
                .broadcasts
                .iter()
                .map(|b| Broadcast { owner: b.owner, x_pow: b.x_pow.to_wire(), y_pow: b.y_pow.to_wire() })
                .collect(),
            keys: self.keys.iter().map(SquareMatrix::to_wire).collect(),
            agreed: self.agreed,
            shared_key: self.shared_key.to_wire(),
        }
    }

    /// Rebuilds a transcript, validating parameters, shapes and the party layout.
    pub fn from_wire(w: &TranscriptWire) -> Result<Self> {
        let params = GroupParams::from_wire(&w.params)?;
        let f = &params.field;
        let n = params.p as usize;
        let mat = |m: &MatrixWire| -> Result<SquareMatrix> {
            let m = SquareMatrix::from_wire(f, m)?;
            if m.n() != n {
                return Err(Error::Parse(format!("expected {n}x{n} matrices, found {0}x{0}", m.n())));
            }
            Ok(m)
        };
        let broadcasts = w
            .broadcasts
            .iter()
            .map(|b| Ok(Broadcast { owner: b.owner, x_pow: mat(&b.x_pow)?, y_pow: mat(&b.y_pow)? }))
            .collect::<Result<Vec<_>>>()?;
        if broadcasts.iter().map(|b| b.owner).collect::<Vec<_>>() != Party::ALL {
            return Err(Error::Parse("transcript must hold broadcasts from A, B, C in order".into()));
        }
        let keys = w.keys.iter().map(&mat).collect::<Result<Vec<_>>>()?;
        if keys.len() != 3 {
            return Err(Error::Parse(format!("expected 3 derived keys, found {}", keys.len())));
        }
        Ok(Transcript {
            base: PublicBase { x: mat(&w.base.x)?, y: mat(&w.base.y)? },
            broadcasts,
            keys,
            agreed: w.agreed,
            shared_key: mat(&w.shared_key)?,
            params,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_wire()).expect("transcript serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_wire(&serde_json::from_str(s)?)
    }
}
