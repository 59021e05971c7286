//! Tripartite key exchange over groups of nilpotency class 2, realized by
//! matrix representations of the modular p-group Mod₃(p) over finite fields.
//!
//! Layout:
//!
//! * [`field`]: F_q arithmetic, roots of unity, parameter search;
//! * [`matgroup`]: dense matrices, characteristic polynomials, Kronecker products;
//! * [`repr`]: the representations σ and ρ of Mod₃(p) and their checks;
//! * [`oracle`]: normal-form model of Mod_n(p), identities and the exponent semigroup;
//! * [`protocol`]: key generation, broadcasts, key derivation, transcripts;
//! * [`attacks`]: discrete logarithms in the center and public-data key recovery.

pub mod arith;
pub mod attacks;
pub mod error;
pub mod field;
pub mod group;
pub mod matgroup;
pub mod oracle;
pub mod protocol;
pub mod repr;

pub use arith::is_prime;
pub use error::{Error, Result};
pub use field::{make_field, param_search, root_of_unity, Field, FieldElement, FieldSpec, Polynomial};
pub use group::{Group, MatrixGroup};
pub use matgroup::SquareMatrix;
pub use oracle::{ModularGroup, NormalForm, Policy, PresentationParams, SemigroupShape};
pub use protocol::{MatrixTranscript, Party, PrivateKey, PublicBase, Transcript};
pub use repr::{build_sigma, GroupParams, Representation};
