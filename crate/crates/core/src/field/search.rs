use super::{make_field, root_of_unity};
use crate::arith::{check_odd_prime, is_prime, pow_mod};
use crate::error::{Error, Result};
use crate::repr::GroupParams;

/// Finds the smallest odd prime `s <= search_bound` with `s ≡ 1 (mod p)` and
/// `s ≢ 1 (mod p²)`, so that `|s|_{p²} = p` and σ is realizable over F_s.
pub fn param_search(p: u64, search_bound: u64) -> Result<GroupParams> {
    check_odd_prime(p)?;
    if search_bound < p {
        return Err(Error::Parameter(format!("search bound {search_bound} is below p = {p}")));
    }
    let p2 = p * p;
    let s = (3..=search_bound)
        .step_by(2)
        .find(|&s| s % p == 1 && s % p2 != 1 && is_prime(s))
        .ok_or_else(|| {
            Error::SearchExhausted(format!("no prime s <= {search_bound} with s ≡ 1 mod {p}, s ≢ 1 mod {p2}"))
        })?;
    let i = (1..p)
        .find(|&i| pow_mod(p + 1, i, p2) == s % p2)
        .expect("s ≡ 1 mod p lies in the subgroup generated by p + 1");
    let field = make_field(s, 1)?;
    let zeta_p = root_of_unity(&field, p)?;
    GroupParams::new(p, field, i, zeta_p)
}
