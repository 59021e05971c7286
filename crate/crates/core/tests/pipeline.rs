//! End-to-end runs through the public API only.

use nilkex::attacks::{cdh_note, semigroup_attack, DlpMethod};
use nilkex::oracle::exponent_semigroup_brute;
use nilkex::protocol::{candidate_stream, keygen, random_word_base, run_tripartite};
use nilkex::repr::verify_relations;
use nilkex::{build_sigma, param_search, Error, MatrixGroup, MatrixTranscript, ModularGroup, Party, Policy};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn seeded_exchange_and_attack_p7() {
    let params = param_search(7, 1_000_000).unwrap();
    let rep = build_sigma(&params).unwrap();
    assert!(verify_relations(&rep).unwrap().all_pass());
    let shape = exponent_semigroup_brute(&ModularGroup::standard(7, 3).unwrap()).unwrap();
    assert_eq!(shape.modulus_exponent, Some(1));

    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let base = random_word_base(&rep, &mut rng).unwrap();
    let keys: Vec<_> = Party::ALL
        .iter()
        .map(|&party| keygen(party, 7, &shape, Policy::Strict, candidate_stream(&mut rng, 7)).unwrap())
        .collect();
    assert!(keys.iter().all(|k| k.exponent() % 7 > 1));
    let t = run_tripartite(params, &MatrixGroup::of(&base.x), &base, [&keys[0], &keys[1], &keys[2]]).unwrap();
    assert!(t.agreed);

    let t = MatrixTranscript::from_json(&t.to_json()).unwrap();
    assert!(cdh_note(&t, DlpMethod::Bsgs).unwrap().matches);
    assert!(cdh_note(&t, DlpMethod::Exhaustive).unwrap().matches);
    // strict keys avoid E(G), so the semigroup attack misses
    assert!(!semigroup_attack(&t, &shape).unwrap().matches);
}

#[test]
fn seeded_runs_repeat_exactly() {
    let run = |seed| {
        let params = param_search(5, 1_000_000).unwrap();
        let rep = build_sigma(&params).unwrap();
        let shape = exponent_semigroup_brute(&ModularGroup::standard(5, 3).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_word_base(&rep, &mut rng).unwrap();
        let keys: Vec<_> = Party::ALL
            .iter()
            .map(|&party| keygen(party, 5, &shape, Policy::CoprimeOnly, candidate_stream(&mut rng, 5)).unwrap())
            .collect();
        run_tripartite(params, &MatrixGroup::of(&base.x), &base, [&keys[0], &keys[1], &keys[2]]).unwrap().to_json()
    };
    assert_eq!(run(3), run(3));
    assert_ne!(run(3), run(4));
}

#[test]
fn transcript_from_other_field_is_rejected() {
    let p3 = build_sigma(&param_search(3, 1000).unwrap()).unwrap();
    let p5 = param_search(5, 1000).unwrap();
    let base = nilkex::protocol::default_base(&p3).unwrap();
    let keys: Vec<_> = Party::ALL.iter().map(|&party| nilkex::PrivateKey::unchecked(party, 2)).collect();
    let mut t = run_tripartite(p3.params.clone(), &MatrixGroup::of(&base.x), &base, [&keys[0], &keys[1], &keys[2]])
        .unwrap()
        .to_wire();
    t.params = p5.to_wire();
    assert!(matches!(MatrixTranscript::from_wire(&t), Err(Error::Parse(_) | Error::Shape(_))));
}
