mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilkex::attacks::{cdh_note, semigroup_attack, DlpMethod};
use nilkex::oracle::{
    center_quotient_exponent, check_class2_identities, exponent_semigroup_brute, CheckMode, SEMIGROUP_GUARD,
};
use nilkex::protocol::{candidate_stream, default_base, keygen, random_word_base, run_tripartite};
use nilkex::repr::{tensor_analysis, verify_relations};
use nilkex::{
    build_sigma, param_search, Error, FieldElement, GroupParams, MatrixGroup, MatrixTranscript, ModularGroup, Party,
    Policy, PrivateKey, SemigroupShape,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use output::{AnalyzeOutput, KeyRecoveryWire, ReprOutput};

#[derive(Parser, Debug)]
#[command(name = "nilkex", version, about = "Tripartite key exchange in Mod3(p) and its desk-scale attacks")]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Log verbosity (-v info, -vv debug, -vvv trace).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find the field and roots of unity for a prime p.
    Params {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1_000_000)]
        search_bound: u64,
    },
    /// Build sigma and check the defining relations.
    Repr {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1_000_000)]
        search_bound: u64,
        /// Replace zeta^p with this constant (skips validation).
        #[arg(long)]
        force_zeta: Option<u64>,
    },
    /// Run the three-party exchange.
    Exchange {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1_000_000)]
        search_bound: u64,
        /// Private exponents of A, B, C.
        #[arg(long, value_delimiter = ',', conflicts_with = "seed", required_unless_present = "seed")]
        alphas: Option<Vec<u64>>,
        /// Seed for key generation (and the base, with --random-base).
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = PolicyArg::CoprimeOnly)]
        policy: PolicyArg,
        /// Use random words in sigma(a), sigma(c) as the base instead of (sigma(a), sigma(c)).
        #[arg(long, requires = "seed")]
        random_base: bool,
    },
    /// Recover the shared key from a transcript file.
    Attack {
        transcript: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Bsgs)]
        method: MethodArg,
    },
    /// Exponent semigroup and class-2 identities of Mod_n(p).
    Analyze {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        /// Check identities for exponents below this bound (default: exp G).
        #[arg(long)]
        range: Option<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum PolicyArg {
    CoprimeOnly,
    Strict,
}

impl From<PolicyArg> for Policy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::CoprimeOnly => Policy::CoprimeOnly,
            PolicyArg::Strict => Policy::Strict,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Bsgs,
    Exhaustive,
    Semigroup,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchExhausted(_) | Error::SizeGuard(_) => 3,
            Error::ProtocolFailure { .. } | Error::Singular | Error::NotInGroup(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

impl Failure {
    fn check(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

/// What a command produced, plus whether its internal checks passed.
struct Emitted {
    text: String,
    ok: bool,
}

fn emit<T: Serialize + DeserializeOwned + PartialEq>(value: &T, pretty: bool, render: impl Fn(&T) -> String) -> Emitted {
    let text = if pretty {
        render(value)
    } else {
        let json = serde_json::to_string(value).expect("output serializes");
        debug_assert!(serde_json::from_str::<T>(&json)
            .is_ok_and(|back| back == *value && serde_json::to_string(&back).ok().as_ref() == Some(&json)));
        json + "\n"
    };
    Emitted { text, ok: true }
}

fn semigroup_shape_for(p: u64) -> Result<SemigroupShape, Failure> {
    let group = ModularGroup::standard(p, 3)?;
    match exponent_semigroup_brute(&group) {
        Ok(shape) => Ok(shape),
        Err(Error::SizeGuard(_)) => {
            log::info!("Mod_3({p}) exceeds the semigroup guard {SEMIGROUP_GUARD}; using the fitted shape p Z ∪ (p Z + 1)");
            Ok(SemigroupShape::fitted(p, 1, p * p))
        }
        Err(e) => Err(e.into()),
    }
}

fn run(cli: &Cli) -> Result<Emitted, Failure> {
    match &cli.command {
        Command::Params { p, search_bound } => {
            let params = param_search(*p, *search_bound)?;
            Ok(emit(&params.to_wire(), cli.pretty, output::pretty_params))
        }
        Command::Repr { p, search_bound, force_zeta } => {
            let mut params = param_search(*p, *search_bound)?;
            if let Some(z) = force_zeta {
                let zeta = FieldElement::constant(&params.field, *z);
                params = GroupParams::new(params.p, params.field.clone(), params.i, zeta)?;
                if let Err(e) = params.validate() {
                    log::warn!("forced zeta^p fails validation: {e}");
                }
            }
            let rep = build_sigma(&params)?;
            let out = ReprOutput::new(&rep, &verify_relations(&rep)?, &tensor_analysis(&rep)?);
            let ok = out.all_pass();
            Ok(Emitted { ok, ..emit(&out, cli.pretty, output::pretty_repr) })
        }
        Command::Exchange { p, search_bound, alphas, seed, policy, random_base } => {
            let params = param_search(*p, *search_bound)?;
            let rep = build_sigma(&params)?;
            let shape = semigroup_shape_for(*p)?;
            let policy = Policy::from(*policy);
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            let keys: Vec<PrivateKey> = match alphas {
                Some(alphas) if alphas.len() != 3 => {
                    return Err(Failure { code: 2, message: format!("--alphas needs 3 values, got {}", alphas.len()) })
                }
                Some(alphas) => Party::ALL
                    .iter()
                    .zip(alphas)
                    .map(|(&party, &a)| {
                        keygen(party, *p, &shape, policy, [a]).map_err(|_| Failure {
                            code: 2,
                            message: format!("exponent {a} for party {party} rejected under {policy:?}"),
                        })
                    })
                    .collect::<Result<_, _>>()?,
                None => Party::ALL
                    .iter()
                    .map(|&party| keygen(party, *p, &shape, policy, candidate_stream(&mut rng, *p).take(10_000)))
                    .collect::<Result<_, _>>()?,
            };
            let base = if *random_base { random_word_base(&rep, &mut rng)? } else { default_base(&rep)? };
            let group = MatrixGroup::of(&base.x);
            let transcript = run_tripartite(params, &group, &base, [&keys[0], &keys[1], &keys[2]])?;
            Ok(emit(&transcript.to_wire(), cli.pretty, output::pretty_transcript))
        }
        Command::Attack { transcript, method } => {
            let text = fs::read_to_string(transcript)
                .map_err(|e| Failure { code: 2, message: format!("{}: {e}", transcript.display()) })?;
            let t = MatrixTranscript::from_json(&text)?;
            let report = match method {
                MethodArg::Bsgs => cdh_note(&t, DlpMethod::Bsgs)?,
                MethodArg::Exhaustive => cdh_note(&t, DlpMethod::Exhaustive)?,
                MethodArg::Semigroup => semigroup_attack(&t, &semigroup_shape_for(t.params.p)?)?,
            };
            Ok(emit(&KeyRecoveryWire::from(&report), cli.pretty, output::pretty_attack))
        }
        Command::Analyze { p, n, range } => {
            let group = ModularGroup::standard(*p, *n)?;
            let range = range.unwrap_or(group.params().a_order());
            let identity_report = check_class2_identities(&group, range, CheckMode::Exhaustive)?;
            let semigroup_shape = exponent_semigroup_brute(&group)?;
            let out = AnalyzeOutput {
                p: *p,
                n: *n,
                center_quotient_exponent: center_quotient_exponent(&group),
                semigroup_shape,
                identity_report,
            };
            let ok = out.identity_report.passed && out.semigroup_shape.modulus_exponent.is_some();
            Ok(Emitted { ok, ..emit(&out, cli.pretty, output::pretty_analyze) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    env_logger::Builder::new().parse_filters(level).init();

    let result = run(&cli).and_then(|emitted| {
        match &cli.out {
            Some(path) => fs::write(path, &emitted.text)
                .map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })?,
            None => print!("{}", emitted.text),
        }
        if emitted.ok {
            Ok(())
        } else {
            Err(Failure::check("internal check failed; see report"))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use nilkex::oracle::{check_class2_identities, CheckMode};
    use nilkex::protocol::TranscriptWire;
    use serde::de::DeserializeOwned;

    use super::*;

    fn round_trip<T: Serialize + DeserializeOwned + PartialEq + std::fmt::Debug>(value: &T) {
        let json = serde_json::to_string(value).unwrap();
        let back: T = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, value);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn outputs_round_trip() {
        let params = param_search(3, 1000).unwrap();
        round_trip(&params.to_wire());
        let rep = build_sigma(&params).unwrap();
        round_trip(&ReprOutput::new(&rep, &verify_relations(&rep).unwrap(), &tensor_analysis(&rep).unwrap()));

        let base = default_base(&rep).unwrap();
        let keys: Vec<_> = Party::ALL.iter().map(|&party| PrivateKey::unchecked(party, 2)).collect();
        let t = run_tripartite(params, &MatrixGroup::of(&base.x), &base, [&keys[0], &keys[1], &keys[2]]).unwrap();
        round_trip::<TranscriptWire>(&t.to_wire());
        round_trip(&KeyRecoveryWire::from(&cdh_note(&t, DlpMethod::Bsgs).unwrap()));

        let g = ModularGroup::standard(3, 3).unwrap();
        round_trip(&AnalyzeOutput {
            p: 3,
            n: 3,
            center_quotient_exponent: 1,
            semigroup_shape: exponent_semigroup_brute(&g).unwrap(),
            identity_report: check_class2_identities(&g, 9, CheckMode::Exhaustive).unwrap(),
        });
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::from(Error::Parameter(String::new())).code, 2);
        assert_eq!(Failure::from(Error::Parse(String::new())).code, 2);
        assert_eq!(Failure::from(Error::SizeGuard(String::new())).code, 3);
        assert_eq!(Failure::from(Error::SearchExhausted(String::new())).code, 3);
        assert_eq!(Failure::from(Error::ProtocolFailure { transcript: String::new() }).code, 1);
    }
}
