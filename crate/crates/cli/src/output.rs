//! JSON shapes emitted by the commands. Each one deserializes back into
//! itself, so `emit -> parse -> emit` is byte-identical.

use std::fmt::Write as _;

use nilkex::attacks::KeyRecoveryReport;
use nilkex::matgroup::MatrixWire;
use nilkex::oracle::{IdentityReport, SemigroupShape};
use nilkex::protocol::TranscriptWire;
use nilkex::repr::{GroupParamsWire, RelationReport, TensorReport};
use nilkex::{Polynomial, Representation, SquareMatrix};
use serde::{Deserialize, Serialize};

pub type PolyWire = Vec<Vec<u64>>;

fn poly(p: &Polynomial) -> PolyWire {
    p.coeffs().iter().map(|c| c.coeffs()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationWire {
    pub params: GroupParamsWire,
    pub sigma_a: MatrixWire,
    pub sigma_c: MatrixWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReportWire {
    pub a_order_p2: bool,
    pub c_order_p: bool,
    pub conjugation: bool,
    pub commutator_central_order_p: bool,
    pub centrality: bool,
    pub a_order: Option<u64>,
    pub c_order: Option<u64>,
    pub commutator_order: Option<u64>,
    pub commutator: MatrixWire,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorProductWire {
    pub label: String,
    pub char_poly: PolyWire,
    pub predicted: Option<PolyWire>,
    pub matches_prediction: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorReportWire {
    pub sigma_a_char_poly: PolyWire,
    pub sigma_ac_char_poly: PolyWire,
    pub sigma_c_char_poly: PolyWire,
    pub binomial_irreducible: bool,
    pub products: Vec<TensorProductWire>,
    pub stated: PolyWire,
    pub stated_matches_a_tensor_a: bool,
    pub stated_matches_a_tensor_c: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReprOutput {
    pub representation: RepresentationWire,
    pub relation_report: RelationReportWire,
    pub tensor_report: TensorReportWire,
}

impl ReprOutput {
    pub fn new(rep: &Representation, rel: &RelationReport, tensor: &TensorReport) -> Self {
        Self {
            representation: RepresentationWire {
                params: rep.params.to_wire(),
                sigma_a: rep.sigma_a.to_wire(),
                sigma_c: rep.sigma_c.to_wire(),
            },
            relation_report: RelationReportWire {
                a_order_p2: rel.a_order_p2,
                c_order_p: rel.c_order_p,
                conjugation: rel.conjugation,
                commutator_central_order_p: rel.commutator_central_order_p,
                centrality: rel.centrality,
                a_order: rel.a_order,
                c_order: rel.c_order,
                commutator_order: rel.commutator_order,
                commutator: rel.commutator.to_wire(),
            },
            tensor_report: TensorReportWire {
                sigma_a_char_poly: poly(&tensor.sigma_a_char_poly),
                sigma_ac_char_poly: poly(&tensor.sigma_ac_char_poly),
                sigma_c_char_poly: poly(&tensor.sigma_c_char_poly),
                binomial_irreducible: tensor.binomial_irreducible,
                products: tensor
                    .products
                    .iter()
                    .map(|t| TensorProductWire {
                        label: t.label.clone(),
                        char_poly: poly(&t.char_poly),
                        predicted: t.predicted.as_ref().map(poly),
                        matches_prediction: t.matches_prediction,
                    })
                    .collect(),
                stated: poly(&tensor.stated),
                stated_matches_a_tensor_a: tensor.stated_matches_a_tensor_a,
                stated_matches_a_tensor_c: tensor.stated_matches_a_tensor_c,
            },
        }
    }

    pub fn all_pass(&self) -> bool {
        let r = &self.relation_report;
        r.a_order_p2 && r.c_order_p && r.conjugation && r.commutator_central_order_p && r.centrality
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KeyRecoveryWire {
    pub recovered_key: Option<MatrixWire>,
    pub matches: bool,
    pub group_ops: u64,
    pub method: String,
}

impl From<&KeyRecoveryReport> for KeyRecoveryWire {
    fn from(r: &KeyRecoveryReport) -> Self {
        Self {
            recovered_key: r.recovered_key.as_ref().map(SquareMatrix::to_wire),
            matches: r.matches,
            group_ops: r.group_ops,
            method: r.method.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    pub p: u64,
    pub n: u32,
    pub center_quotient_exponent: u32,
    pub semigroup_shape: SemigroupShape,
    pub identity_report: IdentityReport,
}

// ---- --pretty rendering ----------------------------------------------------------

fn elem(c: &[u64]) -> String {
    match c {
        [x] => x.to_string(),
        _ => format!("[{}]", c.iter().map(u64::to_string).collect::<Vec<_>>().join(",")),
    }
}

fn matrix(m: &MatrixWire) -> String {
    let cells: Vec<Vec<String>> = m.rows.iter().map(|r| r.iter().map(|c| elem(c)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "  [ {} ]", line.join(" "));
    }
    out
}

fn polynomial(p: &PolyWire) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| c.iter().any(|&x| x != 0))
        .map(|(k, c)| {
            let coeff = elem(c);
            match (k, coeff.as_str()) {
                (0, _) => coeff,
                (1, "1") => "x".into(),
                (1, _) => format!("{coeff}·x"),
                (_, "1") => format!("x^{k}"),
                _ => format!("{coeff}·x^{k}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn check(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

pub fn pretty_params(w: &GroupParamsWire) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p        {}", w.p);
    let _ = writeln!(out, "q        {} = {}^{}", w.q, w.s, w.r);
    let _ = writeln!(out, "modulus  {}", elem(&w.modulus));
    let _ = writeln!(out, "i        {}   ((p+1)^i ≡ q mod p²)", w.i);
    let _ = writeln!(out, "zeta^p   {}", elem(&w.zeta_p));
    let _ = writeln!(out, "orders   a: {}  b: {}  k: {}", w.m_root, w.n_rep, w.k);
    out
}

pub fn pretty_repr(o: &ReprOutput) -> String {
    let mut out = pretty_params(&o.representation.params);
    let _ = writeln!(out, "\nsigma(a)\n{}", matrix(&o.representation.sigma_a));
    let _ = writeln!(out, "sigma(c)\n{}", matrix(&o.representation.sigma_c));
    let r = &o.relation_report;
    let _ = writeln!(out, "relation                          result");
    let _ = writeln!(out, "a^(p²) = I, order p²              {}", check(r.a_order_p2));
    let _ = writeln!(out, "c^p = I, order p                  {}", check(r.c_order_p));
    let _ = writeln!(out, "c⁻¹ a c = a^q                     {}", check(r.conjugation));
    let _ = writeln!(out, "[a,c] scalar of order p           {}", check(r.commutator_central_order_p));
    let _ = writeln!(out, "[a,c] central                     {}", check(r.centrality));
    let t = &o.tensor_report;
    let _ = writeln!(out, "\nchar sigma(a)     {}", polynomial(&t.sigma_a_char_poly));
    let _ = writeln!(out, "char sigma(ac)    {}", polynomial(&t.sigma_ac_char_poly));
    let _ = writeln!(out, "char sigma(c)     {}", polynomial(&t.sigma_c_char_poly));
    let _ = writeln!(out, "x^p - zeta^p irreducible: {}", t.binomial_irreducible);
    for pr in &t.products {
        let _ = writeln!(out, "char {:<8} {}  (prediction {})", pr.label, polynomial(&pr.char_poly), check(pr.matches_prediction));
    }
    let _ = writeln!(out, "stated (x^p - zeta^p)^p matches a⊗a: {}, a⊗c: {}", t.stated_matches_a_tensor_a, t.stated_matches_a_tensor_c);
    out
}

pub fn pretty_transcript(t: &TranscriptWire) -> String {
    let mut out = pretty_params(&t.params);
    let _ = writeln!(out, "\nx\n{}", matrix(&t.base.x));
    let _ = writeln!(out, "y\n{}", matrix(&t.base.y));
    for b in &t.broadcasts {
        let _ = writeln!(out, "party {:?}: x^e\n{}", b.owner, matrix(&b.x_pow));
    }
    let _ = writeln!(out, "agreed: {}\nshared key\n{}", t.agreed, matrix(&t.shared_key));
    out
}

pub fn pretty_attack(r: &KeyRecoveryWire) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "method      {}", r.method);
    let _ = writeln!(out, "group ops   {}", r.group_ops);
    let _ = writeln!(out, "matches     {}", r.matches);
    match &r.recovered_key {
        Some(k) => {
            let _ = write!(out, "recovered key\n{}", matrix(k));
        }
        None => {
            let _ = writeln!(out, "no key recovered");
        }
    }
    out
}

pub fn pretty_analyze(a: &AnalyzeOutput) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group        Mod_{}({}), order {}^{}", a.n, a.p, a.p, a.n);
    let _ = writeln!(out, "exp G/Z(G)   {}^{}", a.p, a.center_quotient_exponent);
    match a.semigroup_shape.modulus_exponent {
        Some(k) => {
            let _ = writeln!(out, "E(G)         {0}^{1}Z ∪ ({0}^{1}Z + 1)", a.p, k);
        }
        None => {
            let _ = writeln!(out, "E(G)         {:?} (no fit)", a.semigroup_shape.raw_set);
        }
    }
    let r = &a.identity_report;
    let _ = writeln!(out, "identities   {} ({} pairs, n < {})", check(r.passed), r.pairs_checked, r.exponent_range);
    if let Some(c) = &r.counterexample {
        let _ = writeln!(out, "counterexample x = {}, y = {}, n = {}, {:?}", c.x, c.y, c.n, c.identity);
    }
    out
}
