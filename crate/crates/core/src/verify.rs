//! Batch verification over class corpora and seeded random sequences.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::corpus::{orthogonal_classes, random_sequences, special_sequences, symplectic_classes};
use crate::f2::dual_identification;
use crate::families::{verify_unipotent_slice, verify_pairing_coincidence, FamilySet};
use crate::report::{Report, Status, Verification};
use crate::springer::PiMap;
use crate::symbols::sequence::{count_up_to_row_interchange, matching_set, swap_family, DEFAULT_CANDIDATE_LIMIT};
use crate::symbols::{t1_bijection, Flavor, IntervalStructure, Sequence, Side};

/// Oracle comparison for one sequence: the brute-force matching set against
/// the swap family {a^X}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCheck {
    pub a: Vec<u32>,
    pub flavor: Flavor,
    pub matching: Vec<Vec<u32>>,
    pub matching_size: usize,
    pub swap_family_size: usize,
    /// Number of admissible swap indices.
    pub admissible: usize,
    /// Exponent of the stated cardinality: M resp. ⌊μ/2⌋.
    pub half_rank: usize,
    pub up_to_interchange: usize,
    pub set_equal: bool,
    pub enumeration_error: Option<String>,
}

impl MatchingCheck {
    pub fn holds(&self) -> bool {
        self.set_equal
            && self.enumeration_error.is_none()
            && self.matching_size == 1 << self.admissible
            && self.up_to_interchange == 1 << self.half_rank
    }
}

pub fn check_matching(a: &Sequence) -> MatchingCheck {
    let family = swap_family(a);
    let (matching, err) = match matching_set(a, DEFAULT_CANDIDATE_LIMIT) {
        Ok(m) => (m, None),
        Err(e) => (BTreeSet::new(), Some(e.to_string())),
    };
    MatchingCheck {
        a: a.entries().to_vec(),
        flavor: a.flavor(),
        matching_size: matching.len(),
        swap_family_size: family.len(),
        admissible: a.admissible().len(),
        half_rank: a.half_rank(),
        up_to_interchange: count_up_to_row_interchange(&matching),
        set_equal: err.is_none() && matching == family,
        matching: matching.into_iter().collect(),
        enumeration_error: err,
    }
}

/// Lagrangian pair, invertible duality and |𝔗₀| = |𝔗₁| = 2^e.
pub fn check_lagrangian(a: &Sequence) -> Result<(), Value> {
    let fs = FamilySet::new(a);
    let lag = fs.lagrangian_report();
    let dual = dual_identification(fs.frak.lagrangian(Side::Zero), fs.frak.lagrangian(Side::One));
    let e = a.half_rank();
    let sizes = (fs.frak.image(Side::Zero).len(), fs.frak.image(Side::One).len());
    if lag.holds() && dual.is_ok() && sizes == (1 << e, 1 << e) {
        Ok(())
    } else {
        Err(json!({ "a": a.entries(), "lagrangian": lag, "dual_invertible": dual.is_ok(), "images": sizes }))
    }
}

/// Batch scope; serialized under its command-line name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Scope {
    #[serde(rename = "lemma12")]
    MatchingC,
    #[serde(rename = "lemma22")]
    MatchingBD,
    #[serde(rename = "bijections")]
    Bijections,
    #[serde(rename = "lagrangian")]
    Lagrangian,
    #[serde(rename = "theorem04")]
    Pairing,
    #[serde(rename = "corollary05")]
    Slice,
    #[serde(rename = "all")]
    All,
}

impl Scope {
    pub const NAMES: [&'static str; 7] =
        ["lemma12", "lemma22", "bijections", "lagrangian", "theorem04", "corollary05", "all"];

    fn covers(self, other: Scope) -> bool {
        self == Scope::All || self == other
    }
}

impl FromStr for Scope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "lemma12" => Scope::MatchingC,
            "lemma22" => Scope::MatchingBD,
            "bijections" => Scope::Bijections,
            "lagrangian" => Scope::Lagrangian,
            "theorem04" => Scope::Pairing,
            "corollary05" => Scope::Slice,
            "all" => Scope::All,
            _ => return Err(format!("unknown scope {s:?}; expected one of {}", Scope::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("scope serializes");
        write!(f, "{}", s.as_str().unwrap_or_default())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Sp₂ₙ for n ≤ max_rank and SOₙ for n ≤ 2·max_rank + 1.
    pub max_rank: u32,
    pub samples: usize,
    pub seed: u64,
}

/// Tally for one claim over a corpus.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub reported: usize,
    pub first_witness: Option<Value>,
}

impl Tally {
    pub fn record(&mut self, outcome: Result<(), Value>) {
        self.checked += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(w) => {
                self.failed += 1;
                self.first_witness.get_or_insert(w);
            }
        }
    }

    pub fn into_verification(self, claim: &str) -> Verification {
        let detail = format!("{} checked, {} passed, {} failed", self.checked, self.passed, self.failed);
        let mut v = match self.first_witness.clone() {
            Some(w) => Verification::fail(claim, w),
            None => Verification::pass(claim),
        };
        if self.reported > 0 && v.status == Status::Pass {
            v.status = Status::Reported;
        }
        v.with_detail(if self.reported > 0 {
            format!("{detail}, {} reported", self.reported)
        } else {
            detail
        })
    }
}

/// Special class sequences and seeded random sequences of one flavor.
pub fn corpus(flavor: Flavor, b: &Bounds) -> Vec<Sequence> {
    let (mut seqs, max_n, max_entry) = match flavor {
        Flavor::C => (special_sequences(&symplectic_classes(b.max_rank)), 8, 8),
        Flavor::BD => (special_sequences(&orthogonal_classes(2 * b.max_rank + 1)), 9, 9),
    };
    let salt = match flavor {
        Flavor::C => 0,
        Flavor::BD => 1,
    };
    seqs.extend(random_sequences(flavor, b.samples, max_n, max_entry, b.seed.wrapping_add(salt)));
    seqs
}

pub fn matching_outcome(a: &Sequence) -> Result<(), Value> {
    let m = check_matching(a);
    if m.holds() {
        Ok(())
    } else {
        Err(json!(m))
    }
}

pub fn bijection_outcome(a: &Sequence) -> Result<(), Value> {
    let r = t1_bijection(a);
    let pi = PiMap::new(&IntervalStructure::new(a));
    if r.holds() && pi.is_surjective() && pi.abar_order() == 1 << a.half_rank() {
        Ok(())
    } else {
        Err(json!({ "a": a.entries(), "bijection": r, "abar_order": pi.abar_order() }))
    }
}

pub fn pairing_outcome(a: &Sequence) -> Result<(), Value> {
    match verify_pairing_coincidence(a) {
        Ok(r) if r.holds() => Ok(()),
        Ok(r) => Err(json!({ "a": a.entries(), "report": r })),
        Err(e) => Err(json!({ "a": a.entries(), "error": e.to_string() })),
    }
}

pub fn slice_outcome(a: &Sequence) -> Result<(), Value> {
    match verify_unipotent_slice(a) {
        Ok(r) if r.holds() => Ok(()),
        Ok(r) => Err(json!({ "a": a.entries(), "report": r })),
        Err(e) => Err(json!({ "a": a.entries(), "error": e.to_string() })),
    }
}

/// Run the requested scope and collect one verification per claim.
pub fn run(scope: Scope, b: &Bounds, command: Vec<String>) -> Report {
    let mut report = Report::new(command, json!({ "scope": scope, "bounds": b }));
    let c = corpus(Flavor::C, b);
    let bd = corpus(Flavor::BD, b);
    let both: Vec<&Sequence> = c.iter().chain(bd.iter()).collect();
    let mut results = serde_json::Map::new();
    results.insert("c_sequences".into(), json!(c.len()));
    results.insert("bd_sequences".into(), json!(bd.len()));

    let tally = |seqs: &[&Sequence], f: fn(&Sequence) -> Result<(), Value>| {
        let mut t = Tally::default();
        for a in seqs {
            t.record(f(a));
        }
        t
    };
    let c_refs: Vec<&Sequence> = c.iter().collect();
    let bd_refs: Vec<&Sequence> = bd.iter().collect();

    if scope.covers(Scope::MatchingC) {
        report.verifications.push(tally(&c_refs, matching_outcome).into_verification("matching-set (flavor C)"));
    }
    if scope.covers(Scope::MatchingBD) {
        report.verifications.push(tally(&bd_refs, matching_outcome).into_verification("matching-set (flavor BD)"));
    }
    if scope.covers(Scope::Bijections) {
        report.verifications.push(tally(&both, bijection_outcome).into_verification("swap-bijection"));
        let mut t = Tally::default();
        for a in &both {
            let st = IntervalStructure::new(a);
            if !st.unassigned.is_empty() {
                t.reported += 1;
            } else if st.partition_holds() {
                t.record(Ok(()));
            } else {
                t.record(Err(json!({ "a": a.entries(), "blocks": st.blocks })));
            }
        }
        results.insert("unassigned_interval_sequences".into(), json!(t.reported));
        report.verifications.push(t.into_verification("interval-partition"));
    }
    if scope.covers(Scope::Lagrangian) {
        report.verifications.push(tally(&both, check_lagrangian).into_verification("lagrangian-pair"));
    }
    if scope.covers(Scope::Pairing) {
        report.verifications.push(tally(&both, pairing_outcome).into_verification("pairing-coincidence"));
    }
    if scope.covers(Scope::Slice) {
        report.verifications.push(tally(&both, slice_outcome).into_verification("unipotent-slice"));
    }
    report.results = Value::Object(results);
    report
}
