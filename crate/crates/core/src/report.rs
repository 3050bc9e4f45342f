//! Versioned JSON reports: per-class pipeline reports and the verification
//! entries they carry.

use serde::Serialize;
use serde_json::{json, Value};

use crate::exceptional::{
    attach_irreps, attach_irreps_of_a, check_record, records_of, ExceptionalRecord, ExceptionalType,
};
use crate::f2::dual_identification;
use crate::fourier::{fourier_matrix_checks, m_set, GroupError, GroupTable};
use crate::families::{canonical_identification, verify_unipotent_slice, verify_pairing_coincidence, FamilySet};
use crate::springer::{sequence_of_class, ClassError, ClassResult, ClassSequence, GroupKind, JordanType, PiMap};
use crate::symbols::{t1_bijection, Flavor, IntervalStructure, Sequence, SequenceError, Side};
use crate::verify::check_matching;

pub const SCHEMA_VERSION: &str = "1.0";

/// Largest |X_F| for which the full pairing table is emitted.
pub const PAIRING_TABLE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// A known ambiguity in the statements, reported without a verdict.
    Reported,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verification {
    pub claim: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Verification {
    pub fn pass(claim: &str) -> Self {
        Self {
            claim: claim.to_string(),
            status: Status::Pass,
            detail: None,
            witness: None,
        }
    }

    pub fn fail(claim: &str, witness: Value) -> Self {
        Self {
            claim: claim.to_string(),
            status: Status::Fail,
            detail: None,
            witness: Some(witness),
        }
    }

    pub fn reported(claim: &str, detail: String) -> Self {
        Self {
            claim: claim.to_string(),
            status: Status::Reported,
            detail: Some(detail),
            witness: None,
        }
    }

    /// Pass when `ok`, otherwise fail with `witness`.
    pub fn check(claim: &str, ok: bool, witness: impl FnOnce() -> Value) -> Self {
        if ok {
            Self::pass(claim)
        } else {
            Self::fail(claim, witness())
        }
    }

    pub fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: String,
    pub command: Vec<String>,
    pub inputs: Value,
    pub results: Value,
    pub verifications: Vec<Verification>,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            command,
            inputs,
            results: Value::Null,
            verifications: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.verifications.iter().any(|v| v.status == Status::Fail)
    }

    pub fn first_failure(&self) -> Option<&Verification> {
        self.verifications.iter().find(|v| v.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// Human-readable rendering: results as compact JSON, one line per
    /// verification.
    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command.join(" "));
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                out += &format!("{k}: {}\n", serde_json::to_string(v).expect("values serialize"));
            }
        }
        for v in &self.verifications {
            let status = match v.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Reported => "REPORTED",
            };
            out += &format!("[{status}] {}", v.claim);
            if let Some(d) = &v.detail {
                out += &format!(": {d}");
            }
            if let Some(w) = &v.witness {
                out += &format!(" witness: {w}");
            }
            out.push('\n');
        }
        out
    }
}

/// Labels of an F₂ class, as a sorted array.
fn labels(fs: &FamilySet, bits: u64) -> Value {
    json!(fs.labels(bits))
}

fn abar_name(rank: usize) -> String {
    match rank {
        0 => "1".into(),
        1 => "Z/2".into(),
        k => format!("(Z/2)^{k}"),
    }
}

/// Results and verifications for one valid sequence.
pub fn sequence_section(a: &Sequence) -> (Value, Vec<Verification>) {
    let mut vs = Vec::new();
    let st = IntervalStructure::new(a);
    let pi = PiMap::new(&st);
    let fs = FamilySet::new(a);
    let t = st.enumerate_t();
    let e = a.half_rank();

    let m = check_matching(a);
    vs.push(
        Verification::check("matching-set", m.holds(), || json!(m))
            .with_detail(format!("{} sequences, {} up to row interchange", m.matching_size, m.up_to_interchange)),
    );

    let bij = t1_bijection(a);
    vs.push(Verification::check("swap-bijection", bij.holds(), || json!(bij)));

    if st.unassigned.is_empty() {
        vs.push(Verification::check("interval-partition", st.partition_holds(), || json!(st.blocks)));
    } else {
        let names: Vec<String> = st.unassigned.iter().map(|&k| interval_name(&st, k)).collect();
        vs.push(Verification::reported(
            "interval-partition",
            format!("intervals outside every block: {}", names.join(", ")),
        ));
    }

    let lag = fs.lagrangian_report();
    let dual = dual_identification(fs.frak.lagrangian(Side::Zero), fs.frak.lagrangian(Side::One));
    let (t0, t1_img) = (fs.frak.image(Side::Zero).len(), fs.frak.image(Side::One).len());
    let lag_ok = lag.holds() && dual.is_ok() && t0 == 1 << e && t1_img == 1 << e;
    vs.push(Verification::check("lagrangian-pair", lag_ok, || {
        json!({ "lagrangian": lag, "dual_invertible": dual.is_ok(), "side0_images": t0, "side1_images": t1_img })
    }));

    let quotient_ok = pi.is_surjective() && pi.abar_order() == 1 << e;
    vs.push(Verification::check("component-group-quotient", quotient_ok, || {
        json!({ "surjective": pi.is_surjective(), "abar_order": pi.abar_order(), "expected": 1u64 << e })
    }));

    let thm = verify_pairing_coincidence(a);
    match &thm {
        Ok(r) => vs.push(
            Verification::check("pairing-coincidence", r.holds(), || json!(r))
                .with_detail(format!("{} pairs", r.pairs_checked)),
        ),
        Err(err) => vs.push(Verification::fail("pairing-coincidence", json!(err.to_string()))),
    }
    match verify_unipotent_slice(a) {
        Ok(r) => vs.push(Verification::check("unipotent-slice", r.holds(), || json!(r))),
        Err(err) => vs.push(Verification::fail("unipotent-slice", json!(err.to_string()))),
    }
    if let Some(note) = &fs.ambient_note {
        vs.push(Verification::reported("family-ambient", note.clone()));
    }

    let matching: Vec<Value> = m.matching.iter().map(|b| json!(b)).collect();
    let members: Vec<Value> = fs
        .members
        .iter()
        .map(|(b, p)| json!({ "address": labels(&fs, *b), "symbol": p }))
        .collect();
    let id = canonical_identification(&fs).ok();
    let identification: Vec<Value> = id
        .iter()
        .flat_map(|id| id.table.iter())
        .map(|(x, mp)| json!({ "x": labels(&fs, *x), "group": mp.group, "character": mp.character }))
        .collect();
    let pairings: Option<Vec<Value>> = id.as_ref().filter(|id| id.table.len() <= PAIRING_TABLE_LIMIT).map(|id| {
        let xs: Vec<u64> = id.table.keys().copied().collect();
        xs.iter()
            .flat_map(|&x| xs.iter().map(move |&y| (x, y)))
            .map(|(x, y)| {
                let sign = if fs.form(x, y) == 0 { 1 } else { -1 };
                json!({
                    "x": labels(&fs, x),
                    "y": labels(&fs, y),
                    "m_side": id.mset.pairing(id.table[&x], id.table[&y]).to_string(),
                    "form_side": num_rational::Ratio::new(sign, id.mset.order()).to_string(),
                })
            })
            .collect()
    });
    let kernel: Vec<Value> = pi.kernel.iter().map(|&k| json!(pi.intervals.labels_of(k))).collect();
    let results = json!({
        "sequence": {
            "flavor": a.flavor(),
            "a": a.entries(),
            "shifted": a.shifted(),
            "singleton_values": a.singleton_values(),
            "rank_parameter": a.rank_parameter(),
            "half_rank": e,
        },
        "matching_set": matching,
        "intervals": st.intervals,
        "blocks": st.blocks,
        "unassigned_intervals": st.unassigned.iter().map(|&k| st.intervals[k]).collect::<Vec<_>>(),
        "t_prime": t.prime,
        "t1": t.t1,
        "component_group": {
            "a_order": 1u64 << pi.domain_dim(),
            "kernel_basis": kernel,
            "abar_order": pi.abar_order(),
            "abar": abar_name(pi.image_rank),
        },
        "family": {
            "ground": fs.ground().labels(),
            "group_side": side_name(fs.group_side),
            "character_side": side_name(fs.character_side),
            "xf_size": fs.elements().len(),
            "members": members,
        },
        "identification": identification,
        "pairings": pairings,
    });
    (results, vs)
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::Zero => "0",
        Side::One => "1",
    }
}

fn interval_name(st: &IntervalStructure, k: usize) -> String {
    let iv = st.intervals[k];
    if iv.lo == iv.hi {
        format!("{{{}}}", iv.lo)
    } else {
        format!("[{}, {}]", iv.lo, iv.hi)
    }
}

/// Results and verifications for a class given by its Jordan type.
pub fn class_section(c: &ClassResult) -> (Value, Vec<Verification>) {
    let jt: &JordanType = &c.jordan;
    let mut class = json!({
        "jordan_type": jt.to_string(),
        "partition": jt.parts(),
        "delta": jt.delta(),
        "n": c.n,
    });
    let mut vs = Vec::new();
    let (outcome, seq_results) = match &c.outcome {
        ClassSequence::Special(a) => {
            let (r, v) = sequence_section(a);
            vs.extend(v);
            ("special", Some(r))
        }
        ClassSequence::NotSpecial { entries, reason } => {
            class["candidate"] = json!(entries);
            class["reason"] = json!(reason.to_string());
            ("not-special", None)
        }
        ClassSequence::Degenerate { entries } => {
            class["candidate"] = json!(entries);
            vs.push(Verification::reported(
                "degenerate-symbol",
                "every symbol value occurs twice; the family is a single member with trivial Ā".into(),
            ));
            ("degenerate", None)
        }
        ClassSequence::TypeA => {
            vs.push(Verification::pass("type-a-trivial").with_detail("A(u) = Ā(u) = 1, X_F has one element".into()));
            ("type-a", None)
        }
    };
    class["outcome"] = json!(outcome);
    if let Some(p) = &c.pins {
        vs.insert(
            0,
            Verification::check("class-sequence", p.hold(), || json!(p)).with_detail("recipe pins".into()),
        );
    }
    if !c.warnings.is_empty() {
        class["warnings"] = json!(c.warnings);
    }
    let mut results = json!({ "class": class });
    if let Some(Value::Object(map)) = seq_results {
        for (k, v) in map {
            results[k] = v;
        }
    }
    (results, vs)
}

/// Flavor parsed from a CLI token.
pub fn parse_flavor(s: &str) -> Option<Flavor> {
    match s {
        "C" | "c" => Some(Flavor::C),
        "BD" | "bd" | "B" | "D" => Some(Flavor::BD),
        _ => None,
    }
}

/// Fourier matrix of a catalog group with its property checks.
pub fn fourier_section(name: &str) -> Result<(Value, Vec<Verification>), GroupError> {
    let (c, s) = fourier_matrix_checks(name)?;
    let t = GroupTable::new(name)?;
    let labels: Vec<Value> = m_set(&t)
        .iter()
        .map(|p| {
            let cl = &t.classes[p.class_index];
            json!({
                "class": t.group.element(cl.rep).to_string(),
                "irrep": cl.centralizer_iso.target.irrep_name(p.irrep_index),
            })
        })
        .collect();
    let results = json!({
        "group": c.group,
        "order": c.order,
        "classes": t.summary(),
        "m_size": c.m_size,
        "m_set": labels,
        "convention": c.convention,
        "matrix": s,
        "real_symmetric": c.real_symmetric,
        "s_squared_identity": c.s_squared_identity,
    });
    let w = || json!(c);
    let mut vs = vec![
        Verification::check("fourier-unitary", c.unitary, w),
        Verification::check("fourier-hermitian", c.hermitian, w),
        Verification::check("fourier-square-permutation", c.s_squared_permutation, w),
        Verification::check("fourier-representative-independent", c.representative_independent, w),
        Verification::check("character-orthogonality", c.orthogonality, w),
    ];
    if c.real_required {
        vs.push(Verification::check("fourier-real-involution", c.real_symmetric && c.s_squared_identity, w));
    }
    if let Some(ok) = c.abelian_agreement {
        vs.push(Verification::check("fourier-abelian-agreement", ok, w));
    }
    Ok((results, vs))
}

fn record_json(r: &ExceptionalRecord) -> Value {
    let members: Vec<String> = r.members.iter().map(|m| m.to_string()).collect();
    json!({
        "class": r.class_name,
        "members": members,
        "a": r.a_group,
        "abar": r.abar_group,
        "line": r.to_line(),
        "attachments": attach_irreps(r).ok(),
        "attachments_of_a": attach_irreps_of_a(r).ok(),
    })
}

/// Records of one exceptional type, optionally a single class, with
/// consistency verdicts.
pub fn exceptional_section(ty: ExceptionalType, records: &[ExceptionalRecord]) -> (Value, Vec<Verification>) {
    let checks: Vec<_> = records.iter().map(check_record).collect();
    let vs = checks
        .iter()
        .map(|c| Verification::check(&format!("table-consistency {}", c.class_name), c.holds(), || json!(c)))
        .collect();
    let results = json!({
        "type": ty,
        "records_in_table": records_of(ty).len(),
        "records_scanned": records.len(),
        "records": records.iter().map(record_json).collect::<Vec<_>>(),
        "checks": checks,
    });
    (results, vs)
}

/// Class report for a Jordan type, as emitted by the `class` command.
pub fn class_report(
    kind: GroupKind,
    parts: Vec<u32>,
    n_override: Option<usize>,
    command: Vec<String>,
) -> Result<Report, ClassError> {
    let inputs = json!({ "group": kind, "partition": parts, "n_override": n_override });
    let jt = JordanType::new(parts, kind)?;
    let c = sequence_of_class(&jt, n_override)?;
    let mut report = Report::new(command, inputs);
    (report.results, report.verifications) = class_section(&c);
    Ok(report)
}

/// Report for a raw sequence, as emitted by the `class --sequence` command.
pub fn sequence_report(entries: Vec<u32>, flavor: Flavor, command: Vec<String>) -> Result<Report, SequenceError> {
    let mut report = Report::new(command, json!({ "sequence": entries, "flavor": flavor }));
    let a = Sequence::new(entries, flavor)?;
    (report.results, report.verifications) = sequence_section(&a);
    Ok(report)
}
