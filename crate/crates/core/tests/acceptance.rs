//! Acceptance criteria 1–11, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use serde_json::Value;

use famspring::exceptional::{consistency, lookup, ExceptionalType, SymTag};
use famspring::families::{canonical_identification, FamilySet};
use famspring::fourier::{fourier_matrix_checks, m_set, GroupTable, CATALOG};
use famspring::report::{class_report, Status};
use famspring::springer::GroupKind;
use famspring::symbols::{Flavor, Sequence};
use famspring::verify::{
    bijection_outcome, check_lagrangian, slice_outcome, corpus, matching_outcome, pairing_outcome, Bounds,
};

const FIXTURE: &str = include_str!("fixtures/sp4_2_2.json");

struct Outcome {
    ok: bool,
    detail: String,
}

fn over(seqs: &[Sequence], f: fn(&Sequence) -> Result<(), Value>) -> Outcome {
    let failures: Vec<Value> = seqs.iter().filter_map(|a| f(a).err()).collect();
    Outcome {
        ok: failures.is_empty(),
        detail: match failures.first() {
            None => format!("{} sequences", seqs.len()),
            Some(w) => format!("{} of {} fail, first {w}", failures.len(), seqs.len()),
        },
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut o = f();
    let took = start.elapsed();
    if let Some(l) = limit {
        o.ok &= took <= l;
    }
    o.detail = format!("{} in {:.2?}", o.detail, took);
    o
}

fn all(parts: Vec<(bool, String)>) -> Outcome {
    let bad: Vec<&String> = parts.iter().filter(|(ok, _)| !ok).map(|(_, d)| d).collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} checks", parts.len())
        } else {
            format!("failed: {bad:?}")
        },
    }
}

fn class_corpus(flavor: Flavor) -> Vec<Sequence> {
    corpus(
        flavor,
        &Bounds {
            max_rank: 6,
            samples: 0,
            seed: 0,
        },
    )
}

fn full_corpus(flavor: Flavor) -> Vec<Sequence> {
    corpus(
        flavor,
        &Bounds {
            max_rank: 6,
            samples: 500,
            seed: 2024,
        },
    )
}

fn both(f: impl Fn(Flavor) -> Vec<Sequence>) -> Vec<Sequence> {
    let mut v = f(Flavor::C);
    v.extend(f(Flavor::BD));
    v
}

fn criterion_7() -> Outcome {
    let cmd = ["class", "--group", "sp", "--partition", "2,2"].map(String::from).to_vec();
    let report = class_report(GroupKind::Symplectic, vec![2, 2], None, cmd).expect("Sp4 (2,2) is a valid class");
    let json = report.to_json();
    let r = &report.results;
    let a = Sequence::new(vec![0, 1, 2], Flavor::C).unwrap();
    let fs = FamilySet::new(&a);
    let id = canonical_identification(&fs).unwrap();
    let g = fs.ground();
    let x = g.canonical(g.mask_of(&[0, 1]).unwrap());
    let y = g.canonical(g.mask_of(&[1, 2]).unwrap());
    let m_side = id.mset.pairing(id.table[&x], id.table[&y]);
    let t1: Value = serde_json::from_str(r#"[{"A":[0,2],"B":[3]},{"A":[0,3],"B":[2]}]"#).unwrap();
    all(vec![
        (json == FIXTURE, "byte-exact fixture".into()),
        (r["sequence"]["a"] == serde_json::json!([0, 1, 2]), "a".into()),
        (r["sequence"]["shifted"] == serde_json::json!([0, 2, 3]), "shifted".into()),
        (r["matching_set"] == serde_json::json!([[0, 1, 2], [0, 2, 1]]), "matching set".into()),
        (r["t1"] == t1, "T1".into()),
        (r["family"]["members"].as_array().map(Vec::len) == Some(3), "family size 3".into()),
        (r["family"]["xf_size"] == 4, "|X_F| = 4".into()),
        (r["component_group"]["abar"] == "Z/2", "Abar = Z/2".into()),
        (m_side == Ratio::new(-1, 2), "m-side pairing -1/2".into()),
        (fs.form(x, y) == 1, "form-side pairing -1/2".into()),
        (!report.failed(), "no failed verification".into()),
    ])
}

fn criterion_8() -> Outcome {
    let mut parts = Vec::new();
    for name in ["S2", "S3", "S4", "S5", "(Z/2)^1", "(Z/2)^2", "(Z/2)^3", "D8"] {
        let (c, _) = fourier_matrix_checks(name).expect("catalog group");
        parts.push((c.holds(), format!("{name} checks")));
        parts.push((c.real_symmetric && c.s_squared_identity, format!("{name} real involution")));
        if name.starts_with("(Z/2)^") {
            parts.push((c.abelian_agreement == Some(true), format!("{name} abelian agreement")));
        }
    }
    for (name, size) in [("S3", 8), ("S4", 21), ("S5", 39)] {
        let t = GroupTable::new(name).unwrap();
        parts.push((m_set(&t).len() == size, format!("|M({name})| = {size}")));
    }
    all(parts)
}

fn criterion_9() -> Outcome {
    all(CATALOG
        .iter()
        .map(|name| (GroupTable::new(name).is_ok_and(|t| t.orthogonality().holds()), name.to_string()))
        .collect())
}

fn criterion_10() -> Outcome {
    let mut parts: Vec<(bool, String)> = ExceptionalType::ALL
        .iter()
        .map(|&ty| (consistency(ty).holds(), format!("{ty} consistency")))
        .collect();
    let rec = |ty, c| lookup(ty, c).expect("spot record present");
    let e8 = rec(ExceptionalType::E8, "2A_4");
    let members: Vec<String> = e8.in_family().map(|m| m.to_string()).collect();
    parts.push((
        e8.a_group == SymTag(5) && e8.abar_group == SymTag(5) && members.len() == 6 && members.last().unwrap() == "70_32",
        "E8 2A_4".into(),
    ));
    let d8 = rec(ExceptionalType::E8, "D_8(a_3)");
    parts.push((
        d8.a_group == SymTag(3)
            && d8.abar_group == SymTag(2)
            && d8.members.iter().any(|m| m.to_string() == "[175_12]"),
        "E8 D_8(a_3)".into(),
    ));
    parts.push((rec(ExceptionalType::E7, "A_3A_2").abar_group == SymTag(1), "E7 A_3A_2".into()));
    let f4 = rec(ExceptionalType::F4, "F_4(a_3)");
    parts.push((f4.a_group == SymTag(4) && f4.abar_group == SymTag(4), "F4 F_4(a_3)".into()));
    let g2 = rec(ExceptionalType::G2, "G_2(a_1)");
    parts.push((g2.a_group == SymTag(3) && g2.abar_group == SymTag(3), "G2 G_2(a_1)".into()));
    all(parts)
}

fn criterion_11() -> Outcome {
    let mut parts = Vec::new();
    for total in [2u32, 4, 6, 8, 10] {
        let r = class_report(GroupKind::Symplectic, vec![total], None, vec![]).unwrap();
        let v = r.verifications.iter().find(|v| v.claim == "interval-partition");
        let unassigned = r.results["unassigned_intervals"].as_array().map_or(0, Vec::len);
        let ok = v.is_some_and(|v| {
            v.status == Status::Reported && v.detail.as_deref().is_some_and(|d| d.contains("outside every block"))
        }) && unassigned > 0
            && !r.failed();
        parts.push((ok, format!("regular class of Sp{total}")));
    }
    all(parts)
}

type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome>);

fn main() -> ExitCode {
    let sixty = Some(Duration::from_secs(60));
    let criteria: Vec<Criterion> = vec![
        ("matching set, flavor C", Box::new(move || timed(sixty, || over(&full_corpus(Flavor::C), matching_outcome)))),
        ("matching set, flavor BD", Box::new(move || timed(sixty, || over(&full_corpus(Flavor::BD), matching_outcome)))),
        ("T1 size and swap bijection", Box::new(|| timed(None, || over(&both(full_corpus), bijection_outcome)))),
        ("Lagrangian pair and duality", Box::new(|| timed(None, || over(&both(full_corpus), check_lagrangian)))),
        (
            "pairing coincidence on classes",
            Box::new(|| timed(Some(Duration::from_secs(120)), || over(&both(class_corpus), pairing_outcome))),
        ),
        ("unipotent slice on classes", Box::new(|| timed(None, || over(&both(class_corpus), slice_outcome)))),
        ("Sp4 (2,2) worked fixture", Box::new(criterion_7)),
        ("Fourier matrix properties", Box::new(|| timed(Some(Duration::from_secs(30)), criterion_8))),
        ("character table orthogonality", Box::new(criterion_9)),
        ("exceptional tables", Box::new(criterion_10)),
        ("unassigned intervals reported", Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.into_iter().enumerate() {
        let o = run();
        failed += usize::from(!o.ok);
        println!("criterion {:>2} {}: {name} ({})", i + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
