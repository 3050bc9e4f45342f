//! Special unipotent classes of the exceptional adjoint groups with their
//! Springer members and component groups, stored as one record per line in
//! `data/exceptional.txt`, plus the type A rule.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::fourier::group::symmetric_irrep_names;
use crate::fourier::{m_set, GroupTable};

/// The checked-in table.
pub const TABLE: &str = include_str!("../data/exceptional.txt");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExceptionalError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("unknown type {0:?}")]
    UnknownType(String),
    #[error("no class {class:?} in type {ty}")]
    UnknownClass { ty: String, class: String },
    #[error("{members} in-family members but only {available} listed irreducibles of {group}")]
    CountOverflow {
        members: usize,
        available: usize,
        group: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ExceptionalType {
    E8,
    E7,
    E6,
    F4,
    G2,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 5] = [Self::E8, Self::E7, Self::E6, Self::F4, Self::G2];

    /// Whether member subscripts are b-values; F4 subscripts index the
    /// irreducibles of a given degree instead.
    pub fn subscripts_are_b(self) -> bool {
        !matches!(self, Self::F4)
    }
}

impl fmt::Display for ExceptionalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ExceptionalType {
    type Err = ExceptionalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| ExceptionalError::UnknownType(s.to_string()))
    }
}

/// A(u) or Ā(u): the symmetric group on `n` letters, n = 1 meaning trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymTag(pub usize);

impl SymTag {
    pub fn order(self) -> usize {
        (1..=self.0).product()
    }

    /// Catalog name of the group.
    pub fn catalog_name(self) -> String {
        match self.0 {
            1 => "trivial".into(),
            n => format!("S{n}"),
        }
    }

    /// Irreducibles in the listing order of the tables; G2 lists two for S3.
    pub fn listed_irreps(self, ty: ExceptionalType) -> Vec<&'static str> {
        let names = symmetric_irrep_names(self.0);
        let len = match (self.0, ty) {
            (3, ExceptionalType::G2) => 2,
            (5, _) => 6,
            (n, _) => n.min(names.len()),
        };
        names[..len].to_vec()
    }
}

impl fmt::Display for SymTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            1 => write!(f, "1"),
            n => write!(f, "S{n}"),
        }
    }
}

impl Serialize for SymTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SymTag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "1" => Ok(Self(1)),
            _ => s
                .strip_prefix('S')
                .and_then(|n| n.parse().ok())
                .filter(|n| (1..=5).contains(n))
                .map(Self)
                .ok_or_else(|| format!("bad group tag {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Member {
    pub label: String,
    pub b: Option<u32>,
    pub in_family: bool,
}

impl fmt::Display for Member {
    /// Table notation: `175_12`, bracketed when outside the family.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match self.b {
            Some(b) => format!("{}_{b}", self.label),
            None => self.label.clone(),
        };
        if self.in_family {
            write!(f, "{body}")
        } else {
            write!(f, "[{body}]")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionalRecord {
    pub group_type: ExceptionalType,
    pub class_name: String,
    pub members: Vec<Member>,
    pub a_group: SymTag,
    pub abar_group: SymTag,
}

impl ExceptionalRecord {
    pub fn in_family(&self) -> impl Iterator<Item = &Member> {
        self.members.iter().filter(|m| m.in_family)
    }

    /// The record as a table line.
    pub fn to_line(&self) -> String {
        let members: Vec<String> = self
            .members
            .iter()
            .map(|m| {
                let b = m.b.map_or("-".to_string(), |b| b.to_string());
                format!("{}({b},{})", m.label, u8::from(m.in_family))
            })
            .collect();
        format!(
            "{}|{}|{}|{}|{}",
            self.group_type,
            self.class_name,
            members.join(","),
            self.a_group,
            self.abar_group
        )
    }

    pub fn parse_line(line: &str, lineno: usize) -> Result<Self, ExceptionalError> {
        let err = |reason: String| ExceptionalError::Parse { line: lineno, reason };
        let fields: Vec<&str> = line.split('|').collect();
        let [ty, class, members, a, abar] = fields.as_slice() else {
            return Err(err(format!("expected 5 fields, found {}", fields.len())));
        };
        let members = split_members(members)
            .into_iter()
            .map(|m| parse_member(m).map_err(&err))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            group_type: ty.parse().map_err(|e: ExceptionalError| err(e.to_string()))?,
            class_name: class.to_string(),
            members,
            a_group: a.parse().map_err(err)?,
            abar_group: abar.parse().map_err(err)?,
        })
    }
}

/// Split at commas outside parentheses.
fn split_members(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_member(s: &str) -> Result<Member, String> {
    let open = s.rfind('(').ok_or_else(|| format!("member {s:?} lacks (b,flag)"))?;
    let inner = s[open + 1..]
        .strip_suffix(')')
        .ok_or_else(|| format!("member {s:?} lacks a closing parenthesis"))?;
    let (b, flag) = inner.split_once(',').ok_or_else(|| format!("member {s:?}: expected b,flag"))?;
    let b = match b {
        "-" => None,
        _ => Some(b.parse().map_err(|_| format!("member {s:?}: bad subscript"))?),
    };
    let in_family = match flag {
        "1" => true,
        "0" => false,
        _ => return Err(format!("member {s:?}: flag must be 0 or 1")),
    };
    Ok(Member {
        label: s[..open].to_string(),
        b,
        in_family,
    })
}

pub fn parse_table(text: &str) -> Result<Vec<ExceptionalRecord>, ExceptionalError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| ExceptionalRecord::parse_line(l, i + 1))
        .collect()
}

pub fn serialize_table(records: &[ExceptionalRecord]) -> String {
    records.iter().map(|r| r.to_line() + "\n").collect()
}

/// All records of the checked-in table.
pub fn records() -> Vec<ExceptionalRecord> {
    parse_table(TABLE).expect("checked-in table parses")
}

pub fn records_of(ty: ExceptionalType) -> Vec<ExceptionalRecord> {
    records().into_iter().filter(|r| r.group_type == ty).collect()
}

/// Class names accepted besides the stored ones.
fn normalize_class(name: &str) -> &str {
    match name {
        "trivial" | "∅" | "0" => "1",
        _ => name,
    }
}

pub fn lookup(ty: ExceptionalType, class: &str) -> Result<ExceptionalRecord, ExceptionalError> {
    let class = normalize_class(class);
    records_of(ty)
        .into_iter()
        .find(|r| r.class_name == class)
        .ok_or_else(|| ExceptionalError::UnknownClass {
            ty: ty.to_string(),
            class: class.to_string(),
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Attachment {
    pub member: String,
    pub irrep: String,
}

/// In-family members in table order paired with the listed irreducibles of Ā.
pub fn attach_irreps(r: &ExceptionalRecord) -> Result<Vec<Attachment>, ExceptionalError> {
    attach(r.in_family(), r.abar_group, r.group_type)
}

/// All members in table order paired with the listed irreducibles of A.
pub fn attach_irreps_of_a(r: &ExceptionalRecord) -> Result<Vec<Attachment>, ExceptionalError> {
    attach(r.members.iter(), r.a_group, r.group_type)
}

fn attach<'a>(
    members: impl Iterator<Item = &'a Member>,
    group: SymTag,
    ty: ExceptionalType,
) -> Result<Vec<Attachment>, ExceptionalError> {
    let members: Vec<&Member> = members.collect();
    let names = group.listed_irreps(ty);
    if members.len() > names.len() {
        return Err(ExceptionalError::CountOverflow {
            members: members.len(),
            available: names.len(),
            group: group.to_string(),
        });
    }
    Ok(members
        .iter()
        .zip(names)
        .map(|(m, n)| Attachment {
            member: m.to_string(),
            irrep: n.to_string(),
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordCheck {
    pub class_name: String,
    /// None when subscripts are not b-values or are missing.
    pub first_has_minimal_b: Option<bool>,
    pub brackets_after_first_in_family: bool,
    pub member_count_matches_a: bool,
    pub in_family_count_matches_abar: bool,
    pub abar_equals_a_iff_no_brackets: bool,
    pub abar_order_divides_a_order: bool,
    /// |M(Ā)| from the group catalog.
    pub m_size: usize,
    pub m_size_matches_tag: bool,
}

impl RecordCheck {
    pub fn holds(&self) -> bool {
        self.first_has_minimal_b != Some(false)
            && self.brackets_after_first_in_family
            && self.member_count_matches_a
            && self.in_family_count_matches_abar
            && self.abar_equals_a_iff_no_brackets
            && self.abar_order_divides_a_order
            && self.m_size_matches_tag
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub group_type: ExceptionalType,
    pub records_scanned: usize,
    pub records: Vec<RecordCheck>,
}

impl ConsistencyReport {
    pub fn holds(&self) -> bool {
        self.records.iter().all(RecordCheck::holds)
    }
}

/// |M(S_n)| for the tags that occur.
fn expected_m_size(tag: SymTag) -> usize {
    match tag.0 {
        1 => 1,
        2 => 4,
        3 => 8,
        4 => 21,
        _ => 39,
    }
}

pub fn check_record(r: &ExceptionalRecord) -> RecordCheck {
    let bs: Vec<u32> = r.members.iter().filter_map(|m| m.b).collect();
    let first_has_minimal_b = (r.group_type.subscripts_are_b() && bs.len() == r.members.len())
        .then(|| bs.first().is_some_and(|f| bs.iter().all(|b| f <= b)));
    let first_in = r.members.iter().position(|m| m.in_family);
    let brackets_after_first_in_family = first_in.is_some_and(|i| r.members[..i].iter().all(|m| m.in_family));
    let in_family = r.in_family().count();
    let any_bracket = in_family < r.members.len();
    let m_size = GroupTable::new(&r.abar_group.catalog_name()).map_or(0, |t| m_set(&t).len());
    RecordCheck {
        class_name: r.class_name.clone(),
        first_has_minimal_b,
        brackets_after_first_in_family,
        member_count_matches_a: r.members.len() == r.a_group.listed_irreps(r.group_type).len(),
        in_family_count_matches_abar: in_family == r.abar_group.listed_irreps(r.group_type).len(),
        abar_equals_a_iff_no_brackets: (r.abar_group == r.a_group) == !any_bracket,
        abar_order_divides_a_order: r.a_group.order().is_multiple_of(r.abar_group.order()),
        m_size,
        m_size_matches_tag: m_size == expected_m_size(r.abar_group),
    }
}

pub fn consistency(ty: ExceptionalType) -> ConsistencyReport {
    let records: Vec<RecordCheck> = records_of(ty).iter().map(check_record).collect();
    ConsistencyReport {
        group_type: ty,
        records_scanned: records.len(),
        records,
    }
}

/// Type A: every class is special and A(u) = Ā(u) = 1; the family of the
/// class with Jordan type `partition` is the single representation labelled
/// by it.
pub fn type_a_record(partition: &[u32]) -> (String, Member, SymTag, SymTag) {
    let label = partition.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    let member = Member {
        label: format!("({label})"),
        b: None,
        in_family: true,
    };
    (label, member, SymTag(1), SymTag(1))
}
