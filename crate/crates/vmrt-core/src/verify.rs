//! The acceptance suite: golden tables, dimension and folding checks, and
//! engine self-checks, reported one line per check.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::affine::{all_affine, null_vector, validate_kac_marking, SpaceKind};
use crate::atlas::{enumerate, kac_diagram, lookup, SymmetricSpaceEntry};
use crate::exec::{map_ordered, Execution};
use crate::render_io::{parse, parse_marked, to_canonical_text};
use crate::root_core::{lie_algebra_dimension, parabolic_dimension, CartanType, Family};
use crate::vmrt_engine::{
    contact_grading_check, fold, fold_consistency, identify, normalize_name, type_a_diagram, vmrt, z_dimension,
    z_orbit_diagram, FoldingPair, MarkedDynkinDiagram, VmrtKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub subject: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(criterion: u8, subject: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        Check {
            criterion,
            subject: subject.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

pub const CRITERIA: [(u8, &str); 8] = [
    (1, "golden tables"),
    (2, "exceptional and OG(2,2n+1) dimensions"),
    (3, "dimension formula"),
    (4, "folding"),
    (5, "contact gradation"),
    (6, "Kac-marking rules"),
    (7, "component structure"),
    (8, "engine self-checks"),
];

impl Report {
    /// Worst status among the checks of one criterion.
    pub fn criterion_status(&self, criterion: u8) -> Status {
        self.checks
            .iter()
            .filter(|c| c.criterion == criterion)
            .map(|c| c.status)
            .max()
            .unwrap_or(Status::Fail)
    }

    pub fn count(&self, criterion: u8, status: Status) -> usize {
        self.checks
            .iter()
            .filter(|c| c.criterion == criterion && c.status == status)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// One line per check followed by one summary line per criterion.
    pub fn table(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{}  [{}] {:<34} {}\n",
                c.status, c.criterion, c.subject, c.detail
            ));
        }
        out.push('\n');
        out.push_str(&self.summary());
        out
    }

    pub fn summary(&self) -> String {
        CRITERIA
            .iter()
            .map(|&(k, name)| {
                format!(
                    "{} criterion {k} ({name}): {} pass, {} warn, {} fail\n",
                    self.criterion_status(k),
                    self.count(k, Status::Pass),
                    self.count(k, Status::Warn),
                    self.count(k, Status::Fail)
                )
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flag {
    None,
    /// The tabulated quadric indices follow another convention.
    QuadricIndex,
    /// The tabulated Kac cell is empty.
    SourceGap,
}

struct Golden {
    label: &'static str,
    params: &'static [(&'static str, usize)],
    /// Diagrams as drawn in the table, one per VMRT component.
    diagrams: &'static [&'static str],
    name: &'static str,
    flag: Flag,
}

const fn g(
    label: &'static str,
    params: &'static [(&'static str, usize)],
    diagrams: &'static [&'static str],
    name: &'static str,
) -> Golden {
    Golden {
        label,
        params,
        diagrams,
        name,
        flag: Flag::None,
    }
}

const fn q(
    label: &'static str,
    params: &'static [(&'static str, usize)],
    diagrams: &'static [&'static str],
    name: &'static str,
) -> Golden {
    Golden {
        label,
        params,
        diagrams,
        name,
        flag: Flag::QuadricIndex,
    }
}

const GOLDEN: &[Golden] = &[
    // restricted root system of type A
    g("group-A", &[("n", 1)], &["x-o"], "P^2"),
    g("group-A", &[("n", 3)], &["x-o-o + o-o-x"], "P^3 × (P^3)^∨"),
    g("group-A", &[("n", 6)], &["x-o-o-o-o-o + o-o-o-o-o-x"], "P^6 × (P^6)^∨"),
    g("herm-AI", &[], &["x"], "P^1"),
    g("AI", &[("n", 3)], &["x[2]-o"], "ν_2(P^2)"),
    g("AI", &[("n", 7)], &["x[2]-o-o-o-o-o"], "ν_2(P^6)"),
    g("AII", &[("n", 3)], &["o-x-o-o-o"], "Gr(2,6)"),
    g("AII", &[("n", 5)], &["o-x-o-o-o-o-o-o-o"], "Gr(2,10)"),
    g("BII", &[("n", 2)], &["x-o-o"], "P^3"),
    g("BII", &[("n", 5)], &["x-o-o-o-o-o-o-o-o"], "P^9"),
    g("DII", &[("n", 3)], &["x-o-o-o"], "P^4"),
    g("DII", &[("n", 6)], &["x-o-o-o-o-o-o-o-o-o"], "P^10"),
    Golden {
        label: "EIV",
        params: &[],
        diagrams: &["x-o-o(o)-o-o"],
        name: "E_6/P_1",
        flag: Flag::SourceGap,
    },
    // group type
    g("group-B", &[("n", 3)], &["o-x=>o"], "OG(2,7)"),
    g("group-B", &[("n", 6)], &["o-x-o-o-o=>o"], "OG(2,13)"),
    g("group-C", &[("n", 3)], &["x[2]-o<=o"], "ν_2(P^5)"),
    g("group-C", &[("n", 6)], &["x[2]-o-o-o-o<=o"], "ν_2(P^11)"),
    g("group-D", &[("n", 4)], &["o-x(o)-o"], "OG(2,8)"),
    g("group-D", &[("n", 7)], &["o-x-o-o-o(o)-o"], "OG(2,14)"),
    g("group-E6", &[], &["o-o-o(x)-o-o"], "E_6/P_2"),
    g("group-E7", &[], &["x-o-o(o)-o-o-o"], "E_7/P_1"),
    g("group-E8", &[], &["o-o-o(o)-o-o-o-x"], "E_8/P_8"),
    g("group-F4", &[], &["x-o=>o-o"], "F_4/P_1"),
    g("group-G", &[], &["o<#x"], "G_2/P_2"),
    // simple type
    q("BI", &[("m", 5), ("n", 6)], &["o-o(o)-x + x=>o"], "Q_5 × Q_8"),
    q("BI", &[("m", 8), ("n", 8)], &["o-o(o)-x + x-o-o=>o"], "Q_8 × Q_9"),
    g("CII", &[("m", 2), ("n", 5)], &["o=>x + x-o<=o"], "P^3 × P^5"),
    g("CII", &[("m", 3), ("n", 7)], &["o=>o-x + x-o-o<=o"], "P^5 × P^7"),
    q("DI-odd", &[("m", 2), ("n", 6)], &["o<=o-x + x=>o"], "Q_5 × Q_7"),
    q("DI-odd", &[("m", 3), ("n", 8)], &["o<=o-o-x + x-o=>o"], "Q_7 × Q_9"),
    q("DI-even", &[("m", 4), ("n", 8)], &["o-o(o)-x + x-o(o)-o"], "Q_8 × Q_8"),
    q(
        "DI-even",
        &[("m", 4), ("n", 9)],
        &["o-o(o)-x + x-o-o(o)-o"],
        "Q_8 × Q_10",
    ),
    g("EI", &[], &["o-o-o<=x"], "LG(4,8)"),
    g("EII", &[], &["o-o-x-o-o + x"], "Gr(3,6) × P^1"),
    g("EV", &[], &["o-o-o-x-o-o-o"], "Gr(4,8)"),
    g("EVI", &[], &["o-o-o-o(x)-o + x"], "OG(6,12) × P^1"),
    g("EVIII", &[], &["o-o-o-o-o-o(x)-o"], "OG(8,16)"),
    g("EIX", &[], &["o-o-o(o)-o-o-x + x"], "E_7/P_7 × P^1"),
    g("FI", &[], &["o-o<=x + x"], "LG(3,6) × P^1"),
    g("FII", &[], &["o-o-o=>x"], "OG(4,9)"),
    g("G", &[], &["x + x[3]"], "P^1 × ν_3(P^1)"),
    // Hermitian exceptional
    g(
        "herm-AIII",
        &[("m", 3), ("n", 7)],
        &["x-o + o-o-x", "o-x + x-o-o"],
        "P^2 × (P^3)^∨ and (P^2)^∨ × P^3",
    ),
    g(
        "herm-AIII",
        &[("m", 3), ("n", 8)],
        &["x-o + o-o-o-x", "o-x + x-o-o-o"],
        "P^2 × (P^4)^∨ and (P^2)^∨ × P^4",
    ),
    g("herm-DIII", &[("n", 5)], &["o-o-x-o", "o-x-o-o"], "Gr(3,5) and Gr(2,5)"),
    g(
        "herm-DIII",
        &[("n", 7)],
        &["o-o-o-o-x-o", "o-x-o-o-o-o"],
        "Gr(5,7) and Gr(2,7)",
    ),
    g("herm-EIII", &[], &["o-o-o(o)-x", "o-o-o(x)-o"], "OG(5,10) and OG(5,10)"),
    // Hermitian non-exceptional
    g(
        "herm-AIII",
        &[("m", 3), ("n", 6)],
        &["x-o + o-x + o-x + x-o ~sigma"],
        "P^2 × (P^2)^∨ ⊔ (P^2)^∨ × P^2",
    ),
    g(
        "herm-AIII",
        &[("m", 4), ("n", 8)],
        &["x-o-o + o-o-x + o-o-x + x-o-o ~sigma"],
        "P^3 × (P^3)^∨ ⊔ (P^3)^∨ × P^3",
    ),
    g("herm-BI", &[("n", 4)], &["x-o=>o + x-o=>o ~sigma"], "Q_5 ⊔ Q_5"),
    g("herm-BI", &[("n", 6)], &["x-o-o-o=>o + x-o-o-o=>o ~sigma"], "Q_9 ⊔ Q_9"),
    g(
        "herm-CI",
        &[("n", 3)],
        &["x[2]-o + o-x[2] ~sigma"],
        "ν_2(P^2) ⊔ ν_2(P^2)^∨",
    ),
    g(
        "herm-CI",
        &[("n", 6)],
        &["x[2]-o-o-o-o + o-o-o-o-x[2] ~sigma"],
        "ν_2(P^5) ⊔ ν_2(P^5)^∨",
    ),
    g("herm-DI", &[("n", 5)], &["x-o(o)-o + x-o(o)-o ~sigma"], "Q_6 ⊔ Q_6"),
    g(
        "herm-DI",
        &[("n", 7)],
        &["x-o-o-o(o)-o + x-o-o-o(o)-o ~sigma"],
        "Q_10 ⊔ Q_10",
    ),
    g(
        "herm-DIII",
        &[("n", 6)],
        &["o-x-o-o-o + o-o-o-x-o ~sigma"],
        "Gr(2,6) ⊔ Gr(4,6)",
    ),
    g(
        "herm-DIII",
        &[("n", 8)],
        &["o-x-o-o-o-o-o + o-o-o-o-o-x-o ~sigma"],
        "Gr(2,8) ⊔ Gr(6,8)",
    ),
    g(
        "herm-EVII",
        &[],
        &["x-o-o(o)-o-o + o-o-o(o)-o-x ~sigma"],
        "E_6/P_1 ⊔ E_6/P_6",
    ),
];

pub fn golden_case_count() -> usize {
    GOLDEN.len()
}

fn entry_of(label: &str, params: &[(&str, usize)]) -> crate::Result<SymmetricSpaceEntry> {
    let p: BTreeMap<String, usize> = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    lookup(label, &p)
}

fn golden_check(c: &Golden) -> Check {
    let subject = match entry_of(c.label, c.params) {
        Ok(e) => e.name(),
        Err(_) => c.label.to_string(),
    };
    let run = || -> crate::Result<(bool, String, String)> {
        let e = entry_of(c.label, c.params)?;
        let v = vmrt(&e)?;
        let mut got: Vec<String> = v.components.iter().map(to_canonical_text).collect();
        let mut want = c
            .diagrams
            .iter()
            .map(|s| parse_marked(s).map(|d| to_canonical_text(&d)))
            .collect::<crate::Result<Vec<_>>>()?;
        got.sort();
        want.sort();
        Ok((got == want, got.join(" | "), v.identification))
    };
    match run() {
        Err(err) => Check::new(1, subject, false, format!("error: {err}")),
        Ok((false, got, _)) => Check::new(
            1,
            subject,
            false,
            format!("diagram {got} differs from {}", c.diagrams.join(" | ")),
        ),
        Ok((true, got, name)) => {
            let same_name = normalize_name(&name) == normalize_name(c.name);
            let (status, detail) = match (c.flag, same_name) {
                (Flag::SourceGap, _) => (
                    Status::Warn,
                    format!("{got}; {name}; Kac diagram missing from the table"),
                ),
                (Flag::QuadricIndex, true) | (Flag::None, true) => (Status::Pass, format!("{got}; {name}")),
                (Flag::QuadricIndex, false) => (Status::Warn, format!("{got}; derived {name}, tabulated {}", c.name)),
                (Flag::None, false) => (Status::Fail, format!("{got}; derived {name}, expected {}", c.name)),
            };
            Check {
                criterion: 1,
                subject,
                status,
                detail,
            }
        }
    }
}

pub fn criterion1(exec: Execution) -> Vec<Check> {
    map_ordered(GOLDEN, exec, golden_check)
}

pub fn criterion2() -> Vec<Check> {
    let mut out = Vec::new();
    for (label, dim) in [
        ("group-G", 5),
        ("group-F4", 15),
        ("group-E6", 21),
        ("group-E7", 33),
        ("group-E8", 57),
    ] {
        let got = canonical_entry(label).and_then(|e| vmrt(&e)).map(|v| v.dimension);
        out.push(Check::new(
            2,
            label,
            got.as_ref().ok() == Some(&dim),
            format!("expected {dim}, got {got:?}"),
        ));
    }
    for n in 2..=8 {
        let t = CartanType::new(Family::B, n).expect("rank at least 2");
        let d = MarkedDynkinDiagram::standard(t, &[(2, None)]);
        let got = parabolic_dimension(d.diagram(), d.crossed()).expect("node 2 exists");
        let want = 4 * n - 5;
        out.push(Check::new(
            2,
            format!("OG(2,{})", 2 * n + 1),
            got == want,
            format!("expected {want}, got {got}"),
        ));
    }
    out
}

fn canonical_entry(label: &str) -> crate::Result<SymmetricSpaceEntry> {
    lookup(label, &BTreeMap::new())
}

fn dimension_check(e: &SymmetricSpaceEntry) -> Check {
    let run = || -> crate::Result<(bool, String)> {
        let z = z_orbit_diagram(&kac_diagram(e), e.kind)?;
        let z_dim = z_dimension(&z[0]);
        let v = vmrt(e)?;
        let expected = z_dim + e.boundary_degree as usize - 1;
        let from_diagram = z_dimension(&v.components[0]);
        let mut ok = v.dimension == expected && from_diagram == expected;
        let mut detail = format!(
            "z {z_dim} + ∂ {} - 1 = {expected}; diagram {from_diagram}",
            e.boundary_degree
        );
        if v.kind == VmrtKind::TypeAGPlambda {
            let (gp, _) = type_a_diagram(e)?;
            let gp_dim = z_dimension(&gp);
            ok &= gp_dim == z_dim + 1;
            detail.push_str(&format!("; (G,P_λ) {gp_dim}"));
        }
        Ok((ok, detail))
    };
    match run() {
        Ok((ok, detail)) => Check::new(3, e.name(), ok, detail),
        Err(err) => Check::new(3, e.name(), false, format!("error: {err}")),
    }
}

pub fn criterion3(max_rank: usize, exec: Execution) -> Vec<Check> {
    map_ordered(&enumerate(max_rank), exec, dimension_check)
}

pub fn criterion4(exec: Execution) -> Vec<Check> {
    let mut entries = Vec::new();
    for r in 2..=10 {
        entries.push(("group-A", vec![("n", r)]));
    }
    for r in (2..=10).step_by(2) {
        entries.push(("AI", vec![("n", r + 1)]));
    }
    for r in 2..=10 {
        entries.push(("AII", vec![("n", r + 1)]));
    }
    entries.push(("EIV", vec![]));
    let mut out = map_ordered(&entries, exec, |(label, params)| match entry_of(label, params) {
        Ok(e) => match fold_consistency(&e) {
            Ok(ok) => Check::new(
                4,
                e.name(),
                ok,
                if ok {
                    "folded diagram equals Z"
                } else {
                    "folded diagram differs from Z"
                },
            ),
            Err(err) => Check::new(4, e.name(), false, format!("error: {err}")),
        },
        Err(err) => Check::new(4, *label, false, format!("error: {err}")),
    });
    let ty = |f, n| CartanType::new(f, n).expect("fixed rank");
    let displayed = [
        (
            "ν_2(P^10) to B_5",
            MarkedDynkinDiagram::standard(ty(Family::A, 10), &[(1, Some(2))]),
            FoldingPair::A2lBl,
            MarkedDynkinDiagram::standard(ty(Family::B, 5), &[(1, Some(2))]),
        ),
        (
            "Gr(2,10) to IG(2,10)",
            MarkedDynkinDiagram::standard(ty(Family::A, 9), &[(2, None)]),
            FoldingPair::A2l1Cl,
            MarkedDynkinDiagram::standard(ty(Family::C, 5), &[(2, None)]),
        ),
        (
            "E_6/P_6 to F_4/P_4",
            MarkedDynkinDiagram::standard(ty(Family::E, 6), &[(6, None)]),
            FoldingPair::E6F4,
            MarkedDynkinDiagram::standard(ty(Family::F, 4), &[(4, None)]),
        ),
    ];
    for (subject, from, pair, want) in displayed {
        match fold(&from, pair) {
            Ok(got) => {
                let ok = to_canonical_text(&got) == to_canonical_text(&want);
                out.push(Check::new(
                    4,
                    subject,
                    ok,
                    format!(
                        "{} folds to {} ({})",
                        to_canonical_text(&from),
                        to_canonical_text(&got),
                        identify(&got)
                    ),
                ));
            }
            Err(err) => out.push(Check::new(4, subject, false, format!("error: {err}"))),
        }
    }
    out
}

pub fn criterion5(exec: Execution) -> Vec<Check> {
    let entries: Vec<SymmetricSpaceEntry> = enumerate(8)
        .into_iter()
        .filter(|e| e.kind == SpaceKind::Group)
        .collect();
    map_ordered(&entries, exec, |e| match contact_grading_check(e) {
        Ok(ok) => Check::new(
            5,
            e.name(),
            ok,
            if ok {
                "depth 2, top piece of dimension 1"
            } else {
                "not a contact grading"
            },
        ),
        Err(err) => Check::new(5, e.name(), false, format!("error: {err}")),
    })
}

pub fn criterion6(max_rank: usize, exec: Execution) -> Vec<Check> {
    map_ordered(&enumerate(max_rank), exec, |e| {
        let ok = validate_kac_marking(&kac_diagram(e), e.kind);
        Check::new(
            6,
            e.name(),
            ok,
            if ok {
                "marking rules hold"
            } else {
                "marking rules violated"
            },
        )
    })
}

pub fn criterion7(max_rank: usize, exec: Execution) -> Vec<Check> {
    map_ordered(&enumerate(max_rank), exec, |e| {
        let z = match z_orbit_diagram(&kac_diagram(e), e.kind) {
            Ok(z) => z,
            Err(err) => return Check::new(7, e.name(), false, format!("error: {err}")),
        };
        let (ok, detail) = match e.kind {
            SpaceKind::Group | SpaceKind::Simple => (
                z.len() == 1 && z[0].sigma_pairs().is_none(),
                format!("{} diagram", z.len()),
            ),
            SpaceKind::HermitianExceptional => (
                z.len() == 2 && z.iter().all(|d| d.sigma_pairs().is_none()),
                format!("{} diagrams", z.len()),
            ),
            SpaceKind::HermitianNonexceptional => {
                let halves = z.first().and_then(|d| d.halves());
                let iso = halves.is_some_and(|(a, b)| to_canonical_text(&a) == to_canonical_text(&b));
                (
                    z.len() == 1 && iso,
                    format!("{} sigma-paired diagram, isomorphic halves {iso}", z.len()),
                )
            }
        };
        Check::new(7, e.name(), ok, detail)
    })
}

/// Every diagram produced for one entry, as canonical text round trips.
fn round_trip(e: &SymmetricSpaceEntry) -> Result<usize, String> {
    let kac = kac_diagram(e);
    let mut texts = vec![to_canonical_text(&kac)];
    let z = z_orbit_diagram(&kac, e.kind).map_err(|err| err.to_string())?;
    texts.extend(z.iter().map(to_canonical_text));
    let v = vmrt(e).map_err(|err| err.to_string())?;
    texts.extend(v.components.iter().map(to_canonical_text));
    if v.kind == VmrtKind::TypeAGPlambda {
        let (gp, _) = type_a_diagram(e).map_err(|err| err.to_string())?;
        texts.push(to_canonical_text(&gp));
    }
    for t in &texts {
        let back = parse(t).map_err(|err| format!("{t}: {err}"))?.canonical_text();
        if &back != t {
            return Err(format!("{t} came back as {back}"));
        }
    }
    Ok(texts.len())
}

pub fn criterion8(max_rank: usize, exec: Execution) -> Vec<Check> {
    let mut out = Vec::new();
    let types: Vec<CartanType> = (1..=12).flat_map(CartanType::all_of_rank).collect();
    let bad: Vec<String> = types
        .iter()
        .filter(|t| lie_algebra_dimension(**t) != t.known_dimension())
        .map(|t| t.to_string())
        .collect();
    out.push(Check::new(
        8,
        "Lie algebra dimensions",
        bad.is_empty(),
        format!("{} types up to rank 12; mismatches {bad:?}", types.len()),
    ));
    let affine = all_affine(max_rank + 1);
    let bad: Vec<String> = affine
        .iter()
        .filter(|d| null_vector(&d.cartan_matrix()).as_deref() != Some(d.labels()))
        .map(|d| d.to_string())
        .collect();
    out.push(Check::new(
        8,
        "affine label null vectors",
        bad.is_empty(),
        format!("{} affine diagrams; mismatches {bad:?}", affine.len()),
    ));
    let entries = enumerate(max_rank);
    let results = map_ordered(&entries, exec, round_trip);
    let total: usize = results.iter().filter_map(|r| r.as_ref().ok()).sum();
    let failures: BTreeSet<String> = results
        .iter()
        .zip(&entries)
        .filter_map(|(r, e)| r.as_ref().err().map(|m| format!("{}: {m}", e.name())))
        .collect();
    out.push(Check::new(
        8,
        "canonical text round trip",
        failures.is_empty(),
        if failures.is_empty() {
            format!("{total} diagrams from {} entries", entries.len())
        } else {
            failures.into_iter().collect::<Vec<_>>().join("; ")
        },
    ));
    out
}

/// Runs every criterion; checks are ordered by criterion then subject order.
pub fn run_all(max_rank: usize, exec: Execution) -> Report {
    let mut checks = criterion1(exec);
    checks.extend(criterion2());
    checks.extend(criterion3(max_rank, exec));
    checks.extend(criterion4(exec));
    checks.extend(criterion5(exec));
    checks.extend(criterion6(max_rank, exec));
    checks.extend(criterion7(max_rank, exec));
    checks.extend(criterion8(max_rank, exec));
    Report { checks }
}
