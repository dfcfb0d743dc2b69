//! Irreducible adjoint symmetric spaces with their marked Kac diagrams.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::affine::{affine_diagram, affine_node_count, MarkedKacDiagram, SpaceKind};
use crate::error::{Error, Result};
use crate::graph::NodeId;
use crate::root_core::{CartanType, Family};

/// Restricted root system; `BC` is the non-reduced one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RestrictedType {
    Reduced(CartanType),
    BC(usize),
}

impl RestrictedType {
    pub fn is_type_a(self) -> bool {
        matches!(self, RestrictedType::Reduced(t) if t.family() == Family::A)
    }

    pub fn rank(self) -> usize {
        match self {
            RestrictedType::Reduced(t) => t.rank(),
            RestrictedType::BC(r) => r,
        }
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RestrictedType::Reduced(t) => write!(f, "{t}"),
            RestrictedType::BC(r) => write!(f, "BC_{r}"),
        }
    }
}

impl Serialize for RestrictedType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KacSpec {
    pub base: CartanType,
    pub twist: u8,
    pub white: Vec<NodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricSpaceEntry {
    pub label: &'static str,
    pub params: BTreeMap<&'static str, usize>,
    pub kind: SpaceKind,
    pub g_desc: String,
    pub h_desc: String,
    pub kac: KacSpec,
    pub restricted_type: RestrictedType,
    pub boundary_degree: u8,
    /// The source tables leave the Kac diagram of this row blank.
    pub source_gap: bool,
    /// VMRT name as tabulated, instantiated.
    pub tabulated_vmrt: Option<String>,
    /// The tabulated quadric indices disagree with root counting.
    pub quadric_index_flag: bool,
    /// `dim P(p)` as printed for the rank-one rows.
    pub projective_dim: Option<usize>,
}

impl SymmetricSpaceEntry {
    pub fn param(&self, p: &str) -> Option<usize> {
        self.params.get(p).copied()
    }

    /// `label` or `label(n=.., m=..)`.
    pub fn name(&self) -> String {
        if self.params.is_empty() {
            self.label.to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{}({})", self.label, ps.join(","))
        }
    }

    pub fn node_count(&self) -> usize {
        affine_node_count(self.kac.base, self.kac.twist)
    }
}

/// Row labels in table order.
pub const LABELS: [&str; 35] = [
    "group-A",
    "group-B",
    "group-C",
    "group-D",
    "group-E6",
    "group-E7",
    "group-E8",
    "group-F4",
    "group-G",
    "AI",
    "AII",
    "BI",
    "BII",
    "CII",
    "DI-odd",
    "DI-even",
    "DII",
    "EI",
    "EII",
    "EIV",
    "EV",
    "EVI",
    "EVIII",
    "EIX",
    "FI",
    "FII",
    "G",
    "herm-AI",
    "herm-AIII",
    "herm-BI",
    "herm-CI",
    "herm-DI",
    "herm-DIII",
    "herm-EIII",
    "herm-EVII",
];

pub fn params_of(label: &str) -> &'static [&'static str] {
    match label {
        "BI" | "CII" | "DI-odd" | "DI-even" | "herm-AIII" => &["n", "m"],
        "group-A" | "group-B" | "group-C" | "group-D" | "AI" | "AII" | "BII" | "DII" | "herm-BI" | "herm-CI"
        | "herm-DI" | "herm-DIII" => &["n"],
        _ => &[],
    }
}

fn canonical_label(label: &str) -> Result<&'static str> {
    let key = label.to_ascii_lowercase();
    let key = match key.as_str() {
        "group-g2" => "group-g",
        "group-a1" => "group-a",
        other => other,
    };
    LABELS
        .iter()
        .copied()
        .find(|l| l.to_ascii_lowercase() == key)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))
}

fn ty(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).expect("ranges checked before construction")
}

fn red(f: Family, n: usize) -> RestrictedType {
    RestrictedType::Reduced(ty(f, n))
}

pub fn lookup(label: &str, params: &BTreeMap<String, usize>) -> Result<SymmetricSpaceEntry> {
    let label = canonical_label(label)?;
    let wanted = params_of(label);
    if let Some(extra) = params.keys().find(|k| !wanted.contains(&k.as_str())) {
        return Err(Error::ParamOutOfRange {
            label: label.into(),
            bound: format!("no parameter {extra}"),
        });
    }
    let get = |p: &'static str| {
        params.get(p).copied().ok_or(Error::MissingParam {
            label: label.into(),
            param: p,
        })
    };
    let n = if wanted.contains(&"n") { get("n")? } else { 0 };
    let m = if wanted.contains(&"m") { get("m")? } else { 0 };
    build(label, n, m)
}

fn need(label: &str, ok: bool, bound: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::ParamOutOfRange {
            label: label.into(),
            bound: bound.into(),
        })
    }
}

struct Row {
    kind: SpaceKind,
    g: String,
    h: String,
    kac: (CartanType, u8, Vec<NodeId>),
    restricted: RestrictedType,
    tabulated_vmrt: Option<String>,
}

fn row(
    kind: SpaceKind,
    g: impl Into<String>,
    h: impl Into<String>,
    kac: (CartanType, u8, Vec<NodeId>),
    restricted: RestrictedType,
    name: impl Into<String>,
) -> Row {
    let name = name.into();
    Row {
        kind,
        g: g.into(),
        h: h.into(),
        kac,
        restricted,
        tabulated_vmrt: if name.is_empty() { None } else { Some(name) },
    }
}

fn build(label: &'static str, n: usize, m: usize) -> Result<SymmetricSpaceEntry> {
    use Family::*;
    use SpaceKind::*;
    let group = |f: Family, r: usize, h: String, name: String| {
        let t = ty(f, r);
        row(
            Group,
            format!("{h} × {h}"),
            h,
            (t, 1, vec![0]),
            RestrictedType::Reduced(t),
            name,
        )
    };
    let r = match label {
        "group-A" => {
            need(label, n >= 1, "n ≥ 1")?;
            let name = if n == 1 {
                "P^2".to_string()
            } else {
                format!("P^{n} × (P^{n})^∨")
            };
            group(A, n, format!("PGL_{}", n + 1), name)
        }
        "group-B" => {
            need(label, n >= 2, "n ≥ 2")?;
            group(B, n, format!("PO_{}", 2 * n + 1), format!("OG(2,{})", 2 * n + 1))
        }
        "group-C" => {
            need(label, n >= 2, "n ≥ 2")?;
            group(C, n, format!("PSp_{}", 2 * n), format!("ν_2(P^{})", 2 * n - 1))
        }
        "group-D" => {
            need(label, n >= 4, "n ≥ 4")?;
            group(D, n, format!("PO_{}", 2 * n), format!("OG(2,{})", 2 * n))
        }
        "group-E6" => group(E, 6, "E_6".into(), "E_6/P_2".into()),
        "group-E7" => group(E, 7, "E_7".into(), "E_7/P_1".into()),
        "group-E8" => group(E, 8, "E_8".into(), "E_8/P_8".into()),
        "group-F4" => group(F, 4, "F_4".into(), "F_4/P_1".into()),
        "group-G" => group(G, 2, "G_2".into(), "G_2/P_2".into()),
        "AI" => {
            need(label, n >= 3, "n ≥ 3")?;
            let l = n / 2;
            let kac = if n % 2 == 1 {
                (ty(A, n - 1), 2, vec![l])
            } else {
                (ty(A, n - 1), 2, vec![if l == 2 { 1 } else { l }])
            };
            row(
                Simple,
                format!("SL_{n}"),
                format!("SO_{n}"),
                kac,
                red(A, n - 1),
                format!("ν_2(P^{})", n - 1),
            )
        }
        "AII" => {
            need(label, n >= 3, "n ≥ 3")?;
            row(
                Simple,
                format!("SL_{}", 2 * n),
                format!("Sp_{}", 2 * n),
                (ty(A, 2 * n - 1), 2, vec![0]),
                red(A, n - 1),
                format!("Gr(2,{})", 2 * n),
            )
        }
        "BI" => {
            need(label, n >= 3 && (3..=n).contains(&m), "n ≥ 3 and 3 ≤ m ≤ n")?;
            let k = if m.is_multiple_of(2) {
                m / 2
            } else {
                (2 * n + 1 - m) / 2
            };
            row(
                Simple,
                format!("SO_{}", 2 * n + 1),
                format!("S(O_{m} × O_{})", 2 * n + 1 - m),
                (ty(B, n), 1, vec![k]),
                red(B, m),
                format!("Q_{m} × Q_{}", 2 * n + 1 - m),
            )
        }
        "BII" => {
            need(label, n >= 2, "n ≥ 2")?;
            row(
                Simple,
                format!("SO_{}", 2 * n + 1),
                format!("O_{}", 2 * n),
                (ty(B, n), 1, vec![n]),
                red(A, 1),
                format!("P^{}", 2 * n - 1),
            )
        }
        "CII" => {
            need(label, n >= 3 && m >= 1 && 2 * m <= n, "n ≥ 3 and 1 ≤ m ≤ n/2")?;
            let restricted = if 2 * m == n { red(C, m) } else { RestrictedType::BC(m) };
            row(
                Simple,
                format!("Sp_{}", 2 * n),
                format!("Sp_{} × Sp_{}", 2 * m, 2 * (n - m)),
                (ty(C, n), 1, vec![m]),
                restricted,
                format!("P^{} × P^{}", 2 * m - 1, 2 * (n - m) - 1),
            )
        }
        "DI-odd" => {
            need(label, n >= 4 && m >= 1 && 2 * m < n, "n ≥ 4 and 1 ≤ m ≤ (n−1)/2")?;
            let p = 2 * m + 1;
            let restricted = if n == 2 * m + 1 { red(D, p) } else { red(B, p) };
            row(
                Simple,
                format!("SO_{}", 2 * n),
                format!("S(O_{p} × O_{})", 2 * (n - m) - 1),
                (ty(D, n), 2, vec![m]),
                restricted,
                format!("Q_{p} × Q_{}", 2 * (n - m) - 1),
            )
        }
        "DI-even" => {
            need(label, n >= 4 && m >= 2 && 2 * m <= n, "n ≥ 4 and 2 ≤ m ≤ n/2")?;
            let p = 2 * m;
            let restricted = if 2 * m == n { red(D, p) } else { red(B, p) };
            row(
                Simple,
                format!("SO_{}", 2 * n),
                format!("S(O_{p} × O_{})", 2 * (n - m)),
                (ty(D, n), 1, vec![m]),
                restricted,
                format!("Q_{p} × Q_{}", 2 * (n - m)),
            )
        }
        "DII" => {
            need(label, n >= 3, "n ≥ 3")?;
            row(
                Simple,
                format!("SO_{}", 2 * n),
                format!("O_{}", 2 * n - 1),
                (ty(D, n), 2, vec![0]),
                red(A, 1),
                format!("P^{}", 2 * n - 2),
            )
        }
        "EI" => row(Simple, "E_6", "C_4", (ty(E, 6), 2, vec![4]), red(E, 6), "LG(4,8)"),
        "EII" => row(
            Simple,
            "E_6",
            "A_5 × A_1",
            (ty(E, 6), 1, vec![2]),
            red(F, 4),
            "Gr(3,6) × P^1",
        ),
        "EIV" => row(Simple, "E_6", "F_4", (ty(E, 6), 2, vec![0]), red(A, 2), "E_6/P_1"),
        "EV" => row(Simple, "E_7", "A_7", (ty(E, 7), 1, vec![2]), red(E, 7), "Gr(4,8)"),
        "EVI" => row(
            Simple,
            "E_7",
            "D_6 × A_1",
            (ty(E, 7), 1, vec![1]),
            red(F, 4),
            "OG(6,12) × P^1",
        ),
        "EVIII" => row(Simple, "E_8", "D_8", (ty(E, 8), 1, vec![1]), red(E, 8), "OG(8,16)"),
        "EIX" => row(
            Simple,
            "E_8",
            "E_7 × A_1",
            (ty(E, 8), 1, vec![8]),
            red(F, 4),
            "E_7/P_7 × P^1",
        ),
        "FI" => row(
            Simple,
            "F_4",
            "C_3 × A_1",
            (ty(F, 4), 1, vec![1]),
            red(F, 4),
            "LG(3,6) × P^1",
        ),
        "FII" => row(
            Simple,
            "F_4",
            "B_4",
            (ty(F, 4), 1, vec![4]),
            RestrictedType::BC(1),
            "OG(4,9)",
        ),
        "G" => row(
            Simple,
            "G_2",
            "A_1 × A_1",
            (ty(G, 2), 1, vec![2]),
            red(G, 2),
            "P^1 × ν_3(P^1)",
        ),
        "herm-AI" => row(
            HermitianNonexceptional,
            "PGL_2",
            "PO_2",
            (ty(A, 1), 1, vec![0, 1]),
            red(A, 1),
            "P^1",
        ),
        "herm-AIII" => {
            need(label, n >= 3 && m >= 1 && 2 * m <= n, "n ≥ 3 and 1 ≤ m ≤ n/2")?;
            let (kind, restricted, name) = if 2 * m == n {
                (
                    HermitianNonexceptional,
                    red(C, m),
                    format!("P^{a} × (P^{a})^∨ ⊔ (P^{a})^∨ × P^{a}", a = m - 1),
                )
            } else {
                (
                    HermitianExceptional,
                    RestrictedType::BC(m),
                    format!("P^{a} × (P^{b})^∨ and (P^{a})^∨ × P^{b}", a = m - 1, b = n - m - 1),
                )
            };
            row(
                kind,
                format!("PGL_{n}"),
                format!("PG(L_{m} × L_{})", n - m),
                (ty(A, n - 1), 1, vec![0, m]),
                restricted,
                name,
            )
        }
        "herm-BI" => {
            need(label, n >= 2, "n ≥ 2")?;
            row(
                HermitianNonexceptional,
                format!("PO_{}", 2 * n + 1),
                format!("P(O_2 × O_{})", 2 * n - 1),
                (ty(B, n), 1, vec![0, 1]),
                red(B, 2),
                format!("Q_{q} ⊔ Q_{q}", q = 2 * n - 3),
            )
        }
        "herm-CI" => {
            need(label, n >= 2, "n ≥ 2")?;
            row(
                HermitianNonexceptional,
                format!("PSp_{}", 2 * n),
                format!("PGL_{n}"),
                (ty(C, n), 1, vec![0, n]),
                red(C, n),
                format!("ν_2(P^{a}) ⊔ ν_2(P^{a})^∨", a = n - 1),
            )
        }
        "herm-DI" => {
            need(label, n >= 4, "n ≥ 4")?;
            row(
                HermitianNonexceptional,
                format!("PO_{}", 2 * n),
                format!("P(O_2 × O_{})", 2 * n - 2),
                (ty(D, n), 1, vec![0, 1]),
                red(B, 2),
                format!("Q_{q} ⊔ Q_{q}", q = 2 * n - 4),
            )
        }
        "herm-DIII" => {
            need(label, n >= 4, "n ≥ 4")?;
            let (kind, restricted, name) = if n.is_multiple_of(2) {
                (
                    HermitianNonexceptional,
                    red(C, n / 2),
                    format!("Gr(2,{n}) ⊔ Gr({},{n})", n - 2),
                )
            } else {
                (
                    HermitianExceptional,
                    RestrictedType::BC(n / 2),
                    format!("Gr({},{n}) and Gr(2,{n})", n - 2),
                )
            };
            row(
                kind,
                format!("PO_{}", 2 * n),
                format!("PGL_{n}"),
                (ty(D, n), 1, vec![0, n]),
                restricted,
                name,
            )
        }
        "herm-EIII" => row(
            HermitianExceptional,
            "E_6",
            "D_5 × C^*",
            (ty(E, 6), 1, vec![0, 1]),
            RestrictedType::BC(2),
            "OG(5,10) and OG(5,10)",
        ),
        "herm-EVII" => row(
            HermitianNonexceptional,
            "E_7",
            "E_6 × C^*",
            (ty(E, 7), 1, vec![0, 7]),
            red(C, 3),
            "E_6/P_1 ⊔ E_6/P_6",
        ),
        _ => unreachable!("label canonicalized"),
    };
    let mut params = BTreeMap::new();
    for &p in params_of(label) {
        params.insert(p, if p == "n" { n } else { m });
    }
    let projective_dim = match label {
        "group-A" if n == 1 => Some(2),
        "herm-AI" => Some(1),
        "BII" => Some(2 * n - 1),
        "DII" => Some(2 * n - 2),
        _ => None,
    };
    let type_a = r.restricted.is_type_a();
    Ok(SymmetricSpaceEntry {
        label,
        params,
        kind: r.kind,
        g_desc: r.g,
        h_desc: r.h,
        kac: KacSpec {
            base: r.kac.0,
            twist: r.kac.1,
            white: r.kac.2,
        },
        restricted_type: r.restricted,
        boundary_degree: if type_a { 2 } else { 1 },
        source_gap: label == "EIV",
        tabulated_vmrt: r.tabulated_vmrt,
        quadric_index_flag: matches!(label, "BI" | "DI-odd" | "DI-even"),
        projective_dim,
    })
}

/// All rows instantiated at every admissible parameter with at most
/// `max_rank + 1` affine nodes.
pub fn enumerate(max_rank: usize) -> Vec<SymmetricSpaceEntry> {
    let max_nodes = max_rank + 1;
    let bound = 2 * max_nodes + 2;
    let mut out = Vec::new();
    for label in LABELS {
        let ps = params_of(label);
        let grid: Vec<(usize, usize)> = match ps.len() {
            0 => vec![(0, 0)],
            1 => (1..=bound).map(|n| (n, 0)).collect(),
            _ => (1..=bound).flat_map(|n| (1..=n).map(move |m| (n, m))).collect(),
        };
        for (n, m) in grid {
            if let Ok(e) = build(label, n, m) {
                if e.node_count() <= max_nodes {
                    out.push(e);
                }
            }
        }
    }
    out
}

pub fn kac_diagram(e: &SymmetricSpaceEntry) -> MarkedKacDiagram {
    let d = affine_diagram(e.kac.base, e.kac.twist).expect("atlas rows use admissible diagrams");
    MarkedKacDiagram::new(d, e.kac.white.iter().copied()).expect("atlas whites lie in the diagram")
}

/// `dim g - dim h`, with `h` read off the black nodes of the Kac diagram.
pub fn isotropy_dimension(e: &SymmetricSpaceEntry) -> usize {
    let k = kac_diagram(e);
    let black = crate::root_core::DynkinDiagram::new(k.diagram().graph().without(k.white())).expect("finite");
    let dim_h: usize = black
        .components()
        .iter()
        .map(|c| c.cartan_type.known_dimension())
        .sum::<usize>()
        + k.white().len()
        - 1;
    let dim_g = match e.kind {
        SpaceKind::Group => 2 * e.kac.base.known_dimension(),
        _ => e.kac.base.known_dimension(),
    };
    dim_g - dim_h
}
