//! Marked Dynkin diagrams of `Z` and of the VMRT, folding, and naming.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::affine::{marking_violation, MarkedKacDiagram, SpaceKind};
use crate::atlas::{isotropy_dimension, kac_diagram, SymmetricSpaceEntry};
use crate::error::{Error, Result};
use crate::graph::{isomorphisms, Edge, NodeId};
use crate::render_io::to_canonical_text;
use crate::root_core::{
    cartan_matrix, form, highest_root, parabolic_dimension, positive_roots, root_lengths, CartanType, Component,
    DynkinDiagram, Family,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDynkinDiagram {
    diagram: DynkinDiagram,
    crossed: BTreeSet<NodeId>,
    annotations: BTreeMap<NodeId, u32>,
    sigma: Option<Vec<(NodeId, NodeId)>>,
}

impl MarkedDynkinDiagram {
    pub fn new(
        diagram: DynkinDiagram,
        crossed: BTreeSet<NodeId>,
        annotations: BTreeMap<NodeId, u32>,
        sigma: Option<Vec<(NodeId, NodeId)>>,
    ) -> Result<MarkedDynkinDiagram> {
        if let Some(&v) = crossed.iter().find(|v| !diagram.graph().contains(**v)) {
            return Err(Error::NodeNotInDiagram(v));
        }
        if let Some((&v, _)) = annotations.iter().find(|(v, &a)| !crossed.contains(v) || a < 2) {
            return Err(Error::Malformed(format!(
                "annotation on node {v} must sit on a crossed node and be at least 2"
            )));
        }
        let d = MarkedDynkinDiagram {
            diagram,
            crossed,
            annotations,
            sigma,
        };
        if let Some(pairs) = &d.sigma {
            d.check_sigma(pairs)?;
        }
        Ok(d)
    }

    pub fn plain(diagram: DynkinDiagram, crossed: impl IntoIterator<Item = NodeId>) -> Result<MarkedDynkinDiagram> {
        MarkedDynkinDiagram::new(diagram, crossed.into_iter().collect(), BTreeMap::new(), None)
    }

    /// The standard diagram of `t` with Bourbaki nodes crossed, annotated
    /// where a degree is given.
    pub fn standard(t: CartanType, crossed: &[(usize, Option<u32>)]) -> MarkedDynkinDiagram {
        MarkedDynkinDiagram::new(
            DynkinDiagram::standard(t),
            crossed.iter().map(|c| c.0).collect(),
            crossed.iter().filter_map(|&(v, a)| a.map(|a| (v, a))).collect(),
            None,
        )
        .expect("nodes of the standard diagram")
    }

    fn check_sigma(&self, pairs: &[(NodeId, NodeId)]) -> Result<()> {
        let bad = |why: &str| Err(Error::Malformed(format!("sigma pairing {why}")));
        let first: BTreeSet<NodeId> = pairs.iter().map(|p| p.0).collect();
        let second: BTreeSet<NodeId> = pairs.iter().map(|p| p.1).collect();
        let all: BTreeSet<NodeId> = self.nodes().iter().copied().collect();
        if first.len() != pairs.len() || second.len() != pairs.len() || !first.is_disjoint(&second) {
            return bad("is not a bijection between disjoint halves");
        }
        if first.union(&second).copied().collect::<BTreeSet<_>>() != all {
            return bad("does not cover the diagram");
        }
        let g = self.diagram.graph();
        if g.edges().iter().any(|e| first.contains(&e.a) != first.contains(&e.b)) {
            return bad("halves are joined by an edge");
        }
        for &(a, b) in pairs {
            if self.crossed.contains(&a) != self.crossed.contains(&b)
                || self.annotations.get(&a) != self.annotations.get(&b)
            {
                return bad("does not preserve the marking");
            }
            for &(c, d) in pairs {
                if g.cartan(a, c) != g.cartan(b, d) {
                    return bad("is not a diagram isomorphism");
                }
            }
        }
        Ok(())
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn nodes(&self) -> &[NodeId] {
        self.diagram.nodes()
    }

    pub fn crossed(&self) -> &BTreeSet<NodeId> {
        &self.crossed
    }

    pub fn annotations(&self) -> &BTreeMap<NodeId, u32> {
        &self.annotations
    }

    pub fn annotation(&self, v: NodeId) -> Option<u32> {
        self.annotations.get(&v).copied()
    }

    pub fn sigma_pairs(&self) -> Option<&[(NodeId, NodeId)]> {
        self.sigma.as_deref()
    }

    /// Nodes counted for dimension: the first half when sigma-paired.
    pub fn counted_nodes(&self) -> BTreeSet<NodeId> {
        match &self.sigma {
            Some(p) => p.iter().map(|p| p.0).collect(),
            None => self.nodes().iter().copied().collect(),
        }
    }

    /// Restriction to a node subset, dropping any sigma pairing.
    pub fn restrict(&self, keep: &BTreeSet<NodeId>) -> MarkedDynkinDiagram {
        MarkedDynkinDiagram {
            diagram: self.diagram.induced(keep),
            crossed: self.crossed.intersection(keep).copied().collect(),
            annotations: self
                .annotations
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, &a)| (v, a))
                .collect(),
            sigma: None,
        }
    }

    /// The two halves of a sigma-paired diagram.
    pub fn halves(&self) -> Option<(MarkedDynkinDiagram, MarkedDynkinDiagram)> {
        let p = self.sigma.as_ref()?;
        Some((
            self.restrict(&p.iter().map(|p| p.0).collect()),
            self.restrict(&p.iter().map(|p| p.1).collect()),
        ))
    }
}

impl fmt::Display for MarkedDynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_canonical_text(self))
    }
}

/// Steps (a)-(d): cross the neighbours of each chosen white node, remove the
/// white nodes, record bond degrees from long white nodes.
pub fn z_orbit_diagram(m: &MarkedKacDiagram, kind: SpaceKind) -> Result<Vec<MarkedDynkinDiagram>> {
    if let Some(rule) = marking_violation(m, kind) {
        return Err(Error::InvalidMarking(rule));
    }
    let g = m.diagram().graph();
    let black = DynkinDiagram::new(g.without(m.white()))?;
    let from = |w: NodeId| {
        let crossed: BTreeSet<NodeId> = g.neighbors(w).into_iter().filter(|v| !m.is_white(*v)).collect();
        let annotations = crossed
            .iter()
            .filter_map(|&c| {
                let n = g.cartan(w, c).unsigned_abs();
                (n >= 2).then_some((c, n))
            })
            .collect();
        MarkedDynkinDiagram::new(black.clone(), crossed, annotations, None)
    };
    let whites: Vec<NodeId> = m.white().iter().copied().collect();
    match kind {
        SpaceKind::Group | SpaceKind::Simple => Ok(vec![from(whites[0])?]),
        SpaceKind::HermitianExceptional => whites.iter().map(|&w| from(w)).collect(),
        SpaceKind::HermitianNonexceptional => {
            let (w1, w2) = (whites[0], whites[1]);
            let swap = |a: NodeId, b: NodeId| (a != w1 || b == w2) && (a != w2 || b == w1);
            let tau = isomorphisms(g, g, &swap, 1)
                .pop()
                .ok_or_else(|| Error::InvalidMarking("no diagram automorphism exchanges the two white nodes".into()))?;
            let tau: BTreeMap<NodeId, NodeId> = g.nodes().iter().copied().zip(tau).collect();
            let (z1, z2) = (from(w1)?, from(w2)?);
            let off = g.nodes().iter().max().map_or(0, |v| v + 1);
            let mut nodes: Vec<NodeId> = black.nodes().to_vec();
            nodes.extend(black.nodes().iter().map(|v| v + off));
            let mut edges: Vec<Edge> = black.edges().to_vec();
            edges.extend(
                black
                    .edges()
                    .iter()
                    .map(|e| Edge::new(e.a + off, e.b + off, e.mult, e.short_end.map(|s| s + off))),
            );
            let mut crossed = z1.crossed.clone();
            crossed.extend(z2.crossed.iter().map(|v| v + off));
            let mut annotations = z1.annotations.clone();
            annotations.extend(z2.annotations.iter().map(|(v, a)| (v + off, *a)));
            let pairs = black.nodes().iter().map(|&v| (v, tau[&v] + off)).collect();
            Ok(vec![MarkedDynkinDiagram::new(
                DynkinDiagram::from_parts(nodes, edges)?,
                crossed,
                annotations,
                Some(pairs),
            )?])
        }
    }
}

/// Dimension of the homogeneous space; one half only when sigma-paired.
pub fn z_dimension(z: &MarkedDynkinDiagram) -> usize {
    let keep = z.counted_nodes();
    let part = z.restrict(&keep);
    parabolic_dimension(part.diagram(), part.crossed()).expect("crossed nodes lie in the diagram")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VmrtKind {
    LegendrianZ,
    #[serde(rename = "typeA-GPlambda")]
    TypeAGPlambda,
    FullProjectiveSpace,
}

impl VmrtKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VmrtKind::LegendrianZ => "legendrian-Z",
            VmrtKind::TypeAGPlambda => "typeA-GPlambda",
            VmrtKind::FullProjectiveSpace => "full-projective-space",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VMRTDescription {
    pub kind: VmrtKind,
    pub components: Vec<MarkedDynkinDiagram>,
    pub dimension: usize,
    pub identification: String,
    /// The tabulated name when its indexing differs from the derived one.
    pub alias: Option<String>,
    pub ambient_note: Option<String>,
}

/// The `(G, P_lambda)` diagram of a restricted-type-`A_r` row with `r >= 2`.
pub fn type_a_diagram(e: &SymmetricSpaceEntry) -> Result<(MarkedDynkinDiagram, String)> {
    let r = e.restricted_type.rank();
    let ty = |f, n| CartanType::new(f, n).expect("rank fixed by the row");
    match e.label {
        "group-A" => {
            let t = ty(Family::A, r);
            let edges = t
                .bourbaki_edges()
                .into_iter()
                .flat_map(|e| [e, Edge::simple(e.a + r, e.b + r)]);
            let d = DynkinDiagram::from_parts(1..=2 * r, edges)?;
            let note = format!("G = PGL_{0} × PGL_{0}, λ = (ϖ_1,0) + (0,ϖ_{1})", r + 1, r);
            Ok((MarkedDynkinDiagram::plain(d, [1, 2 * r])?, note))
        }
        "AI" => Ok((
            MarkedDynkinDiagram::standard(ty(Family::A, r), &[(1, Some(2))]),
            format!("G = SL_{}, λ = 2ϖ_1", r + 1),
        )),
        "AII" => Ok((
            MarkedDynkinDiagram::standard(ty(Family::A, 2 * r + 1), &[(2, None)]),
            format!("G = SL_{}, λ = ϖ_2", 2 * r + 2),
        )),
        "EIV" => Ok((
            MarkedDynkinDiagram::standard(ty(Family::E, 6), &[(1, None)]),
            "G = E_6, λ = ϖ_1".into(),
        )),
        _ => Err(Error::Precondition(format!(
            "{}: restricted root system is not A_r with r ≥ 2",
            e.name()
        ))),
    }
}

pub fn vmrt(e: &SymmetricSpaceEntry) -> Result<VMRTDescription> {
    let kac = kac_diagram(e);
    let z = z_orbit_diagram(&kac, e.kind)?;
    let z_dim = z_dimension(&z[0]);
    let rank = e.restricted_type.rank();
    let (kind, components, dimension, note) = if !e.restricted_type.is_type_a() {
        (VmrtKind::LegendrianZ, z, z_dim + e.boundary_degree as usize - 1, None)
    } else if rank >= 2 {
        let (d, note) = type_a_diagram(e)?;
        (
            VmrtKind::TypeAGPlambda,
            vec![d],
            z_dim + e.boundary_degree as usize - 1,
            Some(note),
        )
    } else {
        let p = isotropy_dimension(e) - 1;
        let t = CartanType::new(Family::A, p)
            .map_err(|_| Error::Precondition(format!("{}: isotropy space too small", e.name())))?;
        let d = MarkedDynkinDiagram::standard(t, &[(1, None)]);
        (
            VmrtKind::FullProjectiveSpace,
            vec![d],
            z_dim + e.boundary_degree as usize - 1,
            Some(format!("P(p), dim p = {}", p + 1)),
        )
    };
    let identification = components.iter().map(identify).collect::<Vec<_>>().join(" and ");
    let alias = e.tabulated_vmrt.clone().filter(|_| e.quadric_index_flag);
    Ok(VMRTDescription {
        kind,
        components,
        dimension,
        identification,
        alias,
        ambient_note: note,
    })
}

/// The diagram foldings used for restricted type `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FoldingPair {
    /// Two identical components onto one.
    Swap,
    /// `(A_{2l}, B_l)`, including `(A_2, A_1)`.
    A2lBl,
    /// `(A_{2l-1}, C_l)`.
    A2l1Cl,
    /// `(D_{l+1}, B_l)`.
    Dl1Bl,
    A2A1,
    E6F4,
}

impl FoldingPair {
    pub const ALL: [FoldingPair; 6] = [
        FoldingPair::Swap,
        FoldingPair::A2lBl,
        FoldingPair::A2l1Cl,
        FoldingPair::Dl1Bl,
        FoldingPair::A2A1,
        FoldingPair::E6F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FoldingPair::Swap => "swap",
            FoldingPair::A2lBl => "A2l-Bl",
            FoldingPair::A2l1Cl => "A2l-1-Cl",
            FoldingPair::Dl1Bl => "Dl+1-Bl",
            FoldingPair::A2A1 => "A2-A1",
            FoldingPair::E6F4 => "E6-F4",
        }
    }

    pub fn from_name(s: &str) -> Option<FoldingPair> {
        FoldingPair::ALL
            .iter()
            .copied()
            .find(|p| p.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for FoldingPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Folds node orbits of the pair's automorphism. An orbit is crossed when a
/// member is; degrees add up, doubled on an orbit of two joined nodes.
pub fn fold(v: &MarkedDynkinDiagram, pair: FoldingPair) -> Result<MarkedDynkinDiagram> {
    let reject = |reason: String| Error::FoldNotAdmissible {
        pair: pair.name().into(),
        reason,
    };
    if v.sigma_pairs().is_some() {
        return Err(reject("sigma-paired diagrams do not fold".into()));
    }
    let comps = v.diagram().components();
    let single = |f: Family| -> Result<&Component> {
        match comps {
            [c] if c.cartan_type.family() == f => Ok(c),
            _ => Err(reject(format!("expected one component of type {}", f.letter()))),
        }
    };
    let ty = |f, n| CartanType::new(f, n).map_err(|_| reject("rank too small".into()));
    // orbits[k] lists the Bourbaki nodes folding onto node k + 1 of the target,
    // with the degree multiplier of that orbit.
    let (target, orbits): (CartanType, Vec<(Vec<NodeId>, u32)>) = match pair {
        FoldingPair::Swap => {
            let [c1, c2] = comps else {
                return Err(reject("expected two components".into()));
            };
            if c1.cartan_type != c2.cartan_type {
                return Err(reject("components differ".into()));
            }
            let orbits = (0..c1.nodes.len())
                .map(|k| (vec![c1.nodes[k], c2.nodes[k]], 1))
                .collect();
            (c1.cartan_type, orbits)
        }
        FoldingPair::A2lBl | FoldingPair::A2A1 => {
            let c = single(Family::A)?;
            let n = c.cartan_type.rank();
            if n % 2 == 1 || (pair == FoldingPair::A2A1 && n != 2) {
                return Err(reject(format!("A_{n} has no such folding")));
            }
            let l = n / 2;
            let target = if l == 1 { ty(Family::A, 1)? } else { ty(Family::B, l)? };
            let orbits = (1..=l)
                .map(|k| (vec![c.nodes[k - 1], c.nodes[n - k]], if k == l { 2 } else { 1 }))
                .collect();
            (target, orbits)
        }
        FoldingPair::A2l1Cl => {
            let c = single(Family::A)?;
            let n = c.cartan_type.rank();
            if n % 2 == 0 || n < 3 {
                return Err(reject(format!("A_{n} has no such folding")));
            }
            let l = n.div_ceil(2);
            let orbits = (1..=l)
                .map(|k| {
                    (
                        if k == l {
                            vec![c.nodes[k - 1]]
                        } else {
                            vec![c.nodes[k - 1], c.nodes[n - k]]
                        },
                        1,
                    )
                })
                .collect();
            (ty(Family::C, l)?, orbits)
        }
        FoldingPair::Dl1Bl => {
            let c = single(Family::D)?;
            let l = c.cartan_type.rank() - 1;
            let orbits = (1..=l)
                .map(|k| {
                    (
                        if k == l {
                            vec![c.nodes[l - 1], c.nodes[l]]
                        } else {
                            vec![c.nodes[k - 1]]
                        },
                        1,
                    )
                })
                .collect();
            (ty(Family::B, l)?, orbits)
        }
        FoldingPair::E6F4 => {
            let c = single(Family::E)?;
            if c.cartan_type.rank() != 6 {
                return Err(reject("expected E_6".into()));
            }
            let at = |k: usize| c.nodes[k - 1];
            let orbits = vec![
                (vec![at(2)], 1),
                (vec![at(4)], 1),
                (vec![at(3), at(5)], 1),
                (vec![at(1), at(6)], 1),
            ];
            (ty(Family::F, 4)?, orbits)
        }
    };
    let mut marks = Vec::new();
    for (k, (members, mult)) in orbits.iter().enumerate() {
        let hit: Vec<NodeId> = members.iter().copied().filter(|m| v.crossed().contains(m)).collect();
        if hit.is_empty() {
            continue;
        }
        let degree: u32 = hit.iter().map(|&m| v.annotation(m).unwrap_or(1) * mult).sum();
        marks.push((k + 1, (degree >= 2).then_some(degree)));
    }
    Ok(MarkedDynkinDiagram::standard(target, &marks))
}

/// The folding relating the `(G, P_lambda)` diagram to `Z`.
pub fn folding_pair(e: &SymmetricSpaceEntry) -> Result<FoldingPair> {
    match (e.label, e.param("n")) {
        ("group-A", _) => Ok(FoldingPair::Swap),
        ("AI", Some(3)) => Ok(FoldingPair::A2A1),
        ("AI", Some(n)) if n % 2 == 1 => Ok(FoldingPair::A2lBl),
        ("AII", _) => Ok(FoldingPair::A2l1Cl),
        ("EIV", _) => Ok(FoldingPair::E6F4),
        _ => Err(Error::FoldNotAdmissible {
            pair: "-".into(),
            reason: format!("{} has no folding onto its isotropy diagram", e.name()),
        }),
    }
}

pub fn fold_consistency(e: &SymmetricSpaceEntry) -> Result<bool> {
    if !e.restricted_type.is_type_a() || e.restricted_type.rank() < 2 {
        return Err(Error::Precondition(format!(
            "{}: restricted root system is not A_r with r ≥ 2",
            e.name()
        )));
    }
    let (gp, _) = type_a_diagram(e)?;
    let folded = fold(&gp, folding_pair(e)?)?;
    let z = z_orbit_diagram(&kac_diagram(e), e.kind)?;
    Ok(to_canonical_text(&folded) == to_canonical_text(&z[0]))
}

/// Grades each component by pairing with the coroot of its highest root `θ`;
/// the contact gradation has depth 2, a one-dimensional top piece, and is
/// supported exactly on the crossed nodes.
pub fn contact_grading_check(e: &SymmetricSpaceEntry) -> Result<bool> {
    if e.kind != SpaceKind::Group {
        return Err(Error::Precondition(format!("{}: not of group type", e.name())));
    }
    let z = z_orbit_diagram(&kac_diagram(e), e.kind)?;
    let z = &z[0];
    let mut grading: BTreeMap<i32, usize> = BTreeMap::new();
    for c in z.diagram().components() {
        let a = cartan_matrix(c.cartan_type);
        let len = root_lengths(&a);
        let theta = highest_root(c.cartan_type).coeffs;
        let tt = form(&a, &len, &theta, &theta);
        let weight: Vec<i32> = (0..a.len())
            .map(|i| {
                let mut e = vec![0; a.len()];
                e[i] = 1;
                2 * form(&a, &len, &e, &theta) / tt
            })
            .collect();
        let support: BTreeSet<NodeId> = c
            .nodes
            .iter()
            .zip(&weight)
            .filter(|(_, w)| **w != 0)
            .map(|(v, _)| *v)
            .collect();
        if support != c.nodes.iter().copied().filter(|v| z.crossed().contains(v)).collect() {
            return Ok(false);
        }
        for r in positive_roots(c.cartan_type) {
            let deg: i32 = r.coeffs.iter().zip(&weight).map(|(a, w)| a * w).sum();
            *grading.entry(deg).or_default() += 1;
        }
    }
    Ok(grading.keys().max() == Some(&2) && grading.get(&2) == Some(&1))
}

/// Name of a single connected marked component.
fn component_name(t: CartanType, marks: &[(usize, Option<u32>)]) -> String {
    let n = t.rank();
    let generic = || {
        let m: Vec<String> = marks
            .iter()
            .map(|(k, a)| match a {
                Some(a) => format!("{k}[{a}]"),
                None => k.to_string(),
            })
            .collect();
        format!("X({t};{})", m.join(","))
    };
    match marks {
        [] => "pt".into(),
        [(k, deg)] => {
            let k = *k;
            let base = match t.family() {
                Family::A if k == 1 => format!("P^{n}"),
                Family::A if k == n => format!("(P^{n})^∨"),
                Family::A => format!("Gr({k},{})", n + 1),
                Family::B if n == 2 && k == 2 => "P^3".into(),
                Family::B if k == 1 => format!("Q_{}", 2 * n - 1),
                Family::B => format!("OG({k},{})", 2 * n + 1),
                Family::C if k == 1 => format!("P^{}", 2 * n - 1),
                Family::C if k == n => format!("LG({n},{})", 2 * n),
                Family::C => format!("IG({k},{})", 2 * n),
                Family::D if k == 1 || (n == 4 && k != 2) => format!("Q_{}", 2 * n - 2),
                Family::D if k + 2 <= n => format!("OG({k},{})", 2 * n),
                Family::D => format!("OG({n},{})", 2 * n),
                _ => format!("{}_{}/P_{k}", t.family().letter(), n),
            };
            match deg {
                None => base,
                Some(d) => match base.strip_prefix('(').and_then(|b| b.strip_suffix(")^∨")) {
                    Some(inner) => format!("ν_{d}({inner})^∨"),
                    None => format!("ν_{d}({base})"),
                },
            }
        }
        [(i, None), (j, None)] if t.family() == Family::A => format!("Flag({i},{j};{})", n + 1),
        _ => generic(),
    }
}

fn product_name(v: &MarkedDynkinDiagram) -> String {
    let names: Vec<String> = v
        .diagram()
        .components()
        .iter()
        .filter_map(|c| {
            let marks: Vec<(usize, Option<u32>)> = c
                .nodes
                .iter()
                .enumerate()
                .filter(|(_, n)| v.crossed().contains(n))
                .map(|(k, &n)| (k + 1, v.annotation(n)))
                .collect();
            (!marks.is_empty()).then(|| component_name(c.cartan_type, &marks))
        })
        .collect();
    if names.is_empty() {
        "pt".into()
    } else {
        names.join(" × ")
    }
}

/// Human-readable name of the homogeneous space a marked diagram represents.
pub fn identify(v: &MarkedDynkinDiagram) -> String {
    match v.halves() {
        Some((a, b)) => format!("{} ⊔ {}", product_name(&a), product_name(&b)),
        None => product_name(v),
    }
}

/// Splits a name into its alternatives and factors, each sorted, so that
/// names differing only in factor order compare equal.
pub fn normalize_name(s: &str) -> Vec<Vec<String>> {
    let mut parts: Vec<Vec<String>> = s
        .split(" and ")
        .flat_map(|p| p.split(" ⊔ "))
        .map(|p| {
            let mut f: Vec<String> = p.split(" × ").map(|x| x.trim().to_string()).collect();
            f.sort();
            f
        })
        .collect();
    parts.sort();
    parts
}
