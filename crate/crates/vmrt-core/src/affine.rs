//! Affine Dynkin diagrams with Kac labels, node 0 being the affine node.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, NodeId};
use crate::root_core::{cartan_matrix, form, highest_root, recognize, root_lengths, CartanType, Family};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineDiagram {
    base: CartanType,
    twist: u8,
    graph: Graph,
    labels: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    Group,
    Simple,
    HermitianExceptional,
    HermitianNonexceptional,
}

impl SpaceKind {
    pub fn is_hermitian(self) -> bool {
        matches!(
            self,
            SpaceKind::HermitianExceptional | SpaceKind::HermitianNonexceptional
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SpaceKind::Group => "group",
            SpaceKind::Simple => "simple",
            SpaceKind::HermitianExceptional => "hermitian-exceptional",
            SpaceKind::HermitianNonexceptional => "hermitian-nonexceptional",
        }
    }
}

pub fn is_admissible(base: CartanType, twist: u8) -> bool {
    match twist {
        1 => true,
        2 => matches!(
            (base.family(), base.rank()),
            (Family::A, 2..) | (Family::D, 3..) | (Family::E, 6)
        ),
        3 => base.family() == Family::D && base.rank() == 4,
        _ => false,
    }
}

/// Frozen twisted shapes: bonds as `(i, j, mult, short end)` and labels.
fn twisted_table(base: CartanType, twist: u8) -> (Vec<Edge>, Vec<u32>) {
    let n = base.rank();
    let double = |i, j, s| Edge::new(i, j, 2, Some(s));
    let chain = |from: usize, to: usize| (from..to).map(|i| Edge::simple(i, i + 1)).collect::<Vec<_>>();
    match (base.family(), twist) {
        (Family::A, 2) if n == 2 => (vec![Edge::new(0, 1, 4, Some(0))], vec![2, 1]),
        (Family::A, 2) if n.is_multiple_of(2) => {
            let l = n / 2;
            let mut e = vec![double(0, 1, 0)];
            e.extend(chain(1, l - 1));
            e.push(double(l - 1, l, l - 1));
            let mut labels = vec![2; l + 1];
            labels[l] = 1;
            (e, labels)
        }
        (Family::A, 2) if n == 3 => (vec![double(0, 1, 0), double(1, 2, 2)], vec![1, 1, 1]),
        (Family::A, 2) => {
            let l = n.div_ceil(2);
            let mut e = vec![Edge::simple(0, 2), Edge::simple(1, 2)];
            e.extend(chain(2, l - 1));
            e.push(double(l - 1, l, l - 1));
            let mut labels = vec![2; l + 1];
            labels[0] = 1;
            labels[1] = 1;
            labels[l] = 1;
            (e, labels)
        }
        (Family::D, 2) => {
            let l = n - 1;
            let mut e = vec![double(0, 1, 0)];
            e.extend(chain(1, l - 1));
            e.push(double(l - 1, l, l));
            (e, vec![1; l + 1])
        }
        (Family::E, 2) => (
            vec![
                Edge::simple(0, 1),
                Edge::simple(1, 2),
                double(2, 3, 2),
                Edge::simple(3, 4),
            ],
            vec![1, 2, 3, 2, 1],
        ),
        (Family::D, 3) => (vec![Edge::simple(0, 1), Edge::new(1, 2, 3, Some(1))], vec![1, 2, 1]),
        _ => unreachable!("checked by is_admissible"),
    }
}

/// The affine diagram `base^(twist)`, built and checked once per pair.
pub fn affine_diagram(base: CartanType, twist: u8) -> Result<AffineDiagram> {
    static CACHE: OnceLock<Mutex<HashMap<(CartanType, u8), AffineDiagram>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&(base, twist)) {
        return Ok(hit.clone());
    }
    let d = build_affine(base, twist)?;
    cache.lock().expect("cache lock").insert((base, twist), d.clone());
    Ok(d)
}

fn build_affine(base: CartanType, twist: u8) -> Result<AffineDiagram> {
    if !is_admissible(base, twist) {
        return Err(Error::NoSuchTwistedType {
            base: base.to_string(),
            twist,
        });
    }
    let (graph, labels) = if twist == 1 {
        let a = cartan_matrix(base);
        let lengths = root_lengths(&a);
        let theta = highest_root(base).coeffs;
        let r = base.rank();
        let mut edges = base.bourbaki_edges();
        for j in 0..r {
            let simple: Vec<i32> = (0..r).map(|i| (i == j) as i32).collect();
            let a0j = -(0..r).map(|i| theta[i] * a[i][j]).sum::<i32>();
            let aj0 = -2 * form(&a, &lengths, &simple, &theta) / form(&a, &lengths, &theta, &theta);
            if a0j != 0 {
                edges.push(Edge::from_cartan(0, j + 1, a0j, aj0));
            }
        }
        let mut labels = vec![1u32];
        labels.extend(theta.iter().map(|&c| c as u32));
        (Graph::new(0..=r, edges)?, labels)
    } else {
        let (edges, labels) = twisted_table(base, twist);
        (Graph::new(0..labels.len(), edges)?, labels)
    };
    let d = AffineDiagram {
        base,
        twist,
        graph,
        labels,
    };
    d.self_check()?;
    Ok(d)
}

impl AffineDiagram {
    pub fn base(&self) -> CartanType {
        self.base
    }

    pub fn twist(&self) -> u8 {
        self.twist
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn nodes(&self) -> &[NodeId] {
        self.graph.nodes()
    }

    pub fn edges(&self) -> &[Edge] {
        self.graph.edges()
    }

    pub fn node_count(&self) -> usize {
        self.graph.len()
    }

    pub fn label(&self, v: NodeId) -> u32 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.node_count();
        (0..n)
            .map(|i| (0..n).map(|j| self.graph.cartan(i, j)).collect())
            .collect()
    }

    fn self_check(&self) -> Result<()> {
        let computed = null_vector(&self.cartan_matrix());
        if computed.as_deref() != Some(&self.labels[..]) {
            return Err(Error::Malformed(format!(
                "{self}: labels {:?} are not the null vector {computed:?}",
                self.labels
            )));
        }
        for &v in self.nodes() {
            let rest = self.graph.without(&BTreeSet::from([v]));
            for c in rest.components() {
                if recognize(&rest.induced(&c.iter().copied().collect())).is_none() {
                    return Err(Error::Malformed(format!(
                        "{self}: deleting node {v} leaves a non-finite component"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for AffineDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^({})", self.base, self.twist)
    }
}

/// Primitive positive `x` with `sum_i x_i a_ij = 0` for all `j`, if the
/// corank is one.
pub fn null_vector(a: &[Vec<i32>]) -> Option<Vec<u32>> {
    let n = a.len();
    // Solve the transposed system by exact fraction-free elimination.
    let mut m: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| a[i][j] as i64).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, p);
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let (f, g) = (m[row][col], m[r][col]);
                for c in 0..n {
                    m[r][c] = m[r][c] * f - m[row][c] * g;
                }
                let d = m[r].iter().fold(0, |acc, &x| gcd(acc, x.abs()));
                if d > 1 {
                    m[r].iter_mut().for_each(|x| *x /= d);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != n {
        return None;
    }
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let denom = pivots
        .iter()
        .enumerate()
        .fold(1i64, |acc, (r, _)| lcm(acc, m[r][pivots[r]].abs()));
    let mut x = vec![0i64; n];
    x[free] = denom;
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = -m[r][free] * denom / m[r][c];
    }
    let g = x.iter().fold(0, |acc, &v| gcd(acc, v.abs()));
    let sign = if x[free] < 0 { -1 } else { 1 };
    let x: Vec<i64> = x.iter().map(|v| sign * v / g).collect();
    if x.iter().all(|&v| v > 0) {
        Some(x.into_iter().map(|v| v as u32).collect())
    } else {
        None
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

pub fn affine_node_count(base: CartanType, twist: u8) -> usize {
    let n = base.rank();
    match (base.family(), twist) {
        (_, 1) => n + 1,
        (Family::A, _) => n / 2 + 1 + (n % 2),
        (Family::D, 2) => n,
        (Family::E, _) => 5,
        _ => 3,
    }
}

/// Every admissible `(base, twist)` with at most `max_nodes` nodes.
pub fn all_affine(max_nodes: usize) -> Vec<AffineDiagram> {
    affine_where(max_nodes, |n| n <= max_nodes)
}

/// Every admissible `(base, twist)` with exactly `nodes` nodes.
pub fn affine_with_nodes(nodes: usize) -> Vec<AffineDiagram> {
    affine_where(nodes, |n| n == nodes)
}

fn affine_where(max_nodes: usize, keep: impl Fn(usize) -> bool) -> Vec<AffineDiagram> {
    let mut out = Vec::new();
    for rank in 1..=2 * max_nodes {
        for base in CartanType::all_of_rank(rank) {
            for twist in 1..=3 {
                if is_admissible(base, twist) && keep(affine_node_count(base, twist)) {
                    out.push(affine_diagram(base, twist).expect("admissible"));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedKacDiagram {
    diagram: AffineDiagram,
    white: BTreeSet<NodeId>,
}

impl MarkedKacDiagram {
    pub fn new(diagram: AffineDiagram, white: impl IntoIterator<Item = NodeId>) -> Result<MarkedKacDiagram> {
        let white: BTreeSet<NodeId> = white.into_iter().collect();
        if let Some(&v) = white.iter().find(|&&v| !diagram.graph.contains(v)) {
            return Err(Error::NodeNotInDiagram(v));
        }
        if white.is_empty() {
            return Err(Error::InvalidMarking("at least one node must be white".into()));
        }
        Ok(MarkedKacDiagram { diagram, white })
    }

    pub fn diagram(&self) -> &AffineDiagram {
        &self.diagram
    }

    pub fn white(&self) -> &BTreeSet<NodeId> {
        &self.white
    }

    pub fn is_white(&self, v: NodeId) -> bool {
        self.white.contains(&v)
    }
}

/// The violated construction rule, if any.
pub fn marking_violation(m: &MarkedKacDiagram, kind: SpaceKind) -> Option<String> {
    let twist = m.diagram.twist();
    let labels: Vec<u32> = m.white.iter().map(|&v| m.diagram.label(v)).collect();
    match kind {
        SpaceKind::Group => {
            if twist != 1 {
                Some("group type needs an untwisted diagram".into())
            } else if labels != [1] {
                Some("group type needs exactly one white node, numbered by 1".into())
            } else {
                None
            }
        }
        SpaceKind::Simple => match (twist, labels.as_slice()) {
            (1, [2]) | (2, [1]) => None,
            _ => Some("simple type needs one white node numbered by 2 (untwisted) or by 1 (twisted of order 2)".into()),
        },
        SpaceKind::HermitianExceptional | SpaceKind::HermitianNonexceptional => {
            if twist != 1 {
                Some("Hermitian type needs an untwisted diagram".into())
            } else if labels != [1, 1] {
                Some("Hermitian type needs exactly two white nodes, both numbered by 1".into())
            } else {
                None
            }
        }
    }
}

pub fn validate_kac_marking(m: &MarkedKacDiagram, kind: SpaceKind) -> bool {
    marking_violation(m, kind).is_none()
}
