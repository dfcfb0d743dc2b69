//! Finite root systems in Bourbaki numbering.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::isomorphisms;
pub use crate::graph::{Edge, Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<CartanType> {
        let reason = match family {
            Family::A if rank < 1 => Some("rank must be at least 1"),
            Family::B | Family::C if rank < 2 => Some("rank must be at least 2"),
            Family::D if rank < 3 => Some("rank must be at least 3"),
            Family::E if !(6..=8).contains(&rank) => Some("rank must be 6, 7 or 8"),
            Family::F if rank != 4 => Some("rank must be 4"),
            Family::G if rank != 2 => Some("rank must be 2"),
            _ => None,
        };
        match reason {
            Some(reason) => Err(Error::InvalidCartanType {
                family: family.letter(),
                rank,
                reason,
            }),
            None => Ok(CartanType { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Bourbaki bonds on nodes `1..=rank`.
    pub fn bourbaki_edges(self) -> Vec<Edge> {
        let n = self.rank;
        let chain = |k: usize| (1..k).map(|i| Edge::simple(i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => chain(n),
            Family::B => {
                let mut e = chain(n - 1);
                e.push(Edge::new(n - 1, n, 2, Some(n)));
                e
            }
            Family::C => {
                let mut e = chain(n - 1);
                e.push(Edge::new(n - 1, n, 2, Some(n - 1)));
                e
            }
            Family::D => {
                let mut e = chain(n - 1);
                e.push(Edge::simple(n - 2, n));
                e
            }
            Family::E => {
                let mut e = vec![Edge::simple(1, 3), Edge::simple(2, 4)];
                e.extend((3..n).map(|i| Edge::simple(i, i + 1)));
                e
            }
            Family::F => vec![Edge::simple(1, 2), Edge::new(2, 3, 2, Some(3)), Edge::simple(3, 4)],
            Family::G => vec![Edge::new(1, 2, 3, Some(1))],
        }
    }

    /// Dimension of the simple Lie algebra by closed form.
    pub fn known_dimension(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * n + 2 * n,
            (Family::B, _) | (Family::C, _) => 2 * n * n + n,
            (Family::D, _) => 2 * n * n - n,
            (Family::E, 6) => 78,
            (Family::E, 7) => 133,
            (Family::E, _) => 248,
            (Family::F, _) => 52,
            (Family::G, _) => 14,
        }
    }

    /// Every valid type of the given rank, in family order.
    pub fn all_of_rank(rank: usize) -> Vec<CartanType> {
        Family::ALL
            .iter()
            .filter_map(|&f| CartanType::new(f, rank).ok())
            .collect()
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.letter(), self.rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            family: String,
            rank: usize,
        }
        Repr {
            family: self.family.letter().to_string(),
            rank: self.rank,
        }
        .serialize(s)
    }
}

/// Coefficients on the simple roots `alpha_1..alpha_rank` (index `i` holds
/// the coefficient of `alpha_{i+1}`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Root {
    pub coeffs: Vec<i32>,
}

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// `self <= other` in the dominance order.
    pub fn dominated_by(&self, other: &Root) -> bool {
        self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    format!("a{}", i + 1)
                } else {
                    format!("{c}a{}", i + 1)
                }
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

/// Cartan matrix `a_ij = <alpha_i, alpha_j^vee>`, rows and columns in
/// Bourbaki order.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i32>> {
    let g = Graph::new(1..=t.rank(), t.bourbaki_edges()).expect("frozen Bourbaki table");
    (1..=t.rank())
        .map(|i| (1..=t.rank()).map(|j| g.cartan(i, j)).collect())
        .collect()
}

/// Relative squared lengths of the simple roots, shortest equal to 1.
pub fn root_lengths(a: &[Vec<i32>]) -> Vec<i32> {
    let n = a.len();
    let mut len: Vec<Option<i32>> = vec![None; n];
    let mut out = vec![0; n];
    for start in 0..n {
        if len[start].is_some() {
            continue;
        }
        len[start] = Some(6);
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if a[i][j] != 0 && i != j && len[j].is_none() {
                    len[j] = Some(len[i].unwrap() * a[j][i] / a[i][j]);
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        let min = comp.iter().map(|&i| len[i].unwrap()).min().unwrap();
        for &i in &comp {
            out[i] = len[i].unwrap() / min;
        }
    }
    out
}

/// Symmetric form proportional to the Killing form on each component.
pub fn form(a: &[Vec<i32>], lengths: &[i32], x: &[i32], y: &[i32]) -> i32 {
    let n = a.len();
    let mut s = 0;
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            s += x[i] * y[j] * a[i][j] * lengths[j];
        }
    }
    s
}

/// `<beta, alpha_j^vee>` for each simple root `alpha_j`.
fn pairings(a: &[Vec<i32>], beta: &[i32]) -> Vec<i32> {
    let n = a.len();
    (0..n).map(|j| (0..n).map(|i| beta[i] * a[i][j]).sum()).collect()
}

/// Positive roots of the system with Cartan matrix `a`, by root-string
/// closure, sorted by height then coefficients.
pub fn positive_roots_of(a: &[Vec<i32>]) -> Vec<Root> {
    let n = a.len();
    let mut all: BTreeSet<Vec<i32>> = BTreeSet::new();
    let mut layer: Vec<Vec<i32>> = (0..n).map(|i| Root::simple(n, i).coeffs).collect();
    all.extend(layer.iter().cloned());
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for beta in &layer {
            let p = pairings(a, beta);
            for i in 0..n {
                let mut q = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if all.contains(&down) {
                        q += 1;
                    } else {
                        break;
                    }
                }
                // alpha_i-string through beta: p_up - q = -<beta, alpha_i^vee>
                if q - p[i] > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !all.contains(&up) {
                        next.insert(up);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    let mut roots: Vec<Root> = all.into_iter().map(|coeffs| Root { coeffs }).collect();
    roots.sort_by(|x, y| (x.height(), &x.coeffs).cmp(&(y.height(), &y.coeffs)));
    roots
}

/// Positive roots of `t`, computed once per type.
pub fn positive_roots(t: CartanType) -> Vec<Root> {
    static CACHE: OnceLock<Mutex<HashMap<CartanType, Arc<Vec<Root>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&t) {
        return hit.to_vec();
    }
    let roots = Arc::new(positive_roots_of(&cartan_matrix(t)));
    cache.lock().expect("cache lock").entry(t).or_insert(roots).to_vec()
}

/// `2 |R+| + rank`.
pub fn lie_algebra_dimension(t: CartanType) -> usize {
    2 * positive_roots(t).len() + t.rank()
}

fn maximal(roots: Vec<Root>) -> Root {
    let top = roots.iter().max_by_key(|r| r.height()).cloned().expect("nonempty");
    debug_assert!(roots.iter().all(|r| r.dominated_by(&top)));
    top
}

pub fn highest_root(t: CartanType) -> Root {
    maximal(positive_roots(t))
}

pub fn highest_short_root(t: CartanType) -> Root {
    let a = cartan_matrix(t);
    let l = root_lengths(&a);
    let roots = positive_roots_of(&a);
    let norm = |r: &Root| form(&a, &l, &r.coeffs, &r.coeffs);
    let shortest = roots.iter().map(norm).min().unwrap();
    maximal(roots.into_iter().filter(|r| norm(r) == shortest).collect())
}

/// The diagram automorphism `-w_0`: entry `k` is the image of node `k + 1`.
pub fn minus_w0(t: CartanType) -> Vec<usize> {
    let n = t.rank();
    let mut p: Vec<usize> = (1..=n).collect();
    match t.family() {
        Family::A => p.reverse(),
        Family::D if n % 2 == 1 => p.swap(n - 2, n - 1),
        Family::E if n == 6 => p = vec![6, 2, 5, 4, 3, 1],
        _ => {}
    }
    p
}

/// One connected component with its Bourbaki labelling:
/// `nodes[k]` is the node carrying `alpha_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub cartan_type: CartanType,
    pub nodes: Vec<NodeId>,
}

impl Component {
    pub fn bourbaki_index(&self, v: NodeId) -> Option<usize> {
        self.nodes.iter().position(|&u| u == v).map(|k| k + 1)
    }
}

/// A finite Dynkin diagram, possibly disconnected or empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    graph: Graph,
    components: Vec<Component>,
}

impl DynkinDiagram {
    pub fn new(graph: Graph) -> Result<DynkinDiagram> {
        if graph.edges().iter().any(|e| e.mult > 3) {
            return Err(Error::Malformed(
                "finite diagrams have bonds of multiplicity at most 3".into(),
            ));
        }
        let components = graph
            .components()
            .into_iter()
            .map(|c| recognize(&graph.induced(&c.iter().copied().collect())).ok_or(Error::UnrecognizedComponent(c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DynkinDiagram { graph, components })
    }

    pub fn from_parts(
        nodes: impl IntoIterator<Item = NodeId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<DynkinDiagram> {
        DynkinDiagram::new(Graph::new(nodes, edges)?)
    }

    /// The diagram of `t` on nodes `1..=rank`.
    pub fn standard(t: CartanType) -> DynkinDiagram {
        DynkinDiagram::from_parts(1..=t.rank(), t.bourbaki_edges()).expect("frozen Bourbaki table")
    }

    pub fn empty() -> DynkinDiagram {
        DynkinDiagram {
            graph: Graph::default(),
            components: vec![],
        }
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

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.graph.len()
    }

    pub fn component_of(&self, v: NodeId) -> Option<&Component> {
        self.components.iter().find(|c| c.nodes.contains(&v))
    }

    pub fn induced(&self, keep: &BTreeSet<NodeId>) -> DynkinDiagram {
        DynkinDiagram::new(self.graph.induced(keep)).expect("subdiagrams of finite diagrams are finite")
    }

    fn check(&self, marked: &BTreeSet<NodeId>) -> Result<()> {
        match marked.iter().find(|v| !self.graph.contains(**v)) {
            Some(&v) => Err(Error::NodeNotInDiagram(v)),
            None => Ok(()),
        }
    }

    /// Grade of every root (positive and negative) with respect to `marked`,
    /// per component.
    fn grades(&self, marked: &BTreeSet<NodeId>) -> Vec<i32> {
        let mut out = Vec::new();
        for c in &self.components {
            let idx: Vec<usize> = c
                .nodes
                .iter()
                .enumerate()
                .filter(|(_, v)| marked.contains(v))
                .map(|(k, _)| k)
                .collect();
            for r in positive_roots(c.cartan_type) {
                let g: i32 = idx.iter().map(|&k| r.coeffs[k]).sum();
                out.push(g);
                out.push(-g);
            }
        }
        out
    }
}

/// Identifies a connected diagram with a finite type; the labelling chosen is
/// the lexicographically smallest one.
pub fn recognize(g: &Graph) -> Option<Component> {
    let n = g.len();
    if n == 0 {
        return None;
    }
    for t in CartanType::all_of_rank(n) {
        if t.family() == Family::C && n == 2 {
            continue;
        }
        if t.family() == Family::D && n == 3 {
            continue;
        }
        let pattern = Graph::new(1..=n, t.bourbaki_edges()).unwrap();
        if let Some(phi) = isomorphisms(&pattern, g, &|_, _| true, 1).pop() {
            return Some(Component {
                cartan_type: t,
                nodes: phi,
            });
        }
    }
    None
}

/// Number of positive roots with a positive coefficient on some marked node.
pub fn parabolic_dimension(d: &DynkinDiagram, marked: &BTreeSet<NodeId>) -> Result<usize> {
    d.check(marked)?;
    Ok(d.grades(marked).into_iter().filter(|&g| g > 0).count())
}

/// `k -> dim h_k` for the grading by marked coefficients.
pub fn graded_dimensions(d: &DynkinDiagram, marked: &BTreeSet<NodeId>) -> Result<BTreeMap<i32, usize>> {
    d.check(marked)?;
    let mut out = BTreeMap::new();
    out.insert(0, d.rank());
    for g in d.grades(marked) {
        *out.entry(g).or_insert(0) += 1;
    }
    Ok(out)
}
