//! Canonical text, parsing, and presentation formats for marked diagrams.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::affine::{affine_with_nodes, AffineDiagram, MarkedKacDiagram};
use crate::error::{Error, Result};
use crate::graph::{isomorphisms, Edge, Graph, NodeId};
use crate::root_core::{CartanType, DynkinDiagram};
use crate::vmrt_engine::MarkedDynkinDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mark {
    Black,
    White,
    Crossed(Option<u32>),
}

impl Mark {
    fn token(self) -> String {
        match self {
            Mark::Black => "o".into(),
            Mark::White => "O".into(),
            Mark::Crossed(None) => "x".into(),
            Mark::Crossed(Some(n)) => format!("x[{n}]"),
        }
    }
}

/// Everything an emitter needs, for finite and affine diagrams alike.
#[derive(Debug, Clone)]
pub struct Scene {
    pub graph: Graph,
    pub marks: BTreeMap<NodeId, Mark>,
    pub sigma: Option<Vec<(NodeId, NodeId)>>,
    /// `(base, twist)` for affine diagrams.
    pub affine: Option<(CartanType, u8)>,
    pub labels: Option<Vec<u32>>,
    /// Finite components with Bourbaki labelling.
    pub components: Vec<(CartanType, Vec<NodeId>)>,
}

pub trait Drawable {
    fn scene(&self) -> Scene;
}

impl Drawable for MarkedDynkinDiagram {
    fn scene(&self) -> Scene {
        let marks = self
            .nodes()
            .iter()
            .map(|&v| {
                (
                    v,
                    if self.crossed().contains(&v) {
                        Mark::Crossed(self.annotation(v))
                    } else {
                        Mark::Black
                    },
                )
            })
            .collect();
        Scene {
            graph: self.diagram().graph().clone(),
            marks,
            sigma: self.sigma_pairs().map(|p| p.to_vec()),
            affine: None,
            labels: None,
            components: self
                .diagram()
                .components()
                .iter()
                .map(|c| (c.cartan_type, c.nodes.clone()))
                .collect(),
        }
    }
}

impl Drawable for MarkedKacDiagram {
    fn scene(&self) -> Scene {
        let d = self.diagram();
        Scene {
            graph: d.graph().clone(),
            marks: d
                .nodes()
                .iter()
                .map(|&v| (v, if self.is_white(v) { Mark::White } else { Mark::Black }))
                .collect(),
            sigma: None,
            affine: Some((d.base(), d.twist())),
            labels: Some(d.labels().to_vec()),
            components: vec![],
        }
    }
}

fn bars(mult: u8) -> &'static str {
    match mult {
        1 => "-",
        2 => "=",
        3 => "#",
        _ => "####",
    }
}

/// Bond token read from `from` towards the other endpoint.
fn edge_token(e: &Edge, from: NodeId) -> String {
    let b = bars(e.mult);
    match e.short_end {
        None => b.into(),
        Some(s) if s == from => format!("<{b}"),
        Some(_) => format!("{b}>"),
    }
}

struct Canon<'a> {
    scene: &'a Scene,
}

impl Canon<'_> {
    fn token(&self, v: NodeId) -> String {
        self.scene.marks[&v].token()
    }

    /// Rooted string and subtree size.
    fn rooted(&self, v: NodeId, parent: Option<NodeId>) -> (usize, String) {
        let g = &self.scene.graph;
        let mut kids: Vec<(usize, String)> = g
            .neighbors(v)
            .into_iter()
            .filter(|&c| Some(c) != parent)
            .map(|c| {
                let e = g.edge(v, c).unwrap();
                let (size, s) = self.rooted(c, Some(v));
                let tok = edge_token(e, v);
                (
                    size,
                    if tok == "-" {
                        format!("\u{1}{s}")
                    } else {
                        format!("{tok}{s}")
                    },
                )
            })
            .collect();
        kids.sort();
        let size = 1 + kids.iter().map(|k| k.0).sum::<usize>();
        let mut out = self.token(v);
        if let Some((_, main)) = kids.pop() {
            for (_, b) in &kids {
                out.push('(');
                out.push_str(b.trim_start_matches('\u{1}'));
                out.push(')');
            }
            out.push_str(&main.replace('\u{1}', "-"));
        }
        (size, out.replace('\u{1}', "-"))
    }

    fn is_cycle(&self, nodes: &[NodeId]) -> bool {
        let g = &self.scene.graph;
        let edges = g.edges().iter().filter(|e| nodes.contains(&e.a)).count();
        nodes.len() >= 3 && edges == nodes.len() && nodes.iter().all(|&v| g.neighbors(v).len() == 2)
    }

    fn cycle_text(&self, start: NodeId, second: NodeId, len: usize) -> String {
        let g = &self.scene.graph;
        let mut out = self.token(start);
        let (mut prev, mut cur) = (start, second);
        for _ in 1..len {
            out.push_str(&edge_token(g.edge(prev, cur).unwrap(), prev));
            out.push_str(&self.token(cur));
            let next = g.neighbors(cur).into_iter().find(|&n| n != prev).unwrap();
            prev = cur;
            cur = next;
        }
        out.push_str(&edge_token(g.edge(prev, start).unwrap(), prev));
        out.push('*');
        out
    }

    fn component(&self, nodes: &[NodeId]) -> String {
        let g = &self.scene.graph;
        if self.is_cycle(nodes) {
            return nodes
                .iter()
                .flat_map(|&v| g.neighbors(v).into_iter().map(move |w| (v, w)))
                .map(|(v, w)| self.cycle_text(v, w, nodes.len()))
                .min()
                .unwrap();
        }
        nodes
            .iter()
            .map(|&r| self.rooted(r, None).1)
            .min_by(|a, b| (a.matches('(').count(), a).cmp(&(b.matches('(').count(), b)))
            .unwrap()
    }
}

/// Single-line canonical form; equal for isomorphic marked diagrams.
pub fn to_canonical_text(d: &(impl Drawable + ?Sized)) -> String {
    scene_text(&d.scene())
}

fn scene_text(scene: &Scene) -> String {
    let canon = Canon { scene };
    let comps = scene.graph.components();
    let mut body = match &scene.sigma {
        Some(pairs) => {
            let first: BTreeSet<NodeId> = pairs.iter().map(|p| p.0).collect();
            let mut half: Vec<String> = comps
                .iter()
                .filter(|c| first.contains(&c[0]))
                .map(|c| canon.component(c))
                .collect();
            half.sort();
            let mut all = half.clone();
            all.extend(half);
            all
        }
        None => {
            let mut all: Vec<String> = comps.iter().map(|c| canon.component(c)).collect();
            all.sort();
            all
        }
    };
    if body.is_empty() {
        body.push("empty".into());
    }
    let mut out = body.join(" + ");
    if scene.sigma.is_some() {
        out.push_str(" ~sigma");
    }
    out
}

/// A parsed diagram: finite marked, or marked Kac when white nodes occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Marked(MarkedDynkinDiagram),
    Kac(MarkedKacDiagram),
}

impl Parsed {
    pub fn canonical_text(&self) -> String {
        match self {
            Parsed::Marked(d) => to_canonical_text(d),
            Parsed::Kac(d) => to_canonical_text(d),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
    marks: Vec<Mark>,
    edges: Vec<Edge>,
    components: Vec<Vec<NodeId>>,
}

impl Parser<'_> {
    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            offset: self.i,
            expected: expected.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.i..].starts_with(lit.as_bytes()) {
            self.i += lit.len();
            true
        } else {
            false
        }
    }

    fn text(&mut self) -> Result<bool> {
        if !self.eat("empty") {
            loop {
                self.component()?;
                if !self.eat(" + ") {
                    break;
                }
            }
        }
        let sigma = self.eat(" ~sigma");
        if self.i != self.s.len() {
            return self.err("' + ', ' ~sigma' or end of input");
        }
        Ok(sigma)
    }

    fn component(&mut self) -> Result<()> {
        let first = self.marks.len();
        let closure = self.chain(true)?;
        if let Some((last, mult, short_left, short_right)) = closure {
            self.push_edge(last, first, mult, short_left, short_right)?;
        }
        self.components.push((first..self.marks.len()).collect());
        Ok(())
    }

    fn push_edge(&mut self, a: NodeId, b: NodeId, mult: u8, short_a: bool, short_b: bool) -> Result<()> {
        let short = if short_a {
            Some(a)
        } else if short_b {
            Some(b)
        } else {
            None
        };
        if a == b || self.edges.iter().any(|e| e.touches(a) && e.touches(b)) {
            return Err(Error::Malformed(format!("ring closure on nodes {a} and {b}")));
        }
        self.edges.push(Edge::new(a, b, mult, short));
        Ok(())
    }

    /// Parses `node branch* (edge chain)?`; a trailing `edge*` is returned
    /// as a ring closure when allowed.
    fn chain(&mut self, top: bool) -> Result<Option<(NodeId, u8, bool, bool)>> {
        let mut v = self.node()?;
        loop {
            while self.peek() == Some(b'(') {
                self.i += 1;
                let start = self.i;
                let (mult, sl, sr) = if matches!(self.peek(), Some(b'-' | b'=' | b'#' | b'<')) {
                    self.edge()?
                } else {
                    (1, false, false)
                };
                let c = self.marks.len();
                if self.peek() == Some(b'*') {
                    self.i = start;
                    return self.err("node");
                }
                self.chain(false)?;
                self.push_edge(v, c, mult, sl, sr)?;
                if !self.eat(")") {
                    return self.err("')'");
                }
            }
            if !matches!(self.peek(), Some(b'-' | b'=' | b'#' | b'<')) {
                return Ok(None);
            }
            let (mult, sl, sr) = self.edge()?;
            if self.peek() == Some(b'*') {
                if !top {
                    return self.err("node");
                }
                self.i += 1;
                return Ok(Some((v, mult, sl, sr)));
            }
            let c = self.marks.len();
            self.node()?;
            self.push_edge(v, c, mult, sl, sr)?;
            v = c;
        }
    }

    fn edge(&mut self) -> Result<(u8, bool, bool)> {
        let left = self.eat("<");
        let mult = if self.eat("####") {
            4
        } else if self.eat("#") {
            3
        } else if self.eat("=") {
            2
        } else if self.eat("-") {
            1
        } else {
            return self.err("bond '-', '=', '#' or '####'");
        };
        let right = self.eat(">");
        match (mult, left, right) {
            (_, true, true) => self.err("a single arrow"),
            (1, false, false) | (4, _, _) => Ok((mult, left, right)),
            (1, _, _) => self.err("no arrow on a simple bond"),
            (_, false, false) => self.err("'<' or '>' on a multiple bond"),
            _ => Ok((mult, left, right)),
        }
    }

    fn node(&mut self) -> Result<NodeId> {
        let mark = match self.peek() {
            Some(b'o') => Mark::Black,
            Some(b'O') => Mark::White,
            Some(b'x') => {
                self.i += 1;
                if self.eat("[") {
                    let start = self.i;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.i += 1;
                    }
                    if start == self.i {
                        return self.err("digit");
                    }
                    let n: u32 = std::str::from_utf8(&self.s[start..self.i])
                        .unwrap()
                        .parse()
                        .map_err(|_| Error::Syntax {
                            offset: start,
                            expected: "a small annotation".into(),
                        })?;
                    if !self.eat("]") {
                        return self.err("']'");
                    }
                    self.marks.push(Mark::Crossed(Some(n)));
                } else {
                    self.marks.push(Mark::Crossed(None));
                }
                return Ok(self.marks.len() - 1);
            }
            _ => return self.err("node 'o', 'O' or 'x'"),
        };
        self.i += 1;
        self.marks.push(mark);
        Ok(self.marks.len() - 1)
    }
}

pub fn parse(s: &str) -> Result<Parsed> {
    let mut p = Parser {
        s: s.as_bytes(),
        i: 0,
        marks: vec![],
        edges: vec![],
        components: vec![],
    };
    let sigma = p.text()?;
    let graph = Graph::new(0..p.marks.len(), p.edges.clone())?;
    let white: BTreeSet<NodeId> = (0..p.marks.len()).filter(|&v| p.marks[v] == Mark::White).collect();
    if !white.is_empty() {
        if sigma || p.marks.iter().any(|m| matches!(m, Mark::Crossed(_))) {
            return Err(Error::Malformed("a Kac diagram carries only 'o' and 'O' nodes".into()));
        }
        if p.components.len() != 1 {
            return Err(Error::Malformed("a Kac diagram is connected".into()));
        }
        return recognize_kac(&graph, &white).map(Parsed::Kac);
    }
    let diagram = DynkinDiagram::new(graph.clone())?;
    let crossed = (0..p.marks.len())
        .filter(|&v| matches!(p.marks[v], Mark::Crossed(_)))
        .collect();
    let annotations = (0..p.marks.len())
        .filter_map(|v| match p.marks[v] {
            Mark::Crossed(Some(n)) => Some((v, n)),
            _ => None,
        })
        .collect();
    let pairs = if sigma {
        let k = p.components.len();
        if k % 2 == 1 {
            return Err(Error::Malformed("sigma pairing needs two equal halves".into()));
        }
        let mut pairs = vec![];
        for i in 0..k / 2 {
            let (a, b) = (&p.components[i], &p.components[i + k / 2]);
            let (ga, gb) = (
                graph.induced(&a.iter().copied().collect()),
                graph.induced(&b.iter().copied().collect()),
            );
            let phi = isomorphisms(&ga, &gb, &|x, y| p.marks[x] == p.marks[y], 1)
                .pop()
                .ok_or_else(|| Error::Malformed(format!("sigma halves differ at component {}", i + 1)))?;
            pairs.extend(ga.nodes().iter().copied().zip(phi));
        }
        Some(pairs)
    } else {
        None
    };
    Ok(Parsed::Marked(MarkedDynkinDiagram::new(
        diagram,
        crossed,
        annotations,
        pairs,
    )?))
}

pub fn parse_marked(s: &str) -> Result<MarkedDynkinDiagram> {
    match parse(s)? {
        Parsed::Marked(d) => Ok(d),
        Parsed::Kac(_) => Err(Error::Malformed("expected a finite marked diagram".into())),
    }
}

/// Affine diagrams by node count, built once per count.
fn affine_candidates(nodes: usize) -> Arc<Vec<AffineDiagram>> {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, Arc<Vec<AffineDiagram>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&nodes) {
        return hit.clone();
    }
    let built = Arc::new(affine_with_nodes(nodes));
    cache.lock().expect("cache lock").entry(nodes).or_insert(built).clone()
}

fn recognize_kac(g: &Graph, white: &BTreeSet<NodeId>) -> Result<MarkedKacDiagram> {
    for d in affine_candidates(g.len()).iter().cloned() {
        if let Some(phi) = isomorphisms(d.graph(), g, &|_, _| true, 1).pop() {
            let w: Vec<NodeId> = (0..phi.len()).filter(|&k| white.contains(&phi[k])).collect();
            return MarkedKacDiagram::new(d, w);
        }
    }
    Err(Error::Malformed("not an affine Dynkin diagram".into()))
}

/// Grid positions: main chains run right, branches run vertically.
struct Layout {
    pos: BTreeMap<NodeId, (i32, i32)>,
    /// Cycle drawn with the apex node above the others.
    apex: Option<NodeId>,
}

fn layout(scene: &Scene) -> Layout {
    let g = &scene.graph;
    let canon = Canon { scene };
    let mut pos = BTreeMap::new();
    let mut apex = None;
    let mut x0 = 0;
    let mut comps = g.components();
    comps.sort_by_key(|c| canon.component(c));
    if let Some(p) = &scene.sigma {
        let first: BTreeSet<NodeId> = p.iter().map(|p| p.0).collect();
        comps.sort_by_key(|c| !first.contains(&c[0]));
    }
    for c in comps {
        if canon.is_cycle(&c) {
            let top = c[0];
            apex = Some(top);
            let mut order = vec![];
            let (mut prev, mut cur) = (top, g.neighbors(top)[0]);
            while cur != top {
                order.push(cur);
                let next = g.neighbors(cur).into_iter().find(|&n| n != prev).unwrap();
                prev = cur;
                cur = next;
            }
            for (k, v) in order.iter().enumerate() {
                pos.insert(*v, (x0 + k as i32, 1));
            }
            pos.insert(top, (x0 + (order.len() as i32 - 1) / 2, 0));
            x0 += order.len() as i32 + 1;
            continue;
        }
        let root = c
            .iter()
            .copied()
            .min_by_key(|&r| {
                let s = canon.rooted(r, None).1;
                (s.matches('(').count(), s)
            })
            .unwrap();
        let mut max_x = x0;
        place(g, &canon, root, None, (x0, 0), true, &mut pos, &mut max_x);
        x0 = max_x + 2;
    }
    let min_y = pos.values().map(|p| p.1).min().unwrap_or(0);
    for p in pos.values_mut() {
        p.1 -= min_y;
    }
    Layout { pos, apex }
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    canon: &Canon,
    v: NodeId,
    parent: Option<NodeId>,
    at: (i32, i32),
    horizontal: bool,
    pos: &mut BTreeMap<NodeId, (i32, i32)>,
    max_x: &mut i32,
) {
    pos.insert(v, at);
    *max_x = (*max_x).max(at.0);
    let mut kids: Vec<(usize, String, NodeId)> = g
        .neighbors(v)
        .into_iter()
        .filter(|&c| Some(c) != parent)
        .map(|c| {
            let (s, t) = canon.rooted(c, Some(v));
            (s, t, c)
        })
        .collect();
    kids.sort();
    let Some((_, _, main)) = kids.pop() else { return };
    let step = if horizontal {
        (1, 0)
    } else {
        (0, if at.1 <= 0 { -1 } else { 1 })
    };
    for (k, (_, _, b)) in kids.iter().enumerate() {
        let dir = if horizontal {
            if k % 2 == 0 {
                (0, -1 - (k as i32 / 2))
            } else {
                (0, 1 + (k as i32 / 2))
            }
        } else {
            (1, 0)
        };
        place(
            g,
            canon,
            *b,
            Some(v),
            (at.0 + dir.0, at.1 + dir.1),
            !horizontal,
            pos,
            max_x,
        );
    }
    place(
        g,
        canon,
        main,
        Some(v),
        (at.0 + step.0, at.1 + step.1),
        horizontal,
        pos,
        max_x,
    );
}

/// Multi-line drawing; cycles get their apex on a row of its own.
pub fn to_ascii(d: &(impl Drawable + ?Sized)) -> String {
    let scene = d.scene();
    if scene.graph.is_empty() {
        return format!("{}\n", scene_text(&scene));
    }
    let lay = layout(&scene);
    let tok = |v: NodeId| scene.marks[&v].token();
    let columns = lay.pos.values().map(|p| p.0).max().unwrap() as usize + 1;
    let mut widths = vec![1; columns];
    for (&v, p) in &lay.pos {
        widths[p.0 as usize] = widths[p.0 as usize].max(tok(v).len());
    }
    let gap = 5;
    let starts: Vec<usize> = widths
        .iter()
        .scan(0, |acc, w| {
            let s = *acc;
            *acc += w + gap;
            Some(s)
        })
        .collect();
    let apex_col = lay.apex.map(|top| {
        let y = lay.pos[&top].1 + 1;
        let xs: Vec<i32> = lay.pos.values().filter(|p| p.1 == y).map(|p| p.0).collect();
        let (lo, hi) = (
            xs.iter().min().copied().unwrap_or(0),
            xs.iter().max().copied().unwrap_or(0),
        );
        (starts[lo as usize] + starts[hi as usize]) / 2
    });
    let col = |v: NodeId| match apex_col {
        Some(c) if Some(v) == lay.apex => c,
        _ => starts[lay.pos[&v].0 as usize],
    };
    let row = |y: i32| y as usize * 2;
    let width = starts[columns - 1] + widths[columns - 1] + gap;
    let height = lay.pos.values().map(|p| row(p.1)).max().unwrap() + 1;
    let mut grid = vec![vec![' '; width]; height];
    let put = |grid: &mut Vec<Vec<char>>, r: usize, c: usize, s: &str| {
        for (k, ch) in s.chars().enumerate() {
            if c + k < grid[r].len() {
                grid[r][c + k] = ch;
            }
        }
    };
    for e in scene.graph.edges() {
        let (pa, pb) = (lay.pos[&e.a], lay.pos[&e.b]);
        let (l, r) = if pa <= pb { (e.a, e.b) } else { (e.b, e.a) };
        let (pl, pr) = (lay.pos[&l], lay.pos[&r]);
        if Some(l) == lay.apex || Some(r) == lay.apex {
            let (apex, other) = if Some(l) == lay.apex { (l, r) } else { (r, l) };
            let (rr, cc) = (row(lay.pos[&apex].1), col(apex));
            let oc = col(other);
            if oc <= cc {
                put(
                    &mut grid,
                    rr,
                    oc + 1,
                    &format!(".{}", "-".repeat(cc.saturating_sub(oc + 2))),
                );
                put(&mut grid, rr + 1, oc, "/");
            } else {
                let from = cc + tok(apex).len();
                put(
                    &mut grid,
                    rr,
                    from,
                    &format!("{}.", "-".repeat(oc.saturating_sub(from + 1))),
                );
                put(&mut grid, rr + 1, oc, "\\");
            }
        } else if pl.1 == pr.1 {
            let from = col(l) + tok(l).len();
            let span = col(r) - from;
            let t = edge_token(e, l);
            let fill = if e.mult == 1 {
                "-".repeat(span)
            } else {
                format!("{:^span$}", t)
            };
            put(&mut grid, row(pl.1), from, &fill);
        } else {
            let (top, bottom) = if pl.1 < pr.1 { (l, r) } else { (r, l) };
            let glyph = match e.short_end {
                None if e.mult == 1 => "|".to_string(),
                None => e.mult.to_string(),
                Some(s) if s == bottom => format!("{}v", e.mult),
                Some(_) => format!("{}^", e.mult),
            };
            put(&mut grid, row(lay.pos[&top].1) + 1, col(top), &glyph);
        }
    }
    for (&v, p) in &lay.pos {
        put(&mut grid, row(p.1), col(v), &tok(v));
    }
    let mut out: String = grid
        .iter()
        .map(|r| r.iter().collect::<String>().trim_end().to_string() + "\n")
        .collect();
    if let Some(labels) = &scene.labels {
        let l: Vec<String> = labels.iter().enumerate().map(|(i, a)| format!("{i}:{a}")).collect();
        out.push_str(&format!("labels {}\n", l.join(" ")));
    }
    if scene.sigma.is_some() {
        out.push_str("sigma-paired halves\n");
    }
    out
}

/// A plain `picture` environment in the style of the tables.
pub fn to_latex(d: &(impl Drawable + ?Sized)) -> String {
    let scene = d.scene();
    let lay = layout(&scene);
    let w = lay.pos.values().map(|p| p.0).max().unwrap_or(0) + 1;
    let h = lay.pos.values().map(|p| p.1).max().unwrap_or(0) + 1;
    let xy = |v: NodeId| {
        let p = lay.pos[&v];
        (p.0, h - 1 - p.1)
    };
    let mut out = format!("\\begin{{picture}}({w},{h})(0,0)\n");
    for e in scene.graph.edges() {
        let (a, b) = (xy(e.a), xy(e.b));
        let ((x1, y1), (x2, y2)) = if a <= b { (a, b) } else { (b, a) };
        if Some(e.a) == lay.apex || Some(e.b) == lay.apex {
            out.push_str(&format!("\\qbezier({x1},{y1})({x1},{y2})({x2},{y2})\n"));
            continue;
        }
        let offsets: &[f64] = match e.mult {
            1 => &[0.0],
            2 => &[-0.05, 0.05],
            3 => &[-0.08, 0.0, 0.08],
            _ => &[-0.1, -0.035, 0.035, 0.1],
        };
        for o in offsets {
            if y1 == y2 {
                out.push_str(&format!(
                    "\\put({},{}){{\\line(1,0){{{}}}}}\n",
                    x1,
                    fmt_num(y1 as f64 + o),
                    x2 - x1
                ));
            } else {
                out.push_str(&format!(
                    "\\put({},{}){{\\line(0,1){{{}}}}}\n",
                    fmt_num(x1 as f64 + o),
                    y1,
                    y2 - y1
                ));
            }
        }
        if let Some(s) = e.short_end {
            let (sx, sy) = xy(s);
            let (mx, my) = ((x1 + x2) as f64 / 2.0, (y1 + y2) as f64 / 2.0);
            let glyph = if y1 == y2 {
                if sx > x1 {
                    "$>$"
                } else {
                    "$<$"
                }
            } else if sy > y1 {
                "$\\wedge$"
            } else {
                "$\\vee$"
            };
            out.push_str(&format!(
                "\\put({},{}){{{glyph}}}\n",
                fmt_num(mx - 0.15),
                fmt_num(my - 0.2)
            ));
        }
    }
    for &v in lay.pos.keys() {
        let (x, y) = xy(v);
        match scene.marks[&v] {
            Mark::Black => out.push_str(&format!("\\put({x},{y}){{\\circle*{{.3}}}}\n")),
            Mark::White => out.push_str(&format!("\\put({x},{y}){{\\circle{{.3}}}}\n")),
            Mark::Crossed(a) => {
                out.push_str(&format!(
                    "\\put({},{}){{$\\times$}}\n",
                    fmt_num(x as f64 - 0.25),
                    fmt_num(y as f64 - 0.2)
                ));
                if let Some(a) = a {
                    out.push_str(&format!(
                        "\\put({},{}){{\\tiny {a}}}\n",
                        fmt_num(x as f64 - 0.1),
                        fmt_num(y as f64 + 0.3)
                    ));
                }
            }
        }
        if let Some(labels) = &scene.labels {
            out.push_str(&format!(
                "\\put({},{}){{\\tiny {}}}\n",
                fmt_num(x as f64 - 0.1),
                fmt_num(y as f64 - 0.6),
                labels[v]
            ));
        }
    }
    if let Some(pairs) = &scene.sigma {
        for (a, b) in pairs.iter().filter(|p| scene.marks[&p.0] != Mark::Black) {
            let ((x1, y1), (x2, y2)) = (xy(*a), xy(*b));
            out.push_str(&format!(
                "\\qbezier[20]({x1},{})({},{})({x2},{})\n",
                fmt_num(y1 as f64 - 0.3),
                fmt_num((x1 + x2) as f64 / 2.0),
                fmt_num(y1.min(y2) as f64 - 1.0),
                fmt_num(y2 as f64 - 0.3)
            ));
        }
    }
    out.push_str("\\end{picture}\n");
    out
}

fn fmt_num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// Graphviz digraph; multiple bonds point from the long to the short root.
pub fn to_dot(d: &(impl Drawable + ?Sized)) -> String {
    let scene = d.scene();
    let mut out = String::from("digraph diagram {\n  node [shape=circle];\n");
    for (v, m) in &scene.marks {
        let style = match m {
            Mark::Black => ", style=filled, fillcolor=black, fontcolor=white",
            _ => "",
        };
        let label = match &scene.labels {
            Some(l) => format!("{} ({})", m.token(), l[*v]),
            None => m.token(),
        };
        out.push_str(&format!("  n{v} [label=\"{label}\"{style}];\n"));
    }
    for e in scene.graph.edges() {
        let (from, to, dir) = match e.short_end {
            Some(s) => (e.other(s), s, "forward"),
            None => (e.a, e.b, "none"),
        };
        out.push_str(&format!("  n{from} -> n{to} [label=\"{}\", dir={dir}];\n", e.mult));
    }
    if let Some(pairs) = &scene.sigma {
        for (a, b) in pairs {
            out.push_str(&format!("  n{a} -> n{b} [style=dashed, dir=both, label=\"sigma\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonBase {
    family: String,
    rank: usize,
}

#[derive(Serialize)]
struct JsonNode {
    id: NodeId,
    mark: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    annotation: Option<u32>,
}

#[derive(Serialize)]
struct JsonEdge {
    from: NodeId,
    to: NodeId,
    mult: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    short_end: Option<NodeId>,
}

#[derive(Serialize)]
struct JsonComponent {
    family: String,
    rank: usize,
    nodes: Vec<NodeId>,
}

#[derive(Serialize)]
struct JsonDiagram {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    base: Option<JsonBase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    twist: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    components: Option<Vec<JsonComponent>>,
    nodes: Vec<JsonNode>,
    edges: Vec<JsonEdge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_pairs: Option<Vec<[NodeId; 2]>>,
}

fn json_value(scene: &Scene) -> JsonDiagram {
    let base = |t: CartanType| JsonBase {
        family: t.family().letter().to_string(),
        rank: t.rank(),
    };
    let finite_base = match scene.components.as_slice() {
        [(t, _)] if scene.affine.is_none() => Some(base(*t)),
        _ => None,
    };
    JsonDiagram {
        kind: if scene.affine.is_some() { "affine" } else { "finite" },
        base: scene.affine.map(|a| base(a.0)).or(finite_base),
        twist: scene.affine.map(|a| a.1),
        components: scene.affine.is_none().then(|| {
            scene
                .components
                .iter()
                .map(|(t, n)| JsonComponent {
                    family: t.family().letter().to_string(),
                    rank: t.rank(),
                    nodes: n.clone(),
                })
                .collect()
        }),
        nodes: scene
            .marks
            .iter()
            .map(|(&id, m)| JsonNode {
                id,
                mark: match m {
                    Mark::Black => "black",
                    Mark::White => "white",
                    Mark::Crossed(_) => "crossed",
                },
                annotation: match m {
                    Mark::Crossed(a) => *a,
                    _ => None,
                },
            })
            .collect(),
        edges: scene
            .graph
            .edges()
            .iter()
            .map(|e| JsonEdge {
                from: e.a,
                to: e.b,
                mult: e.mult,
                short_end: e.short_end,
            })
            .collect(),
        labels: scene.labels.clone(),
        sigma_pairs: scene.sigma.as_ref().map(|p| p.iter().map(|&(a, b)| [a, b]).collect()),
    }
}

pub fn to_json_value(d: &(impl Drawable + ?Sized)) -> serde_json::Value {
    serde_json::to_value(json_value(&d.scene())).expect("plain data")
}

/// Pretty JSON with sorted keys, so re-emitting a parsed copy is byte-identical.
pub fn to_json(d: &(impl Drawable + ?Sized)) -> String {
    serde_json::to_string_pretty(&to_json_value(d)).expect("plain data")
}

/// Catalog of every atlas entry with at most `max_rank + 1` Kac nodes, with
/// its Kac diagram, Z diagram(s) and VMRT.
pub fn atlas_catalog(max_rank: usize) -> serde_json::Value {
    use crate::atlas::{enumerate, kac_diagram};
    use crate::vmrt_engine::{vmrt, z_dimension, z_orbit_diagram};
    use serde_json::json;

    let entries: Vec<serde_json::Value> = enumerate(max_rank)
        .iter()
        .map(|e| {
            let kac = kac_diagram(e);
            let mut v = json!({
                "label": e.label,
                "name": e.name(),
                "params": e.params,
                "kind": e.kind.as_str(),
                "g": e.g_desc,
                "h": e.h_desc,
                "kac": to_json_value(&kac),
                "kac_text": to_canonical_text(&kac),
                "restricted_type": e.restricted_type.to_string(),
                "boundary_degree": e.boundary_degree,
                "source_gap": e.source_gap,
            });
            match z_orbit_diagram(&kac, e.kind) {
                Ok(z) => {
                    v["z"] = z.iter().map(to_canonical_text).collect();
                    v["z_dimension"] = json!(z_dimension(&z[0]));
                }
                Err(err) => v["error"] = json!(err.to_string()),
            }
            match vmrt(e) {
                Ok(d) => {
                    v["vmrt"] = json!({
                        "kind": d.kind.as_str(),
                        "diagrams": d.components.iter().map(to_canonical_text).collect::<Vec<_>>(),
                        "dimension": d.dimension,
                        "identification": d.identification,
                        "tabulated_name": d.alias,
                        "note": d.ambient_note,
                    });
                }
                Err(err) => v["error"] = json!(err.to_string()),
            }
            v
        })
        .collect();
    json!({ "max_rank": max_rank, "entries": entries })
}
