//! Finite quivers, paths, and the graph analyses needed by the classification results.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::{Dim, Error, Result};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite directed multigraph with named vertices and arrows. Loops and parallel arrows are allowed.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Validating constructor; arrows are `(name, source, target)` by vertex name.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() || v.contains(char::is_whitespace) {
                return Err(Error::InvalidQuiver(format!("bad vertex name {v:?}")));
            }
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v}")));
            }
        }
        let mut out = Vec::with_capacity(arrows.len());
        let mut seen = HashSet::new();
        for (name, s, t) in arrows {
            let name = name.as_ref();
            if name.is_empty() || name.contains(|c: char| c.is_whitespace() || c == '.' || c == '*') {
                return Err(Error::InvalidQuiver(format!("bad arrow name {name:?}")));
            }
            if !seen.insert(name.to_string()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {name}")));
            }
            let lookup = |v: &str| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidQuiver(format!("arrow {name} uses undeclared vertex {v}")))
            };
            out.push(Arrow {
                name: name.to_string(),
                source: lookup(s.as_ref())?,
                target: lookup(t.as_ref())?,
            });
        }
        Ok(Self::assemble(vertices, out))
    }

    /// Quiver on vertices `1..=n` with arrows `a1, a2, ...` given by index pairs.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let vertices = (1..=n).map(|i| i.to_string()).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| {
                assert!(s < n && t < n);
                Arrow {
                    name: format!("a{}", i + 1),
                    source: s,
                    target: t,
                }
            })
            .collect();
        Self::assemble(vertices, arrows)
    }

    fn assemble(vertices: Vec<String>, arrows: Vec<Arrow>) -> Self {
        let n = vertices.len();
        let mut out_arrows = vec![Vec::new(); n];
        let mut in_arrows = vec![Vec::new(); n];
        for (i, a) in arrows.iter().enumerate() {
            out_arrows[a.source].push(i);
            in_arrows[a.target].push(i);
        }
        let vertex_index = vertices.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        let arrow_index = arrows.iter().enumerate().map(|(i, a)| (a.name.clone(), i)).collect();
        Quiver {
            vertices,
            arrows,
            vertex_index,
            arrow_index,
            out_arrows,
            in_arrows,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn out_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.out_arrows[v]
    }

    pub fn in_arrows(&self, v: VertexId) -> &[ArrowId] {
        &self.in_arrows[v]
    }

    /// Parses traversal notation: `a.b.c` or `e_v`.
    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let s = s.trim();
        if let Some(v) = s.strip_prefix("e_") {
            if self.arrow_id(s).is_none() {
                return self
                    .vertex_id(v)
                    .map(Path::trivial)
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {v} in {s}")));
            }
        }
        let arrows = s
            .split('.')
            .map(|name| {
                let name = name.trim();
                self.arrow_id(name)
                    .ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {name:?} in path {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(self, arrows)
    }

    /// Vertex adjacency (with multiplicity) as successor lists.
    pub fn successors(&self) -> Vec<Vec<VertexId>> {
        self.out_arrows
            .iter()
            .map(|out| out.iter().map(|&a| self.arrows[a].target).collect())
            .collect()
    }

    pub fn is_weakly_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let nbrs = self.out_arrows[v]
                .iter()
                .map(|&a| self.arrows[a].target)
                .chain(self.in_arrows[v].iter().map(|&a| self.arrows[a].source));
            for w in nbrs {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Vertex sets of the weakly connected components, each sorted.
    pub fn weak_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                let nbrs = self.out_arrows[v]
                    .iter()
                    .map(|&a| self.arrows[a].target)
                    .chain(self.in_arrows[v].iter().map(|&a| self.arrows[a].source));
                for w in nbrs {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The full subquiver on the given vertices (in the given order), keeping every arrow between them.
    pub fn full_subquiver(&self, vertices: &[VertexId]) -> Subquiver {
        let mut position = vec![None; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = Some(i);
        }
        let names = vertices.iter().map(|&v| self.vertices[v].clone()).collect();
        let mut arrows = Vec::new();
        let mut arrow_map = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (position[a.source], position[a.target]) {
                arrows.push(Arrow {
                    name: a.name.clone(),
                    source: s,
                    target: t,
                });
                arrow_map.push(i);
            }
        }
        Subquiver {
            quiver: Self::assemble(names, arrows),
            vertex_map: vertices.to_vec(),
            arrow_map,
        }
    }

    /// Strongly connected components, acyclicity, cycle-graph shape and longest path length.
    pub fn analyze(&self) -> GraphAnalysis {
        let sccs = strongly_connected_components(&self.successors());
        let cyclic_component: Vec<bool> = sccs.iter().map(|c| self.component_has_cycle(c)).collect();
        let is_acyclic = !cyclic_component.iter().any(|&c| c);
        let longest_path = if is_acyclic {
            Dim::Finite(self.longest_path_acyclic())
        } else {
            Dim::Infinite
        };
        GraphAnalysis {
            sccs,
            is_acyclic,
            is_cycle_graph: self.is_cycle_graph(),
            longest_path,
        }
    }

    fn component_has_cycle(&self, comp: &[VertexId]) -> bool {
        if comp.len() > 1 {
            return true;
        }
        let v = comp[0];
        self.out_arrows[v].iter().any(|&a| self.arrows[a].target == v)
    }

    /// `C^n`: connected, `n` vertices, `n` arrows, in- and out-degree one everywhere.
    pub fn is_cycle_graph(&self) -> bool {
        let n = self.vertex_count();
        n > 0
            && self.arrow_count() == n
            && (0..n).all(|v| self.out_arrows[v].len() == 1 && self.in_arrows[v].len() == 1)
            && self.is_weakly_connected()
    }

    pub fn is_acyclic(&self) -> bool {
        self.analyze().is_acyclic
    }

    fn longest_path_acyclic(&self) -> usize {
        let n = self.vertex_count();
        let order = topological_order(&self.successors()).expect("acyclic quiver has a topological order");
        let mut best = vec![0usize; n];
        for &v in order.iter().rev() {
            for &a in &self.out_arrows[v] {
                let t = self.arrows[a].target;
                best[v] = best[v].max(best[t] + 1);
            }
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// Vertices lying on, or able to reach, an oriented cycle.
    pub fn q_infinity_vertices(&self) -> Vec<VertexId> {
        let sccs = strongly_connected_components(&self.successors());
        let n = self.vertex_count();
        let mut good = vec![false; n];
        for comp in &sccs {
            if self.component_has_cycle(comp) {
                for &v in comp {
                    good[v] = true;
                }
            }
        }
        // propagate backwards along arrows
        let mut stack: Vec<VertexId> = (0..n).filter(|&v| good[v]).collect();
        while let Some(v) = stack.pop() {
            for &a in &self.in_arrows[v] {
                let s = self.arrows[a].source;
                if !good[s] {
                    good[s] = true;
                    stack.push(s);
                }
            }
        }
        (0..n).filter(|&v| good[v]).collect()
    }

    /// The full subquiver `Q^∞` on vertices with arbitrarily long outgoing paths (possibly empty).
    pub fn q_infinity(&self) -> Subquiver {
        self.full_subquiver(&self.q_infinity_vertices())
    }

    /// Minimal successor-closed full subquivers, i.e. the terminal strongly connected components.
    pub fn final_subhearts(&self) -> Vec<Subheart> {
        let sccs = strongly_connected_components(&self.successors());
        let mut comp_of = vec![0; self.vertex_count()];
        for (i, c) in sccs.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut hearts = Vec::new();
        for (i, comp) in sccs.iter().enumerate() {
            let terminal = comp
                .iter()
                .all(|&v| self.out_arrows[v].iter().all(|&a| comp_of[self.arrows[a].target] == i));
            if terminal {
                let mut verts = comp.clone();
                verts.sort_unstable();
                let sub = self.full_subquiver(&verts);
                let trivial = sub.quiver.vertex_count() == 1 && sub.quiver.arrow_count() == 0;
                hearts.push(Subheart { sub, trivial });
            }
        }
        hearts.sort_by(|a, b| a.sub.vertex_map.cmp(&b.sub.vertex_map));
        hearts
    }
}

/// A full subquiver together with its embedding into the parent quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subquiver {
    pub quiver: Quiver,
    /// Parent vertex of each subquiver vertex.
    pub vertex_map: Vec<VertexId>,
    /// Parent arrow of each subquiver arrow.
    pub arrow_map: Vec<ArrowId>,
}

impl Subquiver {
    pub fn is_empty(&self) -> bool {
        self.quiver.vertex_count() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subheart {
    pub sub: Subquiver,
    /// A single vertex without a loop.
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphAnalysis {
    pub sccs: Vec<Vec<VertexId>>,
    pub is_acyclic: bool,
    pub is_cycle_graph: bool,
    pub longest_path: Dim,
}

/// Tarjan's algorithm; components come out in reverse topological order of the condensation.
pub fn strongly_connected_components(graph: &[Vec<usize>]) -> Vec<Vec<usize>> {
    struct State {
        index: usize,
        idx: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        comps: Vec<Vec<usize>>,
    }

    fn visit(v: usize, graph: &[Vec<usize>], st: &mut State) {
        st.idx[v] = Some(st.index);
        st.low[v] = st.index;
        st.index += 1;
        st.stack.push(v);
        st.on_stack[v] = true;
        for &w in &graph[v] {
            match st.idx[w] {
                None => {
                    visit(w, graph, st);
                    st.low[v] = st.low[v].min(st.low[w]);
                }
                Some(iw) if st.on_stack[w] => st.low[v] = st.low[v].min(iw),
                _ => {}
            }
        }
        if Some(st.low[v]) == st.idx[v] {
            let mut comp = Vec::new();
            loop {
                let w = st.stack.pop().expect("tarjan stack underflow");
                st.on_stack[w] = false;
                comp.push(w);
                if w == v {
                    break;
                }
            }
            comp.sort_unstable();
            st.comps.push(comp);
        }
    }

    let n = graph.len();
    let mut st = State {
        index: 0,
        idx: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.idx[v].is_none() {
            visit(v, graph, &mut st);
        }
    }
    st.comps
}

/// Kahn's algorithm; `None` if the graph has a cycle.
pub fn topological_order(graph: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = graph.len();
    let mut indeg = vec![0; n];
    for succ in graph {
        for &w in succ {
            indeg[w] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for &w in &graph[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A path stored in traversal order: `arrows[0]` is traversed first.
///
/// The trivial path `e_v` has no arrows and `source == target == v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        let ar = q.arrow(a);
        Path {
            source: ar.source,
            target: ar.target,
            arrows: vec![a],
        }
    }

    /// Nontrivial path from arrows in traversal order.
    pub fn from_arrows(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self> {
        let (&first, &last) = match (arrows.first(), arrows.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::InvalidQuiver("empty arrow sequence; use a trivial path".into())),
        };
        for w in arrows.windows(2) {
            if q.arrow(w[0]).target != q.arrow(w[1]).source {
                return Err(Error::ComposeMismatch {
                    left: q.arrow(w[1]).name.clone(),
                    right: q.arrow(w[0]).name.clone(),
                });
            }
        }
        Ok(Path {
            source: q.arrow(first).source,
            target: q.arrow(last).target,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// Traverse `self`, then `next`; `None` if the endpoints do not match.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }

    /// The algebra product `p·q`: traverse `q`, then `p`. Requires `s(p) = t(q)`.
    pub fn compose(q: &Quiver, p: &Path, r: &Path) -> Result<Path> {
        r.then(p).ok_or_else(|| Error::ComposeMismatch {
            left: p.traversal_string(q),
            right: r.traversal_string(q),
        })
    }

    /// The segment of arrows `[from, to)` in traversal order.
    pub fn segment(&self, q: &Quiver, from: usize, to: usize) -> Path {
        assert!(from <= to && to <= self.len());
        if from == to {
            let v = if from == 0 {
                self.source
            } else {
                q.arrow(self.arrows[from - 1]).target
            };
            return Path::trivial(v);
        }
        Path {
            source: q.arrow(self.arrows[from]).source,
            target: q.arrow(self.arrows[to - 1]).target,
            arrows: self.arrows[from..to].to_vec(),
        }
    }

    /// `self` is traversed first in `other`, i.e. `other = self` then something.
    pub fn is_prefix_of(&self, other: &Path) -> bool {
        self.source == other.source && other.arrows.starts_with(&self.arrows)
    }

    /// `self` is traversed last in `other`.
    pub fn is_suffix_of(&self, other: &Path) -> bool {
        self.target == other.target && other.arrows.ends_with(&self.arrows)
    }

    /// Whether `factor` (nontrivial) occurs as a consecutive run of arrows.
    pub fn contains_factor(&self, factor: &Path) -> bool {
        if factor.is_trivial() {
            return false;
        }
        self.arrows.windows(factor.len()).any(|w| w == factor.arrows.as_slice())
    }

    /// Traversal notation, `a.b` meaning "traverse a, then b"; trivial paths print as `e_v`.
    pub fn traversal_string(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            return format!("e_{}", q.vertex_name(self.source));
        }
        self.arrows
            .iter()
            .map(|&a| q.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Product (function-order) notation, `b·a` for the traversal `a.b`.
    pub fn function_string(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            return format!("e_{}", q.vertex_name(self.source));
        }
        self.arrows
            .iter()
            .rev()
            .map(|&a| q.arrow(a).name.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver: q }
    }

    /// Order by length, then lexicographically; used for canonical basis orderings.
    pub fn length_lex_cmp(&self, other: &Path) -> std::cmp::Ordering {
        (self.len(), self.source, &self.arrows, self.target).cmp(&(other.len(), other.source, &other.arrows, other.target))
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (traversal) = {} (function)",
            self.path.traversal_string(self.quiver),
            self.path.function_string(self.quiver)
        )
    }
}

/// All paths (trivial included) of length at most `max_len`, in length-lex order.
pub fn paths_up_to(q: &Quiver, max_len: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for &a in q.out_arrows(p.target) {
                next.push(p.then(&Path::arrow(q, a)).expect("arrow extends path"));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by(|a, b| a.length_lex_cmp(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_pair() -> Quiver {
        Quiver::new(
            &["1", "2"],
            &[("alpha", "1", "2"), ("beta", "2", "1"), ("gamma", "2", "2")],
        )
        .unwrap()
    }

    fn cycle(n: usize) -> Quiver {
        Quiver::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn compose_identity_and_order() {
        let q = cycle(2);
        let e = Path::trivial(0);
        assert_eq!(Path::compose(&q, &e, &e).unwrap(), e);
        let a = Path::arrow(&q, 0); // 1 -> 2
        let b = Path::arrow(&q, 1); // 2 -> 1
        let ba = Path::compose(&q, &b, &a).unwrap();
        assert_eq!(ba.traversal_string(&q), "a1.a2");
        assert_eq!(ba.source(), 0);
        assert_eq!(ba.target(), 0);
        assert_eq!(ba.len(), 2);
        let et = Path::trivial(a.target());
        assert_eq!(Path::compose(&q, &et, &a).unwrap(), a);
        assert!(matches!(Path::compose(&q, &a, &a), Err(Error::ComposeMismatch { .. })));
    }

    #[test]
    fn loop_pair_compose_alpha_beta() {
        let q = loop_pair();
        let alpha = Path::arrow(&q, 0);
        let beta = Path::arrow(&q, 1);
        let ab = Path::compose(&q, &alpha, &beta).unwrap();
        assert_eq!(ab.source(), 1);
        assert_eq!(ab.target(), 1);
        assert_eq!(ab.traversal_string(&q), "beta.alpha");
        assert_eq!(ab.function_string(&q), "alpha·beta");
    }

    #[test]
    fn analysis_examples() {
        let a3 = Quiver::from_edges(3, &[(0, 1), (1, 2)]);
        let g = a3.analyze();
        assert!(g.is_acyclic && !g.is_cycle_graph);
        assert_eq!(g.longest_path, Dim::Finite(2));

        let c4 = cycle(4);
        let g = c4.analyze();
        assert_eq!(g.sccs.len(), 1);
        assert!(g.is_cycle_graph && !g.is_acyclic);
        assert_eq!(g.longest_path, Dim::Infinite);

        let g = loop_pair().analyze();
        assert_eq!(g.sccs, vec![vec![0, 1]]);
        assert!(!g.is_cycle_graph);
    }

    #[test]
    fn q_infinity_examples() {
        assert!(Quiver::from_edges(3, &[(0, 1), (1, 2)]).q_infinity().is_empty());
        let c3 = cycle(3);
        assert_eq!(c3.q_infinity().vertex_map, vec![0, 1, 2]);
        // loop at v, arrow v -> w
        let q = Quiver::from_edges(2, &[(0, 0), (0, 1)]);
        let qi = q.q_infinity();
        assert_eq!(qi.vertex_map, vec![0]);
        assert_eq!(qi.quiver.arrow_count(), 1);
    }

    #[test]
    fn final_subheart_examples() {
        let a2 = Quiver::from_edges(2, &[(0, 1)]);
        let h = a2.final_subhearts();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].sub.vertex_map, vec![1]);
        assert!(h[0].trivial);

        let c3 = cycle(3);
        let h = c3.final_subhearts();
        assert_eq!(h.len(), 1);
        assert!(!h[0].trivial && h[0].sub.quiver.is_cycle_graph());

        // C^2 on {0,1}, loop at 2, arrow 1 -> 2
        let q = Quiver::from_edges(3, &[(0, 1), (1, 0), (2, 2), (1, 2)]);
        let h = q.final_subhearts();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].sub.vertex_map, vec![2]);
        assert!(h[0].sub.quiver.is_cycle_graph());
    }

    #[test]
    fn rejects_bad_quivers() {
        assert!(Quiver::new::<&str>(&[], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "2")]).is_err());
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1"], &[("a", "1", "1"), ("a", "1", "1")]).is_err());
    }
}
