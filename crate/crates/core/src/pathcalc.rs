//! Combinatorial syzygy calculus for monomial and truncated algebras.
//!
//! Every module handled here is a quotient `A e_v / N` where `N` is spanned by the nonzero
//! paths from `v` outside a prefix-closed set `C` of "continuations". Path modules `Ap`
//! (`v = t(p)`, `C = {c : p then c ≠ 0}`), projectives `P_v` and simples `S_v` are all of this
//! form. The syzygy of such a quotient is `N = ⊕ A q` over the prefix-minimal nonzero paths `q`
//! outside `C`, and `A q` is again of this form, so the calculus is closed.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use crate::algebra::Algebra;
use crate::quiver::{Path, VertexId};
use crate::{Dim, Error, Result};

/// Isomorphism class of a cyclic module `A e_v / N` with monomial `N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathClass {
    vertex: VertexId,
    /// Sorted, prefix-closed, always contains `e_v`.
    continuations: Vec<Path>,
}

impl PathClass {
    pub fn vertex(&self) -> VertexId {
        self.vertex
    }

    pub fn continuations(&self) -> &[Path] {
        &self.continuations
    }

    pub fn dim(&self) -> usize {
        self.continuations.len()
    }

    pub fn dim_vector(&self, alg: &Algebra) -> Vec<usize> {
        let mut d = vec![0; alg.quiver().vertex_count()];
        for c in &self.continuations {
            d[c.target()] += 1;
        }
        d
    }

    pub fn is_simple(&self) -> bool {
        self.continuations.len() == 1
    }

    fn from_set(vertex: VertexId, mut continuations: Vec<Path>) -> Self {
        continuations.sort();
        continuations.dedup();
        PathClass { vertex, continuations }
    }
}

/// A formal direct sum of path classes with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleMultiset {
    parts: BTreeMap<PathClass, usize>,
}

impl ModuleMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(c: PathClass) -> Self {
        let mut m = Self::new();
        m.add(c, 1);
        m
    }

    pub fn from_classes<I: IntoIterator<Item = PathClass>>(it: I) -> Self {
        let mut m = Self::new();
        for c in it {
            m.add(c, 1);
        }
        m
    }

    pub fn add(&mut self, c: PathClass, mult: usize) {
        if mult > 0 {
            *self.parts.entry(c).or_insert(0) += mult;
        }
    }

    pub fn extend(&mut self, other: &ModuleMultiset, times: usize) {
        for (c, &m) in &other.parts {
            self.add(c.clone(), m * times);
        }
    }

    /// Removes up to `mult` copies; returns how many were removed.
    pub fn remove(&mut self, c: &PathClass, mult: usize) -> usize {
        let Some(have) = self.parts.get_mut(c) else {
            return 0;
        };
        let taken = mult.min(*have);
        *have -= taken;
        if *have == 0 {
            self.parts.remove(c);
        }
        taken
    }

    pub fn multiplicity(&self, c: &PathClass) -> usize {
        self.parts.get(c).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PathClass, usize)> {
        self.parts.iter().map(|(c, &m)| (c, m))
    }

    pub fn classes(&self) -> impl Iterator<Item = &PathClass> {
        self.parts.keys()
    }

    pub fn scaled(&self, k: usize) -> Self {
        let mut m = Self::new();
        m.extend(self, k);
        m
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut m = self.clone();
        m.extend(other, 1);
        m
    }

    /// `self − other`, or `None` if `other` is not contained in `self`.
    pub fn difference(&self, other: &Self) -> Option<Self> {
        let mut m = self.clone();
        for (c, k) in other.iter() {
            if m.remove(c, k) != k {
                return None;
            }
        }
        Some(m)
    }
}

/// Outcome of a periodicity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Periodicity {
    pub periodic: bool,
    pub period: Option<usize>,
    /// Number of syzygy steps taken before deciding.
    pub steps: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlobalDimension {
    pub value: Dim,
    /// Closed formula value for truncated algebras.
    pub formula: Option<Dim>,
}

pub const DEFAULT_MAX_STEPS: usize = 1000;

/// Syzygy calculus over a fixed monomial or truncated algebra, with memoized syzygies and pds.
pub struct Calculus<'a> {
    alg: &'a Algebra,
    syzygies: RefCell<HashMap<PathClass, ModuleMultiset>>,
    pds: RefCell<HashMap<PathClass, Dim>>,
}

impl<'a> Calculus<'a> {
    pub fn new(alg: &'a Algebra) -> Result<Self> {
        alg.require_monomial("path-module calculus")?;
        Ok(Calculus {
            alg,
            syzygies: RefCell::new(HashMap::new()),
            pds: RefCell::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    /// All nonzero paths `c` from `v` with `pred(c)`, closed under prefixes by the caller's predicate.
    fn prefix_closed_from(&self, v: VertexId, keep: impl Fn(&Path) -> bool) -> Vec<Path> {
        let q = self.alg.quiver();
        let mut out = vec![Path::trivial(v)];
        let mut stack = vec![Path::trivial(v)];
        while let Some(c) = stack.pop() {
            for &a in q.out_arrows(c.target()) {
                let ext = c.then(&Path::arrow(q, a)).expect("arrow extends path");
                if !self.alg.is_zero_path(&ext) && keep(&ext) {
                    out.push(ext.clone());
                    stack.push(ext);
                }
            }
        }
        out
    }

    /// The class of the cyclic left ideal `Ap`.
    pub fn class_of(&self, p: &Path) -> Result<PathClass> {
        if self.alg.is_zero_path(p) {
            return Err(Error::ZeroPath(p.traversal_string(self.alg.quiver())));
        }
        let conts = self.prefix_closed_from(p.target(), |c| {
            !self.alg.is_zero_path(&p.then(c).expect("continuation starts at t(p)"))
        });
        Ok(PathClass::from_set(p.target(), conts))
    }

    pub fn simple(&self, v: VertexId) -> PathClass {
        PathClass::from_set(v, vec![Path::trivial(v)])
    }

    pub fn projective(&self, v: VertexId) -> PathClass {
        PathClass::from_set(v, self.prefix_closed_from(v, |_| true))
    }

    pub fn is_projective(&self, c: &PathClass) -> bool {
        c.continuations.len() == self.alg.basis_from(c.vertex).len()
    }

    /// Classes of all nonzero paths (trivial paths give the projectives) and all simples.
    pub fn all_classes(&self) -> Vec<PathClass> {
        let mut set: HashSet<PathClass> = HashSet::new();
        for p in self.alg.basis() {
            set.insert(self.class_of(p).expect("basis paths are nonzero"));
        }
        for v in 0..self.alg.quiver().vertex_count() {
            set.insert(self.simple(v));
        }
        let mut out: Vec<PathClass> = set.into_iter().collect();
        out.sort();
        out
    }

    /// The prefix-minimal nonzero paths from `v` outside the continuation set.
    pub fn syzygy_generators(&self, c: &PathClass) -> Vec<Path> {
        let inside: HashSet<&Path> = c.continuations.iter().collect();
        let q = self.alg.quiver();
        let mut out = Vec::new();
        for base in &c.continuations {
            for &a in q.out_arrows(base.target()) {
                let ext = base.then(&Path::arrow(q, a)).expect("arrow extends path");
                if !self.alg.is_zero_path(&ext) && !inside.contains(&ext) {
                    out.push(ext);
                }
            }
        }
        out.sort_by(|a, b| a.length_lex_cmp(b));
        out
    }

    /// `Ω` of a class: the multiset of classes of its syzygy generators; empty for projectives.
    pub fn syzygy(&self, c: &PathClass) -> ModuleMultiset {
        if let Some(m) = self.syzygies.borrow().get(c) {
            return m.clone();
        }
        let mut m = ModuleMultiset::new();
        for q in self.syzygy_generators(c) {
            m.add(self.class_of(&q).expect("generators are nonzero"), 1);
        }
        self.syzygies.borrow_mut().insert(c.clone(), m.clone());
        m
    }

    pub fn syzygy_simple(&self, v: VertexId) -> ModuleMultiset {
        self.syzygy(&self.simple(v))
    }

    /// Syzygy of a formal sum; projective summands contribute nothing.
    pub fn syzygy_multiset(&self, m: &ModuleMultiset) -> ModuleMultiset {
        let mut out = ModuleMultiset::new();
        for (c, k) in m.iter() {
            out.extend(&self.syzygy(c), k);
        }
        out
    }

    pub fn iterate_syzygy(&self, m: &ModuleMultiset, steps: usize) -> ModuleMultiset {
        let mut cur = m.clone();
        for _ in 0..steps {
            cur = self.syzygy_multiset(&cur);
        }
        cur
    }

    pub fn pd(&self, c: &PathClass) -> Dim {
        let mut on_stack = HashSet::new();
        self.pd_dfs(c, &mut on_stack)
    }

    fn pd_dfs(&self, c: &PathClass, on_stack: &mut HashSet<PathClass>) -> Dim {
        if let Some(&d) = self.pds.borrow().get(c) {
            return d;
        }
        if self.is_projective(c) {
            self.pds.borrow_mut().insert(c.clone(), Dim::Finite(0));
            return Dim::Finite(0);
        }
        if on_stack.contains(c) {
            return Dim::Infinite;
        }
        on_stack.insert(c.clone());
        let syz = self.syzygy(c);
        let mut best = Dim::Finite(0);
        for (d, _) in syz.iter() {
            best = best.max(self.pd_dfs(d, on_stack));
            if best == Dim::Infinite {
                break;
            }
        }
        on_stack.remove(c);
        let value = best.succ();
        self.pds.borrow_mut().insert(c.clone(), value);
        value
    }

    pub fn pd_multiset(&self, m: &ModuleMultiset) -> Dim {
        m.classes().map(|c| self.pd(c)).max().unwrap_or(Dim::Finite(0))
    }

    pub fn gldim(&self) -> Result<GlobalDimension> {
        let n = self.alg.quiver().vertex_count();
        let value = (0..n).map(|v| self.pd(&self.simple(v))).max().unwrap_or(Dim::Finite(0));
        let formula = self.alg.truncation().map(|k| truncated_gldim_formula(self.alg.quiver().analyze().longest_path, k));
        if let Some(f) = formula {
            if f != value {
                return Err(Error::Invariant(format!("gldim {value} disagrees with the truncated formula {f}")));
            }
        }
        Ok(GlobalDimension { value, formula })
    }

    /// Number of summands (with multiplicity) of infinite projective dimension.
    pub fn norm(&self, m: &ModuleMultiset) -> usize {
        m.iter().filter(|(c, _)| self.pd(c) == Dim::Infinite).map(|(_, k)| k).sum()
    }

    pub fn is_periodic(&self, m: &ModuleMultiset, max_steps: usize) -> Result<Periodicity> {
        let not = |steps| Periodicity {
            periodic: false,
            period: None,
            steps,
        };
        if m.is_empty() {
            return Ok(not(0));
        }
        let n0 = self.norm(m);
        let mut seen: HashSet<ModuleMultiset> = HashSet::new();
        let mut cur = m.clone();
        for t in 1..=max_steps {
            cur = self.syzygy_multiset(&cur);
            if cur == *m {
                return Ok(Periodicity {
                    periodic: true,
                    period: Some(t),
                    steps: t,
                });
            }
            if cur.is_empty() || self.norm(&cur) > n0 || !seen.insert(cur.clone()) {
                return Ok(not(t));
            }
        }
        Err(Error::Indeterminate(max_steps))
    }

    /// Classes reachable from the seed under syzygies (seed included).
    pub fn closure(&self, seed: &[PathClass]) -> Vec<PathClass> {
        let mut seen: HashSet<PathClass> = seed.iter().cloned().collect();
        let mut queue: VecDeque<PathClass> = seed.iter().cloned().collect();
        while let Some(c) = queue.pop_front() {
            for (d, _) in self.syzygy(&c).iter() {
                if seen.insert(d.clone()) {
                    queue.push_back(d.clone());
                }
            }
        }
        let mut out: Vec<PathClass> = seen.into_iter().collect();
        out.sort();
        out
    }

    /// A nonzero path `p` with `class_of(p) = c`, shortest first.
    pub fn representative(&self, c: &PathClass) -> Option<Path> {
        self.alg
            .basis()
            .iter()
            .filter(|p| p.target() == c.vertex)
            .find(|p| self.class_of(p).map(|d| d == *c).unwrap_or(false))
            .cloned()
    }

    /// `P_v`, `S_v`, `M[v,l]` for truncated algebras, otherwise `Ap @v {hash}`.
    pub fn label(&self, c: &PathClass) -> String {
        let q = self.alg.quiver();
        let v = q.vertex_name(c.vertex);
        if self.is_projective(c) {
            return format!("P_{v}");
        }
        if let Some(k) = self.alg.truncation() {
            let longest = c.continuations.iter().map(Path::len).max().unwrap_or(0);
            return format!("M[{v},{}]", k - 1 - longest);
        }
        if c.is_simple() {
            return format!("S_{v}");
        }
        format!("Ap @{v} {{{:016x}}}", self.class_hash(c))
    }

    /// Like [`label`](Self::label) but names generic classes `A·p` by a representative path.
    pub fn display_name(&self, c: &PathClass) -> String {
        let label = self.label(c);
        if !label.starts_with("Ap ") {
            return label;
        }
        match self.representative(c) {
            Some(p) => format!("A·{}", p.traversal_string(self.alg.quiver())),
            None => label,
        }
    }

    fn class_hash(&self, c: &PathClass) -> u64 {
        // FNV-1a over the traversal strings of the continuations
        let q = self.alg.quiver();
        let mut h: u64 = 0xcbf29ce484222325;
        for p in &c.continuations {
            for b in p.traversal_string(q).bytes().chain(std::iter::once(b'|')) {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        h
    }

    /// Sorted sum notation, e.g. `2·M[2,1] ⊕ P_1`; the zero module prints as `0`.
    pub fn format_multiset(&self, m: &ModuleMultiset) -> String {
        if m.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<(String, usize)> = m.iter().map(|(c, k)| (self.label(c), k)).collect();
        parts.sort();
        let mut out = String::new();
        for (i, (label, k)) in parts.iter().enumerate() {
            if i > 0 {
                out.push_str(" ⊕ ");
            }
            if *k > 1 {
                let _ = write!(out, "{k}·");
            }
            out.push_str(label);
        }
        out
    }
}

/// `2l/k` if `k | l`, else `2⌊l/k⌋ + 1`, for the longest path length `l`; infinite for cyclic quivers.
pub fn truncated_gldim_formula(longest_path: Dim, k: usize) -> Dim {
    match longest_path {
        Dim::Infinite => Dim::Infinite,
        Dim::Finite(l) if l % k == 0 => Dim::Finite(2 * l / k),
        Dim::Finite(l) => Dim::Finite(2 * (l / k) + 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IdealSpec;
    use crate::field::FieldSpec;
    use crate::quiver::Quiver;

    fn truncated(n: usize, edges: &[(usize, usize)], k: usize) -> Algebra {
        Algebra::new(Quiver::from_edges(n, edges), IdealSpec::Truncated(k), FieldSpec::Rationals).unwrap()
    }

    fn loop_pair() -> Algebra {
        let q = Quiver::new(
            &["1", "2"],
            &[("alpha", "1", "2"), ("beta", "2", "1"), ("gamma", "2", "2")],
        )
        .unwrap();
        let gens = vec![q.parse_path("beta.alpha").unwrap(), q.parse_path("gamma.gamma").unwrap()];
        Algebra::new(q, IdealSpec::Monomial(gens), FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn c2_classes_and_period() {
        let a = truncated(2, &[(0, 1), (1, 0)], 2);
        let calc = Calculus::new(&a).unwrap();
        let arrow = Path::arrow(a.quiver(), 0);
        let c = calc.class_of(&arrow).unwrap();
        assert_eq!(c, calc.simple(1));
        assert_eq!(calc.label(&c), "M[2,1]");
        assert_eq!(calc.syzygy(&calc.simple(1)), ModuleMultiset::single(calc.simple(0)));
        let s1 = ModuleMultiset::single(calc.simple(0));
        let per = calc.is_periodic(&s1, DEFAULT_MAX_STEPS).unwrap();
        assert_eq!((per.periodic, per.period), (true, Some(2)));
        let both = ModuleMultiset::from_classes([calc.simple(0), calc.simple(1)]);
        assert_eq!(calc.norm(&both), 2);
        assert_eq!(calc.norm(&both.scaled(2)), 4);
        assert_eq!(calc.gldim().unwrap().value, Dim::Infinite);
    }

    #[test]
    fn loop_pair_syzygies() {
        let a = loop_pair();
        let calc = Calculus::new(&a).unwrap();
        let q = a.quiver();
        let gamma = calc.class_of(&q.parse_path("gamma").unwrap()).unwrap();
        assert_eq!(gamma.dim_vector(&a), vec![1, 1]);
        assert_eq!(calc.syzygy(&gamma), ModuleMultiset::single(gamma.clone()));
        let per = calc.is_periodic(&ModuleMultiset::single(gamma.clone()), 10).unwrap();
        assert_eq!(per.period, Some(1));
        let beta = calc.class_of(&q.parse_path("beta").unwrap()).unwrap();
        let alpha = calc.class_of(&q.parse_path("alpha").unwrap()).unwrap();
        assert!(calc.is_projective(&alpha));
        assert_eq!(calc.syzygy(&beta), ModuleMultiset::single(alpha.clone()));
        assert_eq!(calc.pd(&beta), Dim::Finite(1));
        assert_eq!(calc.format_multiset(&ModuleMultiset::single(alpha)), "P_2");
        let proj_only = ModuleMultiset::single(calc.projective(0));
        assert!(!calc.is_periodic(&proj_only, 10).unwrap().periodic);
    }

    #[test]
    fn gldim_formula_examples() {
        let a3 = truncated(3, &[(0, 1), (1, 2)], 2);
        let g = Calculus::new(&a3).unwrap().gldim().unwrap();
        assert_eq!((g.value, g.formula), (Dim::Finite(2), Some(Dim::Finite(2))));
        let a4 = truncated(4, &[(0, 1), (1, 2), (2, 3)], 2);
        assert_eq!(Calculus::new(&a4).unwrap().gldim().unwrap().value, Dim::Finite(3));
        assert_eq!(truncated_gldim_formula(Dim::Finite(3), 2), Dim::Finite(3));
    }

    #[test]
    fn syzygy_of_simple_is_arrows() {
        let c3 = truncated(3, &[(0, 1), (1, 2), (2, 0)], 2);
        let calc = Calculus::new(&c3).unwrap();
        assert_eq!(calc.syzygy_simple(0), ModuleMultiset::single(calc.simple(1)));
        let a2 = truncated(2, &[(0, 1)], 2);
        let calc = Calculus::new(&a2).unwrap();
        assert!(calc.syzygy_simple(1).is_empty());
    }

    #[test]
    fn truncated_remark_index_set() {
        // Ω(M^l_v) = ⊕_{σ: s(σ)=v, l(σ)=k−l} M^{k−l}_{t(σ)}
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 0)]);
        let k = 3;
        let a = Algebra::new(q, IdealSpec::Truncated(k), FieldSpec::Rationals).unwrap();
        let calc = Calculus::new(&a).unwrap();
        for p in a.basis().iter().filter(|p| !p.is_trivial()) {
            let c = calc.class_of(p).unwrap();
            let l = p.len();
            let sigmas: Vec<&Path> = a.basis().iter().filter(|s| s.source() == p.target() && s.len() == k - l).collect();
            let mut want = ModuleMultiset::new();
            for s in sigmas {
                want.add(calc.class_of(s).unwrap(), 1);
            }
            assert_eq!(calc.syzygy(&c), want);
        }
    }
}
