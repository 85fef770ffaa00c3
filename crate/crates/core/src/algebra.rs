//! Bound quiver algebras `kQ/I` with an explicit basis and path reduction.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::field::{Field, FieldSpec};
use crate::matrix::{self, Matrix};
use crate::quiver::{paths_up_to, ArrowId, Path, Quiver, VertexId};
use crate::{with_field, Error, Result};

/// A linear combination of parallel paths, each of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(BigRational, Path)>,
}

impl Relation {
    pub fn endpoints(&self) -> Option<(VertexId, VertexId)> {
        self.terms.first().map(|(_, p)| (p.source(), p.target()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].1.len() == w[1].1.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSpec {
    /// `I = J^k`.
    Truncated(usize),
    /// Generated by the given paths.
    Monomial(Vec<Path>),
    /// Generated by the relations together with `J^nilpotency`.
    Relations { relations: Vec<Relation>, nilpotency: usize },
}

impl IdealSpec {
    pub fn kind(&self) -> &'static str {
        match self {
            IdealSpec::Truncated(_) => "truncated",
            IdealSpec::Monomial(_) => "monomial",
            IdealSpec::Relations { .. } => "relations",
        }
    }
}

/// Sparse coordinates in the algebra basis; prime-field coefficients are stored as residues.
pub type Coords = Vec<(usize, BigRational)>;

#[derive(Clone, Debug)]
pub struct Algebra {
    quiver: Quiver,
    ideal: IdealSpec,
    field: FieldSpec,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// Reductions of every path of length below the nilpotency bound (relations algebras only).
    reductions: HashMap<Path, Coords>,
    warnings: Vec<String>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.ideal == other.ideal && self.field == other.field
    }
}

impl Eq for Algebra {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilators {
    /// Prefix-minimal `q` with `s(q) = t(p)` such that traversing `p` then `q` is zero.
    pub left: Vec<Path>,
    /// Suffix-minimal `q` with `t(q) = s(p)` such that traversing `q` then `p` is zero.
    pub right: Vec<Path>,
}

impl Algebra {
    pub fn new(quiver: Quiver, ideal: IdealSpec, field: FieldSpec) -> Result<Self> {
        if let FieldSpec::Prime(p) = field {
            if FieldSpec::prime(p).is_none() {
                return Err(Error::InvalidQuiver(format!("{p} is not an odd prime below 2^31")));
            }
        }
        let mut alg = Algebra {
            quiver,
            ideal,
            field,
            basis: Vec::new(),
            index: HashMap::new(),
            reductions: HashMap::new(),
            warnings: Vec::new(),
        };
        match alg.ideal.clone() {
            IdealSpec::Truncated(k) => {
                if k < 2 {
                    return Err(Error::NotAdmissible(format!("truncation exponent {k} must be at least 2")));
                }
                alg.basis = alg.enumerate_monomial_basis()?;
            }
            IdealSpec::Monomial(gens) => {
                for g in &gens {
                    if g.len() < 2 {
                        return Err(Error::NotAdmissible(format!(
                            "monomial generator {} has length {}",
                            g.traversal_string(&alg.quiver),
                            g.len()
                        )));
                    }
                }
                alg.basis = alg.enumerate_monomial_basis()?;
            }
            IdealSpec::Relations { relations, nilpotency } => {
                let relations = alg.normalize_relations(relations, nilpotency)?;
                alg.ideal = IdealSpec::Relations {
                    relations: relations.clone(),
                    nilpotency,
                };
                let (basis, reductions, warnings) = with_field!(alg.field, f => {
                    relations_basis(&f, &alg.quiver, &relations, nilpotency)
                })?;
                alg.basis = basis;
                alg.reductions = reductions;
                alg.warnings = warnings;
            }
        }
        alg.index = alg.basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        if !alg.is_monomial() && !alg.check_associativity(500, 0) {
            return Err(Error::Invariant("structure constants are not associative".into()));
        }
        Ok(alg)
    }

    fn normalize_relations(&self, relations: Vec<Relation>, nilpotency: usize) -> Result<Vec<Relation>> {
        if nilpotency < 2 {
            return Err(Error::NotAdmissible(format!("nilpotency bound {nilpotency} must be at least 2")));
        }
        let q = &self.quiver;
        let mut out = Vec::new();
        for (n, rel) in relations.into_iter().enumerate() {
            let Some((s, t)) = rel.endpoints() else {
                return Err(Error::BadRelation(format!("relation {} is empty", n + 1)));
            };
            let mut merged: Vec<(BigRational, Path)> = Vec::new();
            for (c, p) in rel.terms {
                if p.len() < 2 {
                    return Err(Error::NotAdmissible(format!(
                        "relation {} has term {} of length {}",
                        n + 1,
                        p.traversal_string(q),
                        p.len()
                    )));
                }
                if p.source() != s || p.target() != t {
                    return Err(Error::BadRelation(format!(
                        "relation {} mixes endpoints: {} does not run from {} to {}",
                        n + 1,
                        p.traversal_string(q),
                        q.vertex_name(s),
                        q.vertex_name(t)
                    )));
                }
                if let FieldSpec::Prime(pr) = self.field {
                    let f = crate::field::PrimeField::new(pr).expect("validated prime");
                    if f.from_rational(&c).is_none() {
                        return Err(Error::BadRelation(format!(
                            "coefficient {} is undefined modulo {pr}",
                            crate::field::format_rational(&c)
                        )));
                    }
                }
                match merged.iter_mut().find(|(_, x)| *x == p) {
                    Some(entry) => entry.0 += c,
                    None => merged.push((c, p)),
                }
            }
            merged.retain(|(c, _)| !c.is_zero());
            if merged.is_empty() {
                return Err(Error::BadRelation(format!("relation {} has all coefficients zero", n + 1)));
            }
            out.push(Relation { terms: merged });
        }
        Ok(out)
    }

    fn enumerate_monomial_basis(&self) -> Result<Vec<Path>> {
        let q = &self.quiver;
        let m = match &self.ideal {
            IdealSpec::Monomial(g) => Some(g.iter().map(|p| p.len()).max().unwrap_or(2).max(2)),
            _ => None,
        };
        let mut basis: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
        let mut frontier = basis.clone();
        let mut bound = None;
        let mut len = 0;
        while !frontier.is_empty() {
            if let Some(m) = m.filter(|&m| len == m - 1) {
                // a nonzero path this long revisits a state of the last m-1 arrows
                bound = Some(frontier.len() + m - 1);
            }
            if let Some(b) = bound {
                if len >= b {
                    return Err(Error::InfiniteDimensional(frontier[0].traversal_string(q)));
                }
            }
            let mut next = Vec::new();
            for p in &frontier {
                for &a in q.out_arrows(p.target()) {
                    let ext = p.then(&Path::arrow(q, a)).expect("arrow extends path");
                    if !self.ends_in_generator(&ext) {
                        next.push(ext);
                    }
                }
            }
            basis.extend(next.iter().cloned());
            frontier = next;
            len += 1;
        }
        basis.sort_by(|a, b| a.length_lex_cmp(b));
        Ok(basis)
    }

    fn ends_in_generator(&self, p: &Path) -> bool {
        match &self.ideal {
            IdealSpec::Truncated(k) => p.len() >= *k,
            IdealSpec::Monomial(gens) => gens.iter().any(|g| g.is_suffix_of(p)),
            IdealSpec::Relations { .. } => false,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn ideal(&self) -> &IdealSpec {
        &self.ideal
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Truncated or monomial ideal, where nonzero paths form a basis.
    pub fn is_monomial(&self) -> bool {
        !matches!(self.ideal, IdealSpec::Relations { .. })
    }

    pub fn truncation(&self) -> Option<usize> {
        match self.ideal {
            IdealSpec::Truncated(k) => Some(k),
            _ => None,
        }
    }

    pub fn require_monomial(&self, op: &'static str) -> Result<()> {
        if self.is_monomial() {
            Ok(())
        } else {
            Err(Error::UnsupportedIdeal(op))
        }
    }

    /// Length of the longest basis path.
    pub fn loewy_bound(&self) -> usize {
        self.basis.iter().map(Path::len).max().unwrap_or(0)
    }

    pub fn is_zero_path(&self, p: &Path) -> bool {
        match &self.ideal {
            IdealSpec::Truncated(k) => p.len() >= *k,
            IdealSpec::Monomial(gens) => gens.iter().any(|g| p.contains_factor(g)),
            IdealSpec::Relations { nilpotency, .. } => {
                p.len() >= *nilpotency || self.reductions.get(p).is_none_or(|c| c.is_empty())
            }
        }
    }

    /// Coordinates of the coset of `p` in the basis.
    pub fn reduce(&self, p: &Path) -> Coords {
        if self.is_monomial() {
            return match self.index.get(p) {
                Some(&i) => vec![(i, BigRational::one())],
                None => Vec::new(),
            };
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Basis indices of paths starting at `v`: a basis of `P_v = A e_v`.
    pub fn basis_from(&self, v: VertexId) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source() == v).collect()
    }

    /// Basis indices of paths ending at `v`: a basis of `e_v A`.
    pub fn basis_to(&self, v: VertexId) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].target() == v).collect()
    }

    /// Basis product `b_i · b_j` (traverse `b_j`, then `b_i`).
    pub fn basis_product(&self, i: usize, j: usize) -> Coords {
        match self.basis[j].then(&self.basis[i]) {
            Some(p) => self.reduce(&p),
            None => Vec::new(),
        }
    }

    /// Bilinear product of coefficient vectors in the algebra basis.
    pub fn multiply<F: Field>(&self, f: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "coefficient vectors must match the basis");
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !f.is_zero(c)) {
                let c = f.mul(xi, yj);
                for (k, s) in self.basis_product(i, j) {
                    let s = f.from_rational(&s).expect("structure constants live in the field");
                    out[k] = f.add(&out[k], &f.mul(&c, &s));
                }
            }
        }
        out
    }

    /// Coordinates of a relation-style combination of paths, over `f`.
    pub fn evaluate_combination<F: Field>(&self, f: &F, terms: &[(BigRational, Path)]) -> Vec<F::Elem> {
        let mut out = vec![f.zero(); self.dim()];
        for (c, p) in terms {
            let c = f.from_rational(c).expect("coefficient lives in the field");
            for (k, s) in self.reduce(p) {
                let s = f.from_rational(&s).expect("structure constant lives in the field");
                out[k] = f.add(&out[k], &f.mul(&c, &s));
            }
        }
        out
    }

    /// Samples basis triples and checks `(xy)z = x(yz)`.
    pub fn check_associativity(&self, samples: usize, seed: u64) -> bool {
        with_field!(self.field, f => {
            let n = self.dim();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples).all(|_| {
                let unit = |i: usize| {
                    let mut v = vec![f.zero(); n];
                    v[i] = f.one();
                    v
                };
                let (x, y, z) = (unit(rng.gen_range(0..n)), unit(rng.gen_range(0..n)), unit(rng.gen_range(0..n)));
                self.multiply(&f, &self.multiply(&f, &x, &y), &z) == self.multiply(&f, &x, &self.multiply(&f, &y, &z))
            })
        })
    }

    /// `L(p)` and `R(p)` for a monomial or truncated algebra.
    pub fn annihilator_sets(&self, p: &Path) -> Result<Annihilators> {
        self.require_monomial("annihilator_sets")?;
        if self.is_zero_path(p) {
            return Err(Error::ZeroPath(p.traversal_string(&self.quiver)));
        }
        let q = &self.quiver;
        let mut left = Vec::new();
        let mut stack = vec![Path::trivial(p.target())];
        while let Some(c) = stack.pop() {
            for &a in q.out_arrows(c.target()) {
                let ext = c.then(&Path::arrow(q, a)).expect("arrow extends path");
                if self.is_zero_path(&ext) {
                    continue;
                }
                if self.is_zero_path(&p.then(&ext).expect("composable")) {
                    left.push(ext);
                } else {
                    stack.push(ext);
                }
            }
        }
        let mut right = Vec::new();
        let mut stack = vec![Path::trivial(p.source())];
        while let Some(c) = stack.pop() {
            for &a in q.in_arrows(c.source()) {
                let ext = Path::arrow(q, a).then(&c).expect("arrow extends path");
                if self.is_zero_path(&ext) {
                    continue;
                }
                if self.is_zero_path(&ext.then(p).expect("composable")) {
                    right.push(ext);
                } else {
                    stack.push(ext);
                }
            }
        }
        left.sort_by(|a, b| a.length_lex_cmp(b));
        right.sort_by(|a, b| a.length_lex_cmp(b));
        Ok(Annihilators { left, right })
    }

    /// The algebra `e A e` for the idempotent of a convex vertex set (no path leaves and returns).
    pub fn restrict_to(&self, vertices: &[VertexId]) -> Result<Algebra> {
        let sub = self.quiver.full_subquiver(vertices);
        let arrow_pos: HashMap<ArrowId, ArrowId> =
            sub.arrow_map.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let map_path = |p: &Path| -> Option<Path> {
            let arrows = p
                .arrows()
                .iter()
                .map(|a| arrow_pos.get(a).copied())
                .collect::<Option<Vec<_>>>()?;
            Path::from_arrows(&sub.quiver, arrows).ok()
        };
        let ideal = match &self.ideal {
            IdealSpec::Truncated(k) => IdealSpec::Truncated(*k),
            IdealSpec::Monomial(gens) => IdealSpec::Monomial(gens.iter().filter_map(map_path).collect()),
            IdealSpec::Relations { relations, nilpotency } => IdealSpec::Relations {
                relations: relations
                    .iter()
                    .filter_map(|r| {
                        let terms = r
                            .terms
                            .iter()
                            .map(|(c, p)| map_path(p).map(|p| (c.clone(), p)))
                            .collect::<Option<Vec<_>>>()?;
                        Some(Relation { terms })
                    })
                    .collect(),
                nilpotency: *nilpotency,
            },
        };
        Algebra::new(sub.quiver, ideal, self.field)
    }

    /// Structure constants `b_i · b_j = Σ c_k b_k` as `[i, j, k, "c"]` entries.
    pub fn structure_constants_json(&self) -> Value {
        let mut entries = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, c) in self.basis_product(i, j) {
                    entries.push(json!([i, j, k, crate::field::format_rational(&c)]));
                }
            }
        }
        json!({
            "field": self.field.to_string(),
            "basis": self.basis.iter().map(|p| p.traversal_string(&self.quiver)).collect::<Vec<_>>(),
            "products": entries,
        })
    }
}

type RelationsBasis = (Vec<Path>, HashMap<Path, Coords>, Vec<String>);

/// Row-reduces the span of `u·r·v` truncated below `n`, pivoting on longest paths first.
fn relations_basis<F: Field>(f: &F, q: &Quiver, relations: &[Relation], n: usize) -> Result<RelationsBasis> {
    let mut paths = paths_up_to(q, n - 1);
    paths.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.length_lex_cmp(b)));
    let col: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let ending_at = |v: VertexId| paths.iter().filter(move |p| p.target() == v);
    let starting_at = |v: VertexId| paths.iter().filter(move |p| p.source() == v);

    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    let mut seen = HashSet::new();
    for r in relations {
        let (s, t) = r.endpoints().expect("relations are nonempty");
        for u in ending_at(s) {
            for v in starting_at(t) {
                let mut row = vec![f.zero(); paths.len()];
                let mut any = false;
                for (c, p) in &r.terms {
                    let full = u.then(p).and_then(|x| x.then(v)).expect("composable");
                    if full.len() >= n {
                        continue;
                    }
                    let c = f.from_rational(c).expect("coefficients checked");
                    let j = col[&full];
                    row[j] = f.add(&row[j], &c);
                    any = true;
                }
                if any && row.iter().any(|x| !f.is_zero(x)) && seen.insert(row.clone()) {
                    rows.push(row);
                }
            }
        }
    }
    let m = Matrix::from_rows(rows, paths.len());
    let (r, pivots) = matrix::rref(f, &m);
    let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
    let mut basis: Vec<Path> = (0..paths.len())
        .filter(|j| !pivot_set.contains(j))
        .map(|j| paths[j].clone())
        .collect();
    basis.sort_by(|a, b| a.length_lex_cmp(b));
    let bidx: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut reductions = HashMap::new();
    for p in &paths {
        if let Some(&i) = bidx.get(p) {
            reductions.insert(p.clone(), vec![(i, BigRational::one())]);
        }
    }
    for (row, &pc) in pivots.iter().enumerate() {
        let mut coords: Coords = Vec::new();
        for j in 0..paths.len() {
            if j != pc && !f.is_zero(&r[(row, j)]) {
                let i = bidx[&paths[j]];
                coords.push((i, f.to_rational(&f.neg(&r[(row, j)]))));
            }
        }
        coords.sort_by_key(|(i, _)| *i);
        reductions.insert(paths[pc].clone(), coords);
    }

    let mut warnings = Vec::new();
    if relations.iter().all(Relation::is_homogeneous) {
        let implied = homogeneous_component_full(f, q, relations, n);
        if !implied {
            warnings.push(format!(
                "the listed relations do not contain every path of length {n}; J^{n} is added to the ideal"
            ));
        }
    }
    Ok((basis, reductions, warnings))
}

/// Whether the degree-`n` part of the ideal generated by homogeneous relations is all of `J^n`.
fn homogeneous_component_full<F: Field>(f: &F, q: &Quiver, relations: &[Relation], n: usize) -> bool {
    let all = paths_up_to(q, n);
    let top: Vec<&Path> = all.iter().filter(|p| p.len() == n).collect();
    if top.is_empty() {
        return true;
    }
    let col: HashMap<&Path, usize> = top.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut rows = Vec::new();
    for r in relations {
        let (s, t) = r.endpoints().expect("relations are nonempty");
        let deg = r.terms[0].1.len();
        if deg > n {
            continue;
        }
        for u in all.iter().filter(|p| p.target() == s && p.len() <= n - deg) {
            for v in all.iter().filter(|p| p.source() == t && p.len() == n - deg - u.len()) {
                let mut row = vec![f.zero(); top.len()];
                for (c, p) in &r.terms {
                    let full = u.then(p).and_then(|x| x.then(v)).expect("composable");
                    let j = col[&full];
                    row[j] = f.add(&row[j], &f.from_rational(c).expect("coefficients checked"));
                }
                rows.push(row);
            }
        }
    }
    let m = Matrix::from_rows(rows, top.len());
    matrix::rank(f, &m) == top.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{parse_rational, Rationals};

    fn loop_pair() -> Algebra {
        let q = Quiver::new(
            &["1", "2"],
            &[("alpha", "1", "2"), ("beta", "2", "1"), ("gamma", "2", "2")],
        )
        .unwrap();
        let gens = vec![q.parse_path("beta.alpha").unwrap(), q.parse_path("gamma.gamma").unwrap()];
        Algebra::new(q, IdealSpec::Monomial(gens), FieldSpec::Rationals).unwrap()
    }

    fn names(a: &Algebra, ps: &[Path]) -> Vec<String> {
        ps.iter().map(|p| p.traversal_string(a.quiver())).collect()
    }

    #[test]
    fn c2_truncated_basis() {
        let q = Quiver::from_edges(2, &[(0, 1), (1, 0)]);
        let a = Algebra::new(q, IdealSpec::Truncated(2), FieldSpec::Rationals).unwrap();
        assert_eq!(a.dim(), 4);
        let p = Path::arrow(a.quiver(), 0);
        let ann = a.annihilator_sets(&p).unwrap();
        assert_eq!(names(&a, &ann.left), vec!["a2"]);
        assert_eq!(names(&a, &ann.right), vec!["a2"]);
    }

    #[test]
    fn loop_pair_basis_and_annihilators() {
        let a = loop_pair();
        let mut got = names(&a, a.basis());
        got.sort();
        let mut want = vec!["e_1", "e_2", "alpha", "beta", "gamma", "alpha.beta", "alpha.gamma", "gamma.beta", "alpha.gamma.beta"];
        want.sort();
        assert_eq!(got, want);
        let q = a.quiver();
        let gamma = q.parse_path("gamma").unwrap();
        let ann = a.annihilator_sets(&gamma).unwrap();
        assert_eq!(names(&a, &ann.left), vec!["gamma"]);
        assert_eq!(names(&a, &ann.right), vec!["gamma"]);
        let alpha = q.parse_path("alpha").unwrap();
        let ann = a.annihilator_sets(&alpha).unwrap();
        assert!(ann.left.is_empty());
        assert_eq!(names(&a, &ann.right), vec!["beta"]);
        assert!(matches!(
            a.annihilator_sets(&q.parse_path("gamma.gamma").unwrap()),
            Err(Error::ZeroPath(_))
        ));
        let f = Rationals;
        let g = a.basis_index(&gamma).unwrap();
        let mut x = vec![f.zero(); a.dim()];
        x[g] = f.one();
        assert!(a.multiply(&f, &x, &x).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn monomial_infinite_dimension_detected() {
        let q = Quiver::from_edges(2, &[(0, 1), (1, 0)]);
        let gens = vec![q.parse_path("a1.a2.a1.a2.a1").unwrap()];
        assert!(Algebra::new(q.clone(), IdealSpec::Monomial(gens), FieldSpec::Rationals).is_ok());
        let q2 = Quiver::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1)]);
        let gens = vec![q2.parse_path("a1.a3").unwrap()];
        assert!(matches!(
            Algebra::new(q2, IdealSpec::Monomial(gens), FieldSpec::Rationals),
            Err(Error::InfiniteDimensional(_))
        ));
        assert!(matches!(
            Algebra::new(q.clone(), IdealSpec::Monomial(vec![Path::arrow(&q, 0)]), FieldSpec::Rationals),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn relations_commutative_square() {
        let q = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let rel = Relation {
            terms: vec![
                (parse_rational("1").unwrap(), q.parse_path("a.b").unwrap()),
                (parse_rational("-1").unwrap(), q.parse_path("c.d").unwrap()),
            ],
        };
        let a = Algebra::new(
            q.clone(),
            IdealSpec::Relations { relations: vec![rel.clone()], nilpotency: 3 },
            FieldSpec::Rationals,
        )
        .unwrap();
        assert_eq!(a.dim(), 4 + 4 + 1);
        let f = Rationals;
        assert!(a.evaluate_combination(&f, &rel.terms).iter().all(|c| c.is_zero()));
        assert!(a.warnings().is_empty());
        let bad = Relation {
            terms: vec![
                (parse_rational("1").unwrap(), q.parse_path("a.b").unwrap()),
                (parse_rational("1").unwrap(), q.parse_path("a").unwrap()),
            ],
        };
        assert!(Algebra::new(q, IdealSpec::Relations { relations: vec![bad], nilpotency: 3 }, FieldSpec::Rationals).is_err());
    }
}
