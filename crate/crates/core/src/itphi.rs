//! The Igusa–Todorov function φ.
//!
//! Everything reduces to one computation: given generators `G` inside a free
//! abelian group with an endomorphism `T` (the syzygy map modulo projectives),
//! the ranks `r_l = rank T^l G` are non-increasing and constant from the
//! ambient rank on, and `φ = min{l : r_l = r_∞}`. Ranks are taken over the
//! rationals.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, Rationals};
use crate::linrep::{Linrep, PdOutcome, Rep};
use crate::matrix::{self, Matrix};
use crate::pathcalc::{Calculus, ModuleMultiset, PathClass};
use crate::quiver::{Path, VertexId};

type Sparse<S> = BTreeMap<S, BigRational>;

/// `r_0, …, r_len` for the spans of `T^l G`; the spanning set is pruned to a basis after each step.
fn rank_sequence_by<S, T>(gens: Vec<Sparse<S>>, step: T, len: usize) -> Vec<usize>
where
    S: Ord + Clone,
    T: Fn(&Sparse<S>) -> Sparse<S>,
{
    let mut current = gens;
    let mut out = Vec::with_capacity(len + 1);
    for l in 0..=len {
        let basis = independent(&current);
        out.push(basis.len());
        if l == len {
            break;
        }
        current = basis.iter().map(&step).collect();
    }
    out
}

fn independent<S: Ord + Clone>(vs: &[Sparse<S>]) -> Vec<Sparse<S>> {
    let nonzero: Vec<&Sparse<S>> = vs.iter().filter(|v| v.values().any(|c| !c.is_zero())).collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    let symbols: BTreeSet<&S> = nonzero.iter().flat_map(|v| v.keys()).collect();
    let pos: BTreeMap<&S, usize> = symbols.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let f = Rationals;
    let cols: Vec<Vec<BigRational>> = nonzero
        .iter()
        .map(|v| {
            let mut c = vec![BigRational::zero(); pos.len()];
            for (s, x) in v.iter() {
                c[pos[s]] = x.clone();
            }
            c
        })
        .collect();
    let m = Matrix::from_columns(&f, pos.len(), &cols);
    matrix::independent_columns(&f, &m).into_iter().map(|j| nonzero[j].clone()).collect()
}

fn stabilization(ranks: &[usize], horizon: usize) -> usize {
    let limit = ranks[horizon];
    ranks.iter().position(|&r| r == limit).unwrap_or(horizon)
}

fn unit<S: Ord>(s: S) -> Sparse<S> {
    let mut v = BTreeMap::new();
    v.insert(s, BigRational::one());
    v
}

/// Free abelian group on the non-projective classes of a syzygy-closed set, with `Ω̄`.
#[derive(Clone, Debug)]
pub struct K0Lattice {
    basis: Vec<PathClass>,
    index: HashMap<PathClass, usize>,
    /// `columns[c]` lists `(row, multiplicity)` of the syzygy of basis class `c`.
    columns: Vec<Vec<(usize, usize)>>,
}

impl K0Lattice {
    pub fn basis(&self) -> &[PathClass] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, c: &PathClass) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.columns[col].iter().find(|(r, _)| *r == row).map(|(_, k)| *k).unwrap_or(0)
    }

    /// Nonzero entries of `T` as `(row, column, value)`.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = self
            .columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, k)| (r, c, k)))
            .collect();
        out.sort();
        out
    }

    fn apply(&self, v: &Sparse<usize>) -> Sparse<usize> {
        let mut out: Sparse<usize> = BTreeMap::new();
        for (&c, x) in v {
            for &(r, k) in &self.columns[c] {
                let e = out.entry(r).or_insert_with(BigRational::zero);
                *e += x * BigRational::from_integer(k.into());
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// Ranks of `T^l` applied to the given basis generators, `l = 0..=len`.
    pub fn rank_sequence(&self, gens: &[usize], len: usize) -> Vec<usize> {
        let vs = gens.iter().map(|&g| unit(g)).collect();
        rank_sequence_by(vs, |v| self.apply(v), len)
    }

    /// `min{l : r_l = r_d}` for the given generators, with `d` the lattice rank.
    pub fn stable_index(&self, gens: &[usize]) -> usize {
        let d = self.rank();
        stabilization(&self.rank_sequence(gens, d), d)
    }

    /// Computes ranks up to `2d` and confirms they are constant from `d` on.
    pub fn confirm_stabilization(&self, gens: &[usize]) -> bool {
        let d = self.rank();
        let ranks = self.rank_sequence(gens, 2 * d);
        ranks[d..].iter().all(|&r| r == ranks[d]) && ranks.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn all_generators(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        let d = self.rank();
        self.rank_sequence(&self.all_generators(), d)[d] == 0
    }
}

/// Closes the seed under syzygies and keeps the non-projective classes.
pub fn build_lattice(calc: &Calculus, seed: &[PathClass]) -> K0Lattice {
    let basis: Vec<PathClass> = calc.closure(seed).into_iter().filter(|c| !calc.is_projective(c)).collect();
    let index: HashMap<PathClass, usize> = basis.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let columns = basis
        .iter()
        .map(|c| {
            let mut col: Vec<(usize, usize)> =
                calc.syzygy(c).iter().filter_map(|(d, k)| index.get(d).map(|&r| (r, k))).collect();
            col.sort();
            col
        })
        .collect();
    K0Lattice { basis, index, columns }
}

#[derive(Clone, Debug)]
pub struct PhiReport {
    pub value: usize,
    pub ranks: Vec<usize>,
    pub lattice: K0Lattice,
    pub generators: Vec<usize>,
}

fn distinct_nonprojective(calc: &Calculus, m: &ModuleMultiset) -> Vec<PathClass> {
    m.classes().filter(|c| !calc.is_projective(c)).cloned().collect()
}

/// φ of a multiset of path classes, with the rank sequence it was read from.
pub fn phi_report(calc: &Calculus, m: &ModuleMultiset) -> PhiReport {
    let seed = distinct_nonprojective(calc, m);
    let lattice = build_lattice(calc, &seed);
    let generators: Vec<usize> = seed.iter().filter_map(|c| lattice.index_of(c)).collect();
    let d = lattice.rank();
    let ranks = lattice.rank_sequence(&generators, d);
    let value = stabilization(&ranks, d);
    PhiReport { value, ranks, lattice, generators }
}

pub fn phi(calc: &Calculus, m: &ModuleMultiset) -> usize {
    phi_report(calc, m).value
}

/// φ-dimension of the additive closure of the syzygy orbit of the seed.
pub fn phidim_subcat(calc: &Calculus, seed: &[PathClass]) -> usize {
    let lattice = build_lattice(calc, seed);
    lattice.stable_index(&lattice.all_generators())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhidimBounds {
    pub lower: usize,
    pub upper: Option<usize>,
    /// A multiset attaining the lower bound, when it is positive.
    pub lower_witness: Option<String>,
}

/// Bounds on φdim(A) for monomial and truncated algebras.
pub fn phidim_bounds(calc: &Calculus) -> PhidimBounds {
    let alg = calc.algebra();
    let all = calc.all_classes();
    let lattice = build_lattice(calc, &all);
    let d = lattice.rank();
    let slack = if alg.truncation().is_some() { 1 } else { 2 };
    let upper = lattice.stable_index(&lattice.all_generators()) + slack;

    let nonproj: Vec<usize> = (0..d).collect();
    let mut samples: Vec<Vec<usize>> = nonproj.iter().map(|&i| vec![i]).collect();
    for i in 0..d {
        for j in i + 1..d {
            samples.push(vec![i, j]);
        }
    }
    let simples: Vec<usize> = (0..alg.quiver().vertex_count())
        .filter_map(|v| lattice.index_of(&calc.simple(v)))
        .collect();
    for size in 3..=4.min(simples.len()) {
        for combo in combinations(simples.len(), size) {
            samples.push(combo.into_iter().map(|i| simples[i]).collect());
        }
    }
    let mut lower = 0;
    let mut lower_witness = None;
    for s in samples {
        let v = lattice.stable_index(&s);
        if v > lower {
            lower = v;
            let labels: Vec<String> = s.iter().map(|&i| calc.display_name(&lattice.basis()[i])).collect();
            lower_witness = Some(labels.join(" ⊕ "));
        }
    }
    PhidimBounds { lower, upper: Some(upper), lower_witness }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// A named indecomposable for catalog-based φ. Terminal entries are not resolved further:
/// their syzygy orbits are modelled as fresh independent symbols.
#[derive(Clone, Debug)]
pub struct CatalogEntry<E> {
    pub name: String,
    pub rep: Rep<E>,
    pub terminal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Sym {
    Class(usize),
    Orbit(usize, usize),
}

#[derive(Clone, Debug)]
pub struct HybridPhi {
    pub value: usize,
    pub ranks: Vec<usize>,
    pub horizon: usize,
    /// Names of the non-projective classes reached, in discovery order.
    pub classes: Vec<String>,
    /// `Ω(name) = …` for every resolved class.
    pub syzygies: Vec<(String, String)>,
}

/// φ of a direct sum of representations, using certified decompositions against a catalog.
pub fn phi_hybrid<F: Field>(
    lr: &Linrep<F>,
    summands: &[Rep<F::Elem>],
    catalog: &[CatalogEntry<F::Elem>],
) -> Result<HybridPhi> {
    let n = lr.algebra().quiver().vertex_count();
    let mut entries: Vec<CatalogEntry<F::Elem>> = (0..n)
        .map(|v| CatalogEntry {
            name: format!("P_{}", lr.algebra().quiver().vertex_name(v)),
            rep: lr.projective(v),
            terminal: true,
        })
        .collect();
    for e in catalog {
        let dup = entries
            .iter()
            .any(|x| x.rep.dims == e.rep.dims && lr.iso_test(&x.rep, &e.rep).is_isomorphic());
        if !dup {
            entries.push(e.clone());
        }
    }
    let reps: Vec<Rep<F::Elem>> = entries.iter().map(|e| e.rep.clone()).collect();
    let decompose = |m: &Rep<F::Elem>| -> Result<Vec<(usize, usize)>> {
        if m.is_zero() {
            return Ok(Vec::new());
        }
        let dec = lr.decompose_against_catalog(m, &reps)?;
        Ok(dec.parts.into_iter().filter(|&(i, _)| i >= n).collect())
    };

    let mut gens: BTreeSet<usize> = BTreeSet::new();
    for s in summands {
        gens.extend(decompose(s)?.into_iter().map(|(i, _)| i));
    }
    let mut order: Vec<usize> = Vec::new();
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut columns: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    let mut queue: VecDeque<usize> = gens.iter().copied().collect();
    while let Some(i) = queue.pop_front() {
        if !seen.insert(i) {
            continue;
        }
        order.push(i);
        if entries[i].terminal {
            continue;
        }
        let col = decompose(&lr.syzygy_rep(&entries[i].rep))?;
        for &(j, _) in &col {
            if !seen.contains(&j) {
                queue.push_back(j);
            }
        }
        columns.insert(i, col);
    }

    let horizon = columns.len();
    let step = |v: &Sparse<Sym>| -> Sparse<Sym> {
        let mut out: Sparse<Sym> = BTreeMap::new();
        for (s, x) in v {
            let image: Vec<(Sym, usize)> = match s {
                Sym::Class(i) => match columns.get(i) {
                    Some(col) => col.iter().map(|&(j, k)| (Sym::Class(j), k)).collect(),
                    None => vec![(Sym::Orbit(*i, 1), 1)],
                },
                Sym::Orbit(t, j) => vec![(Sym::Orbit(*t, j + 1), 1)],
            };
            for (t, k) in image {
                *out.entry(t).or_insert_with(BigRational::zero) += x * BigRational::from_integer(k.into());
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    };
    let vs: Vec<Sparse<Sym>> = gens.iter().map(|&i| unit(Sym::Class(i))).collect();
    let ranks = rank_sequence_by(vs, step, 2 * horizon);
    let value = stabilization(&ranks, horizon);
    let fmt_col = |col: &[(usize, usize)]| -> String {
        if col.is_empty() {
            return "0".to_string();
        }
        col.iter()
            .map(|&(j, k)| if k == 1 { entries[j].name.clone() } else { format!("{k}·{}", entries[j].name) })
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    };
    Ok(HybridPhi {
        value,
        ranks,
        horizon,
        classes: order.iter().map(|&i| entries[i].name.clone()).collect(),
        syzygies: columns.iter().map(|(&i, col)| (entries[i].name.clone(), fmt_col(col))).collect(),
    })
}

/// Bounds for algebras outside the monomial world. The lower bound is the larger of the
/// largest finite projective dimension found and 1 when two non-isomorphic modules without
/// projective summands have isomorphic syzygies (then `[X] − [Y]` lies in the kernel of `Ω̄`).
/// Candidates are simples, injectives, path modules `A·p`, quotients `P_v / A·p` and the
/// supplied extras. The upper bound is known only for self-injective algebras.
pub fn linear_bounds<F: Field>(
    lr: &Linrep<F>,
    max_steps: usize,
    extra: &[(String, Rep<F::Elem>)],
) -> PhidimBounds {
    let alg = lr.algebra();
    let n = alg.quiver().vertex_count();
    let mut candidates: Vec<(String, Rep<F::Elem>)> = Vec::new();
    for v in 0..n {
        let name = alg.quiver().vertex_name(v);
        candidates.push((format!("S_{name}"), lr.simple(v)));
        candidates.push((format!("I_{name}"), lr.injective(v)));
    }
    for p in alg.basis().iter().filter(|p| !p.is_trivial()) {
        if let Ok((sub, quot)) = path_module_pair(lr, p) {
            candidates.push((format!("A·{}", p.traversal_string(alg.quiver())), sub));
            candidates.push((format!("P/A·{}", p.traversal_string(alg.quiver())), quot));
        }
    }
    candidates.extend(extra.iter().cloned());

    let mut lower = 0;
    let mut lower_witness = None;
    for (name, m) in &candidates {
        if let PdOutcome::Finite(d) = lr.pd_rep(m, max_steps) {
            if d > lower {
                lower = d;
                lower_witness = Some(format!("pd({name}) = {d}"));
            }
        }
    }
    if lower == 0 {
        let reduced: Vec<(&String, &Rep<F::Elem>, Rep<F::Elem>)> = candidates
            .iter()
            .filter(|(_, m)| !m.is_zero() && !lr.has_projective_summand(m))
            .map(|(name, m)| (name, m, lr.syzygy_rep(m)))
            .filter(|(_, _, om)| !om.is_zero())
            .collect();
        'search: for (i, (nx, x, ox)) in reduced.iter().enumerate() {
            for (ny, y, oy) in &reduced[i + 1..] {
                if ox.dims == oy.dims
                    && lr.iso_test(ox, oy).is_isomorphic()
                    && !(x.dims == y.dims && lr.iso_test(x, y).is_isomorphic())
                {
                    lower = 1;
                    lower_witness = Some(format!("Ω({nx}) ≅ Ω({ny}) with {nx} ≇ {ny}"));
                    break 'search;
                }
            }
        }
    }
    let upper = if lr.is_self_injective() { Some(0) } else { None };
    PhidimBounds { lower: lower.min(upper.unwrap_or(usize::MAX)), upper, lower_witness }
}

type RepPair<E> = (Rep<E>, Rep<E>);

/// The cyclic submodule `A·p ⊆ P_{s(p)}` and the quotient `P_{s(p)} / A·p`.
pub fn path_module_pair<F: Field>(lr: &Linrep<F>, p: &Path) -> Result<RepPair<F::Elem>> {
    let alg = lr.algebra();
    let f = lr.field();
    let v = p.source();
    let proj = lr.projective(v);
    let idx = alg.basis_from(v);
    // A·p is spanned by the reductions of p followed by any path out of t(p).
    let mut spans: Vec<Vec<Vec<F::Elem>>> = (0..alg.quiver().vertex_count()).map(|_| Vec::new()).collect();
    for q in alg.basis().iter().filter(|q| q.source() == p.target()) {
        let Some(pq) = p.then(q) else { continue };
        let coords = alg.reduce(&pq);
        let w = pq.target();
        let local: Vec<usize> = idx.iter().copied().filter(|&i| alg.basis()[i].target() == w).collect();
        let mut vec = vec![f.zero(); local.len()];
        for (i, c) in coords {
            if let Some(pos) = local.iter().position(|&j| j == i) {
                vec[pos] = f.from_rational(&c).ok_or_else(|| Error::Invariant("coefficient not in field".into()))?;
            }
        }
        spans[w].push(vec);
    }
    let basis: Vec<Matrix<F::Elem>> = (0..spans.len())
        .map(|w| {
            let m = Matrix::from_columns(f, proj.dims[w], &spans[w]);
            matrix::column_space(f, &m)
        })
        .collect();
    let sub = lr.subrep(&proj, &basis)?;
    let quot = lr.quotient(&proj, &basis)?;
    Ok((sub, quot))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularReport {
    pub lower_c: usize,
    pub upper_c: Option<usize>,
    pub upper_a: Option<usize>,
    pub upper_b: Option<usize>,
    /// `upper_a + upper_b + 1` when both corner bounds are known.
    pub bound: Option<usize>,
    pub consistent: bool,
    pub lower_witness: Option<String>,
}

fn algebra_bounds(alg: &Algebra, max_steps: usize) -> Result<PhidimBounds> {
    if alg.is_monomial() {
        let calc = Calculus::new(alg)?;
        let mut b = phidim_bounds(&calc);
        if crate::homgor::is_self_injective_truncated(alg).unwrap_or(false) {
            b.upper = Some(0);
        }
        return Ok(b);
    }
    crate::with_field!(alg.field(), f => {
        let lr = Linrep::new(alg, f)?;
        let extra: Vec<(String, Rep<_>)> =
            crate::corpus::catalog(&lr, 1)?.into_iter().map(|e| (e.name, e.rep)).collect();
        Ok(linear_bounds(&lr, max_steps, &extra))
    })
}

/// Checks the hypotheses of the triangular φdim bound for a vertex split and reports the bounds.
pub fn triangular_check(
    alg: &Algebra,
    gamma: &[VertexId],
    gamma_bar: &[VertexId],
    max_steps: usize,
) -> Result<TriangularReport> {
    let q = alg.quiver();
    let n = q.vertex_count();
    let mut side = vec![None; n];
    for &v in gamma {
        side[v] = Some(false);
    }
    for &v in gamma_bar {
        if side[v].is_some() {
            return Err(Error::HypothesisViolated(format!("vertex {} lies in both parts", q.vertex_name(v))));
        }
        side[v] = Some(true);
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(Error::HypothesisViolated(format!("vertex {} lies in neither part", q.vertex_name(v))));
    }
    let in_bar = |v: VertexId| side[v] == Some(true);
    let mut bridges = Vec::new();
    for (a, arrow) in q.arrows().iter().enumerate() {
        match (in_bar(arrow.source), in_bar(arrow.target)) {
            (true, false) => {
                return Err(Error::HypothesisViolated(format!(
                    "no arrows from Γ̄ to Γ: arrow {} goes from Γ̄ to Γ",
                    arrow.name
                )))
            }
            (false, true) => bridges.push(a),
            _ => {}
        }
    }
    if bridges.is_empty() {
        return Err(Error::HypothesisViolated("at least one arrow from Γ to Γ̄: there is none".into()));
    }
    for &a in &bridges {
        let s = q.arrow(a).source;
        for &b in q.in_arrows(s) {
            let path = Path::from_arrows(q, vec![b, a])?;
            if !alg.is_zero_path(&path) {
                return Err(Error::HypothesisViolated(format!(
                    "bridge arrows annihilate arrows: {} is nonzero",
                    path.traversal_string(q)
                )));
            }
        }
    }
    let a_alg = alg.restrict_to(gamma)?;
    let b_alg = alg.restrict_to(gamma_bar)?;
    let c = algebra_bounds(alg, max_steps)?;
    let a = algebra_bounds(&a_alg, max_steps)?;
    let b = algebra_bounds(&b_alg, max_steps)?;
    let bound = match (a.upper, b.upper) {
        (Some(x), Some(y)) => Some(x + y + 1),
        _ => None,
    };
    let consistent = bound.is_none_or(|t| c.lower <= t) && c.upper.is_none_or(|u| c.lower <= u);
    Ok(TriangularReport {
        lower_c: c.lower,
        upper_c: c.upper,
        upper_a: a.upper,
        upper_b: b.upper,
        bound,
        consistent,
        lower_witness: c.lower_witness,
    })
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
        let q = Quiver::new(&["1", "2"], &[("alpha", "1", "2"), ("beta", "2", "1"), ("gamma", "2", "2")]).unwrap();
        let gens = vec![q.parse_path("beta.alpha").unwrap(), q.parse_path("gamma.gamma").unwrap()];
        Algebra::new(q, IdealSpec::Monomial(gens), FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn cycle_lattice_is_a_swap() {
        let alg = truncated(2, &[(0, 1), (1, 0)], 2);
        let calc = Calculus::new(&alg).unwrap();
        let lat = build_lattice(&calc, &[calc.simple(0)]);
        assert_eq!(lat.rank(), 2);
        assert_eq!(lat.triples(), vec![(0, 1, 1), (1, 0, 1)]);
        let both = ModuleMultiset::from_classes([calc.simple(0), calc.simple(1)]);
        assert_eq!(phi(&calc, &both), 0);
        assert_eq!(phidim_bounds(&calc), PhidimBounds { lower: 0, upper: Some(1), lower_witness: None });
    }

    #[test]
    fn acyclic_lattice_is_nilpotent() {
        let alg = truncated(3, &[(0, 1), (1, 2)], 2);
        let calc = Calculus::new(&alg).unwrap();
        let simples: Vec<PathClass> = (0..3).map(|v| calc.simple(v)).collect();
        let lat = build_lattice(&calc, &simples);
        assert!(lat.is_nilpotent());
        assert_eq!(phi(&calc, &ModuleMultiset::single(calc.simple(0))), 2);
        assert_eq!(phidim_subcat(&calc, &calc.all_classes()), 2);
    }

    #[test]
    fn loop_pair_gamma_fixed() {
        let alg = loop_pair();
        let calc = Calculus::new(&alg).unwrap();
        let gamma = calc.class_of(&alg.quiver().parse_path("gamma").unwrap()).unwrap();
        let lat = build_lattice(&calc, std::slice::from_ref(&gamma));
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.triples(), vec![(0, 0, 1)]);
        let b = phidim_bounds(&calc);
        assert!(b.lower <= b.upper.unwrap());
    }

    #[test]
    fn plateau_then_drop() {
        // e1 -> e2 -> 0 with a fixed e3: the rank of span{e1} stays 1 then drops.
        let lat = K0Lattice {
            basis: Vec::new(),
            index: HashMap::new(),
            columns: vec![vec![(1, 1)], vec![], vec![(2, 1)]],
        };
        assert_eq!(lat.rank_sequence(&[0], 3), vec![1, 1, 0, 0]);
        assert_eq!(lat.rank_sequence(&[0, 2], 3), vec![2, 2, 1, 1]);
    }

    #[test]
    fn triangular_rejects_backward_arrow() {
        let alg = truncated(2, &[(0, 1), (1, 0)], 2);
        let err = triangular_check(&alg, &[0], &[1], 10).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(m) if m.contains("no arrows")));
    }

    #[test]
    fn triangular_on_acyclic_parts() {
        // 1 -> 2 | bridge 2 -> 3 annihilated | 3 -> 4
        let q = Quiver::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let zero = q.parse_path("a1.a2").unwrap();
        let alg = Algebra::new(q, IdealSpec::Monomial(vec![zero]), FieldSpec::Rationals).unwrap();
        let r = triangular_check(&alg, &[0, 1], &[2, 3], 10).unwrap();
        assert!(r.consistent);
        assert_eq!(r.bound, Some(r.upper_a.unwrap() + r.upper_b.unwrap() + 1));
        assert!(r.lower_c >= 1);
    }
}
