//! Perfect paths, Gorenstein-projective classes, periodic modules and Co-Gorenstein verdicts.

use std::collections::{HashMap, HashSet};

use crate::algebra::Algebra;
use crate::pathcalc::{Calculus, ModuleMultiset, PathClass, DEFAULT_MAX_STEPS};
use crate::quiver::{strongly_connected_components, Path};
use crate::{Dim, Error, Result};

/// A perfect path with its relation-cycle `p = p_1, …, p_n` (`p_{n+1} = p`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectPath {
    pub path: Path,
    pub cycle: Vec<Path>,
}

/// An indecomposable non-projective Gorenstein-projective class with a perfect path realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpClass {
    pub class: PathClass,
    pub perfect: PerfectPath,
}

/// A periodic module found by following a cycle of infinite-pd classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicModule {
    pub module: ModuleMultiset,
    pub period: usize,
    /// The cycle of classes that carries the infinite projective dimension.
    pub cycle: Vec<PathClass>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Acyclic,
    CycleGraph,
    NoCycleSubheart,
    NoPeriodicCycle,
    PeriodicEqualsGp,
    Counterexample,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Acyclic => "acyclic",
            Branch::CycleGraph => "cycle_graph",
            Branch::NoCycleSubheart => "no_cycle_subheart",
            Branch::NoPeriodicCycle => "no_periodic_cycle",
            Branch::PeriodicEqualsGp => "periodic_equals_gp",
            Branch::Counterexample => "counterexample",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub periodic: PeriodicModule,
    /// A summand that is neither projective nor Gorenstein-projective.
    pub offending: PathClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoGorensteinVerdict {
    pub verdict: bool,
    pub branch: Branch,
    pub witness: Option<Witness>,
}

/// Perfect paths: nonzero paths on a cycle of the functional graph `p ↦ q` of perfect pairs
/// (`q then p` is zero, `R(p) = {q}`, `L(q) = {p}`).
pub fn perfect_paths(calc: &Calculus) -> Result<Vec<PerfectPath>> {
    let alg = calc.algebra();
    alg.require_monomial("perfect_paths")?;
    let mut next: HashMap<Path, Path> = HashMap::new();
    for p in alg.basis().iter().filter(|p| !p.is_trivial()) {
        let ann = alg.annihilator_sets(p)?;
        if let [q] = ann.right.as_slice() {
            if alg.annihilator_sets(q)?.left.as_slice() == std::slice::from_ref(p) {
                next.insert(p.clone(), q.clone());
            }
        }
    }
    let mut out = Vec::new();
    let mut starts: Vec<&Path> = next.keys().collect();
    starts.sort_by(|a, b| a.length_lex_cmp(b));
    for p in starts {
        let mut cycle = vec![p.clone()];
        let mut cur = p;
        let on_cycle = loop {
            match next.get(cur) {
                Some(q) if q == p => break true,
                Some(q) if cycle.len() <= next.len() => {
                    cycle.push(q.clone());
                    cur = q;
                }
                _ => break false,
            }
        };
        if on_cycle {
            out.push(PerfectPath { path: p.clone(), cycle });
        }
    }
    Ok(out)
}

/// `{class_of(p) : p perfect}`, one entry per class.
pub fn gp_indecomposables(calc: &Calculus) -> Result<Vec<GpClass>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for pp in perfect_paths(calc)? {
        let c = calc.class_of(&pp.path)?;
        if seen.insert(c.clone()) {
            out.push(GpClass { class: c, perfect: pp });
        }
    }
    Ok(out)
}

pub fn is_self_injective_truncated(alg: &Algebra) -> Result<bool> {
    if alg.truncation().is_none() {
        return Err(Error::UnsupportedIdeal("is_self_injective_truncated"));
    }
    let q = alg.quiver();
    if q.arrow_count() == 0 || q.is_cycle_graph() {
        return Ok(true);
    }
    Ok(q.weak_components().iter().all(|c| {
        let sub = q.full_subquiver(c);
        sub.quiver.arrow_count() == 0 || sub.quiver.is_cycle_graph()
    }))
}

pub fn is_cm_free(calc: &Calculus) -> Result<bool> {
    Ok(gp_indecomposables(calc)?.is_empty())
}

/// Infinite-pd classes whose syzygy has exactly one infinite-pd summand (with multiplicity),
/// mapped to that summand.
fn single_successor_graph(calc: &Calculus) -> HashMap<PathClass, PathClass> {
    let classes = calc.closure(&calc.all_classes());
    let mut succ = HashMap::new();
    for c in classes {
        if calc.pd(&c) != Dim::Infinite {
            continue;
        }
        let syz = calc.syzygy(&c);
        let inf: Vec<(&PathClass, usize)> = syz.iter().filter(|(d, _)| calc.pd(d) == Dim::Infinite).collect();
        if let [(d, 1)] = inf.as_slice() {
            succ.insert(c, (*d).clone());
        }
    }
    succ
}

/// All cycles of the single-successor graph, each rotated to start at its least class.
pub fn periodic_cycles(calc: &Calculus) -> Vec<Vec<PathClass>> {
    let succ = single_successor_graph(calc);
    let mut keys: Vec<&PathClass> = succ.keys().collect();
    keys.sort();
    let mut done: HashSet<PathClass> = HashSet::new();
    let mut cycles = Vec::new();
    for start in keys {
        if done.contains(start) {
            continue;
        }
        let mut order: Vec<PathClass> = Vec::new();
        let mut pos: HashMap<PathClass, usize> = HashMap::new();
        let mut cur = start.clone();
        loop {
            if done.contains(&cur) {
                break;
            }
            if let Some(&i) = pos.get(&cur) {
                let mut cyc = order[i..].to_vec();
                let m = (0..cyc.len()).min_by_key(|&j| &cyc[j]).expect("nonempty cycle");
                cyc.rotate_left(m);
                cycles.push(cyc);
                break;
            }
            pos.insert(cur.clone(), order.len());
            order.push(cur.clone());
            match succ.get(&cur) {
                Some(n) => cur = n.clone(),
                None => break,
            }
        }
        done.extend(order);
    }
    cycles.sort();
    cycles
}

/// `N_0 ⊕ (Ω^T(N_0) − N_0)` for a cycle starting at `N_0`, with `T` the least multiple of the
/// cycle length exceeding every finite pd reachable from the cycle.
pub fn periodic_module_for_cycle(calc: &Calculus, cycle: &[PathClass]) -> Result<PeriodicModule> {
    let n0 = cycle[0].clone();
    let reach = calc.closure(cycle);
    let b = reach.iter().filter_map(|c| calc.pd(c).finite()).max().unwrap_or(0);
    let l = cycle.len();
    let t = (b / l + 1) * l;
    let omega_t = calc.iterate_syzygy(&ModuleMultiset::single(n0.clone()), t);
    let junk = omega_t
        .difference(&ModuleMultiset::single(n0.clone()))
        .ok_or_else(|| Error::Invariant("Ω^T(N_0) does not contain N_0".into()))?;
    let module = ModuleMultiset::single(n0).sum(&junk);
    let per = calc.is_periodic(&module, DEFAULT_MAX_STEPS)?;
    if !per.periodic {
        return Err(Error::Invariant(format!("constructed module {} is not periodic", calc.format_multiset(&module))));
    }
    Ok(PeriodicModule {
        module,
        period: per.period.expect("periodic has a period"),
        cycle: cycle.to_vec(),
    })
}

pub fn all_periodic_modules(calc: &Calculus) -> Result<Vec<PeriodicModule>> {
    periodic_cycles(calc).iter().map(|c| periodic_module_for_cycle(calc, c)).collect()
}

pub fn find_periodic_module(calc: &Calculus) -> Result<Option<PeriodicModule>> {
    match periodic_cycles(calc).first() {
        Some(c) => periodic_module_for_cycle(calc, c).map(Some),
        None => Ok(None),
    }
}

/// Non-projective classes that are direct summands of some module in `Ω^∞(mod A)`.
///
/// Such a module is stably Ω-periodic, so the classes are the supports of nonnegative
/// vectors fixed by the reduced syzygy matrix `T`. A strongly connected component of `T`
/// carries a fixed vector exactly when `T` permutes it cyclically with weight one and
/// nothing downstream lies on another cycle; the fixed vector then covers everything
/// reachable from it.
pub fn omega_infinity_classes(calc: &Calculus) -> HashSet<PathClass> {
    let nodes: Vec<PathClass> = calc.all_classes().into_iter().filter(|c| !calc.is_projective(c)).collect();
    let index: HashMap<&PathClass, usize> = nodes.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let edges: Vec<Vec<(usize, usize)>> = nodes
        .iter()
        .map(|c| calc.syzygy(c).iter().filter_map(|(d, k)| index.get(d).map(|&j| (j, k))).collect())
        .collect();
    let adj: Vec<Vec<usize>> = edges.iter().map(|e| e.iter().map(|&(j, _)| j).collect()).collect();
    let sccs = strongly_connected_components(&adj);
    let mut comp = vec![0; nodes.len()];
    for (i, s) in sccs.iter().enumerate() {
        for &v in s {
            comp[v] = i;
        }
    }
    let cyclic: Vec<bool> = sccs.iter().map(|s| s.len() > 1 || adj[s[0]].contains(&s[0])).collect();
    let mut out = HashSet::new();
    for (i, s) in sccs.iter().enumerate().filter(|&(i, _)| cyclic[i]) {
        let permutes = s.iter().all(|&v| {
            let inside: Vec<usize> = edges[v].iter().filter(|&&(j, _)| comp[j] == i).map(|&(_, k)| k).collect();
            inside == [1]
        });
        if !permutes {
            continue;
        }
        let mut seen: HashSet<usize> = s.iter().copied().collect();
        let mut stack: Vec<usize> = s.clone();
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if seen.iter().all(|&v| comp[v] == i || !cyclic[comp[v]]) {
            out.extend(seen.into_iter().map(|v| nodes[v].clone()));
        }
    }
    out
}

/// Membership in `add Ω^∞(mod A)` for a sum of path modules.
pub fn omega_infinity(calc: &Calculus, m: &ModuleMultiset) -> bool {
    let inf = omega_infinity_classes(calc);
    m.classes().all(|c| calc.is_projective(c) || inf.contains(c))
}

pub fn omega_infinity_trivial(calc: &Calculus) -> Result<bool> {
    Ok(find_periodic_module(calc)?.is_none())
}

/// The algebra restricted to `Q^∞`, or `None` when `Q` is acyclic.
pub fn restrict_to_q_infinity(alg: &Algebra) -> Result<Option<Algebra>> {
    let verts = alg.quiver().q_infinity_vertices();
    if verts.is_empty() {
        return Ok(None);
    }
    alg.restrict_to(&verts).map(Some)
}

fn non_gp_witness(calc: &Calculus, gp: &HashSet<PathClass>) -> Result<Option<Witness>> {
    for pm in all_periodic_modules(calc)? {
        let offending = pm
            .module
            .classes()
            .find(|c| !calc.is_projective(c) && !gp.contains(*c))
            .cloned();
        if let Some(offending) = offending {
            return Ok(Some(Witness { periodic: pm, offending }));
        }
    }
    Ok(None)
}

fn gp_set(calc: &Calculus) -> Result<HashSet<PathClass>> {
    Ok(gp_indecomposables(calc)?.into_iter().map(|g| g.class).collect())
}

/// The quiver criterion for truncated algebras.
pub fn cogorenstein_truncated(calc: &Calculus) -> Result<CoGorensteinVerdict> {
    let alg = calc.algebra();
    if alg.truncation().is_none() {
        return Err(Error::UnsupportedIdeal("cogorenstein_truncated"));
    }
    let q = alg.quiver();
    let yes = |branch| {
        Ok(CoGorensteinVerdict {
            verdict: true,
            branch,
            witness: None,
        })
    };
    if q.is_acyclic() {
        return yes(Branch::Acyclic);
    }
    if q.is_cycle_graph() {
        return yes(Branch::CycleGraph);
    }
    let qi = q.q_infinity();
    if !qi.quiver.final_subhearts().iter().any(|h| h.sub.quiver.is_cycle_graph()) {
        return yes(Branch::NoCycleSubheart);
    }
    let witness = non_gp_witness(calc, &gp_set(calc)?)?
        .ok_or_else(|| Error::Invariant("a cycle subheart exists but no periodic non-GP module was found".into()))?;
    Ok(CoGorensteinVerdict {
        verdict: false,
        branch: Branch::Counterexample,
        witness: Some(witness),
    })
}

/// Search-based verdict: every periodic cycle is an exact syzygy cycle of GP classes.
pub fn cogorenstein_monomial(calc: &Calculus) -> Result<CoGorensteinVerdict> {
    let gp = gp_set(calc)?;
    let cycles = periodic_cycles(calc);
    if cycles.is_empty() {
        return Ok(CoGorensteinVerdict {
            verdict: true,
            branch: Branch::NoPeriodicCycle,
            witness: None,
        });
    }
    for cyc in &cycles {
        let exact = cyc.iter().all(|c| calc.syzygy(c).total() == 1 && gp.contains(c));
        if !exact {
            let pm = periodic_module_for_cycle(calc, cyc)?;
            let offending = pm
                .module
                .classes()
                .find(|c| !calc.is_projective(c) && !gp.contains(*c))
                .cloned()
                .ok_or_else(|| Error::Invariant("periodic module for a non-GP cycle has only GP summands".into()))?;
            return Ok(CoGorensteinVerdict {
                verdict: false,
                branch: Branch::Counterexample,
                witness: Some(Witness { periodic: pm, offending }),
            });
        }
    }
    Ok(CoGorensteinVerdict {
        verdict: true,
        branch: Branch::PeriodicEqualsGp,
        witness: None,
    })
}

/// Re-checks a "no" witness: periodic, and the offending summand is outside GP and projectives.
pub fn verify_witness(calc: &Calculus, w: &Witness) -> Result<bool> {
    let gp = gp_set(calc)?;
    let per = calc.is_periodic(&w.periodic.module, DEFAULT_MAX_STEPS)?;
    Ok(per.periodic
        && w.periodic.module.multiplicity(&w.offending) > 0
        && !calc.is_projective(&w.offending)
        && !gp.contains(&w.offending))
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
    fn loop_pair_gp_and_verdict() {
        let a = loop_pair();
        let calc = Calculus::new(&a).unwrap();
        let pp = perfect_paths(&calc).unwrap();
        assert_eq!(pp.len(), 1);
        assert_eq!(pp[0].path.traversal_string(a.quiver()), "gamma");
        assert_eq!(pp[0].cycle.len(), 1);
        let gp = gp_indecomposables(&calc).unwrap();
        assert_eq!(gp.len(), 1);
        assert!(!is_cm_free(&calc).unwrap());
        let v = cogorenstein_monomial(&calc).unwrap();
        assert!(v.verdict);
        let pm = find_periodic_module(&calc).unwrap().unwrap();
        assert_eq!(pm.module, ModuleMultiset::single(gp[0].class.clone()));
        assert_eq!(pm.period, 1);
        assert!(omega_infinity(&calc, &pm.module));
    }

    #[test]
    fn cycle_graph_paths_all_perfect() {
        for (n, k) in [(2, 2), (3, 3), (5, 3)] {
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let a = truncated(n, &edges, k);
            let calc = Calculus::new(&a).unwrap();
            let pp = perfect_paths(&calc).unwrap();
            let nontrivial = a.basis().iter().filter(|p| !p.is_trivial()).count();
            assert_eq!(pp.len(), nontrivial);
            assert!(is_self_injective_truncated(&a).unwrap());
            let v = cogorenstein_truncated(&calc).unwrap();
            assert_eq!((v.verdict, v.branch), (true, Branch::CycleGraph));
        }
    }

    #[test]
    fn acyclic_has_nothing_periodic() {
        let a = truncated(3, &[(0, 1), (1, 2)], 2);
        let calc = Calculus::new(&a).unwrap();
        assert!(perfect_paths(&calc).unwrap().is_empty());
        assert!(find_periodic_module(&calc).unwrap().is_none());
        assert!(omega_infinity_trivial(&calc).unwrap());
        assert_eq!(cogorenstein_truncated(&calc).unwrap().branch, Branch::Acyclic);
        assert!(restrict_to_q_infinity(&a).unwrap().is_none());
    }

    #[test]
    fn loop_subheart_counterexample() {
        // loop at v, arrow v -> w, loop at w
        let a = truncated(2, &[(0, 0), (0, 1), (1, 1)], 2);
        let calc = Calculus::new(&a).unwrap();
        let t = cogorenstein_truncated(&calc).unwrap();
        assert!(!t.verdict);
        let w = t.witness.clone().unwrap();
        assert!(verify_witness(&calc, &w).unwrap());
        let m = cogorenstein_monomial(&calc).unwrap();
        assert_eq!(m.verdict, t.verdict);
        let restricted = restrict_to_q_infinity(&a).unwrap().unwrap();
        let rc = Calculus::new(&restricted).unwrap();
        assert_eq!(find_periodic_module(&rc).unwrap().is_some(), find_periodic_module(&calc).unwrap().is_some());
    }

    #[test]
    fn c3_periodic_simple() {
        let a = truncated(3, &[(0, 1), (1, 2), (2, 0)], 2);
        let calc = Calculus::new(&a).unwrap();
        assert!(!omega_infinity_trivial(&calc).unwrap());
        let per = calc.is_periodic(&ModuleMultiset::single(calc.simple(0)), 100).unwrap();
        assert_eq!(per.period, Some(3));
    }
}
