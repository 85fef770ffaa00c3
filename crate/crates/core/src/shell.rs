//! Command driver shared by the CLI and the tests.
//!
//! Every command returns a [`Report`] that renders either as text or as JSON
//! `{"command", "algebra", "result", "certificates", "warnings"}`. Exit codes:
//! 0 success, 1 user or parse error, 2 a computational cap was reached,
//! 3 internal invariant violation.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::algebra::{Algebra, IdealSpec};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format::{parse_algebra, parse_module, ModuleExpr};
use crate::homgor;
use crate::itphi;
use crate::linrep::{IsoOptions, Linrep, PdOutcome, Rep};
use crate::pathcalc::{Calculus, ModuleMultiset, PathClass, DEFAULT_MAX_STEPS};
use crate::quiver::{Path, VertexId};
use crate::{corpus, Dim};

pub const COMMANDS: &[&str] = &[
    "info",
    "gldim",
    "pd",
    "syzygy",
    "norm",
    "periodic-test",
    "periodic-find",
    "omega-inf",
    "perfect-paths",
    "gp-list",
    "self-injective",
    "cm-free",
    "co-gorenstein",
    "inj-pd",
    "phi",
    "phidim-subcat",
    "phidim-bounds",
    "triangular-check",
];

/// Step cap for linear-engine probes when `--steps` is not given.
pub const DEFAULT_LINEAR_STEPS: usize = 20;

#[derive(Clone, Debug)]
pub struct Options {
    pub command: String,
    pub algebra: String,
    pub module: Option<String>,
    pub steps: Option<usize>,
    pub max_steps: usize,
    pub trials: usize,
    pub seed: u64,
    pub json: bool,
    pub split: Option<String>,
}

impl Options {
    pub fn new(command: &str, algebra: &str) -> Self {
        Options {
            command: command.to_string(),
            algebra: algebra.to_string(),
            module: None,
            steps: None,
            max_steps: DEFAULT_MAX_STEPS,
            trials: 20,
            seed: 0,
            json: false,
            split: None,
        }
    }

    pub fn module(mut self, m: &str) -> Self {
        self.module = Some(m.to_string());
        self
    }

    pub fn json(mut self) -> Self {
        self.json = true;
        self
    }

    fn linear_steps(&self) -> usize {
        self.steps.unwrap_or(DEFAULT_LINEAR_STEPS).min(self.max_steps)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub algebra: String,
    pub result: Value,
    pub certificates: Vec<Value>,
    pub warnings: Vec<String>,
    pub text: String,
    /// Set when the answer is cap-limited.
    pub capped: bool,
}

impl Report {
    fn new(opts: &Options, alg: &Algebra) -> Self {
        Report {
            command: opts.command.clone(),
            algebra: opts.algebra.clone(),
            result: Value::Null,
            certificates: Vec::new(),
            warnings: alg.warnings().to_vec(),
            text: String::new(),
            capped: false,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn cert(&mut self, v: Value) {
        self.certificates.push(v);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "algebra": self.algebra,
            "result": self.result,
            "certificates": self.certificates,
            "warnings": self.warnings,
        })
    }

    pub fn exit_code(&self) -> i32 {
        if self.capped {
            2
        } else {
            0
        }
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Indeterminate(_) => 2,
        Error::Invariant(_) => 3,
        _ => 1,
    }
}

/// Runs a command and renders it; returns the exit code and the text to print.
pub fn run(opts: &Options) -> (i32, String) {
    match execute(opts) {
        Ok(r) => {
            let out = if opts.json {
                serde_json::to_string_pretty(&r.to_json()).expect("json values serialize")
            } else {
                let mut t = r.text.clone();
                for w in &r.warnings {
                    let _ = writeln!(t, "warning: {w}");
                }
                t.trim_end().to_string()
            };
            (r.exit_code(), out)
        }
        Err(e) => {
            let code = exit_code_for(&e);
            let out = if opts.json {
                let v = json!({
                    "command": opts.command,
                    "algebra": opts.algebra,
                    "result": Value::Null,
                    "certificates": [],
                    "warnings": [],
                    "error": e.to_string(),
                });
                serde_json::to_string_pretty(&v).expect("json values serialize")
            } else {
                format!("error: {e}")
            };
            (code, out)
        }
    }
}

/// `corpus:NAME`, a file path, or a bare corpus file name such as `finito.alg`.
pub fn load_algebra(spec: &str) -> Result<Algebra> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        return corpus::load(name);
    }
    match std::fs::read_to_string(spec) {
        Ok(text) => parse_algebra(&text),
        Err(e) => {
            let base = std::path::Path::new(spec).file_name().and_then(|s| s.to_str()).unwrap_or(spec);
            if corpus::source(base).is_some() {
                corpus::load(base)
            } else {
                Err(Error::parse("file", 0, format!("cannot read {spec}: {e}")))
            }
        }
    }
}

pub fn execute(opts: &Options) -> Result<Report> {
    if !COMMANDS.contains(&opts.command.as_str()) {
        return Err(Error::parse("command", 0, format!("unknown command {:?}", opts.command)));
    }
    let alg = load_algebra(&opts.algebra)?;
    let mut r = Report::new(opts, &alg);
    let expr = opts.module.as_deref().map(parse_module).transpose()?;
    match opts.command.as_str() {
        "info" => info(&alg, &mut r),
        "triangular-check" => triangular(&alg, opts, &mut r)?,
        "inj-pd" => linear(&alg, opts, expr.as_ref(), &mut r)?,
        cmd => {
            let combinatorial = alg.is_monomial() && expr.as_ref().is_none_or(is_combinatorial);
            if combinatorial {
                let calc = Calculus::new(&alg)?;
                let m = expr.as_ref().map(|e| eval_multiset(e, &calc)).transpose()?;
                combinatorial_command(&calc, cmd, m, opts, &mut r)?;
            } else {
                linear(&alg, opts, expr.as_ref(), &mut r)?;
            }
        }
    }
    Ok(r)
}

fn is_combinatorial(e: &ModuleExpr) -> bool {
    match e {
        ModuleExpr::Path(_) | ModuleExpr::Simple(_) | ModuleExpr::Proj(_) => true,
        ModuleExpr::Scaled(_, inner) => is_combinatorial(inner),
        ModuleExpr::Sum(parts) => parts.iter().all(is_combinatorial),
        _ => false,
    }
}

fn vertex(alg: &Algebra, name: &str) -> Result<VertexId> {
    alg.quiver()
        .vertex_id(name)
        .ok_or_else(|| Error::parse("module", 1, format!("unknown vertex {name:?}")))
}

fn module_path(alg: &Algebra, s: &str) -> Result<Path> {
    alg.quiver().parse_path(s).map_err(|e| Error::parse("module", 1, e.to_string()))
}

pub fn eval_multiset(e: &ModuleExpr, calc: &Calculus) -> Result<ModuleMultiset> {
    let alg = calc.algebra();
    Ok(match e {
        ModuleExpr::Path(p) => ModuleMultiset::single(calc.class_of(&module_path(alg, p)?)?),
        ModuleExpr::Simple(v) => ModuleMultiset::single(calc.simple(vertex(alg, v)?)),
        ModuleExpr::Proj(v) => ModuleMultiset::single(calc.projective(vertex(alg, v)?)),
        ModuleExpr::Scaled(k, inner) => eval_multiset(inner, calc)?.scaled(*k),
        ModuleExpr::Sum(parts) => {
            let mut m = ModuleMultiset::new();
            for p in parts {
                m.extend(&eval_multiset(p, calc)?, 1);
            }
            m
        }
        _ => {
            return Err(Error::parse(
                "module",
                1,
                "injectives, explicit representations and named families need the linear engine",
            ))
        }
    })
}

pub fn eval_rep<F: Field>(e: &ModuleExpr, lr: &Linrep<F>) -> Result<Rep<F::Elem>> {
    let alg = lr.algebra();
    Ok(match e {
        ModuleExpr::Path(p) => {
            let p = module_path(alg, p)?;
            if alg.is_zero_path(&p) {
                return Err(Error::ZeroPath(p.traversal_string(alg.quiver())));
            }
            if alg.is_monomial() {
                lr.class_rep(&Calculus::new(alg)?.class_of(&p)?)
            } else {
                itphi::path_module_pair(lr, &p)?.0
            }
        }
        ModuleExpr::Simple(v) => lr.simple(vertex(alg, v)?),
        ModuleExpr::Proj(v) => lr.projective(vertex(alg, v)?),
        ModuleExpr::Inj(v) => lr.injective(vertex(alg, v)?),
        ModuleExpr::Scaled(k, inner) => lr.power(&eval_rep(inner, lr)?, *k),
        ModuleExpr::Sum(parts) => {
            let reps = parts.iter().map(|p| eval_rep(p, lr)).collect::<Result<Vec<_>>>()?;
            lr.direct_sum(&reps)
        }
        ModuleExpr::Rep { dims, maps } => {
            let q = alg.quiver();
            let f = lr.field();
            let mut d = vec![0; q.vertex_count()];
            for (v, k) in dims {
                d[vertex(alg, v)?] = *k;
            }
            let mut ms: Vec<crate::matrix::Matrix<F::Elem>> = q
                .arrows()
                .iter()
                .map(|a| crate::matrix::Matrix::zeros(f, d[a.target], d[a.source]))
                .collect();
            for (name, rows) in maps {
                let a = q
                    .arrow_id(name)
                    .ok_or_else(|| Error::parse("module", 1, format!("unknown arrow {name:?}")))?;
                let (s, t) = (q.arrow(a).source, q.arrow(a).target);
                if rows.len() != d[t] || rows.iter().any(|r| r.len() != d[s]) {
                    return Err(Error::parse(
                        "module",
                        1,
                        format!("matrix for {name} must be {}x{} (target dim x source dim)", d[t], d[s]),
                    ));
                }
                for (i, row) in rows.iter().enumerate() {
                    for (j, x) in row.iter().enumerate() {
                        ms[a][(i, j)] = f
                            .from_rational(x)
                            .ok_or_else(|| Error::parse("module", 1, format!("{x} is not defined in the field")))?;
                    }
                }
            }
            lr.rep(d, ms)?
        }
        ModuleExpr::Call(name, args) => corpus::generator(lr, name, args)
            .ok_or_else(|| Error::parse("module", 1, format!("unknown module family {name:?}")))??,
    })
}

/// Top-level summands of an expression, with multiplicities expanded.
fn summands(e: &ModuleExpr) -> Vec<ModuleExpr> {
    match e {
        ModuleExpr::Sum(parts) => parts.iter().flat_map(summands).collect(),
        ModuleExpr::Scaled(k, inner) => (0..*k).flat_map(|_| summands(inner)).collect(),
        other => vec![other.clone()],
    }
}

fn family_size(e: &ModuleExpr) -> usize {
    match e {
        ModuleExpr::Call(_, args) => args
            .last()
            .filter(|a| a.is_integer())
            .and_then(|a| usize::try_from(a.to_integer()).ok())
            .unwrap_or(1),
        ModuleExpr::Sum(parts) => parts.iter().map(family_size).max().unwrap_or(1),
        ModuleExpr::Scaled(_, inner) => family_size(inner),
        _ => 1,
    }
}

fn need<'e>(e: Option<&'e ModuleExpr>, cmd: &str) -> Result<&'e ModuleExpr> {
    e.ok_or_else(|| Error::parse("flags", 0, format!("{cmd} needs --module")))
}

fn need_multiset(m: Option<ModuleMultiset>, cmd: &str) -> Result<ModuleMultiset> {
    m.ok_or_else(|| Error::parse("flags", 0, format!("{cmd} needs --module")))
}

pub fn class_name(calc: &Calculus, c: &PathClass) -> String {
    calc.display_name(c)
}

pub fn multiset_name(calc: &Calculus, m: &ModuleMultiset) -> String {
    if m.is_empty() {
        return "0".into();
    }
    let mut parts: Vec<String> = m
        .iter()
        .map(|(c, k)| if k > 1 { format!("{k}·{}", class_name(calc, c)) } else { class_name(calc, c) })
        .collect();
    parts.sort();
    parts.join(" ⊕ ")
}

fn multiset_json(calc: &Calculus, m: &ModuleMultiset) -> Value {
    let mut items: Vec<Value> = m
        .iter()
        .map(|(c, k)| {
            json!({
                "class": class_name(calc, c),
                "multiplicity": k,
                "vertex": calc.algebra().quiver().vertex_name(c.vertex()),
                "dim_vector": c.dim_vector(calc.algebra()),
            })
        })
        .collect();
    items.sort_by_key(|v| v["class"].as_str().unwrap_or("").to_string());
    Value::Array(items)
}

fn dim_json(d: Dim) -> Value {
    match d {
        Dim::Finite(n) => json!(n),
        Dim::Infinite => json!("inf"),
    }
}

fn path_json(alg: &Algebra, p: &Path) -> Value {
    let q = alg.quiver();
    json!({"traversal": p.traversal_string(q), "product": p.function_string(q)})
}

fn info(alg: &Algebra, r: &mut Report) {
    let q = alg.quiver();
    let g = q.analyze();
    let ideal = match alg.ideal() {
        IdealSpec::Truncated(k) => json!({"kind": "truncated", "k": k}),
        IdealSpec::Monomial(gens) => json!({
            "kind": "monomial",
            "generators": gens.iter().map(|p| p.traversal_string(q)).collect::<Vec<_>>(),
        }),
        IdealSpec::Relations { relations, nilpotency } => json!({
            "kind": "relations",
            "relations": relations.iter().map(|rel| crate::format::relation_text(q, rel)).collect::<Vec<_>>(),
            "nilpotency": nilpotency,
        }),
    };
    r.result = json!({
        "vertices": q.vertices(),
        "arrows": q.arrows().iter().map(|a| json!([a.name, q.vertex_name(a.source), q.vertex_name(a.target)])).collect::<Vec<_>>(),
        "ideal": ideal,
        "field": alg.field().to_string(),
        "dimension": alg.dim(),
        "loewy_length": alg.loewy_bound() + 1,
        "acyclic": g.is_acyclic,
        "cycle_graph": g.is_cycle_graph,
        "longest_path": dim_json(g.longest_path),
    });
    r.line(format!("vertices: {}  arrows: {}", q.vertex_count(), q.arrow_count()));
    r.line(format!("ideal: {}  field: {}", alg.ideal().kind(), alg.field()));
    r.line(format!("dimension: {}", alg.dim()));
    r.line(format!(
        "acyclic: {}  cycle graph: {}  longest path: {}",
        g.is_acyclic, g.is_cycle_graph, g.longest_path
    ));
}

fn combinatorial_command(
    calc: &Calculus,
    cmd: &str,
    m: Option<ModuleMultiset>,
    opts: &Options,
    r: &mut Report,
) -> Result<()> {
    let alg = calc.algebra();
    match cmd {
        "gldim" => {
            let g = calc.gldim()?;
            r.result = json!({"gldim": dim_json(g.value), "formula": g.formula.map(dim_json)});
            r.line(format!("gldim = {}", g.value));
            if let Some(f) = g.formula {
                r.line(format!("closed formula: {f}"));
            }
        }
        "pd" => {
            let m = need_multiset(m, cmd)?;
            let pd = calc.pd_multiset(&m);
            r.result = json!({"module": multiset_name(calc, &m), "pd": dim_json(pd)});
            r.line(format!("pd({}) = {pd}", multiset_name(calc, &m)));
        }
        "syzygy" => {
            let m = need_multiset(m, cmd)?;
            let steps = opts.steps.unwrap_or(1);
            let mut cur = m.clone();
            let mut trail = Vec::new();
            for i in 1..=steps {
                cur = calc.syzygy_multiset(&cur);
                trail.push(json!({"step": i, "module": multiset_name(calc, &cur), "summands": multiset_json(calc, &cur)}));
                r.line(format!("Ω^{i} = {}", multiset_name(calc, &cur)));
            }
            r.result = json!({"module": multiset_name(calc, &m), "syzygies": trail});
        }
        "norm" => {
            let m = need_multiset(m, cmd)?;
            let n = calc.norm(&m);
            r.result = json!({"module": multiset_name(calc, &m), "norm": n});
            r.line(format!("‖{}‖ = {n}", multiset_name(calc, &m)));
        }
        "periodic-test" => {
            let m = need_multiset(m, cmd)?;
            match calc.is_periodic(&m, opts.max_steps) {
                Ok(p) => {
                    r.result = json!({"periodic": p.periodic, "period": p.period, "steps": p.steps});
                    match p.period {
                        Some(t) => r.line(format!("periodic with period {t}")),
                        None => r.line(format!("not periodic (decided after {} steps)", p.steps)),
                    }
                }
                Err(Error::Indeterminate(n)) => {
                    r.capped = true;
                    r.result = json!({"periodic": "indeterminate", "steps": n});
                    r.line(format!("indeterminate after {n} steps"));
                }
                Err(e) => return Err(e),
            }
        }
        "periodic-find" => match homgor::find_periodic_module(calc)? {
            Some(pm) => {
                r.result = json!({
                    "found": true,
                    "module": multiset_name(calc, &pm.module),
                    "summands": multiset_json(calc, &pm.module),
                    "period": pm.period,
                });
                r.cert(json!({"cycle": pm.cycle.iter().map(|c| class_name(calc, c)).collect::<Vec<_>>()}));
                r.line(format!("{} is periodic with period {}", multiset_name(calc, &pm.module), pm.period));
            }
            None => {
                r.result = json!({"found": false});
                r.line("no periodic module");
            }
        },
        "omega-inf" => match m {
            Some(m) => {
                let b = homgor::omega_infinity(calc, &m);
                r.result = json!({"module": multiset_name(calc, &m), "in_omega_infinity": b});
                r.line(format!("{} ∈ add Ω^∞: {b}", multiset_name(calc, &m)));
            }
            None => {
                let t = homgor::omega_infinity_trivial(calc)?;
                r.result = json!({"trivial": t});
                r.line(format!("Ω^∞ trivial: {t}"));
            }
        },
        "perfect-paths" => {
            let pp = homgor::perfect_paths(calc)?;
            r.result = json!(pp
                .iter()
                .map(|p| json!({
                    "path": path_json(alg, &p.path),
                    "cycle": p.cycle.iter().map(|c| path_json(alg, c)).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>());
            for p in &pp {
                r.line(format!("{}  cycle {}", p.path.display(alg.quiver()), cycle_text(alg, &p.cycle)));
            }
            if pp.is_empty() {
                r.line("no perfect paths");
            }
        }
        "gp-list" => {
            let gp = homgor::gp_indecomposables(calc)?;
            r.result = json!(gp
                .iter()
                .map(|g| json!({
                    "class": class_name(calc, &g.class),
                    "dim_vector": g.class.dim_vector(alg),
                    "perfect_path": path_json(alg, &g.perfect.path),
                    "relation_cycle": g.perfect.cycle.iter().map(|c| path_json(alg, c)).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>());
            for g in &gp {
                r.line(format!("{}  relation-cycle {}", class_name(calc, &g.class), cycle_text(alg, &g.perfect.cycle)));
            }
            if gp.is_empty() {
                r.line("no non-projective Gorenstein-projective modules");
            }
        }
        "self-injective" => {
            let b = if alg.truncation().is_some() {
                homgor::is_self_injective_truncated(alg)?
            } else {
                crate::with_field!(alg.field(), f => Linrep::new(alg, f)?.is_self_injective())
            };
            r.result = json!({"self_injective": b});
            r.line(format!("self-injective: {b}"));
        }
        "cm-free" => {
            let b = homgor::is_cm_free(calc)?;
            r.result = json!({"cm_free": b});
            r.line(format!("CM-free: {b}"));
        }
        "co-gorenstein" => {
            let v = if alg.truncation().is_some() {
                homgor::cogorenstein_truncated(calc)?
            } else {
                homgor::cogorenstein_monomial(calc)?
            };
            r.result = json!({"verdict": v.verdict, "branch": v.branch.as_str()});
            r.line(format!("Co-Gorenstein: {}  ({})", if v.verdict { "yes" } else { "no" }, v.branch.as_str()));
            if let Some(w) = &v.witness {
                let ok = homgor::verify_witness(calc, w)?;
                r.cert(json!({
                    "periodic_module": multiset_name(calc, &w.periodic.module),
                    "period": w.periodic.period,
                    "offending_summand": class_name(calc, &w.offending),
                    "verified": ok,
                }));
                r.line(format!(
                    "witness: {} has period {} and summand {} is not Gorenstein-projective",
                    multiset_name(calc, &w.periodic.module),
                    w.periodic.period,
                    class_name(calc, &w.offending)
                ));
                if !ok {
                    return Err(Error::Invariant("Co-Gorenstein witness failed verification".into()));
                }
            }
        }
        "phi" => {
            let m = need_multiset(m, cmd)?;
            let rep = itphi::phi_report(calc, &m);
            r.result = json!({"module": multiset_name(calc, &m), "phi": rep.value, "ranks": rep.ranks});
            r.cert(lattice_json(calc, &rep.lattice));
            r.line(format!("φ({}) = {}", multiset_name(calc, &m), rep.value));
            r.line(format!("ranks: {:?}", rep.ranks));
        }
        "phidim-subcat" => {
            let seed: Vec<PathClass> = match &m {
                Some(m) => m.classes().cloned().collect(),
                None => calc.all_classes(),
            };
            let lat = itphi::build_lattice(calc, &seed);
            let v = itphi::phidim_subcat(calc, &seed);
            let d = lat.rank();
            r.result = json!({"phidim": v, "lattice_rank": d, "ranks": lat.rank_sequence(&lat.all_generators(), d)});
            r.cert(lattice_json(calc, &lat));
            r.line(format!("φdim of the syzygy closure = {v} (lattice rank {d})"));
        }
        "phidim-bounds" => {
            let b = itphi::phidim_bounds(calc);
            bounds_out(&b, r);
        }
        _ => unreachable!("dispatch covers every command"),
    }
    Ok(())
}

fn cycle_text(alg: &Algebra, cycle: &[Path]) -> String {
    let parts: Vec<String> = cycle.iter().map(|p| p.function_string(alg.quiver())).collect();
    if parts.len() == 1 {
        format!("({}, {})", parts[0], parts[0])
    } else {
        format!("({})", parts.join(", "))
    }
}

fn lattice_json(calc: &Calculus, lat: &itphi::K0Lattice) -> Value {
    json!({
        "basis": lat.basis().iter().map(|c| class_name(calc, c)).collect::<Vec<_>>(),
        "T": lat.triples().iter().map(|&(i, j, k)| json!([i, j, k])).collect::<Vec<_>>(),
    })
}

fn bounds_out(b: &itphi::PhidimBounds, r: &mut Report) {
    r.result = json!({"lower": b.lower, "upper": b.upper.map(|u| json!(u)).unwrap_or(json!("unknown"))});
    if let Some(w) = &b.lower_witness {
        r.cert(json!({"lower_witness": w}));
    }
    let upper = b.upper.map(|u| u.to_string()).unwrap_or_else(|| "unknown".into());
    r.line(format!("{} ≤ φdim ≤ {upper}", b.lower));
    if let Some(w) = &b.lower_witness {
        r.line(format!("lower bound from {w}"));
    }
}

fn pd_json(p: &PdOutcome) -> Value {
    match p {
        PdOutcome::Finite(n) => json!(n),
        other => json!(other.to_string()),
    }
}

fn linear(alg: &Algebra, opts: &Options, expr: Option<&ModuleExpr>, r: &mut Report) -> Result<()> {
    crate::with_field!(alg.field(), f => {
        let mut lr = Linrep::new(alg, f)?;
        lr.iso = IsoOptions { trials: opts.trials, seed: opts.seed };
        linear_command(&lr, opts, expr, r)
    })
}

fn linear_command<F: Field>(lr: &Linrep<F>, opts: &Options, expr: Option<&ModuleExpr>, r: &mut Report) -> Result<()> {
    let alg = lr.algebra();
    let cmd = opts.command.as_str();
    let steps = opts.linear_steps();
    match cmd {
        "gldim" => {
            let mut best = Some(0usize);
            let mut per = Vec::new();
            for v in 0..alg.quiver().vertex_count() {
                let p = lr.pd_rep(&lr.simple(v), steps);
                match &p {
                    PdOutcome::Finite(n) => best = best.map(|b| b.max(*n)),
                    PdOutcome::InfiniteCertified(_) => best = None,
                    PdOutcome::AtLeast(_) => {}
                }
                per.push(json!({"vertex": alg.quiver().vertex_name(v), "pd": pd_json(&p)}));
                r.line(format!("pd(S_{}) = {p}", alg.quiver().vertex_name(v)));
            }
            let capped = per.iter().any(|v| v["pd"].as_str().is_some_and(|s| s.starts_with("at_least")));
            let certified_inf = per.iter().any(|v| v["pd"] == json!("infinite_certified"));
            let value = if certified_inf {
                json!("inf")
            } else if capped {
                r.capped = true;
                json!(format!("at_least({steps})"))
            } else {
                json!(best.unwrap_or(0))
            };
            r.line(format!("gldim = {}", value.as_str().map(str::to_string).unwrap_or_else(|| value.to_string())));
            r.result = json!({"gldim": value, "simples": per});
        }
        "pd" => {
            let m = eval_rep(need(expr, cmd)?, lr)?;
            let p = lr.pd_rep(&m, steps);
            r.capped = matches!(p, PdOutcome::AtLeast(_));
            if let PdOutcome::InfiniteCertified(c) = &p {
                r.cert(json!({"infinite": c}));
            }
            r.result = json!({"dim_vector": m.dims, "pd": pd_json(&p)});
            r.line(format!("pd = {p}"));
        }
        "inj-pd" => {
            let n = alg.quiver().vertex_count();
            let mut per = Vec::new();
            let mut capped = false;
            let injs: Vec<Rep<F::Elem>> = (0..n).map(|v| lr.injective(v)).collect();
            for (v, inj) in injs.iter().enumerate() {
                let p = lr.pd_rep(inj, steps);
                capped |= matches!(p, PdOutcome::AtLeast(_));
                r.line(format!("pd(I_{}) = {p}", alg.quiver().vertex_name(v)));
                if let PdOutcome::InfiniteCertified(c) = &p {
                    r.cert(json!({"module": format!("I_{}", alg.quiver().vertex_name(v)), "infinite": c}));
                }
                per.push(json!({"vertex": alg.quiver().vertex_name(v), "pd": pd_json(&p)}));
            }
            let target = match expr {
                Some(e) => eval_rep(e, lr)?,
                None => lr.direct_sum(&injs),
            };
            let total = lr.pd_rep(&target, steps);
            capped |= matches!(total, PdOutcome::AtLeast(_));
            r.capped = capped;
            r.line(format!("pd(⊕ I_v) = {total}"));
            r.result = json!({"pd": pd_json(&total), "injectives": per});
        }
        "syzygy" => {
            let m = eval_rep(need(expr, cmd)?, lr)?;
            let k = opts.steps.unwrap_or(1);
            let mut cur = m;
            let mut trail = Vec::new();
            for i in 1..=k {
                cur = lr.syzygy_rep(&cur);
                trail.push(json!({"step": i, "dim_vector": cur.dims}));
                r.line(format!("Ω^{i}: dimension vector {:?}", cur.dims));
            }
            let cat = corpus::catalog(lr, family_size(need(expr, cmd)?))?;
            let reps: Vec<Rep<F::Elem>> = cat.iter().map(|c| c.rep.clone()).collect();
            if let Ok(dec) = lr.decompose_against_catalog(&cur, &reps) {
                let parts: Vec<String> = dec
                    .parts
                    .iter()
                    .map(|&(i, k)| if k > 1 { format!("{k}·{}", cat[i].name) } else { cat[i].name.clone() })
                    .collect();
                r.line(format!("≅ {}", parts.join(" ⊕ ")));
                r.cert(json!({"decomposition": parts}));
            }
            r.result = json!({"syzygies": trail});
        }
        "periodic-test" => {
            let m = eval_rep(need(expr, cmd)?, lr)?;
            let cap = opts.steps.unwrap_or(opts.max_steps);
            let mut traj = vec![m];
            let mut outcome = None;
            'walk: for i in 1..=cap {
                let next = lr.syzygy_rep(traj.last().expect("nonempty"));
                if next.is_zero() {
                    outcome = Some(json!({"periodic": false, "reason": format!("Ω^{i} = 0")}));
                    break;
                }
                for (j, prev) in traj.iter().enumerate() {
                    if prev.dims == next.dims && lr.iso_test(prev, &next).is_isomorphic() {
                        outcome = Some(if j == 0 {
                            json!({"periodic": true, "period": i})
                        } else {
                            json!({"periodic": false, "reason": format!("Ω^{j} ≅ Ω^{i} before returning")})
                        });
                        break 'walk;
                    }
                }
                traj.push(next);
            }
            match outcome {
                Some(v) => {
                    r.line(match v["period"].as_u64() {
                        Some(t) => format!("periodic with period {t}"),
                        None => format!("not periodic: {}", v["reason"].as_str().unwrap_or("")),
                    });
                    r.result = v;
                }
                None => {
                    r.capped = true;
                    r.result = json!({"periodic": "indeterminate", "steps": cap});
                    r.line(format!("no repetition within {cap} steps"));
                }
            }
        }
        "self-injective" => {
            let b = lr.is_self_injective();
            r.result = json!({"self_injective": b});
            r.line(format!("self-injective: {b}"));
        }
        "phi" => {
            let e = need(expr, cmd)?;
            let parts = summands(e).iter().map(|s| eval_rep(s, lr)).collect::<Result<Vec<_>>>()?;
            let cat = corpus::catalog(lr, family_size(e))?;
            let h = itphi::phi_hybrid(lr, &parts, &cat)?;
            r.result = json!({"phi": h.value, "ranks": h.ranks, "horizon": h.horizon, "classes": h.classes});
            for (c, s) in &h.syzygies {
                r.cert(json!({"class": c, "syzygy": s}));
            }
            r.line(format!("φ = {}", h.value));
            r.line(format!("ranks: {:?}", h.ranks));
        }
        "phidim-bounds" => {
            let extra: Vec<(String, Rep<F::Elem>)> =
                corpus::catalog(lr, 1)?.into_iter().map(|e| (e.name, e.rep)).collect();
            let b = itphi::linear_bounds(lr, steps, &extra);
            bounds_out(&b, r);
        }
        "norm" | "periodic-find" | "omega-inf" | "perfect-paths" | "gp-list" | "cm-free" | "co-gorenstein"
        | "phidim-subcat" => {
            if alg.is_monomial() {
                return Err(Error::parse("module", 1, format!("{cmd} takes path, simple and projective summands only")));
            }
            return Err(Error::UnsupportedIdeal(static_name(cmd)));
        }
        _ => unreachable!("dispatch covers every command"),
    }
    Ok(())
}

fn static_name(cmd: &str) -> &'static str {
    COMMANDS.iter().find(|c| **c == cmd).copied().unwrap_or("command")
}

/// Split files hold `gamma: v …` and `gamma_bar: v …`; an inline `v … | v …` is accepted too.
pub fn parse_split(alg: &Algebra, spec: &str) -> Result<(Vec<VertexId>, Vec<VertexId>)> {
    let text = std::fs::read_to_string(spec).ok();
    let ids = |s: &str, line: usize| -> Result<Vec<VertexId>> {
        s.split_whitespace()
            .map(|v| {
                alg.quiver()
                    .vertex_id(v)
                    .ok_or_else(|| Error::parse("split", line, format!("unknown vertex {v:?}")))
            })
            .collect()
    };
    match text {
        Some(t) => {
            let (mut g, mut gb) = (None, None);
            for (i, raw) in t.lines().enumerate() {
                let line = raw.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let Some((k, v)) = line.split_once(':') else {
                    return Err(Error::parse("split", i + 1, "expected `gamma: …` or `gamma_bar: …`"));
                };
                match k.trim() {
                    "gamma" => g = Some(ids(v, i + 1)?),
                    "gamma_bar" => gb = Some(ids(v, i + 1)?),
                    other => return Err(Error::parse("split", i + 1, format!("unknown key {other:?}"))),
                }
            }
            match (g, gb) {
                (Some(g), Some(gb)) => Ok((g, gb)),
                _ => Err(Error::parse("split", 0, "both gamma and gamma_bar are required")),
            }
        }
        None => match spec.split_once('|') {
            Some((a, b)) => Ok((ids(a, 1)?, ids(b, 1)?)),
            None => Err(Error::parse("split", 0, format!("cannot read split file {spec}"))),
        },
    }
}

fn triangular(alg: &Algebra, opts: &Options, r: &mut Report) -> Result<()> {
    let spec = opts.split.as_deref().ok_or_else(|| Error::parse("flags", 0, "triangular-check needs --split"))?;
    let (g, gb) = parse_split(alg, spec)?;
    let rep = itphi::triangular_check(alg, &g, &gb, opts.linear_steps())?;
    let show = |x: Option<usize>| x.map(|v| json!(v)).unwrap_or(json!("unknown"));
    r.result = json!({
        "hypotheses": "hold",
        "lower_C": rep.lower_c,
        "upper_C": show(rep.upper_c),
        "upper_A": show(rep.upper_a),
        "upper_B": show(rep.upper_b),
        "bound": show(rep.bound),
        "consistent": rep.consistent,
    });
    if let Some(w) = &rep.lower_witness {
        r.cert(json!({"lower_witness": w}));
    }
    let s = |x: Option<usize>| x.map(|v| v.to_string()).unwrap_or_else(|| "unknown".into());
    r.line("hypotheses hold");
    r.line(format!(
        "φdim(C) ≥ {}  φdim(C) ≤ {}  φdim(A) ≤ {}  φdim(B) ≤ {}  bound {}",
        rep.lower_c,
        s(rep.upper_c),
        s(rep.upper_a),
        s(rep.upper_b),
        s(rep.bound)
    ));
    r.line(format!("consistent: {}", rep.consistent));
    if !rep.consistent {
        return Err(Error::Invariant("lower bound exceeds the triangular bound".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_co_gorenstein_json() {
        let (code, out) = run(&Options::new("co-gorenstein", "corpus:c3_k2").json());
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"], json!({"verdict": true, "branch": "cycle_graph"}));
    }

    #[test]
    fn loop_pair_gp_list() {
        let r = execute(&Options::new("gp-list", "corpus:sec4_example")).unwrap();
        assert_eq!(r.result.as_array().unwrap().len(), 1);
        assert!(r.text.contains("(γ, γ)") || r.text.contains("(gamma, gamma)"), "{}", r.text);
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(run(&Options::new("gldim", "corpus:nope")).0, 1);
        assert_eq!(run(&Options::new("pd", "corpus:sec4_example").module("simple(9)")).0, 1);
        let mut o = Options::new("periodic-test", "corpus:sec3_example").module("M_a(1)");
        o.steps = Some(3);
        assert_eq!(run(&o).0, 2);
    }

    #[test]
    fn json_is_deterministic() {
        let o = Options::new("phidim-bounds", "corpus:sec4_example").json();
        assert_eq!(run(&o), run(&o));
    }
}
