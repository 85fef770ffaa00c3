//! Quiver representations over an exact field: Hom spaces, isomorphism certificates,
//! minimal syzygies, catalog decomposition and projective-dimension probing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, IdealSpec};
use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::pathcalc::{Calculus, ModuleMultiset, PathClass};
use crate::quiver::{Path, VertexId};
use crate::{Dim, Error, Result};

/// A representation: a vector space per vertex and a matrix per arrow
/// (rows indexed by the target space, columns by the source space).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep<E> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<E>>,
}

impl<E: Clone> Rep<E> {
    pub fn dim_vector(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

/// A module homomorphism, one matrix `X_v : M_v → N_v` per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hom<E> {
    pub maps: Vec<Matrix<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome<E> {
    Isomorphic(Hom<E>),
    NotIsomorphic(String),
    Undetermined,
}

impl<E> IsoOutcome<E> {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            IsoOutcome::Isomorphic(_) => "isomorphic",
            IsoOutcome::NotIsomorphic(_) => "not_isomorphic",
            IsoOutcome::Undetermined => "undetermined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdOutcome {
    Finite(usize),
    InfiniteCertified(String),
    AtLeast(usize),
}

impl std::fmt::Display for PdOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PdOutcome::Finite(n) => write!(f, "{n}"),
            PdOutcome::InfiniteCertified(_) => write!(f, "infinite_certified"),
            PdOutcome::AtLeast(n) => write!(f, "at_least({n})"),
        }
    }
}

/// A certified decomposition: `(catalog index, multiplicity)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<(usize, usize)>,
    pub ambiguous: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    pub trials: usize,
    pub seed: u64,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { trials: 20, seed: 0 }
    }
}

/// The representation engine for one algebra over its field.
pub struct Linrep<'a, F: Field> {
    alg: &'a Algebra,
    f: F,
    pub iso: IsoOptions,
}

type R<F> = Rep<<F as Field>::Elem>;

impl<'a, F: Field> Linrep<'a, F> {
    pub fn new(alg: &'a Algebra, f: F) -> Result<Self> {
        if alg.field() != f.spec() {
            return Err(Error::FieldMismatch(alg.field().to_string(), f.spec().to_string()));
        }
        Ok(Linrep {
            alg,
            f,
            iso: IsoOptions::default(),
        })
    }

    pub fn algebra(&self) -> &'a Algebra {
        self.alg
    }

    pub fn field(&self) -> &F {
        &self.f
    }

    fn n_vertices(&self) -> usize {
        self.alg.quiver().vertex_count()
    }

    fn zero_maps(&self, dims: &[usize]) -> Vec<Matrix<F::Elem>> {
        self.alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(&self.f, dims[a.target], dims[a.source]))
            .collect()
    }

    /// Builds and validates a representation from per-arrow matrices.
    pub fn rep(&self, dims: Vec<usize>, maps: Vec<Matrix<F::Elem>>) -> Result<R<F>> {
        let q = self.alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrow_count() {
            return Err(Error::InvalidRepresentation("wrong number of vertex spaces or arrow matrices".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix for {} has shape {:?}, expected {}x{}",
                    a.name,
                    m.shape(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
        }
        let m = Rep { dims, maps };
        self.check_relations(&m)?;
        Ok(m)
    }

    pub fn zero(&self) -> R<F> {
        let dims = vec![0; self.n_vertices()];
        Rep {
            maps: self.zero_maps(&dims),
            dims,
        }
    }

    pub fn simple(&self, v: VertexId) -> R<F> {
        let mut dims = vec![0; self.n_vertices()];
        dims[v] = 1;
        Rep {
            maps: self.zero_maps(&dims),
            dims,
        }
    }

    /// Action of a path: arrow matrices multiplied in traversal order, later arrows on the left.
    pub fn path_action(&self, m: &R<F>, p: &Path) -> Matrix<F::Elem> {
        let mut acc = Matrix::identity(&self.f, m.dims[p.source()]);
        for &a in p.arrows() {
            acc = matrix::mul(&self.f, &m.maps[a], &acc);
        }
        acc
    }

    /// Every ideal generator acts as zero.
    pub fn check_relations(&self, m: &R<F>) -> Result<()> {
        let f = &self.f;
        let q = self.alg.quiver();
        let fail = |what: String| Err(Error::InvalidRepresentation(format!("{what} does not act as zero")));
        match self.alg.ideal() {
            IdealSpec::Truncated(k) => {
                for p in crate::quiver::paths_up_to(q, *k).iter().filter(|p| p.len() == *k) {
                    if !matrix::is_zero_matrix(f, &self.path_action(m, p)) {
                        return fail(p.traversal_string(q));
                    }
                }
            }
            IdealSpec::Monomial(gens) => {
                for g in gens {
                    if !matrix::is_zero_matrix(f, &self.path_action(m, g)) {
                        return fail(g.traversal_string(q));
                    }
                }
            }
            IdealSpec::Relations { relations, nilpotency } => {
                for (i, r) in relations.iter().enumerate() {
                    let (s, t) = r.endpoints().expect("relations are nonempty");
                    let mut acc = Matrix::zeros(f, m.dims[t], m.dims[s]);
                    for (c, p) in &r.terms {
                        let c = f.from_rational(c).expect("coefficient lives in the field");
                        acc = matrix::add(f, &acc, &matrix::scale(f, &c, &self.path_action(m, p)));
                    }
                    if !matrix::is_zero_matrix(f, &acc) {
                        return fail(format!("relation {}", i + 1));
                    }
                }
                for p in crate::quiver::paths_up_to(q, *nilpotency).iter().filter(|p| p.len() == *nilpotency) {
                    if !matrix::is_zero_matrix(f, &self.path_action(m, p)) {
                        return fail(p.traversal_string(q));
                    }
                }
            }
        }
        Ok(())
    }

    /// `P_v = A e_v` on the basis of paths from `v`.
    pub fn projective(&self, v: VertexId) -> R<F> {
        let idx = self.alg.basis_from(v);
        self.module_on_basis(&idx, |b, a| {
            let p = self.alg.basis()[b].then(&Path::arrow(self.alg.quiver(), a));
            p.map(|p| self.alg.reduce(&p)).unwrap_or_default()
        })
    }

    /// `I_v = D(e_v A)` on the dual basis of paths into `v`.
    pub fn injective(&self, v: VertexId) -> R<F> {
        let q = self.alg.quiver();
        let idx = self.alg.basis_to(v);
        let dims = self.grade(&idx, |b| self.alg.basis()[b].source());
        let pos = self.positions(&idx, |b| self.alg.basis()[b].source());
        let mut maps = self.zero_maps(&dims);
        for (a, arrow) in q.arrows().iter().enumerate() {
            // (α·x*)(y) = x*(y α): entry [y, x] = coefficient of x in "traverse α, then y"
            for &y in idx.iter().filter(|&&y| self.alg.basis()[y].source() == arrow.target) {
                let Some(p) = Path::arrow(q, a).then(&self.alg.basis()[y]) else {
                    continue;
                };
                for (x, c) in self.alg.reduce(&p) {
                    if let Some(&(_, col)) = pos.get(&x) {
                        maps[a][(pos[&y].1, col)] = self.f.from_rational(&c).expect("structure constant");
                    }
                }
            }
        }
        Rep { dims, maps }
    }

    fn grade(&self, idx: &[usize], vertex: impl Fn(usize) -> VertexId) -> Vec<usize> {
        let mut dims = vec![0; self.n_vertices()];
        for &b in idx {
            dims[vertex(b)] += 1;
        }
        dims
    }

    fn positions(
        &self,
        idx: &[usize],
        vertex: impl Fn(usize) -> VertexId,
    ) -> std::collections::HashMap<usize, (VertexId, usize)> {
        let mut next = vec![0; self.n_vertices()];
        idx.iter()
            .map(|&b| {
                let v = vertex(b);
                next[v] += 1;
                (b, (v, next[v] - 1))
            })
            .collect()
    }

    /// A module whose basis is a set of algebra basis elements graded by target,
    /// with arrow actions given in algebra coordinates.
    fn module_on_basis(&self, idx: &[usize], act: impl Fn(usize, usize) -> Vec<(usize, num_rational::BigRational)>) -> R<F> {
        let q = self.alg.quiver();
        let dims = self.grade(idx, |b| self.alg.basis()[b].target());
        let pos = self.positions(idx, |b| self.alg.basis()[b].target());
        let mut maps = self.zero_maps(&dims);
        for &b in idx {
            let (u, col) = pos[&b];
            for &a in q.out_arrows(u) {
                for (k, c) in act(b, a) {
                    let (_, row) = pos[&k];
                    maps[a][(row, col)] = self.f.from_rational(&c).expect("structure constant");
                }
            }
        }
        Rep { dims, maps }
    }

    /// The representation of a path class `A e_v / N` on its continuation basis.
    pub fn class_rep(&self, c: &PathClass) -> R<F> {
        let q = self.alg.quiver();
        let conts = c.continuations();
        let index: std::collections::HashMap<&Path, usize> = conts.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut dims = vec![0; self.n_vertices()];
        let mut pos = vec![0; conts.len()];
        for (i, p) in conts.iter().enumerate() {
            pos[i] = dims[p.target()];
            dims[p.target()] += 1;
        }
        let mut maps = self.zero_maps(&dims);
        for (i, p) in conts.iter().enumerate() {
            for &a in q.out_arrows(p.target()) {
                let ext = p.then(&Path::arrow(q, a)).expect("arrow extends path");
                if let Some(&j) = index.get(&ext) {
                    maps[a][(pos[j], pos[i])] = self.f.one();
                }
            }
        }
        Rep { dims, maps }
    }

    pub fn multiset_rep(&self, m: &ModuleMultiset) -> R<F> {
        let mut parts = Vec::new();
        for (c, k) in m.iter() {
            let r = self.class_rep(c);
            for _ in 0..k {
                parts.push(r.clone());
            }
        }
        self.direct_sum(&parts)
    }

    pub fn direct_sum(&self, parts: &[R<F>]) -> R<F> {
        if parts.is_empty() {
            return self.zero();
        }
        let n = self.n_vertices();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..self.alg.quiver().arrow_count())
            .map(|a| {
                let blocks: Vec<&Matrix<F::Elem>> = parts.iter().map(|p| &p.maps[a]).collect();
                Matrix::block_diag(&self.f, &blocks)
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn power(&self, m: &R<F>, k: usize) -> R<F> {
        self.direct_sum(&vec![m.clone(); k])
    }

    /// Radical `Σ_α im M_α` at each vertex, as column bases.
    pub fn radical(&self, m: &R<F>) -> Vec<Matrix<F::Elem>> {
        let q = self.alg.quiver();
        (0..self.n_vertices())
            .map(|v| {
                let mut acc = Matrix::zeros(&self.f, m.dims[v], 0);
                for &a in q.in_arrows(v) {
                    acc = acc.hstack(&m.maps[a]);
                }
                matrix::column_space(&self.f, &acc)
            })
            .collect()
    }

    /// Socle `∩_α ker M_α` at each vertex, as column bases.
    pub fn socle(&self, m: &R<F>) -> Vec<Matrix<F::Elem>> {
        let q = self.alg.quiver();
        (0..self.n_vertices())
            .map(|v| {
                let mut acc = Matrix::zeros(&self.f, 0, m.dims[v]);
                for &a in q.out_arrows(v) {
                    acc = acc.vstack(&m.maps[a]);
                }
                if acc.rows() == 0 {
                    Matrix::identity(&self.f, m.dims[v])
                } else {
                    matrix::kernel_matrix(&self.f, &acc)
                }
            })
            .collect()
    }

    pub fn top_dims(&self, m: &R<F>) -> Vec<usize> {
        self.radical(m).iter().zip(&m.dims).map(|(r, d)| d - r.cols()).collect()
    }

    pub fn socle_dims(&self, m: &R<F>) -> Vec<usize> {
        self.socle(m).iter().map(|s| s.cols()).collect()
    }

    /// The subrepresentation spanned by the columns of `basis[v]`; fails if not a submodule.
    pub fn subrep(&self, m: &R<F>, basis: &[Matrix<F::Elem>]) -> Result<R<F>> {
        let q = self.alg.quiver();
        let dims: Vec<usize> = basis.iter().map(|b| b.cols()).collect();
        let mut maps = Vec::with_capacity(q.arrow_count());
        for (a, arrow) in q.arrows().iter().enumerate() {
            let image = matrix::mul(&self.f, &m.maps[a], &basis[arrow.source]);
            let x = if dims[arrow.target] == 0 {
                if !matrix::is_zero_matrix(&self.f, &image) {
                    return Err(Error::InvalidRepresentation(format!("subspace not stable under {}", arrow.name)));
                }
                Matrix::zeros(&self.f, 0, dims[arrow.source])
            } else {
                matrix::solve(&self.f, &basis[arrow.target], &image)
                    .ok_or_else(|| Error::InvalidRepresentation(format!("subspace not stable under {}", arrow.name)))?
            };
            maps.push(x);
        }
        Ok(Rep { dims, maps })
    }

    /// `M / U` for a submodule `U` spanned by the columns of `basis[v]`, on standard complement coordinates.
    pub fn quotient(&self, m: &R<F>, basis: &[Matrix<F::Elem>]) -> Result<R<F>> {
        let f = &self.f;
        let q = self.alg.quiver();
        self.subrep(m, basis)?;
        let mut comp = Vec::with_capacity(basis.len());
        let mut frames = Vec::with_capacity(basis.len());
        for (v, b) in basis.iter().enumerate() {
            let idx = matrix::complement_standard(f, b);
            let mut frame = b.clone();
            if frame.rows() != m.dims[v] {
                frame = Matrix::zeros(f, m.dims[v], 0);
            }
            for &i in &idx {
                let mut e = Matrix::zeros(f, m.dims[v], 1);
                e[(i, 0)] = f.one();
                frame = frame.hstack(&e);
            }
            comp.push(idx);
            frames.push(frame);
        }
        let dims: Vec<usize> = comp.iter().map(Vec::len).collect();
        let mut maps = self.zero_maps(&dims);
        for (a, arrow) in q.arrows().iter().enumerate() {
            let (s, t) = (arrow.source, arrow.target);
            if dims[s] == 0 || dims[t] == 0 {
                continue;
            }
            let k = frames[t].cols() - dims[t];
            for (col, &i) in comp[s].iter().enumerate() {
                let image = Matrix::from_columns(f, m.dims[t], &[m.maps[a].column(i)]);
                let x = matrix::solve(f, &frames[t], &image).ok_or_else(|| Error::Invariant("frame not invertible".into()))?;
                for row in 0..dims[t] {
                    maps[a][(row, col)] = x[(k + row, 0)].clone();
                }
            }
        }
        Ok(Rep { dims, maps })
    }

    /// Minimal syzygy `Ω(M)`: kernel of the projective cover of the top.
    pub fn syzygy_rep(&self, m: &R<F>) -> R<F> {
        self.syzygy_with_cover(m).0
    }

    /// `Ω(M)` together with the top multiplicities of the cover `⊕ P_v^{t_v}`.
    pub fn syzygy_with_cover(&self, m: &R<F>) -> (R<F>, Vec<usize>) {
        let f = &self.f;
        let n = self.n_vertices();
        let rad = self.radical(m);
        let mut summands: Vec<(VertexId, Vec<F::Elem>)> = Vec::new();
        let mut tops = vec![0; n];
        for v in 0..n {
            for i in matrix::complement_standard(f, &rad[v]) {
                let mut t = vec![f.zero(); m.dims[v]];
                t[i] = f.one();
                summands.push((v, t));
                tops[v] += 1;
            }
        }
        let projs: Vec<R<F>> = (0..n).map(|v| self.projective(v)).collect();
        let cover = self.direct_sum(&summands.iter().map(|(v, _)| projs[*v].clone()).collect::<Vec<_>>());
        // π_w: columns M_b t for the cover basis elements b at w, summand by summand
        let mut kernel = Vec::with_capacity(n);
        for w in 0..n {
            let mut cols: Vec<Vec<F::Elem>> = Vec::new();
            for (v, t) in &summands {
                for b in self.alg.basis_from(*v) {
                    let p = &self.alg.basis()[b];
                    if p.target() == w {
                        cols.push(matrix::mul_vec(f, &self.path_action(m, p), t));
                    }
                }
            }
            let pi = Matrix::from_columns(f, m.dims[w], &cols);
            kernel.push(if pi.cols() == 0 {
                Matrix::zeros(f, 0, 0)
            } else if pi.rows() == 0 {
                Matrix::identity(f, pi.cols())
            } else {
                matrix::kernel_matrix(f, &pi)
            });
        }
        let syz = self.subrep(&cover, &kernel).expect("kernel of a module map is a submodule");
        (syz, tops)
    }

    /// Basis of `Hom(M, N)` from the intertwining equations `X_w M_α = N_α X_u`.
    pub fn hom_space(&self, m: &R<F>, n: &R<F>) -> Vec<Hom<F::Elem>> {
        let f = &self.f;
        let q = self.alg.quiver();
        let nv = self.n_vertices();
        let mut offset = vec![0; nv + 1];
        for v in 0..nv {
            offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
        }
        let unknowns = offset[nv];
        let var = |v: usize, i: usize, j: usize| offset[v] + i * m.dims[v] + j;
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let (u, w) = (arrow.source, arrow.target);
            for i in 0..n.dims[w] {
                for j in 0..m.dims[u] {
                    let mut row = vec![f.zero(); unknowns];
                    for k in 0..m.dims[w] {
                        let c = &m.maps[a][(k, j)];
                        if !f.is_zero(c) {
                            let x = var(w, i, k);
                            row[x] = f.add(&row[x], c);
                        }
                    }
                    for k in 0..n.dims[u] {
                        let c = &n.maps[a][(i, k)];
                        if !f.is_zero(c) {
                            let x = var(u, k, j);
                            row[x] = f.sub(&row[x], c);
                        }
                    }
                    if row.iter().any(|e| !f.is_zero(e)) {
                        rows.push(row);
                    }
                }
            }
        }
        let sols: Vec<Vec<F::Elem>> = if rows.is_empty() {
            (0..unknowns)
                .map(|i| {
                    let mut e = vec![f.zero(); unknowns];
                    e[i] = f.one();
                    e
                })
                .collect()
        } else {
            matrix::nullspace(f, &Matrix::from_rows(rows, unknowns))
        };
        sols.into_iter()
            .map(|s| Hom {
                maps: (0..nv)
                    .map(|v| {
                        let mut x = Matrix::zeros(f, n.dims[v], m.dims[v]);
                        for i in 0..n.dims[v] {
                            for j in 0..m.dims[v] {
                                x[(i, j)] = s[var(v, i, j)].clone();
                            }
                        }
                        x
                    })
                    .collect(),
            })
            .collect()
    }

    pub fn is_hom(&self, m: &R<F>, n: &R<F>, h: &Hom<F::Elem>) -> bool {
        let f = &self.f;
        self.alg.quiver().arrows().iter().enumerate().all(|(a, arrow)| {
            matrix::mul(f, &h.maps[arrow.target], &m.maps[a]) == matrix::mul(f, &n.maps[a], &h.maps[arrow.source])
        })
    }

    fn certify(&self, m: &R<F>, n: &R<F>, h: &Hom<F::Elem>) -> bool {
        let f = &self.f;
        self.is_hom(m, n, h)
            && h.maps.iter().all(|x| {
                x.rows() == x.cols()
                    && matrix::inverse(f, x).is_some_and(|xi| matrix::mul(f, x, &xi) == Matrix::identity(f, x.rows()))
            })
    }

    pub fn iso_test(&self, m: &R<F>, n: &R<F>) -> IsoOutcome<F::Elem> {
        self.iso_test_with(m, n, self.iso)
    }

    pub fn iso_test_with(&self, m: &R<F>, n: &R<F>, opts: IsoOptions) -> IsoOutcome<F::Elem> {
        let f = &self.f;
        if m.dims != n.dims {
            return IsoOutcome::NotIsomorphic(format!("dimension vectors {:?} and {:?} differ", m.dims, n.dims));
        }
        if m == n {
            let id = Hom {
                maps: m.dims.iter().map(|&d| Matrix::identity(f, d)).collect(),
            };
            return IsoOutcome::Isomorphic(id);
        }
        let hmn = self.hom_space(m, n);
        let hnm = self.hom_space(n, m);
        let emm = self.hom_space(m, m).len();
        let enn = self.hom_space(n, n).len();
        if hmn.len() != hnm.len() || hmn.len() != emm || emm != enn {
            return IsoOutcome::NotIsomorphic(format!(
                "dim Hom(M,N)={}, dim Hom(N,M)={}, dim End(M)={}, dim End(N)={}",
                hmn.len(),
                hnm.len(),
                emm,
                enn
            ));
        }
        for p in self.alg.basis().iter().filter(|p| !p.is_trivial()) {
            let (rm, rn) = (
                matrix::rank(f, &self.path_action(m, p)),
                matrix::rank(f, &self.path_action(n, p)),
            );
            if rm != rn {
                let q = self.alg.quiver();
                return IsoOutcome::NotIsomorphic(format!(
                    "path {} acts with rank {rm} and {rn}",
                    p.traversal_string(q)
                ));
            }
        }
        for h in &hmn {
            if self.certify(m, n, h) {
                return IsoOutcome::Isomorphic(h.clone());
            }
        }
        if hmn.len() == 1 {
            return IsoOutcome::NotIsomorphic("Hom(M,N) is spanned by one non-invertible map".into());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.trials {
            let coeffs: Vec<F::Elem> = (0..hmn.len()).map(|_| f.from_i64(rng.gen_range(-1000..=1000))).collect();
            let maps = (0..m.dims.len())
                .map(|v| {
                    let mut acc = Matrix::zeros(f, n.dims[v], m.dims[v]);
                    for (c, h) in coeffs.iter().zip(&hmn) {
                        acc = matrix::add(f, &acc, &matrix::scale(f, c, &h.maps[v]));
                    }
                    acc
                })
                .collect();
            let h = Hom { maps };
            if self.certify(m, n, &h) {
                return IsoOutcome::Isomorphic(h);
            }
        }
        IsoOutcome::Undetermined
    }

    /// Whether some `P_v` is a direct summand. `End(P_v)` is local, so a split pair exists
    /// exactly when some product of basis maps `P_v → M → P_v` is invertible.
    pub fn has_projective_summand(&self, m: &R<F>) -> bool {
        let f = &self.f;
        (0..self.n_vertices()).filter(|&v| m.dims[v] > 0).any(|v| {
            let p = self.projective(v);
            let into = self.hom_space(&p, m);
            let back = self.hom_space(m, &p);
            // endomorphisms of P_v with a nonzero e_v coefficient are invertible
            let e = self
                .alg
                .basis_from(v)
                .into_iter()
                .filter(|&b| self.alg.basis()[b].target() == v)
                .position(|b| self.alg.basis()[b].is_trivial())
                .expect("e_v is a basis path");
            into.iter().any(|g| {
                back.iter().any(|h| {
                    let comp = matrix::mul(f, &h.maps[v], &g.maps[v]);
                    !f.is_zero(&comp[(e, e)])
                })
            })
        })
    }

    /// Splits off simple direct summands: returns the multiplicity of `S_v` per vertex and a complement.
    pub fn strip_simples(&self, m: &R<F>) -> (Vec<usize>, R<F>) {
        let f = &self.f;
        let rad = self.radical(m);
        let soc = self.socle(m);
        let mut mults = Vec::new();
        let mut comp = Vec::new();
        for v in 0..self.n_vertices() {
            let both = matrix::intersect_spaces(f, &soc[v], &rad[v]);
            // socle vectors independent modulo soc ∩ rad
            let stacked = both.hstack(&soc[v]);
            let piv = matrix::independent_columns(f, &stacked);
            let chosen: Vec<usize> = piv.into_iter().filter(|&p| p >= both.cols()).map(|p| p - both.cols()).collect();
            mults.push(chosen.len());
            let s = soc[v].select_columns(&chosen);
            let extra = matrix::complement_standard(f, &rad[v].hstack(&s));
            let mut h = rad[v].clone();
            for i in extra {
                let mut e = Matrix::zeros(f, m.dims[v], 1);
                e[(i, 0)] = f.one();
                h = h.hstack(&e);
            }
            comp.push(h);
        }
        let rest = self.subrep(m, &comp).expect("a subspace containing the radical is a submodule");
        (mults, rest)
    }

    /// Writes `M` as a direct sum of catalog members, certified by an isomorphism.
    pub fn decompose_against_catalog(&self, m: &R<F>, catalog: &[R<F>]) -> Result<Decomposition> {
        let (simple_mults, rest) = self.strip_simples(m);
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for (v, &k) in simple_mults.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let idx = catalog
                .iter()
                .position(|c| c.total_dim() == 1 && c.dims[v] == 1)
                .ok_or_else(|| Error::NoDecomposition(format!("simple at vertex {} missing from the catalog", self.alg.quiver().vertex_name(v))))?;
            parts.push((idx, k));
        }
        if rest.is_zero() {
            parts.sort();
            return Ok(Decomposition { parts, ambiguous: false });
        }
        let sig = |r: &R<F>| -> Vec<usize> {
            let mut s = r.dims.clone();
            s.extend(self.top_dims(r));
            s.extend(self.socle_dims(r));
            s
        };
        let target = sig(&rest);
        let mut members: Vec<(usize, Vec<usize>)> = Vec::new();
        for (i, c) in catalog.iter().enumerate().filter(|(_, c)| c.total_dim() > 1) {
            let s = sig(c);
            if !members.iter().any(|(j, t)| *t == s && self.iso_test(&catalog[*j], c).is_isomorphic()) {
                members.push((i, s));
            }
        }
        let mut candidates = Vec::new();
        knapsack(&members, 0, &target, &mut Vec::new(), &mut candidates, 256);
        let mut found: Option<Vec<(usize, usize)>> = None;
        let mut ambiguous = false;
        for cand in candidates {
            let summands: Vec<R<F>> = cand
                .iter()
                .flat_map(|&(i, k)| std::iter::repeat_n(catalog[i].clone(), k))
                .collect();
            let sum = self.direct_sum(&summands);
            if self.iso_test(&rest, &sum).is_isomorphic() {
                if found.is_some() {
                    ambiguous = true;
                    break;
                }
                found = Some(cand);
            }
        }
        let Some(found) = found else {
            return Err(Error::NoDecomposition(format!(
                "no catalog combination certified for the non-simple part of dimension {:?}",
                rest.dims
            )));
        };
        parts.extend(found);
        parts.sort();
        Ok(Decomposition { parts, ambiguous })
    }

    /// Projective dimension probe along the minimal syzygy trajectory.
    pub fn pd_rep(&self, m: &R<F>, max_steps: usize) -> PdOutcome {
        if m.is_zero() {
            return PdOutcome::Finite(0);
        }
        let monomial = self.alg.is_monomial();
        let calc = if monomial { Calculus::new(self.alg).ok() } else { None };
        let catalog_classes = calc.as_ref().map(|c| c.all_classes()).unwrap_or_default();
        let catalog: Vec<R<F>> = catalog_classes.iter().map(|c| self.class_rep(c)).collect();
        let mut trajectory: Vec<R<F>> = vec![m.clone()];
        for i in 1..=max_steps {
            let next = self.syzygy_rep(trajectory.last().expect("nonempty trajectory"));
            if next.is_zero() {
                return PdOutcome::Finite(i - 1);
            }
            if let (Some(calc), true) = (&calc, i >= 2) {
                if let Ok(dec) = self.decompose_against_catalog(&next, &catalog) {
                    let mut ms = ModuleMultiset::new();
                    for &(j, k) in &dec.parts {
                        ms.add(catalog_classes[j].clone(), k);
                    }
                    return match calc.pd_multiset(&ms) {
                        Dim::Infinite => PdOutcome::InfiniteCertified(format!(
                            "Ω^{i} decomposes as {} which has infinite projective dimension",
                            calc.format_multiset(&ms)
                        )),
                        Dim::Finite(d) => PdOutcome::Finite(i + d),
                    };
                }
            }
            for (j, prev) in trajectory.iter().enumerate().skip(1) {
                if prev.dims == next.dims && self.iso_test(prev, &next).is_isomorphic() {
                    return PdOutcome::InfiniteCertified(format!("Ω^{j}(M) ≅ Ω^{i}(M) ≠ 0"));
                }
            }
            trajectory.push(next);
        }
        PdOutcome::AtLeast(max_steps)
    }

    /// Projectives and injectives agree as multisets up to isomorphism.
    pub fn is_self_injective(&self) -> bool {
        let n = self.n_vertices();
        let projs: Vec<R<F>> = (0..n).map(|v| self.projective(v)).collect();
        let mut injs: Vec<Option<R<F>>> = (0..n).map(|v| Some(self.injective(v))).collect();
        projs.iter().all(|p| {
            let hit = injs
                .iter()
                .position(|i| i.as_ref().is_some_and(|i| self.iso_test(p, i).is_isomorphic()));
            match hit {
                Some(k) => {
                    injs[k] = None;
                    true
                }
                None => false,
            }
        })
    }
}

/// Bounded knapsack over signature vectors; collects up to `cap` exact fillings.
fn knapsack(
    members: &[(usize, Vec<usize>)],
    from: usize,
    remaining: &[usize],
    chosen: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    if remaining.iter().all(|&r| r == 0) {
        out.push(chosen.clone());
        return;
    }
    if from == members.len() {
        return;
    }
    let (idx, sig) = &members[from];
    let max = sig
        .iter()
        .zip(remaining)
        .filter(|(s, _)| **s > 0)
        .map(|(s, r)| r / s)
        .min()
        .unwrap_or(0);
    for k in (0..=max).rev() {
        let rem: Vec<usize> = remaining.iter().zip(sig).map(|(r, s)| r - k * s).collect();
        if k > 0 {
            chosen.push((*idx, k));
        }
        knapsack(members, from + 1, &rem, chosen, out, cap);
        if k > 0 {
            chosen.pop();
        }
    }
}
