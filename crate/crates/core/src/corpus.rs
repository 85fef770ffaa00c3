//! Embedded example algebras and the named module families that live on them.

use num_rational::BigRational;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format::parse_algebra;
use crate::itphi::CatalogEntry;
use crate::linrep::{Linrep, Rep};
use crate::matrix::Matrix;

pub const FILES: &[(&str, &str)] = &[
    ("sec3_example", include_str!("../corpus/sec3_example.alg")),
    ("sec3_literal", include_str!("../corpus/sec3_literal.alg")),
    ("sec4_example", include_str!("../corpus/sec4_example.alg")),
    ("finito", include_str!("../corpus/finito.alg")),
    ("infinito", include_str!("../corpus/infinito.alg")),
    ("c3_k2", include_str!("../corpus/c3_k2.alg")),
    ("a3_k2", include_str!("../corpus/a3_k2.alg")),
    ("loop_subheart", include_str!("../corpus/loop_subheart.alg")),
];

pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// Accepts `finito` as well as `finito.alg`.
pub fn source(name: &str) -> Option<&'static str> {
    let name = name.strip_suffix(".alg").unwrap_or(name);
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Result<Algebra> {
    let text = source(name).ok_or_else(|| Error::parse("corpus", 0, format!("no corpus entry named {name:?}")))?;
    parse_algebra(text)
}

fn arrow<F: Field>(lr: &Linrep<F>, name: &str) -> Result<usize> {
    lr.algebra()
        .quiver()
        .arrow_id(name)
        .ok_or_else(|| Error::InvalidRepresentation(format!("this algebra has no arrow named {name}")))
}

fn elem<F: Field>(lr: &Linrep<F>, q: &BigRational) -> Result<F::Elem> {
    lr.field()
        .from_rational(q)
        .ok_or_else(|| Error::InvalidRepresentation(format!("{q} is not defined in the field")))
}

/// Dimension one at the vertices named `1` and `2`, zero elsewhere.
fn pair_dims<F: Field>(lr: &Linrep<F>) -> Result<Vec<usize>> {
    let q = lr.algebra().quiver();
    let mut dims = vec![0; q.vertex_count()];
    for name in ["1", "2"] {
        let v = q
            .vertex_id(name)
            .ok_or_else(|| Error::InvalidRepresentation(format!("this algebra has no vertex named {name}")))?;
        dims[v] = 1;
    }
    Ok(dims)
}

fn zero_rep<F: Field>(lr: &Linrep<F>, dims: Vec<usize>) -> (Vec<usize>, Vec<Matrix<F::Elem>>) {
    let maps = lr
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(lr.field(), dims[a.target], dims[a.source]))
        .collect();
    (dims, maps)
}

/// `M_a`: one-dimensional at both vertices, `a1` acting by `a`, `a2` by 1, the `b`'s by 0.
pub fn m_a<F: Field>(lr: &Linrep<F>, a: &BigRational) -> Result<Rep<F::Elem>> {
    let (dims, mut maps) = zero_rep(lr, pair_dims(lr)?);
    maps[arrow(lr, "a1")?][(0, 0)] = elem(lr, a)?;
    maps[arrow(lr, "a2")?][(0, 0)] = lr.field().one();
    lr.rep(dims, maps)
}

/// `N_a`: `b1` acting by 1, `b2` by `a`, the `a`'s by 0.
pub fn n_a<F: Field>(lr: &Linrep<F>, a: &BigRational) -> Result<Rep<F::Elem>> {
    let (dims, mut maps) = zero_rep(lr, pair_dims(lr)?);
    maps[arrow(lr, "b1")?][(0, 0)] = lr.field().one();
    maps[arrow(lr, "b2")?][(0, 0)] = elem(lr, a)?;
    lr.rep(dims, maps)
}

/// The block inclusion `i_m : k^n → k^{3n+1}`, `m = 1..4`.
fn inclusion<F: Field>(f: &F, m: usize, n: usize) -> Matrix<F::Elem> {
    let offset = match m {
        1 => 0,
        2 => n,
        3 => n + 1,
        _ => 2 * n + 1,
    };
    let mut x = Matrix::zeros(f, 3 * n + 1, n);
    for j in 0..n {
        x[(offset + j, j)] = f.one();
    }
    x
}

fn m_family<F: Field>(lr: &Linrep<F>, i: usize, n: usize, assignment: [usize; 4]) -> Result<Rep<F::Elem>> {
    if !(1..=4).contains(&i) || n == 0 {
        return Err(Error::InvalidRepresentation(format!("need 1 <= i <= 4 and n >= 1, got i = {i}, n = {n}")));
    }
    let mut dims = vec![0; 4];
    dims[i - 1] = n;
    dims[i % 4] = 3 * n + 1;
    let (dims, mut maps) = zero_rep(lr, dims);
    for (name, m) in ["ab", "a", "b", "bb"].iter().zip(assignment) {
        maps[arrow(lr, &format!("{name}{i}"))?] = inclusion(lr.field(), m, n);
    }
    lr.rep(dims, maps)
}

/// `M^{α_i}_n` on the radical-cube-zero cyclic algebra: `ᾱ_i, α_i, β_i, β̄_i ↦ i_2, i_3, i_1, i_4`.
pub fn m_alpha<F: Field>(lr: &Linrep<F>, i: usize, n: usize) -> Result<Rep<F::Elem>> {
    m_family(lr, i, n, [2, 3, 1, 4])
}

/// `M^{β_i}_n`: `ᾱ_i, α_i, β_i, β̄_i ↦ i_4, i_1, i_3, i_2`.
pub fn m_beta<F: Field>(lr: &Linrep<F>, i: usize, n: usize) -> Result<Rep<F::Elem>> {
    m_family(lr, i, n, [4, 1, 3, 2])
}

fn natural(q: &BigRational, what: &str) -> Result<usize> {
    if q.is_integer() && *q >= BigRational::from_integer(0.into()) {
        q.to_integer().try_into().map_err(|_| Error::InvalidRepresentation(format!("{what} too large")))
    } else {
        Err(Error::InvalidRepresentation(format!("{what} must be a natural number, got {q}")))
    }
}

/// Evaluates a named module family; `None` when the name is not a known family.
pub fn generator<F: Field>(lr: &Linrep<F>, name: &str, args: &[BigRational]) -> Option<Result<Rep<F::Elem>>> {
    let arity = |k: usize| -> Result<()> {
        if args.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidRepresentation(format!("{name} takes {k} arguments, got {}", args.len())))
        }
    };
    let r = match name {
        "M_a" => arity(1).and_then(|_| m_a(lr, &args[0])),
        "N_a" => arity(1).and_then(|_| n_a(lr, &args[0])),
        "M_alpha" | "M_beta" => arity(2).and_then(|_| {
            let i = natural(&args[0], "index")?;
            let n = natural(&args[1], "size")?;
            if name == "M_alpha" {
                m_alpha(lr, i, n)
            } else {
                m_beta(lr, i, n)
            }
        }),
        _ => return None,
    };
    Some(r)
}

fn is_cyclic_rcz<F: Field>(lr: &Linrep<F>) -> bool {
    let q = lr.algebra().quiver();
    q.vertex_count() == 4
        && (1..=4).all(|i| ["a", "ab", "b", "bb"].iter().all(|p| q.arrow_id(&format!("{p}{i}")).is_some()))
}

fn is_doubled_pair<F: Field>(lr: &Linrep<F>) -> bool {
    let q = lr.algebra().quiver();
    let ends = |name: &str, s: &str, t: &str| {
        q.arrow_id(name).is_some_and(|a| {
            let a = q.arrow(a);
            q.vertex_name(a.source) == s && q.vertex_name(a.target) == t
        })
    };
    ends("a1", "1", "2") && ends("a2", "1", "2") && ends("b1", "2", "1") && ends("b2", "2", "1")
}

/// The catalog used for catalog-based φ: the simples (terminal), the modules `M_a`, `N_a`
/// for a few parameters when the doubled two-vertex quiver is present, and, on the
/// radical-cube-zero cyclic algebra, every `M^{α_i}_m`, `M^{β_i}_m` with `m ≤ n_max`.
pub fn catalog<F: Field>(lr: &Linrep<F>, n_max: usize) -> Result<Vec<CatalogEntry<F::Elem>>> {
    let q = lr.algebra().quiver();
    let mut out: Vec<CatalogEntry<F::Elem>> = (0..q.vertex_count())
        .map(|v| CatalogEntry {
            name: format!("S_{}", q.vertex_name(v)),
            rep: lr.simple(v),
            terminal: true,
        })
        .collect();
    if is_doubled_pair(lr) {
        for (n, d) in [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)] {
            let a = BigRational::new(n.into(), d.into());
            let label = crate::field::format_rational(&a);
            out.push(CatalogEntry { name: format!("M_a({label})"), rep: m_a(lr, &a)?, terminal: true });
            out.push(CatalogEntry { name: format!("N_a({label})"), rep: n_a(lr, &a)?, terminal: true });
        }
    }
    if is_cyclic_rcz(lr) {
        for m in 1..=n_max.max(1) {
            for i in 1..=4 {
                out.push(CatalogEntry { name: format!("M_alpha({i},{m})"), rep: m_alpha(lr, i, m)?, terminal: false });
                out.push(CatalogEntry { name: format!("M_beta({i},{m})"), rep: m_beta(lr, i, m)?, terminal: false });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::linrep::IsoOutcome;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn every_file_parses() {
        for name in names() {
            load(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn infinito_shape() {
        let a = load("infinito").unwrap();
        assert_eq!(a.quiver().arrow_count(), 16);
        let lr = Linrep::new(&a, Rationals).unwrap();
        assert_eq!(lr.projective(0).dims, vec![1, 4, 10, 0]);
        assert_eq!(m_alpha(&lr, 1, 2).unwrap().dims, vec![2, 7, 0, 0]);
        assert!(lr.iso_test(&m_alpha(&lr, 1, 1).unwrap(), &m_beta(&lr, 1, 1).unwrap()).is_isomorphic());
        assert!(!lr.iso_test(&m_alpha(&lr, 1, 2).unwrap(), &m_beta(&lr, 1, 2).unwrap()).is_isomorphic());
    }

    #[test]
    fn doubled_pair_syzygies() {
        let a = load("sec3_example").unwrap();
        assert_eq!(a.field(), crate::field::FieldSpec::Rationals);
        let lr = Linrep::new(&a, Rationals).unwrap();
        let m = m_a(&lr, &q(1, 1)).unwrap();
        let om = lr.syzygy_rep(&m);
        assert!(matches!(lr.iso_test(&om, &n_a(&lr, &q(-1, 2)).unwrap()), IsoOutcome::Isomorphic(_)));
    }

    #[test]
    fn literal_doubled_pair_syzygy_is_bigger() {
        let a = load("sec3_literal").unwrap();
        let lr = Linrep::new(&a, Rationals).unwrap();
        let om = lr.syzygy_rep(&m_a(&lr, &q(1, 1)).unwrap());
        assert_eq!(om.dims, vec![3, 1]);
    }
}
