//! Random and exhaustive families of small monomial and truncated algebras.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{Algebra, IdealSpec};
use crate::field::FieldSpec;
use crate::quiver::{paths_up_to, Path, Quiver};

fn truncated(n: usize, edges: &[(usize, usize)], k: usize) -> Algebra {
    Algebra::new(Quiver::from_edges(n, edges), IdealSpec::Truncated(k), FieldSpec::Rationals)
        .expect("truncated path algebras are finite dimensional")
}

/// An acyclic truncated algebra: arrows go from lower to higher vertex numbers.
pub fn acyclic_truncated<R: Rng>(rng: &mut R, max_vertices: usize, max_arrows: usize, ks: &[usize]) -> Algebra {
    let n = rng.gen_range(2..=max_vertices.max(2));
    let m = rng.gen_range(1..=max_arrows.max(1));
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let s = rng.gen_range(0..n - 1);
            (s, rng.gen_range(s + 1..n))
        })
        .collect();
    let k = *ks.choose(rng).expect("nonempty exponent list");
    truncated(n, &edges, k)
}

/// A random quiver (loops and cycles allowed) with a random monomial ideal. Every path of
/// length `cap` is a generator, so the algebra is finite dimensional.
pub fn monomial<R: Rng>(rng: &mut R, max_vertices: usize, max_arrows: usize) -> Algebra {
    loop {
        let n = rng.gen_range(1..=max_vertices.max(1));
        let m = rng.gen_range(1..=max_arrows.max(1));
        let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let q = Quiver::from_edges(n, &edges);
        let cap = rng.gen_range(3..=4);
        let paths = paths_up_to(&q, cap);
        let mut gens: Vec<Path> = paths.iter().filter(|p| p.len() == cap).cloned().collect();
        let density = rng.gen_range(0.2..0.7);
        for p in paths.iter().filter(|p| (2..cap).contains(&p.len())) {
            if rng.gen_bool(density) {
                gens.push(p.clone());
            }
        }
        let gens = minimal_generators(gens);
        if gens.is_empty() {
            continue;
        }
        if let Ok(a) = Algebra::new(q, IdealSpec::Monomial(gens), FieldSpec::Rationals) {
            return a;
        }
    }
}

/// Drops generators that contain a shorter generator as a factor.
fn minimal_generators(mut gens: Vec<Path>) -> Vec<Path> {
    gens.sort_by(|a, b| a.length_lex_cmp(b));
    gens.dedup();
    let mut out: Vec<Path> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| g.contains_factor(h)) {
            out.push(g);
        }
    }
    out
}

/// Connected quivers with `1..=max_vertices` vertices and `1..=max_arrows` arrows (loops and
/// parallel arrows allowed), one representative per vertex relabelling.
pub fn connected_quivers(max_vertices: usize, max_arrows: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (0..n).map(move |t| (s, t))).collect();
        let perms = permutations(n);
        let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
        let mut cur: Vec<usize> = Vec::new();
        for m in 1..=max_arrows {
            multisets(pairs.len(), m, 0, &mut cur, &mut |idx| {
                let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
                if !weakly_connected(n, &edges) {
                    return;
                }
                let canon = perms
                    .iter()
                    .map(|p| {
                        let mut e: Vec<(usize, usize)> = edges.iter().map(|&(s, t)| (p[s], p[t])).collect();
                        e.sort();
                        e
                    })
                    .min()
                    .expect("at least the identity permutation");
                if seen.insert(canon.clone()) {
                    out.push((n, canon));
                }
            });
        }
    }
    out
}

/// Every truncated algebra over [`connected_quivers`] for the given exponents.
pub fn exhaustive_truncated(max_vertices: usize, max_arrows: usize, ks: &[usize]) -> Vec<Algebra> {
    let mut out = Vec::new();
    for (n, edges) in connected_quivers(max_vertices, max_arrows) {
        for &k in ks {
            out.push(truncated(n, &edges, k));
        }
    }
    out
}

fn multisets(universe: usize, size: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == size {
        f(cur);
        return;
    }
    for i in start..universe {
        cur.push(i);
        multisets(universe, size, i, cur, f);
        cur.pop();
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            go(k + 1, p, out);
            p.swap(k, i);
        }
    }
    go(0, &mut p, &mut out);
    out
}

fn weakly_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(s, t) in edges {
        let (a, b) = (find(&mut parent, s), find(&mut parent, t));
        parent[a] = b;
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_counts() {
        // one vertex: loops only, one class per arrow count
        assert_eq!(connected_quivers(1, 3).len(), 3);
        // two vertices, one arrow: 1 -> 2 only (up to relabelling)
        assert_eq!(connected_quivers(2, 1).iter().filter(|(n, _)| *n == 2).count(), 1);
        // two vertices, two arrows: parallel, opposite, arrow+loop at source, arrow+loop at target
        assert_eq!(connected_quivers(2, 2).iter().filter(|(n, e)| *n == 2 && e.len() == 2).count(), 4);
    }

    #[test]
    fn random_families_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = acyclic_truncated(&mut rng, 6, 10, &[2, 3, 4]);
            assert!(a.quiver().is_acyclic());
            let b = monomial(&mut rng, 4, 6);
            assert!(b.is_monomial());
        }
    }
}
