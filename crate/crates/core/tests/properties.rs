use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverhom::field::Rationals;
use quiverhom::format::{parse_algebra, print_algebra};
use quiverhom::homgor;
use quiverhom::itphi;
use quiverhom::linrep::Linrep;
use quiverhom::pathcalc::{Calculus, ModuleMultiset};
use quiverhom::shell::{run, Options};
use quiverhom::{random, Dim};

fn monomial(seed: u64) -> quiverhom::algebra::Algebra {
    random::monomial(&mut ChaCha8Rng::seed_from_u64(seed), 4, 6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn printed_algebras_parse_back(seed in any::<u64>()) {
        let a = monomial(seed);
        let text = print_algebra(&a);
        let b = parse_algebra(&text).unwrap();
        prop_assert_eq!(b.dim(), a.dim());
        prop_assert_eq!(print_algebra(&b), text);
    }

    #[test]
    fn class_dimensions_match_representations(seed in any::<u64>()) {
        let a = monomial(seed);
        let calc = Calculus::new(&a).unwrap();
        let lr = Linrep::new(&a, Rationals).unwrap();
        for c in calc.all_classes() {
            prop_assert_eq!(lr.class_rep(&c).dims, c.dim_vector(&a));
        }
    }

    #[test]
    fn syzygy_dimension_is_additive(seed in any::<u64>()) {
        // dim Ω(Ap) = dim P_{s(p)} - dim Ap for the projective cover of a cyclic module
        let a = monomial(seed);
        let calc = Calculus::new(&a).unwrap();
        for p in a.basis() {
            let c = calc.class_of(p).unwrap();
            let cover = calc.projective(c.vertex()).dim();
            let syz: usize = calc.syzygy(&c).iter().map(|(d, k)| d.dim() * k).sum();
            prop_assert_eq!(syz + c.dim(), cover);
        }
    }

    #[test]
    fn phi_bounded_by_pd_and_additive_copies(seed in any::<u64>(), picks in proptest::collection::vec(0usize..64, 1..4)) {
        let a = monomial(seed);
        let calc = Calculus::new(&a).unwrap();
        let classes = calc.all_classes();
        let m = ModuleMultiset::from_classes(picks.iter().map(|&i| classes[i % classes.len()].clone()));
        let phi = itphi::phi(&calc, &m);
        if let Dim::Finite(pd) = calc.pd_multiset(&m) {
            prop_assert_eq!(phi, pd);
        }
        prop_assert_eq!(itphi::phi(&calc, &m.scaled(2)), phi);
        let d = itphi::build_lattice(&calc, &m.classes().cloned().collect::<Vec<_>>()).rank();
        prop_assert!(phi <= d);
    }

    #[test]
    fn periodic_modules_are_in_omega_infinity(seed in any::<u64>()) {
        let a = monomial(seed);
        let calc = Calculus::new(&a).unwrap();
        for pm in homgor::all_periodic_modules(&calc).unwrap() {
            prop_assert!(homgor::omega_infinity(&calc, &pm.module));
            let per = calc.is_periodic(&pm.module, 1000).unwrap();
            prop_assert_eq!(per.period, Some(pm.period));
        }
        prop_assert_eq!(homgor::omega_infinity_trivial(&calc).unwrap(), homgor::omega_infinity_classes(&calc).is_empty());
    }

    #[test]
    fn gp_classes_are_periodic(seed in any::<u64>()) {
        let a = monomial(seed);
        let calc = Calculus::new(&a).unwrap();
        for g in homgor::gp_indecomposables(&calc).unwrap() {
            prop_assert!(calc.is_periodic(&ModuleMultiset::single(g.class), 1000).unwrap().periodic);
        }
    }

    #[test]
    fn truncated_verdicts_agree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::acyclic_truncated(&mut rng, 5, 8, &[2, 3]);
        let calc = Calculus::new(&a).unwrap();
        prop_assert!(homgor::cogorenstein_truncated(&calc).unwrap().verdict);
        prop_assert!(homgor::omega_infinity_trivial(&calc).unwrap());
    }
}

#[test]
fn shell_output_is_deterministic() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cmds = ["info", "gldim", "gp-list", "co-gorenstein", "phidim-bounds", "perfect-paths"];
    for name in quiverhom::corpus::names() {
        let cmd = cmds.choose(&mut rng).unwrap();
        let opts = Options::new(cmd, &format!("corpus:{name}")).json();
        assert_eq!(run(&opts), run(&opts), "{cmd} on {name}");
    }
}
