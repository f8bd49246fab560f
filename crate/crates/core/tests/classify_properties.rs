//! Packing-wide constancy of χ₂ and χ₄, lattice Gram identities and the
//! published type tables.

mod common;

use apollonian::classify::{
    chi2, chi2_at, chi4, chi4_raw_at, extended_type, lattice_of, residue_type, Chi4Class,
};
use apollonian::numtheory::gcd;
use apollonian::packing::Quadruple;
use common::{bounded_step, local_view, one_per_type, PUBLISHED};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CAP: i64 = 1_000_000;

#[test]
fn published_types_are_reproduced() {
    for (e, ty, ..) in PUBLISHED {
        let q = Quadruple::new(e).unwrap();
        assert_eq!(extended_type(&q).unwrap().tuple(), ty, "{q}");
    }
}

#[test]
fn chi_invariants_are_constant_along_walks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc417);
    for root in one_per_type() {
        let want2 = chi2(&root).unwrap();
        let want4 = chi4(&root).unwrap();
        let mut q = root;
        let mut evaluated = 0;
        for _ in 0..1000 {
            q = bounded_step(&q, &mut rng, CAP);
            let j = rng.gen_range(0..4);
            let Some(view) = local_view(&q, j) else {
                continue;
            };
            assert_eq!(chi2_at(&view).unwrap(), want2, "chi2 at {view} in {root}");
            if let Some(class) = want4 {
                let raw = chi4_raw_at(&view).unwrap();
                assert_eq!(
                    Chi4Class::from_power(raw),
                    class,
                    "chi4 at {view} in {root}"
                );
                assert_eq!(raw.square().as_sign(), Some(want2.as_i32()));
            }
            assert_eq!(extended_type(&q).unwrap(), extended_type(&root).unwrap());
            evaluated += 1;
        }
        assert!(
            evaluated > 500,
            "{root}: only {evaluated} circles evaluated"
        );
    }
}

#[test]
fn chi4_agrees_across_even_and_odd_tangent_circles() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xe4e4);
    let roots: Vec<Quadruple> = one_per_type()
        .into_iter()
        .filter(|q| residue_type(q).has_chi4())
        .collect();
    let mut pairs = 0;
    while pairs < 100 {
        let root = roots[pairs % roots.len()];
        let mut q = root;
        for _ in 0..rng.gen_range(1..40) {
            q = bounded_step(&q, &mut rng, CAP);
        }
        let Some(j) = (0..4).find(|&j| q.get(j) > 0 && q.get(j) % 2 == 0) else {
            continue;
        };
        let Some(even) = local_view(&q, j) else {
            continue;
        };
        let odd = even.swap(0, 1);
        if odd.get(0) <= 0 {
            continue;
        }
        let (a, b) = (chi4_raw_at(&even).unwrap(), chi4_raw_at(&odd).unwrap());
        assert_eq!(
            Chi4Class::from_power(a),
            Chi4Class::from_power(b),
            "{even} vs {odd}"
        );
        if a.is_real() {
            assert_eq!(a, b);
        }
        pairs += 1;
    }
}

#[test]
fn lattice_reproduces_the_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a77);
    let roots = one_per_type();
    let mut checked = 0;
    while checked < 1000 {
        let mut q = roots[checked % roots.len()];
        for _ in 0..rng.gen_range(0..60) {
            q = bounded_step(&q, &mut rng, CAP);
        }
        let Some(j) = (0..4).find(|&j| q.get(j) > 0 && q.get(j) % 2 == 1) else {
            continue;
        };
        let view = q.swap(0, j);
        let f = view.form_of().unwrap();
        let basis = lattice_of(&view).unwrap();
        assert_eq!(
            basis.gram(),
            (f.a as i128, f.b as i128, f.c as i128),
            "{view}"
        );
        assert_eq!(basis.covolume(), view.get(0) as i128);
        for (x, y) in [(1, 0), (0, 1), (2, -3), (5, 7)] {
            let z = basis.element(x, y).unwrap();
            assert_eq!(z.norm() as i128, f.eval(x, y));
        }
        checked += 1;
    }
}

#[test]
fn moves_preserve_descartes_data_and_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdec);
    for root in one_per_type() {
        let canonical = root.reduce_to_root();
        assert_eq!(canonical.reduce_to_root(), canonical);
        let mut q = root;
        for _ in 0..1000 {
            q = bounded_step(&q, &mut rng, CAP);
            let e = q.entries();
            assert!(Quadruple::new(e).is_ok());
            assert_eq!(e.iter().filter(|x| x.rem_euclid(2) == 1).count(), 2, "{q}");
            let g = e.iter().fold(0i64, |g, &x| gcd(g, x) as i64);
            assert_eq!(g, 1);
            for i in 0..4 {
                for k in i + 1..4 {
                    let r = (e[i] + e[k]).rem_euclid(8);
                    assert!(![3, 6, 7].contains(&r), "{} + {} in {q}", e[i], e[k]);
                }
            }
            assert_eq!(q.reduce_to_root(), canonical);
        }
    }
}
