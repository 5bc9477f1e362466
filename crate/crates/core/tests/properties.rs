//! Property tests for the polynomial algebra and the pairing identities.

use num_complex::Complex64;
use proptest::prelude::*;

use apolar_core::apolarity::{bracket, fischer_ip, sym_eval, symmetrize};
use apolar_core::poly::{elem_sym, Polynomial};
use apolar_core::pullback::{s_eval, t_apply, t_diagonal, t_matrix};
use apolar_core::regions::{is_positive_definite, schur_cohn};
use apolar_core::rng::SplitMix64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn complex_strategy() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| c(re, im))
}

fn poly_strategy(ambient: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(complex_strategy(), ambient + 1).prop_map(Polynomial::new)
}

/// Polynomial whose ambient degree is its exact degree.
fn full_degree_poly_strategy(ambient: usize) -> impl Strategy<Value = Polynomial> {
    poly_strategy(ambient).prop_map(move |p| {
        let mut coeffs = p.coeffs().to_vec();
        let lead = coeffs[ambient];
        if lead.norm() < 0.5 {
            coeffs[ambient] = lead + c(1.0, 0.5);
        }
        Polynomial::new(coeffs)
    })
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + a.norm() + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sharp_and_check_are_involutions(p in (0usize..=8).prop_flat_map(poly_strategy)) {
        let ss = p.sharp().sharp();
        let cc = p.check().check();
        prop_assert_eq!(ss.coeffs(), p.coeffs());
        prop_assert_eq!(cc.coeffs(), p.coeffs());
    }

    #[test]
    fn sharp_is_multiplicative_on_full_degree_factors(
        p in (1usize..=5).prop_flat_map(full_degree_poly_strategy),
        r in (1usize..=5).prop_flat_map(full_degree_poly_strategy),
    ) {
        let lhs = p.mul(&r).sharp();
        let rhs = p.sharp().mul(&r.sharp());
        let scale = lhs.max_coeff_abs().max(1.0);
        for k in 0..=lhs.ambient() {
            prop_assert!((lhs.coeff(k) - rhs.coeff(k)).norm() <= 1e-12 * scale);
        }
    }

    #[test]
    fn roots_reconstruct_monic_polynomials(
        low in prop::collection::vec(complex_strategy(), 1..=8),
    ) {
        let mut coeffs = low;
        coeffs.push(c(1.0, 0.0));
        let p = Polynomial::new(coeffs);
        let roots = p.roots(1e-9).unwrap();
        prop_assert_eq!(roots.roots.len(), p.ambient());
        let rebuilt = Polynomial::from_roots(&roots.roots);
        let scale = p.max_coeff_abs();
        for k in 0..=p.ambient() {
            prop_assert!(
                (rebuilt.coeff(k) - p.coeff(k)).norm() <= 1e-8 * scale,
                "coefficient {} differs: {} vs {}", k, rebuilt.coeff(k), p.coeff(k)
            );
        }
    }

    #[test]
    fn composition_agrees_with_pointwise_evaluation(
        f in (1usize..=4).prop_flat_map(poly_strategy),
        q in (1usize..=3).prop_flat_map(poly_strategy),
        seed in any::<u64>(),
    ) {
        let comp = f.compose(&q);
        let mut rng = SplitMix64::new(seed);
        for _ in 0..20 {
            let z = rng.next_complex_in_disk(1.5);
            let direct = f.eval(q.eval(z));
            let via = comp.eval(z);
            prop_assert!(
                (direct - via).norm() <= 1e-12 * (1.0 + direct.norm() + via.norm())
            );
        }
    }

    #[test]
    fn elementary_symmetric_matches_expanded_product(
        points in prop::collection::vec(complex_strategy(), 1..=6),
    ) {
        let n = points.len();
        let p = Polynomial::from_roots(&points);
        for k in 0..=n {
            let sigma = elem_sym(k, &points).unwrap();
            let sign = if k % 2 == 1 { -1.0 } else { 1.0 };
            prop_assert!(close(p.coeff(n - k), sign * sigma, 1e-12));
        }
    }

    #[test]
    fn bracket_sign_symmetry(
        n in 1usize..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64::new(seed);
        let f = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let g = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let fg = bracket(&f, &g, n).unwrap();
        let gf = bracket(&g, &f, n).unwrap();
        let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
        prop_assert!(close(fg, sign * gf, 1e-12));
    }

    #[test]
    fn bracket_equals_fischer_of_reflected_argument(
        n in 1usize..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64::new(seed);
        let f = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let g = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let via_bracket = bracket(&f, &g, n).unwrap();
        let via_ip = fischer_ip(&f, &g.sharp().check(), n).unwrap();
        prop_assert!(close(via_bracket, via_ip, 1e-12));
    }

    #[test]
    fn multiplication_by_z_is_adjoint_to_differentiation(
        n in 1usize..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64::new(seed);
        let g = Polynomial::new((0..n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let f = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let zg = g.mul(&Polynomial::from_real(&[0.0, 1.0]));
        let lhs = fischer_ip(&zg, &f, n).unwrap();
        let rhs = fischer_ip(&g, &f.derivative(), n - 1).unwrap() / n as f64;
        prop_assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn reflected_pairing_sign_symmetry(
        n in 1usize..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64::new(seed);
        let f = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let g = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let lhs = fischer_ip(&f, &g.sharp().check(), n).unwrap();
        let rhs = fischer_ip(&g, &f.sharp().check(), n).unwrap();
        let sign = if n % 2 == 1 { -1.0 } else { 1.0 };
        prop_assert!(close(lhs, sign * rhs, 1e-12));
    }

    #[test]
    fn sym_eval_routes_agree(
        n in 1usize..=6,
        seed in any::<u64>(),
    ) {
        let mut rng = SplitMix64::new(seed);
        let f = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(2.0)).collect());
        let y: Vec<Complex64> = (0..n).map(|_| rng.next_complex_in_disk(2.0)).collect();
        let via_ip = sym_eval(&f, n, &y).unwrap();
        let via_sigma = symmetrize(&f, n).unwrap().eval(&y).unwrap();
        prop_assert!(close(via_ip, via_sigma, 1e-10));
    }
}

// Deterministic sweeps for the operator and root-location properties.

fn random_monic(rng: &mut SplitMix64, d: usize, radius: f64) -> Polynomial {
    let mut coeffs: Vec<Complex64> = (0..d).map(|_| rng.next_complex_in_disk(radius)).collect();
    coeffs.push(c(1.0, 0.0));
    Polynomial::new(coeffs)
}

#[test]
fn operator_matrix_is_upper_triangular() {
    let mut rng = SplitMix64::new(2026);
    for case in 0..30 {
        let d = 1 + case % 4;
        let n = 1 + case % 5;
        let q = random_monic(&mut rng, d, 1.5);
        let m = t_matrix(&q, n).unwrap();
        let scale = m.entries.max_abs();
        for j in 0..=n {
            for k in 0..=n {
                if j > k {
                    assert!(
                        m.entries.get(j, k).norm() <= 1e-10 * scale,
                        "below-diagonal entry ({}, {}) too large for q = {:?}",
                        j,
                        k,
                        q
                    );
                }
            }
        }
    }
}

#[test]
fn operator_diagonal_matches_eigenvalue_formula() {
    let mut rng = SplitMix64::new(99);
    for d in 1..=4 {
        for n in 1..=5 {
            let q = random_monic(&mut rng, d, 1.5);
            let m = t_matrix(&q, n).unwrap();
            let diag = t_diagonal(n, d).unwrap();
            for (k, &want) in diag.iter().enumerate() {
                let got = m.entries.get(k, k);
                assert!(
                    (got - c(want, 0.0)).norm() <= 1e-10 * want.abs().max(1.0),
                    "diagonal {} of (n={}, d={}): {} vs {}",
                    k,
                    n,
                    d,
                    got,
                    want
                );
            }
        }
    }
}

#[test]
fn multi_point_form_is_symmetrization_of_the_image() {
    let mut rng = SplitMix64::new(555);
    for case in 0..25 {
        let d = 1 + case % 3;
        let n = 1 + case % 4;
        let q = random_monic(&mut rng, d, 1.2);
        let f = Polynomial::new((0..=n).map(|_| rng.next_complex_in_disk(1.5)).collect());
        let u: Vec<Complex64> = (0..n).map(|_| rng.next_complex_in_disk(1.5)).collect();
        let direct = s_eval(&q, n, &f, &u).unwrap();
        let tf = t_apply(&q, n, &f).unwrap();
        let via_sym = sym_eval(&tf, n, &u).unwrap();
        assert!(
            (direct - via_sym).norm() <= 1e-9 * (1.0 + direct.norm() + via_sym.norm()),
            "case {}: {} vs {}",
            case,
            direct,
            via_sym
        );
    }
}

#[test]
fn operator_solves_for_every_basis_vector() {
    let mut rng = SplitMix64::new(808);
    for case in 0..12 {
        let d = 1 + case % 4;
        let n = 1 + case % 5;
        let q = random_monic(&mut rng, d, 1.5);
        let m = t_matrix(&q, n).unwrap();
        for k in 0..=n {
            let mut e = vec![c(0.0, 0.0); n + 1];
            e[k] = c(1.0, 0.0);
            let x = m.entries.solve(&e).unwrap();
            let back = m.entries.apply(&x);
            for (got, want) in back.iter().zip(e.iter()) {
                assert!((got - want).norm() < 1e-8);
            }
        }
    }
}

#[test]
fn schur_cohn_agrees_with_root_location() {
    let mut rng = SplitMix64::new(424242);
    let mut tested = 0;
    while tested < 200 {
        let d = 1 + (rng.next_u64() % 5) as usize;
        let q = random_monic(&mut rng, d, 1.1);
        let roots = match q.roots(1e-9) {
            Ok(rs) => rs.roots,
            Err(_) => continue,
        };
        if roots.iter().any(|r| (r.norm() - 1.0).abs() <= 1e-6) {
            continue;
        }
        tested += 1;
        let all_inside = roots.iter().all(|r| r.norm() < 1.0);
        let pd = is_positive_definite(&schur_cohn(&q).unwrap(), 1e-12).unwrap();
        assert_eq!(
            pd, all_inside,
            "Schur-Cohn disagrees with the root finder for q = {:?} (roots {:?})",
            q, roots
        );
    }
}
