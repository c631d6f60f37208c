//! End-to-end acceptance suite. One test per criterion; each prints a
//! PASS line with the measured residuals and elapsed time, and asserts
//! every threshold it states.

use std::f64::consts::PI;
use std::time::Instant;

use drinfeld_core::bialgebra::Bialgebra;
use drinfeld_core::catalog;
use drinfeld_core::flow::{
    cocycle_identity_residual, evolve, integrate_cocycle, jacobiator_check, observed_order,
    path_independence, AlgebraPath,
};
use drinfeld_core::linalg::{expm, max_abs, norm2, rvec};
use drinfeld_core::loops::{
    cobracket_modes, decay_fit, DecayRegime, LoopBase, LoopElement, SampledLoop,
};
use drinfeld_core::poisson::{check_poisson_axioms, schouten, schouten_self, Multivector};
use drinfeld_core::rng::SplitMix64;
use drinfeld_core::weights::{build_double_manin_traced, verify_manin, TorusWeighting};
use drinfeld_core::{CVec, C64};

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn distinct_weights(rng: &mut SplitMix64, n: usize) -> Vec<i64> {
    let mut pool: Vec<i64> = (-3..=3).collect();
    for i in (1..pool.len()).rev() {
        let j = rng.int_in(0, i as i64) as usize;
        pool.swap(i, j);
    }
    pool.truncate(n);
    pool
}

fn random_coords(rng: &mut SplitMix64, d: usize, scale: f64) -> CVec {
    rvec(
        &(0..d)
            .map(|_| rng.uniform(-scale, scale))
            .collect::<Vec<_>>(),
    )
}

#[test]
fn criterion_1_weight_space_manin_triples() {
    let start = Instant::now();
    let mut rng = SplitMix64::new(0x6a11);
    let mut worst = [0.0f64; 4];
    let mut min_sigma = f64::INFINITY;
    for trial in 0..50 {
        let n = 2 + trial % 3;
        let k = distinct_weights(&mut rng, n);
        let (_, w, state) = catalog::matrix_torus(n, &k).expect("weighting");
        let t = build_double_manin_traced(&w, &state).expect("double");
        let rep = verify_manin(&t, 1e-10);
        assert!(
            rep.pass,
            "M{n} with k = {k:?} failed verify_manin: {rep:?}"
        );
        worst[0] = worst[0].max(rep.closure_residual);
        worst[1] = worst[1].max(rep.isotropy_residual);
        worst[2] = worst[2].max(rep.invariance_residual);
        worst[3] = worst[3].max(rep.reconstruction_residual);
        min_sigma = min_sigma.min(rep.gram_sigma_min);
    }
    let (_, w, state) = catalog::sl3_weighted();
    let t = build_double_manin_traced(&w, &state).expect("sl3 double");
    let rep = verify_manin(&t, 1e-10);
    assert!(rep.pass, "sl3 double failed: {rep:?}");
    min_sigma = min_sigma.min(rep.gram_sigma_min);

    for r in worst {
        assert!(r < 1e-10, "residuals {worst:?}");
    }
    assert!(min_sigma > 1e-8, "gram sigma_min {min_sigma}");
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "criterion 1 took {elapsed:.2}s");
    println!(
        "criterion 1 (weight-space Manin triples): PASS \
         max residuals {worst:?}, sigma_min {min_sigma:.3e}, {elapsed:.2}s"
    );
}

#[test]
fn criterion_2_splitting_identity() {
    let start = Instant::now();
    let cases: Vec<TorusWeighting> = vec![
        catalog::matrix_torus(2, &[1, 0]).unwrap().1,
        catalog::matrix_torus(3, &[2, 1, 0]).unwrap().1,
        catalog::sl2_weighted().1,
    ];
    let mut rng = SplitMix64::new(0x5911);
    let mut worst: f64 = 0.0;
    for trial in 0..1000 {
        let w = &cases[trial % cases.len()];
        let g = w.algebra();
        let d = g.dim();
        let u = g.element(random_coords(&mut rng, d, 3.0)).unwrap();
        let v = g.element(random_coords(&mut rng, d, 3.0)).unwrap();
        let (a, x, y) = w.split(&u, &v).unwrap();
        let r1 = a.add(&x).unwrap().sub(&u).unwrap().norm();
        let r2 = a.add(&y).unwrap().sub(&v).unwrap().norm();
        let (p0, _, _) = w.projections();
        let r3 = norm2(&(&p0 * x.coords() + &p0 * y.coords()));
        worst = worst.max(r1).max(r2).max(r3);
    }
    assert!(worst < 1e-13, "splitting residual {worst}");
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "criterion 2 took {elapsed:.2}s");
    println!(
        "criterion 2 (splitting identity): PASS max residual {worst:.3e} \
         over 1000 draws, {elapsed:.2}s"
    );
}

#[test]
fn criterion_3_bialgebra_roundtrip() {
    let start = Instant::now();
    let mut worst_cocycle: f64 = 0.0;
    let mut worst_roundtrip: f64 = 0.0;
    for (name, bi) in catalog::bialgebra_catalog() {
        let coc = bi.check_cocycle(1e-10);
        assert!(coc.pass, "{name}: cocycle residual {}", coc.max_residual);
        worst_cocycle = worst_cocycle.max(coc.max_residual);
        let (_, jac) = bi.dual_bracket(1e-10);
        assert!(jac.pass, "{name}: co-Jacobi residual {}", jac.max_residual);

        // to_manin must reproduce the original double after the canonical
        // identification e_i -> p1_i, phi^a -> eps^a.
        let (t2, t2jac, t2manin) = bi.to_manin(1e-10).unwrap();
        assert!(t2jac.pass, "{name}: double Jacobi {}", t2jac.max_residual);
        assert!(t2manin.pass, "{name}: rebuilt triple fails: {t2manin:?}");
        let n = bi.dim();
        let dd = 2 * n;
        let p1 = bi.p1_embed.as_ref().unwrap();
        let p2 = bi.p2_embed.as_ref().unwrap();
        let mut m = drinfeld_core::CMat::zeros(dd, dd);
        for i in 0..n {
            m.set_column(i, &p1[i]);
            m.set_column(n + i, &p2[i]);
        }
        let minv = drinfeld_core::linalg::inverse(&m).unwrap();
        // original double for this catalog entry
        let orig = match name {
            "m2" => catalog::matrix_double(2, &[1, 0]).unwrap(),
            "m3" => catalog::matrix_double(3, &[2, 1, 0]).unwrap(),
            "m4" => catalog::matrix_double(4, &[3, 2, 1, 0]).unwrap(),
            "sl2" => catalog::sl2_double(),
            "sl3" => {
                let (_, w, s) = catalog::sl3_weighted();
                build_double_manin_traced(&w, &s).unwrap()
            }
            _ => unreachable!(),
        };
        let mut dev: f64 = 0.0;
        for i in 0..dd {
            for j in 0..dd {
                let vi = m.column(i).into_owned();
                let vj = m.column(j).into_owned();
                let ei = orig.double.element(vi).unwrap();
                let ej = orig.double.element(vj).unwrap();
                let br = orig.double.bracket(&ei, &ej).unwrap();
                let coords = &minv * br.coords();
                for k in 0..dd {
                    dev = dev.max((coords[k] - t2.double.c(i, j, k)).norm());
                }
            }
        }
        assert!(dev < 1e-10, "{name}: roundtrip deviation {dev}");
        worst_roundtrip = worst_roundtrip.max(dev);

        // Injected non-cocycle perturbation must be detected.
        let pert = bi.perturbed(0, 0, 1, c(0.1)).unwrap();
        let bad = pert.check_cocycle(1e-10);
        assert!(
            bad.max_residual > 1e-3,
            "{name}: perturbation undetected ({})",
            bad.max_residual
        );
    }

    // Randomized weighted doubles keep the property.
    let mut rng = SplitMix64::new(0xb1a1);
    for trial in 0..50 {
        let n = 2 + trial % 3;
        let k = distinct_weights(&mut rng, n);
        let t = catalog::matrix_double(n, &k).unwrap();
        let bi = Bialgebra::from_manin(&t, 1e-9).unwrap();
        let coc = bi.check_cocycle(1e-10);
        assert!(coc.pass, "random M{n} k={k:?}: {}", coc.max_residual);
        assert!(bi.dual_bracket(1e-10).1.pass);
    }

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "criterion 3 took {elapsed:.2}s");
    println!(
        "criterion 3 (bialgebra round trip): PASS cocycle <= {worst_cocycle:.3e}, \
         roundtrip <= {worst_roundtrip:.3e}, injected failures detected, {elapsed:.2}s"
    );
}

#[test]
fn criterion_4_fourier_decay_laws() {
    let start = Instant::now();
    let base = catalog::witt_base();

    // Smooth laws |m|^{-k}.
    let mut smooth_dev: f64 = 0.0;
    for k in [2u32, 3, 4] {
        let mut l = LoopElement::zero(base.clone());
        for m in 1..=64i64 {
            let v = (m as f64).powi(-(k as i32));
            l.add_mode(m, rvec(&[v])).unwrap();
            l.add_mode(-m, rvec(&[v])).unwrap();
        }
        let s = SampledLoop::from_loop(&l, 256).unwrap();
        let rep = decay_fit(&s, 32, DecayRegime::Smooth).unwrap();
        let dev = (rep.fitted - k as f64).abs();
        assert!(dev <= 0.3, "smooth k={k}: fitted {}", rep.fitted);
        smooth_dev = smooth_dev.max(dev);
    }

    // Analytic laws rho^{-|m|}.
    let mut analytic_dev: f64 = 0.0;
    for log_rho in [0.3f64, 0.5, 1.0] {
        let mut l = LoopElement::zero(base.clone());
        for m in -60..=60i64 {
            l.add_mode(m, rvec(&[(-log_rho * m.abs() as f64).exp()]))
                .unwrap();
        }
        let s = SampledLoop::from_loop(&l, 256).unwrap();
        let rep = decay_fit(&s, 20, DecayRegime::Analytic).unwrap();
        let rel = (rep.fitted - log_rho).abs() / log_rho;
        assert!(rel <= 0.05, "analytic log rho={log_rho}: fitted {}", rep.fitted);
        analytic_dev = analytic_dev.max(rel);
    }

    // Partial-sum tail bound 2/((k-1) N^{k-1}) with 10% slack.
    for k in [2u32, 3, 4] {
        let mut l = LoopElement::zero(base.clone());
        for m in 1..=64i64 {
            let v = (m as f64).powi(-(k as i32));
            l.add_mode(m, rvec(&[v])).unwrap();
            l.add_mode(-m, rvec(&[v])).unwrap();
        }
        let s = SampledLoop::from_loop(&l, 256).unwrap();
        let seminorm = s.seminorm(k as usize).unwrap();
        for n in [4i64, 8, 16] {
            let tail = s.partial_sum_tail(n).unwrap();
            let bound = seminorm * 2.0 / ((k as f64 - 1.0) * (n as f64).powi(k as i32 - 1));
            assert!(
                tail <= bound * 1.1,
                "tail bound violated: k={k} N={n} tail={tail:.3e} bound={bound:.3e}"
            );
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "criterion 4 took {elapsed:.2}s");
    println!(
        "criterion 4 (Fourier decay laws): PASS smooth dev <= {smooth_dev:.3}, \
         analytic rel dev <= {analytic_dev:.4}, tail bounds hold, {elapsed:.2}s"
    );
}

/// Quadrature oracle for the cobracket: (1/2pi) int omega(X [xi, zeta]) -
/// omega(X [eta, chi]) dtheta with the bracket evaluated pointwise (mode
/// derivatives for circle vector fields).
fn cobracket_quadrature(
    base: &LoopBase,
    x: &LoopElement,
    xi: &LoopElement,
    eta: &LoopElement,
    zeta: &LoopElement,
    chi: &LoopElement,
    points: usize,
) -> C64 {
    let eval_deriv = |l: &LoopElement, theta: f64| -> CVec {
        let mut out = CVec::zeros(l.base().dim());
        for (m, v) in l.modes() {
            let factor = C64::new(0.0, *m as f64) * C64::from_polar(1.0, *m as f64 * theta);
            out += v.map(|z| z * factor);
        }
        out
    };
    let pointwise_bracket = |a: &LoopElement, b: &LoopElement, theta: f64| -> CVec {
        if base.algebra().is_some() {
            base.coeff_bracket(0, &a.eval(theta), 0, &b.eval(theta))
        } else {
            // vector fields: f'g - g'f
            let fa = a.eval(theta);
            let fb = b.eval(theta);
            let da = eval_deriv(a, theta);
            let db = eval_deriv(b, theta);
            CVec::from_element(1, da[0] * fb[0] - db[0] * fa[0])
        }
    };
    let mut acc = C64::default();
    for j in 0..points {
        let theta = 2.0 * PI * j as f64 / points as f64;
        let br1 = pointwise_bracket(xi, zeta, theta);
        let br2 = pointwise_bracket(eta, chi, theta);
        acc += base.pair(&x.eval(theta), &br1) - base.pair(&x.eval(theta), &br2);
    }
    acc / c(points as f64)
}

#[test]
fn criterion_5_cobracket_consistency() {
    let start = Instant::now();
    let witt = catalog::witt_base();
    let m2 = catalog::matrix_loop_base(2);
    let mut rng = SplitMix64::new(0xc0b);
    let mut worst: f64 = 0.0;
    for trial in 0..20 {
        let base = if trial % 2 == 0 { &witt } else { &m2 };
        let d = base.dim();
        let make = |lo: i64, hi: i64, rng: &mut SplitMix64| {
            let mut l = LoopElement::zero(base.clone());
            for m in lo..=hi {
                let coeff = CVec::from_iterator(
                    d,
                    (0..d).map(|_| C64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))),
                );
                l.add_mode(m, coeff).unwrap();
            }
            l
        };
        let x = make(-8, 8, &mut rng);
        let xi = make(0, 8, &mut rng);
        let zeta = make(0, 8, &mut rng);
        let eta = make(-8, 0, &mut rng);
        let chi = make(-8, 0, &mut rng);
        let exact = cobracket_modes(&x, &xi, &eta, &zeta, &chi).unwrap();
        let quad = cobracket_quadrature(base, &x, &xi, &eta, &zeta, &chi, 256);
        let dev = (exact - quad).norm();
        assert!(dev < 1e-10, "trial {trial}: deviation {dev:.3e}");
        worst = worst.max(dev);
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 5.0, "criterion 5 took {elapsed:.2}s");
    println!(
        "criterion 5 (cobracket vs quadrature): PASS max deviation {worst:.3e} \
         over 20 instances, {elapsed:.2}s"
    );
}

fn generic_sl2_path() -> AlgebraPath {
    AlgebraPath::poly(vec![
        rvec(&[0.6, 0.8, 0.25]),
        rvec(&[-0.3, 0.0, 0.5]),
        rvec(&[0.0, 0.4, -0.2]),
    ])
    .unwrap()
}

#[test]
fn criterion_6_cocycle_integration() {
    let start = Instant::now();
    let bi = catalog::sl2_bialgebra();
    let group = catalog::group_sl2r();

    // (a) Path independence with refinement order.
    let x1 = rvec(&[0.5, -0.2, 0.3]);
    let x2 = rvec(&[-0.1, 0.6, 0.2]);
    let pc = AlgebraPath::concat(
        &AlgebraPath::constant(x1.clone()),
        &AlgebraPath::constant(x2.clone()),
    )
    .unwrap();
    let e2 = expm(&group.realized().realize_coords(&x2));
    let conj = group.ad(&e2, 1e-8).unwrap() * &x1;
    let pd = AlgebraPath::concat(
        &AlgebraPath::constant(x2.clone()),
        &AlgebraPath::constant(conj),
    )
    .unwrap();
    let mut data = Vec::new();
    for steps in [100usize, 200, 400] {
        let rep = path_independence(&bi, &group, &pc, &pd, steps).unwrap();
        data.push((steps, rep.theta_residual));
    }
    let final_resid = data[2].1;
    let order = observed_order(&data);
    assert!(final_resid < 1e-6, "path independence residual {final_resid:.3e}");
    assert!(order >= 3.5, "observed order {order:.2}, data {data:?}");

    // (b) Group cocycle identity.
    let pg = generic_sl2_path();
    let ph = AlgebraPath::poly(vec![rvec(&[-0.2, 0.3, 0.6]), rvec(&[0.5, -0.1, 0.0])]).unwrap();
    let cocycle_resid = cocycle_identity_residual(&bi, &group, &pg, &ph, 400).unwrap();
    assert!(cocycle_resid < 1e-6, "cocycle residual {cocycle_resid:.3e}");

    // (c) Theta(e) = 0 exactly for the zero path.
    let theta_e = integrate_cocycle(&bi, &group, &AlgebraPath::constant(CVec::zeros(3)), 64)
        .unwrap()
        .theta;
    assert_eq!(max_abs(&theta_e), 0.0, "Theta(e) must vanish exactly");

    // (d) Constant-path evolution against the matrix exponential, at the
    // suite's 400-step resolution.
    let mut rng = SplitMix64::new(0xe0);
    let mut exp_dev: f64 = 0.0;
    for _ in 0..5 {
        let coords = random_coords(&mut rng, 3, 0.8);
        let xm = group.realized().realize_coords(&coords);
        assert!(drinfeld_core::linalg::frobenius(&xm) <= 2.0);
        let flow = evolve(group.realized(), &AlgebraPath::constant(coords), 400).unwrap();
        exp_dev = exp_dev.max(max_abs(&(flow.end - expm(&xm))));
    }
    assert!(exp_dev < 1e-10, "exp deviation {exp_dev:.3e}");

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "criterion 6 took {elapsed:.2}s");
    println!(
        "criterion 6 (cocycle integration): PASS path-indep {final_resid:.3e} \
         (order {order:.2}), cocycle {cocycle_resid:.3e}, Theta(e) = 0, \
         exp dev {exp_dev:.3e}, {elapsed:.2}s"
    );
}

#[test]
fn criterion_7_jacobiator() {
    let start = Instant::now();
    let bi = catalog::sl2_bialgebra();
    let group = catalog::group_sl2r();
    let path = generic_sl2_path();

    let rep = jacobiator_check(&bi, &group, &path, 400, 1e-3).unwrap();
    assert!(rep.alg_max < 1e-12, "true bialgebra algebraic Jacobiator {rep:?}");
    assert!(rep.fd_max < 1e-4, "finite-difference Jacobiator {rep:?}");
    assert!(rep.transport_max < 1e-4, "transport law {rep:?}");

    let pert = bi.perturbed(0, 1, 2, c(0.4)).unwrap();
    let bad = jacobiator_check(&pert, &group, &path, 400, 1e-3).unwrap();
    assert!(bad.alg_max > 1e-3, "perturbed Jacobiator too small {bad:?}");
    assert!(
        bad.match_rel < 0.10,
        "finite differences disagree with algebra beyond 10%: {bad:?}"
    );

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "criterion 7 took {elapsed:.2}s");
    println!(
        "criterion 7 (jacobiator): PASS true (alg {:.1e}, fd {:.1e}), \
         injected detected (alg {:.3e}, match {:.3}), {elapsed:.2}s",
        rep.alg_max, rep.fd_max, bad.alg_max, bad.match_rel
    );
}

#[test]
fn criterion_8_lie_poisson_axioms() {
    let start = Instant::now();
    let mut worst_leibniz: f64 = 0.0;
    let mut worst_jacobi: f64 = 0.0;
    let mut worst_ham: f64 = 0.0;
    for (name, bi) in catalog::bialgebra_catalog() {
        if name == "m4" {
            // dim 16 polynomials dominate the budget without adding
            // coverage; the m4 structure is already exercised in
            // criterion 3.
            continue;
        }
        let trials = if bi.dim() <= 4 { 50 } else { 20 };
        let rep = check_poisson_axioms(&bi, 2, trials, 0x8ea5, 1e-8).unwrap();
        assert!(rep.pass, "{name}: {rep:?}");
        assert!(rep.hamiltonian_max < 1e-9, "{name}: {rep:?}");
        worst_leibniz = worst_leibniz.max(rep.leibniz_max);
        worst_jacobi = worst_jacobi.max(rep.jacobi_max);
        worst_ham = worst_ham.max(rep.hamiltonian_max);
    }
    // Injected dual-Jacobi failure flips the Jacobi residual, not Leibniz.
    let bi = catalog::sl2_bialgebra();
    let pert = bi.perturbed(0, 1, 2, c(0.5)).unwrap();
    let rep = check_poisson_axioms(&pert, 2, 50, 0x8ea5, 1e-8).unwrap();
    assert!(rep.jacobi_max > 1e-3 && rep.leibniz_max < 1e-8, "{rep:?}");

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 10.0, "criterion 8 took {elapsed:.2}s");
    println!(
        "criterion 8 (Lie-Poisson axioms): PASS leibniz <= {worst_leibniz:.3e}, \
         jacobi <= {worst_jacobi:.3e}, hamiltonian <= {worst_ham:.3e}, {elapsed:.2}s"
    );
}

#[test]
fn criterion_9_schouten_identities() {
    let start = Instant::now();
    let g = catalog::sl2().algebra;

    // [E ^ F, H] against the expansion oracle (independent sign expansion).
    let ef = Multivector::wedge(3, &[1, 2], c(1.0)).unwrap();
    let h = Multivector::wedge(3, &[0], c(1.0)).unwrap();
    let got = schouten(&ef, &h, &g).unwrap();
    let oracle = {
        // sum over index pairs of (-1)^{i+j} [X_i, Y_j] ^ rest, expanded
        // by hand for I = (E, F), J = (H).
        let mut acc = Multivector::zero(3, 2);
        // i = 1: +[E, H] ^ F
        for k in 0..3 {
            let cc = g.c(1, 0, k);
            if cc != C64::default() {
                acc = acc
                    .add(&Multivector::wedge(3, &[k, 2], cc).unwrap())
                    .unwrap();
            }
        }
        // i = 2: -[F, H] ^ E
        for k in 0..3 {
            let cc = g.c(2, 0, k);
            if cc != C64::default() {
                acc = acc
                    .add(&Multivector::wedge(3, &[k, 1], -cc).unwrap())
                    .unwrap();
            }
        }
        acc
    };
    let diff = got.add(&oracle.scale(c(-1.0))).unwrap();
    assert!(diff.max_abs() < 1e-12, "oracle disagreement {}", diff.max_abs());

    // Graded antisymmetry and (1,1,2) graded Jacobi, exact to 1e-12.
    let sl3 = catalog::sl3().algebra;
    let d = sl3.dim();
    let mut rng = SplitMix64::new(0x5c0);
    let random_mv = |degree: usize, rng: &mut SplitMix64| {
        let mut out = Multivector::zero(d, degree);
        for _ in 0..8 {
            let idx: Vec<usize> = (0..degree)
                .map(|_| rng.int_in(0, d as i64 - 1) as usize)
                .collect();
            let w = Multivector::wedge(d, &idx, c(rng.uniform(-1.0, 1.0))).unwrap();
            out = out.add(&w).unwrap();
        }
        out
    };
    for (ka, kb) in [(1usize, 1usize), (1, 2), (2, 2), (2, 3)] {
        let a = random_mv(ka, &mut rng);
        let b = random_mv(kb, &mut rng);
        let ab = schouten(&a, &b, &sl3).unwrap();
        let ba = schouten(&b, &a, &sl3).unwrap();
        let sign = if ((ka - 1) * (kb - 1)) % 2 == 0 { -1.0 } else { 1.0 };
        let resid = ab.add(&ba.scale(c(-sign))).unwrap();
        assert!(resid.max_abs() < 1e-12, "antisymmetry ({ka},{kb}) {}", resid.max_abs());
    }
    let x = random_mv(1, &mut rng);
    let y = random_mv(1, &mut rng);
    let p = random_mv(2, &mut rng);
    let jac = schouten(&x, &schouten(&y, &p, &sl3).unwrap(), &sl3)
        .unwrap()
        .add(&schouten(&y, &schouten(&p, &x, &sl3).unwrap(), &sl3).unwrap())
        .unwrap()
        .add(&schouten(&p, &schouten(&x, &y, &sl3).unwrap(), &sl3).unwrap())
        .unwrap();
    assert!(jac.max_abs() < 1e-12, "graded Jacobi {}", jac.max_abs());

    // schouten_self consistency on the same catalog structure.
    let pi = Multivector::wedge(3, &[0, 1], c(0.7)).unwrap();
    assert!(schouten_self(&pi, &g).unwrap().max_abs() < 1e-14);

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 1.0, "criterion 9 took {elapsed:.2}s");
    println!(
        "criterion 9 (Schouten identities): PASS oracle match, graded \
         antisymmetry and Jacobi exact, {elapsed:.2}s"
    );
}
