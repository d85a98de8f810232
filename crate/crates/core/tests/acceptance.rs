//! End-to-end verification suite. Each test checks one criterion at its
//! stated tolerance and wall-clock budget and prints a single summary line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use gateforge_core::coeffs::{closed_form_j0, closed_form_j1, closed_form_j2, closed_form_jn};
use gateforge_core::coeffs::{conjectured_v, eval_b, exact_verify, general_nested, recurse_coeffs, NumericRing};
use gateforge_core::identities::{alternating_binomial_sum, lemma_a1, lemma_a2, lemma_a3};
use gateforge_core::linsys::{build_mn, inverse_formula, solve_system};
use gateforge_core::sample::{random_su2, random_su2_with_b_mag, trial_rng};
use gateforge_core::word::{build_word, compose_words, convergence_report, iterate, normalize_word, Convention};

use rand::Rng;

const SEED: u64 = 42;
const TRIALS: u64 = 100;

fn finish(name: &str, started: Instant, budget: Duration, detail: String) {
    let elapsed = started.elapsed();
    let ok = elapsed < budget;
    println!(
        "acceptance {name}: {} in {:.0?} (budget {:.0?}; {detail})",
        if ok { "PASS" } else { "FAIL" },
        elapsed,
        budget,
    );
    assert!(ok, "{name} exceeded its runtime budget: {elapsed:?} >= {budget:?}");
}

#[test]
fn criterion_1_proven_convergence_laws() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in [1u32, 2, 3] {
        for t in 0..TRIALS {
            let u0 = random_su2(&mut trial_rng(SEED, t));
            for row in convergence_report(&u0, n, 3).unwrap() {
                worst = worst.max(row.residual);
            }
        }
    }
    assert!(worst <= 1e-12, "max residual {worst:e} > 1e-12");
    finish(
        "1 proven laws p=3,5,7",
        start,
        Duration::from_secs(1),
        format!("max residual {worst:.2e}"),
    );
}

#[test]
fn criterion_2_conjectured_regime() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 4..=12u32 {
        for t in 0..TRIALS {
            let u0 = random_su2(&mut trial_rng(SEED, t));
            for row in convergence_report(&u0, n, 1).unwrap() {
                worst = worst.max(row.residual);
            }
        }
    }
    assert!(worst <= 1e-9, "max residual {worst:e} > 1e-9");
    finish(
        "2 conjectured regime p=9..25",
        start,
        Duration::from_secs(5),
        format!("max residual {worst:.2e}"),
    );
}

#[test]
fn criterion_3_coefficient_values() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=12u32 {
        let table = recurse_coeffs::<f64>(n).unwrap();
        let v = conjectured_v(n);
        for j in 1..=n as usize {
            let delta = (table.v[j - 1] - v[j - 1].to_f64().unwrap()).abs();
            worst = worst.max(delta);
        }
    }
    assert!(worst <= 1e-9, "numeric value deviation {worst:e} > 1e-9");
    let mut certificates = 0u32;
    for n in 1..=6u32 {
        for j in 1..=n {
            let cert = exact_verify(n, j).unwrap();
            assert!(cert.pass, "exact certificate failed at n={n} j={j}: {}", cert.residual);
            certificates += 1;
        }
    }
    finish(
        "3 coefficient values",
        start,
        Duration::from_secs(120),
        format!("max |v - conjectured| {worst:.2e}; {certificates} exact certificates"),
    );
}

#[test]
fn criterion_4_route_equivalence() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for n in 1..=8u32 {
        let ring = NumericRing::<f64>::new(2 * n as u64 + 1).unwrap();
        let table = recurse_coeffs::<f64>(n).unwrap();
        for j in 1..=n {
            let (aj, bj) = general_nested(&ring, n, j).unwrap();
            worst = worst.max((aj - table.alpha[j as usize]).norm());
            worst = worst.max((bj - table.beta[j as usize]).norm());
        }
        let (a0, b0) = closed_form_j0(&ring, n);
        worst = worst.max((a0 - table.alpha[0]).norm());
        worst = worst.max((b0 - table.beta[0]).norm());
        let (a1, b1) = closed_form_j1(&ring, n);
        worst = worst.max((a1 - table.alpha[1]).norm());
        worst = worst.max((b1 - table.beta[1]).norm());
        if n >= 2 {
            let (a2, b2) = closed_form_j2(&ring, n).unwrap();
            worst = worst.max((a2 - table.alpha[2]).norm());
            worst = worst.max((b2 - table.beta[2]).norm());
        }
        let dn = closed_form_jn(&ring, n);
        worst = worst.max((dn - table.alpha[n as usize]).norm());
        worst = worst.max((dn - table.beta[n as usize]).norm());
    }
    assert!(worst <= 1e-9, "route deviation {worst:e} > 1e-9");
    finish(
        "4 route equivalence n<=8",
        start,
        Duration::from_secs(60),
        format!("max route deviation {worst:.2e}"),
    );
}

#[test]
fn criterion_5_mn_theorems() {
    let start = Instant::now();
    for n in 1..=64usize {
        let m = build_mn(n);
        let inv = inverse_formula(n);
        assert!(m.mat_mul(&inv).is_identity(), "M*Minv != I at n={n}");
        assert!(inv.mat_mul(&m).is_identity(), "Minv*M != I at n={n}");
        let v = solve_system(n);
        assert_eq!(v, conjectured_v(n as u32), "solution mismatch at n={n}");
        let by_inverse: Vec<BigInt> =
            inv.mat_vec(&vec![BigInt::from(1); n]).into_iter().map(|x| -x).collect();
        assert_eq!(v, by_inverse, "-Minv*e mismatch at n={n}");
    }
    // the reference 10x10 matrix and inverse, entry for entry
    let m10: [[i64; 10]; 10] = [
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, -1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, -1, -2, -1, -1, 0, 0, 0],
        [0, 0, 0, 0, 1, 2, 3, 1, 1, 0],
        [0, 0, 0, 0, 0, -1, -3, -3, -4, -1],
        [0, 0, 0, 0, 0, 0, 1, 3, 6, 4],
        [0, 0, 0, 0, 0, 0, 0, -1, -4, -6],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 4],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    ];
    let m10_inv: [[i64; 10]; 10] = [
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, -1, -1, -1, -1, -1, -1, -1, -1, -1],
        [0, 0, 1, 1, 1, 1, 1, 1, 1, 1],
        [0, 0, 0, -1, -2, -3, -4, -5, -6, -7],
        [0, 0, 0, 0, 1, 2, 3, 4, 5, 6],
        [0, 0, 0, 0, 0, -1, -3, -6, -10, -15],
        [0, 0, 0, 0, 0, 0, 1, 3, 6, 10],
        [0, 0, 0, 0, 0, 0, 0, -1, -4, -10],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 4],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    ];
    let built = build_mn(10);
    let built_inv = inverse_formula(10);
    for i in 1..=10 {
        for j in 1..=10 {
            assert_eq!(built.entry(i, j), &BigInt::from(m10[i - 1][j - 1]), "M10 ({i},{j})");
            assert_eq!(
                built_inv.entry(i, j),
                &BigInt::from(m10_inv[i - 1][j - 1]),
                "M10inv ({i},{j})"
            );
        }
    }
    finish(
        "5 integer system n<=64",
        start,
        Duration::from_secs(1),
        "exact inverse, solution routes, reference 10x10 values".to_string(),
    );
}

#[test]
fn criterion_6_order_three_application() {
    let start = Instant::now();
    let table = recurse_coeffs::<f64>(3).unwrap();
    let expect = [-1.0, 1.0, -2.0, 1.0];
    for (j, e) in expect.iter().enumerate() {
        assert!(
            (table.beta[j].re - e).abs() <= 1e-12 && table.beta[j].im.abs() <= 1e-12,
            "beta_{j} = {:?} != {e}",
            table.beta[j]
        );
    }
    let mut worst = 0.0f64;
    for i in 0..=100 {
        let x = i as f64 / 100.0;
        let delta = (eval_b(&table, x) - (-x.powi(3))).abs();
        worst = worst.max(delta);
    }
    assert!(worst <= 1e-12, "nested evaluation deviates from -x^3 by {worst:e}");
    finish(
        "6 order-3 application",
        start,
        Duration::from_secs(1),
        format!("beta = (-1, 1, -2, 1); max |B(x) + x^3| {worst:.2e}"),
    );
}

#[test]
fn criterion_7_composition() {
    let start = Instant::now();
    let mut w3 = normalize_word(&build_word(1).unwrap()).unwrap();
    let mut w5 = normalize_word(&build_word(2).unwrap()).unwrap();
    w3.convention = Convention::Omega;
    w5.convention = Convention::Omega;
    let w15 = compose_words(&w3, &w5).unwrap();
    assert_eq!(
        w15.diag_powers(),
        vec![5, 5, 3, -5, -5, 9, 5, 5, 9, -5, -5, 3, 5, 5],
        "reference power list"
    );
    let w9 = compose_words(&w3, &w3).unwrap();
    let w25 = compose_words(&w5, &w5).unwrap();
    let mut worst = 0.0f64;
    for (word, big_n) in [(&w15, 15), (&w9, 9), (&w25, 25)] {
        for t in 0..TRIALS {
            let u0 = random_su2(&mut trial_rng(SEED, t));
            let out = word.apply(&u0);
            worst = worst.max((out.b_mag() - u0.b_mag().powi(big_n)).abs());
        }
    }
    assert!(worst <= 1e-12, "composition law residual {worst:e} > 1e-12");
    finish(
        "7 composition N=15,9,25",
        start,
        Duration::from_secs(2),
        format!("power list exact; max law residual {worst:.2e}"),
    );
}

#[test]
fn criterion_8_correction_convergence() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for t in 0..TRIALS {
        let mut rng = trial_rng(SEED, t);
        let b0 = rng.random_range(0.0..=0.5);
        for u0 in [
            random_su2_with_b_mag(&mut rng, b0),
            random_su2_with_b_mag(&mut rng, 0.5),
        ] {
            let iters = iterate(&u0, 1, 3, true).unwrap();
            let u3 = iters.last().unwrap();
            // distance to the identity in the residual-diagonal-phase gauge
            // the correction leaves free
            worst = worst.max(u3.dist_to_identity_mod_diag_phase());
            worst = worst.max(u3.b_mag());
        }
    }
    assert!(worst <= 1e-7, "corrected iterate distance {worst:e} > 1e-7");
    finish(
        "8 correction convergence",
        start,
        Duration::from_secs(1),
        format!("max ||U_3 - I|| (mod diagonal phase) {worst:.2e}"),
    );
}

#[test]
fn criterion_9_appendix_identities() {
    let start = Instant::now();
    let mut worst_a1 = 0.0f64;
    for n in 1..=10_000u64 {
        let r = lemma_a1(n);
        worst_a1 = worst_a1.max(r.abs_error);
    }
    assert!(worst_a1 <= 1e-10, "lemma A1 error {worst_a1:e} > 1e-10");

    let mut worst_a2 = 0.0f64;
    for n in 1..=500u64 {
        let r = lemma_a2(n).unwrap();
        let expected = if (n * (n + 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
        assert_eq!(r.rhs, expected);
        assert!(r.pass, "lemma A2 failed at n={n}: {r:?}");
        worst_a2 = worst_a2.max(r.abs_error);
    }
    assert!(worst_a2 <= 1e-8);

    let mut worst_a3 = 0.0f64;
    for n in 1..=1000u64 {
        let r = lemma_a3(n);
        assert!(r.pass, "lemma A3 failed at n={n}: {r:?}");
        worst_a3 = worst_a3.max(r.abs_error / r.rhs.abs().max(1.0));
    }
    assert!(worst_a3 <= 1e-8);

    let mut rng = trial_rng(SEED, 0);
    for _ in 0..1000 {
        let d = rng.random_range(1..=30i64);
        let deg = rng.random_range(0..d) as usize;
        let mut coeffs: Vec<BigInt> =
            (0..=deg).map(|_| BigInt::from(rng.random_range(-1000i64..=1000))).collect();
        if coeffs[deg] == BigInt::from(0) {
            coeffs[deg] = BigInt::from(1);
        }
        let values: Vec<BigInt> = (0..=d)
            .map(|x| {
                let mut acc = BigInt::from(0);
                for c in coeffs.iter().rev() {
                    acc = acc * BigInt::from(x) + c;
                }
                acc
            })
            .collect();
        let sum = alternating_binomial_sum(&values);
        assert_eq!(sum, BigInt::from(0), "binomial identity violated at d={d} deg={deg}");
    }
    finish(
        "9 appendix identities",
        start,
        Duration::from_secs(10),
        format!("A1 {worst_a1:.2e}; A2 log {worst_a2:.2e}; A3 rel {worst_a3:.2e}; 1000 exact sums"),
    );
}
