//! The acceptance suite: one test per acceptance criterion, each
//! printing a single pass/fail line (visible with `--nocapture`).
//!
//! Run with:
//!   cargo test -p necklace-rep --test acceptance -- --nocapture

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use necklace_rep::analysis::{
    burnside_dim, closed_form_irreducible, commutant_dim, reducibility_witness, tensor_rep,
    TensorParams, Verdict, WITNESS_TOL,
};
use necklace_rep::campaign::{run_campaign, RunConfig};
use necklace_rep::sampling::{
    random_scalar, sample_boundary, sample_minus_one_row, sample_n3_row, sample_quarter_row,
    Boundary,
};
use necklace_rep::unitarity::{
    check_unitary, family_point_n3, family_point_n4_minus_one, family_point_n4_quarter,
    forms_proportional, solve_unitarizing_form, Obstruction,
};
use necklace_rep::{Cyclotomic, Mode, RepParams, Row, Scalar, Sign, Twist, ValidatedParams, Word};

const TOL: f64 = 1e-9;
const SEED: u64 = 0x6e65_636b_6c61_6365; // "necklace"

fn announce<F: FnOnce() + std::panic::UnwindSafe>(number: u32, name: &str, body: F) {
    let outcome = std::panic::catch_unwind(body);
    let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
    println!("acceptance criterion {number} ({name}): {status}");
    if let Err(p) = outcome {
        std::panic::resume_unwind(p);
    }
}

type RowSampler = Box<dyn Fn(&mut ChaCha8Rng, Mode) -> ValidatedParams + Send + Sync>;

/// Every classification row, as (label, n, sampler) triples.
fn row_samplers() -> Vec<(&'static str, usize, RowSampler)> {
    let mut rows: Vec<(&'static str, usize, RowSampler)> = vec![
        (
            "n2",
            2,
            Box::new(|rng, mode| sample_minus_one_row(rng, mode, Row::N2)),
        ),
        (
            "n4 T=-1",
            4,
            Box::new(|rng, mode| sample_minus_one_row(rng, mode, Row::N4MinusOne)),
        ),
        (
            "n4 T=i",
            4,
            Box::new(|rng, mode| sample_quarter_row(rng, mode, Twist::QuarterPlus)),
        ),
        (
            "n4 T=-i",
            4,
            Box::new(|rng, mode| sample_quarter_row(rng, mode, Twist::QuarterMinus)),
        ),
    ];
    for twist in [Twist::ThirdPlus, Twist::ThirdMinus] {
        for sign in [Sign::Plus, Sign::Minus] {
            let label = match (twist, sign) {
                (Twist::ThirdPlus, Sign::Plus) => "n3 T=+ ω=+",
                (Twist::ThirdPlus, Sign::Minus) => "n3 T=+ ω=-",
                (Twist::ThirdMinus, Sign::Plus) => "n3 T=- ω=+",
                _ => "n3 T=- ω=-",
            };
            rows.push((
                label,
                3,
                Box::new(move |rng, mode| sample_n3_row(rng, mode, twist, sign)),
            ));
        }
    }
    rows
}

#[test]
fn criterion_1_relation_suite() {
    announce(1, "relation suite over every row and phase", || {
        let start = Instant::now();
        let rows = row_samplers();
        // 100 draws per (row, t_exp): 50 checked exactly, 50 by residual.
        // Rows are independent, so split them round-robin over two workers.
        let totals: Vec<usize> = std::thread::scope(|scope| {
            let rows = &rows;
            let mut handles = Vec::new();
            for worker in 0..2usize {
                handles.push(scope.spawn(move || {
                    let mut rng = ChaCha8Rng::seed_from_u64(SEED + worker as u64);
                    let mut total = 0usize;
                    for (label, n, sampler) in rows.iter().skip(worker).step_by(2) {
                        for mode in [Mode::Exact, Mode::Approx] {
                            let draws: Vec<ValidatedParams> =
                                (0..50).map(|_| sampler(&mut rng, mode)).collect();
                            for phase_exp in 0..2 * n {
                                for vp in &draws {
                                    let rep = vp.with_phase_exp(phase_exp).build_rep();
                                    let report = rep.verify_relations(TOL);
                                    assert!(
                                        report.all_passed(),
                                        "{label} t_exp={phase_exp} {mode:?} failed: \
                                         residual {:.3e}",
                                        report.max_residual()
                                    );
                                    if mode == Mode::Approx {
                                        assert!(report.max_residual() < 1e-9);
                                    }
                                    total += 1;
                                }
                            }
                        }
                    }
                    total
                }));
            }
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let total: usize = totals.iter().sum();
        let elapsed = start.elapsed();
        assert!(total >= 52 * 100, "covered {total} reps");
        assert!(
            elapsed.as_secs_f64() < 5.0,
            "relation suite took {elapsed:?}, budget is 5s"
        );
    });
}

#[test]
fn criterion_2_irreducibility_cross_check() {
    announce(
        2,
        "closed form vs commutant vs Burnside, 500/family",
        || {
            let start = Instant::now();
            let config = RunConfig {
                mode: Mode::Approx,
                tol: TOL,
                seed: SEED,
                samples: 500,
            };
            let summary = run_campaign(&config).expect("campaign runs");
            assert_eq!(summary.total_disagreements, 0, "summary: {summary:?}");
            assert_eq!(summary.families.len(), 7);
            for family in &summary.families {
                assert_eq!(family.samples, 500);
                assert_eq!(family.closed_form_abstained, 0);
            }
            let elapsed = start.elapsed();
            assert!(
                elapsed.as_secs_f64() < 60.0,
                "campaign took {elapsed:?}, budget is 60s"
            );
        },
    );
}

#[test]
fn criterion_3_boundary_reducibility() {
    announce(3, "constructed boundaries yield verified witnesses", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
        for boundary in Boundary::ALL {
            for mode in [Mode::Exact, Mode::Approx] {
                for _ in 0..6 {
                    let tp = sample_boundary(&mut rng, mode, boundary);
                    let rep = tp.build_rep();
                    assert!(
                        commutant_dim(&rep, TOL).unwrap() >= 2,
                        "{} sample not reducible",
                        boundary.name()
                    );
                    let witness = reducibility_witness(&rep, Some(&tp), TOL)
                        .unwrap_or_else(|e| panic!("{}: {e}", boundary.name()))
                        .expect("boundary case must be reducible");
                    assert!(
                        witness.residual <= WITNESS_TOL,
                        "{}: residual {:.3e}",
                        boundary.name(),
                        witness.residual
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_4_closed_form_witnesses_exact() {
    announce(
        4,
        "quarter-twist witness vectors reproduced exactly",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
            let two = Scalar::integer(Mode::Exact, 2);
            for (t1, t2) in [
                (Twist::QuarterPlus, Twist::QuarterPlus),
                (Twist::QuarterMinus, Twist::QuarterMinus),
                (Twist::QuarterPlus, Twist::QuarterMinus),
                (Twist::QuarterMinus, Twist::QuarterPlus),
            ] {
                for _ in 0..25 {
                    let p1 = sample_quarter_row(&mut rng, Mode::Exact, t1);
                    let p2 = sample_quarter_row(&mut rng, Mode::Exact, t2);
                    let d1 = p1.params().d.clone();
                    let d2 = p2.params().d.clone();
                    let tp = TensorParams::new(p1, p2).unwrap();
                    let rep = tp.build_rep();
                    let zero = Scalar::zero(Mode::Exact);
                    let one = Scalar::one(Mode::Exact);
                    let v = if t1 == t2 {
                        // v = d₂e₂ − d₁e₃
                        vec![zero.clone(), d2.clone(), -&d1, zero.clone()]
                    } else {
                        // v = e₁ + d₁d₂e₄
                        vec![one, zero.clone(), zero, &d1 * &d2]
                    };
                    // every σ image scales v by exactly 2d₁d₂
                    let scale = &(&two * &d1) * &d2;
                    let expected: Vec<Scalar> = v.iter().map(|x| &scale * x).collect();
                    for j in 1..=4 {
                        let image = rep.sigma(j).apply(&v).unwrap();
                        assert_eq!(image, expected, "σ_{j} does not scale the witness");
                    }
                    // and the witness direction matches the certificate
                    let witness = reducibility_witness(&rep, Some(&tp), TOL).unwrap().unwrap();
                    assert_eq!(witness.residual, 0.0);
                    assert_eq!(witness.basis, vec![v]);
                }
            }
        },
    );
}

/// Random exact d with 0 < |d| < 1: a small rational below 1 times a
/// root of unity.
fn small_exact_d(rng: &mut ChaCha8Rng) -> Scalar {
    let den = rng.random_range(2i64..=9);
    let num = rng.random_range(1i64..den);
    let k = rng.random_range(0i64..24);
    Scalar::Exact(&Cyclotomic::from_ratio(num, den) * &Cyclotomic::zeta_pow(k))
}

#[test]
fn criterion_5_unitarity_families() {
    announce(
        5,
        "unitarizable families certify with the stated forms",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);

            // family 1: T = −1, a = d + e^{iθ} over both branch kinds
            let mut accepted = 0;
            let mut rejected_positivity = 0;
            while accepted < 100 {
                let forced_branch = accepted % 5 == 0;
                let theta = if forced_branch {
                    if rng.random_bool(0.5) {
                        std::f64::consts::FRAC_PI_2
                    } else {
                        -std::f64::consts::FRAC_PI_2
                    }
                } else {
                    rng.random_range(0.0..std::f64::consts::TAU)
                };
                let param: f64 = rng.random_range(-0.8..0.8);
                let point = family_point_n4_minus_one(theta, param);
                // |a − d| = 1 on every branch
                let diff = (&point.params.a - &point.params.d).abs_sq().embed().re;
                assert!((diff - 1.0).abs() < 1e-12);
                let vp = point.params.clone().validate(TOL).unwrap();
                let cert = solve_unitarizing_form(&vp, TOL).unwrap();
                if !point.positive {
                    assert_eq!(cert.obstruction, Some(Obstruction::Positivity));
                    rejected_positivity += 1;
                    continue;
                }
                assert!(cert.is_unitarizable(), "θ={theta} param={param}");
                assert!(forms_proportional(
                    cert.form.as_ref().unwrap(),
                    &point.expected_form,
                    1e-9
                ));
                accepted += 1;
            }
            assert!(
                rejected_positivity > 0,
                "negative family points never sampled"
            );

            // family 2: T = ±i across all 24 phases, exact
            for i in 0..100 {
                let twist = if i % 2 == 0 {
                    Twist::QuarterPlus
                } else {
                    Twist::QuarterMinus
                };
                let point = family_point_n4_quarter(i as i64 % 24, twist, Mode::Exact).unwrap();
                let vp = point.params.clone().validate(TOL).unwrap();
                let cert = solve_unitarizing_form(&vp, TOL).unwrap();
                assert!(cert.is_unitarizable());
                assert_eq!(cert.residual, 0.0);
                assert!(forms_proportional(
                    cert.form.as_ref().unwrap(),
                    &point.expected_form,
                    1e-12
                ));
                // the solvability identity holds exactly at exact points
                let p = &point.params;
                let one = Scalar::one(Mode::Exact);
                let lhs = &(&p.a.abs_sq() - &one) * &(&p.d.abs_sq() - &one);
                assert_eq!(lhs, p.c.abs_sq());
            }

            // family 3: n = 3 with random |d| < 1, exact
            for i in 0..100 {
                let twist = if i % 2 == 0 {
                    Twist::ThirdPlus
                } else {
                    Twist::ThirdMinus
                };
                let sign = if (i / 2) % 2 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                };
                let d = small_exact_d(&mut rng);
                let point = family_point_n3(twist, sign, d).unwrap();
                let vp = point.params.clone().validate(TOL).unwrap();
                let cert = solve_unitarizing_form(&vp, TOL).unwrap();
                assert!(cert.is_unitarizable());
                assert_eq!(cert.residual, 0.0);
                assert!(forms_proportional(
                    cert.form.as_ref().unwrap(),
                    &point.expected_form,
                    1e-12
                ));
                let p = &point.params;
                let one = Scalar::one(Mode::Exact);
                let lhs = &(&p.a.abs_sq() - &one) * &(&p.d.abs_sq() - &one);
                assert_eq!(lhs, p.c.abs_sq());
            }

            // the non-family tuple a=2, d=1, c=3 is rejected with the
            // determinant obstruction (4−1)(1−1) = 0 ≠ 9
            let vp = RepParams::n2(
                Scalar::integer(Mode::Exact, 2),
                Scalar::integer(Mode::Exact, 1),
                0,
            )
            .validate(TOL)
            .unwrap();
            let cert = solve_unitarizing_form(&vp, TOL).unwrap();
            assert!(!cert.is_unitarizable());
            assert_eq!(
                cert.obstruction,
                Some(Obstruction::DeterminantIdentity { lhs: 0.0, rhs: 9.0 })
            );
        },
    );
}

#[test]
fn criterion_6_tensor_form_compatibility() {
    announce(
        6,
        "M₁⊗M₂ certifies the tensor of certified reps",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
            let mut checked = 0;
            while checked < 50 {
                // alternate between n = 4 pairs (approx) and n = 3 pairs (exact)
                let (v1, v2) = if checked % 2 == 0 {
                    let draw = |rng: &mut ChaCha8Rng| loop {
                        let quarter = rng.random_bool(0.5);
                        if quarter {
                            let twist = if rng.random_bool(0.5) {
                                Twist::QuarterPlus
                            } else {
                                Twist::QuarterMinus
                            };
                            let k = rng.random_range(0i64..24);
                            break family_point_n4_quarter(k, twist, Mode::Approx)
                                .unwrap()
                                .params;
                        }
                        let theta = rng.random_range(0.0..std::f64::consts::TAU);
                        let param = rng.random_range(-0.8..0.8);
                        let point = family_point_n4_minus_one(theta, param);
                        if point.positive {
                            break point.params;
                        }
                    };
                    (
                        draw(&mut rng).validate(TOL).unwrap(),
                        draw(&mut rng).validate(TOL).unwrap(),
                    )
                } else {
                    let draw = |rng: &mut ChaCha8Rng| {
                        let twist = if rng.random_bool(0.5) {
                            Twist::ThirdPlus
                        } else {
                            Twist::ThirdMinus
                        };
                        let sign = if rng.random_bool(0.5) {
                            Sign::Plus
                        } else {
                            Sign::Minus
                        };
                        family_point_n3(twist, sign, small_exact_d(rng))
                            .unwrap()
                            .params
                            .validate(TOL)
                            .unwrap()
                    };
                    (draw(&mut rng), draw(&mut rng))
                };
                let m1 = solve_unitarizing_form(&v1, TOL).unwrap().form.unwrap();
                let m2 = solve_unitarizing_form(&v2, TOL).unwrap().form.unwrap();
                let r1 = v1.build_rep();
                let r2 = v2.build_rep();
                let tensor = tensor_rep(&r1, &r2).unwrap();
                let form = m1.kron(&m2).unwrap();
                assert!(
                    check_unitary(&tensor, &form, TOL).unwrap(),
                    "tensor form failed at pair {checked}"
                );
                checked += 1;
            }
        },
    );
}

#[test]
fn criterion_7_exact_approx_coherence() {
    announce(7, "exact computations agree with approx replays", || {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
        let close = |x: num_complex::Complex64, y: num_complex::Complex64| (x - y).norm() <= 1e-9;
        let mut computations = 0;
        while computations < 200 {
            match computations % 6 {
                0 => {
                    // scalar ring operations
                    let x = random_scalar(&mut rng, Mode::Exact);
                    let y = random_scalar(&mut rng, Mode::Exact);
                    assert!(close((&x * &y).embed(), x.embed() * y.embed()));
                    assert!(close((&x + &y).embed(), x.embed() + y.embed()));
                    assert!(close(x.inv().unwrap().embed(), x.embed().inv()));
                    assert!(close(x.conj().embed(), x.embed().conj()));
                }
                1 => {
                    // matrix products and Kronecker products
                    let mut entries = Vec::with_capacity(8);
                    for _ in 0..8 {
                        entries.push(random_scalar(&mut rng, Mode::Exact));
                    }
                    let a = necklace_rep::Matrix::new(2, 2, entries[..4].to_vec()).unwrap();
                    let b = necklace_rep::Matrix::new(2, 2, entries[4..].to_vec()).unwrap();
                    let exact = a.mul(&b).unwrap();
                    let approx = a.to_approx().mul(&b.to_approx()).unwrap();
                    assert!(exact.to_approx().max_abs_diff(&approx) <= 1e-9);
                    let exact = a.kron(&b).unwrap();
                    let approx = a.to_approx().kron(&b.to_approx()).unwrap();
                    assert!(exact.to_approx().max_abs_diff(&approx) <= 1e-9);
                }
                2 => {
                    // representation construction and a random word
                    let vp = sample_minus_one_row(&mut rng, Mode::Exact, Row::N4MinusOne);
                    let exact_rep = vp.build_rep();
                    let approx_rep = vp.to_approx(TOL).build_rep();
                    let mut letters = Vec::new();
                    for _ in 0..6 {
                        let gen = if rng.random_bool(0.5) {
                            necklace_rep::Gen::Sigma(rng.random_range(1..=4))
                        } else {
                            necklace_rep::Gen::Tau
                        };
                        letters.push((gen, if rng.random_bool(0.5) { 1 } else { -1 }));
                    }
                    let word = Word(letters);
                    let exact_word = exact_rep.apply_word(&word).unwrap();
                    let approx_word = approx_rep.apply_word(&word).unwrap();
                    assert!(exact_word.to_approx().max_abs_diff(&approx_word) <= 1e-9);
                }
                3 => {
                    // tensor relation residuals
                    let p1 = sample_n3_row(&mut rng, Mode::Exact, Twist::ThirdPlus, Sign::Plus);
                    let p2 = sample_n3_row(&mut rng, Mode::Exact, Twist::ThirdMinus, Sign::Minus);
                    let tp = TensorParams::new(p1, p2).unwrap();
                    let exact_rep = tp.build_rep();
                    assert!(exact_rep.verify_relations(TOL).all_passed());
                    let approx_rep = exact_rep.to_approx();
                    let report = approx_rep.verify_relations(TOL);
                    assert!(report.all_passed());
                    assert!(report.max_residual() < 1e-9);
                }
                4 => {
                    // oracle dimensions agree across modes
                    let p1 = sample_quarter_row(&mut rng, Mode::Exact, Twist::QuarterPlus);
                    let p2 = sample_quarter_row(&mut rng, Mode::Exact, Twist::QuarterPlus);
                    let tp = TensorParams::new(p1, p2).unwrap();
                    let exact_rep = tp.build_rep();
                    let approx_rep = exact_rep.to_approx();
                    assert_eq!(
                        commutant_dim(&exact_rep, TOL).unwrap(),
                        commutant_dim(&approx_rep, TOL).unwrap()
                    );
                    assert_eq!(
                        burnside_dim(&exact_rep, TOL).unwrap(),
                        burnside_dim(&approx_rep, TOL).unwrap()
                    );
                    let exact_cf = closed_form_irreducible(&tp, TOL).unwrap().verdict;
                    assert_eq!(exact_cf, Verdict::Reducible);
                }
                _ => {
                    // unitarizing forms agree entrywise
                    let d = small_exact_d(&mut rng);
                    let point = family_point_n3(Twist::ThirdPlus, Sign::Plus, d).unwrap();
                    let exact_vp = point.params.clone().validate(TOL).unwrap();
                    let approx_vp = exact_vp.to_approx(TOL);
                    let exact_form = solve_unitarizing_form(&exact_vp, TOL)
                        .unwrap()
                        .form
                        .unwrap();
                    let approx_form = solve_unitarizing_form(&approx_vp, TOL)
                        .unwrap()
                        .form
                        .unwrap();
                    assert!(exact_form.to_approx().max_abs_diff(&approx_form) <= 1e-9);
                }
            }
            computations += 1;
        }
    });
}
