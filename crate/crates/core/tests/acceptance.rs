//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schurq::gseries::Monomial;
use schurq::ops::check_linear_eq_n1;
use schurq::partition::{count_shifted_syt, enumerate_strict, StrictPartition};
use schurq::pfaffian::{
    check_pfaffian_r, check_pfaffian_s, pfaffian, pfaffian_elimination, random_skew_matrix, skew_determinant,
};
use schurq::qschur::{eval_at_tinfty, schur_s, QTable};
use schurq::rational::{factorial, frac, int, pow2};
use schurq::rspec::{
    check_reflection, hook_star, r_from_rho, r_lambda, rho_check, rho_content_product, shipped_specs,
    ContentOrientation,
};
use schurq::tau::{
    check_cauchy, check_one_var, check_square, check_symmetry_scaling, hyper_one_var, tau_bkp, vacuum_kernel,
};
use schurq::{RSpec, Rational};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn spec(s: &str) -> RSpec {
    s.parse().expect("valid spec")
}

fn report(r: schurq::Result<schurq::TauReport>) -> Outcome {
    match r {
        Ok(rep) if rep.pass => Ok(()),
        Ok(rep) => Err(rep.summary()),
        Err(e) => Err(e.to_string()),
    }
}

fn c1_sq_schur() -> Outcome {
    let w = 16;
    let mut table = QTable::new(w);
    for lambda in enumerate_strict(8) {
        let q = table.get(&lambda).map_err(|e| e.to_string())?;
        let lhs = (&q * &q).scale(&pow2(-(lambda.len() as i64)));
        let rhs = schur_s(&lambda.double().map_err(|e| e.to_string())?, w).map_err(|e| e.to_string())?;
        if lhs != rhs {
            let d = schurq::gseries::first_difference(&lhs, &rhs).unwrap();
            return Err(format!("lambda={lambda} at {}: {} vs {}", d.0, d.1, d.2));
        }
    }
    Ok(())
}

fn c2_cauchy() -> Outcome {
    let rep = check_cauchy(10);
    if !rep.pass {
        return Err(rep.summary());
    }
    let tau = tau_bkp(&RSpec::Ones, 10, 10).map_err(|e| e.to_string())?;
    let kernel = vacuum_kernel(10, 10);
    let t1_cubed = Monomial::from_pairs(&[(1, 3)]).unwrap();
    let t3 = Monomial::var(3).unwrap();
    let (a, b) = (tau.coeff(&t1_cubed, &t3), kernel.coeff(&t1_cubed, &t3));
    if !a.is_zero() || !b.is_zero() {
        return Err(format!("t1^3*t*3: {a} vs {b}"));
    }
    Ok(())
}

fn c3_square() -> Outcome {
    for s in ["ones", "cutoff:M=2", "cutoff:M=3", "symrat:alpha=1/3;beta="] {
        report(check_square(&spec(s), 8))?;
    }
    Ok(())
}

fn c4_hooks() -> Outcome {
    let mut table = QTable::new(8);
    for lambda in enumerate_strict(8) {
        let h = hook_star(&lambda);
        let count = count_shifted_syt(&lambda).map_err(|e| e.to_string())?;
        if int(count as i64) * &h != factorial(lambda.weight()) {
            return Err(format!("{lambda}: count {count}, H* {h}"));
        }
        let q = table.get(&lambda).map_err(|e| e.to_string())?;
        if eval_at_tinfty(&q) * &h != Rational::one() {
            return Err(format!("{lambda}: Q at t_infty = {}", eval_at_tinfty(&q)));
        }
    }
    Ok(())
}

fn c5_one_var() -> Outcome {
    let plain = hyper_one_var(&[], &[], 12).map_err(|e| e.to_string())?;
    for (n, c) in plain.iter().enumerate() {
        if *c != Rational::one() / factorial(n as u32) {
            return Err(format!("0F0 coefficient {n}: {c}"));
        }
    }
    let shifted = hyper_one_var(&[int(1)], &[int(2)], 12).map_err(|e| e.to_string())?;
    for (n, c) in shifted.iter().enumerate() {
        if *c != Rational::one() / factorial(n as u32 + 1) {
            return Err(format!("1F1(1;2) coefficient {n}: {c}"));
        }
    }
    report(check_one_var(&[], &[], 12))?;
    report(check_one_var(&[int(1)], &[int(2)], 12))
}

fn c6_pfaffian_s() -> Outcome {
    for s in ["ones", "cutoff:M=2"] {
        for n in [1, 2] {
            report(check_pfaffian_s(&spec(s), n, 10))?;
        }
        report(check_pfaffian_s(&spec(s), 3, 8))?;
    }
    Ok(())
}

fn c7_pfaffian_r() -> Outcome {
    for (k, s) in ["ones", "cutoff:M=3", "symrat:alpha=1/3;beta="].into_iter().enumerate() {
        for n in [2, 3] {
            report(check_pfaffian_r(&spec(s), n, 8, 7 + k as u64))?;
        }
    }
    Ok(())
}

fn c8_linear() -> Outcome {
    for sp in shipped_specs().iter().filter(|s| check_reflection(s, 20)) {
        for m in [1, 3, 5] {
            report(check_linear_eq_n1(sp, m, 8, 8))?;
        }
    }
    Ok(())
}

fn c9_invariance() -> Outcome {
    for sp in shipped_specs() {
        report(check_symmetry_scaling(&sp, &int(2), 8))?;
    }
    Ok(())
}

fn c10_rho() -> Outcome {
    let rho: BTreeMap<i64, Rational> = (-8..=8).map(|k| (k, frac(3 * k * k - k + 2, 2 * k.abs() + 1))).collect();
    let r = r_from_rho(&rho, 8).map_err(|e| e.to_string())?;
    for lambda in enumerate_strict(6) {
        if !rho_check(&r, &rho, &lambda).map_err(|e| e.to_string())? {
            return Err(format!("i-j contents disagree at {lambda}"));
        }
    }
    let one = StrictPartition::new(vec![1]).unwrap();
    let flipped = rho_content_product(&rho, &one.double().unwrap(), ContentOrientation::ColumnMinusRow)
        .map_err(|e| e.to_string())?;
    let expected = r_lambda(&r, &one).map_err(|e| e.to_string())?;
    if flipped == expected {
        return Err("j-i orientation did not fail at (1)".into());
    }
    Ok(())
}

fn c11_pfaffian_kernel() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for trial in 0..100 {
        let dim = 2 * rng.gen_range(1..=4);
        let m = random_skew_matrix(dim, &mut rng);
        let pf = pfaffian(&m).map_err(|e| e.to_string())?;
        let det = skew_determinant(&m);
        if &pf * &pf != det {
            return Err(format!("trial {trial}, {dim}x{dim}: Pf^2 = {} but det = {det}", &pf * &pf));
        }
        if pfaffian_elimination(&m).map_err(|e| e.to_string())? != pf {
            return Err(format!("trial {trial}: expansion and elimination disagree"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Q squared against Schur of the double, |lambda| <= 8, weight 16", c1_sq_schur),
        ("Cauchy kernel to weight 10 with the t1^3 t*3 cancellation", c2_cauchy),
        ("BKP tau squared equals KP tau to weight 8", c3_square),
        ("shifted tableaux and H* against |lambda|! and t_infty", c4_hooks),
        ("one-variable hypergeometric reduction to order 12", c5_one_var),
        ("Pfaffian of S, N = 1, 2 at degree 10 and N = 3 at degree 8", c6_pfaffian_s),
        ("bordered Pfaffian of R, N = 2, 3 at weight 8, seeded points", c7_pfaffian_r),
        ("one-point linear equation, m = 1, 3, 5, order 8, weight 8", c8_linear),
        ("alphabet swap and scaling a = 2 to weight 8", c9_invariance),
        ("rho factorization with i - j contents, j - i negative control", c10_rho),
        ("Pf^2 = det on 100 seeded skew matrices of size 2 to 8", c11_pfaffian_kernel),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS [{:>2}] {name} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
