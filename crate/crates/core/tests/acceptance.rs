//! Acceptance battery: one PASS/FAIL line per criterion, exact equality throughout.

use std::process::ExitCode;
use std::time::Instant;

use hopfkit::cli::{run_suite, Config};
use hopfkit::coiso::galilei_subgroup;
use hopfkit::hopf::{builtin, fq_g1, verify_hopf};
use hopfkit::induce::{intertwiner_check, jform_check, minkowski_form, relations_check, unitarity_check, GalileiVector};
use hopfkit::pairing::{Pairing, Side};
use hopfkit::quasiinv::{
    c_n, chi_window, essential_invariance_decide, quasi_invariance_check, uq_window, ChiFunctional, CheckForm,
    EssentialInvariance, GalileiWeight, H0Module,
};
use hopfkit::report::CheckReport;
use hopfkit::scalars::Scalar;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn report_outcome(r: &CheckReport) -> Outcome {
    let fails = r.failures();
    if fails.is_empty() {
        let cases: usize = r.checks.iter().map(|c| c.cases).sum();
        Ok(format!("{} checks, {} cases", r.checks.len(), cases))
    } else {
        Err(fails.iter().map(|e| format!("{}: {}", e.id, e.witness.clone().unwrap_or_default())).collect::<Vec<_>>().join("; "))
    }
}

fn all(parts: Vec<Outcome>) -> Outcome {
    let mut ok = Vec::new();
    for p in parts {
        ok.push(p?);
    }
    Ok(ok.join(" | "))
}

fn suite(name: &str, degree: u32, window: i64) -> Outcome {
    let cfg = Config { degree, window, ..Config::default() };
    run_suite(name, &cfg).map_err(|e| e.to_string()).and_then(|r| report_outcome(&r))
}

fn hopf_axioms() -> Outcome {
    all(["uq-g1", "fq-g1", "fq-j"]
        .iter()
        .map(|n| {
            let h = builtin(n).map_err(|e| e.to_string())?;
            report_outcome(&verify_hopf(&h, 4)).map(|s| format!("{} {}", n, s)).map_err(|s| format!("{} {}", n, s))
        })
        .collect())
}

fn pairing_agreement() -> Outcome {
    let p = Pairing::galilei();
    let cases = p.agreement_window(2, 3).len();
    let mism = p.closed_vs_recursive(2, 3);
    if cases == 0 {
        return Err("empty window".into());
    }
    match mism.first() {
        None => Ok(format!("{} basis pairs, 0 mismatches", cases)),
        Some((x, _, c, w)) => Err(format!("{} mismatches, first {:?}: {} vs {}", mism.len(), x, c, w)),
    }
}

fn homogeneous_space() -> Outcome {
    let sub = galilei_subgroup();
    let f = fq_g1();
    let hs = sub.homogeneous_space(4, Side::Left).map_err(|e| e.to_string())?;
    if hs.basis.len() != 5 {
        return Err(format!("dimension {}", hs.basis.len()));
    }
    for k in 0..=4 {
        if !hs.contains(&f.gen("v").pow(k)) {
            return Err(format!("v^{} missing", k));
        }
    }
    for a in &hs.basis {
        let s = f.star(a).map_err(|e| e.to_string())?;
        if sub.pi(&s) != sub.pi_one().scale(&f.counit(&s)) {
            return Err(format!("π(a*) ≠ ε(a*)π(1) at {}", a));
        }
    }
    Ok("span{1, v, v^2, v^3, v^4}, π(a*) = ε(a*)π(1)".into())
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn quasi_invariance() -> Outcome {
    let alg = H0Module::left();
    let xs = uq_window(2);
    let vs = chi_window(5);
    let mut parts: Vec<Outcome> = [CheckForm::Def, CheckForm::Lemma]
        .into_iter()
        .map(|form| report_outcome(&quasi_invariance_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &vs, form)))
        .collect();
    let wm = Scalar::w() * Scalar::m();
    let quarter = Scalar::rational(1, 4);
    let mut rec = Ok("c_n recurrence n <= 8".to_string());
    for n in 1..=8u32 {
        let lhs = Scalar::from_int(n as i64).mul(&c_n(n));
        let rhs = wm.mul(&Scalar::rational(2 * n as i64 - 1, 2)).mul(&c_n(n - 1));
        let closed = Scalar::from_int(binom(2 * n as i64, n as i64)).mul(&wm.mul(&quarter).pow(n as i64).expect("nonnegative power"));
        if lhs != rhs || c_n(n) != closed {
            rec = Err(format!("c_n fails at n={}", n));
            break;
        }
    }
    parts.push(rec);
    all(parts)
}

fn non_essential() -> Outcome {
    let iwm = Scalar::i() * Scalar::w() * Scalar::m();
    for l in 0..=8i64 {
        match essential_invariance_decide(&GalileiWeight::new(), l) {
            EssentialInvariance::Coboundary { xi } => return Err(format!("L={}: coboundary {}", l, xi)),
            EssentialInvariance::Refuted { b_factors, .. } => {
                let expected: Vec<(i64, Scalar)> =
                    (-l..=l).map(|ell| (ell, iwm.mul(&(Scalar::from_int(ell) - Scalar::rational(1, 2))))).collect();
                let mut got = b_factors.clone();
                got.sort_by_key(|(ell, _)| *ell);
                if got != expected {
                    return Err(format!("L={}: certificate {:?}", l, got));
                }
            }
        }
    }
    Ok("refuted for every L <= 8, rows i*w*m*(l - 1/2)*a_l = 0".into())
}

fn unitarity() -> Outcome {
    for l in -5..=5i64 {
        for n in -5..=5i64 {
            let g = minkowski_form(&GalileiVector::basis(l), &GalileiVector::basis(n));
            let want = if l + n + 1 == 0 { Scalar::one() } else { Scalar::zero() };
            if g != want {
                return Err(format!("Minkowski form ⟨χ^{}, χ^{}⟩ = {}", l, n, g));
            }
        }
    }
    report_outcome(&unitarity_check(5))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("Hopf axioms for uq-g1, fq-g1, fq-j at degree 4", hopf_axioms),
        ("closed and recursive pairing agree", pairing_agreement),
        ("homogeneous space at degree 4", homogeneous_space),
        ("quasi-invariance (def and lemma) and c_n recurrence", quasi_invariance),
        ("galilei weight is not a coboundary", non_essential),
        ("representation relations on |l| <= 5", || report_outcome(&relations_check(5))),
        ("unitarity under the Minkowski form on |l| <= 5", unitarity),
        ("j-structure on |l| <= 5", || report_outcome(&jform_check(5))),
        ("equivalence transport by chi on |l| <= 4", || report_outcome(&intertwiner_check(4))),
        ("generic induction from the trivial corepresentation", || suite("ind-generic", 4, 5)),
        ("cohomology d1 d0 = 0 and d1(galilei) = 0", || suite("cocycle", 3, 5)),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let out = run();
        let secs = t.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {}: PASS  {} [{}] ({:.2}s)", k + 1, name, detail, secs),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {} [{}] ({:.2}s)", k + 1, name, why, secs);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
