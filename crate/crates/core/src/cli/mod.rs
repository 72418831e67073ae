//! Expression parsing, configuration, suite runner and JSON reports behind the `hopfkit` binary.

mod config;
mod parse;

use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::coiso::galilei_subgroup;
use crate::hopf::{builtin, fq_g1, uq_g1, BUILTIN_NAMES};
use crate::induce::{
    generic_rep_check, ind_space, intertwiner_check, is_member, jform_check, module_closure_witness,
    relations_check, sesq_form, sesq_identity_residual, unitarity_check, Corepresentation, IndElement,
};
use crate::ncalg::AlgebraElement;
use crate::pairing::{Pairing, PairingConvention, Side};
use crate::quasiinv::{
    c_n, chi_window, cocycle_check, d1_d0_check, essential_invariance_decide, galilei_weight, module_algebra_check,
    pairs_of, quasi_invariance_check, transform_weight, uq_generators, uq_window, ChiElem, ChiFunctional, CheckForm,
    EpsilonWeight, EssentialInvariance, GalileiWeight, H0Module, LocalizedH0, RegularModule,
};
use crate::report::{CheckEntry, CheckReport};
use crate::scalars::Scalar;

pub use config::{Config, ConfigError};
pub use parse::{parse, parse_in, parse_scalar, print, Expr, ParseError, ParsedExpr};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const SUITES: [&str; 14] = [
    "hopf-axioms",
    "pairing",
    "homogeneous-space",
    "coisotropic",
    "functional-def",
    "functional-lemma",
    "cocycle",
    "essential-invariance",
    "relations",
    "unitarity",
    "jform",
    "intertwiner",
    "ind-generic",
    "mirror-right",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Engine(String),
}

fn engine<E: std::fmt::Display>(e: E) -> SuiteError {
    SuiteError::Engine(e.to_string())
}

fn require_galilei(cfg: &Config) -> Result<(), SuiteError> {
    if cfg.preset != "galilei" {
        return Err(ConfigError::BadValue { key: "preset".into(), value: cfg.preset.clone() }.into());
    }
    Ok(())
}

/// Runs one named suite.
pub fn run_suite(name: &str, cfg: &Config) -> Result<CheckReport, SuiteError> {
    let mut r = match name {
        "hopf-axioms" => hopf_axioms(cfg)?,
        "pairing" => pairing_suite(cfg)?,
        "homogeneous-space" => {
            require_galilei(cfg)?;
            homogeneous_space_suite(cfg.degree)?
        }
        "coisotropic" => {
            require_galilei(cfg)?;
            galilei_subgroup().verify(cfg.degree).map_err(engine)?
        }
        "functional-def" | "functional-lemma" => {
            require_galilei(cfg)?;
            let form = if name == "functional-def" { CheckForm::Def } else { CheckForm::Lemma };
            functional_suite(cfg, form, H0Module::left())
        }
        "cocycle" => {
            require_galilei(cfg)?;
            cocycle_suite(cfg.degree)?
        }
        "essential-invariance" => {
            require_galilei(cfg)?;
            essential_suite(cfg.window)
        }
        "relations" => {
            require_galilei(cfg)?;
            relations_check(cfg.window)
        }
        "unitarity" => {
            require_galilei(cfg)?;
            unitarity_check(cfg.window)
        }
        "jform" => {
            require_galilei(cfg)?;
            jform_check(cfg.window)
        }
        "intertwiner" => {
            require_galilei(cfg)?;
            intertwiner_check(cfg.window.min(4))
        }
        "ind-generic" => {
            require_galilei(cfg)?;
            ind_generic_suite(cfg.degree)?
        }
        "mirror-right" => {
            require_galilei(cfg)?;
            mirror_right_suite(cfg)
        }
        other => return Err(SuiteError::UnknownSuite(other.into())),
    };
    r.suite = name.into();
    r.preset = cfg.preset.clone();
    Ok(r)
}

fn hopf_axioms(cfg: &Config) -> Result<CheckReport, SuiteError> {
    let names: Vec<&str> = match cfg.preset.as_str() {
        "galilei" => vec!["uq-g1", "fq-g1", "fq-j"],
        p if BUILTIN_NAMES.contains(&p) => vec![p],
        p => return Err(ConfigError::BadValue { key: "preset".into(), value: p.into() }.into()),
    };
    let mut r = CheckReport::new("hopf-axioms", &cfg.preset).param("degree", cfg.degree);
    for n in names {
        let h = builtin(n).map_err(engine)?;
        r.merge_prefixed(n, h.verify(cfg.degree));
    }
    Ok(r)
}

fn pairing_suite(cfg: &Config) -> Result<CheckReport, SuiteError> {
    let conv = match cfg.preset.as_str() {
        "galilei" => PairingConvention::Hopf,
        "galilei-as-printed" => PairingConvention::AsPrinted,
        p => return Err(ConfigError::BadValue { key: "preset".into(), value: p.into() }.into()),
    };
    let p = if conv == PairingConvention::Hopf {
        Pairing::galilei()
    } else {
        Arc::new(Pairing::new(conv, crate::pairing::select_orientation(conv).0))
    };
    let (n, beta) = (2, 3);
    let mut r = CheckReport::new("pairing", &cfg.preset)
        .param("convention", format!("{:?}", conv))
        .param("degree", cfg.degree)
        .param("closed_window", format!("n={} beta={}", n, beta));
    let cases = p.agreement_window(n, beta).len();
    let mism = p.closed_vs_recursive(n, beta);
    r.record(
        "closed-vs-recursive",
        "the closed duality formula agrees with the recursive evaluation",
        cases,
        mism.first().map(|(x, a, c, w)| format!("{:?} on {}: {} vs {}", x, p.fq().base().monomial_string(a), c, w)),
    );
    r.merge(p.verify_laws(cfg.degree.min(3)));
    Ok(r)
}

fn homogeneous_space_suite(degree: u32) -> Result<CheckReport, SuiteError> {
    let sub = galilei_subgroup();
    let f = fq_g1();
    let mut r = CheckReport::new("homogeneous-space", "galilei").param("degree", degree);
    let powers: Vec<AlgebraElement> = (0..=degree).map(|k| f.gen("v").pow(k)).collect();
    for side in [Side::Left, Side::Right] {
        let hs = sub.homogeneous_space(degree, side).map_err(engine)?;
        let tag = if side == Side::Left { "left" } else { "right" };
        let mismatch = (hs.basis.len() != powers.len()).then(|| format!("dimension {}", hs.basis.len())).or_else(|| {
            powers.iter().find(|p| !hs.contains(p)).map(|p| format!("{} missing", p))
        });
        r.record(&format!("{}-span", tag), "the homogeneous space is the polynomials in v", powers.len(), mismatch);
        r.record(&format!("{}-star-closed", tag), "B_π is a *-subalgebra", hs.basis.len(), (!hs.star_closed).then(|| "not *-closed".into()));
        let pi_star = hs.basis.iter().find_map(|a| {
            let s = f.star(a).ok()?;
            (sub.pi(&s) != sub.pi_one().scale(&f.counit(&s))).then(|| a.to_string())
        });
        r.record(&format!("{}-pi-of-star", tag), "π(a*) = ε(a*)π(1)", hs.basis.len(), pi_star);
    }
    Ok(r)
}

fn functional_suite(cfg: &Config, form: CheckForm, alg: H0Module) -> CheckReport {
    let xs = uq_window(cfg.degree.min(2));
    let mut r = quasi_invariance_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &chi_window(cfg.window), form)
        .param("window", cfg.window)
        .param("phi_T", galilei_weight(&uq_g1().gen("T")));
    r.merge(module_algebra_check(&alg, &uq_window(2), &chi_window(2)));
    r
}

fn cocycle_suite(degree: u32) -> Result<CheckReport, SuiteError> {
    let alg = H0Module::left();
    let gens = uq_generators();
    let win = uq_window(degree.min(3));
    let mut r = CheckReport::new("cocycle", "galilei").param("degree", degree.min(3));
    r.merge_prefixed("generators", cocycle_check(&alg, &GalileiWeight::new(), &pairs_of(&gens, &gens)));
    r.merge_prefixed("window", cocycle_check(&alg, &GalileiWeight::new(), &pairs_of(&win, &win)));
    let pairs = pairs_of(&gens, &win);
    for k in [-2i64, -1, 1, 2, 3] {
        let xi = ChiElem::chi_pow(k);
        r.merge_prefixed(&format!("d1d0-chi^{}", k), d1_d0_check(&alg, &xi, &pairs).map_err(engine)?);
    }
    let loc = LocalizedH0::new(ChiElem::one().add(&ChiElem::chi_pow(1)));
    r.merge_prefixed("d1d0-1+chi", d1_d0_check(&loc, &loc.xi(), &pairs).map_err(engine)?);
    let wm = Scalar::w() * Scalar::m();
    r.record("c_n-recurrence", "n c_n = wm (n - 1/2) c_(n-1)", 8, (1..=8u32).find_map(|n| {
        let lhs = Scalar::from_int(n as i64).mul(&c_n(n));
        let rhs = wm.mul(&Scalar::rational(2 * n as i64 - 1, 2)).mul(&c_n(n - 1));
        (lhs != rhs).then(|| format!("n={}", n))
    }));
    Ok(r)
}

/// Refutation certificate: every B-row reads `iwm(ℓ − 1/2) a_ℓ = 0`.
pub fn essential_suite(window: i64) -> CheckReport {
    let mut r = CheckReport::new("essential-invariance", "galilei").param("window", window);
    let iwm = Scalar::i() * Scalar::w() * Scalar::m();
    for l in 0..=window {
        let w = match essential_invariance_decide(&GalileiWeight::new(), l) {
            EssentialInvariance::Coboundary { xi } => Some(format!("coboundary found: {}", xi)),
            EssentialInvariance::Refuted { b_factors, .. } => {
                if b_factors.len() as i64 != 2 * l + 1 {
                    Some(format!("{} diagonal B-rows", b_factors.len()))
                } else {
                    b_factors
                        .iter()
                        .find(|(ell, f)| *f != iwm.mul(&Scalar::rational(2 * ell - 1, 2)))
                        .map(|(ell, f)| format!("a_{}: factor {}", ell, f))
                }
            }
        };
        r.record(&format!("refuted-L{}", l), "φ is not d₀ξ: a_ℓ(ℓ − 1/2) = 0 forces ξ = 0", (2 * l + 1) as usize, w);
    }
    r.param_mut("certificate", "B-equation row l: i*w*m*(l - 1/2)*a_l = 0 for every |l| <= L");
    let alg = H0Module::left();
    r.record("control-epsilon", "the ε-weight is d₀(1)", 1, match essential_invariance_decide(&EpsilonWeight, 2) {
        EssentialInvariance::Coboundary { .. } => None,
        other => Some(format!("{:?}", other)),
    });
    let t = transform_weight(&alg, Arc::new(EpsilonWeight), &ChiElem::chi_pow(1)).expect("χ is invertible");
    r.record("control-transformed", "the ε-weight transformed by χ is d₀(χ)", 1, match essential_invariance_decide(&t, 2) {
        EssentialInvariance::Coboundary { .. } => None,
        other => Some(format!("{:?}", other)),
    });
    r
}

fn ind_generic_suite(degree: u32) -> Result<CheckReport, SuiteError> {
    let sub = galilei_subgroup();
    let f = fq_g1();
    let u = uq_g1();
    let mut r = CheckReport::new("ind-generic", "galilei").param("degree", degree).param("corep", "trivial");
    for side in [Side::Left, Side::Right] {
        let tag = if side == Side::Left { "left" } else { "right" };
        let rho = Corepresentation::trivial(&sub, side);
        let mut mismatch = None;
        let mut last = None;
        for d in 0..=degree {
            let ind = ind_space(&sub, &rho, d).map_err(engine)?;
            let hs = sub.homogeneous_space(d, side).map_err(engine)?;
            if ind.basis.len() != hs.basis.len() || ind.basis.iter().any(|a| !hs.contains(&a.comps[0])) {
                mismatch = Some(format!("degree {}", d));
            }
            last = Some(ind);
        }
        let ind = last.expect("degree window");
        r.record(&format!("{}-ind-equals-homogeneous", tag), "ind(trivial) = B_π degree by degree", degree as usize + 1, mismatch);
        let ring: Vec<AlgebraElement> = (1..=2).map(|k| f.gen("v").pow(k)).collect();
        r.record(&format!("{}-module", tag), "ind is a B_π-module", ind.basis.len() * ring.len(), module_closure_witness(&sub, &rho, &ind, &ring));
        let mut sesq = None;
        for a in &ind.basis {
            for b in &ind.basis {
                let s = sesq_form(&sub, a, b).map_err(engine)?;
                if !sub.membership_defect(&s, side).is_zero() {
                    sesq = Some(format!("⟨{}, {}⟩ = {}", a, b, s));
                }
            }
        }
        r.record(&format!("{}-sesq-membership", tag), "⟨A,B⟩_L ∈ B_π", ind.basis.len().pow(2), sesq);
        let mut ident = None;
        for a in &ind.basis {
            if sesq_identity_residual(&sub, &rho, a).map_err(engine)?.iter().any(|t| !t.is_zero()) {
                ident = Some(a.to_string());
            }
        }
        let id = if side == Side::Left { "eq-sesq1" } else { "eq-sesq2" };
        r.record(&format!("{}-{}", tag, id), "Σ S^{-1}(A_(1)) a ⊗ A_(2) = π(1) ⊗ A and its mirror", ind.basis.len(), ident);
        let alg = RegularModule::new(side);
        let mut stays = None;
        for a in &ind.basis {
            for g in uq_generators() {
                let x = AlgebraElement::monomial(u.base(), g);
                let out = crate::induce::rho_tilde_generic(&alg, &x, &a.comps, &EpsilonWeight);
                if !is_member(&sub, &rho, &IndElement::new(side, out)) {
                    stays = Some(format!("{} on {}", x, a));
                }
            }
        }
        r.record(&format!("{}-rho-preserves-ind", tag), "ρ̃ maps ind into ind", ind.basis.len() * 5, stays);
    }
    let vectors: Vec<Vec<ChiElem>> = chi_window(3).into_iter().map(|c| vec![c]).collect();
    r.merge_prefixed("h0-left", generic_rep_check(&H0Module::left(), &ChiFunctional::nu(), &GalileiWeight::new(), &uq_window(2), &vectors));
    Ok(r)
}

fn mirror_right_suite(cfg: &Config) -> CheckReport {
    let alg = H0Module::right();
    let xs = uq_window(cfg.degree.min(2));
    let mut r = CheckReport::new("mirror-right", "galilei").param("window", cfg.window).param("psi", "psi = phi");
    r.merge_prefixed("cocycle", cocycle_check(&alg, &GalileiWeight::new(), &pairs_of(&xs, &xs)));
    for (tag, form) in [("def", CheckForm::Def), ("lemma", CheckForm::Lemma)] {
        r.merge_prefixed(tag, quasi_invariance_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &chi_window(cfg.window), form));
    }
    r.merge_prefixed("module", module_algebra_check(&alg, &uq_window(2), &chi_window(2)));
    let vectors: Vec<Vec<ChiElem>> = chi_window(3).into_iter().map(|c| vec![c]).collect();
    r.merge_prefixed("lambda", generic_rep_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &vectors));
    r
}

#[derive(Serialize)]
struct JsonCheck<'a> {
    suite: &'a str,
    #[serde(flatten)]
    entry: &'a CheckEntry,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    tool_version: &'a str,
    preset: &'a str,
    params: std::collections::BTreeMap<String, String>,
    checks: Vec<JsonCheck<'a>>,
}

/// `{tool_version, preset, params, checks}`; suite parameters are keyed `suite.param`.
pub fn report_json(preset: &str, reports: &[CheckReport]) -> String {
    let mut params = std::collections::BTreeMap::new();
    params.insert("suites".to_string(), reports.iter().map(|r| r.suite.as_str()).collect::<Vec<_>>().join(","));
    for r in reports {
        for (k, v) in &r.params {
            params.insert(format!("{}.{}", r.suite, k), v.clone());
        }
    }
    let checks = reports.iter().flat_map(|r| r.checks.iter().map(move |e| JsonCheck { suite: &r.suite, entry: e })).collect();
    let doc = JsonReport { tool_version: TOOL_VERSION, preset, params, checks };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

/// Matrix of scalars as a JSON array of arrays of exact strings.
pub fn matrix_json(m: &[Vec<Scalar>]) -> String {
    let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect();
    serde_json::to_string(&rows).expect("matrix serializes")
}

#[cfg(test)]
mod tests;
