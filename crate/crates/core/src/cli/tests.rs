use super::*;

#[test]
fn parse_examples() {
    let bt = parse("B*T - T*B", "uq-g1").unwrap().value;
    let expect = parse("i*(K - K^-1)/(2*w)", "uq-g1").unwrap().value;
    assert_eq!(bt, expect);
    for alg in BUILTIN_NAMES {
        let one = parse("1", alg).unwrap().value;
        assert_eq!(one, AlgebraElement::one(one.presentation()));
    }
    assert!(parse("mu*x - x*mu - 2*i*w*mu", "fq-g1").unwrap().value.is_zero());
    assert_eq!(parse("B T", "uq-g1").unwrap().value, parse("B*T", "uq-g1").unwrap().value);
    assert_eq!(parse("-K^2", "uq-g1").unwrap().value, parse("-(K*K)", "uq-g1").unwrap().value);
    assert_eq!(parse("K^(-1)*K", "uq-g1").unwrap().value, parse("1", "uq-g1").unwrap().value);
    assert_eq!(parse("chi*chi^-1", "h0-irr").unwrap().value, parse("1", "h0-irr").unwrap().value);
}

#[test]
fn parse_errors() {
    assert!(matches!(parse("B +", "uq-g1"), Err(ParseError::SyntaxError { pos: 3, .. })));
    assert!(matches!(parse("(B", "uq-g1"), Err(ParseError::SyntaxError { .. })));
    assert!(matches!(parse("B $ T", "uq-g1"), Err(ParseError::SyntaxError { pos: 2, .. })));
    assert_eq!(parse("2*mu", "uq-g1").unwrap_err(), ParseError::UnknownGenerator { name: "mu".into(), pos: 2 });
    assert_eq!(parse("chi", "fq-g1").unwrap_err(), ParseError::UnknownGenerator { name: "chi".into(), pos: 0 });
    assert_eq!(parse("K/B", "uq-g1").unwrap_err(), ParseError::ScalarDivisionOnly { pos: 1 });
    assert_eq!(parse("K/(w-w)", "uq-g1").unwrap_err(), ParseError::DivisionByZero { pos: 1 });
    assert_eq!(parse("B^-1", "uq-g1").unwrap_err(), ParseError::NotInvertible { pos: 1 });
    assert!(matches!(parse("1", "nope"), Err(ParseError::UnknownAlgebra(_))));
}

#[test]
fn scalar_parsing_roundtrip() {
    let s = parse_scalar("(1 + i)/(w*m) - 3/8*u^2").unwrap();
    assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    assert!(parse_scalar("B").is_err());
}

#[test]
fn config_file() {
    let c = Config::parse_str("# run\nwindow = 6\ndegree=2\nsuites = unitarity, jform\noutput=out.json\n").unwrap();
    assert_eq!(c.window, 6);
    assert_eq!(c.degree, 2);
    assert_eq!(c.suites, vec!["unitarity", "jform"]);
    assert_eq!(c.output, Some(std::path::PathBuf::from("out.json")));
    assert_eq!(c.preset, "galilei");
    assert!(matches!(Config::parse_str("colour=red"), Err(ConfigError::Line { line: 1, .. })));
    assert!(matches!(Config::parse_str("window"), Err(ConfigError::Line { .. })));
    assert!(matches!(Config::parse_str("\n\nwindow=-1"), Err(ConfigError::Line { line: 3, .. })));
}

#[test]
fn suite_examples() {
    let cfg = Config { degree: 1, ..Config::default() };
    assert!(run_suite("hopf-axioms", &cfg).unwrap().passed());
    let cfg = Config { window: 5, ..Config::default() };
    let r = run_suite("unitarity", &cfg).unwrap();
    assert!(r.passed());
    assert_eq!(r.entry("unitarity").unwrap().cases, 5 * 11 * 11);
    let r = run_suite("essential-invariance", &Config { window: 6, ..Config::default() }).unwrap();
    assert!(r.passed());
    assert!(r.params.contains_key("certificate"));
    assert_eq!(run_suite("nope", &cfg).unwrap_err(), SuiteError::UnknownSuite("nope".into()));
    let bad = Config { preset: "other".into(), ..Config::default() };
    assert!(matches!(run_suite("jform", &bad), Err(SuiteError::Config(_))));
}

#[test]
fn report_is_deterministic() {
    let cfg = Config { window: 3, ..Config::default() };
    let run = || {
        let rs: Vec<CheckReport> = ["relations", "jform"].iter().map(|s| run_suite(s, &cfg).unwrap()).collect();
        report_json(&cfg.preset, &rs)
    };
    let a = run();
    assert_eq!(a, run());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["tool_version"], TOOL_VERSION);
    assert_eq!(v["preset"], "galilei");
    assert_eq!(v["checks"][0]["suite"], "relations");
    assert_eq!(v["checks"][0]["status"], "pass");
}

#[test]
fn matrix_dump() {
    let b = parse("B", "uq-g1").unwrap().value;
    let json = matrix_json(&crate::induce::galilei_matrix(&b, 0));
    assert_eq!(json, r#"[["1/2*i*w*m"]]"#);
}
