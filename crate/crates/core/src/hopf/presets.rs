use std::sync::{Arc, OnceLock};

use super::{HopfError, HopfStructure};
use crate::ncalg::{AlgebraElement, Letter, Presentation, PresentationBuilder, TensorElement};
use crate::scalars::Scalar;

/// Names accepted by [`builtin_presentation`]; all but `h0-irr` also name Hopf structures.
pub const BUILTIN_NAMES: [&str; 4] = ["uq-g1", "fq-g1", "fq-j", "h0-irr"];

fn iw() -> Scalar {
    Scalar::i() * Scalar::w()
}

fn q(p: i64, r: i64) -> Scalar {
    Scalar::rational(p, r)
}

/// Looks up a built-in structure by its CLI name.
pub fn builtin(name: &str) -> Result<Arc<HopfStructure>, HopfError> {
    match name {
        "uq-g1" => Ok(uq_g1()),
        "fq-g1" => Ok(fq_g1()),
        "fq-j" => Ok(fq_j()),
        _ => Err(HopfError::UnknownStructure(name.into())),
    }
}

/// Presentation of a built-in algebra by CLI name.
pub fn builtin_presentation(name: &str) -> Result<Arc<Presentation>, HopfError> {
    match name {
        "h0-irr" => Ok(h0_presentation()),
        _ => Ok(builtin(name)?.base().clone()),
    }
}

fn uq_presentation() -> Arc<Presentation> {
    let half_iw = Scalar::i().div(&(Scalar::from_int(2) * Scalar::w())).expect("w != 0");
    PresentationBuilder::new("uq-g1")
        .generator("M", false, 1)
        .generator("K", true, 0)
        .generator("T", false, 1)
        .generator("B", false, 2)
        .commute("K", "M")
        .commute("T", "M")
        .commute("B", "M")
        .commute("T", "K")
        .rule(("B", 1), ("K", 1), vec![(Scalar::one(), vec![("K", 1), ("B", 1)]), (iw(), vec![("M", 1), ("K", 1)])])
        .rule(("B", 1), ("K", -1), vec![(Scalar::one(), vec![("K", -1), ("B", 1)]), (-iw(), vec![("M", 1), ("K", -1)])])
        .rule(
            ("B", 1),
            ("T", 1),
            vec![
                (Scalar::one(), vec![("T", 1), ("B", 1)]),
                (half_iw.clone(), vec![("K", 1)]),
                (-half_iw, vec![("K", -1)]),
            ],
        )
        .build()
        .expect("uq-g1 presentation is valid")
}

/// The quantum Galilei enveloping algebra U_q(G(1)).
pub fn uq_g1() -> Arc<HopfStructure> {
    static CELL: OnceLock<Arc<HopfStructure>> = OnceLock::new();
    CELL.get_or_init(|| {
        let p = uq_presentation();
        let g = |n: &str| AlgebraElement::gen(&p, n);
        let kp = |e: i64| AlgebraElement::gen_pow(&p, "K", e);
        let one = AlgebraElement::one(&p);
        let (m, t, b) = (g("M"), g("T"), g("B"));
        let name = |l: Letter| (p.generators()[l.gen].name.clone(), l.sign);
        let delta = |l: Letter| -> TensorElement {
            match name(l) {
                (n, _) if n == "M" => m.tensor(&kp(1)).add(&kp(-1).tensor(&m)),
                (n, s) if n == "K" => kp(s as i64).tensor(&kp(s as i64)),
                (n, _) if n == "T" => t.tensor(&one).add(&one.tensor(&t)),
                _ => b.tensor(&kp(1)).add(&kp(-1).tensor(&b)),
            }
        };
        let eps = |l: Letter| if name(l).0 == "K" { Scalar::one() } else { Scalar::zero() };
        let s = |l: Letter| match name(l) {
            (n, _) if n == "M" => m.neg(),
            (n, sg) if n == "K" => kp(-(sg as i64)),
            (n, _) if n == "T" => t.neg(),
            _ => b.neg().add(&m.scale(&iw())),
        };
        let star = |l: Letter| AlgebraElement::letter(&p, l);
        Arc::new(HopfStructure::new("uq-g1", &p, &delta, &eps, &s, &star).expect("uq-g1 tables are consistent"))
    })
    .clone()
}

fn fq_presentation() -> Arc<Presentation> {
    PresentationBuilder::new("fq-g1")
        .generator("mu", false, 2)
        .generator("x", false, 1)
        .generator("t", false, 1)
        .generator("v", false, 1)
        .rule(("x", 1), ("mu", 1), vec![(Scalar::one(), vec![("mu", 1), ("x", 1)]), (-iw() * Scalar::from_int(2), vec![("mu", 1)])])
        .commute("t", "mu")
        .commute("t", "x")
        .rule(("v", 1), ("mu", 1), vec![(Scalar::one(), vec![("mu", 1), ("v", 1)]), (iw(), vec![("v", 2)])])
        .rule(("v", 1), ("x", 1), vec![(Scalar::one(), vec![("x", 1), ("v", 1)]), (iw() * Scalar::from_int(2), vec![("v", 1)])])
        .commute("v", "t")
        .build()
        .expect("fq-g1 presentation is valid")
}

/// The quantum Galilei function algebra F_q(G(1)).
pub fn fq_g1() -> Arc<HopfStructure> {
    static CELL: OnceLock<Arc<HopfStructure>> = OnceLock::new();
    CELL.get_or_init(|| {
        let p = fq_presentation();
        let g = |n: &str| AlgebraElement::gen(&p, n);
        let one = AlgebraElement::one(&p);
        let (mu, x, t, v) = (g("mu"), g("x"), g("t"), g("v"));
        let v2 = v.mul(&v);
        let prim = |a: &AlgebraElement| a.tensor(&one).add(&one.tensor(a));
        let name = |l: Letter| p.generators()[l.gen].name.clone();
        let delta = |l: Letter| match name(l).as_str() {
            "mu" => prim(&mu).add(&v.tensor(&x)).add(&v2.tensor(&t).scale(&q(1, 2))),
            "x" => prim(&x).add(&v.tensor(&t)),
            "t" => prim(&t),
            _ => prim(&v),
        };
        let eps = |_: Letter| Scalar::zero();
        let s = |l: Letter| match name(l).as_str() {
            "mu" => mu.neg().add(&v.mul(&x)).sub(&v2.mul(&t).scale(&q(1, 2))),
            "x" => x.neg().add(&t.mul(&v)),
            "t" => t.neg(),
            _ => v.neg(),
        };
        let star = |l: Letter| match name(l).as_str() {
            "mu" => mu.sub(&v.scale(&iw())),
            _ => AlgebraElement::letter(&p, l),
        };
        Arc::new(HopfStructure::new("fq-g1", &p, &delta, &eps, &s, &star).expect("fq-g1 tables are consistent"))
    })
    .clone()
}

fn fq_j_presentation() -> Arc<Presentation> {
    PresentationBuilder::new("fq-j")
        .generator("muh", false, 2)
        .generator("xh", false, 1)
        .generator("th", false, 1)
        .rule(("xh", 1), ("muh", 1), vec![(Scalar::one(), vec![("muh", 1), ("xh", 1)]), (-iw() * Scalar::from_int(2), vec![("muh", 1)])])
        .commute("th", "muh")
        .commute("th", "xh")
        .build()
        .expect("fq-j presentation is valid")
}

/// The subgroup algebra F_q(J): three primitive real generators.
pub fn fq_j() -> Arc<HopfStructure> {
    static CELL: OnceLock<Arc<HopfStructure>> = OnceLock::new();
    CELL.get_or_init(|| {
        let p = fq_j_presentation();
        let one = AlgebraElement::one(&p);
        let delta = |l: Letter| {
            let g = AlgebraElement::letter(&p, l);
            g.tensor(&one).add(&one.tensor(&g))
        };
        let eps = |_: Letter| Scalar::zero();
        let s = |l: Letter| AlgebraElement::letter(&p, l).neg();
        let star = |l: Letter| AlgebraElement::letter(&p, l);
        Arc::new(HopfStructure::new("fq-j", &p, &delta, &eps, &s, &star).expect("fq-j tables are consistent"))
    })
    .clone()
}

/// The commutative algebra H_0^irr generated by v0, v1 with wm v0 v1 = v1 - v0.
pub fn h0_presentation() -> Arc<Presentation> {
    static CELL: OnceLock<Arc<Presentation>> = OnceLock::new();
    CELL.get_or_init(|| {
        let inv = Scalar::one().div(&(Scalar::w() * Scalar::m())).expect("wm != 0");
        let rhs = || vec![(inv.clone(), vec![("v1", 1)]), (inv.neg(), vec![("v0", 1)])];
        PresentationBuilder::new("h0-irr")
            .generator("v0", false, 1)
            .generator("v1", false, 1)
            .rule(("v1", 1), ("v0", 1), rhs())
            .rule(("v0", 1), ("v1", 1), rhs())
            .build()
            .expect("h0-irr presentation is valid")
    })
    .clone()
}

