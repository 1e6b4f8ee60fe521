//! Output rendering: JSON (byte-stable), plain text and LaTeX.

use num_bigint::BigInt;
use serde::Serialize;

use gysin_core::graded_ring::{GradedPolynomial, Generator, Homogeneity, Monomial};
use gysin_core::gysin::{GysinResult, InputClass};
use gysin_core::partitions::{
    AmbientShape, FibrationProfile, OrdinaryPartition, PartitionProfile, StrictPartition,
};

#[derive(Serialize)]
pub struct ShapeJson {
    pub r#type: String,
    pub n: u32,
    pub d: u32,
}

impl ShapeJson {
    pub fn from(shape: &AmbientShape) -> Self {
        ShapeJson {
            r#type: shape.form_type().letter().to_string(),
            n: shape.n(),
            d: shape.d(),
        }
    }
}

#[derive(Serialize)]
pub struct GenPowJson {
    pub gen: String,
    pub power: u32,
}

#[derive(Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub monomial: Vec<GenPowJson>,
}

#[derive(Serialize)]
pub struct GysinJson {
    pub shape: ShapeJson,
    pub mu: Vec<u32>,
    pub lambda: Option<Vec<u32>>,
    pub delta: Vec<u32>,
    pub fiber_dim: u32,
    pub model: String,
    pub route: String,
    pub f: String,
    pub result: Vec<TermJson>,
    pub degree: Option<u32>,
    pub homogeneous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes_agree: Option<bool>,
}

#[derive(Serialize)]
pub struct ProfileJson {
    pub shape: ShapeJson,
    pub mu: Vec<u32>,
    pub lambda: Vec<u32>,
    pub delta: Vec<u32>,
    pub rank: u32,
    pub fiber_dim: u32,
}

#[derive(Serialize)]
pub struct EnumerateEntryJson {
    pub mu: Vec<u32>,
    pub delta: Vec<u32>,
    pub rank: u32,
    pub fiber_dim: u32,
}

#[derive(Serialize)]
pub struct EnumerateJson {
    pub shape: ShapeJson,
    pub count: usize,
    pub partitions: Vec<EnumerateEntryJson>,
}

#[derive(Serialize)]
pub struct PredecessorsJson {
    pub shape: ShapeJson,
    pub mu: Vec<u32>,
    pub predecessors: Vec<Vec<u32>>,
}

#[derive(Serialize)]
pub struct FibrationJson {
    pub shape: ShapeJson,
    pub nu: Vec<u32>,
    pub mu: Vec<u32>,
    pub k: Vec<u32>,
    pub rel_dim: u32,
    pub rank_gap: u32,
}

#[derive(Serialize)]
pub struct CheckSuiteJson {
    pub name: String,
    pub cases: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Serialize)]
pub struct CheckJson {
    pub passed: usize,
    pub failed: usize,
    pub suites: Vec<CheckSuiteJson>,
}

/// Terms of a class, leading monomial first.
pub fn value_terms(value: &GradedPolynomial) -> Vec<TermJson> {
    let mut terms: Vec<TermJson> = value
        .terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            monomial: m
                .factors()
                .iter()
                .map(|(g, e)| GenPowJson {
                    gen: g.to_string(),
                    power: *e,
                })
                .collect(),
        })
        .collect();
    terms.reverse();
    terms
}

/// `degree` and `homogeneous` fields of the JSON schema.
pub fn degree_fields(value: &GradedPolynomial) -> (Option<u32>, bool) {
    match value.homogeneity() {
        Homogeneity::Zero => (None, true),
        Homogeneity::Homogeneous(d) => (Some(d), true),
        Homogeneity::Inhomogeneous => (None, false),
    }
}

pub fn gysin_json(result: &GysinResult, delta: &[u32], f_text: &str, route: &str) -> GysinJson {
    let (degree, homogeneous) = degree_fields(&result.value);
    GysinJson {
        shape: ShapeJson::from(&result.shape),
        mu: result.mu.parts().to_vec(),
        lambda: result.lambda.as_ref().map(|l| l.parts().to_vec()),
        delta: delta.to_vec(),
        fiber_dim: result.fiber_dim,
        model: result.model.variant().name().to_string(),
        route: route.to_string(),
        f: f_text.to_string(),
        result: value_terms(&result.value),
        degree,
        homogeneous,
        routes_agree: None,
    }
}

// ---------------------------------------------------------------------------
// text rendering

fn parts_text(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn gysin_text(result: &GysinResult, delta: &[u32], f_text: &str, route: &str) -> String {
    let mut out = String::new();
    let shape = result.shape;
    out.push_str(&format!(
        "shape: {} n={} d={}\n",
        shape.form_type().letter(),
        shape.n(),
        shape.d()
    ));
    out.push_str(&format!("mu: {}\n", parts_text(result.mu.parts())));
    if let Some(lambda) = &result.lambda {
        out.push_str(&format!("lambda: {}\n", parts_text(lambda.parts())));
    }
    out.push_str(&format!("delta: {}\n", parts_text(delta)));
    out.push_str(&format!("fiber_dim: {}\n", result.fiber_dim));
    if result.flag_fiber_dim != result.fiber_dim {
        out.push_str(&format!("flag_fiber_dim: {}\n", result.flag_fiber_dim));
    }
    out.push_str(&format!("model: {}\n", result.model.variant().name()));
    out.push_str(&format!("route: {route}\n"));
    out.push_str(&format!("f: {f_text}\n"));
    out.push_str(&format!("result: {}\n", result.value));
    let (degree, homogeneous) = degree_fields(&result.value);
    match degree {
        Some(k) => out.push_str(&format!("degree: {k}\n")),
        None => out.push_str("degree: -\n"),
    }
    out.push_str(&format!("homogeneous: {homogeneous}\n"));
    out
}

pub fn profile_text(shape: &AmbientShape, p: &PartitionProfile, lambda: &OrdinaryPartition, rank: u32) -> String {
    format!(
        "shape: {} n={} d={}\nmu: {}\nlambda: {}\ndelta: {}\nrank: {rank}\nfiber_dim: {}\n",
        shape.form_type().letter(),
        shape.n(),
        shape.d(),
        parts_text(p.mu.parts()),
        parts_text(lambda.parts()),
        parts_text(&p.delta),
        p.fiber_dim
    )
}

pub fn enumerate_text(shape: &AmbientShape, entries: &[(StrictPartition, Vec<u32>, u32, u32)]) -> String {
    let mut out = format!(
        "shape: {} n={} d={}\ncount: {}\n",
        shape.form_type().letter(),
        shape.n(),
        shape.d(),
        entries.len()
    );
    for (mu, delta, rank, fiber_dim) in entries {
        out.push_str(&format!(
            "mu: {} delta: {} rank: {rank} fiber_dim: {fiber_dim}\n",
            parts_text(mu.parts()),
            parts_text(delta)
        ));
    }
    out
}

pub fn predecessors_text(mu: &StrictPartition, preds: &[StrictPartition]) -> String {
    let list: Vec<String> = preds.iter().map(|p| parts_text(p.parts())).collect();
    format!("mu: {}\npredecessors: {{{}}}\n", parts_text(mu.parts()), list.join(", "))
}

pub fn fibration_text(nu: &StrictPartition, mu: &StrictPartition, p: &FibrationProfile, gap: u32) -> String {
    format!(
        "nu: {}\nmu: {}\nk: {}\nrel_dim: {}\nrank_gap: {gap}\n",
        parts_text(nu.parts()),
        parts_text(mu.parts()),
        parts_text(&p.k),
        p.rel_dim
    )
}

// ---------------------------------------------------------------------------
// LaTeX rendering

fn latex_generator(g: &Generator) -> String {
    match g {
        Generator::Segre { k, m } => format!("s_{{{k}}}(E_{{{m}}})"),
        Generator::ChernL => "c_1(L)".to_string(),
        Generator::Root { i } => format!("y_{{{i}}}"),
    }
}

fn latex_monomial(m: &Monomial) -> String {
    m.factors()
        .iter()
        .map(|(g, e)| {
            if *e == 1 {
                latex_generator(g)
            } else {
                format!("{}^{{{e}}}", latex_generator(g))
            }
        })
        .collect::<Vec<_>>()
        .join("\\,")
}

pub fn latex_value(value: &GradedPolynomial) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let terms: Vec<(&Monomial, &BigInt)> = value.terms().collect();
    let mut out = String::new();
    for (idx, (m, c)) in terms.iter().rev().enumerate() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let abs = c.magnitude();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs == &1u32.into() {
            out.push_str(&latex_monomial(m));
        } else {
            out.push_str(&format!("{abs}\\,{}", latex_monomial(m)));
        }
    }
    out
}

pub fn latex_input_class(f: &InputClass) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut keys: Vec<&Vec<u32>> = f.terms().map(|(e, _)| e).collect();
    keys.sort_by(|a, b| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    let coeff_of = |e: &Vec<u32>| -> &BigInt { f.terms().find(|(k, _)| k == &e).unwrap().1 };
    let mut out = String::new();
    for (idx, e) in keys.iter().enumerate() {
        let c = coeff_of(e);
        let neg = c.sign() == num_bigint::Sign::Minus;
        let abs = c.magnitude();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mut factors: Vec<String> = Vec::new();
        if abs != &num_bigint::BigUint::from(1u32) || e.iter().all(|&x| x == 0) {
            factors.push(abs.to_string());
        }
        for (v, &ev) in e.iter().enumerate() {
            if ev == 1 {
                factors.push(format!("t_{{{}}}", v + 1));
            } else if ev > 1 {
                factors.push(format!("t_{{{}}}^{{{ev}}}", v + 1));
            }
        }
        out.push_str(&factors.join("\\,"));
    }
    out
}

pub fn gysin_latex(result: &GysinResult, f: &InputClass) -> String {
    format!(
        "\\pi_{{*}}\\!\\left({}\\right) = {}\n",
        latex_input_class(f),
        latex_value(&result.value)
    )
}

pub fn latex_parts(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("({})", inner.join(","))
}

pub fn profile_latex(p: &PartitionProfile, lambda: &OrdinaryPartition, rank: u32) -> String {
    format!(
        "\\mu = {},\\quad \\lambda = {},\\quad \\delta = {},\\quad \\operatorname{{rank}} = {rank},\\quad \\dim = {}\n",
        latex_parts(p.mu.parts()),
        latex_parts(lambda.parts()),
        latex_parts(&p.delta),
        p.fiber_dim
    )
}

pub fn enumerate_latex(entries: &[(StrictPartition, Vec<u32>, u32, u32)]) -> String {
    let mut out = String::new();
    for (mu, delta, _rank, fiber_dim) in entries {
        out.push_str(&format!(
            "\\mu = {},\\ \\delta = {},\\ \\dim = {} \\\\\n",
            latex_parts(mu.parts()),
            latex_parts(delta),
            fiber_dim
        ));
    }
    out
}

pub fn predecessors_latex(mu: &StrictPartition, preds: &[StrictPartition]) -> String {
    let list: Vec<String> = preds.iter().map(|p| latex_parts(p.parts())).collect();
    format!(
        "\\mu = {}\\colon\\ \\{{{}\\}}\n",
        latex_parts(mu.parts()),
        list.join(",\\ ")
    )
}

pub fn fibration_latex(p: &FibrationProfile) -> String {
    format!(
        "k = {},\\quad \\operatorname{{reldim}} = {}\n",
        latex_parts(&p.k),
        p.rel_dim
    )
}
