use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use verma_core::tensor::{cyclicity_check, decide_from_report, decide_tensor_hv, hv_decision_polynomials, Factor};
use verma_core::verma::scan::{scan_grid, scan_point, ScanReport};
use verma_core::verma::{characters, classify, hv_singular, necessary_h, singular_space, subsingular, u_prime};
use verma_core::{
    AlgebraKind, HighestWeight, IntermediateSeries, ModuleVector, Rational, Scalar, Space, TensorDecision, Verma,
    Window,
};

use crate::{
    invalid, CliError, Command, Job, Report, Result, DEFAULT_MAX_LEVEL, DEFAULT_MAX_P, DEFAULT_ORDER, DEFAULT_WINDOW,
    WORKERS_VAR,
};

/// Validates and runs a job. Timing is left to the caller.
pub fn run(job: &Job) -> Result<Report> {
    job.validate()?;
    let mut cx = Context::new(job)?;
    let results = match job.command {
        Command::Singular => singular(&mut cx)?,
        Command::Subsingular => subsingular_job(&mut cx)?,
        Command::Classify => classify_job(&mut cx)?,
        Command::Character => character(&mut cx)?,
        Command::Tensor => tensor(&mut cx)?,
        Command::HvDecide => hv_decide(&mut cx)?,
        Command::Scan => scan(&mut cx)?,
    };
    Ok(Report { job: job.clone(), results, notes: cx.notes, elapsed_ms: None })
}

struct Context<'a> {
    job: &'a Job,
    space: Space,
    notes: Vec<String>,
}

impl<'a> Context<'a> {
    fn new(job: &'a Job) -> Result<Context<'a>> {
        let space = Space::new(&job.symbolic())?;
        Ok(Context { job, space, notes: Vec::new() })
    }

    fn is_symbolic(&self, key: &str) -> bool {
        self.space.index_of(key).is_some()
    }

    /// The value given for `key`, or the parameter of the same name when it
    /// is declared symbolic.
    fn scalar(&self, key: &str) -> Result<Option<Scalar>> {
        match self.job.get(key) {
            Some(text) => Ok(Some(Scalar::parse(&self.space, text)?)),
            None if self.is_symbolic(key) => Ok(Some(Scalar::param(&self.space, key)?)),
            None => Ok(None),
        }
    }

    fn require(&self, key: &str) -> Result<Scalar> {
        self.scalar(key)?.ok_or_else(|| {
            CliError::Invalid(format!("{} needs `{key}` (a value or --symbolic {key})", self.job.command))
        })
    }

    fn algebra(&self) -> Result<AlgebraKind> {
        match self.job.get("algebra").unwrap_or("w22") {
            "w22" => Ok(AlgebraKind::W22),
            "hv" => Ok(AlgebraKind::HV),
            other => invalid(format!("unknown algebra `{other}`")),
        }
    }

    /// `c` given or declared symbolic; otherwise bound to `-24 h_W / (p^2 - 1)`
    /// when `p ≥ 2`.
    fn central_charge(&mut self, h_w: &Scalar, p: Option<u32>) -> Result<Scalar> {
        if let Some(c) = self.scalar("c")? {
            return Ok(c);
        }
        match p {
            Some(p) if p >= 2 => {
                let d = (p as i64).pow(2) - 1;
                let c = Scalar::from_int(-24).try_mul(h_w)?.try_div(&Scalar::from_int(d))?;
                self.notes.push(format!("c bound to {c}"));
                Ok(c)
            }
            _ => invalid(format!("{} needs `c` (a value or --symbolic c)", self.job.command)),
        }
    }

    /// A full highest weight from the given values.
    fn weight(&mut self) -> Result<HighestWeight> {
        match self.algebra()? {
            AlgebraKind::W22 => {
                let h_w = self.require("hW")?;
                let c = self.require("c")?;
                let h = self.require("h")?;
                Ok(HighestWeight::w22(c, h, h_w)?)
            }
            AlgebraKind::HV => {
                let c = self.require("c")?;
                let c_li = self.require("cLI")?;
                let h = self.require("h")?;
                let h_i = self.require("hI")?;
                Ok(HighestWeight::hv(c, Scalar::zero(), c_li, h, h_i)?)
            }
        }
    }
}

fn vector_json(x: &ModuleVector) -> Value {
    let mut v = serde_json::to_value(x).expect("vectors serialize");
    v["latex"] = Value::String(x.to_latex());
    v
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn weight_json(hw: &HighestWeight) -> Value {
    match hw.kind() {
        AlgebraKind::W22 => json!({
            "kind": hw.kind(),
            "c": hw.c().to_string(),
            "h": hw.h().to_string(),
            "hW": hw.x().to_string(),
        }),
        AlgebraKind::HV => json!({
            "kind": hw.kind(),
            "c": hw.c().to_string(),
            "cLI": hw.c_li().to_string(),
            "h": hw.h().to_string(),
            "hI": hw.x().to_string(),
        }),
    }
}

fn decision_json(d: &TensorDecision) -> Value {
    let mut out = to_json(d);
    out["subquotients"] = Value::Array(d.subquotients.iter().map(weight_json).collect());
    out
}

fn singular(cx: &mut Context) -> Result<Value> {
    let p = cx.job.parse_u32("p")?;
    let level = cx.job.parse_u32("level")?;
    if cx.algebra()? == AlgebraKind::HV {
        let v = Verma::new(cx.weight()?);
        let found = match level {
            Some(k) => singular_space(&v, k)?,
            None => hv_singular(&v)?.map(|(_, _, x)| x).into_iter().collect(),
        };
        return Ok(json!({ "vectors": found.iter().map(vector_json).collect::<Vec<_>>() }));
    }
    let h_w = cx.require("hW")?;
    let vectors = match (p, level) {
        (Some(p), None) => {
            let c = cx.central_charge(&h_w, Some(p))?;
            let h = match cx.scalar("h")? {
                Some(h) => h,
                None => {
                    cx.notes.push("h set to 0; u' does not depend on h".into());
                    Scalar::zero()
                }
            };
            let v = Verma::new(HighestWeight::w22(c, h, h_w)?);
            vec![u_prime(&v, p)?]
        }
        (None, Some(k)) => {
            let c = cx.require("c")?;
            let h = cx.require("h")?;
            singular_space(&Verma::new(HighestWeight::w22(c, h, h_w)?), k)?
        }
        _ => return invalid("singular needs exactly one of `p` and `level`"),
    };
    Ok(json!({ "vectors": vectors.iter().map(vector_json).collect::<Vec<_>>() }))
}

fn subsingular_job(cx: &mut Context) -> Result<Value> {
    let p = cx.job.parse_u32("p")?.unwrap_or(0);
    let r = cx.job.parse_u32("r")?.unwrap_or(0);
    if p == 0 || r == 0 {
        return invalid("p and r must be positive");
    }
    let h_w = cx.require("hW")?;
    let c = cx.central_charge(&h_w, Some(p))?;
    let h = match cx.scalar("h")? {
        Some(h) => h,
        None => {
            let h = necessary_h(p, r, &h_w);
            cx.notes.push(format!("h set to the necessary value {h}"));
            h
        }
    };
    let v = Verma::new(HighestWeight::w22(c, h, h_w)?);
    let u = subsingular(&v, p, r)?;
    if u.is_none() {
        cx.notes.push("the linear system for the coefficients is inconsistent".into());
    }
    Ok(json!({
        "p": p,
        "r": r,
        "weight": weight_json(v.hw()),
        "found": u.is_some(),
        "vector": u.as_ref().map(vector_json),
    }))
}

fn classify_job(cx: &mut Context) -> Result<Value> {
    let max_p = cx.job.parse_u32("maxP")?.unwrap_or(DEFAULT_MAX_P);
    let v = Verma::new(cx.weight()?);
    let report = classify(&v, max_p)?;
    let mut out = to_json(&report);
    if let Some(x) = &report.u_prime {
        out["uPrime"] = vector_json(x);
    }
    if let Some(x) = &report.u {
        out["u"] = vector_json(x);
    }
    out["weight"] = weight_json(v.hw());
    Ok(out)
}

fn character(cx: &mut Context) -> Result<Value> {
    let h = cx.scalar("h")?.unwrap_or_else(Scalar::zero);
    let p = cx.job.parse_u32("p")?;
    let r = cx.job.parse_u32("r")?;
    if r.is_some() && p.is_none() {
        return invalid("`r` needs `p`");
    }
    let order = match cx.job.get("order") {
        Some(_) => cx.job.parse_u32("order")?.unwrap_or(0) as usize,
        None => DEFAULT_ORDER,
    };
    cx.notes.push(format!("series truncated after q^{order}"));
    let ch = characters(&h, p.map(|p| p as usize), r.map(|r| r as usize), order)?;
    Ok(json!({ "h": h.to_string(), "order": order, "characters": to_json(&ch) }))
}

fn series(cx: &Context, with_f: bool) -> Result<IntermediateSeries> {
    let alpha = cx.require("alpha")?;
    let beta = cx.require("beta")?;
    let f = if with_f { cx.scalar("F")?.unwrap_or_else(Scalar::zero) } else { Scalar::zero() };
    Ok(IntermediateSeries::with_f(alpha, beta, f))
}

fn parse_factor(text: &str) -> Result<Factor> {
    match text {
        "irreducible" => Ok(Factor::Irreducible),
        "lprime" => Ok(Factor::Lprime),
        "verma" => Ok(Factor::Verma),
        other => invalid(format!("unknown factor `{other}`")),
    }
}

fn tensor(cx: &mut Context) -> Result<Value> {
    let hw = cx.weight()?;
    if hw.kind() == AlgebraKind::HV {
        return hv_decide_with(cx, hw);
    }
    let s = series(cx, false)?;
    let max_p = cx.job.parse_u32("maxP")?.unwrap_or(DEFAULT_MAX_P);
    let v = Verma::new(hw.clone());
    let report = classify(&v, max_p)?;
    let decision = decide_from_report(&hw, &s, &report)?;
    let factor = parse_factor(cx.job.get("factor").unwrap_or("irreducible"))?;
    let window = Window::symmetric(cx.job.parse_i64("window")?.unwrap_or(DEFAULT_WINDOW));
    let depth = match cx.job.parse_u32("depth")? {
        Some(d) => d,
        None => report.p.unwrap_or(0) * report.r.unwrap_or(0) + 2,
    };
    let checks = match cx.job.get("check") {
        Some(list) => parse_list::<i64>(list, "check")?,
        None => Vec::new(),
    };
    let mut out = Vec::new();
    if !checks.is_empty() {
        cx.notes.push(format!("cyclicity at window [{}, {}], depth {depth}, factor {factor:?}", window.lo, window.hi));
        for n in checks {
            out.push(json!({ "n": n, "cyclic": cyclicity_check(&hw, &s, n, depth, window, factor)? }));
        }
    }
    Ok(json!({
        "weight": weight_json(&hw),
        "series": s.to_string(),
        "structure": report.verdict,
        "decision": decision_json(&decision),
        "checks": out,
    }))
}

fn hv_decide(cx: &mut Context) -> Result<Value> {
    if cx.algebra()? != AlgebraKind::HV && cx.job.get("algebra").is_some() {
        return invalid("hv-decide is for the Heisenberg-Virasoro algebra");
    }
    let c = cx.require("c")?;
    let c_li = cx.require("cLI")?;
    let h = cx.require("h")?;
    let h_i = cx.require("hI")?;
    let hw = HighestWeight::hv(c, Scalar::zero(), c_li, h, h_i)?;
    hv_decide_with(cx, hw)
}

fn hv_decide_with(cx: &mut Context, hw: HighestWeight) -> Result<Value> {
    let s = series(cx, true)?;
    let decision = decide_tensor_hv(&hw, &s)?;
    let v = Verma::new(hw.clone());
    let (singular, polys) = match hv_singular(&v)? {
        Some((p, case, x)) => {
            let polys = hv_decision_polynomials(&hw, &s, p)?;
            (json!({ "p": p, "case": case, "vector": vector_json(&x) }), to_json(&polys))
        }
        None => (Value::Null, Value::Null),
    };
    Ok(json!({
        "weight": weight_json(&hw),
        "series": s.to_string(),
        "singular": singular,
        "polynomials": polys,
        "decision": decision_json(&decision),
    }))
}

fn parse_list<T: std::str::FromStr>(text: &str, key: &str) -> Result<Vec<T>> {
    text.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<T>().or_else(|_| invalid(format!("bad entry `{x}` in `{key}`"))))
        .collect()
}

fn workers() -> Result<Option<usize>> {
    match std::env::var(WORKERS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => invalid(format!("{WORKERS_VAR} must be a positive integer")),
        },
        Err(_) => Ok(None),
    }
}

fn scan(cx: &mut Context) -> Result<Value> {
    let p_max = cx.job.parse_u32("pmax")?.unwrap_or(0);
    let r_max = cx.job.parse_u32("rmax")?.unwrap_or(0);
    let max_level = cx.job.parse_u32("maxLevel")?.unwrap_or(DEFAULT_MAX_LEVEL);
    let offsets: Vec<Rational> = match cx.job.get("offsets") {
        Some(list) => list
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(|x| {
                Scalar::parse(&Space::empty(), x.trim())?
                    .as_rational()
                    .ok_or_else(|| CliError::Invalid(format!("offset `{x}` is not rational")))
            })
            .collect::<Result<_>>()?,
        None => Vec::new(),
    };
    let (grid, skipped) = scan_grid(p_max, r_max, max_level);
    if !skipped.is_empty() {
        cx.notes.push(format!("{} grid point(s) above level {max_level} skipped", skipped.len()));
    }
    let compute = || -> Result<Vec<_>> {
        grid.par_iter().map(|&(p, r)| scan_point(p, r, &offsets).map_err(CliError::from)).collect()
    };
    let mut rows = match workers()? {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Invalid(e.to_string()))?
            .install(compute)?,
        None => compute()?,
    };
    rows.sort_by_key(|row| (row.p, row.r));
    let all = rows.iter().all(|row| row.pass);
    let report = ScanReport { rows, skipped, max_level };
    let mut out = to_json(&report);
    out["allPass"] = Value::Bool(all);
    Ok(out)
}
