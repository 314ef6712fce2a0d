//! Rendering of reports as JSON, plain text or LaTeX.

use serde_json::Value;

use crate::{Command, Format, Report};

pub fn emit(report: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(report),
        Format::Latex => latex(report),
    }
}

fn str_of<'a>(v: &'a Value, key: &str) -> &'a str {
    v.get(key).and_then(Value::as_str).unwrap_or("")
}

fn plain(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn weight_text(w: &Value) -> String {
    match w.as_object() {
        Some(map) => map
            .iter()
            .filter(|(k, _)| k.as_str() != "kind")
            .map(|(k, v)| format!("{k}={}", plain(v)))
            .collect::<Vec<_>>()
            .join(", "),
        None => String::new(),
    }
}

fn text(report: &Report) -> String {
    let r = &report.results;
    let mut out = Vec::new();
    match report.job.command {
        Command::Singular => {
            let vs = r["vectors"].as_array().cloned().unwrap_or_default();
            if vs.is_empty() {
                out.push("no singular vectors".to_string());
            }
            for v in vs {
                out.push(str_of(&v, "text").to_string());
            }
        }
        Command::Subsingular => {
            out.push(format!("weight: {}", weight_text(&r["weight"])));
            match r.get("vector").filter(|v| !v.is_null()) {
                Some(v) => out.push(str_of(v, "text").to_string()),
                None => out.push("none".to_string()),
            }
        }
        Command::Classify => {
            out.push(format!("weight: {}", weight_text(&r["weight"])));
            out.push(format!("verdict: {}", plain(&r["verdict"])));
            out.push(format!("p: {}", plain(&r["p"])));
            out.push(format!("r: {}", plain(&r["r"])));
            if let Some(case) = r.get("hvCase").filter(|v| !v.is_null()) {
                out.push(format!("case: {}", plain(case)));
            }
            for key in ["uPrime", "u"] {
                if let Some(v) = r.get(key).filter(|v| !v.is_null()) {
                    out.push(format!("{key}: {}", str_of(v, "text")));
                }
            }
        }
        Command::Character => {
            let order = r["order"].as_u64().unwrap_or(0) as usize;
            for (key, name) in [("v", "V"), ("jprime", "J'"), ("lprime", "L'"), ("j", "J"), ("l", "L")] {
                if let Some(series) = r["characters"].get(key).filter(|v| !v.is_null()) {
                    out.push(format!("{name}: {}", series_text(series, order)));
                }
            }
        }
        Command::Tensor | Command::HvDecide => {
            out.push(format!("weight: {}", weight_text(&r["weight"])));
            out.push(format!("series: {}", plain(&r["series"])));
            if let Some(s) = r.get("singular").filter(|v| !v.is_null()) {
                out.push(format!("singular: {} (p = {}, {})", str_of(&s["vector"], "text"), s["p"], plain(&s["case"])));
            }
            if let Some(p) = r.get("polynomials").filter(|v| !v.is_null()) {
                for key in ["sPoly", "qPoly", "rPoly"] {
                    if let Some(x) = p.get(key).filter(|v| !v.is_null()) {
                        out.push(format!("{key}: {}", plain(x)));
                    }
                }
            }
            let d = &r["decision"];
            out.push(format!("verdict: {}", plain(&d["verdict"])));
            out.push(format!("reason: {}", plain(&d["reason"])));
            if let Some(w) = d["witness"].as_object() {
                for (k, v) in w {
                    out.push(format!("witness: {k} = {}", plain(v)));
                }
            }
            for w in d["subquotients"].as_array().into_iter().flatten() {
                out.push(format!("subquotient: {}", weight_text(w)));
            }
            for c in r["checks"].as_array().into_iter().flatten() {
                out.push(format!("cyclic at n = {}: {}", c["n"], c["cyclic"]));
            }
            for n in d["notes"].as_array().into_iter().flatten() {
                out.push(format!("note: {}", plain(n)));
            }
        }
        Command::Scan => {
            out.push(format!(
                "{:>2} {:>2} {:>5}  {:<24} {:<6} {:<8} {:<8} pass",
                "p", "r", "level", "h", "found", "offsets", "l1Only"
            ));
            for row in r["rows"].as_array().into_iter().flatten() {
                let offsets = row["offsets"]
                    .as_array()
                    .map(|o| if o.iter().all(|x| x["found"] == false) { "none" } else { "found" })
                    .unwrap_or("-");
                out.push(format!(
                    "{:>2} {:>2} {:>5}  {:<24} {:<6} {:<8} {:<8} {}",
                    plain(&row["p"]),
                    plain(&row["r"]),
                    plain(&row["level"]),
                    plain(&row["h"]),
                    plain(&row["found"]),
                    offsets,
                    plain(&row["l1Only"]),
                    plain(&row["pass"]),
                ));
            }
            for s in r["skipped"].as_array().into_iter().flatten() {
                out.push(format!("skipped: p={} r={}", s[0], s[1]));
            }
            out.push(format!("all pass: {}", plain(&r["allPass"])));
        }
    }
    for n in &report.notes {
        out.push(format!("# {n}"));
    }
    out.join("\n") + "\n"
}

fn coeffs(series: &Value) -> Vec<u64> {
    series["coeffs"].as_array().into_iter().flatten().filter_map(Value::as_u64).collect()
}

fn series_text(series: &Value, order: usize) -> String {
    let parts: Vec<String> = coeffs(series)
        .into_iter()
        .take(order + 1)
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".into(),
            (1, c) => format!("{c}q"),
            (k, 1) => format!("q^{k}"),
            (k, c) => format!("{c}q^{k}"),
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn series_latex(series: &Value) -> String {
    let parts: Vec<String> = coeffs(series)
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".into(),
            (1, c) => format!("{c}q"),
            (k, 1) => format!("q^{{{k}}}"),
            (k, c) => format!("{c}q^{{{k}}}"),
        })
        .collect();
    parts.join("+") + "+\\cdots"
}

/// Row label for a `u'` table: the binding that was applied.
fn binding_label(report: &Report) -> String {
    let p = report.job.get("p").unwrap_or("");
    if p == "1" {
        return "h_{W}=0".into();
    }
    match report.notes.iter().find_map(|n| n.strip_prefix("c bound to ")) {
        Some(c) => format!("c={}", latex_of_text(c, &report.job)),
        None => format!("p={p}"),
    }
}

fn latex_of_text(text: &str, job: &crate::Job) -> String {
    let space = verma_core::Space::new(&job.symbolic()).unwrap_or_else(|_| verma_core::Space::empty());
    verma_core::Scalar::parse(&space, text).map(|s| s.to_latex()).unwrap_or_else(|_| text.to_string())
}

fn tabular(rows: &[(String, String)]) -> String {
    let mut out = String::from("\\begin{tabular}\n[c]{|c|c|}\\hline\n");
    for (a, b) in rows {
        out.push_str(&format!("${a}$ & ${b}$\\\\\\hline\n"));
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn latex(report: &Report) -> String {
    let r = &report.results;
    match report.job.command {
        Command::Singular => {
            let rows: Vec<(String, String)> = r["vectors"]
                .as_array()
                .into_iter()
                .flatten()
                .map(|v| (binding_label(report), str_of(v, "latex").to_string()))
                .collect();
            tabular(&rows)
        }
        Command::Subsingular => {
            let h = latex_of_text(str_of(&r["weight"], "h"), &report.job);
            let cell = match r.get("vector").filter(|v| !v.is_null()) {
                Some(v) => str_of(v, "latex").to_string(),
                None => "\\text{none}".into(),
            };
            tabular(&[(format!("h={h}"), cell)])
        }
        Command::Classify => {
            let mut rows = vec![("\\text{verdict}".to_string(), format!("\\text{{{}}}", plain(&r["verdict"])))];
            for (key, name) in [("uPrime", "u^{\\prime}"), ("u", "u")] {
                if let Some(v) = r.get(key).filter(|v| !v.is_null()) {
                    rows.push((name.to_string(), str_of(v, "latex").to_string()));
                }
            }
            tabular(&rows)
        }
        Command::Character => {
            let mut rows = Vec::new();
            for (key, name) in
                [("v", "V"), ("jprime", "J^{\\prime}"), ("lprime", "L^{\\prime}"), ("j", "J"), ("l", "L")]
            {
                if let Some(series) = r["characters"].get(key).filter(|v| !v.is_null()) {
                    rows.push((format!("\\operatorname{{char}}{name}"), series_latex(series)));
                }
            }
            tabular(&rows)
        }
        Command::Tensor | Command::HvDecide => {
            let d = &r["decision"];
            let mut rows = vec![
                ("\\text{verdict}".to_string(), format!("\\text{{{}}}", plain(&d["verdict"]))),
                ("\\text{reason}".to_string(), format!("\\text{{{}}}", plain(&d["reason"]))),
            ];
            if let Some(w) = d["witness"].as_object() {
                for (k, v) in w {
                    let cell = match v {
                        Value::String(s) => latex_of_text(s, &report.job),
                        other => other.to_string(),
                    };
                    rows.push((format!("\\text{{{k}}}"), cell));
                }
            }
            tabular(&rows)
        }
        Command::Scan => {
            let mut out =
                String::from("\\begin{tabular}\n[c]{|c|c|c|c|c|}\\hline\n$p$ & $r$ & $h$ & found & pass\\\\\\hline\n");
            for row in r["rows"].as_array().into_iter().flatten() {
                let sym = if row["p"] == 1 { "c" } else { "hW" };
                let space = verma_core::Space::new(&[sym]).unwrap();
                let h = verma_core::Scalar::parse(&space, str_of(row, "h")).map(|s| s.to_latex()).unwrap_or_default();
                out.push_str(&format!(
                    "${}$ & ${}$ & ${h}$ & {} & {}\\\\\\hline\n",
                    row["p"],
                    row["r"],
                    if row["found"] == true { "yes" } else { "no" },
                    if row["pass"] == true { "yes" } else { "no" },
                ));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
