//! Evidence for the conjectured reducibility criterion: subsingular vectors
//! at the necessary value of `h` and their absence nearby.

use serde::Serialize;

use crate::error::Result;
use crate::liealg::Generator;
use crate::pbw::{HighestWeight, Verma};
use crate::scalar::{Rational, Scalar, Space};

use super::singular::{jprime_quotient, necessary_h, subsingular, u_prime};

/// Weight `(c, h, h_W)` on the reducibility locus for `p`, with `h` at the
/// necessary value for `r` shifted by `delta`.
///
/// For `p = 1` the relation forces `h_W = 0` and `c` stays symbolic; for
/// `p ≥ 2`, `h_W` is symbolic and `c = -24 h_W / (p^2 - 1)`.
pub fn scan_weight(p: u32, r: u32, delta: &Scalar) -> Result<HighestWeight> {
    if p == 1 {
        let sp = Space::new(&["c"])?;
        let c = Scalar::param(&sp, "c")?;
        let h = necessary_h(1, r, &Scalar::zero()) + delta;
        HighestWeight::w22(c, h, Scalar::zero())
    } else {
        let sp = Space::new(&["hW"])?;
        let hw = Scalar::param(&sp, "hW")?;
        let pi = p as i64;
        let c = Scalar::from_int(-24) * &hw / Scalar::from_int(pi * pi - 1);
        let h = necessary_h(p, r, &hw) + delta;
        HighestWeight::w22(c, h, hw)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OffsetOutcome {
    pub delta: String,
    pub found: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRow {
    pub p: u32,
    pub r: u32,
    pub level: u32,
    pub h: String,
    pub found: bool,
    pub offsets: Vec<OffsetOutcome>,
    /// For `h_W = 0`: the vector has no `L_{-k}` factor with `k > 1`, and
    /// `W_0 u`, `W_{-1} u` lie in the submodule generated by `u'`.
    #[serde(rename = "l1Only")]
    pub l1_only: Option<bool>,
    pub pass: bool,
    pub vector: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub skipped: Vec<(u32, u32)>,
    #[serde(rename = "maxLevel")]
    pub max_level: u32,
}

fn l1_only_check(v: &Verma, p: u32, u: &crate::pbw::ModuleVector) -> Result<bool> {
    if u.terms().keys().any(|m| m.l.iter().any(|&k| k > 1)) {
        return Ok(false);
    }
    let q = jprime_quotient(v, p, u_prime(v, p)?);
    Ok(q.contains(&v.act(Generator::W(0), u)?)? && q.contains(&v.act(Generator::W(-1), u)?)?)
}

pub fn scan_point(p: u32, r: u32, offsets: &[Rational]) -> Result<ScanRow> {
    let hw = scan_weight(p, r, &Scalar::zero())?;
    let h = hw.h().to_string();
    let v = Verma::new(hw);
    let u = subsingular(&v, p, r)?;
    let l1_only = match (&u, p) {
        (Some(u), 1) => Some(l1_only_check(&v, p, u)?),
        _ => None,
    };
    let mut outcomes = Vec::new();
    for d in offsets {
        let delta = Scalar::from_rational(d.clone());
        if delta.is_zero() {
            continue;
        }
        let v = Verma::new(scan_weight(p, r, &delta)?);
        outcomes.push(OffsetOutcome { delta: delta.to_string(), found: subsingular(&v, p, r)?.is_some() });
    }
    let pass = u.is_some() && outcomes.iter().all(|o| !o.found) && l1_only != Some(false);
    Ok(ScanRow {
        p,
        r,
        level: p * r,
        h,
        found: u.is_some(),
        offsets: outcomes,
        l1_only,
        pass,
        vector: u.map(|x| x.to_string()),
    })
}

pub type Grid = Vec<(u32, u32)>;

/// Grid points `(p, r)` within the bounds, split by whether `p r ≤ max_level`.
pub fn scan_grid(p_max: u32, r_max: u32, max_level: u32) -> (Grid, Grid) {
    let mut run = Vec::new();
    let mut skipped = Vec::new();
    for p in 1..=p_max {
        for r in 1..=r_max {
            if p * r <= max_level {
                run.push((p, r));
            } else {
                skipped.push((p, r));
            }
        }
    }
    (run, skipped)
}

/// Sequential scan over the grid.
pub fn conjecture_scan(p_max: u32, r_max: u32, offsets: &[Rational], max_level: u32) -> Result<ScanReport> {
    let (run, skipped) = scan_grid(p_max, r_max, max_level);
    let rows = run.into_iter().map(|(p, r)| scan_point(p, r, offsets)).collect::<Result<Vec<_>>>()?;
    Ok(ScanReport { rows, skipped, max_level })
}
