//! Structure of a Verma module: which singular and subsingular vectors exist.

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::AlgebraKind;
use crate::pbw::{ModuleVector, Monomial, Verma};
use crate::scalar::Scalar;

use super::quotient::Quotient;
use super::singular::{hv_singular, jprime_quotient, subsingular, u_prime, zd_find_p, HvCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    VermaIrreducible,
    UprimeOnly,
    UprimeAndSubsingular,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructureReport {
    pub kind: AlgebraKind,
    pub p: Option<u32>,
    pub r: Option<u32>,
    pub verdict: Verdict,
    #[serde(rename = "uPrime")]
    pub u_prime: Option<ModuleVector>,
    pub u: Option<ModuleVector>,
    #[serde(rename = "hvCase")]
    pub hv_case: Option<HvCase>,
    pub notes: Vec<String>,
}

/// Solves the necessary condition on `h` for `r`:
/// `r = 1 - 2(h - h_W)/p + (13p + 1)(p - 1)/(6p)`.
pub fn candidate_r(h: &Scalar, h_w: &Scalar, p: u32) -> Scalar {
    let pi = p as i64;
    Scalar::one() - Scalar::from_int(2) * (h - h_w) / Scalar::from_int(pi)
        + Scalar::from_ratio((13 * pi + 1) * (pi - 1), 6 * pi)
}

/// Positive integer value of `r`, if `candidate_r` has one.
pub fn integral_r(h: &Scalar, h_w: &Scalar, p: u32) -> Option<u32> {
    let r = candidate_r(h, h_w, p).as_integer()?;
    if r.is_positive() {
        u32::try_from(r).ok()
    } else {
        None
    }
}

pub fn classify(v: &Verma, max_p: u32) -> Result<StructureReport> {
    match v.kind() {
        AlgebraKind::W22 => classify_w22(v, max_p),
        AlgebraKind::HV => classify_hv(v),
    }
}

fn classify_w22(v: &Verma, max_p: u32) -> Result<StructureReport> {
    let hw = v.hw();
    let mut report = StructureReport {
        kind: AlgebraKind::W22,
        p: None,
        r: None,
        verdict: Verdict::VermaIrreducible,
        u_prime: None,
        u: None,
        hv_case: None,
        notes: Vec::new(),
    };
    let Some(p) = zd_find_p(hw.c(), hw.x(), max_p) else {
        report.notes.push(format!("2hW + (m^2-1)c/12 is nonzero for every m <= {max_p}"));
        return Ok(report);
    };
    report.p = Some(p);
    report.u_prime = Some(u_prime(v, p)?);
    report.verdict = Verdict::UprimeOnly;
    let r_value = candidate_r(hw.h(), hw.x(), p);
    match integral_r(hw.h(), hw.x(), p) {
        None => {
            report.notes.push(format!(
                "necessary condition on h gives r = {r_value}, not a positive integer: no subsingular vector"
            ));
        }
        Some(r) => {
            report.r = Some(r);
            match subsingular(v, p, r)? {
                Some(u) => {
                    report.u = Some(u);
                    report.verdict = Verdict::UprimeAndSubsingular;
                }
                None => report.notes.push(format!("no subsingular vector at the unique candidate level {}", p * r)),
            }
        }
    }
    Ok(report)
}

fn classify_hv(v: &Verma) -> Result<StructureReport> {
    let mut report = StructureReport {
        kind: AlgebraKind::HV,
        p: None,
        r: None,
        verdict: Verdict::VermaIrreducible,
        u_prime: None,
        u: None,
        hv_case: None,
        notes: Vec::new(),
    };
    match hv_singular(v)? {
        None => report.notes.push("h_I/c_LI is not an integer, or equals 1".into()),
        Some((p, case, x)) => {
            report.p = Some(p);
            report.hv_case = Some(case);
            report.u_prime = Some(x);
            report.verdict = Verdict::UprimeOnly;
            report.notes.push("the quotient by the singular vector is irreducible".into());
        }
    }
    Ok(report)
}

/// The irreducible quotient of a Verma module as a `Quotient`, following the
/// classification.
pub fn irreducible_quotient<'a>(v: &'a Verma, report: &StructureReport) -> Result<Quotient<'a>> {
    match (report.verdict, report.kind) {
        (Verdict::VermaIrreducible, _) => Ok(Quotient::full(v)),
        (Verdict::UprimeOnly, AlgebraKind::W22) => {
            let p = report.p.expect("p present");
            Ok(jprime_quotient(v, p, report.u_prime.clone().expect("u' present")))
        }
        (Verdict::UprimeAndSubsingular, AlgebraKind::W22) => {
            let p = report.p.expect("p present");
            let r = report.r.expect("r present") as usize;
            let gens = vec![report.u_prime.clone().expect("u' present"), report.u.clone().expect("u present")];
            Ok(Quotient::new(v, gens, Box::new(move |m: &Monomial| !m.contains_w(p) && m.lp_degree(p) < r)))
        }
        (Verdict::UprimeOnly, AlgebraKind::HV) => {
            let p = report.p.expect("p present");
            let x = report.u_prime.clone().expect("singular vector present");
            let keep: Box<dyn Fn(&Monomial) -> bool> = match report.hv_case {
                Some(HvCase::ICase) => Box::new(move |m: &Monomial| !m.contains_w(p)),
                Some(HvCase::LCase) => Box::new(move |m: &Monomial| !m.l.contains(&p)),
                None => return Err(Error::Internal("missing Heisenberg-Virasoro case".into())),
            };
            Ok(Quotient::new(v, vec![x], keep))
        }
        (Verdict::UprimeAndSubsingular, AlgebraKind::HV) => {
            Err(Error::Internal("no subsingular vectors for Heisenberg-Virasoro".into()))
        }
    }
}
