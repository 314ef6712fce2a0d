//! Singular and subsingular vector solvers.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::liealg::{AlgebraKind, Generator};
use crate::linalg::{make_row, solve, Echelon, Solution, SparseRow};
use crate::pbw::{partitions, weight_space_basis, ModuleVector, Monomial, Verma};
use crate::scalar::Scalar;

use super::quotient::{independent_subset, Quotient};

/// `2 h_W + (p^2 - 1) c / 12`.
pub fn zd_value(c: &Scalar, h_w: &Scalar, p: u32) -> Scalar {
    let p = p as i64;
    Scalar::from_int(2) * h_w + Scalar::from_ratio(p * p - 1, 12) * c
}

/// Smallest `m ≤ max_p` with `2 h_W + (m^2 - 1) c / 12 = 0`.
pub fn zd_find_p(c: &Scalar, h_w: &Scalar, max_p: u32) -> Option<u32> {
    (1..=max_p).find(|&m| zd_value(c, h_w, m).is_zero())
}

/// `h_W + (13p + 1)(p - 1)/12 + (1 - r) p / 2`.
pub fn necessary_h(p: u32, r: u32, h_w: &Scalar) -> Scalar {
    let (p, r) = (p as i64, r as i64);
    h_w + Scalar::from_ratio((13 * p + 1) * (p - 1), 12) + Scalar::from_ratio((1 - r) * p, 2)
}

/// Raising generators that generate the positive part.
pub fn raising(kind: AlgebraKind) -> [Generator; 4] {
    [Generator::L(1), Generator::L(2), Generator::second(kind, 1), Generator::second(kind, 2)]
}

pub fn is_singular(v: &Verma, x: &ModuleVector) -> Result<bool> {
    for g in raising(v.kind()) {
        if !v.act(g, x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Solves for `x = fixed + sum a_j m_j` with `g x ≡ 0` modulo `quotient` for
/// every `g` in `gens`. `None` when the system is inconsistent.
pub fn solve_ansatz(
    v: &Verma,
    fixed: &ModuleVector,
    unknowns: &[Monomial],
    gens: &[Generator],
    quotient: &Quotient<'_>,
) -> Result<Option<ModuleVector>> {
    let mut row_index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut slot = |key: (usize, Monomial), rows: &mut Vec<Vec<(usize, Scalar)>>, rhs: &mut Vec<Scalar>| {
        *row_index.entry(key).or_insert_with(|| {
            rows.push(Vec::new());
            rhs.push(Scalar::zero());
            rows.len() - 1
        })
    };
    for (gi, &g) in gens.iter().enumerate() {
        let y = quotient.normal_form(&v.act(g, fixed)?)?;
        for (m, c) in y.terms() {
            let i = slot((gi, m.clone()), &mut rows, &mut rhs);
            rhs[i] = &rhs[i] - c;
        }
        for (j, mono) in unknowns.iter().enumerate() {
            let x = ModuleVector::monomial(v.kind(), mono.clone(), Scalar::one());
            let y = quotient.normal_form(&v.act(g, &x)?)?;
            for (m, c) in y.terms() {
                let i = slot((gi, m.clone()), &mut rows, &mut rhs);
                rows[i].push((j, c.clone()));
            }
        }
    }
    let rows: Vec<SparseRow> = rows.into_iter().map(make_row).collect();
    match solve(&rows, &rhs, unknowns.len()) {
        Solution::Inconsistent => Ok(None),
        Solution::Unique(a) => {
            let mut x = fixed.clone();
            for (mono, k) in unknowns.iter().zip(a) {
                x.add_term(mono.clone(), k);
            }
            Ok(Some(x))
        }
        Solution::Many(_, dim) => {
            Err(Error::NotUnique(format!("{dim}-dimensional family of solutions at level {}", fixed.level())))
        }
    }
}

/// Basis of the joint kernel of the raising generators at `level`.
pub fn singular_space(v: &Verma, level: u32) -> Result<Vec<ModuleVector>> {
    let monos = weight_space_basis(level);
    let mut row_index: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, Scalar)>> = Vec::new();
    for (gi, g) in raising(v.kind()).into_iter().enumerate() {
        for (j, mono) in monos.iter().enumerate() {
            for (m, c) in v.act_monomial(g, mono).iter() {
                let i = *row_index.entry((gi, m.clone())).or_insert_with(|| {
                    rows.push(Vec::new());
                    rows.len() - 1
                });
                rows[i].push((j, c.clone()));
            }
        }
    }
    let mut e = Echelon::new(monos.len());
    for r in rows {
        e.insert(make_row(r));
    }
    Ok(e.nullspace()
        .into_iter()
        .map(|x| {
            ModuleVector::from_terms(v.kind(), level as i64, monos.iter().cloned().zip(x).filter(|(_, c)| !c.is_zero()))
        })
        .collect())
}

fn second_only(p: u32) -> Vec<Monomial> {
    partitions(p, p).into_iter().filter(|w| w.as_slice() != [p]).map(|w| Monomial::new(w, Vec::new())).collect()
}

fn hv_ratio(v: &Verma) -> Result<Scalar> {
    let hw = v.hw();
    if hw.c_li().is_zero() {
        return Err(Error::Precondition("c_LI must be nonzero".into()));
    }
    hw.x().try_div(hw.c_li())
}

/// The singular vector with leading term `W_{-p} v` (or `I_{-p} v`), lying in
/// the span of monomials in the second family only.
pub fn u_prime(v: &Verma, p: u32) -> Result<ModuleVector> {
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let hw = v.hw();
    match v.kind() {
        AlgebraKind::W22 => {
            if !zd_value(hw.c(), hw.x(), p).is_zero() {
                return Err(Error::Precondition(format!(
                    "2hW + (p^2-1)c/12 = {} is not zero for p = {p}",
                    zd_value(hw.c(), hw.x(), p)
                )));
            }
        }
        AlgebraKind::HV => {
            let k = hv_ratio(v)?;
            if k != Scalar::from_int(p as i64 + 1) {
                return Err(Error::Precondition(format!("h_I/c_LI - 1 = p fails for p = {p}")));
            }
        }
    }
    let lead = v.monomial(Monomial::new(vec![p], vec![]));
    let q = Quotient::full(v);
    let x = solve_ansatz(v, &lead, &second_only(p), &[Generator::L(1), Generator::L(2)], &q)?
        .ok_or_else(|| Error::EmptyNullspace(format!("no singular vector with leading term at p = {p}")))?;
    if !is_singular(v, &x)? {
        return Err(Error::Internal(format!("vector found for p = {p} is not singular")));
    }
    Ok(x)
}

/// Which Heisenberg-Virasoro singular vector exists, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum HvCase {
    /// `h_I / c_LI - 1 = p`: leading term `I_{-p} v`.
    ICase,
    /// `1 - h_I / c_LI = p`: leading term `L_{-p} v`.
    LCase,
}

/// `(p, case)` from the ratio `h_I / c_LI`; `None` when the Verma module is irreducible.
pub fn hv_find_p(v: &Verma) -> Result<Option<(u32, HvCase)>> {
    let k = hv_ratio(v)?;
    let Some(q) = k.as_rational() else {
        return Err(Error::UndecidableIntegrality("h_I/c_LI".into()));
    };
    if !q.is_integer() {
        return Ok(None);
    }
    let k: i64 = k.to_i64().ok_or_else(|| Error::Overflow("h_I/c_LI".into()))?;
    Ok(match k - 1 {
        0 => None,
        d if d > 0 => Some((d as u32, HvCase::ICase)),
        d => Some(((-d) as u32, HvCase::LCase)),
    })
}

/// The Heisenberg-Virasoro singular vector at level `p`.
pub fn hv_singular(v: &Verma) -> Result<Option<(u32, HvCase, ModuleVector)>> {
    if v.kind() != AlgebraKind::HV {
        return Err(Error::Precondition("Heisenberg-Virasoro weight expected".into()));
    }
    let Some((p, case)) = hv_find_p(v)? else {
        return Ok(None);
    };
    let x = match case {
        HvCase::ICase => u_prime(v, p)?,
        HvCase::LCase => {
            let lead = v.monomial(Monomial::new(vec![], vec![p]));
            let unknowns: Vec<Monomial> =
                weight_space_basis(p).into_iter().filter(|m| m.l_degree() <= 1 && m.l != [p]).collect();
            let q = Quotient::full(v);
            solve_ansatz(v, &lead, &unknowns, &raising(AlgebraKind::HV), &q)?
                .ok_or_else(|| Error::EmptyNullspace(format!("no singular vector with leading term L(-{p}).v")))?
        }
    };
    if !is_singular(v, &x)? {
        return Err(Error::Internal("Heisenberg-Virasoro vector is not singular".into()));
    }
    Ok(Some((p, case, x)))
}

/// Quotient by the submodule generated by `u'`, with basis the monomials
/// free of `W_{-p}`.
pub fn jprime_quotient<'a>(v: &'a Verma, p: u32, u_prime: ModuleVector) -> Quotient<'a> {
    Quotient::new(v, vec![u_prime], Box::new(move |m: &Monomial| !m.contains_w(p)))
}

/// A basis of the submodule generated by `u'` at `level`.
pub fn jprime_span(v: &Verma, p: u32, level: u32) -> Result<Vec<ModuleVector>> {
    if level < p {
        return Err(Error::Precondition(format!("level {level} is below p = {p}")));
    }
    let u = u_prime(v, p)?;
    let mut all = Vec::new();
    for y in weight_space_basis(level - p) {
        all.push(v.apply_monomial(&y, &u)?);
    }
    let (_, keep) = independent_subset(&all);
    Ok(keep.into_iter().map(|i| all[i].clone()).collect())
}

/// The subsingular vector with leading term `L_{-p}^r v`, free of `W_{-p}`,
/// singular modulo the submodule generated by `u'`.
pub fn subsingular(v: &Verma, p: u32, r: u32) -> Result<Option<ModuleVector>> {
    if v.kind() != AlgebraKind::W22 {
        return Err(Error::Precondition("subsingular vectors are defined for W(2,2)".into()));
    }
    if p == 0 || r == 0 {
        return Err(Error::Precondition("p and r must be positive".into()));
    }
    let u = u_prime(v, p)?;
    let q = jprime_quotient(v, p, u);
    let lead_mono = Monomial::new(vec![], vec![p; r as usize]);
    let unknowns: Vec<Monomial> = q.basis(p * r).into_iter().filter(|m| *m != lead_mono).collect();
    let lead = v.monomial(lead_mono);
    solve_ansatz(v, &lead, &unknowns, &raising(AlgebraKind::W22), &q)
}

type WPoly = BTreeMap<Vec<u32>, Scalar>;

fn wpoly_add_scaled(acc: &mut WPoly, x: &WPoly, k: &Scalar, extra: u32) {
    for (w, c) in x {
        let mut w = w.clone();
        w.push(extra);
        w.sort_unstable_by(|a, b| b.cmp(a));
        let e = acc.entry(w).or_default();
        *e = &*e + &(c * k);
    }
}

/// The `r = 1` subsingular vector assembled from the recursion for the
/// coefficients `w_n` of `L_{-n}`, with `w_0` fixed by a small linear system.
pub fn subsingular_r1_recursive(v: &Verma, p: u32) -> Result<ModuleVector> {
    let hw = v.hw();
    if v.kind() != AlgebraKind::W22 || p < 2 {
        return Err(Error::Precondition("W(2,2) weight with p ≥ 2 expected".into()));
    }
    if !zd_value(hw.c(), hw.x(), p).is_zero() {
        return Err(Error::Precondition(format!("reducibility relation fails for p = {p}")));
    }
    if hw.h() != &necessary_h(p, 1, hw.x()) {
        return Err(Error::Precondition("h differs from the necessary value for r = 1".into()));
    }
    if hw.x().is_zero() {
        return Err(Error::Precondition("the recursion divides by h_W".into()));
    }
    let pi = p as i64;
    let mut w: Vec<WPoly> = vec![WPoly::new(); p as usize];
    for n in (1..p).rev() {
        let ni = n as i64;
        let mut inner = WPoly::new();
        for i in (n + 1)..p {
            let wi = w[i as usize].clone();
            wpoly_add_scaled(&mut inner, &wi, &Scalar::from_int(ni + i as i64), i - n);
        }
        let mut unit = WPoly::new();
        unit.insert(Vec::new(), Scalar::one());
        wpoly_add_scaled(&mut inner, &unit, &Scalar::from_int(ni + pi), p - n);
        let factor = Scalar::from_int(pi * pi - 1) / (Scalar::from_int(2 * ni * (ni * ni - pi * pi)) * hw.x());
        w[n as usize] = inner.into_iter().map(|(k, c)| (k, &c * &factor)).filter(|(_, c)| !c.is_zero()).collect();
    }
    let mut fixed = v.monomial(Monomial::new(vec![], vec![p]));
    for n in 1..p {
        for (wpart, c) in &w[n as usize] {
            fixed.add_term(Monomial::new(wpart.clone(), vec![n]), c.clone());
        }
    }
    let u = u_prime(v, p)?;
    let q = jprime_quotient(v, p, u);
    solve_ansatz(v, &fixed, &second_only(p), &raising(AlgebraKind::W22), &q)?
        .ok_or_else(|| Error::EmptyNullspace("no choice of w_0 completes the recursion".into()))
}

/// The coefficient polynomial `w_n` of the recursion, as a vector at level `p - n`.
pub fn recursion_coefficient(u: &ModuleVector, n: u32) -> ModuleVector {
    ModuleVector::from_terms(
        u.kind(),
        u.level() - n as i64,
        u.terms()
            .iter()
            .filter(|(m, _)| m.l.as_slice() == [n])
            .map(|(m, c)| (Monomial::new(m.w.clone(), vec![]), c.clone())),
    )
}

/// Monomials at `level` without a `W_{-p}` factor.
pub fn basis_lprime(p: u32, level: u32) -> Vec<Monomial> {
    weight_space_basis(level).into_iter().filter(|m| !m.contains_w(p)).collect()
}

/// Monomials at `level` without `W_{-p}` and with fewer than `r` factors `L_{-p}`.
pub fn basis_l(p: u32, r: u32, level: u32) -> Vec<Monomial> {
    basis_lprime(p, level).into_iter().filter(|m| m.lp_degree(p) < r as usize).collect()
}
