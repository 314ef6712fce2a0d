//! Tensor products `V'_{α,β,F} ⊗ L` of an intermediate series module with a
//! highest-weight module, and the irreducibility criteria for them.
//!
//! Tensor vectors are finite sums of `v_m ⊗ x` with `x` a PBW monomial. The
//! index `m` is stored as an offset from a base index, which may be a
//! symbolic parameter `n`; with a constant base the offsets are the indices.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::liealg::{AlgebraKind, Generator};
use crate::linalg::{make_row, Echelon, Inserted};
use crate::pbw::{weight_space_basis, HighestWeight, ModuleVector, Monomial, Verma};
use crate::scalar::{Scalar, Space};
use crate::verma::classify::{classify, irreducible_quotient, StructureReport, Verdict};
use crate::verma::quotient::Quotient;
use crate::verma::singular::{hv_singular, jprime_quotient, necessary_h, zd_value, HvCase};

/// Largest `p` tried when classifying a W(2,2) weight.
pub const DEFAULT_MAX_P: u32 = 12;

/// The intermediate series module `V_{α,β,F}`: `L_n v_m = -(m+α+β+nβ) v_{m+n}`,
/// `I_n v_m = F v_{m+n}`, `W_n v_m = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntermediateSeries {
    alpha: Scalar,
    beta: Scalar,
    f: Scalar,
}

impl IntermediateSeries {
    pub fn new(alpha: Scalar, beta: Scalar) -> IntermediateSeries {
        IntermediateSeries { alpha, beta, f: Scalar::zero() }
    }

    pub fn with_f(alpha: Scalar, beta: Scalar, f: Scalar) -> IntermediateSeries {
        IntermediateSeries { alpha, beta, f }
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn beta(&self) -> &Scalar {
        &self.beta
    }

    pub fn f(&self) -> &Scalar {
        &self.f
    }

    pub fn is_constant(&self) -> bool {
        self.alpha.is_constant() && self.beta.is_constant() && self.f.is_constant()
    }

    /// Smallest space holding every parameter of the series.
    pub fn space(&self) -> Result<Space> {
        let mut space = Space::empty();
        for s in [&self.alpha, &self.beta, &self.f] {
            if !s.is_constant() {
                space = space.union(s.space())?;
            }
        }
        Ok(space)
    }

    pub fn embed(&self, space: &Space) -> Result<IntermediateSeries> {
        Ok(IntermediateSeries {
            alpha: self.alpha.embed(space)?,
            beta: self.beta.embed(space)?,
            f: self.f.embed(space)?,
        })
    }

    /// For a reducible series (`α ∈ Z`, `β ∈ {0, 1}`, `F = 0`), the index whose
    /// vector is absent from the irreducible module `V'`: `-α` for `β = 0`
    /// (quotient by `C v_{-α}`), `-α - 1` for `β = 1` (the submodule without it).
    pub fn excluded(&self) -> Option<i64> {
        if !self.f.is_zero() {
            return None;
        }
        let a = self.alpha.to_i64().filter(|_| self.alpha.as_integer().is_some())?;
        if self.beta.is_zero() {
            Some(-a)
        } else if self.beta.is_one() {
            Some(-a - 1)
        } else {
            None
        }
    }

    pub fn is_reducible(&self) -> bool {
        self.excluded().is_some()
    }

    /// Coefficient of `v_{m+n}` in `g v_m`, for an index `m` given as a scalar.
    pub fn coefficient(&self, g: Generator, m: &Scalar) -> Result<Scalar> {
        Ok(match g {
            Generator::L(n) => {
                let nb = self.beta.try_mul(&Scalar::from_int(n))?;
                -m.try_add(&self.alpha)?.try_add(&self.beta)?.try_add(&nb)?
            }
            Generator::I(_) => self.f.clone(),
            Generator::W(_) | Generator::Central(_) => Scalar::zero(),
        })
    }
}

impl fmt::Display for IntermediateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V'(alpha={}, beta={}, F={})", self.alpha, self.beta, self.f)
    }
}

impl Serialize for IntermediateSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(3))?;
        map.serialize_entry("alpha", &self.alpha.to_string())?;
        map.serialize_entry("beta", &self.beta.to_string())?;
        map.serialize_entry("F", &self.f.to_string())?;
        map.end()
    }
}

/// `g v_m = coefficient * v_target`, honouring the excluded index of a
/// reducible series.
pub fn series_action(g: Generator, m: i64, s: &IntermediateSeries) -> Result<(Scalar, i64)> {
    let target = m + g.mode().unwrap_or(0);
    if let Some(e) = s.excluded() {
        if m == e || target == e {
            return Ok((Scalar::zero(), target));
        }
    }
    Ok((s.coefficient(g, &Scalar::from_int(m))?, target))
}

/// Range of admissible series indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    pub fn symmetric(w: i64) -> Window {
        Window { lo: -w, hi: w }
    }

    pub fn contains(&self, m: i64) -> bool {
        self.lo <= m && m <= self.hi
    }

    fn check(&self, m: i64) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::WindowOverflow { index: m, lo: self.lo, hi: self.hi })
        }
    }
}

/// A finite sum of `v_m ⊗ x`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorVector {
    kind: AlgebraKind,
    terms: BTreeMap<(i64, Monomial), Scalar>,
}

impl TensorVector {
    pub fn zero(kind: AlgebraKind) -> TensorVector {
        TensorVector { kind, terms: BTreeMap::new() }
    }

    /// `v_m ⊗ v`.
    pub fn pure(kind: AlgebraKind, m: i64) -> TensorVector {
        let mut x = TensorVector::zero(kind);
        x.add_term(m, Monomial::vacuum(), Scalar::one());
        x
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<(i64, Monomial), Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: i64, x: &Monomial) -> Scalar {
        self.terms.get(&(m, x.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: i64, x: Monomial, k: Scalar) {
        if k.is_zero() {
            return;
        }
        let key = (m, x);
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e += &k;
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, k);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorVector, k: &Scalar) {
        for ((m, x), c) in &other.terms {
            self.add_term(*m, x.clone(), c * k);
        }
    }

    /// Indices with a nonzero component.
    pub fn indices(&self) -> BTreeSet<i64> {
        self.terms.keys().map(|(m, _)| *m).collect()
    }

    /// The component at index `m`, as a module vector of the given level.
    pub fn component(&self, m: i64, level: i64) -> ModuleVector {
        ModuleVector::from_terms(
            self.kind,
            level,
            self.terms
                .iter()
                .filter(|((i, x), _)| *i == m && x.level() == level)
                .map(|((_, x), c)| (x.clone(), c.clone())),
        )
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for m in self.indices().into_iter().rev() {
            let levels: BTreeSet<i64> = self.terms.keys().filter(|(i, _)| *i == m).map(|(_, x)| x.level()).collect();
            for level in levels {
                parts.push(format!("v({m}) ⊗ {}", self.component(m, level)));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which module sits in the second tensor factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Factor {
    /// The Verma module itself.
    Verma,
    /// The quotient by the submodule generated by `u'`.
    Lprime,
    /// The irreducible quotient.
    Irreducible,
}

/// `V' ⊗ M` for `M` a quotient of a Verma module, with indices relative to
/// `base`.
pub struct TensorModule<'a> {
    series: IntermediateSeries,
    quotient: Quotient<'a>,
    base: Scalar,
    window: Option<Window>,
}

impl<'a> TensorModule<'a> {
    /// `series` and `base` must live in the space of the Verma module (see
    /// [`joint_space`]).
    pub fn new(
        series: IntermediateSeries,
        quotient: Quotient<'a>,
        base: Scalar,
        window: Option<Window>,
    ) -> TensorModule<'a> {
        TensorModule { series, quotient, base, window }
    }

    pub fn verma(&self) -> &'a Verma {
        self.quotient.verma()
    }

    pub fn quotient(&self) -> &Quotient<'a> {
        &self.quotient
    }

    fn kind(&self) -> AlgebraKind {
        self.verma().kind()
    }

    /// Absolute index for a constant base.
    fn absolute(&self, m: i64) -> Option<i64> {
        self.base.to_i64().filter(|_| self.base.as_integer().is_some()).map(|b| b + m)
    }

    fn is_excluded(&self, m: i64) -> bool {
        match (self.series.excluded(), self.absolute(m)) {
            (Some(e), Some(a)) => a == e,
            _ => false,
        }
    }

    fn check_window(&self, m: i64) -> Result<()> {
        match (self.window, self.absolute(m)) {
            (Some(w), Some(a)) => w.check(a),
            _ => Ok(()),
        }
    }

    pub fn pure(&self, m: i64) -> Result<TensorVector> {
        self.check_window(m)?;
        if self.is_excluded(m) {
            return Ok(TensorVector::zero(self.kind()));
        }
        Ok(TensorVector::pure(self.kind(), m))
    }

    /// `g (v_m ⊗ x) = g v_m ⊗ x + v_m ⊗ g x`, without reduction.
    pub fn act(&self, g: Generator, x: &TensorVector) -> Result<TensorVector> {
        g.check(self.kind())?;
        let mut out = TensorVector::zero(self.kind());
        for ((m, mono), c) in &x.terms {
            let target = m + g.mode().unwrap_or(0);
            if !self.is_excluded(*m) && !self.is_excluded(target) {
                let mi = self.base.try_add(&Scalar::from_int(*m))?;
                let k = self.series.coefficient(g, &mi)?;
                if !k.is_zero() {
                    self.check_window(target)?;
                    out.add_term(target, mono.clone(), c.try_mul(&k)?);
                }
            }
            for (n, k) in self.verma().act_monomial(g, mono).iter() {
                out.add_term(*m, n.clone(), c * k);
            }
        }
        Ok(out)
    }

    /// Reduces every component to the quotient basis.
    pub fn reduce(&self, x: &TensorVector) -> Result<TensorVector> {
        let mut groups: BTreeMap<(i64, i64), Vec<(Monomial, Scalar)>> = BTreeMap::new();
        for ((m, mono), c) in &x.terms {
            groups.entry((*m, mono.level())).or_default().push((mono.clone(), c.clone()));
        }
        let mut out = TensorVector::zero(self.kind());
        for ((m, level), terms) in groups {
            let y = self.quotient.normal_form(&ModuleVector::from_terms(self.kind(), level, terms))?;
            for (mono, c) in y.terms() {
                out.add_term(m, mono.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Applies the PBW word of `y` (rightmost factor first) and reduces.
    pub fn apply_monomial(&self, y: &Monomial, x: &TensorVector) -> Result<TensorVector> {
        let mut out = x.clone();
        for g in y.factors(self.kind()).into_iter().rev() {
            out = self.act(g, &out)?;
        }
        self.reduce(&out)
    }

    /// Applies `u`, read as an element of `U(L_-)`, and reduces.
    pub fn apply_vector(&self, u: &ModuleVector, x: &TensorVector) -> Result<TensorVector> {
        let mut out = TensorVector::zero(self.kind());
        for (y, c) in u.terms() {
            out.add_scaled(&self.apply_monomial(y, x)?, c);
        }
        Ok(out)
    }

    /// `y (v_k ⊗ v)` for `k` in `from..=to` and `y` running over PBW words of
    /// degree `k - weight`, so that every vector has the weight of
    /// `v_weight ⊗ v`.
    fn shifted_span(&self, weight: i64, extra: u32, from: i64, to: i64) -> Result<Vec<TensorVector>> {
        let mut out = Vec::new();
        for k in from..=to {
            let x = self.pure(k)?;
            if x.is_zero() {
                continue;
            }
            let deg = k - weight + extra as i64;
            for y in weight_space_basis(deg as u32) {
                let z = self.apply_monomial(&y, &x)?;
                if !z.is_zero() {
                    out.push(z);
                }
            }
        }
        Ok(out)
    }

    /// Whether `v_{n-1} ⊗ v` lies in the span of `y (v_k ⊗ v)` for
    /// `n ≤ k ≤ n + depth` and `y ∈ U(L_-)`, that is in `U_n + ... + U_{n+depth}`
    /// at this truncation.
    pub fn contains_previous(&self, n: i64, depth: u32) -> Result<bool> {
        self.check_window(n - 1)?;
        self.check_window(n + depth as i64)?;
        let target = self.pure(n - 1)?;
        if target.is_zero() {
            return Ok(true);
        }
        let span = self.shifted_span(n - 1, 0, n, n + depth as i64)?;
        Ok(in_span(&span, &target))
    }

    /// Dimension at `level` of `U_n / U_{n+1}`, with `U_{n+1}` truncated to
    /// `U_{n+1} + ... + U_{n+depth}`.
    pub fn subquotient_dimension(&self, n: i64, level: u32, depth: u32) -> Result<usize> {
        self.check_window(n - level as i64)?;
        self.check_window(n + depth as i64)?;
        let weight = n - level as i64;
        let upper = self.shifted_span(weight, 0, n + 1, n + depth as i64)?;
        let own = self.shifted_span(weight, 0, n, n)?;
        let r0 = rank(&upper);
        let mut all = upper;
        all.extend(own);
        Ok(rank(&all) - r0)
    }

    /// Eliminates every component `v_m ⊗ x` with `x ≠ v` by subtracting
    /// `x (v_m ⊗ v)`, highest index first; each step introduces only lower
    /// indices. Returns the coefficient left on `v_target ⊗ v` and the
    /// remainder, whose other components are `v_m ⊗ v` with `m > target`.
    pub fn eliminate(&self, start: &TensorVector, target: i64) -> Result<(Scalar, TensorVector)> {
        let mut x = self.reduce(start)?;
        loop {
            let next = x
                .terms
                .iter()
                .filter(|((_, mono), _)| !mono.is_vacuum())
                .max_by_key(|((m, _), _)| *m)
                .map(|((m, mono), c)| (*m, mono.clone(), c.clone()));
            let Some((m, mono, c)) = next else {
                break;
            };
            if m <= target {
                return Err(Error::Degenerate(format!(
                    "component v({m}) ⊗ {} at or below the target index",
                    mono.render(self.kind())
                )));
            }
            let y = self.apply_monomial(&mono, &self.pure(m)?)?;
            let lead = y.coeff(m, &mono);
            if !lead.is_one() {
                return Err(Error::Degenerate(format!("pivot {lead} is not a unit")));
            }
            x.add_scaled(&y, &-c);
        }
        if let Some(m) = x.indices().into_iter().find(|&m| m < target) {
            return Err(Error::Degenerate(format!("component at index {m} below the target")));
        }
        Ok((x.coeff(target, &Monomial::vacuum()), x))
    }
}

fn columns(vectors: &[&TensorVector]) -> HashMap<(i64, Monomial), usize> {
    let mut keys: BTreeSet<(i64, Monomial)> = BTreeSet::new();
    for v in vectors {
        keys.extend(v.terms.keys().cloned());
    }
    keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
}

fn to_row(index: &HashMap<(i64, Monomial), usize>, x: &TensorVector) -> crate::linalg::SparseRow {
    make_row(x.terms.iter().map(|(k, c)| (index[k], c.clone())))
}

fn rank(vectors: &[TensorVector]) -> usize {
    let refs: Vec<&TensorVector> = vectors.iter().collect();
    let index = columns(&refs);
    let mut e = Echelon::new(index.len());
    for v in vectors {
        e.insert(to_row(&index, v));
    }
    e.rank()
}

fn in_span(span: &[TensorVector], x: &TensorVector) -> bool {
    let mut refs: Vec<&TensorVector> = span.iter().collect();
    refs.push(x);
    let index = columns(&refs);
    let mut e = Echelon::new(index.len());
    for v in span {
        e.insert(to_row(&index, v));
    }
    matches!(e.insert(to_row(&index, x)), Inserted::Dependent)
}

/// The union of the spaces of `hw`, the series and `extra`.
pub fn joint_space(hw: &HighestWeight, s: &IntermediateSeries, extra: &[&str]) -> Result<Space> {
    let mut space = hw.space().clone();
    if hw.is_constant() {
        space = Space::empty();
    }
    space = space.union(&s.space()?)?;
    let extra: Vec<&str> = extra.to_vec();
    for name in &extra {
        if space.index_of(name).is_some() {
            return Err(Error::InvalidSpace(format!("parameter `{name}` is reserved here")));
        }
    }
    space.union(&Space::new(&extra)?)
}

/// Quotient of `v` for the given factor, with the classification used.
pub fn factor_quotient<'a>(
    v: &'a Verma,
    factor: Factor,
    max_p: u32,
) -> Result<(Quotient<'a>, Option<StructureReport>)> {
    if factor == Factor::Verma {
        return Ok((Quotient::full(v), None));
    }
    let report = classify(v, max_p)?;
    let q = match (factor, v.kind(), report.verdict) {
        (Factor::Lprime, AlgebraKind::W22, Verdict::UprimeOnly | Verdict::UprimeAndSubsingular) => {
            let p = report.p.expect("p present");
            jprime_quotient(v, p, report.u_prime.clone().expect("u' present"))
        }
        _ => irreducible_quotient(v, &report)?,
    };
    Ok((q, Some(report)))
}

/// Brute-force oracle for `U_{n-1} ⊆ U_n + ... + U_{n+depth}` in
/// `V'_{α,β,F} ⊗ M`, exact at truncation `(window, depth)`.
pub fn cyclicity_check(
    hw: &HighestWeight,
    s: &IntermediateSeries,
    n: i64,
    depth: u32,
    window: Window,
    factor: Factor,
) -> Result<bool> {
    let space = joint_space(hw, s, &[])?;
    let v = Verma::new(hw.embed(&space)?);
    let (q, _) = factor_quotient(&v, factor, DEFAULT_MAX_P)?;
    let t = TensorModule::new(s.embed(&space)?, q, Scalar::zero(), Some(window));
    t.contains_previous(n, depth)
}

/// Dimension at `level` of the subquotient `U_n / U_{n+1}`, at truncation.
pub fn subquotient_dimension(
    hw: &HighestWeight,
    s: &IntermediateSeries,
    n: i64,
    level: u32,
    depth: u32,
    window: Window,
    factor: Factor,
) -> Result<usize> {
    let space = joint_space(hw, s, &[])?;
    let v = Verma::new(hw.embed(&space)?);
    let (q, _) = factor_quotient(&v, factor, DEFAULT_MAX_P)?;
    let t = TensorModule::new(s.embed(&space)?, q, Scalar::zero(), Some(window));
    t.subquotient_dimension(n, level, depth)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TensorVerdict {
    Irreducible,
    Reducible,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecisionReason {
    /// No subsingular vector with leading term `L_{-p}^r v` (including the
    /// case of an irreducible Verma module).
    NoSubsingular,
    /// `α + (1 - p) β ∈ Z`.
    IntegralShift,
    /// The product of the elimination coefficients never vanishes.
    ProductNonzero,
}

/// Evidence attached to a decision.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// A polynomial in the index `n` (or a value) that never vanishes.
    Product(Scalar),
    /// An index `k` with `U_k` irreducible.
    SplitIndex(i64),
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            Witness::Product(x) => map.serialize_entry("product", &x.to_string())?,
            Witness::SplitIndex(k) => map.serialize_entry("splitIndex", k)?,
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TensorDecision {
    pub verdict: TensorVerdict,
    pub reason: Option<DecisionReason>,
    pub witness: Option<Witness>,
    /// Highest weights of the listed subquotients (or of the quotient by the
    /// irreducible submodule).
    pub subquotients: Vec<HighestWeight>,
    pub notes: Vec<String>,
}

impl TensorDecision {
    fn new(verdict: TensorVerdict, reason: Option<DecisionReason>) -> TensorDecision {
        TensorDecision { verdict, reason, witness: None, subquotients: Vec::new(), notes: Vec::new() }
    }
}

fn integer_value(x: &Scalar, what: &str) -> Result<Option<i64>> {
    let Some(q) = x.as_rational() else {
        return Err(Error::UndecidableIntegrality(what.into()));
    };
    if !q.is_integer() {
        return Ok(None);
    }
    x.to_i64().map(Some).ok_or_else(|| Error::Overflow(what.into()))
}

/// `α + (1 - p) β`.
pub fn shift(s: &IntermediateSeries, p: u32) -> Result<Scalar> {
    s.alpha.try_add(&s.beta.try_mul(&Scalar::from_int(1 - p as i64))?)
}

/// `prod_{j=0}^{r-1} (n + (r - j) p - 1 + α + (1 - p) β)` for an index given
/// as a scalar.
pub fn lambda_product_at(s: &IntermediateSeries, n: &Scalar, p: u32, r: u32) -> Result<Scalar> {
    let a = shift(s, p)?;
    let mut out = Scalar::one();
    for j in 0..r as i64 {
        let k = Scalar::from_int((r as i64 - j) * p as i64 - 1);
        out = out.try_mul(&n.try_add(&k)?.try_add(&a)?)?;
    }
    Ok(out)
}

/// The product of the coefficients `λ_j` at index `n`; requires the weight to
/// satisfy the reducibility relation for `p` and the necessary condition on
/// `h` for `r`.
pub fn lambda_product(hw: &HighestWeight, s: &IntermediateSeries, n: i64, p: u32, r: u32) -> Result<Scalar> {
    if hw.kind() != AlgebraKind::W22 || p == 0 || r == 0 {
        return Err(Error::Precondition("W(2,2) weight and positive p, r expected".into()));
    }
    if !zd_value(hw.c(), hw.x(), p).is_zero() || hw.h() != &necessary_h(p, r, hw.x()) {
        return Err(Error::Precondition(format!("no subsingular vector with leading term L(-{p})^{r}.v")));
    }
    lambda_product_at(s, &Scalar::from_int(n), p, r)
}

/// Highest weight of `U_n / U_{n+1}`: `h` shifts to `h - n - α - β` and, for
/// the Heisenberg-Virasoro algebra, `h_I` to `h_I + F`.
pub fn subquotient_weight(hw: &HighestWeight, s: &IntermediateSeries, n: i64) -> Result<HighestWeight> {
    let h = hw.h().try_sub(&Scalar::from_int(n))?.try_sub(&s.alpha)?.try_sub(&s.beta)?;
    match hw.kind() {
        AlgebraKind::W22 => HighestWeight::w22(hw.c().clone(), h, hw.x().clone()),
        AlgebraKind::HV => {
            HighestWeight::hv(hw.c().clone(), Scalar::zero(), hw.c_li().clone(), h, hw.x().try_add(&s.f)?)
        }
    }
}

/// Irreducibility of `V'_{α,β,0} ⊗ L(c, h, h_W)`.
pub fn decide_tensor(hw: &HighestWeight, s: &IntermediateSeries) -> Result<TensorDecision> {
    decide_tensor_with(hw, s, DEFAULT_MAX_P)
}

pub fn decide_tensor_with(hw: &HighestWeight, s: &IntermediateSeries, max_p: u32) -> Result<TensorDecision> {
    if hw.kind() != AlgebraKind::W22 {
        return Err(Error::Precondition("W(2,2) weight expected; use decide_tensor_hv".into()));
    }
    if !s.f.is_zero() {
        return Err(Error::Precondition("F must be 0 for W(2,2)".into()));
    }
    let v = Verma::new(hw.clone());
    let report = classify(&v, max_p)?;
    decide_from_report(hw, s, &report)
}

/// As [`decide_tensor`], from an existing classification.
pub fn decide_from_report(
    hw: &HighestWeight,
    s: &IntermediateSeries,
    report: &StructureReport,
) -> Result<TensorDecision> {
    match report.verdict {
        Verdict::VermaIrreducible => {
            let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::NoSubsingular));
            d.notes.push("the Verma module is irreducible, and V' ⊗ V is reducible".into());
            Ok(d)
        }
        Verdict::UprimeOnly => {
            let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::NoSubsingular));
            d.notes.push("u' generates the maximal submodule; U_n ≠ U_{n-1} for every n".into());
            Ok(d)
        }
        Verdict::UprimeAndSubsingular => {
            let p = report.p.expect("p present");
            let r = report.r.expect("r present");
            let a = shift(s, p)?;
            match integer_value(&a, "alpha + (1-p) beta")? {
                None => {
                    let mut d = TensorDecision::new(TensorVerdict::Irreducible, Some(DecisionReason::ProductNonzero));
                    let sp = Space::new(&["n"])?;
                    let n = Scalar::param(&sp, "n")?;
                    d.witness = Some(Witness::Product(lambda_product_at(s, &n, p, r)?));
                    Ok(d)
                }
                Some(a) => {
                    let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::IntegralShift));
                    d.witness = Some(Witness::SplitIndex(1 - p as i64 - a));
                    for j in 1..=r as i64 {
                        d.subquotients.push(subquotient_weight(hw, s, -j * p as i64 - a)?);
                    }
                    if s.excluded().is_some() && s.beta.is_one() && hw.x().is_zero() {
                        d.notes.push(format!(
                            "the subquotient L{} (j = 1) is an exception for this series",
                            d.subquotients[0]
                        ));
                    }
                    Ok(d)
                }
            }
        }
    }
}

/// Polynomials certifying `U_{n-1} ⊆ U_n` for the Heisenberg-Virasoro
/// tensor product, with `F` a formal parameter.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HvPolynomials {
    pub p: u32,
    pub case: HvCase,
    /// I-case: `u'(v_n ⊗ v) = F s(F) v_{n-1} ⊗ v`.
    #[serde(rename = "sPoly", serialize_with = "opt_text")]
    pub s: Option<Scalar>,
    /// L-case: `u'(v_{n+1} ⊗ v) = (q(F) n + r(F)) v_n ⊗ v`.
    #[serde(rename = "qPoly", serialize_with = "opt_text")]
    pub q: Option<Scalar>,
    #[serde(rename = "rPoly", serialize_with = "opt_text")]
    pub r: Option<Scalar>,
}

fn opt_text<S: Serializer>(x: &Option<Scalar>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => serializer.serialize_str(&x.to_string()),
        None => serializer.serialize_none(),
    }
}

/// Degree of a scalar in the parameter `name`, if it is polynomial in it.
pub fn degree_in(x: &Scalar, name: &str) -> Option<u16> {
    let Some(i) = x.space().index_of(name) else {
        return Some(0);
    };
    if x.denom().degree_in(i) > 0 {
        return None;
    }
    Some(x.numer().degree_in(i))
}

/// The elimination behind the general-`F` irreducibility criterion, performed
/// with `F` and the index `n` symbolic.
pub fn hv_decision_polynomials(hw: &HighestWeight, s: &IntermediateSeries, p: u32) -> Result<HvPolynomials> {
    if hw.kind() != AlgebraKind::HV {
        return Err(Error::Precondition("Heisenberg-Virasoro weight expected".into()));
    }
    let formal = IntermediateSeries::new(s.alpha.clone(), s.beta.clone());
    let space = joint_space(hw, &formal, &["n", "F"])?;
    let n = Scalar::param(&space, "n")?;
    let f = Scalar::param(&space, "F")?;
    let series = IntermediateSeries::with_f(formal.alpha.embed(&space)?, formal.beta.embed(&space)?, f.clone());
    let v = Verma::new(hw.embed(&space)?);
    let Some((p0, case, u)) = hv_singular(&v)? else {
        return Err(Error::Precondition("the Verma module is irreducible".into()));
    };
    if p0 != p {
        return Err(Error::Precondition(format!("|h_I/c_LI - 1| = {p0}, not {p}")));
    }
    let keep: Box<dyn Fn(&Monomial) -> bool> = match case {
        HvCase::ICase => Box::new(move |m: &Monomial| !m.contains_w(p)),
        HvCase::LCase => Box::new(move |m: &Monomial| !m.l.contains(&p)),
    };
    let q = Quotient::new(&v, vec![u.clone()], keep);
    let t = TensorModule::new(series, q, n.clone(), None);
    let pi = p as i64;
    match case {
        HvCase::ICase => {
            let start = t.apply_vector(&u, &t.pure(pi - 1)?)?;
            let (total, _) = t.eliminate(&start, -1)?;
            if !total.subst1("F", &Scalar::zero())?.is_zero() {
                return Err(Error::Degenerate("F does not divide the elimination coefficient".into()));
            }
            let s_poly = total.try_div(&f)?;
            if degree_in(&s_poly, "n") != Some(0) {
                return Err(Error::Degenerate("the I-case coefficient depends on n".into()));
            }
            Ok(HvPolynomials { p, case, s: Some(s_poly), q: None, r: None })
        }
        HvCase::LCase => {
            let start = t.apply_vector(&u, &t.pure(pi)?)?;
            let (total, _) = t.eliminate(&start, 0)?;
            let at = |k: i64| total.subst1("n", &Scalar::from_int(k));
            let (t0, t1, t2) = (at(0)?, at(1)?, at(2)?);
            let r_poly = t0.clone();
            let q_poly = t1.try_sub(&t0)?;
            if t2.try_sub(&t1)? != q_poly {
                return Err(Error::Degenerate("the L-case coefficient is not linear in n".into()));
            }
            Ok(HvPolynomials { p, case, s: None, q: Some(q_poly), r: Some(r_poly) })
        }
    }
}

/// Irreducibility of `V'_{α,β,F} ⊗ L(c_L, 0, c_LI, h, h_I)` for rational
/// parameters.
pub fn decide_tensor_hv(hw: &HighestWeight, s: &IntermediateSeries) -> Result<TensorDecision> {
    if hw.kind() != AlgebraKind::HV {
        return Err(Error::Precondition("Heisenberg-Virasoro weight expected".into()));
    }
    if !hw.is_constant() || !s.is_constant() {
        return Err(Error::Precondition("rational parameters expected".into()));
    }
    if hw.c_li().is_zero() {
        return Err(Error::Precondition("c_LI must be nonzero".into()));
    }
    let nsp = Space::new(&["n"])?;
    let nvar = Scalar::param(&nsp, "n")?;
    if hw.h().is_zero() && hw.x().is_zero() {
        return Ok(match integer_value(&s.alpha, "alpha")? {
            None => {
                let mut d = TensorDecision::new(TensorVerdict::Irreducible, Some(DecisionReason::ProductNonzero));
                d.witness = Some(Witness::Product(nvar.try_add(&s.alpha)?));
                d.notes.push("L_{-1}(v_n ⊗ v) = -(n + alpha) v_{n-1} ⊗ v".into());
                d
            }
            Some(a) => {
                let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::IntegralShift));
                d.witness = Some(Witness::SplitIndex(-a));
                let top = if s.beta.is_one() { -2 - a } else { -1 - a };
                let w = subquotient_weight(hw, s, top)?;
                d.notes.push(format!("U_{} is irreducible; the quotient by it is the Verma module V{w}", -a));
                d.subquotients.push(w);
                d
            }
        });
    }
    let k = hw.x().try_div(hw.c_li())?;
    let Some(k) = integer_value(&k, "h_I/c_LI")?.filter(|&k| k != 1) else {
        let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::NoSubsingular));
        d.notes.push("the Verma module is irreducible, and V' ⊗ V is reducible".into());
        return Ok(d);
    };
    let (p, case) = if k > 1 { ((k - 1) as u32, HvCase::ICase) } else { ((1 - k) as u32, HvCase::LCase) };
    if s.f.is_zero() {
        return Ok(match case {
            HvCase::ICase => {
                let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::NoSubsingular));
                for n in -1..=1 {
                    d.subquotients.push(subquotient_weight(hw, s, n)?);
                }
                d.notes.push("the singular vector lies in U(I_-); subquotients U_n/U_{n+1} are irreducible".into());
                d
            }
            HvCase::LCase => {
                let a = shift(s, p)?;
                match integer_value(&a, "alpha + (1-p) beta")? {
                    None => {
                        let mut d =
                            TensorDecision::new(TensorVerdict::Irreducible, Some(DecisionReason::ProductNonzero));
                        d.witness = Some(Witness::Product(lambda_product_at(s, &nvar, p, 1)?));
                        d
                    }
                    Some(a) => {
                        let mut d = TensorDecision::new(TensorVerdict::Reducible, Some(DecisionReason::IntegralShift));
                        let k = 1 - p as i64 - a;
                        d.witness = Some(Witness::SplitIndex(k));
                        let w = subquotient_weight(hw, s, k - 1)?;
                        d.notes.push(format!("the quotient by U_{k} has highest weight {w}"));
                        d.subquotients.push(w);
                        d
                    }
                }
            }
        });
    }
    let polys = hv_decision_polynomials(hw, s, p)?;
    let at_f = |x: &Scalar| x.subst1("F", &s.f);
    let mut d = match case {
        HvCase::ICase => {
            let value = at_f(polys.s.as_ref().expect("s"))?.try_mul(&s.f)?;
            if value.is_zero() {
                TensorDecision::new(TensorVerdict::Unknown, None)
            } else {
                let mut d = TensorDecision::new(TensorVerdict::Irreducible, Some(DecisionReason::ProductNonzero));
                d.witness = Some(Witness::Product(value));
                d
            }
        }
        HvCase::LCase => {
            let q = at_f(polys.q.as_ref().expect("q"))?;
            let r = at_f(polys.r.as_ref().expect("r"))?;
            let vanishes =
                if q.is_zero() { r.is_zero() } else { integer_value(&(-r.clone() / q.clone()), "-r/q")?.is_some() };
            if vanishes {
                TensorDecision::new(TensorVerdict::Unknown, None)
            } else {
                let mut d = TensorDecision::new(TensorVerdict::Irreducible, Some(DecisionReason::ProductNonzero));
                let qn = q.in_space(&nsp)?.try_mul(&nvar)?;
                d.witness = Some(Witness::Product(qn.try_add(&r.in_space(&nsp)?)?));
                d
            }
        }
    };
    if d.verdict == TensorVerdict::Unknown {
        d.notes.push("the certificate vanishes at some index; the criteria do not settle this case".into());
    }
    Ok(d)
}
