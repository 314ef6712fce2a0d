//! PBW monomials, vectors of highest-weight modules, and the action of the
//! Lie algebra on them.

use std::cell::RefCell;
use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{bracket, AlgebraKind, Central, Generator};
use crate::scalar::{Scalar, Space};

/// Highest weight of a Verma module.
///
/// For W(2,2) the slots are `(c, h, h_W)`; for the Heisenberg-Virasoro algebra
/// they are `(c_L, c_LI, h, h_I)` with `c_I = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeight {
    kind: AlgebraKind,
    space: Space,
    c: Scalar,
    h: Scalar,
    x: Scalar,
    cli: Scalar,
}

fn unify(values: &[&Scalar]) -> Result<Space> {
    let mut space = Space::empty();
    for v in values {
        if v.is_constant() {
            continue;
        }
        if space.is_empty() {
            space = v.space().clone();
        } else if &space != v.space() {
            return Err(Error::ParamMismatch { left: space.names().join(", "), right: v.space().names().join(", ") });
        }
    }
    if space.is_empty() {
        // all constant: keep the first declared space, if any
        if let Some(v) = values.iter().find(|v| !v.space().is_empty()) {
            space = v.space().clone();
        }
    }
    Ok(space)
}

impl HighestWeight {
    pub fn w22(c: Scalar, h: Scalar, h_w: Scalar) -> Result<HighestWeight> {
        let space = unify(&[&c, &h, &h_w])?;
        Ok(HighestWeight {
            kind: AlgebraKind::W22,
            c: c.in_space(&space)?,
            h: h.in_space(&space)?,
            x: h_w.in_space(&space)?,
            cli: Scalar::zero().in_space(&space)?,
            space,
        })
    }

    pub fn hv(c_l: Scalar, c_i: Scalar, c_li: Scalar, h: Scalar, h_i: Scalar) -> Result<HighestWeight> {
        if !c_i.is_zero() {
            return Err(Error::Precondition("the Heisenberg level c_I must be 0".into()));
        }
        let space = unify(&[&c_l, &c_li, &h, &h_i])?;
        Ok(HighestWeight {
            kind: AlgebraKind::HV,
            c: c_l.in_space(&space)?,
            h: h.in_space(&space)?,
            x: h_i.in_space(&space)?,
            cli: c_li.in_space(&space)?,
            space,
        })
    }

    /// The same weight with every slot rewritten over a larger space.
    pub fn embed(&self, space: &Space) -> Result<HighestWeight> {
        Ok(HighestWeight {
            kind: self.kind,
            space: space.clone(),
            c: self.c.embed(space)?,
            h: self.h.embed(space)?,
            x: self.x.embed(space)?,
            cli: self.cli.embed(space)?,
        })
    }

    pub fn is_constant(&self) -> bool {
        [&self.c, &self.h, &self.x, &self.cli].iter().all(|s| s.is_constant())
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Central charge: `c` for W(2,2), `c_L` for Heisenberg-Virasoro.
    pub fn c(&self) -> &Scalar {
        &self.c
    }

    pub fn h(&self) -> &Scalar {
        &self.h
    }

    /// Eigenvalue of the second zero mode: `h_W` or `h_I`.
    pub fn x(&self) -> &Scalar {
        &self.x
    }

    pub fn c_li(&self) -> &Scalar {
        &self.cli
    }

    pub fn with_h(&self, h: Scalar) -> Result<HighestWeight> {
        let mut out = self.clone();
        let space = unify(&[&self.c, &h, &self.x, &self.cli])?;
        out.h = h.in_space(&space)?;
        Ok(out)
    }

    pub fn central_value(&self, z: Central) -> Scalar {
        match z {
            Central::C | Central::CL => self.c.clone(),
            Central::CI => Scalar::zero().in_space(&self.space).expect("constant"),
            Central::CLI => self.cli.clone(),
        }
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        Scalar::from_int(n).in_space(&self.space).expect("constant")
    }

    /// Named slots, in display order.
    pub fn slots(&self) -> Vec<(&'static str, &Scalar)> {
        match self.kind {
            AlgebraKind::W22 => vec![("c", &self.c), ("h", &self.h), ("hW", &self.x)],
            AlgebraKind::HV => vec![("cL", &self.c), ("cLI", &self.cli), ("h", &self.h), ("hI", &self.x)],
        }
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.slots().iter().map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for HighestWeight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let slots = self.slots();
        let mut map = serializer.serialize_map(Some(slots.len() + 1))?;
        map.serialize_entry("kind", &self.kind)?;
        for (n, v) in slots {
            map.serialize_entry(n, v)?;
        }
        map.end()
    }
}

/// A PBW monomial `W_{-m_s}...W_{-m_1} L_{-n_t}...L_{-n_1} v`, stored by
/// mode magnitudes in weakly decreasing order. For the Heisenberg-Virasoro
/// algebra the `w` part holds the `I` factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "RawMonomial")]
pub struct Monomial {
    pub w: Vec<u32>,
    pub l: Vec<u32>,
}

#[derive(Deserialize)]
struct RawMonomial {
    #[serde(default)]
    w: Vec<u32>,
    #[serde(default)]
    l: Vec<u32>,
}

impl From<RawMonomial> for Monomial {
    fn from(r: RawMonomial) -> Monomial {
        Monomial::new(r.w, r.l)
    }
}

fn power_groups(v: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &m in v {
        match out.last_mut() {
            Some((k, n)) if *k == m => *n += 1,
            _ => out.push((m, 1)),
        }
    }
    out
}

impl Monomial {
    pub fn new(mut w: Vec<u32>, mut l: Vec<u32>) -> Monomial {
        assert!(w.iter().chain(l.iter()).all(|&m| m > 0), "modes must be positive");
        w.sort_unstable_by(|a, b| b.cmp(a));
        l.sort_unstable_by(|a, b| b.cmp(a));
        Monomial { w, l }
    }

    pub fn vacuum() -> Monomial {
        Monomial::default()
    }

    pub fn is_vacuum(&self) -> bool {
        self.w.is_empty() && self.l.is_empty()
    }

    pub fn level(&self) -> i64 {
        self.w.iter().chain(self.l.iter()).map(|&m| m as i64).sum()
    }

    pub fn w_degree(&self) -> usize {
        self.w.len()
    }

    pub fn l_degree(&self) -> usize {
        self.l.len()
    }

    pub fn lp_degree(&self, p: u32) -> usize {
        self.l.iter().filter(|&&m| m == p).count()
    }

    pub fn contains_w(&self, p: u32) -> bool {
        self.w.contains(&p)
    }

    /// Factors as generators, left to right.
    pub fn factors(&self, kind: AlgebraKind) -> Vec<Generator> {
        self.w
            .iter()
            .map(|&m| Generator::second(kind, -(m as i64)))
            .chain(self.l.iter().map(|&m| Generator::L(-(m as i64))))
            .collect()
    }

    fn split_first(&self, kind: AlgebraKind) -> (Generator, Monomial) {
        if let Some((&m, rest)) = self.w.split_first() {
            (Generator::second(kind, -(m as i64)), Monomial { w: rest.to_vec(), l: self.l.clone() })
        } else {
            let (&m, rest) = self.l.split_first().expect("nonempty monomial");
            (Generator::L(-(m as i64)), Monomial { w: Vec::new(), l: rest.to_vec() })
        }
    }

    /// `g * self` when that product is already in normal order.
    fn try_prepend(&self, g: Generator) -> Option<Monomial> {
        match g {
            Generator::W(n) | Generator::I(n) if n < 0 => {
                let m = (-n) as u32;
                if self.w.first().is_none_or(|&f| m >= f) {
                    let mut w = Vec::with_capacity(self.w.len() + 1);
                    w.push(m);
                    w.extend_from_slice(&self.w);
                    Some(Monomial { w, l: self.l.clone() })
                } else {
                    None
                }
            }
            Generator::L(n) if n < 0 => {
                let m = (-n) as u32;
                if self.w.is_empty() && self.l.first().is_none_or(|&f| m >= f) {
                    let mut l = Vec::with_capacity(self.l.len() + 1);
                    l.push(m);
                    l.extend_from_slice(&self.l);
                    Some(Monomial { w: Vec::new(), l })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Text of the word without the trailing `.v`, e.g. `W(-3)W(-1)^2L(-2)`.
    pub fn word_text(&self, kind: AlgebraKind) -> String {
        let mut out = String::new();
        let fam = kind.second_family();
        for (m, k) in power_groups(&self.w) {
            out.push_str(&format!("{fam}(-{m})"));
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        for (m, k) in power_groups(&self.l) {
            out.push_str(&format!("L(-{m})"));
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        out
    }

    pub fn word_latex(&self, kind: AlgebraKind) -> String {
        let mut out = String::new();
        let fam = kind.second_family();
        for (letter, part) in [(fam, &self.w), ('L', &self.l)] {
            for (m, k) in power_groups(part) {
                out.push_str(&format!("{letter}_{{-{m}}}"));
                if k > 1 {
                    out.push_str(&format!("^{{{k}}}"));
                }
            }
        }
        out
    }

    pub fn render(&self, kind: AlgebraKind) -> String {
        if self.is_vacuum() {
            "v".into()
        } else {
            format!("{}.v", self.word_text(kind))
        }
    }

    /// Key giving the display order: L part first, then W part, both descending.
    pub fn display_key(&self) -> (Reverse<Vec<u32>>, Reverse<Vec<u32>>) {
        (Reverse(self.l.clone()), Reverse(self.w.clone()))
    }
}

/// All partitions of `n` into parts ≤ `max`, each weakly decreasing.
pub fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// PBW basis of the weight space at `level`, in monomial order.
pub fn weight_space_basis(level: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..=level {
        let ws = partitions(i, i);
        let ls = partitions(level - i, level - i);
        for w in &ws {
            for l in &ls {
                out.push(Monomial { w: w.clone(), l: l.clone() });
            }
        }
    }
    out.sort();
    out
}

/// Sparse vector of a weight space of a highest-weight module.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleVector {
    kind: AlgebraKind,
    level: i64,
    terms: BTreeMap<Monomial, Scalar>,
}

impl ModuleVector {
    pub fn zero(kind: AlgebraKind, level: i64) -> ModuleVector {
        ModuleVector { kind, level, terms: BTreeMap::new() }
    }

    pub fn vacuum(kind: AlgebraKind) -> ModuleVector {
        ModuleVector::monomial(kind, Monomial::vacuum(), Scalar::one())
    }

    pub fn monomial(kind: AlgebraKind, m: Monomial, k: Scalar) -> ModuleVector {
        let mut v = ModuleVector::zero(kind, m.level());
        v.add_term(m, k);
        v
    }

    pub fn from_terms(
        kind: AlgebraKind,
        level: i64,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> ModuleVector {
        let mut v = ModuleVector::zero(kind, level);
        for (m, k) in terms {
            v.add_term(m, k);
        }
        v
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, k: Scalar) {
        assert_eq!(m.level(), self.level, "monomial level does not match vector level");
        if k.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &k;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, k: &Scalar) {
        if other.is_zero() || k.is_zero() {
            return;
        }
        assert_eq!(self.level, other.level, "adding vectors of different levels");
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * k);
        }
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, k: &Scalar) -> ModuleVector {
        let mut out = ModuleVector::zero(self.kind, self.level);
        out.add_scaled(self, k);
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<ModuleVector> {
        let mut out = ModuleVector::zero(self.kind, self.level);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Terms in display order.
    pub fn display_terms(&self) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_key(|(m, _)| m.display_key());
        v
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms = self.display_terms();
        if let [(m, c)] = terms.as_slice() {
            if c.is_one() {
                return if m.is_vacuum() { "v".into() } else { format!("{}v", m.word_latex(self.kind)) };
            }
        }
        let mut body = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.leading_negative();
            let a = if neg { -*c } else { (*c).clone() };
            if neg {
                body.push('-');
            } else if i > 0 {
                body.push('+');
            }
            let word = m.word_latex(self.kind);
            let coeff = if a.is_one() && !word.is_empty() {
                String::new()
            } else if a.is_polynomial() && a.numer().terms().len() > 1 {
                format!("\\left({}\\right)", a.to_latex())
            } else {
                a.to_latex()
            };
            body.push_str(&coeff);
            body.push_str(&word);
        }
        format!("\\left( {body}\\right) v")
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self.display_terms();
        if let [(m, c)] = terms.as_slice() {
            if c.is_one() {
                return f.write_str(&m.render(self.kind));
            }
        }
        let mut body = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let neg = c.leading_negative();
            let a = if neg { -*c } else { (*c).clone() };
            match (i, neg) {
                (0, true) => body.push('-'),
                (0, false) => {}
                (_, true) => body.push_str(" - "),
                (_, false) => body.push_str(" + "),
            }
            let word = m.word_text(self.kind);
            let coeff = if a.is_polynomial() && a.numer().terms().len() > 1 { format!("({a})") } else { a.to_string() };
            if word.is_empty() {
                body.push_str(&coeff);
            } else if a.is_one() {
                body.push_str(&word);
            } else {
                body.push_str(&format!("{coeff} {word}"));
            }
        }
        write!(f, "({body}).v")
    }
}

#[derive(Serialize)]
struct TermOut<'a> {
    monomial: &'a Monomial,
    coeff: &'a Scalar,
}

impl Serialize for ModuleVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(4))?;
        map.serialize_entry("kind", &self.kind)?;
        map.serialize_entry("level", &self.level)?;
        let terms: Vec<TermOut<'_>> =
            self.display_terms().into_iter().map(|(monomial, coeff)| TermOut { monomial, coeff }).collect();
        map.serialize_entry("terms", &terms)?;
        map.serialize_entry("text", &self.to_string())?;
        map.end()
    }
}

type Terms = Arc<Vec<(Monomial, Scalar)>>;

/// A Verma module with a memo table for the action on monomials.
///
/// The memo is local to the value; independent modules may live on separate
/// threads.
pub struct Verma {
    hw: HighestWeight,
    memo: RefCell<HashMap<(Generator, Monomial), Terms>>,
}

impl Verma {
    pub fn new(hw: HighestWeight) -> Verma {
        Verma { hw, memo: RefCell::new(HashMap::new()) }
    }

    pub fn hw(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn kind(&self) -> AlgebraKind {
        self.hw.kind
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }

    pub fn vacuum(&self) -> ModuleVector {
        ModuleVector::vacuum(self.kind())
    }

    pub fn monomial(&self, m: Monomial) -> ModuleVector {
        ModuleVector::monomial(self.kind(), m, self.hw.scalar(1))
    }

    /// Action of `g` on a single monomial, as (monomial, coefficient) pairs.
    pub fn act_monomial(&self, g: Generator, m: &Monomial) -> Terms {
        let kind = self.kind();
        if let Generator::Central(z) = g {
            return Arc::new(vec![(m.clone(), self.hw.central_value(z))]);
        }
        if g == Generator::L(0) {
            let k = &self.hw.h + Scalar::from_int(m.level());
            return Arc::new(if k.is_zero() { vec![] } else { vec![(m.clone(), k)] });
        }
        if kind == AlgebraKind::HV && g == Generator::I(0) {
            let k = self.hw.x.clone();
            return Arc::new(if k.is_zero() { vec![] } else { vec![(m.clone(), k)] });
        }
        let mode = g.mode().expect("non-central");
        if mode < 0 {
            if let Some(n) = m.try_prepend(g) {
                return Arc::new(vec![(n, self.hw.scalar(1))]);
            }
        }
        if mode > 0 && mode > m.level() {
            return Arc::new(vec![]);
        }
        let key = (g, m.clone());
        if let Some(t) = self.memo.borrow().get(&key) {
            return t.clone();
        }
        let result = self.compute(g, m);
        self.memo.borrow_mut().insert(key, result.clone());
        result
    }

    fn compute(&self, g: Generator, m: &Monomial) -> Terms {
        let kind = self.kind();
        if m.is_vacuum() {
            // non-negative, non-central, not L0 / I0 here
            let out = match g {
                Generator::W(0) => vec![(m.clone(), self.hw.x.clone())],
                _ => vec![],
            };
            return Arc::new(out.into_iter().filter(|(_, k)| !k.is_zero()).collect());
        }
        let (x1, rest) = m.split_first(kind);
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        let mut push = |n: &Monomial, k: Scalar| {
            if k.is_zero() {
                return;
            }
            match acc.get_mut(n) {
                Some(e) => *e += &k,
                None => {
                    acc.insert(n.clone(), k);
                }
            }
        };
        // g x1 R = x1 (g R) + [g, x1] R
        for (n, c) in self.act_monomial(g, &rest).iter() {
            for (n2, c2) in self.act_monomial(x1, n).iter() {
                push(n2, c * c2);
            }
        }
        let br = bracket(g, x1, kind).expect("validated generators");
        for (gen, c) in br.iter() {
            for (n, c2) in self.act_monomial(*gen, &rest).iter() {
                push(n, c * c2);
            }
        }
        let mut out: Vec<(Monomial, Scalar)> = acc.into_iter().filter(|(_, k)| !k.is_zero()).collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Arc::new(out)
    }

    pub fn act(&self, g: Generator, x: &ModuleVector) -> Result<ModuleVector> {
        g.check(self.kind())?;
        if x.kind != self.kind() {
            return Err(Error::Precondition("vector belongs to a different algebra".into()));
        }
        let level = x.level + g.grade();
        let mut out = ModuleVector::zero(self.kind(), level);
        if level < 0 {
            return Ok(out);
        }
        for (m, c) in &x.terms {
            for (n, k) in self.act_monomial(g, m).iter() {
                out.add_term(n.clone(), c * k);
            }
        }
        Ok(out)
    }

    /// `y_1 (y_2 (... (y_k x)))`.
    pub fn multiply(&self, word: &[Generator], x: &ModuleVector) -> Result<ModuleVector> {
        let mut out = x.clone();
        for g in word.iter().rev() {
            out = self.act(*g, &out)?;
        }
        Ok(out)
    }

    /// Applies the PBW word of `m` to `x`.
    pub fn apply_monomial(&self, m: &Monomial, x: &ModuleVector) -> Result<ModuleVector> {
        self.multiply(&m.factors(self.kind()), x)
    }
}

/// Action of `g` on `x` in the Verma module of `hw` (fresh memo).
pub fn act(hw: &HighestWeight, g: Generator, x: &ModuleVector) -> Result<ModuleVector> {
    Verma::new(hw.clone()).act(g, x)
}

pub fn multiply(hw: &HighestWeight, word: &[Generator], x: &ModuleVector) -> Result<ModuleVector> {
    Verma::new(hw.clone()).multiply(word, x)
}

pub fn w_degree(m: &Monomial) -> usize {
    m.w_degree()
}

pub fn l_degree(m: &Monomial) -> usize {
    m.l_degree()
}

pub fn lp_degree(m: &Monomial, p: u32) -> usize {
    m.lp_degree(p)
}

/// The part of `x` of minimal W-degree.
pub fn lowest_w_component(x: &ModuleVector) -> Result<ModuleVector> {
    let k = x
        .terms
        .keys()
        .map(|m| m.w_degree())
        .min()
        .ok_or_else(|| Error::Precondition("lowest component of the zero vector".into()))?;
    Ok(ModuleVector::from_terms(
        x.kind,
        x.level,
        x.terms.iter().filter(|(m, _)| m.w_degree() == k).map(|(m, c)| (m.clone(), c.clone())),
    ))
}

/// Terms of `x` with W-degree exactly `k`.
pub fn w_component(x: &ModuleVector, k: usize) -> ModuleVector {
    ModuleVector::from_terms(
        x.kind,
        x.level,
        x.terms.iter().filter(|(m, _)| m.w_degree() == k).map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn derive(x: &ModuleVector, n: u32, in_l: bool) -> ModuleVector {
    let mut out = ModuleVector::zero(x.kind, x.level - n as i64);
    for (m, c) in &x.terms {
        let part = if in_l { &m.l } else { &m.w };
        let k = part.iter().filter(|&&f| f == n).count();
        if k == 0 {
            continue;
        }
        let mut reduced = part.clone();
        let pos = reduced.iter().position(|&f| f == n).unwrap();
        reduced.remove(pos);
        let mono = if in_l { Monomial { w: m.w.clone(), l: reduced } } else { Monomial { w: reduced, l: m.l.clone() } };
        out.add_term(mono, c * Scalar::from_int(k as i64));
    }
    out
}

/// Formal derivative with respect to the factor `L_{-n}`.
pub fn partial_l(x: &ModuleVector, n: u32) -> ModuleVector {
    derive(x, n, true)
}

/// Formal derivative with respect to the factor `W_{-n}` (or `I_{-n}`).
pub fn partial_w(x: &ModuleVector, n: u32) -> ModuleVector {
    derive(x, n, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn symbolic_w22() -> (Space, HighestWeight) {
        let sp = Space::new(&["c", "h", "hW"]).unwrap();
        let p = |n| Scalar::param(&sp, n).unwrap();
        let hw = HighestWeight::w22(p("c"), p("h"), p("hW")).unwrap();
        (sp, hw)
    }

    #[test]
    fn l1_on_l_minus_1() {
        let (sp, hw) = symbolic_w22();
        let v = Verma::new(hw);
        let x = v.monomial(Monomial::new(vec![], vec![1]));
        let y = v.act(L(1), &x).unwrap();
        let h = Scalar::param(&sp, "h").unwrap();
        assert_eq!(y, ModuleVector::monomial(AlgebraKind::W22, Monomial::vacuum(), Scalar::from_int(2) * h));
        let y = v.act(W(1), &x).unwrap();
        let hw_ = Scalar::param(&sp, "hW").unwrap();
        assert_eq!(y.coeff(&Monomial::vacuum()), Scalar::from_int(2) * hw_);
    }

    #[test]
    fn w0_on_power_of_l() {
        let (sp, hw) = symbolic_w22();
        let v = Verma::new(hw);
        let hw_ = Scalar::param(&sp, "hW").unwrap();
        for (p, r) in [(1u32, 1usize), (2, 2), (3, 2), (1, 4)] {
            let x = v.monomial(Monomial::new(vec![], vec![p; r]));
            let y = v.act(W(0), &x).unwrap();
            let mut expect = x.scale(&hw_);
            let mut l = vec![p; r - 1];
            l.sort();
            expect.add_term(Monomial::new(vec![p], l), Scalar::from_int((r as i64) * p as i64));
            assert_eq!(y, expect, "p={p} r={r}");
        }
    }

    #[test]
    fn multiply_reorders() {
        let (_, hw) = symbolic_w22();
        let v = Verma::new(hw);
        let x = v.multiply(&[L(-1), L(-2)], &v.vacuum()).unwrap();
        assert_eq!(x.len(), 2);
        assert!(x.coeff(&Monomial::new(vec![], vec![2, 1])).is_one());
        assert!(x.coeff(&Monomial::new(vec![], vec![3])).is_one());
        let y = v.multiply(&[L(-2), L(-1)], &v.vacuum()).unwrap();
        assert_eq!(y, v.monomial(Monomial::new(vec![], vec![2, 1])));
        let z = v.multiply(&[W(1), W(-1)], &v.vacuum()).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn hv_i1_on_l_minus_1() {
        let sp = Space::new(&["cL", "cLI", "hI"]).unwrap();
        let p = |n| Scalar::param(&sp, n).unwrap();
        let hw = HighestWeight::hv(p("cL"), Scalar::zero(), p("cLI"), Scalar::from_int(3), p("hI")).unwrap();
        let v = Verma::new(hw);
        let y = v.act(I(1), &v.monomial(Monomial::new(vec![], vec![1]))).unwrap();
        assert_eq!(y.coeff(&Monomial::vacuum()), p("hI"));
        let y = v.act(L(1), &v.monomial(Monomial::new(vec![1], vec![]))).unwrap();
        assert_eq!(y.coeff(&Monomial::vacuum()), p("hI") - Scalar::from_int(2) * p("cLI"));
    }

    #[test]
    fn degrees_and_rendering() {
        let m = Monomial::new(vec![1, 3], vec![2]);
        assert_eq!(m.w_degree(), 2);
        assert_eq!(m.render(AlgebraKind::W22), "W(-3)W(-1)L(-2).v");
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"w":[3,1],"l":[2]}"#);
        let back: Monomial = serde_json::from_str(r#"{"w":[1,3],"l":[2]}"#).unwrap();
        assert_eq!(back, m);
        assert_eq!(Monomial::new(vec![], vec![2, 2, 1]).lp_degree(2), 2);
        assert_eq!(Monomial::vacuum().l_degree(), 0);
    }

    #[test]
    fn basis_counts() {
        let counts: Vec<usize> = (0..10).map(|n| weight_space_basis(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 10, 20, 36, 65, 110, 185, 300]);
    }

    #[test]
    fn lowest_component() {
        let k = AlgebraKind::W22;
        let x = ModuleVector::from_terms(
            k,
            3,
            [
                (Monomial::new(vec![], vec![3]), Scalar::one()),
                (Monomial::new(vec![3], vec![]), Scalar::one()),
                (Monomial::new(vec![1, 1, 1], vec![]), Scalar::one()),
            ],
        );
        let low = lowest_w_component(&x).unwrap();
        assert_eq!(low, ModuleVector::monomial(k, Monomial::new(vec![], vec![3]), Scalar::one()));
        assert!(lowest_w_component(&ModuleVector::zero(k, 2)).is_err());
    }

    #[test]
    fn partials() {
        let k = AlgebraKind::W22;
        let x = ModuleVector::monomial(k, Monomial::new(vec![2], vec![1, 1]), Scalar::one());
        let d = partial_l(&x, 1);
        assert_eq!(d, ModuleVector::monomial(k, Monomial::new(vec![2], vec![1]), Scalar::from_int(2)));
        assert!(partial_w(&x, 1).is_zero());
    }
}
