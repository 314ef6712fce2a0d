//! Structure constants of W(2,2) and the twisted Heisenberg-Virasoro algebra.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraKind {
    #[serde(rename = "w22")]
    W22,
    #[serde(rename = "hv")]
    HV,
}

impl AlgebraKind {
    /// Letter used for the second (non-Virasoro) family.
    pub fn second_family(self) -> char {
        match self {
            AlgebraKind::W22 => 'W',
            AlgebraKind::HV => 'I',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::W22 => "w22",
            AlgebraKind::HV => "hv",
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraKind::W22 => "W(2,2)",
            AlgebraKind::HV => "Heisenberg-Virasoro",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Central {
    C,
    CL,
    CI,
    CLI,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    L(i64),
    W(i64),
    I(i64),
    Central(Central),
}

impl Generator {
    pub fn is_valid(self, kind: AlgebraKind) -> bool {
        use AlgebraKind::*;
        matches!(
            (self, kind),
            (Generator::L(_), _)
                | (Generator::W(_), W22)
                | (Generator::I(_), HV)
                | (Generator::Central(Central::C), W22)
                | (Generator::Central(Central::CL | Central::CI | Central::CLI), HV)
        )
    }

    pub fn check(self, kind: AlgebraKind) -> Result<()> {
        if self.is_valid(kind) {
            Ok(())
        } else {
            Err(Error::InvalidGenerator { generator: self.to_string(), kind: kind.to_string() })
        }
    }

    /// The second family (W or I) at mode `n`.
    pub fn second(kind: AlgebraKind, n: i64) -> Generator {
        match kind {
            AlgebraKind::W22 => Generator::W(n),
            AlgebraKind::HV => Generator::I(n),
        }
    }

    pub fn mode(self) -> Option<i64> {
        match self {
            Generator::L(n) | Generator::W(n) | Generator::I(n) => Some(n),
            Generator::Central(_) => None,
        }
    }

    pub fn is_central(self) -> bool {
        matches!(self, Generator::Central(_))
    }

    pub fn grade(self) -> i64 {
        self.mode().map(|n| -n).unwrap_or(0)
    }

    /// Parses text such as `L(-3)`, `W(2)`, `I(0)` or `C_LI`.
    pub fn parse(text: &str) -> Result<Generator> {
        let t = text.trim();
        match t {
            "C" => return Ok(Generator::Central(Central::C)),
            "C_L" => return Ok(Generator::Central(Central::CL)),
            "C_I" => return Ok(Generator::Central(Central::CI)),
            "C_LI" => return Ok(Generator::Central(Central::CLI)),
            _ => {}
        }
        let bad = || Error::Parse(format!("bad generator `{text}`"));
        if t.is_empty() || !t.is_ascii() {
            return Err(bad());
        }
        let (fam, rest) = t.split_at(1);
        let inner = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let n: i64 = inner.trim().parse().map_err(|_| bad())?;
        match fam {
            "L" => Ok(Generator::L(n)),
            "W" => Ok(Generator::W(n)),
            "I" => Ok(Generator::I(n)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(n) => write!(f, "L({n})"),
            Generator::W(n) => write!(f, "W({n})"),
            Generator::I(n) => write!(f, "I({n})"),
            Generator::Central(Central::C) => f.write_str("C"),
            Generator::Central(Central::CL) => f.write_str("C_L"),
            Generator::Central(Central::CI) => f.write_str("C_I"),
            Generator::Central(Central::CLI) => f.write_str("C_LI"),
        }
    }
}

/// Sparse linear combination of generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LieCombo {
    terms: BTreeMap<Generator, Scalar>,
}

impl LieCombo {
    pub fn new() -> LieCombo {
        LieCombo::default()
    }

    pub fn add_term(&mut self, g: Generator, k: Scalar) {
        if k.is_zero() {
            return;
        }
        let e = self.terms.entry(g).or_default();
        *e = &*e + &k;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: Generator) -> Scalar {
        self.terms.get(&g).cloned().unwrap_or_default()
    }

    pub fn scaled(&self, k: &Scalar) -> LieCombo {
        let mut out = LieCombo::new();
        for (g, c) in &self.terms {
            out.add_term(*g, c * k);
        }
        out
    }

    pub fn add(&self, other: &LieCombo) -> LieCombo {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }
}

impl fmt::Display for LieCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.leading_negative();
            let a = if neg { -c } else { c.clone() };
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if a.is_one() {
                write!(f, "{g}")?;
            } else if a.numer().terms().len() > 1 {
                write!(f, "({a})*{g}")?;
            } else {
                write!(f, "{a}*{g}")?;
            }
        }
        Ok(())
    }
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

/// The Lie bracket `[a, b]` expanded in the basis.
pub fn bracket(a: Generator, b: Generator, kind: AlgebraKind) -> Result<LieCombo> {
    a.check(kind)?;
    b.check(kind)?;
    let mut out = LieCombo::new();
    if a.is_central() || b.is_central() {
        return Ok(out);
    }
    let n = a.mode().unwrap();
    let m = b.mode().unwrap();
    let diag = n + m == 0;
    match (kind, a, b) {
        (AlgebraKind::W22, Generator::L(_), Generator::L(_)) => {
            out.add_term(Generator::L(n + m), int(n - m));
            if diag {
                out.add_term(Generator::Central(Central::C), Scalar::from_ratio(n * n * n - n, 12));
            }
        }
        (AlgebraKind::W22, Generator::L(_), Generator::W(_)) | (AlgebraKind::W22, Generator::W(_), Generator::L(_)) => {
            out.add_term(Generator::W(n + m), int(n - m));
            if diag {
                out.add_term(Generator::Central(Central::C), Scalar::from_ratio(n * n * n - n, 12));
            }
        }
        (AlgebraKind::W22, Generator::W(_), Generator::W(_)) => {}
        (AlgebraKind::HV, Generator::L(_), Generator::L(_)) => {
            out.add_term(Generator::L(n + m), int(n - m));
            if diag {
                out.add_term(Generator::Central(Central::CL), Scalar::from_ratio(n * n * n - n, 12));
            }
        }
        (AlgebraKind::HV, Generator::L(_), Generator::I(_)) => {
            out.add_term(Generator::I(n + m), int(-m));
            if diag {
                out.add_term(Generator::Central(Central::CLI), int(-(n * n + n)));
            }
        }
        (AlgebraKind::HV, Generator::I(_), Generator::L(_)) => {
            out.add_term(Generator::I(n + m), int(n));
            if diag {
                out.add_term(Generator::Central(Central::CLI), int(n * n - n));
            }
        }
        (AlgebraKind::HV, Generator::I(_), Generator::I(_)) => {
            if diag {
                out.add_term(Generator::Central(Central::CI), int(n));
            }
        }
        _ => unreachable!("generators were validated"),
    }
    Ok(out)
}

/// Graded degree: `-mode`, or zero for central elements.
pub fn grade(g: Generator) -> i64 {
    g.grade()
}

/// All non-central generators of `kind` with |mode| ≤ bound, plus the central ones.
pub fn generators_up_to(kind: AlgebraKind, bound: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for n in -bound..=bound {
        out.push(Generator::L(n));
        out.push(Generator::second(kind, n));
    }
    match kind {
        AlgebraKind::W22 => out.push(Generator::Central(Central::C)),
        AlgebraKind::HV => {
            out.push(Generator::Central(Central::CL));
            out.push(Generator::Central(Central::CI));
            out.push(Generator::Central(Central::CLI));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use AlgebraKind::*;
    use Generator::*;

    #[test]
    fn w22_examples() {
        let b = bracket(L(2), L(-2), W22).unwrap();
        assert_eq!(b.coeff(L(0)), int(4));
        assert_eq!(b.coeff(Central(super::Central::C)), Scalar::from_ratio(1, 2));
        assert_eq!(b.len(), 2);
        assert!(bracket(W(3), W(-3), W22).unwrap().is_zero());
        let b = bracket(L(1), W(-1), W22).unwrap();
        assert_eq!(b.coeff(W(0)), int(2));
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn hv_examples() {
        let b = bracket(L(1), I(-1), HV).unwrap();
        assert_eq!(b.coeff(I(0)), int(1));
        assert_eq!(b.coeff(Central(super::Central::CLI)), int(-2));
        let b = bracket(I(2), I(-2), HV).unwrap();
        assert_eq!(b.coeff(Central(super::Central::CI)), int(2));
        assert_eq!(b.len(), 1);
    }

    #[test]
    fn kind_mismatch() {
        assert!(bracket(W(1), L(0), HV).is_err());
        assert!(bracket(I(1), L(0), W22).is_err());
    }

    #[test]
    fn grades_and_text() {
        assert_eq!(grade(L(-3)), 3);
        assert_eq!(grade(Central(super::Central::C)), 0);
        assert_eq!(grade(I(5)), -5);
        assert_eq!(L(-3).to_string(), "L(-3)");
        assert_eq!(Central(super::Central::CLI).to_string(), "C_LI");
        assert_eq!(Generator::parse("W(2)").unwrap(), W(2));
        assert_eq!(Generator::parse("C_LI").unwrap(), Central(super::Central::CLI));
    }
}
