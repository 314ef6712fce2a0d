//! Independent reference implementation used to cross-check the library.
//!
//! Words in the algebra are rewritten to normal order by adjacent swaps, with
//! brackets typed in directly here rather than taken from the library. Linear
//! algebra is plain dense Gaussian elimination.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use verma_core::{AlgebraKind, HighestWeight, ModuleVector, Monomial, Scalar};

pub mod tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L(i64),
    X(i64),
}

impl Letter {
    fn mode(self) -> i64 {
        match self {
            Letter::L(n) | Letter::X(n) => n,
        }
    }

    fn key(self) -> (u8, i64) {
        match self {
            Letter::X(n) if n < 0 => (0, n),
            Letter::L(n) if n < 0 => (1, n),
            l if l.mode() == 0 => (2, 0),
            _ => (3, 0),
        }
    }
}

pub type Key = (Vec<u32>, Vec<u32>);
pub type Vector = BTreeMap<Key, Scalar>;

pub struct Oracle {
    kind: AlgebraKind,
    c: Scalar,
    h: Scalar,
    x: Scalar,
    cli: Scalar,
    memo: HashMap<Vec<Letter>, Vector>,
}

fn add_into(out: &mut Vector, k: Key, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = out.entry(k.clone()).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        out.remove(&k);
    }
}

impl Oracle {
    pub fn new(hw: &HighestWeight) -> Oracle {
        Oracle {
            kind: hw.kind(),
            c: hw.c().clone(),
            h: hw.h().clone(),
            x: hw.x().clone(),
            cli: hw.c_li().clone(),
            memo: HashMap::new(),
        }
    }

    fn delta(n: i64, m: i64) -> bool {
        n + m == 0
    }

    /// `[a, b]` as a letter plus a central scalar.
    fn bracket(&self, a: Letter, b: Letter) -> (Option<(Letter, Scalar)>, Scalar) {
        let s = |k: i64| Scalar::from_int(k);
        match (self.kind, a, b) {
            (_, Letter::L(n), Letter::L(m)) => {
                let z =
                    if Self::delta(n, m) { Scalar::from_ratio(n * n * n - n, 12) * &self.c } else { Scalar::zero() };
                (Some((Letter::L(n + m), s(n - m))), z)
            }
            (AlgebraKind::W22, Letter::L(n), Letter::X(m)) | (AlgebraKind::W22, Letter::X(n), Letter::L(m)) => {
                let z =
                    if Self::delta(n, m) { Scalar::from_ratio(n * n * n - n, 12) * &self.c } else { Scalar::zero() };
                (Some((Letter::X(n + m), s(n - m))), z)
            }
            (AlgebraKind::HV, Letter::L(n), Letter::X(m)) => {
                let z = if Self::delta(n, m) { -(s(n * n + n) * &self.cli) } else { Scalar::zero() };
                (Some((Letter::X(n + m), s(-m))), z)
            }
            (AlgebraKind::HV, Letter::X(n), Letter::L(m)) => {
                let z = if Self::delta(n, m) { s(n * n - n) * &self.cli } else { Scalar::zero() };
                (Some((Letter::X(n + m), s(n))), z)
            }
            (_, Letter::X(_), Letter::X(_)) => (None, Scalar::zero()),
        }
    }

    /// `word . v` in normal order.
    pub fn word(&mut self, word: &[Letter]) -> Vector {
        if let Some(v) = self.memo.get(word) {
            return v.clone();
        }
        let out = self.compute(word);
        self.memo.insert(word.to_vec(), out.clone());
        out
    }

    fn compute(&mut self, word: &[Letter]) -> Vector {
        let mut out = Vector::new();
        let Some(&last) = word.last() else {
            out.insert((vec![], vec![]), Scalar::one());
            return out;
        };
        if last.mode() > 0 {
            return out;
        }
        if last.mode() == 0 {
            let k = match last {
                Letter::L(_) => self.h.clone(),
                Letter::X(_) => self.x.clone(),
            };
            for (m, c) in self.word(&word[..word.len() - 1]) {
                add_into(&mut out, m, c * &k);
            }
            return out;
        }
        let Some(i) = (0..word.len() - 1).find(|&i| word[i].key() > word[i + 1].key()) else {
            let mut w = Vec::new();
            let mut l = Vec::new();
            for g in word {
                match g {
                    Letter::X(n) => w.push((-n) as u32),
                    Letter::L(n) => l.push((-n) as u32),
                }
            }
            out.insert((w, l), Scalar::one());
            return out;
        };
        let mut swapped = word.to_vec();
        swapped.swap(i, i + 1);
        for (m, c) in self.word(&swapped) {
            add_into(&mut out, m, c);
        }
        let (term, z) = self.bracket(word[i], word[i + 1]);
        if let Some((g, k)) = term {
            if !k.is_zero() {
                let mut w2 = word[..i].to_vec();
                w2.push(g);
                w2.extend_from_slice(&word[i + 2..]);
                for (m, c) in self.word(&w2) {
                    add_into(&mut out, m, c * &k);
                }
            }
        }
        if !z.is_zero() {
            let mut w2 = word[..i].to_vec();
            w2.extend_from_slice(&word[i + 2..]);
            for (m, c) in self.word(&w2) {
                add_into(&mut out, m, c * &z);
            }
        }
        out
    }

    /// `prefix` applied to a vector given in normal order.
    pub fn apply(&mut self, prefix: &[Letter], x: &Vector) -> Vector {
        let mut out = Vector::new();
        for ((w, l), c) in x {
            let mut word = prefix.to_vec();
            word.extend(w.iter().map(|&n| Letter::X(-(n as i64))));
            word.extend(l.iter().map(|&n| Letter::L(-(n as i64))));
            for (m, k) in self.word(&word) {
                add_into(&mut out, m, k * c);
            }
        }
        out
    }

    /// Spanning set of the submodule generated by `gens` at `level`.
    pub fn span(&mut self, gens: &[Vector], level: u32) -> Vec<Vector> {
        let mut out = Vec::new();
        for g in gens {
            let gl = vector_level(g);
            if gl > level {
                continue;
            }
            for word in pbw_words(level - gl) {
                let y = self.apply(&word, g);
                if !y.is_empty() {
                    out.push(y);
                }
            }
        }
        out
    }

    /// Whether `x` lies in the submodule generated by `gens`.
    pub fn in_submodule(&mut self, gens: &[Vector], x: &Vector) -> bool {
        if x.is_empty() {
            return true;
        }
        let span = self.span(gens, vector_level(x));
        let r = rank(&span);
        let mut with = span;
        with.push(x.clone());
        rank(&with) == r
    }
}

pub fn vector_level(x: &Vector) -> u32 {
    x.keys().next().map(|(w, l)| w.iter().sum::<u32>() + l.iter().sum::<u32>()).unwrap_or(0)
}

pub fn from_module(x: &ModuleVector) -> Vector {
    x.terms().iter().map(|(m, c)| ((m.w.clone(), m.l.clone()), c.clone())).collect()
}

pub fn to_module(kind: AlgebraKind, level: i64, x: &Vector) -> ModuleVector {
    ModuleVector::from_terms(kind, level, x.iter().map(|((w, l), c)| (Monomial::new(w.clone(), l.clone()), c.clone())))
}

pub fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
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

/// Normally ordered words of total mode `-level`.
pub fn pbw_words(level: u32) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for a in 0..=level {
        for w in partitions(a, a) {
            for l in partitions(level - a, level - a) {
                let mut word: Vec<Letter> = w.iter().map(|&n| Letter::X(-(n as i64))).collect();
                word.extend(l.iter().map(|&n| Letter::L(-(n as i64))));
                out.push(word);
            }
        }
    }
    out
}

/// Rank of a family of sparse vectors.
pub fn rank(rows: &[Vector]) -> usize {
    let mut rows: Vec<Vector> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut r = 0;
    while let Some(pivot_row) = rows.pop() {
        let (pk, pc) = pivot_row.iter().next().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        r += 1;
        for row in rows.iter_mut() {
            if let Some(c) = row.get(&pk).cloned() {
                let f = c / &pc;
                for (k, v) in &pivot_row {
                    add_into(row, k.clone(), -(v.clone() * &f));
                }
            }
        }
        rows.retain(|row| !row.is_empty());
    }
    r
}

/// Whether every positive generator of modes 1 and 2 sends `x` into the
/// submodule generated by `gens` (the plain singularity test when `gens` is
/// empty).
pub fn is_singular_mod(o: &mut Oracle, gens: &[Vector], x: &Vector) -> bool {
    [Letter::L(1), Letter::L(2), Letter::X(1), Letter::X(2)].iter().all(|&g| {
        let y = o.apply(&[g], x);
        if gens.is_empty() {
            y.is_empty()
        } else {
            o.in_submodule(gens, &y)
        }
    })
}
