//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept strictly descending in lexicographic exponent order with no
//! zero coefficients, so structural equality is polynomial equality.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const MAX_PARAMS: usize = 3;

pub type Exps = [u16; MAX_PARAMS];

const ZERO_EXPS: Exps = [0; MAX_PARAMS];

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Exps, BigRational)>,
}

fn exps_add(a: &Exps, b: &Exps) -> Exps {
    let mut out = ZERO_EXPS;
    for i in 0..MAX_PARAMS {
        out[i] = a[i] + b[i];
    }
    out
}

fn exps_divides(d: &Exps, e: &Exps) -> bool {
    d.iter().zip(e.iter()).all(|(x, y)| x <= y)
}

fn exps_sub(e: &Exps, d: &Exps) -> Exps {
    let mut out = ZERO_EXPS;
    for i in 0..MAX_PARAMS {
        out[i] = e[i] - d[i];
    }
    out
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(ZERO_EXPS, c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_PARAMS, "variable index out of range");
        let mut e = ZERO_EXPS;
        e[i] = 1;
        Poly { terms: vec![(e, BigRational::one())] }
    }

    pub fn monomial(e: Exps, c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(e, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exps, BigRational)>) -> Self {
        let mut acc: BTreeMap<Exps, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Exps, BigRational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Exps, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ZERO_EXPS && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == ZERO_EXPS)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(e, c)] if *e == ZERO_EXPS => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Exps, BigRational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().map(|&x| x as u32).sum()).max().unwrap_or(0)
    }

    /// Highest variable index that occurs, if any.
    pub fn max_var(&self) -> Option<usize> {
        (0..MAX_PARAMS).rev().find(|&v| self.degree_in(v) > 0)
    }

    pub fn neg(&self) -> Self {
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect() }
    }

    /// Multiplication by the monomial `k * x^e`; lex order is preserved.
    pub fn mul_term(&self, e: &Exps, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Poly { terms: self.terms.iter().map(|(f, c)| (exps_add(e, f), c * k)).collect() }
    }

    fn merge(&self, other: &Poly, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn add(&self, other: &Poly) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Self {
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Poly) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(k) = self.constant_value() {
            return other.scale(&k);
        }
        if let Some(k) = other.constant_value() {
            return self.scale(&k);
        }
        let mut acc: BTreeMap<Exps, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                *acc.entry(exps_add(e, f)).or_insert_with(BigRational::zero) += c * d;
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if let Some(k) = d.constant_value() {
            return Some(self.scale(&k.recip()));
        }
        let (de, dc) = d.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((e, c)) = rem.terms.first().cloned() {
            if !exps_divides(&de, &e) {
                return None;
            }
            let qe = exps_sub(&e, &de);
            let qc = &c / &dc;
            rem = rem.sub(&d.mul_term(&qe, &qc));
            quot.push((qe, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Splits off the rational content: `self = k * pp` with `pp` having
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn integer_primitive(&self) -> (BigRational, Poly) {
        if self.is_zero() {
            return (BigRational::one(), Self::zero());
        }
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let n = c.numer() * (&lcm / c.denom());
            g = g.gcd(&n);
        }
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        let content = BigRational::new(g, lcm);
        let inv = content.recip();
        (content, self.scale(&inv))
    }

    pub fn is_normalized(&self) -> bool {
        let (k, _) = self.integer_primitive();
        k.is_one()
    }

    /// Coefficients with respect to variable `v`, indexed by power.
    fn coeffs_in(&self, v: usize) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Exps, BigRational)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut f = *e;
            let k = f[v] as usize;
            f[v] = 0;
            buckets[k].push((f, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    fn lead_coeff_in(&self, v: usize) -> Poly {
        let deg = self.degree_in(v);
        Poly::from_terms(self.terms.iter().filter(|(e, _)| e[v] == deg).map(|(e, c)| {
            let mut f = *e;
            f[v] = 0;
            (f, c.clone())
        }))
    }

    fn shift(&self, v: usize, s: u16) -> Poly {
        let mut e = ZERO_EXPS;
        e[v] = s;
        self.mul_term(&e, &BigRational::one())
    }

    /// Content with respect to `v`: gcd of the coefficients in the other variables.
    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_in(&self, v: usize) -> Poly {
        let c = self.content_in(v);
        let pp = self.div_exact(&c).expect("content divides polynomial");
        pp.integer_primitive().1
    }

    /// Pseudo-remainder of `self` by `g` in variable `v` (trailing scalar omitted).
    fn prem(&self, g: &Poly, v: usize) -> Poly {
        let dg = g.degree_in(v);
        let lcg = g.lead_coeff_in(v);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= dg {
            let lcr = r.lead_coeff_in(v);
            let s = r.degree_in(v) - dg;
            r = r.mul(&lcg).sub(&g.mul(&lcr).shift(v, s));
        }
        r
    }

    /// Evaluates with each variable replaced by an arbitrary ring element.
    pub fn eval<T, F>(&self, vals: &[T], from_rational: F) -> T
    where
        T: Clone + std::ops::Add<Output = T> + std::ops::Mul<Output = T>,
        F: Fn(&BigRational) -> T,
    {
        let mut total = from_rational(&BigRational::zero());
        let mut powers: Vec<Vec<T>> =
            vals.iter().map(|v| vec![from_rational(&BigRational::one()), v.clone()]).collect();
        for (e, c) in &self.terms {
            let mut t = from_rational(c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let k = k as usize;
                let pw = &mut powers[i];
                while pw.len() <= k {
                    let next = pw[pw.len() - 1].clone() * pw[1].clone();
                    pw.push(next);
                }
                t = t * pw[k].clone();
            }
            total = total + t;
        }
        total
    }
}

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive leading coefficient (so `gcd(0, 0) = 0` and constants give `1`).
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.integer_primitive().1;
    }
    if b.is_zero() {
        return a.integer_primitive().1;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.integer_primitive().1;
    }
    let v = match (a.max_var(), b.max_var()) {
        (Some(x), Some(y)) => x.max(y),
        _ => unreachable!(),
    };
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    if a.degree_in(v) == 0 || b.degree_in(v) == 0 {
        return c;
    }
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    loop {
        let r = f.prem(&g, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            return c;
        }
        f = g;
        g = r.primitive_in(v);
    }
    let g = g.primitive_in(v);
    c.mul(&g).integer_primitive().1
}
