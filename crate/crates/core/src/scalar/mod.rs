//! Exact scalars: rational functions in at most three named parameters.

mod format;
mod parse;
pub mod poly;
mod serial;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
pub use poly::{Exps, Poly, MAX_PARAMS};

pub type Rational = BigRational;

/// An ordered list of parameter names shared by all scalars of one computation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Space(Arc<[String]>);

impl Space {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Space> {
        if names.len() > MAX_PARAMS {
            return Err(Error::InvalidSpace(format!(
                "at most {MAX_PARAMS} parameters are supported, got {}",
                names.len()
            )));
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            let valid = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidSpace(format!("`{n}` is not an identifier")));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::InvalidSpace(format!("duplicate parameter `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Space(out.into()))
    }

    pub fn empty() -> Space {
        Space::default()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// Names of `self` followed by the names of `other` not already present.
    pub fn union(&self, other: &Space) -> Result<Space> {
        let mut names: Vec<String> = self.0.to_vec();
        for n in other.names() {
            if !names.contains(n) {
                names.push(n.clone());
            }
        }
        Space::new(&names)
    }

    fn join(&self, other: &Space) -> Result<Space> {
        if self == other || other.is_empty() {
            Ok(self.clone())
        } else if self.is_empty() {
            Ok(other.clone())
        } else {
            Err(Error::ParamMismatch { left: self.0.join(", "), right: other.0.join(", ") })
        }
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space{:?}", &*self.0)
    }
}

/// Canonical fraction `numer / denom` over a parameter space.
#[derive(Clone)]
pub struct Scalar {
    space: Space,
    numer: Poly,
    denom: Poly,
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.numer == other.numer && self.denom == other.denom && (self.space == other.space || self.is_constant())
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.numer.hash(state);
        self.denom.hash(state);
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { space: Space::empty(), numer: Poly::zero(), denom: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Scalar {
        Scalar::from_rational(BigRational::from_integer(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_rational(q: BigRational) -> Scalar {
        Scalar { space: Space::empty(), numer: Poly::constant(q), denom: Poly::one() }
    }

    /// The parameter `name` of `space` as a scalar.
    pub fn param(space: &Space, name: &str) -> Result<Scalar> {
        let i = space.index_of(name).ok_or_else(|| Error::UnknownParam(name.to_string()))?;
        Ok(Scalar { space: space.clone(), numer: Poly::var(i), denom: Poly::one() })
    }

    /// Builds a scalar from an arbitrary fraction, bringing it to canonical form.
    pub fn from_polys(space: &Space, numer: Poly, denom: Poly) -> Result<Scalar> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        for p in [&numer, &denom] {
            if let Some(v) = p.max_var() {
                if v >= space.len() {
                    return Err(Error::InvalidSpace(format!(
                        "polynomial uses variable {v} outside a space of {} parameters",
                        space.len()
                    )));
                }
            }
        }
        Ok(Scalar::canonical(space.clone(), numer, denom))
    }

    fn canonical(space: Space, numer: Poly, denom: Poly) -> Scalar {
        if numer.is_zero() {
            return Scalar { space, numer, denom: Poly::one() };
        }
        let (numer, denom) = if denom.is_constant() {
            (numer, denom)
        } else {
            let g = poly::gcd(&numer, &denom);
            if g.is_one() {
                (numer, denom)
            } else {
                (numer.div_exact(&g).expect("gcd divides"), denom.div_exact(&g).expect("gcd divides"))
            }
        };
        Scalar::normalize_denom(space, numer, denom)
    }

    fn normalize_denom(space: Space, numer: Poly, denom: Poly) -> Scalar {
        let (k, denom) = denom.integer_primitive();
        let numer = if k.is_one() { numer } else { numer.scale(&k.recip()) };
        Scalar { space, numer, denom }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.numer.is_constant() && self.denom.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_one()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.denom.is_one() {
            self.numer.constant_value()
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// Whether the leading numerator coefficient is negative (used for sign display).
    pub fn leading_negative(&self) -> bool {
        self.numer.leading_coeff().is_negative()
    }

    /// Names of parameters actually occurring in this scalar.
    pub fn free_params(&self) -> Vec<String> {
        (0..self.space.len())
            .filter(|&i| self.numer.degree_in(i) > 0 || self.denom.degree_in(i) > 0)
            .map(|i| self.space.names()[i].clone())
            .collect()
    }

    /// Reinterprets `self` in `space`; only constants may change space.
    pub fn in_space(&self, space: &Space) -> Result<Scalar> {
        if &self.space == space || self.is_constant() {
            let mut s = self.clone();
            s.space = space.clone();
            Ok(s)
        } else {
            Err(Error::ParamMismatch { left: self.space.names().join(", "), right: space.names().join(", ") })
        }
    }

    /// Rewrites `self` over a space that contains all of its parameters.
    pub fn embed(&self, target: &Space) -> Result<Scalar> {
        if &self.space == target || self.is_constant() {
            return self.in_space(target);
        }
        let map: Vec<usize> = self
            .space
            .names()
            .iter()
            .map(|n| target.index_of(n).ok_or_else(|| Error::UnknownParam(n.clone())))
            .collect::<Result<_>>()?;
        let remap = |p: &Poly| {
            Poly::from_terms(p.terms().iter().map(|(e, c)| {
                let mut f = [0u16; poly::MAX_PARAMS];
                for (i, &k) in e.iter().enumerate().take(map.len()) {
                    f[map[i]] = k;
                }
                (f, c.clone())
            }))
        };
        Scalar::from_polys(target, remap(&self.numer), remap(&self.denom))
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        let space = self.space.join(&other.space)?;
        if self.is_zero() {
            return Ok(Scalar { space, ..other.clone() });
        }
        if other.is_zero() {
            return Ok(Scalar { space, ..self.clone() });
        }
        if self.denom.is_one() && other.denom.is_one() {
            let numer = self.numer.add(&other.numer);
            return Ok(Scalar { space, numer, denom: Poly::one() });
        }
        if self.denom == other.denom {
            return Ok(Scalar::canonical(space, self.numer.add(&other.numer), self.denom.clone()));
        }
        if self.denom.is_one() {
            let numer = self.numer.mul(&other.denom).add(&other.numer);
            return Ok(Scalar { space, numer, denom: other.denom.clone() });
        }
        if other.denom.is_one() {
            let numer = other.numer.mul(&self.denom).add(&self.numer);
            return Ok(Scalar { space, numer, denom: self.denom.clone() });
        }
        let g = poly::gcd(&self.denom, &other.denom);
        if g.is_one() {
            let numer = self.numer.mul(&other.denom).add(&other.numer.mul(&self.denom));
            let denom = self.denom.mul(&other.denom);
            return Ok(Scalar::normalize_denom(space, numer, denom));
        }
        let a = self.denom.div_exact(&g).expect("gcd divides");
        let b = other.denom.div_exact(&g).expect("gcd divides");
        let numer = self.numer.mul(&b).add(&other.numer.mul(&a));
        let denom = a.mul(&other.denom);
        Ok(Scalar::canonical(space, numer, denom))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        let space = self.space.join(&other.space)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Scalar { space, numer: Poly::zero(), denom: Poly::one() });
        }
        if self.denom.is_one() && other.denom.is_one() {
            return Ok(Scalar { space, numer: self.numer.mul(&other.numer), denom: Poly::one() });
        }
        let g1 = poly::gcd(&self.numer, &other.denom);
        let g2 = poly::gcd(&other.numer, &self.denom);
        let cut = |p: &Poly, g: &Poly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let numer = cut(&self.numer, &g1).mul(&cut(&other.numer, &g2));
        let denom = cut(&self.denom, &g2).mul(&cut(&other.denom, &g1));
        Ok(Scalar::normalize_denom(space, numer, denom))
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::normalize_denom(self.space.clone(), self.denom.clone(), self.numer.clone()))
    }

    fn neg_ref(&self) -> Scalar {
        Scalar { space: self.space.clone(), numer: self.numer.neg(), denom: self.denom.clone() }
    }

    pub fn pow(&self, n: i32) -> Result<Scalar> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let k = n.unsigned_abs();
        Ok(Scalar { space: base.space.clone(), numer: base.numer.pow(k), denom: base.denom.pow(k) })
    }

    /// Simultaneous substitution of parameters by scalars.
    pub fn substitute(&self, bindings: &[(&str, Scalar)]) -> Result<Scalar> {
        let mut vals: Vec<Scalar> = Vec::with_capacity(self.space.len());
        for name in self.space.names() {
            vals.push(Scalar::param(&self.space, name)?);
        }
        let bound: Vec<&str> = bindings.iter().map(|(n, _)| *n).collect();
        for (name, value) in bindings {
            let i = self.space.index_of(name).ok_or_else(|| Error::UnknownParam(name.to_string()))?;
            let value = value.in_space(&self.space)?;
            if value.free_params().iter().any(|p| bound.contains(&p.as_str())) {
                return Err(Error::CyclicSubstitution(name.to_string()));
            }
            vals[i] = value;
        }
        let space = self.space.clone();
        let lift = |q: &BigRational| Scalar::from_rational(q.clone()).in_space(&space).expect("constant");
        let n = self.numer.eval(&vals, lift);
        let d = self.denom.eval(&vals, lift);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        n.try_div(&d)
    }

    /// Substitution by parameter name with a single binding.
    pub fn subst1(&self, name: &str, value: &Scalar) -> Result<Scalar> {
        self.substitute(&[(name, value.clone())])
    }

    pub fn parse(space: &Space, text: &str) -> Result<Scalar> {
        parse::parse(space, text)
    }

    pub fn to_latex(&self) -> String {
        format::scalar_latex(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::scalar_text(self))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Scalar {
        Scalar::from_rational(q)
    }
}

macro_rules! binop {
    ($Trait:ident, $method:ident, $try:ident) => {
        impl $Trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $Trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $Trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}
