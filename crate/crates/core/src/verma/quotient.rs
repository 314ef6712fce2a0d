//! Quotients of a Verma module by submodules generated by vectors that are
//! singular (or singular modulo earlier generators).
//!
//! At each level the submodule is spanned by `y * g` for PBW words `y`. Normal
//! forms are computed by reducing with the span, pivoting only on monomials
//! outside a prescribed quotient basis.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::linalg::{make_row, Echelon, Inserted, SparseRow};
use crate::pbw::{weight_space_basis, ModuleVector, Monomial, Verma};

struct LevelData {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
}

type Keep<'a> = Box<dyn Fn(&Monomial) -> bool + 'a>;

pub struct Quotient<'a> {
    verma: &'a Verma,
    gens: Vec<ModuleVector>,
    keep: Keep<'a>,
    levels: RefCell<HashMap<i64, Rc<LevelData>>>,
}

impl<'a> Quotient<'a> {
    /// The Verma module itself (nothing is quotiented out).
    pub fn full(verma: &'a Verma) -> Quotient<'a> {
        Quotient::new(verma, Vec::new(), Box::new(|_| true))
    }

    /// Quotient by the submodule generated by `gens`, with quotient basis the
    /// monomials satisfying `keep`.
    pub fn new(verma: &'a Verma, gens: Vec<ModuleVector>, keep: Keep<'a>) -> Quotient<'a> {
        Quotient { verma, gens, keep, levels: RefCell::new(HashMap::new()) }
    }

    pub fn verma(&self) -> &'a Verma {
        self.verma
    }

    pub fn generators(&self) -> &[ModuleVector] {
        &self.gens
    }

    pub fn keeps(&self, m: &Monomial) -> bool {
        (self.keep)(m)
    }

    pub fn basis(&self, level: u32) -> Vec<Monomial> {
        weight_space_basis(level).into_iter().filter(|m| (self.keep)(m)).collect()
    }

    /// Spanning vectors of the submodule at `level`.
    pub fn submodule_span(&self, level: i64) -> Result<Vec<ModuleVector>> {
        let mut out = Vec::new();
        for g in &self.gens {
            let d = level - g.level();
            if d < 0 {
                continue;
            }
            for y in weight_space_basis(d as u32) {
                let x = self.verma.apply_monomial(&y, g)?;
                if !x.is_zero() {
                    out.push(x);
                }
            }
        }
        Ok(out)
    }

    fn level_data(&self, level: i64) -> Result<Rc<LevelData>> {
        if let Some(d) = self.levels.borrow().get(&level) {
            return Ok(d.clone());
        }
        let monos = weight_space_basis(level as u32);
        let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let allowed: Vec<bool> = monos.iter().map(|m| !(self.keep)(m)).collect();
        let mut echelon = Echelon::with_allowed(allowed.clone());
        for x in self.submodule_span(level)? {
            let row = to_row(&index, &x);
            if echelon.insert(row) == Inserted::Leftover {
                return Err(Error::Degenerate(format!(
                    "the quotient basis at level {level} is not independent modulo the submodule"
                )));
            }
        }
        let missing = allowed.iter().enumerate().filter(|(i, &a)| a && !echelon.is_pivot(*i)).count();
        if missing > 0 {
            return Err(Error::Degenerate(format!(
                "{missing} monomial(s) outside the quotient basis at level {level} are not reducible"
            )));
        }
        let data = Rc::new(LevelData { monos, index, echelon });
        self.levels.borrow_mut().insert(level, data.clone());
        Ok(data)
    }

    /// Coordinates of the normal form on the quotient basis monomials.
    pub fn normal_form(&self, x: &ModuleVector) -> Result<ModuleVector> {
        if x.level() < 0 || x.is_zero() {
            return Ok(x.clone());
        }
        if self.gens.is_empty() {
            return Ok(x.clone());
        }
        let data = self.level_data(x.level())?;
        let row = data.echelon.reduce(&to_row(&data.index, x));
        Ok(ModuleVector::from_terms(x.kind(), x.level(), row.into_iter().map(|(i, c)| (data.monos[i].clone(), c))))
    }

    pub fn contains(&self, x: &ModuleVector) -> Result<bool> {
        Ok(self.normal_form(x)?.is_zero())
    }

    /// Dimension of the submodule at `level`.
    pub fn submodule_dim(&self, level: i64) -> Result<usize> {
        if self.gens.is_empty() {
            return Ok(0);
        }
        Ok(self.level_data(level)?.echelon.rank())
    }
}

pub(crate) fn to_row(index: &HashMap<Monomial, usize>, x: &ModuleVector) -> SparseRow {
    make_row(x.terms().iter().map(|(m, c)| (index[m], c.clone())))
}

/// Rank of a family of vectors of a common level, and the indices of a
/// maximal independent subfamily.
pub fn independent_subset(vectors: &[ModuleVector]) -> (usize, Vec<usize>) {
    let Some(first) = vectors.first() else {
        return (0, Vec::new());
    };
    let monos = weight_space_basis(first.level().max(0) as u32);
    let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut e = Echelon::new(monos.len());
    let mut keep = Vec::new();
    for (i, x) in vectors.iter().enumerate() {
        if let Inserted::Pivot(_) = e.insert(to_row(&index, x)) {
            keep.push(i);
        }
    }
    (e.rank(), keep)
}
