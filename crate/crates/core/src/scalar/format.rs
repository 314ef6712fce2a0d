use num_rational::BigRational;
use num_traits::{One, Signed};

use super::poly::{Exps, Poly};
use super::Scalar;

/// TeX form of a parameter name: `hW` becomes `h_{W}`, `alpha` becomes `\alpha`.
pub fn latex_name(name: &str) -> String {
    const GREEK: [&str; 6] = ["alpha", "beta", "gamma", "lambda", "mu", "nu"];
    if GREEK.contains(&name) {
        return format!("\\{name}");
    }
    let mut chars = name.chars();
    match chars.next() {
        Some(first) => {
            let rest: String = chars.collect();
            if rest.is_empty() {
                first.to_string()
            } else {
                format!("{first}_{{{rest}}}")
            }
        }
        None => String::new(),
    }
}

fn mono_text(e: &Exps, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate().take(names.len()) {
        match k {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], k)),
        }
    }
    parts.join("*")
}

fn mono_latex(e: &Exps, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate().take(names.len()) {
        match k {
            0 => {}
            1 => parts.push(latex_name(&names[i])),
            _ => parts.push(format!("{}^{{{}}}", latex_name(&names[i]), k)),
        }
    }
    parts.join(" ")
}

fn rational_text(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn rational_latex(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

pub fn poly_text(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        let m = mono_text(e, names);
        let body = if m.is_empty() {
            rational_text(&a)
        } else if a.is_one() {
            m
        } else {
            format!("{}*{}", rational_text(&a), m)
        };
        match (idx, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

pub fn poly_latex(p: &Poly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        let m = mono_latex(e, names);
        let body = if m.is_empty() {
            rational_latex(&a)
        } else if a.is_one() {
            m
        } else {
            format!("{}{}", rational_latex(&a), m)
        };
        if neg {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

/// Splits the numerator content so that the fraction reads `(a*N)/(b*D)`.
fn split(s: &Scalar) -> (Poly, Poly) {
    let (k, pp) = s.numer().integer_primitive();
    let a = BigRational::from_integer(k.numer().clone());
    let b = BigRational::from_integer(k.denom().clone());
    (pp.scale(&a), s.denom().scale(&b))
}

fn needs_parens(p: &Poly) -> bool {
    match p.terms() {
        [(e, c)] => {
            let vars = e.iter().filter(|&&k| k > 0).count();
            !(c.is_one() && vars <= 1) && vars > 0
        }
        _ => true,
    }
}

pub fn scalar_text(s: &Scalar) -> String {
    let names = s.space().names();
    if s.denom().is_one() {
        return poly_text(s.numer(), names);
    }
    let (n, d) = split(s);
    let ns = poly_text(&n, names);
    let ds = poly_text(&d, names);
    let ns = if n.terms().len() > 1 { format!("({ns})") } else { ns };
    let ds = if needs_parens(&d) { format!("({ds})") } else { ds };
    format!("{ns}/{ds}")
}

pub fn scalar_latex(s: &Scalar) -> String {
    let names = s.space().names();
    if s.denom().is_one() {
        return poly_latex(s.numer(), names);
    }
    let (n, d) = split(s);
    let neg = n.leading_coeff().is_negative();
    let n = if neg { n.neg() } else { n };
    let frac = format!("\\frac{{{}}}{{{}}}", poly_latex(&n, names), poly_latex(&d, names));
    if neg {
        format!("-{frac}")
    } else {
        frac
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Space;

    #[test]
    fn names() {
        assert_eq!(latex_name("hW"), "h_{W}");
        assert_eq!(latex_name("cLI"), "c_{LI}");
        assert_eq!(latex_name("c"), "c");
        assert_eq!(latex_name("alpha"), "\\alpha");
    }

    #[test]
    fn rendering() {
        let sp = Space::new(&["hW"]).unwrap();
        let h = Scalar::param(&sp, "hW").unwrap();
        let s = Scalar::from_int(-3) / (Scalar::from_int(4) * &h);
        assert_eq!(s.to_string(), "-3/(4*hW)");
        assert_eq!(s.to_latex(), "-\\frac{3}{4h_{W}}");
        let t = (Scalar::from_int(12) * &h + Scalar::from_int(39)) / (Scalar::from_int(16) * &h * &h);
        assert_eq!(t.to_string(), "(12*hW + 39)/(16*hW^2)");
        assert_eq!(t.to_latex(), "\\frac{12h_{W}+39}{16h_{W}^{2}}");
        let u = Scalar::one() / (&h * &h);
        assert_eq!(u.to_string(), "1/hW^2");
        let p = &h + Scalar::from_ratio(9, 4);
        assert_eq!(p.to_string(), "hW + 9/4");
        assert_eq!(p.to_latex(), "h_{W}+\\frac{9}{4}");
    }
}
