use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{Exps, Poly, MAX_PARAMS};
use super::{Scalar, Space};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exponents: Vec<u16>,
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    numer: Vec<TermRepr>,
    denom: Vec<TermRepr>,
    params: Vec<String>,
}

fn poly_repr(p: &Poly, n: usize) -> Vec<TermRepr> {
    p.terms()
        .iter()
        .map(|(e, c)| TermRepr { coeff: format!("{}/{}", c.numer(), c.denom()), exponents: e[..n].to_vec() })
        .collect()
}

fn poly_from_repr(terms: &[TermRepr], n: usize) -> Result<Poly, String> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff: BigRational = t.coeff.parse().map_err(|_| format!("bad coefficient `{}`", t.coeff))?;
        if t.exponents.len() != n {
            return Err(format!("expected {n} exponents, got {}", t.exponents.len()));
        }
        let mut e: Exps = [0; MAX_PARAMS];
        e[..n].copy_from_slice(&t.exponents);
        out.push((e, coeff));
    }
    Ok(Poly::from_terms(out))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let n = self.space().len();
        ScalarRepr {
            numer: poly_repr(self.numer(), n),
            denom: poly_repr(self.denom(), n),
            params: self.space().names().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Scalar, D::Error> {
        use serde::de::Error;
        let r = ScalarRepr::deserialize(deserializer)?;
        let space = Space::new(&r.params).map_err(D::Error::custom)?;
        let n = space.len();
        let numer = poly_from_repr(&r.numer, n).map_err(D::Error::custom)?;
        let denom = poly_from_repr(&r.denom, n).map_err(D::Error::custom)?;
        Scalar::from_polys(&space, numer, denom).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let sp = Space::new(&["hW", "c"]).unwrap();
        let s = Scalar::parse(&sp, "(12*hW+39*c)/(16*hW^2)").unwrap();
        let js = serde_json::to_string(&s).unwrap();
        assert!(js.contains("\"coeff\":\"39/16\""));
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.space(), &sp);
    }
}
