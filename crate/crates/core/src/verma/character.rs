//! Truncated characters of Verma modules and their quotients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Number of partitions of `n`, for `n = 0..=max`.
pub fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0u64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            p[n] = p[n].checked_add(p[n - part]).expect("partition count overflow");
        }
    }
    p
}

/// `P_2(n) = sum_i P(i) P(n - i)`, the number of PBW monomials at level `n`.
pub fn p2_counts(max: usize) -> Vec<u64> {
    let p = partition_counts(max);
    (0..=max).map(|n| (0..=n).map(|i| p[i] * p[n - i]).sum()).collect()
}

/// `q^offset * sum_k coeffs[k] q^k`, truncated after `q^N`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterSeries {
    pub offset: Scalar,
    pub coeffs: Vec<u64>,
}

impl CharacterSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Multiplies by `(1 - q^k)`, failing if a coefficient would go negative.
    pub fn times_one_minus(&self, k: usize) -> Result<CharacterSeries> {
        let mut out = self.coeffs.clone();
        for n in (k..out.len()).rev() {
            out[n] = out[n].checked_sub(self.coeffs[n - k]).ok_or_else(|| {
                Error::Overflow(format!("negative coefficient at q^{n} after multiplying by 1 - q^{k}"))
            })?;
        }
        Ok(CharacterSeries { offset: self.offset.clone(), coeffs: out })
    }

    pub fn checked_add(&self, other: &CharacterSeries) -> Result<CharacterSeries> {
        if self.offset != other.offset || self.coeffs.len() != other.coeffs.len() {
            return Err(Error::Precondition("adding characters with different offsets or orders".into()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or_else(|| Error::Overflow("character coefficient".into())))
            .collect::<Result<Vec<u64>>>()?;
        Ok(CharacterSeries { offset: self.offset.clone(), coeffs })
    }

    /// The coefficient list as text, e.g. `1 + 2q + 5q^2`.
    pub fn series_text(&self) -> String {
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn series_latex(&self) -> String {
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{{{k}}}"),
            };
            parts.push(match (c, mono.is_empty()) {
                (_, true) => c.to_string(),
                (1, false) => mono,
                _ => format!("{c}{mono}"),
            });
        }
        format!("q^{{{}}}\\left({}+\\cdots\\right)", self.offset.to_latex(), parts.join("+"))
    }
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.series_text())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Characters {
    pub v: CharacterSeries,
    pub jprime: Option<CharacterSeries>,
    pub lprime: Option<CharacterSeries>,
    pub j: Option<CharacterSeries>,
    pub l: Option<CharacterSeries>,
}

pub fn char_v(h: &Scalar, n: usize) -> CharacterSeries {
    CharacterSeries { offset: h.clone(), coeffs: p2_counts(n) }
}

/// Character of the submodule generated by a singular vector at level `p`,
/// written relative to `q^h`.
pub fn char_jprime(h: &Scalar, p: usize, n: usize) -> CharacterSeries {
    let p2 = p2_counts(n);
    let coeffs = (0..=n).map(|k| if k >= p { p2[k - p] } else { 0 }).collect();
    CharacterSeries { offset: h.clone(), coeffs }
}

pub fn char_lprime(h: &Scalar, p: usize, n: usize) -> Result<CharacterSeries> {
    char_v(h, n).times_one_minus(p)
}

pub fn char_l(h: &Scalar, p: usize, r: usize, n: usize) -> Result<CharacterSeries> {
    char_v(h, n).times_one_minus(p)?.times_one_minus(r * p)
}

/// `q^{h+p}(1 + q^{(r-1)p} - q^{rp}) sum P_2(n) q^n`, relative to `q^h`.
pub fn char_j(h: &Scalar, p: usize, r: usize, n: usize) -> Result<CharacterSeries> {
    let p2 = p2_counts(n);
    let at = |k: isize| if k >= 0 { p2[k as usize] as i128 } else { 0 };
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n as isize {
        let (p, r) = (p as isize, r as isize);
        let c = at(k - p) + at(k - p - (r - 1) * p) - at(k - p - r * p);
        coeffs.push(u64::try_from(c).map_err(|_| Error::Overflow(format!("coefficient of q^{k}")))?);
    }
    Ok(CharacterSeries { offset: h.clone(), coeffs })
}

/// All characters; the quotient series need `p` (and `r` for `J`, `L`).
pub fn characters(h: &Scalar, p: Option<usize>, r: Option<usize>, n: usize) -> Result<Characters> {
    let v = char_v(h, n);
    let (jprime, lprime) = match p {
        Some(p) => (Some(char_jprime(h, p, n)), Some(char_lprime(h, p, n)?)),
        None => (None, None),
    };
    let (j, l) = match (p, r) {
        (Some(p), Some(r)) => (Some(char_j(h, p, r, n)?), Some(char_l(h, p, r, n)?)),
        _ => (None, None),
    };
    Ok(Characters { v, jprime, lprime, j, l })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_terms() {
        let h = Scalar::zero();
        assert_eq!(char_v(&h, 3).coeffs, vec![1, 2, 5, 10]);
        assert_eq!(char_lprime(&h, 1, 3).unwrap().coeffs, vec![1, 1, 3, 5]);
        assert_eq!(char_v(&h, 5).to_string(), "1 + 2q + 5q^2 + 10q^3 + 20q^4 + 36q^5");
    }

    #[test]
    fn j_plus_l_is_v() {
        let h = Scalar::zero();
        for (p, r) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2)] {
            let sum = char_j(&h, p, r, 20).unwrap().checked_add(&char_l(&h, p, r, 20).unwrap()).unwrap();
            assert_eq!(sum, char_v(&h, 20));
        }
    }
}
