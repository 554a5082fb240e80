//! Hankel sections of polynomial sequences and coefficientwise nonnegativity
//! of all their minors.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::eulerian::e2_reversed;
use crate::poly::Poly;
use crate::ward::{generalized_ward_cf, ward_poly};
use crate::Polynomial;

/// Integer polynomial, the entry type of Hankel sections.
pub type IntPoly = Poly<BigInt>;

/// The `m x m` matrix `(P_{i+j})`.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelSection {
    m: usize,
    entries: Vec<Vec<IntPoly>>,
}

impl HankelSection {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<IntPoly>] {
        &self.entries
    }

    /// Submatrix on the given rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<IntPoly>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect()
    }
}

/// Needs `P_0..P_{2m-2}` with integer coefficients.
pub fn hankel_section(seq: &[Polynomial], m: usize) -> Result<HankelSection> {
    if m == 0 {
        return Err(Error::Precondition("Hankel size must be at least 1".into()));
    }
    if seq.len() < 2 * m - 1 {
        return Err(Error::Precondition(format!(
            "need {} terms for size {m}, got {}",
            2 * m - 1,
            seq.len()
        )));
    }
    let ints: Vec<IntPoly> = seq[..2 * m - 1]
        .iter()
        .map(|p| {
            p.to_integer()
                .ok_or_else(|| Error::Precondition(format!("non-integer entry {p}")))
        })
        .collect::<Result<_>>()?;
    let entries = (0..m)
        .map(|i| (0..m).map(|j| ints[i + j].clone()).collect())
        .collect();
    Ok(HankelSection { m, entries })
}

/// A minor with a negative coefficient.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub determinant: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows={:?} cols={:?} det={}",
            self.rows, self.cols, self.determinant
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinorCheck {
    pub ok: bool,
    pub minors_checked: usize,
    pub counterexample: Option<Counterexample>,
}

fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).collect()
}

fn subsets(m: usize, r: usize) -> Vec<u32> {
    let mut out: Vec<u32> = (0u32..1 << m)
        .filter(|s| s.count_ones() as usize == r)
        .collect();
    out.sort_by_key(|&s| indices(s));
    out
}

/// Every `r x r` minor for `r <= r_max`, by Laplace expansion along the last
/// row with memoized smaller minors. Reports the first failure in order of
/// size, then row set, then column set.
pub fn all_minors_nonneg(h: &HankelSection, r_max: usize) -> MinorCheck {
    let m = h.m;
    let r_max = r_max.min(m);
    let mut prev: HashMap<(u32, u32), IntPoly> = HashMap::from([((0, 0), IntPoly::one())]);
    let mut checked = 0;
    for r in 1..=r_max {
        let sets = subsets(m, r);
        let mut level = HashMap::with_capacity(sets.len() * sets.len());
        for &rows in &sets {
            let last = 31 - rows.leading_zeros();
            let rest = rows & !(1 << last);
            for &cols in &sets {
                let mut det = IntPoly::zero();
                for (p, j) in indices(cols).into_iter().enumerate() {
                    let a = &h.entries[last as usize][j];
                    if a.is_zero() {
                        continue;
                    }
                    let term = a * &prev[&(rest, cols & !(1 << j))];
                    if (r - 1 + p) % 2 == 0 {
                        det += &term;
                    } else {
                        det -= &term;
                    }
                }
                checked += 1;
                if !det.coefficientwise_nonneg() {
                    return MinorCheck {
                        ok: false,
                        minors_checked: checked,
                        counterexample: Some(Counterexample {
                            rows: indices(rows),
                            cols: indices(cols),
                            determinant: det.to_string(),
                        }),
                    };
                }
                level.insert((rows, cols), det);
            }
        }
        prev = level;
    }
    MinorCheck {
        ok: true,
        minors_checked: checked,
        counterexample: None,
    }
}

/// Fraction-free Gaussian elimination over `Q[vars]` with exact division.
pub fn bareiss_det(matrix: &[Vec<Polynomial>]) -> Polynomial {
    let n = matrix.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut a = matrix.to_vec();
    let mut sign = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Polynomial::zero();
            };
            a.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign {
        -det
    } else {
        det
    }
}

/// Plain cofactor expansion along the first row.
pub fn cofactor_det<C: crate::scalar::Scalar>(matrix: &[Vec<Poly<C>>]) -> Poly<C> {
    let n = matrix.len();
    if n == 0 {
        return Poly::one();
    }
    let mut det = Poly::zero();
    for j in 0..n {
        let minor: Vec<Vec<Poly<C>>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][j] * &cofactor_det(&minor);
        if j % 2 == 0 {
            det += &term;
        } else {
            det -= &term;
        }
    }
    det
}

/// Named sequences with Hankel checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HankelFamily {
    Ward,
    GeneralizedWard,
    Eulerian2Reversed,
}

impl HankelFamily {
    pub fn name(self) -> &'static str {
        match self {
            HankelFamily::Ward => "ward",
            HankelFamily::GeneralizedWard => "generalized-ward",
            HankelFamily::Eulerian2Reversed => "eulerian2-reversed",
        }
    }

    /// `P_0..P_{len-1}`.
    pub fn sequence(self, len: usize) -> Vec<Polynomial> {
        match self {
            HankelFamily::Ward => (0..len).map(ward_poly).collect(),
            HankelFamily::GeneralizedWard => {
                generalized_ward_cf(len.saturating_sub(1)).polys()[..len].to_vec()
            }
            HankelFamily::Eulerian2Reversed => (0..len).map(e2_reversed).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HankelReport {
    pub sequence: String,
    pub m: usize,
    pub r_max: usize,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl HankelReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }
}

/// Checks all minors up to `r_max` of the `m x m` section of a named family.
pub fn hankel_report(family: HankelFamily, m: usize, r_max: usize) -> Result<HankelReport> {
    let h = hankel_section(&family.sequence(2 * m.max(1) - 1), m)?;
    let check = all_minors_nonneg(&h, r_max);
    Ok(HankelReport {
        sequence: family.name().to_string(),
        m,
        r_max,
        ok: check.ok,
        counterexample: check.counterexample,
    })
}

/// All minors of the `m x m` section of the reversed second-order Eulerian polynomials.
pub fn check_e2_reversed_tp(m: usize) -> bool {
    hankel_report(HankelFamily::Eulerian2Reversed, m, m).is_ok_and(|r| r.ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_sections() {
        let ward = HankelFamily::Ward.sequence(3);
        let h = hankel_section(&ward, 2).unwrap();
        let det = cofactor_det(h.entries());
        assert_eq!(det.to_rational(), p("2*x^2 + x"));
        let semi: Vec<Polynomial> = ["1", "1", "3"].iter().map(|s| p(s)).collect();
        assert_eq!(
            cofactor_det(hankel_section(&semi, 2).unwrap().entries()).to_rational(),
            p("2")
        );
        assert_eq!(
            hankel_section(&ward, 1).unwrap().entry(0, 0),
            &IntPoly::one()
        );
        assert!(hankel_section(&ward, 3).is_err());
    }

    #[test]
    fn counterexample() {
        let seq: Vec<Polynomial> = ["1", "2", "1"].iter().map(|s| p(s)).collect();
        let check = all_minors_nonneg(&hankel_section(&seq, 2).unwrap(), 2);
        assert!(!check.ok);
        let c = check.counterexample.unwrap();
        assert_eq!(
            (c.rows, c.cols, c.determinant),
            (vec![0, 1], vec![0, 1], "-3".into())
        );
        let delta: Vec<Polynomial> = ["1", "0", "0", "0", "0"].iter().map(|s| p(s)).collect();
        assert!(all_minors_nonneg(&hankel_section(&delta, 3).unwrap(), 3).ok);
    }

    #[test]
    fn determinant_methods_agree() {
        let h = hankel_section(&HankelFamily::GeneralizedWard.sequence(7), 4).unwrap();
        for r in 1..=4 {
            let idx: Vec<usize> = (4 - r..4).collect();
            let sub = h.submatrix(&idx, &(0..r).collect::<Vec<_>>());
            let rational: Vec<Vec<Polynomial>> = sub
                .iter()
                .map(|row| row.iter().map(IntPoly::to_rational).collect())
                .collect();
            assert_eq!(bareiss_det(&rational), cofactor_det(&sub).to_rational());
        }
    }

    #[test]
    fn e2_small() {
        assert!(check_e2_reversed_tp(1));
        assert!(check_e2_reversed_tp(3));
        let report = hankel_report(HankelFamily::Ward, 3, 3).unwrap();
        assert_eq!(
            report.to_json(),
            r#"{"sequence":"ward","m":3,"r_max":3,"ok":true}"#
        );
    }
}
