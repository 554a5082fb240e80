//! Stirling permutations and second-order Eulerian numbers.
//!
//! Descents count the last position: `sigma_{2n} > sigma_{2n+1} = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::contfrac::families;
use crate::error::{Error, Result};
use crate::matchings::enumerate_matchings;
use crate::poly::{Monomial, VarId};
use crate::ward::ward_reversed;
use crate::{Polynomial, Rational};

/// A word on `{1,1,2,2,...,n,n}` in which everything between the two copies of `m` exceeds `m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingPermutation {
    word: Vec<u32>,
}

impl StirlingPermutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        if word.len() % 2 != 0 {
            return Err(Error::InvalidWord("odd length".into()));
        }
        let n = word.len() / 2;
        for m in 1..=n as u32 {
            let pos: Vec<usize> = (0..word.len()).filter(|&i| word[i] == m).collect();
            if pos.len() != 2 {
                return Err(Error::InvalidWord(format!("{m} does not appear twice")));
            }
            if word[pos[0] + 1..pos[1]].iter().any(|&v| v < m) {
                return Err(Error::InvalidWord(format!(
                    "smaller value between the copies of {m}"
                )));
            }
        }
        Ok(StirlingPermutation { word })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.word.len() / 2
    }

    /// Positions `j` with `sigma_j > sigma_{j+1}`, counting the last position.
    pub fn descents(&self) -> usize {
        let inner = self.word.windows(2).filter(|w| w[0] > w[1]).count();
        inner + usize::from(!self.word.is_empty())
    }
}

impl fmt::Display for StirlingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() < 10 { "" } else { " " };
        let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for StirlingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for StirlingPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |p: &str| Error::Parse(format!("bad letter {p:?}"));
        let word = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|p| !p.is_empty())
                .map(|p| p.parse().map_err(|_| bad(p)))
                .collect::<Result<Vec<u32>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
                .collect::<Result<Vec<u32>>>()?
        };
        StirlingPermutation::new(word)
    }
}

/// All Stirling permutations of order `n`, built by inserting `mm` into each gap
/// of each order-`(m-1)` word, left to right.
pub fn enumerate_stirling_perms(n: usize) -> Vec<StirlingPermutation> {
    let mut words: Vec<Vec<u32>> = vec![Vec::new()];
    for m in 1..=n as u32 {
        words = words
            .iter()
            .flat_map(|w| {
                (0..=w.len()).map(move |gap| {
                    let mut next = w.clone();
                    next.splice(gap..gap, [m, m]);
                    next
                })
            })
            .collect();
    }
    words
        .into_iter()
        .map(|word| StirlingPermutation { word })
        .collect()
}

/// Rows `0..=rows` from `<<n,k>> = (2n-k) <<n-1,k-1>> + k <<n-1,k>>`.
pub fn eulerian2_triangle(rows: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=rows {
        let prev = &t[n - 1];
        let at = |k: usize| prev.get(k).cloned().unwrap_or_default();
        let row = (0..=n)
            .map(|k| {
                if k == 0 {
                    BigInt::zero()
                } else {
                    BigInt::from(2 * n - k) * at(k - 1) + BigInt::from(k) * at(k)
                }
            })
            .collect();
        t.push(row);
    }
    t
}

pub fn eulerian2(n: usize, k: usize) -> BigInt {
    eulerian2_triangle(n)[n].get(k).cloned().unwrap_or_default()
}

/// Row `n` by counting descents over all Stirling permutations.
pub fn eulerian2_by_enumeration(n: usize) -> Vec<u64> {
    let mut row = vec![0; n + 1];
    for s in enumerate_stirling_perms(n) {
        row[s.descents()] += 1;
    }
    row
}

fn row_poly(row: &[BigInt], reversed: bool) -> Polynomial {
    let x = VarId::new("x");
    let n = row.len() - 1;
    row.iter()
        .enumerate()
        .map(|(k, c)| {
            let e = if reversed { n - k } else { k };
            Polynomial::term(
                Rational::from_integer(c.clone()),
                Monomial::power(x, e as u32),
            )
        })
        .sum()
}

/// `E2_n(x) = sum_k <<n,k>> x^k`.
pub fn e2_poly(n: usize) -> Polynomial {
    row_poly(&eulerian2_triangle(n)[n], false)
}

/// `x^n E2_n(1/x)`.
pub fn e2_reversed(n: usize) -> Polynomial {
    row_poly(&eulerian2_triangle(n)[n], true)
}

/// Reversed Ward polynomial equals the reversed second-order Eulerian polynomial at `1 + x`.
pub fn ward_euler_identity(n: usize) -> bool {
    let x = VarId::new("x");
    e2_reversed(n).subs(x, &(Polynomial::one() + Polynomial::var(x))) == ward_reversed(n)
}

/// Matchings of `[2n]` by closer-opener adjacencies `l` against `<<n, n-l>>`.
pub fn clop_equals_eulerian(n: usize) -> bool {
    let mut by_clop = vec![0u64; n + 1];
    for pi in enumerate_matchings(n) {
        by_clop[pi.clop()] += 1;
    }
    let row = &eulerian2_triangle(n)[n];
    (0..=n).all(|l| BigInt::from(by_clop[l]) == row[n - l])
}

/// The T-fraction `alpha_i = i`, `delta_i = (i-1)(x-1)` against the recurrence.
pub fn e2_reversed_tfraction_check(order: usize) -> bool {
    let series = families::eulerian2_reversed().expand(order);
    (0..=order).all(|n| series.coeffs()[n] == e2_reversed(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_enumeration() {
        let two: Vec<String> = enumerate_stirling_perms(2)
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(two.len(), 3);
        for w in ["1122", "1221", "2211"] {
            assert!(two.contains(&w.to_string()));
        }
        assert_eq!(enumerate_stirling_perms(4).len(), 105);
        let d = |s: &str| s.parse::<StirlingPermutation>().unwrap().descents();
        assert_eq!((d("1122"), d("2211"), d("1221")), (1, 2, 2));
        assert!("1212".parse::<StirlingPermutation>().is_err());
        assert!("2112".parse::<StirlingPermutation>().is_err());
    }

    #[test]
    fn triangle() {
        let t = eulerian2_triangle(8);
        let want: Vec<BigInt> = [0u64, 1, 22, 58, 24].iter().map(|&v| v.into()).collect();
        assert_eq!(t[4], want);
        assert_eq!(eulerian2(7, 4), BigInt::from(32120));
        for n in 0..=6 {
            let by_enum: Vec<BigInt> = eulerian2_by_enumeration(n)
                .into_iter()
                .map(BigInt::from)
                .collect();
            assert_eq!(by_enum, t[n]);
        }
    }

    #[test]
    fn identities() {
        assert!((0..=6).all(ward_euler_identity));
        assert!((0..=5).all(clop_equals_eulerian));
        assert!(e2_reversed_tfraction_check(6));
        assert_eq!(e2_reversed(2), "x + 2".parse().unwrap());
    }
}
