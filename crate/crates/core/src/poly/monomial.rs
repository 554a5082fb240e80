use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::VarId;

type Factors = SmallVec<[(VarId, u32); 4]>;

/// A power product. Factors are sorted by variable and carry positive exponents.
///
/// Monomials are compared in graded-lexicographic order: total degree first,
/// then the larger exponent on the smallest variable wins.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    degree: u32,
    factors: Factors,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: VarId, exp: u32) -> Self {
        let mut factors = Factors::new();
        if exp > 0 {
            factors.push((v, exp));
        }
        Monomial {
            degree: exp,
            factors,
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut factors: Factors = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged = Factors::new();
        for (v, e) in factors {
            match merged.last_mut() {
                Some((last, le)) if *last == v => *le += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial {
            degree,
            factors: merged,
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn exponent(&self, v: &VarId) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, v: &VarId) -> bool {
        self.exponent(v) > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Factors::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors: out,
        }
    }

    /// `self / other` when every exponent of `other` fits inside `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Factors::new();
        let mut j = 0;
        for &(v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 < v {
                return None;
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                let oe = other.factors[j].1;
                j += 1;
                match e.cmp(&oe) {
                    Ordering::Less => return None,
                    Ordering::Equal => continue,
                    Ordering::Greater => out.push((v, e - oe)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial {
            degree: self.degree - other.degree,
            factors: out,
        })
    }

    /// Removes `v` entirely, returning its exponent and the cofactor.
    pub fn split_off(&self, v: &VarId) -> (u32, Monomial) {
        match self.factors.binary_search_by(|(w, _)| w.cmp(v)) {
            Ok(i) => {
                let e = self.factors[i].1;
                let mut factors = self.factors.clone();
                factors.remove(i);
                (
                    e,
                    Monomial {
                        degree: self.degree - e,
                        factors,
                    },
                )
            }
            Err(_) => (0, self.clone()),
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.factors.iter().zip(other.factors.iter()) {
                if a.0 != b.0 {
                    return if a.0 < b.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.factors.len().cmp(&other.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
