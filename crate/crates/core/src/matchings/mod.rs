//! Perfect matchings of `[2n]`, their decorated (super-augmented) versions,
//! and the vertex statistics `cr`, `ne`, `qne`.
//!
//! Vertices are 1-indexed throughout.

mod decorated;
mod weights;

use std::fmt;

pub use decorated::{enumerate_augmented, enumerate_super, SuperMatching, VertexKind};
pub use weights::{
    cf_12var, cf_12var_bis1, cf_12var_bis2, cf_18var, clop_count, count_augmented, count_mprime,
    generalized_ward_oracle, master_cf, master_poly_s, master_poly_t, poly_12var, poly_18var,
    pq_bracket, specialize_12var, star, star_with, weight_signature, IndexedWeights, WeightFactor,
};

use crate::error::{Error, Result};

/// A fixed-point-free involution of `[2n]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PerfectMatching {
    partner: Vec<usize>,
}

impl PerfectMatching {
    /// Builds a matching from its arches; every vertex of `[2n]` must be covered once.
    pub fn from_arches(arches: &[(usize, usize)]) -> Result<Self> {
        let size = arches.len() * 2;
        let mut partner = vec![0; size];
        for &(i, j) in arches {
            let (i, j) = (i.min(j), i.max(j));
            if i == 0 || j > size || i == j {
                return Err(Error::InvalidMatching(format!("bad arch ({i},{j})")));
            }
            if partner[i - 1] != 0 || partner[j - 1] != 0 {
                return Err(Error::InvalidMatching(format!(
                    "vertex reused in ({i},{j})"
                )));
            }
            partner[i - 1] = j;
            partner[j - 1] = i;
        }
        Ok(PerfectMatching { partner })
    }

    /// Builds a matching from a partner table (`partner[i-1]` is the mate of `i`).
    pub fn from_partners(partner: Vec<usize>) -> Result<Self> {
        let size = partner.len();
        for (idx, &p) in partner.iter().enumerate() {
            let i = idx + 1;
            if p == 0 || p > size || p == i || partner[p - 1] != i {
                return Err(Error::InvalidMatching(format!(
                    "partner table is not a fixed-point-free involution at {i}"
                )));
            }
        }
        Ok(PerfectMatching { partner })
    }

    pub fn empty() -> Self {
        PerfectMatching {
            partner: Vec::new(),
        }
    }

    /// Number of arches.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of vertices, `2n`.
    pub fn size(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i - 1]
    }

    pub fn is_opener(&self, i: usize) -> bool {
        i < self.partner(i)
    }

    pub fn is_closer(&self, i: usize) -> bool {
        i > self.partner(i)
    }

    /// Arches `(opener, closer)` sorted by opener.
    pub fn arches(&self) -> Vec<(usize, usize)> {
        (1..=self.size())
            .filter(|&i| self.is_opener(i))
            .map(|i| (i, self.partner(i)))
            .collect()
    }

    /// Number of arches crossing the arch whose closer is `k`, with `k` in third position.
    pub fn cr(&self, k: usize) -> usize {
        if !self.is_closer(k) {
            return 0;
        }
        let i = self.partner(k);
        (i + 1..k).filter(|&j| self.partner(j) > k).count()
    }

    /// Number of arches nesting over the arch whose closer is `k`.
    pub fn ne(&self, k: usize) -> usize {
        if !self.is_closer(k) {
            return 0;
        }
        let j = self.partner(k);
        (1..j).filter(|&i| self.partner(i) > k).count()
    }

    /// Number of arches `(j, l)` with `j < i < l`.
    pub fn qne(&self, i: usize) -> usize {
        (1..i).filter(|&j| self.partner(j) > i).count()
    }

    /// An opener is a record when no arch nests above its arch.
    pub fn is_record(&self, j: usize) -> Result<bool> {
        if !self.is_opener(j) {
            return Err(Error::WrongVertexRole {
                vertex: j,
                expected: "an opener",
            });
        }
        let k = self.partner(j);
        Ok(!(1..j).any(|i| self.partner(i) > k))
    }

    /// A closer is an antirecord when no later closer is paired with an earlier opener.
    pub fn is_antirecord(&self, k: usize) -> Result<bool> {
        if !self.is_closer(k) {
            return Err(Error::WrongVertexRole {
                vertex: k,
                expected: "a closer",
            });
        }
        let j = self.partner(k);
        Ok(!(k + 1..=self.size()).any(|l| self.partner(l) < j))
    }

    /// Total number of crossing quadruples, by direct scan over arch pairs.
    pub fn crossings(&self) -> usize {
        let arches = self.arches();
        let mut count = 0;
        for &(i, k) in &arches {
            for &(j, l) in &arches {
                if i < j && j < k && k < l {
                    count += 1;
                }
            }
        }
        count
    }

    /// Total number of nesting quadruples, by direct scan over arch pairs.
    pub fn nestings(&self) -> usize {
        let arches = self.arches();
        let mut count = 0;
        for &(i, l) in &arches {
            for &(j, k) in &arches {
                if i < j && k < l {
                    count += 1;
                }
            }
        }
        count
    }

    /// Number of positions `i` with `i` a closer and `i+1` an opener.
    pub fn clop(&self) -> usize {
        (1..self.size())
            .filter(|&i| self.is_closer(i) && self.is_opener(i + 1))
            .count()
    }

    /// Image under `i -> 2n + 1 - i`.
    pub fn reflect(&self) -> Self {
        let m = self.size();
        let partner = (1..=m).map(|i| m + 1 - self.partner(m + 1 - i)).collect();
        PerfectMatching { partner }
    }
}

impl fmt::Display for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.arches() {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PerfectMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PerfectMatching[{self}]")
    }
}

/// All `(2n-1)!!` perfect matchings of `[2n]`, pairing the smallest free
/// vertex with each larger free vertex in increasing order.
pub fn enumerate_matchings(n: usize) -> Vec<PerfectMatching> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<PerfectMatching>) {
        let Some(first) = partner.iter().position(|&p| p == 0) else {
            out.push(PerfectMatching {
                partner: partner.clone(),
            });
            return;
        };
        for second in first + 1..partner.len() {
            if partner[second] == 0 {
                partner[first] = second + 1;
                partner[second] = first + 1;
                go(partner, out);
                partner[first] = 0;
                partner[second] = 0;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![0; 2 * n], &mut out);
    out
}
