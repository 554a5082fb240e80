//! Phylogenetic trees, the bijection with augmented perfect matchings through
//! arch systems and planar binary trees, and partitions into blocks of size at
//! least two.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matchings::{PerfectMatching, SuperMatching};
use crate::poly::{Monomial, VarId};
use crate::{Polynomial, Rational};

/// A rooted tree with leaves labeled `1..=n+1` and unlabeled internal
/// vertices, each with at least two children.
///
/// Stored canonically: children sorted by their smallest leaf label.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhyloTree {
    Leaf(u32),
    Internal(Vec<PhyloTree>),
}

impl PhyloTree {
    /// Builds an internal vertex, sorting children into canonical order.
    pub fn node(mut children: Vec<PhyloTree>) -> Result<Self> {
        if children.len() < 2 {
            return Err(Error::InvalidTree(
                "internal vertex needs at least two children".into(),
            ));
        }
        children.sort_by_key(PhyloTree::min_label);
        Ok(PhyloTree::Internal(children))
    }

    pub fn min_label(&self) -> u32 {
        match self {
            PhyloTree::Leaf(l) => *l,
            PhyloTree::Internal(cs) => cs.iter().map(PhyloTree::min_label).min().unwrap_or(0),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            PhyloTree::Leaf(_) => 1,
            PhyloTree::Internal(cs) => cs.iter().map(PhyloTree::leaves).sum(),
        }
    }

    pub fn internal_vertices(&self) -> usize {
        match self {
            PhyloTree::Leaf(_) => 0,
            PhyloTree::Internal(cs) => {
                1 + cs.iter().map(PhyloTree::internal_vertices).sum::<usize>()
            }
        }
    }

    /// `(n, k)`: `n + 1` leaves and `k` internal vertices.
    pub fn tree_type(&self) -> (usize, usize) {
        (self.leaves() - 1, self.internal_vertices())
    }

    /// Out-degrees of the internal vertices.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        fn go(t: &PhyloTree, out: &mut Vec<usize>) {
            if let PhyloTree::Internal(cs) = t {
                out.push(cs.len());
                cs.iter().for_each(|c| go(c, out));
            }
        }
        go(self, &mut out);
        out
    }

    /// Checks the leaf labels are exactly `1..=leaves` and the order is canonical.
    pub fn validate(&self) -> Result<()> {
        let mut labels = Vec::new();
        fn go(t: &PhyloTree, labels: &mut Vec<u32>) -> Result<()> {
            match t {
                PhyloTree::Leaf(l) => labels.push(*l),
                PhyloTree::Internal(cs) => {
                    if cs.len() < 2 {
                        return Err(Error::InvalidTree("vertex with a single child".into()));
                    }
                    if cs.windows(2).any(|w| w[0].min_label() > w[1].min_label()) {
                        return Err(Error::InvalidTree("children out of order".into()));
                    }
                    for c in cs {
                        go(c, labels)?;
                    }
                }
            }
            Ok(())
        }
        go(self, &mut labels)?;
        labels.sort_unstable();
        if labels.iter().enumerate().any(|(i, &l)| l as usize != i + 1) {
            return Err(Error::InvalidTree(format!("leaf labels {labels:?}")));
        }
        Ok(())
    }
}

impl fmt::Display for PhyloTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhyloTree::Leaf(l) => write!(f, "{l}"),
            PhyloTree::Internal(cs) => {
                f.write_str("(")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for PhyloTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {:?} at byte {}",
                c as char, self.pos
            )))
        }
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| Error::Parse(format!("expected a label at byte {start}")))
    }
}

impl FromStr for PhyloTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn tree(c: &mut Cursor) -> Result<PhyloTree> {
            if c.peek() == Some(b'(') {
                c.pos += 1;
                let mut children = vec![tree(c)?];
                while c.peek() == Some(b',') {
                    c.pos += 1;
                    children.push(tree(c)?);
                }
                c.expect(b')')?;
                PhyloTree::node(children)
            } else {
                Ok(PhyloTree::Leaf(c.number()?))
            }
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut c = Cursor {
            s: compact.as_bytes(),
            pos: 0,
        };
        let t = tree(&mut c)?;
        if c.pos != compact.len() {
            return Err(Error::Parse("trailing input after tree".into()));
        }
        t.validate()?;
        Ok(t)
    }
}

fn insertions(t: &PhyloTree, leaf: u32) -> Vec<PhyloTree> {
    let new = PhyloTree::Leaf(leaf);
    let mut out = vec![PhyloTree::Internal(vec![t.clone(), new.clone()])];
    if let PhyloTree::Internal(cs) = t {
        let mut attached = cs.clone();
        attached.push(new);
        out.push(PhyloTree::Internal(attached));
        for (i, c) in cs.iter().enumerate() {
            for variant in insertions(c, leaf) {
                let mut replaced = cs.clone();
                replaced[i] = variant;
                out.push(PhyloTree::Internal(replaced));
            }
        }
    }
    out
}

/// Every phylogenetic tree on leaves `1..=n+1`, grown by inserting each new
/// leaf at an internal vertex, on an edge, or above the root.
pub fn enumerate_all_phylo(n: usize) -> Vec<PhyloTree> {
    let mut trees = vec![PhyloTree::Leaf(1)];
    for leaf in 2..=n as u32 + 1 {
        trees = trees.iter().flat_map(|t| insertions(t, leaf)).collect();
    }
    trees
}

/// Phylogenetic trees of type `(n, k)`.
pub fn enumerate_phylo(n: usize, k: usize) -> Vec<PhyloTree> {
    enumerate_all_phylo(n)
        .into_iter()
        .filter(|t| t.internal_vertices() == k)
        .collect()
}

/// Sum over trees on `n+1` leaves of `prod x[d-1]` over internal vertices of out-degree `d`.
pub fn multivariate_ward(n: usize) -> Polynomial {
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for t in enumerate_all_phylo(n) {
        let m = Monomial::from_pairs(
            t.degrees()
                .into_iter()
                .map(|d| (VarId::indexed("x", &[d as u32 - 1]), 1)),
        );
        *counts.entry(m).or_default() += 1;
    }
    Polynomial::from_terms(
        counts
            .into_iter()
            .map(|(m, c)| (m, Rational::from_u64(c).expect("count"))),
    )
}

/// Arches `(i, j)` with a wiggly flag, and horizontal edges `(i, i+1)`, on `[2n+1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArchSystem {
    size: usize,
    arches: Vec<(usize, usize, bool)>,
    horizontals: Vec<(usize, usize)>,
}

impl ArchSystem {
    pub fn size(&self) -> usize {
        self.size
    }

    /// Arches sorted by left endpoint, with wiggly flag.
    pub fn arches(&self) -> &[(usize, usize, bool)] {
        &self.arches
    }

    pub fn horizontals(&self) -> &[(usize, usize)] {
        &self.horizontals
    }

    fn is_opener(&self, i: usize) -> bool {
        self.horizontals.iter().any(|&(a, _)| a == i)
    }

    /// Leaf labels `1..=n+1` of the non-openers, keyed by position.
    pub fn leaf_labels(&self) -> Vec<(usize, u32)> {
        (1..=self.size)
            .filter(|&i| !self.is_opener(i))
            .zip(1..)
            .collect()
    }

    /// The planar binary tree: horizontal edges become left edges, arches right edges.
    pub fn to_binary_tree(&self) -> PlanarBinaryTree {
        let labels: HashMap<usize, u32> = self.leaf_labels().into_iter().collect();
        let right: HashMap<usize, (usize, bool)> =
            self.arches.iter().map(|&(i, j, w)| (i, (j, w))).collect();
        fn build(
            v: usize,
            labels: &HashMap<usize, u32>,
            right: &HashMap<usize, (usize, bool)>,
        ) -> PlanarBinaryTree {
            if let Some(&l) = labels.get(&v) {
                return PlanarBinaryTree::Leaf(l);
            }
            let (r, wiggly) = right[&v];
            PlanarBinaryTree::Node {
                left: Box::new(build(v + 1, labels, right)),
                right: Box::new(build(r, labels, right)),
                wiggly,
            }
        }
        build(1, &labels, &right)
    }

    /// Back to the augmented matching: `(i, j)` gives arch `(i, j-1)`, plus the
    /// wiggly line `(j-1, j)` when the arch is wiggly.
    pub fn to_matching(&self) -> Result<SuperMatching> {
        let arches: Vec<(usize, usize)> = self.arches.iter().map(|&(i, j, _)| (i, j - 1)).collect();
        let wiggly: Vec<usize> = self
            .arches
            .iter()
            .filter(|a| a.2)
            .map(|&(_, j, _)| j - 1)
            .collect();
        SuperMatching::new(PerfectMatching::from_arches(&arches)?, wiggly, [])
    }
}

impl fmt::Display for ArchSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("arches=")?;
        for &(i, j, w) in &self.arches {
            write!(f, "({i},{j}){}", if w { "~" } else { "" })?;
        }
        f.write_str("; horizontals=")?;
        for &(i, j) in &self.horizontals {
            write!(f, "({i},{j})")?;
        }
        Ok(())
    }
}

/// Forward construction on `[2n+1]`: arch `(i, j)` becomes `(i, j+1)`,
/// wiggly when `(j, j+1)` is wiggly, plus a horizontal edge `(i, i+1)`.
pub fn arch_system(p: &SuperMatching) -> Result<ArchSystem> {
    if !p.is_augmented() {
        return Err(Error::InvalidMatching(
            "dashed lines are not allowed here".into(),
        ));
    }
    let mut arches: Vec<(usize, usize, bool)> = p
        .base()
        .arches()
        .into_iter()
        .map(|(i, j)| (i, j + 1, p.wiggly().contains(&j)))
        .collect();
    arches.sort_unstable();
    let horizontals = p
        .base()
        .arches()
        .into_iter()
        .map(|(i, _)| (i, i + 1))
        .collect();
    Ok(ArchSystem {
        size: p.size() + 1,
        arches,
        horizontals,
    })
}

/// Rooted binary tree with ordered children; right edges may be wiggly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum PlanarBinaryTree {
    Leaf(u32),
    Node {
        left: Box<PlanarBinaryTree>,
        right: Box<PlanarBinaryTree>,
        wiggly: bool,
    },
}

impl PlanarBinaryTree {
    /// Smallest label; for internal vertices, the label of the leftmost leaf.
    pub fn label(&self) -> u32 {
        match self {
            PlanarBinaryTree::Leaf(l) => *l,
            PlanarBinaryTree::Node { left, .. } => left.label(),
        }
    }

    /// Contracts wiggly edges into their parents.
    pub fn contract(&self) -> PhyloTree {
        fn children(t: &PlanarBinaryTree, out: &mut Vec<PhyloTree>) {
            if let PlanarBinaryTree::Node {
                left,
                right,
                wiggly,
            } = t
            {
                out.push(left.contract());
                if *wiggly {
                    children(right, out);
                } else {
                    out.push(right.contract());
                }
            }
        }
        match self {
            PlanarBinaryTree::Leaf(l) => PhyloTree::Leaf(*l),
            node => {
                let mut cs = Vec::new();
                children(node, &mut cs);
                PhyloTree::node(cs).expect("binary vertex has two children")
            }
        }
    }

    /// Lays the vertices out on a line and reads off the arch system: order by
    /// label, and along a left chain from top to bottom.
    pub fn to_arch_system(&self) -> ArchSystem {
        let mut vertices: Vec<(u32, usize, &PlanarBinaryTree)> = Vec::new();
        fn collect<'a>(
            t: &'a PlanarBinaryTree,
            depth: usize,
            out: &mut Vec<(u32, usize, &'a PlanarBinaryTree)>,
        ) {
            out.push((t.label(), depth, t));
            if let PlanarBinaryTree::Node { left, right, .. } = t {
                collect(left, depth + 1, out);
                collect(right, depth + 1, out);
            }
        }
        collect(self, 0, &mut vertices);
        vertices.sort_by_key(|&(label, depth, _)| (label, depth));
        let position: HashMap<*const PlanarBinaryTree, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, &(_, _, t))| (t as *const _, i + 1))
            .collect();
        let mut arches = Vec::new();
        let mut horizontals = Vec::new();
        for &(_, _, t) in &vertices {
            if let PlanarBinaryTree::Node {
                left,
                right,
                wiggly,
            } = t
            {
                let at = position[&(t as *const _)];
                horizontals.push((at, position[&(&**left as *const _)]));
                arches.push((at, position[&(&**right as *const _)], *wiggly));
            }
        }
        arches.sort_unstable();
        horizontals.sort_unstable();
        ArchSystem {
            size: vertices.len(),
            arches,
            horizontals,
        }
    }
}

impl fmt::Display for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarBinaryTree::Leaf(l) => write!(f, "{l}"),
            PlanarBinaryTree::Node {
                left,
                right,
                wiggly,
            } => write!(f, "[{left},{}{right}]", if *wiggly { "~" } else { "" }),
        }
    }
}

impl fmt::Debug for PlanarBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Splits each vertex with children `c_1 < ... < c_k` into a wiggly right
/// chain `v_1, ..., v_{k-1}` with `c_i` as left children.
pub fn tree_to_binary(t: &PhyloTree) -> PlanarBinaryTree {
    match t {
        PhyloTree::Leaf(l) => PlanarBinaryTree::Leaf(*l),
        PhyloTree::Internal(cs) => {
            let mut sorted: Vec<&PhyloTree> = cs.iter().collect();
            sorted.sort_by_key(|c| c.min_label());
            let k = sorted.len();
            let mut acc = tree_to_binary(sorted[k - 1]);
            for (i, c) in sorted[..k - 1].iter().enumerate().rev() {
                acc = PlanarBinaryTree::Node {
                    left: Box::new(tree_to_binary(c)),
                    right: Box::new(acc),
                    wiggly: i < k - 2,
                };
            }
            acc
        }
    }
}

/// Augmented matching to phylogenetic tree.
pub fn augmented_to_tree(p: &SuperMatching) -> Result<PhyloTree> {
    Ok(arch_system(p)?.to_binary_tree().contract())
}

/// Phylogenetic tree to augmented matching.
pub fn tree_to_augmented(t: &PhyloTree) -> Result<SuperMatching> {
    t.validate()?;
    tree_to_binary(t).to_arch_system().to_matching()
}

/// Partitions of `[n]` into `k` blocks of size at least two, by direct enumeration.
pub fn count_assoc_stirling(n: usize, k: usize) -> u64 {
    fn go(remaining: &[usize], blocks: usize, k: usize) -> u64 {
        let Some((_, rest)) = remaining.split_first() else {
            return u64::from(blocks == k);
        };
        if blocks >= k {
            return 0;
        }
        let m = rest.len();
        let mut total = 0;
        for mask in 1u32..(1 << m) {
            let left: Vec<usize> = (0..m)
                .filter(|&b| mask & (1 << b) == 0)
                .map(|b| rest[b])
                .collect();
            total += go(&left, blocks + 1, k);
        }
        total
    }
    let elements: Vec<usize> = (1..=n).collect();
    go(&elements, 0, k)
}

/// Triangle of partitions into blocks of size at least two, rows `0..=rows`,
/// from `{n,k} = k {n-1,k} + (n-1) {n-2,k-1}`.
pub fn assoc_stirling_triangle(rows: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(rows + 1);
    for n in 0..=rows {
        let mut row = vec![BigInt::zero(); n + 1];
        if n == 0 {
            row[0] = BigInt::from(1);
        }
        for (k, cell) in row.iter_mut().enumerate().skip(1) {
            let get = |r: usize, c: usize| -> BigInt {
                t.get(r)
                    .and_then(|row: &Vec<BigInt>| row.get(c).cloned())
                    .unwrap_or_default()
            };
            let mut v = BigInt::from(k) * get(n - 1, k);
            if n >= 2 {
                v += BigInt::from(n - 1) * get(n - 2, k - 1);
            }
            *cell = v;
        }
        t.push(row);
    }
    t
}
