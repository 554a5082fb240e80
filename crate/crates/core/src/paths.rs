//! Motzkin, Dyck and 2-colored Schröder paths, Flajolet's path weights, and
//! the bijection between super-augmented matchings and labeled Schröder paths.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::contfrac::ContinuedFraction;
use crate::error::{Error, Result};
use crate::matchings::{star_with, IndexedWeights, PerfectMatching, SuperMatching, VertexKind};
use crate::poly::VarId;
use crate::{Polynomial, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Rise,
    Fall,
    /// Motzkin level step `(1,0)`.
    Level,
    /// Long level step `(2,0)` with color 1 or 2.
    LongLevel(u8),
}

impl Step {
    pub fn width(self) -> usize {
        match self {
            Step::LongLevel(_) => 2,
            _ => 1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::Rise => 'R',
            Step::Fall => 'F',
            Step::Level => 'L',
            Step::LongLevel(1) => 'W',
            Step::LongLevel(_) => 'D',
        }
    }
}

/// A nonnegative lattice path from height 0 back to height 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

/// Schröder paths are lattice paths made of rises, falls and long level steps.
pub type SchroederPath = LatticePath;

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut h: i64 = 0;
        for (idx, s) in steps.iter().enumerate() {
            match s {
                Step::Rise => h += 1,
                Step::Fall => h -= 1,
                Step::LongLevel(c) if *c != 1 && *c != 2 => {
                    return Err(Error::InvalidPath(format!("color {c} at step {}", idx + 1)))
                }
                _ => {}
            }
            if h < 0 {
                return Err(Error::InvalidPath(format!(
                    "height goes negative at step {}",
                    idx + 1
                )));
            }
        }
        if h != 0 {
            return Err(Error::InvalidPath("path does not return to 0".into()));
        }
        Ok(LatticePath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Horizontal length.
    pub fn length(&self) -> usize {
        self.steps.iter().map(|s| s.width()).sum()
    }

    /// Heights at abscissae `0..=length`; `None` inside long level steps.
    pub fn heights(&self) -> Vec<Option<usize>> {
        let mut out = vec![Some(0)];
        let mut h = 0usize;
        for s in &self.steps {
            match s {
                Step::Rise => h += 1,
                Step::Fall => h -= 1,
                Step::Level => {}
                Step::LongLevel(_) => out.push(None),
            }
            out.push(Some(h));
        }
        out
    }

    /// Steps keyed by the abscissa at which they end their first unit, i.e.
    /// step `s_i` goes from abscissa `i-1`. Abscissae skipped by long level
    /// steps are absent.
    pub fn indexed_steps(&self) -> Vec<(usize, Step)> {
        let mut i = 1;
        let mut out = Vec::with_capacity(self.steps.len());
        for &s in &self.steps {
            out.push((i, s));
            i += s.width();
        }
        out
    }

    /// `(step, starting height)` pairs.
    fn with_heights(&self) -> impl Iterator<Item = (Step, usize)> + '_ {
        let mut h = 0usize;
        self.steps.iter().map(move |&s| {
            let start = h;
            match s {
                Step::Rise => h += 1,
                Step::Fall => h -= 1,
                _ => {}
            }
            (s, start)
        })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
            if s.width() == 2 {
                f.write_str(".")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath[{self}]")
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::new();
        let mut chars = s.trim().chars().peekable();
        while let Some(c) = chars.next() {
            let step = match c {
                'R' => Step::Rise,
                'F' => Step::Fall,
                'L' => Step::Level,
                'W' => Step::LongLevel(1),
                'D' => Step::LongLevel(2),
                other => return Err(Error::Parse(format!("unknown step {other:?}"))),
            };
            if step.width() == 2 && chars.next() != Some('.') {
                return Err(Error::Parse(
                    "long level step must be followed by '.'".into(),
                ));
            }
            steps.push(step);
        }
        LatticePath::new(steps)
    }
}

fn enumerate_paths(length: usize, alphabet: &[Step]) -> Vec<LatticePath> {
    fn go(
        remaining: usize,
        h: usize,
        alphabet: &[Step],
        cur: &mut Vec<Step>,
        out: &mut Vec<LatticePath>,
    ) {
        if remaining == 0 {
            if h == 0 {
                out.push(LatticePath { steps: cur.clone() });
            }
            return;
        }
        if h > remaining {
            return;
        }
        for &s in alphabet {
            if s.width() > remaining {
                continue;
            }
            let nh = match s {
                Step::Rise => h + 1,
                Step::Fall if h == 0 => continue,
                Step::Fall => h - 1,
                _ => h,
            };
            cur.push(s);
            go(remaining - s.width(), nh, alphabet, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(length, 0, alphabet, &mut Vec::new(), &mut out);
    out
}

/// Motzkin paths of length `n`.
pub fn enumerate_motzkin(n: usize) -> Vec<LatticePath> {
    enumerate_paths(n, &[Step::Rise, Step::Fall, Step::Level])
}

/// Dyck paths of length `2n`.
pub fn enumerate_dyck(n: usize) -> Vec<LatticePath> {
    enumerate_paths(2 * n, &[Step::Rise, Step::Fall])
}

/// Schröder paths of length `2n` with long level steps in `colors` colors (1 or 2).
pub fn enumerate_schroeder(n: usize, colors: u8) -> Vec<LatticePath> {
    let mut alphabet = vec![Step::Rise, Step::Fall];
    alphabet.extend((1..=colors).map(Step::LongLevel));
    enumerate_paths(2 * n, &alphabet)
}

/// 2-colored Schröder paths of length `2n`.
pub fn enumerate_schroeder2(n: usize) -> Vec<LatticePath> {
    enumerate_schroeder(n, 2)
}

type HeightWeight = Arc<dyn Fn(usize) -> Polynomial + Send + Sync>;

/// Height-dependent step weights: a rise from height `h` gets `a(h)`, a fall
/// from `h` gets `b(h)`, a level step at `h` gets `c1(h)` (Motzkin or color 1)
/// or `c2(h)` (color 2).
#[derive(Clone)]
pub struct FlajoletWeights {
    pub a: HeightWeight,
    pub b: HeightWeight,
    pub c1: HeightWeight,
    pub c2: HeightWeight,
}

impl FlajoletWeights {
    pub fn new(
        a: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
        b: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
        c1: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
        c2: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
    ) -> Self {
        FlajoletWeights {
            a: Arc::new(a),
            b: Arc::new(b),
            c1: Arc::new(c1),
            c2: Arc::new(c2),
        }
    }

    /// Indeterminates `a[h]`, `b[h]`, `c[h]`, `d[h]`.
    pub fn symbolic() -> Self {
        let sym =
            |name: &'static str| move |h: usize| Polynomial::var(VarId::indexed(name, &[h as u32]));
        Self::new(sym("a"), sym("b"), sym("c"), sym("d"))
    }
}

/// Product of the step weights of `path`.
pub fn flajolet_weight(path: &LatticePath, w: &FlajoletWeights) -> Polynomial {
    let mut acc = Polynomial::one();
    for (s, h) in path.with_heights() {
        let f = match s {
            Step::Rise => (w.a)(h),
            Step::Fall => (w.b)(h),
            Step::Level | Step::LongLevel(1) => (w.c1)(h),
            Step::LongLevel(_) => (w.c2)(h),
        };
        acc = &acc * &f;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Path families with a continued-fraction generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathFamily {
    /// Counted by length; J-fraction.
    Motzkin,
    /// Counted by semi-length; S-fraction.
    Dyck,
    /// 2-colored, counted by semi-length; T-fraction.
    Schroeder,
}

/// Both sides of Flajolet's theorem: the weighted path sum and the continued fraction.
pub fn flajolet_sides(family: PathFamily, order: usize, w: &FlajoletWeights) -> (Series, Series) {
    let mut sums = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let paths = match family {
            PathFamily::Motzkin => enumerate_motzkin(n),
            PathFamily::Dyck => enumerate_dyck(n),
            PathFamily::Schroeder => enumerate_schroeder2(n),
        };
        sums.push(paths.iter().map(|p| flajolet_weight(p, w)).sum());
    }
    let lhs = Series::new(order, sums).expect("weights are t-free");
    let (a, b, c1, c2) = (w.a.clone(), w.b.clone(), w.c1.clone(), w.c2.clone());
    let cf = match family {
        PathFamily::Motzkin => ContinuedFraction::j(move |i| c1(i), move |i| &a(i - 1) * &b(i)),
        PathFamily::Dyck => ContinuedFraction::s(move |i| &a(i - 1) * &b(i)),
        PathFamily::Schroeder => {
            ContinuedFraction::t(move |i| &a(i - 1) * &b(i), move |i| c1(i - 1) + c2(i - 1))
        }
    };
    (lhs, cf.expand(order))
}

pub fn flajolet_check(family: PathFamily, order: usize, w: &FlajoletWeights) -> bool {
    let (lhs, rhs) = flajolet_sides(family, order, w);
    lhs == rhs
}

/// A 2-colored Schröder path with one label per step, bounded by the height
/// before the step: rises `1`, falls and color-1 levels `h`, color-2 levels `h+1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledSchroederPath {
    path: LatticePath,
    labels: Vec<usize>,
}

/// Upper bound on the label of `step` starting at height `h`.
pub fn label_bound(step: Step, h: usize) -> usize {
    match step {
        Step::Rise => 1,
        Step::Fall | Step::LongLevel(1) => h,
        Step::LongLevel(_) => h + 1,
        Step::Level => 0,
    }
}

impl LabeledSchroederPath {
    pub fn new(path: LatticePath, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != path.steps.len() {
            return Err(Error::InvalidPath(format!(
                "{} labels for {} steps",
                labels.len(),
                path.steps.len()
            )));
        }
        for ((i, (s, h)), &xi) in path
            .indexed_steps()
            .iter()
            .map(|&(i, _)| i)
            .zip(path.with_heights())
            .zip(&labels)
        {
            if s == Step::Level {
                return Err(Error::InvalidPath(
                    "Motzkin level step in a Schröder path".into(),
                ));
            }
            let bound = label_bound(s, h);
            if xi < 1 || xi > bound {
                return Err(Error::LabelOutOfBounds {
                    step: i,
                    label: xi,
                    bound,
                });
            }
        }
        Ok(LabeledSchroederPath { path, labels })
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    /// Labels in step order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Labels keyed by abscissa `i` of step `s_i`.
    pub fn labels_by_abscissa(&self) -> BTreeMap<usize, usize> {
        self.path
            .indexed_steps()
            .iter()
            .zip(&self.labels)
            .map(|(&(i, _), &xi)| (i, xi))
            .collect()
    }
}

impl fmt::Display for LabeledSchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (s, xi) in self.path.steps.iter().zip(&self.labels) {
            parts.push(xi.to_string());
            if s.width() == 2 {
                parts.push(".".into());
            }
        }
        write!(f, "{} labels=[{}]", self.path, parts.join(","))
    }
}

impl fmt::Debug for LabeledSchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LabeledSchroederPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (steps, labels) = s
            .trim()
            .split_once("labels=")
            .ok_or_else(|| Error::Parse("expected '<steps> labels=[...]'".into()))?;
        let path: LatticePath = steps.parse()?;
        let inner = labels
            .trim()
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(|| Error::Parse("labels must be bracketed".into()))?;
        let labels = inner
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty() && *x != ".")
            .map(|x| {
                x.parse()
                    .map_err(|_| Error::Parse(format!("bad label {x:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        LabeledSchroederPath::new(path, labels)
    }
}

/// Every labeled 2-colored Schröder path of length `2n`: step sequences in
/// enumeration order, then label vectors lexicographically.
pub fn enumerate_labeled(n: usize) -> Vec<LabeledSchroederPath> {
    let mut out = Vec::new();
    for path in enumerate_schroeder2(n) {
        let bounds: Vec<usize> = path
            .with_heights()
            .map(|(s, h)| label_bound(s, h))
            .collect();
        if bounds.contains(&0) {
            continue;
        }
        let mut labels = vec![1; bounds.len()];
        loop {
            out.push(LabeledSchroederPath {
                path: path.clone(),
                labels: labels.clone(),
            });
            let mut k = labels.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                if labels[k] < bounds[k] {
                    labels[k] += 1;
                    break;
                }
                labels[k] = 1;
            }
            if labels.iter().all(|&l| l == 1) {
                break;
            }
        }
    }
    out
}

/// Rank (1-based) of `opener` among the open openers, listed in increasing order.
fn rank(open: &[usize], opener: usize) -> usize {
    open.iter()
        .position(|&o| o == opener)
        .expect("arch is open")
        + 1
}

/// The bijection from super-augmented matchings to labeled Schröder paths.
pub fn matching_to_path(tau: &SuperMatching) -> LabeledSchroederPath {
    let pi = tau.base();
    let mut open: Vec<usize> = Vec::new();
    let mut steps = Vec::new();
    let mut labels = Vec::new();
    let mut i = 1;
    while i <= tau.size() {
        match tau.vertex_kind(i) {
            VertexKind::PureOpener => {
                steps.push(Step::Rise);
                labels.push(1);
                open.push(i);
                i += 1;
            }
            VertexKind::PureCloser => {
                steps.push(Step::Fall);
                labels.push(rank(&open, pi.partner(i)));
                open.retain(|&o| o != pi.partner(i));
                i += 1;
            }
            VertexKind::WigglyCloser => {
                steps.push(Step::LongLevel(1));
                labels.push(rank(&open, pi.partner(i)));
                open.retain(|&o| o != pi.partner(i));
                open.push(i + 1);
                i += 2;
            }
            VertexKind::DashedOpener => {
                steps.push(Step::LongLevel(2));
                if pi.partner(i) == i + 1 {
                    labels.push(open.len() + 1);
                } else {
                    let mate = pi.partner(i + 1);
                    labels.push(rank(&open, mate));
                    open.retain(|&o| o != mate);
                    open.push(i);
                }
                i += 2;
            }
            VertexKind::WigglyOpener | VertexKind::DashedCloser => {
                unreachable!("second vertex of a decorated pair is consumed with the first")
            }
        }
    }
    LabeledSchroederPath {
        path: LatticePath { steps },
        labels,
    }
}

/// Inverse of [`matching_to_path`].
pub fn path_to_matching(lp: &LabeledSchroederPath) -> Result<SuperMatching> {
    let lp = LabeledSchroederPath::new(lp.path.clone(), lp.labels.clone())?;
    let size = lp.path.length();
    let mut partner = vec![0usize; size];
    let mut open: Vec<usize> = Vec::new();
    let mut wiggly = Vec::new();
    let mut dashed = Vec::new();
    let pair = |a: usize, b: usize, partner: &mut Vec<usize>| {
        partner[a - 1] = b;
        partner[b - 1] = a;
    };
    for ((i, s), &xi) in lp.path.indexed_steps().into_iter().zip(&lp.labels) {
        match s {
            Step::Rise => open.push(i),
            Step::Fall => {
                let o = open.remove(xi - 1);
                pair(o, i, &mut partner);
            }
            Step::LongLevel(1) => {
                let o = open.remove(xi - 1);
                pair(o, i, &mut partner);
                open.push(i + 1);
                wiggly.push(i);
            }
            Step::LongLevel(_) => {
                if xi == open.len() + 1 {
                    pair(i, i + 1, &mut partner);
                } else {
                    let o = open.remove(xi - 1);
                    pair(o, i + 1, &mut partner);
                    open.push(i);
                }
                dashed.push(i);
            }
            Step::Level => unreachable!("rejected by validation"),
        }
        open.sort_unstable();
    }
    SuperMatching::new(PerfectMatching::from_partners(partner)?, wiggly, dashed)
}

/// Checks that every defined height of the image path counts the arches
/// `(j, k)` with `j <= i < k`.
pub fn verify_heights(tau: &SuperMatching) -> bool {
    let pi = tau.base();
    let lp = matching_to_path(tau);
    lp.path.heights().iter().enumerate().all(|(i, h)| match h {
        None => true,
        Some(h) => {
            *h == pi
                .arches()
                .iter()
                .filter(|&&(j, k)| j <= i && i < k)
                .count()
        }
    })
}

/// Checks how `qne`, `cr`, `ne` are read off heights and labels of the image path.
pub fn verify_statistics(tau: &SuperMatching) -> bool {
    let pi = tau.base();
    let lp = matching_to_path(tau);
    let heights = lp.path.heights();
    for ((i, s), &xi) in lp.path.indexed_steps().into_iter().zip(&lp.labels) {
        let Some(h) = heights[i - 1] else {
            return false;
        };
        let ok = match s {
            Step::Rise => pi.qne(i) == h,
            Step::Fall | Step::LongLevel(1) => xi <= h && pi.cr(i) == h - xi && pi.ne(i) == xi - 1,
            Step::LongLevel(_) => pi.cr(i + 1) == h + 1 - xi && pi.ne(i + 1) == xi - 1,
            Step::Level => false,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Weight of a labeled path read through the statistics translation:
/// rises `a_h`, falls `b_{h-xi, xi-1}`, color-1 levels `f_{h-xi, xi-1}`,
/// color-2 levels `g_{h+1-xi, xi-1}`.
pub fn labeled_path_weight(lp: &LabeledSchroederPath, w: &IndexedWeights) -> Polynomial {
    let mut acc = Polynomial::one();
    for ((s, h), &xi) in lp.path.with_heights().zip(&lp.labels) {
        let f = match s {
            Step::Rise => (w.a)(h),
            Step::Fall => (w.b)(h - xi, xi - 1),
            Step::LongLevel(1) => (w.f)(h - xi, xi - 1),
            Step::LongLevel(_) => (w.g)(h + 1 - xi, xi - 1),
            Step::Level => Polynomial::zero(),
        };
        acc = &acc * &f;
    }
    acc
}

/// Sums the matching weights over labels: `a_k`, `b*_{k-1}`, `f*_{k-1}`, `g*_k`.
pub fn label_summed_weights(w: &IndexedWeights) -> FlajoletWeights {
    let (a, b, f, g) = (w.a.clone(), w.b.clone(), w.f.clone(), w.g.clone());
    FlajoletWeights::new(
        move |k| a(k),
        move |k| star_with(|l, m| b(l, m), k as i64 - 1),
        move |k| star_with(|l, m| f(l, m), k as i64 - 1),
        move |k| star_with(|l, m| g(l, m), k as i64),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::enumerate_super;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    const FIG: &str = "pairs=(1,4)(2,8)(3,5)(6,12)(7,11)(9,10); wiggly={5}; dashed={3,9}";

    #[test]
    fn path_counts() {
        let dyck: Vec<usize> = (0..=4).map(|n| enumerate_dyck(n).len()).collect();
        assert_eq!(dyck, [1, 1, 2, 5, 14]);
        let motzkin: Vec<usize> = (0..=4).map(|n| enumerate_motzkin(n).len()).collect();
        assert_eq!(motzkin, [1, 1, 2, 4, 9]);
        let schroeder: Vec<usize> = (0..=3).map(|n| enumerate_schroeder(n, 1).len()).collect();
        assert_eq!(schroeder, [1, 2, 6, 22]);
    }

    #[test]
    fn simple_weights() {
        let w = FlajoletWeights::symbolic();
        assert_eq!(flajolet_weight(&"".parse().unwrap(), &w), Polynomial::one());
        assert_eq!(flajolet_weight(&"L".parse().unwrap(), &w), p("c[0]"));
        assert_eq!(flajolet_weight(&"RF".parse().unwrap(), &w), p("a[0]*b[1]"));
        assert_eq!(flajolet_weight(&"D.".parse().unwrap(), &w), p("d[0]"));
    }

    #[test]
    fn flajolet_zero_weights() {
        let zero = FlajoletWeights::new(
            |_| Polynomial::zero(),
            |_| Polynomial::zero(),
            |_| Polynomial::zero(),
            |_| Polynomial::zero(),
        );
        for fam in [PathFamily::Motzkin, PathFamily::Dyck, PathFamily::Schroeder] {
            let (l, r) = flajolet_sides(fam, 3, &zero);
            assert_eq!(l, Series::one(3));
            assert_eq!(r, Series::one(3));
        }
    }

    #[test]
    fn figure_two() {
        let tau: SuperMatching = FIG.parse().unwrap();
        let lp = matching_to_path(&tau);
        assert_eq!(
            lp.to_string(),
            "RRD.W.RFD.FF labels=[1,1,1,.,2,.,1,1,3,.,2,1]"
        );
        let heights: Vec<Option<usize>> = lp.path().heights()[1..].to_vec();
        let expected = [
            Some(1),
            Some(2),
            None,
            Some(2),
            None,
            Some(2),
            Some(3),
            Some(2),
            None,
            Some(2),
            Some(1),
            Some(0),
        ];
        assert_eq!(heights, expected);
        assert_eq!(path_to_matching(&lp).unwrap(), tau);
        assert!(verify_heights(&tau) && verify_statistics(&tau));
        let parsed: LabeledSchroederPath = lp.to_string().parse().unwrap();
        assert_eq!(parsed, lp);
    }

    #[test]
    fn single_arch() {
        let empty = matching_to_path(&SuperMatching::bare(PerfectMatching::empty()));
        assert_eq!(
            empty.to_string().parse::<LabeledSchroederPath>().unwrap(),
            empty
        );
        let bare: SuperMatching = "pairs=(1,2); wiggly={}; dashed={}".parse().unwrap();
        assert_eq!(matching_to_path(&bare).to_string(), "RF labels=[1,1]");
        let dashed: SuperMatching = "pairs=(1,2); wiggly={}; dashed={1}".parse().unwrap();
        let lp = matching_to_path(&dashed);
        assert_eq!(lp.to_string(), "D. labels=[1,.]");
        assert_eq!(path_to_matching(&lp).unwrap(), dashed);
    }

    #[test]
    fn label_bounds_enforced() {
        let path: LatticePath = "RF".parse().unwrap();
        assert!(matches!(
            LabeledSchroederPath::new(path.clone(), vec![1, 2]),
            Err(Error::LabelOutOfBounds {
                step: 2,
                label: 2,
                bound: 1
            })
        ));
        assert!(LabeledSchroederPath::new(path, vec![2, 1]).is_err());
        assert!("W. labels=[1,.]".parse::<LabeledSchroederPath>().is_err());
    }

    #[test]
    fn roundtrip_small() {
        for n in 0..=3 {
            let taus = enumerate_super(n);
            let labeled = enumerate_labeled(n);
            assert_eq!(taus.len(), labeled.len());
            for tau in &taus {
                assert_eq!(&path_to_matching(&matching_to_path(tau)).unwrap(), tau);
            }
            for lp in &labeled {
                assert_eq!(&matching_to_path(&path_to_matching(lp).unwrap()), lp);
            }
        }
    }

    #[test]
    fn summed_weights() {
        let w = label_summed_weights(&IndexedWeights::symbolic());
        assert_eq!((w.b)(1), p("b[0,0]"));
        assert_eq!((w.c2)(0), p("g[0,0]"));
        assert_eq!((w.c1)(1), p("f[0,0]"));
        assert_eq!((w.c2)(1), p("g[0,1] + g[1,0]"));
        assert!((w.c1)(0).is_zero());
    }
}
