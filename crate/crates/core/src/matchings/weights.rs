//! Generating polynomials of (super-augmented) matchings and the matching
//! continued fractions they are compared against.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::FromPrimitive;

use super::decorated::{enumerate_augmented, enumerate_super, SuperMatching, VertexKind};
use super::{enumerate_matchings, PerfectMatching};
use crate::contfrac::ContinuedFraction;
use crate::poly::{Monomial, VarId};
use crate::{Polynomial, Rational};

type Single = Arc<dyn Fn(usize) -> Polynomial + Send + Sync>;
type Double = Arc<dyn Fn(usize, usize) -> Polynomial + Send + Sync>;

/// The weight families `a_l`, `b_{l,l'}`, `f_{l,l'}`, `g_{l,l'}`.
#[derive(Clone)]
pub struct IndexedWeights {
    pub a: Single,
    pub b: Double,
    pub f: Double,
    pub g: Double,
}

fn indexed(name: &'static str) -> Double {
    Arc::new(move |l, m| Polynomial::var(VarId::indexed(name, &[l as u32, m as u32])))
}

impl IndexedWeights {
    /// Fresh indeterminates `a[l]`, `b[l,m]`, `f[l,m]`, `g[l,m]`.
    pub fn symbolic() -> Self {
        IndexedWeights {
            a: Arc::new(|l| Polynomial::var(VarId::indexed("a", &[l as u32]))),
            b: indexed("b"),
            f: indexed("f"),
            g: indexed("g"),
        }
    }

    /// Symbolic `a`, `b` with `f = g = 0`, so decorations get weight zero.
    pub fn undecorated() -> Self {
        IndexedWeights {
            f: Arc::new(|_, _| Polynomial::zero()),
            g: Arc::new(|_, _| Polynomial::zero()),
            ..Self::symbolic()
        }
    }

    pub fn new(
        a: impl Fn(usize) -> Polynomial + Send + Sync + 'static,
        b: impl Fn(usize, usize) -> Polynomial + Send + Sync + 'static,
        f: impl Fn(usize, usize) -> Polynomial + Send + Sync + 'static,
        g: impl Fn(usize, usize) -> Polynomial + Send + Sync + 'static,
    ) -> Self {
        IndexedWeights {
            a: Arc::new(a),
            b: Arc::new(b),
            f: Arc::new(f),
            g: Arc::new(g),
        }
    }

    fn factor(&self, w: &WeightFactor) -> Polynomial {
        match *w {
            WeightFactor::A(l) => (self.a)(l as usize),
            WeightFactor::B(l, m) => (self.b)(l as usize, m as usize),
            WeightFactor::F(l, m) => (self.f)(l as usize, m as usize),
            WeightFactor::G(l, m) => (self.g)(l as usize, m as usize),
        }
    }
}

/// Anti-diagonal sum `sum_{l=0}^{m} w(l, m-l)`; zero for `m < 0`.
pub fn star_with(w: impl Fn(usize, usize) -> Polynomial, m: i64) -> Polynomial {
    if m < 0 {
        return Polynomial::zero();
    }
    let m = m as usize;
    (0..=m).map(|l| w(l, m - l)).sum()
}

/// [`star_with`] on the indeterminates `name[l, m-l]`.
pub fn star(name: &str, m: i64) -> Polynomial {
    star_with(
        |l, k| Polynomial::var(VarId::indexed(name, &[l as u32, k as u32])),
        m,
    )
}

/// One factor in the weight of a super-augmented matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeightFactor {
    A(u32),
    B(u32, u32),
    F(u32, u32),
    G(u32, u32),
}

/// The multiset of weight factors of `tau`: `a_qne` per pure opener,
/// `b_{cr,ne}` per pure closer, `f_{cr,ne}` per wiggly pair (at its closer)
/// and `g_{cr,ne}` per dashed pair (at its closer).
pub fn weight_signature(tau: &SuperMatching) -> Vec<WeightFactor> {
    let pi = tau.base();
    let mut out = Vec::with_capacity(tau.size());
    for i in 1..=tau.size() {
        let (c, e) = (pi.cr(i) as u32, pi.ne(i) as u32);
        match tau.vertex_kind(i) {
            VertexKind::PureOpener => out.push(WeightFactor::A(pi.qne(i) as u32)),
            VertexKind::PureCloser => out.push(WeightFactor::B(c, e)),
            VertexKind::WigglyCloser => out.push(WeightFactor::F(c, e)),
            VertexKind::DashedCloser => out.push(WeightFactor::G(c, e)),
            VertexKind::WigglyOpener | VertexKind::DashedOpener => {}
        }
    }
    out.sort_unstable();
    out
}

fn sum_signatures<'a>(
    taus: impl Iterator<Item = &'a SuperMatching>,
    w: &IndexedWeights,
) -> Polynomial {
    let mut counts: HashMap<Vec<WeightFactor>, u64> = HashMap::new();
    for tau in taus {
        *counts.entry(weight_signature(tau)).or_default() += 1;
    }
    let mut cache: HashMap<WeightFactor, Polynomial> = HashMap::new();
    let mut total = Polynomial::zero();
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort_unstable();
    for (sig, count) in keys {
        let mut term = Polynomial::constant(Rational::from_u64(count).expect("count"));
        for f in &sig {
            let p = cache.entry(*f).or_insert_with(|| w.factor(f));
            term = &term * p;
            if term.is_zero() {
                break;
            }
        }
        total += &term;
    }
    total
}

/// Brute-force master polynomial of super-augmented matchings of `[2n]`.
pub fn master_poly_t(n: usize, w: &IndexedWeights) -> Polynomial {
    sum_signatures(enumerate_super(n).iter(), w)
}

/// Brute-force master polynomial of undecorated matchings:
/// `prod a_qne` over openers times `prod b_{cr,ne}` over closers.
pub fn master_poly_s(n: usize, w: &IndexedWeights) -> Polynomial {
    let bare: Vec<SuperMatching> = enumerate_matchings(n)
        .into_iter()
        .map(SuperMatching::bare)
        .collect();
    sum_signatures(bare.iter(), w)
}

/// The T-fraction `alpha_n = a_{n-1} b*_{n-1}`, `delta_n = f*_{n-2} + g*_{n-1}`.
pub fn master_cf(w: &IndexedWeights) -> ContinuedFraction {
    let (a, b, f, g) = (w.a.clone(), w.b.clone(), w.f.clone(), w.g.clone());
    ContinuedFraction::t(
        move |n| &a(n - 1) * &star_with(|l, m| b(l, m), n as i64 - 1),
        move |n| star_with(|l, m| f(l, m), n as i64 - 2) + star_with(|l, m| g(l, m), n as i64 - 1),
    )
}

/// `[n]_{p,q} = sum_{j<n} p^j q^{n-1-j}`.
pub fn pq_bracket(p: &Polynomial, q: &Polynomial, n: usize) -> Polynomial {
    (0..n)
        .map(|j| &p.pow(j as u32) * &q.pow((n - 1 - j) as u32))
        .sum()
}

fn sym(s: &str) -> Polynomial {
    Polynomial::sym(s)
}

const PRIMES: [&str; 3] = ["", "'", "''"];

/// Number of primes for the class of closer `k`: 0 pure, 1 wiggly, 2 dashed.
fn closer_class(tau: &SuperMatching, k: usize) -> Option<usize> {
    match tau.vertex_kind(k) {
        VertexKind::PureCloser => Some(0),
        VertexKind::WigglyCloser => Some(1),
        VertexKind::DashedCloser => Some(2),
        _ => None,
    }
}

/// The 18-variable refinement, computed from closer parity, antirecords and
/// per-class crossing/nesting totals.
pub fn poly_18var(n: usize) -> Polynomial {
    let names: Vec<[VarId; 6]> = PRIMES
        .iter()
        .map(|pr| ["x", "y", "u", "v", "p", "q"].map(|base| VarId::new(&format!("{base}{pr}"))))
        .collect();
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for tau in enumerate_super(n) {
        let pi = tau.base();
        let mut pairs = Vec::new();
        for k in 1..=tau.size() {
            let Some(class) = closer_class(&tau, k) else {
                continue;
            };
            let vars = &names[class];
            let antirecord = pi.is_antirecord(k).expect("closer");
            let letter = match (k % 2 == 0, antirecord) {
                (true, true) => vars[0],
                (false, true) => vars[1],
                (true, false) => vars[2],
                (false, false) => vars[3],
            };
            pairs.push((letter, 1));
            pairs.push((vars[4], pi.cr(k) as u32));
            pairs.push((vars[5], pi.ne(k) as u32));
        }
        *counts.entry(Monomial::from_pairs(pairs)).or_default() += 1;
    }
    Polynomial::from_terms(
        counts
            .into_iter()
            .map(|(m, c)| (m, Rational::from_u64(c).expect("count"))),
    )
}

/// Collapses `y -> x`, `v -> u` in each of the three primed classes.
pub fn specialize_12var(p: &Polynomial) -> Polynomial {
    let mut bindings = BTreeMap::new();
    for pr in PRIMES {
        bindings.insert(VarId::new(&format!("y{pr}")), sym(&format!("x{pr}")));
        bindings.insert(VarId::new(&format!("v{pr}")), sym(&format!("u{pr}")));
    }
    p.substitute(&bindings)
}

/// The 12-variable polynomial: [`poly_18var`] with parities forgotten.
pub fn poly_12var(n: usize) -> Polynomial {
    specialize_12var(&poly_18var(n))
}

/// `p^m X + q [m]_{p,q} U` for even `m`, `p^m Y + q [m]_{p,q} V` for odd `m`.
fn parity_weight(pr: &str, m: usize) -> Polynomial {
    let s = |b: &str| sym(&format!("{b}{pr}"));
    let (p, q) = (s("p"), s("q"));
    let (lead, rest) = if m % 2 == 0 { ("x", "u") } else { ("y", "v") };
    &p.pow(m as u32) * &s(lead) + &(&q * &pq_bracket(&p, &q, m)) * &s(rest)
}

/// T-fraction for the 18-variable polynomials.
pub fn cf_18var() -> ContinuedFraction {
    ContinuedFraction::t(
        |n| parity_weight("", n - 1),
        |n| {
            let wiggly = if n >= 2 {
                parity_weight("'", n - 2)
            } else {
                Polynomial::zero()
            };
            wiggly + parity_weight("''", n - 1)
        },
    )
}

fn plain_weight(pr: &str, m: usize) -> Polynomial {
    let s = |b: &str| sym(&format!("{b}{pr}"));
    let (p, q) = (s("p"), s("q"));
    &p.pow(m as u32) * &s("x") + &(&q * &pq_bracket(&p, &q, m)) * &s("u")
}

/// T-fraction for the 12-variable polynomials.
pub fn cf_12var() -> ContinuedFraction {
    ContinuedFraction::t(
        |n| plain_weight("", n - 1),
        |n| {
            let wiggly = if n >= 2 {
                plain_weight("'", n - 2)
            } else {
                Polynomial::zero()
            };
            wiggly + plain_weight("''", n - 1)
        },
    )
}

/// The 12-variable T-fraction after `u' = x'`.
pub fn cf_12var_bis1() -> ContinuedFraction {
    ContinuedFraction::t(
        |n| plain_weight("", n - 1),
        |n| &pq_bracket(&sym("p'"), &sym("q'"), n - 1) * &sym("x'") + plain_weight("''", n - 1),
    )
}

/// The 12-variable T-fraction after `u = x`, `u' = x'`, `u'' = x''`.
pub fn cf_12var_bis2() -> ContinuedFraction {
    ContinuedFraction::t(
        |n| &pq_bracket(&sym("p"), &sym("q"), n) * &sym("x"),
        |n| {
            &pq_bracket(&sym("p'"), &sym("q'"), n - 1) * &sym("x'")
                + &pq_bracket(&sym("p''"), &sym("q''"), n) * &sym("x''")
        },
    )
}

/// Generating polynomial of super-augmented matchings of `[2n]` in the
/// variables `x, u, z, w', w''`: pure closers get `x` (no crossing) or `u`,
/// dashed lines get `z` (same arch) or `w''`, wiggly lines get `w'`.
pub fn generalized_ward_oracle(n: usize) -> Polynomial {
    let [x, u, z, w1, w2] = ["x", "u", "z", "w'", "w''"].map(VarId::new);
    let mut counts: HashMap<Monomial, u64> = HashMap::new();
    for tau in enumerate_super(n) {
        let pi = tau.base();
        let mut pairs = Vec::new();
        for i in 1..=tau.size() {
            if tau.vertex_kind(i) == VertexKind::PureCloser {
                pairs.push((if pi.cr(i) == 0 { x } else { u }, 1));
            }
        }
        for &i in tau.dashed() {
            pairs.push((if tau.dashed_is_same_arch(i) { z } else { w2 }, 1));
        }
        pairs.push((w1, tau.wiggly().len() as u32));
        *counts.entry(Monomial::from_pairs(pairs)).or_default() += 1;
    }
    Polynomial::from_terms(
        counts
            .into_iter()
            .map(|(m, c)| (m, Rational::from_u64(c).expect("count"))),
    )
}

/// Closer-opener adjacencies of `pi`.
pub fn clop_count(pi: &PerfectMatching) -> usize {
    pi.clop()
}

/// Number of perfect matchings of `[2n]` with exactly `l` closer-opener adjacencies.
pub fn count_mprime(n: usize, l: usize) -> u64 {
    enumerate_matchings(n)
        .iter()
        .filter(|pi| pi.clop() == l)
        .count() as u64
}

/// Number of augmented matchings of `[2n]` with exactly `l` wiggly lines.
pub fn count_augmented(n: usize, l: usize) -> u64 {
    enumerate_augmented(n)
        .iter()
        .filter(|tau| tau.wiggly().len() == l)
        .count() as u64
}
