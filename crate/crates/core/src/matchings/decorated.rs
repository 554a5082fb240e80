use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::{enumerate_matchings, PerfectMatching};
use crate::error::{Error, Result};

/// Role of a vertex in a super-augmented matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    PureOpener,
    PureCloser,
    /// Closer `i` of a wiggly pair `(i, i+1)`.
    WigglyCloser,
    /// Opener `i+1` of a wiggly pair `(i, i+1)`.
    WigglyOpener,
    /// Opener `i` of a dashed pair `(i, i+1)`.
    DashedOpener,
    /// Closer `i+1` of a dashed pair `(i, i+1)`.
    DashedCloser,
}

/// A perfect matching with wiggly lines on some closer-opener pairs `(i, i+1)`
/// and dashed lines on some opener-closer pairs, no vertex carrying two lines.
///
/// Decorations are recorded by the left endpoint `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuperMatching {
    base: PerfectMatching,
    wiggly: BTreeSet<usize>,
    dashed: BTreeSet<usize>,
}

impl SuperMatching {
    pub fn new(
        base: PerfectMatching,
        wiggly: impl IntoIterator<Item = usize>,
        dashed: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let wiggly: BTreeSet<usize> = wiggly.into_iter().collect();
        let dashed: BTreeSet<usize> = dashed.into_iter().collect();
        let size = base.size();
        for &i in &wiggly {
            if i == 0 || i >= size || !base.is_closer(i) || !base.is_opener(i + 1) {
                return Err(Error::InvalidMatching(format!(
                    "wiggly line at ({i},{}) needs a closer followed by an opener",
                    i + 1
                )));
            }
        }
        for &i in &dashed {
            if i == 0 || i >= size || !base.is_opener(i) || !base.is_closer(i + 1) {
                return Err(Error::InvalidMatching(format!(
                    "dashed line at ({i},{}) needs an opener followed by a closer",
                    i + 1
                )));
            }
        }
        let all: Vec<usize> = wiggly.iter().chain(&dashed).copied().collect();
        for &i in &all {
            if all.contains(&(i + 1)) {
                return Err(Error::InvalidMatching(format!(
                    "vertex {} carries two decorations",
                    i + 1
                )));
            }
        }
        Ok(SuperMatching {
            base,
            wiggly,
            dashed,
        })
    }

    pub fn bare(base: PerfectMatching) -> Self {
        SuperMatching {
            base,
            wiggly: BTreeSet::new(),
            dashed: BTreeSet::new(),
        }
    }

    pub fn base(&self) -> &PerfectMatching {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn size(&self) -> usize {
        self.base.size()
    }

    pub fn wiggly(&self) -> &BTreeSet<usize> {
        &self.wiggly
    }

    pub fn dashed(&self) -> &BTreeSet<usize> {
        &self.dashed
    }

    pub fn is_augmented(&self) -> bool {
        self.dashed.is_empty()
    }

    pub fn vertex_kind(&self, i: usize) -> VertexKind {
        if self.wiggly.contains(&i) {
            VertexKind::WigglyCloser
        } else if i > 1 && self.wiggly.contains(&(i - 1)) {
            VertexKind::WigglyOpener
        } else if self.dashed.contains(&i) {
            VertexKind::DashedOpener
        } else if i > 1 && self.dashed.contains(&(i - 1)) {
            VertexKind::DashedCloser
        } else if self.base.is_opener(i) {
            VertexKind::PureOpener
        } else {
            VertexKind::PureCloser
        }
    }

    /// Same-arch dashed pair: `(i, i+1)` is itself an arch.
    pub fn dashed_is_same_arch(&self, i: usize) -> bool {
        self.base.partner(i) == i + 1
    }
}

impl fmt::Display for SuperMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &BTreeSet<usize>| {
            s.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "pairs={}; wiggly={{{}}}; dashed={{{}}}",
            self.base,
            set(&self.wiggly),
            set(&self.dashed)
        )
    }
}

impl fmt::Debug for SuperMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_set(s: &str) -> Result<Vec<usize>> {
    let inner = s
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected {{...}}, got {s:?}")))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad position {x:?}")))
        })
        .collect()
}

impl FromStr for SuperMatching {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = None;
        let mut wiggly = Vec::new();
        let mut dashed = Vec::new();
        for field in s.split(';') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {field:?}")))?;
            match key.trim() {
                "pairs" => {
                    let mut arches = Vec::new();
                    let body = value.trim();
                    for chunk in body.split(')').filter(|c| !c.trim().is_empty()) {
                        let inner = chunk
                            .trim()
                            .strip_prefix('(')
                            .ok_or_else(|| Error::Parse(format!("bad pair {chunk:?}")))?;
                        let (a, b) = inner
                            .split_once(',')
                            .ok_or_else(|| Error::Parse(format!("bad pair {chunk:?}")))?;
                        let a = a.trim().parse().map_err(|_| Error::Parse(a.into()))?;
                        let b = b.trim().parse().map_err(|_| Error::Parse(b.into()))?;
                        arches.push((a, b));
                    }
                    pairs = Some(PerfectMatching::from_arches(&arches)?);
                }
                "wiggly" => wiggly = parse_set(value)?,
                "dashed" => dashed = parse_set(value)?,
                other => return Err(Error::Parse(format!("unknown field {other:?}"))),
            }
        }
        let base = pairs.ok_or_else(|| Error::Parse("missing pairs=".into()))?;
        SuperMatching::new(base, wiggly, dashed)
    }
}

fn decorate(base: &PerfectMatching, allow_dashed: bool, out: &mut Vec<SuperMatching>) {
    let size = base.size();
    let candidates: Vec<usize> = (1..size)
        .filter(|&i| {
            let wig = base.is_closer(i) && base.is_opener(i + 1);
            let dash = base.is_opener(i) && base.is_closer(i + 1);
            wig || (allow_dashed && dash)
        })
        .collect();
    fn go(
        base: &PerfectMatching,
        candidates: &[usize],
        chosen: &mut Vec<usize>,
        out: &mut Vec<SuperMatching>,
    ) {
        let Some((&first, rest)) = candidates.split_first() else {
            let mut wiggly = BTreeSet::new();
            let mut dashed = BTreeSet::new();
            for &i in chosen.iter() {
                if base.is_closer(i) {
                    wiggly.insert(i);
                } else {
                    dashed.insert(i);
                }
            }
            out.push(SuperMatching {
                base: base.clone(),
                wiggly,
                dashed,
            });
            return;
        };
        go(base, rest, chosen, out);
        if chosen.last().map_or(true, |&last| last + 1 != first) {
            chosen.push(first);
            go(base, rest, chosen, out);
            chosen.pop();
        }
    }
    go(base, &candidates, &mut Vec::new(), out);
}

/// All super-augmented matchings of `[2n]`: base matchings in standard order,
/// then decoration sets with each candidate edge first omitted, then drawn.
pub fn enumerate_super(n: usize) -> Vec<SuperMatching> {
    let mut out = Vec::new();
    for base in enumerate_matchings(n) {
        decorate(&base, true, &mut out);
    }
    out
}

/// All augmented matchings (wiggly lines only) of `[2n]`.
pub fn enumerate_augmented(n: usize) -> Vec<SuperMatching> {
    let mut out = Vec::new();
    for base in enumerate_matchings(n) {
        decorate(&base, false, &mut out);
    }
    out
}
