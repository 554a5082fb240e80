use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Name of the distinguished series variable.
pub const SERIES_VAR: &str = "t";

fn intern(name: &str) -> &'static str {
    static NAMES: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();
    let mut names = NAMES
        .get_or_init(|| Mutex::new(HashSet::new()))
        .lock()
        .expect("name interner poisoned");
    if let Some(found) = names.get(name) {
        return found;
    }
    let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
    names.insert(leaked);
    leaked
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let Some(first) = chars.next() else {
        return false;
    };
    if !first.is_ascii_alphabetic() {
        return false;
    }
    let body: String = name.trim_end_matches('\'').to_owned();
    body.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An indeterminate: a short name plus zero, one or two indices.
///
/// Ordered lexicographically by `(name, indices)`; `x < x[0] < x[0,0] < x[1]`.
#[derive(Clone, Copy)]
pub struct VarId {
    name: &'static str,
    idx: [u32; 2],
    arity: u8,
}

impl VarId {
    pub fn new(name: &str) -> Self {
        Self::try_indexed(name, &[]).expect("valid variable name")
    }

    pub fn indexed(name: &str, indices: &[u32]) -> Self {
        Self::try_indexed(name, indices).expect("valid variable")
    }

    pub fn try_indexed(name: &str, indices: &[u32]) -> Result<Self> {
        if !valid_name(name) || indices.len() > 2 {
            return Err(Error::InvalidVariable(format!("{name}{indices:?}")));
        }
        let mut idx = [0; 2];
        idx[..indices.len()].copy_from_slice(indices);
        Ok(VarId {
            name: intern(name),
            idx,
            arity: indices.len() as u8,
        })
    }

    /// The series variable `t`.
    pub fn t() -> Self {
        Self::new(SERIES_VAR)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn indices(&self) -> &[u32] {
        &self.idx[..self.arity as usize]
    }

    pub fn is_series_var(&self) -> bool {
        self.arity == 0 && self.name == SERIES_VAR
    }
}

impl PartialEq for VarId {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.indices() == other.indices()
    }
}

impl Eq for VarId {}

impl Hash for VarId {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state);
        self.indices().hash(state);
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> Ordering {
        if std::ptr::eq(self.name, other.name) {
            return self.indices().cmp(other.indices());
        }
        self.name
            .cmp(other.name)
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)?;
        match self.indices() {
            [] => Ok(()),
            [i] => write!(f, "[{i}]"),
            [i, j] => write!(f, "[{i},{j}]"),
            _ => unreachable!(),
        }
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for VarId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some(open) = s.find('[') else {
            return VarId::try_indexed(s, &[]);
        };
        let inner = s[open + 1..]
            .strip_suffix(']')
            .ok_or_else(|| Error::InvalidVariable(s.to_owned()))?;
        let indices = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidVariable(s.to_owned()))?;
        VarId::try_indexed(&s[..open], &indices)
    }
}
