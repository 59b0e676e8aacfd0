//! Canonical descriptors for memoized invariants.
//!
//! A key identifies one invariant query; two semantically equal queries
//! always serialize to the identical string, and keys carry a total order so
//! cache dumps are deterministic.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KeyKind {
    /// Plane invariant with point constraints: params `(d, n, e)`.
    Primary,
    /// One-descendant invariant, divisor-padded family: params `(d, n, h, i, m)`.
    Desc,
    /// Modified-psi invariant: params `(d, n, i, m, j)`.
    Mpsi,
    /// Symplectic-invariant query: params `(g, d, n_free, classes...)`.
    Rt,
}

impl KeyKind {
    fn tag(self) -> &'static str {
        match self {
            KeyKind::Primary => "PRIMARY",
            KeyKind::Desc => "DESC",
            KeyKind::Mpsi => "MPSI",
            KeyKind::Rt => "RT",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "PRIMARY" => Some(KeyKind::Primary),
            "DESC" => Some(KeyKind::Desc),
            "MPSI" => Some(KeyKind::Mpsi),
            "RT" => Some(KeyKind::Rt),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantKey {
    kind: KeyKind,
    params: Vec<i64>,
}

impl InvariantKey {
    pub fn new(kind: KeyKind, params: Vec<i64>) -> Self {
        InvariantKey { kind, params }
    }

    pub fn primary(d: u32, n: u32, e: u32) -> Self {
        Self::new(KeyKind::Primary, vec![d.into(), n.into(), e.into()])
    }

    pub fn desc(d: u32, n: u32, h: u32, i: u32, m: u32) -> Self {
        Self::new(
            KeyKind::Desc,
            vec![d.into(), n.into(), h.into(), i.into(), m.into()],
        )
    }

    pub fn mpsi(d: u32, n: u32, i: u32, m: u32, j: u32) -> Self {
        Self::new(
            KeyKind::Mpsi,
            vec![d.into(), n.into(), i.into(), m.into(), j.into()],
        )
    }

    pub fn rt(g: u32, d: u32, classes: &[u32], n_free: u32) -> Self {
        let mut params: Vec<i64> = vec![g.into(), d.into(), n_free.into()];
        params.extend(classes.iter().map(|&c| i64::from(c)));
        Self::new(KeyKind::Rt, params)
    }

    pub fn kind(&self) -> KeyKind {
        self.kind
    }

    pub fn params(&self) -> &[i64] {
        &self.params
    }
}

impl fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.kind.tag())?;
        for (idx, p) in self.params.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for InvariantKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::Parse(format!("invalid invariant key `{s}`"));
        let (tag, rest) = s.split_once(':').ok_or_else(bad)?;
        let kind = KeyKind::from_tag(tag).ok_or_else(bad)?;
        let params = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| p.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?
        };
        Ok(InvariantKey::new(kind, params))
    }
}
