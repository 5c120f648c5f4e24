//! Three-valued negation (positive / negative / unnegatable) and the
//! four-cornered classification of an element relative to a property.

use std::fmt;

use crate::error::{Error, Result};

/// `U` marks a property with an empty domain, which cannot be negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThreeVal {
    P,
    N,
    U,
}

impl ThreeVal {
    pub const ALL: [ThreeVal; 3] = [ThreeVal::P, ThreeVal::N, ThreeVal::U];

    pub fn name(self) -> &'static str {
        match self {
            ThreeVal::P => "positive",
            ThreeVal::N => "negative",
            ThreeVal::U => "unnegatable",
        }
    }
}

impl fmt::Display for ThreeVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ThreeVal::P => "P",
            ThreeVal::N => "N",
            ThreeVal::U => "U",
        };
        f.write_str(s)
    }
}

pub fn negate3(v: ThreeVal) -> ThreeVal {
    match v {
        ThreeVal::P => ThreeVal::N,
        ThreeVal::N => ThreeVal::P,
        ThreeVal::U => ThreeVal::U,
    }
}

/// `(w, not-w)` for every value, in the order P, N, U.
pub fn negation_table() -> [(ThreeVal, ThreeVal); 3] {
    ThreeVal::ALL.map(|v| (v, negate3(v)))
}

/// Where an element stands with respect to a property P.
///
/// `P`, `NotP` and `Neither` classify elements. `Both` is the union of the
/// first two, i.e. the universe of discourse itself; no single element is
/// classified as `Both`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KotiRegion {
    P,
    NotP,
    Neither,
    Both,
}

impl KotiRegion {
    /// Whether an element classified as `element` lies in this region.
    pub fn contains(self, element: KotiRegion) -> bool {
        match self {
            KotiRegion::Both => matches!(element, KotiRegion::P | KotiRegion::NotP),
            region => region == element,
        }
    }
}

impl fmt::Display for KotiRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KotiRegion::P => "P",
            KotiRegion::NotP => "not-P",
            KotiRegion::Neither => "neither P nor not-P",
            KotiRegion::Both => "both P and not-P",
        };
        f.write_str(s)
    }
}

pub fn catuskoti_classify(in_p: bool, in_discourse: bool) -> Result<KotiRegion> {
    match (in_p, in_discourse) {
        (true, true) => Ok(KotiRegion::P),
        (false, true) => Ok(KotiRegion::NotP),
        (false, false) => Ok(KotiRegion::Neither),
        (true, false) => Err(Error::InvalidFlags),
    }
}
