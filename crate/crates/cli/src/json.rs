//! JSON documents. Field order is fixed by declaration order.

use boole_core::ExtCoeff;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Finite coefficients serialise as `{"num": n, "den": d}`; the others as
/// the strings `"0/0"` and `"k/0"`.
#[derive(Debug, Clone, Copy)]
pub struct Coefficient(pub ExtCoeff);

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            ExtCoeff::Finite(r) => {
                let mut st = s.serialize_struct("Rational", 2)?;
                st.serialize_field("num", &r.numer())?;
                st.serialize_field("den", &r.denom())?;
                st.end()
            }
            other => s.serialize_str(&other.to_string()),
        }
    }
}

#[derive(Serialize)]
pub struct Term {
    pub mask: u32,
    pub constituent: String,
    pub coefficient: Coefficient,
    pub kind: &'static str,
}

#[derive(Serialize)]
pub struct Expand {
    pub command: &'static str,
    pub expression: String,
    pub symbols: Vec<String>,
    pub terms: Vec<Term>,
    pub developed: String,
    pub interpretable: bool,
}

#[derive(Serialize)]
pub struct Indeterminate {
    pub name: String,
    pub constituent: String,
}

#[derive(Serialize)]
pub struct Verification {
    pub max_universe: usize,
    pub sound: bool,
    pub complete: bool,
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct Solved {
    pub command: &'static str,
    pub unknown: String,
    pub symbols: Vec<String>,
    pub solution: String,
    pub included: Vec<String>,
    pub indeterminate: Vec<Indeterminate>,
    pub side_conditions: Vec<String>,
    pub excluded: Vec<String>,
    pub development: Vec<Term>,
    pub verification: Option<Verification>,
}

#[derive(Serialize)]
pub struct EliminationVerification {
    pub max_universe: usize,
    pub sound: bool,
    pub exact: bool,
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct Residual {
    pub command: &'static str,
    pub dropped: Vec<String>,
    pub symbols: Vec<String>,
    pub residual: String,
    pub terms: Vec<Term>,
    pub trivial: bool,
    pub contradictory: bool,
    pub verification: Option<EliminationVerification>,
}

#[derive(Serialize)]
pub struct Region {
    pub mask: u32,
    pub constituent: String,
}

#[derive(Serialize)]
pub struct Partition {
    pub command: &'static str,
    pub symbols: Vec<String>,
    pub constituents: Vec<Region>,
    pub sum_is_one: bool,
}

#[derive(Serialize)]
pub struct Offending {
    pub constituent: String,
    pub coefficient: Coefficient,
}

#[derive(Serialize)]
pub struct Condition {
    pub condition: String,
    pub reading: Option<String>,
}

#[derive(Serialize)]
pub struct Compare {
    pub command: &'static str,
    pub expression: String,
    pub symbols: Vec<String>,
    pub interpretable: bool,
    pub offending: Vec<Offending>,
    pub conditions: Vec<Condition>,
}

#[derive(Serialize)]
pub struct Check {
    pub command: &'static str,
    pub equation: String,
    pub symbols: Vec<String>,
    pub identity: bool,
    pub failing_constituents: Vec<String>,
    pub max_universe: usize,
    pub holds_in_all_models: bool,
    pub counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct NyayaRow {
    pub w: String,
    pub not_w: String,
    pub meaning: &'static str,
}

#[derive(Serialize)]
pub struct NyayaTable {
    pub command: &'static str,
    pub rows: Vec<NyayaRow>,
}

#[derive(Serialize)]
pub struct NyayaClass {
    pub command: &'static str,
    pub in_p: bool,
    pub in_discourse: bool,
    pub region: String,
}
