//! Mechanical checks of the codegree theorems over a group corpus.

pub mod bounds;
mod checks;
mod runner;

use std::cell::OnceCell;
use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;
use serde_json::Value;

pub use checks::run_check;
pub use runner::{run_corpus, run_group, GroupReport, Report, RunOptions, Summary, REPORT_SCHEMA};

use crate::arith::{is_prime, prime_power};
use crate::chartab::CharacterTable;
use crate::codegree::{profile, CodegreeProfile};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::{self, normal_subgroups, NormalLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Table,
    TheoremD,
    NewPrimes,
    TheoremC,
    PLength,
    TheoremB,
    TheoremA,
    Lemma21Quotient,
    Lemma21Divisibility,
    LinearCodegree,
    Clifford,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Table,
        Check::TheoremD,
        Check::NewPrimes,
        Check::TheoremC,
        Check::PLength,
        Check::TheoremB,
        Check::TheoremA,
        Check::Lemma21Quotient,
        Check::Lemma21Divisibility,
        Check::LinearCodegree,
        Check::Clifford,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Table => "table",
            Check::TheoremD => "theorem_d",
            Check::NewPrimes => "lemma_new_primes",
            Check::TheoremC => "theorem_c",
            Check::PLength => "p_length",
            Check::TheoremB => "theorem_b",
            Check::TheoremA => "theorem_a",
            Check::Lemma21Quotient => "lemma21_quotient",
            Check::Lemma21Divisibility => "lemma21_divisibility",
            Check::LinearCodegree => "linear_codegree",
            Check::Clifford => "clifford",
        }
    }

    pub fn parse(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    /// Comma-separated names, or `all`.
    pub fn parse_list(list: &str) -> Result<Vec<Check>> {
        if list.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut out: Vec<Check> = list
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                Check::parse(s).ok_or_else(|| Error::BadParameter(format!("unknown check `{s}`")))
            })
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One check outcome. A failed record always carries a witness; a record
/// whose hypothesis does not hold is always skipped.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub check: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub hypothesis: bool,
    pub status: Status,
    pub quantities: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn skipped(check: Check, prime: Option<u64>, note: impl Into<String>) -> Self {
        CheckRecord {
            check: check.name(),
            prime,
            hypothesis: false,
            status: Status::Skipped,
            quantities: BTreeMap::new(),
            witness: None,
            note: Some(note.into()),
        }
    }

    /// Pass when `witness` is `None`, fail otherwise.
    pub fn decided(
        check: Check,
        prime: Option<u64>,
        quantities: BTreeMap<String, Value>,
        witness: Option<Value>,
    ) -> Self {
        CheckRecord {
            check: check.name(),
            prime,
            hypothesis: true,
            status: if witness.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            quantities,
            witness,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Shapes in the coprime-codegree classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum TheoremDShape {
    ElementaryAbelian { p: u64 },
    FrobeniusPrimeComplement { p: u64, q: u64, s: u32 },
}

/// Any two different codegrees are coprime.
pub fn theorem_d_predicate(profile: &CodegreeProfile) -> bool {
    let c = &profile.cod_set;
    c.iter()
        .enumerate()
        .all(|(i, &a)| c[i + 1..].iter().all(|&b| num_integer::gcd(a, b) == 1))
}

/// A pair of different codegrees with a common factor, if any.
pub fn non_coprime_pair(profile: &CodegreeProfile) -> Option<(u64, u64)> {
    let c = &profile.cod_set;
    for (i, &a) in c.iter().enumerate() {
        for &b in &c[i + 1..] {
            if num_integer::gcd(a, b) != 1 {
                return Some((a, b));
            }
        }
    }
    None
}

pub fn theorem_d_classify(g: &FiniteGroup, profile: &CodegreeProfile) -> Option<TheoremDShape> {
    if g.order() > 1 && g.is_abelian() && is_prime(g.exponent()) {
        return Some(TheoremDShape::ElementaryAbelian { p: g.exponent() });
    }
    let f = structure::frobenius_structure(g)?;
    let p = f.complement.order() as u64;
    if !is_prime(p) {
        return None;
    }
    let (q, _) = prime_power(f.kernel.order() as u64)?;
    let cod = &profile.cod_set;
    if cod.len() != 3 || cod[0] != 1 || !cod.contains(&p) {
        return None;
    }
    let other = cod.iter().copied().find(|&c| c != 1 && c != p)?;
    match prime_power(other) {
        Some((r, s)) if r == q && s >= 1 => {
            Some(TheoremDShape::FrobeniusPrimeComplement { p, q, s })
        }
        _ => None,
    }
}

/// Everything the checks share for one group.
pub struct GroupContext {
    pub group: Arc<FiniteGroup>,
    pub table: CharacterTable,
    pub profile: CodegreeProfile,
    /// `(complement, abelian normal subgroup)` from the recipe, if any.
    pub parts: Option<(Subgroup, Subgroup)>,
    pub seed: u64,
    lattice: OnceCell<NormalLattice>,
    solvable: OnceCell<bool>,
    nilpotent: OnceCell<bool>,
}

impl GroupContext {
    pub fn new(group: FiniteGroup, parts: Option<(Subgroup, Subgroup)>, seed: u64) -> Result<Self> {
        let group = Arc::new(group);
        let table = CharacterTable::dixon(group.clone(), seed)?;
        let profile = profile(&table)?;
        Ok(GroupContext {
            group,
            table,
            profile,
            parts,
            seed,
            lattice: OnceCell::new(),
            solvable: OnceCell::new(),
            nilpotent: OnceCell::new(),
        })
    }

    pub fn lattice(&self) -> &NormalLattice {
        self.lattice.get_or_init(|| normal_subgroups(&self.group))
    }

    pub fn is_solvable(&self) -> bool {
        *self
            .solvable
            .get_or_init(|| structure::is_solvable(&self.group))
    }

    pub fn is_nilpotent(&self) -> bool {
        *self
            .nilpotent
            .get_or_init(|| structure::is_nilpotent(&self.group))
    }
}
