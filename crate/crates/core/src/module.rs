//! Graded submodules M = ⊕ I_i e_i of a free module F = ⊕ S e_i with basis
//! degrees f_1 <= ... <= f_r, plus the canonical JSON encoding.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::monomial::{ModuleMonomial, SquarefreeMonomial};

/// A squarefree monomial submodule of a graded free module.
///
/// Components are indexed from 0 in code and rendered 1-based. Shifts may be
/// any integers but must be non-decreasing; every ideal is proper (possibly
/// zero) over the same variable count.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSubmodule {
    n: u32,
    shifts: Vec<i64>,
    ideals: Vec<MonomialIdeal>,
}

impl GradedSubmodule {
    pub fn new(n: u32, shifts: Vec<i64>, ideals: Vec<MonomialIdeal>) -> Result<Self, Error> {
        if n == 0 || n > crate::monomial::MAX_VARS {
            return Err(Error::VarCount(n));
        }
        if ideals.is_empty() {
            return Err(Error::NoComponents);
        }
        if shifts.len() != ideals.len() {
            return Err(Error::ComponentMismatch(shifts.len(), ideals.len()));
        }
        if shifts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedShifts);
        }
        for (c, ideal) in ideals.iter().enumerate() {
            if ideal.n() != n {
                return Err(Error::MixedVarCount(c + 1, ideal.n(), n));
            }
        }
        Ok(Self { n, shifts, ideals })
    }

    /// An ideal viewed as a rank-1 module with shift 0.
    pub fn from_ideal(ideal: MonomialIdeal) -> Self {
        Self {
            n: ideal.n(),
            shifts: vec![0],
            ideals: vec![ideal],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// r, the number of components.
    pub fn rank(&self) -> usize {
        self.ideals.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn shift(&self, component: usize) -> i64 {
        self.shifts[component]
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, component: usize) -> &MonomialIdeal {
        &self.ideals[component]
    }

    pub fn is_zero(&self) -> bool {
        self.ideals.iter().all(MonomialIdeal::is_zero)
    }

    /// Total degree of `u·e_i`, i.e. `deg(u) + f_i`.
    pub fn total_degree(&self, mm: &ModuleMonomial) -> i64 {
        mm.mono.degree() as i64 + self.shifts[mm.component]
    }

    /// G(M): all minimal generators, components ascending and each
    /// component's generators in canonical order.
    pub fn generators(&self) -> Vec<ModuleMonomial> {
        self.ideals
            .iter()
            .enumerate()
            .flat_map(|(c, ideal)| ideal.gens().iter().map(move |g| ModuleMonomial::new(*g, c)))
            .collect()
    }

    /// G(M)_d, the generators of total degree `d`.
    pub fn gens_in_degree(&self, d: i64) -> Vec<ModuleMonomial> {
        self.generators()
            .into_iter()
            .filter(|mm| self.total_degree(mm) == d)
            .collect()
    }

    /// G(M)_{>d}.
    pub fn gens_above_degree(&self, d: i64) -> Vec<ModuleMonomial> {
        self.generators()
            .into_iter()
            .filter(|mm| self.total_degree(mm) > d)
            .collect()
    }

    /// Sorted distinct total degrees of the generators.
    pub fn generator_degrees(&self) -> Vec<i64> {
        let mut degrees: Vec<i64> = self
            .generators()
            .iter()
            .map(|mm| self.total_degree(mm))
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees
    }

    /// Membership of a module monomial.
    pub fn contains(&self, mm: &ModuleMonomial) -> bool {
        mm.component < self.rank() && self.ideals[mm.component].contains(&mm.mono)
    }

    fn wire(&self) -> ModuleWire {
        ModuleWire {
            n: self.n,
            shifts: self.shifts.clone(),
            ideals: self
                .ideals
                .iter()
                .map(|ideal| ideal.gens().iter().map(|g| g.vars().collect()).collect())
                .collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.wire()).expect("module encoding is always serializable")
    }

    /// Canonical JSON encoding: keys in `n`, `shifts`, `ideals` order,
    /// generators in the canonical generator order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.wire()).expect("serializable")
    }

    /// Parses the canonical encoding. Ideals are minimalized on load; for
    /// each component whose stated generators were not minimal a warning
    /// string is returned alongside the module.
    pub fn from_json(text: &str) -> Result<(Self, Vec<String>), Error> {
        let wire: ModuleWire =
            serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let mut warnings = Vec::new();
        let mut ideals = Vec::with_capacity(wire.ideals.len());
        for (c, raw_gens) in wire.ideals.iter().enumerate() {
            let mut gens = Vec::with_capacity(raw_gens.len());
            for vars in raw_gens {
                gens.push(SquarefreeMonomial::from_vars(vars)?);
            }
            let stated = gens.len();
            let ideal = MonomialIdeal::new(wire.n, gens)?;
            if ideal.gens().len() != stated {
                warnings.push(format!(
                    "component {}: generators were not minimal ({} stated, {} kept)",
                    c + 1,
                    stated,
                    ideal.gens().len()
                ));
            }
            ideals.push(ideal);
        }
        let module = Self::new(wire.n, wire.shifts, ideals)?;
        Ok((module, warnings))
    }
}

impl std::fmt::Debug for GradedSubmodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "n={}; ", self.n)?;
        for (c, ideal) in self.ideals.iter().enumerate() {
            if c > 0 {
                write!(f, " ⊕ ")?;
            }
            write!(f, "{:?}e{}", ideal, c + 1)?;
            if self.shifts[c] != 0 {
                write!(f, "({})", self.shifts[c])?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ModuleWire {
    n: u32,
    shifts: Vec<i64>,
    ideals: Vec<Vec<Vec<u32>>>,
}
