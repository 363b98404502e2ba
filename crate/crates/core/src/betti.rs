//! Graded Betti numbers of squarefree stable submodules by closed formula,
//! extremal Betti numbers by three routes, the degree-sequence corner
//! criterion, and b-vectors.
//!
//! For a squarefree stable ideal, β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} C(m(u)-j, i);
//! for a stable submodule the sums superpose componentwise with internal
//! degrees shifted by f_i. Everything downstream (tables, corners, b-vectors)
//! is a finite scan over the minimal generators.

use std::collections::BTreeMap;
use std::fmt;

use crate::classify::{check_stable_submodule, Verdict};
use crate::error::Error;
use crate::module::GradedSubmodule;

/// Exact binomial coefficient with C(a, k) = 0 for k > a or a < 0.
/// Arguments stay below 64+shift in this crate, so u128 never overflows.
pub(crate) fn binomial(a: i64, k: usize) -> u128 {
    if a < 0 || (k as i64) > a {
        return 0;
    }
    let a = a as u128;
    let k = (k as u128).min(a - k as u128);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc * (a - t) / (t + 1);
    }
    acc
}

/// A sparse Betti table: `(i, j) -> β_{i,i+j}` with zeros omitted.
///
/// `i` is the homological degree (column) and `j` the internal degree
/// (row), following the usual table layout.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u128>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, j: i64, value: u128) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn get(&self, i: usize, j: i64) -> u128 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Nonzero entries as `(i, j, β_{i,i+j})`, sorted by `(j, i)`.
    pub fn entries(&self) -> Vec<(usize, i64, u128)> {
        let mut out: Vec<(usize, i64, u128)> =
            self.entries.iter().map(|(&(i, j), &v)| (i, j, v)).collect();
        out.sort_by_key(|&(i, j, _)| (j, i));
        out
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Largest internal degree with a nonzero entry.
    pub fn regularity(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    /// Entries with no other nonzero entry weakly north-east of them in the
    /// `(i, j)` quadrant order, sorted by `j`.
    pub fn extremal(&self) -> Vec<(usize, i64, u128)> {
        let all = self.entries();
        let mut out: Vec<(usize, i64, u128)> = all
            .iter()
            .filter(|&&(i, j, _)| {
                !all.iter()
                    .any(|&(i2, j2, _)| (i2, j2) != (i, j) && i2 >= i && j2 >= j)
            })
            .copied()
            .collect();
        out.sort_by_key(|&(_, j, _)| j);
        out
    }

    /// Every linear strand of a stable submodule starts in homological
    /// degree 0: a nonzero (i, j) forces nonzero (k, j) for all k <= i.
    pub fn linear_strands_start_at_zero(&self) -> bool {
        self.entries
            .keys()
            .all(|&(i, j)| (0..i).all(|k| self.get(k, j) > 0))
    }

    /// Classical table layout: rows labeled by j ascending, columns by i,
    /// `-` for zero entries.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "(zero table)\n".to_string();
        }
        let min_j = self.entries.keys().map(|&(_, j)| j).min().unwrap();
        let max_j = self.regularity().unwrap();
        let max_i = self.projective_dimension().unwrap();

        let labels: Vec<String> = (min_j..=max_j).map(|j| j.to_string()).collect();
        let label_w = labels.iter().map(String::len).max().unwrap();
        let mut cell_w = 1;
        for i in 0..=max_i {
            cell_w = cell_w.max(i.to_string().len());
        }
        for v in self.entries.values() {
            cell_w = cell_w.max(v.to_string().len());
        }

        let mut out = String::new();
        out.push_str(&" ".repeat(label_w + 3));
        for i in 0..=max_i {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&format!("{i:>cell_w$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat(label_w + 3 + (cell_w + 1) * (max_i + 1) - 1));
        out.push('\n');
        for (j, label) in (min_j..=max_j).zip(&labels) {
            out.push_str(&format!("{label:>label_w$} : "));
            for i in 0..=max_i {
                if i > 0 {
                    out.push(' ');
                }
                let v = self.get(i, j);
                if v == 0 {
                    out.push_str(&format!("{:>cell_w$}", "-"));
                } else {
                    out.push_str(&format!("{v:>cell_w$}"));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses text produced by [`render`](Self::render) back into a table.
    pub fn parse_rendered(text: &str) -> Result<Self, Error> {
        let mut lines = text
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim().chars().all(|c| c == '-'));
        let header = lines
            .next()
            .ok_or_else(|| Error::TableParse("empty input".into()))?;
        if header.trim() == "(zero table)" {
            return Ok(Self::new());
        }
        let columns: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::TableParse(format!("bad column header {t}")))
            })
            .collect::<Result<_, _>>()?;
        let mut table = Self::new();
        for line in lines {
            let mut tokens = line.split_whitespace();
            let j: i64 = tokens
                .next()
                .ok_or_else(|| Error::TableParse("missing row label".into()))?
                .parse()
                .map_err(|_| Error::TableParse(format!("bad row label in {line:?}")))?;
            if tokens.next() != Some(":") {
                return Err(Error::TableParse(format!("missing ':' in {line:?}")));
            }
            for (col, cell) in columns.iter().zip(tokens) {
                if cell == "-" {
                    continue;
                }
                let v: u128 = cell
                    .parse()
                    .map_err(|_| Error::TableParse(format!("bad entry {cell}")))?;
                table.add(*col, j, v);
            }
        }
        Ok(table)
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn require_stable(module: &GradedSubmodule) -> Result<(), Error> {
    match check_stable_submodule(module) {
        Verdict::Holds => Ok(()),
        Verdict::Fails(w) => Err(Error::NotStable {
            kind: "submodule",
            witness: w.to_string(),
        }),
    }
}

/// β_{i,i+j}(I) = Σ_{u ∈ G(I)_j} C(m(u)-j, i), without the stability check.
pub fn betti_ideal_formula(ideal: &crate::ideal::MonomialIdeal, i: usize, j: i64) -> u128 {
    if j < 0 {
        return 0;
    }
    ideal
        .gens_of_degree(j as usize)
        .map(|u| binomial(u.max_index() as i64 - j, i))
        .sum()
}

/// β_{i,i+j}(I) for a squarefree stable ideal; rejects non-stable input
/// with the classifier's witness.
pub fn betti_ideal(ideal: &crate::ideal::MonomialIdeal, i: usize, j: i64) -> Result<u128, Error> {
    match crate::classify::check_stable_ideal(ideal) {
        Verdict::Holds => Ok(betti_ideal_formula(ideal, i, j)),
        Verdict::Fails(w) => Err(Error::NotStable {
            kind: "ideal",
            witness: w.to_string(),
        }),
    }
}

/// The closed-form value β_{k,k+j}(M), computed without validating
/// stability. The result is a Betti number only for stable submodules.
pub fn betti_module_formula(module: &GradedSubmodule, k: usize, j: i64) -> u128 {
    let mut total = 0u128;
    for (c, ideal) in module.ideals().iter().enumerate() {
        let f = module.shift(c);
        let d = j - f;
        if d < 0 {
            continue;
        }
        for u in ideal.gens_of_degree(d as usize) {
            total += binomial(u.max_index() as i64 - j + f, k);
        }
    }
    total
}

/// β_{k,k+j}(M) for a squarefree stable submodule; rejects non-stable input
/// with the classifier's witness.
pub fn betti_module(module: &GradedSubmodule, k: usize, j: i64) -> Result<u128, Error> {
    require_stable(module)?;
    Ok(betti_module_formula(module, k, j))
}

/// Full table of nonzero β_{k,k+j}(M), without validating stability.
pub fn betti_table_formula(module: &GradedSubmodule) -> BettiTable {
    let mut table = BettiTable::new();
    for j in module.generator_degrees() {
        let top = module
            .gens_in_degree(j)
            .iter()
            .map(|mm| mm.mono.max_index() as i64 + module.shift(mm.component) - j)
            .max()
            .unwrap_or(-1);
        for k in 0..=top.max(0) as usize {
            table.add(k, j, betti_module_formula(module, k, j));
        }
    }
    table
}

/// Betti table of a squarefree stable submodule.
pub fn betti_table(module: &GradedSubmodule) -> Result<BettiTable, Error> {
    require_stable(module)?;
    Ok(betti_table_formula(module))
}

/// Extremal positions straight from the generator characterization:
/// (k, ℓ) with ℓ a generator degree, k + ℓ = max{m(u)+f_i : u·e_i ∈ G(M)_ℓ},
/// and m(u)+f_i < k + j for every generator of total degree j > ℓ.
pub fn extremal_via_theorem(module: &GradedSubmodule) -> Result<Vec<(usize, i64)>, Error> {
    require_stable(module)?;
    if module.is_zero() {
        return Err(Error::NoGenerators);
    }
    let gens = module.generators();
    let weight = |mm: &crate::monomial::ModuleMonomial| {
        mm.mono.max_index() as i64 + module.shift(mm.component)
    };
    let mut out = Vec::new();
    for l in module.generator_degrees() {
        let k_plus_l = module
            .gens_in_degree(l)
            .iter()
            .map(&weight)
            .max()
            .expect("degree taken from the generators");
        let k = k_plus_l - l;
        debug_assert!(k >= 0);
        let dominated = gens.iter().any(|mm| {
            let j = module.total_degree(mm);
            j > l && weight(mm) >= k + j
        });
        if !dominated {
            out.push((k as usize, l));
        }
    }
    Ok(out)
}

/// Value of an extremal Betti number by the counting formula
/// β_{k,k+ℓ}(M) = #{u·e_i ∈ G(M)_ℓ : m(u)+f_i = k+ℓ}. Rejects positions
/// that are not extremal.
pub fn extremal_value(module: &GradedSubmodule, k: usize, l: i64) -> Result<u128, Error> {
    if !extremal_via_theorem(module)?.contains(&(k, l)) {
        return Err(Error::NotExtremal(k, l));
    }
    let count = module
        .gens_in_degree(l)
        .iter()
        .filter(|mm| mm.mono.max_index() as i64 + module.shift(mm.component) == k as i64 + l)
        .count();
    Ok(count as u128)
}

/// The degree-sequence of a stable submodule: for each generator total
/// degree d (ascending), the value m_d - d with
/// m_d = max{m(u)+f_i : u·e_i ∈ G(M)_d}.
pub fn degree_sequence(module: &GradedSubmodule) -> Result<(Vec<i64>, Vec<i64>), Error> {
    require_stable(module)?;
    let degrees = module.generator_degrees();
    if degrees.is_empty() {
        return Err(Error::NoGenerators);
    }
    let values = degrees
        .iter()
        .map(|&d| {
            let m_d = module
                .gens_in_degree(d)
                .iter()
                .map(|mm| mm.mono.max_index() as i64 + module.shift(mm.component))
                .max()
                .expect("degree taken from the generators");
            m_d - d
        })
        .collect();
    Ok((degrees, values))
}

/// Positions whose value strictly exceeds every later value, plus the last
/// position. The selected values are strictly decreasing.
pub fn admissible_subsequence(values: &[i64]) -> Vec<usize> {
    assert!(!values.is_empty(), "degree sequence is non-empty");
    let mut picked = Vec::new();
    let mut best = i64::MIN;
    for p in (0..values.len()).rev() {
        if p == values.len() - 1 || values[p] > best {
            picked.push(p);
        }
        best = best.max(values[p]);
    }
    picked.reverse();
    picked
}

/// Degree sequence, admissible subsequence, corners with their values, and
/// the degree-length of a stable submodule.
#[derive(Clone, Debug)]
pub struct CornerReport {
    /// Distinct generator total degrees d_1 < ... < d_t.
    pub degrees: Vec<i64>,
    /// m_d - d per degree.
    pub values: Vec<i64>,
    /// Indices into `degrees` forming the admissible subsequence.
    pub admissible: Vec<usize>,
    /// Corners (k, ℓ) = (m_d - d, d) over the admissible degrees.
    pub corners: Vec<(usize, i64)>,
    /// β_{k,k+ℓ}(M) at each corner.
    pub corner_values: Vec<u128>,
    /// bl(M) = number of extremal Betti numbers.
    pub bl: usize,
}

/// Locates every extremal Betti number of a stable submodule from the
/// degree sequence alone.
pub fn corners(module: &GradedSubmodule) -> Result<CornerReport, Error> {
    let (degrees, values) = degree_sequence(module)?;
    let admissible = admissible_subsequence(&values);
    let corners: Vec<(usize, i64)> = admissible
        .iter()
        .map(|&p| (values[p] as usize, degrees[p]))
        .collect();
    let corner_values = corners
        .iter()
        .map(|&(k, l)| extremal_value(module, k, l))
        .collect::<Result<Vec<_>, _>>()?;
    let bl = corners.len();
    Ok(CornerReport {
        degrees,
        values,
        admissible,
        corners,
        corner_values,
        bl,
    })
}

/// Projective dimension, regularity and uniqueness of the extremal Betti
/// number, read off the corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologicalInvariants {
    pub projective_dimension: usize,
    pub regularity: i64,
    pub unique_extremal: bool,
}

pub fn homological_invariants(module: &GradedSubmodule) -> Result<HomologicalInvariants, Error> {
    let report = corners(module)?;
    Ok(HomologicalInvariants {
        projective_dimension: report.corners.iter().map(|&(k, _)| k).max().unwrap(),
        regularity: report.corners.iter().map(|&(_, l)| l).max().unwrap(),
        unique_extremal: report.bl == 1,
    })
}

/// The b-vector of a stable submodule of S^r: b_i counts the generators of
/// degree n-i whose monomial involves x_n, so b_i = β_{i,n}(M).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BVector {
    n: u32,
    b: Vec<u128>,
}

impl BVector {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Entries b_0, ..., b_{n-1}.
    pub fn entries(&self) -> &[u128] {
        &self.b
    }

    pub fn get(&self, i: usize) -> u128 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// Indices with b_i ≠ 0.
    pub fn support(&self) -> Vec<usize> {
        (0..self.b.len()).filter(|&i| self.b[i] != 0).collect()
    }
}

impl fmt::Display for BVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.b.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Computes the b-vector; defined only over S^r (all shifts zero) and for
/// stable submodules.
pub fn b_vector(module: &GradedSubmodule) -> Result<BVector, Error> {
    if module.shifts().iter().any(|&f| f != 0) {
        return Err(Error::NonzeroShifts);
    }
    require_stable(module)?;
    let n = module.n();
    let mut b = vec![0u128; n as usize];
    for mm in module.generators() {
        if mm.mono.max_index() == n {
            let i = n as usize - mm.mono.degree();
            if i < n as usize {
                b[i] += 1;
            }
        }
    }
    Ok(BVector { n, b })
}
