//! Independent Betti numbers via Taylor-complex strand homology over GF(p).
//!
//! For an ideal with generators u_1..u_s, homological position i is spanned
//! by the (i+1)-subsets of generators. Fixing a squarefree multidegree a,
//! the strand of a keeps the subsets whose lcm-support equals a; the
//! differential drops one generator at a time with the simplicial sign,
//! entry ±1 exactly when the lcm-support survives and 0 otherwise. Then
//! β_{i,|a|}(I) picks up dim ker ∂_i − rank ∂_{i+1} from each strand, and a
//! module table is the superposition of its component tables shifted by f_i.
//!
//! All entries are ±1 and ranks come from dense elimination; Betti numbers
//! of the stable class do not depend on the characteristic, so agreement
//! across a few primes is the cheap robustness check.

use std::collections::{BTreeMap, HashMap};

use crate::betti::BettiTable;
use crate::classify::{check_stable_submodule, Verdict};
use crate::error::Error;
use crate::ideal::MonomialIdeal;
use crate::module::GradedSubmodule;

/// Default bound on |G(I)| per ideal; 2^cap subsets are enumerated.
pub const DEFAULT_CAP: usize = 18;

/// Default field characteristic.
pub const DEFAULT_PRIME: u64 = 32003;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Rank of a dense matrix over GF(p) by Gaussian elimination in place.
fn rank_mod_p(mut matrix: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut rank = 0;
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let Some(found) = (pivot_row..rows).find(|&r| matrix[r][col] != 0) else {
            continue;
        };
        matrix.swap(pivot_row, found);
        let inv = mod_inv(matrix[pivot_row][col], p);
        for entry in &mut matrix[pivot_row][col..] {
            *entry = *entry * inv % p;
        }
        // only rows below the pivot matter for the rank
        for r in pivot_row + 1..rows {
            if matrix[r][col] != 0 {
                let factor = matrix[r][col];
                let (upper, lower) = matrix.split_at_mut(r);
                let pivot = &upper[pivot_row];
                for (entry, &lead) in lower[0][col..].iter_mut().zip(&pivot[col..]) {
                    let sub = factor * lead % p;
                    *entry = (*entry + p - sub) % p;
                }
            }
        }
        pivot_row += 1;
        rank += 1;
    }
    rank
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// The strand of one multidegree: per homological position, the generator
/// subsets spanning it, plus the boundary matrices between consecutive
/// positions.
struct Strand {
    /// subsets grouped by cardinality, ascending
    by_size: BTreeMap<u32, Vec<u32>>,
}

impl Strand {
    /// ∂ from size-`k` subsets to size-`k-1` subsets within the strand.
    /// Rows are indexed by the smaller subsets, columns by the larger ones.
    fn boundary(&self, k: u32, lcm: &[u64], p: u64) -> Vec<Vec<u64>> {
        let cols = self.by_size.get(&k).map_or(&[][..], Vec::as_slice);
        let rows = self.by_size.get(&(k - 1)).map_or(&[][..], Vec::as_slice);
        let row_index: HashMap<u32, usize> =
            rows.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let mut matrix = vec![vec![0u64; cols.len()]; rows.len()];
        for (c, &subset) in cols.iter().enumerate() {
            let mut bits = subset;
            while bits != 0 {
                let g = bits & bits.wrapping_neg();
                bits ^= g;
                let smaller = subset ^ g;
                if let Some(&r) = row_index.get(&smaller) {
                    debug_assert_eq!(lcm[smaller as usize], lcm[subset as usize]);
                    let position = (subset & (g - 1)).count_ones();
                    matrix[r][c] = if position % 2 == 0 { 1 } else { p - 1 };
                }
            }
        }
        matrix
    }
}

#[cfg(debug_assertions)]
fn assert_composes_to_zero(upper: &[Vec<u64>], lower: &[Vec<u64>], p: u64) {
    // lower ∘ upper = 0: lower is (k-1)×k, upper is k×(k+1)
    if lower.is_empty() || upper.is_empty() {
        return;
    }
    for low_row in lower {
        for c in 0..upper[0].len() {
            let mut acc = 0u64;
            for (l, up_row) in low_row.iter().zip(upper) {
                acc = (acc + l * up_row[c]) % p;
            }
            assert_eq!(acc, 0, "∂∘∂ ≠ 0 in a Taylor strand");
        }
    }
}

/// Betti table of an arbitrary squarefree monomial ideal by strand
/// homology over GF(p). Deterministic; costs 2^|G(I)| subset enumerations.
pub fn betti_oracle_ideal(ideal: &MonomialIdeal, p: u64, cap: usize) -> Result<BettiTable, Error> {
    // p < 2^31 keeps every u64 product below 2^62
    if !is_prime(p) || p >= (1 << 31) {
        return Err(Error::NotPrime(p));
    }
    // 2^s subsets are enumerated; past 26 generators the lcm cache alone is
    // hopeless, whatever cap the caller asked for
    let s = ideal.gens().len();
    if s > cap.min(26) {
        return Err(Error::OracleCap(s, cap.min(26)));
    }
    let mut table = BettiTable::new();
    if s == 0 {
        return Ok(table);
    }
    let gens: Vec<u64> = ideal.gens().iter().map(|g| g.mask()).collect();

    // lcm-support of every generator subset, shared across strands
    let mut lcm = vec![0u64; 1usize << s];
    for subset in 1..(1usize << s) {
        let low = subset & subset.wrapping_neg();
        lcm[subset] = lcm[subset ^ low] | gens[low.trailing_zeros() as usize];
    }

    // group subsets by lcm-support; BTreeMap keeps the strand order stable
    let mut strands: BTreeMap<u64, Strand> = BTreeMap::new();
    for subset in 1..(1u32 << s) {
        strands
            .entry(lcm[subset as usize])
            .or_insert_with(|| Strand {
                by_size: BTreeMap::new(),
            })
            .by_size
            .entry(subset.count_ones())
            .or_default()
            .push(subset);
    }

    for (multidegree, strand) in &strands {
        let total_degree = multidegree.count_ones() as i64;
        let sizes: Vec<u32> = strand.by_size.keys().copied().collect();
        let max_size = *sizes.last().unwrap();
        // rank of ∂ entering from one size above; ∂ out of size 1 is zero
        let mut ranks: HashMap<u32, usize> = HashMap::new();
        for &k in &sizes {
            if k >= 2 {
                ranks.insert(k, rank_mod_p(strand.boundary(k, &lcm, p), p));
            }
        }
        #[cfg(debug_assertions)]
        for &k in &sizes {
            if k >= 3 && strand.by_size.contains_key(&(k - 1)) {
                assert_composes_to_zero(
                    &strand.boundary(k, &lcm, p),
                    &strand.boundary(k - 1, &lcm, p),
                    p,
                );
            }
        }
        for &k in &sizes {
            let dim = strand.by_size[&k].len();
            let rank_out = if k >= 2 { ranks[&k] } else { 0 };
            let rank_in = if k < max_size {
                ranks.get(&(k + 1)).copied().unwrap_or(0)
            } else {
                0
            };
            let homology = dim - rank_out - rank_in;
            // β_{i,a} lands in table row j = |a| - i
            let i = k as usize - 1;
            table.add(i, total_degree - i as i64, homology as u128);
        }
    }
    Ok(table)
}

/// Module oracle: Tor is additive over ⊕ I_i e_i, so the table is the
/// superposition of the component tables with internal degrees shifted.
pub fn betti_oracle_module(
    module: &GradedSubmodule,
    p: u64,
    cap: usize,
) -> Result<BettiTable, Error> {
    let mut table = BettiTable::new();
    for (c, ideal) in module.ideals().iter().enumerate() {
        let single = betti_oracle_ideal(ideal, p, cap)?;
        for (i, j, v) in single.entries() {
            table.add(i, j + module.shift(c), v);
        }
    }
    Ok(table)
}

/// Outcome of checking the closed formula against the oracle.
#[derive(Clone, Debug)]
pub struct CertifyReport {
    pub formula: BettiTable,
    pub oracle: BettiTable,
    /// Positions where the two tables differ: (i, j, formula, oracle).
    pub diffs: Vec<(usize, i64, u128, u128)>,
    pub corners_criterion: Vec<(usize, i64)>,
    pub corners_oracle: Vec<(usize, i64)>,
}

impl CertifyReport {
    pub fn corners_match(&self) -> bool {
        self.corners_criterion == self.corners_oracle
    }

    pub fn certified(&self) -> bool {
        self.diffs.is_empty() && self.corners_match()
    }
}

/// Certifies a stable submodule: the formula table must equal the oracle
/// table entry by entry, and the corner criterion must land on exactly the
/// extremal entries of the oracle table. Non-stable input is refused with
/// the classifier's witness.
pub fn certify(module: &GradedSubmodule, p: u64, cap: usize) -> Result<CertifyReport, Error> {
    if let Verdict::Fails(w) = check_stable_submodule(module) {
        return Err(Error::NotStable {
            kind: "submodule",
            witness: w.to_string(),
        });
    }
    let formula = crate::betti::betti_table_formula(module);
    let oracle = betti_oracle_module(module, p, cap)?;

    let mut keys: Vec<(usize, i64)> = formula
        .entries()
        .iter()
        .chain(oracle.entries().iter())
        .map(|&(i, j, _)| (i, j))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    let diffs: Vec<(usize, i64, u128, u128)> = keys
        .into_iter()
        .filter_map(|(i, j)| {
            let a = formula.get(i, j);
            let b = oracle.get(i, j);
            (a != b).then_some((i, j, a, b))
        })
        .collect();

    let corners_criterion = if module.is_zero() {
        Vec::new()
    } else {
        crate::betti::corners(module)?.corners
    };
    let corners_oracle: Vec<(usize, i64)> =
        oracle.extremal().iter().map(|&(i, j, _)| (i, j)).collect();

    Ok(CertifyReport {
        formula,
        oracle,
        diffs,
        corners_criterion,
        corners_oracle,
    })
}
