//! Builders for the canonical objects: full squarefree powers, lexsegments
//! ⟨u⟩, lexicographic submodules with prescribed b-vector support or super
//! corners, stable closures, and seeded random stable submodules for
//! property testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{check_stable_submodule, Verdict};
use crate::error::Error;
use crate::ideal::{minimalize, MonomialIdeal};
use crate::module::GradedSubmodule;
use crate::monomial::{enumerate_squarefree, SquarefreeMonomial};

/// The ideal generated by all squarefree degree-`d` monomials.
pub fn full_power(n: u32, d: i64) -> Result<MonomialIdeal, Error> {
    MonomialIdeal::full_power(n, d)
}

/// ⟨u⟩: the lexsegment ideal of all degree-deg(u) squarefree monomials
/// `>= u` in slex order. The unit monomial is rejected.
pub fn lexsegment_of(u: SquarefreeMonomial, n: u32) -> Result<MonomialIdeal, Error> {
    if u.is_one() {
        return Err(Error::UnitGenerator);
    }
    if !u.fits(n) {
        return Err(Error::MonomialRange(u.to_string(), n));
    }
    let mut gens = Vec::new();
    for w in enumerate_squarefree(n, u.degree()) {
        gens.push(w);
        if w == u {
            break;
        }
    }
    MonomialIdeal::new(n, gens)
}

fn validate_support(n: u32, support: &[usize], r: usize) -> Result<Vec<usize>, Error> {
    if n < 3 {
        return Err(Error::Construction(format!(
            "the support construction needs n >= 3, got {n}"
        )));
    }
    if n > crate::monomial::MAX_VARS {
        return Err(Error::VarCount(n));
    }
    let mut ks: Vec<usize> = support.to_vec();
    ks.sort_unstable();
    ks.dedup();
    if ks.len() != support.len() {
        return Err(Error::Construction(
            "support indices must be distinct".into(),
        ));
    }
    if ks.is_empty() {
        return Err(Error::Construction("support must be non-empty".into()));
    }
    if *ks.last().unwrap() >= n as usize {
        return Err(Error::Construction(format!(
            "support indices must lie in 0..{n}"
        )));
    }
    if r < ks.len() {
        return Err(Error::Construction(format!(
            "need r >= |support| = {}, got {r}",
            ks.len()
        )));
    }
    Ok(ks)
}

/// Builds a lexicographic submodule L ⊊ S^r with supp(b(L)) = X.
///
/// For X = {k_1 < ... < k_t}: components 1..t-1 are the full powers of
/// degree n-k_t, ..., n-k_2, components t..r-1 the full power of degree
/// n-k_1, and component r the lexsegment ⟨x_1⋯x_{n-k_1-1}·x_n⟩. The b-values
/// come out as b_{k_j} = C(n-1, n-k_j-1) for j >= 2 and
/// b_{k_1} = 1 + (r-t)·C(n-1, n-k_1-1).
pub fn lex_for_support(n: u32, support: &[usize], r: usize) -> Result<GradedSubmodule, Error> {
    let ks = validate_support(n, support, r)?;
    let t = ks.len();
    let mut ideals = Vec::with_capacity(r);
    // components 1..t-1 walk X from its top element downwards
    for j in 0..t - 1 {
        let exponent = n as i64 - ks[t - 1 - j] as i64;
        ideals.push(MonomialIdeal::full_power(n, exponent)?);
    }
    for _ in t..r {
        ideals.push(MonomialIdeal::full_power(n, n as i64 - ks[0] as i64)?);
    }
    let prefix_len = (n as usize - ks[0] - 1) as u32;
    let mut tail = SquarefreeMonomial::ONE;
    for v in 1..=prefix_len {
        tail = tail.with_var(v);
    }
    tail = tail.with_var(n);
    ideals.push(lexsegment_of(tail, n)?);
    GradedSubmodule::new(n, vec![0; r], ideals)
}

/// Requested super corners (k_i, ℓ_i) with k_i + ℓ_i = n, k strictly
/// decreasing and ℓ strictly increasing, for a module of rank r >= t.
#[derive(Clone, Debug)]
pub struct SuperCornerSpec {
    n: u32,
    pairs: Vec<(usize, usize)>,
    r: usize,
}

impl SuperCornerSpec {
    pub fn new(n: u32, pairs: Vec<(usize, usize)>, r: usize) -> Result<Self, Error> {
        if n < 3 {
            return Err(Error::Construction(format!(
                "super corner specs need n >= 3, got {n}"
            )));
        }
        let t = pairs.len();
        if t == 0 || t > n as usize - 1 {
            return Err(Error::Construction(format!(
                "need 1 <= t <= n-1 pairs, got {t}"
            )));
        }
        if r < t {
            return Err(Error::Construction(format!("need r >= t = {t}, got {r}")));
        }
        for &(k, l) in &pairs {
            if k + l != n as usize {
                return Err(Error::Construction(format!(
                    "pair ({k}, {l}) violates k + l = {n}"
                )));
            }
            if l < 1 || l > n as usize {
                return Err(Error::Construction(format!("degree {l} out of 1..={n}")));
            }
        }
        if !pairs.windows(2).all(|w| w[0].0 > w[1].0 && w[0].1 < w[1].1) {
            return Err(Error::Construction(
                "pairs must have strictly decreasing k and strictly increasing degrees".into(),
            ));
        }
        Ok(Self { n, pairs, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// Builds a lexicographic submodule of S^r generated in degrees
/// ℓ_1 < ... < ℓ_t whose super corners are exactly the requested pairs.
/// This is the support construction applied to X = {k_t, ..., k_1}.
pub fn lex_for_corners(spec: &SuperCornerSpec) -> Result<GradedSubmodule, Error> {
    let support: Vec<usize> = spec.pairs.iter().map(|&(k, _)| k).collect();
    lex_for_support(spec.n, &support, spec.r)
}

/// Smallest squarefree (strongly) stable ideal containing the seeds:
/// the fixpoint of the exchange moves, minimalized.
pub fn stable_closure(
    n: u32,
    seeds: &[SquarefreeMonomial],
    strong: bool,
) -> Result<MonomialIdeal, Error> {
    if seeds.is_empty() {
        return Err(Error::Construction(
            "closure needs at least one seed".into(),
        ));
    }
    for s in seeds {
        if s.is_one() {
            return Err(Error::UnitGenerator);
        }
        if !s.fits(n) {
            return Err(Error::MonomialRange(s.to_string(), n));
        }
    }
    let mut members: std::collections::HashSet<u64> = seeds.iter().map(|s| s.mask()).collect();
    let mut queue: Vec<u64> = members.iter().copied().collect();
    while let Some(mask) = queue.pop() {
        let u = SquarefreeMonomial::from_mask(mask);
        let pivots: Vec<u32> = if strong {
            u.vars().collect()
        } else {
            vec![u.max_index()]
        };
        for i in pivots {
            for j in 1..i {
                if u.contains_var(j) {
                    continue;
                }
                let moved = u.without_var(i).with_var(j).mask();
                if members.insert(moved) {
                    queue.push(moved);
                }
            }
        }
    }
    MonomialIdeal::new(n, members.into_iter().map(SquarefreeMonomial::from_mask))
}

/// Parameters for [`random_stable_submodule`]. Defaults keep the generator
/// counts small enough for the homology oracle.
#[derive(Clone, Debug)]
pub struct RandomModuleParams {
    pub n: u32,
    pub r: usize,
    /// Largest gap between consecutive shifts.
    pub max_shift_step: i64,
    /// Seeds drawn per component (1..=max_seeds).
    pub max_seeds: usize,
    /// Inclusive seed degree range; clamped to n.
    pub degree_range: (usize, usize),
    /// Reject draws where any component ends up with more generators.
    pub max_gens: usize,
    /// Use strongly stable closures.
    pub strong: bool,
    /// Bounded retries before giving up.
    pub attempts: usize,
}

impl RandomModuleParams {
    pub fn new(n: u32, r: usize) -> Self {
        Self {
            n,
            r,
            max_shift_step: 1,
            max_seeds: 2,
            degree_range: (2, 4),
            max_gens: 10,
            strong: false,
            attempts: 400,
        }
    }
}

/// Deterministic-in-seed random squarefree stable submodule: per-component
/// stable closures, then the consecutive containments enforced by enlarging
/// lower components with the product generators and re-closing.
pub fn random_stable_submodule(
    params: &RandomModuleParams,
    seed: u64,
) -> Result<GradedSubmodule, Error> {
    if params.n == 0 || params.n > crate::monomial::MAX_VARS {
        return Err(Error::VarCount(params.n));
    }
    if params.r == 0 {
        return Err(Error::NoComponents);
    }
    let mut last_reason = String::from("no attempt made");
    for attempt in 0..params.attempts {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (attempt as u64).wrapping_mul(0x9E3779B97F4A7C15));
        match draw_module(params, &mut rng) {
            Ok(module) => return Ok(module),
            Err(reason) => last_reason = reason,
        }
    }
    Err(Error::RandomSearch(params.attempts, last_reason))
}

fn draw_module(
    params: &RandomModuleParams,
    rng: &mut ChaCha8Rng,
) -> Result<GradedSubmodule, String> {
    let n = params.n;
    let (lo, hi) = params.degree_range;
    let lo = lo.clamp(1, n as usize);
    let hi = hi.clamp(lo, n as usize);

    let mut shifts = Vec::with_capacity(params.r);
    let mut f = 0i64;
    for _ in 0..params.r {
        f += rng.gen_range(0..=params.max_shift_step);
        shifts.push(f);
    }
    // anchor the first shift at 0
    let base = shifts[0];
    for s in &mut shifts {
        *s -= base;
    }

    let mut ideals: Vec<MonomialIdeal> = Vec::with_capacity(params.r);
    let mut vars: Vec<u32> = (1..=n).collect();
    for _ in 0..params.r {
        let count = rng.gen_range(1..=params.max_seeds);
        let mut seeds = Vec::with_capacity(count);
        for _ in 0..count {
            let d = rng.gen_range(lo..=hi);
            vars.shuffle(rng);
            seeds.push(
                SquarefreeMonomial::from_vars(&vars[..d]).expect("distinct indices in range"),
            );
        }
        let ideal = stable_closure(n, &seeds, params.strong).map_err(|e| e.to_string())?;
        ideals.push(ideal);
    }

    // enforce [x1..xn]^(f_{i+1}-f_i) I_{i+1} ⊆ I_i from the top down
    for c in (0..params.r.saturating_sub(1)).rev() {
        let d = shifts[c + 1] - shifts[c];
        if d > n as i64 {
            continue;
        }
        let mut enlarged: Vec<SquarefreeMonomial> = ideals[c].gens().to_vec();
        if d == 0 {
            enlarged.extend(ideals[c + 1].gens().iter().copied());
        } else {
            for w in enumerate_squarefree(n, d as usize) {
                for u in ideals[c + 1].gens() {
                    enlarged.push(SquarefreeMonomial::from_mask(w.mask() | u.mask()));
                }
            }
        }
        let seeds = minimalize(enlarged);
        ideals[c] = stable_closure(n, &seeds, params.strong).map_err(|e| e.to_string())?;
    }

    if let Some(too_big) = ideals.iter().position(|i| i.gens().len() > params.max_gens) {
        return Err(format!(
            "component {} has {} generators (cap {})",
            too_big + 1,
            ideals[too_big].gens().len(),
            params.max_gens
        ));
    }

    let module = GradedSubmodule::new(n, shifts, ideals).map_err(|e| e.to_string())?;
    match check_stable_submodule(&module) {
        Verdict::Holds => Ok(module),
        Verdict::Fails(w) => Err(format!("draw is not stable: {w}")),
    }
}
