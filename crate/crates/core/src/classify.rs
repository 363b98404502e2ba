//! Membership tests for the three classes of squarefree monomial objects —
//! stable, strongly stable, lexicographic — at the ideal and the submodule
//! level, with re-checkable counterexample witnesses.
//!
//! The submodule tests follow the generator-level characterizations: a
//! module ⊕ I_i e_i is (strongly) stable iff every I_i is and
//! `[x1..xn]^(f_{i+1}-f_i) I_{i+1} ⊆ I_i` for consecutive components; it is
//! lexicographic iff every I_i is a lexsegment ideal and
//! `[x1..xn]^(indeg I_i + f_i - f_{i-1}) ⊆ I_{i-1}`. A direct checker that
//! walks whole degree slices of the ambient free module under the slexF
//! order is kept alongside as an independent route.

use std::fmt;

use crate::error::Error;
use crate::ideal::{power_witness, product_power_witness, MonomialIdeal};
use crate::module::GradedSubmodule;
use crate::monomial::{enumerate_squarefree, ModuleMonomial, SquarefreeMonomial};

/// Cap on the number of variables for checks that enumerate whole degree
/// slices (cost C(n, d) per degree). Raise it explicitly for larger rings.
#[derive(Clone, Copy, Debug)]
pub struct EnumLimit(pub u32);

impl Default for EnumLimit {
    fn default() -> Self {
        EnumLimit(20)
    }
}

impl EnumLimit {
    fn check(self, n: u32) -> Result<(), Error> {
        if n > self.0 {
            Err(Error::EnumerationCap { n, cap: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Outcome of a class membership test.
#[derive(Clone, Debug)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// A concrete counterexample; every variant can be re-checked by membership
/// tests on the original input.
#[derive(Clone, Debug)]
pub enum Witness {
    /// An exchange move `x_with · u / x_replaced` leaving the ideal.
    StableExchange {
        component: Option<usize>,
        gen: SquarefreeMonomial,
        replaced: u32,
        with: u32,
        missing: SquarefreeMonomial,
    },
    /// A degree slice of an ideal is not a slex prefix.
    LexsegmentGap {
        component: Option<usize>,
        degree: usize,
        missing: SquarefreeMonomial,
        present: SquarefreeMonomial,
    },
    /// `[x1..xn]^exponent · (generator of component `source`) ⊄ component
    /// `target`; `factor` is `None` in the `exponent = 0` case.
    ProductContainment {
        n: u32,
        source: usize,
        target: usize,
        exponent: i64,
        factor: Option<SquarefreeMonomial>,
        gen: SquarefreeMonomial,
        missing: SquarefreeMonomial,
    },
    /// `[x1..xn]^exponent ⊄ component `target` (lexicographic condition
    /// induced by component `source`).
    PowerContainment {
        n: u32,
        source: usize,
        target: usize,
        exponent: i64,
        missing: SquarefreeMonomial,
    },
    /// A slexF degree slice of the free module is not a prefix.
    ModuleLexGap {
        degree: i64,
        missing: ModuleMonomial,
        present: ModuleMonomial,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::StableExchange {
                component,
                gen,
                replaced,
                with,
                missing,
            } => {
                if let Some(c) = component {
                    write!(f, "component {}: ", c + 1)?;
                }
                write!(
                    f,
                    "generator {gen}: x{with}·{gen}/x{replaced} = {missing} is missing"
                )
            }
            Witness::LexsegmentGap {
                component,
                degree,
                missing,
                present,
            } => {
                if let Some(c) = component {
                    write!(f, "component {}: ", c + 1)?;
                }
                write!(
                    f,
                    "degree {degree}: {missing} is missing although {present} is present"
                )
            }
            Witness::ProductContainment {
                n,
                source,
                target,
                exponent,
                factor,
                gen,
                missing,
            } => {
                if let Some(w) = factor {
                    write!(
                        f,
                        "[x1..x{n}]^{exponent}·I{} ⊈ I{}: {w}·{gen} has support {missing} ∉ I{}",
                        source + 1,
                        target + 1,
                        target + 1
                    )
                } else {
                    write!(
                        f,
                        "I{} ⊈ I{}: {missing} ∉ I{}",
                        source + 1,
                        target + 1,
                        target + 1
                    )
                }
            }
            Witness::PowerContainment {
                n,
                source,
                target,
                exponent,
                missing,
            } => write!(
                f,
                "{}·e{} missing: [x1..x{n}]^{exponent} ⊈ I{} (forced by component {})",
                missing,
                target + 1,
                target + 1,
                source + 1
            ),
            Witness::ModuleLexGap {
                degree,
                missing,
                present,
            } => write!(
                f,
                "degree {degree}: {missing} is missing although {present} is present"
            ),
        }
    }
}

/// Def: I is squarefree stable when for every minimal generator u and every
/// j < m(u) outside supp(u), the exchange x_j·u/x_{m(u)} stays in I.
pub fn check_stable_ideal(ideal: &MonomialIdeal) -> Verdict {
    for u in ideal.gens() {
        let m = u.max_index();
        for j in 1..m {
            if u.contains_var(j) {
                continue;
            }
            let moved = u.without_var(m).with_var(j);
            if !ideal.contains(&moved) {
                return Verdict::Fails(Witness::StableExchange {
                    component: None,
                    gen: *u,
                    replaced: m,
                    with: j,
                    missing: moved,
                });
            }
        }
    }
    Verdict::Holds
}

/// Strong variant: the exchange may replace any i ∈ supp(u), not only m(u).
pub fn check_strongly_stable_ideal(ideal: &MonomialIdeal) -> Verdict {
    for u in ideal.gens() {
        for i in u.vars() {
            for j in 1..i {
                if u.contains_var(j) {
                    continue;
                }
                let moved = u.without_var(i).with_var(j);
                if !ideal.contains(&moved) {
                    return Verdict::Fails(Witness::StableExchange {
                        component: None,
                        gen: *u,
                        replaced: i,
                        with: j,
                        missing: moved,
                    });
                }
            }
        }
    }
    Verdict::Holds
}

/// A lexsegment ideal has every degree slice equal to a slex prefix of the
/// full slice. All degrees from indeg I to n are enumerated, which guards
/// against membership flowing in from lower degrees.
pub fn check_lexsegment_ideal(ideal: &MonomialIdeal, limit: EnumLimit) -> Result<Verdict, Error> {
    let Some(indeg) = ideal.initial_degree() else {
        return Ok(Verdict::Holds);
    };
    let n = ideal.n();
    limit.check(n)?;
    for d in indeg..=n as usize {
        let mut first_missing: Option<SquarefreeMonomial> = None;
        for w in enumerate_squarefree(n, d) {
            if ideal.contains(&w) {
                if let Some(missing) = first_missing {
                    return Ok(Verdict::Fails(Witness::LexsegmentGap {
                        component: None,
                        degree: d,
                        missing,
                        present: w,
                    }));
                }
            } else if first_missing.is_none() {
                first_missing = Some(w);
            }
        }
    }
    Ok(Verdict::Holds)
}

fn tag_component(verdict: Verdict, c: usize) -> Verdict {
    match verdict {
        Verdict::Holds => Verdict::Holds,
        Verdict::Fails(mut w) => {
            match &mut w {
                Witness::StableExchange { component, .. }
                | Witness::LexsegmentGap { component, .. } => *component = Some(c),
                _ => {}
            }
            Verdict::Fails(w)
        }
    }
}

fn check_submodule_with(
    module: &GradedSubmodule,
    ideal_check: impl Fn(&MonomialIdeal) -> Verdict,
) -> Verdict {
    for (c, ideal) in module.ideals().iter().enumerate() {
        let v = ideal_check(ideal);
        if !v.holds() {
            return tag_component(v, c);
        }
    }
    for c in 0..module.rank() - 1 {
        let d = module.shift(c + 1) - module.shift(c);
        if let Some((factor, gen)) = product_power_witness(d, module.ideal(c + 1), module.ideal(c))
        {
            let missing =
                SquarefreeMonomial::from_mask(factor.map_or(0, |w| w.mask()) | gen.mask());
            return Verdict::Fails(Witness::ProductContainment {
                n: module.n(),
                source: c + 1,
                target: c,
                exponent: d,
                factor,
                gen,
                missing,
            });
        }
    }
    Verdict::Holds
}

/// Stable submodule test: per-ideal stability plus
/// `[x1..xn]^(f_{i+1}-f_i) I_{i+1} ⊆ I_i` for consecutive components.
pub fn check_stable_submodule(module: &GradedSubmodule) -> Verdict {
    check_submodule_with(module, check_stable_ideal)
}

pub fn check_strongly_stable_submodule(module: &GradedSubmodule) -> Verdict {
    check_submodule_with(module, check_strongly_stable_ideal)
}

/// Lexicographic submodule test via the component characterization.
///
/// Components with the zero ideal impose no condition, and an exponent past
/// n refers to the zero power ideal, whose containment holds.
pub fn check_lex_submodule(module: &GradedSubmodule, limit: EnumLimit) -> Result<Verdict, Error> {
    for (c, ideal) in module.ideals().iter().enumerate() {
        let v = check_lexsegment_ideal(ideal, limit)?;
        if !v.holds() {
            return Ok(tag_component(v, c));
        }
    }
    for c in 1..module.rank() {
        let Some(rho) = module.ideal(c).initial_degree() else {
            continue;
        };
        let exponent = rho as i64 + module.shift(c) - module.shift(c - 1);
        if let Some(missing) = power_witness(exponent, module.ideal(c - 1)) {
            return Ok(Verdict::Fails(Witness::PowerContainment {
                n: module.n(),
                source: c,
                target: c - 1,
                exponent,
                missing,
            }));
        }
    }
    Ok(Verdict::Holds)
}

/// Independent lexicographic test straight from the definition: for every
/// total degree, the squarefree monomials of F that lie in M must form a
/// prefix of the slexF-descending slice.
///
/// All degrees carrying any monomial of F are walked (the range is finite:
/// beyond n + f_r every slice is empty), so this is exact, not a sampling.
pub fn check_lex_submodule_direct(
    module: &GradedSubmodule,
    limit: EnumLimit,
) -> Result<Verdict, Error> {
    let n = module.n();
    limit.check(n)?;
    let lo = module.shift(0);
    let hi = module.shift(module.rank() - 1) + n as i64;
    for d in lo..=hi {
        let mut first_missing: Option<ModuleMonomial> = None;
        for c in 0..module.rank() {
            let dd = d - module.shift(c);
            if dd < 0 || dd > n as i64 {
                continue;
            }
            for u in enumerate_squarefree(n, dd as usize) {
                let mm = ModuleMonomial::new(u, c);
                if module.contains(&mm) {
                    if let Some(missing) = first_missing {
                        return Ok(Verdict::Fails(Witness::ModuleLexGap {
                            degree: d,
                            missing,
                            present: mm,
                        }));
                    }
                } else if first_missing.is_none() {
                    first_missing = Some(mm);
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// Classification of a module against all three classes.
#[derive(Clone, Debug)]
pub struct ClassReport {
    pub stable: Verdict,
    pub strongly_stable: Verdict,
    pub lex: Verdict,
}

impl ClassReport {
    pub fn is_stable(&self) -> bool {
        self.stable.holds()
    }

    pub fn is_strongly_stable(&self) -> bool {
        self.strongly_stable.holds()
    }

    pub fn is_lex(&self) -> bool {
        self.lex.holds()
    }
}

impl fmt::Display for ClassReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = |v: &Verdict| match v {
            Verdict::Holds => "YES".to_string(),
            Verdict::Fails(w) => format!("NO (witness: {w})"),
        };
        writeln!(f, "stable: {}", line(&self.stable))?;
        writeln!(f, "strongly stable: {}", line(&self.strongly_stable))?;
        write!(f, "lex: {}", line(&self.lex))
    }
}

pub fn classify(module: &GradedSubmodule, limit: EnumLimit) -> Result<ClassReport, Error> {
    Ok(ClassReport {
        stable: check_stable_submodule(module),
        strongly_stable: check_strongly_stable_submodule(module),
        lex: check_lex_submodule(module, limit)?,
    })
}

/// Maximal generator degrees per component of a lexicographic submodule and
/// the two inequality families they satisfy.
#[derive(Clone, Debug)]
pub struct MuReport {
    /// μ_i = max total degree of the generators in component i.
    pub mu: Vec<i64>,
    /// μ_1 <= μ_2 <= ... <= μ_r.
    pub ascending: bool,
    /// μ_i - f_i <= indeg I_{i+1} + f_{i+1} - f_i for i = 1..r-1.
    pub degree_bounds: bool,
}

impl MuReport {
    pub fn ok(&self) -> bool {
        self.ascending && self.degree_bounds
    }
}

/// Checks the generator-degree constraints of a lexicographic submodule.
/// Rejects non-lex input and components without generators.
pub fn mu_check(module: &GradedSubmodule, limit: EnumLimit) -> Result<MuReport, Error> {
    match check_lex_submodule(module, limit)? {
        Verdict::Holds => {}
        Verdict::Fails(w) => return Err(Error::NotLex(w.to_string())),
    }
    let mut mu = Vec::with_capacity(module.rank());
    for (c, ideal) in module.ideals().iter().enumerate() {
        let Some(top) = ideal.max_gen_degree() else {
            return Err(Error::EmptyComponent(c + 1));
        };
        mu.push(top as i64 + module.shift(c));
    }
    let ascending = mu.windows(2).all(|w| w[0] <= w[1]);
    let degree_bounds = mu
        .iter()
        .enumerate()
        .take(module.rank() - 1)
        .all(|(c, &m)| {
            let rho = module.ideal(c + 1).initial_degree().unwrap() as i64;
            m - module.shift(c) <= rho + module.shift(c + 1) - module.shift(c)
        });
    Ok(MuReport {
        mu,
        ascending,
        degree_bounds,
    })
}
