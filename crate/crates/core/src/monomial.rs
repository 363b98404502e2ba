//! Squarefree monomials, module monomials and the squarefree lexicographic
//! orders.
//!
//! A squarefree monomial in `x1..xn` is identified with its support set,
//! stored as a 64-bit mask (bit `i-1` set iff `xi` divides the monomial).
//! Divisibility, exchange moves and support unions are single bit
//! operations, which is what the stability and membership tests spend
//! their time on.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::Error;

/// Largest supported number of variables; indices live in `1..=64`.
pub const MAX_VARS: u32 = 64;

/// A squarefree monomial, i.e. a set of distinct variable indices.
///
/// The empty support is the monomial `1`, with `max_index() == 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    mask: u64,
}

impl SquarefreeMonomial {
    /// The monomial `1`.
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial { mask: 0 };

    /// Builds a monomial from variable indices (order-insensitive).
    pub fn from_vars(vars: &[u32]) -> Result<Self, Error> {
        let mut mask = 0u64;
        for &v in vars {
            if v == 0 || v > MAX_VARS {
                return Err(Error::VariableIndex(v));
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::DuplicateVariable(v));
            }
            mask |= bit;
        }
        Ok(Self { mask })
    }

    pub const fn from_mask(mask: u64) -> Self {
        Self { mask }
    }

    /// Support as a bit mask.
    pub const fn mask(self) -> u64 {
        self.mask
    }

    pub const fn is_one(self) -> bool {
        self.mask == 0
    }

    /// deg u = number of variables dividing u.
    pub const fn degree(self) -> usize {
        self.mask.count_ones() as usize
    }

    /// m(u) = the largest variable index dividing u; m(1) = 0.
    pub const fn max_index(self) -> u32 {
        64 - self.mask.leading_zeros()
    }

    /// Ascending variable indices.
    pub fn vars(self) -> impl Iterator<Item = u32> {
        (1..=MAX_VARS).filter(move |v| self.mask & (1u64 << (v - 1)) != 0)
    }

    pub const fn contains_var(self, v: u32) -> bool {
        v >= 1 && v <= MAX_VARS && self.mask & (1u64 << (v - 1)) != 0
    }

    pub const fn with_var(self, v: u32) -> Self {
        Self {
            mask: self.mask | (1u64 << (v - 1)),
        }
    }

    pub const fn without_var(self, v: u32) -> Self {
        Self {
            mask: self.mask & !(1u64 << (v - 1)),
        }
    }

    /// Whether this monomial divides the monomial with the given support.
    pub const fn divides(self, support: u64) -> bool {
        self.mask & support == self.mask
    }

    /// Whether every variable index is at most `n`.
    pub const fn fits(self, n: u32) -> bool {
        n >= MAX_VARS || self.mask >> n == 0
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        if self.max_index() <= 9 {
            for v in self.vars() {
                write!(f, "x{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.vars().map(|v| format!("x{v}")).join("*"))
        }
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Squarefree lexicographic comparison of monomials of equal degree.
///
/// `u > v` iff at the first index where the sorted variable lists differ,
/// `u`'s index is smaller. Returns `Greater` when `a >_slex b`.
///
/// Panics if the degrees differ; that is a contract violation.
pub fn slex_cmp(a: SquarefreeMonomial, b: SquarefreeMonomial) -> Ordering {
    assert_eq!(
        a.degree(),
        b.degree(),
        "slex compares monomials of equal degree"
    );
    let diff = a.mask() ^ b.mask();
    if diff == 0 {
        return Ordering::Equal;
    }
    // The lowest differing bit is the first position where the sorted
    // index lists disagree; whoever owns it has the smaller index there.
    let low = diff & diff.wrapping_neg();
    if a.mask() & low != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Canonical storage order: degree ascending, slex-descending within a degree.
pub(crate) fn canonical_cmp(a: SquarefreeMonomial, b: SquarefreeMonomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| slex_cmp(a, b).reverse())
}

/// All `C(n, d)` squarefree degree-`d` monomials in `x1..xn`, strictly
/// decreasing under slex. Empty when `d > n`; `[1]` when `d = 0`.
pub fn enumerate_squarefree(n: u32, d: usize) -> Vec<SquarefreeMonomial> {
    // Lexicographic ascending combinations of indices are exactly
    // slex-descending monomials.
    (1..=n)
        .combinations(d)
        .map(|vars| {
            let mut mask = 0u64;
            for v in vars {
                mask |= 1u64 << (v - 1);
            }
            SquarefreeMonomial::from_mask(mask)
        })
        .collect()
}

/// A monomial `u·e_i` of a graded free module, with 0-based component index.
///
/// Its total degree is `deg(u) + f_i` where `f_i` is the shift of the owning
/// module; the component alone does not know the shift.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mono: SquarefreeMonomial,
    pub component: usize,
}

impl ModuleMonomial {
    pub fn new(mono: SquarefreeMonomial, component: usize) -> Self {
        Self { mono, component }
    }
}

impl fmt::Display for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·e{}", self.mono, self.component + 1)
    }
}

impl fmt::Debug for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Squarefree lexicographic order on module monomials of equal total degree:
/// `u·e_i > v·e_j` iff `i < j`, or `i = j` and `u >_slex v`.
///
/// Callers are responsible for comparing only monomials of equal total
/// degree (equal-component comparisons check the monomial degrees).
pub fn slexf_cmp(a: &ModuleMonomial, b: &ModuleMonomial) -> Ordering {
    b.component
        .cmp(&a.component)
        .then_with(|| slex_cmp(a.mono, b.mono))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(vars: &[u32]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_vars(vars).unwrap()
    }

    #[test]
    fn monomial_stats() {
        let u = m(&[2, 3, 6, 7]);
        assert_eq!(u.degree(), 4);
        assert_eq!(u.vars().collect::<Vec<_>>(), vec![2, 3, 6, 7]);
        assert_eq!(u.max_index(), 7);

        assert_eq!(SquarefreeMonomial::ONE.degree(), 0);
        assert_eq!(SquarefreeMonomial::ONE.max_index(), 0);
        assert!(SquarefreeMonomial::ONE.vars().next().is_none());

        let x1 = m(&[1]);
        assert_eq!((x1.degree(), x1.max_index()), (1, 1));
    }

    #[test]
    fn from_vars_rejects_bad_indices() {
        assert!(SquarefreeMonomial::from_vars(&[0]).is_err());
        assert!(SquarefreeMonomial::from_vars(&[65]).is_err());
        assert!(SquarefreeMonomial::from_vars(&[3, 3]).is_err());
        assert!(SquarefreeMonomial::from_vars(&[3, 1]).is_ok());
    }

    #[test]
    fn slex_examples() {
        assert_eq!(slex_cmp(m(&[1, 2, 3]), m(&[1, 2, 4])), Ordering::Greater);
        assert_eq!(slex_cmp(m(&[1, 3]), m(&[2, 3])), Ordering::Greater);
        assert_eq!(slex_cmp(m(&[1, 2, 4]), m(&[1, 2, 4])), Ordering::Equal);
        assert_eq!(slex_cmp(m(&[2, 3, 4]), m(&[1, 3, 4])), Ordering::Less);
    }

    #[test]
    #[should_panic]
    fn slex_degree_mismatch_panics() {
        let _ = slex_cmp(m(&[1]), m(&[1, 2]));
    }

    #[test]
    fn slexf_examples() {
        // component dominates: x2x3x4·e1 > x1x2x3·e2
        let a = ModuleMonomial::new(m(&[2, 3, 4]), 0);
        let b = ModuleMonomial::new(m(&[1, 2, 3]), 1);
        assert_eq!(slexf_cmp(&a, &b), Ordering::Greater);

        // same component reduces to slex
        let c = ModuleMonomial::new(m(&[1, 3]), 1);
        let d = ModuleMonomial::new(m(&[2, 3]), 1);
        assert_eq!(slexf_cmp(&c, &d), Ordering::Greater);

        assert_eq!(slexf_cmp(&a, &a), Ordering::Equal);
    }

    #[test]
    fn divides_by_support() {
        assert!(m(&[1, 2]).divides(m(&[1, 2, 3]).mask()));
        assert!(!m(&[1, 3]).divides(m(&[1, 2]).mask()));
        assert!(SquarefreeMonomial::ONE.divides(m(&[4]).mask()));
        assert!(SquarefreeMonomial::ONE.divides(0));
    }

    #[test]
    fn enumerate_order_and_edges() {
        let slice = enumerate_squarefree(4, 3);
        let expect = vec![m(&[1, 2, 3]), m(&[1, 2, 4]), m(&[1, 3, 4]), m(&[2, 3, 4])];
        assert_eq!(slice, expect);

        assert_eq!(enumerate_squarefree(3, 0), vec![SquarefreeMonomial::ONE]);
        assert!(enumerate_squarefree(3, 5).is_empty());
    }

    #[test]
    fn display_forms() {
        assert_eq!(m(&[2, 3, 4]).to_string(), "x2x3x4");
        assert_eq!(SquarefreeMonomial::ONE.to_string(), "1");
        assert_eq!(m(&[3, 12]).to_string(), "x3*x12");
        assert_eq!(
            ModuleMonomial::new(m(&[2, 3, 4]), 0).to_string(),
            "x2x3x4·e1"
        );
    }
}
