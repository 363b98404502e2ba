//! Squarefree monomial ideals given by their unique minimal generators.
//!
//! Generators form an antichain under support containment, kept in a
//! canonical order (degree ascending, slex-descending within a degree) so
//! every iteration in the crate is deterministic.

use crate::error::Error;
use crate::monomial::{canonical_cmp, enumerate_squarefree, SquarefreeMonomial};

/// A proper or zero squarefree monomial ideal of `K[x1..xn]`.
///
/// An empty generator list is the zero ideal. The unit ideal is not
/// representable: the monomial `1` is rejected as a generator.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: u32,
    gens: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw`, minimalizing to the antichain of
    /// support-minimal elements.
    pub fn new(n: u32, raw: impl IntoIterator<Item = SquarefreeMonomial>) -> Result<Self, Error> {
        if n == 0 || n > crate::monomial::MAX_VARS {
            return Err(Error::VarCount(n));
        }
        let mut list = Vec::new();
        for g in raw {
            if g.is_one() {
                return Err(Error::UnitGenerator);
            }
            if !g.fits(n) {
                return Err(Error::MonomialRange(g.to_string(), n));
            }
            list.push(g);
        }
        Ok(Self {
            n,
            gens: minimalize(list),
        })
    }

    /// The zero ideal of `K[x1..xn]`.
    pub fn zero(n: u32) -> Self {
        Self {
            n,
            gens: Vec::new(),
        }
    }

    /// The ideal generated by all degree-`d` squarefree monomials,
    /// for `1 <= d <= n`.
    pub fn full_power(n: u32, d: i64) -> Result<Self, Error> {
        if n == 0 || n > crate::monomial::MAX_VARS {
            return Err(Error::VarCount(n));
        }
        if d < 1 || d > n as i64 {
            return Err(Error::DegreeRange(d, n));
        }
        Ok(Self {
            n,
            gens: enumerate_squarefree(n, d as usize),
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The minimal generators G(I), in canonical order.
    pub fn gens(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// G(I)_d, the degree-`d` slice of the minimal generators.
    pub fn gens_of_degree(&self, d: usize) -> impl Iterator<Item = &SquarefreeMonomial> {
        self.gens.iter().filter(move |g| g.degree() == d)
    }

    /// G(I)_{>d}.
    pub fn gens_above_degree(&self, d: usize) -> impl Iterator<Item = &SquarefreeMonomial> {
        self.gens.iter().filter(move |g| g.degree() > d)
    }

    /// indeg I, the smallest generator degree; `None` for the zero ideal.
    pub fn initial_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_gen_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    /// Monomial membership: the monomial with support `support` lies in the
    /// ideal iff some minimal generator divides it.
    pub fn contains_support(&self, support: u64) -> bool {
        self.gens.iter().any(|g| g.divides(support))
    }

    pub fn contains(&self, m: &SquarefreeMonomial) -> bool {
        self.contains_support(m.mask())
    }

    /// Ideal containment `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_support(g.mask()))
    }
}

impl std::fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Reduces a generating set to the antichain of support-minimal elements.
/// Idempotent and order-independent.
pub fn minimalize(mut raw: Vec<SquarefreeMonomial>) -> Vec<SquarefreeMonomial> {
    raw.sort_by(|a, b| canonical_cmp(*a, *b));
    raw.dedup();
    let mut kept: Vec<SquarefreeMonomial> = Vec::with_capacity(raw.len());
    for g in raw {
        // kept is sorted by degree, so only lower-degree elements can divide g
        if !kept.iter().any(|h| h.divides(g.mask())) {
            kept.push(g);
        }
    }
    kept
}

/// First monomial of `[x1..xn]^d` missing from `target`, in slex-descending
/// order; `None` when `[x1..xn]^d ⊆ target`.
///
/// For `d > n` the power is the zero ideal and the containment always holds.
/// For `d <= 0` it is the unit ideal, never contained in a proper `target`.
pub fn power_witness(d: i64, target: &MonomialIdeal) -> Option<SquarefreeMonomial> {
    let n = target.n();
    if d > n as i64 {
        return None;
    }
    if d <= 0 {
        return Some(SquarefreeMonomial::ONE);
    }
    enumerate_squarefree(n, d as usize)
        .into_iter()
        .find(|w| !target.contains_support(w.mask()))
}

/// `[x1..xn]^d ⊆ target`?
pub fn power_contained(d: i64, target: &MonomialIdeal) -> bool {
    power_witness(d, target).is_none()
}

/// First failing pair of `[x1..xn]^d · factor ⊆ target`, as
/// `(power monomial, generator of factor)`; the power monomial is `None`
/// in the degenerate `d = 0` case (plain ideal containment).
///
/// The product is taken squarefree-ly: only support-disjoint pairs produce
/// a squarefree monomial and impose a condition. Pairs with overlapping
/// supports are skipped — their products vanish in the exterior reading
/// these ideals live in, and counting them would break the hierarchy
/// lexicographic ⇒ strongly stable ⇒ stable on shifted modules.
pub fn product_power_witness(
    d: i64,
    factor: &MonomialIdeal,
    target: &MonomialIdeal,
) -> Option<(Option<SquarefreeMonomial>, SquarefreeMonomial)> {
    debug_assert_eq!(factor.n(), target.n());
    debug_assert!(d >= 0, "power exponents are non-negative");
    let n = target.n();
    if d > n as i64 || factor.is_zero() {
        return None;
    }
    if d == 0 {
        return factor
            .gens()
            .iter()
            .find(|u| !target.contains_support(u.mask()))
            .map(|u| (None, *u));
    }
    for w in enumerate_squarefree(n, d as usize) {
        for u in factor.gens() {
            if w.mask() & u.mask() != 0 {
                continue;
            }
            // only the support of the product matters for squarefree
            // divisibility, so the product itself is never materialized
            if !target.contains_support(w.mask() | u.mask()) {
                return Some((Some(w), *u));
            }
        }
    }
    None
}

/// `[x1..xn]^d · factor ⊆ target`?
pub fn product_power_contained(d: i64, factor: &MonomialIdeal, target: &MonomialIdeal) -> bool {
    product_power_witness(d, factor, target).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(vars: &[u32]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_vars(vars).unwrap()
    }

    fn ideal(n: u32, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let i = ideal(3, &[&[1, 2], &[1, 2, 3]]);
        assert_eq!(i.gens(), &[m(&[1, 2])]);

        let full = ideal(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert_eq!(full.gens().len(), 4);
        assert_eq!(full, MonomialIdeal::full_power(4, 3).unwrap());

        assert!(MonomialIdeal::new(4, []).unwrap().is_zero());
    }

    #[test]
    fn minimalize_is_idempotent() {
        let raw = vec![m(&[1, 2]), m(&[1, 2, 3]), m(&[2, 4]), m(&[2, 3, 4])];
        let once = minimalize(raw);
        let twice = minimalize(once.clone());
        assert_eq!(once, twice);
    }

    #[test]
    fn unit_generator_rejected() {
        assert!(matches!(
            MonomialIdeal::new(3, [SquarefreeMonomial::ONE]),
            Err(Error::UnitGenerator)
        ));
    }

    #[test]
    fn membership() {
        let i = ideal(4, &[&[1, 2], &[1, 3]]);
        assert!(!i.contains(&m(&[2, 3, 4])));
        assert!(i.contains(&m(&[1, 3, 4])));
        assert!(!MonomialIdeal::zero(4).contains(&m(&[1, 2])));
    }

    #[test]
    fn power_containment() {
        let i = ideal(4, &[&[1, 2], &[1, 3]]);
        // x2x3x4 witnesses [x1..x4]^3 ⊄ (x1x2, x1x3)
        assert_eq!(power_witness(3, &i), Some(m(&[2, 3, 4])));
        assert!(!power_contained(3, &i));
        assert!(power_contained(5, &i));
        assert!(!power_contained(0, &i));
    }

    #[test]
    fn product_power_containment() {
        let i1 = ideal(3, &[&[1, 2]]);
        let i2 = ideal(3, &[&[1, 2], &[1, 3]]);
        // d = 0 degenerates to ideal containment
        assert!(product_power_contained(0, &i1, &i2));
        assert!(!product_power_contained(0, &i2, &i1));
        assert_eq!(product_power_witness(0, &i2, &i1), Some((None, m(&[1, 3]))));
        // the only squarefree products are x2·x1x3 and x3·x1x2, both in (x1x2)
        assert!(product_power_contained(1, &i2, &i1));
        // a genuinely escaping product: x1·x3x4 ∉ (x1x2)
        let j = ideal(4, &[&[3, 4]]);
        let t = ideal(4, &[&[1, 2]]);
        assert!(!product_power_contained(1, &j, &t));
        assert_eq!(
            product_power_witness(1, &j, &t),
            Some((Some(m(&[1])), m(&[3, 4])))
        );
        // overlapping supports impose no condition: x2·x2x3 vanishes
        let overlap = ideal(3, &[&[2, 3]]);
        let narrow = ideal(3, &[&[1, 2, 3]]);
        assert!(product_power_contained(1, &overlap, &narrow));
        // d past n: zero module on the left
        assert!(product_power_contained(4, &i2, &i1));
        // zero factor
        assert!(product_power_contained(1, &MonomialIdeal::zero(3), &i1));
    }

    #[test]
    fn degree_slices() {
        let i = ideal(4, &[&[1, 2], &[1, 3, 4]]);
        assert_eq!(i.gens_of_degree(2).count(), 1);
        assert_eq!(i.gens_above_degree(2).count(), 1);
        assert_eq!(i.initial_degree(), Some(2));
        assert_eq!(i.max_gen_degree(), Some(3));
        assert_eq!(MonomialIdeal::zero(4).initial_degree(), None);
    }

    #[test]
    fn full_power_bounds() {
        assert!(MonomialIdeal::full_power(4, 0).is_err());
        assert!(MonomialIdeal::full_power(4, 5).is_err());
        let top = MonomialIdeal::full_power(3, 3).unwrap();
        assert_eq!(top.gens(), &[m(&[1, 2, 3])]);
        let linear = MonomialIdeal::full_power(3, 1).unwrap();
        assert_eq!(linear.gens(), &[m(&[1]), m(&[2]), m(&[3])]);
    }
}
