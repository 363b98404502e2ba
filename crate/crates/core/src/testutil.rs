//! Shared fixtures for unit tests: the worked ideals and modules whose
//! tables, corners and classifications are pinned throughout the test
//! suite.

use crate::betti::BettiTable;
use crate::ideal::MonomialIdeal;
use crate::module::GradedSubmodule;
use crate::monomial::SquarefreeMonomial;

pub fn m(vars: &[u32]) -> SquarefreeMonomial {
    SquarefreeMonomial::from_vars(vars).unwrap()
}

pub fn ideal(n: u32, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|g| m(g))).unwrap()
}

/// Strongly stable ideal in 7 variables with three extremal Betti numbers.
pub fn stable_ideal_n7() -> MonomialIdeal {
    ideal(
        7,
        &[
            &[1, 2],
            &[1, 3],
            &[1, 4],
            &[1, 5],
            &[1, 6],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 4, 5],
            &[2, 3, 6, 7],
            &[3, 4, 5, 6, 7],
        ],
    )
}

pub fn stable_ideal_n7_table() -> BettiTable {
    let mut t = BettiTable::new();
    for (i, v) in [5, 10, 10, 5, 1].iter().enumerate() {
        t.add(i, 2, *v);
    }
    for (i, v) in [3, 5, 2].iter().enumerate() {
        t.add(i, 3, *v);
    }
    for (i, v) in [1, 3, 3, 1].iter().enumerate() {
        t.add(i, 4, *v);
    }
    for (i, v) in [1, 2, 1].iter().enumerate() {
        t.add(i, 5, *v);
    }
    t
}

/// Stable rank-4 submodule of S^4 over 6 variables.
pub fn stable_module_n6() -> GradedSubmodule {
    let i1 = ideal(6, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3]]);
    let i2 = ideal(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[1, 3, 5],
            &[1, 3, 6],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 3, 6],
        ],
    );
    let i3 = ideal(
        6,
        &[
            &[1, 2, 3, 4],
            &[1, 2, 3, 5],
            &[1, 2, 4, 5],
            &[1, 2, 4, 6],
            &[2, 3, 4, 5],
        ],
    );
    let i4 = ideal(6, &[&[1, 2, 3, 4, 5]]);
    GradedSubmodule::new(6, vec![0, 0, 0, 0], vec![i1, i2, i3, i4]).unwrap()
}

pub fn stable_module_n6_table() -> BettiTable {
    let mut t = BettiTable::new();
    for (i, v) in [4, 4, 1].iter().enumerate() {
        t.add(i, 2, *v);
    }
    for (i, v) in [8, 13, 8, 2].iter().enumerate() {
        t.add(i, 3, *v);
    }
    for (i, v) in [5, 5, 1].iter().enumerate() {
        t.add(i, 4, *v);
    }
    t.add(0, 5, 1);
    t
}

/// Rank-2 submodule of S^2 over 4 variables made of two lexsegment ideals
/// that nevertheless fails to be a lexicographic submodule.
pub fn nonlex_module_n4() -> GradedSubmodule {
    let i1 = ideal(4, &[&[1, 2], &[1, 3]]);
    let i2 = ideal(4, &[&[1, 2, 3], &[1, 2, 4]]);
    GradedSubmodule::new(4, vec![0, 0], vec![i1, i2]).unwrap()
}

/// Rank-3 lexicographic submodule of S^3 over 5 variables.
pub fn lex_module_n5() -> GradedSubmodule {
    let i1 = MonomialIdeal::full_power(5, 2).unwrap();
    let i2 = ideal(
        5,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 2, 5],
            &[1, 3, 4],
            &[2, 3, 4, 5],
        ],
    );
    let i3 = ideal(5, &[&[1, 2, 3, 4], &[1, 2, 3, 5], &[1, 2, 4, 5]]);
    GradedSubmodule::new(5, vec![0, 0, 0], vec![i1, i2, i3]).unwrap()
}

/// ⊕ (x1x2) e_i over two variables: b-vector (r, 0).
pub fn n2_top_family(r: usize) -> GradedSubmodule {
    let i = ideal(2, &[&[1, 2]]);
    GradedSubmodule::new(2, vec![0; r], vec![i; r]).unwrap()
}

/// ⊕ (x1, x2) e_i over two variables: b-vector (0, r).
pub fn n2_linear_family(r: usize) -> GradedSubmodule {
    let i = ideal(2, &[&[1], &[2]]);
    GradedSubmodule::new(2, vec![0; r], vec![i; r]).unwrap()
}
