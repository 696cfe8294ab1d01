//! The explicit expansion formulas for `k = 1..7`, term by term.
//!
//! Each term is one product `∏ 1{i_g = i_g' ≠ 0} 1{j_g = j_g'} ∏ ζ_{j_q}^{(i_q)}`
//! with sign `(−1)^{#pairs}`. Positions are 1-based.

pub(crate) struct Term {
    pub pairs: &'static [(usize, usize)],
    pub singles: &'static [usize],
}

impl Term {
    pub fn sign(&self) -> f64 {
        if self.pairs.len().is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }
}

pub(crate) fn terms(k: usize) -> Option<&'static [Term]> {
    Some(match k {
        1 => K1,
        2 => K2,
        3 => K3,
        4 => K4,
        5 => K5,
        6 => K6,
        7 => K7,
        _ => return None,
    })
}

#[rustfmt::skip]
const K1: &[Term] = &[
    Term { pairs: &[], singles: &[1] },
];

#[rustfmt::skip]
const K2: &[Term] = &[
    Term { pairs: &[], singles: &[1, 2] },
    Term { pairs: &[(1, 2)], singles: &[] },
];

#[rustfmt::skip]
const K3: &[Term] = &[
    Term { pairs: &[], singles: &[1, 2, 3] },
    Term { pairs: &[(1, 2)], singles: &[3] },
    Term { pairs: &[(2, 3)], singles: &[1] },
    Term { pairs: &[(1, 3)], singles: &[2] },
];

#[rustfmt::skip]
const K4: &[Term] = &[
    Term { pairs: &[], singles: &[1, 2, 3, 4] },
    Term { pairs: &[(1, 2)], singles: &[3, 4] },
    Term { pairs: &[(1, 3)], singles: &[2, 4] },
    Term { pairs: &[(1, 4)], singles: &[2, 3] },
    Term { pairs: &[(2, 3)], singles: &[1, 4] },
    Term { pairs: &[(2, 4)], singles: &[1, 3] },
    Term { pairs: &[(3, 4)], singles: &[1, 2] },
    Term { pairs: &[(1, 2), (3, 4)], singles: &[] },
    Term { pairs: &[(1, 3), (2, 4)], singles: &[] },
    Term { pairs: &[(1, 4), (2, 3)], singles: &[] },
];

#[rustfmt::skip]
const K5: &[Term] = &[
    Term { pairs: &[], singles: &[1, 2, 3, 4, 5] },
    Term { pairs: &[(1, 2)], singles: &[3, 4, 5] },
    Term { pairs: &[(1, 3)], singles: &[2, 4, 5] },
    Term { pairs: &[(1, 4)], singles: &[2, 3, 5] },
    Term { pairs: &[(1, 5)], singles: &[2, 3, 4] },
    Term { pairs: &[(2, 3)], singles: &[1, 4, 5] },
    Term { pairs: &[(2, 4)], singles: &[1, 3, 5] },
    Term { pairs: &[(2, 5)], singles: &[1, 3, 4] },
    Term { pairs: &[(3, 4)], singles: &[1, 2, 5] },
    Term { pairs: &[(3, 5)], singles: &[1, 2, 4] },
    Term { pairs: &[(4, 5)], singles: &[1, 2, 3] },
    Term { pairs: &[(1, 2), (3, 4)], singles: &[5] },
    Term { pairs: &[(1, 2), (3, 5)], singles: &[4] },
    Term { pairs: &[(1, 2), (4, 5)], singles: &[3] },
    Term { pairs: &[(1, 3), (2, 4)], singles: &[5] },
    Term { pairs: &[(1, 3), (2, 5)], singles: &[4] },
    Term { pairs: &[(1, 3), (4, 5)], singles: &[2] },
    Term { pairs: &[(1, 4), (2, 3)], singles: &[5] },
    Term { pairs: &[(1, 4), (2, 5)], singles: &[3] },
    Term { pairs: &[(1, 4), (3, 5)], singles: &[2] },
    Term { pairs: &[(1, 5), (2, 3)], singles: &[4] },
    Term { pairs: &[(1, 5), (2, 4)], singles: &[3] },
    Term { pairs: &[(1, 5), (3, 4)], singles: &[2] },
    Term { pairs: &[(2, 3), (4, 5)], singles: &[1] },
    Term { pairs: &[(2, 4), (3, 5)], singles: &[1] },
    Term { pairs: &[(2, 5), (3, 4)], singles: &[1] },
];

#[rustfmt::skip]
const K6: &[Term] = &[
    Term { pairs: &[], singles: &[1, 2, 3, 4, 5, 6] },
    Term { pairs: &[(1, 6)], singles: &[2, 3, 4, 5] },
    Term { pairs: &[(2, 6)], singles: &[1, 3, 4, 5] },
    Term { pairs: &[(3, 6)], singles: &[1, 2, 4, 5] },
    Term { pairs: &[(4, 6)], singles: &[1, 2, 3, 5] },
    Term { pairs: &[(5, 6)], singles: &[1, 2, 3, 4] },
    Term { pairs: &[(1, 2)], singles: &[3, 4, 5, 6] },
    Term { pairs: &[(1, 3)], singles: &[2, 4, 5, 6] },
    Term { pairs: &[(1, 4)], singles: &[2, 3, 5, 6] },
    Term { pairs: &[(1, 5)], singles: &[2, 3, 4, 6] },
    Term { pairs: &[(2, 3)], singles: &[1, 4, 5, 6] },
    Term { pairs: &[(2, 4)], singles: &[1, 3, 5, 6] },
    Term { pairs: &[(2, 5)], singles: &[1, 3, 4, 6] },
    Term { pairs: &[(3, 4)], singles: &[1, 2, 5, 6] },
    Term { pairs: &[(3, 5)], singles: &[1, 2, 4, 6] },
    Term { pairs: &[(4, 5)], singles: &[1, 2, 3, 6] },
    Term { pairs: &[(1, 2), (3, 4)], singles: &[5, 6] },
    Term { pairs: &[(1, 2), (3, 5)], singles: &[4, 6] },
    Term { pairs: &[(1, 2), (4, 5)], singles: &[3, 6] },
    Term { pairs: &[(1, 3), (2, 4)], singles: &[5, 6] },
    Term { pairs: &[(1, 3), (2, 5)], singles: &[4, 6] },
    Term { pairs: &[(1, 3), (4, 5)], singles: &[2, 6] },
    Term { pairs: &[(1, 4), (2, 3)], singles: &[5, 6] },
    Term { pairs: &[(1, 4), (2, 5)], singles: &[3, 6] },
    Term { pairs: &[(1, 4), (3, 5)], singles: &[2, 6] },
    Term { pairs: &[(1, 5), (2, 3)], singles: &[4, 6] },
    Term { pairs: &[(1, 5), (2, 4)], singles: &[3, 6] },
    Term { pairs: &[(1, 5), (3, 4)], singles: &[2, 6] },
    Term { pairs: &[(2, 3), (4, 5)], singles: &[1, 6] },
    Term { pairs: &[(2, 4), (3, 5)], singles: &[1, 6] },
    Term { pairs: &[(2, 5), (3, 4)], singles: &[1, 6] },
    Term { pairs: &[(1, 6), (3, 4)], singles: &[2, 5] },
    Term { pairs: &[(1, 6), (3, 5)], singles: &[2, 4] },
    Term { pairs: &[(1, 6), (2, 5)], singles: &[3, 4] },
    Term { pairs: &[(1, 6), (2, 4)], singles: &[3, 5] },
    Term { pairs: &[(1, 6), (4, 5)], singles: &[2, 3] },
    Term { pairs: &[(1, 6), (2, 3)], singles: &[4, 5] },
    Term { pairs: &[(2, 6), (3, 5)], singles: &[1, 4] },
    Term { pairs: &[(2, 6), (4, 5)], singles: &[1, 3] },
    Term { pairs: &[(2, 6), (3, 4)], singles: &[1, 5] },
    Term { pairs: &[(1, 5), (2, 6)], singles: &[3, 4] },
    Term { pairs: &[(1, 4), (2, 6)], singles: &[3, 5] },
    Term { pairs: &[(1, 3), (2, 6)], singles: &[4, 5] },
    Term { pairs: &[(2, 5), (3, 6)], singles: &[1, 4] },
    Term { pairs: &[(3, 6), (4, 5)], singles: &[1, 2] },
    Term { pairs: &[(2, 4), (3, 6)], singles: &[1, 5] },
    Term { pairs: &[(1, 5), (3, 6)], singles: &[2, 4] },
    Term { pairs: &[(1, 4), (3, 6)], singles: &[2, 5] },
    Term { pairs: &[(1, 2), (3, 6)], singles: &[4, 5] },
    Term { pairs: &[(3, 5), (4, 6)], singles: &[1, 2] },
    Term { pairs: &[(2, 5), (4, 6)], singles: &[1, 3] },
    Term { pairs: &[(2, 3), (4, 6)], singles: &[1, 5] },
    Term { pairs: &[(1, 5), (4, 6)], singles: &[2, 3] },
    Term { pairs: &[(1, 3), (4, 6)], singles: &[2, 5] },
    Term { pairs: &[(1, 2), (4, 6)], singles: &[3, 5] },
    Term { pairs: &[(3, 4), (5, 6)], singles: &[1, 2] },
    Term { pairs: &[(2, 4), (5, 6)], singles: &[1, 3] },
    Term { pairs: &[(2, 3), (5, 6)], singles: &[1, 4] },
    Term { pairs: &[(1, 4), (5, 6)], singles: &[2, 3] },
    Term { pairs: &[(1, 3), (5, 6)], singles: &[2, 4] },
    Term { pairs: &[(1, 2), (5, 6)], singles: &[3, 4] },
    Term { pairs: &[(1, 6), (2, 5), (3, 4)], singles: &[] },
    Term { pairs: &[(1, 6), (2, 4), (3, 5)], singles: &[] },
    Term { pairs: &[(1, 6), (2, 3), (4, 5)], singles: &[] },
    Term { pairs: &[(1, 5), (2, 6), (3, 4)], singles: &[] },
    Term { pairs: &[(1, 4), (2, 6), (3, 5)], singles: &[] },
    Term { pairs: &[(1, 3), (2, 6), (4, 5)], singles: &[] },
    Term { pairs: &[(1, 5), (2, 4), (3, 6)], singles: &[] },
    Term { pairs: &[(1, 4), (2, 5), (3, 6)], singles: &[] },
    Term { pairs: &[(1, 2), (3, 6), (4, 5)], singles: &[] },
    Term { pairs: &[(1, 5), (2, 3), (4, 6)], singles: &[] },
    Term { pairs: &[(1, 3), (2, 5), (4, 6)], singles: &[] },
    Term { pairs: &[(1, 2), (3, 5), (4, 6)], singles: &[] },
    Term { pairs: &[(1, 4), (2, 3), (5, 6)], singles: &[] },
    Term { pairs: &[(1, 2), (3, 4), (5, 6)], singles: &[] },
    Term { pairs: &[(1, 3), (2, 4), (5, 6)], singles: &[] },
];

#[rustfmt::skip]
const K7: &[Term] = &[
    Term { pairs: &[], singles: &[1, 2, 3, 4, 5, 6, 7] },
    Term { pairs: &[(1, 6)], singles: &[2, 3, 4, 5, 7] },
    Term { pairs: &[(2, 6)], singles: &[1, 3, 4, 5, 7] },
    Term { pairs: &[(3, 6)], singles: &[1, 2, 4, 5, 7] },
    Term { pairs: &[(4, 6)], singles: &[1, 2, 3, 5, 7] },
    Term { pairs: &[(5, 6)], singles: &[1, 2, 3, 4, 7] },
    Term { pairs: &[(1, 2)], singles: &[3, 4, 5, 6, 7] },
    Term { pairs: &[(1, 3)], singles: &[2, 4, 5, 6, 7] },
    Term { pairs: &[(1, 4)], singles: &[2, 3, 5, 6, 7] },
    Term { pairs: &[(1, 5)], singles: &[2, 3, 4, 6, 7] },
    Term { pairs: &[(2, 3)], singles: &[1, 4, 5, 6, 7] },
    Term { pairs: &[(2, 4)], singles: &[1, 3, 5, 6, 7] },
    Term { pairs: &[(2, 5)], singles: &[1, 3, 4, 6, 7] },
    Term { pairs: &[(3, 4)], singles: &[1, 2, 5, 6, 7] },
    Term { pairs: &[(3, 5)], singles: &[1, 2, 4, 6, 7] },
    Term { pairs: &[(4, 5)], singles: &[1, 2, 3, 6, 7] },
    Term { pairs: &[(1, 7)], singles: &[2, 3, 4, 5, 6] },
    Term { pairs: &[(2, 7)], singles: &[1, 3, 4, 5, 6] },
    Term { pairs: &[(3, 7)], singles: &[1, 2, 4, 5, 6] },
    Term { pairs: &[(4, 7)], singles: &[1, 2, 3, 5, 6] },
    Term { pairs: &[(5, 7)], singles: &[1, 2, 3, 4, 6] },
    Term { pairs: &[(6, 7)], singles: &[1, 2, 3, 4, 5] },
    Term { pairs: &[(1, 2), (3, 4)], singles: &[5, 6, 7] },
    Term { pairs: &[(1, 2), (3, 5)], singles: &[4, 6, 7] },
    Term { pairs: &[(1, 2), (4, 5)], singles: &[3, 6, 7] },
    Term { pairs: &[(1, 3), (2, 4)], singles: &[5, 6, 7] },
    Term { pairs: &[(1, 3), (2, 5)], singles: &[4, 6, 7] },
    Term { pairs: &[(1, 3), (4, 5)], singles: &[2, 6, 7] },
    Term { pairs: &[(1, 4), (2, 3)], singles: &[5, 6, 7] },
    Term { pairs: &[(1, 4), (2, 5)], singles: &[3, 6, 7] },
    Term { pairs: &[(1, 4), (3, 5)], singles: &[2, 6, 7] },
    Term { pairs: &[(1, 5), (2, 3)], singles: &[4, 6, 7] },
    Term { pairs: &[(1, 5), (2, 4)], singles: &[3, 6, 7] },
    Term { pairs: &[(1, 5), (3, 4)], singles: &[2, 6, 7] },
    Term { pairs: &[(2, 3), (4, 5)], singles: &[1, 6, 7] },
    Term { pairs: &[(2, 4), (3, 5)], singles: &[1, 6, 7] },
    Term { pairs: &[(2, 5), (3, 4)], singles: &[1, 6, 7] },
    Term { pairs: &[(1, 6), (3, 4)], singles: &[2, 5, 7] },
    Term { pairs: &[(1, 6), (3, 5)], singles: &[2, 4, 7] },
    Term { pairs: &[(1, 6), (2, 5)], singles: &[3, 4, 7] },
    Term { pairs: &[(1, 6), (2, 4)], singles: &[3, 5, 7] },
    Term { pairs: &[(1, 6), (4, 5)], singles: &[2, 3, 7] },
    Term { pairs: &[(1, 6), (2, 3)], singles: &[4, 5, 7] },
    Term { pairs: &[(2, 6), (3, 5)], singles: &[1, 4, 7] },
    Term { pairs: &[(2, 6), (4, 5)], singles: &[1, 3, 7] },
    Term { pairs: &[(2, 6), (3, 4)], singles: &[1, 5, 7] },
    Term { pairs: &[(1, 5), (2, 6)], singles: &[3, 4, 7] },
    Term { pairs: &[(1, 4), (2, 6)], singles: &[3, 5, 7] },
    Term { pairs: &[(1, 3), (2, 6)], singles: &[4, 5, 7] },
    Term { pairs: &[(2, 5), (3, 6)], singles: &[1, 4, 7] },
    Term { pairs: &[(3, 6), (4, 5)], singles: &[1, 2, 7] },
    Term { pairs: &[(2, 4), (3, 6)], singles: &[1, 5, 7] },
    Term { pairs: &[(1, 5), (3, 6)], singles: &[2, 4, 7] },
    Term { pairs: &[(1, 4), (3, 6)], singles: &[2, 5, 7] },
    Term { pairs: &[(1, 2), (3, 6)], singles: &[4, 5, 7] },
    Term { pairs: &[(3, 5), (4, 6)], singles: &[1, 2, 7] },
    Term { pairs: &[(2, 5), (4, 6)], singles: &[1, 3, 7] },
    Term { pairs: &[(2, 3), (4, 6)], singles: &[1, 5, 7] },
    Term { pairs: &[(1, 5), (4, 6)], singles: &[2, 3, 7] },
    Term { pairs: &[(1, 3), (4, 6)], singles: &[2, 5, 7] },
    Term { pairs: &[(1, 2), (4, 6)], singles: &[3, 5, 7] },
    Term { pairs: &[(3, 4), (5, 6)], singles: &[1, 2, 7] },
    Term { pairs: &[(2, 4), (5, 6)], singles: &[1, 3, 7] },
    Term { pairs: &[(2, 3), (5, 6)], singles: &[1, 4, 7] },
    Term { pairs: &[(1, 4), (5, 6)], singles: &[2, 3, 7] },
    Term { pairs: &[(1, 3), (5, 6)], singles: &[2, 4, 7] },
    Term { pairs: &[(1, 2), (5, 6)], singles: &[3, 4, 7] },
    Term { pairs: &[(1, 7), (2, 3)], singles: &[4, 5, 6] },
    Term { pairs: &[(1, 7), (2, 4)], singles: &[3, 5, 6] },
    Term { pairs: &[(1, 7), (2, 5)], singles: &[3, 4, 6] },
    Term { pairs: &[(1, 7), (2, 6)], singles: &[3, 4, 5] },
    Term { pairs: &[(1, 7), (3, 4)], singles: &[2, 5, 6] },
    Term { pairs: &[(1, 7), (3, 5)], singles: &[2, 4, 6] },
    Term { pairs: &[(1, 7), (3, 6)], singles: &[2, 4, 5] },
    Term { pairs: &[(1, 7), (4, 5)], singles: &[2, 3, 6] },
    Term { pairs: &[(1, 7), (4, 6)], singles: &[2, 3, 5] },
    Term { pairs: &[(1, 7), (5, 6)], singles: &[2, 3, 4] },
    Term { pairs: &[(1, 3), (2, 7)], singles: &[4, 5, 6] },
    Term { pairs: &[(1, 4), (2, 7)], singles: &[3, 5, 6] },
    Term { pairs: &[(1, 5), (2, 7)], singles: &[3, 4, 6] },
    Term { pairs: &[(1, 6), (2, 7)], singles: &[3, 4, 5] },
    Term { pairs: &[(2, 7), (3, 4)], singles: &[1, 5, 6] },
    Term { pairs: &[(2, 7), (3, 5)], singles: &[1, 4, 6] },
    Term { pairs: &[(2, 7), (3, 6)], singles: &[1, 4, 5] },
    Term { pairs: &[(2, 7), (4, 5)], singles: &[1, 3, 6] },
    Term { pairs: &[(2, 7), (4, 6)], singles: &[1, 3, 5] },
    Term { pairs: &[(2, 7), (5, 6)], singles: &[1, 3, 4] },
    Term { pairs: &[(1, 2), (3, 7)], singles: &[4, 5, 6] },
    Term { pairs: &[(1, 4), (3, 7)], singles: &[2, 5, 6] },
    Term { pairs: &[(1, 5), (3, 7)], singles: &[2, 4, 6] },
    Term { pairs: &[(1, 6), (3, 7)], singles: &[2, 4, 5] },
    Term { pairs: &[(2, 4), (3, 7)], singles: &[1, 5, 6] },
    Term { pairs: &[(2, 5), (3, 7)], singles: &[1, 4, 6] },
    Term { pairs: &[(2, 6), (3, 7)], singles: &[1, 4, 5] },
    Term { pairs: &[(3, 7), (4, 5)], singles: &[1, 2, 6] },
    Term { pairs: &[(3, 7), (4, 6)], singles: &[1, 2, 5] },
    Term { pairs: &[(3, 7), (5, 6)], singles: &[1, 2, 4] },
    Term { pairs: &[(1, 2), (4, 7)], singles: &[3, 5, 6] },
    Term { pairs: &[(1, 3), (4, 7)], singles: &[2, 5, 6] },
    Term { pairs: &[(1, 5), (4, 7)], singles: &[2, 3, 6] },
    Term { pairs: &[(1, 6), (4, 7)], singles: &[2, 3, 5] },
    Term { pairs: &[(2, 3), (4, 7)], singles: &[1, 5, 6] },
    Term { pairs: &[(2, 5), (4, 7)], singles: &[1, 3, 6] },
    Term { pairs: &[(2, 6), (4, 7)], singles: &[1, 3, 5] },
    Term { pairs: &[(3, 5), (4, 7)], singles: &[1, 2, 6] },
    Term { pairs: &[(3, 6), (4, 7)], singles: &[1, 2, 5] },
    Term { pairs: &[(4, 7), (5, 6)], singles: &[1, 2, 3] },
    Term { pairs: &[(1, 2), (5, 7)], singles: &[3, 4, 6] },
    Term { pairs: &[(1, 3), (5, 7)], singles: &[2, 4, 6] },
    Term { pairs: &[(1, 4), (5, 7)], singles: &[2, 3, 6] },
    Term { pairs: &[(1, 6), (5, 7)], singles: &[2, 3, 4] },
    Term { pairs: &[(2, 3), (5, 7)], singles: &[1, 4, 6] },
    Term { pairs: &[(2, 4), (5, 7)], singles: &[1, 3, 6] },
    Term { pairs: &[(2, 6), (5, 7)], singles: &[1, 3, 4] },
    Term { pairs: &[(3, 4), (5, 7)], singles: &[1, 2, 6] },
    Term { pairs: &[(3, 6), (5, 7)], singles: &[1, 2, 4] },
    Term { pairs: &[(4, 6), (5, 7)], singles: &[1, 2, 3] },
    Term { pairs: &[(1, 2), (6, 7)], singles: &[3, 4, 5] },
    Term { pairs: &[(1, 3), (6, 7)], singles: &[2, 4, 5] },
    Term { pairs: &[(1, 4), (6, 7)], singles: &[2, 3, 5] },
    Term { pairs: &[(1, 5), (6, 7)], singles: &[2, 3, 4] },
    Term { pairs: &[(2, 3), (6, 7)], singles: &[1, 4, 5] },
    Term { pairs: &[(2, 4), (6, 7)], singles: &[1, 3, 5] },
    Term { pairs: &[(2, 5), (6, 7)], singles: &[1, 3, 4] },
    Term { pairs: &[(3, 5), (6, 7)], singles: &[1, 2, 4] },
    Term { pairs: &[(4, 5), (6, 7)], singles: &[1, 2, 3] },
    Term { pairs: &[(3, 4), (6, 7)], singles: &[1, 2, 5] },
    Term { pairs: &[(2, 3), (4, 5), (6, 7)], singles: &[1] },
    Term { pairs: &[(2, 3), (4, 6), (5, 7)], singles: &[1] },
    Term { pairs: &[(2, 3), (4, 7), (5, 6)], singles: &[1] },
    Term { pairs: &[(2, 4), (3, 5), (6, 7)], singles: &[1] },
    Term { pairs: &[(2, 4), (3, 6), (5, 7)], singles: &[1] },
    Term { pairs: &[(2, 4), (3, 7), (5, 6)], singles: &[1] },
    Term { pairs: &[(2, 5), (3, 4), (6, 7)], singles: &[1] },
    Term { pairs: &[(2, 5), (3, 6), (4, 7)], singles: &[1] },
    Term { pairs: &[(2, 5), (3, 7), (4, 6)], singles: &[1] },
    Term { pairs: &[(2, 6), (3, 4), (5, 7)], singles: &[1] },
    Term { pairs: &[(2, 6), (3, 5), (4, 7)], singles: &[1] },
    Term { pairs: &[(2, 6), (3, 7), (4, 5)], singles: &[1] },
    Term { pairs: &[(2, 7), (3, 4), (5, 6)], singles: &[1] },
    Term { pairs: &[(2, 7), (3, 5), (4, 6)], singles: &[1] },
    Term { pairs: &[(2, 7), (3, 6), (4, 5)], singles: &[1] },
    Term { pairs: &[(1, 3), (4, 7), (5, 6)], singles: &[2] },
    Term { pairs: &[(1, 3), (4, 5), (6, 7)], singles: &[2] },
    Term { pairs: &[(1, 3), (4, 6), (5, 7)], singles: &[2] },
    Term { pairs: &[(1, 4), (3, 5), (6, 7)], singles: &[2] },
    Term { pairs: &[(1, 4), (3, 6), (5, 7)], singles: &[2] },
    Term { pairs: &[(1, 4), (3, 7), (5, 6)], singles: &[2] },
    Term { pairs: &[(1, 5), (3, 4), (6, 7)], singles: &[2] },
    Term { pairs: &[(1, 5), (3, 6), (4, 7)], singles: &[2] },
    Term { pairs: &[(1, 5), (3, 7), (4, 6)], singles: &[2] },
    Term { pairs: &[(1, 6), (3, 4), (5, 7)], singles: &[2] },
    Term { pairs: &[(1, 6), (3, 5), (4, 7)], singles: &[2] },
    Term { pairs: &[(1, 6), (3, 7), (4, 5)], singles: &[2] },
    Term { pairs: &[(1, 7), (3, 4), (5, 6)], singles: &[2] },
    Term { pairs: &[(1, 7), (3, 5), (4, 6)], singles: &[2] },
    Term { pairs: &[(1, 7), (3, 6), (4, 5)], singles: &[2] },
    Term { pairs: &[(1, 2), (4, 5), (6, 7)], singles: &[3] },
    Term { pairs: &[(1, 2), (4, 6), (5, 7)], singles: &[3] },
    Term { pairs: &[(1, 2), (4, 7), (5, 6)], singles: &[3] },
    Term { pairs: &[(1, 4), (2, 5), (6, 7)], singles: &[3] },
    Term { pairs: &[(1, 4), (2, 6), (5, 7)], singles: &[3] },
    Term { pairs: &[(1, 4), (2, 7), (5, 6)], singles: &[3] },
    Term { pairs: &[(1, 5), (2, 4), (6, 7)], singles: &[3] },
    Term { pairs: &[(1, 5), (2, 6), (4, 7)], singles: &[3] },
    Term { pairs: &[(1, 5), (2, 7), (4, 6)], singles: &[3] },
    Term { pairs: &[(1, 6), (2, 4), (5, 7)], singles: &[3] },
    Term { pairs: &[(1, 6), (2, 5), (4, 7)], singles: &[3] },
    Term { pairs: &[(1, 6), (2, 7), (4, 5)], singles: &[3] },
    Term { pairs: &[(1, 7), (2, 4), (5, 6)], singles: &[3] },
    Term { pairs: &[(1, 7), (2, 5), (4, 6)], singles: &[3] },
    Term { pairs: &[(1, 7), (2, 6), (4, 5)], singles: &[3] },
    Term { pairs: &[(1, 2), (3, 5), (6, 7)], singles: &[4] },
    Term { pairs: &[(1, 2), (3, 6), (5, 7)], singles: &[4] },
    Term { pairs: &[(1, 2), (3, 7), (5, 6)], singles: &[4] },
    Term { pairs: &[(1, 3), (2, 5), (6, 7)], singles: &[4] },
    Term { pairs: &[(1, 3), (2, 6), (5, 7)], singles: &[4] },
    Term { pairs: &[(1, 3), (2, 7), (5, 6)], singles: &[4] },
    Term { pairs: &[(1, 5), (2, 3), (6, 7)], singles: &[4] },
    Term { pairs: &[(1, 5), (2, 6), (3, 7)], singles: &[4] },
    Term { pairs: &[(1, 5), (2, 7), (3, 6)], singles: &[4] },
    Term { pairs: &[(1, 6), (2, 3), (5, 7)], singles: &[4] },
    Term { pairs: &[(1, 6), (2, 5), (3, 7)], singles: &[4] },
    Term { pairs: &[(1, 6), (2, 7), (3, 5)], singles: &[4] },
    Term { pairs: &[(1, 7), (2, 3), (5, 6)], singles: &[4] },
    Term { pairs: &[(1, 7), (2, 5), (3, 6)], singles: &[4] },
    Term { pairs: &[(1, 7), (2, 6), (3, 5)], singles: &[4] },
    Term { pairs: &[(1, 2), (3, 4), (6, 7)], singles: &[5] },
    Term { pairs: &[(1, 2), (3, 6), (4, 7)], singles: &[5] },
    Term { pairs: &[(1, 2), (3, 7), (4, 6)], singles: &[5] },
    Term { pairs: &[(1, 3), (2, 4), (6, 7)], singles: &[5] },
    Term { pairs: &[(1, 3), (2, 6), (4, 7)], singles: &[5] },
    Term { pairs: &[(1, 3), (2, 7), (4, 6)], singles: &[5] },
    Term { pairs: &[(1, 4), (2, 3), (6, 7)], singles: &[5] },
    Term { pairs: &[(1, 4), (2, 6), (3, 7)], singles: &[5] },
    Term { pairs: &[(1, 4), (2, 7), (3, 6)], singles: &[5] },
    Term { pairs: &[(1, 6), (2, 3), (4, 7)], singles: &[5] },
    Term { pairs: &[(1, 6), (2, 4), (3, 7)], singles: &[5] },
    Term { pairs: &[(1, 6), (2, 7), (3, 4)], singles: &[5] },
    Term { pairs: &[(1, 7), (2, 3), (4, 6)], singles: &[5] },
    Term { pairs: &[(1, 7), (2, 4), (3, 6)], singles: &[5] },
    Term { pairs: &[(1, 7), (2, 6), (3, 4)], singles: &[5] },
    Term { pairs: &[(1, 2), (3, 4), (5, 7)], singles: &[6] },
    Term { pairs: &[(1, 2), (3, 5), (4, 7)], singles: &[6] },
    Term { pairs: &[(1, 2), (3, 7), (4, 5)], singles: &[6] },
    Term { pairs: &[(1, 3), (2, 4), (5, 7)], singles: &[6] },
    Term { pairs: &[(1, 3), (2, 5), (4, 7)], singles: &[6] },
    Term { pairs: &[(1, 3), (2, 7), (4, 5)], singles: &[6] },
    Term { pairs: &[(1, 4), (2, 3), (5, 7)], singles: &[6] },
    Term { pairs: &[(1, 4), (2, 5), (3, 7)], singles: &[6] },
    Term { pairs: &[(1, 4), (2, 7), (3, 5)], singles: &[6] },
    Term { pairs: &[(1, 5), (2, 3), (4, 7)], singles: &[6] },
    Term { pairs: &[(1, 5), (2, 4), (3, 7)], singles: &[6] },
    Term { pairs: &[(1, 5), (2, 7), (3, 4)], singles: &[6] },
    Term { pairs: &[(1, 7), (2, 3), (4, 5)], singles: &[6] },
    Term { pairs: &[(1, 7), (2, 4), (3, 5)], singles: &[6] },
    Term { pairs: &[(1, 7), (2, 5), (3, 4)], singles: &[6] },
    Term { pairs: &[(1, 2), (3, 4), (5, 6)], singles: &[7] },
    Term { pairs: &[(1, 2), (3, 5), (4, 6)], singles: &[7] },
    Term { pairs: &[(1, 2), (3, 6), (4, 5)], singles: &[7] },
    Term { pairs: &[(1, 3), (2, 4), (5, 6)], singles: &[7] },
    Term { pairs: &[(1, 3), (2, 5), (4, 6)], singles: &[7] },
    Term { pairs: &[(1, 3), (2, 6), (4, 5)], singles: &[7] },
    Term { pairs: &[(1, 4), (2, 3), (5, 6)], singles: &[7] },
    Term { pairs: &[(1, 4), (2, 5), (3, 6)], singles: &[7] },
    Term { pairs: &[(1, 4), (2, 6), (3, 5)], singles: &[7] },
    Term { pairs: &[(1, 5), (2, 3), (4, 6)], singles: &[7] },
    Term { pairs: &[(1, 5), (2, 4), (3, 6)], singles: &[7] },
    Term { pairs: &[(1, 5), (2, 6), (3, 4)], singles: &[7] },
    Term { pairs: &[(1, 6), (2, 3), (4, 5)], singles: &[7] },
    Term { pairs: &[(1, 6), (2, 4), (3, 5)], singles: &[7] },
    Term { pairs: &[(1, 6), (2, 5), (3, 4)], singles: &[7] },
];
