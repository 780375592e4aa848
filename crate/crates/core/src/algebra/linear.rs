use std::collections::HashMap;

use super::poly::Polynomial;
use super::ring::{ExpVec, Ring};

/// Row-echelon basis of the `F_p`-span of `polys`.
///
/// Each returned polynomial is monic with a distinct leading monomial, and
/// no returned polynomial contains another one's leading monomial at its
/// head. The ideal generated is unchanged, and so is every Frobenius root
/// taken of it, since roots are `F_p`-linear in the generators.
/// Output is sorted by leading monomial, descending.
pub fn linear_basis(ring: &Ring, polys: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut pivots: HashMap<ExpVec, Polynomial> = HashMap::new();
    for f in polys {
        let f = reduce_against(ring, f, &pivots);
        if let Some(lm) = f.leading_monomial().cloned() {
            pivots.insert(lm, f.monic());
        }
    }
    let mut rows: Vec<Polynomial> = pivots.into_values().collect();
    rows.sort_by(|a, b| ring.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    rows
}

fn reduce_against(ring: &Ring, mut f: Polynomial, pivots: &HashMap<ExpVec, Polynomial>) -> Polynomial {
    let zero = ExpVec::zero(ring.arity());
    let mut idx = 0;
    while idx < f.len() {
        let (e, c) = f.terms()[idx].clone();
        match pivots.get(&e) {
            // rows are monic and `e` is their leading monomial, so only
            // terms at positions >= idx change
            Some(row) => f = f.add_scaled_shift(row, &zero, ring.neg(c)),
            None => idx += 1,
        }
    }
    f
}
