//! Independent brute-force checks used by the test suites. Nothing here
//! touches the division or Groebner machinery: membership is decided by
//! solving the bounded-degree linear system over Q directly, so these
//! routines can serve as oracles for the main implementation.

use crate::groebner::ModuleElement;
use crate::kernel::{Monomial, Poly, Ring, Scalar};
use crate::linalg::QMat;
use num::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;

fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        if exps.iter().sum::<u32>() <= max_deg {
            out.push(Monomial::new(exps.clone()));
        }
        // odometer over [0, max_deg]^nvars
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort();
                return out;
            }
            if exps[i] < max_deg {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Decide `f in <gens>` by searching for coefficients of total degree at
/// most `coeff_deg`: a dense linear solve over the rationals, one unknown
/// per (generator, monomial) pair. Returns the coefficients when a solution
/// with that degree bound exists.
pub fn brute_force_membership(
    ring: &Arc<Ring>,
    rank: usize,
    f: &ModuleElement,
    gens: &[ModuleElement],
    coeff_deg: u32,
) -> Option<Vec<Poly>> {
    let monos = monomials_up_to(ring.nvars(), coeff_deg);
    let unknowns = gens.len() * monos.len();

    // Row index: (module position, monomial of the product).
    let mut row_index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut columns: Vec<BTreeMap<usize, Scalar>> = Vec::with_capacity(unknowns);
    let intern = |key: (usize, Monomial), map: &mut BTreeMap<(usize, Monomial), usize>| {
        let next = map.len();
        *map.entry(key).or_insert(next)
    };

    for g in gens {
        for m in &monos {
            let mut col = BTreeMap::new();
            for (pos, comp) in g.components().iter().enumerate() {
                for (n, c) in comp.terms() {
                    let r = intern((pos, m.mul(n)), &mut row_index);
                    let entry = col.entry(r).or_insert_with(Scalar::zero);
                    *entry = &*entry + c;
                }
            }
            columns.push(col);
        }
    }
    let mut rhs_entries: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (pos, comp) in f.components().iter().enumerate() {
        for (n, c) in comp.terms() {
            let r = intern((pos, n.clone()), &mut row_index);
            rhs_entries.insert(r, c.clone());
        }
    }

    let nrows = row_index.len();
    let mut mat = QMat::zeros(nrows, unknowns);
    for (j, col) in columns.iter().enumerate() {
        for (&i, v) in col {
            mat.set(i, j, v.clone());
        }
    }
    let mut rhs = vec![Scalar::zero(); nrows];
    for (i, v) in rhs_entries {
        rhs[i] = v;
    }

    let x = mat.solve(&rhs)?;
    let mut coeffs = Vec::with_capacity(gens.len());
    for (gi, _) in gens.iter().enumerate() {
        let terms = monos
            .iter()
            .enumerate()
            .filter_map(|(mi, m)| {
                let v = &x[gi * monos.len() + mi];
                (!v.is_zero()).then(|| (m.clone(), v.clone()))
            })
            .collect::<Vec<_>>();
        coeffs.push(Poly::from_terms(ring, terms));
    }
    // sanity: the solution really reconstructs f
    let mut acc = ModuleElement::zero(ring, rank);
    for (c, g) in coeffs.iter().zip(gens) {
        acc = acc.add(&g.mul_poly(c));
    }
    assert!(acc == *f, "solver produced a non-solution");
    Some(coeffs)
}
