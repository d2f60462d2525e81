//! Groebner bases for submodules of free modules O^r over the polynomial
//! ring, division with explicit witness coefficients, and syzygy computation.
//!
//! The monomial order is graded reverse lexicographic on the ring variables;
//! module positions are compared first, lower index preferred
//! (position-over-term). Witnesses are always expressed against the original
//! input generators through the tracked transformation matrix, so callers can
//! reconstruct every membership statement exactly.

use crate::kernel::{Monomial, Poly, Ring, Scalar};
use num::One;
use std::sync::Arc;

/// Total-degree bound for intermediate Groebner computations. Exceeding it
/// is a hard error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeCap(pub u32);

impl Default for DegreeCap {
    fn default() -> Self {
        DegreeCap(24)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("module element has rank {got}, expected {want}")]
    RankMismatch { got: usize, want: usize },
    #[error("total degree {degree} exceeds the configured cap {cap}; raise FOLSYM_DEGREE_CAP if this computation is intended")]
    DegreeCapExceeded { degree: u32, cap: u32 },
}

/// An element of the free module O^r: one polynomial per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    ring: Arc<Ring>,
    comps: Vec<Poly>,
}

/// Leading data of a module element under the position-over-term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadTerm {
    pub pos: usize,
    pub mon: Monomial,
    pub coeff: Scalar,
}

impl ModuleElement {
    pub fn new(ring: &Arc<Ring>, comps: Vec<Poly>) -> ModuleElement {
        assert!(!comps.is_empty(), "module rank must be positive");
        for c in &comps {
            assert_eq!(c.ring(), ring, "component from a different ring");
        }
        ModuleElement {
            ring: ring.clone(),
            comps,
        }
    }

    pub fn zero(ring: &Arc<Ring>, rank: usize) -> ModuleElement {
        ModuleElement::new(ring, vec![Poly::zero(ring); rank])
    }

    pub fn unit(ring: &Arc<Ring>, rank: usize, pos: usize) -> ModuleElement {
        let mut comps = vec![Poly::zero(ring); rank];
        comps[pos] = Poly::one(ring);
        ModuleElement::new(ring, comps)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Poly> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn total_degree(&self) -> u32 {
        self.comps.iter().map(|c| c.total_degree()).max().unwrap_or(0)
    }

    /// Position-over-term leading term: the grevlex-leading term of the
    /// first nonzero component.
    pub fn leading(&self) -> Option<LeadTerm> {
        for (pos, c) in self.comps.iter().enumerate() {
            if let Some((m, a)) = c.leading() {
                return Some(LeadTerm {
                    pos,
                    mon: m.clone(),
                    coeff: a.clone(),
                });
            }
        }
        None
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|p| p.mul_term(m, c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Poly) -> ModuleElement {
        ModuleElement {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|q| q * p).collect(),
        }
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Vec<Scalar>, crate::kernel::KernelError> {
        self.comps.iter().map(|c| c.evaluate(point)).collect()
    }
}

/// Membership certificate: one coefficient per original generator, with
/// `sum coefficients[k] * gens[k]` reconstructing the witnessed element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub coefficients: Vec<Poly>,
}

impl Witness {
    pub fn reconstruct(&self, gens: &[ModuleElement], ring: &Arc<Ring>, rank: usize) -> ModuleElement {
        let mut acc = ModuleElement::zero(ring, rank);
        for (c, g) in self.coefficients.iter().zip(gens) {
            acc = acc.add(&g.mul_poly(c));
        }
        acc
    }
}

fn single_term(ring: &Arc<Ring>, rank: usize, pos: usize, mon: &Monomial, coeff: &Scalar) -> ModuleElement {
    let mut comps = vec![Poly::zero(ring); rank];
    comps[pos] = Poly::from_terms(ring, [(mon.clone(), coeff.clone())]);
    ModuleElement::new(ring, comps)
}

/// Multivariate division: returns quotients against `divisors` (lowest index
/// tried first at every step) and the normal-form remainder, with
/// f = sum quotients[k] * divisors[k] + remainder.
fn divide(f: &ModuleElement, divisors: &[ModuleElement]) -> (Vec<Poly>, ModuleElement) {
    let ring = f.ring().clone();
    let rank = f.rank();
    let leads: Vec<Option<LeadTerm>> = divisors.iter().map(|d| d.leading()).collect();
    let mut quotients = vec![Poly::zero(&ring); divisors.len()];
    let mut remainder = ModuleElement::zero(&ring, rank);
    let mut work = f.clone();
    while let Some(lt) = work.leading() {
        let mut divided = false;
        for (k, d) in divisors.iter().enumerate() {
            let Some(dl) = &leads[k] else { continue };
            if dl.pos == lt.pos && dl.mon.divides(&lt.mon) {
                let m = dl.mon.div_into(&lt.mon);
                let c = &lt.coeff / &dl.coeff;
                quotients[k] = &quotients[k] + &Poly::from_terms(&ring, [(m.clone(), c.clone())]);
                work = work.sub(&d.mul_term(&m, &c));
                divided = true;
                break;
            }
        }
        if !divided {
            let t = single_term(&ring, rank, lt.pos, &lt.mon, &lt.coeff);
            remainder = remainder.add(&t);
            work = work.sub(&t);
        }
    }
    debug_assert!({
        let mut acc = remainder.clone();
        for (q, d) in quotients.iter().zip(divisors) {
            acc = acc.add(&d.mul_poly(q));
        }
        acc == *f
    });
    (quotients, remainder)
}

/// Groebner basis of a submodule of O^rank, together with the transformation
/// matrices between the basis and the original generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    rank: usize,
    gens: Vec<ModuleElement>,
    basis: Vec<ModuleElement>,
    /// basis[k] = sum_l to_gens[k][l] * gens[l]
    to_gens: Vec<Vec<Poly>>,
    /// gens[l] = sum_k from_gens[l][k] * basis[k]
    from_gens: Vec<Vec<Poly>>,
}

struct Item {
    elem: ModuleElement,
    lead: LeadTerm,
    row: Vec<Poly>,
}

fn check_cap(deg: u32, cap: DegreeCap) -> Result<(), GroebnerError> {
    if deg > cap.0 {
        Err(GroebnerError::DegreeCapExceeded {
            degree: deg,
            cap: cap.0,
        })
    } else {
        Ok(())
    }
}

/// Buchberger completion. Deterministic: pairs are processed smallest
/// lcm-degree first (ties by index), and the final basis is inter-reduced
/// and sorted by leading term.
pub fn groebner_basis(
    ring: &Arc<Ring>,
    rank: usize,
    gens: &[ModuleElement],
    cap: DegreeCap,
) -> Result<GroebnerBasis, GroebnerError> {
    for g in gens {
        if g.rank() != rank {
            return Err(GroebnerError::RankMismatch {
                got: g.rank(),
                want: rank,
            });
        }
    }
    let mut items: Vec<Item> = Vec::new();
    for (l, g) in gens.iter().enumerate() {
        if let Some(lead) = g.leading() {
            let mut row = vec![Poly::zero(ring); gens.len()];
            row[l] = Poly::one(ring);
            items.push(Item {
                elem: g.clone(),
                lead,
                row,
            });
        }
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut processed: std::collections::BTreeSet<(usize, usize)> = Default::default();
    let add_pairs = |items: &[Item], k: usize, pending: &mut Vec<(usize, usize)>| {
        for i in 0..k {
            if items[i].lead.pos == items[k].lead.pos {
                pending.push((i, k));
            }
        }
    };
    for k in 0..items.len() {
        add_pairs(&items, k, &mut pending);
    }

    while !pending.is_empty() {
        // smallest lcm degree first, then smallest indices
        let sel = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| {
                let l = items[i].lead.mon.lcm(&items[j].lead.mon);
                (l.degree(), i, j)
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pending.swap_remove(sel);
        processed.insert((i, j));

        let (li, lj) = (&items[i].lead, &items[j].lead);
        debug_assert_eq!(li.pos, lj.pos);
        // product criterion: sound for ideals (rank 1) only
        if rank == 1 && li.mon.coprime(&lj.mon) {
            continue;
        }
        // chain criterion
        let lcm = li.mon.lcm(&lj.mon);
        let chain = (0..items.len()).any(|k| {
            k != i
                && k != j
                && items[k].lead.pos == li.pos
                && items[k].lead.mon.divides(&lcm)
                && processed.contains(&(k.min(i), k.max(i)))
                && processed.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }

        let mi = li.mon.div_into(&lcm);
        let mj = lj.mon.div_into(&lcm);
        let ci = Scalar::one() / li.coeff.clone();
        let cj = Scalar::one() / lj.coeff.clone();
        let s = items[i]
            .elem
            .mul_term(&mi, &ci)
            .sub(&items[j].elem.mul_term(&mj, &cj));
        let s_row: Vec<Poly> = items[i]
            .row
            .iter()
            .zip(&items[j].row)
            .map(|(a, b)| &a.mul_term(&mi, &ci) - &b.mul_term(&mj, &cj))
            .collect();

        let basis_elems: Vec<ModuleElement> = items.iter().map(|it| it.elem.clone()).collect();
        let (q, r) = divide(&s, &basis_elems);
        if r.is_zero() {
            continue;
        }
        check_cap(r.total_degree(), cap)?;
        let mut row = s_row;
        for (qk, it) in q.iter().zip(&items) {
            if qk.is_zero() {
                continue;
            }
            for (rw, tw) in row.iter_mut().zip(&it.row) {
                *rw = &*rw - &(qk * tw);
            }
        }
        let lead = r.leading().expect("nonzero remainder");
        items.push(Item { elem: r, lead, row });
        let k = items.len() - 1;
        add_pairs(&items, k, &mut pending);
    }

    // Minimalize, keeping insertion order: drop an element when another
    // element's leading term properly divides its own, or equals it at a
    // lower index. Proper divisibility is acyclic and ties go to the first
    // occurrence, so the kept leading terms still generate the same
    // leading-term module.
    let kept: Vec<usize> = (0..items.len())
        .filter(|&k| {
            !(0..items.len()).any(|m| {
                m != k
                    && items[m].lead.pos == items[k].lead.pos
                    && items[m].lead.mon.divides(&items[k].lead.mon)
                    && (items[m].lead.mon != items[k].lead.mon || m < k)
            })
        })
        .collect();

    let mut basis: Vec<ModuleElement> = kept.iter().map(|&k| items[k].elem.clone()).collect();
    let mut to_gens: Vec<Vec<Poly>> = kept.iter().map(|&k| items[k].row.clone()).collect();

    // Tail reduction: bring every element to normal form w.r.t. the others.
    for k in 0..basis.len() {
        let others: Vec<ModuleElement> = basis
            .iter()
            .enumerate()
            .filter(|(m, _)| *m != k)
            .map(|(_, e)| e.clone())
            .collect();
        let (q, r) = divide(&basis[k], &others);
        if basis[k] == r {
            continue;
        }
        let mut row = to_gens[k].clone();
        let mut qi = q.into_iter();
        for m in 0..basis.len() {
            if m == k {
                continue;
            }
            let qm = qi.next().unwrap();
            if qm.is_zero() {
                continue;
            }
            for (rw, tw) in row.iter_mut().zip(&to_gens[m]) {
                *rw = &*rw - &(&qm * tw);
            }
        }
        basis[k] = r;
        to_gens[k] = row;
    }

    // Express every original generator in the final basis.
    let mut from_gens = Vec::with_capacity(gens.len());
    for g in gens {
        let (q, r) = divide(g, &basis);
        assert!(
            r.is_zero(),
            "input generator does not reduce to zero against its own Groebner basis"
        );
        from_gens.push(q);
    }

    let gb = GroebnerBasis {
        ring: ring.clone(),
        rank,
        gens: gens.to_vec(),
        basis,
        to_gens,
        from_gens,
    };
    debug_assert!(gb.transformation_is_exact());
    Ok(gb)
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.gens
    }

    pub fn basis(&self) -> &[ModuleElement] {
        &self.basis
    }

    pub fn transformation(&self) -> &[Vec<Poly>] {
        &self.to_gens
    }

    fn transformation_is_exact(&self) -> bool {
        self.basis.iter().zip(&self.to_gens).all(|(b, row)| {
            let mut acc = ModuleElement::zero(&self.ring, self.rank);
            for (c, g) in row.iter().zip(&self.gens) {
                acc = acc.add(&g.mul_poly(c));
            }
            acc == *b
        })
    }

    /// Normal form of `f`: a witness over the *original* generators plus a
    /// remainder no term of which is divisible by a basis leading term.
    pub fn reduce_with_witness(
        &self,
        f: &ModuleElement,
    ) -> Result<(Witness, ModuleElement), GroebnerError> {
        if f.rank() != self.rank {
            return Err(GroebnerError::RankMismatch {
                got: f.rank(),
                want: self.rank,
            });
        }
        let (q, r) = divide(f, &self.basis);
        let mut coeffs = vec![Poly::zero(&self.ring); self.gens.len()];
        for (qk, row) in q.iter().zip(&self.to_gens) {
            if qk.is_zero() {
                continue;
            }
            for (c, t) in coeffs.iter_mut().zip(row) {
                *c = &*c + &(qk * t);
            }
        }
        Ok((Witness { coefficients: coeffs }, r))
    }

    /// Some(witness) iff f lies in the submodule spanned by the generators.
    pub fn member_witness(&self, f: &ModuleElement) -> Result<Option<Witness>, GroebnerError> {
        let (w, r) = self.reduce_with_witness(f)?;
        if !r.is_zero() {
            return Ok(None);
        }
        let rec = w.reconstruct(&self.gens, &self.ring, self.rank);
        assert!(
            rec == *f,
            "membership witness failed to reconstruct its element"
        );
        Ok(Some(w))
    }
}

/// Membership test against a fresh basis of `gens`.
pub fn submodule_membership(
    ring: &Arc<Ring>,
    rank: usize,
    f: &ModuleElement,
    gens: &[ModuleElement],
    cap: DegreeCap,
) -> Result<Option<Witness>, GroebnerError> {
    let gb = groebner_basis(ring, rank, gens, cap)?;
    gb.member_witness(f)
}

/// Generators of the relation module { (g_l) : sum g_l * gens[l] = 0 },
/// via Schreyer's construction on the Groebner basis, pulled back to the
/// original generators. Every returned element is verified exactly.
pub fn syzygy_basis(
    ring: &Arc<Ring>,
    rank: usize,
    gens: &[ModuleElement],
    cap: DegreeCap,
) -> Result<Vec<ModuleElement>, GroebnerError> {
    let n = gens.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let gb = groebner_basis(ring, rank, gens, cap)?;
    let basis = gb.basis();
    let mut syzygies: Vec<ModuleElement> = Vec::new();

    let push = |cand: Vec<Poly>, syzygies: &mut Vec<ModuleElement>| {
        let elem = ModuleElement::new(ring, cand);
        if elem.is_zero() || syzygies.contains(&elem) {
            return;
        }
        let mut acc = ModuleElement::zero(ring, rank);
        for (c, g) in elem.components().iter().zip(gens) {
            acc = acc.add(&g.mul_poly(c));
        }
        assert!(acc.is_zero(), "syzygy candidate is not a relation");
        syzygies.push(elem);
    };

    // Schreyer syzygies from all same-position S-pairs of the basis.
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let (li, lj) = (
                basis[i].leading().expect("basis element is nonzero"),
                basis[j].leading().expect("basis element is nonzero"),
            );
            if li.pos != lj.pos {
                continue;
            }
            let lcm = li.mon.lcm(&lj.mon);
            let mi = li.mon.div_into(&lcm);
            let mj = lj.mon.div_into(&lcm);
            let ci = Scalar::one() / li.coeff.clone();
            let cj = Scalar::one() / lj.coeff.clone();
            let s = basis[i]
                .mul_term(&mi, &ci)
                .sub(&basis[j].mul_term(&mj, &cj));
            let (q, r) = divide(&s, basis);
            assert!(r.is_zero(), "S-vector of a Groebner basis must reduce to zero");
            // syzygy over the basis: mi/ci at slot i, -mj/cj at slot j, minus q
            let mut over_basis = vec![Poly::zero(ring); basis.len()];
            for (slot, qk) in over_basis.iter_mut().zip(&q) {
                *slot = -qk;
            }
            over_basis[i] = &over_basis[i] + &Poly::from_terms(ring, [(mi, ci)]);
            over_basis[j] = &over_basis[j] - &Poly::from_terms(ring, [(mj, cj)]);
            // pull back to the original generators
            let mut over_gens = vec![Poly::zero(ring); n];
            for (sk, row) in over_basis.iter().zip(gb.transformation()) {
                if sk.is_zero() {
                    continue;
                }
                for (o, t) in over_gens.iter_mut().zip(row) {
                    *o = &*o + &(sk * t);
                }
            }
            push(over_gens, &mut syzygies);
        }
    }

    // Rows of (I - from_gens * to_gens): relations that witness redundant
    // input generators.
    for l in 0..n {
        let mut row = vec![Poly::zero(ring); n];
        row[l] = Poly::one(ring);
        for (fk, trow) in gb.from_gens[l].iter().zip(gb.transformation()) {
            if fk.is_zero() {
                continue;
            }
            for (o, t) in row.iter_mut().zip(trow) {
                *o = &*o - &(fk * t);
            }
        }
        push(row, &mut syzygies);
    }

    Ok(syzygies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{ratio, scalar};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring_xy() -> Arc<Ring> {
        Ring::new(vec!["x", "y"])
    }

    fn p(r: &Arc<Ring>, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    fn elem1(r: &Arc<Ring>, s: &str) -> ModuleElement {
        ModuleElement::new(r, vec![p(r, s)])
    }

    fn elem2(r: &Arc<Ring>, a: &str, b: &str) -> ModuleElement {
        ModuleElement::new(r, vec![p(r, a), p(r, b)])
    }

    #[test]
    fn already_a_basis() {
        let r = ring_xy();
        let gens = vec![elem1(&r, "x"), elem1(&r, "y")];
        let gb = groebner_basis(&r, 1, &gens, DegreeCap::default()).unwrap();
        assert_eq!(gb.basis(), &gens[..]);
    }

    #[test]
    fn principal_ideal() {
        let r = ring_xy();
        let gens = vec![elem1(&r, "y^2 - x^4")];
        let gb = groebner_basis(&r, 1, &gens, DegreeCap::default()).unwrap();
        assert_eq!(gb.basis(), &gens[..]);
    }

    #[test]
    fn unit_ideal_detected() {
        let r = ring_xy();
        let gens = vec![elem1(&r, "x^2"), elem1(&r, "x*y + 1")];
        let gb = groebner_basis(&r, 1, &gens, DegreeCap::default()).unwrap();
        let one = ModuleElement::new(&r, vec![Poly::one(&r)]);
        let w = gb.member_witness(&one).unwrap().expect("1 is in the ideal");
        assert_eq!(w.reconstruct(&gens, &r, 1), one);
    }

    #[test]
    fn reduce_examples() {
        let r = ring_xy();
        let gens = vec![elem1(&r, "x^2"), elem1(&r, "y")];
        let gb = groebner_basis(&r, 1, &gens, DegreeCap::default()).unwrap();

        let (w, rem) = gb.reduce_with_witness(&elem1(&r, "x^2 + y")).unwrap();
        assert!(rem.is_zero());
        assert_eq!(w.coefficients, vec![Poly::one(&r), Poly::one(&r)]);

        let (w, rem) = gb.reduce_with_witness(&elem1(&r, "x + 1")).unwrap();
        assert_eq!(rem, elem1(&r, "x + 1"));
        assert!(w.coefficients.iter().all(|c| c.is_zero()));

        let (w, rem) = gb.reduce_with_witness(&ModuleElement::zero(&r, 1)).unwrap();
        assert!(rem.is_zero());
        assert!(w.coefficients.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn membership_examples() {
        let r = ring_xy();
        // x^3 against <x>: witness x^2
        let w = submodule_membership(
            &r,
            1,
            &elem1(&r, "x^3"),
            &[elem1(&r, "x")],
            DegreeCap::default(),
        )
        .unwrap()
        .unwrap();
        assert_eq!(w.coefficients, vec![p(&r, "x^2")]);

        // the eta solve of the hypersurface example
        let phi = "y^2 - x^4";
        let gens = vec![elem2(&r, phi, "0"), elem2(&r, "0", phi)];
        let f = elem2(&r, "0", "-4*x*(y^2 - x^4)");
        let w = submodule_membership(&r, 2, &f, &gens, DegreeCap::default())
            .unwrap()
            .unwrap();
        assert_eq!(w.coefficients, vec![p(&r, "0"), p(&r, "-4*x")]);

        // constant-direction field is not in the module (phi vanishes at 0)
        let none = submodule_membership(&r, 2, &elem2(&r, "1", "0"), &gens, DegreeCap::default())
            .unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn syzygy_examples() {
        let r = ring_xy();
        // Koszul relation
        let syz = syzygy_basis(&r, 1, &[elem1(&r, "x"), elem1(&r, "y")], DegreeCap::default())
            .unwrap();
        assert_eq!(syz, vec![elem2(&r, "y", "-x")]);

        // free module: no relations
        let phi = "y^2 - x^4";
        let gens = vec![elem2(&r, phi, "0"), elem2(&r, "0", phi)];
        assert!(syzygy_basis(&r, 2, &gens, DegreeCap::default()).unwrap().is_empty());

        // vector fields spanning the maximal-ideal module
        let gens = vec![
            elem2(&r, "x", "0"),
            elem2(&r, "y", "0"),
            elem2(&r, "0", "x"),
            elem2(&r, "0", "y"),
        ];
        let syz = syzygy_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        let want1 = ModuleElement::new(&r, vec![p(&r, "y"), p(&r, "-x"), p(&r, "0"), p(&r, "0")]);
        let want2 = ModuleElement::new(&r, vec![p(&r, "0"), p(&r, "0"), p(&r, "y"), p(&r, "-x")]);
        assert!(syz.contains(&want1));
        assert!(syz.contains(&want2));
    }

    #[test]
    fn redundant_generator_syzygy() {
        let r = ring_xy();
        let phi = "y^2 - x^4";
        let gens = vec![
            elem2(&r, phi, "0"),
            elem2(&r, "0", phi),
            elem2(&r, "x*y^2 - x^5", "0"), // x * first generator
        ];
        let syz = syzygy_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        assert_eq!(syz.len(), 1);
        let s = &syz[0];
        // the relation ties generator 3 to x * generator 1
        assert!(s.component(1).is_zero());
        assert!(!s.component(0).is_zero() && !s.component(2).is_zero());
    }

    #[test]
    fn degree_cap_is_a_hard_error() {
        let r = ring_xy();
        let gens = vec![elem1(&r, "x^2"), elem1(&r, "x*y + 1")];
        let err = groebner_basis(&r, 1, &gens, DegreeCap(0)).unwrap_err();
        assert!(matches!(err, GroebnerError::DegreeCapExceeded { .. }));
    }

    #[test]
    fn rank_mismatch_reported() {
        let r = ring_xy();
        let gb = groebner_basis(&r, 1, &[elem1(&r, "x")], DegreeCap::default()).unwrap();
        let err = gb.reduce_with_witness(&elem2(&r, "x", "y")).unwrap_err();
        assert!(matches!(err, GroebnerError::RankMismatch { got: 2, want: 1 }));
    }

    fn random_poly(r: &Arc<Ring>, rng: &mut ChaCha8Rng, max_deg: u32, max_terms: usize) -> Poly {
        let mut out = Poly::zero(r);
        for _ in 0..rng.gen_range(0..=max_terms) {
            let exps: Vec<u32> = (0..r.nvars()).map(|_| rng.gen_range(0..=max_deg)).collect();
            let c = ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            out = &out + &Poly::from_terms(r, [(Monomial::new(exps), c)]);
        }
        out
    }

    #[test]
    fn membership_completeness_bounded_degree() {
        let r = ring_xy();
        let phi = "y^2 - x^4";
        let gens = vec![
            elem2(&r, phi, "0"),
            elem2(&r, "0", phi),
            elem2(&r, "x*y", "x^2"),
        ];
        let gb = groebner_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        let mut members = 0;
        let mut non_members = 0;
        for _ in 0..50 {
            // random combination of the generators with degree <= 3 coefficients
            let mut f = ModuleElement::zero(&r, 2);
            for g in &gens {
                f = f.add(&g.mul_poly(&random_poly(&r, &mut rng, 3, 3)));
            }
            let w = gb.member_witness(&f).unwrap();
            let w = w.expect("combination must be recognized as a member");
            assert_eq!(w.reconstruct(&gens, &r, 2), f);
            members += 1;

            // perturb by something with a nonzero remainder and cross-check
            // against the brute-force solver
            let probe = f.add(&elem2(&r, "1", "0"));
            if gb.member_witness(&probe).unwrap().is_none() {
                let deg = probe.total_degree() + 4;
                assert!(
                    crate::oracle::brute_force_membership(&r, 2, &probe, &gens, deg).is_none(),
                    "division said non-member but the linear solve found coefficients"
                );
                non_members += 1;
            }
        }
        assert_eq!(members, 50);
        assert!(non_members > 0);
    }

    #[test]
    fn deterministic_output() {
        let r = ring_xy();
        let gens = vec![
            elem2(&r, "x^2 + y", "x"),
            elem2(&r, "y^2", "x + y"),
            elem2(&r, "x*y", "y^3 - x"),
        ];
        let a = groebner_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        let b = groebner_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        assert_eq!(a, b);
        assert_eq!(format!("{:?}", a), format!("{:?}", b));
        let sa = syzygy_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        let sb = syzygy_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
        assert_eq!(sa, sb);
    }

    #[test]
    fn witness_soundness_randomized() {
        let r = ring_xy();
        let mut rng = ChaCha8Rng::seed_from_u64(0x50F7);
        for round in 0..25 {
            let gens: Vec<ModuleElement> = (0..3)
                .map(|_| {
                    ModuleElement::new(
                        &r,
                        vec![
                            random_poly(&r, &mut rng, 2, 3),
                            random_poly(&r, &mut rng, 2, 3),
                        ],
                    )
                })
                .collect();
            if gens.iter().all(|g| g.is_zero()) {
                continue;
            }
            let gb = groebner_basis(&r, 2, &gens, DegreeCap::default()).unwrap();
            let f = gens[round % 3].mul_poly(&random_poly(&r, &mut rng, 2, 3));
            if let Some(w) = gb.member_witness(&f).unwrap() {
                assert_eq!(w.reconstruct(&gens, &r, 2), f);
            }
            for s in syzygy_basis(&r, 2, &gens, DegreeCap::default()).unwrap() {
                let mut acc = ModuleElement::zero(&r, 2);
                for (c, g) in s.components().iter().zip(&gens) {
                    acc = acc.add(&g.mul_poly(c));
                }
                assert!(acc.is_zero());
            }
        }
        let _ = scalar(0);
    }
}
