//! Finitely generated singular foliations of polynomial vector fields:
//! involutivity certificates, membership and symmetry tests, isotropy Lie
//! algebras at rational points, and the ideal-times-vector-fields
//! construction for affine varieties.

use crate::groebner::{
    groebner_basis, syzygy_basis, DegreeCap, GroebnerBasis, GroebnerError, ModuleElement, Witness,
};
use crate::kernel::{Poly, Ring, Scalar};
use crate::liealg::{LieAlgebraData, LieAlgError};
use crate::linalg::{reduce_mod_rows, row_space_basis, QMat};
use crate::vect::{VectError, VectorField};
use num::Zero;
use std::sync::{Arc, OnceLock};

pub use crate::liealg::center;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FoliationError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Vect(#[from] VectError),
    #[error("generators are not involutive: bracket of pair ({},{}) is not a member", .pair.0, .pair.1)]
    NotInvolutive { pair: (usize, usize) },
    #[error("point has {got} coordinates but the ring has {want} variables")]
    DimensionMismatch { got: usize, want: usize },
    #[error("isotropy bracket of kernel classes ({},{}) leaves the kernel: the generators do not close into a foliation at this point", .pair.0, .pair.1)]
    IsotropyBracketNotClosed { pair: (usize, usize) },
    #[error("isotropy bracket is not well defined modulo the evaluated relations")]
    IsotropyBracketIllDefined,
    #[error("isotropy bracket violates the Lie algebra axioms: {0}")]
    IsotropyNotLie(#[from] LieAlgError),
}

/// Structure functions c^a_{lb} with [X_l, X_b] = sum_a c^a_{lb} X_a,
/// stored as one witness per pair l < b and antisymmetrized on access.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureFunctions {
    ring: Arc<Ring>,
    n: usize,
    witnesses: std::collections::BTreeMap<(usize, usize), Vec<Poly>>,
}

impl StructureFunctions {
    pub fn generator_count(&self) -> usize {
        self.n
    }

    /// c^alpha_{lam, bet}.
    pub fn coefficient(&self, lam: usize, bet: usize, alpha: usize) -> Poly {
        self.witness(lam, bet).swap_remove(alpha)
    }

    /// The full coefficient vector of [X_lam, X_bet] over the generators.
    pub fn witness(&self, lam: usize, bet: usize) -> Vec<Poly> {
        use std::cmp::Ordering;
        match lam.cmp(&bet) {
            Ordering::Equal => vec![Poly::zero(&self.ring); self.n],
            Ordering::Less => self.witnesses[&(lam, bet)].clone(),
            Ordering::Greater => self.witnesses[&(bet, lam)].iter().map(|p| -p).collect(),
        }
    }

    /// Evaluate the induced bilinear bracket at a point on fiber vectors.
    pub fn bracket_at(&self, m: &[Scalar], u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.n];
        for ((lam, bet), w) in &self.witnesses {
            let f = &u[*lam] * &v[*bet] - &u[*bet] * &v[*lam];
            if f.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(w) {
                let cv = c.evaluate(m).expect("dimension checked by caller");
                if !cv.is_zero() {
                    *o = &*o + &(&f * &cv);
                }
            }
        }
        out
    }
}

/// Outcome of the involutivity check: either a full certificate or the
/// first generator pair whose bracket fails membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutivityOutcome {
    Certified(StructureFunctions),
    Counterexample {
        pair: (usize, usize),
        bracket: VectorField,
    },
}

/// Report of the infinitesimal-symmetry test [X, F] in F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetryReport {
    pub is_symmetry: bool,
    /// per generator: the membership witness for [X, X_l], if any
    pub witnesses: Vec<Option<Witness>>,
    pub first_failure: Option<usize>,
}

/// An ordered generating set of a singular foliation, with lazily computed
/// Groebner, involutivity and syzygy data. The caches are write-once.
#[derive(Debug)]
pub struct FoliationPresentation {
    ring: Arc<Ring>,
    generators: Vec<VectorField>,
    cap: DegreeCap,
    gb: OnceLock<Result<GroebnerBasis, GroebnerError>>,
    certificate: OnceLock<Result<InvolutivityOutcome, FoliationError>>,
    syzygies: OnceLock<Result<Vec<ModuleElement>, GroebnerError>>,
}

impl FoliationPresentation {
    pub fn new(ring: &Arc<Ring>, generators: Vec<VectorField>) -> FoliationPresentation {
        for g in &generators {
            assert_eq!(g.ring(), ring, "generator from a different ring");
        }
        FoliationPresentation {
            ring: ring.clone(),
            generators,
            cap: DegreeCap::default(),
            gb: OnceLock::new(),
            certificate: OnceLock::new(),
            syzygies: OnceLock::new(),
        }
    }

    pub fn with_degree_cap(mut self, cap: DegreeCap) -> FoliationPresentation {
        self.cap = cap;
        self
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn degree_cap(&self) -> DegreeCap {
        self.cap
    }

    pub fn generators(&self) -> &[VectorField] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn module_generators(&self) -> Vec<ModuleElement> {
        self.generators.iter().map(|g| g.as_module_element()).collect()
    }

    pub fn groebner(&self) -> Result<&GroebnerBasis, FoliationError> {
        self.gb
            .get_or_init(|| {
                groebner_basis(
                    &self.ring,
                    self.ring.nvars(),
                    &self.module_generators(),
                    self.cap,
                )
            })
            .as_ref()
            .map_err(|e| e.clone().into())
    }

    /// Membership of a vector field in the module spanned by the
    /// generators, with the witness expressed against them.
    pub fn member_witness(&self, x: &VectorField) -> Result<Option<Witness>, FoliationError> {
        Ok(self.groebner()?.member_witness(&x.as_module_element())?)
    }

    /// [X, F] in F, one membership per generator.
    pub fn symmetry_check(&self, x: &VectorField) -> Result<SymmetryReport, FoliationError> {
        let mut witnesses = Vec::with_capacity(self.generators.len());
        let mut first_failure = None;
        for (l, g) in self.generators.iter().enumerate() {
            let b = x.bracket(g)?;
            let w = self.member_witness(&b)?;
            if w.is_none() && first_failure.is_none() {
                first_failure = Some(l);
            }
            witnesses.push(w);
        }
        Ok(SymmetryReport {
            is_symmetry: first_failure.is_none(),
            witnesses,
            first_failure,
        })
    }

    /// Certify [X_l, X_b] in F for every pair, or return the first failing
    /// pair. The certificate is cached.
    pub fn involutivity_certificate(&self) -> Result<&InvolutivityOutcome, FoliationError> {
        self.certificate
            .get_or_init(|| {
                let mut witnesses = std::collections::BTreeMap::new();
                for l in 0..self.generators.len() {
                    for b in (l + 1)..self.generators.len() {
                        let bracket = self.generators[l].bracket(&self.generators[b])?;
                        match self.member_witness(&bracket)? {
                            Some(w) => {
                                witnesses.insert((l, b), w.coefficients);
                            }
                            None => {
                                return Ok(InvolutivityOutcome::Counterexample {
                                    pair: (l, b),
                                    bracket,
                                })
                            }
                        }
                    }
                }
                Ok(InvolutivityOutcome::Certified(StructureFunctions {
                    ring: self.ring.clone(),
                    n: self.generators.len(),
                    witnesses,
                }))
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// The certified structure functions; involutivity failure is an error.
    pub fn structure_functions(&self) -> Result<&StructureFunctions, FoliationError> {
        match self.involutivity_certificate()? {
            InvolutivityOutcome::Certified(c) => Ok(c),
            InvolutivityOutcome::Counterexample { pair, .. } => {
                Err(FoliationError::NotInvolutive { pair: *pair })
            }
        }
    }

    /// Relations among the generators, cached.
    pub fn syzygies(&self) -> Result<&[ModuleElement], FoliationError> {
        self.syzygies
            .get_or_init(|| {
                syzygy_basis(
                    &self.ring,
                    self.ring.nvars(),
                    &self.module_generators(),
                    self.cap,
                )
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(|e| e.clone().into())
    }

    /// Isotropy Lie algebra at a rational point: the kernel of the
    /// evaluation map on the generator fiber modulo the evaluated
    /// relations, with the bracket induced by the structure functions.
    pub fn isotropy_lie_algebra(&self, m: &[Scalar]) -> Result<IsotropyData, FoliationError> {
        let d = self.ring.nvars();
        if m.len() != d {
            return Err(FoliationError::DimensionMismatch {
                got: m.len(),
                want: d,
            });
        }
        let n = self.generators.len();
        let c = self.structure_functions()?.clone();

        let evaluated: Vec<Vec<Scalar>> = self
            .syzygies()?
            .iter()
            .map(|s| s.evaluate(m).expect("dimension checked"))
            .collect();
        let relations = row_space_basis(&evaluated);
        let relation_pivots: Vec<usize> = relations
            .iter()
            .map(|r| r.iter().position(|c| !c.is_zero()).expect("nonzero row"))
            .collect();

        let mut rho_m = QMat::zeros(d, n);
        for (l, g) in self.generators.iter().enumerate() {
            for (i, v) in g.evaluate_at(m)?.into_iter().enumerate() {
                rho_m.set(i, l, v);
            }
        }

        // kernel of rho_m, reduced modulo the relations, canonicalized
        let mut reduced: Vec<Vec<Scalar>> = Vec::new();
        for v in rho_m.nullspace() {
            let r = reduce_mod_rows(&relations, &relation_pivots, &v);
            if r.iter().any(|c| !c.is_zero()) {
                reduced.push(r);
            }
        }
        let kernel_basis = row_space_basis(&reduced);

        let data = IsotropyData {
            point: m.to_vec(),
            fiber_dim: n - relations.len(),
            rho_m,
            relations,
            relation_pivots,
            kernel_basis,
            algebra: LieAlgebraData::abelian(0),
        };

        // bracket on kernel classes from the structure functions at m
        let dim = data.kernel_basis.len();
        let mut table = Vec::new();
        for a in 0..dim {
            for b in (a + 1)..dim {
                let w = c.bracket_at(m, &data.kernel_basis[a], &data.kernel_basis[b]);
                let coords = data
                    .coords(&w)
                    .ok_or(FoliationError::IsotropyBracketNotClosed { pair: (a, b) })?;
                table.push((a, b, coords));
            }
        }
        // well-definedness modulo the relations: bracketing a relation
        // vector against any kernel class must land in the relations again
        for r in &data.relations {
            for u in &data.kernel_basis {
                let w = c.bracket_at(m, r, u);
                let red = data.reduce(&w);
                let in_kernel_span = data.coords(&red);
                match in_kernel_span {
                    Some(ref t) if t.iter().all(|x| x.is_zero()) => {}
                    _ => return Err(FoliationError::IsotropyBracketIllDefined),
                }
            }
        }
        let algebra = LieAlgebraData::from_bracket_table(dim, &table)?;
        Ok(IsotropyData { algebra, ..data })
    }
}

/// Isotropy data at a point: the fiber model of the quotient of vanishing
/// foliation germs by trivially vanishing ones.
#[derive(Debug, Clone)]
pub struct IsotropyData {
    pub point: Vec<Scalar>,
    /// generator count minus the rank of the evaluated relations
    pub fiber_dim: usize,
    /// evaluation of the generators: columns X_l(m)
    pub rho_m: QMat,
    /// canonical basis (RREF rows) of the evaluated relation space
    pub relations: Vec<Vec<Scalar>>,
    relation_pivots: Vec<usize>,
    /// canonical lifts of a basis of ker(rho_m) modulo the relations
    pub kernel_basis: Vec<Vec<Scalar>>,
    /// the bracket on the kernel basis classes
    pub algebra: LieAlgebraData,
}

impl IsotropyData {
    pub fn dim(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.algebra.is_abelian()
    }

    /// Canonical representative of a fiber vector modulo the relations.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        reduce_mod_rows(&self.relations, &self.relation_pivots, v)
    }

    /// Coordinates of the class of `v` in the kernel basis, when the class
    /// lies in the isotropy algebra.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let r = self.reduce(v);
        crate::linalg::coordinates_in_span(&self.kernel_basis, &r)
    }

    /// Lift kernel-basis coordinates back to a fiber vector.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let n = self.rho_m.ncols();
        let mut out = vec![Scalar::zero(); n];
        for (c, b) in coords.iter().zip(&self.kernel_basis) {
            for (o, v) in out.iter_mut().zip(b) {
                *o = &*o + &(c * v);
            }
        }
        out
    }
}

/// Generators { f_j d/dx_i } of the foliation of fields vanishing on the
/// variety cut out by the ideal: row-major, ideal generators outer.
pub fn ideal_foliation_generators(ring: &Arc<Ring>, ideal_gens: &[Poly]) -> FoliationPresentation {
    let mut gens = Vec::with_capacity(ideal_gens.len() * ring.nvars());
    for f in ideal_gens {
        assert_eq!(f.ring(), ring, "ideal generator from a different ring");
        for i in 0..ring.nvars() {
            gens.push(VectorField::coordinate(ring, i).scale(f));
        }
    }
    FoliationPresentation::new(ring, gens)
}

/// Diagnostics of the strong-singularity test at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StronglySingularReport {
    pub on_variety: bool,
    pub gradients_vanish: bool,
    pub is_strongly_singular: bool,
    /// first failing (generator index, reason)
    pub failure: Option<(usize, String)>,
    /// why checking the listed generators suffices
    pub note: &'static str,
}

/// A point p is strongly singular when every ideal generator and every
/// generator gradient vanishes at p; the product rule extends both
/// statements from the generators to the whole ideal because p lies on the
/// variety.
pub fn strongly_singular_check(
    ideal_gens: &[Poly],
    p: &[Scalar],
) -> Result<StronglySingularReport, FoliationError> {
    let note = "generator values and gradients vanishing at a point of the variety extend to the full ideal by the product rule";
    let mut on_variety = true;
    let mut gradients_vanish = true;
    let mut failure = None;
    for (j, f) in ideal_gens.iter().enumerate() {
        let ring = f.ring();
        if p.len() != ring.nvars() {
            return Err(FoliationError::DimensionMismatch {
                got: p.len(),
                want: ring.nvars(),
            });
        }
        if !f.evaluate(p).expect("dimension checked").is_zero() {
            on_variety = false;
            if failure.is_none() {
                failure = Some((j, "generator does not vanish at the point".to_string()));
            }
            continue;
        }
        for i in 0..ring.nvars() {
            let di = f.derive(i).expect("index in range");
            if !di.evaluate(p).expect("dimension checked").is_zero() {
                gradients_vanish = false;
                if failure.is_none() {
                    failure = Some((
                        j,
                        format!("partial derivative in {} does not vanish", ring.var_name(i)),
                    ));
                }
                break;
            }
        }
    }
    Ok(StronglySingularReport {
        on_variety,
        gradients_vanish,
        is_strongly_singular: on_variety && gradients_vanish,
        failure,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::scalar;

    fn ring_xy() -> Arc<Ring> {
        Ring::new(vec!["x", "y"])
    }

    fn p(r: &Arc<Ring>, s: &str) -> Poly {
        Poly::parse(r, s).unwrap()
    }

    fn vf(r: &Arc<Ring>, a: &str, b: &str) -> VectorField {
        VectorField::new(r, vec![p(r, a), p(r, b)]).unwrap()
    }

    fn hypersurface_foliation(r: &Arc<Ring>) -> FoliationPresentation {
        ideal_foliation_generators(r, &[p(r, "y^2 - x^4")])
    }

    #[test]
    fn ideal_generators_enumeration() {
        let r = ring_xy();
        let f = hypersurface_foliation(&r);
        assert_eq!(
            f.generators(),
            &[vf(&r, "y^2 - x^4", "0"), vf(&r, "0", "y^2 - x^4")]
        );
        let m = ideal_foliation_generators(&r, &[p(&r, "x"), p(&r, "y")]);
        assert_eq!(
            m.generators(),
            &[vf(&r, "x", "0"), vf(&r, "0", "x"), vf(&r, "y", "0"), vf(&r, "0", "y")]
        );
        assert!(ideal_foliation_generators(&r, &[]).generators().is_empty());
    }

    #[test]
    fn involutivity_of_hypersurface_foliation() {
        let r = ring_xy();
        let f = hypersurface_foliation(&r);
        let c = f.structure_functions().unwrap();
        // [G1, G2] = (d(phi)/dx) G2 - (d(phi)/dy) G1
        assert_eq!(c.coefficient(0, 1, 0), p(&r, "-2*y"));
        assert_eq!(c.coefficient(0, 1, 1), p(&r, "-4*x^3"));
        // antisymmetry on access
        assert_eq!(c.coefficient(1, 0, 0), p(&r, "2*y"));
        // reconstruction
        let bracket = f.generators()[0].bracket(&f.generators()[1]).unwrap();
        let mut acc = VectorField::zero(&r);
        for (alpha, g) in f.generators().iter().enumerate() {
            acc = acc.add(&g.scale(&c.coefficient(0, 1, alpha)));
        }
        assert_eq!(acc, bracket);
    }

    #[test]
    fn involutivity_trivial_cases() {
        let r = ring_xy();
        let f = FoliationPresentation::new(&r, vec![VectorField::coordinate(&r, 0)]);
        match f.involutivity_certificate().unwrap() {
            InvolutivityOutcome::Certified(c) => assert_eq!(c.generator_count(), 1),
            _ => panic!("single generator is involutive"),
        }

        let f = FoliationPresentation::new(
            &r,
            vec![
                VectorField::coordinate(&r, 0),
                vf(&r, "0", "x"),
                VectorField::coordinate(&r, 1),
            ],
        );
        let c = f.structure_functions().unwrap();
        // [d/dx, x d/dy] = d/dy, witness (0, 0, 1)
        assert_eq!(c.coefficient(0, 1, 2), Poly::one(&r));
        assert_eq!(c.coefficient(0, 1, 0), Poly::zero(&r));
        assert_eq!(c.coefficient(0, 1, 1), Poly::zero(&r));
    }

    #[test]
    fn involutivity_counterexample() {
        let r = ring_xy();
        let f = FoliationPresentation::new(&r, vec![vf(&r, "0", "x"), vf(&r, "y", "0")]);
        match f.involutivity_certificate().unwrap() {
            InvolutivityOutcome::Counterexample { pair, bracket } => {
                assert_eq!(*pair, (0, 1));
                assert_eq!(*bracket, vf(&r, "x", "-y"));
            }
            _ => panic!("x d/dy, y d/dx do not close"),
        }
        assert!(matches!(
            f.structure_functions(),
            Err(FoliationError::NotInvolutive { pair: (0, 1) })
        ));
    }

    #[test]
    fn member_witness_examples() {
        let r = ring_xy();
        let f = hypersurface_foliation(&r);
        let phi = p(&r, "y^2 - x^4");
        let x_scaled = vf(&r, "x", "0").scale(&phi);
        let w = f.member_witness(&x_scaled).unwrap().unwrap();
        assert_eq!(w.coefficients, vec![p(&r, "x"), p(&r, "0")]);

        assert!(f
            .member_witness(&VectorField::coordinate(&r, 0))
            .unwrap()
            .is_none());

        let w = f.member_witness(&VectorField::zero(&r)).unwrap().unwrap();
        assert!(w.coefficients.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn symmetry_examples() {
        let r = ring_xy();
        // linear fields preserve the order-2 vanishing foliation
        let f2 = ideal_foliation_generators(&r, &[p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2")]);
        for x in [vf(&r, "x", "0"), vf(&r, "0", "x"), vf(&r, "y", "0"), vf(&r, "0", "y")] {
            assert!(f2.symmetry_check(&x).unwrap().is_symmetry);
        }

        // the tangent field of the hypersurface example
        let f = hypersurface_foliation(&r);
        let u = vf(&r, "y - x^2", "-2*x*y + 2*x^3");
        assert!(f.symmetry_check(&u).unwrap().is_symmetry);

        // d/dx does not preserve <x d/dx>
        let g = FoliationPresentation::new(&r, vec![vf(&r, "x", "0")]);
        let rep = g.symmetry_check(&VectorField::coordinate(&r, 0)).unwrap();
        assert!(!rep.is_symmetry);
        assert_eq!(rep.first_failure, Some(0));
    }

    #[test]
    fn strongly_singular_examples() {
        let r = ring_xy();
        let phi = p(&r, "y^2 - x^4");
        let rep = strongly_singular_check(&[phi.clone()], &[scalar(0), scalar(0)]).unwrap();
        assert!(rep.is_strongly_singular);

        let rep = strongly_singular_check(&[phi], &[scalar(1), scalar(1)]).unwrap();
        assert!(!rep.is_strongly_singular);
        assert!(rep.on_variety);
        assert!(!rep.gradients_vanish);

        let rep = strongly_singular_check(&[p(&r, "x")], &[scalar(0), scalar(7)]).unwrap();
        assert!(!rep.is_strongly_singular);
    }

    #[test]
    fn isotropy_hypersurface_at_origin() {
        let r = ring_xy();
        let f = hypersurface_foliation(&r);
        let iso = f.isotropy_lie_algebra(&[scalar(0), scalar(0)]).unwrap();
        assert_eq!(iso.fiber_dim, 2);
        assert_eq!(iso.dim(), 2);
        assert!(iso.is_abelian());
    }

    #[test]
    fn isotropy_trivial_cases() {
        let rx = Ring::new(vec!["x"]);
        let ddx = VectorField::coordinate(&rx, 0);
        let f = FoliationPresentation::new(&rx, vec![ddx]);
        let iso = f.isotropy_lie_algebra(&[scalar(3)]).unwrap();
        assert_eq!(iso.dim(), 0);

        let xddx = VectorField::coordinate(&rx, 0).scale(&Poly::var(&rx, 0));
        let f = FoliationPresentation::new(&rx, vec![xddx]);
        let iso = f.isotropy_lie_algebra(&[scalar(0)]).unwrap();
        assert_eq!(iso.dim(), 1);
        assert!(iso.is_abelian());
    }

    #[test]
    fn isotropy_invariance_under_presentation_changes() {
        let r = ring_xy();
        let origin = [scalar(0), scalar(0)];
        let phi = p(&r, "y^2 - x^4");
        let g1 = vf(&r, "y^2 - x^4", "0");
        let g2 = vf(&r, "0", "y^2 - x^4");

        let base = FoliationPresentation::new(&r, vec![g1.clone(), g2.clone()]);
        let permuted = FoliationPresentation::new(&r, vec![g2.clone(), g1.clone()]);
        // appended generator x * G1 vanishes at the origin
        let redundant = FoliationPresentation::new(
            &r,
            vec![g1.clone(), g2.clone(), g1.scale(&Poly::var(&r, 0))],
        );

        let d0 = base.isotropy_lie_algebra(&origin).unwrap();
        let d1 = permuted.isotropy_lie_algebra(&origin).unwrap();
        let d2 = redundant.isotropy_lie_algebra(&origin).unwrap();
        assert_eq!(d0.dim(), 2);
        assert_eq!(d1.dim(), 2);
        assert_eq!(d2.dim(), 2);
        assert!(d0.is_abelian() && d1.is_abelian() && d2.is_abelian());
        assert_eq!(d2.fiber_dim, 2);
        let _ = phi;
    }

    #[test]
    fn strongly_singular_points_have_abelian_isotropy() {
        let r = ring_xy();
        let origin = [scalar(0), scalar(0)];
        let cases: Vec<Vec<Poly>> = vec![
            vec![p(&r, "y^2 - x^4")],
            vec![p(&r, "x^2"), p(&r, "x*y"), p(&r, "y^2")],
            vec![p(&r, "x^3"), p(&r, "x^2*y"), p(&r, "x*y^2"), p(&r, "y^3")],
        ];
        for ideal in cases {
            let rep = strongly_singular_check(&ideal, &origin).unwrap();
            assert!(rep.is_strongly_singular);
            let f = ideal_foliation_generators(&r, &ideal);
            let iso = f.isotropy_lie_algebra(&origin).unwrap();
            assert!(iso.is_abelian(), "strong singularity forces an abelian isotropy");
        }
    }

    #[test]
    fn isotropy_away_from_singularity() {
        let r = ring_xy();
        let f = ideal_foliation_generators(&r, &[p(&r, "x"), p(&r, "y")]);
        // at a regular point the generators span the tangent space
        let iso = f.isotropy_lie_algebra(&[scalar(1), scalar(0)]).unwrap();
        assert_eq!(iso.dim(), 0);
        assert_eq!(iso.fiber_dim, 2);
    }

    #[test]
    fn center_reexport() {
        let g = LieAlgebraData::abelian(2);
        assert_eq!(center(&g).len(), 2);
    }
}
