//! Pullbacks `P = {(b, c) : φ(b) = ψ(c)}` of diagrams `B → A ← C` of finitely presented
//! algebras, and whether `P` is finitely generated.
//!
//! Two shapes are decided:
//! * `φ` a canonical quotient `B → B/J` with `B` a domain and `J ≠ 0`: `P` is finitely
//!   generated iff `B/J` is module-finite over the image of `ψ`;
//! * both maps injective with monomial images in a polynomial ring: `P` is the intersection
//!   of two monomial subalgebras, always finitely generated.
//!
//! Everything else is reported as unknown.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::glue::{glue_generators, present_subalgebra, GluingProblem, SubalgebraPresentation};
use crate::groebner::IdealPresentation;
use crate::linalg::rank;
use crate::monoid::{intersect_monomial, ExponentVector, MonomialSubalgebra};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// `K[ring] / relations`.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub relations: IdealPresentation,
}

impl AlgebraPresentation {
    pub fn new(relations: IdealPresentation) -> Self {
        AlgebraPresentation { relations }
    }

    pub fn polynomial(ring: &RingRef) -> Self {
        Self::new(IdealPresentation::zero(ring))
    }

    pub fn ring(&self) -> &RingRef {
        self.relations.ring()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.relations.is_zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapShape {
    CanonicalQuotient,
    Generic,
}

/// `source → target`, sending source variable `i` to `images[i]`.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: AlgebraPresentation,
    pub target: AlgebraPresentation,
    pub images: Vec<Polynomial>,
    pub shape: MapShape,
}

impl AlgebraMap {
    /// Checks that every source relation lands in the target ideal.
    pub fn new(
        source: AlgebraPresentation,
        target: AlgebraPresentation,
        images: Vec<Polynomial>,
    ) -> Result<Self> {
        if images.len() != source.ring().nvars() {
            return Err(AlgebraError::IllFormedMap(format!(
                "{} images for {} source variables",
                images.len(),
                source.ring().nvars()
            )));
        }
        if let Some(bad) = images.iter().find(|p| !same_ring(p.ring(), target.ring())) {
            return Err(AlgebraError::IllFormedMap(format!(
                "image {bad} is not in the target ring"
            )));
        }
        let target_gb = target.relations.groebner();
        for r in source.relations.generators() {
            let img = r.substitute_into(&images, target.ring())?;
            if !target_gb.contains(&img)? {
                return Err(AlgebraError::IllFormedMap(format!(
                    "relation {r} maps to {img}, outside the target ideal"
                )));
            }
        }
        let identity = same_ring(source.ring(), target.ring())
            && images
                .iter()
                .enumerate()
                .all(|(i, p)| *p == Polynomial::var(target.ring(), i));
        let shape = if identity {
            // well-definedness already gives target ⊇ source relations
            MapShape::CanonicalQuotient
        } else {
            MapShape::Generic
        };
        Ok(AlgebraMap {
            source,
            target,
            images,
            shape,
        })
    }

    /// Exponent vectors of single-term images, or `None` if some image is not a monomial.
    fn monomial_images(&self) -> Option<Vec<ExponentVector>> {
        self.images
            .iter()
            .map(|p| match p.terms() {
                [(m, _)] => Some(ExponentVector::new(m.exponents().to_vec())),
                _ => None,
            })
            .collect()
    }
}

/// `B →φ A ←ψ C`.
#[derive(Clone, Debug)]
pub struct PullbackDiagram {
    pub phi: AlgebraMap,
    pub psi: AlgebraMap,
}

impl PullbackDiagram {
    pub fn new(phi: AlgebraMap, psi: AlgebraMap) -> Result<Self> {
        if !same_ring(phi.target.ring(), psi.target.ring()) {
            return Err(AlgebraError::IllFormedMap("φ and ψ have different targets".into()));
        }
        Ok(PullbackDiagram { phi, psi })
    }

    pub fn b(&self) -> &AlgebraPresentation {
        &self.phi.source
    }

    pub fn c(&self) -> &AlgebraPresentation {
        &self.psi.source
    }

    pub fn a(&self) -> &AlgebraPresentation {
        &self.phi.target
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `φ` is `B → B/J`.
    CanonicalQuotient,
    /// Injective monomial maps into a polynomial ring.
    Monomial {
        phi: MonomialSubalgebra,
        psi: MonomialSubalgebra,
    },
    Other,
}

fn monomial_subalgebra(map: &AlgebraMap) -> Option<MonomialSubalgebra> {
    if !map.source.is_polynomial_ring() {
        return None;
    }
    let exps = map.monomial_images()?;
    let field = map.target.ring().field();
    let matrix: Vec<Vec<_>> = exps
        .iter()
        .map(|e| e.entries().iter().map(|&x| field.from_int(x as i64)).collect())
        .collect();
    if rank(field, &matrix) != exps.len() {
        return None;
    }
    MonomialSubalgebra::new(map.target.ring().nvars(), exps).ok()
}

/// Classifies the diagram into one of the decidable shapes.
pub fn validate(d: &PullbackDiagram) -> Shape {
    if d.phi.shape == MapShape::CanonicalQuotient {
        return Shape::CanonicalQuotient;
    }
    if d.a().is_polynomial_ring() {
        if let (Some(phi), Some(psi)) = (monomial_subalgebra(&d.phi), monomial_subalgebra(&d.psi)) {
            return Shape::Monomial { phi, psi };
        }
    }
    Shape::Other
}

/// A subalgebra of `B` or `C` as produced by [`prop6_reduce`].
#[derive(Clone, Debug)]
pub enum SubalgebraDescription {
    /// `K[generators] + ideal`.
    GeneratedPlusIdeal {
        generators: Vec<Polynomial>,
        ideal: IdealPresentation,
    },
    Whole(RingRef),
    /// `first ∩ second`, both inside the same polynomial ring.
    MonomialIntersection {
        ring: RingRef,
        first: MonomialSubalgebra,
        second: MonomialSubalgebra,
    },
    Unknown,
}

fn format_monomials(ring: &RingRef, gens: &[ExponentVector]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .map(|e| Monomial::new(e.entries().to_vec()).format(ring.vars()))
        .collect();
    format!("K[{}]", parts.join(", "))
}

impl fmt::Display for SubalgebraDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubalgebraDescription::GeneratedPlusIdeal { generators, ideal } => {
                let g: Vec<String> = generators.iter().map(|p| p.to_string()).collect();
                let i: Vec<String> = ideal.generators().iter().map(|p| p.to_string()).collect();
                let head = if g.is_empty() {
                    "K".to_string()
                } else {
                    format!("K[{}]", g.join(", "))
                };
                write!(f, "{head} + <{}>", i.join(", "))
            }
            SubalgebraDescription::Whole(r) => {
                if r.nvars() == 0 {
                    write!(f, "K")
                } else {
                    write!(f, "K[{}]", r.vars().join(", "))
                }
            }
            SubalgebraDescription::MonomialIntersection { ring, first, second } => write!(
                f,
                "{} ∩ {}",
                format_monomials(ring, first.generators()),
                format_monomials(ring, second.generators())
            ),
            SubalgebraDescription::Unknown => write!(f, "unknown"),
        }
    }
}

fn nonconstant_images(map: &AlgebraMap) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in &map.images {
        if !p.is_constant() && !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}

/// Descriptions of `φ⁻¹(Im φ ∩ Im ψ) ⊆ B` and `ψ⁻¹(Im φ ∩ Im ψ) ⊆ C`.
pub fn prop6_reduce(d: &PullbackDiagram) -> (SubalgebraDescription, SubalgebraDescription) {
    match validate(d) {
        Shape::CanonicalQuotient => (
            SubalgebraDescription::GeneratedPlusIdeal {
                generators: nonconstant_images(&d.psi),
                ideal: d.a().relations.clone(),
            },
            SubalgebraDescription::Whole(d.c().ring().clone()),
        ),
        Shape::Monomial { phi, psi } => {
            let desc = SubalgebraDescription::MonomialIntersection {
                ring: d.a().ring().clone(),
                first: phi,
                second: psi,
            };
            (desc.clone(), desc)
        }
        Shape::Other => (SubalgebraDescription::Unknown, SubalgebraDescription::Unknown),
    }
}

/// Outcome of [`module_finite_test`]: per ambient variable, a pure-power leading monomial
/// witnessing integrality if one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleFiniteness {
    pub finite: bool,
    pub vars: Vec<String>,
    pub witnesses: Vec<Option<Monomial>>,
}

impl ModuleFiniteness {
    pub fn certificate(&self) -> String {
        if self.finite {
            let w: Vec<String> = self
                .witnesses
                .iter()
                .map(|m| m.as_ref().expect("finite").format(&self.vars))
                .collect();
            if w.is_empty() {
                "no variables".into()
            } else {
                format!("pure powers {}", w.join(", "))
            }
        } else {
            let missing: Vec<&str> = self
                .vars
                .iter()
                .zip(&self.witnesses)
                .filter(|(_, w)| w.is_none())
                .map(|(v, _)| v.as_str())
                .collect();
            format!("no pure power of {}", missing.join(", "))
        }
    }
}

/// Whether `a` is a finitely generated module over `K[gens]`.
///
/// Works in `K[t…, y…]` with a block order `t ≫ y` on `⟨relations(t)⟩ + ⟨y_r − g_r(t)⟩`;
/// the extension is finite iff every `t_i` has a pure power among the leading monomials.
pub fn module_finite_test(a: &AlgebraPresentation, gens: &[Polynomial]) -> Result<ModuleFiniteness> {
    let ring = a.ring();
    let n = ring.nvars();
    let mut names: Vec<String> = (0..n).map(|i| format!("t#{i}")).collect();
    names.extend((0..gens.len()).map(|r| format!("y#{r}")));
    let big = Ring::new(
        names,
        ring.field().clone(),
        MonomialOrder::Block {
            split: n,
            weights: None,
        },
    )?;
    let embed: Vec<usize> = (0..n).collect();
    let mut polys: Vec<Polynomial> = a
        .relations
        .generators()
        .iter()
        .map(|g| g.map_vars(&big, &embed))
        .collect();
    for (r, g) in gens.iter().enumerate() {
        if !same_ring(g.ring(), ring) {
            return Err(AlgebraError::DimensionMismatch(format!(
                "generator {g} is not in the algebra's ring"
            )));
        }
        polys.push(&Polynomial::var(&big, n + r) - &g.map_vars(&big, &embed));
    }
    let gb = IdealPresentation::new(&big, polys)?.groebner();
    let mut witnesses: Vec<Option<Monomial>> = vec![None; n];
    for m in gb.leading_monomials() {
        if m.is_one() {
            // unit ideal: the zero ring is finite over anything
            witnesses = (0..n).map(|i| Some(Monomial::var(n, i, 0))).collect();
            break;
        }
        if let Some(i) = m.pure_power_var() {
            if i < n {
                let e = m.exponents()[i];
                let better = witnesses[i]
                    .as_ref()
                    .is_none_or(|w| e < w.exponents()[i]);
                if better {
                    witnesses[i] = Some(Monomial::var(n, i, e));
                }
            }
        }
    }
    Ok(ModuleFiniteness {
        finite: witnesses.iter().all(Option::is_some),
        vars: ring.vars().to_vec(),
        witnesses,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictStatus {
    FinitelyGenerated,
    NotFinitelyGenerated,
    Unknown,
}

impl VerdictStatus {
    /// `FG`, `NOT_FG` or `UNKNOWN`.
    pub fn tag(self) -> &'static str {
        match self {
            VerdictStatus::FinitelyGenerated => "FG",
            VerdictStatus::NotFinitelyGenerated => "NOT_FG",
            VerdictStatus::Unknown => "UNKNOWN",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub certificate: String,
    pub presentation: Option<SubalgebraPresentation>,
}

impl Verdict {
    fn unknown(reason: String) -> Self {
        Verdict {
            status: VerdictStatus::Unknown,
            certificate: reason,
            presentation: None,
        }
    }
}

/// `J` is nonzero as an ideal of `B`: some relation of `A` is not already a relation of `B`.
fn quotient_is_proper(d: &PullbackDiagram) -> Result<bool> {
    let b_gb = d.b().relations.groebner();
    for g in d.a().relations.generators() {
        if !b_gb.contains(g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Decides finite generation of the pullback where possible.
///
/// `assert_domain` asserts that `B` is a domain when it has relations; without it such `B`
/// yields [`VerdictStatus::Unknown`].
pub fn verdict(d: &PullbackDiagram, assert_domain: bool) -> Result<Verdict> {
    match validate(d) {
        Shape::CanonicalQuotient => {
            if !quotient_is_proper(d)? {
                let e = AlgebraError::RegularityUnknown("the quotient ideal is zero".into());
                return Ok(Verdict::unknown(e.to_string()));
            }
            if !d.b().is_polynomial_ring() && !assert_domain {
                let e = AlgebraError::RegularityUnknown(
                    "B has relations and is not asserted to be a domain".into(),
                );
                return Ok(Verdict::unknown(e.to_string()));
            }
            let test = module_finite_test(d.a(), &nonconstant_images(&d.psi))?;
            if !test.finite {
                return Ok(Verdict {
                    status: VerdictStatus::NotFinitelyGenerated,
                    certificate: test.certificate(),
                    presentation: None,
                });
            }
            let presentation = match pullback_presentation(d) {
                Ok(p) => Some(p),
                Err(AlgebraError::UnsupportedShape(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(Verdict {
                status: VerdictStatus::FinitelyGenerated,
                certificate: test.certificate(),
                presentation,
            })
        }
        Shape::Monomial { phi, psi } => {
            let meet = intersect_monomial(&phi, &psi)?;
            let certificate = format!(
                "monomial intersection generated by {}",
                format_monomials(d.a().ring(), meet.generators())
            );
            Ok(Verdict {
                status: VerdictStatus::FinitelyGenerated,
                certificate,
                presentation: Some(pullback_presentation(d)?),
            })
        }
        Shape::Other => Ok(Verdict::unknown(
            "general subring intersection: no decision procedure for this shape".into(),
        )),
    }
}

/// Presentation of `φ⁻¹(Im φ ∩ Im ψ) ⊆ B` (the pullback itself when `ψ` is injective).
pub fn pullback_presentation(d: &PullbackDiagram) -> Result<SubalgebraPresentation> {
    match validate(d) {
        Shape::CanonicalQuotient => {
            let problem = GluingProblem::ideal(d.b().relations.clone(), d.a().relations.clone())?;
            let glued = match glue_generators(&problem) {
                Ok(g) => g,
                Err(AlgebraError::NotZeroDimensional(msg)) => {
                    return Err(AlgebraError::UnsupportedShape(format!(
                        "quotient ideal is not zero-dimensional ({msg})"
                    )))
                }
                Err(e) => return Err(e),
            };
            let mut gens = nonconstant_images(&d.psi);
            for g in glued {
                if !gens.contains(&g) {
                    gens.push(g);
                }
            }
            present_subalgebra(&d.b().relations, gens)
        }
        Shape::Monomial { phi, psi } => {
            let meet = intersect_monomial(&phi, &psi)?;
            let ring = d.a().ring();
            let one = ring.field().one();
            let gens: Vec<Polynomial> = meet
                .generators()
                .iter()
                .map(|e| Polynomial::term(ring, Monomial::new(e.entries().to_vec()), one.clone()))
                .collect();
            present_subalgebra(&d.a().relations, gens)
        }
        Shape::Other => Err(AlgebraError::UnsupportedShape(
            "neither a canonical quotient nor a monomial diagram".into(),
        )),
    }
}
