//! Zariski tangent spaces at rational points via the Jacobian, and unions of lines.

use crate::error::{AlgebraError, Result};
use crate::field::FieldElement;
use crate::glue::{GluingProblem, GluingTarget, SubalgebraPresentation};
use crate::groebner::{self, standard_monomials, IdealPresentation, StandardMonomials};
use crate::linalg::rank;
use crate::poly::{Polynomial, RingRef};
use crate::pullback::AlgebraPresentation;

/// Relations together with a rational point on their zero set.
#[derive(Clone, Debug)]
pub struct PointedPresentation {
    ring: RingRef,
    relations: Vec<Polynomial>,
    point: Vec<FieldElement>,
}

fn format_point(ring: &RingRef, p: &[FieldElement]) -> String {
    let parts: Vec<String> = p.iter().map(|c| ring.field().format(c)).collect();
    format!("({})", parts.join(", "))
}

fn check_on_variety(ring: &RingRef, relations: &[Polynomial], point: &[FieldElement]) -> Result<()> {
    if point.len() != ring.nvars() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "point has {} coordinates, ring has {} variables",
            point.len(),
            ring.nvars()
        )));
    }
    for r in relations {
        if !r.eval(point)?.is_zero() {
            return Err(AlgebraError::PointNotOnVariety(format!(
                "{r} does not vanish at {}",
                format_point(ring, point)
            )));
        }
    }
    Ok(())
}

impl PointedPresentation {
    pub fn new(relations: &IdealPresentation, point: Vec<FieldElement>) -> Result<Self> {
        let ring = relations.ring().clone();
        check_on_variety(&ring, relations.generators(), &point)?;
        Ok(PointedPresentation {
            ring,
            relations: relations.generators().to_vec(),
            point,
        })
    }

    pub fn from_algebra(a: &AlgebraPresentation, point: Vec<FieldElement>) -> Result<Self> {
        Self::new(&a.relations, point)
    }

    /// The glued point: the origin of the new variables.
    pub fn glued_point(p: &SubalgebraPresentation) -> Result<Self> {
        let field = p.ring().field();
        Self::new(&p.relations, vec![field.zero(); p.ring().nvars()])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn point(&self) -> &[FieldElement] {
        &self.point
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentReport {
    pub variable_count: usize,
    pub jacobian_rank: usize,
    pub tangent_dim: usize,
    pub bound: Option<usize>,
}

/// Rank of `(∂r_i/∂t_j)` at `point`.
pub fn jacobian_rank(ring: &RingRef, relations: &[Polynomial], point: &[FieldElement]) -> Result<usize> {
    check_on_variety(ring, relations, point)?;
    let mut matrix = Vec::with_capacity(relations.len());
    for r in relations {
        let row = (0..ring.nvars())
            .map(|j| r.derivative(j).eval(point))
            .collect::<Result<Vec<_>>>()?;
        matrix.push(row);
    }
    Ok(rank(ring.field(), &matrix))
}

pub fn tangent_dim(p: &PointedPresentation) -> Result<TangentReport> {
    let jacobian_rank = jacobian_rank(&p.ring, &p.relations, &p.point)?;
    let variable_count = p.ring.nvars();
    Ok(TangentReport {
        variable_count,
        jacobian_rank,
        tangent_dim: variable_count - jacobian_rank,
        bound: None,
    })
}

/// Lower bound on the tangent dimension at a glued point: `k · dim_K B/J̃`, with `k` the
/// smallest tangent dimension of the original variety among the glued points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluingBound {
    pub k: usize,
    pub quotient_dim: usize,
    pub bound: usize,
    pub computed: usize,
    pub holds: bool,
}

pub fn p20_bound(glue_result: &SubalgebraPresentation, problem: &GluingProblem) -> Result<GluingBound> {
    let ambient = problem.ambient();
    let ring = problem.ring();
    let k = match problem.target() {
        GluingTarget::Points(points) => {
            let mut k = usize::MAX;
            for p in points {
                let rank = jacobian_rank(ring, ambient.generators(), p)?;
                k = k.min(ring.nvars() - rank);
            }
            k
        }
        // affine space is smooth everywhere
        GluingTarget::Ideal(_) if ambient.is_zero() => ring.nvars(),
        GluingTarget::Ideal(_) => {
            return Err(AlgebraError::UnsupportedShape(
                "glued points are not given explicitly".into(),
            ))
        }
    };
    let quotient_dim = match standard_monomials(&problem.preimage_basis()?, None) {
        StandardMonomials::Finite(v) => v.len(),
        StandardMonomials::Infinite { .. } => {
            return Err(AlgebraError::NotZeroDimensional("glued set is not finite".into()))
        }
    };
    let computed = tangent_dim(&PointedPresentation::glued_point(glue_result)?)?.tangent_dim;
    let bound = k * quotient_dim;
    Ok(GluingBound {
        k,
        quotient_dim,
        bound,
        computed,
        holds: computed >= bound,
    })
}

/// Ideal of `⋃ K·v` in `ring`, one line per direction `v`.
pub fn lines_union_ideal(ring: &RingRef, directions: &[Vec<FieldElement>]) -> Result<IdealPresentation> {
    let n = ring.nvars();
    let mut acc: Option<IdealPresentation> = None;
    for v in directions {
        if v.len() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "direction {} in {n} variables",
                format_point(ring, v)
            )));
        }
        if v.iter().all(FieldElement::is_zero) {
            return Err(AlgebraError::ZeroDirection);
        }
        let y = |i: usize| Polynomial::var(ring, i);
        let mut minors = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                minors.push(&y(i).scale(&v[j]) - &y(j).scale(&v[i]));
            }
        }
        let line = IdealPresentation::new(ring, minors)?;
        acc = Some(match acc {
            None => line.groebner().to_ideal(),
            Some(a) => groebner::intersect(&a, &line)?,
        });
    }
    acc.ok_or_else(|| AlgebraError::DimensionMismatch("no directions".into()))
}
