//! Gluing finitely many points of an affine variety to a single point.
//!
//! For `X = V(I(X))` and a zero-dimensional ideal `J̃ ⊇ I(X)` the glued variety has
//! coordinate ring `K + J̃/I(X)`. With `h_j` a degree-compatible Gröbner basis of `J̃` and
//! `b_k` its standard monomials, the products `b_k·h_j` generate `K + J̃` as a K-algebra:
//! an element of `J̃` of degree `d` is `Σ l_j h_j` with `deg l_j h_j ≤ d`, and reducing each
//! `l_j` modulo `J̃` splits it into a K-combination of the `b_k` plus an element of `J̃` of
//! lower degree. [`span_dim_check`] verifies this numerically degree by degree.
//!
//! For `X = 𝔸¹` there is also the closed-form presentation [`a1_glue`].

use crate::error::{AlgebraError, Result};
use crate::field::FieldElement;
use crate::groebner::{
    self, standard_monomials, standard_monomials_up_to, zero_dim, GroebnerBasis,
    IdealPresentation, StandardMonomials,
};
use crate::linalg::PolySpan;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};

#[derive(Clone, Debug)]
pub enum GluingTarget {
    Points(Vec<Vec<FieldElement>>),
    Ideal(IdealPresentation),
}

/// Which points (or which ideal) of `X = V(ambient)` get identified.
#[derive(Clone, Debug)]
pub struct GluingProblem {
    ambient: IdealPresentation,
    target: GluingTarget,
}

fn format_point(ring: &RingRef, p: &[FieldElement]) -> String {
    let parts: Vec<String> = p.iter().map(|c| ring.field().format(c)).collect();
    format!("({})", parts.join(", "))
}

impl GluingProblem {
    /// Gluing rational points; checks that they lie on `X` and are pairwise distinct.
    pub fn points(ambient: IdealPresentation, points: Vec<Vec<FieldElement>>) -> Result<Self> {
        let ring = ambient.ring().clone();
        if points.is_empty() {
            return Err(AlgebraError::DimensionMismatch("no points to glue".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != ring.nvars() {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "point {} has {} coordinates, ring has {} variables",
                    format_point(&ring, p),
                    p.len(),
                    ring.nvars()
                )));
            }
            for g in ambient.generators() {
                if !g.eval(p)?.is_zero() {
                    return Err(AlgebraError::PointOffVariety(format_point(&ring, p)));
                }
            }
            if points[..i].contains(p) {
                return Err(AlgebraError::DuplicatePoint(format_point(&ring, p)));
            }
        }
        Ok(GluingProblem {
            ambient,
            target: GluingTarget::Points(points),
        })
    }

    /// Gluing the zero set of `j`; the glued ideal is `j + ambient`.
    pub fn ideal(ambient: IdealPresentation, j: IdealPresentation) -> Result<Self> {
        if !crate::poly::same_ring(ambient.ring(), j.ring()) {
            return Err(AlgebraError::DimensionMismatch(
                "glued ideal and ambient relations live in different rings".into(),
            ));
        }
        Ok(GluingProblem {
            ambient,
            target: GluingTarget::Ideal(j),
        })
    }

    pub fn ambient(&self) -> &IdealPresentation {
        &self.ambient
    }

    pub fn ring(&self) -> &RingRef {
        self.ambient.ring()
    }

    pub fn target(&self) -> &GluingTarget {
        &self.target
    }

    pub fn points_list(&self) -> Option<&[Vec<FieldElement>]> {
        match &self.target {
            GluingTarget::Points(p) => Some(p),
            GluingTarget::Ideal(_) => None,
        }
    }

    /// `J̃`: the ideal of the glued set in the full polynomial ring (contains `I(X)`).
    pub fn preimage_ideal(&self) -> Result<IdealPresentation> {
        match &self.target {
            GluingTarget::Points(_) => points_ideal(self),
            GluingTarget::Ideal(j) => j.sum(&self.ambient),
        }
    }

    /// Reduced basis of `J̃` under grevlex on the ambient variables.
    pub fn preimage_basis(&self) -> Result<GroebnerBasis> {
        groebner::buchberger(&self.preimage_ideal()?, &MonomialOrder::Grevlex)
    }
}

/// `⋂ᵢ (⟨t_j − p_ij⟩ + I(X))` by iterated intersection.
pub fn points_ideal(problem: &GluingProblem) -> Result<IdealPresentation> {
    let GluingTarget::Points(points) = &problem.target else {
        return Err(AlgebraError::DimensionMismatch("problem has no point list".into()));
    };
    let ring = problem.ring();
    let mut acc: Option<IdealPresentation> = None;
    for p in points {
        let mut gens: Vec<Polynomial> = (0..ring.nvars())
            .map(|j| &Polynomial::var(ring, j) - &Polynomial::constant(ring, p[j].clone()))
            .collect();
        gens.extend(problem.ambient.generators().iter().cloned());
        let m = IdealPresentation::new(ring, gens)?;
        acc = Some(match acc {
            None => m.groebner().to_ideal(),
            Some(a) => groebner::intersect(&a, &m)?,
        });
    }
    Ok(acc.expect("at least one point"))
}

/// `f ∈ K + J` iff the normal form of `f` is constant.
pub fn kplusj_member(f: &Polynomial, jgb: &GroebnerBasis) -> Result<bool> {
    Ok(jgb.normal_form(f)?.is_constant())
}

/// A finitely presented subalgebra `K[x_0, …] / relations ↪ K[t…]/I(X)`, `x_i ↦ images[i]`.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation {
    pub new_vars: Vec<String>,
    pub weights: Vec<u32>,
    pub images: Vec<Polynomial>,
    pub relations: IdealPresentation,
    ambient_ring: RingRef,
}

impl SubalgebraPresentation {
    /// The ring `K[new_vars]` (weighted grevlex by image degree).
    pub fn ring(&self) -> &RingRef {
        self.relations.ring()
    }

    pub fn ambient_ring(&self) -> &RingRef {
        &self.ambient_ring
    }

    /// Every relation maps into `⟨ambient⟩` under `x_i ↦ images[i]`.
    pub fn is_sound(&self, ambient: &IdealPresentation) -> Result<bool> {
        let gb = ambient.groebner();
        for r in self.relations.generators() {
            let img = r.substitute_into(&self.images, &self.ambient_ring)?;
            if !gb.contains(&img)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Text block: `vars:`, `weights:`, `images:`, `relations:`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("vars: {}\n", self.new_vars.join(", ")));
        let w: Vec<String> = self.weights.iter().map(u32::to_string).collect();
        out.push_str(&format!("weights: {}\n", w.join(", ")));
        out.push_str("images:\n");
        for (v, img) in self.new_vars.iter().zip(&self.images) {
            out.push_str(&format!("  {v} = {img}\n"));
        }
        out.push_str("relations:\n");
        for r in self.relations.generators() {
            out.push_str(&format!("  {r}\n"));
        }
        out
    }
}

fn new_var_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

fn presentation_ring(ambient_ring: &RingRef, images: &[Polynomial]) -> Result<(Vec<String>, Vec<u32>, RingRef)> {
    let names = new_var_names(images.len());
    let weights: Vec<u32> = images
        .iter()
        .map(|g| g.total_degree().unwrap_or(0).max(1))
        .collect();
    let ring = Ring::new(
        names.clone(),
        ambient_ring.field().clone(),
        MonomialOrder::WeightedGrevlex(weights.clone()),
    )?;
    Ok((names, weights, ring))
}

/// Presents `K[images] ⊆ K[t…]/⟨ambient⟩` through its kernel.
pub fn present_subalgebra(
    ambient: &IdealPresentation,
    images: Vec<Polynomial>,
) -> Result<SubalgebraPresentation> {
    let (new_vars, weights, ring) = presentation_ring(ambient.ring(), &images)?;
    let relations = groebner::kernel_of_map_in(ambient, &images, &ring)?;
    Ok(SubalgebraPresentation {
        new_vars,
        weights,
        images,
        relations,
        ambient_ring: ambient.ring().clone(),
    })
}

/// `{b_k · h_j}` for the grevlex basis `h_j` of `J̃` and its standard monomials `b_k`.
pub fn glue_generators(problem: &GluingProblem) -> Result<Vec<Polynomial>> {
    let ring = problem.ring();
    let gb = problem.preimage_basis()?;
    if gb.is_unit() {
        return Err(AlgebraError::NotZeroDimensional("the glued set is empty".into()));
    }
    let std = match standard_monomials(&gb, None) {
        StandardMonomials::Finite(v) => v,
        StandardMonomials::Infinite { pure_power, .. } => {
            let missing: Vec<&str> = ring
                .vars()
                .iter()
                .zip(&pure_power)
                .filter(|(_, &b)| !b)
                .map(|(v, _)| v.as_str())
                .collect();
            return Err(AlgebraError::NotZeroDimensional(format!(
                "no pure power of {} among leading monomials",
                missing.join(", ")
            )));
        }
    };
    let grevlex_ring = gb.ring().clone();
    let field = ring.field();
    let mut gens: Vec<Polynomial> = Vec::new();
    for h in gb.basis() {
        for b in &std {
            let g = h.mul_term(b, &field.one());
            if !gens.contains(&g) {
                gens.push(g);
            }
        }
    }
    let order = grevlex_ring.order().clone();
    gens.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    gens.into_iter().map(|g| g.to_ring(ring)).collect()
}

/// Presentation of `K + J̃/I(X)` from [`glue_generators`].
pub fn glue_presentation(problem: &GluingProblem) -> Result<SubalgebraPresentation> {
    let gens = glue_generators(problem)?;
    present_subalgebra(&problem.ambient, gens)
}

/// Monic gcd of two univariate polynomials by Euclid.
pub fn univariate_gcd(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = groebner::reduce(&a, std::slice::from_ref(&b));
        a = b;
        b = r;
    }
    a.monic()
}

/// Closed-form presentation of gluing the roots of a monic squarefree `φ₀ ∈ K[x]`.
///
/// Generators `φ_i = x^i φ₀` for `i < n = deg φ₀`, weights `n + i`. Relations:
/// `x_i x_j − x_k x_l` whenever `i + j = k + l`, and for each `s ≤ n − 2`
/// `x_0² x_s − Σ_ℓ b_ℓ x_p x_q` with `b_ℓ` the coefficient of `x^{n−ℓ}` in `φ₀`,
/// `p = min(n − 1, n + s − ℓ)`, `q = n + s − ℓ − p`.
pub fn a1_glue(phi0: &Polynomial) -> Result<SubalgebraPresentation> {
    let ring = phi0.ring().clone();
    if ring.nvars() != 1 {
        return Err(AlgebraError::DimensionMismatch(format!(
            "φ₀ must be univariate, ring has {} variables",
            ring.nvars()
        )));
    }
    let n = match phi0.total_degree() {
        Some(d) if d >= 1 => d as usize,
        _ => return Err(AlgebraError::NotMonic(format!("{phi0} has no roots to glue"))),
    };
    if !phi0.leading_coeff().unwrap().is_one() {
        return Err(AlgebraError::NotMonic(phi0.to_string()));
    }
    let g = univariate_gcd(phi0, &phi0.derivative(0));
    if !g.is_constant() {
        return Err(AlgebraError::NotSquarefree(g.to_string()));
    }
    let field = ring.field().clone();

    let x = Polynomial::var(&ring, 0);
    let mut images = vec![phi0.clone()];
    for i in 1..n {
        images.push(&images[i - 1] * &x);
    }
    let (new_vars, weights, target) = presentation_ring(&ring, &images)?;

    // b[ℓ] = coefficient of x^{n−ℓ}
    let mut b = vec![field.zero(); n + 1];
    for (m, c) in phi0.terms() {
        b[n - m.total_degree() as usize] = c.clone();
    }
    let var = |i: usize| Polynomial::var(&target, i);
    let mut relations = Vec::new();
    for s in 0..=(2 * n).saturating_sub(2) {
        let pairs: Vec<(usize, usize)> = (0..n)
            .filter_map(|i| {
                let j = s.checked_sub(i)?;
                (i <= j && j < n).then_some((i, j))
            })
            .collect();
        if let Some((&(i0, j0), rest)) = pairs.split_first() {
            for &(i, j) in rest {
                relations.push(&(&var(i0) * &var(j0)) - &(&var(i) * &var(j)));
            }
        }
    }
    for s in 0..n.saturating_sub(1) {
        let mut rel = &(&var(0) * &var(0)) * &var(s);
        for (l, bl) in b.iter().enumerate() {
            if bl.is_zero() {
                continue;
            }
            let total = n + s - l;
            let p = total.min(n - 1);
            let q = total - p;
            let term = (&var(p) * &var(q)).scale(bl);
            rel = &rel - &term;
        }
        relations.push(rel);
    }
    let relations = IdealPresentation::new(&target, relations)?;
    Ok(SubalgebraPresentation {
        new_vars,
        weights,
        images,
        relations,
        ambient_ring: ring,
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// For every `d' ≤ d`: the dimension of the span of generator products of degree `≤ d'`
/// (the empty product included) next to `1 + #{monomials of degree ≤ d'} − #{standard
/// monomials of J̃ of degree ≤ d'}`, which is `dim (K + J̃) ∩ K[t]_{≤d'}`.
pub fn span_dim_profile(
    problem: &GluingProblem,
    generators: &[Polynomial],
    d: u32,
) -> Result<Vec<(usize, usize)>> {
    let ring = problem.ring();
    let gb = problem.preimage_basis()?;
    let n = ring.nvars() as u64;
    let std = standard_monomials_up_to(&gb, d);

    let degrees: Vec<u32> = generators
        .iter()
        .map(|g| g.total_degree().unwrap_or(0))
        .collect();
    if let Some(i) = degrees.iter().position(|&e| e == 0) {
        return Err(AlgebraError::DimensionMismatch(format!(
            "generator {} is constant",
            generators[i]
        )));
    }
    // words as nondecreasing index sequences, bucketed by degree
    let mut by_degree: Vec<Vec<Polynomial>> = vec![Vec::new(); d as usize + 1];
    fn words(
        start: usize,
        deg: u32,
        word: &Polynomial,
        gens: &[Polynomial],
        degrees: &[u32],
        max: u32,
        out: &mut Vec<Vec<Polynomial>>,
    ) {
        out[deg as usize].push(word.clone());
        for k in start..gens.len() {
            let nd = deg + degrees[k];
            if nd <= max {
                let next = word * &gens[k];
                words(k, nd, &next, gens, degrees, max, out);
            }
        }
    }
    words(0, 0, &Polynomial::one(ring), generators, &degrees, d, &mut by_degree);

    let mut span = PolySpan::new();
    let mut out = Vec::with_capacity(d as usize + 1);
    for (deg, bucket) in by_degree.iter().enumerate() {
        for w in bucket {
            span.insert(w);
        }
        let all = binomial(n + deg as u64, n) as usize;
        let standard = std
            .iter()
            .filter(|m: &&Monomial| m.total_degree() as usize <= deg)
            .count();
        out.push((span.dim(), 1 + all - standard));
    }
    Ok(out)
}

/// `(wordSpanDim, closedFormDim)` at degree bound `d`; equality certifies the generators
/// reach every element of `K + J̃` up to degree `d`.
pub fn span_dim_check(
    problem: &GluingProblem,
    generators: &[Polynomial],
    d: u32,
) -> Result<(usize, usize)> {
    Ok(*span_dim_profile(problem, generators, d)?.last().unwrap())
}

/// Whether `J̃` of the problem is zero-dimensional.
pub fn is_zero_dimensional(problem: &GluingProblem) -> Result<bool> {
    Ok(zero_dim(&problem.preimage_basis()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groebner::ideal_equal;
    use crate::parse::{parse_point, parse_poly, parse_poly_list};

    fn ring(vars: &[&str]) -> RingRef {
        Ring::grevlex(vars, FieldSpec::rationals()).unwrap()
    }

    fn ideal(r: &RingRef, gens: &str) -> IdealPresentation {
        IdealPresentation::new(r, parse_poly_list(gens, r).unwrap()).unwrap()
    }

    fn points(r: &RingRef, pts: &[&str]) -> Vec<Vec<FieldElement>> {
        pts.iter().map(|p| parse_point(p, r.field()).unwrap()).collect()
    }

    fn a1_problem(pts: &[&str]) -> GluingProblem {
        let r = ring(&["x"]);
        GluingProblem::points(IdealPresentation::zero(&r), points(&r, pts)).unwrap()
    }

    fn relations_equal(p: &SubalgebraPresentation, expected: &str) -> bool {
        let e = ideal(p.ring(), expected);
        ideal_equal(&p.relations, &e).unwrap()
    }

    #[test]
    fn points_ideal_examples() {
        let r = ring(&["x"]);
        let i = points_ideal(&a1_problem(&["1", "-1"])).unwrap();
        assert!(ideal_equal(&i, &ideal(&r, "x^2-1")).unwrap());
        let i = points_ideal(&a1_problem(&["0"])).unwrap();
        assert!(ideal_equal(&i, &ideal(&r, "x")).unwrap());

        let r2 = ring(&["x", "y"]);
        let parabola = ideal(&r2, "y - x^2");
        let prob = GluingProblem::points(parabola, points(&r2, &["(0,0)", "(1,1)"])).unwrap();
        let i = points_ideal(&prob).unwrap();
        assert!(ideal_equal(&i, &ideal(&r2, "y - x^2, x^2 - x")).unwrap());
    }

    #[test]
    fn point_validation() {
        let r2 = ring(&["x", "y"]);
        let parabola = ideal(&r2, "y - x^2");
        let off = GluingProblem::points(parabola.clone(), points(&r2, &["(1,2)"]));
        assert!(matches!(off, Err(AlgebraError::PointOffVariety(_))));
        let dup = GluingProblem::points(parabola, points(&r2, &["(1,1)", "(1,1)"]));
        assert!(matches!(dup, Err(AlgebraError::DuplicatePoint(_))));
    }

    #[test]
    fn kplusj_examples() {
        let r = ring(&["x"]);
        let g = ideal(&r, "x^2-1").groebner();
        assert!(kplusj_member(&parse_poly("x^2-1", &r).unwrap(), &g).unwrap());
        assert!(!kplusj_member(&parse_poly("x", &r).unwrap(), &g).unwrap());
        assert!(kplusj_member(&parse_poly("x^3-x", &r).unwrap(), &g).unwrap());
    }

    #[test]
    fn generator_examples() {
        let r = ring(&["x"]);
        let prob = |j: &str| GluingProblem::ideal(IdealPresentation::zero(&r), ideal(&r, j)).unwrap();
        assert_eq!(
            glue_generators(&prob("x^2-1")).unwrap(),
            parse_poly_list("x^2-1, x^3-x", &r).unwrap()
        );
        assert_eq!(
            glue_generators(&prob("x^3-1")).unwrap(),
            parse_poly_list("x^3-1, x^4-x, x^5-x^2", &r).unwrap()
        );
        assert_eq!(glue_generators(&prob("x")).unwrap(), parse_poly_list("x", &r).unwrap());
    }

    #[test]
    fn line_is_rejected() {
        let r = ring(&["x", "y"]);
        let prob = GluingProblem::ideal(IdealPresentation::zero(&r), ideal(&r, "y")).unwrap();
        assert!(matches!(glue_generators(&prob), Err(AlgebraError::NotZeroDimensional(_))));
    }

    #[test]
    fn presentation_examples() {
        let p = glue_presentation(&a1_problem(&["1", "-1"])).unwrap();
        assert!(relations_equal(&p, "x0^3 - x1^2 + x0^2"));
        assert_eq!(p.weights, vec![2, 3]);
        let p = glue_presentation(&a1_problem(&["0"])).unwrap();
        assert!(p.relations.is_zero());
        let p = glue_presentation(&a1_problem(&["0", "1"])).unwrap();
        assert!(relations_equal(&p, "x0^3 - x1^2 + x0*x1"));
    }

    #[test]
    fn a1_templates_match_the_worked_examples() {
        let r = ring(&["x"]);
        let p = a1_glue(&parse_poly("x^2-1", &r).unwrap()).unwrap();
        assert_eq!(p.relations.generators().len(), 1);
        assert_eq!(p.relations.generators()[0].to_string(), "x0^3 - x1^2 + x0^2");

        let p = a1_glue(&parse_poly("x^3-1", &r).unwrap()).unwrap();
        let shown: Vec<String> = p.relations.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            shown,
            vec!["-x1^2 + x0*x2", "x0^3 - x1*x2 + x0^2", "x0^2*x1 - x2^2 + x0*x1"]
        );
        assert_eq!(p.weights, vec![3, 4, 5]);

        let p = a1_glue(&parse_poly("x^2-x", &r).unwrap()).unwrap();
        assert!(relations_equal(&p, "x0^3 - x1^2 + x0*x1"));
        assert!(p.is_sound(&IdealPresentation::zero(&r)).unwrap());
    }

    #[test]
    fn a1_preconditions() {
        let r = ring(&["x"]);
        let f = |s: &str| a1_glue(&parse_poly(s, &r).unwrap());
        assert!(matches!(f("2*x^2-2"), Err(AlgebraError::NotMonic(_))));
        assert!(matches!(f("x^2-2*x+1"), Err(AlgebraError::NotSquarefree(_))));
        assert!(matches!(f("3"), Err(AlgebraError::NotMonic(_))));
        let p = f("x-5").unwrap();
        assert!(p.relations.is_zero());
    }

    #[test]
    fn span_dim_examples() {
        let r = ring(&["x"]);
        let prob = GluingProblem::ideal(IdealPresentation::zero(&r), ideal(&r, "x^2-1")).unwrap();
        let gens = parse_poly_list("x^2-1, x^3-x", &r).unwrap();
        assert_eq!(span_dim_check(&prob, &gens, 6).unwrap(), (6, 6));
        assert_eq!(span_dim_check(&prob, &gens, 1).unwrap(), (1, 1));

        let prob = GluingProblem::ideal(IdealPresentation::zero(&r), ideal(&r, "x^3-1")).unwrap();
        let gens = parse_poly_list("x^3-1, x^4-x, x^5-x^2", &r).unwrap();
        assert_eq!(span_dim_check(&prob, &gens, 5).unwrap(), (4, 4));
        // dropping a generator leaves a gap at its degree
        let partial = &gens[..2];
        let (words, closed) = span_dim_check(&prob, partial, 5).unwrap();
        assert!(words < closed);
    }
}
