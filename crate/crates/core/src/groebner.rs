//! Buchberger's algorithm and the ideal operations built on it: membership, intersection,
//! elimination kernels, standard monomials.
//!
//! Reduced bases are returned monic and sorted by ascending leading monomial, so the output
//! for a fixed ring and generator sequence is reproducible bit for bit.

use std::cmp::Ordering;

use crate::error::{AlgebraError, Result};
use crate::poly::{same_ring, Monomial, MonomialOrder, Polynomial, Ring, RingRef};

/// Generators of an ideal in a fixed ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !same_ring(g.ring(), ring) {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "generator {g} is not in K[{}]",
                    ring.vars().join(",")
                )));
            }
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn zero(ring: &RingRef) -> Self {
        IdealPresentation {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced basis under the ring's own order.
    pub fn groebner(&self) -> GroebnerBasis {
        buchberger_in_ring(&self.ring, &self.generators)
    }

    /// The same ideal with generators moved to `ring` (same variable names).
    pub fn to_ring(&self, ring: &RingRef) -> Result<IdealPresentation> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        IdealPresentation::new(ring, gens)
    }

    pub fn sum(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealPresentation::new(&self.ring, gens)
    }
}

fn check_same(a: &RingRef, b: &RingRef) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(AlgebraError::DimensionMismatch(format!(
            "ideals in K[{}] and K[{}]",
            a.vars().join(","),
            b.vars().join(",")
        )))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    basis: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn to_ideal(&self) -> IdealPresentation {
        IdealPresentation {
            ring: self.ring.clone(),
            generators: self.basis.clone(),
        }
    }
}

/// Full reduction of `f` by `divisors`: no term of the result is divisible by a leading monomial.
pub(crate) fn reduce(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let field = f.ring().field().clone();
    let mut p = f.clone();
    let mut remainder: Vec<(Monomial, crate::field::FieldElement)> = Vec::new();
    while let Some((lm, lc)) = p.leading_term().cloned() {
        let divisor = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.leading_term().unwrap();
                let q = gm.quotient_of(&lm);
                let c = field.div(&lc, gc).expect("nonzero leading coefficient");
                p = p.sub_mul_term(g, &q, &c);
            }
            None => {
                remainder.push(p.pop_leading().unwrap());
            }
        }
    }
    Polynomial::from_sorted_terms(f.ring(), remainder)
}

/// Normal form with respect to a basis in the same ring.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    check_same(f.ring(), &g.ring)?;
    Ok(reduce(f, &g.basis))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = f.ring().field();
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let a = f.mul_term(&fm.quotient_of(lcm), &field.invert(fc).unwrap());
    let b = g.mul_term(&gm.quotient_of(lcm), &field.invert(gc).unwrap());
    &a - &b
}

/// Reduced Gröbner basis of `generators` under `ring`'s order.
fn buchberger_in_ring(ring: &RingRef, generators: &[Polynomial]) -> GroebnerBasis {
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    // `treated[i][j]` (i < j) marks pairs already taken off the queue
    let mut treated: Vec<Vec<bool>> = Vec::new();

    let add = |h: Polynomial, basis: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, treated: &mut Vec<Vec<bool>>| {
        let h = h.monic();
        let k = basis.len();
        let hm = h.leading_monomial().unwrap().clone();
        for (i, b) in basis.iter().enumerate() {
            let bm = b.leading_monomial().unwrap();
            let lcm = bm.lcm(&hm);
            let degree = order.sugar_degree(&lcm);
            pairs.push(Pair { i, j: k, lcm, degree });
        }
        for row in treated.iter_mut() {
            row.push(false);
        }
        treated.push(vec![false; k + 1]);
        basis.push(h);
    };

    for g in generators {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            add(r, &mut basis, &mut pairs, &mut treated);
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first, ties broken deterministically
        let (idx, _) = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.degree
                    .cmp(&b.degree)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(idx);
        let (i, j) = (pair.i, pair.j);
        treated[i][j] = true;

        let fm = basis[i].leading_monomial().unwrap();
        let gm = basis[j].leading_monomial().unwrap();
        if fm.is_coprime(gm) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && is_treated(&treated, i, k)
                && is_treated(&treated, j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], &pair.lcm);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            add(r, &mut basis, &mut pairs, &mut treated);
        }
    }

    GroebnerBasis {
        ring: ring.clone(),
        basis: autoreduce(basis, &order),
        reduced: true,
    }
}

fn is_treated(treated: &[Vec<bool>], a: usize, b: usize) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    treated[lo][hi]
}

fn autoreduce(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let gm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.leading_monomial().unwrap();
            k != idx && hm.divides(gm) && (hm != gm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, g)| g.clone())
                .collect();
            let head = Polynomial::term(
                minimal[i].ring(),
                minimal[i].leading_monomial().unwrap().clone(),
                minimal[i].leading_coeff().unwrap().clone(),
            );
            let tail = &minimal[i] - &head;
            (&head + &reduce(&tail, &others)).monic()
        })
        .collect();
    out.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Reduced Gröbner basis of `ideal` under `order`; generators are moved to a ring with that order.
pub fn buchberger(ideal: &IdealPresentation, order: &MonomialOrder) -> Result<GroebnerBasis> {
    if ideal.ring.order() == order {
        return Ok(ideal.groebner());
    }
    let ring = ideal.ring.with_order(order.clone())?;
    let moved = ideal.to_ring(&ring)?;
    Ok(moved.groebner())
}

pub fn member(f: &Polynomial, ideal: &IdealPresentation) -> Result<bool> {
    check_same(f.ring(), &ideal.ring)?;
    if f.is_zero() {
        return Ok(true);
    }
    ideal.groebner().contains(f)
}

/// True iff the two presentations generate the same ideal.
pub fn ideal_equal(a: &IdealPresentation, b: &IdealPresentation) -> Result<bool> {
    check_same(&a.ring, &b.ring)?;
    let ga = a.groebner();
    let gb = b.groebner();
    for g in &b.generators {
        if !ga.contains(g)? {
            return Ok(false);
        }
    }
    for g in &a.generators {
        if !gb.contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn internal_names(prefix: &str, n: usize) -> Vec<String> {
    // `#` cannot occur in parsed identifiers, so these never clash with user names
    (0..n).map(|i| format!("{prefix}#{i}")).collect()
}

fn tail_weights(ring: &Ring) -> Vec<u32> {
    match ring.order().weights() {
        Some(w) if w.len() == ring.nvars() => w.to_vec(),
        _ => vec![1; ring.nvars()],
    }
}

/// `I ∩ J` via elimination of `t` from `t·I + (1 − t)·J`.
pub fn intersect(i: &IdealPresentation, j: &IdealPresentation) -> Result<IdealPresentation> {
    check_same(&i.ring, &j.ring)?;
    let ring = &i.ring;
    if i.is_zero() || j.is_zero() {
        return Ok(IdealPresentation::zero(ring));
    }
    let n = ring.nvars();
    let mut names = internal_names("t", 1);
    names.extend(internal_names("v", n));
    let mut weights = vec![1];
    weights.extend(tail_weights(ring));
    let big = Ring::new(
        names,
        ring.field().clone(),
        MonomialOrder::Block {
            split: 1,
            weights: Some(weights),
        },
    )?;
    let embed: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::new();
    for g in &i.generators {
        gens.push(&t * &g.map_vars(&big, &embed));
    }
    for g in &j.generators {
        gens.push(&one_minus_t * &g.map_vars(&big, &embed));
    }
    let gb = buchberger_in_ring(&big, &gens);
    let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..n).collect();
    let kept: Vec<Polynomial> = gb
        .basis
        .iter()
        .filter(|g| !g.uses_vars(0..1))
        .map(|g| project(g, ring, &back))
        .collect();
    Ok(buchberger_in_ring(ring, &kept).to_ideal())
}

/// Maps a polynomial free of the eliminated variables (marked `usize::MAX`) into `target`.
fn project(g: &Polynomial, target: &RingRef, var_map: &[usize]) -> Polynomial {
    let terms = g
        .terms()
        .iter()
        .map(|(m, c)| {
            let mut exps = vec![0; target.nvars()];
            for (k, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    exps[var_map[k]] = e;
                }
            }
            (Monomial::new(exps), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// Kernel of `K[newVars] → K[t…]/⟨ambient⟩`, `x_i ↦ images[i]`, as an ideal of `target`.
///
/// Eliminates the `t` block from `⟨ambient⟩ + ⟨x_i − images[i]⟩` under a block order
/// `t ≫ x`; the `x` block inherits `target`'s weights when it has any.
pub fn kernel_of_map_in(
    ambient: &IdealPresentation,
    images: &[Polynomial],
    target: &RingRef,
) -> Result<IdealPresentation> {
    if images.len() != target.nvars() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "{} images for {} new variables",
            images.len(),
            target.nvars()
        )));
    }
    for img in images {
        check_same(img.ring(), &ambient.ring)?;
    }
    if ambient.ring.field() != target.field() {
        return Err(AlgebraError::DimensionMismatch("coefficient fields differ".into()));
    }
    let n = ambient.ring.nvars();
    let m = target.nvars();
    let mut names = internal_names("t", n);
    names.extend(internal_names("x", m));
    let mut weights = vec![1; n];
    weights.extend(tail_weights(target));
    let big = Ring::new(
        names,
        target.field().clone(),
        MonomialOrder::Block {
            split: n,
            weights: Some(weights),
        },
    )?;
    let embed_t: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Polynomial> = ambient
        .generators
        .iter()
        .map(|g| g.map_vars(&big, &embed_t))
        .collect();
    for (k, img) in images.iter().enumerate() {
        gens.push(&Polynomial::var(&big, n + k) - &img.map_vars(&big, &embed_t));
    }
    let gb = buchberger_in_ring(&big, &gens);
    let back: Vec<usize> = (0..n).map(|_| usize::MAX).chain(0..m).collect();
    let kept: Vec<Polynomial> = gb
        .basis
        .iter()
        .filter(|g| !g.uses_vars(0..n))
        .map(|g| project(g, target, &back))
        .collect();
    Ok(buchberger_in_ring(target, &kept).to_ideal())
}

/// [`kernel_of_map_in`] with a grevlex ring on `new_vars`.
pub fn kernel_of_map<S: AsRef<str>>(
    ambient: &IdealPresentation,
    images: &[Polynomial],
    new_vars: &[S],
) -> Result<IdealPresentation> {
    let target = Ring::grevlex(new_vars, ambient.ring.field().clone())?;
    kernel_of_map_in(ambient, images, &target)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardMonomials {
    Finite(Vec<Monomial>),
    /// Positive-dimensional quotient. `pure_power[i]` tells whether variable `i` has a
    /// pure-power leading monomial; `bounded` lists standard monomials up to the requested degree.
    Infinite {
        pure_power: Vec<bool>,
        bounded: Option<Vec<Monomial>>,
    },
}

impl StandardMonomials {
    pub fn is_finite(&self) -> bool {
        matches!(self, StandardMonomials::Finite(_))
    }
}

/// Which variables have a pure-power leading monomial in `g`.
pub fn pure_power_profile(g: &GroebnerBasis) -> Vec<bool> {
    let mut out = vec![false; g.ring.nvars()];
    for m in g.leading_monomials() {
        if let Some(i) = m.pure_power_var() {
            out[i] = true;
        }
    }
    out
}

pub fn zero_dim(g: &GroebnerBasis) -> bool {
    !g.is_unit() && pure_power_profile(g).into_iter().all(|b| b)
}

fn is_standard(m: &Monomial, g: &GroebnerBasis) -> bool {
    !g.leading_monomials().any(|lm| lm.divides(m))
}

/// Standard monomials of total degree ≤ `bound`, ascending in the basis's order.
pub fn standard_monomials_up_to(g: &GroebnerBasis, bound: u32) -> Vec<Monomial> {
    let n = g.ring.nvars();
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn walk(
        var: usize,
        remaining: u32,
        exps: &mut Vec<u32>,
        g: &GroebnerBasis,
        out: &mut Vec<Monomial>,
    ) {
        let m = Monomial::new(exps.clone());
        if !is_standard(&m, g) {
            // every multiple is non-standard as well
            return;
        }
        if var == exps.len() {
            out.push(m);
            return;
        }
        for e in 0..=remaining {
            exps[var] = e;
            let m = Monomial::new(exps.clone());
            if !is_standard(&m, g) {
                break;
            }
            walk(var + 1, remaining - e, exps, g, out);
        }
        exps[var] = 0;
    }
    walk(0, bound, &mut exps, g, &mut out);
    let order = g.ring.order();
    out.sort_by(|a, b| order.cmp(a, b));
    out
}

/// All standard monomials if the quotient is finite-dimensional, else the pure-power profile.
pub fn standard_monomials(g: &GroebnerBasis, bound: Option<u32>) -> StandardMonomials {
    if g.is_unit() {
        return StandardMonomials::Finite(Vec::new());
    }
    if zero_dim(g) {
        // every standard monomial divides lcm of the pure powers; its degree is bounded by their sum
        let limit: u32 = (0..g.ring.nvars())
            .map(|i| {
                g.leading_monomials()
                    .filter(|m| m.pure_power_var() == Some(i))
                    .map(|m| m.exponents()[i])
                    .min()
                    .unwrap()
            })
            .sum();
        StandardMonomials::Finite(standard_monomials_up_to(g, limit))
    } else {
        StandardMonomials::Infinite {
            pure_power: pure_power_profile(g),
            bounded: bound.map(|b| standard_monomials_up_to(g, b)),
        }
    }
}

/// Orders polynomials by leading monomial under their ring order (zero first).
pub fn cmp_by_leading(a: &Polynomial, b: &Polynomial) -> Ordering {
    match (a.leading_monomial(), b.leading_monomial()) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some(x), Some(y)) => a.ring().order().cmp(x, y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::parse::{parse_poly, parse_poly_list};

    fn ring(vars: &[&str]) -> RingRef {
        Ring::grevlex(vars, FieldSpec::rationals()).unwrap()
    }

    fn ideal(r: &RingRef, gens: &str) -> IdealPresentation {
        IdealPresentation::new(r, parse_poly_list(gens, r).unwrap()).unwrap()
    }

    fn p(r: &RingRef, s: &str) -> Polynomial {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x"]);
        let g = ideal(&r, "x^2-1").groebner();
        assert_eq!(normal_form(&p(&r, "x^2"), &g).unwrap(), p(&r, "1"));
        assert_eq!(normal_form(&p(&r, "x"), &g).unwrap(), p(&r, "x"));
        assert!(normal_form(&p(&r, "x^3-x"), &g).unwrap().is_zero());
    }

    #[test]
    fn buchberger_examples() {
        let r = ring(&["x"]);
        let g = ideal(&r, "x^2-1").groebner();
        assert_eq!(g.basis(), &[p(&r, "x^2-1")]);
        assert!(ideal(&r, "x, 1-x").groebner().is_unit());

        let r = ring(&["x", "y", "z"]);
        let cubic = ideal(&r, "y-x^2, z-x^3");
        let g = cubic.groebner();
        assert!(g.contains(&p(&r, "y^3 - z^2")).unwrap());
        for gen in cubic.generators() {
            assert!(g.contains(gen).unwrap());
        }
        // the relation is a basis element once x is eliminated
        let elim = MonomialOrder::Block { split: 1, weights: None };
        let g = buchberger(&cubic, &elim).unwrap();
        let expected = p(&r, "y^3 - z^2").to_ring(g.ring()).unwrap();
        assert!(g.basis().contains(&expected));
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x"]);
        let i = ideal(&r, "x^2-1");
        assert!(member(&p(&r, "x^3-x"), &i).unwrap());
        assert!(!member(&p(&r, "x"), &i).unwrap());
        assert!(member(&Polynomial::zero(&r), &i).unwrap());
        assert!(member(&Polynomial::zero(&r), &IdealPresentation::zero(&r)).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = ring(&["x"]);
        let k = intersect(&ideal(&r, "x-1"), &ideal(&r, "x+1")).unwrap();
        assert!(ideal_equal(&k, &ideal(&r, "x^2-1")).unwrap());
        let k = intersect(&ideal(&r, "x"), &ideal(&r, "x")).unwrap();
        assert!(ideal_equal(&k, &ideal(&r, "x")).unwrap());
        let r = ring(&["x", "y"]);
        let k = intersect(&ideal(&r, "x"), &ideal(&r, "y")).unwrap();
        assert!(ideal_equal(&k, &ideal(&r, "x*y")).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = ring(&["x"]);
        assert!(ideal_equal(&ideal(&r, "x^2-1"), &ideal(&r, "(x-1)*(x+1)")).unwrap());
        assert!(!ideal_equal(&ideal(&r, "x"), &ideal(&r, "x^2")).unwrap());
    }

    #[test]
    fn kernel_examples() {
        let t = ring(&["x"]);
        let none = IdealPresentation::zero(&t);
        let images = parse_poly_list("x^2-1, x^3-x", &t).unwrap();
        let k = kernel_of_map(&none, &images, &["x0", "x1"]).unwrap();
        let r2 = ring(&["x0", "x1"]);
        assert!(ideal_equal(&k, &ideal(&r2, "x0^3 - x1^2 + x0^2")).unwrap());

        let k = kernel_of_map(&none, &[p(&t, "x")], &["x0"]).unwrap();
        assert!(k.is_zero());

        let images = parse_poly_list("x^2, x^3", &t).unwrap();
        let k = kernel_of_map(&none, &images, &["x0", "x1"]).unwrap();
        assert!(ideal_equal(&k, &ideal(&r2, "x0^3 - x1^2")).unwrap());
    }

    #[test]
    fn kernel_modulo_ambient_relations() {
        // K[x,y]/(y - x^2) with x0 ↦ y, x1 ↦ x: relation x0 - x1^2
        let t = ring(&["x", "y"]);
        let amb = ideal(&t, "y - x^2");
        let k = kernel_of_map(&amb, &[p(&t, "y"), p(&t, "x")], &["x0", "x1"]).unwrap();
        let r2 = ring(&["x0", "x1"]);
        assert!(ideal_equal(&k, &ideal(&r2, "x0 - x1^2")).unwrap());
    }

    #[test]
    fn standard_monomial_examples() {
        let r = ring(&["x"]);
        let g = ideal(&r, "x^2-1").groebner();
        let one = Monomial::new(vec![0]);
        let x = Monomial::new(vec![1]);
        assert_eq!(standard_monomials(&g, None), StandardMonomials::Finite(vec![one.clone(), x.clone()]));
        let g = ideal(&r, "x^3-1").groebner();
        match standard_monomials(&g, None) {
            StandardMonomials::Finite(v) => assert_eq!(v.len(), 3),
            other => panic!("{other:?}"),
        }
        let r2 = ring(&["x", "y"]);
        let g = ideal(&r2, "y").groebner();
        match standard_monomials(&g, Some(3)) {
            StandardMonomials::Infinite { pure_power, bounded } => {
                assert_eq!(pure_power, vec![false, true]);
                assert_eq!(bounded.unwrap().len(), 4);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_dim_examples() {
        let r = ring(&["x"]);
        assert!(zero_dim(&ideal(&r, "x^2-1").groebner()));
        let r2 = ring(&["x", "y"]);
        assert!(!zero_dim(&ideal(&r2, "y").groebner()));
        assert!(zero_dim(&ideal(&r2, "x^2-1, y^3").groebner()));
        assert!(!zero_dim(&ideal(&r2, "1").groebner()));
    }

    #[test]
    fn buchberger_under_other_order() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, "x - y^2, y^3 - 1");
        let g = buchberger(&i, &MonomialOrder::WeightedGrevlex(vec![1, 3])).unwrap();
        assert_eq!(g.order(), &MonomialOrder::WeightedGrevlex(vec![1, 3]));
        let back = buchberger(&g.to_ideal().to_ring(&r).unwrap(), r.order()).unwrap();
        assert_eq!(back, i.groebner());
    }
}
