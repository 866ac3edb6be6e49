//! Sparse multivariate polynomials with exact coefficients.
//!
//! A [`Ring`] bundles the variable names, the coefficient field and the monomial order.
//! Every [`Polynomial`] keeps its terms strictly descending under its ring's order with no
//! zero coefficients, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::{FieldElement, FieldSpec, GENERATOR};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps, degree: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The variable index if this is `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn uses_any(&self, vars: std::ops::Range<usize>) -> bool {
        self.exps[vars].iter().any(|&e| e > 0)
    }

    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// Monomial orders. All refine divisibility and are well-orders on monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    /// Weighted degree first, reverse-lexicographic tie-break.
    WeightedGrevlex(Vec<u32>),
    /// Variables `[0, split)` are eliminated: compare that block first, then the rest.
    /// Each block uses (weighted) grevlex; `weights` defaults to all ones.
    Block {
        split: usize,
        weights: Option<Vec<u32>>,
    },
}

fn revlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn weighted_grevlex(a: &[u32], b: &[u32], weights: Option<&[u32]>) -> Ordering {
    let (da, db): (u64, u64) = match weights {
        Some(w) => (
            a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum(),
            b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum(),
        ),
        None => (
            a.iter().map(|&e| e as u64).sum(),
            b.iter().map(|&e| e as u64).sum(),
        ),
    };
    da.cmp(&db).then_with(|| revlex_tiebreak(a, b))
}

impl MonomialOrder {
    pub fn validate(&self, nvars: usize) -> Result<()> {
        let check_weights = |w: &[u32]| {
            if w.len() != nvars {
                return Err(AlgebraError::InvalidOrder(format!(
                    "{} weights for {nvars} variables",
                    w.len()
                )));
            }
            if w.contains(&0) {
                return Err(AlgebraError::InvalidOrder("weights must be positive".into()));
            }
            Ok(())
        };
        match self {
            MonomialOrder::Grevlex => Ok(()),
            MonomialOrder::WeightedGrevlex(w) => check_weights(w),
            MonomialOrder::Block { split, weights } => {
                if *split > nvars {
                    return Err(AlgebraError::InvalidOrder(format!(
                        "block split {split} beyond {nvars} variables"
                    )));
                }
                weights.as_deref().map_or(Ok(()), check_weights)
            }
        }
    }

    /// Comparison on exponent vectors of equal length.
    pub fn cmp_exps(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Grevlex => weighted_grevlex(a, b, None),
            MonomialOrder::WeightedGrevlex(w) => weighted_grevlex(a, b, Some(w)),
            MonomialOrder::Block { split, weights } => {
                let s = *split;
                let (wh, wt) = match weights {
                    Some(w) => (Some(&w[..s]), Some(&w[s..])),
                    None => (None, None),
                };
                weighted_grevlex(&a[..s], &b[..s], wh)
                    .then_with(|| weighted_grevlex(&a[s..], &b[s..], wt))
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(&a.exps, &b.exps)
    }

    /// Degree used for pair selection: the weighted degree, or total degree.
    pub fn sugar_degree(&self, m: &Monomial) -> u64 {
        match self {
            MonomialOrder::WeightedGrevlex(w) => m.weighted_degree(w),
            _ => m.total_degree() as u64,
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        match self {
            MonomialOrder::Grevlex => true,
            MonomialOrder::WeightedGrevlex(w) => w.iter().all(|&x| x == 1),
            MonomialOrder::Block { split, weights } => {
                weights.as_ref().is_none_or(|w| w.iter().all(|&x| x == 1)) && *split == 0
            }
        }
    }

    pub fn weights(&self) -> Option<&[u32]> {
        match self {
            MonomialOrder::WeightedGrevlex(w) => Some(w),
            MonomialOrder::Block { weights, .. } => weights.as_deref(),
            MonomialOrder::Grevlex => None,
        }
    }
}

/// Compares two monomials under `ord`.
pub fn compare(m1: &Monomial, m2: &Monomial, ord: &MonomialOrder) -> Result<Ordering> {
    if m1.len() != m2.len() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "monomials of length {} and {}",
            m1.len(),
            m2.len()
        )));
    }
    ord.validate(m1.len())?;
    Ok(ord.cmp(m1, m2))
}

/// A polynomial ring `K[vars]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: MonomialOrder) -> Result<RingRef> {
        order.validate(vars.len())?;
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(AlgebraError::Parse(format!("duplicate variable `{v}`")));
            }
            if v == GENERATOR && !matches!(field, FieldSpec::Rationals) {
                return Err(AlgebraError::Parse(format!(
                    "variable `{v}` clashes with the field generator"
                )));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// Grevlex ring over the given variable names.
    pub fn grevlex<S: AsRef<str>>(vars: &[S], field: FieldSpec) -> Result<RingRef> {
        Ring::new(
            vars.iter().map(|s| s.as_ref().to_string()).collect(),
            field,
            MonomialOrder::Grevlex,
        )
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Ring::new(self.vars.clone(), self.field.clone(), order)
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn ring_mismatch(a: &Ring, b: &Ring) -> AlgebraError {
    AlgebraError::DimensionMismatch(format!(
        "rings K[{}] and K[{}] differ",
        a.vars.join(","),
        b.vars.join(",")
    ))
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, FieldElement)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: FieldElement) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &RingRef, n: i64) -> Self {
        Self::constant(ring, ring.field().from_int(n))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::from_int(ring, 1)
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, 1), ring.field().one())
    }

    pub fn term(ring: &RingRef, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(m.len(), ring.nvars(), "monomial length");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges like monomials, drops zeros.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, FieldElement)>) -> Self {
        let field = ring.field();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The constant coefficient if the polynomial is a constant (zero included).
    pub fn constant_value(&self) -> Option<FieldElement> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field().zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximum total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.weighted_degree(weights)).max()
    }

    pub fn uses_vars(&self, vars: std::ops::Range<usize>) -> bool {
        self.terms.iter().any(|(m, _)| m.uses_any(vars.clone()))
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(ring_mismatch(&self.ring, &other.ring))
        }
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { field.neg(&b[j].1) } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        field.sub(&a[i].1, &b[j].1)
                    } else {
                        field.add(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            let c = if negate { field.neg(c) } else { c.clone() };
            out.push((m.clone(), c));
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = field.mul(ca, cb);
                acc.entry(ma.mul(mb))
                    .and_modify(|x| *x = field.add(x, &c))
                    .or_insert(c);
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc.into_iter().collect()))
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), field.mul(x, c)))
                .collect(),
        }
    }

    /// `self * c * m`; order is preserved since monomial orders are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, x)| (t.mul(m), field.mul(x, c)))
                .collect(),
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, FieldElement)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Trusts `terms` to be strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, FieldElement)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// `self - c * m * g`, done as one merge.
    pub(crate) fn sub_mul_term(&self, g: &Polynomial, m: &Monomial, c: &FieldElement) -> Polynomial {
        let scaled = g.mul_term(m, c);
        self.merge(&scaled, true)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = self.ring.field().invert(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "point of length {} for {n} variables",
                point.len()
            )));
        }
        let field = self.ring.field();
        let mut powers: Vec<Vec<FieldElement>> = point.iter().map(|p| vec![field.one(), p.clone()]).collect();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = field.mul(pw.last().unwrap(), &point[i]);
                    pw.push(next);
                }
                t = field.mul(&t, &pw[e as usize]);
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Ring homomorphism `x_i ↦ images[i]` into the images' common ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} images for {n} variables",
                images.len()
            )));
        }
        let Some(first) = images.first() else {
            // K -> target: only constants; the target ring is unknown, so stay here
            return Ok(self.clone());
        };
        let target = first.ring().clone();
        for img in images {
            if !same_ring(img.ring(), &target) {
                return Err(ring_mismatch(img.ring(), &target));
            }
        }
        if self.ring.field() != target.field() {
            return Err(AlgebraError::DimensionMismatch("coefficient fields differ".into()));
        }
        self.substitute_into(images, &target)
    }

    /// Substitution with an explicit target ring (needed when there are no images).
    pub fn substitute_into(&self, images: &[Polynomial], target: &RingRef) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap().try_mul(&images[i])?;
                    pw.push(next);
                }
                t = t.try_mul(&pw[e as usize])?;
            }
            acc = acc.try_add(&t)?;
        }
        Ok(acc)
    }

    /// Terms of (weighted) total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u64, weights: Option<&[u32]>) -> Polynomial {
        let deg = |m: &Monomial| match weights {
            Some(w) => m.weighted_degree(w),
            None => m.total_degree() as u64,
        };
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| deg(m) == d).cloned().collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[var] > 0)
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                let e = exps[var];
                exps[var] -= 1;
                (Monomial::new(exps), field.mul(c, &field.from_int(e as i64)))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-expresses the polynomial in `target`, mapping variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &RingRef, var_map: &[usize]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; target.nvars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Moves the polynomial into a ring sharing variable names (any order, possibly more vars).
    pub fn to_ring(&self, target: &RingRef) -> Result<Polynomial> {
        if self.ring.field() != target.field() {
            return Err(AlgebraError::DimensionMismatch("coefficient fields differ".into()));
        }
        let mut var_map = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars().iter().enumerate() {
            match target.var_index(v) {
                Some(j) => var_map.push(j),
                None => {
                    if self.terms.iter().any(|(m, _)| m.exponents()[i] > 0) {
                        return Err(AlgebraError::UndefinedName(v.clone()));
                    }
                    var_map.push(usize::MAX);
                }
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0; target.nvars()];
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        exps[var_map[i]] += e;
                    }
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }
}

/// Spec-level arithmetic entry point with ring checking.
pub fn arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$call(rhs).expect("polynomials from different rings")
            }
        }
        impl std::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$call(&rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c.as_rational() {
                Some(r) if num_traits::Signed::is_negative(r) => (true, field.neg(c)),
                Some(_) => (false, c.clone()),
                None => (false, c.clone()),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let coeff = field.format(&mag);
            let compound = field.term_count(&mag) > 1;
            if m.is_one() {
                if compound {
                    write!(f, "({coeff})")?;
                } else {
                    write!(f, "{coeff}")?;
                }
            } else {
                if compound {
                    write!(f, "({coeff})*")?;
                } else if !mag.is_one() {
                    write!(f, "{coeff}*")?;
                }
                write!(f, "{}", m.format(self.ring.vars()))?;
            }
        }
        Ok(())
    }
}
