//! Affine monoids of exponent vectors: Dickson-minimal elements, Hilbert bases of
//! homogeneous linear Diophantine systems, and intersections of monomial subalgebras.

use std::collections::{BTreeSet, HashSet};

use crate::error::{AlgebraError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Componentwise difference, if `self ≥ other`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }
}

/// Minimal elements under the componentwise order; duplicates collapse. Sorted output.
pub fn dickson_min(set: &[ExponentVector]) -> Vec<ExponentVector> {
    let uniq: BTreeSet<&ExponentVector> = set.iter().collect();
    uniq.iter()
        .filter(|v| !uniq.iter().any(|w| w != *v && v.dominates(w)))
        .map(|v| (*v).clone())
        .collect()
}

/// Solutions `(a, b) ∈ ℕ^{m+p}` of `U·a = V·b`; `u` and `v` hold the columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    rows: usize,
    u: Vec<ExponentVector>,
    v: Vec<ExponentVector>,
}

impl DiophantineSystem {
    pub fn new(rows: usize, u: Vec<ExponentVector>, v: Vec<ExponentVector>) -> Result<Self> {
        for col in u.iter().chain(&v) {
            if col.len() != rows {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "column of length {} in a system with {rows} rows",
                    col.len()
                )));
            }
            if col.is_zero() {
                return Err(AlgebraError::DimensionMismatch("zero column".into()));
            }
        }
        Ok(DiophantineSystem { rows, u, v })
    }

    pub fn unknowns(&self) -> usize {
        self.u.len() + self.v.len()
    }

    /// Column `j` of `[U | −V]`.
    fn column(&self, j: usize) -> Vec<i64> {
        if j < self.u.len() {
            self.u[j].0.iter().map(|&e| e as i64).collect()
        } else {
            self.v[j - self.u.len()].0.iter().map(|&e| -(e as i64)).collect()
        }
    }

    /// `U·a − V·b` for a candidate `(a, b)`.
    pub fn defect(&self, x: &ExponentVector) -> Vec<i64> {
        let mut d = vec![0i64; self.rows];
        for (j, &xj) in x.0.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (di, c) in d.iter_mut().zip(self.column(j)) {
                *di += xj as i64 * c;
            }
        }
        d
    }

    pub fn is_solution(&self, x: &ExponentVector) -> bool {
        x.len() == self.unknowns() && self.defect(x).iter().all(|&d| d == 0)
    }

    /// `U·a` for a solution `(a, b)`.
    pub fn left_image(&self, x: &ExponentVector) -> ExponentVector {
        let mut out = vec![0u32; self.rows];
        for (j, col) in self.u.iter().enumerate() {
            for (o, &c) in out.iter_mut().zip(&col.0) {
                *o += x.0[j] * c;
            }
        }
        ExponentVector(out)
    }
}

/// Minimal nonzero solutions of a [`DiophantineSystem`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<ExponentVector>,
}

impl HilbertBasis {
    /// Whether `x` is an ℕ-combination of the basis elements.
    pub fn decomposes(&self, x: &ExponentVector) -> bool {
        in_monoid(x, &self.elements)
    }
}

/// Hilbert basis by Contejean–Devie completion.
///
/// Breadth-first from the unit vectors; a candidate `x` with defect `d` is extended by
/// `e_j` only when `⟨d, A e_j⟩ < 0`, and candidates dominating a known solution are pruned.
pub fn hilbert_basis(sys: &DiophantineSystem) -> HilbertBasis {
    let n = sys.unknowns();
    let columns: Vec<Vec<i64>> = (0..n).map(|j| sys.column(j)).collect();
    let mut basis: Vec<ExponentVector> = Vec::new();
    let mut frontier: BTreeSet<ExponentVector> = (0..n)
        .map(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            ExponentVector(e)
        })
        .collect();

    while !frontier.is_empty() {
        let mut found: BTreeSet<ExponentVector> = BTreeSet::new();
        let mut next: BTreeSet<ExponentVector> = BTreeSet::new();
        for x in &frontier {
            let d = sys.defect(x);
            for (j, col) in columns.iter().enumerate() {
                let dot: i64 = d.iter().zip(col).map(|(a, b)| a * b).sum();
                if dot >= 0 {
                    continue;
                }
                let mut y = x.clone();
                y.0[j] += 1;
                if basis.iter().any(|b| y.dominates(b)) {
                    continue;
                }
                if sys.is_solution(&y) {
                    found.insert(y);
                } else {
                    next.insert(y);
                }
            }
        }
        // same-level solutions have equal sums, so they are pairwise incomparable
        basis.extend(found);
        next.retain(|y| !basis.iter().any(|b| y.dominates(b)));
        frontier = next;
    }
    basis.sort();
    HilbertBasis { elements: basis }
}

fn in_monoid(w: &ExponentVector, gens: &[ExponentVector]) -> bool {
    let mut failed: HashSet<(usize, ExponentVector)> = HashSet::new();
    fn go(
        w: &ExponentVector,
        gens: &[ExponentVector],
        idx: usize,
        failed: &mut HashSet<(usize, ExponentVector)>,
    ) -> bool {
        if w.is_zero() {
            return true;
        }
        if idx == gens.len() || failed.contains(&(idx, w.clone())) {
            return false;
        }
        let g = &gens[idx];
        let mut rest = w.clone();
        loop {
            if go(&rest, gens, idx + 1, failed) {
                return true;
            }
            match rest.checked_sub(g) {
                Some(r) => rest = r,
                None => break,
            }
        }
        failed.insert((idx, w.clone()));
        false
    }
    go(w, gens, 0, &mut failed)
}

/// `K[x^g : g ∈ generators]`; the constant monomial is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSubalgebra {
    nvars: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialSubalgebra {
    pub fn new(nvars: usize, generators: Vec<ExponentVector>) -> Result<Self> {
        for g in &generators {
            if g.len() != nvars {
                return Err(AlgebraError::DimensionMismatch(format!(
                    "generator of length {} in {nvars} variables",
                    g.len()
                )));
            }
            if g.is_zero() {
                return Err(AlgebraError::DimensionMismatch(
                    "the constant monomial is not a generator".into(),
                ));
            }
        }
        Ok(MonomialSubalgebra { nvars, generators })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }
}

/// Whether `x^w` lies in the subalgebra, by bounded search over generator multiplicities.
pub fn subalgebra_member(w: &ExponentVector, s: &MonomialSubalgebra) -> bool {
    w.len() == s.nvars && in_monoid(w, &s.generators)
}

/// Generators of `S1 ∩ S2` read off the Hilbert basis of `U·a = V·b`.
///
/// The result generates the intersection but is not minimalized (e.g. `x^6` is kept in
/// `⟨x², x³⟩ ∩ ⟨x²⟩`).
pub fn intersect_monomial(
    s1: &MonomialSubalgebra,
    s2: &MonomialSubalgebra,
) -> Result<MonomialSubalgebra> {
    if s1.nvars != s2.nvars {
        return Err(AlgebraError::DimensionMismatch(format!(
            "subalgebras in {} and {} variables",
            s1.nvars, s2.nvars
        )));
    }
    let sys = DiophantineSystem::new(s1.nvars, s1.generators.clone(), s2.generators.clone())?;
    let hb = hilbert_basis(&sys);
    let mut gens: Vec<ExponentVector> = hb
        .elements
        .iter()
        .map(|x| sys.left_image(x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    MonomialSubalgebra::new(s1.nvars, gens)
}
