//! Exact sparse square matrices and minimal polynomials.
//!
//! Matrices store only nonzero entries, row-keyed, so equality is exact
//! entrywise and serialization order is (row, column) sorted. Entries are
//! either rationals or multivariate polynomials through the [`Entry`]
//! trait.
//!
//! [`minimal_polynomial`] finds the least monic annihilator of a matrix on
//! the span of seed vectors by exact Krylov iteration; in this crate every
//! spectrum of interest consists of half-integers, so
//! [`split_half_integer_roots`] recovers eigenvalues by trial division.

use std::collections::BTreeMap;

use crate::poly::{MultiPoly, UniPoly};
use crate::rat::Rat;
use crate::{Error, Result};

/// Scalar entry of a sparse matrix.
pub trait Entry: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn one() -> Self;
}

impl Entry for Rat {
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn one() -> Self {
        Rat::one()
    }
}

impl Entry for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add(other);
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn one() -> Self {
        // entries agree on variable count in any one matrix; a lone
        // constant works for the identity of scalar-like polynomials
        MultiPoly::one(0)
    }
}

/// Sparse vector over the rationals, keyed by index.
pub type SparseVec = BTreeMap<usize, Rat>;

/// Square sparse matrix with exact entries and no stored zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix<E: Entry = Rat> {
    dim: usize,
    rows: BTreeMap<usize, BTreeMap<usize, E>>,
}

impl<E: Entry> SparseMatrix<E> {
    pub fn zero(dim: usize) -> Self {
        SparseMatrix {
            dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, E::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.rows.values().map(BTreeMap::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&E> {
        self.rows.get(&r).and_then(|row| row.get(&c))
    }

    /// Overwrite the entry, dropping it when zero.
    pub fn set(&mut self, r: usize, c: usize, value: E) {
        debug_assert!(r < self.dim && c < self.dim);
        if value.is_zero() {
            if let Some(row) = self.rows.get_mut(&r) {
                row.remove(&c);
                if row.is_empty() {
                    self.rows.remove(&r);
                }
            }
        } else {
            self.rows.entry(r).or_default().insert(c, value);
        }
    }

    /// Accumulate into the entry, dropping it when it cancels.
    pub fn add_to(&mut self, r: usize, c: usize, value: &E) {
        debug_assert!(r < self.dim && c < self.dim);
        if value.is_zero() {
            return;
        }
        let row = self.rows.entry(r).or_default();
        match row.entry(c) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(value);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        if self.rows.get(&r).is_some_and(BTreeMap::is_empty) {
            self.rows.remove(&r);
        }
    }

    pub fn row(&self, r: usize) -> Option<&BTreeMap<usize, E>> {
        self.rows.get(&r)
    }

    /// Entries in sorted (row, column) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &E)> {
        self.rows
            .iter()
            .flat_map(|(&r, row)| row.iter().map(move |(&c, v)| (r, c, v)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self>
    where
        E: SignedEntry,
    {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.entries() {
            out.add_to(r, c, &v.neg_ref());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &E) -> Self {
        if k.is_zero() {
            return Self::zero(self.dim);
        }
        let mut out = Self::zero(self.dim);
        for (r, c, v) in self.entries() {
            out.set(r, c, v.mul_ref(k));
        }
        out
    }

    /// Exact product; zero results of cancellation are dropped.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.dim);
        for (&r, row) in &self.rows {
            let mut acc: BTreeMap<usize, E> = BTreeMap::new();
            for (k, a) in row {
                if let Some(brow) = other.rows.get(k) {
                    for (&c, b) in brow {
                        let prod = a.mul_ref(b);
                        if prod.is_zero() {
                            continue;
                        }
                        match acc.entry(c) {
                            std::collections::btree_map::Entry::Vacant(v) => {
                                v.insert(prod);
                            }
                            std::collections::btree_map::Entry::Occupied(mut o) => {
                                o.get_mut().add_assign_ref(&prod);
                            }
                        }
                    }
                }
            }
            acc.retain(|_, v| !v.is_zero());
            if !acc.is_empty() {
                out.rows.insert(r, acc);
            }
        }
        Ok(out)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }
}

/// Entries that can be negated; needed for subtraction.
pub trait SignedEntry: Entry {
    fn neg_ref(&self) -> Self;
}

impl SignedEntry for Rat {
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl SignedEntry for MultiPoly {
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

impl SparseMatrix<Rat> {
    /// Trace: sum of diagonal entries.
    pub fn trace(&self) -> Rat {
        let mut acc = Rat::zero();
        for (&r, row) in &self.rows {
            if let Some(v) = row.get(&r) {
                acc += v;
            }
        }
        acc
    }

    /// Matrix-vector product on a sparse column vector.
    pub fn matvec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&r, row) in &self.rows {
            let mut acc = Rat::zero();
            for (c, a) in row {
                if let Some(x) = v.get(c) {
                    acc += &(a * x);
                }
            }
            if !acc.is_zero() {
                out.insert(r, acc);
            }
        }
        out
    }

    /// Columns in ascending column order, skipping empty ones.
    pub fn columns(&self) -> Vec<(usize, SparseVec)> {
        let mut cols: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (r, c, v) in self.entries() {
            cols.entry(c).or_default().insert(r, v.clone());
        }
        cols.into_iter().collect()
    }

    /// Evaluate a univariate polynomial at this matrix.
    pub fn eval_poly(&self, p: &UniPoly) -> Self {
        let mut acc = SparseMatrix::zero(self.dim);
        for c in p.coeffs().iter().rev() {
            acc = acc.matmul(self).expect("same dimension");
            for i in 0..self.dim {
                acc.add_to(i, i, c);
            }
        }
        acc
    }

    /// `p(self) * seed` without forming `p(self)`.
    fn eval_poly_on_vec(&self, p: &UniPoly, seed: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for c in p.coeffs().iter().rev() {
            acc = self.matvec(&acc);
            if !c.is_zero() {
                for (&i, x) in seed {
                    let add = c * x;
                    merge_into(&mut acc, i, add);
                }
            }
        }
        acc
    }

    /// `p(self) * seeds` columnwise, seeds given as a matrix.
    fn eval_poly_on_matrix(&self, p: &UniPoly, seeds: &Self) -> Self {
        let mut acc = SparseMatrix::zero(self.dim);
        for c in p.coeffs().iter().rev() {
            acc = self.matmul(&acc).expect("same dimension");
            if !c.is_zero() {
                for (r, col, v) in seeds.entries() {
                    acc.add_to(r, col, &(c * v));
                }
            }
        }
        acc
    }
}

fn merge_into(v: &mut SparseVec, i: usize, add: Rat) {
    if add.is_zero() {
        return;
    }
    match v.entry(i) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(add);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += &add;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Echelon basis used during Krylov elimination. Each row keeps the
/// reduced vector together with its coordinates in the original sequence.
struct Echelon {
    rows: Vec<(usize, SparseVec, Vec<Rat>)>,
}

impl Echelon {
    fn new() -> Self {
        Echelon { rows: vec![] }
    }

    /// Reduce `v` against the basis. Returns the combination coefficients
    /// when `v` is dependent, otherwise inserts the reduced vector.
    ///
    /// `coords` expresses `v` in the original Krylov sequence.
    fn offer(&mut self, mut v: SparseVec, mut coords: Vec<Rat>) -> Option<Vec<Rat>> {
        loop {
            let Some((&pivot, _)) = v.iter().next() else {
                return Some(coords);
            };
            match self.rows.iter().find(|(p, _, _)| *p == pivot) {
                None => {
                    // normalize so the pivot entry is one
                    let inv = v[&pivot].inverse().expect("pivot nonzero");
                    let v_norm: SparseVec = v.iter().map(|(&i, x)| (i, x * &inv)).collect();
                    let coords_norm: Vec<Rat> = coords
                        .iter()
                        .map(|c| c * &inv)
                        .chain(std::iter::repeat_with(Rat::zero))
                        .take(coords.len())
                        .collect();
                    self.rows.push((pivot, v_norm, coords_norm));
                    return None;
                }
                Some((_, basis, basis_coords)) => {
                    let factor = v[&pivot].clone();
                    let basis = basis.clone();
                    let basis_coords = basis_coords.clone();
                    for (&i, x) in &basis {
                        merge_into(&mut v, i, -&(x * &factor));
                    }
                    if coords.len() < basis_coords.len() {
                        coords.resize(basis_coords.len(), Rat::zero());
                    }
                    for (c, b) in coords.iter_mut().zip(&basis_coords) {
                        *c -= &(b * &factor);
                    }
                }
            }
        }
    }
}

/// Minimal polynomial of the restriction of `a` to the cyclic subspace
/// generated by `seed`.
fn cyclic_minimal_polynomial(a: &SparseMatrix<Rat>, seed: &SparseVec) -> UniPoly {
    if seed.is_empty() {
        return UniPoly::one();
    }
    let mut echelon = Echelon::new();
    let mut v = seed.clone();
    let mut power = 0usize;
    loop {
        let mut coords = vec![Rat::zero(); power + 1];
        coords[power] = Rat::one();
        if let Some(mut dep) = echelon.offer(v.clone(), coords) {
            // dependency: sum dep[i] * a^i * seed = 0 with dep[power] = 1
            dep.truncate(power + 1);
            debug_assert!(dep[power].is_one());
            return UniPoly::from_coeffs(dep);
        }
        v = a.matvec(&v);
        power += 1;
        assert!(power <= a.dim() + 1, "Krylov iteration failed to terminate");
    }
}

/// Monic polynomial of least degree annihilating `a` on the span of the
/// seed vectors, found by exact Krylov-style linear dependence search.
///
/// Passing the full standard basis yields the minimal polynomial of `a`.
pub fn minimal_polynomial(a: &SparseMatrix<Rat>, seeds: &[SparseVec]) -> UniPoly {
    let mut p = UniPoly::one();
    for seed in seeds {
        let w = a.eval_poly_on_vec(&p, seed);
        if !w.is_empty() {
            let q = cyclic_minimal_polynomial(a, &w);
            p = p.mul(&q);
        }
    }
    p
}

/// Minimal polynomial of `a` on the column space of `seeds`.
///
/// Starts from the first nonzero column, then repeatedly checks the whole
/// seed matrix at once and extends the polynomial from any residual
/// column. Matrix-level residual checks keep the column sweep short.
pub fn minimal_polynomial_on_image(a: &SparseMatrix<Rat>, seeds: &SparseMatrix<Rat>) -> UniPoly {
    let mut p = UniPoly::one();
    loop {
        let residual = a.eval_poly_on_matrix(&p, seeds);
        if residual.is_zero() {
            return p;
        }
        let (_, col) = residual.columns().into_iter().next().expect("nonzero");
        let q = cyclic_minimal_polynomial(a, &col);
        debug_assert!(q.degree() != Some(0));
        p = p.mul(&q);
    }
}

/// Split a monic polynomial into linear factors over half-integers with
/// `|root| <= bound`, returning (root, multiplicity) pairs sorted by root.
///
/// The spectra arising here consist of contents shifted by `(omega-1)/2`
/// and their negatives, all half-integers within the bound, so trial
/// division is exhaustive. A nontrivial remainder is an error.
pub fn split_half_integer_roots(p: &UniPoly, bound: &Rat) -> Result<Vec<(Rat, usize)>> {
    let mut rest = p.clone();
    let mut roots = vec![];
    let two_bound = (bound * &Rat::from_int(2))
        .to_i64()
        .ok_or_else(|| Error::Parse("root bound must be a half-integer".into()))?;
    for twice in -two_bound..=two_bound {
        let cand = Rat::new(twice, 2);
        let mut mult = 0usize;
        while let Some(q) = rest.div_exact_linear(&cand) {
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((cand, mult));
        }
    }
    if rest.degree() != Some(0) {
        return Err(Error::NonSplitPolynomial {
            poly: p.to_string(),
            bound: bound.to_string(),
        });
    }
    Ok(roots)
}

/// Unit vector `e_i` as a sparse vector.
pub fn unit_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Rat::one());
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(dim: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix<Rat> {
        let mut m = SparseMatrix::zero(dim);
        for &(r, c, v) in entries {
            m.add_to(r, c, &Rat::from_int(v));
        }
        m
    }

    #[test]
    fn identity_is_neutral() {
        let a = mat(3, &[(0, 1, 2), (1, 2, -3), (2, 0, 5), (1, 1, 7)]);
        let id = SparseMatrix::<Rat>::identity(3);
        assert_eq!(id.matmul(&a).unwrap(), a);
        assert_eq!(a.matmul(&id).unwrap(), a);
    }

    #[test]
    fn permutation_squares_to_identity() {
        // swap of two coordinates
        let p = mat(2, &[(0, 1, 1), (1, 0, 1)]);
        assert_eq!(
            p.matmul(&p).unwrap(),
            SparseMatrix::<Rat>::identity(2)
        );
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = mat(2, &[(0, 0, 1)]);
        let b = mat(3, &[(0, 0, 1)]);
        assert!(matches!(
            a.matmul(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn minimal_polynomial_of_identity() {
        let id = SparseMatrix::<Rat>::identity(4);
        let seeds: Vec<SparseVec> = (0..4).map(unit_vec).collect();
        let p = minimal_polynomial(&id, &seeds);
        assert_eq!(p, UniPoly::linear(&Rat::one()));
        assert_eq!(p.to_string(), "u - 1");
    }

    #[test]
    fn minimal_polynomial_of_diagonal() {
        let a = mat(2, &[(0, 0, 2), (1, 1, 3)]);
        let seeds: Vec<SparseVec> = (0..2).map(unit_vec).collect();
        let p = minimal_polynomial(&a, &seeds);
        let expected = UniPoly::linear(&Rat::from_int(2)).mul(&UniPoly::linear(&Rat::from_int(3)));
        assert_eq!(p, expected);
        // annihilates the matrix exactly
        assert!(a.eval_poly(&p).is_zero());
        let roots = split_half_integer_roots(&p, &Rat::from_int(5)).unwrap();
        assert_eq!(
            roots,
            vec![(Rat::from_int(2), 1), (Rat::from_int(3), 1)]
        );
    }

    #[test]
    fn minimal_polynomial_on_image_restricts() {
        // diag(2,3,7) restricted to the span of e0, e1 ignores the 7
        let a = mat(3, &[(0, 0, 2), (1, 1, 3), (2, 2, 7)]);
        let seeds = mat(3, &[(0, 0, 1), (1, 1, 1)]);
        let p = minimal_polynomial_on_image(&a, &seeds);
        assert_eq!(p.degree(), Some(2));
        assert!(p.eval(&Rat::from_int(2)).is_zero());
        assert!(p.eval(&Rat::from_int(3)).is_zero());
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        // nilpotent 2x2 Jordan block has minimal polynomial u^2
        let a = mat(2, &[(0, 1, 1)]);
        let seeds: Vec<SparseVec> = (0..2).map(unit_vec).collect();
        let p = minimal_polynomial(&a, &seeds);
        assert_eq!(p.degree(), Some(2));
        assert!(a.eval_poly(&p).is_zero());
        let err = split_half_integer_roots(
            &UniPoly::from_coeffs(vec![Rat::from_int(1), Rat::zero(), Rat::one()]),
            &Rat::from_int(3),
        );
        assert!(err.is_err(), "u^2 + 1 must not split");
    }

    #[test]
    fn polynomial_entries_multiply() {
        // matrices over polynomials share the generic multiplication
        let x = MultiPoly::var(1, 0);
        let mut a = SparseMatrix::<MultiPoly>::zero(2);
        a.set(0, 0, x.clone());
        a.set(1, 1, x.clone());
        let sq = a.matmul(&a).unwrap();
        assert_eq!(sq.get(0, 0), Some(&x.mul(&x)));
    }

    #[test]
    fn subtraction_cancels() {
        let a = mat(2, &[(0, 1, 2), (1, 0, -1)]);
        assert!(a.sub(&a).unwrap().is_zero());
    }
}
