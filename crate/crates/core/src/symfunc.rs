//! Classical and double (factorial) Schur polynomials.
//!
//! Both are computed as sums over semistandard tableaux, which keeps the
//! arithmetic division-free. The double Schur polynomial
//! `s_nu(x | a)` uses the shifted parameter sequence `a_i = (eps+i-1)^2`
//! attached to each classical group family; evaluating it at the special
//! tuples produced by [`evaluation_point`] is what the closed-form
//! characteristic map consumes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::young::Partition;
use crate::{Error, Result};

/// The doubly infinite parameter sequence of a classical group family.
///
/// `Squares` is `a_i = (eps + i - 1)^2` with `eps` one of 0, 1/2, 1;
/// `Zero` is the degenerate all-zero sequence under which double Schur
/// polynomials collapse to classical ones.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParamSequence {
    Squares { eps: Rat },
    Zero,
}

impl ParamSequence {
    pub fn with_epsilon(eps: Rat) -> Result<Self> {
        let allowed = [Rat::zero(), Rat::new(1, 2), Rat::one()];
        if !allowed.contains(&eps) {
            return Err(Error::Parse(format!(
                "epsilon must be 0, 1/2 or 1, got {eps}"
            )));
        }
        Ok(ParamSequence::Squares { eps })
    }

    pub fn zero() -> Self {
        ParamSequence::Zero
    }

    /// `a_i`, defined for every integer index.
    pub fn a(&self, i: i64) -> Rat {
        match self {
            ParamSequence::Zero => Rat::zero(),
            ParamSequence::Squares { eps } => {
                let base = eps + &Rat::from_int(i - 1);
                &base * &base
            }
        }
    }
}

/// A polynomial asserted to be symmetric in all of its variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricPolynomial(MultiPoly);

impl SymmetricPolynomial {
    /// Wrap after verifying invariance under adjacent transpositions.
    pub fn new(poly: MultiPoly) -> Result<Self> {
        if let Some(monomial) = asymmetry_witness(&poly) {
            return Err(Error::NotSymmetric { monomial });
        }
        Ok(SymmetricPolynomial(poly))
    }

    /// Wrap without checking; for sums that are symmetric by construction.
    pub fn from_poly_unchecked(poly: MultiPoly) -> Self {
        SymmetricPolynomial(poly)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn vars(&self) -> usize {
        self.0.vars()
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        self.0.eval(point)
    }
}

/// A monomial violating symmetry, if one exists.
fn asymmetry_witness(poly: &MultiPoly) -> Option<String> {
    for i in 1..poly.vars() {
        let swapped = poly.swap_vars(i - 1, i);
        if &swapped != poly {
            let diff = poly.sub(&swapped);
            let expo = diff.leading_exponent().cloned().expect("difference nonzero");
            let coeff = diff.coeff(&expo);
            let mut witness = MultiPoly::zero(poly.vars());
            witness.add_term(expo, coeff);
            return Some(witness.display_with("x"));
        }
    }
    None
}

/// Enumerate semistandard fillings of `shape` with entries `1..=n`,
/// calling `visit` with the grid of entries.
fn for_each_semistandard<F: FnMut(&[Vec<usize>])>(shape: &Partition, n: usize, mut visit: F) {
    if shape.is_empty() {
        visit(&[]);
        return;
    }
    if shape.len() > n {
        return;
    }
    let rows: Vec<usize> = shape.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();

    fn rec<F: FnMut(&[Vec<usize>])>(
        grid: &mut Vec<Vec<usize>>,
        rows: &[usize],
        n: usize,
        r: usize,
        c: usize,
        visit: &mut F,
    ) {
        if r == rows.len() {
            visit(grid);
            return;
        }
        let (next_r, next_c) = if c + 1 < rows[r] {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]); // weakly increasing along rows
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1); // strictly increasing down columns
        }
        for v in lo..=n {
            grid[r][c] = v;
            rec(grid, rows, n, next_r, next_c, visit);
        }
        grid[r][c] = 0;
    }

    rec(&mut grid, &rows, n, 0, 0, &mut visit);
}

/// The Schur polynomial `s_nu` in `n` variables as a tableau sum.
///
/// Returns the zero polynomial when `nu` has more than `n` rows, matching
/// the vanishing of the corresponding character.
pub fn schur(nu: &Partition, n: usize) -> SymmetricPolynomial {
    let mut out = MultiPoly::zero(n);
    for_each_semistandard(nu, n, |grid| {
        let mut expo = vec![0u32; n];
        for row in grid {
            for &v in row {
                expo[v - 1] += 1;
            }
        }
        out.add_term(expo, Rat::one());
    });
    SymmetricPolynomial::from_poly_unchecked(out)
}

/// Double Schur polynomial `s_nu(x | a)` as an explicit polynomial in
/// `x_1..x_n`.
pub fn double_schur_poly(nu: &Partition, n: usize, seq: &ParamSequence) -> SymmetricPolynomial {
    let mut out = MultiPoly::zero(n);
    for_each_semistandard(nu, n, |grid| {
        let mut term = MultiPoly::one(n);
        for (r, row) in grid.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                let content = c as i64 - r as i64;
                let shift = seq.a(entry as i64 + content);
                let factor =
                    MultiPoly::var(n, entry - 1).add(&MultiPoly::constant(n, -&shift));
                term = term.mul(&factor);
            }
        }
        for (expo, coeff) in term.terms() {
            out.add_term(expo.clone(), coeff.clone());
        }
    });
    SymmetricPolynomial::from_poly_unchecked(out)
}

/// Evaluate `s_nu(x | a)` at a rational tuple without building the
/// symbolic polynomial.
pub fn double_schur_eval(nu: &Partition, n: usize, seq: &ParamSequence, x: &[Rat]) -> Rat {
    assert_eq!(x.len(), n);
    let mut acc = Rat::zero();
    for_each_semistandard(nu, n, |grid| {
        let mut term = Rat::one();
        for (r, row) in grid.iter().enumerate() {
            for (c, &entry) in row.iter().enumerate() {
                let content = c as i64 - r as i64;
                term *= &(&x[entry - 1] - &seq.a(entry as i64 + content));
                if term.is_zero() {
                    return;
                }
            }
        }
        acc += &term;
    });
    acc
}

/// The tuple `(a_{rho_1+n}, a_{rho_2+n-1}, ..., a_{rho_n+1})` at which
/// double Schur polynomials are evaluated; missing parts count as zero.
pub fn evaluation_point(rho: &Partition, n: usize, seq: &ParamSequence) -> Result<Vec<Rat>> {
    if rho.len() > n {
        return Err(Error::TooManyParts {
            length: rho.len(),
            vars: n,
        });
    }
    Ok((1..=n)
        .map(|i| seq.a(rho.part(i - 1) as i64 + (n - i + 1) as i64))
        .collect())
}

/// Coefficients of a symmetric polynomial in the Schur basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    vars: usize,
    terms: BTreeMap<Partition, Rat>,
}

/// One expansion term as serialized: `{"nu": [...], "coeff": "p/q"}`.
#[derive(Serialize, Deserialize)]
pub struct SchurTerm {
    pub nu: Vec<usize>,
    pub coeff: Rat,
}

impl SchurExpansion {
    pub fn zero(vars: usize) -> Self {
        SchurExpansion {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, nu: &Partition) -> Rat {
        self.terms.get(nu).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, nu: Partition, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(nu) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &Rat) -> SchurExpansion {
        let mut out = SchurExpansion::zero(self.vars);
        for (nu, c) in &self.terms {
            out.add_term(nu.clone(), c * k);
        }
        out
    }

    /// Rebuild the symmetric polynomial `sum coeff * s_nu`.
    pub fn reconstruct(&self) -> SymmetricPolynomial {
        let mut acc = MultiPoly::zero(self.vars);
        for (nu, c) in &self.terms {
            acc = acc.add(&schur(nu, self.vars).poly().scale(c));
        }
        SymmetricPolynomial::from_poly_unchecked(acc)
    }

    pub fn to_terms(&self) -> Vec<SchurTerm> {
        self.terms
            .iter()
            .map(|(nu, c)| SchurTerm {
                nu: nu.parts().to_vec(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_terms(vars: usize, terms: Vec<SchurTerm>) -> Result<Self> {
        let mut out = SchurExpansion::zero(vars);
        for t in terms {
            out.add_term(Partition::new(t.nu)?, t.coeff);
        }
        Ok(out)
    }
}

/// Expand a symmetric polynomial in the Schur basis by greedy elimination
/// of the lexicographically leading monomial.
///
/// The Schur-to-monomial transition is unitriangular, so the leading
/// exponent strictly decreases and the remainder reaches zero exactly
/// when the input is symmetric; otherwise the first non-partition leading
/// monomial is reported.
pub fn schur_expand(p: &SymmetricPolynomial) -> Result<SchurExpansion> {
    let vars = p.vars();
    let mut rest = p.poly().clone();
    let mut out = SchurExpansion::zero(vars);
    while let Some(expo) = rest.leading_exponent().cloned() {
        if expo.windows(2).any(|w| w[0] < w[1]) {
            let mut witness = MultiPoly::zero(vars);
            witness.add_term(expo.clone(), rest.coeff(&expo));
            return Err(Error::NotSymmetric {
                monomial: witness.display_with("x"),
            });
        }
        let parts: Vec<usize> = expo
            .iter()
            .take_while(|&&e| e > 0)
            .map(|&e| e as usize)
            .collect();
        let nu = Partition::new(parts)?;
        let coeff = rest.coeff(&expo);
        rest = rest.sub(&schur(&nu, vars).poly().scale(&coeff));
        out.add_term(nu, coeff);
    }
    Ok(out)
}
