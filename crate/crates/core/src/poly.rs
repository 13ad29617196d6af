//! Exact multivariate and univariate polynomials.
//!
//! [`MultiPoly`] is a sparse sum of monomials over [`Rat`], keyed by
//! exponent vectors in a `BTreeMap` so iteration and printing follow one
//! canonical order. [`UniPoly`] stores coefficients lowest degree first
//! and is used for minimal polynomials of exact matrices.

use std::collections::BTreeMap;
use std::fmt;

use crate::rat::Rat;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: every stored coefficient is nonzero and every exponent
/// vector has length `vars`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars], c);
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Rat::one())
    }

    /// The monomial `x_i` (zero-based variable index).
    pub fn var(vars: usize, i: usize) -> Self {
        assert!(i < vars);
        let mut expo = vec![0; vars];
        expo[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(expo, Rat::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, expo: &[u32]) -> Rat {
        self.terms.get(expo).cloned().unwrap_or_else(Rat::zero)
    }

    /// Add `c * x^expo`, dropping the entry if it cancels.
    pub fn add_term(&mut self, expo: Vec<u32>, c: Rat) {
        debug_assert_eq!(expo.len(), self.vars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(expo);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, other.vars);
        let mut out = MultiPoly::zero(self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let expo: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(expo, c1 * c2);
            }
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= &x.pow(k);
            }
            acc += &term;
        }
        acc
    }

    /// Total degree of the highest term, or 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Swap the variables `i` and `j` in every monomial.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut expo = e.clone();
            expo.swap(i, j);
            out.add_term(expo, c.clone());
        }
        out
    }

    /// Lexicographically largest exponent vector, if any.
    pub fn leading_exponent(&self) -> Option<&Vec<u32>> {
        self.terms.keys().next_back()
    }

    /// Render with a custom variable prefix, e.g. `y1^2*y2` for prefix `y`.
    pub fn display_with(&self, prefix: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in &self.terms {
            let mut piece = String::new();
            if c.is_one() {
                // keep bare "1" only for the constant term
            } else if (-c).is_one() {
                piece.push('-');
            } else {
                piece.push_str(&c.to_string());
            }
            let mut wrote_var = false;
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !piece.is_empty() && !piece.ends_with('-') {
                    piece.push('*');
                }
                piece.push_str(prefix);
                piece.push_str(&(i + 1).to_string());
                if k > 1 {
                    piece.push('^');
                    piece.push_str(&k.to_string());
                }
                wrote_var = true;
            }
            if !wrote_var && (c.is_one() || (-c).is_one()) {
                piece.push('1');
            }
            if out.is_empty() {
                out = piece;
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    /// The monic linear factor `u - root`.
    pub fn linear(root: &Rat) -> Self {
        UniPoly {
            coeffs: vec![-root, Rat::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial answers `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Rat::is_one)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Divide by `u - root`; returns the quotient only when the division
    /// is exact (remainder zero).
    pub fn div_exact_linear(&self, root: &Rat) -> Option<UniPoly> {
        if self.is_zero() {
            return None;
        }
        let mut quotient = vec![Rat::zero(); self.coeffs.len() - 1];
        let mut carry = Rat::zero();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let value = c + &(&carry * root);
            if k == 0 {
                if value.is_zero() {
                    return Some(UniPoly::from_coeffs(quotient));
                }
                return None;
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if k == 1 {
                    write!(f, "u")?;
                } else {
                    write!(f, "u^{k}")?;
                }
            }
        }
        Ok(())
    }
}
