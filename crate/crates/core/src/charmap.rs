//! Characteristic maps: images of central idempotents as symmetric
//! polynomials in `y_1^2, ..., y_n^2`, computed two independent ways.
//!
//! The closed form sums double Schur values over sub-shapes weighted by
//! skew hook products. The brute-force route represents the normalized
//! central idempotent on the tensor power, traces it against the symbolic
//! diagonal Cartan element, divides by `m!` and expands in the Schur
//! basis. The two must agree exactly; the acceptance suite sweeps that
//! equality.
//!
//! The symmetric-group counterpart sends elements of the permutation
//! span to symmetric polynomials in `x_1, ..., x_N`; irreducible
//! characters land on single Schur polynomials, which pins the
//! normalization of everything else.

use serde::{Deserialize, Serialize};

use crate::brauer::BrauerElement;
use crate::groups::idempotent_normalizer;
use crate::par;
use crate::poly::MultiPoly;
use crate::rat::{factorial, Rat};
use crate::symfunc::{
    double_schur_eval, evaluation_point, schur_expand, ParamSequence, SchurExpansion, SchurTerm,
    SymmetricPolynomial,
};
use crate::tensorrep::{
    represent, trace_against_diagonal, DiagonalWeights, Family, GroupKind, IdempotentTower,
    TensorOperator, TraceValue,
};
use crate::young::{hook_product, partitions_of, standard_tableaux, Partition, SkewShape};
use crate::{Error, Result};

/// A normalized central idempotent: the tableau sum for `lambda` divided
/// by the dimension of the labelled irreducible (conjugate label in the
/// symplectic case).
#[derive(Clone, Debug)]
pub struct CentralIdempotentSpec {
    pub lambda: Partition,
    pub kind: GroupKind,
}

impl CentralIdempotentSpec {
    pub fn new(lambda: Partition, kind: GroupKind) -> Result<Self> {
        if kind.family() == Family::GeneralLinear {
            return Err(Error::Parse(
                "central idempotents are defined for the orthogonal and symplectic actions".into(),
            ));
        }
        kind.check_shape(&lambda)?;
        Ok(CentralIdempotentSpec { lambda, kind })
    }

    /// The normalizing dimension `D`.
    pub fn normalizer(&self) -> Result<Rat> {
        idempotent_normalizer(&self.lambda, &self.kind)
    }

    /// The operator image of the normalized central idempotent.
    pub fn build(&self, tower: &mut IdempotentTower) -> Result<TensorOperator> {
        debug_assert_eq!(tower.kind(), &self.kind);
        let tableaux = standard_tableaux(&self.lambda);
        let parts = tower.build(&tableaux)?;
        let mut sum = TensorOperator::zero(self.lambda.size(), self.kind.big_n());
        for part in &parts {
            sum = sum.add(part)?;
        }
        let d = self.normalizer()?;
        Ok(sum.scale(&d.inverse()?))
    }
}

/// The image of an idempotent under the characteristic map, stored as a
/// Schur expansion in formal variables standing for `y_1^2, ..., y_n^2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChImage {
    pub lambda: Partition,
    pub kind: GroupKind,
    pub terms: SchurExpansion,
}

/// Serialized form of a characteristic-map image.
#[derive(Serialize, Deserialize)]
pub struct ChImageJson {
    pub lambda: Vec<usize>,
    pub group: String,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub n: usize,
    pub terms: Vec<SchurTerm>,
}

impl ChImage {
    pub fn n(&self) -> usize {
        self.kind.n()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, k: &Rat) -> ChImage {
        ChImage {
            lambda: self.lambda.clone(),
            kind: self.kind,
            terms: self.terms.scale(k),
        }
    }

    /// The expansion as an explicit symmetric polynomial.
    pub fn polynomial(&self) -> SymmetricPolynomial {
        self.terms.reconstruct()
    }

    pub fn to_json(&self) -> ChImageJson {
        let group = match self.kind.family() {
            Family::Orthogonal => "orthogonal",
            Family::Symplectic => "symplectic",
            Family::GeneralLinear => "gl",
        };
        ChImageJson {
            lambda: self.lambda.parts().to_vec(),
            group: group.to_string(),
            big_n: self.kind.big_n(),
            n: self.kind.n(),
            terms: self.terms.to_terms(),
        }
    }

    pub fn from_json(json: ChImageJson) -> Result<ChImage> {
        let kind = match json.group.as_str() {
            "orthogonal" => GroupKind::orthogonal(json.big_n)?,
            "symplectic" | "sp" => GroupKind::symplectic(json.big_n)?,
            other => return Err(Error::Parse(format!("unknown group {other:?}"))),
        };
        Ok(ChImage {
            lambda: Partition::new(json.lambda)?,
            kind,
            terms: SchurExpansion::from_terms(json.n, json.terms)?,
        })
    }
}

/// The constant `C(nu)`: the invariant inner square of the Schur
/// polynomial in the `y_i^2`, given by
/// `prod over boxes of 2(n+j-i)(N-1+2(j-i+eps))`.
pub fn inner_square_constant(nu: &Partition, kind: &GroupKind) -> Result<Rat> {
    if kind.family() == Family::GeneralLinear {
        return Err(Error::Parse(
            "the inner square constant needs an orthogonal or symplectic kind".into(),
        ));
    }
    let n = kind.n();
    if nu.len() > n {
        return Err(Error::TooManyParts {
            length: nu.len(),
            vars: n,
        });
    }
    let eps = kind.epsilon()?;
    let big_n = kind.big_n() as i64;
    let mut acc = Rat::one();
    for (r, c) in nu.boxes() {
        let content = c as i64 - r as i64;
        let first = Rat::from_int(2 * (n as i64 + content));
        let second = Rat::from_int(big_n - 1 + 2 * content) + Rat::from_int(2) * eps.clone();
        acc *= &(first * second);
    }
    Ok(acc)
}

fn require_brauer_kind(kind: &GroupKind) -> Result<()> {
    if kind.family() == Family::GeneralLinear {
        return Err(Error::Parse(
            "characteristic-map images need an orthogonal or symplectic kind".into(),
        ));
    }
    Ok(())
}

/// Closed-form image of the normalized central idempotent for `lambda`.
///
/// Zero for odd `|lambda|`. For `|lambda| = 2l` the coefficient of
/// `s_nu` over `nu` of `l` is
/// `1/C(nu) * sum over sub-shapes mu of (-1)^|mu| s_nu(a_rho | a) / (H(mu) H(lambda/mu))`
/// with `rho = mu` (orthogonal) or `mu'` (symplectic). With `prune` set,
/// terms killed by the double-Schur vanishing property are skipped; the
/// result is identical either way.
pub fn ch_closed_form(lambda: &Partition, kind: &GroupKind, prune: bool) -> Result<ChImage> {
    require_brauer_kind(kind)?;
    kind.check_shape(lambda)?;
    let n = kind.n();
    let m = lambda.size();
    let mut image = ChImage {
        lambda: lambda.clone(),
        kind: *kind,
        terms: SchurExpansion::zero(n),
    };
    if m % 2 == 1 {
        return Ok(image);
    }
    let l = m / 2;
    let seq = ParamSequence::with_epsilon(kind.epsilon()?)?;
    let symplectic = kind.family() == Family::Symplectic;

    let candidates: Vec<Partition> = partitions_of(l, Some(n), None)
        .into_iter()
        .filter(|nu| {
            if !prune {
                return true;
            }
            // the inner sum vanishes unless nu fits inside some rho
            if symplectic {
                lambda.conjugate().contains(nu)
            } else {
                lambda.contains(nu)
            }
        })
        .collect();
    let subs = lambda.sub_partitions();
    let sign = |k: usize| {
        if k.is_multiple_of(2) {
            Rat::one()
        } else {
            Rat::from_int(-1)
        }
    };
    let coeffs = par::map(candidates, |nu| -> Result<(Partition, Rat)> {
        let mut inner = Rat::zero();
        for mu in &subs {
            let rho = if symplectic { mu.conjugate() } else { mu.clone() };
            if prune && !rho.contains(&nu) {
                continue;
            }
            let value = double_schur_eval(&nu, n, &seq, &evaluation_point(&rho, n, &seq)?);
            if value.is_zero() {
                continue;
            }
            let weight = hook_product(&SkewShape::whole(mu.clone()))
                * hook_product(&SkewShape::new(lambda.clone(), mu.clone())?);
            inner += &(sign(mu.size()) * value.checked_div(&weight)?);
        }
        let coeff = inner.checked_div(&inner_square_constant(&nu, kind)?)?;
        Ok((nu, coeff))
    });
    for result in coeffs {
        let (nu, coeff) = result?;
        image.terms.add_term(nu, coeff);
    }
    Ok(image)
}

/// Replace each variable squared by a fresh variable: every exponent must
/// be even, and the result has the same variable count with halved
/// exponents.
fn halve_even_exponents(poly: &MultiPoly) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(poly.vars());
    for (expo, coeff) in poly.terms() {
        if expo.iter().any(|&e| e % 2 != 0) {
            let mut witness = MultiPoly::zero(poly.vars());
            witness.add_term(expo.clone(), coeff.clone());
            return Err(Error::OddPower {
                monomial: witness.display_with("y"),
            });
        }
        out.add_term(expo.iter().map(|&e| e / 2).collect(), coeff.clone());
    }
    Ok(out)
}

/// Brute-force image of the normalized central idempotent: build the
/// operator, trace against the symbolic diagonal Cartan element, divide
/// by `m!`, substitute the squared variables and expand in the Schur
/// basis. Independent of [`ch_closed_form`] end to end.
pub fn ch_by_trace(lambda: &Partition, kind: &GroupKind, force: bool) -> Result<ChImage> {
    let mut tower = IdempotentTower::new(*kind, force);
    ch_by_trace_with(lambda, &mut tower)
}

/// Same as [`ch_by_trace`] but reusing a tower across calls.
pub fn ch_by_trace_with(lambda: &Partition, tower: &mut IdempotentTower) -> Result<ChImage> {
    let kind = *tower.kind();
    require_brauer_kind(&kind)?;
    let spec = CentralIdempotentSpec::new(lambda.clone(), kind)?;
    let phi = spec.build(tower)?;
    let m = lambda.size();
    let TraceValue::Symbolic(traced) =
        trace_against_diagonal(&phi, &DiagonalWeights::symbolic(kind))?
    else {
        unreachable!("symbolic weights trace to polynomials");
    };
    let scaled = traced.scale(&factorial(m).inverse()?);
    let in_squares = halve_even_exponents(&scaled)?;
    let terms = schur_expand(&SymmetricPolynomial::new(in_squares)?)?;
    Ok(ChImage {
        lambda: lambda.clone(),
        kind,
        terms,
    })
}

/// Closed-form image of the symmetrizer (`anti = false`, row shape) or
/// antisymmetrizer (`anti = true`, column shape) on `2l` strands.
///
/// These are images of the primitive idempotent itself, not of the
/// normalized central idempotent; they differ from [`ch_closed_form`] by
/// the dimension factor `D`.
pub fn symmetrizer_image(l: usize, kind: &GroupKind, anti: bool) -> Result<ChImage> {
    require_brauer_kind(kind)?;
    if l == 0 {
        return Err(Error::IndexOutOfRange { index: 0, bound: 0 });
    }
    let n = kind.n();
    let big_n = kind.big_n() as i64;
    let two_l = 2 * l;
    let lambda = if anti {
        Partition::new(vec![1; two_l])?
    } else {
        Partition::new(vec![two_l])?
    };
    kind.check_shape(&lambda)?;
    let (nu, coeff) = match (kind.family(), anti) {
        (Family::Orthogonal, false) => {
            // (N + 4l - 2) / ((2l)! (N + 2l - 2)) on the full sum h_l
            let num = Rat::from_int(big_n + 4 * l as i64 - 2);
            let den = factorial(two_l) * Rat::from_int(big_n + 2 * l as i64 - 2);
            (Partition::new(vec![l])?, num.checked_div(&den)?)
        }
        (Family::Orthogonal, true) => {
            if two_l > n {
                return Err(Error::ShapeBound {
                    shape: lambda.to_string(),
                    bound: format!("2l = {two_l} must not exceed n = {n}"),
                    group: kind.to_string(),
                });
            }
            let sign = if l.is_multiple_of(2) { 1 } else { -1 };
            (
                Partition::new(vec![1; l])?,
                Rat::from_int(sign).checked_div(&factorial(two_l))?,
            )
        }
        (Family::Symplectic, false) => {
            if two_l > n {
                return Err(Error::ShapeBound {
                    shape: lambda.to_string(),
                    bound: format!("2l = {two_l} must not exceed n = {n}"),
                    group: kind.to_string(),
                });
            }
            let sign = if l.is_multiple_of(2) { 1 } else { -1 };
            let num = Rat::from_int(sign * (n as i64 - 2 * l as i64 + 1));
            let den = factorial(two_l) * Rat::from_int(n as i64 - l as i64 + 1);
            (Partition::new(vec![1; l])?, num.checked_div(&den)?)
        }
        (Family::Symplectic, true) => (
            Partition::new(vec![l])?,
            Rat::one().checked_div(&factorial(two_l))?,
        ),
        (Family::GeneralLinear, _) => unreachable!("rejected above"),
    };
    let mut terms = SchurExpansion::zero(n);
    terms.add_term(nu, coeff);
    Ok(ChImage {
        lambda,
        kind: *kind,
        terms,
    })
}

/// Symbolic trace `tr A X_1 ... X_m` against the general-linear diagonal,
/// as a symmetric polynomial in `x_1, ..., x_N`.
pub fn gl_trace_symbolic(op: &TensorOperator) -> Result<SymmetricPolynomial> {
    let kind = GroupKind::general_linear(op.big_n())?;
    let TraceValue::Symbolic(p) = trace_against_diagonal(op, &DiagonalWeights::symbolic(kind))?
    else {
        unreachable!("symbolic weights trace to polynomials");
    };
    SymmetricPolynomial::new(p)
}

/// The symmetric-group characteristic map on an operator:
/// `(1/m!) tr A X_1 ... X_m`, Schur-expanded.
pub fn gl_characteristic_op(op: &TensorOperator) -> Result<SchurExpansion> {
    let traced = gl_trace_symbolic(op)?;
    let scaled = traced.poly().scale(&factorial(op.factors()).inverse()?);
    schur_expand(&SymmetricPolynomial::new(scaled)?)
}

/// The symmetric-group characteristic map on an element of the
/// permutation span.
pub fn gl_characteristic(
    e: &BrauerElement,
    big_n: usize,
    force: bool,
) -> Result<SchurExpansion> {
    let kind = GroupKind::general_linear(big_n)?;
    let op = represent(e, &kind, force)?;
    gl_characteristic_op(&op)
}

/// The operator image of the irreducible symmetric-group character
/// `chi_lambda = (m!/dim lambda) * sum of E_T`.
pub fn gl_character_operator(
    lambda: &Partition,
    big_n: usize,
    force: bool,
) -> Result<TensorOperator> {
    let kind = GroupKind::general_linear(big_n)?;
    kind.check_shape(lambda)?;
    let tableaux = standard_tableaux(lambda);
    let count = tableaux.len() as i64;
    let mut tower = IdempotentTower::new(kind, force);
    let parts = tower.build(&tableaux)?;
    let mut sum = TensorOperator::zero(lambda.size(), big_n);
    for part in &parts {
        sum = sum.add(part)?;
    }
    let scale = factorial(lambda.size()).checked_div(&Rat::from_int(count))?;
    Ok(sum.scale(&scale))
}
