//! Hook dimension formulas for the classical groups.
//!
//! Each report keeps the individual linear factors next to the final
//! value because the two-branch exponent `d(i,j)` is easy to get wrong;
//! the trace of the corresponding tensor idempotent cross-checks every
//! value elsewhere in the test suite.

use serde::{Deserialize, Serialize};

use crate::rat::Rat;
use crate::tensorrep::{Family, GroupKind};
use crate::young::{hook_product, Partition, SkewShape};
use crate::Result;

/// A dimension value together with its factorization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionReport {
    pub kind: GroupKind,
    pub shape: Partition,
    pub value: Rat,
    pub factors: Vec<Rat>,
}

/// Serialized form used by the command line.
#[derive(Serialize, Deserialize)]
pub struct DimensionReportJson {
    pub group: String,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub lambda: Vec<usize>,
    pub value: Rat,
    pub factors: Vec<Rat>,
}

impl DimensionReport {
    fn assemble(kind: GroupKind, shape: Partition, factors: Vec<Rat>) -> Self {
        let mut product = Rat::one();
        for f in &factors {
            product *= f;
        }
        let value = product
            .checked_div(&hook_product(&SkewShape::whole(shape.clone())))
            .expect("hook products are positive");
        DimensionReport {
            kind,
            shape,
            value,
            factors,
        }
    }

    pub fn to_json(&self) -> DimensionReportJson {
        let group = match self.kind.family() {
            Family::Orthogonal => "orthogonal",
            Family::Symplectic => "sp",
            Family::GeneralLinear => "gl",
        };
        DimensionReportJson {
            group: group.to_string(),
            big_n: self.kind.big_n(),
            lambda: self.shape.parts().to_vec(),
            value: self.value.clone(),
            factors: self.factors.clone(),
        }
    }
}

/// Factors `N + j - i` of the Robinson formula, `N` as a signed value.
fn gl_factors(shape: &Partition, big_n: i64) -> Vec<Rat> {
    shape
        .boxes()
        .map(|(r, c)| Rat::from_int(big_n + c as i64 - r as i64))
        .collect()
}

/// Factors `N - 1 + d(i,j)` of the orthogonal formula with
/// `d = lambda_i + lambda_j - i - j + 1` on and above the diagonal and
/// `d = -lambda'_i - lambda'_j + i + j - 1` below it (one-based).
fn orth_factors(shape: &Partition, big_n: i64) -> Vec<Rat> {
    let conj = shape.conjugate();
    shape
        .boxes()
        .map(|(r, c)| {
            let (i, j) = (r as i64 + 1, c as i64 + 1);
            let d = if i <= j {
                shape.part(r) as i64 + shape.part(c) as i64 - i - j + 1
            } else {
                -(conj.part(r) as i64) - (conj.part(c) as i64) + i + j - 1
            };
            Rat::from_int(big_n - 1 + d)
        })
        .collect()
}

/// Factors `N + 1 + d(i,j)` of the symplectic formula; the row branch now
/// sits strictly below the diagonal.
fn sp_factors(shape: &Partition, big_n: i64) -> Vec<Rat> {
    let conj = shape.conjugate();
    shape
        .boxes()
        .map(|(r, c)| {
            let (i, j) = (r as i64 + 1, c as i64 + 1);
            let d = if i > j {
                shape.part(r) as i64 + shape.part(c) as i64 - i - j + 1
            } else {
                -(conj.part(r) as i64) - (conj.part(c) as i64) + i + j - 1
            };
            Rat::from_int(big_n + 1 + d)
        })
        .collect()
}

/// Dimension of the irreducible `GL_N` representation labelled by a
/// partition with at most `N` rows.
pub fn dim_gl(shape: &Partition, big_n: usize) -> Result<DimensionReport> {
    let kind = GroupKind::general_linear(big_n)?;
    kind.check_shape(shape)?;
    Ok(DimensionReport::assemble(
        kind,
        shape.clone(),
        gl_factors(shape, big_n as i64),
    ))
}

/// Dimension of the irreducible `O_N` representation labelled by a
/// partition with at most `n` rows.
pub fn dim_orth(shape: &Partition, big_n: usize) -> Result<DimensionReport> {
    let kind = GroupKind::orthogonal(big_n)?;
    kind.check_shape(shape)?;
    Ok(DimensionReport::assemble(
        kind,
        shape.clone(),
        orth_factors(shape, big_n as i64),
    ))
}

/// Dimension of the irreducible `Sp_N` representation labelled by a
/// partition with at most `n` rows; `N` must be even.
///
/// Note the bound differs from the Brauer-label bound of
/// [`GroupKind::check_shape`]: representation labels are the conjugates
/// of idempotent shapes in the symplectic case.
pub fn dim_sp(shape: &Partition, big_n: usize) -> Result<DimensionReport> {
    let kind = GroupKind::symplectic(big_n)?;
    if shape.len() > kind.n() {
        return Err(crate::Error::ShapeBound {
            shape: shape.to_string(),
            bound: format!("at most n = {} rows", kind.n()),
            group: kind.to_string(),
        });
    }
    Ok(DimensionReport::assemble(
        kind,
        shape.clone(),
        sp_factors(shape, big_n as i64),
    ))
}

/// Dimension for any group kind; shape bounds are the kind's own.
pub fn dimension(shape: &Partition, kind: &GroupKind) -> Result<DimensionReport> {
    match kind.family() {
        Family::Orthogonal => dim_orth(shape, kind.big_n()),
        Family::Symplectic => dim_sp(shape, kind.big_n()),
        Family::GeneralLinear => dim_gl(shape, kind.big_n()),
    }
}

/// Dimension normalizing the central idempotent: the shape itself in the
/// orthogonal case, its conjugate in the symplectic case.
pub fn idempotent_normalizer(shape: &Partition, kind: &GroupKind) -> Result<Rat> {
    let report = match kind.family() {
        Family::Symplectic => dim_sp(&shape.conjugate(), kind.big_n())?,
        Family::Orthogonal => dim_orth(shape, kind.big_n())?,
        Family::GeneralLinear => dim_gl(shape, kind.big_n())?,
    };
    Ok(report.value)
}
