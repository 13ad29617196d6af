//! The tensor representation of the Brauer algebra and symmetric group,
//! and the primitive idempotents built inside it.
//!
//! Operators live on the `N^m`-dimensional tensor power with row-major
//! base-`N` multi-indices (leftmost factor most significant). Transposition
//! diagrams act by index swaps; hook diagrams act by the rank-`N`
//! contraction built from the bilinear form with involution
//! `i -> N-i+1`, with signs in the symplectic case. A general diagram is
//! represented through a deterministic factorization into a permutation,
//! a chain of adjacent hooks and a second permutation.
//!
//! Primitive idempotents follow the Jucys-Murphy recursion: the fraction
//! `(u - c_m)/(u - x_m)` evaluated at `u = c_m` equals the spectral
//! projector onto the `c_m`-eigenspace of `x_m` on the image of the
//! previous idempotent, and that spectrum is computed exactly from the
//! minimal polynomial rather than assumed.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::brauer::{jm_element, BrauerDiagram, BrauerElement};
use crate::matrix::{minimal_polynomial_on_image, split_half_integer_roots, SparseMatrix};
use crate::par;
use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::young::{Partition, StandardTableau};
use crate::{Error, Result};

/// Largest tensor space dimension accepted without `force`.
pub const SPACE_GUARD: u128 = 1_000_000;

/// Which classical family acts.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Family {
    Orthogonal,
    Symplectic,
    GeneralLinear,
}

/// A classical group `O_N`, `Sp_N` or `GL_N` acting on tensor powers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GroupKind {
    family: Family,
    big_n: usize,
}

impl GroupKind {
    pub fn orthogonal(big_n: usize) -> Result<Self> {
        if big_n < 2 {
            return Err(Error::DegenerateGroup { n: big_n });
        }
        Ok(GroupKind {
            family: Family::Orthogonal,
            big_n,
        })
    }

    pub fn symplectic(big_n: usize) -> Result<Self> {
        if !big_n.is_multiple_of(2) {
            return Err(Error::OddSymplecticN { n: big_n });
        }
        if big_n < 2 {
            return Err(Error::DegenerateGroup { n: big_n });
        }
        Ok(GroupKind {
            family: Family::Symplectic,
            big_n,
        })
    }

    pub fn general_linear(big_n: usize) -> Result<Self> {
        if big_n < 1 {
            return Err(Error::DegenerateGroup { n: big_n });
        }
        Ok(GroupKind {
            family: Family::GeneralLinear,
            big_n,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Rank parameter `n = floor(N/2)`.
    pub fn n(&self) -> usize {
        self.big_n / 2
    }

    /// Brauer parameter: `N` orthogonal, `-N` symplectic, `1` for the
    /// symmetric-group action (contents then carry no shift).
    pub fn omega(&self) -> Rat {
        match self.family {
            Family::Orthogonal => Rat::from_int(self.big_n as i64),
            Family::Symplectic => Rat::from_int(-(self.big_n as i64)),
            Family::GeneralLinear => Rat::one(),
        }
    }

    /// Content shift `(omega - 1)/2`.
    pub fn content_shift(&self) -> Rat {
        (self.omega() - Rat::one()) * Rat::new(1, 2)
    }

    /// Sequence parameter: 0 for even orthogonal, 1/2 for odd orthogonal,
    /// 1 for symplectic. Not defined for the general linear family.
    pub fn epsilon(&self) -> Result<Rat> {
        match self.family {
            Family::Orthogonal if self.big_n.is_multiple_of(2) => Ok(Rat::zero()),
            Family::Orthogonal => Ok(Rat::new(1, 2)),
            Family::Symplectic => Ok(Rat::one()),
            Family::GeneralLinear => Err(Error::Parse(
                "the parameter sequence is defined for orthogonal and symplectic groups only"
                    .into(),
            )),
        }
    }

    /// Shape bound for labels of irreducible summands: at most `n` rows
    /// (orthogonal), row lengths at most `n` (symplectic), at most `N`
    /// rows (general linear).
    pub fn check_shape(&self, shape: &Partition) -> Result<()> {
        let ok = match self.family {
            Family::Orthogonal => shape.len() <= self.n(),
            Family::Symplectic => shape.part(0) <= self.n(),
            Family::GeneralLinear => shape.len() <= self.big_n,
        };
        if ok {
            Ok(())
        } else {
            let bound = match self.family {
                Family::Orthogonal => format!("at most n = {} rows", self.n()),
                Family::Symplectic => format!("first row at most n = {}", self.n()),
                Family::GeneralLinear => format!("at most N = {} rows", self.big_n),
            };
            Err(Error::ShapeBound {
                shape: shape.to_string(),
                bound,
                group: self.to_string(),
            })
        }
    }

    /// Dimension `N^m`, guarded against desk-scale blowups.
    pub fn space_dim(&self, m: usize, force: bool) -> Result<usize> {
        let mut dim: u128 = 1;
        for _ in 0..m {
            dim = dim.saturating_mul(self.big_n as u128);
            if dim > SPACE_GUARD && !force {
                return Err(Error::SpaceTooLarge { dim });
            }
        }
        Ok(dim as usize)
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.family {
            Family::Orthogonal => "O",
            Family::Symplectic => "Sp",
            Family::GeneralLinear => "GL",
        };
        write!(f, "{}_{}", name, self.big_n)
    }
}

/// Exact operator on the `m`-fold tensor power of `C^N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorOperator {
    m: usize,
    big_n: usize,
    matrix: SparseMatrix<Rat>,
}

/// Serialized form: sparse (row, col, value) triples in sorted order,
/// multi-indices encoded row-major base `N`.
#[derive(Serialize, Deserialize)]
pub struct TensorOperatorJson {
    pub m: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    pub entries: Vec<(usize, usize, Rat)>,
}

impl TensorOperator {
    pub fn new(m: usize, big_n: usize, matrix: SparseMatrix<Rat>) -> Self {
        debug_assert_eq!(matrix.dim(), big_n.pow(m as u32));
        TensorOperator { m, big_n, matrix }
    }

    pub fn identity(m: usize, big_n: usize) -> Self {
        TensorOperator::new(m, big_n, SparseMatrix::identity(big_n.pow(m as u32)))
    }

    pub fn zero(m: usize, big_n: usize) -> Self {
        TensorOperator::new(m, big_n, SparseMatrix::zero(big_n.pow(m as u32)))
    }

    pub fn factors(&self) -> usize {
        self.m
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn matrix(&self) -> &SparseMatrix<Rat> {
        &self.matrix
    }

    pub fn trace(&self) -> Rat {
        self.matrix.trace()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::new(self.m, self.big_n, self.matrix.add(&other.matrix)?))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::new(self.m, self.big_n, self.matrix.sub(&other.matrix)?))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.m, self.big_n, self.matrix.scale(k))
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self::new(
            self.m,
            self.big_n,
            self.matrix.matmul(&other.matrix)?,
        ))
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }

    /// Tensor an identity factor on the right: level `m` to `m+1`.
    pub fn extend_by_identity(&self) -> Self {
        let n = self.big_n;
        let mut out = SparseMatrix::zero(self.matrix.dim() * n);
        for (r, c, v) in self.matrix.entries() {
            for a in 0..n {
                out.set(r * n + a, c * n + a, v.clone());
            }
        }
        TensorOperator::new(self.m + 1, n, out)
    }

    /// Partial trace over the given slot (one-based).
    pub fn partial_trace(&self, slot: usize) -> Result<TensorOperator> {
        if !(1 <= slot && slot <= self.m) {
            return Err(Error::IndexOutOfRange {
                index: slot,
                bound: self.m,
            });
        }
        let n = self.big_n;
        let hi = n.pow((self.m - slot) as u32); // place value of the slot digit
        let mut out = SparseMatrix::zero(self.matrix.dim() / n);
        for (r, c, v) in self.matrix.entries() {
            let (r_digit, r_rest) = strip_digit(r, hi, n);
            let (c_digit, c_rest) = strip_digit(c, hi, n);
            if r_digit == c_digit {
                out.add_to(r_rest, c_rest, v);
            }
        }
        Ok(TensorOperator::new(self.m - 1, n, out))
    }

    pub fn to_json(&self) -> TensorOperatorJson {
        TensorOperatorJson {
            m: self.m,
            big_n: self.big_n,
            entries: self
                .matrix
                .entries()
                .map(|(r, c, v)| (r, c, v.clone()))
                .collect(),
        }
    }

    pub fn from_json(json: TensorOperatorJson) -> Result<Self> {
        let dim = json.big_n.pow(json.m as u32);
        let mut matrix = SparseMatrix::zero(dim);
        for (r, c, v) in json.entries {
            if r >= dim || c >= dim {
                return Err(Error::IndexOutOfRange {
                    index: r.max(c),
                    bound: dim,
                });
            }
            matrix.add_to(r, c, &v);
        }
        Ok(TensorOperator::new(json.m, json.big_n, matrix))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.big_n != other.big_n {
            return Err(Error::DimensionMismatch {
                left: self.matrix.dim(),
                right: other.matrix.dim(),
            });
        }
        Ok(())
    }
}

/// Remove the digit with place value `hi` from a multi-index, returning
/// the digit and the packed remainder.
fn strip_digit(index: usize, hi: usize, n: usize) -> (usize, usize) {
    let low = index % hi;
    let digit = (index / hi) % n;
    let high = index / (hi * n);
    (digit, high * hi + low)
}

/// Digits of a multi-index, most significant (slot 1) first.
pub fn decode_index(index: usize, m: usize, n: usize) -> Vec<usize> {
    let mut digits = vec![0; m];
    let mut rest = index;
    for slot in (0..m).rev() {
        digits[slot] = rest % n;
        rest /= n;
    }
    digits
}

/// Inverse of [`decode_index`].
pub fn encode_index(digits: &[usize], n: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

/// Zero-based form involution `d -> N-1-d` (paper labels `i -> N-i+1`).
fn involute(d: usize, n: usize) -> usize {
    n - 1 - d
}

/// Form sign for zero-based labels: +1 on the first half.
fn eps_sign(d: usize, big_n: usize) -> i64 {
    if d < big_n / 2 {
        1
    } else {
        -1
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut sign = 1;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Matrix of a permutation diagram: top column `a` joined to bottom
/// column `perm[a-1]`; carries `sign(perm)` in the symplectic case.
fn permutation_op(kind: &GroupKind, perm: &[usize], force: bool) -> Result<SparseMatrix<Rat>> {
    let m = perm.len();
    let n = kind.big_n;
    let dim = kind.space_dim(m, force)?;
    let value = match kind.family {
        Family::Symplectic => Rat::from_int(permutation_sign(perm)),
        _ => Rat::one(),
    };
    let mut out = SparseMatrix::zero(dim);
    for col in 0..dim {
        let j = decode_index(col, m, n);
        let mut i = vec![0; m];
        for a in 0..m {
            i[a] = j[perm[a] - 1];
        }
        out.set(encode_index(&i, n), col, value.clone());
    }
    Ok(out)
}

/// Matrix of the hook generator on columns `(a, b)`, one-based: the
/// contraction built from the bilinear form, including the symplectic
/// overall sign.
fn contraction_op(
    kind: &GroupKind,
    a: usize,
    b: usize,
    m: usize,
    force: bool,
) -> Result<SparseMatrix<Rat>> {
    if kind.family == Family::GeneralLinear {
        return Err(Error::ContractionUnderGl);
    }
    let n = kind.big_n;
    let dim = kind.space_dim(m, force)?;
    let symplectic = kind.family == Family::Symplectic;
    let mut out = SparseMatrix::zero(dim);
    let others: Vec<usize> = (0..m).filter(|&s| s != a - 1 && s != b - 1).collect();
    let rest_dim = n.pow(others.len() as u32);
    for rest in 0..rest_dim {
        let rest_digits = decode_index(rest, others.len(), n);
        let mut row_digits = vec![0usize; m];
        let mut col_digits = vec![0usize; m];
        for (k, &slot) in others.iter().enumerate() {
            row_digits[slot] = rest_digits[k];
            col_digits[slot] = rest_digits[k];
        }
        for i in 0..n {
            row_digits[a - 1] = i;
            row_digits[b - 1] = involute(i, n);
            let row = encode_index(&row_digits, n);
            for j in 0..n {
                col_digits[a - 1] = j;
                col_digits[b - 1] = involute(j, n);
                let col = encode_index(&col_digits, n);
                let value = if symplectic {
                    // eps_i eps_j entry and the overall minus sign
                    Rat::from_int(-eps_sign(i, n) * eps_sign(j, n))
                } else {
                    Rat::one()
                };
                out.set(row, col, value);
            }
        }
    }
    Ok(out)
}

/// Deterministic factorization of a diagram as
/// `perm_top * (adjacent hooks on columns 1..2f) * perm_bottom`.
fn factorize(d: &BrauerDiagram) -> (Vec<usize>, usize, Vec<usize>) {
    let m = d.size();
    let mut top_pairs = vec![];
    let mut bottom_pairs = vec![];
    let mut through = vec![];
    for &(u, v) in d.edges() {
        if v < m {
            top_pairs.push((u + 1, v + 1));
        } else if u >= m {
            bottom_pairs.push((u - m + 1, v - m + 1));
        } else {
            through.push((u + 1, v - m + 1));
        }
    }
    let f = top_pairs.len();
    let mut p = vec![0usize; m];
    let mut q = vec![0usize; m];
    for (idx, &(t1, t2)) in top_pairs.iter().enumerate() {
        p[t1 - 1] = 2 * idx + 1;
        p[t2 - 1] = 2 * idx + 2;
    }
    for (idx, &(b1, b2)) in bottom_pairs.iter().enumerate() {
        q[2 * idx] = b1;
        q[2 * idx + 1] = b2;
    }
    for (idx, &(t, b)) in through.iter().enumerate() {
        p[t - 1] = 2 * f + idx + 1;
        q[2 * f + idx] = b;
    }
    debug_assert!(factorization_reassembles(d, &p, f, &q));
    (p, f, q)
}

#[allow(unused)]
fn factorization_reassembles(d: &BrauerDiagram, p: &[usize], f: usize, q: &[usize]) -> bool {
    let m = d.size();
    let mut mid = BrauerDiagram::identity(m);
    for i in 0..f {
        let hook = BrauerDiagram::contraction(2 * i + 1, 2 * i + 2, m).expect("valid columns");
        let (next, loops) = mid.stack(&hook).expect("same size");
        if loops != 0 {
            return false;
        }
        mid = next;
    }
    let top = BrauerDiagram::permutation(p).expect("valid permutation");
    let bottom = BrauerDiagram::permutation(q).expect("valid permutation");
    let (step, loops1) = top.stack(&mid).expect("same size");
    let (rebuilt, loops2) = step.stack(&bottom).expect("same size");
    loops1 == 0 && loops2 == 0 && &rebuilt == d
}

/// Matrix of a single diagram under the group's tensor action.
fn diagram_op(kind: &GroupKind, d: &BrauerDiagram, force: bool) -> Result<SparseMatrix<Rat>> {
    if let Some(perm) = d.as_permutation() {
        return permutation_op(kind, &perm, force);
    }
    if kind.family == Family::GeneralLinear {
        return Err(Error::ContractionUnderGl);
    }
    let m = d.size();
    let (p, f, q) = factorize(d);
    let mut acc = permutation_op(kind, &p, force)?;
    for i in 0..f {
        let hook = contraction_op(kind, 2 * i + 1, 2 * i + 2, m, force)?;
        acc = acc.matmul(&hook)?;
    }
    acc = acc.matmul(&permutation_op(kind, &q, force)?)?;
    Ok(acc)
}

/// Represent a Brauer element as a tensor operator.
///
/// Orthogonal and symplectic elements must carry the matching Brauer
/// parameter (`N` and `-N`); the symmetric-group action rejects hook
/// diagrams outright.
pub fn represent(e: &BrauerElement, kind: &GroupKind, force: bool) -> Result<TensorOperator> {
    match kind.family {
        Family::GeneralLinear => {}
        _ => {
            if e.omega() != &kind.omega() {
                return Err(Error::OmegaMismatch {
                    element: e.omega().to_string(),
                    expected: kind.omega().to_string(),
                });
            }
        }
    }
    let m = e.size();
    let dim = kind.space_dim(m, force)?;
    let mut acc = SparseMatrix::zero(dim);
    for (d, c) in e.terms() {
        let op = diagram_op(kind, d, force)?;
        for (r, col, v) in op.entries() {
            acc.add_to(r, col, &(v * c));
        }
    }
    Ok(TensorOperator::new(m, kind.big_n, acc))
}

/// Matrix of the Jucys-Murphy element `x_b` on `m` tensor factors; the
/// symmetric-group version is the plain transposition sum.
pub fn jm_operator(kind: &GroupKind, b: usize, m: usize, force: bool) -> Result<TensorOperator> {
    match kind.family {
        Family::GeneralLinear => {
            if !(1 <= b && b <= m) {
                return Err(Error::IndexOutOfRange { index: b, bound: m });
            }
            let dim = kind.space_dim(m, force)?;
            let mut acc = SparseMatrix::zero(dim);
            for a in 1..b {
                let perm: Vec<usize> = (1..=m)
                    .map(|c| {
                        if c == a {
                            b
                        } else if c == b {
                            a
                        } else {
                            c
                        }
                    })
                    .collect();
                let op = permutation_op(kind, &perm, force)?;
                for (r, c, v) in op.entries() {
                    acc.add_to(r, c, v);
                }
            }
            Ok(TensorOperator::new(m, kind.big_n, acc))
        }
        _ => represent(&jm_element(b, m, &kind.omega())?, kind, force),
    }
}

/// A growth chain of box positions, the prefix key of the tower cache.
type BoxChain = Vec<(usize, usize)>;

/// Builder for primitive idempotents, sharing work across tableaux with a
/// common growth chain.
pub struct IdempotentTower {
    kind: GroupKind,
    force: bool,
    cache: HashMap<BoxChain, Arc<TensorOperator>>,
}

impl IdempotentTower {
    pub fn new(kind: GroupKind, force: bool) -> Self {
        IdempotentTower {
            kind,
            force,
            cache: HashMap::new(),
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// Idempotents for all given tableaux, built level by level so that
    /// shared chain prefixes are computed once. Prefixes within a level
    /// are independent and run in parallel.
    pub fn build(&mut self, tableaux: &[StandardTableau]) -> Result<Vec<Arc<TensorOperator>>> {
        let mut max_level = 0;
        for t in tableaux {
            self.kind.check_shape(t.shape())?;
            max_level = max_level.max(t.size());
        }
        if max_level > 0 {
            self.kind.space_dim(max_level, self.force)?;
        }
        if tableaux.iter().any(|t| t.size() == 0) {
            // empty diagram: the scalar identity on the 0-fold power
            self.cache
                .entry(vec![])
                .or_insert_with(|| Arc::new(TensorOperator::identity(0, self.kind.big_n)));
        }
        for level in 1..=max_level {
            let mut wanted: Vec<BoxChain> = tableaux
                .iter()
                .filter(|t| t.size() >= level)
                .map(|t| t.boxes()[..level].to_vec())
                .collect();
            wanted.sort();
            wanted.dedup();
            wanted.retain(|chain| !self.cache.contains_key(chain));
            if wanted.is_empty() {
                continue;
            }
            if level == 1 {
                let id = Arc::new(TensorOperator::identity(1, self.kind.big_n));
                for chain in wanted {
                    self.cache.insert(chain, id.clone());
                }
                continue;
            }
            let x_op = jm_operator(&self.kind, level, level, self.force)?;
            let shift = self.kind.content_shift();
            let bound = shift.abs() + Rat::from_int(level as i64);
            let jobs: Vec<(BoxChain, Arc<TensorOperator>)> = wanted
                .into_iter()
                .map(|chain| {
                    let parent = self.cache[&chain[..level - 1]].clone();
                    (chain, parent)
                })
                .collect();
            let results = par::map(jobs, |(chain, parent)| {
                let (r, c) = chain[level - 1];
                let content = &shift + &Rat::from_int(c as i64 - r as i64);
                project_next(&parent, &x_op, &content, &bound).map(|op| (chain, Arc::new(op)))
            });
            for result in results {
                let (chain, op) = result?;
                self.cache.insert(chain, op);
            }
        }
        Ok(tableaux
            .iter()
            .map(|t| self.cache[t.boxes()].clone())
            .collect())
    }

    /// Idempotent of a single standard tableau.
    pub fn idempotent(&mut self, t: &StandardTableau) -> Result<Arc<TensorOperator>> {
        Ok(self
            .build(std::slice::from_ref(t))?
            .pop()
            .expect("one tableau"))
    }
}

/// One step of the idempotent recursion: extend the parent idempotent by
/// an identity factor and project onto the `content`-eigenspace of the
/// Jucys-Murphy operator on its image.
fn project_next(
    parent: &TensorOperator,
    x_op: &TensorOperator,
    content: &Rat,
    bound: &Rat,
) -> Result<TensorOperator> {
    let extended = parent.extend_by_identity();
    let min_poly = minimal_polynomial_on_image(x_op.matrix(), extended.matrix());
    let spectrum = split_half_integer_roots(&min_poly, bound)?;
    if let Some((value, _)) = spectrum.iter().find(|(_, mult)| *mult > 1) {
        return Err(Error::RepeatedEigenvalue {
            value: value.to_string(),
        });
    }
    if !spectrum.iter().any(|(root, _)| root == content) {
        return Err(Error::SpectrumMissingContent {
            content: content.to_string(),
            spectrum: format!(
                "{{{}}}",
                spectrum
                    .iter()
                    .map(|(r, _)| r.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        });
    }
    let mut acc = extended;
    for (root, _) in &spectrum {
        if root == content {
            continue;
        }
        // acc <- acc * (X - root) / (content - root)
        let scale = (content - root).inverse().expect("distinct roots");
        acc = acc.compose(x_op)?.sub(&acc.scale(root))?.scale(&scale);
    }
    Ok(acc)
}

/// Primitive idempotent of one standard tableau; use [`IdempotentTower`]
/// to amortize over many tableaux.
pub fn primitive_idempotent(
    t: &StandardTableau,
    kind: &GroupKind,
    force: bool,
) -> Result<TensorOperator> {
    let arc = IdempotentTower::new(*kind, force).idempotent(t)?;
    Ok(Arc::try_unwrap(arc).unwrap_or_else(|arc| (*arc).clone()))
}

/// Diagonal weights paired against operators: the symbolic Cartan element
/// (`y_i`, a middle zero for odd `N`, `-y_i` mirrored; plain `x_i` for
/// the general linear group) or a concrete diagonal group element
/// (`z_i`, a middle one, inverses mirrored).
#[derive(Clone, Debug)]
pub struct DiagonalWeights {
    kind: GroupKind,
    point: Option<Vec<Rat>>,
}

impl DiagonalWeights {
    pub fn symbolic(kind: GroupKind) -> Self {
        DiagonalWeights { kind, point: None }
    }

    /// Concrete diagonal group element from `z_1..z_n` (all nonzero), or
    /// the `N` diagonal entries themselves for the general linear group.
    pub fn group_point(kind: GroupKind, z: Vec<Rat>) -> Result<Self> {
        let expected = match kind.family {
            Family::GeneralLinear => kind.big_n,
            _ => kind.n(),
        };
        if z.len() != expected {
            return Err(Error::DimensionMismatch {
                left: z.len(),
                right: expected,
            });
        }
        if z.iter().any(Rat::is_zero) {
            return Err(Error::DivisionByZero);
        }
        Ok(DiagonalWeights {
            kind,
            point: Some(z),
        })
    }

    /// The identity group element.
    pub fn identity_point(kind: GroupKind) -> Self {
        let len = match kind.family {
            Family::GeneralLinear => kind.big_n,
            _ => kind.n(),
        };
        DiagonalWeights {
            kind,
            point: Some(vec![Rat::one(); len]),
        }
    }

    /// Number of symbolic variables.
    pub fn vars(&self) -> usize {
        match self.kind.family {
            Family::GeneralLinear => self.kind.big_n,
            _ => self.kind.n(),
        }
    }

    /// Weight of a basis label as (variable, negate) in symbolic mode;
    /// `None` is the zero middle weight.
    fn symbolic_weight(&self, d: usize) -> Option<(usize, bool)> {
        let big_n = self.kind.big_n;
        let n = self.kind.n();
        match self.kind.family {
            Family::GeneralLinear => Some((d, false)),
            _ => {
                if d < n {
                    Some((d, false))
                } else if big_n % 2 == 1 && d == n {
                    None
                } else {
                    Some((involute(d, big_n), true))
                }
            }
        }
    }

    /// Weight of a basis label in concrete mode.
    fn point_weight(&self, d: usize) -> Result<Rat> {
        let z = self.point.as_ref().expect("concrete weights");
        let big_n = self.kind.big_n;
        let n = self.kind.n();
        match self.kind.family {
            Family::GeneralLinear => Ok(z[d].clone()),
            _ => {
                if d < n {
                    Ok(z[d].clone())
                } else if big_n % 2 == 1 && d == n {
                    Ok(Rat::one())
                } else {
                    z[involute(d, big_n)].inverse()
                }
            }
        }
    }
}

/// Result of tracing an operator against diagonal weights.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TraceValue {
    Symbolic(MultiPoly),
    Concrete(Rat),
}

/// `tr A W_1 ... W_m` for diagonal `W`: only the diagonal of `A` enters.
pub fn trace_against_diagonal(
    op: &TensorOperator,
    weights: &DiagonalWeights,
) -> Result<TraceValue> {
    if weights.kind.big_n != op.big_n() {
        return Err(Error::DimensionMismatch {
            left: weights.kind.big_n,
            right: op.big_n(),
        });
    }
    let m = op.factors();
    let n = op.big_n();
    match &weights.point {
        None => {
            let vars = weights.vars();
            let mut acc = MultiPoly::zero(vars);
            'outer: for (r, c, v) in op.matrix().entries() {
                if r != c {
                    continue;
                }
                let digits = decode_index(r, m, n);
                let mut expo = vec![0u32; vars];
                let mut negate = false;
                for &d in &digits {
                    match weights.symbolic_weight(d) {
                        None => continue 'outer,
                        Some((var, neg)) => {
                            expo[var] += 1;
                            negate ^= neg;
                        }
                    }
                }
                let coeff = if negate { -v } else { v.clone() };
                acc.add_term(expo, coeff);
            }
            Ok(TraceValue::Symbolic(acc))
        }
        Some(_) => {
            let mut acc = Rat::zero();
            for (r, c, v) in op.matrix().entries() {
                if r != c {
                    continue;
                }
                let mut term = v.clone();
                for &d in &decode_index(r, m, n) {
                    term *= &weights.point_weight(d)?;
                }
                acc += &term;
            }
            Ok(TraceValue::Concrete(acc))
        }
    }
}

/// Slot embedding `X_a = 1 x ... x X x ... x 1` of a one-factor operator.
pub fn slot_operator(
    x: &SparseMatrix<Rat>,
    slot: usize,
    m: usize,
    big_n: usize,
) -> Result<TensorOperator> {
    if !(1 <= slot && slot <= m) {
        return Err(Error::IndexOutOfRange {
            index: slot,
            bound: m,
        });
    }
    if x.dim() != big_n {
        return Err(Error::DimensionMismatch {
            left: x.dim(),
            right: big_n,
        });
    }
    let hi = big_n.pow((m - slot) as u32);
    let rest = big_n.pow((m - 1) as u32);
    let mut out = SparseMatrix::zero(big_n.pow(m as u32));
    for packed in 0..rest {
        let low = packed % hi;
        let high = packed / hi;
        for (r, c, v) in x.entries() {
            out.set(
                (high * big_n + r) * hi + low,
                (high * big_n + c) * hi + low,
                v.clone(),
            );
        }
    }
    Ok(TensorOperator::new(m, big_n, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{basis, diagram_multiply};
    use crate::young::standard_tableaux;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn orth(n: usize) -> GroupKind {
        GroupKind::orthogonal(n).unwrap()
    }

    fn sp(n: usize) -> GroupKind {
        GroupKind::symplectic(n).unwrap()
    }

    fn gl(n: usize) -> GroupKind {
        GroupKind::general_linear(n).unwrap()
    }

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Direct construction of the swap operator, used as an oracle.
    fn swap_oracle(big_n: usize) -> SparseMatrix<Rat> {
        let mut p = SparseMatrix::zero(big_n * big_n);
        for i in 0..big_n {
            for j in 0..big_n {
                p.set(i * big_n + j, j * big_n + i, Rat::one());
            }
        }
        p
    }

    /// Direct construction of the two-factor contraction, used as an
    /// oracle against the factorized path.
    fn hook_oracle(kind: &GroupKind) -> SparseMatrix<Rat> {
        let n = kind.big_n();
        let mut q = SparseMatrix::zero(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = match kind.family() {
                    Family::Symplectic => Rat::from_int(eps_sign(i, n) * eps_sign(j, n)),
                    _ => Rat::one(),
                };
                q.set(i * n + involute(i, n), j * n + involute(j, n), v);
            }
        }
        q
    }

    fn element(d: BrauerDiagram, kind: &GroupKind) -> BrauerElement {
        BrauerElement::from_diagram(d, kind.omega())
    }

    #[test]
    fn transposition_is_the_swap() {
        let kind = orth(2);
        let e = element(BrauerDiagram::transposition(1, 2, 2).unwrap(), &kind);
        let op = represent(&e, &kind, false).unwrap();
        assert_eq!(op.matrix(), &swap_oracle(2));

        let kind = sp(2);
        let e = element(BrauerDiagram::transposition(1, 2, 2).unwrap(), &kind);
        let op = represent(&e, &kind, false).unwrap();
        assert_eq!(op.matrix(), &swap_oracle(2).scale(&Rat::from_int(-1)));
    }

    #[test]
    fn hook_images_match_the_oracle() {
        for kind in [orth(3), orth(4), sp(4)] {
            let e = element(BrauerDiagram::contraction(1, 2, 2).unwrap(), &kind);
            let op = represent(&e, &kind, false).unwrap();
            let sign = match kind.family() {
                Family::Symplectic => Rat::from_int(-1),
                _ => Rat::one(),
            };
            assert_eq!(op.matrix(), &hook_oracle(&kind).scale(&sign));
        }
    }

    #[test]
    fn hook_trace_is_big_n() {
        // full trace of the represented hook at m = 2 equals N
        let kind = orth(3);
        let e = element(BrauerDiagram::contraction(1, 2, 2).unwrap(), &kind);
        let op = represent(&e, &kind, false).unwrap();
        assert_eq!(op.trace(), Rat::from_int(3));
    }

    #[test]
    fn contraction_matrix_squares_to_big_n_multiple() {
        // Q * Q = N * Q, checked by the raw entrywise product at N = 3
        let q = hook_oracle(&orth(3));
        assert_eq!(q.matmul(&q).unwrap(), q.scale(&Rat::from_int(3)));
    }

    #[test]
    fn partial_traces_of_generators() {
        for kind in [orth(3), sp(4)] {
            let n = kind.big_n();
            let id1 = TensorOperator::identity(1, n);
            let sign = match kind.family() {
                Family::Symplectic => Rat::from_int(-1),
                _ => Rat::one(),
            };
            // tr_a(P_ab) = 1 and tr_a(Q_ab) = 1 before the action signs
            let s_el = element(BrauerDiagram::transposition(1, 2, 2).unwrap(), &kind);
            let p_op = represent(&s_el, &kind, false).unwrap().scale(&sign);
            assert_eq!(p_op.partial_trace(1).unwrap(), id1);
            assert_eq!(p_op.partial_trace(2).unwrap(), id1);

            let e_el = element(BrauerDiagram::contraction(1, 2, 2).unwrap(), &kind);
            let q_op = represent(&e_el, &kind, false).unwrap().scale(&sign);
            assert_eq!(q_op.partial_trace(1).unwrap(), id1);
            assert_eq!(q_op.partial_trace(2).unwrap(), id1);

            let id3 = TensorOperator::identity(3, n);
            assert_eq!(
                id3.partial_trace(3).unwrap(),
                TensorOperator::identity(2, n).scale(&Rat::from_int(n as i64))
            );
        }
    }

    #[test]
    fn contraction_sandwich_reads_the_trace() {
        // Q_ab X_a Q_ab = tr(X) Q_ab for any single-factor X
        let kind = orth(3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut x = SparseMatrix::zero(3);
        for r in 0..3 {
            for c in 0..3 {
                x.set(r, c, Rat::from_int(rng.gen_range(-4..=4)));
            }
        }
        let q = represent(
            &element(BrauerDiagram::contraction(1, 2, 2).unwrap(), &kind),
            &kind,
            false,
        )
        .unwrap();
        let x1 = slot_operator(&x, 1, 2, 3).unwrap();
        let lhs = q.compose(&x1).unwrap().compose(&q).unwrap();
        let trace: Rat = (0..3)
            .map(|i| x.get(i, i).cloned().unwrap_or_else(Rat::zero))
            .sum();
        assert_eq!(lhs, q.scale(&trace));
    }

    #[test]
    fn gl_rejects_hooks() {
        let kind = gl(3);
        let e = BrauerElement::from_diagram(
            BrauerDiagram::contraction(1, 2, 2).unwrap(),
            Rat::one(),
        );
        assert!(matches!(
            represent(&e, &kind, false),
            Err(Error::ContractionUnderGl)
        ));
    }

    #[test]
    fn omega_mismatch_is_rejected() {
        let kind = orth(3);
        let e = BrauerElement::identity(2, Rat::from_int(5));
        assert!(matches!(
            represent(&e, &kind, false),
            Err(Error::OmegaMismatch { .. })
        ));
    }

    #[test]
    fn representation_is_multiplicative_on_sampled_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for kind in [orth(3), sp(4), gl(3)] {
            for m in 2..=3 {
                let pool: Vec<BrauerDiagram> = match kind.family() {
                    Family::GeneralLinear => basis(m)
                        .into_iter()
                        .filter(|d| d.as_permutation().is_some())
                        .collect(),
                    _ => basis(m),
                };
                for _ in 0..6 {
                    let d1 = pool.choose(&mut rng).unwrap().clone();
                    let d2 = pool.choose(&mut rng).unwrap().clone();
                    let prod = diagram_multiply(&d1, &d2, &kind.omega()).unwrap();
                    let lhs = represent(&prod, &kind, false).unwrap();
                    let rhs = represent(&element(d1, &kind), &kind, false)
                        .unwrap()
                        .compose(&represent(&element(d2, &kind), &kind, false).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs, "kind {kind} m {m}");
                }
            }
        }
    }

    #[test]
    fn jm_spectrum_on_two_factors() {
        // x_2 on (C^3)^(x2), orthogonal: eigenvalues 2, 0, -1
        let kind = orth(3);
        let x = jm_operator(&kind, 2, 2, false).unwrap();
        let seeds = SparseMatrix::identity(9);
        let p = minimal_polynomial_on_image(x.matrix(), &seeds);
        let roots = split_half_integer_roots(&p, &Rat::from_int(3)).unwrap();
        let got: Vec<Rat> = roots.iter().map(|(r, _)| r.clone()).collect();
        assert_eq!(got, vec![Rat::from_int(-1), Rat::zero(), Rat::from_int(2)]);
    }

    #[test]
    fn base_idempotent_is_identity() {
        for kind in [orth(4), sp(4), gl(2)] {
            let t = &standard_tableaux(&shape(&[1]))[0];
            let e = primitive_idempotent(t, &kind, false).unwrap();
            assert_eq!(e, TensorOperator::identity(1, kind.big_n()));

            // the empty diagram is valid everywhere and gives the scalar
            let empty = &standard_tableaux(&Partition::empty())[0];
            let e = primitive_idempotent(empty, &kind, false).unwrap();
            assert_eq!(e, TensorOperator::identity(0, kind.big_n()));
            assert_eq!(e.trace(), Rat::one());
        }
    }

    #[test]
    fn orthogonal_row_and_column_idempotents() {
        for big_n in [3usize, 4, 6] {
            let kind = orth(big_n);
            let n_rat = Rat::from_int(big_n as i64);
            let p_el = element(BrauerDiagram::transposition(1, 2, 2).unwrap(), &kind);
            let q_el = element(BrauerDiagram::contraction(1, 2, 2).unwrap(), &kind);
            let p = represent(&p_el, &kind, false).unwrap();
            let q = represent(&q_el, &kind, false).unwrap();
            let id = TensorOperator::identity(2, big_n);

            // column (1,1): the plain antisymmetrizer (1 - P)/2
            if kind.n() >= 2 {
                let t = &standard_tableaux(&shape(&[1, 1]))[0];
                let e = primitive_idempotent(t, &kind, false).unwrap();
                let expected = id.sub(&p).unwrap().scale(&Rat::new(1, 2));
                assert_eq!(e, expected);
            }

            // row (2): (1 + P)/2 - Q/N
            let t = &standard_tableaux(&shape(&[2]))[0];
            let e = primitive_idempotent(t, &kind, false).unwrap();
            let expected = id
                .add(&p)
                .unwrap()
                .scale(&Rat::new(1, 2))
                .sub(&q.scale(&n_rat.inverse().unwrap()))
                .unwrap();
            assert_eq!(e, expected);
            // idempotent, absorbed by P, killed by Q
            assert_eq!(e.compose(&e).unwrap(), e);
            assert_eq!(p.compose(&e).unwrap(), e);
            assert!(q.compose(&e).unwrap().is_zero());
        }
    }

    #[test]
    fn jm_eigenvalue_property() {
        // X_a E_T = E_T X_a = c_a E_T
        for kind in [orth(3), sp(4), gl(3)] {
            for lam in [shape(&[2]), shape(&[1, 1]), shape(&[2, 1])] {
                if kind.check_shape(&lam).is_err() {
                    continue;
                }
                let mut tower = IdempotentTower::new(kind, false);
                for t in standard_tableaux(&lam) {
                    let e = tower.idempotent(&t).unwrap();
                    let contents = t.contents(&kind.omega());
                    for a in 1..=t.size() {
                        let x = jm_operator(&kind, a, t.size(), false).unwrap();
                        let left = x.compose(&e).unwrap();
                        let right = e.compose(&x).unwrap();
                        let scaled = e.scale(&contents[a - 1]);
                        assert_eq!(left, scaled);
                        assert_eq!(right, scaled);
                    }
                }
            }
        }
    }

    #[test]
    fn symbolic_trace_of_identity() {
        let kind = gl(3);
        let id = TensorOperator::identity(1, 3);
        let w = DiagonalWeights::symbolic(kind);
        let TraceValue::Symbolic(p) = trace_against_diagonal(&id, &w).unwrap() else {
            panic!("symbolic weights give polynomials");
        };
        assert_eq!(p.display_with("x"), "x3 + x2 + x1");
    }

    #[test]
    fn group_point_weights_include_inverses() {
        // odd orthogonal: eigenvalues z, 1, 1/z
        let kind = orth(3);
        let w = DiagonalWeights::group_point(kind, vec![Rat::from_int(2)]).unwrap();
        let id = TensorOperator::identity(1, 3);
        let TraceValue::Concrete(v) = trace_against_diagonal(&id, &w).unwrap() else {
            panic!("concrete weights give rationals");
        };
        assert_eq!(v, Rat::new(7, 2));
    }

    #[test]
    fn identity_group_element_recovers_the_plain_trace() {
        // pairing with the identity point is the dimension oracle
        let kind = orth(4);
        let t = &standard_tableaux(&shape(&[2]))[0];
        let e = primitive_idempotent(t, &kind, false).unwrap();
        let w = DiagonalWeights::identity_point(kind);
        let TraceValue::Concrete(v) = trace_against_diagonal(&e, &w).unwrap() else {
            panic!("concrete weights give rationals");
        };
        assert_eq!(v, e.trace());
        assert_eq!(v, Rat::from_int(9)); // dim of the traceless symmetric square
    }

    #[test]
    fn index_codec_round_trips() {
        for idx in 0..27 {
            let digits = decode_index(idx, 3, 3);
            assert_eq!(encode_index(&digits, 3), idx);
        }
        assert_eq!(decode_index(5, 3, 3), vec![0, 1, 2]);
    }

    #[test]
    fn space_guard_trips() {
        let kind = orth(10);
        assert!(matches!(
            kind.space_dim(7, false),
            Err(Error::SpaceTooLarge { .. })
        ));
        assert_eq!(kind.space_dim(7, true).unwrap(), 10_000_000);
    }
}
