//! Partitions, skew shapes and standard tableaux.
//!
//! The indexing layer for everything else: shapes label irreducible
//! representations, standard tableaux label primitive idempotents, and
//! contents drive the idempotent recursion. All counts are exact.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::rat::{factorial, Rat};
use crate::{Error, Result};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                reason: "zero part".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                reason: format!("parts {parts:?} not weakly decreasing"),
            });
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(vec![])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row length with trailing zeros, zero-based row index.
    pub fn part(&self, row: usize) -> usize {
        self.0.get(row).copied().unwrap_or(0)
    }

    /// Transpose of the diagram.
    pub fn conjugate(&self) -> Partition {
        if self.0.is_empty() {
            return Partition::empty();
        }
        let cols = self.0[0];
        let parts = (0..cols)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// Componentwise containment of diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .0
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }

    /// Boxes in reading order as zero-based (row, col) pairs.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Positions where a box may be added keeping a partition shape.
    pub fn addable_boxes(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for r in 0..=self.0.len() {
            let len = self.part(r);
            if r == 0 || self.part(r - 1) > len {
                out.push((r, len));
            }
        }
        out
    }

    pub fn with_box(&self, row: usize, col: usize) -> Partition {
        let mut parts = self.0.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        debug_assert_eq!(parts[row], col + 1);
        Partition(parts)
    }

    /// All sub-partitions, the empty one and `self` included, in
    /// ascending lexicographic order.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn rec(bound: &[usize], cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
            match bound.first() {
                None => out.push(Partition(acc.clone())),
                Some(&row) => {
                    // zero here means every later row is zero as well
                    out.push(Partition(acc.clone()));
                    for p in 1..=row.min(cap) {
                        acc.push(p);
                        rec(&bound[1..], p, acc, out);
                        acc.pop();
                    }
                }
            }
        }
        let mut out = vec![];
        rec(&self.0, usize::MAX, &mut vec![], &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Product of hook lengths; equals `H` for normal shapes.
    pub fn hook_length_product(&self) -> Rat {
        let conj = self.conjugate();
        let mut acc = Rat::one();
        for (r, c) in self.boxes() {
            let hook = (self.part(r) - c) + (conj.part(c) - r) - 1;
            acc *= &Rat::from_int(hook as i64);
        }
        acc
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; empty string and `0` both parse to the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad partition part {p:?}: {e}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// A skew diagram `outer/inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn whole(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// A standard tableau recorded as its chain of box additions.
///
/// `boxes[k]` is the zero-based (row, col) position receiving entry `k+1`;
/// the growth chain makes rows and columns strictly increasing by
/// construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Partition,
    boxes: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.boxes.len()
    }

    /// Box receiving entry `a` (one-based).
    pub fn box_of(&self, a: usize) -> (usize, usize) {
        self.boxes[a - 1]
    }

    pub fn boxes(&self) -> &[(usize, usize)] {
        &self.boxes
    }

    /// Shape after the first `k` entries.
    pub fn prefix_shape(&self, k: usize) -> Partition {
        let mut shape = Partition::empty();
        for &(r, c) in &self.boxes[..k] {
            shape = shape.with_box(r, c);
        }
        shape
    }

    /// Tableau with the largest entry removed.
    pub fn parent(&self) -> StandardTableau {
        assert!(self.size() > 1);
        let boxes = self.boxes[..self.boxes.len() - 1].to_vec();
        StandardTableau {
            shape: self.prefix_shape(boxes.len()),
            boxes,
        }
    }

    /// Content sequence `(omega-1)/2 + j - i`; pass `omega = 1` for the
    /// plain symmetric-group contents `j - i`.
    pub fn contents(&self, omega: &Rat) -> Vec<Rat> {
        let shift = (omega - &Rat::one()) * Rat::new(1, 2);
        self.boxes
            .iter()
            .map(|&(r, c)| &shift + &Rat::from_int(c as i64 - r as i64))
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grid: Vec<Vec<usize>> = {
            let mut g: Vec<Vec<usize>> = self
                .shape
                .parts()
                .iter()
                .map(|&len| vec![0; len])
                .collect();
            for (k, &(r, c)) in self.boxes.iter().enumerate() {
                g[r][c] = k + 1;
            }
            g
        };
        let rows: Vec<String> = grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "[{}]", rows.join(" | "))
    }
}

/// All partitions of `m` within the given bounds, reverse-lexicographic.
pub fn partitions_of(m: usize, max_rows: Option<usize>, max_cols: Option<usize>) -> Vec<Partition> {
    fn rec(
        remaining: usize,
        cap: usize,
        rows_left: usize,
        acc: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=cap.min(remaining)).rev() {
            acc.push(p);
            rec(remaining - p, p, rows_left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = vec![];
    rec(
        m,
        max_cols.unwrap_or(m.max(1)),
        max_rows.unwrap_or(m.max(1)),
        &mut vec![],
        &mut out,
    );
    out
}

/// All standard tableaux of the shape, ordered lexicographically by their
/// content sequences.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        target: &Partition,
        current: &Partition,
        chain: &mut Vec<(usize, usize)>,
        out: &mut Vec<StandardTableau>,
    ) {
        if current == target {
            out.push(StandardTableau {
                shape: target.clone(),
                boxes: chain.clone(),
            });
            return;
        }
        for (r, c) in current.addable_boxes() {
            if target.part(r) > c {
                chain.push((r, c));
                rec(target, &current.with_box(r, c), chain, out);
                chain.pop();
            }
        }
    }
    let mut out = vec![];
    rec(shape, &Partition::empty(), &mut vec![], &mut out);
    out.sort_by_key(|t| {
        t.boxes
            .iter()
            .map(|&(r, c)| c as i64 - r as i64)
            .collect::<Vec<_>>()
    });
    out
}

/// Number of standard fillings of a skew shape.
pub fn dim_skew(shape: &SkewShape) -> u64 {
    fn rec(target: &Partition, current: &Partition) -> u64 {
        if current == target {
            return 1;
        }
        let mut acc = 0;
        for (r, c) in current.addable_boxes() {
            if target.part(r) > c {
                acc += rec(target, &current.with_box(r, c));
            }
        }
        acc
    }
    rec(shape.outer(), shape.inner())
}

/// `H(theta) = |theta|! / dim(theta)`, the hook product for normal shapes.
pub fn hook_product(shape: &SkewShape) -> Rat {
    let fillings = dim_skew(shape);
    debug_assert!(fillings > 0, "every valid skew shape has a filling");
    factorial(shape.size())
        .checked_div(&Rat::from_int(fillings as i64))
        .expect("filling count is positive")
}
