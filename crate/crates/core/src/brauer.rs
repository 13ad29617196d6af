//! The abstract Brauer algebra: diagrams, elements, Jucys-Murphy sums.
//!
//! An `m`-diagram is a perfect matching on two rows of `m` dots.
//! Multiplication stacks the left factor above the right one, joins the
//! middle rows, erases closed loops and pays a factor `omega` per loop.
//! Elements are finite rational combinations of diagrams at one fixed
//! specialization of `omega`; identities that hold for generic `omega`
//! are checked at several rational values instead, which suffices because
//! they are polynomial in `omega`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::rat::Rat;
use crate::{Error, Result};

/// A perfect matching on `2m` dots in canonical form.
///
/// Dots `0..m` are the top row (paper labels `1..m`), dots `m..2m` the
/// bottom row (labels `1'..m'`). Edges store the smaller endpoint first
/// and are sorted, so equal matchings compare equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BrauerDiagram {
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl BrauerDiagram {
    /// Build from any list of edges covering every dot exactly once.
    pub fn from_edges(m: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "expected {m} edges, got {}",
                edges.len()
            )));
        }
        let mut seen = vec![false; 2 * m];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(m);
        for (u, v) in edges {
            if u >= 2 * m || v >= 2 * m || u == v || seen[u] || seen[v] {
                return Err(Error::Parse(format!("bad edge ({u}, {v}) in {m}-diagram")));
            }
            seen[u] = true;
            seen[v] = true;
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        Ok(BrauerDiagram { m, edges: canon })
    }

    pub fn identity(m: usize) -> Self {
        let edges = (0..m).map(|a| (a, m + a)).collect();
        BrauerDiagram { m, edges }
    }

    /// The transposition-type diagram exchanging columns `a` and `b`
    /// (one-based, `a < b`).
    pub fn transposition(a: usize, b: usize, m: usize) -> Result<Self> {
        check_pair(a, b, m)?;
        let edges = (1..=m)
            .map(|c| {
                let target = if c == a { b } else if c == b { a } else { c };
                (c - 1, m + target - 1)
            })
            .collect();
        BrauerDiagram::from_edges(m, edges)
    }

    /// The hook-type diagram joining columns `a` and `b` within each row
    /// (one-based, `a < b`).
    pub fn contraction(a: usize, b: usize, m: usize) -> Result<Self> {
        check_pair(a, b, m)?;
        let mut edges = vec![(a - 1, b - 1), (m + a - 1, m + b - 1)];
        for c in 1..=m {
            if c != a && c != b {
                edges.push((c - 1, m + c - 1));
            }
        }
        BrauerDiagram::from_edges(m, edges)
    }

    /// Diagram of a permutation, top column `a` joined to bottom column
    /// `perm[a-1]` (one-based values).
    pub fn permutation(perm: &[usize]) -> Result<Self> {
        let m = perm.len();
        let edges = perm
            .iter()
            .enumerate()
            .map(|(a, &img)| (a, m + img - 1))
            .collect();
        BrauerDiagram::from_edges(m, edges)
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The permutation when every edge runs top to bottom.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let m = self.m;
        let mut perm = vec![0usize; m];
        for &(u, v) in &self.edges {
            if u >= m || v < m {
                return None;
            }
            perm[u] = v - m + 1;
        }
        Some(perm)
    }

    /// Number of top-row horizontal edges (equals the bottom-row count).
    pub fn contraction_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u < self.m && v < self.m)
            .count()
    }

    /// Stack `self` above `other`: the resulting diagram and the number
    /// of closed loops erased.
    pub fn stack(&self, other: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
        if self.m != other.m {
            return Err(Error::DiagramSizeMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let m = self.m;
        // dots 0..m top, m..2m middle, 2m..3m bottom; every middle dot
        // meets one edge from each factor
        let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(2); 3 * m];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for &(u, v) in &other.edges {
            adj[u + m].push(v + m);
            adj[v + m].push(u + m);
        }
        let mut visited = vec![false; 3 * m];
        let mut edges = Vec::with_capacity(m);
        for start in (0..m).chain(2 * m..3 * m) {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut prev = start;
            let mut cur = adj[start][0];
            while m <= cur && cur < 2 * m {
                visited[cur] = true;
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
            }
            visited[cur] = true;
            let map = |d: usize| if d < m { d } else { d - m };
            edges.push((map(start), map(cur)));
        }
        let mut loops = 0;
        for start in m..2 * m {
            if visited[start] {
                continue;
            }
            loops += 1;
            let mut prev = start;
            let mut cur = adj[start][0];
            visited[start] = true;
            while cur != start {
                visited[cur] = true;
                let next = if adj[cur][0] == prev {
                    adj[cur][1]
                } else {
                    adj[cur][0]
                };
                prev = cur;
                cur = next;
            }
        }
        // every path is discovered from exactly one of its two endpoints
        debug_assert_eq!(edges.len(), m);
        Ok((BrauerDiagram::from_edges(m, edges)?, loops))
    }
}

fn check_pair(a: usize, b: usize, m: usize) -> Result<()> {
    if !(1 <= a && a < b && b <= m) {
        return Err(Error::IndexOutOfRange {
            index: b.max(a),
            bound: m,
        });
    }
    Ok(())
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dot = |d: usize| {
            if d < self.m {
                format!("{}", d + 1)
            } else {
                format!("{}'", d - self.m + 1)
            }
        };
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|&(u, v)| format!("{}-{}", dot(u), dot(v)))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    /// Parse the edge-list format, e.g. `1-2,1'-2'`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_dot = |tok: &str, m2: &mut usize| -> Result<(usize, bool)> {
            let (body, primed) = match tok.strip_suffix('\'') {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let idx: usize = body
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("bad dot {tok:?}: {e}")))?;
            if idx == 0 {
                return Err(Error::Parse(format!("dot index must be positive: {tok:?}")));
            }
            *m2 = (*m2).max(idx);
            Ok((idx, primed))
        };
        let mut m = 0usize;
        let mut raw = vec![];
        for edge in s.split(',') {
            let (a, b) = edge
                .split_once('-')
                .ok_or_else(|| Error::Parse(format!("bad edge {edge:?}")))?;
            raw.push((parse_dot(a, &mut m)?, parse_dot(b, &mut m)?));
        }
        let encode = |(idx, primed): (usize, bool)| if primed { m + idx - 1 } else { idx - 1 };
        let edges = raw
            .into_iter()
            .map(|(a, b)| (encode(a), encode(b)))
            .collect();
        BrauerDiagram::from_edges(m, edges)
    }
}

/// A rational combination of diagrams at a fixed `omega`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrauerElement {
    m: usize,
    omega: Rat,
    terms: BTreeMap<BrauerDiagram, Rat>,
}

impl BrauerElement {
    pub fn zero(m: usize, omega: Rat) -> Self {
        BrauerElement {
            m,
            omega,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_diagram(d: BrauerDiagram, omega: Rat) -> Self {
        let mut e = BrauerElement::zero(d.size(), omega);
        e.add_term(d, Rat::one());
        e
    }

    pub fn identity(m: usize, omega: Rat) -> Self {
        Self::from_diagram(BrauerDiagram::identity(m), omega)
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn omega(&self) -> &Rat {
        &self.omega
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BrauerDiagram, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, d: BrauerDiagram, c: Rat) {
        debug_assert_eq!(d.size(), self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
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

    pub fn add(&self, other: &BrauerElement) -> Result<BrauerElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BrauerElement) -> Result<BrauerElement> {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn scale(&self, k: &Rat) -> BrauerElement {
        if k.is_zero() {
            return BrauerElement::zero(self.m, self.omega.clone());
        }
        BrauerElement {
            m: self.m,
            omega: self.omega.clone(),
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.clone(), c * k))
                .collect(),
        }
    }

    /// Bilinear product; each diagram pair contributes `omega^loops`.
    pub fn mul(&self, other: &BrauerElement) -> Result<BrauerElement> {
        self.check_compatible(other)?;
        let mut out = BrauerElement::zero(self.m, self.omega.clone());
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (d, loops) = d1.stack(d2)?;
                let coeff = c1 * c2 * self.omega.pow(loops as u32);
                out.add_term(d, coeff);
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &BrauerElement) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DiagramSizeMismatch {
                left: self.m,
                right: other.m,
            });
        }
        if self.omega != other.omega {
            return Err(Error::OmegaMismatch {
                element: other.omega.to_string(),
                expected: self.omega.to_string(),
            });
        }
        Ok(())
    }
}

/// Product of a single pair of diagrams as an element: `omega^s * d`.
pub fn diagram_multiply(
    d1: &BrauerDiagram,
    d2: &BrauerDiagram,
    omega: &Rat,
) -> Result<BrauerElement> {
    let (d, loops) = d1.stack(d2)?;
    let mut out = BrauerElement::zero(d1.size(), omega.clone());
    out.add_term(d, omega.pow(loops as u32));
    Ok(out)
}

/// The Jucys-Murphy element `x_b` in the `m`-dot algebra:
/// `(omega-1)/2 + sum_{a<b} (s_{ab} - eps_{ab})`.
pub fn jm_element(b: usize, m: usize, omega: &Rat) -> Result<BrauerElement> {
    if !(1 <= b && b <= m) {
        return Err(Error::IndexOutOfRange { index: b, bound: m });
    }
    let shift = (omega - &Rat::one()) * Rat::new(1, 2);
    let mut e = BrauerElement::identity(m, omega.clone()).scale(&shift);
    for a in 1..b {
        e.add_term(BrauerDiagram::transposition(a, b, m)?, Rat::one());
        e.add_term(BrauerDiagram::contraction(a, b, m)?, Rat::from_int(-1));
    }
    Ok(e)
}

/// Every `m`-diagram, enumerated deterministically.
pub fn basis(m: usize) -> Vec<BrauerDiagram> {
    fn rec(free: &[usize], edges: &mut Vec<(usize, usize)>, m: usize, out: &mut Vec<BrauerDiagram>) {
        if free.is_empty() {
            out.push(BrauerDiagram::from_edges(m, edges.clone()).expect("valid matching"));
            return;
        }
        let first = free[0];
        for k in 1..free.len() {
            let partner = free[k];
            let mut rest: Vec<usize> = free[1..].to_vec();
            rest.retain(|&d| d != partner);
            edges.push((first, partner));
            rec(&rest, edges, m, out);
            edges.pop();
        }
    }
    let all: Vec<usize> = (0..2 * m).collect();
    let mut out = vec![];
    rec(&all, &mut Vec::with_capacity(m), m, &mut out);
    out.sort();
    out
}

/// Basis size by full enumeration; equals `(2m-1)!! = 1*3*...*(2m-1)`.
pub fn count_basis(m: usize) -> u64 {
    basis(m).len() as u64
}
