//! Integer partitions and the tableau counts built from them.
//!
//! A partition indexes a Schur functor, and three numbers attached to it
//! drive the rest of the crate: the standard tableau count `f^lam`
//! ([`syt_count`]), the dimension of the Schur functor at a fixed rank
//! ([`schur_dim`], also available as a polynomial in the rank through
//! [`schur_dim_poly`]), and the Littlewood-Richardson coefficients
//! ([`lr_coefficient`]) that the branching matrix is assembled from.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::poly::QPoly;

/// A partition: weakly decreasing positive row lengths, no trailing zeros.
///
/// Ordering compares sizes first and then the parts lexicographically, so
/// maps keyed by partitions iterate small shapes before large ones and
/// printed decompositions come out in a stable order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Rejection reasons for would-be partitions and partition text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// Parts increase somewhere, or a zero sits before a positive part.
    NotWeaklyDecreasing,
    /// Text input is not of the form `[3,1,1]`, `[]`, or the empty-set sign.
    Syntax,
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::NotWeaklyDecreasing => {
                write!(f, "partition parts must be weakly decreasing")
            }
            PartitionError::Syntax => write!(f, "expected partition text like [3,1,1] or []"),
        }
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Canonicalizes by dropping trailing zeros; anything else out of order
    /// is an error.
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing);
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cells.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Row length at `i`, zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed diagram: column lengths become row lengths.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let mut out = Vec::with_capacity(cols);
        for j in 0..cols as u32 {
            out.push(self.parts.iter().filter(|&&x| x > j).count() as u32);
        }
        Partition { parts: out }
    }

    /// Diagram containment: every row of `other` fits inside ours.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &x)| x <= self.part(i))
    }

    /// Cells as (row, column) pairs in reading order.
    pub(crate) fn cells(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i as u32, j)))
    }

    /// Hook length of the cell (i, j).
    fn hook(&self, conj: &Partition, i: u32, j: u32) -> u32 {
        (self.part(i as usize) - j) + (conj.part(j as usize) - i) - 1
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `[3,1,1]`, `[]`, or the empty-set sign, with optional spaces.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "\u{2205}" {
            return Ok(Partition::empty());
        }
        let inner = s
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or(PartitionError::Syntax)?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in inner.split(',') {
            let part: u32 = piece.trim().parse().map_err(|_| PartitionError::Syntax)?;
            parts.push(part);
        }
        Partition::new(parts)
    }
}

/// All partitions of `r`, largest first part first.
pub fn partitions_of(r: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    rec(r, r, &mut current, &mut out);
    out
}

/// Partitions of `r` whose diagram fits inside `bound`.
pub fn partitions_of_bounded(r: u32, bound: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        remaining: u32,
        row: usize,
        max_part: u32,
        bound: &Partition,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let top = remaining.min(max_part).min(bound.part(row));
        for next in (1..=top).rev() {
            current.push(next);
            rec(remaining - next, row + 1, next, bound, current, out);
            current.pop();
        }
    }
    rec(r, 0, r, bound, &mut current, &mut out);
    out
}

/// Number of standard Young tableaux of shape `lam`, by the hook length
/// formula `|lam|! / prod(hooks)`.
///
/// Always a positive integer; computed with big integers internally and
/// returned as `u64`, which covers every size this crate targets.
pub fn syt_count(lam: &Partition) -> u64 {
    let conj = lam.conjugate();
    let mut numerator = BigInt::one();
    for k in 1..=lam.size() {
        numerator *= BigInt::from(k);
    }
    let mut hooks = BigInt::one();
    for (i, j) in lam.cells() {
        hooks *= BigInt::from(lam.hook(&conj, i, j));
    }
    (numerator / hooks)
        .to_u64()
        .expect("standard tableau count does not fit in u64")
}

/// Dimension of the Schur functor `S_lam(C^n)`, by the hook content formula
/// `prod(n + j - i) / prod(hooks)` over the cells (i, j).
///
/// Zero exactly when `n < len(lam)`: the content factor of the cell at the
/// bottom of the first column vanishes first.
pub fn schur_dim(lam: &Partition, n: u32) -> u64 {
    let conj = lam.conjugate();
    let mut numerator = BigInt::one();
    for (i, j) in lam.cells() {
        let factor = n as i64 + j as i64 - i as i64;
        if factor == 0 {
            return 0;
        }
        numerator *= BigInt::from(factor);
    }
    let mut hooks = BigInt::one();
    for (i, j) in lam.cells() {
        hooks *= BigInt::from(lam.hook(&conj, i, j));
    }
    let dim = numerator / hooks;
    assert!(!dim.is_negative(), "hook content product cannot be negative");
    dim.to_u64().expect("dimension does not fit in u64")
}

/// The hook content formula as a polynomial in the rank: degree is exactly
/// `|lam|`, and evaluation at any integer `n >= 0` equals [`schur_dim`].
pub fn schur_dim_poly(lam: &Partition) -> QPoly {
    let conj = lam.conjugate();
    let mut poly = QPoly::one();
    for (i, j) in lam.cells() {
        let content = j as i64 - i as i64;
        poly = poly.mul(&QPoly::linear(content));
    }
    let mut hooks = BigInt::one();
    for (i, j) in lam.cells() {
        hooks *= BigInt::from(lam.hook(&conj, i, j));
    }
    poly.scale(&BigRational::new(BigInt::one(), hooks))
}

/// Littlewood-Richardson coefficient `c^lam_{mu nu}`: the number of
/// semistandard skew tableaux of shape `lam/mu` and content `nu` whose
/// reverse reading word is a lattice word.
///
/// The enumeration fills the skew shape in reverse reading order (top row
/// first, right to left within a row) so the lattice condition can be
/// checked as a running prefix property.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lam.size() || !lam.contains(mu) {
        return 0;
    }
    // By symmetry in mu and nu the coefficient also vanishes unless nu fits
    // inside lam; pruning here is not load-bearing for correctness.
    if !lam.contains(nu) {
        return 0;
    }

    // Cells in reverse reading order.
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for i in 0..lam.len() {
        let lo = mu.part(i);
        let hi = lam.part(i);
        for j in (lo..hi).rev() {
            cells.push((i, j));
        }
    }

    let rows = lam.len();
    let cols = lam.part(0) as usize;
    let mut grid = vec![vec![0u32; cols]; rows];
    let mut counts = vec![0u32; nu.len()];

    fn rec(
        cells: &[(usize, u32)],
        k: usize,
        lam: &Partition,
        mu: &Partition,
        nu: &Partition,
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        total: &mut u64,
    ) {
        if k == cells.len() {
            *total += 1;
            return;
        }
        let (i, j) = cells[k];
        // Weak increase along the row: bounded by the neighbor to the right,
        // which was filled earlier in this order.
        let row_max = if j + 1 < lam.part(i) {
            grid[i][(j + 1) as usize]
        } else {
            nu.len() as u32
        };
        // Strict increase down the column, but only against cells of the
        // skew shape; cells of mu are empty.
        let col_min = if i > 0 && j >= mu.part(i - 1) {
            grid[i - 1][j as usize] + 1
        } else {
            1
        };
        for v in col_min..=row_max {
            let vi = (v - 1) as usize;
            if counts[vi] == nu.part(vi) {
                continue; // content bound reached
            }
            // Lattice: after placing v, its prefix count may not exceed the
            // count of v - 1.
            if v > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            counts[vi] += 1;
            grid[i][j as usize] = v;
            rec(cells, k + 1, lam, mu, nu, grid, counts, total);
            counts[vi] -= 1;
        }
        grid[i][j as usize] = 0;
    }

    let mut total = 0;
    rec(
        &cells, 0, lam, mu, nu, &mut grid, &mut counts, &mut total,
    );
    total
}

/// Parse helper shared by the CLI and tests; `text` follows the same syntax
/// as [`Partition::from_str`].
pub fn parse_partition(text: &str) -> Result<Partition, PartitionError> {
    text.parse()
}

/// Render a list of parts without allocating a `Partition`.
pub fn format_parts(parts: &[u32]) -> String {
    use core::fmt::Write;
    let mut s = String::from("[");
    for (k, part) in parts.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{part}");
    }
    s.push(']');
    s
}
