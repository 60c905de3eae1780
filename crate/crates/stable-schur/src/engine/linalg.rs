//! Sparse exact-rational linear algebra: vectors, incremental row-echelon
//! spans, and kernels of maps given by basis images.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub type Scalar = BigRational;

/// Sparse vector: entries sorted by strictly increasing index, all nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize) -> Self {
        SparseVec {
            entries: alloc::vec![(index, Scalar::from(BigInt::from(1)))],
        }
    }

    /// Build from arbitrary (index, value) pairs: sorts, merges duplicate
    /// indices, drops zeros.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match merged.last_mut() {
                Some((j, last)) if *j == i => *last += c,
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: merged }
    }

    pub fn from_int_entries(entries: &[(usize, i64)]) -> Self {
        SparseVec::from_entries(
            entries
                .iter()
                .map(|(i, c)| (*i, Scalar::from(BigInt::from(*c))))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn scaled(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other` by sorted merge.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (ia, va) = &self.entries[a];
            let (ib, vb) = &other.entries[b];
            match ia.cmp(ib) {
                core::cmp::Ordering::Less => {
                    out.push((*ia, va.clone()));
                    a += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push((*ib, vb * c));
                    b += 1;
                }
                core::cmp::Ordering::Equal => {
                    let v = va + vb * c;
                    if !v.is_zero() {
                        out.push((*ia, v));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend(self.entries[a..].iter().cloned());
        out.extend(other.entries[b..].iter().map(|(i, v)| (*i, v * c)));
        SparseVec { entries: out }
    }

    /// All indices moved up by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, c)| (i + offset, c.clone())).collect(),
        }
    }

    /// Leading coefficient scaled to one.
    pub fn normalized(&self) -> SparseVec {
        match self.leading() {
            None => SparseVec::zero(),
            Some((_, c)) => self.scaled(&c.recip()),
        }
    }
}

/// Row-echelon span over the rationals, pivot at the smallest index of each
/// row, kept fully reduced so the basis is canonical for the subspace.
#[derive(Clone, Debug, Default)]
pub struct Span {
    rows: BTreeMap<usize, SparseVec>,
}

impl Span {
    pub fn new() -> Self {
        Span::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` after eliminating every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut acc = v.clone();
        let mut pos = 0;
        while pos < acc.entries.len() {
            let idx = acc.entries[pos].0;
            match self.rows.get(&idx) {
                Some(row) => {
                    let c = -acc.entries[pos].1.clone();
                    // The pivot entry cancels; row indices are all >= idx,
                    // so entries before `pos` are untouched.
                    acc = acc.add_scaled(row, &c);
                }
                None => pos += 1,
            }
        }
        acc
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`; returns the new normalized row if the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> Option<SparseVec> {
        let red = self.reduce(v);
        if red.is_zero() {
            return None;
        }
        let row = red.normalized();
        let pivot = row.leading().expect("nonzero").0;
        // Back-substitution keeps the basis canonical.
        let touched: Vec<usize> = self
            .rows
            .iter()
            .filter(|(_, r)| r.get(pivot).is_some())
            .map(|(p, _)| *p)
            .collect();
        for p in touched {
            let r = self.rows.get(&p).expect("present");
            let c = -r.get(pivot).expect("checked").clone();
            let updated = r.add_scaled(&row, &c);
            self.rows.insert(p, updated);
        }
        self.rows.insert(pivot, row.clone());
        Some(row)
    }

    /// Rows in pivot order.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows.values().cloned().collect()
    }
}

/// Kernel of a linear map described by the images of an abstract basis
/// `e_0, e_1, ...`: returns normalized coefficient vectors (in that basis)
/// spanning the kernel, by incremental elimination with history.
pub fn kernel_from_images(images: Vec<SparseVec>) -> Vec<SparseVec> {
    let mut rows: BTreeMap<usize, (SparseVec, SparseVec)> = BTreeMap::new();
    let mut kernel = Vec::new();
    for (i, img) in images.into_iter().enumerate() {
        let mut acc = img;
        let mut combo = SparseVec::unit(i);
        let mut pos = 0;
        while pos < acc.entries.len() {
            let idx = acc.entries[pos].0;
            match rows.get(&idx) {
                Some((row_img, row_combo)) => {
                    let c = -acc.entries[pos].1.clone();
                    acc = acc.add_scaled(row_img, &c);
                    combo = combo.add_scaled(row_combo, &c);
                }
                None => pos += 1,
            }
        }
        match acc.leading() {
            None => kernel.push(combo.normalized()),
            Some((pivot, c)) => {
                let inv = c.recip();
                rows.insert(pivot, (acc.scaled(&inv), combo.scaled(&inv)));
            }
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_int_entries(entries)
    }

    #[test]
    fn vector_arithmetic_merges_and_drops_zeros() {
        let v = SparseVec::from_int_entries(&[(3, 2), (1, 1), (3, -2), (0, 5)]);
        assert_eq!(v, sv(&[(0, 5), (1, 1)]));
        let w = v.add_scaled(&sv(&[(1, -1), (2, 4)]), &Scalar::one());
        assert_eq!(w, sv(&[(0, 5), (2, 4)]));
        assert_eq!(w.shifted(10), sv(&[(10, 5), (12, 4)]));
        assert!(sv(&[]).is_zero());
        assert_eq!(sv(&[(2, 3)]).normalized(), sv(&[(2, 1)]));
    }

    #[test]
    fn span_tracks_rank_and_membership() {
        let mut s = Span::new();
        assert!(s.insert(&sv(&[(0, 1), (1, 1)])).is_some());
        assert!(s.insert(&sv(&[(1, 1), (2, 1)])).is_some());
        assert!(s.insert(&sv(&[(0, 1), (2, -1)])).is_none());
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&sv(&[(0, 2), (1, 4), (2, 2)])));
        assert!(!s.contains(&sv(&[(0, 1)])));
        // Canonical reduced basis.
        assert_eq!(s.basis(), alloc::vec![sv(&[(0, 1), (2, -1)]), sv(&[(1, 1), (2, 1)])]);
    }

    #[test]
    fn kernel_of_stacked_images() {
        // Map e0 -> x, e1 -> x, e2 -> 0: kernel is e0 - e1 and e2.
        let images = alloc::vec![sv(&[(0, 1)]), sv(&[(0, 1)]), SparseVec::zero()];
        let kernel = kernel_from_images(images);
        assert_eq!(kernel.len(), 2);
        assert_eq!(kernel[0], sv(&[(0, 1), (1, -1)]).normalized());
        assert_eq!(kernel[1], sv(&[(2, 1)]));

        // Injective map has no kernel.
        let images = alloc::vec![sv(&[(0, 1)]), sv(&[(1, 1)])];
        assert!(kernel_from_images(images).is_empty());
    }
}
