//! The concrete ambient spaces and group actions: direct sums of tensor
//! powers with their flat index conventions, the Lie-algebra generators of
//! the orthogonal group, coordinate reflections, and standard inclusions.

use alloc::vec::Vec;

use super::linalg::{kernel_from_images, SparseVec};

/// `⊕ (C^level)^{⊗ r_i}` with row-major indexing inside each summand: the
/// word `(w_0, ..., w_{r-1})` of digits `w_p < level` has local index
/// `Σ w_p · level^{r-1-p}`, and summands occupy consecutive index blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    level: u32,
    summands: Vec<u32>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Ambient {
    pub fn new(summands: &[u32], level: u32) -> Self {
        let mut offsets = Vec::with_capacity(summands.len());
        let mut dim = 0usize;
        for &r in summands {
            offsets.push(dim);
            dim += (level as usize)
                .checked_pow(r)
                .expect("ambient dimension fits a machine word");
        }
        Ambient {
            level,
            summands: summands.to_vec(),
            offsets,
            dim,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn summands(&self) -> &[u32] {
        &self.summands
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Summand and local index of a flat index.
    pub(crate) fn locate(&self, index: usize) -> (usize, usize) {
        debug_assert!(index < self.dim);
        let s = match self.offsets.binary_search(&index) {
            Ok(s) => s,
            Err(ins) => ins - 1,
        };
        (s, index - self.offsets[s])
    }

    /// Digit word of a local index, most significant digit first.
    pub(crate) fn word(&self, summand: usize, local: usize) -> Vec<u32> {
        let r = self.summands[summand] as usize;
        let n = self.level as usize;
        let mut w = alloc::vec![0u32; r];
        let mut rest = local;
        for p in (0..r).rev() {
            w[p] = (rest % n) as u32;
            rest /= n;
        }
        w
    }

    pub(crate) fn index_of_word(&self, summand: usize, word: &[u32]) -> usize {
        let n = self.level as usize;
        let mut local = 0usize;
        for &d in word {
            debug_assert!((d as usize) < n);
            local = local * n + d as usize;
        }
        self.offsets[summand] + local
    }

    /// Derivation action of the antisymmetric generator `E_ab - E_ba`
    /// (so `e_b -> e_a`, `e_a -> -e_b`) across all tensor factors.
    pub fn lie_image(&self, v: &SparseVec, a: u32, b: u32) -> SparseVec {
        debug_assert!(a < self.level && b < self.level && a != b);
        let mut terms = Vec::new();
        for (idx, c) in v.entries() {
            let (s, local) = self.locate(*idx);
            let mut word = self.word(s, local);
            for p in 0..word.len() {
                let d = word[p];
                if d == b {
                    word[p] = a;
                    terms.push((self.index_of_word(s, &word), c.clone()));
                    word[p] = d;
                } else if d == a {
                    word[p] = b;
                    terms.push((self.index_of_word(s, &word), -c.clone()));
                    word[p] = d;
                }
            }
        }
        SparseVec::from_entries(terms)
    }

    /// Image under the reflection negating coordinate `coord`: a diagonal
    /// sign given by the number of tensor factors equal to `coord`.
    pub fn reflection_image(&self, v: &SparseVec, coord: u32) -> SparseVec {
        debug_assert!(coord < self.level);
        let mut terms = Vec::new();
        for (idx, c) in v.entries() {
            let (s, local) = self.locate(*idx);
            let flips = self.word(s, local).iter().filter(|&&d| d == coord).count();
            let signed = if flips % 2 == 0 { c.clone() } else { -c.clone() };
            terms.push((*idx, signed));
        }
        SparseVec::from_entries(terms)
    }

    /// Pushforward along the standard inclusion into the same sum of tensor
    /// powers at a higher level: digits are preserved, indices re-encoded.
    pub fn include_into(&self, v: &SparseVec, target: &Ambient) -> SparseVec {
        debug_assert_eq!(self.summands, target.summands);
        debug_assert!(target.level >= self.level);
        let mut terms = Vec::new();
        for (idx, c) in v.entries() {
            let (s, local) = self.locate(*idx);
            let word = self.word(s, local);
            terms.push((target.index_of_word(s, &word), c.clone()));
        }
        SparseVec::from_entries(terms)
    }

    /// Chain generators `(a, a+1)` of the orthogonal Lie algebra of the
    /// coordinate block starting at `block_start`; together with one block
    /// reflection they cut out exactly the block invariants.
    fn block_links(&self, block_start: u32) -> Vec<(u32, u32)> {
        if self.level < 2 || block_start + 1 >= self.level {
            return Vec::new();
        }
        (block_start..self.level - 1).map(|a| (a, a + 1)).collect()
    }

    /// Images of `v` under every block generator, stacked into one map with
    /// disjoint index blocks: the chain links followed by `reflection - id`
    /// at the block's first coordinate. Empty block means no constraints.
    pub fn block_operator_image(&self, v: &SparseVec, block_start: u32) -> SparseVec {
        let links = self.block_links(block_start);
        let mut stacked = SparseVec::zero();
        let one = num_rational::BigRational::from(num_bigint::BigInt::from(1));
        for (k, (a, b)) in links.iter().enumerate() {
            stacked = stacked.add_scaled(&self.lie_image(v, *a, *b).shifted(k * self.dim), &one);
        }
        if block_start < self.level {
            let minus_one = -one.clone();
            let refl = self
                .reflection_image(v, block_start)
                .add_scaled(v, &minus_one);
            stacked = stacked.add_scaled(&refl.shifted(links.len() * self.dim), &one);
        }
        stacked
    }
}

/// Vectors in the span of `basis` invariant under the orthogonal group of
/// the coordinate block `[block_start, level)`: the joint kernel of the
/// block chain generators and one block reflection. An empty block leaves
/// everything invariant.
pub fn block_invariants(amb: &Ambient, basis: &[SparseVec], block_start: u32) -> Vec<SparseVec> {
    if block_start >= amb.level() {
        return basis.to_vec();
    }
    let images: Vec<SparseVec> = basis
        .iter()
        .map(|v| amb.block_operator_image(v, block_start))
        .collect();
    let combos = kernel_from_images(images);
    combos
        .into_iter()
        .map(|combo| {
            let mut out = SparseVec::zero();
            for (j, c) in combo.entries() {
                out = out.add_scaled(&basis[*j], c);
            }
            out
        })
        .collect()
}

/// Basis of the zero-weight space of one rotation generator on
/// `(C^2)^{⊗m}` (empty for odd `m`, dimension `C(m, m/2)` for even).
fn pair_zero_weight(m: u32) -> Vec<SparseVec> {
    let amb = Ambient::new(&[m], 2);
    let images: Vec<SparseVec> = (0..amb.dim())
        .map(|i| amb.lie_image(&SparseVec::unit(i), 0, 1))
        .collect();
    kernel_from_images(images)
}

/// Basis of the joint zero-weight space of the commuting rotations in the
/// coordinate pairs `(0,1), (2,3), ...` of `(C^level)^{⊗r}` (an odd level
/// leaves its last coordinate unpaired). Vectors from distinct letter-class
/// assignments have disjoint supports, so the result is a basis.
pub fn zero_weight_basis(r: u32, level: u32) -> Vec<SparseVec> {
    if level == 0 {
        return if r == 0 {
            alloc::vec![SparseVec::unit(0)]
        } else {
            Vec::new()
        };
    }
    let npairs = level / 2;
    let single = level % 2 == 1;
    let nclasses = npairs + single as u32;
    let pair_kernels: Vec<Vec<SparseVec>> = (0..=r).map(pair_zero_weight).collect();
    let amb = Ambient::new(&[r], level);

    let mut out = Vec::new();
    let mut assignment = alloc::vec![0u32; r as usize];
    loop {
        build_assigned_vectors(&amb, &assignment, npairs, level, &pair_kernels, &mut out);
        // Next assignment word.
        let mut p = 0usize;
        loop {
            if p == assignment.len() {
                return out;
            }
            assignment[p] += 1;
            if assignment[p] < nclasses {
                break;
            }
            assignment[p] = 0;
            p += 1;
        }
    }
}

/// All zero-weight vectors for one assignment of tensor positions to letter
/// classes: tensor products of pair-block kernel vectors, with unpaired
/// positions pinned to the last coordinate.
fn build_assigned_vectors(
    amb: &Ambient,
    assignment: &[u32],
    npairs: u32,
    level: u32,
    pair_kernels: &[Vec<SparseVec>],
    out: &mut Vec<SparseVec>,
) {
    let r = assignment.len();
    // Positions of each pair class, in order.
    let mut positions: Vec<Vec<usize>> = alloc::vec![Vec::new(); npairs as usize];
    for (p, &cls) in assignment.iter().enumerate() {
        if cls < npairs {
            positions[cls as usize].push(p);
        }
    }
    let counts: Vec<usize> = positions.iter().map(|ps| ps.len()).collect();
    if counts.iter().any(|&m| m % 2 == 1) {
        return;
    }
    let choices: Vec<&[SparseVec]> = counts
        .iter()
        .map(|&m| pair_kernels[m].as_slice())
        .collect();

    // Mixed-radix iteration over one kernel vector per pair class.
    let radix: Vec<usize> = choices.iter().map(|c| c.len()).collect();
    if radix.iter().any(|&n| n == 0) {
        // Even counts always have a nonempty kernel; stay safe regardless.
        return;
    }
    let mut pick = alloc::vec![0usize; radix.len()];
    loop {
        // Expand the product of the chosen pair-class vectors into full words.
        let mut partial: Vec<(Vec<u32>, super::linalg::Scalar)> = alloc::vec![(
            alloc::vec![level - 1; r],
            super::linalg::Scalar::from(num_bigint::BigInt::from(1))
        )];
        for (cls, &ps) in pick.iter().enumerate() {
            let vec = &choices[cls][ps];
            let m = counts[cls];
            let mut next = Vec::with_capacity(partial.len() * vec.entries().len());
            for (local, c) in vec.entries() {
                // Bits of the local index in (C^2)^{⊗m}, most significant first.
                let mut bits = alloc::vec![0u32; m];
                let mut rest = *local;
                for slot in (0..m).rev() {
                    bits[slot] = (rest % 2) as u32;
                    rest /= 2;
                }
                for (word, coeff) in &partial {
                    let mut w = word.clone();
                    for (slot, &pos) in positions[cls].iter().enumerate() {
                        w[pos] = 2 * cls as u32 + bits[slot];
                    }
                    next.push((w, coeff * c));
                }
            }
            partial = next;
        }
        let entries: Vec<(usize, super::linalg::Scalar)> = partial
            .into_iter()
            .map(|(w, c)| (amb.index_of_word(0, &w), c))
            .collect();
        out.push(SparseVec::from_entries(entries));

        let mut cls = 0usize;
        loop {
            if cls == pick.len() {
                return;
            }
            pick[cls] += 1;
            if pick[cls] < radix[cls] {
                break;
            }
            pick[cls] = 0;
            cls += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::binomial;
    use num_bigint::BigInt;

    #[test]
    fn flat_indexing_round_trips() {
        let amb = Ambient::new(&[2, 1], 3);
        assert_eq!(amb.dim(), 9 + 3);
        assert_eq!(amb.locate(0), (0, 0));
        assert_eq!(amb.locate(8), (0, 8));
        assert_eq!(amb.locate(9), (1, 0));
        assert_eq!(amb.word(0, 5), alloc::vec![1, 2]);
        assert_eq!(amb.index_of_word(0, &[1, 2]), 5);
        assert_eq!(amb.index_of_word(1, &[2]), 11);
        // Degree zero: one basis vector at every level.
        let scalar = Ambient::new(&[0], 4);
        assert_eq!(scalar.dim(), 1);
        assert_eq!(scalar.word(0, 0), alloc::vec![] as Vec<u32>);
    }

    #[test]
    fn lie_action_matches_hand_computation() {
        // Degree 1 at level 2: e_0 -> -e_1, e_1 -> e_0.
        let amb = Ambient::new(&[1], 2);
        assert_eq!(
            amb.lie_image(&SparseVec::unit(0), 0, 1),
            SparseVec::from_int_entries(&[(1, -1)])
        );
        assert_eq!(
            amb.lie_image(&SparseVec::unit(1), 0, 1),
            SparseVec::from_int_entries(&[(0, 1)])
        );

        // Degree 2: e_0 ⊗ e_0 -> -e_1⊗e_0 - e_0⊗e_1 by the Leibniz rule.
        let amb = Ambient::new(&[2], 2);
        assert_eq!(
            amb.lie_image(&SparseVec::unit(0), 0, 1),
            SparseVec::from_int_entries(&[(1, -1), (2, -1)])
        );

        // Degree 0 is killed.
        let amb = Ambient::new(&[0], 3);
        assert!(amb.lie_image(&SparseVec::unit(0), 0, 1).is_zero());
    }

    #[test]
    fn reflection_signs_count_flipped_factors() {
        let amb = Ambient::new(&[2], 2);
        // e_0⊗e_0 has two flipped factors, e_0⊗e_1 one, e_1⊗e_1 none.
        let v = SparseVec::from_int_entries(&[(0, 1), (1, 1), (3, 1)]);
        assert_eq!(
            amb.reflection_image(&v, 0),
            SparseVec::from_int_entries(&[(0, 1), (1, -1), (3, 1)])
        );
    }

    #[test]
    fn inclusion_preserves_digits() {
        let small = Ambient::new(&[2], 2);
        let big = Ambient::new(&[2], 4);
        // e_1⊗e_0: local 2 at level 2, local 4 at level 4.
        assert_eq!(
            small.include_into(&SparseVec::unit(2), &big),
            SparseVec::unit(4)
        );
        // Inclusion commutes with the Lie action for generators inside the
        // smaller level.
        let v = SparseVec::from_int_entries(&[(0, 2), (3, -1)]);
        let a = small.include_into(&small.lie_image(&v, 0, 1), &big);
        let b = big.lie_image(&small.include_into(&v, &big), 0, 1);
        assert_eq!(a, b);
    }

    #[test]
    fn pair_zero_weight_dimensions_are_central_binomials() {
        for m in 0..=6u32 {
            let z = pair_zero_weight(m);
            let expected = if m % 2 == 0 {
                binomial(m as u64, m as u64 / 2)
            } else {
                BigInt::from(0)
            };
            assert_eq!(BigInt::from(z.len()), expected, "m = {m}");
        }
    }

    #[test]
    fn zero_weight_assembly_matches_direct_kernels() {
        // The assembled joint zero-weight space must equal the intersection
        // of the rotation kernels computed directly on the full ambient.
        for (r, level) in [(2u32, 2u32), (2, 3), (3, 4), (4, 4), (2, 5), (3, 5)] {
            let amb = Ambient::new(&[r], level);
            let assembled = zero_weight_basis(r, level);

            let units: Vec<SparseVec> = (0..amb.dim()).map(SparseVec::unit).collect();
            let mut images = Vec::new();
            for v in &units {
                let mut stacked = SparseVec::zero();
                let one = super::super::linalg::Scalar::from(BigInt::from(1));
                for s in 0..level / 2 {
                    stacked = stacked.add_scaled(
                        &amb.lie_image(v, 2 * s, 2 * s + 1).shifted(s as usize * amb.dim()),
                        &one,
                    );
                }
                images.push(stacked);
            }
            let direct = kernel_from_images(images);
            assert_eq!(assembled.len(), direct.len(), "r={r} level={level}");

            let mut span = super::super::linalg::Span::new();
            for v in &direct {
                span.insert(v);
            }
            for v in &assembled {
                assert!(span.contains(v), "r={r} level={level}");
            }
        }
    }
}
