//! Named presentations used by the verification suite and the CLI.
//!
//! - `free:R`: the full tensor power `T^R`, generated by every basis tensor
//!   at every level up to `R` (signed permutations then reach every word).
//! - `sym2`: one generator `e_0 ⊗ e_0` at level 1; closes to the symmetric
//!   square at every level.
//! - `alt2`: one generator `e_0 ⊗ e_1 - e_1 ⊗ e_0` at level 2; closes to
//!   the alternating square.
//! - `pointwise:K`: the single vector `e_0^{⊗2K}` at level 1 inside
//!   `T^{2K}`; closes to the full symmetric power although the ambient has
//!   degree `2K`.
//! - `torsion0`: the constant module `T^0` modulo everything from level 1
//!   on; one torsion line at level 0 and nothing else.
//! - `schur:[...]`: the image of the Young symmetrizer of the partition, a
//!   direct summand of its tensor power, generated at every level where it
//!   first exists.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::linalg::{Span, SparseVec};
use super::{Ambient, Generator, ModulePresentation};
use crate::partitions::Partition;
use crate::stable_rep::GroupFamily;

/// Errors from parsing preset names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetError {
    Unknown(String),
    BadParameter(String),
}

impl fmt::Display for PresetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetError::Unknown(name) => write!(f, "unknown preset '{name}'"),
            PresetError::BadParameter(name) => write!(f, "bad preset parameter in '{name}'"),
        }
    }
}

/// Build a presentation from its preset name.
pub fn preset(name: &str) -> Result<ModulePresentation, PresetError> {
    let fam = GroupFamily::Orthogonal;
    let built = if name == "sym2" {
        ModulePresentation::new(
            fam,
            alloc::vec![2],
            alloc::vec![Generator {
                level: 1,
                vector: SparseVec::unit(0),
            }],
        )
    } else if name == "alt2" {
        ModulePresentation::new(
            fam,
            alloc::vec![2],
            alloc::vec![Generator {
                level: 2,
                vector: SparseVec::from_int_entries(&[(1, 1), (2, -1)]),
            }],
        )
    } else if name == "torsion0" {
        ModulePresentation::with_relations(
            fam,
            alloc::vec![0],
            alloc::vec![Generator {
                level: 0,
                vector: SparseVec::unit(0),
            }],
            alloc::vec![Generator {
                level: 1,
                vector: SparseVec::unit(0),
            }],
        )
    } else if let Some(rest) = name.strip_prefix("free:") {
        let r: u32 = rest
            .parse()
            .map_err(|_| PresetError::BadParameter(String::from(name)))?;
        ModulePresentation::new(fam, alloc::vec![r], free_generators(r))
    } else if let Some(rest) = name.strip_prefix("pointwise:") {
        let k: u32 = rest
            .parse()
            .map_err(|_| PresetError::BadParameter(String::from(name)))?;
        if k == 0 {
            return Err(PresetError::BadParameter(String::from(name)));
        }
        ModulePresentation::new(
            fam,
            alloc::vec![2 * k],
            alloc::vec![Generator {
                level: 1,
                vector: SparseVec::unit(0),
            }],
        )
    } else if let Some(rest) = name.strip_prefix("schur:") {
        let lam: Partition = rest
            .parse()
            .map_err(|_| PresetError::BadParameter(String::from(name)))?;
        ModulePresentation::new(fam, alloc::vec![lam.size()], schur_generators(&lam))
    } else {
        return Err(PresetError::Unknown(String::from(name)));
    };
    Ok(built.expect("preset presentations are valid"))
}

/// Every basis tensor at every level `1..=r` (the whole level-`d` ambient),
/// so the closure is the full tensor power at every level.
fn free_generators(r: u32) -> Vec<Generator> {
    if r == 0 {
        return alloc::vec![Generator {
            level: 0,
            vector: SparseVec::unit(0),
        }];
    }
    let mut gens = Vec::new();
    for d in 1..=r {
        let amb = Ambient::new(&[r], d);
        for local in 0..amb.dim() {
            gens.push(Generator {
                level: d,
                vector: SparseVec::unit(local),
            });
        }
    }
    gens
}

/// A basis of the Young symmetrizer image inside the tensor power of each
/// level from the number of rows (where the functor first becomes nonzero)
/// up to the degree.
fn schur_generators(lam: &Partition) -> Vec<Generator> {
    let r = lam.size();
    if r == 0 {
        return alloc::vec![Generator {
            level: 0,
            vector: SparseVec::unit(0),
        }];
    }
    let mut gens = Vec::new();
    for d in lam.len() as u32..=r {
        for vector in young_symmetrizer_image(lam, d) {
            gens.push(Generator { level: d, vector });
        }
    }
    gens
}

/// Basis of the image of the Young symmetrizer (row symmetrization followed
/// by signed column antisymmetrization, positions filled row by row) acting
/// on place permutations of `(C^d)^{⊗|lam|}`.
fn young_symmetrizer_image(lam: &Partition, d: u32) -> Vec<SparseVec> {
    let r = lam.size() as usize;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut next = 0usize;
    for &part in lam.parts() {
        rows.push((next..next + part as usize).collect());
        next += part as usize;
    }
    let conj = lam.conjugate();
    let mut cols: Vec<Vec<usize>> = Vec::new();
    for (j, &height) in conj.parts().iter().enumerate() {
        cols.push((0..height as usize).map(|i| rows[i][j]).collect());
    }

    let row_perms = block_permutations(&rows, r);
    let col_perms: Vec<(Vec<usize>, i64)> = block_permutations(&cols, r)
        .into_iter()
        .map(|p| {
            let sign = permutation_sign(&p);
            (p, sign)
        })
        .collect();

    let amb = Ambient::new(&[r as u32], d);
    let mut span = Span::new();
    let mut out = Vec::new();
    for local in 0..amb.dim() {
        let word = amb.word(0, local);
        let mut terms = Vec::with_capacity(row_perms.len() * col_perms.len());
        for p in &row_perms {
            let symmetrized = apply_place_permutation(p, &word);
            for (q, sign) in &col_perms {
                let final_word = apply_place_permutation(q, &symmetrized);
                terms.push((
                    amb.index_of_word(0, &final_word),
                    super::linalg::Scalar::from(num_bigint::BigInt::from(*sign)),
                ));
            }
        }
        let image = SparseVec::from_entries(terms);
        if !image.is_zero() && span.insert(&image).is_some() {
            out.push(image);
        }
    }
    out
}

fn apply_place_permutation(perm: &[usize], word: &[u32]) -> Vec<u32> {
    perm.iter().map(|&p| word[p]).collect()
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `0..r` that preserve each block, as full arrays.
fn block_permutations(blocks: &[Vec<usize>], r: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = alloc::vec![(0..r).collect()];
    for block in blocks {
        let orderings = orderings_of(block);
        let mut next = Vec::with_capacity(perms.len() * orderings.len());
        for perm in &perms {
            for ordering in &orderings {
                let mut p = perm.clone();
                for (slot, &target) in block.iter().zip(ordering.iter()) {
                    p[*slot] = target;
                }
                next.push(p);
            }
        }
        perms = next;
    }
    perms
}

fn orderings_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        let mut rest: Vec<usize> = items.to_vec();
        rest.remove(i);
        for mut tail in orderings_of(&rest) {
            let mut ordering = alloc::vec![first];
            ordering.append(&mut tail);
            out.push(ordering);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preset_names_parse() {
        assert!(preset("sym2").is_ok());
        assert!(preset("alt2").is_ok());
        assert!(preset("torsion0").is_ok());
        assert!(preset("free:3").is_ok());
        assert!(preset("pointwise:2").is_ok());
        assert!(preset("schur:[2,1]").is_ok());
        assert!(matches!(preset("nope"), Err(PresetError::Unknown(_))));
        assert!(matches!(
            preset("free:x"),
            Err(PresetError::BadParameter(_))
        ));
        assert!(matches!(
            preset("pointwise:0"),
            Err(PresetError::BadParameter(_))
        ));
    }

    #[test]
    fn young_symmetrizer_images_have_schur_dimensions() {
        for (parts, d, expected) in [
            (alloc::vec![2u32], 2u32, 3usize),
            (alloc::vec![1, 1], 2, 1),
            (alloc::vec![2, 1], 2, 2),
            (alloc::vec![2, 1], 3, 8),
            (alloc::vec![3], 2, 4),
        ] {
            let lam = Partition::new(parts).unwrap();
            let basis = young_symmetrizer_image(&lam, d);
            assert_eq!(basis.len(), expected, "lam = {lam}, d = {d}");
        }
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        let blocks = alloc::vec![alloc::vec![0, 1], alloc::vec![2]];
        assert_eq!(block_permutations(&blocks, 3).len(), 2);
        assert_eq!(orderings_of(&[0, 1, 2]).len(), 6);
    }
}
