//! Exact-rational realization of finitely generated modules of compatible
//! orthogonal-group representations: tensor-power ambients, orbit-span
//! closure level by level, transition maps, torsion detection, and colimit
//! invariants.
//!
//! Everything here is a desk-scale oracle for the combinatorial layer: the
//! same dimensions that `stable_rep`, `specialization`, and `kgroup`
//! predict are recomputed from honest group actions on concrete vectors.

pub mod action;
pub mod linalg;
pub mod presets;

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::stable_rep::GroupFamily;

pub use action::{block_invariants, zero_weight_basis, Ambient};
pub use linalg::{kernel_from_images, Scalar, SparseVec, Span};

/// Errors from presentation validation and engine computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    /// Only the orthogonal family has an engine backend.
    UnsupportedFamily(GroupFamily),
    /// A generator or relation vector does not fit its level's ambient.
    BadGenerator { position: usize },
    /// The torsion horizon must be at least one.
    InvalidHorizon,
    /// The working level is below `target + 2 * max_degree + 1`.
    WorkingLevelTooLow { required: u32 },
    /// The two-level invariant filter gave different dimensions at
    /// consecutive working levels; the result cannot be trusted.
    StabilizationFailure { levels: (u32, u32), dims: (u64, u64) },
    /// A relation vector is not contained in the module at some level, so
    /// the quotient bookkeeping would be meaningless.
    RelationsNotContained { level: u32 },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::UnsupportedFamily(fam) => {
                write!(f, "no engine backend for family {fam}")
            }
            EngineError::BadGenerator { position } => {
                write!(f, "generator {position} does not fit its ambient space")
            }
            EngineError::InvalidHorizon => f.write_str("horizon must be at least 1"),
            EngineError::WorkingLevelTooLow { required } => {
                write!(f, "working level must be at least {required}")
            }
            EngineError::StabilizationFailure { levels, dims } => write!(
                f,
                "invariant dimension did not stabilize: {} at working level {}, {} at {}",
                dims.0, levels.0, dims.1, levels.1
            ),
            EngineError::RelationsNotContained { level } => {
                write!(f, "relations leave the module span at level {level}")
            }
        }
    }
}

/// A generating vector at a fixed level of the ambient sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub level: u32,
    pub vector: SparseVec,
}

/// A finitely generated module presented inside `⊕ T^{r_i}`: the smallest
/// compatible family of subspaces containing the generators. An optional
/// second generating set presents a quotient: all dimensions are reported
/// for (module generated by `generators`) / (module generated by
/// `relations`), which must be contained in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    family: GroupFamily,
    summands: Vec<u32>,
    generators: Vec<Generator>,
    relations: Vec<Generator>,
}

impl ModulePresentation {
    pub fn new(
        family: GroupFamily,
        summands: Vec<u32>,
        generators: Vec<Generator>,
    ) -> Result<Self, EngineError> {
        Self::with_relations(family, summands, generators, Vec::new())
    }

    pub fn with_relations(
        family: GroupFamily,
        summands: Vec<u32>,
        generators: Vec<Generator>,
        relations: Vec<Generator>,
    ) -> Result<Self, EngineError> {
        if family != GroupFamily::Orthogonal {
            return Err(EngineError::UnsupportedFamily(family));
        }
        for (position, g) in generators.iter().chain(relations.iter()).enumerate() {
            let amb = Ambient::new(&summands, g.level);
            if g.vector.max_index().map_or(false, |i| i >= amb.dim()) {
                return Err(EngineError::BadGenerator { position });
            }
        }
        Ok(ModulePresentation {
            family,
            summands,
            generators,
            relations,
        })
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn summands(&self) -> &[u32] {
        &self.summands
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Generator] {
        &self.relations
    }

    pub fn max_degree(&self) -> u32 {
        self.summands.iter().copied().max().unwrap_or(0)
    }
}

/// Torsion dimensions certified against transitions up to a horizon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub level: u32,
    pub dim: u64,
    pub certified_up_to: u32,
}

/// Invariants of the colimit at a target level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    pub target: u32,
    pub working_level: u32,
    pub dim: u64,
}

/// Saturation bookkeeping at one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationReport {
    pub level: u32,
    pub working_level: u32,
    pub saturation_dim: u64,
    pub module_dim: u64,
    pub torsion_dim: u64,
    /// `saturation - (module - torsion)`: dimension the saturation adds.
    pub cokernel: i64,
}

/// Evaluator for one presentation, caching level bases.
pub struct Engine {
    presentation: ModulePresentation,
    module_levels: BTreeMap<u32, Vec<SparseVec>>,
    relation_levels: BTreeMap<u32, Vec<SparseVec>>,
    containment_checked: BTreeMap<u32, bool>,
}

impl Engine {
    pub fn new(presentation: ModulePresentation) -> Self {
        Engine {
            presentation,
            module_levels: BTreeMap::new(),
            relation_levels: BTreeMap::new(),
            containment_checked: BTreeMap::new(),
        }
    }

    pub fn presentation(&self) -> &ModulePresentation {
        &self.presentation
    }

    pub fn ambient(&self, level: u32) -> Ambient {
        Ambient::new(&self.presentation.summands, level)
    }

    /// Echelon basis of the module's subspace at this level: pushforwards of
    /// all generators from levels at most `level`, closed under the group.
    pub fn module_basis(&mut self, level: u32) -> &[SparseVec] {
        if !self.module_levels.contains_key(&level) {
            let basis = self.evaluate(level, false);
            self.module_levels.insert(level, basis);
        }
        self.module_levels.get(&level).expect("cached")
    }

    fn relation_basis(&mut self, level: u32) -> &[SparseVec] {
        if !self.relation_levels.contains_key(&level) {
            let basis = self.evaluate(level, true);
            self.relation_levels.insert(level, basis);
        }
        self.relation_levels.get(&level).expect("cached")
    }

    fn evaluate(&self, level: u32, relations: bool) -> Vec<SparseVec> {
        let amb = self.ambient(level);
        let gens = if relations {
            &self.presentation.relations
        } else {
            &self.presentation.generators
        };
        let start: Vec<SparseVec> = gens
            .iter()
            .filter(|g| g.level <= level)
            .map(|g| {
                let from = Ambient::new(&self.presentation.summands, g.level);
                from.include_into(&g.vector, &amb)
            })
            .collect();
        closure(&amb, start)
    }

    /// Both bases at a level, with the quotient containment check.
    fn level_pair(&mut self, level: u32) -> Result<(), EngineError> {
        self.module_basis(level);
        if self.presentation.relations.is_empty() {
            return Ok(());
        }
        self.relation_basis(level);
        if !self.containment_checked.contains_key(&level) {
            let mut span = Span::new();
            for v in self.module_levels.get(&level).expect("cached") {
                span.insert(v);
            }
            let ok = self
                .relation_levels
                .get(&level)
                .expect("cached")
                .iter()
                .all(|v| span.contains(v));
            self.containment_checked.insert(level, ok);
        }
        if *self.containment_checked.get(&level).expect("present") {
            Ok(())
        } else {
            Err(EngineError::RelationsNotContained { level })
        }
    }

    /// Dimension of the presented (quotient) object at this level.
    pub fn level_dim(&mut self, level: u32) -> Result<u64, EngineError> {
        self.level_pair(level)?;
        let m = self.module_levels.get(&level).expect("cached").len() as u64;
        let n = self
            .relation_levels
            .get(&level)
            .map_or(0, |b| b.len() as u64);
        Ok(m - n)
    }

    /// Hilbert function table: dimensions at levels `0..=n_max`.
    pub fn hf_table(&mut self, n_max: u32) -> Result<Vec<u64>, EngineError> {
        (0..=n_max).map(|n| self.level_dim(n)).collect()
    }

    /// Images of the level-`n` module basis under the standard inclusion
    /// into level `n + 1`, as ambient vectors there.
    pub fn transition_images(&mut self, level: u32) -> Vec<SparseVec> {
        let amb = self.ambient(level);
        let target = self.ambient(level + 1);
        self.module_basis(level)
            .iter()
            .map(|v| amb.include_into(v, &target))
            .collect()
    }

    /// Dimension of the subspace of level-`n` elements that die in some
    /// higher level up to `n + horizon` (for quotients: land in the
    /// relation module). Transitions of compatible families are nested, so
    /// the top of the window decides.
    pub fn torsion_report(&mut self, level: u32, horizon: u32) -> Result<TorsionReport, EngineError> {
        if horizon == 0 {
            return Err(EngineError::InvalidHorizon);
        }
        let top = level + horizon;
        self.level_pair(level)?;
        self.level_pair(top)?;

        let amb = self.ambient(level);
        let amb_top = self.ambient(top);
        let mut target = Span::new();
        if let Some(rel) = self.relation_levels.get(&top) {
            for v in rel {
                target.insert(v);
            }
        }
        let images: Vec<SparseVec> = self
            .module_levels
            .get(&level)
            .expect("cached")
            .iter()
            .map(|v| target.reduce(&amb.include_into(v, &amb_top)))
            .collect();
        let dying = kernel_from_images(images).len() as u64;
        let rel_here = self
            .relation_levels
            .get(&level)
            .map_or(0, |b| b.len() as u64);
        Ok(TorsionReport {
            level,
            dim: dying - rel_here,
            certified_up_to: horizon,
        })
    }

    /// Smallest admissible working level for a target.
    pub fn working_level_floor(&self, target: u32) -> u32 {
        target + 2 * self.presentation.max_degree() + 1
    }

    /// Dimension of the colimit invariants at the target level, computed by
    /// the two-level filter at the working level `K` (invariant at `K`,
    /// image invariant at `K + 1`), then re-checked at `K + 1` / `K + 2`.
    /// A disagreement is an error, never a silent answer.
    pub fn gamma_report(
        &mut self,
        target: u32,
        working: Option<u32>,
    ) -> Result<GammaReport, EngineError> {
        let floor = self.working_level_floor(target);
        let working = working.unwrap_or(floor);
        if working < floor {
            return Err(EngineError::WorkingLevelTooLow { required: floor });
        }
        let first = self.filtered_invariants(target, working)?;
        let second = self.filtered_invariants(target, working + 1)?;
        if first != second {
            return Err(EngineError::StabilizationFailure {
                levels: (working, working + 1),
                dims: (first, second),
            });
        }
        Ok(GammaReport {
            target,
            working_level: working,
            dim: first,
        })
    }

    /// One round of the two-level filter: vectors invariant under the
    /// bottom coordinate block at the working level whose image at the next
    /// level is again block-invariant (modulo relations).
    fn filtered_invariants(&mut self, target: u32, working: u32) -> Result<u64, EngineError> {
        self.level_pair(working)?;
        self.level_pair(working + 1)?;

        let amb = self.ambient(working);
        let amb_up = self.ambient(working + 1);

        let w0 = block_invariants(
            &amb,
            self.module_levels.get(&working).expect("cached"),
            target,
        );
        let w1 = block_invariants(
            &amb_up,
            self.module_levels.get(&(working + 1)).expect("cached"),
            target,
        );

        let mut allowed = Span::new();
        for v in &w1 {
            allowed.insert(v);
        }
        if let Some(rel) = self.relation_levels.get(&(working + 1)) {
            for v in rel {
                allowed.insert(v);
            }
        }

        let images: Vec<SparseVec> = w0
            .iter()
            .map(|v| allowed.reduce(&amb.include_into(v, &amb_up)))
            .collect();
        let filtered = kernel_from_images(images).len() as u64;

        let rel_inv = match self.relation_levels.get(&working) {
            Some(rel) if !rel.is_empty() => block_invariants(&amb, rel, target).len() as u64,
            _ => 0,
        };
        Ok(filtered - rel_inv)
    }

    /// Saturation bookkeeping: the colimit invariant dimension at the
    /// level, the honest level dimension, the torsion there, and how much
    /// the saturation adds.
    pub fn saturation_report(
        &mut self,
        level: u32,
        working: Option<u32>,
        horizon: u32,
    ) -> Result<SaturationReport, EngineError> {
        let gamma = self.gamma_report(level, working)?;
        let module_dim = self.level_dim(level)?;
        let torsion = self.torsion_report(level, horizon)?;
        Ok(SaturationReport {
            level,
            working_level: gamma.working_level,
            saturation_dim: gamma.dim,
            module_dim,
            torsion_dim: torsion.dim,
            cokernel: gamma.dim as i64 - (module_dim as i64 - torsion.dim as i64),
        })
    }
}

/// Close a starting set of vectors under the orthogonal group at this
/// level: repeatedly apply the Lie chain generators and one reflection,
/// inserting new directions until the span is stationary.
fn closure(amb: &Ambient, start: Vec<SparseVec>) -> Vec<SparseVec> {
    let mut span = Span::new();
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for v in start {
        if let Some(row) = span.insert(&v) {
            queue.push_back(row);
        }
    }
    let full = amb.dim();
    let level = amb.level();
    'outer: while let Some(v) = queue.pop_front() {
        if span.dim() == full {
            break;
        }
        let mut images: Vec<SparseVec> = Vec::new();
        if level >= 2 {
            for a in 0..level - 1 {
                images.push(amb.lie_image(&v, a, a + 1));
            }
        }
        if level >= 1 {
            images.push(amb.reflection_image(&v, 0));
        }
        for img in images {
            if img.is_zero() {
                continue;
            }
            if let Some(row) = span.insert(&img) {
                queue.push_back(row);
                if span.dim() == full {
                    break 'outer;
                }
            }
        }
    }
    span.basis()
}

/// Dimension of the invariants of the full orthogonal group at one level on
/// `(C^level)^{⊗degree}`, computed at that single level (no colimit
/// filter): the joint zero-weight space of the torus rotations is assembled
/// combinatorially, then cut by the remaining chain generators and one
/// reflection.
pub fn single_level_invariants(degree: u32, level: u32) -> u64 {
    if level == 0 {
        return (degree == 0) as u64;
    }
    let z = zero_weight_basis(degree, level);
    if z.is_empty() {
        return 0;
    }
    let amb = Ambient::new(&[degree], level);
    // Chain links not already in the torus: those starting at odd
    // coordinates bridge consecutive pairs.
    let links: Vec<(u32, u32)> = (0..level - 1)
        .filter(|a| a % 2 == 1)
        .map(|a| (a, a + 1))
        .collect();
    let one = Scalar::from(num_bigint::BigInt::from(1));
    let minus_one = -one.clone();
    let images: Vec<SparseVec> = z
        .iter()
        .map(|v| {
            let mut stacked = SparseVec::zero();
            for (k, (a, b)) in links.iter().enumerate() {
                stacked =
                    stacked.add_scaled(&amb.lie_image(v, *a, *b).shifted(k * amb.dim()), &one);
            }
            let refl = amb.reflection_image(v, 0).add_scaled(v, &minus_one);
            stacked = stacked.add_scaled(&refl.shifted(links.len() * amb.dim()), &one);
            stacked
        })
        .collect();
    kernel_from_images(images).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, schur_dim, syt_count, Partition};
    use crate::stable_rep::{Branching, Label};

    fn free_module(r: u32) -> Engine {
        Engine::new(presets::preset(&alloc::format!("free:{r}")).unwrap())
    }

    #[test]
    fn closure_of_a_symmetric_square_generator() {
        let mut e = Engine::new(presets::preset("sym2").unwrap());
        let dims = e.hf_table(5).unwrap();
        assert_eq!(dims, alloc::vec![0, 1, 3, 6, 10, 15]);
    }

    #[test]
    fn closure_of_an_alternating_generator() {
        let mut e = Engine::new(presets::preset("alt2").unwrap());
        let dims = e.hf_table(5).unwrap();
        assert_eq!(dims, alloc::vec![0, 0, 1, 3, 6, 10]);
    }

    #[test]
    fn free_modules_fill_the_ambient() {
        for r in 0..=3u32 {
            let mut e = free_module(r);
            for n in 0..=4u32 {
                assert_eq!(
                    e.level_dim(n).unwrap(),
                    (n as u64).pow(r),
                    "r = {r}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn pointwise_powers_close_to_full_symmetric_powers() {
        // One vector e_0^{⊗2k} from level 1 generates the whole symmetric
        // power, even though the ambient has degree 2k.
        for k in 1..=2u32 {
            let mut e = Engine::new(presets::preset(&alloc::format!("pointwise:{k}")).unwrap());
            for n in 0..=3u32 {
                let expected = crate::poly::binomial(n as u64 + 2 * k as u64 - 1, 2 * k as u64);
                assert_eq!(
                    num_bigint::BigInt::from(e.level_dim(n).unwrap()),
                    expected,
                    "k = {k}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn schur_presets_realize_hook_content_dimensions() {
        for r in 1..=3u32 {
            for lam in partitions_of(r) {
                let name = alloc::format!("schur:{lam}");
                let mut e = Engine::new(presets::preset(&name).unwrap());
                for n in 0..=4u32 {
                    assert_eq!(
                        e.level_dim(n).unwrap(),
                        schur_dim(&lam, n),
                        "lam = {lam}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn transitions_are_injective_and_land_in_the_next_level() {
        let mut e = Engine::new(presets::preset("sym2").unwrap());
        for n in 0..=4u32 {
            let images = e.transition_images(n);
            let mut span = Span::new();
            for v in e.module_basis(n + 1).to_vec() {
                span.insert(&v);
            }
            let mut image_span = Span::new();
            for img in &images {
                assert!(span.contains(img), "image escapes the module at {n}");
                image_span.insert(img);
            }
            assert_eq!(image_span.dim(), images.len(), "kernel at level {n}");
        }
    }

    #[test]
    fn free_modules_have_no_torsion() {
        for r in 1..=2u32 {
            let mut e = free_module(r);
            for n in 0..=3u32 {
                let t = e.torsion_report(n, 3).unwrap();
                assert_eq!(t.dim, 0);
                assert_eq!(t.certified_up_to, 3);
            }
        }
    }

    #[test]
    fn quotient_preset_is_pure_torsion() {
        let mut e = Engine::new(presets::preset("torsion0").unwrap());
        assert_eq!(e.hf_table(4).unwrap(), alloc::vec![1, 0, 0, 0, 0]);
        assert_eq!(e.torsion_report(0, 3).unwrap().dim, 1);
        assert_eq!(e.torsion_report(1, 3).unwrap().dim, 0);
        // The saturation kills it.
        for n in 0..=2u32 {
            let s = e.saturation_report(n, None, 3).unwrap();
            assert_eq!(s.saturation_dim, 0, "n = {n}");
        }
    }

    #[test]
    fn gamma_of_free_modules_counts_tensor_words() {
        for r in 0..=2u32 {
            let mut e = free_module(r);
            for n in 0..=2u32 {
                let g = e.gamma_report(n, None).unwrap();
                assert_eq!(g.dim, (n as u64).pow(r), "r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn low_working_levels_are_rejected() {
        let mut e = free_module(2);
        assert_eq!(
            e.gamma_report(1, Some(3)).unwrap_err(),
            EngineError::WorkingLevelTooLow { required: 6 }
        );
    }

    #[test]
    fn single_level_invariants_match_pairing_counts() {
        // (2k-1)!! perfect matchings for degree 2k, zero in odd degree.
        let double_factorial = |k: u32| -> u64 { (1..=k).map(|i| (2 * i - 1) as u64).product() };
        for k in 1..=2u32 {
            for level in (2 * k)..=(2 * k + 2) {
                assert_eq!(
                    single_level_invariants(2 * k, level),
                    double_factorial(k),
                    "k = {k}, level = {level}"
                );
            }
        }
        assert_eq!(single_level_invariants(3, 5), 0);
        assert_eq!(single_level_invariants(0, 4), 1);
        // Below the stable range the count can differ; at level 1 only the
        // parity of the degree matters.
        assert_eq!(single_level_invariants(2, 1), 1);
        assert_eq!(single_level_invariants(3, 1), 0);
    }

    #[test]
    fn single_level_invariants_agree_with_the_generic_path() {
        for (degree, level) in [(2u32, 2u32), (2, 3), (3, 3), (4, 4), (2, 4), (4, 5)] {
            let amb = Ambient::new(&[degree], level);
            let units: Vec<SparseVec> = (0..amb.dim()).map(SparseVec::unit).collect();
            let generic = block_invariants(&amb, &units, 0).len() as u64;
            assert_eq!(
                single_level_invariants(degree, level),
                generic,
                "degree = {degree}, level = {level}"
            );
        }
    }

    #[test]
    fn brauer_count_matches_the_branching_matrix() {
        // The same number out of the two layers: engine invariants at one
        // level versus multiplicities of the empty label across the tensor
        // power decomposition.
        let mut br = Branching::new(GroupFamily::Orthogonal);
        for k in 1..=2u32 {
            let mut combinatorial: u64 = 0;
            for lam in partitions_of(2 * k) {
                let b = br
                    .multiplicity(&Label::Single(lam.clone()), &Label::Single(Partition::empty()))
                    .unwrap();
                combinatorial += syt_count(&lam) * b;
            }
            assert_eq!(single_level_invariants(2 * k, 2 * k + 1), combinatorial);
        }
    }

    #[test]
    fn gamma_matches_the_two_level_filter_worked_example() {
        // Target 0 for the full tensor square: the single-level invariant
        // line (the bilinear form) dies under the filter because its image
        // is not invariant one level up.
        let mut e = free_module(2);
        assert_eq!(single_level_invariants(2, 5), 1);
        let g = e.gamma_report(0, Some(5)).unwrap();
        assert_eq!(g.dim, 0);
    }

    #[test]
    fn gamma_of_the_symmetric_square_preset() {
        let mut e = Engine::new(presets::preset("sym2").unwrap());
        let g = e.gamma_report(1, None).unwrap();
        assert_eq!(g.dim, 1);
    }

    #[test]
    fn saturation_of_a_submodule_recovers_the_symmetric_square() {
        // Generated inside T^2 from level 1: the saturation reports the
        // full symmetric square at every level, with no cokernel at the
        // levels in range.
        let mut e = Engine::new(presets::preset("sym2").unwrap());
        for n in 1..=3u32 {
            let s = e.saturation_report(n, None, 3).unwrap();
            assert_eq!(s.saturation_dim, (n as u64) * (n as u64 + 1) / 2);
            assert_eq!(s.torsion_dim, 0);
            assert_eq!(s.cokernel, 0);
        }
    }

    #[test]
    fn presentation_validation() {
        let bad = ModulePresentation::new(
            GroupFamily::Symplectic,
            alloc::vec![1],
            alloc::vec![],
        );
        assert_eq!(
            bad.unwrap_err(),
            EngineError::UnsupportedFamily(GroupFamily::Symplectic)
        );

        let bad = ModulePresentation::new(
            GroupFamily::Orthogonal,
            alloc::vec![1],
            alloc::vec![Generator {
                level: 2,
                vector: SparseVec::unit(2),
            }],
        );
        assert_eq!(bad.unwrap_err(), EngineError::BadGenerator { position: 0 });

        let mut e = free_module(1);
        assert_eq!(
            e.torsion_report(1, 0).unwrap_err(),
            EngineError::InvalidHorizon
        );
    }
}
