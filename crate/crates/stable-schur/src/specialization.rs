//! Specialization from a stable category to a fixed finite rank.
//!
//! At level `n` the injective `S_lam` specializes to the Schur functor of
//! the ambient space (dimension `n` for the orthogonal family, `2n` for the
//! symplectic one, two spaces of dimension `n` for the general linear one),
//! while the simple `L^lam` specializes to the finite-rank irreducible with
//! the same label when the label is admissible and to zero otherwise.
//! Dimensions of the finite-rank irreducibles are obtained by solving the
//! unitriangular branching system; the alternating-sum version that stays
//! valid below the stable range is [`Specializer::euler_specialization`].

use alloc::collections::BTreeMap;
use core::fmt;

use crate::partitions::{schur_dim, schur_dim_poly, Partition};
use crate::poly::QPoly;
use crate::stable_rep::{Basis, Branching, ClassError, GroupFamily, Label, StableClass};

/// Errors from specialization queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    /// Label shape does not match the family.
    LabelShape,
    /// The label does not survive specialization at the requested level.
    Inadmissible { level: u32 },
    /// Propagated class arithmetic error.
    Class(ClassError),
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::LabelShape => f.write_str("label shape does not match the family"),
            SpecError::Inadmissible { level } => {
                write!(f, "label is not admissible at level {level}")
            }
            SpecError::Class(e) => write!(f, "{e}"),
        }
    }
}

impl From<ClassError> for SpecError {
    fn from(e: ClassError) -> Self {
        SpecError::Class(e)
    }
}

/// Whether the simple with this label survives specialization at level `n`.
///
/// Orthogonal: the first two column lengths fit in the rank. Symplectic:
/// the number of rows fits. General linear: the two labels together fit.
pub fn admissible(family: GroupFamily, label: &Label, n: u32) -> Result<bool, SpecError> {
    match (family, label) {
        (GroupFamily::Orthogonal, Label::Single(lam)) => {
            let conj = lam.conjugate();
            Ok(conj.part(0) + conj.part(1) <= n)
        }
        (GroupFamily::Symplectic, Label::Single(lam)) => Ok(lam.len() as u32 <= n),
        (GroupFamily::GeneralLinear, Label::Pair(alpha, beta)) => {
            Ok((alpha.len() + beta.len()) as u32 <= n)
        }
        _ => Err(SpecError::LabelShape),
    }
}

/// Smallest level at which the label is admissible.
pub fn admissible_bound(family: GroupFamily, label: &Label) -> Result<u32, SpecError> {
    match (family, label) {
        (GroupFamily::Orthogonal, Label::Single(lam)) => {
            let conj = lam.conjugate();
            Ok(conj.part(0) + conj.part(1))
        }
        (GroupFamily::Symplectic, Label::Single(lam)) => Ok(lam.len() as u32),
        (GroupFamily::GeneralLinear, Label::Pair(alpha, beta)) => {
            Ok((alpha.len() + beta.len()) as u32)
        }
        _ => Err(SpecError::LabelShape),
    }
}

/// A simple label that survived specialization at a fixed level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FiniteIrrepLabel {
    pub family: GroupFamily,
    pub level: u32,
    pub label: Label,
}

impl fmt::Display for FiniteIrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V{}({}_{})", self.label, self.family, self.level)
    }
}

/// Dimension of the specialized injective `S_lam` at level `n`: the plain
/// hook content count in the ambient dimension of the family.
pub fn injective_dim(family: GroupFamily, label: &Label, n: u32) -> Result<u64, SpecError> {
    match (family, label) {
        (GroupFamily::Orthogonal, Label::Single(lam)) => Ok(schur_dim(lam, n)),
        (GroupFamily::Symplectic, Label::Single(lam)) => Ok(schur_dim(lam, 2 * n)),
        (GroupFamily::GeneralLinear, Label::Pair(alpha, beta)) => {
            Ok(schur_dim(alpha, n) * schur_dim(beta, n))
        }
        _ => Err(SpecError::LabelShape),
    }
}

/// The same dimension as a polynomial in the level.
pub fn injective_dim_poly(family: GroupFamily, label: &Label) -> Result<QPoly, SpecError> {
    match (family, label) {
        (GroupFamily::Orthogonal, Label::Single(lam)) => Ok(schur_dim_poly(lam)),
        (GroupFamily::Symplectic, Label::Single(lam)) => Ok(schur_dim_poly(lam).compose_scale(2)),
        (GroupFamily::GeneralLinear, Label::Pair(alpha, beta)) => {
            Ok(schur_dim_poly(alpha).mul(&schur_dim_poly(beta)))
        }
        _ => Err(SpecError::LabelShape),
    }
}

/// Confidence in a dimension produced by the branching solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimValidity {
    /// Level is at least twice the label size: the solve reproduces the
    /// classical stable branching and the value is exact.
    Validated,
    /// Below the stable range the solve still runs but small-rank
    /// modification effects are not accounted for.
    StableRangeUnverified,
}

/// A solved irreducible dimension together with its confidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrrepDim {
    pub dim: i64,
    pub validity: DimValidity,
}

/// Specialization queries for one family, with memoized branching rows and
/// solved dimensions. Own one per thread of work.
pub struct Specializer {
    branching: Branching,
    dims: BTreeMap<(Label, u32), i64>,
}

impl Specializer {
    pub fn new(family: GroupFamily) -> Self {
        Specializer {
            branching: Branching::new(family),
            dims: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> GroupFamily {
        self.branching.family()
    }

    /// Access to the underlying branching matrix and its caches.
    pub fn branching(&mut self) -> &mut Branching {
        &mut self.branching
    }

    /// `Some` exactly when the label is admissible at level `n`.
    pub fn specialize_simple(
        &self,
        label: &Label,
        n: u32,
    ) -> Result<Option<FiniteIrrepLabel>, SpecError> {
        let family = self.family();
        Ok(admissible(family, label, n)?.then(|| FiniteIrrepLabel {
            family,
            level: n,
            label: label.clone(),
        }))
    }

    /// Dimension of the finite-rank irreducible with this label, solved from
    /// the unitriangular system `injective_dim(lam, n) = sum_mu b(lam, mu) *
    /// dim(mu, n)` by induction on the label size. Labels that die at level
    /// `n` contribute zero to the system.
    ///
    /// Rejects an inadmissible target label. The flag is
    /// [`DimValidity::Validated`] once `n` is at least twice the label size.
    pub fn stable_irrep_dim(&mut self, label: &Label, n: u32) -> Result<IrrepDim, SpecError> {
        if !admissible(self.family(), label, n)? {
            return Err(SpecError::Inadmissible { level: n });
        }
        let dim = self.solved_dim(label, n)?;
        let validity = if n >= 2 * label.size() {
            DimValidity::Validated
        } else {
            DimValidity::StableRangeUnverified
        };
        if validity == DimValidity::Validated {
            debug_assert!(dim >= 0, "stable-range dimensions are nonnegative");
        }
        Ok(IrrepDim { dim, validity })
    }

    fn solved_dim(&mut self, label: &Label, n: u32) -> Result<i64, SpecError> {
        if let Some(&dim) = self.dims.get(&(label.clone(), n)) {
            return Ok(dim);
        }
        let total = injective_dim(self.family(), label, n)? as i64;
        let row = self.branching.socle_row(label)?;
        let mut dim = total;
        for (mu, b) in row {
            if &mu == label {
                continue;
            }
            if admissible(self.family(), &mu, n)? {
                dim -= b * self.solved_dim(&mu, n)?;
            }
        }
        self.dims.insert((label.clone(), n), dim);
        Ok(dim)
    }

    /// Alternating sum of injective dimensions against the inverse branching
    /// matrix: the Euler characteristic of the derived specialization of the
    /// simple. Defined at every level; equals the honest irreducible
    /// dimension wherever the derived terms vanish.
    pub fn euler_specialization(&mut self, label: &Label, n: u32) -> Result<i64, SpecError> {
        let family = self.family();
        if !label.fits(family) {
            return Err(SpecError::LabelShape);
        }
        let class = StableClass::generator(family, Basis::Simple, label.clone())?;
        let inj = self.branching.simples_to_injectives(&class)?;
        let mut total: i64 = 0;
        for (mu, coeff) in inj.terms() {
            total += coeff * injective_dim(family, mu, n)? as i64;
        }
        Ok(total)
    }

    /// Least level `N` from which [`euler_specialization`] agrees with the
    /// specialized dimension (zero below admissibility) at every level up to
    /// the horizon, and never less than the admissibility bound.
    ///
    /// `horizon` defaults to `max(2 |label|, bound) + 4`.
    ///
    /// [`euler_specialization`]: Specializer::euler_specialization
    pub fn vanishing_degree(
        &mut self,
        label: &Label,
        horizon: Option<u32>,
    ) -> Result<u32, SpecError> {
        let bound = admissible_bound(self.family(), label)?;
        let horizon = horizon.unwrap_or_else(|| (2 * label.size()).max(bound) + 4);
        let mut first_agreeing = 0;
        for n in 0..=horizon {
            let euler = self.euler_specialization(label, n)?;
            let dim = if admissible(self.family(), label, n)? {
                self.stable_irrep_dim(label, n)?.dim
            } else {
                0
            };
            if euler != dim {
                first_agreeing = n + 1;
            }
        }
        Ok(first_agreeing.max(bound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::partitions_of;
    use alloc::vec::Vec;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(parts: &[u32]) -> Label {
        Label::Single(p(parts))
    }

    #[test]
    fn admissibility_follows_the_column_rule() {
        let fam = GroupFamily::Orthogonal;
        // (1,1,1) has column lengths (3); 3 + 0 <= 3.
        assert!(admissible(fam, &single(&[1, 1, 1]), 3).unwrap());
        assert!(!admissible(fam, &single(&[1, 1]), 1).unwrap());
        assert!(!admissible(fam, &single(&[2, 2]), 3).unwrap());
        assert!(admissible(fam, &single(&[2, 2]), 4).unwrap());

        assert!(admissible(GroupFamily::Symplectic, &single(&[3]), 1).unwrap());
        assert!(!admissible(GroupFamily::Symplectic, &single(&[1, 1]), 1).unwrap());

        let gl = Label::Pair(p(&[1]), p(&[2, 1]));
        assert!(admissible(GroupFamily::GeneralLinear, &gl, 3).unwrap());
        assert!(!admissible(GroupFamily::GeneralLinear, &gl, 2).unwrap());
    }

    #[test]
    fn specialize_simple_returns_zero_below_the_bound() {
        let sp = Specializer::new(GroupFamily::Orthogonal);
        assert!(sp.specialize_simple(&single(&[1, 1, 1]), 3).unwrap().is_some());
        assert!(sp.specialize_simple(&single(&[1, 1]), 1).unwrap().is_none());
    }

    #[test]
    fn solved_dimensions_match_the_classical_formulas() {
        let mut sp = Specializer::new(GroupFamily::Orthogonal);
        for n in 4..=10u32 {
            let sym = sp.stable_irrep_dim(&single(&[2]), n).unwrap();
            assert_eq!(sym.dim, (n * (n + 1) / 2 - 1) as i64);
            assert_eq!(sym.validity, DimValidity::Validated);
            let alt = sp.stable_irrep_dim(&single(&[1, 1]), n).unwrap();
            assert_eq!(alt.dim, (n * (n - 1) / 2) as i64);
            let vec = sp.stable_irrep_dim(&single(&[1]), n).unwrap();
            assert_eq!(vec.dim, n as i64);
        }

        // Symplectic: level n means rank 2n; traceless wedge square.
        let mut sp = Specializer::new(GroupFamily::Symplectic);
        for n in 2..=6u32 {
            let alt = sp.stable_irrep_dim(&single(&[1, 1]), n).unwrap();
            assert_eq!(alt.dim, (n * (2 * n - 1) - 1) as i64);
        }
    }

    #[test]
    fn validity_flag_tracks_the_stable_range() {
        let mut sp = Specializer::new(GroupFamily::Orthogonal);
        let low = sp.stable_irrep_dim(&single(&[2]), 3).unwrap();
        assert_eq!(low.validity, DimValidity::StableRangeUnverified);
        let high = sp.stable_irrep_dim(&single(&[2]), 4).unwrap();
        assert_eq!(high.validity, DimValidity::Validated);
        assert_eq!(
            sp.stable_irrep_dim(&single(&[2]), 1),
            Err(SpecError::Inadmissible { level: 1 })
        );
    }

    #[test]
    fn euler_specialization_frozen_values() {
        let mut sp = Specializer::new(GroupFamily::Orthogonal);
        assert_eq!(sp.euler_specialization(&single(&[2]), 1).unwrap(), 0);
        assert_eq!(sp.euler_specialization(&single(&[2]), 0).unwrap(), -1);
        for n in 0..=6 {
            assert_eq!(sp.euler_specialization(&single(&[]), n).unwrap(), 1);
            assert_eq!(sp.euler_specialization(&single(&[1]), n).unwrap(), n as i64);
        }
    }

    #[test]
    fn vanishing_degrees_frozen_values() {
        let mut sp = Specializer::new(GroupFamily::Orthogonal);
        assert_eq!(sp.vanishing_degree(&single(&[]), None).unwrap(), 0);
        assert_eq!(sp.vanishing_degree(&single(&[1]), None).unwrap(), 1);
        assert_eq!(sp.vanishing_degree(&single(&[1, 1]), None).unwrap(), 2);
        assert_eq!(sp.vanishing_degree(&single(&[2]), None).unwrap(), 2);
    }

    #[test]
    fn branching_identity_reconstructs_injective_dimensions() {
        // sum_mu b(lam, mu) dim(mu, n) = injective_dim(lam, n) in the stable
        // range, for every family.
        for family in GroupFamily::ALL {
            let mut sp = Specializer::new(family);
            let labels: Vec<Label> = match family {
                GroupFamily::GeneralLinear => partitions_of(2)
                    .into_iter()
                    .flat_map(|a| {
                        partitions_of(1).into_iter().map(move |b| Label::Pair(a.clone(), b))
                    })
                    .collect(),
                _ => partitions_of(3).into_iter().map(Label::Single).collect(),
            };
            for label in labels {
                for n in (2 * label.size())..=8 {
                    let row = sp.branching().socle_row(&label).unwrap();
                    let mut total = 0i64;
                    for (mu, b) in row {
                        total += b * sp.stable_irrep_dim(&mu, n).unwrap().dim;
                    }
                    assert_eq!(
                        total,
                        injective_dim(family, &label, n).unwrap() as i64,
                        "family {family}, label {label}, n = {n}"
                    );
                }
            }
        }
    }
}
