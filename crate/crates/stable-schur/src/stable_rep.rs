//! Classes in the Grothendieck groups of the stable categories, and the
//! branching matrix connecting their two natural bases.
//!
//! Each family of classical groups (orthogonal, symplectic, general linear)
//! has a stable category whose Grothendieck group is free on either the
//! injective classes `S_lam` (Schur functors of the standard object) or the
//! simple classes `L^lam`. The two bases are related by a unitriangular
//! matrix of branching multiplicities: `[S_lam] = sum_mu b(lam, mu) [L^mu]`
//! where `b` counts Littlewood-Richardson tableaux against a family-specific
//! set of glue partitions. [`Branching`] computes and memoizes that matrix
//! and performs base change in both directions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::partitions::{
    lr_coefficient, partitions_of, partitions_of_bounded, syt_count, Partition,
};

/// The three families of classical groups with a stable category here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupFamily {
    Orthogonal,
    Symplectic,
    GeneralLinear,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 3] = [
        GroupFamily::Orthogonal,
        GroupFamily::Symplectic,
        GroupFamily::GeneralLinear,
    ];

    pub fn token(self) -> &'static str {
        match self {
            GroupFamily::Orthogonal => "O",
            GroupFamily::Symplectic => "Sp",
            GroupFamily::GeneralLinear => "GL",
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for GroupFamily {
    type Err = ClassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "O" | "o" => Ok(GroupFamily::Orthogonal),
            "Sp" | "sp" | "SP" => Ok(GroupFamily::Symplectic),
            "GL" | "gl" | "Gl" => Ok(GroupFamily::GeneralLinear),
            _ => Err(ClassError::UnknownFamily),
        }
    }
}

/// Index of an injective or simple object: one partition for the orthogonal
/// and symplectic families, an ordered pair for the general linear family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Single(Partition),
    Pair(Partition, Partition),
}

impl Label {
    pub fn single(lam: Partition) -> Self {
        Label::Single(lam)
    }

    pub fn pair(alpha: Partition, beta: Partition) -> Self {
        Label::Pair(alpha, beta)
    }

    pub fn empty(family: GroupFamily) -> Self {
        match family {
            GroupFamily::GeneralLinear => Label::Pair(Partition::empty(), Partition::empty()),
            _ => Label::Single(Partition::empty()),
        }
    }

    /// Total number of cells.
    pub fn size(&self) -> u32 {
        match self {
            Label::Single(lam) => lam.size(),
            Label::Pair(alpha, beta) => alpha.size() + beta.size(),
        }
    }

    /// Whether the label has the shape the family expects.
    pub fn fits(&self, family: GroupFamily) -> bool {
        matches!(
            (self, family),
            (Label::Single(_), GroupFamily::Orthogonal)
                | (Label::Single(_), GroupFamily::Symplectic)
                | (Label::Pair(_, _), GroupFamily::GeneralLinear)
        )
    }

    pub fn as_single(&self) -> Option<&Partition> {
        match self {
            Label::Single(lam) => Some(lam),
            Label::Pair(_, _) => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Partition, &Partition)> {
        match self {
            Label::Single(_) => None,
            Label::Pair(alpha, beta) => Some((alpha, beta)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Single(lam) => write!(f, "{lam}"),
            Label::Pair(alpha, beta) => write!(f, "({alpha},{beta})"),
        }
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which basis a stable class is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    /// Classes of the injective objects `S_lam`.
    Injective,
    /// Classes of the simple objects `L^lam`.
    Simple,
}

impl Basis {
    pub fn token(self) -> &'static str {
        match self {
            Basis::Injective => "injective",
            Basis::Simple => "simple",
        }
    }

    fn letter(self) -> char {
        match self {
            Basis::Injective => 'S',
            Basis::Simple => 'L',
        }
    }
}

/// Errors from class construction and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassError {
    UnknownFamily,
    FamilyMismatch,
    BasisMismatch,
    /// A label whose shape does not match the family (pair where a single
    /// partition is expected, or vice versa).
    LabelShape,
    /// Tensor power shape does not match the family.
    PowerShape,
}

impl fmt::Display for ClassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ClassError::UnknownFamily => "unknown family (expected O, Sp, or GL)",
            ClassError::FamilyMismatch => "classes belong to different families",
            ClassError::BasisMismatch => "class is written in the wrong basis for this operation",
            ClassError::LabelShape => "label shape does not match the family",
            ClassError::PowerShape => {
                "tensor power shape does not match the family (O and Sp take one degree, GL a pair)"
            }
        };
        f.write_str(msg)
    }
}

/// An element of the stable Grothendieck group: a finite integer combination
/// of labels in a fixed basis. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct StableClass {
    family: GroupFamily,
    basis: Basis,
    terms: BTreeMap<Label, i64>,
}

impl StableClass {
    pub fn zero(family: GroupFamily, basis: Basis) -> Self {
        StableClass {
            family,
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        family: GroupFamily,
        basis: Basis,
        terms: impl IntoIterator<Item = (Label, i64)>,
    ) -> Result<Self, ClassError> {
        let mut class = StableClass::zero(family, basis);
        for (label, coeff) in terms {
            class.add_term(label, coeff)?;
        }
        Ok(class)
    }

    /// Single basis element with coefficient one.
    pub fn generator(family: GroupFamily, basis: Basis, label: Label) -> Result<Self, ClassError> {
        StableClass::from_terms(family, basis, [(label, 1)])
    }

    pub fn add_term(&mut self, label: Label, coeff: i64) -> Result<(), ClassError> {
        if !label.fits(self.family) {
            return Err(ClassError::LabelShape);
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(label) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if coeff != 0 {
                    e.insert(coeff);
                }
            }
        }
        Ok(())
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, label: &Label) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    /// Terms in canonical order: by size of the label, then lexicographically.
    pub fn terms(&self) -> impl Iterator<Item = (&Label, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &StableClass) -> Result<StableClass, ClassError> {
        if self.family != other.family {
            return Err(ClassError::FamilyMismatch);
        }
        if self.basis != other.basis {
            return Err(ClassError::BasisMismatch);
        }
        let mut out = self.clone();
        for (label, coeff) in other.terms() {
            out.add_term(label.clone(), coeff)?;
        }
        Ok(out)
    }

    pub fn negate(&self) -> StableClass {
        self.scale(-1)
    }

    pub fn scale(&self, factor: i64) -> StableClass {
        if factor == 0 {
            return StableClass::zero(self.family, self.basis);
        }
        StableClass {
            family: self.family,
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(l, &c)| (l.clone(), c * factor))
                .collect(),
        }
    }
}

impl fmt::Display for StableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let letter = self.basis.letter();
        for (k, (label, coeff)) in self.terms().enumerate() {
            let positive = coeff > 0;
            if k == 0 {
                if !positive {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if positive { " + " } else { " - " })?;
            }
            let mag = coeff.unsigned_abs();
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{letter}{label}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for StableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Partitions of `2j` with every part even, as doubled partitions of `j`.
fn even_row_partitions(j: u32, bound: &Partition) -> Vec<Partition> {
    partitions_of(j)
        .into_iter()
        .map(|gamma| {
            let doubled: Vec<u32> = gamma.parts().iter().map(|&x| 2 * x).collect();
            Partition::new(doubled).expect("doubling preserves order")
        })
        .filter(|beta| bound.contains(beta))
        .collect()
}

/// Partitions of `2j` with every column length even: conjugates of the
/// even-row ones.
fn even_column_partitions(j: u32, bound: &Partition) -> Vec<Partition> {
    partitions_of(j)
        .into_iter()
        .map(|gamma| {
            let doubled: Vec<u32> = gamma.parts().iter().map(|&x| 2 * x).collect();
            Partition::new(doubled)
                .expect("doubling preserves order")
                .conjugate()
        })
        .filter(|beta| bound.contains(beta))
        .collect()
}

/// The branching matrix of one family, with memoized rows and base-change
/// expressions. Own one per thread of work; rows accumulate as they are
/// requested.
pub struct Branching {
    family: GroupFamily,
    rows: BTreeMap<Label, BTreeMap<Label, i64>>,
    simple_exprs: BTreeMap<Label, BTreeMap<Label, i64>>,
}

impl Branching {
    pub fn new(family: GroupFamily) -> Self {
        Branching {
            family,
            rows: BTreeMap::new(),
            simple_exprs: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    /// Multiplicity of the simple `L^mu` in the socle filtration of the
    /// injective `S_lam`. Zero unless `|lam| - |mu|` is even and nonnegative
    /// and `mu` fits inside `lam` componentwise.
    pub fn multiplicity(&mut self, inj: &Label, simple: &Label) -> Result<u64, ClassError> {
        let row = self.socle_row(inj)?;
        let value = row.get(simple).copied().unwrap_or(0);
        debug_assert!(value >= 0);
        Ok(value as u64)
    }

    /// The full decomposition of `[S_lam]` into simple classes.
    pub fn socle_row(&mut self, inj: &Label) -> Result<BTreeMap<Label, i64>, ClassError> {
        if !inj.fits(self.family) {
            return Err(ClassError::LabelShape);
        }
        if let Some(row) = self.rows.get(inj) {
            return Ok(row.clone());
        }
        let row = match (self.family, inj) {
            (GroupFamily::Orthogonal, Label::Single(lam)) => {
                Self::single_row(lam, even_row_partitions)
            }
            (GroupFamily::Symplectic, Label::Single(lam)) => {
                Self::single_row(lam, even_column_partitions)
            }
            (GroupFamily::GeneralLinear, Label::Pair(alpha, beta)) => Self::pair_row(alpha, beta),
            _ => unreachable!("shape checked above"),
        };
        self.rows.insert(inj.clone(), row.clone());
        Ok(row)
    }

    fn single_row(
        lam: &Partition,
        glue: fn(u32, &Partition) -> Vec<Partition>,
    ) -> BTreeMap<Label, i64> {
        let mut row = BTreeMap::new();
        for j in 0..=lam.size() / 2 {
            let glues = glue(j, lam);
            for mu in partitions_of_bounded(lam.size() - 2 * j, lam) {
                let mut b: i64 = 0;
                for beta in &glues {
                    b += lr_coefficient(lam, &mu, beta) as i64;
                }
                if b != 0 {
                    row.insert(Label::Single(mu), b);
                }
            }
        }
        row
    }

    fn pair_row(lam: &Partition, mu: &Partition) -> BTreeMap<Label, i64> {
        let mut row = BTreeMap::new();
        for j in 0..=lam.size().min(mu.size()) {
            let glues: Vec<Partition> = partitions_of(j)
                .into_iter()
                .filter(|g| lam.contains(g) && mu.contains(g))
                .collect();
            for alpha in partitions_of_bounded(lam.size() - j, lam) {
                for beta in partitions_of_bounded(mu.size() - j, mu) {
                    let mut b: i64 = 0;
                    for gamma in &glues {
                        b += (lr_coefficient(lam, &alpha, gamma)
                            * lr_coefficient(mu, &beta, gamma)) as i64;
                    }
                    if b != 0 {
                        row.insert(Label::Pair(alpha.clone(), beta.clone()), b);
                    }
                }
            }
        }
        row
    }

    /// Rewrite an injective-basis class in the simple basis.
    pub fn injectives_to_simples(&mut self, class: &StableClass) -> Result<StableClass, ClassError> {
        if class.family() != self.family {
            return Err(ClassError::FamilyMismatch);
        }
        if class.basis() != Basis::Injective {
            return Err(ClassError::BasisMismatch);
        }
        let mut out = StableClass::zero(self.family, Basis::Simple);
        for (label, coeff) in class.terms() {
            for (simple, b) in self.socle_row(label)? {
                out.add_term(simple, coeff * b)?;
            }
        }
        Ok(out)
    }

    /// Rewrite a simple-basis class in the injective basis, inverting the
    /// unitriangular branching matrix by induction on the label size.
    pub fn simples_to_injectives(&mut self, class: &StableClass) -> Result<StableClass, ClassError> {
        if class.family() != self.family {
            return Err(ClassError::FamilyMismatch);
        }
        if class.basis() != Basis::Simple {
            return Err(ClassError::BasisMismatch);
        }
        let mut out = StableClass::zero(self.family, Basis::Injective);
        for (label, coeff) in class.terms() {
            let expr = self.simple_in_injectives(label)?;
            for (inj, c) in expr {
                out.add_term(inj, coeff * c)?;
            }
        }
        Ok(out)
    }

    /// `[L^lam]` expressed in the injective basis.
    fn simple_in_injectives(&mut self, simple: &Label) -> Result<BTreeMap<Label, i64>, ClassError> {
        if let Some(expr) = self.simple_exprs.get(simple) {
            return Ok(expr.clone());
        }
        // [L^lam] = [S_lam] - sum over strictly smaller mu of b(lam, mu) [L^mu],
        // each [L^mu] rewritten recursively. The recursion terminates because
        // the branching matrix is unitriangular against the size order.
        let row = self.socle_row(simple)?;
        let mut expr = BTreeMap::new();
        expr.insert(simple.clone(), 1);
        for (mu, b) in row {
            if &mu == simple {
                debug_assert_eq!(b, 1, "diagonal of the branching matrix");
                continue;
            }
            debug_assert!(mu.size() < simple.size());
            let inner = self.simple_in_injectives(&mu)?;
            for (inj, c) in inner {
                let entry = expr.entry(inj).or_insert(0);
                *entry -= b * c;
            }
        }
        expr.retain(|_, c| *c != 0);
        self.simple_exprs.insert(simple.clone(), expr.clone());
        Ok(expr)
    }

    /// Memoized rows, for external cache persistence.
    pub fn export_rows(&self) -> Vec<(Label, Vec<(Label, i64)>)> {
        self.rows
            .iter()
            .map(|(l, row)| (l.clone(), row.iter().map(|(m, &b)| (m.clone(), b)).collect()))
            .collect()
    }

    /// Install a previously exported row. The caller vouches for its
    /// provenance; rows computed fresh would overwrite a wrong one anyway
    /// only by being recomputed, so import is appropriate for trusted caches
    /// only.
    pub fn import_row(&mut self, label: Label, row: Vec<(Label, i64)>) {
        self.rows.insert(label, row.into_iter().collect());
    }
}

/// Degree of a tensor functor: one exponent for the orthogonal and
/// symplectic families, a pair for the general linear family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorPower {
    Plain(u32),
    Mixed(u32, u32),
}

/// Decomposition of the tensor functor into injectives.
///
/// For one vector space the multiplicity of `S_lam` in `T^r` is the
/// standard tableau count `f^lam`; for the general linear family the
/// functor of two spaces decomposes with coefficients `f^alpha * f^beta`.
pub fn decompose_tensor_power(
    family: GroupFamily,
    power: TensorPower,
) -> Result<StableClass, ClassError> {
    let mut out = StableClass::zero(family, Basis::Injective);
    match (family, power) {
        (GroupFamily::Orthogonal | GroupFamily::Symplectic, TensorPower::Plain(r)) => {
            for lam in partitions_of(r) {
                let f = syt_count(&lam) as i64;
                out.add_term(Label::Single(lam), f)?;
            }
        }
        (GroupFamily::GeneralLinear, TensorPower::Mixed(r, m)) => {
            for alpha in partitions_of(r) {
                let fa = syt_count(&alpha) as i64;
                for beta in partitions_of(m) {
                    let fb = syt_count(&beta) as i64;
                    out.add_term(Label::Pair(alpha.clone(), beta), fa * fb)?;
                }
            }
        }
        _ => return Err(ClassError::PowerShape),
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn single(parts: &[u32]) -> Label {
        Label::Single(p(parts))
    }

    #[test]
    fn orthogonal_socle_of_sym2_and_alt2() {
        let mut br = Branching::new(GroupFamily::Orthogonal);
        assert_eq!(br.multiplicity(&single(&[2]), &single(&[])).unwrap(), 1);
        assert_eq!(br.multiplicity(&single(&[1, 1]), &single(&[])).unwrap(), 0);
        assert_eq!(br.multiplicity(&single(&[2]), &single(&[2])).unwrap(), 1);
        let row = br.socle_row(&single(&[2])).unwrap();
        assert_eq!(row.len(), 2);
    }

    #[test]
    fn symplectic_socle_swaps_the_conventions() {
        let mut br = Branching::new(GroupFamily::Symplectic);
        assert_eq!(br.multiplicity(&single(&[1, 1]), &single(&[])).unwrap(), 1);
        assert_eq!(br.multiplicity(&single(&[2]), &single(&[])).unwrap(), 0);
    }

    #[test]
    fn general_linear_traces_pair_off() {
        let mut br = Branching::new(GroupFamily::GeneralLinear);
        let inj = Label::Pair(p(&[1]), p(&[1]));
        let trivial = Label::Pair(Partition::empty(), Partition::empty());
        assert_eq!(br.multiplicity(&inj, &trivial).unwrap(), 1);
        assert_eq!(br.multiplicity(&inj, &inj).unwrap(), 1);
    }

    #[test]
    fn base_change_round_trips() {
        for family in [GroupFamily::Orthogonal, GroupFamily::Symplectic] {
            let mut br = Branching::new(family);
            for r in 0..=4 {
                for lam in partitions_of(r) {
                    let class = StableClass::generator(
                        family,
                        Basis::Simple,
                        Label::Single(lam.clone()),
                    )
                    .unwrap();
                    let inj = br.simples_to_injectives(&class).unwrap();
                    let back = br.injectives_to_simples(&inj).unwrap();
                    assert_eq!(back, class, "round trip at {lam} in {family}");
                }
            }
        }
    }

    #[test]
    fn simple_sym2_in_injectives_is_the_frozen_expression() {
        let mut br = Branching::new(GroupFamily::Orthogonal);
        let class =
            StableClass::generator(GroupFamily::Orthogonal, Basis::Simple, single(&[2])).unwrap();
        let inj = br.simples_to_injectives(&class).unwrap();
        assert_eq!(inj.coeff(&single(&[2])), 1);
        assert_eq!(inj.coeff(&single(&[])), -1);
        assert_eq!(inj.len(), 2);
        // Terms print smallest label first.
        assert_eq!(inj.to_string(), "-S[] + S[2]");
    }

    #[test]
    fn tensor_cube_decomposition_is_frozen() {
        let class =
            decompose_tensor_power(GroupFamily::Orthogonal, TensorPower::Plain(3)).unwrap();
        assert_eq!(class.coeff(&single(&[3])), 1);
        assert_eq!(class.coeff(&single(&[2, 1])), 2);
        assert_eq!(class.coeff(&single(&[1, 1, 1])), 1);
        assert_eq!(class.len(), 3);

        let gl = decompose_tensor_power(GroupFamily::GeneralLinear, TensorPower::Mixed(1, 1))
            .unwrap();
        assert_eq!(gl.coeff(&Label::Pair(p(&[1]), p(&[1]))), 1);
        assert_eq!(gl.len(), 1);

        assert_eq!(
            decompose_tensor_power(GroupFamily::GeneralLinear, TensorPower::Plain(2)),
            Err(ClassError::PowerShape)
        );
    }

    #[test]
    fn class_arithmetic_drops_zeros() {
        let family = GroupFamily::Orthogonal;
        let a = StableClass::generator(family, Basis::Injective, single(&[1])).unwrap();
        let sum = a.add(&a.negate()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.to_string(), "0");
        let shaped = StableClass::generator(
            family,
            Basis::Injective,
            Label::Pair(Partition::empty(), Partition::empty()),
        );
        assert_eq!(shaped, Err(ClassError::LabelShape));
    }
}
