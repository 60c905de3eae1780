//! Grothendieck-group classes and their Hilbert data.
//!
//! A class has a stable part (an integer combination of injective or simple
//! labels) and a torsion part supported in finitely many degrees, each
//! degree carrying an integer combination of finite-rank irreducible labels
//! admissible there. The Hilbert function of a class evaluates dimensions
//! level by level, the Hilbert polynomial is the eventual polynomial (the
//! torsion part drops out), and the Hilbert series is the exact generating
//! function: a numerator over a power of `1 - t`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::partitions::schur_dim;
use crate::poly::{binomial, QPoly, ZPoly};
use crate::specialization::{
    admissible, admissible_bound, injective_dim_poly, DimValidity, SpecError, Specializer,
};
use crate::stable_rep::{Basis, ClassError, GroupFamily, Label, StableClass};

/// Errors from class construction and Hilbert computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KGroupError {
    /// Propagated class arithmetic error.
    Class(ClassError),
    /// Propagated specialization error.
    Spec(SpecError),
    /// A torsion label does not survive at the degree carrying it.
    InadmissibleTorsion { degree: u32 },
    /// A torsion label sits below the stable range, so its dimension is not
    /// certified and the exact series is refused.
    TorsionDimUnverified { degree: u32 },
}

impl fmt::Display for KGroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KGroupError::Class(e) => write!(f, "{e}"),
            KGroupError::Spec(e) => write!(f, "{e}"),
            KGroupError::InadmissibleTorsion { degree } => {
                write!(f, "torsion label is not admissible at degree {degree}")
            }
            KGroupError::TorsionDimUnverified { degree } => write!(
                f,
                "torsion dimension at degree {degree} is below the certified range"
            ),
        }
    }
}

impl From<ClassError> for KGroupError {
    fn from(e: ClassError) -> Self {
        KGroupError::Class(e)
    }
}

impl From<SpecError> for KGroupError {
    fn from(e: SpecError) -> Self {
        KGroupError::Spec(e)
    }
}

/// Confidence in a Hilbert-function value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HfValidity {
    /// Honest dimension.
    Exact,
    /// The value is the Euler characteristic of the derived specialization
    /// of a simple-basis part; below the vanishing degree it may differ
    /// from the honest dimension.
    EulerCharacteristicOnly,
    /// A torsion label at this degree sits below the stable range, so its
    /// solved dimension is not certified.
    TorsionDimUnverified,
}

/// A Hilbert-function value with its confidence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HilbertValue {
    pub value: i64,
    pub validity: HfValidity,
}

/// Element of the Grothendieck group: stable part plus per-degree torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    stable: StableClass,
    torsion: BTreeMap<u32, BTreeMap<Label, i64>>,
}

impl KClass {
    /// The zero class in the chosen basis.
    pub fn zero(family: GroupFamily, basis: Basis) -> Self {
        KClass {
            stable: StableClass::zero(family, basis),
            torsion: BTreeMap::new(),
        }
    }

    pub fn from_stable(stable: StableClass) -> Self {
        KClass {
            stable,
            torsion: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> GroupFamily {
        self.stable.family()
    }

    pub fn stable(&self) -> &StableClass {
        &self.stable
    }

    /// Torsion layers, smallest degree first.
    pub fn torsion(&self) -> impl Iterator<Item = (u32, &BTreeMap<Label, i64>)> {
        self.torsion.iter().map(|(d, m)| (*d, m))
    }

    pub fn is_zero(&self) -> bool {
        self.stable.is_zero() && self.torsion.is_empty()
    }

    /// Add `coeff` copies of the irreducible with this label in degree
    /// `degree`. The label must be admissible there.
    pub fn add_torsion(
        &mut self,
        degree: u32,
        label: Label,
        coeff: i64,
    ) -> Result<(), KGroupError> {
        if !label.fits(self.family()) {
            return Err(KGroupError::Class(ClassError::LabelShape));
        }
        if !admissible(self.family(), &label, degree)? {
            return Err(KGroupError::InadmissibleTorsion { degree });
        }
        if coeff == 0 {
            return Ok(());
        }
        let layer = self.torsion.entry(degree).or_default();
        let entry = layer.entry(label).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            layer.retain(|_, c| *c != 0);
        }
        if layer.is_empty() {
            self.torsion.remove(&degree);
        }
        Ok(())
    }

    /// Componentwise sum. Families and stable bases must agree.
    pub fn add(&self, other: &KClass) -> Result<KClass, KGroupError> {
        let mut out = KClass {
            stable: self.stable.add(&other.stable)?,
            torsion: self.torsion.clone(),
        };
        for (degree, layer) in &other.torsion {
            for (label, coeff) in layer {
                out.add_torsion(*degree, label.clone(), *coeff)?;
            }
        }
        Ok(out)
    }

    pub fn negate(&self) -> KClass {
        let torsion = self
            .torsion
            .iter()
            .map(|(d, layer)| (*d, layer.iter().map(|(l, c)| (l.clone(), -c)).collect()))
            .collect();
        KClass {
            stable: self.stable.negate(),
            torsion,
        }
    }

    /// Dimension at level `n` of any module with this class. Injective-basis
    /// stable parts evaluate exactly at every level; simple-basis parts
    /// contribute Euler characteristics, flagged exact only where the
    /// derived specialization is known to vanish; torsion contributes at its
    /// own degree only.
    pub fn hilbert_function(
        &self,
        sp: &mut Specializer,
        n: u32,
    ) -> Result<HilbertValue, KGroupError> {
        let family = self.family();
        let mut value: i64 = 0;
        let mut validity = HfValidity::Exact;

        match self.stable.basis() {
            Basis::Injective => {
                for (label, coeff) in self.stable.terms() {
                    value += coeff * dim_at_level(family, label, n)? as i64;
                }
            }
            Basis::Simple => {
                for (label, coeff) in self.stable.terms() {
                    let euler = sp.euler_specialization(label, n)?;
                    value += coeff * euler;
                    if !euler_known_exact(sp, label, n, euler)? {
                        validity = HfValidity::EulerCharacteristicOnly;
                    }
                }
            }
        }

        if let Some(layer) = self.torsion.get(&n) {
            for (label, coeff) in layer {
                let dim = sp.stable_irrep_dim(label, n)?;
                value += coeff * dim.dim;
                if dim.validity == DimValidity::StableRangeUnverified {
                    validity = HfValidity::TorsionDimUnverified;
                }
            }
        }

        Ok(HilbertValue { value, validity })
    }

    /// The eventual polynomial of the Hilbert function. Torsion drops out;
    /// a simple-basis stable part is converted to the injective basis first.
    pub fn hilbert_polynomial(
        &self,
        sp: &mut Specializer,
    ) -> Result<HilbertPolynomial, KGroupError> {
        let family = self.family();
        let inj = self.stable_in_injectives(sp)?;
        let mut poly = QPoly::zero();
        for (label, coeff) in inj.terms() {
            let term = injective_dim_poly(family, label)?;
            poly = poly.add(&term.scale(&BigRational::from(BigInt::from(coeff))));
        }
        Ok(HilbertPolynomial::new(poly))
    }

    /// The exact generating function of the Hilbert function, as a reduced
    /// numerator over `(1 - t)^d`. A simple-basis stable part is converted
    /// to the injective basis (the class determines the series); torsion
    /// whose dimension is not certified is refused.
    pub fn hilbert_series(&self, sp: &mut Specializer) -> Result<RationalSeries, KGroupError> {
        let family = self.family();
        let inj = self.stable_in_injectives(sp)?;

        // Common denominator exponent: one more than the largest label size.
        let mut denom_power: u32 = 0;
        for (label, _) in inj.terms() {
            denom_power = denom_power.max(label.size() + 1);
        }

        let mut numerator = ZPoly::zero();
        for (label, coeff) in inj.terms() {
            let d = label.size();
            let poly = injective_dim_poly(family, label)?;
            let newton = poly
                .integer_newton_coefficients()
                .expect("hook content polynomials are integer-valued");
            // Sum_n p(n) t^n = [sum_j c_j t^j (1-t)^(d-j)] / (1-t)^(d+1).
            let mut term = ZPoly::zero();
            for (j, c) in newton.iter().enumerate() {
                term = term.add(
                    &ZPoly::from_coeffs(alloc::vec![c.clone()])
                        .shift(j)
                        .mul_one_minus_t_pow(d - j as u32),
                );
            }
            let term = term.mul_one_minus_t_pow(denom_power - (d + 1));
            let mut scaled = Vec::new();
            for c in term.coeffs() {
                scaled.push(c * BigInt::from(coeff));
            }
            numerator = numerator.add(&ZPoly::from_coeffs(scaled));
        }

        for (degree, layer) in &self.torsion {
            let mut layer_dim: i64 = 0;
            for (label, coeff) in layer {
                let dim = sp.stable_irrep_dim(label, *degree)?;
                if dim.validity == DimValidity::StableRangeUnverified {
                    return Err(KGroupError::TorsionDimUnverified { degree: *degree });
                }
                layer_dim += coeff * dim.dim;
            }
            let monomial = ZPoly::from_coeffs(alloc::vec![BigInt::from(layer_dim)])
                .shift(*degree as usize)
                .mul_one_minus_t_pow(denom_power);
            numerator = numerator.add(&monomial);
        }

        Ok(RationalSeries::new(numerator, denom_power))
    }

    /// The difference between an observed Hilbert function (values at levels
    /// `0..len`) and the Hilbert polynomial of this class: the alternating
    /// sum of derived dimensions level by level.
    pub fn local_cohomology_discrepancy(
        &self,
        sp: &mut Specializer,
        hf_actual: &[i64],
    ) -> Result<Vec<i64>, KGroupError> {
        let p = self.hilbert_polynomial(sp)?;
        let mut out = Vec::with_capacity(hf_actual.len());
        for (n, actual) in hf_actual.iter().enumerate() {
            out.push(actual - p.eval_int(n as i64));
        }
        Ok(out)
    }

    fn stable_in_injectives(&self, sp: &mut Specializer) -> Result<StableClass, KGroupError> {
        Ok(match self.stable.basis() {
            Basis::Injective => self.stable.clone(),
            Basis::Simple => sp.branching().simples_to_injectives(&self.stable)?,
        })
    }
}

/// Exact dimension at level `n` of the specialized injective with this
/// label (every level, no stable-range caveat).
fn dim_at_level(family: GroupFamily, label: &Label, n: u32) -> Result<u64, KGroupError> {
    Ok(match (family, label) {
        (GroupFamily::Orthogonal, Label::Single(lam)) => schur_dim(lam, n),
        (GroupFamily::Symplectic, Label::Single(lam)) => schur_dim(lam, 2 * n),
        (GroupFamily::GeneralLinear, Label::Pair(a, b)) => schur_dim(a, n) * schur_dim(b, n),
        _ => return Err(KGroupError::Class(ClassError::LabelShape)),
    })
}

/// Whether the Euler characteristic of the simple with this label is known
/// to be the honest dimension at level `n`: below the admissibility bound
/// the specialization is zero, and in the stable range it must agree with
/// the solved dimension.
fn euler_known_exact(
    sp: &mut Specializer,
    label: &Label,
    n: u32,
    euler: i64,
) -> Result<bool, KGroupError> {
    let bound = admissible_bound(sp.family(), label)?;
    if n < bound {
        return Ok(euler == 0);
    }
    if n < 2 * label.size() {
        return Ok(false);
    }
    Ok(euler == sp.stable_irrep_dim(label, n)?.dim)
}

/// Eventual polynomial of a Hilbert function, with exact rational
/// coefficients; integer-valued at every integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    poly: QPoly,
}

impl HilbertPolynomial {
    fn new(poly: QPoly) -> Self {
        debug_assert!(
            poly.integer_newton_coefficients().is_some(),
            "Hilbert polynomials take integer values at integers"
        );
        HilbertPolynomial { poly }
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Value at a nonnegative level (integral by construction).
    pub fn eval_int(&self, n: i64) -> i64 {
        let v = self.poly.eval_int(n);
        debug_assert!(v.is_integer());
        v.to_integer().to_i64().expect("value fits a machine integer")
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// A power series `numerator / (1 - t)^denom_power`, kept reduced: when the
/// exponent is positive the numerator is not divisible by `1 - t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: ZPoly,
    denom_power: u32,
}

impl RationalSeries {
    pub fn new(mut numerator: ZPoly, mut denom_power: u32) -> Self {
        if numerator.is_zero() {
            denom_power = 0;
        }
        while denom_power > 0 {
            match numerator.div_one_minus_t() {
                Some(q) => {
                    numerator = q;
                    denom_power -= 1;
                }
                None => break,
            }
        }
        RationalSeries {
            numerator,
            denom_power,
        }
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.numerator
    }

    pub fn denom_power(&self) -> u32 {
        self.denom_power
    }

    /// Coefficient of `t^n` in the expansion.
    pub fn coefficient(&self, n: u32) -> BigInt {
        let d = self.denom_power as u64;
        let mut total = BigInt::zero();
        for (j, c) in self.numerator.coeffs().iter().enumerate() {
            let j = j as u64;
            let n = n as u64;
            if d == 0 {
                if j == n {
                    total += c;
                }
            } else if n >= j {
                // 1/(1-t)^d = sum_k C(k+d-1, d-1) t^k.
                total += c * binomial(n - j + d - 1, d - 1);
            }
        }
        total
    }

    /// First `len` coefficients.
    pub fn coefficients(&self, len: u32) -> Vec<BigInt> {
        (0..len).map(|n| self.coefficient(n)).collect()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator.format_with_var("t");
        if self.denom_power == 0 {
            return f.write_str(&num);
        }
        let terms = self.numerator.coeffs().iter().filter(|c| !c.is_zero()).count();
        let wrapped = if terms > 1 {
            let mut s = String::from("(");
            s.push_str(&num);
            s.push(')');
            s
        } else {
            num
        };
        write!(f, "{wrapped}/(1-t)")?;
        if self.denom_power > 1 {
            write!(f, "^{}", self.denom_power)?;
        }
        Ok(())
    }
}

/// Fit the eventual polynomial of a table of values at consecutive levels
/// `start, start+1, ...` by finite differences from the tail. Returns the
/// polynomial (in the level variable) and the first level from which every
/// tabulated value matches it, or `None` when no polynomial of degree at
/// most `len - 2` explains the tail.
pub fn fit_tail_polynomial(start: u32, values: &[i64]) -> Option<(QPoly, u32)> {
    let len = values.len();
    if len < 2 {
        return None;
    }
    for deg in 0..=(len - 2) {
        // Interpolate through the last deg+1 values, then require agreement
        // at the next value in from the tail.
        let a = len - 1 - deg;
        let poly = newton_from_values(start as i64 + a as i64, &values[a..]);
        let probe = a - 1;
        if poly.eval_int(start as i64 + probe as i64)
            != BigRational::from(BigInt::from(values[probe]))
        {
            continue;
        }
        let mut first = 0usize;
        for (i, v) in values.iter().enumerate().rev() {
            if poly.eval_int(start as i64 + i as i64) != BigRational::from(BigInt::from(*v)) {
                first = i + 1;
                break;
            }
        }
        return Some((poly, start + first as u32));
    }
    None
}

/// The interpolating polynomial through `(a, vals[0]), (a+1, vals[1]), ...`
/// in Newton forward-difference form.
fn newton_from_values(a: i64, vals: &[i64]) -> QPoly {
    let mut table: Vec<BigRational> = vals
        .iter()
        .map(|v| BigRational::from(BigInt::from(*v)))
        .collect();
    let mut poly = QPoly::zero();
    // Binomial basis C(t - a, j), built incrementally.
    let mut basis = QPoly::one();
    let steps = table.len();
    for j in 0..steps {
        poly = poly.add(&basis.scale(&table[0]));
        for i in 0..table.len() - 1 {
            table[i] = &table[i + 1] - &table[i];
        }
        table.pop();
        let factor = QPoly::linear(-(a + j as i64)).scale(&BigRational::new(
            BigInt::one(),
            BigInt::from(j as i64 + 1),
        ));
        basis = basis.mul(&factor);
    }
    poly
}
