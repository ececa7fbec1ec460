use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use super::scalar::{Field, Scalar};
use crate::error::{AlgebraError, Result};

/// Z2 degree of a homogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Even, Parity::Odd];

    pub fn from_bit(bit: u8) -> Parity {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    /// Whether the Koszul sign `(-1)^{|a||b|}` is negative.
    pub fn koszul(a: Parity, b: Parity) -> bool {
        a == Parity::Odd && b == Parity::Odd
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

#[derive(Debug, PartialEq, Eq)]
struct SpaceData {
    field: Field,
    labels: Vec<String>,
    parities: Vec<Parity>,
    index: HashMap<String, usize>,
}

/// A finite-dimensional super vector space with a homogeneous ordered basis.
///
/// [`SuperSpace::standard`] orders the basis `e1..em, f1..fn`; spaces such as
/// `gl(V)` or `gl(V)⊕V` interleave parities and are built with
/// [`SuperSpace::with_basis`]. Cloning is cheap.
#[derive(Clone)]
pub struct SuperSpace(Arc<SpaceData>);

impl PartialEq for SuperSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for SuperSpace {}

impl fmt::Debug for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SuperSpace({}|{} over {})",
            self.even_dim(),
            self.odd_dim(),
            self.field()
        )
    }
}

impl SuperSpace {
    /// `K^{m|n}` with basis `e1..em` (even) then `f1..fn` (odd).
    pub fn standard(field: Field, even: usize, odd: usize) -> SuperSpace {
        let basis = (1..=even)
            .map(|i| (format!("e{i}"), Parity::Even))
            .chain((1..=odd).map(|i| (format!("f{i}"), Parity::Odd)))
            .collect();
        SuperSpace::with_basis(field, basis).expect("standard labels are unique")
    }

    pub fn with_basis(field: Field, basis: Vec<(String, Parity)>) -> Result<SuperSpace> {
        let mut index = HashMap::with_capacity(basis.len());
        for (i, (label, _)) in basis.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(AlgebraError::Invalid(format!(
                    "duplicate basis label {label:?}"
                )));
            }
        }
        let (labels, parities) = basis.into_iter().unzip();
        Ok(SuperSpace(Arc::new(SpaceData {
            field,
            labels,
            parities,
            index,
        })))
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.0.parities.iter().filter(|p| **p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn zero(&self) -> SuperVector {
        SuperVector {
            space: self.clone(),
            coords: vec![self.field().zero(); self.dim()],
        }
    }

    pub fn basis_vector(&self, i: usize) -> SuperVector {
        let mut v = self.zero();
        v.coords[i] = self.field().one();
        v
    }

    pub fn basis(&self) -> Vec<SuperVector> {
        (0..self.dim()).map(|i| self.basis_vector(i)).collect()
    }

    pub fn vector(&self, coords: Vec<Scalar>) -> Result<SuperVector> {
        if coords.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: coords.len(),
            });
        }
        if coords.iter().any(|c| c.field() != self.field()) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(SuperVector {
            space: self.clone(),
            coords,
        })
    }

    /// Convenience constructor from small integers.
    pub fn vector_from_ints(&self, coords: &[i64]) -> Result<SuperVector> {
        self.vector(coords.iter().map(|c| self.field().from_i64(*c)).collect())
    }

    pub(crate) fn require_same(&self, other: &SuperSpace) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::SpaceMismatch)
        }
    }
}

/// An element of a [`SuperSpace`], stored by coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperVector {
    space: SuperSpace,
    coords: Vec<Scalar>,
}

impl fmt::Debug for SuperVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SuperVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", self.space.label(i))?;
            } else {
                write!(f, "({c})·{}", self.space.label(i))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl SuperVector {
    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    /// Nonzero coordinates as `(index, value)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Scalar) -> SuperVector {
        SuperVector {
            space: self.space.clone(),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn signed(self, negative: bool) -> SuperVector {
        if negative {
            -self
        } else {
            self
        }
    }

    /// `self += c * other`, skipping zero coordinates.
    pub fn add_scaled(&mut self, c: &Scalar, other: &SuperVector) {
        assert_eq!(self.space, other.space, "{}", AlgebraError::SpaceMismatch);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    /// The component of the given parity.
    pub fn part(&self, parity: Parity) -> SuperVector {
        let zero = self.space.field().zero();
        SuperVector {
            space: self.space.clone(),
            coords: self
                .coords
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if self.space.parity(i) == parity {
                        c.clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect(),
        }
    }

    /// `(v_even, v_odd)` with `v = v_even + v_odd`.
    pub fn parity_decompose(&self) -> (SuperVector, SuperVector) {
        (self.part(Parity::Even), self.part(Parity::Odd))
    }

    /// The zero vector is homogeneous of either parity.
    pub fn is_homogeneous_of(&self, parity: Parity) -> bool {
        self.support().all(|(i, _)| self.space.parity(i) == parity)
    }

    /// `Some(p)` for a nonzero homogeneous vector of parity `p`.
    pub fn parity(&self) -> Option<Parity> {
        let mut found = None;
        for (i, _) in self.support() {
            let p = self.space.parity(i);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        found
    }

    /// Nonzero homogeneous components, tagged with their parity.
    pub fn homogeneous_parts(&self) -> Vec<(Parity, SuperVector)> {
        Parity::BOTH
            .iter()
            .map(|p| (*p, self.part(*p)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }
}

impl<'a> Add<&'a SuperVector> for &'a SuperVector {
    type Output = SuperVector;
    fn add(self, rhs: &SuperVector) -> SuperVector {
        let mut out = self.clone();
        out.add_scaled(&self.space.field().one(), rhs);
        out
    }
}

impl<'a> Sub<&'a SuperVector> for &'a SuperVector {
    type Output = SuperVector;
    fn sub(self, rhs: &SuperVector) -> SuperVector {
        let mut out = self.clone();
        out.add_scaled(&-self.space.field().one(), rhs);
        out
    }
}

impl Add for SuperVector {
    type Output = SuperVector;
    fn add(self, rhs: SuperVector) -> SuperVector {
        &self + &rhs
    }
}

impl Sub for SuperVector {
    type Output = SuperVector;
    fn sub(self, rhs: SuperVector) -> SuperVector {
        &self - &rhs
    }
}

impl Neg for SuperVector {
    type Output = SuperVector;
    fn neg(self) -> SuperVector {
        SuperVector {
            coords: self.coords.into_iter().map(|c| -c).collect(),
            space: self.space,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_basis_layout() {
        let v = SuperSpace::standard(Field::Rational, 2, 1);
        assert_eq!(v.labels(), ["e1", "e2", "f1"]);
        assert_eq!(v.parity(2), Parity::Odd);
        assert_eq!((v.even_dim(), v.odd_dim()), (2, 1));
    }

    #[test]
    fn decomposition_is_exact() {
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        let x = v.vector_from_ints(&[3, -2]).unwrap();
        let (e, o) = x.parity_decompose();
        assert_eq!(&e + &o, x);
        assert_eq!(e.parity(), Some(Parity::Even));
        assert_eq!(o.parity(), Some(Parity::Odd));
        assert_eq!(x.parity(), None);
        assert!(v.zero().is_homogeneous_of(Parity::Odd));
        assert!(v.zero().is_homogeneous_of(Parity::Even));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let basis = vec![("a".into(), Parity::Even), ("a".into(), Parity::Odd)];
        assert!(SuperSpace::with_basis(Field::Rational, basis).is_err());
    }
}
