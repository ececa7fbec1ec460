use std::fmt;

use super::echelon;
use super::scalar::Scalar;
use super::space::{Parity, SuperSpace, SuperVector};
use crate::error::{AlgebraError, Result};

/// A linear map between super spaces, stored as a dense matrix whose
/// column `j` is the image of basis vector `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperMap {
    domain: SuperSpace,
    codomain: SuperSpace,
    entries: Vec<Scalar>,
}

impl fmt::Debug for SuperMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperMap[")?;
        let mut first = true;
        for r in 0..self.codomain.dim() {
            for c in 0..self.domain.dim() {
                let x = self.entry(r, c);
                if x.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(
                    f,
                    "({x})E[{},{}]",
                    self.codomain.label(r),
                    self.domain.label(c)
                )?;
            }
        }
        write!(f, "]")
    }
}

/// Basis label of the elementary map `E[i,j]`.
pub fn elementary_label(space: &SuperSpace, i: usize, j: usize) -> String {
    format!("E[{},{}]", space.label(i), space.label(j))
}

/// `gl(V)` as a super space: basis `E[i,j]` in row-major order, with
/// `|E[i,j]| = |i| + |j|`.
pub fn gl_space(v: &SuperSpace) -> SuperSpace {
    let n = v.dim();
    let mut basis = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            basis.push((elementary_label(v, i, j), v.parity(i) + v.parity(j)));
        }
    }
    SuperSpace::with_basis(v.field(), basis).expect("gl labels are unique")
}

impl SuperMap {
    pub fn zero(domain: &SuperSpace, codomain: &SuperSpace) -> SuperMap {
        SuperMap {
            entries: vec![domain.field().zero(); domain.dim() * codomain.dim()],
            domain: domain.clone(),
            codomain: codomain.clone(),
        }
    }

    pub fn identity(space: &SuperSpace) -> SuperMap {
        let mut m = SuperMap::zero(space, space);
        for i in 0..space.dim() {
            m.set(i, i, space.field().one());
        }
        m
    }

    /// `E[i,j]`: sends basis `j` to basis `i` and every other basis vector to 0.
    pub fn elementary(space: &SuperSpace, i: usize, j: usize) -> SuperMap {
        let mut m = SuperMap::zero(space, space);
        m.set(i, j, space.field().one());
        m
    }

    /// The map whose column `j` is `images[j]`.
    pub fn from_columns(
        domain: &SuperSpace,
        codomain: &SuperSpace,
        images: &[SuperVector],
    ) -> Result<SuperMap> {
        if images.len() != domain.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: domain.dim(),
                found: images.len(),
            });
        }
        let mut m = SuperMap::zero(domain, codomain);
        for (c, img) in images.iter().enumerate() {
            img.space().require_same(codomain)?;
            for (r, x) in img.support() {
                m.set(r, c, x.clone());
            }
        }
        Ok(m)
    }

    /// The unique map sending `basis[k]` to `images[k]`; `basis` must be a
    /// basis of the domain.
    pub fn from_basis_images(
        domain: &SuperSpace,
        codomain: &SuperSpace,
        basis: &[SuperVector],
        images: &[SuperVector],
    ) -> Result<SuperMap> {
        let n = domain.dim();
        if basis.len() != n || images.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: basis.len().min(images.len()),
            });
        }
        // P has the basis vectors as columns; the map is M = Y P^{-1}.
        let p: Vec<Vec<Scalar>> = (0..n)
            .map(|r| basis.iter().map(|b| b.coord(r).clone()).collect())
            .collect();
        let p_inv = echelon::inverse(&p, domain.field())
            .ok_or_else(|| AlgebraError::Invalid("vectors do not form a basis".into()))?;
        let mut m = SuperMap::zero(domain, codomain);
        for r in 0..codomain.dim() {
            for c in 0..n {
                let mut acc = domain.field().zero();
                for (k, img) in images.iter().enumerate() {
                    let y = img.coord(r);
                    if !y.is_zero() && !p_inv[k][c].is_zero() {
                        acc = acc + y * &p_inv[k][c];
                    }
                }
                m.set(r, c, acc);
            }
        }
        Ok(m)
    }

    pub fn domain(&self) -> &SuperSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &SuperSpace {
        &self.codomain
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.domain.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        let n = self.domain.dim();
        self.entries[row * n + col] = value;
    }

    pub fn column(&self, col: usize) -> SuperVector {
        let coords = (0..self.codomain.dim())
            .map(|r| self.entry(r, col).clone())
            .collect();
        self.codomain.vector(coords).expect("column has codomain length")
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    fn entry_parity(&self, row: usize, col: usize) -> Parity {
        self.codomain.parity(row) + self.domain.parity(col)
    }

    /// Even part keeps parity-preserving blocks, odd part the swapping ones.
    pub fn part(&self, parity: Parity) -> SuperMap {
        let mut out = SuperMap::zero(&self.domain, &self.codomain);
        for r in 0..self.codomain.dim() {
            for c in 0..self.domain.dim() {
                if self.entry_parity(r, c) == parity {
                    out.set(r, c, self.entry(r, c).clone());
                }
            }
        }
        out
    }

    pub fn parity_decompose(&self) -> (SuperMap, SuperMap) {
        (self.part(Parity::Even), self.part(Parity::Odd))
    }

    pub fn homogeneous_parts(&self) -> Vec<(Parity, SuperMap)> {
        Parity::BOTH
            .iter()
            .map(|p| (*p, self.part(*p)))
            .filter(|(_, m)| !m.is_zero())
            .collect()
    }

    pub fn is_homogeneous_of(&self, parity: Parity) -> bool {
        (0..self.codomain.dim()).all(|r| {
            (0..self.domain.dim())
                .all(|c| self.entry(r, c).is_zero() || self.entry_parity(r, c) == parity)
        })
    }

    /// `Some(p)` for a nonzero homogeneous map of parity `p`.
    pub fn parity(&self) -> Option<Parity> {
        if self.is_zero() {
            return None;
        }
        Parity::BOTH
            .into_iter()
            .find(|p| self.is_homogeneous_of(*p))
    }

    pub fn apply(&self, x: &SuperVector) -> Result<SuperVector> {
        x.space().require_same(&self.domain)?;
        let mut out = self.codomain.zero();
        for (c, xc) in x.support() {
            out.add_scaled(xc, &self.column(c));
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperMap) -> Result<SuperMap> {
        other.codomain.require_same(&self.domain)?;
        let (rows, inner, cols) = (self.codomain.dim(), self.domain.dim(), other.domain.dim());
        let mut out = SuperMap::zero(&other.domain, &self.codomain);
        for r in 0..rows {
            for k in 0..inner {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = other.entry(k, c);
                    if !b.is_zero() {
                        let v = out.entry(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &SuperMap) -> Result<SuperMap> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &SuperMap) -> Result<SuperMap> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &SuperMap, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<SuperMap> {
        self.domain.require_same(&other.domain)?;
        self.codomain.require_same(&other.codomain)?;
        Ok(SuperMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> SuperMap {
        SuperMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> SuperMap {
        self.scale(&-self.domain.field().one())
    }

    /// `[A,B] = AB - (-1)^{|A||B|} BA`, extended bilinearly over homogeneous parts.
    pub fn super_commutator(&self, other: &SuperMap) -> Result<SuperMap> {
        if !self.is_endomorphism() || !other.is_endomorphism() {
            return Err(AlgebraError::Invalid(
                "super commutator needs endomorphisms".into(),
            ));
        }
        self.domain.require_same(&other.domain)?;
        let mut out = SuperMap::zero(&self.domain, &self.domain);
        for (pa, a) in self.homogeneous_parts() {
            for (pb, b) in other.homogeneous_parts() {
                let ab = a.compose(&b)?;
                let ba = b.compose(&a)?;
                let term = if Parity::koszul(pa, pb) {
                    ab.add(&ba)?
                } else {
                    ab.sub(&ba)?
                };
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// `str(A) = tr(A_even,even) - tr(A_odd,odd)`.
    pub fn supertrace(&self) -> Result<Scalar> {
        if !self.is_endomorphism() {
            return Err(AlgebraError::Invalid("supertrace of a non-square map".into()));
        }
        let mut acc = self.domain.field().zero();
        for i in 0..self.domain.dim() {
            let d = self.entry(i, i);
            acc = match self.domain.parity(i) {
                Parity::Even => acc + d,
                Parity::Odd => acc - d,
            };
        }
        Ok(acc)
    }

    /// Coordinates in `gl(V)` (row-major `E[i,j]`).
    pub fn to_gl_vector(&self, gl: &SuperSpace) -> Result<SuperVector> {
        if !self.is_endomorphism() || gl.dim() != self.entries.len() {
            return Err(AlgebraError::SpaceMismatch);
        }
        gl.vector(self.entries.clone())
    }

    pub fn from_gl_vector(space: &SuperSpace, v: &SuperVector) -> Result<SuperMap> {
        let n = space.dim();
        if v.space().dim() != n * n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n * n,
                found: v.space().dim(),
            });
        }
        Ok(SuperMap {
            domain: space.clone(),
            codomain: space.clone(),
            entries: v.coords().to_vec(),
        })
    }
}
