use std::fmt;

use super::echelon::{self, Rows};
use super::map::SuperMap;
use super::scalar::Scalar;
use super::space::{Parity, SuperSpace, SuperVector};
use crate::error::Result;

/// A graded subspace, held by its reduced row echelon basis.
///
/// Generators are split into homogeneous parts before reduction, so the
/// span is always graded and every basis row is homogeneous. The echelon
/// form is canonical: two subspaces are equal iff their bases are identical.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    ambient: SuperSpace,
    rows: Vec<SuperVector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for GradedSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl GradedSubspace {
    pub fn zero(ambient: &SuperSpace) -> GradedSubspace {
        GradedSubspace {
            ambient: ambient.clone(),
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: &SuperSpace) -> GradedSubspace {
        GradedSubspace {
            ambient: ambient.clone(),
            rows: ambient.basis(),
            pivots: (0..ambient.dim()).collect(),
        }
    }

    /// The graded span of `vectors`.
    pub fn from_vectors(ambient: &SuperSpace, vectors: &[SuperVector]) -> Result<GradedSubspace> {
        let mut raw = Vec::new();
        for v in vectors {
            v.space().require_same(ambient)?;
            for (_, part) in v.homogeneous_parts() {
                raw.push(part.into_coords());
            }
        }
        Ok(Self::from_raw_rows(ambient, raw))
    }

    fn from_raw_rows(ambient: &SuperSpace, raw: Rows) -> GradedSubspace {
        let (rows, pivots) = echelon::rref(raw, ambient.dim());
        GradedSubspace {
            ambient: ambient.clone(),
            rows: rows
                .into_iter()
                .map(|r| ambient.vector(r).expect("row has ambient length"))
                .collect(),
            pivots,
        }
    }

    /// Wraps rows already known to be a homogeneous reduced echelon basis.
    pub(crate) fn from_echelon(ambient: &SuperSpace, rows: Rows, pivots: Vec<usize>) -> GradedSubspace {
        GradedSubspace {
            ambient: ambient.clone(),
            rows: rows
                .into_iter()
                .map(|r| ambient.vector(r).expect("row has ambient length"))
                .collect(),
            pivots,
        }
    }

    /// `{x : X(x) = 0 for every X}`, where the maps are replaced by their
    /// homogeneous parts so the result is graded.
    pub fn kernel_of_maps(space: &SuperSpace, maps: &[SuperMap]) -> Result<GradedSubspace> {
        let mut rows = Vec::new();
        for m in maps {
            m.domain().require_same(space)?;
            for (_, part) in m.homogeneous_parts() {
                for r in 0..part.codomain().dim() {
                    rows.push((0..space.dim()).map(|c| part.entry(r, c).clone()).collect());
                }
            }
        }
        let kernel = echelon::nullspace(rows, space.dim(), space.field());
        let vectors: Vec<SuperVector> = kernel
            .into_iter()
            .map(|k| space.vector(k).expect("kernel vector has domain length"))
            .collect();
        GradedSubspace::from_vectors(space, &vectors)
    }

    pub fn ambient(&self) -> &SuperSpace {
        &self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SuperVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Parity of basis row `k` (rows are homogeneous; a row's pivot fixes it).
    pub fn basis_parity(&self, k: usize) -> Parity {
        self.ambient.parity(self.pivots[k])
    }

    pub fn dim_of(&self, parity: Parity) -> usize {
        (0..self.dim()).filter(|k| self.basis_parity(*k) == parity).count()
    }

    /// Coefficients of `v` in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &SuperVector) -> Result<Option<Vec<Scalar>>> {
        v.space().require_same(&self.ambient)?;
        let coeffs: Vec<Scalar> = self.pivots.iter().map(|p| v.coord(*p).clone()).collect();
        let mut residual = v.clone();
        for (c, row) in coeffs.iter().zip(&self.rows) {
            residual.add_scaled(&-c, row);
        }
        Ok(residual.is_zero().then_some(coeffs))
    }

    pub fn contains(&self, v: &SuperVector) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// The element with the given coordinates in the echelon basis.
    pub fn combination(&self, coeffs: &[Scalar]) -> SuperVector {
        let mut out = self.ambient.zero();
        for (c, row) in coeffs.iter().zip(&self.rows) {
            out.add_scaled(c, row);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.ambient.require_same(&other.ambient)?;
        let raw = self
            .rows
            .iter()
            .chain(&other.rows)
            .map(|r| r.coords().to_vec())
            .collect();
        Ok(Self::from_raw_rows(&self.ambient, raw))
    }

    /// Linear functionals (dot products) cutting the subspace out.
    fn equations(&self) -> Rows {
        let rows = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        echelon::nullspace(rows, self.ambient.dim(), self.ambient.field())
    }

    pub fn intersect(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.ambient.require_same(&other.ambient)?;
        let field = self.ambient.field();
        let eqs = other.equations();
        // a ∈ ker( eq_i · row_k )
        let system: Rows = eqs
            .iter()
            .map(|eq| {
                self.rows
                    .iter()
                    .map(|row| {
                        row.support()
                            .fold(field.zero(), |acc, (i, x)| acc + &(x * &eq[i]))
                    })
                    .collect()
            })
            .collect();
        let sol = echelon::nullspace(system, self.dim(), field);
        let vectors: Vec<SuperVector> = sol.iter().map(|a| self.combination(a)).collect();
        GradedSubspace::from_vectors(&self.ambient, &vectors)
    }

    /// Indices of standard basis vectors spanning a graded complement: the
    /// non-pivot columns.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient.dim())
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// The subspace as an abstract super space whose basis is the echelon
    /// basis. A row equal to a standard basis vector keeps its label;
    /// any other row is called `w<k>`.
    pub fn basis_space(&self) -> SuperSpace {
        let basis = self
            .rows
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let p = self.pivots[k];
                let standard = row.support().count() == 1;
                let label = if standard {
                    self.ambient.label(p).to_string()
                } else {
                    format!("w{}", k + 1)
                };
                (label, self.basis_parity(k))
            })
            .collect::<Vec<_>>();
        SuperSpace::with_basis(self.ambient.field(), basis.clone()).unwrap_or_else(|_| {
            let renamed = basis
                .into_iter()
                .enumerate()
                .map(|(k, (_, p))| (format!("w{}", k + 1), p))
                .collect();
            SuperSpace::with_basis(self.ambient.field(), renamed).expect("w labels are unique")
        })
    }
}

/// Every graded subspace of a space over `F_p`, built block by block from
/// echelon pivot patterns so that gradedness holds by construction.
pub fn all_graded_subspaces(ambient: &SuperSpace) -> Vec<GradedSubspace> {
    let field = ambient.field();
    let blocks: Vec<Vec<usize>> = Parity::BOTH
        .iter()
        .map(|p| (0..ambient.dim()).filter(|i| ambient.parity(*i) == *p).collect())
        .collect();
    let embed = |cols: &[usize], rows: Rows| -> Vec<(usize, Vec<Scalar>)> {
        rows.into_iter()
            .map(|r| {
                let mut full = vec![field.zero(); ambient.dim()];
                let mut pivot = None;
                for (k, x) in r.into_iter().enumerate() {
                    if pivot.is_none() && !x.is_zero() {
                        pivot = Some(cols[k]);
                    }
                    full[cols[k]] = x;
                }
                (pivot.expect("echelon rows are nonzero"), full)
            })
            .collect()
    };
    let even = echelon::all_echelon_bases(blocks[0].len(), field);
    let odd = echelon::all_echelon_bases(blocks[1].len(), field);
    let mut out = Vec::with_capacity(even.len() * odd.len());
    for e in &even {
        for o in &odd {
            let mut rows = embed(&blocks[0], e.clone());
            rows.extend(embed(&blocks[1], o.clone()));
            rows.sort_by_key(|(p, _)| *p);
            let (pivots, rows) = rows.into_iter().unzip();
            out.push(GradedSubspace::from_echelon(ambient, rows, pivots));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::Field;

    fn v11() -> SuperSpace {
        SuperSpace::standard(Field::Rational, 1, 1)
    }

    #[test]
    fn spans() {
        let v = v11();
        let z = GradedSubspace::from_vectors(&v, &[v.zero()]).unwrap();
        assert_eq!(z.dim(), 0);
        let e1 = v.basis_vector(0);
        let s = GradedSubspace::from_vectors(&v, &[e1.clone(), e1.scale(&Field::Rational.from_i64(2))])
            .unwrap();
        assert_eq!(s.dim(), 1);
        let mixed = v.vector_from_ints(&[1, 1]).unwrap();
        let g = GradedSubspace::from_vectors(&v, &[mixed]).unwrap();
        assert_eq!(g, GradedSubspace::full(&v));
    }

    #[test]
    fn kernels_and_intersections() {
        let v = v11();
        assert_eq!(
            GradedSubspace::kernel_of_maps(&v, &[]).unwrap(),
            GradedSubspace::full(&v)
        );
        let k = GradedSubspace::kernel_of_maps(&v, &[SuperMap::elementary(&v, 0, 1)]).unwrap();
        assert_eq!(k, GradedSubspace::from_vectors(&v, &[v.basis_vector(0)]).unwrap());
        let a = GradedSubspace::from_vectors(&v, &[v.basis_vector(0)]).unwrap();
        let b = GradedSubspace::from_vectors(&v, &[v.basis_vector(1)]).unwrap();
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        assert_eq!(a.sum(&b).unwrap(), GradedSubspace::full(&v));
    }

    #[test]
    fn coordinates_reconstruct() {
        let v = SuperSpace::standard(Field::Rational, 3, 0);
        let s = GradedSubspace::from_vectors(
            &v,
            &[v.vector_from_ints(&[1, 2, 3]).unwrap(), v.vector_from_ints(&[0, 1, 1]).unwrap()],
        )
        .unwrap();
        let x = v.vector_from_ints(&[2, 5, 7]).unwrap();
        let c = s.coordinates(&x).unwrap().unwrap();
        assert_eq!(s.combination(&c), x);
        assert!(!s.contains(&v.basis_vector(2)).unwrap());
    }

    #[test]
    fn enumeration_is_canonical() {
        let f = Field::prime(3).unwrap();
        let v = SuperSpace::standard(f, 1, 2);
        let all = all_graded_subspaces(&v);
        // 2 subspaces of F_3^1 times 1 + 4 + 1 of F_3^2
        assert_eq!(all.len(), 12);
        for s in &all {
            let rebuilt = GradedSubspace::from_vectors(&v, s.basis()).unwrap();
            assert_eq!(&rebuilt, s);
        }
    }
}
