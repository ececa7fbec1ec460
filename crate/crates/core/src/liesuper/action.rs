use super::table::BracketTable;
use crate::error::{AlgebraError, Result};
use crate::superlinalg::{Parity, SuperMap, SuperSpace, SuperVector};
use crate::verdict::{Residual, Verdict};

/// A parity-preserving linear map `ρ: L → gl(V)`, given by the images of
/// the basis of `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    algebra: SuperSpace,
    module: SuperSpace,
    images: Vec<SuperMap>,
}

impl Representation {
    pub fn new(algebra: &SuperSpace, module: &SuperSpace, images: Vec<SuperMap>) -> Result<Representation> {
        if images.len() != algebra.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: algebra.dim(),
                found: images.len(),
            });
        }
        for (i, m) in images.iter().enumerate() {
            m.domain().require_same(module)?;
            m.codomain().require_same(module)?;
            if !m.is_homogeneous_of(algebra.parity(i)) {
                return Err(AlgebraError::InvalidAction(format!(
                    "image of {} is not of parity {}",
                    algebra.label(i),
                    algebra.parity(i)
                )));
            }
        }
        Ok(Representation {
            algebra: algebra.clone(),
            module: module.clone(),
            images,
        })
    }

    pub fn zero(algebra: &SuperSpace, module: &SuperSpace) -> Representation {
        Representation {
            algebra: algebra.clone(),
            module: module.clone(),
            images: vec![SuperMap::zero(module, module); algebra.dim()],
        }
    }

    pub fn algebra(&self) -> &SuperSpace {
        &self.algebra
    }

    pub fn module(&self) -> &SuperSpace {
        &self.module
    }

    pub fn images(&self) -> &[SuperMap] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &SuperMap {
        &self.images[i]
    }

    /// `ρ(x)` for an arbitrary element of `L`.
    pub fn of(&self, x: &SuperVector) -> Result<SuperMap> {
        x.space().require_same(&self.algebra)?;
        let mut out = SuperMap::zero(&self.module, &self.module);
        for (i, c) in x.support() {
            out = out.add(&self.images[i].scale(c))?;
        }
        Ok(out)
    }

    /// `x ▹ v`.
    pub fn act(&self, x: &SuperVector, v: &SuperVector) -> Result<SuperVector> {
        self.of(x)?.apply(v)
    }
}

/// `ρ([x,y])v = ρ(x)ρ(y)v - (-1)^{|x||y|}ρ(y)ρ(x)v` on all basis `x, y` of
/// `L` and `v` of `V`.
pub fn check_action(algebra: &BracketTable, rho: &Representation) -> Result<Verdict> {
    const NAME: &str = "action";
    algebra.space().require_same(rho.algebra())?;
    let l = algebra.space();
    let v = rho.module();
    let mut checked = 0;
    for i in 0..l.dim() {
        for j in 0..l.dim() {
            let lhs_map = rho.of(algebra.get(i, j))?;
            let xy = rho.image(i).compose(rho.image(j))?;
            let yx = rho.image(j).compose(rho.image(i))?;
            for k in 0..v.dim() {
                checked += 1;
                let b = v.basis_vector(k);
                let lhs = lhs_map.apply(&b)?;
                let rhs = &xy.apply(&b)?
                    - &yx.apply(&b)?.signed(Parity::koszul(l.parity(i), l.parity(j)));
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    return Ok(Verdict::fail(
                        NAME,
                        checked,
                        vec![i, j, k],
                        vec![
                            l.label(i).to_string(),
                            l.label(j).to_string(),
                            v.label(k).to_string(),
                        ],
                        Residual::Vector(residual),
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(NAME, checked))
}

/// `L ⋉ V` with `[x+u, y+v] = [x,y] + x▹v - (-1)^{|u||y|} y▹u`. The basis is
/// that of `L` followed by that of `V`; labels must not collide.
pub fn semidirect_product(algebra: &BracketTable, rho: &Representation) -> Result<BracketTable> {
    let verdict = check_action(algebra, rho)?;
    if !verdict.is_pass() {
        return Err(AlgebraError::InvalidAction(verdict.to_string()));
    }
    let l = algebra.space();
    let v = rho.module();
    let basis = l
        .labels()
        .iter()
        .zip(l.parities())
        .chain(v.labels().iter().zip(v.parities()))
        .map(|(s, p)| (s.clone(), *p))
        .collect();
    let sum = SuperSpace::with_basis(l.field(), basis)?;
    let nl = l.dim();
    let from_l = |x: &SuperVector| {
        let mut out = sum.zero();
        for (i, c) in x.support() {
            out.add_scaled(c, &sum.basis_vector(i));
        }
        out
    };
    let from_v = |x: &SuperVector| {
        let mut out = sum.zero();
        for (i, c) in x.support() {
            out.add_scaled(c, &sum.basis_vector(nl + i));
        }
        out
    };
    BracketTable::from_fn(&sum, |a, b| {
        Ok(match (a < nl, b < nl) {
            (true, true) => from_l(algebra.get(a, b)),
            (true, false) => from_v(&rho.image(a).column(b - nl)),
            (false, true) => {
                let u = a - nl;
                from_v(&rho.image(b).column(u)).signed(!Parity::koszul(v.parity(u), l.parity(b)))
            }
            (false, false) => sum.zero(),
        })
    })
}
