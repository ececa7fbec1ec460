//! The omni-Lie superalgebra `E = gl(V) ⊕ V`.
//!
//! Elements are pairs `A + x`. On homogeneous elements (where `|A| = |x|`)
//!
//! * `(A+x)∘(B+y) = [A,B] + Ay`
//! * `⟦A+x,B+y⟧ = [A,B] + ½(Ay - (-1)^{|x||y|} Bx)`
//! * `⟨A+x,B+y⟩ = ½(Ay + (-1)^{|x||y|} Bx)`
//!
//! and all three are extended bilinearly over the even/odd decomposition.

use crate::error::{AlgebraError, Result};
use crate::liesuper::{check_leibniz_rule, jacobiator, BracketTable};
use crate::superlinalg::{gl_space, Field, Parity, Scalar, SuperMap, SuperSpace, SuperVector};
use crate::verdict::{Limit, Residual, Verdict};

/// `V`, `gl(V)` and `E = gl(V) ⊕ V` with its fixed basis: every `E[i,j]`
/// in row-major order, then the basis of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmniSpace {
    v: SuperSpace,
    gl: SuperSpace,
    e: SuperSpace,
}

impl OmniSpace {
    pub fn new(v: &SuperSpace) -> OmniSpace {
        let gl = gl_space(v);
        let basis = gl
            .labels()
            .iter()
            .zip(gl.parities())
            .chain(v.labels().iter().zip(v.parities()))
            .map(|(l, p)| (l.clone(), *p))
            .collect();
        let e = SuperSpace::with_basis(v.field(), basis)
            .expect("vector labels never look like E[i,j]");
        OmniSpace { v: v.clone(), gl, e }
    }

    pub fn v(&self) -> &SuperSpace {
        &self.v
    }

    pub fn gl(&self) -> &SuperSpace {
        &self.gl
    }

    pub fn e(&self) -> &SuperSpace {
        &self.e
    }

    /// Index in `E` of the first basis vector of `V`.
    pub fn vector_offset(&self) -> usize {
        self.gl.dim()
    }

    /// `x ↦ 0 + x`.
    pub fn embed(&self, x: &SuperVector) -> Result<SuperVector> {
        x.space().require_same(&self.v)?;
        let mut coords = vec![self.v.field().zero(); self.gl.dim()];
        coords.extend(x.coords().iter().cloned());
        self.e.vector(coords)
    }

    /// `A ↦ A + 0`.
    pub fn embed_map(&self, a: &SuperMap) -> Result<SuperVector> {
        let mut coords = a.to_gl_vector(&self.gl)?.into_coords();
        coords.extend((0..self.v.dim()).map(|_| self.v.field().zero()));
        self.e.vector(coords)
    }

    /// The `V` component of an element of `E`.
    pub fn vector_part(&self, e: &SuperVector) -> Result<SuperVector> {
        e.space().require_same(&self.e)?;
        self.v.vector(e.coords()[self.gl.dim()..].to_vec())
    }

    /// The `gl(V)` component of an element of `E`, as a vector of `gl(V)`.
    pub fn gl_part(&self, e: &SuperVector) -> Result<SuperVector> {
        e.space().require_same(&self.e)?;
        self.gl.vector(e.coords()[..self.gl.dim()].to_vec())
    }

    pub fn element(&self, e: &SuperVector) -> Result<OmniElement> {
        Ok(OmniElement {
            map: SuperMap::from_gl_vector(&self.v, &self.gl_part(e)?)?,
            vector: self.vector_part(e)?,
        })
    }

    pub fn to_vector(&self, e: &OmniElement) -> Result<SuperVector> {
        Ok(&self.embed_map(&e.map)? + &self.embed(&e.vector)?)
    }
}

/// An element `A + x` of `gl(V) ⊕ V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmniElement {
    pub map: SuperMap,
    pub vector: SuperVector,
}

impl OmniElement {
    pub fn new(map: SuperMap, vector: SuperVector) -> Result<OmniElement> {
        if !map.is_endomorphism() {
            return Err(AlgebraError::SpaceMismatch);
        }
        map.domain().require_same(vector.space())?;
        Ok(OmniElement { map, vector })
    }

    pub fn zero(v: &SuperSpace) -> OmniElement {
        OmniElement {
            map: SuperMap::zero(v, v),
            vector: v.zero(),
        }
    }

    pub fn from_map(map: SuperMap) -> Result<OmniElement> {
        let v = map.domain().clone();
        OmniElement::new(map, v.zero())
    }

    pub fn from_vector(vector: SuperVector) -> OmniElement {
        let v = vector.space().clone();
        OmniElement {
            map: SuperMap::zero(&v, &v),
            vector,
        }
    }

    pub fn space(&self) -> &SuperSpace {
        self.vector.space()
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero() && self.vector.is_zero()
    }

    pub fn part(&self, parity: Parity) -> OmniElement {
        OmniElement {
            map: self.map.part(parity),
            vector: self.vector.part(parity),
        }
    }

    /// The nonzero homogeneous components.
    pub fn homogeneous_parts(&self) -> Vec<(Parity, OmniElement)> {
        Parity::BOTH
            .iter()
            .map(|p| (*p, self.part(*p)))
            .filter(|(_, e)| !e.is_zero())
            .collect()
    }

    pub fn parity(&self) -> Option<Parity> {
        match self.homogeneous_parts().as_slice() {
            [] => Some(Parity::Even),
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    pub fn add(&self, other: &OmniElement) -> Result<OmniElement> {
        Ok(OmniElement {
            map: self.map.add(&other.map)?,
            vector: self.vector.clone() + other.vector.clone(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> OmniElement {
        OmniElement {
            map: self.map.scale(c),
            vector: self.vector.scale(c),
        }
    }

    pub fn signed(self, negative: bool) -> OmniElement {
        OmniElement {
            map: if negative { self.map.neg() } else { self.map },
            vector: self.vector.signed(negative),
        }
    }
}

fn half(field: Field, operation: &'static str) -> Result<Scalar> {
    field.require_invertible(2, operation)?;
    field.one().div(&field.from_i64(2))
}

fn same_v(e1: &OmniElement, e2: &OmniElement) -> Result<()> {
    e1.space().require_same(e2.space())
}

/// `(A+x)∘(B+y) = [A,B] + Ay`.
pub fn circ(e1: &OmniElement, e2: &OmniElement) -> Result<OmniElement> {
    same_v(e1, e2)?;
    OmniElement::new(e1.map.super_commutator(&e2.map)?, e1.map.apply(&e2.vector)?)
}

/// `⟦A+x,B+y⟧ = [A,B] + ½(Ay - (-1)^{|x||y|} Bx)`.
pub fn bracket(e1: &OmniElement, e2: &OmniElement) -> Result<OmniElement> {
    same_v(e1, e2)?;
    let h = half(e1.space().field(), "the omni bracket")?;
    let mut v = e1.map.apply(&e2.vector)?;
    for (a, x) in e1.homogeneous_parts() {
        for (b, y) in e2.homogeneous_parts() {
            let bx = y.map.apply(&x.vector)?.signed(!Parity::koszul(a, b));
            v = v + bx;
        }
    }
    OmniElement::new(e1.map.super_commutator(&e2.map)?, v.scale(&h))
}

/// `⟨A+x,B+y⟩ = ½(Ay + (-1)^{|x||y|} Bx)`, a vector of `V`.
pub fn pairing(e1: &OmniElement, e2: &OmniElement) -> Result<SuperVector> {
    same_v(e1, e2)?;
    let h = half(e1.space().field(), "the omni pairing")?;
    let mut v = e1.map.apply(&e2.vector)?;
    for (a, x) in e1.homogeneous_parts() {
        for (b, y) in e2.homogeneous_parts() {
            v = v + y.map.apply(&x.vector)?.signed(Parity::koszul(a, b));
        }
    }
    Ok(v.scale(&h))
}

type Triple<'a> = [&'a OmniElement; 3];

/// Runs `f` on every combination of homogeneous parts and sums the results.
fn trilinear<T>(
    es: Triple<'_>,
    zero: T,
    add: impl Fn(T, T) -> Result<T>,
    f: impl Fn([&OmniElement; 3], [Parity; 3]) -> Result<T>,
) -> Result<T> {
    let mut acc = zero;
    for (a, x) in es[0].homogeneous_parts() {
        for (b, y) in es[1].homogeneous_parts() {
            for (c, z) in es[2].homogeneous_parts() {
                acc = add(acc, f([&x, &y, &z], [a, b, c])?)?;
            }
        }
    }
    Ok(acc)
}

/// `(-1)^{|z||x|}⟦⟦e1,e2⟧,e3⟧ + (-1)^{|x||y|}⟦⟦e2,e3⟧,e1⟧ + (-1)^{|y||z|}⟦⟦e3,e1⟧,e2⟧`.
pub fn jacobiator_j1(e1: &OmniElement, e2: &OmniElement, e3: &OmniElement) -> Result<OmniElement> {
    same_v(e1, e2)?;
    same_v(e1, e3)?;
    trilinear(
        [e1, e2, e3],
        OmniElement::zero(e1.space()),
        |a, b| a.add(&b),
        |[x, y, z], [a, b, c]| {
            let t1 = bracket(&bracket(x, y)?, z)?.signed(Parity::koszul(c, a));
            let t2 = bracket(&bracket(y, z)?, x)?.signed(Parity::koszul(a, b));
            let t3 = bracket(&bracket(z, x)?, y)?.signed(Parity::koszul(b, c));
            t1.add(&t2)?.add(&t3)
        },
    )
}

/// `⅓{(-1)^{|z||x|}⟨⟦e1,e2⟧,e3⟩ + (-1)^{|x||y|}⟨⟦e2,e3⟧,e1⟩ + (-1)^{|y||z|}⟨⟦e3,e1⟧,e2⟩}`.
pub fn jacobiator_t(e1: &OmniElement, e2: &OmniElement, e3: &OmniElement) -> Result<SuperVector> {
    same_v(e1, e2)?;
    same_v(e1, e3)?;
    let field = e1.space().field();
    field.require_invertible(3, "the Jacobiator T")?;
    let third = field.one().div(&field.from_i64(3))?;
    let sum = trilinear(
        [e1, e2, e3],
        e1.space().zero(),
        |a, b| Ok(a + b),
        |[x, y, z], [a, b, c]| {
            let t1 = pairing(&bracket(x, y)?, z)?.signed(Parity::koszul(c, a));
            let t2 = pairing(&bracket(y, z)?, x)?.signed(Parity::koszul(a, b));
            let t3 = pairing(&bracket(z, x)?, y)?.signed(Parity::koszul(b, c));
            Ok(&(&t1 + &t2) + &t3)
        },
    )?;
    Ok(sum.scale(&third))
}

/// Structure constants of `∘`, `⟦·,·⟧` and `⟨·,·⟩` on the basis of `E`.
#[derive(Clone, Debug)]
pub struct OmniTables {
    space: OmniSpace,
    circ: BracketTable,
    bracket: BracketTable,
    pairing: Vec<SuperVector>,
}

impl OmniTables {
    /// Needs 2 to be invertible.
    pub fn new(v: &SuperSpace) -> Result<OmniTables> {
        let space = OmniSpace::new(v);
        let e = space.e().clone();
        let basis: Vec<OmniElement> = e
            .basis()
            .iter()
            .map(|b| space.element(b))
            .collect::<Result<_>>()?;
        let circ_t = BracketTable::from_fn(&e, |i, j| space.to_vector(&circ(&basis[i], &basis[j])?))?;
        let bracket_t =
            BracketTable::from_fn(&e, |i, j| space.to_vector(&bracket(&basis[i], &basis[j])?))?;
        let n = e.dim();
        let mut pair = Vec::with_capacity(n * n);
        for x in &basis {
            for y in &basis {
                pair.push(pairing(x, y)?);
            }
        }
        Ok(OmniTables {
            space,
            circ: circ_t,
            bracket: bracket_t,
            pairing: pair,
        })
    }

    pub fn space(&self) -> &OmniSpace {
        &self.space
    }

    pub fn circ(&self) -> &BracketTable {
        &self.circ
    }

    pub fn bracket(&self) -> &BracketTable {
        &self.bracket
    }

    /// `⟨b_i, b_j⟩` for basis vectors of `E`.
    pub fn pairing_basis(&self, i: usize, j: usize) -> &SuperVector {
        &self.pairing[i * self.space.e().dim() + j]
    }

    /// `⟨u, w⟩` for arbitrary `u, w ∈ E`.
    pub fn pairing(&self, u: &SuperVector, w: &SuperVector) -> Result<SuperVector> {
        u.space().require_same(self.space.e())?;
        w.space().require_same(self.space.e())?;
        let mut out = self.space.v().zero();
        for (i, a) in u.support() {
            for (j, b) in w.support() {
                out.add_scaled(&(a * b), self.pairing_basis(i, j));
            }
        }
        Ok(out)
    }

    /// `⟨u, b_j⟩`.
    fn pairing_right_basis(&self, u: &SuperVector, j: usize) -> SuperVector {
        let mut out = self.space.v().zero();
        for (i, a) in u.support() {
            out.add_scaled(a, self.pairing_basis(i, j));
        }
        out
    }

    /// `T` on basis vectors `i, j, k` of `E`. Needs 3 to be invertible.
    pub fn jacobiator_t(&self, i: usize, j: usize, k: usize) -> Result<SuperVector> {
        let field = self.space.v().field();
        field.require_invertible(3, "the Jacobiator T")?;
        let e = self.space.e();
        let (x, y, z) = (e.parity(i), e.parity(j), e.parity(k));
        let b = &self.bracket;
        let t1 = self.pairing_right_basis(b.get(i, j), k).signed(Parity::koszul(z, x));
        let t2 = self.pairing_right_basis(b.get(j, k), i).signed(Parity::koszul(x, y));
        let t3 = self.pairing_right_basis(b.get(k, i), j).signed(Parity::koszul(y, z));
        let third = field.one().div(&field.from_i64(3))?;
        Ok((&(&t1 + &t2) + &t3).scale(&third))
    }

    /// `J1` on basis vectors of `E`.
    pub fn jacobiator_j1(&self, i: usize, j: usize, k: usize) -> SuperVector {
        jacobiator(&self.bracket, i, j, k)
    }
}

fn guard(v: &SuperSpace, limit: Limit) -> Result<()> {
    let n = v.dim();
    limit.check(n * n + n)
}

/// The super Leibniz rule for `∘` on every basis triple of `E`.
pub fn check_omni_leibniz(v: &SuperSpace, limit: Limit) -> Result<Verdict> {
    guard(v, limit)?;
    Ok(check_leibniz_rule(OmniTables::new(v)?.circ()))
}

/// `J1 = T` on every basis triple of `E`, as two verdicts: the
/// `gl(V)` component of `J1` vanishes, and its `V` component equals `T`.
pub fn check_prop_homotopy(v: &SuperSpace, limit: Limit) -> Result<Vec<Verdict>> {
    guard(v, limit)?;
    v.field().require_invertible(3, "the Jacobiator T")?;
    let tables = OmniTables::new(v)?;
    Ok(prop_homotopy_verdicts(&tables))
}

pub(crate) fn prop_homotopy_verdicts(tables: &OmniTables) -> Vec<Verdict> {
    const GL: &str = "gl component of J1 vanishes";
    const EQ: &str = "J1 = T";
    let space = tables.space();
    let e = space.e();
    let n = e.dim();
    let labels = |t: [usize; 3]| t.iter().map(|i| e.label(*i).to_string()).collect();
    let mut gl_fail = None;
    let mut eq_fail = None;
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let j1 = tables.jacobiator_j1(i, j, k);
                let gl = space.gl_part(&j1).expect("J1 lives in E");
                if gl_fail.is_none() && !gl.is_zero() {
                    gl_fail = Some(Verdict::fail(GL, checked, vec![i, j, k], labels([i, j, k]), Residual::Vector(gl)));
                }
                if eq_fail.is_none() {
                    let t = tables.jacobiator_t(i, j, k).expect("3 checked invertible");
                    let t = space.embed(&t).expect("T lives in V");
                    let residual = &j1 - &t;
                    if !residual.is_zero() {
                        eq_fail = Some(Verdict::fail(EQ, checked, vec![i, j, k], labels([i, j, k]), Residual::Vector(residual)));
                    }
                }
            }
        }
    }
    vec![
        gl_fail.unwrap_or_else(|| Verdict::pass(GL, checked)),
        eq_fail.unwrap_or_else(|| Verdict::pass(EQ, checked)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::check_super_skew;

    fn v11() -> SuperSpace {
        SuperSpace::standard(Field::Rational, 1, 1)
    }

    fn map(v: &SuperSpace, i: &str, j: &str) -> SuperMap {
        SuperMap::elementary(v, v.index_of(i).unwrap(), v.index_of(j).unwrap())
    }

    fn vec(v: &SuperSpace, l: &str) -> SuperVector {
        v.basis_vector(v.index_of(l).unwrap())
    }

    #[test]
    fn circ_examples() {
        let v = v11();
        let a = OmniElement::from_map(map(&v, "e1", "e1")).unwrap();
        let e1 = OmniElement::from_vector(vec(&v, "e1"));
        assert_eq!(circ(&a, &e1).unwrap(), e1);
        assert!(circ(&e1, &a).unwrap().is_zero());
        let x = OmniElement::new(map(&v, "e1", "f1"), vec(&v, "f1")).unwrap();
        let y = OmniElement::new(map(&v, "f1", "e1"), vec(&v, "e1")).unwrap();
        let expected = SuperMap::identity(&v);
        assert_eq!(circ(&x, &y).unwrap(), OmniElement::from_map(expected).unwrap());
    }

    #[test]
    fn bracket_and_pairing_examples() {
        let v = v11();
        let q = Field::Rational;
        let half = q.fraction(1, 2).unwrap();
        let f1 = OmniElement::from_vector(vec(&v, "f1"));
        assert!(bracket(&f1, &f1).unwrap().is_zero());
        let a = OmniElement::from_map(map(&v, "e1", "e1")).unwrap();
        let e1 = OmniElement::from_vector(vec(&v, "e1"));
        assert_eq!(
            bracket(&a, &e1).unwrap(),
            OmniElement::from_vector(vec(&v, "e1").scale(&half))
        );
        let x = OmniElement::new(map(&v, "e1", "f1"), vec(&v, "f1")).unwrap();
        assert_eq!(pairing(&x, &f1).unwrap(), vec(&v, "e1").scale(&half));
        assert!(pairing(&e1, &f1).unwrap().is_zero());
    }

    #[test]
    fn characteristic_two_and_three_are_rejected() {
        let v = SuperSpace::standard(Field::prime(3).unwrap(), 1, 0);
        let e = OmniElement::from_vector(v.basis_vector(0));
        assert!(bracket(&e, &e).is_ok());
        assert!(matches!(
            jacobiator_t(&e, &e, &e),
            Err(AlgebraError::Characteristic { divisor: 3, .. })
        ));
    }

    #[test]
    fn t_on_pure_maps_and_mixed_triple() {
        let v = v11();
        let a = OmniElement::from_map(map(&v, "e1", "e1")).unwrap();
        let b = OmniElement::from_map(map(&v, "e1", "f1")).unwrap();
        assert!(jacobiator_t(&a, &b, &a).unwrap().is_zero());
        let e1 = OmniElement::from_vector(vec(&v, "e1"));
        let j1 = jacobiator_j1(&a, &a, &e1).unwrap();
        let t = jacobiator_t(&a, &a, &e1).unwrap();
        assert!(j1.map.is_zero());
        assert_eq!(j1.vector, t);
        // ⟦E,E⟧ = 0; ⟦E,e1⟧ = ½e1 and ⟦e1,E⟧ = -½e1 pair with E to ±¼e1 and cancel
        assert!(t.is_zero());
    }

    #[test]
    fn tables_agree_with_element_products() {
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        let tables = OmniTables::new(&v).unwrap();
        let s = tables.space();
        let e = s.e();
        assert_eq!(e.dim(), 6);
        assert_eq!(e.label(4), "e1");
        assert!(check_super_skew(tables.bracket()).is_pass());
        for i in 0..e.dim() {
            for j in 0..e.dim() {
                // ∘ = ⟦·,·⟧ + embedded pairing
                let sum = tables.bracket().get(i, j) + &s.embed(tables.pairing_basis(i, j)).unwrap();
                assert_eq!(tables.circ().get(i, j), &sum);
            }
        }
    }

    #[test]
    fn leibniz_and_homotopy_small() {
        for (m, n) in [(1, 0), (0, 1), (1, 1)] {
            let v = SuperSpace::standard(Field::Rational, m, n);
            assert!(check_omni_leibniz(&v, Limit::default()).unwrap().is_pass());
            let verdicts = check_prop_homotopy(&v, Limit::default()).unwrap();
            assert!(verdicts.iter().all(Verdict::is_pass), "{verdicts:?}");
        }
    }

    #[test]
    fn guard_applies() {
        let v = SuperSpace::standard(Field::Rational, 2, 2);
        assert!(matches!(
            check_omni_leibniz(&v, Limit { max_dim: 19 }),
            Err(AlgebraError::GuardExceeded { dim: 20, limit: 19 })
        ));
    }
}
