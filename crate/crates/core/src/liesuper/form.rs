use super::table::BracketTable;
use crate::error::{AlgebraError, Result};
use crate::superlinalg::{echelon, gl_space, Parity, Scalar, SuperSpace, SuperVector};
use crate::verdict::{Residual, Verdict};

/// An even, super symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenBilinearForm {
    space: SuperSpace,
    gram: Vec<Scalar>,
}

impl EvenBilinearForm {
    /// Rejects Gram matrices that pair even with odd or are not super
    /// symmetric, `B(x,y) = (-1)^{|x||y|} B(y,x)`.
    pub fn new(space: &SuperSpace, gram: Vec<Scalar>) -> Result<EvenBilinearForm> {
        let n = space.dim();
        if gram.len() != n * n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n * n,
                found: gram.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let b = &gram[i * n + j];
                let (pi, pj) = (space.parity(i), space.parity(j));
                if pi != pj && !b.is_zero() {
                    return Err(AlgebraError::Invalid(format!(
                        "form is not even: B({}, {}) = {b}",
                        space.label(i),
                        space.label(j)
                    )));
                }
                let swapped = gram[j * n + i].clone().signed(Parity::koszul(pi, pj));
                if *b != swapped {
                    return Err(AlgebraError::Invalid(format!(
                        "form is not super symmetric at ({}, {})",
                        space.label(i),
                        space.label(j)
                    )));
                }
            }
        }
        Ok(EvenBilinearForm {
            space: space.clone(),
            gram,
        })
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn gram(&self) -> &[Scalar] {
        &self.gram
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.gram[i * self.space.dim() + j]
    }

    pub fn eval(&self, x: &SuperVector, y: &SuperVector) -> Result<Scalar> {
        x.space().require_same(&self.space)?;
        y.space().require_same(&self.space)?;
        let mut acc = self.space.field().zero();
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                let b = self.entry(i, j);
                if !b.is_zero() {
                    acc = acc + &(&(xi * yj) * b);
                }
            }
        }
        Ok(acc)
    }

    pub fn is_nondegenerate(&self) -> bool {
        let n = self.space.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect())
            .collect();
        echelon::rank(rows, n) == n
    }
}

/// `B(X,Y) = str(XY)` on `gl(V)`, in the basis `E[i,j]`.
///
/// `E[i,j]E[k,l] = δ_{jk} E[i,l]`, whose supertrace is `±δ_{il}` with the
/// sign of `|i|`.
pub fn supertrace_form(v: &SuperSpace) -> EvenBilinearForm {
    let gl = gl_space(v);
    let n = v.dim();
    let field = v.field();
    let mut gram = vec![field.zero(); n.pow(4)];
    for i in 0..n {
        for j in 0..n {
            let a = i * n + j;
            let b = j * n + i;
            gram[a * n * n + b] = match v.parity(i) {
                Parity::Even => field.one(),
                Parity::Odd => -field.one(),
            };
        }
    }
    EvenBilinearForm::new(&gl, gram).expect("supertrace form is even and super symmetric")
}

/// `ad_x ∈ o(V)` for every basis `x`, checked as
/// `B(ω(x,y), z) + (-1)^{|x||y|} B(y, ω(x,z)) = 0` on basis triples.
pub fn is_quadratic_compatible(table: &BracketTable, form: &EvenBilinearForm) -> Result<Verdict> {
    const NAME: &str = "invariant form";
    table.space().require_same(form.space())?;
    if !form.is_nondegenerate() {
        return Err(AlgebraError::DegenerateForm);
    }
    let s = table.space();
    let n = s.dim();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let a = form.eval(table.get(i, j), &s.basis_vector(k))?;
                let b = form
                    .eval(&s.basis_vector(j), table.get(i, k))?
                    .signed(Parity::koszul(s.parity(i), s.parity(j)));
                let residual = a + b;
                if !residual.is_zero() {
                    return Ok(Verdict::fail(
                        NAME,
                        checked,
                        vec![i, j, k],
                        [i, j, k].iter().map(|x| s.label(*x).to_string()).collect(),
                        Residual::Scalar(residual),
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass(NAME, checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::gl_bracket_table;
    use crate::superlinalg::{Field, SuperMap};

    #[test]
    fn supertrace_form_values() {
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        let b = supertrace_form(&v);
        let g = b.space().clone();
        let idx = |s: &str| g.basis_vector(g.index_of(s).unwrap());
        let q = Field::Rational;
        assert_eq!(b.eval(&idx("E[e1,e1]"), &idx("E[e1,e1]")).unwrap(), q.one());
        assert_eq!(b.eval(&idx("E[e1,f1]"), &idx("E[f1,e1]")).unwrap(), q.one());
        assert_eq!(b.eval(&idx("E[f1,e1]"), &idx("E[e1,f1]")).unwrap(), q.from_i64(-1));
        assert!(b.is_nondegenerate());
    }

    #[test]
    fn supertrace_form_matches_matrix_product() {
        let v = SuperSpace::standard(Field::Rational, 2, 1);
        let b = supertrace_form(&v);
        let n = v.dim();
        for a in 0..n * n {
            for c in 0..n * n {
                let x = SuperMap::elementary(&v, a / n, a % n);
                let y = SuperMap::elementary(&v, c / n, c % n);
                let direct = x.compose(&y).unwrap().supertrace().unwrap();
                assert_eq!(b.entry(a, c), &direct);
            }
        }
    }

    #[test]
    fn quadratic_examples() {
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        assert!(is_quadratic_compatible(&gl_bracket_table(&v), &supertrace_form(&v))
            .unwrap()
            .is_pass());
        // on Q^{1|1} every even super symmetric form has B(f1,f1) = 0
        let q = Field::Rational;
        let mut h = BracketTable::zero(&v);
        h.set(1, 1, v.basis_vector(0)).unwrap();
        let degenerate = EvenBilinearForm::new(&v, vec![q.one(), q.zero(), q.zero(), q.zero()]).unwrap();
        assert_eq!(
            is_quadratic_compatible(&h, &degenerate),
            Err(AlgebraError::DegenerateForm)
        );
        let plane = SuperSpace::standard(Field::Rational, 2, 0);
        let id = EvenBilinearForm::new(&plane, vec![q.one(), q.zero(), q.zero(), q.one()]).unwrap();
        assert!(is_quadratic_compatible(&BracketTable::zero(&plane), &id).unwrap().is_pass());
    }

    #[test]
    fn heisenberg_is_not_quadratic() {
        // [f1,f2] = [f2,f1] = e1 on Q^{1|2}, B(e1,e1) = 1, B(f1,f2) = -B(f2,f1) = 1;
        // first failure: B([f1,e1],f2) + B(e1,[f1,f2]) = 1
        let v = SuperSpace::standard(Field::Rational, 1, 2);
        let q = Field::Rational;
        let mut h = BracketTable::zero(&v);
        h.set(1, 2, v.basis_vector(0)).unwrap();
        h.set(2, 1, v.basis_vector(0)).unwrap();
        let ints = [1, 0, 0, 0, 0, 1, 0, -1, 0];
        let b = EvenBilinearForm::new(&v, ints.iter().map(|x| q.from_i64(*x)).collect()).unwrap();
        let verdict = is_quadratic_compatible(&h, &b).unwrap();
        let failure = verdict.failure.unwrap();
        assert_eq!(failure.labels, ["f1", "e1", "f2"]);
        assert_eq!(failure.residual, Residual::Scalar(q.one()));
    }

    #[test]
    fn rejects_non_super_symmetric() {
        let v = SuperSpace::standard(Field::Rational, 0, 1);
        let q = Field::Rational;
        // on an odd line super symmetry forces B(f,f) = -B(f,f)
        assert!(EvenBilinearForm::new(&v, vec![q.one()]).is_err());
    }
}
