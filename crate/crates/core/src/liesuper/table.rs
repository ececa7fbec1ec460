use crate::error::{AlgebraError, Result};
use crate::superlinalg::{gl_space, Parity, SuperMap, SuperSpace, SuperVector};
use crate::verdict::{Residual, Verdict};

/// Structure constants of a bilinear product on a super space: the value
/// on every ordered pair of basis vectors, stored densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    space: SuperSpace,
    values: Vec<SuperVector>,
}

impl BracketTable {
    pub fn zero(space: &SuperSpace) -> BracketTable {
        let n = space.dim();
        BracketTable {
            space: space.clone(),
            values: vec![space.zero(); n * n],
        }
    }

    /// `values[i * dim + j]` is the product of basis vectors `i` and `j`.
    pub fn new(space: &SuperSpace, values: Vec<SuperVector>) -> Result<BracketTable> {
        let n = space.dim();
        if values.len() != n * n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n * n,
                found: values.len(),
            });
        }
        for v in &values {
            v.space().require_same(space)?;
        }
        Ok(BracketTable {
            space: space.clone(),
            values,
        })
    }

    pub fn from_fn(
        space: &SuperSpace,
        mut f: impl FnMut(usize, usize) -> Result<SuperVector>,
    ) -> Result<BracketTable> {
        let n = space.dim();
        let mut values = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                values.push(f(i, j)?);
            }
        }
        BracketTable::new(space, values)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> &SuperVector {
        &self.values[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: SuperVector) -> Result<()> {
        value.space().require_same(&self.space)?;
        let n = self.dim();
        self.values[i * n + j] = value;
        Ok(())
    }

    pub fn values(&self) -> &[SuperVector] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(SuperVector::is_zero)
    }

    /// The product of two arbitrary elements, by bilinearity.
    pub fn apply(&self, x: &SuperVector, y: &SuperVector) -> Result<SuperVector> {
        x.space().require_same(&self.space)?;
        y.space().require_same(&self.space)?;
        let mut out = self.space.zero();
        for (i, xi) in x.support() {
            for (j, yj) in y.support() {
                out.add_scaled(&(xi * yj), self.get(i, j));
            }
        }
        Ok(out)
    }

    fn apply_left_basis(&self, i: usize, y: &SuperVector) -> SuperVector {
        let mut out = self.space.zero();
        for (j, yj) in y.support() {
            out.add_scaled(yj, self.get(i, j));
        }
        out
    }

    fn apply_right_basis(&self, x: &SuperVector, j: usize) -> SuperVector {
        let mut out = self.space.zero();
        for (i, xi) in x.support() {
            out.add_scaled(xi, self.get(i, j));
        }
        out
    }

    fn labels(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|i| self.space.label(*i).to_string()).collect()
    }
}

/// The super commutator on `gl(V)` as structure constants in the basis `E[i,j]`.
pub fn gl_bracket_table(v: &SuperSpace) -> BracketTable {
    let gl = gl_space(v);
    let n = v.dim();
    let maps: Vec<SuperMap> = (0..n * n)
        .map(|k| SuperMap::elementary(v, k / n, k % n))
        .collect();
    BracketTable::from_fn(&gl, |a, b| {
        maps[a].super_commutator(&maps[b])?.to_gl_vector(&gl)
    })
    .expect("gl structure constants are well formed")
}

/// `[L_a, L_b] ⊆ L_{a+b}` on every basis pair.
pub fn check_graded(table: &BracketTable) -> Verdict {
    const NAME: &str = "graded";
    let s = table.space();
    let n = table.dim();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            checked += 1;
            let target = s.parity(i) + s.parity(j);
            let value = table.get(i, j);
            if !value.is_homogeneous_of(target) {
                return Verdict::fail(
                    NAME,
                    checked,
                    vec![i, j],
                    table.labels(&[i, j]),
                    Residual::Vector(value.part(target + Parity::Odd)),
                );
            }
        }
    }
    Verdict::pass(NAME, checked)
}

/// `[x,y] + (-1)^{|x||y|}[y,x] = 0` on every basis pair.
pub fn check_super_skew(table: &BracketTable) -> Verdict {
    const NAME: &str = "super skew-symmetry";
    let s = table.space();
    let n = table.dim();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            checked += 1;
            let swapped = table
                .get(j, i)
                .clone()
                .signed(Parity::koszul(s.parity(i), s.parity(j)));
            let residual = table.get(i, j) + &swapped;
            if !residual.is_zero() {
                return Verdict::fail(
                    NAME,
                    checked,
                    vec![i, j],
                    table.labels(&[i, j]),
                    Residual::Vector(residual),
                );
            }
        }
    }
    Verdict::pass(NAME, checked)
}

/// The Jacobiator
/// `(-1)^{|z||x|}[[x,y],z] + (-1)^{|x||y|}[[y,z],x] + (-1)^{|y||z|}[[z,x],y]`
/// on basis vectors `i, j, k`.
pub fn jacobiator(table: &BracketTable, i: usize, j: usize, k: usize) -> SuperVector {
    let s = table.space();
    let (x, y, z) = (s.parity(i), s.parity(j), s.parity(k));
    let t1 = table.apply_right_basis(table.get(i, j), k).signed(Parity::koszul(z, x));
    let t2 = table.apply_right_basis(table.get(j, k), i).signed(Parity::koszul(x, y));
    let t3 = table.apply_right_basis(table.get(k, i), j).signed(Parity::koszul(y, z));
    &(&t1 + &t2) + &t3
}

/// Super Jacobi identity on every basis triple.
pub fn check_super_jacobi(table: &BracketTable) -> Verdict {
    const NAME: &str = "super Jacobi identity";
    let n = table.dim();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let residual = jacobiator(table, i, j, k);
                if !residual.is_zero() {
                    return Verdict::fail(
                        NAME,
                        checked,
                        vec![i, j, k],
                        table.labels(&[i, j, k]),
                        Residual::Vector(residual),
                    );
                }
            }
        }
    }
    Verdict::pass(NAME, checked)
}

/// `x∘(y∘z) - (x∘y)∘z - (-1)^{|x||y|} y∘(x∘z)` on basis vectors.
pub fn leibniz_defect(table: &BracketTable, i: usize, j: usize, k: usize) -> SuperVector {
    let s = table.space();
    let lhs = table.apply_left_basis(i, table.get(j, k));
    let t1 = table.apply_right_basis(table.get(i, j), k);
    let t2 = table
        .apply_left_basis(j, table.get(i, k))
        .signed(Parity::koszul(s.parity(i), s.parity(j)));
    &(&lhs - &t1) - &t2
}

/// Super Leibniz rule on every basis triple.
pub fn check_leibniz_rule(table: &BracketTable) -> Verdict {
    const NAME: &str = "super Leibniz rule";
    let n = table.dim();
    let mut checked = 0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                checked += 1;
                let residual = leibniz_defect(table, i, j, k);
                if !residual.is_zero() {
                    return Verdict::fail(
                        NAME,
                        checked,
                        vec![i, j, k],
                        table.labels(&[i, j, k]),
                        Residual::Vector(residual),
                    );
                }
            }
        }
    }
    Verdict::pass(NAME, checked)
}

/// Graded, super skew and super Jacobi, in that order. Later checks are
/// still run when earlier ones fail.
pub fn check_lie(table: &BracketTable) -> Vec<Verdict> {
    vec![
        check_graded(table),
        check_super_skew(table),
        check_super_jacobi(table),
    ]
}

pub fn is_lie_superalgebra(table: &BracketTable) -> bool {
    check_graded(table).is_pass()
        && check_super_skew(table).is_pass()
        && check_super_jacobi(table).is_pass()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superlinalg::Field;

    fn heisenberg() -> BracketTable {
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        let mut t = BracketTable::zero(&v);
        t.set(1, 1, v.basis_vector(0)).unwrap();
        t
    }

    #[test]
    fn graded_examples() {
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        assert!(check_graded(&BracketTable::zero(&v)).is_pass());
        assert!(check_graded(&heisenberg()).is_pass());
        let mut bad = BracketTable::zero(&v);
        bad.set(0, 0, v.basis_vector(1)).unwrap();
        let verdict = check_graded(&bad);
        assert_eq!(verdict.failure.unwrap().labels, ["e1", "e1"]);
    }

    #[test]
    fn skew_examples() {
        assert!(check_super_skew(&heisenberg()).is_pass());
        let v = SuperSpace::standard(Field::Rational, 2, 0);
        let mut t = BracketTable::zero(&v);
        t.set(0, 1, v.basis_vector(0)).unwrap();
        t.set(1, 0, v.basis_vector(0)).unwrap();
        assert!(!check_super_skew(&t).is_pass());
    }

    #[test]
    fn jacobi_examples() {
        assert!(check_super_jacobi(&heisenberg()).is_pass());
        let v = SuperSpace::standard(Field::Rational, 1, 1);
        let gl = gl_bracket_table(&v);
        assert!(check_lie(&gl).iter().all(Verdict::is_pass));
        let g = gl.space().clone();
        let idx = |s: &str| g.index_of(s).unwrap();
        // zeroing [E[e1,f1], E[f1,e1]] = Id leaves a Lie superalgebra: Id is central
        let mut still_lie = gl.clone();
        still_lie.set(idx("E[e1,f1]"), idx("E[f1,e1]"), g.zero()).unwrap();
        still_lie.set(idx("E[f1,e1]"), idx("E[e1,f1]"), g.zero()).unwrap();
        assert!(is_lie_superalgebra(&still_lie));
        // zeroing [E[e1,e1], E[e1,f1]] does not
        let mut bad = gl.clone();
        bad.set(idx("E[e1,e1]"), idx("E[e1,f1]"), g.zero()).unwrap();
        bad.set(idx("E[e1,f1]"), idx("E[e1,e1]"), g.zero()).unwrap();
        assert!(check_super_skew(&bad).is_pass());
        let failure = check_super_jacobi(&bad).failure.unwrap();
        assert_eq!(failure.labels, ["E[e1,e1]", "E[e1,f1]", "E[f1,e1]"]);
        // [[E11,E12],E21] + [[E12,E21],E11] - [[E21,E11],E12] = 0 + 0 - Id
        let minus_id = -(&g.basis_vector(idx("E[e1,e1]")) + &g.basis_vector(idx("E[f1,f1]")));
        assert_eq!(failure.residual, Residual::Vector(minus_id));
    }

    #[test]
    fn leibniz_examples() {
        assert!(check_leibniz_rule(&heisenberg()).is_pass());
        let v = SuperSpace::standard(Field::Rational, 2, 0);
        let mut t = BracketTable::zero(&v);
        t.set(0, 0, v.basis_vector(0)).unwrap();
        // e1∘(e1∘e1) - (e1∘e1)∘e1 - e1∘(e1∘e1) = -e1
        let verdict = check_leibniz_rule(&t);
        let fl = verdict.failure.unwrap();
        assert_eq!(fl.labels, ["e1", "e1", "e1"]);
        assert_eq!(fl.residual, Residual::Vector(-v.basis_vector(0)));
    }
}
