//! Lie 2-superalgebras `V1 --d--> V0` with brackets `l2` and a trilinear
//! `l3: V0⊗V0⊗V0 → V1`, strict ones and crossed modules, and the two
//! standard constructions: from the omni-Lie superalgebra and the skeletal
//! one from a quadratic Lie superalgebra.
//!
//! Axiom (h) is checked as
//! `l3(x,y,dh) = -[[x,y],h] + [x,[y,h]] + (-1)^{|y||h|}[[x,h],y]`, and
//! axiom (i) as the Chevalley–Eilenberg coboundary
//!
//! ```text
//! δl3(x,y,z,w) = [x,l3(y,z,w)] - (-1)^{|x||y|}[y,l3(x,z,w)]
//!              + (-1)^{(|x|+|y|)|z|}[z,l3(x,y,w)] + [l3(x,y,z),w]
//!              - l3([x,y],z,w) + (-1)^{|y||z|}l3([x,z],y,w)
//!              - (-1)^{(|y|+|z|)|w|}l3([x,w],y,z)
//!              + l3(x,[y,z],w) - (-1)^{|z||w|}l3(x,[y,w],z) - l3(x,y,[z,w]).
//! ```
//!
//! `[h,k]` on `V1⊗V1` is zero by construction and not stored.

use crate::error::{AlgebraError, Result};
use crate::liesuper::{
    check_action, check_lie, is_quadratic_compatible, BracketTable, EvenBilinearForm, Representation,
};
use crate::omni::OmniTables;
use crate::superlinalg::{Parity, SuperMap, SuperSpace, SuperVector};
use crate::verdict::{all_pass, Limit, Residual, Verdict};

/// The data `(V1 --d--> V0, l2, l3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lie2Superalgebra {
    v0: SuperSpace,
    v1: SuperSpace,
    d: SuperMap,
    l2: BracketTable,
    /// `[x, h]` at `x * dim V1 + h`
    act: Vec<SuperVector>,
    /// `[h, x]` at `h * dim V0 + x`
    ract: Vec<SuperVector>,
    /// `l3(x,y,z)` at `(x * dim V0 + y) * dim V0 + z`
    l3: Vec<SuperVector>,
}

fn graded(v: &SuperVector, parity: Parity, what: impl FnOnce() -> String) -> Result<()> {
    if v.is_homogeneous_of(parity) {
        Ok(())
    } else {
        Err(AlgebraError::NotHomogeneous(what()))
    }
}

impl Lie2Superalgebra {
    /// Checks shapes and that `d` and every table value respect parity.
    pub fn new(
        d: SuperMap,
        l2: BracketTable,
        act: Vec<SuperVector>,
        ract: Vec<SuperVector>,
        l3: Vec<SuperVector>,
    ) -> Result<Lie2Superalgebra> {
        let v1 = d.domain().clone();
        let v0 = d.codomain().clone();
        l2.space().require_same(&v0)?;
        let (n0, n1) = (v0.dim(), v1.dim());
        for (len, want) in [(act.len(), n0 * n1), (ract.len(), n0 * n1), (l3.len(), n0 * n0 * n0)] {
            if len != want {
                return Err(AlgebraError::DimensionMismatch { expected: want, found: len });
            }
        }
        if !d.is_homogeneous_of(Parity::Even) {
            return Err(AlgebraError::NotHomogeneous("d is not even".into()));
        }
        for x in 0..n0 {
            for y in 0..n0 {
                let p = v0.parity(x) + v0.parity(y);
                graded(l2.get(x, y), p, || format!("[{}, {}]", v0.label(x), v0.label(y)))?;
                for z in 0..n0 {
                    let value = &l3[(x * n0 + y) * n0 + z];
                    value.space().require_same(&v1)?;
                    graded(value, p + v0.parity(z), || {
                        format!("l3({}, {}, {})", v0.label(x), v0.label(y), v0.label(z))
                    })?;
                }
            }
            for h in 0..n1 {
                let p = v0.parity(x) + v1.parity(h);
                let a = &act[x * n1 + h];
                let r = &ract[h * n0 + x];
                a.space().require_same(&v1)?;
                r.space().require_same(&v1)?;
                graded(a, p, || format!("[{}, {}]", v0.label(x), v1.label(h)))?;
                graded(r, p, || format!("[{}, {}]", v1.label(h), v0.label(x)))?;
            }
        }
        Ok(Lie2Superalgebra { v0, v1, d, l2, act, ract, l3 })
    }

    pub fn v0(&self) -> &SuperSpace {
        &self.v0
    }

    pub fn v1(&self) -> &SuperSpace {
        &self.v1
    }

    pub fn d(&self) -> &SuperMap {
        &self.d
    }

    pub fn l2(&self) -> &BracketTable {
        &self.l2
    }

    /// `[b_x, b_h]` for basis vectors `x ∈ V0`, `h ∈ V1`.
    pub fn act_basis(&self, x: usize, h: usize) -> &SuperVector {
        &self.act[x * self.v1.dim() + h]
    }

    /// `[b_h, b_x]`.
    pub fn ract_basis(&self, h: usize, x: usize) -> &SuperVector {
        &self.ract[h * self.v0.dim() + x]
    }

    pub fn l3_basis(&self, x: usize, y: usize, z: usize) -> &SuperVector {
        let n = self.v0.dim();
        &self.l3[(x * n + y) * n + z]
    }

    pub fn is_strict(&self) -> bool {
        self.l3.iter().all(SuperVector::is_zero)
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    /// `[x, h]` for `x ∈ V0`, `h ∈ V1`.
    pub fn act(&self, x: &SuperVector, h: &SuperVector) -> SuperVector {
        let mut out = self.v1.zero();
        for (i, a) in x.support() {
            for (j, b) in h.support() {
                out.add_scaled(&(a * b), self.act_basis(i, j));
            }
        }
        out
    }

    /// `[h, x]`.
    pub fn ract(&self, h: &SuperVector, x: &SuperVector) -> SuperVector {
        let mut out = self.v1.zero();
        for (j, b) in h.support() {
            for (i, a) in x.support() {
                out.add_scaled(&(a * b), self.ract_basis(j, i));
            }
        }
        out
    }

    pub fn l3(&self, x: &SuperVector, y: &SuperVector, z: &SuperVector) -> SuperVector {
        let mut out = self.v1.zero();
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for (k, c) in z.support() {
                    out.add_scaled(&(&ab * c), self.l3_basis(i, j, k));
                }
            }
        }
        out
    }

    fn bracket(&self, x: &SuperVector, y: &SuperVector) -> SuperVector {
        self.l2.apply(x, y).expect("arguments live in V0")
    }

    fn apply_d(&self, h: &SuperVector) -> SuperVector {
        self.d.apply(h).expect("argument lives in V1")
    }
}

/// Runs `f` on every index tuple in lexicographic order, stopping at the
/// first nonzero residual.
fn scan<const K: usize>(
    name: &str,
    sizes: [usize; K],
    labels: impl Fn([usize; K]) -> Vec<String>,
    mut f: impl FnMut([usize; K]) -> SuperVector,
) -> Verdict {
    let total: usize = sizes.iter().product();
    let mut idx = [0usize; K];
    for checked in 1..=total {
        let r = f(idx);
        if !r.is_zero() {
            return Verdict::fail(name, checked, idx.to_vec(), labels(idx), Residual::Vector(r));
        }
        for k in (0..K).rev() {
            idx[k] += 1;
            if idx[k] < sizes[k] {
                break;
            }
            idx[k] = 0;
        }
    }
    Verdict::pass(name, total)
}

/// Axioms (a)–(i), one verdict each, on every basis tuple.
pub fn check_lie2_axioms(t: &Lie2Superalgebra) -> Vec<Verdict> {
    let (v0, v1) = (t.v0(), t.v1());
    let (n0, n1) = (v0.dim(), v1.dim());
    let p0 = |i: usize| v0.parity(i);
    let p1 = |i: usize| v1.parity(i);
    let b0 = |i: usize| v0.basis_vector(i);
    let b1 = |i: usize| v1.basis_vector(i);
    let k = Parity::koszul;
    let names = |slots: &[(usize, bool)]| -> Vec<String> {
        slots.iter()
            .map(|&(i, level0)| if level0 { v0.label(i) } else { v1.label(i) }.to_string())
            .collect()
    };
    let mut out = Vec::with_capacity(9);

    out.push(scan("(a) [x,y] + (-1)^{|x||y|}[y,x] = 0", [n0, n0], |[x, y]| names(&[(x, true), (y, true)]), |[x, y]| {
        t.l2.get(x, y) + &t.l2.get(y, x).clone().signed(k(p0(x), p0(y)))
    }));
    out.push(scan("(b) [x,h] + (-1)^{|x||h|}[h,x] = 0", [n0, n1], |[x, h]| names(&[(x, true), (h, false)]), |[x, h]| {
        t.act_basis(x, h) + &t.ract_basis(h, x).clone().signed(k(p0(x), p1(h)))
    }));
    // [h,k] is structurally zero
    out.push(Verdict::pass("(c) [h,k] = 0", n1 * n1));
    out.push(scan(
        "(d) l3 totally super skew-symmetric",
        [n0, n0, n0],
        |[x, y, z]| names(&[(x, true), (y, true), (z, true)]),
        |[x, y, z]| {
            let a = t.l3_basis(x, y, z) + &t.l3_basis(y, x, z).clone().signed(k(p0(x), p0(y)));
            let b = t.l3_basis(x, y, z) + &t.l3_basis(x, z, y).clone().signed(k(p0(y), p0(z)));
            if a.is_zero() { b } else { a }
        },
    ));
    out.push(scan("(e) d[x,h] = [x,dh]", [n0, n1], |[x, h]| names(&[(x, true), (h, false)]), |[x, h]| {
        &t.apply_d(t.act_basis(x, h)) - &t.l2.apply(&b0(x), &t.apply_d(&b1(h))).expect("V0")
    }));
    out.push(scan("(f) [dh,k] = [h,dk]", [n1, n1], |[h, kk]| names(&[(h, false), (kk, false)]), |[h, kk]| {
        &t.act(&t.apply_d(&b1(h)), &b1(kk)) - &t.ract(&b1(h), &t.apply_d(&b1(kk)))
    }));
    out.push(scan(
        "(g) d l3(x,y,z) = -[[x,y],z] + [x,[y,z]] + (-1)^{|y||z|}[[x,z],y]",
        [n0, n0, n0],
        |[x, y, z]| names(&[(x, true), (y, true), (z, true)]),
        |[x, y, z]| {
            let lhs = t.apply_d(t.l3_basis(x, y, z));
            let r1 = t.bracket(t.l2.get(x, y), &b0(z));
            let r2 = t.bracket(&b0(x), t.l2.get(y, z));
            let r3 = t.bracket(t.l2.get(x, z), &b0(y)).signed(k(p0(y), p0(z)));
            &(&(&lhs + &r1) - &r2) - &r3
        },
    ));
    out.push(scan(
        "(h) l3(x,y,dh) = -[[x,y],h] + [x,[y,h]] + (-1)^{|y||h|}[[x,h],y]",
        [n0, n0, n1],
        |[x, y, h]| names(&[(x, true), (y, true), (h, false)]),
        |[x, y, h]| {
            let lhs = t.l3(&b0(x), &b0(y), &t.apply_d(&b1(h)));
            let r1 = t.act(t.l2.get(x, y), &b1(h));
            let r2 = t.act(&b0(x), t.act_basis(y, h));
            let r3 = t.ract(t.act_basis(x, h), &b0(y)).signed(k(p0(y), p1(h)));
            &(&(&lhs + &r1) - &r2) - &r3
        },
    ));
    out.push(scan(
        "(i) δl3 = 0",
        [n0, n0, n0, n0],
        |[x, y, z, w]| names(&[(x, true), (y, true), (z, true), (w, true)]),
        |[x, y, z, w]| delta_l3(t, x, y, z, w),
    ));
    out
}

/// The coboundary `δl3` on basis vectors of `V0`.
pub fn delta_l3(t: &Lie2Superalgebra, x: usize, y: usize, z: usize, w: usize) -> SuperVector {
    let v0 = t.v0();
    let (a, b, c, d) = (v0.parity(x), v0.parity(y), v0.parity(z), v0.parity(w));
    let k = Parity::koszul;
    let e = |i: usize| v0.basis_vector(i);
    let br = |i: usize, j: usize| t.l2.get(i, j);
    let terms = [
        t.act(&e(x), t.l3_basis(y, z, w)),
        t.act(&e(y), t.l3_basis(x, z, w)).signed(!k(a, b)),
        t.act(&e(z), t.l3_basis(x, y, w)).signed(k(a + b, c)),
        t.ract(t.l3_basis(x, y, z), &e(w)),
        t.l3(br(x, y), &e(z), &e(w)).signed(true),
        t.l3(br(x, z), &e(y), &e(w)).signed(k(b, c)),
        t.l3(br(x, w), &e(y), &e(z)).signed(!k(b + c, d)),
        t.l3(&e(x), br(y, z), &e(w)),
        t.l3(&e(x), br(y, w), &e(z)).signed(!k(c, d)),
        t.l3(&e(x), &e(y), br(z, w)).signed(true),
    ];
    let mut out = t.v1().zero();
    for term in &terms {
        out = &out + term;
    }
    out
}

/// `V0 = gl(V) ⊕ V`, `V1 = V`, `d` the inclusion, `l2` the omni bracket
/// (the mixed brackets are the `V` components of `⟦x, 0+h⟧` and `⟦0+h, x⟧`),
/// and `l3 = -(-1)^{|z||x|} T`. Needs 2 and 3 invertible.
pub fn lie2_from_omni(v: &SuperSpace) -> Result<Lie2Superalgebra> {
    v.field().require_invertible(2, "the omni Lie 2-superalgebra")?;
    v.field().require_invertible(3, "the omni Lie 2-superalgebra")?;
    let tables = OmniTables::new(v)?;
    let s = tables.space();
    let e = s.e();
    let (n0, n1) = (e.dim(), v.dim());
    let off = s.vector_offset();
    let cols: Vec<SuperVector> = v.basis().iter().map(|b| s.embed(b)).collect::<Result<_>>()?;
    let d = SuperMap::from_columns(v, e, &cols)?;
    let b = tables.bracket();
    let mut act = Vec::with_capacity(n0 * n1);
    for x in 0..n0 {
        for h in 0..n1 {
            act.push(s.vector_part(b.get(x, off + h))?);
        }
    }
    let mut ract = Vec::with_capacity(n0 * n1);
    for h in 0..n1 {
        for x in 0..n0 {
            ract.push(s.vector_part(b.get(off + h, x))?);
        }
    }
    let mut l3 = Vec::with_capacity(n0 * n0 * n0);
    for x in 0..n0 {
        for y in 0..n0 {
            for z in 0..n0 {
                let negate = !Parity::koszul(e.parity(z), e.parity(x));
                l3.push(tables.jacobiator_t(x, y, z)?.signed(negate));
            }
        }
    }
    Lie2Superalgebra::new(d, b.clone(), act, ract, l3)
}

/// Guarded [`lie2_from_omni`] followed by [`check_lie2_axioms`].
pub fn check_omni_lie2(v: &SuperSpace, limit: Limit) -> Result<Vec<Verdict>> {
    let n = v.dim();
    limit.check(n * n + n)?;
    Ok(check_lie2_axioms(&lie2_from_omni(v)?))
}

/// Lie superalgebras `g`, `h`, an action of `g` on `h` and `φ: h → g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g: BracketTable,
    h: BracketTable,
    action: Representation,
    phi: SuperMap,
}

impl CrossedModule {
    /// Checks shapes and parities only; see [`check_crossed_module`].
    pub fn new(g: BracketTable, h: BracketTable, action: Representation, phi: SuperMap) -> Result<CrossedModule> {
        action.algebra().require_same(g.space())?;
        action.module().require_same(h.space())?;
        phi.domain().require_same(h.space())?;
        phi.codomain().require_same(g.space())?;
        if !phi.is_homogeneous_of(Parity::Even) {
            return Err(AlgebraError::InvalidCrossedModule("φ is not even".into()));
        }
        Ok(CrossedModule { g, h, action, phi })
    }

    pub fn g(&self) -> &BracketTable {
        &self.g
    }

    pub fn h(&self) -> &BracketTable {
        &self.h
    }

    pub fn action(&self) -> &Representation {
        &self.action
    }

    pub fn phi(&self) -> &SuperMap {
        &self.phi
    }
}

/// Lie axioms of `g` and `h`, the action axiom, `φ(x▹h) = [x,φ(h)]` and
/// `φ(h)▹k = [h,k]`.
pub fn check_crossed_module(c: &CrossedModule) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for mut v in check_lie(c.g()) {
        v.check = format!("g: {}", v.check);
        out.push(v);
    }
    for mut v in check_lie(c.h()) {
        v.check = format!("h: {}", v.check);
        out.push(v);
    }
    out.push(check_action(c.g(), c.action())?);
    let (g, h) = (c.g().space(), c.h().space());
    let label = |i: usize, s: &SuperSpace| s.label(i).to_string();
    out.push(scan(
        "φ(x▹h) = [x,φ(h)]",
        [g.dim(), h.dim()],
        |[x, k]| vec![label(x, g), label(k, h)],
        |[x, k]| {
            let lhs = c.phi().apply(&c.action().image(x).column(k)).expect("h");
            let rhs = c.g().apply(&g.basis_vector(x), &c.phi().column(k)).expect("g");
            &lhs - &rhs
        },
    ));
    out.push(scan(
        "φ(h)▹k = [h,k]",
        [h.dim(), h.dim()],
        |[a, b]| vec![label(a, h), label(b, h)],
        |[a, b]| {
            let lhs = c.action().act(&c.phi().column(a), &h.basis_vector(b)).expect("h");
            &lhs - c.h().get(a, b)
        },
    ));
    Ok(out)
}

/// `g = V0`, `h = V1`, `[h,k]_h = [dh,k]`, `x▹h = [x,h]`, `φ = d`. The input
/// must be strict and satisfy all axioms.
pub fn crossed_module_from_strict(t: &Lie2Superalgebra) -> Result<CrossedModule> {
    if !t.is_strict() {
        return Err(AlgebraError::NotStrict);
    }
    if let Some(bad) = check_lie2_axioms(t).into_iter().find(|v| !v.is_pass()) {
        return Err(AlgebraError::Invalid(format!("not a Lie 2-superalgebra: {bad}")));
    }
    let (v0, v1) = (t.v0(), t.v1());
    let h = BracketTable::from_fn(v1, |a, b| Ok(t.act(&t.d().column(a), &v1.basis_vector(b))))?;
    let images = (0..v0.dim())
        .map(|x| {
            let cols: Vec<SuperVector> = (0..v1.dim()).map(|k| t.act_basis(x, k).clone()).collect();
            SuperMap::from_columns(v1, v1, &cols)
        })
        .collect::<Result<_>>()?;
    let action = Representation::new(v0, v1, images)?;
    CrossedModule::new(t.l2().clone(), h, action, t.d().clone())
}

/// `V0 = g`, `V1 = h`, `d = φ`, `[x,h] = x▹h`, `[h,x] = -(-1)^{|x||h|} x▹h`,
/// `l3 = 0`. The input must pass [`check_crossed_module`].
pub fn strict_from_crossed_module(c: &CrossedModule) -> Result<Lie2Superalgebra> {
    if let Some(bad) = check_crossed_module(c)?.into_iter().find(|v| !v.is_pass()) {
        return Err(AlgebraError::InvalidCrossedModule(bad.to_string()));
    }
    let (g, h) = (c.g().space(), c.h().space());
    let mut act = Vec::with_capacity(g.dim() * h.dim());
    for x in 0..g.dim() {
        for k in 0..h.dim() {
            act.push(c.action().image(x).column(k));
        }
    }
    let mut ract = Vec::with_capacity(g.dim() * h.dim());
    for k in 0..h.dim() {
        for x in 0..g.dim() {
            let negate = !Parity::koszul(g.parity(x), h.parity(k));
            ract.push(c.action().image(x).column(k).signed(negate));
        }
    }
    let l3 = vec![h.zero(); g.dim().pow(3)];
    Lie2Superalgebra::new(c.phi().clone(), c.g().clone(), act, ract, l3)
}

/// Label of the basis vector of `V1 = K` in the skeletal construction.
pub const SKELETAL_LABEL: &str = "k";

/// `V0 = g`, `V1 = K` (one even basis vector), `d = 0`, `l2 = [·,·]` on `g`,
/// zero mixed brackets, `l3(x,y,z) = B([x,y],z)`.
pub fn skeletal_from_quadratic(g: &BracketTable, form: &EvenBilinearForm) -> Result<Lie2Superalgebra> {
    if let Some(bad) = check_lie(g).into_iter().find(|v| !v.is_pass()) {
        return Err(AlgebraError::NotLie(bad.to_string()));
    }
    let invariant = is_quadratic_compatible(g, form)?;
    if !invariant.is_pass() {
        return Err(AlgebraError::NotInvariant(invariant.to_string()));
    }
    let s = g.space();
    let k = SuperSpace::with_basis(s.field(), vec![(SKELETAL_LABEL.to_string(), Parity::Even)])?;
    if s.index_of(SKELETAL_LABEL).is_some() {
        return Err(AlgebraError::Invalid(format!("basis label {SKELETAL_LABEL:?} is reserved")));
    }
    let n = s.dim();
    let mut l3 = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let c = form.eval(g.get(x, y), &s.basis_vector(z))?;
                l3.push(k.vector(vec![c])?);
            }
        }
    }
    Lie2Superalgebra::new(
        SuperMap::zero(&k, s),
        g.clone(),
        vec![k.zero(); n],
        vec![k.zero(); n],
        l3,
    )
}

pub fn is_lie2(t: &Lie2Superalgebra) -> bool {
    all_pass(&check_lie2_axioms(t))
}
