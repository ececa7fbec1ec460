//! Dirac structures of the omni-Lie superalgebra and their relation to Lie
//! superalgebra structures on subspaces of `V`.
//!
//! Subspaces of `E = gl(V) ⊕ V` use the basis of [`OmniSpace::e`]. Most
//! operations take an [`OmniTables`] for `V` so the structure constants are
//! computed once.

use crate::error::{AlgebraError, Result};
use crate::liesuper::{check_lie, check_super_jacobi, check_super_skew, BracketTable};
use crate::omni::{OmniSpace, OmniTables};
use crate::superlinalg::echelon::{self, Rows};
use crate::superlinalg::{all_graded_subspaces, gl_space, Field, GradedSubspace, Parity, Scalar, SuperMap, SuperSpace, SuperVector};
use crate::verdict::{all_pass, Residual, Verdict, MAX_DIM_ENV};

/// `ad_ω(b_i)` for every basis vector: the map `y ↦ ω(b_i, y)`.
pub fn adjoint_map(table: &BracketTable) -> Vec<SuperMap> {
    let v = table.space();
    (0..v.dim())
        .map(|i| {
            let cols: Vec<SuperVector> = (0..v.dim()).map(|j| table.get(i, j).clone()).collect();
            SuperMap::from_columns(v, v, &cols).expect("table values live in V")
        })
        .collect()
}

/// `F_ω = {ad_ω x + x}`.
pub fn graph(table: &BracketTable) -> Result<GradedSubspace> {
    let space = OmniSpace::new(table.space());
    let rows = adjoint_map(table)
        .iter()
        .zip(table.space().basis())
        .map(|(ad, b)| Ok(&space.embed_map(ad)? + &space.embed(&b)?))
        .collect::<Result<Vec<_>>>()?;
    GradedSubspace::from_vectors(space.e(), &rows)
}

fn vector_label(v: &SuperVector) -> String {
    v.to_string()
}

/// `L^⊥ = {e ∈ E : ⟨e, l⟩ = 0 for all l ∈ L}`.
pub fn orthogonal_complement(tables: &OmniTables, l: &GradedSubspace) -> Result<GradedSubspace> {
    let e = tables.space().e();
    l.ambient().require_same(e)?;
    let nv = tables.space().v().dim();
    let mut rows: Rows = Vec::new();
    for w in l.basis() {
        // column a holds ⟨b_a, w⟩
        let cols: Vec<SuperVector> = (0..e.dim())
            .map(|a| tables.pairing(&e.basis_vector(a), w))
            .collect::<Result<_>>()?;
        for r in 0..nv {
            rows.push(cols.iter().map(|c| c.coord(r).clone()).collect());
        }
    }
    let kernel = echelon::nullspace(rows, e.dim(), e.field());
    let vectors: Vec<SuperVector> = kernel
        .into_iter()
        .map(|k| e.vector(k))
        .collect::<Result<_>>()?;
    GradedSubspace::from_vectors(e, &vectors)
}

/// `L = L^⊥`. A failure names either a pair of basis vectors of `L` with
/// nonzero pairing, or a vector of `L^⊥` outside `L`.
pub fn is_maximal_isotropic(tables: &OmniTables, l: &GradedSubspace) -> Result<Verdict> {
    const NAME: &str = "maximal isotropic";
    l.ambient().require_same(tables.space().e())?;
    let basis = l.basis();
    let mut checked = 0;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            checked += 1;
            let p = tables.pairing(x, y)?;
            if !p.is_zero() {
                return Ok(Verdict::fail(
                    NAME,
                    checked,
                    vec![i, j],
                    vec![vector_label(x), vector_label(y)],
                    Residual::Vector(p),
                )
                .with_elements(vec![x.clone(), y.clone()]));
            }
        }
    }
    let perp = orthogonal_complement(tables, l)?;
    for (k, x) in perp.basis().iter().enumerate() {
        checked += 1;
        if !l.contains(x)? {
            return Ok(Verdict::fail(
                NAME,
                checked,
                vec![k],
                vec![vector_label(x)],
                Residual::Note("orthogonal to L but not in L".into()),
            )
            .with_elements(vec![x.clone()]));
        }
    }
    Ok(Verdict::pass(NAME, checked))
}

/// `⟦l1, l2⟧ ∈ L` for all basis pairs of `L`.
pub fn is_closed_under_bracket(tables: &OmniTables, l: &GradedSubspace) -> Result<Verdict> {
    const NAME: &str = "closed under bracket";
    l.ambient().require_same(tables.space().e())?;
    let basis = l.basis();
    let mut checked = 0;
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            checked += 1;
            let b = tables.bracket().apply(x, y)?;
            if !l.contains(&b)? {
                return Ok(Verdict::fail(
                    NAME,
                    checked,
                    vec![i, j],
                    vec![vector_label(x), vector_label(y)],
                    Residual::Vector(b),
                )
                .with_elements(vec![x.clone(), y.clone()]));
            }
        }
    }
    Ok(Verdict::pass(NAME, checked))
}

/// Maximal isotropy and closure, in that order.
pub fn is_dirac(tables: &OmniTables, l: &GradedSubspace) -> Result<Vec<Verdict>> {
    Ok(vec![
        is_maximal_isotropic(tables, l)?,
        is_closed_under_bracket(tables, l)?,
    ])
}

/// Both sides of "`ω` is a Lie superalgebra iff its graph is Dirac".
#[derive(Clone, Debug)]
pub struct GraphEquivalence {
    /// Super skew-symmetry and super Jacobi of `ω`.
    pub lie: Vec<Verdict>,
    /// [`is_dirac`] of the graph.
    pub dirac: Vec<Verdict>,
}

impl GraphEquivalence {
    pub fn is_lie(&self) -> bool {
        all_pass(&self.lie)
    }

    pub fn is_dirac(&self) -> bool {
        all_pass(&self.dirac)
    }

    pub fn holds(&self) -> bool {
        self.is_lie() == self.is_dirac()
    }
}

/// `ω` must be graded.
pub fn graph_is_dirac_iff_lie(tables: &OmniTables, table: &BracketTable) -> Result<GraphEquivalence> {
    table.space().require_same(tables.space().v())?;
    Ok(GraphEquivalence {
        lie: vec![check_super_skew(table), check_super_jacobi(table)],
        dirac: is_dirac(tables, &graph(table)?)?,
    })
}

/// `W^0 = {X ∈ gl(V) : X(W) = 0}`.
pub fn annihilator(w: &GradedSubspace) -> Result<GradedSubspace> {
    let v = w.ambient();
    let n = v.dim();
    let gl = gl_space(v);
    let mut rows: Rows = Vec::new();
    for x in w.basis() {
        // (Xx)_r = Σ_j X[r,j] x_j
        for r in 0..n {
            let mut row = vec![v.field().zero(); n * n];
            for (j, c) in x.support() {
                row[r * n + j] = c.clone();
            }
            rows.push(row);
        }
    }
    let kernel = echelon::nullspace(rows, n * n, v.field());
    let vectors: Vec<SuperVector> = kernel.into_iter().map(|k| gl.vector(k)).collect::<Result<_>>()?;
    GradedSubspace::from_vectors(&gl, &vectors)
}

/// A subspace `D ⊆ gl(V)` and a super skew `π: V → gl(V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicPair {
    v: SuperSpace,
    d: GradedSubspace,
    pi: Vec<SuperMap>,
}

impl CharacteristicPair {
    /// `pi[i] = π(b_i)` must have the parity of `b_i`, and
    /// `π(x)(y) + (-1)^{|x||y|} π(y)(x) = 0` on basis vectors.
    pub fn new(v: &SuperSpace, d: GradedSubspace, pi: Vec<SuperMap>) -> Result<CharacteristicPair> {
        d.ambient().require_same(&gl_space(v))?;
        if pi.len() != v.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: v.dim(),
                found: pi.len(),
            });
        }
        for (i, m) in pi.iter().enumerate() {
            m.domain().require_same(v)?;
            m.codomain().require_same(v)?;
            if !m.is_homogeneous_of(v.parity(i)) {
                return Err(AlgebraError::NotHomogeneous(format!(
                    "π({}) is not of parity {}",
                    v.label(i),
                    v.parity(i)
                )));
            }
        }
        for i in 0..v.dim() {
            for j in 0..v.dim() {
                let swapped = pi[j]
                    .column(i)
                    .signed(Parity::koszul(v.parity(i), v.parity(j)));
                if !(&pi[i].column(j) + &swapped).is_zero() {
                    return Err(AlgebraError::NotSkew(format!(
                        "π({})({}) + π({})({}) with sign is nonzero",
                        v.label(i),
                        v.label(j),
                        v.label(j),
                        v.label(i)
                    )));
                }
            }
        }
        Ok(CharacteristicPair { v: v.clone(), d, pi })
    }

    pub fn v(&self) -> &SuperSpace {
        &self.v
    }

    pub fn d(&self) -> &GradedSubspace {
        &self.d
    }

    pub fn pi(&self) -> &[SuperMap] {
        &self.pi
    }

    pub fn d_maps(&self) -> Vec<SuperMap> {
        self.d
            .basis()
            .iter()
            .map(|x| SuperMap::from_gl_vector(&self.v, x).expect("D lies in gl(V)"))
            .collect()
    }

    /// `D^0`, the common kernel of `D`.
    pub fn null_space(&self) -> GradedSubspace {
        GradedSubspace::kernel_of_maps(&self.v, &self.d_maps()).expect("D lies in gl(V)")
    }

    /// `π(x)` for an arbitrary `x ∈ V`.
    pub fn pi_of(&self, x: &SuperVector) -> Result<SuperMap> {
        x.space().require_same(&self.v)?;
        let mut out = SuperMap::zero(&self.v, &self.v);
        for (i, c) in x.support() {
            out = out.add(&self.pi[i].scale(c))?;
        }
        Ok(out)
    }

    /// `π(x, y) = π(x)(y)`.
    pub fn pi_bracket(&self, x: &SuperVector, y: &SuperVector) -> Result<SuperVector> {
        self.pi_of(x)?.apply(y)
    }
}

/// Builds `π` from its values on a basis of `V`.
fn pi_from_basis(v: &SuperSpace, basis: &[SuperVector], images: &[SuperMap]) -> Result<Vec<SuperMap>> {
    let gl = gl_space(v);
    let gl_images: Vec<SuperVector> = images.iter().map(|m| m.to_gl_vector(&gl)).collect::<Result<_>>()?;
    let m = SuperMap::from_basis_images(v, &gl, basis, &gl_images)?;
    (0..v.dim())
        .map(|i| SuperMap::from_gl_vector(v, &m.column(i)))
        .collect()
}

/// Reads `(D, π)` off a maximal isotropic `L`.
///
/// `D = L ∩ gl(V)`. Row reduction with the `V` coordinates first gives, for
/// each echelon basis vector `w` of the projection `D^0` of `L` to `V`, a
/// unique representative `A_w + w ∈ L` reduced against `D`; `π(w) := A_w`.
/// On the standard basis vectors `c` complementing `D^0`, `π(c)` is fixed by
/// skew-symmetry on `D^0` and set to zero on the complement.
pub fn extract_characteristic_pair(tables: &OmniTables, l: &GradedSubspace) -> Result<CharacteristicPair> {
    if !is_maximal_isotropic(tables, l)?.is_pass() {
        return Err(AlgebraError::NotMaximalIsotropic);
    }
    let space = tables.space();
    let v = space.v();
    let nv = v.dim();
    let ngl = space.gl().dim();
    let rows: Rows = l
        .basis()
        .iter()
        .map(|x| {
            let c = x.coords();
            c[ngl..].iter().chain(&c[..ngl]).cloned().collect()
        })
        .collect();
    let (reduced, pivots) = echelon::rref(rows, ngl + nv);
    let mut d_rows = Vec::new();
    let mut section = Vec::new();
    for (row, p) in reduced.into_iter().zip(pivots) {
        let a = space.gl().vector(row[nv..].to_vec())?;
        if p < nv {
            let w = v.vector(row[..nv].to_vec())?;
            section.push((w, SuperMap::from_gl_vector(v, &a)?));
        } else {
            d_rows.push(a);
        }
    }
    let d = GradedSubspace::from_vectors(space.gl(), &d_rows)?;
    let projection = GradedSubspace::from_vectors(v, &section.iter().map(|(w, _)| w.clone()).collect::<Vec<_>>())?;
    let complement = projection.complement_indices();
    let mut basis: Vec<SuperVector> = section.iter().map(|(w, _)| w.clone()).collect();
    let mut images: Vec<SuperMap> = section.iter().map(|(_, a)| a.clone()).collect();
    for &c in &complement {
        let ec = v.basis_vector(c);
        // π(c)(w) = -(-1)^{|c||w|} π(w)(c), π(c)(c') = 0
        let mut domain_basis = Vec::with_capacity(nv);
        let mut values = Vec::with_capacity(nv);
        for (w, a) in &section {
            let wp = w.parity().expect("echelon rows are homogeneous");
            domain_basis.push(w.clone());
            values.push(a.apply(&ec)?.signed(!Parity::koszul(v.parity(c), wp)));
        }
        for &c2 in &complement {
            domain_basis.push(v.basis_vector(c2));
            values.push(v.zero());
        }
        images.push(SuperMap::from_basis_images(v, v, &domain_basis, &values)?);
        basis.push(ec);
    }
    let pi = pi_from_basis(v, &basis, &images)?;
    CharacteristicPair::new(v, d, pi)
}

/// The three conditions for `D ⊕ graph(π|_{D^0})` to be closed:
/// `D` is a subalgebra; `π(π(x,y)) - [π(x),π(y)] ∈ D`; `π(x,y) ∈ D^0`,
/// for `x, y` in the echelon basis of `D^0`.
pub fn check_characteristic_pair(pair: &CharacteristicPair) -> Result<Vec<Verdict>> {
    let gl = pair.d().ambient().clone();
    let d_maps = pair.d_maps();
    let d_basis = pair.d().basis();

    const SUB: &str = "D is a subalgebra";
    let mut sub = None;
    let mut checked = 0;
    'outer: for (i, x) in d_maps.iter().enumerate() {
        for (j, y) in d_maps.iter().enumerate() {
            checked += 1;
            let c = x.super_commutator(y)?.to_gl_vector(&gl)?;
            if !pair.d().contains(&c)? {
                sub = Some(Verdict::fail(
                    SUB,
                    checked,
                    vec![i, j],
                    vec![vector_label(&d_basis[i]), vector_label(&d_basis[j])],
                    Residual::Vector(c),
                )
                .with_elements(vec![d_basis[i].clone(), d_basis[j].clone()]));
                break 'outer;
            }
        }
    }
    let sub = sub.unwrap_or_else(|| Verdict::pass(SUB, checked));

    const HOM: &str = "π(π(x,y)) - [π(x),π(y)] ∈ D";
    const CLOSED: &str = "π(x,y) ∈ D^0";
    let null = pair.null_space();
    let w = null.basis();
    let mut hom = None;
    let mut closed = None;
    let mut checked = 0;
    for (i, x) in w.iter().enumerate() {
        for (j, y) in w.iter().enumerate() {
            checked += 1;
            let labels = || vec![vector_label(x), vector_label(y)];
            let xy = pair.pi_bracket(x, y)?;
            if closed.is_none() && !null.contains(&xy)? {
                closed = Some(
                    Verdict::fail(CLOSED, checked, vec![i, j], labels(), Residual::Vector(xy.clone()))
                        .with_elements(vec![x.clone(), y.clone()]),
                );
            }
            if hom.is_none() {
                let defect = pair.pi_of(&xy)?.sub(&pair.pi_of(x)?.super_commutator(&pair.pi_of(y)?)?)?;
                let defect = defect.to_gl_vector(&gl)?;
                if !pair.d().contains(&defect)? {
                    hom = Some(
                        Verdict::fail(HOM, checked, vec![i, j], labels(), Residual::Vector(defect))
                            .with_elements(vec![x.clone(), y.clone()]),
                    );
                }
            }
        }
    }
    Ok(vec![
        sub,
        hom.unwrap_or_else(|| Verdict::pass(HOM, checked)),
        closed.unwrap_or_else(|| Verdict::pass(CLOSED, checked)),
    ])
}

/// `{X + π(x) + x : X ∈ D, x ∈ D^0}`. This is maximal isotropic exactly when
/// `D` is the annihilator of its own null space; other inputs are rejected.
pub fn build_maximal_isotropic(pair: &CharacteristicPair) -> Result<GradedSubspace> {
    let null = pair.null_space();
    if annihilator(&null)? != *pair.d() {
        return Err(AlgebraError::NotMaximalIsotropic);
    }
    let space = OmniSpace::new(pair.v());
    let mut rows = Vec::new();
    for x in pair.d_maps() {
        rows.push(space.embed_map(&x)?);
    }
    for x in null.basis() {
        rows.push(&space.embed_map(&pair.pi_of(x)?)? + &space.embed(x)?);
    }
    GradedSubspace::from_vectors(space.e(), &rows)
}

/// `(W, [·,·]_W)` with `W = D^0` and `[x,y]_W = π(x,y)`. The table lives on
/// [`GradedSubspace::basis_space`] of `W`.
pub fn lie_from_dirac(tables: &OmniTables, l: &GradedSubspace) -> Result<(GradedSubspace, BracketTable)> {
    let verdicts = is_dirac(tables, l)?;
    if let Some(bad) = verdicts.iter().find(|v| !v.is_pass()) {
        return Err(AlgebraError::NotDirac(bad.to_string()));
    }
    let pair = extract_characteristic_pair(tables, l)?;
    let w = pair.null_space();
    let ws = w.basis_space();
    let basis = w.basis().to_vec();
    let table = BracketTable::from_fn(&ws, |i, j| {
        let value = pair.pi_bracket(&basis[i], &basis[j])?;
        let coords = w
            .coordinates(&value)?
            .ok_or_else(|| AlgebraError::NotDirac("π(x,y) leaves D^0".into()))?;
        ws.vector(coords)
    })?;
    Ok((w, table))
}

/// The Dirac structure `W^0 ⊕ graph(π)` where `π(x)|_W = ad_x` for `x ∈ W`,
/// and `π` vanishes on the standard basis vectors complementing `W` and on
/// their images. `table` is in the echelon basis of `W` (any labels, matching
/// parities).
pub fn dirac_from_lie(w: &GradedSubspace, table: &BracketTable) -> Result<GradedSubspace> {
    let v = w.ambient();
    let ws = table.space();
    if ws.dim() != w.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: w.dim(),
            found: ws.dim(),
        });
    }
    if (0..w.dim()).any(|k| ws.parity(k) != w.basis_parity(k)) {
        return Err(AlgebraError::Invalid("bracket basis parities differ from W".into()));
    }
    if let Some(bad) = check_lie(table).into_iter().find(|x| !x.is_pass()) {
        return Err(AlgebraError::NotLie(bad.to_string()));
    }
    let complement = w.complement_indices();
    let mut basis: Vec<SuperVector> = w.basis().to_vec();
    basis.extend(complement.iter().map(|c| v.basis_vector(*c)));
    let mut images = Vec::with_capacity(v.dim());
    for k in 0..w.dim() {
        let mut values: Vec<SuperVector> = (0..w.dim())
            .map(|l| w.combination(table.get(k, l).coords()))
            .collect();
        values.extend(complement.iter().map(|_| v.zero()));
        images.push(SuperMap::from_basis_images(v, v, &basis, &values)?);
    }
    images.extend(complement.iter().map(|_| SuperMap::zero(v, v)));
    let pi = pi_from_basis(v, &basis, &images)?;
    let pair = CharacteristicPair::new(v, annihilator(w)?, pi)?;
    build_maximal_isotropic(&pair)
}

/// Size bounds for [`enumerate_dirac`]: `dim E ≤ max_dim` and `p ≤ max_prime`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationGuard {
    pub max_dim: usize,
    pub max_prime: u64,
}

impl Default for EnumerationGuard {
    fn default() -> EnumerationGuard {
        EnumerationGuard { max_dim: 6, max_prime: 5 }
    }
}

impl EnumerationGuard {
    /// The default, unless `SUPEROMNI_MAX_DIM` is set, in which case it
    /// bounds `dim E` and the prime is unrestricted.
    pub fn from_env() -> EnumerationGuard {
        match std::env::var(MAX_DIM_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            Some(max_dim) => EnumerationGuard { max_dim, max_prime: u64::MAX },
            None => EnumerationGuard::default(),
        }
    }

    fn check(&self, v: &SuperSpace) -> Result<()> {
        let p = match v.field() {
            Field::Prime(p) => p,
            Field::Rational => {
                return Err(AlgebraError::InvalidField("enumeration needs a prime field".into()))
            }
        };
        v.field().require_invertible(2, "Dirac enumeration")?;
        v.field().require_invertible(3, "Dirac enumeration")?;
        let n = v.dim();
        if n * n + n > self.max_dim {
            return Err(AlgebraError::GuardExceeded { dim: n * n + n, limit: self.max_dim });
        }
        if p > self.max_prime {
            return Err(AlgebraError::InvalidField(format!(
                "enumeration over GF({p}) exceeds the default bound GF({}); set {MAX_DIM_ENV} to lift it",
                self.max_prime
            )));
        }
        Ok(())
    }
}

/// Every graded bilinear table on a space over `F_p`, skew or not.
pub struct GradedTables {
    space: SuperSpace,
    values: Vec<Scalar>,
    /// per ordered pair, the basis indices of parity `|i| + |j|`
    slots: Vec<Vec<usize>>,
    digits: Vec<u64>,
    p: u64,
    done: bool,
}

impl GradedTables {
    pub fn new(space: &SuperSpace) -> Result<GradedTables> {
        let p = match space.field() {
            Field::Prime(p) => p,
            Field::Rational => return Err(AlgebraError::InvalidField("table enumeration needs a prime field".into())),
        };
        let n = space.dim();
        let mut slots = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let target = space.parity(i) + space.parity(j);
                slots.push((0..n).filter(|k| space.parity(*k) == target).collect::<Vec<_>>());
            }
        }
        let total: usize = slots.iter().map(Vec::len).sum();
        Ok(GradedTables {
            space: space.clone(),
            values: (0..p).map(|x| space.field().from_i64(x as i64)).collect(),
            slots,
            digits: vec![0; total],
            p,
            done: false,
        })
    }

    /// `p^(number of free coefficients)`.
    pub fn total(&self) -> u128 {
        (self.p as u128).pow(self.digits.len() as u32)
    }
}

impl Iterator for GradedTables {
    type Item = BracketTable;

    fn next(&mut self) -> Option<BracketTable> {
        if self.done {
            return None;
        }
        let n = self.space.dim();
        let mut table = BracketTable::zero(&self.space);
        let mut d = 0;
        for (pair, slot) in self.slots.iter().enumerate() {
            let mut coords = vec![self.space.field().zero(); n];
            for &k in slot {
                coords[k] = self.values[self.digits[d] as usize].clone();
                d += 1;
            }
            let value = self.space.vector(coords).expect("length n");
            table.set(pair / n, pair % n, value).expect("same space");
        }
        // advance the counter, least significant digit first
        let mut carry = true;
        for x in self.digits.iter_mut() {
            *x += 1;
            if *x < self.p {
                carry = false;
                break;
            }
            *x = 0;
        }
        self.done = carry;
        Some(table)
    }
}

/// Result of [`enumerate_dirac`].
#[derive(Clone, Debug)]
pub struct Census {
    /// All Dirac structures, in enumeration order of graded subspaces of `E`.
    pub dirac: Vec<GradedSubspace>,
    /// All pairs `(W, Lie bracket on W)`; tables live on `W.basis_space()`.
    pub lie: Vec<(GradedSubspace, BracketTable)>,
    /// Graded subspaces of `E` examined.
    pub subspaces_examined: usize,
    /// Graded tables examined across all `W`.
    pub tables_examined: usize,
    /// Equal counts, and both composites are the identity.
    pub verdicts: Vec<Verdict>,
}

impl Census {
    pub fn is_pass(&self) -> bool {
        all_pass(&self.verdicts)
    }
}

/// Brute-force census over `F_p`: every graded subspace of `E` tested with
/// [`is_dirac`], and independently every graded `W ⊆ V` with every graded
/// table on `W` tested for the Lie axioms. The two lists are then matched
/// through [`lie_from_dirac`] and [`dirac_from_lie`].
pub fn enumerate_dirac(v: &SuperSpace, guard: EnumerationGuard) -> Result<Census> {
    guard.check(v)?;
    let tables = OmniTables::new(v)?;
    let candidates = all_graded_subspaces(tables.space().e());
    let subspaces_examined = candidates.len();
    let mut dirac = Vec::new();
    for l in candidates {
        if all_pass(&is_dirac(&tables, &l)?) {
            dirac.push(l);
        }
    }
    let mut lie = Vec::new();
    let mut tables_examined = 0;
    for w in all_graded_subspaces(v) {
        for t in GradedTables::new(&w.basis_space())? {
            tables_examined += 1;
            if all_pass(&check_lie(&t)) {
                lie.push((w.clone(), t));
            }
        }
    }

    let mut verdicts = Vec::new();
    const COUNT: &str = "Dirac structures and Lie structures are equinumerous";
    verdicts.push(if dirac.len() == lie.len() {
        Verdict::pass(COUNT, 1)
    } else {
        Verdict::fail(
            COUNT,
            1,
            vec![],
            vec![],
            Residual::Note(format!("{} Dirac structures, {} Lie structures", dirac.len(), lie.len())),
        )
    });

    const DLD: &str = "dirac_from_lie ∘ lie_from_dirac = id";
    let mut fail = None;
    for (k, l) in dirac.iter().enumerate() {
        let (w, t) = lie_from_dirac(&tables, l)?;
        let back = dirac_from_lie(&w, &t)?;
        if &back != l {
            fail = Some(Verdict::fail(DLD, k + 1, vec![k], vec![format!("{l:?}")], Residual::Note(format!("{back:?}"))));
            break;
        }
    }
    verdicts.push(fail.unwrap_or_else(|| Verdict::pass(DLD, dirac.len())));

    const LDL: &str = "lie_from_dirac ∘ dirac_from_lie = id";
    let mut fail = None;
    let mut images = Vec::with_capacity(lie.len());
    for (k, (w, t)) in lie.iter().enumerate() {
        let l = dirac_from_lie(w, t)?;
        let back = lie_from_dirac(&tables, &l)?;
        if &back.0 != w || &back.1 != t {
            fail = Some(Verdict::fail(LDL, k + 1, vec![k], vec![format!("{w:?}")], Residual::Note(format!("{:?}", back.1))));
            break;
        }
        images.push(l);
    }
    verdicts.push(fail.unwrap_or_else(|| Verdict::pass(LDL, lie.len())));

    const ONTO: &str = "dirac_from_lie hits every Dirac structure once";
    let key = |l: &GradedSubspace| format!("{l:?}");
    let mut a: Vec<String> = dirac.iter().map(key).collect();
    let mut b: Vec<String> = images.iter().map(key).collect();
    a.sort();
    b.sort();
    b.dedup();
    verdicts.push(if a == b {
        Verdict::pass(ONTO, a.len())
    } else {
        Verdict::fail(ONTO, a.len(), vec![], vec![], Residual::Note("image differs from the Dirac census".into()))
    });

    Ok(Census {
        dirac,
        lie,
        subspaces_examined,
        tables_examined,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::{check_action, gl_bracket_table, Representation};
    use crate::superlinalg::Field;

    fn v11() -> SuperSpace {
        SuperSpace::standard(Field::Rational, 1, 1)
    }

    fn heisenberg(v: &SuperSpace) -> BracketTable {
        let mut t = BracketTable::zero(v);
        t.set(1, 1, v.basis_vector(0)).unwrap();
        t
    }

    fn embedded_v(s: &OmniSpace) -> GradedSubspace {
        let rows: Vec<_> = s.v().basis().iter().map(|b| s.embed(b).unwrap()).collect();
        GradedSubspace::from_vectors(s.e(), &rows).unwrap()
    }

    fn embedded_gl(s: &OmniSpace) -> GradedSubspace {
        let rows: Vec<_> = (0..s.gl().dim()).map(|k| s.e().basis_vector(k)).collect();
        GradedSubspace::from_vectors(s.e(), &rows).unwrap()
    }

    #[test]
    fn adjoint_and_graph_of_heisenberg() {
        let v = v11();
        let h = heisenberg(&v);
        let ad = adjoint_map(&h);
        assert!(ad[0].is_zero());
        assert_eq!(ad[1], SuperMap::elementary(&v, 0, 1));
        let s = OmniSpace::new(&v);
        let g = graph(&h).unwrap();
        let e = s.e();
        let expected = GradedSubspace::from_vectors(
            e,
            &[
                e.basis_vector(e.index_of("e1").unwrap()),
                &e.basis_vector(e.index_of("E[e1,f1]").unwrap()) + &e.basis_vector(e.index_of("f1").unwrap()),
            ],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert_eq!(graph(&BracketTable::zero(&v)).unwrap(), embedded_v(&s));
    }

    #[test]
    fn adjoint_of_gl_is_a_representation() {
        let v = v11();
        let gl = gl_bracket_table(&v);
        let rho = Representation::new(gl.space(), gl.space(), adjoint_map(&gl)).unwrap();
        assert!(check_action(&gl, &rho).unwrap().is_pass());
    }

    #[test]
    fn complements() {
        let v = v11();
        let t = OmniTables::new(&v).unwrap();
        let s = t.space();
        let full = GradedSubspace::full(s.e());
        assert_eq!(orthogonal_complement(&t, &full).unwrap().dim(), 0);
        assert_eq!(orthogonal_complement(&t, &embedded_gl(s)).unwrap(), embedded_gl(s));
        assert_eq!(orthogonal_complement(&t, &embedded_v(s)).unwrap(), embedded_v(s));
        let line = GradedSubspace::from_vectors(s.e(), &[s.embed(&v.basis_vector(0)).unwrap()]).unwrap();
        let perp = orthogonal_complement(&t, &line).unwrap();
        assert!(line.is_subspace_of(&perp).unwrap());
        assert!(!is_maximal_isotropic(&t, &line).unwrap().is_pass());
    }

    #[test]
    fn dirac_examples() {
        let v = v11();
        let t = OmniTables::new(&v).unwrap();
        let s = t.space();
        for l in [embedded_gl(s), embedded_v(s), graph(&heisenberg(&v)).unwrap()] {
            assert!(all_pass(&is_dirac(&t, &l).unwrap()), "{l:?}");
        }
    }

    #[test]
    fn graph_equivalence_examples() {
        let v = v11();
        let t = OmniTables::new(&v).unwrap();
        let eq = graph_is_dirac_iff_lie(&t, &heisenberg(&v)).unwrap();
        assert!(eq.is_lie() && eq.is_dirac());
        let line = SuperSpace::standard(Field::Rational, 1, 0);
        let tl = OmniTables::new(&line).unwrap();
        let mut bad = BracketTable::zero(&line);
        bad.set(0, 0, line.basis_vector(0)).unwrap();
        let eq = graph_is_dirac_iff_lie(&tl, &bad).unwrap();
        assert!(!eq.is_lie() && !eq.is_dirac() && eq.holds());
        // ⟨ad e1 + e1, ad e1 + e1⟩ = e1
        let failure = eq.dirac[0].failure.clone().unwrap();
        assert_eq!(failure.residual, Residual::Vector(line.basis_vector(0)));
    }

    #[test]
    fn characteristic_pairs() {
        let v = v11();
        let t = OmniTables::new(&v).unwrap();
        let s = t.space();
        let gl_pair = extract_characteristic_pair(&t, &embedded_gl(s)).unwrap();
        assert_eq!(gl_pair.d().dim(), 4);
        assert_eq!(gl_pair.null_space().dim(), 0);
        let v_pair = extract_characteristic_pair(&t, &embedded_v(s)).unwrap();
        assert_eq!(v_pair.d().dim(), 0);
        assert!(v_pair.pi().iter().all(SuperMap::is_zero));
        let h_pair = extract_characteristic_pair(&t, &graph(&heisenberg(&v)).unwrap()).unwrap();
        assert_eq!(h_pair.d().dim(), 0);
        assert!(h_pair.pi()[0].is_zero());
        assert_eq!(h_pair.pi()[1], SuperMap::elementary(&v, 0, 1));
        let cases = [
            (gl_pair, embedded_gl(s)),
            (v_pair, embedded_v(s)),
            (h_pair, graph(&heisenberg(&v)).unwrap()),
        ];
        for (pair, l) in &cases {
            assert!(all_pass(&check_characteristic_pair(pair).unwrap()));
            assert_eq!(&build_maximal_isotropic(pair).unwrap(), l);
        }
    }

    #[test]
    fn condition_three_failure() {
        let v = v11();
        let gl = gl_space(&v);
        let d = GradedSubspace::from_vectors(&gl, &[gl.basis_vector(gl.index_of("E[e1,e1]").unwrap())]).unwrap();
        let pi = vec![SuperMap::zero(&v, &v), SuperMap::elementary(&v, 0, 1)];
        let pair = CharacteristicPair::new(&v, d, pi).unwrap();
        let verdicts = check_characteristic_pair(&pair).unwrap();
        assert!(verdicts[0].is_pass() && verdicts[1].is_pass());
        let failure = verdicts[2].failure.clone().unwrap();
        assert_eq!(failure.residual, Residual::Vector(v.basis_vector(0)));
        // D is not the annihilator of D^0 = span{f1}
        assert_eq!(build_maximal_isotropic(&pair), Err(AlgebraError::NotMaximalIsotropic));
    }

    #[test]
    fn non_skew_pi_rejected() {
        let v = SuperSpace::standard(Field::Rational, 1, 0);
        let gl = gl_space(&v);
        let r = CharacteristicPair::new(&v, GradedSubspace::zero(&gl), vec![SuperMap::identity(&v)]);
        assert!(matches!(r, Err(AlgebraError::NotSkew(_))));
    }

    #[test]
    fn lie_dirac_round_trips() {
        let v = v11();
        let t = OmniTables::new(&v).unwrap();
        let s = t.space();
        let full = GradedSubspace::full(&v);
        let h = heisenberg(&full.basis_space());
        let l = dirac_from_lie(&full, &h).unwrap();
        assert_eq!(l, graph(&heisenberg(&v)).unwrap());
        assert_eq!(lie_from_dirac(&t, &l).unwrap(), (full.clone(), h));
        assert_eq!(dirac_from_lie(&GradedSubspace::zero(&v), &BracketTable::zero(&GradedSubspace::zero(&v).basis_space())).unwrap(), embedded_gl(s));
        // W = span{e1}, zero bracket: D = {X : Xe1 = 0}
        let w = GradedSubspace::from_vectors(&v, &[v.basis_vector(0)]).unwrap();
        let l = dirac_from_lie(&w, &BracketTable::zero(&w.basis_space())).unwrap();
        assert_eq!(l.dim(), 3);
        assert_eq!(annihilator(&w).unwrap().dim(), 2);
        assert!(all_pass(&is_dirac(&t, &l).unwrap()));
        let (w2, t2) = lie_from_dirac(&t, &l).unwrap();
        assert_eq!(w2, w);
        assert!(t2.is_zero());
    }

    #[test]
    fn lie_from_non_dirac_is_an_error() {
        let v = v11();
        let t = OmniTables::new(&v).unwrap();
        let line = GradedSubspace::from_vectors(t.space().e(), &[t.space().embed(&v.basis_vector(0)).unwrap()]).unwrap();
        assert!(matches!(lie_from_dirac(&t, &line), Err(AlgebraError::NotDirac(_))));
    }

    #[test]
    fn graded_tables_count() {
        let v = SuperSpace::standard(Field::prime(5).unwrap(), 1, 1);
        assert_eq!(GradedTables::new(&v).unwrap().total(), 625);
        let all: Vec<_> = GradedTables::new(&v).unwrap().collect();
        assert_eq!(all.len(), 625);
        assert!(all.iter().all(|t| crate::liesuper::check_graded(t).is_pass()));
    }

    #[test]
    fn small_censuses() {
        for (m, n) in [(1, 0), (0, 1)] {
            let v = SuperSpace::standard(Field::prime(5).unwrap(), m, n);
            let c = enumerate_dirac(&v, EnumerationGuard::default()).unwrap();
            assert!(c.is_pass(), "{:?}", c.verdicts);
            assert_eq!(c.dirac.len(), 2);
            assert_eq!(c.lie.len(), 2);
        }
    }

    #[test]
    fn census_guards() {
        let q = SuperSpace::standard(Field::Rational, 1, 0);
        assert!(enumerate_dirac(&q, EnumerationGuard::default()).is_err());
        let big = SuperSpace::standard(Field::prime(5).unwrap(), 2, 1);
        assert!(matches!(
            enumerate_dirac(&big, EnumerationGuard::default()),
            Err(AlgebraError::GuardExceeded { dim: 12, limit: 6 })
        ));
        let f7 = SuperSpace::standard(Field::prime(7).unwrap(), 1, 0);
        assert!(enumerate_dirac(&f7, EnumerationGuard::default()).is_err());
        assert!(enumerate_dirac(&f7, EnumerationGuard { max_dim: 6, max_prime: 7 }).is_ok());
    }
}
