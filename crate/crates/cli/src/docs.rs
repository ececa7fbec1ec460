//! JSON documents and their conversion to and from the core types.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`); integers are accepted on
//! input. Coefficient tables map basis names to scalars, zero entries are
//! omitted on output, and every list is emitted in basis order so that
//! serializing a parsed document gives a canonical form.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};
use superomni_core::liesuper::{BracketTable, EvenBilinearForm, Representation};
use superomni_core::lie2::{CrossedModule, Lie2Superalgebra};
use superomni_core::omni::OmniSpace;
use superomni_core::superlinalg::{Field, GradedSubspace, Parity, Scalar, SuperMap, SuperSpace, SuperVector};

/// A message naming the offending field, e.g. `brackets[2].left: unknown basis name "x"`.
pub type DocResult<T> = std::result::Result<T, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Text(String),
}

impl Coeff {
    fn scalar(&self, field: Field, path: &str) -> DocResult<Scalar> {
        match self {
            Coeff::Int(n) => Ok(field.from_i64(*n)),
            Coeff::Text(s) => field
                .parse_scalar(s)
                .map_err(|e| format!("{path}: {e}")),
        }
    }
}

pub type Combination = BTreeMap<String, Coeff>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    #[serde(default)]
    pub even: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
}

impl Basis {
    pub fn space(&self, field: Field, path: &str) -> DocResult<SuperSpace> {
        let basis = self
            .even
            .iter()
            .map(|s| (s.clone(), Parity::Even))
            .chain(self.odd.iter().map(|s| (s.clone(), Parity::Odd)))
            .collect();
        SuperSpace::with_basis(field, basis).map_err(|e| format!("{path}: {e}"))
    }

    pub fn of(space: &SuperSpace) -> Basis {
        let pick = |p: Parity| {
            (0..space.dim())
                .filter(|i| space.parity(*i) == p)
                .map(|i| space.label(i).to_string())
                .collect()
        };
        Basis {
            even: pick(Parity::Even),
            odd: pick(Parity::Odd),
        }
    }
}

/// `[left, right] = value`, or `left ▹ right = value` in an action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub left: String,
    pub right: String,
    #[serde(default)]
    pub value: Combination,
}

pub fn parse_field(text: &str) -> DocResult<Field> {
    let text = text.trim();
    if let Ok(p) = text.parse::<u64>() {
        return Field::prime(p).map_err(|e| e.to_string());
    }
    text.parse().map_err(|e: superomni_core::AlgebraError| e.to_string())
}

fn index(space: &SuperSpace, name: &str, path: &str) -> DocResult<usize> {
    space
        .index_of(name)
        .ok_or_else(|| format!("{path}: unknown basis name {name:?}"))
}

pub fn vector(space: &SuperSpace, comb: &Combination, path: &str) -> DocResult<SuperVector> {
    let mut coords = vec![space.field().zero(); space.dim()];
    for (name, c) in comb {
        let i = index(space, name, path)?;
        coords[i] = c.scalar(space.field(), &format!("{path}.{name}"))?;
    }
    space.vector(coords).map_err(|e| format!("{path}: {e}"))
}

pub fn combination(v: &SuperVector) -> Combination {
    v.support()
        .map(|(i, c)| (v.space().label(i).to_string(), Coeff::Text(c.to_string())))
        .collect()
}

/// Reads `entries` into a table of values in `target` indexed by
/// `(left in left_space, right in right_space)`. Missing pairs are zero.
fn entry_grid(
    entries: &[Entry],
    left_space: &SuperSpace,
    right_space: &SuperSpace,
    target: &SuperSpace,
    path: &str,
) -> DocResult<Vec<SuperVector>> {
    let nr = right_space.dim();
    let mut grid = vec![target.zero(); left_space.dim() * nr];
    let mut seen = HashSet::new();
    for (k, e) in entries.iter().enumerate() {
        let p = format!("{path}[{k}]");
        let i = index(left_space, &e.left, &format!("{p}.left"))?;
        let j = index(right_space, &e.right, &format!("{p}.right"))?;
        if !seen.insert((i, j)) {
            return Err(format!("{p}: duplicate entry for ({}, {})", e.left, e.right));
        }
        grid[i * nr + j] = vector(target, &e.value, &format!("{p}.value"))?;
    }
    Ok(grid)
}

fn grid_entries(
    left_space: &SuperSpace,
    right_space: &SuperSpace,
    value: impl Fn(usize, usize) -> SuperVector,
) -> Vec<Entry> {
    let mut out = Vec::new();
    for i in doc_order(left_space) {
        for j in doc_order(right_space) {
            let v = value(i, j);
            if !v.is_zero() {
                out.push(Entry {
                    left: left_space.label(i).to_string(),
                    right: right_space.label(j).to_string(),
                    value: combination(&v),
                });
            }
        }
    }
    out
}

/// Basis indices in document order: even names, then odd names.
fn doc_order(space: &SuperSpace) -> Vec<usize> {
    let mut ix: Vec<usize> = (0..space.dim()).collect();
    ix.sort_by_key(|i| space.parity(*i).bit());
    ix
}

/// A graded bracket on named basis vectors, without a field.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraBody {
    #[serde(default)]
    pub even: Vec<String>,
    #[serde(default)]
    pub odd: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<Entry>,
}

impl AlgebraBody {
    pub fn table(&self, field: Field, path: &str) -> DocResult<BracketTable> {
        let basis = Basis {
            even: self.even.clone(),
            odd: self.odd.clone(),
        };
        let space = basis.space(field, path)?;
        let brackets = format!("{}brackets", prefix(path));
        let values = entry_grid(&self.brackets, &space, &space, &space, &brackets)?;
        BracketTable::new(&space, values).map_err(|e| format!("{brackets}: {e}"))
    }

    pub fn of(table: &BracketTable) -> AlgebraBody {
        let s = table.space();
        let b = Basis::of(s);
        AlgebraBody {
            even: b.even,
            odd: b.odd,
            brackets: grid_entries(s, s, |i, j| table.get(i, j).clone()),
        }
    }
}

fn prefix(path: &str) -> String {
    if path.is_empty() {
        String::new()
    } else {
        format!("{path}.")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    #[serde(default = "rationals")]
    pub field: String,
    #[serde(flatten)]
    pub body: AlgebraBody,
}

fn rationals() -> String {
    "Q".into()
}

impl AlgebraDoc {
    pub fn table(&self) -> DocResult<BracketTable> {
        let field = parse_field(&self.field).map_err(|e| format!("field: {e}"))?;
        self.body.table(field, "")
    }

    pub fn of(table: &BracketTable) -> AlgebraDoc {
        AlgebraDoc {
            field: table.space().field().to_string(),
            body: AlgebraBody::of(table),
        }
    }
}

/// The super space `V`: either standard dimensions (`e1.., f1..`) or names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ambient {
    Dims { dims: [usize; 2] },
    Names(Basis),
}

impl Ambient {
    pub fn space(&self, field: Field) -> DocResult<SuperSpace> {
        match self {
            Ambient::Dims { dims } => Ok(SuperSpace::standard(field, dims[0], dims[1])),
            Ambient::Names(b) => b.space(field, "ambient"),
        }
    }

    pub fn of(v: &SuperSpace) -> Ambient {
        let standard = SuperSpace::standard(v.field(), v.even_dim(), v.odd_dim());
        if standard.labels() == v.labels() && standard.parities() == v.parities() {
            Ambient::Dims {
                dims: [v.even_dim(), v.odd_dim()],
            }
        } else {
            Ambient::Names(Basis::of(v))
        }
    }
}

/// A graded subspace of `gl(V) ⊕ V`, or of `V` when `v_only` is set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceDoc {
    #[serde(default = "rationals")]
    pub field: String,
    pub ambient: Ambient,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub v_only: bool,
    #[serde(default)]
    pub generators: Vec<Combination>,
}

/// A parsed [`SubspaceDoc`].
#[derive(Debug)]
pub struct Subspace {
    pub v: SuperSpace,
    pub v_only: bool,
    pub subspace: GradedSubspace,
}

impl SubspaceDoc {
    pub fn parse(&self) -> DocResult<Subspace> {
        let field = parse_field(&self.field).map_err(|e| format!("field: {e}"))?;
        let v = self.ambient.space(field)?;
        let ambient = if self.v_only {
            v.clone()
        } else {
            OmniSpace::new(&v).e().clone()
        };
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(k, g)| vector(&ambient, g, &format!("generators[{k}]")))
            .collect::<DocResult<Vec<_>>>()?;
        let subspace = GradedSubspace::from_vectors(&ambient, &gens).map_err(|e| format!("generators: {e}"))?;
        Ok(Subspace { v, v_only: self.v_only, subspace })
    }

    /// `v` is `V`; `subspace` lives in `gl(V) ⊕ V` or, with `v_only`, in `V`.
    pub fn of(v: &SuperSpace, subspace: &GradedSubspace, v_only: bool) -> SubspaceDoc {
        SubspaceDoc {
            field: v.field().to_string(),
            ambient: Ambient::of(v),
            v_only,
            generators: subspace.basis().iter().map(combination).collect(),
        }
    }
}

/// An action `x ▹ v` of an algebra on a module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoDoc {
    pub module: Basis,
    #[serde(default)]
    pub action: Vec<Entry>,
}

impl RhoDoc {
    pub fn representation(&self, algebra: &SuperSpace) -> DocResult<Representation> {
        let module = self.module.space(algebra.field(), "module")?;
        let images = action_maps(&self.action, algebra, &module, "action")?;
        Representation::new(algebra, &module, images).map_err(|e| format!("action: {e}"))
    }

    pub fn of(rho: &Representation) -> RhoDoc {
        RhoDoc {
            module: Basis::of(rho.module()),
            action: action_entries(rho),
        }
    }
}

fn action_maps(entries: &[Entry], algebra: &SuperSpace, module: &SuperSpace, path: &str) -> DocResult<Vec<SuperMap>> {
    let grid = entry_grid(entries, algebra, module, module, path)?;
    let n = module.dim();
    (0..algebra.dim())
        .map(|x| SuperMap::from_columns(module, module, &grid[x * n..(x + 1) * n]).map_err(|e| format!("{path}: {e}")))
        .collect()
}

fn action_entries(rho: &Representation) -> Vec<Entry> {
    grid_entries(rho.algebra(), rho.module(), |x, v| rho.image(x).column(v))
}

/// Gram matrix entries `B(left, right)`; missing entries are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDoc {
    pub gram: Vec<FormEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormEntry {
    pub left: String,
    pub right: String,
    pub value: Coeff,
}

impl FormDoc {
    pub fn form(&self, space: &SuperSpace) -> DocResult<EvenBilinearForm> {
        let n = space.dim();
        let mut gram = vec![space.field().zero(); n * n];
        let mut seen = HashSet::new();
        for (k, e) in self.gram.iter().enumerate() {
            let p = format!("gram[{k}]");
            let i = index(space, &e.left, &format!("{p}.left"))?;
            let j = index(space, &e.right, &format!("{p}.right"))?;
            if !seen.insert((i, j)) {
                return Err(format!("{p}: duplicate entry for ({}, {})", e.left, e.right));
            }
            gram[i * n + j] = e.value.scalar(space.field(), &format!("{p}.value"))?;
        }
        EvenBilinearForm::new(space, gram).map_err(|e| format!("gram: {e}"))
    }
}

/// Images `d(h)` or `φ(h)` as a map from names to combinations.
fn map_from_doc(doc: &BTreeMap<String, Combination>, domain: &SuperSpace, codomain: &SuperSpace, path: &str) -> DocResult<SuperMap> {
    let mut cols = vec![codomain.zero(); domain.dim()];
    for (name, comb) in doc {
        let h = index(domain, name, path)?;
        cols[h] = vector(codomain, comb, &format!("{path}.{name}"))?;
    }
    SuperMap::from_columns(domain, codomain, &cols).map_err(|e| format!("{path}: {e}"))
}

fn map_to_doc(m: &SuperMap) -> BTreeMap<String, Combination> {
    (0..m.domain().dim())
        .filter_map(|h| {
            let c = m.column(h);
            (!c.is_zero()).then(|| (m.domain().label(h).to_string(), combination(&c)))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct L3Entry {
    pub args: [String; 3],
    #[serde(default)]
    pub value: Combination,
}

/// `V1 --d--> V0` with `l2` on all mixed pairs and `l3` on `V0`. Names in
/// `V0` and `V1` must be distinct; `l2` entries are sorted into `[x,y]`,
/// `[x,h]` and `[h,x]` by where their names live.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lie2Doc {
    #[serde(default = "rationals")]
    pub field: String,
    pub v0: Basis,
    pub v1: Basis,
    #[serde(default)]
    pub d: BTreeMap<String, Combination>,
    #[serde(default)]
    pub l2: Vec<Entry>,
    #[serde(default)]
    pub l3: Vec<L3Entry>,
}

impl Lie2Doc {
    pub fn parse(&self) -> DocResult<Lie2Superalgebra> {
        let field = parse_field(&self.field).map_err(|e| format!("field: {e}"))?;
        let v0 = self.v0.space(field, "v0")?;
        let v1 = self.v1.space(field, "v1")?;
        if let Some(n) = v0.labels().iter().find(|n| v1.index_of(n).is_some()) {
            return Err(format!("v1: name {n:?} is also in v0"));
        }
        let (n0, n1) = (v0.dim(), v1.dim());
        let d = map_from_doc(&self.d, &v1, &v0, "d")?;
        let mut l2 = vec![v0.zero(); n0 * n0];
        let mut act = vec![v1.zero(); n0 * n1];
        let mut ract = vec![v1.zero(); n0 * n1];
        let mut seen = HashSet::new();
        for (k, e) in self.l2.iter().enumerate() {
            let p = format!("l2[{k}]");
            if !seen.insert((e.left.clone(), e.right.clone())) {
                return Err(format!("{p}: duplicate entry for ({}, {})", e.left, e.right));
            }
            let value = format!("{p}.value");
            match (v0.index_of(&e.left), v0.index_of(&e.right)) {
                (Some(x), Some(y)) => l2[x * n0 + y] = vector(&v0, &e.value, &value)?,
                (Some(x), None) => {
                    let h = index(&v1, &e.right, &format!("{p}.right"))?;
                    act[x * n1 + h] = vector(&v1, &e.value, &value)?;
                }
                (None, Some(x)) => {
                    let h = index(&v1, &e.left, &format!("{p}.left"))?;
                    ract[h * n0 + x] = vector(&v1, &e.value, &value)?;
                }
                (None, None) => {
                    index(&v1, &e.left, &format!("{p}.left"))?;
                    index(&v1, &e.right, &format!("{p}.right"))?;
                    if !vector(&v1, &e.value, &value)?.is_zero() {
                        return Err(format!("{p}: brackets of two elements of v1 are zero by definition"));
                    }
                }
            }
        }
        let mut l3 = vec![v1.zero(); n0 * n0 * n0];
        let mut seen = HashSet::new();
        for (k, e) in self.l3.iter().enumerate() {
            let p = format!("l3[{k}]");
            let mut ix = [0; 3];
            for (slot, name) in e.args.iter().enumerate() {
                ix[slot] = index(&v0, name, &format!("{p}.args[{slot}]"))?;
            }
            if !seen.insert(ix) {
                return Err(format!("{p}: duplicate entry for {:?}", e.args));
            }
            l3[(ix[0] * n0 + ix[1]) * n0 + ix[2]] = vector(&v1, &e.value, &format!("{p}.value"))?;
        }
        let l2 = BracketTable::new(&v0, l2).map_err(|e| format!("l2: {e}"))?;
        Lie2Superalgebra::new(d, l2, act, ract, l3).map_err(|e| e.to_string())
    }

    /// Names of `V1` that clash with names of `V0` are primed (`e1` → `e1'`),
    /// all together, until the two name sets are disjoint.
    pub fn of(t: &Lie2Superalgebra) -> Lie2Doc {
        let v0 = t.v0();
        let mut suffix = String::new();
        while t.v1().labels().iter().any(|n| v0.index_of(&format!("{n}{suffix}")).is_some()) {
            suffix.push('\'');
        }
        let renamed = (0..t.v1().dim())
            .map(|h| (format!("{}{suffix}", t.v1().label(h)), t.v1().parity(h)))
            .collect();
        let v1 = &SuperSpace::with_basis(v0.field(), renamed).expect("primed names stay distinct");
        let rename = |v: &SuperVector| v1.vector(v.coords().to_vec()).expect("same dimension");
        let d = SuperMap::from_columns(v1, v0, &(0..v1.dim()).map(|h| t.d().column(h)).collect::<Vec<_>>())
            .expect("same shape");
        let mut l2 = grid_entries(v0, v0, |x, y| t.l2().get(x, y).clone());
        l2.extend(grid_entries(v0, v1, |x, h| rename(t.act_basis(x, h))));
        l2.extend(grid_entries(v1, v0, |h, x| rename(t.ract_basis(h, x))));
        let mut l3 = Vec::new();
        let order = doc_order(v0);
        for &x in &order {
            for &y in &order {
                for &z in &order {
                    let v = t.l3_basis(x, y, z);
                    if !v.is_zero() {
                        l3.push(L3Entry {
                            args: [x, y, z].map(|i| v0.label(i).to_string()),
                            value: combination(&rename(v)),
                        });
                    }
                }
            }
        }
        Lie2Doc {
            field: v0.field().to_string(),
            v0: Basis::of(v0),
            v1: Basis::of(v1),
            d: map_to_doc(&d),
            l2,
            l3,
        }
    }
}

/// `φ: h → g` with `g` acting on `h`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedDoc {
    #[serde(default = "rationals")]
    pub field: String,
    pub g: AlgebraBody,
    pub h: AlgebraBody,
    #[serde(default)]
    pub action: Vec<Entry>,
    #[serde(default)]
    pub phi: BTreeMap<String, Combination>,
}

impl CrossedDoc {
    pub fn parse(&self) -> DocResult<CrossedModule> {
        let field = parse_field(&self.field).map_err(|e| format!("field: {e}"))?;
        let g = self.g.table(field, "g")?;
        let h = self.h.table(field, "h")?;
        let images = action_maps(&self.action, g.space(), h.space(), "action")?;
        let action = Representation::new(g.space(), h.space(), images).map_err(|e| format!("action: {e}"))?;
        let phi = map_from_doc(&self.phi, h.space(), g.space(), "phi")?;
        CrossedModule::new(g, h, action, phi).map_err(|e| e.to_string())
    }

    pub fn of(c: &CrossedModule) -> CrossedDoc {
        CrossedDoc {
            field: c.g().space().field().to_string(),
            g: AlgebraBody::of(c.g()),
            h: AlgebraBody::of(c.h()),
            action: action_entries(c.action()),
            phi: map_to_doc(c.phi()),
        }
    }
}
