//! Finite modules over the rings of this crate.
//!
//! Modules carry the same materialized representation as rings: a canonical
//! element list plus exact addition and scalar-action tables. Submodules are
//! explicit element sets with closure validated at construction, which keeps
//! every classification predicate a bounded scan.

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{additive_closure, Ideal};
use crate::ring::{check_cap, Ring, RingExpr, RingKind};
use crate::set::ElemSet;
use crate::value::Value;

/// Serializable module construction tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleExpr {
    Regular { ring: RingExpr },
    CyclicZmod { d: u64, ring: RingExpr },
    Product { components: Vec<ModuleExpr> },
    DirectSum { components: Vec<ModuleExpr> },
    Quotient { base: Box<ModuleExpr>, sub: Vec<Value> },
}

impl ModuleExpr {
    pub fn regular(ring: RingExpr) -> Self {
        ModuleExpr::Regular { ring }
    }

    pub fn cyclic(d: u64, n: u64) -> Self {
        ModuleExpr::CyclicZmod { d, ring: RingExpr::zmod(n) }
    }

    pub fn build(&self, caps: &Caps) -> Result<Arc<Module>> {
        match self {
            ModuleExpr::Regular { ring } => Module::regular(&ring.build(caps)?, caps),
            ModuleExpr::CyclicZmod { d, ring } => Module::cyclic_zmod(&ring.build(caps)?, *d, caps),
            ModuleExpr::Product { components } => {
                let comps = components
                    .iter()
                    .map(|c| c.build(caps))
                    .collect::<Result<Vec<_>>>()?;
                Module::product(comps, caps)
            }
            ModuleExpr::DirectSum { components } => {
                let comps = components
                    .iter()
                    .map(|c| c.build(caps))
                    .collect::<Result<Vec<_>>>()?;
                Module::direct_sum(comps, caps)
            }
            ModuleExpr::Quotient { base, sub } => {
                let base = base.build(caps)?;
                let sub = Submodule::from_values(&base, sub)?;
                Ok(Module::quotient(&base, &sub, caps)?.0)
            }
        }
    }
}

#[derive(Debug)]
pub enum ModuleKind {
    /// The ring as a module over itself.
    Regular,
    /// `Z/d` over `Z/n` with `d | n`; the action is multiplication mod `d`.
    CyclicZmod { d: u64 },
    /// Componentwise module over the matching product ring.
    Product { components: Vec<Arc<Module>> },
    /// Direct sum of modules over one shared ring.
    DirectSum { components: Vec<Arc<Module>> },
    Quotient {
        base: Arc<Module>,
        sub: ElemSet,
        proj: Vec<u16>,
    },
    /// A submodule viewed as a module; `inject` maps local to ambient indices.
    SubOf { base: Arc<Module>, inject: Vec<u16> },
    /// Fraction module by a multiplicatively closed set; see `localize`.
    Localized {
        base: Arc<Module>,
        set: ElemSet,
        fraction: Vec<u16>,
    },
    /// `M/P` viewed over the quotient ring `R/(P : M)`.
    InducedQuotient { base: Arc<Module>, sub: ElemSet },
}

#[derive(Debug)]
pub struct Module {
    kind: ModuleKind,
    ring: Arc<Ring>,
    elems: Vec<Value>,
    add: Vec<u16>,
    neg: Vec<u16>,
    act: Vec<u16>,
    zero: usize,
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        if self.ring.as_ref() != other.ring.as_ref() {
            return false;
        }
        match (&self.kind, &other.kind) {
            (ModuleKind::Regular, ModuleKind::Regular) => true,
            (ModuleKind::CyclicZmod { d }, ModuleKind::CyclicZmod { d: e }) => d == e,
            (ModuleKind::Product { components: a }, ModuleKind::Product { components: b })
            | (ModuleKind::DirectSum { components: a }, ModuleKind::DirectSum { components: b }) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
            }
            (
                ModuleKind::Quotient { base: a, sub: s, .. },
                ModuleKind::Quotient { base: b, sub: t, .. },
            )
            | (
                ModuleKind::InducedQuotient { base: a, sub: s },
                ModuleKind::InducedQuotient { base: b, sub: t },
            ) => a == b && s == t,
            (
                ModuleKind::SubOf { base: a, inject: i },
                ModuleKind::SubOf { base: b, inject: j },
            ) => a == b && i == j,
            (
                ModuleKind::Localized { base: a, set: s, .. },
                ModuleKind::Localized { base: b, set: t, .. },
            ) => a == b && s == t,
            _ => false,
        }
    }
}

impl Eq for Module {}

impl Module {
    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn card(&self) -> usize {
        self.elems.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.elems.len() + j] as usize
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    /// Scalar action: ring element `r` applied to module element `m`.
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.act[r * self.elems.len() + m] as usize
    }

    pub fn value(&self, i: usize) -> &Value {
        &self.elems[i]
    }

    pub fn values(&self, set: &ElemSet) -> Vec<Value> {
        set.iter().map(|i| self.elems[i].clone()).collect()
    }

    pub fn index_of(&self, v: &Value) -> Result<usize> {
        self.elems
            .binary_search(v)
            .map_err(|_| Error::UnknownElement(v.clone()))
    }

    pub fn indices_of(&self, vs: &[Value]) -> Result<ElemSet> {
        let mut set = ElemSet::empty(self.card());
        for v in vs {
            set.insert(self.index_of(v)?);
        }
        Ok(set)
    }

    pub fn to_expr(&self) -> Result<ModuleExpr> {
        match &self.kind {
            ModuleKind::Regular => Ok(ModuleExpr::Regular { ring: self.ring.to_expr()? }),
            ModuleKind::CyclicZmod { d } => {
                Ok(ModuleExpr::CyclicZmod { d: *d, ring: self.ring.to_expr()? })
            }
            ModuleKind::Product { components } => Ok(ModuleExpr::Product {
                components: components.iter().map(|c| c.to_expr()).collect::<Result<_>>()?,
            }),
            ModuleKind::DirectSum { components } => Ok(ModuleExpr::DirectSum {
                components: components.iter().map(|c| c.to_expr()).collect::<Result<_>>()?,
            }),
            ModuleKind::Quotient { base, sub, .. } => Ok(ModuleExpr::Quotient {
                base: Box::new(base.to_expr()?),
                sub: base.values(sub),
            }),
            _ => Err(Error::Invalid("module kind has no construction tree".into())),
        }
    }

    pub fn regular(ring: &Arc<Ring>, caps: &Caps) -> Result<Arc<Module>> {
        let n = ring.card();
        let mut act = vec![0u16; n * n];
        let mut add = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                act[i * n + j] = ring.mul(i, j) as u16;
                add[i * n + j] = ring.add(i, j) as u16;
            }
        }
        let neg = (0..n).map(|i| ring.neg(i) as u16).collect();
        Module::from_parts(
            ModuleKind::Regular,
            Arc::clone(ring),
            ring_values(ring),
            add,
            neg,
            act,
            ring.zero(),
            caps,
        )
    }

    pub fn cyclic_zmod(ring: &Arc<Ring>, d: u64, caps: &Caps) -> Result<Arc<Module>> {
        let n = match ring.kind() {
            RingKind::Zmod { n } => *n,
            _ => return Err(Error::WrongRingKind { expected: "zmod" }),
        };
        if d == 0 || n % d != 0 {
            return Err(Error::BadCyclicOrder { d, n });
        }
        let card = d as usize;
        check_cap(card, caps)?;
        let elems: Vec<Value> = (0..d).map(Value::Int).collect();
        let mut add = vec![0u16; card * card];
        for i in 0..card {
            for j in 0..card {
                add[i * card + j] = ((i + j) % card) as u16;
            }
        }
        let neg = (0..card).map(|i| ((card - i) % card) as u16).collect();
        let rn = ring.card();
        let mut act = vec![0u16; rn * card];
        for r in 0..rn {
            for m in 0..card {
                act[r * card + m] = ((r * m) % card) as u16;
            }
        }
        Module::from_parts(ModuleKind::CyclicZmod { d }, Arc::clone(ring), elems, add, neg, act, 0, caps)
    }

    pub fn product(components: Vec<Arc<Module>>, caps: &Caps) -> Result<Arc<Module>> {
        if components.is_empty() {
            return Err(Error::EmptyProduct { min: 1 });
        }
        let ring = Ring::product(components.iter().map(|c| Arc::clone(c.ring())).collect(), caps)?;
        let card: usize = components.iter().map(|c| c.card()).product();
        check_cap(card, caps)?;
        let dims: Vec<usize> = components.iter().map(|c| c.card()).collect();
        let rdims: Vec<usize> = components.iter().map(|c| c.ring().card()).collect();
        let elems = tuple_values(&components, &dims, card);
        let (add, neg, zero) = tuple_additive(&components, &dims, card);
        let rn = ring.card();
        let mut act = vec![0u16; rn * card];
        for r in 0..rn {
            let rc = decode(r, &rdims);
            for m in 0..card {
                let mc = decode(m, &dims);
                let image: Vec<usize> = components
                    .iter()
                    .enumerate()
                    .map(|(k, comp)| comp.act(rc[k], mc[k]))
                    .collect();
                act[r * card + m] = encode(&image, &dims) as u16;
            }
        }
        Module::from_parts(ModuleKind::Product { components }, ring, elems, add, neg, act, zero, caps)
    }

    pub fn direct_sum(components: Vec<Arc<Module>>, caps: &Caps) -> Result<Arc<Module>> {
        if components.is_empty() {
            return Err(Error::EmptyProduct { min: 1 });
        }
        let ring = Arc::clone(components[0].ring());
        if components.iter().any(|c| c.ring().as_ref() != ring.as_ref()) {
            return Err(Error::RingMismatch);
        }
        let card: usize = components.iter().map(|c| c.card()).product();
        check_cap(card, caps)?;
        let dims: Vec<usize> = components.iter().map(|c| c.card()).collect();
        let elems = tuple_values(&components, &dims, card);
        let (add, neg, zero) = tuple_additive(&components, &dims, card);
        let rn = ring.card();
        let mut act = vec![0u16; rn * card];
        for r in 0..rn {
            for m in 0..card {
                let mc = decode(m, &dims);
                let image: Vec<usize> = components
                    .iter()
                    .enumerate()
                    .map(|(k, comp)| comp.act(r, mc[k]))
                    .collect();
                act[r * card + m] = encode(&image, &dims) as u16;
            }
        }
        Module::from_parts(ModuleKind::DirectSum { components }, ring, elems, add, neg, act, zero, caps)
    }

    /// `M/N` together with the canonical projection.
    pub fn quotient(
        base: &Arc<Module>,
        sub: &Submodule,
        caps: &Caps,
    ) -> Result<(Arc<Module>, ModuleHom)> {
        if sub.module().as_ref() != base.as_ref() {
            return Err(Error::ModuleMismatch);
        }
        let n = base.card();
        let rep: Vec<usize> = (0..n)
            .map(|x| sub.set().iter().map(|j| base.add(x, j)).min().unwrap())
            .collect();
        let classes: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
        let card = classes.len();
        let mut proj = vec![0u16; n];
        for x in 0..n {
            proj[x] = classes.binary_search(&rep[x]).unwrap() as u16;
        }
        let elems: Vec<Value> = classes.iter().map(|&x| base.value(x).clone()).collect();
        let mut add = vec![0u16; card * card];
        for i in 0..card {
            for j in 0..card {
                add[i * card + j] = proj[base.add(classes[i], classes[j])];
            }
        }
        let neg: Vec<u16> = (0..card).map(|i| proj[base.neg(classes[i])]).collect();
        let rn = base.ring().card();
        let mut act = vec![0u16; rn * card];
        for r in 0..rn {
            for m in 0..card {
                act[r * card + m] = proj[base.act(r, classes[m])];
            }
        }
        let zero = proj[base.zero()] as usize;
        let kind = ModuleKind::Quotient {
            base: Arc::clone(base),
            sub: sub.set().clone(),
            proj: proj.clone(),
        };
        let module = Module::from_parts(kind, Arc::clone(base.ring()), elems, add, neg, act, zero, caps)?;
        let hom = ModuleHom {
            domain: Arc::clone(base),
            codomain: Arc::clone(&module),
            map: proj,
        };
        Ok((module, hom))
    }

    /// A submodule as a module in its own right, with the inclusion map.
    pub fn sub_module(sub: &Submodule, caps: &Caps) -> Result<(Arc<Module>, ModuleHom)> {
        let base = sub.module();
        let inject: Vec<u16> = sub.set().iter().map(|i| i as u16).collect();
        let card = inject.len();
        let pos = |ambient: usize| inject.binary_search(&(ambient as u16)).unwrap() as u16;
        let elems: Vec<Value> = inject.iter().map(|&i| base.value(i as usize).clone()).collect();
        let mut add = vec![0u16; card * card];
        for i in 0..card {
            for j in 0..card {
                add[i * card + j] = pos(base.add(inject[i] as usize, inject[j] as usize));
            }
        }
        let neg: Vec<u16> = (0..card).map(|i| pos(base.neg(inject[i] as usize))).collect();
        let rn = base.ring().card();
        let mut act = vec![0u16; rn * card];
        for r in 0..rn {
            for m in 0..card {
                act[r * card + m] = pos(base.act(r, inject[m] as usize));
            }
        }
        let zero = pos(base.zero()) as usize;
        let kind = ModuleKind::SubOf { base: Arc::clone(base), inject: inject.clone() };
        let module = Module::from_parts(kind, Arc::clone(base.ring()), elems, add, neg, act, zero, caps)?;
        let hom = ModuleHom {
            domain: Arc::clone(&module),
            codomain: Arc::clone(base),
            map: inject,
        };
        Ok((module, hom))
    }

    /// `M/P` as a module over the quotient ring `R/(P : M)`, with the set
    /// projection of scalars. The action by representatives is well defined
    /// because `(P : M)` carries `M` into `P`.
    pub fn induced_quotient(
        base: &Arc<Module>,
        p: &Submodule,
        caps: &Caps,
    ) -> Result<(Arc<Ring>, Arc<Module>)> {
        if p.module().as_ref() != base.as_ref() {
            return Err(Error::ModuleMismatch);
        }
        let colon = p.colon_by(&Submodule::full(base));
        let qring = Ring::quotient(base.ring(), &colon, caps)?;
        let n = base.card();
        let rep: Vec<usize> = (0..n)
            .map(|x| p.set().iter().map(|j| base.add(x, j)).min().unwrap())
            .collect();
        let classes: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
        let card = classes.len();
        let mut proj = vec![0u16; n];
        for x in 0..n {
            proj[x] = classes.binary_search(&rep[x]).unwrap() as u16;
        }
        let elems: Vec<Value> = classes.iter().map(|&x| base.value(x).clone()).collect();
        let mut add = vec![0u16; card * card];
        for i in 0..card {
            for j in 0..card {
                add[i * card + j] = proj[base.add(classes[i], classes[j])];
            }
        }
        let neg: Vec<u16> = (0..card).map(|i| proj[base.neg(classes[i])]).collect();
        let rn = qring.card();
        let mut act = vec![0u16; rn * card];
        for r in 0..rn {
            let base_r = base.ring().index_of(qring.value(r))?;
            for m in 0..card {
                act[r * card + m] = proj[base.act(base_r, classes[m])];
            }
        }
        let zero = proj[base.zero()] as usize;
        let kind = ModuleKind::InducedQuotient { base: Arc::clone(base), sub: p.set().clone() };
        let module = Module::from_parts(kind, Arc::clone(&qring), elems, add, neg, act, zero, caps)?;
        Ok((qring, module))
    }

    /// For a quotient module, the class index of a base element.
    pub fn project(&self, base_index: usize) -> Result<usize> {
        match &self.kind {
            ModuleKind::Quotient { proj, .. } => Ok(proj[base_index] as usize),
            _ => Err(Error::Invalid("not a quotient module".into())),
        }
    }

    /// Smallest generating set in canonical order (greedy).
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElemSet::empty(self.card());
        span.insert(self.zero);
        for m in 0..self.card() {
            if !span.contains(m) {
                gens.push(m);
                span = generated_set(self, gens.iter().copied());
            }
        }
        gens
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        kind: ModuleKind,
        ring: Arc<Ring>,
        elems: Vec<Value>,
        add: Vec<u16>,
        neg: Vec<u16>,
        act: Vec<u16>,
        zero: usize,
        caps: &Caps,
    ) -> Result<Arc<Module>> {
        check_cap(elems.len().max(1), caps)?;
        let module = Module { kind, ring, elems, add, neg, act, zero };
        if !module.elems.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::AxiomViolation("element list is not canonically sorted".into()));
        }
        if module.card() <= caps.audit {
            module.audit()?;
        }
        Ok(Arc::new(module))
    }

    fn audit(&self) -> Result<()> {
        let n = self.card();
        let rn = self.ring.card();
        let fail = |msg: &str| Err(Error::AxiomViolation(msg.into()));
        for i in 0..n {
            if self.add(i, self.zero) != i {
                return fail("m + 0 != m");
            }
            if self.add(i, self.neg(i)) != self.zero {
                return fail("m + (-m) != 0");
            }
            if self.act(self.ring.one(), i) != i {
                return fail("1 * m != m");
            }
            for j in 0..n {
                if self.add(i, j) != self.add(j, i) {
                    return fail("module addition is not commutative");
                }
                for k in 0..n {
                    if self.add(self.add(i, j), k) != self.add(i, self.add(j, k)) {
                        return fail("module addition is not associative");
                    }
                }
            }
        }
        for r in 0..rn {
            for s in 0..rn {
                for m in 0..n {
                    if self.act(self.ring.mul(r, s), m) != self.act(r, self.act(s, m)) {
                        return fail("scalar action is not associative");
                    }
                    if self.act(self.ring.add(r, s), m)
                        != self.add(self.act(r, m), self.act(s, m))
                    {
                        return fail("scalar action does not distribute over ring addition");
                    }
                }
            }
            for m in 0..n {
                for mp in 0..n {
                    if self.act(r, self.add(m, mp)) != self.add(self.act(r, m), self.act(r, mp)) {
                        return fail("scalar action does not distribute over module addition");
                    }
                }
            }
        }
        Ok(())
    }
}

fn ring_values(ring: &Ring) -> Vec<Value> {
    (0..ring.card()).map(|i| ring.value(i).clone()).collect()
}

fn decode(mut i: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        out[k] = i % dims[k];
        i /= dims[k];
    }
    out
}

fn encode(coords: &[usize], dims: &[usize]) -> usize {
    coords.iter().zip(dims).fold(0, |acc, (&c, &d)| acc * d + c)
}

fn tuple_values(components: &[Arc<Module>], dims: &[usize], card: usize) -> Vec<Value> {
    (0..card)
        .map(|i| {
            let coords = decode(i, dims);
            Value::Tuple(
                coords
                    .iter()
                    .zip(components)
                    .map(|(&c, comp)| comp.value(c).clone())
                    .collect(),
            )
        })
        .collect()
}

fn tuple_additive(
    components: &[Arc<Module>],
    dims: &[usize],
    card: usize,
) -> (Vec<u16>, Vec<u16>, usize) {
    let mut add = vec![0u16; card * card];
    let mut neg = vec![0u16; card];
    for i in 0..card {
        let ci = decode(i, dims);
        neg[i] = encode(
            &ci.iter().zip(components).map(|(&a, c)| c.neg(a)).collect::<Vec<_>>(),
            dims,
        ) as u16;
        for j in 0..card {
            let cj = decode(j, dims);
            let sum: Vec<usize> = ci
                .iter()
                .zip(&cj)
                .zip(components)
                .map(|((&a, &b), c)| c.add(a, b))
                .collect();
            add[i * card + j] = encode(&sum, dims) as u16;
        }
    }
    let zero = encode(&components.iter().map(|c| c.zero()).collect::<Vec<_>>(), dims);
    (add, neg, zero)
}

fn generated_set(module: &Module, gens: impl IntoIterator<Item = usize>) -> ElemSet {
    let mut set = ElemSet::empty(module.card());
    set.insert(module.zero());
    for g in gens {
        for r in 0..module.ring().card() {
            set.insert(module.act(r, g));
        }
    }
    additive_closure(module.card(), |i, j| module.add(i, j), &mut set);
    set
}

/// A submodule given by its full element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    module: Arc<Module>,
    set: ElemSet,
}

impl Submodule {
    pub fn validate(module: &Arc<Module>, set: ElemSet) -> Result<Submodule> {
        let fail = |reason: String| Err(Error::NotASubmodule { reason });
        if !set.contains(module.zero()) {
            return fail("0 is missing".into());
        }
        for x in set.iter() {
            for y in set.iter() {
                if !set.contains(module.add(x, y)) {
                    return fail(format!(
                        "{} + {} escapes the set",
                        module.value(x),
                        module.value(y)
                    ));
                }
            }
            for r in 0..module.ring().card() {
                if !set.contains(module.act(r, x)) {
                    return fail(format!(
                        "{} * {} escapes the set",
                        module.ring().value(r),
                        module.value(x)
                    ));
                }
            }
        }
        Ok(Submodule { module: Arc::clone(module), set })
    }

    pub fn from_values(module: &Arc<Module>, values: &[Value]) -> Result<Submodule> {
        Submodule::validate(module, module.indices_of(values)?)
    }

    pub(crate) fn unchecked(module: &Arc<Module>, set: ElemSet) -> Submodule {
        debug_assert!(Submodule::validate(module, set.clone()).is_ok());
        Submodule { module: Arc::clone(module), set }
    }

    pub fn zero(module: &Arc<Module>) -> Submodule {
        let mut set = ElemSet::empty(module.card());
        set.insert(module.zero());
        Submodule { module: Arc::clone(module), set }
    }

    pub fn full(module: &Arc<Module>) -> Submodule {
        Submodule { module: Arc::clone(module), set: ElemSet::full(module.card()) }
    }

    /// Smallest submodule containing the generators.
    pub fn generated(module: &Arc<Module>, gens: &ElemSet) -> Submodule {
        Submodule {
            module: Arc::clone(module),
            set: generated_set(module, gens.iter()),
        }
    }

    pub fn generated_from_values(module: &Arc<Module>, values: &[Value]) -> Result<Submodule> {
        Ok(Submodule::generated(module, &module.indices_of(values)?))
    }

    pub fn module(&self) -> &Arc<Module> {
        &self.module
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    pub fn is_proper(&self) -> bool {
        self.set.len() < self.module.card()
    }

    pub fn values(&self) -> Vec<Value> {
        self.module.values(&self.set)
    }

    pub fn sum(&self, other: &Submodule) -> Submodule {
        let mut set = ElemSet::empty(self.module.card());
        for x in self.set.iter() {
            for y in other.set.iter() {
                set.insert(self.module.add(x, y));
            }
        }
        Submodule { module: Arc::clone(&self.module), set }
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        Submodule {
            module: Arc::clone(&self.module),
            set: self.set.intersection(&other.set),
        }
    }

    /// `(N :_R K) = { r : rK included in N }`.
    pub fn colon_by(&self, k: &Submodule) -> Ideal {
        let ring = self.module.ring();
        let set = ElemSet::from_indices(
            ring.card(),
            (0..ring.card()).filter(|&r| k.set.iter().all(|x| self.set.contains(self.module.act(r, x)))),
        );
        Ideal::unchecked(ring, set)
    }

    /// `(N :_M J) = { m : Jm included in N }`.
    pub fn colon_ideal(&self, j: &Ideal) -> Submodule {
        let set = ElemSet::from_indices(
            self.module.card(),
            (0..self.module.card())
                .filter(|&m| j.set().iter().all(|a| self.set.contains(self.module.act(a, m)))),
        );
        Submodule { module: Arc::clone(&self.module), set }
    }

    /// `(N :_M s)` for a single scalar, i.e. the residual by the principal
    /// ideal `Rs`. Because `N` is action-closed this is `{ m : sm in N }`.
    pub fn colon_element(&self, s: usize) -> Submodule {
        let set = ElemSet::from_indices(
            self.module.card(),
            (0..self.module.card()).filter(|&m| self.set.contains(self.module.act(s, m))),
        );
        Submodule { module: Arc::clone(&self.module), set }
    }
}

/// `Ann_R(M) = (0 :_R M)`.
pub fn annihilator(module: &Arc<Module>) -> Ideal {
    Submodule::zero(module).colon_by(&Submodule::full(module))
}

/// The full submodule lattice: closure of the cyclic submodules under
/// pairwise sums, duplicate-free in canonical order.
pub fn enumerate_submodules(module: &Arc<Module>, caps: &Caps) -> Result<Vec<Submodule>> {
    if module.card() > caps.enumeration {
        return Err(Error::CapExceeded { cardinality: module.card(), cap: caps.enumeration });
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut lattice: Vec<ElemSet> = Vec::new();
    for m in 0..module.card() {
        let cyclic = generated_set(module, [m]);
        if seen.insert(cyclic.clone()) {
            lattice.push(cyclic);
        }
    }
    loop {
        let mut fresh = Vec::new();
        for a in &lattice {
            for b in &lattice {
                let mut sum = ElemSet::empty(module.card());
                for x in a.iter() {
                    for y in b.iter() {
                        sum.insert(module.add(x, y));
                    }
                }
                if !seen.contains(&sum) {
                    seen.insert(sum.clone());
                    fresh.push(sum);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        lattice.extend(fresh);
    }
    lattice.sort();
    Ok(lattice
        .into_iter()
        .map(|set| Submodule { module: Arc::clone(module), set })
        .collect())
}

/// `IM`: the submodule generated by products of ideal and module elements.
pub fn ideal_times_module(ideal: &Ideal, module: &Arc<Module>) -> Submodule {
    let mut set = ElemSet::empty(module.card());
    set.insert(module.zero());
    for a in ideal.set().iter() {
        for m in 0..module.card() {
            set.insert(module.act(a, m));
        }
    }
    additive_closure(module.card(), |i, j| module.add(i, j), &mut set);
    Submodule::unchecked(module, set)
}

/// Product of submodules of a multiplication module:
/// `KL = (K :_R M)(L :_R M) M`.
pub fn submodule_product(k: &Submodule, l: &Submodule) -> Submodule {
    let module = k.module();
    let full = Submodule::full(module);
    let ik = k.colon_by(&full);
    let il = l.colon_by(&full);
    ideal_times_module(&ik.product(&il), module)
}

pub(crate) fn is_prime_set(module: &Module, set: &ElemSet) -> bool {
    if set.len() == module.card() {
        return false;
    }
    let ring = module.ring();
    let colon: Vec<bool> = (0..ring.card())
        .map(|r| (0..module.card()).all(|m| set.contains(module.act(r, m))))
        .collect();
    for (r, carries) in colon.iter().enumerate() {
        if *carries {
            continue;
        }
        for m in 0..module.card() {
            if set.contains(module.act(r, m)) && !set.contains(m) {
                return false;
            }
        }
    }
    true
}

/// All prime submodules: proper `P` with `rm in P` forcing `r in (P:M)` or
/// `m in P`.
pub fn prime_submodules(module: &Arc<Module>, caps: &Caps) -> Result<Vec<Submodule>> {
    Ok(enumerate_submodules(module, caps)?
        .into_iter()
        .filter(|p| is_prime_set(module, p.set()))
        .collect())
}

/// `rad(N)`: the intersection of the prime submodules containing `N`, with
/// `rad(M) = M` for the improper submodule (empty intersection).
pub fn rad_submodule(n: &Submodule, caps: &Caps) -> Result<Submodule> {
    let module = n.module();
    let mut acc = ElemSet::full(module.card());
    let mut found = false;
    for p in prime_submodules(module, caps)? {
        if n.set().is_subset(p.set()) {
            acc = acc.intersection(p.set());
            found = true;
        }
    }
    if !found {
        return Ok(Submodule::full(module));
    }
    Ok(Submodule { module: Arc::clone(module), set: acc })
}

fn check_maximal(p: &Ideal) -> Result<()> {
    let ring = p.ring();
    if !p.is_proper() {
        return Err(Error::NotMaximal);
    }
    for x in 0..ring.card() {
        if !p.contains(x) {
            let mut gens = p.set().clone();
            gens.insert(x);
            if Ideal::generated(ring, &gens).is_proper() {
                return Err(Error::NotMaximal);
            }
        }
    }
    Ok(())
}

/// `T_p(M) = { m : (1-r)m = 0 for some r in p }` for a maximal ideal `p`.
pub fn torsion_part(module: &Arc<Module>, p: &Ideal) -> Result<Submodule> {
    if p.ring().as_ref() != module.ring().as_ref() {
        return Err(Error::RingMismatch);
    }
    check_maximal(p)?;
    let ring = module.ring();
    let set = ElemSet::from_indices(
        module.card(),
        (0..module.card()).filter(|&m| {
            p.set()
                .iter()
                .any(|r| module.act(ring.sub(ring.one(), r), m) == module.zero())
        }),
    );
    Submodule::validate(module, set)
}

/// Whether `(1-q)M` fits inside a single cyclic submodule for some `q in p`;
/// returns the least witness `(q, m)`.
pub fn p_cyclic_witness(module: &Arc<Module>, p: &Ideal) -> Result<Option<(Value, Value)>> {
    if p.ring().as_ref() != module.ring().as_ref() {
        return Err(Error::RingMismatch);
    }
    check_maximal(p)?;
    let ring = module.ring();
    for q in p.set().iter() {
        let u = ring.sub(ring.one(), q);
        let image: Vec<usize> = (0..module.card()).map(|m| module.act(u, m)).collect();
        for m in 0..module.card() {
            let cyclic = generated_set(module, [m]);
            if image.iter().all(|&x| cyclic.contains(x)) {
                return Ok(Some((ring.value(q).clone(), module.value(m).clone())));
            }
        }
    }
    Ok(None)
}

/// First submodule (in canonical order) violating `N = (N :_R M) M`, or
/// `None` when the module is a multiplication module.
pub fn multiplication_counterexample(
    module: &Arc<Module>,
    caps: &Caps,
) -> Result<Option<Submodule>> {
    let full = Submodule::full(module);
    for n in enumerate_submodules(module, caps)? {
        let recovered = ideal_times_module(&n.colon_by(&full), module);
        if recovered.set() != n.set() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

pub fn is_multiplication(module: &Arc<Module>, caps: &Caps) -> Result<bool> {
    Ok(multiplication_counterexample(module, caps)?.is_none())
}

/// A module homomorphism as a total mapping table, validated exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    domain: Arc<Module>,
    codomain: Arc<Module>,
    map: Vec<u16>,
}

impl ModuleHom {
    pub fn new(domain: &Arc<Module>, codomain: &Arc<Module>, map: Vec<u16>) -> Result<ModuleHom> {
        if domain.ring().as_ref() != codomain.ring().as_ref() {
            return Err(Error::RingMismatch);
        }
        if map.len() != domain.card() {
            return Err(Error::NotAHom { reason: "mapping table has the wrong length".into() });
        }
        let hom = ModuleHom {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            map,
        };
        hom.check()?;
        Ok(hom)
    }

    pub fn from_images(
        domain: &Arc<Module>,
        codomain: &Arc<Module>,
        images: &[Value],
    ) -> Result<ModuleHom> {
        let map = images
            .iter()
            .map(|v| codomain.index_of(v).map(|i| i as u16))
            .collect::<Result<Vec<_>>>()?;
        ModuleHom::new(domain, codomain, map)
    }

    fn check(&self) -> Result<()> {
        let d = &self.domain;
        let c = &self.codomain;
        for x in 0..d.card() {
            for y in 0..d.card() {
                if self.apply(d.add(x, y)) != c.add(self.apply(x), self.apply(y)) {
                    return Err(Error::NotAHom {
                        reason: format!(
                            "f({} + {}) != f({}) + f({})",
                            d.value(x),
                            d.value(y),
                            d.value(x),
                            d.value(y)
                        ),
                    });
                }
            }
            for r in 0..d.ring().card() {
                if self.apply(d.act(r, x)) != c.act(r, self.apply(x)) {
                    return Err(Error::NotAHom {
                        reason: format!(
                            "f({} * {}) != {} * f({})",
                            d.ring().value(r),
                            d.value(x),
                            d.ring().value(r),
                            d.value(x)
                        ),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn identity(module: &Arc<Module>) -> ModuleHom {
        ModuleHom {
            domain: Arc::clone(module),
            codomain: Arc::clone(module),
            map: (0..module.card()).map(|i| i as u16).collect(),
        }
    }

    pub fn domain(&self) -> &Arc<Module> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Module> {
        &self.codomain
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i] as usize
    }

    pub fn images(&self) -> Vec<Value> {
        (0..self.domain.card())
            .map(|i| self.codomain.value(self.apply(i)).clone())
            .collect()
    }

    pub fn image(&self, p: &Submodule) -> Submodule {
        let set = ElemSet::from_indices(self.codomain.card(), p.set().iter().map(|i| self.apply(i)));
        Submodule::unchecked(&self.codomain, set)
    }

    pub fn preimage(&self, p: &Submodule) -> Submodule {
        let set = ElemSet::from_indices(
            self.domain.card(),
            (0..self.domain.card()).filter(|&i| p.contains(self.apply(i))),
        );
        Submodule::unchecked(&self.domain, set)
    }

    pub fn kernel(&self) -> Submodule {
        self.preimage(&Submodule::zero(&self.codomain))
    }

    pub fn range(&self) -> Submodule {
        self.image(&Submodule::full(&self.domain))
    }

    pub fn is_surjective(&self) -> bool {
        self.range().set().len() == self.codomain.card()
    }
}

/// Every homomorphism between two modules over the same ring, in a
/// deterministic order. Candidates are generated by assigning images to a
/// generating set and extending linearly; each surviving table is validated
/// exhaustively.
pub fn enumerate_homs(domain: &Arc<Module>, codomain: &Arc<Module>) -> Result<Vec<ModuleHom>> {
    if domain.ring().as_ref() != codomain.ring().as_ref() {
        return Err(Error::RingMismatch);
    }
    let gens = domain.generating_set();
    let cn = codomain.card();
    let count = cn.checked_pow(gens.len() as u32).unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for assignment in 0..count {
        let mut images = Vec::with_capacity(gens.len());
        let mut a = assignment;
        for _ in 0..gens.len() {
            images.push(a % cn);
            a /= cn;
        }
        if let Some(map) = extend_hom(domain, codomain, &gens, &images) {
            if let Ok(hom) = ModuleHom::new(domain, codomain, map) {
                out.push(hom);
            }
        }
    }
    Ok(out)
}

fn extend_hom(
    domain: &Arc<Module>,
    codomain: &Arc<Module>,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<u16>> {
    const UNSET: u16 = u16::MAX;
    let n = domain.card();
    let mut map = vec![UNSET; n];
    let assign = |map: &mut Vec<u16>, x: usize, v: usize| -> bool {
        if map[x] == UNSET {
            map[x] = v as u16;
            true
        } else {
            map[x] as usize == v
        }
    };
    if !assign(&mut map, domain.zero(), codomain.zero()) {
        return None;
    }
    for (&g, &img) in gens.iter().zip(images) {
        if !assign(&mut map, g, img) {
            return None;
        }
    }
    loop {
        let mut changed = false;
        let known: Vec<usize> = (0..n).filter(|&i| map[i] != UNSET).collect();
        for &x in &known {
            let fx = map[x] as usize;
            for r in 0..domain.ring().card() {
                let y = domain.act(r, x);
                let v = codomain.act(r, fx);
                if map[y] == UNSET {
                    map[y] = v as u16;
                    changed = true;
                } else if map[y] as usize != v {
                    return None;
                }
            }
            for &y in &known {
                let z = domain.add(x, y);
                let v = codomain.add(fx, map[y] as usize);
                if map[z] == UNSET {
                    map[z] = v as u16;
                    changed = true;
                } else if map[z] as usize != v {
                    return None;
                }
            }
        }
        if !changed {
            break;
        }
    }
    if map.contains(&UNSET) {
        return None;
    }
    Some(map)
}
