//! Finite commutative rings with identity.
//!
//! A [`Ring`] materializes its full element list in canonical order together
//! with exact operation tables, so that every downstream predicate is a plain
//! scan over indices. Rings are built from construction trees ([`RingExpr`]):
//! residue rings `Z/n`, finite products, quotients by an ideal, and
//! idealizations `R(+)M` of a module. Values are immutable after construction
//! and safe to share across threads.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::module::{Module, ModuleExpr};
use crate::set::ElemSet;
use crate::value::Value;

/// Serializable ring construction tree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingExpr {
    Zmod { n: u64 },
    Product { components: Vec<RingExpr> },
    Quotient { base: Box<RingExpr>, modulus: Vec<Value> },
    Idealization { base: Box<RingExpr>, carrier: Box<ModuleExpr> },
}

impl RingExpr {
    pub fn zmod(n: u64) -> Self {
        RingExpr::Zmod { n }
    }

    pub fn build(&self, caps: &Caps) -> Result<Arc<Ring>> {
        match self {
            RingExpr::Zmod { n } => Ring::zmod(*n, caps),
            RingExpr::Product { components } => {
                let comps = components
                    .iter()
                    .map(|c| c.build(caps))
                    .collect::<Result<Vec<_>>>()?;
                Ring::product(comps, caps)
            }
            RingExpr::Quotient { base, modulus } => {
                let base = base.build(caps)?;
                let ideal = Ideal::from_values(&base, modulus)?;
                Ring::quotient(&base, &ideal, caps)
            }
            RingExpr::Idealization { base, carrier } => {
                let base = base.build(caps)?;
                let carrier = carrier.build(caps)?;
                Ring::idealization(&base, &carrier, caps)
            }
        }
    }
}

#[derive(Debug)]
pub enum RingKind {
    Zmod {
        n: u64,
    },
    Product {
        components: Vec<Arc<Ring>>,
    },
    Quotient {
        base: Arc<Ring>,
        modulus: ElemSet,
        /// base element index -> class index
        proj: Vec<u16>,
    },
    Idealization {
        base: Arc<Ring>,
        carrier: Arc<Module>,
    },
    /// Fraction ring by a multiplicatively closed set; see `localize`.
    Localized {
        base: Arc<Ring>,
        set: ElemSet,
        /// base element index -> class index of a/1
        fraction: Vec<u16>,
    },
}

#[derive(Debug)]
pub struct Ring {
    kind: RingKind,
    elems: Vec<Value>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: usize,
    one: usize,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        match (&self.kind, &other.kind) {
            (RingKind::Zmod { n }, RingKind::Zmod { n: m }) => n == m,
            (RingKind::Product { components: a }, RingKind::Product { components: b }) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
            }
            (
                RingKind::Quotient { base: a, modulus: i, .. },
                RingKind::Quotient { base: b, modulus: j, .. },
            ) => a == b && i == j,
            (
                RingKind::Idealization { base: a, carrier: m },
                RingKind::Idealization { base: b, carrier: n },
            ) => a == b && m == n,
            (
                RingKind::Localized { base: a, set: s, .. },
                RingKind::Localized { base: b, set: t, .. },
            ) => a == b && s == t,
            _ => false,
        }
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn kind(&self) -> &RingKind {
        &self.kind
    }

    pub fn card(&self) -> usize {
        self.elems.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i * self.elems.len() + j] as usize
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.elems.len() + j] as usize
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    pub fn sub(&self, i: usize, j: usize) -> usize {
        self.add(i, self.neg(j))
    }

    pub fn pow(&self, i: usize, t: usize) -> usize {
        let mut acc = self.one;
        for _ in 0..t {
            acc = self.mul(acc, i);
        }
        acc
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

    /// The set of units `{ x : xy = 1 for some y }`.
    pub fn units(&self) -> ElemSet {
        let n = self.card();
        let mut set = ElemSet::empty(n);
        for x in 0..n {
            if (0..n).any(|y| self.mul(x, y) == self.one) {
                set.insert(x);
            }
        }
        set
    }

    pub fn is_unit(&self, x: usize) -> bool {
        (0..self.card()).any(|y| self.mul(x, y) == self.one)
    }

    pub fn to_expr(&self) -> Result<RingExpr> {
        match &self.kind {
            RingKind::Zmod { n } => Ok(RingExpr::Zmod { n: *n }),
            RingKind::Product { components } => Ok(RingExpr::Product {
                components: components.iter().map(|c| c.to_expr()).collect::<Result<_>>()?,
            }),
            RingKind::Quotient { base, modulus, .. } => Ok(RingExpr::Quotient {
                base: Box::new(base.to_expr()?),
                modulus: base.values(modulus),
            }),
            RingKind::Idealization { base, carrier } => Ok(RingExpr::Idealization {
                base: Box::new(base.to_expr()?),
                carrier: Box::new(carrier.to_expr()?),
            }),
            RingKind::Localized { .. } => {
                Err(Error::Invalid("fraction rings have no construction tree".into()))
            }
        }
    }

    pub fn zmod(n: u64, caps: &Caps) -> Result<Arc<Ring>> {
        if n < 2 {
            return Err(Error::ModulusTooSmall(n));
        }
        let card = n as usize;
        check_cap(card, caps)?;
        let elems: Vec<Value> = (0..n).map(Value::Int).collect();
        let mut add = vec![0u16; card * card];
        let mut mul = vec![0u16; card * card];
        for i in 0..card {
            for j in 0..card {
                add[i * card + j] = ((i + j) % card) as u16;
                mul[i * card + j] = ((i * j) % card) as u16;
            }
        }
        let neg = (0..card).map(|i| ((card - i) % card) as u16).collect();
        Ring::from_parts(RingKind::Zmod { n }, elems, add, mul, neg, 0, 1 % card, caps)
    }

    pub fn product(components: Vec<Arc<Ring>>, caps: &Caps) -> Result<Arc<Ring>> {
        if components.is_empty() {
            return Err(Error::EmptyProduct { min: 1 });
        }
        let card: usize = components.iter().map(|c| c.card()).product();
        check_cap(card, caps)?;
        let dims: Vec<usize> = components.iter().map(|c| c.card()).collect();
        let decode = |mut i: usize| -> Vec<usize> {
            let mut out = vec![0; dims.len()];
            for k in (0..dims.len()).rev() {
                out[k] = i % dims[k];
                i /= dims[k];
            }
            out
        };
        let encode = |coords: &[usize]| -> usize {
            coords.iter().zip(&dims).fold(0, |acc, (&c, &d)| acc * d + c)
        };
        let elems: Vec<Value> = (0..card)
            .map(|i| {
                let coords = decode(i);
                Value::Tuple(
                    coords
                        .iter()
                        .zip(&components)
                        .map(|(&c, comp)| comp.value(c).clone())
                        .collect(),
                )
            })
            .collect();
        let mut add = vec![0u16; card * card];
        let mut mul = vec![0u16; card * card];
        let mut neg = vec![0u16; card];
        for i in 0..card {
            let ci = decode(i);
            neg[i] = encode(
                &ci.iter().zip(&components).map(|(&a, c)| c.neg(a)).collect::<Vec<_>>(),
            ) as u16;
            for j in 0..card {
                let cj = decode(j);
                let sum: Vec<usize> = ci
                    .iter()
                    .zip(&cj)
                    .zip(&components)
                    .map(|((&a, &b), c)| c.add(a, b))
                    .collect();
                let prod: Vec<usize> = ci
                    .iter()
                    .zip(&cj)
                    .zip(&components)
                    .map(|((&a, &b), c)| c.mul(a, b))
                    .collect();
                add[i * card + j] = encode(&sum) as u16;
                mul[i * card + j] = encode(&prod) as u16;
            }
        }
        let zero = encode(&components.iter().map(|c| c.zero()).collect::<Vec<_>>());
        let one = encode(&components.iter().map(|c| c.one()).collect::<Vec<_>>());
        Ring::from_parts(RingKind::Product { components }, elems, add, mul, neg, zero, one, caps)
    }

    pub fn quotient(base: &Arc<Ring>, modulus: &Ideal, caps: &Caps) -> Result<Arc<Ring>> {
        if modulus.ring().as_ref() != base.as_ref() {
            return Err(Error::RingMismatch);
        }
        if modulus.set().contains(base.one()) {
            return Err(Error::QuotientByUnitIdeal);
        }
        let n = base.card();
        // Coset representative: least element of x + I in canonical order.
        let rep: Vec<usize> = (0..n)
            .map(|x| modulus.set().iter().map(|j| base.add(x, j)).min().unwrap())
            .collect();
        let classes: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
        let card = classes.len();
        check_cap(card, caps)?;
        let mut proj = vec![0u16; n];
        for x in 0..n {
            proj[x] = classes.binary_search(&rep[x]).unwrap() as u16;
        }
        let elems: Vec<Value> = classes.iter().map(|&x| base.value(x).clone()).collect();
        let mut add = vec![0u16; card * card];
        let mut mul = vec![0u16; card * card];
        for i in 0..card {
            for j in 0..card {
                add[i * card + j] = proj[base.add(classes[i], classes[j])];
                mul[i * card + j] = proj[base.mul(classes[i], classes[j])];
            }
        }
        let neg = (0..card).map(|i| proj[base.neg(classes[i])]).collect();
        let zero = proj[base.zero()] as usize;
        let one = proj[base.one()] as usize;
        let kind = RingKind::Quotient {
            base: Arc::clone(base),
            modulus: modulus.set().clone(),
            proj,
        };
        Ring::from_parts(kind, elems, add, mul, neg, zero, one, caps)
    }

    /// The idealization `R(+)M`: pairs `(a, m)` with componentwise addition
    /// and multiplication `(a,m)(b,m') = (ab, am' + bm)`.
    pub fn idealization(base: &Arc<Ring>, carrier: &Arc<Module>, caps: &Caps) -> Result<Arc<Ring>> {
        if carrier.ring().as_ref() != base.as_ref() {
            return Err(Error::RingMismatch);
        }
        let (rn, mn) = (base.card(), carrier.card());
        let card = rn * mn;
        check_cap(card, caps)?;
        let at = |i: usize| (i / mn, i % mn);
        let enc = |a: usize, m: usize| a * mn + m;
        let elems: Vec<Value> = (0..card)
            .map(|i| {
                let (a, m) = at(i);
                Value::pair(base.value(a).clone(), carrier.value(m).clone())
            })
            .collect();
        let mut add = vec![0u16; card * card];
        let mut mul = vec![0u16; card * card];
        let mut neg = vec![0u16; card];
        for i in 0..card {
            let (a, m) = at(i);
            neg[i] = enc(base.neg(a), carrier.neg(m)) as u16;
            for j in 0..card {
                let (b, mp) = at(j);
                add[i * card + j] = enc(base.add(a, b), carrier.add(m, mp)) as u16;
                mul[i * card + j] =
                    enc(base.mul(a, b), carrier.add(carrier.act(a, mp), carrier.act(b, m))) as u16;
            }
        }
        let zero = enc(base.zero(), carrier.zero());
        let one = enc(base.one(), carrier.zero());
        let kind = RingKind::Idealization {
            base: Arc::clone(base),
            carrier: Arc::clone(carrier),
        };
        Ring::from_parts(kind, elems, add, mul, neg, zero, one, caps)
    }

    /// For a quotient ring, the canonical projection of a base element.
    pub fn project(&self, base_index: usize) -> Result<usize> {
        match &self.kind {
            RingKind::Quotient { proj, .. } => Ok(proj[base_index] as usize),
            _ => Err(Error::WrongRingKind { expected: "quotient" }),
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_parts(
        kind: RingKind,
        elems: Vec<Value>,
        add: Vec<u16>,
        mul: Vec<u16>,
        neg: Vec<u16>,
        zero: usize,
        one: usize,
        caps: &Caps,
    ) -> Result<Arc<Ring>> {
        let ring = Ring { kind, elems, add, mul, neg, zero, one };
        if ring.card() < 2 || ring.zero == ring.one {
            return Err(Error::AxiomViolation("1 = 0 in constructed ring".into()));
        }
        if !ring.elems.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::AxiomViolation("element list is not canonically sorted".into()));
        }
        if ring.card() <= caps.audit {
            ring.audit()?;
        }
        Ok(Arc::new(ring))
    }

    fn audit(&self) -> Result<()> {
        let n = self.card();
        let fail = |msg: String| Err(Error::AxiomViolation(msg));
        for i in 0..n {
            if self.add(i, self.zero) != i {
                return fail(format!("{} + 0 != {}", self.value(i), self.value(i)));
            }
            if self.mul(i, self.one) != i {
                return fail(format!("{} * 1 != {}", self.value(i), self.value(i)));
            }
            if self.add(i, self.neg(i)) != self.zero {
                return fail(format!("{} + (-{}) != 0", self.value(i), self.value(i)));
            }
            for j in 0..n {
                if self.add(i, j) != self.add(j, i) {
                    return fail("addition is not commutative".into());
                }
                if self.mul(i, j) != self.mul(j, i) {
                    return fail("multiplication is not commutative".into());
                }
                for k in 0..n {
                    if self.add(self.add(i, j), k) != self.add(i, self.add(j, k)) {
                        return fail("addition is not associative".into());
                    }
                    if self.mul(self.mul(i, j), k) != self.mul(i, self.mul(j, k)) {
                        return fail("multiplication is not associative".into());
                    }
                    if self.mul(i, self.add(j, k)) != self.add(self.mul(i, j), self.mul(i, k)) {
                        return fail("multiplication does not distribute over addition".into());
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn check_cap(cardinality: usize, caps: &Caps) -> Result<()> {
    if cardinality > caps.enumeration || cardinality > u16::MAX as usize {
        return Err(Error::CapExceeded { cardinality, cap: caps.enumeration });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn zmod_4_has_expected_elements() {
        let r = Ring::zmod(4, &caps()).unwrap();
        assert_eq!(r.card(), 4);
        assert_eq!(r.value(3), &Value::Int(3));
        assert_eq!(r.add(3, 2), 1);
        assert_eq!(r.mul(2, 2), 0);
        assert_eq!(r.neg(1), 3);
    }

    #[test]
    fn zmod_rejects_tiny_moduli() {
        assert_eq!(Ring::zmod(1, &caps()).unwrap_err(), Error::ModulusTooSmall(1));
        assert_eq!(Ring::zmod(0, &caps()).unwrap_err(), Error::ModulusTooSmall(0));
    }

    #[test]
    fn product_cardinality_multiplies() {
        let a = Ring::zmod(4, &caps()).unwrap();
        let b = Ring::zmod(2, &caps()).unwrap();
        let p = Ring::product(vec![a, b], &caps()).unwrap();
        assert_eq!(p.card(), 8);
        let one = p.value(p.one()).clone();
        assert_eq!(one, Value::pair(Value::Int(1), Value::Int(1)));
    }

    #[test]
    fn units_of_small_rings() {
        let r4 = Ring::zmod(4, &caps()).unwrap();
        assert_eq!(r4.values(&r4.units()), vec![Value::Int(1), Value::Int(3)]);
        let r6 = Ring::zmod(6, &caps()).unwrap();
        assert_eq!(r6.values(&r6.units()), vec![Value::Int(1), Value::Int(5)]);
    }

    #[test]
    fn structural_equality_ignores_arcs() {
        let a = Ring::zmod(6, &caps()).unwrap();
        let b = Ring::zmod(6, &caps()).unwrap();
        assert_eq!(a.as_ref(), b.as_ref());
        let c = Ring::zmod(5, &caps()).unwrap();
        assert_ne!(a.as_ref(), c.as_ref());
    }

    #[test]
    fn cap_is_enforced() {
        let tight = Caps { enumeration: 5, audit: 5 };
        assert!(matches!(
            Ring::zmod(6, &tight).unwrap_err(),
            Error::CapExceeded { cardinality: 6, cap: 5 }
        ));
    }
}
