//! Assembled product and idealization instances.
//!
//! Products combine per-component rings, modules, multiplicatively closed
//! sets, and submodules into the corresponding componentwise structures.
//! Idealization lifts an ideal `p` and submodule `N` with `pM` inside `N` to
//! the ideal `p(+)N` of `R(+)M`, and a multiplicatively closed set `S` to
//! `S(+)0` or `S(+)M`.

use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, MultClosedSet};
use crate::module::{Module, Submodule};
use crate::ring::{Ring, RingKind};
use crate::set::ElemSet;
use crate::value::Value;

/// One component of a product instance.
#[derive(Clone, Debug)]
pub struct Component {
    pub ring: Arc<Ring>,
    pub module: Arc<Module>,
    pub multset: MultClosedSet,
    pub submodule: Submodule,
}

/// Componentwise product of rings, modules, sets, and submodules.
#[derive(Debug)]
pub struct ProductInstance {
    pub ring: Arc<Ring>,
    pub module: Arc<Module>,
    pub multset: MultClosedSet,
    pub submodule: Submodule,
    pub components: Vec<Component>,
}

pub fn product_instance(components: Vec<Component>, caps: &Caps) -> Result<ProductInstance> {
    if components.len() < 2 {
        return Err(Error::EmptyProduct { min: 2 });
    }
    for c in &components {
        if c.module.ring().as_ref() != c.ring.as_ref()
            || c.multset.ring().as_ref() != c.ring.as_ref()
            || c.submodule.module().as_ref() != c.module.as_ref()
        {
            return Err(Error::RingMismatch);
        }
    }
    let module = Module::product(components.iter().map(|c| Arc::clone(&c.module)).collect(), caps)?;
    let ring = Arc::clone(module.ring());
    let multset = product_multset(&ring, &components.iter().map(|c| c.multset.clone()).collect::<Vec<_>>())?;
    let submodule = product_submodule(
        &module,
        &components.iter().map(|c| c.submodule.clone()).collect::<Vec<_>>(),
    )?;
    Ok(ProductInstance { ring, module, multset, submodule, components })
}

/// `S_1 x ... x S_n` inside a product ring, revalidated from scratch.
pub fn product_multset(ring: &Arc<Ring>, components: &[MultClosedSet]) -> Result<MultClosedSet> {
    let comps = match ring.kind() {
        RingKind::Product { components } => components,
        _ => return Err(Error::WrongRingKind { expected: "product" }),
    };
    if comps.len() != components.len() {
        return Err(Error::RingMismatch);
    }
    let mut set = ElemSet::empty(ring.card());
    'elems: for i in 0..ring.card() {
        let tuple = ring.value(i).as_tuple().expect("product encoding").to_vec();
        for (k, s) in components.iter().enumerate() {
            let idx = comps[k].index_of(&tuple[k])?;
            if !s.contains(idx) {
                continue 'elems;
            }
        }
        set.insert(i);
    }
    MultClosedSet::validate(ring, set)
}

/// `P_1 x ... x P_n` inside a product module, revalidated from scratch.
pub fn product_submodule(module: &Arc<Module>, components: &[Submodule]) -> Result<Submodule> {
    let comps = match module.kind() {
        crate::module::ModuleKind::Product { components } => components,
        _ => return Err(Error::Invalid("expected a product module".into())),
    };
    if comps.len() != components.len() {
        return Err(Error::ModuleMismatch);
    }
    let mut set = ElemSet::empty(module.card());
    'elems: for i in 0..module.card() {
        let tuple = module.value(i).as_tuple().expect("product encoding").to_vec();
        for (k, p) in components.iter().enumerate() {
            let idx = comps[k].index_of(&tuple[k])?;
            if !p.contains(idx) {
                continue 'elems;
            }
        }
        set.insert(i);
    }
    Submodule::validate(module, set)
}

/// `p_1 x ... x p_n` inside a product ring.
pub fn product_ideal(ring: &Arc<Ring>, components: &[Ideal]) -> Result<Ideal> {
    let comps = match ring.kind() {
        RingKind::Product { components } => components,
        _ => return Err(Error::WrongRingKind { expected: "product" }),
    };
    if comps.len() != components.len() {
        return Err(Error::RingMismatch);
    }
    let mut set = ElemSet::empty(ring.card());
    'elems: for i in 0..ring.card() {
        let tuple = ring.value(i).as_tuple().expect("product encoding").to_vec();
        for (k, p) in components.iter().enumerate() {
            let idx = comps[k].index_of(&tuple[k])?;
            if !p.contains(idx) {
                continue 'elems;
            }
        }
        set.insert(i);
    }
    Ideal::validate(ring, set)
}

/// An idealization ring with a lifted ideal and lifted set.
pub struct IdealizationInstance {
    pub ring: Arc<Ring>,
    pub lifted_ideal: Ideal,
    pub lifted_multset: MultClosedSet,
}

pub fn idealize(base: &Arc<Ring>, carrier: &Arc<Module>, caps: &Caps) -> Result<Arc<Ring>> {
    Ring::idealization(base, carrier, caps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftMode {
    /// `S(+)0 = { (s, 0) }`
    Zero,
    /// `S(+)M = { (s, m) : m in M }`
    Full,
}

fn idealization_parts(ring: &Arc<Ring>) -> Result<(Arc<Ring>, Arc<Module>)> {
    match ring.kind() {
        RingKind::Idealization { base, carrier } => Ok((Arc::clone(base), Arc::clone(carrier))),
        _ => Err(Error::WrongRingKind { expected: "idealization" }),
    }
}

/// `p(+)N = { (a, n) : a in p, n in N }`, an ideal of `R(+)M` exactly when
/// `pM` is contained in `N`.
pub fn lift_ideal(ring: &Arc<Ring>, p: &Ideal, n: &Submodule) -> Result<Ideal> {
    let (base, carrier) = idealization_parts(ring)?;
    if p.ring().as_ref() != base.as_ref() || n.module().as_ref() != carrier.as_ref() {
        return Err(Error::RingMismatch);
    }
    for a in p.set().iter() {
        for m in 0..carrier.card() {
            if !n.contains(carrier.act(a, m)) {
                return Err(Error::LiftViolation);
            }
        }
    }
    let mut set = ElemSet::empty(ring.card());
    for a in p.set().iter() {
        for m in n.set().iter() {
            let v = Value::pair(base.value(a).clone(), carrier.value(m).clone());
            set.insert(ring.index_of(&v)?);
        }
    }
    Ideal::validate(ring, set)
}

/// `S(+)0` or `S(+)M` inside `R(+)M`.
pub fn lift_multset(ring: &Arc<Ring>, s: &MultClosedSet, mode: LiftMode) -> Result<MultClosedSet> {
    let (base, carrier) = idealization_parts(ring)?;
    if s.ring().as_ref() != base.as_ref() {
        return Err(Error::RingMismatch);
    }
    let mut set = ElemSet::empty(ring.card());
    for a in s.set().iter() {
        let seconds: Vec<usize> = match mode {
            LiftMode::Zero => vec![carrier.zero()],
            LiftMode::Full => (0..carrier.card()).collect(),
        };
        for m in seconds {
            let v = Value::pair(base.value(a).clone(), carrier.value(m).clone());
            set.insert(ring.index_of(&v)?);
        }
    }
    MultClosedSet::validate(ring, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::zmod;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn idealization_of_zmod2_with_itself() {
        let r = zmod(2);
        let m = Module::cyclic_zmod(&r, 2, &caps()).unwrap();
        let ring = idealize(&r, &m, &caps()).unwrap();
        assert_eq!(ring.card(), 4);
        // (1,1)^2 = (1,0)
        let x = ring
            .index_of(&Value::pair(Value::Int(1), Value::Int(1)))
            .unwrap();
        assert_eq!(ring.mul(x, x), ring.one());
        let units = ring.units();
        assert_eq!(
            ring.values(&units),
            vec![
                Value::pair(Value::Int(1), Value::Int(0)),
                Value::pair(Value::Int(1), Value::Int(1)),
            ]
        );
    }

    #[test]
    fn lift_ideal_requires_absorption() {
        let r = zmod(4);
        let m = Module::cyclic_zmod(&r, 2, &caps()).unwrap();
        let ring = idealize(&r, &m, &caps()).unwrap();

        let p = Ideal::from_values(&r, &[Value::Int(0), Value::Int(2)]).unwrap();
        let full = Submodule::full(&m);
        let lifted = lift_ideal(&ring, &p, &full).unwrap();
        assert_eq!(
            lifted.values(),
            vec![
                Value::pair(Value::Int(0), Value::Int(0)),
                Value::pair(Value::Int(0), Value::Int(1)),
                Value::pair(Value::Int(2), Value::Int(0)),
                Value::pair(Value::Int(2), Value::Int(1)),
            ]
        );

        // p(+)0 with p = (2) is fine since 2*M = 0 in Z/2, but p = (1) is not.
        let zero_sub = Submodule::zero(&m);
        assert!(lift_ideal(&ring, &p, &zero_sub).is_ok());
        let unit = Ideal::unit(&r);
        assert_eq!(lift_ideal(&ring, &unit, &zero_sub).unwrap_err(), Error::LiftViolation);
    }

    #[test]
    fn lift_multset_modes() {
        let r = zmod(4);
        let m = Module::cyclic_zmod(&r, 2, &caps()).unwrap();
        let ring = idealize(&r, &m, &caps()).unwrap();
        let s = MultClosedSet::from_values(&r, &[Value::Int(1), Value::Int(3)]).unwrap();

        let zero_mode = lift_multset(&ring, &s, LiftMode::Zero).unwrap();
        assert_eq!(
            zero_mode.values(),
            vec![
                Value::pair(Value::Int(1), Value::Int(0)),
                Value::pair(Value::Int(3), Value::Int(0)),
            ]
        );

        let full_mode = lift_multset(&ring, &s, LiftMode::Full).unwrap();
        assert_eq!(full_mode.set().len(), 4);
    }

    #[test]
    fn product_instance_assembles_and_revalidates() {
        let r1 = zmod(4);
        let m1 = Module::regular(&r1, &caps()).unwrap();
        let s1 = MultClosedSet::from_values(&r1, &[Value::Int(1), Value::Int(3)]).unwrap();
        let p1 = Submodule::from_values(&m1, &[Value::Int(0)]).unwrap();

        let r2 = zmod(2);
        let m2 = Module::regular(&r2, &caps()).unwrap();
        let s2 = MultClosedSet::one(&r2);
        let p2 = Submodule::full(&m2);

        let inst = product_instance(
            vec![
                Component { ring: r1, module: m1, multset: s1, submodule: p1 },
                Component { ring: r2, module: m2, multset: s2, submodule: p2 },
            ],
            &caps(),
        )
        .unwrap();
        assert_eq!(inst.ring.card(), 8);
        assert_eq!(inst.module.card(), 8);
        assert_eq!(inst.multset.set().len(), 2);
        assert_eq!(inst.submodule.set().len(), 2);
    }

    #[test]
    fn mismatched_component_counts_error() {
        let r = zmod(2);
        let m = Module::regular(&r, &caps()).unwrap();
        let s = MultClosedSet::one(&r);
        let p = Submodule::full(&m);
        let err = product_instance(
            vec![Component { ring: r, module: m, multset: s, submodule: p }],
            &caps(),
        )
        .unwrap_err();
        assert_eq!(err, Error::EmptyProduct { min: 2 });
    }

    #[test]
    fn product_ring_ideals_are_products_of_component_ideals() {
        use crate::ideal::enumerate_ideals;
        for (m, n) in [(2u64, 2u64), (2, 3), (4, 2), (4, 3)] {
            let a = zmod(m);
            let b = zmod(n);
            let ring = crate::ring::Ring::product(vec![Arc::clone(&a), Arc::clone(&b)], &caps()).unwrap();
            let lattice = enumerate_ideals(&ring, &caps()).unwrap();
            let mut expected: Vec<_> = Vec::new();
            for i in enumerate_ideals(&a, &caps()).unwrap() {
                for j in enumerate_ideals(&b, &caps()).unwrap() {
                    expected.push(product_ideal(&ring, &[i.clone(), j.clone()]).unwrap());
                }
            }
            let mut expected_sets: Vec<_> = expected.iter().map(|i| i.set().clone()).collect();
            expected_sets.sort();
            assert_eq!(
                lattice.iter().map(|i| i.set().clone()).collect::<Vec<_>>(),
                expected_sets,
                "ideal lattice of Z/{m} x Z/{n} is not componentwise"
            );
        }
    }

    #[test]
    fn triple_product_of_fields() {
        let mut comps = Vec::new();
        for n in [2u64, 3, 2] {
            let r = zmod(n);
            let m = Module::regular(&r, &caps()).unwrap();
            let s = MultClosedSet::one(&r);
            let p = Submodule::from_values(&m, &[Value::Int(0)]).unwrap();
            comps.push(Component { ring: r, module: m, multset: s, submodule: p });
        }
        let inst = product_instance(comps, &caps()).unwrap();
        assert_eq!(inst.ring.card(), 12);
        assert_eq!(inst.submodule.set().len(), 1);
    }
}
