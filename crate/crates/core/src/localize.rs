//! Finite models of fraction rings and modules.
//!
//! `S^{-1}R` is materialized as the quotient of `R x S` by the relation
//! `(a,s) ~ (b,t) iff u(at - bs) = 0 for some u in S`, and similarly for
//! modules. Class representatives are the least pairs in lexicographic
//! order, which makes equality and serialized output deterministic.

use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ideal::MultClosedSet;
use crate::module::{Module, ModuleKind, Submodule};
use crate::ring::{Ring, RingKind};
use crate::set::ElemSet;
use crate::value::Value;

pub struct LocalizedRing {
    pub ring: Arc<Ring>,
    base: Arc<Ring>,
    set: MultClosedSet,
    /// base element index -> class index of a/1
    fraction: Vec<u16>,
}

impl LocalizedRing {
    pub fn base(&self) -> &Arc<Ring> {
        &self.base
    }

    pub fn set(&self) -> &MultClosedSet {
        &self.set
    }

    /// The canonical map `a -> a/1`.
    pub fn fraction(&self, base_index: usize) -> usize {
        self.fraction[base_index] as usize
    }

    /// Class of a general fraction `a/s`; `s` must lie in the set.
    pub fn class_of(&self, a: usize, s: usize) -> Result<usize> {
        if !self.set.contains(s) {
            return Err(Error::UnknownElement(self.base.value(s).clone()));
        }
        // a/s = (a/1) * (s/1)^{-1}
        let num = self.fraction(a);
        let den = self.fraction(s);
        let inv = (0..self.ring.card())
            .find(|&x| self.ring.mul(den, x) == self.ring.one())
            .expect("images of the set are units");
        Ok(self.ring.mul(num, inv))
    }
}

pub struct LocalizedModule {
    pub module: Arc<Module>,
    pub ring: LocalizedRing,
    base: Arc<Module>,
    /// base element index -> class index of m/1
    fraction: Vec<u16>,
}

impl LocalizedModule {
    pub fn base(&self) -> &Arc<Module> {
        &self.base
    }

    pub fn fraction(&self, base_index: usize) -> usize {
        self.fraction[base_index] as usize
    }
}

struct Classes {
    /// pair index -> class number
    class_of_pair: Vec<usize>,
    /// class number -> representative pair index
    reps: Vec<usize>,
}

/// Group `items x set` pairs under the localization relation. `pairs` are
/// indexed `item * |S| + pos`; the relation must be an equivalence, which the
/// multiplicative closure of `S` guarantees.
fn group_pairs(
    item_count: usize,
    set_members: &[usize],
    related: impl Fn(usize, usize, usize, usize) -> bool,
) -> Classes {
    let total = item_count * set_members.len();
    let mut class_of_pair = Vec::with_capacity(total);
    let mut reps: Vec<usize> = Vec::new();
    for p in 0..total {
        let (a, si) = (p / set_members.len(), p % set_members.len());
        let found = reps.iter().position(|&rep| {
            let (b, ti) = (rep / set_members.len(), rep % set_members.len());
            related(a, set_members[si], b, set_members[ti])
        });
        match found {
            Some(c) => class_of_pair.push(c),
            None => {
                class_of_pair.push(reps.len());
                reps.push(p);
            }
        }
    }
    Classes { class_of_pair, reps }
}

/// The fraction ring `S^{-1}R`.
pub fn localize_ring(base: &Arc<Ring>, set: &MultClosedSet, caps: &Caps) -> Result<LocalizedRing> {
    if set.ring().as_ref() != base.as_ref() {
        return Err(Error::RingMismatch);
    }
    let members: Vec<usize> = set.set().iter().collect();
    let sn = members.len();
    let related = |a: usize, s: usize, b: usize, t: usize| {
        let diff = base.sub(base.mul(a, t), base.mul(b, s));
        set.set().iter().any(|u| base.mul(u, diff) == base.zero())
    };
    let classes = group_pairs(base.card(), &members, related);
    let card = classes.reps.len();
    if card < 2 {
        return Err(Error::DegenerateLocalization);
    }

    let rep_pair = |c: usize| {
        let p = classes.reps[c];
        (p / sn, members[p % sn])
    };
    let class_of = |a: usize, s_pos: usize| classes.class_of_pair[a * sn + s_pos];
    let pos_of: Vec<usize> = {
        let mut v = vec![usize::MAX; base.card()];
        for (i, &s) in members.iter().enumerate() {
            v[s] = i;
        }
        v
    };

    // Representative pairs are already minimal in their class, and pair order
    // is lexicographic, so sorting class values keeps them aligned.
    let mut order: Vec<usize> = (0..card).collect();
    let value_of = |c: usize| {
        let (a, s) = rep_pair(c);
        Value::pair(base.value(a).clone(), base.value(s).clone())
    };
    order.sort_by_key(|&c| value_of(c));
    let mut rank = vec![0usize; card];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }

    let elems: Vec<Value> = order.iter().map(|&c| value_of(c)).collect();
    let mut add = vec![0u16; card * card];
    let mut mul = vec![0u16; card * card];
    let mut neg = vec![0u16; card];
    for i in 0..card {
        let (a, s) = rep_pair(order[i]);
        neg[i] = rank[class_of(base.neg(a), pos_of[s])] as u16;
        for j in 0..card {
            let (b, t) = rep_pair(order[j]);
            let st = base.mul(s, t);
            let sum_num = base.add(base.mul(a, t), base.mul(b, s));
            add[i * card + j] = rank[class_of(sum_num, pos_of[st])] as u16;
            mul[i * card + j] = rank[class_of(base.mul(a, b), pos_of[st])] as u16;
        }
    }
    let one_pos = pos_of[base.one()];
    let zero = rank[class_of(base.zero(), one_pos)];
    let one = rank[class_of(base.one(), one_pos)];
    let fraction: Vec<u16> = (0..base.card())
        .map(|a| rank[class_of(a, one_pos)] as u16)
        .collect();

    let kind = RingKind::Localized {
        base: Arc::clone(base),
        set: set.set().clone(),
        fraction: fraction.clone(),
    };
    let ring = Ring::from_parts(kind, elems, add, mul, neg, zero, one, caps)?;
    Ok(LocalizedRing { ring, base: Arc::clone(base), set: set.clone(), fraction })
}

/// The fraction module `S^{-1}M` over `S^{-1}R`.
pub fn localize_module(
    base: &Arc<Module>,
    set: &MultClosedSet,
    caps: &Caps,
) -> Result<LocalizedModule> {
    if set.ring().as_ref() != base.ring().as_ref() {
        return Err(Error::RingMismatch);
    }
    let lring = localize_ring(base.ring(), set, caps)?;
    let ring = base.ring();
    let members: Vec<usize> = set.set().iter().collect();
    let sn = members.len();
    let related = |m: usize, s: usize, mp: usize, t: usize| {
        let diff = base.add(base.act(t, m), base.neg(base.act(s, mp)));
        set.set().iter().any(|u| base.act(u, diff) == base.zero())
    };
    let classes = group_pairs(base.card(), &members, related);
    let card = classes.reps.len();

    let rep_pair = |c: usize| {
        let p = classes.reps[c];
        (p / sn, members[p % sn])
    };
    let class_of = |m: usize, s_pos: usize| classes.class_of_pair[m * sn + s_pos];
    let pos_of: Vec<usize> = {
        let mut v = vec![usize::MAX; ring.card()];
        for (i, &s) in members.iter().enumerate() {
            v[s] = i;
        }
        v
    };

    let mut order: Vec<usize> = (0..card).collect();
    let value_of = |c: usize| {
        let (m, s) = rep_pair(c);
        Value::pair(base.value(m).clone(), ring.value(s).clone())
    };
    order.sort_by_key(|&c| value_of(c));
    let mut rank = vec![0usize; card];
    for (r, &c) in order.iter().enumerate() {
        rank[c] = r;
    }

    let elems: Vec<Value> = order.iter().map(|&c| value_of(c)).collect();
    let mut add = vec![0u16; card * card];
    let mut neg = vec![0u16; card];
    for i in 0..card {
        let (m, s) = rep_pair(order[i]);
        neg[i] = rank[class_of(base.neg(m), pos_of[s])] as u16;
        for j in 0..card {
            let (mp, t) = rep_pair(order[j]);
            let st = ring.mul(s, t);
            let sum = base.add(base.act(t, m), base.act(s, mp));
            add[i * card + j] = rank[class_of(sum, pos_of[st])] as u16;
        }
    }
    // Action of a/s on m/t is am/st; localized ring elements carry their
    // representative fraction in their encoding.
    let ln = lring.ring.card();
    let mut act = vec![0u16; ln * card];
    for r in 0..ln {
        let pair = lring.ring.value(r).as_tuple().expect("fraction encoding").to_vec();
        let a = ring.index_of(&pair[0])?;
        let s = ring.index_of(&pair[1])?;
        for j in 0..card {
            let (m, t) = rep_pair(order[j]);
            let st = ring.mul(s, t);
            act[r * card + j] = rank[class_of(base.act(a, m), pos_of[st])] as u16;
        }
    }
    let one_pos = pos_of[ring.one()];
    let zero = rank[class_of(base.zero(), one_pos)];
    let fraction: Vec<u16> = (0..base.card())
        .map(|m| rank[class_of(m, one_pos)] as u16)
        .collect();

    let kind = ModuleKind::Localized {
        base: Arc::clone(base),
        set: set.set().clone(),
        fraction: fraction.clone(),
    };
    let module = Module::from_parts(
        kind,
        Arc::clone(&lring.ring),
        elems,
        add,
        neg,
        act,
        zero,
        caps,
    )?;
    Ok(LocalizedModule { module, ring: lring, base: Arc::clone(base), fraction })
}

/// `S^{-1}P = { p/s : p in P, s in S }` as a submodule of `S^{-1}M`.
pub fn localize_submodule(lm: &LocalizedModule, p: &Submodule) -> Result<Submodule> {
    if p.module().as_ref() != lm.base.as_ref() {
        return Err(Error::ModuleMismatch);
    }
    // p/s = (1/s)(p/1), and 1/s ranges over the inverses of images of S, so
    // the image of the fraction map alone does not suffice: close under the
    // localized action.
    let mut set = ElemSet::empty(lm.module.card());
    for x in p.set().iter() {
        set.insert(lm.fraction(x));
    }
    let lr = &lm.ring.ring;
    let mut closed = ElemSet::empty(lm.module.card());
    for r in 0..lr.card() {
        for m in set.iter() {
            closed.insert(lm.module.act(r, m));
        }
    }
    Submodule::validate(&lm.module, closed)
}

/// The saturation `S* = { x : x/1 is a unit of S^{-1}R }`.
pub fn saturate(set: &MultClosedSet, caps: &Caps) -> Result<MultClosedSet> {
    let base = set.ring();
    let lr = localize_ring(base, set, caps)?;
    let units = lr.ring.units();
    let sat = ElemSet::from_indices(
        base.card(),
        (0..base.card()).filter(|&x| units.contains(lr.fraction(x))),
    );
    MultClosedSet::validate(base, sat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::zmod;

    fn caps() -> Caps {
        Caps::default()
    }

    fn mset(r: &Arc<Ring>, elems: &[u64]) -> MultClosedSet {
        let vals: Vec<Value> = elems.iter().map(|&e| Value::Int(e)).collect();
        MultClosedSet::from_values(r, &vals).unwrap()
    }

    #[test]
    fn localize_zmod6_at_odds_collapses_to_two_elements() {
        let r = zmod(6);
        let lr = localize_ring(&r, &mset(&r, &[1, 3]), &caps()).unwrap();
        assert_eq!(lr.ring.card(), 2);
        // 2/1 = 0/1 because 3*2 = 0
        assert_eq!(lr.fraction(2), lr.ring.zero());
        assert_eq!(lr.fraction(1), lr.ring.one());
    }

    #[test]
    fn localize_zmod4_at_units_is_the_ring_itself() {
        let r = zmod(4);
        let lr = localize_ring(&r, &mset(&r, &[1, 3]), &caps()).unwrap();
        assert_eq!(lr.ring.card(), 4);
    }

    #[test]
    fn localize_at_one_is_an_isomorphic_copy() {
        for n in 2..=9 {
            let r = zmod(n);
            let lr = localize_ring(&r, &mset(&r, &[1]), &caps()).unwrap();
            assert_eq!(lr.ring.card(), r.card());
            // fraction map is bijective and a homomorphism
            for a in 0..r.card() {
                for b in 0..r.card() {
                    assert_eq!(
                        lr.fraction(r.add(a, b)),
                        lr.ring.add(lr.fraction(a), lr.fraction(b))
                    );
                    assert_eq!(
                        lr.fraction(r.mul(a, b)),
                        lr.ring.mul(lr.fraction(a), lr.fraction(b))
                    );
                }
            }
        }
    }

    #[test]
    fn fraction_map_is_a_ring_hom_and_sends_set_to_units() {
        for n in [4u64, 6, 8, 12] {
            let r = zmod(n);
            for s in crate::ideal::enumerate_mult_closed(&r).unwrap() {
                let lr = localize_ring(&r, &s, &caps()).unwrap();
                assert_eq!(lr.fraction(r.one()), lr.ring.one());
                assert_eq!(lr.fraction(r.zero()), lr.ring.zero());
                let units = lr.ring.units();
                for x in s.set().iter() {
                    assert!(units.contains(lr.fraction(x)));
                }
                for a in 0..r.card() {
                    for b in 0..r.card() {
                        assert_eq!(
                            lr.fraction(r.add(a, b)),
                            lr.ring.add(lr.fraction(a), lr.fraction(b))
                        );
                        assert_eq!(
                            lr.fraction(r.mul(a, b)),
                            lr.ring.mul(lr.fraction(a), lr.fraction(b))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn localized_module_of_regular_zmod6() {
        let r = zmod(6);
        let m = Module::regular(&r, &caps()).unwrap();
        let s = mset(&r, &[1, 3]);
        let lm = localize_module(&m, &s, &caps()).unwrap();
        assert_eq!(lm.module.card(), 2);

        let p0 = Submodule::from_values(&m, &[Value::Int(0)]).unwrap();
        let lp = localize_submodule(&lm, &p0).unwrap();
        assert_eq!(lp.set().len(), 1);

        let p3 = Submodule::from_values(&m, &[Value::Int(0), Value::Int(3)]).unwrap();
        let lp = localize_submodule(&lm, &p3).unwrap();
        assert_eq!(lp.set().len(), lm.module.card());
    }

    #[test]
    fn module_fraction_map_is_compatible() {
        let r = zmod(6);
        let m = Module::regular(&r, &caps()).unwrap();
        for s in crate::ideal::enumerate_mult_closed(&r).unwrap() {
            let lm = localize_module(&m, &s, &caps()).unwrap();
            for x in 0..m.card() {
                for y in 0..m.card() {
                    assert_eq!(
                        lm.fraction(m.add(x, y)),
                        lm.module.add(lm.fraction(x), lm.fraction(y))
                    );
                }
                for a in 0..r.card() {
                    assert_eq!(
                        lm.fraction(m.act(a, x)),
                        lm.module.act(lm.ring.fraction(a), lm.fraction(x))
                    );
                }
            }
        }
    }

    #[test]
    fn saturation_examples() {
        let r6 = zmod(6);
        let sat = saturate(&mset(&r6, &[1, 3]), &caps()).unwrap();
        assert_eq!(sat.values(), vec![Value::Int(1), Value::Int(3), Value::Int(5)]);

        let r4 = zmod(4);
        let sat = saturate(&mset(&r4, &[1]), &caps()).unwrap();
        assert_eq!(sat.values(), vec![Value::Int(1), Value::Int(3)]);

        // an already saturated set is a fixed point
        let units = MultClosedSet::validate(&r6, r6.units()).unwrap();
        let sat = saturate(&units, &caps()).unwrap();
        assert_eq!(sat.set(), units.set());
    }

    #[test]
    fn saturation_laws() {
        for n in [4u64, 6, 8, 9, 12] {
            let r = zmod(n);
            for s in crate::ideal::enumerate_mult_closed(&r).unwrap() {
                let sat = saturate(&s, &caps()).unwrap();
                assert!(s.set().is_subset(sat.set()));
                let sat2 = saturate(&sat, &caps()).unwrap();
                assert_eq!(sat.set(), sat2.set());

                // membership characterization: x in S* iff us = uxa for some
                // u, s in S and a in R
                for x in 0..r.card() {
                    let witness = s.set().iter().any(|u| {
                        s.set().iter().any(|sv| {
                            (0..r.card()).any(|a| r.mul(u, sv) == r.mul(r.mul(u, x), a))
                        })
                    });
                    assert_eq!(sat.contains(x), witness, "saturation mismatch at {x} in Z/{n}");
                }
            }
        }
    }
}
