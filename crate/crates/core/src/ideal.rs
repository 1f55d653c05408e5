//! Ideals, the ideal lattice, and multiplicatively closed subsets.

use std::collections::HashSet;
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, MultClosedError, Result};
use crate::ring::Ring;
use crate::set::ElemSet;
use crate::value::Value;

/// An ideal given by its full element set, validated at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    set: ElemSet,
}

impl Ideal {
    pub fn validate(ring: &Arc<Ring>, set: ElemSet) -> Result<Ideal> {
        let fail = |reason: String| Err(Error::NotAnIdeal { reason });
        if !set.contains(ring.zero()) {
            return fail("0 is missing".into());
        }
        for x in set.iter() {
            if !set.contains(ring.neg(x)) {
                return fail(format!("-{} is missing", ring.value(x)));
            }
            for y in set.iter() {
                if !set.contains(ring.add(x, y)) {
                    return fail(format!(
                        "{} + {} escapes the set",
                        ring.value(x),
                        ring.value(y)
                    ));
                }
            }
            for r in 0..ring.card() {
                if !set.contains(ring.mul(r, x)) {
                    return fail(format!(
                        "{} * {} escapes the set",
                        ring.value(r),
                        ring.value(x)
                    ));
                }
            }
        }
        Ok(Ideal { ring: Arc::clone(ring), set })
    }

    pub fn from_values(ring: &Arc<Ring>, values: &[Value]) -> Result<Ideal> {
        Ideal::validate(ring, ring.indices_of(values)?)
    }

    /// For sets that are ideals by construction (colon ideals and the like).
    pub(crate) fn unchecked(ring: &Arc<Ring>, set: ElemSet) -> Ideal {
        debug_assert!(Ideal::validate(ring, set.clone()).is_ok());
        Ideal { ring: Arc::clone(ring), set }
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        let mut set = ElemSet::empty(ring.card());
        set.insert(ring.zero());
        Ideal { ring: Arc::clone(ring), set }
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Ideal { ring: Arc::clone(ring), set: ElemSet::full(ring.card()) }
    }

    pub fn principal(ring: &Arc<Ring>, x: usize) -> Ideal {
        let set = ElemSet::from_indices(ring.card(), (0..ring.card()).map(|r| ring.mul(r, x)));
        Ideal { ring: Arc::clone(ring), set }
    }

    /// Smallest ideal containing the generators.
    pub fn generated(ring: &Arc<Ring>, gens: &ElemSet) -> Ideal {
        let mut set = ElemSet::empty(ring.card());
        set.insert(ring.zero());
        for g in gens.iter() {
            for r in 0..ring.card() {
                set.insert(ring.mul(r, g));
            }
        }
        additive_closure(ring.card(), |i, j| ring.add(i, j), &mut set);
        Ideal { ring: Arc::clone(ring), set }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    pub fn is_proper(&self) -> bool {
        !self.set.contains(self.ring.one())
    }

    pub fn values(&self) -> Vec<Value> {
        self.ring.values(&self.set)
    }

    /// `I + J = { x + y }`; already an ideal, no extra closure needed.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut set = ElemSet::empty(self.ring.card());
        for x in self.set.iter() {
            for y in other.set.iter() {
                set.insert(self.ring.add(x, y));
            }
        }
        Ideal { ring: Arc::clone(&self.ring), set }
    }

    /// `IJ`: the additive closure of pairwise products.
    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut set = ElemSet::empty(self.ring.card());
        set.insert(self.ring.zero());
        for x in self.set.iter() {
            for y in other.set.iter() {
                set.insert(self.ring.mul(x, y));
            }
        }
        additive_closure(self.ring.card(), |i, j| self.ring.add(i, j), &mut set);
        Ideal { ring: Arc::clone(&self.ring), set }
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal { ring: Arc::clone(&self.ring), set: self.set.intersection(&other.set) }
    }

    /// `sqrt(I) = { r : r^t in I for some t }`. Powers of an element repeat
    /// within `|R|` steps, so the exponent search is bounded by the
    /// cardinality.
    pub fn radical(&self) -> Ideal {
        let n = self.ring.card();
        let mut set = ElemSet::empty(n);
        for r in 0..n {
            let mut p = r;
            for _ in 0..n {
                if self.set.contains(p) {
                    set.insert(r);
                    break;
                }
                p = self.ring.mul(p, r);
            }
        }
        Ideal { ring: Arc::clone(&self.ring), set }
    }

    /// `(I : s) = { r : rs in I }`.
    pub fn colon_element(&self, s: usize) -> Ideal {
        let n = self.ring.card();
        let set = ElemSet::from_indices(n, (0..n).filter(|&r| self.set.contains(self.ring.mul(r, s))));
        Ideal { ring: Arc::clone(&self.ring), set }
    }
}

pub(crate) fn additive_closure(
    card: usize,
    add: impl Fn(usize, usize) -> usize,
    set: &mut ElemSet,
) {
    loop {
        let mut grew = false;
        let members: Vec<usize> = set.iter().collect();
        for &x in &members {
            for &y in &members {
                let s = add(x, y);
                if !set.contains(s) {
                    set.insert(s);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
        let _ = card;
    }
}

/// The complete ideal lattice, as the closure of principal ideals under
/// pairwise sums. Results are duplicate-free in canonical order.
pub fn enumerate_ideals(ring: &Arc<Ring>, caps: &Caps) -> Result<Vec<Ideal>> {
    if ring.card() > caps.enumeration {
        return Err(Error::CapExceeded { cardinality: ring.card(), cap: caps.enumeration });
    }
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut lattice: Vec<ElemSet> = Vec::new();
    for x in 0..ring.card() {
        let p = Ideal::principal(ring, x);
        if seen.insert(p.set.clone()) {
            lattice.push(p.set);
        }
    }
    loop {
        let mut fresh = Vec::new();
        for a in &lattice {
            for b in &lattice {
                let mut sum = ElemSet::empty(ring.card());
                for x in a.iter() {
                    for y in b.iter() {
                        sum.insert(ring.add(x, y));
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
        .map(|set| Ideal { ring: Arc::clone(ring), set })
        .collect())
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub primes: Vec<Ideal>,
    pub maximals: Vec<Ideal>,
    pub jacobson: Ideal,
}

/// Prime and maximal ideals plus the Jacobson radical (the intersection of
/// the maximal ideals).
pub fn ideal_spectrum(ring: &Arc<Ring>, caps: &Caps) -> Result<Spectrum> {
    let lattice = enumerate_ideals(ring, caps)?;
    let primes: Vec<Ideal> = lattice
        .iter()
        .filter(|i| i.is_proper() && is_prime_ideal_set(ring, i.set()))
        .cloned()
        .collect();
    let maximals: Vec<Ideal> = lattice
        .iter()
        .filter(|i| {
            i.is_proper()
                && !lattice.iter().any(|j| {
                    j.is_proper() && j.set() != i.set() && i.set().is_subset(j.set())
                })
        })
        .cloned()
        .collect();
    let mut jac = ElemSet::full(ring.card());
    for m in &maximals {
        jac = jac.intersection(m.set());
    }
    Ok(Spectrum { primes, maximals, jacobson: Ideal { ring: Arc::clone(ring), set: jac } })
}

pub(crate) fn is_prime_ideal_set(ring: &Ring, set: &ElemSet) -> bool {
    for a in 0..ring.card() {
        for b in 0..ring.card() {
            if set.contains(ring.mul(a, b)) && !set.contains(a) && !set.contains(b) {
                return false;
            }
        }
    }
    true
}

/// A multiplicatively closed subset: contains 1, omits 0, closed under
/// products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultClosedSet {
    ring: Arc<Ring>,
    set: ElemSet,
}

impl MultClosedSet {
    pub fn validate(ring: &Arc<Ring>, set: ElemSet) -> Result<MultClosedSet> {
        if !set.contains(ring.one()) {
            return Err(MultClosedError::MissingOne.into());
        }
        if set.contains(ring.zero()) {
            return Err(MultClosedError::ContainsZero.into());
        }
        for x in set.iter() {
            for y in set.iter() {
                let p = ring.mul(x, y);
                if !set.contains(p) {
                    return Err(MultClosedError::NotClosed {
                        x: ring.value(x).clone(),
                        y: ring.value(y).clone(),
                        product: ring.value(p).clone(),
                    }
                    .into());
                }
            }
        }
        Ok(MultClosedSet { ring: Arc::clone(ring), set })
    }

    pub fn from_values(ring: &Arc<Ring>, values: &[Value]) -> Result<MultClosedSet> {
        MultClosedSet::validate(ring, ring.indices_of(values)?)
    }

    /// The trivial set `{1}`.
    pub fn one(ring: &Arc<Ring>) -> MultClosedSet {
        let mut set = ElemSet::empty(ring.card());
        set.insert(ring.one());
        MultClosedSet { ring: Arc::clone(ring), set }
    }

    /// The complement of a prime ideal.
    pub fn complement_of_prime(prime: &Ideal) -> Result<MultClosedSet> {
        let ring = prime.ring();
        let set = ElemSet::from_indices(
            ring.card(),
            (0..ring.card()).filter(|&i| !prime.contains(i)),
        );
        MultClosedSet::validate(ring, set)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn contains(&self, i: usize) -> bool {
        self.set.contains(i)
    }

    pub fn values(&self) -> Vec<Value> {
        self.ring.values(&self.set)
    }

    pub fn is_subset_of(&self, other: &MultClosedSet) -> bool {
        self.set.is_subset(&other.set)
    }
}

/// Every multiplicatively closed subset of the ring, in canonical order.
/// Enumerates by filtering subsets, so it is limited to small rings.
pub fn enumerate_mult_closed(ring: &Arc<Ring>) -> Result<Vec<MultClosedSet>> {
    let n = ring.card();
    if n > 16 {
        return Err(Error::CapExceeded { cardinality: n, cap: 16 });
    }
    let zero = ring.zero();
    let one = ring.one();
    let free: Vec<usize> = (0..n).filter(|&i| i != zero && i != one).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << free.len()) {
        let mut set = ElemSet::empty(n);
        set.insert(one);
        for (bit, &idx) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                set.insert(idx);
            }
        }
        let closed = set
            .iter()
            .all(|x| set.iter().all(|y| set.contains(ring.mul(x, y))));
        if closed {
            out.push(set);
        }
    }
    out.sort();
    Ok(out
        .into_iter()
        .map(|set| MultClosedSet { ring: Arc::clone(ring), set })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{brute_force_ideals, zmod};

    #[test]
    fn ideal_lattice_of_zmod6() {
        let r = zmod(6);
        let ideals = enumerate_ideals(&r, &Caps::default()).unwrap();
        assert_eq!(ideals.len(), 4);
        let sets: Vec<Vec<Value>> = ideals.iter().map(|i| i.values()).collect();
        assert!(sets.contains(&vec![Value::Int(0)]));
        assert!(sets.contains(&vec![Value::Int(0), Value::Int(2), Value::Int(4)]));
        assert!(sets.contains(&vec![Value::Int(0), Value::Int(3)]));
        assert!(sets.contains(&(0..6).map(Value::Int).collect::<Vec<_>>()));
    }

    #[test]
    fn lattice_matches_brute_force_oracle() {
        for n in 2..=12 {
            let r = zmod(n);
            let fast = enumerate_ideals(&r, &Caps::default()).unwrap();
            let slow = brute_force_ideals(&r);
            assert_eq!(
                fast.iter().map(|i| i.set().clone()).collect::<Vec<_>>(),
                slow,
                "lattice mismatch for Z/{n}"
            );
        }
    }

    #[test]
    fn field_has_two_ideals() {
        let r = zmod(7);
        assert_eq!(enumerate_ideals(&r, &Caps::default()).unwrap().len(), 2);
    }

    #[test]
    fn spectrum_of_zmod6() {
        let r = zmod(6);
        let spec = ideal_spectrum(&r, &Caps::default()).unwrap();
        assert_eq!(spec.primes.len(), 2);
        assert_eq!(spec.maximals.len(), 2);
        assert_eq!(spec.jacobson.values(), vec![Value::Int(0)]);
        // every maximal is prime
        for m in &spec.maximals {
            assert!(spec.primes.iter().any(|p| p.set() == m.set()));
        }
    }

    #[test]
    fn jacobson_recomputes_from_the_maximals() {
        for n in [4u64, 6, 8, 9, 12] {
            let r = zmod(n);
            let spec = ideal_spectrum(&r, &Caps::default()).unwrap();
            let mut recomputed = ElemSet::full(r.card());
            for m in &spec.maximals {
                recomputed = recomputed.intersection(m.set());
            }
            assert_eq!(spec.jacobson.set(), &recomputed);
        }
    }

    #[test]
    fn spectrum_of_zmod4_and_zmod5() {
        let r4 = zmod(4);
        let s4 = ideal_spectrum(&r4, &Caps::default()).unwrap();
        assert_eq!(s4.primes.len(), 1);
        assert_eq!(s4.jacobson.values(), vec![Value::Int(0), Value::Int(2)]);

        let r5 = zmod(5);
        let s5 = ideal_spectrum(&r5, &Caps::default()).unwrap();
        assert_eq!(s5.primes.len(), 1);
        assert_eq!(s5.primes[0].values(), vec![Value::Int(0)]);
        assert_eq!(s5.jacobson.values(), vec![Value::Int(0)]);
    }

    #[test]
    fn radical_examples() {
        let r4 = zmod(4);
        let z = Ideal::zero(&r4);
        assert_eq!(z.radical().values(), vec![Value::Int(0), Value::Int(2)]);

        let r6 = zmod(6);
        assert_eq!(Ideal::zero(&r6).radical().values(), vec![Value::Int(0)]);
        let unit = Ideal::unit(&r6);
        assert_eq!(unit.radical().set(), unit.set());
    }

    #[test]
    fn radical_laws() {
        for n in 2..=10 {
            let r = zmod(n);
            for i in enumerate_ideals(&r, &Caps::default()).unwrap() {
                let rad = i.radical();
                assert!(i.set().is_subset(rad.set()));
                assert_eq!(rad.radical().set(), rad.set());
                for j in enumerate_ideals(&r, &Caps::default()).unwrap() {
                    if i.set().is_subset(j.set()) {
                        assert!(rad.set().is_subset(j.radical().set()));
                    }
                }
            }
        }
    }

    #[test]
    fn mult_closed_validation() {
        let r4 = zmod(4);
        assert!(MultClosedSet::from_values(&r4, &[Value::Int(1), Value::Int(3)]).is_ok());

        let r6 = zmod(6);
        assert!(MultClosedSet::from_values(&r6, &[Value::Int(1), Value::Int(3)]).is_ok());
        let err = MultClosedSet::from_values(&r6, &[Value::Int(1), Value::Int(2)]).unwrap_err();
        assert_eq!(
            err,
            Error::NotMultClosed(MultClosedError::NotClosed {
                x: Value::Int(2),
                y: Value::Int(2),
                product: Value::Int(4),
            })
        );
        let err = MultClosedSet::from_values(&r6, &[Value::Int(0), Value::Int(1)]).unwrap_err();
        assert_eq!(err, Error::NotMultClosed(MultClosedError::ContainsZero));
        let err = MultClosedSet::from_values(&r6, &[Value::Int(5)]).unwrap_err();
        assert_eq!(err, Error::NotMultClosed(MultClosedError::MissingOne));
    }

    #[test]
    fn mult_closed_enumeration_of_zmod6() {
        let r = zmod(6);
        let sets = enumerate_mult_closed(&r).unwrap();
        let as_values: Vec<Vec<u64>> = sets
            .iter()
            .map(|s| s.values().iter().map(|v| v.as_int().unwrap()).collect())
            .collect();
        assert_eq!(
            as_values,
            vec![
                vec![1],
                vec![1, 3],
                vec![1, 4],
                vec![1, 5],
                vec![1, 2, 4],
                vec![1, 3, 5],
                vec![1, 2, 4, 5],
            ]
        );
    }

    #[test]
    fn complement_of_prime_is_mult_closed() {
        let r = zmod(6);
        let spec = ideal_spectrum(&r, &Caps::default()).unwrap();
        for p in &spec.primes {
            let s = MultClosedSet::complement_of_prime(p).unwrap();
            assert!(!s.contains(r.zero()));
        }
    }
}
