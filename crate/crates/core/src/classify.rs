//! Submodule classification with witness extraction.
//!
//! For a submodule `P` of `M` over `R` and a multiplicatively closed set `S`:
//!
//! * `P` is *prime* when it is proper and `rm in P` forces `r in (P:M)` or
//!   `m in P`.
//! * `P` is *primary* when it is proper and `rm in P` forces `m in P` or
//!   `r in sqrt((P:M))`.
//! * `P` is *S-prime* / *S-primary* when a single `s in S` uniformly repairs
//!   the respective implication (`sr in (P:M)` resp. `sr in sqrt((P:M))`, or
//!   `sm in P`), subject to `(P:M)` and `S` being disjoint.
//!
//! Witnesses are always the canonically least element of `S` that works, so
//! reports are deterministic. When the disjointness precondition fails the
//! verdict is "not applicable" rather than an error, carrying the least
//! element of the overlap.

use std::sync::Arc;

use serde::Serialize;

use crate::caps::Caps;
use crate::error::Result;
use crate::ideal::{enumerate_ideals, is_prime_ideal_set, Ideal, MultClosedSet};
use crate::module::{enumerate_submodules, is_prime_set, Module, Submodule};
use crate::set::ElemSet;
use crate::value::Value;

/// Verdict of one S-parameterized predicate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SReport {
    pub applicable: bool,
    /// Least element of the disqualifying overlap when not applicable.
    pub blocker: Option<Value>,
    pub holds: bool,
    pub witness: Option<Value>,
}

impl SReport {
    fn not_applicable(blocker: Value) -> SReport {
        SReport { applicable: false, blocker: Some(blocker), holds: false, witness: None }
    }

    fn verdict(witness: Option<Value>) -> SReport {
        SReport { applicable: true, blocker: None, holds: witness.is_some(), witness }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct VariantVerdicts {
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

/// `(P :_R M)` as an ideal.
pub fn colon_in_ring(p: &Submodule) -> Ideal {
    p.colon_by(&Submodule::full(p.module()))
}

pub fn is_prime_submodule(p: &Submodule) -> bool {
    is_prime_set(p.module(), p.set())
}

pub fn is_primary_submodule(p: &Submodule) -> bool {
    if !p.is_proper() {
        return false;
    }
    let module = p.module();
    let ring = module.ring();
    let radical = colon_in_ring(p).radical();
    for r in 0..ring.card() {
        if radical.contains(r) {
            continue;
        }
        for m in 0..module.card() {
            if p.contains(module.act(r, m)) && !p.contains(m) {
                return false;
            }
        }
    }
    true
}

fn s_membership_report(p: &Submodule, s: &MultClosedSet, target: &ElemSet, colon: &Ideal) -> SReport {
    let module = p.module();
    let ring = module.ring();
    if let Some(x) = colon.set().first_common(s.set()) {
        return SReport::not_applicable(ring.value(x).clone());
    }
    'candidates: for cand in s.set().iter() {
        for r in 0..ring.card() {
            let sr_ok = target.contains(ring.mul(cand, r));
            for m in 0..module.card() {
                if p.contains(module.act(r, m))
                    && !sr_ok
                    && !p.contains(module.act(cand, m))
                {
                    continue 'candidates;
                }
            }
        }
        return SReport::verdict(Some(ring.value(cand).clone()));
    }
    SReport::verdict(None)
}

/// S-prime: some `s in S` has `rm in P => sr in (P:M) or sm in P`.
pub fn is_s_prime(p: &Submodule, s: &MultClosedSet) -> SReport {
    let colon = colon_in_ring(p);
    s_membership_report(p, s, &colon.set().clone(), &colon)
}

/// S-primary: some `s in S` has `rm in P => sr in sqrt((P:M)) or sm in P`.
pub fn is_s_primary(p: &Submodule, s: &MultClosedSet) -> SReport {
    let colon = colon_in_ring(p);
    let radical = colon.radical();
    s_membership_report(p, s, radical.set(), &colon)
}

/// The three reformulations of the S-primary condition, each decided
/// independently:
///
/// * (b) some `s` makes every scalar act injectively on `s(M/P)` or
///   nilpotently on `M/P`;
/// * (c) some `s` repairs `rN included in P` for every submodule `N`;
/// * (d) some `s` repairs `JN included in P` for every ideal `J` and
///   submodule `N`.
///
/// Returns `None` when the disjointness precondition fails.
pub fn s_primary_variants(
    p: &Submodule,
    s: &MultClosedSet,
    caps: &Caps,
) -> Result<Option<VariantVerdicts>> {
    let module = p.module();
    let ring = module.ring();
    let colon = colon_in_ring(p);
    if colon.set().intersects(s.set()) {
        return Ok(None);
    }
    let radical = colon.radical();
    let (quotient, _) = Module::quotient(module, p, caps)?;
    let qn = quotient.card();

    // (b): injective on s(M/P), or (rs)^t kills M/P for some t <= |M|.
    let b = s.set().iter().any(|cand| {
        let s_image: Vec<usize> = {
            let set = ElemSet::from_indices(qn, (0..qn).map(|q| quotient.act(cand, q)));
            set.iter().collect()
        };
        (0..ring.card()).all(|r| {
            let injective = {
                let mut seen = ElemSet::empty(qn);
                let mut distinct = 0;
                for &x in &s_image {
                    let y = quotient.act(r, x);
                    if !seen.contains(y) {
                        seen.insert(y);
                        distinct += 1;
                    }
                }
                distinct == s_image.len()
            };
            if injective {
                return true;
            }
            let a = ring.mul(r, cand);
            let mut power = a;
            for _ in 0..module.card() {
                if (0..qn).all(|q| quotient.act(power, q) == quotient.zero()) {
                    return true;
                }
                power = ring.mul(power, a);
            }
            false
        })
    });

    let submodules = enumerate_submodules(module, caps)?;
    let carries = |scalar: usize, n: &Submodule| n.set().iter().all(|x| p.contains(module.act(scalar, x)));

    // (c): quantify over submodules N and scalars r.
    let c = s.set().iter().any(|cand| {
        submodules.iter().all(|n| {
            (0..ring.card()).all(|r| {
                if !carries(r, n) {
                    return true;
                }
                radical.contains(ring.mul(cand, r)) || carries(cand, n)
            })
        })
    });

    // (d): quantify over ideals J and submodules N.
    let ideals = enumerate_ideals(ring, caps)?;
    let d = s.set().iter().any(|cand| {
        submodules.iter().all(|n| {
            ideals.iter().all(|j| {
                let jn_in_p = j.set().iter().all(|a| carries(a, n));
                if !jn_in_p {
                    return true;
                }
                let sj_in_rad = j.set().iter().all(|a| radical.contains(ring.mul(cand, a)));
                sj_in_rad || carries(cand, n)
            })
        })
    });

    Ok(Some(VariantVerdicts { b, c, d }))
}

/// Some `s in S` makes `(P :_M s)` a primary submodule.
pub fn primary_colon_witness(p: &Submodule, s: &MultClosedSet) -> SReport {
    let module = p.module();
    let ring = module.ring();
    let colon = colon_in_ring(p);
    if let Some(x) = colon.set().first_common(s.set()) {
        return SReport::not_applicable(ring.value(x).clone());
    }
    for cand in s.set().iter() {
        if is_primary_submodule(&p.colon_element(cand)) {
            return SReport::verdict(Some(ring.value(cand).clone()));
        }
    }
    SReport::verdict(None)
}

/// S-torsion-free: some `s in S` has `rm = 0 => sm = 0 or sr = 0`.
pub fn is_s_torsion_free(module: &Arc<Module>, s: &MultClosedSet) -> SReport {
    torsion_report(module, s, false)
}

/// Quasi S-torsion-free: some `s in S` has `rm = 0 => sm = 0 or (sr)^t = 0`.
pub fn is_quasi_s_torsion_free(module: &Arc<Module>, s: &MultClosedSet) -> SReport {
    torsion_report(module, s, true)
}

fn torsion_report(module: &Arc<Module>, s: &MultClosedSet, quasi: bool) -> SReport {
    let ring = module.ring();
    let ann = crate::module::annihilator(module);
    if let Some(x) = ann.set().first_common(s.set()) {
        return SReport::not_applicable(ring.value(x).clone());
    }
    let nilpotents = Ideal::zero(ring).radical();
    'candidates: for cand in s.set().iter() {
        for r in 0..ring.card() {
            let sr = ring.mul(cand, r);
            let sr_ok = if quasi { nilpotents.contains(sr) } else { sr == ring.zero() };
            if sr_ok {
                continue;
            }
            for m in 0..module.card() {
                if module.act(r, m) == module.zero()
                    && module.act(cand, m) != module.zero()
                {
                    continue 'candidates;
                }
            }
        }
        return SReport::verdict(Some(ring.value(cand).clone()));
    }
    SReport::verdict(None)
}

/// Classical torsion-freeness: `rm = 0` forces `r = 0` or `m = 0`.
pub fn is_torsion_free(module: &Arc<Module>) -> bool {
    let ring = module.ring();
    (0..ring.card()).all(|r| {
        r == ring.zero()
            || (0..module.card())
                .all(|m| module.act(r, m) != module.zero() || m == module.zero())
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SVerdict {
    pub holds: bool,
    pub witness: Option<Value>,
}

impl From<&SReport> for SVerdict {
    fn from(r: &SReport) -> SVerdict {
        SVerdict { holds: r.holds, witness: r.witness.clone() }
    }
}

/// The full verdict vector for one `(P, S)` instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassificationReport {
    pub applicable: bool,
    pub blocker: Option<Value>,
    pub prime: bool,
    pub primary: bool,
    pub s_prime: SVerdict,
    pub s_primary: SVerdict,
    pub variants: Option<VariantVerdicts>,
}

pub fn classify(p: &Submodule, s: &MultClosedSet, caps: &Caps) -> Result<ClassificationReport> {
    let s_prime = is_s_prime(p, s);
    let s_primary = is_s_primary(p, s);
    let variants = match s_primary_variants(p, s, caps) {
        Ok(v) => v,
        Err(crate::error::Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(ClassificationReport {
        applicable: s_primary.applicable,
        blocker: s_primary.blocker.clone(),
        prime: is_prime_submodule(p),
        primary: is_primary_submodule(p),
        s_prime: (&s_prime).into(),
        s_primary: (&s_primary).into(),
        variants,
    })
}

pub fn is_prime_ideal(i: &Ideal) -> bool {
    i.is_proper() && is_prime_ideal_set(i.ring(), i.set())
}

pub fn is_primary_ideal(i: &Ideal) -> bool {
    if !i.is_proper() {
        return false;
    }
    let ring = i.ring();
    let radical = i.radical();
    for a in 0..ring.card() {
        if radical.contains(a) {
            continue;
        }
        for b in 0..ring.card() {
            if i.contains(ring.mul(a, b)) && !i.contains(b) {
                return false;
            }
        }
    }
    true
}

fn ideal_s_report(i: &Ideal, s: &MultClosedSet, target: &ElemSet) -> SReport {
    let ring = i.ring();
    if let Some(x) = i.set().first_common(s.set()) {
        return SReport::not_applicable(ring.value(x).clone());
    }
    'candidates: for cand in s.set().iter() {
        for a in 0..ring.card() {
            let sa_ok = target.contains(ring.mul(cand, a));
            if sa_ok {
                continue;
            }
            for b in 0..ring.card() {
                if i.contains(ring.mul(a, b)) && !i.contains(ring.mul(cand, b)) {
                    continue 'candidates;
                }
            }
        }
        return SReport::verdict(Some(ring.value(cand).clone()));
    }
    SReport::verdict(None)
}

/// An ideal is S-primary when it is S-primary as a submodule of the ring
/// viewed as a module over itself; `(I :_R R) = I` makes this the direct
/// two-scalar condition.
pub fn is_s_primary_ideal(i: &Ideal, s: &MultClosedSet) -> SReport {
    let radical = i.radical();
    ideal_s_report(i, s, radical.set())
}

pub fn is_s_prime_ideal(i: &Ideal, s: &MultClosedSet) -> SReport {
    ideal_s_report(i, s, i.set())
}
