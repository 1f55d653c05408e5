//! Brute-force oracles for unit tests: definition-level subset scans,
//! independent of the production lattice and closure code paths they check.

use std::sync::Arc;

use crate::caps::Caps;
use crate::module::Module;
use crate::ring::Ring;
use crate::set::ElemSet;

pub fn zmod(n: u64) -> Arc<Ring> {
    Ring::zmod(n, &Caps::default()).unwrap()
}

/// All ideals by filtering every subset. Only usable for tiny rings.
pub fn brute_force_ideals(ring: &Arc<Ring>) -> Vec<ElemSet> {
    let n = ring.card();
    assert!(n <= 16, "oracle is exponential in the cardinality");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set = ElemSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if !set.contains(ring.zero()) {
            continue;
        }
        let add_closed = set.iter().all(|x| set.iter().all(|y| set.contains(ring.add(x, y))));
        let absorbs = set.iter().all(|x| (0..n).all(|r| set.contains(ring.mul(r, x))));
        if add_closed && absorbs {
            out.push(set);
        }
    }
    out.sort();
    out
}

/// All submodules by filtering every subset. Only usable for tiny modules.
pub fn brute_force_submodules(module: &Arc<Module>) -> Vec<ElemSet> {
    let n = module.card();
    assert!(n <= 16, "oracle is exponential in the cardinality");
    let rn = module.ring().card();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let set = ElemSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1));
        if !set.contains(module.zero()) {
            continue;
        }
        let add_closed = set.iter().all(|x| set.iter().all(|y| set.contains(module.add(x, y))));
        let act_closed = set.iter().all(|x| (0..rn).all(|r| set.contains(module.act(r, x))));
        if add_closed && act_closed {
            out.push(set);
        }
    }
    out.sort();
    out
}
