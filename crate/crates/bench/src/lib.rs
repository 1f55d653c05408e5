//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use alg_core::{Caps, Module, MultClosedSet, Ring, Submodule, Value};

pub fn caps() -> Caps {
    Caps::default()
}

/// `(0)` in `Z/8` over itself with the odd residues.
pub fn regular_fixture(n: u64) -> (Arc<Module>, Submodule, MultClosedSet) {
    let caps = caps();
    let ring = Ring::zmod(n, &caps).unwrap();
    let module = Module::regular(&ring, &caps).unwrap();
    let p = Submodule::zero(&module);
    let odds: Vec<Value> = (1..n).step_by(2).map(Value::Int).collect();
    let s = MultClosedSet::from_values(&ring, &odds).unwrap();
    (module, p, s)
}

/// `(Z/2)^3` as a direct sum over `Z/2`; its lattice has 16 submodules.
pub fn cube_fixture() -> Arc<Module> {
    let caps = caps();
    let ring = Ring::zmod(2, &caps).unwrap();
    let reg = Module::regular(&ring, &caps).unwrap();
    Module::direct_sum(vec![reg.clone(), reg.clone(), reg], &caps).unwrap()
}
