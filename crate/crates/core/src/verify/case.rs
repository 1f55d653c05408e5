//! Serializable test instances.
//!
//! Every suite failure and every search hit is reported as a [`CaseData`]
//! value: a self-contained description (construction trees plus explicit
//! element lists) that can be deserialized and re-run bit-for-bit.

use serde::{Deserialize, Serialize};

use crate::module::ModuleExpr;
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductComponent {
    pub module: ModuleExpr,
    pub p: Vec<Value>,
    pub s: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseData {
    /// One `(M, P, S)` triple.
    Submodule {
        module: ModuleExpr,
        p: Vec<Value>,
        s: Vec<Value>,
    },
    /// `(M, P, S1, S2)` with `S1` inside `S2`.
    TwoSets {
        module: ModuleExpr,
        p: Vec<Value>,
        s1: Vec<Value>,
        s2: Vec<Value>,
    },
    /// A homomorphism given by its image table, plus `(P, S)`. `preimage`
    /// selects which transfer direction the case exercises; `p` lives in the
    /// codomain for preimages and in the domain for images.
    Hom {
        domain: ModuleExpr,
        codomain: ModuleExpr,
        images: Vec<Value>,
        p: Vec<Value>,
        s: Vec<Value>,
        preimage: bool,
    },
    /// `(M, L, P, S)` for restriction and quotient transfer.
    WithSub {
        module: ModuleExpr,
        l: Vec<Value>,
        p: Vec<Value>,
        s: Vec<Value>,
    },
    /// `(M, P)` with the multiplicative sets derived from maximal ideals.
    SubmoduleNoSet { module: ModuleExpr, p: Vec<Value> },
    /// An ideal and set of the base ring of `module`, with the module as the
    /// companion structure.
    IdealWithModule {
        module: ModuleExpr,
        ideal: Vec<Value>,
        s: Vec<Value>,
    },
    /// Componentwise product data.
    Product { components: Vec<ProductComponent> },
    /// Idealization data over the carrier's base ring: ideal `p`, submodule
    /// `n` of the carrier, and set `s`.
    Idealization {
        carrier: ModuleExpr,
        ideal: Vec<Value>,
        sub: Vec<Value>,
        s: Vec<Value>,
    },
    /// A bare module.
    ModuleOnly { module: ModuleExpr },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// Hypotheses of the property were not met by this instance.
    Skip,
    Fail { detail: String },
}

impl Outcome {
    pub fn fail(detail: impl Into<String>) -> Outcome {
        Outcome::Fail { detail: detail.into() }
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail { .. })
    }

    /// Pass when the condition holds.
    pub fn check(condition: bool, detail: &str) -> Outcome {
        if condition {
            Outcome::Pass
        } else {
            Outcome::fail(detail)
        }
    }
}
