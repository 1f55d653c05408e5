//! Bounded separation and counterexample search.
//!
//! Searches walk `(M, P, S)` triples in canonical order (smallest ring
//! first) and report the first instance matching the target, or that the
//! bounded space is exhausted. Findings are serialized cases that revalidate
//! under the classification predicates.

use serde::Serialize;

use crate::caps::Caps;
use crate::classify::{is_primary_submodule, is_s_primary, is_s_prime};
use crate::error::{Error, Result};
use crate::localize::{localize_module, localize_submodule};
use crate::verify::case::CaseData;
use crate::verify::families::{submodule_triples_in_order, InstanceFamily, ModuleShapes};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    /// An S-primary submodule that is not primary.
    SPrimaryNotPrimary,
    /// An S-primary submodule that is not S-prime.
    SPrimaryNotSPrime,
    /// A primary localization whose source is not S-primary.
    Converse4cFailure,
}

impl SearchTarget {
    pub fn parse(name: &str) -> Result<SearchTarget> {
        match name {
            "s-primary-not-primary" => Ok(SearchTarget::SPrimaryNotPrimary),
            "s-primary-not-s-prime" => Ok(SearchTarget::SPrimaryNotSPrime),
            "converse-4c-failure" => Ok(SearchTarget::Converse4cFailure),
            other => Err(Error::UnknownTarget(other.into())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SearchTarget::SPrimaryNotPrimary => "s-primary-not-primary",
            SearchTarget::SPrimaryNotSPrime => "s-primary-not-s-prime",
            SearchTarget::Converse4cFailure => "converse-4c-failure",
        }
    }

    pub fn all() -> &'static [&'static str] {
        &["s-primary-not-primary", "s-primary-not-s-prime", "converse-4c-failure"]
    }
}

#[derive(Debug, Serialize)]
pub struct SearchResult {
    pub target: String,
    pub found: Option<CaseData>,
    pub exhausted: bool,
    pub instances_examined: usize,
}

/// First instance matching the target within the bounded family, in
/// canonical order.
pub fn search_separation(
    target: SearchTarget,
    max_ring: usize,
    caps: &Caps,
) -> Result<SearchResult> {
    let family = InstanceFamily::new("search", max_ring, max_ring, ModuleShapes::basic());
    let triples = submodule_triples_in_order(&family, caps)?;
    let mut examined = 0;
    for (module, p, s) in triples {
        examined += 1;
        let hit = match target {
            SearchTarget::SPrimaryNotPrimary => {
                let rep = is_s_primary(&p, &s);
                rep.applicable && rep.holds && !is_primary_submodule(&p)
            }
            SearchTarget::SPrimaryNotSPrime => {
                let rep = is_s_primary(&p, &s);
                let prime_rep = is_s_prime(&p, &s);
                rep.applicable && rep.holds && !prime_rep.holds
            }
            SearchTarget::Converse4cFailure => {
                let rep = is_s_primary(&p, &s);
                if !rep.applicable || rep.holds {
                    false
                } else {
                    let lm = localize_module(&module, &s, caps)?;
                    let lp = localize_submodule(&lm, &p)?;
                    lp.set().len() < lm.module.card() && is_primary_submodule(&lp)
                }
            }
        };
        if hit {
            let case = CaseData::Submodule {
                module: module.to_expr()?,
                p: p.values(),
                s: s.values(),
            };
            return Ok(SearchResult {
                target: target.name().into(),
                found: Some(case),
                exhausted: false,
                instances_examined: examined,
            });
        }
    }
    Ok(SearchResult {
        target: target.name().into(),
        found: None,
        exhausted: true,
        instances_examined: examined,
    })
}
