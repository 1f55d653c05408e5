//! Document execution: materialize declarations in order, then run queries.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use alg_core::classify::{classify, is_s_primary, is_s_prime, SReport};
use alg_core::module::{Module, ModuleKind, Submodule};
use alg_core::ring::Ring;
use alg_core::verify::{
    run_suite, run_suite_parallel, search_separation, InstanceFamily, SearchTarget,
};
use alg_core::{Caps, Ideal, MultClosedSet};

use crate::dsl::{Decl, Document, ModuleRhs, Query, RingRhs, Span};
use crate::report::{WireInstance, WireQuery, WireReport, WireVariants, WireVerdict};

#[derive(Debug, Clone, PartialEq)]
pub struct ExecError {
    pub span: Option<Span>,
    pub message: String,
}

impl fmt::Display for ExecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some(span) => write!(f, "{span}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

impl std::error::Error for ExecError {}

fn at(span: Span) -> impl Fn(alg_core::Error) -> ExecError {
    move |e| ExecError { span: Some(span), message: e.to_string() }
}

pub struct Execution {
    pub report: WireReport,
    pub any_suite_failure: bool,
}

#[derive(Default)]
struct Env {
    rings: HashMap<String, Arc<Ring>>,
    modules: HashMap<String, Arc<Module>>,
    sets: HashMap<String, MultClosedSet>,
    subs: HashMap<String, Submodule>,
}

pub fn execute(doc: &Document, caps: &Caps, parallel: bool) -> Result<Execution, ExecError> {
    let mut env = Env::default();
    for decl in &doc.decls {
        build_decl(decl, caps, &mut env)?;
    }
    let mut queries = Vec::new();
    let mut any_suite_failure = false;
    for query in &doc.queries {
        let wire = run_query(query, caps, &env, parallel)?;
        if let WireQuery::Suite { failures, .. } = &wire {
            any_suite_failure |= !failures.is_empty();
        }
        queries.push(wire);
    }
    Ok(Execution { report: WireReport { queries }, any_suite_failure })
}

fn build_decl(decl: &Decl, caps: &Caps, env: &mut Env) -> Result<(), ExecError> {
    let span = decl.span();
    match decl {
        Decl::Ring { name, rhs, .. } => {
            let ring = match rhs {
                RingRhs::Zmod(n) => Ring::zmod(*n, caps).map_err(at(span))?,
                RingRhs::Product(comps) => {
                    let components = comps.iter().map(|c| Arc::clone(&env.rings[c])).collect();
                    Ring::product(components, caps).map_err(at(span))?
                }
                RingRhs::Quotient(r, s) => {
                    let base = Arc::clone(&env.rings[r]);
                    let sub = &env.subs[s];
                    if !matches!(sub.module().kind(), ModuleKind::Regular)
                        || sub.module().ring().as_ref() != base.as_ref()
                    {
                        return Err(ExecError {
                            span: Some(span),
                            message: format!(
                                "`{s}` must be a submodule of `regular {r}` to serve as an ideal"
                            ),
                        });
                    }
                    let ideal = Ideal::from_values(&base, &sub.values()).map_err(at(span))?;
                    Ring::quotient(&base, &ideal, caps).map_err(at(span))?
                }
                RingRhs::Idealization(r, m) => {
                    let base = Arc::clone(&env.rings[r]);
                    let carrier = Arc::clone(&env.modules[m]);
                    if carrier.ring().as_ref() != base.as_ref() {
                        return Err(ExecError {
                            span: Some(span),
                            message: format!("module `{m}` is not a module over ring `{r}`"),
                        });
                    }
                    Ring::idealization(&base, &carrier, caps).map_err(at(span))?
                }
            };
            env.rings.insert(name.clone(), ring);
        }
        Decl::Module { name, rhs, .. } => {
            let module = match rhs {
                ModuleRhs::Regular(r) => {
                    Module::regular(&env.rings[r], caps).map_err(at(span))?
                }
                ModuleRhs::ZmodOver(d, r) => {
                    Module::cyclic_zmod(&env.rings[r], *d, caps).map_err(at(span))?
                }
                ModuleRhs::Product(comps) => {
                    let components = comps.iter().map(|c| Arc::clone(&env.modules[c])).collect();
                    Module::product(components, caps).map_err(at(span))?
                }
                ModuleRhs::DirectSum(comps) => {
                    let components = comps.iter().map(|c| Arc::clone(&env.modules[c])).collect();
                    Module::direct_sum(components, caps).map_err(at(span))?
                }
                ModuleRhs::Quotient(m, s) => {
                    let base = Arc::clone(&env.modules[m]);
                    let sub = &env.subs[s];
                    if sub.module().as_ref() != base.as_ref() {
                        return Err(ExecError {
                            span: Some(span),
                            message: format!("`{s}` is not a submodule of `{m}`"),
                        });
                    }
                    Module::quotient(&base, sub, caps).map_err(at(span))?.0
                }
            };
            env.modules.insert(name.clone(), module);
        }
        Decl::Set { name, ring, elems, .. } => {
            let set = MultClosedSet::from_values(&env.rings[ring], elems).map_err(at(span))?;
            env.sets.insert(name.clone(), set);
        }
        Decl::Sub { name, module, generated, elems, .. } => {
            let m = &env.modules[module];
            let sub = if *generated {
                Submodule::generated_from_values(m, elems).map_err(at(span))?
            } else {
                Submodule::from_values(m, elems).map_err(at(span))?
            };
            env.subs.insert(name.clone(), sub);
        }
    }
    Ok(())
}

fn instance_of(p: &Submodule, s: &MultClosedSet, span: Span) -> Result<WireInstance, ExecError> {
    Ok(WireInstance {
        ring: p.module().ring().to_expr().map_err(at(span))?,
        module: p.module().to_expr().map_err(at(span))?,
        p: p.values(),
        s: s.values(),
    })
}

fn pair<'e>(
    env: &'e Env,
    sub: &str,
    set: &str,
    span: Span,
) -> Result<(&'e Submodule, &'e MultClosedSet), ExecError> {
    let p = &env.subs[sub];
    let s = &env.sets[set];
    if p.module().ring().as_ref() != s.ring().as_ref() {
        return Err(ExecError {
            span: Some(span),
            message: format!("`{sub}` and `{set}` live over different rings"),
        });
    }
    Ok((p, s))
}

fn simple_wire(rep: &SReport) -> (bool, bool, Option<alg_core::Value>) {
    (rep.applicable, rep.holds, rep.witness.clone())
}

fn run_query(
    query: &Query,
    caps: &Caps,
    env: &Env,
    parallel: bool,
) -> Result<WireQuery, ExecError> {
    match query {
        Query::Classify { sub, set, span } => {
            let (p, s) = pair(env, sub, set, *span)?;
            let report = classify(p, s, caps).map_err(at(*span))?;
            let variants = report
                .variants
                .map(|v| WireVariants { b: v.b, c: v.c, d: v.d })
                .unwrap_or(WireVariants { b: false, c: false, d: false });
            Ok(WireQuery::Classify {
                instance: instance_of(p, s, *span)?,
                applicable: report.applicable,
                prime: report.prime,
                primary: report.primary,
                s_prime: WireVerdict {
                    holds: report.s_prime.holds,
                    witness: report.s_prime.witness,
                },
                s_primary: WireVerdict {
                    holds: report.s_primary.holds,
                    witness: report.s_primary.witness,
                },
                variants,
            })
        }
        Query::SPrimary { sub, set, span } => {
            let (p, s) = pair(env, sub, set, *span)?;
            let (applicable, holds, witness) = simple_wire(&is_s_primary(p, s));
            Ok(WireQuery::SPrimary { instance: instance_of(p, s, *span)?, applicable, holds, witness })
        }
        Query::SPrime { sub, set, span } => {
            let (p, s) = pair(env, sub, set, *span)?;
            let (applicable, holds, witness) = simple_wire(&is_s_prime(p, s));
            Ok(WireQuery::SPrime { instance: instance_of(p, s, *span)?, applicable, holds, witness })
        }
        Query::Suite { property, max_ring, max_module, span } => {
            let mut family = InstanceFamily::default_for(property);
            if let Some(n) = max_ring {
                family = family.with_max_ring(*n);
            }
            if let Some(n) = max_module {
                family = family.with_max_module(*n);
            }
            let result = if parallel {
                run_suite_parallel(property, &family, caps)
            } else {
                run_suite(property, &family, caps)
            }
            .map_err(at(*span))?;
            Ok(WireQuery::Suite {
                property: result.property,
                instances: result.instances_checked,
                skipped: result.skipped,
                failures: result.failures,
            })
        }
        Query::Search { target, max_ring, span } => {
            let target = SearchTarget::parse(target).map_err(at(*span))?;
            let result =
                search_separation(target, max_ring.unwrap_or(8), caps).map_err(at(*span))?;
            Ok(WireQuery::Search {
                target: result.target,
                examined: result.instances_examined,
                found: result.found,
                exhausted: result.exhausted,
            })
        }
    }
}
