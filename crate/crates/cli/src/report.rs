//! The wire format.
//!
//! JSON output is deterministic byte for byte for a fixed input: structs
//! serialize their fields in declaration order, element lists are canonical,
//! and witnesses are canonical element encodings. Timing never enters the
//! JSON.

use alg_core::module::ModuleExpr;
use alg_core::ring::RingExpr;
use alg_core::verify::CaseData;
use alg_core::Value;
use serde::Serialize;

#[derive(Serialize, Debug)]
pub struct WireReport {
    pub queries: Vec<WireQuery>,
}

#[derive(Serialize, Debug)]
pub struct WireInstance {
    pub ring: RingExpr,
    pub module: ModuleExpr,
    pub p: Vec<Value>,
    pub s: Vec<Value>,
}

#[derive(Serialize, Debug)]
pub struct WireVerdict {
    pub holds: bool,
    pub witness: Option<Value>,
}

#[derive(Serialize, Debug)]
pub struct WireVariants {
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

#[derive(Serialize, Debug)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WireQuery {
    Classify {
        instance: WireInstance,
        applicable: bool,
        prime: bool,
        primary: bool,
        s_prime: WireVerdict,
        s_primary: WireVerdict,
        variants: WireVariants,
    },
    SPrimary {
        instance: WireInstance,
        applicable: bool,
        holds: bool,
        witness: Option<Value>,
    },
    SPrime {
        instance: WireInstance,
        applicable: bool,
        holds: bool,
        witness: Option<Value>,
    },
    Suite {
        property: String,
        instances: usize,
        skipped: usize,
        failures: Vec<CaseData>,
    },
    Search {
        target: String,
        examined: usize,
        found: Option<CaseData>,
        exhausted: bool,
    },
}

fn fmt_values(vals: &[Value]) -> String {
    let items: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn fmt_verdict(v: &WireVerdict) -> String {
    match (&v.holds, &v.witness) {
        (true, Some(w)) => format!("true (witness {w})"),
        (true, None) => "true".into(),
        (false, _) => "false".into(),
    }
}

/// Human-readable rendering of one query result.
pub fn render_text(query: &WireQuery) -> String {
    match query {
        WireQuery::Classify { instance, applicable, prime, primary, s_prime, s_primary, variants } => {
            let mut out = format!(
                "classify P={} S={}\n",
                fmt_values(&instance.p),
                fmt_values(&instance.s)
            );
            if !applicable {
                out.push_str("  not applicable: (P:M) meets S\n");
            }
            out.push_str(&format!(
                "  prime={prime} primary={primary} s_prime={} s_primary={}\n",
                fmt_verdict(s_prime),
                fmt_verdict(s_primary)
            ));
            out.push_str(&format!(
                "  formulations: b={} c={} d={}",
                variants.b, variants.c, variants.d
            ));
            out
        }
        WireQuery::SPrimary { instance, applicable, holds, witness } => {
            format!(
                "s_primary P={} S={}: {}",
                fmt_values(&instance.p),
                fmt_values(&instance.s),
                fmt_verdict(&WireVerdict { holds: *holds, witness: witness.clone() })
                    + if *applicable { "" } else { " (not applicable)" }
            )
        }
        WireQuery::SPrime { instance, applicable, holds, witness } => {
            format!(
                "s_prime P={} S={}: {}",
                fmt_values(&instance.p),
                fmt_values(&instance.s),
                fmt_verdict(&WireVerdict { holds: *holds, witness: witness.clone() })
                    + if *applicable { "" } else { " (not applicable)" }
            )
        }
        WireQuery::Suite { property, instances, skipped, failures } => {
            let mut out = format!(
                "suite {property}: {instances} instances checked, {skipped} skipped, {} failures",
                failures.len()
            );
            for failure in failures {
                out.push_str(&format!(
                    "\n  failure: {}",
                    serde_json::to_string(failure).expect("cases serialize")
                ));
            }
            out
        }
        WireQuery::Search { target, examined, found, exhausted } => match found {
            Some(case) => format!(
                "search {target}: found after {examined} instances\n  {}",
                serde_json::to_string(case).expect("cases serialize")
            ),
            None => format!(
                "search {target}: no instance in the bounded space (exhausted={exhausted}, examined={examined})"
            ),
        },
    }
}
