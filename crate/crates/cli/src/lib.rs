//! Front end for the finite ring and module toolkit: a small declarative
//! input language, query execution, and deterministic JSON reports.

pub mod dsl;
pub mod exec;
pub mod report;

use alg_core::Caps;

/// Caps from the environment: `ALG_MAX_CARD` overrides both the enumeration
/// cap and the audit bound.
pub fn caps_from_env() -> Result<Caps, String> {
    match std::env::var("ALG_MAX_CARD") {
        Ok(raw) => {
            let n: usize = raw
                .parse()
                .map_err(|_| format!("ALG_MAX_CARD must be a positive integer, got `{raw}`"))?;
            if n < 2 {
                return Err("ALG_MAX_CARD must be at least 2".into());
            }
            Ok(Caps::uniform(n))
        }
        Err(_) => Ok(Caps::default()),
    }
}
