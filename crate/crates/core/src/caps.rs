//! Size limits for exhaustive work.

/// Bounds on structure sizes.
///
/// `enumeration` caps the cardinality of any constructed ring or module (and
/// hence of every lattice enumeration); `audit` caps the cardinality up to
/// which the full axiom check runs at construction time. Structures above the
/// audit bound are trusted by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub enumeration: usize,
    pub audit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            enumeration: 64,
            audit: 32,
        }
    }
}

impl Caps {
    /// Caps with both bounds set to `n`, as used by the CLI override.
    pub fn uniform(n: usize) -> Self {
        Caps {
            enumeration: n,
            audit: n,
        }
    }
}
