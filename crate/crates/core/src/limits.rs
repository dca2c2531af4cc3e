use crate::error::{Error, Result};

/// Environment variable that overrides both brute-force bounds.
pub const BRUTE_LIMIT_ENV: &str = "ANTIKIT_BRUTE_LIMIT";

/// Size bounds for the exponential oracles. Exceeding a bound is an error,
/// never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BruteLimits {
    /// Largest ground set enumerated as a subset lattice.
    pub enumeration: usize,
    /// Largest graph searched for chordless paths.
    pub chordless: usize,
}

impl BruteLimits {
    pub const DEFAULT_ENUMERATION: usize = 20;
    pub const DEFAULT_CHORDLESS: usize = 16;
    /// Subset masks are `u64`; enumerating `2^63` sets is already absurd.
    pub const HARD_CAP: usize = 62;

    pub fn uniform(limit: usize) -> Self {
        BruteLimits {
            enumeration: limit.min(Self::HARD_CAP),
            chordless: limit.min(Self::HARD_CAP),
        }
    }

    /// Defaults, overridden by `ANTIKIT_BRUTE_LIMIT` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BRUTE_LIMIT_ENV) {
            Ok(raw) => raw
                .trim()
                .parse::<usize>()
                .map(Self::uniform)
                .map_err(|_| Error::parse(0, format!("{BRUTE_LIMIT_ENV}: invalid limit `{raw}`"))),
            Err(_) => Ok(Self::default()),
        }
    }

    pub(crate) fn check_enumeration(&self, size: usize) -> Result<()> {
        check(size, self.enumeration)
    }

    pub(crate) fn check_chordless(&self, size: usize) -> Result<()> {
        check(size, self.chordless)
    }
}

fn check(size: usize, limit: usize) -> Result<()> {
    if size > limit.min(BruteLimits::HARD_CAP) {
        Err(Error::GroundSetTooLarge { size, limit })
    } else {
        Ok(())
    }
}

impl Default for BruteLimits {
    fn default() -> Self {
        BruteLimits {
            enumeration: Self::DEFAULT_ENUMERATION,
            chordless: Self::DEFAULT_CHORDLESS,
        }
    }
}
