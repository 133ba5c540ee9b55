//! Resource limits for group construction and character tables.

/// Budgets guarding the memory- and time-heavy operations. Defaults suit
/// desk-scale runs; environment variables `PROJEMBED_MAX_ORDER` and
/// `PROJEMBED_CLASS_BUDGET` override them, as do CLI flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Maximum group order accepted at parse time (product of relative orders).
    pub max_order: u128,
    /// Maximum value of (number of conjugacy classes)^3 a character-table
    /// computation may incur.
    pub class_budget: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_order: 1_000_000,
            class_budget: 200_000_000,
        }
    }
}

impl Config {
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Ok(v) = std::env::var("PROJEMBED_MAX_ORDER") {
            if let Ok(n) = v.parse() {
                cfg.max_order = n;
            }
        }
        if let Ok(v) = std::env::var("PROJEMBED_CLASS_BUDGET") {
            if let Ok(n) = v.parse() {
                cfg.class_budget = n;
            }
        }
        cfg
    }

    /// A permissive budget used by `--budget high`.
    pub fn high() -> Self {
        Config {
            max_order: 1_000_000,
            class_budget: 1_000_000_000,
        }
    }

    /// A tight budget used by `--budget low`.
    pub fn low() -> Self {
        Config {
            max_order: 100_000,
            class_budget: 20_000_000,
        }
    }
}
