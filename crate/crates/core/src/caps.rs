use std::str::FromStr;

/// Enumeration guards. Exceeding any of them is reported as an error, never
/// silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest order for which the permanent is expanded over `S_n`.
    pub permanent: usize,
    /// Largest row or column count accepted by rank and independence search.
    pub rank: usize,
    /// Largest number of maximal chains enumerated for one lattice.
    pub chains: usize,
    /// Largest ground set for the partition-representability search.
    pub ground: usize,
    /// Largest ground set for subset enumeration over hereditary families.
    pub hered: usize,
    /// Largest lattice on which sup-maps are checked on every subset.
    pub sup_map_exhaustive: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            permanent: 9,
            rank: 20,
            chains: 100_000,
            ground: 7,
            hered: 20,
            sup_map_exhaustive: 12,
        }
    }
}

impl Caps {
    pub(crate) fn check(&self, what: &'static str, size: usize, limit: usize) -> crate::Result<()> {
        if size > limit {
            Err(crate::Error::SizeLimitExceeded { what, size, limit })
        } else {
            Ok(())
        }
    }
}

/// Parses `key=value` pairs separated by commas, e.g. `rank=16,chains=5000`.
/// Unknown keys and zero values are rejected.
impl FromStr for Caps {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut caps = Caps::default();
        for item in s.split(',').map(str::trim).filter(|item| !item.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{item}`"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|e| format!("bad value for `{key}`: {e}"))?;
            if value == 0 {
                return Err(format!("cap `{key}` must be positive"));
            }
            let slot = match key.trim() {
                "permanent" => &mut caps.permanent,
                "rank" => &mut caps.rank,
                "chains" => &mut caps.chains,
                "ground" => &mut caps.ground,
                "hered" => &mut caps.hered,
                "sup_map" => &mut caps.sup_map_exhaustive,
                other => return Err(format!("unknown cap `{other}`")),
            };
            *slot = value;
        }
        Ok(caps)
    }
}
