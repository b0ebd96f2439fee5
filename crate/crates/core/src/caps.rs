//! Global size limits for the exhaustive procedures.
//!
//! The defaults can be overridden with the `T0KIT_CAP` environment variable,
//! either a bare integer (the carrier cap) or a comma separated list of
//! `key=value` pairs with keys `carrier`, `product`, `owf`, `maps`.

use std::sync::OnceLock;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest carrier for operations that walk all `2^n` subsets. Families
    /// of opens/closed sets are capped at `2^carrier` members.
    pub carrier: usize,
    /// Largest product carrier that gets materialised.
    pub product: usize,
    /// Largest `|O(X)|` for the literal open-well-filtered and way-below
    /// quantification over subfamilies, and for the b-closure sobrification.
    pub owf_opens: usize,
    /// Largest `|Y|^|X|` for map enumeration.
    pub maps: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            carrier: 16,
            product: 4096,
            owf_opens: 12,
            maps: 1_000_000,
        }
    }
}

impl Caps {
    /// Parses the `T0KIT_CAP` syntax on top of the defaults.
    pub fn parse(spec: &str) -> std::result::Result<Caps, String> {
        let mut caps = Caps::default();
        let spec = spec.trim();
        if spec.is_empty() {
            return Ok(caps);
        }
        if let Ok(n) = spec.parse::<usize>() {
            caps.carrier = n;
            return Ok(caps);
        }
        for part in spec.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let value: u64 = value.trim().parse().map_err(|_| format!("bad number in `{part}`"))?;
            match key.trim() {
                "carrier" => caps.carrier = value as usize,
                "product" => caps.product = value as usize,
                "owf" => caps.owf_opens = value as usize,
                "maps" => caps.maps = value,
                other => return Err(format!("unknown cap `{other}`")),
            }
        }
        Ok(caps)
    }

    pub fn family_limit(&self) -> u128 {
        1u128 << self.carrier.min(100)
    }
}

static CAPS: OnceLock<Caps> = OnceLock::new();

/// The process-wide caps, read once from `T0KIT_CAP`.
pub fn caps() -> &'static Caps {
    CAPS.get_or_init(|| match std::env::var("T0KIT_CAP") {
        Ok(spec) => Caps::parse(&spec).unwrap_or_default(),
        Err(_) => Caps::default(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(Caps::parse("").unwrap(), Caps::default());
        assert_eq!(Caps::parse("20").unwrap().carrier, 20);
        let c = Caps::parse("product=8192, owf=10").unwrap();
        assert_eq!(c.product, 8192);
        assert_eq!(c.owf_opens, 10);
        assert_eq!(c.carrier, 16);
        assert!(Caps::parse("bogus=1").is_err());
        assert!(Caps::parse("carrier").is_err());
    }
}
