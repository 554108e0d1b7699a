//! On-disk cache of zero tables, shared across CLI invocations.
//!
//! Tables are stored as JSON under `$QBB_CACHE_DIR`, else
//! `$XDG_CACHE_HOME/qbb`, else `~/.cache/qbb`. A hit is re-validated before
//! use, so a corrupt or stale file only costs a recomputation.

use std::collections::hash_map::DefaultHasher;
use std::fs;
use std::hash::{Hash, Hasher};
use std::path::{Path, PathBuf};

use crate::error::Result;
use crate::io::{decode_zero_table, encode_zero_table};
use crate::params::QParams;
use crate::qbessel::functions::BesselKind;
use crate::qbessel::zeros::{bessel_zeros, ZeroTable};
use crate::real::Real;

#[derive(Clone, Debug)]
pub struct ZeroCache {
    dir: Option<PathBuf>,
}

impl ZeroCache {
    /// Cache rooted at the directory chosen from the environment.
    pub fn from_env() -> Self {
        let dir = std::env::var_os("QBB_CACHE_DIR")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("qbb")))
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("qbb")));
        ZeroCache { dir }
    }

    pub fn at(dir: impl AsRef<Path>) -> Self {
        ZeroCache { dir: Some(dir.as_ref().to_path_buf()) }
    }

    pub fn disabled() -> Self {
        ZeroCache { dir: None }
    }

    fn path(&self, kind: BesselKind, alpha: &Real, p: &QParams, count: usize) -> Option<PathBuf> {
        let dir = self.dir.as_ref()?;
        let mut h = DefaultHasher::new();
        (alpha.to_decimal(), p.q().to_decimal()).hash(&mut h);
        let name = format!("{}-p{}-n{}-{:016x}.json", kind.name(), p.prec(), count, h.finish());
        Some(dir.join(name))
    }

    /// Returns the cached table if present and valid, else computes and
    /// stores it. Write failures are ignored: the cache is an optimisation.
    pub fn zeros(&self, kind: BesselKind, alpha: &Real, p: &QParams, count: usize) -> Result<ZeroTable> {
        let path = self.path(kind, alpha, p, count);
        if let Some(t) = path.as_deref().and_then(|f| self.load(f, kind, alpha, p, count)) {
            return Ok(t);
        }
        let t = bessel_zeros(kind, alpha, p, count)?;
        if let Some(f) = path {
            let _ = fs::create_dir_all(f.parent().unwrap_or(Path::new(".")))
                .and_then(|_| fs::write(&f, encode_zero_table(&t)));
        }
        Ok(t)
    }

    fn load(&self, file: &Path, kind: BesselKind, alpha: &Real, p: &QParams, count: usize) -> Option<ZeroTable> {
        let text = fs::read_to_string(file).ok()?;
        let t = decode_zero_table(&text).ok()?;
        let same = t.kind == kind
            && t.alpha == alpha.with_prec(t.alpha.prec())
            && t.q == *p.q()
            && t.precision_bits == p.prec()
            && t.zeros.len() == count;
        (same && t.validate().is_ok()).then_some(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_through_disk() {
        let dir = std::env::temp_dir().join(format!("qbb-cache-test-{}", std::process::id()));
        let c = ZeroCache::at(&dir);
        let p = QParams::new(0.5, 128).unwrap();
        let a = p.real(0.5);
        let first = c.zeros(BesselKind::J2, &a, &p, 3).unwrap();
        let second = c.zeros(BesselKind::J2, &a, &p, 3).unwrap();
        assert_eq!(first, second);
        // corrupt the file: the cache recomputes instead of failing
        let f = c.path(BesselKind::J2, &a, &p, 3).unwrap();
        fs::write(&f, "{not json").unwrap();
        assert_eq!(c.zeros(BesselKind::J2, &a, &p, 3).unwrap(), first);
        let _ = fs::remove_dir_all(dir);
    }
}
