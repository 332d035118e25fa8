//! Noise profiles: the bundled device set, `T1:T2` pairs and JSON files.

use std::path::Path;

use kclique_core::sim::NoiseError;
use kclique_core::NoiseProfile;

/// Average `(T1, T2)` in microseconds of six IBM Q devices.
pub const BUILTIN: [(&str, f64, f64); 6] = [
    ("ibmq_melbourne", 55.0, 59.0),
    ("ibmq_poughkeepsie", 64.0, 65.0),
    ("ibmq_singapore", 83.0, 89.0),
    ("ibmq_paris", 76.0, 67.0),
    ("ibmq_cambridge", 81.0, 39.0),
    ("ibmq_rochester", 55.0, 59.0),
];

/// Uniform `T1 = T2` pairs added to the device set by default sweeps.
pub const REFERENCE_PAIRS: [(f64, f64); 2] = [(200.0, 200.0), (500.0, 500.0)];

#[derive(Debug, thiserror::Error)]
pub enum ProfileError {
    #[error("reading profile {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parsing profile {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("profile {name}: {source}")]
    Invalid {
        name: String,
        #[source]
        source: NoiseError,
    },
    #[error("unknown noise profile {0:?}: not a builtin name, T1:T2 pair or readable file")]
    Unknown(String),
}

/// Looks up a bundled profile; the `ibmq_` prefix is optional.
pub fn builtin(name: &str) -> Option<NoiseProfile> {
    let lower = name.to_ascii_lowercase();
    let short = lower.strip_prefix("ibmq_").unwrap_or(&lower);
    BUILTIN
        .iter()
        .find(|(n, _, _)| n.strip_prefix("ibmq_") == Some(short))
        .map(|&(n, t1, t2)| NoiseProfile::new(n, t1, t2).expect("bundled profiles are valid"))
}

pub fn builtin_all() -> Vec<NoiseProfile> {
    BUILTIN.iter().filter_map(|(n, _, _)| builtin(n)).collect()
}

/// Profile with default timings, named `T1/T2`.
pub fn uniform(t1_us: f64, t2_us: f64) -> Result<NoiseProfile, ProfileError> {
    let name = format!("{t1_us}/{t2_us}");
    NoiseProfile::new(&name, t1_us, t2_us).map_err(|source| ProfileError::Invalid { name, source })
}

/// The six devices followed by the reference pairs.
pub fn sweep_default() -> Vec<NoiseProfile> {
    let mut all = builtin_all();
    all.extend(
        REFERENCE_PAIRS
            .iter()
            .map(|&(t1, t2)| uniform(t1, t2).expect("valid pair")),
    );
    all
}

/// Parses `{name, t1_us, t2_us, gate_ns: {u2, u3, cx}, readout_ns, apply_idle}`;
/// everything after `t2_us` is optional.
pub fn from_json(text: &str, origin: &str) -> Result<NoiseProfile, ProfileError> {
    let p: NoiseProfile = serde_json::from_str(text).map_err(|source| ProfileError::Json {
        path: origin.into(),
        source,
    })?;
    p.validate().map_err(|source| ProfileError::Invalid {
        name: p.name.clone(),
        source,
    })?;
    Ok(p)
}

pub fn load(path: &Path) -> Result<NoiseProfile, ProfileError> {
    let text = std::fs::read_to_string(path).map_err(|source| ProfileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text, &path.display().to_string())
}

fn parse_pair(spec: &str) -> Option<(f64, f64)> {
    let (a, b) = spec.split_once(':')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// A builtin name, a `T1:T2` pair in microseconds, or a JSON file.
pub fn resolve(spec: &str) -> Result<NoiseProfile, ProfileError> {
    if let Some(p) = builtin(spec) {
        return Ok(p);
    }
    if let Some((t1, t2)) = parse_pair(spec) {
        return uniform(t1, t2);
    }
    let path = Path::new(spec);
    if path.is_file() {
        return load(path);
    }
    Err(ProfileError::Unknown(spec.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_with_and_without_prefix() {
        assert_eq!(builtin("singapore").unwrap().t1_us, 83.0);
        assert_eq!(builtin("IBMQ_Paris").unwrap().t2_us, 67.0);
        assert_eq!(builtin("ibmq_cambridge").unwrap().name, "ibmq_cambridge");
        assert!(builtin("ibmq_tokyo").is_none());
    }

    #[test]
    fn pairs_and_errors() {
        let p = resolve("200:200").unwrap();
        assert_eq!((p.t1_us, p.t2_us, p.name.as_str()), (200.0, 200.0, "200/200"));
        assert!(matches!(resolve("10:30"), Err(ProfileError::Invalid { .. })));
        assert!(matches!(resolve("nowhere.json"), Err(ProfileError::Unknown(_))));
    }

    #[test]
    fn json_defaults_and_validation() {
        let p = from_json(r#"{"name": "lab", "t1_us": 40, "t2_us": 30}"#, "inline").unwrap();
        assert_eq!(p.gate_ns.cx, 300.0);
        assert_eq!(p.readout_ns, 1000.0);
        assert!(p.apply_idle);
        let bad = from_json(r#"{"name": "x", "t1_us": 10, "t2_us": 25}"#, "inline");
        assert!(matches!(bad, Err(ProfileError::Invalid { .. })));
        assert!(matches!(from_json("{", "inline"), Err(ProfileError::Json { .. })));
    }

    #[test]
    fn default_sweep_has_eight() {
        let all = sweep_default();
        assert_eq!(all.len(), 8);
        assert_eq!(all[7].t1_us, 500.0);
    }
}
