//! Weight multiplicities of irreducible modules (Freudenthal's recursion),
//! with an optional on-disk cache.

use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{AlgebraId, RootSystem, Weight};

/// Environment variable naming the character cache directory.
pub const CACHE_ENV: &str = "WEYL_ALCOVE_CACHE";

const CACHE_VERSION: u32 = 1;

/// Dominant weights of an irreducible module with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    highest: Weight,
    /// Sorted by depth below the highest weight.
    dominant: Vec<(Weight, u64)>,
    index: HashMap<Vec<i32>, u64>,
}

impl CharacterTable {
    fn from_entries(highest: Weight, dominant: Vec<(Weight, u64)>) -> Self {
        let index = dominant.iter().map(|(w, m)| (w.labels().to_vec(), *m)).collect();
        CharacterTable {
            highest,
            dominant,
            index,
        }
    }

    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn dominant_weights(&self) -> &[(Weight, u64)] {
        &self.dominant
    }

    /// Multiplicity of an arbitrary (not necessarily dominant) weight.
    pub fn multiplicity(&self, rs: &RootSystem, mu: &Weight) -> u64 {
        let mut x = mu.labels().to_vec();
        rs.dominant_labels(&mut x);
        self.index.get(&x).copied().unwrap_or(0)
    }

    /// Number of distinct weights, counted without multiplicity.
    pub fn distinct_weights(&self, rs: &RootSystem) -> u64 {
        self.dominant.iter().map(|(w, _)| rs.orbit_size(w)).sum()
    }

    pub fn dimension(&self, rs: &RootSystem) -> u64 {
        self.dominant.iter().map(|(w, m)| m * rs.orbit_size(w)).sum()
    }

    /// Calls `f` once per weight of the module (with its multiplicity).
    pub fn for_each_weight(&self, rs: &RootSystem, mut f: impl FnMut(&[i32], u64)) {
        for (w, m) in &self.dominant {
            rs.for_each_in_orbit(w.labels(), |x| f(x, *m));
        }
    }
}

/// Runs Freudenthal's formula for the irreducible module of highest weight λ.
pub fn compute_character(rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable> {
    rs.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let roots: Vec<&[i32]> = rs.positive_roots().iter().map(|a| a.labels()).collect();
    let heights: Vec<i64> = rs
        .positive_root_coefficients()
        .iter()
        .map(|c| c.iter().map(|&x| x as i64).sum())
        .collect();

    // Dominant weights below λ: every one is reachable from λ by subtracting
    // positive roots without leaving the dominant chamber.
    let mut depth: HashMap<Vec<i32>, i64> = HashMap::new();
    depth.insert(lambda.labels().to_vec(), 0);
    let mut frontier = vec![lambda.labels().to_vec()];
    while let Some(mu) = frontier.pop() {
        let d = depth[&mu];
        for (alpha, h) in roots.iter().zip(&heights) {
            let nu: Vec<i32> = mu.iter().zip(alpha.iter()).map(|(a, b)| a - b).collect();
            if nu.iter().all(|&c| c >= 0) && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), d + h);
                frontier.push(nu);
            }
        }
    }
    let mut order: Vec<(i64, Vec<i32>)> = depth.into_iter().map(|(w, d)| (d, w)).collect();
    order.sort();

    let lr: Vec<i32> = lambda.labels().iter().map(|x| x + 1).collect();
    let lr_norm = rs.inner_scaled(&lr, &lr);
    let mut mult: HashMap<Vec<i32>, u64> = HashMap::with_capacity(order.len());
    let mut entries = Vec::with_capacity(order.len());
    let mut probe = vec![0i32; rs.rank()];
    for (d, mu) in order {
        let m = if d == 0 {
            1
        } else {
            let mut num: i128 = 0;
            for alpha in &roots {
                let mut j = 1;
                loop {
                    for (p, (a, b)) in probe.iter_mut().zip(mu.iter().zip(alpha.iter())) {
                        *p = a + j * b;
                    }
                    let pair = rs.inner_scaled(&probe, alpha);
                    rs.dominant_labels(&mut probe);
                    match mult.get(&probe) {
                        Some(&m) => num += pair as i128 * m as i128,
                        None => break,
                    }
                    j += 1;
                }
            }
            let mr: Vec<i32> = mu.iter().map(|x| x + 1).collect();
            let den = (lr_norm - rs.inner_scaled(&mr, &mr)) as i128;
            if den <= 0 || (2 * num) % den != 0 {
                return Err(Error::Invariant(format!(
                    "Freudenthal recursion for {lambda} is not integral at {}",
                    Weight::new(mu)
                )));
            }
            (2 * num / den) as u64
        };
        mult.insert(mu.clone(), m);
        if m > 0 {
            entries.push((Weight::new(mu), m));
        }
    }
    let table = CharacterTable::from_entries(lambda.clone(), entries);
    Ok(table)
}

/// Checks the total dimension against the Weyl dimension formula.
pub fn check_dimension(rs: &RootSystem, table: &CharacterTable) -> Result<()> {
    let expected = rs.weyl_dimension(table.highest());
    let got = BigInt::from(table.dimension(rs));
    if got != expected {
        return Err(Error::Invariant(format!(
            "character of {} has dimension {got}, Weyl dimension formula gives {expected}",
            table.highest()
        )));
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    algebra: AlgebraId,
    highest: Weight,
    entries: Vec<(Weight, u64)>,
}

/// File-backed store of computed characters, keyed by algebra and highest weight.
#[derive(Clone, Debug, Default)]
pub struct CharacterCache {
    dir: Option<PathBuf>,
}

impl CharacterCache {
    /// A cache that never touches disk.
    pub fn disabled() -> Self {
        CharacterCache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        CharacterCache {
            dir: Some(dir.into()),
        }
    }

    /// Uses the directory from the environment variable, if set.
    pub fn from_env() -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(d) if !d.is_empty() => Self::at(d),
            _ => Self::disabled(),
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    fn path_for(&self, algebra: AlgebraId, lambda: &Weight) -> Option<PathBuf> {
        let labels: Vec<String> = lambda.labels().iter().map(|x| x.to_string()).collect();
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{algebra}_{}.json", labels.join("_"))))
    }

    /// Returns a cached table when present and consistent, else `None`.
    pub fn load(&self, rs: &RootSystem, lambda: &Weight) -> Option<CharacterTable> {
        let path = self.path_for(rs.algebra(), lambda)?;
        let bytes = fs::read(&path).ok()?;
        let file: CacheFile = serde_json::from_slice(&bytes).ok()?;
        if file.version != CACHE_VERSION || file.algebra != rs.algebra() || &file.highest != lambda {
            return None;
        }
        if file.entries.iter().any(|(w, _)| w.rank() != rs.rank() || !w.is_dominant()) {
            return None;
        }
        let table = CharacterTable::from_entries(file.highest, file.entries);
        check_dimension(rs, &table).ok()?;
        Some(table)
    }

    /// Writes atomically; a no-op for a disabled cache.
    pub fn store(&self, rs: &RootSystem, table: &CharacterTable) -> Result<()> {
        let Some(path) = self.path_for(rs.algebra(), table.highest()) else {
            return Ok(());
        };
        let dir = path.parent().expect("cache path has a parent");
        fs::create_dir_all(dir)?;
        let file = CacheFile {
            version: CACHE_VERSION,
            algebra: rs.algebra(),
            highest: table.highest.clone(),
            entries: table.dominant.clone(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer(&mut tmp, &file)?;
        tmp.flush()?;
        tmp.persist(&path).map_err(|e| Error::Io(e.error))?;
        Ok(())
    }

    /// Loads from cache or computes (validating against the Weyl dimension) and stores.
    pub fn character(&self, rs: &RootSystem, lambda: &Weight) -> Result<CharacterTable> {
        if let Some(t) = self.load(rs, lambda) {
            return Ok(t);
        }
        let table = compute_character(rs, lambda)?;
        check_dimension(rs, &table)?;
        // A cache that cannot be written is not fatal.
        let _ = self.store(rs, &table);
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::AlgebraId;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<AlgebraId>().unwrap()).unwrap()
    }

    const P: u128 = (1u128 << 61) - 1;

    fn pow_mod(mut b: u128, mut e: u128) -> u128 {
        let mut r = 1u128;
        b %= P;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % P;
            }
            b = b * b % P;
            e >>= 1;
        }
        r
    }

    /// q^n in F_p for possibly negative n.
    fn q_pow(q: u128, n: i64) -> u128 {
        let e = n.rem_euclid((P - 1) as i64) as u128;
        pow_mod(q, e)
    }

    /// Checks Weyl's character formula
    /// ch(λ) · Σ_w ε(w) e^{wρ} = Σ_w ε(w) e^{w(λ+ρ)}
    /// after specializing e^μ ↦ q^{D(μ, x)} in a prime field.
    fn weyl_formula_holds(s: &RootSystem, lambda: &Weight, x: &[i32], q: u128) -> bool {
        let table = compute_character(s, lambda).unwrap();
        let mut lhs_ch = 0u128;
        table.for_each_weight(s, |w, m| {
            lhs_ch = (lhs_ch + m as u128 % P * q_pow(q, s.inner_scaled(w, x))) % P;
        });
        let alternating = |top: &Weight| -> u128 {
            let mut acc = 0u128;
            s.for_each_in_orbit(top.labels(), |w| {
                let sign = s.to_dominant(&Weight::new(w.to_vec())).unwrap().parity;
                let t = q_pow(q, s.inner_scaled(w, x));
                acc = if sign > 0 { (acc + t) % P } else { (acc + P - t) % P };
            });
            acc
        };
        let denom = alternating(s.rho());
        let numer = alternating(&(lambda + s.rho()));
        lhs_ch * denom % P == numer
    }

    #[test]
    fn weyl_character_formula_oracle() {
        let cases: &[(&str, &[&[i32]])] = &[
            ("A1", &[&[0], &[1], &[5]]),
            ("A2", &[&[1, 1], &[2, 1], &[3, 0]]),
            ("B2", &[&[1, 1], &[0, 2], &[2, 0]]),
            ("G2", &[&[1, 0], &[0, 1], &[1, 1]]),
            ("B3", &[&[0, 1, 0], &[0, 0, 2], &[1, 0, 1]]),
            ("C3", &[&[1, 0, 1], &[0, 1, 0]]),
            ("A3", &[&[1, 0, 1], &[0, 2, 0]]),
            ("D4", &[&[0, 1, 0, 0], &[2, 0, 0, 0]]),
            ("F4", &[&[1, 0, 0, 0], &[0, 0, 0, 1]]),
        ];
        for (name, weights) in cases {
            let s = rs(name);
            let x: Vec<i32> = (0..s.rank() as i32).map(|i| 3 + 2 * i).collect();
            for w in *weights {
                let lambda = Weight::new(w.to_vec());
                for q in [7u128, 1_000_003] {
                    assert!(weyl_formula_holds(&s, &lambda, &x, q), "{name} {lambda}");
                }
            }
        }
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        for name in ["A1", "A4", "B3", "B4", "C3", "D4", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let s = rs(name);
            let t = compute_character(&s, s.theta()).unwrap();
            assert_eq!(t.multiplicity(&s, &Weight::zero(s.rank())), s.rank() as u64, "{name}");
            check_dimension(&s, &t).unwrap();
        }
    }

    #[test]
    fn dimensions_match_weyl_formula() {
        let cases: &[(&str, &[i32])] = &[
            ("E7", &[0, 0, 0, 0, 0, 1, 0]),
            ("E7", &[0, 0, 0, 0, 0, 0, 2]),
            ("E7", &[0, 1, 0, 0, 0, 0, 0]),
            ("E8", &[1, 0, 0, 0, 0, 0, 0, 0]),
            ("B5", &[0, 0, 0, 1, 0]),
            ("D6", &[0, 0, 0, 0, 1, 1]),
            ("C4", &[0, 0, 0, 2]),
        ];
        for (name, w) in cases {
            let s = rs(name);
            let t = compute_character(&s, &Weight::new(w.to_vec())).unwrap();
            check_dimension(&s, &t).unwrap();
        }
        let e7 = rs("E7");
        let t = compute_character(&e7, &Weight::fundamental(7, 6)).unwrap();
        assert_eq!(t.dimension(&e7), 1539);
        let e8 = rs("E8");
        let t = compute_character(&e8, &Weight::fundamental(8, 1)).unwrap();
        assert_eq!(t.dimension(&e8), 3875);
    }

    #[test]
    fn rejects_non_dominant() {
        let s = rs("A2");
        assert!(matches!(compute_character(&s, &Weight::new(vec![-1, 0])), Err(Error::NotDominant(_))));
        assert!(compute_character(&s, &Weight::new(vec![1])).is_err());
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CharacterCache::at(dir.path());
        let s = rs("B3");
        let lambda = Weight::new(vec![1, 0, 1]);
        let fresh = cache.character(&s, &lambda).unwrap();
        let path = cache.path_for(s.algebra(), &lambda).unwrap();
        assert!(path.exists());
        assert_eq!(cache.load(&s, &lambda).unwrap(), fresh);

        fs::write(&path, b"{not json").unwrap();
        assert!(cache.load(&s, &lambda).is_none());
        assert_eq!(cache.character(&s, &lambda).unwrap(), fresh);

        // Right shape, wrong numbers.
        let mut file: CacheFile = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
        file.entries[0].1 += 1;
        fs::write(&path, serde_json::to_vec(&file).unwrap()).unwrap();
        assert!(cache.load(&s, &lambda).is_none());

        file.entries[0].1 -= 1;
        file.version = CACHE_VERSION + 1;
        fs::write(&path, serde_json::to_vec(&file).unwrap()).unwrap();
        assert!(cache.load(&s, &lambda).is_none());
    }

    #[test]
    fn disabled_cache_writes_nothing() {
        let cache = CharacterCache::disabled();
        let s = rs("A2");
        assert!(cache.character(&s, &Weight::new(vec![1, 1])).is_ok());
        assert!(cache.dir().is_none());
    }
}
