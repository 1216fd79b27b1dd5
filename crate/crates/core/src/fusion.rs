//! The level-k Weyl alcove and its fusion ring (Kac–Walton algorithm).

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::characters::{CharacterCache, CharacterTable};
use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight};

/// Dominant weights λ with (λ, θ) ≤ k.
///
/// Ordered by the sum of Dynkin labels, ties broken by labels in
/// descending lexicographic order, so the zero weight comes first.
#[derive(Clone, Debug)]
pub struct Alcove {
    level: u32,
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
}

impl Alcove {
    pub fn new(rs: &RootSystem, level: u32) -> Alcove {
        let r = rs.rank();
        let comarks = rs.comarks();
        let mut weights = Vec::new();
        let mut cur = vec![0i32; r];
        fn rec(i: usize, budget: i64, cur: &mut Vec<i32>, comarks: &[i64], out: &mut Vec<Weight>) {
            if i == cur.len() {
                out.push(Weight::new(cur.clone()));
                return;
            }
            let mut c = 0;
            while c as i64 * comarks[i] <= budget {
                cur[i] = c;
                rec(i + 1, budget - c as i64 * comarks[i], cur, comarks, out);
                c += 1;
            }
            cur[i] = 0;
        }
        rec(0, level as i64, &mut cur, comarks, &mut weights);
        weights.sort_by(|a, b| {
            let sa: i32 = a.labels().iter().sum();
            let sb: i32 = b.labels().iter().sum();
            sa.cmp(&sb).then_with(|| b.cmp(a))
        });
        let index = weights.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Alcove {
            level,
            weights,
            index,
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn weight(&self, i: usize) -> &Weight {
        &self.weights[i]
    }
}

/// Sparse fusion product: alcove indices with their (positive) multiplicities, sorted by index.
pub type FusionVector = Vec<(usize, u32)>;

/// Maps shifted alcove points x = λ + ρ to alcove indices via a mixed-radix key.
#[derive(Debug)]
struct PointIndex {
    radix: Vec<u64>,
    dense: Option<Vec<u32>>,
    sparse: HashMap<u64, u32>,
}

impl PointIndex {
    const DENSE_LIMIT: u64 = 1 << 24;

    fn new(rs: &RootSystem, alcove: &Alcove) -> PointIndex {
        let k = alcove.level() as i64;
        let radix: Vec<u64> = rs.comarks().iter().map(|&c| (k / c + 1) as u64).collect();
        let total = radix.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r));
        let mut idx = PointIndex {
            radix,
            dense: None,
            sparse: HashMap::new(),
        };
        match total {
            Some(t) if t <= Self::DENSE_LIMIT => {
                let mut d = vec![u32::MAX; t as usize];
                for (i, w) in alcove.weights().iter().enumerate() {
                    d[idx.key(w.labels().iter().map(|&c| c as i64)) as usize] = i as u32;
                }
                idx.dense = Some(d);
            }
            _ => {
                for (i, w) in alcove.weights().iter().enumerate() {
                    let key = idx.key(w.labels().iter().map(|&c| c as i64));
                    idx.sparse.insert(key, i as u32);
                }
            }
        }
        idx
    }

    fn key(&self, labels: impl Iterator<Item = i64>) -> u64 {
        let mut key = 0u64;
        let mut scale = 1u64;
        for (c, r) in labels.zip(&self.radix) {
            key += c as u64 * scale;
            scale = scale.wrapping_mul(*r);
        }
        key
    }

    fn lookup_shifted(&self, x: &[i64]) -> usize {
        let key = self.key(x.iter().map(|&c| c - 1));
        let i = match &self.dense {
            Some(d) => d[key as usize],
            None => self.sparse[&key],
        };
        debug_assert_ne!(i, u32::MAX);
        i as usize
    }
}

/// Fusion ring at level k, with characters and the structure constants computed on demand.
pub struct FusionRing {
    rs: RootSystem,
    alcove: Alcove,
    cache: CharacterCache,
    points: PointIndex,
    characters: Vec<OnceLock<CharacterTable>>,
    weight_counts: Vec<OnceLock<u64>>,
    table: Vec<Vec<OnceLock<FusionVector>>>,
    duals: Vec<usize>,
}

impl std::fmt::Debug for FusionRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FusionRing({}, level {})", self.rs.algebra(), self.alcove.level())
    }
}

impl FusionRing {
    pub fn new(rs: RootSystem, level: u32, cache: CharacterCache) -> Result<FusionRing> {
        Self::with_bound(rs, level, cache, None)
    }

    /// Refuses alcoves with more than `max_alcove` weights.
    pub fn with_bound(rs: RootSystem, level: u32, cache: CharacterCache, max_alcove: Option<usize>) -> Result<FusionRing> {
        let alcove = Alcove::new(&rs, level);
        let n = alcove.len();
        if let Some(bound) = max_alcove {
            if n > bound {
                return Err(Error::AlcoveTooLarge { size: n, bound });
            }
        }
        let points = PointIndex::new(&rs, &alcove);
        let duals = alcove
            .weights()
            .iter()
            .map(|w| {
                let mut x: Vec<i32> = w.labels().iter().map(|c| -c).collect();
                rs.dominant_labels(&mut x);
                alcove
                    .index_of(&Weight::new(x))
                    .ok_or_else(|| Error::Invariant(format!("dual of {w} left the alcove")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FusionRing {
            characters: (0..n).map(|_| OnceLock::new()).collect(),
            weight_counts: (0..n).map(|_| OnceLock::new()).collect(),
            table: (0..n).map(|i| (0..=i).map(|_| OnceLock::new()).collect()).collect(),
            rs,
            alcove,
            cache,
            points,
            duals,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn alcove(&self) -> &Alcove {
        &self.alcove
    }

    pub fn level(&self) -> u32 {
        self.alcove.level()
    }

    pub fn len(&self) -> usize {
        self.alcove.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alcove.is_empty()
    }

    /// Shifted level k + ȟ.
    pub fn shifted_level(&self) -> i64 {
        self.level() as i64 + self.rs.dual_coxeter()
    }

    /// Alcove index of a weight, or the appropriate error.
    pub fn index(&self, w: &Weight) -> Result<usize> {
        self.rs.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
        self.alcove.index_of(w).ok_or_else(|| Error::NotInAlcove {
            weight: w.clone(),
            level: self.level(),
        })
    }

    pub fn weight(&self, i: usize) -> &Weight {
        self.alcove.weight(i)
    }

    pub fn character(&self, i: usize) -> Result<&CharacterTable> {
        if let Some(t) = self.characters[i].get() {
            return Ok(t);
        }
        let t = self.cache.character(&self.rs, self.alcove.weight(i))?;
        Ok(self.characters[i].get_or_init(|| t))
    }

    fn weight_count(&self, i: usize) -> Result<u64> {
        if let Some(&c) = self.weight_counts[i].get() {
            return Ok(c);
        }
        let c = self.character(i)?.distinct_weights(&self.rs);
        Ok(*self.weight_counts[i].get_or_init(|| c))
    }

    /// Index of the dual weight λ† = −w₀λ.
    pub fn dual(&self, i: usize) -> usize {
        self.duals[i]
    }

    /// Moves x = μ + ρ into the interior of the shifted alcove under the
    /// level-(k+ȟ) affine Weyl group. Returns the sign of the group element,
    /// or `None` when x is fixed by an affine reflection.
    fn fold_shifted(&self, x: &mut [i64]) -> Option<i64> {
        let big_k = self.shifted_level();
        let comarks = self.rs.comarks();
        let at = self.rs.alpha_theta();
        let theta = self.rs.theta().labels();
        let mut t: i64 = x.iter().zip(comarks).map(|(a, c)| a * c).sum();
        let mut sign = 1i64;
        loop {
            if let Some(i) = x.iter().position(|&c| c < 0) {
                t -= x[i] * at[i];
                self.rs.reflect_in_place(x, i);
                sign = -sign;
            } else if t > big_k {
                let d = t - big_k;
                for (xi, &th) in x.iter_mut().zip(theta) {
                    *xi -= d * th as i64;
                }
                t = 2 * big_k - t;
                sign = -sign;
            } else {
                break;
            }
        }
        if t == big_k || x.contains(&0) {
            None
        } else {
            Some(sign)
        }
    }

    /// Affine fold of an arbitrary weight μ: the alcove weight w·μ together
    /// with ε(w), or `None` when μ + ρ lies on an affine wall.
    pub fn fold(&self, mu: &Weight) -> Result<Option<(usize, i32)>> {
        self.rs.check_rank(mu)?;
        let mut x: Vec<i64> = mu.labels().iter().map(|&c| c as i64 + 1).collect();
        Ok(self
            .fold_shifted(&mut x)
            .map(|s| (self.points.lookup_shifted(&x), s as i32)))
    }

    fn compute_product(&self, a: usize, b: usize) -> Result<FusionVector> {
        let (small, big) = if self.weight_count(a)? <= self.weight_count(b)? { (a, b) } else { (b, a) };
        let ch = self.character(small)?;
        let base: Vec<i64> = self.alcove.weight(big).labels().iter().map(|&c| c as i64 + 1).collect();
        let mut acc = vec![0i64; self.len()];
        let mut x = vec![0i64; base.len()];
        ch.for_each_weight(&self.rs, |nu, m| {
            for ((xi, &b0), &n) in x.iter_mut().zip(&base).zip(nu) {
                *xi = b0 + n as i64;
            }
            if let Some(sign) = self.fold_shifted(&mut x) {
                acc[self.points.lookup_shifted(&x)] += sign * m as i64;
            }
        });
        let mut out = Vec::new();
        for (i, &c) in acc.iter().enumerate() {
            if c < 0 {
                return Err(Error::Invariant(format!(
                    "negative fusion coefficient {c} for {} ⊗ {} at {}",
                    self.weight(a),
                    self.weight(b),
                    self.weight(i)
                )));
            }
            if c > 0 {
                out.push((i, u32::try_from(c).map_err(|_| Error::Invariant("fusion coefficient overflow".into()))?));
            }
        }
        Ok(out)
    }

    /// Decomposition of the fusion product of two alcove weights.
    pub fn product(&self, a: usize, b: usize) -> Result<&FusionVector> {
        let (i, j) = if a >= b { (a, b) } else { (b, a) };
        let cell = &self.table[i][j];
        if let Some(v) = cell.get() {
            return Ok(v);
        }
        let v = self.compute_product(i, j)?;
        Ok(cell.get_or_init(|| v))
    }

    /// Same as [`Self::product`] but on weights.
    pub fn fuse(&self, lambda: &Weight, gamma: &Weight) -> Result<Vec<(Weight, u32)>> {
        let v = self.product(self.index(lambda)?, self.index(gamma)?)?;
        Ok(v.iter().map(|&(i, m)| (self.weight(i).clone(), m)).collect())
    }

    /// N_{ab}^c.
    pub fn coefficient(&self, a: usize, b: usize, c: usize) -> Result<u32> {
        let v = self.product(a, b)?;
        Ok(v.binary_search_by_key(&c, |&(i, _)| i).map(|p| v[p].1).unwrap_or(0))
    }

    /// Fills in every structure constant.
    pub fn compute_all(&self) -> Result<()> {
        for a in 0..self.len() {
            for b in 0..=a {
                self.product(a, b)?;
            }
        }
        Ok(())
    }

    /// Result of fusing the simple current kℓ(z) with `gamma`; it must be a single weight.
    pub fn simple_current_action(&self, current: usize, gamma: usize) -> Result<usize> {
        match self.product(current, gamma)?.as_slice() {
            [(c, 1)] => Ok(*c),
            other => Err(Error::Invariant(format!(
                "{} is not a simple current: product with {} has {} terms",
                self.weight(current),
                self.weight(gamma),
                other.len()
            ))),
        }
    }

    /// Alcove index of kℓ(z) for every center element, in center order.
    pub fn simple_currents(&self) -> Vec<usize> {
        let k = self.level() as i32;
        self.rs
            .center()
            .elements()
            .iter()
            .map(|z| self.alcove.index_of(&(k * &z.weight)).expect("kℓ(z) lies in the alcove"))
            .collect()
    }
}
