//! Root-system and weight-lattice data for the simple Lie types A–G.
//!
//! Weights and roots are stored as Dynkin labels (coordinates in the
//! fundamental-weight basis) with Humphreys/Bourbaki numbering of the simple
//! roots. The simple root α_i is row `i` of the Cartan matrix in that basis.
//! The bilinear form is normalized so that long roots have squared length 2,
//! which makes the dual Coxeter number equal to (ρ, θ) + 1.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl Family {
    fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A simple Lie type such as `B13` or `E7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId {
    family: Family,
    rank: usize,
}

impl AlgebraId {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.rank_is_valid(rank) {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(AlgebraId { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    /// Accepts `E7`, `e7` and `E_7`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = chars
            .next()
            .and_then(Family::from_char)
            .ok_or_else(|| Error::ParseAlgebra(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseAlgebra(s.to_string()));
        }
        let rank: usize = rest.parse().map_err(|_| Error::ParseAlgebra(s.to_string()))?;
        AlgebraId::new(family, rank)
    }
}

/// An integral weight given by its Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i32>);

impl Weight {
    pub fn new(labels: Vec<i32>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight λ_i, with `i` counted from 1.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "fundamental index {i} out of range 1..={rank}");
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn labels(&self) -> &[i32] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Renders the weight as a combination of fundamental weights, e.g. `2λ1+λ3`.
    pub fn notation(&self) -> String {
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("λ{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(',')
            .map(|p| p.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseWeight(s.to_string()))?;
        Ok(Weight(labels))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Weight> for i32 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        Weight(rhs.0.iter().map(|a| self * a).collect())
    }
}

/// Output of [`RootSystem::to_dominant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantForm {
    pub dominant: Weight,
    /// (−1)^(number of simple reflections applied); +1 when `on_wall`.
    pub parity: i32,
    pub on_wall: bool,
}

/// Immutable root datum of one simple Lie algebra.
#[derive(Clone, Debug)]
pub struct RootSystem {
    algebra: AlgebraId,
    cartan: Vec<Vec<i32>>,
    half_norms: Vec<Rational>,
    gram: Vec<Vec<Rational>>,
    gram_scaled: Vec<Vec<i64>>,
    gram_denominator: i64,
    inverse_cartan: Vec<Vec<Rational>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    positive_root_coeffs: Vec<Vec<i32>>,
    rho: Weight,
    theta: Weight,
    beta: Weight,
    dual_coxeter: i64,
    long_simple: Vec<bool>,
    comarks: Vec<i64>,
    alpha_theta: Vec<i64>,
    rho_pairings_scaled: Vec<i64>,
    neighbors: Vec<Vec<(usize, i32)>>,
}

/// Off-diagonal Dynkin bonds `(i, j, a_ij, a_ji)`, zero-based.
fn bonds(algebra: AlgebraId) -> Vec<(usize, usize, i32, i32)> {
    let l = algebra.rank();
    let chain = |n: usize| (0..n.saturating_sub(1)).map(|i| (i, i + 1, -1, -1)).collect::<Vec<_>>();
    match algebra.family() {
        Family::A => chain(l),
        Family::B => {
            let mut b = chain(l - 1);
            b.push((l - 2, l - 1, -2, -1));
            b
        }
        Family::C => {
            let mut b = chain(l - 1);
            b.push((l - 2, l - 1, -1, -2));
            b
        }
        Family::D => {
            let mut b = chain(l - 1);
            b.push((l - 3, l - 1, -1, -1));
            b
        }
        Family::E => {
            // 1-3-4-5-...-l with 2 attached to 4.
            let mut b = vec![(0, 2, -1, -1), (1, 3, -1, -1)];
            for i in 2..l - 1 {
                b.push((i, i + 1, -1, -1));
            }
            b
        }
        Family::F => vec![(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)],
        Family::G => vec![(0, 1, -1, -3)],
    }
}

fn rational_inverse(m: &[Vec<i32>]) -> (Vec<Vec<Rational>>, Rational) {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x as i64)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let mut det = Rational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("Cartan matrix is nonsingular");
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    (inv, det)
}

impl RootSystem {
    pub fn new(algebra: AlgebraId) -> Result<Self> {
        // Re-validate in case the id was deserialized.
        let algebra = AlgebraId::new(algebra.family(), algebra.rank())?;
        let r = algebra.rank();
        let mut cartan = vec![vec![0i32; r]; r];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, aij, aji) in bonds(algebra) {
            cartan[i][j] = aij;
            cartan[j][i] = aji;
        }

        // Symmetrize: d_i a_ij = d_j a_ji, where d_i = (α_i, α_i)/2.
        let mut d: Vec<Option<Rational>> = vec![None; r];
        d[0] = Some(Rational::one());
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            for j in 0..r {
                if i != j && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].unwrap();
                    d[j] = Some(di * Rational::from_integer(cartan[j][i] as i64)
                        / Rational::from_integer(cartan[i][j] as i64));
                    stack.push(j);
                }
            }
        }
        let d: Vec<Rational> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
        let max = d.iter().copied().max().unwrap();
        let half_norms: Vec<Rational> = d.iter().map(|&x| x / max).collect();
        let long_simple: Vec<bool> = half_norms.iter().map(|&x| x == Rational::one()).collect();

        let (inverse_cartan, det) = rational_inverse(&cartan);
        let gram: Vec<Vec<Rational>> = (0..r)
            .map(|k| (0..r).map(|j| inverse_cartan[k][j] * half_norms[j]).collect())
            .collect();
        for i in 0..r {
            for j in 0..r {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Invariant(format!("{algebra}: gram matrix is not symmetric")));
                }
            }
        }
        let gram_denominator = gram.iter().flatten().fold(1i64, |acc, x| acc.lcm(x.denom()));
        let gram_scaled: Vec<Vec<i64>> = gram
            .iter()
            .map(|row| row.iter().map(|x| (x * gram_denominator).to_integer()).collect())
            .collect();

        let simple_roots: Vec<Weight> = cartan.iter().map(|row| Weight(row.clone())).collect();
        let labels_of = |coeffs: &[i32]| -> Vec<i32> {
            (0..r).map(|j| (0..r).map(|i| coeffs[i] * cartan[i][j]).sum()).collect()
        };

        // Positive roots by height, using root strings: α + α_i is a root iff
        // p − ⟨α, α_i^∨⟩ > 0 where p is the length of the downward α_i-string.
        let mut coeffs: Vec<Vec<i32>> = (0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect();
        let mut known: HashSet<Vec<i32>> = coeffs.iter().cloned().collect();
        let mut frontier = coeffs.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for alpha in &frontier {
                let labels = labels_of(alpha);
                for i in 0..r {
                    let mut p = 0;
                    loop {
                        let mut lower = alpha.clone();
                        lower[i] -= p + 1;
                        if lower[i] >= 0 && known.contains(&lower) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - labels[i] > 0 {
                        let mut up = alpha.clone();
                        up[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            coeffs.extend(next.iter().cloned());
            frontier = next;
        }
        coeffs.sort_by_key(|c| (c.iter().sum::<i32>(), c.iter().map(|x| -x).collect::<Vec<_>>()));
        let positive_roots: Vec<Weight> = coeffs.iter().map(|c| Weight(labels_of(c))).collect();

        let mut rs = RootSystem {
            algebra,
            cartan: cartan.clone(),
            half_norms,
            gram,
            gram_scaled,
            gram_denominator,
            inverse_cartan,
            simple_roots,
            positive_roots,
            positive_root_coeffs: coeffs,
            rho: Weight(vec![1; r]),
            theta: Weight::zero(r),
            beta: Weight::zero(r),
            dual_coxeter: 0,
            long_simple,
            comarks: vec![],
            alpha_theta: vec![],
            rho_pairings_scaled: vec![],
            neighbors: vec![],
        };

        let theta = rs.positive_roots.last().cloned().unwrap();
        let beta = rs
            .positive_roots
            .iter()
            .filter(|a| a.is_dominant())
            .min_by_key(|a| rs.norm2(a))
            .cloned()
            .unwrap();
        if rs.norm2(&theta) != Rational::from_integer(2) || !theta.is_dominant() {
            return Err(Error::Invariant(format!("{algebra}: highest root has (θ,θ) ≠ 2")));
        }
        let comarks: Vec<i64> = (0..r)
            .map(|i| rs.inner(&Weight::fundamental(r, i + 1), &theta))
            .map(|x| {
                if x.is_integer() {
                    Ok(x.to_integer())
                } else {
                    Err(Error::Invariant("non-integral comark".into()))
                }
            })
            .collect::<Result<_>>()?;
        let alpha_theta: Vec<i64> = (0..r)
            .map(|i| (0..r).map(|j| cartan[i][j] as i64 * comarks[j]).sum())
            .collect();
        let rho_theta = rs.inner(&rs.rho, &theta);
        if !rho_theta.is_integer() {
            return Err(Error::Invariant("(ρ, θ) is not an integer".into()));
        }
        rs.dual_coxeter = rho_theta.to_integer() + 1;
        rs.rho_pairings_scaled = (0..r)
            .map(|i| (0..r).map(|j| rs.gram_scaled[i][j]).sum())
            .collect();
        rs.neighbors = (0..r)
            .map(|i| (0..r).filter(|&j| j != i && cartan[i][j] != 0).map(|j| (j, cartan[i][j])).collect())
            .collect();
        rs.theta = theta;
        rs.beta = beta;
        rs.comarks = comarks;
        rs.alpha_theta = alpha_theta;

        let det_int = det.to_integer();
        if !det.is_integer() || det_int <= 0 {
            return Err(Error::Invariant("Cartan determinant is not a positive integer".into()));
        }
        Ok(rs)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// Least common denominator of the gram matrix entries.
    pub fn gram_denominator(&self) -> i64 {
        self.gram_denominator
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in simple-root coordinates, aligned with [`Self::positive_roots`].
    pub fn positive_root_coefficients(&self) -> &[Vec<i32>] {
        &self.positive_root_coeffs
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Highest root.
    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    /// Dominant short root (equal to θ in simply-laced types).
    pub fn beta(&self) -> &Weight {
        &self.beta
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn long_simple(&self) -> &[bool] {
        &self.long_simple
    }

    pub fn is_simply_laced(&self) -> bool {
        self.long_simple.iter().all(|&b| b)
    }

    /// (λ_i, θ) for every fundamental weight.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    /// (α_i, α_i) / 2.
    pub fn half_norms(&self) -> &[Rational] {
        &self.half_norms
    }

    pub fn cartan_determinant(&self) -> i64 {
        rational_inverse(&self.cartan).1.to_integer()
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                weight: w.clone(),
                found: w.rank(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    /// Exact value of (μ, ν).
    pub fn inner_product(&self, mu: &Weight, nu: &Weight) -> Result<Rational> {
        self.check_rank(mu)?;
        self.check_rank(nu)?;
        Ok(self.inner(mu, nu))
    }

    pub(crate) fn inner(&self, mu: &Weight, nu: &Weight) -> Rational {
        Rational::new(self.inner_scaled(mu.labels(), nu.labels()), self.gram_denominator)
    }

    /// D · (μ, ν) as an integer, D being [`Self::gram_denominator`].
    pub(crate) fn inner_scaled(&self, mu: &[i32], nu: &[i32]) -> i64 {
        let mut acc = 0i64;
        for (i, &a) in mu.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let row = &self.gram_scaled[i];
            let s: i64 = nu.iter().zip(row).map(|(&b, &g)| b as i64 * g).sum();
            acc += a as i64 * s;
        }
        acc
    }

    /// D · (μ, ρ).
    pub(crate) fn rho_pairing_scaled(&self, mu: &[i32]) -> i64 {
        mu.iter().zip(&self.rho_pairings_scaled).map(|(&a, &g)| a as i64 * g).sum()
    }

    pub fn norm2(&self, mu: &Weight) -> Rational {
        self.inner(mu, mu)
    }

    /// (μ, θ), always an integer for integral weights.
    pub fn level_of(&self, mu: &[i32]) -> i64 {
        mu.iter().zip(&self.comarks).map(|(&a, &c)| a as i64 * c).sum()
    }

    /// Coefficients of μ in the simple-root basis.
    pub fn root_coordinates(&self, mu: &Weight) -> Vec<Rational> {
        let r = self.rank();
        (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| Rational::from_integer(mu.labels()[i] as i64) * self.inverse_cartan[i][j])
                    .sum()
            })
            .collect()
    }

    pub fn in_root_lattice(&self, mu: &Weight) -> bool {
        self.root_coordinates(mu).iter().all(|c| c.is_integer())
    }

    /// Membership in the coroot lattice spanned by α_i^∨ = α_i / d_i.
    pub fn in_coroot_lattice(&self, mu: &Weight) -> bool {
        self.root_coordinates(mu)
            .iter()
            .zip(&self.half_norms)
            .all(|(c, d)| (c * d).is_integer())
    }

    /// Builds Σ c_i α_i from simple-root coefficients.
    pub fn from_root_coordinates(&self, coeffs: &[i32]) -> Weight {
        let r = self.rank();
        Weight((0..r).map(|j| (0..r).map(|i| coeffs[i] * self.cartan[i][j]).sum()).collect())
    }

    /// Applies the simple reflection s_i in place (zero-based `i`).
    #[inline]
    pub(crate) fn reflect_in_place(&self, x: &mut [i64], i: usize) {
        let c = x[i];
        x[i] = -c;
        for &(j, a) in &self.neighbors[i] {
            x[j] -= c * a as i64;
        }
    }

    #[inline]
    pub(crate) fn reflect_in_place_i32(&self, x: &mut [i32], i: usize) {
        let c = x[i];
        x[i] = -c;
        for &(j, a) in &self.neighbors[i] {
            x[j] -= c * a;
        }
    }

    /// (α_i, θ) for each simple root.
    pub(crate) fn alpha_theta(&self) -> &[i64] {
        &self.alpha_theta
    }

    /// Dominant representative of the Weyl orbit of μ.
    ///
    /// Repeatedly reflects at the lowest-indexed negative label.
    pub fn to_dominant(&self, mu: &Weight) -> Result<DominantForm> {
        self.check_rank(mu)?;
        let mut x = mu.labels().to_vec();
        let mut parity = 1;
        while let Some(i) = x.iter().position(|&c| c < 0) {
            self.reflect_in_place_i32(&mut x, i);
            parity = -parity;
        }
        let on_wall = x.contains(&0);
        Ok(DominantForm {
            dominant: Weight(x),
            parity: if on_wall { 1 } else { parity },
            on_wall,
        })
    }

    pub(crate) fn dominant_labels(&self, x: &mut [i32]) {
        while let Some(i) = x.iter().position(|&c| c < 0) {
            self.reflect_in_place_i32(x, i);
        }
    }

    /// Visits every element of the Weyl orbit of a dominant weight exactly once.
    ///
    /// Walks the tree whose parent map is the first step of [`Self::to_dominant`],
    /// so no visited-set is needed.
    pub fn for_each_in_orbit(&self, dominant: &[i32], mut f: impl FnMut(&[i32])) {
        let r = dominant.len();
        debug_assert!(dominant.iter().all(|&c| c >= 0));
        let mut stack: Vec<i32> = dominant.to_vec();
        let mut cur = vec![0i32; r];
        let mut child = vec![0i32; r];
        while stack.len() >= r {
            let top = stack.len() - r;
            cur.copy_from_slice(&stack[top..]);
            stack.truncate(top);
            f(&cur);
            for i in 0..r {
                if cur[i] <= 0 {
                    continue;
                }
                child.copy_from_slice(&cur);
                self.reflect_in_place_i32(&mut child, i);
                if child[..i].iter().all(|&c| c >= 0) {
                    stack.extend_from_slice(&child);
                }
            }
        }
    }

    pub fn orbit_size(&self, dominant: &Weight) -> u64 {
        let mut n = 0u64;
        self.for_each_in_orbit(dominant.labels(), |_| n += 1);
        n
    }

    /// Weyl dimension formula Π_{α>0} (λ+ρ, α)/(ρ, α).
    pub fn weyl_dimension(&self, lambda: &Weight) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        let shifted = lambda + &self.rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &self.positive_roots {
            num *= BigInt::from(self.inner_scaled(shifted.labels(), alpha.labels()));
            den *= BigInt::from(self.inner_scaled(self.rho.labels(), alpha.labels()));
        }
        let (q, rem) = num.div_rem(&den);
        debug_assert!(rem.is_zero());
        q
    }

    /// Group P^∨/Q^∨ realized on the minuscule long fundamental weights.
    pub fn center(&self) -> CenterMap {
        CenterMap::build(self)
    }
}

/// One element z of Z(G), with ℓ(z) given as a weight (zero for the identity).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterElement {
    pub id: usize,
    /// Fundamental index `i` (1-based) with ℓ(z) = λ_i; `None` for the identity.
    pub node: Option<usize>,
    pub weight: Weight,
}

/// A subgroup of the center, as a sorted list of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subgroup {
    pub elements: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|e| other.elements.contains(e))
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.elements.iter().map(|e| format!("z{e}")).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// Center of the simply connected group, with the map ℓ and its pairing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CenterMap {
    elements: Vec<CenterElement>,
    table: Vec<Vec<usize>>,
    order_structure: Vec<usize>,
    #[serde(skip)]
    gram: Vec<Vec<Rational>>,
}

impl CenterMap {
    fn build(rs: &RootSystem) -> CenterMap {
        let r = rs.rank();
        let mut elements = vec![CenterElement {
            id: 0,
            node: None,
            weight: Weight::zero(r),
        }];
        for i in 0..r {
            if rs.comarks[i] == 1 && rs.long_simple[i] {
                elements.push(CenterElement {
                    id: elements.len(),
                    node: Some(i + 1),
                    weight: Weight::fundamental(r, i + 1),
                });
            }
        }
        let n = elements.len();
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                let sum = &elements[a].weight + &elements[b].weight;
                table[a][b] = (0..n)
                    .find(|&c| rs.in_coroot_lattice(&(&sum - &elements[c].weight)))
                    .expect("center is closed under multiplication");
            }
        }
        let order_of = |a: usize| {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table[x][a];
                k += 1;
            }
            k
        };
        let order_structure = if n == 1 {
            vec![1]
        } else if (0..n).any(|a| order_of(a) == n) {
            vec![n]
        } else {
            vec![2, 2]
        };
        CenterMap {
            elements,
            table,
            order_structure,
            gram: rs.gram.clone(),
        }
    }

    pub fn elements(&self) -> &[CenterElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Orders of the cyclic factors: `[n]` for ℤ/n, `[2, 2]` for the Klein group.
    pub fn order_structure(&self) -> &[usize] {
        &self.order_structure
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// (γ, ℓ(z)) as an exact rational.
    pub fn pairing(&self, gamma: &Weight, z: usize) -> Rational {
        let w = &self.elements[z].weight;
        let mut acc = Rational::zero();
        for (i, &a) in gamma.labels().iter().enumerate() {
            for (j, &b) in w.labels().iter().enumerate() {
                if a != 0 && b != 0 {
                    acc += self.gram[i][j] * (a as i64 * b as i64);
                }
            }
        }
        acc
    }

    /// e^{2πi(γ, ℓ(z))} is trivial.
    pub fn acts_trivially(&self, gamma: &Weight, z: usize) -> bool {
        self.pairing(gamma, z).is_integer()
    }

    fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut set: Vec<usize> = vec![0];
        let mut frontier: Vec<usize> = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.table[x][g];
                if !set.contains(&y) {
                    set.push(y);
                    frontier.push(y);
                }
            }
        }
        set.sort_unstable();
        Subgroup { elements: set }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order()).collect(),
        }
    }

    /// Every subgroup, sorted by order. Centers here are cyclic or ℤ/2×ℤ/2,
    /// so every subgroup is generated by at most two elements.
    pub fn subgroups(&self) -> Vec<Subgroup> {
        let n = self.order();
        let mut seen: HashMap<Vec<usize>, Subgroup> = HashMap::new();
        for a in 0..n {
            for b in a..n {
                let s = self.generate(&[a, b]);
                seen.entry(s.elements.clone()).or_insert(s);
            }
        }
        let mut out: Vec<Subgroup> = seen.into_values().collect();
        out.sort_by(|x, y| (x.order(), &x.elements).cmp(&(y.order(), &y.elements)));
        out
    }
}

pub fn build_root_system(algebra: AlgebraId) -> Result<RootSystem> {
    RootSystem::new(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rejects_bad_ranks() {
        for s in ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "E", "Ex"] {
            assert!(s.parse::<AlgebraId>().is_err(), "{s}");
        }
        assert!(matches!(AlgebraId::new(Family::D, 2), Err(Error::InvalidRank { .. })));
    }

    #[test]
    fn algebra_id_round_trip() {
        for (s, norm) in [("E7", "E7"), ("e_7", "E7"), ("b13", "B13"), (" A1 ", "A1")] {
            let id: AlgebraId = s.parse().unwrap();
            assert_eq!(id.to_string(), norm);
            assert_eq!(id.to_string().parse::<AlgebraId>().unwrap(), id);
        }
    }

    #[test]
    fn dual_coxeter_table() {
        let table = [
            ("A1", 2), ("A2", 3), ("A5", 6), ("B2", 3), ("B3", 5), ("B4", 7), ("B13", 25),
            ("C2", 3), ("C3", 4), ("C5", 6), ("D3", 4), ("D4", 6), ("D6", 10), ("D9", 16),
            ("E6", 12), ("E7", 18), ("E8", 30), ("F4", 9), ("G2", 4),
        ];
        for (name, h) in table {
            assert_eq!(rs(name).dual_coxeter(), h, "{name}");
        }
    }

    #[test]
    fn positive_root_counts() {
        let table = [
            ("A1", 1), ("A3", 6), ("B2", 4), ("B4", 16), ("B13", 169), ("C3", 9),
            ("D4", 12), ("D9", 72), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6),
        ];
        for (name, n) in table {
            assert_eq!(rs(name).positive_roots().len(), n, "{name}");
        }
    }

    #[test]
    fn rank_one() {
        let a1 = rs("A1");
        assert_eq!(a1.positive_roots(), &[Weight::new(vec![2])]);
        assert_eq!(a1.theta(), &Weight::new(vec![2]));
        assert_eq!(a1.beta(), a1.theta());
        assert_eq!(a1.gram()[0][0], q(1, 2));
    }

    #[test]
    fn highest_and_short_roots() {
        assert_eq!(rs("B4").theta(), &Weight::fundamental(4, 2));
        assert_eq!(rs("B4").beta(), &Weight::fundamental(4, 1));
        assert_eq!(rs("C3").theta(), &Weight::new(vec![2, 0, 0]));
        assert_eq!(rs("C3").beta(), &Weight::fundamental(3, 2));
        assert_eq!(rs("F4").theta(), &Weight::fundamental(4, 1));
        assert_eq!(rs("F4").beta(), &Weight::fundamental(4, 4));
        assert_eq!(rs("G2").theta(), &Weight::fundamental(2, 2));
        assert_eq!(rs("G2").beta(), &Weight::fundamental(2, 1));
        assert_eq!(rs("E7").theta(), &Weight::fundamental(7, 1));
        assert_eq!(rs("E8").theta(), &Weight::fundamental(8, 8));
        assert_eq!(rs("D6").theta(), &Weight::fundamental(6, 2));
    }

    #[test]
    fn inner_products_e7_e8_b() {
        let e8 = rs("E8");
        let l1 = Weight::fundamental(8, 1);
        assert_eq!(e8.inner_product(&l1, &l1).unwrap(), q(4, 1));
        assert_eq!(e8.inner_product(&l1, e8.rho()).unwrap(), q(46, 1));
        let e7 = rs("E7");
        let l6 = Weight::fundamental(7, 6);
        assert_eq!(e7.inner_product(&l6, &l6).unwrap(), q(4, 1));
        assert_eq!(e7.inner_product(&l6, e7.rho()).unwrap(), q(26, 1));
        for l in [3usize, 4, 5, 13] {
            let b = rs(&format!("B{l}"));
            for i in 1..l {
                let li = Weight::fundamental(l, i);
                assert_eq!(b.inner_product(&li, &li).unwrap(), q(i as i64, 1));
                let expect = q((l * i) as i64, 1) - q((i * i) as i64, 2);
                assert_eq!(b.inner_product(b.rho(), &li).unwrap(), expect);
            }
        }
        assert!(e8.inner_product(&l1, &Weight::zero(7)).is_err());
        assert_eq!(e8.inner_product(&Weight::zero(8), &l1).unwrap(), q(0, 1));
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for name in ["A3", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let s = rs(name);
            let r = s.rank();
            for i in 0..r {
                for j in 0..r {
                    let v = s.inner(&Weight::fundamental(r, i + 1), &s.simple_roots()[j]);
                    let expect = if i == j { s.half_norms()[j] } else { Rational::zero() };
                    assert_eq!(v, expect, "{name} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn root_lengths() {
        for name in ["A4", "B3", "C4", "D4", "E6", "F4", "G2"] {
            let s = rs(name);
            let lengths: HashSet<Rational> = s.positive_roots().iter().map(|a| s.norm2(a)).collect();
            let expected = if s.is_simply_laced() { 1 } else { 2 };
            assert_eq!(lengths.len(), expected, "{name}");
            assert!(lengths.contains(&q(2, 1)));
            for a in s.positive_roots() {
                let d = s.to_dominant(a).unwrap().dominant;
                assert!(&d == s.theta() || &d == s.beta(), "{name}: {a}");
            }
        }
    }

    #[test]
    fn to_dominant_examples() {
        let a1 = rs("A1");
        let f = a1.to_dominant(&Weight::new(vec![-3])).unwrap();
        assert_eq!((f.dominant, f.parity, f.on_wall), (Weight::new(vec![3]), -1, false));
        let a2 = rs("A2");
        let f = a2.to_dominant(&Weight::new(vec![-1, 2])).unwrap();
        assert_eq!((f.dominant, f.parity, f.on_wall), (Weight::new(vec![1, 1]), -1, false));
        let f = a2.to_dominant(&Weight::new(vec![2, 0])).unwrap();
        assert_eq!((f.parity, f.on_wall), (1, true));
        let f = a2.to_dominant(&Weight::new(vec![1, 1])).unwrap();
        assert_eq!((f.parity, f.on_wall), (1, false));
    }

    #[test]
    fn orbit_enumeration_matches_brute_force() {
        for name in ["A2", "A3", "B3", "C3", "G2"] {
            let s = rs(name);
            let r = s.rank();
            let mut samples = vec![Weight::new(vec![1; r]), Weight::new(vec![0; r])];
            samples.push(Weight::fundamental(r, 1));
            samples.push(Weight::fundamental(r, r));
            for d in samples {
                let mut fast = Vec::new();
                s.for_each_in_orbit(d.labels(), |w| fast.push(w.to_vec()));
                let mut brute: HashSet<Vec<i32>> = HashSet::new();
                let mut todo = vec![d.labels().to_vec()];
                while let Some(w) = todo.pop() {
                    if brute.insert(w.clone()) {
                        for i in 0..r {
                            let mut c = w.clone();
                            s.reflect_in_place_i32(&mut c, i);
                            todo.push(c);
                        }
                    }
                }
                let fast_set: HashSet<Vec<i32>> = fast.iter().cloned().collect();
                assert_eq!(fast.len(), fast_set.len(), "{name} {d}: duplicates");
                assert_eq!(fast_set, brute, "{name} {d}");
            }
        }
    }

    #[test]
    fn to_dominant_parity_matches_brute_force_rank_le_3() {
        // Breadth-first search over reflection words gives a shortest word,
        // whose length parity is the sign of the Weyl element.
        for name in ["A2", "A3", "B3", "C3"] {
            let s = rs(name);
            let r = s.rank();
            let start = Weight::new(vec![1; r]);
            let mut dist: HashMap<Vec<i32>, usize> = HashMap::new();
            let mut queue = std::collections::VecDeque::new();
            dist.insert(start.labels().to_vec(), 0);
            queue.push_back(start.labels().to_vec());
            while let Some(w) = queue.pop_front() {
                let dw = dist[&w];
                for i in 0..r {
                    let mut c = w.clone();
                    s.reflect_in_place_i32(&mut c, i);
                    if !dist.contains_key(&c) {
                        dist.insert(c.clone(), dw + 1);
                        queue.push_back(c);
                    }
                }
            }
            for (w, d) in dist {
                let f = s.to_dominant(&Weight::new(w)).unwrap();
                assert_eq!(f.dominant, start);
                assert_eq!(f.parity, if d % 2 == 0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn centers() {
        let orders = [("A1", 2), ("A4", 5), ("B4", 2), ("C3", 2), ("D5", 4), ("D6", 4), ("E6", 3), ("E7", 2), ("E8", 1), ("F4", 1), ("G2", 1)];
        for (name, n) in orders {
            let s = rs(name);
            let c = s.center();
            assert_eq!(c.order(), n, "{name}");
            assert_eq!(s.cartan_determinant() as usize, n, "{name}");
            for z in c.elements().iter().skip(1) {
                let i = z.node.unwrap();
                assert_eq!(s.comarks()[i - 1], 1);
                assert!(s.long_simple()[i - 1]);
            }
        }
        let e7 = rs("E7").center();
        assert_eq!(e7.elements()[1].node, Some(7));
        assert_eq!(rs("B4").center().elements()[1].node, Some(1));
        let d6 = rs("D6").center();
        assert_eq!(d6.order_structure(), &[2, 2]);
        let nodes: Vec<_> = d6.elements().iter().map(|z| z.node).collect();
        assert_eq!(nodes, vec![None, Some(1), Some(5), Some(6)]);
        // λ5 · λ6 = λ1 modulo the coroot lattice.
        assert_eq!(d6.multiply(2, 3), 1);
        assert_eq!(rs("D5").center().order_structure(), &[4]);
        assert_eq!(rs("E8").center().order_structure(), &[1]);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(rs("E8").center().subgroups().len(), 1);
        assert_eq!(rs("E7").center().subgroups().len(), 2);
        assert_eq!(rs("D6").center().subgroups().len(), 5);
        assert_eq!(rs("A5").center().subgroups().len(), 4);
        assert_eq!(rs("D5").center().subgroups().len(), 3);
    }

    #[test]
    fn pairing_is_a_character() {
        for name in ["A3", "D6", "E6", "E7", "B4", "C3", "D5"] {
            let s = rs(name);
            let c = s.center();
            let r = s.rank();
            let ws: Vec<Weight> = (1..=r).map(|i| Weight::fundamental(r, i)).collect();
            for z in 0..c.order() {
                for a in &ws {
                    for b in &ws {
                        let lhs = c.pairing(&(a + b), z);
                        let rhs = c.pairing(a, z) + c.pairing(b, z);
                        assert!((lhs - rhs).is_integer());
                    }
                }
                for z2 in 0..c.order() {
                    for a in &ws {
                        let lhs = c.pairing(a, c.multiply(z, z2));
                        let rhs = c.pairing(a, z) + c.pairing(a, z2);
                        assert!((lhs - rhs).is_integer(), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn notation() {
        assert_eq!(Weight::new(vec![2, 0, 1]).notation(), "2λ1+λ3");
        assert_eq!(Weight::new(vec![0, 0]).notation(), "0");
        assert_eq!(Weight::new(vec![-1, 2]).notation(), "-λ1+2λ2");
        assert_eq!("1, 0,-2".parse::<Weight>().unwrap(), Weight::new(vec![1, 0, -2]));
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn weyl_dimension_adjoint() {
        for (name, dim) in [("A1", 3), ("A2", 8), ("B3", 21), ("C3", 21), ("D4", 28), ("E6", 78), ("E7", 133), ("E8", 248), ("F4", 52), ("G2", 14)] {
            let s = rs(name);
            assert_eq!(s.weyl_dimension(s.theta()), dim.into(), "{name}");
        }
    }
}
