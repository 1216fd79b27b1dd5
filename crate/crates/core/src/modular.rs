//! Twists, quantum dimensions, the Hopf-link S-matrix, and degenerate objects
//! of closed subsets.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::closed_subsets::{closure_of_indices, ClosedSubset};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::fusion::FusionRing;
use crate::root_system::{Rational, Weight};

/// Degenerate sets above this size are not matched against the catalog.
pub const MAX_CATALOG_SIZE: usize = 24;

/// Order N = 2(k+ȟ)D of the cyclotomic field holding twists and qdims.
pub fn cyclotomic_order(ring: &FusionRing) -> u64 {
    (2 * ring.shifted_level() * ring.root_system().gram_denominator()) as u64
}

/// D · (λ, λ + 2ρ).
fn casimir_scaled(ring: &FusionRing, i: usize) -> i64 {
    let rs = ring.root_system();
    let l = ring.weight(i).labels();
    rs.inner_scaled(l, l) + 2 * rs.rho_pairing_scaled(l)
}

/// t with C_λ = e^{iπt}: t = (λ, λ+2ρ)/(k+ȟ) reduced into [0, 2).
pub fn twist_exponent(ring: &FusionRing, i: usize) -> Rational {
    let d = ring.root_system().gram_denominator();
    let t = Rational::new(casimir_scaled(ring, i), ring.shifted_level() * d);
    reduce_mod_2(t)
}

fn reduce_mod_2(t: Rational) -> Rational {
    let two = Rational::from_integer(2);
    let q = (t / two).floor();
    t - q * two
}

/// C_λ as an element of ℚ(ζ_N).
pub fn twist_exact(ring: &FusionRing, i: usize) -> CyclotomicNumber {
    CyclotomicNumber::root_of_unity(cyclotomic_order(ring), casimir_scaled(ring, i))
}

fn twist_complex(ring: &FusionRing, i: usize) -> Complex64 {
    let t = twist_exponent(ring, i);
    Complex64::from_polar(1.0, PI * *t.numer() as f64 / *t.denom() as f64)
}

/// Quantum dimension Π_{α>0} sin(π(λ+ρ,α)/(k+ȟ)) / sin(π(ρ,α)/(k+ȟ)).
pub fn qdim(ring: &FusionRing, i: usize) -> f64 {
    let rs = ring.root_system();
    let shifted = ring.weight(i) + rs.rho();
    let scale = PI / (ring.shifted_level() * rs.gram_denominator()) as f64;
    let mut value = 1.0;
    for alpha in rs.positive_roots() {
        let num = (scale * rs.inner_scaled(shifted.labels(), alpha.labels()) as f64).sin();
        let den = (scale * rs.inner_scaled(rs.rho().labels(), alpha.labels()) as f64).sin();
        value *= num / den;
    }
    value
}

/// Σ_ν m(ν) ζ_N^{2D(ν,ρ)} as counts indexed by exponent mod N.
fn qdim_counts(ring: &FusionRing, i: usize) -> Result<Vec<i128>> {
    let rs = ring.root_system();
    let n = cyclotomic_order(ring) as i64;
    let mut counts = vec![0i128; n as usize];
    ring.character(i)?.for_each_weight(rs, |nu, m| {
        let e = (2 * rs.rho_pairing_scaled(nu)).rem_euclid(n);
        counts[e as usize] += m as i128;
    });
    Ok(counts)
}

fn to_cyclotomic(order: u64, counts: &[i128]) -> CyclotomicNumber {
    let big: Vec<BigInt> = counts.iter().map(|&c| BigInt::from(c)).collect();
    CyclotomicNumber::from_power_counts(order, &big)
}

/// Quantum dimension as the character evaluated at e^{2πiρ/(k+ȟ)}, exactly.
pub fn qdim_exact(ring: &FusionRing, i: usize) -> Result<CyclotomicNumber> {
    Ok(to_cyclotomic(cyclotomic_order(ring), &qdim_counts(ring, i)?))
}

/// S_{λγ} = Σ_μ N_{λγ}^μ C_μ C_λ^{-1} C_γ^{-1} qdim(μ).
pub fn s_entry(ring: &FusionRing, a: usize, b: usize) -> Result<Complex64> {
    let phase = (twist_complex(ring, a) * twist_complex(ring, b)).conj();
    let mut acc = Complex64::new(0.0, 0.0);
    for &(c, m) in ring.product(a, b)? {
        acc += twist_complex(ring, c) * (m as f64 * qdim(ring, c));
    }
    Ok(acc * phase)
}

/// Exact S-matrix entry in ℚ(ζ_N).
pub fn s_entry_exact(ring: &FusionRing, a: usize, b: usize) -> Result<CyclotomicNumber> {
    let n = cyclotomic_order(ring) as i64;
    let mut acc = vec![0i128; n as usize];
    let shift_ab = casimir_scaled(ring, a) + casimir_scaled(ring, b);
    for &(c, m) in ring.product(a, b)? {
        let shift = casimir_scaled(ring, c) - shift_ab;
        for (e, &v) in qdim_counts(ring, c)?.iter().enumerate() {
            if v != 0 {
                acc[(e as i64 + shift).rem_euclid(n) as usize] += m as i128 * v;
            }
        }
    }
    Ok(to_cyclotomic(n as u64, &acc))
}

/// Numeric S-matrix on the given members (rows and columns in that order).
pub fn s_matrix(ring: &FusionRing, members: &[usize]) -> Result<Vec<Vec<Complex64>>> {
    members
        .iter()
        .map(|&a| members.iter().map(|&b| s_entry(ring, a, b)).collect())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degenerate {
    pub index: usize,
    pub weight: Weight,
    pub parity: Parity,
    pub invertible: bool,
}

/// λ double-braids trivially with every member: t_μ − t_λ − t_γ ∈ 2ℤ on every summand μ of λ ⊗ γ.
pub fn is_degenerate(ring: &FusionRing, subset: &ClosedSubset, i: usize) -> Result<bool> {
    if !subset.contains(i) {
        return Err(Error::NotMember(ring.weight(i).clone()));
    }
    let ti = twist_exponent(ring, i);
    for g in subset.members() {
        let tg = twist_exponent(ring, g);
        for &(m, _) in ring.product(i, g)? {
            let diff = twist_exponent(ring, m) - ti - tg;
            if !reduce_mod_2(diff).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Support of λ ⊗ λ† is {0}.
pub fn is_invertible(ring: &FusionRing, i: usize) -> Result<bool> {
    Ok(ring.product(i, ring.dual(i))?.as_slice() == [(0, 1)])
}

pub fn degenerate_report(ring: &FusionRing, subset: &ClosedSubset) -> Result<Vec<Degenerate>> {
    let mut out = Vec::new();
    for i in subset.members() {
        if !is_degenerate(ring, subset, i)? {
            continue;
        }
        let t = twist_exponent(ring, i);
        let parity = if t.is_zero() {
            Parity::Even
        } else if t == Rational::from_integer(1) {
            Parity::Odd
        } else {
            return Err(Error::Invariant(format!(
                "degenerate object {} has twist exponent {t}, expected 0 or 1 mod 2",
                ring.weight(i)
            )));
        };
        out.push(Degenerate {
            index: i,
            weight: ring.weight(i).clone(),
            parity,
            invertible: is_invertible(ring, i)?,
        });
    }
    Ok(out)
}

/// Fusion rings the degenerate subcategory is matched against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum RingTag {
    /// Representation ring of ℤ/n (n = 1 is the trivial group).
    Cyclic { n: usize },
    /// Representation ring of ℤ/2 × ℤ/2.
    KleinFour,
    /// Representation ring of ⟨x, y | x² = y² = (xy)^d = 1⟩, d odd.
    Dihedral { d: usize },
    Unidentified { size: usize },
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::Cyclic { n: 1 } => write!(f, "trivial group"),
            RingTag::Cyclic { n } => write!(f, "Z/{n}"),
            RingTag::KleinFour => write!(f, "Z/2 x Z/2"),
            RingTag::Dihedral { d } => write!(f, "dihedral-type d={d}"),
            RingTag::Unidentified { size } => write!(f, "unidentified ({size} objects)"),
        }
    }
}

/// A based fusion ring given by qdims and structure constants, object 0 the unit.
struct ModelRing {
    tag: RingTag,
    dims: Vec<u32>,
    n: Vec<Vec<Vec<u32>>>,
}

fn group_model(tag: RingTag, size: usize, mul: impl Fn(usize, usize) -> usize) -> ModelRing {
    let mut n = vec![vec![vec![0; size]; size]; size];
    for (a, row) in n.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            cell[mul(a, b)] = 1;
        }
    }
    ModelRing {
        tag,
        dims: vec![1; size],
        n,
    }
}

fn dihedral_model(d: usize) -> ModelRing {
    // Objects: 0 = unit, 1 = sign, 1 + a = ρ_a for a = 1..(d−1)/2.
    let size = 2 + (d - 1) / 2;
    let mut n = vec![vec![vec![0u32; size]; size]; size];
    let rho = |c: usize| -> Vec<usize> {
        let c = c % d;
        let c = c.min(d - c);
        if c == 0 {
            vec![0, 1]
        } else {
            vec![1 + c]
        }
    };
    for a in 0..size {
        for b in 0..size {
            let out: Vec<usize> = match (a, b) {
                (0, x) | (x, 0) => vec![x],
                (1, 1) => vec![0],
                (1, x) | (x, 1) => vec![x],
                (x, y) => {
                    let (p, q) = (x - 1, y - 1);
                    let mut v = rho(p + q);
                    v.extend(rho(p.abs_diff(q)));
                    v
                }
            };
            for c in out {
                n[a][b][c] += 1;
            }
        }
    }
    let mut dims = vec![2; size];
    dims[0] = 1;
    dims[1] = 1;
    ModelRing {
        tag: RingTag::Dihedral { d },
        dims,
        n,
    }
}

fn candidate_models(size: usize) -> Vec<ModelRing> {
    let mut out = vec![group_model(RingTag::Cyclic { n: size }, size, |a, b| (a + b) % size)];
    if size == 4 {
        out.push(group_model(RingTag::KleinFour, 4, |a, b| a ^ b));
    }
    if size >= 3 {
        out.push(dihedral_model(2 * size - 3));
    }
    out
}

/// Finds a bijection objects → model preserving unit, qdims and structure constants.
fn matches_model(consts: &[Vec<Vec<u32>>], dims: &[f64], model: &ModelRing) -> bool {
    let size = dims.len();
    if model.dims.len() != size {
        return false;
    }
    let mut assign: Vec<Option<usize>> = vec![None; size];
    let mut used = vec![false; size];
    assign[0] = Some(0);
    used[0] = true;

    fn consistent(consts: &[Vec<Vec<u32>>], model: &ModelRing, assign: &[Option<usize>]) -> bool {
        let done: Vec<(usize, usize)> = assign.iter().enumerate().filter_map(|(i, a)| a.map(|m| (i, m))).collect();
        for &(a, ma) in &done {
            for &(b, mb) in &done {
                for &(c, mc) in &done {
                    if consts[a][b][c] != model.n[ma][mb][mc] {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn search(
        pos: usize,
        consts: &[Vec<Vec<u32>>],
        dims: &[f64],
        model: &ModelRing,
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == dims.len() {
            return true;
        }
        for m in 0..dims.len() {
            if used[m] || (dims[pos] - model.dims[m] as f64).abs() > 1e-6 {
                continue;
            }
            assign[pos] = Some(m);
            used[m] = true;
            if consistent(consts, model, assign) && search(pos + 1, consts, dims, model, assign, used) {
                return true;
            }
            assign[pos] = None;
            used[m] = false;
        }
        false
    }

    (dims[0] - 1.0).abs() < 1e-6 && search(1, consts, dims, model, &mut assign, &mut used)
}

/// Identifies the fusion ring spanned by `members` (which must include 0 first and be closed).
pub fn identify_degenerate_ring(ring: &FusionRing, members: &[usize]) -> Result<RingTag> {
    let size = members.len();
    if members.first() != Some(&0) {
        return Err(Error::Invariant("degenerate set must start with the unit".into()));
    }
    let closed = closure_of_indices(ring, members)?;
    if closed.len() != size {
        return Err(Error::Invariant(format!(
            "degenerate objects are not closed under fusion: closure is {}",
            closed.notation(ring)
        )));
    }
    if size > MAX_CATALOG_SIZE {
        return Ok(RingTag::Unidentified { size });
    }
    let mut consts = vec![vec![vec![0u32; size]; size]; size];
    for (a, &ia) in members.iter().enumerate() {
        for (b, &ib) in members.iter().enumerate() {
            for (c, &ic) in members.iter().enumerate() {
                consts[a][b][c] = ring.coefficient(ia, ib, ic)?;
            }
        }
    }
    let dims: Vec<f64> = members.iter().map(|&i| qdim(ring, i)).collect();
    for model in candidate_models(size) {
        if matches_model(&consts, &dims, &model) {
            return Ok(model.tag);
        }
    }
    Ok(RingTag::Unidentified { size })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// Only 0 is degenerate.
    ModularAsIs,
    /// Nontrivial degenerates, all even.
    ModularAfterQuotient,
    /// Some degenerate object is odd.
    SpinModular,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::ModularAsIs => "ModularAsIs",
            Verdict::ModularAfterQuotient => "ModularAfterQuotient",
            Verdict::SpinModular => "SpinModular",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct ModularityReport {
    pub verdict: Verdict,
    pub degenerates: Vec<Degenerate>,
    pub ring: RingTag,
}

pub fn modularity_report(ring: &FusionRing, subset: &ClosedSubset) -> Result<ModularityReport> {
    let degenerates = degenerate_report(ring, subset)?;
    let members: Vec<usize> = degenerates.iter().map(|d| d.index).collect();
    let tag = identify_degenerate_ring(ring, &members)?;
    let verdict = if degenerates.len() == 1 {
        Verdict::ModularAsIs
    } else if degenerates.iter().any(|d| d.parity == Parity::Odd) {
        Verdict::SpinModular
    } else {
        Verdict::ModularAfterQuotient
    };
    Ok(ModularityReport {
        verdict,
        degenerates,
        ring: tag,
    })
}

/// Scalar modular data of a closed subset.
#[derive(Clone, Debug)]
pub struct ModularData {
    pub members: Vec<usize>,
    pub qdims: Vec<f64>,
    pub twists: Vec<Rational>,
    pub s_matrix: Vec<Vec<Complex64>>,
    /// Present when exact arithmetic was requested.
    pub s_exact: Option<Vec<Vec<CyclotomicNumber>>>,
    pub report: ModularityReport,
}

pub fn modular_data(ring: &FusionRing, subset: &ClosedSubset, exact: bool) -> Result<ModularData> {
    let members = subset.members();
    let s_exact = if exact {
        Some(
            members
                .iter()
                .map(|&a| members.iter().map(|&b| s_entry_exact(ring, a, b)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    Ok(ModularData {
        qdims: members.iter().map(|&i| qdim(ring, i)).collect(),
        twists: members.iter().map(|&i| twist_exponent(ring, i)).collect(),
        s_matrix: s_matrix(ring, &members)?,
        s_exact,
        report: modularity_report(ring, subset)?,
        members,
    })
}

/// Largest deviations found by [`verify_s_identities`].
#[derive(Clone, Debug, Serialize)]
pub struct SIdentityReport {
    /// Σ_ν N_{λγ}^ν S_{νμ} versus S_{λμ} S_{γμ} / qdim(μ).
    pub product_error: f64,
    /// Σ_γ qdim(γ) S_{λγ} versus δ_{λ0} Σ_γ qdim(γ)².
    pub orthogonality_error: f64,
    /// max |S_{λγ} / (qdim λ · qdim γ)|.
    pub max_normalized_modulus: f64,
    pub det_abs: f64,
    pub tolerance: f64,
    pub passed: bool,
}

pub const DET_MARGIN: f64 = 1e-6;

/// Checks the S-matrix identities on the full alcove.
pub fn verify_s_identities(ring: &FusionRing, tol: f64) -> Result<SIdentityReport> {
    let n = ring.len();
    let all: Vec<usize> = (0..n).collect();
    let s = s_matrix(ring, &all)?;
    let dims: Vec<f64> = all.iter().map(|&i| qdim(ring, i)).collect();
    let total: f64 = dims.iter().map(|d| d * d).sum();

    let mut product_error: f64 = 0.0;
    for a in 0..n {
        for b in 0..=a {
            let prod = ring.product(a, b)?;
            for m in 0..n {
                let lhs: Complex64 = prod.iter().map(|&(c, k)| s[c][m] * k as f64).sum();
                let rhs = s[a][m] * s[b][m] / dims[m];
                product_error = product_error.max((lhs - rhs).norm() / (1.0 + rhs.norm()));
            }
        }
    }
    let mut orthogonality_error: f64 = 0.0;
    for a in 0..n {
        let lhs: Complex64 = (0..n).map(|g| s[a][g] * dims[g]).sum();
        let rhs = if a == 0 { total } else { 0.0 };
        orthogonality_error = orthogonality_error.max((lhs - rhs).norm() / total);
    }
    let mut max_normalized_modulus: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            max_normalized_modulus = max_normalized_modulus.max((s[a][b] / (dims[a] * dims[b])).norm());
        }
    }
    let m = DMatrix::from_fn(n, n, |i, j| s[i][j]);
    let det_abs = m.determinant().norm();
    let passed = product_error <= tol
        && orthogonality_error <= tol
        && max_normalized_modulus <= 1.0 + tol
        && det_abs > DET_MARGIN
        && dims.iter().all(|&d| d > 0.0);
    Ok(SIdentityReport {
        product_error,
        orthogonality_error,
        max_normalized_modulus,
        det_abs,
        tolerance: tol,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::CharacterCache;
    use crate::closed_subsets::{closed_subset_from, closure, enumerate_closed, DEFAULT_MAX_ALCOVE};
    use crate::root_system::RootSystem;

    fn ring(s: &str, k: u32) -> FusionRing {
        let rs = RootSystem::new(s.parse().unwrap()).unwrap();
        FusionRing::new(rs, k, CharacterCache::disabled()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn twist_examples() {
        let e7 = ring("E7", 2);
        let idx = |r: &FusionRing, w: Weight| r.index(&w).unwrap();
        assert_eq!(twist_exponent(&e7, 0), q(0, 1));
        assert_eq!(twist_exponent(&e7, idx(&e7, Weight::fundamental(7, 6))), q(4, 5));
        assert_eq!(twist_exponent(&e7, idx(&e7, Weight::fundamental(7, 2))), q(5, 8));
        assert_eq!(twist_exponent(&e7, idx(&e7, 2 * &Weight::fundamental(7, 7))), q(1, 1));
        let e8 = ring("E8", 2);
        assert_eq!(twist_exponent(&e8, idx(&e8, Weight::fundamental(8, 1))), q(1, 1));
        for l in [3usize, 4, 13] {
            let b = ring(&format!("B{l}"), 2);
            assert_eq!(twist_exponent(&b, idx(&b, 2 * &Weight::fundamental(l, 1))), q(0, 1));
        }
    }

    #[test]
    fn exact_twists_agree_with_rational_exponents() {
        let e7 = ring("E7", 2);
        for i in 0..e7.len() {
            let t = twist_exponent(&e7, i);
            let z = twist_exact(&e7, i).to_complex();
            let expect = Complex64::from_polar(1.0, PI * *t.numer() as f64 / *t.denom() as f64);
            assert!((z - expect).norm() < 1e-12);
        }
    }

    #[test]
    fn su2_qdim_closed_form() {
        for k in 1..=8u32 {
            let r = ring("A1", k);
            let expect = 2.0 * (PI / (k as f64 + 2.0)).cos();
            assert!((qdim(&r, 1) - expect).abs() < 1e-12, "k={k}");
        }
    }

    #[test]
    fn exact_qdims_match_sine_formula() {
        for (name, k) in [("A2", 3), ("B3", 2), ("G2", 2), ("E7", 2), ("C3", 2)] {
            let r = ring(name, k);
            for i in 0..r.len() {
                let exact = qdim_exact(&r, i).unwrap().to_complex();
                assert!((exact.re - qdim(&r, i)).abs() < 1e-9, "{name} {}", r.weight(i));
                assert!(exact.im.abs() < 1e-9);
            }
        }
    }

    #[test]
    fn simple_currents_have_unit_qdim() {
        for (name, k) in [("A3", 2), ("D6", 2), ("E6", 2), ("E7", 2), ("B4", 2)] {
            let r = ring(name, k);
            for c in r.simple_currents() {
                assert!((qdim(&r, c) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn exact_s_entries_match_numeric() {
        let r = ring("E7", 2);
        for a in 0..r.len() {
            for b in 0..r.len() {
                let x = s_entry_exact(&r, a, b).unwrap().to_complex();
                assert!((x - s_entry(&r, a, b).unwrap()).norm() < 1e-9);
            }
        }
        let e8 = ring("E8", 2);
        assert_eq!(s_entry_exact(&e8, 1, 1).unwrap(), CyclotomicNumber::one(cyclotomic_order(&e8)));
        for g in 0..e8.len() {
            assert!((s_entry(&e8, 0, g).unwrap().re - qdim(&e8, g)).abs() < 1e-12);
        }
    }

    #[test]
    fn e7_and_e8_verdicts() {
        let e7 = ring("E7", 2);
        let a = closure(&e7, &[Weight::fundamental(7, 6)]).unwrap();
        let rep = modularity_report(&e7, &a).unwrap();
        assert_eq!(rep.verdict, Verdict::ModularAsIs);
        assert!(!is_degenerate(&e7, &a, e7.index(&Weight::fundamental(7, 6)).unwrap()).unwrap());
        let b = closure(&e7, &[Weight::fundamental(7, 2)]).unwrap();
        assert_eq!(modularity_report(&e7, &b).unwrap().verdict, Verdict::ModularAsIs);
        assert!(!is_degenerate(&e7, &b, e7.index(&(2 * &Weight::fundamental(7, 7))).unwrap()).unwrap());
        assert!(is_degenerate(&e7, &a, 3).is_ok());
        assert!(matches!(is_degenerate(&e7, &a, 1), Err(Error::NotMember(_))));

        let e8 = ring("E8", 2);
        let s = closure(&e8, &[Weight::fundamental(8, 1)]).unwrap();
        let rep = modularity_report(&e8, &s).unwrap();
        assert_eq!(rep.verdict, Verdict::SpinModular);
        assert_eq!(rep.degenerates[1].parity, Parity::Odd);
        assert!(rep.degenerates[1].invertible);
        assert_eq!(rep.ring, RingTag::Cyclic { n: 2 });
    }

    #[test]
    fn d6_odd_degenerates() {
        // 2λ5 and 2λ6 are odd degenerates of the subset {0, 2λ1, 2λ5, 2λ6}.
        let d6 = ring("D6", 2);
        let w = |v: [i32; 6]| Weight::new(v.to_vec());
        let s = closed_subset_from(&d6, &[w([0; 6]), w([2, 0, 0, 0, 0, 0]), w([0, 0, 0, 0, 2, 0]), w([0, 0, 0, 0, 0, 2])]).unwrap();
        let rep = modularity_report(&d6, &s).unwrap();
        assert_eq!(rep.verdict, Verdict::SpinModular);
        let odd: Vec<String> = rep.degenerates.iter().filter(|d| d.parity == Parity::Odd).map(|d| d.weight.notation()).collect();
        assert_eq!(odd, ["2λ5", "2λ6"]);
        assert_eq!(rep.ring, RingTag::KleinFour);
    }

    #[test]
    fn s_identities_small_cases() {
        for (name, k) in [("A1", 2), ("E7", 2), ("A2", 3), ("G2", 2), ("B3", 2)] {
            let r = ring(name, k);
            let rep = verify_s_identities(&r, 1e-9).unwrap();
            assert!(rep.passed, "{name} {rep:?}");
        }
    }

    #[test]
    fn degenerate_sets_are_closed_everywhere() {
        for (name, k) in [("A3", 2), ("D4", 2), ("B3", 2), ("C3", 2), ("A1", 4)] {
            let r = ring(name, k);
            for s in enumerate_closed(&r, DEFAULT_MAX_ALCOVE).unwrap() {
                let rep = modularity_report(&r, &s).unwrap();
                assert!(!matches!(rep.ring, RingTag::Unidentified { .. }) || rep.degenerates.len() > 4);
            }
        }
    }

    #[test]
    fn catalog_models_are_consistent() {
        let d = dihedral_model(5);
        assert_eq!(d.dims, vec![1, 1, 2, 2]);
        // ρ1 ⊗ ρ1 = 1 ⊕ sign ⊕ ρ2.
        assert_eq!(d.n[2][2], vec![1, 1, 0, 1]);
        // ρ1 ⊗ ρ2 = ρ1 ⊕ ρ2 (ρ3 = ρ2 for d = 5).
        assert_eq!(d.n[2][3], vec![0, 0, 1, 1]);
        for m in candidate_models(4) {
            let total: u32 = m.dims.iter().map(|x| x * x).sum();
            for a in 0..4 {
                for b in 0..4 {
                    let sum: u32 = (0..4).map(|c| m.n[a][b][c] * m.dims[c]).sum();
                    assert_eq!(sum, m.dims[a] * m.dims[b]);
                }
            }
            assert!(total >= 4);
        }
    }
}
