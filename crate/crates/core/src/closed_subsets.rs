//! Subsets of the alcove closed under fusion and duality, and their classification.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::FusionRing;
use crate::root_system::{Family, RootSystem, Subgroup, Weight};

/// Default bound on the alcove size accepted by [`enumerate_closed`].
pub const DEFAULT_MAX_ALCOVE: usize = 200;

/// A set of alcove indices closed under fusion and duality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedSubset {
    bits: FixedBitSet,
}

impl ClosedSubset {
    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Member indices in alcove order.
    pub fn members(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn weights(&self, ring: &FusionRing) -> Vec<Weight> {
        self.bits.ones().map(|i| ring.weight(i).clone()).collect()
    }

    pub fn is_subset(&self, other: &ClosedSubset) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Renders the members as e.g. `{0, 2λ1, λ3}`.
    pub fn notation(&self, ring: &FusionRing) -> String {
        let names: Vec<String> = self.bits.ones().map(|i| ring.weight(i).notation()).collect();
        format!("{{{}}}", names.join(", "))
    }
}

fn extend(ring: &FusionRing, base: &FixedBitSet, extra: &[usize], with_duals: bool) -> Result<FixedBitSet> {
    let mut bits = base.clone();
    let mut members: Vec<usize> = bits.ones().collect();
    let mut queue: Vec<usize> = Vec::new();
    for &e in extra.iter().chain(std::iter::once(&0)) {
        if !bits.put(e) {
            members.push(e);
            queue.push(e);
        }
    }
    while let Some(a) = queue.pop() {
        let mut found = Vec::new();
        if with_duals {
            found.push(ring.dual(a));
        }
        for &b in &members {
            found.extend(ring.product(a, b)?.iter().map(|&(c, _)| c));
        }
        for c in found {
            if !bits.put(c) {
                members.push(c);
                queue.push(c);
            }
        }
    }
    Ok(bits)
}

/// Least closed subset containing the generators and 0.
pub fn closure(ring: &FusionRing, generators: &[Weight]) -> Result<ClosedSubset> {
    let idx = generators.iter().map(|w| ring.index(w)).collect::<Result<Vec<_>>>()?;
    closure_of_indices(ring, &idx)
}

pub fn closure_of_indices(ring: &FusionRing, generators: &[usize]) -> Result<ClosedSubset> {
    let empty = FixedBitSet::with_capacity(ring.len());
    Ok(ClosedSubset {
        bits: extend(ring, &empty, generators, true)?,
    })
}

/// Closure under fusion alone, without adding duals explicitly.
pub fn fusion_closure_of_indices(ring: &FusionRing, generators: &[usize]) -> Result<ClosedSubset> {
    let empty = FixedBitSet::with_capacity(ring.len());
    Ok(ClosedSubset {
        bits: extend(ring, &empty, generators, false)?,
    })
}

/// Checks the three defining properties directly.
pub fn is_closed(ring: &FusionRing, members: &[usize]) -> Result<bool> {
    let mut bits = FixedBitSet::with_capacity(ring.len());
    for &m in members {
        bits.insert(m);
    }
    if !bits.contains(0) {
        return Ok(false);
    }
    for &a in members {
        if !bits.contains(ring.dual(a)) {
            return Ok(false);
        }
        for &b in members {
            if ring.product(a, b)?.iter().any(|&(c, _)| !bits.contains(c)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn from_indices(ring: &FusionRing, idx: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(ring.len());
    for i in idx {
        bits.insert(i);
    }
    bits
}

/// Γ_Z: alcove weights on which every z ∈ Z acts trivially.
pub fn gamma_z(ring: &FusionRing, subgroup: &Subgroup) -> ClosedSubset {
    let center = ring.root_system().center();
    let idx = (0..ring.len()).filter(|&i| {
        subgroup
            .elements
            .iter()
            .all(|&z| center.acts_trivially(ring.weight(i), z))
    });
    ClosedSubset {
        bits: from_indices(ring, idx),
    }
}

/// Δ_Z: the simple currents kℓ(z) for z ∈ Z.
pub fn delta_z(ring: &FusionRing, subgroup: &Subgroup) -> ClosedSubset {
    let currents = ring.simple_currents();
    ClosedSubset {
        bits: from_indices(ring, subgroup.elements.iter().map(|&z| currents[z])),
    }
}

/// All closed subsets, sorted by size and then by members.
///
/// Every closed subset is the join of the closures of its members, so
/// joining singleton closures until nothing new appears is exhaustive.
pub fn enumerate_closed(ring: &FusionRing, max_alcove: usize) -> Result<Vec<ClosedSubset>> {
    let n = ring.len();
    if n > max_alcove {
        return Err(Error::AlcoveTooLarge { size: n, bound: max_alcove });
    }
    let singles = (0..n)
        .map(|i| closure_of_indices(ring, &[i]).map(|c| c.bits))
        .collect::<Result<Vec<_>>>()?;
    let mut seen: HashSet<FixedBitSet> = singles.iter().cloned().collect();
    let mut frontier: Vec<FixedBitSet> = seen.iter().cloned().collect();
    while let Some(a) = frontier.pop() {
        for (i, single) in singles.iter().enumerate() {
            if a.contains(i) || single.is_subset(&a) {
                continue;
            }
            let joined = extend(ring, &a, &single.ones().collect::<Vec<_>>(), true)?;
            if seen.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    let mut out: Vec<ClosedSubset> = seen.into_iter().map(|bits| ClosedSubset { bits }).collect();
    out.sort_by_cached_key(|s| (s.len(), s.members()));
    Ok(out)
}

/// Position of a closed subset in the classification theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum ClassificationTag {
    GammaZ { subgroup: Subgroup },
    DeltaZ { subgroup: Subgroup },
    /// B_l, k = 2, 2l + 1 = nj.
    ExcB { j: usize, n: usize },
    /// D_l, k = 2, l = nj.
    ExcDEven { j: usize, n: usize },
    /// D_l, k = 2, 2l = nj with n odd.
    ExcDOdd { j: usize, n: usize },
    ExcE7A,
    ExcE7B,
    ExcE8,
    Unclassified,
}

impl ClassificationTag {
    pub fn is_exceptional(&self) -> bool {
        !matches!(
            self,
            ClassificationTag::GammaZ { .. } | ClassificationTag::DeltaZ { .. } | ClassificationTag::Unclassified
        )
    }
}

impl fmt::Display for ClassificationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassificationTag::GammaZ { subgroup } => write!(f, "GammaZ(|Z|={})", subgroup.order()),
            ClassificationTag::DeltaZ { subgroup } => write!(f, "DeltaZ(|Z|={})", subgroup.order()),
            ClassificationTag::ExcB { j, n } => write!(f, "ExcB(j={j}, n={n})"),
            ClassificationTag::ExcDEven { j, n } => write!(f, "ExcD_even(j={j}, n={n})"),
            ClassificationTag::ExcDOdd { j, n } => write!(f, "ExcD_odd(j={j}, n={n})"),
            ClassificationTag::ExcE7A => write!(f, "ExcE7_a"),
            ClassificationTag::ExcE7B => write!(f, "ExcE7_b"),
            ClassificationTag::ExcE8 => write!(f, "ExcE8"),
            ClassificationTag::Unclassified => write!(f, "Unclassified"),
        }
    }
}

/// The exceptional sets predicted for this algebra and level, as weight lists.
pub fn exceptional_sets(rs: &RootSystem, level: u32) -> Vec<(ClassificationTag, Vec<Weight>)> {
    let mut out = Vec::new();
    if level != 2 {
        return out;
    }
    let l = rs.rank();
    let fund = |i: usize| Weight::fundamental(l, i);
    let twice = |i: usize| 2 * &Weight::fundamental(l, i);
    let zero = Weight::zero(l);
    match (rs.algebra().family(), l) {
        (Family::E, 7) => {
            out.push((ClassificationTag::ExcE7A, vec![zero.clone(), fund(6)]));
            out.push((ClassificationTag::ExcE7B, vec![zero, fund(2), twice(7)]));
        }
        (Family::E, 8) => out.push((ClassificationTag::ExcE8, vec![zero, fund(1)])),
        (Family::B, _) => {
            for j in 3..=2 * l + 1 {
                if (2 * l + 1).is_multiple_of(j) {
                    let n = (2 * l + 1) / j;
                    let mut ws = vec![zero.clone(), twice(1)];
                    ws.extend((1..=(n - 1) / 2).map(|m| fund(m * j)));
                    out.push((ClassificationTag::ExcB { j, n }, ws));
                }
            }
        }
        (Family::D, _) => {
            for j in 3..=l {
                if l.is_multiple_of(j) {
                    let n = l / j;
                    let mut ws = vec![zero.clone(), twice(1)];
                    ws.extend((1..n).map(|m| fund(m * j)));
                    ws.push(twice(l - 1));
                    ws.push(twice(l));
                    out.push((ClassificationTag::ExcDEven { j, n }, ws));
                }
            }
            for j in 3..=2 * l {
                if (2 * l).is_multiple_of(j) && ((2 * l) / j) % 2 == 1 {
                    let n = 2 * l / j;
                    let mut ws = vec![zero.clone(), twice(1)];
                    ws.extend((1..=(n - 1) / 2).map(|m| fund(m * j)));
                    out.push((ClassificationTag::ExcDOdd { j, n }, ws));
                }
            }
        }
        _ => {}
    }
    out
}

/// Matches a closed subset against Γ_Z, then Δ_Z, then the exceptional families.
pub fn classify(ring: &FusionRing, subset: &ClosedSubset) -> ClassificationTag {
    let center = ring.root_system().center();
    let subgroups = center.subgroups();
    for z in &subgroups {
        if &gamma_z(ring, z) == subset {
            return ClassificationTag::GammaZ { subgroup: z.clone() };
        }
    }
    for z in &subgroups {
        if &delta_z(ring, z) == subset {
            return ClassificationTag::DeltaZ { subgroup: z.clone() };
        }
    }
    for (tag, ws) in exceptional_sets(ring.root_system(), ring.level()) {
        let idx: Option<Vec<usize>> = ws.iter().map(|w| ring.alcove().index_of(w)).collect();
        if let Some(idx) = idx {
            if from_indices(ring, idx) == subset.bits {
                return tag;
            }
        }
    }
    ClassificationTag::Unclassified
}

/// Builds a subset from explicit members after checking it is closed.
pub fn closed_subset_from(ring: &FusionRing, members: &[Weight]) -> Result<ClosedSubset> {
    let idx = members.iter().map(|w| ring.index(w)).collect::<Result<Vec<_>>>()?;
    if !is_closed(ring, &idx)? {
        let c = closure_of_indices(ring, &idx)?;
        return Err(Error::Invariant(format!(
            "the given set is not closed; its closure is {}",
            c.notation(ring)
        )));
    }
    Ok(ClosedSubset {
        bits: from_indices(ring, idx),
    })
}

/// Roots α (short roots in nonsimply-laced types) with λ_i + α in the alcove at level (λ_i, θ).
///
/// `i` counts from 1; λ_i must be long with (λ_i, θ) ≥ 2.
pub fn chart_shifts(rs: &RootSystem, i: usize) -> Result<Vec<Weight>> {
    let r = rs.rank();
    if i == 0 || i > r {
        return Err(Error::BadIndex(i));
    }
    let k = rs.comarks()[i - 1];
    if !rs.long_simple()[i - 1] || k < 2 {
        return Err(Error::NotDull(i));
    }
    let lambda = Weight::fundamental(r, i);
    let short = if rs.is_simply_laced() {
        None
    } else {
        Some(rs.norm2(rs.beta()))
    };
    let mut out = Vec::new();
    for alpha in rs.positive_roots() {
        if let Some(len) = short {
            if rs.norm2(alpha) != len {
                continue;
            }
        }
        for root in [alpha.clone(), -alpha] {
            let shifted = &lambda + &root;
            if shifted.is_dominant() && rs.level_of(shifted.labels()) <= k {
                out.push(root);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Indices i (1-based) for which λ_i is long with (λ_i, θ) ≥ 2.
pub fn dull_fundamentals(rs: &RootSystem) -> Vec<usize> {
    (0..rs.rank())
        .filter(|&i| rs.long_simple()[i] && rs.comarks()[i] >= 2)
        .map(|i| i + 1)
        .collect()
}

/// Least m ≤ bound with 0 in the support of λ^{⊗m}.
pub fn min_fusion_power_containing_zero(ring: &FusionRing, lambda: usize, bound: u32) -> Result<Option<u32>> {
    let mut support = from_indices(ring, [lambda]);
    for m in 1..=bound {
        if support.contains(0) {
            return Ok(Some(m));
        }
        let mut next = FixedBitSet::with_capacity(ring.len());
        for a in support.ones() {
            for &(c, _) in ring.product(a, lambda)? {
                next.insert(c);
            }
        }
        support = next;
    }
    Ok(None)
}
