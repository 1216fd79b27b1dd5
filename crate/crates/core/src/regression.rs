//! Reproduction suite: the published tables, constants, verdicts and
//! classification results, each checked against the library.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::characters::CharacterCache;
use crate::closed_subsets::{
    chart_shifts, classify, closed_subset_from, delta_z, dull_fundamentals, enumerate_closed, exceptional_sets,
    gamma_z, min_fusion_power_containing_zero, ClassificationTag, DEFAULT_MAX_ALCOVE,
};
use crate::fusion::FusionRing;
use crate::golden::{self, GoldenProduct};
use crate::modular::{modularity_report, qdim, twist_exponent, verify_s_identities, Parity, RingTag, Verdict};
use crate::root_system::{AlgebraId, Rational, RootSystem, Weight};
use crate::{Error, Result};

const CHART_JSON: &str = include_str!("../data/chart.json");

/// Algebras and levels covered by the enumeration and fusion-power checks.
pub const ENUMERATION_GRID: &[(&str, &[u32])] = &[
    ("A1", &[1, 2, 3, 4, 5, 6, 7, 8]),
    ("A2", &[1, 2, 3, 4]),
    ("A3", &[1, 2, 3]),
    ("B3", &[2, 3]),
    ("B4", &[2]),
    ("B13", &[2]),
    ("C3", &[2]),
    ("D4", &[2]),
    ("D6", &[2]),
    ("D9", &[2]),
    ("E6", &[2]),
    ("E7", &[2]),
    ("E8", &[2]),
    ("F4", &[2]),
    ("G2", &[2]),
];

/// Instances for the randomized fusion and S-matrix properties.
pub const PROPERTY_INSTANCES: &[(&str, u32)] = &[
    ("A1", 6),
    ("A2", 4),
    ("A3", 3),
    ("B3", 2),
    ("B4", 2),
    ("C3", 2),
    ("D4", 2),
    ("D6", 2),
    ("E6", 2),
    ("E7", 2),
    ("E8", 2),
    ("F4", 2),
    ("G2", 3),
];

pub const TRIPLES_PER_INSTANCE: usize = 500;
pub const PROPERTY_SEED: u64 = 0x5eed_2002;
pub const IDENTITY_TOLERANCE: f64 = 1e-9;
pub const S_CHECK_MAX_ALCOVE: usize = 30;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}. {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64()
        )
    }
}

/// Shares fusion rings between criteria.
pub struct Workbench {
    cache: CharacterCache,
    rings: Mutex<HashMap<(AlgebraId, u32), Arc<FusionRing>>>,
}

impl Workbench {
    pub fn new(cache: CharacterCache) -> Self {
        Workbench {
            cache,
            rings: Mutex::new(HashMap::new()),
        }
    }

    pub fn ring(&self, algebra: &str, level: u32) -> Result<Arc<FusionRing>> {
        let id: AlgebraId = algebra.parse()?;
        if let Some(r) = self.rings.lock().unwrap().get(&(id, level)) {
            return Ok(r.clone());
        }
        let ring = Arc::new(FusionRing::with_bound(
            RootSystem::new(id)?,
            level,
            self.cache.clone(),
            Some(DEFAULT_MAX_ALCOVE),
        )?);
        self.rings.lock().unwrap().insert((id, level), ring.clone());
        Ok(ring)
    }
}

pub const CRITERIA: &[(u8, &str)] = &[
    (1, "golden level-2 fusion tables"),
    (2, "twist constants"),
    (3, "inner products"),
    (4, "closed subset enumeration and classification"),
    (5, "degeneracy verdicts"),
    (6, "fusion power reaching 0"),
    (7, "randomized fusion and S-matrix properties"),
    (8, "dull weight root chart"),
];

pub fn run(wb: &Workbench, id: u8) -> Result<CriterionReport> {
    let title = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .ok_or(Error::BadIndex(id as usize))?;
    let start = Instant::now();
    let mut details = Vec::new();
    let outcome = match id {
        1 => golden_tables(wb, &mut details),
        2 => twist_constants(wb, &mut details),
        3 => inner_products(&mut details),
        4 => enumeration(wb, &mut details),
        5 => verdicts(wb, &mut details),
        6 => fusion_powers(wb, &mut details),
        7 => properties(wb, &mut details),
        _ => chart(&mut details),
    };
    let passed = match outcome {
        Ok(ok) => ok,
        Err(e) => {
            details.push(format!("error: {e}"));
            false
        }
    };
    Ok(CriterionReport {
        id,
        title,
        passed,
        details,
        elapsed: start.elapsed(),
    })
}

pub fn run_all(wb: &Workbench) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&(id, _)| run(wb, id).expect("known criterion")).collect()
}

fn render(v: &[(Weight, u32)]) -> String {
    if v.is_empty() {
        return "∅".into();
    }
    v.iter()
        .map(|(w, m)| if *m == 1 { w.notation() } else { format!("{m}·{}", w.notation()) })
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

/// Compares every product of a golden table; returns the mismatches.
pub fn check_golden(ring: &FusionRing, table: &[GoldenProduct]) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for g in table {
        let mut got = ring.fuse(&g.lhs, &g.rhs)?;
        got.sort();
        if got != g.expected {
            bad.push(format!(
                "{} ⊗ {} [{}]: computed {}, listed {}",
                g.lhs.notation(),
                g.rhs.notation(),
                g.rule,
                render(&got),
                render(&g.expected)
            ));
        }
    }
    Ok(bad)
}

fn golden_tables(wb: &Workbench, details: &mut Vec<String>) -> Result<bool> {
    let mut cases: Vec<(String, Vec<GoldenProduct>)> = Vec::new();
    for l in [3, 4, 5, 13] {
        cases.push((format!("B{l}"), golden::b_series(l)));
    }
    for l in [6, 8, 9] {
        cases.push((format!("D{l}"), golden::d_series(l)));
    }
    cases.push(("E7".into(), golden::e7()));
    cases.push(("E8".into(), golden::e8()));
    let mut ok = true;
    for (name, table) in cases {
        let ring = wb.ring(&name, 2)?;
        let bad = check_golden(&ring, &table)?;
        details.push(format!("{name} k=2: {} products, {} mismatches", table.len(), bad.len()));
        ok &= bad.is_empty();
        details.extend(bad.into_iter().map(|b| format!("  {name}: {b}")));
    }
    Ok(ok)
}

fn twist_constants(wb: &Workbench, details: &mut Vec<String>) -> Result<bool> {
    let e7 = |i| Weight::fundamental(7, i);
    let mut cases: Vec<(String, Weight, Rational)> = vec![
        ("E7".into(), e7(6), Rational::new(4, 5)),
        ("E7".into(), e7(2), Rational::new(5, 8)),
        ("E7".into(), 2 * &e7(7), Rational::from_integer(1)),
        ("E8".into(), Weight::fundamental(8, 1), Rational::from_integer(1)),
    ];
    for l in [3, 4, 13] {
        cases.push((format!("B{l}"), 2 * &Weight::fundamental(l, 1), Rational::from_integer(0)));
    }
    let mut ok = true;
    for (alg, w, expected) in cases {
        let ring = wb.ring(&alg, 2)?;
        let t = twist_exponent(&ring, ring.index(&w)?);
        let pass = t == expected;
        ok &= pass;
        details.push(format!(
            "{alg} C_{{{}}} = e^(πi·{t}), expected e^(πi·{expected}){}",
            w.notation(),
            if pass { "" } else { "  MISMATCH" }
        ));
    }
    Ok(ok)
}

fn inner_products(details: &mut Vec<String>) -> Result<bool> {
    let e7 = RootSystem::new("E7".parse()?)?;
    let e8 = RootSystem::new("E8".parse()?)?;
    let f7 = |i| Weight::fundamental(7, i);
    let l7 = 2 * &f7(7);
    let r = |n, d| Rational::new(n, d);
    let cases: Vec<(&RootSystem, &str, Weight, Weight, Rational)> = vec![
        (&e7, "(λ6,λ6)", f7(6), f7(6), r(4, 1)),
        (&e7, "(λ6,ρ)", f7(6), e7.rho().clone(), r(26, 1)),
        (&e7, "(λ2,λ2)", f7(2), f7(2), r(7, 2)),
        (&e7, "(λ2,ρ)", f7(2), e7.rho().clone(), r(49, 2)),
        (&e7, "(2λ7,2λ7)", l7.clone(), l7.clone(), r(6, 1)),
        (&e7, "(2λ7,ρ)", l7, e7.rho().clone(), r(27, 1)),
        (&e8, "(λ1,λ1)", Weight::fundamental(8, 1), Weight::fundamental(8, 1), r(4, 1)),
        (&e8, "(λ1,ρ)", Weight::fundamental(8, 1), e8.rho().clone(), r(46, 1)),
    ];
    let mut ok = true;
    for (rs, label, a, b, expected) in cases {
        let got = rs.inner_product(&a, &b)?;
        ok &= got == expected;
        details.push(format!(
            "{} {label} = {got}, expected {expected}{}",
            rs.algebra(),
            if got == expected { "" } else { "  MISMATCH" }
        ));
    }
    Ok(ok)
}

fn enumeration(wb: &Workbench, details: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    for &(alg, levels) in ENUMERATION_GRID {
        for &k in levels {
            let ring = wb.ring(alg, k)?;
            let subsets = enumerate_closed(&ring, DEFAULT_MAX_ALCOVE)?;
            let mut problems = Vec::new();
            for s in &subsets {
                if classify(&ring, s) == ClassificationTag::Unclassified {
                    problems.push(format!("unclassified {}", s.notation(&ring)));
                }
            }
            let center = ring.root_system().center();
            for z in center.subgroups() {
                for (name, set) in [("Γ", gamma_z(&ring, &z)), ("Δ", delta_z(&ring, &z))] {
                    if !subsets.contains(&set) {
                        problems.push(format!("{name}_Z for Z = {z} missing"));
                    }
                }
            }
            let mut exceptional = 0;
            for (tag, ws) in exceptional_sets(ring.root_system(), k) {
                if ws.iter().any(|w| ring.alcove().index_of(w).is_none()) {
                    continue;
                }
                exceptional += 1;
                match closed_subset_from(&ring, &ws) {
                    Ok(set) if subsets.contains(&set) => {}
                    Ok(_) => problems.push(format!("{tag} not enumerated")),
                    Err(e) => problems.push(format!("{tag}: {e}")),
                }
            }
            details.push(format!(
                "{alg} k={k}: alcove {}, {} closed subsets, {} exceptional predicted, {} problems",
                ring.len(),
                subsets.len(),
                exceptional,
                problems.len()
            ));
            ok &= problems.is_empty();
            details.extend(problems.into_iter().map(|p| format!("  {alg} k={k}: {p}")));
        }
    }
    Ok(ok)
}

struct VerdictCase {
    algebra: &'static str,
    members: Vec<Weight>,
    verdict: Verdict,
    /// (weight, parity, invertible) for every degenerate object.
    degenerates: Vec<(Weight, Parity, bool)>,
    ring: Option<RingTag>,
}

fn verdict_cases() -> Vec<VerdictCase> {
    let e7 = |i| Weight::fundamental(7, i);
    let b13 = |i| Weight::fundamental(13, i);
    let even = Parity::Even;
    vec![
        VerdictCase {
            algebra: "E7",
            members: vec![Weight::zero(7), e7(6)],
            verdict: Verdict::ModularAsIs,
            degenerates: vec![(Weight::zero(7), even, true)],
            ring: None,
        },
        VerdictCase {
            algebra: "E7",
            members: vec![Weight::zero(7), e7(2), 2 * &e7(7)],
            verdict: Verdict::ModularAsIs,
            degenerates: vec![(Weight::zero(7), even, true)],
            ring: None,
        },
        VerdictCase {
            algebra: "E8",
            members: vec![Weight::zero(8), Weight::fundamental(8, 1)],
            verdict: Verdict::SpinModular,
            degenerates: vec![(Weight::zero(8), even, true), (Weight::fundamental(8, 1), Parity::Odd, true)],
            ring: None,
        },
        VerdictCase {
            algebra: "B13",
            members: [0, 3, 6, 9, 12]
                .iter()
                .map(|&i| if i == 0 { Weight::zero(13) } else { b13(i) })
                .chain([2 * &b13(1)])
                .collect(),
            verdict: Verdict::ModularAfterQuotient,
            degenerates: vec![
                (Weight::zero(13), even, true),
                (b13(9), even, false),
                (2 * &b13(1), even, true),
            ],
            ring: Some(RingTag::Dihedral { d: 3 }),
        },
    ]
}

fn verdicts(wb: &Workbench, details: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    for case in verdict_cases() {
        let ring = wb.ring(case.algebra, 2)?;
        let set = closed_subset_from(&ring, &case.members)?;
        let report = modularity_report(&ring, &set)?;
        let mut got: Vec<(Weight, Parity, bool)> = report
            .degenerates
            .iter()
            .map(|d| (d.weight.clone(), d.parity, d.invertible))
            .collect();
        got.sort();
        let mut want = case.degenerates.clone();
        want.sort();
        let ring_ok = case.ring.as_ref().is_none_or(|t| *t == report.ring);
        let pass = report.verdict == case.verdict && got == want && ring_ok;
        ok &= pass;
        let degs: Vec<String> = got
            .iter()
            .map(|(w, p, inv)| format!("{} ({p}{})", w.notation(), if *inv { "" } else { ", noninvertible" }))
            .collect();
        details.push(format!(
            "{} {}: {} with degenerates {{{}}}, ring {}{}",
            case.algebra,
            set.notation(&ring),
            report.verdict,
            degs.join(", "),
            report.ring,
            if pass { "" } else { "  MISMATCH" }
        ));
    }
    Ok(ok)
}

fn fusion_powers(wb: &Workbench, details: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    for &(alg, levels) in ENUMERATION_GRID {
        for &k in levels {
            let ring = wb.ring(alg, k)?;
            let bound = 2 * ring.len() as u32;
            let mut worst = 0;
            let mut failures = Vec::new();
            for i in 0..ring.len() {
                match min_fusion_power_containing_zero(&ring, i, bound)? {
                    Some(m) => worst = worst.max(m),
                    None => failures.push(ring.weight(i).notation()),
                }
            }
            details.push(format!("{alg} k={k}: max power {worst}, bound {bound}"));
            if !failures.is_empty() {
                ok = false;
                details.push(format!("  {alg} k={k}: no power ≤ {bound} for {}", failures.join(", ")));
            }
        }
    }
    Ok(ok)
}

fn is_corner(ring: &FusionRing, w: &Weight) -> bool {
    let nonzero = w.labels().iter().filter(|&&c| c != 0).count();
    nonzero == 1 && ring.root_system().level_of(w.labels()) == ring.level() as i64
}

/// Violations of the randomized fusion properties on one instance.
pub fn property_violations(ring: &FusionRing, triples: usize, seed: u64) -> Result<Vec<String>> {
    let rs = ring.root_system();
    let n = ring.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims: Vec<f64> = (0..n).map(|i| qdim(ring, i)).collect();
    let currents = ring.simple_currents();
    let mut bad = Vec::new();
    let name = |i: usize| ring.weight(i).notation();

    for _ in 0..triples {
        let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
        let ab = ring.product(a, b)?.clone();
        if &ab != ring.product(b, a)? {
            bad.push(format!("commutativity fails for {} ⊗ {}", name(a), name(b)));
        }
        if ring.product(0, a)?.as_slice() != [(a, 1)] {
            bad.push(format!("unit fails for {}", name(a)));
        }
        let mut left = vec![0u64; n];
        for &(e, m) in &ab {
            for &(d, m2) in ring.product(e, c)? {
                left[d] += m as u64 * m2 as u64;
            }
        }
        let mut right = vec![0u64; n];
        for &(e, m) in ring.product(b, c)? {
            for &(d, m2) in ring.product(a, e)? {
                right[d] += m as u64 * m2 as u64;
            }
        }
        if left != right {
            bad.push(format!("associativity fails for ({}, {}, {})", name(a), name(b), name(c)));
        }
        if ring.coefficient(a, b, c)? != ring.coefficient(a, ring.dual(c), ring.dual(b))? {
            bad.push(format!("duality symmetry fails for N_{{{},{}}}^{}", name(a), name(b), name(c)));
        }

        let lambda = ring.weight(a);
        let gamma = ring.weight(b);
        let mut missing = None;
        rs.for_each_in_orbit(gamma.labels(), |nu| {
            if missing.is_some() {
                return;
            }
            let target = lambda + &Weight::new(nu.to_vec());
            if let Some(t) = ring.alcove().index_of(&target) {
                if !ab.iter().any(|&(e, _)| e == t) {
                    missing = Some(target);
                }
            }
        });
        if let Some(t) = missing {
            bad.push(format!("{} ⊗ {} lacks {} from the Weyl orbit", name(a), name(b), t.notation()));
        }

        let reach = rs.norm2(gamma);
        for &(e, _) in &ab {
            if rs.norm2(&(lambda - ring.weight(e))) > reach {
                bad.push(format!("{} ⊗ {} contains {} beyond the distance bound", name(a), name(b), name(e)));
            }
        }

        let z = currents[rng.random_range(0..currents.len())];
        let (fa, fc) = (ring.simple_current_action(z, a)?, ring.simple_current_action(z, c)?);
        if ring.coefficient(fa, b, fc)? != ring.coefficient(a, b, c)? {
            bad.push(format!(
                "simple current {} breaks N_{{{},{}}}^{}",
                name(z),
                name(a),
                name(b),
                name(c)
            ));
        }

        let lhs = dims[a] * dims[b];
        let rhs: f64 = ab.iter().map(|&(e, m)| m as f64 * dims[e]).sum();
        if (lhs - rhs).abs() > IDENTITY_TOLERANCE {
            bad.push(format!("qdim homomorphism off by {:e} for {} ⊗ {}", lhs - rhs, name(a), name(b)));
        }
    }

    if ring.level() >= 2 {
        let theta = ring.index(rs.theta())?;
        let short_nodes: Vec<usize> = (0..rs.rank()).filter(|&i| !rs.long_simple()[i]).collect();
        let beta = ring.alcove().index_of(rs.beta());
        for i in 1..n {
            let w = ring.weight(i);
            if is_corner(ring, w) {
                continue;
            }
            let prod = ring.product(i, ring.dual(i))?;
            if !prod.iter().any(|&(e, _)| e == theta) {
                bad.push(format!("{} ⊗ {}† lacks θ", name(i), name(i)));
            }
            if let (false, Some(beta)) = (short_nodes.is_empty(), beta) {
                let touches_short = short_nodes.iter().any(|&s| w.labels()[s] != 0);
                if touches_short && !prod.iter().any(|&(e, _)| e == beta) {
                    bad.push(format!("{} ⊗ {}† lacks β", name(i), name(i)));
                }
            }
        }
    }
    Ok(bad)
}

fn properties(wb: &Workbench, details: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    for (n, &(alg, k)) in PROPERTY_INSTANCES.iter().enumerate() {
        let ring = wb.ring(alg, k)?;
        let bad = property_violations(&ring, TRIPLES_PER_INSTANCE, PROPERTY_SEED + n as u64)?;
        let mut line = format!("{alg} k={k}: {TRIPLES_PER_INSTANCE} triples, {} violations", bad.len());
        if ring.len() <= S_CHECK_MAX_ALCOVE {
            let s = verify_s_identities(&ring, IDENTITY_TOLERANCE)?;
            line.push_str(&format!(
                "; S: product {:.1e}, orthogonality {:.1e}, max |S̃| {:.6}, |det| {:.3e}{}",
                s.product_error,
                s.orthogonality_error,
                s.max_normalized_modulus,
                s.det_abs,
                if s.passed { "" } else { "  FAILED" }
            ));
            ok &= s.passed;
        }
        ok &= bad.is_empty();
        details.push(line);
        details.extend(bad.into_iter().take(10).map(|b| format!("  {alg} k={k}: {b}")));
    }
    Ok(ok)
}

#[derive(Deserialize)]
struct ChartFile {
    entries: Vec<ChartEntry>,
    excluded: Vec<ExcludedEntry>,
}

#[derive(Deserialize)]
struct ChartEntry {
    algebra: String,
    i: usize,
    roots: Vec<String>,
}

#[derive(Deserialize)]
struct ExcludedEntry {
    algebra: String,
    i: usize,
    reason: String,
}

/// Parses a sum such as `-θ+α1+α3` into a weight.
pub fn parse_root_expression(rs: &RootSystem, s: &str) -> Result<Weight> {
    let bad = || Error::ParseWeight(s.to_string());
    let mut acc = Weight::zero(rs.rank());
    let mut rest = s.trim();
    while !rest.is_empty() {
        let sign = match rest.chars().next() {
            Some('+') => 1,
            Some('-') => -1,
            _ => return Err(bad()),
        };
        rest = &rest[1..];
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        rest = tail;
        let w = if term == "θ" {
            rs.theta().clone()
        } else {
            let i: usize = term.strip_prefix('α').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if i == 0 || i > rs.rank() {
                return Err(bad());
            }
            rs.simple_roots()[i - 1].clone()
        };
        acc = &acc + &(sign * &w);
    }
    Ok(acc)
}

/// Writes a root in the simple-root basis, e.g. `-α2-α3-α4`.
pub fn root_notation(rs: &RootSystem, w: &Weight) -> String {
    let mut s = String::new();
    for (i, c) in rs.root_coordinates(w).iter().enumerate() {
        if c.is_integer() && *c.numer() == 0 {
            continue;
        }
        let sign = if *c < Rational::from_integer(0) { "-" } else if s.is_empty() { "" } else { "+" };
        let mag = if *c < Rational::from_integer(0) { -c } else { *c };
        if mag == Rational::from_integer(1) {
            s.push_str(&format!("{sign}α{}", i + 1));
        } else {
            s.push_str(&format!("{sign}{mag}α{}", i + 1));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// Computed shifts for one dull fundamental weight next to the printed ones.
#[derive(Clone, Debug, Serialize)]
pub struct ChartRow {
    pub i: usize,
    pub computed: Vec<String>,
    pub printed: Option<Vec<String>>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartReport {
    pub rows: Vec<ChartRow>,
    /// Printed lines for this algebra that are not compared, with the reason.
    pub excluded: Vec<String>,
}

pub fn chart_report(rs: &RootSystem) -> Result<ChartReport> {
    let file: ChartFile = serde_json::from_str(CHART_JSON)?;
    let name = rs.algebra().to_string();
    let mut rows = Vec::new();
    for i in dull_fundamentals(rs) {
        let mut computed = chart_shifts(rs, i)?;
        computed.sort();
        let printed = match file.entries.iter().find(|e| e.algebra == name && e.i == i) {
            Some(e) => {
                let mut ws = e
                    .roots
                    .iter()
                    .map(|r| parse_root_expression(rs, r))
                    .collect::<Result<Vec<_>>>()?;
                ws.sort();
                Some(ws)
            }
            None => None,
        };
        rows.push(ChartRow {
            i,
            matches: printed.as_ref() == Some(&computed),
            computed: computed.iter().map(|w| root_notation(rs, w)).collect(),
            printed: printed.map(|p| p.iter().map(|w| root_notation(rs, w)).collect()),
        });
    }
    for e in file.entries.iter().filter(|e| e.algebra == name) {
        if !rows.iter().any(|r| r.i == e.i) {
            rows.push(ChartRow {
                i: e.i,
                computed: Vec::new(),
                printed: Some(e.roots.clone()),
                matches: false,
            });
        }
    }
    let excluded = file
        .excluded
        .iter()
        .filter(|e| e.algebra == name)
        .map(|e| format!("λ{}: {}", e.i, e.reason))
        .collect();
    Ok(ChartReport { rows, excluded })
}

pub const CHART_ALGEBRAS: &[&str] = &["B4", "D6", "E6", "E7", "E8", "F4", "G2"];

fn chart(details: &mut Vec<String>) -> Result<bool> {
    let mut ok = true;
    for alg in CHART_ALGEBRAS {
        let rs = RootSystem::new(alg.parse()?)?;
        let report = chart_report(&rs)?;
        for row in report.rows {
            ok &= row.matches;
            let printed = row.printed.map(|p| p.join(", ")).unwrap_or_else(|| "not printed".into());
            if row.matches {
                details.push(format!("{alg} λ{}: {}", row.i, row.computed.join(", ")));
            } else {
                details.push(format!(
                    "{alg} λ{}: computed {}; printed {}  MISMATCH",
                    row.i,
                    row.computed.join(", "),
                    printed
                ));
            }
        }
    }
    let c3 = RootSystem::new("C3".parse()?)?;
    for line in chart_report(&c3)?.excluded {
        details.push(format!(
            "C_l line excluded (C3 has {} dull weights): {line}",
            dull_fundamentals(&c3).len()
        ));
    }
    Ok(ok)
}
