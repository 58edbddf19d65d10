//! Structural predicates and verdict checkers.
//!
//! Each checker distinguishes a vacuous verdict (hypothesis never exercised)
//! from a pass, so that sweep statistics show how often a claim's hypothesis
//! actually occurs. Failing verdicts always carry a concrete witness.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith;
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graphs::{
    build_delta, build_gamma, metrics, partner_partition, Diameter, GraphMetrics, LabeledGraph,
    PrimeGraph, Regularity, SizeGraph,
};
use crate::group::{Group, GroupElement};

// ----------------------------------------------------------------------
// Verdicts
// ----------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TheoremVerdict {
    /// The graph is not k-regular with k >= 1.
    Vacuous,
    Confirmed { k: usize, vertices: Vec<u64> },
    Counterexample { k: usize, witness: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Vacuous,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub verdict: Verdict,
    /// How many times the hypothesis was instantiated.
    pub exercised: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl LemmaReport {
    fn pass(exercised: u64) -> Self {
        LemmaReport {
            verdict: Verdict::Pass,
            exercised,
            witness: None,
            note: None,
        }
    }

    fn vacuous(note: Option<String>) -> Self {
        LemmaReport {
            verdict: Verdict::Vacuous,
            exercised: 0,
            witness: None,
            note,
        }
    }

    fn fail(exercised: u64, witness: String) -> Self {
        LemmaReport {
            verdict: Verdict::Fail,
            exercised,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

// ----------------------------------------------------------------------
// Graph-level checkers
// ----------------------------------------------------------------------

fn regular_k(m: &GraphMetrics) -> Option<usize> {
    match m.regularity {
        Regularity::Regular(k) if k >= 1 => Some(k),
        _ => None,
    }
}

/// k-regular with k >= 1 implies complete with k+1 vertices.
pub fn theorem_verdict(gamma: &SizeGraph) -> TheoremVerdict {
    let g = gamma.graph();
    let m = metrics(g);
    match regular_k(&m) {
        Some(k) => {
            if m.complete && g.vertex_count() == k + 1 {
                TheoremVerdict::Confirmed {
                    k,
                    vertices: g.labels().to_vec(),
                }
            } else {
                TheoremVerdict::Counterexample {
                    k,
                    witness: format!(
                        "{k}-regular on vertices {:?} with edges {:?}, not complete with {}",
                        g.labels(),
                        g.edges(),
                        k + 1
                    ),
                }
            }
        }
        None => TheoremVerdict::Vacuous,
    }
}

/// Regular with k >= 1 implies connected; independently, a disconnected graph
/// must be exactly two isolated vertices.
pub fn connectivity_verdict(gamma: &SizeGraph) -> LemmaReport {
    let g = gamma.graph();
    let m = metrics(g);
    let mut exercised = 0;
    if let Some(k) = regular_k(&m) {
        exercised += 1;
        if m.components.len() != 1 {
            return LemmaReport::fail(
                exercised,
                format!(
                    "{k}-regular but disconnected: components {:?}",
                    m.components
                ),
            );
        }
    }
    if m.components.len() >= 2 {
        exercised += 1;
        let two_isolated = g.vertex_count() == 2 && g.edges().is_empty();
        if !two_isolated {
            return LemmaReport::fail(
                exercised,
                format!(
                    "disconnected but not two isolated vertices: components {:?}",
                    m.components
                ),
            );
        }
    }
    if exercised == 0 {
        LemmaReport::vacuous(None)
    } else {
        LemmaReport::pass(exercised)
    }
}

/// Regular with k >= 1 and a prime-power vertex implies complete.
pub fn prime_power_verdict(gamma: &SizeGraph) -> LemmaReport {
    let g = gamma.graph();
    let m = metrics(g);
    let Some(k) = regular_k(&m) else {
        return LemmaReport::vacuous(None);
    };
    let Some(&v) = g
        .labels()
        .iter()
        .find(|&&v| arith::as_prime_power(v).is_some())
    else {
        return LemmaReport::vacuous(Some("regular, but no prime-power vertex".into()));
    };
    if m.complete {
        LemmaReport::pass(1)
    } else {
        LemmaReport::fail(
            1,
            format!("{k}-regular with prime-power vertex {v} but not complete"),
        )
    }
}

/// Connected implies diameter <= 3; regular with k >= 1 implies connected
/// with diameter <= 2.
pub fn diameter_verdict(gamma: &SizeGraph) -> LemmaReport {
    let g = gamma.graph();
    let m = metrics(g);
    let mut exercised = 0;
    if m.components.len() == 1 && g.vertex_count() >= 2 {
        exercised += 1;
        if let Some(d) = m.diameter.finite() {
            if d > 3 {
                return LemmaReport::fail(exercised, format!("connected with diameter {d} > 3"));
            }
        }
    }
    if let Some(k) = regular_k(&m) {
        exercised += 1;
        match m.diameter.finite() {
            Some(d) if d <= 2 => {}
            other => {
                return LemmaReport::fail(
                    exercised,
                    format!("{k}-regular but diameter is {other:?}, expected <= 2"),
                );
            }
        }
    }
    if exercised == 0 {
        LemmaReport::vacuous(None)
    } else {
        LemmaReport::pass(exercised)
    }
}

/// The two graphs have equally many components; when both diameters are
/// finite they differ by at most one. The diameter comparison is skipped
/// (and noted) otherwise.
pub fn gamma_delta_verdict(gamma: &SizeGraph, delta: &PrimeGraph) -> LemmaReport {
    let gm = metrics(gamma.graph());
    let dm = metrics(delta.graph());
    let exercised = 1;
    if gm.components.len() != dm.components.len() {
        return LemmaReport::fail(
            exercised,
            format!(
                "component counts differ: {} for class sizes, {} for primes",
                gm.components.len(),
                dm.components.len()
            ),
        );
    }
    match (gm.diameter.finite(), dm.diameter.finite()) {
        (Some(a), Some(b)) => {
            if a.abs_diff(b) > 1 {
                return LemmaReport::fail(
                    exercised,
                    format!("diameters {a} and {b} differ by more than 1"),
                );
            }
            LemmaReport::pass(exercised)
        }
        _ => {
            let mut report = LemmaReport::pass(exercised);
            report.note = Some("diameter comparison skipped: not both finite".into());
            report
        }
    }
}

// ----------------------------------------------------------------------
// Group-level checkers
// ----------------------------------------------------------------------

pub fn check_main_theorem(group: &Group) -> TheoremVerdict {
    theorem_verdict(&build_gamma(group.conjugacy_classes()))
}

pub fn check_connectivity_lemma(group: &Group) -> LemmaReport {
    connectivity_verdict(&build_gamma(group.conjugacy_classes()))
}

pub fn check_ppower_lemma(group: &Group) -> LemmaReport {
    prime_power_verdict(&build_gamma(group.conjugacy_classes()))
}

pub fn check_diameter_lemma(group: &Group) -> LemmaReport {
    diameter_verdict(&build_gamma(group.conjugacy_classes()))
}

pub fn check_gamma_delta_relations(group: &Group) -> LemmaReport {
    let ct = group.conjugacy_classes();
    gamma_delta_verdict(&build_gamma(ct), &build_delta(ct))
}

/// One canonical representative per distinct minimal centralizer: noncentral
/// elements whose centralizer properly contains no other element centralizer.
pub fn minimal_centralizer_reps(group: &Group) -> Result<Vec<GroupElement>> {
    if group.is_abelian() {
        return Err(Error::NotApplicable(
            "abelian group: every centralizer is the whole group".into(),
        ));
    }
    let n = group.order();
    let cents = group.all_centralizer_bits();
    let center = group.center_bits();

    // Distinct noncentral centralizers, each owned by its least element.
    let mut seen: HashMap<&Bitset, ()> = HashMap::new();
    let mut distinct: Vec<(u32, &Bitset, usize)> = Vec::new();
    for i in 0..n {
        if center.contains(i) {
            continue;
        }
        let c = &cents[i];
        if !seen.contains_key(c) {
            seen.insert(c, ());
            distinct.push((i as u32, c, c.len()));
        }
    }

    let mut reps = Vec::new();
    'candidates: for &(rep, set, size) in &distinct {
        for &(_, other, other_size) in &distinct {
            // A proper subgroup has smaller, dividing order.
            if other_size < size && size % other_size == 0 && other.is_subset_of(set) {
                continue 'candidates;
            }
        }
        reps.push(group.element_at(rep as usize));
    }
    Ok(reps)
}

/// True when the element's image in the central quotient has an order with at
/// least two distinct prime factors.
pub fn is_strongly_noncentral(group: &Group, el: GroupElement) -> Result<bool> {
    let o = group.central_quotient_element_order(el)? as u64;
    Ok(arith::prime_divisors(o).len() >= 2)
}

/// Number of conjugacy classes whose elements are strongly noncentral (the
/// property is invariant under conjugation).
pub fn strongly_noncentral_class_count(group: &Group) -> usize {
    group
        .conjugacy_classes()
        .entries
        .iter()
        .filter(|e| is_strongly_noncentral(group, e.representative).unwrap())
        .count()
}

// ----------------------------------------------------------------------
// Centralizer laws
// ----------------------------------------------------------------------

#[derive(Clone, Debug)]
pub enum SamplingPolicy {
    Exhaustive,
    Sample { pairs: usize, seed: u64 },
}

/// Checks, exhaustively or on sampled instances:
/// (i)   C(x) ⊆ C(y) for noncentral x, y implies the class size of y divides
///       that of x and the closed neighborhoods are nested in the
///       common-divisor graph — with equality (partners) when the graph is
///       regular with k >= 1;
/// (ii)  commuting x, y of coprime orders satisfy C(xy) = C(x) ∩ C(y);
/// (iii) C(x) ⊆ C(x^k) for every k, with the conclusions of (i) whenever
///       x and x^k are both noncentral.
pub fn check_centralizer_laws(group: &Group, policy: &SamplingPolicy) -> LemmaReport {
    if group.is_abelian() {
        return LemmaReport::vacuous(Some("abelian group: no noncentral elements".into()));
    }
    let ctx = LawContext::new(group);
    match policy {
        SamplingPolicy::Exhaustive => ctx.run_exhaustive(),
        SamplingPolicy::Sample { pairs, seed } => ctx.run_sampled(*pairs, *seed),
    }
}

struct LawContext<'a> {
    group: &'a Group,
    cents: &'a [Bitset],
    center: &'a Bitset,
    /// Class size per element index.
    size_of: Vec<u64>,
    /// Common-divisor graph vertex index per element (None for central).
    vertex_of: Vec<Option<usize>>,
    neighborhoods: Vec<Vec<bool>>,
    regular: bool,
}

impl<'a> LawContext<'a> {
    fn new(group: &'a Group) -> Self {
        group.ensure_mul_table();
        let ct = group.conjugacy_classes();
        let gamma = build_gamma(ct);
        let g = gamma.graph();
        let m = metrics(g);
        let n = group.order();
        let size_of: Vec<u64> = (0..n)
            .map(|i| ct.class_size_of(group.element_at(i)).unwrap())
            .collect();
        let vertex_of: Vec<Option<usize>> =
            size_of.iter().map(|&s| g.index_of_label(s)).collect();
        let neighborhoods: Vec<Vec<bool>> = (0..g.vertex_count())
            .map(|i| g.closed_neighborhood(i))
            .collect();
        LawContext {
            group,
            cents: group.all_centralizer_bits(),
            center: group.center_bits(),
            size_of,
            vertex_of,
            neighborhoods,
            regular: regular_k(&m).is_some(),
        }
    }

    /// Conclusions of law (i) for an established hypothesis C(x) ⊆ C(y).
    fn containment_conclusions(&self, x: u32, y: u32) -> Option<String> {
        let (sx, sy) = (self.size_of[x as usize], self.size_of[y as usize]);
        if sx % sy != 0 {
            return Some(format!(
                "C({x}) ⊆ C({y}) but class size {sy} of {y} does not divide {sx}",
                x = self.name(x),
                y = self.name(y),
            ));
        }
        let vx = self.vertex_of[x as usize].expect("noncentral element has a vertex");
        let vy = self.vertex_of[y as usize].expect("noncentral element has a vertex");
        let (nx, ny) = (&self.neighborhoods[vx], &self.neighborhoods[vy]);
        let nested = ny.iter().zip(nx).all(|(b, a)| !b || *a);
        if !nested {
            return Some(format!(
                "C({x}) ⊆ C({y}) but the closed neighborhood of {sy} is not inside that of {sx}",
                x = self.name(x),
                y = self.name(y),
            ));
        }
        if self.regular && nx != ny {
            return Some(format!(
                "graph is regular but {sx} and {sy} are not partners (x = {x}, y = {y})",
                x = self.name(x),
                y = self.name(y),
            ));
        }
        None
    }

    fn name(&self, i: u32) -> String {
        self.group.describe(self.group.element_at(i as usize))
    }

    fn commuting_product_law(&self, x: u32, y: u32) -> Option<String> {
        let xy = self.group.mul_idx(x, y);
        let meet = self.cents[x as usize].intersection(&self.cents[y as usize]);
        if self.cents[xy as usize] != meet {
            return Some(format!(
                "C(xy) != C(x) ∩ C(y) for commuting coprime-order x = {}, y = {}",
                self.name(x),
                self.name(y),
            ));
        }
        None
    }

    fn run_exhaustive(&self) -> LemmaReport {
        let n = self.group.order() as u32;
        let mut exercised = 0u64;

        let noncentral: Vec<u32> =
            (0..n).filter(|&i| !self.center.contains(i as usize)).collect();

        // (i) every ordered noncentral pair with nested centralizers.
        for &x in &noncentral {
            for &y in &noncentral {
                if x != y && self.cents[x as usize].is_subset_of(&self.cents[y as usize]) {
                    exercised += 1;
                    if let Some(w) = self.containment_conclusions(x, y) {
                        return LemmaReport::fail(exercised, w);
                    }
                }
            }
        }

        // (ii) every commuting pair of coprime orders.
        let orders: Vec<u64> = (0..n).map(|i| self.group.order_idx(i) as u64).collect();
        for x in 0..n {
            for y in x..n {
                if self.cents[x as usize].contains(y as usize)
                    && arith::gcd(orders[x as usize], orders[y as usize]) == 1
                {
                    exercised += 1;
                    if let Some(w) = self.commuting_product_law(x, y) {
                        return LemmaReport::fail(exercised, w);
                    }
                }
            }
        }

        // (iii) every element against all of its powers.
        for x in 0..n {
            let mut xk = x;
            for _k in 1..=orders[x as usize] {
                exercised += 1;
                if !self.cents[x as usize].is_subset_of(&self.cents[xk as usize]) {
                    return LemmaReport::fail(
                        exercised,
                        format!(
                            "C({}) is not contained in C({})",
                            self.name(x),
                            self.name(xk)
                        ),
                    );
                }
                if xk != x
                    && !self.center.contains(x as usize)
                    && !self.center.contains(xk as usize)
                {
                    if let Some(w) = self.containment_conclusions(x, xk) {
                        return LemmaReport::fail(exercised, w);
                    }
                }
                xk = self.group.mul_idx(xk, x);
            }
        }

        LemmaReport::pass(exercised)
    }

    fn run_sampled(&self, pairs: usize, seed: u64) -> LemmaReport {
        let n = self.group.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut exercised = 0u64;

        let noncentral: Vec<u32> = (0..n as u32)
            .filter(|&i| !self.center.contains(i as usize))
            .collect();

        // (i) random noncentral pairs; the hypothesis filters them.
        for _ in 0..pairs {
            let x = noncentral[rng.gen_range(0..noncentral.len())];
            let y = noncentral[rng.gen_range(0..noncentral.len())];
            if x != y && self.cents[x as usize].is_subset_of(&self.cents[y as usize]) {
                exercised += 1;
                if let Some(w) = self.containment_conclusions(x, y) {
                    return LemmaReport::fail(exercised, w);
                }
            }
        }

        // (ii) random pairs filtered to commuting with coprime orders.
        for _ in 0..pairs {
            let x = rng.gen_range(0..n) as u32;
            let y = rng.gen_range(0..n) as u32;
            if !self.cents[x as usize].contains(y as usize) {
                continue;
            }
            let (ox, oy) = (
                self.group.order_idx(x) as u64,
                self.group.order_idx(y) as u64,
            );
            if arith::gcd(ox, oy) == 1 {
                exercised += 1;
                if let Some(w) = self.commuting_product_law(x, y) {
                    return LemmaReport::fail(exercised, w);
                }
            }
        }

        // (iii) random (element, exponent) pairs.
        for _ in 0..pairs {
            let x = rng.gen_range(0..n) as u32;
            let o = self.group.order_idx(x) as u64;
            let k = rng.gen_range(1..=o);
            let xk = self.group.pow_idx(x, k);
            exercised += 1;
            if !self.cents[x as usize].is_subset_of(&self.cents[xk as usize]) {
                return LemmaReport::fail(
                    exercised,
                    format!(
                        "C({}) is not contained in C({}^{k})",
                        self.name(x),
                        self.name(x)
                    ),
                );
            }
            if xk != x && !self.center.contains(x as usize) && !self.center.contains(xk as usize)
            {
                if let Some(w) = self.containment_conclusions(x, xk) {
                    return LemmaReport::fail(exercised, w);
                }
            }
        }

        LemmaReport::pass(exercised)
    }
}

// ----------------------------------------------------------------------
// Full analysis
// ----------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    /// Global seed; the per-group sampling seed mixes this with the
    /// descriptor, so parallel sweeps are order-independent.
    pub seed: u64,
    /// Orders up to this bound get exhaustive centralizer-law checks.
    pub exhaustive_limit: usize,
    /// Sampled pairs per law above the exhaustive limit.
    pub sample_pairs: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            seed: 0,
            exhaustive_limit: 200,
            sample_pairs: 500,
        }
    }
}

/// Stable per-group seed derived from the descriptor (FNV-1a) and the global
/// seed.
pub fn descriptor_seed(global_seed: u64, descriptor: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in descriptor.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h ^ global_seed.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSection {
    pub vertices: Vec<u64>,
    pub edges: Vec<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_multiplicity: Option<Vec<(u64, usize)>>,
    pub degrees: Vec<usize>,
    pub regularity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub complete: bool,
    pub components: usize,
    pub component_blocks: Vec<Vec<u64>>,
    pub diameter: Diameter,
}

impl GraphSection {
    fn from_graph(g: &LabeledGraph, multiplicity: Option<Vec<(u64, usize)>>) -> GraphSection {
        let m = metrics(g);
        let (regularity, k) = match m.regularity {
            Regularity::EmptyGraph => ("empty", None),
            Regularity::NotRegular => ("not_regular", None),
            Regularity::Regular(k) => ("regular", Some(k)),
        };
        GraphSection {
            vertices: g.labels().to_vec(),
            edges: g.edges(),
            size_multiplicity: multiplicity,
            degrees: m.degrees,
            regularity,
            k,
            complete: m.complete,
            components: m.components.len(),
            component_blocks: m.components,
            diameter: m.diameter,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaSet {
    pub connectivity: LemmaReport,
    pub prime_power: LemmaReport,
    pub centralizer_laws: LemmaReport,
    pub diameter: LemmaReport,
    pub gamma_delta: LemmaReport,
}

impl LemmaSet {
    pub fn any_failed(&self) -> bool {
        self.connectivity.failed()
            || self.prime_power.failed()
            || self.centralizer_laws.failed()
            || self.diameter.failed()
            || self.gamma_delta.failed()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MinimalCentralizer {
    pub element: String,
    pub centralizer_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: usize,
    pub class_sizes: Vec<u64>,
    pub gamma: GraphSection,
    pub delta: GraphSection,
    pub theorem: TheoremVerdict,
    pub lemmas: LemmaSet,
    pub partners: Vec<Vec<u64>>,
    pub minimal_centralizers: Vec<MinimalCentralizer>,
    pub strongly_noncentral_count: usize,
}

impl AnalysisReport {
    pub fn has_failure(&self) -> bool {
        matches!(self.theorem, TheoremVerdict::Counterexample { .. }) || self.lemmas.any_failed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

/// Runs every checker plus the minimal-centralizer and strongly-noncentral
/// surveys on one group.
pub fn analyze(group: &Group, descriptor: &str, config: &AnalysisConfig) -> Result<AnalysisReport> {
    let ct = group.conjugacy_classes();
    let gamma = build_gamma(ct);
    let delta = build_delta(ct);

    let policy = if group.order() <= config.exhaustive_limit {
        SamplingPolicy::Exhaustive
    } else {
        SamplingPolicy::Sample {
            pairs: config.sample_pairs,
            seed: descriptor_seed(config.seed, descriptor),
        }
    };

    let lemmas = LemmaSet {
        connectivity: connectivity_verdict(&gamma),
        prime_power: prime_power_verdict(&gamma),
        centralizer_laws: check_centralizer_laws(group, &policy),
        diameter: diameter_verdict(&gamma),
        gamma_delta: gamma_delta_verdict(&gamma, &delta),
    };

    let minimal_centralizers = match minimal_centralizer_reps(group) {
        Ok(reps) => {
            let cents = group.all_centralizer_bits();
            reps.into_iter()
                .map(|el| MinimalCentralizer {
                    element: group.describe(el),
                    centralizer_order: cents[el.index()].len(),
                })
                .collect()
        }
        Err(Error::NotApplicable(_)) => Vec::new(),
        Err(e) => return Err(e),
    };

    Ok(AnalysisReport {
        group: descriptor.to_string(),
        order: group.order(),
        class_sizes: ct.class_sizes(),
        gamma: GraphSection::from_graph(gamma.graph(), Some(gamma.multiplicity().to_vec())),
        delta: GraphSection::from_graph(delta.graph(), None),
        theorem: theorem_verdict(&gamma),
        lemmas,
        partners: partner_partition(gamma.graph()),
        minimal_centralizers,
        strongly_noncentral_count: strongly_noncentral_class_count(group),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn perm_group(degree: usize, gens: &[&str]) -> Group {
        let gens = gens
            .iter()
            .map(|c| Permutation::parse_cycles(degree, c).unwrap())
            .collect();
        Group::from_generators(degree, gens).unwrap()
    }

    fn s4() -> Group {
        perm_group(4, &["(1 2)", "(1 2 3 4)"])
    }

    fn a5() -> Group {
        perm_group(5, &["(1 2 3)", "(1 2 3 4 5)"])
    }

    #[test]
    fn theorem_confirmed_for_a5() {
        match check_main_theorem(&a5()) {
            TheoremVerdict::Confirmed { k, vertices } => {
                assert_eq!(k, 2);
                assert_eq!(vertices, vec![12, 15, 20]);
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn theorem_confirmed_for_s5() {
        let s5 = perm_group(5, &["(1 2)", "(1 2 3 4 5)"]);
        match check_main_theorem(&s5) {
            TheoremVerdict::Confirmed { k, vertices } => {
                assert_eq!(k, 4);
                assert_eq!(vertices, vec![10, 15, 20, 24, 30]);
            }
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn theorem_vacuous_for_s4() {
        assert_eq!(check_main_theorem(&s4()), TheoremVerdict::Vacuous);
    }

    #[test]
    fn theorem_counterexample_on_synthetic_sizes() {
        // 6, 15, 35, 14 form a 4-cycle under shared prime factors: a 2-regular
        // graph that is not complete. No group produces it; the checker must
        // still flag it.
        let gamma = SizeGraph::from_class_sizes(&[1, 6, 15, 35, 14]);
        match theorem_verdict(&gamma) {
            TheoremVerdict::Counterexample { k, .. } => assert_eq!(k, 2),
            other => panic!("unexpected verdict {other:?}"),
        }
    }

    #[test]
    fn connectivity_verdicts() {
        // S3: two isolated vertices, the allowed disconnected shape.
        let s3 = perm_group(3, &["(1 2 3)", "(1 2)"]);
        let r = check_connectivity_lemma(&s3);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.exercised, 1);

        // A5: regular and connected.
        let r = check_connectivity_lemma(&a5());
        assert_eq!(r.verdict, Verdict::Pass);

        // S4: connected, not regular; neither branch applies.
        let r = check_connectivity_lemma(&s4());
        assert_eq!(r.verdict, Verdict::Vacuous);

        // Synthetic: three isolated vertices violate the disconnected shape.
        let bad = SizeGraph::from_class_sizes(&[1, 2, 3, 5]);
        assert_eq!(connectivity_verdict(&bad).verdict, Verdict::Fail);
    }

    #[test]
    fn prime_power_verdicts() {
        // A5's vertices 12, 15, 20: none a prime power.
        let r = check_ppower_lemma(&a5());
        assert_eq!(r.verdict, Verdict::Vacuous);

        // D8 of order 16: vertices {2, 4}, regular, complete.
        let d8 = perm_group(8, &["(1 2 3 4 5 6 7 8)", "(2 8)(3 7)(4 6)"]);
        assert_eq!(d8.order(), 16);
        let r = check_ppower_lemma(&d8);
        assert_eq!(r.verdict, Verdict::Pass);

        // Synthetic 2-regular non-complete shape with prime-power vertices:
        // two disjoint triangles {4, 6, 10} and {49, 77, 91}.
        let bad = SizeGraph::from_class_sizes(&[1, 4, 6, 10, 49, 77, 91]);
        let m = metrics(bad.graph());
        assert_eq!(m.regularity, Regularity::Regular(2));
        assert!(!m.complete);
        assert_eq!(prime_power_verdict(&bad).verdict, Verdict::Fail);
    }

    #[test]
    fn diameter_verdicts() {
        let r = check_diameter_lemma(&s4());
        assert_eq!(r.verdict, Verdict::Pass);
        let r = check_diameter_lemma(&a5());
        assert_eq!(r.verdict, Verdict::Pass);
        // Synthetic diameter-4 path: 2 - 6 - 15 - 35 - 77.
        let bad = SizeGraph::from_class_sizes(&[1, 2, 6, 15, 35, 77]);
        let m = metrics(bad.graph());
        assert_eq!(m.diameter, Diameter::Finite(4));
        assert_eq!(diameter_verdict(&bad).verdict, Verdict::Fail);
    }

    #[test]
    fn gamma_delta_verdicts() {
        for g in [s4(), a5(), perm_group(3, &["(1 2 3)", "(1 2)"])] {
            let r = check_gamma_delta_relations(&g);
            assert_eq!(r.verdict, Verdict::Pass);
        }
        // Abelian: both graphs empty, zero components on each side.
        let c6 = perm_group(6, &["(1 2 3 4 5 6)"]);
        let r = check_gamma_delta_relations(&c6);
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.note.is_some());
    }

    #[test]
    fn minimal_centralizers_of_s4() {
        let g = s4();
        let reps = minimal_centralizer_reps(&g).unwrap();
        let mut orders: Vec<usize> = reps
            .iter()
            .map(|&el| g.centralizer(el).unwrap().len())
            .collect();
        orders.sort_unstable();
        // Four 3-cycle centralizers of order 3, three transposition
        // centralizers and three 4-cycle centralizers of order 4; the order-8
        // double-transposition centralizers contain a 4-cycle centralizer and
        // are not minimal.
        assert_eq!(orders, vec![3, 3, 3, 3, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn minimal_centralizers_of_s3_and_d4() {
        let s3 = perm_group(3, &["(1 2 3)", "(1 2)"]);
        let reps = minimal_centralizer_reps(&s3).unwrap();
        let mut orders: Vec<usize> = reps
            .iter()
            .map(|&el| s3.centralizer(el).unwrap().len())
            .collect();
        orders.sort_unstable();
        // Three distinct transposition centralizers plus the rotation one.
        assert_eq!(orders, vec![2, 2, 2, 3]);

        let d4 = perm_group(4, &["(1 2 3 4)", "(1 3)"]);
        let reps = minimal_centralizer_reps(&d4).unwrap();
        let orders: Vec<usize> = reps
            .iter()
            .map(|&el| d4.centralizer(el).unwrap().len())
            .collect();
        assert!(orders.iter().all(|&o| o == 4));
        assert_eq!(orders.len(), 3);
    }

    #[test]
    fn minimal_centralizers_not_applicable_for_abelian() {
        let c6 = perm_group(6, &["(1 2 3 4 5 6)"]);
        assert!(matches!(
            minimal_centralizer_reps(&c6),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn minimal_centralizers_are_pairwise_incomparable() {
        for g in [s4(), a5(), perm_group(5, &["(1 2)", "(1 2 3 4 5)"])] {
            let reps = minimal_centralizer_reps(&g).unwrap();
            assert!(!reps.is_empty());
            let cents: Vec<Vec<GroupElement>> =
                reps.iter().map(|&el| g.centralizer(el).unwrap()).collect();
            for (i, a) in cents.iter().enumerate() {
                for (j, b) in cents.iter().enumerate() {
                    if i != j {
                        assert!(!a.iter().all(|x| b.contains(x)), "comparable centralizers");
                    }
                }
            }
        }
    }

    #[test]
    fn strongly_noncentral_detection() {
        let s5 = perm_group(5, &["(1 2)", "(1 2 3 4 5)"]);
        let el = s5
            .elements()
            .find(|&e| s5.describe(e) == "(1 2 3)(4 5)")
            .unwrap();
        assert!(is_strongly_noncentral(&s5, el).unwrap());

        // All element orders in S4 are 1, 2, 3, 4: never two distinct primes.
        let s4 = s4();
        for e in s4.elements() {
            assert!(!is_strongly_noncentral(&s4, e).unwrap());
        }
        assert_eq!(strongly_noncentral_class_count(&s4), 0);
    }

    #[test]
    fn centralizer_laws_pass_exhaustively_on_small_groups() {
        for g in [
            s4(),
            a5(),
            perm_group(3, &["(1 2 3)", "(1 2)"]),
            perm_group(4, &["(1 2 3 4)", "(1 3)"]),
        ] {
            let r = check_centralizer_laws(&g, &SamplingPolicy::Exhaustive);
            assert_eq!(r.verdict, Verdict::Pass, "witness: {:?}", r.witness);
            assert!(r.exercised > 0);
        }
    }

    #[test]
    fn centralizer_laws_vacuous_on_abelian() {
        let c12 = perm_group(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]);
        let r = check_centralizer_laws(&c12, &SamplingPolicy::Exhaustive);
        assert_eq!(r.verdict, Verdict::Vacuous);
    }

    #[test]
    fn centralizer_laws_sampled_match_exhaustive_verdict() {
        let g = perm_group(5, &["(1 2)", "(1 2 3 4 5)"]);
        let r = check_centralizer_laws(
            &g,
            &SamplingPolicy::Sample {
                pairs: 200,
                seed: descriptor_seed(0, "sym:5"),
            },
        );
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn analyze_s4_report_shape() {
        let report = analyze(&s4(), "sym:4", &AnalysisConfig::default()).unwrap();
        assert_eq!(report.order, 24);
        assert_eq!(report.class_sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(report.gamma.vertices, vec![3, 6, 8]);
        assert_eq!(report.theorem, TheoremVerdict::Vacuous);
        assert!(!report.has_failure());
        assert_eq!(report.partners, vec![vec![3], vec![6], vec![8]]);
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["group"], "sym:4");
        assert_eq!(json["strongly_noncentral_count"], 0);
        assert_eq!(json["gamma"]["diameter"], 2);
        assert_eq!(json["lemmas"]["gamma_delta"]["verdict"], "pass");
    }

    #[test]
    fn analyze_abelian_report_is_all_vacuous_or_pass() {
        let c12 = perm_group(12, &["(1 2 3 4 5 6 7 8 9 10 11 12)"]);
        let report = analyze(&c12, "cyc:12", &AnalysisConfig::default()).unwrap();
        assert!(!report.has_failure());
        assert_eq!(report.theorem, TheoremVerdict::Vacuous);
        assert!(report.minimal_centralizers.is_empty());
        assert_eq!(report.gamma.vertices, Vec::<u64>::new());
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["gamma"]["diameter"], "undefined");
    }
}
