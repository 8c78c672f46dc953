//! The acceptance suite: every closed form compared against its oracle on a
//! configurable parameter grid.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{exhaustive_weight_distribution, family_rank, min_distance_bch, min_distance_family, span_words};
use crate::bch::{
    bose_distance, closed_form_dimension, dimension_from_leaders, full_enumerator, generator_and_dimension,
    h_for_index, BchSpec, CodeFamily, CodeFamilySpec, WeightEnumerator,
};
use crate::cyclotomic::{delta_formula, delta_index_bound, CosetTable};
use crate::error::Result;
use crate::field::{FieldContext, FieldParams};
use crate::poly::Poly;
use crate::quadform::{nqb_predict, FormFamily};
use crate::scheme::{enumerate_inner_dist, predicted_inner_dist, DEFAULT_FORM_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCase {
    pub q: u64,
    pub m: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCase {
    pub q: u64,
    pub m: u32,
    pub h: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeCase {
    pub q: u64,
    pub m: u32,
    pub h: u32,
    pub family: CodeFamily,
}

/// A BCH code `C_(n,q,m,δ_i)`; `delta` overrides the expected distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchCase {
    pub q: u64,
    pub m: u32,
    pub i: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
}

/// Parameters for every criterion. Missing fields in a grid file are empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Grid {
    pub coset_formula: Vec<FieldCase>,
    pub inner_dist: Vec<FamilyCase>,
    /// Solution counts are checked for the `inner_dist` families with `m` up to this.
    pub solution_count_max_m: u32,
    pub radical_rank: Vec<FieldCase>,
    pub enumerators: Vec<CodeCase>,
    /// `m` values (over `F_3`) of the `i = 1` codes.
    pub smallest_family: Vec<u32>,
    /// `m` values (over `F_3`) of the `i = 2` codes.
    pub second_family: Vec<u32>,
    pub bch: Vec<BchCase>,
    pub trace_equals_bch: Vec<BchCase>,
    pub structural: Vec<FieldCase>,
    pub random_deltas: usize,
    pub seed: u64,
    pub form_budget: u64,
    pub word_budget: u64,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            coset_formula: Vec::new(),
            inner_dist: Vec::new(),
            solution_count_max_m: 0,
            radical_rank: Vec::new(),
            enumerators: Vec::new(),
            smallest_family: Vec::new(),
            second_family: Vec::new(),
            bch: Vec::new(),
            trace_equals_bch: Vec::new(),
            structural: Vec::new(),
            random_deltas: 0,
            seed: 0,
            form_budget: DEFAULT_FORM_BUDGET,
            word_budget: super::DEFAULT_WORD_BUDGET,
        }
    }
}

impl Grid {
    /// The full default grid.
    pub fn standard() -> Self {
        let fc = |q, m| FieldCase { q, m };
        let fam = |q, m, h| FamilyCase { q, m, h };
        let code = |m, h, family| CodeCase { q: 3, m, h, family };
        let bch = |q, m, i| BchCase { q, m, i, delta: None };
        let mut coset_formula: Vec<FieldCase> =
            [3, 5].into_iter().flat_map(|q| (2..=6).map(move |m| fc(q, m))).collect();
        coset_formula.extend([fc(7, 2), fc(7, 3)]);
        Grid {
            coset_formula,
            inner_dist: vec![
                fam(3, 3, 1),
                fam(3, 4, 1),
                fam(3, 5, 1),
                fam(3, 5, 2),
                fam(3, 6, 1),
                fam(3, 6, 2),
                fam(5, 3, 1),
                fam(5, 4, 1),
            ],
            solution_count_max_m: 4,
            radical_rank: vec![fc(3, 2), fc(3, 3), fc(3, 4)],
            enumerators: vec![
                code(3, 1, CodeFamily::C1),
                code(3, 1, CodeFamily::C1Tilde),
                code(4, 1, CodeFamily::C2),
                code(4, 1, CodeFamily::C2Tilde),
                code(5, 2, CodeFamily::C1),
                code(5, 2, CodeFamily::C1Tilde),
                code(5, 1, CodeFamily::C1Tilde),
            ],
            smallest_family: vec![3, 4, 5],
            second_family: vec![4, 5],
            bch: vec![bch(3, 3, 1), bch(3, 4, 1), bch(3, 5, 1), bch(3, 5, 2), bch(5, 3, 1)],
            trace_equals_bch: vec![bch(3, 3, 1)],
            structural: vec![fc(3, 3), fc(3, 4), fc(3, 5), fc(5, 3)],
            random_deltas: 20,
            seed: 0x5eed,
            // q = 3, m = 6, h = 1 has 3^15 forms
            form_budget: 20_000_000,
            word_budget: super::DEFAULT_WORD_BUDGET,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.coset_formula.is_empty()
            && self.inner_dist.is_empty()
            && self.radical_rank.is_empty()
            && self.enumerators.is_empty()
            && self.smallest_family.is_empty()
            && self.second_family.is_empty()
            && self.bch.is_empty()
            && self.trace_equals_bch.is_empty()
            && self.structural.is_empty()
    }
}

/// One comparison of an observed value against the expected one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u32,
    pub name: String,
    pub passed: bool,
    pub observed: String,
    pub expected: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} {}: observed {}, expected {}",
            self.criterion,
            if self.passed { "ok  " } else { "FAIL" },
            self.name,
            self.observed,
            self.expected
        )
    }
}

pub const CRITERIA: [&str; 9] = [
    "coset-leader formula matches the leader scan",
    "closed-form inner distributions match enumeration",
    "solution counts of every enumerated form",
    "radical rank equals Gram rank",
    "closed-form weight enumerators match enumeration",
    "i = 1 codes over F_3",
    "i = 2 codes over F_3",
    "minimum distance and Bose distance equal delta_i",
    "structural invariants",
];

#[derive(Debug, Clone, Default, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

/// Pass/fail summary of one criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionSummary {
    pub criterion: u32,
    pub title: &'static str,
    pub checks: usize,
    pub failed: usize,
}

impl CriterionSummary {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CriterionSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} ({}): {} [{} checks, {} failed]",
            self.criterion,
            self.title,
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks,
            self.failed
        )
    }
}

impl Report {
    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// One summary per criterion that has at least one check.
    pub fn summaries(&self) -> Vec<CriterionSummary> {
        let mut by: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let e = by.entry(c.criterion).or_default();
            e.0 += 1;
            e.1 += usize::from(!c.passed);
        }
        by.into_iter()
            .map(|(criterion, (checks, failed))| CriterionSummary {
                criterion,
                title: CRITERIA[criterion as usize - 1],
                checks,
                failed,
            })
            .collect()
    }
}

struct Sink {
    criterion: u32,
    checks: Vec<Check>,
}

impl Sink {
    fn new(criterion: u32) -> Self {
        Sink { criterion, checks: Vec::new() }
    }

    fn eq<T: PartialEq + fmt::Display>(&mut self, name: impl Into<String>, observed: T, expected: T) {
        self.checks.push(Check {
            criterion: self.criterion,
            name: name.into(),
            passed: observed == expected,
            observed: observed.to_string(),
            expected: expected.to_string(),
        });
    }

    /// Records a failed check when `r` is an error.
    fn run<T>(&mut self, name: impl Into<String>, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks.push(Check {
                    criterion: self.criterion,
                    name: name.into(),
                    passed: false,
                    observed: format!("error: {e}"),
                    expected: "success".into(),
                });
                None
            }
        }
    }
}

fn context(q: u64, m: u32) -> Result<FieldContext> {
    FieldContext::new(FieldParams::from_q(q, m)?)
}

/// Runs every criterion on `grid`.
pub fn run_acceptance(grid: &Grid) -> Report {
    Report { checks: (1..=CRITERIA.len() as u32).flat_map(|k| run_criterion(grid, k)).collect() }
}

/// Runs the `k`-th criterion (1-based) on `grid`.
pub fn run_criterion(grid: &Grid, k: u32) -> Vec<Check> {
    let mut s = Sink::new(k);
    match k {
        1 => coset_formula(grid, &mut s),
        2 => inner_distributions(grid, &mut s),
        3 => solution_counts(grid, &mut s),
        4 => radical_rank(grid, &mut s),
        5 => enumerators(grid, &mut s),
        6 => smallest_family(grid, &mut s),
        7 => second_family(grid, &mut s),
        8 => distances(grid, &mut s),
        9 => structural(grid, &mut s),
        _ => panic!("no criterion {k}"),
    }
    s.checks
}

fn coset_formula(grid: &Grid, s: &mut Sink) {
    for &FieldCase { q, m } in &grid.coset_formula {
        let Some(table) = s.run(format!("cosets q={q} m={m}"), CosetTable::for_field(q, m)) else { continue };
        for i in 1..=delta_index_bound(m) {
            let name = format!("delta_{i} q={q} m={m}");
            let (Some(formula), Some(scan)) =
                (s.run(name.clone(), delta_formula(q, m, i)), s.run(name.clone(), table.ith_largest_leader(i as usize)))
            else {
                continue;
            };
            s.eq(name, formula, scan);
        }
    }
}

fn min_rank(m: u32, h: u32) -> u32 {
    if m % 2 == 1 {
        2 * h + 1
    } else {
        2 * h
    }
}

fn inner_distributions(grid: &Grid, s: &mut Sink) {
    for &FamilyCase { q, m, h } in &grid.inner_dist {
        let name = format!("q={q} m={m} h={h}");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(fam) = s.run(name.clone(), FormFamily::from_h(m, h)) else { continue };
        let Some(found) = s.run(name.clone(), enumerate_inner_dist(&ctx, &fam, grid.form_budget)) else { continue };
        let Some(want) = s.run(name.clone(), predicted_inner_dist(q, m, h)) else { continue };
        s.eq(format!("{name} distribution"), found.to_string(), want.to_string());
        let lowest = found.min_nonzero_rank().unwrap_or(0);
        s.eq(format!("{name} min nonzero rank"), lowest, min_rank(m, h));
        let positive = lowest > 0 && crate::quadform::Sign::BOTH.iter().any(|&t| *found.get(lowest, t) > 0.into());
        s.eq(format!("{name} count at min rank positive"), positive, true);
    }
}

fn solution_counts(grid: &Grid, s: &mut Sink) {
    for &FamilyCase { q, m, h } in grid.inner_dist.iter().filter(|c| c.m <= grid.solution_count_max_m) {
        let name = format!("q={q} m={m} h={h}");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(fam) = s.run(name.clone(), FormFamily::from_h(m, h)) else { continue };
        let Some(forms) = s.run(name.clone(), fam.forms(&ctx)) else { continue };
        let base = ctx.base();
        let (mut total, mut bad) = (0u64, 0u64);
        for f in forms {
            let rt = f.rank_and_type(&ctx);
            let counts = f.value_counts(&ctx);
            for b in base.elements() {
                total += 1;
                let want = match rt.tau {
                    None => i128::from(if b == 0 { ctx.order() } else { 0 }),
                    Some(t) => nqb_predict(base, m, rt.rank as u32, t, b).unwrap_or(-1),
                };
                bad += u64::from(counts[b as usize] as i128 != want);
            }
        }
        s.eq(format!("{name} mismatched N(b) over {total} (form, b) pairs"), bad, 0);
    }
}

fn radical_rank(grid: &Grid, s: &mut Sink) {
    for &FieldCase { q, m } in &grid.radical_rank {
        let name = format!("all forms q={q} m={m}");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let fam = FormFamily::all_forms(m);
        let Some(forms) = s.run(name.clone(), fam.forms(&ctx)) else { continue };
        let (mut total, mut bad) = (0u64, 0u64);
        for f in forms {
            total += 1;
            bad += u64::from(f.radical_rank(&ctx) != f.gram(&ctx).rank_and_type(ctx.base()).rank);
        }
        s.eq(format!("{name}: rank mismatches over {total} forms"), bad, 0);
    }
}

fn mass(q: u64, k: usize) -> BigUint {
    num_traits::pow(BigUint::from(q), k)
}

fn enumerators(grid: &Grid, s: &mut Sink) {
    for &CodeCase { q, m, h, family } in &grid.enumerators {
        let name = format!("q={q} m={m} h={h} {family}");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(spec) = s.run(name.clone(), CodeFamilySpec::new(family, q, m, h)) else { continue };
        let Some(closed) = s.run(name.clone(), full_enumerator(q, m, h, family)) else { continue };
        let Some(found) = s.run(name.clone(), exhaustive_weight_distribution(&ctx, &spec, grid.word_budget)) else {
            continue;
        };
        s.eq(name, closed.to_string(), found.to_string());
    }
}

/// `1 + count Z^weight`.
fn one_weight(n: u64, count: u64, weight: u64) -> WeightEnumerator {
    let mut w = WeightEnumerator::new(n);
    w.add(0, &BigUint::from(1u32));
    w.add(weight, &BigUint::from(count));
    w
}

fn bch_dimension(q: u64, m: u32, i: u32) -> Result<u64> {
    let ctx = context(q, m)?;
    let table = CosetTable::for_field(q, m)?;
    Ok(generator_and_dimension(&ctx, &table, delta_formula(q, m, i)?)?.1)
}

/// Code ranks (with, without the constant) and the family specs.
fn family_pair(s: &mut Sink, name: &str, ctx: &FieldContext, m: u32, h: u32) -> Option<[(CodeFamilySpec, usize); 2]> {
    let q = ctx.q();
    let with = s.run(name, CodeFamilySpec::new(CodeFamily::for_parity(m, true), q, m, h))?;
    let without = s.run(name, CodeFamilySpec::new(CodeFamily::for_parity(m, false), q, m, h))?;
    let rw = s.run(name, family_rank(ctx, &with))?;
    let rwo = s.run(name, family_rank(ctx, &without))?;
    Some([(with, rw), (without, rwo)])
}

fn smallest_family(grid: &Grid, s: &mut Sink) {
    let q = 3u64;
    for &m in &grid.smallest_family {
        let name = format!("q=3 m={m} i=1");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let h = m / 2;
        let Some([(with, rw), (without, rwo)]) = family_pair(s, &name, &ctx, m, h) else { continue };
        let n = with.n();
        let (k_with, k_without, tilde) = if m % 2 == 1 {
            (m + 1, m, one_weight(n, q.pow(m) - 1, q.pow(m - 1)))
        } else {
            (m / 2 + 1, m / 2, one_weight(n, q.pow(m / 2) - 1, q.pow(m - 1) + q.pow((m - 2) / 2)))
        };
        s.eq(format!("{name} dim {}", with.family), rw as u64, k_with as u64);
        s.eq(format!("{name} dim {}", without.family), rwo as u64, k_without as u64);
        if let Some(k) = s.run(name.clone(), bch_dimension(q, m, 1)) {
            s.eq(format!("{name} BCH dimension"), k, k_with as u64);
        }
        if let Some(w) = s.run(name.clone(), full_enumerator(q, m, h, without.family)) {
            s.eq(format!("{name} {} closed-form enumerator", without.family), w.to_string(), tilde.to_string());
        }
        if let Some(w) = s.run(name.clone(), exhaustive_weight_distribution(&ctx, &without, grid.word_budget)) {
            s.eq(format!("{name} {} enumerated enumerator", without.family), w.to_string(), tilde.to_string());
        }
    }
}

fn second_family(grid: &Grid, s: &mut Sink) {
    let q = 3u64;
    for &m in &grid.second_family {
        let name = format!("q=3 m={m} i=2");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        if m < 4 {
            s.eq(format!("{name} needs m >= 4"), m, 4);
            continue;
        }
        let h = m / 2 - 1;
        let Some([(with, rw), (without, rwo)]) = family_pair(s, &name, &ctx, m, h) else { continue };
        let (k_with, k_without, min_wt) = if m % 2 == 1 {
            (2 * m + 1, 2 * m, q.pow(m - 1) - q.pow((m - 1) / 2))
        } else {
            ((3 * m + 2) / 2, 3 * m / 2, q.pow(m - 1) - q.pow((m - 2) / 2))
        };
        s.eq(format!("{name} dim {}", with.family), rw as u64, k_with as u64);
        s.eq(format!("{name} dim {}", without.family), rwo as u64, k_without as u64);
        if 2 <= delta_index_bound(m) {
            if let Some(k) = s.run(name.clone(), bch_dimension(q, m, 2)) {
                s.eq(format!("{name} BCH dimension"), k, k_with as u64);
            }
        }
        if let Some(d) = s.run(name.clone(), min_distance_family(&ctx, &without, grid.word_budget)) {
            s.eq(format!("{name} {} enumerated min weight", without.family), d, min_wt);
        }
        if let Some(w) = s.run(name.clone(), full_enumerator(q, m, h, without.family)) {
            s.eq(format!("{name} {} closed-form min weight", without.family), w.min_positive_weight().unwrap_or(0), min_wt);
        }
    }
}

fn distances(grid: &Grid, s: &mut Sink) {
    for &BchCase { q, m, i, delta } in &grid.bch {
        let name = format!("q={q} m={m} i={i}");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(table) = s.run(name.clone(), CosetTable::for_field(q, m)) else { continue };
        let Some(d_i) = s.run(name.clone(), delta_formula(q, m, i)) else { continue };
        let expected = delta.unwrap_or(d_i);
        let Some(spec) = s.run(name.clone(), BchSpec::new(&ctx, &table, d_i)) else { continue };
        s.eq(format!("{name} delta_i"), d_i, expected);
        if let Some(d_b) = s.run(name.clone(), bose_distance(&table, d_i)) {
            s.eq(format!("{name} Bose distance"), d_b, expected);
        }
        if let Some(d) = s.run(name.clone(), min_distance_bch(ctx.base(), &spec, grid.word_budget)) {
            s.eq(format!("{name} minimum distance"), d, expected);
        }
        s.eq(format!("{name} dimension"), spec.dimension, closed_form_dimension(m, i, true));
    }
    for &BchCase { q, m, i, .. } in &grid.trace_equals_bch {
        let name = format!("q={q} m={m} i={i} trace code vs BCH code");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(table) = s.run(name.clone(), CosetTable::for_field(q, m)) else { continue };
        let Some(d_i) = s.run(name.clone(), delta_formula(q, m, i)) else { continue };
        let Some(bch) = s.run(name.clone(), BchSpec::new(&ctx, &table, d_i)) else { continue };
        let family = CodeFamily::for_parity(m, true);
        let Some(fam) = s.run(name.clone(), CodeFamilySpec::new(family, q, m, h_for_index(m, i))) else { continue };
        let n = table.n() as usize;
        let Some(trace_words) = s.run(
            name.clone(),
            fam.basis_words(&ctx).and_then(|b| span_words(ctx.base(), &b, n, grid.word_budget)),
        ) else {
            continue;
        };
        let Some(poly_words) = s.run(name.clone(), span_words(ctx.base(), &bch.basis_words(), n, grid.word_budget)) else {
            continue;
        };
        s.eq(format!("{name}: sizes"), trace_words.len(), poly_words.len());
        s.eq(format!("{name}: sets equal"), trace_words == poly_words, true);
    }
}

fn structural(grid: &Grid, s: &mut Sink) {
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed);
    for &FieldCase { q, m } in &grid.structural {
        let name = format!("q={q} m={m}");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(table) = s.run(name.clone(), CosetTable::for_field(q, m)) else { continue };
        let n = table.n();
        let base = ctx.base();
        let xn = Poly::x_n_minus_one(base, n as usize);
        for _ in 0..grid.random_deltas {
            let delta = rng.gen_range(2..=n);
            let Some((g, k, h)) = s.run(format!("{name} delta={delta}"), generator_and_dimension(&ctx, &table, delta))
            else {
                continue;
            };
            s.eq(format!("{name} delta={delta} g*h = x^n - 1"), g.mul(base, &h) == xn, true);
            s.eq(format!("{name} delta={delta} n - deg g"), k, dimension_from_leaders(&table, delta));
        }
    }
    for &CodeCase { q, m, h, family } in &grid.enumerators {
        let name = format!("q={q} m={m} h={h} {family} mass");
        let Some(ctx) = s.run(name.clone(), context(q, m)) else { continue };
        let Some(spec) = s.run(name.clone(), CodeFamilySpec::new(family, q, m, h)) else { continue };
        let Some(k) = s.run(name.clone(), family_rank(&ctx, &spec)) else { continue };
        if let Some(w) = s.run(name.clone(), full_enumerator(q, m, h, family)) {
            s.eq(format!("{name} closed form"), w.total(), mass(q, k));
        }
        if let Some(w) = s.run(name.clone(), exhaustive_weight_distribution(&ctx, &spec, grid.word_budget)) {
            s.eq(format!("{name} enumerated"), w.total(), mass(q, k));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_gives_empty_report() {
        let g = Grid::default();
        assert!(g.is_empty());
        let r = run_acceptance(&g);
        assert!(r.is_empty());
        assert!(r.all_passed());
        assert!(r.summaries().is_empty());
    }

    #[test]
    fn wrong_delta_fails_naming_the_check() {
        let g = Grid { bch: vec![BchCase { q: 3, m: 3, i: 1, delta: Some(6) }], ..Grid::default() };
        let r = run_acceptance(&g);
        assert!(!r.all_passed());
        let names: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(names.contains(&"q=3 m=3 i=1 minimum distance"), "{names:?}");
        assert!(names.contains(&"q=3 m=3 i=1 Bose distance"));
        assert_eq!(r.summaries()[0].criterion, 8);
        assert!(!r.summaries()[0].passed());
    }

    #[test]
    fn errors_become_failed_checks() {
        let g = Grid { inner_dist: vec![FamilyCase { q: 3, m: 3, h: 5 }], ..Grid::default() };
        let r = run_acceptance(&g);
        assert_eq!(r.checks.len(), 1);
        assert!(r.checks[0].observed.starts_with("error"));
    }

    #[test]
    fn grid_round_trips_through_json() {
        let g = Grid::standard();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(serde_json::from_str::<Grid>(&text).unwrap(), g);
        let partial: Grid = serde_json::from_str(r#"{"bch":[{"q":3,"m":3,"i":1}]}"#).unwrap();
        assert_eq!(partial.bch.len(), 1);
        assert!(partial.inner_dist.is_empty());
        assert!(serde_json::from_str::<Grid>(r#"{"bogus":1}"#).is_err());
    }

    #[test]
    fn small_grid_passes() {
        let g = Grid {
            coset_formula: vec![FieldCase { q: 3, m: 3 }],
            inner_dist: vec![FamilyCase { q: 3, m: 3, h: 1 }],
            solution_count_max_m: 3,
            radical_rank: vec![FieldCase { q: 3, m: 2 }],
            enumerators: vec![CodeCase { q: 3, m: 3, h: 1, family: CodeFamily::C1 }],
            smallest_family: vec![3],
            second_family: vec![],
            bch: vec![BchCase { q: 3, m: 3, i: 1, delta: None }],
            trace_equals_bch: vec![BchCase { q: 3, m: 3, i: 1, delta: None }],
            structural: vec![FieldCase { q: 3, m: 3 }],
            random_deltas: 5,
            ..Grid::default()
        };
        let r = run_acceptance(&g);
        for c in r.failures() {
            eprintln!("{c}");
        }
        assert!(r.all_passed());
        assert_eq!(r.summaries().len(), 8);
    }
}
