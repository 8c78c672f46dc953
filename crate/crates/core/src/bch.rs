//! Narrow-sense BCH codes of length `n = (q^m - 1)/2`, their trace
//! representations `C_{1,h}`, `C_{2,h}` (and the subcodes without the
//! constant term), and their weight enumerators.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{delta_formula, delta_index_bound, CosetTable};
use crate::error::{Error, Result};
use crate::field::{prime_power, BaseElem, Elem, FieldContext};
use crate::oracle;
use crate::poly::Poly;
use crate::quadform::{check_h, FormFamily, Sign};
use crate::scheme::predicted_inner_dist;

/// Number of random codewords drawn when the minimum distance cannot be
/// found exhaustively.
pub const DISTANCE_SAMPLES: usize = 20_000;

/// `m_s(x) = Π_{i ∈ C_s} (x - β^i)`, with coefficients projected to `F_q`.
pub fn minimal_poly(ctx: &FieldContext, table: &CosetTable, s: u64) -> Result<Poly> {
    if s >= table.n() {
        return Err(Error::IndexOutOfRange { index: s, max: table.n() - 1 });
    }
    let mut acc = vec![Elem::ONE];
    for &i in &table.coset_containing(s).elements {
        let root = ctx.alpha_pow(2 * i as i64);
        let mut next = vec![Elem::ZERO; acc.len() + 1];
        for (j, &c) in acc.iter().enumerate() {
            next[j + 1] = ctx.add(next[j + 1], c);
            next[j] = ctx.sub(next[j], ctx.mul(root, c));
        }
        acc = next;
    }
    let coeffs = acc.into_iter().map(|c| ctx.to_base(c).ok_or(Error::CoefficientOutsideBase)).collect::<Result<_>>()?;
    Ok(Poly::new(coeffs))
}

fn check_delta(table: &CosetTable, delta: u64) -> Result<()> {
    if delta < 2 || delta > table.n() {
        return Err(Error::InvalidParams(format!("designed distance {delta} must lie in 2..={}", table.n())));
    }
    Ok(())
}

/// Leaders of the cosets met by `1, …, δ-1`.
fn zero_leaders(table: &CosetTable, delta: u64) -> BTreeSet<u64> {
    (1..delta).map(|s| table.leader_of(s)).collect()
}

/// The generator `g`, the dimension `k = n - deg g` and the parity-check
/// polynomial `(x^n - 1)/g` of `C_(n,q,m,δ)`.
pub fn generator_and_dimension(ctx: &FieldContext, table: &CosetTable, delta: u64) -> Result<(Poly, u64, Poly)> {
    check_delta(table, delta)?;
    let base = ctx.base();
    let mut g = Poly::one();
    for s in zero_leaders(table, delta) {
        g = g.mul(base, &minimal_poly(ctx, table, s)?);
    }
    let n = table.n();
    let k = n - g.degree().expect("nonzero") as u64;
    let (h, rem) = Poly::x_n_minus_one(base, n as usize).divrem(base, &g);
    if !rem.is_zero() {
        return Err(Error::InvalidParams("generator does not divide x^n - 1".into()));
    }
    Ok((g, k, h))
}

/// `Σ_{s ∈ Γ, s >= δ} l_s + 1`.
pub fn dimension_from_leaders(table: &CosetTable, delta: u64) -> u64 {
    table.cosets().iter().filter(|c| c.leader >= delta).map(|c| c.size() as u64).sum::<u64>() + 1
}

/// The largest `δ' >= δ` whose range `1, …, δ'-1` meets the same cosets as
/// `1, …, δ-1`.
pub fn bose_distance(table: &CosetTable, delta: u64) -> Result<u64> {
    check_delta(table, delta)?;
    let hit = zero_leaders(table, delta);
    Ok((delta..table.n()).find(|&s| !hit.contains(&table.leader_of(s))).unwrap_or(table.n()))
}

/// A narrow-sense BCH code with all derived data.
#[derive(Debug, Clone)]
pub struct BchSpec {
    pub q: u64,
    pub m: u32,
    pub n: u64,
    pub delta: u64,
    pub generator: Poly,
    pub parity_check: Poly,
    pub dimension: u64,
    pub bose_distance: u64,
}

impl BchSpec {
    pub fn new(ctx: &FieldContext, table: &CosetTable, delta: u64) -> Result<Self> {
        let (generator, dimension, parity_check) = generator_and_dimension(ctx, table, delta)?;
        Ok(BchSpec {
            q: ctx.q(),
            m: ctx.m(),
            n: table.n(),
            delta,
            generator,
            parity_check,
            dimension,
            bose_distance: bose_distance(table, delta)?,
        })
    }

    /// `x^i g(x)` for `i < k`, a basis of the code.
    pub fn basis_words(&self) -> Vec<Vec<BaseElem>> {
        (0..self.dimension as usize).map(|i| self.generator.cyclic_shift(self.n as usize, i)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeFamily {
    #[serde(rename = "c1")]
    C1,
    #[serde(rename = "c1-tilde")]
    C1Tilde,
    #[serde(rename = "c2")]
    C2,
    #[serde(rename = "c2-tilde")]
    C2Tilde,
}

impl CodeFamily {
    pub const ALL: [CodeFamily; 4] = [CodeFamily::C1, CodeFamily::C1Tilde, CodeFamily::C2, CodeFamily::C2Tilde];

    pub fn includes_constant(self) -> bool {
        matches!(self, CodeFamily::C1 | CodeFamily::C2)
    }

    pub fn for_odd_m(self) -> bool {
        matches!(self, CodeFamily::C1 | CodeFamily::C1Tilde)
    }

    pub fn name(self) -> &'static str {
        match self {
            CodeFamily::C1 => "c1",
            CodeFamily::C1Tilde => "c1-tilde",
            CodeFamily::C2 => "c2",
            CodeFamily::C2Tilde => "c2-tilde",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        CodeFamily::ALL.into_iter().find(|f| f.name() == s)
    }

    /// The family with (`true`) or without the constant term for this parity of `m`.
    pub fn for_parity(m: u32, with_constant: bool) -> Self {
        match (m % 2 == 1, with_constant) {
            (true, true) => CodeFamily::C1,
            (true, false) => CodeFamily::C1Tilde,
            (false, true) => CodeFamily::C2,
            (false, false) => CodeFamily::C2Tilde,
        }
    }
}

impl fmt::Display for CodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One of `C_{1,h}`, `C~_{1,h}`, `C_{2,h}`, `C~_{2,h}` over `F_q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeFamilySpec {
    pub family: CodeFamily,
    pub q: u64,
    pub m: u32,
    pub h: u32,
}

impl CodeFamilySpec {
    pub fn new(family: CodeFamily, q: u64, m: u32, h: u32) -> Result<Self> {
        check_q(q)?;
        if family.for_odd_m() != (m % 2 == 1) {
            return Err(Error::FamilyParity {
                family: family.name(),
                parity: if m % 2 == 1 { "odd" } else { "even" },
            });
        }
        check_h(m, h)?;
        Ok(CodeFamilySpec { family, q, m, h })
    }

    pub fn includes_constant(&self) -> bool {
        self.family.includes_constant()
    }

    pub fn n(&self) -> u64 {
        (self.q.pow(self.m) - 1) / 2
    }

    pub fn form_family(&self) -> FormFamily {
        FormFamily::from_h(self.m, self.h).expect("validated on construction")
    }

    /// Dimension over `F_q`, assuming distinct inputs give distinct words.
    pub fn dimension(&self) -> u32 {
        self.form_family().dimension() + u32::from(self.includes_constant())
    }

    /// Generators of the code as an `F_q`-space: one word per coefficient
    /// direction, plus the all-one word when the constant is present.
    pub fn basis_words(&self, ctx: &FieldContext) -> Result<Vec<Vec<BaseElem>>> {
        self.check_ctx(ctx)?;
        let n = self.n();
        let mut out: Vec<Vec<BaseElem>> = self
            .form_family()
            .basis(ctx)?
            .iter()
            .map(|f| (0..n).map(|l| f.eval(ctx, ctx.alpha_pow(l as i64))).collect())
            .collect();
        if self.includes_constant() {
            out.push(vec![1; n as usize]);
        }
        Ok(out)
    }

    fn check_ctx(&self, ctx: &FieldContext) -> Result<()> {
        if ctx.q() != self.q || ctx.m() != self.m {
            return Err(Error::ShapeMismatch(format!(
                "code over q = {}, m = {} used with a field for q = {}, m = {}",
                self.q,
                self.m,
                ctx.q(),
                ctx.m()
            )));
        }
        Ok(())
    }
}

fn check_q(q: u64) -> Result<()> {
    let (p, _) = prime_power(q)?;
    if p == 2 {
        return Err(Error::EvenCharacteristic(p));
    }
    Ok(())
}

/// The word `(Q(α^l) + a)_{l=0}^{n-1}`; `coeffs` follows the slot order of
/// the form family, and `a` must be present exactly for non-tilde codes.
pub fn trace_codeword(
    ctx: &FieldContext,
    spec: &CodeFamilySpec,
    coeffs: &[Elem],
    a: Option<BaseElem>,
) -> Result<Vec<BaseElem>> {
    spec.check_ctx(ctx)?;
    if a.is_some() != spec.includes_constant() {
        return Err(Error::ShapeMismatch(format!(
            "family {} {} a constant term",
            spec.family,
            if spec.includes_constant() { "needs" } else { "has no" }
        )));
    }
    let form = spec.form_family().form(ctx, coeffs)?;
    let base = ctx.base();
    let a = a.unwrap_or(0);
    if a as usize >= base.q() {
        return Err(Error::IndexOutOfRange { index: a as u64, max: base.q() as u64 - 1 });
    }
    Ok((0..spec.n()).map(|l| base.add(form.eval(ctx, ctx.alpha_pow(l as i64)), a)).collect())
}

/// Exact map weight → number of words, for words of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightEnumerator {
    n: u64,
    counts: BTreeMap<u64, BigUint>,
}

impl WeightEnumerator {
    pub fn new(n: u64) -> Self {
        WeightEnumerator { n, counts: BTreeMap::new() }
    }

    /// From a dense histogram indexed by weight.
    pub fn from_histogram(n: u64, hist: &[u64]) -> Self {
        let mut w = WeightEnumerator::new(n);
        for (weight, &c) in hist.iter().enumerate() {
            w.add(weight as u64, &BigUint::from(c));
        }
        w
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn add(&mut self, weight: u64, count: &BigUint) {
        assert!(weight <= self.n, "weight {weight} exceeds length {}", self.n);
        if count.is_zero() {
            return;
        }
        *self.counts.entry(weight).or_default() += count;
    }

    /// Adds `scale` copies of `other`.
    pub fn add_scaled(&mut self, other: &WeightEnumerator, scale: &BigUint) {
        for (&w, c) in &other.counts {
            self.add(w, &(c * scale));
        }
    }

    pub fn count(&self, weight: u64) -> BigUint {
        self.counts.get(&weight).cloned().unwrap_or_default()
    }

    /// `(weight, count)` in ascending weight, nonzero counts only.
    pub fn pairs(&self) -> impl Iterator<Item = (u64, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    pub fn min_positive_weight(&self) -> Option<u64> {
        self.counts.keys().copied().find(|&w| w > 0)
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, c) in self.pairs() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (w, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "Z^{w}")?,
                _ => write!(f, "{c}Z^{w}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn weight_from(twice: i128) -> Result<u64> {
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvalidParams(format!("weight {twice}/2 is not a nonnegative integer")));
    }
    u64::try_from(twice / 2).map_err(|_| Error::Overflow("weight"))
}

/// `W_{r,τ}`: the weights of `(Q(α^l) + a)_l` over `a ∈ F_q`
/// (`with_constant`), or of `(Q(α^l))_l` alone, for `Q` of rank `r` and type `τ`.
pub fn weight_poly(q: u64, m: u32, r: u32, tau: Sign, with_constant: bool) -> Result<WeightEnumerator> {
    check_q(q)?;
    if r == 0 || r > m {
        return Err(Error::IndexOutOfRange { index: r as u64, max: m as u64 });
    }
    let qi = q as i128;
    let pow = |e: u32| qi.checked_pow(e).ok_or(Error::Overflow("weight_poly"));
    let qm = pow(m)?;
    let top = qm - pow(m - 1)?;
    let eta = if q % 4 == 3 { -1i128 } else { 1 };
    let mut w = WeightEnumerator::new(((qm - 1) / 2) as u64);
    let t = tau.value() as i128;
    let half_q = BigUint::from((q - 1) / 2);
    if r % 2 == 1 {
        w.add(weight_from(top)?, &BigUint::one());
        if with_constant {
            let e = t * eta.pow((r - 1) / 2) * pow(m - r.div_ceil(2))?;
            w.add(weight_from(top - e - 1)?, &half_q);
            w.add(weight_from(top + e - 1)?, &half_q);
        }
    } else {
        let e = t * eta.pow(r / 2) * pow(m - (r + 2) / 2)?;
        w.add(weight_from(top - e * (qi - 1))?, &BigUint::one());
        if with_constant {
            w.add(weight_from(top + e - 1)?, &BigUint::from(q - 1));
        }
    }
    Ok(w)
}

/// The closed-form weight enumerator of a code family: the zero word, the
/// nonzero constants (non-tilde only), and `Σ a_{r,τ} W_{r,τ}`.
pub fn full_enumerator(q: u64, m: u32, h: u32, family: CodeFamily) -> Result<WeightEnumerator> {
    let spec = CodeFamilySpec::new(family, q, m, h)?;
    let dist = predicted_inner_dist(q, m, h)?;
    let with_constant = spec.includes_constant();
    let mut out = WeightEnumerator::new(spec.n());
    out.add(0, &BigUint::one());
    if with_constant {
        out.add(spec.n(), &BigUint::from(q - 1));
    }
    let start = if m % 2 == 1 { 2 * h + 1 } else { 2 * h };
    for r in start..=m {
        for t in Sign::BOTH {
            let a = dist.get(r, t);
            if a.is_zero() {
                continue;
            }
            let a = a.to_biguint().expect("inner distribution entries are nonnegative");
            out.add_scaled(&weight_poly(q, m, r, t, with_constant)?, &a);
        }
    }
    let expected = num_traits::pow(BigUint::from(q), spec.dimension() as usize);
    let found = out.total();
    if found != expected {
        return Err(Error::MassMismatch { found: found.to_string(), expected: expected.to_string() });
    }
    Ok(out)
}

/// Minimum distance: exact when the code is small enough to enumerate,
/// otherwise `lower <= d <= upper` from the BCH bound and random codewords.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Distance {
    Exact(u64),
    Bracket { lower: u64, upper: u64 },
}

/// Parameters of `C_(n,q,m,δ_i)` and its trace description.
#[derive(Debug, Clone)]
pub struct BchParameters {
    pub q: u64,
    pub m: u32,
    pub i: u32,
    pub n: u64,
    /// `n - deg g`.
    pub k: u64,
    /// `i m + 1` (odd `m`) or `(i-1) m + m/2 + 1` (even `m`).
    pub k_closed_form: u64,
    pub delta: u64,
    pub d_b: u64,
    pub h: u32,
    pub family: CodeFamily,
    pub distance: Distance,
    pub generator: Poly,
}

/// `k` of `C_(n,q,m,δ_i)` (`with_constant`) or of its subcode without the constant term.
pub fn closed_form_dimension(m: u32, i: u32, with_constant: bool) -> u64 {
    let (m, i) = (m as u64, i as u64);
    let k = if m % 2 == 1 { i * m + 1 } else { (i - 1) * m + m / 2 + 1 };
    k - u64::from(!with_constant)
}

/// `h = ⌊m/2⌋ - i + 1`.
pub fn h_for_index(m: u32, i: u32) -> u32 {
    m / 2 - i + 1
}

pub fn bch_parameters(ctx: &FieldContext, i: u32, word_budget: u64) -> Result<BchParameters> {
    let (q, m) = (ctx.q(), ctx.m());
    let bound = delta_index_bound(m);
    if m < 2 || i == 0 || i > bound {
        return Err(Error::IndexOutOfRange { index: i as u64, max: bound as u64 });
    }
    let table = CosetTable::for_field(q, m)?;
    let delta = delta_formula(q, m, i)?;
    let spec = BchSpec::new(ctx, &table, delta)?;
    let distance = match oracle::min_distance_bch(ctx.base(), &spec, word_budget) {
        Ok(d) => Distance::Exact(d),
        Err(Error::BudgetExceeded { .. }) => {
            Distance::Bracket { lower: delta, upper: sampled_min_weight(ctx, &spec, DISTANCE_SAMPLES) }
        }
        Err(e) => return Err(e),
    };
    let h = h_for_index(m, i);
    Ok(BchParameters {
        q,
        m,
        i,
        n: spec.n,
        k: spec.dimension,
        k_closed_form: closed_form_dimension(m, i, true),
        delta,
        d_b: spec.bose_distance,
        h,
        family: CodeFamily::for_parity(m, true),
        distance,
        generator: spec.generator,
    })
}

/// Smallest positive weight among random nonzero combinations of the
/// generator's shifts (seeded, so repeatable).
fn sampled_min_weight(ctx: &FieldContext, spec: &BchSpec, samples: usize) -> u64 {
    let base = ctx.base();
    let basis = spec.basis_words();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.n ^ spec.delta);
    let mut best = spec.generator.coeffs().iter().filter(|&&c| c != 0).count() as u64;
    for _ in 0..samples {
        let mut w = vec![0; spec.n as usize];
        for b in &basis {
            let c = rng.gen_range(0..base.q()) as BaseElem;
            if c != 0 {
                for (x, &y) in w.iter_mut().zip(b) {
                    *x = base.add(*x, base.mul(c, y));
                }
            }
        }
        let wt = w.iter().filter(|&&x| x != 0).count() as u64;
        if wt > 0 {
            best = best.min(wt);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldParams;

    fn ctx(q: u64, m: u32) -> FieldContext {
        FieldContext::new(FieldParams::from_q(q, m).unwrap()).unwrap()
    }

    #[test]
    fn minimal_poly_examples() {
        let c = ctx(3, 3);
        let t = CosetTable::for_field(3, 3).unwrap();
        let b = c.base();
        assert_eq!(minimal_poly(&c, &t, 0).unwrap(), Poly::new(vec![2, 1]));
        let m1 = minimal_poly(&c, &t, 1).unwrap();
        assert_eq!(m1.degree(), Some(3));
        assert!(m1.is_monic());
        let prod = t.leaders().iter().fold(Poly::one(), |acc, &s| acc.mul(b, &minimal_poly(&c, &t, s).unwrap()));
        assert_eq!(prod, Poly::x_n_minus_one(b, 13));
        assert!(minimal_poly(&c, &t, 13).is_err());
    }

    #[test]
    fn generator_examples() {
        let c = ctx(3, 3);
        let t = CosetTable::for_field(3, 3).unwrap();
        let b = c.base();
        let (g, k, h) = generator_and_dimension(&c, &t, 7).unwrap();
        assert_eq!((g.degree(), k), (Some(9), 4));
        assert_eq!(dimension_from_leaders(&t, 7), 4);
        assert_eq!(g.mul(b, &h), Poly::x_n_minus_one(b, 13));
        let (g, k, _) = generator_and_dimension(&c, &t, 2).unwrap();
        assert_eq!(g, minimal_poly(&c, &t, 1).unwrap());
        assert_eq!(k, 10);
        assert!(generator_and_dimension(&c, &t, 1).is_err());
        assert!(generator_and_dimension(&c, &t, 14).is_err());
    }

    #[test]
    fn bose_distance_examples() {
        let t = CosetTable::new(3, 13).unwrap();
        assert_eq!(bose_distance(&t, 7).unwrap(), 7);
        assert_eq!(bose_distance(&t, 5).unwrap(), 7);
        assert_eq!(bose_distance(&t, 6).unwrap(), 7);
        for s in [2, 4] {
            assert_eq!(bose_distance(&t, s).unwrap(), s);
        }
        assert_eq!(bose_distance(&t, 8).unwrap(), 13);
    }

    #[test]
    fn trace_codeword_examples() {
        let c = ctx(3, 3);
        let spec = CodeFamilySpec::new(CodeFamily::C1, 3, 3, 1).unwrap();
        assert!(trace_codeword(&c, &spec, &[Elem::ZERO], Some(0)).unwrap().iter().all(|&x| x == 0));
        let w = trace_codeword(&c, &spec, &[Elem::ZERO], Some(2)).unwrap();
        assert_eq!(w.iter().filter(|&&x| x != 0).count(), 13);
        let w = trace_codeword(&c, &spec, &[Elem::ONE], Some(0)).unwrap();
        assert!([7, 9, 10].contains(&w.iter().filter(|&&x| x != 0).count()));
        assert!(trace_codeword(&c, &spec, &[Elem::ONE], None).is_err());
        let tilde = CodeFamilySpec::new(CodeFamily::C1Tilde, 3, 3, 1).unwrap();
        assert!(trace_codeword(&c, &tilde, &[Elem::ONE], Some(0)).is_err());
        assert!(trace_codeword(&c, &spec, &[Elem::ONE, Elem::ONE], Some(0)).is_err());
    }

    #[test]
    fn family_validation() {
        assert!(matches!(CodeFamilySpec::new(CodeFamily::C2, 3, 3, 1), Err(Error::FamilyParity { .. })));
        assert!(CodeFamilySpec::new(CodeFamily::C1, 3, 3, 2).is_err());
        assert!(CodeFamilySpec::new(CodeFamily::C1, 4, 3, 1).is_err());
        assert_eq!(CodeFamilySpec::new(CodeFamily::C2, 3, 4, 2).unwrap().dimension(), 3);
        assert_eq!(CodeFamilySpec::new(CodeFamily::C2Tilde, 3, 4, 1).unwrap().dimension(), 6);
        assert_eq!(CodeFamily::parse("c2-tilde"), Some(CodeFamily::C2Tilde));
    }

    #[test]
    fn weight_poly_examples() {
        let w = weight_poly(3, 3, 3, Sign::Plus, true).unwrap();
        assert_eq!(w.to_string(), "Z^7 + Z^9 + Z^10");
        assert_eq!(w.total(), BigUint::from(3u32));
        for r in [1, 3, 5] {
            for t in Sign::BOTH {
                let w = weight_poly(5, 5, r, t, false).unwrap();
                assert_eq!(w.to_string(), format!("Z^{}", (3125 - 625) / 2));
            }
        }
        assert_eq!(weight_poly(5, 4, 2, Sign::Minus, true).unwrap().total(), BigUint::from(5u32));
        assert!(weight_poly(3, 3, 4, Sign::Plus, true).is_err());
    }

    /// Each fragment agrees with counting zeros through the solution counts.
    #[test]
    fn weight_poly_matches_solution_counts() {
        for (q, m) in [(3u64, 3u32), (3, 4), (5, 3), (7, 2), (9, 2)] {
            let c = ctx(q, m);
            let base = c.base();
            let qm = c.order() as i128;
            for r in 1..=m {
                for t in Sign::BOTH {
                    let mut want = WeightEnumerator::new(c.n());
                    for a in base.elements() {
                        let zeros = crate::quadform::nqb_predict(base, m, r, t, base.neg(a)).unwrap()
                            - i128::from(a == 0);
                        want.add(((qm - 1 - zeros) / 2) as u64, &BigUint::one());
                    }
                    assert_eq!(weight_poly(q, m, r, t, true).unwrap(), want, "q={q} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn full_enumerator_example() {
        let w = full_enumerator(3, 3, 1, CodeFamily::C1).unwrap();
        assert_eq!(w.to_string(), "1 + 26Z^7 + 26Z^9 + 26Z^10 + 2Z^13");
        assert_eq!(w.total(), BigUint::from(81u32));
        assert!(full_enumerator(3, 3, 1, CodeFamily::C2).is_err());
    }

    #[test]
    fn tilde_enumerators_of_smallest_family() {
        for m in [3u32, 5] {
            let w = full_enumerator(3, m, (m - 1) / 2, CodeFamily::C1Tilde).unwrap();
            assert_eq!(w.to_string(), format!("1 + {}Z^{}", 3u64.pow(m) - 1, 3u64.pow(m - 1)));
        }
        let w = full_enumerator(3, 4, 2, CodeFamily::C2Tilde).unwrap();
        assert_eq!(w.to_string(), format!("1 + {}Z^{}", 9 - 1, 27 + 3));
    }

    #[test]
    fn bch_parameter_examples() {
        let c = ctx(3, 3);
        let p = bch_parameters(&c, 1, 10_000_000).unwrap();
        assert_eq!((p.n, p.k, p.k_closed_form, p.delta, p.d_b, p.h), (13, 4, 4, 7, 7, 1));
        assert_eq!(p.distance, Distance::Exact(7));
        assert_eq!(p.family, CodeFamily::C1);
        assert!(bch_parameters(&c, 2, 10).is_err());
        // a tiny budget forces the sampled bracket
        let p = bch_parameters(&c, 1, 10).unwrap();
        match p.distance {
            Distance::Bracket { lower, upper } => assert!(lower == 7 && upper >= 7),
            d => panic!("unexpected {d:?}"),
        }
        let c = ctx(3, 4);
        let p = bch_parameters(&c, 1, 10_000_000).unwrap();
        assert_eq!((p.k, p.k_closed_form, p.delta, p.h), (3, 3, 25, 2));
        assert_eq!(p.distance, Distance::Exact(25));
    }

    #[test]
    fn closed_form_dimensions() {
        assert_eq!(closed_form_dimension(5, 1, true), 6);
        assert_eq!(closed_form_dimension(5, 2, true), 11);
        assert_eq!(closed_form_dimension(4, 1, true), 3);
        assert_eq!(closed_form_dimension(4, 2, true), 7);
        assert_eq!(closed_form_dimension(4, 2, false), 6);
        assert_eq!(h_for_index(5, 2), 1);
        assert_eq!(h_for_index(4, 1), 2);
    }
}
