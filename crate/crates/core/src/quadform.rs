//! Quadratic forms `Q(x) = Tr(Σ a_j x^(q^k_j + 1))` on `F_{q^m}` viewed as an
//! `m`-dimensional space over `F_q`, their polar bilinear forms, rank, type
//! and value counts.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{BaseElem, BaseField, Elem, FieldContext};

/// A type `τ ∈ {+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }
}

/// Rank and type of a form; the type is absent for the zero form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RankType {
    pub rank: usize,
    pub tau: Option<Sign>,
}

impl RankType {
    pub fn tau(&self) -> Result<Sign> {
        self.tau.ok_or(Error::UndefinedType)
    }
}

/// A symmetric matrix over `F_q`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GramForm {
    dim: usize,
    entries: Vec<BaseElem>,
}

impl GramForm {
    pub fn new(dim: usize, entries: Vec<BaseElem>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::ShapeMismatch(format!("{} entries for a {dim}x{dim} matrix", entries.len())));
        }
        let g = GramForm { dim, entries };
        if !g.is_symmetric() {
            return Err(Error::ShapeMismatch("matrix is not symmetric".into()));
        }
        Ok(g)
    }

    pub fn zero(dim: usize) -> Self {
        GramForm { dim, entries: vec![0; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> BaseElem {
        self.entries[i * self.dim + j]
    }

    pub fn entries(&self) -> &[BaseElem] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn rank_and_type(&self, base: &BaseField) -> RankType {
        let mut work = self.entries.clone();
        rank_and_type_in_place(base, &mut work, self.dim)
    }
}

/// Congruent diagonalization of the symmetric `dim × dim` matrix in `a`
/// (destroyed). The type is `η` of the product of the nonzero pivots.
pub fn rank_and_type_in_place(base: &BaseField, a: &mut [BaseElem], dim: usize) -> RankType {
    let mut det: BaseElem = 1;
    let mut rank = 0;
    for k in 0..dim {
        let pivot = match (k..dim).find(|&i| a[i * dim + i] != 0) {
            Some(i) => i,
            None => {
                let Some((i, j)) = (k..dim)
                    .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i * dim + j] != 0)
                else {
                    break;
                };
                // x_i -> x_i + x_j makes the (i, i) entry 2 a_ij
                for t in k..dim {
                    a[i * dim + t] = base.add(a[i * dim + t], a[j * dim + t]);
                }
                for t in k..dim {
                    a[t * dim + i] = base.add(a[t * dim + i], a[t * dim + j]);
                }
                i
            }
        };
        if pivot != k {
            for t in k..dim {
                a.swap(pivot * dim + t, k * dim + t);
            }
            for t in k..dim {
                a.swap(t * dim + pivot, t * dim + k);
            }
        }
        let d = a[k * dim + k];
        det = base.mul(det, d);
        rank += 1;
        let inv = base.inv(d).expect("pivot is nonzero");
        for i in k + 1..dim {
            let f = a[i * dim + k];
            if f == 0 {
                continue;
            }
            let f = base.mul(f, inv);
            for j in k + 1..dim {
                let x = a[k * dim + j];
                if x != 0 {
                    a[i * dim + j] = base.sub(a[i * dim + j], base.mul(f, x));
                }
            }
        }
    }
    let tau = if rank == 0 { None } else { Sign::from_value(base.eta(det) as i64) };
    RankType { rank, tau }
}

/// One monomial `a x^(q^k + 1)` under the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub exponent: u32,
    pub coeff: Elem,
    power: u64,
}

/// `Q(x) = Tr_1^m(Σ a_j x^(q^k_j + 1))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadForm {
    terms: Vec<Term>,
}

impl QuadForm {
    pub fn new(ctx: &FieldContext, terms: &[(u32, Elem)]) -> Self {
        let g = ctx.order() - 1;
        let terms = terms
            .iter()
            .map(|&(k, a)| Term { exponent: k, coeff: a, power: (ctx.q_power_mod(k) + 1) % g.max(1) })
            .collect();
        QuadForm { terms }
    }

    pub fn zero() -> Self {
        QuadForm { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_zero())
    }

    /// The form with every coefficient multiplied by `c`.
    pub fn scale(&self, ctx: &FieldContext, c: Elem) -> Self {
        let terms: Vec<(u32, Elem)> = self.terms.iter().map(|t| (t.exponent, ctx.mul(c, t.coeff))).collect();
        QuadForm::new(ctx, &terms)
    }

    /// The argument of the trace, `Σ a_j x^(q^k_j + 1)`.
    pub fn inner(&self, ctx: &FieldContext, x: Elem) -> Elem {
        let Some(lx) = ctx.log(x) else { return Elem::ZERO };
        self.terms.iter().fold(Elem::ZERO, |acc, t| {
            if t.coeff.is_zero() {
                acc
            } else {
                ctx.add(acc, ctx.mul(t.coeff, ctx.alpha_pow((lx as u64 * t.power) as i64)))
            }
        })
    }

    pub fn eval(&self, ctx: &FieldContext, x: Elem) -> BaseElem {
        ctx.trace(self.inner(ctx, x))
    }

    /// `B_Q(x, y) = (Q(x+y) - Q(x) - Q(y)) / 2`.
    pub fn polar(&self, ctx: &FieldContext, x: Elem, y: Elem) -> BaseElem {
        let b = ctx.base();
        let s = b.sub(b.sub(self.eval(ctx, ctx.add(x, y)), self.eval(ctx, x)), self.eval(ctx, y));
        b.mul(s, b.inv(b.from_int(2)).expect("p is odd"))
    }

    /// `Σ_j Tr((a_j/2) x^(q^k) y + (a_j/2)^(q^-k) x^(q^-k) y)`, with `q^-k = q^(m-k)`.
    pub fn polar_closed_form(&self, ctx: &FieldContext, x: Elem, y: Elem) -> BaseElem {
        let m = ctx.m();
        let half = ctx.half();
        let mut acc = Elem::ZERO;
        for t in &self.terms {
            let c = ctx.mul(t.coeff, half);
            let back = (m - t.exponent % m) % m;
            let fwd = ctx.mul(c, ctx.frobenius(x, t.exponent));
            let rev = ctx.mul(ctx.frobenius(c, back), ctx.frobenius(x, back));
            acc = ctx.add(acc, ctx.mul(ctx.add(fwd, rev), y));
        }
        ctx.trace(acc)
    }

    /// Gram matrix of `B_Q` in the basis `1, α, …, α^(m-1)`, from the definition.
    pub fn gram(&self, ctx: &FieldContext) -> GramForm {
        self.gram_in_basis(ctx, &ctx.basis())
    }

    pub fn gram_in_basis(&self, ctx: &FieldContext, basis: &[Elem]) -> GramForm {
        self.gram_with(basis, |x, y| self.polar(ctx, x, y))
    }

    /// Gram matrix from the closed form of the polarization.
    pub fn gram_closed_form(&self, ctx: &FieldContext) -> GramForm {
        self.gram_with(&ctx.basis(), |x, y| self.polar_closed_form(ctx, x, y))
    }

    fn gram_with(&self, basis: &[Elem], f: impl Fn(Elem, Elem) -> BaseElem) -> GramForm {
        let dim = basis.len();
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(basis[i], basis[j]);
                entries[i * dim + j] = v;
                entries[j * dim + i] = v;
            }
        }
        GramForm { dim, entries }
    }

    pub fn rank_and_type(&self, ctx: &FieldContext) -> RankType {
        self.gram_closed_form(ctx).rank_and_type(ctx.base())
    }

    /// `counts[b] = #{x ∈ F_{q^m} : Q(x) = b}`.
    pub fn value_counts(&self, ctx: &FieldContext) -> Vec<u64> {
        let mut counts = vec![0u64; ctx.base().q()];
        for x in ctx.elements() {
            counts[self.eval(ctx, x) as usize] += 1;
        }
        counts
    }

    /// `N(b)`, by exhausting `F_{q^m}`.
    pub fn count_solutions(&self, ctx: &FieldContext, b: BaseElem) -> u64 {
        ctx.elements().filter(|&x| self.eval(ctx, x) == b).count() as u64
    }

    /// `m - dim Rad(Q)` with `Rad(Q) = Q^-1(0) ∩ Rad(B_Q)`, found by scanning
    /// every vector; independent of the Gram matrix route.
    pub fn radical_rank(&self, ctx: &FieldContext) -> usize {
        let b = ctx.base();
        let values: Vec<BaseElem> = ctx.elements().map(|x| self.eval(ctx, x)).collect();
        let basis = ctx.basis();
        // 2 B_Q(u, y) = Q(u+y) - Q(u) - Q(y)
        let size = ctx
            .elements()
            .filter(|&y| {
                let qy = values[y.0 as usize];
                qy == 0
                    && basis.iter().all(|&u| {
                        b.sub(values[ctx.add(u, y).0 as usize], b.add(values[u.0 as usize], qy)) == 0
                    })
            })
            .count() as u64;
        let q = ctx.q();
        let mut dim = 0;
        let mut s = size;
        while s > 1 {
            assert_eq!(s % q, 0, "radical of size {size} is not a subspace");
            s /= q;
            dim += 1;
        }
        ctx.m() as usize - dim
    }
}

/// `N(b)` for a form of rank `r` and type `τ` on an `m`-dimensional space.
pub fn nqb_predict(base: &BaseField, m: u32, r: u32, tau: Sign, b: BaseElem) -> Result<i128> {
    if r == 0 || r > m {
        return Err(Error::IndexOutOfRange { index: r as u64, max: m as u64 });
    }
    let q = base.q() as i128;
    let pow = |e: u32| q.checked_pow(e).ok_or(Error::Overflow("nqb_predict"));
    let eta_m1 = base.eta_minus_one() as i128;
    let t = tau.value() as i128;
    Ok(if r % 2 == 1 {
        pow(m - 1)? + t * eta_m1.pow((r - 1) / 2) * base.eta(b) as i128 * pow(m - r.div_ceil(2))?
    } else {
        let v = if b == 0 { q - 1 } else { -1 };
        pow(m - 1)? + t * eta_m1.pow(r / 2) * v * pow(m - (r + 2) / 2)?
    })
}

/// A coefficient position: exponent `k` and the degree over `F_q` of the
/// subfield the coefficient ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Slot {
    pub exponent: u32,
    pub degree: u32,
}

/// A set of forms closed under addition, given by coefficient slots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormFamily {
    m: u32,
    slots: Vec<Slot>,
}

/// Allowed range of the starting index `h`.
pub fn h_range(m: u32) -> (u32, u32) {
    if m % 2 == 1 {
        (1, (m - 1) / 2)
    } else {
        (1, m / 2)
    }
}

pub fn check_h(m: u32, h: u32) -> Result<()> {
    let (min, max) = h_range(m);
    if h < min || h > max {
        Err(Error::HOutOfRange { h, m, min, max })
    } else {
        Ok(())
    }
}

impl FormFamily {
    /// `Tr(Σ_{j=h}^{(m-1)/2} a_j x^(q^j+1))` for odd `m`; for even `m` the
    /// sum runs to `(m-2)/2` and gains `a_{m/2} x^(q^(m/2)+1)` with
    /// `a_{m/2} ∈ F_{q^(m/2)}`.
    pub fn from_h(m: u32, h: u32) -> Result<Self> {
        check_h(m, h)?;
        Ok(Self::starting_at(m, h))
    }

    /// Every quadratic form on `F_{q^m}` (the same shape with `h = 0`).
    pub fn all_forms(m: u32) -> Self {
        Self::starting_at(m, 0)
    }

    fn starting_at(m: u32, h: u32) -> Self {
        let top = (m - 1) / 2;
        let mut slots: Vec<Slot> = if m % 2 == 1 {
            (h..=top).map(|k| Slot { exponent: k, degree: m }).collect()
        } else {
            (h..m / 2).map(|k| Slot { exponent: k, degree: m }).collect()
        };
        if m.is_multiple_of(2) {
            slots.push(Slot { exponent: m / 2, degree: m / 2 });
        }
        FormFamily { m, slots }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// Dimension over `F_q`.
    pub fn dimension(&self) -> u32 {
        self.slots.iter().map(|s| s.degree).sum()
    }

    pub fn size(&self, q: u64) -> u128 {
        (q as u128).checked_pow(self.dimension()).unwrap_or(u128::MAX)
    }

    fn check_ctx(&self, ctx: &FieldContext) -> Result<()> {
        if ctx.m() != self.m {
            return Err(Error::ShapeMismatch(format!("family for m = {} used with m = {}", self.m, ctx.m())));
        }
        Ok(())
    }

    /// The form with the given slot coefficients.
    pub fn form(&self, ctx: &FieldContext, coeffs: &[Elem]) -> Result<QuadForm> {
        self.check_ctx(ctx)?;
        if coeffs.len() != self.slots.len() {
            return Err(Error::ShapeMismatch(format!("{} coefficients for {} slots", coeffs.len(), self.slots.len())));
        }
        for (s, &a) in self.slots.iter().zip(coeffs) {
            if !ctx.in_subfield(a, s.degree)? {
                return Err(Error::NotInSubfield);
            }
        }
        let terms: Vec<(u32, Elem)> = self.slots.iter().zip(coeffs).map(|(s, &a)| (s.exponent, a)).collect();
        Ok(QuadForm::new(ctx, &terms))
    }

    /// One form per `F_q`-direction of the coefficient space.
    pub fn basis(&self, ctx: &FieldContext) -> Result<Vec<QuadForm>> {
        self.check_ctx(ctx)?;
        let mut out = Vec::new();
        for (idx, s) in self.slots.iter().enumerate() {
            let gamma = ctx.subfield(s.degree)?.generator();
            for i in 0..s.degree {
                let mut coeffs = vec![Elem::ZERO; self.slots.len()];
                coeffs[idx] = ctx.pow(gamma, i as i64)?;
                out.push(self.form(ctx, &coeffs)?);
            }
        }
        Ok(out)
    }

    /// Every member, in coefficient order.
    pub fn forms<'a>(&'a self, ctx: &'a FieldContext) -> Result<impl Iterator<Item = QuadForm> + 'a> {
        self.check_ctx(ctx)?;
        let ranges: Vec<Vec<Elem>> =
            self.slots.iter().map(|s| ctx.subfield(s.degree).map(|f| f.elements().to_vec())).collect::<Result<_>>()?;
        let total: usize = ranges.iter().map(Vec::len).product();
        Ok((0..total).map(move |mut t| {
            let terms: Vec<(u32, Elem)> = self
                .slots
                .iter()
                .zip(&ranges)
                .map(|(s, r)| {
                    let a = r[t % r.len()];
                    t /= r.len();
                    (s.exponent, a)
                })
                .collect();
            QuadForm::new(ctx, &terms)
        }))
    }
}

/// Coefficients of one member of the `Q_1` / `Q_2` families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadFormSpec {
    pub h: u32,
    /// `a_h, …, a_top` in `F_{q^m}`, with `top = (m-1)/2` (odd `m`) or `(m-2)/2` (even `m`).
    pub coeffs: Vec<Elem>,
    /// `a_{m/2} ∈ F_{q^(m/2)}`, present exactly when `m` is even.
    pub middle: Option<Elem>,
}

impl QuadFormSpec {
    pub fn new(ctx: &FieldContext, h: u32, coeffs: Vec<Elem>, middle: Option<Elem>) -> Result<Self> {
        let spec = QuadFormSpec { h, coeffs, middle };
        spec.to_form(ctx)?;
        Ok(spec)
    }

    pub fn family(&self, m: u32) -> Result<FormFamily> {
        FormFamily::from_h(m, self.h)
    }

    pub fn to_form(&self, ctx: &FieldContext) -> Result<QuadForm> {
        let m = ctx.m();
        let family = self.family(m)?;
        let mut all = self.coeffs.clone();
        match (m.is_multiple_of(2), self.middle) {
            (true, Some(a)) => all.push(a),
            (false, None) => {}
            (true, None) => return Err(Error::ShapeMismatch("even m needs the a_{m/2} coefficient".into())),
            (false, Some(_)) => return Err(Error::ShapeMismatch("odd m has no a_{m/2} coefficient".into())),
        }
        family.form(ctx, &all)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldParams;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx(q: u64, m: u32) -> FieldContext {
        FieldContext::new(FieldParams::from_q(q, m).unwrap()).unwrap()
    }

    fn random_form(c: &FieldContext, fam: &FormFamily, rng: &mut ChaCha8Rng) -> QuadForm {
        let coeffs: Vec<Elem> = fam
            .slots()
            .iter()
            .map(|s| {
                let sub = c.subfield(s.degree).unwrap();
                sub.elements()[rng.gen_range(0..sub.len())]
            })
            .collect();
        fam.form(c, &coeffs).unwrap()
    }

    #[test]
    fn zero_form() {
        let c = ctx(3, 3);
        let z = FormFamily::from_h(3, 1).unwrap().form(&c, &[Elem::ZERO]).unwrap();
        assert!(c.elements().all(|x| z.eval(&c, x) == 0));
        assert_eq!(z.gram(&c), GramForm::zero(3));
        assert_eq!(z.rank_and_type(&c), RankType { rank: 0, tau: None });
        assert_eq!(z.rank_and_type(&c).tau(), Err(Error::UndefinedType));
    }

    #[test]
    fn trace_of_one() {
        let c = ctx(3, 3);
        let q = QuadFormSpec::new(&c, 1, vec![Elem::ONE], None).unwrap().to_form(&c).unwrap();
        assert_eq!(q.eval(&c, Elem::ONE), 0);
    }

    #[test]
    fn homogeneous_of_degree_two() {
        let c = ctx(5, 3);
        let b = c.base();
        let fam = FormFamily::all_forms(3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let q = random_form(&c, &fam, &mut rng);
            let lambda = rng.gen_range(0..5) as u16;
            let x = Elem(rng.gen_range(0..c.order() as u32));
            assert_eq!(q.eval(&c, c.mul(c.embed(lambda), x)), b.mul(b.mul(lambda, lambda), q.eval(&c, x)));
        }
    }

    #[test]
    fn polarization_routes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for (q, m) in [(3u64, 3u32), (3, 4), (5, 3), (3, 5), (9, 2), (7, 2)] {
            let c = ctx(q, m);
            let fam = FormFamily::all_forms(m);
            for _ in 0..50 {
                let f = random_form(&c, &fam, &mut rng);
                let g = f.gram(&c);
                assert!(g.is_symmetric());
                assert_eq!(g, f.gram_closed_form(&c));
                for _ in 0..5 {
                    let x = Elem(rng.gen_range(0..c.order() as u32));
                    let y = Elem(rng.gen_range(0..c.order() as u32));
                    assert_eq!(f.polar(&c, x, y), f.polar_closed_form(&c, x, y));
                    // B(x, x) = Q(x)
                    assert_eq!(f.polar(&c, x, x), f.eval(&c, x));
                }
            }
        }
    }

    #[test]
    fn rank_type_examples() {
        let c1 = ctx(3, 1);
        let square = QuadForm::new(&c1, &[(0, Elem::ONE)]);
        assert_eq!(square.gram(&c1).entries(), &[1]);
        assert_eq!(square.rank_and_type(&c1), RankType { rank: 1, tau: Some(Sign::Plus) });

        let c = ctx(3, 3);
        let q = QuadForm::new(&c, &[(1, Elem::ONE)]);
        assert_eq!(q.rank_and_type(&c).rank, 3);

        let c2 = ctx(3, 2);
        for a in c2.subfield(1).unwrap().elements().iter().skip(1) {
            let q = QuadForm::new(&c2, &[(1, *a)]);
            assert_eq!(q.rank_and_type(&c2), RankType { rank: 2, tau: Some(Sign::Plus) });
        }
    }

    #[test]
    fn diagonalization_handles_zero_diagonal() {
        let c = ctx(3, 1);
        let b = c.base();
        // [[0,1],[1,0]] ~ diag(2, 1) over F_3: det = -1, so type η(-1) = -1
        let g = GramForm::new(2, vec![0, 1, 1, 0]).unwrap();
        assert_eq!(g.rank_and_type(b), RankType { rank: 2, tau: Some(Sign::Minus) });
        let g = GramForm::new(3, vec![0, 0, 0, 0, 0, 2, 0, 2, 0]).unwrap();
        assert_eq!(g.rank_and_type(b), RankType { rank: 2, tau: Some(Sign::Minus) });
        assert!(GramForm::new(2, vec![0, 1, 2, 0]).is_err());
    }

    /// Brute-force rank/type of a symmetric matrix: rank by row reduction,
    /// type from the count of isotropic vectors of the nondegenerate part.
    #[test]
    fn rank_matches_row_reduction() {
        let c = ctx(5, 1);
        let b = c.base();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..300 {
            let dim = rng.gen_range(1..6);
            let mut e = vec![0u16; dim * dim];
            for i in 0..dim {
                for j in i..dim {
                    let v = if rng.gen_bool(0.4) { 0 } else { rng.gen_range(0..5) };
                    e[i * dim + j] = v;
                    e[j * dim + i] = v;
                }
            }
            let rows: Vec<Vec<u16>> = e.chunks(dim).map(<[u16]>::to_vec).collect();
            let g = GramForm::new(dim, e).unwrap();
            assert_eq!(g.rank_and_type(b).rank, crate::span::rank(b, &rows));
        }
    }

    #[test]
    fn basis_independence() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for (q, m) in [(3u64, 3u32), (3, 4), (5, 3)] {
            let c = ctx(q, m);
            let fam = FormFamily::all_forms(m);
            for _ in 0..40 {
                let f = random_form(&c, &fam, &mut rng);
                // random basis: retry until independent
                let basis = loop {
                    let cand: Vec<Elem> = (0..m).map(|_| Elem(rng.gen_range(1..c.order() as u32))).collect();
                    let vecs: Vec<Vec<u16>> = cand.iter().map(|&x| coords_over_base(&c, x)).collect();
                    if crate::span::rank(c.base(), &vecs) == m as usize {
                        break cand;
                    }
                };
                assert_eq!(f.gram_in_basis(&c, &basis).rank_and_type(c.base()), f.rank_and_type(&c));
            }
        }
    }

    fn coords_over_base(c: &FieldContext, x: Elem) -> Vec<u16> {
        // coordinates w.r.t. 1, α, …, α^(m-1), found by search (small fields only)
        let basis = c.basis();
        let q = c.q() as usize;
        let m = c.m() as usize;
        for t in 0..q.pow(m as u32) {
            let digits: Vec<u16> = (0..m).map(|i| ((t / q.pow(i as u32)) % q) as u16).collect();
            let y = digits.iter().zip(&basis).fold(Elem::ZERO, |acc, (&d, &b)| c.add(acc, c.mul(c.embed(d), b)));
            if y == x {
                return digits;
            }
        }
        unreachable!()
    }

    #[test]
    fn scaling_by_squares_preserves_rank_type() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for (q, m) in [(3u64, 4u32), (5, 3), (7, 2)] {
            let c = ctx(q, m);
            let fam = FormFamily::all_forms(m);
            for _ in 0..40 {
                let f = random_form(&c, &fam, &mut rng);
                let s = rng.gen_range(1..q) as u16;
                let sq = c.base().mul(s, s);
                assert_eq!(f.scale(&c, c.embed(sq)).rank_and_type(&c), f.rank_and_type(&c));
            }
        }
    }

    #[test]
    fn count_solution_examples() {
        let c = ctx(3, 1);
        let b = c.base();
        let square = QuadForm::new(&c, &[(0, Elem::ONE)]);
        let rt = square.rank_and_type(&c);
        let tau = rt.tau().unwrap();
        for (v, want) in [(0u16, 1u64), (1, 2), (2, 0)] {
            assert_eq!(square.count_solutions(&c, v), want);
            assert_eq!(nqb_predict(b, 1, 1, tau, v).unwrap(), want as i128);
        }
        assert!(nqb_predict(b, 1, 2, tau, 0).is_err());
    }

    #[test]
    fn solution_counts_match_prediction_for_all_small_forms() {
        for (q, m) in [(3u64, 2u32), (3, 3), (5, 2), (9, 2)] {
            let c = ctx(q, m);
            let fam = FormFamily::all_forms(m);
            for f in fam.forms(&c).unwrap() {
                let rt = f.rank_and_type(&c);
                let counts = f.value_counts(&c);
                if rt.rank == 0 {
                    assert_eq!(counts[0], c.order());
                    continue;
                }
                for v in c.base().elements() {
                    let want = nqb_predict(c.base(), m, rt.rank as u32, rt.tau.unwrap(), v).unwrap();
                    assert_eq!(counts[v as usize] as i128, want);
                }
            }
        }
    }

    #[test]
    fn radical_rank_matches_gram_rank() {
        let c = ctx(5, 2);
        for f in FormFamily::all_forms(2).forms(&c).unwrap() {
            assert_eq!(f.radical_rank(&c), f.rank_and_type(&c).rank);
        }
    }

    #[test]
    fn family_shapes() {
        assert_eq!(FormFamily::from_h(3, 1).unwrap().dimension(), 3);
        assert_eq!(FormFamily::from_h(4, 1).unwrap().dimension(), 6);
        assert_eq!(FormFamily::from_h(4, 2).unwrap().dimension(), 2);
        assert_eq!(FormFamily::from_h(6, 1).unwrap().dimension(), 15);
        assert_eq!(FormFamily::all_forms(4).dimension(), 10);
        assert_eq!(FormFamily::all_forms(5).dimension(), 15);
        assert!(matches!(FormFamily::from_h(5, 3), Err(Error::HOutOfRange { .. })));
        assert!(FormFamily::from_h(4, 0).is_err());
        let c = ctx(3, 4);
        assert!(QuadFormSpec::new(&c, 1, vec![Elem::ONE], Some(c.alpha())).is_err());
        assert!(QuadFormSpec::new(&c, 1, vec![Elem::ONE], None).is_err());
        assert!(QuadFormSpec::new(&c, 1, vec![c.alpha()], Some(c.alpha_pow(10))).is_ok());
        assert_eq!(FormFamily::from_h(4, 1).unwrap().forms(&c).unwrap().count(), 729);
    }

    #[test]
    fn nonzero_forms_have_rank_at_least_2h() {
        for (m, h) in [(3u32, 1u32), (5, 2), (4, 1), (4, 2)] {
            let c = ctx(3, m);
            let fam = FormFamily::from_h(m, h).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(m as u64);
            for _ in 0..100 {
                let f = random_form(&c, &fam, &mut rng);
                if !f.is_zero_polynomial() {
                    assert!(f.rank_and_type(&c).rank >= 2 * h as usize);
                }
            }
        }
    }
}
