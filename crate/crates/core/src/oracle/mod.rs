//! Brute-force counterparts of the closed forms: exhaustive weight
//! distributions and minimum distances, codeword sets, and the acceptance
//! suite built on them.

pub mod acceptance;

use std::collections::BTreeSet;

use crate::bch::{BchSpec, CodeFamilySpec, WeightEnumerator};
use crate::error::Result;
use crate::field::{BaseElem, BaseField, FieldContext};
use crate::span::{check_budget, fold_span, span_size};

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_WORD_BUDGET: u64 = 10_000_000;

fn weight(w: &[BaseElem]) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

/// Weight histogram of the span of `basis` (words of length `n`).
pub fn span_weight_distribution(base: &BaseField, basis: &[Vec<BaseElem>], n: usize, budget: u64) -> Result<WeightEnumerator> {
    check_budget(span_size(base.q(), basis.len()), budget)?;
    let hist = fold_span(
        base,
        basis,
        n,
        || vec![0u64; n + 1],
        |h, w| h[weight(w)] += 1,
        |mut a, b| {
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            a
        },
    );
    Ok(WeightEnumerator::from_histogram(n as u64, &hist))
}

/// Every word of the span of `basis`.
pub fn span_words(base: &BaseField, basis: &[Vec<BaseElem>], n: usize, budget: u64) -> Result<BTreeSet<Vec<BaseElem>>> {
    check_budget(span_size(base.q(), basis.len()), budget)?;
    Ok(fold_span(
        base,
        basis,
        n,
        BTreeSet::new,
        |s, w| {
            s.insert(w.to_vec());
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    ))
}

/// Smallest positive weight in the span, `n` if the span is `{0}`.
pub fn span_min_weight(base: &BaseField, basis: &[Vec<BaseElem>], n: usize, budget: u64) -> Result<u64> {
    check_budget(span_size(base.q(), basis.len()), budget)?;
    Ok(fold_span(
        base,
        basis,
        n,
        || n,
        |best, w| {
            let wt = weight(w);
            if wt > 0 && wt < *best {
                *best = wt;
            }
        },
        usize::min,
    ) as u64)
}

/// The weight distribution of a code family, by walking every coefficient
/// tuple (and constant) through the span of the family's basis words.
pub fn exhaustive_weight_distribution(ctx: &FieldContext, spec: &CodeFamilySpec, budget: u64) -> Result<WeightEnumerator> {
    let basis = spec.basis_words(ctx)?;
    span_weight_distribution(ctx.base(), &basis, spec.n() as usize, budget)
}

/// Minimum distance of a polynomial BCH code over the span of `x^i g(x)`.
pub fn min_distance_bch(base: &BaseField, spec: &BchSpec, budget: u64) -> Result<u64> {
    span_min_weight(base, &spec.basis_words(), spec.n as usize, budget)
}

/// Minimum distance of a code family.
pub fn min_distance_family(ctx: &FieldContext, spec: &CodeFamilySpec, budget: u64) -> Result<u64> {
    span_min_weight(ctx.base(), &spec.basis_words(ctx)?, spec.n() as usize, budget)
}

/// `dim_{F_q}` of a code family, as the rank of its basis words.
pub fn family_rank(ctx: &FieldContext, spec: &CodeFamilySpec) -> Result<usize> {
    Ok(crate::span::rank(ctx.base(), &spec.basis_words(ctx)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bch::{trace_codeword, CodeFamily};
    use crate::cyclotomic::CosetTable;
    use crate::field::{Elem, FieldParams};
    use crate::quadform::Slot;

    fn ctx(q: u64, m: u32) -> FieldContext {
        FieldContext::new(FieldParams::from_q(q, m).unwrap()).unwrap()
    }

    /// Every input tuple through `trace_codeword` directly.
    fn direct_words(c: &FieldContext, spec: &CodeFamilySpec) -> Vec<Vec<BaseElem>> {
        let fam = spec.form_family();
        let ranges: Vec<Vec<Elem>> =
            fam.slots().iter().map(|s: &Slot| c.subfield(s.degree).unwrap().elements().to_vec()).collect();
        let consts: Vec<Option<BaseElem>> =
            if spec.includes_constant() { c.base().elements().map(Some).collect() } else { vec![None] };
        let total: usize = ranges.iter().map(Vec::len).product();
        let mut out = Vec::new();
        for t in 0..total {
            let mut r = t;
            let coeffs: Vec<Elem> = ranges
                .iter()
                .map(|v| {
                    let x = v[r % v.len()];
                    r /= v.len();
                    x
                })
                .collect();
            for &a in &consts {
                out.push(trace_codeword(c, spec, &coeffs, a).unwrap());
            }
        }
        out
    }

    #[test]
    fn span_enumeration_matches_direct_words() {
        for (q, m, h, f) in
            [(3u64, 3u32, 1u32, CodeFamily::C1), (3, 4, 1, CodeFamily::C2Tilde), (3, 4, 2, CodeFamily::C2), (5, 3, 1, CodeFamily::C1)]
        {
            let c = ctx(q, m);
            let spec = CodeFamilySpec::new(f, q, m, h).unwrap();
            let direct = direct_words(&c, &spec);
            let mut hist = vec![0u64; spec.n() as usize + 1];
            for w in &direct {
                hist[weight(w)] += 1;
            }
            let want = WeightEnumerator::from_histogram(spec.n(), &hist);
            assert_eq!(exhaustive_weight_distribution(&c, &spec, DEFAULT_WORD_BUDGET).unwrap(), want);
            let set: BTreeSet<_> = direct.into_iter().collect();
            assert_eq!(set, span_words(c.base(), &spec.basis_words(&c).unwrap(), spec.n() as usize, DEFAULT_WORD_BUDGET).unwrap());
        }
    }

    #[test]
    fn oracle_examples() {
        let c = ctx(3, 3);
        let spec = CodeFamilySpec::new(CodeFamily::C1, 3, 3, 1).unwrap();
        let w = exhaustive_weight_distribution(&c, &spec, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(w.to_string(), "1 + 26Z^7 + 26Z^9 + 26Z^10 + 2Z^13");
        assert_eq!(min_distance_family(&c, &spec, DEFAULT_WORD_BUDGET).unwrap(), 7);
        assert_eq!(family_rank(&c, &spec).unwrap(), 4);

        let t = CosetTable::for_field(3, 3).unwrap();
        let bch = BchSpec::new(&c, &t, 7).unwrap();
        assert_eq!(min_distance_bch(c.base(), &bch, DEFAULT_WORD_BUDGET).unwrap(), 7);
        assert_eq!(span_min_weight(c.base(), &[vec![1; 13]], 13, 10).unwrap(), 13);
        assert!(span_min_weight(c.base(), &bch.basis_words(), 13, 80).is_err());

        let empty = span_weight_distribution(c.base(), &[], 5, 1).unwrap();
        assert_eq!(empty.to_string(), "1");

        let c2 = ctx(3, 2);
        let spec = CodeFamilySpec::new(CodeFamily::C2Tilde, 3, 2, 1).unwrap();
        let w = exhaustive_weight_distribution(&c2, &spec, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(w, crate::bch::full_enumerator(3, 2, 1, CodeFamily::C2Tilde).unwrap());
    }

    #[test]
    fn independent_of_thread_count() {
        let c = ctx(3, 5);
        let spec = CodeFamilySpec::new(CodeFamily::C1, 3, 5, 2).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| exhaustive_weight_distribution(&c, &spec, DEFAULT_WORD_BUDGET).unwrap())
        };
        assert_eq!(run(1), run(3));
    }
}
