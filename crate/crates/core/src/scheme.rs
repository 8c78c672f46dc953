//! Inner distributions of subsets of the scheme `X(m, q)` of symmetric
//! bilinear forms: closed forms in exact rational arithmetic and the
//! enumeration of additively closed families.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::FieldContext;
use crate::quadform::{check_h, rank_and_type_in_place, FormFamily, Sign};
use crate::span::{check_budget, fold_span};

/// Default cap on the number of forms an enumeration may visit.
pub const DEFAULT_FORM_BUDGET: u64 = 10_000_000;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn qpow(q: u64, e: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(q));
    if e >= 0 {
        num_traits::pow(b, e as usize)
    } else {
        num_traits::pow(b, (-e) as usize).recip()
    }
}

fn sign(j: i64) -> BigRational {
    if j.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `[n k] = Π_{i=1}^k (q^(2n-2i+2) - 1)/(q^(2i) - 1)`; zero for `k < 0`.
pub fn q2_binom(q: u64, n: i64, k: i64) -> BigRational {
    if k < 0 {
        return BigRational::zero();
    }
    (1..=k).fold(BigRational::one(), |acc, i| {
        acc * (qpow(q, 2 * n - 2 * i + 2) - int(1)) / (qpow(q, 2 * i) - int(1))
    })
}

/// `[n k]` for `n >= k >= 0` (zero when `k > n`), as an integer.
pub fn q2_binom_int(q: u64, n: u32, k: u32) -> BigInt {
    let v = q2_binom(q, n as i64, k as i64);
    debug_assert!(v.is_integer());
    v.to_integer()
}

/// `(a_0; a_{r,τ})` for `1 <= r <= m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDistribution {
    m: u32,
    a0: BigInt,
    /// `by_rank[r-1] = [a_{r,+1}, a_{r,-1}]`.
    by_rank: Vec<[BigInt; 2]>,
}

impl InnerDistribution {
    pub fn zero(m: u32) -> Self {
        InnerDistribution { m, a0: BigInt::zero(), by_rank: vec![[BigInt::zero(), BigInt::zero()]; m as usize] }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn a0(&self) -> &BigInt {
        &self.a0
    }

    pub fn set_a0(&mut self, v: BigInt) {
        self.a0 = v;
    }

    pub fn get(&self, r: u32, tau: Sign) -> &BigInt {
        &self.by_rank[r as usize - 1][tau.index()]
    }

    pub fn set(&mut self, r: u32, tau: Sign, v: BigInt) {
        self.by_rank[r as usize - 1][tau.index()] = v;
    }

    /// Nonzero entries `(r, τ, a_{r,τ})` in increasing rank, `+1` first.
    pub fn entries(&self) -> impl Iterator<Item = (u32, Sign, &BigInt)> {
        self.by_rank.iter().enumerate().flat_map(|(i, pair)| {
            Sign::BOTH.into_iter().map(move |t| (i as u32 + 1, t, &pair[t.index()])).filter(|(_, _, v)| !v.is_zero())
        })
    }

    pub fn total(&self) -> BigInt {
        self.by_rank.iter().flatten().fold(self.a0.clone(), |acc, v| acc + v)
    }

    /// Smallest `r >= 1` with a nonzero count.
    pub fn min_nonzero_rank(&self) -> Option<u32> {
        self.entries().next().map(|(r, _, _)| r)
    }
}

impl fmt::Display for InnerDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a0={}", self.a0)?;
        for (r, t, v) in self.entries() {
            write!(f, " a[{r},{}]={v}", if t == Sign::Plus { '+' } else { '-' })?;
        }
        Ok(())
    }
}

fn to_count(v: BigRational, rank: u32, tau: Sign) -> Result<BigInt> {
    let (rank, tau) = (rank as usize, tau.value());
    if !v.is_integer() {
        return Err(Error::NonIntegral { rank, tau });
    }
    if v.is_negative() {
        return Err(Error::NegativeCount { rank, tau });
    }
    Ok(v.to_integer())
}

fn check_args(n: u32, delta: u32) -> Result<()> {
    if n == 0 || delta == 0 {
        return Err(Error::InvalidParams(format!("need n >= 1 and delta >= 1, got n = {n}, delta = {delta}")));
    }
    Ok(())
}

/// Assembles a distribution on `X(dim, q)` from per-rank closed forms,
/// forcing ranks below `min_rank` to zero.
fn assemble(dim: u32, min_rank: u32, mut value: impl FnMut(u32, Sign) -> BigRational) -> Result<InnerDistribution> {
    let mut d = InnerDistribution::zero(dim);
    d.a0 = BigInt::one();
    for r in min_rank.max(1)..=dim {
        for t in Sign::BOTH {
            d.set(r, t, to_count(value(r, t), r, t)?);
        }
    }
    Ok(d)
}

/// `Σ_{j=0}^{upper} (-1)^j q^(j(j-1)) [a j] f(j)`.
fn alt_sum(q: u64, upper: i64, a: i64, f: impl Fn(i64) -> BigRational) -> BigRational {
    (0..=upper).fold(BigRational::zero(), |acc, j| acc + sign(j) * qpow(q, j * (j - 1)) * q2_binom(q, a, j) * f(j))
}

fn eta_minus_one_pow(q: u64, i: i64) -> BigRational {
    if q % 4 == 3 {
        sign(i)
    } else {
        int(1)
    }
}

fn tau_value(t: Sign) -> BigRational {
    int(t.value() as i64)
}

/// Inner distribution of a `(2δ-1)`-code and `(2n-2δ+3)`-design `Y` in `X(2n+1, q)`.
pub fn tart_odd_space(q: u64, n: u32, delta: u32, size_y: &BigInt) -> Result<InnerDistribution> {
    check_args(n, delta)?;
    let (ni, d) = (n as i64, delta as i64);
    let y = BigRational::from_integer(size_y.clone());
    let common = |i: i64| {
        alt_sum(q, i - d, i, |j| &y / qpow(q, (2 * ni + 1) * (ni + 1 + j - i)) - int(1))
    };
    let half = BigRational::new(1.into(), 2.into());
    assemble(2 * n + 1, 2 * delta - 1, |r, t| {
        let r = r as i64;
        if r % 2 == 1 {
            let i = (r + 1) / 2;
            &half * q2_binom(q, ni, i - 1) * common(i)
        } else {
            let i = r / 2;
            let coef = qpow(q, 2 * i) + tau_value(t) * eta_minus_one_pow(q, i) * qpow(q, i);
            &half * coef * q2_binom(q, ni, i) * common(i)
        }
    })
}

/// The `X(2n, q)` even-rank second sum shared by both closed forms.
fn even_space_tau_part(q: u64, n: i64, i: i64, upper: i64, y: &BigRational, t: Sign) -> BigRational {
    tau_value(t) / int(2)
        * eta_minus_one_pow(q, i)
        * qpow(q, i)
        * q2_binom(q, n, i)
        * alt_sum(q, upper, i, |j| y / (qpow(q, (2 * n - 1) * (n + j - i)) * qpow(q, 2 * n)) - int(1))
}

fn even_space(q: u64, n: u32, delta: u32, size_y: &BigInt, shift: i64, min_rank: u32) -> Result<InnerDistribution> {
    check_args(n, delta)?;
    let (ni, d) = (n as i64, delta as i64);
    let y = BigRational::from_integer(size_y.clone());
    assemble(2 * n, min_rank, |r, t| {
        let r = r as i64;
        if r % 2 == 1 {
            let i = (r + 1) / 2;
            (qpow(q, 2 * i) - int(1)) / int(2)
                * q2_binom(q, ni, i)
                * alt_sum(q, i - d - shift, i - 1, |j| {
                    &y * qpow(q, 2 * j) / qpow(q, (2 * ni + 1) * (ni + 1 + j - i))
                })
        } else {
            let i = r / 2;
            q2_binom(q, ni, i) / int(2)
                * alt_sum(q, i - d + 1 - shift, i, |j| {
                    &y * qpow(q, 2 * j) / qpow(q, (2 * ni + 1) * (ni + j - i)) - int(1)
                })
                + even_space_tau_part(q, ni, i, i - d, &y, t)
        }
    })
}

/// Inner distribution of a `(2δ-1)`-code and `(2n-2δ+2)`-design `Y` in `X(2n, q)`.
pub fn tart_even_space(q: u64, n: u32, delta: u32, size_y: &BigInt) -> Result<InnerDistribution> {
    even_space(q, n, delta, size_y, 0, 2 * delta - 1)
}

/// Inner distribution of a `(2δ)`-code and `(2n-2δ+1)`-design `Y` in `X(2n, q)`.
pub fn part_even_space(q: u64, n: u32, delta: u32, size_y: &BigInt) -> Result<InnerDistribution> {
    even_space(q, n, delta, size_y, 1, 2 * delta)
}

/// Inner distribution of a `(2δ)`-code and `(2n-2δ+1, η(-1)^(n-δ+1))`-design
/// `Y` in `X(2n+1, q)`.
pub fn part_odd_space(q: u64, n: u32, delta: u32, size_y: &BigInt) -> Result<InnerDistribution> {
    check_args(n, delta)?;
    let (ni, d) = (n as i64, delta as i64);
    let y = BigRational::from_integer(size_y.clone());
    let common = |i: i64| {
        alt_sum(q, i - d, i, |j| &y / qpow(q, (2 * ni + 1) * (ni + 1 + j - i)) - int(1))
    };
    let tail = &y / qpow(q, (2 * ni + 1) * (ni - d + 1)) - int(1);
    let lead = q2_binom(q, ni, d - 1);
    let top = qpow(q, ni - d + 1) + int(1);
    let half = BigRational::new(1.into(), 2.into());
    assemble(2 * n + 1, 2 * delta, |r, t| {
        let r = r as i64;
        if r % 2 == 1 {
            let i = (r + 1) / 2;
            let e = i - d;
            &half * q2_binom(q, ni, i - 1) * common(i)
                + &half
                    * sign(e)
                    * qpow(q, e * (e - 1))
                    * &lead
                    * &tail
                    * (q2_binom(q, ni - d, ni - i + 1) * &top - q2_binom(q, ni - d + 1, ni - i + 1))
        } else {
            let i = r / 2;
            let e = i - d;
            let coef = qpow(q, 2 * i) + tau_value(t) * eta_minus_one_pow(q, i) * qpow(q, i);
            &half * coef * q2_binom(q, ni, i) * common(i)
                + &half
                    * eta_minus_one_pow(q, e)
                    * qpow(q, (e + 1) * e)
                    * &lead
                    * q2_binom(q, ni - d, ni - i)
                    * &top
                    * &tail
        }
    })
}

/// `|S| = q^(m((m+1)/2 - h))`, as `q^(m((m+1)/2-h))` for odd `m` and
/// `q^(m(m/2-h)+m/2)` for even `m`.
pub fn family_size(q: u64, m: u32, h: u32) -> BigInt {
    let exp = if m % 2 == 1 { m * (m.div_ceil(2) - h) } else { m * (m / 2 - h) + m / 2 };
    num_traits::pow(BigInt::from(q), exp as usize)
}

/// The closed-form inner distribution of the family `S(m, h)`.
pub fn predicted_inner_dist(q: u64, m: u32, h: u32) -> Result<InnerDistribution> {
    check_h(m, h)?;
    let size = family_size(q, m, h);
    if m % 2 == 1 {
        tart_odd_space(q, (m - 1) / 2, h + 1, &size)
    } else {
        part_even_space(q, m / 2, h, &size)
    }
}

/// Rank/type histogram of every member of `family`, through the span of the
/// Gram matrices of a coefficient basis.
pub fn enumerate_inner_dist(ctx: &FieldContext, family: &FormFamily, budget: u64) -> Result<InnerDistribution> {
    let m = ctx.m() as usize;
    let size = family.size(ctx.q());
    check_budget(size, budget)?;
    let base = ctx.base();
    let grams: Vec<Vec<u16>> =
        family.basis(ctx)?.iter().map(|f| f.gram(ctx).entries().to_vec()).collect();
    let counts = fold_span(
        base,
        &grams,
        m * m,
        || (vec![0u64; 2 * m + 1], vec![0u16; m * m]),
        |(hist, work), g| {
            work.copy_from_slice(g);
            let rt = rank_and_type_in_place(base, work, m);
            let slot = match rt.tau {
                None => 0,
                Some(t) => 2 * rt.rank - 1 + t.index(),
            };
            hist[slot] += 1;
        },
        |(mut a, w), (b, _)| {
            a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
            (a, w)
        },
    )
    .0;
    let mut d = InnerDistribution::zero(m as u32);
    d.a0 = counts[0].into();
    for r in 1..=m {
        for t in Sign::BOTH {
            d.set(r as u32, t, counts[2 * r - 1 + t.index()].into());
        }
    }
    let total = d.total();
    if total.to_u128() != Some(size) {
        return Err(Error::MassMismatch { found: total.to_string(), expected: size.to_string() });
    }
    Ok(d)
}
