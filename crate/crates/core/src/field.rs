//! Exact arithmetic in `F_{q^m}` with `q = p^e` odd.
//!
//! Elements are stored by their polynomial-basis coordinates over `F_p`,
//! packed as a base-`p` integer with the constant coefficient least
//! significant. Multiplication goes through log/antilog tables and addition
//! through a Zech table, so every operation is a handful of lookups.
//! Elements of the base field `F_q` get a compact code of their own
//! ([`BaseElem`]), see [`BaseField`].

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported `q^m`.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

const NONE: u32 = u32::MAX;
const NO_CODE: u16 = u16::MAX;

/// Code of an element of `F_q`.
///
/// Codes enumerate the subfield `F_q ⊂ F_{q^m}` in increasing order of the
/// packed coordinates, so `0` is zero, `1` is one, and for prime `q` the code
/// of a residue is the residue itself.
pub type BaseElem = u16;

/// An element of `F_{q^m}`; the wrapped value is the packed coordinate vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldParams {
    pub p: u64,
    pub e: u32,
    pub m: u32,
}

impl FieldParams {
    /// Validates `p` odd prime, `e >= 1`, `m >= 1` and `p^(e m)` within [`MAX_FIELD_ORDER`].
    ///
    /// The code-level operations additionally require `m >= 2`; `m = 1` is
    /// accepted here so that forms on `F_q` itself can be handled.
    pub fn new(p: u64, e: u32, m: u32) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::EvenCharacteristic(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 || m == 0 {
            return Err(Error::InvalidParams(format!("e = {e} and m = {m} must be positive")));
        }
        let order = (p as u128).checked_pow(e * m).unwrap_or(u128::MAX);
        if order > MAX_FIELD_ORDER as u128 {
            return Err(Error::FieldTooLarge { order, bound: MAX_FIELD_ORDER });
        }
        Ok(FieldParams { p, e, m })
    }

    /// Splits a prime power `q` into `p^e`.
    pub fn from_q(q: u64, m: u32) -> Result<Self> {
        let (p, e) = prime_power(q)?;
        FieldParams::new(p, e, m)
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.e)
    }

    /// `q^m`.
    pub fn order(&self) -> u64 {
        self.q().pow(self.m)
    }

    /// Code length `(q^m - 1)/2`.
    pub fn n(&self) -> u64 {
        (self.order() - 1) / 2
    }
}

/// The base field `F_q`, realised as the subfield of a [`FieldContext`].
#[derive(Debug, Clone)]
pub struct BaseField {
    p: u64,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    eta: Vec<i8>,
    residues: Vec<u16>,
}

impl BaseField {
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn neg(&self, a: BaseElem) -> BaseElem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn mul(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        self.mul[a as usize * self.q + b as usize]
    }

    pub fn inv(&self, a: BaseElem) -> Result<BaseElem> {
        if a == 0 {
            Err(Error::InverseOfZero)
        } else {
            Ok(self.inv[a as usize])
        }
    }

    /// `a / b` for nonzero `b`.
    #[inline]
    pub fn div(&self, a: BaseElem, b: BaseElem) -> BaseElem {
        debug_assert!(b != 0);
        self.mul(a, self.inv[b as usize])
    }

    /// The quadratic character: `+1` on nonzero squares, `-1` on non-squares, `0` at zero.
    #[inline]
    pub fn eta(&self, a: BaseElem) -> i8 {
        self.eta[a as usize]
    }

    /// `η(-1)`, which is `+1` exactly when `q ≡ 1 (mod 4)`.
    pub fn eta_minus_one(&self) -> i8 {
        self.eta(self.neg(1))
    }

    /// The image of an integer under `Z → F_p ⊂ F_q`.
    pub fn from_int(&self, v: i64) -> BaseElem {
        self.residues[v.rem_euclid(self.p as i64) as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = BaseElem> {
        0..self.q as u16
    }
}

/// An intermediate field `F_{q^d}` of a [`FieldContext`], `d | m`.
#[derive(Debug, Clone)]
pub struct Subfield {
    degree: u32,
    elements: Vec<Elem>,
    generator: Elem,
}

impl Subfield {
    /// Degree over `F_q`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// All members in increasing packed order.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// A generator of the multiplicative group of the subfield.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    pub fn embed(&self, code: usize) -> Result<Elem> {
        self.elements
            .get(code)
            .copied()
            .ok_or(Error::IndexOutOfRange { index: code as u64, max: self.elements.len() as u64 - 1 })
    }

    pub fn project(&self, x: Elem) -> Result<usize> {
        self.elements.binary_search(&x).map_err(|_| Error::NotInSubfield)
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }
}

/// Precomputed tables for `F_{q^m}`. Immutable once built.
#[derive(Debug, Clone)]
pub struct FieldContext {
    params: FieldParams,
    degree: usize,
    modulus: Vec<u64>,
    group_order: u32,
    alpha: Elem,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    to_base: Vec<u16>,
    from_base: Vec<Elem>,
    trace: Vec<u16>,
    base: BaseField,
}

impl FieldContext {
    pub fn new(params: FieldParams) -> Result<Self> {
        let params = FieldParams::new(params.p, params.e, params.m)?;
        let p = params.p;
        let degree = (params.e * params.m) as usize;
        let order = params.order();
        let group_order = (order - 1) as u32;

        let modulus = smallest_irreducible(p, degree);
        let alpha_coords = smallest_generator(p, &modulus, order - 1);

        // powers of alpha, by repeated multiplication with its matrix
        let images: Vec<Vec<u64>> = (0..degree)
            .map(|i| {
                let mut mono = vec![0; degree];
                if degree == 1 {
                    mono[0] = 1;
                } else {
                    mono[i] = 1;
                }
                poly_mulmod(&mono, &alpha_coords, &modulus, p)
            })
            .collect();
        let mut exp = vec![0u32; 2 * group_order as usize];
        let mut log = vec![NONE; order as usize];
        let mut cur = vec![0u64; degree];
        cur[0] = 1;
        for k in 0..group_order as usize {
            let idx = pack(&cur, p) as u32;
            debug_assert_eq!(log[idx as usize], NONE, "alpha is not a generator");
            exp[k] = idx;
            exp[k + group_order as usize] = idx;
            log[idx as usize] = k as u32;
            let mut next = vec![0u64; degree];
            for (i, &c) in cur.iter().enumerate() {
                if c != 0 {
                    for (slot, &v) in next.iter_mut().zip(&images[i]) {
                        *slot = (*slot + c * v) % p;
                    }
                }
            }
            cur = next;
        }
        debug_assert_eq!(pack(&cur, p), 1);

        let zech = (0..group_order as usize)
            .map(|k| {
                let v = exp[k] as u64;
                let w = if v % p == p - 1 { v - (p - 1) } else { v + 1 };
                if w == 0 {
                    NONE
                } else {
                    log[w as usize]
                }
            })
            .collect();

        let mut ctx = FieldContext {
            params,
            degree,
            modulus,
            group_order,
            alpha: Elem(pack(&alpha_coords, p) as u32),
            exp,
            log,
            zech,
            to_base: Vec::new(),
            from_base: Vec::new(),
            trace: Vec::new(),
            base: BaseField {
                p,
                q: 0,
                add: vec![],
                mul: vec![],
                neg: vec![],
                inv: vec![],
                eta: vec![],
                residues: vec![],
            },
        };
        ctx.build_base();
        ctx.build_trace();
        Ok(ctx)
    }

    fn build_base(&mut self) {
        let q = self.params.q() as usize;
        let sub = self.subfield_unchecked(1);
        let mut to_base = vec![NO_CODE; self.params.order() as usize];
        for (code, x) in sub.elements.iter().enumerate() {
            to_base[x.0 as usize] = code as u16;
        }
        let from_base = sub.elements.clone();
        let code = |x: Elem| to_base[x.0 as usize];
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = code(self.add(from_base[a], from_base[b]));
                mul[a * q + b] = code(self.mul(from_base[a], from_base[b]));
            }
        }
        let neg = (0..q).map(|a| code(self.neg(from_base[a]))).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { code(self.inv(from_base[a]).unwrap()) })
            .collect();
        let step = self.group_order / (q as u32 - 1);
        let eta = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else if (self.log[from_base[a].0 as usize] / step).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let p = self.params.p;
        let residues = (0..p).map(|c| code(Elem(c as u32))).collect();
        self.base = BaseField { p, q, add, mul, neg, inv, eta, residues };
        self.to_base = to_base;
        self.from_base = from_base;
    }

    fn build_trace(&mut self) {
        let m = self.params.m;
        let trace = (0..self.params.order() as u32)
            .map(|idx| {
                let x = Elem(idx);
                let mut acc = Elem::ZERO;
                for k in 0..m {
                    acc = self.add(acc, self.frobenius(x, k));
                }
                let c = self.to_base[acc.0 as usize];
                assert_ne!(c, NO_CODE, "trace left the base field");
                c
            })
            .collect();
        self.trace = trace;
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn q(&self) -> u64 {
        self.params.q()
    }

    pub fn m(&self) -> u32 {
        self.params.m
    }

    /// `q^m`.
    pub fn order(&self) -> u64 {
        self.params.order()
    }

    pub fn n(&self) -> u64 {
        self.params.n()
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The defining polynomial over `F_p`, ascending coefficients, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    /// The canonical primitive element.
    pub fn alpha(&self) -> Elem {
        self.alpha
    }

    /// `alpha^2`, of multiplicative order `n`.
    pub fn beta(&self) -> Elem {
        self.alpha_pow(2)
    }

    pub fn alpha_pow(&self, k: i64) -> Elem {
        let e = k.rem_euclid(self.group_order as i64) as usize;
        Elem(self.exp[e])
    }

    pub fn log(&self, x: Elem) -> Option<u32> {
        match self.log[x.0 as usize] {
            NONE => None,
            l => Some(l),
        }
    }

    pub fn coords(&self, x: Elem) -> Vec<u64> {
        unpack(x.0 as u64, self.params.p, self.degree)
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<Elem> {
        if coords.len() != self.degree || coords.iter().any(|&c| c >= self.params.p) {
            return Err(Error::ShapeMismatch(format!(
                "expected {} residues mod {}",
                self.degree, self.params.p
            )));
        }
        Ok(Elem(pack(coords, self.params.p) as u32))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.params.order() as u32).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let la = self.log[a.0 as usize];
        let lb = self.log[b.0 as usize];
        let d = if lb >= la { lb - la } else { lb + self.group_order - la };
        match self.zech[d as usize] {
            NONE => Elem::ZERO,
            z => Elem(self.exp[(la + z) as usize]),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if a.0 == 0 {
            a
        } else {
            Elem(self.exp[(self.log[a.0 as usize] + self.group_order / 2) as usize])
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            Elem::ZERO
        } else {
            Elem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        match self.log[a.0 as usize] {
            NONE => Err(Error::InverseOfZero),
            0 => Ok(a),
            l => Ok(Elem(self.exp[(self.group_order - l) as usize])),
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `x^k` for any integer `k`; negative powers of zero are an error.
    pub fn pow(&self, x: Elem, k: i64) -> Result<Elem> {
        match self.log[x.0 as usize] {
            NONE if k < 0 => Err(Error::InverseOfZero),
            NONE if k == 0 => Ok(Elem::ONE),
            NONE => Ok(Elem::ZERO),
            l => {
                let g = self.group_order as i128;
                let e = (l as i128 * k as i128).rem_euclid(g) as usize;
                Ok(Elem(self.exp[e]))
            }
        }
    }

    /// `x^(q^k)`; `k` is taken modulo `m`.
    #[inline]
    pub fn frobenius(&self, x: Elem, k: u32) -> Elem {
        match self.log[x.0 as usize] {
            NONE => x,
            l => {
                let e = (l as u64 * self.q_power_mod(k)) % self.group_order as u64;
                Elem(self.exp[e as usize])
            }
        }
    }

    /// `q^k mod (q^m - 1)`.
    pub fn q_power_mod(&self, k: u32) -> u64 {
        let g = self.group_order as u64;
        let q = self.params.q() % g.max(1);
        let mut r = 1 % g.max(1);
        for _ in 0..(k % self.params.m) {
            r = r * q % g;
        }
        if g == 1 {
            1
        } else {
            r
        }
    }

    /// `Tr_1^m(x) = Σ_k x^(q^k)`, as a base-field code.
    #[inline]
    pub fn trace(&self, x: Elem) -> BaseElem {
        self.trace[x.0 as usize]
    }

    pub fn embed(&self, b: BaseElem) -> Elem {
        self.from_base[b as usize]
    }

    /// The code of `x` when `x ∈ F_q`.
    pub fn to_base(&self, x: Elem) -> Option<BaseElem> {
        match self.to_base[x.0 as usize] {
            NO_CODE => None,
            c => Some(c),
        }
    }

    /// `η(b)` for `b ∈ F_q`.
    pub fn eta(&self, b: BaseElem) -> i8 {
        self.base.eta(b)
    }

    /// Inverse of 2, as an element of `F_p ⊂ F_{q^m}`.
    pub fn half(&self) -> Elem {
        self.embed(self.base.inv(self.base.from_int(2)).expect("p is odd"))
    }

    /// Whether `x^(q^d) = x`, i.e. `x ∈ F_{q^d}`.
    pub fn in_subfield(&self, x: Elem, d: u32) -> Result<bool> {
        self.check_divisor(d)?;
        Ok(self.frobenius(x, d) == x)
    }

    pub fn subfield(&self, d: u32) -> Result<Subfield> {
        self.check_divisor(d)?;
        Ok(self.subfield_unchecked(d))
    }

    fn check_divisor(&self, d: u32) -> Result<()> {
        if d == 0 || !self.params.m.is_multiple_of(d) {
            Err(Error::NotADivisor(d, self.params.m))
        } else {
            Ok(())
        }
    }

    fn subfield_unchecked(&self, d: u32) -> Subfield {
        let size = self.params.q().pow(d);
        let step = self.group_order as u64 / (size - 1);
        let mut elements: Vec<Elem> = std::iter::once(Elem::ZERO)
            .chain((0..size - 1).map(|t| Elem(self.exp[(t * step) as usize])))
            .collect();
        elements.sort_unstable();
        Subfield { degree: d, elements, generator: Elem(self.exp[step as usize % self.group_order as usize]) }
    }

    /// The polynomial basis `1, α, …, α^(m-1)` of `F_{q^m}` over `F_q`.
    pub fn basis(&self) -> Vec<Elem> {
        (0..self.params.m as i64).map(|i| self.alpha_pow(i)).collect()
    }
}

fn pack(coords: &[u64], p: u64) -> u64 {
    coords.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn unpack(mut v: u64, p: u64, d: usize) -> Vec<u64> {
    (0..d)
        .map(|_| {
            let c = v % p;
            v /= p;
            c
        })
        .collect()
}

/// Coordinate vectors of length `d` in lexicographic order, constant term compared first.
fn lex_vector(t: u64, p: u64, d: usize) -> Vec<u64> {
    let mut out = vec![0; d];
    let mut t = t;
    for slot in out.iter_mut().rev() {
        *slot = t % p;
        t /= p;
    }
    out
}

fn smallest_irreducible(p: u64, d: usize) -> Vec<u64> {
    for t in 0..p.pow(d as u32) {
        let mut f = lex_vector(t, p, d);
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn smallest_generator(p: u64, modulus: &[u64], group_order: u64) -> Vec<u64> {
    let d = modulus.len() - 1;
    let factors = prime_factors(group_order);
    let one = {
        let mut v = vec![0; d];
        v[0] = 1;
        v
    };
    for t in 1..p.pow(d as u32) {
        let g = lex_vector(t, p, d);
        if factors.iter().all(|&r| poly_powmod(&g, group_order / r, modulus, p) != one) {
            return g;
        }
    }
    unreachable!("the multiplicative group of a finite field is cyclic")
}

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Product of two reduced residues modulo the monic `f`.
fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (d..prod.len()).rev() {
        let c = prod[i];
        if c != 0 {
            for j in 0..=d {
                prod[i - d + j] = (prod[i - d + j] + (p - c) * f[j]) % p;
            }
        }
    }
    prod.truncate(d);
    prod.resize(d, 0);
    prod
}

fn poly_powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut r = vec![0; d];
    r[0] = 1;
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            r = poly_mulmod(&r, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // a mod b
        let lead_inv = mod_pow(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let c = a.last().unwrap() * lead_inv % p;
            let shift = a.len() - b.len();
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + (p - c) * bj) % p;
            }
            a.pop();
            if a.is_empty() {
                a.push(0);
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin's test for a monic polynomial over `F_p`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    let mut x = vec![0; d];
    x[1] = 1;
    let mut frob = vec![x.clone()];
    for k in 0..d {
        let next = poly_powmod(&frob[k], p, f, p);
        frob.push(next);
    }
    if frob[d] != x {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let mut diff = frob[d / r as usize].clone();
        diff[1] = (diff[1] + p - 1) % p;
        let g = poly_gcd(f, &diff, p);
        g.len() == 1
    })
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `q = p^e` with `p` prime.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return Err(Error::NotPrimePower(q));
    }
    let p = factors[0];
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    if p.is_multiple_of(2) {
        return Err(Error::EvenCharacteristic(p));
    }
    Ok((p, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ctx(p: u64, e: u32, m: u32) -> FieldContext {
        FieldContext::new(FieldParams::new(p, e, m).unwrap()).unwrap()
    }

    fn random_elem(c: &FieldContext, rng: &mut ChaCha8Rng) -> Elem {
        Elem(rng.gen_range(0..c.order() as u32))
    }

    #[test]
    fn make_context_examples() {
        assert_eq!(ctx(3, 1, 3).n(), 13);
        assert_eq!(ctx(3, 1, 4).n(), 40);
        assert_eq!(FieldParams::new(2, 1, 3), Err(Error::EvenCharacteristic(2)));
        assert_eq!(FieldParams::new(9, 1, 2), Err(Error::NotPrime(9)));
        assert!(matches!(FieldParams::new(3, 1, 14), Err(Error::FieldTooLarge { .. })));
        assert_eq!(FieldParams::from_q(9, 2).unwrap(), FieldParams { p: 3, e: 2, m: 2 });
        assert_eq!(FieldParams::from_q(12, 2), Err(Error::NotPrimePower(12)));
    }

    #[test]
    fn modulus_is_lexicographically_smallest() {
        // constant term 0 means a factor x; x^3+1 = (x+1)^3 and x^3+x^2+1 has the root 1;
        // x^3+2x^2+1 has no root in F_3.
        let c = ctx(3, 1, 3);
        assert_eq!(c.modulus(), &[1, 0, 2, 1]);
    }

    #[test]
    fn tables_are_consistent() {
        for (p, e, m) in [(3, 1, 3), (3, 1, 4), (5, 1, 2), (3, 2, 2), (7, 1, 2), (5, 1, 3)] {
            let c = ctx(p, e, m);
            let g = c.order() - 1;
            for x in c.elements().skip(1) {
                let l = c.log(x).unwrap();
                assert_eq!(c.alpha_pow(l as i64), x);
            }
            assert_eq!(c.pow(c.alpha(), g as i64).unwrap(), Elem::ONE);
            for k in 1..g {
                assert_ne!(c.alpha_pow(k as i64), Elem::ONE);
            }
            let n = c.n() as i64;
            let beta = c.beta();
            assert_eq!(c.pow(beta, n).unwrap(), Elem::ONE);
            for k in 1..n {
                assert_ne!(c.pow(beta, k).unwrap(), Elem::ONE);
            }
        }
    }

    #[test]
    fn addition_matches_coordinates() {
        let c = ctx(5, 1, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let (x, y) = (random_elem(&c, &mut rng), random_elem(&c, &mut rng));
            let want: Vec<u64> =
                c.coords(x).iter().zip(c.coords(y)).map(|(a, b)| (a + b) % 5).collect();
            assert_eq!(c.coords(c.add(x, y)), want);
            assert_eq!(c.sub(c.add(x, y), y), x);
        }
    }

    #[test]
    fn arith_examples() {
        let f3 = ctx(3, 1, 1);
        assert_eq!(f3.base().inv(2).unwrap(), 2);
        let f27 = ctx(3, 1, 3);
        assert_eq!(f27.pow(f27.alpha(), 26).unwrap(), Elem::ONE);
        assert_eq!(f27.inv(Elem::ZERO), Err(Error::InverseOfZero));
        assert_eq!(f27.pow(Elem::ZERO, -1), Err(Error::InverseOfZero));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let x = random_elem(&f27, &mut rng);
            assert_eq!(f27.mul(x, Elem::ZERO), Elem::ZERO);
            if !x.is_zero() {
                assert_eq!(f27.mul(x, f27.inv(x).unwrap()), Elem::ONE);
            }
        }
    }

    #[test]
    fn field_axioms_sampled() {
        let c = ctx(3, 2, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let (x, y, z) =
                (random_elem(&c, &mut rng), random_elem(&c, &mut rng), random_elem(&c, &mut rng));
            assert_eq!(c.mul(x, c.add(y, z)), c.add(c.mul(x, y), c.mul(x, z)));
            assert_eq!(c.add(c.add(x, y), z), c.add(x, c.add(y, z)));
            assert_eq!(c.mul(c.mul(x, y), z), c.mul(x, c.mul(y, z)));
            assert_eq!(c.add(x, c.neg(x)), Elem::ZERO);
        }
    }

    #[test]
    fn trace_examples() {
        let f27 = ctx(3, 1, 3);
        assert_eq!(f27.trace(Elem::ONE), 0);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let (x, y) = (random_elem(&f27, &mut rng), random_elem(&f27, &mut rng));
            assert_eq!(f27.base().add(f27.trace(x), f27.trace(y)), f27.trace(f27.add(x, y)));
        }
        let f9 = ctx(3, 1, 2);
        for c in 0..3u16 {
            assert_eq!(f9.trace(f9.embed(c)), f9.base().mul(2, c));
        }
    }

    #[test]
    fn trace_is_balanced() {
        for (p, e, m) in [(3, 1, 2), (3, 1, 5), (5, 1, 3), (3, 2, 2), (7, 1, 2)] {
            let c = ctx(p, e, m);
            let mut hits = vec![0u64; c.base().q()];
            for x in c.elements() {
                hits[c.trace(x) as usize] += 1;
            }
            let want = c.order() / c.q();
            assert!(hits.iter().all(|&h| h == want), "{p}^{e}, m={m}: {hits:?}");
        }
    }

    #[test]
    fn quadratic_character() {
        let f3 = ctx(3, 1, 2);
        assert_eq!(f3.eta(1), 1);
        assert_eq!(f3.eta(2), -1);
        assert_eq!(f3.eta(0), 0);
        for (p, e) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)] {
            let c = ctx(p, e, 2);
            let b = c.base();
            let squares = b.elements().filter(|&x| b.eta(x) == 1).count();
            assert_eq!(squares, (b.q() - 1) / 2);
            for x in b.elements().skip(1) {
                for y in b.elements().skip(1) {
                    assert_eq!(b.eta(b.mul(x, y)), b.eta(x) * b.eta(y));
                }
                let is_square = b.elements().any(|s| b.mul(s, s) == x);
                assert_eq!(b.eta(x) == 1, is_square);
            }
            assert_eq!(b.eta_minus_one() == 1, c.q() % 4 == 1);
        }
    }

    #[test]
    fn prime_residues_have_matching_codes() {
        let c = ctx(7, 1, 2);
        for v in 0..7 {
            assert_eq!(c.base().from_int(v), v as u16);
        }
        assert_eq!(c.base().from_int(-1), 6);
        assert_eq!(c.to_base(c.half()), Some(4));
    }

    #[test]
    fn subfield_membership() {
        let c = ctx(3, 1, 4);
        assert!(c.in_subfield(c.embed(2), 1).unwrap());
        assert!(!c.in_subfield(c.alpha(), 2).unwrap());
        assert!(c.in_subfield(c.alpha_pow(10), 2).unwrap());
        assert_eq!(c.in_subfield(c.alpha(), 3), Err(Error::NotADivisor(3, 4)));
        let sub = c.subfield(2).unwrap();
        assert_eq!(sub.len(), 9);
        for &x in sub.elements() {
            assert!(c.in_subfield(x, 2).unwrap());
            assert_eq!(sub.embed(sub.project(x).unwrap()).unwrap(), x);
        }
        assert_eq!(sub.project(c.alpha()), Err(Error::NotInSubfield));
        let members = c.elements().filter(|&x| c.in_subfield(x, 2).unwrap()).count();
        assert_eq!(members, 9);
    }

    #[test]
    fn prime_power_base_field() {
        let c = ctx(3, 2, 2);
        let b = c.base();
        assert_eq!(b.q(), 9);
        for x in b.elements() {
            for y in b.elements() {
                assert_eq!(c.embed(b.add(x, y)), c.add(c.embed(x), c.embed(y)));
                assert_eq!(c.embed(b.mul(x, y)), c.mul(c.embed(x), c.embed(y)));
            }
        }
        assert!(b.elements().skip(1).all(|x| b.mul(x, b.inv(x).unwrap()) == 1));
    }
}
