//! `q`-cyclotomic cosets modulo `n` and the ranking of their leaders.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coset {
    /// Sorted residues.
    pub elements: Vec<u64>,
    pub leader: u64,
}

impl Coset {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

/// The orbit of `s` under multiplication by `q` modulo `n`.
pub fn coset_of(q: u64, n: u64, s: u64) -> Coset {
    assert!(n >= 1 && s < n, "residue {s} out of range for modulus {n}");
    let qn = (q % n) as u128;
    let mut elements = vec![s];
    let mut x = (s as u128 * qn % n as u128) as u64;
    while x != s {
        elements.push(x);
        x = (x as u128 * qn % n as u128) as u64;
    }
    elements.sort_unstable();
    Coset { leader: elements[0], elements }
}

/// The partition of `Z_n` into `q`-cyclotomic cosets.
#[derive(Debug, Clone, Serialize)]
pub struct CosetTable {
    q: u64,
    n: u64,
    /// Sorted by leader.
    cosets: Vec<Coset>,
    #[serde(skip)]
    coset_index: Vec<u32>,
}

impl CosetTable {
    /// Scans every residue of `Z_n`. Any `n >= 1` coprime to `q` is accepted.
    pub fn new(q: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("modulus n must be positive".into()));
        }
        if num_integer::gcd(q, n) != 1 {
            return Err(Error::InvalidParams(format!("q = {q} and n = {n} are not coprime")));
        }
        let mut coset_index = vec![u32::MAX; n as usize];
        let mut cosets = Vec::new();
        for s in 0..n {
            if coset_index[s as usize] != u32::MAX {
                continue;
            }
            let c = coset_of(q, n, s);
            for &x in &c.elements {
                coset_index[x as usize] = cosets.len() as u32;
            }
            cosets.push(c);
        }
        Ok(CosetTable { q, n, cosets, coset_index })
    }

    /// The table for `n = (q^m - 1)/2`.
    pub fn for_field(q: u64, m: u32) -> Result<Self> {
        let order = q.checked_pow(m).ok_or(Error::Overflow("q^m"))?;
        let t = CosetTable::new(q, (order - 1) / 2)?;
        debug_assert!(t.cosets.iter().all(|c| (m as usize).is_multiple_of(c.size())));
        Ok(t)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn cosets(&self) -> &[Coset] {
        &self.cosets
    }

    /// `Γ_{n,q}` in ascending order.
    pub fn leaders(&self) -> Vec<u64> {
        self.cosets.iter().map(|c| c.leader).collect()
    }

    pub fn coset_containing(&self, s: u64) -> &Coset {
        &self.cosets[self.coset_index[(s % self.n) as usize] as usize]
    }

    pub fn leader_of(&self, s: u64) -> u64 {
        self.coset_containing(s).leader
    }

    pub fn is_leader(&self, s: u64) -> bool {
        s < self.n && self.leader_of(s) == s
    }

    /// The `i`-th largest coset leader, `i` starting at 1.
    pub fn ith_largest_leader(&self, i: usize) -> Result<u64> {
        let k = self.cosets.len();
        if i == 0 || i > k {
            return Err(Error::IndexOutOfRange { index: i as u64, max: k as u64 });
        }
        Ok(self.cosets[k - i].leader)
    }
}

/// Number of indices `i` covered by the leader formula: `⌊(m+3)/4⌋`.
pub fn delta_index_bound(m: u32) -> u32 {
    m.div_ceil(4)
}

/// `δ_i = (q^m - q^(m-1))/2 - 1 - (q^(⌊(m-3)/2⌋+i) - 1)/2`.
pub fn delta_formula(q: u64, m: u32, i: u32) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidParams(format!("m = {m} must be at least 2")));
    }
    let bound = delta_index_bound(m);
    if i == 0 || i > bound {
        return Err(Error::IndexOutOfRange { index: i as u64, max: bound as u64 });
    }
    let q = q as u128;
    let pow = |e: i64| -> Result<u128> {
        q.checked_pow(u32::try_from(e).expect("exponent is nonnegative"))
            .ok_or(Error::Overflow("delta_formula"))
    };
    let top = pow(m as i64)? - pow(m as i64 - 1)?;
    let shift = (m as i64 - 3).div_euclid(2) + i as i64;
    let delta = top / 2 - 1 - (pow(shift)? - 1) / 2;
    u64::try_from(delta).map_err(|_| Error::Overflow("delta_formula"))
}
