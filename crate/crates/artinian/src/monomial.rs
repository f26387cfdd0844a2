//! Exponent-vector monomials with degree-graded enumeration, divisibility and
//! dense indexing within a fixed degree.
//!
//! The canonical order inside one degree is graded-lexicographic with `x1`
//! largest: exponent vectors sorted lexicographically descending, so the
//! degree-`d` block starts at `x1^d` and ends at `xn^d`. Both engines rely on
//! this order being deterministic.

use std::fmt;
use std::sync::OnceLock;

use crate::{Error, Result};

/// Exponents stay small at desk scale (degrees are bounded by `2s + n - 2`),
/// so one byte per variable is plenty.
pub type Exponent = u8;

/// A monomial in `n` variables, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<Exponent>,
}

impl Monomial {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Self { exps }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// `x_i^2` with `i` 1-based.
    pub fn square(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::VariableOutOfRange { index: i, n });
        }
        let mut exps = vec![0; n];
        exps[i - 1] = 2;
        Ok(Self { exps })
    }

    /// `x_i x_j` with distinct 1-based indices.
    pub fn pair(n: usize, i: usize, j: usize) -> Result<Self> {
        if i < 1 || i > n {
            return Err(Error::VariableOutOfRange { index: i, n });
        }
        if j < 1 || j > n {
            return Err(Error::VariableOutOfRange { index: j, n });
        }
        let mut exps = vec![0; n];
        exps[i - 1] += 1;
        exps[j - 1] += 1;
        Ok(Self { exps })
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    /// `self` divides `m` iff every exponent is componentwise `<=`.
    pub fn divides(&self, m: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), m.nvars());
        self.exps.iter().zip(&m.exps).all(|(a, b)| a <= b)
    }

    /// Componentwise sum of exponent vectors.
    pub fn mul(&self, m: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), m.nvars());
        Monomial {
            exps: self.exps.iter().zip(&m.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Position of this monomial in the canonical order of its degree block.
    pub fn rank_in_degree(&self) -> usize {
        let mut rank = 0u64;
        let mut d = self.degree();
        let n = self.nvars();
        for (pos, &a) in self.exps.iter().enumerate() {
            let rest = (n - pos - 1) as u64;
            if rest == 0 {
                break;
            }
            // monomials whose exponent here exceeds `a` come first
            for b in (a as u32 + 1)..=d {
                rank += count_u64(rest, (d - b) as u64);
            }
            d -= a as u32;
        }
        rank as usize
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

const PASCAL_MAX: usize = 67;

fn pascal() -> &'static Vec<Vec<u64>> {
    static TABLE: OnceLock<Vec<Vec<u64>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![vec![0u64; PASCAL_MAX]; PASCAL_MAX];
        for a in 0..PASCAL_MAX {
            t[a][0] = 1;
            for b in 1..=a {
                t[a][b] = t[a - 1][b - 1].checked_add(t[a - 1][b]).expect("binomial overflow");
            }
        }
        t
    })
}

fn binom_u64(a: u64, b: u64) -> u64 {
    if b > a {
        return 0;
    }
    assert!((a as usize) < PASCAL_MAX, "index binomial out of table range");
    pascal()[a as usize][b as usize]
}

/// Number of monomials of degree `d` in `n` variables, `C(d + n - 1, n - 1)`,
/// as a machine integer (ranks at desk scale fit comfortably).
pub fn count_in_degree(n: usize, d: u32) -> usize {
    count_u64(n as u64, d as u64) as usize
}

fn count_u64(n: u64, d: u64) -> u64 {
    binom_u64(d + n - 1, n - 1)
}

/// All monomials of degree `d` in `n` variables, in canonical order.
pub fn enumerate_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(count_in_degree(n, d));
    let mut cur = vec![0 as Exponent; n];
    descend(&mut cur, 0, d, &mut out);
    out
}

fn descend(cur: &mut Vec<Exponent>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == cur.len() {
        cur[pos] = left as Exponent;
        out.push(Monomial::new(cur.clone()));
        return;
    }
    for a in (0..=left).rev() {
        cur[pos] = a as Exponent;
        descend(cur, pos + 1, left - a, out);
    }
    cur[pos] = 0;
}

/// Inverse of [`Monomial::rank_in_degree`] for the degree-`d` block.
pub fn unrank_in_degree(n: usize, d: u32, rank: usize) -> Result<Monomial> {
    let count = count_in_degree(n, d);
    if rank >= count {
        return Err(Error::RankOutOfRange {
            n,
            degree: d,
            rank,
            count,
        });
    }
    let mut k = rank as u64;
    let mut exps = vec![0 as Exponent; n];
    let mut d = d as u64;
    for pos in 0..n {
        let rest = (n - pos - 1) as u64;
        if rest == 0 {
            exps[pos] = d as Exponent;
            break;
        }
        for a in (0..=d).rev() {
            let block = count_u64(rest, d - a);
            if k < block {
                exps[pos] = a as Exponent;
                d -= a;
                break;
            }
            k -= block;
        }
    }
    Ok(Monomial::new(exps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn enumerate_small_blocks() {
        let block = enumerate_degree(2, 2);
        let rendered: Vec<String> = block.iter().map(|m| m.to_string()).collect();
        assert_eq!(rendered, vec!["x1^2", "x1*x2", "x2^2"]);

        assert_eq!(enumerate_degree(3, 0), vec![Monomial::one(3)]);
        assert_eq!(enumerate_degree(4, 2).len(), 10);
    }

    #[test]
    fn counts_match_binomials() {
        for n in 1..=6usize {
            for d in 0..=14u32 {
                let expected = crate::combinatorics::binomial(d as u64 + n as u64 - 1, n as u64 - 1);
                assert_eq!(BigInt::from(enumerate_degree(n, d).len()), expected);
                assert_eq!(BigInt::from(count_in_degree(n, d)), expected);
            }
        }
    }

    #[test]
    fn rank_examples() {
        let block = enumerate_degree(2, 2);
        assert_eq!(block[0].rank_in_degree(), 0);
        assert_eq!(unrank_in_degree(2, 2, 2).unwrap(), block[2]);
        assert_eq!(block[2].to_string(), "x2^2");
    }

    #[test]
    fn rank_unrank_roundtrip() {
        for n in 1..=5usize {
            for d in 0..=12u32 {
                for (k, m) in enumerate_degree(n, d).iter().enumerate() {
                    assert_eq!(m.rank_in_degree(), k);
                    assert_eq!(&unrank_in_degree(n, d, k).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn unrank_out_of_range() {
        let err = unrank_in_degree(3, 2, 6).unwrap_err();
        assert!(matches!(err, Error::RankOutOfRange { count: 6, .. }));
    }

    #[test]
    fn divisibility_and_products() {
        let a = Monomial::new(vec![1, 0, 1]);
        let b = Monomial::new(vec![2, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert!(a.divides(&a));
        let p = a.mul(&b);
        assert_eq!(p.degree(), a.degree() + b.degree());
        assert_eq!(p, Monomial::new(vec![3, 1, 2]));
    }

    #[test]
    fn display_rendering() {
        let m = Monomial::new(vec![2, 0, 1]);
        assert_eq!(m.to_string(), "x1^2*x3");
        assert_eq!(Monomial::one(3).to_string(), "1");
    }
}
