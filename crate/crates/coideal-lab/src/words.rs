//! Words over `x_1..x_n`, constitutions, ψ-indexing, standard words and
//! root intervals.
//!
//! Letters are ordered `x_1 > x_2 > ... > x_n`, and a proper prefix of a word
//! is greater than the word itself. [`Word`]'s `Ord` implements exactly this
//! order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// ψ(i) = 2n − i + 1 on extended indices `1..=2n`.
pub fn psi(n: usize, i: usize) -> Result<usize> {
    if i == 0 || i > 2 * n {
        return Err(Error::IndexOutOfRange(format!("psi({i}) with n = {n}")));
    }
    Ok(2 * n + 1 - i)
}

/// ψ without range checks; valid for `0 ≤ i ≤ 2n + 1`.
#[inline]
pub(crate) fn psi_raw(n: usize, i: usize) -> usize {
    2 * n + 1 - i
}

/// The letter index of extended index `i`, so `x_{n+r} = x_{n-r+1}`.
#[inline]
pub fn letter_of(n: usize, i: usize) -> usize {
    if i > n {
        psi_raw(n, i)
    } else {
        i
    }
}

fn check_interval(n: usize, k: usize, m: usize) -> Result<()> {
    if k == 0 || k > m || m > 2 * n {
        return Err(Error::IndexOutOfRange(format!("[{k},{m}] with n = {n}")));
    }
    Ok(())
}

/// A word in the letters `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn from_letters(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&i| i as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn constitution(&self, n: usize) -> Constitution {
        let mut c = vec![0u32; n];
        for &l in &self.0 {
            c[l as usize - 1] += 1;
        }
        Constitution(c)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn split_at(&self, i: usize) -> (Word, Word) {
        (Word(self.0[..i].to_vec()), Word(self.0[i..].to_vec()))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            if a != b {
                // smaller index means larger letter
                return b.cmp(a);
            }
        }
        // a proper prefix is greater
        other.0.len().cmp(&self.0.len())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Multiplicity vector over `x_1..x_n`; the Γ⁺-degree of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Constitution(pub Vec<u32>);

impl Constitution {
    pub fn zero(n: usize) -> Self {
        Constitution(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut c = Self::zero(n);
        c.0[letter_of(n, i) - 1] = 1;
        c
    }

    /// Constitution of `u(k,m) = x_k ... x_m` on extended indices.
    pub fn interval(n: usize, k: usize, m: usize) -> Self {
        let mut c = Self::zero(n);
        for i in k..=m {
            c.0[letter_of(n, i) - 1] += 1;
        }
        c
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        Constitution(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(Constitution)
    }

    pub fn scale(&self, k: u32) -> Self {
        Constitution(self.0.iter().map(|a| a * k).collect())
    }

    /// True when every entry is at most the corresponding entry of `other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// The group part `g_1^{c_1}...g_n^{c_n}` as a signed vector.
    pub fn as_group(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64).collect()
    }
}

impl fmt::Display for Constitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| if c == 1 { format!("x{}", i + 1) } else { format!("{c}x{}", i + 1) })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// `u(k,m) = x_k x_{k+1} ... x_m` with extended indices normalized.
pub fn u_word(n: usize, k: usize, m: usize) -> Result<Word> {
    check_interval(n, k, m)?;
    Ok(Word((k..=m).map(|i| letter_of(n, i) as u8).collect()))
}

/// `u(m,k) = x_m x_{m-1} ... x_k`, the reverse of `u(k,m)`.
pub fn u_word_desc(n: usize, m: usize, k: usize) -> Result<Word> {
    Ok(u_word(n, k, m)?.reversed())
}

/// A word is standard when it is strictly greater than each of its proper
/// cyclic rotations.
pub fn is_standard(w: &Word) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| {
        let (v, u) = w.split_at(i);
        v.concat(&u) > u.concat(&v)
    })
}

/// A binary bracket tree over letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bracket {
    Leaf(u8),
    Node(Box<Bracket>, Box<Bracket>),
}

impl Bracket {
    pub fn word(&self) -> Word {
        match self {
            Bracket::Leaf(l) => Word(vec![*l]),
            Bracket::Node(a, b) => a.word().concat(&b.word()),
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bracket::Leaf(l) => write!(f, "x{l}"),
            Bracket::Node(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Standard bracketing: split `w = vu` with both factors standard and `v` of
/// minimal length, then recurse.
pub fn standard_bracketing(w: &Word) -> Result<Bracket> {
    if !is_standard(w) {
        return Err(Error::NotStandard(w.to_string()));
    }
    if w.len() == 1 {
        return Ok(Bracket::Leaf(w.0[0]));
    }
    for i in 1..w.len() {
        let (v, u) = w.split_at(i);
        if is_standard(&v) && is_standard(&u) {
            return Ok(Bracket::Node(Box::new(standard_bracketing(&v)?), Box::new(standard_bracketing(&u)?)));
        }
    }
    Err(Error::NotStandard(w.to_string()))
}

/// The root `x_k + ... + x_m` written `[k:m]`.
///
/// Stored canonically with `m < ψ(k)` or `m = ψ(k)`, using
/// `[k:m] = [ψ(m):ψ(k)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootInterval {
    pub k: usize,
    pub m: usize,
}

impl RootInterval {
    pub fn new(n: usize, k: usize, m: usize) -> Result<Self> {
        check_interval(n, k, m)?;
        if m > psi_raw(n, k) {
            Ok(RootInterval { k: psi_raw(n, m), m: psi_raw(n, k) })
        } else {
            Ok(RootInterval { k, m })
        }
    }

    pub fn constitution(&self, n: usize) -> Constitution {
        Constitution::interval(n, self.k, self.m)
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.k, self.m)
    }
}

/// Finds a chain `k−1 = k_0 < k_1 < ... < k_r < k_{r+1} = m` such that the
/// intervals `[1+k_i : k_{i+1}]` are, as constitutions, a rearrangement of
/// `parts`. Returns the full chain including both ends, or `None` when no
/// chain exists.
pub fn decompose_interval(n: usize, target: RootInterval, parts: &[RootInterval]) -> Result<Option<Vec<usize>>> {
    check_interval(n, target.k, target.m)?;
    let sum = parts.iter().map(|p| p.constitution(n)).fold(Constitution::zero(n), |a, b| a.add(&b));
    if sum != target.constitution(n) {
        return Err(Error::ConstitutionMismatch(format!(
            "{target} has constitution {}, parts sum to {sum}",
            target.constitution(n)
        )));
    }
    let consts: Vec<Constitution> = parts.iter().map(|p| p.constitution(n)).collect();
    let mut used = vec![false; parts.len()];
    let mut chain = vec![target.k - 1];
    if chain_search(n, target.m, &consts, &mut used, &mut chain) {
        Ok(Some(chain))
    } else {
        Ok(None)
    }
}

fn chain_search(n: usize, m: usize, parts: &[Constitution], used: &mut [bool], chain: &mut Vec<usize>) -> bool {
    let last = *chain.last().unwrap();
    if last == m {
        return used.iter().all(|&u| u);
    }
    for j in last + 1..=m {
        let c = Constitution::interval(n, last + 1, j);
        for p in 0..parts.len() {
            if !used[p] && parts[p] == c {
                used[p] = true;
                chain.push(j);
                if chain_search(n, m, parts, used, chain) {
                    return true;
                }
                chain.pop();
                used[p] = false;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[usize]) -> Word {
        Word::from_letters(l)
    }

    #[test]
    fn psi_basics() {
        assert_eq!(psi(3, 3).unwrap(), 4);
        assert_eq!(psi(3, 2).unwrap(), 5);
        assert!(psi(3, 7).is_err());
        for i in 1..=6 {
            assert_eq!(psi(3, psi(3, i).unwrap()).unwrap(), i);
        }
    }

    #[test]
    fn u_words() {
        assert_eq!(u_word(2, 1, 3).unwrap(), w(&[1, 2, 2]));
        assert_eq!(u_word(3, 2, 5).unwrap(), w(&[2, 3, 3, 2]));
        assert_eq!(u_word(3, 2, 2).unwrap(), w(&[2]));
        assert_eq!(u_word_desc(3, 5, 2).unwrap(), w(&[2, 3, 3, 2]));
        assert!(u_word(2, 3, 2).is_err());
    }

    #[test]
    fn order() {
        assert!(w(&[1]) > w(&[2]));
        assert!(w(&[1]) > w(&[1, 2]));
        assert!(w(&[1, 2]) > w(&[1, 2, 2]));
        assert!(w(&[1, 2, 2]) > w(&[2]));
    }

    #[test]
    fn standard_words_and_bracketing() {
        assert!(is_standard(&w(&[1, 2, 2])));
        assert!(!is_standard(&w(&[2, 1])));
        assert_eq!(standard_bracketing(&w(&[1, 2, 2])).unwrap().to_string(), "[[x1,x2],x2]");
        assert_eq!(standard_bracketing(&w(&[3])).unwrap(), Bracket::Leaf(3));
        assert_eq!(standard_bracketing(&w(&[1, 2, 3, 2])).unwrap().to_string(), "[[x1,[x2,x3]],x2]");
        assert!(standard_bracketing(&w(&[2, 1])).is_err());
    }

    #[test]
    fn canonical_intervals() {
        assert_eq!(RootInterval::new(2, 3, 4).unwrap(), RootInterval { k: 1, m: 2 });
        assert_eq!(RootInterval::new(2, 1, 4).unwrap(), RootInterval { k: 1, m: 4 });
        assert_eq!(RootInterval::new(2, 1, 3).unwrap().to_string(), "[1:3]");
    }

    #[test]
    fn interval_chains() {
        let r = |k, m| RootInterval::new(2, k, m).unwrap();
        assert_eq!(decompose_interval(2, r(1, 3), &[r(1, 3)]).unwrap(), Some(vec![0, 3]));
        assert_eq!(decompose_interval(2, r(1, 3), &[r(2, 3), r(1, 1)]).unwrap(), Some(vec![0, 1, 3]));
        assert_eq!(decompose_interval(2, r(1, 4), &[r(1, 2), r(3, 4)]).unwrap(), Some(vec![0, 2, 4]));
        assert!(decompose_interval(2, r(1, 3), &[r(1, 2)]).is_err());
    }
}
