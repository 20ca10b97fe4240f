//! Rational labels on the Stern-Brocot (Farey) tree and the Christoffel
//! words they generate.
//!
//! Every module in this crate indexes its objects by a reduced rational
//! `t ∈ [0,1]`. The tree is rooted at the vertex between 0/1 and 1/1, whose
//! mediant is 1/2; descending left moves toward the smaller neighbor. Words
//! are built by the tree concatenation rule seeded with `w_{0/1} = X` and
//! `w_{1/1} = XY`: the region of a mediant carries the concatenation of its
//! two parent-region words.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::Error;

/// A reduced rational in `[0,1]`. Construction reduces silently; only a zero
/// denominator or a value above 1 is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FareyRational {
    num: u64,
    den: u64,
}

impl FareyRational {
    pub fn new(num: u64, den: u64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::MalformedInput(format!("{num}/{den}: zero denominator")));
        }
        if num > den {
            return Err(Error::MalformedInput(format!("{num}/{den} lies outside [0,1]")));
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn zero() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn one() -> Self {
        Self { num: 1, den: 1 }
    }

    fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        // cross-multiplication avoids overflow only up to u64 products;
        // denominators here stay far below that range
        let lhs = (self.num as u128) * (other.den as u128);
        let rhs = (other.num as u128) * (self.den as u128);
        lhs.cmp(&rhs)
    }

    /// `|ad − bc|`, the Farey-neighbor determinant.
    fn det(&self, other: &Self) -> u128 {
        let lhs = (self.num as u128) * (other.den as u128);
        let rhs = (other.num as u128) * (self.den as u128);
        lhs.abs_diff(rhs)
    }
}

impl fmt::Display for FareyRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for FareyRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (p, r) = s
            .split_once('/')
            .ok_or_else(|| Error::MalformedInput(format!("{s:?}: expected \"p/r\"")))?;
        let num = p
            .trim()
            .parse()
            .map_err(|_| Error::MalformedInput(format!("{s:?}: bad numerator")))?;
        let den = r
            .trim()
            .parse()
            .map_err(|_| Error::MalformedInput(format!("{s:?}: bad denominator")))?;
        Self::new(num, den)
    }
}

/// The Farey sum `(a+c)/(b+d)` of two neighbor fractions `a/b`, `c/d`.
/// Errors with [`Error::NotNeighbors`] when `|ad − bc| ≠ 1`.
pub fn mediant(a: FareyRational, b: FareyRational) -> Result<FareyRational, Error> {
    if a.det(&b) != 1 {
        return Err(Error::NotNeighbors(a.num, a.den, b.num, b.den));
    }
    FareyRational::new(a.num + b.num, a.den + b.den)
}

/// One step of the Stern-Brocot descent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PathStep {
    Left,
    Right,
}

/// The descent path from the tree's top vertex (between 0/1 and 1/1, whose
/// mediant is 1/2) to the region labeled `t`. `Left` descends toward the
/// smaller neighbor. The root-adjacent labels 0/1, 1/1 and the root 1/2 all
/// yield the empty path.
pub fn stern_brocot_path(t: FareyRational) -> Vec<PathStep> {
    let mut path = Vec::new();
    if t == FareyRational::zero() || t == FareyRational::one() {
        return path;
    }
    let mut lo = FareyRational::zero();
    let mut hi = FareyRational::one();
    loop {
        let med = FareyRational::new(lo.num + hi.num, lo.den + hi.den).expect("mediant in range");
        match t.cmp_value(&med) {
            std::cmp::Ordering::Equal => return path,
            std::cmp::Ordering::Less => {
                path.push(PathStep::Left);
                hi = med;
            }
            std::cmp::Ordering::Greater => {
                path.push(PathStep::Right);
                lo = med;
            }
        }
    }
}

/// All reduced rationals in `[0,1]` with denominator at most `max_den`,
/// in increasing value order (the Farey sequence of order `max_den`).
pub fn labels_up_to(max_den: u64) -> Vec<FareyRational> {
    let mut out = Vec::new();
    for den in 1..=max_den {
        for num in 0..=den {
            if num.gcd(&den) == 1 {
                out.push(FareyRational::new(num, den).expect("reduced and in range"));
            }
        }
    }
    out.sort_by(|a, b| a.cmp_value(b));
    out.dedup();
    out
}

/// Replays a path from the root, returning the label it leads to.
pub fn label_of_path(path: &[PathStep]) -> FareyRational {
    let mut lo = FareyRational::zero();
    let mut hi = FareyRational::one();
    let mut med = FareyRational::new(1, 2).unwrap();
    for step in path {
        match step {
            PathStep::Left => hi = med,
            PathStep::Right => lo = med,
        }
        med = FareyRational::new(lo.num + hi.num, lo.den + hi.den).expect("mediant in range");
    }
    med
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbLetter {
    A,
    B,
}

/// A Christoffel word over `{X, Y}` together with its rational label.
///
/// For `0 < t < 1` the word has the form `X·π·Y` with `π` a palindrome, and
/// the letter counts recover the label: `#Y / #X = t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChristoffelWord {
    pub letters: Vec<Letter>,
    pub label: FareyRational,
}

/// The Christoffel word of `t`, built by the tree concatenation rule along
/// the Stern-Brocot path: `w_{0/1} = X`, `w_{1/1} = XY`, and the mediant
/// region carries `w_lo · w_hi`.
pub fn christoffel_word(t: FareyRational) -> ChristoffelWord {
    if t == FareyRational::zero() {
        return ChristoffelWord {
            letters: vec![Letter::X],
            label: t,
        };
    }
    if t == FareyRational::one() {
        return ChristoffelWord {
            letters: vec![Letter::X, Letter::Y],
            label: t,
        };
    }
    let mut w_lo = vec![Letter::X];
    let mut w_hi = vec![Letter::X, Letter::Y];
    for step in stern_brocot_path(t) {
        let mut med = Vec::with_capacity(w_lo.len() + w_hi.len());
        med.extend_from_slice(&w_lo);
        med.extend_from_slice(&w_hi);
        match step {
            PathStep::Left => w_hi = med,
            PathStep::Right => w_lo = med,
        }
    }
    let mut letters = w_lo;
    letters.extend_from_slice(&w_hi);
    ChristoffelWord { letters, label: t }
}

/// Recodes a Christoffel word over `{A, B}` via the substitution `A → X`,
/// `B → XY`. The decoding is unique; a `Y` not preceded by an unconsumed `X`
/// has no preimage and is rejected.
pub fn recode_ab(w: &ChristoffelWord) -> Result<Vec<AbLetter>, Error> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < w.letters.len() {
        match (w.letters[i], w.letters.get(i + 1)) {
            (Letter::X, Some(Letter::Y)) => {
                out.push(AbLetter::B);
                i += 2;
            }
            (Letter::X, _) => {
                out.push(AbLetter::A);
                i += 1;
            }
            (Letter::Y, _) => return Err(Error::MalformedWord),
        }
    }
    Ok(out)
}

/// Expands an `{A, B}` word back to `{X, Y}` (the inverse of [`recode_ab`]).
pub fn expand_ab(word: &[AbLetter]) -> Vec<Letter> {
    let mut out = Vec::new();
    for letter in word {
        match letter {
            AbLetter::A => out.push(Letter::X),
            AbLetter::B => {
                out.push(Letter::X);
                out.push(Letter::Y);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, r: u64) -> FareyRational {
        FareyRational::new(p, r).unwrap()
    }

    fn word_str(w: &[Letter]) -> String {
        w.iter()
            .map(|l| match l {
                Letter::X => 'X',
                Letter::Y => 'Y',
            })
            .collect()
    }

    #[test]
    fn construction_reduces_and_validates() {
        assert_eq!(fr(2, 4), fr(1, 2));
        assert!(FareyRational::new(1, 0).is_err());
        assert!(FareyRational::new(3, 2).is_err());
        assert_eq!("2/5".parse::<FareyRational>().unwrap(), fr(2, 5));
        assert!("5".parse::<FareyRational>().is_err());
        assert!("a/b".parse::<FareyRational>().is_err());
    }

    #[test]
    fn mediant_of_neighbors() {
        assert_eq!(mediant(fr(0, 1), fr(1, 1)).unwrap(), fr(1, 2));
        assert_eq!(mediant(fr(1, 2), fr(1, 1)).unwrap(), fr(2, 3));
        // |1·5 − 2·3| = 1: these ARE neighbors
        assert_eq!(mediant(fr(1, 3), fr(2, 5)).unwrap(), fr(3, 8));
        // |1·5 − 3·3| = 4: not neighbors
        assert_eq!(
            mediant(fr(1, 3), fr(3, 5)),
            Err(Error::NotNeighbors(1, 3, 3, 5))
        );
    }

    #[test]
    fn descent_paths() {
        assert!(stern_brocot_path(fr(1, 2)).is_empty());
        assert_eq!(stern_brocot_path(fr(2, 3)), vec![PathStep::Right]);
        assert_eq!(
            stern_brocot_path(fr(3, 5)),
            vec![PathStep::Right, PathStep::Left]
        );
        assert!(stern_brocot_path(fr(0, 1)).is_empty());
        assert!(stern_brocot_path(fr(1, 1)).is_empty());
    }

    #[test]
    fn christoffel_words_match_tree_regions() {
        assert_eq!(word_str(&christoffel_word(fr(3, 5)).letters), "XXYXXYXY");
        assert_eq!(word_str(&christoffel_word(fr(0, 1)).letters), "X");
        assert_eq!(word_str(&christoffel_word(fr(1, 2)).letters), "XXY");
        assert_eq!(word_str(&christoffel_word(fr(1, 1)).letters), "XY");
        assert_eq!(word_str(&christoffel_word(fr(2, 3)).letters), "XXYXY");
    }

    #[test]
    fn recode_examples() {
        let ab = |t: FareyRational| -> String {
            recode_ab(&christoffel_word(t))
                .unwrap()
                .iter()
                .map(|l| match l {
                    AbLetter::A => 'A',
                    AbLetter::B => 'B',
                })
                .collect()
        };
        assert_eq!(ab(fr(3, 5)), "ABABB");
        assert_eq!(ab(fr(1, 1)), "B");
        assert_eq!(ab(fr(1, 2)), "AB");
        let bad = ChristoffelWord {
            letters: vec![Letter::Y],
            label: fr(1, 1),
        };
        assert_eq!(recode_ab(&bad), Err(Error::MalformedWord));
    }

    #[test]
    fn label_enumeration() {
        let f5 = labels_up_to(5);
        let expect: Vec<FareyRational> = [
            (0, 1),
            (1, 5),
            (1, 4),
            (1, 3),
            (2, 5),
            (1, 2),
            (3, 5),
            (2, 3),
            (3, 4),
            (4, 5),
            (1, 1),
        ]
        .map(|(p, r)| fr(p, r))
        .to_vec();
        assert_eq!(f5, expect);
        assert_eq!(labels_up_to(13).len(), 59);
    }

    #[test]
    fn inner_factor_is_palindromic() {
        for (p, r) in [(1u64, 2u64), (2, 3), (3, 5), (2, 7), (5, 8), (7, 12)] {
            let w = christoffel_word(fr(p, r)).letters;
            assert_eq!(w[0], Letter::X);
            assert_eq!(*w.last().unwrap(), Letter::Y);
            let inner = &w[1..w.len() - 1];
            let reversed: Vec<_> = inner.iter().rev().copied().collect();
            assert_eq!(inner, &reversed[..], "t = {p}/{r}");
        }
    }

    #[test]
    fn letter_counts_recover_label() {
        for (p, r) in [(1u64, 2u64), (1, 3), (2, 3), (3, 5), (5, 13), (4, 11)] {
            let w = christoffel_word(fr(p, r)).letters;
            let ys = w.iter().filter(|l| **l == Letter::Y).count() as u64;
            let xs = w.iter().filter(|l| **l == Letter::X).count() as u64;
            assert_eq!((ys, xs), (p, r), "t = {p}/{r}");
        }
    }
}
