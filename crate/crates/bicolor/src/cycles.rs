use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An oriented cycle written as a list of distinct 1-based symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedCycleWord {
    elements: Vec<u8>,
}

impl OrientedCycleWord {
    pub fn new(elements: Vec<u8>) -> Result<Self> {
        if elements.len() < 3 {
            return Err(Error::input(format!(
                "cycle word needs at least 3 symbols, got {}",
                elements.len()
            )));
        }
        for (i, &e) in elements.iter().enumerate() {
            if e == 0 {
                return Err(Error::input("cycle symbols are 1-based"));
            }
            if elements[..i].contains(&e) {
                return Err(Error::input(format!("repeated symbol {e} in cycle word")));
            }
        }
        Ok(OrientedCycleWord { elements })
    }

    /// Parses digit strings like "13524".
    pub fn parse(text: &str) -> Result<Self> {
        let elements = text
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|&d| d > 0)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::input(format!("bad cycle digit {c:?} in {text:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        OrientedCycleWord::new(elements)
    }

    pub fn elements(&self) -> &[u8] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// An unoriented cycle: the lexicographically least word over the dihedral
/// orbit (all rotations of both directions) of a representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CycleClass {
    canonical: Vec<u8>,
}

impl CycleClass {
    pub fn canonical(&self) -> &[u8] {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The class of a 3-subset is its sorted word.
    pub fn of_subset(subset: [u8; 3]) -> CycleClass {
        let word = OrientedCycleWord::new(subset.to_vec()).expect("3-subset is a valid word");
        canonical_cycle(&word)
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for &e in &self.canonical {
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic minimum over the `2k` dihedral images of a word.
pub(crate) fn dihedral_min<T: Ord + Clone>(word: &[T]) -> Vec<T> {
    let k = word.len();
    let mut best: Option<Vec<T>> = None;
    let mut consider = |candidate: Vec<T>| {
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate);
        }
    };
    let forward = word.to_vec();
    let mut backward = word.to_vec();
    backward.reverse();
    for rot in 0..k {
        let mut f = forward.clone();
        f.rotate_left(rot);
        consider(f);
        let mut b = backward.clone();
        b.rotate_left(rot);
        consider(b);
    }
    best.expect("nonempty orbit")
}

/// Lexicographic minimum over the `2k` dihedral images of the word.
pub fn canonical_cycle(word: &OrientedCycleWord) -> CycleClass {
    CycleClass {
        canonical: dihedral_min(&word.elements),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "EVEN"),
            Parity::Odd => write!(f, "ODD"),
        }
    }
}

/// Parity of a word that must be a permutation of `1..=n` where `n` is the
/// word length, computed as inversion count mod 2.
pub fn permutation_parity(word: &[u8]) -> Result<Parity> {
    let n = word.len();
    let mut seen = vec![false; n + 1];
    for &e in word {
        if e == 0 || e as usize > n || seen[e as usize] {
            return Err(Error::input(format!(
                "{word:?} is not a permutation of 1..={n}"
            )));
        }
        seen[e as usize] = true;
    }
    let inversions = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| word[i] > word[j])
        .count();
    Ok(if inversions % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// Parity of a full-length cycle class over `1..=n`. Well-defined only when
/// `n = 1 (mod 4)`: rotations are even permutations of the word exactly
/// then, and reflection preserves parity exactly when `(n-1)/2` is even.
pub fn cycle_parity(class: &CycleClass) -> Result<Parity> {
    let n = class.len();
    if n % 4 != 1 {
        return Err(Error::precondition(format!(
            "parity is not class-invariant for cycle length {n} (length must be 1 mod 4)"
        )));
    }
    permutation_parity(class.canonical())
}

/// Whether reversing an n-circuit preserves permutation parity, for odd n.
/// With n = 2k+1 the answer is "iff k is even".
pub fn reversal_preserves_parity(n: usize) -> Result<bool> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::input(format!("need odd n >= 3, got {n}")));
    }
    Ok(((n - 1) / 2) % 2 == 0)
}
