//! Dense linear algebra over GF(2).
//!
//! Vectors are packed into a single `u64` word, so every vector (and every
//! matrix row) has at most [`MAX_COLS`] coordinates. Coordinate `i` is bit `i`
//! of the word. Rows of a matrix are unbounded in number.
//!
//! Echelon forms use ascending column order for pivots, which makes the null
//! space basis and the independent-row selection deterministic.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vector length.
pub const MAX_COLS: usize = 64;

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A vector over GF(2) with at most 64 coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    word: u64,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Result<Self> {
        Self::from_word(len, 0)
    }

    /// Builds a vector from its packed word; bits at or above `len` must be clear.
    pub fn from_word(len: usize, word: u64) -> Result<Self> {
        if len > MAX_COLS {
            return Err(Error::capacity("vector length", len, MAX_COLS));
        }
        if word & !mask(len) != 0 {
            return Err(Error::InvalidValue(format!(
                "word {word:#x} has bits beyond length {len}"
            )));
        }
        Ok(Self { word, len })
    }

    /// Builds the indicator vector of a set of coordinates.
    pub fn from_indices(len: usize, indices: &[usize]) -> Result<Self> {
        let mut v = Self::zeros(len)?;
        for &i in indices {
            if i >= len {
                return Err(Error::InvalidValue(format!(
                    "index {i} out of range for length {len}"
                )));
            }
            v.word |= 1 << i;
        }
        Ok(v)
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        let idx: Vec<usize> = bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        Self::from_indices(bits.len(), &idx)
    }

    pub(crate) fn from_word_unchecked(len: usize, word: u64) -> Self {
        debug_assert!(len <= MAX_COLS && word & !mask(len) == 0);
        Self { word, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn word(&self) -> u64 {
        self.word
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range (len={})", self.len);
        (self.word >> i) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.word == 0
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.word.count_ones() as usize
    }

    /// Indices of the set coordinates, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Coordinate-wise XOR.
    ///
    /// # Panics
    /// Panics if lengths differ.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "xor: length mismatch");
        Self {
            word: self.word ^ other.word,
            len: self.len,
        }
    }

    /// Parity of the coordinate-wise AND.
    ///
    /// # Panics
    /// Panics if lengths differ.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "dot: length mismatch");
        (self.word & other.word).count_ones() % 2 == 1
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// A matrix over GF(2) stored as a list of equal-length rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if cols > MAX_COLS {
            return Err(Error::capacity("column count", cols, MAX_COLS));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Parses rows written as `"0110"` strings, coordinate 0 first.
    pub fn from_strs(cols: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|s| {
                let bits: Vec<bool> = s
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::InvalidValue(format!("bad bit character {c:?}"))),
                    })
                    .collect::<Result<_>>()?;
                BitVector::from_bools(&bits)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(cols, rows)
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        let zero = BitVector::zeros(cols)?;
        Self::from_rows(cols, vec![zero; rows])
    }

    pub fn identity(n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|i| BitVector::from_indices(n, &[i]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(n, rows)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Fails with a capacity error when there are more than 64 rows.
    pub fn transpose(&self) -> Result<Self> {
        let n = self.rows.len();
        if n > MAX_COLS {
            return Err(Error::capacity("row count for transpose", n, MAX_COLS));
        }
        let rows = (0..self.cols)
            .map(|c| {
                let word = self
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(_, r)| r.get(c))
                    .fold(0u64, |w, (i, _)| w | 1 << i);
                BitVector::from_word_unchecked(n, word)
            })
            .collect();
        Ok(Self { cols: n, rows })
    }

    /// Reduced row echelon form: the nonzero rows, each paired with its pivot
    /// column, pivots ascending.
    fn rref(&self) -> Vec<(usize, u64)> {
        let mut work: Vec<u64> = self.rows.iter().map(BitVector::word).collect();
        let mut pivots = Vec::new();
        for col in 0..self.cols {
            let top = pivots.len();
            let bit = 1u64 << col;
            let Some(found) = (top..work.len()).find(|&i| work[i] & bit != 0) else {
                continue;
            };
            work.swap(top, found);
            let pivot = work[top];
            for (i, w) in work.iter_mut().enumerate() {
                if i != top && *w & bit != 0 {
                    *w ^= pivot;
                }
            }
            pivots.push(col);
        }
        pivots.into_iter().zip(work).collect()
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        let mut basis = XorBasis::default();
        self.rows.iter().filter(|r| basis.insert(r.word())).count()
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_echelon_basis(&self) -> Vec<BitVector> {
        self.rref()
            .into_iter()
            .map(|(_, w)| BitVector::from_word_unchecked(self.cols, w))
            .collect()
    }

    /// Basis of `{x : row . x = 0 for every row}`, one vector per free column
    /// in ascending order.
    pub fn null_space_basis(&self) -> Vec<BitVector> {
        let rref = self.rref();
        let pivot_mask = rref.iter().fold(0u64, |m, (c, _)| m | 1 << c);
        (0..self.cols)
            .filter(|c| pivot_mask & (1 << c) == 0)
            .map(|free| {
                let word = rref
                    .iter()
                    .filter(|(_, row)| row & (1 << free) != 0)
                    .fold(1u64 << free, |w, (pc, _)| w | 1 << pc);
                BitVector::from_word_unchecked(self.cols, word)
            })
            .collect()
    }

    /// Greedy scan in row order: indices of the first maximal independent subset.
    pub fn independent_row_indices(&self) -> Vec<usize> {
        let mut basis = XorBasis::default();
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| basis.insert(r.word()))
            .map(|(i, _)| i)
            .collect()
    }
}

/// True iff `v` is a GF(2) combination of `basis`.
pub fn in_span(v: &BitVector, basis: &[BitVector]) -> Result<bool> {
    let mut reducer = XorBasis::default();
    for b in basis {
        if b.len() != v.len() {
            return Err(Error::LengthMismatch {
                expected: v.len(),
                got: b.len(),
            });
        }
        reducer.insert(b.word());
    }
    Ok(reducer.reduce(v.word()) == 0)
}

/// Incremental basis keyed by lowest set bit.
pub(crate) struct XorBasis {
    by_pivot: [u64; 64],
}

impl Default for XorBasis {
    fn default() -> Self {
        Self { by_pivot: [0; 64] }
    }
}

impl XorBasis {
    pub(crate) fn reduce(&self, mut v: u64) -> u64 {
        while v != 0 {
            let p = v.trailing_zeros() as usize;
            match self.by_pivot[p] {
                0 => return v,
                b => v ^= b,
            }
        }
        0
    }

    /// Inserts `v`; returns whether it was independent of the current basis.
    pub(crate) fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        self.by_pivot[r.trailing_zeros() as usize] = r;
        true
    }
}

/// Enumeration of the span of a generator list, split into independent
/// chunks. The top generators select the chunk offset; each chunk walks the
/// remaining generators in Gray-code order, so consecutive elements differ by
/// one generator.
#[derive(Clone, Debug)]
pub(crate) struct SpanChunks<'a> {
    low: &'a [u64],
    high: &'a [u64],
}

impl<'a> SpanChunks<'a> {
    const CHUNK_BITS: usize = 14;
    const MAX_SPLIT_BITS: usize = 12;

    pub(crate) fn new(generators: &'a [u64]) -> Self {
        let split = generators
            .len()
            .saturating_sub(Self::CHUNK_BITS)
            .min(Self::MAX_SPLIT_BITS);
        let (low, high) = generators.split_at(generators.len() - split);
        Self { low, high }
    }

    pub(crate) fn chunk_count(&self) -> usize {
        1 << self.high.len()
    }

    #[cfg(test)]
    pub(crate) fn chunk_len(&self) -> usize {
        1 << self.low.len()
    }

    /// Elements of chunk `index`, in Gray-code order.
    pub(crate) fn chunk(&self, index: usize) -> GrayWalk<'a> {
        let offset = self
            .high
            .iter()
            .enumerate()
            .filter(|(i, _)| index >> i & 1 == 1)
            .fold(0u64, |acc, (_, g)| acc ^ g);
        GrayWalk {
            gens: self.low,
            current: offset,
            step: 0,
            total: 1u64 << self.low.len(),
        }
    }
}

pub(crate) struct GrayWalk<'a> {
    gens: &'a [u64],
    current: u64,
    step: u64,
    total: u64,
}

impl Iterator for GrayWalk<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.step >= self.total {
            return None;
        }
        if self.step > 0 {
            self.current ^= self.gens[self.step.trailing_zeros() as usize];
        }
        self.step += 1;
        Some(self.current)
    }
}
