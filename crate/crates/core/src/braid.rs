//! Braid words, strongly quasipositive band words and their closures.

use crate::diagram::{Crossing, OrientedDiagram};
use crate::{ParseError, Permutation, Sign};
use std::fmt;
use std::str::FromStr;

/// A signed generator `σ_i^{±1}`, with `index` counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn positive(index: usize) -> Self {
        Letter { index, sign: Sign::Positive }
    }

    pub fn negative(index: usize) -> Self {
        Letter { index, sign: Sign::Negative }
    }

    pub fn inverse(self) -> Self {
        Letter { sign: self.sign.flip(), ..self }
    }

    fn signed_index(self) -> i64 {
        self.index as i64 * self.sign.value()
    }
}

/// A word in the braid group on `strands` strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

/// Cycle structure of the permutation induced by a braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureInfo {
    pub components: usize,
    /// 1-based strand positions, one vector per closure component.
    pub cycle_partition: Vec<Vec<usize>>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, ParseError> {
        if strands == 0 {
            return Err(ParseError::StrandCount(0));
        }
        if let Some(bad) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(ParseError::IndexOutOfRange { index: bad.signed_index(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices, `-2` meaning `σ_2^{-1}`.
    pub fn from_signed(strands: usize, word: &[i64]) -> Result<Self, ParseError> {
        let letters = word
            .iter()
            .map(|&w| signed_letter(w, strands))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.sign.value()).sum()
    }

    pub fn positive_letters(&self) -> usize {
        self.letters.iter().filter(|l| l.sign.is_positive()).count()
    }

    pub fn negative_letters(&self) -> usize {
        self.len() - self.positive_letters()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign.is_positive())
    }

    /// Flips every letter sign: a word for the mirror image of the closure.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// The word with every letter made positive.
    pub fn positive_part(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .map(|l| Letter::positive(l.index))
                .collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn power(&self, k: usize) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.repeat(k),
        }
    }

    /// Includes the word into the braid group on `strands + extra` strings.
    pub fn with_extra_strands(&self, extra: usize) -> BraidWord {
        BraidWord { strands: self.strands + extra, letters: self.letters.clone() }
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(
            letter.index >= 1 && letter.index < self.strands,
            "generator {} out of range for {} strands",
            letter.index,
            self.strands
        );
        self.letters.push(letter);
    }

    /// Positions are 0-based: strand starting at position `j` ends at `perm.apply(j)`.
    pub fn induced_permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.strands);
        for letter in &self.letters {
            perm.then_adjacent_swap(letter.index - 1);
        }
        perm
    }

    pub fn closure_components(&self) -> ClosureInfo {
        let cycles = self.induced_permutation().cycles();
        ClosureInfo {
            components: cycles.len(),
            cycle_partition: cycles
                .into_iter()
                .map(|c| c.into_iter().map(|x| x + 1).collect())
                .collect(),
        }
    }

    /// The standard closed-braid diagram.
    ///
    /// Strands run upward at positions `1..=n`, crossings are stacked in word
    /// order and every strand closes around the right-hand side. A letter of
    /// sign `ε` becomes a crossing of sign `ε`; a position touched by no
    /// letter becomes a free loop.
    pub fn closure_diagram(&self) -> OrientedDiagram {
        let n = self.strands;
        let mut current: Vec<usize> = (0..n).collect();
        let mut next_arc = n;
        let mut crossings = Vec::with_capacity(self.len());
        let mut touched = vec![false; n];
        for letter in &self.letters {
            let i = letter.index - 1;
            touched[i] = true;
            touched[i + 1] = true;
            let (in_left, in_right) = (current[i], current[i + 1]);
            let (out_left, out_right) = (next_arc, next_arc + 1);
            next_arc += 2;
            // Ports: the left strand runs SW -> NE, the right one SE -> NW.
            let crossing = match letter.sign {
                Sign::Positive => Crossing {
                    under_in: in_right,
                    over_in: in_left,
                    under_out: out_left,
                    over_out: out_right,
                    sign: Sign::Positive,
                },
                Sign::Negative => Crossing {
                    under_in: in_left,
                    over_in: in_right,
                    under_out: out_right,
                    over_out: out_left,
                    sign: Sign::Negative,
                },
            };
            crossings.push(crossing);
            current[i] = out_left;
            current[i + 1] = out_right;
        }
        // Close up: the arc leaving the top at position j is the arc entering at the bottom.
        let mut rename: Vec<usize> = (0..next_arc).collect();
        for j in 0..n {
            rename[current[j]] = j;
        }
        for c in &mut crossings {
            c.under_in = rename[c.under_in];
            c.over_in = rename[c.over_in];
            c.under_out = rename[c.under_out];
            c.over_out = rename[c.over_out];
        }
        let free_loops = touched.iter().filter(|t| !**t).count();
        OrientedDiagram::from_crossings(crossings, free_loops)
            .expect("closed braid diagrams are well formed")
    }
}

fn signed_letter(w: i64, strands: usize) -> Result<Letter, ParseError> {
    if w == 0 {
        return Err(ParseError::ZeroLetter);
    }
    let index = w.unsigned_abs() as usize;
    if index >= strands {
        return Err(ParseError::IndexOutOfRange { index: w, strands });
    }
    Ok(if w > 0 { Letter::positive(index) } else { Letter::negative(index) })
}

fn parse_header<'a>(text: &'a str, expected: &'static str) -> Result<(usize, &'a str), ParseError> {
    let header_error = || ParseError::Header { expected, found: text.trim().to_string() };
    let (head, body) = text.split_once(':').ok_or_else(header_error)?;
    let count = head.trim().strip_prefix('B').ok_or_else(header_error)?;
    let strands: i64 = count.trim().parse().map_err(|_| header_error())?;
    if strands < 1 {
        return Err(ParseError::StrandCount(strands));
    }
    Ok((strands as usize, body))
}

fn parse_int(token: &str) -> Result<i64, ParseError> {
    token
        .trim()
        .parse()
        .map_err(|_| ParseError::Integer(token.trim().to_string()))
}

impl FromStr for BraidWord {
    type Err = ParseError;

    /// Parses `B<n>: w1 w2 ...`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let (strands, body) = parse_header(text, "B<n>: w1 w2 ...")?;
        let word = body
            .split_whitespace()
            .map(parse_int)
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::from_signed(strands, &word)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for letter in &self.letters {
            write!(f, " {}", letter.signed_index())?;
        }
        Ok(())
    }
}

/// A product of band generators `σ_{i,j}`, `1 <= i < j <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BandWord {
    strands: usize,
    bands: Vec<(usize, usize)>,
}

impl BandWord {
    pub fn new(strands: usize, bands: Vec<(usize, usize)>) -> Result<Self, ParseError> {
        if strands == 0 {
            return Err(ParseError::StrandCount(0));
        }
        if let Some(&(i, j)) = bands.iter().find(|&&(i, j)| !(1 <= i && i < j && j <= strands)) {
            return Err(ParseError::BadBand { i: i as i64, j: j as i64, strands });
        }
        Ok(BandWord { strands, bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[(usize, usize)] {
        &self.bands
    }

    pub fn band_count(&self) -> usize {
        self.bands.len()
    }

    /// Expands every band as `(σ_{j-1} … σ_{i+1}) σ_i (σ_{i+1}^{-1} … σ_{j-1}^{-1})`.
    pub fn expand(&self) -> BraidWord {
        let mut letters = Vec::new();
        for &(i, j) in &self.bands {
            letters.extend((i + 1..j).rev().map(Letter::positive));
            letters.push(Letter::positive(i));
            letters.extend((i + 1..j).map(Letter::negative));
        }
        BraidWord { strands: self.strands, letters }
    }
}

impl FromStr for BandWord {
    type Err = ParseError;

    /// Parses `SQP B<n>: (i,j) (i,j) ...`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        const EXPECTED: &str = "SQP B<n>: (i,j) ...";
        let rest = text
            .trim_start()
            .strip_prefix("SQP")
            .ok_or_else(|| ParseError::Header { expected: EXPECTED, found: text.trim().to_string() })?;
        let (strands, body) = parse_header(rest, EXPECTED)?;
        let mut bands = Vec::new();
        let mut rest = body.trim_start();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .ok_or_else(|| ParseError::Token(rest.split_whitespace().next().unwrap_or("").to_string()))?;
            let close = inner
                .find(')')
                .ok_or_else(|| ParseError::Token(rest.to_string()))?;
            let (i, j) = inner[..close]
                .split_once(',')
                .ok_or_else(|| ParseError::Token(format!("({})", &inner[..close])))?;
            let (i, j) = (parse_int(i)?, parse_int(j)?);
            if !(1 <= i && i < j && j <= strands as i64) {
                return Err(ParseError::BadBand { i, j, strands });
            }
            bands.push((i as usize, j as usize));
            rest = inner[close + 1..].trim_start();
        }
        BandWord::new(strands, bands)
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SQP B{}:", self.strands)?;
        for (i, j) in &self.bands {
            write!(f, " ({i},{j})")?;
        }
        Ok(())
    }
}
