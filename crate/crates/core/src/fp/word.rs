use std::fmt;

/// A word in the free group: letter `k > 0` is generator `k - 1`, `-k` its inverse.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn gen(i: usize) -> Self {
        Word { letters: vec![i as i32 + 1] }
    }

    /// Builds a word from 0-based generator indices (all positive letters).
    pub fn from_gens(gens: &[usize]) -> Self {
        Word { letters: gens.iter().map(|&i| i as i32 + 1).collect() }
    }

    pub fn from_letters(letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&l| l != 0));
        Word { letters }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.unsigned_abs() as usize - 1).max()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word { letters }
    }

    /// `x^-1 y^-1 x y`.
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.inverse().concat(&y.inverse()).concat(x).concat(y)
    }

    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Renames letters through `map` (indexed by generator), keeping signs.
    pub fn rename(&self, map: &[usize]) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .map(|&l| {
                    let g = map[l.unsigned_abs() as usize - 1] as i32 + 1;
                    if l > 0 {
                        g
                    } else {
                        -g
                    }
                })
                .collect(),
        }
    }

    /// Evaluates the word with `images[i]` for generator `i`.
    pub fn eval<T: Clone>(&self, images: &[T], identity: T, mul: impl Fn(&T, &T) -> T, inv: impl Fn(&T) -> T) -> T {
        let mut acc = identity;
        for &l in &self.letters {
            let g = &images[l.unsigned_abs() as usize - 1];
            acc = if l > 0 { mul(&acc, g) } else { mul(&acc, &inv(g)) };
        }
        acc
    }

    /// Prints the word as a product of generator names, grouping runs as powers.
    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = &self.word.letters;
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.names[l.unsigned_abs() as usize - 1])?;
            let exp = if l > 0 { run as i64 } else { -(run as i64) };
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let w = Word::from_letters(vec![1, 2, -2, -1, 3]);
        assert_eq!(w.free_reduce(), Word::from_letters(vec![3]));
        let x = Word::gen(0);
        assert!(x.concat(&x.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn commutator_shape() {
        let c = Word::commutator(&Word::gen(0), &Word::gen(1));
        assert_eq!(c.letters(), &[-1, -2, 1, 2]);
    }

    #[test]
    fn display_groups_runs() {
        let names = vec!["x".to_string(), "y".to_string()];
        let w = Word::from_letters(vec![1, 1, 2, -1]);
        assert_eq!(w.display(&names).to_string(), "x^2*y*x^-1");
        assert_eq!(Word::empty().display(&names).to_string(), "1");
    }
}
