use std::fmt;

/// A generator or its inverse, packed as `2·generator + inverse`.
///
/// As a letter of a conjugator it stands for the right translation `∗s`
/// (or `∗̄s` when inverted).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u32);

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter((generator as u32) << 1 | inverse as u32)
    }

    pub fn generator(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// Column index used by enumeration tables.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Self {
        Letter(i as u32)
    }
}

/// Freely reduces `word` in place.
pub fn reduce(word: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word.iter() {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    *word = out;
}

pub fn inverse_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// Free reduction followed by cyclic reduction.
pub fn cyclically_reduce(word: &mut Vec<Letter>) {
    reduce(word);
    let mut start = 0;
    let mut end = word.len();
    while end - start >= 2 && word[start] == word[end - 1].inverse() {
        start += 1;
        end -= 1;
    }
    *word = word[start..end].to_vec();
}

/// An element `g⁻¹ s g` of the free quandle on the generators, in normal
/// form: `g` is freely reduced and does not start with `s` or `s⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeQuandleElement {
    base: usize,
    conjugator: Vec<Letter>,
}

impl FreeQuandleElement {
    pub fn generator(s: usize) -> Self {
        FreeQuandleElement {
            base: s,
            conjugator: Vec::new(),
        }
    }

    /// Normalizes an arbitrary conjugator word.
    pub fn new(base: usize, mut conjugator: Vec<Letter>) -> Self {
        reduce(&mut conjugator);
        let strip = conjugator
            .iter()
            .take_while(|l| l.generator() == base)
            .count();
        conjugator.drain(..strip);
        FreeQuandleElement { base, conjugator }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn conjugator(&self) -> &[Letter] {
        &self.conjugator
    }

    /// The conjugating word of the right translation by this element,
    /// `g⁻¹ s g`, read as a sequence of generator translations.
    pub fn translation_word(&self, inverse: bool) -> Vec<Letter> {
        let mut w = inverse_word(&self.conjugator);
        w.push(Letter::new(self.base, inverse));
        w.extend_from_slice(&self.conjugator);
        w
    }

    /// `self ∗ other` (or `self ∗̄ other` when `inverse`):
    /// `(g⁻¹sg) ∗ (h⁻¹th) = (g h⁻¹ t h)⁻¹ s (g h⁻¹ t h)`.
    pub fn op(&self, other: &FreeQuandleElement, inverse: bool) -> FreeQuandleElement {
        let mut g = self.conjugator.clone();
        g.extend(other.translation_word(inverse));
        FreeQuandleElement::new(self.base, g)
    }

    /// Right action by a single generator letter.
    pub fn act(&self, letter: Letter) -> FreeQuandleElement {
        let mut g = self.conjugator.clone();
        g.push(letter);
        FreeQuandleElement::new(self.base, g)
    }

    pub fn max_generator(&self) -> usize {
        self.conjugator
            .iter()
            .map(|l| l.generator())
            .chain([self.base])
            .max()
            .unwrap_or(0)
    }

    /// Renders as a left-nested DSL term, e.g. `a*c/a`.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayElement {
            element: self,
            names,
        }
    }
}

struct DisplayElement<'a> {
    element: &'a FreeQuandleElement,
    names: &'a [String],
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names[self.element.base])?;
        for l in &self.element.conjugator {
            write!(
                f,
                "{}{}",
                if l.is_inverse() { '/' } else { '*' },
                self.names[l.generator()]
            )?;
        }
        Ok(())
    }
}
