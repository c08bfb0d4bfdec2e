use std::fmt;

use super::word::FreeQuandleElement;

/// A quandle term over the generators of a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(usize),
    /// `lhs ∗ rhs`
    Star(Box<Term>, Box<Term>),
    /// `lhs ∗̄ rhs`
    Bar(Box<Term>, Box<Term>),
}

impl Term {
    pub fn star(lhs: Term, rhs: Term) -> Term {
        Term::Star(Box::new(lhs), Box::new(rhs))
    }

    pub fn bar(lhs: Term, rhs: Term) -> Term {
        Term::Bar(Box::new(lhs), Box::new(rhs))
    }

    /// `lhs ∗ⁿ rhs` (n-fold, left nested); `n = 0` returns `lhs`.
    pub fn star_pow(lhs: Term, rhs: &Term, n: usize) -> Term {
        (0..n).fold(lhs, |acc, _| Term::star(acc, rhs.clone()))
    }

    pub fn bar_pow(lhs: Term, rhs: &Term, n: usize) -> Term {
        (0..n).fold(lhs, |acc, _| Term::bar(acc, rhs.clone()))
    }

    /// Normal form in the free quandle.
    pub fn to_element(&self) -> FreeQuandleElement {
        match self {
            Term::Gen(s) => FreeQuandleElement::generator(*s),
            Term::Star(a, b) => a.to_element().op(&b.to_element(), false),
            Term::Bar(a, b) => a.to_element().op(&b.to_element(), true),
        }
    }

    /// Left-nested term equal to a free quandle element.
    pub fn from_element(x: &FreeQuandleElement) -> Term {
        x.conjugator().iter().fold(Term::Gen(x.base()), |acc, l| {
            let g = Term::Gen(l.generator());
            if l.is_inverse() {
                Term::bar(acc, g)
            } else {
                Term::star(acc, g)
            }
        })
    }

    pub fn mentions(&self, generator: usize) -> bool {
        match self {
            Term::Gen(s) => *s == generator,
            Term::Star(a, b) | Term::Bar(a, b) => a.mentions(generator) || b.mentions(generator),
        }
    }

    pub fn max_generator(&self) -> usize {
        match self {
            Term::Gen(s) => *s,
            Term::Star(a, b) | Term::Bar(a, b) => a.max_generator().max(b.max_generator()),
        }
    }

    /// Replaces every occurrence of `generator` by `replacement`.
    pub fn substitute(&self, generator: usize, replacement: &Term) -> Term {
        match self {
            Term::Gen(s) if *s == generator => replacement.clone(),
            Term::Gen(_) => self.clone(),
            Term::Star(a, b) => Term::star(
                a.substitute(generator, replacement),
                b.substitute(generator, replacement),
            ),
            Term::Bar(a, b) => Term::bar(
                a.substitute(generator, replacement),
                b.substitute(generator, replacement),
            ),
        }
    }

    /// Renumbers generators through `f`.
    pub fn map_generators(&self, f: &impl Fn(usize) -> usize) -> Term {
        match self {
            Term::Gen(s) => Term::Gen(f(*s)),
            Term::Star(a, b) => Term::star(a.map_generators(f), b.map_generators(f)),
            Term::Bar(a, b) => Term::bar(a.map_generators(f), b.map_generators(f)),
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayTerm { term: self, names }
    }
}

struct DisplayTerm<'a> {
    term: &'a Term,
    names: &'a [String],
}

impl fmt::Display for DisplayTerm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, op) = match self.term {
            Term::Gen(s) => return write!(f, "{}", self.names[*s]),
            Term::Star(a, b) => (a, b, '*'),
            Term::Bar(a, b) => (a, b, '/'),
        };
        write!(f, "{}{}", a.display(self.names), op)?;
        match **b {
            Term::Gen(_) => write!(f, "{}", b.display(self.names)),
            _ => write!(f, "({})", b.display(self.names)),
        }
    }
}

/// One relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub lhs: Term,
    pub rhs: Term,
}

impl Relation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Relation { lhs, rhs }
    }

    pub fn mentions(&self, generator: usize) -> bool {
        self.lhs.mentions(generator) || self.rhs.mentions(generator)
    }
}

/// A finite quandle presentation `⟨S | R⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relations: Vec<Relation>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("relation {relation} refers to generator index {index}, but only {count} exist")]
    UnknownGenerator {
        relation: usize,
        index: usize,
        count: usize,
    },
}

impl Presentation {
    pub fn new(
        generators: Vec<String>,
        relations: Vec<Relation>,
    ) -> Result<Self, PresentationError> {
        if generators.is_empty() {
            return Err(PresentationError::NoGenerators);
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        for (relation, r) in relations.iter().enumerate() {
            let index = r.lhs.max_generator().max(r.rhs.max_generator());
            if index >= generators.len() {
                return Err(PresentationError::UnknownGenerator {
                    relation,
                    index,
                    count: generators.len(),
                });
            }
        }
        Ok(Presentation {
            generators,
            relations,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Relations as pairs of free quandle normal forms.
    pub fn relation_elements(&self) -> Vec<(FreeQuandleElement, FreeQuandleElement)> {
        self.relations
            .iter()
            .map(|r| (r.lhs.to_element(), r.rhs.to_element()))
            .collect()
    }

    pub fn with_relation(&self, relation: Relation) -> Result<Self, PresentationError> {
        let mut relations = self.relations.clone();
        relations.push(relation);
        Presentation::new(self.generators.clone(), relations)
    }

    pub fn without_relation(&self, index: usize) -> Self {
        let mut relations = self.relations.clone();
        relations.remove(index);
        Presentation {
            generators: self.generators.clone(),
            relations,
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} |", self.generators.join(", "))?;
        for (i, r) in self.relations.iter().enumerate() {
            write!(
                f,
                "{} {} = {}",
                if i > 0 { "," } else { "" },
                r.lhs.display(&self.generators),
                r.rhs.display(&self.generators)
            )?;
        }
        write!(f, " >")
    }
}
