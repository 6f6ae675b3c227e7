use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
pub struct Tagged {
    pub tag: String,
    pub poly: Polynomial,
}

/// Named, ordered list of tagged polynomials standing for an ideal.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub name: String,
    pub ring: Ring,
    pub elements: Vec<Tagged>,
    tags: HashSet<String>,
}

impl GeneratorSet {
    pub fn new(name: impl Into<String>, ring: Ring) -> Self {
        GeneratorSet {
            name: name.into(),
            ring,
            elements: Vec::new(),
            tags: HashSet::new(),
        }
    }

    /// Appends `poly` under `tag`. Zero polynomials are dropped; a repeated
    /// tag is an error.
    pub fn push(&mut self, tag: impl Into<String>, poly: Polynomial) -> Result<bool> {
        let tag = tag.into();
        if self.tags.contains(&tag) {
            return Err(Error::MalformedIndices(format!("duplicate tag {tag}")));
        }
        if poly.is_zero() {
            return Ok(false);
        }
        self.tags.insert(tag.clone());
        self.elements.push(Tagged { tag, poly });
        Ok(true)
    }

    pub fn extend(&mut self, other: GeneratorSet) -> Result<()> {
        for t in other.elements {
            self.push(t.tag, t.poly)?;
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn polys(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|t| t.poly.clone()).collect()
    }

    pub fn get(&self, tag: &str) -> Option<&Polynomial> {
        self.elements.iter().find(|t| t.tag == tag).map(|t| &t.poly)
    }

    /// Number of elements whose tag starts with `prefix`.
    pub fn count_prefix(&self, prefix: &str) -> usize {
        self.elements.iter().filter(|t| t.tag.starts_with(prefix)).count()
    }

    /// One `tag: polynomial` line per element.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.elements {
            writeln!(out, "{}: {}", t.tag, self.ring.fmt_poly(&t.poly)).unwrap();
        }
        out
    }
}
