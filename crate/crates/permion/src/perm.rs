//! Permutations of `{1..n}`, cycle notation, and the group structure of `S_n`.
//!
//! Composition is right-to-left: `(a * b)(i) = a(b(i))`, so in a product the
//! right factor acts first. Points are 1-based at every interface, matching
//! cycle notation like `(134)(25)`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::caps;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PermError {
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("images do not form a permutation of 1..={0}")]
    NotBijective(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeOutOfRange { degree: usize, cap: usize },
    #[error("ordering is not a complete enumeration of the group")]
    IncompleteOrdering,
    #[error("empty generating set has no degree; pass the identity instead")]
    EmptyGenerators,
}

/// A bijection on `{1..n}` stored in one-line form: `images[i-1] = sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its one-line form (1-based images).
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(PermError::NotBijective(n));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    /// Right-to-left composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        let images = (1..=self.degree())
            .map(|i| self.apply(other.apply(i)))
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Permutation { images }
    }

    /// +1 for even permutations, -1 for odd, via `(-1)^(n - #cycles)`.
    pub fn sign(&self) -> i64 {
        let cycles = self.cycle_type().parts().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiset of orbit lengths, fixed points included, sorted descending.
    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.orbits().iter().map(|c| c.len()).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    /// Disjoint orbits, each starting at its smallest point, ordered by
    /// smallest point. Fixed points appear as singleton orbits.
    fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start - 1] = true;
            let mut point = self.apply(start);
            while point != start {
                seen[point - 1] = true;
                orbit.push(point);
                point = self.apply(point);
            }
            orbits.push(orbit);
        }
        orbits
    }
}

/// Parses cycle notation over points `1..=n`.
///
/// Grammar: `perm := "e" | cycle+ ; cycle := "(" point ("," point)* ")"`.
/// Single-digit points may be juxtaposed (`(134)`); multi-digit points
/// require commas (`(1,13)`). Whitespace between tokens is ignored; the
/// empty string and `e` both denote the identity. Points absent from every
/// cycle are fixed.
pub fn parse_cycles(text: &str, n: usize) -> Result<Permutation, PermError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || compact == "e" {
        return Ok(Permutation::identity(n));
    }
    let mut images: Vec<usize> = (1..=n).collect();
    let mut used = vec![false; n];
    let mut rest = compact.as_str();
    while !rest.is_empty() {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(PermError::Malformed(text.to_string()));
        };
        let Some(close) = stripped.find(')') else {
            return Err(PermError::Malformed(text.to_string()));
        };
        let body = &stripped[..close];
        rest = &stripped[close + 1..];
        let points = parse_cycle_body(body, text)?;
        for &p in &points {
            if p == 0 || p > n {
                return Err(PermError::PointOutOfRange { point: p, degree: n });
            }
            if used[p - 1] {
                return Err(PermError::RepeatedPoint(p));
            }
            used[p - 1] = true;
        }
        for (i, &p) in points.iter().enumerate() {
            images[p - 1] = points[(i + 1) % points.len()];
        }
    }
    Ok(Permutation { images })
}

fn parse_cycle_body(body: &str, original: &str) -> Result<Vec<usize>, PermError> {
    if body.is_empty() {
        return Err(PermError::Malformed(original.to_string()));
    }
    if body.contains(',') {
        body.split(',')
            .map(|tok| {
                if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                    Err(PermError::Malformed(original.to_string()))
                } else {
                    tok.parse()
                        .map_err(|_| PermError::Malformed(original.to_string()))
                }
            })
            .collect()
    } else {
        body.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| PermError::Malformed(original.to_string()))
            })
            .collect()
    }
}

/// Canonical cycle notation: each cycle starts at its smallest point, cycles
/// are ordered by smallest point, fixed points are omitted, the identity
/// prints as `e`. Points above 9 force the comma form so the output stays
/// parseable.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles: Vec<Vec<usize>> = p.orbits().into_iter().filter(|c| c.len() > 1).collect();
    if cycles.is_empty() {
        return "e".to_string();
    }
    let mut out = String::new();
    for cycle in cycles {
        out.push('(');
        let commas = cycle.iter().any(|&p| p > 9);
        for (i, point) in cycle.iter().enumerate() {
            if commas && i > 0 {
                out.push(',');
            }
            out.push_str(&point.to_string());
        }
        out.push(')');
    }
    out
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_cycles(self))
    }
}

/// Weakly decreasing orbit lengths summing to the degree. Labels a conjugacy
/// class of `S_n`, equivalently a Young frame.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, part) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{part}")?;
        }
        write!(f, "]")
    }
}

/// All `n!` elements of `S_n` in lexicographic order of one-line form.
/// The identity comes first.
pub fn enumerate_group(n: usize) -> Result<Vec<Permutation>, PermError> {
    let cap = caps::effective(caps::MAX_ENUMERATE_N);
    if n == 0 || n > cap {
        return Err(PermError::DegreeOutOfRange { degree: n, cap });
    }
    let mut elements = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        elements.push(Permutation {
            images: images.clone(),
        });
        if !next_lex(&mut images) {
            break;
        }
    }
    Ok(elements)
}

fn next_lex(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| seq[i] < seq[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| seq[j] > seq[i]).unwrap();
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

/// Closure of a generating set under composition; contains the identity.
pub fn generate_from(gens: &[Permutation]) -> Result<BTreeSet<Permutation>, PermError> {
    let Some(first) = gens.first() else {
        return Err(PermError::EmptyGenerators);
    };
    let n = first.degree();
    for g in gens {
        if g.degree() != n {
            return Err(PermError::DegreeMismatch(n, g.degree()));
        }
    }
    let mut set = BTreeSet::new();
    let mut queue = VecDeque::new();
    set.insert(Permutation::identity(n));
    queue.push_back(Permutation::identity(n));
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let next = g.compose(&p)?;
            if set.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(set)
}

/// Group multiplication table: `table[i][j]` indexes `elements[i] * elements[j]`.
#[derive(Debug, Clone)]
pub struct MultiplicationTable {
    pub elements: Vec<Permutation>,
    pub table: Vec<Vec<usize>>,
}

/// Multiplication table of `S_n` over the `enumerate_group` ordering.
pub fn multiplication_table(n: usize) -> Result<MultiplicationTable, PermError> {
    let cap = caps::effective(caps::MAX_TABLE_N);
    if n == 0 || n > cap {
        return Err(PermError::DegreeOutOfRange { degree: n, cap });
    }
    let elements = enumerate_group(n)?;
    let index: BTreeMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let table = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index[&a.compose(b).expect("equal degrees")])
                .collect()
        })
        .collect();
    Ok(MultiplicationTable { elements, table })
}

/// Conjugacy classes of `S_n`, keyed by cycle type.
pub fn conjugacy_classes(
    n: usize,
) -> Result<BTreeMap<CycleType, Vec<Permutation>>, PermError> {
    let cap = caps::effective(caps::MAX_CLASSES_N);
    if n == 0 || n > cap {
        return Err(PermError::DegreeOutOfRange { degree: n, cap });
    }
    let mut classes: BTreeMap<CycleType, Vec<Permutation>> = BTreeMap::new();
    for p in enumerate_group(n)? {
        classes.entry(p.cycle_type()).or_default().push(p);
    }
    Ok(classes)
}
