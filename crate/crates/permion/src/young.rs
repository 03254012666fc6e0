//! Partitions, standard Young tableaux, and the rational group algebra.
//!
//! A tableau is translated into its Young operator by antisymmetrizing the
//! columns and symmetrizing the rows. The operator order follows the worked
//! `[2,1]` example, `(e - (13))(e + (12))`: the column antisymmetrizer is the
//! left factor. Squaring a Young operator always gives back a rational
//! multiple of itself; `verify_idempotent` measures the constant by brute
//! force rather than assuming `n!/d`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::caps;
use crate::linalg::{rat, Matrix, Rational};
use crate::perm::{PermError, Permutation};
use crate::repr::{Representation, ReprError};

#[derive(Debug, thiserror::Error)]
pub enum YoungError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Repr(#[from] ReprError),
    #[error("rows must be weakly decreasing positive integers: {0:?}")]
    BadFrame(Vec<usize>),
    #[error("size {n} exceeds cap {cap}")]
    SizeOutOfRange { n: usize, cap: usize },
    #[error("filling is not a bijection onto 1..={0}")]
    BadFilling(usize),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("tableaux have different frames")]
    FrameMismatch,
    #[error("group algebra degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A partition of `n` drawn as left-justified rows of boxes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungFrame {
    rows: Vec<usize>,
}

impl YoungFrame {
    pub fn new(rows: Vec<usize>) -> Result<Self, YoungError> {
        if rows.is_empty()
            || rows.contains(&0)
            || rows.windows(2).any(|w| w[0] < w[1])
        {
            return Err(YoungError::BadFrame(rows));
        }
        Ok(YoungFrame { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn column_heights(&self) -> Vec<usize> {
        let width = self.rows[0];
        (0..width)
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect()
    }
}

impl fmt::Display for YoungFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A frame filled with `1..n`, each number used once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungTableau {
    frame: YoungFrame,
    filling: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(filling: Vec<Vec<usize>>) -> Result<Self, YoungError> {
        let frame = YoungFrame::new(filling.iter().map(|r| r.len()).collect())?;
        let n = frame.size();
        let mut seen = vec![false; n];
        for &v in filling.iter().flatten() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(YoungError::BadFilling(n));
            }
            seen[v - 1] = true;
        }
        Ok(YoungTableau { frame, filling })
    }

    pub fn frame(&self) -> &YoungFrame {
        &self.frame
    }

    pub fn filling(&self) -> &[Vec<usize>] {
        &self.filling
    }

    pub fn size(&self) -> usize {
        self.frame.size()
    }

    /// Rows strictly increase left to right and columns strictly increase
    /// top to bottom.
    pub fn is_standard(&self) -> bool {
        for row in &self.filling {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
        }
        for r in 1..self.filling.len() {
            for c in 0..self.filling[r].len() {
                if self.filling[r - 1][c] >= self.filling[r][c] {
                    return false;
                }
            }
        }
        true
    }

    /// Entries of the `c`-th column, top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.filling
            .iter()
            .filter_map(|row| row.get(c).copied())
            .collect()
    }

    /// Row-reading word: rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.filling.iter().flatten().copied().collect()
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .filling
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

/// All partitions of `n` in reverse-lexicographic order: `[n]` first,
/// `[1,1,...,1]` last.
pub fn partitions(n: usize) -> Result<Vec<YoungFrame>, YoungError> {
    let cap = caps::effective(caps::MAX_PARTITIONS_N);
    if n == 0 || n > cap {
        return Err(YoungError::SizeOutOfRange { n, cap });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<YoungFrame>) {
        if remaining == 0 {
            out.push(YoungFrame {
                rows: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            recurse(remaining - part, part, current, out);
            current.pop();
        }
    }
    recurse(n, n, &mut current, &mut out);
    Ok(out)
}

/// All standard tableaux of a frame, in row-reading lexicographic order.
pub fn standard_tableaux(frame: &YoungFrame) -> Result<Vec<YoungTableau>, YoungError> {
    let n = frame.size();
    let cap = caps::effective(caps::MAX_TABLEAUX_N);
    if n > cap {
        return Err(YoungError::SizeOutOfRange { n, cap });
    }
    let rows = frame.rows().to_vec();
    let mut filled: Vec<Vec<usize>> = rows.iter().map(|&r| Vec::with_capacity(r)).collect();
    let mut out = Vec::new();
    fn place(
        k: usize,
        n: usize,
        rows: &[usize],
        filled: &mut Vec<Vec<usize>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if k > n {
            out.push(YoungTableau {
                frame: YoungFrame {
                    rows: rows.to_vec(),
                },
                filling: filled.clone(),
            });
            return;
        }
        for r in 0..rows.len() {
            let len = filled[r].len();
            // next free box in row r must exist and sit under a filled box
            if len < rows[r] && (r == 0 || filled[r - 1].len() > len) {
                filled[r].push(k);
                place(k + 1, n, rows, filled, out);
                filled[r].pop();
            }
        }
    }
    place(1, n, &rows, &mut filled, &mut out);
    out.sort_by_key(|t| t.reading_word());
    Ok(out)
}

/// Hook-length count of standard tableaux: `n! / prod(hooks)`. Independent
/// of the enumeration in `standard_tableaux`, which it cross-checks.
pub fn tableau_count_hook(frame: &YoungFrame) -> Result<u64, YoungError> {
    let n = frame.size();
    let cap = caps::effective(caps::MAX_PARTITIONS_N);
    if n > cap {
        return Err(YoungError::SizeOutOfRange { n, cap });
    }
    let rows = frame.rows();
    let heights = frame.column_heights();
    let numerator: u64 = (1..=n as u64).product();
    let mut hook_product: u64 = 1;
    for (r, &len) in rows.iter().enumerate() {
        for (c, &height) in heights.iter().take(len).enumerate() {
            let hook = (len - c) + (height - r) - 1;
            hook_product *= hook as u64;
        }
    }
    Ok(numerator / hook_product)
}

/// A finite formal sum of permutations with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(degree: usize) -> Self {
        GroupAlgebraElement::from_terms(
            degree,
            [(Permutation::identity(degree), Rational::one())],
        )
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Permutation, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Permutation, Rational> = BTreeMap::new();
        for (p, c) in terms {
            assert_eq!(p.degree(), degree, "term degree mismatch");
            let entry = map.entry(p).or_insert_with(Rational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        GroupAlgebraElement { degree, terms: map }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return GroupAlgebraElement::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p.clone(), c * factor))
                .collect(),
        }
    }
}

/// Convolution product: the bilinear extension of group composition.
pub fn ga_multiply(
    a: &GroupAlgebraElement,
    b: &GroupAlgebraElement,
) -> Result<GroupAlgebraElement, YoungError> {
    if a.degree != b.degree {
        return Err(YoungError::DegreeMismatch(a.degree, b.degree));
    }
    let mut terms: BTreeMap<Permutation, Rational> = BTreeMap::new();
    for (p, cp) in &a.terms {
        for (q, cq) in &b.terms {
            let product = p.compose(q)?;
            let entry = terms.entry(product).or_insert_with(Rational::zero);
            *entry += cp * cq;
        }
    }
    terms.retain(|_, c| !c.is_zero());
    Ok(GroupAlgebraElement {
        degree: a.degree,
        terms,
    })
}

/// Sum over all permutations of a set of points (moving only those points),
/// weighted by `weight`.
fn set_symmetrizer(
    degree: usize,
    points: &[usize],
    signed: bool,
) -> GroupAlgebraElement {
    let mut terms = Vec::new();
    let mut arrangement: Vec<usize> = points.to_vec();
    permute_collect(degree, points, &mut arrangement, 0, signed, &mut terms);
    GroupAlgebraElement::from_terms(degree, terms)
}

fn permute_collect(
    degree: usize,
    points: &[usize],
    arrangement: &mut Vec<usize>,
    k: usize,
    signed: bool,
    terms: &mut Vec<(Permutation, Rational)>,
) {
    if k == points.len() {
        let mut images: Vec<usize> = (1..=degree).collect();
        for (slot, &target) in points.iter().zip(arrangement.iter()) {
            images[slot - 1] = target;
        }
        let p = Permutation::from_images(images).expect("bijective by construction");
        let coeff = if signed { rat(p.sign()) } else { rat(1) };
        terms.push((p, coeff));
        return;
    }
    for i in k..arrangement.len() {
        arrangement.swap(k, i);
        permute_collect(degree, points, arrangement, k + 1, signed, terms);
        arrangement.swap(k, i);
    }
}

/// Product over rows of the symmetrizer of each row's entries.
pub fn row_symmetrizer(t: &YoungTableau) -> Result<GroupAlgebraElement, YoungError> {
    let n = t.size();
    let mut acc = GroupAlgebraElement::identity(n);
    for row in t.filling() {
        acc = ga_multiply(&acc, &set_symmetrizer(n, row, false))?;
    }
    Ok(acc)
}

/// Product over columns of the sign-weighted symmetrizer of each column.
pub fn col_antisymmetrizer(t: &YoungTableau) -> Result<GroupAlgebraElement, YoungError> {
    let n = t.size();
    let width = t.frame().rows()[0];
    let mut acc = GroupAlgebraElement::identity(n);
    for c in 0..width {
        acc = ga_multiply(&acc, &set_symmetrizer(n, &t.column(c), true))?;
    }
    Ok(acc)
}

/// Young operator of a standard tableau: column antisymmetrizer times row
/// symmetrizer, matching the expanded `(e - (13))(e + (12))` example.
pub fn young_operator(t: &YoungTableau) -> Result<GroupAlgebraElement, YoungError> {
    if !t.is_standard() {
        return Err(YoungError::NotStandard);
    }
    ga_multiply(&col_antisymmetrizer(t)?, &row_symmetrizer(t)?)
}

/// Result of the brute-force proportionality check `x^2 = c x`.
#[derive(Debug, Clone)]
pub struct IdempotentReport {
    pub is_proportional: bool,
    pub constant: Option<Rational>,
}

/// Squares `x` exactly and reports whether `x^2 = c x` for a single rational
/// `c`, and that `c`.
pub fn verify_idempotent(x: &GroupAlgebraElement) -> Result<IdempotentReport, YoungError> {
    let square = ga_multiply(x, x)?;
    if x.is_zero() {
        return Ok(IdempotentReport {
            is_proportional: square.is_zero(),
            constant: None,
        });
    }
    let (witness, coeff) = x.terms.iter().next().expect("nonzero");
    let c = square.coefficient(witness) / coeff;
    if square == x.scale(&c) {
        Ok(IdempotentReport {
            is_proportional: true,
            constant: Some(c),
        })
    } else {
        Ok(IdempotentReport {
            is_proportional: false,
            constant: None,
        })
    }
}

/// The unique permutation carrying `tb`'s filling box-by-box onto `ta`'s:
/// it sends the entry of `tb` in each box to the entry of `ta` in that box.
pub fn transfer_permutation(
    ta: &YoungTableau,
    tb: &YoungTableau,
) -> Result<Permutation, YoungError> {
    if ta.frame() != tb.frame() {
        return Err(YoungError::FrameMismatch);
    }
    let n = ta.size();
    let mut images = vec![0; n];
    for (row_a, row_b) in ta.filling().iter().zip(tb.filling()) {
        for (&a, &b) in row_a.iter().zip(row_b) {
            images[b - 1] = a;
        }
    }
    Ok(Permutation::from_images(images).expect("bijective by construction"))
}

/// Realizes a group-algebra element inside a representation:
/// the coefficient-weighted sum of representation matrices.
pub fn ga_to_matrix(
    x: &GroupAlgebraElement,
    r: &Representation,
) -> Result<Matrix, YoungError> {
    if x.degree != r.group_degree {
        return Err(YoungError::DegreeMismatch(x.degree, r.group_degree));
    }
    let mut sum = Matrix::zeros(r.dim, r.dim);
    for (p, c) in &x.terms {
        let m = r
            .matrix(p)
            .ok_or(YoungError::DegreeMismatch(x.degree, r.group_degree))?;
        sum = sum.add(&m.scale(c)).map_err(ReprError::from)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;
    use crate::perm::{enumerate_group, parse_cycles};
    use crate::repr::{natural_rep, regular_rep, s3_example_ordering, symmetrizer_image};

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    fn tab(rows: &[&[usize]]) -> YoungTableau {
        YoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn partitions_order_and_counts() {
        let parts3 = partitions(3).unwrap();
        let rows: Vec<Vec<usize>> = parts3.iter().map(|f| f.rows().to_vec()).collect();
        assert_eq!(rows, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(1).unwrap().len(), 1);
        assert_eq!(partitions(5).unwrap().len(), 7);
        assert!(YoungFrame::new(vec![1, 2]).is_err());
        assert!(YoungFrame::new(vec![2, 0]).is_err());
    }

    #[test]
    fn standard_tableaux_cases() {
        let frame21 = YoungFrame::new(vec![2, 1]).unwrap();
        let ts = standard_tableaux(&frame21).unwrap();
        assert_eq!(ts, vec![tab(&[&[1, 2], &[3]]), tab(&[&[1, 3], &[2]])]);
        let frame3 = YoungFrame::new(vec![3]).unwrap();
        assert_eq!(
            standard_tableaux(&frame3).unwrap(),
            vec![tab(&[&[1, 2, 3]])]
        );
        let frame22 = YoungFrame::new(vec![2, 2]).unwrap();
        assert_eq!(standard_tableaux(&frame22).unwrap().len(), 2);
    }

    #[test]
    fn hook_counts() {
        let count = |rows: Vec<usize>| tableau_count_hook(&YoungFrame::new(rows).unwrap()).unwrap();
        assert_eq!(count(vec![2, 1]), 2);
        assert_eq!(count(vec![1, 1, 1]), 1);
        assert_eq!(count(vec![3, 2]), 5);
    }

    #[test]
    fn hook_matches_enumeration() {
        for n in 1..=8 {
            for frame in partitions(n).unwrap() {
                let enumerated = standard_tableaux(&frame).unwrap().len() as u64;
                assert_eq!(enumerated, tableau_count_hook(&frame).unwrap(), "{frame}");
            }
        }
    }

    #[test]
    fn ga_multiply_cases() {
        let e12 = GroupAlgebraElement::from_terms(
            3,
            [(p("e", 3), rat(1)), (p("(12)", 3), rat(1))],
        );
        let square = ga_multiply(&e12, &e12).unwrap();
        assert_eq!(square.coefficient(&p("e", 3)), rat(2));
        assert_eq!(square.coefficient(&p("(12)", 3)), rat(2));
        let left = GroupAlgebraElement::from_terms(
            3,
            [(p("e", 3), rat(1)), (p("(13)", 3), rat(-1))],
        );
        let product = ga_multiply(&left, &e12).unwrap();
        assert_eq!(product.coefficient(&p("e", 3)), rat(1));
        assert_eq!(product.coefficient(&p("(12)", 3)), rat(1));
        assert_eq!(product.coefficient(&p("(13)", 3)), rat(-1));
        let t1312 = p("(13)", 3).compose(&p("(12)", 3)).unwrap();
        assert_eq!(product.coefficient(&t1312), rat(-1));
        let x = GroupAlgebraElement::from_terms(3, [(p("(123)", 3), ratio(2, 3))]);
        assert_eq!(
            ga_multiply(&GroupAlgebraElement::identity(3), &x).unwrap(),
            x
        );
    }

    #[test]
    fn row_and_column_operators() {
        let t = tab(&[&[1, 2], &[3]]);
        let s = row_symmetrizer(&t).unwrap();
        assert_eq!(s.terms().len(), 2);
        assert_eq!(s.coefficient(&p("e", 3)), rat(1));
        assert_eq!(s.coefficient(&p("(12)", 3)), rat(1));
        let a = col_antisymmetrizer(&t).unwrap();
        assert_eq!(a.coefficient(&p("e", 3)), rat(1));
        assert_eq!(a.coefficient(&p("(13)", 3)), rat(-1));
        // single row / single column degenerate cases
        let full_row = row_symmetrizer(&tab(&[&[1, 2, 3]])).unwrap();
        assert_eq!(full_row.terms().len(), 6);
        assert!(full_row.terms().values().all(|c| *c == rat(1)));
        let col = col_antisymmetrizer(&tab(&[&[1], &[2], &[3]])).unwrap();
        for g in enumerate_group(3).unwrap() {
            assert_eq!(col.coefficient(&g), rat(g.sign()));
        }
        assert_eq!(
            row_symmetrizer(&tab(&[&[1], &[2], &[3]])).unwrap(),
            GroupAlgebraElement::identity(3)
        );
        assert_eq!(
            col_antisymmetrizer(&tab(&[&[1, 2, 3]])).unwrap(),
            GroupAlgebraElement::identity(3)
        );
    }

    #[test]
    fn young_operator_examples() {
        let e = young_operator(&tab(&[&[1, 2], &[3]])).unwrap();
        let t1312 = p("(13)", 3).compose(&p("(12)", 3)).unwrap();
        assert_eq!(e.terms().len(), 4);
        assert_eq!(e.coefficient(&p("e", 3)), rat(1));
        assert_eq!(e.coefficient(&p("(12)", 3)), rat(1));
        assert_eq!(e.coefficient(&p("(13)", 3)), rat(-1));
        assert_eq!(e.coefficient(&t1312), rat(-1));
        // single-row frame gives the full symmetrizer, single-column the
        // full antisymmetrizer
        let sym = young_operator(&tab(&[&[1, 2, 3]])).unwrap();
        assert!(sym.terms().values().all(|c| *c == rat(1)));
        assert_eq!(sym.terms().len(), 6);
        let asym = young_operator(&tab(&[&[1], &[2], &[3]])).unwrap();
        for g in enumerate_group(3).unwrap() {
            assert_eq!(asym.coefficient(&g), rat(g.sign()));
        }
        // non-standard tableau rejected
        assert!(matches!(
            young_operator(&tab(&[&[2, 1], &[3]])),
            Err(YoungError::NotStandard)
        ));
    }

    #[test]
    fn idempotency_constants() {
        let sym = young_operator(&tab(&[&[1, 2, 3]])).unwrap();
        let report = verify_idempotent(&sym).unwrap();
        assert!(report.is_proportional);
        assert_eq!(report.constant, Some(rat(6)));
        let asym = young_operator(&tab(&[&[1], &[2], &[3]])).unwrap();
        assert_eq!(verify_idempotent(&asym).unwrap().constant, Some(rat(6)));
        let mixed = young_operator(&tab(&[&[1, 2], &[3]])).unwrap();
        assert_eq!(verify_idempotent(&mixed).unwrap().constant, Some(rat(3)));
        // a non-projector element is reported, not errored
        let x = GroupAlgebraElement::from_terms(
            3,
            [(p("e", 3), rat(1)), (p("(123)", 3), rat(1))],
        );
        assert!(!verify_idempotent(&x).unwrap().is_proportional);
    }

    #[test]
    fn transfer_permutations() {
        let ta = tab(&[&[1, 2], &[3]]);
        let tb = tab(&[&[1, 3], &[2]]);
        assert_eq!(transfer_permutation(&ta, &ta).unwrap(), p("e", 3));
        assert_eq!(transfer_permutation(&ta, &tb).unwrap(), p("(23)", 3));
        assert_eq!(
            transfer_permutation(&ta, &tb).unwrap(),
            transfer_permutation(&tb, &ta).unwrap().inverse()
        );
        let other = tab(&[&[1, 2, 3]]);
        assert!(matches!(
            transfer_permutation(&ta, &other),
            Err(YoungError::FrameMismatch)
        ));
    }

    #[test]
    fn ga_to_matrix_cases() {
        let nat = natural_rep(3).unwrap();
        let full_sym = young_operator(&tab(&[&[1, 2, 3]])).unwrap();
        assert_eq!(
            ga_to_matrix(&full_sym, &nat).unwrap(),
            symmetrizer_image(&nat).unwrap()
        );
        assert_eq!(
            ga_to_matrix(&GroupAlgebraElement::identity(3), &nat).unwrap(),
            Matrix::identity(3)
        );
        // Young projector realized in the faithful regular representation
        let reg = regular_rep(3, &s3_example_ordering()).unwrap();
        let e = young_operator(&tab(&[&[1, 2], &[3]])).unwrap();
        let m = ga_to_matrix(&e, &reg).unwrap();
        assert_eq!(m.mul(&m).unwrap(), m.scale(&rat(3)));
    }
}
