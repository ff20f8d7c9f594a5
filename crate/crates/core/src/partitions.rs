//! Partitions, multipartitions, boxes and their charged contents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::charges::{ChargeVector, Residue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotPartition(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Parse(String),
    #[error("no box at row {row}, column {col} can be {what}")]
    BadStep {
        row: usize,
        col: usize,
        what: &'static str,
    },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotPartition(parts));
        }
        Ok(Self { parts })
    }

    /// Drops trailing zeros; panics on an increasing sequence.
    pub(crate) fn from_trusted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-based), zero beyond the last row.
    pub fn row(&self, r: usize) -> usize {
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let cols = self.row(1);
        Self {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&x| x >= c).count())
                .collect(),
        }
    }

    /// Rows `r` where a box `(r, λ_r + 1)` may be added.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&r| r == 1 || self.row(r) < self.row(r - 1))
            .collect()
    }

    /// Rows `r` whose last box `(r, λ_r)` may be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&r| self.row(r) > self.row(r + 1))
            .collect()
    }

    pub fn with_box_added(&self, r: usize) -> Result<Self, PartitionError> {
        let col = self.row(r) + 1;
        if r == 0 || (r > 1 && col > self.row(r - 1)) {
            return Err(PartitionError::BadStep {
                row: r,
                col,
                what: "added",
            });
        }
        let mut parts = self.parts.clone();
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Ok(Self { parts })
    }

    pub fn with_box_removed(&self, r: usize) -> Result<Self, PartitionError> {
        let col = self.row(r);
        if r == 0 || col == 0 || self.row(r + 1) == col {
            return Err(PartitionError::BadStep {
                row: r,
                col,
                what: "removed",
            });
        }
        let mut parts = self.parts.clone();
        parts[r - 1] -= 1;
        Ok(Self::from_trusted(parts))
    }

    /// Boxes `(r, c)` in reading order: row by row, left to right.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| (r + 1, c)))
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Partition::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// `""` or `"0"` is the empty partition, otherwise comma separated parts.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() || t == "0" || t == "∅" {
            return Ok(Self::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Self::new(parts)
    }
}

/// A box of a multipartition: row, column and component, all 1-based.
///
/// Serialized as `[r, c, k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 3]", into = "[usize; 3]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Self { row, col, comp }
    }

    /// `c - r`, the content before adding the charge.
    pub fn diagonal(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl From<[usize; 3]> for Cell {
    fn from([row, col, comp]: [usize; 3]) -> Self {
        Self { row, col, comp }
    }
}

impl From<Cell> for [usize; 3] {
    fn from(c: Cell) -> Self {
        [c.row, c.col, c.comp]
    }
}

/// Charged content `δ_k + c - r`.
pub fn content(cell: &Cell, charges: &ChargeVector) -> Residue {
    charges.charge(cell.comp).plus(cell.diagonal())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Add,
    Remove,
}

/// One step `±□` of an up-down tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub sign: Sign,
    pub cell: Cell,
}

impl Step {
    pub fn add(cell: Cell) -> Self {
        Self {
            sign: Sign::Add,
            cell,
        }
    }

    pub fn remove(cell: Cell) -> Self {
        Self {
            sign: Sign::Remove,
            cell,
        }
    }

    pub fn is_add(&self) -> bool {
        self.sign == Sign::Add
    }

    /// Residue offset relative to the charge of the step's component.
    pub fn residue_offset(&self) -> i64 {
        match self.sign {
            Sign::Add => self.cell.diagonal(),
            Sign::Remove => self.cell.diagonal() + 1,
        }
    }

    pub fn dual_residue_offset(&self) -> i64 {
        match self.sign {
            Sign::Add => self.cell.diagonal(),
            Sign::Remove => self.cell.diagonal() - 1,
        }
    }

    /// Content on addition, content plus one on removal.
    pub fn residue(&self, charges: &ChargeVector) -> Residue {
        charges.charge(self.cell.comp).plus(self.residue_offset())
    }

    /// Content on addition, content minus one on removal.
    pub fn dual_residue(&self, charges: &ChargeVector) -> Residue {
        charges
            .charge(self.cell.comp)
            .plus(self.dual_residue_offset())
    }
}

#[derive(Serialize, Deserialize)]
struct StepRepr {
    sign: i8,
    #[serde(rename = "box")]
    cell: Cell,
}

impl Serialize for Step {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        StepRepr {
            sign: if self.is_add() { 1 } else { -1 },
            cell: self.cell,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Step {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = StepRepr::deserialize(d)?;
        match r.sign {
            1 => Ok(Step::add(r.cell)),
            -1 => Ok(Step::remove(r.cell)),
            s => Err(serde::de::Error::custom(format!(
                "step sign must be ±1, got {s}"
            ))),
        }
    }
}

/// An `ℓ`-tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Self {
        assert!(
            !components.is_empty(),
            "a multipartition has level at least 1"
        );
        Self { components }
    }

    pub fn empty(level: usize) -> Self {
        Self::new(vec![Partition::empty(); level])
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    /// Component `k`, 1-based.
    pub fn component(&self, k: usize) -> &Partition {
        &self.components[k - 1]
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    /// The order on multipartitions: `self` lies above `other` iff it is smaller.
    pub fn is_above(&self, other: &Multipartition) -> bool {
        self.size() < other.size()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        cell.comp >= 1
            && cell.comp <= self.level()
            && cell.row >= 1
            && cell.col >= 1
            && cell.col <= self.component(cell.comp).row(cell.row)
    }

    pub fn apply(&self, step: &Step) -> Result<Self, PartitionError> {
        let k = step.cell.comp;
        let lam = self.component(k);
        let (next, expect_col) = match step.sign {
            Sign::Add => (
                lam.with_box_added(step.cell.row)?,
                lam.row(step.cell.row) + 1,
            ),
            Sign::Remove => (lam.with_box_removed(step.cell.row)?, lam.row(step.cell.row)),
        };
        if expect_col != step.cell.col {
            return Err(PartitionError::BadStep {
                row: step.cell.row,
                col: step.cell.col,
                what: if step.is_add() { "added" } else { "removed" },
            });
        }
        let mut components = self.components.clone();
        components[k - 1] = next;
        Ok(Self { components })
    }

    /// All addable boxes, ordered by component and then row.
    pub fn addable_cells(&self) -> Vec<Cell> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, lam)| {
                lam.addable_rows()
                    .into_iter()
                    .map(move |r| Cell::new(r, lam.row(r) + 1, k + 1))
            })
            .collect()
    }

    /// All removable boxes, ordered by component and then row.
    pub fn removable_cells(&self) -> Vec<Cell> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, lam)| {
                lam.removable_rows()
                    .into_iter()
                    .map(move |r| Cell::new(r, lam.row(r), k + 1))
            })
            .collect()
    }

    /// `Add_i(λ)`: addable boxes of charged content `i`.
    pub fn addable(&self, i: &Residue, charges: &ChargeVector) -> Vec<Cell> {
        self.addable_cells()
            .into_iter()
            .filter(|c| &content(c, charges) == i)
            .collect()
    }

    /// `Rem_i(λ)`: removable boxes of charged content `i`.
    pub fn removable(&self, i: &Residue, charges: &ChargeVector) -> Vec<Cell> {
        self.removable_cells()
            .into_iter()
            .filter(|c| &content(c, charges) == i)
            .collect()
    }

    /// Boxes in the filling order of the canonical tableau: component `ℓ`
    /// row by row, then component `ℓ - 1`, and so on.
    pub fn canonical_cells(&self) -> Vec<Cell> {
        (1..=self.level())
            .rev()
            .flat_map(|k| {
                self.component(k)
                    .cells()
                    .map(move |(r, c)| Cell::new(r, c, k))
                    .collect::<Vec<_>>()
            })
            .collect()
    }
}

impl From<Partition> for Multipartition {
    fn from(p: Partition) -> Self {
        Self::new(vec![p])
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level() == 1 {
            return write!(f, "{}", self.components[0]);
        }
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

impl FromStr for Multipartition {
    type Err = PartitionError;

    /// Components separated by `|`, e.g. `2,1|1` or `|1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Self::new(
            s.split('|')
                .map(str::parse)
                .collect::<Result<Vec<Partition>, _>>()?,
        ))
    }
}

/// Partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Multipartitions of total size `n` and level `ℓ`.
///
/// Size distributions are listed with earlier components as large as
/// possible first; within one distribution the components run through
/// [`enumerate_partitions`] lexicographically.
pub fn enumerate_multipartitions(n: usize, level: usize) -> Vec<Multipartition> {
    fn sizes(n: usize, level: usize) -> Vec<Vec<usize>> {
        if level == 1 {
            return vec![vec![n]];
        }
        (0..=n)
            .rev()
            .flat_map(|a| {
                sizes(n - a, level - 1).into_iter().map(move |mut rest| {
                    rest.insert(0, a);
                    rest
                })
            })
            .collect()
    }
    let mut out = Vec::new();
    for dist in sizes(n, level) {
        let mut acc: Vec<Vec<Partition>> = vec![Vec::new()];
        for &m in &dist {
            let opts = enumerate_partitions(m);
            acc = acc
                .into_iter()
                .flat_map(|pre| {
                    opts.iter().map(move |p| {
                        let mut v = pre.clone();
                        v.push(p.clone());
                        v
                    })
                })
                .collect();
        }
        out.extend(acc.into_iter().map(Multipartition::new));
    }
    out
}

/// Every partition of size at most `n`, smallest first.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn d1() -> ChargeVector {
        ChargeVector::generic(1)
    }

    #[test]
    fn contents_and_residues() {
        let c = d1();
        let delta = Residue::symbolic(1, 0);
        assert_eq!(content(&Cell::new(1, 1, 1), &c), delta);
        assert_eq!(content(&Cell::new(2, 1, 1), &c), delta.plus(-1));
        assert_eq!(content(&Cell::new(1, 3, 1), &c), delta.plus(2));
        assert_eq!(Step::add(Cell::new(1, 1, 1)).residue(&c), delta);
        assert_eq!(Step::remove(Cell::new(1, 1, 1)).residue(&c), delta.plus(1));
        assert_eq!(Step::remove(Cell::new(2, 1, 1)).residue(&c), delta);
        assert_eq!(
            Step::add(Cell::new(1, 2, 1)).dual_residue(&c),
            delta.plus(1)
        );
        assert_eq!(
            Step::remove(Cell::new(1, 1, 1)).dual_residue(&c),
            delta.plus(-1)
        );
        assert_eq!(Step::remove(Cell::new(1, 2, 1)).dual_residue(&c), delta);
    }

    #[test]
    fn addable_removable_examples() {
        let c = d1();
        let delta = Residue::symbolic(1, 0);
        let two: Multipartition = p("2").into();
        assert_eq!(two.addable(&delta.plus(-1), &c), vec![Cell::new(2, 1, 1)]);
        let twotwo: Multipartition = p("2,2").into();
        assert_eq!(twotwo.removable(&delta, &c), vec![Cell::new(2, 2, 1)]);
        let c2 = ChargeVector::generic(2);
        let e = Multipartition::empty(2);
        assert_eq!(
            e.addable(&Residue::symbolic(2, 0), &c2),
            vec![Cell::new(1, 1, 2)]
        );
    }

    #[test]
    fn canonical_filling_order() {
        let lam: Multipartition = "3,2|2,2".parse().unwrap();
        let cells = lam.canonical_cells();
        assert_eq!(cells.len(), 9);
        assert!(cells[..4].iter().all(|c| c.comp == 2));
        assert!(cells[4..].iter().all(|c| c.comp == 1));
        assert_eq!(cells[2], Cell::new(2, 1, 2));
        assert_eq!(cells[7], Cell::new(2, 1, 1));
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(enumerate_partitions(2), vec![p("2"), p("1,1")]);
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_multipartitions(1, 2),
            vec![
                "1|".parse().unwrap(),
                "|1".parse::<Multipartition>().unwrap()
            ]
        );
        let counts: Vec<usize> = (0..8).map(|n| enumerate_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        // bipartitions of 3: Σ p(a)p(3-a) = 3 + 2 + 2 + 3
        assert_eq!(enumerate_multipartitions(3, 2).len(), 10);
    }

    #[test]
    fn transpose_and_parse() {
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
        assert_eq!(p("").transpose(), p(""));
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(serde_json::to_string(&p("2,1")).unwrap(), "[2,1]");
        assert_eq!(
            serde_json::to_string(&Cell::new(2, 1, 3)).unwrap(),
            "[2,1,3]"
        );
        let s = Step::remove(Cell::new(1, 2, 1));
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"sign":-1,"box":[1,2,1]}"#);
        assert_eq!(serde_json::from_str::<Step>(&j).unwrap(), s);
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        (0usize..9).prop_flat_map(|n| {
            let all = enumerate_partitions(n);
            (0..all.len()).prop_map(move |i| all[i].clone())
        })
    }

    proptest! {
        #[test]
        fn transpose_is_involution(lam in arb_partition()) {
            prop_assert_eq!(lam.transpose().transpose(), lam.clone());
            prop_assert_eq!(lam.transpose().size(), lam.size());
        }

        #[test]
        fn at_most_one_box_per_content(lam in arb_partition(), i in -10i64..10) {
            let c = ChargeVector::generic(1);
            let mu: Multipartition = lam.into();
            let r = Residue::symbolic(1, i);
            let add = mu.addable(&r, &c);
            let rem = mu.removable(&r, &c);
            prop_assert!(add.len() <= 1 && rem.len() <= 1);
            if let (Some(a), Some(b)) = (add.first(), rem.first()) {
                prop_assert_ne!(a.row, b.row);
            }
        }

        #[test]
        fn add_then_remove_is_identity(lam in arb_partition()) {
            let mu: Multipartition = lam.into();
            for cell in mu.addable_cells() {
                let up = mu.apply(&Step::add(cell)).unwrap();
                prop_assert_eq!(up.apply(&Step::remove(cell)).unwrap(), mu.clone());
            }
            for cell in mu.removable_cells() {
                let down = mu.apply(&Step::remove(cell)).unwrap();
                prop_assert_eq!(down.apply(&Step::add(cell)).unwrap(), mu.clone());
            }
        }

        #[test]
        fn residue_laws(r in 1usize..6, c in 1usize..6, k in 1usize..3) {
            let ch = ChargeVector::generic(2);
            let cell = Cell::new(r, c, k);
            let cont = content(&cell, &ch);
            prop_assert_eq!(Step::add(cell).residue(&ch), cont.clone());
            prop_assert_eq!(Step::add(cell).dual_residue(&ch), cont.clone());
            prop_assert_eq!(Step::remove(cell).residue(&ch), cont.plus(1));
            prop_assert_eq!(Step::remove(cell).dual_residue(&ch), cont.plus(-1));
        }
    }
}
