//! Multi-up-down-tableaux: walks on multipartitions adding or removing one box per step.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::charges::{ChargeVector, Residue};
use crate::partitions::{Multipartition, PartitionError, Step};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("step {index} is illegal: {source}")]
    IllegalStep {
        index: usize,
        #[source]
        source: PartitionError,
    },
    #[error("step {index} refers to component {comp} but the level is {level}")]
    BadComponent {
        index: usize,
        comp: usize,
        level: usize,
    },
}

/// A sequence of legal steps starting at the empty multipartition, together
/// with the cached shapes `t_0 = ∅, t_1, …, t_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpDownTableau {
    steps: Vec<Step>,
    shapes: Vec<Multipartition>,
}

/// Result of pairing removal steps with the additions they undo.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// `(l, r)` with step `r` removing the box most recently added at step `l`,
    /// ordered by `r`. Steps are numbered from 1.
    pub pairs: Vec<(usize, usize)>,
    /// Additions never removed, in order.
    pub survivors: Vec<usize>,
}

impl UpDownTableau {
    pub fn new(level: usize, steps: Vec<Step>) -> Result<Self, TableauError> {
        let mut shapes = vec![Multipartition::empty(level)];
        for (n, step) in steps.iter().enumerate() {
            if step.cell.comp == 0 || step.cell.comp > level {
                return Err(TableauError::BadComponent {
                    index: n + 1,
                    comp: step.cell.comp,
                    level,
                });
            }
            let next = shapes[n]
                .apply(step)
                .map_err(|source| TableauError::IllegalStep {
                    index: n + 1,
                    source,
                })?;
            shapes.push(next);
        }
        Ok(Self { steps, shapes })
    }

    /// The canonical tableau `t^λ`, adding the boxes of `λ^ℓ` row by row,
    /// then those of `λ^{ℓ-1}`, down to `λ^1`.
    pub fn canonical(lam: &Multipartition) -> Self {
        let steps = lam.canonical_cells().into_iter().map(Step::add).collect();
        Self::new(lam.level(), steps).expect("canonical filling is legal")
    }

    pub fn empty(level: usize) -> Self {
        Self::new(level, Vec::new()).expect("empty tableau")
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn shapes(&self) -> &[Multipartition] {
        &self.shapes
    }

    pub fn shape(&self) -> &Multipartition {
        self.shapes
            .last()
            .expect("shapes start with the empty multipartition")
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn level(&self) -> usize {
        self.shapes[0].level()
    }

    /// The first `n` steps.
    pub fn prefix(&self, n: usize) -> Self {
        Self {
            steps: self.steps[..n].to_vec(),
            shapes: self.shapes[..=n].to_vec(),
        }
    }

    /// Appends a step, returning `None` if it is illegal.
    pub fn push(&self, step: Step) -> Option<Self> {
        let next = self.shape().apply(&step).ok()?;
        let mut t = self.clone();
        t.steps.push(step);
        t.shapes.push(next);
        Some(t)
    }

    pub fn is_all_additions(&self) -> bool {
        self.steps.iter().all(Step::is_add)
    }

    pub fn residue_seq(&self, charges: &ChargeVector) -> Vec<Residue> {
        self.steps.iter().map(|s| s.residue(charges)).collect()
    }

    pub fn dual_residue_seq(&self, charges: &ChargeVector) -> Vec<Residue> {
        self.steps.iter().map(|s| s.dual_residue(charges)).collect()
    }

    pub fn match_removals(&self) -> Matching {
        let mut last_added = BTreeMap::new();
        let mut pairs = Vec::new();
        for (n, step) in self.steps.iter().enumerate() {
            if step.is_add() {
                last_added.insert(step.cell, n + 1);
            } else {
                let l = last_added
                    .remove(&step.cell)
                    .expect("a legal tableau only removes boxes it added");
                pairs.push((l, n + 1));
            }
        }
        let mut survivors: Vec<usize> = last_added.into_values().collect();
        survivors.sort_unstable();
        Matching { pairs, survivors }
    }
}

impl Serialize for UpDownTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.steps.serialize(s)
    }
}

impl<'de> Deserialize<'de> for UpDownTableau {
    /// The level is taken to be the largest component mentioned (at least 1).
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let steps = Vec::<Step>::deserialize(d)?;
        let level = steps.iter().map(|s| s.cell.comp).max().unwrap_or(1).max(1);
        UpDownTableau::new(level, steps).map_err(serde::de::Error::custom)
    }
}

/// Legal next steps from `shape`: additions first, then removals, each
/// ordered by component and row.
pub fn next_steps(shape: &Multipartition) -> Vec<Step> {
    let mut v: Vec<Step> = shape.addable_cells().into_iter().map(Step::add).collect();
    v.extend(shape.removable_cells().into_iter().map(Step::remove));
    v
}

/// Number of boxes in the symmetric difference of two shapes.
fn box_distance(a: &Multipartition, b: &Multipartition) -> usize {
    a.components()
        .iter()
        .zip(b.components())
        .map(|(x, y)| {
            (1..=x.len().max(y.len()))
                .map(|r| x.row(r).abs_diff(y.row(r)))
                .sum::<usize>()
        })
        .sum()
}

/// All tableaux of length `m` and shape `λ`, in depth-first order over
/// [`next_steps`].
pub fn enumerate(m: usize, lam: &Multipartition) -> Vec<UpDownTableau> {
    fn rec(t: &UpDownTableau, m: usize, target: &Multipartition, out: &mut Vec<UpDownTableau>) {
        let left = m - t.len();
        let dist = box_distance(t.shape(), target);
        if dist > left || (left - dist) % 2 == 1 {
            return;
        }
        if left == 0 {
            out.push(t.clone());
            return;
        }
        for step in next_steps(t.shape()) {
            let next = t.push(step).expect("next_steps are legal");
            rec(&next, m, target, out);
        }
    }
    let mut out = Vec::new();
    rec(&UpDownTableau::empty(lam.level()), m, lam, &mut out);
    out
}

/// All tableaux of length `m` at the given level, any shape.
pub fn enumerate_all(m: usize, level: usize) -> Vec<UpDownTableau> {
    let mut layer = vec![UpDownTableau::empty(level)];
    for _ in 0..m {
        layer = layer
            .iter()
            .flat_map(|t| {
                next_steps(t.shape())
                    .into_iter()
                    .map(move |s| t.push(s).expect("next_steps are legal"))
            })
            .collect();
    }
    layer
}

/// `|Tud_m(λ)|` for every reachable `λ`, by dynamic programming over shapes.
pub fn count_by_shape(m: usize, level: usize) -> BTreeMap<Multipartition, u128> {
    let mut counts = BTreeMap::from([(Multipartition::empty(level), 1u128)]);
    for _ in 0..m {
        let mut next = BTreeMap::new();
        for (shape, n) in &counts {
            for step in next_steps(shape) {
                let s = shape.apply(&step).expect("next_steps are legal");
                *next.entry(s).or_insert(0) += n;
            }
        }
        counts = next;
    }
    counts
}

/// `Σ_λ |Tud_m(λ)|²`.
pub fn dimension_sum(m: usize, level: usize) -> u128 {
    count_by_shape(m, level).values().map(|n| n * n).sum()
}

fn admissible_swap(a: &Residue, b: &Residue) -> bool {
    !matches!(a.differ_by_int(b), Some(1) | Some(-1))
}

/// Every rearrangement of `seq` reachable by swapping neighbours `a, b`
/// with `a ≠ b ± 1`. Swapping equal neighbours is allowed and harmless.
pub fn admissible_permutations(seq: &[Residue]) -> Vec<Vec<Residue>> {
    let mut seen: HashSet<Vec<Residue>> = HashSet::from([seq.to_vec()]);
    let mut queue = VecDeque::from([seq.to_vec()]);
    let mut out = Vec::new();
    while let Some(s) = queue.pop_front() {
        for k in 0..s.len().saturating_sub(1) {
            if s[k] != s[k + 1] && admissible_swap(&s[k], &s[k + 1]) {
                let mut t = s.clone();
                t.swap(k, k + 1);
                if seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
        }
        out.push(s);
    }
    out
}

/// Whether `pattern` is a subsequence of `seq`: a run of consecutive entries
/// of some admissible permutation.
pub fn admissible_subsequence_check(seq: &[Residue], pattern: &[Residue]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    admissible_permutations(seq)
        .iter()
        .any(|s| s.windows(pattern.len()).any(|w| w == pattern))
}

/// No subsequence of the form `(a, a ± 1, a)`.
pub fn braid_avoiding(seq: &[Residue]) -> bool {
    !admissible_permutations(seq).iter().any(|s| {
        s.windows(3)
            .any(|w| w[0] == w[2] && matches!(w[1].differ_by_int(&w[0]), Some(1) | Some(-1)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{Cell, Partition};

    fn one(s: &str) -> Multipartition {
        s.parse::<Partition>().unwrap().into()
    }

    fn walk(cells: &[(i8, usize, usize)]) -> UpDownTableau {
        let steps = cells
            .iter()
            .map(|&(s, r, c)| {
                let cell = Cell::new(r, c, 1);
                if s > 0 {
                    Step::add(cell)
                } else {
                    Step::remove(cell)
                }
            })
            .collect();
        UpDownTableau::new(1, steps).unwrap()
    }

    fn d(n: i64) -> Residue {
        Residue::symbolic(1, n)
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(0, &Multipartition::empty(1)).len(), 1);
        let ts = enumerate(3, &one("1"));
        assert_eq!(ts.len(), 3);
        let middles: Vec<String> = ts.iter().map(|t| t.shapes()[2].to_string()).collect();
        assert_eq!(middles, vec!["(2)", "(1,1)", "∅"]);
        let ts = enumerate(2, &Multipartition::empty(1));
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0], walk(&[(1, 1, 1), (-1, 1, 1)]));
    }

    #[test]
    fn residue_sequences() {
        let c = ChargeVector::generic(1);
        let t = UpDownTableau::canonical(&one("2"));
        assert_eq!(t.residue_seq(&c), vec![d(0), d(1)]);
        assert_eq!(t.dual_residue_seq(&c), vec![d(0), d(1)]);
        let t = walk(&[(1, 1, 1), (-1, 1, 1)]);
        assert_eq!(t.residue_seq(&c), vec![d(0), d(1)]);
        assert_eq!(t.dual_residue_seq(&c), vec![d(0), d(-1)]);
        let c2 = ChargeVector::generic(2);
        let t = UpDownTableau::canonical(&"1|1".parse().unwrap());
        assert_eq!(
            t.residue_seq(&c2),
            vec![Residue::symbolic(2, 0), Residue::symbolic(1, 0)]
        );
    }

    #[test]
    fn matching() {
        let t = walk(&[(1, 1, 1), (-1, 1, 1)]);
        assert_eq!(t.match_removals().pairs, vec![(1, 2)]);
        let t = UpDownTableau::canonical(&one("3,1"));
        let m = t.match_removals();
        assert!(m.pairs.is_empty());
        assert_eq!(m.survivors, vec![1, 2, 3, 4]);
        let t = walk(&[(1, 1, 1), (1, 1, 2), (-1, 1, 2), (-1, 1, 1)]);
        assert_eq!(t.match_removals().pairs, vec![(2, 3), (1, 4)]);
        // a re-added box pairs with its latest addition
        let t = walk(&[(1, 1, 1), (-1, 1, 1), (1, 1, 1), (-1, 1, 1), (1, 1, 1)]);
        let m = t.match_removals();
        assert_eq!(m.pairs, vec![(1, 2), (3, 4)]);
        assert_eq!(m.survivors, vec![5]);
    }

    #[test]
    fn illegal_steps_rejected() {
        assert!(UpDownTableau::new(1, vec![Step::remove(Cell::new(1, 1, 1))]).is_err());
        assert!(UpDownTableau::new(1, vec![Step::add(Cell::new(2, 1, 1))]).is_err());
        assert!(UpDownTableau::new(1, vec![Step::add(Cell::new(1, 1, 2))]).is_err());
    }

    #[test]
    fn braid_patterns() {
        assert!(!braid_avoiding(&[d(0), d(1), d(0)]));
        assert!(braid_avoiding(&[d(0), d(1), d(2)]));
        // (0,2,1,0): swapping the first two entries exposes the window (0,1,0)
        assert!(!braid_avoiding(&[d(0), d(2), d(1), d(0)]));
        // (0,1,2,0) -> (0,1,0,2)
        assert!(!braid_avoiding(&[d(0), d(1), d(2), d(0)]));
        assert!(braid_avoiding(&[d(0), d(1), d(2), d(3)]));
        assert!(admissible_subsequence_check(
            &[d(0), d(3), d(0)],
            &[d(0), d(0)]
        ));
        assert!(!admissible_subsequence_check(
            &[d(0), d(1), d(0)],
            &[d(0), d(0)]
        ));
        let other = Residue::symbolic(2, 0);
        assert!(admissible_subsequence_check(
            &[d(0), other.clone(), d(0)],
            &[d(0), d(0)]
        ));
    }

    #[test]
    fn json_roundtrip() {
        let t = walk(&[(1, 1, 1), (1, 1, 2), (-1, 1, 2)]);
        let j = serde_json::to_string(&t).unwrap();
        assert!(j.starts_with(r#"[{"sign":1,"box":[1,1,1]}"#));
        assert_eq!(serde_json::from_str::<UpDownTableau>(&j).unwrap(), t);
    }

    #[test]
    fn counts_agree_with_enumeration() {
        for level in 1..=2 {
            for m in 0..=4 {
                let counts = count_by_shape(m, level);
                for (shape, n) in &counts {
                    let ts = enumerate(m, shape);
                    assert_eq!(ts.len() as u128, *n);
                    assert!(ts.iter().all(|t| t.shape() == shape && t.len() == m));
                }
                assert_eq!(
                    enumerate_all(m, level).len() as u128,
                    counts.values().sum::<u128>()
                );
            }
        }
    }

    #[test]
    fn prefixes_are_tableaux() {
        for t in enumerate_all(4, 2) {
            for n in 0..=t.len() {
                let p = t.prefix(n);
                let rebuilt = UpDownTableau::new(2, p.steps().to_vec()).unwrap();
                assert_eq!(rebuilt, p);
            }
        }
    }
}
