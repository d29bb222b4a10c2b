//! Partitions, Young tableaux and Young symmetrizers.
//!
//! A tableau's symmetrizer is the signed sum over its horizontal and vertical
//! permutation groups. Standard tableaux enumerate in row-reading
//! lexicographic order so golden outputs are stable.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;
use crate::group_ring::GroupRingElement;
use crate::linalg::rational_rank;
use crate::perm::Permutation;
use crate::rational::{rat_int, Rational};

/// A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ λ_l > 0).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates weak decrease; trailing zeros are stripped so partitions
    /// compare well as map keys.
    pub fn new(parts: &[usize]) -> Result<Self, AlgebraError> {
        let mut parts: Vec<usize> = parts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(AlgebraError::InvalidPartition(
                "zero part in the middle".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(AlgebraError::InvalidPartition(format!(
                "parts not weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The weight r = Σ λᵢ.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Column lengths (the conjugate partition).
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts: Vec<usize> = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Whether this diagram contains `other` cell-wise.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.parts.get(i).copied().unwrap_or(0) >= p)
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: current.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                current.push(p);
                rec(remaining - p, p, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_length_count(&self) -> u64 {
        let r = self.weight();
        let conj = self.conjugate();
        let mut denom: u128 = 1;
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                let hook = (len - j) + (conj.parts[j] - i) - 1;
                denom *= hook as u128;
            }
        }
        let mut numer: u128 = 1;
        for k in 1..=r as u128 {
            numer *= k;
        }
        (numer / denom) as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = AlgebraError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(&v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

/// A Young tableau: the frame filled bijectively with 1..=r.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct YoungTableau {
    frame: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let frame = Partition::new(&rows.iter().map(|r| r.len()).collect::<Vec<_>>())
            .map_err(|_| AlgebraError::InvalidTableau("row lengths not a partition".into()))?;
        let r = frame.weight();
        let mut seen = vec![false; r + 1];
        for row in &rows {
            for &v in row {
                if v == 0 || v > r || seen[v] {
                    return Err(AlgebraError::InvalidTableau(format!(
                        "filling not a bijection onto 1..={r}"
                    )));
                }
                seen[v] = true;
            }
        }
        Ok(YoungTableau { frame, rows })
    }

    pub fn frame(&self) -> &Partition {
        &self.frame
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.frame.weight()
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|row| row.get(c).copied())
            .collect()
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let ncols = self.frame.parts().first().copied().unwrap_or(0);
        let cols_ok = (0..ncols).all(|c| {
            let col = self.column(c);
            col.windows(2).all(|w| w[0] < w[1])
        });
        rows_ok && cols_ok
    }

    /// Row-reading word: rows concatenated top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// All permutations preserving each row setwise.
    pub fn horizontal_group(&self) -> Vec<Permutation> {
        stabilizer_group(self.degree(), &self.rows)
    }

    /// All permutations preserving each column setwise.
    pub fn vertical_group(&self) -> Vec<Permutation> {
        let ncols = self.frame.parts().first().copied().unwrap_or(0);
        let cols: Vec<Vec<usize>> = (0..ncols).map(|c| self.column(c)).collect();
        stabilizer_group(self.degree(), &cols)
    }

    /// The Young symmetrizer y_t = Σ_{p∈H} Σ_{q∈V} sign(q) · p∘q.
    pub fn symmetrizer(&self) -> GroupRingElement {
        let mut y = GroupRingElement::zero(self.degree());
        for p in self.horizontal_group() {
            for q in self.vertical_group() {
                let sign = rat_int(q.sign() as i64);
                y.add_term(p.compose(&q).expect("equal degrees"), sign);
            }
        }
        y
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl TryFrom<Vec<Vec<usize>>> for YoungTableau {
    type Error = AlgebraError;
    fn try_from(v: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        YoungTableau::new(v)
    }
}

impl From<YoungTableau> for Vec<Vec<usize>> {
    fn from(t: YoungTableau) -> Vec<Vec<usize>> {
        t.rows
    }
}

/// Direct product of the symmetric groups on the given blocks, as elements of
/// S_degree. Blocks partition a subset of {1..degree}; points outside any
/// block are fixed.
fn stabilizer_group(degree: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut elements = vec![Permutation::identity(degree)];
    for block in blocks {
        let perms_of_block = permutations_of(block);
        let mut next = Vec::with_capacity(elements.len() * perms_of_block.len());
        for base in &elements {
            for assignment in &perms_of_block {
                let mut images: Vec<usize> = (1..=degree).map(|i| base.image(i)).collect();
                for (&from, &to) in block.iter().zip(assignment) {
                    images[from - 1] = to;
                }
                next.push(Permutation::from_images(&images).expect("valid by construction"));
            }
        }
        elements = next;
    }
    elements.sort();
    elements
}

fn permutations_of(values: &[usize]) -> Vec<Vec<usize>> {
    if values.len() <= 1 {
        return vec![values.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        let rest: Vec<usize> = values
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &x)| x)
            .collect();
        for mut tail in permutations_of(&rest) {
            tail.insert(0, v);
            out.push(tail);
        }
    }
    out
}

/// All standard tableaux of a frame, sorted by row-reading word.
pub fn standard_tableaux(frame: &Partition) -> Vec<YoungTableau> {
    let r = frame.weight();
    let parts = frame.parts();
    let mut grid: Vec<Vec<usize>> = parts.iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();

    fn place(
        value: usize,
        r: usize,
        parts: &[usize],
        grid: &mut Vec<Vec<usize>>,
        out: &mut Vec<YoungTableau>,
    ) {
        if value > r {
            out.push(YoungTableau::new(grid.clone()).expect("valid standard filling"));
            return;
        }
        for row in 0..parts.len() {
            // next free cell in this row
            let col = grid[row].iter().position(|&v| v == 0);
            let Some(col) = col else { continue };
            // row constraint is automatic (cells fill left to right with
            // increasing values); check the column constraint
            if row > 0 && (grid[row - 1].len() <= col || grid[row - 1][col] == 0) {
                continue;
            }
            grid[row][col] = value;
            place(value + 1, r, parts, grid, out);
            grid[row][col] = 0;
        }
    }

    place(1, r, parts, &mut grid, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// The tableau with rows 1,3 / 2,4 whose starred symmetrizer projects onto
/// algebraic curvature tensors.
pub fn curvature_tableau() -> YoungTableau {
    YoungTableau::new(vec![vec![1, 3], vec![2, 4]]).expect("static tableau")
}

/// Report for the two-sided decomposition check of ℚ[S_r].
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub degree: usize,
    pub factorial: u64,
    /// (λ, #standard tableaux) pairs.
    pub tableau_counts: Vec<(Partition, u64)>,
    pub square_sum: u64,
    pub square_sum_matches: bool,
    /// Rank over ℚ of { p·y_t : p ∈ S_r, t standard }.
    pub span_rank: usize,
    pub span_rank_matches: bool,
}

/// Checks Σ_λ (#standard tableaux)² = r! and that the left translates of all
/// standard Young symmetrizers span the whole group ring.
pub fn verify_ring_decomposition(degree: usize) -> DecompositionReport {
    assert!((1..=5).contains(&degree), "decomposition check needs r ≤ 5");
    let factorial: u64 = (1..=degree as u64).product();

    let mut tableau_counts = Vec::new();
    let mut square_sum = 0u64;
    let mut symmetrizers: Vec<GroupRingElement> = Vec::new();
    for lambda in Partition::all(degree) {
        let tabs = standard_tableaux(&lambda);
        let count = tabs.len() as u64;
        square_sum += count * count;
        tableau_counts.push((lambda, count));
        symmetrizers.extend(tabs.iter().map(|t| t.symmetrizer()));
    }

    let all_perms = Permutation::all(degree);
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(all_perms.len() * symmetrizers.len());
    for y in &symmetrizers {
        for p in &all_perms {
            let translate = GroupRingElement::single(p.clone(), rat_int(1))
                .ring_multiply(y)
                .expect("equal degrees");
            rows.push(element_coordinates(&translate, &all_perms));
        }
    }
    let span_rank = rational_rank(&rows);

    DecompositionReport {
        degree,
        factorial,
        tableau_counts,
        square_sum,
        square_sum_matches: square_sum == factorial,
        span_rank,
        span_rank_matches: span_rank as u64 == factorial,
    }
}

/// Coordinates of an element in the basis of all permutations (given sorted).
pub fn element_coordinates(e: &GroupRingElement, basis: &[Permutation]) -> Vec<Rational> {
    basis.iter().map(|p| e.coefficient(p)).collect()
}
