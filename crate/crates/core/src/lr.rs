//! The Littlewood-Richardson rule.
//!
//! `lr_product(λ, μ)` expands the product of two Schur symbols as a multiset
//! of partitions: the multiplicity of ν is the number of column-strict skew
//! tableaux of shape ν/λ and content μ whose reverse reading word is a
//! lattice word.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::young::Partition;

/// A formal sum of partitions with positive integer multiplicities. Entries
/// iterate and print in descending lexicographic order, the order product
/// expansions are conventionally written in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PartitionMultiset {
    entries: BTreeMap<Partition, usize>,
}

impl PartitionMultiset {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, nu: &Partition) -> usize {
        self.entries.get(nu).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Partition, usize)> {
        self.entries.iter().rev().map(|(p, &m)| (p, m))
    }

    fn insert(&mut self, nu: Partition, mult: usize) {
        if mult > 0 {
            self.entries.insert(nu, mult);
        }
    }
}

impl Serialize for PartitionMultiset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            partition: &'a Partition,
            multiplicity: usize,
        }
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (partition, multiplicity) in self.entries() {
            seq.serialize_element(&Entry {
                partition,
                multiplicity,
            })?;
        }
        seq.end()
    }
}

impl fmt::Display for PartitionMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, m)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Littlewood-Richardson product of two Schur symbols.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> PartitionMultiset {
    let total = lambda.weight() + mu.weight();
    let mut out = PartitionMultiset::default();
    for nu in Partition::all(total) {
        if !nu.contains(lambda) {
            continue;
        }
        let c = lr_coefficient(&nu, lambda, mu);
        out.insert(nu, c);
    }
    out
}

/// Multiplicity of ν inside a previously computed product.
pub fn contains_partition(product: &PartitionMultiset, nu: &Partition) -> usize {
    product.multiplicity(nu)
}

/// c^ν_{λμ}: counts LR skew tableaux of shape ν/λ with content μ.
fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> usize {
    // cells of ν/λ in reverse reading order: top to bottom, right to left;
    // filling in this order makes the lattice-word prefix check incremental
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (row, &len) in nu.parts().iter().enumerate() {
        let start = lambda.parts().get(row).copied().unwrap_or(0);
        for col in (start..len).rev() {
            cells.push((row, col));
        }
    }
    if cells.len() != mu.weight() {
        return 0;
    }

    let nrows = nu.parts().len();
    let ncols = nu.parts().first().copied().unwrap_or(0);
    // fill[row][col] = entry or 0
    let mut fill = vec![vec![0usize; ncols]; nrows];
    let mut remaining: Vec<usize> = mu.parts().to_vec();
    let mut placed_counts = vec![0usize; mu.parts().len() + 1];
    let mut count = 0usize;

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &Partition,
        fill: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        placed: &mut Vec<usize>,
        count: &mut usize,
    ) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (row, col) = cells[idx];
        for entry in 1..=remaining.len() {
            if remaining[entry - 1] == 0 {
                continue;
            }
            // lattice condition on the reverse reading word: after placing,
            // #entry must not exceed #(entry-1)
            if entry > 1 && placed[entry] + 1 > placed[entry - 1] {
                continue;
            }
            // rows weakly increase left to right: the right neighbour (filled
            // earlier in reverse order) must be ≥ entry
            if col + 1 < fill[row].len() {
                let right = fill[row][col + 1];
                let in_skew = col + 1 >= lambda.parts().get(row).copied().unwrap_or(0)
                    && right != 0;
                if in_skew && right < entry {
                    continue;
                }
            }
            // columns strictly increase top to bottom: cell above must be
            // < entry; cells above inside λ count as smaller than everything
            if row > 0 {
                let above_in_skew = col >= lambda.parts().get(row - 1).copied().unwrap_or(0);
                if above_in_skew {
                    let above = fill[row - 1][col];
                    // above is filled already (reverse reading order fills
                    // higher rows first)
                    if above == 0 || above >= entry {
                        continue;
                    }
                }
            }
            fill[row][col] = entry;
            remaining[entry - 1] -= 1;
            placed[entry] += 1;
            rec(idx + 1, cells, lambda, fill, remaining, placed, count);
            fill[row][col] = 0;
            remaining[entry - 1] += 1;
            placed[entry] -= 1;
        }
    }

    rec(
        0,
        &cells,
        lambda,
        &mut fill,
        &mut remaining,
        &mut placed_counts,
        &mut count,
    );
    count
}

/// Renders a product the way the verdict tables print it:
/// `[2 1][1] = [3 1] + [2 2] + [2 1 1]`.
pub fn format_product(lambda: &Partition, mu: &Partition, product: &PartitionMultiset) -> String {
    format!("{lambda}{mu} = {product}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p).unwrap()
    }

    #[test]
    fn product_1_1_times_1() {
        let p = lr_product(&part(&[1, 1]), &part(&[1]));
        assert_eq!(p.multiplicity(&part(&[2, 1])), 1);
        assert_eq!(p.multiplicity(&part(&[1, 1, 1])), 1);
        assert_eq!(p.entries().count(), 2);
    }

    #[test]
    fn product_2_1_times_1() {
        let p = lr_product(&part(&[2, 1]), &part(&[1]));
        assert_eq!(p.multiplicity(&part(&[3, 1])), 1);
        assert_eq!(p.multiplicity(&part(&[2, 2])), 1);
        assert_eq!(p.multiplicity(&part(&[2, 1, 1])), 1);
        assert_eq!(p.entries().count(), 3);
    }

    #[test]
    fn product_1_1_1_times_1() {
        let p = lr_product(&part(&[1, 1, 1]), &part(&[1]));
        assert_eq!(p.multiplicity(&part(&[2, 1, 1])), 1);
        assert_eq!(p.multiplicity(&part(&[1, 1, 1, 1])), 1);
        assert_eq!(p.entries().count(), 2);
        // the [2 2] class appears only in [2 1][1]
        assert_eq!(contains_partition(&p, &part(&[2, 2])), 0);
    }

    #[test]
    fn empty_multiset() {
        let empty = PartitionMultiset::default();
        assert_eq!(contains_partition(&empty, &part(&[2, 1])), 0);
    }

    #[test]
    fn pieri_rule_single_box() {
        // λ·[1] adds one box in every addable position, multiplicity 1
        for r in 1..=5 {
            for lambda in Partition::all(r) {
                let p = lr_product(&lambda, &part(&[1]));
                let mut expected = 0;
                for (nu, m) in p.entries() {
                    assert_eq!(m, 1, "Pieri multiplicity for {lambda}·[1] at {nu}");
                    assert!(nu.contains(&lambda));
                    expected += 1;
                }
                // number of addable boxes = number of distinct part sizes + 1
                let mut sizes: Vec<usize> = lambda.parts().to_vec();
                sizes.dedup();
                assert_eq!(expected, sizes.len() + 1);
            }
        }
    }

    #[test]
    fn commutativity_small() {
        let pairs = [
            (part(&[2, 1]), part(&[1, 1])),
            (part(&[2]), part(&[2, 1])),
            (part(&[1, 1]), part(&[2, 2])),
            (part(&[3]), part(&[2, 1])),
        ];
        for (a, b) in pairs {
            assert_eq!(lr_product(&a, &b), lr_product(&b, &a), "{a}·{b}");
        }
    }

    #[test]
    fn dimension_consistency() {
        // Σ_ν c^ν_{λμ} f^ν = f^λ f^μ C(|λ|+|μ|, |λ|)
        for total in 2..=6usize {
            for a in 1..total {
                let b = total - a;
                for lambda in Partition::all(a) {
                    for mu in Partition::all(b) {
                        let lhs: u64 = lr_product(&lambda, &mu)
                            .entries()
                            .map(|(nu, m)| m as u64 * nu.hook_length_count())
                            .sum();
                        let rhs = lambda.hook_length_count()
                            * mu.hook_length_count()
                            * binomial(total, a);
                        assert_eq!(lhs, rhs, "{lambda}·{mu}");
                    }
                }
            }
        }
    }

    fn binomial(n: usize, k: usize) -> u64 {
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..k {
            num *= (n - i) as u64;
            den *= (i + 1) as u64;
        }
        num / den
    }

    #[test]
    fn known_non_pieri_product() {
        // [2 1]·[2 1] has c = 2 at [3 2 1]: a classic LR value
        let p = lr_product(&part(&[2, 1]), &part(&[2, 1]));
        assert_eq!(p.multiplicity(&part(&[3, 2, 1])), 2);
        assert_eq!(p.multiplicity(&part(&[4, 2])), 1);
        assert_eq!(p.multiplicity(&part(&[2, 2, 2])), 1);
    }

    #[test]
    fn display_format() {
        let p = lr_product(&part(&[2, 1]), &part(&[1]));
        assert_eq!(
            format_product(&part(&[2, 1]), &part(&[1]), &p),
            "[2 1][1] = [3 1] + [2 2] + [2 1 1]"
        );
    }
}
