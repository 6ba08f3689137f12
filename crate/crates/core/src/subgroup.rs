//! Slices fixed by a whole subgroup reduce to the slice of one permutation:
//! join the cycle partitions of the generators in the partition lattice and
//! cycle each block of the join.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A set partition of `{0, .., n-1}` in canonical form: blocks sorted
/// internally, and ordered by smallest element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn from_blocks(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::Empty("partition block"));
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e >= n {
                    return Err(Error::OutOfRange(format!("element {} exceeds n = {n}", e + 1)));
                }
                if seen[e] {
                    return Err(Error::Parse {
                        token: (e + 1).to_string(),
                        reason: "element in two blocks".into(),
                    });
                }
                seen[e] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Parse {
                token: String::new(),
                reason: "blocks do not cover the ground set".into(),
            });
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition {
            n,
            blocks: (0..n).map(|e| vec![e]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

impl std::fmt::Display for SetPartition {
    /// `137|2|46|5|89` for n <= 9; comma-separated elements beyond that.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        let body = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| (e + 1).to_string()).join(sep))
            .join("|");
        f.write_str(&body)
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// The supports of the cycles of `sigma`, fixed points as singletons.
pub fn cycle_partition(sigma: &Permutation) -> SetPartition {
    let blocks = sigma.cycles().iter().map(|c| c.to_vec()).collect();
    SetPartition::from_blocks(sigma.degree(), blocks).expect("cycles partition the ground set")
}

/// Finest common coarsening: union elements that share a block in any input.
pub fn partition_join(parts: &[SetPartition]) -> Result<SetPartition> {
    let Some(first) = parts.first() else {
        return Err(Error::Empty("partition list"));
    };
    let n = first.n();
    for p in parts {
        if p.n() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: p.n(),
            });
        }
    }
    let mut uf = UnionFind::new(n);
    for p in parts {
        for block in p.blocks() {
            for pair in block.windows(2) {
                uf.union(pair[0], pair[1]);
            }
        }
    }
    let mut grouped: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for e in 0..n {
        grouped.entry(uf.find(e)).or_default().push(e);
    }
    SetPartition::from_blocks(n, grouped.into_values().collect())
}

/// A permutation whose slice equals the slice fixed by the whole group the
/// generators produce: each block of the joined cycle partitions becomes one
/// cycle, elements in ascending order.
pub fn representative_sigma(generators: &[Permutation]) -> Result<Permutation> {
    if generators.is_empty() {
        return Err(Error::Empty("generator list"));
    }
    let n = generators[0].degree();
    for g in generators {
        if g.degree() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: g.degree(),
            });
        }
    }
    let parts: Vec<SetPartition> = generators.iter().map(cycle_partition).collect();
    let join = partition_join(&parts)?;
    Permutation::from_cycles(join.blocks(), n)
}
