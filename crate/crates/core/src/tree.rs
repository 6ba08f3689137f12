//! Labeled trees on `[m]`, enumerated through their Prüfer sequences. There
//! are `m^(m-2)` of them for `m >= 2` (one for `m <= 2`), so exhaustive
//! enumeration is a desk-scale affair only.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// A spanning tree on vertex set `{0, .., m-1}`; edges are stored as sorted
/// pairs `(j, k)` with `j < k`, in sorted order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn new(m: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        if edges.len() + 1 != m {
            return Err(Error::InvalidTree(format!(
                "{} edges cannot span {} vertices",
                edges.len(),
                m
            )));
        }
        for e in edges.iter_mut() {
            if e.0 == e.1 || e.0 >= m || e.1 >= m {
                return Err(Error::InvalidTree(format!("bad edge {:?}", e)));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        // connectivity via union-find; m-1 edges + connected = tree
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidTree("contains a cycle".into()));
            }
            parent[ra] = rb;
        }
        Ok(SpanningTree { m, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.m];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Decodes a Prüfer sequence of length `m - 2` into its tree.
    pub fn from_prufer(m: usize, seq: &[usize]) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidTree("prufer decoding needs m >= 2".into()));
        }
        if seq.len() + 2 != m {
            return Err(Error::InvalidTree(format!(
                "sequence length {} does not match m = {}",
                seq.len(),
                m
            )));
        }
        if seq.iter().any(|&v| v >= m) {
            return Err(Error::InvalidTree("sequence entry out of range".into()));
        }
        let mut degree = vec![1u32; m];
        for &a in seq {
            degree[a] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> = (0..m)
            .filter(|&i| degree[i] == 1)
            .map(Reverse)
            .collect();
        let mut edges = Vec::with_capacity(m - 1);
        for &a in seq {
            let Reverse(u) = leaves.pop().expect("a tree always has a leaf");
            degree[u] -= 1;
            degree[a] -= 1;
            edges.push((u.min(a), u.max(a)));
            if degree[a] == 1 {
                leaves.push(Reverse(a));
            }
        }
        let Reverse(u) = leaves.pop().unwrap();
        let Reverse(v) = leaves.pop().unwrap();
        edges.push((u.min(v), u.max(v)));
        edges.sort_unstable();
        Ok(SpanningTree { m, edges })
    }
}

/// `m^(m-2)` for `m >= 2`, `1` for `m = 1`; errors when the count overflows
/// a `u64` (enumeration would be hopeless there anyway).
pub fn spanning_tree_count(m: usize) -> Result<u64> {
    match m {
        0 => Err(Error::InvalidTree("no vertices".into())),
        1 | 2 => Ok(1),
        _ => (m as u64)
            .checked_pow((m - 2) as u32)
            .ok_or_else(|| Error::OutOfRange(format!("m^(m-2) overflows u64 for m = {m}"))),
    }
}

/// The tree at a given position in the lexicographic Prüfer order.
pub fn tree_from_index(m: usize, index: u64) -> Result<SpanningTree> {
    match m {
        0 => Err(Error::InvalidTree("no vertices".into())),
        1 => Ok(SpanningTree { m: 1, edges: vec![] }),
        2 => Ok(SpanningTree {
            m: 2,
            edges: vec![(0, 1)],
        }),
        _ => {
            let mut seq = vec![0usize; m - 2];
            let mut rest = index;
            for digit in seq.iter_mut().rev() {
                *digit = (rest % m as u64) as usize;
                rest /= m as u64;
            }
            SpanningTree::from_prufer(m, &seq)
        }
    }
}

/// Streams every labeled tree on `[m]` exactly once, in the deterministic
/// Prüfer order. Memory stays O(m).
pub fn spanning_trees(m: usize) -> Result<impl Iterator<Item = SpanningTree>> {
    let total = spanning_tree_count(m)?;
    Ok((0..total).map(move |i| tree_from_index(m, i).expect("index is in range")))
}
