//! Permutations of `[n]`: parsing, cycle structure, group actions, inversion
//! statistics, and the standard-block permutations attached to a cycle type.
//!
//! Elements are 0-based in the API; all text I/O is 1-based. Cycle
//! decompositions are kept canonical: every cycle starts at its smallest
//! element, and cycles are sorted by length descending, then by smallest
//! element ascending. That ordering fixes the cycle indices `1..=m` used by
//! inversion tables and zonotope generators.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exact::{rat, Rational, RationalPoint};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

/// A partition of `n` into weakly decreasing positive parts: the multiset of
/// cycle lengths of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self::from_images((0..n).collect()).expect("identity is a bijection")
    }

    /// Builds a permutation from its images: `images[i]` is where element `i`
    /// goes (0-based).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::Parse {
                    token: (v + 1).to_string(),
                    reason: format!("out of range 1..={n}"),
                });
            }
            if seen[v] {
                return Err(Error::Parse {
                    token: (v + 1).to_string(),
                    reason: "repeated element".into(),
                });
            }
            seen[v] = true;
        }
        let cycles = canonical_cycles(&images);
        Ok(Permutation { images, cycles })
    }

    /// Builds a permutation of `[n]` from disjoint cycles (0-based elements);
    /// elements not mentioned are fixed.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &e in cycle {
                if e >= n {
                    return Err(Error::Parse {
                        token: (e + 1).to_string(),
                        reason: format!("out of range 1..={n}"),
                    });
                }
                if seen[e] {
                    return Err(Error::Parse {
                        token: (e + 1).to_string(),
                        reason: "repeated element".into(),
                    });
                }
                seen[e] = true;
            }
            for (i, &e) in cycle.iter().enumerate() {
                images[e] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses one-line or cycle notation. Inputs without separators are read
    /// digit by digit (so `"246513"` and `"(1245)(36)"` work); multi-digit
    /// elements require `,` or whitespace separators. Cycle notation needs an
    /// explicit degree so omitted fixed points can be restored.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse {
                token: String::new(),
                reason: "empty permutation".into(),
            });
        }
        if text.contains('(') {
            let n = n.ok_or_else(|| Error::Parse {
                token: text.to_string(),
                reason: "cycle notation requires an explicit degree n".into(),
            })?;
            let cycles = parse_cycle_groups(text, n)?;
            Self::from_cycles(&cycles, n)
        } else {
            let values = parse_elements(text)?;
            if let Some(n) = n {
                if values.len() != n {
                    return Err(Error::Parse {
                        token: text.to_string(),
                        reason: format!("expected {n} elements, got {}", values.len()),
                    });
                }
            }
            let degree = values.len();
            let images = values
                .into_iter()
                .map(|v| check_element(v, degree))
                .collect::<Result<Vec<usize>>>()?;
            Self::from_images(images)
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of element `i` (0-based).
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Canonical cycle decomposition, fixed points included.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Self::from_images(images).expect("inverse of a bijection")
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Self::from_images(other.images.iter().map(|&v| self.images[v]).collect())
    }

    pub fn conjugate_by(&self, tau: &Permutation) -> Result<Permutation> {
        tau.compose(self)?.compose(&tau.inverse())
    }

    /// Coordinate-permuting action on a point: `(sigma . x)_i = x_{sigma^{-1}(i)}`.
    pub fn act(&self, x: &[Rational]) -> Result<RationalPoint> {
        if x.len() != self.degree() {
            return Err(Error::PointLength {
                expected: self.degree(),
                got: x.len(),
            });
        }
        let mut out = vec![rat(0); x.len()];
        for (i, &v) in self.images.iter().enumerate() {
            out[v] = x[i].clone();
        }
        Ok(out)
    }

    /// The point `(sigma(1), ..., sigma(n))` identified with this permutation.
    pub fn as_point(&self) -> RationalPoint {
        self.images.iter().map(|&v| rat(v as i64 + 1)).collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles.iter().map(Vec::len).collect())
            .expect("canonical cycles sort by length")
    }

    /// Total inversion count `|{(a,b) : a < b, sigma(a) > sigma(b)}|`.
    pub fn inversions(&self) -> u64 {
        let mut count = 0;
        for a in 0..self.degree() {
            for b in a + 1..self.degree() {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// One-line notation, 1-based and comma-separated.
    pub fn to_one_line_string(&self) -> String {
        self.images.iter().map(|&v| (v + 1).to_string()).join(",")
    }

    /// Canonical cycle notation, 1-based. Elements are concatenated for
    /// n <= 9 and comma-separated beyond that. Fixed points are printed,
    /// except multi-digit ones: a lone `(10)` would read as the 2-cycle
    /// `(1 0)` under digit splitting, so those are left to the explicit
    /// degree to restore. At least one of `1..=9` always prints.
    pub fn to_cycle_string(&self) -> String {
        let sep = if self.degree() <= 9 { "" } else { "," };
        self.cycles
            .iter()
            .filter(|c| c.len() > 1 || c[0] < 9)
            .map(|c| format!("({})", c.iter().map(|&e| (e + 1).to_string()).join(sep)))
            .collect()
    }

    /// All permutations whose values along each canonical cycle of `self` are
    /// consecutive increasing integers, one for each of the `m!` linear orders
    /// of the cycles. Each result carries its order as a list of cycle
    /// indices, smallest first. Cost grows as `m!`.
    pub fn standard_block_permutations(&self) -> Vec<(Vec<usize>, Permutation)> {
        let m = self.cycles.len();
        let n = self.degree();
        (0..m)
            .permutations(m)
            .map(|order| {
                let mut images = vec![0; n];
                let mut next = 0;
                for &ci in &order {
                    for &elem in &self.cycles[ci] {
                        images[elem] = next;
                        next += 1;
                    }
                }
                let p = Permutation::from_images(images).expect("blocks partition the values");
                (order, p)
            })
            .collect()
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

fn canonical_cycles(images: &[usize]) -> Vec<Vec<usize>> {
    let n = images.len();
    let mut visited = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        // `start` is the smallest element of its cycle: earlier elements of
        // the same cycle would already be visited.
        let mut cycle = vec![start];
        visited[start] = true;
        let mut e = images[start];
        while e != start {
            visited[e] = true;
            cycle.push(e);
            e = images[e];
        }
        cycles.push(cycle);
    }
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    cycles
}

fn check_element(v: usize, n: usize) -> Result<usize> {
    if v == 0 || v > n {
        return Err(Error::Parse {
            token: v.to_string(),
            reason: format!("out of range 1..={n}"),
        });
    }
    Ok(v - 1)
}

/// Splits a run of elements: on separators when any are present, digit by
/// digit otherwise.
fn parse_elements(text: &str) -> Result<Vec<usize>> {
    let mut values = Vec::new();
    if text.contains(|c: char| c == ',' || c.is_whitespace()) {
        for token in text.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let v: usize = token.parse().map_err(|_| Error::Parse {
                token: token.to_string(),
                reason: "not a positive integer".into(),
            })?;
            values.push(v);
        }
    } else {
        for c in text.chars() {
            let v = c.to_digit(10).ok_or_else(|| Error::Parse {
                token: c.to_string(),
                reason: "not a digit".into(),
            })?;
            values.push(v as usize);
        }
    }
    if values.is_empty() {
        return Err(Error::Parse {
            token: text.to_string(),
            reason: "no elements".into(),
        });
    }
    Ok(values)
}

fn parse_cycle_groups(text: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        if !rest.starts_with('(') {
            return Err(Error::Parse {
                token: rest.chars().next().unwrap().to_string(),
                reason: "expected '('".into(),
            });
        }
        let close = rest.find(')').ok_or_else(|| Error::Parse {
            token: "(".into(),
            reason: "unclosed cycle".into(),
        })?;
        let body = &rest[1..close];
        let elements = parse_elements(body)?
            .into_iter()
            .map(|v| check_element(v, n))
            .collect::<Result<Vec<usize>>>()?;
        cycles.push(elements);
        rest = &rest[close + 1..];
    }
    if cycles.is_empty() {
        return Err(Error::Parse {
            token: text.to_string(),
            reason: "no cycles".into(),
        });
    }
    Ok(cycles)
}

impl CycleType {
    /// Normalizes the parts to weakly decreasing order; rejects zero parts.
    pub fn new(mut lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidCycleType("no parts".into()));
        }
        if lengths.contains(&0) {
            return Err(Error::InvalidCycleType("zero part".into()));
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { lengths })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let parts = text
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    token: t.trim().to_string(),
                    reason: "not a positive integer".into(),
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        CycleType::new(parts)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of cycles `m`.
    pub fn m(&self) -> usize {
        self.lengths.len()
    }

    /// Degree `n = l_1 + ... + l_m`.
    pub fn n(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn gcd(&self) -> usize {
        self.lengths.iter().fold(0, |g, &l| num_integer::gcd(g, l))
    }

    /// The standardized permutation of this type: consecutive blocks
    /// `(1..l_1)(l_1+1..l_1+l_2)...`.
    pub fn standard_form(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.n());
        let mut start = 0;
        for &l in &self.lengths {
            for i in 0..l {
                images.push(start + (i + 1) % l);
            }
            start += l;
        }
        Permutation::from_images(images).expect("blocks are disjoint")
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn partitions_of(n: usize) -> Vec<CycleType> {
        fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<CycleType>) {
            if remaining == 0 {
                out.push(CycleType {
                    lengths: current.clone(),
                });
                return;
            }
            for part in (1..=remaining.min(max)).rev() {
                current.push(part);
                go(remaining - part, part, current, out);
                current.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            go(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.lengths.iter().map(usize::to_string).join(","))
    }
}

/// Values attached to the pairs `(j,k)` with `j < k < m`, stored in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTable<T> {
    m: usize,
    entries: Vec<T>,
}

impl<T: Clone + Default> PairTable<T> {
    pub fn new(m: usize) -> Self {
        PairTable {
            m,
            entries: vec![T::default(); m * m.saturating_sub(1) / 2],
        }
    }
}

impl<T> PairTable<T> {
    fn idx(&self, j: usize, k: usize) -> usize {
        debug_assert!(j < k && k < self.m);
        j * (2 * self.m - j - 1) / 2 + (k - j - 1)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, j: usize, k: usize) -> &T {
        &self.entries[self.idx(j, k)]
    }

    pub fn get_mut(&mut self, j: usize, k: usize) -> &mut T {
        let i = self.idx(j, k);
        &mut self.entries[i]
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = ((usize, usize), &T)> {
        let m = self.m;
        (0..m)
            .flat_map(move |j| (j + 1..m).map(move |k| (j, k)))
            .zip(self.entries.iter())
            .map(|((j, k), v)| ((j, k), v))
    }
}

/// Inversions of `tau` split by the cycles of `sigma`: entry `(j,k)` counts
/// pairs `a < b` with `tau(a) > tau(b)`, `a` in cycle `j` and `b` in cycle
/// `k` of `sigma`. Mirrors the displayed definition used by the averaged-path
/// decomposition, which assumes `sigma` is in standardized form.
pub fn inversion_table(tau: &Permutation, sigma: &Permutation) -> Result<PairTable<u64>> {
    if tau.degree() != sigma.degree() {
        return Err(Error::DegreeMismatch {
            left: tau.degree(),
            right: sigma.degree(),
        });
    }
    let n = tau.degree();
    let mut cycle_index = vec![0usize; n];
    for (ci, cycle) in sigma.cycles().iter().enumerate() {
        for &e in cycle {
            cycle_index[e] = ci;
        }
    }
    let mut table = PairTable::new(sigma.cycle_count());
    for a in 0..n {
        for b in a + 1..n {
            if tau.image(a) > tau.image(b) {
                let (j, k) = (cycle_index[a], cycle_index[b]);
                if j < k {
                    *table.get_mut(j, k) += 1;
                }
            }
        }
    }
    Ok(table)
}

/// Every permutation of `[n]`, in lexicographic one-line order. `n!` items.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..n)
        .permutations(n)
        .map(|images| Permutation::from_images(images).expect("itertools yields bijections"))
}
