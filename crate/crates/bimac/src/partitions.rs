//! Partitions, pairs of partitions and superpartitions.
//!
//! Cells are addressed as `(row, column)` starting from `(1, 1)` in the top
//! left corner (English convention).

use num_bigint::BigInt;
use num_traits::One;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("fermionic parts must be strictly decreasing: {0:?}")]
    NotStrict(Vec<usize>),
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutside(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(String, String),
    #[error("partition {0} has more than {1} parts")]
    TooLong(String, usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// A weakly decreasing list of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// Arm, leg, coarm and coleg of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CellStats {
    pub arm: usize,
    pub leg: usize,
    pub coarm: usize,
    pub coleg: usize,
}

impl Partition {
    /// Validates the parts; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition(parts)
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)` (empty for `n = 0`).
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row) >= col
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn arm(&self, row: usize, col: usize) -> usize {
        self.part(row) - col
    }

    pub fn leg(&self, row: usize, col: usize) -> usize {
        self.conjugate().part(col) - row
    }

    pub fn cell_stats(&self, row: usize, col: usize) -> Result<CellStats, PartitionError> {
        if !self.contains_cell(row, col) {
            return Err(PartitionError::CellOutside(row, col));
        }
        Ok(CellStats {
            arm: self.arm(row, col),
            leg: self.leg(row, col),
            coarm: col - 1,
            coleg: row - 1,
        })
    }

    /// `n(λ) = Σ (i−1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Multiplicity of each part size, indexed by the part size.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(1) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = Π i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &mi) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=mi {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// Partial sums `λ_1 + … + λ_k` for `k = 1..=len`.
    pub fn partial_sums(&self, len: usize) -> Vec<usize> {
        let mut acc = 0;
        (1..=len)
            .map(|k| {
                acc += self.part(k);
                acc
            })
            .collect()
    }

    /// Union of multisets of parts.
    pub fn union(&self, o: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Self::from_unsorted(v)
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of `n` with at most `k` parts.
    pub fn all_with_max_len(n: usize, k: usize) -> Vec<Partition> {
        Self::all(n).into_iter().filter(|p| p.len() <= k).collect()
    }

    /// Partitions obtained by adding one cell.
    pub fn add_cell_options(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            let cur = self.part(i + 1);
            let above = if i == 0 { usize::MAX } else { self.part(i) };
            if cur < above {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out
    }

    /// Removable corners as 1-based row indices.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "∅" || s == "-" || s == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts)
    }
}

/// Dominance `a ≤ b`. Unequal sizes are incomparable unless `relaxed`.
pub fn dominance_leq(a: &Partition, b: &Partition, relaxed: bool) -> bool {
    if !relaxed && a.size() != b.size() {
        return false;
    }
    let len = a.len().max(b.len());
    a.partial_sums(len)
        .iter()
        .zip(b.partial_sums(len))
        .all(|(x, y)| *x <= y)
}

/// A pair of partitions `(λ, μ)`: the label of a double Macdonald polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PairLabel {
    pub lam: Partition,
    pub mu: Partition,
}

impl PairLabel {
    pub fn new(lam: Partition, mu: Partition) -> Self {
        PairLabel { lam, mu }
    }

    pub fn of(lam: &[usize], mu: &[usize]) -> Self {
        PairLabel::new(Partition::of(lam), Partition::of(mu))
    }

    pub fn degree(&self) -> usize {
        self.lam.size() + self.mu.size()
    }

    /// `(μ', λ')`.
    pub fn dual(&self) -> PairLabel {
        PairLabel::new(self.mu.conjugate(), self.lam.conjugate())
    }

    /// All pairs of total degree `n`.
    pub fn all(n: usize) -> Vec<PairLabel> {
        Self::all_with_max_len(n, usize::MAX)
    }

    /// Pairs of total degree `n` with `ℓ(λ) ≤ k`.
    pub fn all_with_max_len(n: usize, k: usize) -> Vec<PairLabel> {
        let mut out = Vec::new();
        for a in (0..=n).rev() {
            for lam in Partition::all_with_max_len(a, k) {
                for mu in Partition::all(n - a) {
                    out.push(PairLabel::new(lam.clone(), mu));
                }
            }
        }
        out
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.lam, self.mu)
    }
}

impl FromStr for PairLabel {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once('|').ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        Ok(PairLabel::new(a.parse()?, b.parse()?))
    }
}

/// Dominance on pairs: `a ≤ b` iff `λ_a ≤ λ_b` and `|λ_a| + μ_a ≤ |λ_b| + μ_b`
/// in the relaxed partial-sum sense.
pub fn pair_dominance_leq(a: &PairLabel, b: &PairLabel) -> Result<bool, PartitionError> {
    if a.degree() != b.degree() {
        return Err(PartitionError::DegreeMismatch(a.to_string(), b.to_string()));
    }
    if !dominance_leq(&a.lam, &b.lam, true) {
        return Ok(false);
    }
    let len = a.mu.len().max(b.mu.len());
    let sa = a.mu.partial_sums(len);
    let sb = b.mu.partial_sums(len);
    let (la, lb) = (a.lam.size(), b.lam.size());
    Ok(la <= lb && sa.iter().zip(sb).all(|(x, y)| la + x <= lb + y))
}

/// A superpartition `(Λ^a; Λ^s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SuperPartition {
    anti: Vec<usize>,
    sym: Partition,
}

/// One row of a superpartition diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramRow {
    /// Number of boxes.
    pub boxes: usize,
    /// Whether the row ends with a circle.
    pub circle: bool,
}

/// Box statistics of a superpartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperStats {
    pub bosonic_boxes: Vec<(usize, usize)>,
    pub fermionic_boxes: Vec<(usize, usize)>,
    pub d_b: usize,
    pub d_f: usize,
    pub n_skew: usize,
}

impl SuperPartition {
    pub fn new(anti: Vec<usize>, sym: Partition) -> Result<Self, PartitionError> {
        if anti.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrict(anti));
        }
        Ok(SuperPartition { anti, sym })
    }

    pub fn of(anti: &[usize], sym: &[usize]) -> Self {
        Self::new(anti.to_vec(), Partition::of(sym)).expect("valid superpartition literal")
    }

    pub fn anti(&self) -> &[usize] {
        &self.anti
    }

    pub fn sym(&self) -> &Partition {
        &self.sym
    }

    /// Fermionic degree.
    pub fn m(&self) -> usize {
        self.anti.len()
    }

    /// Bosonic degree `|Λ^a| + |Λ^s|`.
    pub fn size(&self) -> usize {
        self.anti.iter().sum::<usize>() + self.sym.size()
    }

    /// `Λ*`.
    pub fn star(&self) -> Partition {
        self.sym.union(&Partition::from_unsorted(self.anti.clone()))
    }

    /// `Λ⊛`.
    pub fn circ(&self) -> Partition {
        self.sym
            .union(&Partition::from_unsorted(self.anti.iter().map(|a| a + 1).collect()))
    }

    /// `Λ^a` as a partition (a trailing zero part is dropped).
    pub fn anti_partition(&self) -> Partition {
        Partition::from_unsorted(self.anti.clone())
    }

    /// Diagram rows from top to bottom. Among rows of equal total length
    /// (boxes plus circle) the rows without a circle come first.
    pub fn rows(&self) -> Vec<DiagramRow> {
        let mut rows: Vec<DiagramRow> = self
            .anti
            .iter()
            .map(|&a| DiagramRow { boxes: a, circle: true })
            .chain(self.sym.parts().iter().map(|&s| DiagramRow { boxes: s, circle: false }))
            .collect();
        rows.sort_by(|x, y| {
            let lx = x.boxes + x.circle as usize;
            let ly = y.boxes + y.circle as usize;
            ly.cmp(&lx).then(x.circle.cmp(&y.circle))
        });
        rows
    }

    /// `Λ = (λ + δ^m; μ)` for `ℓ(λ) ≤ m`.
    pub fn from_pair(p: &PairLabel, m: usize) -> Result<Self, PartitionError> {
        if p.lam.len() > m {
            return Err(PartitionError::TooLong(p.lam.to_string(), m));
        }
        let anti = (1..=m).map(|i| p.lam.part(i) + (m - i)).collect();
        Ok(SuperPartition {
            anti,
            sym: p.mu.clone(),
        })
    }

    /// `(Λ^a − δ^m, Λ^s)`.
    pub fn to_pair(&self) -> PairLabel {
        let m = self.m();
        let lam = Partition::from_unsorted(
            self.anti
                .iter()
                .enumerate()
                .map(|(i, &a)| a - (m - 1 - i))
                .collect(),
        );
        PairLabel::new(lam, self.sym.clone())
    }

    /// Rebuilds a superpartition from `Λ*` and `Λ⊛`.
    pub fn from_star_circ(star: &Partition, circ: &Partition) -> Result<Self, PartitionError> {
        let mut anti = Vec::new();
        let mut sym = Vec::new();
        for i in 1..=circ.len().max(star.len()) {
            let (s, c) = (star.part(i), circ.part(i));
            if c == s + 1 {
                anti.push(s);
            } else if c == s {
                sym.push(s);
            } else {
                return Err(PartitionError::Parse(format!("{} / {}", star, circ)));
            }
        }
        Self::new(anti, Partition::new(sym)?)
    }

    /// Transposition of the diagram, circles included.
    pub fn conjugate(&self) -> SuperPartition {
        Self::from_star_circ(&self.star().conjugate(), &self.circ().conjugate())
            .expect("conjugate of a superpartition diagram is a superpartition")
    }

    /// Diagram cell classification and statistics.
    pub fn stats(&self) -> SuperStats {
        let rows = self.rows();
        let circ = self.circ();
        let circ_conj = circ.conjugate();
        // Column j ends in a circle iff its lowest cell is a circle.
        let col_ends_in_circle = |j: usize| -> bool {
            let bottom = circ_conj.part(j);
            bottom >= 1 && rows[bottom - 1].circle && rows[bottom - 1].boxes + 1 == j
        };
        let mut bosonic = Vec::new();
        let mut fermionic = Vec::new();
        for (i, r) in rows.iter().enumerate() {
            for j in 1..=r.boxes {
                if r.circle && col_ends_in_circle(j) {
                    fermionic.push((i + 1, j));
                } else {
                    bosonic.push((i + 1, j));
                }
            }
        }
        let count_above_outside = |cell: &(usize, usize), set: &[(usize, usize)]| -> usize {
            (1..cell.0)
                .filter(|&i| rows[i - 1].boxes >= cell.1 && !set.contains(&(i, cell.1)))
                .count()
        };
        let d_b = bosonic.iter().map(|c| count_above_outside(c, &bosonic)).sum();
        let d_f = fermionic.iter().map(|c| count_above_outside(c, &fermionic)).sum();
        let m = self.m();
        let n_delta: usize = (1..=m + 1).map(|i| (i - 1) * (m + 1 - i)).sum();
        SuperStats {
            bosonic_boxes: bosonic,
            fermionic_boxes: fermionic,
            d_b,
            d_f,
            n_skew: circ.n_stat() - n_delta,
        }
    }

    /// Cells of `Λ⊛ / δ^{m+1}`.
    pub fn skew_cells(&self) -> Vec<(usize, usize)> {
        let m = self.m();
        self.circ()
            .cells()
            .filter(|&(i, j)| i > m + 1 || j > m + 1 - i)
            .collect()
    }

    /// Superpartitions whose pair has degree `n` and fermionic degree `m`.
    pub fn sector(n: usize, m: usize) -> Vec<SuperPartition> {
        PairLabel::all_with_max_len(n, m)
            .iter()
            .map(|p| Self::from_pair(p, m).expect("length bounded by m"))
            .collect()
    }

    /// Superpartitions with `|Λ*| = total` and fermionic degree `m`.
    pub fn of_bidegree(total: usize, m: usize) -> Vec<SuperPartition> {
        let shift = m * m.saturating_sub(1) / 2;
        if total < shift {
            return Vec::new();
        }
        Self::sector(total - shift, m)
    }

    /// Superpartitions obtained by turning one circle into a box, with the
    /// number of circles in rows above the converted one.
    pub fn circle_to_box(&self) -> Vec<(SuperPartition, usize)> {
        let rows = self.rows();
        let mut out = Vec::new();
        let mut circles_above = 0;
        for r in rows.iter() {
            if r.circle {
                let mut anti = self.anti.clone();
                let pos = anti.iter().position(|&a| a == r.boxes).expect("row from anti");
                anti.remove(pos);
                let sym = self.sym.union(&Partition::row(r.boxes + 1));
                out.push((SuperPartition { anti, sym }, circles_above));
                circles_above += 1;
            }
        }
        out
    }

    /// Fermionic degree-one superpartitions `Λ` with `Λ⊛ = λ`.
    pub fn with_circle_from(lam: &Partition) -> Vec<SuperPartition> {
        lam.removable_rows()
            .into_iter()
            .map(|i| {
                let mut rest = lam.parts().to_vec();
                let a = rest.remove(i - 1) - 1;
                SuperPartition {
                    anti: vec![a],
                    sym: Partition::from_unsorted(rest),
                }
            })
            .collect()
    }
}

impl fmt::Display for SuperPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.anti.iter().map(|p| p.to_string()).collect();
        let s: Vec<String> = self.sym.parts().iter().map(|p| p.to_string()).collect();
        write!(f, "{};{}", a.join(","), s.join(","))
    }
}

impl FromStr for SuperPartition {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = s.split_once(';').ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        let anti: Result<Vec<usize>, _> = if a.trim().is_empty() {
            Ok(Vec::new())
        } else {
            a.split(',').map(|x| x.trim().parse::<usize>()).collect()
        };
        let anti = anti.map_err(|_| PartitionError::Parse(s.to_string()))?;
        let sym: Partition = if b.trim().is_empty() { Partition::empty() } else { b.parse()? };
        SuperPartition::new(anti, sym)
    }
}

/// Dominance on superpartitions: `Λ ≤ Ω` iff `Λ* ≤ Ω*` and `Λ⊛ ≤ Ω⊛`.
pub fn super_dominance_leq(a: &SuperPartition, b: &SuperPartition) -> Result<bool, PartitionError> {
    if a.m() != b.m() || a.size() != b.size() {
        return Err(PartitionError::DegreeMismatch(a.to_string(), b.to_string()));
    }
    Ok(dominance_leq(&a.star(), &b.star(), false) && dominance_leq(&a.circ(), &b.circ(), false))
}

/// Orders `labels` so that every label comes after all labels below it.
///
/// Among the minimal remaining labels the smallest under `Ord` is taken
/// first, which fixes a deterministic linear extension.
pub fn linear_extension<L: Clone + Ord>(labels: &[L], leq: impl Fn(&L, &L) -> bool) -> Vec<L> {
    let mut rest: Vec<L> = labels.to_vec();
    rest.sort();
    rest.dedup();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let pos = (0..rest.len())
            .find(|&i| {
                (0..rest.len()).all(|j| j == i || !leq(&rest[j], &rest[i]))
            })
            .expect("a partial order has a minimal element");
        out.push(rest.remove(pos));
    }
    out
}
