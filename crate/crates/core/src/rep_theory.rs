//! Exact combinatorics of su(d) irreps.
//!
//! Irreps are labelled by i-weights `(m_1 ≥ … ≥ m_d ≥ 0)`; tuples differing
//! by a constant shift label the same irrep and are keyed by their
//! normalized form (`m_d = 0`). Basis states are Gelfand-Tsetlin patterns,
//! equivalently semistandard Young tableaux filled with `0..d`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Non-increasing tuple of naturals labelling an su(d) irrep.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IWeight(Vec<u32>);

impl IWeight {
    pub fn new(m: Vec<u32>) -> Result<Self> {
        if m.is_empty() {
            return Err(Error::InvalidArgument("i-weight must have at least one entry".into()));
        }
        if m.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("i-weight {m:?} is not non-increasing")));
        }
        Ok(IWeight(m))
    }

    /// The standard (defining) representation `(1, 0, …, 0)`.
    pub fn standard(d: usize) -> Self {
        let mut m = vec![0; d];
        m[0] = 1;
        IWeight(m)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    /// Number of boxes of the Young diagram.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Shift so that the last entry is zero.
    pub fn normalized(&self) -> IWeight {
        let last = *self.0.last().unwrap();
        IWeight(self.0.iter().map(|&x| x - last).collect())
    }

    /// Shift-equivalent tuple with `size` boxes, if one exists.
    pub fn with_size(&self, size: u32) -> Option<IWeight> {
        let w = self.normalized();
        let (have, d) = (w.size(), w.d() as u32);
        if size < have || !(size - have).is_multiple_of(d) {
            return None;
        }
        let shift = (size - have) / d;
        Some(IWeight(w.0.iter().map(|x| x + shift).collect()))
    }

    pub fn same_irrep(&self, other: &IWeight) -> bool {
        self.d() == other.d() && self.normalized() == other.normalized()
    }

    /// `p_j = m_j − m_{j+1}`.
    pub fn quantum_numbers(&self) -> Vec<u32> {
        self.0.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// Inverse of [`IWeight::quantum_numbers`], normalized.
    pub fn from_quantum_numbers(p: &[u32]) -> IWeight {
        let mut m = vec![0u32; p.len() + 1];
        for j in (0..p.len()).rev() {
            m[j] = m[j + 1] + p[j];
        }
        IWeight(m)
    }
}

impl fmt::Display for IWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `∏_{r<s} (1 + (m_r − m_s)/(s − r))`, evaluated exactly.
pub fn irrep_dimension(w: &IWeight) -> u64 {
    let m = w.entries();
    let d = m.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for r in 0..d {
        for s in r + 1..d {
            num *= (m[r] - m[s]) as u128 + (s - r) as u128;
            den *= (s - r) as u128;
        }
    }
    debug_assert_eq!(num % den, 0);
    (num / den) as u64
}

/// Value of the quadratic Casimir on the irrep `w`, up to a positive,
/// `d`-dependent normalization: `Σ_i m_i (m_i − 2i + d + 1) − |m|²/d`.
///
/// With the `Tr(F_a F_b) = 2δ_ab` basis, the operator `Σ_a F̂_a²` acts on the
/// irrep as twice this value.
pub fn quadratic_casimir_value(w: &IWeight) -> f64 {
    let d = w.d() as f64;
    let total = w.size() as f64;
    let s: f64 = w
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let m = m as f64;
            m * (m - 2.0 * (i as f64 + 1.0) + d + 1.0)
        })
        .sum();
    s - total * total / d
}

/// Triangular array `m_{k,l}`, `l = d..1`, `k = 1..l`.
///
/// `rows[0]` is the top row (the i-weight) and `rows[d−1]` the single
/// bottom entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GTPattern {
    rows: Vec<Vec<u32>>,
}

impl GTPattern {
    /// Validates shape and betweenness `m_{k,l} ≥ m_{k,l−1} ≥ m_{k+1,l}`.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::Malformed("empty GT pattern".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d - i {
                return Err(Error::Malformed(format!(
                    "GT row {i} has {} entries, expected {}",
                    row.len(),
                    d - i
                )));
            }
        }
        for i in 1..d {
            let (above, below) = (&rows[i - 1], &rows[i]);
            for k in 0..below.len() {
                if !(above[k] >= below[k] && below[k] >= above[k + 1]) {
                    return Err(Error::Malformed(format!(
                        "betweenness violated at row {i}, position {k}"
                    )));
                }
            }
        }
        Ok(GTPattern { rows })
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn top(&self) -> IWeight {
        IWeight(self.rows[0].clone())
    }

    /// `m_{k,l}` with 1-based `k ≤ l ≤ d`.
    pub fn m(&self, k: usize, l: usize) -> u32 {
        self.rows[self.d() - l][k - 1]
    }

    /// `m_{k,l}`, or 0 outside the pattern (`l < k` or `l = 0`).
    fn m_or_zero(&self, k: usize, l: usize) -> u32 {
        if l == 0 || k > l {
            0
        } else {
            self.m(k, l)
        }
    }

    /// B-pattern `b_{k,l} = m_{k,l} − m_{k,l−1}`, same triangular layout.
    pub fn b_pattern(&self) -> Vec<Vec<u32>> {
        let d = self.d();
        (0..d)
            .map(|i| {
                let l = d - i;
                (1..=l).map(|k| self.m(k, l) - self.m_or_zero(k, l - 1)).collect()
            })
            .collect()
    }
}

/// All patterns with top row `w`, in lexicographically decreasing order
/// (the highest-weight pattern first).
pub fn enumerate_gt_patterns(w: &IWeight) -> Vec<GTPattern> {
    fn below_rows(above: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; above.len() - 1];
        fn rec(k: usize, above: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k == cur.len() {
                out.push(cur.clone());
                return;
            }
            for v in (above[k + 1]..=above[k]).rev() {
                cur[k] = v;
                rec(k + 1, above, cur, out);
            }
        }
        rec(0, above, &mut cur, &mut out);
        out
    }
    fn rec(rows: &mut Vec<Vec<u32>>, out: &mut Vec<GTPattern>) {
        let last = rows.last().unwrap().clone();
        if last.len() == 1 {
            out.push(GTPattern { rows: rows.clone() });
            return;
        }
        for row in below_rows(&last) {
            rows.push(row);
            rec(rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![w.entries().to_vec()];
    rec(&mut rows, &mut out);
    out
}

/// Semistandard Young tableau with entries in `0..d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SSYT {
    d: usize,
    rows: Vec<Vec<u32>>,
}

impl SSYT {
    /// `rows` lists the filling of each row of the diagram; the shape is the
    /// row lengths padded with zeros to `d` rows.
    pub fn new(d: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() > d {
            return Err(Error::Malformed(format!("{} rows exceed d={d}", rows.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().any(|&x| x as usize >= d) {
                return Err(Error::Malformed(format!("row {i} has an entry ≥ d={d}")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Malformed(format!("row {i} is not non-decreasing")));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row.len() > above.len() {
                    return Err(Error::Malformed(format!("row {i} longer than the row above")));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::Malformed(format!("column not strictly increasing at row {i}")));
                }
            }
        }
        Ok(SSYT { d, rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> IWeight {
        let mut m: Vec<u32> = self.rows.iter().map(|r| r.len() as u32).collect();
        m.resize(self.d, 0);
        IWeight(m)
    }
}

/// GT diagonals become tableau rows: row `k` holds `m_{k,l} − m_{k,l−1}`
/// copies of symbol `l − 1`.
pub fn gt_to_ssyt(p: &GTPattern) -> SSYT {
    let d = p.d();
    let mut rows = Vec::new();
    for k in 1..=d {
        let mut row = Vec::new();
        for l in k..=d {
            let count = p.m(k, l) - p.m_or_zero(k, l - 1);
            row.extend(std::iter::repeat_n((l - 1) as u32, count as usize));
        }
        if !row.is_empty() || k == 1 {
            rows.push(row);
        }
    }
    // Drop trailing empty rows so the tableau matches its diagram.
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    SSYT { d, rows }
}

/// `m_{k,l}` = number of entries `< l` in tableau row `k`.
pub fn ssyt_to_gt(t: &SSYT) -> Result<GTPattern> {
    let d = t.d;
    let rows = (0..d)
        .map(|i| {
            let l = d - i;
            (1..=l)
                .map(|k| {
                    t.rows
                        .get(k - 1)
                        .map_or(0, |r| r.iter().filter(|&&x| (x as usize) < l).count() as u32)
                })
                .collect()
        })
        .collect();
    GTPattern::new(rows)
}

/// Occupation numbers `(w_1, …, w_d)`: `w_l = σ_l − σ_{l−1}` with `σ_l` the
/// sum of the GT row of length `l`.
pub fn weight_vector(p: &GTPattern) -> Vec<u32> {
    let d = p.d();
    let sigma = |l: usize| -> u32 {
        if l == 0 {
            0
        } else {
            p.rows[d - l].iter().sum()
        }
    };
    (1..=d).map(|l| sigma(l) - sigma(l - 1)).collect()
}

/// `S_z^l` eigenvalue `(w_l − w_{l+1})/2`, `1 ≤ l ≤ d−1`.
pub fn sz_eigenvalue(p: &GTPattern, l: usize) -> Result<Rational64> {
    let d = p.d();
    if l == 0 || l >= d {
        return Err(Error::InvalidArgument(format!("l={l} out of range 1..={}", d - 1)));
    }
    let w = weight_vector(p);
    Ok(Rational64::new(w[l - 1] as i64 - w[l] as i64, 2))
}

/// I-weights occurring in `w ⊗ (1,0,…,0)`: add one box to any row that
/// keeps the tuple non-increasing. Each occurs once.
pub fn tensor_with_standard(w: &IWeight) -> Vec<IWeight> {
    let m = w.entries();
    (0..m.len())
        .filter(|&i| i == 0 || m[i - 1] > m[i])
        .map(|i| {
            let mut next = m.to_vec();
            next[i] += 1;
            IWeight(next)
        })
        .collect()
}

/// Irreps with multiplicities, keyed by normalized i-weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepMultiset {
    entries: BTreeMap<IWeight, u64>,
}

impl IrrepMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, w: &IWeight, k: u64) {
        if k > 0 {
            *self.entries.entry(w.normalized()).or_insert(0) += k;
        }
    }

    pub fn multiplicity(&self, w: &IWeight) -> u64 {
        self.entries.get(&w.normalized()).copied().unwrap_or(0)
    }

    /// Entries in decreasing i-weight order.
    pub fn entries(&self) -> Vec<(IWeight, u64)> {
        self.entries.iter().rev().map(|(w, &k)| (w.clone(), k)).collect()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// `Σ k_λ dim(λ)`.
    pub fn total_dim(&self) -> u64 {
        self.entries.iter().map(|(w, k)| k * irrep_dimension(w)).sum()
    }

    /// `Σ_λ dim(λ)²` over distinct irreps.
    pub fn sum_dim_squared(&self) -> u64 {
        self.entries.keys().map(|w| irrep_dimension(w).pow(2)).sum()
    }
}

/// Tensor product decomposition by walking the B-patterns of a basis of
/// `sprime` over the i-weight of `s`.
pub fn algorithm1_decompose(s: &IWeight, sprime: &IWeight) -> Result<IrrepMultiset> {
    if s.d() != sprime.d() {
        return Err(Error::DimensionMismatch {
            left: s.d(),
            right: sprime.d(),
        });
    }
    let d = s.d();
    let mut out = IrrepMultiset::new();
    for p in enumerate_gt_patterns(sprime) {
        if let Some(w) = walk_b_pattern(s, &p.b_pattern()) {
            out.add(&w, 1);
        }
    }
    debug_assert!(out.entries.keys().all(|w| w.d() == d));
    Ok(out)
}

/// Adds `b_{k,l}` to entry `l` for each diagonal `k = 1..d`, `l = d..k`,
/// aborting as soon as an intermediate tuple is not non-increasing.
fn walk_b_pattern(s: &IWeight, b: &[Vec<u32>]) -> Option<IWeight> {
    let d = s.d();
    let mut cur = s.entries().to_vec();
    for k in 1..=d {
        for l in (k..=d).rev() {
            let add = b[d - l][k - 1];
            if add == 0 {
                continue;
            }
            cur[l - 1] += add;
            if cur.windows(2).any(|w| w[0] < w[1]) {
                return None;
            }
        }
    }
    Some(IWeight(cur))
}

/// All non-increasing `d`-tuples of naturals summing to `n`, decreasing
/// lexicographic order.
pub fn partitions(n: u32, d: usize) -> Vec<Vec<u32>> {
    fn rec(left: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let hi = left.min(max);
        for v in (0..=hi).rev() {
            // Remaining slots can hold at most v each.
            if (v as u64) * (slots as u64) < left as u64 {
                break;
            }
            cur.push(v);
            rec(left - v, v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, d, &mut Vec::new(), &mut out);
    out
}

/// Multiplicities of `(ℂ^d)^{⊗n}` via
/// `k_{(m_1,…,m_d)} = Σ_i k_{(…, m_i − 1, …)}`, `k_{(1,0,…,0)} = 1`.
pub fn cg_decompose(n: usize, d: usize) -> Result<IrrepMultiset> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be ≥ 1".into()));
    }
    if d < 2 {
        return Err(Error::InvalidArgument("d must be ≥ 2".into()));
    }
    fn k(m: &[u32], memo: &mut HashMap<Vec<u32>, u64>) -> u64 {
        let total: u32 = m.iter().sum();
        if total == 1 {
            return u64::from(m[0] == 1);
        }
        if let Some(&v) = memo.get(m) {
            return v;
        }
        let mut acc = 0;
        for i in 0..m.len() {
            if m[i] == 0 {
                continue;
            }
            let mut prev = m.to_vec();
            prev[i] -= 1;
            if prev.windows(2).all(|w| w[0] >= w[1]) {
                acc += k(&prev, memo);
            }
        }
        memo.insert(m.to_vec(), acc);
        acc
    }
    let mut memo = HashMap::new();
    let mut out = IrrepMultiset::new();
    for m in partitions(n as u32, d) {
        let mult = k(&m, &mut memo);
        out.add(&IWeight(m), mult);
    }
    Ok(out)
}

/// `f(n, 1) = 1`, `f(n, d) = Σ_{j=0}^{⌊n/d⌋} f(n − jd, d − 1)`.
pub fn center_dimension(n: usize, d: usize) -> u64 {
    if d <= 1 {
        return 1;
    }
    (0..=n / d).map(|j| center_dimension(n - j * d, d - 1)).sum()
}

/// Quantum-number labels of the irreps in `(ℂ^d)^{⊗n}` for `d ∈ {2, 3}`.
pub fn admissible_reps(n: usize, d: usize) -> Result<Vec<Vec<u32>>> {
    match d {
        2 => Ok((0..=n / 2).map(|j| vec![(n - 2 * j) as u32]).collect()),
        3 => {
            let mut out = Vec::new();
            for i in 0..=n / 3 {
                let m = n - 3 * i;
                for j in 0..=m / 2 {
                    out.push(vec![(m - 2 * j) as u32, j as u32]);
                }
            }
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!("admissible_reps is defined for d ∈ {{2,3}}, got {d}"))),
    }
}

/// `C(n, k)` in u128.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Real dimension of `u^{S_n}(d^n)`: `C(n + d² − 1, d² − 1)`.
pub fn symmetric_algebra_dimension(n: usize, d: usize) -> u128 {
    let k = (d * d - 1) as u64;
    binomial(n as u64 + k, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iw(m: &[u32]) -> IWeight {
        IWeight::new(m.to_vec()).unwrap()
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(irrep_dimension(&iw(&[2, 1, 0])), 8);
        assert_eq!(irrep_dimension(&iw(&[3, 0, 0])), 10);
        assert_eq!(irrep_dimension(&iw(&[1, 1, 1])), 1);
        assert_eq!(irrep_dimension(&iw(&[4, 0])), 5);
    }

    #[test]
    fn iweight_validation_and_normalization() {
        assert!(IWeight::new(vec![1, 2]).is_err());
        assert!(IWeight::new(vec![]).is_err());
        let a = iw(&[3, 2, 1]);
        assert!(a.same_irrep(&iw(&[2, 1, 0])));
        assert_eq!(a.quantum_numbers(), vec![1, 1]);
        assert_eq!(IWeight::from_quantum_numbers(&[5, 2]), iw(&[7, 2, 0]));
        assert_eq!(iw(&[1, 0]).with_size(3), Some(iw(&[2, 1])));
        assert_eq!(iw(&[0, 0, 0]).with_size(3), Some(iw(&[1, 1, 1])));
        assert_eq!(iw(&[1, 0]).with_size(2), None);
    }

    #[test]
    fn adjoint_patterns_in_order() {
        let ps = enumerate_gt_patterns(&iw(&[2, 1, 0]));
        assert_eq!(ps.len(), 8);
        let middles: Vec<(Vec<u32>, u32)> = ps.iter().map(|p| (p.rows()[1].clone(), p.rows()[2][0])).collect();
        assert_eq!(
            middles,
            vec![
                (vec![2, 1], 2),
                (vec![2, 1], 1),
                (vec![2, 0], 2),
                (vec![2, 0], 1),
                (vec![2, 0], 0),
                (vec![1, 1], 1),
                (vec![1, 0], 1),
                (vec![1, 0], 0),
            ]
        );
        assert_eq!(enumerate_gt_patterns(&iw(&[1, 0, 0])).len(), 3);
        assert_eq!(enumerate_gt_patterns(&iw(&[4])).len(), 1);
    }

    #[test]
    fn gt_pattern_validation() {
        assert!(GTPattern::new(vec![vec![2, 1, 0], vec![2, 2], vec![2]]).is_err());
        assert!(GTPattern::new(vec![vec![2, 1, 0], vec![2, 0]]).is_err());
        assert!(GTPattern::new(vec![vec![2, 1, 0], vec![2, 0], vec![1]]).is_ok());
    }

    #[test]
    fn ssyt_conversion_examples() {
        let ps = enumerate_gt_patterns(&iw(&[2, 1, 0]));
        let a5 = gt_to_ssyt(&ps[4]);
        assert_eq!(a5.rows(), &[vec![1, 1], vec![2]]);
        let a1 = gt_to_ssyt(&ps[0]);
        assert_eq!(a1.rows(), &[vec![0, 0], vec![1]]);
        for p in &ps {
            assert_eq!(&ssyt_to_gt(&gt_to_ssyt(p)).unwrap(), p);
        }
        let std = enumerate_gt_patterns(&iw(&[1, 0, 0]));
        let bottom_one = std.iter().find(|p| p.m(1, 1) == 1).unwrap();
        assert_eq!(gt_to_ssyt(bottom_one).rows(), &[vec![0]]);
    }

    #[test]
    fn ssyt_validation() {
        assert!(SSYT::new(3, vec![vec![1, 0]]).is_err());
        assert!(SSYT::new(3, vec![vec![0, 1], vec![0]]).is_err());
        assert!(SSYT::new(3, vec![vec![0], vec![1, 2]]).is_err());
        assert!(SSYT::new(3, vec![vec![0, 3]]).is_err());
        assert!(SSYT::new(3, vec![vec![0, 1], vec![2]]).is_ok());
    }

    #[test]
    fn weights_of_adjoint() {
        let ps = enumerate_gt_patterns(&iw(&[2, 1, 0]));
        let ws: Vec<Vec<u32>> = ps.iter().map(weight_vector).collect();
        assert_eq!(
            ws,
            vec![
                vec![2, 1, 0],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![1, 1, 1],
                vec![0, 2, 1],
                vec![1, 1, 1],
                vec![1, 0, 2],
                vec![0, 1, 2],
            ]
        );
        let std = enumerate_gt_patterns(&iw(&[1, 0, 0, 0]));
        assert_eq!(weight_vector(std.last().unwrap()), vec![0, 0, 0, 1]);
    }

    #[test]
    fn sz_eigenvalues() {
        let ps = enumerate_gt_patterns(&iw(&[2, 1, 0]));
        assert_eq!(sz_eigenvalue(&ps[0], 1).unwrap(), Rational64::new(1, 2));
        assert_eq!(sz_eigenvalue(&ps[3], 1).unwrap(), Rational64::new(0, 1));
        let hw = &enumerate_gt_patterns(&IWeight::from_quantum_numbers(&[5, 2]))[0];
        assert_eq!(sz_eigenvalue(hw, 1).unwrap(), Rational64::new(5, 2));
        assert!(sz_eigenvalue(hw, 3).is_err());
    }

    #[test]
    fn tensor_with_standard_examples() {
        assert_eq!(tensor_with_standard(&iw(&[1, 0, 0])), vec![iw(&[2, 0, 0]), iw(&[1, 1, 0])]);
        assert_eq!(
            tensor_with_standard(&iw(&[2, 1, 0])),
            vec![iw(&[3, 1, 0]), iw(&[2, 2, 0]), iw(&[2, 1, 1])]
        );
        assert_eq!(tensor_with_standard(&iw(&[4])), vec![iw(&[5])]);
    }

    #[test]
    fn algorithm1_worked_example() {
        let a1 = &enumerate_gt_patterns(&iw(&[2, 1, 0]))[0];
        assert_eq!(a1.b_pattern(), vec![vec![0, 0, 0], vec![0, 1], vec![2]]);
        assert_eq!(walk_b_pattern(&iw(&[3, 2, 0]), &a1.b_pattern()), Some(iw(&[5, 3, 0])));
    }

    #[test]
    fn algorithm1_with_standard_matches_rule() {
        for w in [iw(&[1, 0, 0]), iw(&[2, 1, 0]), iw(&[3, 3, 1]), iw(&[2, 2, 2])] {
            let a = algorithm1_decompose(&w, &IWeight::standard(3)).unwrap();
            let mut b = IrrepMultiset::new();
            for x in tensor_with_standard(&w) {
                b.add(&x, 1);
            }
            assert_eq!(a, b, "{w}");
        }
    }

    #[test]
    fn adjoint_squared() {
        let r = algorithm1_decompose(&iw(&[2, 1, 0]), &iw(&[2, 1, 0])).unwrap();
        assert_eq!(r.total_dim(), 64);
        assert_eq!(r.multiplicity(&iw(&[4, 2, 0])), 1);
        assert_eq!(r.multiplicity(&iw(&[3, 3, 0])), 1);
        assert_eq!(r.multiplicity(&iw(&[3, 0, 0])), 1);
        assert_eq!(r.multiplicity(&iw(&[2, 1, 0])), 2);
        assert_eq!(r.multiplicity(&iw(&[0, 0, 0])), 1);
    }

    #[test]
    fn cg_examples() {
        let q3 = cg_decompose(3, 3).unwrap();
        assert_eq!(q3.distinct(), 3);
        assert_eq!(q3.multiplicity(&iw(&[3, 0, 0])), 1);
        assert_eq!(q3.multiplicity(&iw(&[2, 1, 0])), 2);
        assert_eq!(q3.multiplicity(&iw(&[1, 1, 1])), 1);
        let b3 = cg_decompose(3, 2).unwrap();
        assert_eq!(b3.entries(), vec![(iw(&[3, 0]), 1), (iw(&[2, 1]).normalized(), 2)]);
        assert!(cg_decompose(0, 2).is_err());
        assert!(cg_decompose(2, 1).is_err());
    }

    #[test]
    fn center_dimension_examples() {
        for n in 1..12 {
            assert_eq!(center_dimension(n, 2), (n / 2 + 1) as u64);
        }
        assert_eq!(center_dimension(3, 3), 3);
        assert_eq!(center_dimension(4, 4), 5);
        for d in 2..=4 {
            for n in 1..=6 {
                assert_eq!(center_dimension(n, d), cg_decompose(n, d).unwrap().distinct() as u64);
            }
        }
    }

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible_reps(3, 2).unwrap(), vec![vec![3], vec![1]]);
        assert_eq!(admissible_reps(3, 3).unwrap(), vec![vec![3, 0], vec![1, 1], vec![0, 0]]);
        assert!(admissible_reps(3, 4).is_err());
        for n in 1..10 {
            for d in [2, 3] {
                assert_eq!(admissible_reps(n, d).unwrap().len() as u64, center_dimension(n, d));
            }
        }
    }

    #[test]
    fn casimir_value_matches_su3_formula() {
        // 3·value = c2(p,q) = p² + q² + 3(p+q) + pq for su(3).
        for p in 0..6u32 {
            for q in 0..6u32 {
                let w = IWeight::from_quantum_numbers(&[p, q]);
                let c2 = (p * p + q * q + 3 * (p + q) + p * q) as f64;
                assert!((3.0 * quadratic_casimir_value(&w) - 2.0 * c2).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(11, 8), 165);
        assert_eq!(symmetric_algebra_dimension(3, 3), 165);
        assert_eq!(symmetric_algebra_dimension(2, 4), 136);
    }
}
