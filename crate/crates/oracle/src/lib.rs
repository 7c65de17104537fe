//! Brute-force reference computations for cross-checking `pid-core`.
//!
//! Everything is derived directly from definitions: subsets are bitmasks,
//! parthood distributions are truth tables found by exhaustive search, and
//! information terms are computed from a raw pmf with hash maps.

use std::collections::HashMap;

/// A family of subsets, each a bitmask over sources `0..n`.
pub type Family = Vec<u32>;

pub fn is_subset(a: u32, b: u32) -> bool {
    a & b == a
}

/// All monotone Boolean functions on the subsets of `n` elements, as truth
/// tables indexed by subset bitmask. Exhaustive; `n ≤ 4`.
pub fn monotone_functions(n: usize) -> Vec<Vec<bool>> {
    assert!(n <= 4, "brute force is limited to four sources");
    let size = 1usize << n;
    let mut out = Vec::new();
    for code in 0u64..(1u64 << size) {
        let f: Vec<bool> = (0..size).map(|b| code >> b & 1 == 1).collect();
        let monotone = (0..size).all(|a| (0..size).all(|b| !(is_subset(a as u32, b as u32) && f[a] && !f[b])));
        if monotone {
            out.push(f);
        }
    }
    out
}

/// Number of monotone Boolean functions (the Dedekind number).
pub fn dedekind(n: usize) -> usize {
    monotone_functions(n).len()
}

/// Monotone functions with `f(∅) = 0` and `f([n]) = 1`.
pub fn parthood_distributions(n: usize) -> Vec<Vec<bool>> {
    let full = (1usize << n) - 1;
    monotone_functions(n).into_iter().filter(|f| !f[0] && f[full]).collect()
}

/// All antichains of subsets, found by filtering every family.
pub fn antichains(n: usize) -> Vec<Family> {
    assert!(n <= 4, "brute force is limited to four sources");
    let size = 1usize << n;
    let mut out = Vec::new();
    for code in 0u64..(1u64 << size) {
        let fam: Family = (0..size as u32).filter(|&b| code >> b & 1 == 1).collect();
        let ok = fam
            .iter()
            .all(|&a| fam.iter().all(|&b| a == b || (!is_subset(a, b) && !is_subset(b, a))));
        if ok {
            out.push(fam);
        }
    }
    out
}

/// The truth table as a bit pattern, bit `b` holding `f(b)`.
pub fn table_bits(f: &[bool]) -> u32 {
    f.iter().enumerate().filter(|(_, &v)| v).fold(0, |t, (b, _)| t | 1 << b)
}

/// Minimal subsets with `f = 1`.
pub fn minimal_ones(f: &[bool]) -> Family {
    let size = f.len() as u32;
    (0..size)
        .filter(|&b| f[b as usize] && (0..size).all(|c| c == b || !is_subset(c, b) || !f[c as usize]))
        .collect()
}

/// Maximal subsets with `f = 0`.
pub fn maximal_zeros(f: &[bool]) -> Family {
    let size = f.len() as u32;
    (0..size)
        .filter(|&b| !f[b as usize] && (0..size).all(|c| c == b || !is_subset(b, c) || f[c as usize]))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantifier {
    Sufficient,
    Necessary,
    Insufficient,
    Unnecessary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Superset,
    Subset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Parthood,
    NonParthood,
}

/// "Being a `rel` of some `a ∈ α` is `quantifier` for `part`."
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionId {
    pub quantifier: Quantifier,
    pub rel: Rel,
    pub part: Part,
}

impl ConditionId {
    /// All sixteen combinations.
    pub fn all() -> Vec<ConditionId> {
        let mut out = Vec::new();
        for quantifier in [
            Quantifier::Sufficient,
            Quantifier::Necessary,
            Quantifier::Insufficient,
            Quantifier::Unnecessary,
        ] {
            for rel in [Rel::Superset, Rel::Subset] {
                for part in [Part::Parthood, Part::NonParthood] {
                    out.push(ConditionId { quantifier, rel, part });
                }
            }
        }
        out
    }

    /// Same wording as the engine's `Display`.
    pub fn label(&self) -> String {
        let q = match self.quantifier {
            Quantifier::Sufficient => "sufficient",
            Quantifier::Necessary => "necessary",
            Quantifier::Insufficient => "insufficient",
            Quantifier::Unnecessary => "unnecessary",
        };
        let r = match self.rel {
            Rel::Superset => "superset",
            Rel::Subset => "subset",
        };
        let p = match self.part {
            Part::Parthood => "parthood",
            Part::NonParthood => "non-parthood",
        };
        format!("{r} {q} for {p}")
    }
}

/// Literal evaluation: `X` sufficient for `P` is `∀b: X(b) → P(b)`, `X`
/// necessary for `P` is `∀b: P(b) → X(b)`; the other two are negations.
pub fn oracle_selector(cond: ConditionId, n: usize, alpha: &[u32], f: &[bool]) -> bool {
    let mut forall = true;
    for b in 0..(1u32 << n) {
        let x = alpha.iter().any(|&a| match cond.rel {
            Rel::Superset => is_subset(a, b),
            Rel::Subset => is_subset(b, a),
        });
        let p = match cond.part {
            Part::Parthood => f[b as usize],
            Part::NonParthood => !f[b as usize],
        };
        let implication = match cond.quantifier {
            Quantifier::Sufficient | Quantifier::Insufficient => !x || p,
            Quantifier::Necessary | Quantifier::Unnecessary => !p || x,
        };
        forall &= implication;
    }
    match cond.quantifier {
        Quantifier::Sufficient | Quantifier::Necessary => forall,
        Quantifier::Insufficient | Quantifier::Unnecessary => !forall,
    }
}

/// A linear system with 0/1 coefficients over atom unknowns.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseSystem {
    pub matrix: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
    pub row_labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DenseSolution {
    Unique(Vec<f64>),
    RankDeficient { rank: usize, nullity: usize },
    Infeasible { rank: usize, augmented_rank: usize },
}

const PIVOT_EPS: f64 = 1e-10;

/// Gauss-Jordan elimination with partial pivoting.
pub fn solve_dense(system: &DenseSystem) -> DenseSolution {
    let cols = system.matrix.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<f64>> = system
        .matrix
        .iter()
        .zip(&system.rhs)
        .map(|(row, &r)| {
            let mut v = row.clone();
            v.push(r);
            v
        })
        .collect();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let best = (rank..m.len()).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs()));
        let Some(p) = best.filter(|&p| m[p][c].abs() > PIVOT_EPS) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][c];
        for x in &mut m[rank] {
            *x /= piv;
        }
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank {
                let k = row[c];
                if k != 0.0 {
                    for (x, y) in row.iter_mut().zip(&prow) {
                        *x -= k * y;
                    }
                }
            }
        }
        pivots.push(c);
        rank += 1;
    }
    let inconsistent = m[rank..].iter().any(|row| row[cols].abs() > 1e-8);
    if inconsistent {
        return DenseSolution::Infeasible {
            rank,
            augmented_rank: rank + 1,
        };
    }
    if rank < cols {
        return DenseSolution::RankDeficient {
            rank,
            nullity: cols - rank,
        };
    }
    let mut x = vec![0.0; cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols];
    }
    DenseSolution::Unique(x)
}

/// Numerical rank of a coefficient matrix.
pub fn dense_rank(matrix: &[Vec<f64>]) -> usize {
    let sys = DenseSystem {
        matrix: matrix.to_vec(),
        rhs: vec![0.0; matrix.len()],
        row_labels: vec![String::new(); matrix.len()],
    };
    match solve_dense(&sys) {
        DenseSolution::Unique(_) => matrix.first().map_or(0, Vec::len),
        DenseSolution::RankDeficient { rank, .. } | DenseSolution::Infeasible { rank, .. } => rank,
    }
}

/// A pmf as `(outcome, mass)` pairs; the last coordinate is the target.
pub type Pmf = Vec<(Vec<usize>, f64)>;

fn entropy_of(pmf: &Pmf, coords: &[usize]) -> f64 {
    let mut marg: HashMap<Vec<usize>, f64> = HashMap::new();
    for (state, p) in pmf {
        let key: Vec<usize> = coords.iter().map(|&i| state[i]).collect();
        *marg.entry(key).or_insert(0.0) += p;
    }
    marg.values().filter(|&&p| p > 0.0).map(|&p| -p * p.log2()).sum()
}

/// `I(S_sources : T)` in bits, sources 0-based.
pub fn mutual_information(pmf: &Pmf, n: usize, sources: &[usize]) -> f64 {
    if sources.is_empty() {
        return 0.0;
    }
    let mut with_t = sources.to_vec();
    with_t.push(n);
    entropy_of(pmf, sources) + entropy_of(pmf, &[n]) - entropy_of(pmf, &with_t)
}

/// `I(S_a : T | S_given)` in bits as a difference of joint informations.
pub fn conditional_mi(pmf: &Pmf, n: usize, a: &[usize], given: &[usize]) -> f64 {
    let mut joint: Vec<usize> = a.iter().chain(given).copied().collect();
    joint.sort_unstable();
    joint.dedup();
    mutual_information(pmf, n, &joint) - mutual_information(pmf, n, given)
}

/// Bitmask to 0-based source list.
pub fn members(bits: u32) -> Vec<usize> {
    (0..32).filter(|i| bits >> i & 1 == 1).collect()
}

/// Consistency rows for every non-empty subset plus one redundancy row per
/// antichain outside `{}` and `{∅}`, valued by the min-MI redundancy.
/// Columns follow [`parthood_distributions`].
pub fn redundancy_system(pmf: &Pmf, n: usize) -> DenseSystem {
    let atoms = parthood_distributions(n);
    let mi = |b: u32| mutual_information(pmf, n, &members(b));
    let mut sys = DenseSystem {
        matrix: Vec::new(),
        rhs: Vec::new(),
        row_labels: Vec::new(),
    };
    for a in 1..(1u32 << n) {
        sys.matrix
            .push(atoms.iter().map(|f| if f[a as usize] { 1.0 } else { 0.0 }).collect());
        sys.rhs.push(mi(a));
        sys.row_labels.push(format!("consistency {a:b}"));
    }
    for alpha in antichains(n) {
        if alpha.is_empty() || alpha == [0] {
            continue;
        }
        sys.matrix.push(
            atoms
                .iter()
                .map(|f| if alpha.iter().all(|&a| f[a as usize]) { 1.0 } else { 0.0 })
                .collect(),
        );
        sys.rhs.push(alpha.iter().map(|&a| mi(a)).fold(f64::INFINITY, f64::min));
        sys.row_labels.push(format!("redundancy {alpha:?}"));
    }
    sys
}

/// Consistency rows plus one proper-synergy row per antichain with
/// non-empty union: atoms that are one on the union and zero below it.
pub fn proper_synergy_matrix(n: usize) -> (Vec<Vec<f64>>, usize) {
    let atoms = parthood_distributions(n);
    let mut rows = Vec::new();
    for a in 1..(1u32 << n) {
        rows.push(atoms.iter().map(|f| if f[a as usize] { 1.0 } else { 0.0 }).collect());
    }
    let consistency = rows.len();
    for alpha in antichains(n) {
        let u = alpha.iter().fold(0, |acc, &a| acc | a);
        if u == 0 {
            continue;
        }
        rows.push(
            atoms
                .iter()
                .map(|f| {
                    let below = (0..u).filter(|&b| is_subset(b, u) && b != u).all(|b| !f[b as usize]);
                    if f[u as usize] && below {
                        1.0
                    } else {
                        0.0
                    }
                })
                .collect(),
        );
    }
    (rows, consistency)
}

/// `T = S1 xor S2`.
pub fn xor_pmf() -> Pmf {
    (0..4)
        .map(|i| (vec![i >> 1, i & 1, (i >> 1) ^ (i & 1)], 0.25))
        .collect()
}

/// `T = S1 = S2`.
pub fn copy_pmf() -> Pmf {
    vec![(vec![0, 0, 0], 0.5), (vec![1, 1, 1], 0.5)]
}
