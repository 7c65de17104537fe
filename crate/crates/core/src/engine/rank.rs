use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::proper_synergy_selects;
use crate::error::{PidError, Result};
use crate::lattice::universe;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankAnalysis {
    pub n: usize,
    pub unknowns: usize,
    pub consistency_rank: usize,
    /// Rank of the consistency rows together with the proper-synergy rows.
    pub combined_rank: usize,
    pub novel_constraints: usize,
    pub deficit: usize,
}

/// 0/1 rows over the atoms: consistency equations for every non-empty
/// subset, then proper-synergy equations for every antichain. Labels name
/// the generating subset or antichain.
pub fn proper_synergy_system(n: usize) -> Result<(Vec<Vec<u8>>, Vec<String>, usize)> {
    let u = universe(n)?;
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for a in crate::lattice::all_subsets(n).into_iter().filter(|a| !a.is_empty()) {
        rows.push(u.atoms().iter().map(|f| u8::from(f.value(a))).collect());
        labels.push(format!("consistency {a}"));
    }
    let consistency_rows = rows.len();
    for alpha in u.antichains() {
        let union = alpha.union();
        rows.push(
            u.atoms()
                .iter()
                .map(|f| u8::from(union != 0 && proper_synergy_selects(f, union)))
                .collect(),
        );
        labels.push(format!("proper synergy {alpha}"));
    }
    Ok((rows, labels, consistency_rows))
}

/// Exact ranks of the consistency and proper-synergy equations over the
/// atom unknowns.
pub fn proper_synergy_rank_analysis(n: usize) -> Result<RankAnalysis> {
    if n > 4 {
        return Err(PidError::Capacity { n, max: 4 });
    }
    let (rows, _, consistency_rows) = proper_synergy_system(n)?;
    let unknowns = universe(n)?.atoms().len();
    let consistency_rank = exact_rank(&rows[..consistency_rows]);
    let combined_rank = exact_rank(&rows);
    Ok(RankAnalysis {
        n,
        unknowns,
        consistency_rank,
        combined_rank,
        novel_constraints: combined_rank - consistency_rank,
        deficit: unknowns - combined_rank,
    })
}

/// Rank by Gauss-Jordan elimination over the rationals.
pub fn exact_rank(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for x in &mut m[rank][c..] {
            *x *= &inv;
        }
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}
