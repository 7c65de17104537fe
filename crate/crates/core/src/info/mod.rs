//! Discrete joint distributions of sources and a target with exact Shannon
//! (conditional) mutual information in bits.

mod io;

use sha2::{Digest, Sha256};

pub use io::{load_joint, parse_joint, write_joint, JointFormat};

use crate::error::{PidError, Result};
use crate::lattice::SourceSet;

/// Upper bound on the number of cells in the dense outcome table.
pub const MAX_CELLS: usize = 1 << 24;

/// Allowed deviation of the total mass from one.
pub const MASS_TOLERANCE: f64 = 1e-9;

/// Masses below this are dropped from entropy sums.
const NEGLIGIBLE: f64 = 1e-15;

/// A pmf over `(s_1, ..., s_n, t)` stored as a dense table, target index
/// varying fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDistribution {
    source_alphabets: Vec<usize>,
    target_alphabet: usize,
    probs: Vec<f64>,
}

impl JointDistribution {
    /// Builds a distribution from sparse `(state, mass)` entries, where each
    /// state lists the source symbols followed by the target symbol.
    /// Missing states have mass zero.
    pub fn from_pmf(source_alphabets: Vec<usize>, target_alphabet: usize, pmf: &[(Vec<usize>, f64)]) -> Result<Self> {
        let cells = check_shape(&source_alphabets, target_alphabet)?;
        let mut probs = vec![0.0; cells];
        let mut seen = vec![false; cells];
        for (row, (state, p)) in pmf.iter().enumerate() {
            let idx = state_index(&source_alphabets, target_alphabet, state)
                .map_err(|msg| PidError::Validation(format!("pmf[{row}].state: {msg}")))?;
            if seen[idx] {
                return Err(PidError::Validation(format!(
                    "pmf[{row}].state: duplicate state {state:?}"
                )));
            }
            seen[idx] = true;
            probs[idx] = *p;
        }
        Self::from_dense(source_alphabets, target_alphabet, probs)
    }

    pub fn from_dense(source_alphabets: Vec<usize>, target_alphabet: usize, probs: Vec<f64>) -> Result<Self> {
        let cells = check_shape(&source_alphabets, target_alphabet)?;
        if probs.len() != cells {
            return Err(PidError::Validation(format!(
                "expected {cells} cells, got {}",
                probs.len()
            )));
        }
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(PidError::Validation(format!(
                    "mass {p} at state {:?} is not a nonnegative number",
                    unravel(&source_alphabets, target_alphabet, i)
                )));
            }
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > MASS_TOLERANCE {
            return Err(PidError::Validation(format!(
                "total mass is {total}, expected 1 within {MASS_TOLERANCE}"
            )));
        }
        Ok(Self {
            source_alphabets,
            target_alphabet,
            probs,
        })
    }

    pub fn n_sources(&self) -> usize {
        self.source_alphabets.len()
    }

    pub fn source_alphabets(&self) -> &[usize] {
        &self.source_alphabets
    }

    pub fn target_alphabet(&self) -> usize {
        self.target_alphabet
    }

    pub fn probability(&self, state: &[usize]) -> Option<f64> {
        state_index(&self.source_alphabets, self.target_alphabet, state)
            .ok()
            .map(|i| self.probs[i])
    }

    /// Nonzero-mass outcomes in table order.
    pub fn support(&self) -> impl Iterator<Item = (Vec<usize>, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .filter(|(_, &p)| p > 0.0)
            .map(|(i, &p)| (unravel(&self.source_alphabets, self.target_alphabet, i), p))
    }

    /// SHA-256 over the shape and every cell mass, hex encoded.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.source_alphabets.len() as u64).to_le_bytes());
        for &a in &self.source_alphabets {
            h.update((a as u64).to_le_bytes());
        }
        h.update((self.target_alphabet as u64).to_le_bytes());
        for &p in &self.probs {
            h.update(p.to_bits().to_le_bytes());
        }
        hex::encode(h.finalize())
    }

    /// `H(S_a)` or `H(S_a, T)` in bits, for a bitmask of sources.
    fn entropy(&self, sources: u32, with_target: bool) -> f64 {
        let n = self.n_sources();
        // Strides of the marginal table over the kept variables.
        let mut strides = vec![0usize; n];
        let mut size = 1usize;
        for i in (0..n).rev() {
            if sources & (1 << i) != 0 {
                strides[i] = size;
                size *= self.source_alphabets[i];
            }
        }
        let target_stride = size;
        if with_target {
            size *= self.target_alphabet;
        }
        let mut marginal = vec![0.0; size];
        let mut digits = vec![0usize; n];
        let mut t = 0usize;
        let mut offset = 0usize;
        for &p in &self.probs {
            let idx = if with_target {
                offset + t * target_stride
            } else {
                offset
            };
            marginal[idx] += p;
            // advance the odometer, target fastest
            t += 1;
            if t == self.target_alphabet {
                t = 0;
                for i in (0..n).rev() {
                    digits[i] += 1;
                    offset += strides[i];
                    if digits[i] < self.source_alphabets[i] {
                        break;
                    }
                    offset -= strides[i] * digits[i];
                    digits[i] = 0;
                }
            }
        }
        marginal
            .iter()
            .filter(|&&p| p > NEGLIGIBLE)
            .map(|&p| -p * p.log2())
            .sum()
    }

    fn check_set(&self, set: SourceSet) {
        assert!(
            self.n_sources() >= 32 || set.bits() >> self.n_sources() == 0,
            "source set {set} exceeds {} sources",
            self.n_sources()
        );
    }

    /// `I(S_a : T)` in bits; zero for the empty set.
    pub fn mutual_information(&self, a: SourceSet) -> f64 {
        self.check_set(a);
        if a.is_empty() {
            return 0.0;
        }
        let mi = self.entropy(a.bits(), false) + self.entropy(0, true) - self.entropy(a.bits(), true);
        mi.max(0.0)
    }

    /// `I(S_a : T | S_given)` in bits. Sources in both sets are absorbed by
    /// the conditioning.
    pub fn conditional_mi(&self, a: SourceSet, given: SourceSet) -> f64 {
        self.check_set(a);
        self.check_set(given);
        let g = given.bits();
        if a.bits() & !g == 0 {
            return 0.0;
        }
        let joint = a.bits() | g;
        let cmi =
            self.entropy(joint, false) + self.entropy(g, true) - self.entropy(joint, true) - self.entropy(g, false);
        cmi.max(0.0)
    }

    /// `I(S_a : T)` for every subset bitmask `a` of the sources.
    pub fn mi_table(&self) -> Vec<f64> {
        let n = self.n_sources();
        assert!(n <= 20, "mutual-information table over {n} sources is too large");
        let h_t = self.entropy(0, true);
        (0..(1u32 << n))
            .map(|a| {
                if a == 0 {
                    0.0
                } else {
                    (self.entropy(a, false) + h_t - self.entropy(a, true)).max(0.0)
                }
            })
            .collect()
    }
}

fn check_shape(source_alphabets: &[usize], target_alphabet: usize) -> Result<usize> {
    if source_alphabets.is_empty() {
        return Err(PidError::Validation("at least one source is required".into()));
    }
    if source_alphabets.len() > crate::lattice::MAX_SET_SOURCES {
        return Err(PidError::Capacity {
            n: source_alphabets.len(),
            max: crate::lattice::MAX_SET_SOURCES,
        });
    }
    let mut cells = target_alphabet;
    if target_alphabet == 0 || source_alphabets.contains(&0) {
        return Err(PidError::Validation("alphabet sizes must be positive".into()));
    }
    for &a in source_alphabets {
        cells = cells
            .checked_mul(a)
            .filter(|&c| c <= MAX_CELLS)
            .ok_or_else(|| PidError::Validation(format!("outcome table exceeds {MAX_CELLS} cells")))?;
    }
    if cells > MAX_CELLS {
        return Err(PidError::Validation(format!("outcome table exceeds {MAX_CELLS} cells")));
    }
    Ok(cells)
}

fn state_index(
    source_alphabets: &[usize],
    target_alphabet: usize,
    state: &[usize],
) -> std::result::Result<usize, String> {
    let n = source_alphabets.len();
    if state.len() != n + 1 {
        return Err(format!("expected {} symbols, got {}", n + 1, state.len()));
    }
    let mut idx = 0usize;
    for (i, (&s, &a)) in state[..n].iter().zip(source_alphabets).enumerate() {
        if s >= a {
            return Err(format!("symbol {s} out of range for source {} (alphabet {a})", i + 1));
        }
        idx = idx * a + s;
    }
    let t = state[n];
    if t >= target_alphabet {
        return Err(format!("target symbol {t} out of range (alphabet {target_alphabet})"));
    }
    Ok(idx * target_alphabet + t)
}

fn unravel(source_alphabets: &[usize], target_alphabet: usize, mut idx: usize) -> Vec<usize> {
    let mut state = vec![0; source_alphabets.len() + 1];
    state[source_alphabets.len()] = idx % target_alphabet;
    idx /= target_alphabet;
    for i in (0..source_alphabets.len()).rev() {
        state[i] = idx % source_alphabets[i];
        idx /= source_alphabets[i];
    }
    state
}

/// `T = S1 xor S2` with uniform independent bits.
pub fn xor() -> JointDistribution {
    let pmf: Vec<(Vec<usize>, f64)> = (0..4)
        .map(|i| {
            let (a, b) = (i >> 1, i & 1);
            (vec![a, b, a ^ b], 0.25)
        })
        .collect();
    JointDistribution::from_pmf(vec![2, 2], 2, &pmf).expect("valid")
}

/// `T = S1 = S2`, one uniform bit copied three times.
pub fn copy() -> JointDistribution {
    let pmf = vec![(vec![0, 0, 0], 0.5), (vec![1, 1, 1], 0.5)];
    JointDistribution::from_pmf(vec![2, 2], 2, &pmf).expect("valid")
}
