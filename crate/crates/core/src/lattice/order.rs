use std::collections::HashMap;
use std::fmt::{self, Write as _};

use super::antichain::{complement_table, Antichain};
use super::{in_redundancy_domain, in_synergy_domain};
use crate::error::{PidError, Result};

/// The two orders defined on antichains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// `α ⪯ β ⇔ f_α ⊑ f_β`: every superset of a collection of `β` is a
    /// superset of a collection of `α`.
    Redundancy,
    /// `α ⪯′ β`: every subset of a collection of `α` is a subset of a
    /// collection of `β`, so `{∅}` is the bottom of `(𝒮, ⪯′)`.
    Synergy,
}

/// Whether a lattice uses an order as-is or inverted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// Which cumulative sum a Moebius inversion undoes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SumDirection {
    /// `value(x) = Σ_{y ≤ x} atom(y)`.
    DownSum,
    /// `value(x) = Σ_{y ≥ x} atom(y)`.
    UpSum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    FullLattice,
    /// Unique top, several minimal elements.
    JoinSemiLattice,
    /// Unique bottom, several maximal elements.
    MeetSemiLattice,
    /// Neither a unique top nor a unique bottom.
    Poset,
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LatticeKind::FullLattice => "full lattice",
            LatticeKind::JoinSemiLattice => "join semi-lattice",
            LatticeKind::MeetSemiLattice => "meet semi-lattice",
            LatticeKind::Poset => "poset",
        })
    }
}

// `x ≤ y` in the chosen order and direction iff `key(x) ⊆ key(y)`.
fn order_key(order: OrderKind, direction: Direction, alpha: &Antichain) -> u32 {
    let n = alpha.n();
    match (order, direction) {
        (OrderKind::Redundancy, Direction::Up) => complement_table(n, alpha.upset_table()),
        (OrderKind::Redundancy, Direction::Down) => alpha.upset_table(),
        (OrderKind::Synergy, Direction::Up) => alpha.downset_table(),
        (OrderKind::Synergy, Direction::Down) => complement_table(n, alpha.downset_table()),
    }
}

/// The lattice order between two antichains of the order's own domain
/// (`𝒜` for redundancy, `𝒮` for synergy).
pub fn order_leq(kind: OrderKind, alpha: &Antichain, beta: &Antichain) -> Result<bool> {
    let (in_domain, name): (fn(&Antichain) -> bool, &str) = match kind {
        OrderKind::Redundancy => (in_redundancy_domain, "redundancy order (𝒜)"),
        OrderKind::Synergy => (in_synergy_domain, "synergy order (𝒮)"),
    };
    for a in [alpha, beta] {
        if !in_domain(a) {
            return Err(PidError::Domain {
                context: name.into(),
                antichain: a.to_string(),
            });
        }
    }
    if alpha.n() != beta.n() {
        return Err(PidError::Validation(format!(
            "cannot compare antichains over {} and {} sources",
            alpha.n(),
            beta.n()
        )));
    }
    let ka = order_key(kind, Direction::Up, alpha);
    let kb = order_key(kind, Direction::Up, beta);
    Ok(ka & !kb == 0)
}

/// A finite poset of antichains with its covering relation.
#[derive(Clone, Debug)]
pub struct ConceptLattice {
    order: OrderKind,
    direction: Direction,
    nodes: Vec<Antichain>,
    keys: Vec<u32>,
    /// Node indices sorted by key size, a linear extension of the order.
    extension: Vec<usize>,
    upper_covers: Vec<Vec<usize>>,
    kind: LatticeKind,
    index: HashMap<Antichain, usize>,
}

/// Builds the (semi-)lattice on `nodes` ordered by `order`, inverted when
/// `direction` is [`Direction::Down`].
pub fn build_lattice(nodes: Vec<Antichain>, order: OrderKind, direction: Direction) -> ConceptLattice {
    let keys: Vec<u32> = nodes.iter().map(|a| order_key(order, direction, a)).collect();
    let mut extension: Vec<usize> = (0..nodes.len()).collect();
    extension.sort_by_key(|&i| (keys[i].count_ones(), i));

    let mut upper_covers = vec![Vec::new(); nodes.len()];
    let mut has_lower = vec![false; nodes.len()];
    for (pos, &x) in extension.iter().enumerate() {
        let kx = keys[x];
        let mut covers: Vec<usize> = Vec::new();
        for &y in &extension[pos + 1..] {
            let ky = keys[y];
            if kx & !ky != 0 {
                continue;
            }
            // Any element strictly between x and y lies above some minimal
            // element of the strict up-set of x, all of which come earlier.
            if covers.iter().all(|&c| keys[c] & !ky != 0) {
                covers.push(y);
                has_lower[y] = true;
            }
        }
        covers.sort_unstable();
        upper_covers[x] = covers;
    }

    let minimal = has_lower.iter().filter(|&&h| !h).count();
    let maximal = upper_covers.iter().filter(|c| c.is_empty()).count();
    let kind = match (minimal == 1, maximal == 1) {
        (true, true) => LatticeKind::FullLattice,
        (false, true) => LatticeKind::JoinSemiLattice,
        (true, false) => LatticeKind::MeetSemiLattice,
        (false, false) => LatticeKind::Poset,
    };
    let index = nodes.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    ConceptLattice {
        order,
        direction,
        nodes,
        keys,
        extension,
        upper_covers,
        kind,
        index,
    }
}

impl ConceptLattice {
    pub fn order(&self) -> OrderKind {
        self.order
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn nodes(&self) -> &[Antichain] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn index_of(&self, alpha: &Antichain) -> Option<usize> {
        self.index.get(alpha).copied()
    }

    /// Order between node indices.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.keys[i] & !self.keys[j] == 0
    }

    /// Indices of the nodes covering node `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    /// All covering pairs `(lower, upper)`, sorted.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .upper_covers
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
            .collect();
        pairs.sort_unstable();
        pairs
    }

    pub fn minimal_nodes(&self) -> Vec<usize> {
        let mut covered = vec![false; self.len()];
        for ups in &self.upper_covers {
            for &j in ups {
                covered[j] = true;
            }
        }
        (0..self.len()).filter(|&i| !covered[i]).collect()
    }

    pub fn maximal_nodes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.upper_covers[i].is_empty()).collect()
    }

    /// Graphviz rendering: one node per antichain, edges along covers from
    /// lower to higher.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph lattice {\n    rankdir=BT;\n    node [shape=plaintext];\n");
        for (i, a) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "    n{i} [label=\"{a}\"];");
        }
        for (i, j) in self.covering_pairs() {
            let _ = writeln!(out, "    n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Cumulative sums of `atoms` over down-sets or up-sets; the transform that
/// [`moebius_invert`] undoes.
pub fn cumulative_sums(lattice: &ConceptLattice, atoms: &[f64], direction: SumDirection) -> Result<Vec<f64>> {
    check_len(lattice, atoms)?;
    let n = lattice.len();
    Ok((0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| match direction {
                    SumDirection::DownSum => lattice.leq(y, x),
                    SumDirection::UpSum => lattice.leq(x, y),
                })
                .map(|y| atoms[y])
                .sum()
        })
        .collect())
}

/// Solves `values(x) = Σ atom(y)` over the down-set (or up-set) of every node
/// by walking a linear extension: each atom is its value minus the atoms
/// already solved below (or above) it.
pub fn moebius_invert(lattice: &ConceptLattice, values: &[f64], direction: SumDirection) -> Result<Vec<f64>> {
    if lattice.kind != LatticeKind::FullLattice {
        return Err(PidError::UnsupportedStructure(lattice.kind.to_string()));
    }
    check_len(lattice, values)?;
    let mut atoms = vec![0.0; lattice.len()];
    let order: Vec<usize> = match direction {
        SumDirection::DownSum => lattice.extension.clone(),
        SumDirection::UpSum => lattice.extension.iter().rev().copied().collect(),
    };
    for (pos, &x) in order.iter().enumerate() {
        let kx = lattice.keys[x];
        let mut solved = 0.0;
        for &y in &order[..pos] {
            let ky = lattice.keys[y];
            let related = match direction {
                SumDirection::DownSum => ky & !kx == 0,
                SumDirection::UpSum => kx & !ky == 0,
            };
            if related {
                solved += atoms[y];
            }
        }
        atoms[x] = values[x] - solved;
    }
    Ok(atoms)
}

fn check_len(lattice: &ConceptLattice, values: &[f64]) -> Result<()> {
    if values.len() != lattice.len() {
        return Err(PidError::Validation(format!(
            "expected {} node values, got {}",
            lattice.len(),
            values.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{redundancy_domain, synergy_domain};

    fn ac(n: usize, s: &str) -> Antichain {
        Antichain::parse(n, s).unwrap()
    }

    #[test]
    fn redundancy_order_examples() {
        assert!(order_leq(OrderKind::Redundancy, &ac(2, "{1}{2}"), &ac(2, "{1}")).unwrap());
        assert!(order_leq(OrderKind::Redundancy, &ac(2, "{1}"), &ac(2, "{1,2}")).unwrap());
        assert!(!order_leq(OrderKind::Redundancy, &ac(3, "{1}"), &ac(3, "{2}")).unwrap());
        assert!(!order_leq(OrderKind::Redundancy, &ac(3, "{2}"), &ac(3, "{1}")).unwrap());
    }

    #[test]
    fn synergy_order_examples() {
        assert!(order_leq(OrderKind::Synergy, &ac(2, "{}"), &ac(2, "{1}")).unwrap());
        assert!(!order_leq(OrderKind::Synergy, &ac(2, "{1}"), &ac(2, "{}")).unwrap());
        assert!(order_leq(OrderKind::Synergy, &ac(2, "{1}"), &ac(2, "{1}{2}")).unwrap());
    }

    #[test]
    fn order_domain_errors() {
        assert!(order_leq(OrderKind::Redundancy, &ac(2, "{}"), &ac(2, "{1}")).is_err());
        assert!(order_leq(OrderKind::Synergy, &ac(2, "{1,2}"), &ac(2, "{1}")).is_err());
        assert!(order_leq(OrderKind::Synergy, &Antichain::empty(2).unwrap(), &ac(2, "{1}")).is_err());
    }

    #[test]
    fn synergy_lattice_n2() {
        let lat = build_lattice(synergy_domain(2).unwrap(), OrderKind::Synergy, Direction::Up);
        assert_eq!(lat.kind(), LatticeKind::FullLattice);
        let name = |i: usize| lat.nodes()[i].to_string();
        let pairs: Vec<(String, String)> = lat
            .covering_pairs()
            .into_iter()
            .map(|(i, j)| (name(i), name(j)))
            .collect();
        let mut expected = vec![
            ("{}".to_string(), "{1}".to_string()),
            ("{}".to_string(), "{2}".to_string()),
            ("{1}".to_string(), "{1}{2}".to_string()),
            ("{2}".to_string(), "{1}{2}".to_string()),
        ];
        let mut got = pairs;
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn redundancy_lattice_n3_is_full() {
        let lat = build_lattice(redundancy_domain(3).unwrap(), OrderKind::Redundancy, Direction::Up);
        assert_eq!(lat.len(), 18);
        assert_eq!(lat.kind(), LatticeKind::FullLattice);
        assert_eq!(lat.nodes()[lat.minimal_nodes()[0]].to_string(), "{1}{2}{3}");
        assert_eq!(lat.nodes()[lat.maximal_nodes()[0]].to_string(), "{1,2,3}");
    }

    #[test]
    fn union_semilattice_n3_has_several_minima() {
        let lat = build_lattice(redundancy_domain(3).unwrap(), OrderKind::Synergy, Direction::Up);
        assert_eq!(lat.kind(), LatticeKind::JoinSemiLattice);
        let minima: Vec<String> = lat
            .minimal_nodes()
            .into_iter()
            .map(|i| lat.nodes()[i].to_string())
            .collect();
        assert_eq!(minima, ["{1}", "{2}", "{3}"]);
        assert!(moebius_invert(&lat, &vec![0.0; lat.len()], SumDirection::DownSum).is_err());
    }

    #[test]
    fn zero_values_give_zero_atoms() {
        let lat = build_lattice(redundancy_domain(3).unwrap(), OrderKind::Redundancy, Direction::Up);
        let atoms = moebius_invert(&lat, &vec![0.0; lat.len()], SumDirection::DownSum).unwrap();
        assert!(atoms.iter().all(|&a| a == 0.0));
    }

    #[test]
    fn n2_redundancy_inversion_matches_two_source_equations() {
        let lat = build_lattice(redundancy_domain(2).unwrap(), OrderKind::Redundancy, Direction::Up);
        // I∩({1}{2}) = 0.2, I({1}) = 0.5, I({2}) = 0.3, I({1,2}) = 1.0
        let mut values = vec![0.0; 4];
        for (s, v) in [("{1}{2}", 0.2), ("{1}", 0.5), ("{2}", 0.3), ("{1,2}", 1.0)] {
            values[lat.index_of(&ac(2, s)).unwrap()] = v;
        }
        let atoms = moebius_invert(&lat, &values, SumDirection::DownSum).unwrap();
        let at = |s: &str| atoms[lat.index_of(&ac(2, s)).unwrap()];
        assert!((at("{1}{2}") - 0.2).abs() < 1e-15);
        assert!((at("{1}") - 0.3).abs() < 1e-15);
        assert!((at("{2}") - 0.1).abs() < 1e-15);
        assert!((at("{1,2}") - 0.4).abs() < 1e-15);
    }

    #[test]
    fn dot_output_shape() {
        let lat = build_lattice(redundancy_domain(2).unwrap(), OrderKind::Redundancy, Direction::Up);
        let dot = lat.to_dot();
        assert!(dot.starts_with("digraph lattice {\n    rankdir=BT;"));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.contains("label=\"{1}{2}\""));
    }
}
