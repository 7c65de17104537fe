use std::fmt;

use crate::lattice::{Antichain, ParthoodDistribution};

/// Whether the relation to `α` is sufficient, necessary, insufficient or
/// unnecessary for the stated target.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Sufficient,
    Necessary,
    Insufficient,
    Unnecessary,
}

/// `b ⊇ a` or `b ⊆ a` for some `a ∈ α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Superset,
    Subset,
}

/// Parthood (`f(b) = 1`) or non-parthood (`f(b) = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    Parthood,
    NonParthood,
}

/// One of the sixteen parthood conditions, e.g. "being a superset of some
/// `a ∈ α` is sufficient for parthood".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Condition {
    pub mode: Mode,
    pub relation: Relation,
    pub target: Target,
}

/// Exceptional antichains at which a trivial condition flips.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exceptional {
    /// `{∅}`
    EmptySet,
    /// `{[n]}`
    FullSet,
}

/// How a condition behaves independently of the atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Triviality {
    /// Depends on `f`.
    Nontrivial,
    /// Selects no atom, except all atoms at the exceptional antichain.
    Empty(Option<Exceptional>),
    /// Selects every atom, except none at the exceptional antichain.
    Full(Option<Exceptional>),
}

impl Condition {
    pub const fn new(mode: Mode, relation: Relation, target: Target) -> Self {
        Condition { mode, relation, target }
    }

    /// All sixteen conditions in four blocks: sufficient, necessary,
    /// insufficient, unnecessary.
    pub fn all() -> [Condition; 16] {
        use Mode::*;
        use Relation::*;
        use Target::*;
        [
            Condition::new(Sufficient, Superset, Parthood),
            Condition::new(Sufficient, Subset, NonParthood),
            Condition::new(Sufficient, Subset, Parthood),
            Condition::new(Sufficient, Superset, NonParthood),
            Condition::new(Necessary, Superset, NonParthood),
            Condition::new(Necessary, Subset, NonParthood),
            Condition::new(Necessary, Superset, Parthood),
            Condition::new(Necessary, Subset, Parthood),
            Condition::new(Insufficient, Superset, Parthood),
            Condition::new(Insufficient, Subset, Parthood),
            Condition::new(Insufficient, Superset, NonParthood),
            Condition::new(Insufficient, Subset, NonParthood),
            Condition::new(Unnecessary, Superset, NonParthood),
            Condition::new(Unnecessary, Subset, NonParthood),
            Condition::new(Unnecessary, Superset, Parthood),
            Condition::new(Unnecessary, Subset, Parthood),
        ]
    }

    fn negated(self) -> bool {
        matches!(self.mode, Mode::Insufficient | Mode::Unnecessary)
    }

    fn is_necessity(self) -> bool {
        matches!(self.mode, Mode::Necessary | Mode::Unnecessary)
    }

    /// The value of `f(b)` in the consequent. A necessary condition for
    /// parthood is the contrapositive `¬(b rel a) → f(b) = 0`.
    pub fn consequent(self) -> bool {
        (self.target == Target::Parthood) != self.is_necessity()
    }

    /// The quantified formula in plain text.
    pub fn formula(self) -> String {
        let rel = match self.relation {
            Relation::Superset => "⊇",
            Relation::Subset => "⊆",
        };
        let neg = if self.is_necessity() { "¬" } else { "" };
        let body = format!("∀b: {neg}∃a∈α b{rel}a → f(b)={}", u8::from(self.consequent()));
        if self.negated() {
            format!("¬({body})")
        } else {
            body
        }
    }

    /// Evaluates the formula given the truth tables of `α`'s up-set and
    /// down-set and a truth-table mask over all subsets.
    pub(crate) fn eval_tables(self, upset: u32, downset: u32, mask: u32, f: u32) -> bool {
        let related = match self.relation {
            Relation::Superset => upset,
            Relation::Subset => downset,
        };
        let antecedent = if self.is_necessity() { !related & mask } else { related };
        let violated = if self.consequent() {
            antecedent & !f
        } else {
            antecedent & f
        };
        (violated == 0) != self.negated()
    }

    pub fn holds(self, alpha: &Antichain, f: &ParthoodDistribution) -> bool {
        self.eval_tables(
            alpha.upset_table(),
            alpha.downset_table(),
            crate::lattice::table_mask(alpha.n()),
            f.table(),
        )
    }

    /// The behaviour of the trivial conditions on non-empty antichains.
    pub fn triviality(self) -> Triviality {
        use Mode::*;
        use Relation::*;
        use Target::*;
        match (self.mode, self.relation, self.target) {
            (Sufficient, Subset, Parthood) | (Sufficient, Superset, NonParthood) => Triviality::Empty(None),
            (Insufficient, Subset, Parthood) | (Insufficient, Superset, NonParthood) => Triviality::Full(None),
            (Necessary, Superset, NonParthood) => Triviality::Empty(Some(Exceptional::EmptySet)),
            (Necessary, Subset, Parthood) => Triviality::Empty(Some(Exceptional::FullSet)),
            (Unnecessary, Superset, NonParthood) => Triviality::Full(Some(Exceptional::EmptySet)),
            (Unnecessary, Subset, Parthood) => Triviality::Full(Some(Exceptional::FullSet)),
            _ => Triviality::Nontrivial,
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Sufficient => "sufficient",
            Mode::Necessary => "necessary",
            Mode::Insufficient => "insufficient",
            Mode::Unnecessary => "unnecessary",
        };
        let rel = match self.relation {
            Relation::Superset => "superset",
            Relation::Subset => "subset",
        };
        let target = match self.target {
            Target::Parthood => "parthood",
            Target::NonParthood => "non-parthood",
        };
        write!(f, "{rel} {mode} for {target}")
    }
}
