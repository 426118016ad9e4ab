//! The two lexicographic total orders on IVIFNs, the containment order, and ranking.
//!
//! Both orders compare score first, accuracy second, and then two width-based
//! keys: `(E2, E3)` for [`OrderSelector::Hzx`] and `(T, G)` for
//! [`OrderSelector::Wlw`]. Every key is compared ascending.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ivifn::{Ivifn, StatVector};
use crate::rational::Rational;

/// Which lexicographic total order to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderSelector {
    /// Score, accuracy, total width entropy `E2`, membership width `E3`.
    #[default]
    Hzx,
    /// Score, accuracy, membership uncertainty index `T`, hesitation uncertainty index `G`.
    Wlw,
}

impl OrderSelector {
    pub const ALL: [OrderSelector; 2] = [OrderSelector::Hzx, OrderSelector::Wlw];

    /// The four ranking keys of `a`, most significant first.
    pub fn keys(self, a: &Ivifn) -> [Rational; 4] {
        let mu_w = a.mu_width();
        let nu_w = a.nu_width();
        let (k3, k4) = match self {
            OrderSelector::Hzx => ((&mu_w + &nu_w).half(), mu_w),
            OrderSelector::Wlw => (&mu_w - &nu_w, mu_w + nu_w),
        };
        [a.score(), a.accuracy(), k3, k4]
    }

    /// Projects an already computed statistic vector onto the four keys.
    pub fn project(self, st: &StatVector) -> [Rational; 4] {
        match self {
            OrderSelector::Hzx => [st.s.clone(), st.h.clone(), st.e2.clone(), st.e3.clone()],
            OrderSelector::Wlw => [st.s.clone(), st.h.clone(), st.t.clone(), st.g.clone()],
        }
    }

    pub fn key_names(self) -> [&'static str; 4] {
        match self {
            OrderSelector::Hzx => ["S", "H", "E2", "E3"],
            OrderSelector::Wlw => ["S", "H", "T", "G"],
        }
    }

    pub fn cmp(self, a: &Ivifn, b: &Ivifn) -> Ordering {
        compare(a, b, self).relation
    }
}

impl fmt::Display for OrderSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderSelector::Hzx => "hzx",
            OrderSelector::Wlw => "wlw",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown order {0:?} (expected hzx or wlw)")]
pub struct UnknownOrder(pub String);

impl FromStr for OrderSelector {
    type Err = UnknownOrder;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hzx" => Ok(OrderSelector::Hzx),
            "wlw" => Ok(OrderSelector::Wlw),
            _ => Err(UnknownOrder(s.to_string())),
        }
    }
}

/// The lexicographic level at which a comparison was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DecidedAt {
    Score,
    Accuracy,
    Key3,
    Key4,
    AllEqual,
}

impl DecidedAt {
    const LEVELS: [DecidedAt; 4] = [
        DecidedAt::Score,
        DecidedAt::Accuracy,
        DecidedAt::Key3,
        DecidedAt::Key4,
    ];

    /// The key name under `order`, e.g. `E2` for [`DecidedAt::Key3`] under HZX.
    pub fn key_name(self, order: OrderSelector) -> &'static str {
        match self {
            DecidedAt::AllEqual => "=",
            level => order.key_names()[level as usize],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonOutcome {
    #[serde(with = "ordering_serde")]
    pub relation: Ordering,
    pub decided_at: DecidedAt,
}

mod ordering_serde {
    use std::cmp::Ordering;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(match o {
            Ordering::Less => "less",
            Ordering::Equal => "equal",
            Ordering::Greater => "greater",
        })
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ordering, D::Error> {
        match String::deserialize(d)?.as_str() {
            "less" => Ok(Ordering::Less),
            "equal" => Ok(Ordering::Equal),
            "greater" => Ok(Ordering::Greater),
            other => Err(serde::de::Error::custom(format!(
                "unknown relation {other:?}"
            ))),
        }
    }
}

/// Compares `a` and `b` under `order`, reporting which key broke the tie.
pub fn compare(a: &Ivifn, b: &Ivifn, order: OrderSelector) -> ComparisonOutcome {
    let ka = order.keys(a);
    let kb = order.keys(b);
    for (level, (x, y)) in DecidedAt::LEVELS.into_iter().zip(ka.iter().zip(kb.iter())) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            relation => {
                return ComparisonOutcome {
                    relation,
                    decided_at: level,
                }
            }
        }
    }
    ComparisonOutcome {
        relation: Ordering::Equal,
        decided_at: DecidedAt::AllEqual,
    }
}

/// Xu's two-key ranking on score then accuracy. Not antisymmetric: distinct
/// numbers sharing both keys compare `Equal`.
pub fn xu_compare(a: &Ivifn, b: &Ivifn) -> Ordering {
    a.score()
        .cmp(&b.score())
        .then_with(|| a.accuracy().cmp(&b.accuracy()))
}

/// Containment order: `a ⊆ b` iff `a` has no more membership and no less
/// non-membership than `b`, bound by bound.
pub fn subset_leq(a: &Ivifn, b: &Ivifn) -> bool {
    a.mu_lo() <= b.mu_lo()
        && a.mu_hi() <= b.mu_hi()
        && a.nu_lo() >= b.nu_lo()
        && a.nu_hi() >= b.nu_hi()
}

/// `(bottom, top)` of both total orders.
pub fn extremes() -> (Ivifn, Ivifn) {
    (Ivifn::bottom(), Ivifn::top())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedItem {
    pub label: String,
    pub value: Ivifn,
    pub stats: StatVector,
    /// How this item was separated from the next one down; `None` for the last item.
    pub decided_vs_next: Option<DecidedAt>,
}

/// Sorts labelled alternatives from best to worst. Equal numbers keep their input order.
pub fn rank<L: AsRef<str>>(
    items: &[(L, Ivifn)],
    order: OrderSelector,
) -> Result<Vec<RankedItem>, RankError> {
    let mut seen = HashSet::new();
    for (label, _) in items {
        if !seen.insert(label.as_ref()) {
            return Err(RankError::DuplicateLabel(label.as_ref().to_string()));
        }
    }

    let mut keyed: Vec<_> = items
        .iter()
        .map(|(l, a)| (l.as_ref(), a, order.keys(a)))
        .collect();
    keyed.sort_by(|x, y| y.2.cmp(&x.2));

    let mut out: Vec<RankedItem> = keyed
        .iter()
        .map(|(label, a, _)| RankedItem {
            label: label.to_string(),
            value: (*a).clone(),
            stats: a.stats(),
            decided_vs_next: None,
        })
        .collect();
    for i in 1..out.len() {
        let (prev, next) = (&out[i - 1].value, &out[i].value);
        out[i - 1].decided_vs_next = Some(compare(prev, next, order).decided_at);
    }
    Ok(out)
}
