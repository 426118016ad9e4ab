//! Suprema and infima in the complete chains `(IVIFN, <=_HZX)` and `(IVIFN, <=_WLW)`.
//!
//! A family is summarised by its [`ChainStats`]: the supremum (or infimum) of
//! the first ranking key, then of the second key over the members attaining
//! the first, and so on, with a flag telling whether each level is attained.
//! When a level is not attained the keys below it are filled with their
//! lexicographically least (for suprema) or greatest (for infima) feasible
//! values, and the resulting key vector is inverted back to an IVIFN.
//!
//! Write an IVIFN through its centres and half-widths:
//! `m = (mu_lo + mu_hi) / 2`, `n = (nu_lo + nu_hi) / 2`,
//! `a = (mu_hi - mu_lo) / 2`, `b = (nu_hi - nu_lo) / 2`.
//! Then `S = m - n`, `H = m + n`, and the IVIFN constraints read
//! `0 <= a <= m`, `0 <= b <= n`, `a + b <= 1 - H`. HZX uses `E2 = a + b`,
//! `E3 = 2a`; WLW uses `T = 2(a - b)`, `G = 2(a + b)`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ivifn::Ivifn;
use crate::order::OrderSelector;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("empty family")]
    EmptyFamily,
    #[error("infeasible statistics: {condition}")]
    Infeasible { condition: String },
}

fn infeasible(condition: impl Into<String>) -> ChainError {
    ChainError::Infeasible {
        condition: condition.into(),
    }
}

/// One level of a [`ChainStats`]: the extreme value of a ranking key over the
/// current level set, and whether some member reaches it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub value: Rational,
    pub attained: bool,
}

impl Level {
    pub fn attained(value: Rational) -> Self {
        Level {
            value,
            attained: true,
        }
    }

    pub fn open(value: Rational) -> Self {
        Level {
            value,
            attained: false,
        }
    }
}

/// Level statistics of a family under one order.
///
/// `levels[k]` is the extreme of key `k + 1` over the members that attain all
/// previous levels. Only the last level may be non-attained; below it the
/// level sets are empty and nothing further is recorded. A depth-4 record may
/// end with either flag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStats {
    pub order: OrderSelector,
    pub levels: Vec<Level>,
}

impl ChainStats {
    pub fn new(order: OrderSelector, levels: Vec<Level>) -> Result<Self, ChainError> {
        let cs = ChainStats { order, levels };
        cs.check_shape()?;
        Ok(cs)
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// `(level1 + level2) / 2`, the membership centre of the extremal element.
    pub fn zeta1(&self) -> Option<Rational> {
        match self.levels.as_slice() {
            [l1, l2, ..] => Some((&l1.value + &l2.value).half()),
            _ => None,
        }
    }

    /// `(level2 - level1) / 2`, the non-membership centre of the extremal element.
    pub fn zeta2(&self) -> Option<Rational> {
        match self.levels.as_slice() {
            [l1, l2, ..] => Some((&l2.value - &l1.value).half()),
            _ => None,
        }
    }

    fn check_shape(&self) -> Result<(), ChainError> {
        let depth = self.levels.len();
        if !(1..=4).contains(&depth) {
            return Err(infeasible(format!("depth {depth} outside 1..=4")));
        }
        for (k, level) in self.levels.iter().enumerate() {
            let last = k + 1 == depth;
            if !last && !level.attained {
                return Err(infeasible(format!(
                    "level {} is not attained but deeper levels are given",
                    k + 1
                )));
            }
            if last && depth < 4 && level.attained {
                return Err(infeasible(format!(
                    "level {depth} is attained, so level {} must be given",
                    depth + 1
                )));
            }
        }
        let s = &self.levels[0].value;
        if s < &Rational::from(-1) || s > &Rational::one() {
            return Err(infeasible(format!("level 1 = {s} outside [-1, 1]")));
        }
        if let Some(h) = self.levels.get(1).map(|l| &l.value) {
            if h < &s.abs() || h > &Rational::one() {
                return Err(infeasible(format!("level 2 = {h} outside [|level 1|, 1]")));
            }
        }
        Ok(())
    }
}

fn keyed(omega: &[Ivifn], order: OrderSelector) -> Vec<(&Ivifn, [Rational; 4])> {
    omega.iter().map(|a| (a, order.keys(a))).collect()
}

fn filtered_levels(
    omega: &[Ivifn],
    order: OrderSelector,
    pick: Ordering,
) -> Result<ChainStats, ChainError> {
    if omega.is_empty() {
        return Err(ChainError::EmptyFamily);
    }
    let mut set = keyed(omega, order);
    let mut levels = Vec::with_capacity(4);
    for k in 0..4 {
        let extreme = set
            .iter()
            .map(|(_, keys)| &keys[k])
            .reduce(|x, y| if y.cmp(x) == pick { y } else { x })
            .expect("level sets of a nonempty family are nonempty")
            .clone();
        set.retain(|(_, keys)| keys[k] == extreme);
        levels.push(Level::attained(extreme));
    }
    Ok(ChainStats { order, levels })
}

/// Maxima of the successive keys over the nested level sets of a finite family.
pub fn level_statistics(omega: &[Ivifn], order: OrderSelector) -> Result<ChainStats, ChainError> {
    filtered_levels(omega, order, Ordering::Greater)
}

/// Minima of the successive keys, the input to [`infimum`].
pub fn lower_level_statistics(
    omega: &[Ivifn],
    order: OrderSelector,
) -> Result<ChainStats, ChainError> {
    filtered_levels(omega, order, Ordering::Less)
}

/// Inverts the key projection: the unique IVIFN with keys `(k1, k2, k3, k4)` under `order`.
pub fn from_stats(order: OrderSelector, keys: [Rational; 4]) -> Result<Ivifn, ChainError> {
    let [k1, k2, k3, k4] = keys;
    let m = (&k1 + &k2).half();
    let n = (&k2 - &k1).half();
    // (mu width, nu width)
    let (mu_w, nu_w) = match order {
        OrderSelector::Hzx => {
            if k4.is_negative() {
                return Err(infeasible(format!("E3 = {k4} < 0")));
            }
            let nu_w = k3.double() - &k4;
            if nu_w.is_negative() {
                return Err(infeasible(format!("2*E2 - E3 = {nu_w} < 0")));
            }
            (k4.clone(), nu_w)
        }
        OrderSelector::Wlw => {
            let mu_w = (&k3 + &k4).half();
            let nu_w = (&k4 - &k3).half();
            if mu_w.is_negative() {
                return Err(infeasible(format!("(T + G)/2 = {mu_w} < 0")));
            }
            if nu_w.is_negative() {
                return Err(infeasible(format!("(G - T)/2 = {nu_w} < 0")));
            }
            (mu_w, nu_w)
        }
    };
    let mu_lo = &m - mu_w.half();
    let mu_hi = &m + mu_w.half();
    let nu_lo = &n - nu_w.half();
    let nu_hi = &n + nu_w.half();
    if mu_lo.is_negative() {
        return Err(infeasible(format!("mu_lo = {mu_lo} < 0")));
    }
    if nu_lo.is_negative() {
        return Err(infeasible(format!("nu_lo = {nu_lo} < 0")));
    }
    let cap = &mu_hi + &nu_hi;
    if cap > Rational::one() {
        return Err(infeasible(format!("mu_hi + nu_hi = {cap} > 1")));
    }
    Ivifn::new(mu_lo, mu_hi, nu_lo, nu_hi).map_err(|e| infeasible(e.to_string()))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Fill {
    /// Lexicographically least feasible completion.
    Least,
    /// Lexicographically greatest feasible completion.
    Greatest,
}

/// Completes `given` (the first `depth` keys) to a full key vector.
fn complete_keys(order: OrderSelector, given: &[Rational], fill: Fill) -> [Rational; 4] {
    let zero = Rational::zero();
    let one = Rational::one();
    let s = given[0].clone();
    let h = match given.get(1) {
        Some(h) => h.clone(),
        None => match fill {
            Fill::Least => s.abs(),
            Fill::Greatest => one.clone(),
        },
    };
    let m = (&s + &h).half();
    let n = (&h - &s).half();
    let c = &one - &h;

    // Half-widths (a, b) of the completion.
    let (a, b) = match (order, given.get(2), fill) {
        (OrderSelector::Hzx, None, Fill::Least) => (zero.clone(), zero.clone()),
        (OrderSelector::Hzx, None, Fill::Greatest) => {
            let total = (&m + &n).min(c.clone());
            let a = m.clone().min(total.clone());
            (a.clone(), total - a)
        }
        (OrderSelector::Hzx, Some(e2), Fill::Least) => {
            let a = (e2 - &n).max(zero.clone());
            (a.clone(), e2 - a)
        }
        (OrderSelector::Hzx, Some(e2), Fill::Greatest) => {
            let a = m.clone().min(e2.clone());
            (a.clone(), e2 - a)
        }
        (OrderSelector::Wlw, None, Fill::Least) => (zero.clone(), n.clone().min(c.clone())),
        (OrderSelector::Wlw, None, Fill::Greatest) => (m.clone().min(c.clone()), zero.clone()),
        (OrderSelector::Wlw, Some(t), Fill::Least) => {
            let b = (-t.half()).max(zero.clone());
            (&b + t.half(), b)
        }
        (OrderSelector::Wlw, Some(t), Fill::Greatest) => {
            let b = n.clone().min(&m - t.half()).min((&c - t.half()).half());
            (&b + t.half(), b)
        }
    };

    let (k3, k4) = match order {
        OrderSelector::Hzx => (&a + &b, a.double()),
        OrderSelector::Wlw => ((&a - &b).double(), (&a + &b).double()),
    };
    match given.len() {
        4 => [s, h, given[2].clone(), given[3].clone()],
        3 => [s, h, given[2].clone(), k4],
        _ => [s, h, k3, k4],
    }
}

fn extremal(cs: &ChainStats, fill: Fill) -> Result<Ivifn, ChainError> {
    cs.check_shape()?;
    let given: Vec<Rational> = cs.levels.iter().map(|l| l.value.clone()).collect();
    let keys = complete_keys(cs.order, &given, fill);
    let out = from_stats(cs.order, keys.clone())?;
    debug_assert_eq!(cs.order.keys(&out), keys);
    Ok(out)
}

/// Least upper bound of a family described by its (upper) level statistics.
///
/// With every level attained this is the maximum of the family. Otherwise the
/// keys below the first open level take their least feasible values, e.g. an
/// open score level `s` yields `<[0,0],[-s,-s]>` for `s <= 0` under HZX.
pub fn supremum(cs: &ChainStats) -> Result<Ivifn, ChainError> {
    extremal(cs, Fill::Least)
}

/// Greatest lower bound of a family described by its (lower) level statistics.
pub fn infimum(cs: &ChainStats) -> Result<Ivifn, ChainError> {
    extremal(cs, Fill::Greatest)
}

/// Binary-or-more join: the maximum of a finite family; the bottom element for an empty one.
pub fn join(omega: &[Ivifn], order: OrderSelector) -> Ivifn {
    keyed(omega, order)
        .into_iter()
        .max_by(|x, y| x.1.cmp(&y.1))
        .map(|(a, _)| a.clone())
        .unwrap_or_else(Ivifn::bottom)
}

/// The minimum of a finite family; the top element for an empty one.
pub fn meet(omega: &[Ivifn], order: OrderSelector) -> Ivifn {
    keyed(omega, order)
        .into_iter()
        .min_by(|x, y| x.1.cmp(&y.1))
        .map(|(a, _)| a.clone())
        .unwrap_or_else(Ivifn::top)
}
