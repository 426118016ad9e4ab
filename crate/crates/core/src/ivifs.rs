//! Interval-valued intuitionistic fuzzy sets over finite universes: cut sets,
//! decomposition and Zadeh's extension principle.

use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chain::join;
use crate::ivifn::Ivifn;
use crate::order::OrderSelector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IvifsError {
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("mapping has no image for {0:?}")]
    Unmapped(String),
    #[error("image {0:?} is not in the target universe")]
    OutsideTarget(String),
}

/// An IVIFS: each label of a finite, ordered universe carries one IVIFN.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Ivifs {
    degrees: IndexMap<String, Ivifn>,
}

impl Ivifs {
    pub fn new<I, L>(entries: I) -> Result<Self, IvifsError>
    where
        I: IntoIterator<Item = (L, Ivifn)>,
        L: Into<String>,
    {
        let mut degrees = IndexMap::new();
        for (label, degree) in entries {
            let label = label.into();
            if degrees.contains_key(&label) {
                return Err(IvifsError::DuplicateLabel(label));
            }
            degrees.insert(label, degree);
        }
        Ok(Ivifs { degrees })
    }

    /// Every label of `universe` gets the same degree.
    pub fn constant<L: AsRef<str>>(universe: &[L], degree: &Ivifn) -> Result<Self, IvifsError> {
        Ivifs::new(
            universe
                .iter()
                .map(|l| (l.as_ref().to_string(), degree.clone())),
        )
    }

    pub fn universe(&self) -> impl Iterator<Item = &str> {
        self.degrees.keys().map(String::as_str)
    }

    pub fn degree(&self, label: &str) -> Option<&Ivifn> {
        self.degrees.get(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Ivifn)> {
        self.degrees.iter().map(|(l, d)| (l.as_str(), d))
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Degree values in universe order, duplicates included.
    pub fn degree_values(&self) -> Vec<Ivifn> {
        self.degrees.values().cloned().collect()
    }

    /// The cut set `{ x | A(x) >= alpha }`, in universe order.
    pub fn cut(&self, alpha: &Ivifn, order: OrderSelector) -> Vec<String> {
        let alpha_keys = order.keys(alpha);
        self.degrees
            .iter()
            .filter(|(_, d)| order.keys(d) >= alpha_keys)
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Rebuilds each degree as the join of the candidates whose cut contains the label.
    ///
    /// The result equals `self` whenever `candidates` contains every degree value.
    pub fn reconstruct(&self, candidates: &[Ivifn], order: OrderSelector) -> Ivifs {
        let degrees = self
            .degrees
            .iter()
            .map(|(label, degree)| {
                let own = order.keys(degree);
                let below: Vec<Ivifn> = candidates
                    .iter()
                    .filter(|c| order.keys(c) <= own)
                    .cloned()
                    .collect();
                (label.clone(), join(&below, order))
            })
            .collect();
        Ivifs { degrees }
    }

    /// Zadeh's extension of `f: X -> Y` to IVIFS: the image degree of `y` is the
    /// join of `A` over the preimage of `y`, or the bottom element if it is empty.
    pub fn zadeh_extend<F, L>(
        &self,
        f: F,
        universe_y: &[L],
        order: OrderSelector,
    ) -> Result<Ivifs, IvifsError>
    where
        F: Fn(&str) -> Option<String>,
        L: AsRef<str>,
    {
        let mut preimages: IndexMap<String, Vec<Ivifn>> = IndexMap::new();
        for y in universe_y {
            if preimages
                .insert(y.as_ref().to_string(), Vec::new())
                .is_some()
            {
                return Err(IvifsError::DuplicateLabel(y.as_ref().to_string()));
            }
        }
        for (x, degree) in &self.degrees {
            let y = f(x).ok_or_else(|| IvifsError::Unmapped(x.clone()))?;
            preimages
                .get_mut(&y)
                .ok_or(IvifsError::OutsideTarget(y))?
                .push(degree.clone());
        }
        let degrees = preimages
            .into_iter()
            .map(|(y, pre)| (y, join(&pre, order)))
            .collect();
        Ok(Ivifs { degrees })
    }

    /// [`Ivifs::zadeh_extend`] with the map given as a lookup table.
    pub fn zadeh_extend_table<L: AsRef<str>>(
        &self,
        map: &HashMap<String, String>,
        universe_y: &[L],
        order: OrderSelector,
    ) -> Result<Ivifs, IvifsError> {
        self.zadeh_extend(|x| map.get(x).cloned(), universe_y, order)
    }
}
