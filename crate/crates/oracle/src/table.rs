use exact_algebra::{Exp, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Exact coefficients indexed by exponent vectors. Missing keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoefficientTable {
    entries: BTreeMap<Exp, Q>,
}

impl CoefficientTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: Exp, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(key.clone()).or_insert_with(Q::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn get(&self, key: &[i64]) -> Q {
        self.entries.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Exp, &Q)> {
        self.entries.iter()
    }

    /// Entries whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&[i64]) -> bool) -> Self {
        CoefficientTable {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl FromIterator<(Exp, Q)> for CoefficientTable {
    fn from_iter<I: IntoIterator<Item = (Exp, Q)>>(iter: I) -> Self {
        let mut t = CoefficientTable::new();
        for (k, v) in iter {
            t.add(k, v);
        }
        t
    }
}
