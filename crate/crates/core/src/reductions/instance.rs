use serde::{Deserialize, Serialize};

use crate::error::{CoverError, Result};

/// Universe `0..universe`, a family of non-empty subsets, and an optional
/// budget `t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
    #[serde(default)]
    pub t: Option<usize>,
}

impl SetCoverInstance {
    /// Sorts each set and checks that items are in range, no set is empty,
    /// no set repeats an item, and every item is covered.
    pub fn new(universe: usize, sets: Vec<Vec<usize>>, t: Option<usize>) -> Result<Self> {
        let mut inst = SetCoverInstance { universe, sets, t };
        for s in &mut inst.sets {
            s.sort_unstable();
        }
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.universe == 0 {
            return Err(CoverError::invalid("universe must have at least one item"));
        }
        if self.sets.is_empty() {
            return Err(CoverError::invalid("family has no sets"));
        }
        let mut covered = vec![false; self.universe];
        for (j, s) in self.sets.iter().enumerate() {
            if s.is_empty() {
                return Err(CoverError::invalid(format!("set {j} is empty")));
            }
            let mut seen = vec![false; self.universe];
            for &x in s {
                if x >= self.universe {
                    return Err(CoverError::invalid(format!(
                        "set {j} names item {x} outside 0..{}",
                        self.universe
                    )));
                }
                if seen[x] {
                    return Err(CoverError::invalid(format!("set {j} repeats item {x}")));
                }
                seen[x] = true;
                covered[x] = true;
            }
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return Err(CoverError::invalid(format!("item {x} is in no set")));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SetCoverInstance = serde_json::from_str(text)
            .map_err(|e| CoverError::invalid(format!("set-cover JSON: {e}")))?;
        SetCoverInstance::new(raw.universe, raw.sets, raw.t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn num_sets(&self) -> usize {
        self.sets.len()
    }

    pub fn contains(&self, set: usize, item: usize) -> bool {
        self.sets[set].binary_search(&item).is_ok()
    }

    /// Indices of the sets containing `item`, ascending.
    pub fn sets_containing(&self, item: usize) -> Vec<usize> {
        (0..self.sets.len())
            .filter(|&j| self.contains(j, item))
            .collect()
    }

    /// Items not covered by the chosen sets, ascending.
    pub fn uncovered(&self, chosen: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.universe];
        for &j in chosen {
            for &x in &self.sets[j] {
                covered[x] = true;
            }
        }
        (0..self.universe).filter(|&x| !covered[x]).collect()
    }
}

/// `3p` values, each strictly between `s/4` and `s/2`, summing to `s·p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInstance {
    pub s: usize,
    pub values: Vec<usize>,
}

impl ThreePartitionInstance {
    pub fn new(s: usize, values: Vec<usize>) -> Result<Self> {
        let inst = ThreePartitionInstance { s, values };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        let s = self.s;
        if self.values.is_empty() || !self.values.len().is_multiple_of(3) {
            return Err(CoverError::invalid(format!(
                "need a positive multiple of three values, got {}",
                self.values.len()
            )));
        }
        for (i, &a) in self.values.iter().enumerate() {
            if 4 * a <= s || 2 * a >= s {
                return Err(CoverError::invalid(format!(
                    "value {a} at index {i} is not strictly between s/4 and s/2 for s={s}"
                )));
            }
        }
        let total: usize = self.values.iter().sum();
        if total != s * self.p() {
            return Err(CoverError::invalid(format!(
                "values sum to {total}, expected s*p = {}",
                s * self.p()
            )));
        }
        Ok(())
    }

    pub fn p(&self) -> usize {
        self.values.len() / 3
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ThreePartitionInstance = serde_json::from_str(text)
            .map_err(|e| CoverError::invalid(format!("3-partition JSON: {e}")))?;
        raw.validate()?;
        Ok(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}
