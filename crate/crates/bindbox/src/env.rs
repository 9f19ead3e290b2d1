use std::any::{type_name, Any};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::debug;

pub(crate) type Cell = Arc<dyn Any + Send + Sync>;

/// Fixed-size store of heterogeneous values, indexed by slot.
///
/// Every slot is owned by exactly one variable, so it is always read back at
/// the type it was written at. Reads still go through [`Any`], so a slot
/// discipline bug panics instead of reinterpreting memory.
#[derive(Clone)]
pub struct Environment {
    slots: Vec<Option<Cell>>,
}

impl Environment {
    pub fn new(size: usize) -> Self {
        Environment {
            slots: vec![None; size],
        }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn set<T: Any + Send + Sync>(&mut self, i: usize, v: T) {
        self.slots[i] = Some(Arc::new(v));
    }

    pub(crate) fn set_cell(&mut self, i: usize, cell: Cell) {
        self.slots[i] = Some(cell);
    }

    pub fn get<T: Any + Clone>(&self, i: usize) -> T {
        let Some(cell) = &self.slots[i] else {
            panic!("environment slot {i} read before being written");
        };
        match cell.downcast_ref::<T>() {
            Some(v) => v.clone(),
            None if debug::enabled() => panic!(
                "environment slot {i} read at the wrong type (expected {})",
                type_name::<T>()
            ),
            None => panic!("environment slot {i} read at the wrong type"),
        }
    }
}

impl fmt::Debug for Environment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.slots.iter().map(|s| s.is_some()))
            .finish()
    }
}

/// Maps variable keys to their slot in the environment a closure will run in.
#[derive(Clone, Debug, Default)]
pub struct VarPosMap {
    slots: HashMap<u64, usize>,
}

impl VarPosMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        VarPosMap {
            slots: HashMap::with_capacity(n),
        }
    }

    pub fn insert(&mut self, key: u64, slot: usize) {
        self.slots.insert(key, slot);
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// Slot of the variable with the given key.
    ///
    /// Panics if the key is unmapped; that means a closure was resolved
    /// against a map built for a different box.
    pub fn slot(&self, key: u64) -> usize {
        debug::record_lookup();
        match self.slots.get(&key) {
            Some(&i) => i,
            None => panic!("variable #{key} has no environment slot"),
        }
    }
}
