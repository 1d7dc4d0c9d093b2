const NIL: usize = usize::MAX;

/// Keyed slot array with an intrusive doubly linked order over the live
/// keys. A key that is not yet bound goes to the front when inserted, so
/// `insert` followed by `pop_front` is a LIFO stack. All operations except
/// iteration and `clear` run in `O(1)`.
#[derive(Debug, Clone)]
pub struct ArrayList<T> {
    slots: Vec<Option<T>>,
    prev: Vec<usize>,
    next: Vec<usize>,
    head: usize,
    len: usize,
}

impl<T: Clone> ArrayList<T> {
    /// An empty list accepting keys `0..capacity`.
    pub fn new(capacity: usize) -> ArrayList<T> {
        ArrayList {
            slots: vec![None; capacity],
            prev: vec![NIL; capacity],
            next: vec![NIL; capacity],
            head: NIL,
            len: 0,
        }
    }
}

impl<T> ArrayList<T> {
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, key: usize) -> bool {
        self.slots[key].is_some()
    }

    pub fn get(&self, key: usize) -> Option<&T> {
        self.slots[key].as_ref()
    }

    /// Binds `value` to `key`. An existing binding is overwritten in place.
    pub fn insert(&mut self, key: usize, value: T) {
        if self.slots[key].replace(value).is_some() {
            return;
        }
        self.prev[key] = NIL;
        self.next[key] = self.head;
        if self.head != NIL {
            self.prev[self.head] = key;
        }
        self.head = key;
        self.len += 1;
    }

    /// Unbinds `key`, returning its value if it was bound.
    pub fn remove(&mut self, key: usize) -> Option<T> {
        let value = self.slots[key].take()?;
        let (p, n) = (self.prev[key], self.next[key]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p] = n;
        }
        if n != NIL {
            self.prev[n] = p;
        }
        self.prev[key] = NIL;
        self.next[key] = NIL;
        self.len -= 1;
        Some(value)
    }

    /// Removes and returns the most recently inserted entry.
    pub fn pop_front(&mut self) -> Option<(usize, T)> {
        let key = self.head;
        if key == NIL {
            return None;
        }
        self.remove(key).map(|v| (key, v))
    }

    pub fn front(&self) -> Option<usize> {
        (self.head != NIL).then_some(self.head)
    }

    pub fn clear(&mut self) {
        while self.pop_front().is_some() {}
    }

    /// Live keys from front to back.
    pub fn keys(&self) -> Keys<'_, T> {
        Keys {
            list: self,
            at: self.head,
        }
    }
}

impl ArrayList<()> {
    /// Set-style insertion.
    pub fn add(&mut self, key: usize) {
        self.insert(key, ());
    }
}

pub struct Keys<'a, T> {
    list: &'a ArrayList<T>,
    at: usize,
}

impl<T> Iterator for Keys<'_, T> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.at == NIL {
            return None;
        }
        let key = self.at;
        self.at = self.list.next[key];
        Some(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifo_with_overwrite_and_removal() {
        let mut l: ArrayList<i32> = ArrayList::new(6);
        l.insert(1, 10);
        l.insert(4, 40);
        l.insert(2, 20);
        l.insert(4, 41);
        assert_eq!(l.keys().collect::<Vec<_>>(), vec![2, 4, 1]);
        assert_eq!(l.get(4), Some(&41));
        assert_eq!(l.remove(4), Some(41));
        assert_eq!(l.remove(4), None);
        assert_eq!(l.pop_front(), Some((2, 20)));
        assert_eq!(l.pop_front(), Some((1, 10)));
        assert!(l.pop_front().is_none());
        assert!(l.is_empty());
    }

    #[test]
    fn clear_empties_every_slot() {
        let mut l: ArrayList<()> = ArrayList::new(4);
        (0..4).for_each(|k| l.add(k));
        l.clear();
        assert_eq!(l.len(), 0);
        assert!((0..4).all(|k| !l.contains(k)));
    }
}
