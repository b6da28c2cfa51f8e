use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{GrundyError, Result};

/// The prefix list `{1, …, t}`, stored as `t ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorList(usize);

impl ColorList {
    pub fn new(t: usize) -> Result<Self> {
        if t == 0 {
            return Err(GrundyError::InvalidParameter("a color list is never empty".into()));
        }
        Ok(ColorList(t))
    }

    /// `{1}`.
    pub const SINGLE: ColorList = ColorList(1);

    pub fn len(self) -> usize {
        self.0
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, color: usize) -> bool {
        color >= 1 && color <= self.0
    }
}

impl fmt::Display for ColorList {
    /// Compact label: `123` for `{1,2,3}`, `{1..12}` once colors reach two digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 <= 9 {
            (1..=self.0).try_for_each(|c| write!(f, "{c}"))
        } else {
            write!(f, "{{1..{}}}", self.0)
        }
    }
}

impl Serialize for ColorList {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.0 as u64)
    }
}

/// Output of [`assign_list`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListSelection {
    /// `{1, …, t+1}` where `{1, …, t}` is the largest list-SDR of the input.
    pub list: ColorList,
    /// `representatives[i]` is the input index whose list supplies color `i + 1`.
    pub representatives: Vec<usize>,
}

/// Stable counting sort of list indices by list length. Lengths above
/// `k + 1` share the top bucket; the greedy pick never distinguishes them.
fn sort_by_length(lists: &[ColorList]) -> Vec<usize> {
    let k = lists.len();
    let key = |l: ColorList| l.len().min(k + 1);
    let mut counts = vec![0usize; k + 2];
    for &l in lists {
        counts[key(l)] += 1;
    }
    let mut start = 0;
    for c in counts.iter_mut() {
        let here = *c;
        *c = start;
        start += here;
    }
    let mut sorted = vec![0; k];
    for (i, &l) in lists.iter().enumerate() {
        let slot = &mut counts[key(l)];
        sorted[*slot] = i;
        *slot += 1;
    }
    sorted
}

/// Sorts the lists by length, then scans once picking color 1 from the
/// first list and each next color from the first later list containing it.
/// Runs in O(k) for k lists.
pub fn assign_list(lists: &[ColorList]) -> ListSelection {
    let mut representatives = Vec::new();
    for i in sort_by_length(lists) {
        if lists[i].contains(representatives.len() + 1) {
            representatives.push(i);
        }
    }
    ListSelection { list: ColorList(representatives.len() + 1), representatives }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(ts: &[usize]) -> Vec<ColorList> {
        ts.iter().map(|&t| ColorList::new(t).unwrap()).collect()
    }

    #[test]
    fn worked_example() {
        let sel = assign_list(&lists(&[1, 1, 2, 2, 5]));
        assert_eq!(sel.list.len(), 4);
        assert_eq!(sel.representatives, vec![0, 2, 4]);
    }

    #[test]
    fn empty_input_gives_single() {
        let sel = assign_list(&[]);
        assert_eq!(sel.list, ColorList::SINGLE);
        assert!(sel.representatives.is_empty());
    }

    #[test]
    fn two_singletons() {
        let sel = assign_list(&lists(&[1, 1]));
        assert_eq!(sel.list.len(), 2);
        assert_eq!(sel.representatives, vec![0]);
    }

    #[test]
    fn sort_is_stable() {
        assert_eq!(sort_by_length(&lists(&[3, 1, 9, 1, 3])), vec![1, 3, 0, 4, 2]);
    }

    #[test]
    fn display_and_membership() {
        let l = ColorList::new(4).unwrap();
        assert_eq!(l.to_string(), "1234");
        assert!(l.contains(4) && !l.contains(5) && !l.contains(0));
        assert!(ColorList::new(0).is_err());
    }
}
