//! Increasing binary trees built by repeated minimum splitting, the
//! tree-shape characterizations of permutation classes, the subtree-swap
//! action, and the map from down-up permutations to Dyck paths.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};
use thiserror::Error;

use crate::perm::Perm;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MinTreeError {
    #[error("letters must be distinct, {letter} repeats")]
    DuplicateLetter { letter: u8 },
    #[error("node {label} does not have two children")]
    NoTwoChildren { label: u8 },
    #[error("node {label} is not in the tree")]
    NoSuchNode { label: u8 },
    #[error("permutation is not simsun with maximal last entry")]
    NotSimsunLast,
    #[error("permutation has a double descent or ends with a descent")]
    NotReduced,
    #[error("permutation is not down-up")]
    NotDownUp,
    #[error("steps do not form a path returning to the axis: {reason}")]
    BadPath { reason: String },
}

/// Binary tree on distinct labels where every child label exceeds its
/// parent's; the in-order reading recovers the word it was built from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinTree {
    root: Option<u8>,
    kids: BTreeMap<u8, (Option<u8>, Option<u8>)>,
}

/// Splits the word at its minimum: the minimum becomes the root, the two
/// sides become the subtrees.
pub fn build_min_tree(word: &[u8]) -> Result<MinTree, MinTreeError> {
    let mut seen = std::collections::BTreeSet::new();
    for &v in word {
        if !seen.insert(v) {
            return Err(MinTreeError::DuplicateLetter { letter: v });
        }
    }
    let mut tree = MinTree { root: None, kids: BTreeMap::new() };
    tree.root = build_into(word, &mut tree.kids);
    Ok(tree)
}

fn build_into(word: &[u8], kids: &mut BTreeMap<u8, (Option<u8>, Option<u8>)>) -> Option<u8> {
    let (pos, &min) = word.iter().enumerate().min_by_key(|&(_, v)| v)?;
    let left = build_into(&word[..pos], kids);
    let right = build_into(&word[pos + 1..], kids);
    kids.insert(min, (left, right));
    Some(min)
}

impl MinTree {
    pub fn root(&self) -> Option<u8> {
        self.root
    }

    pub fn labels(&self) -> impl Iterator<Item = u8> + '_ {
        self.kids.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.kids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kids.is_empty()
    }

    pub fn left(&self, label: u8) -> Option<u8> {
        self.kids.get(&label).and_then(|&(l, _)| l)
    }

    pub fn right(&self, label: u8) -> Option<u8> {
        self.kids.get(&label).and_then(|&(_, r)| r)
    }

    pub fn child_count(&self, label: u8) -> usize {
        usize::from(self.left(label).is_some()) + usize::from(self.right(label).is_some())
    }

    pub fn has_lone_left(&self, label: u8) -> bool {
        self.left(label).is_some() && self.right(label).is_none()
    }

    /// Labels with two children, ascending.
    pub fn two_child_nodes(&self) -> Vec<u8> {
        self.labels().filter(|&v| self.child_count(v) == 2).collect()
    }

    /// In-order reading: left subtree, node, right subtree.
    pub fn read_word(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.len());
        self.read_into(self.root, &mut out);
        out
    }

    fn read_into(&self, node: Option<u8>, out: &mut Vec<u8>) {
        if let Some(v) = node {
            self.read_into(self.left(v), out);
            out.push(v);
            self.read_into(self.right(v), out);
        }
    }

    /// Root, its right child, that node's right child, and so on.
    pub fn rightmost_path(&self) -> Vec<u8> {
        let mut path = Vec::new();
        let mut node = self.root;
        while let Some(v) = node {
            path.push(v);
            node = self.right(v);
        }
        path
    }

    /// The last node of the in-order reading; end of the rightmost path.
    pub fn in_order_last(&self) -> Option<u8> {
        self.rightmost_path().last().copied()
    }

    /// Root-to-node label sequence.
    fn path_to(&self, label: u8) -> Option<Vec<u8>> {
        let mut path = Vec::new();
        let mut node = self.root?;
        loop {
            path.push(node);
            if node == label {
                return Some(path);
            }
            // Children carry larger labels; the target sits on whichever
            // side contains it, found by probing both.
            node = [self.left(node), self.right(node)]
                .into_iter()
                .flatten()
                .find(|&c| self.subtree_contains(c, label))?;
        }
    }

    fn subtree_contains(&self, node: u8, label: u8) -> bool {
        node == label
            || [self.left(node), self.right(node)]
                .into_iter()
                .flatten()
                .any(|c| self.subtree_contains(c, label))
    }

    pub fn to_json(&self) -> Value {
        fn node_json(tree: &MinTree, node: Option<u8>) -> Value {
            match node {
                None => Value::Null,
                Some(v) => json!({
                    "label": v,
                    "left": node_json(tree, tree.left(v)),
                    "right": node_json(tree, tree.right(v)),
                }),
            }
        }
        node_json(self, self.root)
    }
}

/// Swaps the two subtrees of node `s`; an involution on trees.
pub fn foata_strehl(tree: &MinTree, s: u8) -> Result<MinTree, MinTreeError> {
    let mut out = tree.clone();
    match out.kids.get_mut(&s) {
        None => Err(MinTreeError::NoSuchNode { label: s }),
        Some((left, right)) if left.is_some() && right.is_some() => {
            std::mem::swap(left, right);
            Ok(out)
        }
        Some(_) => Err(MinTreeError::NoTwoChildren { label: s }),
    }
}

fn tree_of(p: &Perm) -> MinTree {
    build_min_tree(p.one_line()).expect("permutation letters are distinct")
}

/// No double descent and no final descent, read off the tree shape: no node
/// may have a left child as its only child.
pub fn is_r_perm(p: &Perm) -> bool {
    let tree = tree_of(p);
    let ok = tree.labels().all(|v| !tree.has_lone_left(v));
    ok
}

/// Removal definition: for every `k`, deleting the `k` largest values must
/// leave a word without two consecutive descents.
pub fn is_simsun(p: &Perm) -> bool {
    let n = p.n();
    (1..=n).all(|cap| {
        let word: Vec<usize> = p.one_line().iter().map(|&v| v as usize).filter(|&v| v <= cap).collect();
        word.windows(3).all(|w| !(w[0] > w[1] && w[1] > w[2]))
    })
}

/// Tree test for simsun words ending in their maximum: the maximum is the
/// in-order last node, no lone left children, and every two-child node off
/// the rightmost path has its left child larger than its right child.
pub fn is_simsun_tree(tree: &MinTree) -> bool {
    if tree.is_empty() {
        return true;
    }
    let max = tree.labels().max().expect("nonempty");
    if tree.in_order_last() != Some(max) {
        return false;
    }
    if tree.labels().any(|v| tree.has_lone_left(v)) {
        return false;
    }
    let on_path: Vec<u8> = tree.rightmost_path();
    tree.two_child_nodes().into_iter().filter(|v| !on_path.contains(v)).all(|v| {
        tree.left(v).expect("two children") > tree.right(v).expect("two children")
    })
}

/// Compresses the up/down shape of a simsun permutation ending in its
/// maximum into a word over c and d: each descent-ascent pair becomes d,
/// each remaining ascent becomes c.
pub fn cd_monomial(p: &Perm) -> Result<String, MinTreeError> {
    let n = p.n();
    if n == 0 || p.at(n) != n || !is_simsun(p) {
        return Err(MinTreeError::NotSimsunLast);
    }
    let mut out = String::new();
    let mut i = 1;
    while i < n {
        if p.at(i) > p.at(i + 1) {
            // No double descents and a final ascent, so a descent is always
            // followed by an ascent.
            out.push('d');
            i += 2;
        } else {
            out.push('c');
            i += 1;
        }
    }
    Ok(out)
}

/// Orbit of the subtree-swap action: the operators commute and keep the set
/// of two-child nodes fixed, so the orbit is indexed by subsets of that set.
pub fn fs_orbit(p: &Perm) -> Vec<Perm> {
    let tree = tree_of(p);
    let swappable = tree.two_child_nodes();
    let mut orbit = Vec::with_capacity(1 << swappable.len());
    for mask in 0u32..(1 << swappable.len()) {
        let mut t = tree.clone();
        for (bit, &s) in swappable.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                t = foata_strehl(&t, s).expect("two-child node stays two-child");
            }
        }
        orbit.push(Perm::from_one_line(&t.read_word()).expect("tree reads back a permutation"));
    }
    orbit.sort();
    orbit.dedup();
    assert_eq!(orbit.len(), 1 << swappable.len(), "orbit elements must be distinct");
    orbit
}

/// Canonical orbit element for words without double or final descents:
/// swap the maximum onto the rightmost path, then reorder every two-child
/// node off that path so its left child is the larger.
pub fn simsun_representative(p: &Perm) -> Result<Perm, MinTreeError> {
    if !is_r_perm(p) {
        return Err(MinTreeError::NotReduced);
    }
    let n = p.n();
    if n == 0 {
        return Ok(p.clone());
    }
    let max = n as u8;
    let mut tree = tree_of(p);
    while tree.in_order_last() != Some(max) {
        let on_path = tree.rightmost_path();
        let to_max = tree.path_to(max).expect("maximum present");
        let anchor = *to_max.iter().rev().find(|v| on_path.contains(v)).expect("root is on both");
        tree = foata_strehl(&tree, anchor).expect("anchor has a left child toward the maximum");
    }
    let on_path = tree.rightmost_path();
    for s in tree.two_child_nodes() {
        if !on_path.contains(&s) && tree.left(s) < tree.right(s) {
            tree = foata_strehl(&tree, s).expect("two children");
        }
    }
    debug_assert!(is_simsun_tree(&tree));
    Ok(Perm::from_one_line(&tree.read_word()).expect("tree reads back a permutation"))
}

/// Unit step of a lattice path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Step {
    Up,
    Down,
}

/// Nonnegative lattice path from the axis back to the axis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, MinTreeError> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(MinTreeError::BadPath { reason: format!("dips below the axis at step {}", i + 1) });
            }
        }
        if height != 0 {
            return Err(MinTreeError::BadPath { reason: format!("ends at height {height}") });
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height of each step's upper endpoint.
    pub fn step_levels(&self) -> Vec<usize> {
        let mut height = 0usize;
        self.steps
            .iter()
            .map(|s| match s {
                Step::Up => {
                    height += 1;
                    height
                }
                Step::Down => {
                    let level = height;
                    height -= 1;
                    level
                }
            })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// Reads a Dyck path off a down-up permutation: step `i` rises when node
/// `i` of the min-tree has a child and falls when it is a leaf; an odd last
/// node is skipped.
pub fn dyck_path_of(p: &Perm) -> Result<DyckPath, MinTreeError> {
    if !p.is_down_up() {
        return Err(MinTreeError::NotDownUp);
    }
    let tree = tree_of(p);
    let steps: Vec<Step> = (1..=2 * (p.n() / 2) as u8)
        .map(|v| if tree.child_count(v) > 0 { Step::Up } else { Step::Down })
        .collect();
    DyckPath::from_steps(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_down_up, enumerate_sn};
    use crate::stats::{des, descent_set};

    fn p(vals: &[u8]) -> Perm {
        Perm::from_one_line(vals).unwrap()
    }

    #[test]
    fn build_shape_and_read_back() {
        let t = build_min_tree(&[4, 2, 3, 5, 1, 6]).unwrap();
        assert_eq!(t.root(), Some(1));
        assert_eq!(t.right(1), Some(6));
        assert_eq!(t.left(1), Some(2));
        assert_eq!(t.left(2), Some(4));
        assert_eq!(t.right(2), Some(3));
        assert_eq!(t.right(3), Some(5));
        assert_eq!(t.read_word(), vec![4, 2, 3, 5, 1, 6]);
        assert_eq!(build_min_tree(&[7]).unwrap().read_word(), vec![7]);
        assert!(build_min_tree(&[1, 1]).is_err());
        for q in enumerate_sn(7).unwrap() {
            assert_eq!(build_min_tree(q.one_line()).unwrap().read_word(), q.one_line());
        }
    }

    #[test]
    fn descents_match_missing_right_children() {
        for q in enumerate_sn(6).unwrap() {
            let t = build_min_tree(q.one_line()).unwrap();
            let last = *q.one_line().last().unwrap();
            let no_right = t.labels().filter(|&v| t.right(v).is_none() && v != last).count();
            assert_eq!(des(&q), no_right, "at {q}");
        }
    }

    #[test]
    fn r_class_membership() {
        let r3: Vec<Perm> = enumerate_sn(3).unwrap().filter(is_r_perm).collect();
        assert_eq!(r3, vec![p(&[1, 2, 3]), p(&[2, 1, 3]), p(&[3, 1, 2])]);
        // Equivalent description: no double descents, no final descent.
        for q in enumerate_sn(6).unwrap() {
            let ds = descent_set(&q);
            let no_double = ds.windows(2).all(|w| w[1] != w[0] + 1);
            let no_final = !ds.contains(&(q.n() - 1));
            assert_eq!(is_r_perm(&q), no_double && no_final, "at {q}");
        }
    }

    #[test]
    fn simsun_counts_match_zigzag_counts() {
        assert!(is_simsun(&p(&[4, 2, 3, 5, 1, 6])));
        let euler = [1usize, 1, 1, 2, 5, 16, 61];
        for (n, &e) in euler.iter().enumerate() {
            let count = enumerate_sn(n)
                .unwrap()
                .filter(|q| is_simsun(q) && (n == 0 || q.at(n) == n))
                .count();
            assert_eq!(count, e, "at n={n}");
        }
    }

    #[test]
    fn simsun_tree_test_agrees_with_removal_definition() {
        for n in 1..=7usize {
            for q in enumerate_sn(n).unwrap() {
                let by_tree = is_simsun_tree(&build_min_tree(q.one_line()).unwrap());
                let by_removal = is_simsun(&q) && q.at(n) == n;
                assert_eq!(by_tree, by_removal, "at {q}");
            }
        }
    }

    #[test]
    fn cd_monomials() {
        assert_eq!(cd_monomial(&p(&[4, 2, 3, 5, 1, 6])).unwrap(), "dcd");
        assert_eq!(cd_monomial(&p(&[1, 2, 3, 4])).unwrap(), "ccc");
        assert_eq!(cd_monomial(&p(&[2, 1, 3])).unwrap(), "d");
        assert_eq!(cd_monomial(&p(&[1])).unwrap(), "");
        assert!(cd_monomial(&p(&[3, 1, 2])).is_err());
        for q in enumerate_sn(6).unwrap().filter(|q| is_simsun(q) && q.at(6) == 6) {
            let word = cd_monomial(&q).unwrap();
            let degree: usize = word.chars().map(|ch| if ch == 'd' { 2 } else { 1 }).sum();
            assert_eq!(degree, 5, "at {q}");
        }
    }

    #[test]
    fn subtree_swap_example_and_involution() {
        let t = build_min_tree(&[4, 2, 3, 5, 1, 6]).unwrap();
        let swapped = foata_strehl(&t, 2).unwrap();
        assert_eq!(swapped.read_word(), vec![3, 5, 2, 4, 1, 6]);
        assert_eq!(foata_strehl(&swapped, 2).unwrap(), t);
        assert!(foata_strehl(&t, 3).is_err());
        assert!(foata_strehl(&t, 9).is_err());
        for q in enumerate_sn(6).unwrap() {
            let t = build_min_tree(q.one_line()).unwrap();
            for s in t.two_child_nodes() {
                assert_eq!(foata_strehl(&foata_strehl(&t, s).unwrap(), s).unwrap(), t);
            }
        }
    }

    #[test]
    fn orbits() {
        let orbit = fs_orbit(&p(&[3, 1, 2]));
        assert_eq!(orbit, vec![p(&[2, 1, 3]), p(&[3, 1, 2])]);
        for q in enumerate_sn(6).unwrap().filter(is_r_perm) {
            assert_eq!(fs_orbit(&q).len(), 1 << des(&q), "at {q}");
        }
    }

    #[test]
    fn representatives() {
        assert_eq!(simsun_representative(&p(&[3, 1, 2])).unwrap(), p(&[2, 1, 3]));
        assert_eq!(simsun_representative(&p(&[1, 2, 3])).unwrap(), p(&[1, 2, 3]));
        assert!(simsun_representative(&p(&[3, 2, 1])).is_err());
        // Orbits of the no-double-no-final-descent class partition it with
        // exactly one simsun-with-max-last member each.
        for n in 1..=6usize {
            let mut seen = std::collections::BTreeSet::new();
            for q in enumerate_sn(n).unwrap().filter(is_r_perm) {
                let rep = simsun_representative(&q).unwrap();
                assert!(is_simsun(&rep) && rep.at(n) == n, "bad representative {rep} for {q}");
                let orbit = fs_orbit(&q);
                assert!(orbit.contains(&rep));
                let members = orbit.iter().filter(|m| is_simsun(m) && m.at(n) == n).count();
                assert_eq!(members, 1, "orbit of {q} has {members} canonical members");
                seen.insert(rep);
            }
            let expected = enumerate_sn(n).unwrap().filter(|q| is_simsun(q) && q.at(n) == n).count();
            assert_eq!(seen.len(), expected, "at n={n}");
        }
    }

    #[test]
    fn dyck_paths_from_down_up_permutations() {
        assert_eq!(dyck_path_of(&p(&[2, 1, 4, 3])).unwrap().to_string(), "UDUD");
        assert_eq!(dyck_path_of(&p(&[3, 1, 4, 2])).unwrap().to_string(), "UUDD");
        assert_eq!(dyck_path_of(&p(&[2, 1])).unwrap().to_string(), "UD");
        assert!(dyck_path_of(&p(&[1, 2])).is_err());
        for n in 2..=7usize {
            for q in enumerate_down_up(n).unwrap() {
                let path = dyck_path_of(&q).unwrap();
                assert_eq!(path.len(), 2 * (n / 2));
            }
        }
    }

    #[test]
    fn path_validation_and_levels() {
        assert!(DyckPath::from_steps(vec![Step::Down, Step::Up]).is_err());
        assert!(DyckPath::from_steps(vec![Step::Up]).is_err());
        let path = DyckPath::from_steps(vec![Step::Up, Step::Up, Step::Down, Step::Up, Step::Down, Step::Down]).unwrap();
        assert_eq!(path.step_levels(), vec![1, 2, 2, 2, 2, 1]);
        assert_eq!(path.to_string(), "UUDUDD");
    }

    #[test]
    fn tree_json_shape() {
        let t = build_min_tree(&[2, 1, 3]).unwrap();
        assert_eq!(
            t.to_json(),
            json!({
                "label": 1,
                "left": {"label": 2, "left": Value::Null, "right": Value::Null},
                "right": {"label": 3, "left": Value::Null, "right": Value::Null},
            })
        );
    }
}
