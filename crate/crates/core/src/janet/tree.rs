//! Janet trees.
//!
//! Every node carries a pair `(var, deg)`. Following `ndg` links walks
//! through the distinct degrees of `var` inside one Janet group in
//! increasing order; following the `nvr` link of a node descends into the
//! subgroup with that degree and moves on to the next variable. Leaves hold
//! the stored monomials. A leaf sits at the last variable its monomial
//! actually uses, so trailing zero exponents cost no nodes.
//!
//! Two situations need an extra node:
//! * when no stored monomial has `deg_1 = 0` the root `(1,0)` is an empty
//!   placeholder that only links to the degree chain;
//! * a monomial alone in its subgroup whose node still has an `ndg`
//!   successor gets its leaf one variable further down at degree 0. When
//!   that variable would be `x_{n+1}` the leaf uses a virtual variable
//!   of degree 0 past the end of the ring.
//!
//! The shape is a function of the stored set alone: inserting and removing
//! keeps the tree identical to one built from scratch.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Var, VarSet};
use crate::text::{format_monomial, VarNames};

type NodeId = u32;

#[derive(Debug, Clone)]
enum Content<H> {
    /// Only the root placeholder is ever empty.
    Empty,
    /// The `nvr` link.
    Inner(NodeId),
    Leaf(Monomial, H),
}

#[derive(Debug, Clone)]
struct Node<H> {
    var: u32,
    deg: u64,
    ndg: Option<NodeId>,
    /// Number of stored monomials below this node (its `nvr` subtree or leaf).
    count: usize,
    content: Content<H>,
}

/// A Janet tree over leading monomials, each leaf carrying a handle `H`.
#[derive(Debug, Clone)]
pub struct JanetTree<H> {
    nvars: u32,
    nodes: Vec<Node<H>>,
    free: Vec<NodeId>,
    root: Option<NodeId>,
    len: usize,
}

impl<H> JanetTree<H> {
    pub fn new(nvars: u32) -> Self {
        JanetTree { nvars, nodes: Vec::new(), free: Vec::new(), root: None, len: 0 }
    }

    /// Builds the tree for a set of monomials with distinct values.
    pub fn build(nvars: u32, items: impl IntoIterator<Item = (Monomial, H)>) -> Result<Self> {
        let items: Vec<(Monomial, H)> = items.into_iter().collect();
        let mut seen = HashSet::with_capacity(items.len());
        for (m, _) in &items {
            if m.nvars() != nvars {
                return Err(Error::AmbientMismatch(nvars, m.nvars()));
            }
            if !seen.insert(m) {
                return Err(Error::DuplicateMonomial);
            }
        }
        let mut tree = JanetTree::new(nvars);
        tree.len = items.len();
        if !items.is_empty() {
            tree.root = Some(tree.build_root(items));
        }
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn nvars(&self) -> u32 {
        self.nvars
    }

    fn alloc(&mut self, var: u32, deg: u64, ndg: Option<NodeId>, count: usize, content: Content<H>) -> NodeId {
        let node = Node { var, deg, ndg, count, content };
        match self.free.pop() {
            Some(id) => {
                self.nodes[id as usize] = node;
                id
            }
            None => {
                self.nodes.push(node);
                (self.nodes.len() - 1) as NodeId
            }
        }
    }

    fn release(&mut self, id: NodeId) {
        let node = &mut self.nodes[id as usize];
        node.content = Content::Empty;
        node.ndg = None;
        node.count = 0;
        self.free.push(id);
    }

    #[inline]
    fn node(&self, id: NodeId) -> &Node<H> {
        &self.nodes[id as usize]
    }

    #[inline]
    fn node_mut(&mut self, id: NodeId) -> &mut Node<H> {
        &mut self.nodes[id as usize]
    }

    fn build_root(&mut self, items: Vec<(Monomial, H)>) -> NodeId {
        let head = self.build_chain(items, 0);
        if self.node(head).deg > 0 {
            self.alloc(0, 0, Some(head), 0, Content::Empty)
        } else {
            head
        }
    }

    fn build_chain(&mut self, mut group: Vec<(Monomial, H)>, var: u32) -> NodeId {
        debug_assert!(!group.is_empty());
        group.sort_by_key(|(m, _)| m.deg_at(var));
        let mut buckets: Vec<Vec<(Monomial, H)>> = Vec::new();
        for item in group {
            match buckets.last_mut() {
                Some(b) if b[0].0.deg_at(var) == item.0.deg_at(var) => b.push(item),
                _ => buckets.push(vec![item]),
            }
        }
        let mut next = None;
        for mut bucket in buckets.into_iter().rev() {
            let deg = bucket[0].0.deg_at(var);
            let count = bucket.len();
            let content = if count >= 2 {
                Content::Inner(self.build_chain(bucket, var + 1))
            } else {
                let (m, h) = bucket.pop().unwrap();
                self.singleton_content(m, h, var, next.is_some())
            };
            next = Some(self.alloc(var, deg, next, count, content));
        }
        next.unwrap()
    }

    /// Content of a node at `var` whose subgroup is `{m}`.
    fn singleton_content(&mut self, m: Monomial, h: H, var: u32, has_ndg: bool) -> Content<H> {
        if m.last_var().is_some_and(|v| v.0 > var) {
            Content::Inner(self.build_chain(vec![(m, h)], var + 1))
        } else if has_ndg {
            Content::Inner(self.alloc(var + 1, 0, None, 1, Content::Leaf(m, h)))
        } else {
            Content::Leaf(m, h)
        }
    }

    pub fn insert(&mut self, m: Monomial, h: H) -> Result<()> {
        self.insert_inner(m, h).map(|_| ())
    }

    /// Inserts `m` and reports the stored elements for which the insertion
    /// made a variable nonmultiplicative. Nobody else's partition changes.
    pub fn insert_reporting(&mut self, m: Monomial, h: H) -> Result<Option<(Var, Vec<&H>)>> {
        let Some(node) = self.insert_inner(m, h)? else {
            return Ok(None);
        };
        let mut handles = Vec::new();
        match &self.node(node).content {
            Content::Inner(child) => self.collect_handles(*child, &mut handles),
            _ => unreachable!("a node that gains an ndg successor has an nvr subtree"),
        }
        Ok(Some((Var(self.node(node).var), handles)))
    }

    fn collect_handles<'a>(&'a self, head: NodeId, out: &mut Vec<&'a H>) {
        let mut cur = Some(head);
        while let Some(c) = cur {
            match &self.node(c).content {
                Content::Inner(child) => self.collect_handles(*child, out),
                Content::Leaf(_, h) => out.push(h),
                Content::Empty => {}
            }
            cur = self.node(c).ndg;
        }
    }

    fn insert_inner(&mut self, m: Monomial, h: H) -> Result<Option<NodeId>> {
        if m.nvars() != self.nvars {
            return Err(Error::AmbientMismatch(self.nvars, m.nvars()));
        }
        let mut gained = None;
        match self.root {
            None => self.root = Some(self.build_root(vec![(m, h)])),
            Some(root) => {
                let head = self.insert_chain(root, 0, m, h, &mut gained)?;
                debug_assert_eq!(head, root);
            }
        }
        self.len += 1;
        Ok(gained)
    }

    fn insert_chain(&mut self, head: NodeId, var: u32, m: Monomial, h: H, gained: &mut Option<NodeId>) -> Result<NodeId> {
        let d = m.deg_at(var);
        let (mut prev, mut cur) = (None, Some(head));
        while let Some(c) = cur {
            if self.node(c).deg >= d {
                break;
            }
            prev = Some(c);
            cur = self.node(c).ndg;
        }
        if let Some(c) = cur.filter(|&c| self.node(c).deg == d) {
            let content = match &self.node(c).content {
                Content::Leaf(e, _) if *e == m => return Err(Error::DuplicateMonomial),
                Content::Inner(child) => {
                    let child = *child;
                    Content::Inner(self.insert_chain(child, var + 1, m, h, gained)?)
                }
                Content::Leaf(..) => {
                    let Content::Leaf(e, he) = std::mem::replace(&mut self.node_mut(c).content, Content::Empty) else {
                        unreachable!()
                    };
                    // e has nothing past `var`, so it heads every chain below
                    // until m branches off, and there it becomes nonmultiplicative
                    let chain = self.build_chain(vec![(e, he), (m, h)], var + 1);
                    let mut c = chain;
                    while self.node(c).ndg.is_none() {
                        let Content::Inner(next) = self.node(c).content else { break };
                        c = next;
                    }
                    *gained = self.node(c).ndg.map(|_| c);
                    Content::Inner(chain)
                }
                Content::Empty => {
                    let has_ndg = self.node(c).ndg.is_some();
                    self.singleton_content(m, h, var, has_ndg)
                }
            };
            let node = self.node_mut(c);
            node.content = content;
            node.count += 1;
            return Ok(head);
        }
        let content = self.singleton_content(m, h, var, cur.is_some());
        let new = self.alloc(var, d, cur, 1, content);
        match prev {
            None => Ok(new),
            Some(p) => {
                self.node_mut(p).ndg = Some(new);
                if cur.is_none() {
                    self.gained_ndg(p);
                    *gained = Some(p);
                }
                Ok(head)
            }
        }
    }

    fn gained_ndg(&mut self, p: NodeId) {
        if matches!(self.node(p).content, Content::Leaf(..)) {
            let var = self.node(p).var;
            let Content::Leaf(e, he) = std::mem::replace(&mut self.node_mut(p).content, Content::Empty) else {
                unreachable!()
            };
            let leaf = self.alloc(var + 1, 0, None, 1, Content::Leaf(e, he));
            self.node_mut(p).content = Content::Inner(leaf);
        }
    }

    /// Removes `m` and returns its handle.
    pub fn remove(&mut self, m: &Monomial) -> Result<H> {
        let root = self.root.ok_or(Error::NotFound)?;
        let (head, item) = self.remove_chain(root, 0, m)?;
        self.root = match head {
            None => None,
            Some(hd) if self.node(hd).deg > 0 => Some(self.alloc(0, 0, Some(hd), 0, Content::Empty)),
            Some(hd) => {
                let node = self.node(hd);
                if matches!(node.content, Content::Empty) && node.ndg.is_none() {
                    self.release(hd);
                    None
                } else {
                    Some(hd)
                }
            }
        };
        self.len -= 1;
        Ok(item)
    }

    fn remove_chain(&mut self, head: NodeId, var: u32, m: &Monomial) -> Result<(Option<NodeId>, H)> {
        let d = m.deg_at(var);
        let (mut prev, mut cur) = (None, Some(head));
        while let Some(c) = cur {
            if self.node(c).deg >= d {
                break;
            }
            prev = Some(c);
            cur = self.node(c).ndg;
        }
        let c = cur.filter(|&c| self.node(c).deg == d).ok_or(Error::NotFound)?;
        let (emptied, item) = match &self.node(c).content {
            Content::Empty => return Err(Error::NotFound),
            Content::Leaf(e, _) if e != m => return Err(Error::NotFound),
            Content::Leaf(..) => {
                let Content::Leaf(_, h) = std::mem::replace(&mut self.node_mut(c).content, Content::Empty) else {
                    unreachable!()
                };
                (true, h)
            }
            Content::Inner(child) => {
                let child = *child;
                match self.remove_chain(child, var + 1, m)? {
                    (None, h) => (true, h),
                    (Some(nc), h) => {
                        let node = self.node_mut(c);
                        node.content = Content::Inner(nc);
                        node.count -= 1;
                        if node.count == 1 {
                            self.normalize_singleton(c);
                        }
                        (false, h)
                    }
                }
            }
        };
        if !emptied {
            return Ok((Some(head), item));
        }
        let next = self.node(c).ndg;
        self.release(c);
        match prev {
            None => Ok((next, item)),
            Some(p) => {
                self.node_mut(p).ndg = next;
                if next.is_none() && self.node(p).count == 1 {
                    self.normalize_singleton(p);
                }
                Ok((Some(head), item))
            }
        }
    }

    /// Rebuilds the content of a node whose subgroup has one element.
    fn normalize_singleton(&mut self, c: NodeId) {
        let content = std::mem::replace(&mut self.node_mut(c).content, Content::Empty);
        let (m, h) = match content {
            Content::Leaf(m, h) => (m, h),
            Content::Inner(child) => {
                let mut items = Vec::with_capacity(1);
                self.drain(child, &mut items);
                debug_assert_eq!(items.len(), 1);
                items.pop().unwrap()
            }
            Content::Empty => unreachable!("singleton node without content"),
        };
        let (var, has_ndg) = (self.node(c).var, self.node(c).ndg.is_some());
        let content = self.singleton_content(m, h, var, has_ndg);
        self.node_mut(c).content = content;
    }

    /// Frees a chain and everything below it, collecting the stored items.
    fn drain(&mut self, head: NodeId, out: &mut Vec<(Monomial, H)>) {
        let mut cur = Some(head);
        while let Some(c) = cur {
            cur = self.node(c).ndg;
            match std::mem::replace(&mut self.node_mut(c).content, Content::Empty) {
                Content::Inner(child) => self.drain(child, out),
                Content::Leaf(m, h) => out.push((m, h)),
                Content::Empty => {}
            }
            self.release(c);
        }
    }

    /// Finds the leaf whose monomial Janet-divides `w`.
    fn search(&self, w: &Monomial, visits: &mut usize) -> Option<NodeId> {
        let mut nu = self.root?;
        *visits = 1;
        loop {
            let node = self.node(nu);
            let dw = w.deg_at(node.var);
            if dw < node.deg {
                return None;
            }
            let mut node = node;
            while let Some(nd) = node.ndg {
                if dw < self.node(nd).deg {
                    break;
                }
                nu = nd;
                node = self.node(nd);
                *visits += 1;
            }
            // A remaining ndg successor makes the variable nonmultiplicative
            // for everything below, so its degree in w must match exactly.
            if node.ndg.is_some() && dw != node.deg {
                return None;
            }
            match node.content {
                Content::Inner(child) => {
                    nu = child;
                    *visits += 1;
                }
                Content::Leaf(..) => return Some(nu),
                Content::Empty => return None,
            }
        }
    }

    /// The stored monomial that Janet-divides `w`, with its handle.
    pub fn j_divisor(&self, w: &Monomial) -> Option<(&Monomial, &H)> {
        let mut visits = 0;
        let leaf = self.search(w, &mut visits)?;
        match &self.node(leaf).content {
            Content::Leaf(m, h) => Some((m, h)),
            _ => unreachable!(),
        }
    }

    /// Number of nodes the divisor search for `w` touches.
    pub fn visit_count(&self, w: &Monomial) -> usize {
        let mut visits = 0;
        self.search(w, &mut visits);
        visits
    }

    /// Handle stored for exactly `m`.
    pub fn get(&self, m: &Monomial) -> Option<&H> {
        let leaf = self.exact_path(m, |_, _| {})?;
        match &self.node(leaf).content {
            Content::Leaf(_, h) => Some(h),
            _ => None,
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.get(m).is_some()
    }

    fn exact_path(&self, m: &Monomial, mut visit: impl FnMut(u32, bool)) -> Option<NodeId> {
        let mut nu = self.root?;
        loop {
            let var = self.node(nu).var;
            let d = m.deg_at(var);
            while self.node(nu).deg < d {
                nu = self.node(nu).ndg?;
            }
            let node = self.node(nu);
            if node.deg != d {
                return None;
            }
            visit(var, node.ndg.is_some());
            match &node.content {
                Content::Inner(child) => nu = *child,
                Content::Leaf(e, _) => return (e == m).then_some(nu),
                Content::Empty => return None,
            }
        }
    }

    /// `NM_J(m, U)` read off the tree, `None` if `m` is not stored.
    pub fn nonmultiplicative(&self, m: &Monomial) -> Option<VarSet> {
        let mut nm = VarSet::new();
        let nvars = self.nvars;
        self.exact_path(m, |var, has_ndg| {
            if has_ndg && var < nvars {
                nm.insert(Var(var));
            }
        })?;
        Some(nm)
    }

    /// Every stored handle with its nonmultiplicative variables.
    pub fn nonmultiplicative_all(&self) -> Vec<(&Monomial, &H, VarSet)> {
        let mut out = Vec::with_capacity(self.len);
        if let Some(root) = self.root {
            self.collect_nm(root, &mut VarSet::new(), &mut out);
        }
        out
    }

    fn collect_nm<'a>(&'a self, head: NodeId, nm: &mut VarSet, out: &mut Vec<(&'a Monomial, &'a H, VarSet)>) {
        let mut cur = Some(head);
        while let Some(c) = cur {
            let node = self.node(c);
            let mark = node.ndg.is_some() && node.var < self.nvars;
            let saved = mark.then(|| nm.clone());
            if mark {
                nm.insert(Var(node.var));
            }
            match &node.content {
                Content::Inner(child) => self.collect_nm(*child, nm, out),
                Content::Leaf(m, h) => out.push((m, h, nm.clone())),
                Content::Empty => {}
            }
            if let Some(saved) = saved {
                *nm = saved;
            }
            cur = node.ndg;
        }
    }

    /// Stored monomials and handles, in tree order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &H)> {
        self.nodes.iter().filter_map(|n| match &n.content {
            Content::Leaf(m, h) => Some((m, h)),
            _ => None,
        })
    }

    /// Checks the node-state predicates and path invariants.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let Some(root) = self.root else {
            return if self.len == 0 { Ok(()) } else { Err(format!("no root but {} elements", self.len)) };
        };
        let r = self.node(root);
        if r.var != 0 || r.deg != 0 {
            return Err(format!("root is ({},{})", r.var + 1, r.deg));
        }
        let mut prefix = Vec::new();
        let total = self.check_chain(root, 0, &mut prefix, true)?;
        if total != self.len {
            return Err(format!("tree holds {total} leaves, len is {}", self.len));
        }
        Ok(())
    }

    fn check_chain(&self, head: NodeId, var: u32, prefix: &mut Vec<u64>, is_root: bool) -> std::result::Result<usize, String> {
        let mut total = 0;
        let mut cur = Some(head);
        let mut last_deg: Option<u64> = None;
        while let Some(c) = cur {
            let node = self.node(c);
            let at = format!("node ({},{})", node.var + 1, node.deg);
            if node.var != var {
                return Err(format!("{at} sits in a chain for variable {}", var + 1));
            }
            if last_deg.is_some_and(|d| d >= node.deg) {
                return Err(format!("{at}: degrees along ndg do not increase"));
            }
            if let Some(nd) = node.ndg {
                if self.node(nd).deg <= node.deg {
                    return Err(format!("{at}: ndg successor has no larger degree"));
                }
            }
            last_deg = Some(node.deg);
            prefix.push(node.deg);
            let below = match &node.content {
                Content::Empty => {
                    if !(is_root && c == head && node.ndg.is_some()) {
                        return Err(format!("{at}: empty node away from the root"));
                    }
                    0
                }
                Content::Inner(child) => {
                    if self.node(*child).var != var + 1 {
                        return Err(format!("{at}: nvr does not move to the next variable"));
                    }
                    self.check_chain(*child, var + 1, prefix, false)?
                }
                Content::Leaf(m, _) => {
                    if node.ndg.is_some() {
                        return Err(format!("{at}: leaf with an ndg successor"));
                    }
                    if node.deg != m.deg_at(node.var) {
                        return Err(format!("{at}: leaf degree differs from {m}"));
                    }
                    for (v, &d) in prefix.iter().enumerate() {
                        if m.deg_at(v as u32) != d {
                            return Err(format!("{at}: {m} does not match its path"));
                        }
                    }
                    if m.last_var().is_some_and(|v| v.0 > node.var) {
                        return Err(format!("{at}: {m} continues past its leaf"));
                    }
                    1
                }
            };
            prefix.pop();
            if below != node.count {
                return Err(format!("{at}: count {} but {below} leaves below", node.count));
            }
            total += below;
            cur = node.ndg;
        }
        Ok(total)
    }

    /// Renders the tree as nested `(var,deg)` pairs, 1-based variables:
    /// `d:` marks the next node in degree, `v:` the next node in variable,
    /// and leaves end in `=monomial`.
    pub fn dump(&self, names: &VarNames) -> String {
        let mut out = String::new();
        if let Some(root) = self.root {
            self.dump_node(root, names, &mut out);
        }
        out
    }

    fn dump_node(&self, id: NodeId, names: &VarNames, out: &mut String) {
        let node = self.node(id);
        write!(out, "({},{})", node.var + 1, node.deg).unwrap();
        if let Content::Leaf(m, _) = &node.content {
            write!(out, "={}", format_monomial(m, names)).unwrap();
        }
        let nvr = match node.content {
            Content::Inner(child) => Some(child),
            _ => None,
        };
        if node.ndg.is_none() && nvr.is_none() {
            return;
        }
        out.push('{');
        if let Some(nd) = node.ndg {
            out.push_str("d:");
            self.dump_node(nd, names, out);
        }
        if let Some(nv) = nvr {
            if node.ndg.is_some() {
                out.push(' ');
            }
            out.push_str("v:");
            self.dump_node(nv, names, out);
        }
        out.push('}');
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::janet::{j_divisor_naive, nm_vars};
    use proptest::prelude::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    fn example_set() -> Vec<Monomial> {
        vec![m(&[2, 1, 0]), m(&[1, 0, 1]), m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]
    }

    fn tree_of(set: &[Monomial]) -> JanetTree<usize> {
        let n = set.first().map_or(3, |u| u.nvars());
        JanetTree::build(n, set.iter().cloned().zip(0..)).unwrap()
    }

    fn xyz() -> VarNames {
        VarNames::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn example_tree_shape() {
        let tree = tree_of(&example_set());
        tree.check_invariants().unwrap();
        assert_eq!(
            tree.dump(&xyz()),
            "(1,0){d:(1,1){d:(1,2){v:(2,1)=x^2*y} v:(2,0){v:(3,1)=x*z}} \
             v:(2,0){d:(2,1){d:(2,2)=y^2 v:(3,1)=y*z} v:(3,2)=z^2}}"
        );
    }

    #[test]
    fn example_divisors() {
        let set = example_set();
        let tree = tree_of(&set);
        assert_eq!(tree.j_divisor(&m(&[2, 2, 1])).map(|(_, &h)| h), Some(0));
        assert_eq!(tree.j_divisor(&m(&[1, 1, 1])).map(|(_, &h)| h), Some(1));
        assert_eq!(tree.j_divisor(&m(&[1, 0, 0])), None);
        for (u, nm) in set.iter().zip(nm_vars(&set).unwrap()) {
            assert_eq!(tree.nonmultiplicative(u), Some(nm));
        }
    }

    #[test]
    fn degree_gap_is_not_multiplicative() {
        // y is nonmultiplicative for y in {y, y^3}, so y^2 has no Janet divisor
        let set = vec![m(&[0, 1]), m(&[0, 3])];
        let tree = tree_of(&set);
        tree.check_invariants().unwrap();
        assert_eq!(tree.j_divisor(&m(&[0, 2])), None);
        assert_eq!(tree.j_divisor(&m(&[5, 1])).map(|(_, &h)| h), Some(0));
        assert_eq!(tree.j_divisor(&m(&[0, 4])).map(|(_, &h)| h), Some(1));
    }

    #[test]
    fn degenerate_trees() {
        let empty: JanetTree<usize> = JanetTree::new(3);
        assert_eq!(empty.j_divisor(&m(&[1, 1, 1])), None);
        assert_eq!(empty.visit_count(&m(&[1, 1, 1])), 0);
        empty.check_invariants().unwrap();

        let single = tree_of(&[m(&[0, 2, 1])]);
        single.check_invariants().unwrap();
        assert_eq!(single.dump(&xyz()), "(1,0){v:(2,2){v:(3,1)=y^2*z}}");
        assert_eq!(single.j_divisor(&m(&[3, 2, 1])).map(|(_, &h)| h), Some(0));

        let unit = tree_of(&[Monomial::one(3)]);
        assert_eq!(unit.dump(&xyz()), "(1,0)=1");
        assert_eq!(unit.j_divisor(&m(&[4, 0, 9])).map(|(_, &h)| h), Some(0));
    }

    #[test]
    fn singleton_visit_bound() {
        // two variables: x^2y stored, queried with itself
        let u = m(&[2, 1]);
        let tree = tree_of(std::slice::from_ref(&u));
        let visits = tree.visit_count(&u);
        assert!(visits <= 2 + 3 + 1, "{visits}");
        assert_eq!(visits, 3); // (1,0) -> (1,2) -> (2,1)
    }

    #[test]
    fn insert_and_remove_examples() {
        let mut tree = tree_of(&[m(&[0, 2, 0]), m(&[0, 0, 2])]);
        tree.insert(m(&[0, 1, 1]), 9).unwrap();
        let rebuilt = tree_of(&[m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])]);
        assert_eq!(tree.dump(&xyz()), rebuilt.dump(&xyz()));
        assert_eq!(tree.insert(m(&[0, 1, 1]), 10), Err(Error::DuplicateMonomial));
        tree.check_invariants().unwrap();

        let mut empty = JanetTree::new(3);
        empty.insert(m(&[1, 0, 0]), 0).unwrap();
        assert_eq!(empty.dump(&xyz()), tree_of(&[m(&[1, 0, 0])]).dump(&xyz()));

        let mut pair = tree_of(&[m(&[2, 1, 0]), m(&[1, 0, 1])]);
        assert_eq!(pair.remove(&m(&[1, 0, 1])), Ok(1));
        assert_eq!(pair.dump(&xyz()), tree_of(&[m(&[2, 1, 0])]).dump(&xyz()));
        assert_eq!(pair.remove(&m(&[2, 1, 0])), Ok(0));
        assert!(pair.is_empty());
        assert_eq!(pair.dump(&xyz()), "");
        assert_eq!(pair.remove(&m(&[2, 1, 0])), Err(Error::NotFound));
    }

    fn small_set(n: usize, max_len: usize, max_deg: u64) -> impl Strategy<Value = Vec<Monomial>> {
        proptest::collection::hash_set(proptest::collection::vec(0..=max_deg, n), 0..=max_len)
            .prop_map(|s| s.into_iter().map(|e| m(&e)).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn matches_naive_search(
            (set, queries) in (1usize..=5).prop_flat_map(|n| (
                small_set(n, 30, 4),
                proptest::collection::vec(proptest::collection::vec(0u64..=6, n), 1..40),
            ))
        ) {
            let tree = tree_of(&set);
            prop_assert!(tree.check_invariants().is_ok());
            let d = set.iter().map(|u| u.degree()).max().unwrap_or(0) as usize;
            let n = set.first().map_or(0, |u| u.nvars() as usize);
            for q in queries.iter().map(|e| m(e)).chain(set.iter().cloned()) {
                let naive = j_divisor_naive(&set, &q).unwrap();
                prop_assert_eq!(tree.j_divisor(&q).map(|(_, &h)| h), naive);
                prop_assert!(tree.visit_count(&q) <= n + d + 1);
            }
            let nm = nm_vars(&set).unwrap();
            for (u, nmu) in set.iter().zip(&nm) {
                let got = tree.nonmultiplicative(u);
                prop_assert_eq!(got.as_ref(), Some(nmu));
            }
            let mut all: Vec<_> = tree.nonmultiplicative_all().into_iter().map(|(_, &h, s)| (h, s)).collect();
            all.sort_by_key(|(h, _)| *h);
            prop_assert_eq!(all, nm.into_iter().enumerate().collect::<Vec<_>>());
        }

        #[test]
        fn mutation_matches_rebuild(
            ops in proptest::collection::vec((any::<bool>(), proptest::collection::vec(0u64..=3, 4)), 1..60)
        ) {
            let names = VarNames::indexed(4);
            let mut tree: JanetTree<usize> = JanetTree::new(4);
            let mut current: Vec<Monomial> = Vec::new();
            for (i, (add, e)) in ops.into_iter().enumerate() {
                let u = m(&e);
                let present = current.contains(&u);
                if add || !present {
                    let before: Vec<(usize, VarSet)> = tree.nonmultiplicative_all().into_iter().map(|(_, &h, s)| (h, s)).collect();
                let r = tree.insert_reporting(u.clone(), i).map(|rep| {
                    rep.map(|(v, hs)| (v, hs.into_iter().copied().collect::<HashSet<usize>>()))
                });
                if let Ok(rep) = &r {
                    let after: std::collections::HashMap<usize, VarSet> =
                        tree.nonmultiplicative_all().into_iter().map(|(_, &h, s)| (h, s)).collect();
                    for (h, old) in before {
                        let new = &after[&h];
                        let grown: Vec<Var> = new.difference(&old).iter().collect();
                        prop_assert!(old.is_subset(new));
                        match rep {
                            Some((v, hs)) if hs.contains(&h) => prop_assert_eq!(grown, vec![*v]),
                            _ => prop_assert!(grown.is_empty()),
                        }
                    }
                }
                    prop_assert_eq!(r.is_err(), present);
                    if !present {
                        current.push(u);
                    }
                } else {
                    prop_assert!(tree.remove(&u).is_ok());
                    current.retain(|x| *x != u);
                }
                prop_assert_eq!(tree.check_invariants(), Ok(()));
                prop_assert_eq!(tree.len(), current.len());
                let rebuilt = JanetTree::build(4, current.iter().cloned().map(|u| (u, 0usize))).unwrap();
                prop_assert_eq!(tree.dump(&names), rebuilt.dump(&names));
            }
        }
    }
}
