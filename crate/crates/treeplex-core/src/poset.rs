//! Finite posets represented by their elements and cover relations.
//!
//! Elements are opaque string keys.  Covers are stored as index pairs
//! `(lower, upper)`.  Order-convex subsets (lower sets, upper sets,
//! intervals) inherit their covers by restriction.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    /// An element key used more than once.
    DuplicateElement { key: String },
    /// A cover index outside `0..len`, or a reflexive cover.
    BadCover { lower: usize, upper: usize },
    /// The cover relation has a directed cycle.
    CoverCycle,
    /// `from_leq` found two distinct comparable-in-both-directions elements.
    NotAntisymmetric { a: String, b: String },
    /// An interval endpoint pair with `a` not below `b`.
    NotComparable { a: String, b: String },
}

impl core::fmt::Display for PosetError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PosetError::DuplicateElement { key } => write!(f, "duplicate element key {key:?}"),
            PosetError::BadCover { lower, upper } => {
                write!(f, "invalid cover ({lower}, {upper})")
            }
            PosetError::CoverCycle => write!(f, "cover relation contains a cycle"),
            PosetError::NotAntisymmetric { a, b } => {
                write!(f, "relation is not antisymmetric on {a:?} and {b:?}")
            }
            PosetError::NotComparable { a, b } => {
                write!(f, "{a:?} is not below {b:?}")
            }
        }
    }
}

impl core::error::Error for PosetError {}

/// A finite poset given by elements and its (irredundant) cover relation.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    elements: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl FinitePoset {
    /// Build from elements and cover pairs `(lower, upper)`.
    ///
    /// Duplicate covers are merged.  The covers are trusted to be
    /// irredundant (no cover implied by a chain of others); the structure
    /// they generate is validated to be acyclic.
    pub fn new(elements: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self, PosetError> {
        let m = elements.len();
        let mut seen = BTreeSet::new();
        for k in &elements {
            if !seen.insert(k.clone()) {
                return Err(PosetError::DuplicateElement { key: k.clone() });
            }
        }
        let mut cov: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(a, b) in &covers {
            if a >= m || b >= m || a == b {
                return Err(PosetError::BadCover { lower: a, upper: b });
            }
            cov.insert((a, b));
        }
        let covers: Vec<(usize, usize)> = cov.into_iter().collect();
        let mut up = vec![Vec::new(); m];
        let mut down = vec![Vec::new(); m];
        for &(a, b) in &covers {
            up[a].push(b);
            down[b].push(a);
        }
        // acyclicity (Kahn)
        let mut indeg: Vec<usize> = down.iter().map(|d| d.len()).collect();
        let mut queue: Vec<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
        let mut visited = 0;
        while let Some(v) = queue.pop() {
            visited += 1;
            for &w in &up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        if visited != m {
            return Err(PosetError::CoverCycle);
        }
        Ok(FinitePoset { elements, covers, up, down })
    }

    /// Build from elements and a comparability predicate `leq(i, j)`.
    ///
    /// The predicate must be a partial order; antisymmetry is verified and
    /// the cover relation is its transitive reduction.
    pub fn from_leq<F: Fn(usize, usize) -> bool>(
        elements: Vec<String>,
        leq: F,
    ) -> Result<Self, PosetError> {
        let m = elements.len();
        let mut less: Vec<Bits> = (0..m).map(|_| Bits::new(m)).collect();
        for (i, row) in less.iter_mut().enumerate() {
            for j in 0..m {
                if i != j && leq(i, j) {
                    row.set(j);
                }
            }
        }
        for i in 0..m {
            for j in less[i].iter_ones() {
                if less[j].get(i) {
                    return Err(PosetError::NotAntisymmetric {
                        a: elements[i].clone(),
                        b: elements[j].clone(),
                    });
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..m {
            'pair: for j in less[i].iter_ones() {
                for z in less[i].iter_ones() {
                    if z != j && less[z].get(j) {
                        continue 'pair;
                    }
                }
                covers.push((i, j));
            }
        }
        FinitePoset::new(elements, covers)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, key: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == key)
    }

    /// Reachability rows of the cover DAG: `reach[i]` has bit `j` set when
    /// `i < j` (strictly).
    fn strict_reach(&self) -> Vec<Bits> {
        let m = self.len();
        let mut reach: Vec<Bits> = (0..m).map(|_| Bits::new(m)).collect();
        // process in reverse topological order so successor rows are final
        let order = self.topo_order();
        for &v in order.iter().rev() {
            let mut row = Bits::new(m);
            for &w in &self.up[v] {
                row.set(w);
                row.or_assign(&reach[w]);
            }
            reach[v] = row;
        }
        reach
    }

    fn topo_order(&self) -> Vec<usize> {
        let m = self.len();
        let mut indeg: Vec<usize> = self.down.iter().map(|d| d.len()).collect();
        let mut queue: Vec<usize> = (0..m).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(m);
        while let Some(v) = queue.pop() {
            order.push(v);
            for &w in &self.up[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    queue.push(w);
                }
            }
        }
        order
    }

    /// Whether element `i` is below or equal to element `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        if i == j {
            return true;
        }
        // BFS upward from i
        let m = self.len();
        let mut seen = Bits::new(m);
        seen.set(i);
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            for &w in &self.up[v] {
                if w == j {
                    return true;
                }
                if !seen.get(w) {
                    seen.set(w);
                    stack.push(w);
                }
            }
        }
        false
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.down[v].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.up[v].is_empty()).collect()
    }

    /// Indices of all elements `<= i`.
    pub fn lower_set_indices(&self, i: usize) -> Vec<usize> {
        self.closure(i, false)
    }

    /// Indices of all elements `>= i`.
    pub fn upper_set_indices(&self, i: usize) -> Vec<usize> {
        self.closure(i, true)
    }

    fn closure(&self, i: usize, upward: bool) -> Vec<usize> {
        let m = self.len();
        let mut seen = Bits::new(m);
        seen.set(i);
        let mut stack = vec![i];
        while let Some(v) = stack.pop() {
            let next = if upward { &self.up[v] } else { &self.down[v] };
            for &w in next {
                if !seen.get(w) {
                    seen.set(w);
                    stack.push(w);
                }
            }
        }
        seen.iter_ones().collect()
    }

    /// The induced sub-poset on an order-convex index set (ascending).
    /// Covers restrict because nothing between two members is missing.
    fn induced(&self, indices: &[usize]) -> FinitePoset {
        let pos: BTreeMap<usize, usize> =
            indices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let elements: Vec<String> = indices.iter().map(|&v| self.elements[v].clone()).collect();
        let mut covers = Vec::new();
        for &(a, b) in &self.covers {
            if let (Some(&x), Some(&y)) = (pos.get(&a), pos.get(&b)) {
                covers.push((x, y));
            }
        }
        FinitePoset::new(elements, covers).expect("induced sub-poset is valid")
    }

    /// The sub-poset of everything below (and including) `i`.
    pub fn lower_set(&self, i: usize) -> FinitePoset {
        self.induced(&self.lower_set_indices(i))
    }

    /// The sub-poset of everything above (and including) `i`.
    pub fn upper_set(&self, i: usize) -> FinitePoset {
        self.induced(&self.upper_set_indices(i))
    }

    /// The closed interval `[a, b]`.
    pub fn interval(&self, a: usize, b: usize) -> Result<FinitePoset, PosetError> {
        if !self.leq(a, b) {
            return Err(PosetError::NotComparable {
                a: self.elements[a].clone(),
                b: self.elements[b].clone(),
            });
        }
        let above: BTreeSet<usize> = self.upper_set_indices(a).into_iter().collect();
        let below: BTreeSet<usize> = self.lower_set_indices(b).into_iter().collect();
        let both: Vec<usize> = above.intersection(&below).copied().collect();
        Ok(self.induced(&both))
    }

    /// The dual poset: same elements, covers reversed.
    pub fn dual(&self) -> FinitePoset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        FinitePoset::new(self.elements.clone(), covers).expect("dual of a poset is a poset")
    }

    /// The product poset, ordered componentwise.  Element keys are
    /// `"(a x b)"`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let m2 = other.len();
        let mut elements = Vec::with_capacity(self.len() * m2);
        for a in &self.elements {
            for b in &other.elements {
                elements.push(format!("({a} x {b})"));
            }
        }
        let mut covers = Vec::new();
        for &(a, b) in &self.covers {
            for j in 0..m2 {
                covers.push((a * m2 + j, b * m2 + j));
            }
        }
        for i in 0..self.len() {
            for &(a, b) in &other.covers {
                covers.push((i * m2 + a, i * m2 + b));
            }
        }
        FinitePoset::new(elements, covers).expect("product of posets is a poset")
    }

    /// f-vector of the order complex: `counts[d]` is the number of chains
    /// with `d + 1` elements.
    pub fn order_complex(&self) -> Vec<u128> {
        let m = self.len();
        if m == 0 {
            return Vec::new();
        }
        let reach = self.strict_reach();
        let order = self.topo_order();
        // ending[v][l] = number of chains with l+1 elements whose top is v
        let mut ending: Vec<Vec<u128>> = vec![vec![1]; m];
        for &v in &order {
            // all strict predecessors of v
            let mut acc: Vec<u128> = Vec::new();
            for y in 0..m {
                if reach[y].get(v) {
                    for (l, &c) in ending[y].iter().enumerate() {
                        if acc.len() <= l + 1 {
                            acc.resize(l + 2, 0);
                        }
                        acc[l + 1] += c;
                    }
                }
            }
            let mut row = vec![1u128];
            for (l, &c) in acc.iter().enumerate() {
                if c > 0 {
                    if row.len() <= l {
                        row.resize(l + 1, 0);
                    }
                    row[l] += c;
                }
            }
            ending[v] = row;
        }
        let mut counts: Vec<u128> = Vec::new();
        for row in &ending {
            for (l, &c) in row.iter().enumerate() {
                if counts.len() <= l {
                    counts.resize(l + 1, 0);
                }
                counts[l] += c;
            }
        }
        counts
    }

    /// Euler characteristic of the order complex (a single point gives 1).
    pub fn euler_characteristic(&self) -> i128 {
        self.order_complex()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i128 } else { -(c as i128) })
            .sum()
    }

    /// Search for an order isomorphism onto `other`; returns the witness
    /// index map `self -> other` if one exists.
    ///
    /// Uses iterated neighborhood-color refinement to cut the search space,
    /// then backtracking on cover-consistency; the witness is verified to
    /// map the cover relation bijectively before it is returned.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        let m = self.len();
        if m != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        if m == 0 {
            return Some(Vec::new());
        }
        let (ca, cb) = refine_colors(self, other)?;
        // group other's vertices by color
        let mut by_color: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (v, &c) in cb.iter().enumerate() {
            by_color.entry(c).or_default().push(v);
        }
        {
            let mut mine: BTreeMap<u64, usize> = BTreeMap::new();
            for &c in &ca {
                *mine.entry(c).or_default() += 1;
            }
            for (c, n) in &mine {
                if by_color.get(c).map(|v| v.len()) != Some(*n) {
                    return None;
                }
            }
        }
        // order self's vertices: seed with the rarest color, then grow
        // along cover adjacency so every later vertex is pinned down by
        // already-assigned neighbors instead of being guessed freely
        let mut verts: Vec<usize> = Vec::with_capacity(m);
        let mut chosen = vec![false; m];
        let mut anchors = vec![0usize; m];
        for _ in 0..m {
            let v = (0..m)
                .filter(|&v| !chosen[v])
                .min_by_key(|&v| {
                    (core::cmp::Reverse(anchors[v]), by_color[&ca[v]].len(), ca[v], v)
                })
                .expect("an unchosen vertex remains");
            chosen[v] = true;
            verts.push(v);
            for &u in self.up[v].iter().chain(self.down[v].iter()) {
                if !chosen[u] {
                    anchors[u] += 1;
                }
            }
        }
        let search =
            IsoSearch { p: self, q: other, ca: &ca, by_color: &by_color, verts: &verts };
        let mut map = vec![usize::MAX; m];
        let mut used = Bits::new(m);
        if !assign(&search, 0, &mut map, &mut used) {
            return None;
        }
        // full verification: covers map exactly onto covers
        let mapped: BTreeSet<(usize, usize)> =
            self.covers.iter().map(|&(a, b)| (map[a], map[b])).collect();
        let theirs: BTreeSet<(usize, usize)> = other.covers.iter().copied().collect();
        if mapped != theirs {
            return None;
        }
        Some(map)
    }
}

/// Immutable context for the backtracking search in `is_isomorphic`:
/// the two posets, the refined colors of `p`, `q`'s vertices grouped by
/// color, and the assignment order.
struct IsoSearch<'a> {
    p: &'a FinitePoset,
    q: &'a FinitePoset,
    ca: &'a [u64],
    by_color: &'a BTreeMap<u64, Vec<usize>>,
    verts: &'a [usize],
}

fn assign(s: &IsoSearch, k: usize, map: &mut [usize], used: &mut Bits) -> bool {
    if k == s.verts.len() {
        return true;
    }
    let v = s.verts[k];
    for &w in &s.by_color[&s.ca[v]] {
        if used.get(w) {
            continue;
        }
        // the assigned cover-neighbors of `v` must map exactly onto the
        // assigned cover-neighbors of `w`: membership in one direction plus
        // matching counts forces the sets to coincide
        if !neighbors_consistent(&s.p.up[v], &s.q.up[w], map, used)
            || !neighbors_consistent(&s.p.down[v], &s.q.down[w], map, used)
        {
            continue;
        }
        map[v] = w;
        used.set(w);
        if assign(s, k + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used.clear(w);
    }
    false
}

/// True when the already-assigned vertices in `p_adj` map into `q_adj` and
/// account for every already-used vertex of `q_adj`.
fn neighbors_consistent(p_adj: &[usize], q_adj: &[usize], map: &[usize], used: &Bits) -> bool {
    let mut assigned = 0usize;
    for &u in p_adj {
        let fu = map[u];
        if fu != usize::MAX {
            assigned += 1;
            if !q_adj.contains(&fu) {
                return false;
            }
        }
    }
    q_adj.iter().filter(|&&x| used.get(x)).count() == assigned
}

/// Color vertices of both posets by iterated refinement over cover
/// neighborhoods; colors are interned jointly so they are comparable across
/// the two posets.  Returns `None` early when color multisets diverge.
fn refine_colors(p: &FinitePoset, q: &FinitePoset) -> Option<(Vec<u64>, Vec<u64>)> {
    let m = p.len();
    let init = |r: &FinitePoset| -> Vec<Vec<u64>> {
        (0..m)
            .map(|v| vec![r.up[v].len() as u64, r.down[v].len() as u64])
            .collect()
    };
    let mut sig_a = init(p);
    let mut sig_b = init(q);
    let mut ca = vec![0u64; m];
    let mut cb = vec![0u64; m];
    let mut distinct = 0usize;
    loop {
        let mut intern: BTreeMap<Vec<u64>, u64> = BTreeMap::new();
        for v in 0..m {
            let next = intern.len() as u64;
            ca[v] = *intern.entry(sig_a[v].clone()).or_insert(next);
            let next = intern.len() as u64;
            cb[v] = *intern.entry(sig_b[v].clone()).or_insert(next);
        }
        // multiset equality check
        let mut ma: BTreeMap<u64, usize> = BTreeMap::new();
        let mut mb: BTreeMap<u64, usize> = BTreeMap::new();
        for v in 0..m {
            *ma.entry(ca[v]).or_default() += 1;
            *mb.entry(cb[v]).or_default() += 1;
        }
        if ma != mb {
            return None;
        }
        if intern.len() <= distinct {
            return Some((ca, cb));
        }
        distinct = intern.len();
        let recolor = |r: &FinitePoset, colors: &[u64]| -> Vec<Vec<u64>> {
            (0..m)
                .map(|v| {
                    let mut s = vec![colors[v]];
                    let mut ups: Vec<u64> = r.up[v].iter().map(|&w| colors[w]).collect();
                    ups.sort_unstable();
                    let mut downs: Vec<u64> = r.down[v].iter().map(|&w| colors[w]).collect();
                    downs.sort_unstable();
                    s.push(u64::MAX);
                    s.extend(ups);
                    s.push(u64::MAX);
                    s.extend(downs);
                    s
                })
                .collect()
        };
        sig_a = recolor(p, &ca);
        sig_b = recolor(q, &cb);
    }
}

/// Subset key like `{1,3}`; the empty set renders as `{}`.
fn subset_key(members: &[u32]) -> String {
    let parts: Vec<String> = members.iter().map(|m| format!("{m}")).collect();
    format!("{{{}}}", parts.join(","))
}

/// The Boolean lattice of all subsets of `{1..=k}` under inclusion.
pub fn boolean_lattice(k: u32) -> FinitePoset {
    assert!(k <= 16, "boolean lattice limited to 16 atoms");
    boolean_poset(k, true)
}

/// The poset of nonempty subsets of `{1..=k}` under inclusion.
pub fn boolean_star(k: u32) -> FinitePoset {
    assert!((1..=16).contains(&k), "boolean star needs 1..=16 atoms");
    boolean_poset(k, false)
}

fn boolean_poset(k: u32, with_empty: bool) -> FinitePoset {
    let lo: u32 = if with_empty { 0 } else { 1 };
    let masks: Vec<u32> = (lo..1u32 << k).collect();
    let pos: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let elements: Vec<String> = masks
        .iter()
        .map(|&m| {
            let members: Vec<u32> = (0..k).filter(|b| m >> b & 1 == 1).map(|b| b + 1).collect();
            subset_key(&members)
        })
        .collect();
    let mut covers = Vec::new();
    for &m in &masks {
        for b in 0..k {
            if m >> b & 1 == 0 {
                let upper = m | 1 << b;
                if let Some(&i) = pos.get(&m) {
                    covers.push((i, pos[&upper]));
                }
            }
        }
    }
    FinitePoset::new(elements, covers).expect("boolean posets are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn chain(n: usize) -> FinitePoset {
        let elements = (0..n).map(|i| i.to_string()).collect();
        let covers = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::new(elements, covers).unwrap()
    }

    #[test]
    fn from_leq_computes_transitive_reduction() {
        let elements: Vec<String> = (0..4u32).map(|i| i.to_string()).collect();
        // divisibility on {1,2,3,4} -> indices 0..4 as values 1..4
        let p = FinitePoset::from_leq(elements, |i, j| (j + 1) % (i + 1) == 0).unwrap();
        // covers: 1|2, 1|3, 2|4
        assert_eq!(p.covers(), &[(0, 1), (0, 2), (1, 3)]);
        assert!(p.leq(0, 3));
        assert!(!p.leq(2, 3));
    }

    #[test]
    fn from_leq_rejects_symmetry() {
        let elements: Vec<String> = vec!["a".into(), "b".into()];
        let err = FinitePoset::from_leq(elements, |_, _| true).unwrap_err();
        assert!(matches!(err, PosetError::NotAntisymmetric { .. }));
    }

    #[test]
    fn new_rejects_cycles_and_bad_indices() {
        let elements: Vec<String> = vec!["a".into(), "b".into()];
        assert!(matches!(
            FinitePoset::new(elements.clone(), vec![(0, 1), (1, 0)]),
            Err(PosetError::CoverCycle)
        ));
        assert!(matches!(
            FinitePoset::new(elements, vec![(0, 2)]),
            Err(PosetError::BadCover { .. })
        ));
    }

    #[test]
    fn boolean_lattice_shape() {
        let b3 = boolean_lattice(3);
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.covers().len(), 12);
        assert_eq!(b3.minimal_elements().len(), 1);
        let star = boolean_star(3);
        assert_eq!(star.len(), 7);
        assert_eq!(star.covers().len(), 9);
        assert_eq!(star.minimal_elements().len(), 3);
        // lower set of {1,2} has three elements: {1}, {2}, {1,2}
        let i = star.index_of("{1,2}").unwrap();
        assert_eq!(star.lower_set(i).len(), 3);
        // order complex: 7 vertices, 12 edges, 6 triangles
        assert_eq!(star.order_complex(), vec![7, 12, 6]);
        assert_eq!(star.euler_characteristic(), 1);
    }

    #[test]
    fn interval_and_duality() {
        let b3 = boolean_lattice(3);
        let bot = b3.index_of("{}").unwrap();
        let top = b3.index_of("{1,2,3}").unwrap();
        let iv = b3.interval(bot, top).unwrap();
        assert_eq!(iv.len(), 8);
        let a = b3.index_of("{1}").unwrap();
        let b = b3.index_of("{2}").unwrap();
        assert!(matches!(
            b3.interval(a, b),
            Err(PosetError::NotComparable { .. })
        ));
        let d = b3.dual();
        assert_eq!(d.minimal_elements().len(), 1);
        assert_eq!(d.element(d.minimal_elements()[0]), "{1,2,3}");
        // dual is an involution on the cover set
        let dd = d.dual();
        assert_eq!(dd.covers(), b3.covers());
    }

    #[test]
    fn product_of_chains_is_a_grid() {
        let p = chain(2).product(&chain(3));
        assert_eq!(p.len(), 6);
        // 2x3 grid has 7 cover edges
        assert_eq!(p.covers().len(), 7);
        assert_eq!(p.element(0), "(0 x 0)");
        // a point is the unit for products
        let point = chain(1);
        let q = point.product(&chain(3));
        assert!(q.is_isomorphic(&chain(3)).is_some());
    }

    #[test]
    fn order_complex_of_a_chain_counts_subsets() {
        // chains of a 3-chain: all nonempty subsets are chains
        assert_eq!(chain(3).order_complex(), vec![3, 3, 1]);
        assert_eq!(chain(1).order_complex(), vec![1]);
        assert_eq!(chain(1).euler_characteristic(), 1);
    }

    #[test]
    fn isomorphism_finds_a_witness_and_rejects_non_isomorphic() {
        let b3 = boolean_lattice(3);
        let c2 = chain(2);
        let cube = c2.product(&c2).product(&c2);
        let w = cube.is_isomorphic(&b3).unwrap();
        // verify manually: covers map onto covers
        let mapped: BTreeSet<(usize, usize)> =
            cube.covers().iter().map(|&(a, b)| (w[a], w[b])).collect();
        let target: BTreeSet<(usize, usize)> = b3.covers().iter().copied().collect();
        assert_eq!(mapped, target);
        // a 6-chain is not a 2x3 grid
        assert!(chain(6).is_isomorphic(&chain(2).product(&chain(3))).is_none());
        // same size, same cover count, different shape: {V poset + point} vs 3-chain + ...
        let v = FinitePoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1), (0, 2)],
        )
        .unwrap();
        assert!(v.is_isomorphic(&chain(3)).is_none());
    }
}
