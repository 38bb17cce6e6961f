//! Planar marked trees.
//!
//! A planar `n`-tree is a finite tree together with a counterclockwise
//! rotation system (cyclic neighbor order at every vertex) in which `n`
//! distinguished vertices carry the marks `1..=n`.  Every vertex of valence
//! one or two must be marked, so unmarked vertices have valence at least
//! three and the vertex count is at most `2n - 2`.
//!
//! Trees are compared through their canonical codes: two trees are the same
//! planar marked tree exactly when their codes agree, and in that case the
//! label- and rotation-preserving isomorphism between them is unique.

use alloc::collections::btree_map::Entry;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

/// Validation and query errors for planar marked trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeError {
    /// Fewer than three marks requested.
    MarkCountTooSmall { n: u32 },
    /// The rotation lists are not a symmetric, duplicate-free adjacency
    /// structure (self-loop, repeated neighbor, missing back-reference,
    /// or out-of-range vertex).
    RotationInconsistent,
    /// The underlying graph is not connected.
    NotConnected,
    /// The underlying graph has a cycle (edge count differs from `V - 1`).
    NotAcyclic,
    /// The marked labels are not exactly `1..=n`, each used once.
    LabelsNotBijective { n: u32 },
    /// More than `2n - 2` vertices.
    VertexCountExceedsBound { count: usize, max: usize },
    /// An unmarked vertex of valence less than three.
    UnmarkedValenceTooSmall { vertex: usize },
    /// A vertex index outside `0..V`.
    UnknownVertex { vertex: usize },
    /// The vertex is a leaf, so it has no interior neighborhood.
    LeafVertex { vertex: usize },
}

impl core::fmt::Display for TreeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            TreeError::MarkCountTooSmall { n } => write!(f, "mark count must be at least 3 (got {n})"),
            TreeError::RotationInconsistent => write!(f, "rotation system inconsistent"),
            TreeError::NotConnected => write!(f, "graph is not connected"),
            TreeError::NotAcyclic => write!(f, "graph contains a cycle"),
            TreeError::LabelsNotBijective { n } => write!(f, "marks are not exactly 1..={n}"),
            TreeError::VertexCountExceedsBound { count, max } => {
                write!(f, "vertex count exceeds 2n-2 ({count} > {max})")
            }
            TreeError::UnmarkedValenceTooSmall { vertex } => {
                write!(f, "unmarked valence < 3 at vertex {vertex}")
            }
            TreeError::UnknownVertex { vertex } => write!(f, "unknown vertex {vertex}"),
            TreeError::LeafVertex { vertex } => write!(f, "vertex {vertex} is a leaf"),
        }
    }
}

impl core::error::Error for TreeError {}

/// Errors raised when assembling a subforest for contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubforestError {
    /// An edge that is not an edge of the host tree.
    EdgeNotInTree { a: usize, b: usize },
    /// A connected component of the subforest containing two or more marks.
    DoublyMarkedComponent,
}

impl core::fmt::Display for SubforestError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SubforestError::EdgeNotInTree { a, b } => {
                write!(f, "edge ({a}, {b}) is not an edge of the tree")
            }
            SubforestError::DoublyMarkedComponent => {
                write!(f, "a subforest component contains more than one mark")
            }
        }
    }
}

impl core::error::Error for SubforestError {}

/// A planar marked tree with `n` marks.
#[derive(Clone, Debug)]
pub struct PlanarTree {
    n: u32,
    labels: Vec<Option<u32>>,
    rot: Vec<Vec<usize>>,
}

/// An admissible subforest of a specific tree: a set of edges in which each
/// connected component carries at most one mark.  Contracting an admissible
/// subforest yields another planar marked tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subforest {
    edges: Vec<(usize, usize)>,
}

impl Subforest {
    /// Validate `edges` as an admissible subforest of `tree`.
    ///
    /// Edges may be given in either orientation; they are normalized and
    /// sorted.  Fails if an edge is absent from the tree or some component
    /// would merge two marks.
    pub fn new(tree: &PlanarTree, edges: &[(usize, usize)]) -> Result<Self, SubforestError> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            let e = (a.min(b), a.max(b));
            if e.0 >= tree.vertex_count()
                || e.1 >= tree.vertex_count()
                || !tree.rot[e.0].contains(&e.1)
            {
                return Err(SubforestError::EdgeNotInTree { a, b });
            }
            if !norm.contains(&e) {
                norm.push(e);
            }
        }
        norm.sort_unstable();
        if !tree.edge_set_admissible(&norm) {
            return Err(SubforestError::DoublyMarkedComponent);
        }
        Ok(Subforest { edges: norm })
    }

    /// The edges of the subforest, normalized as `(min, max)` and sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Union-find over `0..len`, returning the component vertex lists keyed by
/// root, each sorted ascending; components are ordered by smallest member.
fn components(len: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..len).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(a, b) in edges {
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); len];
    for v in 0..len {
        let r = find(&mut parent, v);
        groups[r].push(v);
    }
    let mut out: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    out.sort_by_key(|g| g[0]);
    out
}

impl PlanarTree {
    /// Validate and build a planar marked tree.
    ///
    /// `labels[v]` is `Some(mark)` for marked vertices and `None` for
    /// unmarked ones; `rotations[v]` lists the neighbors of `v` in
    /// counterclockwise order.
    pub fn new(
        n: u32,
        labels: Vec<Option<u32>>,
        rotations: Vec<Vec<usize>>,
    ) -> Result<Self, TreeError> {
        if n < 3 {
            return Err(TreeError::MarkCountTooSmall { n });
        }
        let v_count = labels.len();
        if rotations.len() != v_count || v_count == 0 {
            return Err(TreeError::RotationInconsistent);
        }
        for (v, r) in rotations.iter().enumerate() {
            for &w in r {
                if w >= v_count || w == v || !rotations[w].contains(&v) {
                    return Err(TreeError::RotationInconsistent);
                }
            }
            for (i, &w) in r.iter().enumerate() {
                if r[i + 1..].contains(&w) {
                    return Err(TreeError::RotationInconsistent);
                }
            }
        }
        let dart_count: usize = rotations.iter().map(|r| r.len()).sum();
        if !dart_count.is_multiple_of(2) {
            return Err(TreeError::RotationInconsistent);
        }
        let e_count = dart_count / 2;
        // connectivity
        let mut seen = vec![false; v_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &rotations[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        if reached != v_count {
            return Err(TreeError::NotConnected);
        }
        if e_count != v_count - 1 {
            return Err(TreeError::NotAcyclic);
        }
        let mut marks: Vec<u32> = labels.iter().filter_map(|l| *l).collect();
        marks.sort_unstable();
        if marks != (1..=n).collect::<Vec<u32>>() {
            return Err(TreeError::LabelsNotBijective { n });
        }
        let max = 2 * n as usize - 2;
        if v_count > max {
            return Err(TreeError::VertexCountExceedsBound { count: v_count, max });
        }
        for v in 0..v_count {
            if labels[v].is_none() && rotations[v].len() < 3 {
                return Err(TreeError::UnmarkedValenceTooSmall { vertex: v });
            }
        }
        Ok(PlanarTree { n, labels, rot: rotations })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.labels.len() - 1
    }

    /// The mark at `v`, if any.
    pub fn label(&self, v: usize) -> Option<u32> {
        self.labels[v]
    }

    pub fn is_marked(&self, v: usize) -> bool {
        self.labels[v].is_some()
    }

    /// Counterclockwise neighbor list of `v`.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn valence(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    /// The vertex carrying `mark`.  Panics if the mark is out of range.
    pub fn vertex_with_mark(&self, mark: u32) -> usize {
        self.labels
            .iter()
            .position(|&l| l == Some(mark))
            .expect("mark out of range")
    }

    /// All edges, normalized `(min, max)` and sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es = Vec::with_capacity(self.edge_count());
        for (v, r) in self.rot.iter().enumerate() {
            for &w in r {
                if v < w {
                    es.push((v, w));
                }
            }
        }
        es.sort_unstable();
        es
    }

    fn edge_set_admissible(&self, edges: &[(usize, usize)]) -> bool {
        for comp in components(self.vertex_count(), edges) {
            if comp.len() < 2 {
                continue;
            }
            let marks = comp.iter().filter(|&&v| self.labels[v].is_some()).count();
            if marks > 1 {
                return false;
            }
        }
        true
    }

    /// Canonical code of the tree.
    ///
    /// The code is the lexicographically least depth-first read-out of the
    /// tree started at the vertex marked `1`, over all rotation starts at
    /// that vertex.  Each child walk enters a vertex just after the dart
    /// pointing back at its parent, so the code determines the planar tree
    /// up to unique isomorphism.
    pub fn canonical_code(&self) -> String {
        self.canonical_code_with_order().0
    }

    /// Canonical code along with the depth-first vertex visit order that
    /// realizes it.
    pub fn canonical_code_with_order(&self) -> (String, Vec<usize>) {
        let v1 = self.vertex_with_mark(1);
        let mut best: Option<(String, Vec<usize>)> = None;
        for s in 0..self.rot[v1].len() {
            let mut code = String::new();
            let mut order = Vec::with_capacity(self.vertex_count());
            self.code_walk(v1, usize::MAX, s, &mut code, &mut order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                best = Some((code, order));
            }
        }
        best.expect("a tree has at least one vertex")
    }

    fn code_walk(
        &self,
        v: usize,
        parent: usize,
        start: usize,
        out: &mut String,
        order: &mut Vec<usize>,
    ) {
        match self.labels[v] {
            Some(l) => out.push_str(&l.to_string()),
            None => out.push('u'),
        }
        order.push(v);
        let d = self.rot[v].len();
        let kids: Vec<usize> = (0..d)
            .map(|i| self.rot[v][(start + i) % d])
            .filter(|&w| w != parent)
            .collect();
        if kids.is_empty() {
            return;
        }
        out.push('(');
        for (i, &w) in kids.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let pos = self.rot[w]
                .iter()
                .position(|&x| x == v)
                .expect("rotation symmetry");
            self.code_walk(w, v, (pos + 1) % self.rot[w].len(), out, order);
        }
        out.push(')');
    }

    /// If `self` and `other` are the same planar marked tree, the unique
    /// isomorphism between them as a vertex map `self -> other`.
    pub fn unique_isomorphism(&self, other: &PlanarTree) -> Option<Vec<usize>> {
        let (ca, oa) = self.canonical_code_with_order();
        let (cb, ob) = other.canonical_code_with_order();
        if ca != cb {
            return None;
        }
        let mut map = vec![usize::MAX; self.vertex_count()];
        for (x, y) in oa.iter().zip(ob.iter()) {
            map[*x] = *y;
        }
        Some(map)
    }

    /// The unique path of vertices from `a` to `b` (inclusive).
    pub fn geodesic(&self, a: usize, b: usize) -> Result<Vec<usize>, TreeError> {
        let v_count = self.vertex_count();
        if a >= v_count {
            return Err(TreeError::UnknownVertex { vertex: a });
        }
        if b >= v_count {
            return Err(TreeError::UnknownVertex { vertex: b });
        }
        let mut prev = vec![usize::MAX; v_count];
        let mut stack = vec![a];
        prev[a] = a;
        while let Some(v) = stack.pop() {
            if v == b {
                break;
            }
            for &w in &self.rot[v] {
                if prev[w] == usize::MAX {
                    prev[w] = v;
                    stack.push(w);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = prev[cur];
            path.push(cur);
        }
        path.reverse();
        Ok(path)
    }

    /// Contract an admissible subforest.
    ///
    /// Each component collapses to one vertex that inherits the component's
    /// unique mark (if any); its rotation is read off by the boundary walk
    /// around the component, which preserves the planar embedding.
    pub fn contract(&self, f: &Subforest) -> PlanarTree {
        self.contract_with_map(f).0
    }

    /// Contraction together with the vertex map `old -> new`.
    pub fn contract_with_map(&self, f: &Subforest) -> (PlanarTree, Vec<usize>) {
        for &(a, b) in &f.edges {
            assert!(
                a < self.vertex_count() && self.rot[a].contains(&b),
                "subforest does not belong to this tree"
            );
        }
        let v_count = self.vertex_count();
        let comps = components(v_count, &f.edges);
        let mut newid = vec![usize::MAX; v_count];
        for (i, comp) in comps.iter().enumerate() {
            for &v in comp {
                newid[v] = i;
            }
        }
        let mut new_labels: Vec<Option<u32>> = Vec::with_capacity(comps.len());
        for comp in &comps {
            let mut ls = comp.iter().filter_map(|&v| self.labels[v]);
            let first = ls.next();
            assert!(ls.next().is_none(), "doubly marked component");
            new_labels.push(first);
        }
        let mut new_rot: Vec<Vec<usize>> = Vec::with_capacity(comps.len());
        for comp in &comps {
            if comp.len() == 1 {
                let v = comp[0];
                new_rot.push(self.rot[v].iter().map(|&w| newid[w]).collect());
                continue;
            }
            // boundary walk: start at the first outward dart of the smallest
            // component vertex, record every outward neighbor in the cyclic
            // order the walk meets them
            let in_comp = |x: usize| comp.binary_search(&x).is_ok();
            let mut start = None;
            'outer: for &v in comp {
                for (i, &w) in self.rot[v].iter().enumerate() {
                    if !in_comp(w) {
                        start = Some((v, i));
                        break 'outer;
                    }
                }
            }
            let start = start.expect("component spans the whole tree");
            let mut rec = Vec::new();
            let mut dart = start;
            loop {
                let (v, i) = dart;
                let w = self.rot[v][i];
                if in_comp(w) {
                    let j = self.rot[w]
                        .iter()
                        .position(|&x| x == v)
                        .expect("rotation symmetry");
                    dart = (w, (j + 1) % self.rot[w].len());
                } else {
                    rec.push(newid[w]);
                    dart = (v, (i + 1) % self.rot[v].len());
                }
                if dart == start {
                    break;
                }
            }
            new_rot.push(rec);
        }
        let t = PlanarTree {
            n: self.n,
            labels: new_labels,
            rot: new_rot,
        };
        debug_assert!(
            PlanarTree::new(t.n, t.labels.clone(), t.rot.clone()).is_ok(),
            "contraction produced an invalid tree"
        );
        (t, newid)
    }

    /// All admissible subforests, including the empty one.
    pub fn subforests(&self) -> Vec<Subforest> {
        let es = self.edges();
        let mut out = Vec::new();
        for mask in 0u32..(1 << es.len()) {
            let sel: Vec<(usize, usize)> = es
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            if self.edge_set_admissible(&sel) {
                out.push(Subforest { edges: sel });
            }
        }
        out
    }

    /// Whether `other` is a contraction of `self` (including equality).
    /// This is the order relation of the tree poset: contractions move up.
    pub fn leq(&self, other: &PlanarTree) -> bool {
        self.witness_subforest(other).is_some()
    }

    /// The unique admissible subforest whose contraction takes `self` to
    /// `other`, if one exists.  Distinct subforests of a tree contract to
    /// distinct trees, so the witness is unique.
    pub fn witness_subforest(&self, other: &PlanarTree) -> Option<Subforest> {
        if self.n != other.n || other.vertex_count() > self.vertex_count() {
            return None;
        }
        let k = self.vertex_count() - other.vertex_count();
        let target = other.canonical_code();
        let es = self.edges();
        if k > es.len() {
            return None;
        }
        let mut found = None;
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let sel: Vec<(usize, usize)> = idx.iter().map(|&i| es[i]).collect();
            if self.edge_set_admissible(&sel) {
                let f = Subforest { edges: sel };
                if self.contract(&f).canonical_code() == target {
                    found = Some(f);
                    break;
                }
            }
            // next k-combination of 0..es.len()
            let mut i = k;
            loop {
                if i == 0 {
                    return found;
                }
                i -= 1;
                if idx[i] != i + es.len() - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        found
    }

    /// Cell dimension of the tree: `val(v) - 3` summed over unmarked
    /// vertices plus `val(v) - 1` summed over marked interior vertices.
    pub fn cell_dimension(&self) -> usize {
        let mut d = 0;
        for v in 0..self.vertex_count() {
            let val = self.rot[v].len();
            if self.labels[v].is_none() {
                d += val - 3;
            } else if val >= 2 {
                d += val - 1;
            }
        }
        d
    }

    /// The polytope factors of the cell indexed by this tree: one
    /// associahedron `K_{val-1}` per unmarked vertex and one cyclohedron
    /// `W_val` per marked interior vertex.
    pub fn cell_factors(&self) -> Vec<CellFactor> {
        let mut fac = Vec::new();
        for v in 0..self.vertex_count() {
            let val = self.rot[v].len() as u32;
            if self.labels[v].is_none() {
                fac.push(CellFactor::Associahedron(val - 1));
            } else if val >= 2 {
                fac.push(CellFactor::Cyclohedron(val));
            }
        }
        fac.sort_unstable();
        fac
    }

    /// The star neighborhood of an interior vertex, as a standalone tree:
    /// the neighbors become fresh marks `1..=d` in rotation order, and a
    /// marked center becomes the mark `d + 1`.  Returns the tree together
    /// with the `(fresh mark, original vertex)` pairs for the neighbors.
    pub fn neighborhood(&self, v: usize) -> Result<(PlanarTree, Vec<(u32, usize)>), TreeError> {
        if v >= self.vertex_count() {
            return Err(TreeError::UnknownVertex { vertex: v });
        }
        let d = self.rot[v].len();
        if d < 2 {
            return Err(TreeError::LeafVertex { vertex: v });
        }
        let dd = d as u32;
        let star = if self.labels[v].is_some() {
            make_mstar(dd)
        } else {
            make_ustar(dd)
        };
        let mapping = self.rot[v]
            .iter()
            .enumerate()
            .map(|(i, &w)| (i as u32 + 1, w))
            .collect();
        Ok((star, mapping))
    }

    /// Single-edge expansions that split an unmarked vertex into two
    /// adjacent unmarked vertices; these are the downward cover moves within
    /// a reduced class.
    pub fn unmarked_splits(&self) -> Vec<PlanarTree> {
        let v_count = self.vertex_count();
        let mut out = Vec::new();
        for v in 0..v_count {
            if self.labels[v].is_some() {
                continue;
            }
            let d = self.rot[v].len();
            if d < 4 {
                continue;
            }
            for i in 0..d {
                for k in 2..d - 1 {
                    out.push(self.split_vertex(v, i, k));
                }
            }
        }
        out
    }

    /// Single-edge expansions that pull a new unmarked vertex out of a
    /// marked vertex, handing it a cyclic arc of at least two neighbors.
    pub fn marked_splits(&self) -> Vec<PlanarTree> {
        let v_count = self.vertex_count();
        let mut out = Vec::new();
        for v in 0..v_count {
            if self.labels[v].is_none() {
                continue;
            }
            let d = self.rot[v].len();
            for i in 0..d {
                for k in 2..=d {
                    out.push(self.split_vertex(v, i, k));
                }
            }
        }
        out
    }

    /// Split `v`: a new unmarked vertex takes the cyclic arc of `k`
    /// neighbors starting at rotation position `i`, and `v` keeps the rest
    /// plus an edge to the new vertex.
    fn split_vertex(&self, v: usize, i: usize, k: usize) -> PlanarTree {
        let v_count = self.vertex_count();
        let d = self.rot[v].len();
        let arc: Vec<usize> = (0..k).map(|j| self.rot[v][(i + j) % d]).collect();
        let rest: Vec<usize> = (0..d - k).map(|j| self.rot[v][(i + k + j) % d]).collect();
        let mut labels = self.labels.clone();
        labels.push(None);
        let mut rot = self.rot.clone();
        rot.push(core::iter::once(v).chain(arc.iter().copied()).collect());
        let mut nv = Vec::with_capacity(rest.len() + 1);
        nv.push(v_count);
        nv.extend(rest);
        rot[v] = nv;
        for &w in &arc {
            let pos = rot[w].iter().position(|&x| x == v).expect("rotation symmetry");
            rot[w][pos] = v_count;
        }
        let t = PlanarTree { n: self.n, labels, rot };
        debug_assert!(PlanarTree::new(t.n, t.labels.clone(), t.rot.clone()).is_ok());
        t
    }

    /// Every tree below `self` in the tree poset (everything that contracts
    /// to `self`), computed by closing under single-edge expansions.
    /// Returned sorted by canonical code; includes `self`.
    pub fn lower_set_trees(&self) -> Vec<PlanarTree> {
        let mut seen = alloc::collections::BTreeMap::new();
        seen.insert(self.canonical_code(), self.clone());
        let mut frontier = vec![self.clone()];
        while let Some(t) = frontier.pop() {
            for t2 in t.unmarked_splits().into_iter().chain(t.marked_splits()) {
                if let Entry::Vacant(slot) = seen.entry(t2.canonical_code()) {
                    slot.insert(t2.clone());
                    frontier.push(t2);
                }
            }
        }
        seen.into_values().collect()
    }
}

/// A polytope factor of a tree cell: an associahedron `K_m` or a
/// cyclohedron `W_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CellFactor {
    Associahedron(u32),
    Cyclohedron(u32),
}

impl core::fmt::Display for CellFactor {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CellFactor::Associahedron(m) => write!(f, "K{m}"),
            CellFactor::Cyclohedron(m) => write!(f, "W{m}"),
        }
    }
}

/// Render a sorted factor list as a census key, `-` when empty.
pub fn factor_key(factors: &[CellFactor]) -> String {
    if factors.is_empty() {
        return "-".to_string();
    }
    let parts: Vec<String> = factors.iter().map(|f| format!("{f}")).collect();
    parts.join("*")
}

/// The star with `k` leaves marked `1..=k` around an unmarked center.
pub fn make_ustar(k: u32) -> PlanarTree {
    assert!(k >= 3, "an unmarked star needs at least 3 leaves");
    star_with_center(k, None)
}

/// The star with `k` leaves marked `1..=k` around a center marked `k + 1`.
pub fn make_mstar(k: u32) -> PlanarTree {
    assert!(k >= 2, "a marked star needs at least 2 leaves");
    star_with_center(k, Some(k + 1))
}

fn star_with_center(k: u32, center: Option<u32>) -> PlanarTree {
    let n = match center {
        Some(_) => k + 1,
        None => k,
    };
    let mut labels = vec![center];
    labels.extend((1..=k).map(Some));
    let mut rot = vec![(1..=k as usize).collect::<Vec<usize>>()];
    rot.extend((1..=k).map(|_| vec![0]));
    PlanarTree::new(n, labels, rot).expect("stars are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 4-tree with two adjacent unmarked trivalent vertices:
    /// u1 adjacent to (1, 2, u2), u2 adjacent to (u1, 3, 4).
    pub(crate) fn t4() -> PlanarTree {
        PlanarTree::new(
            4,
            vec![Some(1), Some(2), Some(3), Some(4), None, None],
            vec![
                vec![4],
                vec![4],
                vec![5],
                vec![5],
                vec![0, 1, 5],
                vec![4, 2, 3],
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation_catches_each_violation() {
        assert_eq!(
            PlanarTree::new(2, vec![Some(1), Some(2)], vec![vec![1], vec![0]]).unwrap_err(),
            TreeError::MarkCountTooSmall { n: 2 }
        );
        // self-loop
        assert_eq!(
            PlanarTree::new(
                3,
                vec![Some(1), Some(2), Some(3)],
                vec![vec![0, 1], vec![0, 2], vec![1]],
            )
            .unwrap_err(),
            TreeError::RotationInconsistent
        );
        // disconnected: two components
        assert!(matches!(
            PlanarTree::new(
                4,
                vec![Some(1), Some(2), Some(3), Some(4)],
                vec![vec![1], vec![0], vec![3], vec![2]],
            ),
            Err(TreeError::NotConnected)
        ));
        // labels not 1..n
        assert!(matches!(
            PlanarTree::new(
                3,
                vec![Some(1), Some(2), Some(4)],
                vec![vec![1], vec![0, 2], vec![1]],
            ),
            Err(TreeError::LabelsNotBijective { .. })
        ));
        // unmarked leaf
        assert!(matches!(
            PlanarTree::new(
                3,
                vec![Some(1), Some(2), Some(3), None],
                vec![vec![1], vec![0, 2, 3], vec![1], vec![1]],
            ),
            Err(TreeError::UnmarkedValenceTooSmall { vertex: 3 })
        ));
        // too many vertices: 5 > 2*3-2
        assert!(matches!(
            PlanarTree::new(
                3,
                vec![Some(1), Some(2), Some(3), None, None],
                vec![
                    vec![3],
                    vec![3],
                    vec![4],
                    vec![0, 1, 4],
                    vec![3, 2, 2], // also inconsistent, but the count check is later
                ],
            ),
            Err(TreeError::RotationInconsistent)
        ));
        let too_big = PlanarTree::new(
            3,
            vec![Some(1), Some(2), Some(3), None, None],
            vec![vec![3], vec![3], vec![4], vec![0, 1, 4], vec![3, 2]],
        );
        // vertex 4 is unmarked with valence 2; bound check fires first
        assert_eq!(
            too_big.unwrap_err(),
            TreeError::VertexCountExceedsBound { count: 5, max: 4 }
        );
    }

    #[test]
    fn canonical_code_examples() {
        assert_eq!(make_ustar(3).canonical_code(), "1(u(2,3))");
        assert_eq!(make_ustar(4).canonical_code(), "1(u(2,3,4))");
        assert_eq!(make_mstar(2).canonical_code(), "1(3(2))");
        assert_eq!(t4().canonical_code(), "1(u(2,u(3,4)))");
    }

    #[test]
    fn code_is_invariant_under_vertex_renumbering() {
        let t = t4();
        // renumber vertices by the permutation 0..6 -> (5,4,3,2,1,0)
        let perm = [5usize, 4, 3, 2, 1, 0];
        let mut labels = vec![None; 6];
        let mut rot = vec![Vec::new(); 6];
        for v in 0..6 {
            labels[perm[v]] = t.label(v);
            rot[perm[v]] = t.rotation(v).iter().map(|&w| perm[w]).collect();
        }
        let s = PlanarTree::new(4, labels, rot).unwrap();
        assert_eq!(s.canonical_code(), t.canonical_code());
        let iso = s.unique_isomorphism(&t).unwrap();
        for (v, &img) in iso.iter().enumerate() {
            assert_eq!(s.label(v), t.label(img));
        }
    }

    #[test]
    fn t4_has_fourteen_subforests() {
        assert_eq!(t4().subforests().len(), 14);
    }

    #[test]
    fn contracting_the_unmarked_edge_of_t4_gives_the_star() {
        let t = t4();
        let f = Subforest::new(&t, &[(4, 5)]).unwrap();
        let c = t.contract(&f);
        assert_eq!(c.canonical_code(), make_ustar(4).canonical_code());
        // vertex map: 4 and 5 merge
        let (_, map) = t.contract_with_map(&f);
        assert_eq!(map[4], map[5]);
    }

    #[test]
    fn contracting_two_leaf_edges_of_t4_gives_a_path() {
        let t = t4();
        let f = Subforest::new(&t, &[(0, 4), (2, 5)]).unwrap();
        let c = t.contract(&f);
        let path = PlanarTree::new(
            4,
            vec![Some(2), Some(1), Some(3), Some(4)],
            vec![vec![1], vec![0, 2], vec![1, 3], vec![2]],
        )
        .unwrap();
        assert_eq!(c.canonical_code(), path.canonical_code());
    }

    #[test]
    fn subforest_rejects_bad_input() {
        let t = t4();
        assert!(matches!(
            Subforest::new(&t, &[(0, 1)]),
            Err(SubforestError::EdgeNotInTree { .. })
        ));
        // both (0,4) and (1,4) in one component would merge marks 1 and 2
        assert_eq!(
            Subforest::new(&t, &[(0, 4), (1, 4)]).unwrap_err(),
            SubforestError::DoublyMarkedComponent
        );
    }

    #[test]
    fn leq_and_witness_agree() {
        let t = t4();
        let star = make_ustar(4);
        assert!(t.leq(&star));
        let w = t.witness_subforest(&star).unwrap();
        assert_eq!(w.edges(), &[(4, 5)]);
        assert!(!star.leq(&t));
        // reflexivity with empty witness
        assert!(t.leq(&t));
        assert!(t.witness_subforest(&t).unwrap().is_empty());
    }

    #[test]
    fn geodesic_follows_the_unique_path() {
        let t = t4();
        assert_eq!(t.geodesic(0, 3).unwrap(), vec![0, 4, 5, 3]);
        assert_eq!(t.geodesic(2, 2).unwrap(), vec![2]);
        assert!(matches!(t.geodesic(0, 9), Err(TreeError::UnknownVertex { vertex: 9 })));
    }

    #[test]
    fn neighborhood_of_interior_vertices() {
        // path 2 - 1 - 3 - 4 with vertex order chosen to mark 1 interior
        let path = PlanarTree::new(
            4,
            vec![Some(2), Some(1), Some(3), Some(4)],
            vec![vec![1], vec![0, 2], vec![1, 3], vec![2]],
        )
        .unwrap();
        let (star, mapping) = path.neighborhood(1).unwrap();
        assert_eq!(star.canonical_code(), make_mstar(2).canonical_code());
        assert_eq!(mapping, vec![(1, 0), (2, 2)]);
        let t = t4();
        let (star, _) = t.neighborhood(4).unwrap();
        assert_eq!(star.canonical_code(), make_ustar(3).canonical_code());
        assert!(matches!(t.neighborhood(0), Err(TreeError::LeafVertex { vertex: 0 })));
    }

    #[test]
    fn cell_dimension_and_factors() {
        assert_eq!(t4().cell_dimension(), 0);
        assert_eq!(make_ustar(4).cell_dimension(), 1);
        assert_eq!(make_mstar(3).cell_dimension(), 2);
        assert_eq!(
            make_ustar(4).cell_factors(),
            vec![CellFactor::Associahedron(3)]
        );
        assert_eq!(
            make_mstar(3).cell_factors(),
            vec![CellFactor::Cyclohedron(3)]
        );
        assert_eq!(factor_key(&make_mstar(3).cell_factors()), "W3");
        assert_eq!(factor_key(&[]), "-");
    }

    #[test]
    fn split_moves_restore_contracted_trees() {
        // ustar(4) has exactly 2 unmarked splits (the two arc pairs of a
        // 4-valent vertex), both contracting back to the star
        let star = make_ustar(4);
        let splits = star.unmarked_splits();
        let codes: alloc::collections::BTreeSet<String> =
            splits.iter().map(|t| t.canonical_code()).collect();
        assert_eq!(codes.len(), 2);
        for s in &splits {
            assert!(s.leq(&star));
        }
        // mstar(2): the marked center of valence 2 admits 2 arcs of size 2
        // (full arc, both starts), giving the two trivalent trees below it
        let m = make_mstar(2);
        let ms = m.marked_splits();
        assert_eq!(ms.len(), 2);
        let lower = m.lower_set_trees();
        assert_eq!(lower.len(), 3);
    }
}
