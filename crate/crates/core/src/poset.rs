//! Face posets: Hasse diagrams over sign vectors, and a brute-force poset
//! isomorphism search used as an independent cross-check for the
//! canonical-form machinery.

use std::collections::HashMap;

use crate::sign::SignVector;

/// A node of a face poset. Geometric posets carry dimension and boundedness;
/// abstract ones leave them unset.
#[derive(Clone, Debug)]
pub struct PosetNode {
    pub covector: SignVector,
    pub dimension: Option<usize>,
    pub bounded: Option<bool>,
}

/// A finite poset presented by its covering relation (Hasse diagram).
#[derive(Clone, Debug)]
pub struct FacePoset {
    nodes: Vec<PosetNode>,
    /// Pairs `(a, b)` with `a ⋖ b` (a covered by b), indices into `nodes`.
    covers: Vec<(usize, usize)>,
}

impl FacePoset {
    /// Hasse diagram of the conformal order on a set of sign vectors.
    pub fn from_covectors(vectors: &[SignVector]) -> FacePoset {
        let nodes: Vec<PosetNode> = vectors
            .iter()
            .map(|v| PosetNode {
                covector: *v,
                dimension: None,
                bounded: None,
            })
            .collect();
        let covers = covers_of(vectors, |_| None);
        FacePoset { nodes, covers }
    }

    /// Hasse diagram for sign vectors with known dimensions. Covering pairs
    /// are found among dimension-adjacent levels only.
    pub fn from_graded(vectors: &[SignVector], dims: &[usize], bounded: &[bool]) -> FacePoset {
        let nodes: Vec<PosetNode> = vectors
            .iter()
            .zip(dims)
            .zip(bounded)
            .map(|((v, d), b)| PosetNode {
                covector: *v,
                dimension: Some(*d),
                bounded: Some(*b),
            })
            .collect();
        let covers = covers_of(vectors, |i| Some(dims[i]));
        FacePoset { nodes, covers }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[PosetNode] {
        &self.nodes
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Indices of elements covered by nothing (the topes/chambers).
    pub fn maximal(&self) -> Vec<usize> {
        let mut is_max = vec![true; self.nodes.len()];
        for &(a, _) in &self.covers {
            is_max[a] = false;
        }
        (0..self.nodes.len()).filter(|&i| is_max[i]).collect()
    }

    /// Indices covering `i`.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(a, _)| a == i)
            .map(|&(_, b)| b)
            .collect()
    }

    /// Indices covered by `i`.
    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|&&(_, b)| b == i)
            .map(|&(a, _)| a)
            .collect()
    }

    /// Longest chain length measured in covering steps.
    pub fn height(&self) -> usize {
        let n = self.nodes.len();
        let up = adjacency(&self.covers, n, true);
        let order = topo_order(&self.covers, n);
        let mut h = vec![0usize; n];
        let mut best = 0;
        for &i in order.iter().rev() {
            for &j in &up[i] {
                h[i] = h[i].max(h[j] + 1);
            }
            best = best.max(h[i]);
        }
        best
    }
}

/// Compute covering pairs of the conformal order. When a grading is
/// available, only pairs one dimension apart are candidates; otherwise a
/// middle-element scan over zero-count levels is used.
fn covers_of(vectors: &[SignVector], dim: impl Fn(usize) -> Option<usize>) -> Vec<(usize, usize)> {
    let n = vectors.len();
    let mut covers = Vec::new();
    if n == 0 {
        return covers;
    }
    let graded = dim(0).is_some();
    for a in 0..n {
        for b in 0..n {
            if a == b || vectors[a] == vectors[b] {
                continue;
            }
            if !vectors[a].leq(&vectors[b]).unwrap_or(false) {
                continue;
            }
            if graded {
                if dim(a).unwrap() + 1 == dim(b).unwrap() {
                    covers.push((a, b));
                }
                continue;
            }
            // Abstract poset: a ⋖ b iff nothing sits strictly between.
            let strictly_between = (0..n).any(|c| {
                c != a
                    && c != b
                    && vectors[a].leq(&vectors[c]).unwrap_or(false)
                    && vectors[c].leq(&vectors[b]).unwrap_or(false)
                    && vectors[c] != vectors[a]
                    && vectors[c] != vectors[b]
            });
            if !strictly_between {
                covers.push((a, b));
            }
        }
    }
    covers.sort();
    covers
}

fn adjacency(covers: &[(usize, usize)], n: usize, up: bool) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in covers {
        if up {
            adj[a].push(b);
        } else {
            adj[b].push(a);
        }
    }
    adj
}

fn topo_order(covers: &[(usize, usize)], n: usize) -> Vec<usize> {
    // Kahn's algorithm on the cover DAG (edges a -> b for a ⋖ b).
    let mut indeg = vec![0usize; n];
    let up = adjacency(covers, n, true);
    for &(_, b) in covers {
        indeg[b] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(i) = queue.pop() {
        order.push(i);
        for &j in &up[i] {
            indeg[j] -= 1;
            if indeg[j] == 0 {
                queue.push(j);
            }
        }
    }
    assert_eq!(order.len(), n, "cover relation is cyclic");
    order
}

/// Brute-force poset isomorphism: iterative refinement of node invariants on
/// the Hasse diagram, then a backtracking match. Deliberately independent of
/// sign-vector canonicalization — it looks only at the order relation.
pub fn poset_isomorphic(p: &FacePoset, q: &FacePoset) -> bool {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return false;
    }
    let n = p.len();
    let (pu, pd) = (
        adjacency(p.covers(), n, true),
        adjacency(p.covers(), n, false),
    );
    let (qu, qd) = (
        adjacency(q.covers(), n, true),
        adjacency(q.covers(), n, false),
    );

    // Weisfeiler-Leman style refinement over (up-labels, down-labels).
    let refine = |up: &Vec<Vec<usize>>, down: &Vec<Vec<usize>>| -> Vec<u64> {
        let mut label = vec![0u64; n];
        for _ in 0..n {
            let mut sigs: Vec<(u64, Vec<u64>, Vec<u64>)> = (0..n)
                .map(|i| {
                    let mut us: Vec<u64> = up[i].iter().map(|&j| label[j]).collect();
                    let mut ds: Vec<u64> = down[i].iter().map(|&j| label[j]).collect();
                    us.sort_unstable();
                    ds.sort_unstable();
                    (label[i], us, ds)
                })
                .collect();
            let mut sorted = sigs.clone();
            sorted.sort();
            sorted.dedup();
            let index: HashMap<_, u64> = sorted
                .into_iter()
                .enumerate()
                .map(|(k, s)| (s, k as u64))
                .collect();
            let next: Vec<u64> = sigs.drain(..).map(|s| index[&s]).collect();
            if next == label {
                break;
            }
            label = next;
        }
        label
    };
    let pl = refine(&pu, &pd);
    let ql = refine(&qu, &qd);

    let mut pc = pl.clone();
    let mut qc = ql.clone();
    pc.sort_unstable();
    qc.sort_unstable();
    if pc != qc {
        return false;
    }

    // Backtracking assignment p-node -> q-node respecting labels and covers.
    let mut cand: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| ql[j] == pl[i]).collect())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| cand[i].len());
    for c in &mut cand {
        c.sort_unstable();
    }

    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn consistent(
        i: usize,
        j: usize,
        assign: &[usize],
        pu: &[Vec<usize>],
        pd: &[Vec<usize>],
        qu: &[Vec<usize>],
        qd: &[Vec<usize>],
    ) -> bool {
        // every already-assigned cover relation must be mirrored
        for &a in &pu[i] {
            if assign[a] != usize::MAX && !qu[j].contains(&assign[a]) {
                return false;
            }
        }
        for &a in &pd[i] {
            if assign[a] != usize::MAX && !qd[j].contains(&assign[a]) {
                return false;
            }
        }
        true
    }
    #[allow(clippy::too_many_arguments)]
    fn search(
        k: usize,
        order: &[usize],
        cand: &[Vec<usize>],
        assign: &mut [usize],
        used: &mut [bool],
        pu: &[Vec<usize>],
        pd: &[Vec<usize>],
        qu: &[Vec<usize>],
        qd: &[Vec<usize>],
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let i = order[k];
        for &j in &cand[i] {
            if used[j]
                || pu[i].len() != qu[j].len()
                || pd[i].len() != qd[j].len()
                || !consistent(i, j, assign, pu, pd, qu, qd)
            {
                continue;
            }
            assign[i] = j;
            used[j] = true;
            if search(k + 1, order, cand, assign, used, pu, pd, qu, qd) {
                return true;
            }
            assign[i] = usize::MAX;
            used[j] = false;
        }
        false
    }
    search(0, &order, &cand, &mut assign, &mut used, &pu, &pd, &qu, &qd)
}
