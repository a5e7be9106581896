//! Enumeration of oriented-matroid isomorphism classes and the census grid.
//!
//! Chirotopes are generated by depth-first assignment of signs in colex
//! tuple order. Three prunings keep the tree small:
//!
//! * incremental three-term Grassmann–Plücker sign checks, run the moment
//!   the last entry of a relation is assigned;
//! * canonical-extension rejection: whenever the assigned prefix completes
//!   all tuples inside the first `k` elements, the branch survives only if
//!   that prefix is the lexicographic minimum of its orbit under signed
//!   permutations of the `k` elements and global negation (a prefix of the
//!   global orbit minimum is always minimal for the prefix subgroup, so no
//!   class is lost);
//! * at the leaves, the basis-exchange property of the support and
//!   non-triviality.
//!
//! Each surviving leaf is the unique orbit-minimal chirotope of its class.
//! Affine classes are derived by marking every element and deduplicating
//! with a mark-constrained canonical form (the marked element pinned to the
//! last slot).

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::chirotope::{sorted_tuples, Chirotope};
use crate::error::{Error, Result};
use crate::geometry::binomial;

/// Order on sign values used for all chirotope strings: `0 < + < -`.
#[inline]
fn ord3(v: i8) -> u8 {
    match v {
        0 => 0,
        1 => 1,
        _ => 2,
    }
}

fn cmp_strings(a: &[i8], b: &[i8]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match ord3(*x).cmp(&ord3(*y)) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Colex rank of a sorted tuple: `Σ C(t_i, i+1)`.
fn colex_rank(t: &[usize]) -> usize {
    t.iter()
        .enumerate()
        .map(|(i, &e)| binomial(e, i + 1) as usize)
        .sum()
}

/// Sorted r-subsets of `0..m` in colex order.
fn colex_tuples(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut ts = sorted_tuples(m, r);
    ts.sort_by_key(|t| colex_rank(t));
    ts
}

fn sort_with_parity(tuple: &[usize]) -> (Vec<usize>, i8) {
    let mut v = tuple.to_vec();
    let mut parity = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            parity = -parity;
            j -= 1;
        }
    }
    (v, parity)
}

/// Shared tables for a fixed `(m, r)`.
struct Ctx {
    m: usize,
    /// `blocks[j]` = sorted tuples with maximum element `j`, colex order.
    blocks: Vec<Vec<Vec<usize>>>,
    /// Prefix length after element `k` is complete: `C(k+1, r)` for `k`.
    boundary_at: Vec<usize>,
}

impl Ctx {
    fn new(m: usize, r: usize) -> Ctx {
        let mut blocks = vec![Vec::new(); m];
        for t in colex_tuples(m, r) {
            let max = *t.last().unwrap();
            blocks[max].push(t);
        }
        let boundary_at = (0..m).map(|k| binomial(k + 1, r) as usize).collect();
        Ctx {
            m,
            blocks,
            boundary_at,
        }
    }
}

/// One three-term Grassmann–Plücker relation, by colex position.
struct Gp3 {
    idx: [usize; 6],
    par: [i8; 6],
    max_idx: usize,
}

fn gp3_relations(m: usize, r: usize) -> Vec<Vec<Gp3>> {
    let n_pos = binomial(m, r) as usize;
    let mut buckets: Vec<Vec<Gp3>> = (0..n_pos).map(|_| Vec::new()).collect();
    if r < 2 || m < 4 {
        return buckets;
    }
    let seeds = if r == 2 {
        vec![Vec::new()]
    } else {
        sorted_tuples(m, r - 2)
    };
    for s in seeds {
        let rest: Vec<usize> = (0..m).filter(|e| !s.contains(e)).collect();
        for q in sorted_tuples(rest.len(), 4) {
            let (a, b, c, d) = (rest[q[0]], rest[q[1]], rest[q[2]], rest[q[3]]);
            let pairs = [(a, b), (c, d), (a, c), (b, d), (a, d), (b, c)];
            let mut idx = [0usize; 6];
            let mut par = [0i8; 6];
            for (k, (x, y)) in pairs.iter().enumerate() {
                let mut t = s.clone();
                t.push(*x);
                t.push(*y);
                let (sorted, p) = sort_with_parity(&t);
                idx[k] = colex_rank(&sorted);
                par[k] = p;
            }
            let max_idx = *idx.iter().max().unwrap();
            buckets[max_idx].push(Gp3 { idx, par, max_idx });
        }
    }
    buckets
}

fn gp3_satisfied(rel: &Gp3, vals: &[i8]) -> bool {
    debug_assert!(rel.max_idx < vals.len());
    let t1 = rel.par[0] * rel.par[1] * vals[rel.idx[0]] * vals[rel.idx[1]];
    let t2 = rel.par[2] * rel.par[3] * vals[rel.idx[2]] * vals[rel.idx[3]];
    let t3 = rel.par[4] * rel.par[5] * vals[rel.idx[4]] * vals[rel.idx[5]];
    let v = [t1, -t2, t3];
    let pos = v.iter().any(|&x| x > 0);
    let neg = v.iter().any(|&x| x < 0);
    pos == neg
}

/// Evaluate the reference string on an arbitrary source tuple.
#[inline]
fn eval_ref(vals: &[i8], tuple: &[usize]) -> i8 {
    let (sorted, parity) = sort_with_parity(tuple);
    parity * vals[colex_rank(&sorted)]
}

/// Canonical-orbit search state over `k` elements of a reference string.
struct CanonSearch<'a> {
    ctx: &'a Ctx,
    vals: &'a [i8],
    k: usize,
    /// slot -> chosen source element
    src: Vec<usize>,
    used: Vec<bool>,
    flip: Vec<bool>,
    global: i8,
    /// `Some(e)` pins element `e` to the final slot.
    mark: Option<usize>,
}

impl<'a> CanonSearch<'a> {
    fn new(ctx: &'a Ctx, vals: &'a [i8], k: usize, mark: Option<usize>) -> CanonSearch<'a> {
        CanonSearch {
            ctx,
            vals,
            k,
            src: vec![0; k],
            used: vec![false; k],
            flip: vec![false; k],
            global: 1,
            mark,
        }
    }

    /// Transformed value at a slot tuple (already assigned slots only).
    #[inline]
    fn transformed(&self, slot_tuple: &[usize]) -> i8 {
        let mut sources = [0usize; 8];
        let r = slot_tuple.len();
        let mut sign = self.global;
        for (i, &slot) in slot_tuple.iter().enumerate() {
            let s = self.src[slot];
            sources[i] = s;
            if self.flip[s] {
                sign = -sign;
            }
        }
        sign * eval_ref(self.vals, &sources[..r])
    }

    /// Compare the transformed block `j` against the reference positions.
    fn compare_block(&self, j: usize) -> std::cmp::Ordering {
        for t in &self.ctx.blocks[j] {
            let pos = colex_rank(t);
            let tv = ord3(self.transformed(t));
            let rv = ord3(self.vals[pos]);
            match tv.cmp(&rv) {
                std::cmp::Ordering::Equal => continue,
                o => return o,
            }
        }
        std::cmp::Ordering::Equal
    }

    /// Is the reference prefix the minimum of its orbit? Returns false as
    /// soon as a strictly smaller image is found.
    fn is_minimal(&mut self) -> bool {
        for g in [1i8, -1] {
            self.global = g;
            if !self.descend_check(0) {
                return false;
            }
        }
        true
    }

    fn descend_check(&mut self, j: usize) -> bool {
        if j == self.k {
            return true;
        }
        for cand in 0..self.k {
            if self.used[cand] {
                continue;
            }
            if let Some(mark) = self.mark {
                // the mark may only occupy the final slot
                if (cand == mark) != (j == self.k - 1) {
                    continue;
                }
            }
            self.used[cand] = true;
            self.src[j] = cand;
            for f in [false, true] {
                self.flip[cand] = f;
                match self.compare_block(j) {
                    std::cmp::Ordering::Less => {
                        self.used[cand] = false;
                        return false;
                    }
                    std::cmp::Ordering::Equal => {
                        if !self.descend_check(j + 1) {
                            self.used[cand] = false;
                            return false;
                        }
                    }
                    std::cmp::Ordering::Greater => {}
                }
            }
            self.used[cand] = false;
        }
        true
    }
}

/// Minimum of the orbit of `vals` (all `k = m` elements), optionally with a
/// marked element pinned to the last slot. Used to build canonical keys.
fn orbit_min(ctx: &Ctx, vals: &[i8], mark: Option<usize>) -> Vec<i8> {
    let m = ctx.m;
    let n_pos = vals.len();
    let mut best: Option<Vec<i8>> = None;
    let mut search = CanonSearch::new(ctx, vals, m, mark);
    let mut buffer: Vec<i8> = Vec::with_capacity(n_pos);

    fn descend(
        s: &mut CanonSearch<'_>,
        j: usize,
        tied: bool,
        buffer: &mut Vec<i8>,
        best: &mut Option<Vec<i8>>,
    ) {
        if j == s.k {
            if best.as_ref().is_none_or(|b| cmp_strings(buffer, b).is_lt()) {
                *best = Some(buffer.clone());
            }
            return;
        }
        for cand in 0..s.k {
            if s.used[cand] {
                continue;
            }
            if let Some(mark) = s.mark {
                if (cand == mark) != (j == s.k - 1) {
                    continue;
                }
            }
            s.used[cand] = true;
            s.src[j] = cand;
            for f in [false, true] {
                s.flip[cand] = f;
                // block values for this choice
                let block: Vec<i8> = s.ctx.blocks[j].iter().map(|t| s.transformed(t)).collect();
                // compare against best at these positions when still tied
                let mut next_tied = tied;
                let mut prune = false;
                if let Some(b) = best.as_ref() {
                    if tied {
                        let start = buffer.len();
                        match cmp_strings(&block, &b[start..start + block.len()]) {
                            std::cmp::Ordering::Greater => prune = true,
                            std::cmp::Ordering::Less => next_tied = false,
                            std::cmp::Ordering::Equal => {}
                        }
                    }
                }
                if !prune {
                    let start = buffer.len();
                    buffer.extend_from_slice(&block);
                    descend(s, j + 1, next_tied, buffer, best);
                    buffer.truncate(start);
                }
            }
            s.used[cand] = false;
        }
    }

    for g in [1i8, -1] {
        search.global = g;
        descend(&mut search, 0, true, &mut buffer, &mut best);
    }
    best.expect("orbit is nonempty")
}

/// Reorder a lex-stored chirotope into the colex working order.
fn to_colex(chi: &Chirotope) -> Vec<i8> {
    let m = chi.ground_size();
    let r = chi.rank();
    let mut vals = vec![0i8; chi.signs().len()];
    for t in sorted_tuples(m, r) {
        vals[colex_rank(&t)] = chi.eval_sorted(&t);
    }
    vals
}

/// Build a lex-stored chirotope from a colex working array.
fn from_colex(m: usize, r: usize, vals: &[i8]) -> Chirotope {
    let tuples = sorted_tuples(m, r);
    let mut signs = vec![0i8; tuples.len()];
    for (lex_idx, t) in tuples.iter().enumerate() {
        signs[lex_idx] = vals[colex_rank(t)];
    }
    Chirotope::new(m, r, signs).expect("validated sizes")
}

fn check_scale(m: usize, r: usize) -> Result<()> {
    let ok = (m >= 1 && r >= 1 && r <= m) && ((m <= 7 && r <= 4) || (m == 8 && r <= 3));
    if !ok {
        return Err(Error::ResourceLimit(format!(
            "enumeration supports m ≤ 7 with r ≤ 4, or m = 8 with r ≤ 3 (got m={m}, r={r})"
        )));
    }
    Ok(())
}

/// Canonical representatives of every chirotope orbit of rank exactly `r`
/// on `m` elements, including non-simple ones. Deterministic order.
pub fn enumerate_chirotopes(m: usize, r: usize) -> Result<Vec<Chirotope>> {
    check_scale(m, r)?;
    let ctx = Ctx::new(m, r);
    let n_pos = binomial(m, r) as usize;
    let gp3 = gp3_relations(m, r);

    // Serial seed phase: enumerate canonical prefixes over the first
    // `k0` elements, then complete each in parallel.
    let k0_elems = if m > r + 1 { r + 1 } else { m };
    let split = binomial(k0_elems, r) as usize;

    let mut seeds: Vec<Vec<i8>> = Vec::new();
    let mut vals = vec![0i8; n_pos];
    dfs_collect(&ctx, &gp3, &mut vals, 0, split, &mut |prefix| {
        seeds.push(prefix[..split].to_vec());
    });

    let results: Vec<Vec<Chirotope>> = seeds
        .par_iter()
        .map(|seed| {
            let mut vals = vec![0i8; n_pos];
            vals[..split].copy_from_slice(seed);
            let mut found = Vec::new();
            dfs_collect(&ctx, &gp3, &mut vals, split, n_pos, &mut |full| {
                if full.iter().all(|&v| v == 0) {
                    return;
                }
                let chi = from_colex(m, r, full);
                if chi.gp3_and_bases_ok() {
                    found.push(chi);
                }
            });
            found
        })
        .collect();

    Ok(results.into_iter().flatten().collect())
}

/// DFS from `from` to `to` positions; calls `emit` with the values array for
/// every surviving assignment of length `to`.
fn dfs_collect(
    ctx: &Ctx,
    gp3: &[Vec<Gp3>],
    vals: &mut Vec<i8>,
    at: usize,
    to: usize,
    emit: &mut dyn FnMut(&[i8]),
) {
    // element boundary?
    if let Some(k) = ctx.boundary_at.iter().position(|&b| b == at) {
        // elements 0..=k complete (boundary_at[k] = C(k+1, r))
        if at > 0 {
            let mut s = CanonSearch::new(ctx, vals, k + 1, None);
            if !s.is_minimal() {
                return;
            }
        }
    }
    if at == to {
        emit(vals);
        return;
    }
    for v in [0i8, 1, -1] {
        vals[at] = v;
        let ok = gp3[at].iter().all(|rel| gp3_satisfied(rel, vals));
        if ok {
            dfs_collect(ctx, gp3, vals, at + 1, to, emit);
        }
    }
    vals[at] = 0;
}

/// One isomorphism class of simple oriented matroids, represented by the
/// orbit-minimal chirotope.
#[derive(Clone, Debug)]
pub struct OmClass {
    pub chirotope: Chirotope,
}

/// Simple (loop-free, parallel-free) classes of rank exactly `r` on `m`
/// elements. Rank 1 keeps only the loop-free condition: any two non-loop
/// elements of a rank-1 structure are automatically parallel.
pub fn enumerate_oms(m: usize, r: usize) -> Result<Vec<OmClass>> {
    let all = enumerate_chirotopes(m, r)?;
    Ok(all
        .into_iter()
        .filter(|chi| chi.loops().is_empty() && (r == 1 || chi.parallel_pairs().is_empty()))
        .map(|chirotope| OmClass { chirotope })
        .collect())
}

/// A canonical key for an affine class: the orbit minimum over signed
/// permutations pinning the marked element to the last slot, together with
/// global negation. Keys are comparable whenever `(m, rank)` agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineKey {
    pub m: u8,
    pub rank: u8,
    signs: Vec<i8>,
}

impl fmt::Display for AffineKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .signs
            .iter()
            .map(|&v| crate::sign::Sign::from_i8(v).to_char())
            .collect();
        write!(f, "m={} r={} {}", self.m, self.rank, s)
    }
}

/// Canonical key of `(chirotope, marked element)` under affine isomorphism.
pub fn affine_key(chi: &Chirotope, mark: usize) -> Result<AffineKey> {
    let m = chi.ground_size();
    if mark >= m {
        return Err(Error::InvalidMarking(format!(
            "element {} out of range 1..={m}",
            mark + 1
        )));
    }
    if chi.loops().contains(&mark) {
        return Err(Error::InvalidMarking(format!(
            "element {} is a loop",
            mark + 1
        )));
    }
    let ctx = Ctx::new(m, chi.rank());
    let vals = to_colex(chi);
    let signs = orbit_min(&ctx, &vals, Some(mark));
    Ok(AffineKey {
        m: m as u8,
        rank: chi.rank() as u8,
        signs,
    })
}

/// Canonical affine key of an arrangement: cone it, read the chirotope off
/// the lifted normals, and mark the base hyperplane. Two arrangements of
/// equal size receive the same key exactly when their coned covector sets
/// with marked base element are isomorphic as marked oriented matroids.
pub fn arrangement_affine_key(a: &crate::geometry::RationalArrangement) -> Result<AffineKey> {
    let cone = a.cone();
    let config = cone.vector_configuration()?;
    let chi = Chirotope::from_vectors(&config)?;
    affine_key(&chi, a.len())
}

/// Canonical key of a chirotope orbit (no marking).
pub fn om_key(chi: &Chirotope) -> AffineKey {
    let ctx = Ctx::new(chi.ground_size(), chi.rank());
    let vals = to_colex(chi);
    let signs = orbit_min(&ctx, &vals, None);
    AffineKey {
        m: chi.ground_size() as u8,
        rank: chi.rank() as u8,
        signs,
    }
}

/// One affine isomorphism class: a representative `(oriented matroid, mark)`
/// and its canonical key.
#[derive(Clone, Debug)]
pub struct AffineClass {
    pub chirotope: Chirotope,
    pub mark: usize,
    pub key: AffineKey,
}

fn check_affine_scale(n: usize, r: usize) -> Result<()> {
    let ok = r >= 1 && r <= n && ((n <= 6 && r <= 3) || (n == 7 && r <= 2));
    if !ok {
        return Err(Error::ResourceLimit(format!(
            "affine enumeration supports n ≤ 6 with r ≤ 3, or n = 7 with r ≤ 2 \
             (got n={n}, r={r})"
        )));
    }
    Ok(())
}

/// All affine classes with `n` elements and affine rank exactly `r`:
/// mark every element of every simple class of rank `r+1` on `n+1`
/// elements, deduplicate by canonical key. Sorted by key.
pub fn enumerate_affine(n: usize, r: usize) -> Result<Vec<AffineClass>> {
    check_affine_scale(n, r)?;
    let oms = enumerate_oms(n + 1, r + 1)?;
    enumerate_affine_from(&oms, n, r)
}

fn enumerate_affine_from(oms: &[OmClass], n: usize, _r: usize) -> Result<Vec<AffineClass>> {
    let m = n + 1;
    let keyed: Vec<Vec<AffineClass>> = oms
        .par_iter()
        .map(|om| {
            (0..m)
                .map(|mark| {
                    let key = affine_key(&om.chirotope, mark).expect("simple class");
                    AffineClass {
                        chirotope: om.chirotope.clone(),
                        mark,
                        key,
                    }
                })
                .collect()
        })
        .collect();
    let mut by_key: HashMap<AffineKey, AffineClass> = HashMap::new();
    for cls in keyed.into_iter().flatten() {
        by_key.entry(cls.key.clone()).or_insert(cls);
    }
    let mut out: Vec<AffineClass> = by_key.into_values().collect();
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// The published census constants: affine class counts per `(r, n)`.
pub const TABLE_RANK1: [u64; 7] = [1, 1, 1, 1, 1, 1, 1]; // n = 1..=7
pub const TABLE_RANK2: [u64; 6] = [1, 3, 8, 46, 790, 37829]; // n = 2..=7
pub const TABLE_RANK3: [u64; 5] = [1, 5, 27, 1063, 1434219]; // n = 3..=7
pub const TABLE_TOTALS: [u64; 7] = [1, 2, 5, 14, 74, 1854, 1472049]; // n = 1..=7

/// Expected count for a cell, if published.
pub fn expected_count(n: usize, r: usize) -> Option<u64> {
    match r {
        1 if (1..=7).contains(&n) => Some(TABLE_RANK1[n - 1]),
        2 if (2..=7).contains(&n) => Some(TABLE_RANK2[n - 2]),
        3 if (3..=7).contains(&n) => Some(TABLE_RANK3[n - 3]),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub r: usize,
    /// `None` when the cell is beyond the supported scale.
    pub count: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct CensusTable {
    pub n_max: usize,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn count(&self, n: usize, r: usize) -> Option<u64> {
        self.rows
            .iter()
            .find(|row| row.n == n && row.r == r)
            .and_then(|row| row.count)
    }

    /// Total over ranks for one column; `None` if any contributing cell was
    /// skipped.
    pub fn total(&self, n: usize) -> Option<u64> {
        let mut sum = 0;
        for row in self.rows.iter().filter(|row| row.n == n) {
            sum += row.count?;
        }
        Some(sum)
    }

    /// Cells whose computed value disagrees with the published constants.
    pub fn diff(&self) -> Vec<(usize, usize, u64, u64)> {
        let mut out = Vec::new();
        for row in &self.rows {
            if let (Some(got), Some(want)) = (row.count, expected_count(row.n, row.r)) {
                if got != want {
                    out.push((row.n, row.r, got, want));
                }
            }
        }
        for n in 1..=self.n_max {
            if let (Some(got), Some(&want)) = (self.total(n), TABLE_TOTALS.get(n - 1)) {
                if got != want {
                    out.push((n, 0, got, want));
                }
            }
        }
        out
    }
}

impl fmt::Display for CensusTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r\\n ")?;
        for n in 1..=self.n_max {
            write!(f, "{n:>8}")?;
        }
        writeln!(f)?;
        for r in 1..=3 {
            write!(f, "r={r} ")?;
            for n in 1..=self.n_max {
                match self.rows.iter().find(|row| row.n == n && row.r == r) {
                    Some(CensusRow { count: Some(c), .. }) => write!(f, "{c:>8}")?,
                    Some(CensusRow { count: None, .. }) => write!(f, "{:>8}", "?")?,
                    None => write!(f, "{:>8}", "")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "all ")?;
        for n in 1..=self.n_max {
            match self.total(n) {
                Some(t) => write!(f, "{t:>8}")?,
                None => write!(f, "{:>8}", "?")?,
            }
        }
        writeln!(f)
    }
}

/// Compute the census grid for `r ∈ {1,2,3}`, `n ≤ n_max`. Cells beyond the
/// supported scale (`n = 7, r = 3`) are reported as skipped.
pub fn census_table(n_max: usize) -> Result<CensusTable> {
    let mut rows = Vec::new();
    for r in 1..=3usize {
        for n in r..=n_max {
            let count = if check_affine_scale(n, r).is_ok() {
                Some(enumerate_affine(n, r)?.len() as u64)
            } else {
                None
            };
            rows.push(CensusRow { n, r, count });
        }
    }
    Ok(CensusTable { n_max, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank1_chirotope_orbits() {
        // canonical rank-1 strings are 0^a +^b with b ≥ 1
        let chis = enumerate_chirotopes(3, 1).unwrap();
        assert_eq!(chis.len(), 3);
        let oms = enumerate_oms(3, 1).unwrap();
        assert_eq!(oms.len(), 1);
        for m in 1..=5 {
            assert_eq!(enumerate_oms(m, 1).unwrap().len(), 1);
        }
    }

    #[test]
    fn rank2_unique_simple_class() {
        for m in 2..=6 {
            let oms = enumerate_oms(m, 2).unwrap();
            assert_eq!(oms.len(), 1, "m={m}");
            assert!(oms[0].chirotope.is_simple());
        }
    }

    #[test]
    fn known_rank3_counts() {
        // simple rank-3 classes: 1, 2, 4, 17 for m = 3..6
        assert_eq!(enumerate_oms(3, 3).unwrap().len(), 1);
        assert_eq!(enumerate_oms(4, 3).unwrap().len(), 2);
        assert_eq!(enumerate_oms(5, 3).unwrap().len(), 4);
        assert_eq!(enumerate_oms(6, 3).unwrap().len(), 17);
    }

    #[test]
    fn enumerated_classes_are_valid_and_distinct() {
        for (m, r) in [(4, 2), (4, 3), (5, 3), (4, 4), (5, 4)] {
            let chis = enumerate_chirotopes(m, r).unwrap();
            let mut seen = std::collections::HashSet::new();
            for chi in &chis {
                assert!(chi.verify_exchange().is_ok(), "m={m} r={r}");
                // orbit-minimal representative is unique per class
                assert!(seen.insert(om_key(chi)), "duplicate class m={m} r={r}");
                // the DFS emits the orbit minimum itself
                assert_eq!(om_key(chi).signs, to_colex(chi), "not minimal m={m} r={r}");
                let v = chi.covectors().unwrap();
                assert!(v.check_axioms().all_pass());
                assert_eq!(v.rank(), r);
            }
        }
    }

    #[test]
    fn affine_small_counts() {
        assert_eq!(enumerate_affine(1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_affine(2, 1).unwrap().len(), 1);
        assert_eq!(enumerate_affine(2, 2).unwrap().len(), 1);
        assert_eq!(enumerate_affine(3, 2).unwrap().len(), 3);
        assert_eq!(enumerate_affine(3, 3).unwrap().len(), 1);
        assert_eq!(enumerate_affine(4, 2).unwrap().len(), 8);
        assert_eq!(enumerate_affine(4, 3).unwrap().len(), 5);
    }

    #[test]
    fn census_n4_matches_published_constants() {
        let table = census_table(4).unwrap();
        assert!(table.diff().is_empty(), "diff: {:?}", table.diff());
        assert_eq!(table.total(4), Some(14));
    }

    #[test]
    fn scale_bounds_enforced() {
        assert!(enumerate_chirotopes(9, 3).is_err());
        assert!(enumerate_chirotopes(8, 4).is_err());
        assert!(enumerate_affine(7, 3).is_err());
    }

    /// Independent oracle for the whole search: enumerate every sign
    /// assignment outright, keep those passing the literal exchange check,
    /// reduce modulo the group, and compare class sets with the pruned DFS.
    #[test]
    fn pruned_search_matches_brute_force() {
        for (m, r) in [(3usize, 2usize), (4, 2), (4, 3), (5, 4), (5, 2)] {
            let n_pos = binomial(m, r) as usize;
            let mut brute: std::collections::HashSet<AffineKey> =
                std::collections::HashSet::new();
            let mut signs = vec![0i8; n_pos];
            loop {
                if signs.iter().any(|&s| s != 0) {
                    let chi = Chirotope::new(m, r, signs.clone()).unwrap();
                    if chi.verify_exchange().is_ok() {
                        brute.insert(om_key(&chi));
                    }
                }
                // odometer over {0, 1, -1}
                let mut i = 0;
                loop {
                    if i == n_pos {
                        break;
                    }
                    signs[i] = match signs[i] {
                        0 => 1,
                        1 => -1,
                        _ => {
                            signs[i] = 0;
                            i += 1;
                            continue;
                        }
                    };
                    break;
                }
                if i == n_pos {
                    break;
                }
            }
            let pruned: std::collections::HashSet<AffineKey> = enumerate_chirotopes(m, r)
                .unwrap()
                .iter()
                .map(om_key)
                .collect();
            assert_eq!(pruned, brute, "m={m} r={r}");
        }
    }
}
