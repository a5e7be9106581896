//! Development harness: sweeps small integer line/plane dictionaries to find
//! coordinate representatives for every affine class needed by the catalog,
//! and prints them as Rust tables ready to freeze into the catalog module.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use omkit_core::enumerate::{arrangement_affine_key, enumerate_affine, AffineKey};
use omkit_core::geometry::RationalArrangement;
use omkit_core::iso::fingerprint;

type Row = (Vec<i64>, i64);

fn arr(dim: usize, rows: &[Row]) -> Option<RationalArrangement> {
    let refs: Vec<(&[i64], i64)> = rows.iter().map(|(n, b)| (n.as_slice(), *b)).collect();
    RationalArrangement::from_ints(dim, &refs).ok()
}

fn fmt_rows(rows: &[Row]) -> String {
    let parts: Vec<String> = rows
        .iter()
        .map(|(n, b)| {
            let ns: Vec<String> = n.iter().map(|v| v.to_string()).collect();
            format!("(&[{}], {})", ns.join(", "), b)
        })
        .collect();
    format!("&[{}]", parts.join(", "))
}

fn fig3_rows() -> Vec<(&'static str, Vec<Row>)> {
    vec![
        (
            "fig3-class1",
            vec![
                (vec![0, 1], 0),
                (vec![0, 1], 3),
                (vec![1, 0], 0),
                (vec![1, -1], -1),
            ],
        ),
        (
            "fig3-class2",
            vec![
                (vec![0, 1], 0),
                (vec![0, 1], 3),
                (vec![1, 0], 0),
                (vec![1, -1], 4),
            ],
        ),
        (
            "fig3-class3",
            vec![
                (vec![0, 1], 0),
                (vec![0, 1], 3),
                (vec![1, 0], 0),
                (vec![1, -1], 0),
            ],
        ),
        (
            "fig3-class4",
            vec![
                (vec![0, 1], 0),
                (vec![0, 1], 3),
                (vec![1, 0], 0),
                (vec![1, 0], 3),
            ],
        ),
        (
            "fig3-class5",
            vec![
                (vec![0, 1], 0),
                (vec![0, 1], 1),
                (vec![0, 1], 2),
                (vec![1, 0], 0),
            ],
        ),
        (
            "fig3-class6",
            vec![
                (vec![1, 1], 1),
                (vec![1, 2], 4),
                (vec![1, 3], 9),
                (vec![1, 4], 16),
            ],
        ),
        (
            "fig3-class7",
            vec![
                (vec![1, 0], 0),
                (vec![0, 1], 0),
                (vec![1, -1], 0),
                (vec![1, 1], 2),
            ],
        ),
        (
            "fig3-class8",
            vec![
                (vec![1, 0], 0),
                (vec![0, 1], 0),
                (vec![1, -1], 0),
                (vec![1, 1], 0),
            ],
        ),
    ]
}

fn five_line_dictionary() -> Vec<Row> {
    let mut dict = Vec::new();
    for k in 0..4i64 {
        dict.push((vec![1, 0], k)); // vertical x = k
        dict.push((vec![0, 1], k)); // horizontal y = k
        dict.push((vec![1, -1], k)); // slope 1
        dict.push((vec![1, 1], k)); // slope -1
        dict.push((vec![2, -1], k)); // slope 2
    }
    dict
}

fn plane_dictionary() -> Vec<Row> {
    let mut dict: Vec<Row> = Vec::new();
    for (n, offsets) in [
        (vec![1i64, 0, 0], vec![0i64, 1]),
        (vec![0, 1, 0], vec![0, 1]),
        (vec![0, 0, 1], vec![0, 1]),
        (vec![1, 1, 1], vec![1, -1, 2]),
        (vec![1, 1, -1], vec![1]),
        (vec![1, -1, 1], vec![1]),
        (vec![-1, 1, 1], vec![1]),
        (vec![1, 1, 0], vec![1]),
        (vec![1, 0, 1], vec![1]),
        (vec![0, 1, 1], vec![1]),
    ] {
        for b in offsets {
            dict.push((n.clone(), b));
        }
    }
    dict
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn shape_sig(a: &RationalArrangement) -> (usize, Vec<(usize, usize)>, usize, usize) {
    let fp = fingerprint(&a.faces().unwrap());
    (
        fp.bounded_chambers(),
        fp.bounded_chamber_shapes(),
        fp.points(),
        fp.rays,
    )
}

fn main() {
    // ---- fig3: eight 4-line classes ----
    let fig3: Vec<(&str, Vec<Row>, RationalArrangement)> = fig3_rows()
        .into_iter()
        .map(|(name, rows)| {
            let a = arr(2, &rows).unwrap();
            (name, rows, a)
        })
        .collect();
    let mut fig3_keys: HashMap<AffineKey, &str> = HashMap::new();
    for (name, rows, a) in &fig3 {
        let key = arrangement_affine_key(a).unwrap();
        let fp = fingerprint(&a.faces().unwrap());
        println!(
            "// {} rows={} bounded_shapes={:?} points={}",
            name,
            fmt_rows(rows),
            fp.bounded_chamber_shapes(),
            fp.points()
        );
        assert!(
            fig3_keys.insert(key, name).is_none(),
            "{name} duplicates a class"
        );
    }
    let expected4: HashSet<AffineKey> = enumerate_affine(4, 2)
        .unwrap()
        .into_iter()
        .map(|c| c.key)
        .collect();
    assert_eq!(fig3_keys.len(), 8);
    assert_eq!(
        expected4,
        fig3_keys.keys().cloned().collect::<HashSet<_>>(),
        "fig3 classes must exactly cover the eight nontrivial 4-line classes"
    );
    println!("fig3: all 8 classes covered\n");

    // ---- 46 nontrivial 5-line classes ----
    let dict = five_line_dictionary();
    let idx_sets = subsets(dict.len(), 5);
    println!("// sweeping {} five-line subsets", idx_sets.len());
    let found: Vec<(AffineKey, Vec<Row>)> = idx_sets
        .par_iter()
        .filter_map(|idx| {
            let rows: Vec<Row> = idx.iter().map(|&i| dict[i].clone()).collect();
            let a = arr(2, &rows)?;
            if a.rank() != 2 {
                return None; // trivial (all parallel)
            }
            let key = arrangement_affine_key(&a).ok()?;
            Some((key, rows))
        })
        .collect();
    let mut line5: HashMap<AffineKey, Vec<Row>> = HashMap::new();
    for (key, rows) in found {
        line5.entry(key).or_insert(rows);
    }
    let expected5: HashSet<AffineKey> = enumerate_affine(5, 2)
        .unwrap()
        .into_iter()
        .map(|c| c.key)
        .collect();
    let covered = line5.keys().filter(|k| expected5.contains(k)).count();
    println!("// five-line classes found: {} of 46", covered);
    let mut sorted_keys: Vec<&AffineKey> = line5.keys().collect();
    sorted_keys.sort();
    for (i, key) in sorted_keys.iter().enumerate() {
        println!(
            "    // lines5 {:02}\n    {},",
            i + 1,
            fmt_rows(&line5[*key])
        );
    }
    if covered < 46 {
        println!(
            "// MISSING {} classes — extend the dictionary",
            46 - covered
        );
        return;
    }

    // ---- rank-3 five-plane targets ----
    let expected53: HashSet<AffineKey> = enumerate_affine(5, 3)
        .unwrap()
        .into_iter()
        .map(|c| c.key)
        .collect();
    assert_eq!(expected53.len(), 27);

    // accounted for by constructions: suspensions of fig3 (4 distinct),
    // the one-bounded-edge arrangement, 7 bisected products
    let mut accounted: HashMap<AffineKey, String> = HashMap::new();
    for (name, _, a) in &fig3 {
        let cone = a.cone();
        let key = arrangement_affine_key(&cone).unwrap();
        let sig = shape_sig(&cone);
        accounted
            .entry(key)
            .or_insert_with(|| format!("suspension of {name} (rays={})", sig.3));
    }
    println!("\n// suspensions: {} distinct classes", accounted.len());
    for v in accounted.values() {
        println!("//   {v}");
    }

    let one_edge = arr(
        3,
        &[
            (vec![1, 0, 0], 0),
            (vec![0, 1, 0], 0),
            (vec![1, -1, 0], 0),
            (vec![0, 0, 1], 0),
            (vec![0, 0, 1], 1),
        ],
    )
    .unwrap();
    let key = arrangement_affine_key(&one_edge).unwrap();
    println!("// one-bounded-edge sig {:?}", shape_sig(&one_edge));
    accounted.insert(key, "one bounded edge".into());

    for (name, _, a) in &fig3 {
        if a.is_central() {
            continue;
        }
        let b = a.product_with_axis().unwrap().bisect().unwrap();
        let key = arrangement_affine_key(&b).unwrap();
        accounted.insert(key, format!("bisected product of {name}"));
    }
    println!("// accounted so far: {} of 27", accounted.len());

    let remaining: HashSet<AffineKey> = expected53
        .iter()
        .filter(|k| !accounted.contains_key(k))
        .cloned()
        .collect();
    println!("// remaining 'new' classes to realize: {}", remaining.len());

    // ---- sweep plane dictionary for the remaining 15 ----
    let pdict = plane_dictionary();
    let pidx = subsets(pdict.len(), 5);
    println!("// sweeping {} five-plane subsets", pidx.len());
    let hits: Vec<(AffineKey, Vec<Row>)> = pidx
        .par_iter()
        .filter_map(|idx| {
            let rows: Vec<Row> = idx.iter().map(|&i| pdict[i].clone()).collect();
            let a = arr(3, &rows)?;
            if a.rank() != 3 {
                return None;
            }
            let key = arrangement_affine_key(&a).ok()?;
            if remaining.contains(&key) {
                Some((key, rows))
            } else {
                None
            }
        })
        .collect();
    let mut new_reps: HashMap<AffineKey, Vec<Row>> = HashMap::new();
    for (key, rows) in hits {
        new_reps.entry(key).or_insert(rows);
    }
    println!(
        "// new-class representatives found: {} of {}",
        new_reps.len(),
        remaining.len()
    );
    let mut items: Vec<(&AffineKey, &Vec<Row>)> = new_reps.iter().collect();
    items.sort_by_key(|(k, _)| (*k).clone());
    for (key, rows) in items {
        let a = arr(3, rows).unwrap();
        let sig = shape_sig(&a);
        println!(
            "    // bounded={} shapes={:?} points={} rays={}\n    {},",
            sig.0,
            sig.1,
            sig.2,
            sig.3,
            fmt_rows(rows)
        );
        let _ = key;
    }
    if new_reps.len() < remaining.len() {
        println!(
            "// MISSING {} new classes — extend plane dictionary",
            remaining.len() - new_reps.len()
        );
    }
}
