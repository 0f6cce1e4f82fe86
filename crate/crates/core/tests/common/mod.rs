//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's invariant code; it only reads crossing records.
#![allow(dead_code)]

use kinkiness::families::{pretzel_diagram, twist_knot_diagram, PretzelParams};
use kinkiness::{BraidWord, Letter, OrientedDiagram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// `|det|` of an integer matrix whose true determinant is far below 2^60.
fn small_abs_det(m: Vec<Vec<i64>>) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .into_iter()
        .map(|row| row.into_iter().map(|x| x.rem_euclid(PRIME as i64) as u64).collect())
        .collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        a.swap(col, pivot);
        det = mul_mod(det, a[col][col]);
        let inv = pow_mod(a[col][col], PRIME - 2);
        for r in col + 1..n {
            let f = mul_mod(a[r][col], inv);
            if f == 0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            for (x, &y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = (*x + PRIME - mul_mod(f, y)) % PRIME;
            }
        }
    }
    det.min(PRIME - det)
}

/// Knot determinant from the Fox coloring matrix of the diagram.
pub fn coloring_determinant(d: &OrientedDiagram) -> u64 {
    let n = d.crossing_count();
    if n == 0 {
        return if d.free_loops() == 1 { 1 } else { 0 };
    }
    // Over-arcs: pieces of the diagram between undercrossings.
    let mut parent: Vec<usize> = (0..d.arc_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in d.crossings() {
        let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
        parent[a] = b;
    }
    let mut index = std::collections::HashMap::new();
    for a in 0..d.arc_count() {
        let r = find(&mut parent, a);
        let next = index.len();
        index.entry(r).or_insert(next);
    }
    let cols = index.len();
    let mut matrix = vec![vec![0i64; cols]; n];
    for (row, c) in matrix.iter_mut().zip(d.crossings()) {
        row[index[&find(&mut parent, c.over_in)]] += 2;
        row[index[&find(&mut parent, c.under_in)]] -= 1;
        row[index[&find(&mut parent, c.under_out)]] -= 1;
    }
    let minor: Vec<Vec<i64>> = matrix[1..].iter().map(|r| r[1..].to_vec()).collect();
    small_abs_det(minor)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(1..=max_strands);
    let len = if strands == 1 { 0 } else { rng.gen_range(0..=max_len) };
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..strands);
            if rng.gen_bool(0.5) {
                Letter::positive(i)
            } else {
                Letter::negative(i)
            }
        })
        .collect();
    BraidWord::new(strands, letters).unwrap()
}

pub fn random_positive_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::positive(rng.gen_range(1..strands))).collect();
    BraidWord::new(strands, letters).unwrap()
}

pub const RIGHT_TREFOIL: &str = "X+(1,4,2,5) X+(3,6,4,1) X+(5,2,6,3)";
pub const LEFT_TREFOIL: &str = "X-(4,1,5,2) X-(6,3,1,4) X-(2,5,3,6)";

pub fn odd_range(limit: i64) -> Vec<i64> {
    (-limit..=limit).filter(|t| t % 2 != 0).collect()
}

pub fn pretzel_grid(limit: i64) -> Vec<PretzelParams> {
    let values = odd_range(limit);
    let mut out = Vec::new();
    for &p in &values {
        for &q in &values {
            for &r in &values {
                out.push(PretzelParams::new(p, q, r).unwrap());
            }
        }
    }
    out
}

/// Both trefoils, the figure-eight, every odd pretzel with entries up to 5 in
/// absolute value, and random closures with every strand crossed.
pub fn corpus() -> Vec<(String, OrientedDiagram)> {
    let mut out = vec![
        ("right trefoil".to_string(), RIGHT_TREFOIL.parse().unwrap()),
        ("left trefoil".to_string(), LEFT_TREFOIL.parse().unwrap()),
        ("figure-eight".to_string(), twist_knot_diagram(1).unwrap()),
    ];
    for params in pretzel_grid(5) {
        out.push((format!("pretzel {params:?}"), pretzel_diagram(params)));
    }
    let mut rng = rng(0x5eed);
    let mut found = 0;
    while found < 30 {
        let w = random_braid(&mut rng, 5, 10);
        let d = w.closure_diagram();
        if d.crossing_count() > 0 && d.is_connected() {
            out.push((w.to_string(), d));
            found += 1;
        }
    }
    out
}
