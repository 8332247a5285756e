//! Exhaustive kernels on bitmask graphs.

use super::bits;

/// Size of a maximum independent set inside `cand`.
pub(crate) fn max_independent(adj: &[u64], cand: u64) -> u32 {
    let mut best = 0;
    mis(adj, cand, 0, &mut best);
    best
}

fn mis(adj: &[u64], cand: u64, size: u32, best: &mut u32) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() <= *best {
        return;
    }
    let degree = |i: usize| (adj[i] & cand).count_ones();
    let low = bits(cand)
        .min_by_key(|&i| degree(i))
        .expect("cand is non-empty");
    if degree(low) <= 1 {
        // A vertex of degree at most one lies in some maximum independent set.
        mis(adj, cand & !adj[low] & !(1 << low), size + 1, best);
        return;
    }
    let high = bits(cand)
        .max_by_key(|&i| degree(i))
        .expect("cand is non-empty");
    mis(adj, cand & !adj[high] & !(1 << high), size + 1, best);
    mis(adj, cand & !(1 << high), size, best);
}

/// Bron–Kerbosch with pivoting, restricted to `cand`.
pub(crate) fn maximal_cliques(adj: &[u64], cand: u64) -> Vec<u64> {
    let mut out = Vec::new();
    bron_kerbosch(adj, 0, cand, 0, &mut out);
    out
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .expect("p is non-empty");
    for v in bits(p & !adj[pivot]) {
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

/// Enumerates injective maps `src -> dst` preserving edges (and non-edges when
/// `induced`), assigning source vertices in `order`. The callback receives the
/// image of each source index and returns `true` to stop. Returns whether the
/// enumeration was stopped.
pub(crate) fn for_each_embedding<F>(
    src: &[u64],
    dst: &[u64],
    induced: bool,
    order: &[usize],
    f: F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    let allowed = vec![u64::MAX; src.len()];
    for_each_embedding_within(src, dst, induced, order, &allowed, f)
}

/// As [`for_each_embedding`], with `allowed[s]` masking the admissible images of `s`.
pub(crate) fn for_each_embedding_within<F>(
    src: &[u64],
    dst: &[u64],
    induced: bool,
    order: &[usize],
    allowed: &[u64],
    mut f: F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    debug_assert_eq!(order.len(), src.len());
    if src.len() > dst.len() {
        return false;
    }
    let mut map = vec![usize::MAX; src.len()];
    extend(src, dst, induced, order, allowed, 0, 0, &mut map, &mut f)
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    src: &[u64],
    dst: &[u64],
    induced: bool,
    order: &[usize],
    allowed: &[u64],
    depth: usize,
    used: u64,
    map: &mut Vec<usize>,
    f: &mut F,
) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if depth == order.len() {
        return f(map);
    }
    let s = order[depth];
    let need = src[s].count_ones();
    let mut cand = allowed[s] & super::mask_of(dst.len()) & !used;
    for &prev in &order[..depth] {
        let t = map[prev];
        if src[s] >> prev & 1 == 1 {
            cand &= dst[t];
        } else if induced {
            cand &= !dst[t];
        }
    }
    for t in bits(cand) {
        if dst[t].count_ones() < need {
            continue;
        }
        map[s] = t;
        if extend(
            src,
            dst,
            induced,
            order,
            allowed,
            depth + 1,
            used | 1 << t,
            map,
            f,
        ) {
            return true;
        }
    }
    map[s] = usize::MAX;
    false
}
