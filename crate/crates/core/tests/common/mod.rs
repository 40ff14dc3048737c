#![allow(dead_code)]

use kfold_core::{Family, FamilyParams, GenericGraph};

pub fn both_families(n_max: i64) -> impl Iterator<Item = FamilyParams> {
    FamilyParams::all_up_to(Family::Web, n_max).chain(FamilyParams::all_up_to(Family::Antiweb, n_max))
}

/// Largest stable set size by subset enumeration.
pub fn brute_alpha(g: &GenericGraph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vs.len() > best && g.is_stable(&vs) {
            best = vs.len();
        }
    }
    best
}

pub fn brute_omega(g: &GenericGraph) -> usize {
    brute_alpha(&g.complement())
}

fn extend(g: &GenericGraph, colors: &mut [usize], v: usize, x: usize, used: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    // symmetry: a new color is only ever the next unused one
    for c in 0..x.min(used + 1) {
        if (0..v).all(|u| colors[u] != c || !g.has_edge(u, v)) {
            colors[v] = c;
            if extend(g, colors, v + 1, x, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

/// Chromatic number by backtracking over proper colorings.
pub fn brute_chromatic(g: &GenericGraph) -> usize {
    let n = g.vertex_count();
    let mut colors = vec![0; n];
    (0..=n).find(|&x| extend(g, &mut colors, 0, x, 0)).unwrap()
}

/// `χ_k` as the chromatic number of `G ∘ K_k`.
pub fn brute_chi_k(g: &GenericGraph, k: usize) -> usize {
    brute_chromatic(&g.lex_product_with_clique(k).unwrap())
}

/// Is `inner` an induced subgraph of `outer` under some injective map?
pub fn brute_induced(inner: &GenericGraph, outer: &GenericGraph) -> bool {
    brute_embeds(inner, outer, true)
}

/// Does some injective map send every edge of `inner` to an edge of `outer`?
pub fn brute_subgraph(inner: &GenericGraph, outer: &GenericGraph) -> bool {
    brute_embeds(inner, outer, false)
}

fn brute_embeds(inner: &GenericGraph, outer: &GenericGraph, induced: bool) -> bool {
    fn go(inner: &GenericGraph, outer: &GenericGraph, induced: bool, map: &mut Vec<usize>, taken: &mut [bool]) -> bool {
        let v = map.len();
        if v == inner.vertex_count() {
            return true;
        }
        for w in 0..outer.vertex_count() {
            if taken[w] {
                continue;
            }
            if (0..v).all(|u| {
                let (a, b) = (inner.has_edge(u, v), outer.has_edge(map[u], w));
                if induced {
                    a == b
                } else {
                    !a || b
                }
            }) {
                map.push(w);
                taken[w] = true;
                if go(inner, outer, induced, map, taken) {
                    return true;
                }
                map.pop();
                taken[w] = false;
            }
        }
        false
    }
    inner.vertex_count() <= outer.vertex_count()
        && go(
            inner,
            outer,
            induced,
            &mut Vec::new(),
            &mut vec![false; outer.vertex_count()],
        )
}
