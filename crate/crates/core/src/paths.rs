//! Parity-constrained path finding and two-disjoint-path routines.
//!
//! Inside a 2-connected non-bipartite block both parities are reachable
//! between any two distinct vertices (route both endpoints to an odd circuit
//! and pick the circuit arc fixing the parity); in a bipartite block the
//! 2-coloring forces the parity; across the block-cut tree parities add
//! mod 2.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{
    blocks, is_bipartite, Bipartition, CircuitSeq, EdgeId, Graph, Parity, PathSeq, VertexId,
};

fn edge_on(mask: Option<&[bool]>, e: EdgeId) -> bool {
    mask.map_or(true, |m| m[e])
}

/// BFS 2-coloring over the active edges only. Returns the coloring (MAX for
/// untouched vertices) or an odd circuit of the masked subgraph.
pub(crate) fn bipartite_masked(g: &Graph, mask: Option<&[bool]>) -> std::result::Result<Vec<u8>, CircuitSeq> {
    if mask.is_none() {
        return match is_bipartite(g) {
            Bipartition::Coloring(c) => Ok(c),
            Bipartition::OddCircuit(c) => Err(c),
        };
    }
    let sub = masked_subgraph(g, mask.unwrap());
    match is_bipartite(&sub) {
        Bipartition::Coloring(c) => {
            let mut colors = vec![u8::MAX; g.vertex_count()];
            for v in sub.vertices() {
                let host = g.vertex_by_name(sub.vertex_name(v)).unwrap();
                colors[host] = c[v];
            }
            Ok(colors)
        }
        Bipartition::OddCircuit(c) => Err(translate_circuit(&sub, g, &c)),
    }
}

pub(crate) fn masked_subgraph(g: &Graph, mask: &[bool]) -> Graph {
    let edges: Vec<EdgeId> = g.edges().filter(|&e| mask[e]).collect();
    g.edge_subgraph(&edges, format!("{}-mask", g.name()))
}

/// Re-express a path of `from` in the dense ids of `to` via external names.
pub(crate) fn translate_path(from: &Graph, to: &Graph, p: &PathSeq) -> PathSeq {
    PathSeq::new(
        p.vertices
            .iter()
            .map(|&v| to.vertex_by_name(from.vertex_name(v)).unwrap())
            .collect(),
        p.edges
            .iter()
            .map(|&e| to.edge_by_name(from.edge_name(e)).unwrap())
            .collect(),
    )
}

pub(crate) fn translate_circuit(from: &Graph, to: &Graph, c: &CircuitSeq) -> CircuitSeq {
    let mut out = CircuitSeq::new(
        c.vertices
            .iter()
            .map(|&v| to.vertex_by_name(from.vertex_name(v)).unwrap())
            .collect(),
        c.edges
            .iter()
            .map(|&e| to.edge_by_name(from.edge_name(e)).unwrap())
            .collect(),
    );
    out.canonicalize();
    out
}

/// Up to `k` internally-disjoint paths from `sources` to `sinks` over the
/// active edges, via unit-vertex-capacity max flow.
///
/// Endpoint vertices have capacity 1, so distinct paths use distinct
/// endpoints, except that a singleton side with `free_singleton` set carries
/// all paths through its one vertex. No path passes through a source or sink
/// internally.
pub(crate) fn disjoint_st_paths(
    g: &Graph,
    mask: Option<&[bool]>,
    sources: &[VertexId],
    sinks: &[VertexId],
    k: usize,
    free_singletons: bool,
) -> Vec<PathSeq> {
    let n = g.vertex_count();
    let src_set: BTreeSet<VertexId> = sources.iter().copied().collect();
    let snk_set: BTreeSet<VertexId> = sinks.iter().copied().collect();
    debug_assert!(src_set.is_disjoint(&snk_set));

    // nodes: 2*v (in), 2*v+1 (out), 2n = super source, 2n+1 = super sink
    let super_s = 2 * n;
    let super_t = 2 * n + 1;
    let mut arcs: Vec<(usize, usize, u32, Option<EdgeId>)> = Vec::new();
    for v in g.vertices() {
        let cap = if free_singletons
            && ((src_set.contains(&v) && sources.len() == 1)
                || (snk_set.contains(&v) && sinks.len() == 1))
        {
            k as u32
        } else {
            1
        };
        arcs.push((2 * v, 2 * v + 1, cap, None));
    }
    for e in g.edges() {
        if !edge_on(mask, e) {
            continue;
        }
        let (u, v) = g.ends(e);
        // no arc may enter a source or leave a sink
        if !src_set.contains(&v) && !snk_set.contains(&u) {
            arcs.push((2 * u + 1, 2 * v, 1, Some(e)));
        }
        if !src_set.contains(&u) && !snk_set.contains(&v) {
            arcs.push((2 * v + 1, 2 * u, 1, Some(e)));
        }
    }
    for &s in sources {
        arcs.push((super_s, 2 * s, k as u32, None));
    }
    for &t in sinks {
        arcs.push((2 * t + 1, super_t, k as u32, None));
    }

    // adjacency over arc indices; each arc i has a twin residual arc i^1
    let node_count = 2 * n + 2;
    let mut head = Vec::with_capacity(arcs.len() * 2);
    let mut cap = Vec::with_capacity(arcs.len() * 2);
    let mut elabel: Vec<Option<EdgeId>> = Vec::with_capacity(arcs.len() * 2);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    for &(a, b, c, lbl) in &arcs {
        adj[a].push(head.len());
        head.push(b);
        cap.push(c);
        elabel.push(lbl);
        adj[b].push(head.len());
        head.push(a);
        cap.push(0);
        elabel.push(lbl);
    }

    // Edmonds-Karp, at most k augmentations
    let mut flow_value = 0usize;
    while flow_value < k {
        let mut pred: Vec<Option<usize>> = vec![None; node_count];
        let mut queue = std::collections::VecDeque::from([super_s]);
        let mut seen = vec![false; node_count];
        seen[super_s] = true;
        'bfs: while let Some(u) = queue.pop_front() {
            for &ai in &adj[u] {
                if cap[ai] > 0 && !seen[head[ai]] {
                    seen[head[ai]] = true;
                    pred[head[ai]] = Some(ai);
                    if head[ai] == super_t {
                        break 'bfs;
                    }
                    queue.push_back(head[ai]);
                }
            }
        }
        if !seen[super_t] {
            break;
        }
        let mut v = super_t;
        while let Some(ai) = pred[v] {
            cap[ai] -= 1;
            cap[ai ^ 1] += 1;
            v = head[ai ^ 1];
        }
        flow_value += 1;
    }

    // decompose: residual on the twin arc records sent flow
    let used: Vec<u32> = (0..head.len())
        .map(|i| if i % 2 == 0 { cap[i ^ 1] } else { 0 })
        .collect();
    let mut remaining = used;
    let mut paths = Vec::new();
    for _ in 0..flow_value {
        // walk from super source
        let mut at = super_s;
        let mut verts: Vec<VertexId> = Vec::new();
        let mut edges: Vec<EdgeId> = Vec::new();
        loop {
            let mut advanced = false;
            for &ai in &adj[at] {
                if ai % 2 == 0 && remaining[ai] > 0 {
                    remaining[ai] -= 1;
                    let nxt = head[ai];
                    if let Some(e) = elabel[ai] {
                        edges.push(e);
                    }
                    if nxt == super_t {
                        at = nxt;
                    } else {
                        if nxt % 2 == 0 {
                            verts.push(nxt / 2);
                        }
                        at = nxt;
                    }
                    advanced = true;
                    break;
                }
            }
            if at == super_t || !advanced {
                break;
            }
        }
        debug_assert_eq!(at, super_t);
        paths.push(PathSeq::new(verts, edges));
    }
    paths
}

/// Two vertex-disjoint {S,T}-paths, or `None`. Singleton sides share their
/// single vertex as a common endpoint.
pub fn two_disjoint_paths(
    g: &Graph,
    s_set: &[VertexId],
    t_set: &[VertexId],
) -> Result<Option<(PathSeq, PathSeq)>> {
    if s_set.is_empty() || t_set.is_empty() {
        return Err(Error::precondition("S and T must be non-empty"));
    }
    for v in s_set.iter().chain(t_set) {
        if *v >= g.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
    }
    let ss: BTreeSet<VertexId> = s_set.iter().copied().collect();
    let ts: BTreeSet<VertexId> = t_set.iter().copied().collect();
    if !ss.is_disjoint(&ts) {
        return Err(Error::precondition("S and T must be disjoint"));
    }
    let svec: Vec<VertexId> = ss.into_iter().collect();
    let tvec: Vec<VertexId> = ts.into_iter().collect();
    let paths = disjoint_st_paths(g, None, &svec, &tvec, 2, true);
    if paths.len() < 2 {
        return Ok(None);
    }
    let mut it = paths.into_iter();
    Ok(Some((it.next().unwrap(), it.next().unwrap())))
}

/// A path of the requested parity between two distinct vertices, or `None`
/// when no such path exists.
pub fn parity_path(g: &Graph, u: VertexId, v: VertexId, want: Parity) -> Result<Option<PathSeq>> {
    if u >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{u}")));
    }
    if v >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if u == v {
        return Err(Error::precondition("parity_path endpoints must differ"));
    }
    if g.degree(u) == 0 || g.degree(v) == 0 {
        return Ok(None);
    }
    if !g.reachable_from(u, None)[v] {
        return Ok(None);
    }

    let dec = blocks(g)?;
    // block-cut tree: nodes are blocks (0..b) then vertices offset by b;
    // vertices keep a node only if they are cut vertices, otherwise they
    // live inside their unique block.
    let b = dec.blocks.len();
    let is_cut = {
        let mut f = vec![false; g.vertex_count()];
        for &c in &dec.cut_vertices {
            f[c] = true;
        }
        f
    };
    let mut vertex_blocks: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for (bi, blk) in dec.blocks.iter().enumerate() {
        let mut vs = BTreeSet::new();
        for &e in &blk.edges {
            let (x, y) = g.ends(e);
            vs.insert(x);
            vs.insert(y);
        }
        for x in vs {
            vertex_blocks[x].push(bi);
        }
    }
    let node_of = |x: VertexId| -> usize {
        if is_cut[x] {
            b + x
        } else {
            vertex_blocks[x][0]
        }
    };
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); b + g.vertex_count()];
    for (bi, _) in dec.blocks.iter().enumerate() {
        for x in g.vertices() {
            if is_cut[x] && vertex_blocks[x].contains(&bi) {
                tree_adj[bi].push(b + x);
                tree_adj[b + x].push(bi);
            }
        }
    }
    // BFS on the tree
    let (start, goal) = (node_of(u), node_of(v));
    let mut pred = vec![usize::MAX; tree_adj.len()];
    let mut seen = vec![false; tree_adj.len()];
    seen[start] = true;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        if x == goal {
            break;
        }
        for &y in &tree_adj[x] {
            if !seen[y] {
                seen[y] = true;
                pred[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut node_path = vec![goal];
    let mut cur = goal;
    while cur != start {
        cur = pred[cur];
        node_path.push(cur);
    }
    node_path.reverse();

    // junction sequence through the traversed blocks: the cut vertices
    // between consecutive blocks, with u and v at the ends
    let block_seq: Vec<usize> = node_path.iter().copied().filter(|&x| x < b).collect();
    let mut junctions: Vec<VertexId> = vec![u];
    for &x in &node_path {
        if x >= b && x - b != u && x - b != v {
            junctions.push(x - b);
        }
    }
    junctions.push(v);
    debug_assert_eq!(junctions.len(), block_seq.len() + 1);

    // per-block parity options
    let mut forced = Parity::Even;
    let mut flexible: Vec<usize> = Vec::new();
    let mut seg_colors: Vec<Option<Vec<u8>>> = vec![None; block_seq.len()];
    for (i, &bi) in block_seq.iter().enumerate() {
        let mask = block_mask(g, &dec.blocks[bi].edges);
        match bipartite_masked(g, Some(&mask)) {
            Ok(colors) => {
                let (x, y) = (junctions[i], junctions[i + 1]);
                let p = if colors[x] == colors[y] {
                    Parity::Even
                } else {
                    Parity::Odd
                };
                forced = forced.add(p);
                seg_colors[i] = Some(colors);
            }
            Err(_) => flexible.push(i),
        }
    }
    let feasible = !flexible.is_empty() || forced == want;
    if !feasible {
        return Ok(None);
    }

    // choose parities: flexible segments default to even, the first one
    // absorbs the correction
    let mut seg_parity: Vec<Parity> = Vec::with_capacity(block_seq.len());
    let correction = want.add(forced);
    for i in 0..block_seq.len() {
        let p = if let Some(colors) = &seg_colors[i] {
            let (x, y) = (junctions[i], junctions[i + 1]);
            if colors[x] == colors[y] {
                Parity::Even
            } else {
                Parity::Odd
            }
        } else if flexible.first() == Some(&i) {
            correction
        } else {
            Parity::Even
        };
        seg_parity.push(p);
    }

    // build the segments
    let mut total: Option<PathSeq> = None;
    for (i, &bi) in block_seq.iter().enumerate() {
        let mask = block_mask(g, &dec.blocks[bi].edges);
        let (x, y) = (junctions[i], junctions[i + 1]);
        let seg = if seg_colors[i].is_some() {
            bfs_path_masked(g, Some(&mask), x, y).expect("junctions lie in the block")
        } else {
            parity_path_in_nonbip_block(g, &mask, x, y, seg_parity[i])?
        };
        debug_assert_eq!(seg.parity(), seg_parity[i]);
        total = Some(match total {
            None => seg,
            Some(t) => t.join(&seg),
        });
    }
    let path = total.expect("at least one block on the tree path");
    debug_assert_eq!(path.first(), u);
    debug_assert_eq!(path.last(), v);
    debug_assert_eq!(path.parity(), want);
    debug_assert_eq!(path.validate(g), Ok(()));
    Ok(Some(path))
}

fn block_mask(g: &Graph, edges: &[EdgeId]) -> Vec<bool> {
    let mut m = vec![false; g.edge_count()];
    for &e in edges {
        m[e] = true;
    }
    m
}

/// Plain BFS path over active edges.
pub(crate) fn bfs_path_masked(
    g: &Graph,
    mask: Option<&[bool]>,
    from: VertexId,
    to: VertexId,
) -> Option<PathSeq> {
    let mut pred: Vec<Option<(EdgeId, VertexId)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &(e, w) in g.incident(x) {
            if edge_on(mask, e) && !seen[w] {
                seen[w] = true;
                pred[w] = Some((e, x));
                queue.push_back(w);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut edges = Vec::new();
    let mut verts = vec![to];
    let mut cur = to;
    while let Some((e, p)) = pred[cur] {
        edges.push(e);
        verts.push(p);
        cur = p;
    }
    edges.reverse();
    verts.reverse();
    Some(PathSeq::new(verts, edges))
}

/// Constructive parity path inside a 2-connected non-bipartite subgraph given
/// by `mask`: route both endpoints to an odd circuit and pick the arc that
/// fixes the parity.
pub(crate) fn parity_path_in_nonbip_block(
    g: &Graph,
    mask: &[bool],
    x: VertexId,
    y: VertexId,
    want: Parity,
) -> Result<PathSeq> {
    let circuit = match bipartite_masked(g, Some(mask)) {
        Err(c) => c,
        Ok(_) => return Err(Error::Bipartite),
    };
    Ok(parity_path_via_circuit(g, Some(mask), &circuit, x, y, want))
}

/// Same construction with the odd circuit already in hand.
pub(crate) fn parity_path_via_circuit(
    g: &Graph,
    mask: Option<&[bool]>,
    circuit: &CircuitSeq,
    x: VertexId,
    y: VertexId,
    want: Parity,
) -> PathSeq {
    debug_assert_ne!(x, y);
    debug_assert!(circuit.is_odd());
    let on_c = |v: VertexId| circuit.contains_vertex(v);

    let path = if on_c(x) && on_c(y) {
        let (a1, a2) = circuit.arcs_between(x, y);
        if a1.parity() == want {
            a1
        } else {
            a2
        }
    } else if on_c(x) || on_c(y) {
        // wlog x on the circuit; find y -> circuit avoiding x
        let (px, py, swapped) = if on_c(x) { (x, y, false) } else { (y, x, true) };
        let q = path_to_set_avoiding(g, mask, py, &circuit.vertices, px)
            .expect("2-connected block keeps the circuit reachable");
        let hit = q.last();
        let (a1, a2) = circuit.arcs_between(hit, px);
        let arc = if q.parity().add(a1.parity()) == want {
            a1
        } else {
            a2
        };
        let joined = q.join(&arc);
        if swapped {
            joined.reversed()
        } else {
            joined
        }
    } else {
        // Menger: two disjoint paths from {x,y} to the circuit
        let paths = disjoint_st_paths(g, mask, &[x.min(y), x.max(y)], &circuit.vertices, 2, false);
        assert_eq!(paths.len(), 2, "Menger in a 2-connected block");
        let (p, q) = (paths[0].clone(), paths[1].clone());
        let (from_x, from_y) = if p.first() == x { (p, q) } else { (q, p) };
        debug_assert_eq!(from_y.first(), y);
        let (a1, a2) = circuit.arcs_between(from_x.last(), from_y.last());
        let mid = from_x.parity().add(from_y.parity());
        let arc = if mid.add(a1.parity()) == want { a1 } else { a2 };
        from_x.join(&arc).join(&from_y.reversed())
    };
    debug_assert_eq!(path.parity(), want);
    debug_assert_eq!(path.first(), x);
    debug_assert_eq!(path.last(), y);
    if cfg!(debug_assertions) {
        debug_assert_eq!(path.validate(g), Ok(()));
    }
    path
}

/// BFS from `from` to any vertex of `targets`, avoiding `avoid`, with no
/// target vertex used internally. Expansion stops at targets.
fn path_to_set_avoiding(
    g: &Graph,
    mask: Option<&[bool]>,
    from: VertexId,
    targets: &[VertexId],
    avoid: VertexId,
) -> Option<PathSeq> {
    let tset: BTreeSet<VertexId> = targets.iter().copied().filter(|&t| t != avoid).collect();
    let mut pred: Vec<Option<(EdgeId, VertexId)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    seen[avoid] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    let mut found = None;
    'outer: while let Some(xv) = queue.pop_front() {
        for &(e, w) in g.incident(xv) {
            if !edge_on(mask, e) || seen[w] {
                continue;
            }
            seen[w] = true;
            pred[w] = Some((e, xv));
            if tset.contains(&w) {
                found = Some(w);
                break 'outer;
            }
            queue.push_back(w);
        }
    }
    let hit = found?;
    let mut edges = Vec::new();
    let mut verts = vec![hit];
    let mut cur = hit;
    while let Some((e, p)) = pred[cur] {
        edges.push(e);
        verts.push(p);
        cur = p;
    }
    edges.reverse();
    verts.reverse();
    Some(PathSeq::new(verts, edges))
}

/// An even uv-path with at least 4 edges, or `None`. For each neighbour `a`
/// of `u`, seeks an odd av-path in (g - u) with all av edges deleted and
/// prepends the ua edge.
pub fn even_path_ge4(g: &Graph, u: VertexId, v: VertexId) -> Result<Option<PathSeq>> {
    if u >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{u}")));
    }
    if v >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if u == v {
        return Err(Error::precondition("endpoints must differ"));
    }
    // ascending dense id, first ua edge per neighbour
    let mut tried = BTreeSet::new();
    for &(e, a) in g.incident(u) {
        if a == v || !tried.insert(a) {
            continue;
        }
        let without_u = g.delete_vertex(u);
        let asub = without_u.vertex_by_name(g.vertex_name(a)).unwrap();
        let vsub = without_u.vertex_by_name(g.vertex_name(v)).unwrap();
        let av_edges: Vec<EdgeId> = without_u
            .edges()
            .filter(|&f| {
                let (p, q) = without_u.ends(f);
                (p, q) == (asub.min(vsub), asub.max(vsub))
            })
            .collect();
        let reduced = without_u.delete_edges(&av_edges);
        let ra = reduced.vertex_by_name(g.vertex_name(a)).unwrap();
        let rv = reduced.vertex_by_name(g.vertex_name(v)).unwrap();
        if let Some(p) = parity_path(&reduced, ra, rv, Parity::Odd)? {
            let lifted = translate_path(&reduced, g, &p);
            let ua = PathSeq::from_edges(g, u, vec![e]);
            let full = ua.join(&lifted);
            debug_assert!(full.len() >= 4 && full.parity() == Parity::Even);
            debug_assert_eq!(full.validate(g), Ok(()));
            return Ok(Some(full));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_c5plus, gen_cycle, gen_k4};

    #[test]
    fn parity_path_on_c5() {
        let g = gen_cycle(5);
        let odd = parity_path(&g, 0, 1, Parity::Odd).unwrap().unwrap();
        assert_eq!(odd.len(), 1);
        let even = parity_path(&g, 0, 1, Parity::Even).unwrap().unwrap();
        assert_eq!(even.len(), 4);
    }

    #[test]
    fn parity_path_bipartite_forced() {
        let g = gen_cycle(4);
        // antipodal pair: both paths even
        assert!(parity_path(&g, 0, 2, Parity::Odd).unwrap().is_none());
        assert!(parity_path(&g, 0, 2, Parity::Even).unwrap().is_some());
    }

    #[test]
    fn parity_path_across_blocks() {
        // bowtie: two triangles glued at vertex 1 (dense 0)
        let g = Graph::from_edge_list(
            "bowtie",
            5,
            &[(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (1, 5)],
        );
        let a = g.vertex_by_name("2").unwrap();
        let b = g.vertex_by_name("4").unwrap();
        for want in [Parity::Even, Parity::Odd] {
            let p = parity_path(&g, a, b, want).unwrap().unwrap();
            assert_eq!(p.parity(), want);
            assert_eq!(p.validate(&g), Ok(()));
        }
    }

    #[test]
    fn parity_path_errors_and_absent() {
        let g = gen_cycle(4);
        assert!(parity_path(&g, 0, 0, Parity::Odd).is_err());
        let disconnected = Graph::from_edge_list("two", 4, &[(1, 2), (3, 4)]);
        assert!(parity_path(&disconnected, 0, 2, Parity::Odd)
            .unwrap()
            .is_none());
    }

    #[test]
    fn two_disjoint_paths_examples() {
        let k4 = gen_k4();
        let got = two_disjoint_paths(&k4, &[0, 1], &[2, 3]).unwrap().unwrap();
        let (p, q) = got;
        assert_eq!(p.validate(&k4), Ok(()));
        assert_eq!(q.validate(&k4), Ok(()));
        let pv: BTreeSet<_> = p.vertices.iter().collect();
        let qv: BTreeSet<_> = q.vertices.iter().collect();
        assert!(pv.is_disjoint(&qv));

        let path3 = Graph::from_edge_list("p", 3, &[(1, 2), (2, 3)]);
        assert!(two_disjoint_paths(&path3, &[0], &[2]).unwrap().is_none());

        let c5 = gen_cycle(5);
        let (p, q) = two_disjoint_paths(&c5, &[0, 1], &[2, 4]).unwrap().unwrap();
        let pv: BTreeSet<_> = p.vertices.iter().collect();
        let qv: BTreeSet<_> = q.vertices.iter().collect();
        assert!(pv.is_disjoint(&qv));
    }

    #[test]
    fn singleton_shared_endpoint() {
        // theta: 1-2 direct, 1-3-2, 1-4-2
        let g = Graph::from_edge_list("theta", 4, &[(1, 2), (1, 3), (3, 2), (1, 4), (4, 2)]);
        let (p, q) = two_disjoint_paths(&g, &[0], &[1]).unwrap().unwrap();
        assert_eq!(p.first(), 0);
        assert_eq!(q.first(), 0);
        assert_eq!(p.last(), 1);
        assert_eq!(q.last(), 1);
        // inner vertices disjoint
        let pi: BTreeSet<_> = p.inner_vertices().iter().collect();
        let qi: BTreeSet<_> = q.inner_vertices().iter().collect();
        assert!(pi.is_disjoint(&qi));
    }

    #[test]
    fn even_path_ge4_examples() {
        let c5 = gen_cycle(5);
        let p = even_path_ge4(&c5, 0, 1).unwrap().unwrap();
        assert_eq!(p.len(), 4);

        let c4 = gen_cycle(4);
        assert!(even_path_ge4(&c4, 0, 1).unwrap().is_none());

        let k4 = gen_k4();
        assert!(even_path_ge4(&k4, 0, 1).unwrap().is_none());

        let c5p = gen_c5plus();
        // 1 and 3 are joined by the chord; path 1-2-3 has length 2; the long
        // way 1-5-4-3 is odd; is there an even >= 4? 1-2-3-4-5? ends at 5.
        // u=1, v=3: candidates via neighbour 2: odd 2..3 path in g-1 minus 23
        // edges: 2 has only 3 left... exhaustive check in integration tests.
        let u = c5p.vertex_by_name("1").unwrap();
        let v = c5p.vertex_by_name("3").unwrap();
        if let Some(p) = even_path_ge4(&c5p, u, v).unwrap() {
            assert!(p.len() >= 4 && p.parity() == Parity::Even);
        }
    }
}
