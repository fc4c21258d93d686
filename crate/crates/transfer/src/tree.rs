use exact_algebra::{BElement, ExtElement, Side};
use matrix_factorization::{retract_i, retract_p, MFData};

use crate::engine::{bivalent, edge_h, trivalent};
use crate::TransferError;

/// Planar binary tree whose edges carry a number of bivalent vertices.
/// `bivalent` counts the vertices on the edge above the node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RibbonTree {
    Leaf { bivalent: usize },
    Node { left: Box<RibbonTree>, right: Box<RibbonTree>, bivalent: usize },
}

impl RibbonTree {
    pub fn leaves(&self) -> usize {
        match self {
            RibbonTree::Leaf { .. } => 1,
            RibbonTree::Node { left, right, .. } => left.leaves() + right.leaves(),
        }
    }

    pub fn bivalent_total(&self) -> usize {
        match self {
            RibbonTree::Leaf { bivalent } => *bivalent,
            RibbonTree::Node { left, right, bivalent } => bivalent + left.bivalent_total() + right.bivalent_total(),
        }
    }

    /// Number of non-root edges.
    fn edges(&self) -> usize {
        match self {
            RibbonTree::Leaf { .. } => 1,
            RibbonTree::Node { left, right, .. } => 1 + left.edges() + right.edges(),
        }
    }

    fn with_counts(&self, counts: &[usize], pos: &mut usize) -> RibbonTree {
        let here = counts[*pos];
        *pos += 1;
        match self {
            RibbonTree::Leaf { .. } => RibbonTree::Leaf { bivalent: here },
            RibbonTree::Node { left, right, .. } => {
                let l = left.with_counts(counts, pos);
                let r = right.with_counts(counts, pos);
                RibbonTree::Node { left: Box::new(l), right: Box::new(r), bivalent: here }
            }
        }
    }

    /// Bracket notation, `*` per bivalent vertex.
    pub fn render(&self) -> String {
        match self {
            RibbonTree::Leaf { bivalent } => format!("x{}", "*".repeat(*bivalent)),
            RibbonTree::Node { left, right, bivalent } => {
                format!("({} {}){}", left.render(), right.render(), "*".repeat(*bivalent))
            }
        }
    }
}

pub fn catalan(k: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..k as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// All planar binary trees with `d` leaves and no bivalent vertices, in a
/// fixed order.
pub fn enumerate_skeletons(d: usize) -> Vec<RibbonTree> {
    if d == 1 {
        return vec![RibbonTree::Leaf { bivalent: 0 }];
    }
    let mut out = Vec::new();
    for s in 1..d {
        for l in enumerate_skeletons(s) {
            for r in enumerate_skeletons(d - s) {
                out.push(RibbonTree::Node { left: Box::new(l.clone()), right: Box::new(r), bivalent: 0 });
            }
        }
    }
    out
}

fn distributions(slots: usize, total: usize, cap: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == slots {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for k in 0..=total.min(cap) {
        prefix.push(k);
        distributions(slots, total - k, cap, prefix, out);
        prefix.pop();
    }
}

/// Trees with `d` leaves carrying exactly `b` bivalent vertices for each `b`
/// in `totals`, at most `per_edge` on one edge, none on the root edge
/// (where `p` kills the output of any bivalent vertex).
pub fn enumerate_trees(d: usize, totals: &[usize], per_edge: usize) -> Vec<RibbonTree> {
    let mut out = Vec::new();
    for skel in enumerate_skeletons(d) {
        // the root edge is the first slot and stays empty
        let slots = skel.edges();
        for &b in totals {
            let mut dists = Vec::new();
            distributions(slots - 1, b, per_edge, &mut Vec::new(), &mut dists);
            for dist in dists {
                let mut counts = vec![0];
                counts.extend(dist);
                out.push(skel.with_counts(&counts, &mut 0));
            }
        }
    }
    out
}

fn eval_edge(t: &RibbonTree, args: &[u16], n: usize, mf: &MFData) -> BElement {
    let (mut v, bival) = match t {
        RibbonTree::Leaf { bivalent } => (retract_i(&ExtElement::basis(Side::V, n, args[0])), *bivalent),
        RibbonTree::Node { bivalent, .. } => (edge_h(&eval_node(t, args, n, mf)), *bivalent),
    };
    for _ in 0..bival {
        v = edge_h(&bivalent(&v, mf));
    }
    v
}

fn eval_node(t: &RibbonTree, args: &[u16], n: usize, mf: &MFData) -> BElement {
    match t {
        RibbonTree::Leaf { .. } => unreachable!("leaves have no node value"),
        RibbonTree::Node { left, right, .. } => {
            let s = left.leaves();
            let l = eval_edge(left, &args[..s], n, mf);
            let r = eval_edge(right, &args[s..], n, mf);
            trivalent(&l, &r)
        }
    }
}

/// Contribution of one tree to `μ^d(args)`, `args[0] = a_d`.
pub fn tree_evaluate(t: &RibbonTree, args: &[u16], mf: &MFData) -> Result<ExtElement, TransferError> {
    if t.leaves() != args.len() {
        return Err(TransferError::MalformedTree { leaves: t.leaves(), args: args.len() });
    }
    let n = mf.n();
    Ok(match t {
        RibbonTree::Leaf { .. } => ExtElement::zero(Side::V, n),
        // p kills anything coming out of a bivalent vertex on the root edge
        RibbonTree::Node { bivalent, .. } if *bivalent > 0 => ExtElement::zero(Side::V, n),
        RibbonTree::Node { .. } => retract_p(&eval_node(t, args, n, mf)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..8).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn skeleton_counts() {
        assert_eq!(enumerate_skeletons(2).len(), 1);
        assert_eq!(enumerate_skeletons(3).len(), 2);
        assert_eq!(enumerate_skeletons(7).len(), 132);
        let three: Vec<String> = enumerate_skeletons(3).iter().map(|t| t.render()).collect();
        assert_eq!(three, vec!["(x (x x))", "((x x) x)"]);
    }

    #[test]
    fn bivalent_placement() {
        assert_eq!(enumerate_trees(2, &[0], 3).len(), 1);
        // two leaf edges, root edge kept empty
        let trees = enumerate_trees(2, &[1], 3);
        assert_eq!(trees.len(), 2);
        assert!(trees.iter().all(|t| t.bivalent_total() == 1));
        // d = 3 has four non-root edges
        assert_eq!(enumerate_trees(3, &[1], 3).len(), 2 * 4);
    }

    #[test]
    fn single_product_tree() {
        let mf = MFData::for_genus(3);
        let t = &enumerate_trees(2, &[0], 0)[0];
        for (a2, a1) in [(1u16, 2u16), (3, 4), (1, 1), (0, 5)] {
            let want = ExtElement::basis(Side::V, 3, a2).wedge(&ExtElement::basis(Side::V, 3, a1)).unwrap();
            let want = if a1.count_ones() % 2 == 1 { want.scale(&exact_algebra::qi(-1)) } else { want };
            assert_eq!(tree_evaluate(t, &[a2, a1], &mf).unwrap(), want);
        }
    }

    #[test]
    fn leaf_count_mismatch() {
        let mf = MFData::for_genus(3);
        let t = &enumerate_skeletons(3)[0];
        assert_eq!(tree_evaluate(t, &[1, 2], &mf), Err(TransferError::MalformedTree { leaves: 3, args: 2 }));
    }
}
