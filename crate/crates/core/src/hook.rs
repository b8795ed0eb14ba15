//! Hook lengths, rims and rim-hook removal on Young diagrams.

use crate::error::{Error, Result};
use crate::partition::{Node, Partition};

/// Hook lengths of every node of a Young diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookGrid {
    rows: Vec<Vec<usize>>,
}

impl HookGrid {
    pub fn new(alpha: &Partition) -> Self {
        let conj = alpha.conjugate();
        let rows = alpha
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| {
                (1..=len)
                    .map(|j| (len - j) + (conj.part(j) - (i + 1)) + 1)
                    .collect()
            })
            .collect();
        HookGrid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Hook length at a 1-based node, if the node is in the diagram.
    pub fn get(&self, node: Node) -> Option<usize> {
        self.rows
            .get(node.row.checked_sub(1)?)?
            .get(node.col.checked_sub(1)?)
            .copied()
    }

    /// All hook lengths as a sorted multiset.
    pub fn multiset(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }

    pub fn nodes(&self) -> impl Iterator<Item = (Node, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &h)| (Node::new(i + 1, j + 1), h))
        })
    }
}

/// The result of removing one rim hook.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHook {
    /// Node whose hook was removed.
    pub node: Node,
    /// Leg length of that hook.
    pub leg: usize,
    /// What is left of the diagram.
    pub residual: Partition,
}

impl RimHook {
    pub fn sign(&self) -> i8 {
        if self.leg.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Nodes whose hook length equals `k`, in row-major order.
pub fn hooks_of_length(alpha: &Partition, k: usize) -> Vec<Node> {
    HookGrid::new(alpha)
        .nodes()
        .filter(|&(_, h)| h == k)
        .map(|(node, _)| node)
        .collect()
}

/// Hook length of the `(1,1)` node, the largest hook in the diagram.
pub fn max_hook(alpha: &Partition) -> usize {
    if alpha.is_empty() {
        0
    } else {
        alpha.largest_part() + alpha.len() - 1
    }
}

/// Removes the rim attached to `node`; returns the remaining partition and
/// the leg length of the hook at `node`.
pub fn remove_rim_hook(alpha: &Partition, node: Node) -> Result<(Partition, usize)> {
    if !alpha.contains_node(node) {
        return Err(Error::domain(format!(
            "node {node} is not in the diagram of {alpha}"
        )));
    }
    let conj_col = alpha.parts().iter().take_while(|&&p| p >= node.col).count();
    let leg = conj_col - node.row;
    let mut parts = alpha.parts().to_vec();
    let first = node.row - 1;
    let last = first + leg;
    // rows above the foot of the hook slide up one row, shortened by one
    for (slot, &below) in parts[first..last]
        .iter_mut()
        .zip(&alpha.parts()[first + 1..])
    {
        *slot = below - 1;
    }
    parts[last] = node.col - 1;
    Ok((Partition::from_padded(parts), leg))
}

/// All rim hooks of length `k`, found through the first-column hook lengths
/// of the diagram, in increasing row order.
pub fn rim_hooks(alpha: &Partition, k: usize) -> Vec<RimHook> {
    if k == 0 || k > max_hook(alpha) {
        return Vec::new();
    }
    let len = alpha.len();
    // beta numbers: strictly decreasing, beta[i] = alpha_{i+1} + len - (i + 1)
    let beta: Vec<usize> = alpha
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let occupied = |x: usize| beta.binary_search_by(|b| x.cmp(b)).is_ok();

    let mut out = Vec::new();
    for (i, &x) in beta.iter().enumerate() {
        if x < k || occupied(x - k) {
            continue;
        }
        let target = x - k;
        // beads strictly between target and x
        let leg = beta[i + 1..].iter().take_while(|&&b| b > target).count();
        let beads_below_target = len - (i + 1 + leg);
        let col = target - beads_below_target + 1;
        let mut moved = beta.clone();
        moved.remove(i);
        moved.insert(i + leg, target);
        let parts = moved
            .iter()
            .enumerate()
            .map(|(idx, &b)| b + idx + 1 - len)
            .collect();
        out.push(RimHook {
            node: Node::new(i + 1, col),
            leg,
            residual: Partition::from_padded(parts),
        });
    }
    out
}

/// The h-weight: the number of hook lengths divisible by `h`.
pub fn h_weight(alpha: &Partition, h: usize) -> usize {
    assert!(h >= 1, "hook length must be positive");
    HookGrid::new(alpha)
        .nodes()
        .filter(|&(_, len)| len % h == 0)
        .count()
}
