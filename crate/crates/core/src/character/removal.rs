use serde::Serialize;

use crate::hook::rim_hooks;
use crate::partition::{Node, Partition};

/// One way of removing rim hooks of prescribed lengths in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RemovalSequence {
    /// Node of the hook removed at each stage, in the diagram of that stage.
    pub nodes: Vec<Node>,
    /// Diagram left after the last stage.
    pub result: Partition,
    /// Product of `(-1)^leg` over all stages.
    pub sign: i8,
}

/// Every legal sequence of staged rim-hook removals with lengths
/// `lengths[0]`, then `lengths[1]`, and so on. Sequences are ordered
/// lexicographically by their node lists.
pub fn removal_sequences(alpha: &Partition, lengths: &[usize]) -> Vec<RemovalSequence> {
    let mut out = Vec::new();
    if lengths.iter().sum::<usize>() > alpha.size() {
        return out;
    }
    let mut nodes = Vec::with_capacity(lengths.len());
    extend(alpha, lengths, &mut nodes, 1, &mut out);
    out
}

fn extend(
    shape: &Partition,
    lengths: &[usize],
    nodes: &mut Vec<Node>,
    sign: i8,
    out: &mut Vec<RemovalSequence>,
) {
    let Some((&k, tail)) = lengths.split_first() else {
        out.push(RemovalSequence {
            nodes: nodes.clone(),
            result: shape.clone(),
            sign,
        });
        return;
    };
    for hook in rim_hooks(shape, k) {
        nodes.push(hook.node);
        extend(&hook.residual, tail, nodes, sign * hook.sign(), out);
        nodes.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::CharacterEngine;
    use crate::partition::{parse_partition, partitions_of};
    use num_bigint::BigInt;

    fn p(text: &str) -> Partition {
        parse_partition(text).unwrap()
    }

    #[test]
    fn single_first_column_hook() {
        let seqs = removal_sequences(&p("4,4,2,2"), &[7]);
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].nodes, vec![Node::new(1, 1)]);
        assert_eq!(seqs[0].result, p("3,1,1"));
    }

    #[test]
    fn no_two_hook_in_staircase() {
        assert!(removal_sequences(&p("2,1"), &[2]).is_empty());
    }

    #[test]
    fn two_dominoes_from_square() {
        let seqs = removal_sequences(&p("2,2"), &[2, 2]);
        assert_eq!(seqs.len(), 2);
        assert!(seqs.iter().all(|s| s.result.is_empty()));
        assert_eq!(seqs[0].nodes, vec![Node::new(1, 2), Node::new(1, 1)]);
        assert_eq!(seqs[1].nodes, vec![Node::new(2, 1), Node::new(1, 1)]);
        // vertical then vertical, horizontal then horizontal: χ^(2,2)(2,2) = 2
        assert_eq!(seqs.iter().map(|s| s.sign).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn empty_prefix_is_identity() {
        let seqs = removal_sequences(&p("3,1"), &[]);
        assert_eq!(seqs.len(), 1);
        assert_eq!(seqs[0].result, p("3,1"));
        assert_eq!(seqs[0].sign, 1);
    }

    #[test]
    fn staged_expansion_reproduces_value() {
        let engine = CharacterEngine::new();
        for n in 1..=8 {
            for alpha in partitions_of(n) {
                for beta in partitions_of(n) {
                    let whole = engine.value(&alpha, &beta).unwrap();
                    for s in 1..=beta.len() {
                        let (head, tail) = beta.parts().split_at(s);
                        let expanded: BigInt = removal_sequences(&alpha, head)
                            .iter()
                            .map(|seq| {
                                assert_eq!(seq.result.size(), n - head.iter().sum::<usize>());
                                BigInt::from(seq.sign) * engine.eval(&seq.result, tail)
                            })
                            .sum();
                        assert_eq!(expanded, whole, "{alpha} at {beta}, split {s}");
                    }
                }
            }
        }
    }
}
