//! Grouping of zeros into brackets: two zeros share a bracket when
//! `|γ₁ − γ₂| < exp(−A0·γ₁/ln γ₁) + exp(−A0·γ₂/ln γ₂)`, closed transitively.

use serde::{Deserialize, Serialize};

use super::ZetaZero;

pub const DEFAULT_A0: f64 = 1.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    /// 1-based zero indices, ascending.
    pub members: Vec<usize>,
    pub a0: f64,
}

fn threshold(gamma: f64, a0: f64) -> f64 {
    (-a0 * gamma / gamma.ln()).exp()
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Partition of `zeros` (sorted by ordinate) into brackets, in ascending
/// order of their lowest member.
pub fn bracket_zeros(zeros: &[ZetaZero], a0: f64) -> Vec<Bracket> {
    let n = zeros.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        let ti = threshold(zeros[i].gamma, a0);
        for j in i + 1..n {
            let gap = zeros[j].gamma - zeros[i].gamma;
            // Each threshold is below 2, so no pair further apart can link.
            if gap >= 2.0 {
                break;
            }
            if gap < ti + threshold(zeros[j].gamma, a0) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut out: Vec<Bracket> = Vec::new();
    let mut root_slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_slot[r] == usize::MAX {
            root_slot[r] = out.len();
            out.push(Bracket { members: Vec::new(), a0 });
        }
        out[root_slot[r]].members.push(zeros[i].index);
    }
    out
}
