//! Maximum-value index sequences by dynamic programming over suffixes.

use super::OptResult;
use crate::instances::HppInstance;

/// Computes the maximum sequence value exactly, returning the
/// lexicographically smallest optimal sequence.
pub fn solve_maxhpp(inst: &HppInstance) -> OptResult {
    let n = inst.dim as usize;
    let steps = (inst.length_d - 1) as usize;

    // best[k][v]: value of the best sequence of k further steps from index
    // v + 1.
    let mut best = vec![vec![0u64; n]; steps + 1];
    for k in 1..=steps {
        for v in 0..n {
            best[k][v] = (0..n)
                .map(|u| inst.matrix[v][u] as u64 + best[k - 1][u])
                .max()
                .expect("dim is at least 1");
        }
    }

    let mut sequence = vec![inst.start];
    let mut v = (inst.start - 1) as usize;
    for k in (1..=steps).rev() {
        let u = (0..n)
            .find(|&u| inst.matrix[v][u] as u64 + best[k - 1][u] == best[k][v])
            .expect("the maximum is attained");
        sequence.push(u as u32 + 1);
        v = u;
    }
    let value = best[steps][(inst.start - 1) as usize];
    debug_assert_eq!(inst.sequence_value(&sequence), Some(value));
    OptResult { value, sequence }
}

/// Walks every sequence in lexicographic order, keeping the first one that
/// attains the maximum value.
pub fn brute_maxhpp(inst: &HppInstance) -> OptResult {
    let n = inst.dim as u64;
    let steps = inst.length_d - 1;
    assert!(
        n.checked_pow(steps).is_some_and(|count| count <= 1 << 22),
        "brute force is limited to 2^22 sequences, got {n}^{steps}"
    );
    let mut best: Option<OptResult> = None;
    let mut odometer = vec![1u32; steps as usize];
    loop {
        let mut sequence = vec![inst.start];
        sequence.extend_from_slice(&odometer);
        let value = inst.sequence_value(&sequence).expect("odometer stays in range");
        if best.as_ref().is_none_or(|b| value > b.value) {
            best = Some(OptResult { value, sequence });
        }
        let Some(place) = odometer.iter().rposition(|&x| x < inst.dim) else { break };
        odometer[place] += 1;
        odometer[place + 1..].fill(1);
    }
    best.expect("the odometer yields at least one sequence")
}
