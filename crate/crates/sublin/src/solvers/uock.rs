//! Search for index-increasing cover sequences.

use super::PromiseError;
use crate::instances::UockInstance;

/// Finds the lexicographically smallest strictly increasing index sequence
/// whose pieces concatenate to the target, or `None` if no cover exists.
///
/// The unique-occurrence promise (and piece nonemptiness) is checked up
/// front; a broken promise is an error, not a `None`.
pub fn search_uock(inst: &UockInstance) -> Result<Option<Vec<u32>>, PromiseError> {
    if let Some(violation) = inst.validate().into_iter().next() {
        return Err(PromiseError(violation.0));
    }
    let target = inst.target.as_bytes();
    let pieces: Vec<&[u8]> = inst.pieces.iter().map(|p| p.as_bytes()).collect();
    let n = pieces.len();

    // coverable[pos][i]: target[pos..] splits into pieces with strictly
    // increasing indices, all of them >= i (0-based). Filled backwards over
    // positions; the greedy walk below then always extends a feasible state.
    let mut coverable = vec![vec![false; n + 1]; target.len() + 1];
    coverable[target.len()] = vec![true; n + 1];
    for pos in (0..target.len()).rev() {
        for i in (0..n).rev() {
            let fits = target[pos..].starts_with(pieces[i]) && coverable[pos + pieces[i].len()][i + 1];
            coverable[pos][i] = fits || coverable[pos][i + 1];
        }
    }

    if !coverable[0][0] {
        return Ok(None);
    }
    let mut sequence = Vec::new();
    let mut pos = 0;
    let mut i = 0;
    while pos < target.len() {
        while !(target[pos..].starts_with(pieces[i]) && coverable[pos + pieces[i].len()][i + 1]) {
            i += 1;
        }
        sequence.push(i as u32 + 1);
        pos += pieces[i].len();
        i += 1;
    }
    debug_assert!(inst.is_cover(&sequence));
    Ok(Some(sequence))
}

/// Tries every index subset and returns the lexicographically smallest cover
/// sequence, or `None`. Ignores the unique-occurrence promise.
pub fn brute_uock(inst: &UockInstance) -> Option<Vec<u32>> {
    let n = inst.pieces.len();
    assert!(n <= 20, "brute force is limited to 20 pieces, got {n}");
    let mut best: Option<Vec<u32>> = None;
    for mask in 0u32..1 << n {
        let sequence: Vec<u32> = (0..n as u32).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        if inst.is_cover(&sequence) && best.as_ref().is_none_or(|b| sequence < *b) {
            best = Some(sequence);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_random, GenSpec, InstanceData};

    fn inst(text: &str) -> UockInstance {
        UockInstance::parse(text).unwrap()
    }

    #[test]
    fn finds_the_smallest_cover() {
        let u = inst("01#10\n4\n01\n01#\n10\n10\n");
        // Index 1 cannot be completed (no piece spells "#10" after it), so the
        // smallest cover starts at index 2.
        assert_eq!(search_uock(&u).unwrap(), Some(vec![2, 3]));
        assert_eq!(brute_uock(&u), Some(vec![2, 3]));
    }

    #[test]
    fn decreasing_order_does_not_count_as_a_cover() {
        let u = inst("0110\n2\n10\n01\n");
        assert_eq!(search_uock(&u).unwrap(), None);
        assert_eq!(brute_uock(&u), None);
    }

    #[test]
    fn empty_target_is_covered_by_the_empty_sequence() {
        let u = inst("\n2\n0\n1\n");
        assert_eq!(search_uock(&u).unwrap(), Some(vec![]));
        assert_eq!(brute_uock(&u), Some(vec![]));
    }

    #[test]
    fn broken_promise_is_an_error_not_a_miss() {
        let u = UockInstance { target: "000".into(), pieces: vec!["00".into(), "0".into()] };
        assert!(search_uock(&u).is_err());
        assert_eq!(brute_uock(&u), Some(vec![1, 2]));
    }

    #[test]
    fn agrees_with_brute_force_on_generated_grids() {
        for seed in 0..40 {
            let spec = GenSpec::Uock {
                token_count: 1 + (seed % 6) as u32,
                piece_count: (seed % 9) as u32,
            };
            let u = gen_random(&spec, seed).unwrap();
            let InstanceData::Uock(u) = &u.data else { unreachable!() };
            assert_eq!(search_uock(u).unwrap(), brute_uock(u), "seed {seed}");
        }
    }
}
