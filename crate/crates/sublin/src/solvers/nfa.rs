//! Search for accepted strings of a fixed length.

use crate::instances::NfaSpec;

/// Whether some prefix of `word` (including the empty prefix) can drive the
/// automaton from its initial state into a final state. Length is taken from
/// `word`, not from the instance.
pub fn nfa_accepts(nfa: &NfaSpec, word: &[u32]) -> bool {
    let mut states = vec![nfa.initial];
    if states.iter().any(|q| nfa.finals.contains(q)) {
        return true;
    }
    for &symbol in word {
        let mut next: Vec<u32> = states
            .iter()
            .flat_map(|&q| nfa.successors(q, symbol))
            .collect();
        next.sort_unstable();
        next.dedup();
        if next.iter().any(|q| nfa.finals.contains(q)) {
            return true;
        }
        states = next;
    }
    false
}

/// Finds a string of length `input_len` the automaton accepts, or `None`.
///
/// The search walks layers 0 through `input_len`, keeping for every state the
/// lexicographically smallest prefix that reaches it in exactly that many
/// steps. The returned string extends the smallest prefix reaching a final
/// state at the earliest layer, padded to full length with symbol 0; padding
/// is immaterial because acceptance already happened on the prefix.
pub fn search_1nfa(nfa: &NfaSpec) -> Option<Vec<u32>> {
    let pad = |prefix: &[u32]| {
        let mut word = prefix.to_vec();
        word.resize(nfa.input_len as usize, 0);
        word
    };

    let mut layer: Vec<Option<Vec<u32>>> = vec![None; nfa.num_states as usize];
    layer[(nfa.initial - 1) as usize] = Some(Vec::new());
    for _ in 0..=nfa.input_len {
        let accepted = nfa
            .finals
            .iter()
            .filter_map(|&q| layer[(q - 1) as usize].as_ref())
            .min();
        if let Some(prefix) = accepted {
            return Some(pad(prefix));
        }

        let mut next: Vec<Option<Vec<u32>>> = vec![None; nfa.num_states as usize];
        for (state0, prefix) in layer.iter().enumerate() {
            let Some(prefix) = prefix else { continue };
            for symbol in 0..nfa.num_symbols {
                for successor in nfa.successors(state0 as u32 + 1, symbol) {
                    let slot = &mut next[(successor - 1) as usize];
                    let mut candidate = prefix.clone();
                    candidate.push(symbol);
                    if slot.as_ref().is_none_or(|best| candidate < *best) {
                        *slot = Some(candidate);
                    }
                }
            }
        }
        layer = next;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nfa(text: &str) -> NfaSpec {
        NfaSpec::parse(text).unwrap()
    }

    #[test]
    fn initial_final_state_accepts_at_step_zero() {
        let m = nfa("p nfa 2 2 3 1\nf 1\n");
        assert_eq!(search_1nfa(&m), Some(vec![0, 0, 0]));
        assert!(nfa_accepts(&m, &[1, 1, 1]));
    }

    #[test]
    fn unreachable_final_state_yields_none() {
        let m = nfa("p nfa 3 1 5 1\nf 3\nt 1 0 2\nt 2 0 1\n");
        assert_eq!(search_1nfa(&m), None);
    }

    #[test]
    fn too_short_input_yields_none() {
        let m = nfa("p nfa 3 1 1 1\nf 3\nt 1 0 2\nt 2 0 3\n");
        assert_eq!(search_1nfa(&m), None);
        let longer = nfa("p nfa 3 1 2 1\nf 3\nt 1 0 2\nt 2 0 3\n");
        assert_eq!(search_1nfa(&longer), Some(vec![0, 0]));
    }

    #[test]
    fn smallest_prefix_at_the_earliest_layer_wins() {
        let m = nfa("p nfa 3 2 4 1\nf 3\nt 1 1 3\nt 1 0 2\nt 2 0 3\n");
        // Layer 1 already accepts via symbol 1; the layer-2 prefix 0 0 never
        // gets a chance.
        assert_eq!(search_1nfa(&m), Some(vec![1, 0, 0, 0]));
    }

    #[test]
    fn found_words_are_accepted_and_misses_are_real() {
        for states in 1..=3u32 {
            for mask in 0..1u32 << (states * states) {
                let mut text = format!("p nfa {states} 2 2 1\nf {states}\n");
                for q in 0..states {
                    for r in 0..states {
                        if mask >> (q * states + r) & 1 == 1 {
                            text.push_str(&format!("t {} {} {}\n", q + 1, q.min(1), r + 1));
                        }
                    }
                }
                let m = nfa(&text);
                match search_1nfa(&m) {
                    Some(word) => {
                        assert_eq!(word.len(), 2);
                        assert!(nfa_accepts(&m, &word), "{text}");
                    }
                    None => {
                        for w0 in 0..2 {
                            for w1 in 0..2 {
                                assert!(!nfa_accepts(&m, &[w0, w1]), "{text}");
                            }
                        }
                    }
                }
            }
        }
    }
}
