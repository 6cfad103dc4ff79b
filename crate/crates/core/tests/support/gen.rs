//! Random small criterion inputs.

use khperiod::{BiLaurent, CriterionInput};
use rand::Rng;

/// A random knot-like input with coefficient mass at most `max_mass`,
/// period `p` in `{5, 7}` and `n = 1`.
pub fn random_input<R: Rng>(rng: &mut R, max_mass: i64) -> CriterionInput {
    let p: u64 = if rng.gen_bool(0.5) { 5 } else { 7 };
    let s = 2 * rng.gen_range(-1..=1);
    let mut khp = BiLaurent::lee_pair(s);
    let mut mass = 2;
    for _ in 0..rng.gen_range(0..=4) {
        let t = rng.gen_range(-2..=2);
        let q = 2 * rng.gen_range(-4..=3) + 1;
        let mono = BiLaurent::monomial(t, q, 1);
        match rng.gen_range(0..10) {
            0..=3 => {
                let j = if rng.gen_bool(0.8) { 1 } else { 2 };
                if mass + 2 <= max_mass {
                    khp += &(&BiLaurent::block(2, j) * &mono);
                    mass += 2;
                }
            }
            4..=7 => {
                let w = 2 * (p as i64 - 1);
                if mass + w <= max_mass {
                    khp += &(&BiLaurent::block(2, 1) * &mono).scale_i64(p as i64 - 1);
                    mass += w;
                }
            }
            _ => {
                if mass < max_mass {
                    khp += &mono;
                    mass += 1;
                }
            }
        }
    }
    let s_used = if rng.gen_bool(0.1) { s + 2 } else { s };
    CriterionInput::knot(khp, s_used, 0, p, 1)
}
