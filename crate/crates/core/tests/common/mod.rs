#![allow(dead_code)]

pub mod quartic;

use apollonian::packing::Quadruple;
use rand::seq::SliceRandom;
use rand::Rng;

/// Root, published type, bound, sporadic count and largest sporadic
/// curvature.
pub type Row = ([i64; 4], &'static [i32], f64, u64, u64);

/// Rows of the published sporadic-set tables.
pub const PUBLISHED: [Row; 42] = [
    ([0, 0, 1, 1], &[6, 1, 1, 1], 1e10, 215, 1199820),
    ([-12, 16, 49, 49], &[6, 1, 1, 1], 1e11, 275276, 5542869468),
    ([-20, 36, 49, 49], &[6, 1, 1, 1], 1e12, 2014815, 55912619880),
    ([-8, 12, 25, 25], &[6, 1, 1, -1], 1e10, 47070, 517280220),
    ([-12, 25, 25, 28], &[6, 1, 1, -1], 1e11, 238268, 5919707820),
    ([-15, 24, 40, 49], &[6, 1, 1, -1], 2e11, 639149, 12692531688),
    ([-15, 28, 33, 40], &[6, 1, -1], 1e10, 80472, 820523160),
    ([-20, 33, 52, 57], &[6, 1, -1], 1e11, 240230, 4127189100),
    ([-23, 40, 57, 60], &[6, 1, -1], 1e11, 392800, 8689511520),
    ([-4, 5, 20, 21], &[6, 5, 1], 1e10, 3659, 32084460),
    ([-16, 29, 36, 45], &[6, 5, 1], 1e10, 80256, 927211800),
    ([-19, 36, 44, 45], &[6, 5, 1], 1e11, 177902, 3603790320),
    ([-3, 5, 8, 8], &[6, 5, -1], 1e10, 676, 3122880),
    ([-12, 21, 29, 32], &[6, 5, -1], 1e10, 30347, 312225420),
    ([-19, 32, 48, 53], &[6, 5, -1], 2.5e10, 168264, 2286209460),
    ([-3, 4, 12, 13], &[6, 13, 1], 1e10, 731, 7354464),
    ([-12, 21, 28, 37], &[6, 13, 1], 1e11, 234386, 3470731680),
    ([-11, 16, 36, 37], &[6, 13, 1], 1e10, 20748, 226988340),
    ([-8, 13, 21, 24], &[6, 13, -1], 1e10, 5273, 45348900),
    ([-11, 21, 24, 28], &[6, 13, -1], 1e10, 21003, 176441136),
    ([-20, 37, 45, 52], &[6, 13, -1], 1e11, 229356, 4079861484),
    ([-16, 32, 33, 41], &[6, 17, 1, 1], 1e10, 81777, 841440840),
    ([-7, 8, 56, 57], &[6, 17, 1, 1], 1e10, 55057, 595231740),
    (
        [-16, 20, 81, 81],
        &[6, 17, 1, 1],
        1e12,
        1075024,
        26983035480,
    ),
    ([-4, 8, 9, 9], &[6, 17, 1, -1], 1e10, 2057, 10742460),
    ([-7, 9, 32, 32], &[6, 17, 1, -1], 1e10, 34916, 367956840),
    ([-15, 32, 32, 33], &[6, 17, 1, -1], 1e11, 585942, 8505627180),
    ([-7, 12, 17, 20], &[6, 17, -1], 1e10, 3744, 17141220),
    ([-12, 17, 41, 44], &[6, 17, -1], 1e10, 31851, 270186456),
    ([-15, 24, 41, 44], &[6, 17, -1], 1e10, 80106, 803343900),
    ([-5, 7, 18, 18], &[8, 7, 1], 1e10, 16417, 86709570),
    ([-6, 10, 15, 19], &[8, 7, 1], 1e10, 24305, 133977255),
    ([-9, 18, 19, 22], &[8, 7, 1], 1e10, 14866, 82815750),
    ([-2, 3, 6, 7], &[8, 7, -1], 1e10, 236, 429039),
    ([-5, 6, 30, 31], &[8, 7, -1], 1e10, 19695, 97583070),
    ([-14, 27, 31, 34], &[8, 7, -1], 2e10, 99294, 1643827935),
    ([-1, 2, 2, 3], &[8, 11, 1], 1e10, 61, 97287),
    ([-9, 14, 26, 27], &[8, 11, 1], 1e10, 17949, 85926675),
    ([-10, 18, 23, 27], &[8, 11, 1], 1e10, 25944, 124625694),
    ([-6, 11, 14, 15], &[8, 11, -1], 1e10, 3381, 20149335),
    ([-10, 14, 35, 39], &[8, 11, -1], 4e10, 256228, 2934238515),
    ([-13, 23, 30, 38], &[8, 11, -1], 1e10, 71341, 598107510),
];

/// The first published packing of each of the 14 extended types.
pub fn one_per_type() -> Vec<Quadruple> {
    PUBLISHED
        .iter()
        .step_by(3)
        .map(|(e, ..)| Quadruple::new(*e).unwrap())
        .collect()
}

/// One random move that keeps every curvature at most `cap`, falling back
/// to the move that lowers the largest entry.
pub fn bounded_step(q: &Quadruple, rng: &mut impl Rng, cap: i64) -> Quadruple {
    let mut order = [0usize, 1, 2, 3];
    order.shuffle(rng);
    for i in order {
        if let Ok(v) = q.move_value(i) {
            if v <= cap {
                return q.apply_move(i).unwrap();
            }
        }
    }
    let e = q.entries();
    let big = (0..4).max_by_key(|&i| e[i]).unwrap();
    q.apply_move(big).unwrap()
}

/// `q` rearranged so entry `j` comes first and the second entry is a
/// tangent circle of curvature coprime to it, or `None` if `q[j] ≤ 0`.
pub fn local_view(q: &Quadruple, j: usize) -> Option<Quadruple> {
    let n = q.get(j);
    if n <= 0 {
        return None;
    }
    let rotated = q.swap(0, j);
    for k in 1..4 {
        let view = rotated.swap(1, k);
        if let Ok(nb) = view.coprime_neighbor(n as u64) {
            let [a, b, m, d] = nb.quadruple.entries();
            return Some(Quadruple::new([a, m, b, d]).unwrap());
        }
    }
    None
}
