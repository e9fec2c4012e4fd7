//! Brute-force walk counting by dynamic programming over (x-position, height).
//!
//! This is the ground truth the symbolic machinery is checked against: plain
//! integer counts, no polynomials anywhere. A walk's t-exponent is its total
//! x-length, so one DP sweep produces a whole series prefix.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::report::CheckResult;
use crate::series::SeriesVec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("height {h} lies outside the strip 0..={w}")]
    HeightOutOfStrip { h: usize, w: usize },
}

/// A finite step set; each step `(dx, dy)` advances `dx ≥ 1` columns and
/// carries weight `t^dx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkModel {
    steps: Vec<(u32, i32)>,
}

impl WalkModel {
    /// Panics if the step list is empty, has a duplicate, or has a step
    /// with `dx = 0`.
    pub fn new(steps: Vec<(u32, i32)>) -> Self {
        assert!(!steps.is_empty(), "step set must be nonempty");
        for (idx, s) in steps.iter().enumerate() {
            assert!(s.0 >= 1, "step {s:?} must advance at least one column");
            assert!(
                !steps[..idx].contains(s),
                "duplicate step {s:?} in step set"
            );
        }
        WalkModel { steps }
    }

    /// Steps (1,1), (1,−1).
    pub fn soccer() -> Self {
        WalkModel::new(vec![(1, 1), (1, -1)])
    }

    /// Steps (1,1), (1,−1), (2,2), (2,−2).
    pub fn basketball() -> Self {
        WalkModel::new(vec![(1, 1), (1, -1), (2, 2), (2, -2)])
    }

    /// Steps (1,1), (1,−1), (p,2), (p,−2) for `p ≥ 1`.
    pub fn general(p: u32) -> Self {
        assert!(p >= 1, "step span must be positive");
        if p == 2 {
            return WalkModel::basketball();
        }
        WalkModel::new(vec![(1, 1), (1, -1), (p, 2), (p, -2)])
    }

    pub fn steps(&self) -> &[(u32, i32)] {
        &self.steps
    }

    /// True when every closed walk has even x-length, so counts grade by
    /// z = t². Holds iff each step changes column and height parity together.
    pub fn is_z_graded(&self) -> bool {
        self.steps
            .iter()
            .all(|&(dx, dy)| (dx as i64 - dy as i64) % 2 == 0)
    }

    /// A width at which the coefficient of t^(2n) has provably stabilized:
    /// a closed excursion of x-length 2n climbs for at most n columns, at a
    /// slope bounded by the steepest step.
    pub fn stabilization_width(&self, n: usize) -> usize {
        self.steps
            .iter()
            .map(|&(dx, dy)| {
                let rise = dy.unsigned_abs() as usize;
                (n * rise).div_ceil(dx as usize)
            })
            .max()
            .expect("nonempty step set")
    }
}

/// Counts of walks from height `i` to height `j` inside `0 ≤ y ≤ w`,
/// indexed by x-length up to `max_xlen`. Entry 0 is 1 exactly when `i = j`.
pub fn count_walks(
    model: &WalkModel,
    w: usize,
    i: usize,
    j: usize,
    max_xlen: usize,
) -> Result<SeriesVec, OracleError> {
    check_heights(w, i, j)?;
    let table = forward_table(model, w, i, max_xlen, None);
    let coeffs = (0..=max_xlen).map(|x| table[x][j].clone()).collect();
    Ok(SeriesVec::new_t(coeffs))
}

/// Counts of irreducible walks: the baseline height `m = min(i, j)` may be
/// visited only at the endpoint that sits on it. The empty walk is never
/// irreducible.
pub fn count_irreducible(
    model: &WalkModel,
    w: usize,
    i: usize,
    j: usize,
    max_xlen: usize,
) -> Result<SeriesVec, OracleError> {
    check_heights(w, i, j)?;
    let m = min(i, j);
    // walks that never revisit m after the start
    let table = forward_table(model, w, i, max_xlen, Some(m));
    let mut coeffs = vec![BigInt::zero(); max_xlen + 1];
    if j != m {
        for x in 1..=max_xlen {
            coeffs[x] = table[x][j].clone();
        }
    } else {
        // the final step is the one allowed landing on m
        for x in 1..=max_xlen {
            let mut total = BigInt::zero();
            for &(dx, dy) in model.steps() {
                let dx = dx as usize;
                if dx > x {
                    continue;
                }
                let from = m as i64 - dy as i64;
                if from < 0 || from > w as i64 || from == m as i64 {
                    continue;
                }
                total += &table[x - dx][from as usize];
            }
            coeffs[x] = total;
        }
    }
    Ok(SeriesVec::new_t(coeffs))
}

fn min(a: usize, b: usize) -> usize {
    std::cmp::min(a, b)
}

fn check_heights(w: usize, i: usize, j: usize) -> Result<(), OracleError> {
    for h in [i, j] {
        if h > w {
            return Err(OracleError::HeightOutOfStrip { h, w });
        }
    }
    Ok(())
}

/// table[x][h] = number of walks from (0, start) to (x, h) staying in the
/// strip; with `forbidden = Some(m)`, heights equal to m are unreachable for
/// x > 0 (the start itself is exempt).
fn forward_table(
    model: &WalkModel,
    w: usize,
    start: usize,
    max_xlen: usize,
    forbidden: Option<usize>,
) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); w + 1]; max_xlen + 1];
    table[0][start] += 1u32;
    for x in 0..=max_xlen {
        for h in 0..=w {
            if table[x][h].is_zero() {
                continue;
            }
            for &(dx, dy) in model.steps() {
                let nx = x + dx as usize;
                let nh = h as i64 + dy as i64;
                if nx > max_xlen || nh < 0 || nh > w as i64 {
                    continue;
                }
                let nh = nh as usize;
                if forbidden == Some(nh) {
                    continue;
                }
                let bump = table[x][h].clone();
                table[nx][nh] += bump;
            }
        }
    }
    table
}

/// Series for [ij] walks, treating heights above the strip as "no walks"
/// instead of an error; the width-0 inner walks of the decomposition
/// identities need that convention.
fn series_or_zero(
    model: &WalkModel,
    w: usize,
    i: usize,
    j: usize,
    max_xlen: usize,
    irreducible: bool,
) -> SeriesVec {
    if i > w || j > w {
        return SeriesVec::new_t(vec![BigInt::zero(); max_xlen + 1]);
    }
    let out = if irreducible {
        count_irreducible(model, w, i, j, max_xlen)
    } else {
        count_walks(model, w, i, j, max_xlen)
    };
    out.expect("heights already checked")
}

/// Check the seven first-step/first-return decomposition identities for the
/// basketball step set on oracle series, for widths 1..=w_max, coefficients
/// through z-degree n_max. Failures are reported, never thrown.
pub fn verify_decompositions(w_max: usize, n_max: usize) -> Vec<CheckResult> {
    let model = WalkModel::basketball();
    let tmax = 2 * n_max;
    let mut checks = Vec::new();
    for w in 1..=w_max {
        let f00 = series_or_zero(&model, w, 0, 0, tmax, false);
        let f01 = series_or_zero(&model, w, 0, 1, tmax, false);
        let f10 = series_or_zero(&model, w, 1, 0, tmax, false);
        let f11 = series_or_zero(&model, w, 1, 1, tmax, false);
        let g00 = series_or_zero(&model, w, 0, 0, tmax, true);
        let g01 = series_or_zero(&model, w, 0, 1, tmax, true);
        let g10 = series_or_zero(&model, w, 1, 0, tmax, true);
        let pw = w - 1;
        let pf00 = series_or_zero(&model, pw, 0, 0, tmax, false);
        let pf01 = series_or_zero(&model, pw, 0, 1, tmax, false);
        let pf10 = series_or_zero(&model, pw, 1, 0, tmax, false);
        let pf11 = series_or_zero(&model, pw, 1, 1, tmax, false);

        let one = SeriesVec::one_t(tmax);
        let identities: [(&str, SeriesVec, &SeriesVec); 7] = [
            ("walk00_split", &one + &(&f00 * &g00), &f00),
            ("walk10_split", &g10 * &f00, &f10),
            ("walk01_split", &g01 * &f00, &f01),
            ("walk11_split", &pf00 + &(&g10 * &f01), &f11),
            (
                "irr00_expansion",
                &(&pf00.shifted(2) + &pf01.shifted(3)) + &(&pf10.shifted(3) + &pf11.shifted(4)),
                &g00,
            ),
            ("irr01_expansion", &pf00.shifted(1) + &pf10.shifted(2), &g01),
            ("irr10_expansion", &pf00.shifted(1) + &pf01.shifted(2), &g10),
        ];
        for (kind, lhs, rhs) in identities {
            if &lhs == rhs {
                checks.push(CheckResult::holds(kind, w));
            } else {
                checks.push(CheckResult::fails(kind, w, None));
            }
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(series: &SeriesVec) -> Vec<i64> {
        series
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("fits"))
            .collect()
    }

    #[test]
    fn width_two_counts() {
        // n = 2 hand check: UDUD, UUDD, UU(2,-2), (2,2)DD, (2,2)(2,-2)
        let s = count_walks(&WalkModel::basketball(), 2, 0, 0, 10).unwrap();
        assert_eq!(nums(&s), vec![1, 0, 1, 0, 5, 0, 13, 0, 41, 0, 121]);
    }

    #[test]
    fn width_one_is_all_ones() {
        let s = count_walks(&WalkModel::basketball(), 1, 0, 0, 12).unwrap();
        for (x, c) in s.coeffs().iter().enumerate() {
            let expect = u32::from(x % 2 == 0);
            assert_eq!(c, &BigInt::from(expect), "x-length {x}");
        }
    }

    #[test]
    fn width_zero_is_the_empty_walk() {
        let s = count_walks(&WalkModel::basketball(), 0, 0, 0, 6).unwrap();
        assert_eq!(nums(&s), vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn heights_outside_strip_error() {
        assert_eq!(
            count_walks(&WalkModel::basketball(), 2, 3, 0, 4),
            Err(OracleError::HeightOutOfStrip { h: 3, w: 2 })
        );
        assert_eq!(
            count_irreducible(&WalkModel::soccer(), 1, 0, 2, 4),
            Err(OracleError::HeightOutOfStrip { h: 2, w: 1 })
        );
    }

    #[test]
    fn irreducible_floor_walks() {
        // x-length 2: only UD; x-length 4 at width >= 2: UUDD, UU(2,-2), (2,2)DD, (2,2)(2,-2)
        let w1 = count_irreducible(&WalkModel::basketball(), 1, 0, 0, 6).unwrap();
        assert_eq!(nums(&w1), vec![0, 0, 1, 0, 0, 0, 0]);
        let w2 = count_irreducible(&WalkModel::basketball(), 2, 0, 0, 6).unwrap();
        assert_eq!(nums(&w2), vec![0, 0, 1, 0, 4, 0, 4]);
        let w3 = count_irreducible(&WalkModel::basketball(), 3, 0, 0, 6).unwrap();
        assert_eq!(nums(&w3), vec![0, 0, 1, 0, 4, 0, 13]);
    }

    #[test]
    fn irreducible_crossing_walks() {
        // single ascending step is irreducible; empty walk never is
        let g01 = count_irreducible(&WalkModel::basketball(), 2, 0, 1, 5).unwrap();
        assert_eq!(g01.coeffs()[0], BigInt::zero());
        assert_eq!(g01.coeffs()[1], BigInt::from(1));
        let g10 = count_irreducible(&WalkModel::basketball(), 2, 1, 0, 5).unwrap();
        assert_eq!(g10.coeffs()[1], BigInt::from(1));
    }

    #[test]
    fn time_reversal_symmetry() {
        let model = WalkModel::basketball();
        for w in 1..=4 {
            let up = count_walks(&model, w, 0, 1, 13).unwrap();
            let down = count_walks(&model, w, 1, 0, 13).unwrap();
            assert_eq!(up, down, "width {w}");
        }
    }

    #[test]
    fn monotone_in_width() {
        let model = WalkModel::basketball();
        for w in 0..6 {
            let narrow = count_walks(&model, w, 0, 0, 16).unwrap();
            let wide = count_walks(&model, w + 1, 0, 0, 16).unwrap();
            for (x, (a, b)) in narrow.coeffs().iter().zip(wide.coeffs()).enumerate() {
                assert!(a <= b, "width {w}, x-length {x}");
            }
        }
    }

    #[test]
    fn decompositions_hold() {
        let checks = verify_decompositions(4, 8);
        assert_eq!(checks.len(), 4 * 7);
        assert!(checks.iter().all(|c| c.ok), "{checks:?}");
    }

    #[test]
    fn model_properties() {
        assert!(WalkModel::basketball().is_z_graded());
        assert!(WalkModel::soccer().is_z_graded());
        assert!(!WalkModel::general(1).is_z_graded());
        assert!(!WalkModel::general(3).is_z_graded());
        assert_eq!(WalkModel::basketball().stabilization_width(5), 5);
        assert_eq!(WalkModel::general(1).stabilization_width(5), 10);
        assert_eq!(WalkModel::general(3).stabilization_width(6), 6);
        assert_eq!(WalkModel::general(2), WalkModel::basketball());
    }

    #[test]
    #[should_panic(expected = "duplicate step")]
    fn duplicate_steps_rejected() {
        WalkModel::new(vec![(1, 1), (1, 1)]);
    }
}
