//! The closed recurrences: the fifth-order nonlinear width relation, its
//! generalized-step variant, and the linear recurrences satisfied by the
//! numerator/denominator families of both the soccer and basketball
//! generating functions.

use std::ops::RangeInclusive;

use crate::poly::IntPoly;
use crate::rational::RationalGF;
use crate::report::CheckResult;
use crate::strip::{soccer_chain, soccer_continued_fraction, StripError, StripSystem};

/// Which walk family a polynomial sequence belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceOrigin {
    Soccer,
    Basketball,
}

/// A width-indexed family of denominator polynomials with unit constant term.
///
/// The numerator family rides along for free: at every width the numerator is
/// the previous denominator, so `gf(w)` needs nothing else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenomSequence {
    origin: SequenceOrigin,
    entries: Vec<IntPoly>,
}

impl DenomSequence {
    /// Panics unless every entry has constant coefficient 1.
    pub fn from_entries(origin: SequenceOrigin, entries: Vec<IntPoly>) -> Self {
        for (w, e) in entries.iter().enumerate() {
            assert!(
                e.constant_term() == 1.into(),
                "entry {w} must have constant term 1"
            );
        }
        DenomSequence { origin, entries }
    }

    pub fn origin(&self) -> SequenceOrigin {
        self.origin
    }

    pub fn entries(&self) -> &[IntPoly] {
        &self.entries
    }

    pub fn entry(&self, w: usize) -> &IntPoly {
        &self.entries[w]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The generating function at width `w`: previous entry over current
    /// entry, normalized (width 0 is 1).
    pub fn gf(&self, w: usize) -> RationalGF {
        if w == 0 {
            return RationalGF::one();
        }
        RationalGF::new(self.entries[w - 1].clone(), self.entries[w].clone())
            .expect("denominator entries have unit constant term")
    }
}

/// The five seed denominators of the basketball family, in z-coefficients.
const BASKETBALL_SEEDS: [&[i64]; 5] = [
    &[1],
    &[1, -1],
    &[1, -2, -3],
    &[1, -3, -5, -2, 1],
    &[1, -4, -6, 2],
];

/// Basketball denominators for widths 0..=w_max: the tabulated seeds, then
/// AZ_w = (1+z)·AZ_{w−1} − 2z·AZ_{w−2} − 2z²·AZ_{w−3} + (z³+z⁴)·AZ_{w−4} − z⁵·AZ_{w−5}.
pub fn basketball_denominators(w_max: usize) -> DenomSequence {
    let mut entries: Vec<IntPoly> = BASKETBALL_SEEDS
        .iter()
        .take(w_max + 1)
        .map(|c| IntPoly::from_z_coeffs(c))
        .collect();
    let weights: [IntPoly; 5] = [
        IntPoly::from_z_coeffs(&[1, 1]),
        IntPoly::from_z_coeffs(&[0, -2]),
        IntPoly::from_z_coeffs(&[0, 0, -2]),
        IntPoly::from_z_coeffs(&[0, 0, 0, 1, 1]),
        IntPoly::from_z_coeffs(&[0, 0, 0, 0, 0, -1]),
    ];
    for w in entries.len()..=w_max {
        let mut next = IntPoly::zero();
        for (back, weight) in weights.iter().enumerate() {
            next = &next + &(weight * &entries[w - 1 - back]);
        }
        entries.push(next);
    }
    DenomSequence::from_entries(SequenceOrigin::Basketball, entries)
}

/// The basketball generating function at width `w` straight from the linear
/// recurrences.
pub fn basketball_gf_linear(w: usize) -> RationalGF {
    basketball_denominators(w).gf(w)
}

/// Soccer denominators Q_0 = 1, Q_1 = 1−z, Q_w = Q_{w−1} − z·Q_{w−2}; the
/// initial values are the ones reproducing C_0 = 1 and C_1 = 1/(1−z).
pub fn soccer_linear(w_max: usize) -> DenomSequence {
    let mut entries = vec![IntPoly::one(), IntPoly::from_z_coeffs(&[1, -1])];
    entries.truncate(w_max + 1);
    let z = IntPoly::t_pow(2);
    for w in entries.len()..=w_max {
        let next = &entries[w - 1] - &(&z * &entries[w - 2]);
        entries.push(next);
    }
    DenomSequence::from_entries(SequenceOrigin::Soccer, entries)
}

/// The five weight polynomials of the generalized width relation for steps
/// (1,±1), (p,±2), as polynomials in t:
///
/// X_w = 1 − c₀·X_w + c₁·X_wX_{w−1} + c₂·X_wX_{w−1}X_{w−2}
///         − c₃·X_w⋯X_{w−3} + c₄·X_w⋯X_{w−4}
///
/// with c₀ = t^p, c₁ = t² + t^p, c₂ = t^{2+p} + t^{2p},
/// c₃ = t^{3p} + t^{4p}, c₄ = t^{5p}. At p = 2 these reduce termwise to
/// z, 2z, 2z², z³+z⁴, z⁵.
pub fn generalized_weights(p: u32) -> [IntPoly; 5] {
    assert!(p >= 1, "step span must be positive");
    let p = p as usize;
    let tp = |k: usize| IntPoly::t_pow(k);
    [
        tp(p),
        &tp(2) + &tp(p),
        &tp(2 + p) + &tp(2 * p),
        &tp(3 * p) + &tp(4 * p),
        tp(5 * p),
    ]
}

fn step_with_weights(
    prev: &[RationalGF; 4],
    weights: &[IntPoly; 5],
) -> Result<RationalGF, StripError> {
    // prev = [X_{w-4}, X_{w-3}, X_{w-2}, X_{w-1}]
    let [x4, x3, x2, x1] = prev;
    let prod1 = x1.clone();
    let prod2 = &prod1 * x2;
    let prod3 = &prod2 * x3;
    let prod4 = &prod3 * x4;
    let divisor = &(&(&RationalGF::from_poly(&IntPoly::one() + &weights[0])
        - &prod1.mul_poly(&weights[1]))
        - &prod2.mul_poly(&weights[2]))
        + &(&prod3.mul_poly(&weights[3]) - &prod4.mul_poly(&weights[4]));
    if divisor.is_zero() {
        return Err(StripError::SingularSystem);
    }
    Ok(divisor.inv()?)
}

/// Advance the basketball floor series by one width using the fifth-order
/// relation, solved linearly for the newest value. `prev` holds
/// [F_{w−4}, F_{w−3}, F_{w−2}, F_{w−1}].
pub fn nonlinear_step(prev: &[RationalGF; 4]) -> Result<RationalGF, StripError> {
    step_with_weights(prev, &generalized_weights(2))
}

/// Same relation for the steps (1,±1), (p,±2).
pub fn generalized_step(prev: &[RationalGF; 4], p: u32) -> Result<RationalGF, StripError> {
    step_with_weights(prev, &generalized_weights(p))
}

/// Which recurrence identity to verify; names match the CLI tokens.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecurrenceKind {
    Theorem1,
    Theorem2 { p: u32 },
    Soccer,
}

/// Substitute independently computed generating functions into the chosen
/// recurrence and report, per width, whether clearing denominators leaves
/// the zero polynomial. Failures are reported, not thrown.
pub fn verify_recurrence_identity(
    kind: RecurrenceKind,
    ws: RangeInclusive<usize>,
) -> Result<Vec<CheckResult>, StripError> {
    let w_hi = *ws.end();
    let mut checks = Vec::new();
    match kind {
        RecurrenceKind::Theorem1 | RecurrenceKind::Theorem2 { .. } => {
            let (name, p) = match kind {
                RecurrenceKind::Theorem1 => ("theorem1", 2),
                RecurrenceKind::Theorem2 { p } => ("theorem2", p),
                RecurrenceKind::Soccer => unreachable!(),
            };
            let weights = generalized_weights(p);
            let chain = StripSystem::new(p).chain(w_hi)?;
            for w in ws {
                if w < 4 {
                    checks.push(CheckResult::not_applicable(
                        name,
                        w,
                        "the relation references five consecutive widths",
                    ));
                    continue;
                }
                let x = |back: usize| chain[w - back].f();
                let prod1 = x(0) * x(1);
                let prod2 = &prod1 * x(2);
                let prod3 = &prod2 * x(3);
                let prod4 = &prod3 * x(4);
                let rhs = &(&(&RationalGF::one() - &x(0).mul_poly(&weights[0]))
                    + &(&prod1.mul_poly(&weights[1]) + &prod2.mul_poly(&weights[2])))
                    - &(&prod3.mul_poly(&weights[3]) - &prod4.mul_poly(&weights[4]));
                let residual = x(0) - &rhs;
                checks.push(residual_check(name, w, &residual));
            }
            if let RecurrenceKind::Theorem2 { p: 2 } = kind {
                for c in &mut checks {
                    let tag = "reduces to theorem1";
                    c.note = Some(match &c.note {
                        Some(n) => format!("{n}; {tag}"),
                        None => tag.to_owned(),
                    });
                }
            }
        }
        RecurrenceKind::Soccer => {
            let chain = soccer_chain(w_hi)?;
            let z = IntPoly::t_pow(2);
            for w in ws {
                if w < 1 {
                    checks.push(CheckResult::not_applicable(
                        "soccer",
                        w,
                        "the relation references the previous width",
                    ));
                    continue;
                }
                let divisor = &RationalGF::one() - &chain[w - 1].mul_poly(&z);
                let residual = &(&chain[w] * &divisor) - &RationalGF::one();
                checks.push(residual_check("soccer", w, &residual));
            }
        }
    }
    Ok(checks)
}

fn residual_check(kind: &str, w: usize, residual: &RationalGF) -> CheckResult {
    if residual.is_zero() {
        CheckResult::holds(kind, w)
    } else {
        CheckResult::fails(kind, w, residual.num().degree())
    }
}

/// Compare the linear-recurrence generating functions against the
/// functional-equation iteration, width by width.
pub fn verify_linear_agreement(w_max: usize) -> Result<Vec<CheckResult>, StripError> {
    verify_linear_agreement_with(&basketball_denominators(w_max), w_max)
}

/// Same check against a caller-supplied denominator family (the seam used
/// for fault injection in tests).
pub fn verify_linear_agreement_with(
    denoms: &DenomSequence,
    w_max: usize,
) -> Result<Vec<CheckResult>, StripError> {
    let chain = StripSystem::basketball().chain(w_max)?;
    let mut checks = Vec::new();
    for state in chain.iter().take(denoms.len()) {
        let w = state.width();
        let ok = &denoms.gf(w) == state.f();
        checks.push(if ok {
            CheckResult::holds("theorem3", w)
        } else {
            CheckResult::fails("theorem3", w, None)
        });
    }
    Ok(checks)
}

/// Check the tabulated seed denominators of a basketball family.
pub fn verify_initial_table(denoms: &DenomSequence) -> Vec<CheckResult> {
    let mut checks = Vec::new();
    for (w, seed) in BASKETBALL_SEEDS
        .iter()
        .enumerate()
        .take(denoms.len().min(5))
    {
        let expect = IntPoly::from_z_coeffs(seed);
        checks.push(if denoms.entry(w) == &expect {
            CheckResult::holds("initial_table", w)
        } else {
            CheckResult::fails("initial_table", w, None)
        });
    }
    checks
}

/// Soccer three-way agreement: iterated step vs continued fraction vs the
/// linear recurrences.
pub fn verify_soccer_agreement(w_max: usize) -> Result<Vec<CheckResult>, StripError> {
    let chain = soccer_chain(w_max)?;
    let linear = soccer_linear(w_max);
    let mut checks = Vec::new();
    for (w, c) in chain.iter().enumerate() {
        let cf = soccer_continued_fraction(w)?;
        checks.push(if &cf == c {
            CheckResult::holds("soccer_cf_agreement", w)
        } else {
            CheckResult::fails("soccer_cf_agreement", w, None)
        });
        checks.push(if &linear.gf(w) == c {
            CheckResult::holds("soccer_linear_agreement", w)
        } else {
            CheckResult::fails("soccer_linear_agreement", w, None)
        });
    }
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_ok;

    fn z(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_z_coeffs(coeffs)
    }

    fn gf(num: &[i64], den: &[i64]) -> RationalGF {
        RationalGF::new(z(num), z(den)).unwrap()
    }

    #[test]
    fn seed_table_is_literal() {
        let d = basketball_denominators(4);
        assert_eq!(d.entry(2), &z(&[1, -2, -3]));
        assert_eq!(d.entry(4), &z(&[1, -4, -6, 2]));
        assert_eq!(d.origin(), SequenceOrigin::Basketball);
        assert!(all_ok(&verify_initial_table(&d)));
    }

    #[test]
    fn recurrence_extends_the_table() {
        // one application of the linear recurrence past the seeds, frozen
        // from an independent computation
        let d = basketball_denominators(6);
        assert_eq!(d.entry(5), &z(&[1, -5, -6, 11, 12, -4]));
        assert_eq!(d.entry(6), &z(&[1, -6, -5, 24, 28, 6, -8]));
    }

    #[test]
    fn linear_gfs_match_the_printed_forms() {
        assert!(basketball_gf_linear(0).is_one());
        assert_eq!(
            basketball_gf_linear(3),
            gf(&[1, -2, -3], &[1, -3, -5, -2, 1])
        );
        assert_eq!(
            basketball_gf_linear(4),
            gf(&[1, -3, -5, -2, 1], &[1, -4, -6, 2])
        );
    }

    #[test]
    fn numerator_is_previous_denominator() {
        let d = basketball_denominators(12);
        for w in 1..=12 {
            let g = d.gf(w);
            assert_eq!(g.num(), d.entry(w - 1), "width {w}");
            assert_eq!(g.den(), d.entry(w), "width {w}");
        }
    }

    #[test]
    fn consecutive_denominators_are_coprime() {
        // equivalently gcd(P_w, AZ_w) = 1: the width-w fraction is already in
        // lowest terms for every w up to 12 (measured, not proven in general)
        let d = basketball_denominators(12);
        for w in 0..12 {
            let g = d.entry(w).gcd(d.entry(w + 1)).unwrap();
            assert!(g.is_one(), "widths {w},{}", w + 1);
        }
    }

    #[test]
    fn nonlinear_step_reproduces_the_table() {
        let f: Vec<RationalGF> = (0..=3).map(basketball_gf_linear).collect();
        let f4 = nonlinear_step(&[f[0].clone(), f[1].clone(), f[2].clone(), f[3].clone()]).unwrap();
        assert_eq!(f4, basketball_gf_linear(4));
        let f5 = nonlinear_step(&[f[1].clone(), f[2].clone(), f[3].clone(), f4.clone()]).unwrap();
        assert_eq!(f5, basketball_gf_linear(5));
    }

    #[test]
    fn span_two_weights_match_the_basketball_relation() {
        let w = generalized_weights(2);
        assert_eq!(w[0], z(&[0, 1]));
        assert_eq!(w[1], z(&[0, 2]));
        assert_eq!(w[2], z(&[0, 0, 2]));
        assert_eq!(w[3], z(&[0, 0, 0, 1, 1]));
        assert_eq!(w[4], z(&[0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn generalized_step_at_span_two_is_the_nonlinear_step() {
        let f: Vec<RationalGF> = (1..=4).map(basketball_gf_linear).collect();
        let window = [f[0].clone(), f[1].clone(), f[2].clone(), f[3].clone()];
        assert_eq!(
            generalized_step(&window, 2).unwrap(),
            nonlinear_step(&window).unwrap()
        );
    }

    #[test]
    fn soccer_linear_values() {
        let d = soccer_linear(12);
        assert_eq!(d.gf(1), gf(&[1], &[1, -1]));
        assert_eq!(d.gf(2), gf(&[1, -1], &[1, -2]));
        // degree in z grows by one every other width
        for w in 0..=12 {
            let deg_z = d.entry(w).degree().unwrap_or(0) / 2;
            assert_eq!(deg_z, w.div_ceil(2), "width {w}");
        }
    }

    #[test]
    fn identity_reports() {
        let checks = verify_recurrence_identity(RecurrenceKind::Theorem1, 2..=6).unwrap();
        assert!(all_ok(&checks));
        assert!(checks[0]
            .note
            .as_deref()
            .unwrap()
            .contains("not applicable"));
        assert!(checks[2].note.is_none());

        let soccer = verify_recurrence_identity(RecurrenceKind::Soccer, 0..=6).unwrap();
        assert!(all_ok(&soccer));

        let p2 = verify_recurrence_identity(RecurrenceKind::Theorem2 { p: 2 }, 4..=6).unwrap();
        assert!(all_ok(&p2));
        assert!(p2
            .iter()
            .all(|c| c.note.as_deref() == Some("reduces to theorem1")));
    }

    #[test]
    fn fault_injection_is_detected() {
        let good = basketball_denominators(6);
        assert!(all_ok(&verify_linear_agreement_with(&good, 6).unwrap()));
        let mut entries = good.entries().to_vec();
        entries[2] = z(&[1, -2, -4]);
        let bad = DenomSequence::from_entries(SequenceOrigin::Basketball, entries);
        assert!(!all_ok(&verify_linear_agreement_with(&bad, 6).unwrap()));
        assert!(!all_ok(&verify_initial_table(&bad)));
    }

    #[test]
    fn soccer_agreement() {
        let checks = verify_soccer_agreement(12).unwrap();
        assert_eq!(checks.len(), 26);
        assert!(all_ok(&checks));
    }
}
