//! Closed-form weak-probe solutions as typeset, in units where γ₁ = γ₂ = 1.
//!
//! Fractions that the typesetting breaks across two lines are read as one
//! numerator (the concatenated upper rows) over one denominator (the
//! concatenated lower rows). `P` and `p` both denote the SGC strength cos θ.
//! Two repairs are needed to make the coefficients well-formed and are marked
//! `REPAIR` below; every other term is evaluated exactly as printed, including
//! terms that look suspicious.

use num_complex::Complex64;

use super::{AnalyticsError, DENOMINATOR_FLOOR};
use crate::params::SystemParams;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn checked_div(
    num: Complex64,
    den: Complex64,
    expression: &'static str,
) -> Result<Complex64, AnalyticsError> {
    let magnitude = den.norm();
    if !(magnitude >= DENOMINATOR_FLOOR) {
        return Err(AnalyticsError::DenominatorUnderflow { expression, magnitude });
    }
    Ok(num / den)
}

fn require_scaled(params: &SystemParams) -> Result<(), AnalyticsError> {
    if (params.gamma1 - 1.0).abs() > 1e-12 || (params.gamma2 - 1.0).abs() > 1e-12 {
        return Err(AnalyticsError::UnscaledDecay {
            gamma1: params.gamma1,
            gamma2: params.gamma2,
        });
    }
    Ok(())
}

/// Zero-order (Ω_p = 0) coherences ρ⁰₁₂, ρ⁰₁₃, ρ⁰₂₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroOrderCoherences {
    pub rho12_0: Complex64,
    pub rho13_0: Complex64,
    pub rho23_0: Complex64,
}

/// The eleven coefficients A₀…A₁₀ entering the first-order ρ₁₃.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AppendixCoefficients {
    pub a: [Complex64; 11],
}

impl AppendixCoefficients {
    pub fn get(&self, k: usize) -> Complex64 {
        self.a[k]
    }
}

pub fn zero_order_coherences(params: &SystemParams) -> Result<ZeroOrderCoherences, AnalyticsError> {
    require_scaled(params)?;
    let p = c(params.sgc());
    let dp = c(params.delta_p);
    let dc = c(params.delta_c);
    let oc = c(params.omega_c);
    let oc2 = oc * oc;
    let two_photon = 2.0 * I + dc - dp;

    // ρ⁰12 = [(−i+Δp)(−2i−Δc+Δp)Ωc − Ωc³]
    //      / {(2i+Δc−Δp)[p²+(Δp−i)(Δc−i)] + (Δc−i)Ωc²}
    let rho12_0 = checked_div(
        (-I + dp) * (-2.0 * I - dc + dp) * oc - oc2 * oc,
        two_photon * (p * p + (dp - I) * (dc - I)) + (dc - I) * oc2,
        "rho12_0",
    )?;

    // ρ⁰13 = pΩc(2i+Δc−Δp)
    //      / {(2i+Δc−Δp)[ip²−i+Δc(1+iΔp)+Δp] + (1+iΔc)Ωc²}
    let rho13_0 = checked_div(
        p * oc * two_photon,
        two_photon * (I * p * p - I + dc * (1.0 + I * dp) + dp) + (1.0 + I * dc) * oc2,
        "rho13_0",
    )?;

    // ρ⁰23 = ipΩc²
    //      / {(2i+Δc−Δp)[p²+(−i+Δp)(−i+Δc)] + (−i+Δc)Ωc²}
    let rho23_0 = checked_div(
        I * p * oc2,
        two_photon * (p * p + (-I + dp) * (-I + dc)) + (-I + dc) * oc2,
        "rho23_0",
    )?;

    Ok(ZeroOrderCoherences { rho12_0, rho13_0, rho23_0 })
}

/// Evaluates A₀…A₁₀ at (p, Δ_p, Δ_c, Ω_c, Ω_p).
pub fn appendix_coefficients(params: &SystemParams) -> AppendixCoefficients {
    let p = c(params.sgc());
    let p2 = p * p;
    let p3 = p2 * p;
    let p4 = p2 * p2;
    let p5 = p4 * p;
    let dp = c(params.delta_p);
    let dc = c(params.delta_c);
    let oc = c(params.omega_c);
    let oc2 = oc * oc;
    let oc4 = oc2 * oc2;
    let op = c(params.omega_p);

    // recurring factor [Ωc² + (i+Δp)(−2i+Δc−Δp)]
    let k = oc2 + (I + dp) * (-2.0 * I + dc - dp);
    // recurring factor (1+Δc²+2Ωc²)
    let s = 1.0 + dc * dc + 2.0 * oc2;

    // A0 = P⁴(8i+Δc−3Δp) + Ωc²(5i+Δc−2Δp)[Ωc²+(i+Δp)(−2i+Δc−Δp)]
    //    + P²[(i+Δp)(i+Δc)(8i+Δc−3Δp) + 2Ωc²(5i+Δc−4Δp)]
    let a0 = p4 * (8.0 * I + dc - 3.0 * dp)
        + oc2 * (5.0 * I + dc - 2.0 * dp) * k
        + p2 * ((I + dp) * (I + dc) * (8.0 * I + dc - 3.0 * dp)
            + 2.0 * oc2 * (5.0 * I + dc - 4.0 * dp));

    // A1 = 2iP²{(8i+Δc−3Δp)[P²+(i+Δp)(i+Δc)] + Ωc²(4i+Δc−3Δp)}
    let a1 = 2.0 * I * p2
        * ((8.0 * I + dc - 3.0 * dp) * (p2 + (I + dp) * (I + dc))
            + oc2 * (4.0 * I + dc - 3.0 * dp));

    // A2 = 2P⁴ − [Ωc²+(i+Δp)(−2i+Δc−Δp)][Ωc²+(i+Δc)(−3i+Δp)]
    //    + P²[4+Ωc²+Δp(i+Δp)+Δc(5i+Δp)]
    let a2 = 2.0 * p4 - k * (oc2 + (I + dc) * (-3.0 * I + dp))
        + p2 * (4.0 + oc2 + dp * (I + dp) + dc * (5.0 * I + dp));

    // A3 = −iP⁴(−4i+Δc−3Δp) + 2[Ωc²+(i+Δp)(−2i+Δc−Δp)](1+Δc²+2Ωc²)
    //    − iP²{Δp(5−3iΔp) + Δc²(3i+Δp) + Ωc²(2i−3Δp) + Δc[9−Δp(8i+3Δp)+Ωc²]}
    let a3 = -I * p4 * (-4.0 * I + dc - 3.0 * dp) + 2.0 * k * s
        - I * p2
            * (dp * (5.0 - 3.0 * I * dp)
                + dc * dc * (3.0 * I + dp)
                + oc2 * (2.0 * I - 3.0 * dp)
                + dc * (9.0 - dp * (8.0 * I + 3.0 * dp) + oc2));

    // A4 = 8iP⁴ + P²{−2i[8+Δc(−4i+Δc)−4iΔp−6ΔcΔp+Δp²] + Ωc²(6i+Δc−5Δp)}
    //    + [Ωc²+(i+Δp)(−2i+Δc−Δp)][2(1−iΔc)(2i+Δc−Δp) + Ωc²(3i+Δc−2Δp)]
    let a4 = 8.0 * I * p4
        + p2 * (-2.0 * I * (8.0 + dc * (-4.0 * I + dc) - 4.0 * I * dp - 6.0 * dc * dp + dp * dp)
            + oc2 * (6.0 * I + dc - 5.0 * dp))
        + k * (2.0 * (1.0 - I * dc) * (2.0 * I + dc - dp) + oc2 * (3.0 * I + dc - 2.0 * dp));

    // A5 = P⁴(4i+Δc−3Δp)
    //    + [Ωc²+(i+Δp)(−2i+Δc−Δp)][2(i+Δc)(3+iΔp) + Ωc²(7i+Δc−2Δp)]
    //    + P²{Δc²(i+Δp) + Δp(−3−5iΔp−8Ωc²) + 8i(−2+Ωc²) + Δc[1+(4i−3Δp)Δp+2Ωc²]}
    let a5 = p4 * (4.0 * I + dc - 3.0 * dp)
        + k * (2.0 * (I + dc) * (3.0 + I * dp) + oc2 * (7.0 * I + dc - 2.0 * dp))
        + p2 * (dc * dc * (I + dp)
            + dp * (-3.0 - 5.0 * I * dp - 8.0 * oc2)
            + 8.0 * I * (-2.0 + oc2)
            + dc * (1.0 + (4.0 * I - 3.0 * dp) * dp + 2.0 * oc2));

    // A6 = P²(6i+Δc−5Δp) + (5i+Δc−2Δp)[(−2i+Δc−Δp)(i+Δp)+Ωc²]
    let a6 = p2 * (6.0 * I + dc - 5.0 * dp)
        + (5.0 * I + dc - 2.0 * dp) * ((-2.0 * I + dc - dp) * (I + dp) + oc2);

    // A7 = −4iP⁵Ωc + iP³[8+Δc²+Δp(−4i+Δp)−2Δc(2i+3Δp)]Ωc
    //    + pΩc[(2+iΔc−iΔp+iΩc²)(i+Δp)][(i+Δc)(2i+Δc−Δp)+Ωc²]
    //    + (1+Δc²+2Ωc²) × {[4+(Δc−Δp)²](i+Δp) + (2i+Δc−Δp)Ωc²}Ωp
    //    + P²{(Δc−i)[8+Δc²+Δp(Δp−4i)−2Δc(2i+3Δp)]
    //         − [12i+5Δc+(3+2iΔp)Δp]Ωc² − iΩc⁴}Ωp
    //    + 2P⁴[−2Δc+i(2+Ωc²)]Ωp
    //
    // REPAIR: the fourth term is typeset "(1+Δc²+2Ωc²)+{…}Ωp". Read as a sum
    // it leaves an Ω_p-independent constant in the numerator and the
    // two-level limit (Ω_c = p = 0) comes out as −(1+4iΩp)/4 instead of the
    // exact −iΩp/(1+iΔp); read as a product it reproduces that limit exactly.
    // REPAIR: "[8+Δc)²" has an unmatched bracket; read as "[8+Δc²", the same
    // polynomial as in the P³ term.
    let a7 = -4.0 * I * p5 * oc
        + I * p3 * (8.0 + dc * dc + dp * (-4.0 * I + dp) - 2.0 * dc * (2.0 * I + 3.0 * dp)) * oc
        + p * oc
            * ((2.0 + I * dc - I * dp + I * oc2) * (I + dp))
            * ((I + dc) * (2.0 * I + dc - dp) + oc2)
        + s * (((4.0 + (dc - dp) * (dc - dp)) * (I + dp) + (2.0 * I + dc - dp) * oc2) * op)
        + p2 * ((dc - I) * (8.0 + dc * dc + dp * (dp - 4.0 * I) - 2.0 * dc * (2.0 * I + 3.0 * dp))
            - (12.0 * I + 5.0 * dc + (3.0 + 2.0 * I * dp) * dp) * oc2
            - I * oc4)
            * op
        + 2.0 * p4 * (-2.0 * dc + I * (2.0 + oc2)) * op;

    // A8 = −2Δc³Δp + 6(2+Δp)² − 2ΔcΔp(6+Δp)² + Δc²(6+8Δp)²
    //    + 2[4−(Δc−4Δp)(Δc+Δp)]Ωc² + Ωc⁴
    // (the squared factors (2+Δp)², (6+Δp)², (6+8Δp)² are kept as printed)
    let a8 = -2.0 * dc * dc * dc * dp + 6.0 * (2.0 + dp) * (2.0 + dp)
        - 2.0 * dc * dp * (6.0 + dp) * (6.0 + dp)
        + dc * dc * (6.0 + 8.0 * dp) * (6.0 + 8.0 * dp)
        + 2.0 * (4.0 - (dc - 4.0 * dp) * (dc + dp)) * oc2
        + oc4;

    // A9 = [4+(Δc−Δp)²](1+Δp²) + 2[2+(Δc−Δp)Δp]Ωc² + Ωc⁴
    //
    // REPAIR: typeset "(1+Δp)²)" has an unmatched closing bracket. Read as
    // (1+Δp²), which with the A7 product reading gives the exact two-level
    // Lorentzian; (1+Δp)² does not.
    let a9 = (4.0 + (dc - dp) * (dc - dp)) * (1.0 + dp * dp)
        + 2.0 * (2.0 + (dc - dp) * dp) * oc2
        + oc4;

    // A10 = 12 + Δc² − 10ΔcΔp + Δp² − 4Ωc²
    let a10 = 12.0 + dc * dc - 10.0 * dc * dp + dp * dp - 4.0 * oc2;

    AppendixCoefficients { a: [a0, a1, a2, a3, a4, a5, a6, a7, a8, a9, a10] }
}

/// First-order ρ₁₃:
///
/// ```text
/// ρ¹13 = { −4A7 + Ωp[ −A1ρ⁰12
///                    + Ωc( −i(A0−A5)pρ⁰31 − 2A2pρ⁰13 + 2A3ρ⁰21 + 2pA6Ωcρ⁰23 )
///                    − 2pA4ρ⁰32 ] }
///      / { 4[ −p²A8 + A10p⁴ − 4p⁶ + A9(1+Δc²+2Ωc²) ] }
/// ```
pub fn first_order_rho13_analytic(params: &SystemParams) -> Result<Complex64, AnalyticsError> {
    let z = zero_order_coherences(params)?;
    let a = appendix_coefficients(params).a;
    let p = c(params.sgc());
    let p2 = p * p;
    let dc = c(params.delta_c);
    let oc = c(params.omega_c);
    let op = c(params.omega_p);
    let (rho21_0, rho31_0, rho32_0) = (z.rho12_0.conj(), z.rho13_0.conj(), z.rho23_0.conj());

    let num = -4.0 * a[7]
        + op * (-a[1] * z.rho12_0
            + oc * (-I * (a[0] - a[5]) * p * rho31_0 - 2.0 * a[2] * p * z.rho13_0
                + 2.0 * a[3] * rho21_0
                + 2.0 * p * a[6] * oc * z.rho23_0)
            - 2.0 * p * a[4] * rho32_0);
    let den = 4.0
        * (-p2 * a[8] + a[10] * p2 * p2 - 4.0 * p2 * p2 * p2 + a[9] * (1.0 + dc * dc + 2.0 * oc * oc));
    checked_div(num, den, "rho13_1")
}
