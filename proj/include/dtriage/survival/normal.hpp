#pragma once

namespace dtriage::survival {

/// Inverse CDF of the standard normal distribution.
///
/// Rational polynomial approximation (Acklam's coefficients) refined with one
/// Halley step against erfc, giving better than 9 significant digits across
/// (0, 1) — no statistical tables shipped. normal_quantile(0.975) =
/// 1.959963985... Throws Error("OutOfRange") for p outside (0, 1).
double normal_quantile(double p);

}  // namespace dtriage::survival
