#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trop/moduli.hpp"

namespace trop {

using QPoint = std::array<mpq_class, 2>;

// forces evaluation of gmp expression templates
inline QPoint qpoint(mpq_class x, mpq_class y) {
    return {std::move(x), std::move(y)};
}

struct PointConfiguration {
    std::vector<QPoint> points;
    unsigned long seed = 0;  // sampling provenance; 0 for explicit points
    int n() const { return static_cast<int>(points.size()); }
};

// Deterministic rational points: numerators from a seeded PRNG in
// [-bound, bound], denominators walking a fixed ladder of primes (one prime
// per coordinate slot) so that accidental alignments need conspiring
// denominators. Pairwise distinct.
PointConfiguration sample_generic_points(int n, unsigned long seed, long bound = 512);

enum class SolveStatus {
    kSolved,
    kNoSolution,         // system inconsistent: no curve of this type through p
    kNonPositiveLength,  // unique solution but some length < 0: normal miss
    kZeroLength,         // unique solution on a cone wall: p is not generic
    kDegenerate,         // singular and consistent: a positive-dimensional
                         // family through p, p is not generic
};

struct ParametrizedCurve {
    CombinatorialType type;
    std::vector<QPoint> positions;   // per vertex
    std::vector<mpq_class> lengths;  // per bounded edge
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::kNoSolution;
    std::optional<ParametrizedCurve> curve;
};

// Exact solve for the unique curve of this type through the configuration.
// Unknowns: position of the root vertex plus one length per bounded edge;
// equations: two per marked point. Fraction-free (Bareiss) elimination over
// big integers after clearing denominators.
SolveOutcome solve_through_points(const CombinatorialType& type, const PointConfiguration& p);

struct GenericityReport {
    bool pass = true;
    std::vector<std::string> diagnostics;
};

// Fails if any type produced a degenerate family, any solution sits on a cone
// wall (zero length), or two solved curves coincide in image (the image check
// is optional; distinct end labelings of one curve are expected to coincide).
GenericityReport genericity_audit(
    const std::vector<std::pair<const CombinatorialType*, const SolveOutcome*>>& results,
    bool check_images = true);

// canonical fingerprint of the image (segments and rays) of a solved curve
std::string image_fingerprint(const ParametrizedCurve& c);

}  // namespace trop
