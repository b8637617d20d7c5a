#pragma once

#include <stdexcept>
#include <vector>

#include "trop/moduli.hpp"
#include "trop/refined_poly.hpp"
#include "trop/solver.hpp"
#include "trop/vertex_mult.hpp"

namespace trop {

enum class Exec { kSerial, kParallel };

// point configurations kept failing the genericity audit
struct genericity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountOptions {
    Convention convention = Convention::kDefinition;
    EndLabeling labeling = EndLabeling::kUpToRelabeling;
    Exec exec = Exec::kParallel;
    int max_resamples = 32;
    long point_bound = 512;
};

struct CountedCurve {
    CombinatorialType type;
    ParametrizedCurve curve;
    RefinedPoly multiplicity;  // under the requested convention
    // order of the group of relabelings of equal ends fixing the type: the
    // curve enters the up-to-relabeling count with weight 1/end_symmetry
    long end_symmetry = 1;
};

struct CountResult {
    Degree degree;
    DescendantProfile profile;
    Convention convention = Convention::kDefinition;
    EndLabeling labeling = EndLabeling::kUpToRelabeling;
    PointConfiguration points;
    unsigned long seed = 0;
    int resamples = 0;
    RefinedPoly polynomial;
    std::vector<CountedCurve> curves;

    // number of unpointed trivalent vertices, the same for every curve
    int trivalent_count() const {
        return degree.size() - 2 - static_cast<int>(profile.total());
    }
};

// Refined count at an explicit configuration; throws genericity_error if the
// audit rejects it.
CountResult count_refined_at(const Degree& degree, const DescendantProfile& profile,
                             const PointConfiguration& points, const CountOptions& opt = {});

// Samples points from the seed, audits, resamples on failure (seed+1, ...) up
// to opt.max_resamples, then throws genericity_error.
CountResult count_refined(const Degree& degree, const DescendantProfile& profile,
                          unsigned long seed, const CountOptions& opt = {});

// Reference path: exhaustive type enumeration, one solve per type. Exercises
// the same solver and multiplicities without the geometric pruning; only
// viable for small instances. The production count must agree with it.
CountResult count_refined_reference(const Degree& degree, const DescendantProfile& profile,
                                    const PointConfiguration& points,
                                    const CountOptions& opt = {});

struct UExpansion {
    USeries series;                      // (-i)^T * N(q) under q = e^{iu}
    int leading_power = 0;               // = T
    std::vector<mpq_class> genus_coeff;  // N_g = coefficient of u^{T + 2g}
};

// Substitutes q = e^{iu} into the definition-normalized polynomial with the
// (-i)^T prefactor restored; checks the series is real, vanishes below u^T
// and has even gaps; extracts the genus coefficients.
UExpansion u_expansion(const CountResult& result, int order);

// genus-zero coefficient N_0
mpq_class classical_limit(const CountResult& result);

struct InvarianceOutcome {
    bool pass = false;
    std::vector<CountResult> results;
};

// Corollary-B style test: identical polynomials across all seeds.
InvarianceOutcome invariance_suite(const Degree& degree, const DescendantProfile& profile,
                                   const std::vector<unsigned long>& seeds,
                                   const CountOptions& opt = {});

// multiplicity of one curve as a product over its vertices, convention applied
RefinedPoly curve_multiplicity(const CombinatorialType& type, Convention convention);

// product over vertices of (count of equal ends at the vertex)!
long end_symmetry_order(const CombinatorialType& type);

}  // namespace trop
