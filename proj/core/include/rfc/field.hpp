#ifndef RFC_FIELD_HPP
#define RFC_FIELD_HPP

#include <cstdint>
#include <vector>

#include "rfc/errors.hpp"
#include "rfc/rng.hpp"

namespace rfc {

// Finite value set with a discrete probability distribution. Values are drawn
// by CDF inversion in listed order.
struct CodomainDistribution {
    std::vector<double> values;
    std::vector<double> probs;

    // Throws ArgumentError unless: non-empty, equal lengths, all probs > 0,
    // probs sum to 1 within 1e-12.
    void validate() const;
};

// Equispaced values on [lo, hi] with equal probabilities. The default
// (101 points on [-1,1]) is the codomain used by all spec builders.
CodomainDistribution uniform_codomain(int count = 101, double lo = -1.0, double hi = 1.0);

// One parameterized random field over a subset of the composition's
// variables. Variable indices are 1-based. The field is "virtual": values of
// its cells are recomputed on demand from (global_seed, field_id, cell index),
// so resolution can be astronomically large without any storage.
struct FieldSpec {
    std::uint64_t field_id = 0;
    std::vector<int> active_vars;           // ascending, distinct, 1-based
    std::vector<std::uint32_t> resolution;  // cells per active variable, >= 1
    std::vector<double> shift;              // phase shift per active variable, in [0,1)
    CodomainDistribution codomain;
    double smooth_exponent = 1.0;           // p; 0 means discrete (no smoothing)

    void validate() const;
};

// Cell index per active variable, each strictly below the resolution.
using IndexVector = std::vector<std::uint32_t>;

// Cell index of x: j_d = floor(r_d * x_d + shift_d) mod r_d per active
// variable. The partial cell at the upper domain edge wraps onto the partial
// cell at the lower edge, so each axis has exactly r_d distinct cells and the
// cell boundaries coincide with the zeros of the smoothing window.
IndexVector discretize(const std::vector<double>& x, const FieldSpec& spec);

// Pseudo-random mapping from a cell index vector to a 64-bit word.
// Bit-exact contract (mod 2^64):
//   state = mix64(global_seed ^ field_id)
//   for position d over active variables, ascending:
//       state = mix64(state ^ (j_d * 0x9E3779B97F4A7C15 + (d+1)))
std::uint64_t prm(std::uint64_t global_seed, std::uint64_t field_id, const IndexVector& j);

// CDF inversion: u = u64 / 2^64, return the first value whose cumulative
// probability exceeds u.
double sample_codomain(const CodomainDistribution& dist, std::uint64_t u64);

// Value of the discrete field at x. O(|active_vars|) time, O(1) extra space.
double eval_discrete(const FieldSpec& spec, std::uint64_t global_seed, const std::vector<double>& x);

} // namespace rfc

#endif
