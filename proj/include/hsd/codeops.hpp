#pragma once

// Code-level verification: Hermitian self-duality, weight distributions,
// minimum distance, and the alpha parameter of the W_n weight enumerators.
//
// All weight computation on F4U codes happens on the Gray image (minimum
// Lee distance = minimum Hamming distance of the image), so there is one
// enumeration path, over GF(4) only.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hsd/matrix.hpp"
#include "hsd/ring.hpp"

namespace hsd {

struct WeightDistribution {
    int length = 0;
    std::map<int, uint64_t> counts;   // weight -> codeword count
    std::optional<int> truncation;    // counts recorded only for w <= truncation
    bool complete = true;

    std::string to_string() const;  // "w:count" pairs, ascending w
};

struct EnumOptions {
    uint64_t budget = uint64_t(1) << 28;  // max messages, default 4^14
    int workers = 1;                      // partitioned enumeration; counts are
                                          // identical for any worker count
};

// Pairwise (including self) Hermitian orthogonality of rows plus free rank
// length/2. Works on any full set of generator rows, standard form or not.
bool verify_hermitian_self_dual(const GeneratorMatrix& g);

WeightDistribution weight_distribution_exhaustive(const GeneratorMatrix& g,
                                                  std::optional<int> cutoff = std::nullopt,
                                                  const EnumOptions& opt = {});

enum class DistanceMethod { Exhaustive, InfoSet };

int min_distance(const GeneratorMatrix& g, DistanceMethod method = DistanceMethod::InfoSet,
                 const EnumOptions& opt = {});

// Fast reject for the search loop: true iff no nonzero codeword has weight
// below `target`, decided with the information-set bound.
bool distance_at_least(const GeneratorMatrix& g, int target);

// Upper bound on d for quaternary Hermitian self-dual codes: 2*floor(n/6)+2.
int distance_bound(int length);

// Weight of the alpha term of W_n, for the lengths the enumerators cover.
int alpha_weight_for_length(int length);

// Expected second coefficient A_{w*+2} of W_n, as a function of alpha.
int64_t second_coefficient(int length, int64_t alpha);

// A_{w*} computed by truncated enumeration at cutoff w*+2. The target
// weight may be supplied explicitly for lengths outside the W_n list.
int64_t alpha_of(const GeneratorMatrix& g, std::optional<int> explicit_weight = std::nullopt,
                 const EnumOptions& opt = {});

}  // namespace hsd
