#ifndef ASYM_MINIMALITY_HPP
#define ASYM_MINIMALITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asym/aut.hpp"
#include "asym/hypergraph.hpp"

namespace asym {

enum class ScanMode { exhaustive, deletion1, sample };

const char* scan_mode_name(ScanMode mode);

struct MinimalityReport {
    ScanMode mode = ScanMode::deletion1;
    bool asymmetric_root = false;
    long long subsets_checked = 0;
    bool all_symmetric = true;
    // First asymmetric proper induced sub-hypergraph in scan order, if any.
    std::optional<std::pair<std::vector<int>, AutReport>> counterexample;
    std::optional<std::uint64_t> seed;    // sample mode only
    std::optional<long long> samples;     // sample mode only

    bool certifies_minimal() const {
        return mode == ScanMode::exhaustive && asymmetric_root && all_symmetric;
    }
};

struct MinimalityOptions {
    ScanMode mode = ScanMode::deletion1;
    int max_exhaustive_n = 20;
    long long samples = 500;
    std::uint64_t seed = 0;
    int jobs = 1;
};

// Checks the root for asymmetry and scans proper induced sub-hypergraphs
// (2 <= |W| < n) for symmetry:
//   exhaustive  every subset, sizes ascending (n <= max_exhaustive_n)
//   deletion1   the n single-vertex deletions
//   sample      deletion1 plus `samples` seeded random subsets
// The scan stops at the first asymmetric subset in the deterministic
// enumeration order, independent of the worker count.
MinimalityReport check_minimal(const Hypergraph& h, const MinimalityOptions& options);

// One non-trivial automorphism of induced(h, V \ {v}) per vertex v. Throws
// AsymmetricSubgraphFound if some deletion is asymmetric.
std::vector<std::pair<int, Permutation>> deletion_witness_table(const Hypergraph& h, int jobs = 1);

// Symmetry test used by the scans: two isolated vertices, then a twin swap,
// then the full search. Returns a witness when symmetric, none when
// asymmetric. Requires n >= 2.
std::optional<Permutation> symmetry_witness(const Hypergraph& h);

} // namespace asym

#endif // ASYM_MINIMALITY_HPP
