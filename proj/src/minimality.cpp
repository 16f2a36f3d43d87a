#include "asym/minimality.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <string>
#include <thread>

namespace asym {

namespace {

std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t m) { return rng() % m; }

// Applies fn(i) for i in [0, count) using the given number of worker threads.
// Results land in a caller-provided slot per index, so aggregation order does
// not depend on scheduling.
template <typename Fn>
void parallel_for(long long count, int jobs, Fn fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::atomic<long long> next{0};
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&] {
            while (true) {
                long long i = next.fetch_add(1);
                if (i >= count) break;
                fn(i);
            }
        });
    }
    for (auto& w : workers) w.join();
}

// Subset enumeration order for the exhaustive mode: sizes ascending, subsets
// of one size in lexicographic order.
bool next_combination(std::vector<int>& comb, int n) {
    const int s = static_cast<int>(comb.size());
    for (int i = s - 1; i >= 0; --i) {
        if (comb[i] < n - s + i) {
            ++comb[i];
            for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> deletion_subset(const Hypergraph& h, int v) {
    std::vector<int> subset;
    subset.reserve(h.vertex_count() - 1);
    for (int w = 0; w < h.vertex_count(); ++w)
        if (w != v) subset.push_back(w);
    return subset;
}

// Seeded subsets for sample mode: size uniform in 2..n-1, then a uniform
// subset of that size via a partial shuffle.
std::vector<std::vector<int>> sampled_subsets(int n, long long samples, std::uint64_t seed) {
    std::vector<std::vector<int>> out;
    if (n < 3) return out; // no proper subsets in the 2..n-1 window
    std::mt19937_64 rng(seed);
    out.reserve(samples);
    std::vector<int> pool(n);
    for (long long s = 0; s < samples; ++s) {
        const int size = 2 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n - 2)));
        std::iota(pool.begin(), pool.end(), 0);
        for (int i = 0; i < size; ++i) {
            const int j = i + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> subset(pool.begin(), pool.begin() + size);
        std::sort(subset.begin(), subset.end());
        out.push_back(std::move(subset));
    }
    return out;
}

std::optional<Permutation> isolated_pair_witness(const Hypergraph& h) {
    const int n = h.vertex_count();
    std::vector<bool> covered(n, false);
    for (const auto& e : h.edges)
        for (int v : e) covered[v] = true;
    int first = -1;
    for (int v = 0; v < n; ++v) {
        if (covered[v]) continue;
        if (first < 0) {
            first = v;
        } else {
            Permutation p = Permutation::identity(n);
            p.image[first] = v;
            p.image[v] = first;
            return p;
        }
    }
    return std::nullopt;
}

} // namespace

const char* scan_mode_name(ScanMode mode) {
    switch (mode) {
        case ScanMode::exhaustive: return "exhaustive";
        case ScanMode::deletion1: return "deletion1";
        case ScanMode::sample: return "sample";
    }
    return "?";
}

std::optional<Permutation> symmetry_witness(const Hypergraph& h) {
    if (h.vertex_count() < 2)
        throw Error(ErrorKind::TooFewVertices, "symmetry needs at least two vertices");
    if (auto iso = isolated_pair_witness(h)) return iso;
    if (auto twin = twin_swap_witness(h)) return twin;
    return find_nontrivial_automorphism(h);
}

MinimalityReport check_minimal(const Hypergraph& h, const MinimalityOptions& options) {
    const int n = h.vertex_count();
    if (n < 2)
        throw Error(ErrorKind::TooFewVertices, "minimality needs at least two vertices");
    if (options.mode == ScanMode::exhaustive && n > options.max_exhaustive_n)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "exhaustive scan limited to " + std::to_string(options.max_exhaustive_n) +
                        " vertices, got " + std::to_string(n));

    MinimalityReport report;
    report.mode = options.mode;
    report.asymmetric_root = !find_nontrivial_automorphism(h).has_value();
    if (options.mode == ScanMode::sample) {
        report.seed = options.seed;
        report.samples = options.samples;
    }

    // Materialize the scan order up front; sampling must not depend on jobs.
    std::vector<std::vector<int>> subsets;
    if (options.mode == ScanMode::exhaustive) {
        for (int size = 2; size < n; ++size) {
            std::vector<int> comb(size);
            std::iota(comb.begin(), comb.end(), 0);
            do {
                subsets.push_back(comb);
            } while (next_combination(comb, n));
        }
    } else {
        if (n - 1 >= 2)
            for (int v = 0; v < n; ++v) subsets.push_back(deletion_subset(h, v));
        if (options.mode == ScanMode::sample) {
            auto sampled = sampled_subsets(n, options.samples, options.seed);
            for (auto& s : sampled) subsets.push_back(std::move(s));
        }
    }

    // Scan in blocks: workers fill verdicts per index, the earliest asymmetric
    // subset wins regardless of completion order.
    const long long total = static_cast<long long>(subsets.size());
    const long long block = std::max<long long>(1, 8LL * std::max(1, options.jobs));
    for (long long start = 0; start < total && !report.counterexample; start += block) {
        const long long end = std::min(total, start + block);
        std::vector<char> asymmetric(end - start, 0);
        parallel_for(end - start, options.jobs, [&](long long i) {
            const Hypergraph sub = induced(h, subsets[start + i]);
            asymmetric[i] = symmetry_witness(sub) ? 0 : 1;
        });
        for (long long i = 0; i < end - start; ++i) {
            if (!asymmetric[i]) continue;
            report.subsets_checked = start + i + 1;
            report.all_symmetric = false;
            report.counterexample = {subsets[start + i], analyze_symmetry(induced(h, subsets[start + i]))};
            break;
        }
    }
    if (!report.counterexample) report.subsets_checked = total;
    return report;
}

std::vector<std::pair<int, Permutation>> deletion_witness_table(const Hypergraph& h, int jobs) {
    const int n = h.vertex_count();
    if (n < 3)
        throw Error(ErrorKind::TooFewVertices, "deletion scan needs at least three vertices");

    std::vector<std::optional<Permutation>> witnesses(n);
    parallel_for(n, jobs, [&](long long v) {
        witnesses[v] = symmetry_witness(induced(h, deletion_subset(h, static_cast<int>(v))));
    });

    std::vector<std::pair<int, Permutation>> table;
    table.reserve(n);
    for (int v = 0; v < n; ++v) {
        if (!witnesses[v])
            throw Error(ErrorKind::AsymmetricSubgraphFound,
                        "deleting vertex \"" + h.vertex_labels[v] + "\" leaves an asymmetric sub-hypergraph");
        table.emplace_back(v, *witnesses[v]);
    }
    return table;
}

} // namespace asym
