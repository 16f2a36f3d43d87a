#include "asym/aut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "asym/labels.hpp"

namespace asym {

OrderedPartition OrderedPartition::unit(int n) {
    OrderedPartition p;
    if (n > 0) {
        p.cells.emplace_back(n);
        std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
    }
    return p;
}

OrderedPartition OrderedPartition::discrete(int n) {
    OrderedPartition p;
    p.cells.reserve(n);
    for (int v = 0; v < n; ++v) p.cells.push_back({v});
    return p;
}

bool OrderedPartition::is_discrete() const {
    for (const auto& c : cells)
        if (c.size() != 1) return false;
    return true;
}

int OrderedPartition::vertex_count() const {
    int n = 0;
    for (const auto& c : cells) n += static_cast<int>(c.size());
    return n;
}

std::vector<int> OrderedPartition::cell_of() const {
    std::vector<int> out(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        for (int v : cells[i]) out[v] = i;
    return out;
}

namespace {

std::vector<std::vector<int>> incidence_lists(const Hypergraph& h) {
    std::vector<std::vector<int>> inc(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e)
        for (int v : h.edges[e]) inc[v].push_back(e);
    return inc;
}

// One incident edge contributes [size, co-member cells...]; a vertex signature
// is its sorted edge entries flattened with -1 separators.
using Signature = std::vector<int>;

Signature vertex_signature(const Hypergraph& h, const std::vector<int>& inc_v,
                           const std::vector<int>& cell_of, int v) {
    std::vector<std::vector<int>> entries;
    entries.reserve(inc_v.size());
    for (int e : inc_v) {
        std::vector<int> entry;
        entry.reserve(h.edges[e].size() + 1);
        entry.push_back(static_cast<int>(h.edges[e].size()));
        for (int w : h.edges[e])
            if (w != v) entry.push_back(cell_of[w]);
        std::sort(entry.begin() + 1, entry.end());
        entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end());
    Signature sig;
    for (const auto& entry : entries) {
        sig.insert(sig.end(), entry.begin(), entry.end());
        sig.push_back(-1);
    }
    return sig;
}

// A split record keeps the position of the cell that split and the sizes and
// signatures of its parts; equal traces on two partitions mean the refinements
// stayed structurally aligned.
struct SplitRecord {
    int cell_pos = 0;
    std::vector<std::pair<Signature, int>> parts;

    bool operator==(const SplitRecord& other) const {
        return cell_pos == other.cell_pos && parts == other.parts;
    }
};

using Trace = std::vector<SplitRecord>;

void refine_cells(const Hypergraph& h, const std::vector<std::vector<int>>& inc,
                  std::vector<std::vector<int>>& cells, Trace& trace) {
    const int n = h.vertex_count();
    std::vector<int> cell_of(n, -1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            for (int v : cells[i]) cell_of[v] = i;

        std::vector<std::vector<int>> next;
        next.reserve(cells.size());
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
            auto& cell = cells[ci];
            if (cell.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            std::map<Signature, std::vector<int>> groups;
            for (int v : cell)
                groups[vertex_signature(h, inc[v], cell_of, v)].push_back(v);
            if (groups.size() == 1) {
                next.push_back(std::move(cell));
                continue;
            }
            changed = true;
            SplitRecord rec;
            rec.cell_pos = ci;
            for (auto& [sig, members] : groups) {
                rec.parts.emplace_back(sig, static_cast<int>(members.size()));
                next.push_back(std::move(members));
            }
            trace.push_back(std::move(rec));
        }
        cells = std::move(next);
    }
}

std::vector<std::vector<int>> individualize(const std::vector<std::vector<int>>& cells,
                                            int cell_pos, int v) {
    std::vector<std::vector<int>> out;
    out.reserve(cells.size() + 1);
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
        if (i != cell_pos) {
            out.push_back(cells[i]);
            continue;
        }
        out.push_back({v});
        std::vector<int> rest;
        rest.reserve(cells[i].size() - 1);
        for (int w : cells[i])
            if (w != v) rest.push_back(w);
        out.push_back(std::move(rest));
    }
    return out;
}

// Individualization-refinement over a pair of partitions: the left one tracks
// preimages, the right one images. Every automorphism compatible with the seed
// partition appears at exactly one discrete leaf; leaves are still checked by
// is_automorphism before being reported. visit returns true to stop the search.
class IRSearch {
public:
    IRSearch(const Hypergraph& h, std::function<bool(const Permutation&)> visit)
        : h_(h), inc_(incidence_lists(h)), visit_(std::move(visit)) {}

    void run(const std::vector<std::vector<int>>& seed) {
        auto left = seed;
        auto right = seed;
        recurse(left, right);
    }

    long long nodes() const { return nodes_; }

private:
    bool recurse(std::vector<std::vector<int>>& left, std::vector<std::vector<int>>& right) {
        ++nodes_;
        Trace tl, tr;
        refine_cells(h_, inc_, left, tl);
        refine_cells(h_, inc_, right, tr);
        if (tl != tr) return false;

        int target = -1;
        size_t best = 0;
        for (int i = 0; i < static_cast<int>(left.size()); ++i) {
            if (left[i].size() > 1 && (target < 0 || left[i].size() < best)) {
                target = i;
                best = left[i].size();
            }
        }
        if (target < 0) {
            Permutation p = Permutation::identity(h_.vertex_count());
            for (int i = 0; i < static_cast<int>(left.size()); ++i)
                p.image[left[i][0]] = right[i][0];
            if (is_automorphism(h_, p)) return visit_(p);
            return false;
        }

        const int u = left[target][0];
        for (int w : right[target]) {
            auto next_left = individualize(left, target, u);
            auto next_right = individualize(right, target, w);
            if (recurse(next_left, next_right)) return true;
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<std::vector<int>> inc_;
    std::function<bool(const Permutation&)> visit_;
    long long nodes_ = 0;
};

std::vector<std::vector<int>> normalized_cells(const Hypergraph& h, const OrderedPartition& p) {
    const int n = h.vertex_count();
    std::vector<bool> seen(n, false);
    int covered = 0;
    auto cells = p.cells;
    for (auto& cell : cells) {
        std::sort(cell.begin(), cell.end());
        for (int v : cell) {
            if (v < 0 || v >= n || seen[v])
                throw Error(ErrorKind::InvalidParams, "cells do not partition the vertex set");
            seen[v] = true;
            ++covered;
        }
    }
    if (covered != n)
        throw Error(ErrorKind::InvalidParams, "cells do not partition the vertex set");
    return cells;
}

std::set<Permutation> close_under_composition(const std::vector<Permutation>& gens, int n,
                                              size_t cap) {
    std::set<Permutation> closure;
    std::vector<Permutation> queue;
    closure.insert(Permutation::identity(n));
    queue.push_back(Permutation::identity(n));
    while (!queue.empty()) {
        Permutation cur = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            Permutation prod = compose(g, cur);
            if (closure.size() >= cap && !closure.count(prod)) return closure;
            if (closure.insert(prod).second) queue.push_back(std::move(prod));
        }
    }
    return closure;
}

std::vector<Permutation> reduce_generators(const std::vector<Permutation>& elements, int n) {
    std::vector<Permutation> gens;
    std::set<Permutation> span;
    span.insert(Permutation::identity(n));
    for (const auto& e : elements) {
        if (span.count(e)) continue;
        gens.push_back(e);
        span = close_under_composition(gens, n, elements.size() + 1);
    }
    return gens;
}

} // namespace

OrderedPartition refine(const Hypergraph& h, const OrderedPartition& initial) {
    auto cells = normalized_cells(h, initial);
    Trace trace;
    refine_cells(h, incidence_lists(h), cells, trace);
    OrderedPartition out;
    out.cells = std::move(cells);
    return out;
}

std::optional<Permutation> find_nontrivial_automorphism(const Hypergraph& h) {
    if (h.vertex_count() < 2)
        throw Error(ErrorKind::TooFewVertices, "symmetry needs at least two vertices");
    if (auto twin = twin_swap_witness(h)) return twin;

    std::optional<Permutation> found;
    IRSearch search(h, [&](const Permutation& p) {
        if (p.is_identity()) return false;
        found = p;
        return true;
    });
    search.run(OrderedPartition::unit(h.vertex_count()).cells);
    return found;
}

AutReport analyze_symmetry(const Hypergraph& h) {
    if (h.vertex_count() < 2)
        throw Error(ErrorKind::TooFewVertices, "symmetry needs at least two vertices");
    AutReport report;
    if (auto twin = twin_swap_witness(h)) {
        report.witness = std::move(twin);
        report.asymmetric = false;
        return report;
    }
    std::optional<Permutation> found;
    IRSearch search(h, [&](const Permutation& p) {
        if (p.is_identity()) return false;
        found = p;
        return true;
    });
    search.run(OrderedPartition::unit(h.vertex_count()).cells);
    report.nodes_explored = search.nodes();
    report.witness = found;
    report.asymmetric = !found.has_value();
    if (report.asymmetric) report.group_order = 1;
    return report;
}

AutReport automorphism_group(const Hypergraph& h, long long limit) {
    if (h.vertex_count() < 2)
        throw Error(ErrorKind::TooFewVertices, "symmetry needs at least two vertices");
    if (limit < 1) throw Error(ErrorKind::InvalidParams, "limit must be at least 1");

    std::vector<Permutation> elements;
    bool complete = true;
    IRSearch search(h, [&](const Permutation& p) {
        elements.push_back(p);
        if (static_cast<long long>(elements.size()) > limit) {
            complete = false;
            return true;
        }
        return false;
    });
    search.run(OrderedPartition::unit(h.vertex_count()).cells);

    AutReport report;
    report.nodes_explored = search.nodes();
    for (const auto& e : elements) {
        if (!e.is_identity()) {
            report.witness = e;
            break;
        }
    }
    report.asymmetric = complete && !report.witness.has_value();
    if (complete) report.group_order = static_cast<long long>(elements.size());
    report.generators = reduce_generators(elements, h.vertex_count());
    return report;
}

std::optional<Permutation> edge_stabilizer_nontrivial(const Hypergraph& h, int edge) {
    if (edge < 0 || edge >= h.edge_count())
        throw Error(ErrorKind::IndexOutOfRange, "edge index " + std::to_string(edge) + " out of range");

    const int n = h.vertex_count();
    std::vector<bool> in_edge(n, false);
    for (int v : h.edges[edge]) in_edge[v] = true;
    std::vector<std::vector<int>> seed;
    seed.push_back(h.edges[edge]);
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_edge[v]) rest.push_back(v);
    if (!rest.empty()) seed.push_back(std::move(rest));

    std::optional<Permutation> found;
    IRSearch search(h, [&](const Permutation& p) {
        if (p.is_identity()) return false;
        found = p;
        return true;
    });
    search.run(seed);
    return found;
}

LEdgeAction classify_l_edge_action(const Hypergraph& g, const Permutation& p) {
    const int n = g.vertex_count();
    if (!is_automorphism(g, p))
        throw Error(ErrorKind::NotAnAutomorphism, "permutation does not preserve the edge set");
    if (!g.has_edge_names())
        throw Error(ErrorKind::InvalidParams, "hypergraph carries no construction edge names");

    // Recover the construction families from the label grammar.
    std::vector<int> u_of(n, 0), v_of(n, 0); // vertex -> 1-based cycle index, 0 = not in family
    for (int v = 0; v < n; ++v) {
        auto role = VertexRole::parse(g.vertex_labels[v]);
        if (!role || role->copy != 0 || role->prime)
            throw Error(ErrorKind::InvalidParams, "vertex labels do not follow the base construction grammar");
        if (role->tag == VertexRole::Tag::u) u_of[v] = role->i;
        if (role->tag == VertexRole::Tag::v) v_of[v] = role->i;
    }

    std::map<int, int> l_edge_by_index; // 1-based L-index -> edge position
    std::vector<int> l_index_of(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& name = g.edge_names[e];
        if (name.size() > 2 && name.rfind("E_", 0) == 0 && name[2] != '{') {
            int idx = std::stoi(name.substr(2));
            l_edge_by_index[idx] = e;
            l_index_of[e] = idx;
        }
    }
    const int tk = static_cast<int>(l_edge_by_index.size());
    if (tk < 3)
        throw Error(ErrorKind::InvalidParams, "edge names do not describe an L-edge cycle");
    for (int i = 1; i <= tk; ++i)
        if (!l_edge_by_index.count(i))
            throw Error(ErrorKind::InvalidParams, "L-edge indices are not contiguous");

    // u-set and v-set must be preserved.
    for (int v = 0; v < n; ++v) {
        if (u_of[v] != 0 && u_of[p.image[v]] == 0)
            throw Error(ErrorKind::StructureViolation, "image of a u-vertex is not a u-vertex");
        if (v_of[v] != 0 && v_of[p.image[v]] == 0)
            throw Error(ErrorKind::StructureViolation, "image of a v-vertex is not a v-vertex");
    }

    // Action on L-edges: sigma[i] with phi(E_i) = E_sigma(i).
    auto norm = [tk](int x) { return (x % tk + tk - 1) % tk + 1; };
    std::vector<int> sigma(tk + 1, 0);
    std::vector<int> mapped;
    for (int i = 1; i <= tk; ++i) {
        const auto& e = g.edges[l_edge_by_index[i]];
        mapped.clear();
        for (int v : e) mapped.push_back(p.image[v]);
        std::sort(mapped.begin(), mapped.end());
        auto pos = g.edge_index(mapped);
        if (!pos || l_index_of[*pos] == 0)
            throw Error(ErrorKind::StructureViolation, "image of an L-edge is not an L-edge");
        sigma[i] = l_index_of[*pos];
    }

    LEdgeAction action;
    action.j = sigma[1];
    bool rotation = true, reflection = true;
    for (int i = 1; i <= tk; ++i) {
        if (sigma[i] != norm(i + action.j - 1)) rotation = false;
        if (sigma[i] != norm(action.j - i + 1)) reflection = false;
    }
    if (rotation) {
        action.kind = LEdgeAction::Kind::rotation;
    } else if (reflection) {
        action.kind = LEdgeAction::Kind::reflection;
    } else {
        throw Error(ErrorKind::StructureViolation, "L-edge action is neither a rotation nor a reflection");
    }
    return action;
}

} // namespace asym
