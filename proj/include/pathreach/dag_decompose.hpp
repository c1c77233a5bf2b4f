#pragma once
#ifndef PATHREACH_DAG_DECOMPOSE_HPP
#define PATHREACH_DAG_DECOMPOSE_HPP

#include "pathreach/decomposition.hpp"
#include "pathreach/digraph.hpp"
#include "pathreach/register_meter.hpp"

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathreach {

class NotAcyclicError : public std::invalid_argument {
public:
    NotAcyclicError() : std::invalid_argument("graph is not acyclic") {}
};

// Two 1-based labels per edge (u, v): its rank among the incoming edges of v
// and its rank among the outgoing edges of u. Both are stored by EdgeId.
class EdgeIndexing {
public:
    EdgeIndexing() = default;

    // Throws std::invalid_argument unless, at every vertex, the incoming labels
    // are a permutation of 1..indeg and the outgoing labels of 1..outdeg.
    EdgeIndexing(const Digraph& g, std::vector<std::uint32_t> in_index,
                 std::vector<std::uint32_t> out_index)
        : in_index_(std::move(in_index)), out_index_(std::move(out_index)) {
        if (in_index_.size() != g.edge_count() || out_index_.size() != g.edge_count()) {
            throw std::invalid_argument("edge indexing size does not match edge count");
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<bool> seen(g.predecessors(v).size() + 1, false);
            for (EdgeId id : g.in_edge_ids(v)) {
                claim(seen, in_index_[id], "incoming", v);
            }
            seen.assign(g.successors(v).size() + 1, false);
            const EdgeId first = g.first_out_edge(v);
            for (EdgeId id = first; id < first + g.successors(v).size(); ++id) {
                claim(seen, out_index_[id], "outgoing", v);
            }
        }
    }

    std::uint32_t in_index(EdgeId id) const { return in_index_.at(id); }
    std::uint32_t out_index(EdgeId id) const { return out_index_.at(id); }
    std::size_t size() const noexcept { return in_index_.size(); }

private:
    static void claim(std::vector<bool>& seen, std::uint32_t label, const char* side, VertexId v) {
        if (label == 0 || label >= seen.size() || seen[label]) {
            throw std::invalid_argument(std::string(side) + " labels at vertex " +
                                        std::to_string(v) + " are not a permutation");
        }
        seen[label] = true;
    }

    std::vector<std::uint32_t> in_index_;
    std::vector<std::uint32_t> out_index_;
};

// Incoming edges of v are labelled in ascending source order, outgoing edges
// of u in ascending target order.
inline EdgeIndexing assign_edge_indices(const Digraph& g) {
    std::vector<std::uint32_t> in_index(g.edge_count());
    std::vector<std::uint32_t> out_index(g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto incoming = g.in_edge_ids(v);
        for (std::size_t r = 0; r < incoming.size(); ++r) {
            in_index[incoming[r]] = static_cast<std::uint32_t>(r + 1);
        }
        const EdgeId first = g.first_out_edge(v);
        for (std::size_t r = 0; r < g.successors(v).size(); ++r) {
            out_index[first + r] = static_cast<std::uint32_t>(r + 1);
        }
    }
    return EdgeIndexing(g, std::move(in_index), std::move(out_index));
}

namespace detail {

// Follows matching labels from `start` until the head vertex has no outgoing
// edge carrying the label we arrived with. Charges three cells: the current
// vertex, the arrival label, and the out-edge cursor.
inline Walk trace_unchecked(const Digraph& g, const EdgeIndexing& idx, EdgeId start,
                            RegisterMeter& meter) {
    const ScratchWords vertex_cell(meter);
    const ScratchWords label_cell(meter);
    const ScratchWords cursor_cell(meter);

    const Edge first = g.edge(start);
    std::vector<VertexId> path{first.source, first.target};
    VertexId at = first.target;
    std::uint32_t label = idx.in_index(start);
    for (;;) {
        EdgeId e = g.first_out_edge(at);
        while (e < g.first_out_edge(at) + g.successors(at).size() && idx.out_index(e) != label) {
            ++e;
        }
        if (e == g.first_out_edge(at) + g.successors(at).size()) {
            break;
        }
        label = idx.in_index(e);
        at = g.edge(e).target;
        path.push_back(at);
    }
    return Walk(std::move(path));
}

inline bool is_start_edge(const Digraph& g, const EdgeIndexing& idx, EdgeId id) {
    return idx.out_index(id) > g.predecessors(g.edge(id).source).size();
}

}  // namespace detail

// Path beginning with the surplus edge `start`. Throws NotAcyclicError on a
// cyclic graph and std::invalid_argument if `start` is missing from g or its
// outgoing label does not exceed the indegree of its tail.
inline Walk trace_path(const Digraph& g, const EdgeIndexing& idx, const Edge& start) {
    if (!is_acyclic(g)) {
        throw NotAcyclicError();
    }
    const auto id = g.find_edge(start.source, start.target);
    if (!id) {
        std::ostringstream msg;
        msg << "start edge " << start << " is not in the graph";
        throw std::invalid_argument(msg.str());
    }
    if (!detail::is_start_edge(g, idx, *id)) {
        std::ostringstream msg;
        msg << "start edge " << start << " has out-index " << idx.out_index(*id)
            << " not above the indegree of its tail";
        throw std::invalid_argument(msg.str());
    }
    RegisterMeter unused;
    return detail::trace_unchecked(g, idx, *id, unused);
}

// Minimal path decomposition of a DAG: one path per surplus edge, emitted in
// ascending (start vertex, out-index) order. The path count equals
// path_number_lower_bound(g).
//
// Any valid indexing gives a minimal decomposition; the default is
// assign_edge_indices(g). If `meter` is given, it is charged for the
// enumeration and tracing cells only.
inline WalkDecomposition minimal_path_decomposition(const Digraph& g, const EdgeIndexing& idx,
                                                    RegisterMeter* meter = nullptr) {
    if (!is_acyclic(g)) {
        throw NotAcyclicError();
    }
    if (idx.size() != g.edge_count()) {
        throw std::invalid_argument("edge indexing does not belong to this graph");
    }
    RegisterMeter local;
    RegisterMeter& m = meter ? *meter : local;

    std::vector<Walk> paths;
    const ScratchWords vertex_cell(m);
    const ScratchWords label_cell(m);
    const ScratchWords cursor_cell(m);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        // Surplus labels in ascending order, whatever the edge id layout.
        for (auto label = static_cast<std::uint32_t>(g.predecessors(v).size()) + 1;
             label <= g.successors(v).size(); ++label) {
            for (EdgeId e = g.first_out_edge(v); e < g.first_out_edge(v) + g.successors(v).size();
                 ++e) {
                if (idx.out_index(e) == label) {
                    paths.push_back(detail::trace_unchecked(g, idx, e, m));
                    break;
                }
            }
        }
    }
    return WalkDecomposition(std::move(paths));
}

inline WalkDecomposition minimal_path_decomposition(const Digraph& g,
                                                    RegisterMeter* meter = nullptr) {
    if (!is_acyclic(g)) {
        throw NotAcyclicError();
    }
    return minimal_path_decomposition(g, assign_edge_indices(g), meter);
}

}  // namespace pathreach

#endif  // PATHREACH_DAG_DECOMPOSE_HPP
