#pragma once
#ifndef PATHREACH_DECOMPOSITION_HPP
#define PATHREACH_DECOMPOSITION_HPP

#include "pathreach/digraph.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathreach {

// A directed walk: a nonempty vertex sequence whose consecutive entries differ.
// Vertices may repeat; the walk is a simple path when none do.
class Walk {
public:
    explicit Walk(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) {
            throw std::invalid_argument("walk must contain at least one vertex");
        }
        for (std::size_t q = 1; q < vertices_.size(); ++q) {
            if (vertices_[q] == vertices_[q - 1]) {
                throw std::invalid_argument("walk steps from vertex " +
                                            std::to_string(vertices_[q]) + " to itself");
            }
        }
    }

    Walk(std::initializer_list<VertexId> vertices) : Walk(std::vector<VertexId>(vertices)) {}

    std::size_t size() const noexcept { return vertices_.size(); }
    std::size_t step_count() const noexcept { return vertices_.size() - 1; }
    VertexId operator[](std::size_t q) const { return vertices_[q]; }
    VertexId front() const { return vertices_.front(); }
    VertexId back() const { return vertices_.back(); }
    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    Edge step(std::size_t q) const { return {vertices_.at(q), vertices_.at(q + 1)}; }

    bool is_simple() const {
        std::vector<VertexId> sorted(vertices_);
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }

    friend bool operator==(const Walk&, const Walk&) = default;

private:
    std::vector<VertexId> vertices_;
};

// An ordered family of k walks; walk indices are positions in the family.
// A path decomposition is the special case checked by validate_path_decomposition.
class WalkDecomposition {
public:
    WalkDecomposition() = default;
    explicit WalkDecomposition(std::vector<Walk> walks) : walks_(std::move(walks)) {}
    WalkDecomposition(std::initializer_list<Walk> walks) : walks_(walks) {}

    std::size_t size() const noexcept { return walks_.size(); }
    bool empty() const noexcept { return walks_.empty(); }
    const Walk& operator[](std::size_t i) const { return walks_[i]; }
    std::span<const Walk> walks() const noexcept { return walks_; }
    auto begin() const noexcept { return walks_.begin(); }
    auto end() const noexcept { return walks_.end(); }

    // Sum of walk lengths in vertices.
    std::size_t total_length() const {
        std::size_t total = 0;
        for (const Walk& w : walks_) {
            total += w.size();
        }
        return total;
    }

    // One past the largest vertex id mentioned; 0 for an empty family.
    std::size_t vertex_bound() const {
        std::size_t bound = 0;
        for (const Walk& w : walks_) {
            for (VertexId v : w) {
                bound = std::max<std::size_t>(bound, std::size_t{v} + 1);
            }
        }
        return bound;
    }

    friend bool operator==(const WalkDecomposition&, const WalkDecomposition&) = default;

private:
    std::vector<Walk> walks_;
};

enum class ViolationKind { NotSimple, EdgeNotInGraph, EdgeRepeated, EdgeUncovered };

inline std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::NotSimple:
        return "NOT_SIMPLE";
    case ViolationKind::EdgeNotInGraph:
        return "EDGE_NOT_IN_GRAPH";
    case ViolationKind::EdgeRepeated:
        return "EDGE_REPEATED";
    case ViolationKind::EdgeUncovered:
        return "EDGE_UNCOVERED";
    }
    return "UNKNOWN";
}

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }

    bool contains(ViolationKind kind) const {
        return std::any_of(violations.begin(), violations.end(),
                           [kind](const Violation& v) { return v.kind == kind; });
    }

    bool contains(ViolationKind kind, std::string_view detail_fragment) const {
        return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
            return v.kind == kind && v.detail.find(detail_fragment) != std::string::npos;
        });
    }
};

// Digraph whose edge set is the deduplicated union of all walk steps.
// Throws std::out_of_range if a walk mentions a vertex >= n.
inline Digraph union_graph(const WalkDecomposition& w, std::size_t n) {
    std::vector<Edge> steps;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (VertexId v : w[i]) {
            if (v >= n) {
                throw std::out_of_range("walk " + std::to_string(i) + " mentions vertex " +
                                        std::to_string(v) + " outside [0, " + std::to_string(n) +
                                        ")");
            }
        }
        for (std::size_t q = 0; q < w[i].step_count(); ++q) {
            steps.push_back(w[i].step(q));
        }
    }
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    return Digraph(n, std::move(steps));
}

namespace detail {

inline std::string describe_step(std::size_t walk, std::size_t q, const Edge& e) {
    std::ostringstream s;
    s << "edge " << e << " at walk " << walk << " step " << q;
    return s.str();
}

inline std::string describe_edge(const Edge& e) {
    std::ostringstream s;
    s << "edge " << e;
    return s.str();
}

// Marks every step that names an edge of g; reports the ones that do not.
// Returns per-edge use counts.
inline std::vector<std::size_t> tally_steps(const Digraph& g, const WalkDecomposition& w,
                                            ValidationReport& report, bool report_repeats) {
    std::vector<std::size_t> uses(g.edge_count(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t q = 0; q < w[i].step_count(); ++q) {
            const Edge e = w[i].step(q);
            const auto id = g.find_edge(e.source, e.target);
            if (!id) {
                report.violations.push_back(
                    {ViolationKind::EdgeNotInGraph, describe_step(i, q, e)});
                continue;
            }
            if (++uses[*id] == 2 && report_repeats) {
                report.violations.push_back({ViolationKind::EdgeRepeated, describe_step(i, q, e)});
            }
        }
    }
    return uses;
}

inline void report_uncovered(const Digraph& g, const std::vector<std::size_t>& uses,
                             ValidationReport& report) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        if (uses[id] == 0) {
            report.violations.push_back({ViolationKind::EdgeUncovered, describe_edge(g.edge(id))});
        }
    }
}

}  // namespace detail

// Checks that p partitions the edges of g into simple paths. All violations are
// collected. Single-vertex walks carry no edges and are ignored.
inline ValidationReport validate_path_decomposition(const Digraph& g, const WalkDecomposition& p) {
    ValidationReport report;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].size() > 1 && !p[i].is_simple()) {
            report.violations.push_back(
                {ViolationKind::NotSimple, "walk " + std::to_string(i) + " repeats a vertex"});
        }
    }
    const auto uses = detail::tally_steps(g, p, report, true);
    detail::report_uncovered(g, uses, report);
    return report;
}

// Checks that the union graph of w is exactly g. Repeated vertices and shared
// steps are allowed.
inline ValidationReport validate_walk_decomposition(const Digraph& g, const WalkDecomposition& w) {
    ValidationReport report;
    const auto uses = detail::tally_steps(g, w, report, false);
    detail::report_uncovered(g, uses, report);
    return report;
}

// Sum of max(0, outdeg - indeg) over all vertices: no path decomposition of g
// can use fewer paths, since every path starts at most one surplus edge.
inline std::size_t path_number_lower_bound(const Digraph& g) {
    std::size_t bound = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const DegreePair d = degrees(g, v);
        if (d.outdeg > d.indeg) {
            bound += d.outdeg - d.indeg;
        }
    }
    return bound;
}

// Decomposition text format: one walk per non-blank, non-'#' line, written as
// whitespace-separated vertex ids in traversal order.
inline WalkDecomposition parse_decomposition(std::istream& in) {
    std::vector<Walk> walks;
    detail::for_each_content_line(in, [&](std::size_t line_no, const auto& tokens) {
        std::vector<VertexId> vertices;
        vertices.reserve(tokens.size());
        for (std::string_view tok : tokens) {
            vertices.push_back(detail::parse_uint<VertexId>(tok, line_no, "vertex id"));
        }
        try {
            walks.emplace_back(std::move(vertices));
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, e.what());
        }
    });
    return WalkDecomposition(std::move(walks));
}

inline WalkDecomposition parse_decomposition(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_decomposition(in);
}

inline void write_decomposition(std::ostream& out, const WalkDecomposition& w) {
    for (const Walk& walk : w) {
        for (std::size_t q = 0; q < walk.size(); ++q) {
            if (q > 0) {
                out << ' ';
            }
            out << walk[q];
        }
        out << '\n';
    }
}

inline std::string serialize_decomposition(const WalkDecomposition& w) {
    std::ostringstream out;
    write_decomposition(out, w);
    return out.str();
}

}  // namespace pathreach

#endif  // PATHREACH_DECOMPOSITION_HPP
