#pragma once
#ifndef PATHREACH_DIGRAPH_HPP
#define PATHREACH_DIGRAPH_HPP

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pathreach {

using VertexId = std::uint32_t;
using EdgeId = std::size_t;

struct Edge {
    VertexId source = 0;
    VertexId target = 0;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
    return os << '(' << e.source << ',' << e.target << ')';
}

struct DegreePair {
    std::size_t indeg = 0;
    std::size_t outdeg = 0;

    friend constexpr bool operator==(const DegreePair&, const DegreePair&) = default;
};

// Raised for malformed graph or decomposition text. Carries the 1-based line
// number of the offending line (0 when the problem is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Immutable simple digraph over vertex ids [0, n).
//
// Both adjacency directions are held in CSR form with neighbour lists sorted
// ascending. Edge ids are positions in the outgoing CSR, so edges are numbered
// in (source, target) lexicographic order.
class Digraph {
public:
    Digraph() : out_offsets_(1, 0), in_offsets_(1, 0) {}

    // Throws std::invalid_argument on a loop, a repeated edge or an endpoint >= n.
    Digraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
        for (const Edge& e : edges) {
            if (e.source >= n || e.target >= n) {
                std::ostringstream msg;
                msg << "edge " << e << " has an endpoint outside [0, " << n << ")";
                throw std::invalid_argument(msg.str());
            }
            if (e.source == e.target) {
                std::ostringstream msg;
                msg << "loop edge " << e;
                throw std::invalid_argument(msg.str());
            }
        }
        std::sort(edges.begin(), edges.end());
        if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
            std::ostringstream msg;
            msg << "multiple arcs " << *dup;
            throw std::invalid_argument(msg.str());
        }

        out_offsets_.assign(n + 1, 0);
        in_offsets_.assign(n + 1, 0);
        for (const Edge& e : edges) {
            ++out_offsets_[e.source + 1];
            ++in_offsets_[e.target + 1];
        }
        for (std::size_t v = 0; v < n; ++v) {
            out_offsets_[v + 1] += out_offsets_[v];
            in_offsets_[v + 1] += in_offsets_[v];
        }

        sources_.reserve(edges.size());
        targets_.reserve(edges.size());
        for (const Edge& e : edges) {
            sources_.push_back(e.source);
            targets_.push_back(e.target);
        }

        // Sorted (source, target) order fills every in-list in ascending source order.
        in_sources_.resize(edges.size());
        in_edges_.resize(edges.size());
        std::vector<std::size_t> fill(in_offsets_.begin(), in_offsets_.end() - 1);
        for (EdgeId id = 0; id < edges.size(); ++id) {
            const std::size_t slot = fill[edges[id].target]++;
            in_sources_[slot] = edges[id].source;
            in_edges_[slot] = id;
        }
    }

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return targets_.size(); }

    std::span<const VertexId> successors(VertexId v) const {
        check_vertex(v);
        return {targets_.data() + out_offsets_[v], targets_.data() + out_offsets_[v + 1]};
    }

    std::span<const VertexId> predecessors(VertexId v) const {
        check_vertex(v);
        return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
    }

    // Outgoing edges of v occupy the id range [first_out_edge(v), first_out_edge(v) + outdeg).
    EdgeId first_out_edge(VertexId v) const {
        check_vertex(v);
        return out_offsets_[v];
    }

    // Ids of the incoming edges of v, ascending by source.
    std::span<const EdgeId> in_edge_ids(VertexId v) const {
        check_vertex(v);
        return {in_edges_.data() + in_offsets_[v], in_edges_.data() + in_offsets_[v + 1]};
    }

    Edge edge(EdgeId id) const {
        if (id >= edge_count()) {
            throw std::out_of_range("edge id " + std::to_string(id) + " out of range");
        }
        return {sources_[id], targets_[id]};
    }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const {
        if (u >= n_ || v >= n_) {
            return std::nullopt;
        }
        const auto first = targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u]);
        const auto last = targets_.begin() + static_cast<std::ptrdiff_t>(out_offsets_[u + 1]);
        const auto it = std::lower_bound(first, last, v);
        if (it == last || *it != v) {
            return std::nullopt;
        }
        return static_cast<EdgeId>(it - targets_.begin());
    }

    bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

    // All edges in (source, target) order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count());
        for (EdgeId id = 0; id < edge_count(); ++id) {
            out.push_back({sources_[id], targets_[id]});
        }
        return out;
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.sources_ == b.sources_ && a.targets_ == b.targets_;
    }

private:
    void check_vertex(VertexId v) const {
        if (v >= n_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
        }
    }

    std::size_t n_ = 0;
    std::vector<std::size_t> out_offsets_;
    std::vector<VertexId> sources_;
    std::vector<VertexId> targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<VertexId> in_sources_;
    std::vector<EdgeId> in_edges_;
};

inline DegreePair degrees(const Digraph& g, VertexId v) {
    return {g.predecessors(v).size(), g.successors(v).size()};
}

// Kahn's algorithm: acyclic iff every vertex can be peeled off at indegree zero.
inline bool is_acyclic(const Digraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> remaining(n);
    std::vector<VertexId> ready;
    for (VertexId v = 0; v < n; ++v) {
        remaining[v] = g.predecessors(v).size();
        if (remaining[v] == 0) {
            ready.push_back(v);
        }
    }
    std::size_t peeled = 0;
    while (!ready.empty()) {
        const VertexId v = ready.back();
        ready.pop_back();
        ++peeled;
        for (VertexId w : g.successors(v)) {
            if (--remaining[w] == 0) {
                ready.push_back(w);
            }
        }
    }
    return peeled == n;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            tokens.push_back(line.substr(start, i - start));
        }
    }
    return tokens;
}

template <class Int>
Int parse_uint(std::string_view token, std::size_t line_no, const char* what) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

// Calls fn(line_no, tokens) for every line that is neither blank nor a comment.
template <class Fn>
void for_each_content_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') {
            continue;
        }
        fn(line_no, tokens);
    }
}

}  // namespace detail

// Reads the text graph format:
//
//   # comment
//   n <N>
//   e <u> <v>
//
// The header must come once, before any edge line. Loops, repeated edges and
// out-of-range endpoints are rejected with ParseError.
inline Digraph parse_graph(std::istream& in) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::vector<std::size_t> edge_lines;
    detail::for_each_content_line(in, [&](std::size_t line_no, const auto& tokens) {
        if (tokens[0] == "n") {
            if (n) {
                throw ParseError(line_no, "duplicate header line");
            }
            if (tokens.size() != 2) {
                throw ParseError(line_no, "header must be 'n <N>'");
            }
            n = detail::parse_uint<std::size_t>(tokens[1], line_no, "vertex count");
            if (*n > std::size_t{1} << 32) {
                throw ParseError(line_no, "vertex count too large");
            }
        } else if (tokens[0] == "e") {
            if (!n) {
                throw ParseError(line_no, "edge line before header");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "edge line must be 'e <u> <v>'");
            }
            const auto u = detail::parse_uint<VertexId>(tokens[1], line_no, "vertex id");
            const auto v = detail::parse_uint<VertexId>(tokens[2], line_no, "vertex id");
            if (u >= *n || v >= *n) {
                throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(*n) + ")");
            }
            if (u == v) {
                throw ParseError(line_no, "loop edge on vertex " + std::to_string(u));
            }
            edges.push_back({u, v});
            edge_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unrecognised line '" + std::string(tokens[0]) + "'");
        }
    });
    if (!n) {
        throw ParseError(0, "missing header line 'n <N>'");
    }

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            std::ostringstream msg;
            msg << "duplicate edge " << edges[order[i]];
            throw ParseError(edge_lines[order[i]], msg.str());
        }
    }
    return Digraph(*n, std::move(edges));
}

inline Digraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

// Canonical form: header then edges in (source, target) order, LF endings.
inline void write_graph(std::ostream& out, const Digraph& g) {
    out << "n " << g.vertex_count() << '\n';
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge e = g.edge(id);
        out << "e " << e.source << ' ' << e.target << '\n';
    }
}

inline std::string serialize_graph(const Digraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

}  // namespace pathreach

#endif  // PATHREACH_DIGRAPH_HPP
