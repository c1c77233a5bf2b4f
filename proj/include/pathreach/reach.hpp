#pragma once
#ifndef PATHREACH_REACH_HPP
#define PATHREACH_REACH_HPP

#include "pathreach/decomposition.hpp"
#include "pathreach/register_meter.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathreach {

// Index into a walk's vertex sequence.
using Position = std::size_t;

inline std::optional<Position> earliest_occurrence(const Walk& walk, VertexId v) {
    for (Position q = 0; q < walk.size(); ++q) {
        if (walk[q] == v) {
            return q;
        }
    }
    return std::nullopt;
}

// True iff v sits at some position >= start. The comparison is non-strict, so
// the vertex at `start` itself counts.
inline bool occurs_from(const Walk& walk, Position start, VertexId v) {
    if (start >= walk.size()) {
        throw std::out_of_range("start position " + std::to_string(start) +
                                " outside walk of length " + std::to_string(walk.size()));
    }
    for (Position p = start; p < walk.size(); ++p) {
        if (walk[p] == v) {
            return true;
        }
    }
    return false;
}

// One pair of registers per walk.
//
// After l completed frontier advances, current[i] holds the smallest position q
// at which a route from the source can be on walk i using at most l switches,
// or nullopt when there is none. Starting at an occurrence of the source is
// free; joining walk i anywhere else costs one switch. Everything at or after
// current[i] on walk i is then reachable within the same budget.
// `next` is the staging register an advance writes before the copy-back.
struct FrontierRegisters {
    std::vector<std::optional<Position>> current;
    std::vector<std::optional<Position>> next;

    FrontierRegisters() = default;
    explicit FrontierRegisters(std::size_t k) : current(k), next(k) {}
    explicit FrontierRegisters(std::vector<std::optional<Position>> initial)
        : current(std::move(initial)), next(current.size()) {}

    std::size_t size() const noexcept { return current.size(); }

    friend bool operator==(const FrontierRegisters&, const FrontierRegisters&) = default;
};

struct ReachResult {
    bool reachable = false;
    // Fewest switches between walks on any source-to-target route.
    std::optional<std::size_t> min_switches;
    // Frontier advances performed.
    std::size_t iterations = 0;
    // Meter reading: 2k registers plus scalar scratch.
    std::size_t peak_words = 0;

    friend bool operator==(const ReachResult&, const ReachResult&) = default;
};

namespace detail {

// Does x occur at or after the frontier on some walk? Scalars: the walk index
// and the scan cursor inside occurs_from.
inline bool on_frontier(const WalkDecomposition& w, const FrontierRegisters& regs, VertexId x) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (regs.current[i] && occurs_from(w[i], *regs.current[i], x)) {
            return true;
        }
    }
    return false;
}

// One synchronous frontier advance: every next[j] is computed from the old
// current[] values, then copied back. Returns whether any register moved.
//
// current[j] always qualifies for its own walk, so only positions before it
// need scanning; the frontier can only move toward the front of a walk.
// Scalars: walk index, position, vertex, plus those of on_frontier.
inline bool advance_registers(const WalkDecomposition& w, FrontierRegisters& regs) {
    for (std::size_t j = 0; j < w.size(); ++j) {
        const Walk& walk = w[j];
        regs.next[j] = regs.current[j];
        for (Position q = 0; q < regs.current[j].value_or(walk.size()); ++q) {
            const VertexId x = walk[q];
            if (on_frontier(w, regs, x)) {
                regs.next[j] = q;
                break;
            }
        }
    }
    bool changed = false;
    for (std::size_t j = 0; j < w.size(); ++j) {
        changed = changed || regs.next[j] != regs.current[j];
        regs.current[j] = regs.next[j];
    }
    return changed;
}

inline void check_registers(const WalkDecomposition& w, const FrontierRegisters& regs) {
    if (regs.current.size() != w.size() || regs.next.size() != w.size()) {
        throw std::invalid_argument("register count does not match walk count");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (regs.current[i] && *regs.current[i] >= w[i].size()) {
            throw std::invalid_argument("register " + std::to_string(i) + " points past its walk");
        }
    }
}

}  // namespace detail

// Single frontier advance, exposed for testing the register semantics.
inline FrontierRegisters advance_frontier(const WalkDecomposition& w, FrontierRegisters regs) {
    detail::check_registers(w, regs);
    detail::advance_registers(w, regs);
    return regs;
}

// Decides whether t is reachable from s in the union graph of w while holding
// only 2k position registers and a constant number of scalar cells.
//
// The working frame is reserved on the meter at entry: the registers, the
// iteration counter, the changed flag, and the five scalars of the helpers
// above, 2k + 7 words for every query.
//
//  - s == t is reachable with zero switches.
//  - If t follows the earliest s on some walk, it is reachable with zero
//    switches and no frontier advance happens.
//  - Otherwise each iteration advances the frontier once; if nothing moved the
//    search is exhausted, else t is checked against the new frontier. The
//    iteration on which t first appears is the minimum switch count.
//
// Throws std::out_of_range if s or t is not below n.
inline ReachResult decide_reachability(const WalkDecomposition& w, std::size_t n, VertexId s,
                                       VertexId t) {
    if (s >= n || t >= n) {
        throw std::out_of_range("query vertex outside [0, " + std::to_string(n) + ")");
    }
    const std::size_t k = w.size();
    RegisterMeter meter;
    const ScratchWords registers(meter, 2 * k);
    const ScratchWords counter_and_flag(meter, 2);
    const ScratchWords advance_scalars(meter, 3);
    const ScratchWords frontier_scalars(meter, 2);

    ReachResult result;
    if (s == t) {
        result.reachable = true;
        result.min_switches = 0;
        result.peak_words = meter.peak_words();
        return result;
    }

    FrontierRegisters regs(k);
    bool any_active = false;
    for (std::size_t i = 0; i < k; ++i) {
        regs.current[i] = earliest_occurrence(w[i], s);
        any_active = any_active || regs.current[i].has_value();
    }
    if (detail::on_frontier(w, regs, t)) {
        result.reachable = true;
        result.min_switches = 0;
        result.peak_words = meter.peak_words();
        return result;
    }

    if (any_active) {
        for (;;) {
            ++result.iterations;
            if (!detail::advance_registers(w, regs)) {
                break;
            }
            if (detail::on_frontier(w, regs, t)) {
                result.reachable = true;
                result.min_switches = result.iterations;
                break;
            }
        }
    }
    result.peak_words = meter.peak_words();
    return result;
}

// Query against the union graph's own vertex range.
inline ReachResult decide_reachability(const WalkDecomposition& w, VertexId s, VertexId t) {
    return decide_reachability(w, w.vertex_bound(), s, t);
}

}  // namespace pathreach

#endif  // PATHREACH_REACH_HPP
