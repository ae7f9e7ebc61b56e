#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "convoy/clustering.hpp"
#include "convoy/trajectory.hpp"

namespace convoy {

struct QueryParams {
    std::size_t m = 2;   // min objects
    Tick k = 1;          // min lifetime in consecutive ticks
    double e = 1.0;      // neighborhood range
};

struct Candidate {
    std::set<std::string> members;
    Tick start = 0;
    Tick end = 0;
    Tick lifetime = 0;
    // Union of the clusters chained into this candidate. Objects outside
    // `members` can still be the density bridges that connect the members at
    // individual timestamps, so refinement must run over this set; empty
    // means "just the members".
    std::set<std::string> scope;

    friend bool operator<(const Candidate& a, const Candidate& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.end != b.end) return a.end < b.end;
        return a.members < b.members;
    }
    friend bool operator==(const Candidate& a, const Candidate& b) {
        return a.start == b.start && a.end == b.end && a.members == b.members;
    }
};

struct Convoy {
    std::set<std::string> members;
    Tick start = 0;
    Tick end = 0;

    Tick lifetime() const { return end - start + 1; }
    friend bool operator<(const Convoy& a, const Convoy& b) {
        if (a.start != b.start) return a.start < b.start;
        if (a.end != b.end) return a.end < b.end;
        return a.members < b.members;
    }
    friend bool operator==(const Convoy& a, const Convoy& b) {
        return a.start == b.start && a.end == b.end && a.members == b.members;
    }
};

enum class Variant { CMC, CuTS, CuTSPlus, CuTSStar };

Variant parse_variant(const std::string& name);  // cmc | cuts | cuts+ | cuts*
std::string variant_name(Variant v);

Simplifier variant_simplifier(Variant v);
RangeSearchMode variant_mode(Variant v);

struct VariantConfig {
    Variant variant = Variant::CuTSStar;
    double delta = 0.0;
    Tick lambda = 2;
    bool delta_auto = false;
    bool lambda_auto = false;
};

struct RunStats {
    double simplify_ms = 0.0;
    double filter_ms = 0.0;
    double refine_ms = 0.0;
    double total_ms = 0.0;
    std::size_t candidate_count = 0;
    unsigned long long refinement_units = 0;
    double reduction_ratio = 0.0;
    double delta = 0.0;
    Tick lambda = 0;
    bool delta_fallback = false;
    std::size_t convoy_count = 0;
    std::string kernel;
};

// Per-timestamp snapshot clustering with candidate intersection chaining;
// the exact baseline. The optional window restricts the ticks considered.
std::vector<Convoy> cmc(const std::vector<Trajectory>& O, const QueryParams& q,
                        std::optional<std::pair<Tick, Tick>> window = std::nullopt);

std::vector<Candidate> cuts_filter(const std::vector<Trajectory>& O, const QueryParams& q,
                                   const VariantConfig& cfg, RunStats* stats = nullptr);

std::vector<Convoy> cuts_refine(const std::vector<Candidate>& cands,
                                const std::vector<Trajectory>& O, const QueryParams& q,
                                std::size_t threads = 1);

struct DiscoveryResult {
    std::vector<Convoy> convoys;
    RunStats stats;
};

DiscoveryResult discover(const std::vector<Trajectory>& O, const QueryParams& q,
                         Variant variant, std::optional<double> delta = std::nullopt,
                         std::optional<Tick> lambda = std::nullopt, std::size_t threads = 1);

// Moving-cluster chains (Jaccard overlap >= theta between consecutive
// snapshot clusters). No lifetime constraint, no intersection shrinking;
// baseline for the accuracy comparison only.
std::vector<Candidate> mc2(const std::vector<Trajectory>& O, double theta, double e,
                           std::size_t m);

// Exhaustive oracle: chains cluster intersections from every start tick.
// Guarded to desk scale.
std::vector<Convoy> brute_force(const std::vector<Trajectory>& O, const QueryParams& q);

// Drop convoys dominated by another with superset members and covering
// interval; dedupe; sort. Canonical form for all comparisons and output.
std::vector<Convoy> normalize(std::vector<Convoy> convoys);

struct AccuracyReport {
    double false_positive_pct = 0.0;
    double false_negative_pct = 0.0;
};

AccuracyReport accuracy_report(const std::vector<Convoy>& reference,
                               const std::vector<Candidate>& trial);

unsigned long long refinement_unit(const std::vector<Candidate>& cands);

}  // namespace convoy
