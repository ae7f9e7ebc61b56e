#include "convoy/convoy.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "convoy/autoparam.hpp"
#include "convoy/kernels.hpp"
#include "convoy/partition.hpp"

namespace convoy {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::set<std::string> intersect(const std::set<std::string>& a,
                                const std::set<std::string>& b) {
    std::set<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

}  // namespace

Variant parse_variant(const std::string& name) {
    if (name == "cmc") return Variant::CMC;
    if (name == "cuts") return Variant::CuTS;
    if (name == "cuts+") return Variant::CuTSPlus;
    if (name == "cuts*") return Variant::CuTSStar;
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::CMC: return "cmc";
        case Variant::CuTS: return "cuts";
        case Variant::CuTSPlus: return "cuts+";
        default: return "cuts*";
    }
}

Simplifier variant_simplifier(Variant v) {
    switch (v) {
        case Variant::CuTS: return Simplifier::DP;
        case Variant::CuTSPlus: return Simplifier::DPPlus;
        case Variant::CuTSStar: return Simplifier::DPStar;
        default: throw std::invalid_argument("cmc has no simplifier");
    }
}

RangeSearchMode variant_mode(Variant v) {
    return v == Variant::CuTSStar ? RangeSearchMode::Star : RangeSearchMode::LL;
}

std::vector<Convoy> cmc(const std::vector<Trajectory>& O, const QueryParams& q,
                        std::optional<std::pair<Tick, Tick>> window) {
    auto [lo, hi] = window ? *window : time_domain(O);
    std::vector<Candidate> V;
    std::vector<Convoy> result;
    auto flush = [&](const Candidate& v) {
        if (v.end - v.start + 1 >= q.k) result.push_back({v.members, v.start, v.end});
    };
    for (Tick t = lo; t <= hi; ++t) {
        std::vector<std::pair<std::string, Point2>> Ot;
        for (const auto& o : O)
            if (auto p = sample_at(o, t)) Ot.emplace_back(o.id, *p);
        if (Ot.size() < q.m) continue;
        auto C = dbscan_points(Ot, q.e, q.m);
        std::set<Candidate> V_next;
        for (const auto& v : V) {
            // A candidate continued only by proper subsets may still be a
            // maximal convoy over its interval so far, so flush it; if some
            // cluster carries the full member set forward the longer interval
            // will dominate it later.
            bool full = false;
            for (const auto& c : C) {
                auto common = intersect(c.members, v.members);
                if (common.size() >= q.m) {
                    if (common.size() == v.members.size()) full = true;
                    V_next.insert({std::move(common), v.start, t, 0, {}});
                }
            }
            if (!full) flush(v);
        }
        // every cluster also starts a fresh chain: a subgroup inside a larger
        // cluster can outlive it
        for (const auto& c : C) V_next.insert({c.members, t, t, 0, {}});
        // identical member sets evolve identically; keep the earliest start
        V.clear();
        std::set<std::set<std::string>> seen;
        for (const auto& v : V_next)
            if (seen.insert(v.members).second) V.push_back(v);
    }
    for (const auto& v : V) flush(v);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<Candidate> cuts_filter(const std::vector<Trajectory>& O, const QueryParams& q,
                                   const VariantConfig& cfg, RunStats* stats) {
    Simplifier simp = variant_simplifier(cfg.variant);
    RangeSearchMode mode = variant_mode(cfg.variant);

    auto t0 = Clock::now();
    double delta = cfg.delta;
    bool delta_fallback = false;
    if (cfg.delta_auto) {
        auto choice = compute_delta(O, q.e);
        delta = choice.delta;
        delta_fallback = choice.fallback;
    }
    std::vector<SimplifiedTrajectory> simplified;
    simplified.reserve(O.size());
    for (const auto& o : O) simplified.push_back(simplify(o, delta, simp));
    double simplify_ms = ms_since(t0);

    auto t1 = Clock::now();
    auto [dom_lo, dom_hi] = time_domain(O);
    Tick lambda = cfg.lambda;
    if (cfg.lambda_auto)
        lambda = compute_lambda(O, simplified, dom_hi - dom_lo + 1);

    auto parts = partition_domain(simplified, lambda);
    std::vector<Candidate> V;
    std::vector<Candidate> V_cand;
    auto flush = [&](const Candidate& v) {
        if (v.lifetime >= q.k) V_cand.push_back(v);
    };
    for (const auto& part : parts) {
        auto C = traj_dbscan(part, q.e, q.m, mode);
        std::set<Candidate> V_next;
        for (const auto& v : V) {
            // same chaining discipline as the exact baseline: flush unless
            // some cluster carries the full member set forward, and let every
            // cluster start its own chain so buried subgroups are never lost
            bool full = false;
            for (const auto& c : C) {
                auto common = intersect(c.members, v.members);
                if (common.size() >= q.m) {
                    if (common.size() == v.members.size()) full = true;
                    std::set<std::string> scope = v.scope;
                    scope.insert(c.members.begin(), c.members.end());
                    V_next.insert({std::move(common), v.start, part.t_hi,
                                   v.lifetime + lambda, std::move(scope)});
                }
            }
            if (!full) flush(v);
        }
        for (const auto& c : C)
            V_next.insert({c.members, part.t_lo, part.t_hi, lambda, c.members});
        V.clear();
        std::set<std::set<std::string>> seen;
        for (const auto& v : V_next)
            if (seen.insert(v.members).second) V.push_back(v);
    }
    for (const auto& v : V) flush(v);

    std::sort(V_cand.begin(), V_cand.end());
    V_cand.erase(std::unique(V_cand.begin(), V_cand.end()), V_cand.end());

    // Refining a candidate whose members, scope and window are contained in
    // another candidate's cannot contribute anything new, so drop it.
    auto subsumes = [](const Candidate& a, const Candidate& b) {
        return a.start <= b.start && a.end >= b.end &&
               std::includes(a.members.begin(), a.members.end(), b.members.begin(),
                             b.members.end()) &&
               std::includes(a.scope.begin(), a.scope.end(), b.scope.begin(),
                             b.scope.end());
    };
    std::vector<Candidate> pruned;
    for (std::size_t i = 0; i < V_cand.size(); ++i) {
        bool drop = false;
        for (std::size_t j = 0; j < V_cand.size() && !drop; ++j) {
            if (i == j || !subsumes(V_cand[j], V_cand[i])) continue;
            // mutual subsumption means identical; keep the first
            if (!(subsumes(V_cand[i], V_cand[j]) && i < j)) drop = true;
        }
        if (!drop) pruned.push_back(V_cand[i]);
    }
    V_cand = std::move(pruned);

    if (stats) {
        stats->simplify_ms = simplify_ms;
        stats->filter_ms = ms_since(t1);
        stats->reduction_ratio = reduction_ratio(O, simplified);
        stats->delta = delta;
        stats->delta_fallback = delta_fallback;
        stats->lambda = lambda;
        stats->candidate_count = V_cand.size();
        stats->refinement_units = refinement_unit(V_cand);
    }
    return V_cand;
}

std::vector<Convoy> cuts_refine(const std::vector<Candidate>& cands,
                                const std::vector<Trajectory>& O, const QueryParams& q,
                                std::size_t threads) {
    std::vector<std::vector<Convoy>> per_cand(cands.size());
    auto work = [&](std::size_t i) {
        const Candidate& v = cands[i];
        const auto& ids = v.scope.empty() ? v.members : v.scope;
        std::vector<Trajectory> restricted;
        for (const auto& o : O)
            if (ids.count(o.id)) restricted.push_back(o);
        per_cand[i] = cmc(restricted, q, std::make_pair(v.start, v.end));
    };
    if (threads <= 1 || cands.size() <= 1) {
        for (std::size_t i = 0; i < cands.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t w = 0; w < std::min(threads, cands.size()); ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cands.size(); i = next++) work(i);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<Convoy> out;
    for (auto& part : per_cand) out.insert(out.end(), part.begin(), part.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DiscoveryResult discover(const std::vector<Trajectory>& O, const QueryParams& q,
                         Variant variant, std::optional<double> delta,
                         std::optional<Tick> lambda, std::size_t threads) {
    DiscoveryResult res;
    res.stats.kernel = std::string(kernels::active_kernel_name());
    auto t0 = Clock::now();
    if (variant == Variant::CMC) {
        res.convoys = normalize(cmc(O, q));
    } else {
        VariantConfig cfg;
        cfg.variant = variant;
        cfg.delta_auto = !delta.has_value();
        cfg.lambda_auto = !lambda.has_value();
        if (delta) cfg.delta = *delta;
        if (lambda) cfg.lambda = *lambda;
        auto cands = cuts_filter(O, q, cfg, &res.stats);
        auto t1 = Clock::now();
        res.convoys = normalize(cuts_refine(cands, O, q, threads));
        res.stats.refine_ms = ms_since(t1);
    }
    res.stats.total_ms = ms_since(t0);
    res.stats.convoy_count = res.convoys.size();
    return res;
}

std::vector<Candidate> mc2(const std::vector<Trajectory>& O, double theta, double e,
                           std::size_t m) {
    if (theta <= 0.0 || theta > 1.0)
        throw std::invalid_argument("mc2: theta must be in (0, 1]");
    auto [lo, hi] = time_domain(O);

    struct Chain {
        std::set<std::string> all;   // union over the chain's clusters
        std::set<std::string> last;  // most recent cluster
        Tick start = 0;
        Tick end = 0;
        std::size_t length = 1;
        bool operator<(const Chain& o) const {
            if (start != o.start) return start < o.start;
            if (all != o.all) return all < o.all;
            return last < o.last;
        }
    };
    std::vector<Chain> alive;
    std::vector<Candidate> out;
    auto emit = [&](const Chain& ch) {
        if (ch.length >= 2)
            out.push_back({ch.all, ch.start, ch.end, ch.end - ch.start + 1, {}});
    };
    for (Tick t = lo; t <= hi; ++t) {
        std::vector<std::pair<std::string, Point2>> Ot;
        for (const auto& o : O)
            if (auto p = sample_at(o, t)) Ot.emplace_back(o.id, *p);
        auto C = dbscan_points(Ot, e, m);
        std::vector<bool> c_continued(C.size(), false);
        std::set<Chain> next;
        for (const auto& ch : alive) {
            bool extended = false;
            for (std::size_t ci = 0; ci < C.size(); ++ci) {
                auto common = intersect(ch.last, C[ci].members);
                std::set<std::string> uni = ch.last;
                uni.insert(C[ci].members.begin(), C[ci].members.end());
                double jaccard = uni.empty() ? 0.0
                                             : double(common.size()) / double(uni.size());
                if (jaccard >= theta) {
                    extended = true;
                    c_continued[ci] = true;
                    Chain grown = ch;
                    grown.all.insert(C[ci].members.begin(), C[ci].members.end());
                    grown.last = C[ci].members;
                    grown.end = t;
                    grown.length += 1;
                    next.insert(std::move(grown));
                }
            }
            if (!extended) emit(ch);
        }
        for (std::size_t ci = 0; ci < C.size(); ++ci)
            if (!c_continued[ci]) next.insert({C[ci].members, C[ci].members, t, t, 1});
        alive.assign(next.begin(), next.end());
    }
    for (const auto& ch : alive) emit(ch);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Convoy> brute_force(const std::vector<Trajectory>& O, const QueryParams& q) {
    auto [lo, hi] = time_domain(O);
    if (O.size() > 30 || hi - lo + 1 > 120)
        throw std::invalid_argument("brute_force: scale guard exceeded");

    // snapshot clusters at every tick
    std::vector<std::vector<Cluster>> clusters_at;
    for (Tick t = lo; t <= hi; ++t) {
        std::vector<std::pair<std::string, Point2>> Ot;
        for (const auto& o : O)
            if (auto p = sample_at(o, t)) Ot.emplace_back(o.id, *p);
        clusters_at.push_back(Ot.size() >= q.m ? dbscan_points(Ot, q.e, q.m)
                                               : std::vector<Cluster>{});
    }

    // chain intersections from every start tick; record every interval of
    // lifetime >= k, then let normalization keep the maximal ones
    std::vector<Convoy> found;
    const Tick T = hi - lo + 1;
    for (Tick s = 0; s < T; ++s) {
        std::set<std::set<std::string>> sets;
        for (const auto& c : clusters_at[s]) sets.insert(c.members);
        for (Tick e2 = s; e2 < T; ++e2) {
            if (e2 > s) {
                std::set<std::set<std::string>> next;
                for (const auto& a : sets)
                    for (const auto& c : clusters_at[e2]) {
                        auto common = intersect(a, c.members);
                        if (common.size() >= q.m) next.insert(std::move(common));
                    }
                sets = std::move(next);
            }
            if (sets.empty()) break;
            if (e2 - s + 1 >= q.k)
                for (const auto& mset : sets) found.push_back({mset, lo + s, lo + e2});
        }
    }
    return normalize(std::move(found));
}

std::vector<Convoy> normalize(std::vector<Convoy> convoys) {
    std::sort(convoys.begin(), convoys.end());
    convoys.erase(std::unique(convoys.begin(), convoys.end()), convoys.end());
    std::vector<Convoy> out;
    for (std::size_t i = 0; i < convoys.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < convoys.size() && !dominated; ++j) {
            if (i == j) continue;
            const auto& a = convoys[i];
            const auto& b = convoys[j];
            if (b.start <= a.start && b.end >= a.end &&
                std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                              a.members.end()) &&
                !(a == b))
                dominated = true;
        }
        if (!dominated) out.push_back(convoys[i]);
    }
    return out;
}

AccuracyReport accuracy_report(const std::vector<Convoy>& reference,
                               const std::vector<Candidate>& trial) {
    std::vector<Convoy> trial_conv;
    for (const auto& c : trial) trial_conv.push_back({c.members, c.start, c.end});
    auto ref = normalize(reference);
    auto tri = normalize(std::move(trial_conv));
    std::set<Convoy> ref_set(ref.begin(), ref.end());
    std::set<Convoy> tri_set(tri.begin(), tri.end());

    std::size_t fp = 0;
    for (const auto& c : tri)
        if (!ref_set.count(c)) ++fp;
    std::size_t fn = 0;
    for (const auto& c : ref)
        if (!tri_set.count(c)) ++fn;

    AccuracyReport rep;
    rep.false_positive_pct = tri.empty() ? 0.0 : 100.0 * double(fp) / double(tri.size());
    rep.false_negative_pct = ref.empty() ? 0.0 : 100.0 * double(fn) / double(ref.size());
    return rep;
}

unsigned long long refinement_unit(const std::vector<Candidate>& cands) {
    unsigned long long total = 0;
    for (const auto& c : cands) {
        unsigned long long n = c.members.size();
        total += n * n * (unsigned long long)(std::max<Tick>(c.lifetime, 0));
    }
    return total;
}

}  // namespace convoy
