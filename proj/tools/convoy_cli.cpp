#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "convoy/autoparam.hpp"
#include "convoy/convoy.hpp"
#include "convoy/kernels.hpp"
#include "convoy/synthetic.hpp"

namespace {

using namespace convoy;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

std::vector<Trajectory> load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return load_trajectories(in);
}

// One record per line: sorted member ids, start tick, end tick.
// Lines ordered by (start, first id).
template <typename Rec>
std::string format_records(std::vector<Rec> recs) {
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        if (a.start != b.start) return a.start < b.start;
        if (*a.members.begin() != *b.members.begin())
            return *a.members.begin() < *b.members.begin();
        if (a.end != b.end) return a.end < b.end;
        return a.members < b.members;
    });
    std::ostringstream out;
    for (const auto& r : recs) {
        bool first = true;
        for (const auto& id : r.members) {
            if (!first) out << ',';
            out << id;
            first = false;
        }
        out << ' ' << r.start << ' ' << r.end << '\n';
    }
    return out.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

std::string format_stats_kv(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream out;
    for (const auto& [k, v] : kv) out << k << '=' << v << '\n';
    return out.str();
}

std::string format_stats_json(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::ostringstream out;
    out << "{\n";
    for (std::size_t i = 0; i < kv.size(); ++i) {
        bool numeric = !kv[i].second.empty() &&
                       kv[i].second.find_first_not_of("0123456789.-") == std::string::npos;
        out << "  \"" << kv[i].first << "\": ";
        if (numeric)
            out << kv[i].second;
        else
            out << '"' << kv[i].second << '"';
        out << (i + 1 < kv.size() ? ",\n" : "\n");
    }
    out << "}\n";
    return out.str();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Convoy discovery over trajectory databases"};
    app.require_subcommand(1);

    // ---- run ----
    auto* run = app.add_subcommand("run", "Run a discovery algorithm on a CSV dataset");
    std::string in_path, algo = "cuts*", out_path, stats_path, stats_format = "kv";
    std::size_t m = 2, threads = 1;
    Tick k = 1;
    double e = 1.0, theta = 0.5;
    std::optional<double> delta_opt;
    std::optional<Tick> lambda_opt;
    double delta_val = 0.0;
    Tick lambda_val = 0;
    run->add_option("--input", in_path, "trajectory CSV (obj,t,x,y)")->required();
    run->add_option("--algo", algo, "cmc|cuts|cuts+|cuts*|mc2");
    run->add_option("--m", m, "min convoy size")->required();
    run->add_option("--k", k, "min lifetime (ticks)")->required();
    run->add_option("--e", e, "neighborhood range (meters)")->required();
    auto* dopt = run->add_option("--delta", delta_val, "simplification tolerance override");
    auto* lopt = run->add_option("--lambda", lambda_val, "partition length override");
    run->add_option("--theta", theta, "mc2 overlap threshold");
    run->add_option("--threads", threads, "worker threads for simplify/refine");
    run->add_option("--out", out_path, "result file (default stdout)");
    run->add_option("--stats", stats_path, "stats file (default stdout)");
    run->add_option("--stats-format", stats_format, "kv|json");

    // ---- generate ----
    auto* gen = app.add_subcommand("generate", "Emit a synthetic trajectory scene");
    std::string gen_out, gen_truth;
    std::size_t gen_objects = 10;
    Tick gen_ticks = 50;
    double gen_e = 1.0, gen_missing = 0.0;
    std::uint64_t gen_seed = 1;
    bool gen_irregular = false;
    std::vector<std::string> gen_planted;
    gen->add_option("--out", gen_out, "CSV output path")->required();
    gen->add_option("--truth", gen_truth, "planted-convoy ground truth output path");
    gen->add_option("--objects", gen_objects, "total object count");
    gen->add_option("--ticks", gen_ticks, "time domain length");
    gen->add_option("--e", gen_e, "target neighborhood range");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--missing-prob", gen_missing, "interior sample drop probability");
    gen->add_flag("--irregular", gen_irregular, "random per-object lifetimes");
    gen->add_option("--planted", gen_planted,
                    "planted convoy spec members:start:end (repeatable)");

    // ---- compare ----
    auto* cmp = app.add_subcommand("compare", "Accuracy of an algorithm against cmc");
    std::string cmp_in, cmp_algo = "mc2", cmp_out;
    std::size_t cmp_m = 2;
    Tick cmp_k = 1;
    double cmp_e = 1.0, cmp_theta = 0.5;
    cmp->add_option("--input", cmp_in, "trajectory CSV")->required();
    cmp->add_option("--algo", cmp_algo, "trial algorithm: mc2|cuts|cuts+|cuts*");
    cmp->add_option("--m", cmp_m, "min convoy size")->required();
    cmp->add_option("--k", cmp_k, "min lifetime")->required();
    cmp->add_option("--e", cmp_e, "neighborhood range")->required();
    cmp->add_option("--theta", cmp_theta, "mc2 overlap threshold");
    cmp->add_option("--out", cmp_out, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        int code = app.exit(ex);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (run->parsed()) {
            if (dopt->count()) delta_opt = delta_val;
            if (lopt->count()) lambda_opt = lambda_val;
            auto trajs = load_file(in_path);
            std::vector<std::pair<std::string, std::string>> kv;
            kv.emplace_back("algo", algo);
            if (algo == "mc2") {
                auto chains = mc2(trajs, theta, e, m);
                write_text(out_path, format_records(chains));
                kv.emplace_back("theta", fmt(theta));
                kv.emplace_back("moving_clusters", std::to_string(chains.size()));
            } else {
                QueryParams q{m, k, e};
                auto res = discover(trajs, q, parse_variant(algo), delta_opt, lambda_opt,
                                    threads);
                write_text(out_path, format_records(res.convoys));
                const RunStats& s = res.stats;
                kv.emplace_back("m", std::to_string(m));
                kv.emplace_back("k", std::to_string(k));
                kv.emplace_back("e", fmt(e));
                if (algo != "cmc") {
                    kv.emplace_back("delta", fmt(s.delta));
                    kv.emplace_back("delta_fallback", s.delta_fallback ? "1" : "0");
                    kv.emplace_back("lambda", std::to_string(s.lambda));
                    kv.emplace_back("reduction_ratio", fmt(s.reduction_ratio));
                    kv.emplace_back("candidates", std::to_string(s.candidate_count));
                    kv.emplace_back("refinement_units", std::to_string(s.refinement_units));
                    kv.emplace_back("simplify_ms", fmt(s.simplify_ms));
                    kv.emplace_back("filter_ms", fmt(s.filter_ms));
                    kv.emplace_back("refine_ms", fmt(s.refine_ms));
                }
                kv.emplace_back("total_ms", fmt(s.total_ms));
                kv.emplace_back("convoys", std::to_string(s.convoy_count));
                kv.emplace_back("threads", std::to_string(threads));
                kv.emplace_back("kernel", s.kernel);
            }
            write_text(stats_path,
                       stats_format == "json" ? format_stats_json(kv) : format_stats_kv(kv));
        } else if (gen->parsed()) {
            SyntheticSpec spec;
            spec.n_objects = gen_objects;
            spec.ticks = gen_ticks;
            spec.e = gen_e;
            spec.missing_prob = gen_missing;
            spec.irregular_lifetimes = gen_irregular;
            for (const auto& s : gen_planted) {
                PlantedConvoy pc;
                if (std::sscanf(s.c_str(), "%zu:%lld:%lld", &pc.member_count,
                                (long long*)&pc.start, (long long*)&pc.end) != 3)
                    throw CLI::ValidationError("--planted", "expected members:start:end");
                spec.convoys.push_back(pc);
            }
            auto scene = generate(spec, gen_seed);
            std::ofstream out(gen_out);
            if (!out) throw std::runtime_error("cannot open output file: " + gen_out);
            write_trajectories(out, scene.trajectories);
            if (!gen_truth.empty()) write_text(gen_truth, format_records(scene.planted));
        } else if (cmp->parsed()) {
            auto trajs = load_file(cmp_in);
            QueryParams q{cmp_m, cmp_k, cmp_e};
            auto reference = cmc(trajs, q);
            std::vector<Candidate> trial;
            if (cmp_algo == "mc2") {
                trial = mc2(trajs, cmp_theta, cmp_e, cmp_m);
            } else {
                auto res = discover(trajs, q, parse_variant(cmp_algo));
                for (const auto& c : res.convoys)
                    trial.push_back({c.members, c.start, c.end, c.lifetime()});
            }
            auto rep = accuracy_report(normalize(reference), trial);
            std::ostringstream out;
            out << "false_positive_pct=" << fmt(rep.false_positive_pct) << '\n'
                << "false_negative_pct=" << fmt(rep.false_negative_pct) << '\n';
            write_text(cmp_out, out.str());
        }
    } catch (const CLI::Error& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
