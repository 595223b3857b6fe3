#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "mlcif/cache.hpp"
#include "mlcif/claims.hpp"
#include "mlcif/enumerate.hpp"
#include "mlcif/extension.hpp"
#include "mlcif/io.hpp"
#include "mlcif/suites.hpp"
#include "mlcif/threads.hpp"
#include "mlcif/version.hpp"
#include "mlcif/weights.hpp"
#include "mlcif/young.hpp"

namespace {

using namespace mlcif;

void print_report_line(const VerificationReport& r) {
    std::string status = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
    std::cout << '[' << status << "] " << r.claim;
    if (!r.params.empty()) {
        std::cout << " (";
        bool first = true;
        for (const auto& [key, value] : r.params) {
            if (!first) std::cout << ' ';
            std::cout << key << '=' << value;
            first = false;
        }
        std::cout << ')';
    }
    if (r.margin) std::cout << " margin=" << *r.margin;
    if (r.warning) std::cout << " [warning]";
    if (!r.note.empty()) std::cout << " -- " << r.note;
    std::cout << '\n';
    if (!r.pass && !r.skipped)
        for (const auto& [key, value] : r.witnesses) std::cout << "    " << key << ": " << value << '\n';
}

std::vector<Family> families_for(int k, const std::string& family_file, int threads) {
    if (!family_file.empty()) return families_from_jsonl_file(family_file);
    return load_or_enumerate(k, threads);
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParameterError("cannot write " + path);
    out << content;
}

std::uint64_t draw_and_print_seed() {
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cout << "seed drawn: " << seed << '\n';
    return seed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal left-compressed intersecting families: enumeration, extension, weights, bounds"};
    app.set_version_flag("--version", std::string("mlcif ") + kVersion);
    app.set_config("--config");
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: MLCIF_THREADS or hardware)");

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate all MLCIFs on [2k]");
    int enum_k = 2;
    bool count_only = false;
    bool force_large = false;
    std::string enum_out;
    cmd_enum->add_option("--k", enum_k, "uniformity")->required();
    cmd_enum->add_flag("--count-only", count_only, "print only |M_k|");
    cmd_enum->add_flag("--force-large-k", force_large, "override the k <= 5 resource guard");
    cmd_enum->add_option("--out", enum_out, "write JSONL to this path (default: cache)");

    // extend
    auto* cmd_extend = app.add_subcommand("extend", "extend MLCIFs from [2k] to [n]");
    int ext_k = 2, ext_n = 0;
    std::string ext_family;
    bool ext_fast_flag = false, ext_greedy_flag = false, ext_both = false;
    cmd_extend->add_option("--k", ext_k, "uniformity")->required();
    cmd_extend->add_option("--n", ext_n, "target ground size")->required();
    cmd_extend->add_option("--family", ext_family, "family JSONL file (default: all of M_k)");
    cmd_extend->add_flag("--fast", ext_fast_flag, "expansion-based route (default)");
    cmd_extend->add_flag("--greedy", ext_greedy_flag, "greedy fixed-point route");
    cmd_extend->add_flag("--both", ext_both, "run both routes and cross-check");

    // weigh
    auto* cmd_weigh = app.add_subcommand("weigh", "evaluate family weights under a weight function");
    int weigh_k = 2, weigh_n = 0;
    std::string weigh_omega, weigh_family;
    cmd_weigh->add_option("--k", weigh_k, "uniformity")->required();
    cmd_weigh->add_option("--n", weigh_n, "ground size")->required();
    cmd_weigh->add_option("--omega", weigh_omega, "weight JSON file")->required();
    cmd_weigh->add_option("--family", weigh_family, "family JSONL file (default: all of M_k extended)");

    // optimize
    auto* cmd_opt = app.add_subcommand("optimize", "find the maximum-weight MLCIFs");
    int opt_k = 2, opt_n = 0;
    std::string opt_omega;
    cmd_opt->add_option("--k", opt_k, "uniformity")->required();
    cmd_opt->add_option("--n", opt_n, "ground size")->required();
    cmd_opt->add_option("--omega", opt_omega, "weight JSON file")->required();

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    SuiteParams sp;
    std::uint64_t seed_value = 0;
    bool seed_given = false;
    std::string verify_out_json, verify_out_csv;
    cmd_verify->add_option("--suite", suite, "one of: enumerate-oracle family-properties boundary types extension theorem1 theorem2 young probe")
        ->required();
    cmd_verify->add_option("--k", sp.k, "uniformity");
    cmd_verify->add_option("--n", sp.n, "ground size");
    cmd_verify->add_option("--samples", sp.samples, "sample count for randomized suites");
    cmd_verify->add_option("--seed", seed_value, "seed for randomized suites")->each([&](const std::string&) { seed_given = true; });
    cmd_verify->add_option("--kmax", sp.kmax, "largest k for bound suites");
    cmd_verify->add_option("--oeis-file", sp.oeis_path, "whitespace-separated external |M_k| values");
    cmd_verify->add_option("--out-json", verify_out_json, "write the suite result JSON here");
    cmd_verify->add_option("--out-csv", verify_out_csv, "write the report summary CSV here");

    // young
    auto* cmd_young = app.add_subcommand("young", "Young lattice computations");
    int ym = 0, yn = 0;
    bool do_ranks = false, do_antichain = false, do_pk = false, do_probe = false;
    int probe_samples = 100;
    std::uint64_t young_seed = 0;
    bool young_seed_given = false;
    std::vector<std::size_t> probe_sizes;
    cmd_young->add_option("--m", ym, "parts (k for --pk/--probe)");
    cmd_young->add_option("--n", yn, "largest part");
    cmd_young->add_flag("--ranks", do_ranks, "print the rank-size table CSV");
    cmd_young->add_flag("--antichain", do_antichain, "print the maximum antichain and a witness");
    cmd_young->add_flag("--pk", do_pk, "print |P_k| for k = m");
    cmd_young->add_flag("--probe", do_probe, "run the supersaturation probe for k = m");
    cmd_young->add_option("--samples", probe_samples, "probe samples");
    cmd_young->add_option("--sizes", probe_sizes, "probe subset sizes (default: ceil(k^{-3/2} C(2k,k)))");
    cmd_young->add_option("--seed", young_seed, "probe seed")->each([&](const std::string&) { young_seed_given = true; });

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "print the bound table CSV");
    int bounds_kmax = 10;
    int bounds_enum_kmax = 4;
    cmd_bounds->add_option("--kmax", bounds_kmax, "largest k in the table")->required();
    cmd_bounds->add_option("--enumerate-kmax", bounds_enum_kmax, "fill log2 |M_k| up to this k (0 disables)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_enum) {
            const auto start = std::chrono::steady_clock::now();
            EnumOptions opts;
            opts.threads = threads;
            opts.allow_large = force_large;
            const std::vector<Family> families = enumerate_mlcifs(enum_k, opts);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            if (count_only) {
                std::cout << families.size() << '\n';
            } else if (!enum_out.empty()) {
                std::string content;
                for (const Family& f : families) content += canonical_jsonl(f) + "\n";
                write_text(enum_out, content);
                std::cout << "|M_" << enum_k << "| = " << families.size() << " -> " << enum_out << '\n';
            } else {
                write_mk_cache(enum_k, families, ms);
                std::cout << "|M_" << enum_k << "| = " << families.size() << " -> " << mk_cache_path(enum_k).string()
                          << '\n';
            }
            return 0;
        }

        if (*cmd_extend) {
            if (!ext_fast_flag && !ext_greedy_flag && !ext_both) ext_fast_flag = true;
            const std::vector<Family> input = families_for(ext_k, ext_family, threads);
            for (const Family& f : input) {
                if (ext_both) {
                    const Family fast = extend_fast(f, ext_n);
                    const Family greedy = extend_greedy(f, ext_n);
                    if (!(fast == greedy)) {
                        std::cout << "[FAIL] " << claims::kLemma21 << " routes disagree for " << canonical_jsonl(f)
                                  << '\n';
                        return 1;
                    }
                    std::cout << canonical_jsonl(fast) << '\n';
                } else if (ext_greedy_flag) {
                    std::cout << canonical_jsonl(extend_greedy(f, ext_n)) << '\n';
                } else {
                    std::cout << canonical_jsonl(extend_fast(f, ext_n)) << '\n';
                }
            }
            if (ext_both) std::cout << "[PASS] " << claims::kLemma21 << " both routes agree on " << input.size()
                                    << " families\n";
            return 0;
        }

        if (*cmd_weigh) {
            const WeightFn w = weight_from_json_file(weigh_omega);
            const std::vector<Family> input = families_for(weigh_k, weigh_family, threads);
            for (const Family& f : input) {
                const Family ext = f.n() == weigh_n ? f : extend_fast(f, weigh_n);
                std::cout << canonical_jsonl(ext) << '\t' << family_weight(ext, w) << '\n';
            }
            return 0;
        }

        if (*cmd_opt) {
            const WeightFn w = weight_from_json_file(opt_omega);
            const OptimizeResult res = optimize(opt_k, opt_n, w);
            if (!res.warning.empty()) std::cout << "warning: " << res.warning << '\n';
            std::cout << "max weight " << res.max_weight << (res.unique ? " (uniquely optimal)" : "") << '\n';
            for (std::size_t i : res.argmax) std::cout << canonical_jsonl(res.table[i].first) << '\n';
            return 0;
        }

        if (*cmd_verify) {
            sp.threads = threads;
            if (seed_given) sp.seed = seed_value;
            const SuiteResult result = run_suite(suite, sp);
            for (const VerificationReport& r : result.reports) print_report_line(r);
            std::cout << (result.pass ? "[PASS] " : "[FAIL] ") << "suite " << result.suite << " (" << result.wall_ms
                      << " ms, " << result.reports.size() << " reports)\n";
            if (!verify_out_json.empty()) write_text(verify_out_json, suite_result_to_json(result));
            if (!verify_out_csv.empty()) write_text(verify_out_csv, reports_to_csv(result.reports));
            return result.pass ? 0 : 1;
        }

        if (*cmd_young) {
            if (do_ranks) {
                if (ym < 1 || yn < 1) throw ParameterError("--ranks needs --m and --n");
                std::cout << ranks_to_csv(ym, yn, rank_sizes(ym, yn));
            }
            if (do_antichain) {
                if (ym < 1 || yn < 1) throw ParameterError("--antichain needs --m and --n");
                const AntichainResult ac = max_antichain(ym, yn);
                std::cout << "max antichain in L(" << ym << "," << yn << "): " << ac.size << "\nwitness:";
                for (const Partition& part : ac.witness) {
                    std::cout << ' ';
                    for (int x : part.parts) std::cout << x;
                }
                std::cout << '\n';
            }
            if (do_pk) {
                if (ym < 1) throw ParameterError("--pk needs --m (the k)");
                std::cout << "|P_" << ym << "| = " << u128_to_string(pk_count(ym)) << '\n';
            }
            if (do_probe) {
                if (ym < 1) throw ParameterError("--probe needs --m (the k)");
                const std::uint64_t seed = young_seed_given ? young_seed : draw_and_print_seed();
                std::vector<std::size_t> sizes = probe_sizes;
                if (sizes.empty()) {
                    const double v = std::pow(static_cast<double>(ym), -1.5) *
                                     static_cast<double>(static_cast<long double>(binomial_u128(2 * ym, ym)));
                    sizes.push_back(std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(v))));
                }
                const ProbeReport report = supersaturation_probe(ym, sizes, probe_samples, seed, threads);
                std::cout << probe_to_csv(report);
            }
            if (!do_ranks && !do_antichain && !do_pk && !do_probe)
                throw ParameterError("young: pick one of --ranks --antichain --pk --probe");
            return 0;
        }

        if (*cmd_bounds) {
            std::map<int, unsigned long long> counts;
            for (int k = 1; k <= std::min(bounds_enum_kmax, bounds_kmax); ++k)
                counts[k] = load_or_enumerate(k, threads).size();
            std::cout << bounds_to_csv(theorem1_report(bounds_kmax, counts));
            return 0;
        }
    } catch (const ParameterError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 2;
    } catch (const ScaleError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return 2;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
