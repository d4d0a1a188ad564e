// bpba: partition functions of reflecting Baxter lattices by three exact methods.
//
// Exit codes: 0 success, 1 disagreement or failed identity, 2 input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bpba/bpba.hpp"
#include "bpba/sampling.hpp"

namespace {

using namespace bpba;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string digest(const LatticeSpec& spec) {
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a
    for (unsigned char c : to_json(spec).dump()) {
        h = (h ^ c) * 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::vector<int> parse_labels(const std::string& text) {
    std::vector<int> out;
    for (char c : text) {
        if (c == '1' || c == '2') {
            out.push_back(c - '0');
        } else if (c != ',' && c != ' ') {
            throw ParseError("labels are 1 or 2, comma separated: \"" + text + "\"");
        }
    }
    return out;
}

std::string labels_str(const std::vector<int>& v) {
    std::string s;
    for (int x : v) {
        s += static_cast<char>('0' + x);
    }
    return s;
}

int cmd_validate(const std::string& path, bool json) {
    const LatticeSpec spec = read_spec_file(path);
    const ValidationReport rep = validate_spec(spec);
    if (json) {
        std::cout << Json{{"ok", rep.ok}, {"violations", rep.violations}}.dump(2) << "\n";
    } else {
        std::cout << path << ": " << (rep.ok ? "ok" : "invalid") << "\n";
        for (const auto& v : rep.violations) {
            std::cout << "  " << v << "\n";
        }
    }
    return rep.ok ? kOk : kFailure;
}

struct ComputeOptions {
    std::string path;
    std::string method = "all";
    std::string alpha;
    std::string beta;
    bool all_configs = false;
    bool json = false;
};

int cmd_compute(const ComputeOptions& o) {
    const LatticeSpec spec = read_spec_file(o.path);
    require_valid(spec);

    std::vector<ExternalConfig> configs;
    if (o.all_configs) {
        configs = all_configs(spec.n_lines());
    } else if (!o.alpha.empty() && !o.beta.empty()) {
        ExternalConfig c{parse_labels(o.alpha), parse_labels(o.beta)};
        check_config(spec, c);
        configs.push_back(c);
    } else {
        throw ParseError("compute needs --alpha and --beta, or --all-configs");
    }

    std::vector<std::string> methods;
    if (o.method == "all") {
        methods = {"direct", "aba", "cba"};
    } else {
        methods = {o.method};
    }

    std::map<std::string, std::vector<Rational>> values;
    std::map<std::string, double> timing;
    for (const auto& m : methods) {
        const auto t0 = Clock::now();
        if (m == "direct") {
            values[m] = z_direct_all(spec, configs);
        } else if (m == "aba") {
            values[m] = z_aba_all(spec, configs);
        } else {
            values[m] = z_cba_all(spec, configs);
        }
        timing[m] = ms_since(t0);
    }

    bool agreement = true;
    for (const auto& m : methods) {
        agreement = agreement && values[m] == values[methods.front()];
    }

    if (o.json) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < configs.size(); ++i) {
            Json z = Json::object();
            for (const auto& m : methods) {
                z[m] = values[m][i].str();
            }
            rows.push_back({{"alpha", configs[i].alpha}, {"beta", configs[i].beta}, {"z", z}});
        }
        Json t = Json::object();
        for (const auto& m : methods) {
            t[m] = timing[m];
        }
        std::cout << Json{{"spec_digest", digest(spec)},
                          {"methods", methods},
                          {"configs", rows},
                          {"agreement", agreement},
                          {"timing_ms", t}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "spec " << digest(spec) << "\n";
        std::cout << std::left << std::setw(2 * static_cast<int>(spec.n_lines()) + 14) << "alpha beta";
        for (const auto& m : methods) {
            std::cout << std::setw(16) << m;
        }
        std::cout << "\n";
        for (std::size_t i = 0; i < configs.size(); ++i) {
            std::cout << std::setw(2 * static_cast<int>(spec.n_lines()) + 14)
                      << (labels_str(configs[i].alpha) + " " + labels_str(configs[i].beta));
            for (const auto& m : methods) {
                std::cout << std::setw(16) << values[m][i].str();
            }
            std::cout << "\n";
        }
        for (const auto& m : methods) {
            std::cout << "time " << m << " " << std::fixed << std::setprecision(1) << timing[m] << " ms\n";
        }
        std::cout << "agreement " << (agreement ? "true" : "false") << "\n";
    }
    return agreement ? kOk : kFailure;
}

int cmd_verify(const std::string& suite, std::size_t draws, std::uint64_t seed) {
    bool ok = true;
    for (const auto& r : run_suites(suite, draws, seed)) {
        std::cout << r.name << ": " << (r.ok() ? "pass" : "FAIL") << " (" << r.draws << " draws, " << r.checks
                  << " checks, " << r.redraws << " redraws, seed " << seed << ")\n";
        for (const auto& f : r.failures) {
            std::cout << "  " << f << "\n";
        }
        ok = ok && r.ok();
    }
    return ok ? kOk : kFailure;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

int cmd_bench(int nmax, std::uint64_t seed) {
    if (nmax < 1 || nmax > 6) {
        throw ParseError("--nmax must be within 1..6 (state dimension 2^(2N))");
    }
    Sampler sampler(seed);
    std::cout << std::left << std::setw(4) << "N" << std::setw(8) << "configs" << std::setw(14) << "cba terms"
              << std::setw(14) << "direct ms" << std::setw(14) << "aba ms" << std::setw(14) << "cba ms"
              << "agree\n";
    bool ok = true;
    for (int n = 1; n <= nmax; ++n) {
        const LatticeSpec spec = sampler.spec(static_cast<std::size_t>(n));
        const auto configs = all_configs(spec.n_lines());
        auto t0 = Clock::now();
        const auto zd = z_direct_all(spec, configs);
        const double td = ms_since(t0);
        t0 = Clock::now();
        const auto za = z_aba_all(spec, configs);
        const double ta = ms_since(t0);
        t0 = Clock::now();
        const auto zc = z_cba_all(spec, configs);
        const double tc = ms_since(t0);
        const bool agree = zd == za && za == zc;
        ok = ok && agree;
        std::cout << std::setw(4) << n << std::setw(8) << configs.size() << std::setw(14)
                  << static_cast<long long>(std::ldexp(factorial(n), n)) << std::fixed << std::setprecision(1)
                  << std::setw(14) << td << std::setw(14) << ta << std::setw(14) << tc << (agree ? "yes" : "NO")
                  << "\n";
    }
    return ok ? kOk : kFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition functions of Baxter lattices with a reflecting boundary"};
    app.require_subcommand(1);

    std::string validate_path;
    bool validate_json = false;
    auto* validate = app.add_subcommand("validate", "Check a lattice spec file");
    validate->add_option("spec", validate_path, "LatticeSpec JSON file")->required();
    validate->add_flag("--json", validate_json, "Machine-readable output");

    ComputeOptions co;
    auto* compute = app.add_subcommand("compute", "Partition functions for one or all external configurations");
    compute->add_option("spec", co.path, "LatticeSpec JSON file")->required();
    compute->add_option("--method", co.method, "direct, aba, cba or all")
        ->check(CLI::IsMember({"direct", "aba", "cba", "all"}));
    compute->add_option("--alpha", co.alpha, "Labels at the start points, e.g. 1,2,2,1");
    compute->add_option("--beta", co.beta, "Labels at the end points");
    compute->add_flag("--all-configs", co.all_configs, "Enumerate all 4^N configurations");
    compute->add_flag("--json", co.json, "Machine-readable output");

    std::string suite = "all";
    std::size_t draws = 20;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "Randomised identity suites");
    verify->add_option("--suite", suite, "weights, fcr, baxter, invariance, reduction or all")
        ->check(CLI::IsMember({"weights", "fcr", "baxter", "invariance", "reduction", "all"}));
    verify->add_option("--draws", draws, "Random draws per suite");
    verify->add_option("--seed", seed, "Seed");

    int nmax = 4;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "Timing of the three methods for N = 1..nmax");
    bench->add_option("--nmax", nmax, "Largest number of lines (at most 6)");
    bench->add_option("--seed", bench_seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*validate) {
            return cmd_validate(validate_path, validate_json);
        }
        if (*compute) {
            return cmd_compute(co);
        }
        if (*verify) {
            return cmd_verify(suite, draws, seed);
        }
        return cmd_bench(nmax, bench_seed);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidSpec& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kInputError;
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kInputError;
    } catch (const DegenerateError& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
}
