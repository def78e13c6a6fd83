// gzcz -- construct and verify Golay pairs, complete complementary codes and
// Golay-ZCZ sequence sets from sequence-set text files.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "gzcz/ccc.hpp"
#include "gzcz/correlation.hpp"
#include "gzcz/golay.hpp"
#include "gzcz/io.hpp"
#include "gzcz/search.hpp"
#include "gzcz/seeds.hpp"
#include "gzcz/zcz.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

gzcz::GolayPair load_pair(const std::string& path) {
    const auto set = gzcz::io::read_set_file(path);
    if (set.set_size() != 2) {
        throw gzcz::FormatError("expected a 2-row pair file, got " +
                                std::to_string(set.set_size()) + " rows");
    }
    return {set.row(0), set.row(1)};
}

unsigned thread_cap() {
    if (const char* env = std::getenv("GZCZ_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 1) {
            return static_cast<unsigned>(v);
        }
    }
    return 1;
}

std::string fraction_text(const gzcz::Fraction& f) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%lld/%lld (%.6f)",
                  static_cast<long long>(f.num), static_cast<long long>(f.den),
                  f.value());
    return buf;
}

void print_report(const gzcz::ZczReport& r) {
    std::cout << "set size M: " << r.set_size << '\n'
              << "length L: " << r.length << '\n'
              << "modulus q: " << r.modulus << (r.exact ? " (exact arithmetic)" : "")
              << '\n'
              << "complementary: " << (r.complementary ? "yes" : "no") << '\n';
    std::cout << "measured ZACZ: " << r.measured_zacz << '\n';
    if (r.measured_zccz < 0) {
        std::cout << "measured ZCCZ: none\n";
    } else {
        std::cout << "measured ZCCZ: " << r.measured_zccz << '\n';
    }
    std::cout << "Z_min: " << r.z_min << '\n'
              << "claimed Z: " << r.claimed_z << '\n'
              << "optimality factor: " << fraction_text(r.optimality) << '\n';
    if (r.binary_bound_exceeded) {
        std::cout << "note: binary Z exceeds L/(2M), contradicting the conjectured bound\n";
    }
    std::cout << "verdict: " << (r.passed ? "PASS" : "FAIL") << '\n';
}

int cmd_verify_gcp(const std::string& in) {
    const auto pair = load_pair(in);
    const bool ok = gzcz::verify_gcp(pair);
    std::cout << "GCP length " << pair.length() << ": " << (ok ? "PASS" : "FAIL")
              << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_mate(const std::string& in, const std::string& out) {
    const auto mate = gzcz::golay_mate(load_pair(in));
    gzcz::io::write_set_file(out, gzcz::ComplementarySet({mate.a, mate.b}));
    std::cout << "wrote " << out << " (mate pair, length " << mate.length() << ")\n";
    return kExitOk;
}

gzcz::SignQuadruple parse_signs(const std::vector<int>& signs) {
    if (signs.size() != 4) {
        throw gzcz::FormatError("--signs needs four comma-separated values");
    }
    for (int s : signs) {
        if (s != 1 && s != -1) {
            throw gzcz::FormatError("--signs values must be 1 or -1");
        }
    }
    return {signs[0], signs[1], signs[2], signs[3]};
}

int cmd_build_pair(const std::string& in, const std::vector<int>& signs,
                   const std::string& out) {
    const auto pair = load_pair(in);
    const auto mate = gzcz::golay_mate(pair);
    const auto [p, q] = gzcz::build_zcz_pair(pair, mate, parse_signs(signs));
    gzcz::io::write_set_file(out, gzcz::ComplementarySet({p, q}));
    std::cout << "wrote " << out << " (ZCZ pair, length " << p.length() << ")\n";
    return kExitOk;
}

int cmd_verify_gzcz(const std::string& in, std::int64_t claimed_z) {
    const auto set = gzcz::io::read_set_file(in);
    const auto report = gzcz::verify_golay_zcz(set.rows(), claimed_z);
    print_report(report);
    return report.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_build_set(const std::string& in, const std::string& out) {
    const auto code = gzcz::io::read_code_file(in);
    const auto seqs = gzcz::build_zcz_set(code);
    gzcz::io::write_set_file(out, gzcz::ComplementarySet(seqs));
    std::cout << "wrote " << out << " (" << seqs.size() << " sequences of length "
              << seqs.front().length() << ")\n";
    return kExitOk;
}

int cmd_ccc_verify(const std::string& in) {
    const auto code = gzcz::io::read_code_file(in);
    const bool ok = gzcz::verify_ccc(code);
    std::cout << "CCC (" << code.set_count() << ',' << code.rows_per_set() << ','
              << code.length() << "): " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_ccc_transpose(const std::string& in, const std::string& out) {
    const auto code = gzcz::transpose_ccc(gzcz::io::read_code_file(in));
    gzcz::io::write_code_file(out, code);
    std::cout << "wrote " << out << '\n';
    return kExitOk;
}

int cmd_ccc_kron(const std::string& in1, const std::string& in2,
                 const std::string& out) {
    const auto code = gzcz::kronecker_ccc(gzcz::io::read_code_file(in1),
                                          gzcz::io::read_code_file(in2));
    gzcz::io::write_code_file(out, code);
    std::cout << "wrote " << out << " (" << code.set_count() << ','
              << code.rows_per_set() << ',' << code.length() << ")\n";
    return kExitOk;
}

int cmd_seeds(bool list, const std::string& name, const std::string& out) {
    if (list) {
        for (const auto& n : gzcz::seed_names()) {
            const auto code = gzcz::seed_registry(n);
            std::cout << n << " (" << code.set_count() << ',' << code.rows_per_set()
                      << ',' << code.length() << ")\n";
        }
        return kExitOk;
    }
    gzcz::io::write_code_file(out, gzcz::seed_registry(name));
    std::cout << "wrote " << out << '\n';
    return kExitOk;
}

int cmd_search(std::size_t m, std::size_t n, double timeout, std::size_t max,
               const std::string& out) {
    gzcz::SearchConfig config;
    config.set_size = m;
    config.length = n;
    config.timeout_seconds = timeout;
    config.max_solutions = max;
    const auto result = gzcz::search_ccc(config, thread_cap());
    std::cout << "nodes expanded: " << result.counters.nodes << '\n'
              << "branches pruned: " << result.counters.prunes << '\n'
              << "solutions found: " << result.codes.size() << '\n';
    for (std::size_t i = 0; i < result.codes.size(); ++i) {
        const std::string path = i == 0 ? out : out + "." + std::to_string(i + 1);
        gzcz::io::write_code_file(path, result.codes[i]);
        std::cout << "wrote " << path << '\n';
    }
    if (result.timed_out) {
        std::cout << "search timed out\n";
        return kExitTimeout;
    }
    return kExitOk;
}

int cmd_report(const std::string& in, const std::string& mode, std::size_t i,
               std::size_t j, bool aperiodic, const std::string& csv) {
    const auto set = gzcz::io::read_set_file(in);
    if (i >= set.set_size() || (mode == "cross" && j >= set.set_size())) {
        throw gzcz::FormatError("row index out of range");
    }
    const auto& first = set.row(i);
    const auto& second = mode == "cross" ? set.row(j) : set.row(i);
    const auto profile =
        aperiodic ? gzcz::accf(first, second) : gzcz::pccf(first, second);
    gzcz::io::write_profile_csv(csv, profile);
    std::cout << "wrote " << csv << " ("
              << (profile.max_shift() - profile.min_shift() + 1) << " shifts, "
              << (profile.exact() ? "exact" : "float") << ")\n";
    return kExitOk;
}

int cmd_bound(const std::string& in, const std::string& alphabet) {
    const auto set = gzcz::io::read_set_file(in);
    const auto report = gzcz::verify_golay_zcz(set.rows(), 1);
    const auto kind =
        alphabet == "binary" ? gzcz::Alphabet::binary : gzcz::Alphabet::polyphase;
    const auto l = static_cast<std::int64_t>(report.length);
    const auto m = static_cast<std::int64_t>(report.set_size);
    const std::int64_t z_opt = kind == gzcz::Alphabet::binary ? l / (2 * m) : l / m;
    std::cout << "set size M: " << m << ", length L: " << l << '\n'
              << "measured ZACZ: " << report.measured_zacz << ", measured ZCCZ: ";
    if (report.measured_zccz < 0) {
        std::cout << "none";
    } else {
        std::cout << report.measured_zccz;
    }
    std::cout << ", Z_min: " << report.z_min << '\n'
              << "complementary: " << (report.complementary ? "yes" : "no") << '\n'
              << alphabet << " bound optimum floor: " << z_opt << '\n'
              << "optimality factor: "
              << fraction_text(gzcz::optimality_factor(report, kind)) << '\n';
    std::cout << "within bound: " << (report.z_min <= z_opt ? "yes" : "NO") << '\n';
    return kExitOk;
}

int cmd_lengths(std::int64_t bound) {
    const auto ours = gzcz::reachable_lengths(bound);
    std::cout << "reachable lengths up to " << bound << ":";
    for (auto v : ours) {
        std::cout << ' ' << v;
    }
    std::cout << '\n';

    // published designs reach further lengths through composition rules that
    // change the set size; report the comparison without claiming equality
    std::vector<std::int64_t> reference;
    for (auto v : gzcz::reference_lengths()) {
        if (v <= bound) {
            reference.push_back(v);
        }
    }
    std::cout << "published reference lengths up to " << bound << ":";
    for (auto v : reference) {
        std::cout << ' ' << v;
    }
    std::cout << '\n';
    std::cout << "in both lists:";
    for (auto v : ours) {
        if (std::binary_search(reference.begin(), reference.end(), v)) {
            std::cout << ' ' << v;
        }
    }
    std::cout << '\n';
    std::cout << "only reachable here:";
    for (auto v : ours) {
        if (!std::binary_search(reference.begin(), reference.end(), v)) {
            std::cout << ' ' << v;
        }
    }
    std::cout << '\n';
    std::cout << "only in the reference list:";
    for (auto v : reference) {
        if (!std::binary_search(ours.begin(), ours.end(), v)) {
            std::cout << ' ' << v;
        }
    }
    std::cout << '\n';
    return kExitOk;
}

} // namespace

static int run_cli(int argc, char** argv) {
    CLI::App app{"Golay-ZCZ sequence toolkit"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // verify-gcp IN
    std::string vg_in;
    auto* verify_gcp = app.add_subcommand("verify-gcp", "check a 2-row pair file");
    verify_gcp->add_option("IN", vg_in)->required();
    verify_gcp->callback([&] { exit_code = cmd_verify_gcp(vg_in); });

    // mate IN OUT
    std::string mate_in, mate_out;
    auto* mate = app.add_subcommand("mate", "write the canonical complementary mate");
    mate->add_option("IN", mate_in)->required();
    mate->add_option("OUT", mate_out)->required();
    mate->callback([&] { exit_code = cmd_mate(mate_in, mate_out); });

    // build-pair IN --signs x1,x2,x3,x4 OUT
    std::string bp_in, bp_out;
    std::vector<int> bp_signs;
    auto* build_pair = app.add_subcommand("build-pair", "extend a pair to a length-4N ZCZ pair");
    build_pair->add_option("IN", bp_in)->required();
    build_pair->add_option("OUT", bp_out)->required();
    build_pair->add_option("--signs", bp_signs, "four block signs, e.g. 1,1,1,-1")
        ->required()
        ->delimiter(',');
    build_pair->callback([&] { exit_code = cmd_build_pair(bp_in, bp_signs, bp_out); });

    // verify-gzcz IN --claimed-z Z
    std::string vz_in;
    std::int64_t vz_claimed = 1;
    auto* verify_gzcz = app.add_subcommand("verify-gzcz", "measure a sequence set against a claimed ZCZ width");
    verify_gzcz->add_option("IN", vz_in)->required();
    verify_gzcz->add_option("--claimed-z", vz_claimed)->required()->check(CLI::PositiveNumber);
    verify_gzcz->callback([&] { exit_code = cmd_verify_gzcz(vz_in, vz_claimed); });

    // build-set CCC_IN OUT
    std::string bs_in, bs_out;
    auto* build_set = app.add_subcommand("build-set", "expand a code into a Golay-ZCZ sequence set");
    build_set->add_option("CCC_IN", bs_in)->required();
    build_set->add_option("OUT", bs_out)->required();
    build_set->callback([&] { exit_code = cmd_build_set(bs_in, bs_out); });

    // ccc-verify IN
    std::string cv_in;
    auto* ccc_verify = app.add_subcommand("ccc-verify", "check a code file");
    ccc_verify->add_option("IN", cv_in)->required();
    ccc_verify->callback([&] { exit_code = cmd_ccc_verify(cv_in); });

    // ccc-transpose IN OUT
    std::string ct_in, ct_out;
    auto* ccc_transpose = app.add_subcommand("ccc-transpose", "exchange row and set indices");
    ccc_transpose->add_option("IN", ct_in)->required();
    ccc_transpose->add_option("OUT", ct_out)->required();
    ccc_transpose->callback([&] { exit_code = cmd_ccc_transpose(ct_in, ct_out); });

    // ccc-kron IN1 IN2 OUT
    std::string ck_in1, ck_in2, ck_out;
    auto* ccc_kron = app.add_subcommand("ccc-kron", "compose two codes of equal set size");
    ccc_kron->add_option("IN1", ck_in1)->required();
    ccc_kron->add_option("IN2", ck_in2)->required();
    ccc_kron->add_option("OUT", ck_out)->required();
    ccc_kron->callback([&] { exit_code = cmd_ccc_kron(ck_in1, ck_in2, ck_out); });

    // seeds --list | --get NAME OUT
    bool seeds_list = false;
    std::string seeds_name, seeds_out;
    auto* seeds = app.add_subcommand("seeds", "built-in verified codes");
    seeds->add_flag("--list", seeds_list);
    seeds->add_option("--get", seeds_name);
    seeds->add_option("OUT", seeds_out);
    seeds->callback([&] {
        if (seeds_list == !seeds_name.empty()) {
            throw CLI::ValidationError("seeds", "use either --list or --get NAME OUT");
        }
        if (!seeds_list && seeds_out.empty()) {
            throw CLI::ValidationError("seeds", "--get needs an OUT path");
        }
        exit_code = cmd_seeds(seeds_list, seeds_name, seeds_out);
    });

    // search-ccc --M 4 --N n --timeout s --max k OUT
    std::size_t sc_m = 4, sc_n = 1, sc_max = 1;
    double sc_timeout = 60.0;
    std::string sc_out;
    auto* search = app.add_subcommand("search-ccc", "backtracking search for binary (4,4,N) codes");
    search->add_option("--M", sc_m, "set size (only 4 supported)")->capture_default_str();
    search->add_option("--N", sc_n, "row length")->required()->check(CLI::PositiveNumber);
    search->add_option("--timeout", sc_timeout, "seconds")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    search->add_option("--max", sc_max, "solution cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    search->add_option("OUT", sc_out)->required();
    search->callback([&] {
        if (sc_m != 4) {
            throw CLI::ValidationError("search-ccc", "only --M 4 is supported");
        }
        exit_code = cmd_search(sc_m, sc_n, sc_timeout, sc_max, sc_out);
    });

    // report IN --mode auto|cross --i A --j B --periodic|--aperiodic --csv OUT
    std::string rp_in, rp_mode = "auto", rp_csv;
    std::size_t rp_i = 0, rp_j = 0;
    bool rp_periodic = false, rp_aperiodic = false;
    auto* report = app.add_subcommand("report", "export one correlation profile as CSV");
    report->add_option("IN", rp_in)->required();
    report->add_option("--mode", rp_mode)->check(CLI::IsMember({"auto", "cross"}));
    report->add_option("--i", rp_i, "first row index")->capture_default_str();
    auto* rp_j_opt = report->add_option("--j", rp_j, "second row index (cross mode)");
    report->add_flag("--periodic", rp_periodic);
    report->add_flag("--aperiodic", rp_aperiodic);
    report->add_option("--csv", rp_csv)->required();
    report->callback([&] {
        if (rp_periodic && rp_aperiodic) {
            throw CLI::ValidationError("report", "choose --periodic or --aperiodic");
        }
        if (rp_mode == "cross" && rp_j_opt->count() == 0) {
            throw CLI::ValidationError("report", "cross mode needs --j");
        }
        exit_code = cmd_report(rp_in, rp_mode, rp_i, rp_j, rp_aperiodic, rp_csv);
    });

    // bound IN --alphabet binary|polyphase
    std::string bd_in, bd_alphabet = "polyphase";
    auto* bound = app.add_subcommand("bound", "measured widths against the width bound");
    bound->add_option("IN", bd_in)->required();
    bound->add_option("--alphabet", bd_alphabet)
        ->check(CLI::IsMember({"binary", "polyphase"}))
        ->capture_default_str();
    bound->callback([&] { exit_code = cmd_bound(bd_in, bd_alphabet); });

    // lengths --bound B
    std::int64_t ln_bound = 200;
    auto* lengths = app.add_subcommand("lengths", "code lengths reachable from the seeds");
    lengths->add_option("--bound", ln_bound)->required()->check(CLI::PositiveNumber);
    lengths->callback([&] { exit_code = cmd_lengths(ln_bound); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const gzcz::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return exit_code;
}

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (...) {
        std::cerr << "error: unexpected failure\n";
        return kExitUsage;
    }
}
