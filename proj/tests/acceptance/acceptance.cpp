// Acceptance suite: drives every top-level guarantee end to end from the
// fixture files and prints one verdict line per criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gzcz/ccc.hpp"
#include "gzcz/correlation.hpp"
#include "gzcz/golay.hpp"
#include "gzcz/io.hpp"
#include "gzcz/search.hpp"
#include "gzcz/seeds.hpp"
#include "gzcz/zcz.hpp"

using namespace gzcz;

namespace {

std::string g_fixtures;
int g_failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > budget_seconds) {
        ok = false;
        detail = "time budget exceeded";
    }
    if (!ok) {
        ++g_failures;
    }
    std::printf("[%s] criterion %d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", number,
                label.c_str(), elapsed, detail.empty() ? "" : "; ",
                detail.c_str());
    std::fflush(stdout);
}

GolayPair fixture_pair(const std::string& name) {
    const auto set = io::read_set_file(g_fixtures + "/" + name);
    return {set.row(0), set.row(1)};
}

bool profile_equals(const CorrelationProfile& p, const std::vector<std::int64_t>& want,
                    std::string& detail) {
    if (!p.exact()) {
        detail = "profile not on the exact path";
        return false;
    }
    for (std::int64_t tau = 0; tau <= p.max_shift(); ++tau) {
        const ComplexValue& v = p.at(tau);
        if (v.im != 0.0 || v.re != static_cast<double>(want[static_cast<std::size_t>(tau)])) {
            detail = "mismatch at shift " + std::to_string(tau);
            return false;
        }
    }
    return true;
}

PhaseSequence random_sequence(std::mt19937& rng, std::uint32_t q, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
    std::vector<std::uint32_t> e(n);
    for (auto& x : e) {
        x = dist(rng);
    }
    return {q, std::move(e)};
}

bool kron_identity_holds(std::mt19937& rng, std::uint32_t q, std::string& detail) {
    const std::size_t n1 = 1 + rng() % 12;
    const std::size_t n2 = 1 + rng() % 12;
    const auto x1 = random_sequence(rng, q, n1);
    const auto x2 = random_sequence(rng, q, n1);
    const auto y1 = random_sequence(rng, q, n2);
    const auto y2 = random_sequence(rng, q, n2);
    const auto lhs = accf(kronecker(x1, y1), kronecker(x2, y2));
    const auto cx = accf(x1, x2);
    const auto cy = accf(y1, y2);
    const auto len = static_cast<std::int64_t>(n1 * n2);
    const auto w = static_cast<std::int64_t>(n2);
    for (std::int64_t tau = -(len - 1); tau <= len - 1; ++tau) {
        std::int64_t k1 = tau / w;
        if (tau % w != 0 && tau < 0) {
            k1 -= 1;
        }
        const std::int64_t k2 = tau - k1 * w;
        const auto rhs = cx.at_or_zero(k1).value() * cy.at_or_zero(k2).value() +
                         cx.at_or_zero(k1 + 1).value() * cy.at_or_zero(k2 - w).value();
        const auto got = lhs.at(tau).value();
        if (lhs.exact()) {
            if (got != rhs) {
                detail = "exact mismatch, q=" + std::to_string(q) +
                         " tau=" + std::to_string(tau);
                return false;
            }
        } else if (std::abs(got - rhs) > lhs.zero_tolerance()) {
            detail = "float mismatch beyond tolerance, q=8 tau=" + std::to_string(tau);
            return false;
        }
    }
    return true;
}

void criterion1() {
    run_criterion(1, "length-40 pair reproduces the three periodic profiles exactly",
                  1.0, [](std::string& detail) {
        const auto pair = fixture_pair("binary_gcp_10.gzcz");
        const auto [p, q] = build_zcz_pair(pair, golay_mate(pair), {1, 1, 1, -1});
        const std::vector<std::int64_t> rp = {
            40, 0, 0, 0, 0, 0, 0, 0, 0,  0, 0, -4, -8, 4,  8,  -4, 0, 4, 0, 12,
            0,  12, 0, 4, 0, -4, 8, 4, -8, -4, 0, 0,  0,  0,  0,  0,  0, 0, 0, 0};
        const std::vector<std::int64_t> rq = {
            40, 0, 0, 0, 0, 0, 0, 0,  0,  0, 0, 4, 8, -4, -8, 4, 0, -4, 0, -12,
            0,  -12, 0, -4, 0, 4, -8, -4, 8, 4, 0, 0, 0,  0,  0, 0, 0,  0, 0, 0};
        const std::vector<std::int64_t> rpq = {
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0,  0, -4, -8, 4, 16, 4,  0, 4, -8, -4,
            0, 4, -8, 12, 0, 12, 0, -4, 8, 4, 0, 0,  0,  0, 0,  0,  0, 0, 0,  0};
        return profile_equals(pccf(p, p), rp, detail) &&
               profile_equals(pccf(q, q), rq, detail) &&
               profile_equals(pccf(p, q), rpq, detail);
    });
}

void criterion2() {
    run_criterion(2, "quadriphase (2,20,5) pair verifies on the exact path", 1.0,
                  [](std::string& detail) {
        const auto pair = fixture_pair("quadriphase_gcp_5.gzcz");
        const auto [p, q] = build_zcz_pair(pair, golay_mate(pair), {1, 1, 1, -1});
        const auto report = verify_golay_zcz({p, q}, 5);
        if (!report.exact || report.modulus != 4) {
            detail = "not on the exact quadriphase path";
            return false;
        }
        return report.passed;
    });
}

void criterion3() {
    run_criterion(3, "4x4 seed expands to a (4,64,12) set with factor 3/4", 1.0,
                  [](std::string& detail) {
        const auto code = io::read_code_file(g_fixtures + "/example3_n4.gzcz");
        const auto set = build_zcz_set(code);
        const auto report = verify_golay_zcz(set, 12);
        if (!report.passed || !report.complementary) {
            detail = "verification failed";
            return false;
        }
        if (report.z_min != 12) {
            detail = "z_min = " + std::to_string(report.z_min);
            return false;
        }
        if (!(report.optimality == Fraction{3, 4})) {
            detail = "optimality factor != 3/4";
            return false;
        }
        return true;
    });
}

void criterion4() {
    run_criterion(4, "all five searched seed codes verify exactly", 1.0,
                  [](std::string& detail) {
        for (int n : {3, 5, 7, 11, 13}) {
            const auto code =
                io::read_code_file(g_fixtures + "/table3_n" + std::to_string(n) + ".gzcz");
            const auto sum = accf_sum(code.set(0), code.set(0));
            if (!sum.exact()) {
                detail = "not exact at N=" + std::to_string(n);
                return false;
            }
            if (!verify_ccc(code)) {
                detail = "failed at N=" + std::to_string(n);
                return false;
            }
        }
        return true;
    });
}

void criterion5() {
    run_criterion(5, "composed codes (4,4,60) and (4,4,48) verify exactly", 10.0,
                  [](std::string& detail) {
        const auto n3 = io::read_code_file(g_fixtures + "/table3_n3.gzcz");
        const auto n5 = io::read_code_file(g_fixtures + "/table3_n5.gzcz");
        const auto e4 = io::read_code_file(g_fixtures + "/example3_n4.gzcz");
        const auto sixty = kronecker_ccc(n3, n5);
        if (sixty.length() != 60 || !verify_ccc(sixty)) {
            detail = "(4,4,60) failed";
            return false;
        }
        const auto fortyeight = kronecker_ccc(e4, n3);
        if (fortyeight.length() != 48 || !verify_ccc(fortyeight)) {
            detail = "(4,4,48) failed";
            return false;
        }
        return true;
    });
}

void criterion6() {
    run_criterion(6, "kronecker correlation identity over 1000 exact and 200 float pairs",
                  30.0, [](std::string& detail) {
        std::mt19937 rng(20230815);
        for (int trial = 0; trial < 1000; ++trial) {
            if (!kron_identity_holds(rng, trial % 2 ? 4 : 2, detail)) {
                return false;
            }
        }
        for (int trial = 0; trial < 200; ++trial) {
            if (!kron_identity_holds(rng, 8, detail)) {
                return false;
            }
        }
        return true;
    });
}

void criterion7() {
    run_criterion(7, "doubling-family pairs meet the binary bound with equality", 30.0,
                  [](std::string& detail) {
        std::vector<GolayPair> family;
        GolayPair seed{PhaseSequence(2, {0}), PhaseSequence(2, {0})};
        for (int i = 0; i < 4; ++i) {
            seed = double_pair(seed); // 2, 4, 8, 16
            family.push_back(seed);
        }
        const auto ten = fixture_pair("binary_gcp_10.gzcz");
        family.push_back(ten);
        family.push_back(double_pair(ten)); // 20

        std::vector<SignQuadruple> quadruples;
        for (int x1 : {1, -1})
            for (int x2 : {1, -1})
                for (int x3 : {1, -1})
                    for (int x4 : {1, -1}) {
                        const SignQuadruple s{x1, x2, x3, x4};
                        if (s.valid()) quadruples.push_back(s);
                    }
        if (quadruples.size() != 8) {
            detail = "sign quadruple enumeration broken";
            return false;
        }

        for (const auto& pair : family) {
            const auto n = static_cast<std::int64_t>(pair.length());
            const auto mate = golay_mate(pair);
            for (const auto& signs : quadruples) {
                const auto [p, q] = build_zcz_pair(pair, mate, signs);
                const auto report = verify_golay_zcz({p, q}, n);
                if (!report.passed || !report.complementary) {
                    detail = "conditions failed at N=" + std::to_string(n);
                    return false;
                }
                if (report.z_min != n) {
                    detail = "z_min != N at N=" + std::to_string(n);
                    return false;
                }
                if (!(optimality_factor(report, Alphabet::binary) == Fraction{1, 1})) {
                    detail = "binary optimality factor != 1 at N=" + std::to_string(n);
                    return false;
                }
            }
        }
        return true;
    });
}

void criterion8() {
    run_criterion(8, "search finds a (4,4,3) code; N=1 census matches brute force",
                  60.0, [](std::string& detail) {
        SearchConfig config;
        config.length = 3;
        config.max_solutions = 1;
        config.timeout_seconds = 60.0;
        const auto found = search_ccc(config);
        if (found.timed_out || found.codes.empty()) {
            detail = "no (4,4,3) code found";
            return false;
        }
        if (!verify_ccc(found.codes.front())) {
            detail = "emitted code fails verification";
            return false;
        }

        SearchConfig tiny;
        tiny.length = 1;
        tiny.max_solutions = 1000000;
        tiny.timeout_seconds = 60.0;
        const auto pruned = search_ccc(tiny);
        SearchConfig brute = tiny;
        brute.pruning = false;
        const auto unpruned = search_ccc(brute);
        auto keys = [](const std::vector<CompleteComplementaryCode>& codes) {
            std::set<std::string> out;
            for (const auto& c : codes) {
                out.insert(io::serialize_code(canonicalize(c)));
            }
            return out;
        };
        if (keys(pruned.codes) != keys(unpruned.codes)) {
            detail = "pruned and brute-force censuses disagree";
            return false;
        }
        return true;
    });
}

void criterion9() {
    run_criterion(9, "width bound holds; set sizes 2 and 4 reach (M-1)/M", 30.0,
                  [](std::string& detail) {
        // polyphase instances never exceed floor(L/M)
        std::vector<std::pair<std::vector<PhaseSequence>, std::int64_t>> instances;
        for (const auto& name : seed_names()) {
            const auto code = seed_registry(name);
            instances.emplace_back(build_zcz_set(code),
                                   3 * static_cast<std::int64_t>(code.length()));
        }
        const auto ten = fixture_pair("binary_gcp_10.gzcz");
        const auto two_code = ccc_from_gcp(ten, golay_mate(ten));
        instances.emplace_back(build_zcz_set(two_code), 10);

        bool saw_half = false;
        bool saw_three_quarters = false;
        for (const auto& [seqs, claimed] : instances) {
            const auto report = verify_golay_zcz(seqs, claimed);
            const auto l = static_cast<std::int64_t>(report.length);
            const auto m = static_cast<std::int64_t>(report.set_size);
            if (report.z_min > l / m) {
                detail = "polyphase bound violated";
                return false;
            }
            if (!report.passed) {
                detail = "a built set failed its claimed width";
                return false;
            }
            const auto factor = optimality_factor(report, Alphabet::polyphase);
            const Fraction want{m - 1, m};
            if (!(factor == want)) {
                detail = "optimality factor != (M-1)/M for M=" + std::to_string(m);
                return false;
            }
            saw_half = saw_half || (factor == Fraction{1, 2});
            saw_three_quarters = saw_three_quarters || (factor == Fraction{3, 4});
        }
        if (!saw_half || !saw_three_quarters) {
            detail = "missing an M=2 or M=4 instance";
            return false;
        }
        return true;
    });
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <fixtures-dir>\n";
        return 2;
    }
    g_fixtures = argv[1];

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
