#include "gzcz/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gzcz/errors.hpp"

namespace gzcz::io {

namespace {

std::string format_double(double v, const char* fmt) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

void serialize_rows(std::ostringstream& out, const ComplementarySet& set) {
    for (const auto& row : set.rows()) {
        if (set.modulus() >= 1) {
            const auto exps = row.exponents();
            for (std::size_t i = 0; i < exps.size(); ++i) {
                if (i) out << ' ';
                out << exps[i];
            }
        } else {
            const auto raw = row.raw_entries();
            for (std::size_t i = 0; i < raw.size(); ++i) {
                if (i) out << ' ';
                // %.17g round-trips doubles exactly
                out << format_double(raw[i].real(), "%.17g") << ','
                    << format_double(raw[i].imag(), "%.17g");
            }
        }
        out << '\n';
    }
}

std::string header(std::uint32_t q, std::size_t m, std::size_t n) {
    std::ostringstream out;
    out << "GZCZ 1\n"
        << "q " << q << '\n'
        << "M " << m << '\n'
        << "N " << n << '\n';
    return out.str();
}

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            return line;
        }
    }
    throw FormatError("unexpected end of file");
}

struct Header {
    std::uint32_t q = 0;
    std::size_t m = 0;
    std::size_t n = 0;
};

Header parse_header(std::istream& in) {
    if (next_content_line(in) != "GZCZ 1") {
        throw FormatError("missing GZCZ 1 header line");
    }
    Header h;
    auto field = [&](const char* key) -> std::uint64_t {
        const std::string line = next_content_line(in);
        std::istringstream ls(line);
        std::string k;
        std::uint64_t v = 0;
        if (!(ls >> k >> v) || k != key) {
            throw FormatError(std::string("expected '") + key + " <value>' line, got: " + line);
        }
        std::string rest;
        if (ls >> rest) {
            throw FormatError(std::string("trailing tokens on ") + key + " line");
        }
        return v;
    };
    const std::uint64_t q = field("q");
    const std::uint64_t m = field("M");
    const std::uint64_t n = field("N");
    if (q > 0xffffffffull) {
        throw FormatError("modulus q too large");
    }
    if (m < 1 || n < 1) {
        throw FormatError("M and N must be positive");
    }
    if (m > (1u << 16) || n > (1u << 24)) {
        throw FormatError("header dimensions exceed supported limits");
    }
    h.q = static_cast<std::uint32_t>(q);
    h.m = static_cast<std::size_t>(m);
    h.n = static_cast<std::size_t>(n);
    return h;
}

PhaseSequence parse_row(const std::string& line, const Header& h) {
    std::istringstream ls(line);
    if (h.q >= 1) {
        std::vector<std::uint32_t> e;
        e.reserve(h.n);
        std::int64_t v = 0;
        while (ls >> v) {
            if (v < 0 || static_cast<std::uint64_t>(v) >= h.q) {
                throw FormatError("exponent out of range [0, q)");
            }
            e.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof()) {
            throw FormatError("malformed exponent row: " + line);
        }
        if (e.size() != h.n) {
            throw FormatError("row has wrong entry count");
        }
        return {h.q, std::move(e)};
    }
    std::vector<std::complex<double>> r;
    r.reserve(h.n);
    std::string token;
    while (ls >> token) {
        const auto comma = token.find(',');
        if (comma == std::string::npos) {
            throw FormatError("raw entries must be re,im pairs");
        }
        std::size_t used = 0;
        double re = 0;
        double im = 0;
        try {
            re = std::stod(token.substr(0, comma), &used);
            if (used != comma) throw FormatError("bad real part: " + token);
            im = std::stod(token.substr(comma + 1), &used);
            if (used != token.size() - comma - 1) throw FormatError("bad imag part: " + token);
        } catch (const std::logic_error&) {
            throw FormatError("bad numeric entry: " + token);
        }
        r.emplace_back(re, im);
    }
    if (r.size() != h.n) {
        throw FormatError("row has wrong entry count");
    }
    return PhaseSequence{std::move(r)};
}

void expect_no_more(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty()) {
            throw FormatError("trailing content after final row: " + line);
        }
    }
}

} // namespace

std::string serialize_set(const ComplementarySet& set) {
    std::ostringstream out;
    out << header(set.modulus(), set.set_size(), set.length());
    serialize_rows(out, set);
    return out.str();
}

std::string serialize_code(const CompleteComplementaryCode& code) {
    std::ostringstream out;
    out << header(code.modulus(), code.rows_per_set(), code.length());
    for (std::size_t k = 0; k < code.set_count(); ++k) {
        out << "SET " << k << '\n';
        serialize_rows(out, code.set(k));
    }
    return out.str();
}

ComplementarySet parse_set(std::istream& in) {
    const Header h = parse_header(in);
    std::vector<PhaseSequence> rows;
    rows.reserve(h.m);
    for (std::size_t r = 0; r < h.m; ++r) {
        rows.push_back(parse_row(next_content_line(in), h));
    }
    expect_no_more(in);
    return ComplementarySet{std::move(rows)};
}

CompleteComplementaryCode parse_code(std::istream& in) {
    const Header h = parse_header(in);
    std::vector<ComplementarySet> sets;
    sets.reserve(h.m);
    for (std::size_t k = 0; k < h.m; ++k) {
        const std::string line = next_content_line(in);
        std::istringstream ls(line);
        std::string key;
        std::size_t idx = 0;
        if (!(ls >> key >> idx) || key != "SET" || idx != k) {
            throw FormatError("expected 'SET " + std::to_string(k) + "', got: " + line);
        }
        std::vector<PhaseSequence> rows;
        rows.reserve(h.m);
        for (std::size_t r = 0; r < h.m; ++r) {
            rows.push_back(parse_row(next_content_line(in), h));
        }
        sets.emplace_back(std::move(rows));
    }
    expect_no_more(in);
    return CompleteComplementaryCode{std::move(sets)};
}

bool looks_like_code(std::istream& in) {
    const auto start = in.tellg();
    bool found = false;
    std::string line;
    for (int i = 0; i < 8 && std::getline(in, line); ++i) {
        if (line.rfind("SET ", 0) == 0) {
            found = true;
            break;
        }
    }
    in.clear();
    in.seekg(start);
    return found;
}

ComplementarySet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    return parse_set(in);
}

CompleteComplementaryCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    return parse_code(in);
}

void write_set_file(const std::string& path, const ComplementarySet& set) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path);
    }
    out << serialize_set(set);
}

void write_code_file(const std::string& path, const CompleteComplementaryCode& code) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path);
    }
    out << serialize_code(code);
}

std::string profile_csv(const CorrelationProfile& profile) {
    std::ostringstream out;
    out << "tau,real,imag,magnitude\n";
    for (std::int64_t tau = profile.min_shift(); tau <= profile.max_shift(); ++tau) {
        const ComplexValue& v = profile.at(tau);
        out << tau << ',';
        if (profile.exact()) {
            out << static_cast<std::int64_t>(v.re) << ','
                << static_cast<std::int64_t>(v.im) << ',';
        } else {
            out << format_double(v.re, "%.12f") << ','
                << format_double(v.im, "%.12f") << ',';
        }
        out << format_double(v.magnitude(), "%.12f") << '\n';
    }
    return out.str();
}

void write_profile_csv(const std::string& path, const CorrelationProfile& profile) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write " + path);
    }
    out << profile_csv(profile);
}

} // namespace gzcz::io
