#include "dslv/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace dslv {

namespace {

double parse_real(std::string_view s, std::string_view what) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || !std::isfinite(v))
        fail(ErrorKind::invalid_argument, "potential: cannot parse " + std::string(what) + " from '" + std::string(s) + "'");
    return v;
}

std::uint64_t parse_seed(std::string_view s) {
    std::uint64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        fail(ErrorKind::invalid_argument, "potential: cannot parse seed from '" + std::string(s) + "'");
    return v;
}

std::vector<double> read_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::invalid_argument, "potential: cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    std::vector<double> values;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        try {
            values = nlohmann::json::parse(text).get<std::vector<double>>();
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorKind::invalid_argument, "potential: '" + path + "' is not a flat numeric JSON array: " + e.what());
        }
    } else {
        std::string token;
        for (char ch : text + "\n") {
            if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
                if (!token.empty()) values.push_back(parse_real(token, "file value"));
                token.clear();
            } else {
                token.push_back(ch);
            }
        }
    }
    for (double v : values)
        if (!std::isfinite(v)) fail(ErrorKind::invalid_argument, "potential: non-finite value in '" + path + "'");
    if (values.empty()) fail(ErrorKind::invalid_argument, "potential: '" + path + "' holds no values");
    return values;
}

} // namespace

double unit_uniform(std::uint64_t bits) noexcept { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

std::string shortest_repr(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

PotentialSpec PotentialSpec::constant(double c) {
    PotentialSpec s;
    s.kind = Kind::constant;
    s.c = c;
    return s;
}

PotentialSpec PotentialSpec::decay(double c) {
    PotentialSpec s;
    s.kind = Kind::decay;
    s.c = c;
    return s;
}

PotentialSpec PotentialSpec::random(std::uint64_t seed, double lo, double hi) {
    if (!(lo <= hi)) fail(ErrorKind::invalid_argument, "potential: random range requires lo <= hi");
    PotentialSpec s;
    s.kind = Kind::random;
    s.seed = seed;
    s.lo = lo;
    s.hi = hi;
    return s;
}

PotentialSpec PotentialSpec::parse(std::string_view token) {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos)
        fail(ErrorKind::invalid_argument, "potential: expected <kind>:<args>, got '" + std::string(token) + "'");
    const auto kind = token.substr(0, colon);
    const auto args = token.substr(colon + 1);
    if (kind == "const") return constant(parse_real(args, "constant"));
    if (kind == "decay") return decay(parse_real(args, "decay constant"));
    if (kind == "random") {
        const auto c1 = args.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : args.find(',', c1 + 1);
        if (c2 == std::string_view::npos || args.find(',', c2 + 1) != std::string_view::npos)
            fail(ErrorKind::invalid_argument, "potential: random expects <seed>,<lo>,<hi>");
        return random(parse_seed(args.substr(0, c1)), parse_real(args.substr(c1 + 1, c2 - c1 - 1), "lo"),
                      parse_real(args.substr(c2 + 1), "hi"));
    }
    if (kind == "file") {
        if (args.empty()) fail(ErrorKind::invalid_argument, "potential: file: needs a path");
        PotentialSpec s;
        s.kind = Kind::file;
        s.path = std::string(args);
        s.file_values = read_values(s.path);
        return s;
    }
    fail(ErrorKind::invalid_argument, "potential: unknown kind '" + std::string(kind) + "'");
}

LatticeFunction<double> PotentialSpec::generate(Index first, Index last) const {
    if (first > last) fail(ErrorKind::invalid_argument, "potential: empty index range");
    const auto len = static_cast<std::size_t>(last - first + 1);
    std::vector<double> out(len);
    switch (kind) {
    case Kind::constant:
        std::fill(out.begin(), out.end(), c);
        break;
    case Kind::decay:
        for (Index n = first; n <= last; ++n) {
            const double d = static_cast<double>(n + 1);
            if (d == 0.0) fail(ErrorKind::invalid_argument, "potential: decay is undefined at n = -1");
            out[static_cast<std::size_t>(n - first)] = c / (d * d);
        }
        break;
    case Kind::random: {
        // Draw k belongs to index n = k - 1, so q(n) does not depend on the requested window.
        if (first < -1) fail(ErrorKind::invalid_argument, "potential: random values start at n = -1");
        std::mt19937_64 gen(seed);
        gen.discard(static_cast<unsigned long long>(first + 1));
        for (auto& v : out) v = lo + (hi - lo) * unit_uniform(gen());
        break;
    }
    case Kind::file:
        if (file_values.size() != len) {
            fail(ErrorKind::invalid_argument, "potential: '" + path + "' has " + std::to_string(file_values.size()) +
                                                  " values, range [" + std::to_string(first) + ", " +
                                                  std::to_string(last) + "] needs " + std::to_string(len));
        }
        out = file_values;
        break;
    }
    return LatticeFunction<double>(first, std::move(out));
}

std::string PotentialSpec::to_string() const {
    switch (kind) {
    case Kind::constant: return "const:" + shortest_repr(c);
    case Kind::decay: return "decay:" + shortest_repr(c);
    case Kind::random: return "random:" + std::to_string(seed) + "," + shortest_repr(lo) + "," + shortest_repr(hi);
    case Kind::file: return "file:" + path;
    }
    return {};
}

} // namespace dslv
