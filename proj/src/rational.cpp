#include "sl3/rational.hpp"
#include "sl3/error.hpp"

#include <cctype>

namespace sl3 {

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::FrozenMutation: return "FrozenMutation";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::FlavorMismatch: return "FlavorMismatch";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::InvalidSeed: return "InvalidSeed";
        case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
        case ErrorKind::BoundaryEdge: return "BoundaryEdge";
        case ErrorKind::SelfGluedQuadrilateral: return "SelfGluedQuadrilateral";
        case ErrorKind::RoleNotFound: return "RoleNotFound";
        case ErrorKind::ChartMismatch: return "ChartMismatch";
        case ErrorKind::MissingChart: return "MissingChart";
        case ErrorKind::InvalidTag: return "InvalidTag";
        case ErrorKind::InvalidKind: return "InvalidKind";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string to_string(const Rational& r) {
    const auto num = boost::multiprecision::numerator(r);
    const auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

boost::multiprecision::mpz_int parse_integer(std::string_view s, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw Error(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw Error(ErrorKind::ParseError, "bad rational '" + std::string(whole) + "'");
    boost::multiprecision::mpz_int v(std::string(s.substr(i)));
    return negative ? boost::multiprecision::mpz_int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    auto num = parse_integer(s.substr(0, slash), text);
    auto den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num) / Rational(den);
}

std::size_t rank(std::vector<RationalVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const Rational f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace sl3
