#include "sl3/ends.hpp"
#include "sl3/error.hpp"

#include <algorithm>
#include <sstream>

namespace sl3 {

PrimitiveEnd PrimitiveEnd::from_index(int i) {
    if (i < 0 || i > 3) throw Error(ErrorKind::InvalidKind, "end index " + std::to_string(i));
    return {i >= 2 ? Orientation::Out : Orientation::In, (i % 2) ? EndSign::Minus : EndSign::Plus};
}

std::string to_string(const PrimitiveEnd& e) {
    return std::string(e.orientation == Orientation::In ? "i" : "o") + (e.sign == EndSign::Plus ? "+" : "-");
}

PrimitiveEnd parse_end(const std::string& s) {
    if (s == "i+") return kInPlus;
    if (s == "i-") return kInMinus;
    if (s == "o+") return kOutPlus;
    if (s == "o-") return kOutMinus;
    throw Error(ErrorKind::InvalidKind, "unknown end '" + s + "'");
}

EndMultiset EndMultiset::operator+(const EndMultiset& o) const {
    EndMultiset m;
    for (int i = 0; i < 4; ++i) m.count[i] = count[i] + o.count[i];
    return m;
}

EndMultiset multiset_of(std::initializer_list<PrimitiveEnd> ends) {
    EndMultiset m;
    for (const auto& e : ends) m.add(e);
    return m;
}

std::string to_string(const EndMultiset& m) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (!m.count[i]) continue;
        if (!out.empty()) out += ' ';
        if (m.count[i] > 1) out += std::to_string(m.count[i]) + "*";
        out += to_string(PrimitiveEnd::from_index(i));
    }
    return out;
}

EndMultiset parse_multiset(const std::string& text) {
    EndMultiset m;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        unsigned k = 1;
        const auto star = tok.find('*');
        if (star != std::string::npos) {
            try {
                k = static_cast<unsigned>(std::stoul(tok.substr(0, star)));
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidKind, "bad multiplicity in '" + tok + "'");
            }
            tok = tok.substr(star + 1);
        }
        m.add(parse_end(tok), k);
    }
    return m;
}

Coweight contribution(const PrimitiveEnd& e) {
    switch (e.index()) {
        case 0: return {0, 1};   // (in,+)
        case 1: return {-1, 0};  // (in,-)
        case 2: return {1, 0};   // (out,+)
        default: return {0, -1}; // (out,-)
    }
}

Coweight theta(const EndMultiset& m) {
    Coweight c;
    for (int i = 0; i < 4; ++i)
        if (m.count[i]) c += contribution(PrimitiveEnd::from_index(i)) * Rational(m.count[i]);
    return c;
}

EndMultiset weyl_rewrite(int s, const PrimitiveEnd& e) {
    if (s != 1 && s != 2) throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
    if (s == 1) {
        if (e == kInMinus) return multiset_of({kOutPlus, kOutMinus});
        if (e == kOutPlus) return multiset_of({kInPlus, kInMinus});
        return multiset_of({e});
    }
    if (e == kInPlus) return multiset_of({kOutPlus, kOutMinus});
    if (e == kOutMinus) return multiset_of({kInPlus, kInMinus});
    return multiset_of({e});
}

EndMultiset normalize(const EndMultiset& m) {
    EndMultiset r = m;
    const unsigned a = std::min(r[kInPlus], r[kOutMinus]);
    r.count[kInPlus.index()] -= a;
    r.count[kOutMinus.index()] -= a;
    const unsigned b = std::min(r[kInMinus], r[kOutPlus]);
    r.count[kInMinus.index()] -= b;
    r.count[kOutPlus.index()] -= b;
    return r;
}

bool has_resolvable_pair(const EndMultiset& m) {
    return (m[kInPlus] && m[kOutMinus]) || (m[kInMinus] && m[kOutPlus]);
}

EndMultiset weyl_act(int s, const EndMultiset& m) {
    EndMultiset out;
    for (int i = 0; i < 4; ++i) {
        const auto img = weyl_rewrite(s, PrimitiveEnd::from_index(i));
        for (int j = 0; j < 4; ++j) out.count[j] += m.count[i] * img.count[j];
    }
    return normalize(out);
}

PrimitiveEnd dynkin(const PrimitiveEnd& e) {
    return {e.orientation == Orientation::In ? Orientation::Out : Orientation::In, e.sign};
}

EndMultiset dynkin(const EndMultiset& m) {
    EndMultiset out;
    for (int i = 0; i < 4; ++i) out.add(dynkin(PrimitiveEnd::from_index(i)), m.count[i]);
    return out;
}

std::vector<EndMultiset> all_multisets(unsigned max_each) {
    std::vector<EndMultiset> out;
    for (unsigned a = 0; a <= max_each; ++a)
        for (unsigned b = 0; b <= max_each; ++b)
            for (unsigned c = 0; c <= max_each; ++c)
                for (unsigned d = 0; d <= max_each; ++d) out.push_back(EndMultiset{{a, b, c, d}});
    return out;
}

EndMultiset shadow(EndKind k) {
    switch (k) {
        case EndKind::InPlus: return multiset_of({kInPlus});
        case EndKind::InMinus: return multiset_of({kInMinus});
        case EndKind::OutPlus: return multiset_of({kOutPlus});
        case EndKind::OutMinus: return multiset_of({kOutMinus});
        case EndKind::CompositeIn: return multiset_of({kOutPlus, kOutMinus});
        case EndKind::CompositeOut: return multiset_of({kInPlus, kInMinus});
    }
    throw Error(ErrorKind::InvalidKind, "unknown end kind");
}

std::set<int> to_fp_tag(EndKind k) {
    switch (k) {
        case EndKind::OutPlus: return {1};
        case EndKind::CompositeOut: return {2};
        case EndKind::OutMinus: return {3};
        case EndKind::InPlus: return {1, 2};
        case EndKind::CompositeIn: return {1, 3};
        case EndKind::InMinus: return {2, 3};
    }
    throw Error(ErrorKind::InvalidKind, "unknown end kind");
}

EndKind parse_end_kind(const std::string& s) {
    if (s == "i+") return EndKind::InPlus;
    if (s == "i-") return EndKind::InMinus;
    if (s == "o+") return EndKind::OutPlus;
    if (s == "o-") return EndKind::OutMinus;
    if (s == "ci") return EndKind::CompositeIn;
    if (s == "co") return EndKind::CompositeOut;
    throw Error(ErrorKind::InvalidKind, "unknown end kind '" + s + "'");
}

}  // namespace sl3
