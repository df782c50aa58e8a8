#pragma once

#include "sl3/lattice.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace sl3 {

enum class Orientation { In, Out };  // toward / away from the puncture
enum class EndSign { Plus, Minus };

struct PrimitiveEnd {
    Orientation orientation = Orientation::In;
    EndSign sign = EndSign::Plus;

    int index() const { return (orientation == Orientation::Out ? 2 : 0) + (sign == EndSign::Minus ? 1 : 0); }
    static PrimitiveEnd from_index(int i);
    bool operator==(const PrimitiveEnd&) const = default;
};

inline const PrimitiveEnd kInPlus{Orientation::In, EndSign::Plus};
inline const PrimitiveEnd kInMinus{Orientation::In, EndSign::Minus};
inline const PrimitiveEnd kOutPlus{Orientation::Out, EndSign::Plus};
inline const PrimitiveEnd kOutMinus{Orientation::Out, EndSign::Minus};

// "i+", "i-", "o+", "o-"
std::string to_string(const PrimitiveEnd& e);
PrimitiveEnd parse_end(const std::string& s);

// Multiplicities indexed by PrimitiveEnd::index(): (in,+), (in,-), (out,+), (out,-).
struct EndMultiset {
    std::array<unsigned, 4> count{};

    unsigned operator[](const PrimitiveEnd& e) const { return count[e.index()]; }
    EndMultiset& add(const PrimitiveEnd& e, unsigned k = 1) {
        count[e.index()] += k;
        return *this;
    }
    EndMultiset operator+(const EndMultiset& o) const;
    unsigned total() const { return count[0] + count[1] + count[2] + count[3]; }
    bool operator==(const EndMultiset&) const = default;
};

EndMultiset multiset_of(std::initializer_list<PrimitiveEnd> ends);
// Counted list, e.g. "2*i+ o-" or "" for the empty multiset.
std::string to_string(const EndMultiset& m);
EndMultiset parse_multiset(const std::string& text);

Coweight contribution(const PrimitiveEnd& e);
Coweight theta(const EndMultiset& m);

EndMultiset weyl_rewrite(int s, const PrimitiveEnd& e);
// Cancels the pairs {(in,+),(out,-)} and {(in,-),(out,+)}.
EndMultiset normalize(const EndMultiset& m);
bool has_resolvable_pair(const EndMultiset& m);
EndMultiset weyl_act(int s, const EndMultiset& m);
EndMultiset dynkin(const EndMultiset& m);
PrimitiveEnd dynkin(const PrimitiveEnd& e);

// Every multiset with each multiplicity in 0..max_each.
std::vector<EndMultiset> all_multisets(unsigned max_each);

// The six end kinds of the sign/tag table: the primitives plus the two loop-attached ends.
// A composite-in end carries the shadow {(out,+),(out,-)}, a composite-out end {(in,+),(in,-)}.
enum class EndKind { InPlus, InMinus, OutPlus, OutMinus, CompositeIn, CompositeOut };

EndMultiset shadow(EndKind k);
std::set<int> to_fp_tag(EndKind k);
EndKind parse_end_kind(const std::string& s);

}  // namespace sl3
