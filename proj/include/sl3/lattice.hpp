#pragma once

#include "sl3/rational.hpp"

#include <array>
#include <set>
#include <vector>

namespace sl3 {

// Coweight c1 w1v + c2 w2v in the fundamental coweight basis.
struct Coweight {
    Rational c1 = 0, c2 = 0;

    static Coweight fundamental(int s) { return s == 1 ? Coweight{1, 0} : Coweight{0, 1}; }
    Coweight operator+(const Coweight& o) const { return {c1 + o.c1, c2 + o.c2}; }
    Coweight operator-(const Coweight& o) const { return {c1 - o.c1, c2 - o.c2}; }
    Coweight operator-() const { return {-c1, -c2}; }
    Coweight operator*(const Rational& k) const { return {c1 * k, c2 * k}; }
    Coweight& operator+=(const Coweight& o) {
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    bool operator==(const Coweight& o) const = default;
    bool operator<(const Coweight& o) const { return c1 < o.c1 || (c1 == o.c1 && c2 < o.c2); }
};

// Weight in the fundamental weight basis; Z^3/(1,1,1) via w1 = e1, w2 = e1 + e2.
struct Weight {
    Rational w1 = 0, w2 = 0;

    static Weight from_z3(const Rational& a, const Rational& b, const Rational& c) { return {a - b, b - c}; }
    // Representative with vanishing third coordinate.
    std::array<Rational, 3> to_z3() const { return {w1 + w2, w2, Rational(0)}; }
    bool operator==(const Weight& o) const = default;
    bool operator<(const Weight& o) const { return w1 < o.w1 || (w1 == o.w1 && w2 < o.w2); }
};

// Cartan matrix of sl3; simple coroots alpha_s^v = sum_t C[s][t] w_t^v.
inline constexpr int kCartan[2][2] = {{2, -1}, {-1, 2}};

Coweight simple_coroot(int s);
Weight simple_root(int s);
// <w, lambda> for a weight and a coweight; <alpha_s, w_t^v> = delta_st.
Rational pairing(const Weight& w, const Coweight& lambda);

// r_s(lambda) = lambda - <alpha_s, lambda> alpha_s^v.
Coweight reflect(int s, const Coweight& lambda);
Coweight dynkin_star(const Coweight& lambda);
bool is_dominant(const Coweight& lambda);
bool is_antidominant(const Coweight& lambda);

// Words act right to left: {1,2} means r1(r2(lambda)).
using WeylWord = std::vector<int>;
Coweight apply_word(const WeylWord& word, const Coweight& lambda);
// One of the six reduced words {}, {1}, {2}, {1,2}, {2,1}, {1,2,1}.
WeylWord normal_form(const WeylWord& word);
const std::vector<WeylWord>& weyl_elements();

// iota_A = sum_{i in A} e_i for a proper nonempty subset of {1,2,3}.
Weight fp_weight_vector(const std::set<int>& tag);

// Identification of coweights with weights, w_s^v <-> w_s.
inline Weight as_weight(const Coweight& c) { return {c.c1, c.c2}; }

}  // namespace sl3
