#include "sl3/lattice.hpp"
#include "sl3/error.hpp"

namespace sl3 {

Coweight simple_coroot(int s) {
    if (s != 1 && s != 2) throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
    return {kCartan[s - 1][0], kCartan[s - 1][1]};
}

Weight simple_root(int s) {
    if (s != 1 && s != 2) throw Error(ErrorKind::IndexOutOfRange, "simple index must be 1 or 2");
    return {kCartan[s - 1][0], kCartan[s - 1][1]};
}

Rational pairing(const Weight& w, const Coweight& lambda) {
    // <w_s, w_t^v> is the inverse Cartan matrix (1/3)[[2,1],[1,2]]
    return (Rational(2) * w.w1 * lambda.c1 + w.w1 * lambda.c2 + w.w2 * lambda.c1 + Rational(2) * w.w2 * lambda.c2) / 3;
}

Coweight reflect(int s, const Coweight& lambda) {
    return lambda - simple_coroot(s) * pairing(simple_root(s), lambda);
}

Coweight dynkin_star(const Coweight& lambda) { return {lambda.c2, lambda.c1}; }

bool is_dominant(const Coweight& lambda) { return lambda.c1 >= 0 && lambda.c2 >= 0; }

bool is_antidominant(const Coweight& lambda) { return is_dominant(-lambda); }

Coweight apply_word(const WeylWord& word, const Coweight& lambda) {
    Coweight out = lambda;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect(*it, out);
    return out;
}

const std::vector<WeylWord>& weyl_elements() {
    static const std::vector<WeylWord> elems = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};
    return elems;
}

WeylWord normal_form(const WeylWord& word) {
    // W acts simply transitively on the orbit of a regular coweight
    const Coweight rho{1, 1};
    const Coweight image = apply_word(word, rho);
    for (const auto& w : weyl_elements())
        if (apply_word(w, rho) == image) return w;
    throw Error(ErrorKind::InvalidKind, "word does not reduce");
}

Weight fp_weight_vector(const std::set<int>& tag) {
    if (tag.empty() || tag.size() >= 3) throw Error(ErrorKind::InvalidTag, "tag must be a proper nonempty subset of {1,2,3}");
    std::array<Rational, 3> v{0, 0, 0};
    for (int i : tag) {
        if (i < 1 || i > 3) throw Error(ErrorKind::InvalidTag, "tag entries must lie in {1,2,3}");
        v[i - 1] = 1;
    }
    return Weight::from_z3(v[0], v[1], v[2]);
}

}  // namespace sl3
