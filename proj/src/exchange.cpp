#include "sl3/exchange.hpp"
#include "sl3/error.hpp"

#include <iterator>
#include <random>

namespace sl3 {

namespace {

void check_index(std::size_t n, Vertex k) {
    if (k >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex " + std::to_string(k + 1) + " out of range 1.." + std::to_string(n));
}

void check_mutable(const ExchangeSeed& seed, Vertex k) {
    check_index(seed.size(), k);
    if (seed.is_frozen(k)) throw Error(ErrorKind::FrozenMutation, "vertex " + std::to_string(k + 1) + " is frozen");
}

void check_permutation(const ExchangeSeed& seed, const Permutation& sigma) {
    const std::size_t n = seed.size();
    if (sigma.size() != n) throw Error(ErrorKind::InvalidPermutation, "permutation length differs from seed size");
    std::vector<bool> seen(n, false);
    for (Vertex i = 0; i < n; ++i) {
        if (sigma[i] >= n || seen[sigma[i]]) throw Error(ErrorKind::InvalidPermutation, "not a bijection");
        seen[sigma[i]] = true;
        if (seed.is_frozen(i) != seed.is_frozen(sigma[i]))
            throw Error(ErrorKind::InvalidPermutation, "permutation does not preserve the frozen set");
    }
}

}  // namespace

ExchangeSeed::ExchangeSeed(std::size_t n, std::vector<bool> frozen)
    : n_(n), frozen_(std::move(frozen)), m2_(n * n, 0) {
    if (frozen_.size() != n) throw Error(ErrorKind::InvalidSeed, "frozen flags do not match size");
}

ExchangeSeed ExchangeSeed::from_matrix2(const std::vector<std::vector<int>>& m2, std::vector<bool> frozen) {
    ExchangeSeed s(m2.size(), std::move(frozen));
    for (std::size_t i = 0; i < s.n_; ++i) {
        if (m2[i].size() != s.n_) throw Error(ErrorKind::InvalidSeed, "matrix2 is not square");
        for (std::size_t j = 0; j < s.n_; ++j) s.m2_[i * s.n_ + j] = m2[i][j];
    }
    auto v = s.violations();
    if (!v.empty()) throw Error(ErrorKind::InvalidSeed, v.front());
    return s;
}

std::vector<Vertex> ExchangeSeed::unfrozen() const {
    std::vector<Vertex> out;
    for (Vertex i = 0; i < n_; ++i)
        if (!frozen_[i]) out.push_back(i);
    return out;
}

void ExchangeSeed::set_m2(Vertex i, Vertex j, int v) {
    m2_[i * n_ + j] = v;
    m2_[j * n_ + i] = -v;
}

void ExchangeSeed::add_m2(Vertex i, Vertex j, int v) {
    m2_[i * n_ + j] += v;
    m2_[j * n_ + i] -= v;
}

std::vector<std::vector<int>> ExchangeSeed::matrix2() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = m2(i, j);
    return out;
}

std::vector<std::string> ExchangeSeed::violations() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j) {
            const auto at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (m2(i, j) != -m2(j, i)) out.push_back("not skew-symmetric at " + at);
            if (!(frozen_[i] && frozen_[j]) && m2(i, j) % 2 != 0)
                out.push_back("half-integer entry outside the frozen block at " + at);
        }
    return out;
}

bool ExchangeSeed::equal_off_frozen(const ExchangeSeed& o) const {
    if (n_ != o.n_ || frozen_ != o.frozen_) return false;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (frozen_[i] && frozen_[j]) continue;
            if (m2(i, j) != o.m2(i, j)) return false;
        }
    return true;
}

TropicalPoint TropicalPoint::basis(Flavor f, std::size_t n, Vertex i) {
    auto p = zero(f, n);
    p.coords.at(i) = 1;
    return p;
}

TropicalPoint scale(const TropicalPoint& p, const Rational& lambda) {
    TropicalPoint q = p;
    for (auto& c : q.coords) c *= lambda;
    return q;
}

ExchangeSeed mutate_matrix(const ExchangeSeed& seed, Vertex k) {
    check_mutable(seed, k);
    const std::size_t n = seed.size();
    ExchangeSeed out = seed;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            int v;
            if (i == k || j == k) {
                v = -seed.m2(i, j);
            } else {
                const int ik = seed.m2(i, k), kj = seed.m2(k, j);
                // 2e' = 2e + (2e_ik |2e_kj| + |2e_ik| 2e_kj) / 4; both factors are even here
                v = seed.m2(i, j) + (ik * std::abs(kj) + std::abs(ik) * kj) / 4;
            }
            out.set_m2(i, j, v);
        }
    }
    return out;
}

TropicalPoint mutate_x_tropical(const TropicalPoint& p, const ExchangeSeed& seed, Vertex k) {
    if (p.flavor != Flavor::X) throw Error(ErrorKind::FlavorMismatch, "X-mutation applied to an A-point");
    if (p.size() != seed.size()) throw Error(ErrorKind::IndexOutOfRange, "point length differs from seed size");
    check_mutable(seed, k);
    TropicalPoint q = p;
    const Rational& xk = p[k];
    q[k] = -xk;
    if (xk == 0) return q;
    for (Vertex i = 0; i < seed.size(); ++i) {
        if (i == k) continue;
        const int e2 = seed.m2(i, k);
        if (e2 == 0) continue;
        // [-sgn(e_ik) x_k]_+ is nonzero only when x_k has the sign opposite to e_ik
        if (e2 > 0 && xk < 0) q[i] += Rational(e2, 2) * xk;
        else if (e2 < 0 && xk > 0) q[i] -= Rational(e2, 2) * xk;
    }
    return q;
}

TropicalPoint mutate_a_tropical(const TropicalPoint& p, const ExchangeSeed& seed, Vertex k) {
    if (p.flavor != Flavor::A) throw Error(ErrorKind::FlavorMismatch, "A-mutation applied to an X-point");
    if (p.size() != seed.size()) throw Error(ErrorKind::IndexOutOfRange, "point length differs from seed size");
    check_mutable(seed, k);
    Rational plus = 0, minus = 0;
    for (Vertex j = 0; j < seed.size(); ++j) {
        const int e2 = seed.m2(k, j);
        if (e2 > 0) plus += Rational(e2, 2) * p[j];
        else if (e2 < 0) minus += Rational(-e2, 2) * p[j];
    }
    TropicalPoint q = p;
    q[k] = -p[k] + rmax(plus, minus);
    return q;
}

ExchangeSeed permute_seed(const ExchangeSeed& seed, const Permutation& sigma) {
    check_permutation(seed, sigma);
    const std::size_t n = seed.size();
    std::vector<bool> frozen(n);
    for (Vertex i = 0; i < n; ++i) frozen[sigma[i]] = seed.is_frozen(i);
    ExchangeSeed out(n, frozen);
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) out.set_m2(sigma[i], sigma[j], seed.m2(i, j));
    return out;
}

TropicalPoint permute_point(const TropicalPoint& p, const Permutation& sigma) {
    if (sigma.size() != p.size()) throw Error(ErrorKind::InvalidPermutation, "permutation length differs from point length");
    TropicalPoint q = p;
    for (Vertex i = 0; i < p.size(); ++i) q[sigma[i]] = p[i];
    return q;
}

Permutation inverse_permutation(const Permutation& sigma) {
    Permutation inv(sigma.size());
    for (Vertex i = 0; i < sigma.size(); ++i) {
        if (sigma[i] >= sigma.size()) throw Error(ErrorKind::InvalidPermutation, "not a bijection");
        inv[sigma[i]] = i;
    }
    return inv;
}

Permutation transposition(std::size_t n, Vertex a, Vertex b) {
    check_index(n, a);
    check_index(n, b);
    Permutation s(n);
    for (Vertex i = 0; i < n; ++i) s[i] = i;
    std::swap(s[a], s[b]);
    return s;
}

std::pair<TropicalPoint, ExchangeSeed> apply_path(const TropicalPoint& p, const ExchangeSeed& seed,
                                                  const MutationPath& path) {
    TropicalPoint q = p;
    ExchangeSeed s = seed;
    for (const auto& step : path) {
        if (step.kind == MutationStep::Kind::Mutate) {
            q = q.flavor == Flavor::X ? mutate_x_tropical(q, s, step.k) : mutate_a_tropical(q, s, step.k);
            s = mutate_matrix(s, step.k);
        } else {
            s = permute_seed(s, step.sigma);
            q = permute_point(q, step.sigma);
        }
    }
    return {q, s};
}

ExchangeSeed apply_path(const ExchangeSeed& seed, const MutationPath& path) {
    ExchangeSeed s = seed;
    for (const auto& step : path)
        s = step.kind == MutationStep::Kind::Mutate ? mutate_matrix(s, step.k) : permute_seed(s, step.sigma);
    return s;
}

MutationPath invert_path(const MutationPath& path) {
    MutationPath out;
    out.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (it->kind == MutationStep::Kind::Mutate) out.push_back(*it);
        else out.push_back(MutationStep::permute(inverse_permutation(it->sigma)));
    }
    return out;
}

CompiledPath::CompiledPath(const ExchangeSeed& start, MutationPath path) : path_(std::move(path)) {
    seeds_.push_back(start);
    for (const auto& step : path_) {
        const auto& s = seeds_.back();
        seeds_.push_back(step.kind == MutationStep::Kind::Mutate ? mutate_matrix(s, step.k) : permute_seed(s, step.sigma));
    }
}

TropicalPoint CompiledPath::apply(TropicalPoint p) const {
    for (std::size_t t = 0; t < path_.size(); ++t) {
        const auto& step = path_[t];
        if (step.kind == MutationStep::Kind::Mutate)
            p = p.flavor == Flavor::X ? mutate_x_tropical(p, seeds_[t], step.k) : mutate_a_tropical(p, seeds_[t], step.k);
        else
            p = permute_point(p, step.sigma);
    }
    return p;
}

std::vector<RationalVector> random_samples(std::size_t dim, std::size_t count, std::uint64_t rng_seed) {
    std::vector<RationalVector> out;
    out.reserve(count);
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<int> num(-10, 10), den(1, 5);
    for (std::size_t r = 0; r < count; ++r) {
        RationalVector w(dim);
        for (auto& x : w) {
            const int a = num(rng);
            const int b = den(rng);
            x = Rational(a, b);
        }
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<RationalVector> orthant_samples(std::size_t dim, std::size_t extra_random, std::uint64_t rng_seed) {
    std::vector<RationalVector> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 3;
    out.reserve(total + extra_random);
    RationalVector v(dim, Rational(-1));
    for (std::size_t c = 0; c < total; ++c) {
        out.push_back(v);
        for (std::size_t i = dim; i-- > 0;) {
            if (v[i] < 1) {
                v[i] += 1;
                break;
            }
            v[i] = -1;
        }
    }
    auto rnd = random_samples(dim, extra_random, rng_seed);
    std::move(rnd.begin(), rnd.end(), std::back_inserter(out));
    return out;
}

}  // namespace sl3
