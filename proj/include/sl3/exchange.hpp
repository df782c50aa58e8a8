#pragma once

#include "sl3/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sl3 {

// Vertex ids are 0-based in the API; JSON and the CLI use 1-based ids.
using Vertex = std::size_t;
using Permutation = std::vector<Vertex>;  // sigma[i] is the new label of vertex i

// Skew-symmetric exchange matrix stored doubled (matrix2 = 2 * epsilon) so that
// half-integer entries between frozen vertices stay integral.
class ExchangeSeed {
public:
    ExchangeSeed() = default;
    ExchangeSeed(std::size_t n, std::vector<bool> frozen);

    // Throws IndexOutOfRange on shape errors; also checks
    // skew-symmetry and evenness off the frozen block are enforced.
    static ExchangeSeed from_matrix2(const std::vector<std::vector<int>>& m2, std::vector<bool> frozen);

    std::size_t size() const { return n_; }
    bool is_frozen(Vertex i) const { return frozen_.at(i); }
    const std::vector<bool>& frozen() const { return frozen_; }
    std::vector<Vertex> unfrozen() const;

    int m2(Vertex i, Vertex j) const { return m2_[i * n_ + j]; }
    Rational eps(Vertex i, Vertex j) const { return Rational(m2(i, j), 2); }

    // Sets entry (i,j) to v and (j,i) to -v.
    void set_m2(Vertex i, Vertex j, int v);
    // Adds v to (i,j) and -v to (j,i); an arrow i -> j of weight w is add_m2(i, j, 2w).
    void add_m2(Vertex i, Vertex j, int v);

    std::vector<std::vector<int>> matrix2() const;

    // Empty when every stored invariant holds.
    std::vector<std::string> violations() const;

    bool operator==(const ExchangeSeed& o) const = default;
    // Equality ignoring the frozen-frozen block.
    bool equal_off_frozen(const ExchangeSeed& o) const;

private:
    std::size_t n_ = 0;
    std::vector<bool> frozen_;
    std::vector<int> m2_;
};

enum class Flavor { X, A };

struct TropicalPoint {
    Flavor flavor = Flavor::X;
    RationalVector coords;

    static TropicalPoint zero(Flavor f, std::size_t n) { return {f, RationalVector(n, Rational(0))}; }
    static TropicalPoint basis(Flavor f, std::size_t n, Vertex i);

    std::size_t size() const { return coords.size(); }
    const Rational& operator[](Vertex i) const { return coords[i]; }
    Rational& operator[](Vertex i) { return coords[i]; }
    bool operator==(const TropicalPoint& o) const = default;
};

TropicalPoint scale(const TropicalPoint& p, const Rational& lambda);

struct MutationStep {
    enum class Kind { Mutate, Permute };
    Kind kind = Kind::Mutate;
    Vertex k = 0;
    Permutation sigma;

    static MutationStep mutate(Vertex k) { return {Kind::Mutate, k, {}}; }
    static MutationStep permute(Permutation s) { return {Kind::Permute, 0, std::move(s)}; }
    bool operator==(const MutationStep& o) const = default;
};

// Steps apply left to right.
using MutationPath = std::vector<MutationStep>;

ExchangeSeed mutate_matrix(const ExchangeSeed& seed, Vertex k);
TropicalPoint mutate_x_tropical(const TropicalPoint& p, const ExchangeSeed& seed, Vertex k);
TropicalPoint mutate_a_tropical(const TropicalPoint& p, const ExchangeSeed& seed, Vertex k);

// Relabels vertex i as sigma[i] in both matrix and coordinates.
ExchangeSeed permute_seed(const ExchangeSeed& seed, const Permutation& sigma);
TropicalPoint permute_point(const TropicalPoint& p, const Permutation& sigma);
Permutation inverse_permutation(const Permutation& sigma);
Permutation transposition(std::size_t n, Vertex a, Vertex b);

std::pair<TropicalPoint, ExchangeSeed> apply_path(const TropicalPoint& p, const ExchangeSeed& seed,
                                                  const MutationPath& path);
ExchangeSeed apply_path(const ExchangeSeed& seed, const MutationPath& path);

MutationPath invert_path(const MutationPath& path);

// A path together with the seeds it passes through, so that many points can be
// pushed along it without repeating the matrix mutations.
class CompiledPath {
public:
    CompiledPath(const ExchangeSeed& start, MutationPath path);
    TropicalPoint apply(TropicalPoint p) const;
    const ExchangeSeed& start() const { return seeds_.front(); }
    const ExchangeSeed& end() const { return seeds_.back(); }
    const MutationPath& path() const { return path_; }

private:
    MutationPath path_;
    std::vector<ExchangeSeed> seeds_;
};

// count vectors with numerators in [-10,10] and denominators in [1,5], drawn from mt19937_64(rng_seed).
std::vector<RationalVector> random_samples(std::size_t dim, std::size_t count, std::uint64_t rng_seed);

// All of {-1,0,1}^dim in lexicographic order, then random_samples(dim, extra_random, rng_seed).
std::vector<RationalVector> orthant_samples(std::size_t dim, std::size_t extra_random, std::uint64_t rng_seed);

}  // namespace sl3
