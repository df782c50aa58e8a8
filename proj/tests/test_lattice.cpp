#include "sl3/error.hpp"
#include "sl3/lattice.hpp"

#include <gtest/gtest.h>

using namespace sl3;

namespace {

std::vector<Coweight> grid() {
    std::vector<Coweight> out;
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) out.push_back({Rational(a, 2), Rational(b)});
    return out;
}

}  // namespace

TEST(Lattice, SimpleRootsPairWithFundamentalCoweights) {
    for (int s : {1, 2})
        for (int t : {1, 2}) EXPECT_EQ(pairing(simple_root(s), Coweight::fundamental(t)), s == t ? 1 : 0);
    EXPECT_EQ(simple_coroot(1), (Coweight{2, -1}));
    EXPECT_EQ(simple_coroot(2), (Coweight{-1, 2}));
    EXPECT_EQ(pairing(simple_root(1), simple_coroot(1)), 2);
    EXPECT_EQ(pairing(simple_root(1), simple_coroot(2)), -1);
}

TEST(Lattice, ReflectionsGenerateS3) {
    for (const auto& c : grid()) {
        for (int s : {1, 2}) EXPECT_EQ(reflect(s, reflect(s, c)), c);
        EXPECT_EQ(reflect(1, reflect(2, reflect(1, c))), reflect(2, reflect(1, reflect(2, c))));
        EXPECT_EQ(dynkin_star(dynkin_star(c)), c);
        EXPECT_EQ(dynkin_star(reflect(1, dynkin_star(c))), reflect(2, c));
    }
    EXPECT_EQ(reflect(1, Coweight{1, 0}), (Coweight{-1, 1}));
    EXPECT_EQ(reflect(2, Coweight{0, 1}), (Coweight{1, -1}));
}

TEST(Lattice, LongestElementIsMinusDynkin) {
    for (const auto& c : grid()) EXPECT_EQ(apply_word({1, 2, 1}, c), -dynkin_star(c));
}

TEST(Lattice, NormalForms) {
    EXPECT_EQ(weyl_elements().size(), 6u);
    EXPECT_EQ(normal_form({1, 1}), WeylWord{});
    EXPECT_EQ(normal_form({2, 1, 2}), (WeylWord{1, 2, 1}));
    for (const auto& w : weyl_elements()) {
        EXPECT_EQ(normal_form(w), w);
        for (const auto& c : grid()) EXPECT_EQ(apply_word(normal_form(w), c), apply_word(w, c));
    }
}

TEST(Lattice, Dominance) {
    EXPECT_TRUE(is_dominant({1, 0}));
    EXPECT_FALSE(is_dominant({1, -1}));
    EXPECT_TRUE(is_antidominant({0, -2}));
    EXPECT_TRUE(is_dominant(apply_word({1, 2, 1}, {-1, -1})));
}

TEST(Lattice, FockGoncharovWeights) {
    EXPECT_EQ(fp_weight_vector({1}), (Weight{1, 0}));
    EXPECT_EQ(fp_weight_vector({1, 2}), (Weight{0, 1}));
    EXPECT_EQ(fp_weight_vector({3}), (Weight{0, -1}));
    EXPECT_EQ(fp_weight_vector({1, 3}), (Weight{1, -1}));
    EXPECT_EQ(Weight::from_z3(2, 2, 2), Weight{});
    for (const auto& tag : {std::set<int>{}, std::set<int>{1, 2, 3}, std::set<int>{4}}) {
        try {
            fp_weight_vector(tag);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::InvalidTag);
        }
    }
}
