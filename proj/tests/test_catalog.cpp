#include "sl3/catalog.hpp"
#include "sl3/error.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace sl3;

namespace {

json catalog_json() {
    std::ifstream in(std::string(FIXTURE_DIR) + "/catalog.json");
    return json::parse(in);
}

}  // namespace

TEST(Catalog, EmbeddedMatchesFixtureFile) {
    EXPECT_EQ(load_catalog(catalog_json()), catalog());
    EXPECT_EQ(catalog().size(), 11u);
}

TEST(Catalog, LoaderRejectsWrongTheta) {
    auto j = catalog_json();
    j[2]["theta"]["w2"] = "2";
    try {
        load_catalog(j);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ChartMismatch);
    }
}

TEST(Catalog, ThetaIsTheCasimirFormula) {
    for (const auto& e : catalog()) {
        auto get = [&](int l) {
            const auto it = e.coords.find(l);
            return it == e.coords.end() ? Rational(0) : it->second;
        };
        EXPECT_EQ(e.theta, (Coweight{get(3) + get(4) + get(5) + get(6), get(1) + get(2)})) << e.name;
    }
}

TEST(Catalog, SymmetriesAreInvolutions) {
    for (const auto& e : catalog()) {
        EXPECT_EQ(orientation_reverse(orientation_reverse(e)).coords, e.coords) << e.name;
        EXPECT_EQ(pi_rotation(pi_rotation(e)).coords, e.coords) << e.name;
        EXPECT_EQ(orientation_reverse(e).theta, dynkin_star(e.theta));
        EXPECT_EQ(pi_rotation(e).theta, e.theta);
        EXPECT_EQ(orientation_reverse(e).name, e.name + "*");
    }
    for (int l = 1; l <= 10; ++l) EXPECT_EQ(pi_rotation_label(pi_rotation_label(l)), l);
}

TEST(Catalog, SignCoherence) {
    const auto& c = catalog();
    EXPECT_TRUE(sign_coherence({c[2], c[5]}));
    EXPECT_FALSE(sign_coherence({c[4], c[9]}));  // x3 = -1 against x3 = 1
    EXPECT_TRUE(sign_coherence({}));
}

TEST(Tracking, GrassmannianPath) {
    const auto& ch = dstar_chart();
    const auto t = track_p_cluster(ch, {MutationStep::mutate(ch.v(5)), MutationStep::mutate(ch.v(3))});
    ASSERT_EQ(t.stations.size(), 3u);
    EXPECT_EQ(t.stations[0].theta_star[ch.v(1)], (Coweight{1, 0}));
    EXPECT_EQ(t.stations[0].theta_star[ch.v(3)], (Coweight{0, 1}));
    EXPECT_EQ(t.stations[1].theta_star[ch.v(5)], Coweight{});
    EXPECT_EQ(t.stations[2].theta_star[ch.v(3)], Coweight{});
    for (const auto& st : t.stations)
        for (Vertex v = 0; v < st.theta.size(); ++v) EXPECT_EQ(st.theta_star[v], dynkin_star(st.theta[v]));
}
