#include "sl3/catalog.hpp"
#include "sl3/error.hpp"
#include "sl3/lamination.hpp"
#include "sl3/suites.hpp"

#include <gtest/gtest.h>

using namespace sl3;

namespace {

Triangulation fixture(const std::string& name) { return load_triangulation(std::string(FIXTURE_DIR) + "/" + name + ".json"); }

std::vector<TropicalPoint> randoms(Flavor f, std::size_t n, std::size_t count, std::uint64_t seed) {
    std::vector<TropicalPoint> out;
    for (auto& v : random_samples(n, count, seed)) out.push_back({f, std::move(v)});
    return out;
}

template <class F>
void expect_error(ErrorKind kind, F f) {
    try {
        f();
        ADD_FAILURE() << "no error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

TEST(Chart, DstarLabelsAreGlobalIds) {
    const auto ch = make_puncture_chart(fixture("dstar"), "p");
    for (int l = 1; l <= 10; ++l) EXPECT_EQ(ch.v(l), static_cast<Vertex>(l - 1));
    for (auto [a, b] : puncture_chart_arrows()) EXPECT_GT(ch.seed().m2(ch.v(a), ch.v(b)), 0) << a << "->" << b;
    for (int l = 1; l <= 6; ++l) EXPECT_FALSE(ch.seed().is_frozen(ch.v(l)));
    EXPECT_THROW(ch.v(11), Error);
}

TEST(Chart, Errors) {
    expect_error(ErrorKind::MissingChart, [] { make_puncture_chart(fixture("triangle"), "a"); });
    expect_error(ErrorKind::MissingChart, [] { make_puncture_chart(fixture("dstar"), "t"); });
    expect_error(ErrorKind::MissingChart, [] { make_puncture_chart(fixture("torus"), "p"); });
    const auto ch = dstar_chart();
    expect_error(ErrorKind::ChartMismatch, [&] { casimir(TropicalPoint::zero(Flavor::X, 9), ch); });
    expect_error(ErrorKind::FlavorMismatch, [&] { casimir(TropicalPoint::zero(Flavor::A, 10), ch); });
    expect_error(ErrorKind::FlavorMismatch, [&] { weyl_a_action(TropicalPoint::zero(Flavor::X, 10), ch, 1); });
}

TEST(Casimir, MatchesChartFormula) {
    const auto ch = dstar_chart();
    for (const auto& x : randoms(Flavor::X, 10, 200, 5)) {
        const Coweight expect{x[2] + x[3] + x[4] + x[5], x[0] + x[1]};
        EXPECT_EQ(casimir(x, ch), expect);
        EXPECT_EQ(casimir_at(x, ch.tri, ch.layout(), ch.puncture), expect);
    }
}

TEST(Casimir, GeneralVectorsAgreeWithChartsOnTwoPunctures) {
    const auto tri = fixture("twice_punctured_disk");
    const auto charts = puncture_charts(tri);
    ASSERT_EQ(charts.size(), 2u);
    for (const auto& ch : charts)
        for (const auto& x : randoms(Flavor::X, ch.size(), 100, 6))
            EXPECT_EQ(casimir(x, ch), casimir_at(x, tri, ch.layout(), ch.puncture));
}

TEST(ExactSequence, RanksOnEveryFixture) {
    struct Row {
        std::string name;
        std::size_t ker, ann;
    };
    for (const auto& r : std::vector<Row>{{"dstar", 2, 6},
                                          {"triangle", 0, 6},
                                          {"square", 0, 8},
                                          {"annulus", 0, 4},
                                          {"torus", 2, 2},
                                          {"twice_punctured_disk", 4, 8}}) {
        const auto rep = verify_exact_sequence(fixture(r.name));
        EXPECT_EQ(rep.ker_rank, r.ker) << r.name;
        EXPECT_EQ(rep.ann_rank, r.ann) << r.name;
        EXPECT_TRUE(rep.ok()) << r.name;
    }
}

TEST(Ensemble, IsTheExchangeMatrixProduct) {
    const auto q = build_quiver(fixture("torus"));
    for (const auto& a : randoms(Flavor::A, q.seed.size(), 50, 7)) {
        const auto x = ensemble_tropical(a, q.seed);
        for (Vertex i = 0; i < q.seed.size(); ++i) {
            Rational s = 0;
            for (Vertex j = 0; j < q.seed.size(); ++j) s += q.seed.eps(i, j) * a[j];
            EXPECT_EQ(x[i], s);
        }
    }
}

TEST(Weyl, LoopsAgreeWithClosedFormOnRandomPoints) {
    const auto ch = dstar_chart();
    for (int s : {1, 2}) {
        const auto loops = weyl_loop(s, ch);
        const CompiledPath prim(ch.seed(), loops.primary), alt(ch.seed(), loops.alternative);
        for (const auto& x : randoms(Flavor::X, 10, 100, 8)) {
            EXPECT_EQ(prim.apply(x), weyl_pl(s, x, ch));
            EXPECT_EQ(alt.apply(x), weyl_pl(s, x, ch));
        }
    }
    EXPECT_THROW(weyl_pl(3, TropicalPoint::zero(Flavor::X, 10), ch), Error);
}

TEST(Weyl, ActsOnCasimirByReflection) {
    const auto ch = dstar_chart();
    for (const auto& x : randoms(Flavor::X, 10, 200, 9))
        for (int s : {1, 2}) EXPECT_EQ(casimir(weyl_pl(s, x, ch), ch), reflect(s, casimir(x, ch)));
}

TEST(Weyl, PeripheralAVector) {
    const auto ch = dstar_chart();
    auto a = TropicalPoint::zero(Flavor::A, 10);
    a[0] = a[1] = Rational(1, 3);
    for (Vertex i = 2; i < 6; ++i) a[i] = Rational(2, 3);
    EXPECT_EQ(potential_u(a, ch, 1), 1);
    EXPECT_EQ(potential_u(a, ch, 2), 0);
    const auto b = weyl_a_action(a, ch, 1);
    EXPECT_EQ(potential_u(b, ch, 1), -1);
    EXPECT_EQ(potential_u(b, ch, 2), 1);
    EXPECT_EQ(b[0], Rational(1, 3));
    EXPECT_EQ(b[2], Rational(-1, 3));
}

TEST(Dynkin, InvolutiveOnTorusAndDstar) {
    for (const auto& name : {"torus", "dstar", "annulus"}) {
        const auto tri = fixture(name);
        const auto q = build_quiver(tri);
        for (const auto& x : randoms(Flavor::X, q.seed.size(), 100, 10))
            EXPECT_EQ(dynkin_pl(dynkin_pl(x, tri, q.layout), tri, q.layout), x) << name;
    }
}

TEST(Dynkin, NegatesFaces) {
    const auto tri = fixture("square");
    const auto q = build_quiver(tri);
    for (const auto& x : randoms(Flavor::X, q.seed.size(), 50, 11)) {
        const auto y = dynkin_pl(x, tri, q.layout);
        for (Vertex f : q.layout.face_vertex) EXPECT_EQ(y[f], -x[f]);
    }
}

TEST(SpecialPoint, PinningFormula) {
    const auto tri = fixture("triangle");
    const auto ch = make_special_chart(tri, tri.points[0].id);
    auto x = TropicalPoint::zero(Flavor::X, ch.size());
    x[ch.v(1)] = -2;
    x[ch.v(3)] = -1;
    x[ch.v(4)] = 3;
    EXPECT_EQ(pinning_from_point(x, ch), (Coweight{-2, 2}));
    EXPECT_EQ(w_m_tropical(x, ch), 2);
    EXPECT_THROW(ch.v(8), Error);
    EXPECT_FALSE(is_in_Lp0({Coweight{1, 0}}, Pinning{{{"i", Coweight{-2, 2}}}}));
    EXPECT_TRUE(is_in_Lp0({Coweight{1, 0}}, Pinning{{{"i", Coweight{-2, 0}}}}));
    EXPECT_FALSE(is_in_Lp0({Coweight{-1, 0}}, Pinning{}));
}
