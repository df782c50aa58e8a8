#include "sl3/error.hpp"
#include "sl3/json_io.hpp"

#include <gtest/gtest.h>

using namespace sl3;

namespace {

template <class F>
void expect_parse_error(F f) {
    try {
        f();
        ADD_FAILURE() << "no error";
    } catch (const Error& e) {
        EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::IndexOutOfRange) << e.what();
    }
}

}  // namespace

TEST(Json, PointUsesStringRationals) {
    TropicalPoint p{Flavor::A, {Rational(1, 3), Rational(-2), Rational(0)}};
    const auto j = to_json(p);
    EXPECT_EQ(j.dump(), R"({"coords":["1/3","-2","0"],"flavor":"A"})");
    EXPECT_EQ(point_from_json(j), p);
}

TEST(Json, PathIsOneBased) {
    const auto path = path_from_json(json::parse(R"([{"mutate":3},{"permute":[2,1,3]}])"));
    ASSERT_EQ(path.size(), 2u);
    EXPECT_EQ(path[0], MutationStep::mutate(2));
    EXPECT_EQ(path[1], MutationStep::permute({1, 0, 2}));
    EXPECT_EQ(path_from_json(to_json(path)), path);
}

TEST(Json, SeedRoundTrip) {
    ExchangeSeed s(3, {false, true, true});
    s.add_m2(0, 1, 2);
    s.add_m2(1, 2, 1);  // half arrow between frozen vertices
    EXPECT_EQ(seed_from_json(to_json(s)), s);
}

TEST(Json, TriangulationRoundTrip) {
    const auto tri = load_triangulation(std::string(FIXTURE_DIR) + "/dstar.json");
    const auto again = triangulation_from_json(to_json(tri));
    EXPECT_EQ(to_json(again), to_json(tri));
}

TEST(Json, CoweightKeys) {
    EXPECT_EQ(to_json(Coweight{0, 1}).dump(), R"({"w1":"0","w2":"1"})");
    EXPECT_EQ(coweight_from_json(json::parse(R"({"w1":"-1/2","w2":"3"})")), (Coweight{Rational(-1, 2), 3}));
}

TEST(Json, MalformedInput) {
    expect_parse_error([] { parse_json_arg("{not json"); });
    expect_parse_error([] { point_from_json(json::parse(R"({"flavor":"Y","coords":[]})")); });
    expect_parse_error([] { point_from_json(json::parse(R"({"flavor":"X","coords":["1/0"]})")); });
    expect_parse_error([] { path_from_json(json::parse(R"([{"mutate":0}])")); });
    expect_parse_error([] { path_from_json(json::parse(R"({"mutate":1})")); });
    expect_parse_error([] { read_json_file("/nonexistent/file.json"); });
}
