#include "support.hpp"

#include "umbral/serialize.hpp"
#include "umbral/series_parse.hpp"

#include <gtest/gtest.h>

using namespace umbral;

constexpr int kIterations = 50;

TEST(Json, PolyRoundTrip) {
    std::vector<Var> vs{vars::x(), Var("a", 1), Var("a", 12)};
    for (int i = 0; i < kIterations; ++i) {
        Poly p = umbral::testing::random_poly(vs);
        EXPECT_EQ(poly_from_json(Json::parse(to_json(p).dump())), p);
    }
}

TEST(Json, PolyShape) {
    Json j = to_json(X().pow(2) * Rational(1, 2) - 3);
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), 2u);
    bool saw_half = false;
    for (const auto& t : j)
        if (t.at("coeff") == "1/2") {
            saw_half = true;
            EXPECT_EQ(t.at("vars").at("x"), 2);
        }
    EXPECT_TRUE(saw_half);
    EXPECT_EQ(to_json(Poly()).dump(), "[]");
    EXPECT_EQ(poly_from_json(Json::parse(R"([{"coeff": 4, "vars": {}}])")), Poly(4));
    EXPECT_THROW(poly_from_json(Json::parse("{}")), std::invalid_argument);
}

TEST(Json, SeriesRoundTrip) {
    Series s = parse_series("exp(D)-1", 6, SeriesVar::D);
    Json j = to_json(s);
    EXPECT_EQ(j.at("variable"), "D");
    EXPECT_EQ(j.at("order"), 6);
    EXPECT_EQ(series_from_json(j), s);
    j["order"] = 3;
    EXPECT_THROW(series_from_json(j), std::invalid_argument);
    j["variable"] = "w";
    EXPECT_THROW(series_from_json(j), std::invalid_argument);
}

TEST(Json, PolySeqRoundTrip) {
    Alphabet a;
    UmbraId g = a.register_umbra("g", MomentSeq::generic("g"));
    UmbraId g1 = a.clone_exchangeable(g);
    PolySeq seq = binomial_from_umbra(a, g1, 4);
    PolySeq back = polyseq_from_json(Json::parse(to_json(seq).dump()));
    EXPECT_EQ(back, seq);
    EXPECT_EQ(back.provenance, seq.provenance);
    EXPECT_EQ(back.provenance.representing->str(), "g'");
    PolySeq plain = abel_sequence(a, g, 3);
    EXPECT_TRUE(to_json(plain).at("provenance").at("representing").is_null());
    EXPECT_EQ(polyseq_from_json(to_json(plain)).provenance, plain.provenance);
}

TEST(Json, KSeqRoundTrip) {
    Alphabet a;
    UmbraId u = a.register_umbra("u", MomentSeq::uniform());
    KSeq K = k_polynomials(a, u, 5);
    EXPECT_EQ(kseq_from_json(to_json(K)).entries, K.entries);
}

TEST(Json, UmbraIds) {
    UmbraId id = umbra_id_from_string("mu'''");
    EXPECT_EQ(id.name, "mu");
    EXPECT_EQ(id.copy, 3u);
    EXPECT_EQ(id.str(), "mu'''");
}
