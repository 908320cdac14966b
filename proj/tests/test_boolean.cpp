#include <doctest.h>

#include <random>

#include "cncode/boolean_function.hpp"
#include "cncode/errors.hpp"
#include "cncode/metric.hpp"

#include "oracles.hpp"

using cncode::BooleanFunction;
using cncode::EvaluationSet;
using cncode::Ratio;

namespace {

BooleanFunction random_function(std::mt19937_64& rng, int m) {
    std::vector<std::uint8_t> tab(std::size_t{1} << m);
    for (std::uint8_t& v : tab) v = static_cast<std::uint8_t>(rng() & 1);
    return BooleanFunction(m, std::move(tab));
}

} // namespace

TEST_CASE("anf parsing") {
    BooleanFunction f = BooleanFunction::parse_anf("x1*x2+x3*x4", 4);
    CHECK(f.vars() == 4);
    CHECK(f.value(0b0011));  // x1 = x2 = 1
    CHECK(f.value(0b1100));  // x3 = x4 = 1
    CHECK_FALSE(f.value(0b1111));
    CHECK_FALSE(f.value(0));

    CHECK(BooleanFunction::parse_anf("1", 2).value(0));
    CHECK_FALSE(BooleanFunction::parse_anf("0", 2).value(0));
    CHECK(BooleanFunction::parse_anf("x1 * x2 + 1", 2).value(0));
    CHECK(BooleanFunction::parse_anf("x2", 3) == BooleanFunction::parse_anf("x2+0", 3));
}

TEST_CASE("anf reduces over F2") {
    CHECK(BooleanFunction::parse_anf("x1*x1", 2) == BooleanFunction::parse_anf("x1", 2));
    CHECK(BooleanFunction::parse_anf("x1+x1", 2) == BooleanFunction::parse_anf("0", 2));
    CHECK(BooleanFunction::parse_anf("x1+x1+x1", 2) == BooleanFunction::parse_anf("x1", 2));
    CHECK(BooleanFunction::parse_anf("x2*x1", 2) == BooleanFunction::parse_anf("x1*x2", 2));
    CHECK(BooleanFunction::parse_anf("x1*0", 2) == BooleanFunction::parse_anf("0", 2));
    CHECK(BooleanFunction::parse_anf("x1*1", 2) == BooleanFunction::parse_anf("x1", 2));
}

TEST_CASE("anf syntax errors point at the problem") {
    CHECK_THROWS_AS(BooleanFunction::parse_anf("", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x1+", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x1**x2", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("*x1", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x0", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x3", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x1&x2", 2), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_anf("x1", 0), cncode::ParameterError);

    try {
        BooleanFunction::parse_anf("x1+y2", 2);
        FAIL("expected a syntax error");
    } catch (const cncode::SyntaxError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("hex truth table round trip") {
    BooleanFunction f = BooleanFunction::parse_table_hex("m=2;tt=8");
    CHECK(f.vars() == 2);
    CHECK(f == BooleanFunction::parse_anf("x1*x2", 2));
    CHECK(f.table_hex() == "m=2;tt=8");

    BooleanFunction g = BooleanFunction::parse_anf("x1*x2+x3*x4", 4);
    CHECK(BooleanFunction::parse_table_hex(g.table_hex()) == g);

    // m = 1 packs into a single digit; m = 0 is a constant
    CHECK(BooleanFunction::parse_table_hex("m=1;tt=2").value(1));
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("m=1;tt=4"), cncode::SyntaxError);

    std::mt19937_64 rng(0x5eed0101);
    for (int trial = 0; trial < 50; ++trial) {
        BooleanFunction h = random_function(rng, 1 + int(rng() % 8));
        CHECK(BooleanFunction::parse_table_hex(h.table_hex()) == h);
    }
}

TEST_CASE("hex truth table rejects malformed input") {
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("m=2;tt="), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("m=2;tt=123"), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("m=2;tt=g"), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("tt=8;m=2"), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("m=;tt=8"), cncode::SyntaxError);
    CHECK_THROWS_AS(BooleanFunction::parse_table_hex("m=99;tt=0"), cncode::ParameterError);
}

TEST_CASE("walsh transform matches the quadratic-time oracle") {
    // exhaustive for m <= 3
    for (int m = 1; m <= 3; ++m) {
        std::size_t size = std::size_t{1} << m;
        for (std::size_t code = 0; code < (std::size_t{1} << size); ++code) {
            std::vector<std::uint8_t> tab(size);
            for (std::size_t i = 0; i < size; ++i) tab[i] = (code >> i) & 1;
            BooleanFunction f(m, tab);
            CHECK(cncode::walsh(f).values == oracle::walsh(tab, m));
        }
    }

    std::mt19937_64 rng(0x5eed0102);
    for (int trial = 0; trial < 100; ++trial) {
        BooleanFunction f = random_function(rng, 4);
        CHECK(cncode::walsh(f).values == oracle::walsh(f.table(), 4));
    }
}

TEST_CASE("walsh fixed values and parseval") {
    cncode::WalshSpectrum W = cncode::walsh(BooleanFunction::parse_anf("x1*x2", 2));
    CHECK(W.values == std::vector<std::int32_t>{2, 2, 2, -2});

    std::mt19937_64 rng(0x5eed0103);
    for (int trial = 0; trial < 50; ++trial) {
        int m = 1 + int(rng() % 8);
        cncode::WalshSpectrum spec = cncode::walsh(random_function(rng, m));
        std::int64_t sum = 0;
        for (std::int32_t w : spec.values) sum += std::int64_t(w) * w;
        CHECK(sum == std::int64_t(1) << (2 * m));
    }
}

TEST_CASE("bent classification") {
    BooleanFunction ip4 = BooleanFunction::parse_anf("x1*x2+x3*x4", 4);
    cncode::BentStatus b = cncode::is_bent(ip4);
    CHECK(b.bent);
    CHECK(b.epsilon == -1);
    CHECK(cncode::support(ip4).size() == 6);

    BooleanFunction ip4c = BooleanFunction::parse_anf("x1*x2+x3*x4+1", 4);
    b = cncode::is_bent(ip4c);
    CHECK(b.bent);
    CHECK(b.epsilon == 1);
    CHECK(cncode::support(ip4c).size() == 10);

    CHECK_FALSE(cncode::is_bent(BooleanFunction::parse_anf("x1+x2", 2)).bent);
    CHECK_FALSE(cncode::is_bent(BooleanFunction::parse_anf("x1*x2+x3", 3)).bent);
    CHECK(cncode::is_bent(BooleanFunction::parse_anf("x1*x2+x3*x4+x5*x6", 6)).bent);
}

TEST_CASE("support points are the ones where f is 1") {
    EvaluationSet D = cncode::support(BooleanFunction::parse_anf("x1*x2+x3*x4", 4));
    CHECK(D.points == std::vector<std::uint32_t>{3, 7, 11, 12, 13, 14});
}

TEST_CASE("autocorrelation is flat exactly for bent functions") {
    BooleanFunction ip4 = BooleanFunction::parse_anf("x1*x2+x3*x4", 4);
    CHECK(cncode::autocorrelation(ip4, 0) == 16);
    for (std::uint32_t a = 1; a < 16; ++a) CHECK(cncode::autocorrelation(ip4, a) == 0);

    BooleanFunction lin = BooleanFunction::parse_anf("x1", 2);
    CHECK(cncode::autocorrelation(lin, 2) == 4); // shift free of x1
}

TEST_CASE("evaluation sets validate their points") {
    CHECK(EvaluationSet::full(3).points.size() == 8);
    CHECK(EvaluationSet::full(3).points[5] == 5);
    CHECK_THROWS_AS(EvaluationSet(2, {0, 4}), cncode::ParameterError);
    CHECK_THROWS_AS(EvaluationSet(2, {1, 1}), cncode::ParameterError);

    // single-point sets construct fine but cannot host a code
    EvaluationSet tiny(2, {3});
    BooleanFunction f = BooleanFunction::parse_anf("x1", 2);
    BooleanFunction g = BooleanFunction::parse_anf("x2", 2);
    CHECK_THROWS_AS(cncode::code_from_functions(tiny, {f, g}), cncode::DegenerateCodeError);
}

TEST_CASE("codes from function families") {
    BooleanFunction f = BooleanFunction::parse_anf("x1*x2", 2);
    BooleanFunction g = BooleanFunction::parse_anf("x1", 2);
    cncode::Code code = cncode::code_from_functions(EvaluationSet::full(2), {f, g});
    CHECK(code.length() == 4);
    CHECK(code.size() == 2);
    CHECK(code.word(0).to_string() == "0001");
    CHECK(code.word(1).to_string() == "0101");

    // two functions that differ, but not on the chosen evaluation set
    BooleanFunction h = BooleanFunction::parse_anf("x1+x1*x2", 2);
    EvaluationSet V(2, {0, 1});
    CHECK_THROWS_AS(cncode::code_from_functions(V, {g, h}), cncode::CollisionError);
    CHECK_THROWS_AS(cncode::code_from_functions(EvaluationSet::full(2), {f, f}),
                    cncode::CollisionError);
}

TEST_CASE("discrepancy via character sums equals the word computation") {
    std::mt19937_64 rng(0x5eed0104);
    std::vector<Ratio> rs = {Ratio(1), Ratio(3, 2), Ratio(2), Ratio(5)};
    for (int trial = 0; trial < 40; ++trial) {
        int m = 2 + int(rng() % 4);
        BooleanFunction f = random_function(rng, m);
        BooleanFunction g = random_function(rng, m);
        EvaluationSet V = EvaluationSet::full(m);
        cncode::Code pair = [&] {
            try {
                return cncode::code_from_functions(V, {f, g});
            } catch (const cncode::CollisionError&) {
                g = f + BooleanFunction::parse_anf("x1", m);
                return cncode::code_from_functions(V, {f, g});
            }
        }();
        for (const Ratio& r : rs) {
            CHECK(cncode::delta_via_sums(f, g, V, r) ==
                  cncode::delta_r(pair.word(0), pair.word(1), r));
            CHECK(cncode::delta_via_sums(g, f, V, r) ==
                  cncode::delta_r(pair.word(1), pair.word(0), r));
        }
    }
}

TEST_CASE("restricted pair minimum equals the full code minimum") {
    std::mt19937_64 rng(0x5eed0105);
    std::vector<Ratio> rs = {Ratio(1), Ratio(2), Ratio(7, 3)};
    for (int trial = 0; trial < 15; ++trial) {
        int m = 3 + int(rng() % 2);
        std::vector<BooleanFunction> family;
        while (family.size() < 6) {
            BooleanFunction f = random_function(rng, m);
            bool dup = false;
            for (const BooleanFunction& g : family) dup = dup || g == f;
            if (!dup) family.push_back(std::move(f));
        }
        EvaluationSet V = EvaluationSet::full(m);
        cncode::Code code = cncode::code_from_functions(V, family);
        for (const Ratio& r : rs)
            CHECK(cncode::restricted_min_discrepancy(V, family, r) ==
                  cncode::min_discrepancy(code, r).value);
    }
}

TEST_CASE("sum collision is reported") {
    BooleanFunction f = BooleanFunction::parse_anf("x1", 2);
    CHECK_THROWS_AS(cncode::delta_via_sums(f, f, EvaluationSet::full(2), Ratio(2)),
                    cncode::CollisionError);
}

TEST_CASE("table constructor validates") {
    CHECK_THROWS_AS(BooleanFunction(2, {0, 1, 0}), cncode::DimensionError);
    CHECK_THROWS_AS(BooleanFunction(2, {0, 1, 0, 2}), cncode::ParameterError);
    CHECK_THROWS_AS(BooleanFunction(0, {1}), cncode::ParameterError);
    CHECK_THROWS_AS(BooleanFunction(25, {}), cncode::ResourceError);
}
