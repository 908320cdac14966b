#include <doctest.h>

#include <json.hpp>

#include "cncode/boolean_function.hpp"
#include "cncode/constructions.hpp"
#include "cncode/errors.hpp"
#include "cncode/metric.hpp"

#include "oracles.hpp"

using cncode::BooleanFunction;
using cncode::Code;
using cncode::Ratio;
using cncode::Word;

TEST_CASE("sylvester hadamard matrices") {
    cncode::HadamardMatrix H = cncode::sylvester_hadamard(2);
    REQUIRE(H.order == 4);
    int expected[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(H.entry(i, j) == expected[i][j]);

    // rows are pairwise orthogonal for a few larger orders
    for (int t : {3, 5}) {
        cncode::HadamardMatrix M = cncode::sylvester_hadamard(t);
        for (std::size_t i = 0; i < M.order; ++i)
            for (std::size_t j = i + 1; j < M.order; ++j) {
                int dot = 0;
                for (std::size_t k = 0; k < M.order; ++k) dot += M.entry(i, k) * M.entry(j, k);
                CHECK(dot == 0);
            }
    }

    CHECK_THROWS_AS(cncode::sylvester_hadamard(0), cncode::ParameterError);
    CHECK_THROWS_AS(cncode::sylvester_hadamard(17), cncode::ParameterError);
}

TEST_CASE("hadamard code drops the constant column") {
    Code code = cncode::hadamard_code(cncode::sylvester_hadamard(3));
    CHECK(code.length() == 7);
    CHECK(code.size() == 8);
    CHECK(code.word(0).all_zero());
    CHECK(cncode::min_hamming(code) == 4);
    CHECK(cncode::profile(code).evaluate(Ratio(5)) == Ratio(4));
    CHECK(cncode::is_xor_closed(code.words()));
}

TEST_CASE("puncturing keeps the matching words") {
    std::vector<Word> ws = {Word::from_string("001"), Word::from_string("010"),
                            Word::from_string("111")};
    Code code(std::move(ws));
    Code at0 = cncode::puncture_first(code, 0);
    CHECK(at0.size() == 2);
    CHECK(at0.length() == 2);
    CHECK(at0.word(0).to_string() == "01");
    CHECK(at0.word(1).to_string() == "10");
    Code at1 = cncode::puncture_first(code, 1);
    CHECK(at1.size() == 1);
    CHECK(at1.word(0).to_string() == "11");

    std::vector<Word> zeros = {Word::from_string("00"), Word::from_string("01")};
    Code low(std::move(zeros));
    CHECK_THROWS_AS(cncode::puncture_first(low, 1), cncode::DegenerateCodeError);
    CHECK_THROWS_AS(cncode::puncture_first(low, 2), cncode::ParameterError);
}

TEST_CASE("bent translate construction") {
    BooleanFunction ip4 = BooleanFunction::parse_anf("x1*x2+x3*x4", 4);
    auto [code, pred] = cncode::construction_a(ip4);
    CHECK(code.length() == 16);
    CHECK(code.size() == 32);
    CHECK(pred.n == 16);
    CHECK(pred.K == 32);
    CHECK(pred.trust == cncode::Trust::verified_formula);
    CHECK_FALSE(pred.lower_bound);
    CHECK(pred.d_H_claim == 8);

    // predicted delta and brute force coincide: alpha + beta r = (r+1)4 - (r-1)2
    cncode::DiscrepancyProfile prof = cncode::profile(code);
    for (const Ratio& r : {Ratio(1), Ratio(3, 2), Ratio(2), Ratio(3)}) {
        Ratio expect = Ratio(2) * r + Ratio(6);
        CHECK(pred.formula.at(r) == expect);
        CHECK(prof.evaluate(r) == expect);
    }
    CHECK(cncode::min_hamming(code) == 8);

    CHECK_THROWS_AS(cncode::construction_a(BooleanFunction::parse_anf("x1+x2", 2)),
                    cncode::ParameterError);
}

TEST_CASE("bent support construction stays a claim under test") {
    BooleanFunction ip4 = BooleanFunction::parse_anf("x1*x2+x3*x4", 4);
    auto [code, pred] = cncode::construction_b(ip4);
    CHECK(code.length() == 6); // |D_f| for epsilon = -1
    CHECK(code.size() == 31);
    CHECK(pred.trust == cncode::Trust::claim_under_test);
    REQUIRE(pred.alt_formula.has_value());

    // brute force agrees with the naive oracle; the printed formulas are
    // merely recorded
    std::vector<oracle::Bits> raw = oracle::from_code(code);
    cncode::DiscrepancyProfile prof = cncode::profile(code);
    for (const Ratio& r : {Ratio(1), Ratio(2), Ratio(3, 2)})
        CHECK(prof.evaluate(r) == oracle::code_delta(raw, r));
}

TEST_CASE("kerdock-plus-affine construction") {
    cncode::ConstructionRequest req;
    req.id = "construction-c";
    req.m = 4;
    cncode::BuiltConstruction built = cncode::build_construction(req);
    CHECK(built.code.length() == 16);
    CHECK(built.code.size() == 127);
    CHECK(built.predicted.lower_bound);
    CHECK(built.predicted.d_H_claim == 4);
    REQUIRE(built.modulus.has_value());
    CHECK(*built.modulus == 0b1011);

    cncode::DiscrepancyProfile prof = cncode::profile(built.code);
    for (const Ratio& r : {Ratio(1), Ratio(2), Ratio(3)}) {
        CHECK(built.predicted.formula.at(r) == r + Ratio(5));
        CHECK(prof.evaluate(r) == r + Ratio(5)); // the bound is tight here
    }
    CHECK(cncode::min_hamming(built.code) == 6); // exceeds the claimed 4

    // the word set is not closed under xor, with or without the zero word
    std::vector<Word> with_zero = built.code.words();
    with_zero.push_back(Word(built.code.length()));
    CHECK_FALSE(cncode::is_xor_closed(with_zero));
}

TEST_CASE("xor closure detector") {
    auto words = [](std::initializer_list<const char*> ss) {
        std::vector<Word> ws;
        for (const char* s : ss) ws.push_back(Word::from_string(s));
        return ws;
    };
    CHECK(cncode::is_xor_closed(words({"00", "01", "10", "11"})));
    CHECK(cncode::is_xor_closed(words({"000", "110", "011", "101"})));
    CHECK_FALSE(cncode::is_xor_closed(words({"00", "01", "10"})));
    CHECK_FALSE(cncode::is_xor_closed(words({"01", "10", "11"}))); // no zero word
}

TEST_CASE("request resolution and validation") {
    cncode::ConstructionRequest req;
    req.m = 4;

    for (const char* alias : {"construction-a", "bent-translate"}) {
        req.id = alias;
        CHECK(cncode::build_construction(req).id == "construction-a");
    }
    for (const char* alias : {"construction-b", "bent-support"}) {
        req.id = alias;
        CHECK(cncode::build_construction(req).id == "construction-b");
    }
    for (const char* alias : {"construction-c", "kerdock"}) {
        req.id = alias;
        CHECK(cncode::build_construction(req).id == "construction-c");
    }

    req.id = "construction-d";
    CHECK_THROWS_AS(cncode::build_construction(req), cncode::ParameterError);

    req.id = "kerdock";
    req.anf = "x1*x2";
    CHECK_THROWS_AS(cncode::build_construction(req), cncode::ParameterError);

    req.id = "construction-a";
    req.anf = "x1+x2"; // not bent
    CHECK_THROWS_AS(cncode::build_construction(req), cncode::ParameterError);
    req.anf.reset();
    req.m = 5;
    CHECK_THROWS_AS(cncode::build_construction(req), cncode::ParameterError);
}

TEST_CASE("default bent input follows epsilon") {
    cncode::ConstructionRequest req;
    req.id = "construction-b";
    req.m = 6;
    req.epsilon = +1;
    cncode::BuiltConstruction built = cncode::build_construction(req);
    CHECK(built.code.length() == 36); // support of the complemented form
    CHECK(built.code.size() == 127);
    REQUIRE(built.epsilon.has_value());
    CHECK(*built.epsilon == 1);

    req.epsilon = -1;
    CHECK(cncode::build_construction(req).code.length() == 28);
}

TEST_CASE("hadamard requests use the exponent") {
    cncode::ConstructionRequest req;
    req.id = "hadamard";
    req.m = 3;
    cncode::BuiltConstruction built = cncode::build_construction(req);
    CHECK(built.code.length() == 7);
    CHECK(built.code.size() == 8);
    CHECK(built.predicted.formula.at(Ratio(2)) == Ratio(4));
    CHECK(built.predicted.trust == cncode::Trust::verified_formula);
}

TEST_CASE("construction metadata serialization") {
    cncode::ConstructionRequest req;
    req.id = "kerdock";
    req.m = 4;
    cncode::BuiltConstruction built = cncode::build_construction(req);
    nlohmann::json j = nlohmann::json::parse(cncode::metadata_json(built));

    CHECK(j["construction"] == "construction-c");
    CHECK(j["m"] == 4);
    CHECK(j["modulus"] == "0xb");
    CHECK(j["epsilon"].is_null());
    CHECK(j["n"] == 16);
    CHECK(j["K"] == 127);
    CHECK(j["predicted"]["alpha"] == "5");
    CHECK(j["predicted"]["beta"] == "1");
    CHECK(j["predicted"]["kind"] == "lower_bound");
    CHECK(j["predicted"]["trust"] == "claim-under-test");
    CHECK(j["verified"].is_object());
    CHECK(j["verified"].empty());

    req.id = "construction-a";
    built = cncode::build_construction(req);
    j = nlohmann::json::parse(cncode::metadata_json(built));
    CHECK(j["modulus"].is_null());
    CHECK(j["epsilon"] == -1);
    CHECK(j["predicted"]["kind"] == "exact");
    CHECK(j["predicted"]["trust"] == "verified-formula");
}

TEST_CASE("verification report for the translate construction") {
    cncode::ConstructionRequest req;
    req.id = "construction-a";
    req.m = 4;
    std::vector<Ratio> rs = {Ratio(1), Ratio(2), Ratio(3)};
    cncode::VerificationReport rep = cncode::verify_construction(req, rs);

    CHECK(rep.id == "construction-a");
    CHECK(rep.n == 16);
    CHECK(rep.K_expected == 32);
    CHECK(rep.K_actual == 32);
    CHECK(rep.K_matches);
    CHECK(rep.d_H == 8);
    CHECK(rep.d_H_claim == 8);
    CHECK(rep.d_H_matches);
    CHECK_FALSE(rep.xor_closed.has_value());
    REQUIRE(rep.checks.size() == 3);
    for (const cncode::RCheck& c : rep.checks) {
        CHECK(c.brute == Ratio(2) * c.r + Ratio(6));
        CHECK(c.match);
        CHECK_FALSE(c.alt_predicted.has_value());
    }

    std::string json_text = cncode::to_json(rep);
    CHECK(json_text == cncode::to_json(rep));
    nlohmann::json j = nlohmann::json::parse(json_text);
    CHECK(j["verified"]["2"]["brute"] == "10");
    CHECK(j["verified"]["2"]["predicted"] == "10");
    CHECK(j["verified"]["2"]["match"] == true);
    CHECK(j["K_matches"] == true);
    CHECK(j["xor_closed"].is_null());
}

TEST_CASE("verification report flags the kerdock claims") {
    cncode::ConstructionRequest req;
    req.id = "construction-c";
    req.m = 4;
    cncode::VerificationReport rep = cncode::verify_construction(req, {Ratio(1)});

    CHECK(rep.K_matches);
    CHECK(rep.d_H == 6);
    CHECK(rep.d_H_claim == 4);
    CHECK_FALSE(rep.d_H_matches);
    REQUIRE(rep.xor_closed.has_value());
    CHECK_FALSE(*rep.xor_closed);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].brute == Ratio(6));
    CHECK(rep.checks[0].predicted == Ratio(6));
    CHECK(rep.checks[0].match); // lower bound holds
}

TEST_CASE("verification requires a usable r list") {
    cncode::ConstructionRequest req;
    req.id = "hadamard";
    req.m = 3;
    CHECK_THROWS_AS(cncode::verify_construction(req, {Ratio(1, 2)}), cncode::ParameterError);
    CHECK(cncode::verify_construction(req, {}).checks.empty());

    cncode::VerificationReport rep = cncode::verify_construction(req, {Ratio(1)});
    REQUIRE(rep.xor_closed.has_value());
    CHECK(*rep.xor_closed);
    CHECK(rep.d_H_matches);
}
