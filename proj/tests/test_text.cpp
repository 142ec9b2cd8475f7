#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "appell/text.hpp"

using appell::Polynomial;
using appell::Rational;

TEST_SUITE("text") {

TEST_CASE("canonical serialization") {
    CHECK(appell::poly_to_text(Polynomial()) == "[\"0\"]");
    CHECK(appell::poly_to_text(Polynomial::constant(Rational(1, 2))) == "[\"1/2\"]");
    CHECK(appell::poly_to_text(Polynomial({Rational(-6), Rational(6)})) == "[\"-6\",\"6\"]");
    CHECK(appell::poly_to_text(Polynomial({Rational(0), Rational(-1, 3), Rational(1)})) ==
          "[\"0\",\"-1/3\",\"1\"]");
}

TEST_CASE("parsing is lenient about formatting but strict about grammar") {
    CHECK(appell::poly_from_text("[\"0\"]") == Polynomial());
    CHECK(appell::poly_from_text("[ \"2/4\" , \"0\" ]") ==
          Polynomial::constant(Rational(1, 2)));  // reduces and strips trailing zero
    CHECK(appell::poly_from_text("[\"-6\",\"6\"]") ==
          Polynomial({Rational(-6), Rational(6)}));
    CHECK(appell::poly_from_text("[]") == Polynomial());  // degenerate but unambiguous

    for (const char* bad : {"", "[\"\"]", "[\"x\"]", "[\"1.5\"]", "[1,2]", "\"1\"",
                            "[\"1\"", "[\"1\"]extra", "{\"0\":\"1\"}"})
        CHECK_THROWS_AS(appell::poly_from_text(bad), std::invalid_argument);
}

TEST_CASE("seeded random round trips") {
    std::mt19937 rng(333667);
    std::uniform_int_distribution<int> deg(-1, 12);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 99);
    for (int i = 0; i < 300; ++i) {
        std::vector<Rational> cs;
        const int d = deg(rng);
        for (int j = 0; j <= d; ++j) cs.emplace_back(num(rng), den(rng));
        const Polynomial p{std::move(cs)};
        const std::string text = appell::poly_to_text(p);
        CHECK(appell::poly_from_text(text) == p);
        CHECK(appell::poly_to_text(appell::poly_from_text(text)) == text);  // stable fixed point
    }
}

}  // TEST_SUITE
