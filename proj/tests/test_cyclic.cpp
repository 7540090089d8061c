#include <doctest.h>

#include "swapalg/cyclic.hpp"

using namespace swapalg;

TEST_CASE("linking number values on a 4-point circle") {
    Circle c{4};
    // crossing chords
    CHECK(linking_number(c, 0, 2, 1, 3) == 1);
    CHECK(linking_number(c, 1, 3, 0, 2) == -1);
    CHECK(linking_number(c, 2, 0, 1, 3) == -1);
    // shared tail
    CHECK(linking_number(c, 0, 1, 0, 2) == Rational(1, 2));
    CHECK(linking_number(c, 0, 2, 0, 1) == Rational(-1, 2));
    // disjoint chords
    CHECK(linking_number(c, 0, 1, 2, 3) == 0);
    CHECK(linking_number(c, 1, 0, 3, 2) == 0);
}

TEST_CASE("linking number is cut independent") {
    for (int s = 4; s <= 8; ++s) {
        Circle c{s};
        for (int r = 0; r < s; ++r)
            for (int x = 0; x < s; ++x)
                for (int a = 0; a < s; ++a)
                    for (int y = 0; y < s; ++y) {
                        Rational base = linking_number_cut(c, r, x, a, y, 0);
                        for (int cut = 1; cut < s; ++cut)
                            CHECK(linking_number_cut(c, r, x, a, y, cut) == base);
                    }
    }
}

TEST_CASE("linking number range and antisymmetry in the chord pair") {
    Circle c{7};
    const Rational half(1, 2);
    for (int r = 0; r < 7; ++r)
        for (int x = 0; x < 7; ++x)
            for (int s = 0; s < 7; ++s)
                for (int y = 0; y < 7; ++y) {
                    Rational j = linking_number(c, r, x, s, y);
                    bool in_range = j == 0 || j == 1 || j == -1 || j == half || j == -half;
                    CHECK(in_range);
                    CHECK(j == -linking_number(c, s, y, r, x));
                }
}

TEST_CASE("linking number at rational positions matches integer positions") {
    Circle c{5};
    for (int r = 0; r < 5; ++r)
        for (int x = 0; x < 5; ++x)
            for (int s = 0; s < 5; ++s)
                for (int y = 0; y < 5; ++y)
                    CHECK(linking_number(c, r, x, s, y) ==
                          linking_number_positions(r, x, s, y, 5));
}

TEST_CASE("side of chord") {
    Circle c{6};
    CHECK(side_of_chord(c, 1, 4, 2) == Side::Right);
    CHECK(side_of_chord(c, 1, 4, 3) == Side::Right);
    CHECK(side_of_chord(c, 1, 4, 5) == Side::Left);
    CHECK(side_of_chord(c, 1, 4, 0) == Side::Left);
    CHECK(side_of_chord(c, 1, 4, 1) == Side::On);
    CHECK(side_of_chord(c, 1, 4, 4) == Side::On);
    // wrap-around chord
    CHECK(side_of_chord(c, 4, 1, 5) == Side::Right);
    CHECK(side_of_chord(c, 4, 1, 0) == Side::Right);
    CHECK(side_of_chord(c, 4, 1, 2) == Side::Left);
    CHECK_THROWS_AS(side_of_chord(c, 2, 2, 0), std::domain_error);
    CHECK_THROWS_AS(side_of_chord(c, 0, 6, 1), std::domain_error);
}
