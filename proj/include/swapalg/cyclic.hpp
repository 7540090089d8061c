#pragma once

#include <vector>

#include "swapalg/rational.hpp"

namespace swapalg {

using PointId = int;

enum class Side { Left, Right, On };

// A finite cyclic point set: indices 0..size-1 in anticlockwise order.
struct Circle {
    int size = 0;

    void check(PointId p) const {
        if (p < 0 || p >= size) throw std::domain_error("point index out of range");
    }
};

// sign of a rational: -1, 0, +1
int signature(const Rational& a);

// Linking number between chords r->x and s->y on general rational circle
// positions (anticlockwise increasing, circumference `circ`). The circle is
// cut at a gap avoiding all four positions; the result does not depend on
// that choice.
Rational linking_number_positions(const Rational& r, const Rational& x,
                                  const Rational& s, const Rational& y,
                                  const Rational& circ);

// Same with an explicit cut: positions are shifted by -cut modulo circ
// before applying the signature formula. `cut` must avoid r,x,s,y.
Rational linking_number_positions_cut(const Rational& r, const Rational& x,
                                      const Rational& s, const Rational& y,
                                      const Rational& circ, const Rational& cut);

Rational linking_number(const Circle& c, PointId r, PointId x, PointId s, PointId y);

// Cut the circle at the gap just before index `cut`.
Rational linking_number_cut(const Circle& c, PointId r, PointId x, PointId s, PointId y,
                            int cut);

// Classifies p against the directed chord a->b: points on the open
// anticlockwise arc from a to b are Right, the complementary arc is Left,
// p in {a,b} is On.
Side side_of_chord(const Circle& c, PointId a, PointId b, PointId p);

}  // namespace swapalg
