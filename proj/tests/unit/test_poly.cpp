#include "doctest.h"

#include "detsing/poly.hpp"
#include "detsing/random.hpp"

using namespace detsing;

namespace {

RingPtr xyz() { return make_ring({"x", "y", "z"}); }

Poly random_poly(const RingPtr& ring, Rng& rng, int terms, int max_exp) {
  std::vector<Poly::Term> out;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    for (std::size_t v = 0; v < ring->size(); ++v)
      m.set(v, static_cast<unsigned>(rng.below(static_cast<std::uint64_t>(max_exp + 1))));
    mpq_class c(rng.nonzero_coefficient(7), 1 + rng.below(3));
    c.canonicalize();
    out.push_back({m, c});
  }
  return Poly::from_terms(ring, std::move(out));
}

}  // namespace

TEST_CASE("parse and print canonical form") {
  auto r = make_ring({"x", "y"});
  Poly f = parse_poly(r, "x^2 + y^3 - 2*x*y");
  CHECK(to_string(f) == "y^3 + x^2 - 2*x*y");
  CHECK(to_string(parse_poly(r, "2x y - (x - y)^2")) == "-x^2 + 4*x*y - y^2");
  CHECK(to_string(parse_poly(r, "3/6 x - 1")) == "1/2*x - 1");
  CHECK(to_string(parse_poly(r, "x - x")) == "0");
  CHECK(to_string(parse_poly(r, "-1")) == "-1");
}

TEST_CASE("parse errors carry a column") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_WITH_AS(parse_poly(r, "x + q"), doctest::Contains("column 5"), Error);
  CHECK_THROWS_AS(parse_poly(r, "x +"), Error);
  CHECK_THROWS_AS(parse_poly(r, "(x"), Error);
  CHECK_THROWS_AS(parse_poly(r, "x^"), Error);
  try {
    parse_poly(r, "x ^ y");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
  }
}

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(make_ring({"x", "x"}), Error);
  CHECK_THROWS_AS(make_ring({"1x"}), Error);
  auto r = make_ring({"s", "x"});
  CHECK(fresh_name(*r, "s") == "s_0");
  CHECK(fresh_name(*r, "t") == "t");
}

TEST_CASE("round trip print/parse is exact on random polynomials") {
  auto r = xyz();
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    Poly f = random_poly(r, rng, 6, 3);
    std::string text = to_string(f);
    CHECK(to_string(parse_poly(r, text)) == text);
    CHECK(parse_poly(r, text) == f);
  }
}

TEST_CASE("ring axioms hold exactly") {
  auto r = xyz();
  Rng rng(7);
  for (int k = 0; k < 40; ++k) {
    Poly f = random_poly(r, rng, 4, 3), g = random_poly(r, rng, 4, 3),
         h = random_poly(r, rng, 3, 2);
    CHECK((f + g) - g == f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
  }
}

TEST_CASE("substitution") {
  auto r = make_ring({"x", "z", "w"});
  Poly f = parse_poly(r, "x + w");
  auto target = make_ring({"x", "z"});
  Poly img = substitute(f, {{"w", parse_poly(target, "z")}});
  CHECK(to_string(img) == "x + z");
  CHECK(img.ring()->size() == 2);
  CHECK_THROWS_AS(substitute(f, {{"q", parse_poly(target, "z")}}), Error);
  // Dropping a variable that still occurs is an error.
  CHECK_THROWS_AS(substitute(f, {{"x", parse_poly(target, "z")}}, target), Error);
}

TEST_CASE("derivatives and homogeneous parts") {
  auto r = make_ring({"x", "y"});
  Poly f = parse_poly(r, "x^3 + 2*x*y + y - 5");
  CHECK(to_string(f.derivative(0)) == "3*x^2 + 2*y");
  CHECK(to_string(f.homogeneous_part(2)) == "2*x*y");
  CHECK(f.lowest_degree() == 0);
  CHECK(f.constant_term() == -5);
}

TEST_CASE("linear forms") {
  auto r = xyz();
  LinearForm p(parse_poly(r, "2*x - z"));
  CHECK(p.coefficients()[0] == 2);
  CHECK(p.coefficients()[2] == -1);
  CHECK(p.pivot() == 2);
  CHECK_THROWS_AS(LinearForm(parse_poly(r, "x + 1")), Error);
  CHECK_THROWS_AS(LinearForm(parse_poly(r, "x^2")), Error);
  CHECK_THROWS_AS(LinearForm(parse_poly(r, "0")), Error);
}

TEST_CASE("modular conversion") {
  auto r = make_ring({"x"});
  Poly f = parse_poly(r, "1/2*x + 3");
  PolyModp g = convert<Fp>(f);
  CHECK(g.terms()[0].coeff * Fp(2) == Fp(1));
  CHECK(g.constant_term() == Fp(3));
}
