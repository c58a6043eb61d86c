#include "doctest.h"

#include "detsing/random.hpp"
#include "detsing/sections.hpp"
#include "detsing/swallowtail.hpp"

using namespace detsing;

namespace {

DetVariety variety(std::vector<std::string> vars, std::vector<std::vector<std::string>> rows,
                   int t) {
  auto ring = make_ring(std::move(vars));
  return DetVariety::build(PolyMatrix::parse(ring, rows), t);
}

DetVariety threefold_c5() {
  return variety({"x", "y", "z", "w", "v"}, {{"x", "y", "z"}, {"w", "v", "x^2 + y^2"}}, 2);
}

DetVariety c7() {
  return variety({"x1", "x2", "x3", "x4", "x5", "x6", "y1"},
                 {{"x1", "x2", "x3"}, {"x4", "x5", "x6 + y1^2"}}, 2);
}

LinearForm form(const RingPtr& ring, const char* text) {
  return LinearForm(parse_poly(ring, text));
}

using Rows = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("section substitution eliminates the pivot") {
  auto ring = make_ring({"x", "y", "z"});
  LinearForm p = form(ring, "x - 2*z");
  auto [sub, assignment] = section_substitution(p, 2);
  CHECK(sub->names() == std::vector<std::string>{"x", "y"});
  CHECK(to_string(assignment.at("z")) == "1/2*x");
  auto [sub0, assignment0] = section_substitution(p, 0);
  CHECK(sub0->names() == std::vector<std::string>{"y", "z"});
  CHECK(to_string(assignment0.at("x")) == "2*z");
  // y does not occur in p.
  CHECK_THROWS_AS(section_substitution(p, 1), Error);
}

TEST_CASE("sections of the C^5 3-fold reproduce the displayed matrices") {
  DetVariety x = threefold_c5();
  DetVariety h = section(x, form(x.ring(), "w - z"));
  CHECK(h.ring()->names() == std::vector<std::string>{"x", "y", "z", "v"});
  CHECK(h.matrix().to_strings() == Rows{{"x", "y", "z"}, {"z", "v", "x^2 + y^2"}});
  CHECK(h.dim() == 2);

  DetVariety hp = section(x, form(x.ring(), "x - v"));
  CHECK(hp.ring()->names() == std::vector<std::string>{"x", "y", "z", "w"});
  CHECK(hp.matrix().to_strings() == Rows{{"x", "y", "z"}, {"w", "x", "x^2 + y^2"}});

  // Column 3 minus x times column 2, then z -> z + xy, gives [[x,y,z],[w,x,y^2]].
  const RingPtr& r = hp.ring();
  PolyMatrix m = hp.matrix();
  Poly xv = Poly::variable(r, 0);
  for (std::size_t i = 0; i < 2; ++i) m(i, 2) = m(i, 2) - xv * m(i, 1);
  m = m.substitute({{"z", parse_poly(r, "z + x*y")}}, r);
  CHECK(m.to_strings() == Rows{{"x", "y", "z"}, {"w", "x", "y^2"}});
  CHECK(ideals_equal(DetVariety::build(m, 2).ideal(),
                     Ideal(r, hp.matrix()
                                  .substitute({{"z", parse_poly(r, "z + x*y")}}, r)
                                  .minors(2))));
}

TEST_CASE("Milnor numbers of the two displayed sections") {
  DetVariety x = threefold_c5();
  DetVariety h = section(x, form(x.ring(), "w - z"));
  DetVariety hp = section(x, form(x.ring(), "x - v"));
  CHECK(invariant_chain(h, 1).mu == 4);
  CHECK(invariant_chain(hp, 1).mu == 2);
  DetVariety displayed = variety({"x", "y", "z", "w"}, {{"x", "y", "z"}, {"w", "x", "y^2"}}, 2);
  CHECK(invariant_chain(displayed, 2).mu == 2);
}

TEST_CASE("the plane P cuts the C^7 family to the displayed surface") {
  DetVariety v = c7();
  for (const char* p : {"x1 - x5", "x2 - x6", "y1"}) v = section(v, form(v.ring(), p));
  CHECK(v.ring()->names() == std::vector<std::string>{"x1", "x2", "x3", "x4"});
  CHECK(v.matrix().to_strings() == Rows{{"x1", "x2", "x3"}, {"x4", "x1", "x2"}});
  CHECK(v.dim() == 2);

  // Applying the forms in another order gives the same surface.
  DetVariety w = c7();
  for (const char* p : {"y1", "x2 - x6", "x1 - x5"}) w = section(w, form(w.ring(), p));
  CHECK(w.ring()->names() == v.ring()->names());
  CHECK(w.matrix() == v.matrix());
}

TEST_CASE("section pivot prefers variables entering linearly") {
  DetVariety v = c7();
  // y1 enters squared, x6 linearly.
  CHECK(v.ring()->name(section_pivot(v.matrix(), form(v.ring(), "x6 + 2*y1"))) == "x6");
  CHECK(v.ring()->name(section_pivot(v.matrix(), form(v.ring(), "y1"))) == "y1");
}

TEST_CASE("transversality leg on the C^5 3-fold") {
  DetVariety x = threefold_c5();
  // Both displayed hyperplanes pass; w - z fails only the generality leg.
  CHECK(strata_transversal(x, form(x.ring(), "x - v"), Arithmetic::Rational));
  CHECK(strata_transversal(x, form(x.ring(), "w - z"), Arithmetic::Rational));
  CHECK(strata_transversal(x, random_form(x.ring(), 3, 7), Arithmetic::Rational));
}

TEST_CASE("sections by strongly general forms stay determinantal EIDS") {
  DetVariety x = threefold_c5();
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    LinearForm p = random_form(x.ring(), seed, 7);
    REQUIRE(strata_transversal(x, p, Arithmetic::Rational));
    DetVariety s = section(x, p);
    CHECK(s.m() == 2);
    CHECK(s.n() == 3);
    CHECK(s.t() == 2);
    CHECK(s.dim() == 2);
    CHECK(is_eids(s).eids);
  }
}

TEST_CASE("minimal search on a smooth germ gives zero signatures") {
  DetVariety smooth = variety({"x", "y", "z", "w", "v"}, {{"x", "y", "z"}, {"1", "0", "0"}}, 2);
  Settings s;
  s.trials = 3;
  SearchResult r = minimal_invariant_search(smooth, 1, s);
  CHECK(r.trials.size() == 3);
  for (const auto& t : r.trials) {
    CHECK(t.error.empty());
    CHECK(t.signature == Signature{0, 0});
  }
  CHECK(r.minimum == Signature{0, 0});
  CHECK(r.stable);
}

TEST_CASE("minimal curve section of the C^4 surface matches a grid search") {
  DetVariety s = variety({"x", "y", "z", "w"}, {{"z", "y + w", "x"}, {"w", "x", "y"}}, 2);
  Settings settings;
  settings.trials = 6;
  SearchResult r = minimal_invariant_search(s, 4, settings);
  REQUIRE(r.stable);
  // Integer hyperplanes with coefficients in {-2..2}, first nonzero positive.
  long best = -1;
  std::vector<mpq_class> c(4);
  for (int code = 0; code < 625; ++code) {
    int rest = code, first = -1;
    for (auto& e : c) {
      e = rest % 5 - 2;
      rest /= 5;
    }
    for (int i = 0; i < 4 && first < 0; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) first = i;
    if (first < 0 || c[static_cast<std::size_t>(first)] < 0) continue;
    try {
      LinearForm p = LinearForm::from_coefficients(s.ring(), c);
      Signature sig = section_signature(section(s, p), 1, settings);
      if (best < 0 || sig[0] < best) best = sig[0];
    } catch (const Error&) {
      // Special hyperplanes may give non-reduced or degenerate sections.
    }
  }
  CHECK(best == r.minimum[0]);
  CHECK(best == 2);
}

TEST_CASE("tangent cone is the lowest homogeneous part") {
  auto ring = make_ring({"x", "y", "z"});
  CHECK(to_string(tangent_cone(swallowtail_equation(ring))) == "256*z^3");
  CHECK(to_string(tangent_cone(parse_poly(ring, "x^2 + y^3"))) == "x^2");
  CHECK_THROWS_AS(tangent_cone(Poly(ring)), Error);
}
