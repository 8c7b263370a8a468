#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "deltabound/root_finding.hpp"
#include "deltabound/secular.hpp"

using deltabound::Bracket;
using deltabound::find_root_bracketed;
using deltabound::RootResult;

TEST_CASE("bisection finds sqrt2 as the root of k^2 - 2") {
  const RootResult r = find_root_bracketed(
      [](double k) { return k * k - 2.0; }, Bracket{1.0, 2.0}, 1e-12);
  CHECK(r.root == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
  CHECK(r.hi - r.lo <= 1e-12);
  CHECK(std::abs(r.f_root) < 1e-11);
}

TEST_CASE("bisection solves the secular equation at x = 1") {
  // Independent high-precision root: 1.2962152357917953
  const RootResult r = find_root_bracketed(
      [](double k) { return deltabound::secular(k, 1.0); },
      Bracket{0.5, 1.414}, 1e-12);
  CHECK(r.root == doctest::Approx(1.2962152357917953).epsilon(1e-11));
}

TEST_CASE("a linear function roots exactly at the first midpoint") {
  const RootResult r =
      find_root_bracketed([](double k) { return k; }, Bracket{-1.0, 1.0}, 1e-12);
  CHECK(r.root == 0.0);
  CHECK(r.f_root == 0.0);
}

TEST_CASE("an endpoint that is already a root is returned as-is") {
  const RootResult r = find_root_bracketed(
      [](double k) { return k - 1.0; }, Bracket{1.0, 2.0}, 1e-12);
  CHECK(r.root == 1.0);
  CHECK(r.iterations == 0);
}

TEST_CASE("missing sign change raises BracketError") {
  CHECK_THROWS_AS(find_root_bracketed([](double k) { return k * k + 1.0; },
                                      Bracket{1.0, 2.0}, 1e-12),
                  deltabound::BracketError);
  CHECK_THROWS_AS(find_root_bracketed([](double k) { return k; },
                                      Bracket{2.0, 1.0}, 1e-12),
                  deltabound::BracketError);
}

TEST_CASE("nonpositive tolerance is a domain error") {
  CHECK_THROWS_AS(find_root_bracketed([](double k) { return k; },
                                      Bracket{-1.0, 1.0}, 0.0),
                  std::domain_error);
}

TEST_CASE("iteration budget is enforced") {
  CHECK_THROWS_AS(find_root_bracketed([](double k) { return k + 0.12345; },
                                      Bracket{-1.0, 1.0}, 1e-30, 5),
                  deltabound::ConvergenceError);
}

TEST_CASE("the function is never evaluated outside the initial bracket") {
  std::vector<double> seen;
  const auto f = [&seen](double k) {
    seen.push_back(k);
    return k * k * k - 0.3;
  };
  find_root_bracketed(f, Bracket{-1.0, 1.0}, 1e-13);
  for (const double k : seen) {
    CHECK(k >= -1.0);
    CHECK(k <= 1.0);
  }
}

TEST_CASE("bisection is deterministic") {
  const auto f = [](double k) { return std::cos(k) - k; };
  const RootResult a = find_root_bracketed(f, Bracket{0.0, 1.0}, 1e-14);
  const RootResult b = find_root_bracketed(f, Bracket{0.0, 1.0}, 1e-14);
  CHECK(a.root == b.root);
  CHECK(a.iterations == b.iterations);
}
