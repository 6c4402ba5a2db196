#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "znsum/bounds.hpp"
#include "znsum/intmath.hpp"
#include "znsum/sumfree.hpp"

using namespace znsum;

TEST_CASE("chi bound values") {
  CHECK(chi_bound(10, 2, 1, 2) == 3);
  CHECK(chi_bound(40, 9, 4, 2) == 3);
  CHECK(chi_bound(40, 9, 4, 3) == 2);
  CHECK(chi_bound(12, 5, 2, 4) == 0);
  CHECK(chi_bound(1, 2, 1, 4) == -1);  // raw value may go negative for tiny n
  CHECK_THROWS_AS(chi_bound(10, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(chi_bound(10, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(chi_bound(0, 2, 1, 2), std::invalid_argument);
}

TEST_CASE("torus upper bound is the c = 2 interval bound") {
  CHECK(torus_upper(10, 2, 1) == 3);
  CHECK(torus_upper(40, 9, 4) == 3);
  for (std::uint32_t n = 1; n <= 40; ++n) {
    for (int l = 1; l <= 3; ++l) {
      for (int k = l + 1; k <= 6; ++k) CHECK(torus_upper(n, k, l) == chi_bound(n, k, l, 2));
    }
  }
}

TEST_CASE("prefix-noise bounds") {
  BoundsReport r = bounds_prefix_noise(40, 9, 4, 2);
  CHECK(r.lower == 2);
  CHECK(r.upper == 3);
  CHECK(r.delta == 5);
  CHECK(r.chi == 3);
  CHECK(r.r == 3);
  CHECK(r.method == "prefix-interval");

  r = bounds_prefix_noise(40, 9, 4, 3);
  CHECK(r.lower == 1);
  CHECK(r.upper == 2);

  r = bounds_prefix_noise(10, 2, 1, 2);
  CHECK(r.lower == 3);
  CHECK(r.upper == 3);

  r = bounds_prefix_noise(12, 5, 2, 4);
  CHECK(r.lower == 0);
  CHECK(r.upper == 0);
  CHECK(r.delta == 3);
  CHECK(r.r == 1);

  // tiny n: raw values go negative, clamped report stays in [0, n]
  r = bounds_prefix_noise(1, 2, 1, 4);
  CHECK(r.raw_upper == -1);
  CHECK(r.lower == 0);
  CHECK(r.upper == 0);
}

TEST_CASE("prefix-noise bound invariants over a grid") {
  for (std::uint32_t n = 1; n <= 50; ++n) {
    for (int l = 1; l <= 4; ++l) {
      for (int k = l + 1; k <= 7; ++k) {
        for (int c = 2; c <= 6; ++c) {
          BoundsReport r = bounds_prefix_noise(n, k, l, c);
          CHECK(0 <= r.lower);
          CHECK(r.lower <= r.upper);
          CHECK(r.upper <= static_cast<std::int64_t>(n));
          CHECK(r.raw_lower <= r.raw_upper);
          // the two bounds differ by at most one
          CHECK(r.raw_upper - r.raw_lower <= 1);
          CHECK(0 <= r.r);
          CHECK(r.r < r.delta);
          if (std::gcd<std::int64_t>(n, k - l) == 1) CHECK(r.lower == r.upper);
        }
      }
    }
  }
}

TEST_CASE("noiseless maxima per divisor") {
  CHECK(bajnok_matzke(10, 2, 1) == 5);
  CHECK(bajnok_matzke(7, 2, 1) == 2);
  CHECK(bajnok_matzke(5, 2, 1) == 2);
  CHECK(bajnok_matzke(15, 2, 1) == 6);
  CHECK(bajnok_matzke(1, 5, 2) == 0);
  CHECK(bajnok_matzke(4, 5, 1) == 0);  // n | k - l
  CHECK(bajnok_matzke(2, 3, 2) == 1);
}

TEST_CASE("noiseless maxima agree with the exhaustive oracle") {
  for (std::uint32_t n = 1; n <= 18; ++n) {
    CyclicSet zero = CyclicSet::singleton(n, 0);
    for (int l = 1; l <= 3; ++l) {
      for (int k = l + 1; k <= 4; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(l);
        CHECK(bajnok_matzke(n, k, l) == brute_force_mu(SumFreeParams{n, k, l}, zero).mu);
      }
    }
  }
}

TEST_CASE("prime-case closed form") {
  CHECK(bier_chin_prime(5, 2, 1) == 2);
  CHECK(bier_chin_prime(3, 4, 1) == 0);
  CHECK_THROWS_AS(bier_chin_prime(9, 2, 1), std::invalid_argument);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    for (int l = 1; l <= 5; ++l) {
      for (int k = l + 1; k <= 6; ++k) {
        CHECK(bier_chin_prime(p, k, l) == bajnok_matzke(p, k, l));
      }
    }
  }
}

TEST_CASE("two-element-noise bounds") {
  BoundsReport r = bounds_two_element(10, 2, 1, 5);
  CHECK(r.lower == 4);
  CHECK(r.upper == 4);
  CHECK(r.method == "two-element");

  r = bounds_two_element(12, 5, 2, 3);
  CHECK(r.lower == 0);
  CHECK(r.upper == 1);
  CHECK(r.delta == 3);
  CHECK(r.r == 1);

  // a unit second element reduces to the c = 2 prefix bounds
  for (std::uint32_t n = 2; n <= 30; ++n) {
    for (std::int64_t s = 1; s < n; ++s) {
      if (std::gcd(s, static_cast<std::int64_t>(n)) != 1) continue;
      BoundsReport via_s = bounds_two_element(n, 3, 2, s);
      BoundsReport direct = bounds_prefix_noise(n, 3, 2, 2);
      CHECK(via_s.lower == direct.lower);
      CHECK(via_s.upper == direct.upper);
      CHECK(via_s.method == "two-element-unit");
    }
  }

  // per-divisor terms cover every divisor of gcd(s, n)
  r = bounds_two_element(12, 2, 1, 6);
  REQUIRE(r.per_divisor_terms.size() == 4);
  CHECK(r.per_divisor_terms[0].first == 1);
  CHECK(r.per_divisor_terms[3].first == 6);

  CHECK_THROWS_AS(bounds_two_element(10, 2, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(bounds_two_element(10, 2, 1, 10), std::invalid_argument);
}

TEST_CASE("equality branch of the two-element bounds") {
  // when the best coset term reaches the density bound both bounds collapse
  for (std::uint32_t n = 2; n <= 24; ++n) {
    for (int l = 1; l <= 2; ++l) {
      for (int k = l + 1; k <= 4; ++k) {
        for (std::int64_t s = 2; s < n; ++s) {
          std::int64_t d = std::gcd(s, static_cast<std::int64_t>(n));
          if (d == 1) continue;
          std::int64_t coset = 0;
          for (std::uint32_t e : divisors(static_cast<std::uint32_t>(d))) {
            coset = std::max(coset, bajnok_matzke(e, k, l) * (n / e));
          }
          BoundsReport r = bounds_two_element(n, k, l, s);
          if (coset >= torus_upper(n, k, l)) {
            CHECK(r.lower == r.upper);
            CHECK(r.lower == coset);
          }
          CHECK(r.lower <= r.upper);
          CHECK(r.upper <= static_cast<std::int64_t>(n));
        }
      }
    }
  }
}

TEST_CASE("prime-divisor specialization agrees with the general two-element form") {
  BoundsReport r = bounds_zero_p(10, 2, 1, 5);
  CHECK(r.lower == 4);
  CHECK(r.upper == 4);
  CHECK(r.method == "zero-p");

  for (std::uint32_t n = 2; n <= 30; ++n) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      if (p >= n || n % p != 0) continue;
      for (int l = 1; l <= 5; ++l) {
        for (int k = l + 1; k <= 6; ++k) {
          BoundsReport a = bounds_zero_p(n, k, l, p);
          BoundsReport b = bounds_two_element(n, k, l, p);
          CAPTURE(n);
          CAPTURE(p);
          CAPTURE(k);
          CAPTURE(l);
          CHECK(a.lower == b.lower);
          CHECK(a.upper == b.upper);
          CHECK(a.raw_lower == b.raw_lower);
          CHECK(a.raw_upper == b.raw_upper);
        }
      }
    }
  }
  CHECK_THROWS_AS(bounds_zero_p(10, 2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(bounds_zero_p(5, 2, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(bounds_zero_p(12, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("prefix bounds sandwich the oracle on a small grid") {
  for (std::uint32_t n = 1; n <= 20; ++n) {
    for (int l = 1; l <= 2; ++l) {
      for (int k = l + 1; k <= 4; ++k) {
        for (int c = 2; c <= 3; ++c) {
          BoundsReport r = bounds_prefix_noise(n, k, l, c);
          SearchResult res = brute_force_mu(SumFreeParams{n, k, l}, prefix_noise(n, c));
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(l);
          CAPTURE(c);
          CHECK(r.lower <= res.mu);
          CHECK(res.mu <= r.upper);
        }
      }
    }
  }
}
