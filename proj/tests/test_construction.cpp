#include <doctest.h>

#include <cmath>
#include <set>

#include "linefree/construction.hpp"
#include "linefree/verifier.hpp"

using namespace linefree;

namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

struct Brute {
  std::int64_t p, r, s, l;
};

// Floors by counting up, with no square roots involved.
Brute brute_params(std::int64_t p) {
  Brute b{p, 0, 0, 0};
  while ((b.r + 1) * (b.r + 1) <= p) ++b.r;
  while ((b.s + 1) * b.r <= p - 2) ++b.s;
  while (16 * (b.l + 1) * (b.l + 1) <= p) ++b.l;
  return b;
}

bool on_grid_row(const Brute& b, std::int64_t z) { return z % b.r == 0 && z / b.r <= b.s; }

// Membership in A_i straight from its three-part definition.
bool in_exclusion(const Brute& b, std::int64_t i, std::int64_t y, std::int64_t z) {
  const std::int64_t t = (i - (b.p - b.l - 1)) * b.r;
  if (y == z) return true;
  if (((t <= y && y <= t + b.r - 1) || y == b.p - 1) && on_grid_row(b, z)) return true;
  return y <= b.l * b.r - 1 && z == b.p - 1;
}

// Membership in S* from the layer list.
bool in_s_star(const Brute& b, std::int64_t x, std::int64_t y, std::int64_t z) {
  if (x <= b.p - b.l - 2) return y <= b.p - 2 && z <= b.p - 2;
  if (x <= b.p - 2) return !in_exclusion(b, x, y, z);
  return y <= b.l * b.r - 1 && on_grid_row(b, z);
}

PointSet predicate_set(const Space& sp, auto pred) {
  PointSet out(sp);
  for (std::uint64_t i = 0; i < sp.size(); ++i)
    if (pred(sp.point(i))) out.insert_index(i);
  return out;
}

}  // namespace

TEST_CASE("derive_params examples") {
  auto p17 = derive_params(make_modulus(17));
  CHECK(p17.r == 4);
  CHECK(p17.s == 3);
  CHECK(p17.l == 1);
  CHECK_FALSE(p17.degenerate);
  auto p13 = derive_params(make_modulus(13));
  CHECK(p13.r == 3);
  CHECK(p13.s == 3);
  CHECK(p13.l == 0);
  CHECK(p13.degenerate);
  auto p101 = derive_params(make_modulus(101));
  CHECK(p101.r == 10);
  CHECK(p101.s == 9);
  CHECK(p101.l == 2);
}

TEST_CASE("derive_params agrees with brute-force floors and meets its invariants") {
  for (auto p : primes_between(3, 20000)) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(static_cast<std::int64_t>(p));
    REQUIRE(c.r == b.r);
    REQUIRE(c.s == b.s);
    REQUIRE(c.l == b.l);
    CHECK(c.degenerate == (b.l == 0));
    // floor(sqrt(p)/4) == floor(floor(sqrt(p))/4) as a sanity identity
    CHECK(c.l == c.r / 4);
    if (p >= 17) {
      CHECK(c.r >= 4);
      CHECK(c.s >= 1);
      CHECK(c.l >= 1);
      CHECK(std::int64_t(c.l) * c.r - 1 < std::int64_t(p) - 1);
      CHECK(std::uint64_t(c.s) * c.r < p - 1);
    }
  }
}

TEST_CASE("grid rows") {
  const auto c = derive_params(make_modulus(17));
  CHECK(grid_rows(c) == std::vector<Elem>{0, 4, 8, 12});
}

TEST_CASE("hypercube sizes") {
  CHECK(hypercube(make_modulus(3), 3).cardinality() == 8);
  CHECK(hypercube(make_modulus(5), 2).cardinality() == 16);
  CHECK(hypercube(make_modulus(17), 3).cardinality() == 4096);
}

TEST_CASE("lemma blocking set against its definition") {
  for (auto p : primes_between(5, 61)) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(p);
    const Space plane(c.mod, 2);
    for (std::int64_t t = 0; t <= b.p - b.r; ++t) {
      const auto got = lemma_blocking_set(c, t);
      const auto expect = predicate_set(plane, [&](const Point& pt) {
        const std::int64_t x = pt[0], y = pt[1];
        return x == y || (t <= x && x <= t + b.r - 1 && (on_grid_row(b, y) || y == b.p - 1));
      });
      REQUIRE(got == expect);
      // Every line x - y = c meets it.
      for (Elem cdiff = 0; cdiff < p; ++cdiff) {
        bool hit = false;
        for (Elem y = 0; y < p && !hit; ++y) hit = got.contains(plane.make_point({c.mod.add(y, cdiff), y}));
        CHECK(hit);
      }
    }
  }
}

TEST_CASE("lemma blocking set p = 17") {
  const auto c = derive_params(make_modulus(17));
  const auto t0 = lemma_blocking_set(c, 0);
  // 17 diagonal + 4x5 grid - overlaps (0,0) and (4,4)? (4,4): x=4 outside [0,3]; only (0,0).
  CHECK(t0.cardinality() == 17 + 20 - 1);
  CHECK(is_blocking(t0).ok);
  CHECK_NOTHROW(lemma_blocking_set(c, 13));
  try {
    lemma_blocking_set(c, 14);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OutOfRange);
  }
  CHECK_THROWS_AS(lemma_blocking_set(c, -1), Error);
}

TEST_CASE("difference coverage of the lemma grid") {
  for (auto p : primes_between(5, 101)) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(p);
    CHECK((b.s + 1) * b.r >= b.p - 1);
    for (std::int64_t t = 0; t <= b.p - b.r; ++t) {
      std::set<std::int64_t> covered;
      for (std::int64_t x = t; x < t + b.r; ++x)
        for (std::int64_t y = 0; y <= b.s * b.r; y += b.r) covered.insert(((x - y) % b.p + b.p) % b.p);
      const auto cov = grid_difference_coverage(c, t);
      std::vector<Elem> missing;
      for (std::int64_t v = 0; v < b.p; ++v)
        if (!covered.count(v)) missing.push_back(static_cast<Elem>(v));
      CHECK(cov.missing == missing);
      CHECK(cov.longest_run >= p - 1);
      // The residues x - y run over t - s*r .. t + r - 1 consecutively.
      CHECK(covered.size() == static_cast<std::size_t>(std::min((b.s + 1) * b.r, b.p)));
      if (missing.size() == 1) CHECK(std::int64_t(missing[0]) == (t + b.r) % b.p);
    }
  }
}

TEST_CASE("layer exclusion sets") {
  const auto c17 = derive_params(make_modulus(17));
  CHECK(layer_exclusion(c17, 15).cardinality() == 40);
  const auto c101 = derive_params(make_modulus(101));
  CHECK(layer_exclusion(c101, 98).cardinality() == 230);
  CHECK(layer_exclusion(c101, 99).cardinality() == 230);
  CHECK_THROWS_AS(layer_exclusion(c101, 97), Error);
  CHECK_THROWS_AS(layer_exclusion(c101, 100), Error);
  CHECK_THROWS_AS(layer_exclusion(derive_params(make_modulus(13)), 11), Error);

  for (auto p : primes_between(17, 101)) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(p);
    const Space plane(c.mod, 2);
    for (std::int64_t i = b.p - b.l - 1; i <= b.p - 2; ++i) {
      const auto a = layer_exclusion(c, i);
      const auto expect = predicate_set(
          plane, [&](const Point& pt) { return in_exclusion(b, i, pt[0], pt[1]); });
      REQUIRE(a == expect);
      CHECK(std::int64_t(a.cardinality()) == b.p + (b.s + 1) * (b.r + 1) + b.l * b.r - 1);
      const std::int64_t t = (i - (b.p - b.l - 1)) * b.r;
      CHECK(lemma_blocking_set(c, t).is_subset_of(a));
      // Exactly one diagonal point lies on the grid part.
      int diag_on_grid = 0;
      for (std::int64_t y = t; y < t + b.r; ++y) diag_on_grid += on_grid_row(b, y);
      CHECK(diag_on_grid == 1);
    }
  }
}

TEST_CASE("special-layer strips are disjoint") {
  for (auto p : primes_between(17, 1000)) {
    const auto c = derive_params(make_modulus(p));
    for (Elem i = c.first_special(); i + 1 < p; ++i)
      for (Elem j = i + 1; j + 1 < p; ++j) {
        const auto a = c.strip_start(i), b = c.strip_start(j);
        CHECK((a + c.r <= b || b + c.r <= a));
      }
    // Highest strip stays inside [0, l*r - 1].
    CHECK(c.strip_start(p - 2) + c.r - 1 <= c.l * c.r - 1);
  }
}

TEST_CASE("S* matches an independent membership predicate") {
  for (auto p : {17, 19, 23, 37, 41}) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(p);
    const auto star = build_s_star(c);
    const auto expect = predicate_set(Space(c.mod, 3), [&](const Point& pt) {
      return in_s_star(b, pt[0], pt[1], pt[2]);
    });
    CHECK(star == expect);
  }
  CHECK(build_s_star(derive_params(make_modulus(17))).cardinality() == 4105);
}

TEST_CASE("layer identity of S*") {
  for (auto p : {17, 53, 67}) {
    const auto c = derive_params(make_modulus(p));
    const auto star = build_s_star(c);
    const Space plane(c.mod, 2);
    for (Elem i = 0; i < p; ++i) {
      PointSet expect(plane);
      if (i < c.first_special()) {
        expect = hypercube(c.mod, 2);
      } else if (i + 1 < p) {
        expect = layer_exclusion(c, i).complement();
      } else {
        for (Elem y = 0; y < c.l * c.r; ++y)
          for (Elem z : grid_rows(c)) expect.insert(plane.make_point({y, z}));
      }
      CHECK(layer(star, i) == expect);
    }
  }
}

TEST_CASE("closed forms agree with enumeration for every prime up to 101") {
  for (auto p : primes_between(3, 101)) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(p);
    const auto star = build_s_star(c);
    const std::int64_t layer_size =
        b.p * b.p - b.p - (b.s + 1) * (b.r + 1) - b.l * b.r + 1;
    const std::int64_t closed = (b.p - b.l - 1) * (b.p - 1) * (b.p - 1) + b.l * layer_size +
                                (b.s + 1) * b.l * b.r;
    CHECK(std::int64_t(star.cardinality()) == closed);
    CHECK(formula::s_star_size(c) == closed);
    CHECK(formula::special_layer_size(c) == layer_size);
    CHECK(formula::exclusion_size(c) == b.p + (b.s + 1) * (b.r + 1) + b.l * b.r - 1);
    CHECK(formula::removal_bound(c) == b.l * (b.l - 1) * (b.s + 1));
    for (Elem i = c.first_special(); c.l > 0 && i + 1 < p; ++i) {
      CHECK(std::int64_t(layer(star, i).cardinality()) == layer_size);
      CHECK(std::int64_t(layer_exclusion(c, i).cardinality()) == formula::exclusion_size(c));
    }
  }
}

TEST_CASE("degenerate primes build the hypercube") {
  for (auto p : {3, 5, 7, 11, 13}) {
    const auto mod = make_modulus(p);
    CHECK(build_s(mod) == hypercube(mod, 3));
    CHECK(build_s_star(derive_params(mod)) == hypercube(mod, 3));
    CHECK(removal_points(derive_params(mod)).is_empty());
  }
  CHECK(build_s_star(derive_params(make_modulus(13))).cardinality() == 1728);
}

TEST_CASE("removal triples follow the k1 formula") {
  for (auto p : primes_between(17, 199)) {
    const auto c = derive_params(make_modulus(p));
    const auto b = brute_params(p);
    std::vector<RemovalTriple> expect;
    for (std::int64_t i1 = b.p - b.l - 1; i1 <= b.p - 2; ++i1)
      for (std::int64_t i2 = b.p - b.l - 1; i2 <= b.p - 2; ++i2) {
        if (i1 == i2) continue;
        for (std::int64_t k = 0; k <= b.s * b.r; k += b.r) {
          // k1 is the unique z with ((p-1) - i2) (z - (p-1)) == (i1 - i2)(k - (p-1)) mod p,
          // found by search rather than by inversion.
          std::int64_t k1 = -1;
          for (std::int64_t z = 0; z < b.p; ++z) {
            const std::int64_t lhs = ((b.p - 1 - i2) * (z - (b.p - 1))) % b.p;
            const std::int64_t rhs = ((i1 - i2) * (k - (b.p - 1))) % b.p;
            if (((lhs - rhs) % b.p + b.p) % b.p == 0) k1 = z;
          }
          REQUIRE(k1 >= 0);
          CHECK(k1 != b.p - 1);
          expect.push_back({Elem(i1), Elem(i2), Elem(k), Elem(k1)});
        }
      }
    CHECK(removal_triples(c) == expect);

    const auto rem = removal_points(c);
    CHECK(std::int64_t(rem.cardinality()) <= formula::removal_bound(c));
    for (const auto& pt : rem.points()) {
      CHECK(pt[1] == p - 1);
      CHECK(pt[2] != p - 1);
      CHECK(pt[0] >= c.first_special());
      CHECK(pt[0] <= p - 2);
    }
  }
  CHECK(removal_points(derive_params(make_modulus(17))).is_empty());
}

TEST_CASE("S = S* minus the removal set") {
  for (auto p : primes_between(17, 101)) {
    const auto c = derive_params(make_modulus(p));
    const auto star = build_s_star(c);
    const auto s = build_s(c);
    CHECK(s.is_subset_of(star));
    CHECK(s == set_difference(star, removal_points(c)));
    CHECK(std::int64_t(s.cardinality()) >= std::int64_t(star.cardinality()) - formula::removal_bound(c));
    CHECK(s.cardinality() > std::uint64_t(p - 1) * (p - 1) * (p - 1));
    for (const auto& pt : set_difference(star, s).points()) {
      CHECK(pt[0] >= c.first_special());
      CHECK(pt[0] <= p - 2);
      CHECK(pt[1] == p - 1);
    }
  }
  CHECK(build_s(make_modulus(17)).cardinality() == 4105);
}

TEST_CASE("removal count at p = 101") {
  const auto c = derive_params(make_modulus(101));
  CHECK(formula::removal_bound(c) == 20);
  // Computed fact: 5 of the 20 triples collide or land outside S*.
  CHECK(set_difference(build_s_star(c), build_s(c)).cardinality() == 15);
}
