#include "symrank/aronhold.hpp"
#include "symrank/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace symtest;

TEST_CASE("embedded table matches a fresh derivation") {
  const AronholdTable fresh = derive_aronhold();
  const AronholdTable& table = aronhold_table();
  CHECK(fresh.nullity == 1);
  CHECK(table.nullity == 1);
  CHECK(fresh.terms == table.terms);
  CHECK(fresh.terms.size() == 25);
  for (const auto& [e, c] : fresh.terms) {
    int deg = 0;
    for (int v : e) deg += v;
    CHECK(deg == 4);
  }
}

TEST_CASE("table text round trip") {
  const auto& t = aronhold_table();
  const auto back = read_aronhold_table(write_aronhold_table(t));
  CHECK(back.terms == t.terms);
  CHECK(back.samples == t.samples);
  CHECK(back.seed == t.seed);
  CHECK_THROWS_AS(read_aronhold_table("samples x\n"), Error);
}

TEST_CASE("a different seed derives a proportional invariant") {
  AronholdOptions opts;
  opts.seed = 99;
  opts.samples = 760;
  const auto other = derive_aronhold(opts);
  const auto& t = aronhold_table();
  REQUIRE(other.terms.size() == t.terms.size());
  const Rational ratio = other.terms.front().second / t.terms.front().second;
  for (size_t k = 0; k < t.terms.size(); ++k) {
    CHECK(other.terms[k].first == t.terms[k].first);
    CHECK(other.terms[k].second == ratio * t.terms[k].second);
  }
}

TEST_CASE("the invariant vanishes on three cubes and not on generic cubics") {
  Rng rng(61);
  for (std::uint64_t s = 0; s < 100; ++s) {
    CHECK(aronhold_eval(random_rank_r({2, 3, 3, 5000 + s, 4}).form) == 0);
    CHECK(aronhold_eval(random_rank_r({2, 3, 2, 6000 + s, 4}).form) == 0);
    CHECK(aronhold_eval(random_form(rng, 3, 3, 6)) != 0);
  }
}
