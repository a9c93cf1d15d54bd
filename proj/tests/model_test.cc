// Copyright 2026 The milpdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "milpdist/error.h"
#include "milpdist/json_io.h"
#include "milpdist/model.h"
#include "support/oracles.h"

namespace milpdist {
namespace {

ConstraintTemplate Make(std::vector<ConstraintTemplate::Entry> entries, RhsClass rhs) {
  return ConstraintTemplate::FromEntries(std::move(entries), rhs);
}

constexpr PairKey kOneB{WeightClass::kOne, VarClass::kBinary};
constexpr PairKey kMinusOneC{WeightClass::kMinusOne, VarClass::kContinuous};

TEST_CASE("proportions are kept in lowest terms") {
  CHECK(Proportion(2, 4) == Proportion(1, 2));
  CHECK(Proportion(2, 4).num() == 1);
  CHECK(Proportion(2, 4).den() == 2);
  CHECK(Proportion(0, 7).den() == 1);
  CHECK(Proportion(6, 6) == Proportion::One());
  CHECK(Proportion(1, 3) < Proportion(1, 2));
  CHECK(Proportion(2, 6) == Proportion(1, 3));
  CHECK_THROWS_AS(Proportion(1, 0), Error);
  CHECK_THROWS_AS(Proportion(3, 2), Error);
}

TEST_CASE("reducing twice is idempotent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t den = rng() % 100000 + 1;
    const std::uint64_t num = rng() % (den + 1);
    const Proportion once(num, den);
    const Proportion twice(once.num(), once.den());
    CHECK(once.num() == twice.num());
    CHECK(once.den() == twice.den());
    CHECK(std::gcd(once.num(), once.den()) == (once.num() == 0 ? 1 : 1));
    CHECK(Proportion::Parse(once.ToString()) == once);
  }
}

TEST_CASE("proportion parsing rejects garbage") {
  CHECK(Proportion::Parse("3/9") == Proportion(1, 3));
  CHECK_THROWS_AS(Proportion::Parse("0.5"), Error);
  CHECK_THROWS_AS(Proportion::Parse("1/"), Error);
  CHECK_THROWS_AS(Proportion::Parse("a/2"), Error);
}

TEST_CASE("SumsToOne is exact") {
  const std::vector<Proportion> thirds = {Proportion(1, 3), Proportion(1, 3), Proportion(1, 3)};
  CHECK(SumsToOne(thirds));
  const std::vector<Proportion> mixed = {Proportion(1, 2), Proportion(1, 3), Proportion(1, 6)};
  CHECK(SumsToOne(mixed));
  const std::vector<Proportion> short_by_a_bit = {Proportion(1, 2), Proportion(49999, 100000)};
  CHECK_FALSE(SumsToOne(short_by_a_bit));
  CHECK_FALSE(SumsToOne({}));
}

TEST_CASE("pair keys follow the class orders") {
  for (int k = 0; k < kNumPairKeys; ++k) CHECK(PairKey::FromIndex(k).index() == k);
  CHECK(PairKey{WeightClass::kMinusOne, VarClass::kContinuous} <
        PairKey{WeightClass::kOne, VarClass::kBinary});
  CHECK(PairKey{WeightClass::kOne, VarClass::kBinary} <
        PairKey{WeightClass::kOne, VarClass::kInteger});
  CHECK_THROWS_AS(PairKey::FromIndex(9), Error);
}

TEST_CASE("canonical key examples") {
  const auto a = Make({{kOneB, Proportion(1, 1)}}, RhsClass::kOne);
  const auto b = Make({{kOneB, Proportion(2, 2)}}, RhsClass::kOne);
  CHECK(TemplateCanonicalKey(a) == TemplateCanonicalKey(b));

  const auto c = Make({{kOneB, Proportion(1, 2)}, {kMinusOneC, Proportion(1, 2)}}, RhsClass::kZero);
  const auto d = Make({{kOneB, Proportion(1, 2)}, {kMinusOneC, Proportion(1, 2)}}, RhsClass::kOne);
  CHECK(TemplateCanonicalKey(c) != TemplateCanonicalKey(d));

  const auto e = Make({{kMinusOneC, Proportion(1, 2)}, {kOneB, Proportion(1, 2)}}, RhsClass::kZero);
  CHECK(TemplateCanonicalKey(c) == TemplateCanonicalKey(e));
  CHECK(c == e);
}

TEST_CASE("canonical key is a congruence") {
  std::mt19937_64 rng(5);
  std::vector<ConstraintTemplate> pool;
  for (int i = 0; i < 150; ++i) pool.push_back(testing::RandomTemplate(rng, i % 10 == 0, 3));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      CHECK((TemplateCanonicalKey(a) == TemplateCanonicalKey(b)) == (a == b));
    }
  }
}

TEST_CASE("templates from counts") {
  std::array<std::uint64_t, kNumPairKeys> counts{};
  counts[kOneB.index()] = 2;
  counts[kMinusOneC.index()] = 4;
  const auto t = ConstraintTemplate::FromCounts(counts, RhsClass::kZero);
  REQUIRE(t.entries().size() == 2);
  CHECK(t.entries()[0].key == kMinusOneC);
  CHECK(t.proportion(kMinusOneC) == Proportion(2, 3));
  CHECK(t.proportion(kOneB) == Proportion(1, 3));
  CHECK(t.proportion(PairKey{WeightClass::kOtherReal, VarClass::kInteger}).is_zero());

  const std::array<std::uint64_t, kNumPairKeys> none{};
  CHECK(ConstraintTemplate::FromCounts(none, RhsClass::kNoneObjective).empty());
  CHECK_THROWS_AS(ConstraintTemplate::FromCounts(none, RhsClass::kZero), Error);
}

TEST_CASE("template validation") {
  CHECK_THROWS_AS(Make({{kOneB, Proportion(1, 2)}}, RhsClass::kOne), Error);
  CHECK_THROWS_AS(Make({{kOneB, Proportion(1, 1)}, {kMinusOneC, Proportion(0, 1)}}, RhsClass::kOne),
                  Error);
  CHECK_THROWS_AS(Make({{kOneB, Proportion(1, 2)}, {kOneB, Proportion(1, 2)}}, RhsClass::kOne),
                  Error);
  CHECK_THROWS_AS(Make({}, RhsClass::kOne), Error);
  CHECK(Make({}, RhsClass::kNoneObjective).empty());
}

TEST_CASE("normalized instance validation") {
  const auto obj = Make({{kOneB, Proportion::One()}}, RhsClass::kNoneObjective);
  const auto t1 = Make({{kOneB, Proportion::One()}}, RhsClass::kOne);
  const auto t2 = Make({{kMinusOneC, Proportion::One()}}, RhsClass::kZero);

  const auto inst = NormalizedInstance::Create(
      obj, {{t2, Proportion(1, 4)}, {t1, Proportion(3, 4)}}, InstanceMeta{"x", 4, 3});
  REQUIRE(inst.templates().size() == 2);
  CHECK(inst.keys()[0] < inst.keys()[1]);
  CHECK(inst.keys()[0] == TemplateCanonicalKey(inst.templates()[0].constraint));

  CHECK_THROWS_AS(NormalizedInstance::Create(obj, {{t1, Proportion(1, 2)}, {t1, Proportion(1, 2)}}, {}),
                  Error);
  CHECK_THROWS_AS(NormalizedInstance::Create(obj, {{t1, Proportion(1, 2)}}, {}), Error);
  CHECK_THROWS_AS(NormalizedInstance::Create(t1, {{t1, Proportion::One()}}, {}), Error);
  try {
    NormalizedInstance::Create(obj, {}, {});
    FAIL("expected EmptyInstance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyInstance);
  }
}

TEST_CASE("distance params must be finite and non-negative") {
  CHECK_NOTHROW(DistanceParams{}.Validate());
  CHECK_NOTHROW((DistanceParams{0, 0, 0, 0}.Validate()));
  CHECK_THROWS_AS((DistanceParams{-1, 1, 1, 1}.Validate()), Error);
  CHECK_THROWS_AS((DistanceParams{1, 1, std::numeric_limits<double>::infinity(), 1}.Validate()),
                  Error);
}

TEST_CASE("normalized JSON round-trips") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const NormalizedInstance inst = testing::RandomInstance(rng, 8);
    const NormalizedInstance back = NormalizedFromJson(ToJson(inst));
    CHECK(back.SameRepresentation(inst));
    CHECK(back.meta().num_constraints == inst.meta().num_constraints);
  }
}

TEST_CASE("normalized JSON is validated") {
  std::mt19937_64 rng(2);
  nlohmann::json doc = ToJson(testing::RandomInstance(rng, 3));
  nlohmann::json bad = doc;
  bad["templates"][0]["share"] = "0/1";
  CHECK_THROWS_AS(NormalizedFromJson(bad), Error);
  bad = doc;
  bad["format"] = "other";
  CHECK_THROWS_AS(NormalizedFromJson(bad), Error);
  bad = doc;
  bad["objective"]["pairs"][0]["var"] = "Q";
  CHECK_THROWS_AS(NormalizedFromJson(bad), Error);
  bad = doc;
  bad.erase("templates");
  CHECK_THROWS_AS(NormalizedFromJson(bad), Error);
}

}  // namespace
}  // namespace milpdist
