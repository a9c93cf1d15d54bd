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

#include "milpdist/normalize.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <unordered_map>

#include "milpdist/error.h"

namespace milpdist {
namespace {

void RequireFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kNonFiniteValue,
                std::string(what) + " is not finite");
  }
}

std::string_view WeightSymbol(WeightClass w) {
  switch (w) {
    case WeightClass::kMinusOne: return "−1";
    case WeightClass::kOne: return "1";
    case WeightClass::kOtherReal: return "ℝ";
  }
  return "?";
}

std::string_view RhsSymbol(RhsClass r) {
  switch (r) {
    case RhsClass::kZero: return "0";
    case RhsClass::kOne: return "1";
    case RhsClass::kOtherReal: return "ℝ";
    case RhsClass::kNoneObjective: return "";
  }
  return "?";
}

}  // namespace

WeightClass ClassifyWeight(double w) {
  RequireFinite(w, "weight");
  if (w == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "zero weight cannot be classified");
  }
  if (std::abs(w + 1.0) <= kClassTolerance) return WeightClass::kMinusOne;
  if (std::abs(w - 1.0) <= kClassTolerance) return WeightClass::kOne;
  return WeightClass::kOtherReal;
}

RhsClass ClassifyRhs(double b) {
  RequireFinite(b, "right-hand side");
  if (std::abs(b) <= kClassTolerance) return RhsClass::kZero;
  if (std::abs(b - 1.0) <= kClassTolerance) return RhsClass::kOne;
  return RhsClass::kOtherReal;
}

NormalizedInstance Normalize(const CanonicalInstance& instance) {
  const std::uint64_t m = instance.constraints.size();
  if (m == 0) {
    throw Error(ErrorCode::kEmptyInstance,
                "instance '" + instance.name + "' has no constraints");
  }
  auto fold = [&](const std::vector<Term>& terms, RhsClass rhs) {
    std::array<std::uint64_t, kNumPairKeys> counts{};
    for (const Term& t : terms) {
      const PairKey key{ClassifyWeight(t.coef), instance.variables.at(t.var)};
      ++counts[key.index()];
    }
    return ConstraintTemplate::FromCounts(counts, rhs);
  };

  struct Bucket {
    ConstraintTemplate constraint;
    std::uint64_t count = 0;
  };
  std::unordered_map<std::string, Bucket> buckets;
  for (const LinearConstraint& c : instance.constraints) {
    ConstraintTemplate t = fold(c.terms, ClassifyRhs(c.rhs));
    std::string key = TemplateCanonicalKey(t);
    auto [it, inserted] = buckets.try_emplace(std::move(key));
    if (inserted) it->second.constraint = std::move(t);
    ++it->second.count;
  }

  std::vector<WeightedTemplate> templates;
  templates.reserve(buckets.size());
  for (auto& [key, bucket] : buckets) {
    templates.push_back({std::move(bucket.constraint), Proportion(bucket.count, m)});
  }
  InstanceMeta meta{instance.name, m, instance.variables.size()};
  return NormalizedInstance::Create(
      fold(instance.objective, RhsClass::kNoneObjective), std::move(templates),
      std::move(meta));
}

std::string FormatTemplateShare(Proportion p) {
  using u128 = unsigned __int128;
  if (p.is_zero()) return "0.0e-0";
  // Smallest e with p * 10^e >= 1, then two significant digits rounded half
  // up in exact arithmetic. num * 10^(e+1) < 100 * den, so nothing overflows.
  const u128 num = p.num(), den = p.den();
  int exponent = 0;
  u128 scale = 1;
  while (num * scale < den) {
    scale *= 10;
    ++exponent;
  }
  u128 digits = (2 * num * scale * 10 + den) / (2 * den);
  if (digits == 100) {
    digits = 10;
    --exponent;
  }
  const auto d = static_cast<unsigned>(digits);
  return std::to_string(d / 10) + "." + std::to_string(d % 10) + "e-" +
         std::to_string(exponent);
}

std::string FormatPairShare(Proportion p) {
  // Round half up to hundredths in exact arithmetic.
  const unsigned __int128 scaled =
      (static_cast<unsigned __int128>(p.num()) * 200 + p.den()) / (2 * p.den());
  const auto hundredths = static_cast<unsigned>(scaled);
  std::string s = std::to_string(hundredths / 100) + ".";
  const unsigned frac = hundredths % 100;
  if (frac % 10 == 0) {
    s += std::to_string(frac / 10);
  } else {
    s += (frac < 10 ? "0" : "") + std::to_string(frac);
  }
  return s;
}

std::string FormatTemplate(const ConstraintTemplate& t) {
  std::string s;
  if (t.empty()) {
    s = "0";
  }
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    const auto& e = t.entries()[i];
    if (i > 0) s += " + ";
    s += FormatPairShare(e.proportion);
    s += " × ";
    s += WeightSymbol(e.key.weight);
    s += "·";
    s += ToString(e.key.var);
  }
  if (t.rhs() != RhsClass::kNoneObjective) {
    s += " ≤ ";
    s += RhsSymbol(t.rhs());
  }
  return s;
}

std::string RenderTemplateTable(const NormalizedInstance& instance) {
  std::vector<std::size_t> order(instance.templates().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Templates are stored in key order, so a stable sort on the share alone
  // breaks ties by canonical key.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance.templates()[a].proportion > instance.templates()[b].proportion;
  });
  std::string out = "Minimize " + FormatTemplate(instance.objective()) + "\n";
  out += "Prop     Constraint Representation\n";
  for (std::size_t i : order) {
    const auto& wt = instance.templates()[i];
    std::string share = FormatTemplateShare(wt.proportion);
    share.resize(std::max<std::size_t>(share.size() + 1, 9), ' ');
    out += share + FormatTemplate(wt.constraint) + "\n";
  }
  return out;
}

}  // namespace milpdist
