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

#include "milpdist/model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include "milpdist/error.h"

namespace milpdist {
namespace {

using u128 = unsigned __int128;

u128 Gcd(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string_view ToString(VarClass c) {
  switch (c) {
    case VarClass::kBinary: return "B";
    case VarClass::kInteger: return "I";
    case VarClass::kContinuous: return "C";
  }
  return "?";
}

std::string_view ToString(WeightClass c) {
  switch (c) {
    case WeightClass::kMinusOne: return "-1";
    case WeightClass::kOne: return "1";
    case WeightClass::kOtherReal: return "R";
  }
  return "?";
}

std::string_view ToString(RhsClass c) {
  switch (c) {
    case RhsClass::kZero: return "0";
    case RhsClass::kOne: return "1";
    case RhsClass::kOtherReal: return "R";
    case RhsClass::kNoneObjective: return "none";
  }
  return "?";
}

VarClass ParseVarClass(std::string_view text) {
  if (text == "B") return VarClass::kBinary;
  if (text == "I") return VarClass::kInteger;
  if (text == "C") return VarClass::kContinuous;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown variable class '" + std::string(text) + "'");
}

WeightClass ParseWeightClass(std::string_view text) {
  if (text == "-1") return WeightClass::kMinusOne;
  if (text == "1") return WeightClass::kOne;
  if (text == "R") return WeightClass::kOtherReal;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown weight class '" + std::string(text) + "'");
}

RhsClass ParseRhsClass(std::string_view text) {
  if (text == "0") return RhsClass::kZero;
  if (text == "1") return RhsClass::kOne;
  if (text == "R") return RhsClass::kOtherReal;
  if (text == "none") return RhsClass::kNoneObjective;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown rhs class '" + std::string(text) + "'");
}

Proportion::Proportion(std::uint64_t num, std::uint64_t den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidArgument, "proportion with zero denominator");
  }
  if (num > den) {
    throw Error(ErrorCode::kInvalidArgument,
                "proportion " + std::to_string(num) + "/" + std::to_string(den) +
                    " exceeds one");
  }
  if (num == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Proportion::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Proportion Proportion::Parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "proportion '" + std::string(text) + "' is not of the form n/d");
  }
  auto parse = [&](std::string_view part) {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad proportion '" + std::string(text) + "'");
    }
    return value;
  };
  return Proportion(parse(text.substr(0, slash)), parse(text.substr(slash + 1)));
}

std::strong_ordering operator<=>(const Proportion& a, const Proportion& b) {
  const u128 lhs = static_cast<u128>(a.num_) * b.den_;
  const u128 rhs = static_cast<u128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool SumsToOne(std::span<const Proportion> values) {
  // Running sum num/den; denominators stay bounded for real inputs because
  // they all divide the constraint or template count.
  u128 num = 0;
  u128 den = 1;
  constexpr u128 kLimit = static_cast<u128>(1) << 100;
  for (const Proportion& p : values) {
    const u128 g = Gcd(den, p.den());
    const u128 scale = p.den() / g;
    if (den > kLimit / scale) return false;
    num = num * scale + static_cast<u128>(p.num()) * (den / g);
    den *= scale;
    const u128 r = Gcd(num, den);
    num /= r;
    den /= r;
    if (num > den) return false;
  }
  return num == den;
}

PairKey PairKey::FromIndex(int index) {
  if (index < 0 || index >= kNumPairKeys) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair index out of range: " + std::to_string(index));
  }
  return PairKey{static_cast<WeightClass>(index / kNumVarClasses),
                 static_cast<VarClass>(index % kNumVarClasses)};
}

ConstraintTemplate ConstraintTemplate::FromCounts(
    const std::array<std::uint64_t, kNumPairKeys>& counts, RhsClass rhs) {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  ConstraintTemplate t;
  t.rhs_ = rhs;
  if (total == 0) {
    if (rhs != RhsClass::kNoneObjective) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint template without nonzeros");
    }
    return t;
  }
  for (int k = 0; k < kNumPairKeys; ++k) {
    if (counts[k] == 0) continue;
    t.entries_.push_back({PairKey::FromIndex(k), Proportion(counts[k], total)});
  }
  t.FillMasses();
  return t;
}

ConstraintTemplate ConstraintTemplate::FromEntries(std::vector<Entry> entries,
                                                   RhsClass rhs) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.key < b.key; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].proportion.is_zero()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "template entry with zero proportion");
    }
    if (i > 0 && entries[i].key == entries[i - 1].key) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate pair in template");
    }
  }
  if (entries.empty()) {
    if (rhs != RhsClass::kNoneObjective) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint template without pairs");
    }
  } else {
    std::vector<Proportion> props;
    props.reserve(entries.size());
    for (const Entry& e : entries) props.push_back(e.proportion);
    if (!SumsToOne(props)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "template pair proportions do not sum to one");
    }
  }
  ConstraintTemplate t;
  t.entries_ = std::move(entries);
  t.rhs_ = rhs;
  t.FillMasses();
  return t;
}

Proportion ConstraintTemplate::proportion(PairKey key) const {
  for (const Entry& e : entries_) {
    if (e.key == key) return e.proportion;
  }
  return Proportion();
}

void ConstraintTemplate::FillMasses() {
  masses_.fill(0.0);
  for (const Entry& e : entries_) masses_[e.key.index()] = e.proportion.ToDouble();
}

std::string TemplateCanonicalKey(const ConstraintTemplate& t) {
  std::string key;
  key.reserve(16 * t.entries().size() + 4);
  for (const auto& e : t.entries()) {
    key.push_back(static_cast<char>('0' + e.key.index()));
    key.push_back(':');
    key += e.proportion.ToString();
    key.push_back(';');
  }
  key.push_back('|');
  key.push_back(static_cast<char>('0' + static_cast<int>(t.rhs())));
  return key;
}

NormalizedInstance NormalizedInstance::Create(
    ConstraintTemplate objective, std::vector<WeightedTemplate> templates,
    InstanceMeta meta) {
  if (objective.rhs() != RhsClass::kNoneObjective) {
    throw Error(ErrorCode::kInvalidArgument,
                "objective template must carry the objective rhs class");
  }
  if (templates.empty()) {
    throw Error(ErrorCode::kEmptyInstance, "instance has no constraints");
  }
  std::vector<std::pair<std::string, WeightedTemplate>> keyed;
  keyed.reserve(templates.size());
  std::vector<Proportion> props;
  props.reserve(templates.size());
  for (auto& wt : templates) {
    if (wt.constraint.empty() ||
        wt.constraint.rhs() == RhsClass::kNoneObjective) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint template must have pairs and a constraint rhs");
    }
    if (wt.proportion.is_zero()) {
      throw Error(ErrorCode::kInvalidArgument, "template with zero proportion");
    }
    props.push_back(wt.proportion);
    keyed.emplace_back(TemplateCanonicalKey(wt.constraint), std::move(wt));
  }
  if (!SumsToOne(props)) {
    throw Error(ErrorCode::kInvalidArgument,
                "template proportions do not sum to one");
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  NormalizedInstance inst;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i > 0 && keyed[i].first == inst.keys_.back()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate template");
    }
    inst.keys_.push_back(std::move(keyed[i].first));
    inst.templates_.push_back(std::move(keyed[i].second));
  }
  inst.objective_ = std::move(objective);
  inst.meta_ = std::move(meta);
  return inst;
}

bool NormalizedInstance::SameRepresentation(
    const NormalizedInstance& other) const {
  if (!(objective_ == other.objective_) || keys_ != other.keys_) return false;
  for (std::size_t i = 0; i < templates_.size(); ++i) {
    if (templates_[i].proportion != other.templates_[i].proportion) {
      return false;
    }
  }
  return true;
}

void DistanceParams::Validate() const {
  for (double v : {alpha, beta, gamma, zeta}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "distance parameters must be finite and non-negative");
    }
  }
}

}  // namespace milpdist
