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

#ifndef MILPDIST_MODEL_H_
#define MILPDIST_MODEL_H_

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace milpdist {

// Feature classes. The enumerator order is the canonical total order used
// for serialization, hashing and greedy tie-breaking.
enum class VarClass : std::uint8_t { kBinary, kInteger, kContinuous };
enum class WeightClass : std::uint8_t { kMinusOne, kOne, kOtherReal };
// kNoneObjective marks the objective row, which has no right-hand side.
enum class RhsClass : std::uint8_t { kZero, kOne, kOtherReal, kNoneObjective };

inline constexpr int kNumVarClasses = 3;
inline constexpr int kNumWeightClasses = 3;
inline constexpr int kNumPairKeys = kNumVarClasses * kNumWeightClasses;

std::string_view ToString(VarClass c);
std::string_view ToString(WeightClass c);
std::string_view ToString(RhsClass c);
VarClass ParseVarClass(std::string_view text);
WeightClass ParseWeightClass(std::string_view text);
RhsClass ParseRhsClass(std::string_view text);

// Exact rational in [0, 1], always stored in lowest terms (zero is 0/1).
class Proportion {
 public:
  constexpr Proportion() = default;
  // Throws kInvalidArgument when den == 0 or num > den.
  Proportion(std::uint64_t num, std::uint64_t den);

  static constexpr Proportion One() { return Proportion(Raw{}, 1, 1); }

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "num/den".
  std::string ToString() const;
  static Proportion Parse(std::string_view text);

  friend bool operator==(const Proportion&, const Proportion&) = default;
  friend std::strong_ordering operator<=>(const Proportion& a,
                                          const Proportion& b);

 private:
  struct Raw {};
  constexpr Proportion(Raw, std::uint64_t num, std::uint64_t den)
      : num_(num), den_(den) {}

  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

// True iff the proportions add up to exactly one.
bool SumsToOne(std::span<const Proportion> values);

struct PairKey {
  WeightClass weight = WeightClass::kOne;
  VarClass var = VarClass::kBinary;

  // Dense index in [0, kNumPairKeys), consistent with the ordering below.
  int index() const {
    return static_cast<int>(weight) * kNumVarClasses + static_cast<int>(var);
  }
  static PairKey FromIndex(int index);

  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

// One normalized constraint: the proportions of (weight class, variable
// class) pairs among the constraint's nonzeros plus its rhs class.
class ConstraintTemplate {
 public:
  struct Entry {
    PairKey key;
    Proportion proportion;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  ConstraintTemplate() = default;

  // counts[k] is the number of nonzeros whose pair has index k. All-zero
  // counts are only accepted for the objective (rhs == kNoneObjective).
  static ConstraintTemplate FromCounts(
      const std::array<std::uint64_t, kNumPairKeys>& counts, RhsClass rhs);

  // Validates: no duplicate keys, no zero proportions, proportions summing
  // to exactly one. Entries may arrive in any order.
  static ConstraintTemplate FromEntries(std::vector<Entry> entries,
                                        RhsClass rhs);

  // Sorted by PairKey.
  const std::vector<Entry>& entries() const { return entries_; }
  RhsClass rhs() const { return rhs_; }
  bool empty() const { return entries_.empty(); }
  Proportion proportion(PairKey key) const;
  // Dense view of the pair masses, indexed by PairKey::index().
  const std::array<double, kNumPairKeys>& Masses() const { return masses_; }

  friend bool operator==(const ConstraintTemplate&,
                         const ConstraintTemplate&) = default;

 private:
  void FillMasses();

  std::vector<Entry> entries_;
  RhsClass rhs_ = RhsClass::kNoneObjective;
  std::array<double, kNumPairKeys> masses_{};
};

// Byte string identifying a template; equal iff the templates are equal.
std::string TemplateCanonicalKey(const ConstraintTemplate& t);

struct WeightedTemplate {
  ConstraintTemplate constraint;
  Proportion proportion;
};

struct InstanceMeta {
  std::string name;
  std::uint64_t num_constraints = 0;  // after canonicalization
  std::uint64_t num_variables = 0;
};

// The dimension-free view of an instance: an objective template and the
// distinct constraint templates weighted by their occurrence share.
class NormalizedInstance {
 public:
  // Validates the invariants and orders templates by canonical key.
  static NormalizedInstance Create(ConstraintTemplate objective,
                                   std::vector<WeightedTemplate> templates,
                                   InstanceMeta meta);

  const ConstraintTemplate& objective() const { return objective_; }
  const std::vector<WeightedTemplate>& templates() const { return templates_; }
  // keys()[i] is TemplateCanonicalKey(templates()[i].constraint).
  const std::vector<std::string>& keys() const { return keys_; }
  const InstanceMeta& meta() const { return meta_; }

  // Compares the normalized content only; metadata is ignored.
  bool SameRepresentation(const NormalizedInstance& other) const;

 private:
  NormalizedInstance() = default;

  ConstraintTemplate objective_;
  std::vector<WeightedTemplate> templates_;
  std::vector<std::string> keys_;
  InstanceMeta meta_;
};

// Weights of the weight/variable/rhs/objective mismatch terms. A zero value
// switches the corresponding term off.
struct DistanceParams {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double zeta = 1.0;

  // Throws kInvalidArgument unless every value is finite and >= 0.
  void Validate() const;
};

}  // namespace milpdist

#endif  // MILPDIST_MODEL_H_
