/*
 * Copyright 2026 The imlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IMLAB_LABELS_HPP_
#define IMLAB_LABELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace imlab {

using Label = std::uint8_t;

inline constexpr Label kNormal = 0;
inline constexpr Label kFraud = 1;

// Ordered binary class labels: 0 = normal, 1 = fraud. Never empty.
class LabelVector {
 public:
  // Throws std::invalid_argument if `values` is empty or holds anything but 0/1.
  explicit LabelVector(std::vector<Label> values);

  std::size_t size() const { return values_.size(); }
  Label operator[](std::size_t i) const { return values_[i]; }
  std::span<const Label> values() const { return values_; }

  std::size_t fraud_count() const;
  std::size_t normal_count() const { return size() - fraud_count(); }

  friend bool operator==(const LabelVector&, const LabelVector&) = default;

 private:
  std::vector<Label> values_;
};

// Number of positions where the two vectors differ. Sizes must match.
std::size_t hamming_distance(const LabelVector& a, const LabelVector& b);

}  // namespace imlab

#endif  // IMLAB_LABELS_HPP_
