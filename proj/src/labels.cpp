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

#include "imlab/labels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace imlab {

LabelVector::LabelVector(std::vector<Label> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("label vector must not be empty");
  }
  const auto bad = std::find_if(values_.begin(), values_.end(),
                                [](Label v) { return v != kNormal && v != kFraud; });
  if (bad != values_.end()) {
    throw std::invalid_argument("label at index " + std::to_string(bad - values_.begin()) +
                                " is " + std::to_string(*bad) + ", expected 0 or 1");
  }
}

std::size_t LabelVector::fraud_count() const {
  return static_cast<std::size_t>(std::count(values_.begin(), values_.end(), kFraud));
}

std::size_t hamming_distance(const LabelVector& a, const LabelVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance: size mismatch");
  }
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i] ? 1 : 0;
  }
  return d;
}

}  // namespace imlab
