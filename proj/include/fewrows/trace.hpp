// Copyright 2026 The fewrows Authors
// Licensed under the terms of the Apache 2.0 License.
// See LICENSE in the project root for terms.

#ifndef FEWROWS_TRACE_HPP
#define FEWROWS_TRACE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fewrows {

// Machine-checkable record of one instance transformation.  `rule` names the
// transformation; `entries` holds ordered key -> integer-vector pairs.  Keys
// may repeat; lookup helpers return the first occurrence.
struct ReductionTrace {
  std::string rule;
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> entries;

  void add(std::string key, std::vector<std::int64_t> values) {
    entries.emplace_back(std::move(key), std::move(values));
  }
  void add(std::string key, std::int64_t value) {
    entries.emplace_back(std::move(key), std::vector<std::int64_t>{value});
  }

  // First entry with the given key, or nullptr.
  const std::vector<std::int64_t>* find(const std::string& key) const {
    for (const auto& e : entries) {
      if (e.first == key) return &e.second;
    }
    return nullptr;
  }

  bool has(const std::string& key) const { return find(key) != nullptr; }

  // First entry with the given key, required to hold exactly one value.
  std::int64_t scalar(const std::string& key) const {
    const auto* v = find(key);
    if (v == nullptr || v->size() != 1) {
      throw std::invalid_argument("trace key '" + key + "' missing or not scalar");
    }
    return (*v)[0];
  }

  // First entry with the given key, required to exist.
  const std::vector<std::int64_t>& values(const std::string& key) const {
    const auto* v = find(key);
    if (v == nullptr) throw std::invalid_argument("trace key '" + key + "' missing");
    return *v;
  }

  bool operator==(const ReductionTrace&) const = default;
};

}  // namespace fewrows

#endif  // FEWROWS_TRACE_HPP
