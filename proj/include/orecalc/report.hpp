#pragma once

#include <string>
#include <vector>

namespace orecalc {

struct CheckItem {
  std::string label;
  bool passed = true;
  std::string detail;  // witness or value; empty when nothing to add
  bool informational = false;  // printed but ignored by passed()
};

// Ordered list of named checks. Text output is deterministic so reports can
// be compared against golden files.
struct Report {
  std::string title;
  std::vector<CheckItem> items;

  void add(std::string label, bool ok, std::string detail = {}) {
    items.push_back({std::move(label), ok, std::move(detail), false});
  }
  void note(std::string label, std::string detail) {
    items.push_back({std::move(label), true, std::move(detail), true});
  }
  void append(const Report& other);

  bool passed() const;
  std::size_t failures() const;
  const CheckItem* first_failure() const;
  std::string to_text() const;
};

}  // namespace orecalc
