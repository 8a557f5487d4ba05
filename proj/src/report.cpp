#include "orecalc/report.hpp"

namespace orecalc {

void Report::append(const Report& other) {
  for (const auto& item : other.items) {
    CheckItem copy = item;
    if (!other.title.empty()) copy.label = other.title + ": " + copy.label;
    items.push_back(std::move(copy));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& item : items)
    if (!item.informational && !item.passed) ++n;
  return n;
}

const CheckItem* Report::first_failure() const {
  for (const auto& item : items)
    if (!item.informational && !item.passed) return &item;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out;
  if (!title.empty()) out += "== " + title + " ==\n";
  std::size_t checks = 0;
  for (const auto& item : items) {
    if (item.informational) {
      out += "NOTE " + item.label;
    } else {
      ++checks;
      out += (item.passed ? "PASS " : "FAIL ") + item.label;
    }
    if (!item.detail.empty()) out += ": " + item.detail;
    out += '\n';
  }
  out += "result: " + std::string(passed() ? "PASS" : "FAIL") + " (" +
         std::to_string(checks - failures()) + "/" + std::to_string(checks) + ")\n";
  return out;
}

}  // namespace orecalc
