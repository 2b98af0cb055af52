#pragma once

// Outcome of a verification: how many identities were checked and which failed.

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hy {

struct Report {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }

  void fail(std::string message) {
    ++checks;
    failures.push_back(std::move(message));
  }

  /// Records one identity; the message is only built on failure.
  template <class Message>
  bool check(bool condition, Message&& message) {
    if (condition) {
      ++checks;
      return true;
    }
    fail(std::string(std::forward<Message>(message)()));
    return false;
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    checks += other.checks;
    for (const auto& f : other.failures) failures.push_back(prefix + f);
  }

  std::string summary() const {
    return std::to_string(checks - failures.size()) + "/" + std::to_string(checks) + " checks passed";
  }

  friend std::ostream& operator<<(std::ostream& os, const Report& r) {
    os << r.summary() << "\n";
    for (const auto& f : r.failures) os << "  FAIL " << f << "\n";
    return os;
  }
};

}  // namespace hy
