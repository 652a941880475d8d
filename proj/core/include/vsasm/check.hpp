#pragma once

#include <string>

namespace vsasm {

// Result of a single verification. `witness` carries a rendered term or value
// that demonstrates a failure; `detail` is free-form context for reports.
struct CheckOutcome {
  bool passed = true;
  std::string expected;
  std::string actual;
  std::string witness;
  std::string detail;

  static CheckOutcome pass(std::string detail = {}) {
    CheckOutcome c;
    c.detail = std::move(detail);
    return c;
  }
  static CheckOutcome fail(std::string expected, std::string actual, std::string witness = {}) {
    CheckOutcome c;
    c.passed = false;
    c.expected = std::move(expected);
    c.actual = std::move(actual);
    c.witness = std::move(witness);
    return c;
  }
};

}  // namespace vsasm
