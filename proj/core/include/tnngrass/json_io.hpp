#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "tnngrass/decision.hpp"
#include "tnngrass/quad_expression.hpp"

namespace tnn::io {

/// Raised on malformed input documents. Syntax errors carry line/column,
/// semantic errors carry the JSON path of the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses an inequality document
///   {"m":2,"n":2,"terms":[{"c":"1","I":[1,3],"J":[2,4]}, ...]}
/// into a validated expression. Coefficients are rational strings ("3",
/// "-1/2"). Duplicate and unknown keys are rejected. Indices are 1-based.
QuadExpression parse_input(const std::string& bytes);

/// Canonical document for an expression: stable key order, compact layout,
/// rationals in lowest terms. parse_input(format_document(e)) == e.
std::string format_document(const QuadExpression& e);

struct ReportMeta {
  std::optional<std::string> method;   // certificate | symmetric | recursive
  std::optional<double> time_ms;
  std::optional<unsigned long> seed;   // echoed when falsification ran
  std::optional<long> samples;
};

/// Canonical verdict report. Stable key order: verdict, eta, certificate,
/// violating_matching, sum, counterexample, then metadata.
std::string format_report(const Verdict& v, int eta, const ReportMeta& meta = {});

}  // namespace tnn::io
