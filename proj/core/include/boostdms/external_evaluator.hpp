#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "boostdms/problem.hpp"

namespace boostdms {

/// Raised after three consecutive evaluator crashes; aborts the run.
class ExternalEvaluatorFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one response line `{"f":[...]}`. Components may be numbers or the
/// strings "inf" / "-inf". Returns nullopt for anything else, including a
/// length other than q.
std::optional<ObjVector> parse_response(std::string_view line, int q);

/// Request line for x, without the trailing newline.
std::string format_request(const Vec& x);

struct ExternalSpec {
  std::string command;  // run through /bin/sh -c
  std::string name = "external";
  Vec lb;
  Vec ub;
  int q = 2;
};

/// Problem backed by subprocesses speaking the line protocol: one JSON
/// request per line on stdin, one JSON response per line on stdout.
///
/// Subprocesses are started lazily and reused; concurrent evaluations each
/// get their own process, so a pool serving k workers holds at most k. A
/// crash, EOF or malformed line counts as a failed evaluation: the result
/// is all +inf, a note goes to stderr and the process is restarted on next
/// use.
Problem make_external_problem(const ExternalSpec& spec);

}  // namespace boostdms
