#pragma once

#include <stdexcept>
#include <string>

namespace locgame {

enum class ErrorCode {
  loop,
  duplicate_edge,
  vertex_out_of_range,
  disconnected,
  empty_graph,
  invalid_argument,
  not_outerplanar,
  not_bipartite,
  precondition,
  size_limit,
  missing_labels,
  parse,
  internal,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::loop: return "loop";
    case ErrorCode::duplicate_edge: return "duplicate edge";
    case ErrorCode::vertex_out_of_range: return "vertex id out of range";
    case ErrorCode::disconnected: return "graph is disconnected";
    case ErrorCode::empty_graph: return "empty graph";
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::not_outerplanar: return "not outerplanar";
    case ErrorCode::not_bipartite: return "not bipartite";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::size_limit: return "size limit exceeded";
    case ErrorCode::missing_labels: return "missing vertex labels";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::internal: return "internal error";
  }
  return "unknown";
}

/// Library-wide exception. `code()` distinguishes rejection reasons.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace locgame
