#pragma once

#include <stdexcept>
#include <string>

namespace hybridspec {

enum class ErrorKind {
  domain,
  pole,
  unsupported,
  out_of_regime,
  missing_input,
  divergence,
  non_convergence,
  bracket_failure,
  accuracy_loss,
  insufficient_cutoff,
  ill_conditioned,
  quadrature,
  pole_on_contour,
  route_disagreement
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::out_of_regime: return "out_of_regime";
    case ErrorKind::missing_input: return "missing_input";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::bracket_failure: return "bracket_failure";
    case ErrorKind::accuracy_loss: return "accuracy_loss";
    case ErrorKind::insufficient_cutoff: return "insufficient_cutoff";
    case ErrorKind::ill_conditioned: return "ill_conditioned";
    case ErrorKind::quadrature: return "quadrature";
    case ErrorKind::pole_on_contour: return "pole_on_contour";
    case ErrorKind::route_disagreement: return "route_disagreement";
  }
  return "unknown";
}

// Invalid input (bad arguments, unsupported configurations) as opposed to a
// computation that failed on valid input.
inline bool is_validation(ErrorKind k) {
  return k == ErrorKind::domain || k == ErrorKind::pole || k == ErrorKind::unsupported ||
         k == ErrorKind::out_of_regime || k == ErrorKind::missing_input ||
         k == ErrorKind::pole_on_contour;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace hybridspec
