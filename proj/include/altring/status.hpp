#ifndef ALTRING_STATUS_HPP
#define ALTRING_STATUS_HPP

#include <string_view>

namespace altring {

/// Three-valued outcome for checks that may be cut short by a budget.
enum class Status { holds, fails, undecided };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::undecided: return "undecided";
  }
  return "undecided";
}

inline Status from_bool(bool b) { return b ? Status::holds : Status::fails; }

/// Conjunction: any failure wins, then any undecided.
inline Status operator&&(Status a, Status b) {
  if (a == Status::fails || b == Status::fails) return Status::fails;
  if (a == Status::undecided || b == Status::undecided) return Status::undecided;
  return Status::holds;
}

}  // namespace altring

#endif  // ALTRING_STATUS_HPP
