#include "lapvol/error.hpp"

namespace lapvol {

const char* to_string(Errc code) {
  switch (code) {
  case Errc::InvalidInput: return "InvalidInput";
  case Errc::NonpositiveB: return "NonpositiveB";
  case Errc::EmptyAfterCleanup: return "EmptyAfterCleanup";
  case Errc::NotCompact: return "NotCompact";
  case Errc::NotPointed: return "NotPointed";
  case Errc::DegenerateInstance: return "DegenerateInstance";
  case Errc::DivergentSlice: return "DivergentSlice";
  case Errc::MalformedH: return "MalformedH";
  case Errc::NotAPoleInVar: return "NotAPoleInVar";
  case Errc::GenericityViolated: return "GenericityViolated";
  case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

int exit_code(Errc code) {
  switch (code) {
  case Errc::InvalidInput:
  case Errc::EmptyAfterCleanup:
    return 2;
  case Errc::NonpositiveB: return 3;
  case Errc::NotCompact: return 4;
  case Errc::NotPointed: return 5;
  case Errc::DegenerateInstance:
  case Errc::GenericityViolated:
    return 6;
  case Errc::MalformedH:
  case Errc::DivergentSlice:
  case Errc::NotAPoleInVar:
  case Errc::Internal:
    return 7;
  }
  return 7;
}

} // namespace lapvol
