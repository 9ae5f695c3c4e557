#pragma once

#include <stdexcept>
#include <string>

namespace ospx {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidInput : Error { using Error::Error; };
struct InvalidShape : Error { using Error::Error; };
struct MixedShapes : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct ClosureOverflow : Error { using Error::Error; };
struct CocycleInvalid : Error { using Error::Error; };
struct WellDefinednessFailure : Error { using Error::Error; };
struct SignConventionBroken : Error { using Error::Error; };
struct NoDecomposition : Error { using Error::Error; };

}  // namespace ospx
