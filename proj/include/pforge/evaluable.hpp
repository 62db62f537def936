#pragma once

#include <functional>

namespace pforge {

/// A real-valued function of one real variable. Implementations must
/// either return a finite value or throw DomainError; they must never
/// return NaN or infinities silently.
using RealFunction = std::function<double(double)>;

}  // namespace pforge
