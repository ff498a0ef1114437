#pragma once

#include "stpq/matrix.hpp"

namespace stpq {

/// Semi-tensor product: with t = lcm(cols(a), rows(b)),
///   a stp b = (a (x) I_{t/cols(a)}) * (b (x) I_{t/rows(b)}).
/// Total on all matrix pairs; coincides with the conventional product when
/// the inner dimensions already match.
Matrix stp(const Matrix& a, const Matrix& b);

} // namespace stpq
