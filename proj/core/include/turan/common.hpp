#pragma once

#include <cmath>

namespace turan {

// Lemmas that write "log n" without a base use the natural logarithm;
// dyadic bucketing always uses log2 regardless of this setting.
enum class LogBase { Natural, Two };

inline double log_with(double x, LogBase base) {
  return base == LogBase::Two ? std::log2(x) : std::log(x);
}

enum class SearchStatus { Found, AbsentExhausted, BudgetExhausted };

}  // namespace turan
