#pragma once

// The single place where (n, d) parity and range conditions live.

#include <string>
#include <vector>

namespace horikawa {

enum class Kind { First, Second };

std::string_view kind_name(Kind k);

/// n - d odd, d >= 0 and
///   First:  n >= max(d + 3, 2d - 3)   (also the range of the D_{n,d} strata)
///   Second: n >= max(d + 3, 2d - 2)
bool admissible(Kind kind, long n, long d);

/// Throws DomainError naming the violated condition.
void require_admissible(Kind kind, long n, long d);

/// Every admissible d for this n, ascending.
std::vector<long> admissible_ds(Kind kind, long n);

}  // namespace horikawa
