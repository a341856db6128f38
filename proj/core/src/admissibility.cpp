#include <horikawa/admissibility.hpp>
#include <horikawa/exact.hpp>

#include <algorithm>

namespace horikawa {

std::string_view kind_name(Kind k) { return k == Kind::First ? "first" : "second"; }

namespace {

long lower_bound_for(Kind kind, long d) {
  return std::max(d + 3, kind == Kind::First ? 2 * d - 3 : 2 * d - 2);
}

}  // namespace

bool admissible(Kind kind, long n, long d) {
  if (d < 0) return false;
  if ((n - d) % 2 == 0) return false;
  return n >= lower_bound_for(kind, d);
}

void require_admissible(Kind kind, long n, long d) {
  const std::string where = " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ", " +
                            std::string(kind_name(kind)) + " kind)";
  if (d < 0) throw DomainError("d must be >= 0" + where);
  if ((n - d) % 2 == 0) throw DomainError("n - d must be odd" + where);
  if (n < d + 3) throw DomainError("need n >= d + 3" + where);
  if (kind == Kind::First && n < 2 * d - 3) throw DomainError("need n >= 2d - 3" + where);
  if (kind == Kind::Second && n < 2 * d - 2) throw DomainError("need n >= 2d - 2" + where);
}

std::vector<long> admissible_ds(Kind kind, long n) {
  std::vector<long> out;
  for (long d = 0; d + 3 <= n; ++d)
    if (admissible(kind, n, d)) out.push_back(d);
  return out;
}

}  // namespace horikawa
