#pragma once

#include "table.hpp"

#include <horikawa/admissibility.hpp>
#include <horikawa/hj_calculus.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace horikawa::cli {

/// Bad flags or arguments; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TableRequest {
  std::string table;  // T1 T2 T3 strata hj chains topology
  long n_min = 0;
  long n_max = -1;
  std::optional<long> d_min;
  std::optional<long> d_max;
  std::optional<Kind> kind;
  bool force_eval = false;
  std::size_t max_len = 0;
  bool two_gorenstein_only = false;
  bool dedupe = false;
  bool du_val_as_t = false;
};

bool is_table_id(const std::string& id);

/// Rows in canonical (n, d) order. Closed forms replace numbers when more
/// than one row is produced, all rows share a regime, and force_eval is off.
Table build_table(const TableRequest& req);

/// One-line description used by `hj expand` and friends, e.g.
/// "[4]  T δ=1 m=2 a=1  2-Gorenstein".
std::string describe_chain(const Chain& c, const ChainClassification& cls, bool du_val_as_t);
Json chain_json(const Chain& c, const ChainClassification& cls, bool du_val_as_t);

}  // namespace horikawa::cli
