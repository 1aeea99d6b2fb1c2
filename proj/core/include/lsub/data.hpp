#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lsub/arith.hpp"

namespace lsub {

namespace detail {
const std::map<std::string, std::string_view>& embedded_data_files();
}

/// Raw content of a named data table. Looks in $LS_DATA_DIR first (review
/// override), then in the compiled-in copy. Throws domain_error if absent.
std::string data_file(const std::string& name);

/// Parsed TSV rows, '#' comment lines and blank lines skipped.
std::vector<std::vector<std::string>> data_rows(const std::string& name);

/// Decimal order of a sporadic group from the `sporadic_orders` table.
Nat data_sporadic_order(const std::string& name);

}  // namespace lsub
