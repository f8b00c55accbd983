#ifndef GENUSKIT_CLI_HPP
#define GENUSKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "genuskit/rational.hpp"

namespace genuskit::cli {

enum class Format { Text, Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kDefaultOrder = 20;

/// Named fields plus an optional table.  Field and column order is insertion order.
struct Report {
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::ordered_json>> rows;

    bool empty() const { return fields.empty() && columns.empty(); }
};

/// "num/den", also for integers.
std::string rational_string(const Rational& r);

/// json: fields, then "rows" as objects keyed by column.  csv: header and one line per row
/// (key,value pairs when there is no table).  text: "key: value" lines, then the table.
std::string emit(const Report& report, Format format);

/// Runs one command; args exclude the program name.  Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genuskit::cli

#endif  // GENUSKIT_CLI_HPP
