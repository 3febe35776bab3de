#pragma once

#include <iosfwd>
#include <string>

namespace ufscc {

// End-to-end solve: parse the edge list at input_path, compute the
// partition, write the partition text to output_path. Returns 0 on
// success, 1 on a parse error, 2 on an I/O failure; failures print one
// diagnostic line naming the error class to `diagnostics`.
int run_solve_command(const std::string& input_path,
                      const std::string& output_path,
                      std::ostream& diagnostics);

}  // namespace ufscc
