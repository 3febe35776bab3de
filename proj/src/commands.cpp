#include "ufscc/commands.hpp"

#include <fstream>
#include <ostream>

#include "ufscc/io.hpp"
#include "ufscc/solver.hpp"

namespace ufscc {

int run_solve_command(const std::string& input_path,
                      const std::string& output_path,
                      std::ostream& diagnostics) {
  std::ifstream in(input_path);
  if (!in) {
    diagnostics << "IoError: cannot open input file \"" << input_path << "\"\n";
    return 2;
  }

  DirectedGraph graph;
  try {
    graph = parse_edge_list(in);
  } catch (const ParseError& error) {
    diagnostics << error.what() << '\n';
    return 1;
  }

  SccPartition partition = solve(graph);

  std::ofstream out(output_path);
  if (!out) {
    diagnostics << "IoError: cannot open output file \"" << output_path << "\"\n";
    return 2;
  }
  format_partition(partition, out);
  out.flush();
  if (!out) {
    diagnostics << "IoError: failed writing \"" << output_path << "\"\n";
    return 2;
  }
  return 0;
}

}  // namespace ufscc
