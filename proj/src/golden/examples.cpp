#include "ctri/golden.hpp"

namespace ctri::golden {

Triangle example_triangle_n3() {
  return Triangle({
      Row(3, 1, {2, 3, 1}),
      Row(3, 2, {2, 1, 3, 3, 2, 1}),
      Row(3, 3, {2, 1, 2, 3, 3, 1, 3, 2, 1}),
  });
}

std::string example_triangle_n3_merged_first() { return "(2|2|13|3|32|1|1)"; }

std::vector<long long> example_triangle_n3_psi() { return {2, 3}; }

Row example_depth2_bottom() { return Row(4, 1, {3, 1, 4, 2}); }
Row example_depth2_top() { return Row(4, 2, {3, 1, 4, 2, 3, 4, 1, 2}); }
long long example_depth2_psi() { return 3; }
std::vector<long long> example_depth2_subtotals() { return {0, 1, 0, 2}; }

Row example_low_psi_bottom() { return Row(3, 1, {3, 2, 1}); }
Row example_low_psi_top() { return Row(3, 2, {3, 1, 2, 2, 3, 1}); }
long long example_low_psi_value() { return 2; }

}  // namespace ctri::golden
