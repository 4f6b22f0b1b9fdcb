#include "fov/analysis.hpp"

namespace fov {

GroupAnalysis::GroupAnalysis(const GroupSpec& s, std::size_t cap)
    : spec(s),
      group(s.build(cap)),
      classes(conjugacy_classes(group)),
      table(character_table(group, classes)),
      fields(compute_fields(group, classes, table)),
      profile(invariant_profile(group, classes, fields)),
      actions(build_actions(table, classes)),
      solvable(is_solvable(group)) {}

std::string profile_line(const std::string& name, std::size_t order, const InvariantProfile& p) {
  return name + " " + std::to_string(order) + " h=" + std::to_string(p.h) + " f=" + std::to_string(p.f) +
         " clQ=" + std::to_string(p.cl_Q) + " irrQ=" + std::to_string(p.irr_Q) + " " + p.flags.to_string();
}

}  // namespace fov
