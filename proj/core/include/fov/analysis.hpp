#pragma once

// Everything computed for one group, built once and shared by the suites.

#include "fov/character_table.hpp"
#include "fov/corpus.hpp"
#include "fov/fields.hpp"
#include "fov/galois_action.hpp"
#include "fov/group.hpp"

namespace fov {

struct GroupAnalysis {
  GroupAnalysis(const GroupSpec& spec, std::size_t cap = kDefaultOrderCap);

  GroupSpec spec;
  PermGroup group;
  ClassData classes;
  CharacterTable table;
  GroupFields fields;
  InvariantProfile profile;
  ActionTable actions;
  bool solvable;
};

/// `name order h=.. f=.. clQ=.. irrQ=.. flags`
std::string profile_line(const std::string& name, std::size_t order, const InvariantProfile& p);

}  // namespace fov
