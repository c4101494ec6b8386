#include "jetvar/jet_space.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "jetvar/error.hpp"

namespace jetvar {

namespace {

bool valid_identifier(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

}  // namespace

bool is_reserved_name(const std::string& name) {
  return name == "sin" || name == "cos" || name == "exp" || name == "ln";
}

JetSpace::JetSpace(std::vector<std::string> coord_names, std::vector<std::string> field_names,
                   int max_order)
    : coords_(std::move(coord_names)), fields_(std::move(field_names)), max_order_(max_order) {
  if (coords_.empty()) throw std::invalid_argument("jet space needs at least one coordinate");
  if (fields_.empty()) throw std::invalid_argument("jet space needs at least one field");
  if (max_order_ < 0) throw std::invalid_argument("jet order must be non-negative");
  std::set<std::string> seen;
  for (const auto* names : {&coords_, &fields_}) {
    for (const auto& n : *names) {
      if (!valid_identifier(n)) throw std::invalid_argument("invalid identifier '" + n + "'");
      if (is_reserved_name(n)) throw DuplicateName("'" + n + "' is a reserved function name");
      if (!seen.insert(n).second) throw DuplicateName("identifier '" + n + "' declared twice");
    }
  }
}

std::shared_ptr<const JetSpace> JetSpace::make(std::vector<std::string> coord_names,
                                               std::vector<std::string> field_names,
                                               int max_order) {
  return std::make_shared<const JetSpace>(std::move(coord_names), std::move(field_names),
                                          max_order);
}

std::optional<std::size_t> JetSpace::find_coord(const std::string& name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  if (it == coords_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - coords_.begin());
}

std::optional<std::size_t> JetSpace::find_field(const std::string& name) const {
  auto it = std::find(fields_.begin(), fields_.end(), name);
  if (it == fields_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - fields_.begin());
}

}  // namespace jetvar
