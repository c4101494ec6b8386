#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace jetvar {

/// Coordinate chart of the r-th jet prolongation: p base coordinates, q
/// dependent fields and the highest jet order expressions are expected to
/// reference. max_order only bounds parsing; the differential operators
/// raise orders freely.
class JetSpace {
 public:
  /// Throws DuplicateName if an identifier repeats across coordinates and
  /// fields (or collides with a function name), std::invalid_argument on an
  /// empty coordinate or field list or a malformed identifier.
  JetSpace(std::vector<std::string> coord_names, std::vector<std::string> field_names,
           int max_order);

  static std::shared_ptr<const JetSpace> make(std::vector<std::string> coord_names,
                                              std::vector<std::string> field_names, int max_order);

  std::size_t p() const { return coords_.size(); }
  std::size_t q() const { return fields_.size(); }
  int max_order() const { return max_order_; }

  const std::vector<std::string>& coord_names() const { return coords_; }
  const std::vector<std::string>& field_names() const { return fields_; }
  const std::string& coord_name(std::size_t axis) const { return coords_.at(axis); }
  const std::string& field_name(std::size_t field) const { return fields_.at(field); }

  std::optional<std::size_t> find_coord(const std::string& name) const;
  std::optional<std::size_t> find_field(const std::string& name) const;

 private:
  std::vector<std::string> coords_;
  std::vector<std::string> fields_;
  int max_order_;
};

using JetSpacePtr = std::shared_ptr<const JetSpace>;

bool is_reserved_name(const std::string& name);

}  // namespace jetvar
