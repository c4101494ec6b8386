#pragma once

#include <string>
#include <string_view>

#include "jetvar/expr.hpp"
#include "jetvar/jet_space.hpp"
#include "jetvar/vform.hpp"

#include <json.hpp>

namespace jetvar {

enum class Format { Text, Json, Latex };

/// "text", "json" or "latex"; anything else throws UnsupportedFormat.
Format parse_format(std::string_view name);

/// Suffix notation that parse_expr() reads back: (1/2)*u_x^2 - u*sin(x).
/// Opaque atoms print as NAME or NAME[suffix] and are display-only.
std::string render_text(const Expr& e, const JetSpace& space);

/// u_{xx}, \frac{1}{2}, \sin(x); opaque atoms as \partial_{x}U.
std::string render_latex(const Expr& e, const JetSpace& space);

/// Text, e.g. "u_x du ⊗ 1" or "-(u_xx + u) du ⊗ dx ∧ dy"; "0" for the zero form.
std::string render_text(const VForm& form);

/// LaTeX, e.g. "-(u_{xx} + u_{yy})\,du \otimes dx \wedge dy".
std::string render_latex(const VForm& form);

/// {"bidegree":[d,l],"orders":[s,r],"terms":[{"dx":[...],"dpsi":[[field,[N]]...],"coeff":"..."}]}
/// Axes are 1-based, fields are named, coefficients use the text grammar.
nlohmann::ordered_json to_json(const VForm& form);

/// Dispatch on format. Expressions have no JSON rendering
/// (UnsupportedFormat).
std::string render(const Expr& e, const JetSpace& space, Format format);
std::string render(const VForm& form, Format format);

}  // namespace jetvar
