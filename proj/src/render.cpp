#include "jetvar/render.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "jetvar/error.hpp"

namespace jetvar {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  throw UnsupportedFormat("unsupported format '" + std::string(name) + "'");
}

namespace {

// Binding strength of a rendered fragment; a fragment is wrapped in
// parentheses when its context needs more.
enum Prec { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

bool is_negative_term(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Constant: return e.value() < 0;
    case ExprKind::Product: return e.operands().front().is_constant() && e.operands().front().value() < 0;
    case ExprKind::Negate: return true;
    default: return false;
  }
}

bool is_all_negative_sum(const Expr& e) {
  return e.kind() == ExprKind::Sum &&
         std::all_of(e.operands().begin(), e.operands().end(), is_negative_term);
}

Expr negated_term(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Constant: return Expr(Rational(-e.value()));
    case ExprKind::Product: {
      auto ops = e.operands();
      ops.front() = Expr(Rational(-ops.front().value()));
      return Expr::product(std::move(ops));
    }
    case ExprKind::Negate: return e.operand();
    case ExprKind::Sum: {
      std::vector<Expr> ops;
      for (const auto& t : e.operands()) ops.push_back(negated_term(t));
      return Expr::sum(std::move(ops));
    }
    default: return Expr::negate(e);
  }
}

class Renderer {
 public:
  Renderer(const JetSpace& space, bool latex) : space_(space), latex_(latex) {}

  std::string operator()(const Expr& e, int min_prec = 0) const {
    auto [text, prec] = render(e);
    return prec < min_prec ? "(" + text + ")" : text;
  }

  std::string suffix(const MultiIndex& index) const {
    std::string s;
    for (std::size_t axis = 0; axis < index.dim(); ++axis)
      for (int k = 0; k < index[axis]; ++k) s += space_.coord_name(axis);
    return s;
  }

  std::string covector(const Covector& c) const {
    std::string s = "d" + space_.field_name(c.field);
    if (c.index.order() > 0) s += latex_ ? "_{" + suffix(c.index) + "}" : "_" + suffix(c.index);
    return s;
  }

 private:
  struct Fragment {
    std::string text;
    int prec;
  };

  const JetSpace& space_;
  bool latex_;

  std::string product_separator() const { return latex_ ? "\\," : "*"; }

  Fragment constant(const Rational& c) const {
    if (is_integer(c)) return {to_string(c), c < 0 ? kUnary : kAtom};
    const Rational magnitude = abs(c);
    std::string body = latex_ ? "\\frac{" + magnitude.get_num().get_str() + "}{" +
                                    magnitude.get_den().get_str() + "}"
                              : magnitude.get_num().get_str() + "/" + magnitude.get_den().get_str();
    const int prec = latex_ ? kAtom : kProduct;
    if (c < 0) return {"-" + wrap({body, prec}, kPower), kUnary};
    return {body, prec};
  }

  static std::string wrap(const Fragment& f, int min_prec) {
    return f.prec < min_prec ? "(" + f.text + ")" : f.text;
  }

  Fragment render(const Expr& e) const {
    switch (e.kind()) {
      case ExprKind::Constant:
        return constant(e.value());
      case ExprKind::BaseVar:
        return {space_.coord_name(e.axis()), kAtom};
      case ExprKind::JetVar: {
        std::string s = space_.field_name(e.field());
        if (e.index().order() > 0)
          s += latex_ ? "_{" + suffix(e.index()) + "}" : "_" + suffix(e.index());
        return {s, kAtom};
      }
      case ExprKind::Opaque: {
        if (e.index().order() == 0) return {e.name(), kAtom};
        if (latex_) return {"\\partial_{" + suffix(e.index()) + "}" + e.name(), kAtom};
        return {e.name() + "[" + suffix(e.index()) + "]", kAtom};
      }
      case ExprKind::Sum:
        return sum(e);
      case ExprKind::Product:
        return product(e);
      case ExprKind::Power: {
        const std::string base = (*this)(e.operand(), kAtom);
        const std::string k = std::to_string(e.exponent());
        return {base + (latex_ ? "^{" + k + "}" : "^" + k), kPower};
      }
      case ExprKind::Function: {
        const std::string name = latex_ ? std::string("\\") + function_name(e.function_kind())
                                        : function_name(e.function_kind());
        return {name + "(" + (*this)(e.operand()) + ")", kAtom};
      }
      case ExprKind::Negate:
        return {"-" + (*this)(e.operand(), kProduct), kUnary};
    }
    return {"?", kAtom};
  }

  Fragment sum(const Expr& e) const {
    if (is_all_negative_sum(e)) return {"-(" + (*this)(negated_term(e)) + ")", kUnary};
    std::string s;
    bool first = true;
    for (const auto& t : e.operands()) {
      const bool negative = is_negative_term(t);
      const std::string body = (*this)(negative ? negated_term(t) : t, kProduct);
      if (first) {
        s = negative ? "-" + body : body;
      } else {
        s += (negative ? " - " : " + ") + body;
      }
      first = false;
    }
    return {s, kSum};
  }

  Fragment product(const Expr& e) const {
    const auto& ops = e.operands();
    std::size_t start = 0;
    std::string lead;
    bool negative = false;
    if (ops.front().is_constant()) {
      Rational c = ops.front().value();
      if (c < 0) {
        negative = true;
        c = -c;
      }
      if (c != 1) lead = wrap(constant(c), latex_ ? kAtom : kPower);
      start = 1;
    }
    std::vector<std::string> parts;
    if (!lead.empty()) parts.push_back(lead);
    for (std::size_t i = start; i < ops.size(); ++i) parts.push_back((*this)(ops[i], kPower));
    if (parts.empty()) parts.push_back("1");
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) s += product_separator();
      s += parts[i];
    }
    if (negative) return {"-" + s, kUnary};
    return {s, kProduct};
  }
};

// Display order of form terms: covector lists by (field ascending, order
// descending), then horizontal axes ascending.
bool display_before(const FormKey& a, const FormKey& b) {
  const std::size_t n = std::min(a.dpsi.size(), b.dpsi.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.dpsi[i].field != b.dpsi[i].field) return a.dpsi[i].field < b.dpsi[i].field;
    if (a.dpsi[i].index != b.dpsi[i].index) return a.dpsi[i].index > b.dpsi[i].index;
  }
  if (a.dpsi.size() != b.dpsi.size()) return a.dpsi.size() < b.dpsi.size();
  return a.dx < b.dx;
}

std::vector<std::pair<FormKey, Expr>> display_terms(const VForm& form) {
  std::vector<std::pair<FormKey, Expr>> terms(form.terms().begin(), form.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return display_before(a.first, b.first); });
  return terms;
}

std::string render_form(const VForm& form, bool latex) {
  if (form.is_zero()) return "0";
  const JetSpace& space = *form.space();
  const Renderer r(space, latex);
  const std::string wedge = latex ? " \\wedge " : " ∧ ";
  const std::string otimes = latex ? " \\otimes " : " ⊗ ";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : display_terms(form)) {
    const bool negative = is_negative_term(c) || is_all_negative_sum(c);
    const Expr magnitude = negative ? negated_term(c) : c;

    std::string horiz;
    for (std::size_t i = 0; i < key.dx.size(); ++i) {
      if (i > 0) horiz += wedge;
      horiz += "d" + space.coord_name(key.dx[i]);
    }
    if (horiz.empty()) horiz = "1";

    std::string body;
    if (key.dpsi.empty()) {
      body = r(magnitude, kProduct);
    } else {
      if (!magnitude.is_one()) body = r(magnitude, kProduct) + (latex ? "\\," : " ");
      for (std::size_t i = 0; i < key.dpsi.size(); ++i) {
        if (i > 0) body += wedge;
        body += r.covector(key.dpsi[i]);
      }
    }
    body += otimes + horiz;

    if (first) {
      out = negative ? "-" + body : body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string render_text(const Expr& e, const JetSpace& space) { return Renderer(space, false)(e); }

std::string render_latex(const Expr& e, const JetSpace& space) { return Renderer(space, true)(e); }

std::string render_text(const VForm& form) { return render_form(form, false); }

std::string render_latex(const VForm& form) { return render_form(form, true); }

nlohmann::ordered_json to_json(const VForm& form) {
  const JetSpace& space = *form.space();
  nlohmann::ordered_json j;
  j["bidegree"] = {form.horiz_degree(), form.contact_degree()};
  j["orders"] = {form.coeff_order(), form.contact_order()};
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [key, c] : display_terms(form)) {
    nlohmann::ordered_json t;
    auto dx = nlohmann::ordered_json::array();
    for (auto axis : key.dx) dx.push_back(axis + 1);
    auto dpsi = nlohmann::ordered_json::array();
    for (const auto& cov : key.dpsi)
      dpsi.push_back({space.field_name(cov.field), cov.index.counts()});
    t["dx"] = std::move(dx);
    t["dpsi"] = std::move(dpsi);
    t["coeff"] = render_text(c, space);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

std::string render(const Expr& e, const JetSpace& space, Format format) {
  switch (format) {
    case Format::Text: return render_text(e, space);
    case Format::Latex: return render_latex(e, space);
    case Format::Json: break;
  }
  throw UnsupportedFormat("expressions have no JSON rendering; render the enclosing form");
}

std::string render(const VForm& form, Format format) {
  switch (format) {
    case Format::Text: return render_text(form);
    case Format::Latex: return render_latex(form);
    case Format::Json: return to_json(form).dump();
  }
  throw UnsupportedFormat("unknown format");
}

}  // namespace jetvar
