#include "jetvar/problem.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "jetvar/calculus.hpp"
#include "jetvar/error.hpp"
#include "jetvar/parse.hpp"

namespace jetvar {

VForm ProblemFile::lagrangian() const { return VForm::lagrangian(space, lagrangian_density, order); }

namespace {

// Large enough for any Lagrangian a problem file can reasonably hold; used
// to parse before the declared order is checked.
constexpr int kProbeOrder = 64;

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw SyntaxError(line, message, true);
}

std::string at_line(std::size_t line, const std::string& message) {
  return "line " + std::to_string(line) + ": " + message;
}

long parse_integer(const Line& l, long min_value) {
  const auto w = words(l.rest);
  if (w.size() != 1) fail(l.number, "'" + l.keyword + "' takes one integer");
  long v = 0;
  const auto [ptr, ec] = std::from_chars(w[0].data(), w[0].data() + w[0].size(), v);
  if (ec != std::errc() || ptr != w[0].data() + w[0].size())
    fail(l.number, "'" + l.keyword + "' expects an integer, got '" + w[0] + "'");
  if (v < min_value)
    fail(l.number, "'" + l.keyword + "' must be at least " + std::to_string(min_value));
  return v;
}

double parse_positive_double(const Line& l) {
  const auto w = words(l.rest);
  if (w.size() != 1) fail(l.number, "'" + l.keyword + "' takes one number");
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(w[0], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != w[0].size() || !std::isfinite(v) || v <= 0.0)
    fail(l.number, "'" + l.keyword + "' expects a positive number, got '" + w[0] + "'");
  return v;
}

Expr parse_at_line(const std::string& text, const JetSpace& space, std::size_t line) {
  try {
    return parse_expr(text, space);
  } catch (const SyntaxError& e) {
    fail(line, e.what());
  } catch (const UnknownIdentifier& e) {
    fail(line, e.what());
  } catch (const OrderExceeded& e) {
    fail(line, e.what());
  }
}

const Line* single(const std::vector<Line>& lines, const std::string& keyword) {
  const Line* found = nullptr;
  for (const auto& l : lines) {
    if (l.keyword != keyword) continue;
    if (found) fail(l.number, "'" + keyword + "' given more than once");
    found = &l;
  }
  return found;
}

std::vector<std::string> default_coords(std::size_t p) {
  if (p <= 3) {
    const char* names[] = {"x", "y", "z"};
    return {names, names + p};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= p; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

void parse_assignments(const std::vector<Line>& lines, const std::string& keyword,
                       const JetSpace& space, std::map<std::size_t, Expr>& out) {
  for (const auto& l : lines) {
    if (l.keyword != keyword) continue;
    const auto eq = l.rest.find('=');
    if (eq == std::string::npos) fail(l.number, "expected '" + keyword + " <field> = <expr>'");
    const std::string name = trim(l.rest.substr(0, eq));
    const auto field = space.find_field(name);
    if (!field) fail(l.number, "unknown field '" + name + "'");
    if (out.count(*field)) fail(l.number, keyword + " for '" + name + "' given more than once");
    const Expr e = parse_at_line(l.rest.substr(eq + 1), space, l.number);
    if (has_jet_variables(e))
      fail(l.number, keyword + " must be an expression in the coordinates only");
    out.emplace(*field, e);
  }
}

}  // namespace

ProblemFile parse_problem_file(std::string_view text) {
  static const std::vector<std::string> known = {"base",    "coords",    "field", "order",
                                                 "lagrangian", "section", "variation", "grid",
                                                 "fd_step", "seed"};
  std::vector<Line> lines;
  std::size_t number = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string body = trim(raw);
    if (body.empty()) continue;
    const auto space_pos = body.find_first_of(" \t");
    Line l{number, body.substr(0, space_pos),
           space_pos == std::string::npos ? std::string() : trim(body.substr(space_pos))};
    if (std::find(known.begin(), known.end(), l.keyword) == known.end())
      fail(number, "unknown directive '" + l.keyword + "'");
    if (l.rest.empty()) fail(number, "'" + l.keyword + "' needs an argument");
    lines.push_back(std::move(l));
  }
  const std::size_t last_line = number == 0 ? 1 : number;

  // Dimensions and names.
  const Line* base_line = single(lines, "base");
  const Line* coords_line = single(lines, "coords");
  std::vector<std::string> coords;
  if (coords_line) coords = words(coords_line->rest);
  if (base_line) {
    const auto p = static_cast<std::size_t>(parse_integer(*base_line, 1));
    if (!coords_line) coords = default_coords(p);
    else if (coords.size() != p)
      fail(coords_line->number, "expected " + std::to_string(p) + " coordinate names, got " +
                                    std::to_string(coords.size()));
  } else if (!coords_line) {
    fail(last_line, "missing 'base' or 'coords'");
  }

  // Every name with the line that declared it, for line-accurate duplicates.
  std::vector<std::pair<std::string, std::size_t>> declared;
  const std::size_t coords_at = coords_line ? coords_line->number : base_line->number;
  for (const auto& c : coords) declared.emplace_back(c, coords_at);
  std::vector<std::string> fields;
  for (const auto& l : lines)
    if (l.keyword == "field")
      for (auto& w : words(l.rest)) {
        declared.emplace_back(w, l.number);
        fields.push_back(std::move(w));
      }
  if (fields.empty()) fail(last_line, "missing 'field'");
  for (std::size_t i = 0; i < declared.size(); ++i) {
    const auto& [name, at] = declared[i];
    if (is_reserved_name(name))
      throw DuplicateName(at_line(at, "'" + name + "' is a function name"));
    for (std::size_t j = 0; j < i; ++j)
      if (declared[j].first == name)
        throw DuplicateName(at_line(at, "'" + name + "' is already declared on line " +
                                            std::to_string(declared[j].second)));
  }

  const Line* order_line = single(lines, "order");
  if (!order_line) fail(last_line, "missing 'order'");
  const int order = static_cast<int>(parse_integer(*order_line, 0));

  JetSpacePtr probe;
  ProblemFile pf;
  try {
    probe = JetSpace::make(coords, fields, kProbeOrder);
    pf.space = JetSpace::make(coords, fields, order);
  } catch (const std::invalid_argument& e) {
    fail(coords_at, e.what());
  }
  pf.order = order;

  const Line* lag_line = single(lines, "lagrangian");
  if (!lag_line) fail(last_line, "missing 'lagrangian'");
  pf.lagrangian_text = lag_line->rest;
  const Expr probed = parse_at_line(lag_line->rest, *probe, lag_line->number);
  if (const int found = jet_order(probed); found > order)
    throw OrderMismatch(at_line(lag_line->number, "the Lagrangian has order " +
                                                      std::to_string(found) +
                                                      " but 'order' declares " +
                                                      std::to_string(order)));
  pf.lagrangian_density = canonicalize(parse_at_line(lag_line->rest, *pf.space, lag_line->number));

  parse_assignments(lines, "section", *pf.space, pf.sections);
  parse_assignments(lines, "variation", *pf.space, pf.variations);

  if (const Line* l = single(lines, "grid")) pf.grid = static_cast<std::size_t>(parse_integer(*l, 4));
  if (const Line* l = single(lines, "fd_step")) pf.fd_step = parse_positive_double(*l);
  if (const Line* l = single(lines, "seed")) pf.seed = static_cast<std::uint64_t>(parse_integer(*l, 0));
  return pf;
}

}  // namespace jetvar
