#include "jetvar/vform.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "jetvar/calculus.hpp"
#include "jetvar/error.hpp"

namespace jetvar {

std::strong_ordering FormKey::operator<=>(const FormKey& other) const {
  if (auto c = dx <=> other.dx; c != 0) return c;
  return dpsi <=> other.dpsi;
}

namespace {

// Insertion sort recording the permutation parity; returns 0 on a repeat.
template <typename T>
int sort_with_sign(std::vector<T>& items) {
  int sign = 1;
  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = i; j > 0; --j) {
      const auto c = items[j - 1] <=> items[j];
      if (c == 0) return 0;
      if (c < 0) break;
      std::swap(items[j - 1], items[j]);
      sign = -sign;
    }
  }
  return sign;
}

void check_same_space(const VForm& a, const VForm& b) {
  if (a.space() != b.space() &&
      (a.space()->p() != b.space()->p() || a.space()->q() != b.space()->q()))
    throw DimensionMismatch("forms live on different jet spaces");
}

}  // namespace

VForm::VForm(JetSpacePtr space, int horiz_degree, int contact_degree, int coeff_order,
             int contact_order)
    : space_(std::move(space)),
      horiz_degree_(horiz_degree),
      contact_degree_(contact_degree),
      coeff_order_(coeff_order),
      contact_order_(contact_order) {
  if (!space_) throw std::invalid_argument("form needs a jet space");
  if (horiz_degree_ < 0 || contact_degree_ < 0 || coeff_order_ < 0 || contact_order_ < 0)
    throw std::invalid_argument("form degrees and orders must be non-negative");
}

VForm VForm::function(JetSpacePtr space, const Expr& f, int coeff_order) {
  VForm out(std::move(space), 0, 0, coeff_order, 0);
  out.add_term({}, {}, f);
  return out;
}

VForm VForm::lagrangian(JetSpacePtr space, const Expr& density, int coeff_order) {
  const std::size_t p = space->p();
  VForm out(std::move(space), static_cast<int>(p), 0, coeff_order, 0);
  std::vector<std::size_t> vol(p);
  for (std::size_t i = 0; i < p; ++i) vol[i] = i;
  out.add_term(std::move(vol), {}, density);
  return out;
}

Expr VForm::coefficient(const FormKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Expr() : it->second;
}

void VForm::raise_orders_for(const FormKey& key, const Expr& coeff) {
  coeff_order_ = std::max(coeff_order_, jet_order(coeff));
  for (const auto& c : key.dpsi) contact_order_ = std::max(contact_order_, c.index.order());
}

void VForm::add_term(std::vector<std::size_t> dx, std::vector<Covector> dpsi, const Expr& coeff) {
  if (dx.size() != static_cast<std::size_t>(horiz_degree_) ||
      dpsi.size() != static_cast<std::size_t>(contact_degree_))
    throw BidegreeMismatch("term of bidegree (" + std::to_string(dx.size()) + "," +
                           std::to_string(dpsi.size()) + ") added to a form of bidegree (" +
                           std::to_string(horiz_degree_) + "," +
                           std::to_string(contact_degree_) + ")");
  for (auto axis : dx)
    if (axis >= space_->p()) throw std::out_of_range("horizontal axis out of range");
  for (const auto& c : dpsi) {
    if (c.field >= space_->q()) throw std::out_of_range("field index out of range");
    if (c.index.dim() != space_->p()) throw DimensionMismatch("covector multi-index dimension");
  }
  const int sign = sort_with_sign(dx) * sort_with_sign(dpsi);
  if (sign == 0) return;
  Expr c = canonicalize(sign > 0 ? coeff : -coeff);
  if (c.is_zero()) return;
  FormKey key{std::move(dx), std::move(dpsi)};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    raise_orders_for(key, c);
    terms_.emplace(std::move(key), std::move(c));
    return;
  }
  Expr merged = canonicalize(it->second + c);
  if (merged.is_zero()) {
    terms_.erase(it);
  } else {
    raise_orders_for(key, merged);
    it->second = std::move(merged);
  }
}

VForm& VForm::operator+=(const VForm& other) {
  check_same_space(*this, other);
  if (other.horiz_degree_ != horiz_degree_ || other.contact_degree_ != contact_degree_)
    throw BidegreeMismatch("adding forms of different bidegree");
  coeff_order_ = std::max(coeff_order_, other.coeff_order_);
  contact_order_ = std::max(contact_order_, other.contact_order_);
  for (const auto& [key, c] : other.terms_) add_term(key.dx, key.dpsi, c);
  return *this;
}

VForm& VForm::operator-=(const VForm& other) { return *this += Expr(-1) * other; }

VForm operator*(const Expr& scalar, const VForm& form) {
  VForm out(form.space_, form.horiz_degree_, form.contact_degree_, form.coeff_order_,
            form.contact_order_);
  for (const auto& [key, c] : form.terms_) out.add_term(key.dx, key.dpsi, scalar * c);
  return out;
}

VForm VForm::with_minimal_orders() const {
  VForm out(space_, horiz_degree_, contact_degree_);
  for (const auto& [key, c] : terms_) out.add_term(key.dx, key.dpsi, c);
  return out;
}

VForm wedge(const VForm& a, const VForm& b) {
  check_same_space(a, b);
  VForm out(a.space(), a.horiz_degree() + b.horiz_degree(),
            a.contact_degree() + b.contact_degree(), std::max(a.coeff_order(), b.coeff_order()),
            std::max(a.contact_order(), b.contact_order()));
  if (out.horiz_degree() > static_cast<int>(a.space()->p())) return out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      auto dx = ka.dx;
      dx.insert(dx.end(), kb.dx.begin(), kb.dx.end());
      auto dpsi = ka.dpsi;
      dpsi.insert(dpsi.end(), kb.dpsi.begin(), kb.dpsi.end());
      out.add_term(std::move(dx), std::move(dpsi), ca * cb);
    }
  }
  return out;
}

VForm contract(const FieldCoefficients& field, const VForm& form) {
  if (form.contact_degree() == 0) throw ZeroContactDegree("contraction needs a contact covector");
  VForm out(form.space(), form.horiz_degree(), form.contact_degree() - 1, form.coeff_order(),
            form.contact_order());
  for (const auto& [key, c] : form.terms()) {
    for (std::size_t k = 0; k < key.dpsi.size(); ++k) {
      auto it = field.find(key.dpsi[k]);
      if (it == field.end()) continue;
      auto rest = key.dpsi;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      const Expr term = k % 2 == 0 ? it->second * c : -(it->second * c);
      out.add_term(key.dx, std::move(rest), term);
    }
  }
  return out;
}

VForm order_lift(const VForm& form, int coeff_order, int contact_order) {
  if (coeff_order < form.coeff_order() || contact_order < form.contact_order())
    throw OrderLowering("order lift to (" + std::to_string(coeff_order) + "," +
                        std::to_string(contact_order) + ") below current (" +
                        std::to_string(form.coeff_order()) + "," +
                        std::to_string(form.contact_order()) + ")");
  VForm out(form.space(), form.horiz_degree(), form.contact_degree(), coeff_order, contact_order);
  for (const auto& [key, c] : form.terms()) out.add_term(key.dx, key.dpsi, c);
  return out;
}

VForm pull_back_section(const VForm& form, const SectionSym& section) {
  VForm out(form.space(), form.horiz_degree(), form.contact_degree(), 0, form.contact_order());
  for (const auto& [key, c] : form.terms()) out.add_term(key.dx, key.dpsi, subst_jets(c, section));
  return out;
}

VForm base_exterior_d(const VForm& form) {
  VForm out(form.space(), form.horiz_degree() + 1, form.contact_degree(), 0,
            form.contact_order());
  if (out.horiz_degree() > static_cast<int>(form.space()->p())) {
    for (const auto& [key, c] : form.terms())
      if (has_jet_variables(c))
        throw JetVariablePresent("base exterior differential of a jet-dependent coefficient");
    return out;
  }
  for (const auto& [key, c] : form.terms()) {
    if (has_jet_variables(c))
      throw JetVariablePresent("base exterior differential of a jet-dependent coefficient");
    for (std::size_t axis = 0; axis < form.space()->p(); ++axis) {
      Expr d = partial_base(c, axis);
      if (d.is_zero()) continue;
      std::vector<std::size_t> dx{axis};
      dx.insert(dx.end(), key.dx.begin(), key.dx.end());
      out.add_term(std::move(dx), key.dpsi, d);
    }
  }
  return out;
}

bool vform_eq(const VForm& a, const VForm& b) {
  check_same_space(a, b);
  if (a.horiz_degree() != b.horiz_degree() || a.contact_degree() != b.contact_degree())
    return a.is_zero() && b.is_zero();
  const int s = std::max(a.coeff_order(), b.coeff_order());
  const int r = std::max(a.contact_order(), b.contact_order());
  const VForm la = order_lift(a, s, r);
  const VForm lb = order_lift(b, s, r);
  std::set<FormKey> keys;
  for (const auto& [k, c] : la.terms()) keys.insert(k);
  for (const auto& [k, c] : lb.terms()) keys.insert(k);
  return std::all_of(keys.begin(), keys.end(), [&](const FormKey& k) {
    return equivalent(la.coefficient(k), lb.coefficient(k));
  });
}

HorizontalBasis volume_without(std::size_t p, std::size_t axis) {
  HorizontalBasis out{axis % 2 == 0 ? 1 : -1, {}};
  for (std::size_t i = 0; i < p; ++i)
    if (i != axis) out.axes.push_back(i);
  return out;
}

}  // namespace jetvar
