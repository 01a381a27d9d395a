#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cohfm/rational.hpp"

namespace cohfm {

struct BasisElement {
  std::string label;
  int degree = 0;  // real cohomological degree, even
};

class RingModel;
using RingModelPtr = std::shared_ptr<const RingModel>;

/// Exact-rational cohomology class: one coefficient per basis element of a
/// fixed ring model. Immutable value type; classes over different models
/// never mix (mul/apply raise MapError).
class CohClass {
public:
  CohClass() = default;  // null class; only assignment and valid() are legal
  explicit CohClass(RingModelPtr model);
  CohClass(RingModelPtr model, std::vector<Rat> coeffs);

  bool valid() const { return model_ != nullptr; }
  const RingModelPtr& model() const { return model_; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& operator[](std::size_t i) const { return coeffs_[i]; }
  Rat coeff(std::string_view label) const;

  bool is_zero() const;
  // The part of the class lying in one cohomological degree.
  CohClass degree_part(int degree) const;

private:
  RingModelPtr model_;
  std::vector<Rat> coeffs_;
};

CohClass operator+(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a, const CohClass& b);
CohClass operator-(const CohClass& a);
CohClass operator*(const Rat& s, const CohClass& a);
CohClass operator*(const CohClass& a, const Rat& s);
bool operator==(const CohClass& a, const CohClass& b);

// Bilinear extension of the model multiplication table.
CohClass mul(const CohClass& x, const CohClass& y);
// Coefficient of the point class; mul + integrate realize intersection numbers.
Rat integrate(const CohClass& x);

// Canonical form: basis order, "p/q" coefficients, unit magnitudes omitted.
std::string to_string(const CohClass& x);

// Grammar:
//   expr   := term (("+"|"-") term)*
//   term   := rational? "*"? "[" label "]" | rational
//   rational := integer ("/" positive-integer)?
// A bare rational is a multiple of the unit class. Whitespace insignificant.
CohClass parse_class(std::string_view text, const RingModelPtr& model);

/// Finite-rank graded commutative ring: labeled basis, full multiplication
/// table, distinguished unit (degree 0) and point class (top degree).
/// Instances are immutable; share them freely across threads.
class RingModel : public std::enable_shared_from_this<RingModel> {
public:
  const std::string& name() const { return name_; }
  int top_degree() const { return top_degree_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& basis_element(std::size_t i) const { return basis_[i]; }
  std::size_t unit_index() const { return unit_index_; }
  std::size_t point_index() const { return point_index_; }

  // Index of a label; throws ModelError("unknown basis label ...") if absent.
  std::size_t index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  // Coefficients of basis_i * basis_j.
  const std::vector<Rat>& product(std::size_t i, std::size_t j) const {
    return table_[i * basis_.size() + j];
  }

  CohClass zero() const;
  CohClass unit() const;
  CohClass point_class() const;
  CohClass basis_class(std::size_t i) const;
  CohClass basis_class(std::string_view label) const;

  /// Assembles and validates a model. Products are given once per unordered
  /// pair as (label, coefficient-terms); omitted pairs are zero and the unit
  /// row is filled in automatically.
  class Builder {
  public:
    Builder(std::string name, int top_degree) : name_(std::move(name)), top_degree_(top_degree) {}
    Builder& add_basis(std::string label, int degree);
    Builder& set_product(std::string_view a, std::string_view b,
                         std::vector<std::pair<std::string, Rat>> terms);
    // Runs the full invariant check (grading, unit law, commutativity by
    // construction, associativity on all triples, Poincare nondegeneracy).
    // Throws ModelError naming the violated identity.
    RingModelPtr build() const;

  private:
    std::string name_;
    int top_degree_;
    std::vector<BasisElement> basis_;
    std::vector<std::tuple<std::string, std::string, std::vector<std::pair<std::string, Rat>>>>
        products_;
  };

private:
  RingModel() = default;
  friend class Builder;

  std::string name_;
  int top_degree_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<Rat>> table_;  // row-major (i, j) -> coefficient vector
  std::size_t unit_index_ = 0;
  std::size_t point_index_ = 0;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// The four built-in models:
//   "V"     threefold with H.H = 16e+16l, H.A = 16l, H.l = A.e = pt
//   "Vdual" its dual: Hd.Hd = 16ed+128Ed, Hd.Ad = 16Ed, Hd.Ed = Ad.ed = pt
//   "S"     normalized translation scroll: C0.F = pt, C0.C0 = F.F = 0
//   "ExE"   product of elliptic curves: E.F = E.D = F.D = pt, squares 0
// Throws ModelError for any other name.
RingModelPtr builtin_model(std::string_view name);
const std::vector<std::string>& builtin_model_names();

// Line-oriented model files:
//   model <name> topdeg <n>
//   basis <label> <degree>
//   mul <labelA> <labelB> = <expr>      (one line per unordered pair; absent = 0)
// '#' starts a comment. The result passes the same validation as built-ins.
RingModelPtr parse_model_text(std::string_view text, std::string_view source_name = "<input>");
RingModelPtr load_model_file(const std::string& path);

}  // namespace cohfm
