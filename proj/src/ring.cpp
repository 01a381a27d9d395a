#include "cohfm/ring.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>

#include "cohfm/error.hpp"
#include "cohfm/matrix.hpp"

namespace cohfm {

// ---------------------------------------------------------------------------
// CohClass

CohClass::CohClass(RingModelPtr model) : model_(std::move(model)) {
  if (!model_) throw ModelError("null model");
  coeffs_.assign(model_->size(), Rat(0));
}

CohClass::CohClass(RingModelPtr model, std::vector<Rat> coeffs)
    : model_(std::move(model)), coeffs_(std::move(coeffs)) {
  if (!model_) throw ModelError("null model");
  if (coeffs_.size() != model_->size())
    throw ModelError("coefficient count does not match basis size of model " + model_->name());
}

Rat CohClass::coeff(std::string_view label) const { return coeffs_[model_->index_of(label)]; }

bool CohClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

CohClass CohClass::degree_part(int degree) const {
  std::vector<Rat> out(coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (model_->basis_element(i).degree == degree) out[i] = coeffs_[i];
  return CohClass(model_, std::move(out));
}

namespace {
void require_same_model(const CohClass& a, const CohClass& b, const char* op) {
  if (!a.valid() || !b.valid()) throw MapError(std::string(op) + ": null class");
  if (a.model() != b.model())
    throw MapError(std::string(op) + ": model mismatch (" + a.model()->name() + " vs " +
                   b.model()->name() + ")");
}
}  // namespace

CohClass operator+(const CohClass& a, const CohClass& b) {
  require_same_model(a, b, "add");
  std::vector<Rat> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return CohClass(a.model(), std::move(out));
}

CohClass operator-(const CohClass& a, const CohClass& b) {
  require_same_model(a, b, "subtract");
  std::vector<Rat> out(a.coeffs());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return CohClass(a.model(), std::move(out));
}

CohClass operator-(const CohClass& a) { return Rat(-1) * a; }

CohClass operator*(const Rat& s, const CohClass& a) {
  std::vector<Rat> out(a.coeffs());
  for (auto& c : out) c *= s;
  return CohClass(a.model(), std::move(out));
}

CohClass operator*(const CohClass& a, const Rat& s) { return s * a; }

bool operator==(const CohClass& a, const CohClass& b) {
  if (a.model() != b.model()) return false;
  if (!a.valid()) return true;
  return a.coeffs() == b.coeffs();
}

CohClass mul(const CohClass& x, const CohClass& y) {
  require_same_model(x, y, "mul");
  const RingModel& m = *x.model();
  std::vector<Rat> out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (y[j] == 0) continue;
      const Rat scale = x[i] * y[j];
      const std::vector<Rat>& prod = m.product(i, j);
      for (std::size_t k = 0; k < out.size(); ++k)
        if (prod[k] != 0) out[k] += scale * prod[k];
    }
  }
  return CohClass(x.model(), std::move(out));
}

Rat integrate(const CohClass& x) {
  if (!x.valid()) throw MapError("integrate: null class");
  return x[x.model()->point_index()];
}

std::string to_string(const CohClass& x) {
  if (!x.valid()) return "<null>";
  std::string out;
  for (std::size_t i = 0; i < x.model()->size(); ++i) {
    const Rat& c = x[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rat mag = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (mag != 1) out += rat_str(mag);
    out += "[" + x.model()->basis_element(i).label + "]";
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace {

struct Term {
  Rat coeff;
  std::string label;  // empty: multiple of the unit class
  std::size_t label_pos = 0;
};

// Core of the class-expression grammar, independent of any model so the
// model-file loader can reuse it before a model exists.
std::vector<Term> parse_terms(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto at_end = [&] {
    skip_ws();
    return i >= text.size();
  };
  auto parse_unsigned_digits = [&]() -> mpz_class {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected digits", start + 1);
    return mpz_class(std::string(text.substr(start, i - start)));
  };
  auto parse_rational = [&](int sign) -> Rat {
    mpz_class num = parse_unsigned_digits();
    mpz_class den = 1;
    skip_ws();
    if (i < text.size() && text[i] == '/') {
      ++i;
      skip_ws();
      std::size_t den_pos = i;
      den = parse_unsigned_digits();
      if (den == 0) throw ParseError("zero denominator", den_pos + 1);
    }
    Rat r(sign < 0 ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
  };
  auto parse_label = [&]() -> std::pair<std::string, std::size_t> {
    // caller consumed '['
    skip_ws();
    std::size_t start = i;
    while (i < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    if (i == start) throw ParseError("expected a basis label inside [ ]", start + 1);
    std::string label(text.substr(start, i - start));
    skip_ws();
    if (i >= text.size() || text[i] != ']') throw ParseError("expected ']'", i + 1);
    ++i;
    return {label, start};
  };

  if (at_end()) throw ParseError("empty expression", 1);
  bool first = true;
  while (!at_end()) {
    skip_ws();
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      // leading sign on the first term, binary operator afterwards
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
      if (i >= text.size()) throw ParseError("expected a term after sign", i + 1);
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", i + 1);
    }
    Term t{Rat(0), "", 0};
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      t.coeff = parse_rational(sign);
      have_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' after '*'", i + 1);
      }
    }
    if (i < text.size() && text[i] == '[') {
      ++i;
      auto [label, pos] = parse_label();
      t.label = label;
      t.label_pos = pos;
      if (!have_coeff) t.coeff = Rat(sign);
    } else if (!have_coeff) {
      throw ParseError("expected a rational or '[label]'", i + 1);
    }
    terms.push_back(std::move(t));
    first = false;
  }
  return terms;
}

}  // namespace

CohClass parse_class(std::string_view text, const RingModelPtr& model) {
  if (!model) throw ModelError("null model");
  std::vector<Rat> coeffs(model->size(), Rat(0));
  for (const Term& t : parse_terms(text)) {
    if (t.label.empty()) {
      coeffs[model->unit_index()] += t.coeff;
    } else {
      if (!model->has_label(t.label))
        throw ParseError("unknown basis label '" + t.label + "' in model " + model->name(),
                         t.label_pos + 1);
      coeffs[model->index_of(t.label)] += t.coeff;
    }
  }
  return CohClass(model, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// RingModel

std::size_t RingModel::index_of(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw ModelError("unknown basis label '" + std::string(label) + "' in model " + name_);
  return it->second;
}

bool RingModel::has_label(std::string_view label) const { return index_.count(label) != 0; }

CohClass RingModel::zero() const { return CohClass(shared_from_this()); }

CohClass RingModel::unit() const { return basis_class(unit_index_); }

CohClass RingModel::point_class() const { return basis_class(point_index_); }

CohClass RingModel::basis_class(std::size_t i) const {
  std::vector<Rat> c(size(), Rat(0));
  c[i] = 1;
  return CohClass(shared_from_this(), std::move(c));
}

CohClass RingModel::basis_class(std::string_view label) const {
  return basis_class(index_of(label));
}

RingModel::Builder& RingModel::Builder::add_basis(std::string label, int degree) {
  basis_.push_back({std::move(label), degree});
  return *this;
}

RingModel::Builder& RingModel::Builder::set_product(
    std::string_view a, std::string_view b, std::vector<std::pair<std::string, Rat>> terms) {
  products_.emplace_back(std::string(a), std::string(b), std::move(terms));
  return *this;
}

RingModelPtr RingModel::Builder::build() const {
  auto model = std::shared_ptr<RingModel>(new RingModel());
  RingModel& m = *model;
  m.name_ = name_;
  m.top_degree_ = top_degree_;
  m.basis_ = basis_;

  if (m.basis_.empty()) throw ModelError("model " + name_ + ": empty basis");
  if (top_degree_ < 0 || top_degree_ % 2 != 0)
    throw ModelError("model " + name_ + ": top degree must be a nonnegative even integer");
  for (std::size_t i = 0; i < m.basis_.size(); ++i) {
    const BasisElement& e = m.basis_[i];
    if (e.label.empty()) throw ModelError("model " + name_ + ": empty basis label");
    if (e.degree < 0 || e.degree > top_degree_ || e.degree % 2 != 0)
      throw ModelError("model " + name_ + ": basis element '" + e.label +
                       "' has degree outside {0, 2, ..., " + std::to_string(top_degree_) + "}");
    if (!m.index_.emplace(e.label, i).second)
      throw ModelError("model " + name_ + ": duplicate basis label '" + e.label + "'");
  }

  std::size_t units = 0, points = 0;
  for (std::size_t i = 0; i < m.basis_.size(); ++i) {
    if (m.basis_[i].degree == 0) {
      m.unit_index_ = i;
      ++units;
    }
    if (m.basis_[i].degree == top_degree_) {
      m.point_index_ = i;
      ++points;
    }
  }
  if (units != 1)
    throw ModelError("model " + name_ + ": expected exactly one degree-0 element, found " +
                     std::to_string(units));
  if (points != 1)
    throw ModelError("model " + name_ + ": expected exactly one top-degree element, found " +
                     std::to_string(points));

  const std::size_t n = m.basis_.size();
  m.table_.assign(n * n, std::vector<Rat>(n, Rat(0)));
  auto table_at = [&](std::size_t i, std::size_t j) -> std::vector<Rat>& {
    return m.table_[i * n + j];
  };

  // Unit row/column first; explicit product lines may not contradict it.
  for (std::size_t j = 0; j < n; ++j) {
    table_at(m.unit_index_, j)[j] = 1;
    table_at(j, m.unit_index_)[j] = 1;
  }

  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& [la, lb, terms] : products_) {
    const std::size_t i = m.index_of(la);
    const std::size_t j = m.index_of(lb);
    std::vector<Rat> value(n, Rat(0));
    for (const auto& [label, coeff] : terms) value[m.index_of(label)] += coeff;

    const int want_degree = m.basis_[i].degree + m.basis_[j].degree;
    for (std::size_t k = 0; k < n; ++k) {
      if (value[k] == 0) continue;
      if (want_degree > top_degree_)
        throw ModelError("model " + name_ + ": product " + la + "." + lb +
                         " exceeds the top degree but is nonzero");
      if (m.basis_[k].degree != want_degree)
        throw ModelError("model " + name_ + ": product " + la + "." + lb +
                         " contains '" + m.basis_[k].label + "' of wrong degree");
    }
    if (i == m.unit_index_ || j == m.unit_index_) {
      if (value != table_at(i, j))
        throw ModelError("model " + name_ + ": unit law violated by product line " + la + "." + lb);
      continue;
    }
    if (given[i][j])
      throw ModelError("model " + name_ + ": duplicate product line for " + la + "." + lb);
    given[i][j] = given[j][i] = true;
    table_at(i, j) = value;
    table_at(j, i) = std::move(value);
  }

  // Associativity on all basis triples.
  auto times = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
    std::vector<Rat> out(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        const Rat s = x[i] * y[j];
        const std::vector<Rat>& p = table_at(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (p[k] != 0) out[k] += s * p[k];
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rat> ei(n, Rat(0)), ek(n, Rat(0));
        ei[i] = 1;
        ek[k] = 1;
        if (times(table_at(i, j), ek) != times(ei, table_at(j, k)))
          throw ModelError("model " + name_ + ": associativity fails at (" + m.basis_[i].label +
                           ", " + m.basis_[j].label + ", " + m.basis_[k].label + ")");
      }

  // Poincare pairing must be nondegenerate in every degree.
  for (int d = 0; d <= top_degree_; d += 2) {
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.basis_[i].degree == d) left.push_back(i);
      if (m.basis_[i].degree == top_degree_ - d) right.push_back(i);
    }
    if (left.size() != right.size())
      throw ModelError("model " + name_ + ": poincare pairing degenerate in degree " +
                       std::to_string(d) + " (rank mismatch " + std::to_string(left.size()) +
                       " vs " + std::to_string(right.size()) + ")");
    if (left.empty()) continue;
    Matrix pairing(left.size(), right.size());
    for (std::size_t r = 0; r < left.size(); ++r)
      for (std::size_t c = 0; c < right.size(); ++c)
        pairing.at(r, c) = table_at(left[r], right[c])[m.point_index_];
    if (mat_rank(pairing) != left.size())
      throw ModelError("model " + name_ + ": poincare pairing degenerate in degree " +
                       std::to_string(d));
  }

  return model;
}

// ---------------------------------------------------------------------------
// Built-in models

namespace {

using Terms = std::vector<std::pair<std::string, Rat>>;

RingModelPtr make_V() {
  RingModel::Builder b("V", 6);
  b.add_basis("V", 0).add_basis("H", 2).add_basis("A", 2);
  b.add_basis("e", 4).add_basis("l", 4).add_basis("pt", 6);
  b.set_product("H", "H", Terms{{"e", 16}, {"l", 16}});
  b.set_product("H", "A", Terms{{"l", 16}});
  b.set_product("H", "l", Terms{{"pt", 1}});
  b.set_product("A", "e", Terms{{"pt", 1}});
  // H.e = A.A = A.l = 0
  return b.build();
}

RingModelPtr make_Vdual() {
  RingModel::Builder b("Vdual", 6);
  b.add_basis("Vd", 0).add_basis("Hd", 2).add_basis("Ad", 2);
  b.add_basis("ed", 4).add_basis("Ed", 4).add_basis("pt", 6);
  b.set_product("Hd", "Hd", Terms{{"ed", 16}, {"Ed", 128}});
  b.set_product("Hd", "Ad", Terms{{"Ed", 16}});
  b.set_product("Hd", "Ed", Terms{{"pt", 1}});
  b.set_product("Ad", "ed", Terms{{"pt", 1}});
  // Hd.ed = Ad.Ad = Ad.Ed = 0
  return b.build();
}

RingModelPtr make_S() {
  RingModel::Builder b("S", 4);
  b.add_basis("S", 0).add_basis("C0", 2).add_basis("F", 2).add_basis("pt", 4);
  b.set_product("C0", "F", Terms{{"pt", 1}});
  // C0.C0 = F.F = 0
  return b.build();
}

RingModelPtr make_ExE() {
  RingModel::Builder b("ExE", 4);
  b.add_basis("ExE", 0).add_basis("E", 2).add_basis("F", 2).add_basis("D", 2);
  b.add_basis("pt", 4);
  b.set_product("E", "F", Terms{{"pt", 1}});
  b.set_product("E", "D", Terms{{"pt", 1}});
  b.set_product("F", "D", Terms{{"pt", 1}});
  // E.E = F.F = D.D = 0
  return b.build();
}

}  // namespace

RingModelPtr builtin_model(std::string_view name) {
  static const RingModelPtr v = make_V();
  static const RingModelPtr vdual = make_Vdual();
  static const RingModelPtr s = make_S();
  static const RingModelPtr exe = make_ExE();
  if (name == "V") return v;
  if (name == "Vdual") return vdual;
  if (name == "S") return s;
  if (name == "ExE") return exe;
  throw ModelError("unknown built-in model '" + std::string(name) +
                   "' (expected V, Vdual, S or ExE)");
}

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names{"V", "Vdual", "S", "ExE"};
  return names;
}

// ---------------------------------------------------------------------------
// Model files

RingModelPtr parse_model_text(std::string_view text, std::string_view source_name) {
  std::string name;
  int top_degree = -1;
  bool saw_model = false;
  std::vector<std::pair<std::string, int>> basis;
  std::vector<std::tuple<std::string, std::string, std::string, std::size_t>> muls;

  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ModelError(std::string(source_name) + ":" + std::to_string(line_no) + ": " + msg);
  };

  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::string keyword;
    if (!(in >> keyword)) continue;
    if (keyword == "model") {
      std::string topdeg_kw;
      if (saw_model) fail("duplicate model header");
      if (!(in >> name >> topdeg_kw >> top_degree) || topdeg_kw != "topdeg")
        fail("expected 'model <name> topdeg <n>'");
      saw_model = true;
    } else if (keyword == "basis") {
      std::string label;
      int degree;
      if (!(in >> label >> degree)) fail("expected 'basis <label> <degree>'");
      basis.emplace_back(label, degree);
    } else if (keyword == "mul") {
      std::string la, lb, eq;
      if (!(in >> la >> lb >> eq) || eq != "=") fail("expected 'mul <labelA> <labelB> = <expr>'");
      std::string rhs;
      std::getline(in, rhs);
      muls.emplace_back(la, lb, rhs, line_no);
    } else {
      fail("unknown directive '" + keyword + "'");
    }
  }
  if (!saw_model)
    throw ModelError(std::string(source_name) + ": missing 'model <name> topdeg <n>' header");

  RingModel::Builder b(name, top_degree);
  for (const auto& [label, degree] : basis) b.add_basis(label, degree);
  for (const auto& [la, lb, rhs, line] : muls) {
    std::vector<std::pair<std::string, Rat>> terms;
    try {
      for (const Term& t : parse_terms(rhs)) {
        if (t.label.empty())
          throw ModelError("bare rational not allowed in a product (write a unit-label term)");
        terms.emplace_back(t.label, t.coeff);
      }
    } catch (const Error& e) {
      throw ModelError(std::string(source_name) + ":" + std::to_string(line) + ": in mul " + la +
                       " " + lb + ": " + e.what());
    }
    b.set_product(la, lb, std::move(terms));
  }
  return b.build();
}

RingModelPtr load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str(), path);
}

}  // namespace cohfm
