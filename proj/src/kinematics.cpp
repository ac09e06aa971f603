#include "ukin/kinematics.hpp"

#include <sstream>

namespace ukin {

std::string basis_mode_name(BasisMode m) { return m == BasisMode::DeltaN ? "delta-n" : "b-gamma"; }

BasisMode parse_basis_mode(const std::string &name) {
  if (name == "delta-n")
    return BasisMode::DeltaN;
  if (name == "b-gamma")
    return BasisMode::BGamma;
  throw std::invalid_argument("unknown basis '" + name + "' (expected delta-n or b-gamma)");
}

Format parse_format(const std::string &name) {
  if (name == "text")
    return Format::Text;
  if (name == "latex")
    return Format::Latex;
  if (name == "json")
    return Format::Json;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, latex or json)");
}

PiScalar KinematicTable::coeff(const AreaIndex &left, const AreaIndex &right) const {
  auto it = entries.find({left, right});
  return it == entries.end() ? PiScalar() : it->second;
}

bool KinematicTable::is_symmetric() const {
  for (const auto &[key, c] : entries)
    if (coeff(key.second, key.first) != c)
      return false;
  return true;
}

// ---------------------------------------------------------------- products

ProductTable::ProductTable(const DualAlgebra &alg, BasisMode mode)
    : alg_(alg), mode_(mode), basis_(mode == BasisMode::DeltaN ? dn_basis(alg.n()) : bg_basis(alg.n())) {
  for (const auto &idx : basis_)
    duals_.emplace(idx, DualElement::from_coords(alg.n(), {{idx, Rational(1)}}));
}

const DualElement &ProductTable::dual(const AreaIndex &idx) const {
  auto it = duals_.find(idx);
  if (it == duals_.end())
    throw InvalidIndex(idx.to_string() + " is not in the " + basis_mode_name(mode_) + " basis for n=" +
                       std::to_string(alg_.n()));
  return it->second;
}

const DualElement &ProductTable::product(const AreaIndex &a, const AreaIndex &b) const {
  const KinematicTable::Key key{a, b};
  if (auto it = products_.find(key); it != products_.end())
    return it->second;
  return products_.emplace(key, alg_.product(dual(a), dual(b))).first->second;
}

std::map<KinematicTable::Key, DualElement> product_table(const DualAlgebra &alg, int d1, int d2,
                                                         BasisMode mode) {
  const int n = alg.n();
  if (d1 < 0 || d2 < 0 || d1 + d2 > 2 * n - 1)
    throw std::invalid_argument("product_table: need 0 <= d1, d2 and d1 + d2 <= 2n-1");
  const ProductTable products(alg, mode);
  std::map<KinematicTable::Key, DualElement> out;
  for (const auto &a : products.basis())
    for (const auto &b : products.basis())
      if (a.k == d1 && b.k == d2)
        out.emplace(KinematicTable::Key{a, b}, products.product(a, b));
  return out;
}

PiScalar pair_with_primal(int n, const DualElement &x, const AreaIndex &primal) {
  require_valid(n, primal);
  Coords coords;
  if (primal.family == Family::Delta || primal.family == Family::N)
    coords.emplace(primal, Rational(1));
  else
    coords = primal_dn_from_bg(n, primal);
  PiScalar total;
  for (const auto &[idx, c] : coords)
    total += x.coeff(idx) * PiScalar(c);
  return total;
}

// ---------------------------------------------------------------- formulas

KinematicTable local_formula(const ProductTable &products, const AreaIndex &target) {
  const int n = products.algebra().n();
  require_valid(n, target);
  KinematicTable table;
  table.n = n;
  table.target = target;
  table.basis = products.mode();
  for (const auto &a : products.basis()) {
    if (a.k > target.k)
      break;
    for (const auto &b : products.basis()) {
      if (a.k + b.k != target.k)
        continue;
      PiScalar c = pair_with_primal(n, products.product(a, b), target);
      if (!c.is_zero())
        table.entries.emplace(KinematicTable::Key{a, b}, std::move(c));
    }
  }
  return table;
}

KinematicTable local_formula(const DualAlgebra &alg, const AreaIndex &target, BasisMode mode) {
  return local_formula(ProductTable(alg, mode), target);
}

std::vector<KinematicTable> full_table(const DualAlgebra &alg, BasisMode mode) {
  const ProductTable products(alg, mode);
  std::vector<KinematicTable> out;
  for (const auto &target : products.basis())
    out.push_back(local_formula(products, target));
  return out;
}

KinematicTable global_formula(const DualAlgebra &alg, int k, int q) {
  const AreaIndex target{Family::Delta, k, q};
  require_valid(alg.n(), target);
  KinematicTable table = local_formula(alg, target, BasisMode::DeltaN);
  table.kind = FormulaKind::Global;
  std::erase_if(table.entries, [](const auto &kv) {
    return kv.first.first.family == Family::N || kv.first.second.family == Family::N;
  });
  return table;
}

KinematicTable semilocal_formula(const DualAlgebra &alg, const AreaIndex &target) {
  if (target.family != Family::Delta && target.family != Family::N)
    throw InvalidIndex("semi-local formulas take a Delta or N target, got " + target.to_string());
  KinematicTable table = local_formula(alg, target, BasisMode::DeltaN);
  table.kind = FormulaKind::SemiLocal;
  std::erase_if(table.entries, [](const auto &kv) { return kv.first.second.family == Family::N; });
  return table;
}

// ---------------------------------------------------------------- rendering

namespace {

// Slots that have been globalized print as mu_{k,q}.
bool left_is_mu(const KinematicTable &t) { return t.kind == FormulaKind::Global; }
bool right_is_mu(const KinematicTable &t) { return t.kind != FormulaKind::Local; }

std::string slot_text(const AreaIndex &idx, bool mu) {
  return mu ? "mu:" + std::to_string(idx.k) + "," + std::to_string(idx.q) : idx.to_string();
}

std::string slot_latex(const AreaIndex &idx, bool mu) {
  return mu ? "\\mu_{" + std::to_string(idx.k) + "," + std::to_string(idx.q) + "}" : idx.to_latex();
}

nlohmann::ordered_json slot_json(const AreaIndex &idx, bool mu) {
  if (!mu)
    return idx.to_json();
  return nlohmann::ordered_json{{"family", "mu"}, {"k", idx.k}, {"q", idx.q}};
}

std::string head_text(const KinematicTable &t) {
  switch (t.kind) {
  case FormulaKind::Local: return "A(" + t.target.to_string() + ")";
  case FormulaKind::SemiLocal: return "abar(" + t.target.to_string() + ")";
  case FormulaKind::Global: return "a(" + slot_text(t.target, true) + ")";
  }
  return {};
}

std::string head_latex(const KinematicTable &t) {
  switch (t.kind) {
  case FormulaKind::Local: return "A(" + t.target.to_latex() + ")";
  case FormulaKind::SemiLocal: return "\\bar a(" + t.target.to_latex() + ")";
  case FormulaKind::Global: return "a(" + slot_latex(t.target, true) + ")";
  }
  return {};
}

std::string kind_name(FormulaKind k) {
  switch (k) {
  case FormulaKind::Local: return "local";
  case FormulaKind::SemiLocal: return "semilocal";
  case FormulaKind::Global: return "global";
  }
  return {};
}

std::string emit_text(const KinematicTable &t) {
  if (t.entries.empty())
    return "0";
  std::ostringstream os;
  os << head_text(t) << " [n=" << t.n << ", " << basis_mode_name(t.basis) << "]\n";
  for (const auto &[key, c] : t.entries)
    os << "  " << slot_text(key.first, left_is_mu(t)) << " (x) " << slot_text(key.second, right_is_mu(t))
       << " : " << c.to_text() << "\n";
  return os.str();
}

// One summand of the aligned LaTeX display: sign separate from the body.
struct LatexTerm {
  bool negative = false;
  std::string body;
};

LatexTerm latex_term(const PiScalar &c, const std::string &pairs, bool grouped) {
  LatexTerm term;
  std::string coeff;
  if (c.is_monomial()) {
    const auto &[e, r] = *c.terms().begin();
    term.negative = r.sign() < 0;
    coeff = latex_pi_monomial(term.negative ? -r : r, e);
    if (coeff == "1")
      coeff.clear();
  } else {
    coeff = c.to_latex();
  }
  const std::string wrapped = grouped ? "\\left(" + pairs + "\\right)" : pairs;
  term.body = coeff.empty() ? wrapped : coeff + " " + wrapped;
  return term;
}

std::string emit_latex(const KinematicTable &t) {
  if (t.entries.empty())
    return "0";
  const bool lmu = left_is_mu(t), rmu = right_is_mu(t);
  auto pair_latex = [&](const AreaIndex &a, const AreaIndex &b) {
    return slot_latex(a, lmu) + "\\otimes " + slot_latex(b, rmu);
  };

  std::vector<LatexTerm> terms;
  for (const auto &[key, c] : t.entries) {
    const auto &[a, b] = key;
    const bool swappable = lmu == rmu;
    if (swappable && b < a && t.coeff(b, a) == c)
      continue; // printed together with its mirror
    if (swappable && a != b && t.coeff(b, a) == c)
      terms.push_back(latex_term(c, pair_latex(a, b) + " + " + pair_latex(b, a), true));
    else
      terms.push_back(latex_term(c, pair_latex(a, b), false));
  }

  std::ostringstream os;
  os << "\\begin{align*}\n" << head_latex(t) << " = {} & ";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0)
      os << " \\\\\n & " << (terms[i].negative ? "- " : "+ ");
    else if (terms[i].negative)
      os << "-";
    os << terms[i].body;
  }
  os << "\n\\end{align*}\n";
  return os.str();
}

} // namespace

nlohmann::ordered_json table_to_json(const KinematicTable &t) {
  nlohmann::ordered_json doc;
  doc["n"] = t.n;
  doc["target"] = slot_json(t.target, t.kind == FormulaKind::Global);
  doc["basis"] = basis_mode_name(t.basis);
  if (t.kind != FormulaKind::Local)
    doc["kind"] = kind_name(t.kind);
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto &[key, c] : t.entries)
    entries.push_back(nlohmann::ordered_json{{"left", slot_json(key.first, left_is_mu(t))},
                                             {"right", slot_json(key.second, right_is_mu(t))},
                                             {"value", c.to_json()}});
  doc["entries"] = std::move(entries);
  return doc;
}

std::string emit(const KinematicTable &table, Format format) {
  switch (format) {
  case Format::Text: return emit_text(table);
  case Format::Latex: return emit_latex(table);
  case Format::Json: return table_to_json(table).dump() + "\n";
  }
  throw std::invalid_argument("unknown format");
}

std::string emit(const std::vector<KinematicTable> &tables, Format format) {
  if (format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["n"] = tables.empty() ? 0 : tables.front().n;
    doc["basis"] = tables.empty() ? "delta-n" : basis_mode_name(tables.front().basis);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &t : tables)
      arr.push_back(table_to_json(t));
    doc["tables"] = std::move(arr);
    return doc.dump(1) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0)
      out += "\n";
    std::string one = emit(tables[i], format);
    if (one.back() != '\n')
      one += "\n";
    out += one;
  }
  return out;
}

} // namespace ukin
