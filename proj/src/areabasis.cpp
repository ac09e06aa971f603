#include "ukin/areabasis.hpp"

#include <algorithm>
#include <regex>

namespace ukin {

std::string family_name(Family f) {
  switch (f) {
  case Family::Delta: return "Delta";
  case Family::N: return "N";
  case Family::B: return "B";
  case Family::Gamma: return "Gamma";
  }
  return "?";
}

std::string AreaIndex::to_string() const {
  return family_name(family) + ":" + std::to_string(k) + "," + std::to_string(q);
}

std::string AreaIndex::to_latex() const {
  static const char *const sym[] = {"\\Delta", "N", "B", "\\Gamma"};
  return std::string(sym[static_cast<int>(family)]) + "_{" + std::to_string(k) + "," +
         std::to_string(q) + "}";
}

nlohmann::ordered_json AreaIndex::to_json() const {
  return nlohmann::ordered_json{{"family", family_name(family)}, {"k", k}, {"q", q}};
}

AreaIndex AreaIndex::parse(const std::string &text) {
  static const std::regex re(R"(^\s*(Delta|N|B|Gamma)\s*:\s*(-?\d+)\s*,\s*(-?\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw std::invalid_argument("malformed index '" + text + "' (expected Family:k,q)");
  AreaIndex idx;
  const std::string fam = m[1];
  idx.family = fam == "Delta" ? Family::Delta
               : fam == "N"   ? Family::N
               : fam == "B"   ? Family::B
                              : Family::Gamma;
  try {
    idx.k = std::stoi(m[2]);
    idx.q = std::stoi(m[3]);
  } catch (const std::out_of_range &) {
    throw std::invalid_argument("index out of integer range '" + text + "'");
  }
  return idx;
}

void require_dimension(int n) {
  if (n < 2)
    throw std::invalid_argument("n must be at least 2 (got " + std::to_string(n) + ")");
}

bool is_valid(int n, const AreaIndex &idx) {
  const int k = idx.k, q = idx.q;
  if (n < 2 || k < 0 || k > 2 * n - 1 || q < 0)
    return false;
  switch (idx.family) {
  case Family::Delta: return q >= k - n && 2 * q <= k;
  case Family::N: return q >= k - n + 1 && 2 * q < k;
  case Family::B: return q >= k - n && 2 * q < k;
  case Family::Gamma: return q >= k - n + 1 && 2 * q <= k;
  }
  return false;
}

void require_valid(int n, const AreaIndex &idx) {
  if (!is_valid(n, idx))
    throw InvalidIndex("invalid index " + idx.to_string() + " for n=" + std::to_string(n));
}

std::vector<AreaIndex> valid_indices(int n, Family family) {
  require_dimension(n);
  std::vector<AreaIndex> out;
  for (int k = 0; k <= 2 * n - 1; ++k)
    for (int q = 0; 2 * q <= k; ++q)
      if (AreaIndex idx{family, k, q}; is_valid(n, idx))
        out.push_back(idx);
  return out;
}

namespace {

std::vector<AreaIndex> merged(int n, Family a, Family b) {
  auto out = valid_indices(n, a);
  auto other = valid_indices(n, b);
  out.insert(out.end(), other.begin(), other.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Entries of the change of basis for the (k, q) block:
// Delta = a B + b Gamma, N = b (Gamma - B), a + b = 1.
struct Block {
  Rational a;
  Rational b;
};

Block block(int n, int k, int q) {
  return {Rational(k - 2 * q, 2 * n - k), Rational(2 * (n - k + q), 2 * n - k)};
}

void put(int n, Coords &out, AreaIndex idx, const Rational &c) {
  if (c.is_zero() || !is_valid(n, idx))
    return;
  out[idx] += c;
  if (out[idx].is_zero())
    out.erase(idx);
}

} // namespace

std::vector<AreaIndex> dn_basis(int n) { return merged(n, Family::Delta, Family::N); }

std::vector<AreaIndex> dn_basis_of_degree(int n, int k) {
  std::vector<AreaIndex> out;
  for (const auto &idx : dn_basis(n))
    if (idx.k == k)
      out.push_back(idx);
  return out;
}

std::vector<AreaIndex> bg_basis(int n) { return merged(n, Family::B, Family::Gamma); }

Census census(int n) {
  require_dimension(n);
  Census c;
  c.per_degree.assign(2 * n, 0);
  for (const auto &idx : dn_basis(n))
    ++c.per_degree[idx.k];
  for (int v : c.per_degree)
    c.total += v;
  return c;
}

Coords dual_bg_to_dn(int n, const AreaIndex &idx) {
  require_valid(n, idx);
  const int k = idx.k, q = idx.q;
  Coords out;
  if (idx.family == Family::B) {
    // q = k - n gives a = 1, b = 0: B*_{k,k-n} = Delta*_{k,k-n}.
    const auto [a, b] = block(n, k, q);
    put(n, out, {Family::Delta, k, q}, a);
    put(n, out, {Family::N, k, q}, -b);
  } else if (idx.family == Family::Gamma) {
    if (2 * q == k) {
      put(n, out, {Family::Delta, k, q}, Rational(1));
    } else {
      const Rational b = block(n, k, q).b;
      put(n, out, {Family::Delta, k, q}, b);
      put(n, out, {Family::N, k, q}, b);
    }
  } else {
    throw InvalidIndex("dual_bg_to_dn expects a B or Gamma index, got " + idx.to_string());
  }
  return out;
}

Coords primal_bg_from_dn(int n, const AreaIndex &idx) {
  require_valid(n, idx);
  const int k = idx.k, q = idx.q;
  const auto [a, b] = block(n, k, q);
  Coords out;
  if (idx.family == Family::Delta) {
    if (2 * q == k) {
      put(n, out, {Family::Gamma, k, q}, Rational(1));
    } else {
      put(n, out, {Family::B, k, q}, a);
      put(n, out, {Family::Gamma, k, q}, b);
    }
  } else if (idx.family == Family::N) {
    put(n, out, {Family::Gamma, k, q}, b);
    put(n, out, {Family::B, k, q}, -b);
  } else {
    throw InvalidIndex("primal_bg_from_dn expects a Delta or N index, got " + idx.to_string());
  }
  return out;
}

Coords primal_dn_from_bg(int n, const AreaIndex &idx) {
  require_valid(n, idx);
  const int k = idx.k, q = idx.q;
  Coords out;
  if (idx.family == Family::B) {
    // B = Delta - N; at q = k - n the N index is absent and B = Delta.
    put(n, out, {Family::Delta, k, q}, Rational(1));
    put(n, out, {Family::N, k, q}, Rational(-1));
  } else if (idx.family == Family::Gamma) {
    put(n, out, {Family::Delta, k, q}, Rational(1));
    if (2 * q < k) {
      const auto [a, b] = block(n, k, q);
      put(n, out, {Family::N, k, q}, a / b);
    }
  } else {
    throw InvalidIndex("primal_dn_from_bg expects a B or Gamma index, got " + idx.to_string());
  }
  return out;
}

Coords dual_dn_to_bg(int n, const AreaIndex &idx) {
  require_valid(n, idx);
  const int k = idx.k, q = idx.q;
  Coords out;
  if (idx.family == Family::Delta) {
    // Delta* = B* + Gamma*; the edge blocks keep only the index that exists.
    put(n, out, {Family::B, k, q}, Rational(1));
    put(n, out, {Family::Gamma, k, q}, Rational(1));
  } else if (idx.family == Family::N) {
    const auto [a, b] = block(n, k, q);
    put(n, out, {Family::B, k, q}, Rational(-1));
    put(n, out, {Family::Gamma, k, q}, a / b);
  } else {
    throw InvalidIndex("dual_dn_to_bg expects a Delta or N index, got " + idx.to_string());
  }
  return out;
}

} // namespace ukin
