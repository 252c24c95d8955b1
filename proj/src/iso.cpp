#include "gira/iso.hpp"

#include <algorithm>
#include <numeric>

namespace gira {

namespace {

constexpr int kMaxIsoSize = 8;

// Encoding under a relabeling: inv[old] = new; tables serialized in a fixed
// order with one presence byte each, constants last.
std::string encode(const FiniteAlgebra& a, const std::vector<int>& perm,
                   const std::vector<int>& inv) {
  std::string s;
  s.reserve(6 * a.n * a.n + 16);
  auto bin = [&](const std::optional<std::vector<int>>& t) {
    if (!t) { s.push_back('-'); return; }
    s.push_back('+');
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j)
        s.push_back((char)('0' + inv[(*t)[perm[i] * a.n + perm[j]]]));
  };
  auto un = [&](const std::optional<std::vector<int>>& t) {
    if (!t) { s.push_back('-'); return; }
    s.push_back('+');
    for (int i = 0; i < a.n; ++i) s.push_back((char)('0' + inv[(*t)[perm[i]]]));
  };
  auto cn = [&](const std::optional<int>& c) {
    s.push_back(c ? (char)('0' + inv[*c]) : '-');
  };
  bin(a.meet);
  bin(a.join);
  bin(a.mult);
  bin(a.imp);
  un(a.neg);
  un(a.bang);
  cn(a.one);
  cn(a.zero);
  cn(a.top);
  cn(a.bot);
  return s;
}

void check_size(const FiniteAlgebra& a) {
  if (a.n > kMaxIsoSize)
    throw AlgebraError("SIZE-LIMIT", "isomorphism search limited to size " +
                                         std::to_string(kMaxIsoSize));
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteAlgebra& a,
                                              const FiniteAlgebra& b) {
  if (!a.same_signature(b))
    throw AlgebraError("SIGNATURE-MISMATCH",
                       "algebras differ in size or present tables/constants");
  check_size(a);
  int n = a.n;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  auto table_ok = [&](const std::optional<std::vector<int>>& ta,
                      const std::optional<std::vector<int>>& tb, bool binary) {
    if (!ta) return true;
    if (binary) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (sigma[(*ta)[i * n + j]] != (*tb)[sigma[i] * n + sigma[j]]) return false;
    } else {
      for (int i = 0; i < n; ++i)
        if (sigma[(*ta)[i]] != (*tb)[sigma[i]]) return false;
    }
    return true;
  };
  auto const_ok = [&](const std::optional<int>& ca, const std::optional<int>& cb) {
    return !ca || sigma[*ca] == *cb;
  };
  do {
    if (const_ok(a.one, b.one) && const_ok(a.zero, b.zero) &&
        const_ok(a.top, b.top) && const_ok(a.bot, b.bot) &&
        table_ok(a.meet, b.meet, true) && table_ok(a.join, b.join, true) &&
        table_ok(a.mult, b.mult, true) && table_ok(a.imp, b.imp, true) &&
        table_ok(a.neg, b.neg, false) && table_ok(a.bang, b.bang, false))
      return sigma;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::string canonical_key(const FiniteAlgebra& a) {
  check_size(a);
  int n = a.n;
  std::vector<int> perm(n), inv(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string s = encode(a, perm, inv);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

FiniteAlgebra canonical_form(const FiniteAlgebra& a) {
  check_size(a);
  int n = a.n;
  std::vector<int> perm(n), inv(n), best_perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    std::string s = encode(a, perm, inv);
    if (best.empty() || s < best) {
      best = std::move(s);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  FiniteAlgebra r = a.permuted(best_perm);
  for (int i = 0; i < n; ++i) r.elems[i] = "e" + std::to_string(i);
  return r;
}

}  // namespace gira
