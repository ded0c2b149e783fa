#include "troplift/permutation.hpp"

#include "troplift/errors.hpp"

#include <algorithm>
#include <numeric>

namespace troplift {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<std::vector<int>> permutation_cycles(const Permutation& p) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int i = static_cast<int>(s); !seen[static_cast<std::size_t>(i)]; i = p[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = true;
      c.push_back(i);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

int permutation_sign(const Permutation& p) {
  int sign = 1;
  for (const auto& c : permutation_cycles(p)) {
    if (c.size() % 2 == 0) sign = -sign;
  }
  return sign;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> t;
  for (const auto& c : permutation_cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

Permutation permutation_inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

Permutation permutation_compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

std::string cycle_notation(const Permutation& p) {
  std::string out;
  const bool wide = p.size() >= 10;
  for (const auto& c : permutation_cycles(p)) {
    if (c.size() < 2) continue;
    out += "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (wide && k) out += ",";
      out += std::to_string(c[k] + 1);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

Permutation parse_cycle_notation(const std::string& text, int n) {
  Permutation p = identity_permutation(n);
  if (text == "id" || text.empty()) return p;
  const bool wide = text.find(',') != std::string::npos || n >= 10;
  std::size_t pos = 0;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error(ErrorKind::ParseError, "expected '(' in " + text);
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw Error(ErrorKind::ParseError, "unclosed cycle in " + text);
    std::vector<int> cycle;
    const std::string body = text.substr(pos + 1, close - pos - 1);
    if (wide) {
      std::size_t s = 0;
      while (s <= body.size()) {
        std::size_t e = body.find(',', s);
        if (e == std::string::npos) e = body.size();
        try {
          cycle.push_back(std::stoi(body.substr(s, e - s)) - 1);
        } catch (const std::exception&) {
          throw Error(ErrorKind::ParseError, "bad cycle entry in " + text);
        }
        s = e + 1;
      }
    } else {
      for (char ch : body) {
        if (ch < '1' || ch > '9') throw Error(ErrorKind::ParseError, "bad cycle entry in " + text);
        cycle.push_back(ch - '1');
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int a = cycle[k];
      if (a < 0 || a >= n || used[static_cast<std::size_t>(a)]) {
        throw Error(ErrorKind::ParseError, "invalid or repeated element in " + text);
      }
      used[static_cast<std::size_t>(a)] = true;
      p[static_cast<std::size_t>(a)] = cycle[(k + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return p;
}

}  // namespace troplift
