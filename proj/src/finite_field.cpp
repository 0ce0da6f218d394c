#include "wordmaps/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wordmaps {

namespace {

int mod(long v, int p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

bool supported_prime(int p) {
  for (int q : {2, 3, 5, 7, 11, 13})
    if (p == q) return true;
  return false;
}

}  // namespace

ModMatrix::ModMatrix(int a, int b, int c, int d, int prime) : e{mod(a, prime), mod(b, prime), mod(c, prime), mod(d, prime)}, p(prime) {}

int ModMatrix::det() const { return mod(static_cast<long>(e[0]) * e[3] - static_cast<long>(e[1]) * e[2], p); }

ModMatrix ModMatrix::adjugate() const { return {e[3], -e[1], -e[2], e[0], p}; }

ModMatrix ModMatrix::negated() const { return {-e[0], -e[1], -e[2], -e[3], p}; }

std::uint32_t ModMatrix::code() const {
  std::uint32_t c = 0;
  for (int v : e) c = c * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(v);
  return c;
}

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
  const int p = x.p;
  return {(x.e[0] * y.e[0] + x.e[1] * y.e[2]) % p, (x.e[0] * y.e[1] + x.e[1] * y.e[3]) % p,
          (x.e[2] * y.e[0] + x.e[3] * y.e[2]) % p, (x.e[2] * y.e[1] + x.e[3] * y.e[3]) % p, p};
}

std::vector<ModMatrix> sl2_elements(int p) {
  std::vector<ModMatrix> out;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          ModMatrix m(a, b, c, d, p);
          if (m.det() == 1) out.push_back(m);
        }
  return out;
}

ModMatrix evaluate_mod(const Word& w, const std::vector<ModMatrix>& images) {
  if (static_cast<int>(images.size()) != w.num_generators())
    throw std::invalid_argument("evaluate_mod: need one image per generator");
  const int p = images.front().p;
  ModMatrix r = ModMatrix::identity(p);
  for (const auto& s : w.syllables()) {
    ModMatrix g = s.exp > 0 ? images[s.gen - 1] : images[s.gen - 1].adjugate();
    for (long k = 0; k < std::labs(s.exp); ++k) r = r * g;
  }
  return r;
}

bool FFImage::contains(const ModMatrix& m) const {
  std::uint32_t c = m.code();
  if (projective) c = std::min(c, m.negated().code());
  return std::binary_search(image_codes.begin(), image_codes.end(), c);
}

FFImage ff_image(const Word& w, int p, bool projective, std::uint64_t max_tuples) {
  if (!supported_prime(p)) throw std::invalid_argument("ff_image supports p in {2, 3, 5, 7, 11, 13}");
  const auto group = sl2_elements(p);
  const int n = w.num_generators();
  double tuples = std::pow(static_cast<double>(group.size()), n);
  if (tuples > static_cast<double>(max_tuples))
    throw BudgetError("enumeration of " + std::to_string(static_cast<std::uint64_t>(tuples)) + " tuples exceeds the budget");

  auto canonical = [&](const ModMatrix& m) {
    return projective ? std::min(m.code(), m.negated().code()) : m.code();
  };
  std::uint32_t code_space = 1;
  for (int i = 0; i < 4; ++i) code_space *= static_cast<std::uint32_t>(p);
  std::vector<char> hit(code_space, 0);

  std::vector<std::size_t> idx(n, 0);
  std::vector<ModMatrix> images(n, group[0]);
  FFImage out;
  out.p = p;
  out.projective = projective;
  while (true) {
    for (int i = 0; i < n; ++i) images[i] = group[idx[i]];
    hit[canonical(evaluate_mod(w, images))] = 1;
    ++out.tuples;
    int k = 0;
    while (k < n && ++idx[k] == group.size()) idx[k++] = 0;
    if (k == n) break;
  }

  std::map<int, TraceClassCoverage> classes;
  std::vector<char> seen(code_space, 0);
  std::size_t order = 0;
  for (const auto& g : group) {
    std::uint32_t c = canonical(g);
    if (seen[c]) continue;
    seen[c] = 1;
    ++order;
    int tr = g.trace();
    if (projective) tr = std::min(tr, mod(-tr, p));
    auto& cls = classes[tr];
    cls.trace = tr;
    ++cls.total;
    if (hit[c]) {
      ++cls.hit;
      out.image_codes.push_back(c);
    } else if (out.missing.size() < 16) {
      out.missing.push_back(g);
    }
  }
  std::sort(out.image_codes.begin(), out.image_codes.end());
  out.group_order = order;
  out.image_size = out.image_codes.size();
  out.full = out.image_size == out.group_order;
  for (auto& [t, c] : classes) out.by_trace.push_back(c);
  return out;
}

}  // namespace wordmaps
