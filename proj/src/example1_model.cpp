#include "afspec/example1_model.hpp"

#include "afspec/error.hpp"

#include <cstdlib>
#include <map>

namespace afspec {

std::string example1_p(int i) { return "P_" + std::to_string(i); }
std::string example1_q(int i) { return "Q_" + std::to_string(i); }
std::string example1_r(int j, int n) { return "R_" + std::to_string(j) + "_" + (n == 0 ? "inf" : std::to_string(n)); }

FiniteTopSpace example1_model(int k, int n) {
  if (k < 1 || n < 2) throw ModelError("example 1 model needs k >= 1 and N >= 2");
  const int left = 2 * k + 1;  // t_0 .. t_{2k}
  const int n0 = n - 1;

  std::vector<std::string> names;
  std::map<std::string, std::size_t> at;
  auto add = [&](std::string s) {
    at[s] = names.size();
    names.push_back(std::move(s));
  };
  for (int i = 0; i < left; ++i) add(example1_p(i));
  for (int i = 0; i < left; ++i) add(example1_q(i));
  for (int j = 0; j <= k; ++j) {
    for (int m = 1; m <= n; ++m) add(example1_r(j, m));
    add(example1_r(j, 0));
  }
  const std::size_t size = names.size();

  std::vector<PointSet> basis;
  auto basic = [&](const std::vector<std::string>& members) {
    PointSet s(size);
    for (const auto& m : members) s.set(at.at(m));
    basis.push_back(std::move(s));
  };
  auto near = [](int a, int b) { return std::abs(a - b) <= 1; };

  for (int c = 0; c < left; ++c) {
    std::vector<std::string> p, pq;
    for (int i = 0; i < left; ++i) {
      if (!near(i, c)) continue;
      p.push_back(example1_p(i));
      pq.push_back(example1_p(i));
      pq.push_back(example1_q(i));
    }
    basic(p);   // around P(t_c)
    basic(pq);  // around Q(t_c)
  }
  // Around R(0,m): the P's just left of 0 and R(s,m) with 0 <= s <= one step.
  for (int m = 1; m <= n; ++m) basic({example1_p(left - 1), example1_r(0, m), example1_r(1, m)});
  {
    std::vector<std::string> s{example1_p(left - 1), example1_q(left - 1)};
    for (int j = 0; j <= 1; ++j) {
      for (int m = n0 + 1; m <= n; ++m) s.push_back(example1_r(j, m));
      s.push_back(example1_r(j, 0));
    }
    basic(s);  // around R(0,∞)
  }
  for (int c = 1; c <= k; ++c) {
    for (int m = 1; m <= n; ++m) {
      std::vector<std::string> s;
      for (int j = 1; j <= k; ++j)
        if (near(j, c)) s.push_back(example1_r(j, m));
      basic(s);  // around R(s_c,m)
    }
    std::vector<std::string> s;
    for (int j = 1; j <= k; ++j) {
      if (!near(j, c)) continue;
      for (int m = n0 + 1; m <= n; ++m) s.push_back(example1_r(j, m));
      s.push_back(example1_r(j, 0));
    }
    basic(s);  // around R(s_c,∞)
  }

  std::vector<PointSet> minopen(size, PointSet(size).flip());
  for (const PointSet& b : basis)
    for (auto x = b.find_first(); x != PointSet::npos; x = b.find_next(x)) minopen[x] &= b;
  return FiniteTopSpace(std::move(names), std::move(minopen));
}

}  // namespace afspec
