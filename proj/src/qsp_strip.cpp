// Copyright 2026 The qsvtkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsp_strip.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace qsvtkit::detail {

namespace {

template <unsigned Bits>
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<Bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

template <class T>
struct Z {
  T re;
  T im;
};

template <class T>
Z<T> operator*(const Z<T>& a, const Z<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class T>
Z<T> conj(const Z<T>& a) {
  return {a.re, -a.im};
}

template <class T>
using Poly = std::vector<Z<T>>;

template <class T>
void add_to(Poly<T>& out, std::size_t k, const Z<T>& v) {
  out[k].re += v.re;
  out[k].im += v.im;
}

// a * conj(b) for Chebyshev series, using T_i T_j = (T_{i+j} + T_{|i-j|}) / 2.
template <class T>
Poly<T> mul_conj(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> out(a.size() + b.size() - 1, Z<T>{T(0), T(0)});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].re == 0 && a[i].im == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      Z<T> c = a[i] * conj(b[j]);
      c.re /= 2;
      c.im /= 2;
      add_to(out, i + j, c);
      add_to(out, i > j ? i - j : j - i, c);
    }
  }
  return out;
}

template <class T>
Poly<T> times_x(const Poly<T>& a) {
  Poly<T> out(a.size() + 1, Z<T>{T(0), T(0)});
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k == 0) {
      add_to(out, 1, a[0]);
    } else {
      const Z<T> h{a[k].re / 2, a[k].im / 2};
      add_to(out, k + 1, h);
      add_to(out, k - 1, h);
    }
  }
  return out;
}

// (1 - x^2) T_k = T_k / 2 - T_{k+2} / 4 - T_{|k-2|} / 4.
template <class T>
Poly<T> times_one_minus_x2(const Poly<T>& a) {
  Poly<T> out(a.size() + 2, Z<T>{T(0), T(0)});
  for (std::size_t k = 0; k < a.size(); ++k) {
    const Z<T> h{a[k].re / 2, a[k].im / 2};
    const Z<T> f{-a[k].re / 4, -a[k].im / 4};
    add_to(out, k, h);
    add_to(out, k + 2, f);
    add_to(out, k >= 2 ? k - 2 : 2 - k, f);
  }
  return out;
}

// Even coefficients of |p|^2 + (1 - x^2)|q|^2 - 1.
template <class T>
std::vector<T> defect(const Poly<T>& p, const Poly<T>& q, int n) {
  const Poly<T> a = mul_conj(p, p);
  const Poly<T> b = times_one_minus_x2(mul_conj(q, q));
  std::vector<T> d(n + 1, T(0));
  for (int e = 0; e <= n; ++e) {
    const std::size_t k = 2 * e;
    if (k < a.size()) d[e] += a[k].re;
    if (k < b.size()) d[e] += b[k].re;
  }
  d[0] -= 1;
  return d;
}

template <class T>
T max_abs(const std::vector<T>& v) {
  T m(0);
  for (const auto& x : v) m = std::max(m, T(abs(x)));
  return m;
}

// Unknown coefficient: polynomial (0 = p, 1 = q), index, and whether the
// perturbation is imaginary.
struct Unknown {
  int poly;
  int index;
  bool imag;
};

// Minimum-norm Newton projection of (p, q) onto the achievable set.
template <class T>
class Projector {
 public:
  static constexpr int kMaxRefreshes = 40;

  Projector(int n) : n_(n) {
    for (int k = n % 2; k <= n; k += 2) {
      unknowns_.push_back({0, k, false});
      unknowns_.push_back({0, k, true});
    }
    for (int k = (n + 1) % 2; k <= n - 1; k += 2) {
      unknowns_.push_back({1, k, false});
      unknowns_.push_back({1, k, true});
    }
  }

  // Chord iterations: the Jacobian is kept until a step fails to reduce the
  // defect, then refreshed at the current point; a fresh step that still
  // fails is shortened by halving. Convergence is only linear when the
  // Jacobian is nearly singular at the solution, hence the generous cap.
  void run(Poly<T>& p, Poly<T>& q, T threshold) {
    std::vector<T> d = defect(p, q, n_);
    T prev = max_abs(d);
    if (prev <= threshold) return;
    factor(p, q);
    bool fresh = true;
    int refreshes = 0;
    for (int it = 0; it < 600; ++it) {
      bool accepted = false;
      T scale(1);
      for (int halving = 0; halving < (fresh ? 40 : 1); ++halving, scale /= 2) {
        Poly<T> p_next = p;
        Poly<T> q_next = q;
        apply_step(p_next, q_next, d, scale);
        std::vector<T> d_next = defect(p_next, q_next, n_);
        const T now = max_abs(d_next);
        if (now < prev) {
          p = std::move(p_next);
          q = std::move(q_next);
          d = std::move(d_next);
          prev = now;
          accepted = true;
          break;
        }
      }
      if (prev <= threshold) return;
      if (accepted) {
        fresh = false;
      } else if (fresh || ++refreshes > kMaxRefreshes) {
        return;
      } else {
        factor(p, q);
        fresh = true;
      }
    }
  }

 private:
  // Jacobian column of the even defect coefficients for one unknown.
  std::vector<T> column(const Poly<T>& p, const Poly<T>& q, const Unknown& u) const {
    std::vector<T> col(n_ + 1, T(0));
    const Poly<T>& base = u.poly == 0 ? p : q;
    // base * conj(delta) with delta = e_k or i e_k.
    Poly<T> prod(base.size() + u.index + 1, Z<T>{T(0), T(0)});
    for (std::size_t i = 0; i < base.size(); ++i) {
      Z<T> c = u.imag ? Z<T>{base[i].im, -base[i].re} : base[i];
      c.re /= 2;
      c.im /= 2;
      const std::size_t k = static_cast<std::size_t>(u.index);
      add_to(prod, i + k, c);
      add_to(prod, i > k ? i - k : k - i, c);
    }
    if (u.poly == 1) prod = times_one_minus_x2(prod);
    for (int e = 0; e <= n_; ++e) {
      const std::size_t k = 2 * e;
      if (k < prod.size()) col[e] = 2 * prod[k].re;
    }
    return col;
  }

  void factor(const Poly<T>& p, const Poly<T>& q) {
    const int rows = n_ + 1;
    const int cols = static_cast<int>(unknowns_.size());
    jac_.assign(cols, std::vector<T>());
    for (int c = 0; c < cols; ++c) jac_[c] = column(p, q, unknowns_[c]);
    // Cholesky factor of J J^T.
    chol_.assign(rows, std::vector<T>(rows, T(0)));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j <= i; ++j) {
        T s(0);
        for (int c = 0; c < cols; ++c) s += jac_[c][i] * jac_[c][j];
        for (int k = 0; k < j; ++k) s -= chol_[i][k] * chol_[j][k];
        if (i == j) {
          chol_[i][i] = s > 0 ? T(sqrt(s)) : T(0);
        } else {
          chol_[i][j] = chol_[j][j] != 0 ? T(s / chol_[j][j]) : T(0);
        }
      }
    }
  }

  void apply_step(Poly<T>& p, Poly<T>& q, const std::vector<T>& d, const T& scale) const {
    const int rows = n_ + 1;
    std::vector<T> y(rows, T(0));
    for (int i = 0; i < rows; ++i) {
      T s = -d[i];
      for (int k = 0; k < i; ++k) s -= chol_[i][k] * y[k];
      y[i] = chol_[i][i] != 0 ? T(s / chol_[i][i]) : T(0);
    }
    for (int i = rows - 1; i >= 0; --i) {
      T s = y[i];
      for (int k = i + 1; k < rows; ++k) s -= chol_[k][i] * y[k];
      y[i] = chol_[i][i] != 0 ? T(s / chol_[i][i]) : T(0);
    }
    for (std::size_t c = 0; c < unknowns_.size(); ++c) {
      T delta(0);
      for (int e = 0; e < rows; ++e) delta += jac_[c][e] * y[e];
      delta *= scale;
      const Unknown& u = unknowns_[c];
      Z<T>& coef = u.poly == 0 ? p[u.index] : q[u.index];
      if (u.imag) {
        coef.im += delta;
      } else {
        coef.re += delta;
      }
    }
  }

  int n_;
  std::vector<Unknown> unknowns_;
  std::vector<std::vector<T>> jac_;
  std::vector<std::vector<T>> chol_;
};

template <unsigned Bits>
std::vector<double> strip(const std::vector<cplx>& pin, const std::vector<cplx>& qin,
                          int n) {
  using T = Real<Bits>;
  Poly<T> p(n + 1, Z<T>{T(0), T(0)});
  Poly<T> q(std::max(n, 1), Z<T>{T(0), T(0)});
  for (int k = n % 2; k <= n && k < static_cast<int>(pin.size()); k += 2) {
    p[k] = {T(pin[k].real()), T(pin[k].imag())};
  }
  for (int k = (n + 1) % 2; k <= n - 1 && k < static_cast<int>(qin.size()); k += 2) {
    q[k] = {T(qin[k].real()), T(qin[k].imag())};
  }
  const T threshold = T(std::ldexp(1.0, -static_cast<int>(Bits) + 16));
  Projector<T>(n).run(p, q, threshold);

  std::vector<double> phases;
  phases.reserve(n + 1);
  for (int m = n; m >= 1; --m) {
    // e^{2 i phi} = p_m conj(q_{m-1}) / |p_m q_{m-1}|, principal square root.
    const Z<T> w = p[m] * conj(q[m - 1]);
    const T r = sqrt(w.re * w.re + w.im * w.im);
    T cr(1), ci(0);
    if (r > 0) {
      const T ur = w.re / r;
      cr = sqrt(std::max(T(0), T((1 + ur) / 2)));
      ci = sqrt(std::max(T(0), T((1 - ur) / 2)));
      if (w.im < 0) ci = -ci;
    }
    phases.push_back(std::atan2(static_cast<double>(ci), static_cast<double>(cr)));
    const Z<T> e{cr, -ci};
    Poly<T> ep = p;
    for (auto& v : ep) v = v * e;
    Poly<T> cq = q;
    for (auto& v : cq) v = v * conj(e);
    Poly<T> next_p = times_x(ep);
    const Poly<T> tail = times_one_minus_x2(cq);
    for (std::size_t k = 0; k < next_p.size() && k < tail.size(); ++k) add_to(next_p, k, tail[k]);
    Poly<T> next_q = ep;
    const Poly<T> xq = times_x(cq);
    next_q.resize(std::max(next_q.size(), xq.size()), Z<T>{T(0), T(0)});
    for (std::size_t k = 0; k < xq.size(); ++k) {
      next_q[k].re -= xq[k].re;
      next_q[k].im -= xq[k].im;
    }
    next_p.resize(m);
    next_q.resize(std::max(m - 1, 1));
    if (m == 1) next_q[0] = {T(0), T(0)};
    for (int k = (m - 1) % 2 == 0 ? 1 : 0; k < m; k += 2) next_p[k] = {T(0), T(0)};
    for (int k = m % 2 == 0 ? 1 : 0; k < static_cast<int>(next_q.size()); k += 2) {
      next_q[k] = {T(0), T(0)};
    }
    p = std::move(next_p);
    q = std::move(next_q);
  }
  phases.push_back(std::atan2(static_cast<double>(p[0].im), static_cast<double>(p[0].re)));
  return phases;
}

constexpr int kTierBits[] = {128, 256, 448, 768, 1536, 3072};

}  // namespace

int strip_tier_count() { return static_cast<int>(std::size(kTierBits)); }

int strip_tier_bits(int tier) { return kTierBits[tier]; }

int strip_tier_for_degree(int n) {
  const int needed = 5 * n + 64;
  for (int t = 0; t < strip_tier_count(); ++t) {
    if (kTierBits[t] >= needed) return t;
  }
  return strip_tier_count() - 1;
}

std::vector<double> strip_layers_extended(const std::vector<cplx>& p,
                                          const std::vector<cplx>& q, int n, int tier) {
  switch (tier) {
    case 0: return strip<128>(p, q, n);
    case 1: return strip<256>(p, q, n);
    case 2: return strip<448>(p, q, n);
    case 3: return strip<768>(p, q, n);
    case 4: return strip<1536>(p, q, n);
    default: return strip<3072>(p, q, n);
  }
}

}  // namespace qsvtkit::detail
