/**
 * @file quadrature.cpp
 * @brief Gauss–Legendre rule construction, tensor integration, adaptive
 *        bisection, and the Jacobi eigensolver.
 */
#include "supervol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>

namespace supervol {

//=============================================================================
// Gauss–Legendre rule
//=============================================================================

namespace {

GaussLegendreRule build_gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double pi = 3.141592653589793238462643383279502884;
  for (int k = 0; k < n; ++k) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(pi * (k + 0.75) / (n + 0.5));
    double pd = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n−1}(x)
      pd = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pd;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - k] = x;  // ascending order
    rule.weights[n - 1 - k] = 2.0 / ((1.0 - x * x) * pd * pd);
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_gauss_legendre(n)).first;
  return it->second;
}

//=============================================================================
// Threads
//=============================================================================

int thread_count_from_env() {
  if (const char* env = std::getenv("SUPERVOL_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

//=============================================================================
// Tensor-product integration
//=============================================================================

Complex integrate_tensor(const std::function<Complex(const std::vector<double>&)>& f,
                         const std::vector<Interval>& box, int nodes_per_axis) {
  const int dim = static_cast<int>(box.size());
  if (dim == 0) return f({});
  for (const Interval& iv : box)
    if (!(iv.lo < iv.hi))
      throw std::invalid_argument("integrate_tensor: interval must have lo < hi");
  const GaussLegendreRule& rule = gauss_legendre(nodes_per_axis);
  const int n = nodes_per_axis;

  // Precompute mapped nodes and weights per axis.
  std::vector<std::vector<double>> axis_nodes(dim), axis_weights(dim);
  for (int d = 0; d < dim; ++d) {
    const double half = 0.5 * (box[d].hi - box[d].lo);
    const double mid = 0.5 * (box[d].hi + box[d].lo);
    axis_nodes[d].resize(n);
    axis_weights[d].resize(n);
    for (int k = 0; k < n; ++k) {
      axis_nodes[d][k] = mid + half * rule.nodes[k];
      axis_weights[d][k] = half * rule.weights[k];
    }
  }

  // Flat index space of size n^dim, chunked along the outermost axis.
  std::size_t total = 1;
  for (int d = 0; d < dim; ++d) total *= static_cast<std::size_t>(n);
  const std::size_t inner = total / static_cast<std::size_t>(n);

  const int workers = std::min<int>(thread_count_from_env(), n);
  std::vector<Complex> partial(static_cast<std::size_t>(n), Complex{0.0, 0.0});

  auto run_chunk = [&](int outer) {
    ComplexNeumaierSum acc;
    std::vector<double> x(static_cast<std::size_t>(dim));
    x[0] = axis_nodes[0][static_cast<std::size_t>(outer)];
    const double w0 = axis_weights[0][static_cast<std::size_t>(outer)];
    for (std::size_t flat = 0; flat < inner; ++flat) {
      std::size_t rem = flat;
      double w = w0;
      for (int d = dim - 1; d >= 1; --d) {
        const std::size_t k = rem % static_cast<std::size_t>(n);
        rem /= static_cast<std::size_t>(n);
        x[static_cast<std::size_t>(d)] = axis_nodes[d][k];
        w *= axis_weights[d][k];
      }
      acc.add(f(x) * w);
    }
    partial[static_cast<std::size_t>(outer)] = acc.value();
  };

  if (workers <= 1) {
    for (int outer = 0; outer < n; ++outer) run_chunk(outer);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&, t]() {
        for (int outer = t; outer < n; outer += workers) run_chunk(outer);
      });
    for (std::thread& th : pool) th.join();
  }

  // Deterministic ordered combine.
  ComplexNeumaierSum out;
  for (int outer = 0; outer < n; ++outer)
    out.add(partial[static_cast<std::size_t>(outer)]);
  return out.value();
}

//=============================================================================
// Adaptive bisection
//=============================================================================

namespace {

Complex adaptive_rec(const std::function<Complex(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int nodes, int depth) {
  const Complex whole = integrate_1d(f, a, b, nodes);
  const double mid = 0.5 * (a + b);
  const Complex split =
      integrate_1d(f, a, mid, nodes) + integrate_1d(f, mid, b, nodes);
  const double err = std::abs(whole - split);
  if (err <= std::max(abs_tol, rel_tol * std::abs(split)) || depth >= 30)
    return split;
  return adaptive_rec(f, a, mid, 0.5 * abs_tol, rel_tol, nodes, depth + 1) +
         adaptive_rec(f, mid, b, 0.5 * abs_tol, rel_tol, nodes, depth + 1);
}

}  // namespace

Complex integrate_adaptive_1d(const std::function<Complex(double)>& f, double a,
                              double b, double abs_tol, double rel_tol,
                              int nodes) {
  if (!(a < b)) throw std::invalid_argument("integrate_adaptive_1d: need a < b");
  return adaptive_rec(f, a, b, abs_tol, rel_tol, nodes, 0);
}

//=============================================================================
// Cyclic Jacobi eigensolver
//=============================================================================

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  if (n <= 0 || static_cast<std::size_t>(n) * n != a.size())
    throw std::invalid_argument("symmetric_eigenvalues: bad shape");
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(at(p, q)) < 1e-300) continue;
        const double theta = 0.5 * (at(q, q) - at(p, p)) / at(p, q);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace supervol
