#pragma once

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace opaque {

// Dense two-phase simplex for small LPs:
//   maximize c*x  subject to  A x <= b, x >= 0.
// Bland-style pairwise tie-breaking keeps it from cycling. Problem sizes in
// this project are a few thousand constraints at most, so a dense tableau
// is fine.
class SimplexSolver {
 public:
  enum class Status { Optimal, Infeasible, Unbounded };

  struct Result {
    Status status;
    double value = 0.0;
    std::vector<double> x;
  };

  static Result maximize(const std::vector<std::vector<double>>& A,
                         const std::vector<double>& b,
                         const std::vector<double>& c) {
    SimplexSolver s(A, b, c);
    std::vector<double> x;
    double v = s.solve(x);
    Result r;
    if (v == -kInf) {
      r.status = Status::Infeasible;
    } else if (v == kInf) {
      r.status = Status::Unbounded;
    } else {
      r.status = Status::Optimal;
      r.value = v;
      r.x = std::move(x);
    }
    return r;
  }

 private:
  static constexpr double kEps = 1e-9;
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  int m, n;
  std::vector<int> N, B;
  std::vector<std::vector<double>> D;

  SimplexSolver(const std::vector<std::vector<double>>& A,
                const std::vector<double>& b, const std::vector<double>& c)
      : m(static_cast<int>(b.size())),
        n(static_cast<int>(c.size())),
        N(n + 1),
        B(m),
        D(m + 2, std::vector<double>(n + 2)) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) D[i][j] = A[i][j];
    for (int i = 0; i < m; ++i) {
      B[i] = n + i;
      D[i][n] = -1;
      D[i][n + 1] = b[i];
    }
    for (int j = 0; j < n; ++j) {
      N[j] = j;
      D[m][j] = -c[j];
    }
    N[n] = -1;
    D[m + 1][n] = 1;
  }

  void pivot(int r, int s) {
    double* a = D[r].data();
    double inv = 1.0 / a[s];
    for (int i = 0; i < m + 2; ++i) {
      if (i != r && std::fabs(D[i][s]) > kEps) {
        double* bb = D[i].data();
        double inv2 = bb[s] * inv;
        for (int j = 0; j < n + 2; ++j) bb[j] -= a[j] * inv2;
        bb[s] = a[s] * inv2;
      }
    }
    for (int j = 0; j < n + 2; ++j)
      if (j != s) D[r][j] *= inv;
    for (int i = 0; i < m + 2; ++i)
      if (i != r) D[i][s] *= -inv;
    D[r][s] = inv;
    std::swap(B[r], N[s]);
  }

  bool simplex(int phase) {
    int x = m + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j < n + 1; ++j) {
        if (N[j] == -phase) continue;
        if (s == -1 || std::pair(D[x][j], N[j]) < std::pair(D[x][s], N[s])) s = j;
      }
      if (D[x][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m; ++i) {
        if (D[i][s] <= kEps) continue;
        if (r == -1 || std::pair(D[i][n + 1] / D[i][s], B[i]) <
                           std::pair(D[r][n + 1] / D[r][s], B[r]))
          r = i;
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  double solve(std::vector<double>& x) {
    int r = 0;
    for (int i = 1; i < m; ++i)
      if (D[i][n + 1] < D[r][n + 1]) r = i;
    if (D[r][n + 1] < -kEps) {
      pivot(r, n);
      if (!simplex(2) || D[m + 1][n + 1] < -kEps) return -kInf;
      for (int i = 0; i < m; ++i) {
        if (B[i] == -1) {
          int s = 0;
          for (int j = 1; j <= n; ++j)
            if (s == -1 ||
                std::pair(D[i][j], N[j]) < std::pair(D[i][s], N[s]))
              s = j;
          pivot(i, s);
        }
      }
    }
    bool ok = simplex(1);
    x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
      if (B[i] < n) x[B[i]] = D[i][n + 1];
    return ok ? D[m][n + 1] : kInf;
  }
};

}  // namespace opaque
