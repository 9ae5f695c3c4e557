#pragma once

#include <cstddef>

namespace ospx {

// Entry (p,q) of X^osp equals sign * rho^twist(bar(X[row][col])), 0-based indices,
// block layout m | n | n.
struct OspSource {
  int sign;
  std::size_t row, col;
  bool twist;
};

inline int osp_block(std::size_t m, std::size_t n, std::size_t p) {
  return p < m ? 1 : (p < m + n ? 2 : 3);
}

inline OspSource osp_source(std::size_t m, std::size_t n, std::size_t p, std::size_t q) {
  auto start = [&](int b) -> std::size_t { return b == 1 ? 0 : (b == 2 ? m : m + n); };
  auto swap23 = [](int b) { return b == 1 ? 1 : 5 - b; };
  int P = osp_block(m, n, p), Q = osp_block(m, n, q);
  std::size_t a = p - start(P), b = q - start(Q);
  static constexpr int sign[3][3] = {{1, -1, 1}, {1, 1, -1}, {-1, -1, 1}};
  return OspSource{sign[P - 1][Q - 1], start(swap23(Q)) + b, start(swap23(P)) + a,
                   (P == 1) != (Q == 1)};
}

}  // namespace ospx
