#pragma once

#include "qschur/element.hpp"

namespace qschur {

/// Divided-power left multiplication in the type A Schur algebra / its limit:
/// E_h^{(a)} 1_{ro(A)} * [A] and F_h^{(a)} 1_{ro(A)} * [A], h 0-based
/// (E moves mass from row h+1 to row h). With limit = false cells with a
/// negative entry are dropped.
Element blm_E(int h, int a, const Cell& A, bool limit);
Element blm_F(int h, int a, const Cell& A, bool limit);
Element blm_E(int h, int a, const Element& x, bool limit);
Element blm_F(int h, int a, const Element& x, bool limit);

/// The generator cell E_h^{(a)} 1_mu (column weight mu) and F likewise.
Cell e_cell(int h, int a, const std::vector<int>& mu);
Cell f_cell(int h, int a, const std::vector<int>& mu);

}  // namespace qschur
