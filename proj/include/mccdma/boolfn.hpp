#pragma once

#include <cstdint>
#include <vector>

namespace mccdma {

using BitVec = std::vector<std::uint8_t>;

// Truth tables are kept as dense arrays, so the variable count is capped.
inline constexpr int kMaxVars = 16;

/// Boolean function of m variables in algebraic normal form.
///
/// coeffs[i] is the mod-2 coefficient of the monomial prod_l x_l^{i_l},
/// where i = sum_l i_l * 2^l (LSB-first). The same LSB-first convention
/// indexes evaluation points and codeword positions everywhere in this
/// library; mixing conventions silently permutes codewords.
struct BooleanFunction {
    int m = 0;
    BitVec coeffs;  // 2^m entries, each 0 or 1

    BooleanFunction(int m, BitVec coeffs);
    static BooleanFunction zero(int m);
};

/// Binary codeword of length 2^m; bits[j] = f(j_0, ..., j_{m-1}).
struct Codeword {
    int m = 0;
    BitVec bits;  // 2^m entries
};

/// Evaluate f at one point (m bits, LSB-first). Throws on size mismatch.
int eval_boolean(const BooleanFunction& f, const BitVec& point);

/// Truth table of f over all 2^m points in increasing index order.
Codeword codeword_of(const BooleanFunction& f);

/// Algebraic degree: max weight of a monomial index with a set coefficient.
/// The zero function has degree 0 by convention.
int degree(const BooleanFunction& f);

/// b(x_0..x_{m-1}) = (1 + x_{m-1}) f + x_{m-1} g for f, g on m-1 variables.
/// The codeword of b is the concatenation codeword_of(f) || codeword_of(g).
BooleanFunction compose_halves(const BooleanFunction& f, const BooleanFunction& g);

/// sum_i v_i x_i + e.
BooleanFunction affine(int m, const BitVec& v, int e);

}  // namespace mccdma
