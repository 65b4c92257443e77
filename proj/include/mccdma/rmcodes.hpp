#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mccdma/boolfn.hpp"

namespace mccdma {

/// Row order of a generator matrix. The explicit monomial order
/// (paper_eq23) is the one whose leading rows nest as
/// first-order < second-order < third-order code; the raw recursive order
/// does not have that property, so per-user PAPR guarantees require
/// paper_eq23.
enum class RowOrder { paper_eq23, recursive_raw };

struct GeneratorMatrix {
    int m = 0;
    RowOrder row_order = RowOrder::paper_eq23;
    std::vector<BitVec> rows;  // each of length 2^m, linearly independent

    int dim() const { return static_cast<int>(rows.size()); }
    int length() const { return 1 << m; }
};

enum class CodeFamily {
    rm1,          // first-order Reed-Muller R(1, m)
    br,           // recursive subcode of R(r, m), dimension 2^{r-1}(m-r+2)
    golay,        // Golay complementary coset family in R(2, m)
    rm_full_map,  // rate-1 mapping: the r = m case of the recursive family
    uncoded,      // baseline: no code, spreading rows assigned on demand
};

struct CodeSpec {
    CodeFamily family = CodeFamily::rm1;
    int r = 1;
    int m = 1;

    static CodeSpec rm1(int m);
    static CodeSpec br(int r, int m);
    static CodeSpec golay(int m);
    static CodeSpec rm_full_map(int m);
    static CodeSpec uncoded(int m);

    /// Code dimension W in message bits (uncoded: one bit per spreading row;
    /// golay has no message map, see golay_dimension_bits()).
    int dimension() const;
    std::size_t length() const { return std::size_t{1} << m; }
    double rate() const;
    /// m + log2(m!), the information content of the Golay family (real-valued).
    double golay_dimension_bits() const;
    /// Worst-case PAPR of a fully-loaded single-slot signal: 1 for rm1,
    /// 2^{r-1} for the recursive families, 2^{m - floor(m/2)} for golay.
    double papr_bound_linear() const;
    int dmin_lower() const;
};

/// Message of w active user bits zero-tailed to the code dimension W.
struct Message {
    BitVec bits;  // length W; bits[w..W-1] are zero
    int w = 0;
};

/// Pads w active bits with zeros up to dimension W.
Message zero_tailed(const BitVec& active, int dimension);
/// Message with bits = LSB-first binary of index (w = W); used by enumeration.
Message message_from_index(int dimension, std::uint64_t index);

struct BpskVector {
    std::vector<double> values;  // entries are exactly +1 or -1
};

/// Generator of R(1, m): rows [all-ones, x_0, ..., x_{m-1}].
GeneratorMatrix generator_rm1(int m);
/// r-1 recursions of the block form [[G, G], [0, G]] starting from
/// generator_rm1(m-r+1); row order recursive_raw.
GeneratorMatrix generator_recursive(int r, int m);
/// Explicit monomial-order generators (row order paper_eq23).
GeneratorMatrix generator_b2(int m);
GeneratorMatrix generator_b3(int m);
/// The generator the encoder/decoder pair agrees on: rm1 and the r = 2, 3
/// families get the explicit paper_eq23 matrices, everything else the
/// recursive construction. Throws for golay/uncoded.
GeneratorMatrix canonical_generator(const CodeSpec& spec);

Codeword encode(const Message& a, const GeneratorMatrix& G);

/// 2^W, guarded to W <= 24 (golay: distinct-codeword count).
std::uint64_t code_size(const CodeSpec& spec);
/// Calls fn for every message of the code exactly once, index order.
void enumerate_code(const CodeSpec& spec,
                    const std::function<void(const Message&, const Codeword&)>& fn);

/// sum_{i=0}^{m-2} x_{pi(i)} x_{pi(i+1)} + sum_i v_i x_i + e.
BooleanFunction golay_boolean(int m, const std::vector<int>& perm, const BitVec& v, int e);
/// Distinct codewords of the Golay coset family, 2 <= m <= 7. Reversed
/// permutations produce the same quadratic form, so candidates are
/// deduplicated by codeword value; emission order is deterministic
/// (permutations lexicographic, then v, then e, first occurrence wins).
void enumerate_golay(int m, const std::function<void(const Codeword&)>& fn);
std::uint64_t golay_code_size(int m);  // 2^{m+1} * m! / 2

BpskVector bpsk(const Codeword& b);

struct Rm1Decode {
    Message message;     // m+1 bits: [e, v_0, ..., v_{m-1}]
    double correlation;  // winning |WHT coefficient|
};

/// Maximum-likelihood soft decoding of R(1, m) by one Walsh-Hadamard
/// transform. Ties break to the smallest index and positive sign.
Rm1Decode fht_decode_rm1(const std::vector<double>& rcv);

/// Soft decoding of the r = 2, 3 families: strip each coset representative
/// spanned by the non-affine generator rows, FHT-decode the remainder, keep
/// the largest |correlation| (ties: smallest coset index, then the FHT rule).
Message coset_soft_decode(const std::vector<double>& rcv, const CodeSpec& spec);

}  // namespace mccdma
