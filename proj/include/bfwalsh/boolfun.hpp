#ifndef BFWALSH_BOOLFUN_HPP
#define BFWALSH_BOOLFUN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bfwalsh/gf2n.hpp"

namespace bfwalsh {

struct ShapeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Truth-table Boolean function on GF(2^n) (univariate) or on
/// GF(2^m) x GF(2^m) (bivariate, index = bits(x) + 2^m * bits(y)).
/// The field pointer refers to the evaluation field (the subfield GF(2^m)
/// for bivariate functions) and must outlive the function.
class BooleanFunction {
  public:
    BooleanFunction(const FieldSpec* field, int n_vars, bool bivariate = false)
        : field_(field), n_vars_(n_vars), bivariate_(bivariate),
          table_(std::size_t{1} << n_vars, 0) {}

    int n_vars() const { return n_vars_; }
    bool bivariate() const { return bivariate_; }
    const FieldSpec* field() const { return field_; }
    std::size_t size() const { return table_.size(); }

    std::uint8_t operator[](std::size_t i) const { return table_[i]; }
    void set(std::size_t i, int bit) { table_[i] = static_cast<std::uint8_t>(bit & 1); }

    const std::vector<std::uint8_t>& table() const { return table_; }

    /// Hex export, lowest index = least-significant bit of the first digit.
    std::string to_hex() const;

  private:
    const FieldSpec* field_;
    int n_vars_;
    bool bivariate_;
    std::vector<std::uint8_t> table_;
};

/// ANF coefficients over the monomial basis; bit at mask M is the coefficient
/// of the product of the variables in M.
struct Anf {
    int n_vars = 0;
    std::vector<std::uint8_t> coeffs;
};

/// table[x] = Tr_1^k(c * x^e). k = n gives the absolute trace; k < n requires
/// the argument to lie in GF(2^k) for every x (SubfieldViolation otherwise).
BooleanFunction from_trace_monomial(const FieldSpec& spec, int k, FieldElement c,
                                    std::uint64_t e);

BooleanFunction xor_fn(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction and_fn(const BooleanFunction& f, const BooleanFunction& g);

/// Binary Moebius transform (self-inverse).
Anf anf(const BooleanFunction& f);

/// Max monomial weight with a nonzero ANF coefficient; 0 for constants.
int algebraic_degree(const BooleanFunction& f);

int weight(const BooleanFunction& f);
bool is_balanced(const BooleanFunction& f);

/// Sum of u^{2^i} v^{2^j} r^{2^k} over all six permutations of (i, j, k);
/// the coefficient of the candidate cubic term x^{2^i+2^j+2^k}.
FieldElement cubic_symmetric_sum(const FieldSpec& spec, FieldElement u, FieldElement v,
                                 FieldElement r, int i, int j, int k);

}  // namespace bfwalsh

#endif
