#ifndef BFWALSH_CONSTRUCTIONS_HPP
#define BFWALSH_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfwalsh/boolfun.hpp"
#include "bfwalsh/walsh.hpp"

namespace bfwalsh {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConditionTriple {
    int t1 = 0, t2 = 0, t3 = 0;
    bool all_zero() const { return t1 == 0 && t2 == 0 && t3 == 0; }
    bool operator==(const ConditionTriple&) const = default;
};

using Distribution = std::map<std::int32_t, std::uint32_t>;

/// Prediction-vs-measurement record for one parameter choice.
struct ConstructionReport {
    std::string construction;
    std::map<std::string, std::string> params;
    std::optional<ConditionTriple> conditions;
    SpectrumTag predicted_class = SpectrumTag::Other;
    std::optional<Distribution> predicted_distribution;
    SpectrumTag measured_class = SpectrumTag::Other;
    Distribution measured_distribution;
    bool match = false;
    int degree = 0;

    std::string to_json() const;
};

/// An element pair of GF(2^m) x GF(2^m) for the bivariate constructions.
struct Pair {
    FieldElement first = 0, second = 0;
    bool operator==(const Pair&) const = default;
    Pair operator^(const Pair& o) const { return {first ^ o.first, second ^ o.second}; }
    bool zero() const { return first == 0 && second == 0; }
};

// ---- triple-product combination ----

/// f(x) = g(x) + Tr(ux) Tr(vx) Tr(rx).
BooleanFunction triple_product_combine(const BooleanFunction& g, FieldElement u, FieldElement v,
                               FieldElement r);

/// The 8-term Walsh decomposition of triple_product_combine (4-term when r = v),
/// evaluated at a from the spectrum of g. Exact; throws on a non-integral
/// combination, which signals a caller bug.
std::int32_t triple_product_walsh(const FieldSpec& spec, const WalshSpectrum& g,
                                    FieldElement u, FieldElement v, FieldElement r,
                                    FieldElement a);

// ---- quadratic base functions ----

/// g(x) = Tr_1^m(lambda x^{2^m+1}) on GF(2^{2m}), lambda in GF(2^m)*.
BooleanFunction kasami(const FieldSpec& spec, int m, FieldElement lambda);

/// g(x) = Tr_1^{4k}(lambda x^{2^k+1}) on GF(2^{4k}).
BooleanFunction gold(const FieldSpec& spec, int k, FieldElement lambda);

// ---- Kasami-based family ----

ConditionTriple kasami_triple_conditions(const FieldSpec& spec, int m, FieldElement lambda,
                                FieldElement u, FieldElement v, FieldElement r);
std::pair<SpectrumTag, std::optional<Distribution>> kasami_triple_predict(const ConditionTriple& c,
                                                                 int n);
ConstructionReport kasami_triple_construct(const FieldSpec& spec, int m, FieldElement lambda,
                                  FieldElement u, FieldElement v, FieldElement r);

struct DoublePrediction {
    SpectrumTag tag = SpectrumTag::Other;
    bool balanced = false;
};
DoublePrediction kasami_double_predict(const FieldSpec& spec, int m, FieldElement lambda,
                               FieldElement u, FieldElement v);
ConstructionReport kasami_double_construct(const FieldSpec& spec, int m, FieldElement lambda,
                                  FieldElement u, FieldElement v);

// ---- Gold-based family ----

/// lambda + lambda^{2^{3k}} = 1 on GF(2^{4k}).
bool gold_lambda_valid(const FieldSpec& spec, int k, FieldElement lambda);
/// Exhaustive bijectivity check of l(x) = lambda x + lambda^{2^k} x^{2^{2k}}.
bool gold_map_is_permutation(const FieldSpec& spec, int k, FieldElement lambda);

ConditionTriple gold_triple_conditions(const FieldSpec& spec, int k, FieldElement lambda,
                                FieldElement u, FieldElement v, FieldElement r);
ConstructionReport gold_triple_construct(const FieldSpec& spec, int k,
                                              FieldElement lambda, FieldElement u,
                                              FieldElement v, FieldElement r);
DoublePrediction gold_double_predict(const FieldSpec& spec, int k, FieldElement lambda,
                              FieldElement u, FieldElement v);
ConstructionReport gold_double_construct(const FieldSpec& spec, int k, FieldElement lambda,
                                  FieldElement u, FieldElement v);

// ---- Niho-exponent family ----

struct NihoParams {
    int m = 0, k = 0;
    std::vector<std::uint64_t> exponents;  // the 2^{k-1}-1 trailing Niho exponents
    FieldElement alpha = 0;                // alpha + alpha^{2^m} = 1
    std::uint64_t dual_exponent = 0;       // inverse of 2^k-1 mod 2^m-1
};

/// e_i = (2^m-1) s_i + 1 with s_i = i (2^k)^{-1} mod (2^m+1), i = 1..2^{k-1}-1.
std::vector<std::uint64_t> niho_exponents(int m, int k);

NihoParams niho_params(const FieldSpec& spec, int m, int k);

/// g = Tr_1^m(x^{2^m+1}) + sum_i Tr_1^n(x^{e_i}).
BooleanFunction niho_bent(const FieldSpec& spec, int m, int k);

/// Closed-form dual bit of niho_bent at a, evaluated as printed:
/// Tr_1^m((alpha A + alpha^{2^{n-k}} + a^{2^m}) A^{1/(2^k-1)}), A = 1+a+a^{2^m}.
int niho_dual_closed_form(const FieldSpec& spec, const NihoParams& p, FieldElement a);

ConstructionReport niho_triple_construct(const FieldSpec& spec, int m, int k, FieldElement u,
                                  FieldElement v, FieldElement r);

// ---- Maiorana-McFarland family ----

/// A permutation of GF(2^m) stored as forward and inverse evaluation tables.
class Permutation {
  public:
    static Permutation from_table(std::vector<FieldElement> table);
    /// y -> y^{2^j}, always a linearized permutation.
    static Permutation frobenius(const FieldSpec& spec, int j);
    /// y -> y^d with gcd(d, 2^m-1) = 1 (0 maps to 0).
    static Permutation power(const FieldSpec& spec, std::uint64_t d);

    FieldElement operator()(FieldElement y) const { return fwd_[y]; }
    FieldElement inverse(FieldElement x) const { return inv_[x]; }
    std::size_t size() const { return fwd_.size(); }
    bool is_additive() const;

  private:
    std::vector<FieldElement> fwd_, inv_;
};

/// g(x, y) = Tr_1^m(x pi(y)) + h(y) on GF(2^m) x GF(2^m).
BooleanFunction mm_construct(const FieldSpec& spec_m, const Permutation& pi,
                             const BooleanFunction& h);
/// Eq-form dual bit: Tr_1^m(a2 pi^{-1}(a1)) + h(pi^{-1}(a1)).
int mm_dual_closed_form(const FieldSpec& spec_m, const Permutation& pi, const BooleanFunction& h,
                 FieldElement a1, FieldElement a2);

ConditionTriple mm_triple_conditions(const FieldSpec& spec_m, const Permutation& pi, Pair u,
                                Pair v, Pair r);
std::pair<SpectrumTag, std::optional<Distribution>> mm_triple_predict(const ConditionTriple& c,
                                                                 int n);
ConstructionReport mm_triple_construct(const FieldSpec& spec_m, const Permutation& pi, Pair u,
                                  Pair v, Pair r);

SpectrumTag mm_double_predict(const FieldSpec& spec_m, const Permutation& pi, Pair u, Pair v);
ConstructionReport mm_double_construct(const FieldSpec& spec_m, const Permutation& pi, Pair u,
                                  Pair v);

/// d with d (2^s+1) = 1 mod 2^m-1 (m/s odd makes the inverse exist).
std::uint64_t mm_power_exponent(int m, int s);
ConstructionReport mm_power_construct(const FieldSpec& spec_m, int s, Pair u, Pair v);

/// Bivariate linear form Tr_1^m(u1 x + u2 y).
BooleanFunction linear_form(const FieldSpec& spec_m, Pair u);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod);

}  // namespace bfwalsh

#endif
