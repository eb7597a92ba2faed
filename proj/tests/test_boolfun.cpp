#include <doctest.h>

#include <bit>
#include <random>

#include "bfwalsh/boolfun.hpp"
#include "bfwalsh/walsh.hpp"

using namespace bfwalsh;

namespace {

BooleanFunction random_function(const FieldSpec& spec, std::mt19937_64& rng) {
    BooleanFunction f(&spec, spec.n());
    for (std::size_t i = 0; i < f.size(); ++i) f.set(i, rng() & 1);
    return f;
}

}  // namespace

TEST_CASE("trace monomial basics") {
    FieldSpec spec = field_new(6, 0x5B);
    BooleanFunction zero = from_trace_monomial(spec, 6, 0, 3);
    CHECK(weight(zero) == 0);

    BooleanFunction lin = from_trace_monomial(spec, 6, spec.gen_pow(5), 1);
    for (std::uint32_t x = 0; x < spec.order(); ++x)
        CHECK(lin[x] == spec.trace_bit(spec.mul(spec.gen_pow(5), x)));
    CHECK(is_balanced(lin));
}

TEST_CASE("subfield-codomain trace monomial rejects non-subfield arguments") {
    FieldSpec spec = field_new(6, 0x5B);
    // x^9 = x^{2^3+1} maps into GF(2^3); exponent 1 does not
    CHECK_NOTHROW(from_trace_monomial(spec, 3, 1, 9));
    CHECK_THROWS_WITH_AS(from_trace_monomial(spec, 3, 1, 1), doctest::Contains("SubfieldViolation"),
                         FieldError);
}

TEST_CASE("xor and and are pointwise") {
    FieldSpec spec = field_new(4, 0x13);
    std::mt19937_64 rng(7);
    BooleanFunction f = random_function(spec, rng);
    BooleanFunction g = random_function(spec, rng);
    CHECK(weight(xor_fn(f, f)) == 0);
    BooleanFunction zero(&spec, 4);
    CHECK(xor_fn(f, zero).table() == f.table());
    CHECK(and_fn(f, f).table() == f.table());
    CHECK(weight(and_fn(f, zero)) == 0);
    BooleanFunction other(&spec, 3);
    CHECK_THROWS_AS(xor_fn(f, other), ShapeMismatch);
}

TEST_CASE("product of traces with u+v+r = 0 vanishes") {
    FieldSpec spec = field_new(6, 0x5B);
    FieldElement u = spec.gen_pow(5), v = spec.gen_pow(11), r = u ^ v;
    BooleanFunction fu = from_trace_monomial(spec, 6, u, 1);
    BooleanFunction fv = from_trace_monomial(spec, 6, v, 1);
    BooleanFunction fr = from_trace_monomial(spec, 6, r, 1);
    CHECK(weight(and_fn(and_fn(fu, fv), fr)) == 0);
}

TEST_CASE("anf is an involution") {
    std::mt19937_64 rng(42);
    for (int n : {4, 6, 8, 10, 12}) {
        FieldSpec spec = field_new(n, default_poly(n));
        BooleanFunction f = random_function(spec, rng);
        Anf a = anf(f);
        BooleanFunction as_fn(&spec, n);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) as_fn.set(i, a.coeffs[i]);
        CHECK(anf(as_fn).coeffs == f.table());
    }
}

TEST_CASE("degree conventions") {
    FieldSpec spec = field_new(4, 0x13);
    BooleanFunction zero(&spec, 4);
    CHECK(algebraic_degree(zero) == 0);
    BooleanFunction one(&spec, 4);
    for (std::size_t i = 0; i < one.size(); ++i) one.set(i, 1);
    CHECK(algebraic_degree(one) == 0);
    CHECK(algebraic_degree(from_trace_monomial(spec, 4, 1, 1)) == 1);
}

TEST_CASE("trace monomial degree equals the 2-weight of the exponent") {
    FieldSpec spec = field_new(6, 0x5B);
    std::mt19937_64 rng(3);
    for (std::uint64_t e = 1; e < spec.group_order(); ++e) {
        FieldElement c = 1 + rng() % (spec.order() - 1);
        BooleanFunction f = from_trace_monomial(spec, 6, c, e);
        if (weight(f) == 0) continue;  // Tr(c x^e) can vanish identically
        CHECK(algebraic_degree(f) == std::popcount(e));
    }
}

TEST_CASE("degree of a sum is bounded by the max degree") {
    FieldSpec spec = field_new(6, 0x5B);
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        BooleanFunction f = random_function(spec, rng);
        BooleanFunction g = random_function(spec, rng);
        CHECK(algebraic_degree(xor_fn(f, g)) <=
              std::max(algebraic_degree(f), algebraic_degree(g)));
    }
}

TEST_CASE("cubic symmetric sum") {
    FieldSpec spec = field_new(6, 0x5B);
    FieldElement u = spec.gen_pow(1), v = spec.gen_pow(9), r = spec.gen_pow(27);
    CHECK(cubic_symmetric_sum(spec, u, u, r, 0, 1, 2) == 0);
    CHECK(cubic_symmetric_sum(spec, u, v, r, 0, 1, 2) == spec.gen_pow(45));
    CHECK_THROWS_AS(cubic_symmetric_sum(spec, u, v, r, 0, 0, 2), FieldError);

    FieldSpec spec8 = field_new(8, 0x11D);
    CHECK(cubic_symmetric_sum(spec8, spec8.gen_pow(212), spec8.gen_pow(10), spec8.gen_pow(16), 0,
                              1, 2) == spec8.gen_pow(8));
}

TEST_CASE("weight and balance") {
    FieldSpec spec = field_new(6, 0x5B);
    BooleanFunction zero(&spec, 6);
    CHECK(weight(zero) == 0);
    CHECK_FALSE(is_balanced(zero));
    CHECK(is_balanced(from_trace_monomial(spec, 6, spec.gen_pow(13), 1)));
}

TEST_CASE("hex export") {
    FieldSpec spec = field_new(2, 0x7);
    BooleanFunction f(&spec, 2);
    f.set(0, 1);
    f.set(3, 1);
    CHECK(f.to_hex() == "9");
}
