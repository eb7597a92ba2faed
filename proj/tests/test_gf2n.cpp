#include <doctest.h>

#include <map>

#include "bfwalsh/gf2n.hpp"

using namespace bfwalsh;

namespace {

// Schoolbook polynomial multiply-then-reduce, independent of the field's
// log-table path.
FieldElement schoolbook_mul(int n, std::uint64_t poly, FieldElement a, FieldElement b) {
    std::uint64_t acc = 0;
    for (int i = 0; i < n; ++i)
        if ((b >> i) & 1) acc ^= static_cast<std::uint64_t>(a) << i;
    for (int d = 2 * n - 2; d >= n; --d)
        if ((acc >> d) & 1) acc ^= poly << (d - n);
    return static_cast<FieldElement>(acc);
}

}  // namespace

TEST_CASE("field construction validates the modulus") {
    CHECK_NOTHROW(field_new(6, 0x5B));   // x^6+x^4+x^3+x+1
    CHECK_NOTHROW(field_new(8, 0x11D));  // x^8+x^4+x^3+x^2+1
    // x^4+x^2+1 = (x^2+x+1)^2
    CHECK_THROWS_WITH_AS(field_new(4, 0x15), doctest::Contains("RejectsReducible"), FieldError);
    CHECK_THROWS_AS(field_new(1, 0x3), FieldError);
    CHECK_THROWS_AS(field_new(25, 0x3), FieldError);
}

TEST_CASE("default registry polynomials are all primitive") {
    for (int n = 2; n <= 24; ++n) {
        FieldSpec spec = field_new(n, default_poly(n));
        CHECK(spec.has_log_tables());  // log tables require a primitive class of x
    }
}

TEST_CASE("addition is coefficient-wise xor") {
    FieldSpec spec = field_new(3, 0xB);
    for (FieldElement a = 0; a < spec.order(); ++a) {
        CHECK(spec.add(a, a) == 0);
        CHECK(spec.add(a, 0) == a);
    }
    CHECK(spec.add(0b010, 0b011) == 1);  // x + (x+1) = 1
}

TEST_CASE("multiplication agrees with the schoolbook oracle") {
    for (int n : {4, 6, 8}) {
        FieldSpec spec = field_new(n, default_poly(n));
        for (FieldElement a = 0; a < spec.order(); ++a)
            for (FieldElement b = a; b < spec.order(); ++b)
                CHECK(spec.mul(a, b) == schoolbook_mul(n, default_poly(n), a, b));
    }
}

TEST_CASE("generator powers multiply by exponent addition") {
    FieldSpec spec = field_new(6, 0x5B);
    for (std::uint32_t i = 0; i < spec.group_order(); ++i)
        for (std::uint32_t j = 0; j < spec.group_order(); j += 7)
            CHECK(spec.mul(spec.gen_pow(i), spec.gen_pow(j)) ==
                  spec.gen_pow((i + j) % spec.group_order()));
}

TEST_CASE("pow edge cases") {
    FieldSpec spec = field_new(6, 0x5B);
    CHECK(spec.pow(spec.generator(), spec.group_order()) == 1);
    CHECK(spec.pow(0, 5) == 0);
    CHECK(spec.pow(0, 0) == 1);
    for (FieldElement a = 1; a < spec.order(); ++a) {
        CHECK(spec.pow(a, 0) == 1);
        CHECK(spec.mul(a, spec.pow(a, 2)) == spec.pow(a, 3));
    }
}

TEST_CASE("inverse") {
    FieldSpec spec = field_new(6, 0x5B);
    CHECK(spec.inv(1) == 1);
    CHECK(spec.inv(spec.generator()) == spec.gen_pow(spec.group_order() - 1));
    CHECK_THROWS_AS(spec.inv(0), FieldError);
    for (FieldElement a = 1; a < spec.order(); ++a) {
        CHECK(spec.mul(a, spec.inv(a)) == 1);
        CHECK(spec.inv(spec.inv(a)) == a);
    }
}

TEST_CASE("trace basics and linearity") {
    for (int n : {6, 8}) {
        FieldSpec spec = field_new(n, default_poly(n));
        CHECK(spec.trace_bit(0) == 0);
        CHECK(spec.trace_bit(1) == n % 2);
        CHECK_THROWS_AS(spec.trace(5, 1), FieldError);
        for (FieldElement a = 0; a < spec.order(); ++a) {
            CHECK(spec.trace_bit(spec.mul(a, a)) == spec.trace_bit(a));
            for (FieldElement b = 0; b < spec.order(); b += 3)
                CHECK(spec.trace_bit(a ^ b) == (spec.trace_bit(a) ^ spec.trace_bit(b)));
        }
    }
}

TEST_CASE("trace transitivity through every intermediate subfield") {
    for (int n : {6, 8}) {
        FieldSpec spec = field_new(n, default_poly(n));
        for (int k = 1; k <= n; ++k) {
            if (n % k != 0) continue;
            for (FieldElement a = 0; a < spec.order(); ++a) {
                FieldElement mid = spec.trace(k, a);
                CHECK(spec.in_subfield(k, mid));
                CHECK(spec.subfield_trace_bit(k, mid) == spec.trace_bit(a));
            }
        }
    }
}

TEST_CASE("subfield elements are the Frobenius fixed points") {
    FieldSpec spec = field_new(6, 0x5B);
    CHECK(spec.subfield_elements(6).size() == 64);
    CHECK(spec.subfield_elements(1) == std::vector<FieldElement>{0, 1});
    auto sub = spec.subfield_elements(3);
    CHECK(sub.size() == 8);
    for (FieldElement a : sub) CHECK(spec.pow(a, 8) == a);
}

TEST_CASE("norm map is (2^m+1)-to-1 onto the subfield") {
    for (int n : {6, 8}) {
        int m = n / 2;
        FieldSpec spec = field_new(n, default_poly(n));
        std::map<FieldElement, int> counts;
        for (FieldElement a = 1; a < spec.order(); ++a)
            ++counts[spec.pow(a, (1u << m) + 1)];
        CHECK(counts.size() == (1u << m) - 1);
        for (auto& [img, c] : counts) {
            CHECK(spec.in_subfield(m, img));
            CHECK(c == (1 << m) + 1);
        }
    }
}

TEST_CASE("element parsing and formatting") {
    FieldSpec spec = field_new(8, 0x11D);
    CHECK(spec.parse_element("0") == 0);
    CHECK(spec.parse_element("1") == 1);
    CHECK(spec.parse_element("g") == 2);
    CHECK(spec.parse_element("g^17") == spec.gen_pow(17));
    CHECK(spec.parse_element("0x1d") == 0x1d);
    CHECK_THROWS_AS(spec.parse_element("q"), FieldError);
    for (FieldElement a = 0; a < spec.order(); ++a)
        CHECK(spec.parse_element(spec.format_element(a)) == a);
}
