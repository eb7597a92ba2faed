#include <doctest.h>

#include <random>

#include "bfwalsh/constructions.hpp"
#include "bfwalsh/walsh.hpp"

using namespace bfwalsh;

namespace {

BooleanFunction random_function(const FieldSpec& spec, std::mt19937_64& rng) {
    BooleanFunction f(&spec, spec.n());
    for (std::size_t i = 0; i < f.size(); ++i) f.set(i, rng() & 1);
    return f;
}

}  // namespace

TEST_CASE("fwht of the zero function and a linear function") {
    FieldSpec spec = field_new(6, 0x5B);
    BooleanFunction zero(&spec, 6);
    WalshSpectrum s = fwht(zero);
    CHECK(s.values[0] == 64);
    for (std::size_t a = 1; a < s.values.size(); ++a) CHECK(s.values[a] == 0);
    CHECK(s.distribution() == Distribution{{64, 1}, {0, 63}});

    FieldElement c = spec.gen_pow(21);
    WalshSpectrum sl = fwht(from_trace_monomial(spec, 6, c, 1));
    for (std::uint32_t a = 0; a < spec.order(); ++a)
        CHECK(sl.values[a] == (a == c ? 64 : 0));
}

TEST_CASE("fwht equals the naive oracle on random functions") {
    std::mt19937_64 rng(11);
    for (int n : {4, 6, 8, 10}) {
        FieldSpec spec = field_new(n, default_poly(n));
        for (int trial = 0; trial < 5; ++trial) {
            BooleanFunction f = random_function(spec, rng);
            WalshSpectrum s = fwht(f);
            CHECK(s.parseval_holds());
            for (std::uint32_t a = 0; a < spec.order(); ++a)
                CHECK(s.values[a] == naive_walsh(f, a));
        }
    }
}

TEST_CASE("spectrum at zero counts the weight") {
    FieldSpec spec = field_new(8, 0x11D);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        BooleanFunction f = random_function(spec, rng);
        CHECK(fwht(f).values[0] == 256 - 2 * weight(f));
    }
}

TEST_CASE("kasami spectrum matches its closed form") {
    FieldSpec spec = field_new(8, 0x11D);
    FieldElement lam = spec.gen_pow(17);
    WalshSpectrum s = fwht(kasami(spec, 4, lam));
    FieldElement li = spec.inv(lam);
    for (std::uint32_t a = 0; a < spec.order(); ++a) {
        int bit = spec.subfield_trace_bit(4, spec.mul(li, spec.pow(a, 17)));
        CHECK(s.values[a] == -16 * (bit ? -1 : 1));
    }
    CHECK(classify(s).tag == SpectrumTag::Bent);
}

TEST_CASE("classification") {
    FieldSpec spec = field_new(8, 0x11D);
    // worked five-valued parameter set at n = 8
    ConstructionReport rep = kasami_triple_construct(spec, 4, spec.gen_pow(17), spec.gen_pow(10),
                                            spec.gen_pow(9), spec.gen_pow(3));
    CHECK(rep.measured_class == SpectrumTag::FiveValued);
    CHECK(rep.measured_distribution ==
          Distribution{{0, 96}, {16, 72}, {-16, 56}, {32, 16}, {-32, 16}});

    // the constant function is plateaued with the full amplitude 2^n
    BooleanFunction zero(&spec, 8);
    SpectrumClass zc = classify(fwht(zero));
    CHECK(zc.tag == SpectrumTag::Plateaued);
    CHECK(zc.amplitude == 256);
}

TEST_CASE("bent is never reported on an odd number of variables") {
    std::mt19937_64 rng(23);
    for (int n : {3, 5, 7}) {
        FieldSpec spec = field_new(n, default_poly(n));
        for (int trial = 0; trial < 20; ++trial)
            CHECK(classify(fwht(random_function(spec, rng))).tag != SpectrumTag::Bent);
    }
}

TEST_CASE("a three-valued spectrum below the semi-bent amplitude is plateaued") {
    // Tr(x^9) on GF(2^6) has spectrum {0, +-16}: amplitude 2^4, not 2^{6/2+1}...
    // actually 2^4 = 2^{6/2+1}; use a product of two disjoint linear functions
    // on 4 variables instead: spectrum {0, +-8} with amplitude 2^3 > 2^{4/2}.
    FieldSpec spec = field_new(4, 0x13);
    BooleanFunction f(&spec, 4);
    for (std::uint32_t x = 0; x < 16; ++x) f.set(x, (x & 1) & ((x >> 1) & 1));
    WalshSpectrum s = fwht(f);
    SpectrumClass c = classify(s);
    CHECK(c.tag == SpectrumTag::SemiBent);  // {0, +-8} = {0, +-2^{n/2+1}} at n=4
}

TEST_CASE("dual of a bent function") {
    FieldSpec spec = field_new(6, 0x5B);
    BooleanFunction g = kasami(spec, 3, 1);
    WalshSpectrum s = fwht(g);
    BooleanFunction dual = dual_of_bent(s, g);
    // closed form: dual(a) = Tr_1^m(a^{2^m+1}) + 1
    for (std::uint32_t a = 0; a < spec.order(); ++a)
        CHECK(dual[a] == (spec.subfield_trace_bit(3, spec.pow(a, 9)) ^ 1));
    // duality closure: the dual is bent and its dual is g again
    WalshSpectrum sd = fwht(dual);
    CHECK(classify(sd).tag == SpectrumTag::Bent);
    CHECK(dual_of_bent(sd, dual).table() == g.table());

    BooleanFunction zero(&spec, 6);
    CHECK_THROWS_AS(dual_of_bent(fwht(zero), zero), NotBent);
}

TEST_CASE("spectrum JSON export") {
    FieldSpec spec = field_new(4, 0x13);
    BooleanFunction zero(&spec, 4);
    WalshSpectrum s = fwht(zero);
    CHECK(s.to_json("Other") ==
          "{\"n\": 4, \"distribution\": {\"0\": 15, \"16\": 1}, \"class\": \"Other\"}");
}
