#ifndef BFWALSH_WALSH_HPP
#define BFWALSH_WALSH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bfwalsh/boolfun.hpp"

namespace bfwalsh {

enum class SpectrumTag { Bent, SemiBent, FiveValued, Plateaued, Other };

std::string to_string(SpectrumTag tag);

struct SpectrumClass {
    SpectrumTag tag = SpectrumTag::Other;
    std::int32_t amplitude = 0;  // set for Plateaued
    std::vector<std::int32_t> witness;  // sorted distinct spectral values
};

/// Exact integer Walsh spectrum; values[a] = sum over x of
/// (-1)^{f(x) + <a,x>}. Immutable after computation.
struct WalshSpectrum {
    int n_vars = 0;
    std::vector<std::int32_t> values;

    std::map<std::int32_t, std::uint32_t> distribution() const;
    bool parseval_holds() const;
    std::string to_json(const std::string& cls) const;
};

/// In-place butterfly on the +-1 encoded table. n_vars <= 24.
WalshSpectrum fwht(const BooleanFunction& f);

/// Direct O(2^n) summation at one point; the independent test oracle.
std::int32_t naive_walsh(const BooleanFunction& f, FieldElement a);
/// Bivariate form with a = (a1, a2), scalar product Tr(a1 x + a2 y).
std::int32_t naive_walsh(const BooleanFunction& f, FieldElement a1, FieldElement a2);

SpectrumClass classify(const WalshSpectrum& s);

/// f~(a) = [values[a] < 0] for a Bent spectrum; throws NotBent otherwise.
BooleanFunction dual_of_bent(const WalshSpectrum& s, const BooleanFunction& f);

struct NotBent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bfwalsh

#endif
