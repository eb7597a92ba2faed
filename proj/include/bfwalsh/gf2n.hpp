#ifndef BFWALSH_GF2N_HPP
#define BFWALSH_GF2N_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bfwalsh {

/// Element of GF(2^n): little-endian coefficient bits of the polynomial-basis
/// representation, packed into a word. Bit i is the coefficient of x^i.
using FieldElement = std::uint32_t;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// GF(2^n) defined by an irreducible modulus polynomial over GF(2).
///
/// When the class of x generates the multiplicative group (the modulus is
/// primitive), discrete log/antilog tables are built and multiplication goes
/// through them; otherwise a carry-less multiply with modular reduction is
/// used. Immutable after construction and safe to share across threads.
class FieldSpec {
  public:
    /// poly holds the modulus coefficients, bit n (the leading term) included.
    FieldSpec(int n, std::uint64_t poly);

    int n() const { return n_; }
    std::uint64_t poly() const { return poly_; }
    std::uint32_t order() const { return order_; }              // 2^n
    std::uint32_t group_order() const { return order_ - 1; }    // 2^n - 1
    FieldElement generator() const { return 2; }                // class of x
    bool has_log_tables() const { return !log_.empty(); }

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement sqr(FieldElement a) const { return mul(a, a); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    FieldElement inv(FieldElement a) const;

    /// Power of the generator, exponent taken mod 2^n - 1.
    FieldElement gen_pow(std::uint64_t e) const { return pow(generator(), e % group_order()); }

    /// Discrete log base generator (log-table mode only, a != 0).
    std::uint32_t log(FieldElement a) const;

    /// Relative trace Tr_k^n: sum of a^{2^{ki}}, lands in GF(2^k).
    FieldElement trace(int k, FieldElement a) const;

    /// Absolute trace Tr_1^n as a bit.
    int trace_bit(FieldElement a) const;

    /// Trace Tr_1^m of an element of the subfield GF(2^m) (computed inside
    /// GF(2^n) as the m-fold Frobenius sum). Throws if a is not in GF(2^m).
    int subfield_trace_bit(int m, FieldElement a) const;

    bool in_subfield(int m, FieldElement a) const;

    /// All 2^m elements of the subfield GF(2^m), m | n.
    std::vector<FieldElement> subfield_elements(int m) const;

    /// Parses "g^k", "g", "0", "1" or a hex coefficient vector "0x..".
    FieldElement parse_element(const std::string& s) const;
    /// Serializes as "g^k" (log-table mode) or "0"/hex.
    std::string format_element(FieldElement a) const;

  private:
    void check_range(FieldElement a) const;
    FieldElement mul_clmul(FieldElement a, FieldElement b) const;

    int n_;
    std::uint64_t poly_;
    std::uint32_t order_;
    std::vector<std::uint32_t> log_;   // element -> discrete log of generator
    std::vector<FieldElement> exp_;    // discrete log -> element
};

/// Validated field construction; throws FieldError("RejectsReducible ...") on
/// a reducible modulus. 2 <= n <= 24.
FieldSpec field_new(int n, std::uint64_t poly);

/// Default modulus registry: the worked-example polynomials for n in {6, 8, 9}
/// and standard primitive polynomials elsewhere (2 <= n <= 24).
std::uint64_t default_poly(int n);

/// Loads {"n": int, "poly_hex": string} (JSON) and builds the field.
FieldSpec field_from_config(const std::string& path);

/// Irreducibility of a degree-n polynomial over GF(2),
/// via gcd(x^{2^i} - x, poly) = 1 for 1 <= i <= n/2.
bool poly_irreducible(int n, std::uint64_t poly);

}  // namespace bfwalsh

#endif
