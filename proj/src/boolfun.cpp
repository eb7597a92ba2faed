#include "bfwalsh/boolfun.hpp"

#include <bit>

namespace bfwalsh {

std::string BooleanFunction::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve((table_.size() + 3) / 4);
    for (std::size_t i = 0; i < table_.size(); i += 4) {
        unsigned d = 0;
        for (unsigned j = 0; j < 4 && i + j < table_.size(); ++j)
            d |= static_cast<unsigned>(table_[i + j]) << j;
        out.push_back(digits[d]);
    }
    return out;
}

BooleanFunction from_trace_monomial(const FieldSpec& spec, int k, FieldElement c,
                                    std::uint64_t e) {
    if (k <= 0 || spec.n() % k != 0) throw FieldError("KNotDivisor");
    BooleanFunction f(&spec, spec.n());
    for (std::uint32_t x = 0; x < spec.order(); ++x) {
        FieldElement arg = spec.mul(c, spec.pow(x, e));
        int bit = (k == spec.n()) ? spec.trace_bit(arg) : spec.subfield_trace_bit(k, arg);
        f.set(x, bit);
    }
    return f;
}

BooleanFunction xor_fn(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n_vars() != g.n_vars()) throw ShapeMismatch("ShapeMismatch");
    BooleanFunction out(f.field(), f.n_vars(), f.bivariate());
    for (std::size_t i = 0; i < f.size(); ++i) out.set(i, f[i] ^ g[i]);
    return out;
}

BooleanFunction and_fn(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n_vars() != g.n_vars()) throw ShapeMismatch("ShapeMismatch");
    BooleanFunction out(f.field(), f.n_vars(), f.bivariate());
    for (std::size_t i = 0; i < f.size(); ++i) out.set(i, f[i] & g[i]);
    return out;
}

Anf anf(const BooleanFunction& f) {
    Anf a;
    a.n_vars = f.n_vars();
    a.coeffs = f.table();
    const std::size_t sz = a.coeffs.size();
    for (std::size_t step = 1; step < sz; step <<= 1)
        for (std::size_t i = 0; i < sz; i += step << 1)
            for (std::size_t j = i; j < i + step; ++j)
                a.coeffs[j + step] ^= a.coeffs[j];
    return a;
}

int algebraic_degree(const BooleanFunction& f) {
    Anf a = anf(f);
    int deg = 0;
    for (std::size_t mask = 1; mask < a.coeffs.size(); ++mask)
        if (a.coeffs[mask]) deg = std::max(deg, std::popcount(mask));
    return deg;
}

int weight(const BooleanFunction& f) {
    int w = 0;
    for (std::size_t i = 0; i < f.size(); ++i) w += f[i];
    return w;
}

bool is_balanced(const BooleanFunction& f) {
    return weight(f) == static_cast<int>(f.size() / 2);
}

FieldElement cubic_symmetric_sum(const FieldSpec& spec, FieldElement u, FieldElement v,
                                 FieldElement r, int i, int j, int k) {
    if (i == j || j == k || i == k) throw FieldError("IndicesNotDistinct");
    const int idx[6][3] = {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}};
    FieldElement acc = 0;
    for (const auto& p : idx) {
        FieldElement t = spec.mul(spec.pow(u, 1u << p[0]),
                                  spec.mul(spec.pow(v, 1u << p[1]), spec.pow(r, 1u << p[2])));
        acc ^= t;
    }
    return acc;
}

}  // namespace bfwalsh
