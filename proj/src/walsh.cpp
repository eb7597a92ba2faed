#include "bfwalsh/walsh.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace bfwalsh {

std::string to_string(SpectrumTag tag) {
    switch (tag) {
        case SpectrumTag::Bent: return "Bent";
        case SpectrumTag::SemiBent: return "SemiBent";
        case SpectrumTag::FiveValued: return "FiveValued";
        case SpectrumTag::Plateaued: return "Plateaued";
        case SpectrumTag::Other: return "Other";
    }
    return "Other";
}

std::map<std::int32_t, std::uint32_t> WalshSpectrum::distribution() const {
    std::map<std::int32_t, std::uint32_t> d;
    for (auto v : values) ++d[v];
    return d;
}

bool WalshSpectrum::parseval_holds() const {
    std::uint64_t sum = 0;
    for (auto v : values) sum += static_cast<std::uint64_t>(static_cast<std::int64_t>(v) * v);
    return sum == (std::uint64_t{1} << (2 * n_vars));
}

std::string WalshSpectrum::to_json(const std::string& cls) const {
    std::ostringstream os;
    os << "{\"n\": " << n_vars << ", \"distribution\": {";
    bool first = true;
    for (auto& [v, c] : distribution()) {
        if (!first) os << ", ";
        first = false;
        os << "\"" << v << "\": " << c;
    }
    os << "}, \"class\": \"" << cls << "\"}";
    return os.str();
}

namespace {

// The butterfly computes correlations against the plain dot product a.x on
// coefficient bits, but the spectrum is defined against the trace pairing
// Tr(ax). They differ by the (invertible, symmetric) Gram matrix of the
// trace form in the polynomial basis: Tr(ax) = tau(a).x with
// tau(a)_j = sum_i a_i Tr(x^i x^j). Re-index the output through tau.
std::vector<std::uint32_t> gram_rows(const FieldSpec& spec) {
    std::vector<std::uint32_t> rows(spec.n());
    for (int i = 0; i < spec.n(); ++i) {
        std::uint32_t r = 0;
        for (int j = 0; j < spec.n(); ++j)
            r |= static_cast<std::uint32_t>(
                     spec.trace_bit(spec.mul(FieldElement{1} << i, FieldElement{1} << j)))
                 << j;
        rows[i] = r;
    }
    return rows;
}

std::uint32_t apply_rows(const std::vector<std::uint32_t>& rows, std::uint32_t a) {
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((a >> i) & 1) t ^= rows[i];
    return t;
}

}  // namespace

WalshSpectrum fwht(const BooleanFunction& f) {
    if (f.n_vars() > 24) throw std::runtime_error("TooLarge: n_vars > 24");
    WalshSpectrum s;
    s.n_vars = f.n_vars();
    std::vector<std::int32_t> w(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) w[i] = f[i] ? -1 : 1;
    for (std::size_t step = 1; step < w.size(); step <<= 1) {
        for (std::size_t i = 0; i < w.size(); i += step << 1) {
            for (std::size_t j = i; j < i + step; ++j) {
                std::int32_t x = w[j];
                std::int32_t y = w[j + step];
                w[j] = x + y;
                w[j + step] = x - y;
            }
        }
    }
    const FieldSpec& spec = *f.field();
    std::vector<std::uint32_t> rows = gram_rows(spec);
    s.values.resize(w.size());
    if (f.bivariate()) {
        const int m = spec.n();
        const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
        for (std::uint32_t a = 0; a < w.size(); ++a)
            s.values[a] = w[apply_rows(rows, a & mask) |
                            (apply_rows(rows, a >> m) << m)];
    } else {
        for (std::uint32_t a = 0; a < w.size(); ++a) s.values[a] = w[apply_rows(rows, a)];
    }
    return s;
}

std::int32_t naive_walsh(const BooleanFunction& f, FieldElement a) {
    const FieldSpec& spec = *f.field();
    std::int32_t acc = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        int bit = f[x] ^ spec.trace_bit(spec.mul(a, x));
        acc += bit ? -1 : 1;
    }
    return acc;
}

std::int32_t naive_walsh(const BooleanFunction& f, FieldElement a1, FieldElement a2) {
    const FieldSpec& spec = *f.field();
    const std::uint32_t m_order = spec.order();
    std::int32_t acc = 0;
    for (std::uint32_t y = 0; y < m_order; ++y) {
        for (std::uint32_t x = 0; x < m_order; ++x) {
            int bit = f[x + m_order * y] ^
                      spec.trace_bit(spec.add(spec.mul(a1, x), spec.mul(a2, y)));
            acc += bit ? -1 : 1;
        }
    }
    return acc;
}

SpectrumClass classify(const WalshSpectrum& s) {
    SpectrumClass c;
    std::set<std::int32_t> vals(s.values.begin(), s.values.end());
    c.witness.assign(vals.begin(), vals.end());

    const int n = s.n_vars;
    const bool even = (n % 2 == 0);
    const std::int32_t bent_amp = even ? (std::int32_t{1} << (n / 2)) : 0;
    const std::int32_t sb_amp = even ? (std::int32_t{1} << (n / 2 + 1))
                                     : (std::int32_t{1} << ((n + 1) / 2));

    auto subset_of = [&](std::initializer_list<std::int32_t> allowed) {
        return std::all_of(vals.begin(), vals.end(), [&](std::int32_t v) {
            return std::find(allowed.begin(), allowed.end(), v) != allowed.end();
        });
    };

    if (even && subset_of({bent_amp, -bent_amp})) {
        c.tag = SpectrumTag::Bent;
        return c;
    }
    if (even && vals == std::set<std::int32_t>{-2 * bent_amp, -bent_amp, 0, bent_amp, 2 * bent_amp}) {
        c.tag = SpectrumTag::FiveValued;
        return c;
    }
    if (subset_of({0, sb_amp, -sb_amp}) && vals.count(0) &&
        (vals.count(sb_amp) || vals.count(-sb_amp))) {
        c.tag = SpectrumTag::SemiBent;
        return c;
    }
    // Three-valued {0, +-A} for a power-of-two A that is not the semi-bent
    // amplitude.
    std::int32_t amp = 0;
    for (auto v : vals)
        if (v != 0) amp = std::max(amp, std::abs(v));
    if (amp > 0 && (amp & (amp - 1)) == 0 && subset_of({0, amp, -amp}) && vals.count(0)) {
        c.tag = SpectrumTag::Plateaued;
        c.amplitude = amp;
        return c;
    }
    c.tag = SpectrumTag::Other;
    return c;
}

BooleanFunction dual_of_bent(const WalshSpectrum& s, const BooleanFunction& f) {
    if (classify(s).tag != SpectrumTag::Bent) throw NotBent("NotBent");
    BooleanFunction dual(f.field(), f.n_vars(), f.bivariate());
    for (std::size_t a = 0; a < s.values.size(); ++a) dual.set(a, s.values[a] < 0);
    return dual;
}

}  // namespace bfwalsh
