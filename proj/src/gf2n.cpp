#include "bfwalsh/gf2n.hpp"

#include <fstream>

#include <json.hpp>

namespace bfwalsh {

namespace {

int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

// Carry-less product of two GF(2) polynomials.
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod) {
    const int dm = poly_degree(mod);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= mod << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        std::uint64_t r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return poly_mod(clmul(a, b), mod);
}

}  // namespace

bool poly_irreducible(int n, std::uint64_t poly) {
    if (poly_degree(poly) != n) return false;
    if ((poly & 1) == 0) return false;  // x divides
    // x^{2^i} mod poly, squaring i times.
    std::uint64_t xp = 2;
    for (int i = 1; i <= n / 2; ++i) {
        xp = poly_mulmod(xp, xp, poly);
        if (poly_gcd(xp ^ 2u, poly) != 1) return false;
    }
    return true;
}

FieldSpec::FieldSpec(int n, std::uint64_t poly) : n_(n), poly_(poly), order_(1u << n) {
    if (n < 2 || n > 24) throw FieldError("BadDegree: n must be in [2, 24]");
    if (poly_degree(poly) != n) throw FieldError("BadModulus: poly must be monic of degree n");
    if (!poly_irreducible(n, poly))
        throw FieldError("RejectsReducible: modulus factors over GF(2)");

    // Log tables keyed on the class of x; built only when x is primitive.
    std::vector<std::uint32_t> log(order_, 0);
    std::vector<FieldElement> exp;
    exp.reserve(order_ - 1);
    FieldElement cur = 1;
    bool primitive = true;
    for (std::uint32_t i = 0; i < order_ - 1; ++i) {
        if (cur == 1 && i != 0) {
            primitive = false;  // x has smaller order
            break;
        }
        exp.push_back(cur);
        log[cur] = i;
        cur = static_cast<FieldElement>(poly_mod(static_cast<std::uint64_t>(cur) << 1, poly_));
    }
    if (primitive && cur == 1) {
        log_ = std::move(log);
        exp_ = std::move(exp);
    }
}

void FieldSpec::check_range(FieldElement a) const {
    if (a >= order_) throw FieldError("ElementOutOfRange");
}

FieldElement FieldSpec::mul_clmul(FieldElement a, FieldElement b) const {
    return static_cast<FieldElement>(
        poly_mod(clmul(a, b), poly_));
}

FieldElement FieldSpec::mul(FieldElement a, FieldElement b) const {
    check_range(a);
    check_range(b);
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        std::uint32_t s = log_[a] + log_[b];
        if (s >= group_order()) s -= group_order();
        return exp_[s];
    }
    return mul_clmul(a, b);
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
    check_range(a);
    if (a == 0) return e == 0 ? 1 : 0;
    e %= group_order();
    if (!log_.empty()) {
        std::uint64_t s = (static_cast<std::uint64_t>(log_[a]) * e) % group_order();
        return exp_[s];
    }
    FieldElement acc = 1;
    FieldElement base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement FieldSpec::inv(FieldElement a) const {
    check_range(a);
    if (a == 0) throw FieldError("DivisionByZero");
    return pow(a, group_order() - 1);
}

std::uint32_t FieldSpec::log(FieldElement a) const {
    check_range(a);
    if (log_.empty()) throw FieldError("NoLogTables");
    if (a == 0) throw FieldError("DivisionByZero: log of zero");
    return log_[a];
}

FieldElement FieldSpec::trace(int k, FieldElement a) const {
    check_range(a);
    if (k <= 0 || n_ % k != 0) throw FieldError("KNotDivisor");
    FieldElement acc = 0;
    FieldElement t = a;
    for (int i = 0; i < n_ / k; ++i) {
        acc ^= t;
        for (int j = 0; j < k; ++j) t = mul(t, t);
    }
    return acc;
}

int FieldSpec::trace_bit(FieldElement a) const {
    return static_cast<int>(trace(1, a) & 1u);
}

bool FieldSpec::in_subfield(int m, FieldElement a) const {
    check_range(a);
    if (m <= 0 || n_ % m != 0) throw FieldError("KNotDivisor");
    return pow(a, 1u << m) == a;
}

int FieldSpec::subfield_trace_bit(int m, FieldElement a) const {
    if (!in_subfield(m, a)) throw FieldError("SubfieldViolation");
    FieldElement acc = 0;
    FieldElement t = a;
    for (int i = 0; i < m; ++i) {
        acc ^= t;
        t = mul(t, t);
    }
    if (acc > 1) throw FieldError("SubfieldViolation: trace not in GF(2)");
    return static_cast<int>(acc);
}

std::vector<FieldElement> FieldSpec::subfield_elements(int m) const {
    if (m <= 0 || n_ % m != 0) throw FieldError("KNotDivisor");
    std::vector<FieldElement> out;
    out.reserve(1u << m);
    for (std::uint32_t a = 0; a < order_; ++a)
        if (pow(a, 1u << m) == a) out.push_back(a);
    return out;
}

FieldElement FieldSpec::parse_element(const std::string& s) const {
    if (s.empty()) throw FieldError("ParseError: empty element");
    if (s == "0") return 0;
    if (s == "1") return 1;
    if (s == "g") return generator();
    if (s.rfind("g^", 0) == 0) {
        std::uint64_t e = std::stoull(s.substr(2));
        return gen_pow(e);
    }
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
        std::uint64_t v = std::stoull(s.substr(2), nullptr, 16);
        if (v >= order_) throw FieldError("ParseError: element out of range");
        return static_cast<FieldElement>(v);
    }
    throw FieldError("ParseError: expected g^k, 0, 1 or 0x..");
}

std::string FieldSpec::format_element(FieldElement a) const {
    if (a == 0) return "0";
    if (!log_.empty()) return "g^" + std::to_string(log_[a]);
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", a);
    return buf;
}

FieldSpec field_new(int n, std::uint64_t poly) { return FieldSpec(n, poly); }

std::uint64_t default_poly(int n) {
    switch (n) {
        case 2:  return 0x7;        // x^2+x+1
        case 3:  return 0xB;        // x^3+x+1
        case 4:  return 0x13;       // x^4+x+1
        case 5:  return 0x25;       // x^5+x^2+1
        case 6:  return 0x5B;       // x^6+x^4+x^3+x+1 (worked-example field)
        case 7:  return 0x83;       // x^7+x+1
        case 8:  return 0x11D;      // x^8+x^4+x^3+x^2+1 (worked-example field)
        case 9:  return 0x211;      // x^9+x^4+1 (worked-example field)
        case 10: return 0x409;      // x^10+x^3+1
        case 11: return 0x805;      // x^11+x^2+1
        case 12: return 0x1053;     // x^12+x^6+x^4+x+1
        case 13: return 0x201B;     // x^13+x^4+x^3+x+1
        case 14: return 0x4443;     // x^14+x^10+x^6+x+1
        case 15: return 0x8003;     // x^15+x+1
        case 16: return 0x1100B;    // x^16+x^12+x^3+x+1
        case 17: return 0x20009;    // x^17+x^3+1
        case 18: return 0x40081;    // x^18+x^7+1
        case 19: return 0x80027;    // x^19+x^5+x^2+x+1
        case 20: return 0x100009;   // x^20+x^3+1
        case 21: return 0x200005;   // x^21+x^2+1
        case 22: return 0x400003;   // x^22+x+1
        case 23: return 0x800021;   // x^23+x^5+1
        case 24: return 0x1000087;  // x^24+x^7+x^2+x+1
        default: throw FieldError("BadDegree: no default modulus for this n");
    }
}

FieldSpec field_from_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FieldError("ConfigError: cannot open " + path);
    nlohmann::json j;
    in >> j;
    int n = j.at("n").get<int>();
    std::uint64_t poly;
    if (j.contains("poly_hex")) {
        std::string h = j.at("poly_hex").get<std::string>();
        if (h.rfind("0x", 0) == 0) h = h.substr(2);
        poly = std::stoull(h, nullptr, 16);
    } else {
        poly = default_poly(n);
    }
    return field_new(n, poly);
}

}  // namespace bfwalsh
