#include "bfwalsh/constructions.hpp"

#include <array>
#include <numeric>

#include <json.hpp>

namespace bfwalsh {

namespace {

void check_triple(FieldElement u, FieldElement v, FieldElement r) {
    if (u == 0 || v == 0 || r == 0) throw ConstructionError("ZeroParameter");
    if (u == v || v == r || u == r) throw ConstructionError("InvalidTriple: not pairwise distinct");
    if ((u ^ v ^ r) == 0) throw ConstructionError("InvalidTriple: u+v+r = 0");
}

void check_pair_triple(Pair u, Pair v, Pair r) {
    if (u.zero() || v.zero() || r.zero()) throw ConstructionError("ZeroParameter");
    if (u == v || v == r || u == r) throw ConstructionError("InvalidTriple: not pairwise distinct");
    if ((u ^ v ^ r).zero()) throw ConstructionError("InvalidTriple: u+v+r = 0");
}

BooleanFunction linear_fn(const FieldSpec& spec, FieldElement c) {
    return from_trace_monomial(spec, spec.n(), c, 1);
}

bool tuple_in(const ConditionTriple& c,
              std::initializer_list<std::array<int, 3>> list) {
    for (auto& t : list)
        if (c.t1 == t[0] && c.t2 == t[1] && c.t3 == t[2]) return true;
    return false;
}

// The two five-valued distribution tables shared by the Kasami, Gold and
// linearized-MM triple constructions (n = 2m).
Distribution five_valued_table_a(int n) {
    const int m = n / 2;
    Distribution d;
    // zero count printed as 2^n - 2^{n-1} - 2^{n-3}, i.e. 3*2^{n-3}
    d[0] = (1u << n) - (1u << (n - 1)) - (1u << (n - 3));
    d[std::int32_t{1} << m] = (1u << (n - 2)) + (1u << (m - 1));
    d[-(std::int32_t{1} << m)] = (1u << (n - 2)) - (1u << (m - 1));
    d[std::int32_t{1} << (m + 1)] = 1u << (n - 4);
    d[-(std::int32_t{1} << (m + 1))] = 1u << (n - 4);
    return d;
}

Distribution five_valued_table_b(int n) {
    const int m = n / 2;
    Distribution d;
    d[0] = (1u << n) - (1u << (n - 1)) - (1u << (n - 3));
    d[std::int32_t{1} << m] = 1u << (n - 2);
    d[-(std::int32_t{1} << m)] = 1u << (n - 2);
    d[std::int32_t{1} << (m + 1)] = (1u << (n - 4)) + (1u << (m - 2));
    d[-(std::int32_t{1} << (m + 1))] = (1u << (n - 4)) - (1u << (m - 2));
    return d;
}

std::pair<SpectrumTag, std::optional<Distribution>> predict_from_triple(
    const ConditionTriple& c, int n) {
    if (c.all_zero()) return {SpectrumTag::Bent, std::nullopt};
    if (tuple_in(c, {{{0, 0, 1}}, {{1, 0, 0}}, {{0, 1, 0}}, {{1, 1, 1}}}))
        return {SpectrumTag::FiveValued, five_valued_table_a(n)};
    // remaining tuples: (1,1,0), (1,0,1), (0,1,1)
    return {SpectrumTag::FiveValued, five_valued_table_b(n)};
}

void measure_into(ConstructionReport& rep, const BooleanFunction& f) {
    WalshSpectrum s = fwht(f);
    rep.measured_class = classify(s).tag;
    rep.measured_distribution = s.distribution();
    rep.degree = algebraic_degree(f);
    rep.match = rep.predicted_class == rep.measured_class &&
                (!rep.predicted_distribution ||
                 *rep.predicted_distribution == rep.measured_distribution);
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t mod) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t, new_t);
        new_t -= q * t;
        std::swap(r, new_r);
        new_r -= q * r;
    }
    if (r != 1) throw ConstructionError("NoDInverse: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(mod);
    return static_cast<std::uint64_t>(t);
}

std::string ConstructionReport::to_json() const {
    nlohmann::json j;
    j["construction"] = construction;
    j["params"] = params;
    if (conditions)
        j["conditions"] = {conditions->t1, conditions->t2, conditions->t3};
    nlohmann::json pred;
    pred["class"] = to_string(predicted_class);
    if (predicted_distribution) {
        nlohmann::json d;
        for (auto& [v, c] : *predicted_distribution) d[std::to_string(v)] = c;
        pred["distribution"] = d;
    }
    j["predicted"] = pred;
    nlohmann::json meas;
    meas["class"] = to_string(measured_class);
    nlohmann::json md;
    for (auto& [v, c] : measured_distribution) md[std::to_string(v)] = c;
    meas["distribution"] = md;
    j["measured"] = meas;
    j["match"] = match;
    j["degree"] = degree;
    return j.dump();
}

BooleanFunction triple_product_combine(const BooleanFunction& g, FieldElement u, FieldElement v,
                               FieldElement r) {
    if (u == 0 || v == 0 || r == 0) throw ConstructionError("ZeroParameter");
    const FieldSpec& spec = *g.field();
    BooleanFunction f(g.field(), g.n_vars());
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        int prod = spec.trace_bit(spec.mul(u, x)) & spec.trace_bit(spec.mul(v, x)) &
                   spec.trace_bit(spec.mul(r, x));
        f.set(x, g[x] ^ prod);
    }
    return f;
}

std::int32_t triple_product_walsh(const FieldSpec& spec, const WalshSpectrum& g,
                                    FieldElement u, FieldElement v, FieldElement r,
                                    FieldElement a) {
    auto w = [&](FieldElement idx) { return static_cast<std::int64_t>(g.values[idx]); };
    std::int64_t num;
    std::int64_t den;
    if (r == v) {
        num = w(a) + w(a ^ u) + w(a ^ v) - w(a ^ u ^ v);
        den = 2;
    } else {
        num = 3 * w(a) + w(a ^ v) + w(a ^ u) - w(a ^ u ^ v) + w(a ^ r) - w(a ^ r ^ v) -
              w(a ^ r ^ u) + w(a ^ r ^ u ^ v);
        den = 4;
    }
    if (num % den != 0) throw ConstructionError("NonIntegralResult");
    return static_cast<std::int32_t>(num / den);
}

BooleanFunction kasami(const FieldSpec& spec, int m, FieldElement lambda) {
    if (spec.n() != 2 * m) throw ConstructionError("BadFieldDegree: n must equal 2m");
    if (lambda == 0 || !spec.in_subfield(m, lambda))
        throw ConstructionError("LambdaNotInSubfield");
    return from_trace_monomial(spec, m, lambda, (std::uint64_t{1} << m) + 1);
}

BooleanFunction gold(const FieldSpec& spec, int k, FieldElement lambda) {
    if (spec.n() != 4 * k) throw ConstructionError("BadFieldDegree: n must equal 4k");
    return from_trace_monomial(spec, spec.n(), lambda, (std::uint64_t{1} << k) + 1);
}

ConditionTriple kasami_triple_conditions(const FieldSpec& spec, int m, FieldElement lambda,
                                FieldElement u, FieldElement v, FieldElement r) {
    if (lambda == 0 || !spec.in_subfield(m, lambda))
        throw ConstructionError("LambdaNotInSubfield");
    check_triple(u, v, r);
    FieldElement li = spec.inv(lambda);
    const std::uint64_t q = std::uint64_t{1} << m;
    auto bit = [&](FieldElement x, FieldElement y) {
        return spec.trace_bit(spec.mul(li, spec.mul(spec.pow(x, q), y)));
    };
    return {bit(r, v), bit(r, u), bit(u, v)};
}

std::pair<SpectrumTag, std::optional<Distribution>> kasami_triple_predict(const ConditionTriple& c,
                                                                 int n) {
    return predict_from_triple(c, n);
}

ConstructionReport kasami_triple_construct(const FieldSpec& spec, int m, FieldElement lambda,
                                  FieldElement u, FieldElement v, FieldElement r) {
    ConstructionReport rep;
    rep.construction = "kasami-triple";
    rep.params = {{"lambda", spec.format_element(lambda)},
                  {"u", spec.format_element(u)},
                  {"v", spec.format_element(v)},
                  {"r", spec.format_element(r)},
                  {"m", std::to_string(m)}};
    rep.conditions = kasami_triple_conditions(spec, m, lambda, u, v, r);
    auto [tag, dist] = kasami_triple_predict(*rep.conditions, spec.n());
    rep.predicted_class = tag;
    rep.predicted_distribution = std::move(dist);
    BooleanFunction f = triple_product_combine(kasami(spec, m, lambda), u, v, r);
    measure_into(rep, f);
    return rep;
}

DoublePrediction kasami_double_predict(const FieldSpec& spec, int m, FieldElement lambda,
                               FieldElement u, FieldElement v) {
    if (lambda == 0 || !spec.in_subfield(m, lambda))
        throw ConstructionError("LambdaNotInSubfield");
    if (u == 0 || v == 0 || u == v) throw ConstructionError("InvalidParams");
    FieldElement li = spec.inv(lambda);
    const std::uint64_t q = std::uint64_t{1} << m;
    int cond = spec.trace_bit(spec.mul(li, spec.mul(spec.pow(u, q), v)));
    DoublePrediction p;
    p.tag = cond ? SpectrumTag::SemiBent : SpectrumTag::Bent;
    if (cond) {
        int bu = spec.subfield_trace_bit(m, spec.mul(li, spec.pow(u, q + 1)));
        int bv = spec.subfield_trace_bit(m, spec.mul(li, spec.pow(v, q + 1)));
        p.balanced = bu == 1 || bv == 1;
    }
    return p;
}

ConstructionReport kasami_double_construct(const FieldSpec& spec, int m, FieldElement lambda,
                                  FieldElement u, FieldElement v) {
    ConstructionReport rep;
    rep.construction = "kasami-double";
    rep.params = {{"lambda", spec.format_element(lambda)},
                  {"u", spec.format_element(u)},
                  {"v", spec.format_element(v)},
                  {"m", std::to_string(m)}};
    rep.predicted_class = kasami_double_predict(spec, m, lambda, u, v).tag;
    BooleanFunction f = triple_product_combine(kasami(spec, m, lambda), u, v, v);
    measure_into(rep, f);
    return rep;
}

bool gold_lambda_valid(const FieldSpec& spec, int k, FieldElement lambda) {
    if (spec.n() != 4 * k || k < 2) throw ConstructionError("BadFieldDegree: n must equal 4k, k >= 2");
    if (lambda == 0) return false;
    return (lambda ^ spec.pow(lambda, std::uint64_t{1} << (3 * k))) == 1;
}

bool gold_map_is_permutation(const FieldSpec& spec, int k, FieldElement lambda) {
    if (spec.n() != 4 * k) throw ConstructionError("BadFieldDegree: n must equal 4k");
    const FieldElement lk = spec.pow(lambda, std::uint64_t{1} << k);
    std::vector<std::uint8_t> seen(spec.order(), 0);
    for (std::uint32_t x = 0; x < spec.order(); ++x) {
        FieldElement y = spec.mul(lambda, x) ^ spec.mul(lk, spec.pow(x, std::uint64_t{1} << (2 * k)));
        if (seen[y]) return false;
        seen[y] = 1;
    }
    return true;
}

ConditionTriple gold_triple_conditions(const FieldSpec& spec, int k, FieldElement lambda,
                                FieldElement u, FieldElement v, FieldElement r) {
    check_triple(u, v, r);
    const std::uint64_t q = std::uint64_t{1} << k;
    auto bit = [&](FieldElement x, FieldElement y) {
        FieldElement arg = spec.mul(spec.pow(x, q), y) ^ spec.mul(x, spec.pow(y, q));
        return spec.trace_bit(spec.mul(lambda, arg));
    };
    return {bit(r, v), bit(r, u), bit(u, v)};
}

ConstructionReport gold_triple_construct(const FieldSpec& spec, int k,
                                              FieldElement lambda, FieldElement u,
                                              FieldElement v, FieldElement r) {
    if (!gold_lambda_valid(spec, k, lambda)) throw ConstructionError("InvalidLambda");
    ConstructionReport rep;
    rep.construction = "gold-triple";
    rep.params = {{"lambda", spec.format_element(lambda)},
                  {"u", spec.format_element(u)},
                  {"v", spec.format_element(v)},
                  {"r", spec.format_element(r)},
                  {"k", std::to_string(k)}};
    rep.conditions = gold_triple_conditions(spec, k, lambda, u, v, r);
    auto [tag, dist] = predict_from_triple(*rep.conditions, spec.n());
    rep.predicted_class = tag;
    rep.predicted_distribution = std::move(dist);
    BooleanFunction f = triple_product_combine(gold(spec, k, lambda), u, v, r);
    measure_into(rep, f);
    return rep;
}

DoublePrediction gold_double_predict(const FieldSpec& spec, int k, FieldElement lambda,
                              FieldElement u, FieldElement v) {
    if (!gold_lambda_valid(spec, k, lambda)) throw ConstructionError("InvalidLambda");
    if (u == 0 || v == 0 || u == v) throw ConstructionError("InvalidParams");
    const std::uint64_t q = std::uint64_t{1} << k;
    FieldElement arg = spec.mul(spec.pow(u, q), v) ^ spec.mul(u, spec.pow(v, q));
    int cond = spec.trace_bit(spec.mul(lambda, arg));
    DoublePrediction p;
    p.tag = cond ? SpectrumTag::SemiBent : SpectrumTag::Bent;
    if (cond) {
        int bu = spec.trace_bit(spec.mul(lambda, spec.pow(u, q + 1)));
        int bv = spec.trace_bit(spec.mul(lambda, spec.pow(v, q + 1)));
        p.balanced = bu == 1 || bv == 1;
    }
    return p;
}

ConstructionReport gold_double_construct(const FieldSpec& spec, int k, FieldElement lambda,
                                  FieldElement u, FieldElement v) {
    ConstructionReport rep;
    rep.construction = "gold-double";
    rep.params = {{"lambda", spec.format_element(lambda)},
                  {"u", spec.format_element(u)},
                  {"v", spec.format_element(v)},
                  {"k", std::to_string(k)}};
    rep.predicted_class = gold_double_predict(spec, k, lambda, u, v).tag;
    BooleanFunction f = triple_product_combine(gold(spec, k, lambda), u, v, v);
    measure_into(rep, f);
    return rep;
}

std::vector<std::uint64_t> niho_exponents(int m, int k) {
    if (std::gcd(k, m) != 1) throw ConstructionError("GcdViolation: gcd(k, m) must be 1");
    std::vector<std::uint64_t> out;
    if (k == 1) return out;
    const std::uint64_t mod = (std::uint64_t{1} << m) + 1;
    const std::uint64_t inv2k = mod_inverse(std::uint64_t{1} << k, mod);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << (k - 1)); ++i) {
        std::uint64_t s = (i * inv2k) % mod;
        out.push_back(((std::uint64_t{1} << m) - 1) * s + 1);
    }
    return out;
}

NihoParams niho_params(const FieldSpec& spec, int m, int k) {
    if (spec.n() != 2 * m) throw ConstructionError("BadFieldDegree: n must equal 2m");
    NihoParams p;
    p.m = m;
    p.k = k;
    p.exponents = niho_exponents(m, k);
    p.dual_exponent = mod_inverse((std::uint64_t{1} << k) - 1, (std::uint64_t{1} << m) - 1);
    const std::uint64_t q = std::uint64_t{1} << m;
    for (std::uint32_t a = 0; a < spec.order(); ++a) {
        if ((a ^ spec.pow(a, q)) == 1) {
            p.alpha = a;
            return p;
        }
    }
    throw ConstructionError("NoAlphaFound");
}

BooleanFunction niho_bent(const FieldSpec& spec, int m, int k) {
    if (spec.n() != 2 * m) throw ConstructionError("BadFieldDegree: n must equal 2m");
    BooleanFunction g =
        from_trace_monomial(spec, m, 1, (std::uint64_t{1} << m) + 1);
    for (std::uint64_t e : niho_exponents(m, k))
        g = xor_fn(g, from_trace_monomial(spec, spec.n(), 1, e));
    return g;
}

int niho_dual_closed_form(const FieldSpec& spec, const NihoParams& p, FieldElement a) {
    const std::uint64_t q = std::uint64_t{1} << p.m;
    FieldElement big_a = 1u ^ a ^ spec.pow(a, q);
    FieldElement root = big_a == 0 ? 0 : spec.pow(big_a, p.dual_exponent);
    FieldElement pre = spec.mul(p.alpha, big_a) ^
                       spec.pow(p.alpha, std::uint64_t{1} << (spec.n() - p.k)) ^
                       spec.pow(a, q);
    FieldElement z = spec.mul(pre, root);
    return spec.subfield_trace_bit(p.m, z);
}

ConstructionReport niho_triple_construct(const FieldSpec& spec, int m, int k, FieldElement u,
                                  FieldElement v, FieldElement r) {
    if (!spec.in_subfield(m, u) || !spec.in_subfield(m, v) || !spec.in_subfield(m, r))
        throw ConstructionError("NotInSubfield");
    check_triple(u, v, r);
    ConstructionReport rep;
    rep.construction = "niho-triple";
    rep.params = {{"u", spec.format_element(u)},
                  {"v", spec.format_element(v)},
                  {"r", spec.format_element(r)},
                  {"m", std::to_string(m)},
                  {"k", std::to_string(k)}};
    rep.predicted_class = SpectrumTag::Bent;
    BooleanFunction f = triple_product_combine(niho_bent(spec, m, k), u, v, r);
    measure_into(rep, f);
    return rep;
}

Permutation Permutation::from_table(std::vector<FieldElement> table) {
    Permutation p;
    p.inv_.assign(table.size(), 0);
    std::vector<std::uint8_t> seen(table.size(), 0);
    for (std::size_t y = 0; y < table.size(); ++y) {
        FieldElement img = table[y];
        if (img >= table.size() || seen[img]) throw ConstructionError("NotAPermutation");
        seen[img] = 1;
        p.inv_[img] = static_cast<FieldElement>(y);
    }
    p.fwd_ = std::move(table);
    return p;
}

Permutation Permutation::frobenius(const FieldSpec& spec, int j) {
    std::vector<FieldElement> t(spec.order());
    for (std::uint32_t y = 0; y < spec.order(); ++y) t[y] = spec.pow(y, std::uint64_t{1} << j);
    return from_table(std::move(t));
}

Permutation Permutation::power(const FieldSpec& spec, std::uint64_t d) {
    std::vector<FieldElement> t(spec.order());
    for (std::uint32_t y = 0; y < spec.order(); ++y) t[y] = y == 0 ? 0 : spec.pow(y, d);
    return from_table(std::move(t));
}

bool Permutation::is_additive() const {
    for (std::size_t a = 0; a < fwd_.size(); ++a)
        for (std::size_t b = a; b < fwd_.size(); ++b)
            if (fwd_[a ^ b] != (fwd_[a] ^ fwd_[b])) return false;
    return true;
}

BooleanFunction linear_form(const FieldSpec& spec_m, Pair u) {
    const std::uint32_t q = spec_m.order();
    BooleanFunction f(&spec_m, 2 * spec_m.n(), true);
    for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t x = 0; x < q; ++x)
            f.set(x + q * y,
                  spec_m.trace_bit(spec_m.mul(u.first, x) ^ spec_m.mul(u.second, y)));
    return f;
}

BooleanFunction mm_construct(const FieldSpec& spec_m, const Permutation& pi,
                             const BooleanFunction& h) {
    if (pi.size() != spec_m.order()) throw ConstructionError("NotAPermutation: size mismatch");
    if (h.size() != spec_m.order()) throw ShapeMismatch("ShapeMismatch: h must live on GF(2^m)");
    const std::uint32_t q = spec_m.order();
    BooleanFunction g(&spec_m, 2 * spec_m.n(), true);
    for (std::uint32_t y = 0; y < q; ++y) {
        FieldElement py = pi(y);
        for (std::uint32_t x = 0; x < q; ++x)
            g.set(x + q * y, spec_m.trace_bit(spec_m.mul(x, py)) ^ h[y]);
    }
    return g;
}

int mm_dual_closed_form(const FieldSpec& spec_m, const Permutation& pi, const BooleanFunction& h,
                 FieldElement a1, FieldElement a2) {
    FieldElement w = pi.inverse(a1);
    return spec_m.trace_bit(spec_m.mul(a2, w)) ^ h[w];
}

ConditionTriple mm_triple_conditions(const FieldSpec& spec_m, const Permutation& pi, Pair u,
                                Pair v, Pair r) {
    if (!pi.is_additive()) throw ConstructionError("NotLinearized");
    check_pair_triple(u, v, r);
    auto bit = [&](Pair a, Pair b) {
        return spec_m.trace_bit(spec_m.mul(a.second, pi.inverse(b.first)) ^
                                spec_m.mul(b.second, pi.inverse(a.first)));
    };
    return {bit(r, v), bit(r, u), bit(u, v)};
}

std::pair<SpectrumTag, std::optional<Distribution>> mm_triple_predict(const ConditionTriple& c,
                                                                 int n) {
    return predict_from_triple(c, n);
}

namespace {

// g(x, y) = Tr(x pi(y)) + Tr(y), the base function of the linearized-MM family.
BooleanFunction mm_base_with_trace(const FieldSpec& spec_m, const Permutation& pi) {
    BooleanFunction h = from_trace_monomial(spec_m, spec_m.n(), 1, 1);
    return mm_construct(spec_m, pi, h);
}

}  // namespace

ConstructionReport mm_triple_construct(const FieldSpec& spec_m, const Permutation& pi, Pair u,
                                  Pair v, Pair r) {
    ConstructionReport rep;
    rep.construction = "mm-linearized-triple";
    rep.params = {{"u1", spec_m.format_element(u.first)},
                  {"u2", spec_m.format_element(u.second)},
                  {"v1", spec_m.format_element(v.first)},
                  {"v2", spec_m.format_element(v.second)},
                  {"r1", spec_m.format_element(r.first)},
                  {"r2", spec_m.format_element(r.second)},
                  {"m", std::to_string(spec_m.n())}};
    rep.conditions = mm_triple_conditions(spec_m, pi, u, v, r);
    auto [tag, dist] = mm_triple_predict(*rep.conditions, 2 * spec_m.n());
    rep.predicted_class = tag;
    rep.predicted_distribution = std::move(dist);
    BooleanFunction f = mm_base_with_trace(spec_m, pi);
    f = xor_fn(f, and_fn(and_fn(linear_form(spec_m, u), linear_form(spec_m, v)),
                         linear_form(spec_m, r)));
    measure_into(rep, f);
    return rep;
}

SpectrumTag mm_double_predict(const FieldSpec& spec_m, const Permutation& pi, Pair u, Pair v) {
    if (!pi.is_additive()) throw ConstructionError("NotLinearized");
    if (u.zero() || v.zero() || u == v) throw ConstructionError("InvalidPair");
    int bit = spec_m.trace_bit(spec_m.mul(u.second, pi.inverse(v.first)) ^
                               spec_m.mul(v.second, pi.inverse(u.first)));
    return bit ? SpectrumTag::SemiBent : SpectrumTag::Bent;
}

ConstructionReport mm_double_construct(const FieldSpec& spec_m, const Permutation& pi, Pair u,
                                  Pair v) {
    ConstructionReport rep;
    rep.construction = "mm-linearized-double";
    rep.params = {{"u1", spec_m.format_element(u.first)},
                  {"u2", spec_m.format_element(u.second)},
                  {"v1", spec_m.format_element(v.first)},
                  {"v2", spec_m.format_element(v.second)},
                  {"m", std::to_string(spec_m.n())}};
    rep.predicted_class = mm_double_predict(spec_m, pi, u, v);
    BooleanFunction f = mm_base_with_trace(spec_m, pi);
    f = xor_fn(f, and_fn(linear_form(spec_m, u), linear_form(spec_m, v)));
    measure_into(rep, f);
    return rep;
}

std::uint64_t mm_power_exponent(int m, int s) {
    if (s <= 0 || m % s != 0 || (m / s) % 2 == 0)
        throw ConstructionError("BadDivisor: need s | m with m/s odd");
    // the inverse is taken mod 2^m - 1, the order of the multiplicative group
    return mod_inverse((std::uint64_t{1} << s) + 1, (std::uint64_t{1} << m) - 1);
}

ConstructionReport mm_power_construct(const FieldSpec& spec_m, int s, Pair u, Pair v) {
    const int m = spec_m.n();
    std::uint64_t d = mm_power_exponent(m, s);
    if (!spec_m.in_subfield(s, u.first) || !spec_m.in_subfield(s, u.second) ||
        !spec_m.in_subfield(s, v.first) || !spec_m.in_subfield(s, v.second))
        throw ConstructionError("NotInSubfieldPair");
    if (u.zero() || v.zero() || u == v) throw ConstructionError("InvalidPair");
    if ((spec_m.mul(u.first, v.second) ^ spec_m.mul(v.first, u.second)) != 0)
        throw ConstructionError("CrossConditionViolated: u1 v2 + v1 u2 != 0");

    ConstructionReport rep;
    rep.construction = "mm-niho-power";
    rep.params = {{"u1", spec_m.format_element(u.first)},
                  {"u2", spec_m.format_element(u.second)},
                  {"v1", spec_m.format_element(v.first)},
                  {"v2", spec_m.format_element(v.second)},
                  {"m", std::to_string(m)},
                  {"s", std::to_string(s)},
                  {"d", std::to_string(d)}};
    int bit = spec_m.trace_bit(spec_m.mul(spec_m.pow(u.first, 2), v.second) ^
                               spec_m.mul(u.second, spec_m.pow(v.first, 2)));
    rep.predicted_class = bit ? SpectrumTag::SemiBent : SpectrumTag::Bent;

    Permutation pi = Permutation::power(spec_m, d);
    BooleanFunction h(&spec_m, m);  // zero function on GF(2^m)
    BooleanFunction f = mm_construct(spec_m, pi, h);
    f = xor_fn(f, and_fn(linear_form(spec_m, u), linear_form(spec_m, v)));
    measure_into(rep, f);
    return rep;
}

}  // namespace bfwalsh
