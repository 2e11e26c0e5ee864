#include "invforge/constructors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace invforge {

namespace {

struct SignedTerm {
    std::int64_t exponent;
    int sign;
};

struct T8Candidate {
    T8Case which;
    std::array<SignedTerm, 4> terms;  // all carry coefficient sign/2
};

// Listed order of the four congruence cases; the first whose congruence holds
// and whose exponents all lie in [1, q-2] wins.
std::array<T8Candidate, 4> t8_candidates(std::int64_t m, std::int64_t k) {
    return {{
        {T8Case::MinusOne, {{{(2 * k - 2) * m - 1, +1}, {k * m + 1, +1}, {(k - 2) * m - 1, -1}, {1, +1}}}},
        // printed with -x^{2m-1}, which factors as (x^{km}+1)(x - x^{2m-1})/2 and
        // vanishes on half the group; '+' matches the other three cases
        {T8Case::One, {{{(k + 2) * m - 1, -1}, {k * m + 1, +1}, {2 * m - 1, +1}, {1, +1}}}},
        {T8Case::Two, {{{(k + 1) * m - 1, +1}, {k * m + 1, +1}, {m - 1, -1}, {1, +1}}}},
        {T8Case::MinusTwo, {{{(2 * k - 1) * m - 1, -1}, {k * m + 1, +1}, {(k - 1) * m - 1, +1}, {1, +1}}}},
    }};
}

bool congruence_holds(T8Case c, std::uint64_t m, std::uint64_t k) {
    const std::uint64_t r = m % k;
    switch (c) {
        case T8Case::MinusOne: return (r + 1) % k == 0;
        case T8Case::One: return (1 % k) == r;
        case T8Case::Two: return (2 % k) == r;
        case T8Case::MinusTwo: return (r + 2) % k == 0;
    }
    return false;
}

std::array<SignedTerm, 4> t7_shape(std::int64_t m, std::int64_t k, std::int64_t t) {
    return {{{(k + t) * m - 1, +1}, {k * m + 1, -1}, {t * m - 1, +1}, {1, +1}}};
}

bool exponents_in_range(std::span<const SignedTerm> shape, std::uint64_t q) {
    return std::all_of(shape.begin(), shape.end(), [q](const SignedTerm& t) {
        return t.exponent >= 1 && static_cast<std::uint64_t>(t.exponent) <= q - 2;
    });
}

const T8Candidate* select_t8_case(const std::array<T8Candidate, 4>& candidates, std::uint64_t m,
                                  std::uint64_t k, std::uint64_t q) {
    for (const auto& cand : candidates) {
        if (congruence_holds(cand.which, m, k) && exponents_in_range(cand.terms, q)) return &cand;
    }
    return nullptr;
}

void require_odd_characteristic(const FieldSpec& f, Family family) {
    if (f.characteristic() == 2) {
        throw Error(ErrorKind::CharacteristicTwo,
                    std::string(family_name(family)) + " divides by 2 and needs odd characteristic");
    }
}

std::uint64_t quarter_order(const FieldSpec& f, Family family) {
    require_odd_characteristic(f, family);
    if (f.order() % 4 != 1) {
        throw Error(ErrorKind::BadCongruence, std::string(family_name(family)) + " needs q = 1 mod 4, got q = " +
                                                  std::to_string(f.order()));
    }
    return (f.order() - 1) / 4;
}

bool exhaustively_involutive(const SparsePoly& f, std::uint64_t q_limit) {
    const std::uint64_t q = f.field().order();
    if (q > q_limit) {
        throw Error(ErrorKind::LimitExceeded,
                    "q = " + std::to_string(q) + " exceeds limit " + std::to_string(q_limit));
    }
    std::vector<std::uint32_t> image(q);
    for (std::uint64_t x = 0; x < q; ++x) image[x] = evaluate_raw(f, static_cast<std::uint32_t>(x));
    for (std::uint64_t x = 0; x < q; ++x) {
        if (image[image[x]] != x) return false;
    }
    return true;
}

SparsePoly build_t_family(const ConstructionRecipe& r) {
    const FieldSpec& f = *r.field;
    const FieldElement& g = r.generator;
    const std::uint64_t d = r.d;
    const std::uint64_t i = r.i;
    const FieldElement one = f.one();
    const FieldElement two = f.from_integer(2);
    const FieldElement four = f.from_integer(4);
    const FieldElement alpha = r.alpha();
    const FieldElement alpha_sq = alpha * alpha;
    const FieldElement gd = pow(g, d);

    std::vector<RawTerm> terms;
    switch (r.family) {
        case Family::T1: {
            const auto a0 = (alpha_sq + one) / (two * alpha);
            const auto a1 = (gd + one) * (alpha_sq - one) / (four * pow(g, 4 * i + d + 2));
            const auto a2 = gd * a1;
            terms = {{3 * d + 1, a2}, {d + 1, a1}, {1, a0}};
            break;
        }
        case Family::T2: {
            const auto g2 = g * g;
            const auto gd2 = pow(g, d + 2);
            const auto low = four * pow(g, 4 * i + 3);
            const auto high = four * pow(g, 4 * i + d + 3);
            const auto a0 = (g2 + one) * (alpha_sq + one) / low;
            const auto a1 = (gd2 + one) * (alpha_sq - one) / high;
            const auto a2 = (g2 - one) * (alpha_sq + one) / low;
            const auto a3 = (gd2 - one) * (alpha_sq - one) / high;
            terms = {{3 * d + 1, a3}, {2 * d + 1, a2}, {d + 1, a1}, {1, a0}};
            break;
        }
        case Family::T3A: {
            const auto denom = four * alpha;
            const auto a0 = (alpha + one) * (alpha + one) / denom;
            const auto a1 = (alpha_sq - one) / denom;
            const auto a2 = (alpha - one) * (alpha - one) / denom;
            terms = {{3 * d + 1, a1}, {2 * d + 1, a2}, {d + 1, a1}, {1, a0}};
            break;
        }
        case Family::T3B: {
            const auto a0 = (alpha + one) * (alpha + one) / (four * alpha);
            const auto a1 = (alpha_sq - one) / (four * pow(g, d + 4 * i + 2));
            const auto a2 = one - a0;
            terms = {{3 * d + 1, -a1}, {2 * d + 1, a2}, {d + 1, a1}, {1, a0}};
            break;
        }
        default: throw std::logic_error("build_t_family: not an indexed family");
    }
    return SparsePoly::canonicalize(r.field, terms);
}

SparsePoly build_h_family(const ConstructionRecipe& r) {
    const FieldSpec& f = *r.field;
    const std::uint64_t d = r.d;
    const std::uint64_t m = r.m;
    const FieldElement coeff = f.from_integer(static_cast<std::int64_t>(m % f.characteristic()));
    const FieldElement minus = -coeff;
    const bool first = r.family == Family::H1;

    std::vector<RawTerm> terms;
    terms.reserve(2 * d + 1);
    for (std::uint64_t i = 0; i < d; ++i) {
        terms.push_back({i * m + 1, first ? coeff : minus});
        terms.push_back({(d - i) * m - 1, first ? minus : coeff});
    }
    terms.push_back(first ? RawTerm{1, f.one()} : RawTerm{d * m - 1, f.one()});
    return SparsePoly::canonicalize(r.field, terms);
}

SparsePoly build_quadrinomial(const ConstructionRecipe& r, std::span<const SignedTerm> shape) {
    const FieldSpec& f = *r.field;
    const FieldElement half = inv(f.from_integer(2));
    std::vector<RawTerm> terms;
    for (const auto& t : shape) {
        terms.push_back({static_cast<std::uint64_t>(t.exponent), t.sign > 0 ? half : -half});
    }
    return SparsePoly::canonicalize(r.field, terms);
}

}  // namespace

std::string_view family_name(Family f) noexcept {
    switch (f) {
        case Family::T1: return "t1";
        case Family::T2: return "t2";
        case Family::T3A: return "t3a";
        case Family::T3B: return "t3b";
        case Family::H1: return "h1";
        case Family::H2: return "h2";
        case Family::T7: return "t7";
        case Family::T8: return "t8";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    for (Family f : kAllFamilies) {
        if (family_name(f) == name) return f;
    }
    return std::nullopt;
}

bool uses_index(Family f) noexcept {
    return f == Family::T1 || f == Family::T2 || f == Family::T3A || f == Family::T3B;
}

bool uses_divisor(Family f) noexcept { return f == Family::H1 || f == Family::H2; }

bool uses_split(Family f) noexcept { return f == Family::T7 || f == Family::T8; }

std::string_view t8_case_name(T8Case c) noexcept {
    switch (c) {
        case T8Case::MinusOne: return "-1";
        case T8Case::One: return "1";
        case T8Case::Two: return "2";
        case T8Case::MinusTwo: return "-2";
    }
    return "?";
}

FieldElement ConstructionRecipe::alpha() const { return pow(generator, 4 * i + 2); }

T7Params compute_t7_params(const FieldSpec& field, std::uint64_t m, std::uint64_t n) {
    if (m == 0 || n == 0 || m * n != field.order() - 1) {
        throw Error(ErrorKind::BadFactorization, "n*m = " + std::to_string(n) + "*" + std::to_string(m) +
                                                     " must equal q-1 = " +
                                                     std::to_string(field.order() - 1));
    }
    if (n % 2 != 0) throw Error(ErrorKind::OddCofactor, "n = " + std::to_string(n) + " must be even");
    if (std::gcd(m, n) != 1) {
        throw Error(ErrorKind::NotCoprime,
                    "gcd(m, n) = " + std::to_string(std::gcd(m, n)) + " must be 1");
    }
    const std::uint64_t k = n / 2;
    if (k == 1) return {1, 1};
    std::uint64_t t = 2 * mod_inverse(m % k, k) % k;
    if (t == 0) t = k;
    return {k, t};
}

ConstructionRecipe make_recipe(Family family, FieldRef field, const RecipeParams& params,
                               std::uint64_t q_limit) {
    const FieldSpec& f = *field;
    const std::uint64_t q = f.order();

    auto pick_generator = [&]() {
        if (!params.generator) return find_smallest_generator(f);
        auto g = f.element(*params.generator);
        if (!is_generator(g)) {
            throw Error(ErrorKind::NotAGenerator,
                        "element " + std::to_string(*params.generator) + " does not generate F_q^*");
        }
        return g;
    };

    if (uses_index(family)) {
        const std::uint64_t d = quarter_order(f, family);
        auto g = pick_generator();
        if (params.i >= d) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "i = " + std::to_string(params.i) + " must be < d = " + std::to_string(d));
        }
        ConstructionRecipe r{family, field, g};
        r.i = params.i;
        r.d = d;
        return r;
    }

    if (uses_divisor(family)) {
        const std::uint64_t d = params.d;
        if (d == 0 || (q - 1) % d != 0) {
            throw Error(ErrorKind::NotADivisor,
                        "d = " + std::to_string(d) + " does not divide q-1 = " + std::to_string(q - 1));
        }
        if (d == q - 1) {
            throw Error(ErrorKind::DegenerateSubgroup,
                        "d = q-1 gives m = 1, whose expansion has a constant term and moves 0");
        }
        ConstructionRecipe r{family, field, pick_generator()};
        r.d = d;
        r.m = (q - 1) / d;
        return r;
    }

    // t7 / t8
    require_odd_characteristic(f, family);
    const auto [k, t] = compute_t7_params(f, params.m, params.n);
    ConstructionRecipe r{family, field, pick_generator()};
    r.m = params.m;
    r.n = params.n;
    r.k = k;
    if (family == Family::T7) {
        r.t = t;
    } else {
        const auto candidates = t8_candidates(static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(k));
        const T8Candidate* chosen = select_t8_case(candidates, r.m, k, q);
        if (!chosen) {
            throw Error(ErrorKind::NoMatchingCase, "m mod k = " + std::to_string(r.m % k) + " (k = " +
                                                       std::to_string(k) +
                                                       ") matches no usable case");
        }
        r.t8_case = chosen->which;
    }
    if (k == 1) {
        // the congruences degenerate modulo 1; accept only if the result really is an involution
        const bool fits = family == Family::T8 ||
                          exponents_in_range(t7_shape(static_cast<std::int64_t>(r.m), 1, 1), q);
        if (!fits || !exhaustively_involutive(construct(r), q_limit)) {
            throw Error(ErrorKind::UnverifiedParams,
                        std::string(family_name(family)) + " with k = 1 over q = " + std::to_string(q) +
                            " is not an involution");
        }
    }
    return r;
}

SparsePoly construct(const ConstructionRecipe& r) {
    SparsePoly result(r.field);
    switch (r.family) {
        case Family::T1:
        case Family::T2:
        case Family::T3A:
        case Family::T3B: result = build_t_family(r); break;
        case Family::H1:
        case Family::H2: result = build_h_family(r); break;
        case Family::T7: {
            const auto shape = t7_shape(static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(r.k),
                                        static_cast<std::int64_t>(r.t));
            result = build_quadrinomial(r, shape);
            break;
        }
        case Family::T8: {
            const auto candidates = t8_candidates(static_cast<std::int64_t>(r.m), static_cast<std::int64_t>(r.k));
            for (const auto& cand : candidates) {
                if (r.t8_case && cand.which == *r.t8_case) result = build_quadrinomial(r, cand.terms);
            }
            break;
        }
    }
    if (!result.is_zero() && result.degree() > r.field->order() - 2) {
        throw std::logic_error("constructed exponent exceeds q-2");
    }
    return result;
}

nlohmann::ordered_json params_to_json(const ConstructionRecipe& r) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    if (uses_index(r.family)) {
        j["i"] = r.i;
        j["d"] = r.d;
        j["alpha"] = r.alpha().index();
    } else if (uses_divisor(r.family)) {
        j["d"] = r.d;
        j["m"] = r.m;
    } else {
        j["m"] = r.m;
        j["n"] = r.n;
        j["k"] = r.k;
        if (r.family == Family::T7) j["t"] = r.t;
        if (r.t8_case) j["case"] = t8_case_name(*r.t8_case);
    }
    return j;
}

nlohmann::ordered_json recipe_to_json(const ConstructionRecipe& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["q"] = r.field->order();
    j["p"] = r.field->characteristic();
    j["ext_deg"] = r.field->ext_deg();
    if (!r.field->is_prime_field()) j["modulus"] = r.field->modulus();
    j["g"] = r.generator.index();
    j["params"] = params_to_json(r);
    return j;
}

SparsePoly construct_t1(FieldRef field, const FieldElement& g, std::uint64_t i) {
    return construct(make_recipe(Family::T1, std::move(field), {.generator = g.index(), .i = i}));
}

SparsePoly construct_t2(FieldRef field, const FieldElement& g, std::uint64_t i) {
    return construct(make_recipe(Family::T2, std::move(field), {.generator = g.index(), .i = i}));
}

SparsePoly construct_t3(FieldRef field, const FieldElement& g, std::uint64_t i, T3Variant variant) {
    const Family family = variant == T3Variant::A ? Family::T3A : Family::T3B;
    return construct(make_recipe(family, std::move(field), {.generator = g.index(), .i = i}));
}

SparsePoly construct_h1(FieldRef field, std::uint64_t d) {
    return construct(make_recipe(Family::H1, std::move(field), {.d = d}));
}

SparsePoly construct_h2(FieldRef field, std::uint64_t d) {
    return construct(make_recipe(Family::H2, std::move(field), {.d = d}));
}

SparsePoly construct_t7(FieldRef field, std::uint64_t m, std::uint64_t n) {
    return construct(make_recipe(Family::T7, std::move(field), {.m = m, .n = n}));
}

SparsePoly construct_t8(FieldRef field, std::uint64_t m, std::uint64_t n) {
    return construct(make_recipe(Family::T8, std::move(field), {.m = m, .n = n}));
}

}  // namespace invforge
