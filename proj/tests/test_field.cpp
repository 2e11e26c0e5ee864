#include "doctest.h"

#include <random>
#include <vector>

#include "invforge/field.hpp"
#include "invforge/fp_poly.hpp"

using namespace invforge;

namespace {

// Independent product for extension fields: digits -> schoolbook -> long division.
std::uint32_t naive_mul(const FieldSpec& f, std::uint32_t a, std::uint32_t b) {
    const std::uint64_t p = f.characteristic();
    const unsigned n = f.ext_deg();
    std::vector<std::uint64_t> da(n), db(n), prod(2 * n, 0);
    for (unsigned k = 0; k < n; ++k) {
        da[k] = a % p;
        a /= static_cast<std::uint32_t>(p);
        db[k] = b % p;
        b /= static_cast<std::uint32_t>(p);
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    const auto& mod = f.modulus();  // monic, degree n
    for (int top = 2 * static_cast<int>(n) - 2; top >= static_cast<int>(n); --top) {
        const std::uint64_t c = prod[top];
        if (c == 0) continue;
        for (unsigned k = 0; k <= n; ++k) {
            auto& slot = prod[top - n + k];
            slot = (slot + (p - c) * mod[k]) % p;
        }
    }
    std::uint64_t code = 0;
    for (int k = static_cast<int>(n) - 1; k >= 0; --k) code = code * p + prod[k];
    return static_cast<std::uint32_t>(code);
}

std::uint64_t brute_order(const FieldElement& a) {
    std::uint64_t k = 1;
    auto x = a;
    while (!(x == a.field().one())) {
        x = x * a;
        ++k;
    }
    return k;
}

const std::vector<std::uint64_t> kOrders = {2, 3, 5, 41, 1009, 4, 8, 9, 16, 25, 27, 49, 81, 125, 243, 1024};

}  // namespace

TEST_CASE("field construction") {
    auto f41 = make_field(41);
    CHECK(f41->is_prime_field());
    CHECK(f41->order() == 41);
    CHECK(f41->describe() == "F_41");

    auto gf16 = make_field(16);
    CHECK(gf16->characteristic() == 2);
    CHECK(gf16->ext_deg() == 4);
    CHECK(gf16->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(gf16->describe() == "GF(2^4) mod [1,1,0,0,1]");

    CHECK(*make_extension_field(41, 1) == *f41);
    CHECK(*make_extension_field(2, 4, std::vector<std::uint32_t>{1, 1, 0, 0, 1}) == *gf16);
    CHECK_FALSE(*make_extension_field(2, 4, std::vector<std::uint32_t>{1, 0, 0, 1, 1}) == *gf16);
}

TEST_CASE("default modulus is the smallest-encoding monic irreducible") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 8}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        std::uint64_t q = 1;
        for (unsigned k = 0; k < n; ++k) q *= p;
        std::uint64_t expected = 0;
        for (std::uint64_t code = q; code < 2 * q; ++code) {
            if (fp_poly::is_irreducible(fp_poly::decode(code, p), p)) {
                expected = code;
                break;
            }
        }
        CHECK(fp_poly::encode(make_extension_field(p, n)->modulus(), p) == expected);
    }
    CHECK(make_field(9)->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("field construction errors") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind_of([] { make_field(40); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { make_field(1); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { make_prime_field(15); }) == ErrorKind::NotPrime);
    CHECK(kind_of([] { make_extension_field(2, 4, std::vector<std::uint32_t>{1, 0, 1, 0, 1}); }) ==
          ErrorKind::NotIrreducible);
    CHECK(kind_of([] { make_extension_field(2, 4, std::vector<std::uint32_t>{1, 1, 1}); }) ==
          ErrorKind::DegreeMismatch);
    CHECK(kind_of([] { make_extension_field(2, 4, std::vector<std::uint32_t>{1, 2, 0, 0, 1}); }) ==
          ErrorKind::CoefficientOutOfRange);
    CHECK(kind_of([] { make_field(41)->element(41); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("prime field arithmetic matches integers mod p") {
    auto f = make_field(1009);
    for (std::uint32_t a = 0; a < 1009; a += 7) {
        for (std::uint32_t b = 0; b < 1009; b += 13) {
            CHECK(f->add_raw(a, b) == (a + b) % 1009);
            CHECK(f->sub_raw(a, b) == (a + 1009 - b) % 1009);
            CHECK(f->mul_raw(a, b) == a * b % 1009);
        }
    }
    CHECK(f->from_integer(-1).index() == 1008);
    CHECK(f->from_integer(2018).index() == 0);
}

TEST_CASE("extension multiplication matches an independent schoolbook reduction") {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 27u, 49u, 125u, 243u}) {
        auto f = make_field(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) CHECK(f->mul_raw(a, b) == naive_mul(*f, a, b));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t q : kOrders) {
        auto f = make_field(q);
        auto rand_el = [&] { return f->element(rng() % q); };
        for (int trial = 0; trial < 300; ++trial) {
            const auto a = rand_el(), b = rand_el(), c = rand_el();
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + f->zero() == a);
            CHECK(a * f->one() == a);
            CHECK(a + (-a) == f->zero());
            CHECK(a - b + b == a);
            if (!a.is_zero()) {
                CHECK(a * inv(a) == f->one());
                CHECK(b / a * a == b);
            }
            CHECK(pow(a, q) == a);
            // Frobenius is additive
            const auto p = f->characteristic();
            CHECK(pow(a + b, p) == pow(a, p) + pow(b, p));
        }
    }
}

TEST_CASE("pow conventions") {
    auto f = make_field(41);
    CHECK(pow(f->zero(), 0) == f->one());
    CHECK(pow(f->zero(), 5) == f->zero());
    CHECK(pow(f->element(6), 40) == f->one());
    CHECK(pow(f->element(3), 8) == f->one());
}

TEST_CASE("arithmetic errors") {
    auto f = make_field(41);
    auto g = make_field(43);
    CHECK_THROWS_AS(inv(f->zero()), Error);
    try {
        (void)(f->one() / f->zero());
        FAIL("expected DivisionByZero");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    try {
        (void)(f->one() + g->one());
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("generators and orders") {
    auto f41 = make_field(41);
    CHECK(find_smallest_generator(*f41).index() == 6);
    int generators = 0;
    for (std::uint32_t x = 1; x < 41; ++x) {
        const auto a = f41->element(x);
        CHECK(multiplicative_order(a) == brute_order(a));
        if (is_generator(a)) ++generators;
    }
    CHECK(generators == 16);  // phi(40)

    auto gf16 = make_field(16);
    CHECK(find_smallest_generator(*gf16).index() == 2);  // x is primitive for x^4 + x + 1
    for (std::uint64_t q : {2u, 3u, 9u, 27u, 81u, 1024u}) {
        auto f = make_field(q);
        const auto g = find_smallest_generator(*f);
        CHECK(brute_order(g) == q - 1);
        for (std::uint32_t x = 1; x < g.index(); ++x) CHECK(brute_order(f->element(x)) < q - 1);
    }
}

TEST_CASE("dlog table") {
    for (std::uint64_t q : kOrders) {
        auto f = make_field(q);
        const auto g = find_smallest_generator(*f);
        const auto table = dlog_table(g);
        CHECK(table.group_order() == q - 1);
        for (std::uint32_t x = 1; x < q; ++x) {
            CHECK(table.exp(table.log(x)) == x);
            CHECK(f->pow_raw(g.index(), table.log(x)) == x);
        }
        for (std::uint64_t e = 0; e < q - 1; ++e) CHECK(table.log(table.exp(e)) == e);
    }
    auto f = make_field(41);
    CHECK_THROWS_AS(dlog_table(f->element(2)), Error);  // order 20
    CHECK_THROWS_AS(dlog_table(f->zero()), Error);
    try {
        dlog_table(f->element(6), 40);
        FAIL("expected LimitExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LimitExceeded);
    }
}
