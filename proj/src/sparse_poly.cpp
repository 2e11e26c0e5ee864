#include "invforge/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace invforge {

namespace {

std::vector<Term> merge_terms(const FieldSpec& f, std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    std::vector<Term> out;
    out.reserve(raw.size());
    for (const Term& t : raw) {
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff = f.add_raw(out.back().coeff, t.coeff);
        } else {
            out.push_back(t);
        }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    return out;
}

class Parser {
public:
    Parser(std::string_view text, const FieldSpec& field) : text_(text), field_(field) {}

    std::vector<Term> run() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) throw SyntaxError(pos_, "empty polynomial");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        }
        terms.push_back(signed_term(negate));
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') throw SyntaxError(pos_, std::string("unexpected '") + op + "'");
            ++pos_;
            terms.push_back(signed_term(op == '-'));
        }
        return terms;
    }

private:
    Term signed_term(bool negate) {
        Term t = term();
        if (negate) t.coeff = field_.neg_raw(t.coeff);
        return t;
    }

    Term term() {
        skip_ws();
        if (at_end()) throw SyntaxError(pos_, "expected a term");
        std::uint64_t coeff = 1;
        bool has_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            coeff = number();
            has_coeff = true;
            if (coeff >= field_.order()) {
                throw Error(ErrorKind::CoefficientOutOfRange,
                            "coefficient " + std::to_string(coeff) + " at position " +
                                std::to_string(start) + " is not < q = " +
                                std::to_string(field_.order()));
            }
            skip_ws();
        }
        if (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            if (at_end() || peek() != 'x') throw SyntaxError(pos_, "expected 'x' after '*'");
        }
        if (at_end() || peek() != 'x') {
            if (!has_coeff) throw SyntaxError(pos_, "expected a coefficient or 'x'");
            return {0, static_cast<std::uint32_t>(coeff)};
        }
        ++pos_;
        std::uint64_t exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw SyntaxError(pos_, "expected exponent after '^'");
            }
            exponent = number();
        }
        return {exponent, static_cast<std::uint32_t>(coeff)};
    }

    std::uint64_t number() {
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                throw SyntaxError(start, "number too large");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    const FieldSpec& field_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly::SparsePoly(FieldRef field) : field_(std::move(field)) {}

SparsePoly SparsePoly::canonicalize(FieldRef field, std::span<const RawTerm> raw) {
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (const RawTerm& t : raw) {
        if (!(t.coeff.field() == *field)) {
            throw Error(ErrorKind::FieldMismatch, "coefficient of x^" + std::to_string(t.exponent) +
                                                      " is not in " + field->describe());
        }
        terms.push_back({t.exponent, t.coeff.index()});
    }
    auto merged = merge_terms(*field, std::move(terms));
    return SparsePoly(std::move(field), std::move(merged));
}

SparsePoly SparsePoly::from_terms(FieldRef field, std::span<const Term> raw) {
    for (const Term& t : raw) {
        if (t.coeff >= field->order()) {
            throw Error(ErrorKind::CoefficientOutOfRange,
                        "coefficient index " + std::to_string(t.coeff) + " >= q");
        }
    }
    auto merged = merge_terms(*field, std::vector<Term>(raw.begin(), raw.end()));
    return SparsePoly(std::move(field), std::move(merged));
}

std::uint64_t SparsePoly::degree() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
    return terms_.front().exponent;
}

std::uint64_t SparsePoly::min_exponent() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial has no terms");
    return terms_.back().exponent;
}

FieldElement SparsePoly::coefficient(std::uint64_t e) const {
    for (const Term& t : terms_) {
        if (t.exponent == e) return field_->element(t.coeff);
    }
    return field_->zero();
}

std::uint32_t evaluate_raw(const SparsePoly& f, std::uint32_t x) noexcept {
    const FieldSpec& field = f.field();
    std::uint32_t sum = 0;
    for (const Term& t : f.terms()) {
        sum = field.add_raw(sum, field.mul_raw(t.coeff, field.pow_raw(x, t.exponent)));
    }
    return sum;
}

std::uint32_t evaluate_raw(const SparsePoly& f, std::uint32_t x, const DlogTable& table) noexcept {
    const FieldSpec& field = f.field();
    const std::uint64_t group = table.group_order();
    std::uint32_t sum = 0;
    if (x == 0) {
        // only a constant term survives (0^0 = 1)
        const auto terms = f.terms();
        return (!terms.empty() && terms.back().exponent == 0) ? terms.back().coeff : 0;
    }
    const std::uint64_t lx = table.log(x);
    for (const Term& t : f.terms()) {
        const std::uint64_t e = (t.exponent % group) * lx % group;
        sum = field.add_raw(sum, table.exp((table.log(t.coeff) + e) % group));
    }
    return sum;
}

FieldElement evaluate(const SparsePoly& f, const FieldElement& x) {
    if (!(x.field() == f.field())) {
        throw Error(ErrorKind::FieldMismatch, "evaluation point is not in " + f.field().describe());
    }
    return f.field().element(evaluate_raw(f, x.index()));
}

FieldElement evaluate(const SparsePoly& f, const FieldElement& x, const DlogTable& table) {
    if (!(x.field() == f.field()) || !(table.field() == f.field())) {
        throw Error(ErrorKind::FieldMismatch, "evaluation point or table is not in " +
                                                  f.field().describe());
    }
    return f.field().element(evaluate_raw(f, x.index(), table));
}

SparsePoly reverse_coefficients(const SparsePoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot reverse the zero polynomial");
    return reverse_coefficients(f, f.degree());
}

SparsePoly reverse_coefficients(const SparsePoly& f, std::uint64_t anchor) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot reverse the zero polynomial");
    if (anchor < f.degree()) {
        throw Error(ErrorKind::InvalidArgument, "reversal anchor " + std::to_string(anchor) +
                                                    " is below the degree " +
                                                    std::to_string(f.degree()));
    }
    std::vector<Term> reversed;
    reversed.reserve(f.size());
    for (const Term& t : f.terms()) reversed.push_back({anchor - t.exponent, t.coeff});
    return SparsePoly::from_terms(f.field_ref(), reversed);
}

SparsePoly parse(std::string_view text, FieldRef owner) {
    auto terms = Parser(text, *owner).run();
    return SparsePoly::from_terms(std::move(owner), terms);
}

std::string format(const SparsePoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const Term& t : f.terms()) {
        if (!out.empty()) out += " + ";
        if (t.coeff != 1 || t.exponent == 0) out += std::to_string(t.coeff);
        if (t.exponent >= 1) out += 'x';
        if (t.exponent >= 2) out += '^' + std::to_string(t.exponent);
    }
    return out;
}

nlohmann::json to_json(const SparsePoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const Term& t : f.terms()) terms.push_back({t.exponent, t.coeff});
    return {{"q", f.field().order()}, {"terms", terms}};
}

SparsePoly poly_from_json(const nlohmann::json& j, FieldRef owner) {
    if (j.at("q").get<std::uint64_t>() != owner->order()) {
        throw Error(ErrorKind::FieldMismatch, "JSON polynomial is over q = " + j.at("q").dump());
    }
    std::vector<Term> terms;
    for (const auto& pair : j.at("terms")) {
        const auto coeff = pair.at(1).get<std::uint64_t>();
        if (coeff >= owner->order()) {
            throw Error(ErrorKind::CoefficientOutOfRange, "coefficient " + std::to_string(coeff));
        }
        terms.push_back({pair.at(0).get<std::uint64_t>(), static_cast<std::uint32_t>(coeff)});
    }
    return SparsePoly::from_terms(std::move(owner), terms);
}

}  // namespace invforge
